"""Laplacian spectra and algebraic connectivity.

alpha(G) is the second-smallest Laplacian eigenvalue: zero exactly for
disconnected graphs, n for the complete graph, and for the Turan graph it
has the closed form n - ceil(n/r), which this script checks numerically.
"""

import numpy as np

from algconn import (
    algebraic_connectivity,
    complement_alpha_check,
    complete,
    complete_multipartite,
    eig_sym,
    fiedler_vector,
    kite,
    laplacian,
    path,
    turan,
)

print("Full spectrum of the paw (triangle + pendant vertex):")
spec = eig_sym(laplacian(kite(4, 3)))
print("  eigenvalues:", np.round(spec.eigenvalues, 9))
print("  alpha =", round(spec.alpha, 9))

print("\nalpha(T_{n,r}) against n - ceil(n/r):")
for n, r in ((6, 3), (7, 3), (12, 4), (20, 6)):
    alpha = algebraic_connectivity(turan(n, r))
    print(f"  (n={n:>2}, r={r}): alpha = {alpha:.9f}   n - ceil(n/r) = {n - -(n // -r)}")

# Two non-isomorphic graphs sharing the extremal alpha at n=7, r=3:
a1 = algebraic_connectivity(turan(7, 3))
a2 = algebraic_connectivity(complete_multipartite(3, 3, 1))
print(f"\nalpha(T_{{7,3}}) = {a1:.9f}, alpha(K_{{3,3,1}}) = {a2:.9f}  (both extremal)")

# alpha(G) = n - lambda_1(complement(G)) for every graph, because the two
# Laplacians sum to n*I - J.
print("\nComplement identity on a few graphs:")
for name, g in (("P_7", path(7)), ("K_6", complete(6)), ("kite(7,4)", kite(7, 4))):
    direct, via_complement = complement_alpha_check(g)
    print(f"  {name:<10} alpha = {direct:.9f}   n - lambda_1(complement) = {via_complement:.9f}")

# The Fiedler vector of a path is monotone along the path; its sign split
# gives the classic two-piece partition.
fv = fiedler_vector(path(8))
print("\nFiedler vector of P_8 (alpha = %.6f):" % fv.alpha)
print(" ", np.round(fv.values, 4))
