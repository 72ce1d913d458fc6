"""Two-sided clique bounds from algebraic connectivity.

For a connected non-complete graph, n/(n - alpha) <= omega <= n+1 - 4/(n*alpha),
and the degree chain alpha <= nu <= delta <= 2e/n holds.  The lower bound is
tight exactly at Turan graphs whose part count divides n.
"""

from algconn import (
    complete,
    cycle,
    degree_chain,
    kite,
    max_clique,
    path,
    sandwich_report,
    star,
    turan,
)

gallery = {
    "paw": kite(4, 3),
    "T_{6,3}": turan(6, 3),
    "T_{7,3}": turan(7, 3),
    "kite(6,3)": kite(6, 3),
    "C_8": cycle(8),
    "P_7": path(7),
    "star K_{1,5}": star(6),
}

print(f"{'graph':<14} {'omega':>5} {'lower':>8} {'upper':>8} {'bracket':>9} {'tight':>6}")
for name, g in gallery.items():
    rep = sandwich_report(g)
    bracket = f"[{rep.lower_ceil},{rep.upper_floor}]"
    tight = "lower" if rep.flags["lower_equality"] else ""
    print(f"{name:<14} {rep.omega:>5} {rep.lower:>8.4f} {rep.upper:>8.4f} {bracket:>9} {tight:>6}")
    assert rep.lower <= rep.omega <= rep.upper + 1e-9

print("\nComplete graphs sidestep the bounds (alpha = n):")
rep = sandwich_report(complete(5))
print("  K_5 report flags:", rep.flags, " omega =", rep.omega)

print("\nDegree chain alpha <= nu <= delta <= 2e/n:")
for name, g in (("T_{6,3}", turan(6, 3)), ("P_4", path(4)), ("star K_{1,4}", star(5))):
    alpha, nu, delta, avg = degree_chain(g)
    print(f"  {name:<13} {alpha:.4f} <= {nu} <= {delta} <= {avg:.4f}")

# The maximum-clique witness is an actual vertex set, certified exact.
w = max_clique(turan(9, 3))
print("\nmax clique of T_{9,3}: omega =", w.omega, "witness =", w.vertices)
