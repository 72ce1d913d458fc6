"""Pendant-path rewrites and alpha monotonicity.

A clique with two tails interpolates between the balanced split and the
kite; switching hub attachments moves along that family and alpha strictly
decreases toward the kite, which is why the kite is the alpha-minimizer at
fixed clique number.
"""

from algconn import (
    TailedCliqueSpec,
    algebraic_connectivity,
    fiedler_sign_report,
    is_isomorphic,
    kite,
    kite_minimality_chain,
    switch_clique_attachment,
    tailed_clique,
    theta_vs_kite,
)

r, n = 3, 10
print(f"alpha over all two-tail splits of K_{r} with k + l = {n - r}:")
for k, l, alpha in kite_minimality_chain(r, n):
    print(f"  (k={k}, l={l}): alpha = {alpha:.9f}")
print(f"  kite({n},{r}):  alpha = {algebraic_connectivity(kite(n, r)):.9f}  (strictly below all)")

print("\nSwitching hub attachments maps the family onto itself:")
grow_first, grow_second = switch_clique_attachment(TailedCliqueSpec(4, 2, 2))
print("  (4;2,2) ->", "iso to (4;3,1):", is_isomorphic(grow_first, tailed_clique(4, 3, 1)))
print("  (4;2,2) ->", "iso to (4;1,3):", is_isomorphic(grow_second, tailed_clique(4, 1, 3)))

print("\nFiedler sign structure on tailed cliques (simple alpha):")
for spec in (TailedCliqueSpec(3, 2, 2), TailedCliqueSpec(4, 3, 1), TailedCliqueSpec(5, 4, 2)):
    rep = fiedler_sign_report(spec)
    if rep.skipped:
        print(f"  (r={spec.r}, k={spec.k}, l={spec.l}): skipped (alpha multiplicity {rep.multiplicity})")
    else:
        print(
            f"  (r={spec.r}, k={spec.k}, l={spec.l}): hub spread {rep.hub_spread:.2e}, "
            f"tail-end product {rep.end_product:+.6f}, outward-monotone {rep.monotone_ok}"
        )

print("\nAnchoring the path to two clique vertices beats the kite:")
for rr, k in ((3, 1), (3, 4), (4, 3), (5, 5)):
    a_theta, a_kite = theta_vs_kite(rr, k)
    print(f"  r={rr}, k={k}: theta {a_theta:.6f} > kite {a_kite:.6f}")
