"""Tour of the graph families: construction, graph6 text, basic invariants.

Every graph in the package is a small immutable bit-packed structure; this
script builds each named family and prints its vital signs.
"""

from algconn import (
    complement,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty,
    is_connected,
    is_isomorphic,
    join,
    kite,
    path,
    tailed_clique,
    theta_kite,
    turan,
    turan_edge_count,
    vertex_connectivity,
    write_graph6,
)

gallery = {
    "K_5": complete(5),
    "P_6": path(6),
    "C_6": cycle(6),
    "T_{7,3}": turan(7, 3),
    "K_{3,3,1}": complete_multipartite(3, 3, 1),
    "kite(6,3)": kite(6, 3),
    "bull = tailed_clique(3,1,1)": tailed_clique(3, 1, 1),
    "theta_kite(3,2)": theta_kite(3, 2),
}

print(f"{'graph':<28} {'n':>3} {'edges':>5} {'conn':>5} {'nu':>3}  graph6")
for name, g in gallery.items():
    print(
        f"{name:<28} {g.n:>3} {g.edge_count:>5} {str(is_connected(g)):>5} "
        f"{vertex_connectivity(g):>3}  {write_graph6(g)}"
    )

# The Turan graph maximizes edges among K_{r+1}-free graphs; its edge count
# has a closed form that the constructor must reproduce exactly.
print("\nTuran edge counts (n=10):")
for r in range(1, 11):
    built = turan(10, r).edge_count
    formula = turan_edge_count(10, r)
    print(f"  r={r:>2}: built={built:>2} formula={formula:>2}")
    assert built == formula

# Joins and complements are dual: the complement of a join is the disjoint
# union of the complements.
a, b = path(3), cycle(4)
lhs = complement(join(a, b))
rhs = disjoint_union(complement(a), complement(b))
print("\ncomplement(join(P_3, C_4)) == complement(P_3) + complement(C_4):", lhs == rhs)

# T_{7,3} is the same graph as a triple join of empty parts.
rebuilt = join(empty(3), join(empty(2), empty(2)))
print("T_{7,3} isomorphic to empty(3) v empty(2) v empty(2):", is_isomorphic(turan(7, 3), rebuilt))
