"""Maximum clique tests against a subset brute-force oracle."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algconn.cliques import (
    contains_complete_multipartite,
    is_kr_free,
    max_clique,
)
from algconn.graphs import (
    Graph,
    complete,
    complete_multipartite,
    cycle,
    decode,
    empty,
    join,
    kite,
    relabel,
    turan,
)


def omega_brute(g):
    """Independent oracle: largest subset with all pairs adjacent."""
    for size in range(g.n, 1, -1):
        for sub in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                return size
    return 1


def contains_brute(g, parts):
    """Independent oracle for multipartite containment."""
    def rec(idx, chosen, free):
        if idx == len(parts):
            return True
        for combo in combinations(free, parts[idx]):
            if all(g.has_edge(u, v) for group in chosen for u in group for v in combo):
                rest = [v for v in free if v not in combo]
                if rec(idx + 1, chosen + [combo], rest):
                    return True
        return False

    return rec(0, [], list(range(g.n)))


def petersen():
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


@st.composite
def small_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return decode(n, code)


class TestMaxClique:
    def test_complete(self):
        for n in (1, 4, 9):
            w = max_clique(complete(n))
            assert w.omega == n
            assert w.vertices == tuple(range(n))

    def test_turan(self):
        for n in range(2, 10):
            for r in range(2, n + 1):
                assert max_clique(turan(n, r)).omega == r

    def test_petersen(self):
        g = petersen()
        assert max_clique(g).omega == 2
        assert omega_brute(g) == 2

    def test_theta_kite_clique_number(self):
        from algconn.graphs import theta_kite

        for r in (3, 4, 5):
            for k in (1, 2, 4):
                assert max_clique(theta_kite(r, k)).omega == r, (r, k)

    def test_witness_is_a_clique(self):
        w = max_clique(kite(8, 4))
        assert len(w.vertices) == w.omega == 4
        g = kite(8, 4)
        assert all(g.has_edge(u, v) for u, v in combinations(w.vertices, 2))

    def test_brute_force_exhaustive_small(self):
        for n in range(1, 6):
            for code in range(1 << (n * (n - 1) // 2)):
                g = decode(n, code)
                assert max_clique(g).omega == omega_brute(g), (n, code)

    def test_deterministic(self):
        g = turan(7, 3)
        assert max_clique(g) == max_clique(g)

    @settings(max_examples=80, deadline=None)
    @given(small_graphs(min_n=2), st.randoms(use_true_random=False))
    def test_relabel_invariance(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert max_clique(g).omega == max_clique(relabel(g, perm)).omega

    @settings(max_examples=50, deadline=None)
    @given(small_graphs(max_n=5), small_graphs(max_n=5))
    def test_join_additivity(self, a, b):
        assert max_clique(join(a, b)).omega == max_clique(a).omega + max_clique(b).omega


class TestKrFree:
    def test_examples(self):
        assert is_kr_free(turan(9, 3), 4)
        assert not is_kr_free(kite(9, 4), 4)
        assert is_kr_free(empty(5), 2)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            is_kr_free(empty(3), 0)

    @settings(max_examples=80, deadline=None)
    @given(small_graphs(), st.integers(1, 8))
    def test_matches_omega(self, g, r):
        assert is_kr_free(g, r) == (max_clique(g).omega <= r - 1)


class TestMultipartiteContainment:
    def test_turan_contains_itself(self):
        assert contains_complete_multipartite(turan(8, 4), [2, 2, 2, 2])

    def test_five_cycle_is_triangle_free(self):
        assert not contains_complete_multipartite(cycle(5), [1, 1, 1])

    def test_unbalanced_multipartite(self):
        # K_{3,3,1} cannot host K_{2,2,2}: six embedded vertices may carry
        # non-edges only inside their own pairs (a matching), but any six of
        # the seven vertices take >= 3 from one independent part, a non-edge
        # triangle. One part smaller and it fits.
        g = complete_multipartite(3, 3, 1)
        assert not contains_complete_multipartite(g, [2, 2, 2])
        assert contains_brute(g, [2, 2, 2]) is False
        assert contains_complete_multipartite(g, [2, 2, 1])

    def test_oversize_request(self):
        with pytest.raises(ValueError):
            contains_complete_multipartite(empty(3), [2, 2])

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(min_n=4, max_n=7), st.sampled_from([[1, 1], [2, 1], [2, 2], [1, 1, 1], [2, 1, 1]]))
    def test_matches_brute_force(self, g, parts):
        assert contains_complete_multipartite(g, parts) == contains_brute(g, sorted(parts, reverse=True))
