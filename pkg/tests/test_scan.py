"""Scan-module tests: enumeration, certificates, characterizations, trends."""

import json
from fractions import Fraction

import numpy as np
import pytest

from algconn.graph6 import parse_graph6
from algconn.graphs import (
    complement,
    complete_multipartite,
    connected_components,
    decode,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    join,
    kite,
    path,
    turan,
)
from algconn.scan import (
    build_graph_table,
    check_join_characterization,
    enumerate_graphs,
    erdos_stone_trend,
    verify_max_theorem,
    verify_min_theorem,
    verify_supersaturation,
)

class TestEnumeration:
    def test_order_three(self):
        graphs = list(enumerate_graphs(3))
        assert len(graphs) == 8
        assert sum(1 for g in graphs if is_connected(g)) == 4

    def test_order_four_connected(self):
        assert sum(1 for g in enumerate_graphs(4) if is_connected(g)) == 38

    def test_order_two(self):
        assert [g.edge_count for g in enumerate_graphs(2)] == [0, 1]

    def test_guard_refusal(self):
        with pytest.raises(ValueError):
            next(enumerate_graphs(8))
        assert next(enumerate_graphs(8, guard=8)) is not None

    def test_predicate_filter(self):
        count = sum(1 for _ in enumerate_graphs(4, lambda g: g.edge_count == 3))
        assert count == 20  # C(6, 3)


class TestGraphTable:
    def test_matches_direct_computation(self):
        from algconn.cliques import max_clique
        from algconn.spectra import laplacian

        table = build_graph_table(5)
        rng = np.random.default_rng(5)
        for code in rng.integers(0, table.size, 120):
            g = decode(5, int(code))
            assert table.omega[code] == max_clique(g).omega
            assert table.connected[code] == is_connected(g)
            if is_connected(g):
                direct = float(np.linalg.eigvalsh(laplacian(g))[1])
                assert abs(table.alpha[code] - direct) < 1e-10
            else:
                assert table.alpha[code] == 0.0

    def test_jobs_do_not_change_results(self):
        from algconn import scan

        serial = scan._chunk_tables(4, 0, 64)
        table = build_graph_table(4)
        assert np.array_equal(serial[0], table.omega)
        assert np.allclose(serial[1], table.alpha)
        assert np.array_equal(serial[2], table.connected)

    def test_chunked_parallel_merge_is_deterministic(self, monkeypatch):
        from algconn import scan

        reference = build_graph_table(5)
        monkeypatch.setattr(scan, "_CHUNK", 128)  # force 8 chunks
        scan._TABLE_CACHE.pop(5, None)
        try:
            for jobs in (1, 4):
                rebuilt = build_graph_table(5, jobs=jobs)
                assert np.array_equal(rebuilt.omega, reference.omega)
                assert np.array_equal(rebuilt.alpha, reference.alpha)
                assert np.array_equal(rebuilt.connected, reference.connected)
                scan._TABLE_CACHE.pop(5, None)
        finally:
            scan._TABLE_CACHE[5] = reference


class TestMaxTheorem:
    def test_divisible_case_unique_turan(self):
        cert = verify_max_theorem(6, 3)
        assert cert.ok
        assert cert.achieved == pytest.approx(4, abs=1e-6)
        assert len(cert.achievers) == 1
        assert is_isomorphic(parse_graph6(cert.achievers[0]), turan(6, 3))

    def test_remark_case_two_classes(self):
        cert = verify_max_theorem(7, 3)
        assert cert.ok
        achievers = [parse_graph6(s) for s in cert.achievers]
        assert len(achievers) == 2
        assert any(is_isomorphic(g, turan(7, 3)) for g in achievers)
        assert any(is_isomorphic(g, complete_multipartite(3, 3, 1)) for g in achievers)

    def test_join_case_five_four(self):
        # 5 = 1*4 + 1 with 0 < t < r-1: the join characterization governs, and
        # T_{5,3} ties T_{5,4} at alpha = 3; both must pass it.
        cert = verify_max_theorem(5, 4)
        assert cert.ok
        achievers = [parse_graph6(s) for s in cert.achievers]
        assert len(achievers) == 2
        assert any(is_isomorphic(g, turan(5, 4)) for g in achievers)
        assert any(is_isomorphic(g, turan(5, 3)) for g in achievers)

    def test_join_case_with_two_empty_factors(self):
        # 6 = 1*4 + 2: achievers must shed two empty order-2 factors; both
        # T_{6,4} and T_{6,3} reach alpha = 4 and decompose accordingly.
        cert = verify_max_theorem(6, 4)
        assert cert.ok
        achievers = [parse_graph6(s) for s in cert.achievers]
        assert len(achievers) == 2
        assert any(is_isomorphic(g, turan(6, 4)) for g in achievers)
        assert any(is_isomorphic(g, turan(6, 3)) for g in achievers)
        for g in achievers:
            ok, _ = check_join_characterization(g, 6, 4)
            assert ok

    def test_residue_r_minus_one_unique(self):
        cert = verify_max_theorem(7, 4)  # 7 = 1*4 + 3 = kr + r - 1
        assert cert.ok
        assert len(cert.achievers) == 1
        assert is_isomorphic(parse_graph6(cert.achievers[0]), turan(7, 4))

    def test_bound_value(self):
        cert = verify_max_theorem(7, 3)
        assert cert.bound == 7 - 3

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            verify_max_theorem(5, 5)
        with pytest.raises(ValueError):
            verify_max_theorem(8, 3)  # beyond guard without corpus

    def test_certificate_json_round_trip(self):
        cert = verify_max_theorem(5, 3)
        data = json.loads(cert.to_json())
        assert data["mode"] == "max"
        assert data["counterexamples"] == []
        assert data["achievers"] == cert.achievers

    def test_determinism(self):
        a = verify_max_theorem(5, 3).to_json()
        b = verify_max_theorem(5, 3).to_json()
        assert a == b

    def test_corpus_mode_matches_enumeration(self):
        corpus = [decode(4, code) for code in range(64)]
        from_corpus = verify_max_theorem(4, 2, corpus=corpus, source="corpus:test")
        direct = verify_max_theorem(4, 2)
        assert from_corpus.ok and direct.ok
        assert from_corpus.achieved == pytest.approx(direct.achieved, abs=1e-12)
        assert from_corpus.achievers == direct.achievers
        assert from_corpus.source == "corpus:test"


class TestMinTheorem:
    def test_kite_unique(self):
        cert = verify_min_theorem(5, 3)
        assert cert.ok
        assert len(cert.achievers) == 1
        assert is_isomorphic(parse_graph6(cert.achievers[0]), kite(5, 3))

    def test_path_case(self):
        cert = verify_min_theorem(6, 2)
        assert cert.ok
        assert is_isomorphic(parse_graph6(cert.achievers[0]), path(6))
        assert cert.bound == pytest.approx(2 * (1 - np.cos(np.pi / 6)), abs=1e-9)

    def test_complete_case_trivial(self):
        cert = verify_min_theorem(4, 4)
        assert cert.ok
        assert cert.graphs_scanned == 1
        assert cert.achieved == pytest.approx(4, abs=1e-9)

    def test_corpus_mode(self):
        corpus = [decode(4, code) for code in range(64)]
        cert = verify_min_theorem(4, 3, corpus=corpus)
        assert cert.ok
        assert is_isomorphic(parse_graph6(cert.achievers[0]), kite(4, 3))


class TestJoinCharacterization:
    def test_unbalanced_tripartite(self):
        ok, decomp = check_join_characterization(complete_multipartite(3, 3, 1), 7, 3)
        assert ok
        assert sorted(f.n for f in decomp.factors) == [1, 3, 3]
        assert all(f.edge_count == 0 for f in decomp.factors)

    def test_turan_seven_three(self):
        ok, decomp = check_join_characterization(turan(7, 3), 7, 3)
        assert ok
        assert is_isomorphic(decomp.reconstruct(), turan(7, 3))

    def test_failing_graph(self):
        # C_7 has alpha < 4 and no empty order-3 join factor
        from algconn.graphs import cycle

        ok, _ = check_join_characterization(cycle(7), 7, 3)
        assert not ok

    def test_wrong_residue_rejected(self):
        with pytest.raises(ValueError):
            check_join_characterization(turan(6, 3), 6, 3)

    def test_join_factorization_identity_sampled(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            n = int(rng.integers(2, 8))
            g = decode(n, int(rng.integers(0, 1 << (n * (n - 1) // 2))))
            comp = complement(g)
            comps = connected_components(comp)
            factors = [complement(induced_subgraph(comp, c)) for c in comps]
            rebuilt = factors[0]
            for f in factors[1:]:
                rebuilt = join(rebuilt, f)
            assert is_isomorphic(rebuilt, g)


class TestTrend:
    def test_exact_at_multiples(self):
        rows = dict(erdos_stone_trend(3, 300))
        assert rows[300] == Fraction(2, 3)
        assert rows[297] == Fraction(2, 3)

    def test_near_miss_value(self):
        rows = dict(erdos_stone_trend(3, 301))
        assert rows[301] == Fraction(301 - 101, 301)

    def test_bipartite_limit(self):
        rows = erdos_stone_trend(2, 100)
        for n, ratio in rows:
            assert abs(ratio - Fraction(1, 2)) < Fraction(1, n)
            if n % 2 == 0:
                assert ratio == Fraction(1, 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            erdos_stone_trend(1, 10)


class TestSupersaturation:
    def test_seven_three_one(self):
        rep = verify_supersaturation(7, 3, 1, 0.05)
        assert rep.ok
        assert rep.qualifying > 0 and not rep.vacuous
        assert rep.parts == [1, 1, 1]

    def test_six_two_two(self):
        rep = verify_supersaturation(6, 2, 2, 0.1)
        assert rep.ok
        assert rep.qualifying > 0

    def test_vacuous_threshold(self):
        rep = verify_supersaturation(6, 2, 2, 10.0)
        assert rep.vacuous and rep.ok
        assert rep.qualifying == 0

    def test_pruned_route_order_eight(self):
        rep = verify_supersaturation(8, 2, 2, 0.05, guard=8)
        assert rep.ok
        assert rep.qualifying > 0
        assert "pruned" in rep.source
        assert rep.graphs_scanned == 1 << 28
        assert rep.candidates_examined < 1 << 20

    def test_guard_refusal(self):
        with pytest.raises(ValueError):
            verify_supersaturation(8, 2, 2, 0.05)

    def test_containment_guard(self):
        with pytest.raises(ValueError):
            verify_supersaturation(7, 3, 3, 0.05)

    def test_json_shape(self):
        rep = verify_supersaturation(6, 2, 2, 0.1)
        data = json.loads(rep.to_json())
        assert data["violations"] == []
        assert data["threshold"] == pytest.approx(6 - 3 + 0.6)
