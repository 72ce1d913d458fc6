"""Exhaustive small-order verification of the extremal statements.

The labeled graphs of order n are identified with integer codes 0 ..
2^(n(n-1)/2) - 1 (one bit per vertex pair, in the same order graph6 uses).
For each order a table of clique number, algebraic connectivity, and
connectivity flags is computed once over the whole code space with batched
numpy kernels, then every scan is a cheap filter over that table.

Scans emit certificates: the theoretical bound, the scanned extremum, the
achievers deduplicated up to isomorphism, the characterization verdict, and
any counterexamples (there must be none).  Certificates are deterministic:
identical inputs give byte-identical JSON.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .cliques import contains_complete_multipartite, is_kr_free, max_clique
from .graph6 import write_graph6
from .graphs import (
    Graph,
    complement,
    connected_components,
    decode,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    join,
    kite,
    pair_index,
    turan,
)
from .spectra import algebraic_connectivity, lambda_max

__all__ = [
    "GraphTable",
    "ExtremalCertificate",
    "JoinDecomposition",
    "SupersaturationReport",
    "DEFAULT_GUARD",
    "build_graph_table",
    "clear_table_cache",
    "enumerate_graphs",
    "verify_max_theorem",
    "verify_min_theorem",
    "check_join_characterization",
    "erdos_stone_trend",
    "verify_supersaturation",
]

DEFAULT_GUARD = 7

#: Verdict tolerance for bound violations.
BOUND_TOL = 1e-8
#: Classification tolerance for equality with the extremum.
EQUALITY_TOL = 1e-6

_CHUNK = 1 << 16
_TABLE_CACHE: dict[int, "GraphTable"] = {}


@dataclass(frozen=True)
class GraphTable:
    """Per-code invariants over every labeled graph of one order."""

    n: int
    omega: np.ndarray      # uint8
    alpha: np.ndarray      # float64; exactly 0.0 for disconnected codes
    connected: np.ndarray  # bool

    @property
    def size(self) -> int:
        return len(self.omega)


def _pair_list(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _chunk_tables(n: int, start: int, stop: int):
    codes = np.arange(start, stop, dtype=np.int64)
    m = len(codes)
    pairs = _pair_list(n)

    lap = np.zeros((m, n, n))
    rows = np.zeros((n, m), dtype=np.int64)
    for idx, (i, j) in enumerate(pairs):
        b = (codes >> idx) & 1
        bf = b.astype(np.float64)
        lap[:, i, j] = -bf
        lap[:, j, i] = -bf
        lap[:, i, i] += bf
        lap[:, j, j] += bf
        rows[i] |= b << j
        rows[j] |= b << i

    evals = np.linalg.eigvalsh(lap)
    alpha = evals[:, 1].copy() if n >= 2 else np.zeros(m)

    reach = np.ones(m, dtype=np.int64)
    for _ in range(n - 1):
        grown = reach
        for v in range(n):
            grown = grown | (rows[v] * ((reach >> v) & 1))
        reach = grown
    connected = reach == (1 << n) - 1
    alpha[~connected] = 0.0

    omega = np.ones(m, dtype=np.uint8)
    for size in range(2, n + 1):
        for subset in combinations(range(n), size):
            mask = 0
            for a, b in combinations(subset, 2):
                mask |= 1 << pair_index(a, b)
            omega[(codes & mask) == mask] = size
    return omega, alpha, connected


def build_graph_table(n: int, jobs: int | None = None) -> GraphTable:
    """Compute (or fetch from cache) the full invariant table for order n.

    The code space is split into contiguous chunks handled by a thread pool
    (the eigenvalue kernel releases the GIL); chunk results are concatenated
    in range order, so the table is identical regardless of jobs.
    """
    if n < 2:
        raise ValueError(f"table needs order >= 2, got {n}")
    if n > 7:
        raise ValueError(
            f"full table for order {n} would hold 2^{n * (n - 1) // 2} codes; "
            "use corpus mode beyond order 7"
        )
    cached = _TABLE_CACHE.get(n)
    if cached is not None:
        return cached
    total = 1 << (n * (n - 1) // 2)
    ranges = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    if jobs is None:
        jobs = min(len(ranges), os.cpu_count() or 1)
    if jobs <= 1 or len(ranges) == 1:
        parts = [_chunk_tables(n, a, b) for a, b in ranges]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(lambda ab: _chunk_tables(n, *ab), ranges))
    table = GraphTable(
        n,
        np.concatenate([p[0] for p in parts]),
        np.concatenate([p[1] for p in parts]),
        np.concatenate([p[2] for p in parts]),
    )
    _TABLE_CACHE[n] = table
    return table


def clear_table_cache() -> None:
    _TABLE_CACHE.clear()


def enumerate_graphs(n: int, predicate=None, *, guard: int = DEFAULT_GUARD):
    """All labeled graphs of order n in code order, optionally filtered."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > guard:
        raise ValueError(
            f"order {n} exceeds the enumeration guard {guard}; "
            "raise the guard explicitly or supply a corpus"
        )
    for code in range(1 << (n * (n - 1) // 2)):
        g = decode(n, code)
        if predicate is None or predicate(g):
            yield g


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

@dataclass
class ExtremalCertificate:
    """Outcome of one exhaustive extremal scan."""

    n: int
    r: int
    mode: str
    bound: float
    achieved: float
    achievers: list[str]
    characterization_ok: bool
    counterexamples: list[dict]
    graphs_scanned: int
    source: str

    @property
    def ok(self) -> bool:
        return self.characterization_ok and not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "mode": self.mode,
            "bound": self.bound,
            "achieved": self.achieved,
            "achievers": list(self.achievers),
            "characterization_ok": self.characterization_ok,
            "counterexamples": [dict(c) for c in self.counterexamples],
            "graphs_scanned": self.graphs_scanned,
            "source": self.source,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@dataclass(frozen=True)
class JoinDecomposition:
    """Join factorization of a graph, derived from its complement's components.

    factors[i] is the complement of the complement-component on the vertices
    in derivation[i]; the join of all factors is isomorphic to the original.
    """

    factors: tuple[Graph, ...]
    derivation: tuple[tuple[int, ...], ...]

    def reconstruct(self) -> Graph:
        g = self.factors[0]
        for f in self.factors[1:]:
            g = join(g, f)
        return g


def _dedup_isomorphic(graphs: list[Graph]) -> list[int]:
    """Indices of isomorphism-class representatives, first occurrence kept."""
    reps: list[int] = []
    buckets: dict[tuple, list[int]] = {}
    for idx, g in enumerate(graphs):
        key = (g.n, g.edge_count, tuple(sorted(g.degrees())))
        hit = False
        for rep_idx in buckets.get(key, ()):
            if is_isomorphic(g, graphs[rep_idx]):
                hit = True
                break
        if not hit:
            buckets.setdefault(key, []).append(idx)
            reps.append(idx)
    return reps


def _scan_corpus(graphs, n: int):
    omegas, alphas, pool = [], [], []
    for g in graphs:
        if g.n != n:
            raise ValueError(f"corpus graph of order {g.n}, expected {n}")
        omegas.append(max_clique(g).omega)
        alphas.append(algebraic_connectivity(g) if g.n >= 2 else 0.0)
        pool.append(g)
    return pool, np.array(omegas), np.array(alphas)


def verify_max_theorem(
    n: int,
    r: int,
    *,
    guard: int = DEFAULT_GUARD,
    tol: float = BOUND_TOL,
    jobs: int | None = None,
    corpus=None,
    source: str = "corpus",
) -> ExtremalCertificate:
    """Scan every non-complete K_{r+1}-free labeled graph of order n.

    Verifies that alpha never exceeds the Turan value n - ceil(n/r), and
    that the equality achievers match the characterization: the Turan graph
    alone when n is 0 or r-1 mod r, otherwise a join of empty parts onto a
    sufficiently connected remainder (see check_join_characterization).
    """
    if not 2 <= r < n:
        raise ValueError(f"need 2 <= r < n, got r={r}, n={n}")
    bound = float(n - -(n // -r))
    counterexamples: list[dict] = []

    if corpus is None:
        if n > guard:
            raise ValueError(
                f"order {n} exceeds the enumeration guard {guard}; supply a corpus"
            )
        table = build_graph_table(n, jobs=jobs)
        eligible = table.omega <= r
        eligible[table.size - 1] = False  # the complete graph (all bits set)
        alphas = table.alpha
        scanned = int(eligible.sum())
        achieved = float(alphas[eligible].max())
        bad = np.nonzero(eligible & (alphas > bound + tol))[0]
        hit = np.nonzero(eligible & (np.abs(alphas - achieved) <= EQUALITY_TOL))[0]
        bad_graphs = [decode(n, int(c)) for c in bad[:20]]
        achiever_graphs = [decode(n, int(c)) for c in hit]
        src = "enumeration"
    else:
        pool, omegas, alphas = _scan_corpus(corpus, n)
        eligible = [
            i for i, g in enumerate(pool) if omegas[i] <= r and not g.is_complete
        ]
        if not eligible:
            raise ValueError("corpus contained no eligible graphs")
        scanned = len(eligible)
        achieved = float(max(alphas[i] for i in eligible))
        bad_graphs = [pool[i] for i in eligible if alphas[i] > bound + tol][:20]
        achiever_graphs = [
            pool[i] for i in eligible if abs(alphas[i] - achieved) <= EQUALITY_TOL
        ]
        src = source

    for g in bad_graphs:
        counterexamples.append({
            "graph6": write_graph6(g),
            "alpha": algebraic_connectivity(g),
            "reason": "bound-exceeded",
        })
    if abs(achieved - bound) > EQUALITY_TOL:
        counterexamples.append({
            "graph6": write_graph6(turan(n, r)),
            "alpha": bound,
            "reason": "extremum-mismatch",
        })

    reps = [achiever_graphs[i] for i in _dedup_isomorphic(achiever_graphs)]
    t = n % r
    if t == 0 or t == r - 1:
        target = turan(n, r)
        char_ok = all(is_isomorphic(g, target) for g in reps)
        failing = [g for g in reps if not is_isomorphic(g, target)]
    else:
        verdicts = [check_join_characterization(g, n, r)[0] for g in reps]
        char_ok = all(verdicts)
        failing = [g for g, v in zip(reps, verdicts) if not v]
    for g in failing[:20]:
        counterexamples.append({
            "graph6": write_graph6(g),
            "alpha": algebraic_connectivity(g),
            "reason": "characterization-failed",
        })

    return ExtremalCertificate(
        n=n, r=r, mode="max", bound=bound, achieved=achieved,
        achievers=[write_graph6(g) for g in reps],
        characterization_ok=char_ok,
        counterexamples=counterexamples,
        graphs_scanned=scanned,
        source=src,
    )


def verify_min_theorem(
    n: int,
    r: int,
    *,
    guard: int = DEFAULT_GUARD,
    tol: float = BOUND_TOL,
    jobs: int | None = None,
    corpus=None,
    source: str = "corpus",
) -> ExtremalCertificate:
    """Scan every connected labeled graph of order n with clique number exactly r.

    Verifies that alpha never drops below the kite graph's value and that
    every equality achiever is isomorphic to the kite.
    """
    if not 2 <= r <= n:
        raise ValueError(f"need 2 <= r <= n, got r={r}, n={n}")
    target = kite(n, r)
    bound = algebraic_connectivity(target)
    counterexamples: list[dict] = []

    if corpus is None:
        if n > guard:
            raise ValueError(
                f"order {n} exceeds the enumeration guard {guard}; supply a corpus"
            )
        table = build_graph_table(n, jobs=jobs)
        eligible = (table.omega == r) & table.connected
        alphas = table.alpha
        scanned = int(eligible.sum())
        achieved = float(alphas[eligible].min())
        bad = np.nonzero(eligible & (alphas < bound - tol))[0]
        hit = np.nonzero(eligible & (np.abs(alphas - achieved) <= EQUALITY_TOL))[0]
        bad_graphs = [decode(n, int(c)) for c in bad[:20]]
        achiever_graphs = [decode(n, int(c)) for c in hit]
        src = "enumeration"
    else:
        pool, omegas, alphas = _scan_corpus(corpus, n)
        eligible = [
            i for i, g in enumerate(pool) if omegas[i] == r and is_connected(g)
        ]
        if not eligible:
            raise ValueError("corpus contained no eligible graphs")
        scanned = len(eligible)
        achieved = float(min(alphas[i] for i in eligible))
        bad_graphs = [pool[i] for i in eligible if alphas[i] < bound - tol][:20]
        achiever_graphs = [
            pool[i] for i in eligible if abs(alphas[i] - achieved) <= EQUALITY_TOL
        ]
        src = source

    for g in bad_graphs:
        counterexamples.append({
            "graph6": write_graph6(g),
            "alpha": algebraic_connectivity(g),
            "reason": "bound-undershot",
        })
    if abs(achieved - bound) > EQUALITY_TOL:
        counterexamples.append({
            "graph6": write_graph6(target),
            "alpha": bound,
            "reason": "extremum-mismatch",
        })

    reps = [achiever_graphs[i] for i in _dedup_isomorphic(achiever_graphs)]
    failing = [g for g in reps if not is_isomorphic(g, target)]
    for g in failing[:20]:
        counterexamples.append({
            "graph6": write_graph6(g),
            "alpha": algebraic_connectivity(g),
            "reason": "characterization-failed",
        })

    return ExtremalCertificate(
        n=n, r=r, mode="min", bound=bound, achieved=achieved,
        achievers=[write_graph6(g) for g in reps],
        characterization_ok=not failing,
        counterexamples=counterexamples,
        graphs_scanned=scanned,
        source=src,
    )


def check_join_characterization(
    g: Graph, n: int, r: int, tol: float = BOUND_TOL
) -> tuple[bool, JoinDecomposition]:
    """Test the join form required of equality achievers when 0 < n mod r < r-1.

    Factor g as the join of the complements of its complement's components,
    then look for t = n mod r factors that are edgeless of order k+1 such
    that the join H of the remaining factors is K_{r+1-t}-free with
    alpha(H) >= n - (k+1)(t+1).  Any valid selection passes.
    """
    if g.n != n:
        raise ValueError(f"graph order {g.n} does not match n={n}")
    k, t = divmod(n, r)
    if not 0 < t < r - 1:
        raise ValueError(f"characterization applies only for 0 < n mod r < r-1, got t={t}")
    comp = complement(g)
    comps = connected_components(comp)
    factors = tuple(complement(induced_subgraph(comp, c)) for c in comps)
    decomp = JoinDecomposition(factors, tuple(tuple(c) for c in comps))
    empties = [
        i for i, f in enumerate(factors) if f.n == k + 1 and f.edge_count == 0
    ]
    floor = n - (k + 1) * (t + 1)
    for chosen in combinations(empties, t):
        rest = [factors[i] for i in range(len(factors)) if i not in chosen]
        if not rest:
            continue
        h = rest[0]
        for f in rest[1:]:
            h = join(h, f)
        if h.n != n - (k + 1) * t:
            continue
        if not is_kr_free(h, r + 1 - t):
            continue
        alpha_h = algebraic_connectivity(h) if h.n >= 2 else 0.0
        if alpha_h >= floor - tol:
            return True, decomp
    return False, decomp


def erdos_stone_trend(r: int, n_max: int) -> list[tuple[int, Fraction]]:
    """Exact ratios alpha(T_{n,r})/n for n = r..n_max.

    Each ratio is (n - ceil(n/r))/n as a Fraction; it equals 1 - 1/r exactly
    when r divides n and deviates by (r - n mod r)/(rn) < 1/n otherwise.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if n_max < r:
        raise ValueError(f"need n_max >= r, got {n_max}")
    return [
        (n, Fraction(n - -(n // -r), n))
        for n in range(r, n_max + 1)
    ]


@dataclass
class SupersaturationReport:
    """Check that high connectivity forces a balanced multipartite subgraph.

    Every graph of order n with alpha >= n - ceil(n/r) + epsilon*n must
    contain the complete r-partite graph with parts of size k (as a
    subgraph).  graphs_scanned is the full labeled space the verdict covers;
    candidates_examined counts the graphs that actually had alpha evaluated
    (the rest are excluded by a sound spectral bound, see source).
    """

    n: int
    r: int
    k: int
    epsilon: float
    threshold: float
    parts: list[int]
    qualifying: int
    violations: list[str]
    vacuous: bool
    graphs_scanned: int
    candidates_examined: int
    source: str

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.n, "r": self.r, "k": self.k, "epsilon": self.epsilon,
            "threshold": self.threshold, "parts": list(self.parts),
            "qualifying": self.qualifying, "violations": list(self.violations),
            "vacuous": self.vacuous, "graphs_scanned": self.graphs_scanned,
            "candidates_examined": self.candidates_examined, "source": self.source,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _bounded_degree_graphs(n: int, dcap: int):
    """All labeled graphs of order n with maximum degree <= dcap."""
    pairs = _pair_list(n)
    deg = [0] * n
    edges: list[tuple[int, int]] = []

    def rec(idx: int):
        if idx == len(pairs):
            yield Graph.from_edges(n, edges)
            return
        i, j = pairs[idx]
        yield from rec(idx + 1)
        if deg[i] < dcap and deg[j] < dcap:
            deg[i] += 1
            deg[j] += 1
            edges.append((i, j))
            yield from rec(idx + 1)
            edges.pop()
            deg[i] -= 1
            deg[j] -= 1

    if dcap <= 0:
        yield Graph(n, (0,) * n)
    else:
        yield from rec(0)


def verify_supersaturation(
    n: int,
    r: int,
    k: int,
    epsilon: float,
    *,
    guard: int = DEFAULT_GUARD,
    jobs: int | None = None,
) -> SupersaturationReport:
    """Desk-scale supersaturation check over all labeled graphs of order n.

    For n within the enumeration guard the cached table is filtered
    directly.  For n just beyond it (8 or 9) the scan stays exhaustive via a
    sound prune: alpha(G) = n - lambda_1(complement), and lambda_1 >= max
    degree + 1 for any graph with an edge, so only graphs whose complement
    has max degree <= n - threshold - 1 can qualify.  Those complements are
    enumerated directly.
    """
    if r < 2 or k < 1:
        raise ValueError(f"need r >= 2 and k >= 1, got r={r}, k={k}")
    if k * r > 8:
        raise ValueError(f"containment guard: k*r = {k * r} > 8")
    if epsilon <= 0:
        raise ValueError(f"need epsilon > 0, got {epsilon}")
    if n > guard:
        raise ValueError(
            f"order {n} exceeds the enumeration guard {guard}; raise it explicitly"
        )
    threshold = n - -(n // -r) + epsilon * n
    parts = [k] * r
    total = 1 << (n * (n - 1) // 2)
    qualifying: list[Graph] = []

    if n <= 7:
        table = build_graph_table(n, jobs=jobs)
        hit = np.nonzero(table.alpha >= threshold - 1e-9)[0]
        qualifying = [decode(n, int(c)) for c in hit]
        examined = table.size
        src = "enumeration"
    elif n <= 9:
        dcap = max(int(n - threshold - 1 + 1e-9), 0)
        if dcap >= n - 1:
            raise ValueError(
                f"threshold {threshold} too low to prune order {n}; "
                "no exhaustive route available"
            )
        examined = 0
        for comp_g in _bounded_degree_graphs(n, dcap):
            examined += 1
            alpha = n - lambda_max(comp_g)
            if alpha >= threshold - 1e-9:
                qualifying.append(complement(comp_g))
        src = f"pruned-enumeration (complement max degree <= {dcap})"
    else:
        raise ValueError(f"order {n} beyond the exhaustive range (max 9)")

    violations = [
        write_graph6(g)
        for g in qualifying
        if g.n < k * r or not contains_complete_multipartite(g, parts)
    ]
    return SupersaturationReport(
        n=n, r=r, k=k, epsilon=epsilon, threshold=threshold, parts=parts,
        qualifying=len(qualifying), violations=violations,
        vacuous=not qualifying, graphs_scanned=total,
        candidates_examined=examined, source=src,
    )
