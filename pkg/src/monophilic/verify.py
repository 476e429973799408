"""The acceptance suite: one check per claim, each with a pinned time limit.

``run_suite("fast")`` skips the two exhaustive sweeps marked full-only.
Every check returns (passed, measured values); ``run_suite`` adds timing
and turns an overrun of the limit into a failure.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

import networkx as nx

from . import gadgets, paths, search
from .classify import classify_2_choosable, classify_2_monophilic
from .counting import ListAssignment, col, col_brute_force, col_uniform
from .graph import (
    Graph,
    build_complete_bipartite,
    build_cycle,
    build_path,
    build_theta,
    build_vertex,
    cartesian_product,
    is_chordal,
)

SEED = 20100428


@dataclass
class CriterionResult:
    criterion: int
    name: str
    status: str
    seconds: float
    limit_seconds: float
    measured: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "PASS"

    def line(self) -> str:
        return json.dumps(asdict(self), default=str)


def random_connected_graph(rng: random.Random, vertex_count: int, extra: float = 0.4) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, vertex_count)}
    for u in range(vertex_count):
        for v in range(u + 1, vertex_count):
            if rng.random() < extra:
                edges.add((u, v))
    return Graph(vertex_count, edges)


def random_chordal_graph(rng: random.Random, vertex_count: int) -> Graph:
    """Each new vertex is joined to a random nonempty clique of earlier ones,
    then the vertices are shuffled."""
    adj = [set()]
    for v in range(1, vertex_count):
        candidates = list(range(v))
        rng.shuffle(candidates)
        clique = []
        for u in candidates:
            if rng.random() < 0.6 or not clique:
                if all(u in adj[w] for w in clique):
                    clique.append(u)
        adj.append(set(clique))
        for u in clique:
            adj[u].add(v)
    perm = list(range(vertex_count))
    rng.shuffle(perm)
    edges = {(perm[u], perm[v]) for u in range(vertex_count) for v in adj[u] if u < v}
    return Graph(vertex_count, edges)


def small_connected_graphs(max_vertices: int = 6):
    """Every connected graph on 1..max_vertices vertices, one per isomorphism class."""
    out = []
    for G in nx.graph_atlas_g():
        if 1 <= G.number_of_nodes() <= max_vertices and nx.is_connected(G):
            out.append(Graph(G.number_of_nodes(), list(G.edges())))
    return out


def remark_assignment(k: int) -> ListAssignment:
    """{1,2} on vertices 0 and 1 of C_k, {2,3} everywhere else."""
    return ListAssignment([[1, 2], [1, 2]] + [[2, 3]] * (k - 2))


# ------------------------------------------------------------------ checks

def check_counting_oracle():
    rng = random.Random(SEED)
    mismatches = 0
    for _ in range(200):
        V = rng.randint(1, 6)
        g = random_connected_graph(rng, V)
        universe = rng.randint(1, 6)
        L = ListAssignment([rng.sample(range(1, universe + 1), rng.randint(0, min(universe, 4)))
                            for _ in range(V)])
        mismatches += col(g, L) != col_brute_force(g, L)
    return mismatches == 0, {"instances": 200, "mismatches": mismatches}


def check_path_formulas():
    construction_bad = []
    for n in (2, 3, 4):
        for k in range(1, 9):
            P = build_path(k)
            got_a = col(P, paths.make_path_assignment(k, n, paths.PathListKind.TypeA))
            got_b = col(P, paths.make_path_assignment(k, n, paths.PathListKind.TypeB))
            if got_a != paths.A(k, n) or got_b != paths.B(k, n):
                construction_bad.append((k, n))
    identity_bad = []
    for n in range(2, 6):
        for k in range(1, 13):
            a, b = paths.A(k, n), paths.B(k, n)
            ok = a - b == (-1) ** k
            ok &= a == paths.A_recursive(k, n) and b == paths.B_recursive(k, n)
            if k >= 2:
                ok &= a == (n - 1) * paths.B(k - 1, n)
                ok &= b == paths.A(k - 1, n) + (n - 2) * paths.B(k - 1, n)
            if not ok:
                identity_bad.append((k, n))
    passed = not construction_bad and not identity_bad
    return passed, {"construction_mismatches": construction_bad, "identity_failures": identity_bad}


def check_cycles(threads=1):
    rows = []
    ok = True
    for n, ks in ((2, range(3, 8)), (3, range(3, 6))):
        for k in ks:
            C = build_cycle(k)
            verdict = search.is_monophilic(C, n, threads=threads)
            minimum = search.min_colorings(C, n, threads=threads)
            formula = paths.cycle_uniform_count(k, n)
            good = (verdict.monophilic and minimum.count == verdict.uniform_count == formula
                    and col_uniform(C, n) == formula)
            ok &= good
            rows.append({"k": k, "n": n, "uniform": formula, "min": minimum.count,
                         "vacuous": verdict.vacuous, "ok": good})
    return ok, {"cases": rows}


def check_chordal(threads=1):
    rng = random.Random(SEED + 4)
    failures = []
    sizes = []
    for t in range(50):
        g = random_chordal_graph(rng, rng.randint(2, 6))
        chordal, _ = is_chordal(g)
        res = search.min_colorings(g, 2, prune=False, threads=threads)
        if not chordal or res.count != col_uniform(g, 2):
            failures.append(t)
        sizes.append(g.vertex_count)
    return not failures, {"graphs": 50, "vertex_counts": sizes, "failures": failures}


def check_two_characterizations(threads=1):
    graphs = small_connected_graphs(6)
    disagreements = []
    for g in graphs:
        mono = search.is_monophilic(g, 2, threads=threads).monophilic
        choos = search.is_choosable(g, 2, threads=threads).choosable
        if mono != classify_2_monophilic(g) or choos != classify_2_choosable(g):
            disagreements.append(g.sorted_edges())
    return not disagreements, {"graphs": len(graphs), "disagreements": disagreements}


def check_k23():
    K = build_complete_bipartite(2, 3)
    res = search.min_colorings(K, 2)
    uniform = col_uniform(K, 2)
    return res.count == 2 == uniform, {"min": res.count, "uniform": uniform}


def check_thetas(threads=1):
    out = {}
    ok = True
    for m in (2, 3):
        T = build_theta(2, 2, 2 * m)
        v = search.is_monophilic(T, 2, threads=threads)
        witness_count = col(T, v.witness) if v.witness is not None else None
        good = (not v.monophilic and v.uniform_count == 2 and witness_count == v.min_count == 1)
        cyc = search.is_monophilic(build_cycle(2 * m), 2, threads=threads).monophilic
        ok &= good and cyc
        out[f"theta_2_2_{2 * m}"] = {"monophilic": v.monophilic, "uniform": v.uniform_count,
                                     "witness_count": witness_count,
                                     "witness": [sorted(s) for s in v.witness] if v.witness else None}
        out[f"C_{2 * m}_monophilic"] = cyc
    k23 = search.is_monophilic(build_complete_bipartite(2, 3), 2, threads=threads).monophilic
    out["K23_monophilic"] = k23
    return ok and k23, out


def check_even_cycle_remark():
    out = {}
    ok = True
    for k in (4, 6):
        C = build_cycle(k)
        count = col(C, remark_assignment(k))
        minimum = search.min_colorings(C, 2).count
        ok &= count == 2 == minimum
        out[f"C_{k}"] = {"remark_count": count, "min": minimum}
    return ok, out


def check_gadgets():
    K, L0 = gadgets.build_L0(2)
    zero = col(K, L0)
    xs = [col(K, gadgets.build_Lj(2, j)) for j in (1, 2)]
    H, layout = gadgets.build_H(2)
    x, p = layout.x, layout.p
    L = gadgets.build_trap_assignment(layout)
    direct = col(H, L)
    factored = gadgets.trap_count_factored(H, layout, L)
    family = gadgets.uniform_family_size(H, layout)
    uniform = col_uniform(H, 3)
    p_ok = 2 ** p > x ** 4 >= 2 ** (p - 1)
    passed = (zero == 0 and xs[0] == xs[1] == x and p_ok and direct == factored == x ** 4
              and family >= 2 ** p and uniform >= family and uniform > direct)
    return passed, {"col_L0": zero, "x_by_j": xs, "p": p, "col_H_L": direct, "x^4": x ** 4,
                    "factored": factored, "family": family, "2^p": 2 ** p, "col_H_3": uniform}


def check_L0_uniqueness():
    report = gadgets.verify_L0_uniqueness(2)
    return bool(report), asdict(report)


def check_mechanism():
    report = gadgets.verify_H_choosable_mechanism(2, samples=500)
    return report.ok, asdict(report)


def check_product_and_paths(threads=1):
    grid = cartesian_product(build_path(2), build_path(3))
    v = search.is_monophilic(grid, 2, threads=threads)
    witness_count = col(grid, v.witness) if v.witness is not None else None
    grid_ok = (not v.monophilic and grid.vertex_count == 12 and grid.edge_count == 17
               and witness_count is not None and witness_count < v.uniform_count)
    path_rows = {}
    paths_ok = True
    for V in range(1, 8):
        g = build_vertex() if V == 1 else build_path(V - 1)
        res = search.min_colorings(g, 2, prune=False, threads=threads)
        uniform = col_uniform(g, 2)
        paths_ok &= res.count == uniform
        path_rows[V] = {"min": res.count, "uniform": uniform, "nodes_visited": res.nodes_visited}
    return grid_ok and paths_ok, {"grid_monophilic": v.monophilic, "grid_uniform": v.uniform_count,
                                  "grid_witness_count": witness_count, "paths": path_rows}


@dataclass
class Criterion:
    number: int
    name: str
    check: object
    limit_seconds: float
    full_only: bool = False
    parallel: bool = False


CRITERIA = [
    Criterion(1, "counting oracle", check_counting_oracle, 10),
    Criterion(2, "path formulas", check_path_formulas, 5),
    Criterion(3, "cycles monophilic", check_cycles, 300, parallel=True),
    Criterion(4, "chordal graphs monophilic", check_chordal, 300, parallel=True),
    Criterion(5, "2-monophilic and 2-choosable characterizations", check_two_characterizations, 1800,
              full_only=True, parallel=True),
    Criterion(6, "K_{2,3} is 2-monophilic", check_k23, 10),
    Criterion(7, "theta(2,2,2m) not 2-monophilic", check_thetas, 120, parallel=True),
    Criterion(8, "even-cycle non-uniform minimizer", check_even_cycle_remark, 10),
    Criterion(9, "H_3 gadget counts", check_gadgets, 300),
    Criterion(10, "L_0 uniqueness", check_L0_uniqueness, 1800, full_only=True),
    Criterion(11, "choosability mechanism", check_mechanism, 300),
    Criterion(12, "product of paths", check_product_and_paths, 300, parallel=True),
]


def run_criterion(c: Criterion, threads=1) -> CriterionResult:
    start = time.perf_counter()
    try:
        passed, measured = c.check(threads=threads) if c.parallel else c.check()
    except Exception as exc:  # a crash is a failed claim, not a crashed suite
        passed, measured = False, {"error": f"{type(exc).__name__}: {exc}"}
    seconds = time.perf_counter() - start
    if seconds > c.limit_seconds:
        passed = False
        measured["over_time_limit"] = True
    return CriterionResult(c.number, c.name, "PASS" if passed else "FAIL", round(seconds, 3),
                           c.limit_seconds, measured)


def run_suite(suite: str = "fast", threads: int = 1, only=None, emit=None, figures=None):
    """Run the chosen suite, calling ``emit`` with each result as it lands."""
    if suite not in ("fast", "full"):
        raise ValueError("suite must be 'fast' or 'full'")
    results = []
    for c in CRITERIA:
        if c.full_only and suite == "fast":
            continue
        if only is not None and c.number not in only:
            continue
        result = run_criterion(c, threads)
        results.append(result)
        if emit is not None:
            emit(result)
    if figures is not None:
        render_figures(figures)
    return results


def render_figures(directory) -> list[str]:
    from . import figures

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = [figures.plot_path_counts(out / "path_counts.png")]
    T = build_theta(2, 2, 4)
    v = search.is_monophilic(T, 2)
    written.append(figures.draw_assignment(T, v.witness, out / "theta_2_2_4_witness.png",
                                           "theta(2,2,4)", col(T, v.witness)))
    grid = cartesian_product(build_path(2), build_path(3))
    w = search.is_choosable(grid, 2).witness
    written.append(figures.draw_assignment(grid, w, out / "grid_2x3_uncolorable.png",
                                           "P2 x P3", col(grid, w)))
    return [str(p) for p in written]
