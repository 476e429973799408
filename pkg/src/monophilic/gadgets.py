"""The uncolorable list gadget on K_{n,n^n}, its one-color augmentations, and
the composite graph H_{n+1} that is (n+1)-choosable but not
(n+1)-monophilic, with drivers that check the supporting claims at n = 2.

Numbering on K_{n,n^n}: a_1..a_n are vertices 0..n-1, b_1..b_{n^n} follow.
The b-lists run over all transversals of the a-lists in lexicographic order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations, product

from .counting import ListAssignment, col, col_pinned, find_coloring, is_proper_coloring
from .errors import InputError
from .graph import Graph, build_complete_bipartite, build_complete_tripartite
from .search import assignments_below, canonical_key


def _kn(n):
    return build_complete_bipartite(n, n ** n)


def build_L0(n: int) -> tuple[Graph, ListAssignment]:
    """K_{n,n^n} with pairwise disjoint a-lists and one b-list per transversal; col = 0."""
    if n < 1:
        raise InputError("n must be at least 1")
    a_lists = [list(range(i * n + 1, i * n + n + 1)) for i in range(n)]
    b_lists = [[a_lists[i][t] for i, t in enumerate(choice)] for choice in product(range(n), repeat=n)]
    return _kn(n), ListAssignment(a_lists + b_lists)


def Lj_shift(n: int) -> int:
    # keeps 1..2n+1 free: those are the colors on the v and w vertices of H
    return 2 * n + 1


def build_Lj(n: int, j: int) -> ListAssignment:
    """L_0 with every color shifted past 2n+1, then color j added to every list."""
    if not 1 <= j <= n:
        raise InputError(f"j must lie in 1..{n}")
    _, L0 = build_L0(n)
    shift = Lj_shift(n)
    return ListAssignment([{c + shift for c in s} | {j} for s in L0])


def transversals_blocked(n: int) -> bool:
    """Every way of coloring the a-side from L_0 uses up some b-list entirely."""
    _, L0 = build_L0(n)
    b_lists = set(L0.lists[n:])
    return all(frozenset(choice) in b_lists for choice in product(*(sorted(L0[i]) for i in range(n))))


@dataclass
class HGraphLayout:
    n: int
    x: int
    p: int
    # (i, j) -> (a ids, b ids) of copy G_{i,j}, with i, j in 1..n
    copies: dict = field(default_factory=dict)
    v: list = field(default_factory=list)
    w: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "x": str(self.x),
            "p": self.p,
            "copies": {f"{i},{j}": {"a": a, "b": b} for (i, j), (a, b) in sorted(self.copies.items())},
            "v": self.v,
            "w": self.w,
        }

    def copy_vertices(self, i, j):
        a, b = self.copies[i, j]
        return a + b


def smallest_p(n: int, x: int) -> int:
    """Least p with n^p > x^(n^2)."""
    if n < 2:
        raise InputError("no p satisfies 1^p > x for n = 1")
    target = x ** (n * n)
    p = 0
    while n ** p <= target:
        p += 1
    return p


def build_H(n: int) -> tuple[Graph, HGraphLayout]:
    """H_{n+1}: n^2 copies of K_{n,n^n}, K_{n,p} on v_1..v_n / w_1..w_p, and v_i joined
    to every vertex of G_{i,1}..G_{i,n}.

    Copies come first in order (1,1), (1,2), ..., (n,n); then v_1..v_n; then
    w_1..w_p.
    """
    if n < 2:
        raise InputError("H_{n+1} needs n >= 2: for n = 1 no p satisfies 1^p > x")
    K = _kn(n)
    x = col(K, build_Lj(n, 1))
    p = smallest_p(n, x)
    size = K.vertex_count
    layout = HGraphLayout(n=n, x=x, p=p)
    edges = []
    offset = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            layout.copies[i, j] = (list(range(offset, offset + n)), list(range(offset + n, offset + size)))
            edges.extend((u + offset, v + offset) for u, v in K.edges)
            offset += size
    layout.v = list(range(offset, offset + n))
    layout.w = list(range(offset + n, offset + n + p))
    for i, vi in enumerate(layout.v, start=1):
        edges.extend((vi, wk) for wk in layout.w)
        for j in range(1, n + 1):
            edges.extend((vi, u) for u in layout.copy_vertices(i, j))
    return Graph(offset + n + p, edges), layout


def build_trap_assignment(layout: HGraphLayout) -> ListAssignment:
    """The (n+1)-list assignment on H whose count x^(n^2) undercuts col(H, n+1).

    w_k -> {n+1..2n+1}; v_i -> {1..n, n+i}; G_{i,j} -> L_j.
    """
    n = layout.n
    total = n * n * (n + n ** n) + n + layout.p
    lists = [None] * total
    for (i, j), _ in layout.copies.items():
        Lj = build_Lj(n, j)
        for local, vertex in enumerate(layout.copy_vertices(i, j)):
            lists[vertex] = Lj[local]
    for i, vi in enumerate(layout.v, start=1):
        lists[vi] = set(range(1, n + 1)) | {n + i}
    for wk in layout.w:
        lists[wk] = set(range(n + 1, 2 * n + 2))
    return ListAssignment(lists)


def forced_pins(layout: HGraphLayout) -> list[tuple[int, int]]:
    """The colors every coloring from the trap assignment must use on v and w."""
    n = layout.n
    return [(vi, n + i) for i, vi in enumerate(layout.v, start=1)] + [(wk, 2 * n + 1) for wk in layout.w]


def trap_count_factored(H: Graph, layout: HGraphLayout, L: ListAssignment) -> int:
    """col(H, L) via the forced colors: every other color on a v_i or w_k gives 0,
    and with the forced colors pinned only the n^2 copies remain."""
    for vertex, forced in forced_pins(layout):
        for c in sorted(L[vertex] - {forced}):
            if col_pinned(H, L, [(vertex, c)]) != 0:
                raise AssertionError(f"vertex {vertex} is not forced to color {forced}")
    total = 1
    pins = forced_pins(layout)
    for i, j in sorted(layout.copies):
        verts = layout.copy_vertices(i, j)
        sub, _ = H.induced_subgraph(verts)
        banned = {c for v, c in pins if any(H.has_edge(v, u) for u in verts)}
        total *= col(sub, ListAssignment([L[u] - banned for u in verts]))
    return total


def uniform_family_size(H: Graph, layout: HGraphLayout) -> int:
    """Size of an explicit family of colorings of H from uniform (n+1)-lists.

    Every w_k takes any color in 1..n, every v_i takes n+1, and every copy is
    colored properly with colors 1 and 2 (two ways).  Each independent
    choice is checked to be proper against its neighbourhood; the family
    is their product.
    """
    n = layout.n
    top = n + 1
    v_set = set(layout.v)
    parts = [[wk] for wk in layout.w] + [layout.copy_vertices(i, j) for i, j in sorted(layout.copies)]
    part_of = {u: k for k, part in enumerate(parts) for u in part}
    # parts only touch each other through the v_i
    for u, v in H.edges:
        if u not in v_set and v not in v_set and part_of[u] != part_of[v]:
            raise AssertionError("independent parts are adjacent")
    size = 1
    for wk in layout.w:
        if not H.neighbors(wk) <= v_set:
            raise AssertionError(f"w vertex {wk} has a neighbour outside v")
        size *= len([c for c in range(1, n + 1) if c != top])
    for i, j in sorted(layout.copies):
        a, b = layout.copies[i, j]
        ways = 0
        for ca, cb in ((1, 2), (2, 1)):
            colors = {u: ca for u in a} | {u: cb for u in b}
            proper = all(colors[u] != colors[v] for u in a for v in b if H.has_edge(u, v))
            clear = all(c != top for c in colors.values())
            ways += proper and clear
        size *= ways
    return size


# ---------------------------------------------------------- equivalence

def kn_automorphisms(n: int):
    """All automorphisms of K_{n,n^n} as vertex permutations (side-preserving,
    plus the side swap when both sides have the same size)."""
    m = n ** n
    for pa in permutations(range(n)):
        for pb in permutations(range(n, n + m)):
            yield list(pa) + list(pb)
    if m == n:
        for pa in permutations(range(n, n + m)):
            for pb in permutations(range(n)):
                yield list(pa) + list(pb)


def equivalence_keys(L: ListAssignment, automorphisms) -> set:
    return {canonical_key(L.permute_vertices(perm)) for perm in automorphisms}


@dataclass
class UniquenessReport:
    n: int
    zero_classes: int
    all_equivalent: bool
    list_size_checked: int

    def __bool__(self):
        return self.all_equivalent and self.zero_classes > 0


def verify_L0_uniqueness(n: int, budget: int | None = None) -> UniquenessReport:
    """Every n-list class on K_{n,n^n} with no coloring is equivalent to L_0.

    Only lists of size exactly n are searched.
    """
    if n > 2:
        raise InputError("exhaustive L_0 uniqueness is only feasible for n <= 2")
    K, L0 = build_L0(n)
    targets = equivalence_keys(L0, kn_automorphisms(n))
    zeros = assignments_below(K, n, 1, budget=budget)
    ok = all(canonical_key(L) in targets for L, _ in zeros)
    return UniquenessReport(n, len(zeros), ok, n)


# ------------------------------------------------------ choosability side

def bad_apex_colors(n: int, L: ListAssignment) -> list[int]:
    """Apex colors of K_{n,n^n,1} that leave no coloring (apex is the last vertex)."""
    apexed = build_complete_tripartite(n, n ** n, 1)
    return bad_apex_colors_on(apexed, L, apexed.vertex_count - 1)


def apexed_Lj(n: int, j: int) -> ListAssignment:
    return ListAssignment(list(build_Lj(n, j)) + [range(1, n + 2)])


def random_assignment(rng: random.Random, vertex_count: int, size: int, universe: int) -> ListAssignment:
    return ListAssignment([rng.sample(range(1, universe + 1), size) for _ in range(vertex_count)])


def perturbed_Lj(rng: random.Random, n: int) -> ListAssignment:
    """An apexed L_j with colors renamed, a random apex list, and up to two
    lists changed in one color; these sit close to the extremal case."""
    L = [set(s) for s in apexed_Lj(n, rng.randint(1, n))]
    universe = sorted(set().union(*L)) + [max(set().union(*L)) + 1]
    L[-1] = set(rng.sample(universe, n + 1))
    for _ in range(rng.randint(0, 2)):
        v = rng.randrange(len(L) - 1)
        fresh = [c for c in universe if c not in L[v]]
        L[v].remove(rng.choice(sorted(L[v])))
        L[v].add(rng.choice(fresh))
    rename = dict(zip(universe, rng.sample(range(1, 3 * len(universe)), len(universe))))
    return ListAssignment([{rename[c] for c in s} for s in L])


def greedy_color_H(H: Graph, layout: HGraphLayout, L: ListAssignment) -> list[int] | None:
    """Color H the way the choosability argument does.

    Pick for each v_i a color whose pinning leaves every attached copy
    colorable, give each w_k a color not used on the v_i, then color every
    copy.  Returns the coloring, or None if some step has no option.
    """
    n = layout.n
    gamma = [None] * H.vertex_count
    for i, vi in enumerate(layout.v, start=1):
        bad = set()
        for j in range(1, n + 1):
            verts = layout.copy_vertices(i, j) + [vi]
            sub, _ = H.induced_subgraph(verts)
            local = ListAssignment([L[u] for u in verts])
            bad.update(bad_apex_colors_on(sub, local, len(verts) - 1))
        options = sorted(L[vi] - bad)
        if not options:
            return None
        gamma[vi] = options[0]
    used = {gamma[vi] for vi in layout.v}
    for wk in layout.w:
        options = sorted(L[wk] - used)
        if not options:
            return None
        gamma[wk] = options[0]
    for i, j in sorted(layout.copies):
        vi = layout.v[i - 1]
        verts = layout.copy_vertices(i, j)
        sub, _ = H.induced_subgraph(verts)
        found = find_coloring(sub, ListAssignment([L[u] - {gamma[vi]} for u in verts]))
        if found is None:
            return None
        for u, c in zip(verts, found):
            gamma[u] = c
    return gamma


def bad_apex_colors_on(g: Graph, L: ListAssignment, apex: int) -> list[int]:
    return [c for c in sorted(L[apex]) if col_pinned(g, L, [(apex, c)]) == 0]


@dataclass
class MechanismReport:
    n: int
    adversarial_ok: bool = False
    uniform_ok: bool = False
    random_trials: int = 0
    max_bad_colors: int = 0
    random_with_bad_color: int = 0
    # random cases with a bad color whose stripped lists are not L_0-like
    random_bad_not_equivalent: int = 0
    greedy_trials: int = 0
    greedy_successes: int = 0

    @property
    def ok(self) -> bool:
        return (self.adversarial_ok and self.uniform_ok and self.max_bad_colors <= 1
                and self.random_bad_not_equivalent == 0
                and self.greedy_successes == self.greedy_trials)

    def __bool__(self):
        return self.ok


def verify_H_choosable_mechanism(n: int = 2, samples: int = 500, greedy_samples: int = 20,
                                 seed: int = 0) -> MechanismReport:
    """Check the two facts behind (n+1)-choosability of H_{n+1}.

    On K_{n,n^n} plus an apex, at most one apex color kills every coloring
    (L_j-type lists, uniform lists, and ``samples`` random (n+1)-list
    assignments).  Then the greedy coloring of H succeeds on the trap
    assignment and on ``greedy_samples`` random (n+1)-list assignments.
    """
    if n != 2:
        raise InputError("the mechanism check runs at n = 2 only")
    report = MechanismReport(n)
    apex_count = n + n ** n + 1
    _, L0 = build_L0(n)
    targets = equivalence_keys(L0, list(kn_automorphisms(n)))

    adversarial = True
    for j in range(1, n + 1):
        L = apexed_Lj(n, j)
        bad = bad_apex_colors(n, L)
        stripped = ListAssignment([s - {j} for s in L.lists[:-1]])
        adversarial &= bad == [j] and canonical_key(stripped) in targets
    report.adversarial_ok = adversarial
    report.uniform_ok = bad_apex_colors(n, ListAssignment.uniform(apex_count, n + 1)) == []

    rng = random.Random(seed)
    for t in range(samples):
        if t % 2:
            L = perturbed_Lj(rng, n)
        else:
            L = random_assignment(rng, apex_count, n + 1, n + 1 + t % (2 * n + 2))
        bad = bad_apex_colors(n, L)
        report.random_trials += 1
        report.max_bad_colors = max(report.max_bad_colors, len(bad))
        report.random_with_bad_color += bool(bad)
        for c in bad:
            stripped = ListAssignment([s - {c} for s in L.lists[:-1]])
            report.random_bad_not_equivalent += canonical_key(stripped) not in targets

    H, layout = build_H(n)
    trials = [build_trap_assignment(layout)]
    trials += [random_assignment(rng, H.vertex_count, n + 1, 2 * n + 2) for _ in range(greedy_samples)]
    for L in trials:
        report.greedy_trials += 1
        gamma = greedy_color_H(H, layout, L)
        report.greedy_successes += gamma is not None and is_proper_coloring(H, L, gamma)
    return report
