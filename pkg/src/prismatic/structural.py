"""Combinatorial invariants, Cheeger numbers, and Hamiltonian structure.

Cheeger numbers of complementary prisms have a two-value closed form; an
exhaustive rational-arithmetic partition scan provides the independent
oracle.  Hamiltonian witnesses come either from direct backtracking search
or from explicit constructions that splice Hamiltonian cycles/paths of the
base graph and its complement into prism witnesses; every witness is
re-verified edge by edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import Graph, bits, complementary_prism, prism_index
from .morphisms import SearchBudget, _as_budget


# ---------------------------------------------------------------------------
# Cliques, independent sets, colorings, connectivity.
# ---------------------------------------------------------------------------


def max_clique(g: Graph) -> tuple[int, ...]:
    """A maximum clique, by branch and bound with a greedy coloring bound."""
    n = g.n
    if n == 0:
        return ()
    best: list[tuple[int, ...]] = [()]

    def expand(mask: int, clique: list[int]):
        order = []
        color = 0
        rest = mask
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, color))
                avail &= ~g.adj[v] & ~(1 << v)
                rest &= ~(1 << v)
        for v, c in reversed(order):
            if len(clique) + c <= len(best[0]):
                return
            clique.append(v)
            sub = mask & g.adj[v]
            if sub:
                expand(sub, clique)
            elif len(clique) > len(best[0]):
                best[0] = tuple(clique)
            clique.pop()
            mask &= ~(1 << v)

    expand((1 << n) - 1, [])
    return tuple(sorted(best[0]))


def max_independent_set(g: Graph) -> tuple[int, ...]:
    return max_clique(g.complement())


def _dsatur_coloring(g: Graph) -> list[int]:
    n = g.n
    colors = [0] * n  # 1-based colors once assigned
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degs = g.degrees()
    for _ in range(n):
        v = max(
            (x for x in range(n) if not colors[x]),
            key=lambda x: (len(neighbor_colors[x]), degs[x]),
        )
        c = 1
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for u in g.neighbors(v):
            neighbor_colors[u].add(c)
    return colors


def _k_colorable(g: Graph, k: int) -> list[int] | None:
    """Exact backtracking k-coloring (colors 1..k), or None."""
    n = g.n
    order = sorted(range(n), key=lambda v: -g.degree(v))
    pos_of = {v: i for i, v in enumerate(order)}
    colors = [0] * n

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = {colors[u] for u in g.neighbors(v) if colors[u]}
        limit = min(k, used + 1)  # first use of a new color is canonical
        for c in range(1, limit + 1):
            if c in forbidden:
                continue
            colors[v] = c
            if rec(i + 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    del pos_of
    return colors if rec(0, 0) else None


CHROMATIC_EXACT_MAX_N = 48


def chromatic_number(g: Graph) -> tuple[int, list[int], bool]:
    """(chi, proper coloring, exact flag).

    Exact for graphs up to CHROMATIC_EXACT_MAX_N vertices via clique lower
    bound, DSATUR upper bound, and branch-and-bound in between; beyond
    that the DSATUR upper bound is returned with exact=False (unless the
    two bounds already meet).
    """
    if g.n == 0:
        return 0, [], True
    lb = len(max_clique(g))
    coloring = _dsatur_coloring(g)
    ub = max(coloring)
    if lb == ub:
        return ub, coloring, True
    if g.n > CHROMATIC_EXACT_MAX_N:
        return ub, coloring, False
    for k in range(lb, ub):
        found = _k_colorable(g, k)
        if found is not None:
            return k, found, True
    return ub, coloring, True


def _maxflow_vertex_disjoint(g: Graph, s: int, t: int) -> tuple[int, set[int]]:
    """Number of internally vertex-disjoint s-t paths and a minimum s-t
    vertex cut, via unit-capacity max flow on the split graph.

    Nodes 2v (in) and 2v+1 (out); v_in -> v_out capacity 1 except at s, t
    where it is effectively infinite; each edge uv gives u_out -> v_in and
    v_out -> u_in of large capacity.
    """
    n = g.n
    INF = n + 1
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {}

    def add(a: int, b: int, c: int):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for v in range(n):
        add(2 * v, 2 * v + 1, INF if v in (s, t) else 1)
    for v, u in g.edges():
        add(2 * v + 1, 2 * u, INF)
        add(2 * u + 1, 2 * v, INF)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for a in queue:
                for b in adj.get(a, ()):
                    if b not in parent and cap[(a, b)] > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    reach = set(parent)
    cut = {v for v in range(n) if v not in (s, t) and 2 * v in reach and 2 * v + 1 not in reach}
    return flow, cut


def vertex_connectivity(g: Graph) -> tuple[int, tuple[int, ...] | None]:
    """(kappa, minimum separating set or None for complete graphs).

    Max-flow over every non-adjacent pair; complete graphs have kappa
    n - 1 by convention and no separating witness.
    """
    n = g.n
    if n <= 1:
        return 0, None
    if g.edge_count() == n * (n - 1) // 2:
        return n - 1, None
    if not g.is_connected():
        return 0, ()
    best = None
    best_cut: set[int] = set()
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            f, cut = _maxflow_vertex_disjoint(g, s, t)
            if best is None or f < best:
                best, best_cut = f, cut
    assert best is not None
    removed = g.induced(sorted(set(range(n)) - best_cut))
    assert not removed.is_connected(), "cut witness failed to disconnect"
    return best, tuple(sorted(best_cut))


VERTEX_CONNECTIVITY_BRUTE_MAX_N = 12


def vertex_connectivity_brute(g: Graph) -> int:
    """Independent oracle: smallest vertex set whose removal disconnects."""
    n = g.n
    if n > VERTEX_CONNECTIVITY_BRUTE_MAX_N:
        raise ValueError("brute-force connectivity limited to 12 vertices")
    if n <= 1:
        return 0
    if g.edge_count() == n * (n - 1) // 2:
        return n - 1
    for size in range(0, n - 1):
        for cut in combinations(range(n), size):
            rest = sorted(set(range(n)) - set(cut))
            if not g.induced(rest).is_connected():
                return size
    return n - 1


@dataclass(frozen=True)
class InvariantReport:
    alpha: int
    omega: int
    chi: int
    kappa: int
    witnesses: dict
    exact: bool


def invariants(g: Graph) -> InvariantReport:
    """alpha, omega, chi, kappa with verifying witnesses."""
    clique = max_clique(g)
    for a, b in combinations(clique, 2):
        assert g.has_edge(a, b)
    indep = max_independent_set(g)
    for a, b in combinations(indep, 2):
        assert not g.has_edge(a, b)
    chi, coloring, exact = chromatic_number(g)
    for v, u in g.edges():
        assert coloring[v] != coloring[u]
    kappa, cut = vertex_connectivity(g)
    alpha, omega = len(indep), len(clique)
    assert chi >= omega
    if alpha:
        assert chi >= -(-g.n // alpha)  # chi >= n / alpha
    return InvariantReport(
        alpha=alpha,
        omega=omega,
        chi=chi,
        kappa=kappa,
        witnesses={
            "independent_set": indep,
            "clique": clique,
            "coloring": tuple(coloring),
            "cut": cut,
        },
        exact=exact,
    )


# ---------------------------------------------------------------------------
# Cheeger numbers.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheegerReport:
    value: Fraction
    witness: tuple[tuple[int, ...], tuple[int, ...]]
    method: str


def _edge_boundary(g: Graph, s_mask: int) -> int:
    total = 0
    for v in bits(s_mask):
        total += (g.adj[v] & ~s_mask).bit_count()
    return total


def _report_for(g: Graph, s_mask: int, method: str) -> CheegerReport:
    s = tuple(sorted(bits(s_mask)))
    t = tuple(sorted(set(range(g.n)) - set(s)))
    value = Fraction(_edge_boundary(g, s_mask), len(s))
    assert 1 <= len(s) <= len(t)
    return CheegerReport(value=value, witness=(s, t), method=method)


def cheeger_closed_form(g: Graph) -> CheegerReport:
    """Cheeger number of the complementary prism of g.

    The value is 1 unless g or its complement contains an edge {u, v} with
    deg(u) = 1 and deg(v) = n - 1, in which case it is (n-1)/n with the
    cut S = {(u,1)} union {(w,2) : w != v} (sides swapped for the
    complement case).  The witness ratio is re-verified on the actual
    prism before returning.
    """
    n = g.n
    prism = complementary_prism(g)

    def qualifying_edge(h: Graph):
        degs = h.degrees()
        for v, u in h.edges():
            if degs[v] == 1 and degs[u] == n - 1:
                return v, u
            if degs[u] == 1 and degs[v] == n - 1:
                return u, v
        return None

    hit = qualifying_edge(g)
    if hit is not None:
        u, v = hit
        s_mask = 1 << prism_index(u, 1, n)
        for w in range(n):
            if w != v:
                s_mask |= 1 << prism_index(w, 2, n)
        report = _report_for(prism, s_mask, "closed_form")
        assert report.value == Fraction(n - 1, n)
        return report
    hit = qualifying_edge(g.complement())
    if hit is not None:
        u, v = hit
        s_mask = 1 << prism_index(u, 2, n)
        for w in range(n):
            if w != v:
                s_mask |= 1 << prism_index(w, 1, n)
        report = _report_for(prism, s_mask, "closed_form")
        assert report.value == Fraction(n - 1, n)
        return report
    s_mask = (1 << n) - 1  # all of side 1; boundary is exactly the matching
    report = _report_for(prism, s_mask, "closed_form")
    assert report.value == 1
    return report


CHEEGER_BRUTE_MAX_N = 20


def cheeger_brute_force(g: Graph) -> CheegerReport:
    """Exact Cheeger number by scanning every partition with |S| <= |T|."""
    n = g.n
    if n > CHEEGER_BRUTE_MAX_N:
        raise ValueError("brute-force Cheeger limited to 20 vertices")
    if n < 2:
        raise ValueError("Cheeger number needs at least two vertices")
    half = n // 2
    best_e, best_s, best_mask = None, None, None
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size > half:
            continue
        e = _edge_boundary(g, mask)
        # compare e/size < best_e/best_s by cross multiplication
        if best_e is None or e * best_s < best_e * size:
            best_e, best_s, best_mask = e, size, mask
    return _report_for(g, best_mask, "brute_force")


# ---------------------------------------------------------------------------
# Hamiltonian paths and cycles.
# ---------------------------------------------------------------------------


def _reachable_mask(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v] & allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _ham_path_from(g: Graph, start: int, end: int | None, budget: SearchBudget | None):
    """Hamiltonian path from start (to end, if given) by pruned DFS."""
    n = g.n
    full = (1 << n) - 1
    path = [start]

    def prune(current: int, visited: int) -> bool:
        remaining = full & ~visited
        if not remaining:
            return False
        reach = _reachable_mask(g, current, remaining | (1 << current))
        if remaining & ~reach:
            return True
        # a vertex with no unvisited neighbors can only be terminal
        stuck = 0
        for v in bits(remaining):
            if not (g.adj[v] & remaining) and (end is None or v != end):
                stuck += 1
        if stuck > (1 if end is None else 0):
            return True
        # the fixed endpoint needs an unvisited predecessor unless it is next
        if end is not None and remaining != (1 << end):
            if not g.adj[end] & remaining & ~(1 << end):
                return True
        return False

    def rec(current: int, visited: int) -> bool:
        if budget is not None:
            budget.spend()
        if visited == full:
            return end is None or current == end
        if prune(current, visited):
            return False
        for v in bits(g.adj[current] & ~visited):
            if end is not None and v == end and visited | (1 << v) != full:
                continue
            path.append(v)
            if rec(v, visited | (1 << v)):
                return True
            path.pop()
        return False

    return list(path) if rec(start, 1 << start) else None


def hamiltonian(g: Graph, mode: str, u: int | None = None, v: int | None = None, budget=None):
    """Hamiltonian search: mode is "path", "cycle", "path_between" (with
    endpoints u, v) or "connected" (every pair, returns a dict of verified
    paths or None).

    Witnesses are verified edge-by-edge before being returned; None means
    the exhaustive search proved nonexistence (a BudgetExhausted escape
    means no conclusion).
    """
    n = g.n
    budget = _as_budget(budget)

    def verify(path, closed=False):
        assert sorted(path) == list(range(n))
        for a, b in zip(path, path[1:]):
            assert g.has_edge(a, b), (a, b)
        if closed and n > 1:
            assert g.has_edge(path[-1], path[0])
        return path

    if mode == "path":
        if n == 0:
            return None
        if n == 1:
            return [0]
        for s in range(n):
            got = _ham_path_from(g, s, None, budget)
            if got:
                return verify(got)
        return None
    if mode == "cycle":
        if n < 3:
            return [0] if n == 1 else None
        for t in g.neighbors(0):
            if t == 0:
                continue
            got = _ham_path_from(g, 0, t, budget)
            if got:
                return verify(got, closed=True)
        return None
    if mode == "path_between":
        if u is None or v is None or u == v:
            raise ValueError("path_between needs two distinct endpoints")
        if n == 1:
            return None
        got = _ham_path_from(g, u, v, budget)
        return verify(got) if got else None
    if mode == "connected":
        out = {}
        for a in range(n):
            for b in range(a + 1, n):
                got = hamiltonian(g, "path_between", a, b, budget)
                if got is None:
                    return None
                out[(a, b)] = got
        return out
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class PrismHamReport:
    p8_path: list | None
    ham_connected: dict | None
    notes: tuple[str, ...] = ()


def prism_ham_constructions(g: Graph, all_pairs: bool = True, budget=None) -> PrismHamReport:
    """Explicit prism Hamiltonian witnesses spliced from base-graph ones.

    The prism Hamiltonian path comes from Hamiltonian cycles of g and its
    complement, the second rotated to start where the first ends, joined
    through one matching edge.  When g and its complement are Hamiltonian-
    connected, all-pairs prism witnesses are assembled: same-side pairs
    detour through the whole opposite side between the first two vertices
    of the base path; cross pairs meet at a third vertex's matching edge.
    Every witness is verified against the actual prism.
    """
    n = g.n
    prism = complementary_prism(g)
    notes: list[str] = []
    if n == 1:
        return PrismHamReport(p8_path=[0, 1], ham_connected={(0, 1): [0, 1]})
    comp = g.complement()

    def pverify(path, a, b):
        assert path[0] == a and path[-1] == b
        assert sorted(path) == list(range(2 * n))
        for x, y in zip(path, path[1:]):
            assert prism.has_edge(x, y), (x, y)
        return path

    cyc1 = hamiltonian(g, "cycle", budget=budget)
    cyc2 = hamiltonian(comp, "cycle", budget=budget)
    if cyc1 and cyc2:
        pivot = cyc1[-1]
        at = cyc2.index(pivot)
        rot = cyc2[at:] + cyc2[:at]
        p8 = [prism_index(x, 1, n) for x in cyc1] + [prism_index(x, 2, n) for x in rot]
        pverify(p8, prism_index(cyc1[0], 1, n), prism_index(rot[-1], 2, n))
    else:
        p8 = None
        notes.append("missing a Hamiltonian cycle in the base graph or its complement")

    ham_connected = None
    if all_pairs and n >= 3:
        paths1: dict[tuple[int, int], list[int]] = {}
        paths2: dict[tuple[int, int], list[int]] = {}
        ok = True
        for h, store in ((g, paths1), (comp, paths2)):
            for a in range(n):
                for b in range(n):
                    if a == b:
                        continue
                    got = hamiltonian(h, "path_between", a, b, budget=budget)
                    if got is None:
                        ok = False
                        notes.append("base graph or complement is not Hamiltonian-connected")
                        break
                    store[(a, b)] = got
                if not ok:
                    break
            if not ok:
                break
        if ok:
            ham_connected = {}
            for x in range(n):
                for y in range(n):
                    # same side 1: (x,1) .. (y,1)
                    if x < y:
                        p = paths1[(x, y)]
                        q = paths2[(x, p[1])]
                        w = (
                            [prism_index(x, 1, n)]
                            + [prism_index(z, 2, n) for z in q]
                            + [prism_index(z, 1, n) for z in p[1:]]
                        )
                        key = (prism_index(x, 1, n), prism_index(y, 1, n))
                        ham_connected[key] = pverify(w, *key)
                        # same side 2: mirrored through the complement
                        p = paths2[(x, y)]
                        q = paths1[(x, p[1])]
                        w = (
                            [prism_index(x, 2, n)]
                            + [prism_index(z, 1, n) for z in q]
                            + [prism_index(z, 2, n) for z in p[1:]]
                        )
                        key = (prism_index(x, 2, n), prism_index(y, 2, n))
                        ham_connected[key] = pverify(w, *key)
                    # cross pair: (x,1) .. (y,2) through a third vertex z
                    z = next(c for c in range(n) if c not in (x, y))
                    p = paths1[(x, z)]
                    q = paths2[(z, y)]
                    w = [prism_index(c, 1, n) for c in p] + [prism_index(c, 2, n) for c in q]
                    key = (prism_index(x, 1, n), prism_index(y, 2, n))
                    ham_connected[key] = pverify(w, *key)
    elif all_pairs:
        notes.append("all-pairs construction needs at least three vertices")
    return PrismHamReport(p8_path=p8, ham_connected=ham_connected, notes=tuple(notes))


# ---------------------------------------------------------------------------
# Inequality checks tying invariants together.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundCheckReport:
    dam: dict | None
    chvatal_erdos: dict
    clique_coclique: dict | str
    preimage: dict | str


def bound_checks(g: Graph) -> BoundCheckReport:
    """Evaluate the connectivity/independence/clique inequalities on g.

    - kappa + kappa(complement) >= min(delta, delta(complement)) + 1 when
      both are connected;
    - the alpha < kappa Hamiltonian-connectedness premise;
    - alpha * omega <= n, applied only when vertex-transitivity or
      1-walk-regularity has been verified;
    - when a homomorphism onto K_omega exists (chi == omega) and the
      clique-coclique bound is tight, every color class must have exactly
      alpha vertices.
    """
    from .morphisms import is_vertex_transitive
    from .spectral import srg_analysis

    n = g.n
    comp = g.complement()
    inv = invariants(g)
    alpha, omega = inv.alpha, inv.omega

    dam = None
    if n and g.is_connected() and comp.is_connected():
        kappa = inv.kappa
        kappa_c, _ = vertex_connectivity(comp)
        delta = min(g.degrees())
        delta_c = min(comp.degrees())
        dam = {
            "kappa": kappa,
            "kappa_complement": kappa_c,
            "min_degree": min(delta, delta_c),
            "holds": kappa + kappa_c >= min(delta, delta_c) + 1,
        }

    chvatal = {
        "alpha": alpha,
        "kappa": inv.kappa,
        "premise_alpha_lt_kappa": alpha < inv.kappa,
    }

    vt = n > 0 and is_vertex_transitive(g)
    one_wr = n > 0 and bool(srg_analysis(g).one_walk_regular)
    if vt or one_wr:
        clique_coclique = {
            "alpha": alpha,
            "omega": omega,
            "n": n,
            "holds": alpha * omega <= n,
            "regularity": "vertex_transitive" if vt else "one_walk_regular",
        }
    else:
        clique_coclique = "not applicable"

    chi, coloring, exact = chromatic_number(g)
    if (vt or one_wr) and exact and chi == omega and n:
        sizes = [coloring.count(c) for c in range(1, chi + 1)]
        preimage = {
            "alpha_times_omega_equals_n": alpha * omega == n,
            "fiber_sizes": tuple(sizes),
            "all_fibers_alpha": all(s == alpha for s in sizes),
        }
    else:
        preimage = "not applicable"
    return BoundCheckReport(
        dam=dam,
        chvatal_erdos=chvatal,
        clique_coclique=clique_coclique,
        preimage=preimage,
    )


# ---------------------------------------------------------------------------
# The Kneser graph facts used by the big fixture.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KneserFactsReport:
    omega_kneser: int
    ekr_clique_size: int
    ekr_survives_edge_deletion: bool
    min_rule_coloring_proper: bool
    min_rule_colors: int
    cited_bounds: dict


def kneser_facts() -> KneserFactsReport:
    """Verified facts about K(10,4) and its complement.

    omega(K(10,4)) = 2 by exact clique search; the 84 four-subsets
    containing the first element form a clique in the complement
    (pairwise intersecting) that avoids the distinguished edge, so it
    survives that edge's deletion; the min-rule coloring (color = smallest
    element if <= 3, else a fourth color) is proper even after adding the
    edge between {1,2,3,4} and {2,3,4,5}.  Chromatic lower bounds are
    recorded as cited, not verified.
    """
    from .families import colex_subsets, kneser_graph

    k = kneser_graph(10, 4)
    subsets = colex_subsets(10, 4)  # 4-subsets of {1..10} in colex order
    omega = len(max_clique(k))

    family = [i for i, s in enumerate(subsets) if 1 in s]
    assert len(family) == math.comb(9, 3)
    for a, b in combinations(family, 2):
        assert not k.has_edge(a, b), "intersecting sets must be complement-adjacent"

    u1 = subsets.index(frozenset({1, 2, 3, 4}))
    u2 = subsets.index(frozenset({2, 3, 4, 5}))
    survives = u1 in family and u2 not in family

    def min_rule(s) -> int:
        return min(s) if min(s) <= 3 else 4

    colors = [min_rule(s) for s in subsets]
    proper = all(colors[a] != colors[b] for a, b in k.edges())
    proper = proper and colors[u1] != colors[u2]

    return KneserFactsReport(
        omega_kneser=omega,
        ekr_clique_size=len(family),
        ekr_survives_edge_deletion=survives,
        min_rule_coloring_proper=proper,
        min_rule_colors=max(colors),
        cited_bounds={
            "chi_kneser_lower_bound": 4,
            "chi_complement_minus_edge_lower_bound": 104,
            "complement_clique_upper_bound": 84,
        },
    )
