"""Structure theory of complementary prisms.

Given a graph G on vertex set V, its complementary prism has two copies of
V: side 1 (indices 0..n-1) carrying G, side 2 (indices n..2n-1) carrying
the complement, plus the perfect matching (v,1) ~ (v,2).

The automorphism group of the prism is completely described by a small set
of structure results:

* for graphs outside two exceptional one-parameter families, every prism
  automorphism either preserves both sides (one automorphism of G acting
  diagonally) or swaps them (one antimorphism acting as a swap);
* for the two families built over an inner graph L (see
  :mod:`prismatic.families`), an extra "special" automorphism s exists that
  mixes the sides, and the full group is generated by diagonal/swap lifts
  of extended inner maps together with s;
* for the pentagon, the prism is the Petersen graph and the group is S5.

This module detects family membership, builds the special automorphism and
the structured group, classifies the |Aut(prism)| / |Aut(G)| ratio, decides
vertex-transitivity/Cayley-ness/diameter of the prism, classifies where a
computed core of the prism sits (five mutually exclusive shapes), and checks
that a prism is never a nontrivial lexicographic product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .families import FamilySpec, family_graph, kneser_graph
from .graphs import Graph, bits, build_graph, complementary_prism, prism_index
from .morphisms import (
    GroupDescription,
    Permutation,
    find_antimorphisms,
    find_isomorphisms,
    group_tools,
    is_isomorphism_map,
    is_self_complementary,
    CoreReport,
    verify_retraction,
)

_FALLBACK_DETECTION_MAX_N = 12


@dataclass(frozen=True)
class FamilyMatch:
    """A detected family structure inside a concrete graph.

    ``inner_vertices`` lists the graph's labels carrying the inner graph, in
    the vertex order of ``inner``; ``outer`` is the quadruple (y, v, u, z).
    """

    kind: str
    inner: Graph
    inner_vertices: tuple[int, ...]
    outer: tuple[int, int, int, int]


def _verify_family_match(g: Graph, match: FamilyMatch) -> bool:
    y, v, u, z = match.outer
    inner = set(match.inner_vertices)
    if len(inner) + 4 != g.n or {y, v, u, z} & inner:
        return False
    if match.kind == "C5":
        want = {
            y: {v} | inner,
            z: {u} | inner,
            v: {y, u},
            u: {v, z},
        }
    else:
        want = {
            y: {v},
            z: {u},
            v: {y, u} | inner,
            u: {v, z} | inner,
        }
    if any(set(g.neighbors(x)) != nbrs for x, nbrs in want.items()):
        return False
    # Inner edges agree with the stored inner graph.
    order = match.inner_vertices
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if g.has_edge(order[i], order[j]) != match.inner.has_edge(i, j):
                return False
    return True


def _detect_path4(g: Graph) -> list[FamilyMatch]:
    isos = find_isomorphisms(family_graph(FamilySpec("C5", Graph(0, ()))), g, limit=1)
    if not isos:
        return []
    outer = tuple(isos[0].image[i] for i in range(4))
    empty = Graph(0, ())
    return [
        FamilyMatch("C5", empty, (), outer),
        FamilyMatch("A", empty, (), outer),
    ]


def _detect_pentagon(g: Graph) -> FamilyMatch | None:
    template = family_graph(FamilySpec("C5", Graph(1, (0,))))
    isos = find_isomorphisms(template, g, limit=1)
    if not isos:
        return None
    img = isos[0].image
    return FamilyMatch("C5", Graph(1, (0,)), (img[0],), tuple(img[1:5]))


def _detect_structural(g: Graph, kind: str) -> FamilyMatch | None:
    """Degree-based detection for |inner| >= 2 (C5 kind) or >= 1 (A kind)."""
    n = g.n
    deg = g.degrees()
    if kind == "C5":
        cand_inner = [
            x for x in range(n) if all(deg[u] != 2 for u in g.neighbors(x))
        ]
    else:
        cand_inner = [
            x
            for x in range(n)
            if deg[x] >= 2 and all(deg[u] >= 2 for u in g.neighbors(x))
        ]
    outer = [x for x in range(n) if x not in set(cand_inner)]
    if len(outer) != 4:
        return None
    inner_sorted = tuple(sorted(cand_inner))
    inner_graph = g.induced(inner_sorted)

    if kind == "C5":
        for v in outer:
            if deg[v] != 2:
                continue
            for u in g.neighbors(v):
                if u not in outer or deg[u] != 2:
                    continue
                rest_v = [x for x in g.neighbors(v) if x != u]
                rest_u = [x for x in g.neighbors(u) if x != v]
                if len(rest_v) != 1 or len(rest_u) != 1:
                    continue
                y, z = rest_v[0], rest_u[0]
                match = FamilyMatch("C5", inner_graph, inner_sorted, (y, v, u, z))
                if _verify_family_match(g, match):
                    return match
        return None

    ones = [x for x in outer if deg[x] == 1]
    if len(ones) != 2:
        return None
    y, z = sorted(ones)
    v = g.neighbors(y)[0]
    u = g.neighbors(z)[0]
    match = FamilyMatch("A", inner_graph, inner_sorted, (y, v, u, z))
    return match if _verify_family_match(g, match) else None


def _detect_by_isomorphism(g: Graph) -> list[FamilyMatch]:
    """Fallback: try every candidate outer quadruple via isomorphism search."""
    n = g.n
    out: list[FamilyMatch] = []
    for kind in ("C5", "A"):
        for inner_set in combinations(range(n), n - 4):
            inner_graph = g.induced(inner_set)
            template = family_graph(FamilySpec(kind, inner_graph))
            isos = find_isomorphisms(template, g, limit=1)
            if isos:
                img = isos[0].image
                L = n - 4
                out.append(
                    FamilyMatch(
                        kind,
                        inner_graph,
                        tuple(img[i] for i in range(L)),
                        tuple(img[L + i] for i in range(4)),
                    )
                )
                break
    return [m for m in out if _verify_family_match(g, m)]


def detect_family(g: Graph) -> list[FamilyMatch]:
    """Detect whether g belongs to either family; [] means neither.

    A four-vertex path matches both families (with empty inner graph), and
    both matches are returned.  Detection runs the O(n^2) neighborhood
    criteria first and falls back to isomorphism search on small graphs.
    """
    if g.n < 4:
        return []
    if g.n == 4:
        return _detect_path4(g)
    matches: list[FamilyMatch] = []
    if g.n == 5:
        pent = _detect_pentagon(g)
        if pent:
            matches.append(pent)
    else:
        c5 = _detect_structural(g, "C5")
        if c5:
            matches.append(c5)
    a = _detect_structural(g, "A")
    if a:
        matches.append(a)
    if not matches and g.n <= _FALLBACK_DETECTION_MAX_N:
        matches = _detect_by_isomorphism(g)
    return matches


def reconstruct_from_match(match: FamilyMatch) -> Graph:
    """Rebuild the matched graph on its own labels (round-trip helper)."""
    inner, labels = match.inner, match.inner_vertices
    y, v, u, z = match.outer
    edges = [(labels[a], labels[b]) for a, b in inner.edges()]
    edges += [(y, v), (v, u), (u, z)]
    attach = (y, z) if match.kind == "C5" else (v, u)
    edges += [(o, w) for o in attach for w in labels]
    return build_graph(inner.n + 4, edges)


# ---------------------------------------------------------------------------
# The special prism automorphism of family graphs.
# ---------------------------------------------------------------------------


def special_automorphism(g: Graph, match: FamilyMatch | None = None) -> Permutation:
    """The side-mixing prism automorphism s of a family graph.

    For the pendant-pair family ("C5" kind) s fixes both copies of every
    inner vertex as well as (y,1) and (z,1), and permutes the remaining
    outer copies in two 3-cycles; for the apex-pair family ("A" kind) it
    fixes (v,1) and (u,1) instead.  Raises ValueError when g is not in
    either family, AssertionError if the table fails verification (which
    would falsify the structure theorem).
    """
    if match is None:
        matches = detect_family(g)
        if not matches:
            raise ValueError("graph is not in either family")
        match = matches[0]
    n = g.n
    y, v, u, z = match.outer
    image = list(range(2 * n))

    def setmap(src_base, src_side, dst_base, dst_side):
        image[prism_index(src_base, src_side, n)] = prism_index(dst_base, dst_side, n)

    if match.kind == "C5":
        setmap(v, 1, y, 2)
        setmap(u, 1, z, 2)
        setmap(y, 2, v, 1)
        setmap(v, 2, u, 2)
        setmap(u, 2, v, 2)
        setmap(z, 2, u, 1)
    else:
        setmap(y, 1, v, 2)
        setmap(z, 1, u, 2)
        setmap(y, 2, z, 2)
        setmap(v, 2, y, 1)
        setmap(u, 2, z, 1)
        setmap(z, 2, y, 2)

    perm = Permutation(tuple(image))
    prism = complementary_prism(g)
    if not is_isomorphism_map(prism, prism, perm.image):
        raise AssertionError("special map failed automorphism verification")
    return perm


# ---------------------------------------------------------------------------
# Structured automorphism group of the prism.
# ---------------------------------------------------------------------------


def _diagonal_lift(base_map, n: int) -> Permutation:
    image = [0] * (2 * n)
    for x in range(n):
        image[x] = base_map[x]
        image[n + x] = n + base_map[x]
    return Permutation(tuple(image))


def _swap_lift(base_map, n: int) -> Permutation:
    image = [0] * (2 * n)
    for x in range(n):
        image[x] = n + base_map[x]
        image[n + x] = base_map[x]
    return Permutation(tuple(image))


def _extend_inner_map(match: FamilyMatch, inner_map, n: int, antimorphism: bool, variant: int):
    """Extend an inner (anti)automorphism to the whole family graph.

    For automorphisms phi of the inner graph the two extensions fix the
    outer path or reverse it (y<->z, v<->u).  For antimorphisms sigma the
    two extensions send the outer quadruple around the two possible
    4-cycles compatible with complementation.
    """
    y, v, u, z = match.outer
    base = list(range(n))
    for i, x in enumerate(match.inner_vertices):
        base[x] = match.inner_vertices[inner_map[i]]
    if not antimorphism:
        if variant == 2:
            base[y], base[z] = z, y
            base[v], base[u] = u, v
    else:
        if variant == 1:
            base[y], base[v], base[u], base[z] = v, z, y, u
        else:
            base[y], base[v], base[u], base[z] = u, y, z, v
    return base


def structured_prism_aut(g: Graph) -> GroupDescription:
    """Assemble Aut(prism of g) from the structure theorems, not brute force.

    Every element is individually verified as a prism automorphism before
    being returned, so a wrong assembly fails loudly rather than silently.
    The structure label records which branch applied: S5 for the pentagon,
    SemidirectZ2 for the two families, AutUnionAntimorphisms for other
    self-complementary graphs, PlainAut otherwise.
    """
    n = g.n
    prism = complementary_prism(g)
    matches = detect_family(g)

    pentagon = next((m for m in matches if m.kind == "C5" and m.inner.n == 1), None)
    if pentagon is not None:
        # The prism is the Petersen graph: push S5 acting on 2-subsets
        # through one searched isomorphism from the Kneser graph K(5,2).
        kneser = kneser_graph(5, 2)
        pair_sets = [frozenset(s) for s in _kneser52_vertex_sets()]
        index_of = {s: i for i, s in enumerate(pair_sets)}
        iso = find_isomorphisms(kneser, prism, limit=1)
        if not iso:
            raise AssertionError("prism of the pentagon is not the Petersen graph?")
        iso = iso[0]
        iso_inv = iso.inverse()
        elements = []
        for pi in permutations(range(1, 6)):
            relabel = {i + 1: pi[i] for i in range(5)}
            on_pairs = Permutation(
                tuple(index_of[frozenset(relabel[x] for x in s)] for s in pair_sets)
            )
            elements.append(iso * on_pairs * iso_inv)
        label = "S5"
    elif matches:
        match = matches[0]
        inner = match.inner
        inner_auts = find_isomorphisms(inner, inner)
        inner_antis = find_isomorphisms(inner, inner.complement())
        s = special_automorphism(g, match)
        base_elements = []
        for phi in inner_auts:
            for variant in (1, 2):
                base = _extend_inner_map(match, phi.image, n, False, variant)
                base_elements.append(_diagonal_lift(base, n))
        for sigma in inner_antis:
            for variant in (1, 2):
                base = _extend_inner_map(match, sigma.image, n, True, variant)
                base_elements.append(_swap_lift(base, n))
        elements = base_elements + [s * e for e in base_elements]
        label = "SemidirectZ2"
    else:
        auts = find_isomorphisms(g, g)
        antis = find_antimorphisms(g)
        elements = [_diagonal_lift(p.image, n) for p in auts]
        elements += [_swap_lift(p.image, n) for p in antis]
        label = "AutUnionAntimorphisms" if antis else "PlainAut"

    for e in elements:
        if not is_isomorphism_map(prism, prism, e.image):
            raise AssertionError("structured element failed verification")
    if len({e.image for e in elements}) != len(elements):
        raise AssertionError("structured elements collide; assembly is wrong")
    return group_tools(elements, label=label)


def _kneser52_vertex_sets():
    from .families import colex_subsets

    return colex_subsets(5, 2)


# ---------------------------------------------------------------------------
# Ratio classification.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatioClass:
    """|Aut(prism of g)| / |Aut(g)| together with the structural reason."""

    value: int
    reason: str


def ratio_class(g: Graph) -> RatioClass:
    """Classify the automorphism-count ratio of the prism over the base.

    The only possible values are 12 (pentagon), 4 (family graph with
    self-complementary inner graph), 2 (family graph with non-self-
    complementary inner graph, or self-complementary non-family graph),
    and 1 (everything else).
    """
    matches = detect_family(g)
    if any(m.kind == "C5" and m.inner.n == 1 for m in matches):
        return RatioClass(12, "pentagon: the prism is the Petersen graph")
    if matches:
        match = matches[0]
        if match.inner.n == 0 or is_self_complementary(match.inner):
            return RatioClass(4, f"{match.kind}-family with self-complementary inner graph")
        return RatioClass(2, f"{match.kind}-family with non-self-complementary inner graph")
    if is_self_complementary(g):
        return RatioClass(2, "self-complementary, outside both families")
    return RatioClass(1, "outside both families and not self-complementary")


# ---------------------------------------------------------------------------
# Prism predicates.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrismPredicates:
    vertex_transitive: bool
    is_cayley: bool
    diameter: int


def prism_predicates(g: Graph) -> PrismPredicates:
    """Vertex-transitivity, Cayley-ness and diameter of the prism of g.

    Vertex-transitivity is computed twice -- via the characterization
    (g vertex-transitive and self-complementary) and via the orbits of the
    structured group -- and the two must agree.  The prism of a graph on
    more than one vertex is never a Cayley graph; the single-vertex prism
    is K2.  The diameter is at most three, exactly one for K2, and exactly
    two iff both g and its complement have diameter two.
    """
    if g.n < 1:
        raise ValueError("need at least one vertex")
    from .morphisms import is_vertex_transitive

    vt_characterization = is_vertex_transitive(g) and is_self_complementary(g)
    group = structured_prism_aut(g)
    vt_orbits = group.is_transitive()
    if vt_characterization != vt_orbits:
        raise AssertionError(
            "vertex-transitivity characterization disagrees with orbit computation"
        )
    prism = complementary_prism(g)
    diameter = prism.diameter()
    if g.n == 1:
        if diameter != 1:
            raise AssertionError("prism of K1 must be K2")
    else:
        def diam_or_none(h: Graph):
            return h.diameter() if h.is_connected() else None

        both_two = diam_or_none(g) == 2 and diam_or_none(g.complement()) == 2
        if (diameter == 2) != both_two:
            raise AssertionError("diameter-two characterization failed")
        if diameter not in (2, 3):
            raise AssertionError("prism diameter out of range")
    return PrismPredicates(
        vertex_transitive=vt_orbits,
        is_cayley=(g.n == 1),
        diameter=diameter,
    )


# ---------------------------------------------------------------------------
# Core case classification.
# ---------------------------------------------------------------------------


class CoreCaseViolation(AssertionError):
    """The computed core fits none of the five admissible shapes."""


@dataclass(frozen=True)
class CoreCase:
    """Which of the five core shapes a computed prism core realizes.

    For the two partition cases the sets V1, V2, V3 partition the base
    vertex set and ``property_checks`` records the verified structural
    properties (b)-(e).
    """

    case: str
    V1: tuple[int, ...] = ()
    V2: tuple[int, ...] = ()
    V3: tuple[int, ...] = ()
    property_checks: dict = field(default_factory=dict)


def classify_core_case(g: Graph, report: CoreReport) -> CoreCase:
    """Classify a computed core of the prism of g into one of five shapes.

    The classifier never re-derives the classification theorem; it checks
    the reported core vertices against the case schemas and raises
    CoreCaseViolation on any mismatch, acting as a falsification harness.
    Only cores with status "ok" are accepted.
    """
    n = g.n
    if n == 2:
        raise ValueError("two-vertex base graphs are excluded from the classification")
    if report.status != "ok":
        raise ValueError("cannot classify an incomplete core computation")
    prism = complementary_prism(g)
    if not verify_retraction(prism, report.retraction, report.core_vertices):
        raise ValueError("report does not carry a retraction of the prism onto its core")
    core = set(report.core_vertices)
    U1 = {v for v in range(n) if v in core}
    U2 = {v for v in range(n) if n + v in core}

    if U1 == U2 == set(range(n)):
        return CoreCase("I_core")
    if not U2:
        return CoreCase("II_in_W1")
    if not U1:
        return CoreCase("III_in_W2")

    if U1 < U2:
        base, side = g, 2
        V2, V1 = U1, U2 - U1
        V3 = set(range(n)) - U2
    elif U2 < U1:
        base, side = g.complement(), 1
        V2, V1 = U2, U1 - U2
        V3 = set(range(n)) - U1
    else:
        raise CoreCaseViolation(
            f"core sides are incomparable or equal-but-partial: U1={sorted(U1)}, U2={sorted(U2)}"
        )
    if not V1 or not V2:
        raise CoreCaseViolation("partition sets V1, V2 must be nonempty")

    checks = {}
    checks["b_no_V1_V2_edge"] = all(
        not base.has_edge(a, b) for a in V1 for b in V2
    )
    checks["c_V3_at_most_one_V2_neighbor"] = all(
        sum(1 for b in V2 if base.has_edge(a, b)) <= 1 for a in V3
    )
    checks["d_some_V2_vertex_avoids_V3"] = any(
        all(not base.has_edge(b, a) for a in V3) for b in V2
    )

    # Retraction inclusions for the retraction we actually computed.
    psi = report.retraction.image
    main, other = (2, 1) if side == 2 else (1, 2)

    def pimg(v, s):
        return psi[prism_index(v, s, n)]

    in_main = lambda vs: {prism_index(v, main, n) for v in vs}
    checks["e_V3_main_side"] = all(
        pimg(v, main) in in_main(V1) for v in V3
    )
    checks["e_V3_other_side"] = all(
        pimg(v, other) in in_main(V1 | V2) for v in V3
    )
    checks["e_V1_other_side"] = all(
        pimg(v, other) in in_main(V1 | V2) for v in V1
    )

    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise CoreCaseViolation(f"partition case properties failed: {failed}")
    case = "IV_partition" if side == 2 else "V_partition"
    return CoreCase(
        case,
        V1=tuple(sorted(V1)),
        V2=tuple(sorted(V2)),
        V3=tuple(sorted(V3)),
        property_checks=checks,
    )


# ---------------------------------------------------------------------------
# Lexicographic-product exclusion.
# ---------------------------------------------------------------------------


def _is_module(g: Graph, block_mask: int) -> bool:
    for w in range(g.n):
        if block_mask >> w & 1:
            continue
        inter = g.adj[w] & block_mask
        if inter != 0 and inter != block_mask:
            return False
    return True


def _is_lex_product(g: Graph, n1: int, n2: int) -> bool:
    """Does g factor as some product h1[h2] with |h1|=n1, |h2|=n2?

    Equivalent to: V(g) partitions into n1 modules of size n2 whose induced
    subgraphs are pairwise isomorphic.  (Fibers of a lexicographic product
    are such modules; conversely such a partition assembles into a product,
    with the quotient as outer factor.)
    """
    first_block: list[Graph] = []

    def rec(unassigned: int) -> bool:
        if unassigned == 0:
            return True
        v = (unassigned & -unassigned).bit_length() - 1
        rest = [w for w in bits(unassigned) if w != v]
        for others in combinations(rest, n2 - 1):
            block = (1 << v) | sum(1 << w for w in others)
            if not _is_module(g, block):
                continue
            induced = g.induced(sorted(bits(block)))
            if first_block:
                if not find_isomorphisms(first_block[0], induced, limit=1):
                    continue
            else:
                first_block.append(induced)
            if rec(unassigned & ~block):
                return True
            if len(first_block) == 1 and unassigned == (1 << g.n) - 1:
                first_block.clear()
        return False

    return rec((1 << g.n) - 1)


def not_lex_product_check(prism: Graph) -> bool | None:
    """True iff the graph is not a lexicographic product of two graphs on
    at least two vertices each; None when the order exceeds the exhaustive
    budget (16 vertices)."""
    N = prism.n
    if N > 16:
        return None
    for n1 in range(2, N):
        if N % n1:
            continue
        n2 = N // n1
        if n2 < 2:
            continue
        if _is_lex_product(prism, n1, n2):
            return False
    return True
