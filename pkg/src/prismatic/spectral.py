"""Adjacency spectra, strong regularity, and eigenvalue bounds.

Two independent routes to prism spectra are kept deliberately separate: a
numeric eigensolver (cyclic Jacobi on the adjacency matrix) and the closed
form for the complementary prism of a connected regular graph.  Tests
compare the two; neither is ever derived from the other.

For a connected k-regular graph G on n vertices with adjacency eigenvalues
k = l1 >= l2 >= ... >= ln, the prism spectrum is

    (n - 1 +- sqrt((n - 1 - 2k)^2 + 4)) / 2        (one pair, from l1)
    (-1 +- sqrt((2 li + 1)^2 + 4)) / 2             (one pair per i >= 2)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .morphisms import is_self_complementary

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 60
MULTIPLICITY_TOL = 1e-7


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalues of one graph, sorted descending, with their provenance."""

    n: int
    eigenvalues: tuple[float, ...]
    source: str  # "jacobi_numeric" or "closed_form"

    def multiplicity_pairs(self, tol: float = MULTIPLICITY_TOL) -> list[tuple[float, int]]:
        """Bin the sorted eigenvalue list into (value, multiplicity) pairs."""
        pairs: list[tuple[float, int]] = []
        for x in self.eigenvalues:
            if pairs and abs(pairs[-1][0] - x) <= tol:
                v, m = pairs[-1]
                pairs[-1] = ((v * m + x) / (m + 1), m + 1)
            else:
                pairs.append((x, 1))
        return pairs


def _jacobi_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Cyclic Jacobi iteration for a symmetric matrix.

    Sweeps rotate away every off-diagonal pair in turn until the
    off-diagonal Frobenius norm drops below JACOBI_TOL relative to the
    matrix norm.  Raises ArithmeticError (reporting the residual) if the
    sweep cap is hit, which for symmetric input indicates a bug rather
    than an unlucky matrix.
    """
    a = a.astype(float).copy()
    n = a.shape[0]
    if n <= 1:
        return np.diag(a).copy() if n else np.zeros(0)
    scale = max(1.0, float(np.linalg.norm(a)))

    def off_norm() -> float:
        # Sum squares of the strictly off-diagonal part directly; the
        # subtraction trick (|A|^2 - |diag|^2) cancels catastrophically
        # once the true off-diagonal mass is small.
        stripped = a - np.diag(np.diag(a))
        return float(np.linalg.norm(stripped))

    for _ in range(JACOBI_MAX_SWEEPS):
        off = off_norm()
        if off <= JACOBI_TOL * scale:
            return np.diag(a).copy()
        # Rotations smaller than this contribute nothing this sweep.
        threshold = off / (n * n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= threshold:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    raise ArithmeticError(
        f"Jacobi did not converge; off-diagonal residual {off_norm():.3e}"
    )


def adjacency_matrix(g: Graph) -> np.ndarray:
    m = np.zeros((g.n, g.n), dtype=np.int64)
    for v, u in g.edges():
        m[v, u] = m[u, v] = 1
    return m


def numeric_spectrum(g: Graph) -> SpectrumReport:
    """Eigenvalues of the adjacency matrix by cyclic Jacobi iteration."""
    eigs = _jacobi_eigenvalues(adjacency_matrix(g))
    values = tuple(sorted((float(x) for x in eigs), reverse=True))
    return SpectrumReport(n=g.n, eigenvalues=values, source="jacobi_numeric")


def _require_connected_regular(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("empty vertex set")
    if not g.is_connected():
        raise ValueError("closed form requires a connected graph")
    degs = g.degrees()
    if len(set(degs)) != 1:
        raise ValueError("closed form requires a regular graph")
    return degs[0]


def prism_spectrum_closed_form(g: Graph) -> SpectrumReport:
    """Spectrum of the complementary prism of a connected regular graph."""
    k = _require_connected_regular(g)
    n = g.n
    base = numeric_spectrum(g).eigenvalues  # descending; base[0] == k
    disc = math.sqrt((n - 1 - 2 * k) ** 2 + 4)
    values = [(n - 1 + disc) / 2, (n - 1 - disc) / 2]
    for lam in base[1:]:
        d = math.sqrt((2 * lam + 1) ** 2 + 4)
        values.append((-1 + d) / 2)
        values.append((-1 - d) / 2)
    values.sort(reverse=True)
    assert len(values) == 2 * n
    return SpectrumReport(n=2 * n, eigenvalues=tuple(values), source="closed_form")


def prism_extreme_eigenvalues(g: Graph) -> tuple[float, float]:
    """Largest and smallest prism eigenvalue straight from the closed form.

    The maximum always comes from the regular branch; the minimum from
    whichever of l2, ln has larger |2l + 1| (for K1 there is no second
    eigenvalue and the regular branch supplies both extremes).
    """
    k = _require_connected_regular(g)
    n = g.n
    disc = math.sqrt((n - 1 - 2 * k) ** 2 + 4)
    top = (n - 1 + disc) / 2
    if n == 1:
        bottom = (n - 1 - disc) / 2
    else:
        base = numeric_spectrum(g).eigenvalues
        lam2, lamn = base[1], base[-1]
        bottom = min(
            (-1 - math.sqrt((2 * lam2 + 1) ** 2 + 4)) / 2,
            (-1 - math.sqrt((2 * lamn + 1) ** 2 + 4)) / 2,
        )
    full = prism_spectrum_closed_form(g).eigenvalues
    assert abs(full[0] - top) < 1e-9 and abs(full[-1] - bottom) < 1e-9
    return top, bottom


# ---------------------------------------------------------------------------
# Strong regularity and 1-walk-regularity.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def feasible(self) -> bool:
        return self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu


@dataclass(frozen=True)
class WalkRegularityWitness:
    """A concrete violation of 1-walk-regularity.

    ``kind`` is "diagonal" when two vertices have different closed-walk
    counts at the given power, "edge" when two edges have different walk
    counts.  A witness is falsy so that ``report.one_walk_regular`` can be
    used directly as a boolean.
    """

    power: int
    kind: str
    entries: tuple

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class SrgAnalysis:
    srg_params: SrgParams | None
    one_walk_regular: object  # True, or a WalkRegularityWitness (falsy)
    srg_sc_eigen: tuple[float, float, float] | None
    edge_witness: WalkRegularityWitness | None = None


def srg_params(g: Graph) -> SrgParams | None:
    """Strongly-regular parameters by direct common-neighbor counting."""
    n = g.n
    if n < 2 or not g.is_regular():
        return None
    k = g.degrees()[0]
    lam = mu = None
    for v in range(n):
        av = g.adj[v]
        for u in range(v + 1, n):
            common = (av & g.adj[u]).bit_count()
            if g.has_edge(v, u):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is None or mu is None:
        # complete or empty graph: not strongly regular in the strict sense
        return None
    return SrgParams(n, k, lam, mu)


def _srg_implies_walk_regular(g: Graph, p: SrgParams) -> bool:
    """Exact check of A^2 = kI + lam*A + mu*(J - I - A).

    For a regular graph satisfying this identity, every power of A lies in
    span{I, A, J} with integer coefficients (AJ = kJ closes the algebra),
    so all diagonal entries agree and all edge entries agree at every
    power: the graph is 1-walk-regular.
    """
    a = adjacency_matrix(g)
    j = np.ones_like(a)
    i = np.eye(g.n, dtype=np.int64)
    lhs = a @ a
    rhs = p.k * i + p.lam * a + p.mu * (j - i - a)
    return bool((lhs == rhs).all())


def _walk_regularity_scan(g: Graph, max_power: int):
    """Return (diagonal_witness, edge_witness), either possibly None.

    Scans exact integer powers A^2 .. A^max_power; powers up to n are
    definitive since A^n is a linear combination of lower powers.  Integer
    arithmetic switches from int64 to arbitrary precision before any
    overflow is possible.
    """
    n = g.n
    edges = list(g.edges())
    a64 = adjacency_matrix(g)
    power = a64.copy()
    exact = None  # object-dtype fallback once int64 could overflow
    diag_w = edge_w = None
    kmax = max(g.degrees(), default=0)
    for i in range(2, max_power + 1):
        if exact is None:
            if int(power.max()) * max(kmax, 1) * n < 2**62:
                power = power @ a64
            else:
                exact = power.astype(object)
                exact = exact @ a64.astype(object)
                power = None
        else:
            exact = exact @ a64.astype(object)
        m = power if exact is None else exact
        if diag_w is None:
            d0 = m[0, 0]
            for v in range(1, n):
                if m[v, v] != d0:
                    diag_w = WalkRegularityWitness(
                        power=i, kind="diagonal", entries=((0, int(d0)), (v, int(m[v, v])))
                    )
                    break
        if edge_w is None and edges:
            e0 = m[edges[0][0], edges[0][1]]
            for v, u in edges[1:]:
                if m[v, u] != e0:
                    edge_w = WalkRegularityWitness(
                        power=i,
                        kind="edge",
                        entries=((edges[0], int(e0)), ((v, u), int(m[v, u]))),
                    )
                    break
        if diag_w is not None:
            break
    return diag_w, edge_w


def srg_analysis(g: Graph, max_power: int | None = None) -> SrgAnalysis:
    """Strong regularity, 1-walk-regularity, and the self-complementary
    eigenvalue triple, in one report.

    1-walk-regularity is decided by scanning exact powers of the adjacency
    matrix up to ``max_power`` (default n, which is definitive).  When the
    graph is strongly regular the scan is replaced by an exact check of
    the defining matrix identity, which implies 1-walk-regularity for all
    powers at once.  The reported witness is the first diagonal violation
    when one exists (two vertices with different closed-walk counts),
    otherwise the first edge violation.
    """
    params = srg_params(g)
    if max_power is None:
        max_power = g.n
    sc_eigen = None
    if params is not None:
        if not params.feasible():
            raise AssertionError(f"counted parameters infeasible: {params}")
        if not _srg_implies_walk_regular(g, params):
            raise AssertionError("strongly regular counts but matrix identity failed")
        one_wr: object = True
        edge_w = None
        if is_self_complementary(g):
            n = params.n
            expected = SrgParams(n, (n - 1) // 2, (n - 5) // 4, (n - 1) // 4)
            if params != expected:
                raise AssertionError(
                    f"self-complementary SRG parameters {params} not of the form {expected}"
                )
            r = math.sqrt(n)
            sc_eigen = ((n - 1) / 2, (r - 1) / 2, (-r - 1) / 2)
    else:
        diag_w, edge_w = _walk_regularity_scan(g, max_power)
        if diag_w is not None:
            one_wr = diag_w
        elif edge_w is not None:
            one_wr = edge_w
        else:
            one_wr = True
    return SrgAnalysis(
        srg_params=params,
        one_walk_regular=one_wr,
        srg_sc_eigen=sc_eigen,
        edge_witness=edge_w,
    )


def is_one_walk_regular(g: Graph) -> bool:
    return bool(srg_analysis(g).one_walk_regular)


# ---------------------------------------------------------------------------
# Lovasz theta bounds and the self-complementary SRG inequality.
# ---------------------------------------------------------------------------


def theta_bounds(g: Graph) -> tuple[float, float]:
    """(upper bound on theta(g), implied lower bound on theta(complement)).

    For a k-regular graph, theta(g) <= n(-ln)/(k - ln) = n/(1 - k/ln) with
    ln the smallest adjacency eigenvalue; combined with
    theta(g) * theta(complement) >= n this yields a lower bound n/upper
    for the complement.  The empty graph (k = 0) has theta = n exactly.
    """
    if g.n == 0:
        raise ValueError("empty vertex set")
    degs = g.degrees()
    if len(set(degs)) != 1:
        raise ValueError("theta eigenvalue bound requires a regular graph")
    k = degs[0]
    if k == 0:
        return float(g.n), 1.0
    lam_min = numeric_spectrum(g).eigenvalues[-1]
    upper = g.n / (1.0 - k / lam_min)
    return upper, g.n / upper


def thm_strg_inequality_check(n: int) -> bool:
    """Whether n + 1 <= (sqrt(n) - 1)(sqrt(n + 4) + 1) FAILS at n.

    This inequality failing for every n = 1 (mod 4) is what forces the
    contradiction in the classification of self-complementary strongly
    regular prism bases, so the expected return value is always True.
    Evaluation is exact: both sides are compared through integer square
    root enclosures, with the precision escalated if the enclosure cannot
    decide (it always can well before 10**30 for these gaps).
    """
    if n <= 1 or n % 4 != 1:
        raise ValueError("n must be congruent to 1 mod 4 and larger than 1")
    scale = 10**9
    while scale < 10**30:
        m2 = scale * scale
        s_lo = math.isqrt(n * m2)
        s_up = s_lo if s_lo * s_lo == n * m2 else s_lo + 1
        t_lo = math.isqrt((n + 4) * m2)
        t_up = t_lo if t_lo * t_lo == (n + 4) * m2 else t_lo + 1
        lhs = (n + 1) * m2
        rhs_hi = (s_up - scale) * (t_up + scale)
        rhs_lo = (s_lo - scale) * (t_lo + scale)
        if lhs > rhs_hi:
            return True  # inequality certainly fails
        if lhs <= rhs_lo:
            return False  # inequality certainly holds
        scale *= 1000
    raise ArithmeticError(f"square-root enclosure could not separate the sides at n={n}")


@dataclass(frozen=True)
class EigenvalueBoundReport:
    lambda2: float
    interlacing_bound: float | None
    interlacing_holds: bool | None
    open_threshold: float
    exceeds_open_threshold: bool
    pairing_max_error: float
    notes: tuple[str, ...]


def eigenvalue_bound_checks(g: Graph) -> EigenvalueBoundReport:
    """Eigenvalue bounds specific to regular self-complementary graphs.

    Checks that the spectrum pairs as {l, -1 - l} (so li = -1 - l_{n-i+2}
    for i >= 2), evaluates the interlacing bound
    l2 <= (n - 7)/2 - 2cos(pi (n-1)/n) when a Hamiltonian cycle is found
    (skipped with a notice otherwise), and reports where l2 sits relative
    to the open threshold (sqrt(n(n-4)) - 1)/2.
    """
    n = g.n
    degs = g.degrees()
    if len(set(degs)) != 1:
        raise ValueError("requires a regular graph")
    if not is_self_complementary(g):
        raise ValueError("requires a self-complementary graph")
    eigs = numeric_spectrum(g).eigenvalues
    lam2 = eigs[1]
    pairing_err = 0.0
    for i in range(1, n):  # eigs[i] pairs with eigs[n - i]
        pairing_err = max(pairing_err, abs(eigs[i] + 1 + eigs[n - i]))
    notes: list[str] = []

    from .structural import hamiltonian

    cycle = hamiltonian(g, "cycle")
    if cycle is None:
        bound = None
        holds = None
        notes.append("no Hamiltonian cycle found; interlacing bound skipped")
    else:
        bound = (n - 7) / 2 - 2 * math.cos(math.pi * (n - 1) / n)
        holds = lam2 <= bound + 1e-9
    threshold = (math.sqrt(n * (n - 4)) - 1) / 2
    return EigenvalueBoundReport(
        lambda2=lam2,
        interlacing_bound=bound,
        interlacing_holds=holds,
        open_threshold=threshold,
        exceeds_open_threshold=lam2 > threshold + 1e-9,
        pairing_max_error=pairing_err,
        notes=tuple(notes),
    )
