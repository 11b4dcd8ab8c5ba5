"""Bad graphs, their equistarable weight functions, and forced edge subsets."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import DomainError, InputError, ResourceLimitError
from .graph import (
    EdgeSubset,
    Graph,
    HamiltonianLabeling,
    is_triangle_free,
    iter_bits,
    maximal_star_masks,
)
from .kernel import KernelBasis, kernel_basis_from_chords, orthogonal_masks
from .limits import MAX_HAMILTONIAN_ORDER
from .linalg import SymbolicValue, instantiate, solve_cycle_system, symbolic_sum
from .subsets import check_bits, pack, scan_equal

MAX_EPSILON_HALVINGS = 64


class ChordClass(enum.Enum):
    NON_CROSSING_EVEN = "NonCrossingEven"
    CROSSING_ODD = "CrossingOdd"
    NEITHER = "Neither"

    @property
    def is_witness(self) -> bool:
        return self is not ChordClass.NEITHER


@dataclass(frozen=True)
class ChordClassification:
    kind: ChordClass
    # vertices of the even path P0 of C - {e, e'}, from its end at e to its end at e'
    p0: tuple[int, ...]
    # NonCrossingEven: positions of both chord ends on P0;
    # CrossingOdd: (d(v, e), d(v, e')) for the chord end v on P0
    distances: tuple[int, ...] = ()


def _cycle_index(labeling: HamiltonianLabeling, edge_id: int) -> int:
    try:
        return labeling.cycle_edges.index(edge_id)
    except ValueError:
        raise DomainError(f"edge {edge_id} is not a cycle edge") from None


def even_path(labeling: HamiltonianLabeling, e: int, e2: int) -> tuple[int, ...]:
    """The even-length path of C - {e, e2}, listed from its end at ``e`` to its end at ``e2``."""
    n = labeling.n
    j, k = _cycle_index(labeling, e), _cycle_index(labeling, e2)
    lo, hi = sorted((j, k))
    if hi - lo in (0, 1, n - 1):
        raise DomainError("cycle edges must be disjoint")
    order = labeling.order
    # removing cycle edges lo and hi leaves order[lo..hi-1] and order[hi..lo-1 (mod n)]
    inner = tuple(order[lo:hi])
    outer = tuple(order[(hi + t) % n] for t in range(n - hi + lo))
    if (len(inner) - 1) % 2 == 0:
        # inner starts at cycle edge lo's endpoint
        path = inner if j == lo else inner[::-1]
    else:
        # outer starts at cycle edge hi's endpoint
        path = outer if j == hi else outer[::-1]
    return path


def classify_chord(
    graph: Graph, labeling: HamiltonianLabeling, e: int, e2: int, chord: int
) -> ChordClassification:
    if chord in labeling.cycle_edges:
        raise DomainError(f"edge {chord} is a cycle edge, not a chord")
    if not 0 <= chord < graph.m:
        raise InputError(f"edge id {chord} out of range")
    path = even_path(labeling, e, e2)
    where = {v: i for i, v in enumerate(path)}
    a, b = graph.edges[chord]
    on = [v for v in (a, b) if v in where]
    last = len(path) - 1
    if len(on) == 2:
        pa, pb = where[a], where[b]
        if (pa - pb) % 2 == 0:
            return ChordClassification(ChordClass.NON_CROSSING_EVEN, path, (pa, pb))
    elif len(on) == 1:
        p = where[on[0]]
        if p % 2 == 1 and (last - p) % 2 == 1:
            return ChordClassification(ChordClass.CROSSING_ODD, path, (p, last - p))
    return ChordClassification(ChordClass.NEITHER, path)


@dataclass(frozen=True)
class Witness:
    chord: int
    classification: ChordClassification


@dataclass(frozen=True)
class BadnessCertificate:
    graph: Graph
    labeling: HamiltonianLabeling
    # key: (cycle edge id, cycle edge id) ascending
    witnesses: dict[tuple[int, int], Witness] = field(hash=False)


def disjoint_cycle_pairs(labeling: HamiltonianLabeling) -> list[tuple[int, int]]:
    n = labeling.n
    pairs = []
    for j in range(n):
        for k in range(j + 2, n):
            if k - j != n - 1:
                e, e2 = labeling.cycle_edges[j], labeling.cycle_edges[k]
                pairs.append((min(e, e2), max(e, e2)))
    return sorted(pairs)


def find_witness(graph: Graph, labeling: HamiltonianLabeling, e: int, e2: int) -> Witness | None:
    """Lowest-id chord that witnesses the pair."""
    for chord in labeling.chords:
        c = classify_chord(graph, labeling, e, e2, chord)
        if c.kind.is_witness:
            return Witness(chord, c)
    return None


def uncovered_pairs(graph: Graph, labeling: HamiltonianLabeling) -> list[tuple[int, int]]:
    return [p for p in disjoint_cycle_pairs(labeling) if find_witness(graph, labeling, *p) is None]


def is_bad(graph: Graph, labeling: HamiltonianLabeling) -> BadnessCertificate | None:
    """Badness certificate for this Hamiltonian cycle, or ``None``.

    Use :func:`uncovered_pairs` to see which disjoint pairs lack a witness.
    """
    if graph.n % 2 == 0:
        raise DomainError("badness is defined for graphs of odd order")
    if labeling.n != graph.n:
        raise InputError("labeling does not match the graph")
    witnesses = {}
    for pair in disjoint_cycle_pairs(labeling):
        w = find_witness(graph, labeling, *pair)
        if w is None:
            return None
        witnesses[pair] = w
    return BadnessCertificate(graph, labeling, witnesses)


def hamiltonian_cycles(graph: Graph):
    """Yield each Hamiltonian cycle once, as a vertex order starting at 0."""
    n = graph.n
    if n < 3:
        return
    full = graph.vertex_mask
    order = [0]

    def extend(v: int, seen: int):
        if seen == full:
            if graph.has_edge(v, 0) and order[1] < order[-1]:
                yield tuple(order)
            return
        for w in iter_bits(graph.adjacency[v] & ~seen):
            order.append(w)
            yield from extend(w, seen | 1 << w)
            order.pop()

    yield from extend(0, 1)


def find_bad_labeling(graph: Graph) -> BadnessCertificate | None:
    if graph.n % 2 == 0:
        raise DomainError("badness is defined for graphs of odd order")
    if graph.n > MAX_HAMILTONIAN_ORDER:
        raise ResourceLimitError(
            f"Hamiltonian cycle search is capped at n={MAX_HAMILTONIAN_ORDER}, got n={graph.n}"
        )
    for order in hamiltonian_cycles(graph):
        cert = is_bad(graph, HamiltonianLabeling.from_order(graph, order))
        if cert is not None:
            return cert
    return None


# --- the weight construction for bad graphs -----------------------------------


@dataclass(frozen=True)
class SymbolicEdgeWeighting:
    graph: Graph
    labeling: HamiltonianLabeling
    values: tuple[SymbolicValue, ...]
    epsilon: Fraction
    base: int
    alpha: tuple[Fraction, ...]

    @property
    def arity(self) -> int:
        return len(self.alpha)

    def concrete(self) -> tuple[Fraction, ...]:
        return tuple(instantiate(v, self.alpha) for v in self.values)


def alpha_values(epsilon: Fraction, base: int, r: int) -> tuple[Fraction, ...]:
    """``alpha_i = epsilon * base^-i`` for ``i = 1..r``."""
    return tuple(epsilon / base**i for i in range(1, r + 1))


def relation_bound(values, m: int) -> int:
    """Largest integer coefficient any subset relation among the symbols can carry.

    Raises if it exceeds ``4m``: past that, distinct relations could collide
    under the base-(8m+1) instantiation.
    """
    if not values or values[0].arity == 0:
        return 0
    denom = lcm(*(c.denominator for v in values for c in v.coeffs))
    worst = max(denom * sum(abs(v.coeffs[i]) for v in values) for i in range(values[0].arity))
    if worst > 4 * m:
        raise DomainError(f"symbol relation coefficients reach {worst} > 4m = {4 * m}")
    return int(worst)


def construct_equistarable_weights(
    graph: Graph, certificate: BadnessCertificate
) -> SymbolicEdgeWeighting:
    labeling = certificate.labeling
    chords = labeling.chords
    r = len(chords)
    n = graph.n

    values: list[SymbolicValue | None] = [None] * graph.m
    for i, f in enumerate(chords):
        values[f] = SymbolicValue.symbol(i, r)
    b = []
    for j in range(n):
        v = labeling.order[j]
        rhs = SymbolicValue.constant(1, r)
        for i, f in enumerate(chords):
            if v in graph.edges[f]:
                rhs = rhs - values[f]
        b.append(rhs)
    beta = solve_cycle_system(b)
    for j, e in enumerate(labeling.cycle_edges):
        values[e] = beta[j]

    one = SymbolicValue.constant(1, r)
    for v in range(n):
        total = symbolic_sum((values[e] for e in iter_bits(graph.incident_edges(v))), r)
        if total != one:
            raise AssertionError(f"star at vertex {v} sums to {total}, not 1")

    relation_bound(values, graph.m)
    base = 8 * graph.m + 1
    epsilon = Fraction(1, 3 * r + 3)
    third, two_thirds = Fraction(1, 3), Fraction(2, 3)
    for _ in range(MAX_EPSILON_HALVINGS):
        alpha = alpha_values(epsilon, base, r)
        if all(third < instantiate(beta[j], alpha) < two_thirds for j in range(n)):
            return SymbolicEdgeWeighting(graph, labeling, tuple(values), epsilon, base, alpha)
        epsilon /= 2
    raise DomainError("no admissible epsilon after 64 halvings; the certificate is not valid")


@dataclass(frozen=True)
class SubsetCheck:
    ok: bool
    counterexample: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_equistarable(
    graph: Graph, weights, *, max_bits: int | None = None, require_positive: bool = True
) -> SubsetCheck:
    """Exhaustively check that exactly the maximal stars have total 1.

    ``weights`` is a :class:`SymbolicEdgeWeighting` or a per-edge sequence of
    Fractions / SymbolicValues. Symbolic totals equal 1 only when the constant
    part is 1 and every symbol coefficient vanishes.
    """
    check_bits(graph.m, max_bits, "equistarability scan")
    if any(graph.degree(v) == 0 for v in range(graph.n)):
        return SubsetCheck(False, None, "graph has an isolated vertex")
    if isinstance(weights, SymbolicEdgeWeighting):
        if require_positive and any(x <= 0 for x in weights.concrete()):
            return SubsetCheck(False, None, "instantiated weights are not all positive")
        values = list(weights.values)
    else:
        values = list(weights)
        if len(values) != graph.m:
            raise InputError(f"expected {graph.m} edge weights, got {len(values)}")
        if require_positive:
            for e, x in enumerate(values):
                if not isinstance(x, SymbolicValue) and x <= 0:
                    return SubsetCheck(False, 1 << e, f"weight of edge {graph.edges[e]} is {x}, not positive")

    if any(isinstance(x, SymbolicValue) for x in values):
        arity = next(x.arity for x in values if isinstance(x, SymbolicValue))
        values = [x if isinstance(x, SymbolicValue) else SymbolicValue.constant(x, arity) for x in values]
        zero, one = SymbolicValue.constant(0, arity), SymbolicValue.constant(1, arity)
    else:
        values = [Fraction(x) for x in values]
        zero, one = Fraction(0), Fraction(1)
    packed, (target,) = pack(values, [one])
    stars = maximal_star_masks(graph)
    for s in stars:
        if sum(packed[e] for e in iter_bits(s)) != target:
            v = next(v for v in range(graph.n) if graph.incident_edges(v) == s)
            total = sum((values[e] for e in iter_bits(s)), zero)
            return SubsetCheck(False, s, f"star sum at vertex {v} is {total}, not 1")
    star_set = set(stars)
    bad = [mask for mask in scan_equal(packed, target) if mask not in star_set]
    if bad:
        first = min(bad)
        return SubsetCheck(False, first, f"non-star edge set {sorted(iter_bits(first))} has total 1")
    return SubsetCheck(True)


# --- forced subsets and strong equistarability ---------------------------------


class SubsetVerdict(enum.Enum):
    REFUTES_STRONG = "RefutesStrongEquistarability"
    REFUTES_EQUISTARABILITY = "RefutesEquistarability"
    HARMLESS = "Harmless"


@dataclass(frozen=True)
class ForcedSubsetReport:
    subset: EdgeSubset
    value: Fraction
    is_star: bool
    verdict: SubsetVerdict

    @property
    def refutes_strong(self) -> bool:
        return not self.is_star and self.value <= 1


def subset_verdict(is_star: bool, value: Fraction) -> SubsetVerdict:
    if is_star:
        return SubsetVerdict.HARMLESS
    if value == 1:
        return SubsetVerdict.REFUTES_EQUISTARABILITY
    if value < 1:
        return SubsetVerdict.REFUTES_STRONG
    return SubsetVerdict.HARMLESS


def forced_masks(basis: KernelBasis, max_bits: int | None = None) -> list[int]:
    """Every nonempty edge mask orthogonal to all kernel basis vectors, ascending."""
    check_bits(basis.graph.m, max_bits, "forced-subset scan")
    return orthogonal_masks([list(v) for v in basis.vectors], basis.graph.m)


def forced_subsets(
    graph: Graph, labeling: HamiltonianLabeling, *, max_bits: int | None = None
) -> list[ForcedSubsetReport]:
    basis = kernel_basis_from_chords(graph, labeling)
    stars = set(maximal_star_masks(graph))
    cycle_mask = sum(1 << e for e in labeling.cycle_edges)
    reports = []
    for mask in forced_masks(basis, max_bits):
        # the particular solution is 1/2 on cycle edges and 0 on chords
        value = Fraction((mask & cycle_mask).bit_count(), 2)
        is_star = mask in stars
        reports.append(ForcedSubsetReport(EdgeSubset(mask), value, is_star, subset_verdict(is_star, value)))
    return reports


@dataclass(frozen=True)
class StrongEquistarabilityDecision:
    strongly_equistarable: bool
    weighting: SymbolicEdgeWeighting
    forced: tuple[ForcedSubsetReport, ...]
    witness: ForcedSubsetReport | None = None

    @property
    def verdict(self) -> str:
        return "StronglyEquistarable" if self.strongly_equistarable else "NotStronglyEquistarable"

    @property
    def gamma(self) -> Fraction | None:
        return None if self.witness is None else self.witness.value


def decide_strong_equistarability(
    graph: Graph, labeling: HamiltonianLabeling, *, max_bits: int | None = None
) -> StrongEquistarabilityDecision:
    """Decide strong equistarability of a triangle-free bad graph with min degree >= 2.

    Positive solutions of ``A x = 1`` form a nonempty relatively open convex
    set, and each subset total is affine on it. A total is therefore either
    constant (forced) or takes a whole interval of values, so the graph fails
    to be strongly equistarable exactly when some non-star subset is forced to
    a value at most 1.
    """
    if not is_triangle_free(graph):
        raise DomainError("decision procedure needs a triangle-free graph")
    if graph.min_degree() < 2:
        raise DomainError("decision procedure needs minimum degree at least 2")
    cert = is_bad(graph, labeling)
    if cert is None:
        raise DomainError("labeling is not a badness certificate; no positive solution available")
    weighting = construct_equistarable_weights(graph, cert)
    reports = forced_subsets(graph, labeling, max_bits=max_bits)
    refuting = [r for r in reports if r.refutes_strong]
    witness = refuting[0] if refuting else None
    return StrongEquistarabilityDecision(witness is None, weighting, tuple(reports), witness)


def equistarable_by_forced_values(reports) -> bool:
    """Cross-check: given a positive solution, equistarable iff no non-star subset is forced to 1."""
    return not any(not r.is_star and r.value == 1 for r in reports)
