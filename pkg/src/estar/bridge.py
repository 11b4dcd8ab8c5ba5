"""From edge weights on a triangle-free graph to vertex weights on the
complement of its line graph, and the conclusions that follow there.

For triangle-free ``G`` the maximal stable sets of ``H = co-L(G)`` are exactly
the stars of ``G`` (vertex ``i`` of ``H`` is edge ``i`` of ``G``), its cliques
are matchings, and its strong cliques are the perfect matchings of ``G`` when
``G`` has minimum degree at least 2.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import (
    all_strong_cliques,
    enumerate_maximal_stable_sets,
    has_k_matching,
    has_perfect_matching,
    is_general_partition_via_strong_cliques,
    is_k_extendable,
)
from .engine import (
    BadnessCertificate,
    ForcedSubsetReport,
    SubsetCheck,
    SymbolicEdgeWeighting,
    construct_equistarable_weights,
    decide_strong_equistarability,
    find_bad_labeling,
    is_bad,
)
from .errors import DomainError, ResourceLimitError
from .graph import Graph, HamiltonianLabeling, VertexSubset, build_graph, complement, is_triangle_free, iter_bits, line_graph
from .kernel import constraint_kernel, kernel_basis_from_chords, orthogonal_masks
from .limits import MAX_HAMILTONIAN_ORDER, MAX_STABLE_ROWS
from .linalg import SymbolicValue, particular_solution
from . import rowsystem
from .rowsystem import CombinerResult, positive_row_solution
from .subsets import check_bits, pack, scan_equal


@dataclass(frozen=True)
class VertexWeighting:
    graph: Graph
    values: tuple  # Fractions, or SymbolicValues together with ``alpha``
    alpha: tuple[Fraction, ...] | None = None

    def concrete(self) -> tuple[Fraction, ...]:
        if self.alpha is None:
            return tuple(Fraction(v) for v in self.values)
        return tuple(v.instantiate(self.alpha) for v in self.values)


def line_complement(graph: Graph) -> Graph:
    return complement(line_graph(graph)[0])


def equistarable_to_equistable(
    graph: Graph, weighting: SymbolicEdgeWeighting | Sequence
) -> tuple[Graph, VertexWeighting]:
    if not is_triangle_free(graph):
        raise DomainError("transport to the line-graph complement needs a triangle-free graph")
    if any(graph.degree(v) == 0 for v in range(graph.n)):
        raise DomainError("graph has an isolated vertex")
    lg, edge_to_vertex = line_graph(graph)
    h = complement(lg)
    if isinstance(weighting, SymbolicEdgeWeighting):
        values, alpha = weighting.values, weighting.alpha
    else:
        values, alpha = tuple(weighting), None
    moved = [None] * h.n
    for e, v in edge_to_vertex.items():
        moved[v] = values[e]
    return h, VertexWeighting(h, tuple(moved), alpha)


def stable_set_rows(graph: Graph, max_vertices: int | None = None) -> list[int]:
    kwargs = {} if max_vertices is None else {"max_vertices": max_vertices}
    rows = [s.mask for s in enumerate_maximal_stable_sets(graph, **kwargs)]
    if len(rows) > MAX_STABLE_ROWS:
        raise ResourceLimitError(f"{len(rows)} maximal stable sets exceed the row cap {MAX_STABLE_ROWS}")
    return rows


def verify_equistable(
    graph: Graph, weighting: VertexWeighting | Sequence, *, max_bits: int | None = None
) -> SubsetCheck:
    """Exhaustively check that exactly the maximal stable sets have total 1."""
    check_bits(graph.n, max_bits, "equistability scan")
    if not isinstance(weighting, VertexWeighting):
        weighting = VertexWeighting(graph, tuple(weighting))
    values = list(weighting.values)
    if len(values) != graph.n:
        raise DomainError(f"expected {graph.n} vertex weights, got {len(values)}")
    for v, x in enumerate(weighting.concrete()):
        if x <= 0:
            return SubsetCheck(False, 1 << v, f"weight of vertex {v} is {x}, not positive")
    if isinstance(values[0], SymbolicValue):
        arity = values[0].arity
        zero, one = SymbolicValue.constant(0, arity), SymbolicValue.constant(1, arity)
    else:
        values = [Fraction(x) for x in values]
        zero, one = Fraction(0), Fraction(1)
    packed, (target,) = pack(values, [one])
    rows = stable_set_rows(graph)
    for s in rows:
        if sum(packed[v] for v in iter_bits(s)) != target:
            total = sum((values[v] for v in iter_bits(s)), zero)
            return SubsetCheck(False, s, f"maximal stable set {list(iter_bits(s))} has total {total}, not 1")
    row_set = set(rows)
    bad = [mask for mask in scan_equal(packed, target) if mask not in row_set]
    if bad:
        first = min(bad)
        return SubsetCheck(False, first, f"vertex set {list(iter_bits(first))} is not maximal stable but has total 1")
    return SubsetCheck(True)


def star_root(graph: Graph) -> Graph | None:
    """Recover triangle-free ``G`` with ``graph == co-L(G)``, keeping edge ids = vertex ids.

    Works when every vertex lies in exactly two maximal stable sets (the two
    stars at the ends of the corresponding edge); returns ``None`` otherwise.
    """
    if graph.n == 0:
        return None
    rows = stable_set_rows(graph)
    ends = []
    for v in range(graph.n):
        hit = [i for i, s in enumerate(rows) if s >> v & 1]
        if len(hit) != 2:
            return None
        ends.append(tuple(hit))
    try:
        root = build_graph(len(rows), ends)
    except ValueError:
        return None
    if not is_triangle_free(root) or line_complement(root).edges != graph.edges:
        return None
    return root


# --- vertex-side strong equistability ------------------------------------------


@dataclass(frozen=True)
class StrongEquistabilityDecision:
    verdict: str  # StronglyEquistable | NotStronglyEquistable | Undecided
    positive: tuple[Fraction, ...] | None
    witness: int | None = None
    gamma: Fraction | None = None
    forced_count: int = 0
    diagnosis: str = ""


def _row_matrix(rows: list[int], n: int) -> list[list[int]]:
    return [[r >> v & 1 for v in range(n)] for r in rows]


def root_positive_solution(graph: Graph) -> tuple[Fraction, ...] | None:
    root = star_root(graph)
    if root is None or root.n % 2 == 0 or root.n > MAX_HAMILTONIAN_ORDER:
        return None
    cert = find_bad_labeling(root)
    if cert is None:
        return None
    return construct_equistarable_weights(root, cert).concrete()


def decide_strongly_equistable_small(
    graph: Graph, positive: Sequence[Fraction] | None = None, *, max_bits: int | None = None
) -> StrongEquistabilityDecision:
    """Strong equistability through forced totals of the maximal-stable-set system."""
    check_bits(graph.n, max_bits, "strong-equistability scan")
    rows = stable_set_rows(graph)
    matrix = _row_matrix(rows, graph.n)
    ones = [1] * len(rows)
    if positive is None:
        positive = root_positive_solution(graph) or positive_row_solution(rows, graph.n)
        if positive is None:
            return StrongEquistabilityDecision(
                "NotStronglyEquistable", None, diagnosis="no strictly positive weighting gives every maximal stable set total 1"
            )
    positive = tuple(Fraction(x) for x in positive)
    if any(x <= 0 for x in positive) or any(sum(positive[v] for v in iter_bits(r)) != 1 for r in rows):
        raise DomainError("supplied weighting is not a positive solution of the stable-set system")
    if particular_solution(matrix, ones) is None:
        raise AssertionError("positive solution exists but elimination found the system inconsistent")

    forced = orthogonal_masks(constraint_kernel(rows, graph.n), graph.n)
    row_set = set(rows)
    for mask in forced:
        if mask in row_set:
            continue
        value = sum((positive[v] for v in iter_bits(mask)), Fraction(0))
        if value <= 1:
            return StrongEquistabilityDecision("NotStronglyEquistable", positive, mask, value, len(forced))
    return StrongEquistabilityDecision("StronglyEquistable", positive, forced_count=len(forced))


def vertex_forced_value(graph: Graph, positive: Sequence[Fraction], mask: int) -> Fraction | None:
    """Total of ``mask`` shared by every solution of the stable-set system, if constant."""
    rows = stable_set_rows(graph)
    for vec in constraint_kernel(rows, graph.n):
        if sum(vec[v] for v in iter_bits(mask)):
            return None
    return sum((Fraction(positive[v]) for v in iter_bits(mask)), Fraction(0))


# --- the combiner turning a strongly equistable family into an equistable weighting


Family = Callable[[VertexSubset], Sequence[Fraction]] | Mapping


def perturbation_family(
    graph: Graph, base: Sequence[Fraction], kernel: Sequence[Sequence[int]] | None = None
) -> Callable[[VertexSubset], list[Fraction]]:
    """For each vertex subset T, a positive solution whose total on T is not 1."""
    rows = stable_set_rows(graph)
    if kernel is None:
        kernel = constraint_kernel(rows, graph.n)
    member = rowsystem.perturbation_family(rows, base, kernel)
    return lambda subset: member(subset.mask)


def strongly_equistable_to_equistable(
    graph: Graph, family: Family, start: Sequence[Fraction], *, max_bits: int | None = None
) -> CombinerResult:
    """Turn a family of positive solutions, one avoiding total 1 on each vertex set,
    into a single equistable weighting, and verify it."""
    rows = stable_set_rows(graph)
    if isinstance(family, Mapping):
        by_mask = {(k.mask if isinstance(k, VertexSubset) else k): v for k, v in family.items()}
    else:
        def by_mask(mask):
            return family(VertexSubset(mask))
    result = rowsystem.combine(rows, graph.n, by_mask, start, max_bits=max_bits)
    check = verify_equistable(graph, result.weights, max_bits=max_bits)
    if not check:
        raise AssertionError(f"combiner output failed verification: {check.reason}")
    return result


# --- conjecture certificates ----------------------------------------------------

NO_STRONG_CLIQUE = "NoStrongClique"
GP_NEQ_EQ = "GeneralPartition≠Equistable"
SE_NEQ_EQ = "StronglyEquistable≠Equistable"
GP_NEQ_SE = "GeneralPartition≠StronglyEquistable"
CONJECTURES = (GP_NEQ_EQ, SE_NEQ_EQ, GP_NEQ_SE, NO_STRONG_CLIQUE)


@dataclass(frozen=True)
class MatchingFacts:
    root_order: int
    has_perfect_matching: bool
    has_two_matching: bool
    two_extendable: bool
    strong_cliques: int
    general_partition: bool


@dataclass(frozen=True)
class ConjectureCertificate:
    conjecture: str
    root: Graph
    derived: Graph
    weighting: SymbolicEdgeWeighting
    badness: BadnessCertificate
    matching: MatchingFacts
    forced_subset: ForcedSubsetReport | None = None
    strongly_equistable: bool | None = None
    label_base: int = 0


def matching_facts(root: Graph, derived: Graph) -> MatchingFacts:
    return MatchingFacts(
        root_order=root.n,
        has_perfect_matching=has_perfect_matching(root) is not None,
        has_two_matching=has_k_matching(root, 2),
        two_extendable=is_k_extendable(root, 2),
        strong_cliques=len(all_strong_cliques(derived)),
        general_partition=is_general_partition_via_strong_cliques(derived),
    )


def _bad_labeling(graph: Graph, labeling: HamiltonianLabeling | None) -> BadnessCertificate:
    if not is_triangle_free(graph):
        raise DomainError("root graph must be triangle-free")
    if graph.n % 2 == 0:
        raise DomainError("root graph must have odd order")
    cert = find_bad_labeling(graph) if labeling is None else is_bad(graph, labeling)
    if cert is None:
        raise DomainError("root graph is not bad")
    return cert


def _equistable_core(graph: Graph, cert: BadnessCertificate, max_bits: int | None):
    weighting = construct_equistarable_weights(graph, cert)
    h, moved = equistarable_to_equistable(graph, weighting)
    check = verify_equistable(h, moved, max_bits=max_bits)
    if not check:
        raise AssertionError(f"transported weighting is not equistable: {check.reason}")
    concrete = verify_equistable(h, moved.concrete(), max_bits=max_bits)
    if not concrete:
        raise AssertionError(f"instantiated weighting is not equistable: {concrete.reason}")
    return weighting, h


def check_no_strong_clique_conclusion(
    graph: Graph,
    labeling: HamiltonianLabeling | None = None,
    *,
    label_base: int = 0,
    max_bits: int | None = None,
) -> ConjectureCertificate:
    cert = _bad_labeling(graph, labeling)
    weighting, h = _equistable_core(graph, cert, max_bits)
    facts = matching_facts(graph, h)
    if facts.has_perfect_matching or facts.strong_cliques or facts.general_partition:
        raise AssertionError("odd-order bad root unexpectedly has a perfect matching or strong clique")
    return ConjectureCertificate(NO_STRONG_CLIQUE, graph, h, weighting, cert, facts, label_base=label_base)


def conjecture_certificates(
    graph: Graph,
    labeling: HamiltonianLabeling | None = None,
    *,
    label_base: int = 0,
    max_bits: int | None = None,
) -> list[ConjectureCertificate]:
    """Every conjecture the complement of the line graph of ``graph`` refutes."""
    base = check_no_strong_clique_conclusion(graph, labeling, label_base=label_base, max_bits=max_bits)
    out = [base, ConjectureCertificate(GP_NEQ_EQ, **_shared(base))]
    decision = decide_strong_equistarability(graph, base.badness.labeling, max_bits=max_bits)
    if decision.strongly_equistarable:
        out.append(ConjectureCertificate(GP_NEQ_SE, **_shared(base), strongly_equistable=True))
    else:
        out.append(
            ConjectureCertificate(SE_NEQ_EQ, **_shared(base), forced_subset=decision.witness, strongly_equistable=False)
        )
    return out


def _shared(cert: ConjectureCertificate) -> dict:
    return dict(
        root=cert.root,
        derived=cert.derived,
        weighting=cert.weighting,
        badness=cert.badness,
        matching=cert.matching,
        label_base=cert.label_base,
    )


def transported_chord_kernel(graph: Graph, labeling: HamiltonianLabeling) -> list[tuple[int, ...]]:
    """Chord basis of the star system, read as vertex vectors on co-L(graph)."""
    return list(kernel_basis_from_chords(graph, labeling).vectors)
