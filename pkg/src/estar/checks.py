"""One entry point per graph property, each returning a status and a certificate.

Status ``0`` means the property holds, ``1`` that it fails, and ``2`` that the
instance is outside the enumeration caps.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import certificates as certs
from .bridge import decide_strongly_equistable_small, root_positive_solution, stable_set_rows, verify_equistable
from .combinatorics import all_strong_cliques, is_general_partition_via_strong_cliques, is_k_extendable
from .engine import (
    ForcedSubsetReport,
    construct_equistarable_weights,
    decide_strong_equistarability,
    find_bad_labeling,
    hamiltonian_cycles,
    subset_verdict,
    uncovered_pairs,
    verify_equistarable,
)
from .errors import ResourceLimitError
from .graph import EdgeSubset, Graph, HamiltonianLabeling, is_triangle_free, iter_bits, maximal_star_masks
from .limits import DEFAULT_MAX_EDGES, DEFAULT_MAX_VERTICES, MAX_HAMILTONIAN_ORDER
from .rowsystem import decide_rows, first_forced_non_row, forced_scan, positive_row_solution

PROPERTIES = (
    "bad",
    "equistarable",
    "strongly-equistarable",
    "equistable",
    "strongly-equistable",
    "general-partition",
    "strong-clique",
    "2-extendable",
)
FACTS = ("general-partition", "strong-clique", "2-extendable")


@dataclass(frozen=True)
class CheckResult:
    status: int
    message: str
    certificate: dict | None = None


@dataclass(frozen=True)
class Caps:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_edges: int = DEFAULT_MAX_EDGES
    max_bits: int | None = None


def evaluate_fact(graph: Graph, prop: str) -> tuple[bool, list]:
    """Decide a purely combinatorial property; the witness lists strong cliques where relevant."""
    if prop == "general-partition":
        holds = is_general_partition_via_strong_cliques(graph)
        return holds, [q.ids() for q in all_strong_cliques(graph)] if holds else []
    if prop == "strong-clique":
        cliques = all_strong_cliques(graph)
        return bool(cliques), cliques[0].ids() if cliques else []
    if prop == "2-extendable":
        return is_k_extendable(graph, 2), []
    raise ValueError(f"unknown fact {prop!r}")


def _edges(graph: Graph, mask: int, base: int) -> list[list[int]]:
    return [[u + base, v + base] for u, v in (graph.edges[e] for e in iter_bits(mask))]


def _check_bad(graph: Graph, base: int) -> CheckResult:
    if graph.n % 2 == 0:
        return CheckResult(1, f"not bad: order {graph.n} is even")
    cert = find_bad_labeling(graph)
    if cert is not None:
        return CheckResult(0, f"bad: {len(cert.witnesses)} disjoint cycle-edge pairs witnessed",
                           certs.badness_to_json(cert, base))
    first = next(hamiltonian_cycles(graph), None)
    if first is None:
        return CheckResult(1, "not bad: no Hamiltonian cycle")
    labeling = HamiltonianLabeling.from_order(graph, first)
    e, e2 = uncovered_pairs(graph, labeling)[0]
    pair = _edges(graph, (1 << e) | (1 << e2), base)
    return CheckResult(1, f"not bad: no Hamiltonian cycle is bad; on {[v + base for v in first]} "
                          f"the pair {pair[0]}, {pair[1]} has no witness chord")


def _bad_certificate(graph: Graph):
    if graph.n % 2 == 0 or graph.n > MAX_HAMILTONIAN_ORDER:
        return None
    return find_bad_labeling(graph)


def _check_equistarable(graph: Graph, caps: Caps, base: int) -> CheckResult:
    if any(graph.degree(v) == 0 for v in range(graph.n)):
        return CheckResult(1, "not equistarable: the graph has an isolated vertex")
    bad = _bad_certificate(graph)
    if bad is not None:
        weighting = construct_equistarable_weights(graph, bad)
        check = verify_equistarable(graph, weighting, max_bits=caps.max_bits)
        if not check:
            raise AssertionError(f"constructed weighting failed verification: {check.reason}")
        return CheckResult(0, "equistarable: bad graph, exact weighting verified",
                           certs.equistarable_to_json(weighting, base))
    decision = decide_rows(maximal_star_masks(graph), graph.m, max_bits=caps.max_bits)
    if not decision.holds:
        detail = decision.reason
        if decision.forced is not None:
            detail = f"edge set {_edges(graph, decision.forced, base)} is forced to total 1"
        return CheckResult(1, f"not equistarable: {detail}")
    check = verify_equistarable(graph, decision.weights, max_bits=caps.max_bits)
    if not check:
        raise AssertionError(f"combined weighting failed verification: {check.reason}")
    return CheckResult(0, "equistarable: exact weighting verified",
                       certs.edge_weights_to_json(certs.EdgeWeightClaim(graph, decision.weights), base))


def _check_strongly_equistarable(graph: Graph, caps: Caps, base: int) -> CheckResult:
    bad = _bad_certificate(graph)
    if bad is not None and is_triangle_free(graph) and graph.min_degree() >= 2:
        decision = decide_strong_equistarability(graph, bad.labeling, max_bits=caps.max_bits)
        claim = certs.strong_claim(decision)
    else:
        rows = maximal_star_masks(graph)
        positive = None if bad is None else construct_equistarable_weights(graph, bad).concrete()
        positive = positive or positive_row_solution(rows, graph.m)
        if positive is None:
            claim = certs.StrongClaim(graph, "NotStronglyEquistarable", None, None, 0)
        else:
            scan = forced_scan(rows, graph.m, max_bits=caps.max_bits)
            hit = first_forced_non_row(scan, rows, positive, at_most=True)
            report = None
            if hit is not None:
                mask, value = hit
                report = ForcedSubsetReport(EdgeSubset(mask), value, False, subset_verdict(False, value))
            verdict = "StronglyEquistarable" if hit is None else "NotStronglyEquistarable"
            claim = certs.StrongClaim(graph, verdict, tuple(positive), report, len(scan.masks))
    doc = certs.strong_to_json(claim, base)
    if claim.verdict == "StronglyEquistarable":
        return CheckResult(0, f"strongly equistarable: {claim.forced_count} forced subsets, none refutes", doc)
    if claim.weights is None:
        return CheckResult(1, "not strongly equistarable: no positive weighting gives every maximal star total 1", doc)
    report = claim.forced_subset
    return CheckResult(1, f"not strongly equistarable: edge set {_edges(graph, report.subset.mask, base)} "
                          f"is forced to {report.value}", doc)


def _check_equistable(graph: Graph, caps: Caps) -> CheckResult:
    rows = stable_set_rows(graph, caps.max_vertices)
    decision = decide_rows(rows, graph.n, root_positive_solution(graph), max_bits=caps.max_bits)
    if not decision.holds:
        detail = decision.reason
        if decision.forced is not None:
            detail = f"vertex set {list(iter_bits(decision.forced))} is forced to total 1"
        return CheckResult(1, f"not equistable: {detail}")
    check = verify_equistable(graph, decision.weights, max_bits=caps.max_bits)
    if not check:
        raise AssertionError(f"combined weighting failed verification: {check.reason}")
    return CheckResult(0, "equistable: exact weighting verified",
                       certs.equistable_to_json(certs.EquistableClaim(graph, decision.weights)))


def _check_strongly_equistable(graph: Graph, caps: Caps) -> CheckResult:
    decision = decide_strongly_equistable_small(graph, max_bits=caps.max_bits)
    claim = certs.VertexStrongClaim(graph, decision.verdict, decision.positive, decision.witness, decision.gamma,
                                    decision.forced_count)
    doc = certs.vertex_strong_to_json(claim)
    if decision.verdict == "StronglyEquistable":
        return CheckResult(0, f"strongly equistable: {decision.forced_count} forced subsets, none refutes", doc)
    if decision.witness is None:
        return CheckResult(1, f"not strongly equistable: {decision.diagnosis}", doc)
    return CheckResult(1, f"not strongly equistable: vertex set {list(iter_bits(decision.witness))} "
                          f"is forced to {decision.gamma}", doc)


def check_property(graph: Graph, prop: str, caps: Caps | None = None, label_base: int = 0) -> CheckResult:
    caps = caps or Caps()
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")
    if graph.n > caps.max_vertices:
        return CheckResult(2, f"undecided: {graph.n} vertices exceed the cap {caps.max_vertices}")
    if graph.m > caps.max_edges:
        return CheckResult(2, f"undecided: {graph.m} edges exceed the cap {caps.max_edges}")
    try:
        if prop == "bad":
            return _check_bad(graph, label_base)
        if prop == "equistarable":
            return _check_equistarable(graph, caps, label_base)
        if prop == "strongly-equistarable":
            return _check_strongly_equistarable(graph, caps, label_base)
        if prop == "equistable":
            return _check_equistable(graph, caps)
        if prop == "strongly-equistable":
            return _check_strongly_equistable(graph, caps)
        holds, witness = evaluate_fact(graph, prop)
        doc = certs.fact_to_json(certs.FactClaim(graph, prop, holds, witness))
        return CheckResult(0 if holds else 1, f"{prop}: {'holds' if holds else 'fails'}", doc)
    except ResourceLimitError as exc:
        return CheckResult(2, f"undecided: {exc}")
