"""JSON certificates and their independent re-verification.

Rationals are ``"p/q"`` strings, key order is fixed, and nothing is stored as a
float. A verifier rebuilds every claim from the graph and the weights alone:
kernels come from generic elimination rather than from the chord basis that
produced the certificate, and every subset claim is rescanned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .bridge import (
    CONJECTURES,
    GP_NEQ_EQ,
    GP_NEQ_SE,
    NO_STRONG_CLIQUE,
    SE_NEQ_EQ,
    ConjectureCertificate,
    MatchingFacts,
    decide_strongly_equistable_small,
    line_complement,
    matching_facts,
    stable_set_rows,
    verify_equistable,
    vertex_forced_value,
)
from .combinatorics import all_strong_cliques, is_general_partition_via_strong_cliques
from .engine import (
    BadnessCertificate,
    ChordClass,
    ForcedSubsetReport,
    StrongEquistarabilityDecision,
    SymbolicEdgeWeighting,
    Witness,
    alpha_values,
    classify_chord,
    disjoint_cycle_pairs,
    relation_bound,
    subset_verdict,
    verify_equistarable,
)
from .errors import EstarError, InputError
from .graph import EdgeSubset, Graph, HamiltonianLabeling, build_graph, is_triangle_free, iter_bits, maximal_star_masks
from .kernel import constraint_kernel, orthogonal_masks
from .linalg import SymbolicValue, format_rational, frac, instantiate
from .rowsystem import positive_row_solution, total
from .subsets import check_bits

VERIFIER_VERSION = f"estar-{__version__}"


# --- small pieces ----------------------------------------------------------------


def graph_to_json(graph: Graph, label_base: int = 0) -> dict:
    return {
        "n": graph.n,
        "label_base": label_base,
        "edges": [[u + label_base, v + label_base] for u, v in graph.edges],
    }


def graph_from_json(data: dict) -> tuple[Graph, int]:
    try:
        base = int(data.get("label_base", 0))
        return build_graph(int(data["n"]), [(u - base, v - base) for u, v in data["edges"]]), base
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph: {exc}") from None


def _edge_pair(graph: Graph, edge_id: int, base: int) -> list[int]:
    u, v = graph.edges[edge_id]
    return [u + base, v + base]


def _edge_id(graph: Graph, pair, base: int) -> int:
    return graph.edge_id(pair[0] - base, pair[1] - base)


def _rationals(values) -> list[str]:
    return [format_rational(Fraction(x)) for x in values]


def _labeling_from_json(graph: Graph, labels, base: int) -> HamiltonianLabeling:
    return HamiltonianLabeling.from_order(graph, [x - base for x in labels])


# --- badness -------------------------------------------------------------------------


def badness_section(cert: BadnessCertificate, base: int) -> dict:
    g = cert.graph
    return {
        "labeling": [v + base for v in cert.labeling.order],
        "witnesses": [
            {
                "pair": [_edge_pair(g, pair[0], base), _edge_pair(g, pair[1], base)],
                "chord": _edge_pair(g, w.chord, base),
                "class": w.classification.kind.value,
            }
            for pair, w in sorted(cert.witnesses.items())
        ],
    }


def badness_from_section(graph: Graph, data: dict, base: int) -> BadnessCertificate:
    labeling = _labeling_from_json(graph, data["labeling"], base)
    witnesses = {}
    for item in data["witnesses"]:
        e, e2 = (_edge_id(graph, p, base) for p in item["pair"])
        chord = _edge_id(graph, item["chord"], base)
        witnesses[(min(e, e2), max(e, e2))] = Witness(chord, classify_chord(graph, labeling, e, e2, chord))
    return BadnessCertificate(graph, labeling, witnesses)


def badness_to_json(cert: BadnessCertificate, base: int = 0) -> dict:
    return {"type": "badness", "graph": graph_to_json(cert.graph, base), **badness_section(cert, base),
            "verifier_version": VERIFIER_VERSION}


# --- equistarable weightings ---------------------------------------------------------


def weighting_section(w: SymbolicEdgeWeighting, base: int) -> dict:
    return {
        "labeling": [v + base for v in w.labeling.order],
        "epsilon": format_rational(w.epsilon),
        "base": w.base,
        "symbolic": [v.to_json() for v in w.values],
        "weights": _rationals(w.concrete()),
    }


def weighting_from_section(graph: Graph, data: dict, base: int) -> SymbolicEdgeWeighting:
    labeling = _labeling_from_json(graph, data["labeling"], base)
    values = tuple(SymbolicValue.from_json(v) for v in data["symbolic"])
    epsilon = frac(data["epsilon"])
    b = int(data["base"])
    return SymbolicEdgeWeighting(graph, labeling, values, epsilon, b, alpha_values(epsilon, b, len(labeling.chords)))


def equistarable_to_json(w: SymbolicEdgeWeighting, base: int = 0) -> dict:
    return {"type": "equistarable", "graph": graph_to_json(w.graph, base), **weighting_section(w, base),
            "verifier_version": VERIFIER_VERSION}


@dataclass(frozen=True)
class EdgeWeightClaim:
    """An exact edge weighting claimed equistarable, with no symbolic derivation."""

    graph: Graph
    weights: tuple[Fraction, ...]


def edge_weights_to_json(claim: EdgeWeightClaim, base: int = 0) -> dict:
    return {"type": "equistarable", "graph": graph_to_json(claim.graph, base), "weights": _rationals(claim.weights),
            "verifier_version": VERIFIER_VERSION}


# --- strong equistarability (edge side) ----------------------------------------------


@dataclass(frozen=True)
class StrongClaim:
    """What a strong-equistarability certificate asserts, without the full scan."""

    graph: Graph
    verdict: str
    weights: tuple[Fraction, ...] | None  # None when no positive solution exists
    forced_subset: ForcedSubsetReport | None
    forced_count: int


def strong_claim(decision: StrongEquistarabilityDecision) -> StrongClaim:
    return StrongClaim(
        decision.weighting.graph,
        decision.verdict,
        decision.weighting.concrete(),
        decision.witness,
        len(decision.forced),
    )


def forced_section(graph: Graph, report: ForcedSubsetReport, base: int) -> dict:
    return {
        "edges": [_edge_pair(graph, e, base) for e in report.subset.ids()],
        "vertices": report.subset.ids(),
        "value": format_rational(report.value),
    }


def forced_from_section(graph: Graph, data: dict, base: int) -> ForcedSubsetReport:
    mask = 0
    for pair in data["edges"]:
        mask |= 1 << _edge_id(graph, pair, base)
    value = frac(data["value"])
    is_star = mask in maximal_star_masks(graph)
    return ForcedSubsetReport(EdgeSubset(mask), value, is_star, subset_verdict(is_star, value))


def strong_to_json(claim: StrongClaim, base: int = 0) -> dict:
    return {
        "type": "strong-equistarability",
        "graph": graph_to_json(claim.graph, base),
        "verdict": claim.verdict,
        "weights": None if claim.weights is None else _rationals(claim.weights),
        "forced_subset": None if claim.forced_subset is None else forced_section(claim.graph, claim.forced_subset, base),
        "forced_count": claim.forced_count,
        "verifier_version": VERIFIER_VERSION,
    }


# --- vertex-side documents ---------------------------------------------------------


@dataclass(frozen=True)
class EquistableClaim:
    graph: Graph
    weights: tuple[Fraction, ...]


def equistable_to_json(claim: EquistableClaim) -> dict:
    return {"type": "equistable", "graph": graph_to_json(claim.graph), "weights": _rationals(claim.weights),
            "verifier_version": VERIFIER_VERSION}


@dataclass(frozen=True)
class VertexStrongClaim:
    graph: Graph
    verdict: str
    weights: tuple[Fraction, ...] | None
    witness: int | None
    gamma: Fraction | None
    forced_count: int


def vertex_strong_to_json(claim: VertexStrongClaim) -> dict:
    forced = None
    if claim.witness is not None:
        forced = {"vertices": list(iter_bits(claim.witness)), "value": format_rational(claim.gamma)}
    return {
        "type": "strong-equistability",
        "graph": graph_to_json(claim.graph),
        "verdict": claim.verdict,
        "weights": None if claim.weights is None else _rationals(claim.weights),
        "forced_subset": forced,
        "forced_count": claim.forced_count,
        "verifier_version": VERIFIER_VERSION,
    }


@dataclass(frozen=True)
class FactClaim:
    """A yes/no combinatorial property, recomputed from scratch on verification."""

    graph: Graph
    prop: str
    holds: bool
    witness: list = field(default_factory=list)


def fact_to_json(claim: FactClaim) -> dict:
    return {"type": "fact", "property": claim.prop, "graph": graph_to_json(claim.graph), "holds": claim.holds,
            "witness": claim.witness, "verifier_version": VERIFIER_VERSION}


# --- conjecture certificates ---------------------------------------------------------


def _facts_json(f: MatchingFacts) -> dict:
    return {
        "root_order": f.root_order,
        "has_perfect_matching": f.has_perfect_matching,
        "has_two_matching": f.has_two_matching,
        "two_extendable": f.two_extendable,
        "strong_cliques": f.strong_cliques,
        "general_partition": f.general_partition,
    }


def conjecture_to_json(cert: ConjectureCertificate) -> dict:
    base = cert.label_base
    out = {
        "type": "conjecture",
        "conjecture": cert.conjecture,
        "root_graph": graph_to_json(cert.root, base),
        "derived_graph": graph_to_json(cert.derived),
        "weighting": weighting_section(cert.weighting, base),
    }
    if cert.forced_subset is not None:
        out["forced_subset"] = forced_section(cert.root, cert.forced_subset, base)
    out["badness"] = badness_section(cert.badness, base)
    out["matching_facts"] = _facts_json(cert.matching)
    if cert.strongly_equistable is not None:
        out["strongly_equistable"] = cert.strongly_equistable
    out["verifier_version"] = VERIFIER_VERSION
    return out


def conjecture_from_json(data: dict) -> ConjectureCertificate:
    root, base = graph_from_json(data["root_graph"])
    derived, _ = graph_from_json(data["derived_graph"])
    forced = data.get("forced_subset")
    return ConjectureCertificate(
        conjecture=data["conjecture"],
        root=root,
        derived=derived,
        weighting=weighting_from_section(root, data["weighting"], base),
        badness=badness_from_section(root, data["badness"], base),
        matching=MatchingFacts(**data["matching_facts"]),
        forced_subset=None if forced is None else forced_from_section(root, forced, base),
        strongly_equistable=data.get("strongly_equistable"),
        label_base=base,
    )


# --- generic entry points --------------------------------------------------------------


def to_json(obj, label_base: int = 0) -> dict:
    if isinstance(obj, ConjectureCertificate):
        return conjecture_to_json(obj)
    if isinstance(obj, BadnessCertificate):
        return badness_to_json(obj, label_base)
    if isinstance(obj, SymbolicEdgeWeighting):
        return equistarable_to_json(obj, label_base)
    if isinstance(obj, EdgeWeightClaim):
        return edge_weights_to_json(obj, label_base)
    if isinstance(obj, StrongClaim):
        return strong_to_json(obj, label_base)
    if isinstance(obj, EquistableClaim):
        return equistable_to_json(obj)
    if isinstance(obj, VertexStrongClaim):
        return vertex_strong_to_json(obj)
    if isinstance(obj, FactClaim):
        return fact_to_json(obj)
    raise TypeError(f"no certificate form for {type(obj).__name__}")


def _optional_weights(data: dict) -> tuple[Fraction, ...] | None:
    return None if data["weights"] is None else tuple(frac(x) for x in data["weights"])


def from_json(data: dict):
    """Rebuild the certificate object; returns ``(object, label_base)``."""
    kind = data.get("type")
    try:
        if kind == "conjecture":
            cert = conjecture_from_json(data)
            return cert, cert.label_base
        graph, base = graph_from_json(data["graph"])
        if kind == "badness":
            return badness_from_section(graph, data, base), base
        if kind == "equistarable":
            if "labeling" not in data:
                return EdgeWeightClaim(graph, tuple(frac(x) for x in data["weights"])), base
            return weighting_from_section(graph, data, base), base
        if kind == "strong-equistarability":
            forced = data["forced_subset"]
            report = None if forced is None else forced_from_section(graph, forced, base)
            return StrongClaim(graph, data["verdict"], _optional_weights(data), report, int(data["forced_count"])), base
        if kind == "equistable":
            return EquistableClaim(graph, tuple(frac(x) for x in data["weights"])), base
        if kind == "strong-equistability":
            forced = data["forced_subset"]
            witness = None if forced is None else sum(1 << v for v in forced["vertices"])
            gamma = None if forced is None else frac(forced["value"])
            return VertexStrongClaim(graph, data["verdict"], _optional_weights(data), witness, gamma,
                                     int(data["forced_count"])), base
        if kind == "fact":
            return FactClaim(graph, data["property"], bool(data["holds"]), list(data["witness"])), base
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed {kind} certificate: missing or bad field {exc}") from None
    raise InputError(f"unknown certificate type {kind!r}")


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def roundtrip(text: str) -> str:
    """Parse a certificate and serialize it again."""
    data = json.loads(text)
    if data.get("type") == "gallery":
        out = dict(data)
        out["certificates"] = [to_json(*from_json(c)) for c in data["certificates"]]
        return dumps(out)
    obj, base = from_json(data)
    return dumps(to_json(obj, base))


# --- verification -----------------------------------------------------------------


@dataclass
class Verification:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((name, bool(ok), detail))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[str]:
        return [f"{name}: {detail}" if detail else name for name, ok, detail in self.checks if not ok]

    def extend(self, other: Verification, prefix: str) -> None:
        self.checks.extend((f"{prefix}{name}", ok, detail) for name, ok, detail in other.checks)


def _verify_badness(graph: Graph, data: dict, base: int) -> Verification:
    out = Verification()
    if not out.check("odd order", graph.n % 2 == 1, f"n={graph.n}"):
        return out
    labeling = _labeling_from_json(graph, data["labeling"], base)
    recorded = {}
    for item in data["witnesses"]:
        e, e2 = (_edge_id(graph, p, base) for p in item["pair"])
        recorded[(min(e, e2), max(e, e2))] = (_edge_id(graph, item["chord"], base), item["class"])
    pairs = disjoint_cycle_pairs(labeling)
    out.check("witness pairs are exactly the disjoint cycle-edge pairs", set(recorded) == set(pairs),
              f"{len(recorded)} recorded, {len(pairs)} expected")
    for pair in pairs:
        if pair not in recorded:
            continue
        chord, claimed = recorded[pair]
        got = classify_chord(graph, labeling, pair[0], pair[1], chord).kind
        label = f"witness for {_edge_pair(graph, pair[0], base)},{_edge_pair(graph, pair[1], base)}"
        out.check(label, got.is_witness and got.value == claimed, f"claimed {claimed}, recomputed {got.value}")
    return out


def _verify_weighting(graph: Graph, data: dict, base: int) -> tuple[Verification, list[Fraction]]:
    out = Verification()
    weights = [frac(x) for x in data["weights"]]
    if not out.check("one weight per edge", len(weights) == graph.m, f"{len(weights)} for m={graph.m}"):
        return out, weights
    out.check("weights positive", all(x > 0 for x in weights))
    for v in range(graph.n):
        s = graph.incident_edges(v)
        if s in maximal_star_masks(graph):
            t = sum((weights[e] for e in iter_bits(s)), Fraction(0))
            out.check(f"star sum at vertex {v + base}", t == 1, f"total {t}")
    if "labeling" not in data:
        if out.ok:
            con = verify_equistarable(graph, weights)
            out.check("exact exhaustive scan", con.ok, con.reason)
        return out, weights
    w = weighting_from_section(graph, data, base)
    r = len(w.labeling.chords)
    out.check("symbol base is 8m+1", w.base == 8 * graph.m + 1, f"base {w.base}")
    out.check("epsilon in (0, 1/(3r))", 0 < w.epsilon and (r == 0 or w.epsilon < Fraction(1, 3 * r)), str(w.epsilon))
    for i, f in enumerate(w.labeling.chords):
        out.check(f"chord {_edge_pair(graph, f, base)} carries its own symbol", w.values[f] == SymbolicValue.symbol(i, r))
    one = SymbolicValue.constant(1, r)
    for v in range(graph.n):
        t = sum((w.values[e] for e in iter_bits(graph.incident_edges(v))), SymbolicValue.constant(0, r))
        out.check(f"symbolic star sum at vertex {v + base}", t == one, str(t))
    third, two_thirds = Fraction(1, 3), Fraction(2, 3)
    out.check("cycle weights in (1/3, 2/3)",
              all(third < instantiate(w.values[e], w.alpha) < two_thirds for e in w.labeling.cycle_edges))
    out.check("weights instantiate the symbolic forms", list(w.concrete()) == weights)
    try:
        relation_bound(list(w.values), graph.m)
        out.check("symbol relation coefficients within 4m", True)
    except EstarError as exc:
        out.check("symbol relation coefficients within 4m", False, str(exc))
    if out.ok:
        sym = verify_equistarable(graph, list(w.values), require_positive=False)
        out.check("symbolic exhaustive scan", sym.ok, sym.reason)
        con = verify_equistarable(graph, weights)
        out.check("exact exhaustive scan", con.ok, con.reason)
    return out, weights


def _verify_strong_rows(rows: list[int], ncols: int, data: dict, mask: int | None, strong_name: str,
                        row_name: str) -> Verification:
    """Shared check for both strong documents: rows are maximal stars or maximal stable sets."""
    out = Verification()
    verdict = data["verdict"]
    if data["weights"] is None:
        out.check("no positive solution exists", positive_row_solution(rows, ncols) is None)
        out.check("no forced subset without a positive solution",
                  data["forced_subset"] is None and data["forced_count"] == 0)
        out.check("verdict", verdict == f"Not{strong_name}", verdict)
        return out
    weights = [frac(x) for x in data["weights"]]
    if not out.check("one weight per column", len(weights) == ncols, f"{len(weights)} for {ncols}"):
        return out
    out.check("weights positive", all(x > 0 for x in weights))
    for r in rows:
        t = total(weights, r)
        out.check(f"{row_name} {list(iter_bits(r))} has total 1", t == 1, f"total {t}")
    kernel = constraint_kernel(rows, ncols)
    masks = orthogonal_masks(kernel, ncols)
    claimed_count = int(data["forced_count"])
    out.check("forced-subset count", len(masks) == claimed_count,
              f"claimed {claimed_count}, recomputed {len(masks)}")
    if mask is not None:
        out.check(f"forced subset is not a {row_name}", mask not in rows)
        orth = all(sum(vec[c] for c in iter_bits(mask)) == 0 for vec in kernel)
        out.check("forced subset is orthogonal to the kernel", orth)
        value = total(weights, mask)
        claimed = frac(data["forced_subset"]["value"])
        out.check("forced value", value == claimed, f"claimed {claimed}, recomputed {value}")
        out.check("forced value at most 1", value <= 1, str(value))
        row_set = set(rows)
        first = next((m for m in masks if m not in row_set and total(weights, m) <= 1), None)
        out.check("forced subset is the first refuting one in ascending order", first == mask,
                  "none" if first is None else str(list(iter_bits(first))))
        out.check("verdict", verdict == f"Not{strong_name}", verdict)
    else:
        row_set = set(rows)
        bad = [m for m in masks if m not in row_set and total(weights, m) <= 1]
        out.check(f"no non-{row_name} forced subset of value <= 1", not bad, str([list(iter_bits(m)) for m in bad[:1]]))
        out.check("verdict", verdict == strong_name, verdict)
    return out


def _verify_strong(graph: Graph, data: dict, base: int) -> Verification:
    forced = data["forced_subset"]
    mask = None
    if forced is not None:
        mask = 0
        for pair in forced["edges"]:
            mask |= 1 << _edge_id(graph, pair, base)
    check_bits(graph.m, None, "strong-equistarability verification")
    out = Verification()
    if mask is not None:
        out.check("forced subset vertex ids match its edges", forced["vertices"] == list(iter_bits(mask)),
                  f"{forced['vertices']} for edge ids {list(iter_bits(mask))}")
    out.extend(_verify_strong_rows(maximal_star_masks(graph), graph.m, data, mask, "StronglyEquistarable", "maximal star"), "")
    return out


def _verify_equistable_doc(graph: Graph, data: dict) -> Verification:
    out = Verification()
    weights = [frac(x) for x in data["weights"]]
    check = verify_equistable(graph, weights)
    out.check("exhaustive equistability scan", check.ok, check.reason)
    return out


def _verify_vertex_strong(graph: Graph, data: dict) -> Verification:
    forced = data["forced_subset"]
    mask = None if forced is None else sum(1 << v for v in forced["vertices"])
    check_bits(graph.n, None, "strong-equistability verification")
    return _verify_strong_rows(stable_set_rows(graph), graph.n, data, mask, "StronglyEquistable", "maximal stable set")


def _verify_fact(graph: Graph, data: dict) -> Verification:
    from .checks import evaluate_fact

    out = Verification()
    holds, witness = evaluate_fact(graph, data["property"])
    out.check(f"{data['property']} recomputed", holds == bool(data["holds"]), f"claimed {data['holds']}, recomputed {holds}")
    out.check("witness recomputed", data["witness"] == witness, f"claimed {data['witness']}, recomputed {witness}")
    return out


def _verify_conjecture(data: dict) -> Verification:
    out = Verification()
    tag = data["conjecture"]
    if not out.check("known conjecture tag", tag in CONJECTURES, tag):
        return out
    root, base = graph_from_json(data["root_graph"])
    derived, _ = graph_from_json(data["derived_graph"])
    out.check("root is triangle-free", is_triangle_free(root))
    out.check("derived graph is the complement of the root's line graph", line_complement(root) == derived)
    out.extend(_verify_badness(root, data["badness"], base), "badness: ")
    wcheck, weights = _verify_weighting(root, data["weighting"], base)
    out.extend(wcheck, "root weighting: ")
    out.check("badness and weighting use the same cycle", data["badness"]["labeling"] == data["weighting"]["labeling"])
    if not out.ok:
        return out

    eq = verify_equistable(derived, weights)
    out.check("derived graph equistable (exhaustive)", eq.ok, eq.reason)
    facts = matching_facts(root, derived)
    recorded = data["matching_facts"]
    out.check("matching facts", _facts_json(facts) == recorded, f"recomputed {_facts_json(facts)}")
    out.check("root has no perfect matching", not facts.has_perfect_matching)

    if tag == NO_STRONG_CLIQUE:
        out.check("derived graph has no strong clique", not all_strong_cliques(derived))
    elif tag == GP_NEQ_EQ:
        out.check("derived graph is not general partition", not is_general_partition_via_strong_cliques(derived))
    elif tag == SE_NEQ_EQ:
        forced = data.get("forced_subset")
        if out.check("forced subset present", forced is not None):
            mask = 0
            for pair in forced["edges"]:
                mask |= 1 << _edge_id(root, pair, base)
            out.check("forced subset vertex ids match its edges", forced["vertices"] == list(iter_bits(mask)))
            value = vertex_forced_value(derived, weights, mask)
            claimed = frac(forced["value"])
            out.check("forced subset is not maximal stable", mask not in stable_set_rows(derived))
            out.check("forced value", value == claimed, f"claimed {claimed}, recomputed {value}")
            out.check("forced value at most 1", value is not None and value <= 1)
    elif tag == GP_NEQ_SE:
        decision = decide_strongly_equistable_small(derived, weights)
        out.check("derived graph strongly equistable", decision.verdict == "StronglyEquistable", decision.verdict)
        out.check("derived graph is not general partition", not is_general_partition_via_strong_cliques(derived))
    return out


def verify_certificate(data: dict) -> Verification:
    """Re-check every claim of a certificate (or gallery bundle) from scratch."""
    kind = data.get("type")
    try:
        if kind == "gallery":
            out = Verification()
            for i, cert in enumerate(data["certificates"]):
                out.extend(verify_certificate(cert), f"[{i}:{cert.get('type')}] ")
            return out
        if kind == "conjecture":
            return _verify_conjecture(data)
        graph, base = graph_from_json(data["graph"])
        if kind == "badness":
            return _verify_badness(graph, data, base)
        if kind == "equistarable":
            return _verify_weighting(graph, data, base)[0]
        if kind == "strong-equistarability":
            return _verify_strong(graph, data, base)
        if kind == "equistable":
            return _verify_equistable_doc(graph, data)
        if kind == "strong-equistability":
            return _verify_vertex_strong(graph, data)
        if kind == "fact":
            return _verify_fact(graph, data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed {kind} certificate: missing or bad field {exc}") from None
    raise InputError(f"unknown certificate type {kind!r}")


__all__ = [
    "ChordClass",
    "GP_NEQ_EQ",
    "GP_NEQ_SE",
    "NO_STRONG_CLIQUE",
    "SE_NEQ_EQ",
    "dumps",
    "from_json",
    "roundtrip",
    "to_json",
    "verify_certificate",
]
