"""Named counterexample graphs with their expected verdicts and certificates."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import certificates as certs
from .bridge import conjecture_certificates, decide_strongly_equistable_small, line_complement
from .engine import construct_equistarable_weights, decide_strong_equistarability, is_bad
from .errors import InputError
from .graph import (
    GSTAR_CHORDS,
    EdgeSubset,
    Graph,
    HamiltonianLabeling,
    build_graph,
    circulant,
    cycle_labeling,
    format_edge_list,
    gstar,
    is_triangle_free,
    to_dot,
)
from .kernel import forced_value, kernel_basis_from_chords
from .linalg import format_rational

_CIRCULANT = re.compile(r"circulant-(\d+)-1-3")
LINE_COMPLEMENT = "line-complement:"


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    params: dict
    # verdict name -> expected value, reproduced exactly by :func:`redecide`
    expected: dict = field(default_factory=dict)

    @property
    def derived(self) -> bool:
        return self.name.startswith(LINE_COMPLEMENT)

    @property
    def root_name(self) -> str:
        return self.name[len(LINE_COMPLEMENT):] if self.derived else self.name


def _root(name: str) -> tuple[Graph, HamiltonianLabeling, int]:
    if name == "gstar":
        g, labeling = gstar()
        return g, labeling, 1
    match = _CIRCULANT.fullmatch(name)
    if match:
        n = int(match.group(1))
        if n < 7 or n % 2 == 0:
            raise InputError(f"{name}: need odd n >= 7")
        g = circulant(n, (1, 3))
        return g, cycle_labeling(g), 0
    raise InputError(f"unknown gallery entry {name!r}")


_ROOT_EXPECTED = {
    "gstar": {"bad": True, "equistarable": True, "strongly-equistarable": False},
    "circulant-11-1-3": {"bad": True, "equistarable": True, "strongly-equistarable": True},
    # 26 edges: needs a subset cap of at least 26 bits
    "circulant-13-1-3": {"bad": True, "equistarable": True, "strongly-equistarable": True},
}
_DERIVED_EXPECTED = {
    "gstar": {"equistable": True, "strongly-equistable": False, "strong-clique": False, "general-partition": False},
    "circulant-11-1-3": {"equistable": True, "strongly-equistable": True, "strong-clique": False,
                         "general-partition": False},
}


def entry(name: str) -> GalleryEntry:
    derived = name.startswith(LINE_COMPLEMENT)
    root_name = name[len(LINE_COMPLEMENT):] if derived else name
    _root(root_name)  # validates the name
    params = {"root": root_name} if derived else {"name": root_name}
    table = _DERIVED_EXPECTED if derived else _ROOT_EXPECTED
    return GalleryEntry(name, params, dict(table.get(root_name, {})))


NAMES = ("gstar", "circulant-11-1-3", "line-complement:gstar", "line-complement:circulant-11-1-3")


def build(e: GalleryEntry) -> tuple[Graph, int]:
    """The entry's graph and the label base its certificates print."""
    root, _, base = _root(e.root_name)
    if e.derived:
        return line_complement(root), 0
    return root, base


def redecide(e: GalleryEntry, *, max_bits: int | None = None) -> dict:
    """Re-run every decision named in ``e.expected``."""
    root, labeling, _ = _root(e.root_name)
    out = {}
    if not e.derived:
        cert = is_bad(root, labeling)
        out["bad"] = cert is not None
        out["equistarable"] = cert is not None and bool(construct_equistarable_weights(root, cert))
        if "strongly-equistarable" in e.expected:
            decision = decide_strong_equistarability(root, labeling, max_bits=max_bits)
            out["strongly-equistarable"] = decision.strongly_equistarable
        return out
    conj = conjecture_certificates(root, labeling, max_bits=max_bits)
    h = conj[0].derived
    out["equistable"] = True  # conjecture_certificates verifies it exhaustively or raises
    out["strongly-equistable"] = decide_strongly_equistable_small(h, max_bits=max_bits).verdict == "StronglyEquistable"
    out["strong-clique"] = conj[0].matching.strong_cliques > 0
    out["general-partition"] = conj[0].matching.general_partition
    return out


def certificates_for(e: GalleryEntry, *, max_bits: int | None = None) -> list[dict]:
    root, labeling, base = _root(e.root_name)
    if e.derived:
        conj = conjecture_certificates(root, labeling, label_base=base, max_bits=max_bits)
        h = conj[0].derived
        decision = decide_strongly_equistable_small(h, max_bits=max_bits)
        vertex = certs.VertexStrongClaim(h, decision.verdict, decision.positive, decision.witness, decision.gamma,
                                         decision.forced_count)
        return [certs.conjecture_to_json(c) for c in conj] + [certs.vertex_strong_to_json(vertex)]
    cert = is_bad(root, labeling)
    weighting = construct_equistarable_weights(root, cert)
    decision = decide_strong_equistarability(root, labeling, max_bits=max_bits)
    return [
        certs.badness_to_json(cert, base),
        certs.equistarable_to_json(weighting, base),
        certs.strong_to_json(certs.strong_claim(decision), base),
    ]


def bundle(name: str, *, max_bits: int | None = None) -> dict:
    """Graph (edge list and DOT), expected verdicts and all certificates for one entry."""
    e = entry(name)
    graph, base = build(e)
    out = {
        "type": "gallery",
        "name": e.name,
        "params": e.params,
        "graph": certs.graph_to_json(graph, base),
        "edge_list": format_edge_list(graph, e.name, base),
        "dot": to_dot(graph, _dot_name(e.name), base),
        "expected": e.expected,
    }
    if e.root_name == "gstar" and not e.derived:
        out["fifth_chord_search"] = fifth_chord_search()
    out["certificates"] = certificates_for(e, max_bits=max_bits)
    out["verifier_version"] = certs.VERIFIER_VERSION
    return out


def _dot_name(name: str) -> str:
    return re.sub(r"\W", "_", name)


# --- the fifth chord of G* -------------------------------------------------------


def mirror(v: int) -> int:
    """The reflection i -> 7 - i (mod 9) of the 1-based 9-cycle that fixes the first four chords."""
    return (7 - v) % 9 or 9


def fifth_chord_search() -> dict:
    """Every candidate fifth chord of G*, filtered by the defining constraints (1-based labels).

    A candidate survives when the graph stays triangle-free, the 9-cycle is a
    bad labeling, and the edge {1,9} lies in the even cycle of chord {3,7}
    and in no other chord's even cycle, so that {{1,9},{3,7}} is forced to 1/2.
    """
    cycle = [(i, i + 1) for i in range(8)] + [(0, 8)]
    fixed = [(a - 1, b - 1) for a, b in GSTAR_CHORDS[:4]]
    taken = {frozenset(p) for p in cycle + fixed}
    rows, survivors = [], []
    for a in range(9):
        for b in range(a + 1, 9):
            if frozenset((a, b)) in taken:
                continue
            g = build_graph(9, cycle + fixed + [(a, b)])
            labeling = HamiltonianLabeling.from_order(g, list(range(9)))
            basis = kernel_basis_from_chords(g, labeling)
            e, f = g.edge_id(0, 8), g.edge_id(2, 6)
            cycles_with_e = [[u + 1 for u in g.edges[c[0]]] for c in basis.cycles if e in c]
            value = forced_value(basis, EdgeSubset((1 << e) | (1 << f)))
            row = {
                "chord": [a + 1, b + 1],
                "triangle_free": is_triangle_free(g),
                "bad": is_bad(g, labeling) is not None,
                "chords_whose_cycle_contains_1_9": cycles_with_e,
                "forced_value": None if value is None else format_rational(value),
            }
            rows.append(row)
            if row["triangle_free"] and row["bad"] and cycles_with_e == [[3, 7]]:
                survivors.append(row["chord"])
    return {"candidates": rows, "survivors": survivors}
