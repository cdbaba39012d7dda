"""Spanning-tree assembly, connectivity certificates, and DOT/JSON export.

Vertices are the enumerated Borel-fixed ideals in canonical order; every
non-terminal vertex contributes exactly one edge to its canonical successor.
The certificate asserted after assembly: edge count = vertex count - 1,
connected, socle weight strictly increasing along every edge, and the
terminal ideal the unique sink.  Exports are deterministic byte-for-byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .borel import enumerate_borel_fixed, terminal_ideal, DEFAULT_VERTEX_CAP
from .errors import InvalidParameterError, UncoveredCaseError, VerificationError
from .families import DEFAULT_T_SAMPLES, EdgeFamily, build_edge_family, verify_family
from .monomials import MonomialIdeal
from .moves import canonical_successor, is_valid_move, MULTIPLE, SINGLE

VERIFY_LEVELS = ("none", "fast", "full")


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    family: Optional[EdgeFamily] = None

    def to_dict(self) -> dict:
        out = {"src": self.src, "dst": self.dst}
        if self.family is not None:
            out["family"] = self.family.to_dict()
        return out


@dataclass
class AGraph:
    """Graph with string-labelled vertices and optional ideal payloads."""

    labels: tuple[str, ...]
    edges: tuple[Edge, ...]
    ideals: Optional[tuple[MonomialIdeal, ...]] = None
    metadata: dict = field(default_factory=dict)

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AGraph):
            return NotImplemented
        return (self.labels == other.labels and self.edges == other.edges
                and self.ideals == other.ideals and self.metadata == other.metadata)


def is_connected(G: AGraph) -> bool:
    """Breadth-first reachability over the undirected edge set."""
    if G.vertex_count == 0:
        return True
    adjacency: dict[int, list[int]] = {i: [] for i in range(G.vertex_count)}
    for e in G.edges:
        adjacency[e.src].append(e.dst)
        adjacency[e.dst].append(e.src)
    seen = {0}
    queue = [0]
    while queue:
        v = queue.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == G.vertex_count


def build_spanning_tree(n: int, d: int, verify_level: str = "fast",
                        t_samples=DEFAULT_T_SAMPLES,
                        max_vertices: int = DEFAULT_VERTEX_CAP,
                        max_gb_steps: int = DEFAULT_STEP_CAP) -> AGraph:
    """Vertices plus one canonical edge per non-terminal vertex, certified.

    verify_level "none" trusts the construction, "fast" recheck each edge
    with is_valid_move, "full" additionally runs the four family verdicts.
    Uncovered configurations are aggregated and raised together.
    """
    if verify_level not in VERIFY_LEVELS:
        raise InvalidParameterError(f"verify level must be one of {VERIFY_LEVELS}")
    vs = enumerate_borel_fixed(n, d, max_vertices=max_vertices)
    index = {I.gens: i for i, I in enumerate(vs.ideals)}
    sink = terminal_ideal(n, d)

    counters = {"single": 0, "multiple": 0, "uncovered": 0}
    edges: list[Edge] = []
    uncovered: list[UncoveredCaseError] = []

    for i, I in enumerate(vs.ideals):
        if I == sink:
            continue
        try:
            mv, J = canonical_successor(I)
        except UncoveredCaseError as exc:
            counters["uncovered"] += 1
            uncovered.append(exc)
            continue
        if J.gens not in index:
            raise VerificationError(
                f"successor {J} of {I} is missing from the vertex set", I.to_dict())
        case = mv.derivation.case if mv.derivation else SINGLE
        counters["multiple" if case == MULTIPLE else "single"] += 1
        edges.append(Edge(i, index[J.gens], build_edge_family(I, mv)))

    if uncovered:
        raise UncoveredCaseError(
            f"{len(uncovered)} vertices of ({n}, {d}) fall outside the move calculus",
            instances=uncovered)

    graph = AGraph(
        labels=tuple(str(I) for I in vs.ideals),
        edges=tuple(edges),
        ideals=vs.ideals,
        metadata={
            "kind": "spanning_tree", "n": n, "d": d,
            "verify_level": verify_level, "counters": counters,
        },
    )

    if verify_level in ("fast", "full"):
        for e in graph.edges:
            report = is_valid_move(vs.ideals[e.src], e.family.move)
            if not report.ok:
                raise VerificationError(
                    f"edge {e.src}->{e.dst} failed move validation", report.to_dict())
    if verify_level == "full":
        for e in graph.edges:
            report = verify_family(e.family, t_samples, max_gb_steps=max_gb_steps)
            if not report.ok:
                raise VerificationError(
                    f"edge {e.src}->{e.dst} failed family verification", report.to_dict())

    _assert_tree_certificate(graph, vs.ideals, sink)
    return graph


def _assert_tree_certificate(G: AGraph, ideals, sink: MonomialIdeal) -> None:
    """Tree shape, strict weight orientation, unique sink at the terminal ideal.

    The standard-monomial weight is the asserted potential; the socle weight
    can tie along a valid move, so edges where it fails to increase are only
    counted (metadata counter socle_weight_ties) as a reportable finding.
    """
    if G.edge_count != G.vertex_count - 1:
        raise VerificationError(
            f"edge count {G.edge_count} != vertex count {G.vertex_count} - 1")
    if not is_connected(G):
        raise VerificationError("spanning tree is not connected")
    out_degree = [0] * G.vertex_count
    ties = 0
    for e in G.edges:
        out_degree[e.src] += 1
        if ideals[e.dst].standard_weight() <= ideals[e.src].standard_weight():
            raise VerificationError(
                f"standard weight not increasing along edge {e.src}->{e.dst}")
        if ideals[e.dst].weight() <= ideals[e.src].weight():
            ties += 1
    G.metadata["counters"]["socle_weight_ties"] = ties
    sinks = [i for i, deg in enumerate(out_degree) if deg == 0]
    if len(sinks) != 1 or ideals[sinks[0]] != sink:
        raise VerificationError(f"unique sink certificate failed: sinks {sinks}")


def complete_graph(labels) -> AGraph:
    """The complete graph on the given labels."""
    labels = tuple(str(x) for x in labels)
    edges = tuple(
        Edge(i, k) for i in range(len(labels)) for k in range(i + 1, len(labels))
    )
    return AGraph(labels, edges, None, {"kind": "complete", "order": len(labels)})


# -- serialization -------------------------------------------------------------


def export_json(G: AGraph) -> str:
    data = {
        "labels": list(G.labels),
        "edges": [e.to_dict() for e in G.edges],
        "metadata": G.metadata,
    }
    if G.ideals is not None:
        data["ideals"] = [I.to_dict() for I in G.ideals]
    return json.dumps(data, indent=2)


def agraph_from_json(text: str) -> AGraph:
    data = json.loads(text)
    ideals = None
    if "ideals" in data:
        ideals = tuple(MonomialIdeal.from_dict(e) for e in data["ideals"])
    edges = []
    for e in data["edges"]:
        family = None
        if "family" in e:
            family = EdgeFamily.from_dict(e["family"])
        edges.append(Edge(int(e["src"]), int(e["dst"]), family))
    return AGraph(tuple(data["labels"]), tuple(edges), ideals, data.get("metadata", {}))


def export_dot(G: AGraph) -> str:
    """Deterministic DOT text; vertices carry their labels, edges the move summary."""
    lines = ["graph agraph {"]
    for i, label in enumerate(G.labels):
        lines.append(f'  v{i} [label="{label}"];')
    for e in G.edges:
        if e.family is not None:
            lines.append(f'  v{e.src} -- v{e.dst} [label="{e.family.move}"];')
        else:
            lines.append(f"  v{e.src} -- v{e.dst};")
    lines.append("}")
    return "\n".join(lines) + "\n"
