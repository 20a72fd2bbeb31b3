"""Core graph model: pairs of graphs on a shared vertex set, plus planarity.

Vertices are dense integer ids in ``[0, n)``.  Every edge of a
:class:`SefeInstance` carries exactly one label: ``shared`` (the edge is in
both graphs), ``p1`` (private to the first graph) or ``p2`` (private to the
second).  All values are immutable after construction; every operation here
is a pure function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import networkx as nx

from .errors import FormatError

SHARED = "shared"
P1 = "p1"
P2 = "p2"
LABELS = (SHARED, P1, P2)

Edge = tuple[int, int, str]


def edge_key(u: int, v: int, label: str) -> str:
    """Canonical string key ``"u-v-label"`` with ``u < v``."""
    if u > v:
        u, v = v, u
    return f"{u}-{v}-{label}"


def parse_edge_key(key: str) -> Edge:
    try:
        u, v, label = key.split("-")
        edge = (int(u), int(v), label)
    except ValueError:
        raise FormatError(f"bad edge key {key!r}") from None
    if edge[2] not in LABELS:
        raise FormatError(f"bad edge label in key {key!r}")
    if edge[0] >= edge[1]:
        raise FormatError(f"edge key {key!r} is not in canonical u < v form")
    return edge


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph; parallel edges allowed.  Planarity-test input."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise FormatError(f"edge ({u},{v}) out of range for n={self.n}")


@dataclass(frozen=True)
class SefeInstance:
    """Two planar graphs on one vertex set, encoded as one labeled edge list.

    ``tags`` optionally names gadget roles of individual vertices; it never
    affects semantics.
    """

    n: int
    edges: tuple[Edge, ...]
    tags: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        if type(self.n) is not int or self.n < 0:
            raise FormatError(f"vertex count must be a non-negative integer, got {self.n!r}")
        seen: set[tuple[int, int]] = set()
        for u, v, label in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise FormatError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise FormatError(f"self-loop at vertex {u}")
            if label not in LABELS:
                raise FormatError(f"unknown edge label {label!r}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise FormatError(f"duplicate edge ({u},{v})")
            seen.add(key)
        for v in self.tags:
            if not (0 <= v < self.n):
                raise FormatError(f"tag on unknown vertex {v}")

    def edges_with_label(self, *labels: str) -> list[Edge]:
        return [e for e in self.edges if e[2] in labels]

    def to_json_dict(self) -> dict:
        doc = {
            "n": self.n,
            "edges": [[u, v, label] for u, v, label in self.edges],
        }
        if self.tags:
            doc["tags"] = {str(v): t for v, t in sorted(self.tags.items())}
        return doc

    @classmethod
    def from_json_dict(cls, doc: dict) -> "SefeInstance":
        try:
            n = doc["n"]
            raw = doc["edges"]
        except (KeyError, TypeError):
            raise FormatError("instance document needs 'n' and 'edges'") from None
        try:
            edges = tuple((int(u), int(v), str(label)) for u, v, label in raw)
            tags = {int(v): str(t) for v, t in doc.get("tags", {}).items()}
        except (TypeError, ValueError, AttributeError):
            raise FormatError("malformed edge or tag entry") from None
        return cls(n=n, edges=edges, tags=tags)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "SefeInstance":
        return cls.from_json_dict(json.loads(text))


def split_layers(inst: SefeInstance) -> tuple[Multigraph, Multigraph, Multigraph, Multigraph]:
    """Partition an instance into (shared, layer 1, layer 2, union) graphs.

    Layer 1 is shared+p1 edges, layer 2 shared+p2; all four share the
    instance's vertex set.
    """
    shared, priv1, priv2 = [], [], []
    for u, v, label in inst.edges:
        if label == SHARED:
            shared.append((u, v))
        elif label == P1:
            priv1.append((u, v))
        else:
            priv2.append((u, v))
    g = Multigraph(inst.n, tuple(shared))
    g1 = Multigraph(inst.n, tuple(shared + priv1))
    g2 = Multigraph(inst.n, tuple(shared + priv2))
    gu = Multigraph(inst.n, tuple(shared + priv1 + priv2))
    return g, g1, g2, gu


def simplify(g: Multigraph) -> Multigraph:
    """Drop parallel duplicates and self-loops; keep isolated vertices.

    Neither change affects planarity.
    """
    seen: set[tuple[int, int]] = set()
    out = []
    for u, v in g.edges:
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return Multigraph(g.n, tuple(out))


def planarity_test(g: Multigraph) -> bool:
    """True iff the multigraph admits a planar drawing.

    Parallel edges and isolated vertices never change the answer, so the
    input is simplified before the core test.
    """
    simple = simplify(g)
    graph = nx.Graph()
    graph.add_nodes_from(range(simple.n))
    graph.add_edges_from(simple.edges)
    ok, _ = nx.check_planarity(graph, counterexample=False)
    return ok


def nx_graph(g: Multigraph) -> nx.Graph:
    """Simple networkx view of a multigraph (parallel edges collapsed)."""
    simple = simplify(g)
    graph = nx.Graph()
    graph.add_nodes_from(range(simple.n))
    graph.add_edges_from(simple.edges)
    return graph
