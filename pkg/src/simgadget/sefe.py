"""Reductions for the bounded-crossing simultaneous embedding problem:
the base construction (cap 1), its expansion to arbitrary caps k, and the
wheel family separating cap k from cap k+1.

The base construction mirrors the geometric one with all subdivision
vertices dropped: plain pumpkin, transversal paths of 2B alternating private
edges (first one in layer 1), and slices that are single alternating paths
pi(S_i) of 2a_i private edges (first one in layer 2) braced by two shared
fans: one over the even positions from pole t, one over the odd positions
from pole s.  Positions along pi(S_i) are 1-indexed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import FormatError, InconsistentStructure, NotAReducedInstance
from .graphs import P1, P2, SHARED, Edge, SefeInstance, edge_key, parse_edge_key
from .threep import ThreePartitionInstance


@dataclass(frozen=True)
class KTransversalPath:
    inner: tuple[int, ...]           # 2B - 1 vertices
    edges: tuple[Edge, ...]          # 2B edges, labels alternating from p1


@dataclass(frozen=True)
class KSlice:
    a: int
    path: tuple[int, ...]            # pi(S_i), 2a+1 vertices in position order
    edges: tuple[Edge, ...]          # 2a private edges, labels alternating from p2

    @property
    def width(self) -> int:
        return self.a

    def odd_positions(self) -> tuple[int, ...]:
        return self.path[0::2]

    def even_positions(self) -> tuple[int, ...]:
        return self.path[1::2]


@dataclass(frozen=True)
class KSefeGadgetIndex:
    variant: str                     # "1sefe" or "ksefe(k)"
    s: int
    t: int
    v: tuple[int, ...]
    transversals: tuple[KTransversalPath, ...]
    slices: tuple[KSlice, ...]
    # original tunnel edge key -> ((midpoint, u, w), ...) replacement paths
    expansion: dict[str, tuple[tuple[int, int, int], ...]] = field(default_factory=dict)

    @property
    def m(self) -> int:
        return len(self.v) - 1

    @property
    def B(self) -> int:
        return len(self.transversals[0].edges) // 2

    @property
    def k(self) -> int:
        if self.variant == "1sefe":
            return 1
        match = re.fullmatch(r"ksefe\((\d+)\)", self.variant)
        if not match:
            raise FormatError(f"unknown variant {self.variant!r}")
        return int(match.group(1))

    def values(self) -> tuple[int, ...]:
        return tuple(sl.a for sl in self.slices)

    def to_json_dict(self) -> dict:
        return {
            "variant": self.variant,
            "s": self.s,
            "t": self.t,
            "v": list(self.v),
            "transversals": [{"inner": list(p.inner)} for p in self.transversals],
            "slices": [
                {
                    "a": sl.a,
                    "pi_t": list(sl.even_positions()),
                    "pi_s": list(sl.odd_positions()),
                }
                for sl in self.slices
            ],
            "expansion": {
                k: [list(p) for p in paths]
                for k, paths in sorted(self.expansion.items(), key=lambda kv: parse_edge_key(kv[0]))
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, doc: dict, inst: SefeInstance) -> "KSefeGadgetIndex":
        try:
            variant = doc["variant"]
            s, t = doc["s"], doc["t"]
            v = tuple(doc["v"])
            inner_lists = [tuple(p["inner"]) for p in doc["transversals"]]
            raw_slices = [(sl["a"], tuple(sl["pi_t"]), tuple(sl["pi_s"])) for sl in doc["slices"]]
            expansion = {
                key: tuple((p[0], p[1], p[2]) for p in paths)
                for key, paths in doc.get("expansion", {}).items()
            }
        except (KeyError, TypeError, IndexError):
            raise FormatError("gadget index sidecar is missing fields") from None

        edge_set = {(u, w, lab) if u < w else (w, u, lab) for u, w, lab in inst.edges}

        def need(u: int, w: int, lab: str) -> Edge:
            e = (u, w, lab) if u < w else (w, u, lab)
            if e not in edge_set:
                raise InconsistentStructure(f"edge {e} not present in instance")
            return (u, w, lab)

        transversals = []
        for j, inner in enumerate(inner_lists):
            walk = (v[j],) + inner + (v[j + 1],)
            edges = tuple(
                need(walk[r - 1], walk[r], P1 if r % 2 == 1 else P2)
                for r in range(1, len(walk))
            )
            transversals.append(KTransversalPath(inner, edges))

        expanded = variant != "1sefe"
        slices = []
        for a_val, pi_t, pi_s in raw_slices:
            if len(pi_s) != a_val + 1 or len(pi_t) != a_val:
                raise InconsistentStructure("slice row lengths do not match its value")
            path = []
            for q in range(a_val):
                path.append(pi_s[q])
                path.append(pi_t[q])
            path.append(pi_s[a_val])
            edges = tuple(
                (path[r - 1], path[r], P2 if r % 2 == 1 else P1) for r in range(1, 2 * a_val + 1)
            )
            if not expanded:
                for u, w, lab in edges:
                    need(u, w, lab)
            slices.append(KSlice(a_val, tuple(path), edges))

        index = cls(variant, s, t, v, tuple(transversals), tuple(slices), expansion)
        if expanded:
            for key, paths in expansion.items():
                u, w, lab = parse_edge_key(key)
                for mid, pu, pw in paths:
                    if {pu, pw} != {u, w}:
                        raise InconsistentStructure(f"expansion of {key} has wrong endpoints")
                    need(pu, mid, lab)
                    need(mid, pw, lab)
        return index

    @classmethod
    def from_json(cls, text: str, inst: SefeInstance) -> "KSefeGadgetIndex":
        return cls.from_json_dict(json.loads(text), inst)


def reduce_1sefe(inst: ThreePartitionInstance) -> tuple[SefeInstance, KSefeGadgetIndex]:
    """Base reduction (cap 1): every private edge of a positive instance's
    canonical embedding is crossed exactly once."""
    m, B = inst.m, inst.B
    s, t = 0, 1
    v = tuple(range(2, m + 3))
    n = m + 3
    edges: list[Edge] = []
    for j in range(m + 1):
        edges.append((s, v[j], SHARED))
        edges.append((t, v[j], SHARED))
    edges.append((v[0], v[m], SHARED))
    tags = {s: "pole:s", t: "pole:t"}
    for j in range(m + 1):
        tags[v[j]] = f"rim:{j}"

    transversals = []
    for j in range(1, m + 1):
        inner = tuple(n + p for p in range(2 * B - 1))
        n += 2 * B - 1
        walk = (v[j - 1],) + inner + (v[j],)
        t_edges = tuple(
            (walk[r - 1], walk[r], P1 if r % 2 == 1 else P2) for r in range(1, len(walk))
        )
        edges.extend(t_edges)
        transversals.append(KTransversalPath(inner, t_edges))

    slices = []
    for a in inst.A:
        path = tuple(n + p for p in range(2 * a + 1))
        n += 2 * a + 1
        p_edges = tuple(
            (path[r - 1], path[r], P2 if r % 2 == 1 else P1) for r in range(1, 2 * a + 1)
        )
        edges.extend(p_edges)
        even = path[1::2]            # positions 2, 4, ..., 2a
        odd = path[0::2]             # positions 1, 3, ..., 2a+1
        for q in range(a - 1):
            edges.append((even[q], even[q + 1], SHARED))
        for x in even:
            edges.append((t, x, SHARED))
        for q in range(a):
            edges.append((odd[q], odd[q + 1], SHARED))
        for x in odd:
            edges.append((s, x, SHARED))
        slices.append(KSlice(a, path, p_edges))

    index = KSefeGadgetIndex("1sefe", s, t, v, tuple(transversals), tuple(slices))
    return SefeInstance(n=n, edges=tuple(edges), tags=tags), index


def expand_to_k(
    inst: SefeInstance, index: KSefeGadgetIndex, k: int
) -> tuple[SefeInstance, KSefeGadgetIndex]:
    """Replace every private tunnel edge by k internally disjoint 2-edge
    paths through fresh midpoints (same layer), leaving everything else --
    ids included -- untouched.  k = 1 is the identity."""
    if k < 1:
        raise FormatError(f"k must be >= 1, got {k}")
    if index.variant != "1sefe":
        raise NotAReducedInstance(f"cannot expand a {index.variant!r} instance")
    if k == 1:
        return inst, index

    order: list[Edge] = []
    for sl in index.slices:
        for u, w, lab in sl.edges:
            order.append((u, w, lab))

    n = inst.n
    expansion: dict[str, tuple[tuple[int, int, int], ...]] = {}
    replacement: dict[tuple[int, int, str], list[Edge]] = {}
    for u, w, lab in order:
        e = (u, w, lab) if u < w else (w, u, lab)
        paths = []
        pieces: list[Edge] = []
        for _ in range(k):
            mid = n
            n += 1
            paths.append((mid, e[0], e[1]))
            pieces.append((e[0], mid, lab))
            pieces.append((mid, e[1], lab))
        expansion[edge_key(*e)] = tuple(paths)
        replacement[e] = pieces

    edges: list[Edge] = []
    for u, w, lab in inst.edges:
        e = (u, w, lab) if u < w else (w, u, lab)
        if e in replacement:
            edges.extend(replacement[e])
        else:
            edges.append((u, w, lab))

    new_index = KSefeGadgetIndex(
        f"ksefe({k})", index.s, index.t, index.v, index.transversals, index.slices, expansion
    )
    return SefeInstance(n=n, edges=tuple(edges), tags=dict(inst.tags)), new_index


def wheel_instance(k: int) -> SefeInstance:
    """Shared wheel on 2k+5 vertices whose layer-1 edge (u_0, v_0) has to
    cross each of the k+1 nested layer-2 chords: a positive instance at cap
    k+1 and a negative one at cap k."""
    if k < 1:
        raise FormatError(f"k must be >= 1, got {k}")
    u = tuple(range(k + 2))                 # u_0 .. u_{k+1}
    w = tuple(range(k + 2, 2 * k + 4))      # v_0 .. v_{k+1}
    hub = 2 * k + 4
    rim = list(u) + list(w)
    edges: list[Edge] = []
    for i in range(len(rim)):
        edges.append((rim[i], rim[(i + 1) % len(rim)], SHARED))
    for x in rim:
        edges.append((hub, x, SHARED))
    edges.append((u[0], w[0], P1))
    for i in range(1, k + 2):
        edges.append((u[i], w[k + 2 - i], P2))
    tags = {hub: "hub"}
    for i in range(k + 2):
        tags[u[i]] = f"u{i}"
        tags[w[i]] = f"v{i}"
    return SefeInstance(n=2 * k + 5, edges=tuple(edges), tags=tags)


def slice_tunnel_edges(index: KSefeGadgetIndex) -> list[Edge]:
    """All private tunnel edges in slice order (base construction ids)."""
    return [e for sl in index.slices for e in sl.edges]


def transversal_matchings(index: KSefeGadgetIndex) -> tuple[list[Edge], list[Edge]]:
    """Induced matchings among transversal edges: layer-1 edges minus the
    first of each path, layer-2 edges minus the last (B-1 each per path)."""
    m1: list[Edge] = []
    m2: list[Edge] = []
    for path in index.transversals:
        for r, e in enumerate(path.edges, start=1):
            if e[2] == P1 and r > 1:
                m1.append(e)
            elif e[2] == P2 and r < len(path.edges):
                m2.append(e)
    return m1, m2
