"""Reduction from 3-Partition to the right-angle simultaneous drawing
problem: subdivided pumpkin, subdivided slices, transversal paths.

Vertex ids are assigned in construction order (pumpkin, then transversal
paths by j, then slices by i), so identical inputs produce identical
instances byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import FormatError, InconsistentStructure
from .graphs import P1, P2, SHARED, Edge, SefeInstance
from .threep import ThreePartitionInstance


@dataclass(frozen=True)
class TransversalPath:
    """Path of 2B+1 alternating private edges between consecutive rim
    vertices; extremal edges belong to layer 1."""

    inner: tuple[int, ...]
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class SliceSpec:
    """One slice gadget: two pole-facing vertex rows pi_t / pi_s (a+1 each),
    their fan subdivision vertices, and the tunnel's private edges."""

    a: int
    pi_t: tuple[int, ...]
    pi_s: tuple[int, ...]
    fan_t: tuple[int, ...]
    fan_s: tuple[int, ...]
    rungs: tuple[Edge, ...]      # layer-2 verticals pi_s(k)-pi_t(k)
    zigzag: tuple[Edge, ...]     # layer-1 diagonals, first one pi_s(1)-pi_t(2)

    @property
    def width(self) -> int:
        return self.a


@dataclass(frozen=True)
class GadgetIndex:
    s: int
    t: int
    v: tuple[int, ...]
    spoke_s: tuple[int, ...]     # subdivision vertex on each s-v_j spoke
    spoke_t: tuple[int, ...]
    handle: tuple[int, int]
    transversals: tuple[TransversalPath, ...]
    slices: tuple[SliceSpec, ...]

    @property
    def m(self) -> int:
        return len(self.v) - 1

    @property
    def B(self) -> int:
        return len(self.transversals[0].inner) // 2

    def values(self) -> tuple[int, ...]:
        return tuple(sl.a for sl in self.slices)

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "v": list(self.v),
            "transversals": [{"inner": list(p.inner)} for p in self.transversals],
            "slices": [
                {"a": sl.a, "pi_t": list(sl.pi_t), "pi_s": list(sl.pi_s)}
                for sl in self.slices
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, doc: dict, inst: SefeInstance) -> "GadgetIndex":
        """Rebuild the full index from the sidecar plus the instance it
        annotates.  Derived vertices (spoke/fan subdivisions, handle) are
        recovered by adjacency lookups and cross-checked against the
        instance; mismatches mean the sidecar does not belong to inst."""
        try:
            s, t = doc["s"], doc["t"]
            v = tuple(doc["v"])
            inner_lists = [tuple(p["inner"]) for p in doc["transversals"]]
            raw_slices = [(sl["a"], tuple(sl["pi_t"]), tuple(sl["pi_s"])) for sl in doc["slices"]]
        except (KeyError, TypeError):
            raise FormatError("gadget index sidecar is missing fields") from None

        shared_adj: dict[int, set[int]] = {}
        edge_set: set[Edge] = set()
        for a_, b_, lab in inst.edges:
            u_, w_ = (a_, b_) if a_ < b_ else (b_, a_)
            edge_set.add((u_, w_, lab))
            if lab == SHARED:
                shared_adj.setdefault(a_, set()).add(b_)
                shared_adj.setdefault(b_, set()).add(a_)

        def need(u: int, w: int, lab: str) -> Edge:
            e = (u, w, lab) if u < w else (w, u, lab)
            if e not in edge_set:
                raise InconsistentStructure(f"edge {e} not present in instance")
            return (u, w, lab)

        def common(a_: int, b_: int) -> int:
            both = shared_adj.get(a_, set()) & shared_adj.get(b_, set())
            if len(both) != 1:
                raise InconsistentStructure(f"no unique common neighbor of {a_} and {b_}")
            return next(iter(both))

        spoke_s = tuple(common(s, vj) for vj in v)
        spoke_t = tuple(common(t, vj) for vj in v)
        h_candidates = [
            w for w in sorted(shared_adj.get(v[0], set()))
            if w not in (spoke_s[0], spoke_t[0])
        ]
        if len(h_candidates) != 1:
            raise InconsistentStructure("cannot locate the subdivided handle")
        h1 = h_candidates[0]
        h_next = sorted(shared_adj[h1] - {v[0]})
        if len(h_next) != 1:
            raise InconsistentStructure("cannot locate the subdivided handle")
        h2 = h_next[0]
        need(v[0], h1, SHARED)
        need(h1, h2, SHARED)
        need(h2, v[-1], SHARED)

        transversals = []
        for j, inner in enumerate(inner_lists):
            walk = (v[j],) + inner + (v[j + 1],)
            edges = tuple(
                need(walk[r - 1], walk[r], P1 if r % 2 == 1 else P2)
                for r in range(1, len(walk))
            )
            transversals.append(TransversalPath(inner, edges))

        slices = []
        for a_val, pi_t, pi_s in raw_slices:
            if len(pi_t) != a_val + 1 or len(pi_s) != a_val + 1:
                raise InconsistentStructure("slice row length does not match its value")
            fan_t = tuple(common(t, x) for x in pi_t)
            fan_s = tuple(common(s, x) for x in pi_s)
            rungs = tuple(need(pi_s[k], pi_t[k], P2) for k in range(a_val + 1))
            zigzag = tuple(
                need(pi_s[k], pi_t[k + 1], P1) if k % 2 == 0 else need(pi_t[k], pi_s[k + 1], P1)
                for k in range(a_val)
            )
            slices.append(SliceSpec(a_val, pi_t, pi_s, fan_t, fan_s, rungs, zigzag))

        return cls(s, t, v, spoke_s, spoke_t, (h1, h2), tuple(transversals), tuple(slices))

    @classmethod
    def from_json(cls, text: str, inst: SefeInstance) -> "GadgetIndex":
        return cls.from_json_dict(json.loads(text), inst)


def build_pumpkin_subdivided(m: int) -> tuple[int, list[Edge], dict[int, str], dict]:
    """Subdivided pumpkin on ids 0..3m+6: poles s=0, t=1, rim v_0..v_m,
    one subdivision vertex per spoke, two on the handle.  Returns
    (vertex count, edges, tags, index fields)."""
    if m < 1:
        raise FormatError(f"m must be >= 1, got {m}")
    s, t = 0, 1
    v = tuple(range(2, m + 3))
    spoke_s = tuple(m + 3 + 2 * j for j in range(m + 1))
    spoke_t = tuple(m + 4 + 2 * j for j in range(m + 1))
    h1, h2 = 3 * m + 5, 3 * m + 6
    edges: list[Edge] = []
    for j in range(m + 1):
        edges.append((s, spoke_s[j], SHARED))
        edges.append((spoke_s[j], v[j], SHARED))
        edges.append((t, spoke_t[j], SHARED))
        edges.append((spoke_t[j], v[j], SHARED))
    edges.append((v[0], h1, SHARED))
    edges.append((h1, h2, SHARED))
    edges.append((h2, v[m], SHARED))
    tags = {s: "pole:s", t: "pole:t", h1: "handle:1", h2: "handle:2"}
    for j in range(m + 1):
        tags[v[j]] = f"rim:{j}"
        tags[spoke_s[j]] = f"spoke:s:{j}"
        tags[spoke_t[j]] = f"spoke:t:{j}"
    fields = {"s": s, "t": t, "v": v, "spoke_s": spoke_s, "spoke_t": spoke_t, "handle": (h1, h2)}
    return 3 * m + 7, edges, tags, fields


def build_slice_subdivided(a: int, s: int, t: int, next_id: int) -> tuple[int, list[Edge], SliceSpec]:
    """One subdivided slice encoding the integer a, attached to poles s, t.
    New ids start at next_id; returns (next free id, edges, spec)."""
    if a < 1:
        raise FormatError(f"slice value must be >= 1, got {a}")
    pi_t = tuple(next_id + k for k in range(a + 1))
    pi_s = tuple(next_id + a + 1 + k for k in range(a + 1))
    fan_t = tuple(next_id + 2 * (a + 1) + k for k in range(a + 1))
    fan_s = tuple(next_id + 3 * (a + 1) + k for k in range(a + 1))
    edges: list[Edge] = []
    for k in range(a + 1):
        edges.append((t, fan_t[k], SHARED))
        edges.append((fan_t[k], pi_t[k], SHARED))
    for k in range(a):
        edges.append((pi_t[k], pi_t[k + 1], SHARED))
    for k in range(a + 1):
        edges.append((s, fan_s[k], SHARED))
        edges.append((fan_s[k], pi_s[k], SHARED))
    for k in range(a):
        edges.append((pi_s[k], pi_s[k + 1], SHARED))
    rungs = tuple((pi_s[k], pi_t[k], P2) for k in range(a + 1))
    # zig-zag diagonals alternate, first one from the s-row to the t-row
    zigzag = tuple(
        (pi_s[k], pi_t[k + 1], P1) if k % 2 == 0 else (pi_t[k], pi_s[k + 1], P1)
        for k in range(a)
    )
    edges.extend(rungs)
    edges.extend(zigzag)
    spec = SliceSpec(a, pi_t, pi_s, fan_t, fan_s, rungs, zigzag)
    return next_id + 4 * (a + 1), edges, spec


def reduce_gracsim(inst: ThreePartitionInstance) -> tuple[SefeInstance, GadgetIndex]:
    """Assemble the full instance: pumpkin, one transversal path per wedge,
    one slice per value, slices attached only to the poles (which wedge a
    slice ends up in is exactly what a drawing has to decide)."""
    m, B = inst.m, inst.B
    n, edges, tags, fields = build_pumpkin_subdivided(m)
    v = fields["v"]

    transversals = []
    for j in range(1, m + 1):
        inner = tuple(n + p for p in range(2 * B))
        n += 2 * B
        walk = (v[j - 1],) + inner + (v[j],)
        t_edges = tuple(
            (walk[r - 1], walk[r], P1 if r % 2 == 1 else P2) for r in range(1, len(walk))
        )
        edges.extend(t_edges)
        transversals.append(TransversalPath(inner, t_edges))

    slices = []
    for a in inst.A:
        n, sl_edges, spec = build_slice_subdivided(a, fields["s"], fields["t"], n)
        edges.extend(sl_edges)
        slices.append(spec)

    index = GadgetIndex(
        s=fields["s"],
        t=fields["t"],
        v=v,
        spoke_s=fields["spoke_s"],
        spoke_t=fields["spoke_t"],
        handle=fields["handle"],
        transversals=tuple(transversals),
        slices=tuple(slices),
    )
    return SefeInstance(n=n, edges=tuple(edges), tags=tags), index


def transversal_matchings(index: GadgetIndex) -> tuple[list[Edge], list[Edge]]:
    """The induced matchings hiding in the transversal paths: per path, the
    layer-1 edges minus the two extremal ones ((B-1) per path) and all the
    layer-2 edges (B per path)."""
    m1: list[Edge] = []
    m2: list[Edge] = []
    for path in index.transversals:
        for r, e in enumerate(path.edges, start=1):
            if e[2] == P2:
                m2.append(e)
            elif 1 < r < len(path.edges):
                m1.append(e)
    return m1, m2
