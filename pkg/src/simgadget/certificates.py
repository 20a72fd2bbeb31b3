"""Crossing structures: polynomial certificates that an instance admits a
drawing with at most k crossings per private edge.

A structure stores, for every layer-1 private edge, the ordered list of
layer-2 edges it crosses, and -- so that verification needs no search -- the
mirror view: for every layer-2 edge, the order of its crossings, each named
by a layer-1 edge plus an occurrence index (1-based position among that
pair's crossings along the layer-1 edge; one pair may cross many times).
Both orders are read from the edge's smaller endpoint to the larger.

Verification replaces each crossing by a degree-4 dummy vertex (in the
declared orders) and tests the resulting multigraph for planarity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    FormatError,
    InconsistentStructure,
    SizeLimitExceeded,
    SolutionMismatch,
    UnknownEdge,
)
from .graphs import P1, P2, Edge, Multigraph, SefeInstance, edge_key, parse_edge_key
from .sefe import KSefeGadgetIndex
from .threep import ThreePartitionInstance, ThreePartitionSolution, check_solution
from .graphs import planarity_test

Token = tuple[str, str, int]         # (layer-1 key, layer-2 key, occurrence)


def _key_sort(key: str):
    return parse_edge_key(key)


@dataclass(frozen=True)
class CrossingStructure:
    k: int
    e1: dict[str, tuple[str, ...]]                 # layer-1 key -> ordered layer-2 keys
    e2: dict[str, tuple[tuple[str, int], ...]]     # layer-2 key -> ordered (key, occurrence)

    def total_crossings(self) -> int:
        return sum(len(v) for v in self.e1.values())

    def crossings_on(self, key: str) -> int:
        if key in self.e1:
            return len(self.e1[key])
        if key in self.e2:
            return len(self.e2[key])
        return 0

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "e1": {k: list(v) for k, v in sorted(self.e1.items(), key=lambda kv: _key_sort(kv[0]))},
            "e2": {
                k: [[e, occ] for e, occ in v]
                for k, v in sorted(self.e2.items(), key=lambda kv: _key_sort(kv[0]))
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, doc: dict) -> "CrossingStructure":
        try:
            k = doc["k"]
            e1 = {key: tuple(str(f) for f in lst) for key, lst in doc["e1"].items()}
            e2 = {
                key: tuple((str(e), int(occ)) for e, occ in lst)
                for key, lst in doc["e2"].items()
            }
        except (KeyError, TypeError, ValueError):
            raise FormatError("certificate document needs 'k', 'e1' and 'e2'") from None
        if type(k) is not int or k < 0:
            raise FormatError("certificate cap 'k' must be a non-negative integer")
        return cls(k, e1, e2)

    @classmethod
    def from_json(cls, text: str) -> "CrossingStructure":
        return cls.from_json_dict(json.loads(text))


def _tokens(cs: CrossingStructure) -> tuple[list[Token], dict[str, list[Token]]]:
    """Tokens in layer-1 walk order, checking that the two views name
    exactly the same crossings."""
    walk1: list[Token] = []
    for ekey in cs.e1:
        counts: dict[str, int] = {}
        for fkey in cs.e1[ekey]:
            counts[fkey] = counts.get(fkey, 0) + 1
            walk1.append((ekey, fkey, counts[fkey]))
    walk2: dict[str, list[Token]] = {}
    seen2: set[Token] = set()
    for fkey in cs.e2:
        lst = []
        for ekey, occ in cs.e2[fkey]:
            token = (ekey, fkey, occ)
            if token in seen2:
                raise InconsistentStructure(f"crossing {token} listed twice in the e2 view")
            seen2.add(token)
            lst.append(token)
        walk2[fkey] = lst
    if set(walk1) != seen2:
        missing = sorted(set(walk1) ^ seen2)
        raise InconsistentStructure(f"views disagree on crossings: {missing[:5]}")
    return walk1, walk2


def planarize_detailed(
    inst: SefeInstance, cs: CrossingStructure
) -> tuple[Multigraph, list[Edge], list[int]]:
    """Planarized multigraph plus the labeled edge pieces (dummy vertices
    inherit the crossed edge's label on each piece) and the dummy ids."""
    present: dict[str, Edge] = {}
    for u, v, lab in inst.edges:
        e = (u, v, lab) if u < v else (v, u, lab)
        present[edge_key(*e)] = e
    for key in cs.e1:
        if key not in present:
            raise UnknownEdge(f"{key} is not an edge of the instance")
        if present[key][2] != P1:
            raise UnknownEdge(f"{key} is not a layer-1 private edge")
    for key in cs.e2:
        if key not in present:
            raise UnknownEdge(f"{key} is not an edge of the instance")
        if present[key][2] != P2:
            raise UnknownEdge(f"{key} is not a layer-2 private edge")

    walk1, walk2 = _tokens(cs)
    dummy: dict[Token, int] = {}
    n = inst.n
    for token in walk1:
        dummy[token] = n
        n += 1

    pieces: list[Edge] = []
    for u, v, lab in inst.edges:
        lo, hi = (u, v) if u < v else (v, u)
        key = edge_key(lo, hi, lab)
        if lab == P1 and cs.e1.get(key):
            counts: dict[str, int] = {}
            chain = [lo]
            for fkey in cs.e1[key]:
                counts[fkey] = counts.get(fkey, 0) + 1
                chain.append(dummy[(key, fkey, counts[fkey])])
            chain.append(hi)
        elif lab == P2 and cs.e2.get(key):
            chain = [lo] + [dummy[token] for token in walk2[key]] + [hi]
        else:
            chain = [lo, hi]
        for r in range(1, len(chain)):
            pieces.append((chain[r - 1], chain[r], lab))

    graph = Multigraph(n, tuple((a, b) for a, b, _ in pieces))
    return graph, pieces, sorted(dummy.values())


def planarize(inst: SefeInstance, cs: CrossingStructure) -> Multigraph:
    return planarize_detailed(inst, cs)[0]


def verify_certificate(inst: SefeInstance, cs: CrossingStructure, k: int) -> bool:
    """True iff every private edge carries at most k crossings and the
    planarization is planar.  Malformed structures raise; a well-formed
    structure that fails either condition returns False."""
    if k < 0:
        raise FormatError(f"cap must be non-negative, got {k}")
    graph, _, _ = planarize_detailed(inst, cs)
    if any(len(v) > k for v in cs.e1.values()):
        return False
    if any(len(v) > k for v in cs.e2.values()):
        return False
    return planarity_test(graph)


def construct_certificate_1sefe(
    inst: SefeInstance, index: KSefeGadgetIndex, sol: ThreePartitionSolution
) -> CrossingStructure:
    """Certificate of the canonical positive drawing: within wedge j the
    slices of triple j are concatenated left to right (each slice path read
    so its first tunnel edge is in layer 2), and the p-th transversal edge
    crosses the p-th tunnel edge -- labels are opposite by alternation.  On
    an expanded instance every replacement path's first piece (from the
    smaller original endpoint) inherits one crossing, giving every
    transversal edge exactly k crossings."""
    values = index.values()
    source = ThreePartitionInstance(index.B, values)
    problems = check_solution(source, sol)
    if problems:
        raise SolutionMismatch("; ".join(problems))
    k = index.k

    e1: dict[str, list[str]] = {}
    e2: dict[str, list[tuple[str, int]]] = {}

    def add(first: Edge, second: Edge) -> None:
        a = first if first[2] == P1 else second
        b = second if first[2] == P1 else first
        if a[2] != P1 or b[2] != P2:
            raise InconsistentStructure(f"cannot pair {first} with {second}")
        akey, bkey = edge_key(*a), edge_key(*b)
        lst = e1.setdefault(akey, [])
        lst.append(bkey)
        occ = lst.count(bkey)
        e2.setdefault(bkey, []).append((akey, occ))

    for j, triple in enumerate(sol.triples):
        tunnel = [e for i in sorted(triple) for e in index.slices[i].edges]
        t_edges = index.transversals[j].edges
        if len(tunnel) != len(t_edges):
            raise SolutionMismatch(
                f"wedge {j} pairs {len(t_edges)} path edges with {len(tunnel)} tunnel edges"
            )
        for te, ge in zip(t_edges, tunnel):
            if index.variant == "1sefe":
                add(te, ge)
            else:
                gkey = edge_key(*(ge if ge[0] < ge[1] else (ge[1], ge[0], ge[2])))
                for mid, u, w in index.expansion[gkey]:
                    add(te, (u, mid, ge[2]))

    e1_sorted = {key: tuple(e1[key]) for key in sorted(e1, key=_key_sort)}
    e2_sorted = {key: tuple(e2[key]) for key in sorted(e2, key=_key_sort)}
    return CrossingStructure(k, e1_sorted, e2_sorted)


def _multiset_perms(items: list[str]):
    """Distinct permutations of a multiset, lexicographically."""
    if not items:
        yield ()
        return
    uniq = sorted(set(items))
    for head in uniq:
        rest = list(items)
        rest.remove(head)
        for tail in _multiset_perms(rest):
            yield (head,) + tail


def _perms(items: list):
    """Permutations of distinct items, lexicographically."""
    if not items:
        yield ()
        return
    for i, head in enumerate(sorted(items)):
        rest = sorted(items)
        rest.pop(i)
        for tail in _perms(rest):
            yield (head,) + tail


def min_private_edge_crossings(
    inst: SefeInstance,
    e: Edge,
    cap: int,
    max_private_edges: int = 10,
    max_cap: int = 6,
) -> int | None:
    """Smallest c <= cap such that some crossing structure crossing e
    exactly c times (and every private edge at most cap times) verifies, or
    None.  Exhaustive over per-pair crossing counts and all orders along
    every edge, in canonical (lexicographic) order; exponential by nature,
    intended for single-gadget instances."""
    u, v, lab = e
    if lab not in (P1, P2):
        raise FormatError(f"{e} is not a private edge")
    if cap < 0:
        raise FormatError(f"cap must be non-negative, got {cap}")
    ekey = edge_key(u, v, lab)
    p1_keys = sorted(
        (edge_key(a, b, l) for a, b, l in inst.edges if l == P1), key=_key_sort
    )
    p2_keys = sorted(
        (edge_key(a, b, l) for a, b, l in inst.edges if l == P2), key=_key_sort
    )
    if ekey not in (p1_keys if lab == P1 else p2_keys):
        raise UnknownEdge(f"{ekey} is not an edge of the instance")
    if len(p1_keys) + len(p2_keys) > max_private_edges:
        raise SizeLimitExceeded(
            f"{len(p1_keys) + len(p2_keys)} private edges exceed the cap {max_private_edges}"
        )
    if cap > max_cap:
        raise SizeLimitExceeded(f"cap {cap} exceeds the search limit {max_cap}")

    pairs = [(a, b) for a in p1_keys for b in p2_keys]
    e_pairs = [i for i, (a, b) in enumerate(pairs) if ekey in (a, b)]

    def structures_with(target: int):
        """All count matrices with e crossed exactly target times."""
        counts = [0] * len(pairs)
        load: dict[str, int] = {key: 0 for key in p1_keys + p2_keys}

        def rec(idx: int):
            if idx == len(pairs):
                if load[ekey] == target:
                    yield tuple(counts)
                return
            remaining_e = sum(1 for i in e_pairs if i >= idx)
            if load[ekey] + remaining_e * cap < target:
                return
            a, b = pairs[idx]
            room = min(cap - load[a], cap - load[b])
            if ekey in (a, b):
                room = min(room, target - load[ekey])
            for c in range(room + 1):
                counts[idx] = c
                load[a] += c
                load[b] += c
                yield from rec(idx + 1)
                load[a] -= c
                load[b] -= c
            counts[idx] = 0

        yield from rec(0)

    for c in range(cap + 1):
        for counts in structures_with(c):
            sigma: dict[str, list[str]] = {}
            tokens: dict[str, list[tuple[str, int]]] = {}
            for (a, b), cnt in zip(pairs, counts):
                if cnt:
                    sigma.setdefault(a, []).extend([b] * cnt)
                    tokens.setdefault(b, []).extend((a, occ) for occ in range(1, cnt + 1))
            order_spaces = [list(_multiset_perms(sigma[a])) for a in sorted(sigma, key=_key_sort)]
            token_spaces = [list(_perms(tokens[b])) for b in sorted(tokens, key=_key_sort)]
            a_names = sorted(sigma, key=_key_sort)
            b_names = sorted(tokens, key=_key_sort)
            if _search_orders(inst, cap, a_names, order_spaces, b_names, token_spaces):
                return c
    return None


def _search_orders(inst, cap, a_names, order_spaces, b_names, token_spaces) -> bool:
    from itertools import product

    # empty spaces still yield the single empty assignment, so a
    # crossing-free structure is tested as the trivial case
    for e1_choice in product(*order_spaces):
        e1 = {a: perm for a, perm in zip(a_names, e1_choice)}
        for e2_choice in product(*token_spaces):
            e2 = {b: perm for b, perm in zip(b_names, e2_choice)}
            cs = CrossingStructure(cap, e1, e2)
            if verify_certificate(inst, cs, cap):
                return True
    return False
