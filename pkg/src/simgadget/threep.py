"""3-Partition instances: validation, exact solving, witness checking and
seeded generation of solvable instances.

An instance is a bound B and a list A of 3m values with B/4 < a_i < B/2
(strictly) and sum m*B.  Solutions are index triples, not value triples, so
repeated values stay distinguishable.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .errors import FormatError, InfeasibleParameters, InstanceValidationError, SizeLimitExceeded

DEFAULT_SIZE_CAP = 15


@dataclass(frozen=True)
class ThreePartitionInstance:
    B: int
    A: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.A) // 3

    def to_json_dict(self) -> dict:
        return {"B": self.B, "A": list(self.A)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ThreePartitionInstance":
        try:
            B, A = doc["B"], doc["A"]
        except (KeyError, TypeError):
            raise FormatError("instance document needs 'B' and 'A'") from None
        if not isinstance(A, list):
            raise FormatError("'A' must be a list")
        if not isinstance(B, int) or not all(isinstance(a, int) for a in A):
            raise FormatError("'B' and all of 'A' must be integers")
        return validate_instance(B, list(A))

    @classmethod
    def from_json(cls, text: str) -> "ThreePartitionInstance":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class ThreePartitionSolution:
    triples: tuple[tuple[int, int, int], ...]

    def to_json_dict(self) -> dict:
        return {"triples": [list(t) for t in self.triples]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ThreePartitionSolution":
        try:
            raw = doc["triples"]
        except (KeyError, TypeError):
            raise FormatError("solution document needs 'triples'") from None
        triples = []
        for t in raw:
            if len(t) != 3 or not all(isinstance(i, int) for i in t):
                raise FormatError(f"not an index triple: {t!r}")
            triples.append((t[0], t[1], t[2]))
        return cls(tuple(triples))

    @classmethod
    def from_json(cls, text: str) -> "ThreePartitionSolution":
        return cls.from_json_dict(json.loads(text))


def validate_instance(B: int, A: list[int]) -> ThreePartitionInstance:
    """Check every instance condition; on failure raise a diagnostic that
    lists all of them, not just the first."""
    problems = []
    if B < 1:
        problems.append(f"BNotPositive: B = {B}")
    if len(A) == 0 or len(A) % 3 != 0:
        problems.append(f"SizeNotMultipleOf3: |A| = {len(A)}")
    for i, a in enumerate(A):
        # strict B/4 < a < B/2 without rationals
        if not (4 * a > B and 2 * a < B):
            problems.append(f"ElementOutOfRange({i}): {a} not strictly between {B}/4 and {B}/2")
    if len(A) > 0 and len(A) % 3 == 0:
        m = len(A) // 3
        s = sum(A)
        if s != m * B:
            problems.append(f"SumMismatch: expected {m * B}, got {s}")
    if problems:
        raise InstanceValidationError(problems)
    return ThreePartitionInstance(B, tuple(A))


def check_solution(inst: ThreePartitionInstance, sol: ThreePartitionSolution) -> list[str]:
    """All reasons the witness fails; empty list means it checks out."""
    problems = []
    n = len(inst.A)
    if len(sol.triples) != n // 3:
        problems.append(f"WrongTripleCount: expected {n // 3}, got {len(sol.triples)}")
    seen: set[int] = set()
    for t in sol.triples:
        for i in t:
            if not (0 <= i < n):
                problems.append(f"IndexOutOfRange: {i}")
            elif i in seen:
                problems.append(f"IndexReused: {i}")
            else:
                seen.add(i)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        if missing:
            problems.append(f"IndicesUncovered: {missing}")
    for t in sol.triples:
        if all(0 <= i < n for i in t):
            s = sum(inst.A[i] for i in t)
            if s != inst.B:
                problems.append(f"TripleSumMismatch: {tuple(t)} sums to {s}, not {inst.B}")
    return problems


def verify_solution(inst: ThreePartitionInstance, sol: ThreePartitionSolution) -> bool:
    return not check_solution(inst, sol)


def solve_brute_force(
    inst: ThreePartitionInstance, size_cap: int = DEFAULT_SIZE_CAP
) -> ThreePartitionSolution | None:
    """Lexicographically first solution (triples sorted, ordered by smallest
    member), or None.  Branches on the triple containing the smallest unused
    index; failed used-index bitmasks are memoized."""
    n = len(inst.A)
    if n > size_cap:
        raise SizeLimitExceeded(f"3m = {n} exceeds brute-force cap {size_cap}")
    A, B = inst.A, inst.B
    full = (1 << n) - 1
    dead: set[int] = set()
    triples: list[tuple[int, int, int]] = []

    def rec(used: int) -> bool:
        if used == full:
            return True
        if used in dead:
            return False
        i = 0
        while used >> i & 1:
            i += 1
        rest = [j for j in range(i + 1, n) if not used >> j & 1]
        for p in range(len(rest)):
            j = rest[p]
            for q in range(p + 1, len(rest)):
                k = rest[q]
                if A[i] + A[j] + A[k] == B:
                    triples.append((i, j, k))
                    if rec(used | 1 << i | 1 << j | 1 << k):
                        return True
                    triples.pop()
        dead.add(used)
        return False

    if rec(0):
        return ThreePartitionSolution(tuple(triples))
    return None


def generate_yes_instance(
    m: int, B: int, seed: int = 0
) -> tuple[ThreePartitionInstance, ThreePartitionSolution]:
    """Plant m in-range triples summing to B, then shuffle.  Returns the
    shuffled instance and the planted solution in shuffled indices."""
    if m < 1:
        raise InfeasibleParameters(f"m must be >= 1, got {m}")
    lo = B // 4 + 1          # smallest value with 4a > B
    hi = (B - 1) // 2        # largest value with 2a < B
    legal = [
        (x, y, z)
        for x in range(lo, hi + 1)
        for y in range(x, hi + 1)
        for z in range(y, hi + 1)
        if x + y + z == B
    ]
    if not legal:
        raise InfeasibleParameters(
            f"no integer triple strictly between {B}/4 and {B}/2 sums to {B}"
        )
    rng = random.Random(seed)
    chosen = [legal[rng.randrange(len(legal))] for _ in range(m)]
    values = [v for t in chosen for v in t]
    order = list(range(3 * m))
    rng.shuffle(order)
    A = [0] * (3 * m)
    pos = [0] * (3 * m)
    for p, orig in enumerate(order):
        A[p] = values[orig]
        pos[orig] = p
    triples = sorted(
        tuple(sorted((pos[3 * j], pos[3 * j + 1], pos[3 * j + 2]))) for j in range(m)
    )
    inst = validate_instance(B, A)
    return inst, ThreePartitionSolution(tuple(triples))


def value_triples(inst: ThreePartitionInstance, sol: ThreePartitionSolution) -> list[tuple[int, ...]]:
    """Solution as a sorted multiset of sorted value triples; the shape that
    is invariant under re-indexing."""
    return sorted(tuple(sorted(inst.A[i] for i in t)) for t in sol.triples)
