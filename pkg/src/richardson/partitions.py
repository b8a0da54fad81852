"""Partitions, dominance order and the orthogonal/symplectic collapse.

Partitions index nilpotent orbits: by Jordan type in ``gl_N`` and, restricted
to the orthogonal (even parts with even multiplicity) or symplectic (odd
parts with even multiplicity) ones, in ``so_N`` and ``sp_2n``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator

from .kinds import Kind


@dataclass(frozen=True)
class Partition:
    """A non-increasing tuple of positive integers (possibly empty)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, values: Iterable[int]) -> "Partition":
        """Sort ``values`` and drop zeros."""
        return cls(tuple(sorted((int(v) for v in values if v), reverse=True)))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)


def _prefix_sums(parts: tuple[int, ...], length: int) -> list[int]:
    padded = parts + (0,) * (length - len(parts))
    return list(accumulate(padded))


def dominance_leq(a: Partition, b: Partition) -> bool:
    """True iff ``a <= b`` in the dominance order."""
    if a.total != b.total:
        raise ValueError(f"cannot compare partitions of {a.total} and {b.total}")
    length = max(len(a), len(b))
    return all(x <= y for x, y in zip(_prefix_sums(a.parts, length), _prefix_sums(b.parts, length)))


def dual(a: Partition) -> Partition:
    """Conjugate partition: part k counts the parts of ``a`` that are >= k."""
    if not a.parts:
        return Partition()
    return Partition(tuple(sum(1 for p in a.parts if p >= k) for k in range(1, a.parts[0] + 1)))


def is_orthogonal(a: Partition) -> bool:
    return all(m % 2 == 0 for p, m in a.multiplicities().items() if p % 2 == 0)


def is_symplectic(a: Partition) -> bool:
    return all(m % 2 == 0 for p, m in a.multiplicities().items() if p % 2 == 1)


def is_valid(a: Partition, kind) -> bool:
    kind = Kind.parse(kind)
    return is_orthogonal(a) if kind is Kind.ORTHOGONAL else is_symplectic(a)


def _bad_parity(kind: Kind) -> int:
    # parity of the parts that must come with even multiplicity
    return 0 if kind is Kind.ORTHOGONAL else 1


def collapse(a: Partition, kind) -> Partition:
    """Largest orthogonal/symplectic partition dominated by ``a``.

    Greedy repair: take the largest part ``q`` of the forbidden parity that
    has odd multiplicity, lower its last occurrence by one and raise the first
    later part that is smaller than ``q - 1``.  Repeat until valid.
    """
    kind = Kind.parse(kind)
    if kind is Kind.SYMPLECTIC and a.total % 2:
        raise ValueError(f"no symplectic partition of the odd number {a.total}")
    parity = _bad_parity(kind)
    parts = list(a.parts)
    while True:
        counts = Counter(parts)
        bad = [p for p, m in counts.items() if p % 2 == parity and m % 2 == 1]
        if not bad:
            return Partition(tuple(parts))
        q = max(bad)
        last = max(i for i, p in enumerate(parts) if p == q)
        parts[last] -= 1
        for j in range(last + 1, len(parts) + 1):
            if j == len(parts):
                parts.append(1)
                break
            if parts[j] < q - 1:
                parts[j] += 1
                break
        parts = [p for p in parts if p > 0]


@lru_cache(maxsize=None)
def partitions_of(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n == 0:
        return (Partition(),)
    largest = n if largest is None else min(largest, n)
    out = []
    for first in range(largest, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + rest.parts))
    return tuple(out)


def valid_partitions(kind, n: int) -> tuple[Partition, ...]:
    kind = Kind.parse(kind)
    if kind is Kind.SYMPLECTIC and n % 2:
        return ()
    return tuple(p for p in partitions_of(n) if is_valid(p, kind))


def brute_force_collapse(a: Partition, kind) -> Partition:
    """Dominance-maximum of the valid partitions below ``a``, by enumeration.

    Raises ``ValueError`` if there is no such partition or the maximum is not
    unique.
    """
    below = [p for p in valid_partitions(kind, a.total) if dominance_leq(p, a)]
    maximal = [p for p in below if not any(q != p and dominance_leq(p, q) for q in below)]
    if len(maximal) != 1:
        raise ValueError(f"{len(maximal)} maximal {Kind.parse(kind).value} partitions below {a}")
    return maximal[0]
