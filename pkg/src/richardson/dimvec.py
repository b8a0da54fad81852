"""Dimension vectors and the parabolic subalgebras they describe.

A dimension vector ``d = (d_-s, ..., d_0, ..., d_s)`` is symmetric and lists
the block sizes of the Levi subgroup along the ordered basis
``v_-n, ..., v_n``.  Block ``i`` holds ``d_i`` consecutive labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate
from typing import Iterator, Sequence

from . import liealg
from .kinds import Kind
from .partitions import Partition, dual


@dataclass(frozen=True)
class DimensionVector:
    kind: Kind
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) % 2 == 0:
            raise ValueError(f"dimension vector needs odd length: {entries}")
        if any(e < 0 for e in entries):
            raise ValueError(f"negative entry in dimension vector: {entries}")
        if entries != entries[::-1]:
            raise ValueError(f"dimension vector is not symmetric: {entries}")
        if self.kind is Kind.SYMPLECTIC and entries[len(entries) // 2] % 2:
            raise ValueError(f"symplectic dimension vector needs an even middle entry: {entries}")

    @classmethod
    def of(cls, kind, entries: Sequence[int]) -> "DimensionVector":
        return cls(Kind.parse(kind), tuple(entries))

    @property
    def s(self) -> int:
        return len(self.entries) // 2

    @property
    def N(self) -> int:
        return sum(self.entries)

    @property
    def n(self) -> int:
        return self.N // 2

    @property
    def half(self) -> tuple[int, ...]:
        """``(d_1, ..., d_s)``."""
        return self.entries[self.s + 1:]

    def __getitem__(self, i: int) -> int:
        """Signed indexing: ``d[0]`` is the middle entry."""
        if not -self.s <= i <= self.s:
            raise IndexError(i)
        return self.entries[i + self.s]

    def indices(self) -> range:
        return range(-self.s, self.s + 1)

    def items(self) -> Iterator[tuple[int, int]]:
        return zip(self.indices(), self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "entries": list(self.entries), "N": self.N}


def make_dimvec(kind, half: Sequence[int], N: int) -> DimensionVector:
    """Build ``(d_s, ..., d_1, d_0, d_1, ..., d_s)`` with ``d_0 = N - 2 sum(half)``."""
    kind = Kind.parse(kind)
    half = tuple(int(h) for h in half)
    if any(h < 0 for h in half):
        raise ValueError(f"negative block size in {half}")
    d0 = N - 2 * sum(half)
    if d0 < 0:
        raise ValueError(f"blocks {half} do not fit in N={N}")
    if kind is Kind.SYMPLECTIC and N % 2:
        raise ValueError(f"symplectic N must be even, got {N}")
    return DimensionVector(kind, half[::-1] + (d0,) + half)


def is_proper(d: DimensionVector) -> bool:
    if any(e == 0 for i, e in d.items() if i != 0):
        return False
    if d.kind is Kind.ORTHOGONAL and d.s > 0 and d[0] == 0 and d[1] == 1:
        return False
    return True


def normalize(d: DimensionVector) -> DimensionVector:
    """The proper vector defining the same parabolic as ``d``."""
    half = tuple(e for e in d.half if e)
    d0 = d[0]
    if d.kind is Kind.ORTHOGONAL and d0 == 0 and half and half[0] == 1:
        half, d0 = half[1:], 2
    return DimensionVector(d.kind, half[::-1] + (d0,) + half)


def dual_sorted_partition(d: DimensionVector) -> Partition:
    """Dual of the block sizes sorted non-increasingly (the ``gl_N`` Richardson type)."""
    return dual(Partition.from_parts(d.entries))


@dataclass(frozen=True)
class ParabolicData:
    """Block structure of the parabolic ``P(d)``.

    ``block_of`` maps each basis label to its signed block index;
    ``boundaries`` are the cumulative block sizes along ``v_-n, ..., v_n``;
    ``dim_levi`` includes the torus.
    """

    dimvec: DimensionVector
    block_of: dict = field(hash=False, compare=False)
    boundaries: tuple[int, ...]
    dim_u: int
    dim_levi: int

    @property
    def kind(self) -> Kind:
        return self.dimvec.kind

    @property
    def N(self) -> int:
        return self.dimvec.N

    def blocks(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {i: [] for i in self.dimvec.indices()}
        for label, b in sorted(self.block_of.items()):
            out[b].append(label)
        return out

    def relabel(self, perm: dict[int, int]) -> "ParabolicData":
        """Parabolic data for the conjugate of ``P(d)`` by a label permutation."""
        block_of = {perm.get(i, i): b for i, b in self.block_of.items()}
        return ParabolicData(self.dimvec, block_of, self.boundaries, self.dim_u, self.dim_levi)


def _block_map(d: DimensionVector) -> dict[int, int]:
    block_of = {}
    it = iter(liealg.labels(d.N))
    for i, size in d.items():
        for _ in range(size):
            block_of[next(it)] = i
    return block_of


@lru_cache(maxsize=None)
def parabolic_data(d: DimensionVector) -> ParabolicData:
    block_of = _block_map(d)
    dim_u = dim_levi = 0
    for b in liealg.chevalley_basis(d.kind, d.N):
        degrees = {block_of[i] - block_of[j] for (i, j), _ in b}
        if len(degrees) != 1:
            raise AssertionError(f"basis element {b} is not homogeneous")
        deg = degrees.pop()
        if deg > 0:
            dim_u += 1
        elif deg == 0:
            dim_levi += 1
    return ParabolicData(d, block_of, tuple(accumulate(d.entries)), dim_u, dim_levi)


def proper_dimvecs(kind, N: int) -> list[DimensionVector]:
    """Every proper dimension vector of total ``N``, in a fixed order."""
    kind = Kind.parse(kind)
    if kind is Kind.SYMPLECTIC and N % 2:
        return []
    out = []

    def compositions(total: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first,) + rest

    for half in compositions(N // 2):
        d = make_dimvec(kind, half, N)
        if is_proper(d):
            out.append(d)
    return out
