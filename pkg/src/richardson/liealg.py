"""Exact integer model of ``so_N`` and ``sp_2n``.

The natural module has basis ``v_-n, ..., v_n`` (``v_0`` only when N is odd).
A matrix unit ``e_{i,j}`` is the linear map sending ``v_i`` to ``v_j`` and
every other basis vector to zero.  This is the transpose of the usual
row/column convention, so nothing in this module indexes a 2-D array: all
products, brackets and form checks are written against the map semantics.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Iterable, Mapping

from .kinds import Kind

MIXED = "mixed"


def labels(N: int) -> tuple[int, ...]:
    n = N // 2
    neg = tuple(range(-n, 0))
    pos = tuple(range(1, n + 1))
    return neg + ((0,) if N % 2 else ()) + pos


def check_group(kind, N: int) -> Kind:
    kind = Kind.parse(kind)
    if kind is Kind.ORTHOGONAL and N < 3:
        raise ValueError(f"so_N needs N >= 3, got {N}")
    if kind is Kind.SYMPLECTIC and (N < 2 or N % 2):
        raise ValueError(f"sp_N needs an even N >= 2, got {N}")
    return kind


def form(kind, i: int, j: int) -> int:
    """The invariant bilinear form on basis vectors, ``(v_i, v_j)``."""
    if i != -j:
        return 0
    if Kind.parse(kind) is Kind.ORTHOGONAL:
        return 1
    return 1 if i > 0 else -1


def dim_g(kind, N: int) -> int:
    if Kind.parse(kind) is Kind.ORTHOGONAL:
        return N * (N - 1) // 2
    return N * (N + 1) // 2


class LieElement:
    """A sparse integer combination of matrix units ``e_{i,j}``.

    ``x[i, j]`` is the coefficient of ``v_j`` in ``x(v_i)``.
    """

    __slots__ = ("kind", "N", "_terms")

    def __init__(self, kind, N: int, terms=None):
        self.kind = Kind.parse(kind)
        self.N = int(N)
        valid = set(labels(self.N))
        if terms is None:
            items = ()
        elif isinstance(terms, Mapping):
            items = ((i, j, c) for (i, j), c in terms.items())
        else:
            items = terms
        acc: dict[tuple[int, int], int] = {}
        for i, j, c in items:
            if i not in valid or j not in valid:
                raise ValueError(f"label out of range for N={self.N}: ({i}, {j})")
            acc[(i, j)] = acc.get((i, j), 0) + c
        self._terms = {k: v for k, v in sorted(acc.items()) if v}

    @classmethod
    def unit(cls, kind, N, i, j, coeff=1):
        return cls(kind, N, [(i, j, coeff)])

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __getitem__(self, key) -> int:
        return self._terms.get(key, 0)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check_same(self, other: "LieElement"):
        if (self.kind, self.N) != (other.kind, other.N):
            raise ValueError(f"mismatched algebras: {self.kind}/{self.N} vs {other.kind}/{other.N}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return (self.kind, self.N, self._terms) == (other.kind, other.N, other._terms)

    def __hash__(self) -> int:
        return hash((self.kind, self.N, tuple(self._terms.items())))

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check_same(other)
        t = dict(self._terms)
        for k, v in other._terms.items():
            t[k] = t.get(k, 0) + v
        return LieElement(self.kind, self.N, t)

    def __neg__(self) -> "LieElement":
        return LieElement(self.kind, self.N, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "LieElement":
        return LieElement(self.kind, self.N, {k: scalar * v for k, v in self._terms.items()})

    def compose(self, other: "LieElement") -> "LieElement":
        """The map ``self o other`` (apply ``other`` first)."""
        self._check_same(other)
        by_source: dict[int, list[tuple[int, int]]] = {}
        for (k, j), c in self._terms.items():
            by_source.setdefault(k, []).append((j, c))
        out: dict[tuple[int, int], int] = {}
        for (i, k), a in other._terms.items():
            for j, b in by_source.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return LieElement(self.kind, self.N, out)

    def apply(self, vector: Mapping[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, j), c in self._terms.items():
            if vector.get(i):
                out[j] = out.get(j, 0) + c * vector[i]
        return {k: v for k, v in out.items() if v}

    def power(self, k: int) -> "LieElement":
        result = identity(self.kind, self.N)
        for _ in range(k):
            result = self.compose(result)
        return result

    def relabel(self, perm: Mapping[int, int]) -> "LieElement":
        return LieElement(self.kind, self.N, [(perm.get(i, i), perm.get(j, j), c) for (i, j), c in self])

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in self._terms.items()]

    @classmethod
    def from_json(cls, kind, N, triples) -> "LieElement":
        return cls(kind, N, [tuple(t) for t in triples])

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*e({i},{j})" for (i, j), c in self._terms.items()) or "0"
        return f"LieElement({self.kind.value}, N={self.N}: {body})"


def identity(kind, N) -> LieElement:
    return LieElement(kind, N, [(i, i, 1) for i in labels(N)])


def zero(kind, N) -> LieElement:
    return LieElement(kind, N)


@lru_cache(maxsize=None)
def _basis_terms(kind: Kind, N: int) -> tuple[tuple[tuple[int, int, int], ...], ...]:
    n = N // 2
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out.append(((i, j, 1), (-j, -i, -1)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if kind is Kind.ORTHOGONAL:
                out.append(((i, -j, 1), (j, -i, -1)))
                out.append(((-j, i, 1), (-i, j, -1)))
            else:
                out.append(((i, -j, 1), (j, -i, 1)))
                out.append(((-i, j, 1), (-j, i, 1)))
    for k in range(1, n + 1):
        if kind is Kind.ORTHOGONAL:
            if N % 2:
                out.append(((k, 0, 1), (0, -k, -1)))
                out.append(((0, k, 1), (-k, 0, -1)))
        else:
            out.append(((k, -k, 1),))
            out.append(((-k, k, 1),))
    return tuple(out)


def chevalley_basis(kind, N: int) -> list[LieElement]:
    """Chevalley basis of ``so_N`` / ``sp_N``, the diagonal ``e_ii - e_-i-i`` included."""
    kind = check_group(kind, N)
    return [LieElement(kind, N, t) for t in _basis_terms(kind, N)]


@lru_cache(maxsize=None)
def _epsilon_table(kind: Kind, N: int) -> dict[tuple[int, int], int]:
    table = {}
    for terms in _basis_terms(kind, N):
        for i, j, c in terms:
            if (i, j) in table:
                raise AssertionError(f"matrix unit e({i},{j}) occurs twice in the basis")
            table[(i, j)] = c
    return table


def epsilon(kind, N: int, i: int, j: int) -> int | None:
    """Coefficient of ``e_{i,j}`` in the basis element containing it, or None."""
    return _epsilon_table(Kind.parse(kind), N).get((i, j))


def in_g(x: LieElement) -> bool:
    """``(x v, w) + (v, x w) = 0`` for all basis vectors ``v, w``."""
    acc: dict[tuple[int, int], int] = {}
    for (a, j), c in x:
        # (x v_a, v_b) picks up c * (v_j, v_b), nonzero only for b = -j
        acc[(a, -j)] = acc.get((a, -j), 0) + c * form(x.kind, j, -j)
        # (v_b', x v_a) with b' = -j
        acc[(-j, a)] = acc.get((-j, a), 0) + c * form(x.kind, -j, j)
    return all(v == 0 for v in acc.values())


def bracket(x: LieElement, y: LieElement) -> LieElement:
    return x.compose(y) - y.compose(x)


def block_degree(x: LieElement, pd):
    """Common grading degree of the entries of ``x``; ``MIXED`` if they differ.

    The zero element has no degree and gives None.
    """
    degrees = {pd.block_of[i] - pd.block_of[j] for (i, j), _ in x}
    if not degrees:
        return None
    if len(degrees) > 1:
        return MIXED
    return degrees.pop()


def in_u(x: LieElement, pd) -> bool:
    """Every entry maps a vector into a strictly lower block."""
    return all(pd.block_of[j] < pd.block_of[i] for (i, j), _ in x)


def root_of(n: int, i: int, j: int) -> tuple[int, ...]:
    """Torus weight of ``e_{i,j}``: the character of ``v_j`` minus that of ``v_i``."""
    w = [0] * n
    if j:
        w[abs(j) - 1] += 1 if j > 0 else -1
    if i:
        w[abs(i) - 1] -= 1 if i > 0 else -1
    return tuple(w)


def _sparse(row) -> dict:
    if isinstance(row, LieElement):
        items = row.terms.items()
    elif isinstance(row, Mapping):
        items = row.items()
    else:
        items = enumerate(row)
    items = [(k, v) for k, v in items if v]
    if any(isinstance(v, Fraction) for _, v in items):
        scale = reduce(lcm, (Fraction(v).denominator for _, v in items), 1)
        items = [(k, int(v * scale)) for k, v in items]
    return dict(items)


def _primitive(row: dict) -> dict:
    g = reduce(gcd, row.values(), 0)
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def exact_rank(rows: Iterable) -> int:
    """Rank over the rationals of integer/rational vectors.

    Rows may be LieElements, mappings from coordinate keys to values, or plain
    sequences.  Sparse fraction-free elimination: each pivot row is kept
    primitive (content divided out), so entries stay integral and small.
    """
    pivots: dict = {}
    for row in rows:
        r = _primitive(_sparse(row))
        while r:
            col = min(r)
            p = pivots.get(col)
            if p is None:
                pivots[col] = r
                break
            a, b = p[col], r[col]
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                new[k] = new.get(k, 0) - b * v
            r = _primitive({k: v for k, v in new.items() if v})
    return len(pivots)
