"""From a line diagram to the Lie algebra element, its support and its type."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import liealg
from .diagram import LineDiagram, assemble, decompose
from .dimvec import DimensionVector, ParabolicData
from .kinds import Kind
from .liealg import LieElement


class ConstructionError(RuntimeError):
    """An arrow landed on a matrix unit outside the Chevalley basis."""


def element_from_diagram(D: LineDiagram) -> LieElement:
    """``x = sum of eps(i, j) e_{i,j}`` over the arrows ``i -> j``."""
    terms = []
    for i, j in D.arrows:
        eps = liealg.epsilon(D.kind, D.N, i, j)
        if eps is None:
            raise ConstructionError(f"no basis element contains e({i},{j}) in {D.kind.value}_{D.N}")
        terms.append((i, j, eps))
    return LieElement(D.kind, D.N, terms)


def richardson_element(d: DimensionVector) -> LieElement:
    return element_from_diagram(assemble(d))


@dataclass(frozen=True)
class Root:
    """One root of the support, with the arrows that realise it."""

    arrows: tuple[tuple[int, int], ...]
    weight: tuple[int, ...]

    @property
    def through_origin(self) -> bool:
        return len(self.arrows) == 1


@dataclass(frozen=True)
class SupportSet:
    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def weights(self) -> list[tuple[int, ...]]:
        return [r.weight for r in self.roots]

    def independent(self) -> bool:
        return liealg.exact_rank(self.weights()) == len(self.roots)

    def to_json(self) -> list[dict]:
        return [{"arrows": [list(a) for a in r.arrows], "weight": list(r.weight)} for r in self.roots]


def support(D: LineDiagram) -> SupportSet:
    """Group arrows into roots: mirror pairs ``i->j, -j->-i`` or single ``i->-i``."""
    seen = set()
    roots = []
    arrows = set(D.arrows)
    n = D.N // 2
    for a, b in D.arrows:
        if (a, b) in seen:
            continue
        mirror = (-b, -a)
        if mirror not in arrows:
            raise ValueError(f"arrow {a}->{b} has no mirror")
        pair = tuple(sorted({(a, b), mirror}, reverse=True))
        seen.update(pair)
        roots.append(Root(pair, liealg.root_of(n, a, b)))
    return SupportSet(tuple(roots))


@dataclass(frozen=True)
class PieceData:
    rho: int
    sigma: int
    delta: int


@dataclass(frozen=True)
class TypeLabel:
    """Type of the orbit: a classical component of rank ``eta`` plus A-components.

    Small ranks keep their classical letter (``D2``, ``D3``, ``B1``, ``C1``):
    the Levi subgroups behind them are not conjugate to the A-type ones with
    the same isomorphism type.
    """

    letter: str
    eta: int
    a_parts: tuple[int, ...]
    pieces: tuple[PieceData, ...] = field(default=(), compare=False)
    I_d: tuple[int, ...] = field(default=(), compare=False)
    J_d: tuple[int, ...] = field(default=(), compare=False)

    @property
    def rank(self) -> int:
        return self.eta + sum(self.a_parts)

    @property
    def note(self) -> str:
        if self.letter == "D" and self.eta in (2, 3):
            return f"D{self.eta} is not conjugate to the A-type Levi of the same shape"
        if self.letter in "BC" and self.eta == 1:
            return f"{self.letter}1 is A1 on a {'short' if self.letter == 'B' else 'long'} root"
        return ""

    def __str__(self) -> str:
        return " + ".join([f"{self.letter}{self.eta}"] + [f"A{a}" for a in self.a_parts])

    def to_json(self) -> dict:
        return {
            "letter": self.letter,
            "eta": self.eta,
            "a_parts": list(self.a_parts),
            "rank": self.rank,
            "label": str(self),
            "note": self.note,
            "pieces": [{"rho": p.rho, "sigma": p.sigma, "delta": p.delta} for p in self.pieces],
            "I_d": list(self.I_d),
            "J_d": list(self.J_d),
        }


def _piece_data(kind: Kind, piece: DimensionVector) -> PieceData:
    sigma = sum(1 for e in piece.entries if e == 2)
    rho = sum(piece.entries) - sigma
    all_twos = all(e == 2 for e in piece.entries if e)
    special_middle = 2 if kind is Kind.ORTHOGONAL else 0
    delta = 0 if (piece[0] == special_middle or all_twos) else 1
    return PieceData(rho, sigma, delta)


def richardson_type(d: DimensionVector) -> TypeLabel:
    pieces = decompose(d)
    base, rest = pieces[0], pieces[1:]
    data = tuple(_piece_data(d.kind, p) for p in rest)
    I_d = tuple(j for j, p in enumerate(data, 1) if p.rho - p.delta == p.sigma + p.delta)
    J_d = tuple(j for j, p in enumerate(data, 1) if p.rho - p.delta > p.sigma + p.delta)
    twice_eta = sum(data[j - 1].rho + data[j - 1].sigma for j in J_d)
    base_size = sum(base.entries)
    if d.kind is Kind.SYMPLECTIC:
        letter = "C"
        twice_eta += base_size
    elif d.N % 2:
        letter = "B"
        twice_eta += base_size - 1
    else:
        letter = "D"
    if twice_eta % 2:
        raise AssertionError(f"odd doubled classical rank for {d}")
    a_parts = tuple(sorted((data[j - 1].rho - data[j - 1].delta - 1 for j in I_d), reverse=True))
    return TypeLabel(letter, twice_eta // 2, tuple(a for a in a_parts if a > 0), data, I_d, J_d)


def gamma_size_formula(d: DimensionVector) -> int:
    t = richardson_type(d)
    return t.eta + sum(t.pieces[j - 1].rho - t.pieces[j - 1].delta - 1 for j in t.I_d)


def is_nice(d: DimensionVector) -> bool:
    """Every arrow joins adjacent blocks, i.e. ``x`` lies in grading degree 1."""
    D = assemble(d)
    col = {v.label: v.col for v in D.vertices}
    return all(col[a] - col[b] == 1 for a, b in D.arrows)


def _swap_one(N: int) -> dict[int, int]:
    return {1: -1, -1: 1} if N >= 2 else {}


def swap_conjugate(x: LieElement) -> LieElement:
    """Conjugate by the element of ``O_N`` swapping ``v_1`` and ``v_-1``."""
    if x.kind is not Kind.ORTHOGONAL or x.N % 2:
        raise ValueError("conjugation by the v_1 <-> v_-1 swap needs so_N with N even")
    return x.relabel(_swap_one(x.N))


def swap_conjugate_parabolic(pd: ParabolicData) -> ParabolicData:
    if pd.kind is not Kind.ORTHOGONAL or pd.N % 2:
        raise ValueError("conjugation by the v_1 <-> v_-1 swap needs so_N with N even")
    return pd.relabel(_swap_one(pd.N))
