"""Independent checks of a constructed Richardson element.

Three routes confirm that ``x`` is Richardson for ``P(d)``:

* its Jordan type, from ranks of powers, equals the orthogonal/symplectic
  collapse of the dual of the sorted block sizes;
* the tangent space ``[p, x]`` fills ``u`` (dense ``P``-orbit);
* ``dim C_g(x)`` equals the Levi dimension, i.e. ``dim G.x = 2 dim u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import liealg
from .diagram import LineDiagram, assemble, decompose
from .dimvec import DimensionVector, ParabolicData, dual_sorted_partition, parabolic_data
from .element import (
    SupportSet,
    TypeLabel,
    element_from_diagram,
    gamma_size_formula,
    is_nice,
    richardson_type,
    support,
)
from .liealg import LieElement
from .partitions import Partition, collapse, dual, is_valid


def matrix_rank(x: LieElement) -> int:
    rows: dict[int, dict[int, int]] = {}
    for (i, j), c in x:
        rows.setdefault(i, {})[j] = c
    return liealg.exact_rank(rows.values())


def is_nilpotent(x: LieElement) -> bool:
    return x.power(x.N).is_zero()


def jordan_partition(x: LieElement) -> Partition:
    """Jordan type of a nilpotent ``x``: the dual has parts ``rank x^(k-1) - rank x^k``."""
    ranks = [x.N]
    power = liealg.identity(x.kind, x.N)
    for _ in range(x.N):
        if ranks[-1] == 0:
            break
        power = x.compose(power)
        ranks.append(matrix_rank(power))
    if ranks[-1] != 0:
        raise ValueError("jordan_partition needs a nilpotent element")
    return dual(Partition(tuple(a - b for a, b in zip(ranks, ranks[1:]))))


def expected_partition(d: DimensionVector) -> Partition:
    return collapse(dual_sorted_partition(d), d.kind)


def _brackets_with(x: LieElement, basis) -> list[LieElement]:
    return [liealg.bracket(b, x) for b in basis]


def is_dense_in_u(x: LieElement, pd: ParabolicData) -> bool:
    """``dim [p, x] == dim u``, exactly."""
    if not liealg.in_u(x, pd):
        raise ValueError("density test needs x in u")
    p_basis = [b for b in liealg.chevalley_basis(x.kind, x.N) if liealg.block_degree(b, pd) >= 0]
    return liealg.exact_rank(_brackets_with(x, p_basis)) == pd.dim_u


def centralizer_dim(x: LieElement) -> int:
    basis = liealg.chevalley_basis(x.kind, x.N)
    return len(basis) - liealg.exact_rank(_brackets_with(x, basis))


@dataclass(frozen=True)
class RichardsonReport:
    dimvec: DimensionVector
    pieces: tuple[DimensionVector, ...]
    diagram: LineDiagram
    x: LieElement
    parabolic: ParabolicData
    in_g: bool
    in_u: bool
    nilpotent: bool
    jordan: Partition
    expected: Partition
    dense: bool
    centralizer_dim: int
    support: SupportSet
    gamma_formula: int
    type: TypeLabel
    nice: bool

    @property
    def partition_matches(self) -> bool:
        return self.jordan == self.expected

    @property
    def jordan_valid(self) -> bool:
        return is_valid(self.jordan, self.dimvec.kind)

    @property
    def centralizer_matches(self) -> bool:
        return self.centralizer_dim == self.parabolic.dim_levi

    @property
    def support_matches(self) -> bool:
        return len(self.support) == self.gamma_formula == self.type.rank

    def flags(self) -> dict[str, bool]:
        return {
            "in_g": self.in_g,
            "in_u": self.in_u,
            "nilpotent": self.nilpotent,
            "partition_matches": self.partition_matches,
            "partition_valid": self.jordan_valid,
            "dense": self.dense,
            "centralizer_matches": self.centralizer_matches,
            "support_matches": self.support_matches,
            "support_independent": self.support.independent(),
        }

    @property
    def ok(self) -> bool:
        return all(self.flags().values())

    def to_json(self) -> dict:
        return {
            "dimvec": self.dimvec.to_json(),
            "pieces": [list(p.entries) for p in self.pieces],
            "x": self.x.to_json(),
            "partition": self.jordan.to_json(),
            "expected_partition": self.expected.to_json(),
            "dim_u": self.parabolic.dim_u,
            "dim_levi": self.parabolic.dim_levi,
            "centralizer_dim": self.centralizer_dim,
            "gamma": self.support.to_json(),
            "gamma_size": len(self.support),
            "gamma_formula": self.gamma_formula,
            "type": self.type.to_json(),
            "nice": self.nice,
            "flags": self.flags(),
            "ok": self.ok,
        }


@lru_cache(maxsize=None)
def full_report(d: DimensionVector) -> RichardsonReport:
    liealg.check_group(d.kind, d.N)
    D = assemble(d)
    x = element_from_diagram(D)
    pd = parabolic_data(d)
    inside_u = liealg.in_u(x, pd)
    nilpotent = is_nilpotent(x)
    return RichardsonReport(
        dimvec=d,
        pieces=tuple(decompose(d)),
        diagram=D,
        x=x,
        parabolic=pd,
        in_g=liealg.in_g(x),
        in_u=inside_u,
        nilpotent=nilpotent,
        jordan=jordan_partition(x) if nilpotent else Partition(),
        expected=expected_partition(d),
        dense=is_dense_in_u(x, pd) if inside_u else False,
        centralizer_dim=centralizer_dim(x),
        support=support(D),
        gamma_formula=gamma_size_formula(d),
        type=richardson_type(d),
        nice=is_nice(d),
    )
