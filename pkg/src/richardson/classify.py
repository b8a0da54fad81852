"""Which nilpotent orbits are Richardson (polarizable)?

Orthogonal: ``lambda = (lambda^0, lambda^1, ..., lambda^m)`` with
``lambda^0`` all odd (possibly empty), odd-indexed segments even-pair and
even-indexed segments odd 2-step-descending.

Symplectic: ``lambda = (lambda^1, ..., lambda^m, mu)`` with odd-indexed
segments odd-pair (``lambda^1`` may be empty), even-indexed segments even
2-step-descending and ``mu`` all even (possibly empty).

Segments after the first are nonempty.  Decompositions are not canonical
(shapes overlap at the junctions), so acceptance is decided by searching
every segmentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .dimvec import proper_dimvecs
from .kinds import Kind
from .partitions import Partition, is_orthogonal, is_symplectic, valid_partitions
from .verify import full_report


def _pairs(seg, parity) -> bool:
    return (
        len(seg) % 2 == 0
        and all(p % 2 == parity for p in seg)
        and all(seg[k] == seg[k + 1] for k in range(0, len(seg), 2))
    )


def _two_step_descending(seg, parity) -> bool:
    return (
        len(seg) % 2 == 0
        and all(p % 2 == parity for p in seg)
        and all(seg[k] > seg[k + 1] for k in range(1, len(seg) - 1, 2))
    )


def is_even_pair(seg) -> bool:
    return _pairs(tuple(seg), 0)


def is_odd_pair(seg) -> bool:
    return _pairs(tuple(seg), 1)


def is_even_two_step_descending(seg) -> bool:
    return _two_step_descending(tuple(seg), 0)


def is_odd_two_step_descending(seg) -> bool:
    return _two_step_descending(tuple(seg), 1)


SEGMENT_TESTS = {
    "odd": lambda seg: all(p % 2 for p in seg),
    "even": lambda seg: all(p % 2 == 0 for p in seg),
    "even-pair": is_even_pair,
    "odd-pair": is_odd_pair,
    "even-2-step-descending": is_even_two_step_descending,
    "odd-2-step-descending": is_odd_two_step_descending,
}


@dataclass(frozen=True)
class ShapeDecomposition:
    kind: Kind
    segments: tuple[tuple[str, Partition], ...] = field(default=())

    def concatenated(self) -> Partition:
        return Partition(tuple(p for _, seg in self.segments for p in seg))

    def check(self) -> bool:
        return all(SEGMENT_TESTS[tag](seg.parts) for tag, seg in self.segments)

    def to_json(self) -> list[dict]:
        return [{"shape": tag, "parts": seg.to_json()} for tag, seg in self.segments]


def _search(parts: tuple[int, ...], cycle: tuple[str, str], head: str, tail: str | None):
    """Find a segmentation ``head, cycle[0], cycle[1], cycle[0], ..., tail``.

    ``head`` and ``tail`` may be empty; cycle segments may not.  Returns the
    list of ``(tag, segment)`` or None.
    """
    L = len(parts)

    @lru_cache(maxsize=None)
    def rest(pos: int, phase: int):
        # phase: index into ``cycle`` of the next segment
        if tail is None:
            if pos == L:
                return ()
        elif SEGMENT_TESTS[tail](parts[pos:]):
            return (((tail, parts[pos:]),) if pos < L else ())
        tag = cycle[phase]
        for end in range(pos + 2, L + 1, 2):
            seg = parts[pos:end]
            if not SEGMENT_TESTS[tag](seg):
                continue
            found = rest(end, 1 - phase)
            if found is not None:
                return ((tag, seg),) + found
        return None

    for cut in range(L + 1):
        if not SEGMENT_TESTS[head](parts[:cut]):
            continue
        found = rest(cut, 0)
        if found is not None:
            return ([(head, parts[:cut])] if cut else []) + list(found)
    return None


def _decomposition(kind: Kind, found) -> ShapeDecomposition | None:
    if found is None:
        return None
    return ShapeDecomposition(kind, tuple((tag, Partition(seg)) for tag, seg in found))


def classify_orth(a: Partition) -> ShapeDecomposition | None:
    if not is_orthogonal(a):
        raise ValueError(f"{a} is not an orthogonal partition")
    found = _search(a.parts, ("even-pair", "odd-2-step-descending"), "odd", None)
    return _decomposition(Kind.ORTHOGONAL, found)


def classify_symp(a: Partition) -> ShapeDecomposition | None:
    if not is_symplectic(a):
        raise ValueError(f"{a} is not a symplectic partition")
    # the optional first odd-pair segment plays the role of the head
    found = _search(a.parts, ("even-2-step-descending", "odd-pair"), "odd-pair", "even")
    return _decomposition(Kind.SYMPLECTIC, found)


def classify(a: Partition, kind) -> ShapeDecomposition | None:
    kind = Kind.parse(kind)
    return classify_orth(a) if kind is Kind.ORTHOGONAL else classify_symp(a)


def enumerate_richardson_partitions(kind, N: int) -> set[Partition]:
    """Jordan types of the constructed elements over all proper ``d`` of total ``N``.

    Only fully verified constructions contribute; a failed check raises.
    """
    out = set()
    for d in proper_dimvecs(kind, N):
        report = full_report(d)
        if not report.ok:
            raise AssertionError(f"construction for {d} failed verification: {report.flags()}")
        out.add(report.jordan)
    return out


@dataclass(frozen=True)
class CrossValidation:
    kind: Kind
    N: int
    enumerated: frozenset
    classified: frozenset

    @property
    def missing(self) -> list[Partition]:
        """Accepted by the classifier but never constructed."""
        return sorted(self.classified - self.enumerated, key=lambda p: p.parts, reverse=True)

    @property
    def extra(self) -> list[Partition]:
        """Constructed but rejected by the classifier."""
        return sorted(self.enumerated - self.classified, key=lambda p: p.parts, reverse=True)

    @property
    def ok(self) -> bool:
        return self.enumerated == self.classified

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "N": self.N,
            "ok": self.ok,
            "count": len(self.enumerated),
            "partitions": [p.to_json() for p in sorted(self.enumerated, key=lambda p: p.parts, reverse=True)],
            "missing": [p.to_json() for p in self.missing],
            "extra": [p.to_json() for p in self.extra],
        }


def cross_validate(kind, N: int) -> CrossValidation:
    kind = Kind.parse(kind)
    enumerated = enumerate_richardson_partitions(kind, N)
    classified = {p for p in valid_partitions(kind, N) if classify(p, kind) is not None}
    return CrossValidation(kind, N, frozenset(enumerated), frozenset(classified))
