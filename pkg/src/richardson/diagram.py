"""Line diagrams.

A dimension vector is split into pieces ``d^0 + d^1 + ... + d^m`` whose
entries are at most 2.  Each piece has a small diagram on rows ``0`` or
``+-1``; piece ``j`` is stretched onto rows ``+-j`` and the stacked picture is
labelled in lexicographic ``(col, row)`` order, i.e. labels grow left to right
and, within a column, bottom to top.  Columns are block indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dimvec import DimensionVector
from .kinds import Kind
from .liealg import labels

Position = tuple[int, int]


@dataclass(frozen=True)
class Sketch:
    """An unlabelled diagram: vertex positions and arrows between positions."""

    positions: tuple[Position, ...]
    arrows: tuple[tuple[Position, Position], ...]
    case: str = ""

    def stretched(self, j: int) -> "Sketch":
        def move(p: Position) -> Position:
            return (p[0], p[1] * j)

        return Sketch(
            tuple(move(p) for p in self.positions),
            tuple((move(a), move(b)) for a, b in self.arrows),
            self.case,
        )


@dataclass(frozen=True)
class Vertex:
    col: int
    row: int
    label: int


@dataclass(frozen=True)
class LineDiagram:
    kind: Kind
    N: int
    vertices: tuple[Vertex, ...]
    arrows: tuple[tuple[int, int], ...]

    def position(self, label: int) -> Position:
        for v in self.vertices:
            if v.label == label:
                return (v.col, v.row)
        raise KeyError(label)

    def label_at(self, col: int, row: int) -> int | None:
        for v in self.vertices:
            if (v.col, v.row) == (col, row):
                return v.label
        return None

    def rows(self) -> dict[int, list[Vertex]]:
        out: dict[int, list[Vertex]] = {}
        for v in self.vertices:
            out.setdefault(v.row, []).append(v)
        for r in out.values():
            r.sort(key=lambda v: v.col)
        return dict(sorted(out.items(), reverse=True))

    def validate(self) -> None:
        """Raise ``ValueError`` unless every structural invariant holds."""
        pos = {(v.col, v.row): v.label for v in self.vertices}
        if len(pos) != len(self.vertices):
            raise ValueError("two vertices share a position")
        if sorted(pos.values()) != list(labels(self.N)):
            raise ValueError("labels are not exactly -n..n")
        for (c, r), lab in pos.items():
            if pos.get((-c, -r)) != -lab:
                raise ValueError(f"vertex {lab} at {(c, r)} has no mirror image")
        ordered = [pos[p] for p in sorted(pos)]
        if ordered != sorted(ordered):
            raise ValueError("labels do not increase in (col, row) order")
        where = {lab: p for p, lab in pos.items()}
        arrows = set(self.arrows)
        if len(arrows) != len(self.arrows):
            raise ValueError("repeated arrow")
        out_degree: dict[int, int] = {}
        for a, b in self.arrows:
            if a not in where or b not in where:
                raise ValueError(f"arrow {a}->{b} has an unknown endpoint")
            if where[b][0] >= where[a][0]:
                raise ValueError(f"arrow {a}->{b} does not point left")
            if (-b, -a) not in arrows:
                raise ValueError(f"arrow {a}->{b} has no mirror arrow")
            out_degree[a] = out_degree.get(a, 0) + 1
        if any(k > 2 for k in out_degree.values()):
            raise ValueError("a vertex has more than two outgoing arrows")

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "N": self.N,
            "vertices": [{"col": v.col, "row": v.row, "label": v.label} for v in self.vertices],
            "arrows": [[a, b] for a, b in self.arrows],
        }


# -- decomposition ------------------------------------------------------------

def _indicator(c: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(1 if x else 0 for x in c)


def _cap_by_least_even(c: tuple[int, ...]) -> tuple[int, ...]:
    a = min(x for x in c if x > 0 and x % 2 == 0)
    return tuple(0 if x == 0 else (2 if x >= a else 1) for x in c)


def _decompose(d: DimensionVector, step) -> list[DimensionVector]:
    """Shared loop; ``step`` returns ``("piece" | "base", vector)`` for a remainder."""
    mid = d.s
    zero = (0,) * len(d.entries)
    base = zero
    pieces = []
    c = d.entries
    while any(c):
        what, v = step(c, mid)
        if what == "base":
            if base != zero:
                raise AssertionError(f"base piece of {d} redefined twice")
            base = v
        else:
            pieces.append(v)
        c = tuple(x - y for x, y in zip(c, v))
        if any(x < 0 for x in c):
            raise AssertionError(f"decomposition of {d} overshot")
    return [DimensionVector(d.kind, base)] + [DimensionVector(d.kind, p) for p in pieces]


def _orth_step(c, mid):
    c0 = c[mid]
    nonzero = [x for x in c if x]
    if c0 > 0 and all(x >= 2 for x in nonzero):
        return "piece", tuple(min(x, 2) for x in c)
    if c0 > 0 and c0 % 2 == 1:
        return "base", _indicator(c)
    if c0 > 0:
        return "piece", _cap_by_least_even(c)
    return "piece", tuple(min(x, 2) for x in c)


def _symp_step(c, mid):
    c0 = c[mid]
    nonzero = [x for x in c if x]
    if c0 > 0:
        return "piece", tuple(min(x, 2) for x in c)
    if all(x >= 2 for x in nonzero):
        return "piece", tuple(min(x, 2) for x in c)
    if 1 in nonzero and any(x % 2 == 0 for x in nonzero):
        return "piece", _cap_by_least_even(c)
    return "base", _indicator(c)


def decompose_orth(d: DimensionVector) -> list[DimensionVector]:
    """``[d^0, d^1, ..., d^m]`` for an orthogonal vector; ``d^0`` may be zero."""
    if d.kind is not Kind.ORTHOGONAL:
        raise ValueError("decompose_orth needs an orthogonal dimension vector")
    return _decompose(d, _orth_step)


def decompose_symp(d: DimensionVector) -> list[DimensionVector]:
    if d.kind is not Kind.SYMPLECTIC:
        raise ValueError("decompose_symp needs a symplectic dimension vector")
    return _decompose(d, _symp_step)


def decompose(d: DimensionVector) -> list[DimensionVector]:
    return decompose_orth(d) if d.kind is Kind.ORTHOGONAL else decompose_symp(d)


# -- small diagrams -----------------------------------------------------------

def _chain(cols: Iterable[int], row: int, skip: Iterable[int] = ()) -> list[tuple[Position, Position]]:
    cols = sorted(cols)
    skip = set(skip)
    return [((b, row), (a, row)) for a, b in zip(cols, cols[1:]) if b not in skip]


def _two_rows(d: DimensionVector) -> tuple[list[int], list[int]]:
    top = sorted({i for i, e in d.items() if i >= 0 and e} | {-i for i, e in d.items() if i > 0 and e == 2})
    return top, sorted(-c for c in top)


def _positions(top: list[int], bottom: list[int]) -> tuple[Position, ...]:
    return tuple([(c, 1) for c in top] + [(c, -1) for c in bottom])


def _check_small(d: DimensionVector) -> None:
    if any(e > 2 for e in d.entries):
        raise ValueError(f"small diagrams need entries <= 2: {d}")


def small_diagram_orth(d: DimensionVector) -> Sketch:
    """Small-block orthogonal diagram (middle entry 1, 2 or 0)."""
    _check_small(d)
    ones = sum(1 for e in d.entries if e == 1)
    positive = [i for i, e in d.items() if i > 0 and e]
    if d[0] == 1:
        if any(e == 2 for e in d.entries):
            raise ValueError(f"middle entry 1 needs all nonzero entries equal to 1: {d}")
        cols = [i for i, e in d.items() if e == 1]
        return Sketch(tuple((c, 0) for c in cols), tuple(_chain(cols, 0)), "orth-1")
    top, bottom = _two_rows(d)
    arrows = _chain(top, 1) + _chain(bottom, -1)
    if d[0] == 2:
        if ones:
            l = positive[0]
            arrows += [((l, 1), (0, -1)), ((0, 1), (-l, -1))]
        return Sketch(_positions(top, bottom), tuple(arrows), "orth-2")
    if d[0] == 0:
        if ones >= 4:
            l, m = positive[0], positive[1]
            arrows += [((l, 1), (-m, -1)), ((m, 1), (-l, -1))]
        return Sketch(_positions(top, bottom), tuple(arrows), "orth-3")
    raise ValueError(f"middle entry must be 0, 1 or 2: {d}")


def small_diagram_symp(d: DimensionVector) -> Sketch:
    """Small-block symplectic diagram (middle entry 0 or 2)."""
    _check_small(d)
    ones = sum(1 for e in d.entries if e == 1)
    twos = sum(1 for e in d.entries if e == 2)
    positive = [i for i, e in d.items() if i > 0 and e]
    if d[0] == 0 and not twos:
        cols = [i for i, e in d.items() if e == 1]
        return Sketch(tuple((c, 0) for c in cols), tuple(_chain(cols, 0)), "symp-1")
    top, bottom = _two_rows(d)
    if d[0] == 2:
        arrows = _chain(top, 1) + _chain(bottom, -1)
        if ones >= 4:
            l = positive[0]
            arrows.append(((l, 1), (-l, -1)))
        return Sketch(_positions(top, bottom), tuple(arrows), "symp-2")
    if d[0] == 0 and not ones:
        arrows = _chain(top, 1) + _chain(bottom, -1)
        return Sketch(_positions(top, bottom), tuple(arrows), "symp-3")
    if d[0] == 0:
        l = positive[0]
        m = min(i for i in positive if d[i] == 2)
        arrows = _chain(top, 1, skip=[l]) + _chain(bottom, -1, skip=[m])
        arrows += [((l, 1), (-l, -1)), ((m, -1), (-m, 1))]
        return Sketch(_positions(top, bottom), tuple(arrows), "symp-4")
    raise ValueError(f"symplectic middle entry must be 0 or 2: {d}")


def small_diagram(d: DimensionVector) -> Sketch:
    return small_diagram_orth(d) if d.kind is Kind.ORTHOGONAL else small_diagram_symp(d)


# -- assembly -----------------------------------------------------------------

def stack(d: DimensionVector) -> list[Sketch]:
    """The placed (stretched) sketches of every nonzero piece."""
    pieces = decompose(d)
    base, rest = pieces[0], pieces[1:]
    if d.kind is Kind.ORTHOGONAL and (not base.is_zero()) != bool(d[0] % 2):
        raise AssertionError(f"base piece of {d} inconsistent with the parity of d_0")
    placed = []
    if not base.is_zero():
        sketch = small_diagram(base)
        if any(r != 0 for _, r in sketch.positions):
            raise AssertionError(f"base piece {base} does not sit on one row")
        placed.append(sketch)
    for j, piece in enumerate(rest, start=1):
        sketch = small_diagram(piece)
        if any(r == 0 for _, r in sketch.positions):
            raise AssertionError(f"piece {piece} of {d} has a vertex on the middle row")
        placed.append(sketch.stretched(j))
    return placed


def label(kind, N: int, sketches: Iterable[Sketch]) -> LineDiagram:
    sketches = list(sketches)
    positions = [p for s in sketches for p in s.positions]
    if len(set(positions)) != len(positions):
        raise AssertionError("stacked pieces overlap")
    names = labels(N)
    if len(positions) != len(names):
        raise AssertionError(f"{len(positions)} vertices for N={N}")
    label_of = dict(zip(sorted(positions), names))
    vertices = tuple(Vertex(c, r, label_of[(c, r)]) for c, r in sorted(positions))
    arrows = tuple(sorted((label_of[a], label_of[b]) for s in sketches for a, b in s.arrows))
    return LineDiagram(Kind.parse(kind), N, vertices, arrows)


def assemble(d: DimensionVector) -> LineDiagram:
    """The labelled diagram of ``d`` (used as given, not normalized)."""
    return label(d.kind, d.N, stack(d))


# -- rendering ----------------------------------------------------------------

def render_text(D: LineDiagram) -> str:
    """Grid picture, one text line per row, top row first.

    Arrows inside a row are drawn as ``<---``; arrows between rows are listed
    underneath.
    """
    if not D.vertices:
        return ""
    width = max(len(str(v.label)) for v in D.vertices)
    step = width + 4
    cmin = min(v.col for v in D.vertices)
    cmax = max(v.col for v in D.vertices)
    rmin = min(v.row for v in D.vertices)
    rmax = max(v.row for v in D.vertices)
    where = {v.label: (v.col, v.row) for v in D.vertices}

    def x(col: int) -> int:
        return (col - cmin) * step

    lines = []
    for row in range(rmax, rmin - 1, -1):
        buf = [" "] * (x(cmax) + width)
        for v in D.vertices:
            if v.row == row:
                text = str(v.label)
                start = x(v.col) + width - len(text)
                buf[start:start + len(text)] = text
        for a, b in D.arrows:
            (ca, ra), (cb, rb) = where[a], where[b]
            if ra == rb == row:
                lo = x(cb) + width + 1
                hi = x(ca) + width - len(str(a)) - 1
                if hi > lo:
                    buf[lo:hi] = "<" + "-" * (hi - lo - 1)
        lines.append("".join(buf).rstrip())
    diagonals = [(a, b) for a, b in D.arrows if where[a][1] != where[b][1]]
    if diagonals:
        lines.append("")
        lines.append("diagonal arrows: " + ", ".join(f"{a}->{b}" for a, b in diagonals))
    return "\n".join(lines) + "\n"


def render_dot(D: LineDiagram) -> str:
    def name(lab: int) -> str:
        return f'"v{lab}"'

    out = ["digraph D {", "  node [shape=plaintext];"]
    for v in D.vertices:
        out.append(f'  {name(v.label)} [label="{v.label}", pos="{v.col},{v.row}!"];')
    for row, verts in D.rows().items():
        out.append("  { rank=same; " + " ".join(name(v.label) for v in verts) + "; }")
    for a, b in D.arrows:
        out.append(f"  {name(a)} -> {name(b)};")
    out.append("}")
    return "\n".join(out) + "\n"
