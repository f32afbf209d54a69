"""Insertion diagrams: per-shape arrow sets encoding the local insertion rule.

For a shape x the diagram holds one unanchored "alpha" arrow per insertion
color and, for every deletion point p, one "bump" arrow per color pair on p.
Together they define a bijection from (down-edges of x) + (alpha colors) onto
the up-edges into x, which is exactly what the growth process consumes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Optional, Union

from .lattice import Point, Shape, add_box, deletion_points, insertion_points, parse_shape
from .wdgg import Instantiation


class DiagramError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ColorPair:
    """An ascending (g1) and a descending (g2) edge color.

    Arrows always carry both components; at the growth-cell interface a
    component may be None when the corresponding edge is degenerate.
    """

    g1: Optional[int] = None
    g2: Optional[int] = None

    def require_full(self) -> "ColorPair":
        if self.g1 is None or self.g2 is None:
            raise DiagramError(f"arrow color pair must have both components: {self}")
        return self

    def __str__(self):
        show = lambda c: "?" if c is None else str(c)
        return f"<{show(self.g1)},{show(self.g2)}>"


ALPHA = "alpha"
BUMP = "bump"


@dataclass(frozen=True)
class Arrow:
    """One arrow of an insertion diagram.

    kind "alpha": unanchored, selected by alpha_color, ends at (target, out).
    kind "bump": leaves (source point, source colors), ends at (target, out).
    """

    kind: str
    target: Point
    out: ColorPair
    alpha_color: Optional[int] = None
    source: Optional[tuple[Point, ColorPair]] = None

    def __post_init__(self):
        if self.kind == ALPHA:
            if self.alpha_color is None or self.source is not None:
                raise DiagramError(f"malformed alpha arrow: {self}")
        elif self.kind == BUMP:
            if self.source is None or self.alpha_color is not None:
                raise DiagramError(f"malformed bump arrow: {self}")
            self.source[1].require_full()
        else:
            raise DiagramError(f"unknown arrow kind {self.kind!r}")
        self.out.require_full()

    def __str__(self):
        if self.kind == ALPHA:
            return f"alpha {self.alpha_color} -> {self.target} {self.out}"
        p, pair = self.source
        return f"bump {p} {pair} -> {self.target} {self.out}"


def alpha_arrow(color: int, target: Point, out_g1: int, out_g2: int) -> Arrow:
    return Arrow(ALPHA, target, ColorPair(out_g1, out_g2), alpha_color=color)


def bump_arrow(source: Point, in_g1: int, in_g2: int,
               target: Point, out_g1: int, out_g2: int) -> Arrow:
    return Arrow(BUMP, target, ColorPair(out_g1, out_g2),
                 source=(source, ColorPair(in_g1, in_g2)))


@dataclass(frozen=True)
class InsertionDiagram:
    shape: Shape
    arrows: frozenset[Arrow]

    @cached_property
    def _by_alpha(self) -> dict[int, Arrow]:
        return {a.alpha_color: a for a in self.arrows if a.kind == ALPHA}

    @cached_property
    def _by_source(self) -> dict[tuple[Point, ColorPair], Arrow]:
        return {a.source: a for a in self.arrows if a.kind == BUMP}

    @cached_property
    def _by_target(self) -> dict[tuple[Point, ColorPair], Arrow]:
        return {(a.target, a.out): a for a in self.arrows}


def diagram(shape: Shape, arrows) -> InsertionDiagram:
    return InsertionDiagram(shape, frozenset(arrows))


@dataclass(frozen=True)
class DiagramReport:
    shape: Shape
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self):
        head = f"{'ok' if self.ok else 'FAIL'} shape={self.shape}"
        return "\n".join([head] + [f"  {f}" for f in self.failures])


def validate(inst: Instantiation, d: InsertionDiagram) -> DiagramReport:
    """Check the three constraints that make the arrows a bijection."""
    failures = []
    dels = deletion_points(d.shape)
    ins = insertion_points(d.shape)

    alphas = [a for a in d.arrows if a.kind == ALPHA]
    seen_colors = sorted(a.alpha_color for a in alphas)
    if seen_colors != list(range(1, inst.r + 1)):
        failures.append(
            f"alpha arrows must cover colors 1..{inst.r} exactly once, got {seen_colors}")

    def color_grid(p: Point) -> set[ColorPair]:
        return {ColorPair(a, b)
                for a, b in product(range(1, inst.w1(p) + 1), range(1, inst.w2(p) + 1))}

    bumps = [a for a in d.arrows if a.kind == BUMP]
    for a in bumps:
        if a.source[0] not in dels:
            failures.append(f"bump source {a.source[0]} is not a deletion point")
    for p in dels:
        pairs = [a.source[1] for a in bumps if a.source[0] == p]
        if len(pairs) != len(set(pairs)) or set(pairs) != color_grid(p):
            failures.append(
                f"deletion point {p} must emit one bump per pair in "
                f"[{inst.w1(p)}]x[{inst.w2(p)}], got {sorted(map(str, pairs))}")

    for a in d.arrows:
        if a.target not in ins:
            failures.append(f"arrow target {a.target} is not an insertion point")
    for q in ins:
        outs = [a.out for a in d.arrows if a.target == q]
        if len(outs) != len(set(outs)) or set(outs) != color_grid(q):
            failures.append(
                f"insertion point {q} must receive one arrow per pair in "
                f"[{inst.w1(q)}]x[{inst.w2(q)}], got {sorted(map(str, outs))}")

    return DiagramReport(d.shape, tuple(failures))


def psi_insert(d: InsertionDiagram, alpha_color: int) -> tuple[Shape, ColorPair]:
    """Follow the alpha arrow: the shape grown by one box and the out colors."""
    arrow = d._by_alpha.get(alpha_color)
    if arrow is None:
        raise DiagramError(f"no alpha arrow for color {alpha_color} on {d.shape}")
    return add_box(d.shape, arrow.target), arrow.out


def psi_bump(d: InsertionDiagram, p: Point, colors: ColorPair) -> tuple[Shape, ColorPair]:
    """Follow the unique bump arrow out of (p, colors)."""
    arrow = d._by_source.get((p, colors))
    if arrow is None:
        raise DiagramError(f"no bump arrow from {p} {colors} on {d.shape}")
    return add_box(d.shape, arrow.target), arrow.out


def psi_inverse(d: InsertionDiagram, q: Point,
                out: ColorPair) -> Union[int, tuple[Point, ColorPair]]:
    """Invert: the alpha color or the bump source that ends at (q, out)."""
    arrow = d._by_target.get((q, out))
    if arrow is None:
        raise DiagramError(f"no arrow into {q} {out} on {d.shape}")
    if arrow.kind == ALPHA:
        return arrow.alpha_color
    return arrow.source


_POINT = r"\((\d+)\s*,\s*(\d+)\)"
_PAIR = r"<(\d+)\s*,\s*(\d+)>"
_ALPHA_RE = re.compile(rf"^alpha\s+(\d+)\s*->\s*{_POINT}\s*{_PAIR}$")
_BUMP_RE = re.compile(rf"^bump\s+{_POINT}\s*{_PAIR}\s*->\s*{_POINT}\s*{_PAIR}$")


def parse_diagram(text: str, shape: Shape) -> InsertionDiagram:
    """Read the textual one-arrow-per-line format.

    Lines: ``alpha <c> -> (r,c) <g1,g2>`` and
    ``bump (r,c) <g1,g2> -> (r,c) <g1,g2>``.  Blank lines and ``#`` comments
    are ignored.
    """
    arrows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _ALPHA_RE.match(line)
        if m:
            c, tr, tc, g1, g2 = map(int, m.groups())
            arrows.append(alpha_arrow(c, Point(tr, tc), g1, g2))
            continue
        m = _BUMP_RE.match(line)
        if m:
            sr, sc, i1, i2, tr, tc, g1, g2 = map(int, m.groups())
            arrows.append(bump_arrow(Point(sr, sc), i1, i2, Point(tr, tc), g1, g2))
            continue
        raise DiagramError(f"line {lineno}: cannot parse arrow {raw!r}")
    return diagram(shape, arrows)


def format_diagram(d: InsertionDiagram) -> str:
    """Inverse of parse_diagram, one arrow per line, alpha arrows first."""
    alphas = sorted((a for a in d.arrows if a.kind == ALPHA),
                    key=lambda a: a.alpha_color)
    bumps = sorted((a for a in d.arrows if a.kind == BUMP),
                   key=lambda a: (a.source[0], a.source[1]))
    return "\n".join(str(a) for a in alphas + bumps)


def parse_diagram_file(text: str, shape_text: str, shape_geometry) -> InsertionDiagram:
    return parse_diagram(text, parse_shape(shape_text, shape_geometry))
