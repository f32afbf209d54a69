"""Exhaustive small-n verification: bijectivity onto same-shape standard
colored tableau pairs, and the counting identity sum f1*f2 = n! * r^n."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cache
from itertools import permutations, product

from .growth import (
    ColoredTableau, GeneralizedPermutation, extract_P, extract_Q, run_growth,
)
from .lattice import Shape, deletion_points, remove_box, shapes_of_size
from .wdgg import Channel, Instantiation


def enumerate_gps(n: int, r: int):
    """All n! * r^n full n x n generalized permutations, each exactly once."""
    for perm in permutations(range(1, n + 1)):
        for colors in product(range(1, r + 1), repeat=n):
            yield GeneralizedPermutation.from_word(list(zip(perm, colors)), n=n)


def standard_fillings(shape: Shape) -> list[tuple]:
    """All standard fillings, each as a sorted tuple of (point, value)."""
    out = []

    def peel(s, acc):
        if s.size == 0:
            out.append(tuple(sorted(acc)))
            return
        for p in deletion_points(s):
            peel(remove_box(s, p), acc + [(p, s.size)])

    peel(shape, [])
    return out


def enumerate_sct(inst: Instantiation, channel: Channel, shape: Shape) -> list[ColoredTableau]:
    """All standard colored tableaux: standard fillings times per-box colors
    bounded by w1 (ascending channel) or w2 (descending)."""
    w = inst.w1 if channel is Channel.ASCENDING else inst.w2
    boxes = shape.boxes()
    tableaux = []
    for filling in standard_fillings(shape):
        values = dict(filling)
        for colors in product(*(range(1, w(p) + 1) for p in boxes)):
            cells = tuple((p, values[p], c) for p, c in zip(boxes, colors))
            tableaux.append(ColoredTableau(shape, cells))
    return tableaux


def sct_count(inst: Instantiation, channel: Channel, shape: Shape) -> int:
    """Independent count via the chain recurrence f(s) = sum f(s - box),
    weighted by the color choices of the removed box."""
    w = inst.w1 if channel is Channel.ASCENDING else inst.w2

    @cache
    def f(s: Shape) -> int:
        if s.size == 0:
            return 1
        return sum(w(p) * f(remove_box(s, p)) for p in deletion_points(s))

    return f(shape)


def _tableau_key(t: ColoredTableau):
    return (t.shape.rows, tuple((p.row, p.col, v, c) for p, v, c in t.cells))


@dataclass(frozen=True)
class BijectionReport:
    algorithm: str
    n: int
    gp_count: int
    image_count: int
    expected_count: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self):
        head = (f"{'PASS' if self.ok else 'FAIL'} bijection algorithm={self.algorithm} "
                f"n={self.n} inputs={self.gp_count} image={self.image_count} "
                f"expected={self.expected_count}")
        return "\n".join([head] + [f"  {f}" for f in self.failures])


def check_bijection(alg, n: int, workers: int = 1) -> BijectionReport:
    """Run every full gp and compare the image with all same-shape pairs of
    standard colored tableaux (set equality, not just counts)."""
    inst = alg.instantiation
    failures = []
    gps = list(enumerate_gps(n, inst.r))

    def run_one(gp):
        g = run_growth(alg, gp)
        return _tableau_key(extract_P(g)), _tableau_key(extract_Q(g))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            image = list(pool.map(run_one, gps))
    else:
        image = [run_one(gp) for gp in gps]

    if len(set(image)) != len(image):
        failures.append("two inputs map to the same (P, Q) pair")

    expected = set()
    expected_count = 0
    for shape in shapes_of_size(inst.geometry, n):
        ps = enumerate_sct(inst, Channel.ASCENDING, shape)
        qs = enumerate_sct(inst, Channel.DESCENDING, shape)
        f1, f2 = sct_count(inst, Channel.ASCENDING, shape), sct_count(inst, Channel.DESCENDING, shape)
        if len(ps) != f1 or len(qs) != f2:
            failures.append(
                f"tableau counts disagree with the chain recurrence on {shape}: "
                f"{len(ps)} vs {f1}, {len(qs)} vs {f2}")
        expected_count += f1 * f2
        for p in ps:
            kp = _tableau_key(p)
            for q in qs:
                expected.add((kp, _tableau_key(q)))

    if expected_count != len(gps):
        failures.append(
            f"counting identity fails: sum f1*f2 = {expected_count}, "
            f"n!*r^n = {len(gps)}")
    missing = expected - set(image)
    extra = set(image) - expected
    if missing:
        failures.append(f"{len(missing)} same-shape pairs are not reached")
    if extra:
        failures.append(f"{len(extra)} outputs are not valid same-shape pairs")
    return BijectionReport(alg.name, n, len(gps), len(set(image)), expected_count,
                           tuple(failures))
