"""Ribbons, skew partitions and standard tableaux.

A class vector ``k1 >= ... >= kN = 0`` (unit steps) draws a ribbon: box i
sits at row ``ki``, column ``ni = ki + i - 1``, English convention with row
0 on top, so the walk runs from the bottom-left box to the top-right box
at ``(0, N-1)``.  Standard fillings of the ribbon are exactly the
permutations that rise along horizontal steps and fall along vertical
ones.  Reading box coordinates backwards from entry N yields confluent
Vandermonde forms, one per tableau.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .cvform import CvForm, valid_class

BACK = "U"  # step to the row above
RIGHT = "R"  # step to the next column


@dataclass(frozen=True)
class Ribbon:
    """A connected skew shape with no 2x2 square, as a box walk."""

    boxes: tuple[tuple[int, int], ...]

    def __post_init__(self):
        boxes = self.boxes
        n = len(boxes)
        if n == 0:
            raise ValueError("a ribbon needs at least one box")
        if boxes[-1] != (0, n - 1):
            raise ValueError(f"last box must be (0, {n - 1}), got {boxes[-1]}")
        for (k1, c1), (k2, c2) in zip(boxes, boxes[1:]):
            if not ((k2 == k1 and c2 == c1 + 1) or (k2 == k1 - 1 and c2 == c1)):
                raise ValueError(f"illegal step {(k1, c1)} -> {(k2, c2)}")

    @property
    def size(self) -> int:
        return len(self.boxes)

    @property
    def height(self) -> int:
        """Number of rows occupied, the top row coordinate plus one."""
        return self.boxes[0][0] + 1

    def steps(self) -> tuple[str, ...]:
        out = []
        for (k1, _), (k2, _) in zip(self.boxes, self.boxes[1:]):
            out.append(RIGHT if k2 == k1 else BACK)
        return tuple(out)

    def class_entries(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.boxes)

    def to_json_dict(self) -> dict:
        return {"boxes": [list(b) for b in self.boxes]}


def class_to_ribbon(class_entries) -> Ribbon:
    """Ribbon of a class vector; box i at (k_i, k_i + i - 1)."""
    c = tuple(class_entries)
    if not valid_class(c):
        raise ValueError(f"{c} is not a valid class vector")
    return Ribbon(tuple((k, k + i) for i, k in enumerate(c)))


def ribbon_to_class(r: Ribbon) -> tuple[int, ...]:
    return r.class_entries()


def ribbon_index(r: Ribbon) -> int:
    """Sum of the row coordinates; the degree of the attached forms."""
    return sum(k for k, _ in r.boxes)


def ribbon_from_steps(steps) -> Ribbon:
    """Rebuild a ribbon from its step word, anchored at (0, N-1)."""
    seq = tuple(steps)
    n = len(seq) + 1
    boxes = [(0, n - 1)]
    for s in reversed(seq):
        k, c = boxes[0]
        boxes.insert(0, (k + 1, c) if s == BACK else (k, c - 1))
    return Ribbon(tuple(boxes))


@dataclass(frozen=True)
class SkewPartition:
    """A pair lam/mu of partitions, mu inside lam."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        lam, mu = self.lam, self.mu
        if any(a < b for a, b in zip(lam, lam[1:])) or any(a < b for a, b in zip(mu, mu[1:])):
            raise ValueError("partition rows must be nonincreasing")
        if len(mu) > len(lam):
            raise ValueError("inner shape has more rows than outer shape")
        padded = mu + (0,) * (len(lam) - len(mu))
        if any(m > l for l, m in zip(lam, padded)):
            raise ValueError("inner shape does not fit inside outer shape")

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)

    def __str__(self) -> str:
        inner = "".join(str(m) for m in self.mu)
        return "(" + "".join(str(l) for l in self.lam) + ")/(" + inner + ")"


def to_skew_partition(r: Ribbon) -> SkewPartition:
    """Left-justified skew shape whose rows match the ribbon's rows."""
    shift = min(c for _, c in r.boxes)
    top = r.boxes[0][0]
    lam, mu = [], []
    for row in range(top + 1):
        cols = [c for k, c in r.boxes if k == row]
        lam.append(max(cols) + 1 - shift)
        mu.append(min(cols) - shift)
    while mu and mu[-1] == 0:
        mu.pop()
    return SkewPartition(tuple(lam), tuple(mu))


def count_syt(sp: SkewPartition) -> int:
    """Number of standard fillings, by the determinant formula.

    ``n! det(1 / (lam_i - mu_j - i + j)!)`` over exact rationals; negative
    arguments contribute zero.
    """
    lam = sp.lam
    mu = sp.mu + (0,) * (len(sp.lam) - len(sp.mu))
    r = len(lam)
    n = sp.size

    def cell(i: int, j: int) -> Fraction:
        arg = lam[i] - mu[j] - i + j
        return Fraction(0) if arg < 0 else Fraction(1, math.factorial(arg))

    matrix = [[cell(i, j) for j in range(r)] for i in range(r)]

    def det(rows: tuple[int, ...], col: int) -> Fraction:
        if not rows:
            return Fraction(1)
        acc = Fraction(0)
        for idx, i in enumerate(rows):
            if matrix[i][col]:
                sub = det(rows[:idx] + rows[idx + 1:], col + 1)
                acc += (-1) ** idx * matrix[i][col] * sub
        return acc

    value = math.factorial(n) * det(tuple(range(r)), 0)
    if value.denominator != 1 or value < 0:
        raise AssertionError(f"count_syt produced non-integral {value} for {sp}")
    return int(value)


@dataclass(frozen=True)
class SkewTableau:
    """A standard filling of a ribbon, stored along the box walk."""

    ribbon: Ribbon
    filling: tuple[int, ...]

    def __post_init__(self):
        n = self.ribbon.size
        w = self.filling
        if sorted(w) != list(range(1, n + 1)):
            raise ValueError(f"filling {w} is not a permutation of 1..{n}")
        for (a, b), s in zip(zip(w, w[1:]), self.ribbon.steps()):
            if s == RIGHT and not a < b:
                raise ValueError(f"filling {w} does not rise along a row step")
            if s == BACK and not a > b:
                raise ValueError(f"filling {w} does not fall along a column step")

    def box_of(self, value: int) -> tuple[int, int]:
        return self.ribbon.boxes[self.filling.index(value)]

    def to_json_dict(self) -> dict:
        return {"boxes": [list(b) for b in self.ribbon.boxes], "filling": list(self.filling)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SkewTableau":
        boxes = tuple(tuple(b) for b in data["boxes"])
        return cls(Ribbon(boxes), tuple(data["filling"]))


def enumerate_tableaux(r: Ribbon) -> list[SkewTableau]:
    """All standard fillings, lexicographic on the filling word."""
    n = r.size
    steps = r.steps()
    out: list[SkewTableau] = []
    used = [False] * (n + 1)

    def rec(pos: int, word: list[int]) -> None:
        if pos == n:
            out.append(SkewTableau(r, tuple(word)))
            return
        prev = word[-1] if word else None
        for v in range(1, n + 1):
            if used[v]:
                continue
            if prev is not None:
                if steps[pos - 1] == RIGHT and v < prev:
                    continue
                if steps[pos - 1] == BACK and v > prev:
                    continue
            used[v] = True
            word.append(v)
            rec(pos + 1, word)
            word.pop()
            used[v] = False

    rec(0, [])
    return out


def backward_order(n: int) -> tuple[int, ...]:
    """The default reading order N, N-1, ..., 1."""
    return tuple(range(n, 0, -1))


def tableau_to_cvform(t: SkewTableau, reading_order=None) -> CvForm:
    """Read column coordinates in the order the values are visited.

    With the backward default, entry j of the form is the column of the
    box holding value N-j+1; the rightmost column is N-1 by construction.
    """
    n = t.ribbon.size
    order = tuple(reading_order) if reading_order is not None else backward_order(n)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"reading order {order} is not a permutation of 1..{n}")
    return CvForm(t.box_of(v)[1] for v in order)


def tableau_to_type(t: SkewTableau) -> tuple[int, ...]:
    """Row coordinates read backwards; the type of the backward form."""
    n = t.ribbon.size
    return tuple(t.box_of(v)[0] for v in backward_order(n))


def tableau_from_cvform(form: CvForm) -> SkewTableau:
    """Inverse of the backward reading, when the form is standard.

    The class of the form fixes the ribbon; values are replayed from N
    down to 1, each dropping into the lowest free box of its column.
    Raises when the form is not regular or the filling is not standard.
    """
    r = class_to_ribbon(form.class_of())
    n = form.N
    by_col: dict[int, list[int]] = {}
    for idx, (k, c) in enumerate(r.boxes):
        by_col.setdefault(c, []).append(idx)
    for stack in by_col.values():
        stack.sort(key=lambda idx: -r.boxes[idx][0])  # bottom first
    slots = [0] * n
    for j, col in enumerate(form.entries):
        stack = by_col.get(col)
        if not stack:
            raise ValueError(f"{form} does not read any standard tableau")
        slots[stack.pop(0)] = n - j
    return SkewTableau(r, tuple(slots))


def flip(t: SkewTableau) -> SkewTableau:
    """Reflect across the skew diagonal and complement the values.

    Row and column steps trade places along the walk and value v becomes
    N-v+1, which keeps the filling standard; applying flip twice gives
    the original tableau back.
    """
    steps = t.ribbon.steps()
    swapped = tuple(BACK if s == RIGHT else RIGHT for s in steps)
    n = t.ribbon.size
    return SkewTableau(ribbon_from_steps(swapped), tuple(n + 1 - v for v in t.filling))


def enumerate_ribbons(n: int) -> list[Ribbon]:
    """All 2^(N-1) ribbons on N boxes, classes descending lexicographic."""
    if n < 1:
        raise ValueError("need at least one box")
    classes: list[tuple[int, ...]] = []

    def rec(suffix: list[int]) -> None:
        if len(suffix) == n:
            classes.append(tuple(suffix))
            return
        head = suffix[0]
        rec([head] + suffix)
        rec([head + 1] + suffix)

    rec([0])
    classes.sort(reverse=True)
    return [class_to_ribbon(c) for c in classes]


def _bounded_partitions(total: int, max_parts: int, largest: int):
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _bounded_partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def ribbons_of_degree(n: int, d: int) -> list[Ribbon]:
    """Ribbons of index d, classes descending lexicographic.

    For each height l+1 the classes correspond to partitions of
    ``d - l(l+1)/2`` into at most ``N-l-1`` parts, each part at most l;
    a part of size k raises the multiplicity of row coordinate k by one.
    """
    top = n * (n - 1) // 2
    if not 0 <= d <= top:
        raise ValueError(f"degree {d} outside 0..{top} for {n} boxes")
    classes: list[tuple[int, ...]] = []
    for l in range(n):
        rem = d - l * (l + 1) // 2
        if rem < 0:
            continue
        for part in _bounded_partitions(rem, n - l - 1, l):
            mult = [1] * (l + 1)
            for p in part:
                mult[p] += 1
            mult[0] += (n - l - 1) - len(part)
            classes.append(tuple(k for k in range(l, -1, -1) for _ in range(mult[k])))
    classes.sort(reverse=True)
    return [class_to_ribbon(c) for c in classes]


def ribbon_generating_function(n: int) -> dict[tuple[int, int], int]:
    """Coefficients of prod_{k=1..N-1} (1 + q^k t).

    Keyed by (index d, height-1 l); the (d, l) count is the number of
    ribbons on N boxes with index d occupying l+1 rows.
    """
    coeffs: dict[tuple[int, int], int] = {(0, 0): 1}
    for k in range(1, n):
        nxt = dict(coeffs)
        for (d, l), c in coeffs.items():
            key = (d + k, l + 1)
            nxt[key] = nxt.get(key, 0) + c
        coeffs = nxt
    return coeffs


def _grid(r: Ribbon) -> tuple[int, int, dict[tuple[int, int], int]]:
    top = r.boxes[0][0]
    width = r.boxes[-1][1] + 1
    pos = {box: idx for idx, box in enumerate(r.boxes)}
    return top, width, pos


def render_ribbon(r: Ribbon) -> str:
    """ASCII diagram, English convention (row 0 printed first)."""
    top, width, pos = _grid(r)
    cell = len(str(r.size))
    lines = []
    for row in range(top + 1):
        cells = []
        for col in range(width):
            cells.append(("#" if (row, col) in pos else ".").rjust(cell))
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def render_tableau(t: SkewTableau) -> str:
    """ASCII diagram with the filling values in place."""
    r = t.ribbon
    top, width, pos = _grid(r)
    cell = len(str(r.size))
    lines = []
    for row in range(top + 1):
        cells = []
        for col in range(width):
            idx = pos.get((row, col))
            cells.append((str(t.filling[idx]) if idx is not None else ".").rjust(cell))
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)
