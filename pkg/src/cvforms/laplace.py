"""Block Laplace expansion of confluent Vandermonde forms.

Sorting the entries of a zero-free form groups equal entries into column
blocks.  Expanding the determinant along those blocks writes the form as a
signed sum of products of minors, one minor per block; each minor is an
alternant with strictly decreasing row powers, so a term is recorded as a
"row-block" such as ``|2 1|2 0|2 0|``.

The decoding table makes the admissible terms directly enumerable: it has
one descending run ``a, a-1, ..., 0`` per distinct entry value ``a``, laid
out under the N column positions.  Picking, row by row, a set of unused
column positions (as many as the value's multiplicity) yields exactly the
non-vanishing row-blocks; the powers are the run cells at the picked
columns, and the sign is the sign of the picked-position permutation.
Everything here is exact; no floating point is involved.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache

from .cvform import CvForm, permutation_sign, valid_class
from .poly import Polynomial


def shuffles(composition) -> list[tuple[int, ...]]:
    """All shuffle permutations of ``1..N`` for a composition of N.

    A shuffle concatenates ascending runs over disjoint index sets whose
    sizes follow the composition; there are multinomial-many of them.
    Enumeration order is lexicographic on the successive index sets.
    """
    parts = tuple(composition)
    if not parts or any(m < 1 for m in parts):
        raise ValueError(f"composition parts must be positive, got {parts}")
    n = sum(parts)
    out: list[tuple[int, ...]] = []

    def rec(remaining: list[int], prefix: list[int], idx: int) -> None:
        if idx == len(parts):
            out.append(tuple(prefix))
            return
        for combo in itertools.combinations(remaining, parts[idx]):
            rest = [x for x in remaining if x not in combo]
            rec(rest, prefix + list(combo), idx + 1)

    rec(list(range(1, n + 1)), [], 0)
    return out


@dataclass(frozen=True)
class DecodingTable:
    """Descending power runs of a sorted zero-free form.

    ``values`` are the distinct entries ascending, ``blocks`` the variable
    labels of the equal-entry column groups.  Row ``j`` of the table is the
    run ``values[j], values[j]-1, ..., 0`` under column positions 1, 2, ...
    """

    values: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def row(self, j: int) -> tuple[int, ...]:
        return tuple(range(self.values[j], -1, -1))

    def render(self) -> str:
        header = " | ".join(" ".join(f"t{v}" for v in blk) for blk in self.blocks)
        lines = [header]
        for j in range(len(self.values)):
            lines.append(" ".join(str(p) for p in self.row(j)))
        return "\n".join(lines)


def build_decoding_table(form: CvForm, variables=None) -> DecodingTable:
    """Decoding table of a nondecreasing zero-free form.

    ``variables`` optionally relabels the columns (1-based), as needed
    after a stable sort moved them; defaults to ``1..N`` in place.
    """
    ent = form.entries
    if any(a > b for a, b in zip(ent, ent[1:])):
        raise ValueError(f"{form} is not sorted nondecreasing")
    if 0 in ent:
        raise ValueError(f"{form} has zero entries, apply remove_zeros first")
    labels = tuple(variables) if variables is not None else tuple(range(1, form.N + 1))
    if sorted(labels) != list(range(1, form.N + 1)):
        raise ValueError(f"variable labels {labels} are not a permutation of 1..{form.N}")
    values: list[int] = []
    blocks: list[list[int]] = []
    for pos, e in enumerate(ent):
        if values and e == values[-1]:
            blocks[-1].append(labels[pos])
        else:
            values.append(e)
            blocks.append([labels[pos]])
    return DecodingTable(tuple(values), tuple(tuple(b) for b in blocks))


@dataclass(frozen=True)
class RowBlock:
    """One signed term of a block expansion.

    ``blocks`` holds the strictly decreasing powers of each minor,
    ``var_partition`` the variable labels each minor acts on (shared by
    all terms of one expansion), and ``total_sign`` the product of the
    intrinsic shuffle sign with the column-sort and zero-removal signs.
    """

    blocks: tuple[tuple[int, ...], ...]
    var_partition: tuple[tuple[int, ...], ...]
    total_sign: int

    def entries(self) -> tuple[int, ...]:
        return tuple(p for blk in self.blocks for p in blk)

    def bars(self) -> str:
        return "|" + "|".join(" ".join(str(p) for p in blk) for blk in self.blocks) + "|"

    def __str__(self) -> str:
        return ("-" if self.total_sign < 0 else "+") + self.bars()


@dataclass(frozen=True)
class BlockFactorization:
    """Variable grouping shared by every term of one expansion.

    Each group contributes a common Vandermonde factor on its variables;
    the zero form is represented by an empty grouping.
    """

    vandermonde_blocks: tuple[tuple[int, ...], ...]
    nvars: int


def compare_rowblocks(a: RowBlock, b: RowBlock) -> int:
    """Row-block order; returns -1, 0 or 1.

    The greater term has fewer copies of the smallest entry value at
    which the counts differ.  When the entry multisets agree, the greater
    term is the later one in lexicographic order on the flattened entries.
    """
    ea, eb = a.entries(), b.entries()
    if len(ea) != len(eb):
        raise ValueError("row-blocks come from expansions of different sizes")
    top = max(max(ea), max(eb))
    ca = [0] * (top + 1)
    cb = [0] * (top + 1)
    for v in ea:
        ca[v] += 1
    for v in eb:
        cb[v] += 1
    for v in range(top + 1):
        if ca[v] != cb[v]:
            return 1 if ca[v] < cb[v] else -1
    if ea > eb:
        return 1
    if ea < eb:
        return -1
    return 0


def _constant_rowblock(form: CvForm, sign: int) -> tuple[BlockFactorization, list[RowBlock]]:
    # All-distinct entries: the expansion collapses to |0|0|...|0| on
    # singleton blocks taken in sorted entry order.
    order = sorted(range(form.N), key=lambda i: (form.entries[i], i))
    groups = tuple((i + 1,) for i in order)
    blocks = tuple((0,) for _ in range(form.N))
    factor = BlockFactorization(groups, form.N)
    return factor, [RowBlock(blocks, groups, sign)]


def expand_rowblocks(form: CvForm) -> tuple[BlockFactorization, list[RowBlock]]:
    """Signed row-blocks of a form, largest first in row-block order.

    Zero removal and entry sorting are applied internally and their signs
    folded into each term.  The zero form produces an empty term list.
    """
    sign0, reduced = form.remove_zeros()
    n = form.N
    if reduced is None:
        if sign0 == 0:
            return BlockFactorization((), n), []
        return _constant_rowblock(form, sign0)
    sorted_form, perm, sort_sign = reduced.sort_entries()
    table = build_decoding_table(sorted_form, perm)
    groups = table.blocks
    factor = BlockFactorization(groups, n)
    values = table.values
    mults = table.multiplicities
    base_sign = sign0 * sort_sign
    terms: list[RowBlock] = []

    def rec(available: list[int], picked: list[int], powers: list[tuple[int, ...]], j: int) -> None:
        if j == len(values):
            intrinsic = permutation_sign(picked)
            terms.append(RowBlock(tuple(powers), groups, intrinsic * base_sign))
            return
        a = values[j]
        legal = [c for c in available if c <= a + 1]
        for combo in itertools.combinations(legal, mults[j]):
            rest = [c for c in available if c not in combo]
            # ascending column positions give strictly decreasing powers
            run = tuple(a - c + 1 for c in combo)
            rec(rest, picked + list(combo), powers + [run], j + 1)

    rec(list(range(1, n + 1)), [], [], 0)
    terms.sort(key=cmp_to_key(compare_rowblocks), reverse=True)
    return factor, terms


def _alternant(powers, variables, nvars: int) -> Polynomial:
    # det over rows r (power powers[r] / powers[r]!) and columns c
    # (variable variables[c]), expanded straight over permutations.
    m = len(powers)
    denom = 1
    for p in powers:
        denom *= math.factorial(p)
    terms = {}
    for sigma in itertools.permutations(range(m)):
        exps = [0] * nvars
        for c in range(m):
            exps[variables[c] - 1] = powers[sigma[c]]
        terms[tuple(exps)] = Fraction(permutation_sign(sigma), denom)
    return Polynomial(nvars, terms)


def rowblock_value(rb: RowBlock, factor: BlockFactorization) -> Polynomial:
    """Unsigned polynomial value of one row-block.

    The product of the block alternants divided by the factorials of the
    powers; this already carries the common Vandermonde factors of each
    variable group.  ``total_sign`` is deliberately not applied.
    """
    if len(rb.blocks) != len(rb.var_partition):
        raise ValueError("power blocks and variable partition disagree")
    covered = sorted(v for blk in rb.var_partition for v in blk)
    if covered != list(range(1, factor.nvars + 1)):
        raise ValueError("variable partition does not cover 1..N exactly once")
    value = Polynomial.constant(factor.nvars, 1)
    for powers, variables in zip(rb.blocks, rb.var_partition):
        if len(powers) != len(variables):
            raise ValueError("block size mismatch between powers and variables")
        value = value * _alternant(powers, variables, factor.nvars)
    return value


def evaluate(form: CvForm) -> Polynomial:
    """Exact polynomial value of a form via the block expansion."""
    factor, terms = expand_rowblocks(form)
    acc: dict[tuple[int, ...], Fraction] = {}
    for rb in terms:
        for exps, coeff in rowblock_value(rb, factor).terms.items():
            acc[exps] = acc.get(exps, Fraction(0)) + rb.total_sign * coeff
    return Polynomial(form.N, acc)


def naive_oracle(form: CvForm) -> Polynomial:
    """Cofactor-expansion determinant of the defining matrix.

    Independent of the block machinery; used to cross-check ``evaluate``.
    """
    n = form.N
    cells: list[list[Polynomial | None]] = []
    for i in range(1, n + 1):
        row = []
        for j, e in enumerate(form.entries):
            p = e - i + 1
            if p < 0:
                row.append(None)
            else:
                exps = tuple(p if v == j else 0 for v in range(n))
                row.append(Polynomial.monomial(n, exps, Fraction(1, math.factorial(p))))
        cells.append(row)

    memo: dict[tuple[int, ...], Polynomial] = {}

    def minor(rows: tuple[int, ...]) -> Polynomial:
        if not rows:
            return Polynomial.constant(n, 1)
        if rows in memo:
            return memo[rows]
        col = n - len(rows)
        acc = Polynomial.zero(n)
        for idx, r in enumerate(rows):
            cell = cells[r][col]
            if cell is None:
                continue
            rest = rows[:idx] + rows[idx + 1:]
            piece = cell * minor(rest)
            acc = acc + (piece if idx % 2 == 0 else -piece)
        memo[rows] = acc
        return acc

    return minor(tuple(range(n)))


@lru_cache(maxsize=None)
def normalized_vandermonde(n: int) -> Polynomial:
    """The form ``[N-1 ... N-1]``: prod_{i<j} (t_i - t_j) / (j - i)."""
    value = Polynomial.constant(n, 1)
    denom = 1
    for i in range(n):
        for j in range(i + 1, n):
            value = value * (Polynomial.variable(n, i) - Polynomial.variable(n, j))
            denom *= j - i
    return value * Fraction(1, denom)


def derivative_oracle(form: CvForm) -> Polynomial:
    """Second oracle: differentiate the normalized Vandermonde.

    Entry ``ni`` records ``N-1-ni`` derivatives in ``t_i``.
    """
    n = form.N
    value = normalized_vandermonde(n)
    for i, e in enumerate(form.entries):
        value = value.differentiate(i, n - 1 - e)
    return value


def leading_rowblock(class_entries) -> RowBlock:
    """Largest row-block of a class, read off without any expansion.

    The class entries themselves are the powers; bars fall between equal
    adjacent entries.  The variable partition is the canonical one of the
    class representative (the regular form with nondecreasing entries).
    """
    c = tuple(class_entries)
    if not valid_class(c):
        raise ValueError(f"{c} is not a valid class vector")
    blocks: list[list[int]] = [[c[0]]]
    variables: list[list[int]] = [[1]]
    for pos in range(1, len(c)):
        if c[pos] == c[pos - 1]:
            blocks.append([c[pos]])
            variables.append([pos + 1])
        else:
            blocks[-1].append(c[pos])
            variables[-1].append(pos + 1)
    return RowBlock(
        tuple(tuple(b) for b in blocks),
        tuple(tuple(v) for v in variables),
        1,
    )


def diagonal_rowblock(form: CvForm) -> RowBlock:
    """Greedy staircase term of a form's expansion.

    Sorts the entries and picks the leftmost admissible columns in every
    block, which is the leading row-block whenever the form is regular.
    Raises for forms whose expansion is empty (vanishing determinants).
    """
    sign0, reduced = form.remove_zeros()
    if reduced is None:
        if sign0 == 0:
            raise ValueError(f"{form} is the zero form, it has no row-blocks")
        _, terms = _constant_rowblock(form, sign0)
        return terms[0]
    sorted_form, perm, sort_sign = reduced.sort_entries()
    table = build_decoding_table(sorted_form, perm)
    blocks: list[tuple[int, ...]] = []
    col = 1
    for a, m in zip(table.values, table.multiplicities):
        if a + 1 < col + m - 1:
            raise ValueError(f"{form} vanishes, the staircase pick is inadmissible")
        blocks.append(tuple(a - c + 1 for c in range(col, col + m)))
        col += m
    return RowBlock(tuple(blocks), table.blocks, sign0 * sort_sign)


def characteristic_monomial(rb: RowBlock) -> tuple[int, ...]:
    """Exponent vector of the diagonal monomial of a row-block.

    Within each minor the c-th variable takes the c-th power; the
    coefficient is discarded.
    """
    nvars = sum(len(b) for b in rb.var_partition)
    exps = [0] * nvars
    for powers, variables in zip(rb.blocks, rb.var_partition):
        for var, p in zip(variables, powers):
            exps[var - 1] = p
    return tuple(exps)
