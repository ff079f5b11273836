"""Harmonic bases indexed by standard ribbon tableaux.

Every standard tableau on N boxes yields one confluent Vandermonde form;
together they span the space annihilated by the power-sum operators
``sum_i d^k/dt_i^k`` for ``k = 1..N-1``.  This module generates those
bases, counts their graded dimensions, and verifies harmonicity and
linear independence with exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cvform import CvForm
from .laplace import characteristic_monomial, diagonal_rowblock, evaluate
from .poly import Polynomial, _term_key
from .ribbon import (
    SkewTableau,
    backward_order,
    enumerate_ribbons,
    enumerate_tableaux,
    ribbons_of_degree,
    tableau_to_cvform,
)


def q_factorial(n: int) -> list[int]:
    """Coefficient list of ``prod_{i=1..N-1} (1 + q + ... + q^i)``.

    Entry d counts the permutations of N letters with d inversions, which
    is also the number of degree-d forms in the standard basis.
    """
    if n < 1:
        raise ValueError("need at least one variable")
    coeffs = [1]
    for i in range(1, n):
        nxt = [0] * (len(coeffs) + i)
        for d, c in enumerate(coeffs):
            for j in range(i + 1):
                nxt[d + j] += c
        coeffs = nxt
    return coeffs


@dataclass(frozen=True)
class BasisForm:
    """A generated form together with its source tableau."""

    form: CvForm
    tableau: SkewTableau


@dataclass(frozen=True)
class Basis:
    n: int
    degree: int | None
    reading_order: tuple[int, ...]
    forms: tuple[BasisForm, ...]


def generate_basis(n: int, degree: int | None = None, reading_order=None) -> Basis:
    """All tableau forms for N variables, optionally one graded slice.

    ``reading_order`` permutes which value is read first; the default is
    the backward order N, N-1, ..., 1.
    """
    order = tuple(reading_order) if reading_order is not None else backward_order(n)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"reading order {order} is not a permutation of 1..{n}")
    ribbons = enumerate_ribbons(n) if degree is None else ribbons_of_degree(n, degree)
    forms = tuple(
        BasisForm(tableau_to_cvform(t, order), t)
        for rib in ribbons
        for t in enumerate_tableaux(rib)
    )
    return Basis(n, degree, order, forms)


def verify_harmonicity(form: CvForm, kmax: int | None = None) -> dict:
    """Check annihilation by the power sums along two routes.

    Route one differentiates the expanded polynomial; route two uses the
    identity that the k-th power sum maps ``[.. ni ..]`` to the sum of
    forms with one entry lowered by k (negative entries drop out).
    """
    n = form.N
    if kmax is None:
        kmax = n - 1
    if not 0 <= kmax <= n - 1:
        raise ValueError(f"kmax {kmax} outside 0..{n - 1}")
    value = evaluate(form)
    checks = []
    for k in range(1, kmax + 1):
        poly_ok = value.symmetrized_derivative(k).is_zero()
        acc = Polynomial.zero(n)
        for i, e in enumerate(form.entries):
            if e - k < 0:
                continue
            lowered = form.entries[:i] + (e - k,) + form.entries[i + 1:]
            acc = acc + evaluate(CvForm(lowered))
        checks.append({"k": k, "polynomial_route": poly_ok, "lowered_forms_route": acc.is_zero()})
    return {
        "form": str(form),
        "kmax": kmax,
        "checks": checks,
        "ok": all(c["polynomial_route"] and c["lowered_forms_route"] for c in checks),
    }


@dataclass(frozen=True)
class CoefficientMatrix:
    """Rows of exact coefficients over a shared monomial column list."""

    columns: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[Fraction, ...], ...]


def coefficient_matrix(polys) -> CoefficientMatrix:
    """Assemble expanded polynomials over their canonical column union."""
    polys = list(polys)
    columns = sorted({e for p in polys for e in p.terms}, key=_term_key)
    index = {e: i for i, e in enumerate(columns)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(columns)
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(tuple(row))
    return CoefficientMatrix(tuple(columns), tuple(rows))


def _integer_rows(matrix: CoefficientMatrix) -> list[list[int]]:
    # scale each row by the least common multiple of its denominators
    rows = []
    for row in matrix.rows:
        lcm = 1
        for c in row:
            if c:
                lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        rows.append([int(c * lcm) for c in row])
    return rows


def fraction_free_rank(rows: list[list[int]]) -> int:
    """Exact rank by single-step fraction-free elimination.

    Columns are scanned left to right; the pivot is the first row with a
    nonzero entry in the current column.  Updates divide by the previous
    pivot, which is always exact (the entries stay minors of the input).
    """
    m = [row[:] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    top = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(top, len(m)) if m[r][col]), None)
        if pivot_row is None:
            continue
        m[top], m[pivot_row] = m[pivot_row], m[top]
        pivot = m[top][col]
        for r in range(top + 1, len(m)):
            factor = m[r][col]
            row = m[r]
            lead = m[top]
            for c in range(col + 1, ncols):
                row[c] = (pivot * row[c] - factor * lead[c]) // prev
            row[col] = 0
        prev = pivot
        rank += 1
        top += 1
        if top == len(m):
            break
    return rank


def verify_independence(basis: Basis) -> tuple[int, bool]:
    """Exact rank of the fully expanded basis.

    Monomials of different total degree never meet, so the coefficient
    matrix is block diagonal over the graded slices and the slice ranks
    add up to the full rank.  Returns (rank, rank == number of forms);
    duplicate forms are detected up front since they cap the rank.
    """
    forms = [bf.form for bf in basis.forms]
    duplicates = len(set(forms)) < len(forms)
    by_degree: dict[int, list[CvForm]] = {}
    for f in forms:
        by_degree.setdefault(f.degree(), []).append(f)
    rank = 0
    for d in sorted(by_degree):
        slice_forms = by_degree[d]
        if duplicates:
            seen = []
            for f in slice_forms:
                if f not in seen:
                    seen.append(f)
            slice_forms = seen
        matrix = coefficient_matrix(evaluate(f) for f in slice_forms)
        rank += fraction_free_rank(_integer_rows(matrix))
    return rank, not duplicates and rank == len(forms)


def leading_rank(basis: Basis) -> int:
    """Rank of the leading row-blocks only; a faster screen for large N."""
    by_degree: dict[int, list[CvForm]] = {}
    for bf in basis.forms:
        by_degree.setdefault(bf.form.degree(), []).append(bf.form)
    from .laplace import BlockFactorization, rowblock_value

    rank = 0
    for d in sorted(by_degree):
        polys = []
        for f in by_degree[d]:
            rb = diagonal_rowblock(f)
            polys.append(rowblock_value(rb, BlockFactorization(rb.var_partition, f.N)))
        matrix = coefficient_matrix(polys)
        rank += fraction_free_rank(_integer_rows(matrix))
    return rank


def verify_characteristic_uniqueness(basis: Basis) -> bool:
    """Pairwise distinctness of the leading diagonal monomials.

    Requires the backward reading order, for which the diagonal exponents
    are the form types; no polynomial expansion is involved.
    """
    if basis.reading_order != backward_order(basis.n):
        raise ValueError("characteristic uniqueness is defined for the backward reading")
    seen = set()
    for bf in basis.forms:
        exps = characteristic_monomial(diagonal_rowblock(bf.form))
        if exps in seen:
            return False
        seen.add(exps)
    return True


def compare_bases(n: int, orders) -> dict:
    """Generate one basis per reading order and report ranks and overlaps."""
    reports = []
    form_sets = []
    for order in orders:
        basis = generate_basis(n, None, order)
        rank, independent = verify_independence(basis)
        form_sets.append(frozenset(bf.form for bf in basis.forms))
        reports.append(
            {
                "order": list(order),
                "forms": len(basis.forms),
                "rank": rank,
                "independent": independent,
            }
        )
    overlap = [[len(a & b) for b in form_sets] for a in form_sets]
    return {
        "n": n,
        "bases": reports,
        "overlap": overlap,
        "ok": all(r["independent"] for r in reports),
    }
