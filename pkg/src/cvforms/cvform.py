"""Confluent Vandermonde forms.

A form ``[n1 ... nN]`` with ``0 <= ni <= N-1`` denotes the determinant whose
column j holds the descending factorial-normalized powers
``t_j^(nj-i+1)/(nj-i+1)!`` for rows ``i = 1..N`` (entries with a negative
exponent are zero).  Equivalently it is a mixed partial derivative of the
normalized Vandermonde determinant ``[N-1 ... N-1]``, where entry ``ni``
means variable ``t_i`` was differentiated ``N-1-ni`` times.

This module covers the entry-level combinatorics of forms: degree, zero
removal, the standard permutation, type and class vectors, and stable
entry sorting.  Polynomial evaluation lives in :mod:`cvforms.laplace`.
"""

from __future__ import annotations

import re


def permutation_sign(perm) -> int:
    """Sign of a sequence of distinct comparables, by inversion count."""
    p = tuple(perm)
    inversions = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def valid_class(entries) -> bool:
    """True when ``entries`` is a class vector.

    Class vectors are nonincreasing, fall in unit steps, and end at 0.
    """
    c = tuple(entries)
    if not c or c[-1] != 0:
        return False
    return all(hi - lo in (0, 1) for hi, lo in zip(c, c[1:]))


class CvForm:
    """An entry vector ``[n1 ... nN]`` with ``0 <= ni <= N-1``."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        ent = tuple(int(e) for e in entries)
        if not ent:
            raise ValueError("a form needs at least one entry")
        n = len(ent)
        for e in ent:
            if not 0 <= e <= n - 1:
                raise ValueError(f"entry {e} outside 0..{n - 1} for {n} variables")
        self.entries = ent

    @property
    def N(self) -> int:
        return len(self.entries)

    @classmethod
    def parse(cls, text: str) -> "CvForm":
        """Accepts ``[2 2 3 3]``, ``2,2,3,3`` or ``2 2 3 3``."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        parts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
        if not parts:
            raise ValueError(f"cannot parse form from {text!r}")
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"cannot parse form from {text!r}: {exc}") from None

    def __str__(self) -> str:
        return "[" + " ".join(str(e) for e in self.entries) + "]"

    def __repr__(self) -> str:
        return f"CvForm({str(self)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CvForm):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def degree(self) -> int:
        """Polynomial degree: sum of entries minus N(N-1)/2."""
        n = self.N
        return sum(self.entries) - n * (n - 1) // 2

    def remove_zeros(self) -> tuple[int, "CvForm | None"]:
        """Iterate the zero-removal rule until a terminal case.

        A zero entry is a column (1, 0, ..., 0); expanding the determinant
        along it shows ``[.. 0 ..] = (-1)^(N-1) [.. N-1 ..]`` with every
        other entry decremented.  The leftmost zero is rewritten first.

        Returns ``(sign, form)`` with a zero-free ``form``, or a scalar
        terminal as ``(value, None)``: two zeros give 0 (two equal
        columns), all-distinct entries give the sign of the permutation
        sorting them (triangular determinant up to column order).
        """
        entries = list(self.entries)
        n = self.N
        sign = 1
        for _ in range(n + 1):
            if len(set(entries)) == n:
                order = sorted(range(n), key=lambda i: entries[i])
                return sign * permutation_sign(tuple(i + 1 for i in order)), None
            zeros = entries.count(0)
            if zeros == 0:
                return sign, CvForm(entries)
            if zeros >= 2:
                return 0, None
            k = entries.index(0)
            entries = [e - 1 for e in entries]
            entries[k] = n - 1
            sign *= (-1) ** (n - 1)
        raise AssertionError("zero removal did not terminate within N steps")

    def standard_permutation(self) -> tuple[int, ...]:
        """Ranks of the entries, ties resolved left to right."""
        ent = self.entries
        return tuple(
            1 + sum(1 for j, ej in enumerate(ent) if ej < ei or (ej == ei and j < i))
            for i, ei in enumerate(ent)
        )

    def type_of(self) -> tuple[int, ...]:
        """Componentwise ``ni - si + 1`` against the standard permutation."""
        s = self.standard_permutation()
        return tuple(e - si + 1 for e, si in zip(self.entries, s))

    def is_regular(self) -> bool:
        """True when the sorted entries rise in steps of at most one."""
        srt = sorted(self.entries)
        return all(b - a <= 1 for a, b in zip(srt, srt[1:]))

    def class_of(self) -> tuple[int, ...]:
        """Type entries sorted nonincreasing; defined for regular forms."""
        if not self.is_regular():
            raise ValueError(f"{self} is not regular, it has no class")
        return tuple(sorted(self.type_of(), reverse=True))

    def sort_entries(self) -> tuple["CvForm", tuple[int, ...], int]:
        """Stable sort of the entries.

        Returns the sorted form, the 1-based source position of each
        sorted column, and the sign of that permutation.
        """
        order = sorted(range(self.N), key=lambda i: (self.entries[i], i))
        perm = tuple(i + 1 for i in order)
        return CvForm(self.entries[i] for i in order), perm, permutation_sign(perm)
