"""Independent brute-force oracles used to freeze expected test values.

Everything here deliberately avoids the library's canonical-form machinery:
rank is computed by plain row elimination without pivot normalization, span
questions reduce to rank comparisons, and small prime-field questions are
settled by exhaustive enumeration.
"""

from fractions import Fraction
from itertools import product


def _elim_rank(rows, char):
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    def nz(x):
        return (x % char if char else x) != 0

    rank = 0
    for c in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if nz(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i == rank:
                continue
            a, b = rows[i][c], rows[rank][c]
            if not nz(a):
                continue
            # cross-multiply, no normalization
            rows[i] = [
                (b * x - a * y) % char if char else b * x - a * y
                for x, y in zip(rows[i], rows[rank])
            ]
        rank += 1
    return rank


def rank_of(columns, char=0):
    """Rank of a list of column vectors (entries ints or Fractions)."""
    rows = [list(c) for c in columns]  # rank is transpose-invariant
    return _elim_rank(rows, char)


def span_equal(cols_a, cols_b, char=0):
    """Do two lists of columns span the same subspace?"""
    ra = rank_of(cols_a, char)
    rb = rank_of(cols_b, char)
    rab = rank_of(list(cols_a) + list(cols_b), char)
    return ra == rb == rab


def span_contains(cols_a, vec, char=0):
    """Is vec in the span of cols_a?"""
    return rank_of(list(cols_a) + [list(vec)], char) == rank_of(cols_a, char)


def enumerate_kernel_f2(apply_fn, dim):
    """All vectors of F_2^dim killed by apply_fn (vector -> list of residues)."""
    found = []
    for bits in product((0, 1), repeat=dim):
        out = apply_fn(list(bits))
        if all(x % 2 == 0 for x in out):
            found.append(list(bits))
    return found


def mat_apply(mat_rows, vec, char=0):
    out = []
    for row in mat_rows:
        s = sum(a * b for a, b in zip(row, vec))
        out.append(s % char if char else s)
    return out


def frac(x):
    return Fraction(x)
