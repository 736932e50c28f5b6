"""Deterministic builders for the example bialgebras used across the suite.

Entries carry designated subbialgebras and quotient maps together with the
expected verdict of the four-condition equivalence checks on each side.
The characteristic-2 entries realize the all-false verdicts (binomial
vanishing creates extra primitives); the rational entries are all-true.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import comb

from .coalg import Bialgebra, dualize
from .fields import GF, QQ, Field
from .linalg import LinearMap, Subspace, sparse_columns


@dataclass
class ZooEntry:
    name: str
    field: Field
    bialgebra: Bialgebra
    subspaces: dict = dc_field(default_factory=dict)   # name -> Subspace
    quotients: dict = dc_field(default_factory=dict)   # name -> LinearMap onto the quotient
    expected_sub: dict = dc_field(default_factory=dict)   # name -> all-true (True) / all-false (False)
    expected_quot: dict = dc_field(default_factory=dict)


NAMES = (
    "trivial_K",
    "group_algebra_C2",
    "group_algebra_C4",
    "sweedler_h4",
    "trunc_binomial_F2_4",
    "divided_power_dual_F2_4",
    "taft_3_F7",
)


def _from_tables(field, dim, prod, coprod, counit, unit_index=0):
    """Assemble a Bialgebra from dense structure-constant tables.

    prod[i][j] is the coordinate vector of e_i * e_j; coprod[k] is a dim x dim
    table with Delta(e_k) = sum coprod[k][i][j] e_i (x) e_j.
    """
    mult = LinearMap.from_cols(field, dim, [prod[i][j] for i in range(dim) for j in range(dim)])
    comult = LinearMap.from_cols(
        field, dim * dim,
        [[coprod[k][i][j] for i in range(dim) for j in range(dim)] for k in range(dim)],
    )
    unit = [0] * dim
    unit[unit_index] = 1
    return Bialgebra(
        field, dim,
        mult=mult,
        unit=LinearMap.column_vector(field, unit),
        comult=comult,
        counit=LinearMap.from_rows(field, [counit]),
    )


def group_algebra(field: Field, table) -> Bialgebra:
    """The group algebra of a finite group given by its multiplication table."""
    n = len(table)
    prod = [[[1 if k == table[i][j] else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    coprod = [[[1 if (i == k and j == k) else 0 for j in range(n)] for i in range(n)] for k in range(n)]
    return _from_tables(field, n, prod, coprod, [1] * n)


def _cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _unit_subspace(e: Bialgebra) -> Subspace:
    return Subspace.from_columns(e.field, e.dim, [e.unit.column(0)])


def _trunc_binomial(field: Field, n: int) -> Bialgebra:
    """K[x]/(x^n) with x primitive; requires the binomial ideal to be a biideal."""
    prod = [[[1 if k == i + j else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    coprod = [
        [[comb(k, i) if i + j == k else 0 for j in range(n)] for i in range(n)]
        for k in range(n)
    ]
    counit = [1] + [0] * (n - 1)
    return _from_tables(field, n, prod, coprod, counit)


def _taft(field: Field, n: int, q: int) -> Bialgebra:
    """The Taft bialgebra of order n^2: g^n = 1, x^n = 0, x g = q g x.

    Requires q a primitive n-th root of unity in the field.  Basis g^a x^b
    at index a*n + b.  Products use x^b g^c = q^(bc) g^c x^b; the
    comultiplication columns are built by multiplying Delta(g) and Delta(x)
    inside E (x) E, which avoids hand-rolled Gaussian binomials.
    """
    p = field.char
    if pow(q, n, p) != 1 or any(pow(q, k, p) == 1 for k in range(1, n)):
        raise ValueError(f"{q} is not a primitive {n}-th root of unity mod {p}")
    dim = n * n

    def idx(a, b):
        return (a % n) * n + b

    cols = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    vec = [0] * dim
                    if b + d < n:
                        vec[idx(a + c, b + d)] = pow(q, b * c, p)
                    cols.append(vec)
    mult = LinearMap.from_cols(field, dim, cols)
    unit = LinearMap.column_vector(field, [1 if k == 0 else 0 for k in range(dim)])
    counit = LinearMap.from_rows(field, [[1 if k % n == 0 else 0 for k in range(dim)]])

    # Delta(g^a x^b) = Delta(g)^a Delta(x)^b computed sparsely in E (x) E,
    # with (r (x) s)(t (x) w) = rt (x) sw (the braiding is the flip)
    mcols = sparse_columns(mult)

    def mul_ee(v, w):
        out = {}
        for (a, b), x in v.items():
            for (c, d), y in w.items():
                for r1, z1 in mcols[a * dim + c]:
                    for r2, z2 in mcols[b * dim + d]:
                        key = (r1, r2)
                        out[key] = (out.get(key, 0) + x * y * z1 * z2) % p
        return {k: v2 for k, v2 in out.items() if v2}

    delta_g = {(idx(1, 0), idx(1, 0)): 1}
    delta_x = {(idx(0, 1), 0): 1, (idx(1, 0), idx(0, 1)): 1}
    delta_cols = []
    for a in range(n):
        for b in range(n):
            acc = {(0, 0): 1}
            for _ in range(a):
                acc = mul_ee(acc, delta_g)
            for _ in range(b):
                acc = mul_ee(acc, delta_x)
            col = [0] * (dim * dim)
            for (r, s), v in acc.items():
                col[r * dim + s] = v
            delta_cols.append(col)
    comult = LinearMap.from_cols(field, dim * dim, delta_cols)
    return Bialgebra(field, dim, mult=mult, unit=unit, comult=comult, counit=counit)


def build(name: str) -> ZooEntry:
    """Construct a zoo entry by name; raises ValueError on unknown names."""
    if name == "trivial_K":
        e = group_algebra(QQ, [[0]])
        return ZooEntry(
            name, QQ, e,
            subspaces={"unit": _unit_subspace(e)},
            quotients={"eps": e.counit},
            expected_sub={"unit": True},
            expected_quot={"eps": True},
        )

    if name == "group_algebra_C2":
        e = group_algebra(QQ, _cyclic_table(2))
        return ZooEntry(
            name, QQ, e,
            subspaces={"unit": _unit_subspace(e)},
            quotients={"eps": e.counit},
            expected_sub={"unit": True},
            expected_quot={"eps": True},
        )

    if name == "group_algebra_C4":
        e = group_algebra(QQ, _cyclic_table(4))
        c2 = Subspace.from_columns(QQ, 4, [[1, 0, 0, 0], [0, 0, 1, 0]])
        to_c2 = LinearMap.from_rows(QQ, [[1, 0, 1, 0], [0, 1, 0, 1]])
        return ZooEntry(
            name, QQ, e,
            subspaces={"unit": _unit_subspace(e), "C2": c2},
            quotients={"eps": e.counit, "toC2": to_c2},
            expected_sub={"unit": True, "C2": True},
            expected_quot={"eps": True, "toC2": True},
        )

    if name == "sweedler_h4":
        # basis 1, g, x, gx with g^2 = 1, x^2 = 0, x g = -g x
        # Delta x = x (x) 1 + g (x) x, Delta(gx) = gx (x) g + 1 (x) gx
        prod = [
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
            [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
            [[0, 0, 1, 0], [0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0]],
            [[0, 0, 0, 1], [0, 0, -1, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        ]
        z4 = [[0] * 4 for _ in range(4)]

        def tbl(pairs):
            t = [row[:] for row in z4]
            for coeff, (i, j) in pairs:
                t[i][j] = coeff
            return t

        coprod = [
            tbl([(1, (0, 0))]),
            tbl([(1, (1, 1))]),
            tbl([(1, (2, 0)), (1, (1, 2))]),
            tbl([(1, (3, 1)), (1, (0, 3))]),
        ]
        e = _from_tables(QQ, 4, prod, coprod, [1, 1, 0, 0])
        b = Subspace.from_columns(QQ, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
        to_c2 = LinearMap.from_rows(QQ, [[1, 0, 0, 0], [0, 1, 0, 0]])
        return ZooEntry(
            name, QQ, e,
            subspaces={"B": b, "unit": _unit_subspace(e)},
            quotients={"eps": e.counit, "toC2": to_c2},
            expected_sub={"B": True, "unit": True},
            expected_quot={"eps": True, "toC2": True},
        )

    if name == "trunc_binomial_F2_4":
        e = _trunc_binomial(GF(2), 4)
        return ZooEntry(
            name, GF(2), e,
            subspaces={"unit": _unit_subspace(e)},
            quotients={"eps": e.counit},
            expected_sub={"unit": True},
            expected_quot={"eps": False},
        )

    if name == "divided_power_dual_F2_4":
        e = dualize(_trunc_binomial(GF(2), 4))
        return ZooEntry(
            name, GF(2), e,
            subspaces={"B": _unit_subspace(e)},
            quotients={"eps": e.counit},
            expected_sub={"B": False},
            expected_quot={"eps": True},
        )

    if name == "taft_3_F7":
        e = _taft(GF(7), 3, 2)
        grp = Subspace.from_columns(GF(7), 9, [[1 if k == 3 * a else 0 for k in range(9)] for a in range(3)])
        return ZooEntry(
            name, GF(7), e,
            subspaces={"B": grp},
            expected_sub={"B": True},
        )

    raise ValueError(f"unknown zoo name {name!r}")


def all_entries():
    return [build(n) for n in NAMES]


# -- seeded random instances --------------------------------------------------

_KLEIN = [[i ^ j for j in range(4)] for i in range(4)]


def _s3_table():
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    index = {p: i for i, p in enumerate(perms)}

    def mul(p, q):
        return tuple(p[q[i]] for i in range(3))

    return [[index[mul(p, q)] for q in perms] for p in perms]


def _subgroups(table):
    """All subgroups that are normal, as sorted element tuples."""
    n = len(table)
    elems = range(n)
    out = []
    for mask in range(1, 1 << n):
        sub = [i for i in elems if mask & (1 << i)]
        if 0 not in sub:
            continue
        ok = all(table[a][b] in sub for a in sub for b in sub)
        if not ok:
            continue
        # closure under inverse is implied for finite subsets closed under product
        normal = all(
            table[table[g][h]][_inverse(table, g)] in sub for g in elems for h in sub
        )
        if normal:
            out.append(tuple(sub))
    return out


def _inverse(table, g):
    return next(h for h in range(len(table)) if table[g][h] == 0)


def _quotient_table(table, sub):
    """Multiplication table of G/N on min-element coset representatives."""
    n = len(table)
    coset_of = {}
    reps = []
    for g in range(n):
        coset = tuple(sorted(table[g][h] for h in sub))
        if coset not in coset_of:
            coset_of[coset] = len(reps)
            reps.append(coset)
    def cls(g):
        return coset_of[tuple(sorted(table[g][h] for h in sub))]
    return [[cls(table[a][b]) for b in [reps[j][0] for j in range(len(reps))]] for a in [reps[i][0] for i in range(len(reps))]]


_GROUPS = None


def _group_catalog():
    global _GROUPS
    if _GROUPS is None:
        tables = [_cyclic_table(k) for k in range(1, 7)] + [_KLEIN, _s3_table()]
        _GROUPS = [(t, _subgroups(t)) for t in tables]
    return _GROUPS


def random_instance(seed: int, dim_bound: int, field: Field):
    """A verified small bialgebra: the dual of a random group-algebra quotient.

    Deterministic per (seed, dim_bound, field); returns None when no group in
    the catalog fits the bound after a bounded number of attempts.
    """
    rng = random.Random(seed)
    catalog = _group_catalog()
    for _ in range(32):
        table, subs = catalog[rng.randrange(len(catalog))]
        sub = subs[rng.randrange(len(subs))]
        qt = _quotient_table(table, sub)
        if len(qt) <= dim_bound:
            return dualize(group_algebra(field, qt))
    return None
