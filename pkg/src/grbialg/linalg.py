"""Exact linear algebra: matrices, canonical subspaces, quotients, tensors.

Conventions used throughout the library:

* a linear map K^c -> K^r is an r x c matrix acting on column vectors;
* tensor indices are row-major, e_i (x) e_j |-> index i * dim_right + j,
  so the matrix of f (x) g is the Kronecker product;
* a subspace is held in reduced column echelon form (pivot rows ascending),
  which makes equality of subspaces a syntactic check;
* zero-dimensional spaces are first-class and appear as empty matrices.

All values are immutable after construction and every operation is a pure
function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    ImageNotContained,
    KernelNotContained,
)
from .fields import Field


class LinearMap:
    """An exact matrix with explicit codomain (rows) and domain (cols)."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data  # list of row lists; never mutated after init
        assert len(data) == rows and all(len(r) == cols for r in data)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows) -> "LinearMap":
        data = [[field.of(x) for x in row] for row in rows]
        ncols = len(data[0]) if data else 0
        return cls(field, len(data), ncols, data)

    @classmethod
    def from_cols(cls, field: Field, nrows: int, cols) -> "LinearMap":
        cols = list(cols)
        data = [[field.of(col[i]) for col in cols] for i in range(nrows)]
        return cls(field, nrows, len(cols), data)

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "LinearMap":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinearMap":
        z, o = field.zero, field.one
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def column_vector(cls, field: Field, entries) -> "LinearMap":
        return cls.from_cols(field, len(entries), [list(entries)])

    # -- basic algebra -----------------------------------------------------

    def _check_field(self, other: "LinearMap"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        p = self.field.char
        a, b = self.data, other.data
        n, k, m = self.rows, self.cols, other.cols
        out = []
        for i in range(n):
            ai = a[i]
            row = []
            for j in range(m):
                s = sum(ai[t] * b[t][j] for t in range(k))
                row.append(s % p if p else (s if k else self.field.zero))
            if not k:
                row = [self.field.zero] * m
            out.append(row)
        return LinearMap(self.field, n, m, out)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("add shape mismatch")
        p = self.field.char
        out = [
            [(x + y) % p if p else x + y for x, y in zip(ra, rb)]
            for ra, rb in zip(self.data, other.data)
        ]
        return LinearMap(self.field, self.rows, self.cols, out)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + other.scale(-1)

    def scale(self, c) -> "LinearMap":
        c = self.field.of(c)
        p = self.field.char
        out = [[(c * x) % p if p else c * x for x in row] for row in self.data]
        return LinearMap(self.field, self.rows, self.cols, out)

    def __neg__(self) -> "LinearMap":
        return self.scale(-1)

    def transpose(self) -> "LinearMap":
        out = [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return LinearMap(self.field, self.cols, self.rows, out)

    def kron(self, other: "LinearMap") -> "LinearMap":
        """Kronecker product; the matrix of self (x) other in row-major order."""
        self._check_field(other)
        p = self.field.char
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        out = [[None] * cols for _ in range(rows)]
        for i1, ra in enumerate(self.data):
            for i2, rb in enumerate(other.data):
                dest = out[i1 * other.rows + i2]
                base = 0
                for j1 in range(self.cols):
                    a = ra[j1]
                    for j2 in range(other.cols):
                        v = a * rb[j2]
                        dest[base + j2] = v % p if p else v
                    base += other.cols
        return LinearMap(self.field, rows, cols, out)

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    def column(self, j: int):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def rank(self) -> int:
        _, pivots = _rref(self.field, [row[:] for row in self.data])
        return len(pivots)

    def first_nonzero(self):
        """(row, col) of the first nonzero entry in row-major order, or None."""
        z = self.field.zero
        for i, row in enumerate(self.data):
            for j, x in enumerate(row):
                if x != z:
                    return (i, j)
        return None

    def __repr__(self):
        return f"LinearMap({self.field}, {self.rows}x{self.cols})"

    def pretty(self) -> str:
        return "\n".join("[" + " ".join(self.field.fmt(x) for x in row) + "]" for row in self.data)


# -- row reduction core ----------------------------------------------------


def _rref(field: Field, data):
    """In-place reduced row echelon form; returns (data, pivot column list)."""
    p = field.char
    nrows = len(data)
    ncols = len(data[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if data[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            data[r], data[pr] = data[pr], data[r]
        inv = field.inv(data[r][c])
        row_r = data[r]
        if inv != field.one:
            for j in range(c, ncols):
                v = row_r[j] * inv
                row_r[j] = v % p if p else v
        for i in range(nrows):
            if i == r:
                continue
            f = data[i][c]
            if f != 0:
                row_i = data[i]
                for j in range(c, ncols):
                    v = row_i[j] - f * row_r[j]
                    row_i[j] = v % p if p else v
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return data, pivots


def solve(a: LinearMap, b: LinearMap):
    """A solution X of a @ X = b, or None when the system is inconsistent.

    When ``a`` is injective the solution is unique; the returned X always
    has its free coordinates set to zero, so the result is deterministic.
    """
    a._check_field(b)
    if a.rows != b.rows:
        raise DimensionMismatch("solve: row mismatch")
    aug = [a.data[i][:] + b.data[i][:] for i in range(a.rows)]
    if not aug:
        return LinearMap.zero(a.field, a.cols, b.cols)
    red, pivots = _rref(a.field, aug)
    for c in pivots:
        if c >= a.cols:
            return None  # a pivot in the augmented block: inconsistent
    z = a.field.zero
    x = [[z] * b.cols for _ in range(a.cols)]
    for r, c in enumerate(pivots):
        x[c] = red[r][a.cols:]
    return LinearMap(a.field, a.cols, b.cols, x)


def right_inverse(a: LinearMap) -> LinearMap:
    """A section of a surjective map (a @ s = identity)."""
    s = solve(a, LinearMap.identity(a.field, a.rows))
    if s is None:
        raise DimensionMismatch("right_inverse of a non-surjective map")
    return s


# -- canonical subspaces ----------------------------------------------------


class Subspace:
    """A subspace of K^n as a reduced column echelon basis, pivots ascending.

    The canonical form is unique per subspace, so ``==`` decides equality
    of subspaces.  ``pivots[j]`` is the pivot row of basis column j; the
    pivot rows of the basis matrix form an identity block, which makes
    coordinate extraction (corestriction) a row selection.
    """

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: Field, ambient: int, basis: LinearMap, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def from_columns(cls, field: Field, ambient: int, cols) -> "Subspace":
        """Span of the given vectors (any iterable of length-``ambient`` columns)."""
        if isinstance(cols, LinearMap):
            if cols.rows != ambient:
                raise DimensionMismatch("column length != ambient dimension")
            rows = [[cols.data[i][j] for i in range(ambient)] for j in range(cols.cols)]
        else:
            cols = [list(c) for c in cols]
            if any(len(c) != ambient for c in cols):
                raise DimensionMismatch("column length != ambient dimension")
            rows = [[field.of(x) for x in c] for c in cols]
        if not rows:
            return cls.zero(field, ambient)
        red, pivots = _rref(field, rows)
        basis_cols = [red[r] for r in range(len(pivots))]
        basis = LinearMap.from_cols(field, ambient, basis_cols)
        return cls(field, ambient, basis, pivots)

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, LinearMap.zero(field, ambient, 0), ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, LinearMap.identity(field, ambient), range(ambient))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of K^{self.ambient} over {self.field})"

    def _check_ambient(self, other: "Subspace"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.ambient != other.ambient:
            raise DimensionMismatch(f"ambient {self.ambient} vs {other.ambient}")

    def coords_of(self, vec):
        """Coordinates of a member vector in the canonical basis, else None."""
        vec = [self.field.of(x) for x in vec]
        if len(vec) != self.ambient:
            raise DimensionMismatch("vector length != ambient")
        coords = [vec[r] for r in self.pivots]
        p = self.field.char
        for i in range(self.ambient):
            s = sum(self.basis.data[i][j] * coords[j] for j in range(self.dim))
            s = s % p if (p and self.dim) else s
            if (s if self.dim else self.field.zero) != vec[i]:
                return None
        return coords

    def contains_vector(self, vec) -> bool:
        return self.coords_of(vec) is not None

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(other.basis.column(j)) for j in range(other.dim))

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_columns(
            self.field, self.ambient, self.basis.columns() + other.basis.columns()
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.ambient)
        stacked = hstack([self.basis, other.basis])
        ker = kernel(stacked)  # pairs (x, y) with S x + T y = 0
        cols = []
        for j in range(ker.dim):
            x = [ker.basis.data[i][j] for i in range(self.dim)]
            cols.append((self.basis @ LinearMap.column_vector(self.field, x)).column(0))
        return Subspace.from_columns(self.field, self.ambient, cols)


def lattice(op: str, s: Subspace, t: Subspace):
    """Dispatch table over {sum, intersect, equal, contains}."""
    if op == "sum":
        return s.sum(t)
    if op == "intersect":
        return s.intersect(t)
    if op == "equal":
        s._check_ambient(t)
        return s == t
    if op == "contains":
        return s.contains(t)
    raise ValueError(f"unknown lattice op {op!r}")


def kernel(f: LinearMap) -> Subspace:
    """The null space {v : f v = 0} in canonical form."""
    red, pivots = _rref(f.field, [row[:] for row in f.data])
    pivot_set = set(pivots)
    free = [c for c in range(f.cols) if c not in pivot_set]
    z, o = f.field.zero, f.field.one
    cols = []
    for c in free:
        v = [z] * f.cols
        v[c] = o
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][c] % f.field.char if f.field.char else -red[r][c]
        cols.append(v)
    return Subspace.from_columns(f.field, f.cols, cols)


def image(f: LinearMap) -> Subspace:
    """The canonical column space of f."""
    return Subspace.from_columns(f.field, f.rows, f.columns())


@dataclass(frozen=True)
class Quotient:
    """Split presentation of K^n / S with the non-pivot coordinate section.

    ``proj @ sect = id``, ``proj @ space.basis = 0`` and
    ``space.basis @ retr + sect @ proj = id`` hold exactly.
    """

    space: Subspace
    dim: int
    proj: LinearMap  # K^n -> K^q
    sect: LinearMap  # K^q -> K^n
    retr: LinearMap  # K^n -> S coordinates


def quotient_with_section(s: Subspace) -> Quotient:
    """Quotient by a subspace with the deterministic complement section.

    The complement is spanned by the coordinate vectors at non-pivot rows
    of the canonical basis, which splits every inclusion exactly.
    """
    field, n, k = s.field, s.ambient, s.dim
    z, o = field.zero, field.one
    pivot_set = set(s.pivots)
    co = [i for i in range(n) if i not in pivot_set]
    q = n - k
    retr = LinearMap(field, k, n, [[o if j == r else z for j in range(n)] for r in s.pivots])
    sect = LinearMap(field, n, q, [[o if co[t] == i else z for t in range(q)] for i in range(n)])
    # proj picks the complement coordinates of v - basis @ retr(v)
    resid = LinearMap.identity(field, n) - s.basis @ retr
    proj = LinearMap(field, q, n, [resid.data[i][:] for i in co])
    return Quotient(space=s, dim=q, proj=proj, sect=sect, retr=retr)


def corestrict(f: LinearMap, s: Subspace) -> LinearMap:
    """The unique g with i_S . g = f, i.e. f written in the basis of S.

    Raises ImageNotContained when image(f) is not inside S.
    """
    if f.rows != s.ambient:
        raise DimensionMismatch("corestrict: codomain != ambient")
    g = LinearMap(f.field, s.dim, f.cols, [f.data[r][:] for r in s.pivots])
    if s.basis @ g != f:
        raise ImageNotContained(f"image of {f!r} escapes subspace of dim {s.dim}")
    return g


def factor_through_quotient(f: LinearMap, q: Quotient) -> LinearMap:
    """The unique g with g . proj = f, for S inside ker(f).

    Raises KernelNotContained when f does not kill S.
    """
    if f.cols != q.space.ambient:
        raise DimensionMismatch("factor: domain != ambient")
    if not (f @ q.space.basis).is_zero():
        raise KernelNotContained("f does not vanish on the subspace")
    return f @ q.sect


def tensor_map(f: LinearMap, g: LinearMap) -> LinearMap:
    """The matrix of f (x) g for the fixed row-major basis order."""
    return f.kron(g)


def hstack(maps) -> LinearMap:
    maps = list(maps)
    field, rows = maps[0].field, maps[0].rows
    for m in maps:
        if m.rows != rows:
            raise DimensionMismatch("hstack: codomain mismatch")
        maps[0]._check_field(m)
    data = [sum((m.data[i] for m in maps), []) for i in range(rows)]
    return LinearMap(field, rows, sum(m.cols for m in maps), data)


def vstack(maps) -> LinearMap:
    maps = list(maps)
    field, cols = maps[0].field, maps[0].cols
    for m in maps:
        if m.cols != cols:
            raise DimensionMismatch("vstack: domain mismatch")
        maps[0]._check_field(m)
    data = [row[:] for m in maps for row in m.data]
    return LinearMap(field, sum(m.rows for m in maps), cols, data)


def block_codiag(maps) -> LinearMap:
    """Codiagonal of maps with a common codomain (horizontal concatenation)."""
    return hstack(maps)


def block_diag(maps) -> LinearMap:
    """Diagonal of maps with a common domain (vertical concatenation)."""
    return vstack(maps)


def direct_sum(maps) -> LinearMap:
    """The block-diagonal direct sum of maps on independent summands."""
    maps = list(maps)
    field = maps[0].field
    rows = sum(m.rows for m in maps)
    cols = sum(m.cols for m in maps)
    out = LinearMap.zero(field, rows, cols).data
    r0 = c0 = 0
    for m in maps:
        for i in range(m.rows):
            out[r0 + i][c0 : c0 + m.cols] = [x for x in m.data[i]]
        r0 += m.rows
        c0 += m.cols
    return LinearMap(field, rows, cols, out)


def flip(field: Field, m: int, n: int) -> LinearMap:
    """The canonical flip K^m (x) K^n -> K^n (x) K^m, e_i (x) e_j |-> e_j (x) e_i."""
    z, o = field.zero, field.one
    out = [[z] * (m * n) for _ in range(m * n)]
    for i in range(m):
        for j in range(n):
            out[j * m + i][i * n + j] = o
    return LinearMap(field, m * n, m * n, out)


def tensor_subspace(s: Subspace, t: Subspace) -> Subspace:
    """S (x) T inside K^(mn); the Kronecker basis is already canonical."""
    if s.field != t.field:
        raise FieldMismatch(f"{s.field} vs {t.field}")
    basis = s.basis.kron(t.basis)
    pivots = [ps * t.ambient + pt for ps in s.pivots for pt in t.pivots]
    return Subspace(s.field, s.ambient * t.ambient, basis, pivots)


# -- sparse tensor-slot evaluation -------------------------------------------
#
# The axiom checkers compose maps like (m (x) m) . (id (x) c (x) id) . (D (x) D)
# whose identity-padded Kronecker factors are huge but trivially sparse.
# Rather than materializing them, vectors of a tensor power are held as
# {multi-index tuple: scalar} dicts and structure maps are applied to a
# chosen factor slot through their sparse column lists.


def sparse_columns(f: LinearMap):
    """Per-column nonzero lists [(row, value), ...] of a matrix."""
    z = f.field.zero
    cols = [[] for _ in range(f.cols)]
    for i, row in enumerate(f.data):
        for j, v in enumerate(row):
            if v != z:
                cols[j].append((i, v))
    return cols


def _ravel(key, dims):
    idx = 0
    for k, d in zip(key, dims):
        idx = idx * d + k
    return idx


def _unravel(idx, dims):
    out = []
    for d in reversed(dims):
        out.append(idx % d)
        idx //= d
    return tuple(reversed(out))


class SlotMap:
    """A linear map prepared for application to tensor-factor slots."""

    __slots__ = ("cols", "in_dims", "out_dims")

    def __init__(self, f: LinearMap, in_dims, out_dims):
        assert f.cols == _prod(in_dims) and f.rows == _prod(out_dims)
        self.cols = sparse_columns(f)
        self.in_dims = tuple(in_dims)
        self.out_dims = tuple(out_dims)

    def apply(self, vec: dict, slot: int, char: int) -> dict:
        """Apply to factors [slot, slot + len(in_dims)) of a sparse vector."""
        k = len(self.in_dims)
        out = {}
        for key, val in vec.items():
            j = _ravel(key[slot : slot + k], self.in_dims)
            for i, w in self.cols[j]:
                nk = key[:slot] + _unravel(i, self.out_dims) + key[slot + k :]
                acc = out.get(nk, 0) + val * w
                out[nk] = acc % char if char else acc
        return {k2: v for k2, v in out.items() if v != 0}


def _prod(dims):
    n = 1
    for d in dims:
        n *= d
    return n


def slot_chain(start_dims, steps, char: int):
    """Evaluate a chain of (SlotMap, slot) steps on every basis vector.

    Returns a canonical dict-of-dicts {input multi-index: output vector});
    two chains are equal as linear maps iff these dicts are equal.
    """
    results = {}
    for idx in range(_prod(start_dims)):
        key = _unravel(idx, start_dims)
        vec = {key: 1}
        for sm, slot in steps:
            vec = sm.apply(vec, slot, char)
        results[key] = vec
    return results
