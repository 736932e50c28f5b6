"""Algebra, coalgebra, bialgebra and braiding data with axiom verification.

Structure maps are plain matrices in the conventions of ``linalg``:
multiplication m: K^(n*n) -> K^n, unit u: K -> K^n, comultiplication
Delta: K^n -> K^(n*n), counit eps: K^n -> K.  The monoidal model is strict,
so the unit identifications K (x) V = V = V (x) K are literal and no
constraint matrices appear anywhere.

The axiom checkers evaluate both sides of each identity column by column
through sparse tensor-slot application (``linalg.SlotMap``); the padded
Kronecker products these identities would otherwise require grow as dim^6
and are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import DimensionMismatch
from .fields import Field
from .linalg import LinearMap, SlotMap, flip, kernel, slot_chain, solve, tensor_map


@dataclass
class CheckReport:
    """Outcome of an axiom suite: pass/fail plus the first failing identity."""

    ok: bool = True
    failed: Optional[str] = None
    index: Optional[tuple] = None
    checked: list = dc_field(default_factory=list)

    def record(self, name: str, holds: bool, index=None):
        self.checked.append(name)
        if not holds and self.ok:
            self.ok = False
            self.failed = name
            self.index = index

    def merge(self, other: "CheckReport"):
        self.checked.extend(other.checked)
        if not other.ok and self.ok:
            self.ok, self.failed, self.index = False, other.failed, other.index

    def __bool__(self):
        return self.ok


def _expect(report: CheckReport, name: str, lhs: LinearMap, rhs: LinearMap):
    if lhs == rhs:
        report.record(name, True)
    else:
        report.record(name, False, (lhs - rhs).first_nonzero())


def _expect_chain(report: CheckReport, name: str, start_dims, lhs_steps, rhs_steps, char: int):
    lhs = slot_chain(start_dims, lhs_steps, char)
    rhs = slot_chain(start_dims, rhs_steps, char)
    if lhs == rhs:
        report.record(name, True)
        return
    for key in lhs:
        if lhs[key] != rhs[key]:
            report.record(name, False, key)
            return
    report.record(name, False, None)


class Coalgebra:
    """A finite-dimensional coalgebra (dim, Delta, eps)."""

    def __init__(self, field: Field, dim: int, comult: LinearMap, counit: LinearMap):
        if comult.rows != dim * dim or comult.cols != dim:
            raise DimensionMismatch("comult must be dim^2 x dim")
        if counit.rows != 1 or counit.cols != dim:
            raise DimensionMismatch("counit must be 1 x dim")
        self.field = field
        self.dim = dim
        self.comult = comult
        self.counit = counit

    def __repr__(self):
        return f"Coalgebra(dim {self.dim} over {self.field})"


class Algebra:
    """A finite-dimensional unital algebra (dim, m, u)."""

    def __init__(self, field: Field, dim: int, mult: LinearMap, unit: LinearMap):
        if mult.rows != dim or mult.cols != dim * dim:
            raise DimensionMismatch("mult must be dim x dim^2")
        if unit.rows != dim or unit.cols != 1:
            raise DimensionMismatch("unit must be dim x 1")
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = unit

    def __repr__(self):
        return f"Algebra(dim {self.dim} over {self.field})"


class Bialgebra:
    """A braided bialgebra; the braiding defaults to the canonical flip."""

    def __init__(
        self,
        field: Field,
        dim: int,
        mult: LinearMap,
        unit: LinearMap,
        comult: LinearMap,
        counit: LinearMap,
        braiding: Optional[LinearMap] = None,
    ):
        Algebra(field, dim, mult, unit)  # shape checks
        Coalgebra(field, dim, comult, counit)
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        if braiding is None:
            braiding = flip(field, dim, dim)
        if braiding.rows != dim * dim or braiding.cols != dim * dim:
            raise DimensionMismatch("braiding must be dim^2 x dim^2")
        self.braiding = braiding

    def algebra(self) -> Algebra:
        return Algebra(self.field, self.dim, self.mult, self.unit)

    def coalgebra(self) -> Coalgebra:
        return Coalgebra(self.field, self.dim, self.comult, self.counit)

    def __repr__(self):
        return f"Bialgebra(dim {self.dim} over {self.field})"


def _slots(obj):
    """SlotMaps for whichever structure maps obj carries."""
    n = obj.dim
    out = {}
    if hasattr(obj, "comult"):
        out["D"] = SlotMap(obj.comult, (n,), (n, n))
        out["e"] = SlotMap(obj.counit, (n,), ())
    if hasattr(obj, "mult"):
        out["m"] = SlotMap(obj.mult, (n, n), (n,))
        out["u"] = SlotMap(obj.unit, (), (n,))
    if hasattr(obj, "braiding"):
        out["c"] = SlotMap(obj.braiding, (n, n), (n, n))
    return out


def verify_coalgebra(c: Coalgebra) -> CheckReport:
    """Coassociativity and the two counit identities, exactly."""
    rep = CheckReport()
    s = _slots(c)
    n, p = c.dim, c.field.char
    D, e = s["D"], s["e"]
    _expect_chain(rep, "coassociativity", (n,), [(D, 0), (D, 0)], [(D, 0), (D, 1)], p)
    _expect_chain(rep, "left counit", (n,), [(D, 0), (e, 0)], [], p)
    _expect_chain(rep, "right counit", (n,), [(D, 0), (e, 1)], [], p)
    return rep


def verify_algebra(a: Algebra) -> CheckReport:
    """Associativity and the two unit identities, exactly."""
    rep = CheckReport()
    s = _slots(a)
    n, p = a.dim, a.field.char
    m, u = s["m"], s["u"]
    _expect_chain(rep, "associativity", (n, n, n), [(m, 0), (m, 0)], [(m, 1), (m, 0)], p)
    _expect_chain(rep, "left unit", (n,), [(u, 0), (m, 0)], [], p)
    _expect_chain(rep, "right unit", (n,), [(u, 1), (m, 0)], [], p)
    return rep


def verify_braiding(e: Bialgebra) -> CheckReport:
    """Invertibility, the braid equation, and compatibility with m, u, Delta, eps."""
    rep = CheckReport()
    s = _slots(e)
    n, p = e.dim, e.field.char
    m, u, D, eps, c = s["m"], s["u"], s["D"], s["e"], s["c"]
    inv = solve(e.braiding, LinearMap.identity(e.field, n * n))
    rep.record(
        "braiding invertible",
        inv is not None and e.braiding @ inv == LinearMap.identity(e.field, n * n),
    )
    _expect_chain(rep, "braid equation", (n, n, n), [(c, 0), (c, 1), (c, 0)], [(c, 1), (c, 0), (c, 1)], p)
    _expect_chain(rep, "braiding vs mult left", (n, n, n), [(m, 0), (c, 0)], [(c, 1), (c, 0), (m, 1)], p)
    _expect_chain(rep, "braiding vs mult right", (n, n, n), [(m, 1), (c, 0)], [(c, 0), (c, 1), (m, 0)], p)
    _expect_chain(rep, "braiding vs comult left", (n, n), [(c, 0), (D, 1)], [(D, 0), (c, 1), (c, 0)], p)
    _expect_chain(rep, "braiding vs comult right", (n, n), [(c, 0), (D, 0)], [(D, 1), (c, 0), (c, 1)], p)
    _expect_chain(rep, "braiding vs unit left", (n,), [(u, 0), (c, 0)], [(u, 1)], p)
    _expect_chain(rep, "braiding vs unit right", (n,), [(u, 1), (c, 0)], [(u, 0)], p)
    _expect_chain(rep, "braiding vs counit left", (n, n), [(c, 0), (eps, 0)], [(eps, 1)], p)
    _expect_chain(rep, "braiding vs counit right", (n, n), [(c, 0), (eps, 1)], [(eps, 0)], p)
    return rep


def verify_bialgebra(e: Bialgebra) -> CheckReport:
    """The full axiom suite: algebra, coalgebra, braiding, compatibilities."""
    rep = CheckReport()
    rep.merge(verify_algebra(e.algebra()))
    rep.merge(verify_coalgebra(e.coalgebra()))
    rep.merge(verify_braiding(e))
    s = _slots(e)
    n, p = e.dim, e.field.char
    m, u, D, eps, c = s["m"], s["u"], s["D"], s["e"], s["c"]
    _expect_chain(
        rep,
        "comult vs mult",
        (n, n),
        [(m, 0), (D, 0)],
        [(D, 0), (D, 2), (c, 1), (m, 0), (m, 1)],
        p,
    )
    _expect_chain(rep, "comult vs unit", (), [(u, 0), (D, 0)], [(u, 0), (u, 0)], p)
    _expect_chain(rep, "counit vs mult", (n, n), [(m, 0), (eps, 0)], [(eps, 0), (eps, 0)], p)
    _expect_chain(rep, "counit vs unit", (), [(u, 0), (eps, 0)], [], p)
    return rep


def verify_morphism(f: LinearMap, src: Bialgebra, dst: Bialgebra, kind: str = "bialgebra") -> CheckReport:
    """Does f: src -> dst commute with the selected structure maps?"""
    if f.cols != src.dim or f.rows != dst.dim:
        raise DimensionMismatch("morphism shape mismatch")
    if kind not in ("algebra", "coalgebra", "bialgebra"):
        raise ValueError(f"unknown morphism kind {kind!r}")
    rep = CheckReport()
    ff = tensor_map(f, f)
    if kind in ("algebra", "bialgebra"):
        _expect(rep, "respects mult", f @ src.mult, dst.mult @ ff)
        _expect(rep, "respects unit", f @ src.unit, dst.unit)
    if kind in ("coalgebra", "bialgebra"):
        _expect(rep, "respects comult", dst.comult @ f, ff @ src.comult)
        _expect(rep, "respects counit", dst.counit @ f, src.counit)
    if kind == "bialgebra":
        _expect(rep, "respects braiding", dst.braiding @ ff, ff @ src.braiding)
    return rep


def dualize(e: Bialgebra) -> Bialgebra:
    """The dual bialgebra on the dual basis: transpose every structure map."""
    return Bialgebra(
        e.field,
        e.dim,
        mult=e.comult.transpose(),
        unit=e.counit.transpose(),
        comult=e.mult.transpose(),
        counit=e.unit.transpose(),
        braiding=e.braiding.transpose(),
    )


def is_injective(f: LinearMap) -> bool:
    return kernel(f).dim == 0


def is_surjective(f: LinearMap) -> bool:
    return f.rank() == f.rows
