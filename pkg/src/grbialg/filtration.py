"""Wedge products and powers, ideal products and powers, subobject predicates,
and the exact-sequence witnesses connecting them.

The wedge of two subspaces C, D of a coalgebra E is the kernel of
(p_C (x) p_D) . Delta, computed literally for arbitrary subspaces; callers
that need the coalgebra-theoretic properties (ascending towers, towers of
subcoalgebras) should gate on ``predicates``.  Ideal products are images of
the restricted multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DimensionMismatch, ExactnessFailure
from .linalg import (
    LinearMap,
    Subspace,
    block_codiag,
    block_diag,
    corestrict,
    image,
    kernel,
    quotient_with_section,
    right_inverse,
    tensor_map,
    tensor_subspace,
)


def wedge(c: Subspace, d: Subspace, e) -> Subspace:
    """C wedge D inside the coalgebra e: ker((p_C (x) p_D) . Delta)."""
    if c.ambient != e.dim or d.ambient != e.dim:
        raise DimensionMismatch("wedge: ambient mismatch")
    pc = quotient_with_section(c).proj
    pd = quotient_with_section(d).proj
    return kernel(tensor_map(pc, pd) @ e.comult)


def wedge_multi(c: Subspace, e, n: int) -> Subspace:
    """The n-fold wedge power with the convention C^(wedge 1) = C.

    Computed as left-iterated binary wedges; for arbitrary subspaces this
    agrees with ker((p_C)^(x n) . Delta^(n-1)).
    """
    if n < 1:
        raise ValueError("wedge_multi needs n >= 1")
    power = c
    for _ in range(n - 1):
        power = wedge(power, c, e)
    return power


@dataclass
class WedgeTower:
    """Ascending filtration [C^0 = 0, C^1, ..., C^N] of wedge powers."""

    host: object
    base: Subspace
    powers: list
    stabilized_at: Optional[int]

    def power(self, n: int) -> Subspace:
        if n < len(self.powers):
            return self.powers[n]
        if self.stabilized_at is not None:
            return self.powers[-1]
        raise IndexError(f"tower of degree {len(self.powers) - 1} has no level {n}")

    @property
    def degree(self) -> int:
        return len(self.powers) - 1

    def dims(self):
        return [p.dim for p in self.powers]


@dataclass
class PowerTower:
    """Descending filtration [I^0 = A, I^1, ..., I^N] of ideal powers."""

    host: object
    base: Subspace
    powers: list
    stabilized_at: Optional[int]

    def power(self, n: int) -> Subspace:
        if n < len(self.powers):
            return self.powers[n]
        if self.stabilized_at is not None:
            return self.powers[-1]
        raise IndexError(f"tower of degree {len(self.powers) - 1} has no level {n}")

    @property
    def degree(self) -> int:
        return len(self.powers) - 1

    def dims(self):
        return [p.dim for p in self.powers]


def wedge_tower(c: Subspace, e, max_degree: int) -> WedgeTower:
    """Iterated wedge powers of c in e with stabilization detection.

    The list always has max_degree + 1 entries; once two consecutive powers
    agree the value is repeated (the filtration is stationary from there on).
    """
    powers = [Subspace.zero(c.field, e.dim)]
    stabilized = None
    for n in range(1, max_degree + 1):
        if stabilized is not None:
            powers.append(powers[-1])
            continue
        nxt = wedge(powers[-1], c, e)
        if nxt == powers[-1]:
            stabilized = n - 1
            powers.append(nxt)
        else:
            powers.append(nxt)
    if stabilized is None and max_degree >= 1 and wedge(powers[-1], c, e) == powers[-1]:
        stabilized = max_degree
    return WedgeTower(host=e, base=c, powers=powers, stabilized_at=stabilized)


def ideal_product(i: Subspace, j: Subspace, a) -> Subspace:
    """The product IJ = image of m restricted to I (x) J."""
    if i.ambient != a.dim or j.ambient != a.dim:
        raise DimensionMismatch("ideal_product: ambient mismatch")
    return image(a.mult @ tensor_map(i.basis, j.basis))


def power_tower(i: Subspace, a, max_degree: int) -> PowerTower:
    """Iterated products [I^0 = A, I^1 = A I, I^2, ...] with stabilization."""
    powers = [Subspace.full(i.field, a.dim)]
    stabilized = None
    for n in range(1, max_degree + 1):
        if stabilized is not None:
            powers.append(powers[-1])
            continue
        nxt = ideal_product(powers[-1], i, a)
        if nxt == powers[-1]:
            stabilized = n - 1
        powers.append(nxt)
    if stabilized is None and max_degree >= 1 and ideal_product(powers[-1], i, a) == powers[-1]:
        stabilized = max_degree
    return PowerTower(host=a, base=i, powers=powers, stabilized_at=stabilized)


@dataclass
class SubspaceFlags:
    is_subcoalgebra: bool
    is_ideal: bool
    is_subbialgebra: bool
    is_coideal: bool


def predicates(s: Subspace, e) -> SubspaceFlags:
    """Subcoalgebra / ideal / subbialgebra / coideal tests for s inside e."""
    if s.ambient != e.dim:
        raise DimensionMismatch("predicates: ambient mismatch")
    field = s.field
    full = Subspace.full(field, e.dim)

    delta_s = image(e.comult @ s.basis)
    sub_co = tensor_subspace(s, s).contains(delta_s)

    left = image(e.mult @ tensor_map(LinearMap.identity(field, e.dim), s.basis))
    right_ = image(e.mult @ tensor_map(s.basis, LinearMap.identity(field, e.dim)))
    ideal = s.contains(left) and s.contains(right_)

    sub_alg = s.contains(image(e.mult @ tensor_map(s.basis, s.basis))) and s.contains_vector(
        e.unit.column(0)
    )
    sub_bi = sub_co and sub_alg

    coideal_space = tensor_subspace(s, full).sum(tensor_subspace(full, s))
    coideal = coideal_space.contains(delta_s) and (e.counit @ s.basis).is_zero()

    return SubspaceFlags(
        is_subcoalgebra=sub_co,
        is_ideal=ideal,
        is_subbialgebra=sub_bi,
        is_coideal=coideal,
    )


@dataclass
class SequenceWitness:
    """Exactness witness at degree n for a wedge tower.

    nabla is the codiagonal of the inclusions (i_a (x) i_b), a+b = n+1;
    delta_block the diagonal of the projections (p_a (x) p_b), a+b = n;
    beta includes the image of nabla, gamma corestricts nabla onto it, and
    alpha corestricts Delta . i_n so that Delta . i_n = beta . alpha and
    beta . gamma = nabla hold exactly.
    """

    degree: int
    nabla: LinearMap
    delta_block: LinearMap
    span: Subspace
    beta: LinearMap
    gamma: LinearMap
    alpha: LinearMap


def sweedler_sequence(tower: WedgeTower, n: int) -> SequenceWitness:
    """The exact-sequence witness for a wedge tower at degree n.

    Verifies image(nabla) = ker(delta_block) as canonical subspaces of
    E (x) E and builds the canonical factorizations through the image.
    """
    if tower.degree < n + 1:
        raise DimensionMismatch(f"tower degree {tower.degree} < n+1 = {n + 1}")
    e = tower.host
    blocks_in = [
        tensor_map(tower.power(a).basis, tower.power(n + 1 - a).basis) for a in range(n + 2)
    ]
    nabla = block_codiag(blocks_in)
    projs = [quotient_with_section(tower.power(a)).proj for a in range(n + 1)]
    blocks_out = [tensor_map(projs[a], projs[n - a]) for a in range(n + 1)]
    delta_block = block_diag(blocks_out)

    span = image(nabla)
    if span != kernel(delta_block):
        raise ExactnessFailure(f"image(nabla) != ker(delta) at degree {n}")
    beta = span.basis
    gamma = corestrict(nabla, span)
    alpha = corestrict(e.comult @ tower.power(n).basis, span)
    assert beta @ gamma == nabla
    assert beta @ alpha == e.comult @ tower.power(n).basis
    return SequenceWitness(
        degree=n,
        nabla=nabla,
        delta_block=delta_block,
        span=span,
        beta=beta,
        gamma=gamma,
        alpha=alpha,
    )


@dataclass
class QuotSequenceWitness:
    """Dual exactness witness at degree n for an ideal power tower.

    nabla is the codiagonal of (i_{I^a} (x) i_{I^b}), a+b = n; delta_block
    the diagonal of (p_{I^a} (x) p_{I^b}), a+b = n+1; beta includes the
    image of delta_block, gamma corestricts delta_block onto it, and alpha
    factors p_{I^n} . m through gamma: alpha . gamma = p_{I^n} . m.
    """

    degree: int
    nabla: LinearMap
    delta_block: LinearMap
    span: Subspace
    beta: LinearMap
    gamma: LinearMap
    alpha: LinearMap


def sweedler_sequence_quot(tower: PowerTower, n: int) -> QuotSequenceWitness:
    """The dualized exact-sequence witness for an ideal power tower."""
    if tower.degree < n + 1:
        raise DimensionMismatch(f"tower degree {tower.degree} < n+1 = {n + 1}")
    e = tower.host
    blocks_in = [tensor_map(tower.power(a).basis, tower.power(n - a).basis) for a in range(n + 1)]
    nabla = block_codiag(blocks_in)
    projs = [quotient_with_section(tower.power(a)).proj for a in range(n + 2)]
    blocks_out = [tensor_map(projs[a], projs[n + 1 - a]) for a in range(n + 2)]
    delta_block = block_diag(blocks_out)

    if image(nabla) != kernel(delta_block):
        raise ExactnessFailure(f"image(nabla) != ker(delta) at degree {n} (quot side)")
    span = image(delta_block)
    beta = span.basis
    gamma = corestrict(delta_block, span)
    proj_n = quotient_with_section(tower.power(n)).proj
    target = proj_n @ e.mult
    alpha = target @ right_inverse(gamma)
    if alpha @ gamma != target:
        raise ExactnessFailure(f"p_n . m does not factor through gamma at degree {n}")
    return QuotSequenceWitness(
        degree=n,
        nabla=nabla,
        delta_block=delta_block,
        span=span,
        beta=beta,
        gamma=gamma,
        alpha=alpha,
    )


def annihilator(s: Subspace) -> Subspace:
    """The annihilator of s in the dual coordinates: ker(basis^T)."""
    return kernel(s.basis.transpose())
