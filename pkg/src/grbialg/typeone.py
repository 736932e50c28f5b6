"""Relative tensor/cotensor powers, the canonical degree maps, and the
four-way equivalence checkers.

On the filtration side of a subbialgebra B of E, the n-th canonical map
phi_n: (B^2)^(x_B n) -> B^(n+1) is built twice, by the degree recursion
through the induced multiplications and by the direct formula as the
iterated product in E, and the two constructions must agree entrywise.
Dually psi_n: E/I^(n+1) -> (E/I^2)^(box_B n) on the quotient side.  The
equivalence checkers evaluate four independent characterizations of the
same property and assert their agreement; a disagreement is a theorem
violation and raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .coalg import Bialgebra
from .errors import (
    ActionAxiomFailure,
    AgreementFailure,
    CoactionAxiomFailure,
    ConstructionMismatch,
    CorestrictFailure,
    DimensionMismatch,
    NotSubbialgebra,
)
from .filtration import (
    PowerTower,
    WedgeTower,
    ideal_product,
    power_tower,
    predicates,
    wedge,
    wedge_tower,
)
from .graded import (
    GradedAlgebra,
    GradedBialgebra,
    GradedCoalgebra,
    component_subspace,
    graded_bialgebra_grB,
    graded_bialgebra_grI,
    is_strongly_graded_algebra,
    is_strongly_graded_coalgebra,
    to_algebra,
    to_coalgebra,
    tower_graded_algebra,
    wedge_multiplication,
)
from .linalg import (
    LinearMap,
    Subspace,
    corestrict,
    direct_sum,
    image,
    kernel,
    quotient_with_section,
    solve,
    tensor_map,
)

MAX_DEGREE_CAP = 8


# -- bimodules and relative tensor powers ----------------------------------------


@dataclass
class Bimodule:
    """A two-sided module over a small algebra, in explicit coordinates."""

    base_dim: int
    carrier: int
    left: LinearMap   # B (x) V -> V
    right: LinearMap  # V (x) B -> V


@dataclass
class Bicomodule:
    """A two-sided comodule over a small coalgebra, in explicit coordinates."""

    base_dim: int
    carrier: int
    left: LinearMap   # V -> B (x) V
    right: LinearMap  # V -> V (x) B


def verify_bimodule(m: Bimodule, base_mult: LinearMap, base_unit: LinearMap):
    f = m.left.field
    d, v = m.base_dim, m.carrier
    iv, ib = LinearMap.identity(f, v), LinearMap.identity(f, d)
    checks = [
        ("left action associativity", m.left @ tensor_map(base_mult, iv), m.left @ tensor_map(ib, m.left)),
        ("left action unit", m.left @ tensor_map(base_unit, iv), iv),
        ("right action associativity", m.right @ tensor_map(iv, base_mult), m.right @ tensor_map(m.right, ib)),
        ("right action unit", m.right @ tensor_map(iv, base_unit), iv),
        ("actions commute", m.left @ tensor_map(ib, m.right), m.right @ tensor_map(m.left, ib)),
    ]
    for name, lhs, rhs in checks:
        if lhs != rhs:
            raise ActionAxiomFailure(name)


def verify_bicomodule(m: Bicomodule, base_comult: LinearMap, base_counit: LinearMap):
    f = m.left.field
    d, v = m.base_dim, m.carrier
    iv, ib = LinearMap.identity(f, v), LinearMap.identity(f, d)
    checks = [
        ("left coaction coassociativity", tensor_map(base_comult, iv) @ m.left, tensor_map(ib, m.left) @ m.left),
        ("left coaction counit", tensor_map(base_counit, iv) @ m.left, iv),
        ("right coaction coassociativity", tensor_map(iv, base_comult) @ m.right, tensor_map(m.right, ib) @ m.right),
        ("right coaction counit", tensor_map(iv, base_counit) @ m.right, iv),
        ("coactions commute", tensor_map(ib, m.right) @ m.left, tensor_map(m.left, ib) @ m.right),
    ]
    for name, lhs, rhs in checks:
        if lhs != rhs:
            raise CoactionAxiomFailure(name)


@dataclass
class TensorStep:
    """One coequalizer step V (x)_B W with its projection and section."""

    module: Bimodule
    chi: LinearMap
    sect: LinearMap
    relations: Subspace


def tensor_over_B(v: Bimodule, w: Bimodule) -> TensorStep:
    """V (x)_B W as the quotient of V (x) W by the middle-action relations."""
    f = v.left.field
    iv = LinearMap.identity(f, v.carrier)
    iw = LinearMap.identity(f, w.carrier)
    rel = tensor_map(v.right, iw) - tensor_map(iv, w.left)
    relations = image(rel)
    q = quotient_with_section(relations)
    chi, sect = q.proj, q.sect
    ib = LinearMap.identity(f, v.base_dim)
    left = chi @ tensor_map(v.left, iw) @ tensor_map(ib, sect)
    if left @ tensor_map(ib, chi) != chi @ tensor_map(v.left, iw):
        raise ActionAxiomFailure("left action does not descend to the tensor product")
    right_ = chi @ tensor_map(iv, w.right) @ tensor_map(sect, ib)
    if right_ @ tensor_map(chi, ib) != chi @ tensor_map(iv, w.right):
        raise ActionAxiomFailure("right action does not descend to the tensor product")
    return TensorStep(
        module=Bimodule(v.base_dim, q.dim, left, right_), chi=chi, sect=sect, relations=relations
    )


@dataclass
class CotensorStep:
    """One equalizer step V box_B W with its inclusion."""

    comodule: Bicomodule
    zeta: LinearMap
    carrier: Subspace


def cotensor_over_B(v: Bicomodule, w: Bicomodule) -> CotensorStep:
    """V box_B W as the kernel of the two middle coactions' difference."""
    f = v.left.field
    iv = LinearMap.identity(f, v.carrier)
    iw = LinearMap.identity(f, w.carrier)
    rel = tensor_map(v.right, iw) - tensor_map(iv, w.left)
    carrier = kernel(rel)
    zeta = carrier.basis
    ib = LinearMap.identity(f, v.base_dim)
    left = solve(tensor_map(ib, zeta), tensor_map(v.left, iw) @ zeta)
    right_ = solve(tensor_map(zeta, ib), tensor_map(iv, w.right) @ zeta)
    if left is None or right_ is None:
        raise CoactionAxiomFailure("coactions do not corestrict to the cotensor product")
    return CotensorStep(
        comodule=Bicomodule(v.base_dim, carrier.dim, left, right_), zeta=zeta, carrier=carrier
    )


@dataclass
class RelativeTensorPower:
    """Iterated coequalizer powers M^(x_B k) with cumulative projections."""

    modules: list      # modules[k] = M^(x_B k) as a Bimodule, k >= 1
    chis: list         # chis[k]: modules[k-1] (x) M -> modules[k], k >= 2
    sects: list
    cum_proj: list     # cum_proj[k]: M^(x k) -> modules[k]
    cum_sect: list


def relative_tensor_powers(m: Bimodule, n: int) -> RelativeTensorPower:
    f = m.left.field
    ident = LinearMap.identity(f, m.carrier)
    modules = {1: m}
    chis, sects = {}, {}
    cum_proj = {1: ident}
    cum_sect = {1: ident}
    for k in range(2, n + 1):
        step = tensor_over_B(modules[k - 1], m)
        modules[k] = step.module
        chis[k] = step.chi
        sects[k] = step.sect
        cum_proj[k] = step.chi @ tensor_map(cum_proj[k - 1], ident)
        cum_sect[k] = tensor_map(cum_sect[k - 1], ident) @ step.sect
    return RelativeTensorPower(modules, chis, sects, cum_proj, cum_sect)


@dataclass
class RelativeCotensorPower:
    """Iterated equalizer powers M^(box_B k) with cumulative inclusions."""

    comodules: list
    zetas: list        # zetas[k]: comodules[k] -> comodules[k-1] (x) M
    cum_zeta: list     # cum_zeta[k]: comodules[k] -> M^(x k)


def relative_cotensor_powers(m: Bicomodule, n: int) -> RelativeCotensorPower:
    f = m.left.field
    ident = LinearMap.identity(f, m.carrier)
    comodules = {1: m}
    zetas = {}
    cum_zeta = {1: ident}
    for k in range(2, n + 1):
        step = cotensor_over_B(comodules[k - 1], m)
        comodules[k] = step.comodule
        zetas[k] = step.zeta
        cum_zeta[k] = tensor_map(cum_zeta[k - 1], ident) @ step.zeta
    return RelativeCotensorPower(comodules, zetas, cum_zeta)


# -- the canonical degree maps ------------------------------------------------------


@dataclass
class PhiFamily:
    """phi_n: (B^2)^(x_B n) -> B^(n+1) in tower coordinates, per degree."""

    maps: dict              # n -> LinearMap
    epi: dict               # n -> bool
    powers: RelativeTensorPower
    tower: WedgeTower


def phi_components(e: Bialgebra, tower: WedgeTower, max_degree: int) -> PhiFamily:
    """Both constructions of every phi_n, cross-checked entrywise.

    The recursion chains through the induced multiplication of the tower;
    the direct formula corestricts the iterated product of E.  Any
    discrepancy raises ConstructionMismatch.
    """
    if tower.degree < max_degree + 1:
        raise DimensionMismatch("tower too short for phi family")
    f = e.field
    k1 = tower.power(1).dim
    k2 = tower.power(2).dim
    m_b = wedge_multiplication(e, tower, 0, 0)
    u_b = corestrict(e.unit, tower.power(1))
    module = Bimodule(
        base_dim=k1,
        carrier=k2,
        left=wedge_multiplication(e, tower, 0, 1),
        right=wedge_multiplication(e, tower, 1, 0),
    )
    verify_bimodule(module, m_b, u_b)
    powers = relative_tensor_powers(module, max_degree)
    ident_m = LinearMap.identity(f, k2)

    maps = {0: LinearMap.identity(f, k1), 1: ident_m}
    epi = {0: True, 1: True}
    big = {1: tower.power(2).basis}  # iterated product M^(x n) -> E
    for n in range(2, max_degree + 1):
        rec_rhs = wedge_multiplication(e, tower, n - 1, 1) @ tensor_map(maps[n - 1], ident_m)
        phi_n = rec_rhs @ powers.sects[n]
        if phi_n @ powers.chis[n] != rec_rhs:
            raise ConstructionMismatch(f"phi_{n} recursion does not descend")
        big[n] = e.mult @ tensor_map(big[n - 1], tower.power(2).basis)
        direct = corestrict(big[n] @ powers.cum_sect[n], tower.power(n + 1))
        if tower.power(n + 1).basis @ direct @ powers.cum_proj[n] != big[n]:
            raise ConstructionMismatch(f"phi_{n} direct formula does not factor")
        if direct != phi_n:
            raise ConstructionMismatch(f"phi_{n}: recursion and direct formula disagree")
        maps[n] = phi_n
        epi[n] = phi_n.rank() == tower.power(n + 1).dim
    return PhiFamily(maps=maps, epi=epi, powers=powers, tower=tower)


@dataclass
class PsiFamily:
    """psi_n: E/I^(n+1) -> (E/I^2)^(box_B n) in quotient coordinates."""

    maps: dict
    mono: dict
    powers: RelativeCotensorPower
    tower: PowerTower


def psi_components(e: Bialgebra, tower: PowerTower, max_degree: int) -> PsiFamily:
    """Both constructions of every psi_n, cross-checked entrywise."""
    from .graded import quotient_comultiplication

    if tower.degree < max_degree + 1:
        raise DimensionMismatch("tower too short for psi family")
    f = e.field
    quots = [quotient_with_section(tower.power(m)) for m in range(max_degree + 2)]
    q1, q2 = quots[1], quots[2]
    comodule = Bicomodule(
        base_dim=q1.dim,
        carrier=q2.dim,
        left=quotient_comultiplication(e, tower, 0, 1),
        right=quotient_comultiplication(e, tower, 1, 0),
    )
    delta_b = quotient_comultiplication(e, tower, 0, 0)
    eps_b = e.counit @ q1.sect
    verify_bicomodule(comodule, delta_b, eps_b)
    powers = relative_cotensor_powers(comodule, max_degree)
    ident_m = LinearMap.identity(f, q2.dim)

    maps = {0: LinearMap.identity(f, q1.dim), 1: ident_m}
    mono = {0: True, 1: True}
    big = {1: q2.proj}  # iterated projected comultiplication E -> M^(x n)
    for n in range(2, max_degree + 1):
        rec_rhs = tensor_map(maps[n - 1], ident_m) @ quotient_comultiplication(e, tower, n - 1, 1)
        psi_n = solve(powers.zetas[n], rec_rhs)
        if psi_n is None:
            raise ConstructionMismatch(f"psi_{n} recursion does not land in the cotensor power")
        big[n] = tensor_map(big[n - 1], q2.proj) @ e.comult
        lifted = big[n] @ quots[n + 1].sect
        if lifted @ quots[n + 1].proj != big[n]:
            raise ConstructionMismatch(f"psi_{n} direct formula does not kill I^{n + 1}")
        direct = solve(powers.cum_zeta[n], lifted)
        if direct is None:
            raise ConstructionMismatch(f"psi_{n} direct formula escapes the cotensor power")
        if direct != psi_n:
            raise ConstructionMismatch(f"psi_{n}: recursion and direct formula disagree")
        maps[n] = psi_n
        mono[n] = kernel(psi_n).dim == 0
    return PsiFamily(maps=maps, mono=mono, powers=powers, tower=tower)


# -- the same maps internally to a graded object --------------------------------------


def phi_graded(g: GradedAlgebra, max_degree: Optional[int] = None):
    """phi_t of the graded algebra itself: (gr^1)^(x_{gr^0} t) -> gr^t.

    Returns (maps, epi flags, powers).
    """
    n = g.degree if max_degree is None else min(max_degree, g.degree)
    f = g.unit0.field
    if n == 0:
        return {0: LinearMap.identity(f, g.dims[0])}, {0: True}, None
    module = Bimodule(
        base_dim=g.dims[0], carrier=g.dims[1],
        left=g.mults[(0, 1)], right=g.mults[(1, 0)],
    )
    verify_bimodule(module, g.mults[(0, 0)], g.unit0)
    powers = relative_tensor_powers(module, n)
    ident_m = LinearMap.identity(f, module.carrier)
    maps = {0: LinearMap.identity(f, g.dims[0]), 1: ident_m}
    epi = {0: True, 1: True}
    comp = {1: ident_m}  # (gr^1)^(x t) -> gr^t by left-associated products
    for t in range(2, n + 1):
        comp[t] = g.mults[(t - 1, 1)] @ tensor_map(comp[t - 1], ident_m)
        phi_t = comp[t] @ powers.cum_sect[t]
        if phi_t @ powers.cum_proj[t] != comp[t]:
            raise ConstructionMismatch(f"graded phi_{t} does not descend")
        maps[t] = phi_t
        epi[t] = phi_t.rank() == g.dims[t]
    return maps, epi, powers


def psi_graded(g: GradedCoalgebra, max_degree: Optional[int] = None):
    """psi_m of the graded coalgebra itself: gr^m -> (gr^1)^(box_{gr^0} m).

    Returns (maps, mono flags, powers).
    """
    n = g.degree if max_degree is None else min(max_degree, g.degree)
    f = g.counit0.field
    if n == 0:
        return {0: LinearMap.identity(f, g.dims[0])}, {0: True}, None
    comodule = Bicomodule(
        base_dim=g.dims[0], carrier=g.dims[1],
        left=g.comults[(0, 1)], right=g.comults[(1, 0)],
    )
    verify_bicomodule(comodule, g.comults[(0, 0)], g.counit0)
    powers = relative_cotensor_powers(comodule, n)
    ident_m = LinearMap.identity(f, comodule.carrier)
    maps = {0: LinearMap.identity(f, g.dims[0]), 1: ident_m}
    mono = {0: True, 1: True}
    comp = {1: ident_m}  # gr^m -> (gr^1)^(x m) by iterated local comults
    for t in range(2, n + 1):
        comp[t] = tensor_map(comp[t - 1], ident_m) @ g.comults[(t - 1, 1)]
        psi_t = solve(powers.cum_zeta[t], comp[t])
        if psi_t is None:
            raise CorestrictFailure(f"graded psi_{t} escapes the cotensor power")
        maps[t] = psi_t
        mono[t] = kernel(psi_t).dim == 0
    return maps, mono, powers


# -- type-one reports -------------------------------------------------------------------


@dataclass
class TypeOneReport:
    """The four equivalent conditions with per-degree witnesses."""

    side: str
    max_degree: int
    cond1: bool
    cond2: bool
    cond3: bool
    cond4: bool
    agreement: bool
    tower_dims: list
    gr_dims: list
    witnesses: dict = dc_field(default_factory=dict)
    detail: dict = dc_field(default_factory=dict)

    @property
    def conditions(self):
        return (self.cond1, self.cond2, self.cond3, self.cond4)


def _check_degree(max_degree: int):
    if not (1 <= max_degree <= MAX_DEGREE_CAP):
        raise ValueError(f"max degree must be within 1..{MAX_DEGREE_CAP}")


def typeone_check_sub(e: Bialgebra, b: Subspace, max_degree: int = 4) -> TypeOneReport:
    """Evaluate the four characterizations for a subbialgebra filtration.

    cond1: the graded object is generated in degrees 0, 1 (strongly graded
    coalgebra + all phi epi + all graded psi mono, each computed directly);
    cond2: gr is strongly graded as an algebra; cond3: the wedge-power tower
    is strongly graded; cond4: B^(n+1) equals the n-fold product of B^2.
    Raises AgreementFailure when the four disagree.
    """
    _check_degree(max_degree)
    flags = predicates(b, e)
    if not flags.is_subbialgebra:
        raise NotSubbialgebra("type-one check needs a subbialgebra")
    tower = wedge_tower(b, e, max_degree + 1)
    gr, wit = graded_bialgebra_grB(e, b, max_degree, tower)
    witnesses = {}

    ok2, bad2 = is_strongly_graded_algebra(gr.algebra_part(), max_degree)
    if bad2 is not None:
        witnesses["cond2"] = {"pair": bad2}

    tower_alg = tower_graded_algebra(e, tower, max_degree)
    ok3, bad3 = is_strongly_graded_algebra(tower_alg, max_degree)
    if bad3 is not None:
        witnesses["cond3"] = {"pair": bad3}

    ok4 = True
    prods = {1: tower.power(2)}
    for n in range(2, max_degree + 1):
        prods[n] = image(e.mult @ tensor_map(prods[n - 1].basis, tower.power(2).basis))
        if ok4 and prods[n] != tower.power(n + 1):
            ok4 = False
            witnesses["cond4"] = {
                "degree": n,
                "product_basis": prods[n].basis,
                "wedge_basis": tower.power(n + 1).basis,
            }

    strongly_co, _ = is_strongly_graded_coalgebra(gr.coalgebra_part(), max_degree)
    phis = phi_components(e, tower, max_degree)
    psi_maps, psi_mono, _ = psi_graded(gr.coalgebra_part(), max_degree)
    ok1 = strongly_co and all(phis.epi.values()) and all(psi_mono.values())
    if not ok1:
        witnesses["cond1"] = {
            "strongly_graded_coalgebra": strongly_co,
            "phi_epi": dict(phis.epi),
            "graded_psi_mono": dict(psi_mono),
        }

    report = TypeOneReport(
        side="sub",
        max_degree=max_degree,
        cond1=ok1,
        cond2=ok2,
        cond3=ok3,
        cond4=ok4,
        agreement=(ok1 == ok2 == ok3 == ok4),
        tower_dims=tower.dims(),
        gr_dims=list(gr.dims),
        witnesses=witnesses,
        detail={"phi_epi": dict(phis.epi), "graded_psi_mono": dict(psi_mono),
                "product_dims": {n: p.dim for n, p in prods.items()}},
    )
    if not report.agreement:
        raise AgreementFailure(f"type-one conditions disagree: {report.conditions}", report)
    return report


def typeone_check_quot(e: Bialgebra, pi: LinearMap, max_degree: int = 4) -> TypeOneReport:
    """Evaluate the four characterizations for a quotient-bialgebra filtration.

    cond1: strongly graded algebra + all psi mono + all graded phi epi;
    cond2: gr strongly graded as a coalgebra; cond3: the quotient tower is
    strongly graded as a coalgebra; cond4: I^(n+1) equals the n-fold wedge
    power of I^2.  Raises AgreementFailure when the four disagree.
    """
    _check_degree(max_degree)
    i = kernel(pi)
    tower = power_tower(i, e, max_degree + 1)
    gr, wit, b = graded_bialgebra_grI(e, pi, max_degree, tower)
    witnesses = {}

    ok2, bad2 = is_strongly_graded_coalgebra(gr.coalgebra_part(), max_degree)
    if bad2 is not None:
        witnesses["cond2"] = {"pair": bad2}

    ok3, bad3 = True, None
    for a in range(max_degree + 1):
        for c in range(max_degree + 1 - a):
            if kernel(wit.quot_comults[(a, c)]).dim != 0:
                ok3, bad3 = False, (a, c)
                break
        if not ok3:
            break
    if bad3 is not None:
        witnesses["cond3"] = {"pair": bad3}

    ok4 = True
    wedges = {1: tower.power(2)}
    for n in range(2, max_degree + 1):
        wedges[n] = wedge(wedges[n - 1], tower.power(2), e)
        if ok4 and wedges[n] != tower.power(n + 1):
            ok4 = False
            witnesses["cond4"] = {
                "degree": n,
                "wedge_basis": wedges[n].basis,
                "power_basis": tower.power(n + 1).basis,
            }

    strongly_alg, _ = is_strongly_graded_algebra(gr.algebra_part(), max_degree)
    psis = psi_components(e, tower, max_degree)
    phi_maps, phi_epi, _ = phi_graded(gr.algebra_part(), max_degree)
    ok1 = strongly_alg and all(psis.mono.values()) and all(phi_epi.values())
    if not ok1:
        witnesses["cond1"] = {
            "strongly_graded_algebra": strongly_alg,
            "psi_mono": dict(psis.mono),
            "graded_phi_epi": dict(phi_epi),
        }

    report = TypeOneReport(
        side="quot",
        max_degree=max_degree,
        cond1=ok1,
        cond2=ok2,
        cond3=ok3,
        cond4=ok4,
        agreement=(ok1 == ok2 == ok3 == ok4),
        tower_dims=tower.dims(),
        gr_dims=list(gr.dims),
        witnesses=witnesses,
        detail={"psi_mono": dict(psis.mono), "graded_phi_epi": dict(phi_epi),
                "wedge_dims": {n: w.dim for n, w in wedges.items()}},
    )
    if not report.agreement:
        raise AgreementFailure(f"type-one conditions disagree: {report.conditions}", report)
    return report


# -- universal-map assertions -------------------------------------------------------------


@dataclass
class UniversalReport:
    side: str
    max_degree: int
    a: bool
    a_prime: bool
    b: bool
    c: bool
    d: bool
    e: bool

    @property
    def all_agree(self):
        return len({self.a, self.a_prime, self.b, self.c, self.d, self.e}) == 1


def universal_map_assertions(g, side: str, max_degree: Optional[int] = None) -> UniversalReport:
    """Evaluate the five equivalent reformulations of strong gradedness.

    For a graded coalgebra: (a) every local comultiplication injective,
    (a') the (a,1) family injective, (b) every degree map into the cotensor
    power injective, (c) their direct sum injective, (d) the wedge powers of
    the degree-0 part computed inside the graded object recover the degree
    filtration, (e) the degree-2 instance of (d).  Dually for algebras.
    Raises AgreementFailure when the answers scatter.
    """
    n = g.degree if max_degree is None else min(max_degree, g.degree)
    if side == "coalgebra":
        a_val, _ = is_strongly_graded_coalgebra(g, n)
        a_prime = all(kernel(g.comults[(x, 1)]).dim == 0 for x in range(n))
        maps, mono, _ = psi_graded(g, n)
        b_val = all(mono.values())
        c_val = kernel(direct_sum([maps[t] for t in sorted(maps)])).dim == 0
        host = to_coalgebra(g)
        base = component_subspace(g, [0])
        tw = wedge_tower(base, host, n)
        d_val = all(tw.power(k) == component_subspace(g, range(k)) for k in range(1, n + 1))
        e_val = tw.power(2) == component_subspace(g, range(2)) if n >= 2 else d_val
    elif side == "algebra":
        a_val, _ = is_strongly_graded_algebra(g, n)
        a_prime = all(g.mults[(x, 1)].rank() == g.dims[x + 1] for x in range(n))
        maps, epi, _ = phi_graded(g, n)
        b_val = all(epi.values())
        summed = direct_sum([maps[t] for t in sorted(maps)])
        c_val = summed.rank() == sum(g.dims[t] for t in sorted(maps))
        host = to_algebra(g)
        rad = component_subspace(g, range(1, n + 1))
        powers = {1: rad}
        for k in range(2, n + 1):
            powers[k] = ideal_product(powers[k - 1], rad, host)
        d_val = all(powers[k] == component_subspace(g, range(k, n + 1)) for k in range(1, n + 1))
        e_val = powers[2] == component_subspace(g, range(2, n + 1)) if n >= 2 else d_val
    else:
        raise ValueError(f"unknown side {side!r}")
    report = UniversalReport(side, n, a_val, a_prime, b_val, c_val, d_val, e_val)
    if not report.all_agree:
        raise AgreementFailure(f"universal-map assertions disagree: {report}", report)
    return report
