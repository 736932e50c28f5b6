"""Graded (co)algebras from local data and the associated graded constructions.

A graded coalgebra is stored as component dimensions [d_0..d_N] plus local
comultiplications Delta_{a,b}: d_{a+b} -> d_a (x) d_b for a+b <= N and a
degree-zero counit; dually for graded algebras.  The associated graded
objects gr of a filtration carry each component in the coordinates induced
by the stored quotient section, so reruns are bit-identical.

Truncation semantics: every identity is instantiated and checked for all
index tuples whose total degree fits inside the truncation; components the
filtration never reaches are zero spaces and empty matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .coalg import Algebra, Bialgebra, CheckReport, Coalgebra, verify_morphism
from .errors import (
    BraidingDoesNotDescend,
    CorestrictFailure,
    DimensionMismatch,
    FactorFailure,
    NotIdeal,
    NotQuotientMap,
    NotSubcoalgebra,
    NotSubbialgebra,
)
from .filtration import PowerTower, WedgeTower, power_tower, predicates, wedge_tower
from .linalg import (
    LinearMap,
    Subspace,
    corestrict,
    image,
    kernel,
    quotient_with_section,
    right_inverse,
    solve,
    tensor_map,
    tensor_subspace,
)


@dataclass
class GradedCoalgebra:
    """Components [d_0..d_N] with local comultiplications and degree-0 counit."""

    field: object
    dims: list
    comults: dict  # (a, b) -> LinearMap  d_a*d_b x d_{a+b}
    counit0: LinearMap

    @property
    def degree(self) -> int:
        return len(self.dims) - 1


@dataclass
class GradedAlgebra:
    """Components [d_0..d_N] with local multiplications and degree-0 unit."""

    field: object
    dims: list
    mults: dict  # (a, b) -> LinearMap  d_{a+b} x d_a*d_b
    unit0: LinearMap

    @property
    def degree(self) -> int:
        return len(self.dims) - 1


@dataclass
class GradedBialgebra:
    """A graded algebra and coalgebra on shared components plus braidings."""

    field: object
    dims: list
    mults: dict
    unit0: LinearMap
    comults: dict
    counit0: LinearMap
    braidings: dict  # (a, b) -> LinearMap  d_b*d_a x d_a*d_b

    @property
    def degree(self) -> int:
        return len(self.dims) - 1

    def coalgebra_part(self) -> GradedCoalgebra:
        return GradedCoalgebra(self.field, self.dims, self.comults, self.counit0)

    def algebra_part(self) -> GradedAlgebra:
        return GradedAlgebra(self.field, self.dims, self.mults, self.unit0)


@dataclass
class GradedWitness:
    """Coordinate data tying a graded object back to its filtration.

    lifts[n] embeds component n into the ambient space through the stored
    section; proj_next[n] is the coordinate projection W -> component and
    sect_next[n] its section; equots[m] presents the ambient quotient
    (E / W_m for the wedge side, E / I^m for the ideal side); ibars[n] is
    the induced monomorphism of component n into that quotient.
    """

    side: str
    tower: object
    proj_next: list
    sect_next: list
    lifts: list
    equots: list
    ibars: list
    wedge_mults: dict = dc_field(default_factory=dict)
    quot_comults: dict = dc_field(default_factory=dict)


# -- local-law verification ----------------------------------------------------


def verify_graded_coalgebra(g: GradedCoalgebra) -> CheckReport:
    """Local coassociativity and counit laws for all indices in range."""
    rep = CheckReport()
    n = g.degree
    ident = lambda d: LinearMap.identity(g.field, d)
    for a in range(n + 1):
        for b in range(n + 1 - a):
            for c in range(n + 1 - a - b):
                lhs = tensor_map(g.comults[(a, b)], ident(g.dims[c])) @ g.comults[(a + b, c)]
                rhs = tensor_map(ident(g.dims[a]), g.comults[(b, c)]) @ g.comults[(a, b + c)]
                if lhs != rhs:
                    rep.record(f"coassociativity ({a},{b},{c})", False, (a, b, c))
                    return rep
    rep.record("coassociativity (all triples)", True)
    for d in range(n + 1):
        left = tensor_map(g.counit0, ident(g.dims[d])) @ g.comults[(0, d)]
        right_ = tensor_map(ident(g.dims[d]), g.counit0) @ g.comults[(d, 0)]
        if left != ident(g.dims[d]) or right_ != ident(g.dims[d]):
            rep.record(f"counit law (degree {d})", False, (d,))
            return rep
    rep.record("counit laws (all degrees)", True)
    return rep


def verify_graded_algebra(g: GradedAlgebra) -> CheckReport:
    """Local associativity and unit laws for all indices in range."""
    rep = CheckReport()
    n = g.degree
    ident = lambda d: LinearMap.identity(g.field, d)
    for a in range(n + 1):
        for b in range(n + 1 - a):
            for c in range(n + 1 - a - b):
                lhs = g.mults[(a + b, c)] @ tensor_map(g.mults[(a, b)], ident(g.dims[c]))
                rhs = g.mults[(a, b + c)] @ tensor_map(ident(g.dims[a]), g.mults[(b, c)])
                if lhs != rhs:
                    rep.record(f"associativity ({a},{b},{c})", False, (a, b, c))
                    return rep
    rep.record("associativity (all triples)", True)
    for d in range(n + 1):
        left = g.mults[(0, d)] @ tensor_map(g.unit0, ident(g.dims[d]))
        right_ = g.mults[(d, 0)] @ tensor_map(ident(g.dims[d]), g.unit0)
        if left != ident(g.dims[d]) or right_ != ident(g.dims[d]):
            rep.record(f"unit law (degree {d})", False, (d,))
            return rep
    rep.record("unit laws (all degrees)", True)
    return rep


def is_strongly_graded_coalgebra(g: GradedCoalgebra, max_degree: Optional[int] = None):
    """Are all local comultiplications injective?  Returns (bool, first bad (i, j))."""
    n = g.degree if max_degree is None else min(max_degree, g.degree)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            if kernel(g.comults[(i, j)]).dim != 0:
                return False, (i, j)
    return True, None


def is_strongly_graded_algebra(g: GradedAlgebra, max_degree: Optional[int] = None):
    """Are all local multiplications surjective?  Returns (bool, first bad (i, j))."""
    n = g.degree if max_degree is None else min(max_degree, g.degree)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            if g.mults[(i, j)].rank() != g.dims[i + j]:
                return False, (i, j)
    return True, None


# -- associated graded constructions -------------------------------------------


def _is_subcoalgebra(c: Subspace, e) -> bool:
    return tensor_subspace(c, c).contains(image(e.comult @ c.basis))


def _is_ideal(i: Subspace, a) -> bool:
    ident = LinearMap.identity(i.field, a.dim)
    return i.contains(image(a.mult @ tensor_map(ident, i.basis))) and i.contains(
        image(a.mult @ tensor_map(i.basis, ident))
    )


def _component_data(field, chain):
    """Quotient coordinates for consecutive inclusions small = chain[n+1] of big = chain[n].

    chain[n] is the pair (big subspace, small subspace) at level n; returns
    per-level (proj, sect, lift) with lift = big.basis @ sect.
    """
    proj_next, sect_next, lifts = [], [], []
    for big, small in chain:
        inside = corestrict(small.basis, big)
        q = quotient_with_section(Subspace.from_columns(field, big.dim, inside.columns()))
        proj_next.append(q.proj)
        sect_next.append(q.sect)
        lifts.append(big.basis @ q.sect)
    return proj_next, sect_next, lifts


def associated_graded_coalgebra(c: Subspace, e, max_degree: int, tower: Optional[WedgeTower] = None):
    """gr of a coalgebra along the wedge filtration of a subcoalgebra.

    Component n is C^(n+1)/C^(n) in the coordinates of the stored section;
    the local comultiplication lifts through the section, applies Delta, maps
    into the quotient pair and corestricts onto the component inclusions.
    Returns (GradedCoalgebra, GradedWitness).
    """
    if not _is_subcoalgebra(c, e):
        raise NotSubcoalgebra("base of a wedge filtration must be a subcoalgebra")
    if tower is None:
        tower = wedge_tower(c, e, max_degree + 1)
    if tower.degree < max_degree + 1:
        raise DimensionMismatch("tower too short for requested degree")
    field = c.field
    chain = [(tower.power(n + 1), tower.power(n)) for n in range(max_degree + 1)]
    proj_next, sect_next, lifts = _component_data(field, chain)
    dims = [p.rows for p in proj_next]
    equots = [quotient_with_section(tower.power(m)) for m in range(max_degree + 2)]
    ibars = [equots[n].proj @ lifts[n] for n in range(max_degree + 1)]

    comults = {}
    for a in range(max_degree + 1):
        for b in range(max_degree + 1 - a):
            target = tensor_map(equots[a].proj, equots[b].proj) @ e.comult @ lifts[a + b]
            got = solve(tensor_map(ibars[a], ibars[b]), target)
            if got is None:
                raise CorestrictFailure(f"graded comultiplication ({a},{b}) does not corestrict")
            comults[(a, b)] = got
    counit0 = e.counit @ lifts[0]
    g = GradedCoalgebra(field, dims, comults, counit0)
    wit = GradedWitness(
        side="sub", tower=tower, proj_next=proj_next, sect_next=sect_next,
        lifts=lifts, equots=equots, ibars=ibars,
    )
    return g, wit


def associated_graded_algebra(i: Subspace, a, max_degree: int, tower: Optional[PowerTower] = None):
    """gr of an algebra along the power filtration of an ideal.

    Component n is I^n/I^(n+1); the local multiplication is induced by
    factoring the restricted product through the quotient coordinates.
    Returns (GradedAlgebra, GradedWitness).
    """
    if not _is_ideal(i, a):
        raise NotIdeal("base of a power filtration must be a two-sided ideal")
    if tower is None:
        tower = power_tower(i, a, max_degree + 1)
    if tower.degree < max_degree + 1:
        raise DimensionMismatch("tower too short for requested degree")
    field = i.field
    chain = [(tower.power(n), tower.power(n + 1)) for n in range(max_degree + 1)]
    proj_next, sect_next, lifts = _component_data(field, chain)
    dims = [p.rows for p in proj_next]
    equots = [quotient_with_section(tower.power(m)) for m in range(max_degree + 2)]
    ibars = [equots[n + 1].proj @ lifts[n] for n in range(max_degree + 1)]

    mults = {}
    for x in range(max_degree + 1):
        for y in range(max_degree + 1 - x):
            try:
                restricted = corestrict(
                    a.mult @ tensor_map(tower.power(x).basis, tower.power(y).basis),
                    tower.power(x + y),
                )
            except Exception as exc:
                raise CorestrictFailure(f"product of powers ({x},{y}) escapes I^{x + y}") from exc
            m_gr = proj_next[x + y] @ restricted @ tensor_map(sect_next[x], sect_next[y])
            if m_gr @ tensor_map(proj_next[x], proj_next[y]) != proj_next[x + y] @ restricted:
                raise CorestrictFailure(f"graded multiplication ({x},{y}) is not well defined")
            mults[(x, y)] = m_gr
    unit0 = proj_next[0] @ corestrict(a.unit, tower.power(0))
    g = GradedAlgebra(field, dims, mults, unit0)
    wit = GradedWitness(
        side="quot", tower=tower, proj_next=proj_next, sect_next=sect_next,
        lifts=lifts, equots=equots, ibars=ibars,
    )
    return g, wit


def wedge_multiplication(e, tower: WedgeTower, a: int, b: int) -> LinearMap:
    """The induced multiplication C^(a+1) (x) C^(b+1) -> C^(a+b+1) in tower coordinates.

    Exists whenever the filtration base is a subbialgebra; the corestriction
    failing means the base was not one (or the tower is wrong).
    """
    if tower.degree < a + b + 1:
        raise DimensionMismatch("tower too short")
    restricted = e.mult @ tensor_map(tower.power(a + 1).basis, tower.power(b + 1).basis)
    try:
        return corestrict(restricted, tower.power(a + b + 1))
    except Exception as exc:
        raise CorestrictFailure(f"product of wedge powers ({a},{b}) escapes level {a + b + 1}") from exc


def quotient_comultiplication(e, tower: PowerTower, a: int, b: int) -> LinearMap:
    """The induced comultiplication E/I^(a+b+1) -> E/I^(a+1) (x) E/I^(b+1).

    Exists whenever I is the kernel of a bialgebra epimorphism; failure to
    factor through the quotient means it was not.
    """
    if tower.degree < a + b + 1:
        raise DimensionMismatch("tower too short")
    q_ab = quotient_with_section(tower.power(a + b + 1))
    pa = quotient_with_section(tower.power(a + 1)).proj
    pb = quotient_with_section(tower.power(b + 1)).proj
    target = tensor_map(pa, pb) @ e.comult
    got = target @ q_ab.sect
    if got @ q_ab.proj != target:
        raise FactorFailure(f"comultiplication does not kill I^{a + b + 1} at ({a},{b})")
    return got


def quotient_bialgebra(e: Bialgebra, pi: LinearMap) -> Bialgebra:
    """The bialgebra induced on the image of a quotient map pi: E -> K^q.

    Requires pi surjective with biideal kernel and a descending braiding;
    raises NotQuotientMap otherwise.  The returned object satisfies
    verify_morphism(pi, e, B, "bialgebra").
    """
    if pi.cols != e.dim:
        raise DimensionMismatch("pi domain mismatch")
    if pi.rank() != pi.rows:
        raise NotQuotientMap("pi is not surjective")
    ker = kernel(pi)
    flags = predicates(ker, e)
    if not (flags.is_ideal and flags.is_coideal):
        raise NotQuotientMap("ker(pi) is not a biideal")
    sect = right_inverse(pi)
    b = Bialgebra(
        e.field,
        pi.rows,
        mult=pi @ e.mult @ tensor_map(sect, sect),
        unit=pi @ e.unit,
        comult=tensor_map(pi, pi) @ e.comult @ sect,
        counit=e.counit @ sect,
        braiding=tensor_map(pi, pi) @ e.braiding @ tensor_map(sect, sect),
    )
    rep = verify_morphism(pi, e, b, "bialgebra")
    if not rep.ok:
        raise NotQuotientMap(f"pi is not a bialgebra epimorphism (fails {rep.failed})")
    return b


def _descend_braiding(e, big_a: Subspace, big_b: Subspace, pa, pb, sa, sb):
    """Induce the braiding on component quotients; None when it does not descend."""
    restricted = e.braiding @ tensor_map(big_a.basis, big_b.basis)
    try:
        r = corestrict(restricted, tensor_subspace(big_b, big_a))
    except Exception:
        return None
    c_gr = tensor_map(pb, pa) @ r @ tensor_map(sa, sb)
    if c_gr @ tensor_map(pa, pb) != tensor_map(pb, pa) @ r:
        return None
    return c_gr


def graded_bialgebra_grB(e: Bialgebra, b: Subspace, max_degree: int, tower: Optional[WedgeTower] = None):
    """The graded braided bialgebra on the wedge filtration of a subbialgebra.

    Coalgebra part from the associated graded coalgebra; algebra part induced
    from the wedge multiplications; braidings descend componentwise (hard
    error if they do not).  Returns (GradedBialgebra, GradedWitness).
    """
    flags = predicates(b, e)
    if not flags.is_subbialgebra:
        raise NotSubbialgebra("filtration base must be a subbialgebra")
    if tower is None:
        tower = wedge_tower(b, e, max_degree + 1)
    gco, wit = associated_graded_coalgebra(b, e, max_degree, tower)
    dims = gco.dims

    mults = {}
    for x in range(max_degree + 1):
        for y in range(max_degree + 1 - x):
            mw = wedge_multiplication(e, tower, x, y)
            wit.wedge_mults[(x, y)] = mw
            m_gr = wit.proj_next[x + y] @ mw @ tensor_map(wit.sect_next[x], wit.sect_next[y])
            if m_gr @ tensor_map(wit.proj_next[x], wit.proj_next[y]) != wit.proj_next[x + y] @ mw:
                raise CorestrictFailure(f"graded multiplication ({x},{y}) is not well defined")
            mults[(x, y)] = m_gr
    unit0 = wit.proj_next[0] @ corestrict(e.unit, tower.power(1))

    braidings = {}
    for x in range(max_degree + 1):
        for y in range(max_degree + 1 - x):
            c_gr = _descend_braiding(
                e, tower.power(x + 1), tower.power(y + 1),
                wit.proj_next[x], wit.proj_next[y], wit.sect_next[x], wit.sect_next[y],
            )
            if c_gr is None:
                raise BraidingDoesNotDescend(f"braiding does not descend to components ({x},{y})")
            braidings[(x, y)] = c_gr

    g = GradedBialgebra(e.field, dims, mults, unit0, gco.comults, gco.counit0, braidings)
    return g, wit


def graded_bialgebra_grI(e: Bialgebra, pi: LinearMap, max_degree: int, tower: Optional[PowerTower] = None):
    """The graded braided bialgebra on the power filtration of ker(pi).

    Algebra part from the associated graded algebra; coalgebra part induced
    from the quotient comultiplications.  Returns (GradedBialgebra,
    GradedWitness, B) with B the quotient bialgebra of pi.
    """
    b = quotient_bialgebra(e, pi)  # validates pi
    i = kernel(pi)
    if tower is None:
        tower = power_tower(i, e, max_degree + 1)
    galg, wit = associated_graded_algebra(i, e, max_degree, tower)
    dims = galg.dims

    comults = {}
    for x in range(max_degree + 1):
        for y in range(max_degree + 1 - x):
            dv = quotient_comultiplication(e, tower, x, y)
            wit.quot_comults[(x, y)] = dv
            target = dv @ wit.ibars[x + y]
            got = solve(tensor_map(wit.ibars[x], wit.ibars[y]), target)
            if got is None:
                raise CorestrictFailure(f"graded comultiplication ({x},{y}) does not corestrict")
            comults[(x, y)] = got
    counit0 = e.counit @ wit.lifts[0]

    braidings = {}
    for x in range(max_degree + 1):
        for y in range(max_degree + 1 - x):
            c_gr = _descend_braiding(
                e, tower.power(x), tower.power(y),
                wit.proj_next[x], wit.proj_next[y], wit.sect_next[x], wit.sect_next[y],
            )
            if c_gr is None:
                raise BraidingDoesNotDescend(f"braiding does not descend to components ({x},{y})")
            braidings[(x, y)] = c_gr

    g = GradedBialgebra(e.field, dims, galg.mults, galg.unit0, comults, counit0, braidings)
    return g, wit, b


# -- degreewise braided-bialgebra compatibility ---------------------------------


def _embeddings(field, dims):
    total = sum(dims)
    out = []
    offset = 0
    for d in dims:
        cols = []
        for j in range(d):
            col = [0] * total
            col[offset + j] = 1
            cols.append(col)
        out.append(LinearMap.from_cols(field, total, cols))
        offset += d
    return out


def verify_graded_bialgebra(g: GradedBialgebra) -> CheckReport:
    """Degreewise compatibility of the graded product and coproduct.

    For every a+b within the truncation, the coproduct of a product must
    match the braided shuffle of componentwise products of coproducts; plus
    the degree-zero counit/multiplicativity law.
    """
    rep = CheckReport()
    n = g.degree
    emb = _embeddings(g.field, g.dims)
    total = sum(g.dims)
    ident = lambda d: LinearMap.identity(g.field, d)
    for a in range(n + 1):
        for b in range(n + 1 - a):
            cols = g.dims[a] * g.dims[b]
            lhs = LinearMap.zero(g.field, total * total, cols)
            for s in range(a + b + 1):
                t = a + b - s
                lhs = lhs + tensor_map(emb[s], emb[t]) @ g.comults[(s, t)] @ g.mults[(a, b)]
            rhs = LinearMap.zero(g.field, total * total, cols)
            for s1 in range(a + 1):
                t1 = a - s1
                for s2 in range(b + 1):
                    t2 = b - s2
                    term = (
                        tensor_map(emb[s1 + s2], emb[t1 + t2])
                        @ tensor_map(g.mults[(s1, s2)], g.mults[(t1, t2)])
                        @ tensor_map(ident(g.dims[s1]), tensor_map(g.braidings[(t1, s2)], ident(g.dims[t2])))
                        @ tensor_map(g.comults[(s1, t1)], g.comults[(s2, t2)])
                    )
                    rhs = rhs + term
            if lhs != rhs:
                rep.record(f"braided compatibility ({a},{b})", False, (a, b))
                return rep
    rep.record("braided compatibility (all degrees)", True)
    lhs = g.counit0 @ g.mults[(0, 0)]
    rhs = tensor_map(g.counit0, g.counit0)
    rep.record("counit of degree-zero product", lhs == rhs)
    return rep


# -- global truncated assembly ---------------------------------------------------


def to_coalgebra(g: GradedCoalgebra) -> Coalgebra:
    """The truncated direct sum as an honest coalgebra.

    Faithful because comultiplication never raises degree, so no component
    escapes the truncation.
    """
    emb = _embeddings(g.field, g.dims)
    total = sum(g.dims)
    comult = LinearMap.zero(g.field, total * total, total)
    for a in range(g.degree + 1):
        for b in range(g.degree + 1 - a):
            block = tensor_map(emb[a], emb[b]) @ g.comults[(a, b)]
            comult = comult + block @ _projection(emb[a + b])
    counit = g.counit0 @ _projection(emb[0])
    return Coalgebra(g.field, total, comult, counit)


def to_algebra(g: GradedAlgebra) -> Algebra:
    """The truncated direct sum as an honest algebra.

    Products of total degree beyond the truncation are cut to zero; this is
    the quotient by the ideal of high components, so associativity is exact.
    """
    emb = _embeddings(g.field, g.dims)
    total = sum(g.dims)
    mult = LinearMap.zero(g.field, total, total * total)
    for a in range(g.degree + 1):
        for b in range(g.degree + 1 - a):
            block = emb[a + b] @ g.mults[(a, b)]
            mult = mult + block @ tensor_map(_projection(emb[a]), _projection(emb[b]))
    unit = emb[0] @ g.unit0
    return Algebra(g.field, total, mult, unit)


def _projection(embedding: LinearMap) -> LinearMap:
    return embedding.transpose()


def component_subspace(g, indices) -> Subspace:
    """The canonical subspace spanned by the listed components of the sum."""
    emb = _embeddings(g.field, g.dims)
    cols = []
    for n in indices:
        cols.extend(emb[n].columns())
    return Subspace.from_columns(g.field, sum(g.dims), cols)


def tower_graded_algebra(e, tower: WedgeTower, max_degree: int) -> GradedAlgebra:
    """The graded algebra on components C^(n+1) with the wedge multiplications."""
    dims = [tower.power(n + 1).dim for n in range(max_degree + 1)]
    mults = {}
    for a in range(max_degree + 1):
        for b in range(max_degree + 1 - a):
            mults[(a, b)] = wedge_multiplication(e, tower, a, b)
    unit0 = corestrict(e.unit, tower.power(1))
    return GradedAlgebra(e.field, dims, mults, unit0)


def tower_graded_coalgebra(e, tower: PowerTower, max_degree: int) -> GradedCoalgebra:
    """The graded coalgebra on components E/I^(n+1) with the quotient comultiplications."""
    quots = [quotient_with_section(tower.power(n + 1)) for n in range(max_degree + 1)]
    dims = [q.dim for q in quots]
    comults = {}
    for a in range(max_degree + 1):
        for b in range(max_degree + 1 - a):
            comults[(a, b)] = quotient_comultiplication(e, tower, a, b)
    counit0 = e.counit @ quots[0].sect
    if counit0 @ quots[0].proj != e.counit:
        raise FactorFailure("counit does not kill the filtration base")
    return GradedCoalgebra(e.field, dims, comults, counit0)


# -- appendix factorization -------------------------------------------------------


def theta_map(wit: GradedWitness, seq, a: int, b: int) -> LinearMap:
    """The factorization of (p_a (x) p_b) . beta through the component inclusions.

    seq must be the exact-sequence witness at degree a+b+1 of the same tower.
    """
    if seq.degree != a + b + 1:
        raise DimensionMismatch("sequence witness degree must be a+b+1")
    target = tensor_map(wit.equots[a].proj, wit.equots[b].proj) @ seq.beta
    got = solve(tensor_map(wit.ibars[a], wit.ibars[b]), target)
    if got is None:
        raise CorestrictFailure(f"theta ({a},{b}) does not factor")
    return got
