from math import comb

import pytest

from grbialg.coalg import verify_bialgebra
from grbialg.errors import (
    BraidingDoesNotDescend,
    CorestrictFailure,
    NotSubbialgebra,
)
from grbialg.fields import GF, QQ
from grbialg.filtration import (
    power_tower,
    sweedler_sequence,
    wedge_tower,
)
from grbialg.graded import (
    GradedCoalgebra,
    associated_graded_algebra,
    associated_graded_coalgebra,
    graded_bialgebra_grB,
    graded_bialgebra_grI,
    is_strongly_graded_algebra,
    is_strongly_graded_coalgebra,
    quotient_bialgebra,
    theta_map,
    to_algebra,
    to_coalgebra,
    tower_graded_algebra,
    tower_graded_coalgebra,
    verify_graded_algebra,
    verify_graded_bialgebra,
    verify_graded_coalgebra,
    wedge_multiplication,
)
from grbialg.linalg import LinearMap, Subspace, block_codiag, kernel, tensor_map
from grbialg import zoo

H4 = zoo.build("sweedler_h4")
BINOM = zoo.build("trunc_binomial_F2_4")
DIV = zoo.build("divided_power_dual_F2_4")
C2 = zoo.build("group_algebra_C2")
C4 = zoo.build("group_algebra_C4")


def x_ideal():
    return Subspace.from_columns(GF(2), 4, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


# -- local-law verification ----------------------------------------------------


def test_single_component_coalgebra_passes():
    e = C2.bialgebra
    g = GradedCoalgebra(QQ, [2], {(0, 0): e.comult}, e.counit)
    assert verify_graded_coalgebra(g).ok


def test_associated_graded_coalgebra_passes_local_laws():
    for entry, name in ((H4, "B"), (BINOM, "unit"), (C4, "C2")):
        g, _ = associated_graded_coalgebra(entry.subspaces[name], entry.bialgebra, 4)
        assert verify_graded_coalgebra(g).ok


def test_perturbed_local_comult_fails_with_index():
    g, _ = associated_graded_coalgebra(BINOM.subspaces["unit"], BINOM.bialgebra, 3)
    bad = dict(g.comults)
    d01 = bad[(0, 1)]
    data = [row[:] for row in d01.data]
    data[0][0] = (data[0][0] + 1) % 2
    bad[(0, 1)] = LinearMap(GF(2), d01.rows, d01.cols, data)
    rep = verify_graded_coalgebra(GradedCoalgebra(GF(2), g.dims, bad, g.counit0))
    assert not rep.ok
    assert rep.index is not None
    # a generic perturbation of the top-degree map breaks coassociativity
    e = C4.bialgebra
    g0 = GradedCoalgebra(QQ, [4], {(0, 0): e.comult}, e.counit)
    data = [row[:] for row in e.comult.data]
    data[1][2] = data[1][2] + 1
    rep = verify_graded_coalgebra(GradedCoalgebra(QQ, [4], {(0, 0): LinearMap(QQ, 16, 4, data)}, e.counit))
    assert not rep.ok


def test_associated_graded_algebra_passes_local_laws():
    g, _ = associated_graded_algebra(x_ideal(), BINOM.bialgebra, 4)
    assert verify_graded_algebra(g).ok
    rep = verify_graded_algebra(
        tower_graded_algebra(H4.bialgebra, wedge_tower(H4.subspaces["B"], H4.bialgebra, 5), 4)
    )
    assert rep.ok


def test_perturbed_local_mult_fails():
    g, _ = associated_graded_algebra(x_ideal(), BINOM.bialgebra, 3)
    bad = dict(g.mults)
    m10 = bad[(1, 0)]
    data = [row[:] for row in m10.data]
    data[0][0] = (data[0][0] + 1) % 2
    bad[(1, 0)] = LinearMap(GF(2), m10.rows, m10.cols, data)
    assert not verify_graded_algebra(type(g)(GF(2), g.dims, bad, g.unit0)).ok


# -- strongly graded tests -------------------------------------------------------


def test_strongly_graded_trivial_cases():
    e = C2.bialgebra
    g = GradedCoalgebra(QQ, [2, 0, 0], {
        (a, b): LinearMap.zero(QQ, (2 if a == 0 else 0) * (2 if b == 0 else 0), 2 if a + b == 0 else 0)
        for a in range(3) for b in range(3 - a)
    }, e.counit)
    g.comults[(0, 0)] = e.comult
    ok, bad = is_strongly_graded_coalgebra(g)
    assert ok and bad is None


def test_binomial_gr_not_strongly_graded_as_coalgebra():
    e = BINOM.bialgebra
    gr, _, _ = graded_bialgebra_grI(e, e.counit, 3)
    ok, bad = is_strongly_graded_coalgebra(gr.coalgebra_part())
    assert not ok and bad == (1, 1)
    # oracle: Delta(x^2) = x^2 (x) 1 + C(2,1) x (x) x + 1 (x) x^2 and C(2,1) = 0 mod 2
    assert comb(2, 1) % 2 == 0
    # the algebra side is strongly graded: x^a x^b spans x^(a+b)
    ok, bad = is_strongly_graded_algebra(gr.algebra_part())
    assert ok, bad


def test_gr_coalgebra_always_strongly_graded():
    for entry, name in ((H4, "B"), (BINOM, "unit"), (C4, "C2"), (DIV, "B")):
        g, _ = associated_graded_coalgebra(entry.subspaces[name], entry.bialgebra, 4)
        ok, bad = is_strongly_graded_coalgebra(g)
        assert ok, (entry.name, bad)


def test_gr_algebra_always_strongly_graded():
    for entry, qname in ((BINOM, "eps"), (H4, "eps"), (C2, "eps")):
        e = entry.bialgebra
        i = kernel(entry.quotients[qname])
        g, _ = associated_graded_algebra(i, e, 4)
        ok, bad = is_strongly_graded_algebra(g)
        assert ok, (entry.name, bad)


def test_divided_power_tower_not_strongly_graded():
    e = DIV.bialgebra
    tower = wedge_tower(DIV.subspaces["B"], e, 5)
    g = tower_graded_algebra(e, tower, 4)
    ok, bad = is_strongly_graded_algebra(g)
    assert not ok and bad == (1, 1)


# -- associated graded shapes ------------------------------------------------------


def test_gr_of_full_subcoalgebra_concentrated_in_degree_zero():
    e = H4.bialgebra
    g, _ = associated_graded_coalgebra(Subspace.full(QQ, 4), e, 3)
    assert g.dims == [4, 0, 0, 0]
    assert g.comults[(0, 0)] == e.comult


def test_gr_dims_unit_line_binomial():
    g, _ = associated_graded_coalgebra(BINOM.subspaces["unit"], BINOM.bialgebra, 4)
    assert g.dims == [1, 2, 1, 0, 0]


def test_gr_dims_sweedler():
    g, _ = associated_graded_coalgebra(H4.subspaces["B"], H4.bialgebra, 3)
    assert g.dims == [2, 2, 0, 0]


def test_gr_algebra_of_zero_ideal():
    e = H4.bialgebra
    g, _ = associated_graded_algebra(Subspace.zero(QQ, 4), e, 3)
    assert g.dims == [4, 0, 0, 0]


def test_gr_algebra_of_x_ideal_dims_and_products():
    g, _ = associated_graded_algebra(x_ideal(), BINOM.bialgebra, 4)
    assert g.dims == [1, 1, 1, 1, 0]
    # x^a class times x^b class = x^(a+b) class
    for a in range(4):
        for b in range(4 - a):
            if a + b < 4:
                assert g.mults[(a, b)].data == [[1]]


def test_gr_algebra_of_augmentation_ideal_of_qc2():
    e = C2.bialgebra
    i = kernel(e.counit)
    g, _ = associated_graded_algebra(i, e, 3)
    assert g.dims == [1, 0, 0, 0]


# -- wedge multiplication and quotient comultiplication -----------------------------


def test_wedge_multiplication_degree_zero_is_base_multiplication():
    e = H4.bialgebra
    tower = wedge_tower(H4.subspaces["B"], e, 5)
    m00 = wedge_multiplication(e, tower, 0, 0)
    assert m00 == C2.bialgebra.mult  # canonical basis of B is (1, g)


def test_wedge_multiplication_unit_law():
    e = H4.bialgebra
    tower = wedge_tower(H4.subspaces["B"], e, 5)
    from grbialg.linalg import corestrict

    u_b = corestrict(e.unit, tower.power(1))
    for d in range(3):
        mdo = wedge_multiplication(e, tower, d, 0)
        k = tower.power(d + 1).dim
        assert mdo @ tensor_map(LinearMap.identity(QQ, k), u_b) == LinearMap.identity(QQ, k)
        mod = wedge_multiplication(e, tower, 0, d)
        assert mod @ tensor_map(u_b, LinearMap.identity(QQ, k)) == LinearMap.identity(QQ, k)


def test_wedge_multiplication_images_in_sweedler():
    e = H4.bialgebra
    tower = wedge_tower(H4.subspaces["B"], e, 5)
    m00 = wedge_multiplication(e, tower, 0, 0)
    assert m00.rank() == 2  # x is not a product of B elements
    m10 = wedge_multiplication(e, tower, 1, 0)
    assert m10.rank() == 4  # B^2 * B = H4


def test_wedge_multiplication_fails_for_non_subbialgebra_base():
    e = H4.bialgebra
    # span{g} is a subcoalgebra but not a subalgebra: g*g = 1 escapes its tower
    s = Subspace.from_columns(QQ, 4, [[0, 1, 0, 0]])
    tower = wedge_tower(s, e, 3)
    with pytest.raises(CorestrictFailure):
        wedge_multiplication(e, tower, 0, 0)


def test_quotient_comultiplication_counit_laws():
    e = BINOM.bialgebra
    tower = power_tower(x_ideal(), e, 5)
    g = tower_graded_coalgebra(e, tower, 4)
    assert verify_graded_coalgebra(g).ok


def test_quotient_comultiplication_value_oracle():
    # Delta_v^{1,1} on E/I^3 kills the class of x^2 in characteristic 2
    e = BINOM.bialgebra
    tower = power_tower(x_ideal(), e, 3)
    from grbialg.graded import quotient_comultiplication

    dv = quotient_comultiplication(e, tower, 1, 1)
    from grbialg.linalg import quotient_with_section

    q3 = quotient_with_section(tower.power(2))
    # coordinates: E/I^2 has basis classes (1, x); E/I^3 has (1, x, x^2)
    vec = LinearMap.column_vector(GF(2), [0, 0, 1])  # class of x^2
    assert (dv @ vec).is_zero()
    vec_x = LinearMap.column_vector(GF(2), [0, 1, 0])
    got = (dv @ vec_x).column(0)
    # Delta x = x (x) 1 + 1 (x) x: coordinates (1,x) x (1,x): e1(x)e0 + e0(x)e1
    assert got == [0, 1, 1, 0]


# -- assembled graded bialgebras ------------------------------------------------------


def test_grB_of_full_base_is_degree_zero():
    e = H4.bialgebra
    g, wit = graded_bialgebra_grB(e, Subspace.full(QQ, 4), 3)
    assert g.dims == [4, 0, 0, 0]
    assert verify_graded_bialgebra(g).ok


def test_grB_sweedler_full_compatibility():
    e = H4.bialgebra
    g, wit = graded_bialgebra_grB(e, H4.subspaces["B"], 4)
    assert g.dims == [2, 2, 0, 0, 0]
    assert verify_graded_coalgebra(g.coalgebra_part()).ok
    assert verify_graded_algebra(g.algebra_part()).ok
    assert verify_graded_bialgebra(g).ok
    # degree-0 structure is the group algebra of C2
    assert g.mults[(0, 0)] == C2.bialgebra.mult
    assert g.comults[(0, 0)] == C2.bialgebra.comult
    assert g.counit0 == C2.bialgebra.counit
    assert g.unit0 == C2.bialgebra.unit


def test_grB_rejects_non_subbialgebra():
    with pytest.raises(NotSubbialgebra):
        graded_bialgebra_grB(H4.bialgebra, x_ideal_q(), 2)


def x_ideal_q():
    return Subspace.from_columns(QQ, 4, [[0, 0, 1, 0], [0, 0, 0, 1]])


def test_grI_identity_projection_degenerate():
    e = H4.bialgebra
    g, wit, b = graded_bialgebra_grI(e, LinearMap.identity(QQ, 4), 3)
    assert g.dims == [4, 0, 0, 0]
    assert verify_graded_bialgebra(g).ok


def test_grI_binomial_full_compatibility():
    e = BINOM.bialgebra
    g, wit, b = graded_bialgebra_grI(e, e.counit, 3)
    assert g.dims == [1, 1, 1, 1]
    assert verify_graded_bialgebra(g).ok
    assert verify_graded_coalgebra(g.coalgebra_part()).ok
    assert verify_graded_algebra(g.algebra_part()).ok


def test_grI_qc2_dims():
    e = C2.bialgebra
    g, wit, b = graded_bialgebra_grI(e, e.counit, 3)
    assert g.dims == [1, 0, 0, 0]
    assert verify_graded_bialgebra(g).ok


def test_quotient_bialgebra_validates():
    e = H4.bialgebra
    b = quotient_bialgebra(e, H4.quotients["toC2"])
    assert verify_bialgebra(b).ok
    from grbialg.errors import NotQuotientMap

    with pytest.raises(NotQuotientMap):
        quotient_bialgebra(e, LinearMap.from_rows(QQ, [[0, 0, 1, 0]]))


def test_braiding_descends_for_flip_always():
    e = H4.bialgebra
    g, _ = graded_bialgebra_grB(e, H4.subspaces["B"], 3)
    for (a, b), c in g.braidings.items():
        # flip on components: swaps tensor factors
        from grbialg.linalg import flip as flip_map

        assert c == flip_map(QQ, g.dims[a], g.dims[b])


# -- theta factorization ---------------------------------------------------------------


def test_theta_identities_sweedler():
    e = H4.bialgebra
    g, wit = graded_bialgebra_grB(e, H4.subspaces["B"], 4)
    tower = wit.tower
    for a in range(3):
        for b in range(3 - a):
            n = a + b + 1
            seq = sweedler_sequence(tower, n)
            th = theta_map(wit, seq, a, b)
            # factorization property: (ibar_a (x) ibar_b) theta = (p_a (x) p_b) beta
            lhs = tensor_map(wit.ibars[a], wit.ibars[b]) @ th
            rhs = tensor_map(wit.equots[a].proj, wit.equots[b].proj) @ seq.beta
            assert lhs == rhs
            # theta . alpha = Delta_gr . proj
            assert th @ seq.alpha == g.comults[(a, b)] @ wit.proj_next[a + b]
            # theta . gamma = codiagonal of the single (a+1, b+1) block
            blocks = []
            for u in range(n + 2):
                v = n + 1 - u
                cols = tower.power(u).dim * tower.power(v).dim
                if u == a + 1:
                    blocks.append(tensor_map(wit.proj_next[a], wit.proj_next[b]))
                else:
                    blocks.append(LinearMap.zero(QQ, g.dims[a] * g.dims[b], cols))
            assert th @ seq.gamma == block_codiag(blocks)


def test_theta_identities_binomial_unit_base():
    e = BINOM.bialgebra
    g, wit = graded_bialgebra_grB(e, BINOM.subspaces["unit"], 4)
    tower = wit.tower
    for a in range(3):
        for b in range(3 - a):
            seq = sweedler_sequence(tower, a + b + 1)
            th = theta_map(wit, seq, a, b)
            assert th @ seq.alpha == g.comults[(a, b)] @ wit.proj_next[a + b]


# -- global truncated assembly -----------------------------------------------------------


def test_to_coalgebra_is_honest_coalgebra():
    from grbialg.coalg import verify_coalgebra

    g, _ = associated_graded_coalgebra(H4.subspaces["B"], H4.bialgebra, 3)
    c = to_coalgebra(g)
    assert verify_coalgebra(c).ok


def test_to_algebra_is_honest_algebra():
    from grbialg.coalg import verify_algebra

    g, _ = associated_graded_algebra(x_ideal(), BINOM.bialgebra, 3)
    a = to_algebra(g)
    assert verify_algebra(a).ok
