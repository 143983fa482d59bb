from fractions import Fraction

import pytest

from lieclass import catalog
from lieclass.algebra import LieAlgebra, abelian, center, is_solvable
from lieclass.deform import (IDENTITIES, Cochain2, NoLimitReport, ScalingMap, central_extension,
                             coadjoint_spectrum, contract, contraction_constants, deformed, find_isomorphism,
                             is_symplectic, search_diagonal_contraction, verify_quadratic_deformation)
from lieclass.errors import NotClosed, NotSymplectic, OddDimension, SingularScaling
from lieclass.scalars import LaurentPoly


def h3():
    return catalog.build("heisenberg", {"p": 1}).algebra


def test_sl2_as_deformation_of_h3():
    mu0 = Cochain2.from_algebra(h3())
    phi1 = Cochain2(3, {(2, 0): {0: 2}, (2, 1): {1: -2}})
    res = verify_quadratic_deformation(mu0, phi1, Cochain2.zero(3))
    assert res.passed and set(res.specializations.values()) == {True}
    at1 = deformed(mu0, phi1, Cochain2.zero(3), 1).to_algebra()
    assert at1.same_constants(catalog.build("sl2").algebra)
    assert not is_solvable(at1) and center(at1).dim == 0


def test_failing_identity_is_named():
    mu0 = Cochain2.from_algebra(h3())
    phi1 = Cochain2(3, {(0, 2): {0: 1}})
    res = verify_quadratic_deformation(mu0, phi1, Cochain2.zero(3))
    assert not res.passed
    assert set(res.failures) <= set(IDENTITIES) and res.failures


def test_cochain_is_alternating():
    c = Cochain2(3, {(1, 0): {2: 1}})
    assert c.on_basis(0, 1) == {2: -1}
    with pytest.raises(ValueError):
        Cochain2(3, {(1, 1): {2: 1}})


def test_central_extension_errors():
    with pytest.raises(OddDimension):
        central_extension(abelian(3), {(0, 1): 1})
    with pytest.raises(NotSymplectic):
        central_extension(abelian(4), {(0, 1): 1})
    T = LieAlgebra(4, {(0, 1): {2: 1}})
    with pytest.raises(NotClosed):
        central_extension(T, {(0, 2): 1, (1, 3): 1, (2, 3): 1})
    assert is_symplectic(T, {(0, 2): 1, (1, 3): 1})


def test_heisenberg_from_abelian():
    for p in (1, 2, 3):
        theta = {(2 * i, 2 * i + 1): 1 for i in range(p)}
        assert central_extension(abelian(2 * p), theta).same_constants(
            catalog.build("heisenberg", {"p": p}).algebra)


def test_sl2_contracts_to_h3():
    sl2 = catalog.build("sl2").algebra
    lim = contract(sl2, ScalingMap.diagonal(["t", "t", "t^2"]))
    assert lim.same_constants(h3())
    consts = contraction_constants(sl2, ScalingMap.diagonal(["t", "t", "t^2"]))
    assert consts[(0, 2)] == {0: LaurentPoly.parse("-2*t^2")}


def test_no_limit_report():
    sl2 = catalog.build("sl2").algebra
    res = contract(sl2, ScalingMap.diagonal(["t^-1", "1", "1"]))
    assert isinstance(res, NoLimitReport)
    assert res.exponent == -1
    assert ((0, 1, 2), LaurentPoly.parse("t^-1")) in res.offending


def test_trivial_scaling_is_identity():
    L = catalog.build("so4").algebra
    assert contract(L, ScalingMap.exponents([0] * 6)).same_constants(L)
    assert contract(L, ScalingMap.exponents([1] * 6)).is_abelian()


def test_singular_scaling_rejected():
    with pytest.raises(SingularScaling):
        ScalingMap(2, {(0, 0): LaurentPoly.parse("t + 1"), (1, 1): LaurentPoly.parse("1")})
    with pytest.raises(SingularScaling):
        ScalingMap(2, {(0, 0): LaurentPoly.parse("1")})


def test_upper_triangular_scaling():
    # f_t(e2) = t e2 + e1 on h3 keeps the limit well defined
    L = h3()
    f = ScalingMap(3, {(0, 0): "t", (1, 1): "t", (0, 1): "1", (2, 2): "t^2"})
    assert contract(L, f).same_constants(L)


def test_search_diagonal_contraction():
    sl2 = catalog.build("sl2").algebra
    exps = search_diagonal_contraction(sl2, h3(), bound=2)
    assert exps is not None
    assert contract(sl2, ScalingMap.exponents(exps)).same_constants(h3())
    assert search_diagonal_contraction(h3(), sl2, bound=2) is None


def test_find_isomorphism_permutation_and_scale():
    A = LieAlgebra(3, {(0, 1): {2: 2}})
    B = LieAlgebra(3, {(1, 2): {0: 1}})
    phi = find_isomorphism(A, B)
    assert phi is not None
    assert find_isomorphism(A, catalog.build("sl2").algebra) is None


def test_coadjoint_spectrum_of_frobenius_family():
    e = catalog.build("frobenius_complex", {"a": "1,2"})
    x_index, eigs = e.expected["principal_spectrum"].value
    spec = coadjoint_spectrum(e.algebra, e.algebra.basis_vector(x_index))
    assert spec["irrational_degree"] == 0
    assert spec["rational"] == sorted(Fraction(v) for v in eigs)


def test_coadjoint_spectrum_irrational_part():
    so3 = catalog.build("so3").algebra
    spec = coadjoint_spectrum(so3, so3.basis_vector(0))
    assert spec["rational"] == [0] and spec["irrational_degree"] == 2
