from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lieclass import catalog
from lieclass.algebra import LieAlgebra, abelian
from lieclass.cartan import (bilinear_matrix, cartan_class, cartan_class_wedge_oracle, characteristic_space_details,
                             class_of, class_spectrum_sample, index, is_contact, is_frobenius, max_class_witness,
                             orbit_dimension, random_forms, sample_forms, verify_class_upper_bound)
from lieclass.errors import ZeroForm

IDS = catalog.entry_ids()


def sympy_class(L, a):
    """Codimension of ker(a) inside ker(da), from the stacked matrix [B; a]."""
    B = [[sum(Fraction(a[k]) * c for k, c in L.bracket_basis(i, j).items()) for j in range(L.dim)]
         for i in range(L.dim)]
    return sympy.Matrix(B + [list(a)]).rank()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(IDS), st.integers(0, 2**32))
def test_class_matches_sympy_and_wedge_oracle(eid, seed):
    L = catalog.build(eid).algebra
    for a in random_forms(L, 3, seed):
        c = class_of(L, a)
        assert c == sympy_class(L, a)
        assert c == cartan_class_wedge_oracle(L, a)
        assert orbit_dimension(L, a) == 2 * (c // 2)


def test_heisenberg_report():
    L = catalog.build("heisenberg", {"p": 2}).algebra
    rep = cartan_class(L, L.basis_vector(4))
    assert (rep.cl, rep.rank, rep.orbit_dim, rep.parity) == (5, 4, 4, "odd")
    assert rep.stabilizer.dim == 1 and rep.characteristic_space.dim == 0
    rep = cartan_class(L, L.basis_vector(0))
    assert rep.cl == 1 and rep.characteristic_space.dim == 4


def test_bilinear_matrix_is_skew():
    L = catalog.build("so4").algebra
    a = (1, 2, 0, -1, 3, 1)
    B = bilinear_matrix(L, a)
    assert all(B[i][j] == -B[j][i] for i in range(6) for j in range(6))


def test_zero_form_rejected():
    L = abelian(3)
    with pytest.raises(ZeroForm):
        class_of(L, (0, 0, 0))
    assert orbit_dimension(L, (0, 0, 0)) == 0


@pytest.mark.parametrize("eid,params,d,mc", [
    ("heisenberg", {"p": 3}, 1, 7),
    ("L", {"n": 6}, 4, 3),
    ("Q", {"n": 8}, 2, 7),
    ("so4", {}, 2, 5),
    ("g4", {}, 0, 4),
    ("kaplan7", {}, 3, 5),
    ("sl2", {}, 1, 3),
])
def test_index_and_max_class(eid, params, d, mc):
    rep = index(catalog.build(eid, params).algebra)
    assert (rep.index, rep.max_class) == (d, mc)


def test_index_of_abelian():
    rep = index(abelian(4))
    assert (rep.index, rep.max_class) == (4, 1)


def test_contact_frobenius_flags():
    assert is_contact(catalog.build("so3").algebra)
    assert not is_contact(catalog.build("kaplan7").algebra)
    assert is_frobenius(catalog.build("g4").algebra)
    assert not is_frobenius(catalog.build("Q").algebra)


def test_class_upper_bound_certified():
    L = catalog.build("kaplan7").algebra
    assert verify_class_upper_bound(L, 5)
    assert not verify_class_upper_bound(L, 4)
    assert not verify_class_upper_bound(L, 3)
    H = catalog.build("heisenberg", {"p": 2}).algebra
    assert verify_class_upper_bound(H, 5) and not verify_class_upper_bound(H, 4)


def test_witness_has_max_class():
    for eid in ("so4", "Q", "n81", "frobenius_real"):
        L = catalog.build(eid).algebra
        w = max_class_witness(L)
        assert class_of(L, w.coefficients()) == index(L).max_class


def test_characteristic_space_details():
    L = catalog.build("kaplan7").algebra
    det = characteristic_space_details(L)
    assert det.verdict
    assert det.characteristic_space.dim == L.dim - index(L).max_class


def test_sampling_is_deterministic():
    L = catalog.build("n81").algebra
    first = list(sample_forms(L, 40, 7))
    assert first == list(sample_forms(L, 40, 7))
    assert first[:L.dim] == [L.basis_vector(i) for i in range(L.dim)]
    assert class_spectrum_sample(L, 40, 7) == class_spectrum_sample(L, 40, 7)
    with pytest.raises(ValueError):
        class_spectrum_sample(L, 0)


def test_rank_one_forms_on_sl2():
    # the nilpotent cone of sl2 carries class-2 forms in this basis
    L = catalog.build("sl2").algebra
    assert class_of(L, L.basis_vector(0)) == 2
    assert class_of(L, L.basis_vector(2)) == 3
    so3 = catalog.build("so3").algebra
    assert all(class_of(so3, a) == 3 for a in random_forms(so3, 50, 1))


def test_custom_algebra():
    # aff(1): [X1, X2] = X2, Frobenius with w2
    L = LieAlgebra(2, {(0, 1): {1: 1}})
    assert class_of(L, (0, 1)) == 2
    assert is_frobenius(L)
