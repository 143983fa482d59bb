from fractions import Fraction

import pytest

from lieclass import catalog
from lieclass.algebra import (LieAlgebra, Subspace, abelian, center, derived_algebra, direct_sum,
                              is_nilpotent, is_solvable, jacobi_check, lower_central_series,
                              nilpotency_step, quotient_by_ideal)
from lieclass.errors import DimensionMismatch, JacobiError, NotAnIdeal


def h3():
    return LieAlgebra(3, {(0, 1): {2: 1}})


def test_bracket_is_antisymmetric():
    L = h3()
    assert L.bracket_basis(0, 1) == {2: 1}
    assert L.bracket_basis(1, 0) == {2: -1}
    assert L.bracket((1, 2, 0), (0, 1, 5)) == (0, 0, 1)


def test_jacobi_violation_is_reported():
    # [X1,X2]=X3, [X3,X1]=X1 alone is not a Lie algebra
    bad = {(0, 1): {2: 1}, (0, 2): {0: -1}}
    with pytest.raises(JacobiError) as exc:
        LieAlgebra(3, bad)
    (triple, defect), = exc.value.violations
    assert triple == (0, 1, 2) and any(defect)
    assert jacobi_check(LieAlgebra(3, bad, check=False))


def test_structure_constants_out_of_range():
    with pytest.raises(DimensionMismatch):
        LieAlgebra(2, {(0, 1): {2: 1}})


def test_maurer_cartan_sign():
    L = LieAlgebra.from_maurer_cartan(3, {2: {(0, 1): -1}})
    assert L.same_constants(h3())


def test_series_and_center():
    L = catalog.build("L", {"n": 5}).algebra
    assert [s.dim for s in lower_central_series(L)] == [5, 3, 2, 1, 0]
    assert is_nilpotent(L) and nilpotency_step(L) == 4
    assert center(L).dim == 1
    sl2 = catalog.build("sl2").algebra
    assert not is_solvable(sl2) and center(sl2).dim == 0
    assert derived_algebra(sl2).dim == 3
    g4 = catalog.build("g4").algebra
    assert is_solvable(g4) and not is_nilpotent(g4)


def test_quotient_by_center():
    L = catalog.build("heisenberg", {"p": 2}).algebra
    Q = quotient_by_ideal(L, center(L))
    assert Q.dim == 4 and Q.is_abelian()
    with pytest.raises(NotAnIdeal):
        quotient_by_ideal(L, Subspace(5, [L.basis_vector(0)]))


def test_direct_sum():
    so3 = catalog.build("so3").algebra
    S = direct_sum(so3, abelian(2))
    assert S.dim == 5 and center(S).dim == 2
    assert S.bracket_basis(0, 1) == so3.bracket_basis(0, 1)


def test_subspace_ops():
    V = Subspace(3, [(1, 1, 0), (2, 2, 0), (0, 0, 1)])
    assert V.dim == 2
    assert V.contains((3, 3, Fraction(1, 2)))
    W = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    assert V.intersect(W).dim == 1
    assert V.is_subalgebra(h3()) and V.is_abelian(h3())
