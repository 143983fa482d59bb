import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lieclass import catalog
from lieclass.charseq import (CharSequence, characteristic_sequence, characteristic_sequence_of,
                              check_c1_bound, contact_charseq_constraint, jordan_blocks_nilpotent)
from lieclass.errors import InDerivedAlgebra, NotNilpotent


def jordan_matrix(sizes):
    n = sum(sizes)
    m = [[0] * n for _ in range(n)]
    pos = 0
    for s in sizes:
        for i in range(s - 1):
            m[pos + i][pos + i + 1] = 1
        pos += s
    return m


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.integers(0, 2**16))
def test_jordan_blocks_match_sympy(sizes, seed):
    rnd = sympy.randMatrix(sum(sizes), sum(sizes), -2, 2, seed=seed)
    while rnd.det() == 0:
        rnd += sympy.eye(sum(sizes))
    m = rnd * sympy.Matrix(jordan_matrix(sizes)) * rnd.inv()
    _, J = m.jordan_form()
    ref = []
    i = 0
    n = J.shape[0]
    while i < n:
        j = i
        while j + 1 < n and J[j, j + 1] == 1:
            j += 1
        ref.append(j - i + 1)
        i = j + 1
    got = jordan_blocks_nilpotent(m.tolist())
    assert got == tuple(sorted(ref, reverse=True)) == tuple(sorted(sizes, reverse=True))


def test_not_nilpotent_matrix():
    with pytest.raises(NotNilpotent):
        jordan_blocks_nilpotent([[1, 0], [0, 0]])


@pytest.mark.parametrize("eid,params,seq", [
    ("kaplan7", {}, (2, 2, 2, 1)),
    ("L", {"n": 6}, (5, 1)),
    ("heisenberg", {"p": 2}, (2, 1, 1, 1)),
    ("h_p2", {"p": 2}, (2, 2, 1, 1, 1, 1)),
    ("contact7_a", {}, (3, 1, 1, 1, 1)),
    ("contact7_b", {}, (3, 2, 1, 1)),
    ("contact9", {}, (4, 3, 1, 1)),
])
def test_catalog_sequences(eid, params, seq):
    got = characteristic_sequence(catalog.build(eid, params).algebra, seed=3)
    assert got.parts == seq and got.stable


def test_sequence_of_vector():
    L = catalog.build("L", {"n": 5}).algebra
    assert characteristic_sequence_of(L, L.basis_vector(0)).parts == (4, 1)
    assert characteristic_sequence_of(L, L.basis_vector(1)).parts == (2, 1, 1, 1)
    with pytest.raises(InDerivedAlgebra):
        characteristic_sequence_of(L, L.basis_vector(3))
    with pytest.raises(NotNilpotent):
        characteristic_sequence(catalog.build("sl2").algebra)


def test_c1_bound_and_contact_constraint():
    L = catalog.build("strict_decreasing", {"variant": "n1", "l": 3}).algebra
    seq = characteristic_sequence(L)
    assert check_c1_bound(L, seq)
    Lf = catalog.build("L", {"n": 6}).algebra
    assert not check_c1_bound(Lf)
    H = catalog.build("heisenberg").algebra
    assert contact_charseq_constraint(H)


def test_charsequence_validation():
    assert CharSequence((3, 1)) < CharSequence((3, 2))
    with pytest.raises(ValueError):
        CharSequence((1, 2))
