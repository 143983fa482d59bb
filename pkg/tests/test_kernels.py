"""The compiled and pure-Python kernels must agree exactly."""
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieclass import kernels
from lieclass._pykernels import FIELD_BITS

BACKENDS = kernels.backends()
needs_two = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")

ints = st.integers(-10**3, 10**3)
big = st.integers(-10**30, 10**30)


def int_matrix(elem=ints):
    return st.integers(1, 7).flatmap(
        lambda c: st.lists(st.lists(elem, min_size=c, max_size=c), min_size=1, max_size=7))


masks = st.integers(0, (1 << 20) - 1)
sparse_form = st.dictionaries(masks, st.integers(-9, 9).filter(bool), max_size=8)


def poly(nvars=3):
    def key(exps):
        k = sum(exps)
        for e in exps:
            k = (k << FIELD_BITS) | e
        return k
    return st.dictionaries(st.lists(st.integers(0, 3), min_size=nvars, max_size=nvars).map(key),
                           st.integers(-9, 9).filter(bool), max_size=6)


def _guard(nvars=3):
    g = 0
    for _ in range(nvars + 1):
        g = (g << FIELD_BITS) | (1 << (FIELD_BITS - 1))
    return g


def test_backend_selection():
    assert kernels.BACKEND in BACKENDS
    assert "python" in BACKENDS


def test_pure_python_forced_by_env():
    code = "from lieclass import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, LIECLASS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_two
@settings(max_examples=150, deadline=None)
@given(st.one_of(int_matrix(), int_matrix(big)))
def test_rank_and_rref_agree(m):
    nc = len(m[0])
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    assert py.int_rank(m, nc) == cy.int_rank(m, nc)
    assert py.int_rref(m, nc) == cy.int_rref(m, nc)


def test_int_rank_overflow_falls_back():
    m = [[2**61, 3], [5, 2**61 + 7], [1, 1]]
    for k in BACKENDS.values():
        assert k.int_rank(m, 2) == 2
    sing = [[2**40, 2**41], [2**41, 2**42]]
    for k in BACKENDS.values():
        assert k.int_rank(sing, 2) == 1


@needs_two
@settings(max_examples=200, deadline=None)
@given(masks, masks, sparse_form, sparse_form)
def test_mask_ops_agree(a, b, f, g):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    assert py.mask_sign(a, b) == cy.mask_sign(a, b)
    assert py.wedge_masks(f, g) == cy.wedge_masks(f, g)


def test_mask_sign_high_bits():
    a, b = 1 << 63, 1 << 2
    for k in BACKENDS.values():
        assert k.mask_sign(a, b) == -1
        assert k.mask_sign(b, a) == 1


@needs_two
@settings(max_examples=150, deadline=None)
@given(poly(), poly(), poly(), poly())
def test_poly_ops_agree(a, b, c, d):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    assert py.ipoly_mul(a, b) == cy.ipoly_mul(a, b)
    assert py.ipoly_cross(a, b, c, d) == cy.ipoly_cross(a, b, c, d)
    if b:
        prod = py.ipoly_mul(a, b)
        for k in BACKENDS.values():
            assert k.ipoly_exact_div(prod, b, _guard()) == a


def test_inexact_division_raises():
    x = 1 << FIELD_BITS | 1  # degree 1, exponent of the single variable 1
    one = 0
    for k in BACKENDS.values():
        with pytest.raises(ArithmeticError):
            k.ipoly_exact_div({one: 1}, {x: 1, one: 1}, _guard(1))
        with pytest.raises(ZeroDivisionError):
            k.ipoly_exact_div({one: 1}, {}, _guard(1))


_END_TO_END = """
from lieclass import catalog, kernels
from lieclass.cartan import index, class_of, random_forms
from lieclass.charseq import characteristic_sequence
out = [kernels.BACKEND]
for eid in ("kaplan7", "so4", "g9", "frobenius_real", "strict_decreasing"):
    L = catalog.build(eid).algebra
    rep = index(L)
    out.append((eid, rep.index, rep.max_class, [class_of(L, a) for a in random_forms(L, 20, 4)]))
out.append(characteristic_sequence(catalog.build("h_p2").algebra, seed=2).parts)
print(repr(out[1:]))
"""


@needs_two
def test_backends_agree_end_to_end():
    outs = {}
    for flag in ("0", "1"):
        env = dict(os.environ, LIECLASS_PURE_PYTHON=flag)
        res = subprocess.run([sys.executable, "-c", _END_TO_END], env=env, capture_output=True, text=True, check=True)
        outs[flag] = res.stdout
    assert outs["0"] == outs["1"] and outs["0"].strip()
