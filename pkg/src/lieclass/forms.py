"""Alternating forms on a Lie algebra and the Chevalley-Eilenberg differential.

A :class:`KForm` stores monomials ``w_{i1} ^ ... ^ w_{ik}`` (``i1 < ... < ik``)
as bitmasks.  Evaluation follows the determinant convention, so
``(w1 ^ w2)(X1, X2) = 1``, and ``dw(X, Y) = -w([X, Y])`` on 1-forms.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from . import kernels
from .algebra import LieAlgebra
from .errors import DimensionMismatch


def _mask_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _indices_mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class KForm:
    """Sparse alternating k-form on ``algebra`` with rational coefficients."""

    __slots__ = ("algebra", "degree", "_terms")

    def __init__(self, algebra: LieAlgebra, degree: int, terms=None, _masks=None):
        self.algebra = algebra
        self.degree = degree
        if _masks is not None:
            self._terms = {m: Fraction(c) for m, c in _masks.items() if c}
            return
        acc: dict[int, Fraction] = {}
        for idx, c in (terms or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"monomial {idx} does not have degree {degree}")
            if any(not 0 <= i < algebra.dim for i in idx):
                raise DimensionMismatch(f"index out of range in {idx}")
            if len(set(idx)) < len(idx):
                continue
            order = sorted(range(degree), key=lambda a: idx[a])
            sign = _perm_sign(order)
            mask = _indices_mask(idx)
            acc[mask] = acc.get(mask, 0) + sign * Fraction(c)
        self._terms = {m: c for m, c in acc.items() if c}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def one_form(cls, algebra: LieAlgebra, coeffs) -> "KForm":
        if len(coeffs) != algebra.dim:
            raise DimensionMismatch(f"expected {algebra.dim} coefficients")
        return cls(algebra, 1, _masks={1 << i: c for i, c in enumerate(coeffs) if c})

    @classmethod
    def dual(cls, algebra: LieAlgebra, i: int) -> "KForm":
        return cls(algebra, 1, _masks={1 << i: 1})

    @classmethod
    def scalar(cls, algebra: LieAlgebra, c) -> "KForm":
        return cls(algebra, 0, _masks={0: c})

    @classmethod
    def zero(cls, algebra: LieAlgebra, degree: int) -> "KForm":
        return cls(algebra, degree, _masks={})

    # -- views ----------------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return {tuple(_mask_indices(m)): c for m, c in self._terms.items()}

    def masks(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficients(self) -> tuple[Fraction, ...]:
        """Coordinates of a 1-form in the dual basis."""
        if self.degree != 1:
            raise ValueError("coefficients() is defined for 1-forms")
        return tuple(self._terms.get(1 << i, Fraction(0)) for i in range(self.algebra.dim))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, KForm):
            return (self.degree == other.degree and self.algebra.dim == other.algebra.dim
                    and self._terms == other._terms)
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    def _check(self, other):
        if not isinstance(other, KForm):
            raise TypeError("expected a KForm")
        if other.algebra.dim != self.algebra.dim:
            raise DimensionMismatch("forms on algebras of different dimension")

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        t = dict(self._terms)
        for m, c in other._terms.items():
            t[m] = t.get(m, 0) + c
        return KForm(self.algebra, self.degree, _masks=t)

    def __neg__(self):
        return KForm(self.algebra, self.degree, _masks={m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = Fraction(c)
        return KForm(self.algebra, self.degree, _masks={m: v * c for m, v in self._terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __call__(self, *vectors):
        return evaluate(self, vectors)

    def __repr__(self):
        if not self._terms:
            return "0"
        names = self.algebra.dual_names
        parts = []
        for m in sorted(self._terms):
            c = self._terms[m]
            mono = "^".join(names[i] for i in _mask_indices(m)) or "1"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _perm_sign(order) -> int:
    order = list(order)
    sign = 1
    for i in range(len(order)):
        while order[i] != i:
            j = order[i]
            order[i], order[j] = order[j], order[i]
            sign = -sign
    return sign


# ---------------------------------------------------------------------------

def wedge(f: KForm, g: KForm) -> KForm:
    """Exterior product; a result of degree above dim is the zero form."""
    f._check(g)
    deg = f.degree + g.degree
    if deg > f.algebra.dim:
        return KForm.zero(f.algebra, deg)
    return KForm(f.algebra, deg, _masks=kernels.wedge_masks(f._terms, g._terms))


def wedge_power(f: KForm, p: int) -> KForm:
    """``f ^ ... ^ f`` (p factors) for a 2-form, by repeated squaring."""
    if f.degree != 2:
        raise ValueError("wedge_power expects a 2-form")
    if p < 1:
        raise ValueError("p must be positive")
    result = None
    base = f
    while p:
        if p & 1:
            result = base if result is None else wedge(result, base)
        p >>= 1
        if p:
            base = wedge(base, base)
    return result


def _differential_of_duals(L: LieAlgebra) -> list[dict[int, Fraction]]:
    cache = getattr(L, "_dual_differentials", None)
    if cache is not None:
        return cache
    d = [dict() for _ in range(L.dim)]
    for (i, j), vec in L.brackets.items():
        m = (1 << i) | (1 << j)
        for k, c in vec.items():
            d[k][m] = d[k].get(m, 0) - c
    d = [{m: c for m, c in dk.items() if c} for dk in d]
    L._dual_differentials = d
    return d


def ce_differential(w: KForm) -> KForm:
    """Chevalley-Eilenberg differential, extended from 1-forms as a graded derivation."""
    L = w.algebra
    d1 = _differential_of_duals(L)
    out: dict[int, Fraction] = {}
    for mask, c in w._terms.items():
        idx = _mask_indices(mask)
        for s, i_s in enumerate(idx):
            dterm = d1[i_s]
            if not dterm:
                continue
            rest = mask & ~(1 << i_s)
            left = rest & ((1 << i_s) - 1)
            right = rest & ~((1 << i_s) - 1)
            base = -c if s & 1 else c
            for pm, pc in dterm.items():
                if pm & rest:
                    continue
                sign = kernels.mask_sign(left, pm) * kernels.mask_sign(left | pm, right)
                key = rest | pm
                v = out.get(key, 0) + sign * base * pc
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return KForm(L, w.degree + 1, _masks=out)


def interior_product(x, f: KForm) -> KForm:
    """Contraction in the first slot: ``(i(x) f)(Y, ...) = f(x, Y, ...)``."""
    if f.degree < 1:
        raise ValueError("cannot contract a 0-form")
    if len(x) != f.algebra.dim:
        raise DimensionMismatch(f"expected a vector of length {f.algebra.dim}")
    out: dict[int, Fraction] = {}
    for mask, c in f._terms.items():
        for s, i in enumerate(_mask_indices(mask)):
            xi = x[i]
            if not xi:
                continue
            key = mask & ~(1 << i)
            v = out.get(key, 0) + (-1) ** s * c * Fraction(xi)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return KForm(f.algebra, f.degree - 1, _masks=out)


def evaluate(f: KForm, vectors) -> Fraction:
    """Value of ``f`` on ``degree`` vectors (determinant convention)."""
    if len(vectors) != f.degree:
        raise ValueError(f"a {f.degree}-form takes {f.degree} vectors")
    total = Fraction(0)
    for mask, c in f._terms.items():
        idx = _mask_indices(mask)
        det = Fraction(0)
        for perm in permutations(range(f.degree)):
            term = Fraction(_perm_sign(perm))
            for a, b in enumerate(perm):
                term *= Fraction(vectors[a][idx[b]])
                if not term:
                    break
            det += term
        total += c * det
    return total


def two_form_matrix(f: KForm) -> list[list[Fraction]]:
    """Skew matrix ``M[i][j] = f(X_i, X_j)`` of a 2-form."""
    if f.degree != 2:
        raise ValueError("expected a 2-form")
    n = f.algebra.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for mask, c in f._terms.items():
        i, j = _mask_indices(mask)
        m[i][j] = c
        m[j][i] = -c
    return m
