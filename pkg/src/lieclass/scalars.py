"""Exact scalar domains and exact linear algebra over the rationals.

Rationals are :class:`fractions.Fraction`.  Multivariate polynomials
(:class:`MultiPoly`) carry the symbolic coefficients of a generic linear
form; Laurent polynomials in one parameter (:class:`LaurentPoly`) carry the
structure constants of a contracting family.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"-3/2"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        m = _RATIONAL_RE.match(x)
        if not m:
            raise ValueError(f"not a rational literal: {x!r}")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {x!r}")
        return Fraction(int(m.group(1)), den)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# dense rational matrices

def _integer_rows(m):
    """Scale each row to primitive integers (clears denominators, strips content)."""
    out = []
    for row in m:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        ints = [int(x * den) for x in row]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _ncols(m, ncols):
    if ncols is not None:
        return ncols
    return len(m[0]) if m else 0


def rank(m, ncols=None) -> int:
    if not m:
        return 0
    return kernels.int_rank(_integer_rows(m), _ncols(m, ncols))


def rref(m, ncols=None):
    """Reduced row echelon form over Q: ``(rank, pivot_columns, rows)``."""
    n = _ncols(m, ncols)
    if not m:
        return 0, [], []
    r, pivots, red = kernels.int_rref(_integer_rows(m), n)
    rows = []
    for i in range(r):
        d = red[i][pivots[i]]
        rows.append([Fraction(v, d) for v in red[i]])
    return r, pivots, rows


def exact_kernel(m, ncols=None) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : m x = 0}``; vectors are primitive and integral.

    ``ncols`` must be given when ``m`` has no rows.
    """
    n = _ncols(m, ncols)
    if not m:
        return [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
    r, pivots, red = kernels.int_rref(_integer_rows(m), n)
    d = red[0][pivots[0]] if r else 1
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [0] * n
        v[f] = d
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][f]
        g = 0
        for x in v:
            g = math.gcd(g, x)
        sign = 1 if next(x for x in v if x) > 0 else -1
        basis.append(tuple(Fraction(sign * x // g) for x in v))
    return basis


def mat_vec(m, v):
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m)


def mat_mul(a, b):
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def transpose(m):
    return [list(c) for c in zip(*m)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def span_basis(vectors: Iterable[Sequence], n: int) -> list[tuple[Fraction, ...]]:
    """Echelon basis of the span of ``vectors`` in Q^n (deterministic)."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    r, _, rows = rref(vectors, n)
    return [tuple(row) for row in rows[:r]]


def in_span(v, basis, n) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)], n) == len(span_basis(basis, n))


def intersect_spans(a, b, n) -> list[tuple[Fraction, ...]]:
    """Basis of span(a) ∩ span(b) via the kernel of [a^T | -b^T]."""
    if not a or not b:
        return []
    a = span_basis(a, n)
    b = span_basis(b, n)
    cols = [list(v) for v in a] + [[-x for x in v] for v in b]
    system = transpose(cols)
    ker = exact_kernel(system, len(cols))
    out = []
    for k in ker:
        v = [Fraction(0)] * n
        for coeff, vec in zip(k[: len(a)], a):
            if coeff:
                for i in range(n):
                    v[i] += coeff * vec[i]
        out.append(v)
    return span_basis(out, n)


def charpoly(m) -> list[Fraction]:
    """Characteristic polynomial det(xI - m), coefficients from x^n down to x^0.

    Faddeev-LeVerrier recursion; exact over Q.
    """
    n = len(m)
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    ident = identity(n)
    for k in range(1, n + 1):
        prev_c = coeffs[-1]
        base = [[mk[i][j] + prev_c * ident[i][j] for j in range(n)] for i in range(n)]
        mk = mat_mul(m, base)
        c = -sum((mk[i][i] for i in range(n)), Fraction(0)) / k
        coeffs.append(c)
    return coeffs


def rational_roots(coeffs) -> list[Fraction]:
    """Rational roots (with multiplicity) of a polynomial given high-to-low."""
    coeffs = [Fraction(c) for c in coeffs]
    roots = []
    while len(coeffs) > 1 and coeffs[-1] == 0:
        roots.append(Fraction(0))
        coeffs.pop()
    while len(coeffs) > 1:
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        lead, const = abs(ints[0]), abs(ints[-1])
        found = None
        for p in _divisors(const):
            for q in _divisors(lead):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _horner(coeffs, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        coeffs = _deflate(coeffs, found)
    return sorted(roots)


def _divisors(n):
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _horner(coeffs, x):
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _deflate(coeffs, root):
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + out[-1] * root)
    return out


# ---------------------------------------------------------------------------
# multivariate polynomials

class MultiPoly:
    """Polynomial over Q in named variables; terms map exponent tuples to coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms=None):
        self.variables = tuple(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.variables):
                raise ValueError("exponent vector length does not match variable count")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    @classmethod
    def constant(cls, variables, c):
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, name):
        i = list(variables).index(name)
        exp = tuple(int(j == i) for j in range(len(variables)))
        return cls(variables, {exp: 1})

    @classmethod
    def linear(cls, variables, coeffs):
        """``sum coeffs[i] * variables[i]``."""
        nv = len(variables)
        return cls(variables, {tuple(int(j == i) for j in range(nv)): c for i, c in enumerate(coeffs) if c})

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError("polynomials over different variable lists")
            return other
        return MultiPoly.constant(self.variables, to_rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return MultiPoly(self.variables, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly(self.variables, t)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point):
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def sorted_terms(self):
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class SymbolicMatrix:
    """Rectangular matrix of :class:`MultiPoly` entries over a shared variable list."""

    variables: tuple
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        width = {len(r) for r in rows}
        if len(width) > 1:
            raise ValueError("ragged symbolic matrix")
        for r in rows:
            for p in r:
                if p.variables != tuple(self.variables):
                    raise ValueError("entry over a different variable list")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "variables", tuple(self.variables))

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    def specialize(self, point):
        return [[p.evaluate(point) for p in row] for row in self.entries]


def _packing(nvars):
    width = kernels.FIELD_BITS
    top = 1 << (width - 1)
    guard = 0
    for i in range(nvars + 1):
        guard |= top << (width * i)
    return width, guard


def _pack(exp, width):
    key = sum(exp)
    for e in exp:
        key = (key << width) | e
    return key


def _int_poly_rows(m: SymbolicMatrix, width):
    """Row-wise integral packed polynomials (denominators cleared, content stripped)."""
    limit = 1 << (width - 1)
    out = []
    for row in m.entries:
        den = 1
        for p in row:
            for c in p.terms.values():
                den = den * c.denominator // math.gcd(den, c.denominator)
        g = 0
        prow = []
        for p in row:
            q = {}
            for e, c in p.terms.items():
                if sum(e) >= limit:
                    raise OverflowError("exponent too large for packed representation")
                v = int(c * den)
                q[_pack(e, width)] = v
                g = math.gcd(g, v)
            prow.append(q)
        if g > 1:
            prow = [{k: v // g for k, v in q.items()} for q in prow]
        out.append(prow)
    return out


def symbolic_rank(m: SymbolicMatrix) -> int:
    """Rank over the fraction field Q(variables), by fraction-free elimination.

    Bareiss elimination with full pivoting on the sparsest low-degree entry.
    Every division is exact (Sylvester's identity), so no rational functions
    are ever formed.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    width, guard = _packing(len(m.variables))
    a = _int_poly_rows(m, width)
    nrows, ncols = m.rows, m.cols
    prev = {0: 1}
    r = 0
    rows = list(range(nrows))
    cols = list(range(ncols))
    while r < min(nrows, ncols):
        best = None
        for i in rows[r:]:
            for j in cols[r:]:
                p = a[i][j]
                if p:
                    score = (len(p), max(p) >> (width * len(m.variables)))
                    if best is None or score < best[0]:
                        best = (score, i, j)
        if best is None:
            break
        _, pi, pj = best
        ri, rj = rows.index(pi), cols.index(pj)
        rows[r], rows[ri] = rows[ri], rows[r]
        cols[r], cols[rj] = cols[rj], cols[r]
        prow = a[pi]
        piv = prow[pj]
        rest_cols = cols[r + 1:]
        for i in rows[r + 1:]:
            row = a[i]
            f = row[pj]
            for j in rest_cols:
                if f and prow[j]:
                    num = kernels.ipoly_cross(piv, row[j], f, prow[j])
                elif row[j]:
                    num = kernels.ipoly_mul(piv, row[j])
                else:
                    continue
                row[j] = kernels.ipoly_exact_div(num, prev, guard) if num else {}
            row[pj] = {}
        prev = piv
        r += 1
    return r


# ---------------------------------------------------------------------------
# Laurent polynomials in one parameter

class NoLimit:
    """Marker value: a Laurent polynomial with a negative power has no limit at 0."""

    __slots__ = ("exponent",)

    def __init__(self, exponent: int):
        self.exponent = exponent

    def __eq__(self, other):
        return isinstance(other, NoLimit)

    def __hash__(self):
        return hash(NoLimit)

    def __repr__(self):
        return f"NoLimit(t^{self.exponent})"


_LAURENT_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(?:(t)(?:\s*\^\s*\(?\s*([+-]?\d+)\s*\)?)?)?\s*"
)


class LaurentPoly:
    """Laurent polynomial in ``symbol``; terms map integer exponents to rationals."""

    __slots__ = ("symbol", "terms")

    def __init__(self, terms=None, symbol="t"):
        self.symbol = symbol
        self.terms = {int(k): Fraction(v) for k, v in (terms or {}).items() if Fraction(v)}

    @classmethod
    def monomial(cls, c, k, symbol="t"):
        return cls({k: c}, symbol)

    @classmethod
    def constant(cls, c, symbol="t"):
        return cls({0: c}, symbol)

    @classmethod
    def parse(cls, text: str, symbol="t"):
        """Parse expressions such as ``"t^2"``, ``"-3/2*t^-1 + 4"``, ``"1"``."""
        src = text.replace(symbol, "t") if symbol != "t" else text
        pos, terms, first = 0, {}, True
        src = src.strip()
        if not src:
            raise ValueError("empty Laurent polynomial")
        while pos < len(src):
            m = _LAURENT_TERM.match(src, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse Laurent polynomial {text!r} at offset {pos}")
            if not first and not m.group(1):
                raise ValueError(f"missing operator in {text!r} at offset {pos}")
            sign = -1 if m.group(1) == "-" else 1
            c = to_rational(m.group(2)) if m.group(2) else Fraction(1)
            k = 0
            if m.group(3):
                k = int(m.group(4)) if m.group(4) is not None else 1
            terms[k] = terms.get(k, 0) + sign * c
            pos = m.end()
            first = False
        return cls(terms, symbol)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.constant(to_rational(other), self.symbol)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return LaurentPoly(t, self.symbol)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()}, self.symbol)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        t = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                t[k1 + k2] = t.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(t, self.symbol)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        try:
            return self == self._coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def inverse(self):
        if not self.is_monomial():
            raise ZeroDivisionError("only nonzero Laurent monomials are invertible")
        (k, c), = self.terms.items()
        return LaurentPoly({-k: 1 / c}, self.symbol)

    def min_exponent(self):
        return min(self.terms, default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = format_rational(self.terms[k])
            if k == 0:
                parts.append(c)
            else:
                mono = self.symbol if k == 1 else f"{self.symbol}^{k}"
                parts.append(mono if c == "1" else f"-{mono}" if c == "-1" else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def laurent_limit(p: LaurentPoly):
    """Limit at 0: the constant coefficient, or :class:`NoLimit` if a negative power occurs."""
    if p.terms and p.min_exponent() < 0:
        return NoLimit(p.min_exponent())
    return p.terms.get(0, Fraction(0))
