"""Bracket cochains, quadratic deformations, central extensions and contractions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product

from . import scalars
from .algebra import LieAlgebra, _dense, _vec_dict, adjoint_matrix, jacobi_check
from .errors import (DimensionMismatch, NotClosed, NotSymplectic, OddDimension,
                     SingularScaling)
from .forms import KForm, ce_differential, wedge_power
from .scalars import LaurentPoly, NoLimit, laurent_limit


class Cochain2:
    """Alternating bilinear map ``g x g -> g``; values stored for ``i < j``."""

    __slots__ = ("dim", "values")

    def __init__(self, dim: int, values=None):
        self.dim = dim
        table: dict = {}
        for (i, j), v in (values or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"pair ({i}, {j}) out of range")
            vec = _vec_dict(v, dim)
            if i == j:
                if vec:
                    raise ValueError("alternating cochain must vanish on (x, x)")
                continue
            if i > j:
                i, j = j, i
                vec = {k: -c for k, c in vec.items()}
            slot = table.setdefault((i, j), {})
            for k, c in vec.items():
                slot[k] = slot.get(k, 0) + c
                if not slot[k]:
                    del slot[k]
            if not slot:
                del table[(i, j)]
        self.values = table

    @classmethod
    def from_algebra(cls, L: LieAlgebra) -> "Cochain2":
        return cls(L.dim, L.brackets)

    @classmethod
    def zero(cls, dim: int) -> "Cochain2":
        return cls(dim)

    def on_basis(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return self.values.get((i, j), {})
        return {k: -c for k, c in self.values.get((j, i), {}).items()}

    def apply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, xi in x.items():
            for j, yj in y.items():
                if i == j:
                    continue
                for k, c in self.on_basis(i, j).items():
                    out[k] = out.get(k, 0) + xi * yj * c
        return {k: c for k, c in out.items() if c}

    def __add__(self, other: "Cochain2") -> "Cochain2":
        _same_dim(self, other)
        merged = {p: dict(v) for p, v in self.values.items()}
        for p, v in other.values.items():
            slot = merged.setdefault(p, {})
            for k, c in v.items():
                slot[k] = slot.get(k, 0) + c
        return Cochain2(self.dim, merged)

    def scale(self, t) -> "Cochain2":
        t = Fraction(t)
        return Cochain2(self.dim, {p: {k: c * t for k, c in v.items()} for p, v in self.values.items()})

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other):
        return isinstance(other, Cochain2) and self.dim == other.dim and self.values == other.values

    def to_algebra(self, check: bool = True, **kw) -> LieAlgebra:
        return LieAlgebra(self.dim, self.values, check=check, **kw)

    def __repr__(self):
        return f"Cochain2(dim={self.dim}, {self.values})"


def _same_dim(a, b):
    if a.dim != b.dim:
        raise DimensionMismatch(f"cochains of dimension {a.dim} and {b.dim}")


def circle(phi: Cochain2, psi: Cochain2) -> dict:
    """``(phi o psi)(X,Y,Z) = phi(psi(X,Y),Z) + phi(psi(Y,Z),X) + phi(psi(Z,X),Y)``.

    Returned as ``{(i, j, k): vector}`` over basis triples ``i<j<k``,
    nonzero values only.
    """
    _same_dim(phi, psi)
    n = phi.dim
    out = {}
    for i, j, k in combinations(range(n), 3):
        acc: dict = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = psi.on_basis(a, b)
            if not inner:
                continue
            for m, v in phi.apply(inner, {c: Fraction(1)}).items():
                acc[m] = acc.get(m, 0) + v
        acc = {m: v for m, v in acc.items() if v}
        if acc:
            out[(i, j, k)] = _dense(acc, n)
    return out


def _add_tri(*maps) -> dict:
    out: dict = {}
    for m in maps:
        for key, vec in m.items():
            cur = out.get(key)
            out[key] = vec if cur is None else tuple(x + y for x, y in zip(cur, vec))
    return {k: v for k, v in out.items() if any(v)}


def coboundary(mu: Cochain2, phi: Cochain2) -> dict:
    """``delta_mu phi = mu o phi + phi o mu``."""
    return _add_tri(circle(mu, phi), circle(phi, mu))


def deformed(mu0: Cochain2, phi1: Cochain2, phi2: Cochain2, t) -> Cochain2:
    """``mu0 + t phi1 + t^2 phi2`` at a rational ``t``."""
    t = Fraction(t)
    return mu0 + phi1.scale(t) + phi2.scale(t * t)


IDENTITIES = (
    "delta_mu0(phi1) = 0",
    "phi1 o phi1 + delta_mu0(phi2) = 0",
    "phi2 o phi2 = 0",
    "phi1 o phi2 + phi2 o phi1 = 0",
)


@dataclass
class DeformationCheck:
    failures: dict = field(default_factory=dict)
    specializations: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed


def verify_quadratic_deformation(mu0: Cochain2, phi1: Cochain2, phi2: Cochain2,
                                 sample_ts=(1, -1, 2, Fraction(1, 2))) -> DeformationCheck:
    """Check the four identities making ``mu0 + t phi1 + t^2 phi2`` a bracket for all t.

    ``failures`` maps each failed identity to its nonzero trilinear defect;
    ``specializations`` records whether Jacobi holds at each sample ``t``.
    """
    _same_dim(mu0, phi1)
    _same_dim(mu0, phi2)
    res = DeformationCheck()
    checks = (
        coboundary(mu0, phi1),
        _add_tri(circle(phi1, phi1), coboundary(mu0, phi2)),
        circle(phi2, phi2),
        _add_tri(circle(phi1, phi2), circle(phi2, phi1)),
    )
    for name, defect in zip(IDENTITIES, checks):
        if defect:
            res.failures[name] = defect
    for t in sample_ts:
        L = deformed(mu0, phi1, phi2, t).to_algebra(check=False)
        res.specializations[Fraction(t)] = not jacobi_check(L)
    return res


# ---------------------------------------------------------------------------
# central extensions

def _two_form(T: LieAlgebra, theta) -> KForm:
    if isinstance(theta, KForm):
        if theta.degree != 2 or theta.algebra.dim != T.dim:
            raise DimensionMismatch("theta must be a 2-form on T")
        return KForm(T, 2, _masks=theta.masks())
    return KForm(T, 2, theta)


def is_symplectic(T: LieAlgebra, theta) -> bool:
    if T.dim % 2:
        raise OddDimension(f"dimension {T.dim} is odd")
    theta = _two_form(T, theta)
    return ce_differential(theta).is_zero() and not wedge_power(theta, T.dim // 2).is_zero()


def central_extension(T: LieAlgebra, theta, name: str = "") -> LieAlgebra:
    """``[X, Y]' = [X, Y] + theta(X, Y) Z`` with a new central basis vector ``Z`` placed last."""
    theta = _two_form(T, theta)
    if T.dim % 2:
        raise OddDimension(f"dimension {T.dim} is odd")
    if not ce_differential(theta).is_zero():
        raise NotClosed("theta is not a cocycle")
    if wedge_power(theta, T.dim // 2).is_zero():
        raise NotSymplectic("theta is degenerate")
    n = T.dim
    brackets = {p: dict(v) for p, v in T.brackets.items()}
    for (i, j), c in theta.terms.items():
        brackets.setdefault((i, j), {})[n] = c
    return LieAlgebra(n + 1, brackets, name=name)


# ---------------------------------------------------------------------------
# contractions

def _laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, str):
        return LaurentPoly.parse(x)
    return LaurentPoly.constant(scalars.to_rational(x))


class ScalingMap:
    """Upper-triangular family ``f_t`` with Laurent-monomial diagonal entries.

    ``entries[(i, j)]`` (``i <= j``) is the coefficient of ``e_i`` in ``f_t(e_j)``.
    """

    def __init__(self, dim: int, entries):
        self.dim = dim
        table = {}
        for (i, j), v in entries.items():
            p = _laurent(v)
            if not p:
                continue
            if i > j:
                raise SingularScaling("only diagonal or upper-triangular scalings are supported")
            table[(i, j)] = p
        for i in range(dim):
            d = table.get((i, i))
            if d is None or not d.is_monomial():
                raise SingularScaling(f"diagonal entry {i + 1} must be a nonzero Laurent monomial")
        self.entries = table

    @classmethod
    def diagonal(cls, entries) -> "ScalingMap":
        return cls(len(entries), {(i, i): e for i, e in enumerate(entries)})

    @classmethod
    def exponents(cls, exps) -> "ScalingMap":
        return cls.diagonal([LaurentPoly.monomial(1, k) for k in exps])

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.entries)

    def column(self, j: int) -> dict:
        return {i: p for (i, jj), p in self.entries.items() if jj == j}

    def inverse_columns(self) -> list[dict]:
        """Columns of ``f_t^{-1}`` by back substitution (exact in Laurent polynomials)."""
        n = self.dim
        inv = [dict() for _ in range(n)]
        for j in range(n):
            # solve f x = e_j from the bottom row up
            x: dict = {}
            for i in range(j, -1, -1):
                acc = LaurentPoly.constant(int(i == j))
                for k in range(i + 1, j + 1):
                    if k in x and (i, k) in self.entries:
                        acc = acc - self.entries[(i, k)] * x[k]
                if acc:
                    x[i] = acc * self.entries[(i, i)].inverse()
            inv[j] = x
        return inv

    def __repr__(self):
        return f"ScalingMap(dim={self.dim}, {self.entries})"


def contraction_constants(L: LieAlgebra, f: ScalingMap) -> dict:
    """Structure constants of ``mu_t = f^{-1} o mu_0 (f x f)`` as Laurent polynomials."""
    if f.dim != L.dim:
        raise DimensionMismatch("scaling map and algebra differ in dimension")
    n = L.dim
    cols = [f.column(j) for j in range(n)]
    inv = f.inverse_columns()
    out = {}
    for i, j in combinations(range(n), 2):
        image: dict = {}
        for a, pa in cols[i].items():
            for b, pb in cols[j].items():
                for k, c in L.bracket_basis(a, b).items():
                    image[k] = image.get(k, LaurentPoly()) + pa * pb * c
        res: dict = {}
        for k, pk in image.items():
            if not pk:
                continue
            for m, q in inv[k].items():
                res[m] = res.get(m, LaurentPoly()) + q * pk
        res = {m: p for m, p in res.items() if p}
        if res:
            out[(i, j)] = res
    return out


class NoLimitReport(NoLimit):
    """No limit at ``t -> 0``; ``offending`` lists ``((i, j, k), laurent)`` constants."""

    __slots__ = ("offending",)

    def __init__(self, offending):
        super().__init__(min(p.min_exponent() for _, p in offending))
        self.offending = offending

    def __repr__(self):
        return f"NoLimit({len(self.offending)} divergent constant(s), worst t^{self.exponent})"


def contract(L: LieAlgebra, f: ScalingMap):
    """Limit algebra of ``mu_t`` as ``t -> 0``, or a :class:`NoLimitReport`."""
    consts = contraction_constants(L, f)
    limit: dict = {}
    offending = []
    for (i, j), vec in consts.items():
        for k, p in vec.items():
            v = laurent_limit(p)
            if isinstance(v, NoLimit):
                offending.append(((i, j, k), p))
            elif v:
                limit.setdefault((i, j), {})[k] = v
    if offending:
        return NoLimitReport(offending)
    return LieAlgebra(L.dim, limit, L.basis_names, L.dual_names,
                      name=f"{L.name}_0" if L.name else "")


def _diagonal_limit(L: LieAlgebra, exps):
    out = {}
    for (i, j), vec in L.brackets.items():
        for k, c in vec.items():
            e = exps[i] + exps[j] - exps[k]
            if e < 0:
                return None
            if e == 0:
                out.setdefault((i, j), {})[k] = c
    return out


def search_diagonal_contraction(L: LieAlgebra, target: LieAlgebra, bound: int = 2):
    """Brute force over diagonal ``f_t = diag(t^e_1, ..., t^e_n)``, ``0 <= e_i <= bound``.

    Returns the first exponent vector (lexicographic order) whose limit has
    exactly the constants of ``target``, or None.
    """
    if L.dim != target.dim:
        raise DimensionMismatch("algebras differ in dimension")
    for exps in product(range(bound + 1), repeat=L.dim):
        lim = _diagonal_limit(L, exps)
        if lim is not None and lim == target.brackets:
            return exps
    return None


# ---------------------------------------------------------------------------
# limited isomorphism search

@dataclass(frozen=True)
class MonomialMap:
    """``phi(e_i) = scale[i] * f_{perm[i]}``."""

    perm: tuple
    scale: tuple

    def matrix(self):
        n = len(self.perm)
        m = [[Fraction(0)] * n for _ in range(n)]
        for i, (p, s) in enumerate(zip(self.perm, self.scale)):
            m[p][i] = s
        return m


def apply_monomial(L: LieAlgebra, phi: MonomialMap) -> LieAlgebra:
    """Structure constants transported along ``phi`` (so the result is phi-isomorphic to L)."""
    brackets = {}
    for (i, j), vec in L.brackets.items():
        pi, pj = phi.perm[i], phi.perm[j]
        si, sj = phi.scale[i], phi.scale[j]
        brackets[(pi, pj)] = {phi.perm[k]: c * phi.scale[k] / (si * sj) for k, c in vec.items()}
    return LieAlgebra(L.dim, brackets, check=False)


def _gf2_solve(rows, rhs, n):
    rows = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(row[n] and not any(row[:n]) for row in rows):
        return None
    x = [0] * n
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][n]
    return x


def _factor(q: int, primes: set) -> dict:
    out = {}
    q = abs(q)
    p = 2
    while p * p <= q:
        while q % p == 0:
            out[p] = out.get(p, 0) + 1
            q //= p
        p += 1
    if q > 1:
        out[q] = out.get(q, 0) + 1
    primes.update(out)
    return out


def _solve_scales(equations, n):
    """Nonzero rationals ``d`` with ``d_k / (d_i d_j) = r`` for each ``(i, j, k, r)``."""
    if not equations:
        return (Fraction(1),) * n
    primes: set = set()
    facts = []
    for i, j, k, r in equations:
        num = _factor(r.numerator, primes)
        den = _factor(r.denominator, primes)
        facts.append((num, den))
    rows = []
    for i, j, k, _ in equations:
        row = [0] * n
        row[k] += 1
        row[i] -= 1
        row[j] -= 1
        rows.append(row)
    signs = _gf2_solve([[x % 2 for x in row] for row in rows],
                       [int(r < 0) for *_, r in equations], n)
    if signs is None:
        return None
    d = [Fraction(-1 if s else 1) for s in signs]
    for p in sorted(primes):
        rhs = [num.get(p, 0) - den.get(p, 0) for num, den in facts]
        aug = [row + [b] for row, b in zip(rows, rhs)]
        r, pivots, red = scalars.rref(aug, n + 1)
        if n in pivots:
            return None
        x = [Fraction(0)] * n
        for row, c in zip(red, pivots):
            x[c] = row[n]
        if any(v.denominator != 1 for v in x):
            return None
        for c in range(n):
            d[c] *= Fraction(p) ** int(x[c])
    return tuple(d)


def find_isomorphism(A: LieAlgebra, B: LieAlgebra, max_dim: int = 8):
    """Search ``phi(e_i) = d_i f_{sigma(i)}`` with ``phi`` an isomorphism ``A -> B``.

    Limited on purpose: only signed/rescaled permutations are tried.  Returns a
    :class:`MonomialMap` or None ("not matched").
    """
    if A.dim != B.dim or len(A.brackets) != len(B.brackets):
        return None
    n = A.dim
    if n > max_dim:
        raise ValueError(f"permutation search capped at dimension {max_dim}")
    support_a = {(i, j, k) for (i, j), v in A.brackets.items() for k in v}
    count_b = sum(len(v) for v in B.brackets.values())
    if len(support_a) != count_b:
        return None
    for perm in permutations(range(n)):
        equations = []
        ok = True
        for (i, j, k) in support_a:
            c = A.brackets[(i, j)][k]
            cb = B.bracket_basis(perm[i], perm[j]).get(perm[k])
            if not cb:
                ok = False
                break
            # phi[e_i, e_j] = c d_k f_sk must equal d_i d_j cb f_sk
            equations.append((i, j, k, cb / c))
        if not ok:
            continue
        scales = _solve_scales(equations, n)
        if scales is None:
            continue
        phi = MonomialMap(perm, scales)
        if apply_monomial(A, phi).brackets == B.brackets:
            return phi
    return None


# ---------------------------------------------------------------------------

def coadjoint_spectrum(L: LieAlgebra, x) -> dict:
    """Eigenvalues of ``w -> i(x) dw`` on the dual, i.e. of ``-(ad x)^T``.

    Returns ``{"rational": sorted roots with multiplicity, "irrational_degree": k}``
    where ``k`` counts eigenvalues that are not rational.
    """
    ad = adjoint_matrix(L, x)
    neg = [[-v for v in row] for row in ad]
    cp = scalars.charpoly(neg)
    roots = scalars.rational_roots(cp)
    return {"rational": roots, "irrational_degree": L.dim - len(roots)}
