"""Cartan class of linear forms, coadjoint orbit dimensions and the index.

The class of a nonzero linear form ``a`` is computed from the skew matrix
``B[i][j] = a([X_i, X_j])`` (which represents ``-da``): with ``r = rank B``,
the class is ``r + 1`` when ``a`` does not vanish on ``ker B`` and ``r``
otherwise.  :func:`cartan_class_wedge_oracle` recomputes it from the exterior
powers of ``da`` and is kept as an independent check.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import scalars
from .algebra import LieAlgebra, Subspace
from .errors import DimensionMismatch, ZeroForm
from .forms import KForm, ce_differential, wedge
from .scalars import MultiPoly, SymbolicMatrix


def _coeffs(L: LieAlgebra, alpha) -> tuple[Fraction, ...]:
    if isinstance(alpha, KForm):
        if alpha.degree != 1:
            raise ValueError("expected a linear form")
        return alpha.coefficients()
    if len(alpha) != L.dim:
        raise DimensionMismatch(f"expected {L.dim} coefficients, got {len(alpha)}")
    return tuple(Fraction(x) for x in alpha)


def bilinear_matrix(L: LieAlgebra, alpha) -> list[list[Fraction]]:
    a = _coeffs(L, alpha)
    n = L.dim
    b = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), vec in L.brackets.items():
        v = sum((a[k] * c for k, c in vec.items()), Fraction(0))
        if v:
            b[i][j] = v
            b[j][i] = -v
    return b


@dataclass(frozen=True)
class ClassReport:
    form: tuple
    cl: int
    rank: int
    orbit_dim: int
    stabilizer: Subspace
    characteristic_space: Subspace

    @property
    def parity(self) -> str:
        return "odd" if self.cl % 2 else "even"


def cartan_class(L: LieAlgebra, alpha) -> ClassReport:
    a = _coeffs(L, alpha)
    if not any(a):
        raise ZeroForm("the Cartan class is defined for nonzero forms")
    b = bilinear_matrix(L, a)
    n = L.dim
    ker = scalars.exact_kernel(b, n)
    r = n - len(ker)
    vanishes = all(sum((x * y for x, y in zip(a, v)), Fraction(0)) == 0 for v in ker)
    cl = r if vanishes else r + 1
    stab = Subspace(n, ker)
    char = Subspace(n, scalars.exact_kernel(b + [list(a)], n))
    return ClassReport(a, cl, r, 2 * (cl // 2), stab, char)


def class_of(L: LieAlgebra, alpha) -> int:
    """Class only (skips building the subspaces)."""
    a = _coeffs(L, alpha)
    if not any(a):
        raise ZeroForm("the Cartan class is defined for nonzero forms")
    b = bilinear_matrix(L, a)
    r = scalars.rank(b, L.dim)
    return r if scalars.rank(b + [list(a)], L.dim) == r else r + 1


def cartan_class_wedge_oracle(L: LieAlgebra, alpha) -> int:
    """Class straight from the definition: ``a ^ (da)^p`` and ``(da)^(p+1)``."""
    a = _coeffs(L, alpha)
    if not any(a):
        raise ZeroForm("the Cartan class is defined for nonzero forms")
    form = KForm.one_form(L, a)
    da = ce_differential(form)
    power = KForm.scalar(L, 1)
    p = 0
    while True:
        nxt = wedge(power, da)
        if nxt.is_zero():
            break
        power = nxt
        p += 1
    return 2 * p + 1 if not wedge(form, power).is_zero() else 2 * p


def orbit_dimension(L: LieAlgebra, alpha) -> int:
    a = _coeffs(L, alpha)
    if not any(a):
        return 0
    return 2 * (class_of(L, a) // 2)


# ---------------------------------------------------------------------------
# generic (symbolic) form

def generic_variables(L: LieAlgebra) -> tuple[str, ...]:
    return tuple(f"a{i + 1}" for i in range(L.dim))


def generic_bilinear_matrix(L: LieAlgebra) -> SymbolicMatrix:
    """``B(a)`` for the generic form ``sum a_i w_i``; entries are linear in ``a``."""
    vs = generic_variables(L)
    n = L.dim
    zero = MultiPoly(vs)
    rows = [[zero] * n for _ in range(n)]
    for (i, j), vec in L.brackets.items():
        coeffs = [vec.get(k, 0) for k in range(n)]
        p = MultiPoly.linear(vs, coeffs)
        rows[i][j] = p
        rows[j][i] = -p
    return SymbolicMatrix(vs, rows)


def _generic_form_row(L: LieAlgebra):
    vs = generic_variables(L)
    return [MultiPoly.var(vs, v) for v in vs]


@dataclass(frozen=True)
class IndexReport:
    index: int
    max_class: int
    generic_rank: int


def index(L: LieAlgebra) -> IndexReport:
    """Index and maximal class from the generic form, exactly.

    ``generic_rank`` is the rank of ``B(a)`` over Q(a).  A generic form lies
    in the row space of ``B(a)`` (vanishes on its kernel) exactly when the
    bordered matrix ``[B(a); a]`` has the same rank.
    """
    cached = getattr(L, "_index_report", None)
    if cached is not None:
        return cached
    bm = generic_bilinear_matrix(L)
    r = scalars.symbolic_rank(bm)
    bordered = SymbolicMatrix(bm.variables, list(bm.entries) + [_generic_form_row(L)])
    rb = scalars.symbolic_rank(bordered)
    max_class = r + 1 if rb > r else r
    d = L.dim - max_class + 1 if max_class % 2 else L.dim - max_class
    report = IndexReport(d, max_class, r)
    L._index_report = report
    return report


def verify_class_upper_bound(L: LieAlgebra, c: int) -> bool:
    """True iff every linear form on ``L`` has class at most ``c`` (decided exactly).

    Rank part: the generic rank of ``B(a)`` (hence every specialization) is at
    most ``2*floor(c/2)``.  Parity part, needed only when ``c`` is even and the
    generic rank equals ``c``: every form of rank ``c`` lies in the row space
    of its matrix, which holds identically iff it holds generically.
    """
    if c < 1:
        raise ValueError("class bound must be positive")
    rep = index(L)
    r = rep.generic_rank
    if r > 2 * (c // 2):
        return False
    if c % 2 == 0 and r == c:
        return rep.max_class == r
    return True


# ---------------------------------------------------------------------------
# sampling

def sample_forms(L: LieAlgebra, budget: int, seed=0, bound: int = 1):
    """Deterministic candidate forms: dual basis, pairwise sums, then random.

    Random coefficients are drawn from ``[-B, B]``; ``B`` starts at ``bound``
    and doubles after every quarter of the budget.
    """
    n = L.dim
    for i in range(n):
        yield tuple(Fraction(int(k == i)) for k in range(n))
    for i, j in combinations(range(n), 2):
        yield tuple(Fraction(int(k in (i, j))) for k in range(n))
    rng = random.Random(seed)
    chunk = max(1, budget // 4)
    produced = 0
    b = bound
    while produced < budget:
        v = tuple(Fraction(rng.randint(-b, b)) for _ in range(n))
        if not any(v):
            continue
        yield v
        produced += 1
        if produced % chunk == 0:
            b *= 2


def random_forms(L: LieAlgebra, count: int, seed=0, bound: int = 3):
    """``count`` seeded random nonzero integer forms with entries in ``[-bound, bound]``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(L.dim))
        if any(v):
            out.append(v)
    return out


def class_spectrum_sample(L: LieAlgebra, budget: int, seed=0) -> set[int]:
    """Classes observed on the candidate forms; a lower approximation of the spectrum."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    return {class_of(L, a) for a in sample_forms(L, budget, seed)}


def max_class_witness(L: LieAlgebra, seed=0, rounds: int = 12) -> KForm:
    """First form of maximal class in the deterministic enumeration order."""
    target = index(L).max_class
    n = L.dim
    for i in range(n):
        a = [int(k == i) for k in range(n)]
        if class_of(L, a) == target:
            return KForm.one_form(L, a)
    for i, j in combinations(range(n), 2):
        a = [int(k in (i, j)) for k in range(n)]
        if class_of(L, a) == target:
            return KForm.one_form(L, a)
    rng = random.Random(seed)
    b = 1
    for _ in range(rounds):
        for _ in range(32):
            a = [rng.randint(-b, b) for _ in range(n)]
            if any(a) and class_of(L, a) == target:
                return KForm.one_form(L, a)
        b *= 2
    raise RuntimeError(f"no witness of class {target} found on {L!r}")


def is_contact(L: LieAlgebra) -> bool:
    return L.dim % 2 == 1 and index(L).max_class == L.dim


def is_frobenius(L: LieAlgebra) -> bool:
    return L.dim % 2 == 0 and index(L).max_class == L.dim


@dataclass(frozen=True)
class AbelianCheck:
    verdict: bool
    witness: tuple
    characteristic_space: Subspace
    stabilizer: Subspace
    stabilizer_abelian: bool


def characteristic_space_details(L: LieAlgebra, seed=0) -> AbelianCheck:
    w = max_class_witness(L, seed)
    rep = cartan_class(L, w)
    c = rep.characteristic_space
    ok = c.is_subalgebra(L) and c.is_abelian(L)
    return AbelianCheck(ok, rep.form, c, rep.stabilizer, rep.stabilizer.is_abelian(L))


def characteristic_space_abelian_check(L: LieAlgebra, seed=0) -> bool:
    """For a maximal-class witness, is its characteristic space an abelian subalgebra?"""
    return characteristic_space_details(L, seed).verdict
