"""Lie algebras given by structure constants over Q.

Indices are 0-based internally; ``basis_names`` and ``dual_names`` carry the
user-facing labels.  Brackets are stored sparsely for ``i < j`` only:
``brackets[(i, j)] = {k: c_ij^k}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from . import scalars
from .errors import DimensionMismatch, JacobiError, NotAnIdeal


def _vec_dict(v, n=None):
    """Normalize a vector given as a sequence or a sparse dict to ``{k: Fraction}``."""
    if isinstance(v, Mapping):
        out = {int(k): Fraction(c) for k, c in v.items() if c}
    else:
        out = {k: Fraction(c) for k, c in enumerate(v) if c}
    if n is not None and any(k < 0 or k >= n for k in out):
        raise DimensionMismatch(f"vector index out of range for dimension {n}")
    return out


def _dense(d, n):
    v = [Fraction(0)] * n
    for k, c in d.items():
        v[k] = c
    return tuple(v)


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q.

    ``brackets`` maps index pairs to output vectors; pairs with ``i > j`` are
    folded in by antisymmetry.  With ``check=True`` the Jacobi identity is
    verified and :class:`JacobiError` raised on failure; ``check=False``
    builds an unverified algebra (``verified`` stays False).
    """

    def __init__(self, dim: int, brackets=None, basis_names=None, dual_names=None,
                 name: str = "", check: bool = True):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.name = name
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"X{i + 1}" for i in range(dim))
        self.dual_names = tuple(dual_names) if dual_names else tuple(f"w{i + 1}" for i in range(dim))
        if len(self.basis_names) != dim or len(set(self.basis_names)) != dim:
            raise ValueError("basis names must be unique and match the dimension")
        if len(self.dual_names) != dim or len(set(self.dual_names)) != dim:
            raise ValueError("dual names must be unique and match the dimension")
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), v in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"bracket index ({i}, {j}) out of range")
            vec = _vec_dict(v, dim)
            if i == j:
                if vec:
                    raise ValueError(f"[x, x] must vanish (pair {i})")
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
        self.brackets = table
        self.verified = False
        if check:
            bad = jacobi_check(self)
            if bad:
                raise JacobiError(bad)
            self.verified = True

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_maurer_cartan(cls, dim, equations, **kw):
        """Build from ``equations[k] = {(i, j): m}`` meaning ``d w_k = sum m w_i ^ w_j``.

        Uses ``dw(X, Y) = -w([X, Y])``, hence ``c_ij^k = -m`` for ``i < j``.
        """
        brackets: dict = {}
        for k, terms in equations.items():
            for (i, j), m in terms.items():
                m = Fraction(m)
                if i == j or not m:
                    continue
                if i > j:
                    i, j, m = j, i, -m
                slot = brackets.setdefault((i, j), {})
                slot[k] = slot.get(k, 0) - m
        return cls(dim, brackets, **kw)

    def with_names(self, basis_names=None, dual_names=None, name=None):
        out = LieAlgebra(self.dim, self.brackets, basis_names or self.basis_names,
                         dual_names or self.dual_names, name if name is not None else self.name,
                         check=False)
        out.verified = self.verified
        return out

    # -- evaluation -----------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, x, y) -> tuple[Fraction, ...]:
        """[x, y] for coordinate vectors."""
        x = _vec_dict(x, self.dim)
        y = _vec_dict(y, self.dim)
        out = [Fraction(0)] * self.dim
        for (i, j), vec in self.brackets.items():
            coef = x.get(i, 0) * y.get(j, 0) - x.get(j, 0) * y.get(i, 0)
            if coef:
                for k, c in vec.items():
                    out[k] += coef * c
        return tuple(out)

    def basis_vector(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def index_of(self, name: str) -> int:
        return self.basis_names.index(name)

    def same_constants(self, other: "LieAlgebra") -> bool:
        return self.dim == other.dim and self.brackets == other.brackets

    def is_abelian(self) -> bool:
        return not self.brackets

    def full(self) -> "Subspace":
        return Subspace(self.dim, [self.basis_vector(i) for i in range(self.dim)])

    def __repr__(self):
        label = self.name or "LieAlgebra"
        return f"<{label} dim={self.dim} brackets={len(self.brackets)}>"


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n, stored as an echelon basis."""

    dim_ambient: int
    basis: tuple

    def __init__(self, dim_ambient: int, vectors=()):
        object.__setattr__(self, "dim_ambient", dim_ambient)
        vecs = [tuple(Fraction(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != dim_ambient:
                raise DimensionMismatch("vector length does not match ambient dimension")
        object.__setattr__(self, "basis", tuple(scalars.span_basis(vecs, dim_ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        return scalars.in_span(list(v), list(self.basis), self.dim_ambient)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        return Subspace(self.dim_ambient, scalars.intersect_spans(list(self.basis), list(other.basis),
                                                                  self.dim_ambient))

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.dim_ambient == other.dim_ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.dim_ambient, self.basis))

    def is_subalgebra(self, L: LieAlgebra) -> bool:
        return all(self.contains(L.bracket(u, v)) for u, v in combinations(self.basis, 2))

    def is_abelian(self, L: LieAlgebra) -> bool:
        return all(not any(L.bracket(u, v)) for u, v in combinations(self.basis, 2))

    def is_ideal(self, L: LieAlgebra) -> bool:
        return all(self.contains(L.bracket(L.basis_vector(i), v))
                   for i in range(L.dim) for v in self.basis)


# ---------------------------------------------------------------------------

def jacobi_check(L: LieAlgebra):
    """Triples ``(i, j, k)`` (0-based, ``i<j<k``) whose cyclic sum is nonzero.

    Returns a list of ``((i, j, k), defect_vector)``; an empty list means the
    identity holds.
    """
    n = L.dim
    violations = []
    for i, j, k in combinations(range(n), 3):
        acc = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, coef in L.bracket_basis(a, b).items():
                for out, c2 in L.bracket_basis(m, c).items():
                    acc[out] = acc.get(out, 0) + coef * c2
        defect = {o: v for o, v in acc.items() if v}
        if defect:
            violations.append(((i, j, k), _dense(defect, n)))
    return violations


def check_vector(L: LieAlgebra, x):
    if not isinstance(x, Mapping) and len(x) != L.dim:
        raise DimensionMismatch(f"expected a vector of length {L.dim}, got {len(x)}")


def adjoint_matrix(L: LieAlgebra, x) -> list[list[Fraction]]:
    """Matrix of ad x: column j holds the coordinates of [x, X_j]."""
    check_vector(L, x)
    x = _vec_dict(x, L.dim)
    m = [[Fraction(0)] * L.dim for _ in range(L.dim)]
    for i, xi in x.items():
        for j in range(L.dim):
            for k, c in L.bracket_basis(i, j).items():
                m[k][j] += xi * c
    return m


def bracket_spaces(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vecs = [L.bracket(u, v) for u in a.basis for v in b.basis]
    return Subspace(L.dim, [v for v in vecs if any(v)])


def _series(L: LieAlgebra, step):
    g = L.full()
    out = [g]
    cur = g
    while True:
        nxt = step(cur)
        if nxt.dim == cur.dim:
            break
        out.append(nxt)
        cur = nxt
        if cur.dim == 0:
            break
    return out


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    """``[g, C^1 g, C^2 g, ...]`` up to the first repeated term.

    For a nilpotent algebra the final entry is the zero subspace.
    """
    g = L.full()
    return _series(L, lambda s: bracket_spaces(L, g, s))


def derived_series(L: LieAlgebra) -> list[Subspace]:
    return _series(L, lambda s: bracket_spaces(L, s, s))


def derived_algebra(L: LieAlgebra) -> Subspace:
    g = L.full()
    return bracket_spaces(L, g, g)


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


def nilpotency_step(L: LieAlgebra) -> int | None:
    """Smallest ``s`` with ``C^s g = 0``; None when not nilpotent."""
    series = lower_central_series(L)
    if series[-1].dim != 0:
        return None
    return len(series) - 1


def center(L: LieAlgebra) -> Subspace:
    """Kernel of the stacked system ``[X_i, x] = 0`` for every basis vector ``X_i``."""
    rows = []
    for i in range(L.dim):
        rows.extend(adjoint_matrix(L, L.basis_vector(i)))
    # x in the center iff ad(X_i) x = 0 for all i
    return Subspace(L.dim, scalars.exact_kernel(rows, L.dim))


def quotient_by_ideal(L: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """Quotient algebra on the coordinate complement of the ideal's pivot columns."""
    if not ideal.is_ideal(L):
        raise NotAnIdeal("subspace is not stable under the adjoint action")
    n = L.dim
    rows = [list(v) for v in ideal.basis]
    _, pivots, red = scalars.rref(rows, n) if rows else (0, [], [])
    keep = [k for k in range(n) if k not in pivots]
    pos = {k: a for a, k in enumerate(keep)}

    def project(v):
        v = list(v)
        for row, pc in zip(red, pivots):
            if v[pc]:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, row)]
        return {pos[k]: v[k] for k in keep if v[k]}

    brackets = {}
    for a, b in combinations(range(len(keep)), 2):
        w = project(L.bracket(L.basis_vector(keep[a]), L.basis_vector(keep[b])))
        if w:
            brackets[(a, b)] = w
    return LieAlgebra(len(keep), brackets,
                      [L.basis_names[k] for k in keep], [L.dual_names[k] for k in keep],
                      name=f"{L.name}/I" if L.name else "")


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    n = a.dim
    brackets = dict(a.brackets)
    for (i, j), vec in b.brackets.items():
        brackets[(i + n, j + n)] = {k + n: c for k, c in vec.items()}
    names = list(a.basis_names) + list(b.basis_names)
    duals = list(a.dual_names) + list(b.dual_names)
    if len(set(names)) != len(names) or len(set(duals)) != len(duals):
        names = [f"X{i + 1}" for i in range(a.dim + b.dim)]
        duals = [f"w{i + 1}" for i in range(a.dim + b.dim)]
    name = f"{a.name}+{b.name}" if a.name and b.name else ""
    return LieAlgebra(a.dim + b.dim, brackets, names, duals, name=name)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, name=f"R{n}")
