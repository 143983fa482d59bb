"""Characteristic sequences of nilpotent Lie algebras.

``c(X)`` is the decreasing list of Jordan block sizes of the nilpotent
operator ``ad X``; ``c(g)`` is its lexicographic maximum over ``X`` outside
the derived algebra.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm

from . import kernels
from .algebra import LieAlgebra, adjoint_matrix, derived_algebra, is_nilpotent
from .cartan import is_contact
from .errors import InDerivedAlgebra, NotNilpotent


@dataclass(frozen=True, order=True)
class CharSequence:
    parts: tuple
    witness: tuple = field(default=(), compare=False)
    stable: bool = field(default=False, compare=False)

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"not a weakly decreasing positive sequence: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


def _integral(m):
    # clearing denominators keeps every kernel dimension of every power
    den = 1
    for row in m:
        for v in row:
            den = lcm(den, Fraction(v).denominator)
    return [[int(Fraction(v) * den) for v in row] for row in m]


def _int_mul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x) for col in cols] for row in a]


def jordan_blocks_nilpotent(m) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent rational matrix, largest first."""
    n = len(m)
    if n == 0:
        return ()
    m = _integral(m)
    kernel_dims = [0]
    power = m
    for _ in range(n):
        kernel_dims.append(n - kernels.int_rank(power, n))
        if kernel_dims[-1] == n:
            break
        power = _int_mul(power, m)
    if kernel_dims[-1] != n:
        raise NotNilpotent("matrix is not nilpotent")
    # at_least[i]: number of blocks of size >= i
    at_least = [kernel_dims[i] - kernel_dims[i - 1] for i in range(1, len(kernel_dims))]
    at_least.append(0)
    sizes = []
    for i in range(len(at_least) - 1, 0, -1):
        sizes.extend([i] * (at_least[i - 1] - at_least[i]))
    return tuple(sizes)


def _require_nilpotent(L: LieAlgebra):
    if not is_nilpotent(L):
        raise NotNilpotent(f"{L.name or 'algebra'} is not nilpotent")


def characteristic_sequence_of(L: LieAlgebra, x) -> CharSequence:
    _require_nilpotent(L)
    x = tuple(Fraction(v) for v in x)
    if derived_algebra(L).contains(x):
        raise InDerivedAlgebra("X lies in the derived algebra")
    return CharSequence(jordan_blocks_nilpotent(adjoint_matrix(L, x)), x)


def _candidates(L: LieAlgebra, derived, count: int, rng: random.Random, bound: int):
    out = []
    while len(out) < count:
        v = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(L.dim))
        if not derived.contains(v):
            out.append(v)
    return out


def characteristic_sequence(L: LieAlgebra, budget: int = 16, seed=0) -> CharSequence:
    """``c(g)`` with a witness; sampled, certified stable under budget doubling.

    Deterministic candidates (basis vectors and pairwise sums outside the
    derived algebra) come first, then batches of seeded random vectors of
    size ``budget``, ``2*budget``, ...  The search stops once the maximum has
    survived two successive doublings.
    """
    _require_nilpotent(L)
    derived = derived_algebra(L)
    n = L.dim
    basis = [L.basis_vector(i) for i in range(n)]
    best = None

    def consider(v):
        nonlocal best
        if derived.contains(v):
            return
        parts = jordan_blocks_nilpotent(adjoint_matrix(L, v))
        if best is None or parts > best[0]:
            best = (parts, v)

    for v in basis:
        consider(v)
    for a, b in combinations(basis, 2):
        consider(tuple(x + y for x, y in zip(a, b)))
    rng = random.Random(seed)
    batch, unchanged, bound = max(1, budget), 0, 2
    while unchanged < 2:
        before = best[0]
        for v in _candidates(L, derived, batch, rng, bound):
            consider(v)
        unchanged = unchanged + 1 if best[0] == before else 0
        batch *= 2
        bound *= 2
    return CharSequence(best[0], best[1], stable=True)


def check_c1_bound(L: LieAlgebra, seq: CharSequence | None = None) -> bool:
    """``c1 <= (sqrt(8n-7) - 1)/2``, checked as ``(2*c1 + 1)**2 <= 8n - 7``."""
    if seq is None:
        seq = characteristic_sequence(L)
    c1 = seq.parts[0]
    return (2 * c1 + 1) ** 2 <= 8 * L.dim - 7


def contact_charseq_constraint(L: LieAlgebra, seq: CharSequence | None = None) -> bool:
    """Contact nilpotent algebras have ``c2 != c1``; vacuously true otherwise."""
    if seq is None:
        seq = characteristic_sequence(L)
    if not is_contact(L):
        return True
    return len(seq.parts) < 2 or seq.parts[1] != seq.parts[0]
