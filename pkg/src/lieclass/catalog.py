"""Registry of the named Lie algebras and parametric families.

Every builder returns a :class:`CatalogEntry` holding a Jacobi-verified
algebra plus a table of claimed invariants, each tagged with a short source
label.  Families given by Maurer-Cartan equations are transcribed as such
(``d w_k = sum m w_i ^ w_j``) and converted with ``dw(X, Y) = -w([X, Y])``;
families given by brackets are transcribed as brackets.

A transcription that fails the Jacobi identity raises
:class:`PaperInconsistency` carrying the defect; where a family needs a
repair to be a Lie algebra at all, the repaired reading is a separate,
explicitly named ``reading`` parameter.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import LieAlgebra
from .errors import BadParams, JacobiError, PaperInconsistency
from .scalars import to_rational


@dataclass(frozen=True)
class Claim:
    value: object
    citation: str
    mode: str = "exact"  # "exact" or "sampled"


@dataclass
class CatalogEntry:
    id: str
    params: dict
    algebra: LieAlgebra
    expected: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)


@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # int | rational | int_list | rational_list | choice
    default: object
    doc: str = ""
    choices: tuple = ()


@dataclass(frozen=True)
class Family:
    id: str
    params: tuple
    citations: tuple
    doc: str
    builder: Callable


_REGISTRY: dict[str, Family] = {}


def _family(id_, params=(), citations=(), doc=""):
    def deco(fn):
        _REGISTRY[id_] = Family(id_, tuple(params), tuple(citations), doc, fn)
        return fn
    return deco


# ---------------------------------------------------------------------------
# parameter handling

def _coerce(p: Param, value):
    try:
        if p.kind == "int":
            return int(value)
        if p.kind == "rational":
            return to_rational(value if not isinstance(value, float) else str(value))
        if p.kind in ("int_list", "rational_list"):
            if isinstance(value, str):
                value = [v for v in value.replace(";", ",").split(",") if v.strip()]
            elif not isinstance(value, (list, tuple)):
                value = [value]
            conv = int if p.kind == "int_list" else to_rational
            return tuple(conv(v.strip() if isinstance(v, str) else v) for v in value)
        if p.kind == "choice":
            v = str(value)
            if v not in p.choices:
                raise BadParams(f"{p.name} must be one of {', '.join(p.choices)}")
            return v
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        if isinstance(exc, BadParams):
            raise
        raise BadParams(f"bad value for {p.name}: {value!r} ({exc})") from None
    raise BadParams(f"unknown parameter kind {p.kind}")


def _resolve(fam: Family, given: dict) -> dict:
    known = {p.name: p for p in fam.params}
    for k in given:
        if k not in known:
            raise BadParams(f"{fam.id} has no parameter {k!r}")
    out = {}
    for p in fam.params:
        raw = given.get(p.name, p.default)
        out[p.name] = _coerce(p, raw)
    return out


def build(entry_id: str, params: dict | None = None, **kw) -> CatalogEntry:
    """Build a catalog entry; ``params`` and keyword arguments are merged."""
    fam = _REGISTRY.get(entry_id)
    if fam is None:
        raise KeyError(f"unknown catalog entry {entry_id!r}")
    given = dict(params or {})
    given.update(kw)
    resolved = _resolve(fam, given)
    entry = fam.builder(**resolved)
    entry.id = entry_id
    entry.params = resolved
    entry.algebra.name = entry.algebra.name or entry_id
    return entry


def list_entries():
    """``(id, params, citations)`` for every registered entry, in registration order."""
    return [(f.id, f.params, f.citations) for f in _REGISTRY.values()]


def entry_ids() -> list[str]:
    return list(_REGISTRY)


def family(entry_id: str) -> Family:
    return _REGISTRY[entry_id]


# ---------------------------------------------------------------------------
# transcription helpers (1-based, as written in the source tables)

def transcribe(entry_id: str, dim: int, *, mc=None, brackets=None, basis_names=None,
               dual_names=None) -> LieAlgebra:
    """Build from 1-based Maurer-Cartan equations or brackets.

    ``mc[k] = {(i, j): m}`` means ``d w_k = sum m w_i ^ w_j``;
    ``brackets[(i, j)] = {k: c}`` means ``[X_i, X_j] = sum c X_k``.
    Jacobi failures become :class:`PaperInconsistency`.
    """
    try:
        if mc is not None:
            eqs = {k - 1: {(i - 1, j - 1): m for (i, j), m in terms.items()} for k, terms in mc.items()}
            for k, terms in eqs.items():
                for (i, j) in terms:
                    if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                        raise PaperInconsistency(entry_id, [], f"{entry_id}: index out of range")
            return LieAlgebra.from_maurer_cartan(dim, eqs, basis_names=basis_names,
                                                 dual_names=dual_names, name=entry_id)
        table = {}
        for (i, j), vec in (brackets or {}).items():
            if not (1 <= i <= dim and 1 <= j <= dim) or any(not 1 <= k <= dim for k in vec):
                raise PaperInconsistency(entry_id, [], f"{entry_id}: index out of range")
            table[(i - 1, j - 1)] = {k - 1: c for k, c in vec.items()}
        return LieAlgebra(dim, table, basis_names=basis_names, dual_names=dual_names, name=entry_id)
    except JacobiError as exc:
        raise PaperInconsistency(entry_id, exc.violations) from None


def _nonzero(name, values):
    for v in values:
        if v == 0:
            raise BadParams(f"{name} must be nonzero")


def _mc_names(duals):
    return [f"X{d[1:]}" if d.startswith("w") and d[1:].isdigit() else f"X_{d}" for d in duals]


# citation labels
HEIS = "Heisenberg algebra: contact form and orbits of dimension 2p"
FILI = "graded filiform algebras L_n and Q_2p: index and class spectrum"
ORB2 = "algebras whose nontrivial coadjoint orbits have dimension 2"
ORB4 = "algebras whose nontrivial coadjoint orbits have dimension 4"
CHARSEQ = "characteristic sequence of the listed nilpotent algebra"
C1 = "bound c1 <= (sqrt(8n-7)-1)/2 for nilpotent algebras with 4-dimensional orbits"
NILPODD = "nilpotent algebras: every nonzero form has odd class, never Frobenius"
CONTACT5 = "5-dimensional contact nilpotent algebras n5_1, n5_3, n5_6"
CONTACTEX = "contact nilpotent examples with prescribed characteristic sequence"
SIMPLE = "real simple contact algebras: sl(2,R) and so(3)"
SO3_ALL = "so(3): the contact algebra on which every nonzero form is contact"
SO4 = "so(4) = so(3) x so(3): maximal class 5, index 2"
FROB = "Frobenius normal forms up to contraction"
CENTER = "contact algebras have center of dimension at most 1"


def _nilpotent_claims(n, contact=False):
    out = {"nilpotent": Claim(True, NILPODD), "frobenius": Claim(False, NILPODD)}
    if contact:
        out["contact"] = Claim(True, CONTACTEX)
        out["center_dim_at_most"] = Claim(1, CENTER)
    return out


def _e(basis_prefix, n, start=0):
    return [f"{basis_prefix}{i}" for i in range(start, start + n)]


# ---------------------------------------------------------------------------
# Heisenberg and filiform models

@_family("heisenberg", [Param("p", "int", 2, "dimension 2p+1")], (HEIS,),
         "h_{2p+1}: [X_{2k-1}, X_{2k}] = X_{2p+1}")
def _heisenberg(p):
    if p < 1:
        raise BadParams("p must be at least 1")
    n = 2 * p + 1
    L = transcribe("heisenberg", n, brackets={(2 * k - 1, 2 * k): {n: 1} for k in range(1, p + 1)})
    contact_form = tuple(int(i == n - 1) for i in range(n))
    exp = {
        "max_class": Claim(n, HEIS), "index": Claim(1, HEIS), "contact": Claim(True, HEIS),
        "orbit_dims": Claim({0, 2 * p}, HEIS, "sampled"),
        "spectrum": Claim({1, n}, HEIS, "sampled"),
        "form_classes": Claim(((contact_form, n),), HEIS),
        "char_sequence": Claim((2,) + (1,) * (n - 2), CHARSEQ),
        "center_dim_at_most": Claim(1, CENTER),
    }
    exp.update({k: v for k, v in _nilpotent_claims(n).items() if k not in exp})
    return CatalogEntry("heisenberg", {}, L, exp)


@_family("L", [Param("n", "int", 5, "dimension, n >= 3")], (FILI,),
         "L_n on e0..e_{n-1}: [e0, ei] = e_{i+1}, i = 1..n-2")
def _filiform_L(n):
    if n < 3:
        raise BadParams("n must be at least 3")
    br = {(0, i): {i + 1: 1} for i in range(1, n - 1)}
    L = LieAlgebra(n, br, _e("e", n), _e("w", n), name=f"L{n}")
    exp = {
        "index": Claim(n - 2, FILI), "max_class": Claim(3, FILI),
        "spectrum": Claim({1, 3}, FILI, "sampled"),
        "orbit_dims": Claim({0, 2}, FILI, "sampled"),
        "class_upper_bound": Claim(3, FILI),
        "char_sequence": Claim((n - 1, 1), CHARSEQ),
        "nilpotency_step": Claim(n - 1, CHARSEQ),
        "contact": Claim(n == 3, FILI),
    }
    exp.update(_nilpotent_claims(n))
    return CatalogEntry("L", {}, L, exp)


@_family("Q", [Param("n", "int", 6, "even dimension 2p >= 4")], (FILI,),
         "Q_{2p} on e0..e_{2p-1}: [e0, ei] = e_{i+1}, [ei, e_{2p-1-i}] = (-1)^(i-1) e_{2p-1}")
def _filiform_Q(n):
    if n < 4 or n % 2:
        raise BadParams("n must be even and at least 4")
    p = n // 2
    br = {(0, i): {i + 1: 1} for i in range(1, n - 2)}
    for i in range(1, p):
        br[(i, n - 1 - i)] = {n - 1: (-1) ** (i - 1)}
    L = LieAlgebra(n, br, _e("e", n), _e("w", n), name=f"Q{n}")
    exp = {
        "index": Claim(2, FILI), "max_class": Claim(n - 1, FILI),
        "spectrum": Claim({1, 3, n - 1}, FILI, "sampled"),
        "orbit_dims": Claim({0, 2, n - 2}, FILI, "sampled"),
        "char_sequence": Claim((n - 1, 1), CHARSEQ),
    }
    exp.update(_nilpotent_claims(n))
    return CatalogEntry("Q", {}, L, exp)


# ---------------------------------------------------------------------------
# orbits of dimension 2

def _orbit2_claims():
    return {
        "class_upper_bound": Claim(3, ORB2),
        "nonclosed_orbit_dims": Claim({2}, ORB2, "sampled"),
    }


@_family("L_model", [Param("c", "int_list", (3, 2, 1), "characteristic sequence, ending in 1")],
         (ORB2, CHARSEQ), "L_{n,c}: ad U has Jordan chains of the sizes in c (last 1 is U itself)")
def _l_model(c):
    if not c or c[-1] != 1 or list(c) != sorted(c, reverse=True) or min(c) < 1:
        raise BadParams("c must be weakly decreasing, positive and end with 1")
    n = sum(c)
    if n < 2:
        raise BadParams("c must sum to at least 2")
    chains = list(c[:-1])
    br = {}
    pos = 1
    for size in chains:
        for a in range(size - 1):
            br[(0, pos + a)] = {pos + a + 1: 1}
        pos += size
    names = ["U"] + [f"X{i}" for i in range(1, n)]
    duals = ["u"] + [f"w{i}" for i in range(1, n)]
    L = LieAlgebra(n, br, names, duals, name="L_model")
    exp = _orbit2_claims()
    exp["char_sequence"] = Claim(tuple(c), CHARSEQ)
    exp.update(_nilpotent_claims(n))
    return CatalogEntry("L_model", {}, L, exp, [f"n = sum(c) = {n}"])


_DEFAULT_ACTION = "1,1,0;0,1,0;0,0,2"


def _m_plus_abelian(entry_id, n, action):
    """``m + I``: one vector acting on an abelian ideal of dimension n-1 by ``action``."""
    k = n - 1
    if len(action) != k * k:
        raise BadParams(f"action must list {k * k} entries (row-major {k}x{k})")
    br = {}
    for j in range(k):
        col = {i + 1: action[i * k + j] for i in range(k) if action[i * k + j]}
        if col:
            br[(0, j + 1)] = col
    return LieAlgebra(n, br, name=entry_id)


@_family("dim4_family", [Param("variant", "choice", "1", "", ("1", "2", "m+I")),
                         Param("action", "rational_list", "1,1,0,0,1,0,0,0,2",
                               "3x3 action of m on I (variant m+I)")],
         (ORB2,), "4-dimensional algebras with orbits of dimension <= 2")
def _dim4(variant, action):
    if variant == "1":
        L = transcribe("dim4_family", 4, mc={3: {(1, 2): 1}, 1: {(1, 4): 1}, 2: {(2, 4): -1}})
    elif variant == "2":
        L = transcribe("dim4_family", 4, mc={3: {(1, 2): 1}, 1: {(2, 4): 1}, 2: {(1, 4): -1}})
    else:
        L = _m_plus_abelian("dim4_family", 4, action)
    return CatalogEntry("dim4_family", {}, L, _orbit2_claims())


@_family("dim5_family", [Param("variant", "choice", "1", "", ("1", "m+I")),
                         Param("action", "rational_list", "0,0,0,0,1,0,0,0,0,1,0,0,0,0,1,0",
                               "4x4 action of m on I (variant m+I)")],
         (ORB2,), "5-dimensional algebras with orbits of dimension <= 2")
def _dim5(variant, action):
    if variant == "1":
        L = transcribe("dim5_family", 5, mc={3: {(1, 2): 1}, 4: {(1, 3): 1}, 5: {(2, 3): 1}})
    else:
        L = _m_plus_abelian("dim5_family", 5, action)
    return CatalogEntry("dim5_family", {}, L, _orbit2_claims())


@_family("dim6_family", [Param("variant", "choice", "1", "", ("1", "m+I")),
                         Param("action", "rational_list", "1,0,0,0,0,0,2,0,0,0,0,0,3,0,0,0,0,0,0,0,0,0,0,1,0",
                               "5x5 action of m on I (variant m+I)")],
         (ORB2,), "6-dimensional algebras with orbits of dimension <= 2")
def _dim6(variant, action):
    if variant == "1":
        L = transcribe("dim6_family", 6, mc={3: {(1, 2): 1}, 5: {(2, 4): 1}, 6: {(1, 4): 1}})
    else:
        L = _m_plus_abelian("dim6_family", 6, action)
    return CatalogEntry("dim6_family", {}, L, _orbit2_claims())


# ---------------------------------------------------------------------------
# orbits of dimension 4

def _orbit4_claims(solvable=None):
    out = {
        "class_upper_bound": Claim(5, ORB4),
        "nonclosed_classes": Claim({4, 5}, ORB4, "sampled"),
        "nonclosed_orbit_dims": Claim({4}, ORB4, "sampled"),
    }
    if solvable is not None:
        out["solvable"] = Claim(solvable, ORB4)
    return out


_N_FAMILIES = {
    "kaplan7": (7, {4: {(1, 2): 1, (3, 7): 1}, 5: {(1, 3): 1, (2, 7): -1}, 6: {(2, 3): 1, (1, 7): 1}}),
    "n81": (8, {4: {(1, 2): 1, (3, 7): 1}, 5: {(1, 3): 1, (2, 8): 1}, 6: {(2, 3): 1, (1, 7): 1}}),
    "n91": (9, {4: {(1, 2): 1, (3, 7): 1}, 5: {(1, 3): 1, (2, 8): 1}, 6: {(2, 3): 1, (1, 9): 1}}),
    "n82": (8, {4: {(1, 2): 1, (3, 7): 1}, 5: {(1, 3): 1, (2, 7): 1}, 6: {(1, 7): 1, (2, 8): 1}}),
    "n92": (9, {4: {(1, 2): 1, (3, 7): 1}, 5: {(1, 3): 1, (2, 9): 1}, 6: {(1, 7): 1, (2, 8): 1}}),
    "n83": (8, {4: {(1, 2): 1, (3, 7): 1}, 5: {(1, 8): 1, (2, 7): 1}, 6: {(1, 7): 1, (3, 8): 1}}),
    "n84": (8, {4: {(1, 7): 1, (2, 8): 1}, 5: {(1, 8): 1, (3, 7): 1}, 6: {(2, 7): 1, (1, 8): 1}}),
}

_N_DOCS = {
    "kaplan7": "Kaplan (generalized Heisenberg) algebra, dim [m,m] = 3",
    "n81": "dim [m,m] = 3, dimension 8",
    "n91": "dim [m,m] = 3, dimension 9",
    "n82": "dim [m,m] = 2, dimension 8",
    "n92": "dim [m,m] = 2, dimension 9",
    "n83": "dim [m,m] = 1, dimension 8",
    "n84": "dim [m,m] = 0, dimension 8",
}


def _make_n_family(eid):
    dim, eqs = _N_FAMILIES[eid]

    @_family(eid, (), (ORB4, CHARSEQ) if eid == "kaplan7" else (ORB4,), _N_DOCS[eid])
    def _builder():
        L = transcribe(eid, dim, mc=eqs)
        exp = _orbit4_claims()
        exp.update(_nilpotent_claims(dim))
        notes = []
        if eid == "kaplan7":
            exp["char_sequence"] = Claim((2, 2, 2, 1), CHARSEQ)
            exp["contact"] = Claim(False, CENTER)
            exp["center_dim"] = Claim(3, CHARSEQ)
        if eid == "n84":
            notes.append("transcribed verbatim; d w6 repeats the w1^w8 term of d w5's partner")
        return CatalogEntry(eid, {}, L, exp, notes)
    return _builder


for _eid in _N_FAMILIES:
    _make_n_family(_eid)


@_family("g9", [Param("a", "rational_list", "1,1,1,1", "a1..a4, all nonzero")], (ORB4,),
         "7-dimensional solvable algebra with dim m = 4")
def _g9(a):
    if len(a) != 4:
        raise BadParams("g9 takes four parameters a1..a4")
    _nonzero("a_i", a)
    a1, a2, a3, a4 = a
    L = transcribe("g9", 7, mc={
        1: {(1, 2): 1, (3, 4): 1},
        3: {(3, 2): 1, (1, 4): a1},
        5: {(2, 5): 1, (4, 6): a2},
        6: {(4, 5): 1, (2, 6): a3},
        7: {(1, 5): 1, (3, 6): a4},
    })
    exp = _orbit4_claims(solvable=True)
    exp["nilpotent"] = Claim(False, ORB4)
    return CatalogEntry("g9", {}, L, exp, ["Jacobi holds exactly when a1 = a2 and a3 = a4 = 1"])


@_family("g4", [Param("lam", "rational", -1, "lambda < 0")], (ORB4,),
         "g4(lambda): d w1 = a1^w1 + a2^w2, d w2 = a1^w2 + lambda a2^w1")
def _g4(lam):
    if lam >= 0:
        raise BadParams("lambda must be negative")
    duals = ["a1", "a2", "w1", "w2"]
    L = transcribe("g4", 4, mc={3: {(1, 3): 1, (2, 4): 1}, 4: {(1, 4): 1, (2, 3): lam}},
                   basis_names=_mc_names(duals), dual_names=duals)
    exp = _orbit4_claims(solvable=True)
    exp.update({"nilpotent": Claim(False, ORB4), "frobenius": Claim(True, ORB4),
                "max_class": Claim(4, ORB4), "class_upper_bound": Claim(4, ORB4)})
    return CatalogEntry("g4", {}, L, exp)


@_family("solvable_family",
         [Param("l", "int", 3, "l >= 2"), Param("s", "int", 0, "s >= 0"),
          Param("a", "rational_list", "-1,1,-1", "a_1..a_{2l-3}, nonzero")],
         (ORB4,), "solvable non-nilpotent m + I with dim m = 2")
def _solvable(l, s, a):
    if l < 2 or s < 0:
        raise BadParams("need l >= 2 and s >= 0")
    if len(a) != 2 * l - 3:
        raise BadParams(f"expected {2 * l - 3} parameters a_1..a_(2l-3)")
    _nonzero("a_i", a)
    n = 2 * l + 3 * (s + 1)
    mc = {1: {(1, 2): 1, (3, 4): 1}, 3: {(3, 2): 1, (1, 4): a[0]}}
    for m in range(3, l + 1):
        mc[2 * m - 1] = {(2, 2 * m - 1): 1, (4, 2 * m): a[2 * m - 5]}
        mc[2 * m] = {(2, 2 * m): 1, (4, 2 * m - 1): a[2 * m - 4]}
    for j in range(s + 1):
        mc[2 * l + 1 + 3 * j] = {(2, 2 * l + 2 + 3 * j): 1, (4, 2 * l + 3 + 3 * j): 1}
    L = transcribe("solvable_family", n, mc=mc)
    exp = _orbit4_claims(solvable=True)
    exp["nilpotent"] = Claim(False, ORB4)
    return CatalogEntry("solvable_family", {}, L, exp, [f"n = 2l + 3(s+1) = {n}"])


@_family("h_p2", [Param("p", "int", 2, "p >= 1")], (ORB4, CHARSEQ),
         "h(p,2): d w_i = a1^b_{2i-1} + a2^b_{2i}, dimension 3p+2")
def _h_p2(p):
    if p < 1:
        raise BadParams("p must be at least 1")
    n = 3 * p + 2
    duals = [f"w{i}" for i in range(1, p + 1)] + ["a1", "a2"] + [f"b{i}" for i in range(1, 2 * p + 1)]
    a1, a2 = p + 1, p + 2
    b = lambda i: p + 2 + i  # noqa: E731  (1-based position of b_i)
    mc = {i: {(a1, b(2 * i - 1)): 1, (a2, b(2 * i)): 1} for i in range(1, p + 1)}
    L = transcribe("h_p2", n, mc=mc, basis_names=_mc_names(duals), dual_names=duals)
    exp = _orbit4_claims()
    exp["char_sequence"] = Claim((2,) * p + (1,) * (n - 2 * p), CHARSEQ)
    exp["c1_bound"] = Claim(True, C1)
    exp.update(_nilpotent_claims(n))
    return CatalogEntry("h_p2", {}, L, exp)


def _strict_names(blocks):
    names, duals = [], []
    for s, size in enumerate(blocks, start=1):
        for i in range(1, size + 1):
            names.append(f"X{s}_{i}")
            duals.append(f"w{s}_{i}")
    return names + ["T2", "T1"], duals + ["a2", "a1"]


@_family("strict_decreasing",
         [Param("variant", "choice", "n1", "", ("n1", "n2")),
          Param("l", "int", 3, "c1 = l >= 3"),
          Param("reading", "choice", "repaired", "n2 only: verbatim or repaired", ("verbatim", "repaired"))],
         (ORB4, CHARSEQ, C1),
         "nilpotent algebras with strictly decreasing characteristic sequence")
def _strict(variant, l, reading):
    if l < 3:
        raise BadParams("l must be at least 3")
    blocks = list(range(l, 0, -1)) if variant == "n1" else list(range(l, 1, -1))
    names, duals = _strict_names(blocks)
    n = len(names)
    pos = {}
    k = 0
    for s, size in enumerate(blocks, start=1):
        for i in range(1, size + 1):
            pos[(s, i)] = k
            k += 1
    t2, t1 = n - 2, n - 1
    br = {}
    for s, size in enumerate(blocks, start=1):
        for i in range(1, size):
            br[(t1, pos[(s, i)])] = {pos[(s, i + 1)]: 1}
        if s >= 2:
            for i in range(1, size + 1):
                br[(t2, pos[(s, i)])] = {pos[(s - 1, i + 1)]: 1}
    notes = []
    if variant == "n2":
        if reading == "verbatim":
            br[(t2, pos[(1, l)])] = {pos[(l - 1, 2)]: 1}
        else:
            notes.append("repaired reading: the bracket [T2, X1_l] = X(l-1)_2 is dropped "
                         "(it breaks [ad T1, ad T2] = 0)")
    try:
        L = LieAlgebra(n, br, names, duals, name=f"strict_{variant}")
    except JacobiError as exc:
        raise PaperInconsistency("strict_decreasing", exc.violations) from None
    tail = (1, 1, 1) if variant == "n1" else (1, 1)
    seq = tuple(range(l, 1, -1)) + tail
    exp = _orbit4_claims()
    exp["char_sequence"] = Claim(seq, CHARSEQ)
    exp["c1_bound"] = Claim(True, C1)
    exp.update(_nilpotent_claims(n))
    notes.append(f"n = l(l+1)/2 + {2 if variant == 'n1' else 1} = {n}")
    return CatalogEntry("strict_decreasing", {}, L, exp, notes)


@_family("two_step_general",
         [Param("l", "int", 3, "number of blocks of size 2"), Param("s", "int", 2, "0 <= s <= l"),
          Param("beta", "rational_list", "0,1,0,0,0,1",
                "s rows of l coefficients: beta_i over w1_1..w1_l (row-major)")],
         (ORB4, CHARSEQ), "2-step nilpotent m + I with c(g) = (2,...,2,1,...,1)")
def _two_step(l, s, beta):
    if l < 1 or not 0 <= s <= l:
        raise BadParams("need l >= 1 and 0 <= s <= l")
    if len(beta) != s * l:
        raise BadParams(f"beta must list s*l = {s * l} coefficients")
    rows = [beta[i * l:(i + 1) * l] for i in range(s)]
    # w1_i ^ beta_j - w1_j ^ beta_i != 0 for i != j
    for i in range(s):
        for j in range(i + 1, s):
            m = {}
            for k in range(l):
                for (x, y, c) in ((i, k, rows[j][k]), (j, k, -rows[i][k])):
                    if c and x != y:
                        key = (min(x, y), max(x, y))
                        m[key] = m.get(key, 0) + (c if x < y else -c)
            if not any(m.values()):
                raise BadParams(f"beta rows {i + 1} and {j + 1} violate the nondegeneracy condition")
    duals = (["a1", "a2"] + [f"w1_{i}" for i in range(1, l + 1)] + [f"w2_{i}" for i in range(1, l + 1)]
             + [f"b{i}" for i in range(s + 1, l + 1)])
    n = len(duals)
    w1 = lambda i: 2 + i  # noqa: E731
    w2 = lambda i: 2 + l + i  # noqa: E731
    bpos = lambda i: 2 + 2 * l + (i - s)  # noqa: E731
    mc = {}
    for i in range(1, l + 1):
        terms = {(1, w1(i)): 1}
        if i <= s:
            for k, c in enumerate(rows[i - 1], start=1):
                if c:
                    terms[(2, w1(k))] = c
        else:
            terms[(2, bpos(i))] = 1
        mc[w2(i)] = terms
    L = transcribe("two_step_general", n, mc=mc, basis_names=_mc_names(duals), dual_names=duals)
    exp = _orbit4_claims()
    exp["char_sequence"] = Claim((2,) * l + (1,) * (l - s + 2), CHARSEQ)
    exp.update(_nilpotent_claims(n))
    return CatalogEntry("two_step_general", {}, L, exp, [f"n = 2 + 2l + (l - s) = {n}"])


# ---------------------------------------------------------------------------
# contact algebras

_N5 = {
    "1": ({(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (2, 3): {5: 1}}, 4, (4, 1)),
    "3": ({(1, 2): {3: 1}, (1, 3): {4: 1}, (2, 5): {4: 1}}, 3, None),
    "6": ({(1, 2): {3: 1}, (4, 5): {3: 1}}, 2, None),
}


@_family("nilp5_contact", [Param("variant", "choice", "1", "", ("1", "3", "6"))], (CONTACT5,),
         "5-dimensional contact nilpotent algebras n5_1, n5_3, n5_6")
def _nilp5(variant):
    br, step, seq = _N5[variant]
    L = transcribe(f"n5_{variant}", 5, brackets=br)
    exp = {"contact": Claim(True, CONTACT5), "max_class": Claim(5, CONTACT5),
           "index": Claim(1, CONTACT5), "nilpotency_step": Claim(step, CONTACT5),
           "center_dim_at_most": Claim(1, CENTER)}
    if seq:
        exp["char_sequence"] = Claim(seq, CHARSEQ)
    exp.update({k: v for k, v in _nilpotent_claims(5).items() if k not in exp})
    return CatalogEntry("nilp5_contact", {}, L, exp)


@_family("contact7_a", (), (CONTACTEX,), "7-dimensional contact algebra with c(g) = (3,1,1,1,1)")
def _contact7_a():
    L = transcribe("contact7_a", 7, brackets={(1, 2): {3: 1}, (1, 3): {4: 1}, (2, 5): {4: 1}, (6, 7): {4: 1}})
    exp = {"char_sequence": Claim((3, 1, 1, 1, 1), CONTACTEX), "max_class": Claim(7, CONTACTEX)}
    exp.update(_nilpotent_claims(7, contact=True))
    return CatalogEntry("contact7_a", {}, L, exp)


@_family("contact7_b", [Param("alpha", "rational", 1, "alpha != 0")], (CONTACTEX,),
         "7-dimensional contact algebras with c(g) = (3,2,1,1)")
def _contact7_b(alpha):
    _nonzero("alpha", [alpha])
    L = transcribe("contact7_b", 7, brackets={
        (1, 2): {3: 1}, (1, 3): {4: 1}, (1, 5): {6: 1}, (2, 5): {7: 1},
        (2, 7): {4: 1}, (5, 6): {4: 1}, (5, 7): {4: alpha}})
    exp = {"char_sequence": Claim((3, 2, 1, 1), CONTACTEX), "max_class": Claim(7, CONTACTEX)}
    exp.update(_nilpotent_claims(7, contact=True))
    return CatalogEntry("contact7_b", {}, L, exp)


@_family("contact9", [Param("alpha", "rational", 1, "alpha != 0")], (CONTACTEX,),
         "9-dimensional 4-step contact algebra with c(g) = (4,3,1,1)")
def _contact9(alpha):
    _nonzero("alpha", [alpha])
    br = {(1, i): {i + 1: 1} for i in (2, 3, 4, 6, 7)}
    br.update({(6, 9): {3: 1}, (7, 9): {4: 1}, (8, 9): {5: 1},
               (2, 6): {4: 1 + alpha}, (3, 6): {5: 1}, (2, 7): {5: alpha}})
    L = transcribe("contact9", 9, brackets=br)
    exp = {"char_sequence": Claim((4, 3, 1, 1), CONTACTEX), "max_class": Claim(9, CONTACTEX)}
    exp.update(_nilpotent_claims(9, contact=True))
    return CatalogEntry("contact9", {}, L, exp)


# ---------------------------------------------------------------------------
# semisimple

def _simple_claims():
    return {"max_class": Claim(3, SIMPLE), "contact": Claim(True, SIMPLE), "index": Claim(1, SIMPLE),
            "orbit_dims": Claim({2}, SIMPLE, "sampled"),
            "solvable": Claim(False, SIMPLE), "center_dim": Claim(0, SIMPLE)}


@_family("sl2", (), (SIMPLE,), "sl(2,R): [e1,e2] = e3, [e3,e1] = 2e1, [e3,e2] = -2e2")
def _sl2():
    L = LieAlgebra(3, {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}}, _e("e", 3, 1), _e("w", 3, 1),
                   name="sl2")
    return CatalogEntry("sl2", {}, L, _simple_claims())


@_family("so3", (), (SIMPLE,), "so(3): [X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X2")
def _so3():
    L = transcribe("so3", 3, brackets={(1, 2): {3: 1}, (2, 3): {1: 1}, (3, 1): {2: 1}})
    exp = _simple_claims()
    exp["spectrum"] = Claim({3}, SO3_ALL)
    return CatalogEntry("so3", {}, L, exp)


@_family("so4", (), (SO4,), "so(4) given by its Maurer-Cartan equations")
def _so4():
    L = transcribe("so4", 6, mc={
        1: {(2, 4): -1, (3, 5): -1}, 2: {(1, 4): 1, (3, 6): -1}, 3: {(1, 5): 1, (2, 6): 1},
        4: {(1, 2): -1, (5, 6): -1}, 5: {(1, 3): -1, (4, 6): 1}, 6: {(2, 3): -1, (4, 5): -1}})
    dual_basis = tuple((tuple(int(i == j) for i in range(6)), 5) for j in range(6))
    exp = {"max_class": Claim(5, SO4), "index": Claim(2, SO4), "solvable": Claim(False, SO4),
           "form_classes": Claim(dual_basis + (((1, 0, 0, 0, 0, 1), 3),), SO4),
           "class_upper_bound": Claim(5, SO4)}
    return CatalogEntry("so4", {}, L, exp)


# ---------------------------------------------------------------------------
# Frobenius normal forms

@_family("frobenius_complex", [Param("a", "rational_list", "1", "a_1..a_{p-1}")], (FROB,),
         "g_{a_1..a_{p-1}}: d w1 = w1^w2 + sum w_{2k+1}^w_{2k+2}")
def _frob_complex(a):
    if not a:
        raise BadParams("need at least one parameter")
    p = len(a) + 1
    n = 2 * p
    mc = {1: {(1, 2): 1}}
    for k in range(1, p):
        mc[1][(2 * k + 1, 2 * k + 2)] = 1
        mc[2 * k + 1] = {(2, 2 * k + 1): a[k - 1]}
        mc[2 * k + 2] = {(2, 2 * k + 2): -(1 + a[k - 1])}
    L = transcribe("frobenius_complex", n, mc=mc)
    w1 = tuple(int(i == 0) for i in range(n))
    eig = sorted([Fraction(-1), Fraction(0)] + [Fraction(x) for x in a] + [-1 - Fraction(x) for x in a])
    exp = {"frobenius": Claim(True, FROB), "max_class": Claim(n, FROB), "index": Claim(0, FROB),
           "form_classes": Claim(((w1, n),), FROB),
           "principal_spectrum": Claim((1, tuple(eig)), FROB),
           "scaling_fixed_point": Claim((2, 0) + (1,) * (n - 2), FROB)}
    return CatalogEntry("frobenius_complex", {}, L, exp)


@_family("frobenius_real",
         [Param("p", "int", 3, "dimension 2p"), Param("s", "int", 1, "number of 4-blocks, 2s <= p-1"),
          Param("a", "rational_list", "1", "a_1..a_s"), Param("b", "rational_list", "1", "b_1..b_s"),
          Param("c", "rational_list", "", "c_2..c_{p-2s} for the 2-blocks"),
          Param("reading", "choice", "consistent", "", ("consistent", "verbatim"))],
         (FROB,), "real Frobenius normal forms: [X1,X2] = [X_{2k-1},X_{2k}] = X1")
def _frob_real(p, s, a, b, c, reading):
    if p < 1 or s < 0 or 2 * s > p - 1:
        raise BadParams("need p >= 1 and 0 <= 2s <= p-1")
    if len(a) != s or len(b) != s:
        raise BadParams("a and b must each have s entries")
    tail = max(0, p - 2 * s - 1)
    if len(c) != tail:
        raise BadParams(f"c must have p-2s-1 = {tail} entries")
    n = 2 * p
    half = Fraction(1, 2)
    br = {(1, 2): {1: 1}}
    for k in range(2, p + 1):
        br[(2 * k - 1, 2 * k)] = {1: 1}
    for k in range(1, s + 1):
        ak, bk = a[k - 1], b[k - 1]
        i1, i2, i3, i4 = 4 * k - 1, 4 * k, 4 * k + 1, 4 * k + 2
        br[(2, i1)] = {i1: ak, i3: bk}
        br[(2, i3)] = {i1: -bk, i3: ak}
        if reading == "verbatim":
            br[(2, i2)] = {i2: -1 - ak, i4: -bk}
            br[(2, i4)] = {i2: bk, i4: (-1 - ak) * bk}
        else:
            br[(2, i2)] = {i2: -1 - ak, i4: bk}
            br[(2, i4)] = {i2: -bk, i4: -1 - ak}
    for k in range(2, p - 2 * s + 1):
        i1, i2 = 4 * s + 2 * k - 1, 4 * s + 2 * k
        if reading == "verbatim":
            bk = b[k - 1] if k - 1 < len(b) else Fraction(0)
            br[(2, i1)] = {i1: -half, 4 * k + 2 * k: bk}
            br[(2, i2)] = {i1: -bk, i2: -half}
        else:
            ck = c[k - 2]
            br[(2, i1)] = {i1: -half, i2: ck}
            br[(2, i2)] = {i1: -ck, i2: -half}
    L = transcribe("frobenius_real", n, brackets=br)
    exp = {"frobenius": Claim(True, FROB), "max_class": Claim(n, FROB), "index": Claim(0, FROB)}
    notes = []
    if reading == "consistent":
        notes.append("consistent reading: ad X2 acts on each 4-block by a +- ib on (X_{4k-1}, X_{4k+1}) "
                     "and by -1-a +- ib on (X_{4k}, X_{4k+2}); the 2-blocks carry their own c_k")
    return CatalogEntry("frobenius_real", {}, L, exp, notes)
