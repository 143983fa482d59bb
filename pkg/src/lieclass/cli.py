"""Command-line front end: ``lieclass COMMAND [FILE | --catalog ID] [options]``.

Exit codes: 0 success, 1 negative verdict (``verify``, failed ``check``,
inconsistent catalog transcription), 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import cartan, catalog, charseq, deform, dsl
from .algebra import center, is_nilpotent, is_solvable, jacobi_check
from .errors import (BadParams, DimensionMismatch, InDerivedAlgebra, LieClassError, NotClosed, NotNilpotent,
                     NotSymplectic, OddDimension, PaperInconsistency, SingularScaling, ZeroForm)
from .forms import KForm, ce_differential
from .scalars import LaurentPoly, format_rational
from .verify import verify_entry

COMMANDS = ("check", "class", "orbit-dim", "index", "charseq", "contact", "frobenius", "spectrum",
            "extend", "deform-check", "contract", "catalog", "verify")

U64 = 2 ** 64


class InputError(Exception):
    """Bad user input: exit code 2."""


@dataclass
class Report:
    subject: str
    command: str
    parameters: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    exit_code: int = 0

    def tree(self) -> dict:
        out = {"command": self.command, "parameters": self.parameters, "results": self.results,
               "subject": self.subject}
        if self.provenance:
            out["provenance"] = self.provenance
        return _plain(out)

    def to_text(self) -> str:
        return "\n".join(_text_lines(self.tree(), 0)) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.tree(), sort_keys=True, indent=2) + "\n"


def _plain(x):
    """Reduce to dict/list/str/int/bool/None with canonical ordering."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else format_rational(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        items = [_plain(v) for v in x]
        return sorted(items, key=lambda v: (isinstance(v, str), v if not isinstance(v, str) else 0, str(v)))
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


def _scalar_text(v):
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _text_lines(node, depth):
    pad = "  " * depth
    lines = []
    if isinstance(node, dict):
        for k in sorted(node):
            v = node[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text_lines(v, depth + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v) if not isinstance(v, (dict, list)) else ('{}' if isinstance(v, dict) else '[]')}")
    elif isinstance(node, list):
        if all(not isinstance(v, (dict, list, str)) for v in node):
            lines.append(f"{pad}[{', '.join(_scalar_text(v) for v in node)}]")
        elif all(not isinstance(v, (dict, list)) for v in node):
            lines.extend(f"{pad}- {_scalar_text(v)}" for v in node)
        else:
            for v in node:
                sub = _text_lines(v, depth + 1)
                lines.append(f"{pad}-")
                lines.extend(sub)
    else:
        lines.append(f"{pad}{_scalar_text(node)}")
    return lines


# ---------------------------------------------------------------------------
# inputs

def _parse_params(items) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise InputError(f"--param expects KEY=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _load_subject(args):
    """(algebra, subject id, catalog entry or None)."""
    if args.catalog and args.file:
        raise InputError("give either FILE or --catalog, not both")
    if args.catalog:
        try:
            entry = catalog.build(args.catalog, _parse_params(args.param))
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from None
        return entry.algebra, args.catalog, entry
    if not args.file:
        raise InputError("an input FILE or --catalog ID is required")
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {args.file}: {exc}") from None
    check = args.command != "check"
    try:
        L = dsl.load(text, check=check)
    except dsl.ParseError as exc:
        raise InputError(exc.render(args.file)) from None
    return L, args.file, None


def _form(args, L):
    if not args.form:
        raise InputError("--form is required for this command")
    try:
        return dsl.form_vector(args.form, L)
    except dsl.ParseError as exc:
        raise InputError(exc.render("--form")) from None


def _vec(L, v):
    return dsl.format_form(v, L.basis_names)


def _fvec(L, v):
    return dsl.format_form(v, L.dual_names)


def _params(args, **extra):
    out = {"seed": args.seed, "budget": args.budget}
    if args.catalog:
        out["catalog"] = args.catalog
        out["param"] = _parse_params(args.param)
    if args.form:
        out["form"] = args.form
    out.update({k: v for k, v in extra.items() if v not in (None, "")})
    return out


# ---------------------------------------------------------------------------
# commands

def cmd_check(args):
    L, subject, _ = _load_subject(args)
    bad = jacobi_check(L)
    d2 = all(ce_differential(ce_differential(KForm.dual(L, k))).is_zero() for k in range(L.dim))
    res = {"dim": L.dim, "jacobi": not bad, "d_squared_zero": d2,
           "violations": [{"triple": [L.basis_names[i] for i in triple], "defect": _vec(L, v)}
                          for triple, v in bad[:20]]}
    if not bad:
        res.update(nilpotent=is_nilpotent(L), solvable=is_solvable(L), center_dim=center(L).dim)
    return Report(subject, "check", _params(args), res, exit_code=0 if not bad else 1)


def cmd_class(args):
    L, subject, _ = _load_subject(args)
    a = _form(args, L)
    try:
        rep = cartan.cartan_class(L, a)
    except ZeroForm as exc:
        raise InputError(str(exc)) from None
    res = {"form": _fvec(L, a), "class": rep.cl, "parity": rep.parity, "rank_d_alpha": rep.rank,
           "orbit_dim": rep.orbit_dim,
           "stabilizer": [_vec(L, v) for v in rep.stabilizer.basis],
           "characteristic_space": [_vec(L, v) for v in rep.characteristic_space.basis],
           "wedge_oracle_class": cartan.cartan_class_wedge_oracle(L, a)}
    return Report(subject, "class", _params(args), res)


def cmd_orbit_dim(args):
    L, subject, _ = _load_subject(args)
    a = _form(args, L)
    return Report(subject, "orbit-dim", _params(args), {"form": _fvec(L, a), "orbit_dim": cartan.orbit_dimension(L, a)})


def cmd_index(args):
    L, subject, _ = _load_subject(args)
    rep = cartan.index(L)
    w = cartan.max_class_witness(L, args.seed)
    return Report(subject, "index", _params(args),
                  {"index": rep.index, "max_class": rep.max_class, "generic_rank": rep.generic_rank,
                   "witness": _fvec(L, w.coefficients())})


def cmd_charseq(args):
    L, subject, _ = _load_subject(args)
    try:
        seq = charseq.characteristic_sequence(L, budget=args.budget, seed=args.seed)
    except NotNilpotent as exc:
        raise InputError(str(exc)) from None
    res = {"char_sequence": list(seq.parts), "witness": _vec(L, seq.witness),
           "stable_under_budget_doubling": seq.stable,
           "c1_bound": charseq.check_c1_bound(L, seq),
           "contact_constraint_c2_ne_c1": charseq.contact_charseq_constraint(L, seq)}
    return Report(subject, "charseq", _params(args), res)


def _flag_report(args, name, pred):
    L, subject, _ = _load_subject(args)
    ok = pred(L)
    rep = cartan.index(L)
    res = {name: ok, "max_class": rep.max_class, "dim": L.dim}
    if ok:
        res["witness"] = _fvec(L, cartan.max_class_witness(L, args.seed).coefficients())
    return Report(subject, name, _params(args), res)


def cmd_contact(args):
    return _flag_report(args, "contact", cartan.is_contact)


def cmd_frobenius(args):
    return _flag_report(args, "frobenius", cartan.is_frobenius)


def cmd_spectrum(args):
    L, subject, _ = _load_subject(args)
    classes = cartan.class_spectrum_sample(L, args.budget, args.seed)
    res = {"classes": classes, "orbit_dims": {2 * (c // 2) for c in classes},
           "mode": "sampled (lower approximation)", "max_class": cartan.index(L).max_class}
    return Report(subject, "spectrum", _params(args), res)


def cmd_extend(args):
    L, subject, _ = _load_subject(args)
    if not args.theta:
        raise InputError("--theta is required for extend")
    try:
        terms = dsl.parse_form(args.theta, L.dual_names, 2)
    except dsl.ParseError as exc:
        raise InputError(exc.render("--theta")) from None
    theta = KForm(L, 2, terms)
    res = {"theta": repr(theta)}
    code = 0
    try:
        E = deform.central_extension(L, theta, name=f"{L.name or 'T'}_ext")
    except (OddDimension, NotClosed, NotSymplectic) as exc:
        res.update(error=type(exc).__name__, message=str(exc))
        code = 1
    else:
        res.update(dim=E.dim, contact=cartan.is_contact(E), nilpotent=is_nilpotent(E),
                   algebra=dsl.dumps(E, "bracket").splitlines())
    return Report(subject, "extend", _params(args, theta=args.theta), res, exit_code=code)


def _cochain(text, L):
    lines = [s for s in text.replace(";", "\n").splitlines() if s.strip()]
    src = f"algebra phi dim {L.dim} basis {' '.join(L.basis_names)}\n" + "\n".join(lines)
    try:
        doc = dsl.parse(src)
    except dsl.ParseError as exc:
        raise InputError(exc.render("--phi")) from None
    return deform.Cochain2.from_algebra(doc.to_algebra(check=False))


def cmd_deform_check(args):
    L, subject, _ = _load_subject(args)
    phi1 = _cochain(args.phi1 or "", L)
    phi2 = _cochain(args.phi2 or "", L)
    mu0 = deform.Cochain2.from_algebra(L)
    chk = deform.verify_quadratic_deformation(mu0, phi1, phi2)
    res = {"passed": chk.passed,
           "failures": {name: len(defect) for name, defect in chk.failures.items()},
           "jacobi_at_t": {format_rational(t): ok for t, ok in chk.specializations.items()}}
    if chk.passed:
        try:
            one = deform.deformed(mu0, phi1, phi2, 1).to_algebra()
        except LieClassError:
            pass
        else:
            res["t1"] = {"solvable": is_solvable(one), "nilpotent": is_nilpotent(one),
                         "center_dim": center(one).dim, "contact": cartan.is_contact(one)}
    return Report(subject, "deform-check", _params(args, phi1=args.phi1 or "", phi2=args.phi2 or ""), res,
                  exit_code=0 if chk.passed else 1)


def read_scaling(text: str, dim: int) -> deform.ScalingMap:
    """Scaling file: diagonal monomials ``t^k`` separated by whitespace, commas or newlines.

    Lines of the form ``i j: expr`` (1-based) add upper-triangular entries.
    """
    diag, extra = [], {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            pos, expr = line.split(":", 1)
            try:
                i, j = (int(x) for x in pos.replace(",", " ").split())
            except ValueError:
                raise InputError(f"bad scaling position {pos.strip()!r}") from None
            extra[(i - 1, j - 1)] = expr.strip()
            continue
        diag.extend(tok for tok in line.replace(",", " ").split())
    if len(diag) != dim:
        raise InputError(f"scaling lists {len(diag)} diagonal entries for dimension {dim}")
    entries = {}
    try:
        for k, tok in enumerate(diag):
            entries[(k, k)] = LaurentPoly.parse(tok)
        for key, expr in extra.items():
            entries[key] = LaurentPoly.parse(expr)
        return deform.ScalingMap(dim, entries)
    except (ValueError, SingularScaling) as exc:
        raise InputError(f"bad scaling: {exc}") from None


def cmd_contract(args):
    L, subject, _ = _load_subject(args)
    res = {}
    if args.scaling:
        try:
            with open(args.scaling, encoding="utf-8") as fh:
                f = read_scaling(fh.read(), L.dim)
        except OSError as exc:
            raise InputError(f"cannot read {args.scaling}: {exc}") from None
        out = deform.contract(L, f)
        if isinstance(out, deform.NoLimit):
            res["limit"] = {"exists": False, "worst_exponent": out.exponent,
                            "offending": [f"[{L.basis_names[i]},{L.basis_names[j]}] -> {L.basis_names[k]}: {p!r}"
                                          for (i, j, k), p in getattr(out, "offending", ())]}
        else:
            res["limit"] = {"exists": True, "algebra": dsl.dumps(out, "bracket").splitlines(),
                            "abelian": out.is_abelian(), "nilpotent": is_nilpotent(out)}
            if args.target:
                tgt = _target(args)
                res["limit"]["equals_target"] = out.same_constants(tgt)
    elif args.target:
        tgt = _target(args)
        found = deform.search_diagonal_contraction(L, tgt, bound=args.bound)
        res["search"] = {"bound": args.bound, "target": args.target,
                         "exponents": list(found) if found is not None else None}
    else:
        raise InputError("contract needs --scaling FILE or --target ID")
    return Report(subject, "contract", _params(args, scaling=args.scaling or "", target=args.target or ""), res)


def _target(args):
    """``--target`` names a catalog entry (defaults) or a ``.lie`` file."""
    if args.target.endswith(".lie"):
        try:
            with open(args.target, encoding="utf-8") as fh:
                return dsl.load(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read {args.target}: {exc}") from None
        except dsl.ParseError as exc:
            raise InputError(exc.render(args.target)) from None
    try:
        return catalog.build(args.target).algebra
    except KeyError:
        raise InputError(f"unknown catalog entry {args.target!r}") from None


def cmd_catalog(args):
    if args.catalog:
        entry = catalog.build(args.catalog, _parse_params(args.param))
        fam = catalog.family(args.catalog)
        res = {"dim": entry.algebra.dim, "doc": fam.doc, "notes": entry.notes,
               "params": {k: _param_text(v) for k, v in entry.params.items()},
               "expected": {k: {"value": c.value, "mode": c.mode} for k, c in entry.expected.items()}}
        prov = {k: c.citation for k, c in entry.expected.items()}
        return Report(args.catalog, "catalog", _params(args), res, prov)
    rows = {}
    for eid, params, cites in catalog.list_entries():
        rows[eid] = {"params": {p.name: {"kind": p.kind, "default": _param_text(p.default)} for p in params},
                     "citations": list(cites)}
    return Report("catalog", "catalog", {}, {"entries": rows})


def _param_text(v):
    if isinstance(v, tuple):
        return ",".join(format_rational(Fraction(x)) for x in v)
    if isinstance(v, Fraction):
        return format_rational(v)
    return v


def cmd_verify(args):
    if not args.catalog:
        raise InputError("verify needs --catalog ID")
    entry = catalog.build(args.catalog, _parse_params(args.param))
    results = verify_entry(entry, seed=args.seed, budget=args.budget)
    claims = {}
    prov = {}
    for r in results:
        row = {"expected": r.expected, "observed": r.observed, "passed": r.passed, "mode": r.mode}
        if r.mode == "sampled":
            row["note"] = "sampled, not certified"
        if r.detail:
            row["detail"] = r.detail
        claims[r.key] = row
        prov[r.key] = r.citation
    ok = all(r.passed for r in results)
    res = {"claims": claims, "all_passed": ok, "dim": entry.algebra.dim,
           "params": {k: _param_text(v) for k, v in entry.params.items()}}
    if entry.notes:
        res["notes"] = entry.notes
    return Report(args.catalog, "verify", _params(args), res, prov, exit_code=0 if ok else 1)


HANDLERS = {"check": cmd_check, "class": cmd_class, "orbit-dim": cmd_orbit_dim, "index": cmd_index,
            "charseq": cmd_charseq, "contact": cmd_contact, "frobenius": cmd_frobenius,
            "spectrum": cmd_spectrum, "extend": cmd_extend, "deform-check": cmd_deform_check,
            "contract": cmd_contract, "catalog": cmd_catalog, "verify": cmd_verify}


def _seed(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("seed must be an integer") from None
    if not 0 <= v < U64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lieclass", description="Cartan class, index and related invariants of Lie algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", nargs="?", help=".lie document")
    p.add_argument("--catalog", metavar="ID", help="use a built-in catalog entry")
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="catalog parameter (repeatable)")
    p.add_argument("--form", metavar="EXPR", help='linear form, e.g. "3/2*w1 - w4"')
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--budget", type=_positive, default=64)
    p.add_argument("--theta", metavar="EXPR", help='2-form for extend, e.g. "w1^w2 + w3^w4"')
    p.add_argument("--phi1", metavar="BRACKETS", help='cochain, e.g. "[X3,X1] = 2*X1; [X3,X2] = -2*X2"')
    p.add_argument("--phi2", metavar="BRACKETS")
    p.add_argument("--scaling", metavar="FILE", help="diagonal t^k entries for contract")
    p.add_argument("--target", metavar="ID", help="catalog entry to compare or search against")
    p.add_argument("--bound", type=_positive, default=2, help="exponent bound for the contraction search")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    return p


def run_command(argv) -> tuple[int, str, str]:
    """Run one invocation; returns ``(exit code, stdout text, stderr text)``."""
    try:
        args = build_parser().parse_args(argv)
        report = HANDLERS[args.command](args)
    except InputError as exc:
        return 2, "", f"error: {exc}\n"
    except (BadParams, InDerivedAlgebra, ZeroForm, DimensionMismatch, SingularScaling,
            NotNilpotent, NotSymplectic, OddDimension) as exc:
        return 2, "", f"error: {type(exc).__name__}: {exc}\n"
    except PaperInconsistency as exc:
        defects = [{"triple": [i + 1 for i in triple], "defect": list(vec)} for triple, vec in exc.defects[:20]]
        report = Report(exc.entry_id, "error", {}, {"paper_inconsistency": {
            "entry": exc.entry_id, "message": str(exc), "defects": defects}}, exit_code=1)
    out = report.to_json() if "--json" in argv else report.to_text()
    return report.exit_code, out, ""


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    code, out, err = run_command(argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
