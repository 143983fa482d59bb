"""The ``.lie`` text format: bracket documents and Maurer-Cartan documents.

Bracket mode::

    algebra h3 dim 3 basis X1 X2 X3
    [X1,X2] = X3

Maurer-Cartan mode::

    mc h3 dim 3 forms w1 w2 w3
    d w3 = -1 * w1 ^ w2

Coefficients are rationals (``3/2``, ``-2``, ``0.5``) and default to 1.
``#`` starts a comment.  Maurer-Cartan input becomes brackets through
``dw(X, Y) = -w([X, Y])``.  Every diagnostic carries a source span.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LieAlgebra
from .errors import JacobiError
from .scalars import format_rational

MAX_DIM = 64

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<num>\d+(?:\.\d+)?(?:/\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[\[\],=+\-*^])
""", re.VERBOSE)

_OP_NAMES = {"[": "'['", "]": "']'", ",": "','", "=": "'='", "+": "'+'", "-": "'-'",
             "*": "'*'", "^": "'^'"}


@dataclass(frozen=True)
class Span:
    start: int
    end: int
    line: int
    col: int

    def __str__(self):
        return f"{self.line}:{self.col}"


@dataclass(frozen=True)
class Diagnostic:
    kind: str  # "syntax" | "semantic"
    message: str
    span: Span
    expected: tuple = ()

    def render(self, source_name: str = "<input>") -> str:
        msg = f"{source_name}:{self.span}: {self.kind} error: {self.message}"
        if self.expected and "expected" not in self.message:
            msg += f" (expected {', '.join(self.expected)})"
        return msg


class ParseError(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(d.render() for d in self.diagnostics))

    def render(self, source_name: str = "<input>") -> str:
        return "\n".join(d.render(source_name) for d in self.diagnostics)


@dataclass(frozen=True)
class Token:
    kind: str  # ident | num | op | nl | eof
    text: str
    span: Span


@dataclass(frozen=True)
class Statement:
    """``lhs`` is a pair of symbol indices (bracket) or one form index (MC).

    ``terms`` are ``(coefficient, symbol indices)``: one index per term in
    bracket mode, an ``(i, j)`` wedge pair in MC mode.
    """
    lhs: tuple
    terms: tuple
    span: Span = field(compare=False)


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    dim: int
    syntax: str  # "bracket" | "maurer_cartan"
    symbols: tuple
    statements: tuple
    source: str = field(default="", compare=False, repr=False)

    def to_algebra(self, check: bool = True) -> LieAlgebra:
        """Structure constants of the document (Jacobi-checked by default)."""
        n = self.dim
        if self.syntax == "bracket":
            br = {}
            for st in self.statements:
                i, j = st.lhs
                br[(i, j)] = {k: c for c, (k,) in st.terms}
            names = dict(basis_names=self.symbols, dual_names=_dual_names_for(self.symbols))
            return LieAlgebra(n, br, name=self.name, check=check, **names)
        eqs = {}
        for st in self.statements:
            (k,) = st.lhs
            eqs[k] = {pair: c for c, pair in st.terms}
        brackets = {}
        for k, terms in eqs.items():
            for (i, j), m in terms.items():
                slot = brackets.setdefault((i, j), {})
                slot[k] = slot.get(k, 0) - m
        return LieAlgebra(n, brackets, basis_names=_basis_names_for(self.symbols),
                          dual_names=self.symbols, name=self.name, check=check)


def _dual_names_for(basis):
    out = []
    for b in basis:
        m = re.fullmatch(r"[Xe](\w*)", b)
        out.append(f"w{m.group(1)}" if m and m.group(1) else f"w_{b}")
    return out if len(set(out)) == len(out) and not set(out) & set(basis) else [f"w{i + 1}" for i in range(len(basis))]


def _basis_names_for(duals):
    out = []
    for w in duals:
        m = re.fullmatch(r"w(\w*)", w)
        out.append(f"X{m.group(1)}" if m and m.group(1) else f"X_{w}")
    return out if len(set(out)) == len(out) else [f"X{i + 1}" for i in range(len(duals))]


# ---------------------------------------------------------------------------
# lexer

def _line_starts(text):
    starts = [0]
    for i, ch in enumerate(text):
        if ch == "\n":
            starts.append(i + 1)
    return starts


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self._starts = _line_starts(text)

    def span(self, start, end):
        lo, hi = 0, len(self._starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._starts[mid] <= start:
                lo = mid
            else:
                hi = mid - 1
        return Span(start, end, lo + 1, start - self._starts[lo] + 1)

    def tokens(self):
        text, pos, out = self.text, 0, []
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                ch = text[pos]
                why = "non-ASCII character" if ord(ch) > 127 else "unexpected character"
                raise ParseError([Diagnostic("syntax", f"{why} {ch!r}", self.span(pos, pos + 1),
                                             ("identifier", "number", "operator"))])
            kind = m.lastgroup
            if kind == "nl":
                out.append(Token("nl", "\n", self.span(pos, m.end())))
            elif kind not in ("ws", "comment"):
                out.append(Token(kind, m.group(), self.span(pos, m.end())))
            pos = m.end()
        out.append(Token("eof", "", self.span(len(text), len(text))))
        return out


# ---------------------------------------------------------------------------
# parser

class _Parser:
    def __init__(self, text: str):
        self.lexer = _Lexer(text)
        self.toks = self.lexer.tokens()
        self.i = 0
        self.errors: list[Diagnostic] = []

    # token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def fail(self, message, expected=(), tok=None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else ("end of line" if tok.kind == "nl" else repr(tok.text))
        raise ParseError([Diagnostic("syntax", f"{message}, found {found}", tok.span, tuple(expected))])

    def expect_op(self, op):
        if self.tok.kind == "op" and self.tok.text == op:
            return self.advance()
        self.fail(f"expected {_OP_NAMES[op]}", (_OP_NAMES[op],))

    def expect_keyword(self, word):
        if self.tok.kind == "ident" and self.tok.text == word:
            return self.advance()
        self.fail(f"expected '{word}'", (f"'{word}'",))

    def expect_ident(self, what="identifier"):
        if self.tok.kind == "ident":
            return self.advance()
        self.fail(f"expected {what}", (what,))

    def skip_newlines(self):
        while self.tok.kind == "nl":
            self.advance()

    def end_of_statement(self):
        if self.tok.kind in ("nl", "eof"):
            self.skip_newlines()
            return
        self.fail("expected end of line", ("end of line", "'+'", "'-'"))

    def number(self) -> Fraction:
        t = self.advance()
        try:
            if "/" in t.text:
                p, q = t.text.split("/")
                if Fraction(q) == 0:
                    raise ZeroDivisionError
                return Fraction(p) / Fraction(q)
            return Fraction(t.text)
        except ZeroDivisionError:
            raise ParseError([Diagnostic("syntax", "division by zero in coefficient", t.span)]) from None

    # grammar
    def document(self) -> AlgebraDocument:
        self.skip_newlines()
        head = self.tok
        if head.kind == "ident" and head.text == "algebra":
            syntax, list_kw = "bracket", "basis"
        elif head.kind == "ident" and head.text == "mc":
            syntax, list_kw = "maurer_cartan", "forms"
        else:
            self.fail("expected a header", ("'algebra'", "'mc'"))
        self.advance()
        name = self.expect_ident("algebra name").text
        self.expect_keyword("dim")
        dim_tok = self.tok
        if dim_tok.kind != "num" or not dim_tok.text.isdigit():
            self.fail("expected a positive integer dimension", ("integer",))
        self.advance()
        dim = int(dim_tok.text)
        if not 1 <= dim <= MAX_DIM:
            raise ParseError([Diagnostic("semantic", f"dimension must be between 1 and {MAX_DIM}", dim_tok.span)])
        self.expect_keyword(list_kw)
        syms, spans = [], []
        while self.tok.kind == "ident":
            t = self.advance()
            syms.append(t.text)
            spans.append(t.span)
        if self.tok.kind not in ("nl", "eof"):
            self.fail("expected a symbol name or end of line", ("identifier", "end of line"))
        if len(syms) != dim:
            where = spans[dim] if len(syms) > dim else dim_tok.span
            self.errors.append(Diagnostic("semantic", f"declared {len(syms)} symbols for dim {dim}", where))
        seen = {}
        for s, sp in zip(syms, spans):
            if s in seen:
                self.errors.append(Diagnostic("semantic", f"duplicate symbol {s}", sp))
            seen[s] = sp
        self.skip_newlines()
        index = {s: k for k, s in enumerate(syms)}
        kind = "symbol" if syntax == "bracket" else "form"
        statements, lhs_seen = [], {}
        while self.tok.kind != "eof":
            start = self.tok.span
            if syntax == "bracket":
                lhs, terms = self.bracket_statement(index, kind)
            else:
                lhs, terms = self.mc_statement(index, kind)
            end = self.toks[self.i - 1].span
            span = Span(start.start, end.end, start.line, start.col)
            self.end_of_statement()
            if lhs is None:
                continue
            key = tuple(sorted(lhs))
            if key in lhs_seen:
                self.errors.append(Diagnostic("semantic", "duplicate definition of "
                                              + _lhs_text(lhs, syms, syntax), start))
                continue
            lhs_seen[key] = span
            statements.append(Statement(lhs, terms, span))
        if self.errors:
            raise ParseError(self.errors)
        return AlgebraDocument(name, dim, syntax, tuple(syms), tuple(statements), self.lexer.text)

    def symbol(self, index, kind):
        t = self.expect_ident(kind)
        if t.text not in index:
            self.errors.append(Diagnostic("semantic", f"undeclared {kind} {t.text}", t.span))
            return None
        return index[t.text]

    def coefficient(self):
        """``[sign] [number '*']``; returns (coef, saw_number)."""
        sign = Fraction(1)
        while self.tok.kind == "op" and self.tok.text in "+-":
            if self.advance().text == "-":
                sign = -sign
        if self.tok.kind == "num":
            c = self.number()
            if self.tok.kind == "op" and self.tok.text == "*":
                self.advance()
                return sign * c, True
            return sign * c, "bare"
        return sign, False

    def linear_terms(self, index, kind, wedge):
        terms: dict = {}
        bad = False
        first = True
        while True:
            if not first:
                if not (self.tok.kind == "op" and self.tok.text in "+-"):
                    break
            c, saw = self.coefficient()
            if saw == "bare":
                if c == 0 and first and self.tok.kind in ("nl", "eof"):
                    return {}, False
                self.fail("expected '*' after coefficient", ("'*'",))
            a = self.symbol(index, kind)
            key = a
            if wedge:
                self.expect_op("^")
                b = self.symbol(index, kind)
                if a is not None and b is not None:
                    if a == b:
                        self.errors.append(Diagnostic("semantic", "repeated factor in wedge product",
                                                      self.toks[self.i - 1].span))
                        bad = True
                    elif a > b:
                        a, b, c = b, a, -c
                key = None if a is None or b is None else (a, b)
            if key is None:
                bad = True
            elif not bad:
                terms[key] = terms.get(key, 0) + c
            first = False
        return {k: v for k, v in terms.items() if v}, bad

    def bracket_statement(self, index, kind):
        self.expect_op("[")
        a = self.symbol(index, kind)
        self.expect_op(",")
        b = self.symbol(index, kind)
        close = self.expect_op("]")
        self.expect_op("=")
        terms, bad = self.linear_terms(index, kind, wedge=False)
        if a is None or b is None or bad:
            return None, ()
        if a == b:
            self.errors.append(Diagnostic("semantic", "bracket of a symbol with itself", close.span))
            return None, ()
        if a > b:
            a, b = b, a
            terms = {k: -c for k, c in terms.items()}
        return (a, b), tuple((c, (k,)) for k, c in sorted(terms.items()))

    def mc_statement(self, index, kind):
        if not (self.tok.kind == "ident" and self.tok.text == "d"):
            self.fail("expected an equation", ("'d'",))
        self.advance()
        k = self.symbol(index, kind)
        self.expect_op("=")
        terms, bad = self.linear_terms(index, kind, wedge=True)
        if k is None or bad:
            return None, ()
        return (k,), tuple((c, pair) for pair, c in sorted(terms.items()))


def _lhs_text(lhs, syms, syntax):
    if syntax == "bracket":
        return f"[{syms[lhs[0]]},{syms[lhs[1]]}]"
    return f"d {syms[lhs[0]]}"


def parse(text: str) -> AlgebraDocument:
    """Parse a ``.lie`` document; raises :class:`ParseError` with spans."""
    if not isinstance(text, str):
        raise TypeError("parse expects a string")
    return _Parser(text).document()


def load(text: str, check: bool = True) -> LieAlgebra:
    """Parse and build; Jacobi failures become a semantic :class:`ParseError`."""
    doc = parse(text)
    try:
        return doc.to_algebra(check=check)
    except JacobiError as exc:
        (i, j, k), _ = exc.violations[0]
        names = doc.symbols
        span = doc.statements[0].span if doc.statements else Span(0, 0, 1, 1)
        msg = f"Jacobi identity fails on ({names[i]}, {names[j]}, {names[k]})" if doc.syntax == "bracket" \
            else f"d^2 != 0 (Jacobi fails on basis triple {i + 1}, {j + 1}, {k + 1})"
        raise ParseError([Diagnostic("semantic", msg, span)]) from None


# ---------------------------------------------------------------------------
# serialization

def _fmt_coef(c: Fraction, first: bool) -> tuple[str, str]:
    sign = "-" if c < 0 else "+"
    mag = -c if c < 0 else c
    body = "" if mag == 1 else f"{format_rational(mag)} * "
    if first:
        return ("-" if sign == "-" else ""), body
    return f" {sign} ", body


def serialize(doc: AlgebraDocument) -> str:
    syms = doc.symbols
    if doc.syntax == "bracket":
        lines = [f"algebra {doc.name} dim {doc.dim} basis {' '.join(syms)}"]
        for st in doc.statements:
            rhs = []
            for n, (c, (k,)) in enumerate(st.terms):
                s, body = _fmt_coef(c, n == 0)
                rhs.append(f"{s}{body}{syms[k]}")
            lines.append(f"[{syms[st.lhs[0]]},{syms[st.lhs[1]]}] = {''.join(rhs) or '0'}")
    else:
        lines = [f"mc {doc.name} dim {doc.dim} forms {' '.join(syms)}"]
        for st in doc.statements:
            rhs = []
            for n, (c, (i, j)) in enumerate(st.terms):
                s, body = _fmt_coef(c, n == 0)
                rhs.append(f"{s}{body}{syms[i]} ^ {syms[j]}")
            lines.append(f"d {syms[st.lhs[0]]} = {''.join(rhs) or '0'}")
    return "\n".join(lines) + "\n"


def _safe_name(name: str) -> str:
    s = re.sub(r"[^A-Za-z0-9_]", "_", name or "g")
    return s if re.match(r"[A-Za-z_]", s) else f"g_{s}"


def document_from_algebra(L: LieAlgebra, syntax: str = "bracket", name: str | None = None) -> AlgebraDocument:
    """Canonical document for ``L`` (statements sorted, zero lines omitted)."""
    name = _safe_name(name or L.name)
    zero = Span(0, 0, 1, 1)
    if syntax == "bracket":
        sts = tuple(Statement((i, j), tuple((c, (k,)) for k, c in sorted(vec.items())), zero)
                    for (i, j), vec in sorted(L.brackets.items()))
        return AlgebraDocument(name, L.dim, "bracket", tuple(L.basis_names), sts)
    if syntax != "maurer_cartan":
        raise ValueError("syntax must be 'bracket' or 'maurer_cartan'")
    eqs: dict = {}
    for (i, j), vec in L.brackets.items():
        for k, c in vec.items():
            eqs.setdefault(k, {})[(i, j)] = -c
    sts = tuple(Statement((k,), tuple((c, pair) for pair, c in sorted(eqs[k].items())), zero)
                for k in sorted(eqs))
    return AlgebraDocument(name, L.dim, "maurer_cartan", tuple(L.dual_names), sts)


def dumps(L: LieAlgebra, syntax: str = "bracket", name: str | None = None) -> str:
    return serialize(document_from_algebra(L, syntax, name))


# ---------------------------------------------------------------------------
# form expressions

def parse_form(text: str, names, degree: int = 1) -> dict:
    """Parse ``"3/2*w1 - w4"`` (degree 1) or ``"w1^w2 + w3^w4"`` (degree 2).

    Returns ``{index tuple: coefficient}`` over ``names``.
    """
    if degree not in (1, 2):
        raise ValueError("form expressions of degree 1 or 2 only")
    p = _Parser(text)
    index = {s: k for k, s in enumerate(names)}
    p.skip_newlines()
    if p.tok.kind == "eof":
        p.fail("empty form expression", ("identifier",))
    terms, bad = p.linear_terms(index, "form", wedge=degree == 2)
    p.skip_newlines()
    if p.tok.kind != "eof":
        p.fail("unexpected input after form expression", ("'+'", "'-'", "end of input"))
    if p.errors:
        raise ParseError(p.errors)
    if degree == 1:
        return {(k,): c for k, c in terms.items()}
    return dict(terms)


def form_vector(text: str, L: LieAlgebra) -> tuple[Fraction, ...]:
    terms = parse_form(text, L.dual_names, 1)
    v = [Fraction(0)] * L.dim
    for (k,), c in terms.items():
        v[k] += c
    return tuple(v)


def format_form(coeffs, names) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        s, body = _fmt_coef(Fraction(c), not parts)
        parts.append(f"{s}{body}{names[k]}")
    return "".join(parts) or "0"
