"""Parser for the propositional temporal surface language.

Statements end with ``.``; ``%`` starts a line comment.  A statement is
either a bare formula or a rule ``head :- body`` whose head disjuncts are
separated by ``;``/``|`` and whose body elements are separated by ``,``.
``#program initial|dynamic|final|always.`` wraps the following statements
as ``r``, ``#next^ #always+ r``, ``#always+ (#final -> r)`` and
``#always+ r`` respectively; statements before any directive are initial.

Two token families are accepted for the temporal connectives: the spelled
keywords (``#previous``, ``#always+``, ``#until``, ...) and the compact
arrow operators used inside ``&tel { ... }`` (``<``, ``<?``, ``>*``, ...).
The compact unary/binary forms share tokens and are told apart by position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .formula import (
    BOT,
    FINAL,
    INITIAL,
    TOP,
    AlwaysAfter,
    AlwaysBefore,
    And,
    Atom,
    EvAfter,
    EvBefore,
    Formula,
    Iff,
    Impl,
    Neg,
    Next,
    Or,
    Prev,
    Release,
    Since,
    Theory,
    Trigger,
    Until,
    WNext,
    WPrev,
    conj,
    disj,
)

__all__ = ["ParseError", "parse_theory", "parse_formula", "wrap_program_context"]


class ParseError(ValueError):
    """Lexical or syntax error at a given 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int
    # for atoms: (name, prev_quote, next_quote)
    prev: bool = False
    next: bool = False


_ATOM_RE = re.compile(
    r"(')?([a-z][A-Za-z0-9_]*)(')?"
    r"(\(\s*[A-Za-z0-9_\"]+(?:\s*,\s*[A-Za-z0-9_\"]+)*\s*\))?(')?"
)
_HASH_RE = re.compile(r"#[a-z]+[+\-^]?")
_AMP_WORDS = ("tel", "initial", "final", "true", "false")
_SYMBOLS = (
    "<->", ":-", "->", "<?", "<*", "<:", ">?", ">*", ">:",
    "<", ">", "~", "&", "|", ";", ",", ".", "(", ")", "{", "}",
)

_UNARY_KEYWORDS = {
    "#previous": Prev,
    "#previous^": WPrev,
    "#next": Next,
    "#next^": WNext,
    "#always+": AlwaysAfter,
    "#always-": AlwaysBefore,
    "#eventually+": EvAfter,
    "#eventually-": EvBefore,
}
_BINARY_KEYWORDS = {
    "#since": Since,
    "#trigger": Trigger,
    "#until": Until,
    "#release": Release,
}
_CONSTANTS = {
    "#true": TOP,
    "#false": BOT,
    "#initial": INITIAL,
    "#final": FINAL,
    "&true": TOP,
    "&false": BOT,
    "&initial": INITIAL,
    "&final": FINAL,
}
_COMPACT_UNARY = {
    "<": Prev,
    "<:": WPrev,
    "<?": EvBefore,
    "<*": AlwaysBefore,
    ">": Next,
    ">:": WNext,
    ">?": EvAfter,
    ">*": AlwaysAfter,
}
_COMPACT_BINARY = {"<?": Since, "<*": Trigger, ">?": Until, ">*": Release}

PROGRAM_CONTEXTS = ("initial", "dynamic", "final", "always")


def _tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        col = pos - line_start + 1
        if ch == "\n":
            line += 1
            pos += 1
            line_start = pos
            continue
        if ch.isspace():
            pos += 1
            continue
        if ch == "%":
            end = text.find("\n", pos)
            pos = n if end < 0 else end
            continue
        if ch == "#":
            m = _HASH_RE.match(text, pos)
            if not m:
                raise ParseError("malformed directive or keyword", line, col)
            tokens.append(Token("kw", m.group(0), line, col))
            pos = m.end()
            continue
        if ch == "&":
            m = re.compile(r"&([a-z]+)").match(text, pos)
            if m and m.group(1) in _AMP_WORDS:
                tokens.append(Token("kw", m.group(0), line, col))
                pos = m.end()
                continue
        if ch == "'" or ch.islower():
            m = _ATOM_RE.match(text, pos)
            if not m:
                raise ParseError("malformed atom", line, col)
            lead, name, mid, args, tail = m.groups()
            if mid and tail:
                raise ParseError("duplicate next-quote", line, col)
            if name == "not" and not (lead or mid or args or tail):
                tokens.append(Token("not", name, line, col))
            else:
                if name == "not":
                    raise ParseError("'not' is reserved", line, col)
                if args:
                    name += "(" + ",".join(a.strip() for a in args[1:-1].split(",")) + ")"
                tokens.append(
                    Token("atom", name, line, col, prev=bool(lead), next=bool(mid or tail))
                )
            pos = m.end()
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, pos):
                tokens.append(Token("sym", sym, line, col))
                pos += len(sym)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    # binding powers: implication 10, or 20, and 30, binary temporal 40
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0
        self.in_body = False
        self.in_tel = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("sym", "kw"):
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def at(self, *texts: str) -> bool:
        return self.tok.kind in ("sym", "kw") and self.tok.text in texts

    # formulas -------------------------------------------------------------

    def formula(self, min_bp: int = 0, allow_bar: bool = True) -> Formula:
        left = self.prefix()
        while True:
            t = self.tok
            if t.kind == "sym" and t.text in ("->", "<->") and min_bp <= 10:
                self.advance()
                right = self.formula(10, allow_bar)
                left = (Impl if t.text == "->" else Iff)(left, right)
            elif t.kind == "sym" and t.text == "|" and allow_bar and min_bp < 20:
                self.advance()
                left = Or(left, self.formula(21, allow_bar))
            elif t.kind == "sym" and t.text == "&" and min_bp < 30:
                self.advance()
                left = And(left, self.formula(31, allow_bar))
            elif min_bp <= 40 and (
                (t.kind == "kw" and t.text in _BINARY_KEYWORDS)
                or (t.kind == "sym" and t.text in _COMPACT_BINARY)
            ):
                self.advance()
                kind = _BINARY_KEYWORDS.get(t.text) or _COMPACT_BINARY[t.text]
                left = kind(left, self.formula(40, allow_bar))
            else:
                return left

    def prefix(self) -> Formula:
        t = self.tok
        if t.kind == "not" or (t.kind == "sym" and t.text == "~"):
            self.advance()
            return Neg(self.prefix())
        if t.kind == "kw" and t.text in _UNARY_KEYWORDS:
            self.advance()
            return _UNARY_KEYWORDS[t.text](self.prefix())
        if t.kind == "sym" and t.text in _COMPACT_UNARY:
            self.advance()
            return _COMPACT_UNARY[t.text](self.prefix())
        return self.primary()

    def primary(self) -> Formula:
        t = self.tok
        if t.kind == "atom":
            self.advance()
            if t.next and self.in_body and not self.in_tel:
                self.error("next-quote is only allowed in rule heads or inside &tel", t)
            f: Formula = Atom(t.text)
            if t.next:
                f = Next(f)
            if t.prev:
                f = Prev(f)
            return f
        if t.kind == "kw" and t.text in _CONSTANTS:
            self.advance()
            return _CONSTANTS[t.text]
        if t.kind == "kw" and t.text == "&tel":
            self.advance()
            self.expect("{")
            self.in_tel += 1
            f = self.formula()
            self.in_tel -= 1
            self.expect("}")
            return f
        if t.kind == "sym" and t.text == "(":
            self.advance()
            f = self.formula()
            self.expect(")")
            return f
        if t.kind == "kw":
            self.error(f"unknown keyword {t.text!r}")
        if t.kind == "eof":
            self.error("unexpected end of input")
        self.error(f"unexpected token {t.text!r}")

    # statements -----------------------------------------------------------

    def body(self) -> Formula:
        self.in_body = True
        elems = [self.formula()]
        while self.at(","):
            self.advance()
            elems.append(self.formula())
        self.in_body = False
        return conj(elems)

    def statement(self) -> Formula:
        if self.at(":-"):
            self.advance()
            body = self.body()
            return Impl(body, BOT)
        heads = [self.formula()]
        while self.at(";"):
            self.advance()
            heads.append(self.formula())
        head = disj(heads)
        if self.at(":-"):
            self.advance()
            return Impl(self.body(), head)
        return head

    def program(self) -> list[Formula]:
        out = []
        context = "initial"
        while self.tok.kind != "eof":
            if self.tok.kind == "kw" and self.tok.text == "#program":
                self.advance()
                name = self.tok
                if name.kind != "atom" or name.text not in PROGRAM_CONTEXTS or name.prev or name.next:
                    self.error(f"unknown directive '#program {name.text}'", name)
                self.advance()
                self.expect(".")
                context = name.text
                continue
            if self.tok.kind == "kw" and self.tok.text.startswith("#") and self.tok.text not in (
                _UNARY_KEYWORDS.keys() | _CONSTANTS.keys()
            ):
                self.error(f"unknown directive {self.tok.text!r}")
            r = self.statement()
            self.expect(".")
            out.append(wrap_program_context(r, context))
        return out


def wrap_program_context(r: Formula, context: str) -> Formula:
    """Interpret statement ``r`` under a ``#program`` context."""
    if context == "initial":
        return r
    if context == "dynamic":
        return WNext(AlwaysAfter(r))
    if context == "final":
        return AlwaysAfter(Impl(FINAL, r))
    if context == "always":
        return AlwaysAfter(r)
    raise ValueError(f"unknown program context {context!r}")


def parse_theory(text: str, alphabet=None) -> Theory:
    """Parse a theory file; the alphabet defaults to the atoms mentioned."""
    formulas = _Parser(_tokenize(text)).program()
    return Theory.of(formulas, alphabet)


def parse_formula(text: str) -> Formula:
    """Parse a single formula (no trailing period)."""
    p = _Parser(_tokenize(text))
    f = p.formula()
    if p.tok.kind != "eof":
        p.error(f"unexpected token {p.tok.text!r}")
    return f
