"""Text syntax for group elements and automorphism words.

Group words::

    word    := factor* [';' '[' int (',' int)* ']']
    factor  := atom ['^' int]
    atom    := 'x' digits | '(' word-body ')'

e.g. ``x1^-1 x2^2 x1 x2^2`` or ``(x1 x2)^3``.  The optional ``; [z1,...,zn]``
suffix multiplies by (x_1^2)^{z_1} ... (x_n^2)^{z_n} on the right, so the
canonical output form ``x1 x2 ; [0,1,0]`` parses back to the same element.

Automorphism words are whitespace-separated tokens ``p[2,1,3]``, ``a[i,j]``,
``e[i,j]``, ``d[i]``, each optionally followed by ``'`` (inverse); ``e``
tokens also take ``^k``.  Tokens are written left to right and composed as
functions: the rightmost token acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .automorphisms import FR, AutoWord, Delta, Eps, Perm, Token, validate_token
from .group import GroupElement, embed_a, multiply, power


class ParseError(ValueError):
    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Gen:
    index: int
    exponent: int = 1


@dataclass(frozen=True)
class Sub:
    factors: tuple[Union[Gen, Sub], ...]
    exponent: int = 1


@dataclass(frozen=True)
class WordExpr:
    factors: tuple[Union[Gen, Sub], ...]
    shift: Optional[tuple[int, ...]] = None


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def digits(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected digits", start)
        return int(self.text[start:self.pos])

    def integer(self) -> int:
        self.skip()
        sign = 1
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        return sign * self.digits()

    def int_list(self) -> list[int]:
        self.expect("[")
        out = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            out.append(self.integer())
        self.expect("]")
        return out

    def at_end(self) -> bool:
        return self.peek() == ""


def _factors(sc: _Scanner, n: Optional[int], closing: str) -> tuple[Union[Gen, Sub], ...]:
    out: list[Union[Gen, Sub]] = []
    while True:
        ch = sc.peek()
        if ch == "x":
            start = sc.pos
            sc.pos += 1
            if sc.pos >= len(sc.text) or not sc.text[sc.pos].isdigit():
                raise ParseError("generator 'x' must be followed by an index", sc.pos)
            idx = sc.digits()
            if n is not None and not 1 <= idx <= n:
                raise ParseError(f"generator index {idx} out of range 1..{n}", start)
            atom: Union[Gen, Sub] = Gen(idx)
        elif ch == "(":
            sc.pos += 1
            inner = _factors(sc, n, ")")
            sc.expect(")")
            if not inner:
                raise ParseError("empty parentheses", sc.pos - 1)
            atom = Sub(inner)
        elif ch in (closing, ""):
            return tuple(out)
        else:
            raise ParseError(f"unexpected character {ch!r}", sc.pos)
        if sc.peek() == "^":
            sc.pos += 1
            e = sc.integer()
            atom = Gen(atom.index, e) if isinstance(atom, Gen) else Sub(atom.factors, e)
        out.append(atom)


def parse_word(text: str, n: Optional[int] = None) -> WordExpr:
    sc = _Scanner(text)
    factors = _factors(sc, n, ";")
    shift = None
    if sc.peek() == ";":
        sc.pos += 1
        shift = tuple(sc.int_list())
        if n is not None and len(shift) != n:
            raise ParseError(f"shift vector has {len(shift)} entries, expected {n}", sc.pos)
    if not sc.at_end():
        raise ParseError(f"unexpected character {sc.peek()!r}", sc.pos)
    if not factors and shift is None:
        raise ParseError("empty word", 0)
    return WordExpr(factors, shift)


def _gen_power(n: int, i: int, e: int) -> GroupElement:
    # x_i^e = x_i^{e mod 2} (x_i^2)^{e div 2}
    q, r = divmod(e, 2)
    base = GroupElement.gen(n, i) if r else GroupElement.identity(n)
    return multiply(base, embed_a(tuple(q if k == i else 0 for k in range(1, n + 1))))


def _eval(factors: tuple[Union[Gen, Sub], ...], n: int) -> GroupElement:
    g = GroupElement.identity(n)
    for f in factors:
        if isinstance(f, Gen):
            if not 1 <= f.index <= n:
                raise ValueError(f"generator index {f.index} out of range 1..{n}")
            g = multiply(g, _gen_power(n, f.index, f.exponent))
        else:
            g = multiply(g, power(_eval(f.factors, n), f.exponent))
    return g


def eval_word(expr: WordExpr, n: int) -> GroupElement:
    g = _eval(expr.factors, n)
    if expr.shift is not None:
        if len(expr.shift) != n:
            raise ValueError(f"shift vector has {len(expr.shift)} entries, expected {n}")
        g = multiply(g, embed_a(expr.shift))
    return g


def parse_element(text: str, n: int) -> GroupElement:
    return eval_word(parse_word(text, n), n)


_ARITY = {"p": None, "a": 2, "e": 2, "d": 1}


def parse_autoword(text: str, n: int) -> AutoWord:
    sc = _Scanner(text)
    tokens: list[Token] = []
    while not sc.at_end():
        start = sc.pos
        kind = sc.peek()
        if kind not in _ARITY:
            raise ParseError(f"unknown token {kind!r}; expected one of p, a, e, d", sc.pos)
        sc.pos += 1
        args = sc.int_list()
        arity = _ARITY[kind]
        if arity is not None and len(args) != arity:
            raise ParseError(f"{kind}[...] takes {arity} indices, got {len(args)}", start)
        inverse = False
        if sc.text.startswith("'", sc.pos):
            sc.pos += 1
            inverse = True
        exponent = 1
        if sc.text.startswith("^", sc.pos):
            if kind != "e":
                raise ParseError("only e[i,j] tokens take an exponent", sc.pos)
            sc.pos += 1
            exponent = sc.integer()
        if kind == "p":
            tok: Token = Perm(tuple(args), inverse)
        elif kind == "a":
            tok = FR(args[0], args[1], inverse)
        elif kind == "e":
            tok = Eps(args[0], args[1], exponent, inverse)
        else:
            tok = Delta(args[0], inverse)
        try:
            validate_token(tok, n)
        except ValueError as exc:
            raise ParseError(str(exc), start) from None
        tokens.append(tok)
        if sc.pos < len(sc.text) and not sc.text[sc.pos].isspace():
            raise ParseError("tokens must be separated by whitespace", sc.pos)
    return AutoWord(n, tuple(tokens))
