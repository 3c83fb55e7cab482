"""Parsing and canonical printing of the expression grammars.

sum      := ["+"|"-"] term (("+"|"-") term)*        (also the bare "0")
term     := [rational "*"] basis
rational := ["-"] int ["/" uint]
basis    := atom ("@" atom)*                        ("@" builds tensor terms)

Atoms depend on the kind: graphs follow
``graph := "|" | "(" graph ("v"|"o") graph ")"``, permutations are written
"[3,1,2]" (empty: "[]"), and words are bare strings over {T, L} with "1" for
the empty word.  Whitespace is ignored everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .freemodule import LinComb
from .loopgraphs import LEAF, LoopGraph
from .permutations import Permutation
from .subalgebras import Word

KINDS = ("graph-sum", "word", "permutation")


class ParseError(ValueError):
    def __init__(self, offset: int, message: str):
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset
        self.reason = message


@dataclass(frozen=True)
class Expression:
    """A parsed sum, tagged by the grammar it came from."""

    kind: str
    value: LinComb

    def __str__(self) -> str:
        return str(self.value)

    def single_basis(self):
        """The lone basis element of a one-term sum with coefficient 1."""
        items = list(self.value.items())
        if len(items) != 1 or items[0][1] != 1:
            raise ValueError(f"expected a single basis element, got {self.value}")
        return items[0][0]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(self.pos, message)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    # --- numbers ---

    def _digits(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected digits")
        return int(self.text[start:self.pos])

    def try_rational(self) -> Fraction | None:
        """Parse int["/"uint] if the input starts with one; else None."""
        save = self.pos
        sign = 1
        ch = self.peek()
        if ch in ("+", "-"):
            sign = -1 if ch == "-" else 1
            self.pos += 1
        if not self.peek().isdigit():
            self.pos = save
            return None
        num = self._digits()
        if self.peek() == "/":
            self.pos += 1
            den = self._digits()
            if den == 0:
                self.error("zero denominator")
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    # --- atoms ---

    def parse_graph(self) -> LoopGraph:
        ch = self.peek()
        if ch == "|":
            self.pos += 1
            return LEAF
        if ch == "(":
            self.pos += 1
            left = self.parse_graph()
            mark = self.peek()
            if mark not in ("v", "o"):
                self.error("expected 'v' or 'o'")
            self.pos += 1
            right = self.parse_graph()
            self.expect(")")
            return LoopGraph(left, right, mark == "o")
        self.error("expected '|' or '('")

    def parse_permutation(self) -> Permutation:
        self.expect("[")
        if self.peek() == "]":
            self.pos += 1
            return Permutation()
        word = [self._digits()]
        while self.peek() == ",":
            self.pos += 1
            word.append(self._digits())
        self.expect("]")
        here = self.pos
        try:
            return Permutation(tuple(word))
        except ValueError as e:
            raise ParseError(here, str(e)) from None

    def parse_word(self) -> Word:
        ch = self.peek()
        if ch == "1":
            self.pos += 1
            return Word("")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "TL":
            self.pos += 1
        if self.pos == start:
            self.error("expected a word over {T, L}")
        try:
            return Word(self.text[start:self.pos])
        except ValueError as e:
            raise ParseError(start, str(e)) from None

    def parse_atom(self, kind: str):
        if kind == "graph-sum":
            return self.parse_graph()
        if kind == "permutation":
            return self.parse_permutation()
        if kind == "word":
            return self.parse_word()
        raise ValueError(f"unknown expression kind {kind!r}")

    def parse_basis(self, kind: str):
        first = self.parse_atom(kind)
        if self.peek() != "@":
            return first
        factors = [first]
        while self.peek() == "@":
            self.pos += 1
            factors.append(self.parse_atom(kind))
        return tuple(factors)

    # --- sums ---

    def parse_term(self, kind: str):
        save = self.pos
        coeff = self.try_rational()
        if coeff is not None and self.peek() == "*":
            self.pos += 1
            return self.parse_basis(kind), coeff
        self.pos = save
        if self.peek() == "0":
            # A bare zero stands for the empty sum.
            if self._digits() != 0:
                self.error("expected '*' after a coefficient")
            return None, Fraction(0)
        return self.parse_basis(kind), Fraction(1)

    def parse_sum(self, kind: str) -> LinComb:
        terms = []
        sign = 1
        ch = self.peek()
        if ch in ("+", "-"):
            sign = -1 if ch == "-" else 1
            self.pos += 1
        basis, coeff = self.parse_term(kind)
        if basis is not None:
            terms.append((basis, sign * coeff))
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            basis, coeff = self.parse_term(kind)
            if basis is not None:
                terms.append((basis, sign * coeff))
        return LinComb(terms)


def parse(text: str, kind: str) -> Expression:
    """Parse a sum in the given grammar; errors carry the failing offset."""
    if kind not in KINDS:
        raise ValueError(f"unknown expression kind {kind!r} (expected one of {KINDS})")
    p = _Parser(text)
    value = p.parse_sum(kind)
    if not p.at_end():
        p.error("unexpected trailing input")
    return Expression(kind, value)


def print_expression(x: Expression) -> str:
    """Canonical text: terms in basis order, coefficient 1 elided."""
    return str(x.value)
