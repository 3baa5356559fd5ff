"""Recursive-descent parser for event formulas.

Grammar (whitespace insignificant)::

    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '~' factor | atom | 'T' | 'F' | '(' expr ')'
    atom   := [A-Za-z_][A-Za-z0-9_]*

``|`` is boolean OR; conditioning is never part of a formula.
"""

import re
from dataclasses import dataclass

from cohere.errors import FormulaSyntaxError
from cohere.models.formula import FALSE, TRUE, And, Atom, Formula, Not, Or

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[~&|()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", an operator character, or "end"
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            offset = len(text) - len(text[pos:].lstrip())
            raise FormulaSyntaxError(f"unexpected character {text[offset]!r}", offset)
        if match.group("ident") is not None:
            tokens.append(Token("ident", match.group("ident"), match.start("ident")))
        else:
            tokens.append(Token(match.group("op"), match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class FormulaParser:
    """Parses one formula; instances are single-use."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            raise self._unexpected(f"expected '{kind}'")
        return self.advance()

    def parse(self) -> Formula:
        if self.current.kind == "end":
            raise FormulaSyntaxError("empty formula", 0)
        formula = self.expression()
        if self.current.kind != "end":
            raise self._unexpected("extra input")
        return formula

    def expression(self) -> Formula:
        operands = [self.term()]
        while self.current.kind == "|":
            self.advance()
            operands.append(self.term())
        return operands[0] if len(operands) == 1 else Or(tuple(operands))

    def term(self) -> Formula:
        operands = [self.factor()]
        while self.current.kind == "&":
            self.advance()
            operands.append(self.factor())
        return operands[0] if len(operands) == 1 else And(tuple(operands))

    def factor(self) -> Formula:
        token = self.current
        if token.kind == "~":
            self.advance()
            return Not(self.factor())
        if token.kind == "(":
            self.advance()
            inner = self.expression()
            self.expect(")")
            return inner
        if token.kind == "ident":
            self.advance()
            if token.text == "T":
                return TRUE
            if token.text == "F":
                return FALSE
            return Atom(token.text)
        raise self._unexpected("expected an atom, '~' or '('")

    def _unexpected(self, message: str) -> FormulaSyntaxError:
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        return FormulaSyntaxError(f"{message}, found {found}", token.position)


def parse_formula(text: str) -> Formula:
    """Parse formula text under the precedence NOT > AND > OR."""
    return FormulaParser(text).parse()
