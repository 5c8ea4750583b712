"""Text grammars for ideals and graphs, as consumed by the CLI.

Ideal grammar: comma-separated monomials; a monomial is `*`-separated
factors; a factor is `<var>` or `<var>^<exp>`; variables are `x<k>` or
single letters (for up to 26 variables). Example:
`x^10, y^11, z^12, x*y^4*z, x*y^2*z^3, x^3*y*z^5`.

Graph grammar: `path(7)`, `cycle(5)`, `join(e1,e2)`, `cliquesum(e1,e2)`,
`edges(6; 1-2,2-3,3-4,2-5,5-6)`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .monomials import Monomial, MonomialIdeal, MonomialPrime, minimalize
from . import graphs

_FACTOR_RE = re.compile(r"^(x[0-9]+|[a-z])(?:\^([0-9]+))?$")
_INDEXED_RE = re.compile(r"^x[0-9]+$")


@dataclass(frozen=True)
class ParsedIdeal:
    ideal: MonomialIdeal
    names: tuple[str, ...]  # names[i] renders variable i+1

    def format_monomial(self, m: Monomial) -> str:
        return format_monomial(m, self.names)

    def format_prime(self, p: MonomialPrime) -> str:
        return ", ".join(self.names[i - 1] for i in sorted(p.support))


def parse_ideal(text: str) -> ParsedIdeal:
    raw_monomials = []
    for chunk in text.split(","):
        factors = []
        for piece in chunk.split("*"):
            piece_stripped = piece.strip()
            match = _FACTOR_RE.match(piece_stripped)
            if match is None:
                raise ParseError(
                    f"malformed factor {piece_stripped!r}", text, text.find(piece)
                )
            exp = int(match.group(2)) if match.group(2) else 1
            if exp < 1:
                raise ParseError(
                    f"exponent must be positive in {piece_stripped!r}",
                    text,
                    text.find(piece),
                )
            factors.append((match.group(1), exp))
        if not factors:
            raise ParseError("empty monomial", text, text.find(chunk))
        raw_monomials.append(factors)

    names_seen = {name for factors in raw_monomials for name, _ in factors}
    indexed = {n for n in names_seen if _INDEXED_RE.match(n)}
    if indexed and indexed != names_seen:
        raise ParseError(
            "mixed x<k> and letter variable names", text, 0
        )
    if indexed:
        ambient = max(int(n[1:]) for n in names_seen)
        if ambient < 1 or any(int(n[1:]) < 1 for n in names_seen):
            raise ParseError("variable indices start at 1", text, 0)
        index_of = {n: int(n[1:]) for n in names_seen}
        names = tuple(f"x{i}" for i in range(1, ambient + 1))
    else:
        letters = sorted(names_seen)
        ambient = len(letters)
        index_of = {n: i + 1 for i, n in enumerate(letters)}
        names = tuple(letters)

    gens = []
    for factors in raw_monomials:
        exps = [0] * ambient
        for name, exp in factors:
            exps[index_of[name] - 1] += exp
        gens.append(Monomial(tuple(exps)))
    return ParsedIdeal(minimalize(gens), names)


def parse_prime(text: str, parsed: ParsedIdeal) -> MonomialPrime:
    """A prime as a comma-separated variable list in the ideal's naming."""
    support = set()
    lookup = {name: i + 1 for i, name in enumerate(parsed.names)}
    for piece in text.split(","):
        name = piece.strip()
        if name not in lookup:
            raise ParseError(f"unknown variable {name!r}", text, text.find(piece))
        support.add(lookup[name])
    return MonomialPrime(parsed.ideal.ambient, frozenset(support))


def format_monomial(m: Monomial, names: tuple[str, ...] | None = None) -> str:
    if names is None:
        names = tuple(f"x{i}" for i in range(1, m.ambient + 1))
    if m.is_constant:
        return "1"
    parts = []
    for i, e in enumerate(m.exponents):
        if e == 1:
            parts.append(names[i])
        elif e > 1:
            parts.append(f"{names[i]}^{e}")
    return "*".join(parts)


def format_ideal(ideal: MonomialIdeal, names: tuple[str, ...] | None = None) -> str:
    return ", ".join(format_monomial(g, names) for g in ideal.generators)


class _GraphParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def read_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected an integer")
        return int(self.text[start : self.pos])

    def read_name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            self.fail("expected a graph constructor name")
        return self.text[start : self.pos]

    def parse_expr(self) -> tuple:
        name = self.read_name()
        self.expect("(")
        if name == "path":
            node = ("path", self.read_int())
        elif name == "cycle":
            node = ("cycle", self.read_int())
        elif name in ("join", "cliquesum"):
            left = self.parse_expr()
            self.expect(",")
            node = (name, left, self.parse_expr())
        elif name == "edges":
            n = self.read_int()
            self.expect(";")
            pairs = []
            while True:
                u = self.read_int()
                self.expect("-")
                pairs.append((u, self.read_int()))
                self.skip_ws()
                if self.pos < len(self.text) and self.text[self.pos] == ",":
                    self.pos += 1
                else:
                    break
            node = ("edges", n, tuple(pairs))
        else:
            self.fail(f"unknown graph constructor {name!r}")
        self.expect(")")
        return node


def parse_graph_ast(text: str) -> tuple:
    """Parse to a nested ("path", n) / ("join", a, b) / ... tuple."""
    parser = _GraphParser(text)
    node = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.fail("trailing input after graph expression")
    return node


def build_graph(node: tuple) -> graphs.Graph:
    kind = node[0]
    if kind == "path":
        return graphs.path(node[1])
    if kind == "cycle":
        return graphs.cycle(node[1])
    if kind == "join":
        return graphs.join(build_graph(node[1]), build_graph(node[2]))
    if kind == "cliquesum":
        return graphs.clique_sum_1(build_graph(node[1]), build_graph(node[2]))
    return graphs.from_edges(node[1], node[2])


def parse_graph(text: str) -> graphs.Graph:
    return build_graph(parse_graph_ast(text))
