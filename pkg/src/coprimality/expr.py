"""Set-expression language for the command line.

Grammar (precedence ``~`` > ``&`` > ``\\`` > ``|``, all left-associative)::

    expr  := union
    union := diff ('|' diff)*
    diff  := inter ('\\' inter)*
    inter := unary ('&' unary)*
    unary := '~' unary | atom
    atom  := 'N' | 'N1' | 'sigma' '(' int ')' | 'M' '(' int ')'
           | 'class' '(' int ',' int ')' | 'ap' '(' int ',' int ')'
           | '{' int (',' int)* '}' | '(' expr ')'

``class(a, m)`` is the residue class of ``a`` mod ``m``; ``ap(a, b)`` is the
Golomb progression ``a + b*N0`` and requires ``gcd(a, b) = 1``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from . import golomb, perset, topology
from .perset import EPSet


class ExprError(ValueError):
    pass


class ParseError(ExprError):
    def __init__(self, offset: int, expected, found: str):
        self.offset = offset
        self.expected = sorted(set(expected))
        self.found = found
        super().__init__(f"syntax error at byte {offset}: expected one of {', '.join(self.expected)}; found {found}")


class SemanticError(ExprError):
    pass


@dataclass(frozen=True)
class Atom:
    kind: str  # N, N1, sigma, M, class, ap, literal
    args: tuple[int, ...] = ()


@dataclass(frozen=True)
class Unary:
    op: str
    operand: object


@dataclass(frozen=True)
class Binary:
    op: str
    left: object
    right: object


SetExpr = Atom | Unary | Binary

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[~&|\\(){},]))")
_NAMES = {"N", "N1", "sigma", "M", "class", "ap"}
_ARITY = {"sigma": 1, "M": 1, "class": 2, "ap": 2}


def _tokenize(text: str):
    data = text.encode()
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(len(text[:pos].encode()), ["an integer", "a name", "an operator"], repr(text[pos]))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), len(text[:start].encode())))
        pos = m.end()
    tokens.append(("eof", "", len(data)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        kind, value, offset = self.peek()
        raise ParseError(offset, expected, "end of input" if kind == "eof" else repr(value))

    def expect_sym(self, sym):
        kind, value, _ = self.peek()
        if kind == "sym" and value == sym:
            return self.take()
        self.fail([repr(sym)])

    def integer(self):
        kind, value, _ = self.peek()
        if kind != "int":
            self.fail(["an integer"])
        self.take()
        return int(value)

    def binary_level(self, sym, lower):
        node = lower()
        while self.peek()[0] == "sym" and self.peek()[1] == sym:
            self.take()
            node = Binary(sym, node, lower())
        return node

    def union(self):
        return self.binary_level("|", self.diff)

    def diff(self):
        return self.binary_level("\\", self.inter)

    def inter(self):
        return self.binary_level("&", self.unary)

    def unary(self):
        kind, value, _ = self.peek()
        if kind == "sym" and value == "~":
            self.take()
            return Unary("~", self.unary())
        return self.atom()

    def atom(self):
        kind, value, offset = self.peek()
        if kind == "name" and value in _NAMES:
            self.take()
            if value in ("N", "N1"):
                return Atom(value)
            self.expect_sym("(")
            args = [self.integer()]
            for _ in range(_ARITY[value] - 1):
                self.expect_sym(",")
                args.append(self.integer())
            self.expect_sym(")")
            return _checked(Atom(value, tuple(args)))
        if kind == "sym" and value == "{":
            self.take()
            elems = [self.integer()]
            while self.peek()[0] == "sym" and self.peek()[1] == ",":
                self.take()
                elems.append(self.integer())
            self.expect_sym("}")
            return _checked(Atom("literal", tuple(sorted(set(elems)))))
        if kind == "sym" and value == "(":
            self.take()
            node = self.union()
            self.expect_sym(")")
            return node
        self.fail(["'N'", "'N1'", "'sigma'", "'M'", "'class'", "'ap'", "'{'", "'('", "'~'"])


def _checked(atom: Atom) -> Atom:
    args = atom.args
    if any(a < 0 for a in args):
        raise SemanticError(f"{atom.kind}: arguments must be non-negative")
    if atom.kind in ("sigma", "M") and args[0] < 1:
        raise SemanticError(f"{atom.kind}({args[0]}): argument must be >= 1")
    if atom.kind == "class":
        a, m = args
        if m < 1 or a >= m:
            raise SemanticError(f"class({a},{m}): need m >= 1 and 0 <= a < m")
    if atom.kind == "ap":
        a, b = args
        if a < 1 or b < 1:
            raise SemanticError(f"ap({a},{b}): need a, b >= 1")
        if math.gcd(a, b) != 1:
            raise SemanticError(f"ap({a},{b}): gcd(a,b)={math.gcd(a, b)}, must be 1")
    if atom.kind == "literal" and any(a < 1 for a in args):
        raise SemanticError("set literal elements must be positive integers")
    return atom


def parse_expr(text: str) -> SetExpr:
    parser = _Parser(text)
    node = parser.union()
    if parser.peek()[0] != "eof":
        parser.fail(["'|'", "'\\'", "'&'", "end of input"])
    return node


_PREC = {"|": 1, "\\": 2, "&": 3}


def render(node: SetExpr, parent: int = 0) -> str:
    """Source text for ``node``; reparses to an equal tree."""
    if isinstance(node, Atom):
        if node.kind in ("N", "N1"):
            return node.kind
        if node.kind == "literal":
            return "{" + ",".join(map(str, node.args)) + "}"
        return f"{node.kind}({','.join(map(str, node.args))})"
    if isinstance(node, Unary):
        return "~" + render(node.operand, 4)
    prec = _PREC[node.op]
    # right operand is wrapped at equal precedence to keep left-associativity
    text = f"{render(node.left, prec)} {node.op} {render(node.right, prec + 1)}"
    return f"({text})" if prec < parent else text


def evaluate(node: SetExpr) -> EPSet:
    if isinstance(node, Atom):
        k, args = node.kind, node.args
        if k == "N":
            return perset.NATURALS
        if k == "N1":
            return perset.N1
        if k == "sigma":
            return topology.sigma(args[0])
        if k == "M":
            return perset.multiples(args[0])
        if k == "class":
            return perset.make_periodic(args[1], {args[0]})
        if k == "ap":
            return golomb.golomb_basic(*args)
        return perset.make_explicit(args)
    if isinstance(node, Unary):
        return perset.complement(evaluate(node.operand))
    left, right = evaluate(node.left), evaluate(node.right)
    if node.op == "&":
        return perset.intersect(left, right)
    if node.op == "|":
        return perset.union(left, right)
    return perset.difference(left, right)


def evaluate_text(text: str) -> EPSet:
    return evaluate(parse_expr(text))
