"""Text grammars: infix polynomials and s-expression formulas.

Polynomials: ``x^4 + 2*x^2*y^2 - 3/2*y + 1`` with explicit ``*``, ``^`` with
nonnegative integer exponents, and rational literals ``p/q``.

Formulas: prefix s-expressions, e.g.
``(and (<= (+ (^ y1 2) (^ y2 2)) 1) (>= (+ (* 3 y1) (* 4 y2)) 5))``.
Relations: ``= != < > <= >=``; connectives ``and or not``; constants ``true``
``false``; arithmetic ``+ - * ^``.  An optional leading ``(vars ...)`` form
pins the variable order; otherwise variables appear in first-occurrence order.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ratpoint import formulas as fm
from ratpoint.errors import ParseError
from ratpoint.multipoly import MultiPoly

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
_INT_RE = re.compile(r"[0-9]+")


# -- infix polynomial grammar ---------------------------------------------------


def _tokenize_infix(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^/()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        m = _INT_RE.match(text, i)
        if m:
            tokens.append(("int", m.group(), i))
            i = m.end()
            continue
        m = _NAME_RE.match(text, i)
        if m:
            tokens.append(("name", m.group(), i))
            i = m.end()
            continue
        raise ParseError("unexpected character", position=i, token=ch)
    tokens.append(("end", "", len(text)))
    return tokens


class _InfixParser:
    def __init__(self, text: str, variables):
        self.tokens = _tokenize_infix(text)
        self.pos = 0
        if variables is None:
            variables = []
            for kind, val, _ in self.tokens:
                if kind == "name" and val not in variables:
                    variables.append(val)
        self.variables = tuple(variables)

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}", position=tok[2], token=tok[1])
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("trailing input", position=tok[2], token=tok[1])
        return p

    def expr(self) -> MultiPoly:
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> MultiPoly:
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> MultiPoly:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        if self.peek()[0] == "+":
            self.take()
            return self.factor()
        p = self.primary()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            p = p ** int(tok[1])
        return p

    def primary(self) -> MultiPoly:
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            value = Fraction(int(tok[1]))
            if self.peek()[0] == "/":
                self.take()
                den = self.take("int")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", position=den[2], token=den[1])
                value = value / int(den[1])
            return MultiPoly.constant(self.variables, value)
        if tok[0] == "name":
            self.take()
            return MultiPoly.variable(self.variables, tok[1])
        if tok[0] == "(":
            self.take()
            p = self.expr()
            closing = self.peek()
            if closing[0] != ")":
                raise ParseError("expected ')'", position=closing[2], token=closing[1])
            self.take()
            return p
        raise ParseError("expected a number, variable, or '('", position=tok[2], token=tok[1])


def parse_polynomial(text: str, variables=None) -> MultiPoly:
    """Parse infix polynomial text.  When ``variables`` is None the variable
    list is inferred in first-occurrence order."""
    return _InfixParser(text, variables).parse()


def polynomial_variables(text: str) -> list:
    """Variable names in first-occurrence order, without parsing fully."""
    return list(dict.fromkeys(m.group() for m in _NAME_RE.finditer(text)))


# -- s-expression formula grammar -------------------------------------------------

_RESERVED = {"and", "or", "not", "vars", "true", "false"}
_RELS = {"=": fm.EQ, "!=": fm.NE, "<": fm.LT, ">": fm.GT, "<=": fm.LE, ">=": fm.GE}


def _tokenize_sexp(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace() and text[j] not in "()":
            j += 1
        tokens.append(("word", text[i:j], i))
        i = j
    return tokens


def _read_sexp(tokens, pos):
    if pos >= len(tokens):
        raise ParseError("unexpected end of input", position=None)
    kind, val, at = tokens[pos]
    if kind == "(":
        items = []
        pos += 1
        while pos < len(tokens) and tokens[pos][0] != ")":
            item, pos = _read_sexp(tokens, pos)
            items.append(item)
        if pos >= len(tokens):
            raise ParseError("missing ')'", position=at, token="(")
        return (items, at), pos + 1
    if kind == ")":
        raise ParseError("unbalanced ')'", position=at, token=")")
    return (val, at), pos + 1


_NUM_RE = re.compile(r"-?[0-9]+(/[0-9]+)?\Z")


def _collect_names(tree, out):
    node, _ = tree
    if isinstance(node, list):
        for item in node[1:]:
            _collect_names(item, out)
    elif _NAME_RE.fullmatch(node) and node not in _RESERVED:
        if node not in out:
            out.append(node)


def _poly_from_sexp(tree, variables) -> MultiPoly:
    node, at = tree
    if isinstance(node, str):
        if _NUM_RE.match(node):
            try:
                value = Fraction(node)
            except ZeroDivisionError:
                raise ParseError("zero denominator", position=at, token=node) from None
            return MultiPoly.constant(variables, value)
        if _NAME_RE.fullmatch(node) and node not in _RESERVED:
            if node not in variables:
                raise ParseError(f"undeclared variable {node}", position=at, token=node)
            return MultiPoly.variable(variables, node)
        raise ParseError("expected a number or variable", position=at, token=node)
    if not node:
        raise ParseError("empty arithmetic expression", position=at)
    head, hat = node[0]
    if isinstance(head, list):
        raise ParseError("operator must be a word", position=hat)
    args = node[1:]
    if head == "+":
        if not args:
            return MultiPoly.zero(variables)
        acc = _poly_from_sexp(args[0], variables)
        for a in args[1:]:
            acc = acc + _poly_from_sexp(a, variables)
        return acc
    if head == "*":
        acc = MultiPoly.constant(variables, Fraction(1))
        for a in args:
            acc = acc * _poly_from_sexp(a, variables)
        return acc
    if head == "-":
        if not args:
            raise ParseError("'-' needs arguments", position=hat, token=head)
        if len(args) == 1:
            return -_poly_from_sexp(args[0], variables)
        acc = _poly_from_sexp(args[0], variables)
        for a in args[1:]:
            acc = acc - _poly_from_sexp(a, variables)
        return acc
    if head == "^":
        if len(args) != 2:
            raise ParseError("'^' needs a base and an exponent", position=hat, token=head)
        base = _poly_from_sexp(args[0], variables)
        word, wat = args[1]
        if isinstance(word, list) or not word.isdigit():
            raise ParseError("exponent must be a nonnegative integer", position=wat)
        return base ** int(word)
    raise ParseError(f"unknown arithmetic operator {head!r}", position=hat, token=head)


def _formula_from_sexp(tree, variables):
    node, at = tree
    if isinstance(node, str):
        if node == "true":
            return fm.TRUE
        if node == "false":
            return fm.FALSE
        raise ParseError("expected a formula", position=at, token=node)
    if not node:
        raise ParseError("empty formula", position=at)
    head, hat = node[0]
    if isinstance(head, list):
        raise ParseError("operator must be a word", position=hat)
    args = node[1:]
    if head == "and":
        return fm.And(tuple(_formula_from_sexp(a, variables) for a in args))
    if head == "or":
        return fm.Or(tuple(_formula_from_sexp(a, variables) for a in args))
    if head == "not":
        if len(args) != 1:
            raise ParseError("'not' takes one argument", position=hat, token=head)
        return fm.Not(_formula_from_sexp(args[0], variables))
    if head in _RELS:
        if len(args) != 2:
            raise ParseError(f"{head!r} takes two arguments", position=hat, token=head)
        lhs = _poly_from_sexp(args[0], variables)
        rhs = _poly_from_sexp(args[1], variables)
        return fm.Atom(lhs - rhs, _RELS[head])
    raise ParseError(f"unknown formula operator {head!r}", position=hat, token=head)


def parse_formula(text: str) -> fm.Formula:
    """Parse an s-expression formula, with optional leading (vars ...) form."""
    tokens = _tokenize_sexp(text)
    if not tokens:
        raise ParseError("empty input", position=0)
    tree, pos = _read_sexp(tokens, 0)
    declared = None
    node, at = tree
    if isinstance(node, list) and node and node[0][0] == "vars":
        declared = []
        for word, wat in node[1:]:
            if isinstance(word, list) or not _NAME_RE.fullmatch(word) or word in _RESERVED:
                raise ParseError("bad variable name in (vars ...)", position=wat)
            if word in declared:
                raise ParseError(f"duplicate variable {word}", position=wat, token=word)
            declared.append(word)
        tree, pos = _read_sexp(tokens, pos)
        node, at = tree
    if pos != len(tokens):
        raise ParseError("trailing input after formula", position=tokens[pos][2], token=tokens[pos][1])
    if declared is None:
        declared = []
        _collect_names(tree, declared)
    variables = tuple(declared)
    root = _formula_from_sexp(tree, variables)
    return fm.Formula(variables, root)


def poly_to_text(p: MultiPoly) -> str:
    """Infix rendering that round-trips through parse_polynomial."""
    return str(p)
