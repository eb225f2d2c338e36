"""Expression language for the command line.

Atoms are basis elements (``s[2,1]``, ``g[3,2,1]/[1]``, ``G[2]``, ``h2``,
``e3``, ``p4``), integer literals and the parameter ``t``; they combine
with ``+``, ``-``, ``*`` and parentheses.  Parsing a printed canonical
form returns the identical syntax tree.
"""

import re

from .groth import G_truncated, g_skew
from .partitions import as_partition
from .schur import SymFunc, TruncSeries, e_gen, h_gen, p_gen, schur, series_mul, truncate
from .tpoly import T, TPoly


class ExprError(ValueError):
    """Raised on malformed expression text or an unusable evaluation."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([sgGhept])|([\[\],/+\-*()]))")


def tokenize(text):
    text = text.rstrip()
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprError("bad character at position %d in %r" % (pos, text))
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append((sym, None))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ExprError("expected %r, found %r" % (kind, tok[0]))
        return tok

    def parse_partition(self):
        self.expect("[")
        parts = []
        if self.peek() == "int":
            parts.append(self.next()[1])
            while self.peek() == ",":
                self.next()
                parts.append(self.expect("int")[1])
        self.expect("]")
        try:
            return as_partition(parts)
        except ValueError as exc:
            raise ExprError(str(exc))

    def parse_expr(self):
        node = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            rhs = self.parse_term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek() == "*":
            self.next()
            node = ("mul", node, self.parse_factor())
        return node

    def parse_factor(self):
        if self.peek() == "-":
            self.next()
            return ("neg", self.parse_factor())
        return self.parse_atom()

    def parse_atom(self):
        kind = self.peek()
        if kind == "(":
            self.next()
            node = self.parse_expr()
            self.expect(")")
            return node
        if kind == "int":
            return ("int", self.next()[1])
        if kind == "name":
            name = self.next()[1]
            if name == "t":
                return ("t",)
            if name == "s":
                return ("s", self.parse_partition())
            if name == "G":
                return ("G", self.parse_partition())
            if name == "g":
                outer = self.parse_partition()
                inner = ()
                if self.peek() == "/":
                    self.next()
                    inner = self.parse_partition()
                return ("g", outer, inner)
            if name in ("h", "e", "p"):
                k = self.expect("int")[1]
                return (name, k)
        raise ExprError("unexpected token %r" % kind)


def parse_expr(text):
    parser = _Parser(tokenize(text))
    node = parser.parse_expr()
    parser.expect("end")
    return node


def _part_text(la):
    return "[" + ",".join(str(x) for x in la) + "]"


# precedence: additive 1, multiplicative and unary minus 2, atoms 3
def format_expr(node, parent_prec=0):
    kind = node[0]
    if kind == "int":
        return str(node[1])
    if kind == "t":
        return "t"
    if kind == "s":
        return "s" + _part_text(node[1])
    if kind == "G":
        return "G" + _part_text(node[1])
    if kind == "g":
        text = "g" + _part_text(node[1])
        if node[2]:
            text += "/" + _part_text(node[2])
        return text
    if kind in ("h", "e", "p"):
        return "%s%d" % (kind, node[1])
    if kind == "neg":
        text = "-" + format_expr(node[1], 3)
        return "(%s)" % text if parent_prec > 2 else text
    if kind in ("add", "sub"):
        op = "+" if kind == "add" else "-"
        text = format_expr(node[1], 1) + op + format_expr(node[2], 2)
        return "(%s)" % text if parent_prec > 1 else text
    if kind == "mul":
        text = format_expr(node[1], 2) + "*" + format_expr(node[2], 3)
        return "(%s)" % text if parent_prec > 2 else text
    raise ExprError("unknown node %r" % (kind,))


def has_series_atom(node):
    if node[0] == "G":
        return True
    return any(has_series_atom(child) for child in node[1:]
               if isinstance(child, tuple))


def _promote(a, b):
    if isinstance(a, TruncSeries) and isinstance(b, SymFunc):
        return a, _embed(b, a.cap)
    if isinstance(a, SymFunc) and isinstance(b, TruncSeries):
        return _embed(a, b.cap), b
    return a, b


def _embed(f, cap):
    if f.degree() > cap:
        raise ExprError("polynomial part has degree %d above the cap %d"
                        % (f.degree(), cap))
    return truncate(f, cap)


def eval_expr(node, cap=None):
    """Evaluate to a SymFunc, or a TruncSeries when G atoms occur.

    G atoms require an explicit cap; every other value is exact.
    """
    kind = node[0]
    if kind == "int":
        return SymFunc({(): TPoly.const(node[1])})
    if kind == "t":
        return SymFunc({(): T})
    if kind == "s":
        return schur(node[1])
    if kind == "g":
        return g_skew(node[1], node[2])
    if kind == "h":
        return h_gen(node[1])
    if kind == "e":
        return e_gen(node[1])
    if kind == "p":
        try:
            return p_gen(node[1])
        except ValueError as exc:
            raise ExprError(str(exc))
    if kind == "G":
        if cap is None:
            raise ExprError("expressions with G atoms need an explicit cap")
        if cap < sum(node[1]):
            raise ExprError("cap %d is below |%s|" % (cap, _part_text(node[1])))
        return G_truncated(node[1], cap)
    if kind == "neg":
        return -eval_expr(node[1], cap)
    a, b = eval_expr(node[1], cap), eval_expr(node[2], cap)
    a, b = _promote(a, b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        if isinstance(a, TruncSeries):
            return series_mul(a, b)
        return a * b
    raise ExprError("unknown node %r" % (kind,))
