"""Exact arithmetic: integer polynomials in the formal parameter t, and
sparse multivariate polynomials over them.

TPoly is the scalar ring of the whole package; coefficients are Python
ints, so nothing ever overflows or rounds.  MultiPoly evaluates symmetric
generating functions in finitely many variables x_1..x_n.
"""

from math import factorial


class TPoly:
    """Univariate integer polynomial in t, canonical form (no trailing zeros)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @staticmethod
    def const(n):
        return TPoly((n,))

    @staticmethod
    def t():
        return TPoly((0, 1))

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def degree(self):
        """Degree, with the zero polynomial taken as degree -1."""
        return len(self.coeffs) - 1

    def as_int(self):
        """The constant value; raises if t actually occurs."""
        if len(self.coeffs) > 1:
            raise ValueError("polynomial %s is not constant" % self)
        return self.coeffs[0] if self.coeffs else 0

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly(tuple((self.coeffs[i] if i < len(self.coeffs) else 0)
                           + (other.coeffs[i] if i < len(other.coeffs) else 0)
                           for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return TPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = TPoly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly((other,))
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, v):
        """Exact integer value at t = v (Horner)."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def substitute(self, other):
        """Compose: replace t by another TPoly."""
        out = TPoly()
        for c in reversed(self.coeffs):
            out = out * other + TPoly((c,))
        return out

    def text(self):
        """Canonical text, highest power first: ``t^3-3*t^2+3*t-1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else "t^%d" % k
                body = var if mag == 1 else "%d*%s" % (mag, var)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return "TPoly(%s)" % self.text()

    def __str__(self):
        return self.text()


ZERO = TPoly()
ONE = TPoly((1,))
T = TPoly((0, 1))


def _coerce(x):
    if isinstance(x, TPoly):
        return x
    if isinstance(x, int):
        return TPoly((x,))
    raise TypeError("cannot coerce %r to TPoly" % (x,))


def parse_t_value(text):
    """Parse a CLI ``--t`` value: an integer literal or the letter t."""
    s = text.strip()
    if s == "t":
        return T
    try:
        return TPoly.const(int(s))
    except ValueError:
        raise ValueError("t value must be an integer or 't': %r" % text)


def binomial_general(m, n):
    """binom(m, n) for integer m of any sign; zero when n < 0."""
    if n < 0:
        return 0
    num = 1
    for i in range(n):
        num *= m - i
    return num // factorial(n)


class MultiPoly:
    """Sparse polynomial in x_1..x_n with TPoly coefficients.

    Keys are exponent tuples of length nvars; zero coefficients are never
    stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            c = _coerce(c)
            if not c.is_zero():
                if len(exp) != nvars:
                    raise ValueError("exponent %r has wrong length" % (exp,))
                clean[tuple(exp)] = c
        self.terms = clean

    @staticmethod
    def constant(nvars, c):
        c = _coerce(c)
        if c.is_zero():
            return MultiPoly(nvars)
        return MultiPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(nvars, i):
        exp = [0] * nvars
        exp[i] = 1
        return MultiPoly(nvars, {tuple(exp): ONE})

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, ZERO) + c
            if s.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = s
        return MultiPoly(self.nvars, out)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def mul(self, other, degree_cap=None):
        """Exact product; terms above degree_cap dropped when a cap is given."""
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")
        out = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if degree_cap is not None and d1 + sum(e2) > degree_cap:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, (int, TPoly)):
            c0 = _coerce(other)
            return MultiPoly(self.nvars, {e: c * c0 for e, c in self.terms.items()})
        return self.mul(other)

    __rmul__ = __mul__

    def is_symmetric(self):
        """Invariance under every adjacent transposition x_i <-> x_{i+1}."""
        for i in range(self.nvars - 1):
            for exp, c in self.terms.items():
                if exp[i] == exp[i + 1]:
                    continue
                swapped = list(exp)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.terms.get(tuple(swapped), ZERO) != c:
                    return False
        return True

    def substitute_first(self, value):
        """Set x_1 = value (an integer) and drop that variable."""
        out = {}
        for exp, c in self.terms.items():
            scaled = c * (value ** exp[0]) if exp[0] else c
            e = exp[1:]
            s = out.get(e, ZERO) + scaled
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.nvars - 1, out)

    def shift_vars(self, total, offset):
        """Embed into x_1..x_total with variables moved up by offset."""
        if offset + self.nvars > total:
            raise ValueError("shift exceeds variable count")
        out = {}
        for exp, c in self.terms.items():
            e = (0,) * offset + exp + (0,) * (total - offset - self.nvars)
            out[e] = c
        return MultiPoly(total, out)

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for exp in sorted(self.terms, reverse=True):
            mono = "*".join("x%d^%d" % (i + 1, e) for i, e in enumerate(exp) if e)
            bits.append("(%s)%s" % (self.terms[exp].text(), "*" + mono if mono else ""))
        return "MultiPoly(%s)" % " + ".join(bits)
