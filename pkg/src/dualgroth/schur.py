"""The ring of symmetric functions in the Schur basis over integer
polynomials in t.

SymFunc is a finite Schur expansion; TruncSeries holds every term of degree
at most an explicit cap and models elements of the completion (H(t), E(t),
stable Grothendieck series).  Products use the Littlewood-Richardson rule,
computed by direct enumeration of lattice-word skew tableaux.
"""

from functools import cache

from .partitions import (contains, partitions_of, partitions_up_to, size,
                         sort_key, subpartitions, transpose)
from .tpoly import ONE, T, ZERO, MultiPoly, TPoly, _coerce


@cache
def lr_coeff(la, mu, nu):
    """Littlewood-Richardson coefficient: multiplicity of s_la in s_mu s_nu.

    Counts semistandard fillings of la/mu with content nu whose reverse
    reading word (rows top to bottom, each read right to left) is a lattice
    word.  Zero unless |mu| + |nu| = |la| and both mu, nu sit inside la.
    """
    if size(mu) + size(nu) != size(la):
        return 0
    if not contains(mu, la) or not contains(nu, la):
        return 0
    order = []
    for r in range(len(la)):
        lo = mu[r] if r < len(mu) else 0
        for c in range(la[r] - 1, lo - 1, -1):
            order.append((r, c))
    if not order:
        return 1
    nmax = len(nu)
    count = [0] * (nmax + 2)
    grid = [[0] * w for w in la]
    hits = 0

    def fill(idx):
        nonlocal hits
        if idx == len(order):
            hits += 1
            return
        r, c = order[idx]
        lo = 1
        if r >= 1 and c >= (mu[r - 1] if r - 1 < len(mu) else 0):
            lo = grid[r - 1][c] + 1
        hi = grid[r][c + 1] if c + 1 < la[r] else nmax
        for v in range(lo, hi + 1):
            if count[v] >= nu[v - 1]:
                continue
            if v > 1 and count[v] >= count[v - 1]:
                continue
            grid[r][c] = v
            count[v] += 1
            fill(idx + 1)
            count[v] -= 1

    fill(0)
    return hits


@cache
def _mul_pair(mu, nu):
    """Schur expansion of s_mu s_nu as a read-only dict la -> int."""
    n = size(mu) + size(nu)
    out = {}
    for la in partitions_of(n):
        if contains(mu, la) and contains(nu, la):
            c = lr_coeff(la, mu, nu)
            if c:
                out[la] = c
    return out


@cache
def _coproduct_pairs(sigma):
    """Coproduct of s_sigma as a read-only dict (tau, rho) -> int."""
    out = {}
    n = size(sigma)
    for tau in subpartitions(sigma):
        for rho in partitions_of(n - size(tau)):
            if contains(rho, sigma):
                c = lr_coeff(sigma, tau, rho)
                if c:
                    out[(tau, rho)] = c
    return out


class SymFunc:
    """Finite Schur-basis expansion with TPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for la, c in (terms or {}).items():
            c = _coerce(c)
            if not c.is_zero():
                clean[tuple(la)] = c
        self.terms = clean

    @staticmethod
    def zero():
        return SymFunc()

    @staticmethod
    def one():
        return SymFunc({(): ONE})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((size(la) for la in self.terms), default=0)

    def coeff(self, la):
        return self.terms.get(tuple(la), ZERO)

    def support(self):
        return sorted(self.terms, key=sort_key)

    def __add__(self, other):
        out = dict(self.terms)
        for la, c in other.terms.items():
            s = out.get(la, ZERO) + c
            if s.is_zero():
                out.pop(la, None)
            else:
                out[la] = s
        return SymFunc(out)

    def __neg__(self):
        return SymFunc({la: -c for la, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coerce(c)
        if c.is_zero():
            return SymFunc()
        return SymFunc({la: x * c for la, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, TPoly)):
            return self.scale(other)
        out = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                ab = a * b
                for la, k in _mul_pair(*sorted((mu, nu))).items():
                    s = out.get(la, ZERO) + ab * k
                    if s.is_zero():
                        out.pop(la, None)
                    else:
                        out[la] = s
        return SymFunc(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "SymFunc(0)"
        bits = ["(%s)*s%r" % (c.text(), list(la)) for la, c in
                sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))]
        return "SymFunc(%s)" % " + ".join(bits)


def schur(la):
    return SymFunc({tuple(la): ONE})


def h_gen(k):
    """Complete homogeneous h_k = s_(k)."""
    if k < 0:
        raise ValueError("h_k needs k >= 0")
    return SymFunc({(k,) if k else (): ONE})


def e_gen(k):
    """Elementary e_k = s_(1^k)."""
    if k < 0:
        raise ValueError("e_k needs k >= 0")
    return SymFunc({(1,) * k: ONE})


def p_gen(k):
    """Power sum p_k via the hook expansion sum_i (-1)^i s_(k-i,1^i)."""
    if k < 1:
        raise ValueError("p_k needs k >= 1")
    terms = {}
    for i in range(k):
        hook = (k - i,) + (1,) * i
        terms[hook] = TPoly.const((-1) ** i)
    return SymFunc(terms)


class TensorElem:
    """Element of the tensor square, a finite sum of s_mu (x) s_nu."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = _coerce(c)
            if not c.is_zero():
                clean[(tuple(key[0]), tuple(key[1]))] = c
        self.terms = clean

    def coeff(self, mu, nu):
        return self.terms.get((tuple(mu), tuple(nu)), ZERO)

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, ZERO) + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return TensorElem(out)

    def __sub__(self, other):
        return self + TensorElem({k: -c for k, c in other.terms.items()})

    def scale(self, c):
        return TensorElem({k: x * _coerce(c) for k, x in self.terms.items()})

    def __mul__(self, other):
        """Componentwise product (a (x) b)(c (x) d) = ac (x) bd, bilinearly."""
        out = TensorElem()
        acc = {}
        for (m1, n1), c1 in self.terms.items():
            for (m2, n2), c2 in other.terms.items():
                c = c1 * c2
                left = _mul_pair(*sorted((m1, m2)))
                right = _mul_pair(*sorted((n1, n2)))
                for lm, km in left.items():
                    for ln, kn in right.items():
                        key = (lm, ln)
                        s = acc.get(key, ZERO) + c * (km * kn)
                        if s.is_zero():
                            acc.pop(key, None)
                        else:
                            acc[key] = s
        out.terms = acc
        return out

    def swap(self):
        return TensorElem({(nu, mu): c for (mu, nu), c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TensorElem) and self.terms == other.terms

    def __repr__(self):
        bits = ["(%s)*s%r(x)s%r" % (c.text(), list(m), list(n))
                for (m, n), c in sorted(self.terms.items())]
        return "TensorElem(%s)" % (" + ".join(bits) or "0")


def coproduct(f):
    """Coproduct of f, linearly extended from the Schur rule."""
    acc = {}
    for sigma, c in f.terms.items():
        for key, k in _coproduct_pairs(sigma).items():
            s = acc.get(key, ZERO) + c * k
            if s.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = s
    out = TensorElem()
    out.terms = acc
    return out


def antipode(f):
    """Antipode: s_la -> (-1)^|la| s_(la transposed), linearly extended."""
    out = {}
    for la, c in f.terms.items():
        lat = transpose(la)
        s = out.get(lat, ZERO) + c * ((-1) ** size(la))
        if s.is_zero():
            out.pop(lat, None)
        else:
            out[lat] = s
    return SymFunc(out)


def counit(f):
    """Constant term: the coefficient of the empty Schur function."""
    return f.coeff(())


def phi_t(f):
    """Variable scaling x -> tx: multiply each degree-d term by t^d."""
    if isinstance(f, TruncSeries):
        return TruncSeries(f.cap, {la: c * T ** size(la) for la, c in f.terms.items()})
    return SymFunc({la: c * T ** size(la) for la, c in f.terms.items()})


class TruncSeries:
    """Schur expansion holding every term of degree <= cap.

    Arithmetic between two series truncates to the smaller cap and records
    it in the result; no coproduct is ever taken of a series.
    """

    __slots__ = ("cap", "terms")

    def __init__(self, cap, terms=None):
        if cap < 0:
            raise ValueError("cap must be >= 0")
        self.cap = cap
        clean = {}
        for la, c in (terms or {}).items():
            c = _coerce(c)
            if not c.is_zero() and size(la) <= cap:
                clean[tuple(la)] = c
        self.terms = clean

    @staticmethod
    def unit(cap):
        return TruncSeries(cap, {(): ONE})

    def coeff(self, la):
        return self.terms.get(tuple(la), ZERO)

    def support(self):
        return sorted(self.terms, key=sort_key)

    def __add__(self, other):
        cap = min(self.cap, other.cap)
        out = {la: c for la, c in self.terms.items() if size(la) <= cap}
        for la, c in other.terms.items():
            if size(la) > cap:
                continue
            s = out.get(la, ZERO) + c
            if s.is_zero():
                out.pop(la, None)
            else:
                out[la] = s
        return TruncSeries(cap, out)

    def __neg__(self):
        return TruncSeries(self.cap, {la: -c for la, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coerce(c)
        return TruncSeries(self.cap, {la: x * c for la, x in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.cap == other.cap
                and self.terms == other.terms)

    def __repr__(self):
        bits = ["(%s)*s%r" % (c.text(), list(la)) for la, c in
                sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))]
        return "TruncSeries(cap=%d, %s)" % (self.cap, " + ".join(bits) or "0")


def truncate(f, cap):
    """View a SymFunc as a TruncSeries with the given cap."""
    if f.degree() > cap:
        raise ValueError("degree %d exceeds cap %d" % (f.degree(), cap))
    return TruncSeries(cap, dict(f.terms))


def series_mul(F, G):
    """Product of truncated series, truncated at the smaller cap."""
    cap = min(F.cap, G.cap)
    out = {}
    for mu, a in F.terms.items():
        dmu = size(mu)
        if dmu > cap:
            continue
        for nu, b in G.terms.items():
            if dmu + size(nu) > cap:
                continue
            ab = a * b
            for la, k in _mul_pair(*sorted((mu, nu))).items():
                s = out.get(la, ZERO) + ab * k
                if s.is_zero():
                    out.pop(la, None)
                else:
                    out[la] = s
    return TruncSeries(cap, out)


def H_series(N, t_param=T):
    """H(t) truncated at N: sum of t^i h_i with h_i = s_(i)."""
    t_param = _coerce(t_param)
    return TruncSeries(N, {(i,) if i else (): t_param ** i for i in range(N + 1)})


def E_series(N, t_param=T):
    """E(t) truncated at N: sum of t^i e_i with e_i one column."""
    t_param = _coerce(t_param)
    return TruncSeries(N, {(1,) * i: t_param ** i for i in range(N + 1)})


def is_group_like(F):
    """Check A_empty = 1 and A_mu A_nu = sum_la A_la c^la_{mu nu} for every
    pair with |mu| + |nu| <= cap (the part of the condition the cap can see).
    """
    if F.coeff(()) != ONE:
        return False
    small = partitions_up_to(F.cap)
    for mu in small:
        for nu in small:
            n = size(mu) + size(nu)
            if n > F.cap:
                continue
            lhs = F.coeff(mu) * F.coeff(nu)
            rhs = ZERO
            for la in partitions_of(n):
                c = F.coeff(la)
                if not c.is_zero():
                    k = lr_coeff(la, mu, nu)
                    if k:
                        rhs = rhs + c * k
            if lhs != rhs:
                return False
    return True


def hall(F, f):
    """Hall inner product of F (series or SymFunc) against a SymFunc."""
    if isinstance(F, TruncSeries) and F.cap < f.degree():
        raise ValueError("series cap %d is below the argument degree %d"
                         % (F.cap, f.degree()))
    out = ZERO
    small, big = (F.terms, f.terms) if len(F.terms) <= len(f.terms) else (f.terms, F.terms)
    for la, c in small.items():
        d = big.get(la)
        if d is not None:
            out = out + c * d
    return out


# ---------------------------------------------------------------------------
# Symmetric polynomials in finitely many variables.
#
# The internal engine works on raw {exponent tuple: int} dicts; the public
# MultiPoly entry points split TPoly coefficients into t-power slices and
# reuse it.

@cache
def ssyt_poly(la, n):
    """Schur polynomial s_la(x_1..x_n) as a raw int dict (read-only).

    Row-transfer sum over semistandard tableaux: rows weakly increase,
    columns strictly increase, entries bounded by n.
    """
    if not la:
        return {(0,) * n: 1}
    if len(la) > n:
        return {}
    frontier = {(): {(0,) * n: 1}}
    for width in la:
        nxt = {}
        for prev, poly in frontier.items():
            rows = []

            def build(c, lastv, acc):
                if c == width:
                    rows.append(tuple(acc))
                    return
                lo = lastv
                if c < len(prev):
                    lo = max(lo, prev[c] + 1)
                for v in range(lo, n + 1):
                    build(c + 1, v, acc + [v])

            build(0, 1, [])
            for row in rows:
                mono = [0] * n
                for v in row:
                    mono[v - 1] += 1
                mono = tuple(mono)
                tgt = nxt.setdefault(row, {})
                for exp, c in poly.items():
                    key = tuple(a + b for a, b in zip(exp, mono))
                    tgt[key] = tgt.get(key, 0) + c
        frontier = nxt
    total = {}
    for poly in frontier.values():
        for exp, c in poly.items():
            total[exp] = total.get(exp, 0) + c
    return total


def raw_is_symmetric(p, n):
    """Symmetry of a raw int-dict polynomial under adjacent transpositions."""
    for i in range(n - 1):
        for exp, c in p.items():
            if exp[i] == exp[i + 1]:
                continue
            swapped = list(exp)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if p.get(tuple(swapped), 0) != c:
                return False
    return True


def schur_expand_raw(p, n):
    """Expand a symmetric raw int-dict polynomial over Schur polynomials.

    Returns {partition: int} covering every partition with at most n rows;
    repeatedly strips the lex-greatest surviving monomial, whose exponent
    vector must be weakly decreasing for a symmetric input.
    """
    p = {e: c for e, c in p.items() if c}
    out = {}
    while p:
        exp = max(p)
        if any(exp[i] < exp[i + 1] for i in range(len(exp) - 1)):
            raise ValueError("input polynomial is not symmetric")
        la = tuple(x for x in exp if x)
        c = p[exp]
        out[la] = c
        for e2, c2 in ssyt_poly(la, n).items():
            v = p.get(e2, 0) - c * c2
            if v:
                p[e2] = v
            else:
                p.pop(e2, None)
    return out


def to_polynomial(f, n):
    """Evaluate a SymFunc in the variables x_1..x_n."""
    if n < 1:
        raise ValueError("need at least one variable")
    acc = {}
    for la, c in f.terms.items():
        for exp, k in ssyt_poly(la, n).items():
            s = acc.get(exp, ZERO) + c * k
            if s.is_zero():
                acc.pop(exp, None)
            else:
                acc[exp] = s
    return MultiPoly(n, acc)


def from_polynomial(p):
    """Lift a symmetric polynomial in n >= deg(p) variables back to a SymFunc.

    The lift is the unique symmetric function of degree <= n restricting to
    p; computed slice by slice in powers of t.
    """
    if not p.is_symmetric():
        raise ValueError("input polynomial is not symmetric")
    if p.nvars < p.total_degree():
        raise ValueError("too few variables: %d for degree %d"
                         % (p.nvars, p.total_degree()))
    maxpow = max((c.degree() for c in p.terms.values()), default=-1)
    acc = {}
    for k in range(maxpow + 1):
        slice_k = {}
        for exp, c in p.terms.items():
            if k <= c.degree() and c.coeffs[k]:
                slice_k[exp] = c.coeffs[k]
        if not slice_k:
            continue
        tk = T ** k
        for la, c in schur_expand_raw(slice_k, p.nvars).items():
            s = acc.get(la, ZERO) + tk * c
            if s.is_zero():
                acc.pop(la, None)
            else:
                acc[la] = s
    return SymFunc(acc)
