"""Linear functionals, perp operators, the automorphism I and its
t-deformations, the incidence algebra on Young's lattice, and the skew
Pieri rule.

A Functional wraps a truncated series F and acts by the Hall pairing
(F, -).  Its perp operator feeds the first coproduct factor to the
functional; caps are explicit and exceeding one is a hard error, never a
silent truncation.
"""

from functools import cache

from .groth import G_truncated, c_coeff, d_coeff, g_skew
from .partitions import (a_statistic, column_count, contains,
                         horizontal_strip_additions, interval,
                         is_vertical_strip, mobius, size, subpartitions,
                         transpose, vertical_strip_removals)
from .schur import (E_series, H_series, SymFunc, TruncSeries,
                    _coproduct_pairs, hall, series_mul)
from .tpoly import ONE, T, ZERO, TPoly, _coerce, binomial_general


class Functional:
    """The pairing functional (F, -) of a truncated series F."""

    __slots__ = ("series",)

    def __init__(self, series):
        self.series = series

    @property
    def cap(self):
        return self.series.cap

    def __eq__(self, other):
        return isinstance(other, Functional) and self.series == other.series

    def __repr__(self):
        return "Functional(%r)" % (self.series,)


def h_functional(cap, t_param=T):
    return Functional(H_series(cap, t_param))


def e_functional(cap, t_param=T):
    return Functional(E_series(cap, t_param))


def g_perp_functional(mu, cap):
    return Functional(G_truncated(tuple(mu), cap))


def counit_functional(cap):
    return Functional(TruncSeries.unit(cap))


def functional_eval(F, f):
    """Value of (F, f); errors when the cap cannot see all of f."""
    return hall(F.series, f)


def perp(F, f):
    """The operator F-perp: feed the first coproduct leg to (F, -)."""
    if F.cap < f.degree():
        raise ValueError("functional cap %d is below the argument degree %d"
                         % (F.cap, f.degree()))
    acc = {}
    for sigma, c in f.terms.items():
        for (tau, rho), k in _coproduct_pairs(sigma).items():
            a = F.series.coeff(tau)
            if a.is_zero():
                continue
            s = acc.get(rho, ZERO) + c * a * k
            if s.is_zero():
                acc.pop(rho, None)
            else:
                acc[rho] = s
    return SymFunc(acc)


def convolution(F, G):
    """Convolution of pairing functionals: the functional of the product."""
    return Functional(series_mul(F.series, G.series))


def op_I(f):
    """The automorphism sending g_la to the sum of g_mu over mu inside la.

    Computed as the perp of the complete-homogeneous series at t = 1 with
    the cap bound to the degree of f; the substitution f(x) -> f(1, x).
    """
    return perp(h_functional(f.degree(), 1), f)


def op_I_inv(f):
    """Inverse of op_I: the perp of the alternating elementary series."""
    return perp(e_functional(f.degree(), -1), f)


def H_perp(t_param, f):
    """Perp of H at a formal or integer parameter value."""
    return perp(h_functional(f.degree(), _coerce(t_param)), f)


def E_perp(t_param, f):
    """Perp of E at a formal or integer parameter value."""
    return perp(e_functional(f.degree(), _coerce(t_param)), f)


APPLY_OPS = ("I", "Iinv", "Hperp", "Eperp", "Gperp")


def apply_operator(name, f, t_param=None, mu=None):
    """Dispatch an operator by its public name."""
    if name == "I":
        return op_I(f)
    if name == "Iinv":
        return op_I_inv(f)
    if name == "Hperp":
        return H_perp(t_param if t_param is not None else T, f)
    if name == "Eperp":
        return E_perp(t_param if t_param is not None else T, f)
    if name == "Gperp":
        if mu is None:
            raise ValueError("Gperp needs the partition mu")
        return perp(g_perp_functional(mu, f.degree()), f)
    raise ValueError("unknown operator %r" % name)


# ---------------------------------------------------------------------------
# Incidence algebra of Young's lattice, restricted to [empty, ground].

@cache
def _comparable_pairs(ground):
    pairs = []
    for nu in subpartitions(ground):
        for mu in subpartitions(nu):
            pairs.append((mu, nu))
    return tuple(pairs)


class IncidenceFn:
    """Scalar function on comparable pairs inside the interval [(), ground]."""

    __slots__ = ("ground", "values")

    def __init__(self, ground, values=None):
        self.ground = tuple(ground)
        clean = {}
        for (mu, nu), c in (values or {}).items():
            c = _coerce(c)
            if not c.is_zero():
                if not (contains(mu, nu) and contains(nu, self.ground)):
                    raise ValueError("pair (%r, %r) outside the ground interval"
                                     % (mu, nu))
                clean[(tuple(mu), tuple(nu))] = c
        self.values = clean

    def value(self, mu, nu):
        return self.values.get((tuple(mu), tuple(nu)), ZERO)

    def substitute(self, v):
        """Specialize t to the integer v."""
        return IncidenceFn(self.ground,
                           {key: TPoly.const(c.evaluate(v))
                            for key, c in self.values.items()})

    def __eq__(self, other):
        return (isinstance(other, IncidenceFn) and self.ground == other.ground
                and self.values == other.values)

    def __repr__(self):
        return "IncidenceFn(ground=%r, %d entries)" % (self.ground, len(self.values))


def inc_convolve(f, g):
    """Interval convolution (fg)(mu, la) = sum over mu <= nu <= la."""
    if f.ground != g.ground:
        raise ValueError("ground mismatch")
    out = {}
    for mu, la in _comparable_pairs(f.ground):
        s = ZERO
        for nu in interval(mu, la):
            a = f.value(mu, nu)
            if a.is_zero():
                continue
            b = g.value(nu, la)
            if not b.is_zero():
                s = s + a * b
        if not s.is_zero():
            out[(mu, la)] = s
    return IncidenceFn(f.ground, out)


def inc_delta(ground):
    ground = tuple(ground)
    return IncidenceFn(ground, {(mu, mu): ONE for mu in subpartitions(ground)})


def inc_zeta(ground):
    ground = tuple(ground)
    return IncidenceFn(ground, {pair: ONE for pair in _comparable_pairs(ground)})


def inc_mobius(ground):
    ground = tuple(ground)
    vals = {}
    for mu, nu in _comparable_pairs(ground):
        m = mobius(mu, nu)
        if m:
            vals[(mu, nu)] = TPoly.const(m)
    return IncidenceFn(ground, vals)


def inc_it(ground):
    """i_t(mu, la) = t^(number of columns of la/mu)."""
    ground = tuple(ground)
    return IncidenceFn(ground, {(mu, la): T ** column_count(la, mu)
                                for mu, la in _comparable_pairs(ground)})


def inc_jt(ground):
    """j_t: supported on vertical strips la/mu, where it takes the value
    (-1)^|la/mu| t^c (t-1)^(|la/mu| - c) with c the column count."""
    ground = tuple(ground)
    vals = {}
    for mu, la in _comparable_pairs(ground):
        if not is_vertical_strip(la, mu):
            continue
        ncells = size(la) - size(mu)
        c = column_count(la, mu)
        vals[(mu, la)] = (T ** c) * ((T - ONE) ** (ncells - c)) * ((-1) ** ncells)
    return IncidenceFn(ground, vals)


def telescoping_X(q):
    """The alternating column sum whose vanishing drives the induction that
    inverts i_t; exactly zero for every q >= 1."""
    if q < 1:
        raise ValueError("q must be >= 1")
    total = ZERO
    for j in range(q + 1):
        tpow = (1 if j > 0 else 0) + (1 if j < q else 0)
        upow = j - (1 if j > 0 else 0)
        total = total + (T ** tpow) * ((T - ONE) ** upow) * ((-1) ** j)
    return total


# ---------------------------------------------------------------------------
# Skew Pieri rule and the interval-summed structure constants.

def skew_pieri(k, mu, nu):
    """Formal expansion of h_k g_{mu/nu} over skew shapes.

    Returns {(la, eta): integer} summed over la containing mu with la/mu a
    horizontal strip and eta inside nu with nu/eta a vertical strip.  The
    binomial weight uses the falling-factorial extension and is zero for a
    negative lower index.
    """
    mu, nu = tuple(mu), tuple(nu)
    if k < 0:
        raise ValueError("k must be >= 0")
    if not contains(nu, mu):
        raise ValueError("invalid skew shape %r/%r" % (mu, nu))
    nut = transpose(nu)
    out = {}
    for grow in range(k + 1):
        for la in horizontal_strip_additions(mu, grow):
            a_top = a_statistic(la, mu)
            for eta in vertical_strip_removals(nu):
                shrink = size(nu) - size(eta)
                lower = k - grow - shrink
                if lower < 0:
                    continue
                m = a_top - a_statistic(nut, transpose(eta)) - shrink
                coef = ((-1) ** (k - grow)) * binomial_general(m, lower)
                if coef:
                    key = (la, eta)
                    v = out.get(key, 0) + coef
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
    return out


def expand_skew_sum(formal):
    """Evaluate a formal {(la, eta): int} sum into a SymFunc."""
    out = SymFunc.zero()
    for (la, eta), c in formal.items():
        out = out + g_skew(la, eta).scale(c)
    return out


def tilde_c(la, mu, nu):
    """Interval sum of c-coefficients over kappa between mu and la."""
    la, mu, nu = tuple(la), tuple(mu), tuple(nu)
    return sum(c_coeff(la, kappa, nu) for kappa in interval(mu, la))


def tilde_d(la, mu, nu):
    """Double interval sum of d-coefficients over subshapes of mu and nu."""
    la, mu, nu = tuple(la), tuple(mu), tuple(nu)
    return sum(d_coeff(la, alpha, beta)
               for alpha in subpartitions(mu) for beta in subpartitions(nu))
