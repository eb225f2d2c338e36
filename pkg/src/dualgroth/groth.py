"""Reverse plane partitions, the dual stable Grothendieck basis g, its dual
series G, and the two families of structure constants.

g_{la/mu} is the generating function of reverse plane partitions of the
skew shape, where a filling contributes one power of x_i per *column*
containing the entry i.  That column-counting weight is what makes g
inhomogeneous.  The series G_la is obtained from the duality
(G_la, g_mu) = delta via a triangular solve against the g-to-Schur
transition.
"""

from functools import cache

from .partitions import (cells, contains, interval, partitions_of_containing,
                         size, transpose)
from .schur import (SymFunc, TensorElem, TruncSeries, hall, raw_is_symmetric,
                    schur_expand_raw)
from .tpoly import ZERO, TPoly


def enumerate_rpp(outer, inner, max_entry):
    """Yield every reverse plane partition of outer/inner with entries in
    1..max_entry, as a dict cell -> value, in column-major fill order.

    Entries weakly increase along rows and down columns.
    """
    if max_entry < 1:
        raise ValueError("max_entry must be >= 1")
    if not contains(inner, outer):
        raise ValueError("not a skew shape: %r/%r" % (tuple(outer), tuple(inner)))
    shape = cells(outer, inner)
    order = sorted(shape, key=lambda rc: (rc[1], rc[0]))
    filling = {}

    def rec(idx):
        if idx == len(order):
            yield dict(filling)
            return
        r, c = order[idx]
        lo = 1
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)])
        if (r, c - 1) in filling:
            lo = max(lo, filling[(r, c - 1)])
        for v in range(lo, max_entry + 1):
            filling[(r, c)] = v
            yield from rec(idx + 1)
        del filling[(r, c)]

    yield from rec(0)


def rpp_weight(filling):
    """Column-content weight: value -> number of columns containing it."""
    per_column = {}
    for (r, c), v in filling.items():
        per_column.setdefault(c, set()).add(v)
    weight = {}
    for vals in per_column.values():
        for v in vals:
            weight[v] = weight.get(v, 0) + 1
    return weight


def rpp_generating_poly(outer, inner, nvars):
    """Sum of x^T over reverse plane partitions with entries <= nvars, as a
    raw {exponent: int} dict.

    Cell-by-cell transfer in column-major order.  A state remembers only
    what later cells can still see: the value above the current cell, the
    unconsumed left-neighbour values, and the values on rows the next
    column shares; fillings that agree there are merged, which keeps
    shapes with astronomically many fillings cheap.  Agrees with summing
    rpp_weight over enumerate_rpp.
    """
    zero = (0,) * nvars
    if not contains(inner, outer):
        return {}
    lt, it = transpose(outer), transpose(inner)
    columns = []
    for c in range(len(lt)):
        top = it[c] if c < len(it) else 0
        if lt[c] > top:
            columns.append((top, lt[c]))
    # frontier: values of the finished column on rows shared with the next;
    # in_start is the first row those values belong to
    frontier = {(): {zero: 1}}
    in_start = 0
    for idx, (top, bot) in enumerate(columns):
        if idx + 1 < len(columns):
            ntop, nbot = columns[idx + 1]
            out_lo, out_hi = max(top, ntop), min(bot, nbot)
        else:
            out_lo, out_hi = bot, bot
        # state: (left-neighbour values not yet consumed, values kept for
        # the next column, value in the cell above) -> polynomial
        states = {}
        for in_rem, poly in frontier.items():
            key = (in_rem, (), 0)
            tgt = states.setdefault(key, {})
            for exp, c in poly.items():
                tgt[exp] = tgt.get(exp, 0) + c
        for r in range(top, bot):
            nxt = {}
            for (in_rem, kept, above), poly in states.items():
                lo = max(1, above)
                if in_rem and r >= in_start:
                    lo = max(lo, in_rem[0])
                    in_next = in_rem[1:]
                else:
                    in_next = in_rem
                for v in range(lo, nvars + 1):
                    kept2 = kept + (v,) if out_lo <= r < out_hi else kept
                    key = (in_next, kept2, v)
                    tgt = nxt.setdefault(key, {})
                    if v > above:
                        # first occurrence of v in this column: weight x_v
                        for exp, c in poly.items():
                            e = list(exp)
                            e[v - 1] += 1
                            e = tuple(e)
                            tgt[e] = tgt.get(e, 0) + c
                    else:
                        for exp, c in poly.items():
                            tgt[exp] = tgt.get(exp, 0) + c
            states = nxt
        frontier = {}
        for (in_rem, kept, above), poly in states.items():
            tgt = frontier.setdefault(kept, {})
            for exp, c in poly.items():
                tgt[exp] = tgt.get(exp, 0) + c
        in_start = out_lo
    total = {}
    for poly in frontier.values():
        for exp, c in poly.items():
            total[exp] = total.get(exp, 0) + c
    return total


@cache
def g_skew(outer, inner=()):
    """The dual stable Grothendieck polynomial of outer/inner as a SymFunc.

    Zero when inner is not contained in outer.  The generating polynomial
    is computed in enough variables to see every Schur component (the
    expansion of g_{la/mu} is supported on subpartitions of la, so
    min(|la/mu|, rows of la) variables suffice) and then lifted.
    """
    outer, inner = tuple(outer), tuple(inner)
    if not contains(inner, outer):
        return SymFunc.zero()
    ncells = size(outer) - size(inner)
    if ncells == 0:
        return SymFunc.one()
    n = max(1, min(ncells, len(outer)))
    raw = rpp_generating_poly(outer, inner, n)
    if not raw_is_symmetric(raw, n):
        raise RuntimeError("generating polynomial of %r/%r is not symmetric"
                           % (outer, inner))
    return SymFunc({la: TPoly.const(c)
                    for la, c in schur_expand_raw(raw, n).items()})


def g_to_schur(la):
    """Schur expansion of the straight-shape g_la."""
    return g_skew(tuple(la), ())


@cache
def _schur_in_g(sigma):
    """g-basis expansion of the single Schur function s_sigma (read-only)."""
    row = {sigma: 1}
    for tau, c in g_to_schur(sigma).terms.items():
        if tau == sigma:
            continue
        ci = c.as_int()
        for ka, kc in _schur_in_g(tau).items():
            v = row.get(ka, 0) - ci * kc
            if v:
                row[ka] = v
            else:
                row.pop(ka, None)
    return row


def schur_to_g(f):
    """Expand a SymFunc over the g basis; returns {partition: TPoly}.

    Total on the ring: the transition from g to Schur is unitriangular by
    degree, so the inverse is applied degree by degree.
    """
    out = {}
    for sigma, c in f.terms.items():
        for la, k in _schur_in_g(sigma).items():
            s = out.get(la, ZERO) + c * k
            if s.is_zero():
                out.pop(la, None)
            else:
                out[la] = s
    return out


def g_expansion_to_symfunc(expansion):
    """Inverse of schur_to_g: rebuild the SymFunc from g-basis coefficients."""
    out = SymFunc.zero()
    for la, c in expansion.items():
        out = out + g_to_schur(la).scale(c)
    return out


@cache
def G_truncated(la, N):
    """The stable Grothendieck series G_la, truncated at degree N.

    The unique Schur expansion supported in degrees |la|..N pairing to
    delta_{la,mu} against every g_mu with |mu| <= N; its lowest component
    is s_la and its support sits on partitions containing la.
    """
    la = tuple(la)
    if N < size(la):
        raise ValueError("cap %d is below |la| = %d" % (N, size(la)))
    coeffs = {la: 1}
    for m in range(size(la) + 1, N + 1):
        for sigma in partitions_of_containing(m, la):
            gs = g_to_schur(sigma)
            val = 0
            for tau, a in coeffs.items():
                c = gs.coeff(tau)
                if not c.is_zero():
                    val -= a * c.as_int()
            if val:
                coeffs[sigma] = val
    return TruncSeries(N, {k: TPoly.const(v) for k, v in coeffs.items()})


def c_coeff(la, mu, nu):
    """Coefficient of g_nu in the g-expansion of g_{la/mu} (an integer)."""
    f = g_skew(tuple(la), tuple(mu))
    if f.is_zero():
        return 0
    return schur_to_g(f).get(tuple(nu), ZERO).as_int()


@cache
def d_coeff(la, mu, nu):
    """Coefficient of g_la in the product g_mu g_nu (an integer).

    Computed as the Hall pairing of the product against G_la, which picks
    out exactly that coefficient by duality.
    """
    la, mu, nu = tuple(la), tuple(mu), tuple(nu)
    cap = size(mu) + size(nu)
    if size(la) > cap:
        return 0
    f = g_to_schur(mu) * g_to_schur(nu)
    return hall(G_truncated(la, cap), f).as_int()


def g_coproduct(outer, inner=()):
    """Coproduct of g_{outer/inner} in the g (x) g basis.

    The sum over intermediate shapes nu of g_{outer/nu} (x) g_{nu/inner},
    with each skew factor expanded into straight g's.
    """
    outer, inner = tuple(outer), tuple(inner)
    acc = {}
    for nu in interval(inner, outer):
        left = schur_to_g(g_skew(outer, nu))
        right = schur_to_g(g_skew(nu, inner))
        for a, ca in left.items():
            for b, cb in right.items():
                key = (a, b)
                s = acc.get(key, ZERO) + ca * cb
                if s.is_zero():
                    acc.pop(key, None)
                else:
                    acc[key] = s
    out = TensorElem()
    out.terms = acc
    return out
