"""Named verification suites.

Every identity the kernel implements has a suite here that recomputes both
sides independently and compares exactly.  Suites yield (case_id, thunk)
pairs; a thunk returns (ok, lhs, rhs) with canonical serializations of the
two sides when they disagree.  Default bounds keep the full registry
within a couple of minutes of desk time.
"""

import random
from collections import namedtuple

from .groth import (G_truncated, c_coeff, g_skew, g_to_schur,
                    rpp_generating_poly, schur_to_g)
from .operators import (E_perp, Functional, H_perp, e_functional, functional_eval,
                        h_functional, inc_convolve, inc_delta, inc_it,
                        inc_jt, inc_mobius, inc_zeta, op_I, op_I_inv, perp,
                        skew_pieri, expand_skew_sum, telescoping_X, tilde_c,
                        tilde_d)
from .partitions import (column_count, contains, format_partition,
                         format_skew, interval, is_horizontal_strip,
                         is_vertical_strip, partitions_of, partitions_up_to,
                         size, sort_key, subpartitions,
                         vertical_strip_additions)
from .schur import (E_series, H_series, SymFunc, TruncSeries, coproduct,
                    antipode, hall, is_group_like, phi_t, schur, series_mul,
                    to_polynomial, raw_is_symmetric)
from .serialize import (incidence_text, multipoly_text, series_text,
                        symfunc_text, tensor_text, to_text)
from .tpoly import ONE, T, ZERO, MultiPoly, TPoly

SuiteSpec = namedtuple("SuiteSpec", ["func", "default_max_size", "description"])

DEFAULT_SEED = 20250808


def _eq(a, b, render):
    if a == b:
        return (True, None, None)
    return (False, render(a), render(b))


def _random_symfunc(rng, max_deg, nterms=3, with_t=False):
    pool = partitions_up_to(max_deg)
    terms = {}
    for _ in range(nterms):
        la = pool[rng.randrange(len(pool))]
        if with_t and rng.random() < 0.5:
            c = TPoly((rng.randint(-3, 3), rng.randint(-2, 2)))
        else:
            c = TPoly.const(rng.randint(-3, 3))
        terms[la] = terms.get(la, ZERO) + c
    return SymFunc(terms)


def _random_series(rng, cap, nterms=4):
    pool = partitions_up_to(cap)
    terms = {}
    for _ in range(nterms):
        la = pool[rng.randrange(len(pool))]
        terms[la] = terms.get(la, ZERO) + TPoly((rng.randint(-2, 2), rng.randint(-1, 1)))
    terms[()] = ONE
    return TruncSeries(cap, terms)


def _skew_shapes(max_size):
    for la in partitions_up_to(max_size):
        for mu in subpartitions(la):
            yield la, mu


# --- rpp / g-basis suites ---------------------------------------------------

def suite_symmetry_gate(max_size, rng):
    for la, mu in _skew_shapes(max_size):
        ncells = size(la) - size(mu)
        n = max(1, min(ncells, len(la)))

        def thunk(la=la, mu=mu, n=n):
            raw = rpp_generating_poly(la, mu, n)
            ok = raw_is_symmetric(raw, n)
            return (ok, multipoly_text(MultiPoly(n, raw)), "a symmetric polynomial")

        yield format_skew(la, mu), thunk


def suite_g_top_term(max_size, rng):
    for la in partitions_up_to(max_size):
        def thunk(la=la):
            f = g_to_schur(la)
            if f.coeff(la) != ONE:
                return (False, symfunc_text(f), "leading coefficient 1 on s%s"
                        % format_partition(la))
            bad = [tau for tau in f.terms if tau != la and size(tau) >= size(la)]
            return (not bad, symfunc_text(f),
                    "no other component of degree >= %d" % size(la))

        yield format_partition(la), thunk


def suite_g_coproduct(max_size, rng):
    for la, mu in _skew_shapes(max_size):
        m = size(la) - size(mu)
        if m == 0:
            continue

        def thunk(la=la, mu=mu, m=m):
            nv = 2 * m
            direct = MultiPoly(nv, rpp_generating_poly(la, mu, nv))
            total = MultiPoly(nv)
            for nu in interval(mu, la):
                px = to_polynomial(g_skew(nu, mu), m).shift_vars(nv, 0)
                py = to_polynomial(g_skew(la, nu), m).shift_vars(nv, m)
                total = total + px.mul(py)
            return _eq(total, direct, multipoly_text)

        yield format_skew(la, mu), thunk


def suite_i_equals_one(max_size, rng):
    for la, mu in _skew_shapes(max_size):
        def thunk(la=la, mu=mu):
            f = g_skew(la, mu)
            v = functional_eval(h_functional(f.degree(), 1), f)
            return _eq(v, ONE, lambda x: x.text() if isinstance(x, TPoly) else str(x))

        yield format_skew(la, mu), thunk


def suite_single_variable_weight(max_size, rng):
    for la, mu in _skew_shapes(max_size):
        def thunk(la=la, mu=mu):
            got = to_polynomial(g_skew(la, mu), 1)
            want = MultiPoly(1, {(column_count(la, mu),): ONE})
            return _eq(got, want, multipoly_text)

        yield format_skew(la, mu), thunk


def suite_g_G_duality(max_size, rng):
    for la in partitions_up_to(max_size):
        for mu in partitions_up_to(max_size):
            def thunk(la=la, mu=mu):
                v = hall(G_truncated(la, max(max_size, size(la))), g_to_schur(mu))
                want = ONE if la == mu else ZERO
                return _eq(v, want, lambda x: x.text())

            yield "(%s,%s)" % (format_partition(la), format_partition(mu)), thunk


def suite_sum_rules_c(max_size, rng):
    for la, mu in _skew_shapes(max_size):
        def thunk(la=la, mu=mu):
            total = sum(schur_to_g(g_skew(la, mu)).values(), ZERO)
            return _eq(total, ONE, lambda x: x.text())

        yield format_skew(la, mu), thunk


def suite_sum_rules_d(max_size, rng):
    ps = partitions_up_to(max_size)
    for mu in ps:
        for nu in ps:
            if sort_key(nu) < sort_key(mu):
                continue

            def thunk(mu=mu, nu=nu):
                f = g_to_schur(mu) * g_to_schur(nu)
                total = sum(schur_to_g(f).values(), ZERO)
                return _eq(total, ONE, lambda x: x.text())

            yield "(%s,%s)" % (format_partition(mu), format_partition(nu)), thunk


def suite_t_sum_rules(max_size, rng):
    for la, mu in _skew_shapes(max_size):
        def thunk(la=la, mu=mu):
            total = ZERO
            for nu, c in schur_to_g(g_skew(la, mu)).items():
                total = total + c * T ** column_count(nu)
            return _eq(total, T ** column_count(la, mu), lambda x: x.text())

        yield "c:" + format_skew(la, mu), thunk
    ps = partitions_up_to(max_size)
    for mu in ps:
        for nu in ps:
            if sort_key(nu) < sort_key(mu):
                continue

            def thunk(mu=mu, nu=nu):
                total = ZERO
                for la, c in schur_to_g(g_to_schur(mu) * g_to_schur(nu)).items():
                    total = total + c * T ** column_count(la)
                want = T ** (column_count(mu) + column_count(nu))
                return _eq(total, want, lambda x: x.text())

            yield "d:(%s,%s)" % (format_partition(mu), format_partition(nu)), thunk


# --- operator suites --------------------------------------------------------

def suite_i_multiplicative(max_size, rng):
    for i in range(100):
        f = _random_symfunc(rng, max_size)
        g = _random_symfunc(rng, max_size)

        def thunk(f=f, g=g):
            return _eq(op_I(f * g), op_I(f) * op_I(g), symfunc_text)

        yield "pair-%02d" % i, thunk


def suite_i_inverse(max_size, rng):
    for la in partitions_up_to(max_size):
        def thunk(la=la):
            f = g_to_schur(la)
            ok1, lhs, rhs = _eq(op_I_inv(op_I(f)), f, symfunc_text)
            if not ok1:
                return (False, lhs, rhs)
            return _eq(op_I(op_I_inv(f)), f, symfunc_text)

        yield format_partition(la), thunk


def suite_i_substitution(max_size, rng):
    for la in partitions_up_to(max_size):
        if not la:
            continue
        n = size(la)

        def thunk(la=la, n=n):
            lhs = to_polynomial(op_I(schur(la)), n)
            rhs = to_polynomial(schur(la), n + 1).substitute_first(1)
            return _eq(lhs, rhs, multipoly_text)

        yield format_partition(la), thunk


def suite_i_skew(max_size, rng):
    for la, mu in _skew_shapes(max_size):
        def thunk(la=la, mu=mu):
            image = op_I(g_skew(la, mu))
            inner_sum = SymFunc.zero()
            outer_sum = SymFunc.zero()
            for nu in interval(mu, la):
                inner_sum = inner_sum + g_skew(nu, mu)
                outer_sum = outer_sum + g_skew(la, nu)
            ok1, lhs, rhs = _eq(image, inner_sum, symfunc_text)
            if not ok1:
                return (False, lhs, rhs)
            return _eq(image, outer_sum, symfunc_text)

        yield format_skew(la, mu), thunk


def suite_perp_composition(max_size, rng):
    for i in range(25):
        cap = max_size + 2
        F = _random_series(rng, cap)
        G = _random_series(rng, cap)
        f = _random_symfunc(rng, max_size, with_t=True)

        def thunk(F=F, G=G, f=f):
            lhs = perp(Functional(series_mul(F, G)), f)
            rhs = perp(Functional(G), perp(Functional(F), f))
            return _eq(lhs, rhs, symfunc_text)

        yield "triple-%02d" % i, thunk


def suite_perp_adjoint(max_size, rng):
    for i in range(25):
        cap = max_size + 2
        F = _random_series(rng, cap)
        G = _random_series(rng, cap)
        f = _random_symfunc(rng, max_size, with_t=True)

        def thunk(F=F, G=G, f=f):
            lhs = hall(series_mul(F, G), f)
            rhs = hall(G, perp(Functional(F), f))
            return _eq(lhs, rhs, lambda x: x.text())

        yield "triple-%02d" % i, thunk


def suite_phi_t_intertwine(max_size, rng):
    for la in partitions_up_to(max_size):
        def thunk(la=la):
            lhs = phi_t(H_perp(T, schur(la)))
            rhs = op_I(phi_t(schur(la)))
            return _eq(lhs, rhs, symfunc_text)

        yield format_partition(la), thunk


def suite_h_perp_basis(max_size, rng):
    for la in partitions_up_to(max_size):
        def thunk(la=la):
            image = H_perp(T, g_to_schur(la))
            by_nu = SymFunc.zero()
            by_skew = SymFunc.zero()
            for nu in subpartitions(la):
                by_nu = by_nu + g_to_schur(nu).scale(T ** column_count(la, nu))
                by_skew = by_skew + g_skew(la, nu).scale(T ** column_count(nu))
            ok1, lhs, rhs = _eq(image, by_nu, symfunc_text)
            if not ok1:
                return (False, lhs, rhs)
            return _eq(image, by_skew, symfunc_text)

        yield format_partition(la), thunk


def suite_e_perp_basis(max_size, rng):
    for la in partitions_up_to(max_size):
        def thunk(la=la):
            image = E_perp(T, g_to_schur(la))
            by_nu = SymFunc.zero()
            for nu in subpartitions(la):
                if is_vertical_strip(la, nu):
                    ncells = size(la) - size(nu)
                    c = column_count(la, nu)
                    by_nu = by_nu + g_to_schur(nu).scale(
                        (T ** c) * ((T + ONE) ** (ncells - c)))
            ok1, lhs, rhs = _eq(image, by_nu, symfunc_text)
            if not ok1:
                return (False, lhs, rhs)
            closed = g_to_schur(la) if la else SymFunc.one()
            if la:
                for k in range(1, len(la) + 1):
                    closed = closed + g_skew(la, (1,) * k).scale(T * (T + ONE) ** (k - 1))
            return _eq(image, closed, symfunc_text)

        yield format_partition(la), thunk


def suite_e_functional_morphism(max_size, rng):
    for i in range(25):
        f = _random_symfunc(rng, max_size)
        g = _random_symfunc(rng, max_size)

        def thunk(f=f, g=g):
            F = e_functional(f.degree() + g.degree())
            lhs = functional_eval(F, f * g)
            rhs = functional_eval(F, f) * functional_eval(F, g)
            return _eq(lhs, rhs, lambda x: x.text())

        yield "pair-%02d" % i, thunk


# --- series suites ----------------------------------------------------------

def suite_series_generators(max_size, rng):
    N = max_size

    def unit_check():
        got = series_mul(H_series(N), E_series(N, -T))
        return _eq(got, TruncSeries.unit(N), series_text)

    yield "H(t)E(-t)=1@%d" % N, unit_check

    def h1_check():
        total = TruncSeries(N)
        for la in partitions_up_to(N):
            total = total + G_truncated(la, N)
        return _eq(total, H_series(N, 1), series_text)

    yield "H(1)=sum-G@%d" % N, h1_check

    def e1_check():
        got = TruncSeries.unit(N) - G_truncated((1,), N)
        return _eq(got, E_series(N, -1), series_text)

    yield "E(-1)=1-G[1]@%d" % N, e1_check

    def et_check():
        total = TruncSeries.unit(N)
        for n in range(1, N + 1):
            total = total + G_truncated((1,) * n, N).scale(T * (T + ONE) ** (n - 1))
        return _eq(total, E_series(N), series_text)

    yield "E(t)=1+sum@%d" % N, et_check


def suite_series_g_products(max_size, rng):
    N = max_size + 3
    for la in partitions_up_to(max_size):
        def ht_case(la=la):
            lhs = series_mul(H_series(N), G_truncated(la, N))
            rhs = TruncSeries(N)
            for m in range(size(la), N + 1):
                for mu in partitions_of(m):
                    if contains(la, mu):
                        rhs = rhs + G_truncated(mu, N).scale(T ** column_count(mu, la))
            return _eq(lhs, rhs, series_text)

        yield "H(t)G%s" % format_partition(la), ht_case

        def et_case(la=la):
            lhs = series_mul(E_series(N), G_truncated(la, N))
            rhs = TruncSeries(N)
            for j in range(N - size(la) + 1):
                for mu in vertical_strip_additions(la, j):
                    c = column_count(mu, la)
                    rhs = rhs + G_truncated(mu, N).scale((T ** c) * ((T + ONE) ** (j - c)))
            return _eq(lhs, rhs, series_text)

        yield "E(t)G%s" % format_partition(la), et_case

        def i_star_case(la=la):
            total = TruncSeries(N)
            for mu in partitions_up_to(N):
                total = total + G_truncated(mu, N)
            lhs = series_mul(total, G_truncated(la, N))
            rhs = TruncSeries(N)
            for m in range(size(la), N + 1):
                for mu in partitions_of(m):
                    if contains(la, mu):
                        rhs = rhs + G_truncated(mu, N)
            return _eq(lhs, rhs, series_text)

        yield "sumG*G%s" % format_partition(la), i_star_case

        def d_star_case(la=la):
            lhs = series_mul(TruncSeries.unit(N) - G_truncated((1,), N),
                             G_truncated(la, N))
            rhs = TruncSeries(N)
            for j in range(N - size(la) + 1):
                for mu in vertical_strip_additions(la, j):
                    if is_horizontal_strip(mu, la):
                        rhs = rhs + G_truncated(mu, N).scale((-1) ** j)
            return _eq(lhs, rhs, series_text)

        yield "(1-G[1])G%s" % format_partition(la), d_star_case


def suite_hopf_axioms(max_size, rng):
    from .schur import _coproduct_pairs

    for la in partitions_up_to(max_size):
        def antipode_case(la=la):
            total = SymFunc.zero()
            for (tau, rho), k in _coproduct_pairs(la).items():
                total = total + (antipode(schur(tau)) * schur(rho)).scale(k)
            want = SymFunc.one() if not la else SymFunc.zero()
            return _eq(total, want, symfunc_text)

        yield "antipode:%s" % format_partition(la), antipode_case

        def cocomm_case(la=la):
            d = coproduct(schur(la))
            return _eq(d.swap(), d, tensor_text)

        yield "cocommutative:%s" % format_partition(la), cocomm_case

    cap = max_size + 1

    def grouplike_h():
        ok = is_group_like(H_series(cap))
        return (ok, "is_group_like(H@%d)=False" % cap, "True")

    yield "group-like:H@%d" % cap, grouplike_h

    def grouplike_e():
        ok = is_group_like(E_series(cap))
        return (ok, "is_group_like(E@%d)=False" % cap, "True")

    yield "group-like:E@%d" % cap, grouplike_e

    def grouplike_phi():
        ok = is_group_like(phi_t(H_series(cap, 1)))
        return (ok, "is_group_like(phi_t(H(1))@%d)=False" % cap, "True")

    yield "group-like:phi-t-H1@%d" % cap, grouplike_phi


# --- incidence algebra ------------------------------------------------------

def suite_incidence_inverse(max_size, rng):
    ground = tuple(range(max_size, 0, -1))
    gtext = format_partition(ground)

    def itjt():
        got = inc_convolve(inc_it(ground), inc_jt(ground))
        return _eq(got, inc_delta(ground), incidence_text)

    yield "it*jt=delta@%s" % gtext, itjt

    def jt_at_one():
        got = inc_jt(ground).substitute(1)
        return _eq(got, inc_mobius(ground), incidence_text)

    yield "jt(1)=mobius@%s" % gtext, jt_at_one

    def it_at_one():
        got = inc_it(ground).substitute(1)
        return _eq(got, inc_zeta(ground), incidence_text)

    yield "it(1)=zeta@%s" % gtext, it_at_one

    def zeta_mobius():
        got = inc_convolve(inc_zeta(ground), inc_mobius(ground))
        return _eq(got, inc_delta(ground), incidence_text)

    yield "zeta*mobius=delta@%s" % gtext, zeta_mobius

    for q in range(1, 11):
        def tele(q=q):
            return _eq(telescoping_X(q), ZERO, lambda x: x.text())

        yield "telescoping-q=%d" % q, tele


# --- golden examples and counterexamples ------------------------------------

_EXAMPLE_SHAPE = ((3, 2, 1), (1,))
_EXAMPLE_EXPANSION = {
    (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1,
    (3, 1): -1, (2, 2): -1, (2, 1, 1): -1,
    (2, 1): 1,
}


def suite_example_321_1(max_size, rng):
    def expansion_case():
        la, mu = _EXAMPLE_SHAPE
        got = {k: v.as_int() for k, v in schur_to_g(g_skew(la, mu)).items()}
        return (got == _EXAMPLE_EXPANSION,
                to_text(g_expansion_ints(got)), to_text(g_expansion_ints(_EXAMPLE_EXPANSION)))

    yield "g[3,2,1]/[1]-expansion", expansion_case

    def i_skew_case():
        la, mu = _EXAMPLE_SHAPE
        image = op_I(g_skew(la, mu))
        inner_sum = SymFunc.zero()
        outer_sum = SymFunc.zero()
        for nu in interval(mu, la):
            inner_sum = inner_sum + g_skew(nu, mu)
            outer_sum = outer_sum + g_skew(la, nu)
        union = set()
        for top in ((3, 2), (3, 1, 1), (2, 2, 1)):
            union.update(subpartitions(top))
        common = SymFunc.zero()
        for kappa in union:
            common = common + g_to_schur(kappa)
        ok = image == inner_sum == outer_sum == common
        return (ok, symfunc_text(image), symfunc_text(common))

    yield "interval-union-sum", i_skew_case


def g_expansion_ints(d):
    keys = sorted(d, key=sort_key)
    return [{"partition": list(k), "coeff": d[k]} for k in keys]


def suite_counterexamples(max_size, rng):
    def ctilde_case():
        v = tilde_c((5, 3, 2, 2, 1), (3, 2, 1), (3, 2, 1))
        return (v == -1, str(v), "-1")

    yield "ctilde[5,3,2,2,1]", ctilde_case

    def ctilde_other_route():
        la, mu, nu = (5, 3, 2, 2, 1), (3, 2, 1), (3, 2, 1)
        v = sum(c_coeff(kappa, mu, nu) for kappa in interval(mu, la))
        return (v == -1, str(v), "-1")

    yield "ctilde-inner-interval-route", ctilde_other_route

    def dtilde_case():
        v = tilde_d((5, 3, 2, 1), (3, 2, 1), (3, 2, 1))
        return (v == -1, str(v), "-1")

    yield "dtilde[5,3,2,1]", dtilde_case


def suite_skew_pieri(max_size, rng):
    from .schur import h_gen

    for mu in partitions_up_to(max_size):
        for nu in subpartitions(mu):
            for k in range(4):
                def thunk(mu=mu, nu=nu, k=k):
                    lhs = h_gen(k) * g_skew(mu, nu)
                    rhs = expand_skew_sum(skew_pieri(k, mu, nu))
                    return _eq(lhs, rhs, symfunc_text)

                yield "h%d*g%s" % (k, format_skew(mu, nu)), thunk


SUITES = {
    "symmetry-gate": SuiteSpec(
        suite_symmetry_gate, 5,
        "raw generating polynomial of every skew g is symmetric"),
    "g-top-term": SuiteSpec(
        suite_g_top_term, 7,
        "g_la has leading Schur term s_la, everything else lower degree"),
    "g-coproduct": SuiteSpec(
        suite_g_coproduct, 5,
        "coproduct of skew g matches the split-alphabet evaluation"),
    "i-equals-one": SuiteSpec(
        suite_i_equals_one, 7,
        "substituting (1,0,0,...) into any skew g gives 1"),
    "single-variable-weight": SuiteSpec(
        suite_single_variable_weight, 7,
        "one-variable evaluation of skew g is t^(column count)"),
    "g-G-duality": SuiteSpec(
        suite_g_G_duality, 6,
        "Hall pairing of G_la against g_mu is delta"),
    "sum-rules-c": SuiteSpec(
        suite_sum_rules_c, 6,
        "coefficients of any skew g over the g basis sum to 1"),
    "sum-rules-d": SuiteSpec(
        suite_sum_rules_d, 4,
        "g-basis coefficients of g_mu g_nu sum to 1"),
    "t-sum-rules": SuiteSpec(
        suite_t_sum_rules, 5,
        "t-refined column-count sum rules for both constant families"),
    "i-multiplicative": SuiteSpec(
        suite_i_multiplicative, 4,
        "the map I is a ring morphism on random pairs"),
    "i-inverse": SuiteSpec(
        suite_i_inverse, 7,
        "I and its inverse compose to the identity on the g basis"),
    "i-substitution": SuiteSpec(
        suite_i_substitution, 5,
        "I acts as the substitution f(x) -> f(1,x)"),
    "i-skew": SuiteSpec(
        suite_i_skew, 6,
        "I of a skew g equals both interval sums"),
    "perp-composition": SuiteSpec(
        suite_perp_composition, 4,
        "the perp of a product composes the perps"),
    "perp-adjoint": SuiteSpec(
        suite_perp_adjoint, 4,
        "perp is adjoint to series multiplication under the Hall pairing"),
    "phi-t-intertwine": SuiteSpec(
        suite_phi_t_intertwine, 5,
        "variable scaling intertwines the t-deformed and plain perps"),
    "h-perp-basis": SuiteSpec(
        suite_h_perp_basis, 6,
        "two-sided g-basis expansion of the H-series perp"),
    "e-perp-basis": SuiteSpec(
        suite_e_perp_basis, 6,
        "vertical-strip g-basis expansion of the E-series perp"),
    "e-functional-morphism": SuiteSpec(
        suite_e_functional_morphism, 3,
        "the E-series pairing is an algebra morphism"),
    "series-generators": SuiteSpec(
        suite_series_generators, 6,
        "generator identities: H(t)E(-t)=1 and the G-expansions of H and E"),
    "series-g-products": SuiteSpec(
        suite_series_g_products, 3,
        "products of H(t), E(t) and their specializations against G_la"),
    "hopf-axioms": SuiteSpec(
        suite_hopf_axioms, 5,
        "antipode identity, cocommutativity, group-likeness of H and E"),
    "incidence-inverse": SuiteSpec(
        suite_incidence_inverse, 4,
        "i_t * j_t = delta on a staircase ground, Moebius specializations"),
    "example-321-1": SuiteSpec(
        suite_example_321_1, 6,
        "golden expansion of g[3,2,1]/[1] and its interval-union image"),
    "counterexamples": SuiteSpec(
        suite_counterexamples, 13,
        "the two negative interval-summed structure constants"),
    "skew-pieri": SuiteSpec(
        suite_skew_pieri, 5,
        "row Pieri products of skew g match the signed binomial formula"),
}


def iter_cases(name, max_size=None, seed=None):
    """Yield (case_id, thunk) pairs for a registered suite."""
    spec = SUITES[name]
    bound = spec.default_max_size if max_size is None else max_size
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    return spec.func(bound, rng)


def run_suite(name, max_size=None, seed=None, jobs=1):
    """Run a suite; returns a list of (case_id, ok, lhs, rhs) in case order."""
    cases = list(iter_cases(name, max_size, seed))
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: c[1](), cases))
    else:
        results = [thunk() for _, thunk in cases]
    return [(cid, ok, lhs, rhs)
            for (cid, _), (ok, lhs, rhs) in zip(cases, results)]
