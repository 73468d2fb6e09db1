import random
from fractions import Fraction as F

import pytest

from graphgen import random_graph
from topzeta.arith import divisors
from topzeta.binomial import BULLETS, BinomialGerm, w_top, w_top_twisted
from topzeta.cyclo import CycloProduct, order_closure
from topzeta.errors import ValidationError
from topzeta.lys import candidate_a
from topzeta.ratfun import RatFun
from topzeta.resolution import strata_of_graph
from topzeta.suspension import GermSummary, MissingEntryError, ZetaProfile, \
    fbad_set, is_bad_eigenvalue, k2_twisted, profile_from_graph, \
    profile_from_json, profile_to_json, summary_from_graph, suspend_F, \
    suspend_G, suspend_matrix, suspend_orders, suspend_profile


def test_profile_invariants():
    with pytest.raises(ValidationError):  # ell = 1 missing
        ZetaProfile({2: RatFun.zero()})
    with pytest.raises(ValidationError):  # normalization
        ZetaProfile({1: RatFun.from_polys([2], [1, 2, 1])})
    with pytest.raises(ValidationError):  # divisor closure
        ZetaProfile({1: RatFun.from_polys([1], [1, 1]),
                     4: RatFun.inv_linear(1, 1)})
    prof = ZetaProfile({1: RatFun.from_polys([1], [1, 1])})
    assert prof.entry(7).is_zero()
    with pytest.raises(MissingEntryError):
        prof.entry(7, strict=True)


def test_x5y6_rows(x5y6_profile):
    prof = x5y6_profile
    u = [7, 15]
    rows = {
        1: RatFun.from_polys([7, 3], [7, 22, 15]),
        3: RatFun.from_polys([6], u), 6: RatFun.from_polys([6], u),
        5: RatFun.from_polys([1], [14, 30]),
        10: RatFun.from_polys([-5], [14, 30]),
        15: RatFun.from_polys([7], [14, 30]), 30: RatFun.from_polys([7], [14, 30]),
    }
    for l in range(1, 31):
        expected = rows.get(l, RatFun.zero())
        assert suspend_F(prof, 10, l) == expected, l


def test_x5y6_matrix(x5y6_profile):
    _, b_matrix, holds = suspend_matrix(x5y6_profile, 10)
    assert b_matrix == [[9, -3, -24, -72], [-1, 7, -24, -72],
                        [-1, -3, -14, -72], [-1, -3, -24, -62]]
    assert holds


def test_matrix_prime_k(x5y6_profile):
    for p in (2, 3, 5):
        _, b_matrix, holds = suspend_matrix(x5y6_profile, p)
        assert b_matrix == [[p - 1, -(p * p - 1)], [-1, p - (p * p - 1)]]
        assert holds


def test_suspend_F_equals_suspend_G(x5y6_profile):
    for l in range(1, 31):
        assert suspend_F(x5y6_profile, 10, l) == \
            suspend_G(x5y6_profile, 0, 10, 1, l)


def test_suspend_G_candidate_pole_cancellation():
    # -nu_z/(m+k) corresponds to r = 0 and always cancels
    prof = ZetaProfile({1: RatFun.from_polys([3, 1], [3, 7, 4]),
                        2: RatFun.inv_linear(4, 3),
                        4: RatFun.from_polys([-1], [3, 4])})
    for m in (1, 2, 3):
        for k in (1, 2, 5):
            for nu_z in (1, 3):
                if F(nu_z, m + k) == 1:
                    continue
                z = suspend_G(prof, m, k, nu_z, 1)
                assert F(nu_z, m + k) not in z.pol_plus()


def test_pol_plus_containment_suspend_G():
    prof = ZetaProfile({1: RatFun.from_polys([3, 1], [3, 7, 4]),
                        2: RatFun.inv_linear(4, 3),
                        4: RatFun.from_polys([-1], [3, 4])})
    for m in (1, 2, 3):
        for k in (1, 2, 4):
            for nu_z in (1, 2):
                z = suspend_G(prof, m, k, nu_z, 1)
                allowed = {F(1), F(nu_z, m)} | {
                    candidate_a(r0, nu_z, m, k) for r0 in prof.pol_plus()}
                assert z.pol_plus() <= allowed


def test_pole_transfer(triple_cusp_graph, a3_graph):
    # a non-integer pole -s1 of Z^(l)(F) forces a pole -(s1 - 1/k) of some
    # Z^(l1)(f) with l1 | l and l/l1 | k
    for graph in (triple_cusp_graph, a3_graph):
        prof = profile_from_graph(graph)
        for k in (2, 3):
            for l in range(1, 25):
                for pole, _ in suspend_F(prof, k, l).poles_with_multiplicity():
                    if pole.denominator == 1:
                        continue
                    target = pole + F(1, k)
                    found = any(
                        k % (l // l1) == 0 and
                        target in {p for p, _ in
                                   prof.entry(l1).poles_with_multiplicity()}
                        for l1 in divisors(l))
                    assert found, (graph, k, l, pole)


def test_k2_twisted_cases(triple_cusp_graph):
    prof = profile_from_graph(triple_cusp_graph)
    assert k2_twisted(prof, 18).is_zero()
    for l in range(2, 46):
        assert k2_twisted(prof, l) == suspend_F(prof, 2, l)
    with pytest.raises(ValueError):
        k2_twisted(prof, 1)


def test_k2_twisted_node_example():
    # node: Z = 1/(s+1)^2, Z^(2) = 0, t = s + 1/2
    prof = ZetaProfile({1: RatFun.from_polys([1], [1, 2, 1]),
                        2: RatFun.zero()})
    t = RatFun.linear(1, F(1, 2))
    assert k2_twisted(prof, 2) == 1 / (2 * (t + 1))
    assert k2_twisted(prof, 2) == suspend_F(prof, 2, 2)
    # the l = 2 case as pure substitution arithmetic, on an unnormalized
    # family with Z = 2/(s+1)^2: (1/2)(1/t - 2/(t(t+1))) = (t-1)/(2t(t+1))
    raw = ZetaProfile({1: RatFun.from_polys([2], [1, 2, 1]),
                       2: RatFun.zero()}, validate=False)
    assert k2_twisted(raw, 2) == (t - 1) / (2 * t * (t + 1))


def test_k2_twisted_trivial_zero():
    prof = ZetaProfile({1: RatFun.from_polys([1], [1, 1])})
    assert k2_twisted(prof, 8).is_zero()


def test_suspend_orders_triple_cusp(triple_cusp_graph):
    germ = summary_from_graph(triple_cusp_graph)
    delta_f, orders = suspend_orders(germ, 2)
    assert orders == frozenset({2, 6, 9, 14, 42})
    assert order_closure(orders) == order_closure([9, 42])
    with pytest.raises(ValueError):
        suspend_orders(germ, 2, m=1)


def test_suspend_orders_small():
    germ = GermSummary(ZetaProfile({1: RatFun.from_polys([1], [1, 1])}),
                       CycloProduct.from_factors({1: 1}))
    _, orders = suspend_orders(germ, 3)
    assert orders == frozenset({3})


def test_suspend_orders_group_bound(a3_graph):
    germ = summary_from_graph(a3_graph)
    from topzeta.arith import lcm_all
    for k in (2, 3, 4, 5):
        _, orders = suspend_orders(germ, k)
        bound = lcm_all(germ.delta.root_orders()) * k
        assert all(bound % d == 0 for d in orders)


def test_fbad_examples():
    assert fbad_set(frozenset({1, 3, 7, 18, 21})) == frozenset({18})
    orders2 = frozenset({1, 7, 12, 14})
    assert not is_bad_eigenvalue(14, orders2)
    assert fbad_set(frozenset({2, 6, 10})) == frozenset({2, 6, 10})
    assert 2 in fbad_set(frozenset({2}))
    assert fbad_set(frozenset({1, 4, 8})) == frozenset()


def test_set_f_bad_lemma_on_fixtures(triple_cusp_graph, two_cusp_graph,
                                     a3_graph, cusp_graph):
    for graph in (triple_cusp_graph, two_cusp_graph, a3_graph, cusp_graph):
        germ = summary_from_graph(graph)
        orders_f = germ.delta.root_orders()
        _, orders_sus = suspend_orders(germ, 2)
        assert fbad_set(orders_f) == \
            order_closure(orders_f) - order_closure(orders_sus)


def test_set_f_bad_lemma_randomized():
    rng = random.Random(23)
    for _ in range(40):
        g = random_graph(rng)
        germ = summary_from_graph(g)
        orders_f = germ.delta.root_orders()
        _, orders_sus = suspend_orders(germ, 2)
        assert fbad_set(orders_f) == \
            order_closure(orders_f) - order_closure(orders_sus)


def test_cross_consistency_random_profiles():
    rng = random.Random(31)
    for _ in range(12):
        prof = profile_from_graph(random_graph(rng))
        for k in (2, 3):
            for l in (1, 2, 3, 4, 6, 9):
                assert suspend_F(prof, k, l) == suspend_G(prof, 0, k, 1, l)


def test_stratification_assembly(triple_cusp_graph, a3_graph, cusp_graph):
    # suspend_G must equal the stratum-by-stratum sum of binomial cone terms
    for graph in (triple_cusp_graph, a3_graph, cusp_graph):
        prof = profile_from_graph(graph)
        res = strata_of_graph(graph)
        for m, k, nu_z in ((0, 2, 1), (1, 2, 3), (3, 4, 2), (2, 1, 3)):
            for l in (1, 2, 3, 5, 6, 9, 10, 18):
                direct = suspend_G(prof, m, k, nu_z, l)
                assembled = RatFun.zero()
                for stratum in res.strata:
                    comps = [res.component(cid) for cid in stratum.I]
                    germ = BinomialGerm(m, k, tuple(c.N for c in comps),
                                        tuple(c.nu for c in comps), nu_z)
                    for bullet in BULLETS:
                        if l == 1:
                            term = w_top(germ, bullet)
                        else:
                            term = w_top_twisted(germ, bullet, l)
                        assembled = assembled + stratum.chi * term
                assert assembled == direct, (graph, m, k, nu_z, l)


def test_suspend_profile_wrapper(x5y6_profile):
    out = suspend_profile(x5y6_profile, 0, 10, 1, [1, 3, 5, 10, 15, 30])
    assert out.prod_nu0 == 1
    assert out.entry(1).evaluate(0) == 1
    for l in out.entries:
        assert out.entry(l) == suspend_F(x5y6_profile, 10, l)
    # iterated suspension is well defined on the closed support
    again = suspend_profile(out, 0, 2, 1, [1, 2])
    assert again.entry(1).evaluate(0) == 1


def test_profile_json_roundtrip(x5y6_profile):
    as_json = profile_to_json(x5y6_profile)
    again = profile_from_json(as_json)
    assert profile_to_json(again) == as_json
    assert again.entries == x5y6_profile.entries


def test_strict_mode(x5y6_profile):
    entries = {l: x5y6_profile.entries[l] for l in (1, 2, 3, 5, 6, 10, 15, 30)}
    partial = ZetaProfile(entries)
    with pytest.raises(MissingEntryError):
        suspend_F(partial, 10, 7, strict=True)
    assert suspend_F(partial, 10, 7).is_zero()
