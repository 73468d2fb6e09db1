"""k-Le-Yomdin surface singularities (k = 1: superisolated).

A germ F = f_m + f_{m+k} + ... with projectivized tangent cone C_m whose
singular points avoid V(f_{m+k}) blows down to a stratification of the
exceptional P^n, so its zeta functions assemble from the global strata and
one generalized-suspension term per singular point of C_m, in the shift
r = (1 + n + (m+k)s)/k.  The characteristic polynomial assembles as
(tau^m - 1)^chi(P^2 \\ C) / (tau - 1) * prod_q Delta_q^(k)(tau^{m+k}).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import frak_n
from .cyclo import CycloProduct, OrderSet, order_closure
from .errors import ConsistencyError, ValidationError
from .ratfun import PoleError, RatFun
from .resolution import graph_from_json
from .suspension import GermSummary, summary_from_graph, \
    summary_from_json, summary_to_json, suspend_G


@dataclass
class LysSurface:
    n: int                     # ambient projective dimension (2 for surfaces)
    m: int                     # degree of the tangent cone C_m
    k: int
    chi_complement: int        # chi(P^n \ C)
    chi_curve_smooth: int      # chi(C \ Sing C)
    points: list[GermSummary] = field(default_factory=list)

    def __post_init__(self):
        if self.n < 1 or self.m < 1 or self.k < 1:
            raise ValidationError("need n, m, k >= 1")
        if self.n == 2:
            total = self.chi_complement + self.chi_curve_smooth + len(self.points)
            if total != 3:
                raise ValidationError(
                    f"chi(P^2) accounting fails: {self.chi_complement} + "
                    f"{self.chi_curve_smooth} + {len(self.points)} != 3")


def _global_inv_krs(s_surface: LysSurface) -> RatFun:
    # k (r - s) = m s + n + 1
    return RatFun.inv_linear(s_surface.m, s_surface.n + 1)


def lys_ztop(S: LysSurface, l: int = 1) -> RatFun:
    """Z_top^(l)(F, s): global strata plus one suspension term per singular
    point of the tangent cone."""
    if l < 1:
        raise ValueError("l must be >= 1")
    inv_krs = _global_inv_krs(S)
    total = RatFun.zero()
    if S.m % l == 0:
        total = total + S.chi_complement * inv_krs
    if l == 1:
        total = total + S.chi_curve_smooth * inv_krs * RatFun.inv_linear(1, 1)
    for point in S.points:
        total = total + suspend_G(point.zeta, S.m, S.k, S.n + 1, l)
    return total


def sis_ztop(S: LysSurface, l: int = 1) -> RatFun:
    """Superisolated specialization (k = 1), with t = (1+m)s + n + 1; agrees
    with lys_ztop at k = 1."""
    if S.k != 1:
        raise ValidationError("sis_ztop needs k = 1")
    if l < 1:
        raise ValueError("l must be >= 1")
    m, n = S.m, S.n
    t_fun = RatFun.linear(1 + m, n + 1)
    inv_t = RatFun.inv_linear(1 + m, n + 1)
    inv_ts = RatFun.inv_linear(m, n + 1)           # 1/(t - s)
    inv_s1 = RatFun.inv_linear(1, 1)
    s_fun = RatFun.linear(1, 0)

    def at_t(point: GermSummary, e: int) -> RatFun:
        return point.zeta.entry(e).substitute_affine(1 + m, n + 1)

    if l == 1:
        total = (S.chi_complement * inv_ts
                 + S.chi_curve_smooth * inv_ts * inv_s1)
        for q in S.points:
            total = total + inv_t + (s_fun * (t_fun + 1) * (s_fun - t_fun + 1)
                                     * inv_t * inv_s1 * inv_ts * at_t(q, 1))
        return total
    if (m + 1) % l == 0:
        total = RatFun.zero()
        for q in S.points:
            total = total + inv_t * (RatFun.one() - (t_fun + 1) * at_t(q, 1))
        return total
    if m % l == 0:
        total = S.chi_complement * inv_ts
        for q in S.points:
            total = total + (s_fun - t_fun + 1) * inv_ts * at_t(q, l)
        return total
    total = RatFun.zero()
    for q in S.points:
        total = total - at_t(q, l // gcd(l, m + 1))
    return total


def lys_charpoly(S: LysSurface) -> tuple[CycloProduct, CycloProduct]:
    """(Delta, Delta_tilde): the characteristic polynomial of the monodromy
    and its (tau - 1) multiple, which must be an honest polynomial."""
    delta = CycloProduct.from_brackets([(S.m, S.chi_complement), (1, -1)])
    for q in S.points:
        local = q.delta.power_transform(S.k).variable_power(S.m + S.k)
        delta = delta * local
    delta_tilde = delta * CycloProduct.from_brackets([(1, 1)])
    if not delta_tilde.is_polynomial():
        raise ValidationError("(tau - 1) Delta is not a polynomial; "
                              "inconsistent Le-Yomdin input")
    return delta, delta_tilde


def lys_orders(S: LysSurface) -> OrderSet:
    """Divisor closure of the eigenvalue orders: {m when chi(P^2 \\ C) != 0}
    together with n(n_0, m, k) for each local order n_0; cross-checked
    against the assembled characteristic polynomial."""
    if S.n != 2:
        raise ValidationError("order description is a surface statement (n = 2)")
    gens: set[int] = set()
    if S.chi_complement != 0:
        gens.add(S.m)
    for q in S.points:
        for n0 in q.delta.root_orders():
            gens.add(frak_n(n0, S.m, S.k))
    formula = order_closure(gens)
    delta, _ = lys_charpoly(S)
    assembled = order_closure(delta.root_orders())
    if formula != assembled:
        raise ConsistencyError(
            f"order sets disagree: formula {sorted(formula)} vs "
            f"characteristic polynomial {sorted(assembled)}")
    return formula


def candidate_a(rho0: Fraction, nu: int, m: int, k: int) -> Fraction:
    """(k rho0 + nu)/(m + k), the pole-transfer map."""
    return (k * Fraction(rho0) + nu) / Fraction(m + k)


def lys_candidate_poles(S: LysSurface) -> frozenset[Fraction]:
    """{1, (n+1)/m} plus the transfer of every local pole."""
    out = {Fraction(1), Fraction(S.n + 1, S.m)}
    for q in S.points:
        for rho0 in q.zeta.pol_plus():
            out.add(candidate_a(rho0, S.n + 1, S.m, S.k))
    return frozenset(out)


def is_bad_divisor(S: LysSurface) -> bool:
    """deg C > 3, chi(P^2 \\ C) <= 0, and -3/m a pole of no local zeta."""
    if S.n != 2:
        raise ValidationError("bad divisors are defined for surfaces (n = 2)")
    if S.m <= 3 or S.chi_complement > 0:
        return False
    lct = Fraction(3, S.m)
    return all(lct not in q.zeta.pol_plus() for q in S.points)


def residue_lct(S: LysSurface) -> Fraction:
    """Residue of Z_top(F, s) at the log-canonical candidate -3/m in the
    bad-divisor (simple-pole) regime: (1/m) R(C_m) with
    R = chi(P^2 \\ C) + m/(m-3) chi(C \\ Sing) + sum_q Z(f_q, -3/m).
    Cross-checked against the direct residue of lys_ztop."""
    if S.n != 2:
        raise ValidationError("residue formula is a surface statement (n = 2)")
    if S.m == 3:
        raise PoleError("m = 3: the middle term of R degenerates")
    lct = Fraction(3, S.m)
    for q in S.points:
        if lct in q.zeta.pol_plus():
            raise PoleError(
                f"-3/m is a pole at point {q.name!r}: multiple pole regime")
    r_val = (Fraction(S.chi_complement)
             + Fraction(S.m, S.m - 3) * S.chi_curve_smooth
             + sum((q.zeta.entry(1).evaluate(-lct) for q in S.points),
                   Fraction(0)))
    residue = r_val / S.m
    direct = lys_ztop(S, 1).residue_at(-lct)
    if direct != residue:
        raise ConsistencyError(
            f"residue cross-check failed: formula {residue}, direct {direct}")
    return residue


# ---------------------------------------------------------------------------
# JSON


def lys_to_json(S: LysSurface) -> dict:
    return {"n": S.n, "m": S.m, "k": S.k,
            "chi_complement": S.chi_complement,
            "chi_curve_smooth": S.chi_curve_smooth,
            "points": [summary_to_json(q) for q in S.points]}


def lys_from_json(obj: dict, validate: bool = True) -> LysSurface:
    points = []
    for i, p in enumerate(obj.get("points", [])):
        name = p.get("name", f"q{i + 1}")
        if "graph" in p:
            points.append(summary_from_graph(graph_from_json(p["graph"]), name))
        else:
            points.append(summary_from_json(p, validate))
    return LysSurface(int(obj["n"]), int(obj["m"]), int(obj["k"]),
                      int(obj["chi_complement"]), int(obj["chi_curve_smooth"]),
                      points)
