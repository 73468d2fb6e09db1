"""Mechanical monodromy- and holomorphy-conjecture checks.

check_monodromy: every pole -a/b of the untwisted zeta function must give
an eigenvalue exp(2 pi i a/b) of the monodromy somewhere on the zero set;
integer poles pass via the eigenvalue 1 at a smooth point, other poles by
Phi_b dividing (tau - 1) Delta.

check_holomorphy: for every l > 1 outside the divisor closure of the
eigenvalue orders, the l-twisted zeta function must vanish identically.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .arith import lcm_all
from .cyclo import CycloProduct, OrderSet, order_closure
from .ratfun import RatFun

L_MAX_CAP = 10_000


@dataclass(frozen=True)
class CheckItem:
    label: str
    ok: bool
    note: str = ""


@dataclass(frozen=True)
class Report:
    conjecture: str
    items: tuple[CheckItem, ...]

    @property
    def passed(self) -> bool:
        return all(item.ok for item in self.items)

    def to_json(self) -> dict:
        out = {"conjecture": self.conjecture,
               "verdict": "pass" if self.passed else "fail",
               "items": []}
        for item in self.items:
            entry: dict = {"ok": item.ok}
            if self.conjecture == "monodromy":
                pole, order = item.label.split("|")
                entry = {"pole": pole, "order": int(order), "ok": item.ok}
            else:
                entry = {"ell": int(item.label), "ok": item.ok}
            if item.note:
                entry["note"] = item.note
            out["items"].append(entry)
        return out


def check_monodromy(zeta1: RatFun, delta_tilde: CycloProduct) -> Report:
    """For each pole -a/b (lowest terms) of zeta1: pass if b = 1 (eigenvalue
    1 at a smooth point) or Phi_b divides delta_tilde."""
    if not delta_tilde.is_polynomial():
        raise ValueError("delta_tilde must be a polynomial")
    items = []
    for pole, _mult in zeta1.poles_with_multiplicity():
        order = pole.denominator
        if order == 1:
            items.append(CheckItem(f"{pole}|1", True, "accepted via smooth point"))
        elif delta_tilde.exponent(order) >= 1:
            items.append(CheckItem(f"{pole}|{order}", True))
        else:
            items.append(CheckItem(
                f"{pole}|{order}", False,
                f"Phi_{order} does not divide the characteristic polynomial"))
    return Report("monodromy", tuple(items))


def default_l_max(orders: OrderSet) -> int:
    closure = order_closure(orders)
    if not closure:
        return 2
    return min(2 * lcm_all(closure), L_MAX_CAP)


def check_holomorphy(zeta_family: Callable[[int], RatFun], orders: OrderSet,
                     l_max: int | None = None) -> Report:
    """Every 1 < l <= l_max outside the order closure must give the zero
    function; l inside the closure is unconstrained and skipped."""
    closure = order_closure(orders)
    if l_max is None:
        l_max = default_l_max(orders)
    items = []
    for l in range(2, l_max + 1):
        if l in closure:
            continue
        z = zeta_family(l)
        items.append(CheckItem(str(l), z.is_zero(),
                               "" if z.is_zero() else f"Z^({l}) = {z}"))
    return Report("holomorphy", tuple(items))
