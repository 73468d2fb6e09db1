"""Formal products of cyclotomic polynomials with integer exponents.

A CycloProduct stores prod_d Phi_d(tau)^{e_d} as the finite map d -> e_d.
These carry monodromy zeta functions and characteristic polynomials; the
two transforms needed for Le-Yomdin assembly are the k-th power transform
h^(k) (characteristic polynomial of the k-th power of the underlying
finite-order automorphism) and the variable substitution tau -> tau^p.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import divisor_closure, divisors, euler_phi, lcm_all
from .errors import ConsistencyError

OrderSet = frozenset


@dataclass(frozen=True)
class CycloProduct:
    items: tuple[tuple[int, int], ...]  # sorted (d, e_d), e_d != 0

    @staticmethod
    def from_factors(factors: dict[int, int]) -> "CycloProduct":
        for d in factors:
            if d < 1:
                raise ValueError(f"cyclotomic index must be >= 1, got {d}")
        return CycloProduct(tuple(sorted((d, e) for d, e in factors.items() if e)))

    @property
    def factors(self) -> dict[int, int]:
        return dict(self.items)

    @staticmethod
    def one() -> "CycloProduct":
        return CycloProduct(())

    def exponent(self, d: int) -> int:
        return self.factors.get(d, 0)

    # -- bracket form --------------------------------------------------------

    @staticmethod
    def from_brackets(brackets) -> "CycloProduct":
        """Product of (tau^m - 1)^n factors; (tau^m - 1) = prod_{d|m} Phi_d."""
        acc: dict[int, int] = {}
        for m, n in brackets:
            if m < 1:
                raise ValueError(f"bracket exponent must be >= 1, got {m}")
            for d in divisors(m):
                acc[d] = acc.get(d, 0) + n
        return CycloProduct.from_factors(acc)

    def to_brackets(self) -> tuple[tuple[int, int], ...]:
        """The unique bracket decomposition, peeling maximal orders first."""
        remaining = self.factors
        out = []
        while remaining:
            m = max(remaining)
            n = remaining[m]
            out.append((m, n))
            for d in divisors(m):
                e = remaining.get(d, 0) - n
                if e:
                    remaining[d] = e
                else:
                    remaining.pop(d, None)
        return tuple(out)

    # -- algebra ---------------------------------------------------------------

    def mul_div(self, other: "CycloProduct", sign: int = 1) -> "CycloProduct":
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        acc = self.factors
        for d, e in other.items:
            acc[d] = acc.get(d, 0) + sign * e
        return CycloProduct.from_factors(acc)

    def __mul__(self, other: "CycloProduct") -> "CycloProduct":
        return self.mul_div(other, 1)

    def __truediv__(self, other: "CycloProduct") -> "CycloProduct":
        return self.mul_div(other, -1)

    def power_transform(self, k: int) -> "CycloProduct":
        """h^(k): brackets (tau^m - 1)^n -> (tau^(m/gcd(m,k)) - 1)^(n*gcd(m,k))."""
        if k < 1:
            raise ValueError("k must be >= 1")
        return CycloProduct.from_brackets(
            (m // gcd(m, k), n * gcd(m, k)) for m, n in self.to_brackets())

    def variable_power(self, p: int) -> "CycloProduct":
        """h(tau^p): brackets (tau^m - 1)^n -> (tau^(p*m) - 1)^n."""
        if p < 1:
            raise ValueError("p must be >= 1")
        return CycloProduct.from_brackets(
            (p * m, n) for m, n in self.to_brackets())

    # -- inspection ------------------------------------------------------------

    def is_polynomial(self) -> bool:
        return all(e >= 0 for _, e in self.items)

    def root_orders(self) -> OrderSet:
        return frozenset(d for d, e in self.items if e > 0)

    def order_data(self) -> tuple[OrderSet, bool]:
        return self.root_orders(), self.is_polynomial()

    def degree(self) -> int:
        """Total degree sum e_d * phi(d); negative exponents subtract."""
        return sum(e * euler_phi(d) for d, e in self.items)

    # -- Thom-Sebastiani -------------------------------------------------------

    def thom_sebastiani_tensor(self, k: int) -> "CycloProduct":
        """Root multiset of the suspension by k points: {eta*zeta} over
        eta^k = 1, eta != 1 and zeta a root of self.

        Roots are tracked as residues modulo L = lcm(orders, k) and the
        resulting counts refactored into cyclotomics; the multiset is
        Galois-stable by construction, which is asserted.
        """
        if k < 1:
            raise ValueError("k must be >= 1")
        if not self.is_polynomial():
            raise ValueError("Thom-Sebastiani tensor needs a polynomial input")
        if not self.items:
            return CycloProduct.one()
        L = lcm_all([d for d, _ in self.items] + [k])
        counts: dict[int, int] = {}
        for d, e in self.items:
            step = L // d
            for j in range(d):
                if gcd(j, d) != 1:
                    continue
                zeta = j * step
                for a in range(1, k):
                    res = (zeta + a * (L // k)) % L
                    counts[res] = counts.get(res, 0) + e
        return _refactor_counts(counts, L)


def _refactor_counts(counts: dict[int, int], L: int) -> CycloProduct:
    """Turn residue-class multiplicities mod L into Phi_d exponents."""
    by_order: dict[int, dict[int, int]] = {}
    for res, c in counts.items():
        d = L // gcd(res, L)
        by_order.setdefault(d, {})[res] = c
    factors = {}
    for d, residues in by_order.items():
        mults = set(residues.values())
        if len(mults) != 1 or len(residues) != euler_phi(d):
            raise ConsistencyError(
                f"root multiset is not Galois-stable at order {d}")
        factors[d] = mults.pop()
    return CycloProduct.from_factors(factors)


def order_closure(orders) -> OrderSet:
    return divisor_closure(orders)


# -- serialization -----------------------------------------------------------


def cyclo_to_json(h: CycloProduct) -> dict:
    return {"cyclotomic": {str(d): e for d, e in h.items}}


def cyclo_from_json(obj: dict) -> CycloProduct:
    if "cyclotomic" in obj:
        return CycloProduct.from_factors(
            {int(d): int(e) for d, e in obj["cyclotomic"].items()})
    if "brackets" in obj:
        return CycloProduct.from_brackets(
            (int(m), int(n)) for m, n in obj["brackets"])
    raise ValueError("expected a 'cyclotomic' or 'brackets' key")


def cyclo_str(h: CycloProduct) -> str:
    if not h.items:
        return "1"
    parts = []
    for d, e in h.items:
        base = f"Phi_{d}"
        parts.append(base if e == 1 else f"{base}^{e}")
    return " ".join(parts)
