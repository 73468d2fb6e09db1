"""Exact univariate rational functions over Q in the variable s.

Every zeta function in this package is a RatFun.  The canonical form is
fully reduced and scaled so that numerator and denominator have integer
coefficients of joint content 1, with the denominator's leading
coefficient positive; two RatFuns are equal iff their canonical forms are
componentwise identical.  Canonical coefficients being integers, the ring
operations run on plain int tuples (ascending degree, () the zero
polynomial); rationals only enter at construction, substitution and
evaluation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

# ---------------------------------------------------------------------------
# dense polynomial helpers


def _trim(c: list) -> tuple:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def poly(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    return _trim([Fraction(c) for c in coeffs])


def padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)])


def pneg(a):
    return tuple(-c for c in a)


def pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def pdivmod(a, b):
    """Quotient and remainder over Q (inputs may be int or Fraction tuples)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = Fraction(1) / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1] * inv_lead
        if coef:
            q[i] = coef
            for j, cb in enumerate(b):
                a[i + j] -= coef * cb
    return _trim(q), _trim(a)


def pgcd(a, b):
    """Monic gcd over Q."""
    while b:
        a, b = b, pdivmod(a, b)[1]
    if not a:
        return ()
    inv = Fraction(1) / a[-1]
    return tuple(c * inv for c in a)


def peval(a, x: Scalar) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pcompose_affine(p, a: Scalar, b: Scalar):
    """p(a*s + b) via Horner in the polynomial ring."""
    lin = poly([b, a])
    acc: tuple = ()
    for c in reversed(p):
        acc = padd(pmul(acc, lin), poly([c]))
    return acc


# integer-polynomial layer (for reduction of ring-operation results)


def _int_content(p) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _int_primitive(p) -> tuple[int, ...]:
    g = _int_content(p)
    if g in (0, 1):
        return tuple(p)
    return tuple(c // g for c in p)


def _int_pseudo_rem(a, b):
    """Pseudo-remainder of integer polynomials (lead(b)-scaled Euclid)."""
    a = list(a)
    db = len(b)
    lb = b[-1]
    while a and len(a) >= db:
        coef = a[-1]
        shift = len(a) - db
        a = [c * lb for c in a]
        for j, cb in enumerate(b):
            a[shift + j] -= coef * cb
        while a and not a[-1]:
            a.pop()
    return tuple(a)


def _int_gcd_poly(a, b) -> tuple[int, ...]:
    """Primitive gcd of nonzero integer polynomials, positive lead."""
    a, b = _int_primitive(a), _int_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_pseudo_rem(a, b)
        a, b = b, _int_primitive(r)
    if a[-1] < 0:
        a = tuple(-c for c in a)
    return a


def _int_div_exact(a, b) -> tuple[int, ...]:
    """a // b for integer polynomials when the division is exact."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        coef, rem = divmod(a[i + len(b) - 1], b[-1])
        assert rem == 0, "inexact integer polynomial division"
        if coef:
            q[i] = coef
            for j, cb in enumerate(b):
                a[i + j] -= coef * cb
    assert not any(a), "inexact integer polynomial division"
    return _trim(q)


ONE_POLY = (1,)


# ---------------------------------------------------------------------------


class PoleError(ArithmeticError):
    """Evaluation or residue requested at an unsuitable pole."""


class FactorizationError(ArithmeticError):
    """Denominator has an irreducible non-linear factor over Q."""


@dataclass(frozen=True)
class RatFun:
    num: tuple[int, ...]
    den: tuple[int, ...]

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_polys(num: Iterable[Scalar], den: Iterable[Scalar]) -> "RatFun":
        n, d = poly(num), poly(den)
        if not d:
            raise ZeroDivisionError("zero denominator")
        if not n:
            return RatFun((), ONE_POLY)
        if len(n) > 1 and len(d) > 1:
            g = pgcd(n, d)
            if len(g) > 1:
                n = pdivmod(n, g)[0]
                d = pdivmod(d, g)[0]
        return RatFun._scaled(n, d)

    @staticmethod
    def _scaled(n, d) -> "RatFun":
        """Scale a reduced Fraction-coefficient pair to the canonical
        integer form."""
        lcm_den = 1
        for c in (*n, *d):
            c = Fraction(c)
            lcm_den = lcm(lcm_den, c.denominator)
        n_i = [int(c * lcm_den) for c in n]
        d_i = [int(c * lcm_den) for c in d]
        content = gcd(_int_content(n_i), _int_content(d_i))
        if d_i[-1] < 0:
            content = -content
        return RatFun(tuple(c // content for c in n_i),
                      tuple(c // content for c in d_i))

    @staticmethod
    def _reduced_int(n: tuple[int, ...], d: tuple[int, ...]) -> "RatFun":
        """Canonicalize an integer pair coming from ring operations."""
        if not n:
            return RatFun((), ONE_POLY)
        if len(n) > 1 and len(d) > 1:
            g = _int_gcd_poly(n, d)
            if len(g) > 1:
                n = _int_div_exact(n, g)
                d = _int_div_exact(d, g)
        content = gcd(_int_content(n), _int_content(d))
        if d[-1] < 0:
            content = -content
        if content != 1:
            n = tuple(c // content for c in n)
            d = tuple(c // content for c in d)
        return RatFun(n, d)

    @staticmethod
    def scaled_inv_product(scalar: Scalar, factors) -> "RatFun":
        """scalar * prod 1/(a_i + b_i s) for integer pairs (a_i, b_i); the
        numerator stays constant, so no polynomial gcd is needed."""
        scalar = Fraction(scalar)
        if not scalar:
            return RatFun((), ONE_POLY)
        den = [1]
        for a, b in factors:
            if not a and not b:
                raise ZeroDivisionError("zero linear factor")
            nxt = [0] * (len(den) + 1)
            for i, c in enumerate(den):
                nxt[i] += c * a
                nxt[i + 1] += c * b
            if not nxt[-1]:
                nxt.pop()
            den = nxt
        p, q = scalar.numerator, scalar.denominator
        content = abs(p)
        for c in den:
            content = gcd(content, q * c)
        if den[-1] < 0:
            content = -content
        return RatFun((p // content,),
                      tuple(q * c // content for c in den))

    @staticmethod
    def const(c: Scalar) -> "RatFun":
        c = Fraction(c)
        if not c:
            return RatFun((), ONE_POLY)
        return RatFun((c.numerator,), (c.denominator,))

    @staticmethod
    def zero() -> "RatFun":
        return RatFun((), ONE_POLY)

    @staticmethod
    def one() -> "RatFun":
        return RatFun((1,), (1,))

    @staticmethod
    def linear(a: Scalar, b: Scalar) -> "RatFun":
        """The polynomial a*s + b."""
        return RatFun.from_polys([b, a], [1])

    @staticmethod
    def inv_linear(a: Scalar, b: Scalar) -> "RatFun":
        """1/(a*s + b)."""
        return RatFun.from_polys([1], [b, a])

    def is_zero(self) -> bool:
        return not self.num

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFun.const(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = RatFun._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFun._reduced_int(
            padd(pmul(self.num, o.den), pmul(o.num, self.den)),
            pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFun(pneg(self.num), self.den)

    def __sub__(self, other):
        o = RatFun._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RatFun._coerce(other) - self

    def __mul__(self, other):
        o = RatFun._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFun._reduced_int(pmul(self.num, o.num),
                                   pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFun._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFun._reduced_int(pmul(self.num, o.den),
                                   pmul(self.den, o.num))

    def __rtruediv__(self, other):
        return RatFun._coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = RatFun.one()
        for _ in range(n):
            out = out * self
        return out

    # -- analysis -----------------------------------------------------------

    def substitute_affine(self, a: Scalar, b: Scalar) -> "RatFun":
        """f(a*s + b); a must be nonzero."""
        if not Fraction(a):
            raise ValueError("affine substitution needs a != 0")
        return RatFun.from_polys(pcompose_affine(self.num, a, b),
                                 pcompose_affine(self.den, a, b))

    def evaluate(self, x: Scalar) -> Fraction:
        d = peval(self.den, x)
        if not d:
            raise PoleError(f"evaluation at the pole s = {Fraction(x)}")
        return peval(self.num, x) / d

    def _linear_factors(self) -> tuple[list[tuple[Fraction, int]], int]:
        """Denominator as lead * prod (s - root)^mult; roots found by exact
        rational-root search (denominators here are products of integer
        linear forms by construction)."""
        den = poly(self.den)
        roots: dict[Fraction, int] = {}
        lead = self.den[-1]
        while len(den) > 1:
            root = _rational_root(den)
            if root is None:
                raise FactorizationError(
                    "non-linear irreducible denominator factor: "
                    + _poly_str(den))
            quot, rem = pdivmod(den, poly([-root, 1]))
            assert not rem
            roots[root] = roots.get(root, 0) + 1
            den = quot
        return sorted(roots.items()), lead

    def poles_with_multiplicity(self) -> list[tuple[Fraction, int]]:
        """Sorted (pole, multiplicity) pairs."""
        if self.is_zero():
            return []
        return self._linear_factors()[0]

    def pol_plus(self) -> frozenset[Fraction]:
        """Absolute values of the poles."""
        return frozenset(abs(p) for p, _ in self.poles_with_multiplicity())

    def residue_at(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        if peval(self.den, x):
            return Fraction(0)
        quot, rem = pdivmod(self.den, poly([-x, 1]))
        assert not rem
        g_at_x = peval(quot, x)
        if not g_at_x:
            raise PoleError(f"pole of order >= 2 at s = {x}")
        return peval(self.num, x) / g_at_x

    # -- rendering / serialization ------------------------------------------

    def __str__(self) -> str:
        return render_text(self)

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num],
                "den": [str(c) for c in self.den]}

    @staticmethod
    def from_json(obj: dict) -> "RatFun":
        return RatFun.from_polys([Fraction(c) for c in obj["num"]],
                                 [Fraction(c) for c in obj["den"]])


def _rational_root(den: Sequence[Fraction]) -> Fraction | None:
    """A rational root of a rational-coefficient polynomial, or None."""
    scale = 1
    for c in den:
        scale = lcm(scale, Fraction(c).denominator)
    ints = [int(c * scale) for c in den]
    a0, lead = ints[0], ints[-1]
    if a0 == 0:
        return Fraction(0)
    for p in _int_divisors(abs(a0)):
        for q in _int_divisors(abs(lead)):
            for sign in (1, -1):
                cand = Fraction(sign * p, q)
                if not peval(ints, cand):
                    return cand
    return None


def _int_divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# canonical text / latex rendering


def _coeff_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else \
        f"{c.numerator}/{c.denominator}"


def _monomial_str(c, deg: int, star: str = "*") -> str:
    if deg == 0:
        return _coeff_str(c)
    var = "s" if deg == 1 else f"s^{deg}"
    if c == 1:
        return var
    if c == -1:
        return f"-{var}"
    return f"{_coeff_str(c)}{star}{var}"


def _poly_str(p, star: str = "*") -> str:
    if not p:
        return "0"
    parts = []
    for deg in range(len(p) - 1, -1, -1):
        c = p[deg]
        if not c:
            continue
        term = _monomial_str(c, deg, star)
        if parts:
            parts.append(f"- {term[1:]}" if term.startswith("-") else f"+ {term}")
        else:
            parts.append(term)
    return " ".join(parts)


def _den_factored(f: RatFun, star: str, pow_fmt) -> tuple[str, int]:
    """Denominator as integer-content linear factors, largest slope first;
    returns the string and the number of displayed parts."""
    try:
        roots, _lead = f._linear_factors()
    except FactorizationError:
        return f"({_poly_str(f.den, star)})", 1
    factors = []
    scale = Fraction(f.den[-1])
    for root, mult in sorted(roots, key=lambda rm: (-rm[0].denominator, rm[0])):
        b, a = root.denominator, -root.numerator  # b*s + a, content 1
        factors.append(((b, a), mult))
        scale /= Fraction(b) ** mult
    assert scale.denominator == 1
    parts = [] if scale == 1 else [str(int(scale))]
    for (b, a), mult in factors:
        base = f"({_poly_str((a, b), star)})"
        parts.append(base if mult == 1 else pow_fmt(base, mult))
    return star.join(parts), len(parts)


def render_text(f: RatFun) -> str:
    if f.is_zero():
        return "0"
    num = _poly_str(f.num)
    if f.den == ONE_POLY:
        return num
    den, nparts = _den_factored(f, "*", lambda b, m: f"{b}^{m}")
    if nparts > 1:
        den = f"({den})"
    return f"({num})/{den}"


def render_latex(f: RatFun) -> str:
    if f.is_zero():
        return "0"
    num = _poly_str(f.num, star=" ")
    if f.den == ONE_POLY:
        return num
    den, _ = _den_factored(f, " ", lambda b, m: f"{b}^{{{m}}}")
    return rf"\frac{{{num}}}{{{den}}}"
