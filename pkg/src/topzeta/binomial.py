"""Zeta-function building blocks for germs z^m (z^k + x^N) with a monomial
form x^nu z^nu_z dx/x dz/z.

The Newton polyhedron of such a germ induces a subdivision of the positive
orthant into the cones sigma+, sigma-, rho (with rho* the extra arc regime
over rho), and the local zeta function splits into four corresponding
terms.  This module computes:

  * the cone data (primitive rays, multiplicities, fundamental-domain
    point sets D_C, enumerated exactly);
  * the divisibility weights N(bullet) gating the twisted terms;
  * the topological terms w_top in closed form, in the variable
    r = ((m+k)s + nu_z)/k;
  * a symbolic motivic layer (MotExpr) mirroring the generating-function
    expressions term by term, whose Euler specialization must reproduce
    w_top exactly - the package's main internal oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from .errors import ConsistencyError
from .ratfun import RatFun, pdivmod, poly

SIGMA_PLUS = "sigma+"
SIGMA_MINUS = "sigma-"
RHO = "rho"
RHO_STAR = "rho*"
BULLETS = (SIGMA_PLUS, SIGMA_MINUS, RHO, RHO_STAR)

ENUMERATION_MAX_Q = 6


@dataclass(frozen=True)
class BinomialGerm:
    m: int                 # may be 0 (plain suspension)
    k: int
    N: tuple[int, ...]
    nu: tuple[int, ...]
    nu_z: int
    # derived, memoized at construction
    q: int = 0
    n_q: int = 0
    e_q: int = 0
    k_j: tuple[int, ...] = ()

    def __post_init__(self):
        if self.m < 0 or self.k < 1 or self.nu_z < 1:
            raise ValueError("need m >= 0, k >= 1, nu_z >= 1")
        if len(self.N) != len(self.nu) or not self.N:
            raise ValueError("N and nu must have equal positive length")
        if any(x < 1 for x in self.N) or any(x < 1 for x in self.nu):
            raise ValueError("N_j and nu_j must be >= 1")
        n_q = 0
        for x in self.N:
            n_q = gcd(n_q, x)
        object.__setattr__(self, "q", len(self.N))
        object.__setattr__(self, "n_q", n_q)
        object.__setattr__(self, "e_q", gcd(self.k, n_q))
        object.__setattr__(self, "k_j", tuple(gcd(self.k, x) for x in self.N))

    def r_linear(self) -> tuple[Fraction, Fraction]:
        """r = ((m+k)s + nu_z)/k as (slope, intercept)."""
        return Fraction(self.m + self.k, self.k), Fraction(self.nu_z, self.k)


# ---------------------------------------------------------------------------
# cone data


@dataclass(frozen=True)
class ConeData:
    mult_sigma_plus: int
    mult_rho: int
    d_sigma_plus: tuple[tuple[int, ...], ...]
    d_rho: tuple[tuple[int, ...], ...]


def rho_rays(k: int, N: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Primitive integral rays of rho: v_i = (k e_i + N_i e_z)/gcd(k, N_i)."""
    q = len(N)
    rays = []
    for i, n_i in enumerate(N):
        ki = gcd(k, n_i)
        v = [0] * (q + 1)
        v[i] = k // ki
        v[q] = n_i // ki
        rays.append(tuple(v))
    return tuple(rays)


def _coordinate_solver(rays: list[tuple[int, ...]]):
    """Exact solver for lambda = M^-1 x, precomputed once per cone.

    Row-reduces the ray matrix over Q to a left inverse A (so lambda = A x)
    plus consistency rows C (points with C x != 0 lie outside the span);
    both are returned integerized over a common denominator d, so the
    membership test 0 < lambda_i <= 1 becomes 0 < (A x)_i <= d in integers.
    """
    nrows = len(rays[0])
    ncols = len(rays)
    aug = [[Fraction(rays[j][i]) for j in range(ncols)]
           + [Fraction(int(i == r)) for r in range(nrows)]
           for i in range(nrows)]
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if aug[r][col] != 0), None)
        if pivot is None:
            raise ConsistencyError("rays are linearly dependent")
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    solve_rows = [aug[r][ncols:] for r in range(ncols)]
    consistency = [aug[r][ncols:] for r in range(ncols, nrows)]
    denom = 1
    for line in solve_rows + consistency:
        for c in line:
            denom = denom * c.denominator // gcd(denom, c.denominator)
    int_solve = [[int(c * denom) for c in line] for line in solve_rows]
    int_cons = [[int(c * denom) for c in line] for line in consistency]
    return int_solve, int_cons, denom


def _enumerate_domain(rays: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Integer points sum lambda_i a_i with lambda_i in (0, 1], by walking the
    integer box [0, sum a_i] and solving for lambda exactly."""
    dim = len(rays[0])
    box = [sum(r[i] for r in rays) for i in range(dim)]
    solve, cons, denom = _coordinate_solver(rays)
    points = []

    def walk(i: int, current: list[int]):
        if i == dim:
            for line in cons:
                if sum(c * x for c, x in zip(line, current)):
                    return
            for line in solve:
                lam = sum(c * x for c, x in zip(line, current))
                if not 0 < lam <= denom:
                    return
            points.append(tuple(current))
            return
        for x in range(box[i] + 1):
            current.append(x)
            walk(i + 1, current)
            current.pop()

    walk(0, [])
    return tuple(sorted(points))


@lru_cache(maxsize=None)
def _cone_data_cached(k: int, N: tuple[int, ...]) -> ConeData:
    q = len(N)
    k_j = [gcd(k, x) for x in N]
    n_q = 0
    for x in N:
        n_q = gcd(n_q, x)
    e_q = gcd(k, n_q)
    mult_sigma = k ** q // prod(k_j)
    mult_rho = k ** (q - 1) * e_q // prod(k_j)
    rays = list(rho_rays(k, N))
    e_z = tuple([0] * q + [1])
    d_sigma = _enumerate_domain(rays + [e_z])
    d_rho = _enumerate_domain(rays)
    if len(d_sigma) != mult_sigma:
        raise ConsistencyError(
            f"|D_sigma+| = {len(d_sigma)} != closed form {mult_sigma}")
    if len(d_rho) != mult_rho:
        raise ConsistencyError(
            f"|D_rho| = {len(d_rho)} != closed form {mult_rho}")
    return ConeData(mult_sigma, mult_rho, d_sigma, d_rho)


def cone_multiplicities(g: BinomialGerm) -> ConeData:
    """Multiplicities of sigma+ and rho with their fundamental domains;
    the enumerated cardinalities are checked against the closed forms
    k^q/prod k_j and k^{q-1} e_q/prod k_j."""
    if g.q > ENUMERATION_MAX_Q:
        raise ValueError(f"enumeration bound exceeded: q = {g.q}")
    return _cone_data_cached(g.k, g.N)


# ---------------------------------------------------------------------------
# divisibility weights


def n_bullet(g: BinomialGerm, bullet: str) -> int:
    """gcd of ord(g ° phi) over arcs with order vector interior to the cone:
    gcd(n_q, m) on sigma+, m+k on sigma-, (m+k) n_q / e_q on rho."""
    if bullet == SIGMA_PLUS:
        return gcd(g.n_q, g.m)   # gcd(n, 0) = n covers m = 0
    if bullet == SIGMA_MINUS:
        return g.m + g.k
    if bullet == RHO:
        return (g.m + g.k) * g.n_q // g.e_q
    raise ValueError(f"no divisibility weight for bullet {bullet!r}")


# ---------------------------------------------------------------------------
# topological terms


def _k_scaled_factors(g: BinomialGerm) -> list[tuple[int, int]]:
    """Integer forms k (N_j r + nu_j) = (N_j nu_z + k nu_j) + N_j (m+k) s,
    as (constant, slope) pairs; each carries a spare factor k."""
    return [(n_j * g.nu_z + g.k * nu_j, n_j * (g.m + g.k))
            for n_j, nu_j in zip(g.N, g.nu)]


def _int_linear_product(factors) -> list[int]:
    out = [1]
    for a, b in factors:
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i] += c * a
            nxt[i + 1] += c * b
        if not nxt[-1]:
            nxt.pop()
        out = nxt
    return out


def w_top(g: BinomialGerm, bullet: str) -> RatFun:
    """Closed-form topological term of the given cone, in s."""
    fs = _k_scaled_factors(g)
    kq = g.k ** g.q
    if bullet == SIGMA_PLUS:
        return RatFun.scaled_inv_product(kq, [(g.nu_z, g.m)] + fs)
    if bullet == RHO:
        return RatFun.scaled_inv_product(-g.e_q ** 2 * g.k ** (g.q - 1), fs)
    if bullet == RHO_STAR:
        return RatFun.scaled_inv_product(g.e_q ** 2 * g.k ** (g.q - 1),
                                         fs + [(1, 1)])
    if bullet == SIGMA_MINUS:
        # (1/(k r)) (1/prod nu - k^q/prod F); k r = (m+k)s + nu_z divides
        # the combined numerator exactly, and the quotient shares no root
        # with prod F, so only content scaling remains.
        prod_f = _int_linear_product(fs)
        prod_nu = prod(g.nu)
        num = list(prod_f)
        num[0] -= kq * prod_nu
        quot, rem = pdivmod(poly(num), poly([g.nu_z, g.m + g.k]))
        assert not rem
        den = poly([prod_nu * c for c in prod_f])
        if not quot:
            return RatFun.zero()
        return RatFun._scaled(quot, den)
    raise ValueError(f"unknown bullet {bullet!r}")


def w_top_twisted(g: BinomialGerm, bullet: str, l: int) -> RatFun:
    """l-twisted term: w_top if l | N(bullet), else 0; rho* is always 0."""
    if l < 2:
        raise ValueError("twisted terms need l >= 2")
    if bullet == RHO_STAR:
        return RatFun.zero()
    if n_bullet(g, bullet) % l == 0:
        return w_top(g, bullet)
    return RatFun.zero()


def ztop_binomial(g: BinomialGerm, l: int = 1) -> RatFun:
    """Full (twisted) local zeta function of the binomial germ."""
    if l == 1:
        return sum((w_top(g, b) for b in BULLETS), RatFun.zero())
    return sum((w_top_twisted(g, b, l) for b in BULLETS), RatFun.zero())


# ---------------------------------------------------------------------------
# motivic layer


@dataclass(frozen=True)
class MotTerm:
    """unit(L) * prod bare monomials L^-a T^b * sum_{(a,b) in p_exponents}
    L^-a T^b * prod_{(a,b) in atoms} 1/(1 - L^-a T^b).

    unit is an integer polynomial in L (ascending coefficients); atoms must
    have (a, b) != (0, 0).
    """
    unit: tuple[int, ...]
    p_exponents: tuple[tuple[int, int], ...]
    atoms: tuple[tuple[int, int], ...]
    monomials: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if any(ab == (0, 0) for ab in self.atoms):
            raise ValueError("atom with (a, b) = (0, 0)")

    @property
    def cardinality(self) -> int:
        return len(self.p_exponents)


@dataclass(frozen=True)
class MotExpr:
    terms: tuple[MotTerm, ...]


@lru_cache(maxsize=None)
def _unit_pow_lminus1(n: int, scale: int = 1) -> tuple[int, ...]:
    """scale * (L - 1)^n as an integer coefficient tuple."""
    out = [scale]
    for _ in range(n):
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i] -= c
            nxt[i + 1] += c
        out = nxt
    return tuple(out)


def _unit_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return tuple(out)


def _pair_exponents(points, nu_vec, weight_vec) -> tuple[tuple[int, int], ...]:
    """Each lattice point beta becomes (a, b) = (<beta, nu>, <beta, weights>)."""
    out = []
    for beta in points:
        a = 0
        b = 0
        for i, x in enumerate(beta):
            if x:
                a += x * nu_vec[i]
                b += x * weight_vec[i]
        out.append((a, b))
    out.sort()
    return tuple(out)


def motivic_w(g: BinomialGerm, bullet: str) -> MotExpr:
    """The generating-function expression of the given cone term, kept
    symbolic: units in L, fundamental-domain monomials for the P factors,
    and geometric atoms 1/(1 - L^-a T^b)."""
    cones = cone_multiplicities(g)
    q = g.q
    nu_full = (*g.nu, g.nu_z)
    n_full = (*g.N, g.m)                       # T-weights on sigma+/rho
    mk_ez = tuple([0] * q + [g.m + g.k])       # T-weights (m+k) e_z
    # shared atom blocks
    h_atoms = tuple(((g.k * nu_j + g.nu_z * n_j) // k_j,
                     (g.m + g.k) * n_j // k_j)
                    for n_j, nu_j, k_j in zip(g.N, g.nu, g.k_j))
    k_atom = (g.nu_z, g.m)
    k_tilde_atom = (g.nu_z, g.m + g.k)

    if bullet == SIGMA_PLUS:
        return MotExpr((MotTerm(
            unit=_unit_pow_lminus1(q + 1),
            p_exponents=_pair_exponents(cones.d_sigma_plus, nu_full, n_full),
            atoms=(k_atom, *h_atoms)),))

    if bullet == SIGMA_MINUS:
        term1 = MotTerm(
            unit=_unit_pow_lminus1(q + 1),
            p_exponents=((0, 0),),
            atoms=(k_tilde_atom, *((nu_j, 0) for nu_j in g.nu)))
        term2 = MotTerm(
            unit=_unit_pow_lminus1(q + 1, scale=-1),
            p_exponents=_pair_exponents(cones.d_sigma_plus, nu_full, mk_ez),
            atoms=(k_tilde_atom, *h_atoms))
        term3 = MotTerm(
            unit=_unit_pow_lminus1(q + 1, scale=-1),
            p_exponents=_pair_exponents(cones.d_rho, nu_full, mk_ez),
            atoms=h_atoms)
        return MotExpr((term1, term2, term3))

    if bullet == RHO:
        # (L - 1 - e_q) (L - 1)^q
        unit = _unit_mul(_unit_pow_lminus1(q), (-1 - g.e_q, 1))
        return MotExpr((MotTerm(
            unit=unit,
            p_exponents=_pair_exponents(cones.d_rho, nu_full, n_full),
            atoms=h_atoms),))

    if bullet == RHO_STAR:
        return MotExpr((MotTerm(
            unit=_unit_pow_lminus1(q + 1, scale=g.e_q),
            p_exponents=_pair_exponents(cones.d_rho, nu_full, n_full),
            atoms=((1, 1), *h_atoms),
            monomials=((1, 1),)),))

    raise ValueError(f"unknown bullet {bullet!r}")


def euler_specialize(expr: MotExpr) -> RatFun:
    """Euler-characteristic specialization at T = L^-s, L -> 1.

    Each (L - 1) unit paired with an atom 1/(1 - L^-(a+bs)) contributes
    1/(a + bs); P monomials and bare monomials go to 1; terms whose unit
    vanishes at L = 1 to higher order than the number of atoms vanish by
    additivity.  A unit vanishing to *lower* order would be a genuine pole
    at L = 1 and raises.
    """
    total = RatFun.zero()
    for term in expr.terms:
        coeffs = list(term.unit)
        order = 0
        while any(coeffs) and _value_at_one(coeffs) == 0:
            coeffs = _divide_l_minus_1(coeffs)
            order += 1
        if not any(coeffs):
            continue  # zero unit
        n_atoms = len(term.atoms)
        if order > n_atoms:
            continue
        if order < n_atoms:
            raise ConsistencyError(
                f"term has {n_atoms} atoms but unit vanishes to order {order}")
        scalar = _value_at_one(coeffs) * term.cardinality
        total = total + RatFun.scaled_inv_product(scalar, term.atoms)
    return total


def _value_at_one(coeffs) -> int:
    return sum(coeffs)


def _divide_l_minus_1(coeffs):
    """Exact division of an integer polynomial by (L - 1)."""
    out = [0] * (len(coeffs) - 1)
    carry = 0
    for i in range(len(coeffs) - 1, 0, -1):
        carry += coeffs[i]
        out[i - 1] = carry
    assert carry + coeffs[0] == 0, "polynomial not divisible by L - 1"
    return out
