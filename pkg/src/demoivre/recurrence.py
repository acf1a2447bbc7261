"""Linearly recurring series, duration of play, and circle-division factors.

A recurrence a_n = b_1 a_{n-1} + ... + b_k a_{n-k} with pairwise distinct
characteristic roots decomposes into k geometric progressions; partial sums
then reduce to per-root geometric sums.  Repeated roots are rejected
outright rather than extended to polynomial-in-n terms.

Duration of play: for two players holding b stakes each, the probability
that play lasts beyond n games has the closed form

    sum_{j=1..b/2} c_j * t_j^(n/2),
    t_j = 2pq(1 + cos((2j-1)pi/b)),
    c_j = prod_{i!=j}(1 - t_i) / prod_{i!=j}(t_j - t_i),

stated for even b.  An absorbing random-walk iteration serves as the exact
oracle and also covers odd b and odd n.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

ROOT_SEPARATION = 1e-8
RESIDUE_TOLERANCE = 1e-12


class DegenerateSpectrumError(ValueError):
    """Characteristic roots repeated or too close to separate."""


@dataclass(frozen=True)
class Recurrence:
    """a_n = sum b_i * a_{n-i}, with initial terms a_0 ... a_{k-1}."""

    coefficients: tuple
    initial_terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(float(b) for b in self.coefficients))
        object.__setattr__(self, "initial_terms", tuple(float(a) for a in self.initial_terms))
        k = len(self.coefficients)
        if k < 1:
            raise ValueError("recurrence needs at least one coefficient")
        if len(self.initial_terms) != k:
            raise ValueError("need exactly as many initial terms as coefficients")
        if self.coefficients[-1] == 0:
            raise ValueError("trailing coefficient b_k must be nonzero (true order)")

    @property
    def order(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class ClosedForm:
    """Sum of coefficient * root^n terms; realness asserts conjugate pairing."""

    terms: tuple
    realness: bool = True

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((complex(c), complex(r)) for c, r in self.terms))


def iterate_terms(r: Recurrence, count: int):
    """First count terms by direct iteration (the oracle route)."""
    out = list(r.initial_terms)
    k = r.order
    while len(out) < count:
        nxt = sum(b * out[-i - 1] for i, b in enumerate(r.coefficients))
        out.append(nxt)
    return out[:count]


def solve_recurrence(r: Recurrence) -> ClosedForm:
    """Decompose into geometric terms via the characteristic roots.

    Roots come from the companion matrix; the linear system matching the
    initial terms is a Vandermonde solve.  Near-repeated roots (pairwise
    distance <= 1e-8) raise DegenerateSpectrumError.
    """
    k = r.order
    poly = [1.0] + [-b for b in r.coefficients]
    roots = np.roots(poly)
    for i in range(k):
        for j in range(i + 1, k):
            if abs(roots[i] - roots[j]) <= ROOT_SEPARATION:
                raise DegenerateSpectrumError(
                    f"characteristic roots {roots[i]:.6g} and {roots[j]:.6g} are not separated"
                )
    vander = np.array([[roots[j] ** n for j in range(k)] for n in range(k)], dtype=complex)
    coeffs = np.linalg.solve(vander, np.array(r.initial_terms, dtype=complex))
    return ClosedForm(tuple((coeffs[j], roots[j]) for j in range(k)), realness=True)


def eval_closed_form(cf: ClosedForm, n: int) -> float:
    """Sum coefficient * root^n; imaginary residue checked, then dropped."""
    if n < 0:
        raise ValueError("index must be non-negative")
    total = sum(c * r**n for c, r in cf.terms)
    if cf.realness:
        scale = max(1.0, sum(abs(c * r**n) for c, r in cf.terms))
        if abs(total.imag) > RESIDUE_TOLERANCE * scale:
            raise ArithmeticError(
                f"imaginary residue {total.imag:g} exceeds tolerance at n={n}"
            )
    return total.real


def partial_sum(r: Recurrence, upto: int) -> float:
    """Sum of a_0 .. a_upto from per-root geometric sums.

    A root within 1e-8 of 1 contributes coefficient*(upto+1); any other
    root contributes coefficient*(root^(upto+1) - 1)/(root - 1).
    """
    if upto < 0:
        raise ValueError("index must be non-negative")
    cf = solve_recurrence(r)
    total = 0j
    scale = 1.0
    for c, root in cf.terms:
        if abs(root - 1.0) <= ROOT_SEPARATION:
            piece = c * (upto + 1)
        else:
            piece = c * (root ** (upto + 1) - 1.0) / (root - 1.0)
        total += piece
        scale = max(scale, abs(piece))
    if abs(total.imag) > RESIDUE_TOLERANCE * scale:
        raise ArithmeticError(f"imaginary residue {total.imag:g} in partial sum")
    return total.real


@dataclass(frozen=True)
class DurationSpec:
    """b stakes per player, per-game win probability p, horizon n games.

    The closed form needs b even; the random-walk oracle takes any b >= 1.
    """

    b: int
    p: float
    n: int

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("stakes b must be a positive integer")
        if not 0 < self.p < 1:
            raise ValueError("win probability must lie strictly in (0, 1)")
        if self.n < 0:
            raise ValueError("number of games must be non-negative")


def duration_exceeds_exact(spec: DurationSpec) -> float:
    """P(no ruin within n games): iterate the mass over interior states.

    Random walk from 0 with absorbing barriers at +-b; interior states are
    the 2b-1 positions strictly between the barriers.
    """
    size = 2 * spec.b - 1
    p, q = spec.p, 1.0 - spec.p
    mass = [0.0] * size
    mass[spec.b - 1] = 1.0
    for _ in range(spec.n):
        new = [0.0] * size
        for i, m in enumerate(mass):
            if m == 0.0:
                continue
            if i + 1 < size:
                new[i + 1] += p * m
            if i - 1 >= 0:
                new[i - 1] += q * m
        mass = new
    return math.fsum(mass)


def duration_weights(b: int, p: float):
    """(t_j, c_j) pairs of the closed form, j = 1 .. b/2, for even b."""
    if b % 2 != 0:
        raise ValueError("closed form is stated for even b only")
    q = 1.0 - p
    half = b // 2
    t = [2 * p * q * (1 + math.cos((2 * j - 1) * math.pi / b)) for j in range(1, half + 1)]
    weights = []
    for j in range(half):
        num = 1.0
        den = 1.0
        for i in range(half):
            if i == j:
                continue
            num *= 1 - t[i]
            den *= t[j] - t[i]
        weights.append((t[j], num / den))
    return weights


def duration_exceeds_closed(spec: DurationSpec) -> float:
    """Closed-form P(duration > n) for even b.

    With b even, absorption can only happen at steps of b's parity, so for
    odd n the value equals the one at n-1; the reduction is applied here
    and is validated against the random-walk oracle in the tests.
    """
    n = spec.n if spec.n % 2 == 0 else spec.n - 1
    if n <= 0:
        return 1.0
    return math.fsum(c * t ** (n // 2) for t, c in duration_weights(spec.b, spec.p))


@dataclass(frozen=True)
class UnityFactorization:
    """Real factors of x^n + 1 (sign +1) or x^n - 1 (sign -1).

    quadratic_factors holds the cos(theta) of each factor
    x^2 - 2x*cos(theta) + 1; linear_factors holds the real roots.
    """

    degree: int
    sign: int
    linear_factors: tuple
    quadratic_factors: tuple

    def expand(self):
        """Coefficients (ascending) of the expanded product, for checking."""
        poly = [1.0]
        for root in self.linear_factors:
            poly = _polymul(poly, [-root, 1.0])
        for cos_t in self.quadratic_factors:
            poly = _polymul(poly, [1.0, -2.0 * cos_t, 1.0])
        return poly


def _polymul(a, b):
    out = [0.0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def factor_unity(n: int, sign: int) -> UnityFactorization:
    """Split x^n + 1 or x^n - 1 into real linear and quadratic factors.

    The n-th roots sit on the unit circle at angles (2k-1)pi/n (sign +1)
    or 2k*pi/n (sign -1); conjugate pairs collapse to
    x^2 - 2x*cos(theta) + 1 and the real roots +-1 stay linear.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 (x^n + 1) or -1 (x^n - 1)")
    linear = []
    cosines = []
    if sign == -1:
        linear.append(1.0)
        if n % 2 == 0:
            linear.append(-1.0)
        for k in range(1, (n + 1) // 2):
            cosines.append(math.cos(2 * math.pi * k / n))
    else:
        if n % 2 == 1:
            linear.append(-1.0)
        pairs = n // 2
        for k in range(1, pairs + 1):
            cosines.append(math.cos((2 * k - 1) * math.pi / n))
    return UnityFactorization(n, sign, tuple(linear), tuple(cosines))


def demoivre_power(theta: float, n: int):
    """(cos n*theta, sin n*theta), cross-checked against n-fold multiplication.

    Negative n goes through the conjugate reciprocal; the two routes must
    agree within 1e-10 or an internal-consistency error is raised.
    """
    direct = (math.cos(n * theta), math.sin(n * theta))
    base = cmath.exp(1j * theta)
    if n < 0:
        base = base.conjugate()
    acc = 1 + 0j
    for _ in range(abs(n)):
        acc *= base
    if abs(acc.real - direct[0]) > 1e-10 or abs(acc.imag - direct[1]) > 1e-10:
        raise ArithmeticError("multiple-angle and repeated-product routes disagree")
    return direct
