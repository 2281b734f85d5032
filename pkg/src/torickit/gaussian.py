"""Gaussian rational scalars and univariate polynomials over them.

Q(i) replaces floating complex numbers everywhere: a common root of
polynomials with coefficients in Q(i) exists over C iff their gcd computed
over Q(i) has positive degree, so membership questions become exact gcd
degree checks with no tolerances.

Polynomials are tuples of coefficients in ascending degree order with no
trailing zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class GaussianRational:
    real: Fraction
    imag: Fraction

    def __post_init__(self):
        if not isinstance(self.real, Fraction) or not isinstance(self.imag, Fraction):
            raise TypeError("components must be fractions")

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.real + other.real, self.imag + other.imag)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.real - other.real, self.imag - other.imag)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.real, -self.imag)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.real * other.real - self.imag * other.imag,
            self.real * other.imag + self.imag * other.real,
        )

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        norm = other.real * other.real + other.imag * other.imag
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.real * other.real + self.imag * other.imag) / norm,
            (self.imag * other.real - self.real * other.imag) / norm,
        )

    @property
    def is_zero(self) -> bool:
        return self.real == 0 and self.imag == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.real, -self.imag)

    def abs_squared(self) -> Fraction:
        return self.real * self.real + self.imag * self.imag

    def __str__(self) -> str:
        if self.imag == 0:
            return str(self.real)
        if self.real == 0:
            return f"{self.imag}i"
        sign = "+" if self.imag > 0 else "-"
        return f"{self.real}{sign}{abs(self.imag)}i"


ZERO = GaussianRational(Fraction(0), Fraction(0))
ONE = GaussianRational(Fraction(1), Fraction(0))
I = GaussianRational(Fraction(0), Fraction(1))


def gaussian(real, imag=0) -> GaussianRational:
    """Build a Gaussian rational from ints, fractions or fraction strings."""
    return GaussianRational(Fraction(real), Fraction(imag))


def gaussian_from_pair(pair) -> GaussianRational:
    """Parse the wire form: a two-element [real, imaginary] fraction-string pair."""
    re, im = pair
    return GaussianRational(Fraction(str(re)), Fraction(str(im)))


def gaussian_to_pair(value: GaussianRational) -> list[str]:
    return [str(value.real), str(value.imag)]


# -- polynomials ------------------------------------------------------------

Poly = tuple[GaussianRational, ...]

POLY_ZERO: Poly = ()
POLY_ONE: Poly = (ONE,)


def poly(coefficients) -> Poly:
    """Normalize a coefficient sequence: strip trailing zeros."""
    coeffs = list(coefficients)
    while coeffs and coeffs[-1].is_zero:
        coeffs.pop()
    return tuple(coeffs)


def poly_degree(p: Poly) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(p) - 1


def poly_is_monic(p: Poly) -> bool:
    return bool(p) and p[-1] == ONE


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, coeff in enumerate(b):
        out[k] = out[k] + coeff
    return poly(out)


def poly_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_scale(a: Poly, factor: GaussianRational) -> Poly:
    if factor.is_zero:
        return POLY_ZERO
    return tuple(c * factor for c in a)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return POLY_ZERO
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero:
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return poly(out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    remainder = list(a)
    quotient = [ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = ONE / b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        coeff = remainder[shift + len(b) - 1] * inv_lead
        if coeff.is_zero:
            continue
        quotient[shift] = coeff
        for k, cb in enumerate(b):
            remainder[shift + k] = remainder[shift + k] - coeff * cb
    return poly(quotient), poly(remainder)


def poly_monic(p: Poly) -> Poly:
    if not p:
        return POLY_ZERO
    return poly_scale(p, ONE / p[-1])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm.

    Remainders are renormalized to monic at every step, which keeps
    coefficient growth in check over Q(i).
    """
    a, b = poly_monic(a), poly_monic(b)
    while b:
        _, rem = poly_divmod(a, b)
        a, b = b, poly_monic(rem)
    return a


def poly_multi_gcd(polys) -> Poly:
    """Iterated gcd in ascending index order, stopping once constant."""
    result = POLY_ZERO
    for p in polys:
        result = poly_gcd(result, p)
        if poly_degree(result) == 0:
            break
    return result


def poly_eval(p: Poly, z: GaussianRational) -> GaussianRational:
    value = ZERO
    for coeff in reversed(p):
        value = value * z + coeff
    return value


def poly_from_roots(roots) -> Poly:
    """Monic polynomial with the given (root, multiplicity) pairs."""
    result = POLY_ONE
    for root, multiplicity in roots:
        factor = (-root, ONE)
        for _ in range(multiplicity):
            result = poly_mul(result, factor)
    return result


def format_poly(p: Poly, var: str = "z") -> str:
    if not p:
        return "0"
    terms = []
    for power in range(len(p) - 1, -1, -1):
        coeff = p[power]
        if coeff.is_zero:
            continue
        if power == 0:
            terms.append(f"({coeff})")
        elif power == 1:
            body = var if coeff == ONE else f"({coeff}){var}"
            terms.append(body)
        else:
            body = f"{var}^{power}" if coeff == ONE else f"({coeff}){var}^{power}"
            terms.append(body)
    return " + ".join(terms)
