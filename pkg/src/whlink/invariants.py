"""The link-invariant pipeline for weighted homogeneous singularities.

Following Milnor and Orlik, the divisor of the characteristic polynomial of
the monodromy acting on the middle homology of the Milnor fiber is

    div = prod_i (lam(u_i) / v_i - 1),        d / w_i = u_i / v_i reduced,

which always collapses to an integer combination sum_j a_j lam(j) - 1.
Everything else is read off that divisor:

  * the coefficient sum counts the t - 1 factors of the polynomial and is
    the first Betti number of a 3-variable link (twice the curve genus) or
    the second Betti number of a 4-variable one;
  * when the sum is zero the link is a rational homology sphere and the
    value at t = 1 is the order of its H_2 torsion group;
  * the polynomial itself expands to prod_j (t^j - 1)^{c_j}, computed here
    two independent ways so each can police the other.

The module-level constant ``MAX_POLY_DEGREE`` caps how large a polynomial
the pipeline will expand by default; the divisor-level invariants have no
such cap because they cost next to nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from . import polynomials as poly
from .divisor import OrlikDivisor, lam
from .errors import (
    ConsistencyError,
    CrossCheckError,
    MalformedDivisorError,
    NonIntegralDivisorError,
    NotAPolynomialError,
    NotASmoothCurveError,
)
from .weights import WeightSystem

MAX_POLY_DEGREE = 10_000

CharPolynomial = list


def milnor_orlik_divisor(ws: WeightSystem) -> OrlikDivisor:
    """Divisor of the monodromy characteristic polynomial of the link.

    The rational intermediate terms are expected; the final product must be
    integral.  A fractional result raises ``ConsistencyError``: for weight
    systems of actual quasi-smooth polynomials it would indicate an
    arithmetic bug, and for formal weight systems that slip past the genus
    proxy (such as w=(1,4,6), d=8) it certifies no such polynomial exists.
    """
    factors = [lam(u) / v - 1 for u, v in ws.reduced_ratios()]
    div = reduce(lambda a, b: a * b, factors, OrlikDivisor.one())
    if not div.is_integral():
        raise ConsistencyError(
            f"divisor of {ws} failed to reduce to integer coefficients: {div!r}"
        )
    return div


def betti_from_divisor(div: OrlikDivisor) -> int:
    """Multiplicity of t = 1 in the encoded polynomial, read as a Betti number."""
    if not div.is_integral():
        raise NonIntegralDivisorError(f"Betti number needs an integral divisor: {div!r}")
    s = int(div.coefficient_sum())
    if s < 0:
        raise MalformedDivisorError(
            f"coefficient sum {s} is negative; not the divisor of a link polynomial"
        )
    return s


def char_poly_from_divisor(div: OrlikDivisor) -> CharPolynomial:
    """Expand prod (t^j - 1)^{c_j} exactly, production route.

    Positive powers are folded in through precomputed binomial rows and
    negative ones divided out with the shift recurrence, one factor at a
    time; any remainder aborts with ``NotAPolynomialError``.
    """
    if not div.is_integral():
        raise NonIntegralDivisorError(f"cannot expand a fractional divisor: {div!r}")
    num = [1]
    negatives = []
    for j, c in sorted(div.items()):
        if c > 0:
            num = poly.mul_binomial_power(num, j, int(c))
        else:
            negatives.append((j, -int(c)))
    for j, c in negatives:
        for _ in range(c):
            num = poly.divexact_shift(num, j)
    return num


def oracle_expand(div: OrlikDivisor) -> CharPolynomial:
    """Expand the same product by brute force, oracle route.

    Builds numerator and denominator through repeated schoolbook products
    of two-term factors and finishes with ordinary long division.  Shares
    no shortcut with ``char_poly_from_divisor``; the two must agree bit for
    bit on every divisor that encodes a polynomial.
    """
    if not div.is_integral():
        raise NonIntegralDivisorError(f"cannot expand a fractional divisor: {div!r}")
    num, den = [1], [1]
    for j, c in sorted(div.items()):
        block = poly.inflate(poly.power([-1, 1], abs(int(c))), j)
        if c > 0:
            num = poly.mul(num, block)
        else:
            den = poly.mul(den, block)
    quot, rem = poly.long_divmod(num, den)
    if rem:
        raise NotAPolynomialError("divisor does not encode a polynomial")
    return quot


@dataclass(frozen=True)
class LinkInvariants:
    """Everything the divisor pipeline knows about one link.

    ``multiplicity_of_unity`` is the coefficient sum: b_1 for a 3-variable
    link, b_2 for a 4-variable one.  ``delta_at_one`` is present exactly
    when that multiplicity vanishes and is then the order of H_2 torsion.
    ``char_poly`` is populated only when the expanded degree fits under the
    requested cap.  ``genus`` is present for 3-variable links only.
    """

    divisor: OrlikDivisor
    multiplicity_of_unity: int
    char_poly: CharPolynomial | None
    delta_at_one: int | None
    genus: int | None

    def as_json(self, system: WeightSystem) -> dict:
        return {
            "weights": list(system.weights),
            "degree": system.degree,
            "divisor": self.divisor.as_json(),
            "betti": self.multiplicity_of_unity,
            "genus": self.genus,
            "delta_poly": None
            if self.char_poly is None
            else [str(c) for c in self.char_poly],
            "delta_at_one": None if self.delta_at_one is None else str(self.delta_at_one),
        }


def invariants_from_divisor(
    div: OrlikDivisor,
    *,
    genus: int | None = None,
    max_poly_degree: int = MAX_POLY_DEGREE,
) -> LinkInvariants:
    """Assemble the invariant record for an already computed divisor."""
    mult = betti_from_divisor(div)
    if genus is not None and 2 * genus != mult:
        raise CrossCheckError(
            f"genus formula gives {genus} but the divisor gives multiplicity {mult}"
        )
    delta_at_one = None
    if mult == 0:
        value = div.value_at_one()
        if value.denominator != 1 or value <= 0:
            raise ConsistencyError(
                f"torsion order came out as {value}, not a positive integer"
            )
        delta_at_one = int(value)
    char_poly = None
    if div.polynomial_degree() <= max_poly_degree:
        char_poly = char_poly_from_divisor(div)
        if poly.degree(char_poly) != div.polynomial_degree():
            raise ConsistencyError("expanded polynomial degree disagrees with divisor")
        at_one = poly.eval_at_one(char_poly)
        if mult == 0 and at_one != delta_at_one:
            raise CrossCheckError(
                f"polynomial value {at_one} at t = 1 disagrees with divisor value"
            )
        if mult > 0 and at_one != 0:
            raise CrossCheckError("polynomial should vanish at t = 1 but does not")
    return LinkInvariants(
        divisor=div,
        multiplicity_of_unity=mult,
        char_poly=char_poly,
        delta_at_one=delta_at_one,
        genus=genus,
    )


def link_invariants(
    ws: WeightSystem, *, max_poly_degree: int = MAX_POLY_DEGREE
) -> LinkInvariants:
    """Full invariant record of the link of a weight system.

    For three variables the genus is computed independently and checked
    against the divisor's multiplicity (first Betti number = twice the
    genus); a mismatch raises ``CrossCheckError``.  A divisor with a
    negative root multiplicity is rejected up front: no quasi-smooth
    polynomial has it, so there is no link whose invariants these would be.
    """
    div = milnor_orlik_divisor(ws)
    if not div.encodes_polynomial():
        raise NotASmoothCurveError(
            f"divisor of {ws} has a negative root multiplicity; "
            "no quasi-smooth polynomial realizes these weights"
        )
    genus = ws.genus() if ws.n == 3 else None
    return invariants_from_divisor(div, genus=genus, max_poly_degree=max_poly_degree)
