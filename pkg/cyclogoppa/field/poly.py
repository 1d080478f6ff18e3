# Polynomial utilities for cyclogoppa Packages

# Copyright (C) 2026 cyclogoppa developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

r"""
The :code:`cyclogoppa.field.poly` module holds polynomial helpers on top of
:code:`galois.Poly`: strict-field arithmetic, monic gcd/lcm, binary minimal
polynomials, orbit polynomials and the canonical factorization of
:math:`x^n-1` over GF(2) indexed by cyclotomic cosets.

In characteristic 2, :math:`x-\beta = x+\beta`; everything here is written
with :math:`+`.
"""

from functools import lru_cache
import math

import galois
import numpy as np

from cyclogoppa.field.gf2m import GF2, build_field, binary_minimal_poly
from cyclogoppa.utils.constants import MAX_FIELD_DEGREE
from cyclogoppa.utils.exceptions import (
    FieldMismatchError,
    FieldDivisionByZeroError,
    PolynomialError,
    SupportError,
)


def _check_same_field(*polys):
    field = polys[0].field
    for p in polys[1:]:
        if p.field is not field:
            raise FieldMismatchError(
                "Polynomials over {} and {} cannot be combined.".format(
                    field.name, p.field.name
                )
            )
    return field


def is_zero(p):
    return p == 0


def monic(p):
    """Scale a nonzero polynomial to leading coefficient one."""
    if is_zero(p):
        return p
    return p // p.coeffs[0]


def constant(x):
    """Constant polynomial from a 0-d field element."""
    return galois.Poly([int(x)], field=type(x))


def poly_arith(op, *operands):
    """Polynomial ring operations with strict field membership.

    args:
        op (str): One of :code:`add`, :code:`mul`, :code:`divmod`,
            :code:`pow` (integer exponent last), :code:`square`.
        *operands (galois.Poly): Operands.

    returns:
        galois.Poly or tuple: result, or :code:`(quotient, remainder)`.

    Raises:
        FieldMismatchError: Operands over different fields.
        FieldDivisionByZeroError: Division by the zero polynomial.
        ValueError: Unknown operation or negative exponent.

    """
    if op == "add":
        _check_same_field(*operands)
        a, b = operands
        return a + b

    if op == "mul":
        _check_same_field(*operands)
        a, b = operands
        return a * b

    if op == "divmod":
        _check_same_field(*operands)
        a, b = operands
        if is_zero(b):
            raise FieldDivisionByZeroError("Division by the zero polynomial.")
        return divmod(a, b)

    if op == "pow":
        a, k = operands
        if k < 0:
            raise ValueError("Polynomial exponent must be nonnegative, got {}.".format(k))
        return a ** int(k)

    if op == "square":
        (a,) = operands
        return a * a

    raise ValueError("Unknown polynomial operation '{}'.".format(op))


def poly_gcd_lcm(a, b):
    """Monic gcd and lcm.

    returns:
        tuple: :code:`(gcd, lcm)`; :code:`lcm` is zero when either input is.

    Raises:
        PolynomialError: Both inputs are zero.

    """
    field = _check_same_field(a, b)
    if is_zero(a) and is_zero(b):
        raise PolynomialError("gcd(0, 0) is undefined.")

    if is_zero(b):
        return monic(a), galois.Poly.Zero(field)
    if is_zero(a):
        return monic(b), galois.Poly.Zero(field)

    g = monic(galois.gcd(a, b))
    return g, monic((a // g) * b)


def lcm_all(polys, field=GF2):
    """Monic lcm of an iterable; the empty lcm is 1."""
    out = galois.Poly.One(field)
    for p in polys:
        out = poly_gcd_lcm(out, p)[1]
    return out


def poly_eval(p, x):
    """Evaluate :code:`p` at field element(s) :code:`x` of the same field.

    Raises:
        FieldMismatchError: :code:`x` is over another field.

    """
    if not isinstance(x, galois.FieldArray) or type(x) is not p.field:
        raise FieldMismatchError(
            "Cannot evaluate a polynomial over {} at {!r}.".format(p.field.name, x)
        )
    return p(x)


def minimal_polynomial_gf2(beta, allow_zero=False):
    r"""Minimal polynomial of :math:`\beta` over GF(2).

    The product of :math:`x+\beta^{2^i}` over the Frobenius orbit of
    :math:`\beta`.

    args:
        beta (galois.FieldArray): 0-d field element.
        allow_zero (bool, optional): If True, zero maps to :math:`x`.
            Default is False.

    Raises:
        PolynomialError: :code:`beta` is zero and :code:`allow_zero` is False.

    """
    if beta == 0:
        if not allow_zero:
            raise PolynomialError("Minimal polynomial of zero requested.")
        return galois.Poly.Identity(GF2)
    return binary_minimal_poly(beta)


def lift_binary_poly(u, field):
    """View a GF(2) polynomial over :code:`field` (a :class:`FieldSpec`)."""
    if u.field is not GF2:
        raise FieldMismatchError("Expected a polynomial over GF(2).")
    return galois.Poly(u.coeffs.view(np.ndarray), field=field.GF)


def poly_from_bits(bits):
    """GF(2) polynomial with coefficient of :math:`x^i` equal to :code:`bits[i]`."""
    bits = np.asarray(bits, dtype=np.int64)
    return galois.Poly(bits, field=GF2, order="asc")


def reciprocal(p):
    r"""Coefficient reversal :math:`x^{\deg p}p(1/x)`."""
    return galois.Poly(p.coeffs, order="asc")


def is_self_reciprocal(p):
    return reciprocal(p) == p


def x_n_minus_1(n):
    """:math:`x^n-1` over GF(2)."""
    return galois.Poly.Degrees([n, 0], field=GF2)


def cyclotomic_cosets(n):
    """Cyclotomic cosets of 2 modulo odd :code:`n`, by smallest member.

    returns:
        list: sorted lists of exponents, the coset of 0 first.

    """
    seen = np.zeros(n, dtype=bool)
    cosets = []
    for rep in range(n):
        if seen[rep]:
            continue
        coset = []
        i = rep
        while not seen[i]:
            seen[i] = True
            coset.append(i)
            i = (2 * i) % n
        cosets.append(sorted(coset))
    return cosets


def multiplicative_order_of_two(n):
    if n == 1:
        return 1
    k, value = 1, 2 % n
    while value != 1:
        value = (2 * value) % n
        k += 1
    return k


@lru_cache(maxsize=None)
def factor_xn_minus_1_gf2(n):
    r"""Canonical factorization of :math:`x^n-1` over GF(2).

    The factor attached to coset representative :math:`r` is the minimal
    polynomial of :math:`\beta^r` for a primitive :math:`n`-th root of unity
    :math:`\beta`. The set of factors does not depend on the choice of
    :math:`\beta`.

    args:
        n (int): Odd positive length.

    returns:
        tuple: pairs :code:`(representative, galois.Poly)` ordered by
        representative; the factor of the coset of 0 is :math:`x+1`.

    Raises:
        PolynomialError: :code:`n` is even, nonpositive, or needs a splitting
            field beyond :math:`GF(2^{16})`.

    """
    if n < 1 or n % 2 == 0:
        raise PolynomialError("x^n - 1 is only factored for odd n >= 1, got {}.".format(n))

    m = multiplicative_order_of_two(n)
    if m > MAX_FIELD_DEGREE:
        raise PolynomialError(
            "x^{} - 1 splits over GF(2^{}), beyond the supported degree {}.".format(
                n, m, MAX_FIELD_DEGREE
            )
        )

    field = build_field(m)
    beta = field.power((field.order - 1) // n)

    out = []
    for coset in cyclotomic_cosets(n):
        rep = coset[0]
        factor = binary_minimal_poly(beta**rep)
        assert factor.degree == len(coset)
        out.append((rep, factor))
    return tuple(out)


def generator_factors(u, n):
    """Canonical factors of :math:`x^n-1` dividing :code:`u`."""
    return [f for _, f in factor_xn_minus_1_gf2(n) if is_zero(u % f)]


def multiplier_image(p, k, n):
    r"""Canonical factor of :math:`x^n-1` whose roots are the :code:`k`-th
    powers of the roots of :code:`p`.

    Raises:
        PolynomialError: :code:`k` is not a unit modulo :code:`n`, or :code:`p`
            is not a canonical factor of :math:`x^n-1`.

    """
    if math.gcd(k, n) != 1:
        raise PolynomialError("{} is not a unit modulo {}.".format(k, n))
    pairs = factor_xn_minus_1_gf2(n)
    reps = {int(f): rep for rep, f in pairs}
    if p.field is not GF2 or int(p) not in reps:
        raise PolynomialError("{} is not an irreducible factor of x^{}-1.".format(p, n))
    target = (k * reps[int(p)]) % n
    for coset, (_, f) in zip(cyclotomic_cosets(n), pairs):
        if target in coset:
            return f


def orbit_polynomial(orbit):
    r"""Monic polynomial whose roots are the points of an affine orbit.

    args:
        orbit (:class:`cyclogoppa.geometry.projline.Orbit`): Orbit without
            :math:`\infty`.

    returns:
        galois.Poly: :math:`\prod_i (x+M^i(\alpha))` over the orbit's field.

    Raises:
        SupportError: The orbit contains :math:`\infty`.

    """
    if orbit.contains_infinity:
        raise SupportError("Orbit polynomials are only formed for affine orbits.")
    field = orbit.line.field
    return galois.Poly.Roots(orbit.finite_points, field=field.GF)

