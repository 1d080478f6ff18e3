# Goppa code variants for cyclogoppa Packages

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
The :code:`cyclogoppa.codes.goppa` module builds binary Goppa codes and their
expurgated and extended variants from a support :math:`L` and a Goppa
polynomial :math:`g` of degree :math:`r` over :math:`GF(2^m)`.

Parity-check rows over the field are :math:`\alpha^j/g(\alpha)` evaluated on
the support, for :math:`0\leq j<r` (plain) or :math:`0\leq j\leq r`
(expurgated and extended). The extended variant appends one coordinate whose
column is :math:`(0,\dots,0,g_r^{-1})`. Rows are expanded over GF(2) before
taking the kernel, so all three codes are binary subfield subcodes.

It also holds the admissible Goppa polynomials attached to a map's fixed
points and the invariance test these polynomials must pass.
"""

from dataclasses import dataclass
import logging
import warnings

import galois
import numpy as np

from cyclogoppa.field.poly import constant, is_zero, orbit_polynomial
from cyclogoppa.utils.baseclasses import GoppaCodeBase
from cyclogoppa.utils.exceptions import (
    DegreeBoundError,
    FieldMismatchError,
    InvalidExponentsError,
    LiteralParseError,
    PolynomialError,
    SupportError,
    UnsupportedCaseError,
    ZeroCodeWarning,
)

logger = logging.getLogger(__name__)

VARIANTS = ("plain", "expurgated", "extended")


@dataclass(frozen=True, eq=False)
class GoppaInstance:
    r"""Validated Goppa data.

    args:
        field (FieldSpec): Field of the support and of :math:`g`.
        support (1D galois.FieldArray): Distinct support points, in coordinate
            order.
        g (galois.Poly): Goppa polynomial of degree :math:`r\geq1`, with no
            root on the support.
        variant (str): One of :code:`plain`, :code:`expurgated`,
            :code:`extended`.

    Raises:
        LiteralParseError: Unknown variant.
        FieldMismatchError: Support or polynomial over another field.
        SupportError: Repeated support points or a root of :math:`g` on the
            support.
        DegreeBoundError: :math:`r` too large for the support.

    """

    field: object
    support: object
    g: galois.Poly
    variant: str

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise LiteralParseError(
                "Unknown variant '{}', expected one of {}.".format(self.variant, VARIANTS)
            )
        self.field.check(self.support)
        if self.g.field is not self.field.GF:
            raise FieldMismatchError("Goppa polynomial is over another field.")

        values = self.support.view(np.ndarray)
        if values.ndim != 1 or values.size == 0:
            raise SupportError("Support must be a nonempty 1D array.")
        if np.unique(values).size != values.size:
            raise SupportError("Support points must be distinct.")

        if self.g.degree < 1:
            raise PolynomialError("Goppa polynomial must have degree at least 1.")
        if np.any(self.g(self.support) == 0):
            raise SupportError("Goppa polynomial vanishes on the support.")

        limit = len(self.support) + (1 if self.variant == "extended" else 0)
        if self.r >= limit:
            raise DegreeBoundError(
                "Degree {} is not below {} for the {} variant.".format(
                    self.r, limit, self.variant
                )
            )

    @property
    def r(self):
        return self.g.degree

    @property
    def length(self):
        return len(self.support) + (1 if self.variant == "extended" else 0)


def _power_rows(instance, count):
    r"""Rows :math:`\alpha^j/g(\alpha)` for :math:`0\leq j<` :code:`count`."""
    weights = instance.g(instance.support) ** -1
    rows = []
    row = weights
    for _ in range(count):
        rows.append(row.view(np.ndarray).astype(np.int64))
        row = row * instance.support
    return np.stack(rows)


class PlainGoppaCode(GoppaCodeBase):
    """Classical binary Goppa code :math:`\\Gamma(L, g)`."""

    def parity_check(self, instance):
        return instance.field.GF(_power_rows(instance, instance.r))


class ExpurgatedGoppaCode(GoppaCodeBase):
    r"""Expurgated code: the even-weight subcode cut out by the extra row
    :math:`\alpha^r/g(\alpha)`."""

    even_weight = True

    def parity_check(self, instance):
        return instance.field.GF(_power_rows(instance, instance.r + 1))


class ExtendedGoppaCode(GoppaCodeBase):
    r"""Extended code on :math:`L\cup\{\infty\}`; the last coordinate is
    :math:`\infty`."""

    extra_positions = 1
    even_weight = True

    def parity_check(self, instance):
        rows = _power_rows(instance, instance.r + 1)
        column = np.zeros((rows.shape[0], 1), dtype=np.int64)
        column[-1, 0] = int(instance.g.coeffs[0] ** -1)
        return instance.field.GF(np.concatenate([rows, column], axis=1))


VARIANT_CLASSES = {
    "plain": PlainGoppaCode,
    "expurgated": ExpurgatedGoppaCode,
    "extended": ExtendedGoppaCode,
}


def parity_check(instance):
    """Parity-check matrix of an instance over its field."""
    return VARIANT_CLASSES[instance.variant]().parity_check(instance)


def build_code(instance, check_even_weight=True):
    """Binary code of an instance.

    returns:
        :class:`cyclogoppa.codes.linbin.BinaryCode`

    """
    code = VARIANT_CLASSES[instance.variant](check_even_weight=check_even_weight)(instance)
    logger.debug(
        "%s code: n=%d k=%d (r=%d)", instance.variant, code.n, code.k, instance.r
    )
    return code


def satisfies_invariance_condition(M, g, n):
    r"""Test :math:`\sum_i g_i N^i D^{r-i} = \kappa\, g^{2^j}` with
    :math:`N=ax^{2^j}+b`, :math:`D=cx^{2^j}+d` and
    :math:`\kappa=c^r g(a/c)/g_r^{2^j}`.

    This is the identity under which the Goppa code on a full orbit of
    :code:`M` is invariant under the coordinate shift.

    :math:`\kappa` is normalized by the leading coefficient :math:`g_r`, so
    :code:`g` and any nonzero scalar multiple of it give the same answer. For
    monic :code:`g` it is the plain :math:`c^r g(a/c)`.

    args:
        M (MoebiusMap): Map with :math:`c\neq0`.
        g (galois.Poly): Polynomial over :code:`M.field`.
        n (int): Orbit length; :math:`\deg g<n` is required.

    Raises:
        UnsupportedCaseError: :math:`c=0`.
        FieldMismatchError: :code:`g` is over another field.
        DegreeBoundError: :math:`\deg g\geq n`.

    """
    if M.c == 0:
        raise UnsupportedCaseError("The invariance test needs c != 0.")
    GF = M.field.GF
    if g.field is not GF:
        raise FieldMismatchError("Polynomial and map are over different fields.")
    r = g.degree
    if r >= n:
        raise DegreeBoundError("Degree {} is not below the orbit length {}.".format(r, n))

    e = 2**M.frob
    N = galois.Poly([int(M.a)] + [0] * (e - 1) + [int(M.b)], field=GF)
    D = galois.Poly([int(M.c)] + [0] * (e - 1) + [int(M.d)], field=GF)

    lhs = galois.Poly.Zero(GF)
    for i, gi in enumerate(g.coefficients(order="asc")):
        if gi != 0:
            lhs += constant(gi) * N**i * D ** (r - i)

    kappa = M.c**r * g(M.a / M.c) / g.coeffs[0] ** e
    if kappa == 0:
        return False
    return lhs == constant(kappa) * g**e


@dataclass(frozen=True, eq=False)
class AdmissiblePair:
    r"""Linear Goppa polynomials :math:`g_1=x+f_1`, :math:`g_2=x+f_2` at the
    fixed points :math:`f_1=(a+\rho)/c` and :math:`f_2=(a+\rho^{-1})/c`."""

    g1: galois.Poly
    g2: galois.Poly

    @classmethod
    def from_spectral(cls, spectral):
        GF = spectral.working_field.GF
        return cls(
            galois.Poly([1, int(spectral.fixed1)], field=GF),
            galois.Poly([1, int(spectral.fixed2)], field=GF),
        )


def admissible_polys(spectral, s, t, base_coefficients=False):
    r""":math:`g=g_1^s g_2^t` over the working field.

    args:
        spectral (SpectralData): Spectral data of the map.
        s, t (int): Nonnegative exponents with :math:`s+t\geq1`.
        base_coefficients (bool, optional): In the irreducible case, return
            :math:`(g_1g_2)^s` pulled back to the base field; this needs
            :math:`s=t`. Default is False.

    returns:
        galois.Poly

    Raises:
        InvalidExponentsError: Negative exponents, :math:`s+t=0`, or
            :math:`s\neq t` with :code:`base_coefficients`.

    Warns:
        ZeroCodeWarning: :math:`s+t\geq n-1`.

    """
    if s < 0 or t < 0 or s + t < 1:
        raise InvalidExponentsError(
            "Exponents must be nonnegative with s + t >= 1, got ({}, {}).".format(s, t)
        )
    base = base_coefficients and not spectral.reducible
    if base and s != t:
        raise InvalidExponentsError(
            "Base-field coefficients need s = t in the irreducible case, got ({}, {}).".format(
                s, t
            )
        )

    pair = AdmissiblePair.from_spectral(spectral)
    g = pair.g1**s * pair.g2**t

    n = spectral.order
    if s + t >= n - 1:
        warnings.warn(
            "s + t = {} >= n - 1 = {}: the code is zero.".format(s + t, n - 1),
            ZeroCodeWarning,
        )

    if base:
        g = spectral.tower.restrict_poly(g)
    return g


def factors_into_orbit_polynomials(M, g, partition):
    """True when monic :code:`g` is a product of orbit polynomials of affine
    orbits in :code:`partition`.

    Raises:
        UnsupportedCaseError: Semilinear map.
        PolynomialError: :code:`g` is not monic of positive degree.
        FieldMismatchError: Orbits over another field than :code:`g`.

    """
    if M.frob:
        raise UnsupportedCaseError("Orbit factorization is checked for linear maps.")
    if g.degree < 1 or g.coeffs[0] != 1:
        raise PolynomialError("Expected a monic polynomial of positive degree.")

    remaining = g
    for orbit in partition:
        if orbit.contains_infinity:
            continue
        if orbit.line.field.GF is not g.field:
            raise FieldMismatchError("Orbit and polynomial are over different fields.")
        factor = orbit_polynomial(orbit)
        while remaining.degree >= factor.degree:
            quotient, rem = divmod(remaining, factor)
            if not is_zero(rem):
                break
            remaining = quotient
    return remaining.degree == 0
