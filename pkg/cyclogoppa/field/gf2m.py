# Binary extension fields for cyclogoppa Packages

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
The :code:`cyclogoppa.field.gf2m` module wraps :code:`galois` fields
:math:`GF(2^m)`, :math:`1\leq m\leq 16`, with a pinned defining polynomial and
a pinned primitive element :math:`g`. Elements are 0-d
:code:`galois.FieldArray` scalars whose integer value is the coordinate
vector in the polynomial basis (bit :math:`i` is the coefficient of
:math:`x^i`).

It also houses the quadratic tower :math:`GF(2^l)\subset GF(2^{2l})` used
whenever the characteristic polynomial of a map is irreducible over the base
field.
"""

from functools import cached_property, lru_cache
import logging
import math

import galois
import numpy as np

from cyclogoppa.utils.constants import (
    PRIMITIVE_POLYS,
    MIN_FIELD_DEGREE,
    MAX_FIELD_DEGREE,
)
from cyclogoppa.utils.exceptions import (
    InvalidFieldError,
    FieldMismatchError,
    ReduciblePolynomialError,
    NonPrimitiveGeneratorError,
    FieldDivisionByZeroError,
    ExcludedOrderTwoError,
)

logger = logging.getLogger(__name__)

GF2 = galois.GF(2)


class FieldSpec:
    """Binary extension field with a fixed representation.

    Use :func:`build_field` rather than instantiating directly when the default
    polynomial table should apply.

    args:
        m (int): Extension degree over GF(2).
        defining_poly (int): Bit mask of the monic degree-:code:`m` defining
            polynomial.
        generator (int, optional): Integer value of the primitive element. If
            None, :math:`x` is used when it is primitive, otherwise the
            smallest primitive element. Default is None.

    Raises:
        InvalidFieldError: Degree out of range or mask of the wrong degree.
        ReduciblePolynomialError: The mask is reducible over GF(2).
        NonPrimitiveGeneratorError: The requested generator is not primitive.

    """

    def __init__(self, m, defining_poly, generator=None):
        if not MIN_FIELD_DEGREE <= m <= MAX_FIELD_DEGREE:
            raise InvalidFieldError(
                "Field degree must be in [{}, {}], got {}.".format(
                    MIN_FIELD_DEGREE, MAX_FIELD_DEGREE, m
                )
            )
        if defining_poly >> m != 1:
            raise InvalidFieldError(
                "Defining polynomial {} is not monic of degree {}.".format(
                    hex(defining_poly), m
                )
            )

        poly = galois.Poly.Int(defining_poly, field=GF2)
        if not poly.is_irreducible():
            factors, _ = poly.factors()
            raise ReduciblePolynomialError(
                "Defining polynomial {} is reducible; it has the factor {}.".format(
                    poly, factors[0]
                ),
                factor=factors[0],
            )

        self.m = m
        self.defining_poly = defining_poly
        self.order = 2**m

        if m == 1:
            self.GF = GF2
        else:
            self.GF = galois.GF(2**m, irreducible_poly=poly)

        if generator is None:
            candidate = 2 if m > 1 else 1
            if not self._is_primitive_int(candidate):
                candidate = int(self.GF.primitive_element)
                logger.debug(
                    "x is not primitive modulo %s, using generator %s",
                    poly,
                    candidate,
                )
            generator = candidate

        elif not 0 < generator < self.order or not self._is_primitive_int(generator):
            raise NonPrimitiveGeneratorError(
                "Element {} is not a primitive element of GF(2^{}) modulo {}.".format(
                    bin(generator), m, poly
                )
            )

        self.generator = self.GF(generator)

    def _is_primitive_int(self, value):
        x = self.GF(value)
        if value == 0:
            return False
        group = self.order - 1
        if group == 1:
            return value == 1
        primes, _ = galois.factors(group)
        one = self.GF(1)
        # order is the full group iff no maximal proper divisor kills x
        return bool(x**group == one) and all(
            bool(x ** (group // p) != one) for p in primes
        )

    def attributes_FieldSpec(self):
        """
        attributes:
            m (int): Extension degree.
            defining_poly (int): Defining polynomial bit mask.
            order (int): Number of field elements :math:`2^m`.
            GF (type): The :code:`galois.FieldArray` subclass for this field.
            generator (galois.FieldArray): The pinned primitive element.

        """
        pass

    @property
    def zero(self):
        return self.GF(0)

    @property
    def one(self):
        return self.GF(1)

    @property
    def elements(self):
        """All field elements ordered by integer value."""
        return self.GF.elements

    @cached_property
    def exp_table(self):
        r"""Integer values of :math:`g^k` for :math:`0\leq k<2^m-1`."""
        size = self.order - 1
        powers = np.ones(1, dtype=np.int64)
        step = self.generator
        # doubling: powers holds g^0..g^(len-1) and step = g^len
        while powers.size < size:
            nxt = (self.GF(powers) * step).view(np.ndarray).astype(np.int64)
            powers = np.concatenate((powers, nxt))
            step = step * step
        return powers[:size]

    @cached_property
    def log_table(self):
        """Discrete logarithm base :math:`g` by integer value, -1 at zero."""
        table = np.full(self.order, -1, dtype=np.int64)
        table[self.exp_table] = np.arange(self.order - 1)
        return table

    def owns(self, x):
        """True if :code:`x` is an array of this field."""
        return isinstance(x, galois.FieldArray) and type(x) is self.GF

    def check(self, *operands):
        """Raise if any operand belongs to another field.

        Raises:
            FieldMismatchError: An operand is not an element of this field.

        """
        for x in operands:
            if not self.owns(x):
                raise FieldMismatchError(
                    "Operand {!r} does not belong to {}.".format(x, self)
                )

    def element(self, value):
        """Element from its integer coordinate value."""
        value = int(value)
        if not 0 <= value < self.order:
            raise InvalidFieldError(
                "Value {} out of range for GF(2^{}).".format(value, self.m)
            )
        return self.GF(value)

    def power(self, k):
        """:math:`g^k` for any integer :code:`k`."""
        return self.GF(self.exp_table[k % (self.order - 1)])

    def log(self, x):
        """Discrete logarithm base :math:`g`.

        Raises:
            FieldDivisionByZeroError: :code:`x` is zero.

        """
        self.check(x)
        value = self.log_table[np.asarray(x.view(np.ndarray), dtype=np.int64)]
        if np.any(value < 0):
            raise FieldDivisionByZeroError("Logarithm of zero is undefined.")
        return value if np.ndim(value) else int(value)

    def multiplicative_order(self, x):
        """Multiplicative order of a nonzero element."""
        group = self.order - 1
        return group // math.gcd(self.log(x), group)

    def random(self, size, rng):
        """Uniform random elements from a :code:`numpy.random.Generator`."""
        return self.GF(rng.integers(0, self.order, size=size))

    def arith(self, op, *operands):
        """Field arithmetic with strict field membership.

        args:
            op (str): One of :code:`add`, :code:`mul`, :code:`inv`, :code:`pow`.
            *operands: Field elements, with an integer exponent last for
                :code:`pow`.

        returns:
            galois.FieldArray: The result.

        Raises:
            FieldMismatchError: Operands from another field.
            FieldDivisionByZeroError: Inverse of zero.
            ValueError: Unknown operation.

        """
        if op == "add":
            x, y = operands
            self.check(x, y)
            return x + y

        if op == "mul":
            x, y = operands
            self.check(x, y)
            return x * y

        if op == "inv":
            (x,) = operands
            self.check(x)
            if np.any(x == 0):
                raise FieldDivisionByZeroError("Zero has no multiplicative inverse.")
            return x**-1

        if op == "pow":
            x, k = operands
            self.check(x)
            if k < 0 and np.any(x == 0):
                raise FieldDivisionByZeroError("Negative power of zero.")
            return x ** int(k)

        raise ValueError("Unknown field operation '{}'.".format(op))

    def frobenius(self, x, j=1):
        """:math:`x^{2^j}`."""
        return x ** (2 ** (j % self.m))

    def describe(self):
        """JSON-ready description echoed in every report."""
        return {
            "m": self.m,
            "poly": hex(self.defining_poly),
            "poly_human": str(galois.Poly.Int(self.defining_poly, field=GF2)),
            "gen": "0b" + format(int(self.generator), "0{}b".format(self.m)),
        }

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.m, self.defining_poly, int(self.generator)) == (
            other.m,
            other.defining_poly,
            int(other.generator),
        )

    def __hash__(self):
        return hash((self.m, self.defining_poly, int(self.generator)))

    def __repr__(self):
        info = self.describe()
        return "gf2m m={} poly={} gen={}".format(info["m"], info["poly"], info["gen"])


@lru_cache(maxsize=None)
def build_field(m, defining_poly=None, generator=None):
    r"""Build and validate :math:`GF(2^m)`.

    Fields are cached per argument tuple.

    args:
        m (int): Extension degree, :math:`1\leq m\leq 16`.
        defining_poly (int, optional): Bit mask of the defining polynomial. If
            None, the built-in primitive polynomial for degree :code:`m` is
            used. Default is None.
        generator (int, optional): Integer value of the primitive element.
            Default is None.

    returns:
        :class:`FieldSpec`: validated field.

    """
    if defining_poly is None:
        if m not in PRIMITIVE_POLYS:
            raise InvalidFieldError(
                "No built-in polynomial for degree {}; degrees 1-16 are supported.".format(
                    m
                )
            )
        defining_poly = PRIMITIVE_POLYS[m]
    return FieldSpec(m, defining_poly, generator=generator)


def sqrt(x):
    r"""Unique square root in characteristic 2, :math:`x^{2^{m-1}}`."""
    m = type(x).degree
    return x ** (2 ** (m - 1))


def binary_minimal_poly(x):
    """Minimal polynomial over GF(2) of an element, from its conjugates.

    args:
        x (galois.FieldArray): 0-d element.

    returns:
        galois.Poly: monic irreducible polynomial over GF(2).

    """
    field = type(x)
    conjugates = [int(x)]
    nxt = x * x
    while bool(nxt != x):
        conjugates.append(int(nxt))
        nxt = nxt * nxt
    poly = galois.Poly.Roots(field(conjugates), field=field)
    return galois.Poly(poly.coeffs.view(np.ndarray), field=GF2)


class TowerEmbedding:
    r"""Embedding :math:`GF(2^l)\hookrightarrow GF(2^{2l})`.

    The image of the base generator is :math:`\gamma^{k(Q-1)/(q-1)}` where
    :math:`\gamma` is the extension generator, :math:`q=2^l`, :math:`Q=q^2`
    and :math:`k` is the least unit modulo :math:`q-1` for which the image is
    a root of the base generator's minimal polynomial. With compatible
    defining polynomials :math:`k=1`.

    args:
        base (FieldSpec): Field :math:`GF(2^l)`.
        ext (FieldSpec): Field :math:`GF(2^{2l})`.

    Raises:
        InvalidFieldError: The degrees are not :math:`l` and :math:`2l`.

    """

    def __init__(self, base, ext):
        if ext.m != 2 * base.m:
            raise InvalidFieldError(
                "Extension degree {} is not twice the base degree {}.".format(
                    ext.m, base.m
                )
            )
        self.base = base
        self.ext = ext
        self.scale = (ext.order - 1) // (base.order - 1)

        group = base.order - 1
        if group == 1:
            self.multiplier = 1
        else:
            minpoly = binary_minimal_poly(base.generator)
            lifted = galois.Poly(minpoly.coeffs.view(np.ndarray), field=ext.GF)
            self.multiplier = next(
                k
                for k in range(1, group)
                if math.gcd(k, group) == 1
                and bool(lifted(ext.power(k * self.scale)) == 0)
            )
        self.image_of_base_generator = ext.power(self.multiplier * self.scale)
        logger.debug(
            "tower %r -> %r with generator image g^%d",
            base,
            ext,
            self.multiplier * self.scale,
        )

    def attributes_TowerEmbedding(self):
        """
        attributes:
            base (FieldSpec): Base field.
            ext (FieldSpec): Quadratic extension.
            scale (int): :math:`(Q-1)/(q-1)`.
            multiplier (int): Unit :math:`k` in the image exponent.
            image_of_base_generator (galois.FieldArray): Image of the base
                generator.

        """
        pass

    def embed(self, x):
        """Map base-field elements (any shape) into the extension.

        Raises:
            FieldMismatchError: :code:`x` is not a base-field array.

        """
        self.base.check(x)
        values = np.asarray(x.view(np.ndarray), dtype=np.int64)
        logs = self.base.log_table[values]
        exps = (logs * self.multiplier * self.scale) % (self.ext.order - 1)
        out = np.where(values == 0, 0, self.ext.exp_table[exps])
        return self.ext.GF(out)

    def in_image(self, y):
        """True where an extension element lies in the image of the base."""
        self.ext.check(y)
        values = np.asarray(y.view(np.ndarray), dtype=np.int64)
        logs = self.ext.log_table[values]
        return (values == 0) | (logs % self.scale == 0)

    def restrict(self, y):
        """Inverse of :meth:`embed` on its image.

        Raises:
            FieldMismatchError: Some entry lies outside the base-field image.

        """
        if not np.all(self.in_image(y)):
            raise FieldMismatchError(
                "Element outside the image of {} in {}.".format(self.base, self.ext)
            )
        values = np.asarray(y.view(np.ndarray), dtype=np.int64)
        logs = self.ext.log_table[values]
        group = self.base.order - 1
        inv_k = pow(self.multiplier, -1, group) if group > 1 else 0
        exps = ((np.maximum(logs, 0) // self.scale) * inv_k) % group
        out = np.where(values == 0, 0, self.base.exp_table[exps])
        return self.base.GF(out)

    def embed_poly(self, p):
        """Lift a polynomial over the base field coefficientwise."""
        return galois.Poly(self.embed(p.coeffs))

    def restrict_poly(self, p):
        """Pull a polynomial with base-field coefficients back to the base."""
        return galois.Poly(self.restrict(p.coeffs))


@lru_cache(maxsize=None)
def build_tower(base, ext_poly=None):
    r"""Quadratic extension of :code:`base` with its embedding.

    args:
        base (FieldSpec): Base field :math:`GF(2^l)`, :math:`l\leq 8`.
        ext_poly (int, optional): Defining polynomial mask for
            :math:`GF(2^{2l})`. Default is the built-in one.

    returns:
        :class:`TowerEmbedding`

    """
    return TowerEmbedding(base, build_field(2 * base.m, ext_poly))


def embed(x, tower):
    """Functional form of :meth:`TowerEmbedding.embed`."""
    return tower.embed(x)


def solve_unit_quadratic(t, tower):
    r"""Roots of :math:`\lambda^2+t\lambda+1` by exhaustive scan.

    args:
        t (galois.FieldArray): Nonzero trace in the base field.
        tower (TowerEmbedding): Tower containing both roots.

    returns:
        tuple: :math:`(\rho, \rho^{-1}, \text{reducible})`, the roots as
        extension elements (smaller integer value first) and True when both lie
        in the image of the base field.

    Raises:
        ExcludedOrderTwoError: :code:`t` is zero.

    """
    tower.base.check(t)
    if t == 0:
        raise ExcludedOrderTwoError(
            "Trace zero gives a double eigenvalue 1 (order at most 2)."
        )

    ext = tower.ext
    te = tower.embed(t)
    lam = ext.elements
    roots = lam[lam * lam + te * lam + ext.one == 0]
    # t != 0 makes the quadratic separable
    assert roots.size == 2
    rho, rho_inv = roots[0], roots[1]
    assert rho * rho_inv == ext.one and rho + rho_inv == te
    reducible = bool(np.all(tower.in_image(roots)))
    return rho, rho_inv, reducible
