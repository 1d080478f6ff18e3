# Cyclicity, generator polynomials and distances for cyclogoppa Packages

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
The :code:`cyclogoppa.codes.cyclic` module decides whether a binary code is
invariant under the right shift
:math:`(c_0,\dots,c_{n-1})\mapsto(c_{n-1},c_0,\dots,c_{n-2})`, extracts its
generator polynomial, computes minimum distances by enumeration and forms the
closed-form generator predicted from a map's eigenvalue.

Predicted generators, for :math:`s,t\geq0`:

.. math::

    u_1=(x+1)\,\mathrm{lcm}_{1\leq i\leq s} m_{\rho^{-i}}, \quad
    u_2=(x+1)\,\mathrm{lcm}_{1\leq i\leq t} m_{\rho^{i}}, \quad
    u=\mathrm{lcm}(u_1,u_2),

with :math:`m_\beta` the minimal polynomial of :math:`\beta` over GF(2).
"""

from dataclasses import dataclass, field
import logging

import galois
import numpy as np

from cyclogoppa.field.gf2m import GF2
from cyclogoppa.field.poly import (
    lcm_all,
    lift_binary_poly,
    minimal_polynomial_gf2,
    poly_from_bits,
    poly_gcd_lcm,
    x_n_minus_1,
)
from cyclogoppa.utils.baseclasses import ParallelModuleBase
from cyclogoppa.utils.constants import (
    ENUMERATION_CHUNK,
    MIN_DISTANCE_MAX_DIM,
    ORACLE_MAX_DIM,
)
from cyclogoppa.utils.exceptions import (
    CycloGoppaError,
    DimensionGuardError,
    InvalidExponentsError,
)
from cyclogoppa.utils.utility import format_poly

logger = logging.getLogger(__name__)


@dataclass
class CyclicReport:
    """Cyclic structure of a binary code.

    :code:`generator` and :code:`parity_check_poly` are None when the code is
    not cyclic; :code:`d` is None when it was not computed or the code is zero.
    """

    n: int
    k: int
    is_cyclic: bool
    generator: galois.Poly = None
    parity_check_poly: galois.Poly = None
    d: int = None
    designed_distance: int = None
    notes: list = field(default_factory=list)

    def to_dict(self):
        out = {"n": self.n, "k": self.k, "is_cyclic": self.is_cyclic, "d": self.d}
        if self.generator is not None:
            gen = format_poly(self.generator)
            out["generator_hex"] = gen["hex"]
            out["generator_human"] = gen["human"]
            out["parity_check_hex"] = format_poly(self.parity_check_poly)["hex"]
        out["designed_distance"] = self.designed_distance
        return out


def _message_bits(start, stop, k):
    msgs = np.arange(start, stop, dtype=np.int64)
    return ((msgs[:, None] >> np.arange(k)) & 1).astype(np.uint8)


def is_cyclic(code):
    """True when the right shift of every generator row stays in the code."""
    if code.k == 0:
        return True
    shifted = np.roll(code.G, 1, axis=1).astype(np.int64)
    return not np.any((code.H_bits.astype(np.int64) @ shifted.T) % 2)


def extract_generator(code, require_cyclic=True):
    r"""Generator polynomial of a cyclic code.

    The generator is the gcd of :math:`x^n-1` with all generator rows read as
    polynomials.

    args:
        code (BinaryCode): Binary code of odd length.
        require_cyclic (bool, optional): If True, a non-cyclic code gets no
            generator. Otherwise the gcd is returned regardless, which
            generates the smallest cyclic code containing :code:`code`.
            Default is True.

    returns:
        :class:`CyclicReport`

    """
    n = code.n
    xn1 = x_n_minus_1(n)
    cyclic = is_cyclic(code)

    if code.k == 0:
        return CyclicReport(n, 0, True, xn1, galois.Poly.One(GF2))

    if require_cyclic and not cyclic:
        return CyclicReport(n, code.k, False)

    u = xn1
    for row in code.G:
        u = poly_gcd_lcm(u, poly_from_bits(row))[0]
        # every codeword is a multiple of the generator
        if cyclic and u.degree == n - code.k:
            break
    if cyclic:
        assert u.degree == n - code.k
    return CyclicReport(n, code.k, cyclic, u, xn1 // u)


def minimal_degree_codeword(code, max_dim=ORACLE_MAX_DIM):
    """Nonzero codeword of least degree, by enumerating every codeword.

    For a cyclic code this is its generator polynomial.

    Raises:
        DimensionGuardError: :code:`code.k > max_dim`.
        CycloGoppaError: The code is zero.

    """
    if code.k == 0:
        raise CycloGoppaError("The zero code has no nonzero codeword.")
    if code.k > max_dim:
        raise DimensionGuardError(
            "Enumerating 2^{} codewords exceeds the limit 2^{}.".format(code.k, max_dim)
        )
    words = (_message_bits(1, 2**code.k, code.k) @ code.G) & 1
    degrees = code.n - 1 - np.argmax(words[:, ::-1], axis=1)
    return poly_from_bits(words[np.argmin(degrees)])


class MinimumDistance(ParallelModuleBase):
    """Exhaustive minimum distance of a binary code.

    Messages are enumerated in chunks; chunks are independent and may be
    spread over threads.

    args:
        max_dim (int, optional): Largest dimension accepted. Default is
            :data:`MIN_DISTANCE_MAX_DIM`.
        chunk (int, optional): Messages per chunk. Default is
            :data:`ENUMERATION_CHUNK`.
        *args, **kwargs: Passed to :class:`ParallelModuleBase`.

    """

    def __init__(self, *args, max_dim=MIN_DISTANCE_MAX_DIM, chunk=ENUMERATION_CHUNK, **kwargs):
        ParallelModuleBase.__init__(self, *args, **kwargs)
        self.max_dim = max_dim
        self.chunk = chunk

    def attributes_MinimumDistance(self):
        """
        attributes:
            max_dim (int): Dimension guard.
            chunk (int): Messages per shard.

        """
        pass

    def _min_weight(self, G, shard):
        start, stop = shard
        words = (_message_bits(start, stop, G.shape[0]) @ G) & 1
        return int(words.sum(axis=1).min())

    def __call__(self, code):
        """Minimum distance, or None for the zero code.

        Raises:
            DimensionGuardError: :code:`code.k` exceeds :code:`max_dim`.

        """
        k = code.k
        if k == 0:
            return None
        if k > self.max_dim:
            raise DimensionGuardError(
                "Dimension {} exceeds the enumeration limit {}.".format(k, self.max_dim)
            )

        total = 2**k
        shards = [(lo, min(lo + self.chunk, total)) for lo in range(1, total, self.chunk)]
        G = code.G.astype(np.int64)
        weights = self.map_shards(lambda shard: self._min_weight(G, shard), shards)
        return min(weights)


def min_distance(code, **kwargs):
    """Functional form of :class:`MinimumDistance`."""
    return MinimumDistance(**kwargs)(code)


def reduce_exponents(s):
    r"""Odd indices :math:`i<2\lfloor (s+1)/2\rfloor` whose minimal polynomials
    already give :math:`\mathrm{lcm}_{1\leq i\leq s} m_{\rho^{-i}}`.

    Raises:
        InvalidExponentsError: :math:`s<1`.

    """
    if s < 1:
        raise InvalidExponentsError("Exponent must be at least 1, got {}.".format(s))
    return list(range(1, 2 * ((s + 1) // 2), 2))


def _eigen_lcm(beta, s):
    if s == 0:
        return galois.Poly.One(GF2)
    return lcm_all(minimal_polynomial_gf2(beta**i) for i in reduce_exponents(s))


def predict_generator(spectral, s, t):
    """Predicted generator and designed distance.

    returns:
        tuple: :code:`(u, designed)` with :code:`designed` equal to
        :math:`s+2` or :math:`t+2` when the other exponent is zero, else None.

    Raises:
        InvalidExponentsError: Negative exponents or :math:`s+t=0`.

    """
    if s < 0 or t < 0 or s + t < 1:
        raise InvalidExponentsError(
            "Exponents must be nonnegative with s + t >= 1, got ({}, {}).".format(s, t)
        )
    rho = spectral.rho_ext
    x1 = galois.Poly([1, 1], field=GF2)
    u1 = x1 * _eigen_lcm(rho**-1, s)
    u2 = x1 * _eigen_lcm(rho, t)
    u = poly_gcd_lcm(u1, u2)[1]

    # exponents beyond n wrap around; the result divides x^n - 1
    u = poly_gcd_lcm(u, x_n_minus_1(spectral.order))[0]

    if t == 0:
        designed = s + 2
    elif s == 0:
        designed = t + 2
    else:
        designed = None
    return u, designed


def bch_bound_check(report, s, t, spectral=None):
    r"""Check :math:`d\geq 2\lfloor(e+1)/2\rfloor+2` for pure exponents.

    With :code:`spectral`, also check that the generator vanishes on the
    consecutive run :math:`\beta^0,\dots,\beta^{2\lfloor(e+1)/2\rfloor}` with
    :math:`\beta=\rho^{-1}` (or :math:`\rho` when :math:`s=0`).

    Raises:
        InvalidExponentsError: Not exactly one of :code:`s`, :code:`t` is zero.
        CycloGoppaError: The distance of a nonzero code is unknown.

    """
    if (s == 0) == (t == 0):
        raise InvalidExponentsError("Exactly one exponent must be zero.")
    if report.k == 0:
        return True
    if report.d is None:
        raise CycloGoppaError("Minimum distance was not computed.")

    e = s or t
    half = (e + 1) // 2
    ok = report.d >= 2 * half + 2

    if spectral is not None and report.generator is not None:
        ext = spectral.tower.ext
        beta = spectral.rho_ext ** (-1 if s else 1)
        lifted = lift_binary_poly(report.generator, ext)
        run = beta ** np.arange(2 * half + 1)
        ok = ok and bool(np.all(lifted(run) == 0))
    return ok

