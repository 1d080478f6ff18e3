# Projective line and Moebius maps for cyclogoppa Packages

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
The :code:`cyclogoppa.geometry.projline` module contains the projective line
:math:`P^1(GF(2^m))`, semilinear Moebius maps
:math:`\zeta\mapsto (a\zeta^{2^j}+b)/(c\zeta^{2^j}+d)`, their orders, spectral
data and orbit partitions.

Points are handled as integer labels: :code:`0..q-1` are the field elements by
integer value and :code:`q` is :math:`\infty`, so :math:`\infty` sorts after
every affine point. Maps act on whole label arrays at once through homogeneous
coordinates, with :math:`\infty=(1:0)`.
"""

from dataclasses import dataclass
import logging
import math

import numpy as np

from cyclogoppa.field.gf2m import FieldSpec, sqrt, solve_unit_quadratic
from cyclogoppa.utils.exceptions import (
    ExcludedOrderTwoError,
    FieldMismatchError,
    InvalidExponentsError,
    SingularMatrixError,
    SupportError,
    UnsupportedCaseError,
)
from cyclogoppa.utils.utility import format_element, format_point

logger = logging.getLogger(__name__)


class _Infinity:
    """Point at infinity sentinel."""

    def __repr__(self):
        return "inf"


INFINITY = _Infinity()


class ProjectiveLine:
    """:math:`P^1` over a binary field.

    args:
        field (FieldSpec): Field of the line.

    """

    def __init__(self, field):
        self.field = field
        self.infinity_label = field.order
        self.size = field.order + 1

    def labels(self):
        return np.arange(self.size, dtype=np.int64)

    def label(self, point):
        """Integer label of an element, :data:`INFINITY` or a label."""
        if point is INFINITY:
            return self.infinity_label
        if isinstance(point, (int, np.integer)):
            if not 0 <= point < self.size:
                raise SupportError("Label {} is not a point of {}.".format(point, self))
            return int(point)
        self.field.check(point)
        return int(point)

    def point(self, label):
        return INFINITY if label == self.infinity_label else self.field.GF(int(label))

    def finite(self, labels):
        """Field array of the affine labels in :code:`labels`, order kept."""
        labels = np.asarray(labels, dtype=np.int64)
        return self.field.GF(labels[labels != self.infinity_label])

    def __eq__(self, other):
        if not isinstance(other, ProjectiveLine):
            return NotImplemented
        return self.field == other.field

    def __hash__(self):
        return hash(self.field)

    def __repr__(self):
        return "P1({!r})".format(self.field)


@dataclass(frozen=True, eq=False)
class MoebiusMap:
    r"""Element of :math:`P\Gamma L_2(GF(2^m))`.

    Build through :func:`normalize`, which scales the matrix to determinant one.

    args:
        a, b, c, d (galois.FieldArray): Matrix entries of :math:`A`.
        field (FieldSpec): Field of the entries.
        frob (int, optional): Frobenius exponent :math:`j` with
            :math:`0\leq j<m`. Default is 0.

    """

    a: object
    b: object
    c: object
    d: object
    field: FieldSpec
    frob: int = 0

    def __post_init__(self):
        self.field.check(self.a, self.b, self.c, self.d)
        if not 0 <= self.frob < max(self.field.m, 1):
            raise InvalidExponentsError(
                "Frobenius exponent {} out of range for GF(2^{}).".format(
                    self.frob, self.field.m
                )
            )

    @property
    def entries(self):
        return self.a, self.b, self.c, self.d

    @property
    def det(self):
        return self.a * self.d + self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    @property
    def matrix(self):
        return self.field.GF([[int(self.a), int(self.b)], [int(self.c), int(self.d)]])

    def is_scalar(self):
        return self.b == 0 and self.c == 0 and self.a == self.d

    def is_identity(self):
        return self.frob == 0 and self.is_scalar()

    def apply_labels(self, labels, line=None):
        """Image labels of an array of point labels."""
        line = line or ProjectiveLine(self.field)
        if line.field != self.field:
            raise FieldMismatchError(
                "Map over {!r} applied to {!r}; lift it first.".format(self.field, line)
            )
        GF = self.field.GF
        q = line.infinity_label

        labels = np.asarray(labels, dtype=np.int64)
        at_inf = labels == q
        X = GF(np.where(at_inf, 1, labels))
        Z = GF(np.where(at_inf, 0, 1))
        if self.frob:
            X = X ** (2**self.frob)

        num = self.a * X + self.b * Z
        den = (self.c * X + self.d * Z).view(np.ndarray).astype(np.int64)
        safe = GF(np.where(den == 0, 1, den))
        out = (num / safe).view(np.ndarray).astype(np.int64)
        return np.where(den == 0, q, out)

    def __call__(self, point, line=None):
        line = line or ProjectiveLine(self.field)
        return line.point(int(self.apply_labels([line.label(point)], line)[0]))

    def lift(self, tower):
        """Same matrix over the quadratic extension of a tower.

        Raises:
            UnsupportedCaseError: The map has a Frobenius part.
            FieldMismatchError: The map is not over the tower base.

        """
        if self.frob:
            raise UnsupportedCaseError("Semilinear maps are not lifted.")
        if self.field != tower.base:
            raise FieldMismatchError("Map is not defined over the tower base.")
        a, b, c, d = [tower.embed(x) for x in self.entries]
        return MoebiusMap(a, b, c, d, tower.ext)

    def describe(self):
        return {
            "matrix": [
                [format_element(self.a, self.field), format_element(self.b, self.field)],
                [format_element(self.c, self.field), format_element(self.d, self.field)],
            ],
            "frob": self.frob,
        }

    def __repr__(self):
        m = self.describe()["matrix"]
        return "MoebiusMap([[{},{}],[{},{}]], frob={})".format(
            m[0][0], m[0][1], m[1][0], m[1][1], self.frob
        )


def normalize(a, b, c, d, field, frob=0):
    r"""Scale :math:`A` to determinant one.

    In characteristic 2 every element has a unique square root, so dividing by
    :math:`\sqrt{\det A}` picks a canonical representative of the class of
    :math:`A` modulo scalars.

    Raises:
        SingularMatrixError: :math:`\det A=0`.

    """
    field.check(a, b, c, d)
    det = a * d + b * c
    if det == 0:
        raise SingularMatrixError("Matrix is singular over {!r}.".format(field))
    delta = sqrt(det)
    return MoebiusMap(a / delta, b / delta, c / delta, d / delta, field, frob)


def apply(M, point, line=None):
    """Image of a point; labels map to labels, elements and :data:`INFINITY` to points."""
    line = line or ProjectiveLine(M.field)
    if isinstance(point, (int, np.integer)):
        return int(M.apply_labels([point], line)[0])
    return M(point, line)


def compose(M1, M2):
    r""":math:`M_1\circ M_2`.

    With :math:`M_i=A_i\sigma^{j_i}` the product is
    :math:`A_1\sigma^{j_1}(A_2)\sigma^{j_1+j_2}`.
    """
    if M1.field != M2.field:
        raise FieldMismatchError("Maps over different fields cannot be composed.")
    field = M1.field
    a2, b2, c2, d2 = [field.frobenius(x, M1.frob) for x in M2.entries]
    a = M1.a * a2 + M1.b * c2
    b = M1.a * b2 + M1.b * d2
    c = M1.c * a2 + M1.d * c2
    d = M1.c * b2 + M1.d * d2
    return normalize(a, b, c, d, field, (M1.frob + M2.frob) % field.m)


def cycles(M, line=None):
    """Cycle decomposition of the permutation :code:`M` induces on a line.

    returns:
        list: label arrays in orbit order, each starting at its smallest label,
        sorted by that label.

    """
    line = line or ProjectiveLine(M.field)
    perm = M.apply_labels(line.labels(), line).tolist()
    seen = [False] * line.size
    out = []
    for start in range(line.size):
        if seen[start]:
            continue
        cyc = []
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cyc.append(cur)
            cur = perm[cur]
        out.append(np.asarray(cyc, dtype=np.int64))
    return out


def order(M, tower=None):
    r"""Order of :code:`M` in :math:`P\Gamma L_2`.

    Linear maps are composed with themselves until the matrix is scalar; given
    a tower and a nonzero trace, the result must equal the multiplicative
    order of the eigenvalue :math:`\rho`. Semilinear maps use the least common
    multiple of the cycle lengths on :math:`P^1(GF(2^m))`.
    """
    if M.frob:
        lengths = [len(cyc) for cyc in cycles(M)]
        return math.lcm(*lengths)

    limit = M.field.order + 1
    power, k = M, 1
    while not power.is_scalar():
        power = compose(power, M)
        k += 1
        assert k <= limit

    if tower is not None and M.trace != 0:
        rho, _, _ = solve_unit_quadratic(M.trace, tower)
        assert tower.ext.multiplicative_order(rho) == k
    return k


@dataclass(frozen=True, eq=False)
class SpectralData:
    r"""Eigen-data of a normalized map with :math:`c\neq0` and trace
    :math:`t\neq0`.

    The roots of :math:`\lambda^2+t\lambda+1` are :math:`\rho,\rho^{-1}`. In
    the reducible case both lie in the base field and everything is expressed
    there; otherwise the map and all derived data live in the quadratic
    extension. :code:`diagonalizer` has matrix
    :math:`P=\begin{pmatrix}a+\rho^{-1}&a+\rho\\c&c\end{pmatrix}` with
    :math:`AP=P\,\mathrm{diag}(\rho,\rho^{-1})`.

    """

    map: MoebiusMap
    tower: object
    trace: object
    order: int
    reducible: bool
    rho_ext: object
    rho_inv_ext: object
    working_field: FieldSpec
    working_map: MoebiusMap
    rho: object
    rho_inv: object
    fixed1: object
    fixed2: object
    diagonalizer_matrix: object

    @property
    def branch(self):
        return "reducible" if self.reducible else "irreducible"

    @property
    def line(self):
        return ProjectiveLine(self.working_field)

    @property
    def diagonalizer(self):
        p = self.diagonalizer_matrix
        return normalize(p[0, 0], p[0, 1], p[1, 0], p[1, 1], self.working_field)

    def describe(self):
        ext, w = self.tower.ext, self.working_field
        return {
            "order": self.order,
            "trace": format_element(self.trace, self.map.field),
            "branch": self.branch,
            "rho": format_element(self.rho_ext, ext),
            "rho_inv": format_element(self.rho_inv_ext, ext),
            "working_field": w.describe(),
            "fixed_points": [format_element(self.fixed1, w), format_element(self.fixed2, w)],
            "P": [[format_element(x, w) for x in row] for row in self.diagonalizer_matrix],
        }


def spectral(M, tower):
    r"""Spectral data of a linear map.

    args:
        M (MoebiusMap): Normalized map over :code:`tower.base`.
        tower (TowerEmbedding): Base field and its quadratic extension.

    returns:
        :class:`SpectralData`

    Raises:
        UnsupportedCaseError: :math:`c=0` or the map is semilinear.
        ExcludedOrderTwoError: :math:`t=0`.
        FieldMismatchError: :code:`M` is not over the tower base.

    """
    if M.frob:
        raise UnsupportedCaseError("Spectral data needs a linear map (frob = 0).")
    if M.field != tower.base:
        raise FieldMismatchError("Map is not defined over the tower base.")
    if M.c == 0:
        raise UnsupportedCaseError("c = 0 fixes infinity; no spectral predictions.")

    rho_e, rho_inv_e, reducible = solve_unit_quadratic(M.trace, tower)
    n = tower.ext.multiplicative_order(rho_e)
    if n <= 2:
        raise ExcludedOrderTwoError("Map of order {} is excluded.".format(n))

    q = tower.base.order
    if reducible:
        working, Mw = tower.base, M
        rho, rho_inv = tower.restrict(rho_e), tower.restrict(rho_inv_e)
        assert (q - 1) % n == 0
    else:
        working, Mw = tower.ext, M.lift(tower)
        rho, rho_inv = rho_e, rho_inv_e
        assert (q + 1) % n == 0
    assert n % 2 == 1

    a, c = Mw.a, Mw.c
    fixed1 = (a + rho) / c
    fixed2 = (a + rho_inv) / c
    P = working.GF([[int(a + rho_inv), int(a + rho)], [int(c), int(c)]])
    D = working.GF([[int(rho), 0], [0, int(rho_inv)]])
    assert np.array_equal(Mw.matrix @ P, P @ D)

    line = ProjectiveLine(working)
    for z in (fixed1, fixed2):
        assert Mw(z, line) == z

    logger.debug("spectral data: order %d, %s branch", n, "reducible" if reducible else "irreducible")
    return SpectralData(
        map=M,
        tower=tower,
        trace=M.trace,
        order=n,
        reducible=reducible,
        rho_ext=rho_e,
        rho_inv_ext=rho_inv_e,
        working_field=working,
        working_map=Mw,
        rho=rho,
        rho_inv=rho_inv,
        fixed1=fixed1,
        fixed2=fixed2,
        diagonalizer_matrix=P,
    )


@dataclass(frozen=True, eq=False)
class Orbit:
    """Orbit of a map on a projective line, in orbit order."""

    map: MoebiusMap
    line: ProjectiveLine
    labels: np.ndarray

    def __len__(self):
        return len(self.labels)

    @property
    def contains_infinity(self):
        return bool(np.any(self.labels == self.line.infinity_label))

    @property
    def finite_points(self):
        return self.line.finite(self.labels)

    def describe(self):
        return [format_point(lab, self.line.field) for lab in self.labels]


def orbit_of(M, point, line=None):
    r"""Orbit :math:`(\alpha, M(\alpha), M^2(\alpha), \dots)` of one point."""
    line = line or ProjectiveLine(M.field)
    start = line.label(point)
    labels = [start]
    cur = int(M.apply_labels([start], line)[0])
    while cur != start:
        labels.append(cur)
        assert len(labels) <= line.size
        cur = int(M.apply_labels([cur], line)[0])
    return Orbit(M, line, np.asarray(labels, dtype=np.int64))


def orbits(M, line=None):
    """All orbits of :code:`M` on a line, canonical order."""
    line = line or ProjectiveLine(M.field)
    return [Orbit(M, line, cyc) for cyc in cycles(M, line)]


def partition(M, working_field, tower=None):
    r"""Orbit partition of :math:`P^1` over the working field.

    args:
        M (MoebiusMap): Linear map with :math:`c\neq0` and trace
            :math:`t\neq0` over the base field.
        working_field (FieldSpec): :code:`M.field`, or :code:`tower.ext` to
            partition the line over the extension.
        tower (TowerEmbedding, optional): Needed when the working field is the
            extension. Default is None.

    returns:
        list: :class:`Orbit` objects ordered by smallest label; all non-singleton
        orbits have the same length.

    Raises:
        UnsupportedCaseError: Semilinear map or :math:`c=0`.
        ExcludedOrderTwoError: :math:`t=0`.
        FieldMismatchError: The working field is neither the base nor the tower
            extension.

    """
    if M.frob:
        raise UnsupportedCaseError("Partitions are formed for linear maps only.")
    if M.c == 0:
        raise UnsupportedCaseError("c = 0 fixes infinity; no spectral predictions.")
    if M.trace == 0:
        raise ExcludedOrderTwoError("Trace zero maps have order at most 2.")

    if working_field == M.field:
        Mw = M
    elif tower is not None and working_field == tower.ext and M.field == tower.base:
        Mw = M.lift(tower)
    else:
        raise FieldMismatchError(
            "Cannot partition the line over {!r} for a map over {!r}.".format(
                working_field, M.field
            )
        )

    out = orbits(Mw, ProjectiveLine(working_field))
    lengths = {len(o) for o in out if len(o) > 1}
    assert len(lengths) <= 1
    return out


def infinity_support(M, line=None):
    r"""Support :math:`(M(\infty), M^2(\infty), \dots)` of the extended code.

    The orbit of :math:`\infty` with :math:`\infty` itself removed, in orbit
    order; the extension coordinate stands for :math:`\infty`.

    Raises:
        SupportError: :math:`\infty` is a fixed point.

    """
    orbit = orbit_of(M, INFINITY, line)
    if len(orbit) == 1:
        raise SupportError("Infinity is fixed by the map; its orbit is trivial.")
    return orbit.line.finite(orbit.labels[1:])
