# Literal parsing and formatting for cyclogoppa Packages

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

"""
:code:`cyclogoppa.utils.utility`:

Text literals used on the command line, in instance files and in JSON reports.

- field elements: :code:`0`, :code:`1`, :code:`g^k` (any integer :code:`k`,
  :code:`g` alone means :code:`g^1`) or :code:`0b<bits>`;
- projective points: an element literal or :code:`inf`;
- matrices: :code:`[[a,b],[c,d]]`;
- field specs: :code:`m=<int>[,poly=0x<hex>][,gen=<literal>]`;
- polynomials over GF(2): hex mask (:code:`0x13`) or human form
  (:code:`x^4+x+1`); over :math:`GF(2^m)`: a list of element literals, lowest
  degree first.
"""

import re

import galois

from cyclogoppa.field.gf2m import GF2
from cyclogoppa.utils.exceptions import LiteralParseError

INFINITY_LITERAL = "inf"

_POWER = re.compile(r"^g(?:\^(-?\d+))?$")
_BITS = re.compile(r"^0b([01]+)$")
_TERM = re.compile(r"^(?:x(?:\^(\d+))?|1)$")


def parse_element(text, field):
    """Element of :code:`field` (a :class:`FieldSpec`) from its literal.

    Raises:
        LiteralParseError: Malformed literal or bit string too long.

    """
    s = str(text).strip().replace(" ", "")
    if s == "0":
        return field.zero
    if s == "1":
        return field.one

    match = _POWER.match(s)
    if match:
        return field.power(int(match.group(1) or 1))

    match = _BITS.match(s)
    if match:
        value = int(match.group(1), 2)
        if value >= field.order:
            raise LiteralParseError(
                "Bit literal {} does not fit GF(2^{}).".format(s, field.m)
            )
        return field.element(value)

    raise LiteralParseError("Cannot parse field element '{}'.".format(text))


def format_element(x, field):
    """Literal :code:`0`, :code:`1` or :code:`g^k` with :code:`0 <= k < 2^m-1`."""
    if x == 0:
        return "0"
    k = field.log(x)
    return "1" if k == 0 else "g^{}".format(k)


def parse_point(text, field):
    """Point label of :math:`P^1`: integer value, or :code:`field.order` for infinity."""
    if str(text).strip().lower() in (INFINITY_LITERAL, "infinity", "∞"):
        return field.order
    return int(parse_element(text, field))


def format_point(label, field):
    if label == field.order:
        return INFINITY_LITERAL
    return format_element(field.GF(int(label)), field)


def parse_matrix(text):
    """Split :code:`[[a,b],[c,d]]` into four element literals.

    Raises:
        LiteralParseError: Not a 2x2 matrix literal.

    """
    s = str(text).strip().replace(" ", "")
    if not (s.startswith("[[") and s.endswith("]]")):
        raise LiteralParseError("Matrix literal must look like [[a,b],[c,d]], got '{}'.".format(text))
    rows = s[2:-2].split("],[")
    entries = [entry for row in rows for entry in row.split(",")]
    if len(rows) != 2 or len(entries) != 4 or not all(entries):
        raise LiteralParseError("Matrix literal '{}' is not 2x2.".format(text))
    return tuple(entries)


def parse_field_spec(text):
    """Parse :code:`m=<int>[,poly=0x<hex>][,gen=<literal>]`.

    returns:
        dict: keys :code:`m`, :code:`poly` (int or None), :code:`gen` (literal
        or None).

    """
    out = {"m": None, "poly": None, "gen": None}
    for item in str(text).replace(" ", "").split(","):
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep or key not in out:
            raise LiteralParseError("Bad field spec item '{}'.".format(item))
        try:
            out[key] = int(value, 0) if key in ("m", "poly") else value
        except ValueError:
            raise LiteralParseError("Bad value in field spec item '{}'.".format(item))
    if out["m"] is None:
        raise LiteralParseError("Field spec '{}' lacks m=<int>.".format(text))
    return out


def parse_binary_poly(text):
    """GF(2) polynomial from a hex mask or a sum of monomials.

    Raises:
        LiteralParseError: Malformed literal.

    """
    s = str(text).strip().replace(" ", "")
    if s.lower().startswith("0x"):
        try:
            return galois.Poly.Int(int(s, 16), field=GF2)
        except ValueError:
            raise LiteralParseError("Bad hex polynomial '{}'.".format(text))

    if s == "0":
        return galois.Poly.Zero(GF2)

    degrees = []
    for term in s.split("+"):
        match = _TERM.match(term)
        if not match:
            raise LiteralParseError("Bad polynomial term '{}' in '{}'.".format(term, text))
        if term == "1":
            degrees.append(0)
        else:
            degrees.append(int(match.group(1) or 1))

    # repeated monomials cancel in characteristic 2
    mask = 0
    for deg in degrees:
        mask ^= 1 << deg
    return galois.Poly.Int(mask, field=GF2)


def parse_field_poly(literals, field):
    """Polynomial over :code:`field` from element literals, lowest degree first."""
    coeffs = [int(parse_element(lit, field)) for lit in literals]
    return galois.Poly(coeffs, field=field.GF, order="asc")


def format_poly(p, field=None):
    """Report form of a polynomial.

    GF(2) polynomials give :code:`{"hex", "human"}`; others give the list of
    coefficient literals, lowest degree first.
    """
    if p.field is GF2:
        return {"hex": hex(int(p)), "human": str(p).replace(" ", "")}
    coeffs = p.coefficients(order="asc")
    return [format_element(c, field) for c in coeffs]
