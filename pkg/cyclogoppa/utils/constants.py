# Constants for cyclogoppa Packages

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
:code:`cyclogoppa.utils.constants`:

Package-wide defaults. Every report echoes the defining polynomial it used, so
changing an entry of :code:`PRIMITIVE_POLYS` changes element exponents in
reports but never code parameters or generator polynomials.
"""

# one primitive polynomial per degree, as bit masks (bit i = coefficient of x^i)
PRIMITIVE_POLYS = {
    1: 0x3,  # x + 1
    2: 0x7,  # x^2 + x + 1
    3: 0xB,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x83,  # x^7 + x + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}

MIN_FIELD_DEGREE = 1
MAX_FIELD_DEGREE = 16

# exhaustive enumeration guards (2^k codewords)
MIN_DISTANCE_MAX_DIM = 24
ORACLE_MAX_DIM = 14

# codewords per enumeration chunk
ENUMERATION_CHUNK = 1 << 14

# randomized sweeps
SWEEP_BASE_DEGREES = (4, 6, 8)
SWEEP_MAX_EXPONENT = 6
SWEEP_DEFAULT_COUNT = 200
SWEEP_DEFAULT_SEED = 20240521
SWEEP_MAX_BASE_DEGREE = 8

# seeded matrix search for the worked examples
EXAMPLE_SEARCH_SEED = 1729
EXAMPLE_SEARCH_MAX_TRIES = 100000

# cli exit codes
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_SKIP = 3
