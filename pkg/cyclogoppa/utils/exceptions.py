# Exceptions and warnings for cyclogoppa Packages

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
:code:`cyclogoppa.utils.exceptions`:

All errors raised by the package derive from :class:`CycloGoppaError`, itself a
:code:`ValueError`, and carry a machine-readable :code:`kind` string. The CLI
reports that string as :code:`error.kind`.
"""


class CycloGoppaError(ValueError):
    """Base class for package errors."""

    kind = "error"

    def to_dict(self):
        return {"kind": self.kind, "message": str(self)}


class InvalidFieldError(CycloGoppaError):
    kind = "invalid-field"


class SingularMatrixError(CycloGoppaError):
    kind = "singular"


class FieldMismatchError(CycloGoppaError):
    kind = "field-mismatch"


class ReduciblePolynomialError(CycloGoppaError):
    """Defining polynomial is reducible.

    args:
        message (str): Error message.
        factor (galois.Poly, optional): A nontrivial factor. Default is None.

    """

    kind = "reducible"

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class NonPrimitiveGeneratorError(CycloGoppaError):
    kind = "non-primitive"


class FieldDivisionByZeroError(CycloGoppaError, ZeroDivisionError):
    kind = "division-by-zero"


class PolynomialError(CycloGoppaError):
    kind = "polynomial"


class SupportError(CycloGoppaError):
    kind = "support"


class DegreeBoundError(CycloGoppaError):
    kind = "degree-bound"


class InvalidExponentsError(CycloGoppaError):
    kind = "invalid-exponents"


class LengthMismatchError(CycloGoppaError):
    kind = "length-mismatch"


class DimensionGuardError(CycloGoppaError):
    kind = "dimension-guard"


class LiteralParseError(CycloGoppaError):
    kind = "parse"


class UnknownExampleError(CycloGoppaError):
    kind = "unknown-example"


class StandingAssumptionError(CycloGoppaError):
    """The map violates an assumption the predictions rely on.

    Campaigns record these as skips rather than failures.
    """

    kind = "standing-assumption"


class UnsupportedCaseError(StandingAssumptionError):
    kind = "unsupported-case"


class ExcludedOrderTwoError(StandingAssumptionError):
    kind = "excluded-order-2"


class ZeroCodeWarning(UserWarning):
    """Goppa polynomial degree forces the zero code."""


class PrintedFactorWarning(UserWarning):
    """A published factor string does not divide x^n - 1."""
