# Binary linear codes for cyclogoppa Packages

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
The :code:`cyclogoppa.codes.linbin` module does linear algebra over GF(2) on
:code:`numpy.uint8` arrays and holds :class:`BinaryCode`, a code stored by its
canonical reduced row echelon generator and parity-check matrices.

Row :code:`i` of a generator matrix is read as the codeword
:math:`\\sum_j G_{ij} x^j`; hex strings in reports use the same bit order.
"""

from dataclasses import dataclass
from typing import Tuple

import galois
import numpy as np

from cyclogoppa.utils.exceptions import FieldMismatchError, LengthMismatchError


def as_bit_matrix(matrix):
    """Copy to a 2D :code:`uint8` array of zeros and ones.

    Raises:
        ValueError: Entries other than 0 and 1, or not two-dimensional.

    """
    arr = np.asarray(matrix)
    if arr.ndim != 2:
        raise ValueError("Expected a 2D bit matrix, got shape {}.".format(arr.shape))
    if arr.size and (arr.min() < 0 or arr.max() > 1):
        raise ValueError("Bit matrix entries must be 0 or 1.")
    return arr.astype(np.uint8)


@dataclass(frozen=True)
class RowReduceResult:
    matrix: np.ndarray
    rank: int
    pivots: Tuple[int, ...]


def rref_rank(matrix):
    """Reduced row echelon form over GF(2).

    args:
        matrix (2D array): Bit matrix.

    returns:
        :class:`RowReduceResult`: reduced matrix (same shape, zero rows last),
        rank and pivot columns.

    """
    mat = as_bit_matrix(matrix).copy()
    rows, cols = mat.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nonzero = np.flatnonzero(mat[row:, col])
        if nonzero.size == 0:
            continue
        pivot = row + nonzero[0]
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        mask = mat[:, col].astype(bool)
        mask[row] = False
        mat[mask] ^= mat[row]
        pivots.append(col)
        row += 1
    return RowReduceResult(mat, row, tuple(pivots))


def rank(matrix):
    return rref_rank(matrix).rank


def null_space(matrix):
    """Basis of the right kernel :math:`\\{v : Mv = 0\\}` as rows.

    returns:
        2D np.ndarray: shape :code:`(cols - rank, cols)`.

    """
    res = rref_rank(matrix)
    cols = res.matrix.shape[1]
    reduced = res.matrix[: res.rank]
    pivots = set(res.pivots)
    free = [c for c in range(cols) if c not in pivots]

    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        basis[i, list(res.pivots)] = reduced[:, f]
    return basis


def _canonical(matrix, cols):
    if matrix.shape[0] == 0:
        return np.zeros((0, cols), dtype=np.uint8)
    res = rref_rank(matrix)
    return res.matrix[: res.rank]


def bits_to_int(row):
    """Integer with bit :code:`j` equal to :code:`row[j]`."""
    return int(sum(1 << j for j in np.flatnonzero(row)))


@dataclass(frozen=True, eq=False)
class BinaryCode:
    """Binary linear code.

    Build with :meth:`from_generator` or :meth:`from_parity_check`; both store
    canonical forms so two codes are equal exactly when their generator
    matrices coincide.

    args:
        n (int): Length.
        G (2D np.ndarray): Generator matrix in reduced row echelon form.
        H_bits (2D np.ndarray): Parity-check matrix in reduced row echelon form.

    """

    n: int
    G: np.ndarray
    H_bits: np.ndarray

    @property
    def k(self):
        return self.G.shape[0]

    @classmethod
    def from_generator(cls, G, n=None):
        G = as_bit_matrix(G) if np.asarray(G).size else np.zeros((0, n), dtype=np.uint8)
        n = G.shape[1] if n is None else n
        G = _canonical(G, n)
        H = _canonical(null_space(G), n) if G.shape[0] else np.eye(n, dtype=np.uint8)
        return cls(n, G, H)

    @classmethod
    def from_parity_check(cls, H, n=None):
        H = as_bit_matrix(H) if np.asarray(H).size else np.zeros((0, n), dtype=np.uint8)
        n = H.shape[1] if n is None else n
        H = _canonical(H, n)
        G = _canonical(null_space(H), n) if H.shape[0] else np.eye(n, dtype=np.uint8)
        return cls(n, G, H)

    @classmethod
    def zero(cls, n):
        return cls(n, np.zeros((0, n), dtype=np.uint8), np.eye(n, dtype=np.uint8))

    def contains(self, vector):
        v = np.asarray(vector, dtype=np.uint8).reshape(-1)
        if v.size != self.n:
            raise LengthMismatchError(
                "Vector of length {} tested against a code of length {}.".format(
                    v.size, self.n
                )
            )
        return not np.any((self.H_bits.astype(np.int64) @ v) % 2)

    def __eq__(self, other):
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.G, other.G)

    __hash__ = None

    def generator_hex(self):
        return [hex(bits_to_int(row)) for row in self.G]

    def describe(self):
        return {"n": self.n, "k": self.k, "G": self.generator_hex()}

    def __repr__(self):
        return "BinaryCode(n={}, k={})".format(self.n, self.k)


def code_ops(op, *operands):
    """Membership, equality and intersection of binary codes.

    args:
        op (str): :code:`membership` with :code:`(code, vector)`,
            :code:`equality` or :code:`intersection` with two codes.

    Raises:
        LengthMismatchError: Codes or vector of different lengths.
        ValueError: Unknown operation.

    """
    if op == "membership":
        code, vector = operands
        return code.contains(vector)

    if op not in ("equality", "intersection"):
        raise ValueError("Unknown code operation '{}'.".format(op))

    first, second = operands
    if first.n != second.n:
        raise LengthMismatchError(
            "Codes of lengths {} and {} cannot be compared.".format(first.n, second.n)
        )

    if op == "equality":
        return first == second

    stacked = np.concatenate([first.H_bits, second.H_bits], axis=0)
    return BinaryCode.from_parity_check(stacked, n=first.n)


def expand_to_bits(matrix):
    """Replace each entry of an :math:`r \\times n` matrix over
    :math:`GF(2^m)` by its coordinate column (low bit first).

    args:
        matrix (2D galois.FieldArray): Matrix over one binary extension field.

    returns:
        2D np.ndarray: :code:`uint8` matrix of shape :code:`(r*m, n)`.

    Raises:
        FieldMismatchError: Input is not a field array.

    """
    if not isinstance(matrix, galois.FieldArray):
        raise FieldMismatchError("Bit expansion needs a galois field array.")
    m = type(matrix).degree
    ints = matrix.view(np.ndarray).astype(np.int64)
    rows, cols = ints.shape
    bits = (ints[:, None, :] >> np.arange(m)[None, :, None]) & 1
    return bits.reshape(rows * m, cols).astype(np.uint8)
