#
# Copyright (C) 2026, afalab developers (see AUTHORS.txt).
#
# This file is part of afalab.
#
# Afalab is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Afalab is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with afalab.  If not, see <http://www.gnu.org/licenses/>.
#
"""
Scalars, dense matrices and vectors for afalab.

Every value carries one of two scalar modes. In RATIONAL mode entries are
fractions.Fraction instances held in numpy object arrays, and no operation
ever rounds. In FLOAT mode entries are IEEE doubles held in float64 arrays
and comparisons are made within a tolerance. Values of different modes are
never combined; doing so raises ScalarModeError.
"""
from __future__ import print_function
from __future__ import division

import math
import numbers
import functools
from fractions import Fraction

import numpy as np

from .exceptions import ScalarModeError
from .exceptions import DimensionError

RATIONAL = "rational"
FLOAT = "float"
SCALAR_MODES = (RATIONAL, FLOAT)

DEFAULT_TOLERANCE = 1e-9

# Matrix classes, strongest first.
STOCHASTIC = "stochastic"
AFFINE = "affine"
ORTHOGONAL = "orthogonal"
GENERAL = "general"
MATRIX_CLASSES = (STOCHASTIC, AFFINE, ORTHOGONAL, GENERAL)


def check_mode(mode):
    """
    Ensures that the specified scalar mode is one we know about.
    """
    if mode not in SCALAR_MODES:
        raise ScalarModeError("unknown scalar mode '{0}'".format(mode))
    return mode


def make_scalar(value, mode):
    """
    Returns the specified value converted to a scalar of the specified mode.
    Rational scalars may be given as integers, Fractions or strings of the
    form "num/den"; floats are only accepted in rational mode when they are
    integral, since anything else would silently pick up binary rounding.
    """
    check_mode(mode)
    if isinstance(value, bool):
        raise ScalarModeError("booleans are not scalars")
    if mode == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, numbers.Integral):
            return Fraction(int(value))
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise ScalarModeError(
                    "'{0}' is not a rational number".format(value))
        if isinstance(value, numbers.Real) and float(value).is_integer():
            return Fraction(int(value))
        raise ScalarModeError(
            "{0!r} cannot be represented exactly as a rational".format(value))
    if isinstance(value, str):
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError):
            raise ScalarModeError("'{0}' is not a number".format(value))
    if isinstance(value, numbers.Real):
        return float(value)
    raise ScalarModeError("{0!r} is not a real number".format(value))


def scalar_mode(value):
    """
    Returns the mode of the specified scalar value.
    """
    if isinstance(value, (Fraction, numbers.Integral)) and \
            not isinstance(value, bool):
        return RATIONAL
    if isinstance(value, numbers.Real):
        return FLOAT
    raise ScalarModeError("{0!r} is not a scalar".format(value))


def format_scalar(value):
    """
    Formats the specified scalar for output. Rationals always include their
    denominator (so one is written 1/1); floats are written with 12
    significant digits.
    """
    if scalar_mode(value) == RATIONAL:
        f = Fraction(value)
        return "{0}/{1}".format(f.numerator, f.denominator)
    return format(float(value), ".12g")


def scalars_equal(x, y, tol=DEFAULT_TOLERANCE):
    """
    Returns True if the specified scalars are equal: exactly for two
    rationals, within tol otherwise.
    """
    if scalar_mode(x) == RATIONAL and scalar_mode(y) == RATIONAL:
        return x == y
    return abs(float(x) - float(y)) <= tol


def _check_same_mode(*values):
    modes = set(v.get_mode() for v in values)
    if len(modes) != 1:
        raise ScalarModeError(
            "mixed scalar modes: {0}".format(", ".join(sorted(modes))))
    return modes.pop()


def _filled(shape, value, mode):
    if mode == RATIONAL:
        return np.full(shape, Fraction(value), dtype=object)
    return np.full(shape, float(value), dtype=np.float64)


def _freeze(array):
    array.flags.writeable = False
    return array


class Matrix(object):
    """
    An immutable dense matrix of scalars sharing one mode. Applied to
    configuration columns, entry (i, j) is the weight of the transition from
    state j to state i.
    """
    def __init__(self, rows, mode=RATIONAL):
        check_mode(mode)
        rows = [list(r) for r in rows]
        if len(rows) == 0:
            raise DimensionError("matrices must have at least one row")
        num_cols = len(rows[0])
        if num_cols == 0:
            raise DimensionError("matrices must have at least one column")
        for r in rows:
            if len(r) != num_cols:
                raise DimensionError("ragged matrix rows")
        dtype = object if mode == RATIONAL else np.float64
        a = np.empty((len(rows), num_cols), dtype=dtype)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                a[i, j] = make_scalar(v, mode)
        self.__array = _freeze(a)
        self.__mode = mode

    @classmethod
    def from_array(cls, array, mode):
        """
        Returns a new Matrix wrapping a copy of the specified 2D numpy array,
        whose entries must already be scalars of the specified mode.
        """
        check_mode(mode)
        array = np.array(array, dtype=object if mode == RATIONAL else
                np.float64)
        if array.ndim != 2:
            raise DimensionError("expected a two dimensional array")
        m = cls.__new__(cls)
        m.__array = _freeze(array)
        m.__mode = mode
        return m

    @classmethod
    def identity(cls, n, mode=RATIONAL):
        """
        Returns the n x n identity matrix.
        """
        a = _filled((n, n), 0, mode)
        for j in range(n):
            a[j, j] = make_scalar(1, mode)
        return cls.from_array(a, mode)

    @classmethod
    def zeros(cls, num_rows, num_cols, mode=RATIONAL):
        """
        Returns a num_rows x num_cols zero matrix.
        """
        return cls.from_array(_filled((num_rows, num_cols), 0, mode), mode)

    def __repr__(self):
        return "Matrix({0}, mode={1!r})".format(self.rows(), self.__mode)

    def __str__(self):
        return "\n".join(" ".join(format_scalar(x) for x in row)
                for row in self.rows())

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.__mode == other.get_mode() and
                self.get_shape() == other.get_shape() and
                bool(np.all(self.__array == other.get_array())))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __add__(self, other):
        _check_same_mode(self, other)
        if self.get_shape() != other.get_shape():
            raise DimensionError("cannot add {0} and {1} matrices".format(
                self.get_shape(), other.get_shape()))
        return Matrix.from_array(self.__array + other.get_array(),
                self.__mode)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix.from_array(-self.__array, self.__mode)

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return matvec(self, other)
        return matmul(self, other)

    def get_mode(self):
        """
        Returns the scalar mode of this matrix.
        """
        return self.__mode

    def get_array(self):
        """
        Returns the read-only numpy array holding the entries.
        """
        return self.__array

    def get_shape(self):
        """
        Returns the tuple (rows, cols).
        """
        return self.__array.shape

    def get_num_rows(self):
        return self.__array.shape[0]

    def get_num_cols(self):
        return self.__array.shape[1]

    def is_square(self):
        return self.__array.shape[0] == self.__array.shape[1]

    def get_entry(self, i, j):
        """
        Returns the entry at row i and column j.
        """
        return self.__array[i, j]

    def rows(self):
        """
        Returns the entries as a list of lists, row-major.
        """
        return [list(row) for row in self.__array]

    def transpose(self):
        return Matrix.from_array(self.__array.T, self.__mode)

    def scale(self, c):
        """
        Returns this matrix multiplied by the scalar c.
        """
        c = make_scalar(c, self.__mode)
        return Matrix.from_array(self.__array * c, self.__mode)

    def to_mode(self, mode):
        """
        Returns a copy of this matrix in the specified scalar mode. Float to
        rational conversion only succeeds for integral entries.
        """
        return Matrix(self.rows(), mode)


class Vector(object):
    """
    An immutable column vector of scalars sharing one mode.
    """
    def __init__(self, entries, mode=RATIONAL):
        check_mode(mode)
        entries = list(entries)
        if len(entries) == 0:
            raise DimensionError("vectors must have at least one entry")
        dtype = object if mode == RATIONAL else np.float64
        a = np.empty(len(entries), dtype=dtype)
        for j, v in enumerate(entries):
            a[j] = make_scalar(v, mode)
        self.__array = _freeze(a)
        self.__mode = mode

    @classmethod
    def from_array(cls, array, mode):
        """
        Returns a new Vector wrapping a copy of the specified 1D array.
        """
        check_mode(mode)
        array = np.array(array, dtype=object if mode == RATIONAL else
                np.float64)
        if array.ndim != 1:
            raise DimensionError("expected a one dimensional array")
        v = cls.__new__(cls)
        v.__array = _freeze(array)
        v.__mode = mode
        return v

    @classmethod
    def basis(cls, n, index, mode=RATIONAL):
        """
        Returns the standard basis vector e_index of dimension n.
        """
        if not 0 <= index < n:
            raise DimensionError("basis index {0} out of range for "
                    "dimension {1}".format(index, n))
        a = _filled(n, 0, mode)
        a[index] = make_scalar(1, mode)
        return cls.from_array(a, mode)

    def __repr__(self):
        return "Vector({0}, mode={1!r})".format(list(self.__array),
                self.__mode)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return (self.__mode == other.get_mode() and
                self.get_dim() == other.get_dim() and
                bool(np.all(self.__array == other.get_array())))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __len__(self):
        return self.__array.shape[0]

    def __iter__(self):
        return iter(self.__array)

    def __getitem__(self, index):
        return self.__array[index]

    def get_mode(self):
        return self.__mode

    def get_array(self):
        return self.__array

    def get_dim(self):
        return self.__array.shape[0]

    def entries(self):
        """
        Returns the entries of this vector as a list.
        """
        return list(self.__array)

    def entry_sum(self):
        """
        Returns the sum of the entries of this vector.
        """
        return self.__array.sum()


def matvec(M, v):
    """
    Returns the product M v.
    """
    _check_same_mode(M, v)
    if M.get_num_cols() != v.get_dim():
        raise DimensionError("cannot apply a {0}x{1} matrix to a vector of "
                "dimension {2}".format(M.get_num_rows(), M.get_num_cols(),
                    v.get_dim()))
    return Vector.from_array(M.get_array().dot(v.get_array()), M.get_mode())


def matmul(A, B):
    """
    Returns the matrix product A B.
    """
    mode = _check_same_mode(A, B)
    if A.get_num_cols() != B.get_num_rows():
        raise DimensionError("cannot multiply {0} by {1} matrices".format(
            A.get_shape(), B.get_shape()))
    return Matrix.from_array(A.get_array().dot(B.get_array()), mode)


def kronecker(A, B):
    """
    Returns the Kronecker product of A and B. Entry ((i1, i2), (j1, j2)) is
    A[i1, j1] B[i2, j2], with pairs flattened row-major, so that the pair
    (i1, i2) sits at index i1 * rows(B) + i2.
    """
    mode = _check_same_mode(A, B)
    return Matrix.from_array(np.kron(A.get_array(), B.get_array()), mode)


def kronecker_vector(u, v):
    """
    Returns the tensor product of two vectors, flattened row-major.
    """
    mode = _check_same_mode(u, v)
    return Vector.from_array(np.kron(u.get_array(), v.get_array()), mode)


def kronecker_power(M, t):
    """
    Returns the t-fold Kronecker power of M, for t >= 1.
    """
    if t < 1:
        raise ValueError("Kronecker powers are defined for t >= 1")
    return functools.reduce(kronecker, [M] * t)


def column_sums(M):
    """
    Returns the vector of column sums of M.
    """
    return Vector.from_array(M.get_array().sum(axis=0), M.get_mode())


def l1_norm(v):
    """
    Returns the l1-norm of v, the sum of the absolute values of its entries.
    """
    return np.abs(v.get_array()).sum()


def affine_extension(M):
    """
    Returns the (n + 1) x (n + 1) matrix [[M, 0], [c, 1]] where the row c
    makes every column sum equal to 1. Whatever M is, the result is affine,
    and it maps (x, 1 - sum(x)) to (M x, 1 - sum(M x)).
    """
    mode = M.get_mode()
    n, k = M.get_shape()
    if n != k:
        raise DimensionError("affine extension needs a square matrix")
    a = _filled((n + 1, n + 1), 0, mode)
    a[:n, :n] = M.get_array()
    one = make_scalar(1, mode)
    a[n, :n] = one - M.get_array().sum(axis=0)
    a[n, n] = one
    return Matrix.from_array(a, mode)


def denominator_lcm(matrices):
    """
    Returns the least common multiple of the denominators of all entries of
    the specified rational matrices.
    """
    d = 1
    for M in matrices:
        if M.get_mode() != RATIONAL:
            raise ScalarModeError("denominators need rational matrices")
        for x in M.get_array().flat:
            q = Fraction(x).denominator
            d = d * q // math.gcd(d, q)
    return d


def is_integral(M):
    """
    Returns True if every entry of the rational matrix M is an integer.
    """
    if M.get_mode() != RATIONAL:
        return False
    return all(Fraction(x).denominator == 1 for x in M.get_array().flat)


def _close(a, b, mode, tol):
    if mode == RATIONAL:
        return bool(np.all(a == b))
    return bool(np.all(np.abs(a - b) <= tol))


def matrix_properties(M, tol=DEFAULT_TOLERANCE):
    """
    Returns the set of matrix classes that hold for the square matrix M.
    GENERAL is always a member. Comparisons are exact in rational mode and
    within tol in float mode.
    """
    if not M.is_square():
        raise DimensionError("matrix classes are defined for square matrices")
    mode = M.get_mode()
    a = M.get_array()
    n = M.get_num_rows()
    props = set([GENERAL])
    ones = _filled(n, 1, mode)
    if _close(a.sum(axis=0), ones, mode, tol):
        props.add(AFFINE)
        if mode == RATIONAL:
            nonnegative = all(x >= 0 for x in a.flat)
        else:
            nonnegative = bool(np.all(a >= -tol))
        if nonnegative:
            props.add(STOCHASTIC)
    if _close(a.T.dot(a), Matrix.identity(n, mode).get_array(), mode, tol):
        props.add(ORTHOGONAL)
    return props


def classify_matrix(M, tol=DEFAULT_TOLERANCE):
    """
    Returns the strongest class that holds for the square matrix M, in the
    order STOCHASTIC, AFFINE, ORTHOGONAL, GENERAL.
    """
    props = matrix_properties(M, tol)
    for c in MATRIX_CLASSES:
        if c in props:
            return c


class ComplexMatrix(object):
    """
    A complex matrix held as a pair of real matrices of the same mode and
    shape, so that rational complex arithmetic stays exact.
    """
    def __init__(self, real, imag=None):
        if imag is None:
            imag = Matrix.zeros(real.get_num_rows(), real.get_num_cols(),
                    real.get_mode())
        _check_same_mode(real, imag)
        if real.get_shape() != imag.get_shape():
            raise DimensionError("real and imaginary parts differ in shape")
        self.__real = real
        self.__imag = imag

    @classmethod
    def from_pairs(cls, rows, mode):
        """
        Returns a ComplexMatrix from rows of [re, im] pairs.
        """
        try:
            real = Matrix([[e[0] for e in row] for row in rows], mode)
            imag = Matrix([[e[1] for e in row] for row in rows], mode)
        except (TypeError, IndexError):
            raise DimensionError("complex entries must be [re, im] pairs")
        return cls(real, imag)

    @classmethod
    def zeros(cls, n, mode):
        return cls(Matrix.zeros(n, n, mode))

    @classmethod
    def unit(cls, n, i, j, mode):
        """
        Returns the n x n matrix with a single 1 at (i, j).
        """
        a = _filled((n, n), 0, mode)
        a[i, j] = make_scalar(1, mode)
        return cls(Matrix.from_array(a, mode))

    def __repr__(self):
        return "ComplexMatrix({0!r}, {1!r})".format(self.__real, self.__imag)

    def __add__(self, other):
        return ComplexMatrix(self.__real + other.get_real(),
                self.__imag + other.get_imag())

    def __sub__(self, other):
        return ComplexMatrix(self.__real - other.get_real(),
                self.__imag - other.get_imag())

    def __matmul__(self, other):
        a, b = self.__real, self.__imag
        c, d = other.get_real(), other.get_imag()
        return ComplexMatrix(matmul(a, c) - matmul(b, d),
                matmul(a, d) + matmul(b, c))

    def get_real(self):
        return self.__real

    def get_imag(self):
        return self.__imag

    def get_mode(self):
        return self.__real.get_mode()

    def get_shape(self):
        return self.__real.get_shape()

    def get_entry(self, i, j):
        """
        Returns the (re, im) pair at row i and column j.
        """
        return self.__real.get_entry(i, j), self.__imag.get_entry(i, j)

    def pairs(self):
        """
        Returns the entries as rows of [re, im] pairs.
        """
        return [[[re, im] for re, im in zip(r1, r2)]
                for r1, r2 in zip(self.__real.rows(), self.__imag.rows())]

    def conjugate_transpose(self):
        return ComplexMatrix(self.__real.transpose(),
                -self.__imag.transpose())

    def scale(self, c):
        return ComplexMatrix(self.__real.scale(c), self.__imag.scale(c))

    def trace(self):
        """
        Returns the trace as a (re, im) pair.
        """
        return (np.trace(self.__real.get_array()),
                np.trace(self.__imag.get_array()))

    def is_identity(self, tol=DEFAULT_TOLERANCE):
        """
        Returns True if this matrix is the identity, exactly in rational mode
        and within tol in float mode.
        """
        mode = self.get_mode()
        n, k = self.get_shape()
        if n != k:
            return False
        eye = Matrix.identity(n, mode).get_array()
        zero = Matrix.zeros(n, n, mode).get_array()
        return (_close(self.__real.get_array(), eye, mode, tol) and
                _close(self.__imag.get_array(), zero, mode, tol))
