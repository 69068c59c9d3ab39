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
Exceptions raised by afalab. Every error is a ValueError so that callers
which only care about bad input can catch that.
"""


class AfalabError(ValueError):
    """
    Superclass of all afalab errors.
    """


class ScalarModeError(AfalabError):
    """
    Raised when values of different scalar modes are combined, or when a
    value cannot be represented in the requested mode.
    """


class DimensionError(AfalabError):
    """
    Raised when matrix and vector dimensions do not agree.
    """


class MachineFormatError(AfalabError):
    """
    Raised when a machine descriptor or machine file violates one of the
    invariants of its model.
    """


class UnknownSymbolError(AfalabError):
    """
    Raised when a word contains a symbol outside the machine alphabet.
    """


class DegenerateMachineError(AfalabError):
    """
    Raised when an affine machine reaches a final vector with zero l1-norm.
    Affine configurations always have l1-norm at least 1, so this signals
    an internal inconsistency rather than a result.
    """


class ConversionError(AfalabError):
    """
    Raised when no conversion exists between the requested models.
    """


class PreconditionError(AfalabError):
    """
    Raised when a construction is applied to a machine outside its domain,
    for example an integer simulation applied to a float machine.
    """


class ClassificationError(AfalabError):
    """
    Raised when the symbolic classification of a unary machine disagrees
    with direct evaluation of the machine.
    """


class CatalogError(AfalabError):
    """
    Raised when a unary language has no representation in the catalog.
    """


class IndefiniteTailError(AfalabError):
    """
    Raised when an operation needs a membership trace with a certified tail.
    """
