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
Simulations between the automaton models. Every construction returns a
new machine built through the validating constructors of
afalab.automata, so the result is checked against the invariants of its
model before it is handed back.
"""
from __future__ import print_function
from __future__ import division

import functools
import logging
from fractions import Fraction

import numpy as np

from . import linalg
from . import automata
from .linalg import Matrix
from .linalg import Vector
from .linalg import ComplexMatrix
from .linalg import RATIONAL
from .automata import Afa
from .automata import Pfa
from .automata import Mcqfa
from .automata import Qfa
from .automata import Gfa
from .automata import LEFT_END
from .automata import RIGHT_END
from .exceptions import ConversionError
from .exceptions import PreconditionError

logger = logging.getLogger(__name__)

# Upper bound on the number of states amplify will build.
DEFAULT_MAX_STATES = 4096


def _require_rational(machine, what):
    if machine.get_mode() != RATIONAL:
        raise PreconditionError(
            "{0} needs a rational machine; this one is {1}".format(
                what, machine.get_mode()))


def _pad(M, k):
    """
    Returns the block diagonal matrix diag(M, I_k).
    """
    mode = M.get_mode()
    n = M.get_num_rows()
    a = Matrix.zeros(n + k, n + k, mode).get_array().copy()
    a[:n, :n] = M.get_array()
    for j in range(n, n + k):
        a[j, j] = linalg.make_scalar(1, mode)
    return Matrix.from_array(a, mode)


def _permute(M, perm):
    a = M.get_array()
    return Matrix.from_array(a[np.ix_(perm, perm)], M.get_mode())


def _collapse_matrix(n, accept, mode):
    """
    Returns the 0/1 stochastic matrix sending every accept state to state 0
    and every other state to state 1.
    """
    a = Matrix.zeros(n, n, mode).get_array().copy()
    one = linalg.make_scalar(1, mode)
    for j in range(n):
        a[0 if j in accept else 1, j] = one
    return Matrix.from_array(a, mode)


def canonicalize_pfa(P):
    """
    Returns a Pfa equivalent to P whose start state is 0 and whose final
    configuration on every word is (f_P(w), 1 - f_P(w), 0, ..., 0). One
    state machines are padded to two states.
    """
    if not isinstance(P, Pfa):
        raise PreconditionError("canonicalize_pfa needs a pfa")
    _require_rational(P, "canonicalize_pfa")
    transitions = P.get_transitions()
    n = P.get_num_states()
    if n == 1:
        transitions = dict((s, _pad(M, 1)) for s, M in transitions.items())
        n = 2
    s = P.get_start()
    perm = list(range(n))
    perm[0], perm[s] = perm[s], perm[0]
    transitions = dict((sym, _permute(M, perm))
            for sym, M in transitions.items())
    accept = set(perm.index(j) for j in P.get_accept())
    collapse = _collapse_matrix(n, accept, RATIONAL)
    transitions[RIGHT_END] = linalg.matmul(collapse, transitions[RIGHT_END])
    return Pfa(P.get_alphabet(), transitions, 0, [0], RATIONAL,
            P.get_metadata())


def shift_cutpoint(P, cutpoint):
    """
    Returns a Pfa P' with f_P'(w) > 1/2 exactly when f_P(w) > cutpoint, and
    f_P'(w) = 1/2 exactly when f_P(w) = cutpoint. P' branches on the left
    end-marker: with probability alpha it runs P and otherwise it moves to
    a gadget state that accepts with constant value beta, so that
    f_P' = alpha f_P + (1 - alpha) beta.
    """
    if not isinstance(P, Pfa):
        raise PreconditionError("shift_cutpoint needs a pfa")
    _require_rational(P, "shift_cutpoint")
    lam = linalg.make_scalar(cutpoint, RATIONAL)
    if not 0 < lam < 1:
        raise PreconditionError(
            "cutpoint must lie strictly between 0 and 1, not {0}".format(
                linalg.format_scalar(lam)))
    half = Fraction(1, 2)
    if lam == half:
        return P
    if lam < half:
        alpha, beta = 1 / (2 * (1 - lam)), 1
    else:
        alpha, beta = 1 / (2 * lam), 0
    n = P.get_num_states()
    transitions = dict((s, _pad(M, 1))
            for s, M in P.get_transitions().items())
    a = np.zeros((n + 1, n + 1), dtype=object)
    a[:, :] = Fraction(0)
    a[:n, :n] = P.get_transition(LEFT_END).get_array() * alpha
    a[n, :n] = 1 - alpha
    a[n, n] = Fraction(1)
    transitions[LEFT_END] = Matrix.from_array(a, RATIONAL)
    accept = P.get_accept() + ([n] if beta == 1 else [])
    logger.debug("shift_cutpoint: lambda=%s alpha=%s beta=%d",
            lam, alpha, beta)
    return Pfa(P.get_alphabet(), transitions, P.get_start(), accept,
            RATIONAL, P.get_metadata())


class DenominatorClearing(object):
    """
    The smallest positive integer d such that d A is an integer matrix for
    every transition A of a rational machine, end-markers included.
    """
    def __init__(self, d):
        if not isinstance(d, int) or d < 1:
            raise ValueError("scaling factor must be a positive integer")
        self.__d = d

    def __repr__(self):
        return "DenominatorClearing({0})".format(self.__d)

    def __eq__(self, other):
        return isinstance(other, DenominatorClearing) and \
                self.__d == other.get_d()

    def __hash__(self):
        return hash(self.__d)

    def get_d(self):
        return self.__d

    def apply(self, M):
        """
        Returns d M, raising ValueError unless it is an integer matrix.
        """
        scaled = M.scale(self.__d)
        if not linalg.is_integral(scaled):
            raise ValueError("{0!r} leaves fractional entries in {1!r}".format(
                self, M))
        return scaled


def denominator_clearing(machine):
    """
    Returns the DenominatorClearing of the transitions of the specified
    rational machine.
    """
    _require_rational(machine, "denominator_clearing")
    return DenominatorClearing(linalg.denominator_lcm(
        machine.get_transitions().values()))


def _subtract_collect(n):
    """
    Returns the (n + 1) x (n + 1) matrix with first row (1, -1, 0, ..., 0),
    second row (0, 2, 1, ..., 1) and zeros elsewhere. Applied to
    (X + Y, ..., 1 - ...) with the first two entries X and Y it leaves the
    difference X - Y in the first entry.
    """
    a = Matrix.zeros(n + 1, n + 1, RATIONAL).get_array().copy()
    a[0, 0] = Fraction(1)
    a[0, 1] = Fraction(-1)
    a[1, 1] = Fraction(2)
    for j in range(2, n + 1):
        a[1, j] = Fraction(1)
    return Matrix.from_array(a, RATIONAL)


def pfa_to_afa(P):
    """
    Returns an (n + 1)-state integer Afa M with f_P(w) > 1/2 exactly when
    f_M(w) > 1/2, and f_P(w) = 1/2 exactly when f_M(w) = 0. On every word
    the final configuration of M is (X, 1 - X, 0, ..., 0) where
    X = d^k (2 f_P(w) - 1) is an integer, k is the length of the tape and d
    is the DenominatorClearing of P; so every word with f_P(w) != 1/2 gets
    a value of at least 1/3.
    """
    if not isinstance(P, Pfa):
        raise PreconditionError("pfa_to_afa needs a pfa")
    _require_rational(P, "pfa_to_afa")
    C = canonicalize_pfa(P)
    n = C.get_num_states()
    clearing = denominator_clearing(C)
    transitions = {}
    for symbol, M in C.get_transitions().items():
        transitions[symbol] = linalg.affine_extension(clearing.apply(M))
    transitions[RIGHT_END] = linalg.matmul(_subtract_collect(n),
            transitions[RIGHT_END])
    metadata = P.get_metadata()
    metadata.update({"construction": "pfa_to_afa",
        "base_states": P.get_num_states(), "scale": clearing.get_d()})
    logger.info("pfa_to_afa: %d -> %d states, d = %d", P.get_num_states(),
            n + 1, clearing.get_d())
    return Afa(C.get_alphabet(), transitions, 0, [0], RATIONAL, metadata)


def amplify(M, t, max_states=DEFAULT_MAX_STATES):
    """
    Returns the Afa running t copies of M in parallel and accepting when
    at least one copy accepts, so that f(w) = 1 - (1 - f_M(w))^t. The
    machine has n^t states; a PreconditionError is raised if that exceeds
    max_states.
    """
    if not isinstance(M, Afa):
        raise PreconditionError("amplify needs an afa")
    if not isinstance(t, int) or t < 1:
        raise PreconditionError(
            "the number of copies must be a positive integer")
    n = M.get_num_states()
    num_states = n ** t
    if num_states > max_states:
        raise PreconditionError(
            "{0} copies of a {1}-state machine need {2} states, more than "
            "the limit of {3}".format(t, n, num_states, max_states))
    transitions = dict((s, linalg.kronecker_power(A, t))
            for s, A in M.get_transitions().items())
    # The copies start together, in the tensor power of the initial
    # configuration.
    initial = functools.reduce(linalg.kronecker_vector,
            [M.initial_configuration()] * t)
    start = _basis_index(initial)
    base_accept = set(M.get_accept())
    accept = []
    for index in range(num_states):
        j, hit = index, False
        for _ in range(t):
            hit = hit or (j % n) in base_accept
            j //= n
        if hit:
            accept.append(index)
    metadata = {"construction": "amplify", "copies": t, "base_states": n}
    logger.info("amplify: %d copies of %d states -> %d states", t, n,
            num_states)
    return Afa(M.get_alphabet(), transitions, start, accept, M.get_mode(),
            metadata)


def mcqfa_to_afa(M):
    """
    Returns the (n^2 + 1)-state Afa with the same value as the Mcqfa M on
    every word. Each transition U is replaced by the affine extension of
    U (x) U, which evolves the tensor square of the amplitude vector; the
    right end-marker then collects the diagonal accept entries (j, j),
    whose sum is f_M(w), into state 0 and everything else into state 1.
    """
    if not isinstance(M, Mcqfa):
        raise PreconditionError("mcqfa_to_afa needs an mcqfa")
    mode = M.get_mode()
    n = M.get_num_states()
    size = n * n + 1
    transitions = dict((s, linalg.affine_extension(linalg.kronecker(U, U)))
            for s, U in M.get_transitions().items())
    diagonal = set(j * n + j for j in M.get_accept())
    a = Matrix.zeros(size, size, mode).get_array().copy()
    one = linalg.make_scalar(1, mode)
    for j in range(size):
        a[0 if j in diagonal else 1, j] = one
    collect = Matrix.from_array(a, mode)
    transitions[RIGHT_END] = linalg.matmul(collect, transitions[RIGHT_END])
    start = M.get_start() * n + M.get_start()
    metadata = {"construction": "mcqfa_to_afa", "base_states": n}
    logger.info("mcqfa_to_afa: %d -> %d states", n, size)
    return Afa(M.get_alphabet(), transitions, start, [0], mode, metadata)


def hermitian_basis(n, mode=RATIONAL):
    """
    Returns a list of n^2 Hermitian ComplexMatrix objects spanning the
    Hermitian n x n matrices over the reals: the diagonal units E_ii, then
    for each i < j the pair E_ij + E_ji and i(E_ij - E_ji). The basis is
    orthogonal but not normalised, which keeps it rational.
    """
    basis = [ComplexMatrix.unit(n, i, i, mode) for i in range(n)]
    zero = Matrix.zeros(n, n, mode)
    for i in range(n):
        for j in range(i + 1, n):
            Eij = ComplexMatrix.unit(n, i, j, mode)
            Eji = ComplexMatrix.unit(n, j, i, mode)
            basis.append(Eij + Eji)
            basis.append(ComplexMatrix(zero,
                (Eij - Eji).get_real()))
    return basis


def hermitian_coordinates(X):
    """
    Returns the coordinates of the Hermitian ComplexMatrix X in the basis
    of hermitian_basis, as a list of real scalars.
    """
    n = X.get_shape()[0]
    re = X.get_real().get_array()
    im = X.get_imag().get_array()
    coords = [re[i, i] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            coords.append((re[i, j] + re[j, i]) / 2)
            coords.append((im[i, j] - im[j, i]) / 2)
    return coords


def qfa_to_gfa(Q):
    """
    Returns the n^2-state Gfa with the same value as the Qfa Q on every
    word. Density matrices are written in the real coordinates of
    hermitian_basis, where each superoperator becomes a real matrix whose
    column b holds the coordinates of the image of basis element b. The
    result is exact when the Kraus operators are rational.
    """
    if not isinstance(Q, Qfa):
        raise PreconditionError("qfa_to_gfa needs a qfa")
    mode = Q.get_mode()
    n = Q.get_num_states()
    basis = hermitian_basis(n, mode)
    transitions = {}
    for symbol in Q.get_symbols():
        columns = [hermitian_coordinates(Q.apply_channel(symbol, B))
                for B in basis]
        transitions[symbol] = Matrix(list(zip(*columns)), mode)
    size = n * n
    initial = Vector.basis(size, Q.get_start(), mode)
    final = [0] * size
    for j in Q.get_accept():
        final[j] = 1
    metadata = {"construction": "qfa_to_gfa", "base_states": n}
    logger.info("qfa_to_gfa: %d -> %d states", n, size)
    return Gfa(Q.get_alphabet(), transitions, initial, Vector(final, mode),
            mode, metadata)


def _basis_index(v):
    """
    Returns the index s if v is the basis vector e_s, and None otherwise.
    """
    a = v.get_array()
    ones = [j for j, x in enumerate(a) if x == 1]
    if len(ones) == 1 and all(x == 0 for j, x in enumerate(a)
            if j != ones[0]):
        return ones[0]
    return None


def gfa_to_afa(G):
    """
    Returns the (n + 1)-state Afa M with f_M(w) = f_G(w) whenever
    f_G(w) lies in [0, 1]. Each transition gets the affine extension, and
    the right end-marker additionally applies a collector whose first row
    is the final functional and whose second row is its complement. An
    initial vector that is not a basis vector is loaded by the left
    end-marker.
    """
    if not isinstance(G, Gfa):
        raise PreconditionError("gfa_to_afa needs a gfa")
    mode = G.get_mode()
    n = G.get_num_states()
    one = linalg.make_scalar(1, mode)
    transitions = dict((s, linalg.affine_extension(T))
            for s, T in G.get_transitions().items())
    initial = G.get_initial_vector()
    start = _basis_index(initial)
    if start is None:
        start = 0
        load = Matrix.identity(n + 1, mode).get_array().copy()
        load[:n, 0] = initial.get_array()
        load[n, 0] = one - initial.entry_sum()
        transitions[LEFT_END] = linalg.matmul(transitions[LEFT_END],
                Matrix.from_array(load, mode))
    final = G.get_final_functional().get_array()
    a = Matrix.zeros(n + 1, n + 1, mode).get_array().copy()
    a[0, :n] = final
    a[1, :n] = one - final
    a[1, n] = one
    collect = Matrix.from_array(a, mode)
    transitions[RIGHT_END] = linalg.matmul(collect, transitions[RIGHT_END])
    metadata = {"construction": "gfa_to_afa", "base_states": n}
    logger.info("gfa_to_afa: %d -> %d states", n, n + 1)
    return Afa(G.get_alphabet(), transitions, start, [0], mode, metadata)


def qfa_to_afa(Q):
    """
    Returns the (n^2 + 1)-state Afa with the same value as the Qfa Q.
    """
    return gfa_to_afa(qfa_to_gfa(Q))


def convert_to_afa(machine):
    """
    Returns the Afa simulating the specified machine, choosing the
    construction by the model of the machine.
    """
    converters = {
        automata.PFA: pfa_to_afa,
        automata.MCQFA: mcqfa_to_afa,
        automata.QFA: qfa_to_afa,
        automata.GFA: gfa_to_afa,
    }
    model = getattr(machine, "model", None)
    if model not in converters:
        raise ConversionError(
            "no conversion from {0} to afa".format(model))
    return converters[model](machine)
