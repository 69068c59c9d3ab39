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
Machine descriptors for the five automaton models and their evaluation
semantics.

Every machine reads the tape LEFT_END w_1 ... w_k RIGHT_END, so all
machines carry transitions for both end-markers. Configurations are
column vectors (density matrices for the Qfa model), and transition
entry (i, j) is the weight of moving from state j to state i.
"""
from __future__ import print_function
from __future__ import division

import copy
import enum
import itertools
import json
import logging

from . import linalg
from .linalg import Matrix
from .linalg import Vector
from .linalg import ComplexMatrix
from .linalg import RATIONAL
from .linalg import DEFAULT_TOLERANCE
from .exceptions import MachineFormatError
from .exceptions import UnknownSymbolError
from .exceptions import DegenerateMachineError
from .exceptions import ScalarModeError
from .exceptions import DimensionError
from .exceptions import PreconditionError

logger = logging.getLogger(__name__)

LEFT_END = "^"
RIGHT_END = "$"
END_MARKERS = (LEFT_END, RIGHT_END)

PFA = "pfa"
AFA = "afa"
MCQFA = "mcqfa"
QFA = "qfa"
GFA = "gfa"
MODELS = (PFA, AFA, MCQFA, QFA, GFA)


def tape(word):
    """
    Returns the list of symbols read on the specified word, including both
    end-markers.
    """
    return [LEFT_END] + list(word) + [RIGHT_END]


def words(alphabet, max_len):
    """
    Returns an iterator over all words over the specified alphabet of length
    at most max_len, ordered by length and then lexicographically.
    """
    symbols = sorted(alphabet)
    for k in range(max_len + 1):
        for t in itertools.product(symbols, repeat=k):
            yield "".join(t)


def unary_words(max_len, symbol="a"):
    """
    Returns the list of unary words symbol^0, ..., symbol^max_len.
    """
    return [symbol * j for j in range(max_len + 1)]


class Automaton(object):
    """
    Superclass of all machine models. An automaton has an alphabet of
    single character symbols (not including the end-markers), a number of
    states, a scalar mode and a free-form metadata dictionary which is
    carried through serialisation unchanged.
    """
    model = None

    def __init__(self, alphabet, num_states, mode, metadata):
        try:
            linalg.check_mode(mode)
        except ScalarModeError as e:
            raise MachineFormatError(str(e))
        alphabet = list(alphabet)
        for symbol in alphabet:
            if not isinstance(symbol, str) or len(symbol) != 1:
                raise MachineFormatError(
                    "alphabet symbols must be single characters: "
                    "{0!r}".format(symbol))
            if symbol in END_MARKERS:
                raise MachineFormatError(
                    "end-marker '{0}' cannot be an alphabet symbol".format(
                        symbol))
        if len(set(alphabet)) != len(alphabet):
            raise MachineFormatError("duplicate symbols in alphabet")
        if not isinstance(num_states, int) or num_states < 1:
            raise MachineFormatError("a machine needs at least one state")
        self._alphabet = alphabet
        self._num_states = num_states
        self._mode = mode
        self._metadata = copy.deepcopy(metadata) if metadata else {}

    def __repr__(self):
        return "<{0} states={1} alphabet={2} mode={3}>".format(
            type(self).__name__, self._num_states,
            "".join(self._alphabet), self._mode)

    def get_alphabet(self):
        """
        Returns the alphabet of this machine, without end-markers.
        """
        return list(self._alphabet)

    def get_symbols(self):
        """
        Returns the symbols this machine has transitions for, including
        both end-markers.
        """
        return self._alphabet + list(END_MARKERS)

    def get_num_states(self):
        return self._num_states

    def get_mode(self):
        return self._mode

    def get_metadata(self):
        """
        Returns a copy of the metadata dictionary of this machine.
        """
        return copy.deepcopy(self._metadata)

    def is_unary(self):
        return len(self._alphabet) == 1

    def check_word(self, word):
        """
        Returns the tape for the specified word, raising an
        UnknownSymbolError if it contains symbols not in the alphabet.
        """
        for symbol in word:
            if symbol not in self._alphabet:
                raise UnknownSymbolError(
                    "symbol '{0}' is not in the alphabet '{1}'".format(
                        symbol, "".join(self._alphabet)))
        return tape(word)

    def initial_configuration(self):
        raise NotImplementedError()

    def step(self, symbol, configuration):
        """
        Returns the configuration reached from the specified one by reading
        the specified symbol.
        """
        raise NotImplementedError()

    def value_of(self, configuration):
        """
        Returns the accept value of the specified final configuration.
        """
        raise NotImplementedError()

    def configurations(self, word):
        """
        Returns an iterator over the configurations of this machine on the
        specified word: the initial configuration, then the configuration
        after each symbol of the tape.
        """
        symbols = self.check_word(word)
        c = self.initial_configuration()
        yield c
        for symbol in symbols:
            c = self.step(symbol, c)
            yield c

    def final_configuration(self, word):
        """
        Returns the configuration after reading the right end-marker.
        """
        c = None
        for c in self.configurations(word):
            pass
        return c

    def accept_value(self, word):
        """
        Returns the accept value of this machine on the specified word.
        """
        return self.value_of(self.final_configuration(word))

    def power_values(self, symbol, max_len):
        """
        Returns an iterator over the accept values of the words symbol^j
        for j = 0, ..., max_len, sharing the evolution between words.
        """
        self.check_word(symbol)
        c = self.step(LEFT_END, self.initial_configuration())
        for j in range(max_len + 1):
            yield self.value_of(self.step(RIGHT_END, c))
            if j < max_len:
                c = self.step(symbol, c)

    def _check_symbol_keys(self, keys, what):
        expected = set(self.get_symbols())
        keys = set(keys)
        if keys != expected:
            missing = sorted(expected - keys)
            extra = sorted(keys - expected)
            msg = "{0} must be given for exactly the alphabet and both " \
                    "end-markers".format(what)
            if missing:
                msg += "; missing " + ", ".join(missing)
            if extra:
                msg += "; unexpected " + ", ".join(extra)
            raise MachineFormatError(msg)

    def _check_start_accept(self, start, accept):
        n = self._num_states
        if not isinstance(start, int) or not 0 <= start < n:
            raise MachineFormatError(
                "start state {0!r} is not in 0..{1}".format(start, n - 1))
        accept = sorted(set(accept))
        for j in accept:
            if not isinstance(j, int) or not 0 <= j < n:
                raise MachineFormatError(
                    "accept state {0!r} is not in 0..{1}".format(j, n - 1))
        return start, accept

    def _check_matrix(self, symbol, M):
        n = self._num_states
        if not isinstance(M, Matrix):
            raise MachineFormatError(
                "transition '{0}' is not a matrix".format(symbol))
        if M.get_mode() != self._mode:
            raise MachineFormatError(
                "transition '{0}' has scalar mode {1} in a {2} machine".format(
                    symbol, M.get_mode(), self._mode))
        if M.get_shape() != (n, n):
            raise MachineFormatError(
                "transition '{0}' must be {1}x{1}, not {2}x{3}".format(
                    symbol, n, *M.get_shape()))


class MatrixAutomaton(Automaton):
    """
    Superclass of the models whose configurations are vectors evolved by one
    matrix per symbol from a start basis vector. Subclasses set
    required_class to the matrix class every transition must have.
    """
    required_class = None

    def __init__(self, alphabet, transitions, start, accept, mode=RATIONAL,
            metadata=None, tol=DEFAULT_TOLERANCE):
        transitions = dict(transitions)
        num_states = None
        for M in transitions.values():
            if isinstance(M, Matrix):
                num_states = M.get_num_rows()
                break
        if num_states is None:
            raise MachineFormatError("no transition matrices given")
        super(MatrixAutomaton, self).__init__(alphabet, num_states, mode,
                metadata)
        self._check_symbol_keys(transitions.keys(), "transitions")
        for symbol, M in transitions.items():
            self._check_matrix(symbol, M)
            props = linalg.matrix_properties(M, tol)
            if self.required_class not in props:
                raise MachineFormatError(
                    "transition '{0}' of a {1} must be {2}".format(
                        symbol, self.model, self.required_class))
        self._transitions = transitions
        self._start, self._accept = self._check_start_accept(start, accept)

    def get_transition(self, symbol):
        """
        Returns the transition matrix for the specified symbol.
        """
        return self._transitions[symbol]

    def get_transitions(self):
        """
        Returns a dictionary mapping every symbol to its transition matrix.
        """
        return dict(self._transitions)

    def get_start(self):
        return self._start

    def get_accept(self):
        """
        Returns the sorted list of accept states.
        """
        return list(self._accept)

    def get_initial_vector(self):
        return Vector.basis(self._num_states, self._start, self._mode)

    def initial_configuration(self):
        return self.get_initial_vector()

    def step(self, symbol, configuration):
        return linalg.matvec(self._transitions[symbol], configuration)


class Pfa(MatrixAutomaton):
    """
    A probabilistic finite automaton. Every transition is stochastic and
    the value of a word is the probability mass on the accept states.
    """
    model = PFA
    required_class = linalg.STOCHASTIC

    def value_of(self, v):
        a = v.get_array()
        return sum((a[k] for k in self._accept), linalg.make_scalar(0,
            self._mode))


class Afa(MatrixAutomaton):
    """
    An affine finite automaton. Every transition has unit column sums,
    so configurations always sum to one but may have negative entries.
    The value of a word is the l1-weight of the accept states in the
    final configuration.
    """
    model = AFA
    required_class = linalg.AFFINE

    def value_of(self, v):
        norm = linalg.l1_norm(v)
        zero = linalg.make_scalar(0, self._mode)
        if norm == zero:
            # Entries sum to one, so this cannot happen for a valid machine.
            raise DegenerateMachineError(
                "final configuration has zero l1-norm")
        a = v.get_array()
        weight = sum((abs(a[k]) for k in self._accept), zero)
        return weight / norm


class Mcqfa(MatrixAutomaton):
    """
    A Moore-Crutchfield quantum finite automaton with real orthogonal
    transitions. The value of a word is the sum of the squared amplitudes
    of the accept states.
    """
    model = MCQFA
    required_class = linalg.ORTHOGONAL

    def value_of(self, v):
        a = v.get_array()
        return sum((a[k] * a[k] for k in self._accept),
                linalg.make_scalar(0, self._mode))


class Qfa(Automaton):
    """
    A quantum finite automaton with superoperator transitions given in
    Kraus form. Configurations are density matrices, starting from the
    projector onto the start state.
    """
    model = QFA

    def __init__(self, alphabet, kraus, start, accept, mode=RATIONAL,
            metadata=None, tol=DEFAULT_TOLERANCE):
        kraus = dict((symbol, list(ops)) for symbol, ops in kraus.items())
        num_states = None
        for ops in kraus.values():
            if len(ops) > 0 and isinstance(ops[0], ComplexMatrix):
                num_states = ops[0].get_shape()[0]
                break
        if num_states is None:
            raise MachineFormatError("no Kraus operators given")
        super(Qfa, self).__init__(alphabet, num_states, mode, metadata)
        self._check_symbol_keys(kraus.keys(), "Kraus sets")
        for symbol, ops in kraus.items():
            if len(ops) == 0:
                raise MachineFormatError(
                    "Kraus set '{0}' is empty".format(symbol))
            total = ComplexMatrix.zeros(num_states, mode)
            for K in ops:
                if not isinstance(K, ComplexMatrix):
                    raise MachineFormatError(
                        "Kraus operator for '{0}' is not a complex "
                        "matrix".format(symbol))
                self._check_matrix(symbol, K.get_real())
                self._check_matrix(symbol, K.get_imag())
                total = total + (K.conjugate_transpose() @ K)
            if not total.is_identity(tol):
                raise MachineFormatError(
                    "Kraus set '{0}' is not complete: the sum of K^dagger K "
                    "is not the identity".format(symbol))
        self._kraus = kraus
        self._tol = tol
        self._start, self._accept = self._check_start_accept(start, accept)

    def get_kraus(self, symbol):
        """
        Returns the list of Kraus operators for the specified symbol.
        """
        return list(self._kraus[symbol])

    def get_kraus_sets(self):
        return dict((s, list(ops)) for s, ops in self._kraus.items())

    def get_start(self):
        return self._start

    def get_accept(self):
        return list(self._accept)

    def get_initial_density(self):
        s = self._start
        return ComplexMatrix.unit(self._num_states, s, s, self._mode)

    def apply_channel(self, symbol, rho):
        """
        Returns the density matrix sum_i K_i rho K_i^dagger.
        """
        out = ComplexMatrix.zeros(self._num_states, self._mode)
        for K in self._kraus[symbol]:
            out = out + (K @ rho @ K.conjugate_transpose())
        return out

    def initial_configuration(self):
        return self.get_initial_density()

    def step(self, symbol, rho):
        return self.apply_channel(symbol, rho)

    def value_of(self, rho):
        zero = linalg.make_scalar(0, self._mode)
        re = sum((rho.get_entry(j, j)[0] for j in self._accept), zero)
        im = sum((rho.get_entry(j, j)[1] for j in self._accept), zero)
        if abs(im) > self._tol:
            raise DegenerateMachineError(
                "accept weight has imaginary part {0}".format(
                    linalg.format_scalar(im)))
        return re


class Gfa(Automaton):
    """
    A general finite automaton: arbitrary real transitions, an initial
    vector and a final linear functional. Values are not confined to [0, 1].
    """
    model = GFA

    def __init__(self, alphabet, transitions, initial, final, mode=RATIONAL,
            metadata=None):
        transitions = dict(transitions)
        if not isinstance(initial, Vector) or not isinstance(final, Vector):
            raise MachineFormatError(
                "initial and final must be vectors")
        super(Gfa, self).__init__(alphabet, initial.get_dim(), mode,
                metadata)
        self._check_symbol_keys(transitions.keys(), "transitions")
        for symbol, M in transitions.items():
            self._check_matrix(symbol, M)
        for name, v in [("initial", initial), ("final", final)]:
            if v.get_mode() != mode:
                raise MachineFormatError(
                    "{0} vector has scalar mode {1} in a {2} machine".format(
                        name, v.get_mode(), mode))
        if final.get_dim() != self._num_states:
            raise MachineFormatError(
                "final functional has dimension {0}, expected {1}".format(
                    final.get_dim(), self._num_states))
        self._transitions = transitions
        self._initial = initial
        self._final = final

    def get_transition(self, symbol):
        return self._transitions[symbol]

    def get_transitions(self):
        return dict(self._transitions)

    def get_initial_vector(self):
        return self._initial

    def get_final_functional(self):
        return self._final

    def initial_configuration(self):
        return self._initial

    def step(self, symbol, configuration):
        return linalg.matvec(self._transitions[symbol], configuration)

    def value_of(self, v):
        return self._final.get_array().dot(v.get_array())


def _check_model(machine, cls):
    if not isinstance(machine, cls):
        raise PreconditionError("expected a {0}, not a {1}".format(
            cls.model, getattr(machine, "model", type(machine).__name__)))


def run_afa(M, word):
    """
    Returns the accept value of the specified Afa on the specified word.
    """
    _check_model(M, Afa)
    return M.accept_value(word)


def run_pfa(P, word):
    """
    Returns the acceptance probability of the specified Pfa on the word.
    """
    _check_model(P, Pfa)
    return P.accept_value(word)


def run_mcqfa(M, word):
    _check_model(M, Mcqfa)
    return M.accept_value(word)


def run_qfa(Q, word):
    _check_model(Q, Qfa)
    return Q.accept_value(word)


def run_gfa(G, word):
    _check_model(G, Gfa)
    return G.accept_value(word)


def run(machine, word):
    """
    Returns the value of the specified machine of any model on the word.
    """
    if not isinstance(machine, Automaton):
        raise PreconditionError("{0!r} is not a machine".format(machine))
    return machine.accept_value(word)


def final_configuration(machine, word):
    """
    Returns the final configuration of the specified machine on the word:
    a Vector, or a ComplexMatrix density for Qfa machines.
    """
    return machine.final_configuration(word)


def as_afa(P):
    """
    Returns the specified Pfa reinterpreted as an Afa. Stochastic matrices
    are affine and the absolute values in the Afa semantics are no-ops on
    nonnegative vectors, so the two machines agree on every word.
    """
    _check_model(P, Pfa)
    return Afa(P.get_alphabet(), P.get_transitions(), P.get_start(),
            P.get_accept(), P.get_mode(), P.get_metadata())


class Comparison(enum.Enum):
    """
    The ways an accept value can be compared against a cutpoint.
    """
    STRICTLY_GREATER = "gt"
    NOT_EQUAL = "ne"
    EQUAL = "eq"


class CutpointSpec(object):
    """
    A cutpoint lambda in [0, 1] together with the comparison deciding
    membership.
    """
    def __init__(self, cutpoint, comparison=Comparison.STRICTLY_GREATER):
        mode = linalg.scalar_mode(cutpoint)
        if not 0 <= cutpoint <= 1:
            raise PreconditionError(
                "cutpoint {0} is not in [0, 1]".format(
                    linalg.format_scalar(cutpoint)))
        self.__cutpoint = linalg.make_scalar(cutpoint, mode)
        self.__comparison = Comparison(comparison)

    def __repr__(self):
        return "CutpointSpec({0}, {1})".format(
            linalg.format_scalar(self.__cutpoint), self.__comparison.name)

    def get_cutpoint(self):
        return self.__cutpoint

    def get_comparison(self):
        return self.__comparison

    def decide(self, value, tol=None):
        """
        Returns True if the specified accept value is a member under this
        cutpoint. Comparisons are exact when both the value and the
        cutpoint are rational. Otherwise EQUAL and NOT_EQUAL need an
        explicit tolerance, and STRICTLY_GREATER requires the value to
        exceed the cutpoint by more than tol when one is given.
        """
        lam = self.__cutpoint
        exact = (linalg.scalar_mode(value) == RATIONAL and
                linalg.scalar_mode(lam) == RATIONAL)
        c = self.__comparison
        if exact:
            if c == Comparison.STRICTLY_GREATER:
                return value > lam
            if c == Comparison.NOT_EQUAL:
                return value != lam
            return value == lam
        diff = float(value) - float(lam)
        if c == Comparison.STRICTLY_GREATER:
            return diff > (tol if tol is not None else 0.0)
        if tol is None:
            raise PreconditionError(
                "equality comparisons of float values need a tolerance")
        if c == Comparison.NOT_EQUAL:
            return abs(diff) > tol
        return abs(diff) <= tol


def accepts(machine, word, spec, tol=None):
    """
    Returns True if the specified machine accepts the word under the
    specified CutpointSpec.
    """
    return spec.decide(run(machine, word), tol)


def _encode_scalar(x, mode):
    if mode == RATIONAL:
        return linalg.format_scalar(x)
    return float(x)


def _encode_matrix(M):
    return [[_encode_scalar(x, M.get_mode()) for x in row]
            for row in M.rows()]


def _encode_complex(K):
    mode = K.get_mode()
    return [[[_encode_scalar(re, mode), _encode_scalar(im, mode)]
            for re, im in row] for row in K.pairs()]


def machine_to_dict(machine):
    """
    Returns a JSON compatible dictionary describing the specified machine.
    """
    mode = machine.get_mode()
    d = {
        "model": machine.model,
        "scalar": mode,
        "alphabet": machine.get_alphabet(),
        "states": machine.get_num_states(),
    }
    if isinstance(machine, Qfa):
        d["start"] = machine.get_start()
        d["accept"] = machine.get_accept()
        d["kraus"] = dict((s, [_encode_complex(K) for K in ops])
                for s, ops in machine.get_kraus_sets().items())
    elif isinstance(machine, Gfa):
        d["initial"] = [_encode_scalar(x, mode)
                for x in machine.get_initial_vector()]
        d["final"] = [_encode_scalar(x, mode)
                for x in machine.get_final_functional()]
        d["transitions"] = dict((s, _encode_matrix(M))
                for s, M in machine.get_transitions().items())
    else:
        d["start"] = machine.get_start()
        d["accept"] = machine.get_accept()
        d["transitions"] = dict((s, _encode_matrix(M))
                for s, M in machine.get_transitions().items())
    metadata = machine.get_metadata()
    if metadata:
        d["metadata"] = metadata
    return d


def _require(d, key, types):
    if key not in d:
        raise MachineFormatError("machine is missing the '{0}' field".format(
            key))
    value = d[key]
    if not isinstance(value, types) or isinstance(value, bool):
        raise MachineFormatError("field '{0}' has the wrong type".format(key))
    return value


def _decode_matrix(rows, mode, what):
    try:
        return Matrix(rows, mode)
    except (ScalarModeError, DimensionError, TypeError) as e:
        raise MachineFormatError("{0}: {1}".format(what, e))


def _decode_vector(entries, mode, what):
    try:
        return Vector(entries, mode)
    except (ScalarModeError, DimensionError, TypeError) as e:
        raise MachineFormatError("{0}: {1}".format(what, e))


def _decode_complex(rows, mode, what):
    try:
        return ComplexMatrix.from_pairs(rows, mode)
    except (ScalarModeError, DimensionError, TypeError) as e:
        raise MachineFormatError("{0}: {1}".format(what, e))


def machine_from_dict(d, tol=DEFAULT_TOLERANCE):
    """
    Returns the validated machine described by the specified dictionary.
    Raises MachineFormatError naming the violated invariant if the
    description is not a valid machine.
    """
    if not isinstance(d, dict):
        raise MachineFormatError("a machine must be a JSON object")
    model = _require(d, "model", str)
    if model not in MODELS:
        raise MachineFormatError("unknown model '{0}'".format(model))
    mode = _require(d, "scalar", str)
    if mode not in linalg.SCALAR_MODES:
        raise MachineFormatError("unknown scalar mode '{0}'".format(mode))
    alphabet = _require(d, "alphabet", list)
    states = _require(d, "states", int)
    metadata = d.get("metadata", {})
    if not isinstance(metadata, dict):
        raise MachineFormatError("field 'metadata' must be an object")
    if model == QFA:
        kraus = _require(d, "kraus", dict)
        sets = {}
        for symbol, ops in kraus.items():
            if not isinstance(ops, list):
                raise MachineFormatError(
                    "Kraus set '{0}' must be a list".format(symbol))
            sets[symbol] = [_decode_complex(K, mode,
                "Kraus operator for '{0}'".format(symbol)) for K in ops]
        machine = Qfa(alphabet, sets, _require(d, "start", int),
                _require(d, "accept", list), mode, metadata, tol)
    else:
        transitions = dict(
            (symbol, _decode_matrix(rows, mode,
                "transition '{0}'".format(symbol)))
            for symbol, rows in _require(d, "transitions", dict).items())
        if model == GFA:
            initial = _decode_vector(_require(d, "initial", list), mode,
                    "initial vector")
            final = _decode_vector(_require(d, "final", list), mode,
                    "final functional")
            machine = Gfa(alphabet, transitions, initial, final, mode,
                    metadata)
        else:
            cls = {PFA: Pfa, AFA: Afa, MCQFA: Mcqfa}[model]
            machine = cls(alphabet, transitions, _require(d, "start", int),
                    _require(d, "accept", list), mode, metadata, tol)
    if machine.get_num_states() != states:
        raise MachineFormatError(
            "field 'states' is {0} but the matrices are {1}x{1}".format(
                states, machine.get_num_states()))
    return machine


def dumps_machine(machine):
    """
    Returns the canonical JSON text of the specified machine: two space
    indentation, sorted keys and a trailing newline.
    """
    return json.dumps(machine_to_dict(machine), indent=2,
            sort_keys=True) + "\n"


def loads_machine(text, tol=DEFAULT_TOLERANCE):
    """
    Returns the machine described by the specified JSON text.
    """
    try:
        d = json.loads(text)
    except ValueError as e:
        raise MachineFormatError("machine file is not valid JSON: {0}".format(
            e))
    return machine_from_dict(d, tol)


def read_machine(path, tol=DEFAULT_TOLERANCE):
    """
    Reads the machine stored in the specified file.
    """
    with open(path, "r") as f:
        text = f.read()
    machine = loads_machine(text, tol)
    logger.debug("read %r from %s", machine, path)
    return machine


def write_machine(machine, path):
    """
    Writes the specified machine to the specified file in canonical form.
    """
    with open(path, "w") as f:
        f.write(dumps_machine(machine))
    logger.debug("wrote %r to %s", machine, path)
