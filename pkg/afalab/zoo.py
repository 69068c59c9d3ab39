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
Constructors for the concrete machine families, over the unary alphabet
{a} unless stated otherwise, and random machine generators.
"""
from __future__ import print_function
from __future__ import division

import math
import os
import random
import logging
from fractions import Fraction

import numpy as np

from . import linalg
from .linalg import Matrix
from .linalg import ComplexMatrix
from .linalg import RATIONAL
from .linalg import FLOAT
from .automata import Afa
from .automata import Pfa
from .automata import Mcqfa
from .automata import Qfa
from .automata import LEFT_END
from .automata import RIGHT_END
from .exceptions import PreconditionError
from .exceptions import MachineFormatError

logger = logging.getLogger(__name__)

UNARY = ["a"]
DEFAULT_SEED = 1
SEED_VARIABLE = "AFALAB_SEED"

TENSOR = "tensor"
SUM = "sum"
LAYOUTS = (TENSOR, SUM)


def get_default_seed():
    """
    Returns the seed used for default rotation lists: the value of the
    AFALAB_SEED environment variable if set, and DEFAULT_SEED otherwise.
    """
    value = os.environ.get(SEED_VARIABLE)
    if value is None or value.strip() == "":
        return DEFAULT_SEED
    try:
        return int(value)
    except ValueError:
        raise PreconditionError("{0} must be an integer, not '{1}'".format(
            SEED_VARIABLE, value))


def is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def _unary_afa(cent, a, dollar, start, accept, mode, metadata):
    transitions = {LEFT_END: cent, "a": a, RIGHT_END: dollar}
    return Afa(UNARY, transitions, start, accept, mode, metadata)


def count_afa(n):
    """
    Returns the 2-state Afa for COUNT_n = {a^n}. The left end-marker loads
    (2^n, 1 - 2^n) and each a halves the first entry, so a^n ends in
    (1, 0) and is accepted with value 1; every other word has value at
    most 2/3.
    """
    if not isinstance(n, int) or n < 1:
        raise PreconditionError("count needs n >= 1")
    big = 2 ** n
    cent = Matrix([[big, 0], [1 - big, 1]])
    a = Matrix([[Fraction(1, 2), 0], [Fraction(1, 2), 1]])
    return _unary_afa(cent, a, Matrix.identity(2), 0, [0], RATIONAL,
            {"family": "count", "n": n})


def count_product_afa(n, copies):
    """
    Returns the tensor product of the specified number of copies of
    count_afa(n), accepting when every copy accepts. Members keep value 1
    and non-members have value at most (2/3)^copies.
    """
    if not isinstance(copies, int) or copies < 1:
        raise PreconditionError("the number of copies must be positive")
    base = count_afa(n)
    transitions = dict((s, linalg.kronecker_power(M, copies))
            for s, M in base.get_transitions().items())
    return Afa(UNARY, transitions, 0, [0], RATIONAL,
            {"family": "count", "n": n, "copies": copies})


def _rotation(cos, sin, mode):
    return Matrix([[cos, -sin], [sin, cos]], mode)


def _check_rotation(cos, sin, mode):
    c = linalg.make_scalar(cos, mode)
    s = linalg.make_scalar(sin, mode)
    if not linalg.scalars_equal(c * c + s * s, linalg.make_scalar(1, mode)):
        raise PreconditionError("cos^2 + sin^2 must be 1")
    return c, s


def rotation_mcqfa(cos, sin, mode=RATIONAL):
    """
    Returns the 2-state Mcqfa rotating by the angle with the specified
    cosine and sine on each a, accepting in state 0.
    """
    c, s = _check_rotation(cos, sin, mode)
    I = Matrix.identity(2, mode)
    transitions = {LEFT_END: I, "a": _rotation(c, s, mode), RIGHT_END: I}
    return Mcqfa(UNARY, transitions, 0, [0], mode,
            {"family": "rotation", "cos": linalg.format_scalar(c),
                "sin": linalg.format_scalar(s)})


def rotation_afa(cos, sin, mode=RATIONAL):
    """
    Returns the 3-state Afa evolving the same amplitude vector as
    rotation_mcqfa, with a third state absorbing the column sums.
    """
    c, s = _check_rotation(cos, sin, mode)
    I = Matrix.identity(3, mode)
    a = linalg.affine_extension(_rotation(c, s, mode))
    return _unary_afa(I, a, I, 0, [0], mode,
            {"family": "rotation", "cos": linalg.format_scalar(c),
                "sin": linalg.format_scalar(s)})


def _block_rotation(k):
    theta = math.pi / 2 ** (k + 1)
    return math.cos(theta), math.sin(theta)


def mod2k_mcqfa(k):
    """
    Returns the 2-state Mcqfa rotating by pi / 2^(k + 1) per symbol. Each
    block of 2^k symbols is a quarter turn, so a^(j 2^k) has value 1 for
    even j and 0 for odd j.
    """
    if not isinstance(k, int) or k < 1:
        raise PreconditionError("mod2k needs k >= 1")
    c, s = _block_rotation(k)
    I = Matrix.identity(2, FLOAT)
    transitions = {LEFT_END: I, "a": _rotation(c, s, FLOAT), RIGHT_END: I}
    return Mcqfa(UNARY, transitions, 0, [0], FLOAT,
            {"family": "mod2k", "k": k})


def mod4k_afa(k):
    """
    Returns the 3-state Afa embedding the rotation of mod2k_mcqfa(k). The
    configuration is (1, 0, 0) after 4j blocks of 2^k symbols and
    (0, 1, 0) after 4j + 1 blocks, so words in 0MOD4^k have value 1 and
    words in 1MOD4^k have value 0.
    """
    if not isinstance(k, int) or k < 1:
        raise PreconditionError("mod4k needs k >= 1")
    c, s = _block_rotation(k)
    return _relabel(rotation_afa(c, s, FLOAT), {"family": "mod4k", "k": k})


def default_rotation_count(p, layout=TENSOR):
    """
    Returns the number of rotations used by modp_mcqfa when no list is
    given: ceil(8 log2 p) for the sum layout, and ceil(log2 p) for the
    tensor layout whose state count is exponential in the list length.
    """
    bits = math.log(p, 2)
    if layout == SUM:
        return int(math.ceil(8 * bits))
    return max(1, int(math.ceil(bits)))


def default_rotations(p, layout=TENSOR, seed=None):
    """
    Returns a reproducible list of rotation multipliers in [1, p - 1].
    """
    if seed is None:
        seed = get_default_seed()
    rng = random.Random(seed)
    return [rng.randint(1, p - 1)
            for _ in range(default_rotation_count(p, layout))]


def _householder_to_uniform(d, size):
    """
    Returns the reflection of dimension size exchanging e_0 with the unit
    vector spreading weight 1/sqrt(d) over states 0, 2, ..., 2(d - 1).
    """
    u = np.zeros(size)
    u[0:2 * d:2] = 1 / math.sqrt(d)
    v = np.zeros(size)
    v[0] = 1.0
    v = v - u
    norm = v.dot(v)
    H = np.eye(size)
    if norm > 0:
        H = H - 2 * np.outer(v, v) / norm
    return Matrix.from_array(H, FLOAT)


def modp_mcqfa(p, ks=None, layout=TENSOR, seed=None):
    """
    Returns an Mcqfa for MOD_p built from rotations by 2 pi k / p, one for
    each k in ks. In the tensor layout the rotations run in parallel and
    the machine accepts when all of them are back in state 0, so
    f(a^j) = prod cos^2(2 pi k j / p). In the sum layout the left
    end-marker enters a uniform superposition of the rotations, so
    f(a^j) = (1/d) sum cos^2(2 pi k j / p) with only 2d states. Either way
    f(a^j) = 1 exactly when p divides j.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise PreconditionError("modp needs a prime p, not {0}".format(p))
    if layout not in LAYOUTS:
        raise PreconditionError("unknown layout '{0}'".format(layout))
    if ks is None:
        ks = default_rotations(p, layout, seed)
    ks = list(ks)
    if len(ks) == 0:
        raise PreconditionError("modp needs at least one rotation")
    for k in ks:
        if not 1 <= k <= p - 1:
            raise PreconditionError(
                "rotation multiplier {0} is not in 1..{1}".format(k, p - 1))
    rotations = []
    for k in ks:
        theta = 2 * math.pi * k / p
        rotations.append(_rotation(math.cos(theta), math.sin(theta), FLOAT))
    metadata = {"family": "modp", "p": p, "ks": ks, "layout": layout}
    d = len(ks)
    if layout == TENSOR:
        a = rotations[0]
        for R in rotations[1:]:
            a = linalg.kronecker(a, R)
        size = 2 ** d
        I = Matrix.identity(size, FLOAT)
        transitions = {LEFT_END: I, "a": a, RIGHT_END: I}
        accept = [0]
    else:
        size = 2 * d
        blocks = np.zeros((size, size))
        for i, R in enumerate(rotations):
            blocks[2 * i:2 * i + 2, 2 * i:2 * i + 2] = R.get_array()
        transitions = {
            LEFT_END: _householder_to_uniform(d, size),
            "a": Matrix.from_array(blocks, FLOAT),
            RIGHT_END: Matrix.identity(size, FLOAT)}
        accept = list(range(0, size, 2))
    logger.debug("modp_mcqfa: p=%d ks=%s layout=%s states=%d", p, ks,
            layout, size)
    return Mcqfa(UNARY, transitions, 0, accept, FLOAT, metadata)


def two_state_unary_afa(p, q, f1, f2, m):
    """
    Returns the 2-state unary Afa with left end-marker [[m, 0], [1 - m, 1]]
    (loading (m, 1 - m)), A_a = [[1 - q, p], [q, 1 - p]] and right
    end-marker [[f1, f2], [1 - f1, 1 - f2]], accepting in state 0.
    """
    p, q, f1, f2, m = [linalg.make_scalar(x, RATIONAL)
            for x in (p, q, f1, f2, m)]
    cent = Matrix([[m, 0], [1 - m, 1]])
    a = Matrix([[1 - q, p], [q, 1 - p]])
    dollar = Matrix([[f1, f2], [1 - f1, 1 - f2]])
    metadata = {"family": "unary", "p": linalg.format_scalar(p),
            "q": linalg.format_scalar(q), "f1": linalg.format_scalar(f1),
            "f2": linalg.format_scalar(f2), "m": linalg.format_scalar(m)}
    return _unary_afa(cent, a, dollar, 0, [0], RATIONAL, metadata)


def less_afa(n):
    """
    Returns a 2-state Afa recognising {a^0, ..., a^n} with cutpoint 3/4.
    The first entry starts at 3/2 - 3/(8(n + 1)) and drops by 3/(4(n + 1))
    per symbol, leaving the window (3/4, 3/2) of values above 3/4 after
    exactly n + 1 steps.
    """
    if not isinstance(n, int) or n < 0:
        raise PreconditionError("less needs n >= 0")
    step = Fraction(3, 4 * (n + 1))
    m = Fraction(3, 2) - Fraction(3, 8 * (n + 1))
    M = two_state_unary_afa(-step, step, 1, 0, m)
    return _relabel(M, {"family": "less", "n": n})


def interval_afa(k, l):
    """
    Returns a 2-state Afa recognising {a^k, ..., a^l} with cutpoint 3/4.
    The first entry equals 3/2 after k - 1 symbols and 3/4 after l + 1
    symbols, both values 3/4 exactly, with the window strictly between.
    """
    if not isinstance(k, int) or not isinstance(l, int) or not 1 <= k < l:
        raise PreconditionError("interval needs 1 <= k < l")
    d = l - k
    p = Fraction(-3, 4 * d + 8)
    m = Fraction(3, 2) + Fraction(3, 4 * d + 8) * (k - 1)
    M = two_state_unary_afa(p, -p, 1, 0, m)
    return _relabel(M, {"family": "interval", "k": k, "l": l})


def _relabel(M, metadata):
    return Afa(M.get_alphabet(), M.get_transitions(), M.get_start(),
            M.get_accept(), M.get_mode(), metadata)


def _random_fraction(rng, span, max_den):
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-span * den, span * den), den)


def _random_accept(rng, n):
    return [j for j in range(n) if rng.random() < 0.5]


def _alphabet_symbols(alphabet):
    return list(alphabet) + [LEFT_END, RIGHT_END]


def random_pfa(rng, num_states, alphabet="ab", max_den=6):
    """
    Returns a random rational Pfa with columns drawn as normalised random
    integer weights.
    """
    transitions = {}
    for symbol in _alphabet_symbols(alphabet):
        columns = []
        for _ in range(num_states):
            w = [rng.randint(0, max_den) for _ in range(num_states)]
            if sum(w) == 0:
                w[rng.randrange(num_states)] = 1
            total = sum(w)
            columns.append([Fraction(x, total) for x in w])
        transitions[symbol] = Matrix(list(zip(*columns)))
    return Pfa(list(alphabet), transitions, rng.randrange(num_states),
            _random_accept(rng, num_states))


def random_afa(rng, num_states, alphabet="ab", span=2, max_den=4):
    """
    Returns a random rational Afa. Each column has random entries in
    [-span, span] with the last entry fixed by the unit column sum.
    """
    transitions = {}
    for symbol in _alphabet_symbols(alphabet):
        columns = []
        for _ in range(num_states):
            col = [_random_fraction(rng, span, max_den)
                    for _ in range(num_states - 1)]
            col.append(1 - sum(col))
            columns.append(col)
        transitions[symbol] = Matrix(list(zip(*columns)))
    return Afa(list(alphabet), transitions, rng.randrange(num_states),
            _random_accept(rng, num_states))


def _numpy_generator(rng):
    return np.random.default_rng(rng.randrange(2 ** 32))


def _random_orthogonal(gen, n):
    Q, R = np.linalg.qr(gen.standard_normal((n, n)))
    return Q * np.sign(np.diag(R))


def random_mcqfa(rng, num_states, alphabet="ab"):
    """
    Returns a random float Mcqfa with orthogonal transitions taken from
    the QR decomposition of Gaussian matrices.
    """
    gen = _numpy_generator(rng)
    transitions = dict(
        (symbol, Matrix.from_array(_random_orthogonal(gen, num_states),
            FLOAT))
        for symbol in _alphabet_symbols(alphabet))
    return Mcqfa(list(alphabet), transitions, rng.randrange(num_states),
            _random_accept(rng, num_states), FLOAT)


def random_kraus(gen, n, num_ops):
    """
    Returns a complete set of num_ops random n x n Kraus operators: the
    n x n blocks of a random (n num_ops) x n isometry.
    """
    shape = (n * num_ops, n)
    Z = gen.standard_normal(shape) + 1j * gen.standard_normal(shape)
    V, _ = np.linalg.qr(Z)
    ops = []
    for i in range(num_ops):
        block = V[i * n:(i + 1) * n, :]
        ops.append(ComplexMatrix(Matrix.from_array(block.real, FLOAT),
            Matrix.from_array(block.imag, FLOAT)))
    return ops


def random_qfa(rng, num_states, alphabet="ab", num_ops=2):
    """
    Returns a random float Qfa with num_ops Kraus operators per symbol.
    """
    gen = _numpy_generator(rng)
    kraus = dict((symbol, random_kraus(gen, num_states, num_ops))
            for symbol in _alphabet_symbols(alphabet))
    return Qfa(list(alphabet), kraus, rng.randrange(num_states),
            _random_accept(rng, num_states), FLOAT)


def _parse_int(s):
    try:
        return int(s)
    except ValueError:
        raise MachineFormatError("'{0}' is not an integer".format(s))


def _parse_rational(s):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise MachineFormatError("'{0}' is not a rational number".format(s))


class ZooSpec(object):
    """
    A machine family together with its parameters, written as
    FAMILY:ARG,ARG,... on the command line. The families are

    * count:n and count:n,copies
    * mod2k:k and mod4k:k
    * modp:p[,k,k,...] and modp-sum:p[,k,k,...]
    * less:n and interval:k,l
    * unary:p,q,f1,f2,m
    * rotation:cos,sin (rational, as an Mcqfa)
    """
    families = ("count", "mod2k", "mod4k", "modp", "modp-sum", "less",
            "interval", "unary", "rotation")

    def __init__(self, family, params, seed=None):
        if family not in self.families:
            raise MachineFormatError(
                "unknown machine family '{0}'".format(family))
        self.__family = family
        self.__params = list(params)
        self.__seed = seed

    @classmethod
    def parse(cls, text, seed=None):
        """
        Returns the ZooSpec described by the specified string.
        """
        family, _, args = text.partition(":")
        family = family.strip()
        args = [a.strip() for a in args.split(",") if a.strip() != ""]
        if family in ("unary", "rotation"):
            params = [_parse_rational(a) for a in args]
        else:
            params = [_parse_int(a) for a in args]
        arity = {
            "count": (1, 2), "mod2k": (1, 1), "mod4k": (1, 1),
            "less": (1, 1), "interval": (2, 2), "unary": (5, 5),
            "rotation": (2, 2), "modp": (1, None), "modp-sum": (1, None)}
        lo, hi = arity.get(family, (0, None))
        if len(params) < lo or (hi is not None and len(params) > hi):
            raise MachineFormatError(
                "wrong number of parameters for '{0}'".format(family))
        return cls(family, params, seed)

    def __repr__(self):
        return "ZooSpec({0!r}, {1!r})".format(self.__family, self.__params)

    def get_family(self):
        return self.__family

    def get_params(self):
        return list(self.__params)

    def build(self):
        """
        Returns the machine described by this spec.
        """
        f = self.__family
        args = self.__params
        if f == "count":
            if len(args) == 2:
                return count_product_afa(args[0], args[1])
            return count_afa(args[0])
        if f == "mod2k":
            return mod2k_mcqfa(args[0])
        if f == "mod4k":
            return mod4k_afa(args[0])
        if f in ("modp", "modp-sum"):
            ks = args[1:] if len(args) > 1 else None
            layout = SUM if f == "modp-sum" else TENSOR
            return modp_mcqfa(args[0], ks, layout, self.__seed)
        if f == "less":
            return less_afa(args[0])
        if f == "interval":
            return interval_afa(args[0], args[1])
        if f == "unary":
            return two_state_unary_afa(*args)
        return rotation_mcqfa(args[0], args[1], RATIONAL)
