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
The languages recognised with cutpoint by 2-state unary affine automata.

A 2-state unary Afa is described by UnaryParams (p, q, f1, f2, m): the
left end-marker loads (m, 1 - m), the symbol a applies
[[1 - q, p], [q, 1 - p]] and the right end-marker applies
[[f1, f2], [1 - f1, 1 - f2]]. The first entry E_j of the final
configuration on a^j is

* F + j C with F = m (f1 - f2) + f2 and C = p (f1 - f2) when p + q = 0;
* F + C t^j with r = p / (p + q), t = 1 - p - q, c = m - r,
  F = (f1 - f2) r + f2 and C = (f1 - f2) c otherwise,

and a^j is accepted when acceptance_value(E_j) > lambda. This module
finds the language exactly, as a MembershipTrace with a certified tail
and as a CatalogEntry, and checks both against direct evaluation of the
machine.
"""
from __future__ import print_function
from __future__ import division

import bisect
import collections
import logging
import math
import random
from fractions import Fraction

from . import linalg
from . import automata
from . import zoo
from .linalg import RATIONAL
from .automata import Afa
from .automata import CutpointSpec
from .automata import Comparison
from .automata import LEFT_END
from .automata import RIGHT_END
from .exceptions import ClassificationError
from .exceptions import CatalogError
from .exceptions import IndefiniteTailError
from .exceptions import PreconditionError
from .exceptions import ScalarModeError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

# Bounds on the length of the direct evaluation classify checks itself
# against.
MIN_CHECK_LENGTH = 8
DEFAULT_CHECK_LENGTH = 256
# Longest prefix an analytic trace evaluates word by word.
MAX_PREFIX_LENGTH = DEFAULT_CHECK_LENGTH + 1

DEFAULT_SWEEP_COUNT = 500
DEFAULT_SWEEP_LENGTH = 200
DEFAULT_LAMBDAS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))

T_REGIMES = ("(0,1)", ">1", "(-1,0)", "-1", "<-1", "0")

LINEAR_BRANCHES = (
    "lambda<1/2, F<a, C<0",
    "lambda<1/2, F<a, C>0",
    "lambda<1/2, F=a, C<0",
    "lambda<1/2, F=a, C>0",
    "lambda<1/2, a<F<lambda",
    "lambda<1/2, F=lambda, C<0",
    "lambda<1/2, F=lambda, C>0",
    "lambda<1/2, F>lambda, C<0",
    "lambda<1/2, F>lambda, C>0",
    "lambda=1/2, F<=lambda, C<0",
    "lambda=1/2, F<=lambda, C>0",
    "lambda=1/2, F>lambda, C<0",
    "lambda=1/2, F>lambda, C>0",
    "lambda>1/2, F<=lambda, C<0",
    "lambda>1/2, F<=lambda, C>0",
    "lambda>1/2, lambda<F<b",
    "lambda>1/2, F=b, C<0",
    "lambda>1/2, F=b, C>0",
    "lambda>1/2, F>b, C<0",
    "lambda>1/2, F>b, C>0",
)


def acceptance_value(x):
    """
    Returns the accept value of the 2-state configuration (x, 1 - x)
    accepting in state 0: x when 0 <= x <= 1, and -x / (1 - 2x) otherwise.
    """
    if 0 <= x <= 1:
        return x
    return -x / (1 - 2 * x)


def accept_region_bounds(cutpoint):
    """
    Returns the sorted boundary points of the set of x with
    acceptance_value(x) > cutpoint. That set is the complement of
    [a, cutpoint] with a = cutpoint / (2 cutpoint - 1) when cutpoint < 1/2,
    (1/2, infinity) when cutpoint = 1/2, and (cutpoint, b) with
    b = cutpoint / (2 cutpoint - 1) when cutpoint > 1/2.
    """
    if cutpoint == HALF:
        return [HALF]
    other = cutpoint / (2 * cutpoint - 1)
    return sorted(set([other, cutpoint]))


def _rational(x, name):
    try:
        return linalg.make_scalar(x, RATIONAL)
    except ScalarModeError:
        raise PreconditionError("{0} must be rational, not {1!r}".format(
            name, x))


class UnaryParams(object):
    """
    The exact parameters of a 2-state unary Afa together with a cutpoint,
    and the quantities derived from them.
    """
    def __init__(self, p, q, f1, f2, m, cutpoint=HALF):
        self.__p = _rational(p, "p")
        self.__q = _rational(q, "q")
        self.__f1 = _rational(f1, "f1")
        self.__f2 = _rational(f2, "f2")
        self.__m = _rational(m, "m")
        lam = _rational(cutpoint, "cutpoint")
        if not 0 <= lam < 1:
            raise PreconditionError("cutpoint must lie in [0, 1)")
        self.__cutpoint = lam
        diff = self.__f1 - self.__f2
        s = self.__p + self.__q
        if s == 0:
            self.__r = self.__t = self.__c = None
            self.__F = self.__m * diff + self.__f2
            self.__C = self.__p * diff
        else:
            self.__r = self.__p / s
            self.__t = 1 - s
            self.__c = self.__m - self.__r
            self.__F = diff * self.__r + self.__f2
            self.__C = diff * self.__c

    def __repr__(self):
        return "UnaryParams(p={0}, q={1}, f1={2}, f2={3}, m={4}, " \
                "cutpoint={5})".format(*[linalg.format_scalar(x)
                    for x in self.as_tuple()])

    def as_tuple(self):
        """
        Returns the tuple (p, q, f1, f2, m, cutpoint).
        """
        return (self.__p, self.__q, self.__f1, self.__f2, self.__m,
                self.__cutpoint)

    def get_p(self):
        return self.__p

    def get_q(self):
        return self.__q

    def get_f1(self):
        return self.__f1

    def get_f2(self):
        return self.__f2

    def get_m(self):
        return self.__m

    def get_cutpoint(self):
        return self.__cutpoint

    def is_linear(self):
        """
        Returns True if p + q = 0, so that E_j moves by C per symbol.
        """
        return self.__t is None

    def get_r(self):
        """
        Returns the first entry p / (p + q) of the fixed point of A_a, or
        None when p + q = 0.
        """
        return self.__r

    def get_t(self):
        return self.__t

    def get_c(self):
        return self.__c

    def get_F(self):
        return self.__F

    def get_C(self):
        return self.__C

    def value_at(self, j):
        """
        Returns E_j, the first entry of the final configuration on a^j.
        """
        if self.is_linear():
            return self.__F + j * self.__C
        return self.__F + self.__C * self.__t ** j

    def member(self, j):
        """
        Returns True if a^j is accepted.
        """
        return acceptance_value(self.value_at(j)) > self.__cutpoint

    def machine(self):
        """
        Returns the Afa described by these parameters.
        """
        return zoo.two_state_unary_afa(self.__p, self.__q, self.__f1,
                self.__f2, self.__m)

    def cutpoint_spec(self):
        return CutpointSpec(self.__cutpoint, Comparison.STRICTLY_GREATER)


def params_from_machine(M, cutpoint=HALF):
    """
    Returns the UnaryParams of the specified rational 2-state unary Afa.
    A machine accepting in state 1 is described with f1 and f2 replaced
    by 1 - f1 and 1 - f2, which swaps the two entries of the final
    configuration; machines accepting in no state or in both states get
    constant parameters.
    """
    if not isinstance(M, Afa) or not M.is_unary() or \
            M.get_num_states() != 2 or M.get_mode() != RATIONAL:
        raise PreconditionError(
            "expected a rational 2-state unary afa, got {0!r}".format(M))
    symbol = M.get_alphabet()[0]
    cent = M.get_transition(LEFT_END)
    a = M.get_transition(symbol)
    dollar = M.get_transition(RIGHT_END)
    m = cent.get_entry(0, M.get_start())
    p = a.get_entry(0, 1)
    q = a.get_entry(1, 0)
    f1 = dollar.get_entry(0, 0)
    f2 = dollar.get_entry(0, 1)
    accept = M.get_accept()
    if accept == [1]:
        f1, f2 = 1 - f1, 1 - f2
    elif accept == []:
        p, q, f1, f2 = 0, 0, 0, 0
    elif accept == [0, 1]:
        p, q, f1, f2 = 0, 0, 1, 1
    return UnaryParams(p, q, f1, f2, m, cutpoint)


class ConstantFrom(object):
    """
    A tail in which every a^j with j >= start has membership bit. A bit of
    None marks a tail that has not been certified.
    """
    def __init__(self, start, bit):
        self.__start = start
        self.__bit = bit

    def __repr__(self):
        return "ConstantFrom({0}, {1})".format(self.__start, self.__bit)

    def __eq__(self, other):
        return isinstance(other, ConstantFrom) and \
                (self.__start, self.__bit) == (other.get_start(),
                        other.get_bit())

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def get_start(self):
        return self.__start

    def get_bit(self):
        return self.__bit

    def is_definite(self):
        return self.__bit is not None

    def bit_at(self, j):
        if self.__bit is None:
            raise IndefiniteTailError(
                "membership of a^{0} is not certified".format(j))
        return self.__bit


class Period2From(object):
    """
    A tail in which a^j with j >= start has membership bit_even for even j
    and bit_odd for odd j.
    """
    def __init__(self, start, bit_even, bit_odd):
        self.__start = start
        self.__bit_even = bit_even
        self.__bit_odd = bit_odd

    def __repr__(self):
        return "Period2From({0}, {1}, {2})".format(self.__start,
                self.__bit_even, self.__bit_odd)

    def __eq__(self, other):
        return isinstance(other, Period2From) and \
                (self.__start, self.__bit_even, self.__bit_odd) == \
                (other.get_start(), other.bit_at(0), other.bit_at(1))

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def get_start(self):
        return self.__start

    def is_definite(self):
        return True

    def bit_at(self, j):
        return self.__bit_odd if j % 2 else self.__bit_even


def _periodic_tail(start, bit_start, bit_next):
    if bit_start == bit_next:
        return ConstantFrom(start, bit_start)
    if start % 2 == 0:
        return Period2From(start, bit_start, bit_next)
    return Period2From(start, bit_next, bit_start)


class MembershipTrace(object):
    """
    The memberships of a^0, ..., a^L together with a tail describing every
    a^j with j at or after the start of the tail. The accept values the
    prefix was computed from may be kept alongside.

    Words between the end of the prefix and the start of the tail are
    described by pieces, a list of (start, bit_even, bit_odd) sorted by
    start: from each start up to the next one, membership depends only on
    the parity of j. A trace read from an explicit prefix has one piece
    per run of the prefix.
    """
    def __init__(self, prefix, tail, values=None, pieces=None):
        self.__prefix = tuple(bool(b) for b in prefix)
        self.__tail = tail
        self.__values = None if values is None else list(values)
        start = tail.get_start()
        if pieces is None:
            if start > len(self.__prefix):
                raise ValueError("tail starts after the end of the prefix")
            pieces = [(j, b, b) for j, b in enumerate(self.__prefix[:start])
                    if j == 0 or b != self.__prefix[j - 1]]
        else:
            pieces = [(int(s), bool(e), bool(o)) for s, e, o in pieces]
            starts = [s for s, _, _ in pieces]
            if start > 0 and (not starts or starts[0] != 0):
                raise ValueError("pieces must start at a^0")
            if any(x >= y for x, y in zip(starts, starts[1:])) or \
                    any(s >= start for s in starts):
                raise ValueError("piece starts must increase and precede "
                        "the tail")
        self.__pieces = pieces
        self.__starts = [s for s, _, _ in pieces]
        for j, b in enumerate(self.__prefix):
            if j < start:
                expected = self.__piece_bit(j)
            elif tail.is_definite():
                expected = tail.bit_at(j)
            else:
                continue
            if b != expected:
                raise ValueError("prefix disagrees with the trace at "
                        "a^{0}".format(j))

    def __repr__(self):
        return "MembershipTrace({0!r}, {1!r})".format(self.bits(),
                self.__tail)

    def __piece_bit(self, j):
        _, bit_even, bit_odd = self.__pieces[
            bisect.bisect_right(self.__starts, j) - 1]
        return bit_odd if j % 2 else bit_even

    def get_prefix(self):
        return self.__prefix

    def get_length(self):
        """
        Returns L, the length of the longest word in the prefix.
        """
        return len(self.__prefix) - 1

    def get_tail(self):
        return self.__tail

    def get_values(self):
        return self.__values

    def get_pieces(self):
        """
        Returns the trace as a list of (start, stop, bit_even, bit_odd),
        the last of which is the tail with a stop of None.
        """
        tail = self.__tail
        start = tail.get_start()
        stops = self.__starts[1:] + [start]
        out = [(s, e, be, bo) for (s, be, bo), e in zip(self.__pieces, stops)]
        if tail.is_definite():
            out.append((start, None, tail.bit_at(0), tail.bit_at(1)))
        else:
            out.append((start, None, None, None))
        return out

    def is_definite(self):
        return self.__tail.is_definite()

    def contains(self, j):
        """
        Returns True if a^j is in the language of this trace.
        """
        if j < len(self.__prefix):
            return self.__prefix[j]
        if j >= self.__tail.get_start():
            return self.__tail.bit_at(j)
        return self.__piece_bit(j)

    def bits(self):
        """
        Returns the prefix as a string of 0 and 1 characters.
        """
        return "".join("1" if b else "0" for b in self.__prefix)


def _log(x):
    return math.log(x.numerator) - math.log(x.denominator)


def _first_index(scale, ratio, bound, below, strict=True):
    """
    Returns the smallest j >= 0 with scale ratio^j < bound when below is
    True (ratio < 1), or scale ratio^j > bound otherwise (ratio > 1); with
    strict False the comparisons admit equality. The estimate from
    logarithms is corrected exactly.
    """
    def holds(j):
        v = scale * ratio ** j
        if v == bound:
            return not strict
        return v < bound if below else v > bound

    if holds(0):
        return 0
    estimate = int(math.floor((_log(bound) - _log(scale)) / _log(ratio))) + 1
    j = max(0, estimate)
    while j > 0 and holds(j - 1):
        j -= 1
    while not holds(j):
        j += 1
    return j


def tail_certificate(params):
    """
    Returns the tail of the language of the specified parameters: the
    first index j0 after which membership is constant or alternates with
    parity, computed exactly from the position of E_j relative to the
    boundaries of the accept region.
    """
    F = params.get_F()
    C = params.get_C()
    bounds = accept_region_bounds(params.get_cutpoint())
    if C == 0:
        # E_j = F for every j.
        return ConstantFrom(0, params.member(0))
    if params.is_linear():
        # E_j moves monotonically past every boundary.
        sign = 1 if C > 0 else -1
        D = max(sign * (tau - F) for tau in bounds)
        j0 = 0 if D < 0 else int(math.floor(D / abs(C))) + 1
        return ConstantFrom(j0, params.member(j0))
    t = params.get_t()
    if t == 0:
        return ConstantFrom(1, params.member(1))
    at = abs(t)
    if at == 1:
        j0 = 0
    elif at < 1:
        # E_j converges to F; once it is closer to F than any boundary
        # other than F it stays on one side of each boundary.
        distances = [abs(tau - F) for tau in bounds if tau != F]
        j0 = 0
        if distances:
            j0 = _first_index(abs(C), at, min(distances), True)
    else:
        # E_j diverges; once it is further from F than every boundary it
        # only alternates between the two unbounded components.
        D = max(abs(tau - F) for tau in bounds)
        j0 = _first_index(abs(C), at, D, False)
    if t > 0:
        return ConstantFrom(j0, params.member(j0))
    return _periodic_tail(j0, params.member(j0), params.member(j0 + 1))


def _crossing(scale, ratio, D, strict):
    # Smallest i with scale ratio^i >= D (> D when strict) for ratio > 1,
    # or with -scale ratio^i >= D (> D) for ratio < 1; None if none.
    if ratio > 1:
        if D <= 0:
            return 0
        return _first_index(scale, ratio, D, False, strict)
    if D >= 0:
        return None
    return _first_index(scale, ratio, -D, True, strict)


def change_points(params):
    """
    Returns the sorted indices j > 0 at which E_j first reaches or first
    passes a boundary of the accept region, within its parity class when
    t < 0. Membership can only change at these indices.
    """
    F = params.get_F()
    C = params.get_C()
    if C == 0:
        return []
    bounds = accept_region_bounds(params.get_cutpoint())
    out = set()
    if params.is_linear():
        sign = 1 if C > 0 else -1
        for tau in bounds:
            D = sign * (tau - F)
            if D > 0:
                out.add(-(-D // abs(C)))
            if D >= 0:
                out.add(D // abs(C) + 1)
    else:
        t = params.get_t()
        if t == 0 or abs(t) == 1:
            return []
        if t > 0:
            classes = [(C, t, 0, 1)]
        else:
            classes = [(C, t * t, 0, 2), (C * t, t * t, 1, 2)]
        for K, ratio, offset, step in classes:
            # On its class E is F + K ratio^i at j = offset + step i.
            sign = 1 if (K > 0) == (ratio > 1) else -1
            for tau in bounds:
                D = sign * (tau - F)
                for strict in (False, True):
                    i = _crossing(abs(K), ratio, D, strict)
                    if i is not None:
                        out.add(offset + step * i)
    return sorted(int(j) for j in out if j > 0)


def _analytic_pieces(params, j0):
    starts = [0] + [j for j in change_points(params) if j < j0]
    pieces = []
    for k, s in enumerate(starts):
        stop = starts[k + 1] if k + 1 < len(starts) else j0
        bits = [params.member(j) if j < stop else None
                for j in (s + s % 2, s + 1 - s % 2)]
        bit_even = bits[1] if bits[0] is None else bits[0]
        bit_odd = bits[0] if bits[1] is None else bits[1]
        pieces.append((s, bit_even, bit_odd))
    return pieces


def analytic_trace(params, max_prefix=MAX_PREFIX_LENGTH):
    """
    Returns the MembershipTrace of the specified parameters computed from
    the closed form of E_j. The prefix runs two past the start of the tail
    but holds at most max_prefix words; the rest of the trace is described
    by pieces between the change points.
    """
    tail = tail_certificate(params)
    j0 = tail.get_start()
    pieces = _analytic_pieces(params, j0) if j0 > 0 else []
    n = min(j0 + 2, max_prefix)
    values = [acceptance_value(params.value_at(j)) for j in range(n)]
    prefix = [v > params.get_cutpoint() for v in values]
    try:
        return MembershipTrace(prefix, tail, values, pieces)
    except ValueError as e:
        raise ClassificationError(
            "closed form contradicts its change points: {0}".format(e))


def _machine_tail(M, spec):
    c = spec.get_comparison()
    lam = spec.get_cutpoint()
    if c != Comparison.STRICTLY_GREATER or \
            linalg.scalar_mode(lam) != RATIONAL or \
            not isinstance(M, Afa):
        return None
    if lam == 1:
        return ConstantFrom(0, False)
    try:
        params = params_from_machine(M, lam)
    except PreconditionError:
        return None
    return tail_certificate(params)


def enumerate_trace(M, spec, max_len, tol=None, analytic_tail=True):
    """
    Returns the MembershipTrace of the unary machine M under the
    specified CutpointSpec, deciding a^0, ..., a^max_len by running M.
    When M is a rational 2-state Afa and the cutpoint comparison is
    STRICTLY_GREATER, the tail comes from tail_certificate if it starts
    within the prefix; otherwise the tail is marked as not certified.
    """
    if not M.is_unary():
        raise PreconditionError("enumerate needs a unary machine, not one "
                "over '{0}'".format("".join(M.get_alphabet())))
    if max_len < 0:
        raise PreconditionError("the maximum length must be nonnegative")
    symbol = M.get_alphabet()[0]
    values = list(M.power_values(symbol, max_len))
    prefix = [spec.decide(v, tol) for v in values]
    tail = None
    if analytic_tail:
        tail = _machine_tail(M, spec)
        if tail is not None and tail.get_start() > max_len:
            tail = None
    if tail is None:
        tail = ConstantFrom(max_len + 1, None)
    try:
        return MembershipTrace(prefix, tail, values)
    except ValueError as e:
        raise ClassificationError(
            "direct evaluation contradicts the certified tail: {0}".format(e))


class CatalogEntry(object):
    """
    A unary language of the form X, X & P, ~(X & P) and so on: a base
    language X (possibly negated), an optional parity filter P and an
    optional complement of the whole. The bases are EMPTY, ALL, LESS(n)
    = {a^j : j <= n}, INTERVAL(k, l) = {a^j : k <= j <= l} and
    STAGGERED(n, m) = LESS(n) | (LESS(m) & parity of m), which arises from
    alternating trajectories.
    """
    EMPTY = "empty"
    ALL = "all"
    LESS = "less"
    INTERVAL = "interval"
    STAGGERED = "staggered"
    BASES = (EMPTY, ALL, LESS, INTERVAL, STAGGERED)
    EVEN = "even"
    ODD = "odd"
    PARITIES = (None, EVEN, ODD)

    def __init__(self, base, params=(), parity=None, complemented=False,
            negated_base=False):
        if base not in self.BASES:
            raise ValueError("unknown base language '{0}'".format(base))
        if parity not in self.PARITIES:
            raise ValueError("unknown parity '{0}'".format(parity))
        params = tuple(int(x) for x in params)
        arity = {self.EMPTY: 0, self.ALL: 0, self.LESS: 1, self.INTERVAL: 2,
                self.STAGGERED: 2}[base]
        if len(params) != arity:
            raise ValueError("{0} takes {1} parameters".format(base, arity))
        if base == self.LESS and params[0] < 0:
            raise ValueError("LESS(n) needs n >= 0")
        if base == self.INTERVAL and not 1 <= params[0] <= params[1]:
            raise ValueError("INTERVAL(k, l) needs 1 <= k <= l")
        if base == self.STAGGERED:
            n, m = params
            if n < 1 or m < n + 2 or (m - n) % 2 != 0:
                raise ValueError("STAGGERED(n, m) needs n >= 1 and m - n "
                        "even and at least 2")
        complemented = bool(complemented)
        negated_base = bool(negated_base)
        if base in (self.EMPTY, self.ALL) and negated_base:
            base = self.ALL if base == self.EMPTY else self.EMPTY
            negated_base = False
        if base == self.EMPTY:
            parity = None
        if parity is None and negated_base:
            negated_base = False
            complemented = not complemented
        if complemented and base in (self.EMPTY, self.ALL):
            if parity is None:
                base = self.ALL if base == self.EMPTY else self.EMPTY
            else:
                parity = self.ODD if parity == self.EVEN else self.EVEN
            complemented = False
        self.__base = base
        self.__params = params
        self.__parity = parity
        self.__complemented = complemented
        self.__negated_base = negated_base

    def __key(self):
        return (self.__base, self.__params, self.__parity,
                self.__complemented, self.__negated_base)

    def __eq__(self, other):
        return isinstance(other, CatalogEntry) and \
                self.__key() == other._CatalogEntry__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.__key())

    def __repr__(self):
        return "CatalogEntry({0!r})".format(str(self))

    def __str__(self):
        s = self.__base.upper()
        if self.__params:
            s += "({0})".format(",".join(str(x) for x in self.__params))
        if self.__negated_base:
            s = "~" + s
        if self.__parity is not None:
            s = "{0} & {1}".format(s, self.__parity.upper())
        if self.__complemented:
            s = "~({0})".format(s)
        return s

    def get_base(self):
        return self.__base

    def get_params(self):
        return self.__params

    def get_parity(self):
        return self.__parity

    def is_complemented(self):
        return self.__complemented

    def is_negated_base(self):
        return self.__negated_base

    @property
    def classic(self):
        """
        True for the base families with proper intervals; False for
        singleton intervals and the STAGGERED family.
        """
        if self.__base == self.STAGGERED:
            return False
        if self.__base == self.INTERVAL:
            return self.__params[0] < self.__params[1]
        return True

    def breakpoints(self):
        """
        Returns the indices at which the base language can change; from
        each of them up to the next, membership depends only on parity.
        """
        p = self.__params
        if self.__base == self.LESS:
            return (p[0] + 1,)
        if self.__base == self.INTERVAL:
            return (p[0], p[1] + 1)
        if self.__base == self.STAGGERED:
            return (p[0] + 1, p[1] + 1)
        return ()

    def _base_contains(self, j):
        b = self.__base
        if b == self.EMPTY:
            return False
        if b == self.ALL:
            return True
        if b == self.LESS:
            return j <= self.__params[0]
        if b == self.INTERVAL:
            return self.__params[0] <= j <= self.__params[1]
        n, m = self.__params
        return j <= n or (j <= m and j % 2 == m % 2)

    def contains(self, j):
        """
        Returns True if a^j is in the language of this entry.
        """
        x = self._base_contains(j)
        if self.__negated_base:
            x = not x
        if self.__parity == self.EVEN:
            x = x and j % 2 == 0
        elif self.__parity == self.ODD:
            x = x and j % 2 == 1
        if self.__complemented:
            x = not x
        return x


def matches(trace, entry):
    """
    Returns True if the eventually periodic language of the trace equals
    the language of the entry. Between consecutive piece starts and
    breakpoints both languages are periodic with period 2, so comparing
    the first two words after each of them decides equality.
    """
    if not trace.is_definite():
        raise IndefiniteTailError(
            "cannot compare a trace without a certified tail")
    points = set([0])
    points.update(start for start, _, _, _ in trace.get_pieces())
    points.update(entry.breakpoints())
    return all(trace.contains(j) == entry.contains(j)
            for p in points for j in (p, p + 1))


def _bit(piece, j):
    return piece[3] if j % 2 else piece[2]


def _merge(runs, bit, n):
    # A length of None is a run that never ends.
    if runs and runs[-1][0] == bit:
        prev = runs[-1][1]
        runs[-1][1] = None if prev is None or n is None else prev + n
    else:
        runs.append([bit, n])


def _parity_count(start, stop, offset):
    if stop is None:
        return None
    return (stop - offset + 1) // 2 - (start - offset + 1) // 2


def _word_runs(pieces):
    """
    Returns the runs of equal membership as [bit, length] pairs, or None
    if there are more than three.
    """
    runs = []
    for piece in pieces:
        start, stop = piece[0], piece[1]
        if piece[2] == piece[3] or stop == start + 1:
            _merge(runs, _bit(piece, start),
                    None if stop is None else stop - start)
        elif stop is None or stop - start > 3:
            return None
        else:
            for j in range(start, stop):
                _merge(runs, _bit(piece, j), 1)
        if len(runs) > 3:
            return None
    return runs


def _class_runs(pieces, offset):
    """
    Returns the runs of the words a^j with j = offset mod 2, counted
    within that class, or None if there are more than three.
    """
    runs = []
    for piece in pieces:
        n = _parity_count(piece[0], piece[1], offset)
        if n == 0:
            continue
        _merge(runs, piece[3] if offset else piece[2], n)
        if len(runs) > 3:
            return None
    return runs


def _lead_run(pieces):
    first = _bit(pieces[0], 0)
    for piece in pieces:
        start, stop = piece[0], piece[1]
        for j in (start, start + 1):
            if (stop is None or j < stop) and _bit(piece, j) != first:
                return first, j
    return first, None


def _last_other(pieces, bit):
    for piece in reversed(pieces[:-1]):
        for j in (piece[1] - 1, piece[1] - 2):
            if j >= piece[0] and _bit(piece, j) != bit:
                return j
    return None


def _runs_to_base(runs, index):
    """
    Returns (base, params, negated) for a run pattern whose final run
    continues forever, with index mapping run positions to word lengths,
    or None if the pattern has more than three runs.
    """
    pattern = tuple(b for b, _ in runs)
    lengths = [n for _, n in runs]
    E = CatalogEntry
    if len(runs) == 1:
        return (E.ALL if pattern[0] else E.EMPTY), (), False
    if pattern == (True, False):
        return E.LESS, (index(lengths[0] - 1),), False
    if pattern == (False, True):
        return E.LESS, (index(lengths[0] - 1),), True
    if len(runs) == 3:
        x, y = lengths[0], lengths[1]
        params = (index(x), index(x + y - 1))
        return E.INTERVAL, params, pattern == (True, False, True)
    return None


def _candidates(trace):
    pieces = trace.get_pieces()
    tail = trace.get_tail()
    E = CatalogEntry
    if isinstance(tail, ConstantFrom):
        runs = _word_runs(pieces)
        if runs is not None:
            base, params, negated = _runs_to_base(runs, lambda i: i)
            yield E(base, params, complemented=negated)
    for parity, offset in ((E.EVEN, 0), (E.ODD, 1)):
        other = set(piece[2] if offset else piece[3] for piece in pieces
                if _parity_count(piece[0], piece[1], 1 - offset) != 0)
        if len(other) != 1:
            continue
        c = other.pop()
        runs = _class_runs(pieces, offset)
        found = None if runs is None else \
                _runs_to_base(runs, lambda i, o=offset: 2 * i + o)
        if found is None:
            continue
        base, params, negated = found
        if c:
            yield E(base, params, parity, True, not negated)
        else:
            yield E(base, params, parity, False, negated)
    if isinstance(tail, ConstantFrom):
        c = tail.get_bit()
        lead, length = _lead_run(pieces)
        if lead != c:
            last = _last_other(pieces, c)
            try:
                yield E(E.STAGGERED, (length - 1, last), complemented=c)
            except ValueError:
                pass


def catalog_entry(trace):
    """
    Returns the CatalogEntry denoting the language of the specified trace,
    which must have a certified tail. Raises CatalogError when the language
    is outside the catalog.
    """
    if not trace.is_definite():
        raise IndefiniteTailError(
            "cannot name the language of a trace without a certified tail")
    for entry in _candidates(trace):
        if matches(trace, entry):
            return entry
    raise CatalogError("the language {0}... with tail {1!r} is not in the "
            "catalog".format(trace.bits(), trace.get_tail()))


def t_regime(params):
    """
    Returns the label of the range of t = 1 - p - q, or None when p + q = 0
    or C = 0.
    """
    if params.is_linear() or params.get_C() == 0:
        return None
    t = params.get_t()
    if t == 0:
        return "0"
    if 0 < t < 1:
        return "(0,1)"
    if t > 1:
        return ">1"
    if -1 < t < 0:
        return "(-1,0)"
    if t == -1:
        return "-1"
    return "<-1"


def linear_branch(params):
    """
    Returns the label of the case the parameters fall in when p + q = 0
    and C != 0: the position of F relative to the boundaries of the accept
    region, and the sign of C where it matters. Returns None otherwise.
    """
    if not params.is_linear() or params.get_C() == 0:
        return None
    lam = params.get_cutpoint()
    F = params.get_F()
    sign = "C<0" if params.get_C() < 0 else "C>0"
    if lam < HALF:
        a = lam / (2 * lam - 1)
        if F < a:
            region = "F<a"
        elif F == a:
            region = "F=a"
        elif F < lam:
            return "lambda<1/2, a<F<lambda"
        elif F == lam:
            region = "F=lambda"
        else:
            region = "F>lambda"
        return "lambda<1/2, {0}, {1}".format(region, sign)
    if lam == HALF:
        region = "F<=lambda" if F <= lam else "F>lambda"
        return "lambda=1/2, {0}, {1}".format(region, sign)
    b = lam / (2 * lam - 1)
    if F <= lam:
        region = "F<=lambda"
    elif F < b:
        return "lambda>1/2, lambda<F<b"
    elif F == b:
        region = "F=b"
    else:
        region = "F>b"
    return "lambda>1/2, {0}, {1}".format(region, sign)


class Classification(object):
    """
    The result of classify: the catalog entry, the certified trace it was
    read from, and the case labels of the parameters.
    """
    def __init__(self, params, entry, trace, regime, branch, check_length):
        self.__params = params
        self.__entry = entry
        self.__trace = trace
        self.__regime = regime
        self.__branch = branch
        self.__check_length = check_length

    def __repr__(self):
        return "Classification({0}, regime={1!r}, branch={2!r})".format(
            self.__entry, self.__regime, self.__branch)

    @property
    def entry(self):
        return self.__entry

    def get_params(self):
        return self.__params

    def get_entry(self):
        return self.__entry

    def get_trace(self):
        return self.__trace

    def get_regime(self):
        return self.__regime

    def get_branch(self):
        return self.__branch

    def get_check_length(self):
        return self.__check_length


def classify(params, check=True):
    """
    Returns the Classification of the language recognised by the machine
    of the specified parameters with cutpoint params.get_cutpoint(). Unless
    check is False the result is compared with direct evaluation of the
    machine on a^0, ..., a^L, where L runs three past the start of the
    tail within [MIN_CHECK_LENGTH, DEFAULT_CHECK_LENGTH]; any
    disagreement raises ClassificationError.
    """
    trace = analytic_trace(params)
    entry = catalog_entry(trace)
    j0 = trace.get_tail().get_start()
    length = min(max(j0 + 3, MIN_CHECK_LENGTH), DEFAULT_CHECK_LENGTH)
    if check:
        oracle = enumerate_trace(params.machine(), params.cutpoint_spec(),
                length, analytic_tail=False)
        for j in range(length + 1):
            if oracle.contains(j) != trace.contains(j):
                raise ClassificationError(
                    "{0!r}: classified as {1} but a^{2} is {3}".format(
                        params, entry, j,
                        "accepted" if oracle.contains(j) else "rejected"))
        logger.debug("classify %r -> %s, checked to %d", params, entry,
                length)
    return Classification(params, entry, trace, t_regime(params),
            linear_branch(params), length)


class BranchCoverage(object):
    """
    Counts how often each p + q = 0 case and each range of t was seen.
    """
    def __init__(self):
        self.__branches = collections.Counter()
        self.__regimes = collections.Counter()

    def record(self, classification):
        branch = classification.get_branch()
        if branch is not None:
            self.__branches[branch] += 1
        regime = classification.get_regime()
        if regime is not None:
            self.__regimes[regime] += 1

    def get_branch_counts(self):
        return collections.OrderedDict(
            (b, self.__branches[b]) for b in LINEAR_BRANCHES)

    def get_regime_counts(self):
        return collections.OrderedDict(
            (r, self.__regimes[r]) for r in T_REGIMES)

    def missing_branches(self):
        return [b for b in LINEAR_BRANCHES if self.__branches[b] == 0]

    def missing_regimes(self):
        return [r for r in T_REGIMES if self.__regimes[r] == 0]

    def is_complete(self):
        return not self.missing_branches() and not self.missing_regimes()


def targeted_params():
    """
    Returns a list of parameters hitting every case of LINEAR_BRANCHES
    and T_REGIMES, plus the interval, parity and staggered examples.
    """
    out = []
    step = Fraction(1, 8)
    third = Fraction(1, 4)
    # With f1 = 1 and f2 = 0, F = m and C = p.
    positions = [
        (Fraction(1, 4), [-1, Fraction(-1, 2), 0, Fraction(1, 4), 1]),
        (HALF, [0, 1]),
        (Fraction(3, 4), [0, 1, Fraction(3, 2), 2]),
    ]
    for lam, ms in positions:
        for m in ms:
            for p in (-step, step):
                out.append(UnaryParams(p, -p, 1, 0, m, lam))
    for s in (third, -third, Fraction(3, 4), 1, Fraction(3, 2), HALF):
        out.append(UnaryParams(s, s, 1, 0, 2, Fraction(1, 4)))
    out.append(UnaryParams(0, 0, 1, 1, 0, HALF))
    out.append(UnaryParams(-step, step, 1, 0, Fraction(7, 4),
        Fraction(3, 4)))
    out.append(UnaryParams(0, Fraction(21, 10), 1, 0, HALF, Fraction(3, 4)))
    out.append(UnaryParams(Fraction(9, 40), Fraction(51, 40), 1, 0,
        Fraction(51, 20), Fraction(1, 4)))
    return out


def _random_rational(rng, span=3, max_den=4):
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-span * den, span * den), den)


def random_params(rng, lambdas=DEFAULT_LAMBDAS):
    """
    Returns random parameters with entries in [-3, 3]. One draw in four
    forces p + q = 0 so the linear cases are sampled as well.
    """
    p, q, f1, f2, m = [_random_rational(rng) for _ in range(5)]
    if rng.random() < 0.25:
        q = -p
    return UnaryParams(p, q, f1, f2, m, rng.choice(list(lambdas)))


class SweepResult(object):
    """
    The outcome of a sweep: branch coverage, and how classify compared to
    the enumerated traces.
    """
    def __init__(self):
        self.coverage = BranchCoverage()
        self.total = 0
        self.agreements = 0
        self.indefinite = 0
        self.outside_classic = 0
        self.disagreements = []
        self.entries = collections.Counter()

    def __repr__(self):
        return "SweepResult(total={0}, agreements={1}, indefinite={2}, " \
                "disagreements={3})".format(self.total, self.agreements,
                        self.indefinite, len(self.disagreements))


def sweep(count=DEFAULT_SWEEP_COUNT, rng=None, lambdas=DEFAULT_LAMBDAS,
        max_len=DEFAULT_SWEEP_LENGTH, targeted=True, monitor=None):
    """
    Classifies count random parameter tuples (after the targeted ones, if
    requested) and compares every classification with the trace
    enumerated to max_len. Returns a SweepResult. The monitor, if given,
    is updated with the number of tuples processed.
    """
    if rng is None:
        rng = random.Random(zoo.get_default_seed())
    tuples = targeted_params() if targeted else []
    tuples += [random_params(rng, lambdas) for _ in range(count)]
    result = SweepResult()
    for params in tuples:
        classification = classify(params)
        entry = classification.entry
        result.total += 1
        result.coverage.record(classification)
        result.entries[str(entry)] += 1
        if not entry.classic:
            result.outside_classic += 1
        trace = enumerate_trace(params.machine(), params.cutpoint_spec(),
                max_len)
        if trace.is_definite():
            agree = matches(trace, entry)
        else:
            # The tail starts past max_len; only the prefix can be compared.
            result.indefinite += 1
            agree = all(trace.contains(j) == entry.contains(j)
                    for j in range(max_len + 1))
        if agree:
            result.agreements += 1
        else:
            result.disagreements.append(params)
        if monitor is not None:
            monitor.update(result.total)
    logger.info("sweep: %r", result)
    return result
