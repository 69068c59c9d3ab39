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
Tests for the classification of 2-state unary Afa languages.
"""
from __future__ import print_function
from __future__ import division

import random
import unittest
from fractions import Fraction

import afalab.automata as am
import afalab.unary as un
import afalab.zoo as zoo
from afalab.automata import Afa
from afalab.automata import CutpointSpec
from afalab.unary import CatalogEntry
from afalab.unary import ConstantFrom
from afalab.unary import Period2From
from afalab.unary import MembershipTrace
from afalab.unary import UnaryParams
from afalab.exceptions import CatalogError
from afalab.exceptions import IndefiniteTailError
from afalab.exceptions import PreconditionError

# module variables used to control the number of tests that we do.
num_sweep_tuples = 500
sweep_seed = 1
sweep_length = 200

E = CatalogEntry


def interval_params():
    return UnaryParams(Fraction(-1, 8), Fraction(1, 8), 1, 0, Fraction(7, 4),
            Fraction(3, 4))


def interval_even_params():
    return UnaryParams(0, Fraction(21, 10), 1, 0, Fraction(1, 2),
            Fraction(3, 4))


def staggered_params():
    return UnaryParams(Fraction(9, 40), Fraction(51, 40), 1, 0,
            Fraction(51, 20), Fraction(1, 4))


class AcceptRegionTest(unittest.TestCase):
    """
    Tests for the accept value of 2-state configurations.
    """
    def test_acceptance_value(self):
        cases = [
            (1, 1), (0, 0), (Fraction(1, 2), Fraction(1, 2)),
            (Fraction(3, 2), Fraction(3, 4)), (-1, Fraction(1, 3)),
            (2, Fraction(2, 3)), (Fraction(-1, 2), Fraction(1, 4))]
        for x, expected in cases:
            self.assertEqual(un.acceptance_value(Fraction(x)), expected)

    def test_matches_weighting(self):
        for k in range(-12, 13):
            x = Fraction(k, 4)
            config = [abs(x), abs(1 - x)]
            self.assertEqual(un.acceptance_value(x),
                    config[0] / sum(config))

    def test_bounds(self):
        self.assertEqual(un.accept_region_bounds(Fraction(1, 4)),
                [Fraction(-1, 2), Fraction(1, 4)])
        self.assertEqual(un.accept_region_bounds(Fraction(1, 2)),
                [Fraction(1, 2)])
        self.assertEqual(un.accept_region_bounds(Fraction(3, 4)),
                [Fraction(3, 4), Fraction(3, 2)])
        for lam in [Fraction(1, 4), Fraction(3, 4), Fraction(2, 3)]:
            lo, hi = un.accept_region_bounds(lam)
            for k in range(-40, 41):
                x = Fraction(k, 8)
                inside = lo <= x <= hi
                if lam < Fraction(1, 2):
                    self.assertEqual(un.acceptance_value(x) > lam,
                            not inside)
                else:
                    self.assertEqual(un.acceptance_value(x) > lam,
                            lo < x < hi)


class UnaryParamsTest(unittest.TestCase):
    """
    Tests for the closed form of the first configuration entry.
    """
    def test_derived_linear(self):
        P = interval_params()
        self.assertTrue(P.is_linear())
        self.assertIsNone(P.get_t())
        self.assertEqual(P.get_F(), Fraction(7, 4))
        self.assertEqual(P.get_C(), Fraction(-1, 8))
        self.assertEqual(P.value_at(3), Fraction(11, 8))

    def test_derived_geometric(self):
        P = staggered_params()
        self.assertFalse(P.is_linear())
        self.assertEqual(P.get_r(), Fraction(3, 20))
        self.assertEqual(P.get_t(), Fraction(-1, 2))
        self.assertEqual(P.get_c(), Fraction(12, 5))
        self.assertEqual(P.get_F(), Fraction(3, 20))
        self.assertEqual(P.get_C(), Fraction(12, 5))

    def test_value_matches_machine(self):
        rng = random.Random(3)
        examples = [interval_params(), interval_even_params(),
                staggered_params()]
        examples += [un.random_params(rng) for _ in range(30)]
        for P in examples:
            M = P.machine()
            for j in range(12):
                v = am.final_configuration(M, "a" * j)
                self.assertEqual(v[0], P.value_at(j))
                self.assertEqual(am.run_afa(M, "a" * j),
                        un.acceptance_value(P.value_at(j)))

    def test_fixed_point(self):
        P = UnaryParams(Fraction(1, 4), Fraction(1, 3), 1, 0, 0)
        r = P.get_r()
        M = zoo.two_state_unary_afa(P.get_p(), P.get_q(), 1, 0, r)
        for j in range(6):
            self.assertEqual(am.final_configuration(M, "a" * j)[0], r)

    def test_bad_params(self):
        self.assertRaises(PreconditionError, UnaryParams, 0.1, 0, 1, 0, 1)
        self.assertRaises(PreconditionError, UnaryParams, 0, 0, 1, 0, 1, 1)
        self.assertRaises(PreconditionError, UnaryParams, 0, 0, 1, 0, 1,
                Fraction(-1, 4))

    def test_params_from_machine(self):
        P = un.params_from_machine(zoo.count_afa(3))
        self.assertEqual(P.as_tuple(), (0, Fraction(1, 2), 1, 0, 8,
            Fraction(1, 2)))
        P = un.params_from_machine(zoo.interval_afa(3, 7), Fraction(3, 4))
        self.assertEqual(P.as_tuple(), interval_params().as_tuple())
        self.assertRaises(PreconditionError, un.params_from_machine,
                zoo.mod4k_afa(1))
        self.assertRaises(PreconditionError, un.params_from_machine,
                zoo.count_product_afa(2, 2))

    def test_params_from_machine_accept_sets(self):
        base = zoo.interval_afa(3, 7)
        lam = Fraction(3, 4)
        for accept in [[1], [], [0, 1]]:
            M = Afa(["a"], base.get_transitions(), 0, accept)
            P = un.params_from_machine(M, lam)
            for j, x in enumerate(M.power_values("a", 15)):
                self.assertEqual(x, un.acceptance_value(P.value_at(j)))


class TraceTest(unittest.TestCase):
    """
    Tests for membership traces and their tails.
    """
    def test_tails(self):
        tail = ConstantFrom(3, True)
        self.assertTrue(tail.is_definite())
        self.assertTrue(tail.bit_at(100))
        self.assertEqual(tail, ConstantFrom(3, True))
        self.assertNotEqual(tail, ConstantFrom(3, False))
        tail = ConstantFrom(3, None)
        self.assertFalse(tail.is_definite())
        self.assertRaises(IndefiniteTailError, tail.bit_at, 4)
        tail = Period2From(2, True, False)
        self.assertTrue(tail.bit_at(10))
        self.assertFalse(tail.bit_at(11))

    def test_trace(self):
        trace = MembershipTrace([0, 1, 1, 0, 1], Period2From(3, True,
            False))
        self.assertEqual(trace.bits(), "01101")
        self.assertEqual(trace.get_length(), 4)
        self.assertTrue(trace.contains(1))
        self.assertTrue(trace.contains(8))
        self.assertFalse(trace.contains(7))
        self.assertIsNone(trace.get_values())

    def test_trace_invariants(self):
        self.assertRaises(ValueError, MembershipTrace, [1, 1],
                ConstantFrom(3, True))
        self.assertRaises(ValueError, MembershipTrace, [1, 1, 0],
                ConstantFrom(1, True))
        trace = MembershipTrace([1, 1, 0], ConstantFrom(3, None))
        self.assertFalse(trace.is_definite())
        self.assertRaises(IndefiniteTailError, trace.contains, 3)

    def test_tail_certificates(self):
        self.assertEqual(un.tail_certificate(interval_params()),
                ConstantFrom(9, False))
        self.assertEqual(un.tail_certificate(interval_even_params()),
                ConstantFrom(12, False))
        self.assertEqual(un.tail_certificate(staggered_params()),
                ConstantFrom(5, False))
        period = UnaryParams(1, 1, 1, 0, 2, Fraction(1, 2))
        self.assertEqual(un.tail_certificate(period),
                Period2From(0, True, False))

    def test_analytic_trace(self):
        trace = un.analytic_trace(interval_params())
        self.assertEqual(trace.bits(), "00011111000")
        self.assertEqual(trace.get_values()[2], Fraction(3, 4))
        self.assertEqual(trace.get_values()[7], Fraction(7, 8))
        self.assertEqual(un.analytic_trace(staggered_params()).bits(),
                "1110100")

    def test_pieces(self):
        pieces = [(0, True, True), (4, False, True)]
        trace = MembershipTrace([1, 1], ConstantFrom(9, False), None, pieces)
        self.assertEqual(trace.get_length(), 1)
        self.assertTrue(trace.contains(3))
        self.assertFalse(trace.contains(4))
        self.assertTrue(trace.contains(7))
        self.assertFalse(trace.contains(8))
        self.assertFalse(trace.contains(9))
        self.assertEqual(trace.get_pieces(), [(0, 4, True, True),
            (4, 9, False, True), (9, None, False, False)])
        bad = [[(1, True, True)], [(0, True, True), (9, False, False)],
                [(0, True, True), (4, True, True), (2, False, False)],
                [(0, False, False)]]
        for pieces in bad:
            self.assertRaises(ValueError, MembershipTrace, [1, 1],
                    ConstantFrom(9, False), None, pieces)
        trace = MembershipTrace([], ConstantFrom(0, True), None, [])
        self.assertEqual(trace.get_pieces(), [(0, None, True, True)])

    def test_change_points(self):
        self.assertEqual(un.change_points(interval_params()), [2, 3, 8, 9])
        self.assertEqual(un.change_points(staggered_params()), [3, 6])
        self.assertEqual(un.change_points(UnaryParams(0, 0, 1, 1, 0)), [])
        P = UnaryParams(Fraction(-1, 10 ** 9), Fraction(1, 10 ** 9), 1, 0,
                Fraction(3, 2), Fraction(3, 4))
        self.assertEqual(un.change_points(P), [1, 750000000, 750000001])

    def test_long_analytic_trace(self):
        P = UnaryParams(Fraction(-1, 10 ** 12), Fraction(1, 10 ** 12), 1, 0,
                Fraction(3, 2), Fraction(3, 4))
        trace = un.analytic_trace(P)
        self.assertEqual(trace.get_tail(), ConstantFrom(750000000001, False))
        self.assertEqual(len(trace.get_values()), un.MAX_PREFIX_LENGTH)
        self.assertEqual(trace.bits(), "0" + "1" * (un.MAX_PREFIX_LENGTH - 1))
        self.assertTrue(trace.contains(749999999999))
        self.assertFalse(trace.contains(750000000000))
        short = un.analytic_trace(interval_params(), max_prefix=4)
        self.assertEqual(short.bits(), "0001")
        self.assertTrue(short.contains(7))
        self.assertFalse(short.contains(8))


class EnumerateTest(unittest.TestCase):
    """
    Tests the direct evaluation of unary machines.
    """
    def test_count(self):
        spec = CutpointSpec(Fraction(3, 4))
        trace = un.enumerate_trace(zoo.count_afa(3), spec, 10)
        self.assertEqual(trace.bits(), "00010000000")
        self.assertEqual(trace.get_tail(), ConstantFrom(4, False))
        self.assertFalse(trace.contains(1000))

    def test_interval(self):
        spec = CutpointSpec(Fraction(3, 4))
        trace = un.enumerate_trace(zoo.interval_afa(3, 7), spec, 12)
        self.assertEqual(trace.bits(), "0001111100000")
        self.assertTrue(trace.is_definite())
        self.assertEqual(len(trace.get_values()), 13)

    def test_constant(self):
        M = zoo.two_state_unary_afa(0, 0, 1, 0, 1)
        for lam in [0, Fraction(1, 2), Fraction(99, 100)]:
            trace = un.enumerate_trace(M, CutpointSpec(lam), 5)
            self.assertEqual(trace.bits(), "111111")
            self.assertEqual(trace.get_tail(), ConstantFrom(0, True))

    def test_cutpoint_one(self):
        trace = un.enumerate_trace(zoo.count_afa(3), CutpointSpec(1), 5)
        self.assertEqual(trace.bits(), "000000")
        self.assertTrue(trace.is_definite())

    def test_tail_beyond_prefix(self):
        spec = CutpointSpec(Fraction(3, 4))
        trace = un.enumerate_trace(zoo.interval_afa(3, 7), spec, 5)
        self.assertEqual(trace.bits(), "000111")
        self.assertEqual(trace.get_tail(), ConstantFrom(6, None))
        self.assertRaises(IndefiniteTailError, trace.contains, 6)
        trace = un.enumerate_trace(zoo.interval_afa(3, 7), spec, 12,
                analytic_tail=False)
        self.assertFalse(trace.is_definite())

    def test_other_models(self):
        trace = un.enumerate_trace(zoo.mod2k_mcqfa(1), CutpointSpec(
            Fraction(1, 2)), 8, tol=1e-9)
        self.assertEqual(trace.bits(), "100010001")
        self.assertFalse(trace.is_definite())
        spec = CutpointSpec(Fraction(2, 3), "eq")
        trace = un.enumerate_trace(zoo.count_afa(3), spec, 5)
        self.assertEqual(trace.bits(), "001000")
        self.assertFalse(trace.is_definite())

    def test_preconditions(self):
        spec = CutpointSpec(Fraction(1, 2))
        M = zoo.random_afa(random.Random(1), 2)
        self.assertRaises(PreconditionError, un.enumerate_trace, M, spec, 4)
        self.assertRaises(PreconditionError, un.enumerate_trace,
                zoo.count_afa(3), spec, -1)


class CatalogTest(unittest.TestCase):
    """
    Tests for catalog entries and matching them against traces.
    """
    def test_canonical_forms(self):
        self.assertEqual(E(E.EMPTY, negated_base=True), E(E.ALL))
        self.assertEqual(E(E.ALL, complemented=True), E(E.EMPTY))
        self.assertEqual(E(E.EMPTY, parity=E.EVEN), E(E.EMPTY))
        self.assertEqual(E(E.ALL, parity=E.EVEN, complemented=True),
                E(E.ALL, parity=E.ODD))
        self.assertEqual(E(E.LESS, (3,), negated_base=True),
                E(E.LESS, (3,), complemented=True))
        self.assertEqual(len(set([E(E.ALL), E(E.EMPTY, negated_base=True),
            E(E.EMPTY, complemented=True)])), 1)

    def test_names(self):
        self.assertEqual(str(E(E.INTERVAL, (3, 7))), "INTERVAL(3,7)")
        self.assertEqual(str(E(E.LESS, (3,), E.EVEN, negated_base=True)),
                "~LESS(3) & EVEN")
        self.assertEqual(str(E(E.LESS, (2,), E.ODD, complemented=True)),
                "~(LESS(2) & ODD)")
        self.assertEqual(str(E(E.LESS, (3,), complemented=True)),
                "~(LESS(3))")
        self.assertEqual(str(E(E.ALL, parity=E.EVEN)), "ALL & EVEN")
        self.assertEqual(str(E(E.STAGGERED, (2, 4))), "STAGGERED(2,4)")

    def test_contains(self):
        entry = E(E.LESS, (3,), E.EVEN, negated_base=True)
        self.assertEqual([j for j in range(10) if entry.contains(j)],
                [4, 6, 8])
        entry = E(E.INTERVAL, (2, 5), E.ODD, complemented=True)
        self.assertEqual([j for j in range(8) if entry.contains(j)],
                [0, 1, 2, 4, 6, 7])
        entry = E(E.STAGGERED, (2, 6))
        self.assertEqual([j for j in range(10) if entry.contains(j)],
                [0, 1, 2, 4, 6])

    def test_classic(self):
        self.assertTrue(E(E.INTERVAL, (3, 4)).classic)
        self.assertFalse(E(E.INTERVAL, (3, 3)).classic)
        self.assertFalse(E(E.STAGGERED, (1, 3)).classic)
        self.assertTrue(E(E.LESS, (0,), E.ODD).classic)

    def test_bad_entries(self):
        bad = [
            ("bogus", ()), (E.LESS, ()), (E.LESS, (-1,)),
            (E.INTERVAL, (0, 2)), (E.INTERVAL, (3, 2)),
            (E.STAGGERED, (2, 3)), (E.STAGGERED, (0, 2)),
            (E.STAGGERED, (2, 2))]
        for base, params in bad:
            self.assertRaises(ValueError, E, base, params)
        self.assertRaises(ValueError, E, E.ALL, (), "triple")

    def test_matches(self):
        trace = un.analytic_trace(interval_params())
        self.assertTrue(un.matches(trace, E(E.INTERVAL, (3, 7))))
        self.assertFalse(un.matches(trace, E(E.INTERVAL, (3, 8))))
        self.assertFalse(un.matches(trace, E(E.INTERVAL, (3, 7),
            complemented=True)))
        indefinite = MembershipTrace([0, 1], ConstantFrom(2, None))
        self.assertRaises(IndefiniteTailError, un.matches, indefinite,
                E(E.ALL))

    def test_catalog_entry(self):
        trace = MembershipTrace([1, 0, 1, 0, 1, 0], Period2From(0, True,
            False))
        self.assertEqual(un.catalog_entry(trace), E(E.ALL, parity=E.EVEN))
        trace = MembershipTrace([0, 0, 1, 1, 1], ConstantFrom(2, True))
        self.assertEqual(un.catalog_entry(trace), E(E.LESS, (1,),
            complemented=True))
        trace = MembershipTrace([0, 1, 0, 1, 0, 0, 0],
                ConstantFrom(5, False))
        self.assertEqual(un.catalog_entry(trace), E(E.LESS, (3,),
            E.ODD))
        outside = MembershipTrace([1, 0, 0, 1, 1, 0, 1, 0, 0],
                ConstantFrom(7, False))
        self.assertRaises(CatalogError, un.catalog_entry, outside)
        self.assertRaises(IndefiniteTailError, un.catalog_entry,
                MembershipTrace([1], ConstantFrom(1, None)))

    def test_staggered_pieces(self):
        trace = MembershipTrace([1, 1], ConstantFrom(9, False), None,
                [(0, True, True), (4, False, True)])
        entry = un.catalog_entry(trace)
        self.assertEqual(entry, E(E.STAGGERED, (3, 7)))
        self.assertEqual(entry.breakpoints(), (4, 8))
        self.assertTrue(un.matches(trace, entry))
        self.assertFalse(un.matches(trace, E(E.STAGGERED, (3, 9))))
        self.assertEqual(E(E.INTERVAL, (3, 7)).breakpoints(), (3, 8))
        self.assertEqual(E(E.LESS, (2,), E.ODD).breakpoints(), (3,))
        self.assertEqual(E(E.ALL, parity=E.EVEN).breakpoints(), ())


class ClassifyTest(unittest.TestCase):
    """
    Tests the classifier on parameters with known languages.
    """
    def test_interval(self):
        c = un.classify(interval_params())
        self.assertEqual(c.entry, E(E.INTERVAL, (3, 7)))
        self.assertTrue(c.entry.classic)
        self.assertEqual(c.get_branch(), "lambda>1/2, F>b, C<0")
        self.assertIsNone(c.get_regime())
        self.assertEqual(c.get_trace().get_tail().get_start(), 9)
        self.assertEqual(c.get_check_length(), 12)

    def test_interval_even(self):
        c = un.classify(interval_even_params())
        self.assertEqual(str(c.entry), "INTERVAL(6,10) & EVEN")
        self.assertEqual(c.get_regime(), "<-1")
        self.assertIsNone(c.get_branch())
        spec = CutpointSpec(Fraction(3, 4))
        trace = un.enumerate_trace(interval_even_params().machine(), spec,
                200)
        self.assertTrue(un.matches(trace, c.entry))

    def test_staggered(self):
        c = un.classify(staggered_params())
        self.assertEqual(c.entry, E(E.STAGGERED, (2, 4)))
        self.assertFalse(c.entry.classic)
        self.assertEqual(c.get_regime(), "(-1,0)")

    def test_count(self):
        P = un.params_from_machine(zoo.count_afa(3), Fraction(2, 3))
        c = un.classify(P)
        self.assertEqual(str(c.entry), "INTERVAL(3,3)")
        self.assertEqual(c.get_regime(), "(0,1)")

    def test_less(self):
        for n in range(5):
            P = un.params_from_machine(zoo.less_afa(n), Fraction(3, 4))
            c = un.classify(P)
            self.assertEqual(c.entry, E(E.LESS, (n,)))
            self.assertEqual(c.get_branch(), "lambda>1/2, lambda<F<b")

    def test_constant(self):
        c = un.classify(UnaryParams(0, 0, 1, 1, 0))
        self.assertEqual(c.entry, E(E.ALL))
        self.assertIsNone(c.get_branch())
        self.assertIsNone(c.get_regime())
        c = un.classify(UnaryParams(0, 0, 0, 0, 5, Fraction(1, 4)))
        self.assertEqual(c.entry, E(E.EMPTY))

    def test_period_two(self):
        c = un.classify(UnaryParams(1, 1, 1, 0, 2, Fraction(1, 2)))
        self.assertEqual(c.entry, E(E.ALL, parity=E.EVEN))
        self.assertEqual(c.get_regime(), "-1")
        c = un.classify(UnaryParams(1, 1, 1, 0, -1, Fraction(1, 2)))
        self.assertEqual(c.entry, E(E.ALL, parity=E.ODD))
        c = un.classify(UnaryParams(1, 1, 1, 0, 2, Fraction(1, 4)))
        self.assertEqual(c.entry, E(E.ALL))

    def test_small_drift(self):
        for e in range(2, 19):
            d = Fraction(1, 10 ** e)
            c = un.classify(UnaryParams(-d, d, 1, 0, Fraction(3, 2),
                Fraction(3, 4)))
            n = 3 * 10 ** e // 4
            self.assertEqual(c.entry, E(E.INTERVAL, (1, n - 1)))
            self.assertEqual(c.get_trace().get_tail(),
                    ConstantFrom(n + 1, False))
            self.assertEqual(c.get_branch(), "lambda>1/2, F=b, C<0")
        self.assertEqual(c.get_check_length(), un.DEFAULT_CHECK_LENGTH)
        self.assertLessEqual(c.get_trace().get_length(),
                un.DEFAULT_CHECK_LENGTH)

    def test_regimes(self):
        expected = {
            Fraction(1, 4): "(0,1)", Fraction(-1, 4): ">1",
            Fraction(3, 4): "(-1,0)", Fraction(1): "-1",
            Fraction(3, 2): "<-1", Fraction(1, 2): "0"}
        for s, label in expected.items():
            P = UnaryParams(s, s, 1, 0, 2, Fraction(1, 4))
            self.assertEqual(un.t_regime(P), label)

    def test_branches(self):
        lam = Fraction(1, 4)
        P = UnaryParams(Fraction(1, 8), Fraction(-1, 8), 1, 0, 0, lam)
        self.assertEqual(un.linear_branch(P), "lambda<1/2, a<F<lambda")
        P = UnaryParams(Fraction(-1, 8), Fraction(1, 8), 1, 0,
                Fraction(-1, 2), lam)
        self.assertEqual(un.linear_branch(P), "lambda<1/2, F=a, C<0")
        P = UnaryParams(Fraction(1, 8), Fraction(-1, 8), 1, 0, 1,
                Fraction(1, 2))
        self.assertEqual(un.linear_branch(P), "lambda=1/2, F>lambda, C>0")
        P = UnaryParams(Fraction(1, 8), Fraction(-1, 8), 1, 0,
                Fraction(3, 2), Fraction(3, 4))
        self.assertEqual(un.linear_branch(P), "lambda>1/2, F=b, C>0")
        self.assertIsNone(un.linear_branch(staggered_params()))

    def test_targeted_coverage(self):
        coverage = un.BranchCoverage()
        self.assertFalse(coverage.is_complete())
        self.assertEqual(len(coverage.missing_branches()),
                len(un.LINEAR_BRANCHES))
        for P in un.targeted_params():
            coverage.record(un.classify(P))
        self.assertEqual(coverage.missing_branches(), [])
        self.assertEqual(coverage.missing_regimes(), [])
        self.assertTrue(coverage.is_complete())
        self.assertEqual(list(coverage.get_regime_counts().keys()),
                list(un.T_REGIMES))


class SweepTest(unittest.TestCase):
    """
    Runs the seeded sweep comparing classify against enumeration.
    """
    def test_sweep(self):
        result = un.sweep(num_sweep_tuples, random.Random(sweep_seed),
                max_len=sweep_length)
        self.assertEqual(result.total,
                num_sweep_tuples + len(un.targeted_params()))
        self.assertEqual(result.disagreements, [])
        self.assertEqual(result.agreements, result.total)
        self.assertTrue(result.coverage.is_complete())
        self.assertGreater(result.outside_classic, 0)
        self.assertEqual(sum(result.entries.values()), result.total)

    def test_monitor(self):
        class Monitor(object):
            def __init__(self):
                self.updates = []

            def update(self, processed):
                self.updates.append(processed)

        monitor = Monitor()
        result = un.sweep(3, random.Random(2), targeted=False, max_len=20,
                monitor=monitor)
        self.assertEqual(monitor.updates, [1, 2, 3])
        self.assertEqual(result.total, 3)

    def test_random_params(self):
        rng = random.Random(4)
        linear = 0
        for _ in range(200):
            P = un.random_params(rng, [Fraction(1, 3)])
            self.assertEqual(P.get_cutpoint(), Fraction(1, 3))
            for x in P.as_tuple()[:5]:
                self.assertTrue(-3 <= x <= 3)
            linear += P.is_linear()
        self.assertGreater(linear, 0)


if __name__ == '__main__':
    unittest.main()
