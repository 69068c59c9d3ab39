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
Tests for the machine models, cutpoint decisions and the JSON format.
"""
from __future__ import print_function
from __future__ import division

import os
import json
import math
import random
import shutil
import tempfile
import unittest
from fractions import Fraction

import afalab.automata as am
import afalab.zoo as zoo
from afalab.linalg import Matrix
from afalab.linalg import Vector
from afalab.linalg import ComplexMatrix
from afalab.linalg import FLOAT
from afalab.automata import Afa
from afalab.automata import Pfa
from afalab.automata import Mcqfa
from afalab.automata import Qfa
from afalab.automata import Gfa
from afalab.automata import Comparison
from afalab.automata import CutpointSpec
from afalab.exceptions import MachineFormatError
from afalab.exceptions import UnknownSymbolError
from afalab.exceptions import PreconditionError

# module variables used to control the number of tests that we do.
num_random_machines = 1000
max_word_length = 6


def unary_transitions(a, cent=None, dollar=None, n=None):
    n = a.get_num_rows() if n is None else n
    I = Matrix.identity(n, a.get_mode())
    return {"^": I if cent is None else cent, "a": a,
            "$": I if dollar is None else dollar}


def leak_pfa():
    """
    A 2-state Pfa leaking a third of the mass of state 0 into the
    absorbing accept state 1 on every a, so f(a^j) = 1 - (2/3)^j.
    """
    a = Matrix([["2/3", 0], ["1/3", 1]])
    return Pfa(["a"], unary_transitions(a), 0, [1])


def damping_qfa():
    """
    A 2-state Qfa moving weight 16/25 of state 0 to state 1 on every a.
    """
    K0 = ComplexMatrix(Matrix([["3/5", 0], [0, 1]]))
    K1 = ComplexMatrix(Matrix([[0, 0], ["4/5", 0]]))
    I = [ComplexMatrix(Matrix.identity(2))]
    return Qfa(["a"], {"^": I, "a": [K0, K1], "$": I}, 0, [0])


def random_word(rng, alphabet):
    return "".join(rng.choice(alphabet)
            for _ in range(rng.randint(0, max_word_length)))


class WordTest(unittest.TestCase):
    """
    Tests for the tape and word enumeration helpers.
    """
    def test_tape(self):
        self.assertEqual(am.tape(""), ["^", "$"])
        self.assertEqual(am.tape("ab"), ["^", "a", "b", "$"])

    def test_words(self):
        self.assertEqual(list(am.words(["b", "a"], 2)),
                ["", "a", "b", "aa", "ab", "ba", "bb"])
        self.assertEqual(len(list(am.words("ab", 8))), 2 ** 9 - 1)
        self.assertEqual(am.unary_words(3), ["", "a", "aa", "aaa"])


class ValidationTest(unittest.TestCase):
    """
    Tests that the constructors refuse machines violating the invariants
    of their model.
    """
    def setUp(self):
        self.affine = Matrix([[2, 0], [-1, 1]])

    def test_alphabet(self):
        t = unary_transitions(self.affine)
        for alphabet in [["^"], ["$"], ["ab"], ["a", "a"], [1]]:
            self.assertRaises(MachineFormatError, Afa, alphabet, t, 0, [0])

    def test_missing_end_marker(self):
        t = unary_transitions(self.affine)
        del t["$"]
        self.assertRaises(MachineFormatError, Afa, ["a"], t, 0, [0])
        t = unary_transitions(self.affine)
        t["b"] = self.affine
        self.assertRaises(MachineFormatError, Afa, ["a"], t, 0, [0])

    def test_start_accept(self):
        t = unary_transitions(self.affine)
        self.assertRaises(MachineFormatError, Afa, ["a"], t, 2, [0])
        self.assertRaises(MachineFormatError, Afa, ["a"], t, -1, [0])
        self.assertRaises(MachineFormatError, Afa, ["a"], t, 0, [5])
        M = Afa(["a"], t, 0, [1, 1, 0])
        self.assertEqual(M.get_accept(), [0, 1])

    def test_matrix_class(self):
        not_affine = Matrix([[1, 0], [1, 1]])
        self.assertRaises(MachineFormatError, Afa, ["a"],
                unary_transitions(not_affine), 0, [0])
        self.assertRaises(MachineFormatError, Pfa, ["a"],
                unary_transitions(self.affine), 0, [0])
        self.assertRaises(MachineFormatError, Mcqfa, ["a"],
                unary_transitions(Matrix([[1, 1], [0, 1]])), 0, [0])

    def test_shape_and_mode(self):
        t = unary_transitions(self.affine)
        t["$"] = Matrix.identity(3)
        self.assertRaises(MachineFormatError, Afa, ["a"], t, 0, [0])
        t = unary_transitions(self.affine)
        t["$"] = Matrix.identity(2, FLOAT)
        self.assertRaises(MachineFormatError, Afa, ["a"], t, 0, [0])
        self.assertRaises(MachineFormatError, Afa, ["a"],
                unary_transitions(self.affine), 0, [0], "complex")

    def test_incomplete_kraus(self):
        K = ComplexMatrix(Matrix([["3/5", 0], [0, 1]]))
        I = [ComplexMatrix(Matrix.identity(2))]
        self.assertRaises(MachineFormatError, Qfa, ["a"],
                {"^": I, "a": [K], "$": I}, 0, [0])
        self.assertRaises(MachineFormatError, Qfa, ["a"],
                {"^": I, "a": [], "$": I}, 0, [0])

    def test_gfa_dimensions(self):
        t = unary_transitions(Matrix([[2]]))
        self.assertRaises(MachineFormatError, Gfa, ["a"], t, Vector([1]),
                Vector([1, 0]))
        self.assertRaises(MachineFormatError, Gfa, ["a"], t, [1], [1])

    def test_unknown_symbol(self):
        M = zoo.count_afa(2)
        self.assertRaises(UnknownSymbolError, am.run_afa, M, "ab")
        self.assertRaises(UnknownSymbolError, am.run_afa, M, "^")

    def test_wrong_model(self):
        P = leak_pfa()
        self.assertRaises(PreconditionError, am.run_afa, P, "a")
        self.assertRaises(PreconditionError, am.run_pfa, zoo.count_afa(2),
                "a")
        self.assertRaises(PreconditionError, am.as_afa, zoo.count_afa(2))
        self.assertRaises(PreconditionError, am.run, "not a machine", "a")


class ValueTest(unittest.TestCase):
    """
    Tests the accept values of small machines against hand computations.
    """
    def test_afa(self):
        M = zoo.count_afa(3)
        self.assertEqual(am.run_afa(M, ""), Fraction(8, 15))
        self.assertEqual(am.run_afa(M, "aa"), Fraction(2, 3))
        self.assertEqual(am.run_afa(M, "aaa"), 1)
        self.assertEqual(am.run_afa(M, "aaaa"), Fraction(1, 2))
        self.assertIsInstance(am.run_afa(M, "a"), Fraction)

    def test_afa_configuration(self):
        M = zoo.count_afa(3)
        v = am.final_configuration(M, "a")
        self.assertEqual(v, Vector([4, -3]))
        configs = list(M.configurations("a"))
        self.assertEqual(len(configs), 4)
        self.assertEqual(configs[0], Vector([1, 0]))
        self.assertEqual(configs[1], Vector([8, -7]))

    def test_pfa(self):
        P = leak_pfa()
        for j in range(6):
            expected = 1 - Fraction(2, 3) ** j
            self.assertEqual(am.run_pfa(P, "a" * j), expected)
            self.assertEqual(am.run_afa(am.as_afa(P), "a" * j), expected)

    def test_mcqfa(self):
        M = zoo.rotation_mcqfa(Fraction(3, 5), Fraction(4, 5))
        self.assertEqual(am.run_mcqfa(M, ""), 1)
        self.assertEqual(am.run_mcqfa(M, "a"), Fraction(9, 25))
        self.assertEqual(am.run_mcqfa(M, "aa"), Fraction(49, 625))

    def test_rotation_afa(self):
        M = zoo.rotation_afa(Fraction(3, 5), Fraction(4, 5))
        self.assertEqual(am.final_configuration(M, "a"),
                Vector(["3/5", "4/5", "-2/5"]))
        self.assertEqual(am.run_afa(M, "a"), Fraction(1, 3))

    def test_qfa(self):
        Q = damping_qfa()
        self.assertEqual(am.run_qfa(Q, ""), 1)
        self.assertEqual(am.run_qfa(Q, "a"), Fraction(9, 25))
        self.assertEqual(am.run_qfa(Q, "aa"), Fraction(81, 625))
        rho = am.final_configuration(Q, "aa")
        self.assertEqual(rho.trace(), (1, 0))

    def test_qfa_imaginary(self):
        X = Matrix([[0, 1], [1, 0]])
        K = ComplexMatrix(Matrix.zeros(2, 2), X)
        I = [ComplexMatrix(Matrix.identity(2))]
        Q = Qfa(["a"], {"^": I, "a": [K], "$": I}, 0, [1])
        self.assertEqual(am.run_qfa(Q, "a"), 1)
        self.assertEqual(am.run_qfa(Q, "aa"), 0)

    def test_gfa(self):
        t = unary_transitions(Matrix([[2]]))
        G = Gfa(["a"], t, Vector([1]), Vector([1]))
        for j in range(5):
            self.assertEqual(am.run_gfa(G, "a" * j), 2 ** j)
        self.assertEqual(am.run(G, "aaa"), 8)

    def test_power_values(self):
        M = zoo.count_afa(3)
        values = list(M.power_values("a", 5))
        self.assertEqual(len(values), 6)
        for j, x in enumerate(values):
            self.assertEqual(x, am.run_afa(M, "a" * j))
        self.assertRaises(UnknownSymbolError, list, M.power_values("b", 2))

    def test_metadata(self):
        M = zoo.count_afa(3)
        self.assertEqual(M.get_metadata(), {"family": "count", "n": 3})
        M.get_metadata()["n"] = 4
        self.assertEqual(M.get_metadata()["n"], 3)


class CutpointTest(unittest.TestCase):
    """
    Tests for the CutpointSpec comparisons.
    """
    def test_strictly_greater(self):
        spec = CutpointSpec(Fraction(1, 2))
        self.assertEqual(spec.get_comparison(), Comparison.STRICTLY_GREATER)
        self.assertFalse(spec.decide(Fraction(1, 2)))
        self.assertTrue(spec.decide(Fraction(3, 5)))
        self.assertFalse(spec.decide(Fraction(0)))
        self.assertTrue(spec.decide(0.6))
        self.assertFalse(spec.decide(0.5 + 1e-12, 1e-9))

    def test_not_equal(self):
        spec = CutpointSpec(Fraction(1, 2), "ne")
        self.assertFalse(spec.decide(Fraction(1, 2)))
        self.assertTrue(spec.decide(Fraction(1, 3)))
        self.assertRaises(PreconditionError, spec.decide, 0.5)
        self.assertFalse(spec.decide(0.5 + 1e-12, 1e-9))
        self.assertTrue(spec.decide(0.25, 1e-9))

    def test_equal(self):
        spec = CutpointSpec(0, Comparison.EQUAL)
        self.assertTrue(spec.decide(Fraction(0)))
        self.assertFalse(spec.decide(Fraction(1, 10 ** 6)))
        self.assertRaises(PreconditionError, spec.decide, 0.0)
        self.assertTrue(spec.decide(1e-12, 1e-9))

    def test_bad_cutpoint(self):
        self.assertRaises(PreconditionError, CutpointSpec, Fraction(3, 2))
        self.assertRaises(PreconditionError, CutpointSpec, -0.5)
        self.assertRaises(ValueError, CutpointSpec, Fraction(1, 2), "lt")

    def test_accepts(self):
        M = zoo.count_afa(3)
        spec = CutpointSpec(Fraction(2, 3))
        accepted = [w for w in am.unary_words(8) if am.accepts(M, w, spec)]
        self.assertEqual(accepted, ["aaa"])


class SerialisationTest(unittest.TestCase):
    """
    Tests for the JSON machine format.
    """
    def setUp(self):
        self.tempdir = tempfile.mkdtemp(prefix="afalab_test_")

    def tearDown(self):
        shutil.rmtree(self.tempdir)

    def machines(self):
        rng = random.Random(5)
        t = unary_transitions(Matrix([["1/2", 1], [3, 0]]))
        yield zoo.count_afa(3)
        yield leak_pfa()
        yield damping_qfa()
        yield zoo.rotation_mcqfa(Fraction(3, 5), Fraction(4, 5))
        yield zoo.mod2k_mcqfa(2)
        yield Gfa(["a"], t, Vector([1, 0]), Vector(["1/3", -1]))
        yield zoo.random_afa(rng, 3)
        yield zoo.random_pfa(rng, 3)
        yield zoo.random_mcqfa(rng, 3)
        yield zoo.random_qfa(rng, 2)

    def test_round_trip(self):
        for M in self.machines():
            text = am.dumps_machine(M)
            self.assertTrue(text.endswith("}\n"))
            N = am.loads_machine(text)
            self.assertEqual(am.dumps_machine(N), text)
            self.assertEqual(type(N), type(M))
            self.assertEqual(N.get_metadata(), M.get_metadata())
            for w in ["", "a", "aba"] if len(M.get_alphabet()) > 1 \
                    else ["", "a", "aaa"]:
                self.assertEqual(am.run(N, w), am.run(M, w))

    def test_rational_entries_are_strings(self):
        d = json.loads(am.dumps_machine(leak_pfa()))
        self.assertEqual(d["model"], "pfa")
        self.assertEqual(d["scalar"], "rational")
        self.assertEqual(d["states"], 2)
        self.assertEqual(d["transitions"]["a"],
                [["2/3", "0/1"], ["1/3", "1/1"]])

    def test_file_round_trip(self):
        M = zoo.count_afa(4)
        path = os.path.join(self.tempdir, "count4.json")
        am.write_machine(M, path)
        N = am.read_machine(path)
        self.assertEqual(am.dumps_machine(N), am.dumps_machine(M))

    def test_bad_documents(self):
        self.assertRaises(MachineFormatError, am.loads_machine, "not json")
        self.assertRaises(MachineFormatError, am.loads_machine, "[1, 2]")
        self.assertRaises(MachineFormatError, am.loads_machine,
                '{"model": "dfa"}')
        good = am.machine_to_dict(zoo.count_afa(2))
        for key in ["model", "scalar", "alphabet", "states", "start",
                "transitions"]:
            d = dict(good)
            del d[key]
            self.assertRaises(MachineFormatError, am.machine_from_dict, d)
        d = dict(good)
        d["states"] = 3
        self.assertRaises(MachineFormatError, am.machine_from_dict, d)
        d["states"] = True
        self.assertRaises(MachineFormatError, am.machine_from_dict, d)
        d = dict(good)
        d["scalar"] = "float"
        d["transitions"] = dict(good["transitions"])
        d["transitions"]["a"] = [["x", "0"], ["1/2", "1"]]
        self.assertRaises(MachineFormatError, am.machine_from_dict, d)
        d = dict(good)
        d["metadata"] = [1]
        self.assertRaises(MachineFormatError, am.machine_from_dict, d)

    def test_float_refused_in_rational_file(self):
        d = am.machine_to_dict(zoo.count_afa(2))
        d["transitions"] = dict(d["transitions"])
        d["transitions"]["a"] = [[0.5, "0"], [0.5, "1"]]
        self.assertRaises(MachineFormatError, am.machine_from_dict, d)


class InvariantPropertyTest(unittest.TestCase):
    """
    Checks the invariants of every model on many random machines and
    random words.
    """
    def setUp(self):
        self.rng = random.Random(random.randint(1, 2 ** 31))

    def test_affine_entry_sum(self):
        for _ in range(num_random_machines):
            M = zoo.random_afa(self.rng, self.rng.randint(1, 4))
            w = random_word(self.rng, "ab")
            for v in M.configurations(w):
                self.assertEqual(v.entry_sum(), 1)
            x = am.run_afa(M, w)
            self.assertTrue(0 <= x <= 1)

    def test_pfa_nonnegative(self):
        for _ in range(num_random_machines):
            P = zoo.random_pfa(self.rng, self.rng.randint(1, 4))
            w = random_word(self.rng, "ab")
            for v in P.configurations(w):
                self.assertTrue(all(x >= 0 for x in v))
                self.assertEqual(v.entry_sum(), 1)
            x = am.run_pfa(P, w)
            self.assertTrue(0 <= x <= 1)
            self.assertEqual(am.run_afa(am.as_afa(P), w), x)

    def test_mcqfa_norm(self):
        for _ in range(num_random_machines):
            M = zoo.random_mcqfa(self.rng, self.rng.randint(1, 4))
            w = random_word(self.rng, "ab")
            for v in M.configurations(w):
                a = v.get_array()
                self.assertAlmostEqual(math.sqrt(float(a.dot(a))), 1.0,
                        places=9)
            x = am.run_mcqfa(M, w)
            self.assertTrue(-1e-9 <= x <= 1 + 1e-9)

    def test_qfa_trace(self):
        for _ in range(num_random_machines // 10):
            Q = zoo.random_qfa(self.rng, self.rng.randint(1, 3))
            w = random_word(self.rng, "ab")
            re, im = am.final_configuration(Q, w).trace()
            self.assertAlmostEqual(float(re), 1.0, places=9)
            self.assertAlmostEqual(float(im), 0.0, places=9)
            x = am.run_qfa(Q, w)
            self.assertTrue(-1e-9 <= x <= 1 + 1e-9)


if __name__ == '__main__':
    unittest.main()
