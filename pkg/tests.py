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

from __future__ import print_function
from __future__ import division
import unittest
import random
import tempfile
import optparse
import shutil
import sys

import test.linalg
import test.automata
import test.transforms
import test.zoo
import test.unary
import test.utilities

test_modules = [test.linalg, test.automata, test.transforms, test.zoo,
        test.unary, test.utilities]


def cleanup(tmp_dir):
    """
    Remove temporary files after interrupt.
    """
    try:
        shutil.rmtree(tmp_dir)
    except OSError as e:
        print("Warning: exception occured deleting", tmp_dir, ":", e)


def main():
    usage = "usage: %prog [options] "
    parser = optparse.OptionParser(usage=usage)
    parser.add_option("-s", "--random-seed", dest="random_seed",
            help="Random seed", default=1)
    parser.add_option("-m", "--machines", dest="num_machines",
            help="Number of random machines for property tests.",
            default=1000)
    parser.add_option("-t", "--tuples", dest="num_tuples",
            help="Number of random tuples for the classification sweep.",
            default=500)
    parser.add_option("-n", "--name-case", dest="name",
            help="Run this specified test", default=None)
    parser.add_option("-i", "--iterations", dest="iterations",
            help="Repeat for i iterations", default="1")
    (options, args) = parser.parse_args()
    num_machines = int(options.num_machines)
    num_tuples = int(options.num_tuples)
    iterations = int(options.iterations)
    if num_machines < 1:
        parser.error("At least 1 machine must be used for random tests")
    seed = int(options.random_seed)
    random.seed(seed)
    testloader = unittest.TestLoader()
    test.automata.num_random_machines = num_machines
    test.unary.num_sweep_tuples = num_tuples
    test.unary.sweep_seed = seed
    if options.name is not None:
        suite = testloader.loadTestsFromName(options.name)
    else:
        suite = unittest.TestSuite()
        for module in test_modules:
            suite.addTests(testloader.loadTestsFromModule(module))
    # create the temporary directory we use for all files.
    tmp_dir = tempfile.mkdtemp(prefix="afa_test_")
    tempfile.tempdir = tmp_dir
    error = False
    try:
        for i in range(iterations):
            r = unittest.TextTestRunner(verbosity=2).run(suite)
            if len(r.errors) > 0 or len(r.failures) > 0:
                print("Error detected at iteration {0}: exiting!".format(i))
                error = True
                break
    finally:
        cleanup(tmp_dir)
    if error:
        sys.exit(1)

if __name__ == '__main__':
    main()
