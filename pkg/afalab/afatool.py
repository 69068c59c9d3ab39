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
The afalab command line program.
"""
from __future__ import print_function
from __future__ import division

import os
import sys
import argparse
import logging
import random
import signal

from afalab import linalg
from afalab import automata
from afalab import transforms
from afalab import zoo
from afalab import unary
from afalab import cli
from afalab.automata import Comparison
from afalab.automata import CutpointSpec
from afalab.exceptions import AfalabError
from afalab.exceptions import MachineFormatError
from afalab.exceptions import UnknownSymbolError
from afalab.exceptions import ConversionError
from afalab.exceptions import PreconditionError
from afalab.exceptions import ScalarModeError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_FORMAT = 2
EXIT_UNKNOWN_SYMBOL = 3
EXIT_CONVERSION = 4
EXIT_PRECONDITION = 5

COMPARISONS = dict((c.value, c) for c in Comparison)


def exit_status(exception):
    """
    Returns the exit status the program uses for the specified exception.
    """
    if isinstance(exception, (MachineFormatError, ScalarModeError,
            EnvironmentError)):
        return EXIT_FORMAT
    if isinstance(exception, UnknownSymbolError):
        return EXIT_UNKNOWN_SYMBOL
    if isinstance(exception, ConversionError):
        return EXIT_CONVERSION
    return EXIT_PRECONDITION


def parse_scalar(text, what):
    """
    Parses a command line scalar: a rational "num/den" or integer, or a
    float when written with a decimal point or exponent.
    """
    try:
        return linalg.make_scalar(text, linalg.RATIONAL)
    except ScalarModeError:
        pass
    try:
        return float(text)
    except ValueError:
        raise MachineFormatError("{0} '{1}' is not a number".format(what,
            text))


class ProgramRunner(object):
    """
    Class responsible for running the program, managing output streams
    etc.
    """
    def __init__(self, args):
        self._tol = args.tol
        self._writer = None

    def init(self):
        """
        Initialises the instance variables in this runner object.
        """
        self._writer = cli.CsvWriter()

    def read_machine(self, path):
        return automata.read_machine(path, self._tol)

    def cleanup(self):
        """
        Closes any files opened by this runner.
        """
        pass

    def error(self, s, status=EXIT_PRECONDITION):
        """
        Prints an error message on stderr and exits.
        """
        print("Error:", s, file=sys.stderr)
        sys.exit(status)


class MachineProgramRunner(ProgramRunner):
    """
    Superclass of all program runners that read a machine file.
    """
    def __init__(self, args):
        super(MachineProgramRunner, self).__init__(args)
        self._machine_file = args.MACHINE
        self._machine = None

    def init(self):
        super(MachineProgramRunner, self).init()
        self._machine = self.read_machine(self._machine_file)


class RunRunner(MachineProgramRunner):
    """
    Runner for the run command.
    """
    def __init__(self, args):
        super(RunRunner, self).__init__(args)
        self._words = args.word
        self._words_file = args.words_file
        self._max_len = args.max_len
        self._reader = None

    def init(self):
        super(RunRunner, self).init()
        if self._words_file is not None:
            self._reader = cli.WordReader(self._words_file)

    def words(self):
        """
        Returns the words to run, in the order they were given.
        """
        for w in self._words:
            yield w
        if self._reader is not None:
            for w in self._reader:
                yield w
        if self._max_len is not None:
            for w in automata.words(self._machine.get_alphabet(),
                    self._max_len):
                yield w

    def run(self):
        for w in self.words():
            self._writer.write_row(w, automata.run(self._machine, w))

    def cleanup(self):
        if self._reader is not None:
            self._reader.close()


class ConvertRunner(MachineProgramRunner):
    """
    Runner for the convert command.
    """
    def __init__(self, args):
        super(ConvertRunner, self).__init__(args)
        self._output_file = args.OUTPUT
        self._target = args.to
        self._cutpoint = args.cutpoint

    def run(self):
        source = self._machine
        if self._cutpoint is not None:
            if not isinstance(source, automata.Pfa):
                raise PreconditionError(
                    "--cutpoint only applies to pfa machines")
            source = transforms.shift_cutpoint(source,
                    parse_scalar(self._cutpoint, "cutpoint"))
        if self._target == automata.GFA:
            if not isinstance(source, automata.Qfa):
                raise ConversionError("only qfa machines convert to gfa")
            target = transforms.qfa_to_gfa(source)
        else:
            target = transforms.convert_to_afa(source)
        automata.write_machine(target, self._output_file)
        self._writer.write_row("{0} -> {1}".format(
            self._machine.get_num_states(), target.get_num_states()))


class AmplifyRunner(MachineProgramRunner):
    """
    Runner for the amplify command.
    """
    def __init__(self, args):
        super(AmplifyRunner, self).__init__(args)
        self._output_file = args.OUTPUT
        self._copies = args.copies
        self._max_states = args.max_states

    def run(self):
        M = self._machine
        if isinstance(M, automata.Pfa):
            M = automata.as_afa(M)
        amplified = transforms.amplify(M, self._copies, self._max_states)
        automata.write_machine(amplified, self._output_file)
        self._writer.write_row("{0} -> {1}".format(M.get_num_states(),
            amplified.get_num_states()))


def cutpoint_spec(args):
    return CutpointSpec(parse_scalar(args.cutpoint, "cutpoint"),
            COMPARISONS[args.comparison])


class ClassifyRunner(ProgramRunner):
    """
    Runner for the classify command. The parameters come either from a
    machine file or from --params; --sweep runs the seeded oracle sweep
    instead.
    """
    def __init__(self, args):
        super(ClassifyRunner, self).__init__(args)
        self._machine_file = args.MACHINE
        self._params = args.params
        self._cutpoint = args.cutpoint
        self._sweep = args.sweep
        self._seed = args.seed
        self._max_len = args.max_len
        self._progress = args.progress

    def parse_params(self):
        cutpoint = parse_scalar(self._cutpoint, "cutpoint")
        if self._params is not None:
            values = [parse_scalar(s, "parameter")
                    for s in self._params.split(",")]
            if len(values) != 5:
                raise MachineFormatError(
                    "--params takes the five values p,q,f1,f2,m")
            return unary.UnaryParams(*(values + [cutpoint]))
        if self._machine_file is None:
            raise PreconditionError("give a machine file or --params")
        M = self.read_machine(self._machine_file)
        return unary.params_from_machine(M, cutpoint)

    def run_sweep(self):
        seed = zoo.get_default_seed() if self._seed is None else self._seed
        rng = random.Random(seed)
        monitor = None
        if self._progress:
            total = self._sweep + len(unary.targeted_params())
            monitor = cli.ProgressMonitor(total, "tuples")
        result = unary.sweep(self._sweep, rng, max_len=self._max_len,
                monitor=monitor)
        if monitor is not None:
            monitor.finish()
        w = self._writer
        w.write_row("key", "count")
        w.write_row("tuples", result.total)
        w.write_row("agreements", result.agreements)
        w.write_row("disagreements", len(result.disagreements))
        w.write_row("indefinite", result.indefinite)
        w.write_row("outside_classic", result.outside_classic)
        for branch, n in result.coverage.get_branch_counts().items():
            w.write_row("branch " + branch, n)
        for regime, n in result.coverage.get_regime_counts().items():
            w.write_row("t" + regime, n)
        if result.disagreements:
            self.error("{0} classifications disagree with enumeration; "
                    "first {1!r}".format(len(result.disagreements),
                        result.disagreements[0]), EXIT_VERIFY_FAILED)

    def run(self):
        if self._sweep is not None:
            self.run_sweep()
            return
        c = unary.classify(self.parse_params())
        tail = c.get_trace().get_tail()
        self._writer.write_row("language", "classic", "tail_start",
                "regime", "branch")
        self._writer.write_row(c.entry, c.entry.classic,
                tail.get_start(), c.get_regime() or "",
                c.get_branch() or "")


class EnumerateRunner(MachineProgramRunner):
    """
    Runner for the enumerate command.
    """
    def __init__(self, args):
        super(EnumerateRunner, self).__init__(args)
        self._spec = cutpoint_spec(args)
        self._max_len = args.max_len
        self._bits = args.bits

    def run(self):
        trace = unary.enumerate_trace(self._machine, self._spec,
                self._max_len, self._tol)
        if self._bits:
            self._writer.write_row(trace.bits(), trace.get_tail())
            return
        for j, value in enumerate(trace.get_values()):
            self._writer.write_row(j, value, trace.contains(j))


class VerifyRunner(ProgramRunner):
    """
    Runner for the verify command. Compares two machines on every word up
    to the maximum length, shortest words first.
    """
    EXACT = "exact"
    CUTPOINT = "cutpoint"
    CUTPOINT0 = "cutpoint0"

    def __init__(self, args):
        super(VerifyRunner, self).__init__(args)
        self._files = (args.MACHINE_A, args.MACHINE_B)
        self._max_len = args.max_len
        self._mode = args.mode
        self._spec = CutpointSpec(parse_scalar(args.cutpoint, "cutpoint"))
        self._machines = None

    def init(self):
        super(VerifyRunner, self).init()
        self._machines = [self.read_machine(f) for f in self._files]
        A, B = self._machines
        if A.get_alphabet() != B.get_alphabet():
            raise PreconditionError("the machines have different alphabets")

    def agree(self, x, y):
        if self._mode == self.EXACT:
            return linalg.scalars_equal(x, y, self._tol)
        if self._mode == self.CUTPOINT0:
            return linalg.scalars_equal(x, 0, self._tol) == \
                    linalg.scalars_equal(y, 0, self._tol)
        return self._spec.decide(x) == self._spec.decide(y)

    def run(self):
        A, B = self._machines
        n = 0
        for w in automata.words(A.get_alphabet(), self._max_len):
            x = automata.run(A, w)
            y = automata.run(B, w)
            if not self.agree(x, y):
                self._writer.write_row("fail", w, x, y)
                self.error("machines disagree on '{0}'".format(w),
                        EXIT_VERIFY_FAILED)
            n += 1
        self._writer.write_row("pass", n)


class ZooRunner(ProgramRunner):
    """
    Runner for the zoo command.
    """
    def __init__(self, args):
        super(ZooRunner, self).__init__(args)
        self._spec = args.FAMILY
        self._output_file = args.output
        self._seed = args.seed

    def run(self):
        M = zoo.ZooSpec.parse(self._spec, self._seed).build()
        if self._output_file is None:
            sys.stdout.write(automata.dumps_machine(M))
        else:
            automata.write_machine(M, self._output_file)


class SweepRunner(MachineProgramRunner):
    """
    Runner for the sweep command: the accept value of every a^j.
    """
    def __init__(self, args):
        super(SweepRunner, self).__init__(args)
        self._max_len = args.max_len

    def run(self):
        M = self._machine
        if not M.is_unary():
            raise PreconditionError("sweep needs a unary machine")
        symbol = M.get_alphabet()[0]
        for j, value in enumerate(M.power_values(symbol, self._max_len)):
            self._writer.write_row(j, value)


def add_machine_argument(parser, name="MACHINE"):
    """
    Adds a positional machine file argument to the specified parser.
    """
    parser.add_argument(name, help="machine file (JSON)")


def add_cutpoint_arguments(parser, default="1/2"):
    """
    Adds the cutpoint and comparison arguments to the specified parser.
    """
    parser.add_argument("--cutpoint", "-c", default=default,
        help="cutpoint lambda, as num/den or a decimal (default %(default)s)")
    parser.add_argument("--comparison", default="gt",
        choices=sorted(COMPARISONS.keys()),
        help="""how values are compared with the cutpoint: gt accepts
            values above it, ne values different from it and eq values
            equal to it (default %(default)s)""")


def add_max_len_argument(parser, default):
    parser.add_argument("--max-len", "-L", type=int, default=default,
        help="maximum word length (default %(default)s)")


def get_parser():
    prog_description = "Affine finite automata laboratory."
    parser = argparse.ArgumentParser(prog="afatool",
            description=prog_description)
    cli.add_version_argument(parser)
    cli.add_verbosity_argument(parser)
    parser.add_argument("--tol", type=float,
            default=linalg.DEFAULT_TOLERANCE,
            help="tolerance for float comparisons (default %(default)s)")
    subparsers = parser.add_subparsers(title='subcommands',)

    # help
    subparsers.add_parser("help",
            description="afatool help",
            help="show this help message and exit")

    # run command
    run_parser = subparsers.add_parser("run",
            description="print the accept value of each word as CSV",
            help="run a machine on words")
    add_machine_argument(run_parser)
    run_parser.add_argument("--word", "-w", action="append", default=[],
        help="word to run (repeatable; '' is the empty word)")
    run_parser.add_argument("--words-file", "-f", default=None,
        help="file of words, one per line; '-' reads stdin")
    run_parser.add_argument("--max-len", "-L", type=int, default=None,
        help="also run every word up to this length")
    run_parser.set_defaults(runner=RunRunner)

    # convert command
    convert_parser = subparsers.add_parser("convert",
            description="""convert a pfa, mcqfa, qfa or gfa machine into an
                equivalent afa and print the state counts""",
            help="convert a machine to an afa")
    add_machine_argument(convert_parser)
    convert_parser.add_argument("OUTPUT", help="output machine file")
    convert_parser.add_argument("--to", default=automata.AFA,
        choices=[automata.AFA, automata.GFA],
        help="target model (default %(default)s)")
    convert_parser.add_argument("--cutpoint", "-c", default=None,
        help="""first move the cutpoint of a pfa to 1/2 from this
            value""")
    convert_parser.set_defaults(runner=ConvertRunner)

    # amplify command
    amplify_parser = subparsers.add_parser("amplify",
            description="""run copies of an afa in parallel, so that the
                value becomes 1 - (1 - f)^t""",
            help="amplify the accept value of an afa")
    add_machine_argument(amplify_parser)
    amplify_parser.add_argument("OUTPUT", help="output machine file")
    amplify_parser.add_argument("--copies", "-t", type=int, default=2,
        help="number of parallel copies (default %(default)s)")
    amplify_parser.add_argument("--max-states", type=int,
        default=transforms.DEFAULT_MAX_STATES,
        help="refuse machines with more states (default %(default)s)")
    amplify_parser.set_defaults(runner=AmplifyRunner)

    # classify command
    classify_parser = subparsers.add_parser("classify",
            description="""name the language of a 2-state unary afa with
                cutpoint, or run the seeded sweep comparing classification
                with enumeration""",
            help="classify a 2-state unary afa")
    classify_parser.add_argument("MACHINE", nargs="?", default=None,
        help="machine file (JSON)")
    classify_parser.add_argument("--params", "-p", default=None,
        help="the parameters p,q,f1,f2,m instead of a machine file")
    classify_parser.add_argument("--cutpoint", "-c", default="1/2",
        help="cutpoint in [0, 1) (default %(default)s)")
    classify_parser.add_argument("--sweep", type=int, default=None,
        metavar="COUNT",
        help="classify COUNT random parameter tuples and report coverage")
    classify_parser.add_argument("--seed", type=int, default=None,
        help="random seed for --sweep (default: AFALAB_SEED or 1)")
    add_max_len_argument(classify_parser, unary.DEFAULT_SWEEP_LENGTH)
    classify_parser.add_argument("--progress", action="store_true",
        default=False, help="show a progress monitor for --sweep")
    classify_parser.set_defaults(runner=ClassifyRunner)

    # enumerate command
    enumerate_parser = subparsers.add_parser("enumerate",
            description="""decide membership of a^0, ..., a^L and print
                rows of length, value and member bit""",
            help="enumerate the language of a unary machine")
    add_machine_argument(enumerate_parser)
    add_cutpoint_arguments(enumerate_parser)
    add_max_len_argument(enumerate_parser, 20)
    enumerate_parser.add_argument("--bits", "-b", action="store_true",
        default=False, help="print the member bits and the tail only")
    enumerate_parser.set_defaults(runner=EnumerateRunner)

    # verify command
    verify_parser = subparsers.add_parser("verify",
            description="""compare two machines on every word up to the
                maximum length; exit status 1 on the first disagreement""",
            help="check two machines against each other")
    add_machine_argument(verify_parser, "MACHINE_A")
    add_machine_argument(verify_parser, "MACHINE_B")
    add_max_len_argument(verify_parser, 8)
    verify_parser.add_argument("--mode", "-m", default=VerifyRunner.EXACT,
        choices=[VerifyRunner.EXACT, VerifyRunner.CUTPOINT,
            VerifyRunner.CUTPOINT0],
        help="""exact compares values, cutpoint compares membership at
            --cutpoint and cutpoint0 compares which values are zero""")
    verify_parser.add_argument("--cutpoint", "-c", default="1/2",
        help="cutpoint for --mode=cutpoint (default %(default)s)")
    verify_parser.set_defaults(runner=VerifyRunner)

    # zoo command
    zoo_parser = subparsers.add_parser("zoo",
            description="""build a machine from a family description such as
                count:3, mod4k:2, modp:7,1,2,3, less:4, interval:3,7 or
                unary:p,q,f1,f2,m""",
            help="build a machine from the zoo")
    zoo_parser.add_argument("FAMILY", help="family and parameters")
    zoo_parser.add_argument("--output", "-o", default=None,
        help="write to this file instead of stdout")
    zoo_parser.add_argument("--seed", type=int, default=None,
        help="seed for default modp rotations (default: AFALAB_SEED or 1)")
    zoo_parser.set_defaults(runner=ZooRunner)

    # sweep command
    sweep_parser = subparsers.add_parser("sweep",
            description="print j and the accept value of a^j as CSV",
            help="accept values of a unary machine")
    add_machine_argument(sweep_parser)
    add_max_len_argument(sweep_parser, 20)
    sweep_parser.set_defaults(runner=SweepRunner)
    return parser


def afatool_main(cmdline_args=None):
    parser = get_parser()
    if os.name == "posix":
        # Set signal handler for SIGPIPE to quietly kill the program.
        signal.signal(signal.SIGPIPE, signal.SIG_DFL)
    args = parser.parse_args(cmdline_args)
    cli.configure_logging(args.verbose)
    if "runner" not in args:
        parser.print_help()
        return
    runner = None
    try:
        runner = args.runner(args)
        runner.init()
        runner.run()
    except (AfalabError, EnvironmentError) as e:
        logger.debug("command failed", exc_info=True)
        print("Error:", e, file=sys.stderr)
        sys.exit(exit_status(e))
    finally:
        if runner is not None:
            runner.cleanup()
