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
Command line interface utilities for afalab.
"""
from __future__ import print_function
from __future__ import division

import csv
import gzip
import logging
import numbers
import sys
import time

import afalab
from afalab import linalg

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def add_version_argument(parser):
    """
    Adds a version argument to the specified argparse parser.
    """
    parser.add_argument(
        "-V", "--version", action='version',
        version='%(prog)s {}'.format(afalab.__version__))


def add_verbosity_argument(parser):
    """
    Adds a repeatable verbosity argument to the specified argparse parser.
    """
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="increase logging verbosity on stderr (repeat for more)")


def configure_logging(verbosity):
    """
    Sends log messages to stderr: warnings only by default, INFO with one
    -v and DEBUG with two or more.
    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT)


class ProgressMonitor(object):
    """
    Class representing a progress monitor for a terminal based interface.
    The bar is drawn on stderr so it never mixes with CSV output.
    """
    def __init__(self, total, units, stream=None):
        self.__total = max(1, total)
        self.__units = units
        self.__stream = sys.stderr if stream is None else stream
        self.__progress_width = 40
        self.__bar_index = 0
        self.__bars = "/-\\|"
        self.__start_time = time.process_time()

    def update(self, processed):
        """
        Updates this progress monitor to display the specified number
        of processed items.
        """
        complete = processed / self.__total
        filled = int(complete * self.__progress_width)
        spaces = self.__progress_width - filled
        bar = self.__bars[self.__bar_index]
        self.__bar_index = (self.__bar_index + 1) % len(self.__bars)
        elapsed = max(1, time.process_time() - self.__start_time)
        rate = processed / elapsed
        s = '\r[{0}{1}] {2:5.1f}% @{3:8.1E} {4}/s {5}'.format('#' * filled,
            ' ' * spaces, complete * 100, rate, self.__units, bar)
        self.__stream.write(s)
        self.__stream.flush()

    def finish(self):
        """
        Completes the progress monitor.
        """
        self.__stream.write("\n")


class WordReader(object):
    """
    Reads words, one per line, from a file, from a gzipped file (by the
    .gz suffix) or from stdin when the file name is '-'. An empty line is
    the empty word.
    """
    def __init__(self, in_file):
        if in_file == '-':
            self.__input_file = sys.stdin
            self.__owned = False
        else:
            if in_file.endswith(".gz"):
                self.__input_file = gzip.open(in_file, "rt")
            else:
                self.__input_file = open(in_file, "r")
            self.__owned = True

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self.close()

    def __iter__(self):
        for line in self.__input_file:
            yield line.rstrip("\r\n")

    def close(self):
        """
        Closes the input file, unless it is stdin.
        """
        if self.__owned:
            self.__input_file.close()


def format_field(value):
    """
    Formats one CSV field: booleans as 0/1, integers as themselves and
    every other scalar by linalg.format_scalar.
    """
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, numbers.Integral):
        return str(value)
    if isinstance(value, numbers.Real):
        return linalg.format_scalar(value)
    return str(value)


class CsvWriter(object):
    """
    Writes rows of scalars as CSV to stdout, or to the specified stream.
    """
    def __init__(self, stream=None):
        self.__stream = sys.stdout if stream is None else stream
        self.__writer = csv.writer(self.__stream, lineterminator="\n")

    def write_row(self, *fields):
        self.__writer.writerow([format_field(f) for f in fields])
