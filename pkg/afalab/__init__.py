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

__version__ = '0.1.0'

from .exceptions import *  # NOQA
from .linalg import RATIONAL, FLOAT, DEFAULT_TOLERANCE  # NOQA
from .automata import *  # NOQA
from .afatool import afatool_main  # NOQA
