"""Helpers shared by the experiment scripts."""

import sys

from ndscape import __version__
from ndscape.formats import header_line, write_csv


def emit(path, columns, rows, seed):
    header = header_line(__version__, seed, " ".join(sys.argv))
    write_csv(sys.stdout if path == "-" else path, columns, rows, header)
