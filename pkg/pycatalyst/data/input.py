import gzip
import io
import os
import sys

from pycatalyst.data.exceptions import UnknownInputTypeError

"""
Text sources for dataset files
"""

RAW_EXTENSIONS = (".svm", ".svmlight", ".libsvm", ".txt")


class GzipInput:
    def __init__(self, filename):
        self.filename = filename

    def open(self):
        return gzip.open(self.filename, "rt", encoding="utf-8")


class RawInput:
    def __init__(self, filename):
        self.filename = filename

    def open(self):
        return open(self.filename, "r", encoding="utf-8")


class StdInInput:
    filename = "-"

    def open(self):
        return io.TextIOWrapper(sys.stdin.buffer, encoding="utf-8")


def resolve_input(filename):
    if filename == "-":
        return StdInInput()

    name, ext = os.path.splitext(filename)

    if ext in RAW_EXTENSIONS:
        return RawInput(filename)
    elif ext == ".gz":
        return GzipInput(filename)
    else:
        raise UnknownInputTypeError(filename)
