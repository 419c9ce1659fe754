import io

import pytest
from unittest import TestCase
from unittest.mock import mock_open, patch

from pycatalyst.data.input import (
    GzipInput,
    RawInput,
    StdInInput,
    UnknownInputTypeError,
    resolve_input,
)


def test_gzip_open():
    with patch("gzip.open", mock_open(read_data="1 1:0.5\n")) as mock_file:
        gz = GzipInput("train.svm.gz")
        open_result = gz.open()

        mock_file.assert_called_with("train.svm.gz", "rt", encoding="utf-8")
        assert open_result == mock_file.return_value


def test_raw_open():
    """
    rawfile should return the text file object directly
    """
    with patch("builtins.open", mock_open(read_data="1 1:0.5\n")) as mock_file:
        raw = RawInput("train.svm")
        open_result = raw.open()

        mock_file.assert_called_with("train.svm", "r", encoding="utf-8")
        assert open_result == mock_file.return_value


def test_stdin_open():
    with patch("sys.stdin") as mock_stdin:
        mock_stdin.buffer = io.BytesIO(b"-1 2:1\n")
        std = StdInInput()

        assert std.open().read() == "-1 2:1\n"


def test_resolve_stdin():
    assert isinstance(resolve_input("-"), StdInInput)


class ResolveFromFilepathTest(TestCase):
    test_path_examples = [
        "",
        "complex/multi/part/path/test/",
        "complex\\multi\\part\\path\\test\\",
        "/absolute/path/test/",
        "C:\\absolute\\path\\test\\",
    ]

    def test_resolve_raw(self):
        for path in self.test_path_examples:
            for extension in (".svm", ".svmlight", ".libsvm", ".txt"):
                test_path = path + "train" + extension
                with self.subTest(i=test_path):
                    assert isinstance(resolve_input(test_path), RawInput)

    def test_resolve_gzip(self):
        for path in self.test_path_examples:
            test_path = path + "train.svm.gz"
            with self.subTest(i=test_path):
                assert isinstance(resolve_input(test_path), GzipInput)

    def test_resolve_unknown(self):
        with pytest.raises(UnknownInputTypeError):
            resolve_input("unknown_file.bbs")
