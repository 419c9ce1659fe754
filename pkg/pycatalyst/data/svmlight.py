"""
SVMlight / LIBSVM text format: "<label> <index>:<value> ..." with 1-based, increasing indices.
"""
import logging
import math

import numpy as np
from scipy import sparse

from pycatalyst.core import Dataset
from pycatalyst.data.exceptions import ParseError
from pycatalyst.data.input import resolve_input

logger = logging.getLogger(__name__)


def _parse_float(token, line_number, what):
    try:
        value = float(token)
    except ValueError:
        raise ParseError(line_number, f"malformed {what} '{token}'")
    if not math.isfinite(value):
        raise ParseError(line_number, f"non-finite {what} '{token}'")
    return value


def _parse_line(line, line_number):
    tokens = line.split()
    label = _parse_float(tokens[0], line_number, "label")

    indices = []
    values = []
    for token in tokens[1:]:
        index, sep, value = token.partition(":")
        if not sep:
            raise ParseError(line_number, f"malformed feature '{token}'")
        try:
            index = int(index)
        except ValueError:
            raise ParseError(line_number, f"malformed index in '{token}'")
        if index < 1:
            raise ParseError(line_number, f"indices are 1-based, got {index}")
        if indices and index <= indices[-1] + 1:
            raise ParseError(line_number, f"index {index} does not increase")
        indices.append(index - 1)
        values.append(_parse_float(value, line_number, "value"))

    return label, indices, values


def parse_svmlight(stream, p=None):
    """
    Read a dataset from a text stream. Blank lines and '#' comments are skipped.
    p defaults to the largest index in the file; a larger p can be forced for shared dimensions.
    """
    labels = []
    indptr = [0]
    indices = []
    values = []

    for line_number, line in enumerate(stream, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        label, row_indices, row_values = _parse_line(line, line_number)
        if p is not None and row_indices and row_indices[-1] >= p:
            raise ParseError(line_number, f"index {row_indices[-1] + 1} exceeds dimension {p}")
        labels.append(label)
        indices.extend(row_indices)
        values.extend(row_values)
        indptr.append(len(indices))

    dim = p if p is not None else (max(indices) + 1 if indices else 0)
    features = sparse.csr_matrix(
        (
            np.asarray(values, dtype=np.float64),
            np.asarray(indices, dtype=np.int64),
            np.asarray(indptr, dtype=np.int64),
        ),
        shape=(len(labels), dim),
    )
    dataset = Dataset(features, labels)
    logger.debug("parsed %s", dataset)
    return dataset


def emit_svmlight(dataset, stream):
    features = dataset.features
    for i in range(dataset.n):
        start, end = features.indptr[i], features.indptr[i + 1]
        tokens = [f"{dataset.labels[i]:.17g}"]
        tokens.extend(
            f"{index + 1}:{value:.17g}"
            for index, value in zip(features.indices[start:end], features.data[start:end])
        )
        stream.write(" ".join(tokens) + "\n")


def read_dataset(path, p=None):
    source = resolve_input(path)
    logger.info("reading dataset %s", path)
    stream = source.open()
    try:
        return parse_svmlight(stream, p=p)
    finally:
        if path != "-":
            stream.close()
