from pycatalyst.data.exceptions import DataError, ParseError, UnknownInputTypeError
from pycatalyst.data.input import resolve_input
from pycatalyst.data.normalize import normalize_rows
from pycatalyst.data.svmlight import emit_svmlight, parse_svmlight, read_dataset
from pycatalyst.data.synthetic import SyntheticKind, SyntheticSpec, gen_synthetic
