from pycatalyst.exceptions import PycatalystError


class DataError(PycatalystError):
    pass


class ParseError(DataError):
    def __init__(self, line_number, message):
        self.line_number = line_number
        super().__init__("line {}: {}".format(line_number, message))


class UnknownInputTypeError(DataError):
    def __init__(self, filename):
        self.filename = filename
        super().__init__("Unable to detect input type for file: {}".format(filename))
