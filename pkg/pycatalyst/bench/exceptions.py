from pycatalyst.exceptions import PycatalystError


class BenchError(PycatalystError):
    pass


class UnknownConfigTypeError(BenchError):
    pass


class ConfigSyntaxError(BenchError):
    pass


class FstarCertificationError(BenchError):
    """
    The reference optimum could not be certified to the accuracy the run needs.
    """

    pass
