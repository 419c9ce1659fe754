class PycatalystError(Exception):
    """
    A base error class for this application.
    """

    pass


class InputError(PycatalystError, ValueError):
    """
    Raised when an operation receives values outside of its domain,
    e.g. vectors of the wrong dimension or a negative prox step.
    """

    pass


class ArgumentValidationError(PycatalystError):
    def __init__(self, validation_messages):
        self.validation_messages = validation_messages
        super().__init__("\n".join(validation_messages))


class ConfigError(PycatalystError):
    pass


class UnsupportedMethodError(PycatalystError):
    pass


class NonConvergenceError(PycatalystError):
    """
    An inner solve hit its safety cap before its stopping rule was satisfied.
    The best certificate seen and the partial trace (if any) are attached for diagnostics.
    """

    def __init__(self, message, certificate=None, trace=None):
        super().__init__(message)
        self.certificate = certificate
        self.trace = trace
