class PerflError(Exception):
    """ Base class of every error raised on purpose by perfl """


class ConfigError(PerflError):
    """ Bad experiment config or command line input """


class ParameterError(PerflError):
    """ Solver or instance parameter outside its admissible domain """


class ProxError(PerflError):
    """ Iterative prox did not reach its stationarity tolerance """

    def __init__(self, residual: float, tolerance: float, iterations: int) -> None:
        super().__init__(
            "prox residual %.3e above tolerance %.3e after %d iterations"
            % (residual, tolerance, iterations))

        self.residual = residual
        self.tolerance = tolerance
        self.iterations = iterations


class SubsolverError(PerflError):
    """ Inner solver diverged or produced a non-finite iterate """


class LibsvmFormatError(PerflError):
    """ Malformed LIBSVM input """

    def __init__(self, line: int, message: str) -> None:
        super().__init__("line %d: %s" % (line, message))

        self.line = line


class InstanceError(PerflError):
    """ Lower-bound instance parameters rejected """


class CertificationError(PerflError):
    """ A trace violated the communication lower bound """

    def __init__(self, k: int, message: str) -> None:
        super().__init__("k=%d: %s" % (k, message))

        self.k = k
