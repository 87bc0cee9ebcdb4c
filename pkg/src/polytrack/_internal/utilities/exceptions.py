class GasParamsError(Exception): ...


class GridConvergenceError(Exception): ...


class GridRangeError(Exception): ...


class IncompatibleStatesError(Exception): ...


class InconsistentChainError(Exception): ...


class SamplingError(Exception): ...


class QueryTimeError(Exception): ...


class ReferenceTimeError(Exception): ...


class LifespanError(Exception): ...


class InvariantDomainError(Exception): ...


class AdmissibleGammaError(Exception): ...


class ConfigError(Exception): ...


class TraceFormatError(Exception): ...
