class PebbleBenchError(Exception):
    pass


class InvalidParameterError(PebbleBenchError):
    pass


class VertexRangeError(InvalidParameterError):
    pass


class CapExceededError(PebbleBenchError):
    pass


class DisconnectedPatternError(PebbleBenchError):
    pass


class IndistinguishableError(PebbleBenchError):
    pass


class MalformedFormulaError(PebbleBenchError):
    pass


class GraphFormatError(PebbleBenchError):
    pass


class StrategyError(PebbleBenchError):
    pass


class UnknownScenarioError(PebbleBenchError):
    pass
