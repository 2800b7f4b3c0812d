"""Exception hierarchy shared by every module of the package."""


class GameError(Exception):
    """Base class for all errors raised by weakparity."""


class EmptyGame(GameError):
    def __init__(self):
        super().__init__("a game needs at least one state")


class SinkState(GameError):
    def __init__(self, state):
        self.state = state
        super().__init__(f"state {state} has no outgoing edge")


class BadEndpoint(GameError):
    def __init__(self, edge, n):
        self.edge = edge
        super().__init__(f"edge {edge} references a state outside [0, {n})")


class NotSubgameClosed(GameError):
    def __init__(self, state):
        self.state = state
        super().__init__(f"state {state} keeps no successor inside the kept set")


class DeadTarget(GameError):
    def __init__(self, state):
        self.state = state
        super().__init__(f"target {state} is not alive")


class OutOfOrderCall(GameError):
    def __init__(self, got, expected):
        super().__init__(f"obtain_targets({got}) called, expected priority {expected}")


class DoubleRemoval(GameError):
    def __init__(self, state):
        self.state = state
        super().__init__(f"state {state} removed twice")


class TooLarge(GameError):
    def __init__(self, pairs, limit):
        self.pairs = pairs
        super().__init__(f"{pairs} strategy pairs exceed the enumeration limit {limit}")


class MalformedStrategy(GameError):
    pass


class ParseError(GameError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class DuplicateState(ParseError):
    def __init__(self, line, state):
        super().__init__(line, f"state {state} declared twice")


class MissingHeader(ParseError):
    def __init__(self, line=1):
        super().__init__(line, "expected header 'weakparity <maxid>;'")
