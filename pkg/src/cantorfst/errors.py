"""Exception hierarchy shared by the library and the command-line tool."""


class AutomatonError(ValueError):
    """Base class for every error raised by cantorfst."""


class InvalidAutomatonError(AutomatonError):
    """A table is not total, references an unknown state, or uses a bad letter."""


class AlphabetMismatchError(AutomatonError):
    pass


class DegenerateRunError(AutomatonError):
    """An infinite input did not produce the requested amount of output."""


class NotMealyError(AutomatonError):
    pass


class EmptyEmissionError(AutomatonError):
    """Some transition emits the empty word where a letter is required."""


class DepthExceededError(AutomatonError):
    pass


class SchemaError(AutomatonError):
    """A serialized automaton does not conform to the JSON schema."""

    def __init__(self, message, path=()):
        self.path = tuple(path)
        where = "/".join(str(p) for p in self.path)
        super().__init__(f"{where}: {message}" if where else message)


class SearchSpaceError(AutomatonError):
    pass
