"""Exception types shared across the package."""


class WindingsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(WindingsError):
    """Malformed or inconsistent input data (files, ids, references)."""


class UnknownArrow(InputError):
    pass


class UnknownVertex(InputError):
    pass


class DisconnectedQuiver(WindingsError):
    pass


class NotPseudotree(WindingsError):
    pass


class WrongShape(WindingsError):
    """Quiver does not have the shape required by an operation."""


class NotEquioriented(WindingsError):
    pass


class BaseMismatch(WindingsError):
    """Two representations live over different base quivers."""


class NotClosed(WindingsError):
    """Vertex set is not closed in the required direction."""


class BudgetExceeded(WindingsError):
    """A configured enumeration or search budget was exhausted."""


class NotTreeRep(WindingsError):
    """Representation's coefficient quiver is not a tree (or not over a cycle)."""


class NonIndecomposableInput(WindingsError):
    pass


class NoBracket(WindingsError):
    """No sign change bracket available for root isolation."""


class DisconnectedT(WindingsError):
    """Generator decomposition produced a disconnected remainder."""


class NoSink(WindingsError):
    """Central cycle has no sink vertex."""


class LoopPresent(WindingsError):
    pass


class PartialGrading(WindingsError):
    """Grading does not assign a value to every vertex."""


class NotNice(WindingsError):
    pass


class InvalidSequence(WindingsError):
    """Sequence of gradings violates the nice-sequence invariants."""


class NoCertificate(WindingsError):
    """No distinguishing nice sequence was found within budget."""


class GraphMismatch(WindingsError):
    """Two quivers do not share the same underlying graph."""


class PreconditionFailed(WindingsError):
    pass
