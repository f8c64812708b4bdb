from typing import Optional


class SemilabError(Exception):
    """Base class for every error raised by semilab."""


class UsageError(SemilabError, ValueError):
    """The caller asked for something outside an operation's precondition."""


class FamilyMismatchError(UsageError):
    def __init__(self, left: object, right: object):
        super().__init__(f"Elements belong to different ambient groups: {left} vs {right}")


class ElementSyntaxError(UsageError):
    def __init__(self, text: str, position: int, message: str):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class UnknownGeneratorError(ElementSyntaxError):
    pass


class NotInSemigroupError(UsageError):
    def __init__(self, element: object):
        super().__init__(f"{element} is not a member of P")


class IntersectionClosureError(UsageError):
    pass


class UndefinedGradeError(UsageError):
    pass


class ComposabilityError(UsageError):
    pass


class EmptyOpenSetError(UsageError):
    pass


class ConfigError(UsageError):
    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        prefix = f"{path}: " if path else ""
        super().__init__(f"{prefix}{message}")


class BudgetExceededError(SemilabError):
    """A configured cap was reached before a meaningful result existed."""


class MarginError(SemilabError):
    """An action left the stored depth-truncated ideal family."""


class UndefinedOutsideRangeError(SemilabError):
    """The backward action of p is only defined on filters containing pP."""
