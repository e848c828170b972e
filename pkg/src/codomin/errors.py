"""Exception hierarchy shared by every module of the package."""


class CodominError(Exception):
    """Base class for all errors raised by codomin."""


class DivisionByZero(CodominError, ZeroDivisionError):
    pass


class FieldMismatch(CodominError):
    pass


class Unsupported(CodominError):
    pass


class UnsupportedCharacteristic(Unsupported):
    pass


class DimensionMismatch(CodominError):
    pass


class ShapeMismatch(DimensionMismatch):
    pass


class AxiomViolation(CodominError):
    """One or more structure axioms failed; ``violations`` names each failed identity."""

    def __init__(self, violations, what="structure"):
        self.violations = list(violations)
        super().__init__(f"{what} violates: {', '.join(self.violations)}")


class NotACoideal(CodominError):
    pass


class NotReflexive(CodominError):
    pass


class NotABialgebra(CodominError):
    pass


class NotSurjective(CodominError):
    pass


class NotASubspace(CodominError):
    pass


class NotCocommutative(CodominError):
    pass


class EmptyFamily(CodominError):
    pass


class DescentFailure(CodominError):
    pass


class BadParams(CodominError):
    pass


class ParseError(CodominError):
    pass


class ValidationError(CodominError):
    def __init__(self, obj, violations):
        self.obj = obj
        self.violations = list(violations)
        super().__init__(f"{obj}: {', '.join(self.violations)}")


class UnknownReference(CodominError):
    pass
