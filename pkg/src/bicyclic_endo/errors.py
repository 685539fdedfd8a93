class AlgebraError(ValueError):
    pass


class StructuralError(AlgebraError):
    """A product left the ambient family (the family is not omega-closed)."""


class OutOfWindow(AlgebraError, KeyError):
    pass


class NotIdempotent(AlgebraError):
    pass


class NotAnIdeal(AlgebraError):
    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


class Unsupported(AlgebraError):
    pass
