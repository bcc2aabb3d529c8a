"""Exception hierarchy shared by every module of the package."""


class SemiringError(Exception):
    """Base class for all errors raised by finsemiring."""


class TableShapeError(SemiringError, ValueError):
    """Operation tables have the wrong shape or out-of-range entries."""


class ParseError(SemiringError, ValueError):
    """Malformed table text."""


class AxiomError(SemiringError, ValueError):
    """A semiring axiom fails; ``witness`` is the smallest violating tuple."""

    axiom = "axiom"

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"{self.axiom} fails at {self.witness}")


class NotAssociativeAdd(AxiomError):
    axiom = "additive associativity"


class NotCommutativeAdd(AxiomError):
    axiom = "additive commutativity"


class NotAssociativeMul(AxiomError):
    axiom = "multiplicative associativity"


class NotLeftDistributive(AxiomError):
    axiom = "left distributivity x(y+z)=xy+xz"


class NotRightDistributive(AxiomError):
    axiom = "right distributivity (y+z)x=yx+zx"


class NotABand(SemiringError, ValueError):
    pass


class OrderTooLarge(SemiringError, ValueError):
    pass


class NotACongruence(SemiringError, ValueError):
    pass


class NoAbsorbingElement(SemiringError, ValueError):
    pass


class NoBiAbsorbing(SemiringError, ValueError):
    pass


class NoZero(SemiringError, ValueError):
    pass


class NoLeastElement(SemiringError, ValueError):
    pass


class NotAnEndomorphism(SemiringError, ValueError):
    pass


class UnknownName(SemiringError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"
