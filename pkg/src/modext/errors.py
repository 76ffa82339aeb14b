"""Shared exception types."""


class ModextError(Exception):
    """Base class for all package errors."""


class NotAssociative(ModextError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"multiplication not associative at triple {triple}")


class NoIdentity(ModextError):
    def __init__(self, detail=""):
        super().__init__(f"table has no two-sided identity {detail}".strip())


class NoInverse(ModextError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no inverse")


class NotASubgroup(ModextError):
    def __init__(self, detail):
        super().__init__(f"not a subgroup: {detail}")


class NotNormal(ModextError):
    def __init__(self, g, l):
        self.witness = (g, l)
        super().__init__(f"subgroup not normal: conjugate of {l} by {g} escapes")


class DomainViolation(ModextError):
    pass


class NotIndecomposable(ModextError):
    pass


class DegreeTooHigh(ModextError):
    pass


class NotACocycle(ModextError):
    pass


class IllDefinedAction(ModextError):
    pass


class DefectEscapesLevel(ModextError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"morph defect escapes its chain level at pair {pair}")


class CertificateInvalid(ModextError):
    pass


class NotSoluble(ModextError):
    pass


class BudgetExceeded(ModextError):
    def __init__(self, what, needed, allowed):
        self.what = what
        self.needed = needed
        self.allowed = allowed
        super().__init__(f"budget exceeded for {what}: needs {needed}, allowed {allowed}")


class InstanceError(ModextError):
    """Raised for malformed instance files."""
