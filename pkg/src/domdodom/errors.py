"""Exception hierarchy. Every error is a ``ValueError`` so callers that only
care about bad input can catch one thing."""


class DomdodomError(ValueError):
    pass


class ElementOutOfRange(DomdodomError):
    pass


class NonUniformSet(DomdodomError):
    pass


class GroundSetTooLarge(DomdodomError):
    pass


class OverlappingAB(DomdodomError):
    pass


class QueryTooLarge(DomdodomError):
    pass


class ZeroP(DomdodomError):
    pass


class CoverTooLarge(DomdodomError):
    pass


class NoCoverExists(DomdodomError):
    pass


class NotIntersecting(DomdodomError):
    pass


class BadParams(DomdodomError):
    pass


class SupportTooLarge(DomdodomError):
    pass


class InstanceTooLarge(DomdodomError):
    pass


class BudgetExceeded(DomdodomError):
    pass
