"""Exception hierarchy shared by every module of the package."""


class PosetError(Exception):
    """Base class for all errors raised by :mod:`isotone`."""


class ParseError(PosetError, ValueError):
    pass


class DuplicateLabel(PosetError, ValueError):
    pass


class UnknownLabel(PosetError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class CycleDetected(PosetError, ValueError):
    """The supplied relation is not antisymmetric after closure."""


class EmptySubset(PosetError, ValueError):
    pass


class EmptyPoset(PosetError, ValueError):
    pass


class CapExceeded(PosetError, ValueError):
    """A size or count cap guarding an exponential computation was hit."""


class SizeCapExceeded(CapExceeded):
    pass


class CodomainNotCompleteLattice(PosetError, ValueError):
    pass


class InputNotIsotone(PosetError, ValueError):
    pass


class NoExtremesInA(PosetError, ValueError):
    pass


class ComponentNotChain(PosetError, ValueError):
    pass


class EmptyA(PosetError, ValueError):
    pass


class UnknownTheoremId(PosetError, KeyError):
    def __str__(self):
        return Exception.__str__(self)
