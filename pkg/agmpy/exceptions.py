def _rebuild(cls, args, state):
    exc = Exception.__new__(cls)
    exc.args = args
    exc.__dict__.update(state)
    return exc


class AgmException(Exception):
    """Base exception class"""

    def __reduce__(self):
        # subclasses take their own arguments, so rebuild without __init__
        return _rebuild, (self.__class__, self.args, self.__dict__)


class FieldException(AgmException):
    """Field could not be constructed or used as requested."""


class NotPrime(FieldException):
    """Characteristic is not a prime."""

    def __init__(self, p):
        super().__init__(f"{p} is not a prime")
        self.p = p


class CharTwo(FieldException):
    """Characteristic two is not supported."""

    def __init__(self):
        super().__init__("characteristic 2 is not supported")


class InvalidDegree(FieldException):
    """Extension degree must be a positive integer."""

    def __init__(self, t):
        super().__init__(f"invalid extension degree {t}")
        self.t = t


class FieldOverflow(FieldException):
    """Field order exceeds the accepted width."""

    def __init__(self, p, t, limit):
        super().__init__(f"{p}^{t} exceeds the accepted order {limit}")
        self.p = p
        self.t = t
        self.limit = limit


class FieldTooLarge(FieldException):
    """Field is too large for an exhaustive enumeration."""

    def __init__(self, q, limit):
        super().__init__(f"F_{q} is too large to enumerate (limit {limit})")
        self.q = q
        self.limit = limit


class DynamicsException(AgmException):
    """AGM dynamics contract violated."""


class TrivialNode(DynamicsException):
    """Node is not in S_K."""

    def __init__(self, node):
        super().__init__(f"{node} is not a nontrivial node")
        self.node = node


class TrivialK(DynamicsException):
    """k-value is not in T_K."""

    def __init__(self, k):
        super().__init__(f"{k} is not a nontrivial k-value")
        self.k = k


class NotInfinitelyAdvanceable(DynamicsException):
    def __init__(self, node):
        super().__init__(f"{node} is not indefinitely advanceable")
        self.node = node


class NotInfinitelyBacktrackable(DynamicsException):
    def __init__(self, node):
        super().__init__(f"{node} is not indefinitely backtrackable")
        self.node = node


class AmbiguousAdvance(DynamicsException):
    """Both children passed the advancement criterion."""

    def __init__(self, node, candidates):
        super().__init__(f"{node} has several advanceable children: {candidates}")
        self.node = node
        self.candidates = candidates


class AmbiguousBacktrack(DynamicsException):
    """Both parents passed the backtracking criterion."""

    def __init__(self, node, candidates):
        super().__init__(f"{node} has several backtrackable parents: {candidates}")
        self.node = node
        self.candidates = candidates


class UnsupportedCongruenceClass(DynamicsException):
    """Operation has no meaning for this class of q."""

    def __init__(self, q, operation):
        super().__init__(f"{operation} is not available for q = {q} (q mod 8 = {q % 8})")
        self.q = q
        self.operation = operation


class StructureViolation(AgmException):
    """A proven structure property failed on a concrete graph."""

    def __init__(self, msg, witness=None):
        super().__init__(msg if witness is None else f"{msg} (witness {witness})")
        self.witness = witness


class CurveException(AgmException):
    """Point counting failed."""


class NoDecomposition(CurveException):
    """p has no decomposition p = 4m^2 + (2n+1)^2."""

    def __init__(self, p):
        super().__init__(f"no decomposition 4m^2 + (2n+1)^2 for {p}")
        self.p = p


class ReportException(AgmException):
    """Report could not be produced."""


class UnsupportedFormat(ReportException):
    def __init__(self, fmt):
        super().__init__(f"unsupported format '{fmt}'")
        self.format = fmt


class ExportError(ReportException):
    """Writing an artifact failed."""

    def __init__(self, path, reason):
        super().__init__(f"could not write '{path}': {reason}")
        self.path = path
        self.reason = reason
