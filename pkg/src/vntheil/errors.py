"""Exception hierarchy.

``GraphInputError`` covers malformed graphs and unreadable files; ``DomainError``
covers well-formed inputs that fall outside an index's domain. The CLI maps the
two families onto different exit codes.
"""


class VnTheilError(Exception):
    pass


class GraphInputError(VnTheilError, ValueError):
    pass


class SelfLoop(GraphInputError):
    pass


class DuplicateEdge(GraphInputError):
    pass


class VertexOutOfRange(GraphInputError, IndexError):
    pass


class ParseError(GraphInputError):
    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class DomainError(VnTheilError, ValueError):
    pass


class EmptyGraph(DomainError):
    pass


class NotSymmetric(DomainError):
    pass


class NotPSDAfterClamp(DomainError):
    pass


class InvalidOrder(DomainError):
    pass


class InvalidExponent(DomainError):
    pass


class AllZero(DomainError):
    pass


class TooSmall(DomainError):
    pass


class Disconnected(DomainError):
    pass


class WrongCase(DomainError):
    pass


class InfeasibleEdgeCount(DomainError):
    pass
