"""Exception types shared across the package.

Every error carries the offending data as attributes so callers (and the
CLI) can report precise positions instead of re-parsing messages.
"""

from __future__ import annotations


class ReeswalkError(Exception):
    """Base class for all library errors."""


class InvalidVertexLabel(ReeswalkError):
    def __init__(self, label: object, facet_position: int):
        self.label = label
        self.facet_position = facet_position
        super().__init__(
            f"facet #{facet_position}: vertex label {label!r} is not a nonempty string"
        )


class EmptyFacet(ReeswalkError):
    def __init__(self, position: int | None):
        self.position = position
        if position is None:
            super().__init__("no facets given")
        else:
            super().__init__(f"facet #{position} is empty")


class DuplicateFacet(ReeswalkError):
    def __init__(self, position: int, first_position: int):
        self.position = position
        self.first_position = first_position
        super().__init__(
            f"facet #{position} repeats facet #{first_position}"
        )


class NonMaximalFacet(ReeswalkError):
    def __init__(self, contained: int, container: int):
        self.contained = contained
        self.container = container
        super().__init__(f"facet #{contained} is contained in facet #{container}")


class IndexOutOfRange(ReeswalkError):
    def __init__(self, index: int, q: int):
        self.index = index
        self.q = q
        super().__init__(f"facet index {index} outside 1..{q}")


class UnknownVertex(ReeswalkError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"vertex {label!r} not in the complex")


class LengthMismatch(ReeswalkError):
    def __init__(self, len_alpha: int, len_beta: int):
        self.len_alpha = len_alpha
        self.len_beta = len_beta
        super().__init__(f"index tuples have lengths {len_alpha} != {len_beta}")


class InvalidWalkPair(ReeswalkError):
    pass


class NotAnEvenWalk(ReeswalkError):
    pass


class IsAnEvenWalk(ReeswalkError):
    pass


class NotAGraph(ReeswalkError):
    def __init__(self, dimension: int):
        self.dimension = dimension
        super().__init__(f"complex has dimension {dimension}, expected 1")


class DisconnectedWalk(ReeswalkError):
    pass


class LimitExceeded(ReeswalkError):
    pass


class ResourceLimit(ReeswalkError):
    def __init__(self, what: str, limit: int):
        self.what = what
        self.limit = limit
        super().__init__(f"resource cap exceeded: {what} > {limit}")


class OrderMismatch(ReeswalkError):
    pass


class HypothesisNotMet(ReeswalkError):
    pass


class IdentityCheckFailed(ReeswalkError):
    pass


class ParseError(ReeswalkError):
    pass
