"""Exception hierarchy shared by the services and the CLI."""


class ChevalleyError(Exception):
    """Base class; ``kind`` is the tag written into CLI error reports."""

    kind = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class DescriptorError(ChevalleyError):
    kind = "descriptor"


class UnsupportedRing(ChevalleyError):
    kind = "unsupported_ring"


class SearchBoundExceeded(ChevalleyError):
    kind = "search_bound_exceeded"


class NoWitness(ChevalleyError):
    kind = "no_witness"

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


class InvalidType(ChevalleyError):
    kind = "invalid_type"


class RankTooSmall(ChevalleyError):
    kind = "rank_too_small"


class OppositeRoots(ChevalleyError):
    kind = "opposite_roots"


class NotSpecial(ChevalleyError):
    kind = "not_special"


class IncompatibleRep(ChevalleyError):
    kind = "incompatible_rep"


class InternalError(ChevalleyError):
    kind = "internal"


class CollectionBoundExceeded(InternalError):
    kind = "collection_bound"
