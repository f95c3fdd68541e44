"""Exception types shared across the package."""


class TreegenError(Exception):
    """Base class for errors raised by treegen."""


class SchemeError(TreegenError, ValueError):
    """A color scheme violates one of its invariants, or a scheme file is bad."""


class TableBoundsError(TreegenError, ValueError):
    """A query exceeds the maximum weight the tables were built for."""


class RankError(TreegenError, IndexError):
    """A rank is outside [0, size) for the addressed space."""


class EmptySpaceError(RankError):
    """An operation needs a non-empty space but the space has no objects."""


class ParseError(TreegenError, ValueError):
    """A serialized tree or graph could not be parsed."""


class CacheError(TreegenError, ValueError):
    """A table cache file is corrupt or does not match the request."""
