"""Domain error types shared across the package."""


class NetdiffError(Exception):
    """Base class for every domain error raised by netdiff."""


class InvalidLabel(NetdiffError):
    """A node label is empty or otherwise unusable."""


class UnknownLabel(NetdiffError):
    """A label was referenced that does not exist in the network."""


class SelfLoop(NetdiffError):
    """An edge record connects a node to itself."""


class DuplicatePair(NetdiffError):
    """The same unordered node pair appears twice in an edge list."""


class NonPositiveWeight(NetdiffError):
    """An edge record carries a weight that is not strictly positive."""


class CannotEmptyNetwork(NetdiffError):
    """Removing the node would leave a network with no nodes."""


class DegenerateNetwork(NetdiffError):
    """The network is too small for the requested metric."""


class EmptyNetwork(NetdiffError):
    """The operation needs at least one edge."""


class EmptyUnion(NetdiffError):
    """Both networks are edgeless, so the edge Jaccard is undefined."""


class IncompletePartition(NetdiffError):
    """A partition does not cover every node of the network."""


class UnknownAttribute(NetdiffError):
    """No node carries the requested attribute."""


class AliasCollision(NetdiffError):
    """One match string is claimed by two different labels."""


class MissingProfile(NetdiffError):
    """An alias table names a label with no profile and no external declaration."""


class EmptyInput(NetdiffError):
    """A table renderer received no rows."""


class FormatError(NetdiffError):
    """An input file does not match its expected format."""
