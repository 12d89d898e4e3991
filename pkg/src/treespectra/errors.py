"""Exception types shared across the package."""


class TreeSpectraError(Exception):
    """Base class for every package-specific error."""


class InvalidTree(TreeSpectraError):
    """The edge list does not describe a tree."""


class CycleDetected(InvalidTree):
    """An edge closes a cycle."""


class Disconnected(InvalidTree):
    """The edges span more than one component."""


class DuplicateEdge(InvalidTree):
    """The same unordered edge appears twice."""


class SelfLoop(InvalidTree):
    """An edge joins a vertex to itself."""


class LabelOutOfRange(TreeSpectraError):
    """A vertex label is missing from the tree or is not a positive integer."""


class InvalidIdentification(TreeSpectraError):
    """A glue request does not identify exactly one vertex of each operand."""


class AnchorNotOnPath(TreeSpectraError):
    """The anchor passed to a branch removal is not the final path vertex."""


class NotPendant(TreeSpectraError):
    """The vertex was required to have degree one."""


class NonzeroAtPendant(TreeSpectraError):
    """A prune needs the vector to vanish at the pendant being removed."""


class NonzeroAtSharedVertex(TreeSpectraError):
    """A zero-extension needs the vector to vanish at the glue vertex."""


class CongruenceViolated(TreeSpectraError):
    """Distances or parameters break a required congruence."""


class NoMajorVertex(TreeSpectraError):
    """The operation needs a vertex of degree at least three."""


class IndexOutOfRange(TreeSpectraError):
    """An eigenvalue index lies outside 0..n-1."""


class ZeroPolynomial(TreeSpectraError):
    """Root multiplicity is undefined for the zero polynomial."""


class NonSymmetric(TreeSpectraError):
    """The matrix handed to the symmetric eigensolver is not symmetric."""


class NoConvergence(TreeSpectraError):
    """The rotation sweep cap was reached before the off-diagonal mass died."""


class ZeroVector(TreeSpectraError):
    """The all-zero vector was passed where an eigenvector is required."""


class EmptyInput(TreeSpectraError):
    """An empty collection was passed where at least one item is required."""


class TooFewPendants(TreeSpectraError):
    """Pendant-distance statistics need at least two pendant vertices."""


class NotExtremal(TreeSpectraError):
    """The tree does not reach the maximal multiplicity bound."""


class CapExceeded(TreeSpectraError):
    """An enumeration request went past the supported order cap."""


class OracleDisagreement(TreeSpectraError):
    """Two independent routes to the same quantity disagree.

    Carries the offending tree's edge list in ``edges`` when known, so the
    failing case can be reproduced directly.
    """

    def __init__(self, message, edges=None):
        super().__init__(message)
        self.edges = tuple(edges) if edges is not None else None


class ParseError(TreeSpectraError):
    """Malformed edge-list text.  ``line`` is the 1-based offending line."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line
