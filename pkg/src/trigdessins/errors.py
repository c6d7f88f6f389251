"""Exception taxonomy for the whole package.

Every error raised by the library derives from :class:`TrigdessinsError`, so
callers can catch one base class.  Structured errors carry their payload as
attributes (``report``, ``path``, ``position``) in addition to the message.
"""

from __future__ import annotations


class TrigdessinsError(Exception):
    """Base class for all errors raised by this package."""


# --------------------------------------------------------------------------
# Disk-map construction
# --------------------------------------------------------------------------


class MapError(TrigdessinsError):
    """A combinatorial disk map failed a structural check."""


class NonInvolutiveTwin(MapError):
    """The twin pairing is not a fixed-point-free involution on the darts."""


class DisconnectedMap(MapError):
    """The darts do not form a single connected map."""


class BoundaryNotAFace(MapError):
    """The declared boundary cycle is not the outer face of the map."""


class EulerViolation(MapError):
    """V - E + F(inner) != 1, so the map does not embed in a disk."""


# --------------------------------------------------------------------------
# Dessins, moves, skeletons
# --------------------------------------------------------------------------


class DessinError(TrigdessinsError):
    """Base class for dessin-level errors."""


def _violations_of(report):
    return tuple(getattr(report, "violations", report))


class NotADessin(DessinError):
    """Decoration rules are violated; carries the full violation report."""

    def __init__(self, report):
        self.report = report
        text = "; ".join(str(v) for v in _violations_of(report))
        super().__init__(text or "invalid dessin")


class InvalidResult(DessinError):
    """Applying a move produced a decoration that fails validation."""

    def __init__(self, report):
        self.report = report
        text = "; ".join(str(v) for v in _violations_of(report))
        super().__init__("move result fails validation: " + (text or "?"))


class StaleAnchor(DessinError):
    """A move instance references darts that no longer exist in the dessin."""


class NotInScope(DessinError):
    """The operation is defined only for a narrower class of dessins."""


class IncompatibleSegments(DessinError):
    """Boundary segment structure does not match what the operation needs."""


class NotMaximallyInflected(DessinError):
    """Block decomposition requires a valid, unramified, nonsingular,
    non-hyperbolic dessin."""


class UnrealizableRegion(DessinError):
    """Skeleton realization got stuck: some region admits no balanced web."""


class HyperbolicNoClassification(DessinError):
    """Oval/zigzag naming does not apply to hyperbolic dessins."""


class BadCardinalities(DessinError):
    """Requested block parameters violate the degree bookkeeping."""


class BudgetMisconfigured(DessinError):
    """An equivalence search was started with a non-positive budget."""


# --------------------------------------------------------------------------
# Serialization
# --------------------------------------------------------------------------


class IOFormatError(TrigdessinsError):
    """Base class for document serialization errors."""


class SchemaError(IOFormatError):
    """A document violates the JSON schema; ``path`` locates the offender."""

    def __init__(self, path, message):
        self.path = str(path)
        super().__init__(f"{self.path}: {message}")


class ValidationFailed(IOFormatError):
    """A structurally well-formed document decodes to an invalid object."""

    def __init__(self, report):
        self.report = report
        text = "; ".join(str(v) for v in _violations_of(report))
        super().__init__(text or "validation failed")


# --------------------------------------------------------------------------
# Atlas
# --------------------------------------------------------------------------


class AtlasError(TrigdessinsError):
    """Base class for atlas/chamber-graph errors."""


class SchemeSyntaxError(AtlasError):
    """Malformed real-scheme text; ``position`` is the 0-based offset."""

    def __init__(self, position, message):
        self.position = int(position)
        super().__init__(f"at {self.position}: {message}")


class NonCoprimeClass(AtlasError):
    """A (c1, c2) class label with gcd(c1, c2) != 1."""


class EmptyScheme(AtlasError):
    """The empty string is not a real scheme."""


class UnknownSpace(AtlasError):
    """No chamber graph is bundled under the requested name."""


class UnknownWallClass(AtlasError):
    """The wall-census lookup got a name outside the catalog."""


class OutOfRange(AtlasError):
    """A fiber-catalog lookup got an index outside 1..11."""
