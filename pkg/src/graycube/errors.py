"""Exception hierarchy shared by all graycube modules."""


class GrayCubeError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(GrayCubeError):
    """Malformed data: unresolved ids, degree mismatches, id collisions.

    Distinct from axiom failures, which are reported by the validators
    rather than raised.
    """


class CompositionError(GrayCubeError):
    """Morphisms or cells that do not fit together."""


class PushoutError(GrayCubeError):
    """The requested pushout does not carry a valid basis."""


class ConstructionError(GrayCubeError):
    """A derived map failed its defining identity while being built."""


class ResourceError(GrayCubeError):
    """A configured search or dimension guard was exceeded."""


class InternalCheckError(GrayCubeError):
    """A consistency check that should be unreachable fired; flags a bug."""
