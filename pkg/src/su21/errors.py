"""Exception types shared across the package.

Numerical validation failures raise dedicated classes so callers (and the
CLI's per-row status column) can tell *what* degenerated, not just that
something did.
"""


class GeometryError(ValueError):
    """Base class for domain validation failures."""


class FormViolation(GeometryError):
    """Matrix does not preserve the Hermitian form within tolerance."""


class NotFixed(GeometryError):
    """Claimed fixed point is not fixed by the isometry."""


class DegeneratePair(GeometryError):
    """Two points that must be distinct coincide projectively."""


class OnIdealEndpoint(GeometryError):
    """Point to project lies on an ideal endpoint of the geodesic."""


class DegenerateTriple(GeometryError):
    """Triple of boundary points with a projective coincidence."""


class ComplexLineDegeneracy(GeometryError):
    """Triple lies on (or too close to) a single complex line."""


class DegenerateConfiguration(GeometryError):
    """Configuration collapsed (coincident points, vanishing bracket)."""


class DegenerateTetrahedron(GeometryError):
    """Ideal tetrahedron with coincident vertices."""


class NotBalanced(GeometryError):
    """Tetrahedron is not balanced within tolerance."""


class SingularBasis(GeometryError):
    """Basis matrix is numerically singular (relative smallest s.v. too small)."""


class RangeError(GeometryError):
    """Parameter outside its documented range."""


class Infeasible(GeometryError):
    """Coordinates violate the feasibility constraints of the model."""


class NoRoot(GeometryError):
    """Root bracketing or refinement failed."""


class IllConditioned(GeometryError):
    """Singular values straddle the rank tolerance; refusing to guess."""


class ParseError(GeometryError):
    """Malformed textual input (matrix JSON, config file)."""
