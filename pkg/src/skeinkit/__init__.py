"""Kauffman brackets, colored Jones polynomials and degree bounds for knot diagrams."""

__version__ = "0.1.0"

from .diagram import Diagram, adequacy, is_adequate, parse_pd, turaev_genus
from .errors import InputError, ResourceError, SkeinkitError
from .jones import ColoredJones, colored_jones, compute
from .laurent import LaurentPoly

__all__ = [
    "ColoredJones", "Diagram", "InputError", "LaurentPoly", "ResourceError",
    "SkeinkitError", "adequacy", "colored_jones", "compute", "is_adequate",
    "parse_pd", "turaev_genus", "__version__",
]
