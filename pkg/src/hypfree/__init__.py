"""hypfree: exact freeness engine for central hyperplane arrangements.

Freeness certificates via Saito's determinant criterion, SPOG certification,
residual polynomials of deletion pairs, and free-path search over subset
lattices, all in exact arithmetic over Q or Q(sqrt d).
"""

__version__ = "0.1.0"

from .arrangement import (AffineArrangement, Arrangement, Hyperplane, cone,  # noqa: F401
                          decone, defining_polynomial, delete, is_essential,
                          restrict)
from .freeness import (FreenessCertificate, NotFree, exponents, is_free,  # noqa: F401
                       residual_polynomial, saito_check)
from .families import catalan, cat_shi, pentagon, shi, shi_cat, weyl  # noqa: F401
from .freepath import PathResult, free_path, random_arrangement  # noqa: F401
from .lattice import char_poly, intersection_lattice  # noqa: F401
from .spog import SpogCertificate, spog_check  # noqa: F401
