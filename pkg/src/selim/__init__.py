"""Exact compact formulae of sparse elimination.

Root bounds (m-Bezout product, MacMahon generating function, permanents),
Sylvester and Macaulay resultants, the 6x6 discriminant of 2x2x2 totally
mixed Nash systems, and implicitization of plane curves by interpolation.
"""

from .bounds import (BlockStructure, DegreeMatrix, SimplexBlockSystem, mbezout_generating_function,
                     mbezout_permanent, mbezout_product, mixed_volume_permanent, tmne_bound)
from .errors import (DegenerateSpecializationError, DegenerateSystemError, DimensionError,
                     DomainError, InconclusiveError, NotInvertibleError, ResourceLimitError,
                     SelimError, SupportTooSmallError)
from .exact import (ExactMatrix, det_fraction_free, permanent_bruteforce, permanent_ryser)
from .games import (BilinearTriple, PayoffTensor, build_tmne_system, construct_double_root,
                    discriminant_2x2x2, double_root_instance, quadratic_discriminant_oracle, solve_2x2x2)
from .implicit import (KernelDimensionWarning, ParametricPlaneCurve, SupportSet,
                       build_interpolation_matrix, compose_with_curve, default_sample_count,
                       implicit_equation, membership_test, predict_support)
from .polygon import ConvexPolygon, minkowski_sum, mixed_area_2d
from .poly import SparsePolynomial, poly_eval
from .resultants import (DenseHomogeneousSystem, UnivariatePair, macaulay_matrix,
                         macaulay_resultant, sylvester_matrix, sylvester_resultant)
from .series import TruncatedSeries, series_mul, series_reciprocal

__version__ = "0.1.0"
