"""Initial ideals of generic homogeneous ideals: Groebner kernel,
sampling and parametric pipelines, Hilbert-series combinatorics, and
classification predicates."""

from .fields import QQ, PrimeField, field_by_name
from .orders import (LEX, DEGLEX, DEGREVLEX, InverseBlock, binom_p_leq,
                     cmp_monomials)
from .poly import Polynomial, Ring, block_leading_data, parse_poly, specialize, xring
from .groebner import (Budget, BudgetExceeded, GroebnerBasis, buchberger,
                       normal_form, reduce_basis, reduced_groebner_basis,
                       s_polynomial, stability_check)
from .ideals import (MonomialIdeal, contains, hilbert_function,
                     hilbert_numerator, hilbert_series, maxdeg, minimalize)
from .series import (InadmissibleHilbertFunction, SeriesWindow,
                     bracket_truncate, froeberg_series, lexsegment_of_hf,
                     maxgbdeg_bound)
from .generic import (GenericInstance, GinResult, InconclusiveSampling,
                      generic_templates, gin_by_sampling, gin_parametric,
                      hilbert_function_homogeneous, ideal_at_point,
                      is_u_generic, sample_ideal, sample_point)
from .props import (PropertyVerdict, borel_action_check, is_borel_fixed,
                    is_lexsegment, is_weakly_revlex)

__version__ = "0.1.0"
