"""Finite-dimensional algebras over GF(p) and the GKZ property.

An algebra is GKZ when every linear functional that sends the unity to 1
and no unit to 0 is multiplicative.  The package decides this exactly for
algebras given by structure constants, produces checkable refutations, and
runs executable versions of the structural results about the property.
"""
from .algebra import Algebra
from .config import caps, override, set_caps
from .constructions import (
    change_basis,
    direct_product,
    dual_numbers,
    field_extension,
    function_algebra,
    group_algebra,
    matrix_algebra,
    nilpotent_chain,
    null_algebra,
    quotient,
    subalgebra,
    truncated_polynomials,
    unitisation,
    upper_triangular,
    zero_algebra,
)
from .corpus import builtin_corpus, random_algebra, random_corpus
from .engine import (
    Functional,
    GkzReport,
    Witness,
    check_witness,
    decide_gkz,
    decide_gkz_bruteforce,
    is_gkz,
    is_vacuous,
    validate_witness,
)
from .errors import *  # noqa: F401,F403
from .field import FieldScalar
from .ideals import all_ideals, jacobson_radical, localize_at_prime, prime_ideals
from .specfile import parse_spec, serialize_spec
from .subspace import Subspace
from .symbolic import Dirac, Laurent, dirac_counterexample, laurent_counterexample
from .theorems import theorem_suite

__version__ = "0.1.0"
