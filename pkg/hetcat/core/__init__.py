# Finite categories and their constructions
from .fincat import (
    FinCategory,
    MorphismId,
    ObjectId,
    chain,
    compose,
    discrete,
    hom_set,
    make_category,
    opposite,
    pair_name,
    powerset,
    product,
    subset_name,
    thin_category,
    validate_category,
)
# Functors and the hets they induce
from .functor import (
    FinFunctor,
    apply,
    hom_bifunctor,
    identity_functor,
    induced_het_left,
    induced_het_right,
    make_functor,
    validate_functor,
)
from .het import (
    HetBifunctor,
    HetElement,
    act,
    make_het,
    relation_element_name,
    relation_het,
    validate_het,
)
# Universals and semiadjunctions
from .represent import (
    Semiadjunction,
    Side,
    UniversalArrow,
    all_left_representations,
    all_right_representations,
    build_left_semiadjunction,
    build_right_semiadjunction,
    check_naturality,
    check_universal,
    comparison_homs,
    factor_left,
    factor_right,
    find_left_representation,
    find_right_representation,
    is_left_universal,
    is_right_universal,
    left_semiadjunction_from,
    right_semiadjunction_from,
)
from .adjoint import (
    Adjunction,
    BrainFunctor,
    ButterflyReport,
    SquareReport,
    assemble_adjunction,
    brain_from_adjoints,
    check_brain,
    verify_adjunctive_square,
    verify_all_squares,
    verify_all_wings,
    verify_butterfly,
)
# Import exceptions
from .exceptions import (
    HetcatError,
    HetcatIntegrityError,
    HetcatNegativeResult,
    HetcatParameterError,
    HetcatValidationError,
    SpecParseError,
)
from .validation import ValidationReport, Violation

# Define the name of the package
name = "hetcat.core"
