"""Exact structure-constant kernel for crossed products of algebras and their twists."""

from .algebra import (
    Algebra,
    GroupTableError,
    NonAssociativeError,
    PointedSpace,
    algebra_from_group,
    check_algebra,
    mu2,
    opposite_unit_insertion,
    tensor_algebra,
    tensor_elem_product,
)
from .crossed import (
    CrossedData,
    InvalidDataError,
    TwistingMapData,
    build_crossed_product,
    check_brz_axioms,
    check_twisting_map,
    crossed_mult,
    twisted_tensor_product,
)
from .corpus import (
    CorpusError,
    CorpusInstance,
    GaugeTransformation,
    QuasiBialgebra,
    RightModuleAlgebra,
    builtin_corpus,
    drinfeld_twist,
    gauge_twist_pair,
    group_like_bialgebra,
    module_algebra_twist,
    pentagon_violations,
    quasi_bialgebra_violations,
    smash_product_data,
)
from .fields import CharacteristicError, FieldError, PrimeField, Rationals, Scalar
from .linmap import (
    LinMap,
    MapBuilder,
    ShapeError,
    SingularMapError,
    apply,
    basis_vector,
    compose,
    first_difference,
    flat_index,
    flip,
    identity,
    invert,
    kron_vec,
    maps_equal,
    reshape,
    tensor_map,
    unflatten,
    zero_map,
)
from .report import AxiomReport, LawCheck
from .twist import (
    TheoremViolationError,
    TwistPair,
    TwistPreconditionError,
    TwistResult,
    apply_twist,
    check_twist_conditions,
    make_r_prime,
    make_sigma_prime,
    phi_map,
    random_twist_pair,
    specialize_ttp,
    sweedler_r_prime,
    sweedler_sigma_prime,
    trivial_pair,
    verify_twist_result,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AxiomReport",
    "CharacteristicError",
    "CorpusError",
    "CorpusInstance",
    "CrossedData",
    "FieldError",
    "GaugeTransformation",
    "GroupTableError",
    "InvalidDataError",
    "LawCheck",
    "LinMap",
    "MapBuilder",
    "NonAssociativeError",
    "PointedSpace",
    "PrimeField",
    "QuasiBialgebra",
    "Rationals",
    "RightModuleAlgebra",
    "Scalar",
    "ShapeError",
    "SingularMapError",
    "TheoremViolationError",
    "TwistPair",
    "TwistPreconditionError",
    "TwistResult",
    "TwistingMapData",
    "algebra_from_group",
    "apply",
    "apply_twist",
    "basis_vector",
    "build_crossed_product",
    "builtin_corpus",
    "check_algebra",
    "check_brz_axioms",
    "check_twist_conditions",
    "check_twisting_map",
    "compose",
    "crossed_mult",
    "drinfeld_twist",
    "first_difference",
    "flat_index",
    "flip",
    "gauge_twist_pair",
    "group_like_bialgebra",
    "identity",
    "invert",
    "kron_vec",
    "make_r_prime",
    "make_sigma_prime",
    "maps_equal",
    "module_algebra_twist",
    "mu2",
    "opposite_unit_insertion",
    "pentagon_violations",
    "phi_map",
    "quasi_bialgebra_violations",
    "random_twist_pair",
    "reshape",
    "smash_product_data",
    "specialize_ttp",
    "sweedler_r_prime",
    "sweedler_sigma_prime",
    "tensor_algebra",
    "tensor_elem_product",
    "tensor_map",
    "trivial_pair",
    "twisted_tensor_product",
    "unflatten",
    "verify_twist_result",
    "zero_map",
]
