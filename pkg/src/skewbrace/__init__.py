"""Finite skew braces: axioms, ideals, commutators and Yang-Baxter solutions."""
from .braces import (
    Digroup,
    SkewBrace,
    Verdict,
    brace_from_tables,
    check_brace_axiom,
    is_abelian_object,
    jacobson_brace,
    lambda_inverse_identity_check,
    make_digroup,
    make_skew_brace,
    op_brace,
    trivial_brace,
)
from .commutators import (
    center,
    centralizer,
    commutator_generators,
    huq_commutator,
    huq_commute,
    oracle_huq_commutator,
    smith_commutator,
    smith_connector_exists,
    star_product,
    verify_huq_equals_smith,
)
from .constructions import (
    ThetaTwistSpec,
    counterexample_report,
    enumerate_braces,
    theta_twist_digroup,
)
from .groups import (
    FiniteGroup,
    group_centralizer,
    group_commutator_subgroup,
    is_automorphism,
    is_normal_subgroup,
    is_subgroup,
    make_group,
)
from .ideals import (
    Congruence,
    IdealSubset,
    all_ideals,
    congruence_of_ideal,
    digroup_normal_check,
    generated_ideal,
    ideal_of_congruence,
    is_ideal,
    join_of_ideals,
    quotient_brace,
)
from .fileformat import parse_brace_file, serialize_brace
from .ybe import YbeSolutionReport, build_r, check_braid, check_nondegenerate, ybe_morphism_check

__version__ = "0.1.0"
