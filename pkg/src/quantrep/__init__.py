"""Non-semi-simple quantum representations of the 4-punctured sphere.

Typical weight modules of the unrolled quantum group of sl(2) at a 2r-th
root of unity, R-matrix braiding, the 6j-symbol graph calculus, the
projective mapping-class-group representation, and an exact word-problem
oracle for testing faithfulness.
"""

from .braiding import BraidWord, ColoredRep, ado_rep, braiding_c, r_matrix
from .errors import (
    AtypicalColor,
    ColorSumNonzero,
    DegenerateParameter,
    InadmissibleSixJ,
    ParseError,
    QuantrepError,
)
from .graph_basis import (
    FusionWindow,
    admissible_betas,
    fusion_window,
    h_to_i_matrix,
    half_twist_phase,
    i_to_h_matrix,
    sixj,
)
from .groups import (
    Decomposition,
    Perm4,
    PSL2ZElement,
    perm_of_word,
    presentation_check,
    psl2z_image,
    semidirect_decompose,
    word_problem,
)
from .m04 import (
    MCGWord,
    ProjectiveBlockMap,
    RepSpace,
    evaluate_word,
    matrices_projectively_equal,
    projective_deviation,
    projectively_equal,
    rep_space,
    sigma_matrix,
)
from .qscalar import (
    DEFAULT_TOL,
    QParams,
    modified_dim,
    q_pow,
    qbinom,
    qfact,
    qnum,
)
from .weight_modules import (
    ModuleMap,
    TypicalModule,
    is_typical,
    tensor_action,
    typical_module,
)

__all__ = [
    "AtypicalColor",
    "BraidWord",
    "ColorSumNonzero",
    "ColoredRep",
    "Decomposition",
    "DegenerateParameter",
    "DEFAULT_TOL",
    "FusionWindow",
    "InadmissibleSixJ",
    "MCGWord",
    "ModuleMap",
    "ParseError",
    "Perm4",
    "ProjectiveBlockMap",
    "PSL2ZElement",
    "QParams",
    "QuantrepError",
    "RepSpace",
    "TypicalModule",
    "admissible_betas",
    "ado_rep",
    "braiding_c",
    "evaluate_word",
    "fusion_window",
    "h_to_i_matrix",
    "half_twist_phase",
    "i_to_h_matrix",
    "is_typical",
    "matrices_projectively_equal",
    "modified_dim",
    "perm_of_word",
    "presentation_check",
    "projective_deviation",
    "projectively_equal",
    "psl2z_image",
    "q_pow",
    "qbinom",
    "qfact",
    "qnum",
    "r_matrix",
    "rep_space",
    "semidirect_decompose",
    "sigma_matrix",
    "sixj",
    "tensor_action",
    "typical_module",
    "word_problem",
]

__version__ = "0.1.0"
