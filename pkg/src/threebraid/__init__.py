"""Normal forms for 3-braid words and exact invariants of their closures.

The package classifies any word in the two standard 3-braid generators into
one of the three conjugacy families, then computes invariants of the braid
closure and of its branched double cover: first homology, determinant,
L-space and tightness status, absolutely graded Floer modules and correction
terms, the concordance invariant delta, the knot signature,
quasi-alternating status, and Stein-filling obstructions.  A Seifert-matrix
oracle provides diagram-level cross-checks of the algebraic route.
"""

from .floer import (
    FIGURE_EIGHT_LIKE,
    LEFT_TREFOIL_LIKE,
    RIGHT_TREFOIL_LIKE,
    GradedModule,
    correction_term,
    hf_plus_s0,
    hfk_binding,
    is_l_space,
    is_tight,
    knot_type,
    shift,
    surgery_table,
    torus_bundle_hf,
    zero_surgery_table,
)
from .homology import (
    AbelianGroup,
    SL2Matrix,
    determinant,
    h1_branched_cover,
    image,
    parabolic_invariant,
    smith_normal_form,
    trace_class,
)
from .invariants import (
    InvariantReport,
    SteinReport,
    analyze_word,
    delta,
    finite_order_screen,
    quasi_alternating,
    report_json,
    signature,
    stein_report,
)
from .murasugi import (
    Family1,
    Family2,
    Family3,
    FreeProductWord,
    MurasugiForm,
    canonical_word,
    classify,
    is_conjugate,
    mirror_form,
    psl2_normal_form,
)
from .seifert import (
    SeifertMatrix,
    oracle_determinant,
    seifert_matrix,
    sym_determinant,
    sym_signature,
)
from .words import (
    BraidWord,
    Letter,
    components,
    concat,
    conjugate,
    exponent_sum,
    free_reduce,
    inverse,
    parse,
    permutation,
    word,
)

__all__ = [name for name in dir() if not name.startswith("_")]
