"""Exact arithmetic in the Grothendieck ring of stacks, restricted to the
subring Z[L] localized at L and at every L^n - 1.

The core objects are canonical-form classes (`MotivicClass`) with exact
ring operations, the closed-form classes of BO_n, BSO_n, SO_n, GL_n and
SL_n, the stratification recursion with its derivation traces, and
Laurent expansion in descending powers of L.

>>> import motivic
>>> motivic.evaluate("BSO(7) * SO(7)") == motivic.one()
True
>>> str(motivic.class_of("BSO", 3))
'L^-1 * (L^2-1)^-1'
"""

from ._core import (
    DerivationStep,
    DerivationTrace,
    ExprParseError,
    L,
    LaurentTail,
    MotivicClass,
    NotAUnitError,
    PoleError,
    UnsupportedSpecError,
    VerifyReport,
    __version__,
    affine_bundle_class,
    class_of,
    cyclotomic,
    evaluate,
    expand,
    filtration_degree,
    in_piece,
    lpower,
    one,
    semidirect_vector_class,
    special_torsor_class,
    tails_equal,
    trace_bo,
    trace_bso,
    verify_theorem,
    zero,
)

__all__ = [
    "DerivationStep",
    "DerivationTrace",
    "ExprParseError",
    "L",
    "LaurentTail",
    "MotivicClass",
    "NotAUnitError",
    "PoleError",
    "UnsupportedSpecError",
    "VerifyReport",
    "__version__",
    "affine_bundle_class",
    "class_of",
    "cyclotomic",
    "evaluate",
    "expand",
    "filtration_degree",
    "in_piece",
    "lpower",
    "one",
    "semidirect_vector_class",
    "special_torsor_class",
    "tails_equal",
    "trace_bo",
    "trace_bso",
    "verify_theorem",
    "zero",
]
