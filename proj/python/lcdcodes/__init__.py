"""Binary LCD codes."""

from ._core import (
    BoundsContradiction,
    DegenerateCode,
    DimensionError,
    LcdError,
    LinearCode,
    ParseError,
    PreconditionError,
    ScaleGuardError,
    VerificationError,
    __version__,
    are_equivalent,
    build_table,
    canonical_rows,
    certificate,
    classify,
    d_lcd_exact,
    dual,
    dual_distance,
    duplicate_column,
    extend_parity,
    formula_dlcd,
    griesmer_upper,
    hull_dim,
    is_lcd,
    metrics,
    min_weight,
    puncture,
    run_suite,
    shorten,
    suite_names,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
