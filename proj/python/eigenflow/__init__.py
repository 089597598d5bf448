"""Reciprocal eigensets of generalized Lucas companion matrices.

Thin re-export of the compiled core; see the individual docstrings there.
"""

from eigenflow._core import (
    BinHistogram,
    ClassTableRow,
    EigenRecord,
    EigenSet,
    EscapeResult,
    ExpDecayFit,
    InvalidArgumentError,
    LogisticFit,
    RangeError,
    UnitCircleRow,
    apply_homotopy,
    bin_histogram,
    boundary_map,
    build_eigenset,
    cardioid_param,
    classification_table,
    classify_point,
    density_probe,
    dominant_root,
    fit_exp_decay_constrained,
    fit_logistic,
    in_main_cardioid,
    in_period2_bulb,
    jungreis_coefficient,
    mandelbrot_escape,
    psi_truncated,
    tuning_map,
    unit_circle_table,
)

__all__ = [
    "BinHistogram",
    "ClassTableRow",
    "EigenRecord",
    "EigenSet",
    "EscapeResult",
    "ExpDecayFit",
    "InvalidArgumentError",
    "LogisticFit",
    "RangeError",
    "UnitCircleRow",
    "apply_homotopy",
    "bin_histogram",
    "boundary_map",
    "build_eigenset",
    "cardioid_param",
    "classification_table",
    "classify_point",
    "density_probe",
    "dominant_root",
    "fit_exp_decay_constrained",
    "fit_logistic",
    "in_main_cardioid",
    "in_period2_bulb",
    "jungreis_coefficient",
    "mandelbrot_escape",
    "psi_truncated",
    "tuning_map",
    "unit_circle_table",
]

__version__ = "1.0.0"
