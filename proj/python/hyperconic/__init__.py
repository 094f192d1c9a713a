"""Clifford-algebra conic fitting and elliptical perceptron training."""

from ._core import (
    AmbiguityError,
    BudgetError,
    ConicFitResult,
    ConicKind,
    DegeneracyError,
    DivergenceError,
    Multivector,
    PerceptronFlavor,
    PerceptronModel,
    Signature,
    StandardForm,
    TrainReport,
    TransferKind,
    classify_conic,
    embed_point,
    extract_conic,
    fit_exact,
    fit_oracle,
    generate_dataset,
    geometric_product,
    incidence,
    index_set,
    inner_product,
    inverse_pseudoscalar,
    iota,
    ipns_contains,
    lift,
    opns_contains,
    outer_product,
    preset_conic,
    preset_names,
    pseudoscalar,
    spherical_decision,
    sphere_side,
    tau,
    tau_inv,
    train,
    veronese,
    wedge_all,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguityError",
    "BudgetError",
    "ConicFitResult",
    "ConicKind",
    "DegeneracyError",
    "DivergenceError",
    "Multivector",
    "PerceptronFlavor",
    "PerceptronModel",
    "Signature",
    "StandardForm",
    "TrainReport",
    "TransferKind",
    "classify_conic",
    "embed_point",
    "extract_conic",
    "fit_exact",
    "fit_oracle",
    "generate_dataset",
    "geometric_product",
    "incidence",
    "index_set",
    "inner_product",
    "inverse_pseudoscalar",
    "iota",
    "ipns_contains",
    "lift",
    "opns_contains",
    "outer_product",
    "preset_conic",
    "preset_names",
    "pseudoscalar",
    "spherical_decision",
    "sphere_side",
    "tau",
    "tau_inv",
    "train",
    "veronese",
    "wedge_all",
]
