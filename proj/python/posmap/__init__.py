"""Positivity, operator scaling and Kraus decomposition of qubit maps."""

from posmap._core import (
    PosmapError,
    __version__,
    adjoint_map,
    apply_map,
    check_map,
    choi_matrix,
    classify_lorentz,
    compose_maps,
    conjugation_map,
    decompose_map,
    depolarizing_map,
    from_kraus,
    identity_map,
    ppt_verdict,
    random_map,
    run_request,
    scale_map,
    slemma_decide,
    transpose_map,
)

__all__ = [
    "PosmapError",
    "__version__",
    "adjoint_map",
    "apply_map",
    "check_map",
    "choi_matrix",
    "classify_lorentz",
    "compose_maps",
    "conjugation_map",
    "decompose_map",
    "depolarizing_map",
    "from_kraus",
    "identity_map",
    "ppt_verdict",
    "random_map",
    "run_request",
    "scale_map",
    "slemma_decide",
    "transpose_map",
]
