"""Hard-instance generation.

``harden`` dispatches by pairing: discrete scenario sets go through the
iterative master/sub loop, MinMax × budgeted and MinMaxRegret × interval
through their single-shot models.
"""

import logging
from typing import Optional, Tuple

from robust_selection_bench.errors import UnsupportedPairingError
from robust_selection_bench.schemas import BOX_MODES, HiroConfig, HiroMode, HiroTrace, Pairing, ProblemInstance

from .budgeted import (
    DEFAULT_BUDGETED_MODE,
    build_budgeted_model,
    harden_budgeted,
    permute_items,
    resolve_box_mode,
)
from .iterative import harden_iterative, robust_optimum, with_lineage
from .linear import Affine, add_selection_dual
from .masters import (
    ALLOWED_MODES,
    DEFAULT_MODES,
    MasterModel,
    PerturbedVector,
    build_master,
    read_perturbed,
    resolve_mode,
)
from .neighborhood import PerturbationNeighborhood
from .regret_interval import (
    DEFAULT_REGRET_MODE,
    build_regret_interval_model,
    harden_regret_interval,
    validated_q_tilde_row,
)

logger = logging.getLogger(__name__)

HARDENABLE_PAIRINGS = (*DEFAULT_MODES, Pairing.MINMAX_BUDGETED, Pairing.REGRET_INTERVAL)


def applicable_modes(pairing: Pairing) -> Tuple[HiroMode, ...]:
    """Modes a pairing can be hardened with, empty when it has no hardening model."""
    if pairing in ALLOWED_MODES:
        return ALLOWED_MODES[pairing]
    if pairing in (Pairing.MINMAX_BUDGETED, Pairing.REGRET_INTERVAL):
        return BOX_MODES
    return ()


def default_mode(pairing: Pairing) -> Optional[HiroMode]:
    """Mode used when a run names none."""
    if pairing == Pairing.MINMAX_BUDGETED:
        return DEFAULT_BUDGETED_MODE
    if pairing == Pairing.REGRET_INTERVAL:
        return DEFAULT_REGRET_MODE
    return DEFAULT_MODES.get(pairing)


def harden(inst: ProblemInstance, cfg: HiroConfig) -> Tuple[ProblemInstance, Optional[HiroTrace]]:
    """Harden any supported instance; the trace is None for single-shot models.

    Raises:
        UnsupportedPairingError: If no hardening model exists for the pairing
        HiroError: If the mode does not apply or a model fails
    """
    pairing = inst.pairing
    logger.debug(f"harden {pairing.value}: b={cfg.b}, mode={cfg.mode.value if cfg.mode else 'default'}")
    if pairing in DEFAULT_MODES:
        return harden_iterative(inst, cfg)
    if pairing == Pairing.MINMAX_BUDGETED:
        return harden_budgeted(inst, cfg), None
    if pairing == Pairing.REGRET_INTERVAL:
        return harden_regret_interval(inst, cfg), None
    raise UnsupportedPairingError(f"no hardening model for pairing {pairing.value}")


__all__ = [
    "Affine",
    "DEFAULT_MODES",
    "HARDENABLE_PAIRINGS",
    "MasterModel",
    "PerturbationNeighborhood",
    "PerturbedVector",
    "add_selection_dual",
    "applicable_modes",
    "build_budgeted_model",
    "build_master",
    "build_regret_interval_model",
    "default_mode",
    "harden",
    "harden_budgeted",
    "harden_iterative",
    "harden_regret_interval",
    "permute_items",
    "read_perturbed",
    "resolve_box_mode",
    "resolve_mode",
    "robust_optimum",
    "validated_q_tilde_row",
    "with_lineage",
]
