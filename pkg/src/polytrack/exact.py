"""Closed-form interaction of two symmetric rarefaction waves."""

from polytrack._internal.exact.interaction import (
    InteractionConfig,
    alpha,
    decay_curve,
    default_decay_samples,
    hypergeometric_argument,
    t_interaction_hyper,
    t_interaction_legendre,
    volume_from_invariants,
)
from polytrack._internal.exact.special import (
    hyp2f1_series,
    legendre_polynomial,
)

__all__ = [
    "InteractionConfig",
    "alpha",
    "decay_curve",
    "default_decay_samples",
    "hypergeometric_argument",
    "t_interaction_hyper",
    "t_interaction_legendre",
    "volume_from_invariants",
    "hyp2f1_series",
    "legendre_polynomial",
]
