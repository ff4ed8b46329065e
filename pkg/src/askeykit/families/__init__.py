"""Polynomial family registry: every family in the catalog, with exact
coefficient expansion, monic recurrence, weights, norms and special points."""

from . import classical, qfamilies  # noqa: F401  (registration side effects)
from .base import (
    FAMILIES,
    Family,
    coeffs,
    derived_monic_recurrence,
    eval_family,
    even_recurrence,
    family_ids,
    get,
    lattice_point,
    monic_coeffs,
    monic_leading,
    monic_recurrence,
    norm,
    special_value,
    weight_masses,
)

__all__ = [
    "FAMILIES",
    "Family",
    "coeffs",
    "derived_monic_recurrence",
    "eval_family",
    "even_recurrence",
    "family_ids",
    "get",
    "lattice_point",
    "monic_coeffs",
    "monic_leading",
    "monic_recurrence",
    "norm",
    "special_value",
    "weight_masses",
]
