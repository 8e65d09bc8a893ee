"""Groebner bases and ideal operations over K[x, y, z, w]."""

from .ideal import (
    DEFAULT_STEP_CAP,
    GBasis,
    Ideal,
    SaturationCapExceeded,
    buchberger,
    colon,
    eliminate,
    ideals_equal,
    initial_ideal,
    intersect,
    member,
    normal_form,
    saturate,
    saturate_irrelevant,
    saturation_chain,
    verify_groebner,
)
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "DEFAULT_STEP_CAP",
    "GBasis",
    "Ideal",
    "SaturationCapExceeded",
    "buchberger",
    "colon",
    "eliminate",
    "ideals_equal",
    "initial_ideal",
    "intersect",
    "member",
    "normal_form",
    "saturate",
    "saturate_irrelevant",
    "saturation_chain",
    "verify_groebner",
]
