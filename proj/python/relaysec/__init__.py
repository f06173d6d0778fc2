# Copyright 2026 The relaysec Authors
# SPDX-License-Identifier: Apache-2.0
"""Secrecy-rate design for amplify-and-forward relay channels."""

from ._core import (
    InputError,
    MimoChannel,
    NumericalError,
    ScalarChannel,
    grid_search_scalar,
    largest_generalized_eig,
    logdet_pd,
    misome_capacity,
    optimal_gain,
    optimize_split,
    random_channel,
    random_search_mimo,
    rayleigh_quotient,
    relay_power,
    secrecy_rate_mimo,
    secrecy_rate_scalar,
    threshold_power,
)

__all__ = [
    "InputError",
    "MimoChannel",
    "NumericalError",
    "ScalarChannel",
    "grid_search_scalar",
    "largest_generalized_eig",
    "logdet_pd",
    "misome_capacity",
    "optimal_gain",
    "optimize_split",
    "random_channel",
    "random_search_mimo",
    "rayleigh_quotient",
    "relay_power",
    "secrecy_rate_mimo",
    "secrecy_rate_scalar",
    "threshold_power",
]
