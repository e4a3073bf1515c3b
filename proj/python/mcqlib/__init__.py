"""Exact Hilbert/Frobenius series and Charney-Davis quantities of Chow rings
of matroids (python bindings over the C++ core)."""

from ._mcq import (
    IdentityError,
    Matroid,
    ResourceError,
    ValidationError,
    cd_report,
    eulerian_A,
    eulerian_binomial,
    eulerian_d,
    grfrob_uniform,
    grfrob_uniform_latex,
    hilb_q_uniform,
    hilb_q_uniform_str,
    matroid_from_file,
    matroid_from_json,
    uniform_matroid,
    verify,
)

__all__ = [
    "IdentityError",
    "Matroid",
    "ResourceError",
    "ValidationError",
    "cd_report",
    "eulerian_A",
    "eulerian_binomial",
    "eulerian_d",
    "grfrob_uniform",
    "grfrob_uniform_latex",
    "hilb_q_uniform",
    "hilb_q_uniform_str",
    "matroid_from_file",
    "matroid_from_json",
    "uniform_matroid",
    "verify",
]
