"""Weighted simplicial complexes, discrete Hodge Laplacians, intrinsic
metrics and heat-kernel bound verification."""

from ._core import (
    WeightedComplex,
    adjoint_coboundary,
    apply_semigroup,
    bound_b,
    build_complex,
    coboundary,
    dgg_functional_check,
    dgg_pairing_check,
    energy_functional,
    full_simplex,
    gaussian_constant,
    gaussian_corollary_check,
    graph,
    greens_check,
    heat_kernel_column,
    hodge_down,
    hodge_full,
    hodge_up,
    metric_table,
    mu_weight,
    parse_complex,
    parse_complex_file,
    pointwise_kernel_check,
    random_flag,
    reduced_betti,
    run_cli,
    run_sweep,
    sign,
    spectral_bottom,
    sphere_boundary,
    verify_intrinsic,
    zeta_closed,
    zeta_variational,
)

__all__ = [
    "WeightedComplex",
    "adjoint_coboundary",
    "apply_semigroup",
    "bound_b",
    "build_complex",
    "coboundary",
    "dgg_functional_check",
    "dgg_pairing_check",
    "energy_functional",
    "full_simplex",
    "gaussian_constant",
    "gaussian_corollary_check",
    "graph",
    "greens_check",
    "heat_kernel_column",
    "hodge_down",
    "hodge_full",
    "hodge_up",
    "metric_table",
    "mu_weight",
    "parse_complex",
    "parse_complex_file",
    "pointwise_kernel_check",
    "random_flag",
    "reduced_betti",
    "run_cli",
    "run_sweep",
    "sign",
    "spectral_bottom",
    "sphere_boundary",
    "verify_intrinsic",
    "zeta_closed",
    "zeta_variational",
]
