"""Fractional oscillations: the Mittag-Leffler pair e_alpha / i_alpha with
spectral decomposition, discrete fractional operators, zero reports and
Monte-Carlo subordination."""

try:
    from ._fracosc import *  # noqa: F401,F403  (installed package layout)
    from ._fracosc import __doc__ as _core_doc
except ImportError:  # pragma: no cover - in-tree builds put the module on sys.path
    from _fracosc import *  # noqa: F401,F403
    from _fracosc import __doc__ as _core_doc

__all__ = [
    "gamma", "dawson", "erfi",
    "mittag_leffler", "ml_series", "ml_tail", "MLValue",
    "e_alpha", "i_alpha", "i_one", "spectral_kernel", "decompose",
    "momentum", "energy",
    "rl_integral", "caputo_derivative", "ResidualReport",
    "residual_eq2", "residual_eq3", "residual_eq4",
    "duality_check", "hamilton_residual",
    "MCEstimate", "mc_oscillation", "ps_density", "quadrature_oscillation",
    "sample_stable", "SubordinatorPath", "make_path", "inverse_hitting_time",
    "ZeroReport", "find_zeros", "smallest_zero_bound",
    "largest_zero_near1", "largest_zero_near2", "delta_of_T",
    "zero_count_estimate",
]
