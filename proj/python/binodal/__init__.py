"""Bitangent planes, binodal curves, criminant surfaces and van der Waals
phase equilibrium for surface patches given as Taylor jets."""

try:
    from ._binodal import *  # noqa: F401,F403
    from ._binodal import __doc__ as _core_doc  # noqa: F401
except ImportError:  # running against a plain CMake build tree
    from _binodal import *  # noqa: F401,F403

__all__ = [
    "SurfaceJet",
    "FluidParams",
    "MixtureParams",
    "SupercriticalError",
    "evaluate",
    "partial",
    "discriminant",
    "asymptotic_directions",
    "is_cusp_of_gauss",
    "is_flecnodal_along_tie",
    "substitute_linear",
    "evaluate_H",
    "solve_newton",
    "trace_binodal",
    "classify",
    "c3",
    "beaks_criterion",
    "cusp_invariant",
    "gauss_cusp_curves",
    "generating_value",
    "criminant_closed_form_C3",
    "nf_binodal",
    "vdw_pressure",
    "helmholtz_single",
    "critical_point",
    "spinodal_single",
    "maxwell_construction",
    "maxwell_equal_area",
    "mixture_helmholtz",
    "mixture_jet",
    "mixture_binodal",
    "parse_jet_json",
]
