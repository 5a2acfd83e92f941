"""Equilibria, stability and Jacobi-constant tools for the planar restricted
three-body problem with a radiating primary, an oblate secondary and
Poynting-Robertson drag."""

from ._core import (
    Accel,
    CharCoeffs,
    Classification,
    CollinearForm,
    CollisionError,
    CriticalMass,
    Curve,
    CurvePoint,
    DegenerateInput,
    DerivedParams,
    Distances,
    EquilibriumPoint,
    Error,
    Gradient,
    GridResult,
    GridSpec,
    NoConvergence,
    Provenance,
    RootMethod,
    SeriesInvalid,
    SolveMethod,
    StabilityReport,
    SystemParams,
    Trajectory,
    TrajectorySample,
    TriangularExpansion,
    TriangularForm,
    VariationalEigs,
    __version__,
    accel,
    c4_curves,
    char_coeffs,
    classify_point,
    collinear_estimates,
    critical_mass,
    critical_mass_series,
    derive,
    distances,
    equilibrium_locus,
    find_all,
    force_function,
    grad,
    grad_at_rest,
    integrate,
    jacobi,
    linspace,
    refine,
    region_label,
    roots_ferrari,
    roots_no_drag,
    roots_oracle,
    routh_boundary,
    stability_region,
    step_rk4,
    triangular_estimates,
    triangular_expansion,
    variational_eigs,
    zvc_grid,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
