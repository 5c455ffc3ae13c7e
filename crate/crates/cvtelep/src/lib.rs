//! Continuous-variable teleportation with non-Gaussian two-mode resources.
//!
//! The crate models a Braunstein–Kimble teleporter whose entangled resource
//! is a squeezed Bell-like state: a two-mode squeezer acting on a
//! superposition of |00⟩ and |11⟩. Fidelities are computed analytically in
//! the characteristic-function picture (Gaussian-moment integrals of
//! polynomial-weighted Gaussians) and cross-checked against a truncated
//! Fock-space implementation of the same circuit. On top of that sit the
//! demonstration observables (fidelity sweeps, optimal Bell angles,
//! entanglement entropy, non-Gaussianity, squeezed-vacuum affinity) and a
//! small planner for producing the resource states in a cascaded
//! parametric-amplifier arrangement.

mod charfunc;
mod error;
mod families;
mod fock;
mod generation;
mod metrics;
mod moments;
mod optimizer;
mod poly;
mod teleport;

pub use charfunc::{
    cf_from_fock, cf_input, cf_resource, displacement_matrix_element, gaussian_cf_from_moments,
    GaussPolyCF,
};
pub use error::{Error, Result};
pub use families::{InputSpec, ResourceSpec, SqueezeParam};
pub use fock::{
    apply_two_mode_squeeze, build_input, build_resource, build_resource_auto,
    build_resource_with_tol, covariance_matrix, overlap, reduced_entropy, suggested_cutoff,
    twin_beam_diag_coeffs, FockState, NORM_TOL,
};
pub use generation::{
    branch_condition_number, branch_matrix, pump_matrix, simulate_cascade, solve_pump_amplitudes,
    PumpPlan, WEAK_PUMP_LIMIT,
};
pub use metrics::{
    entanglement_entropy, metric_report, non_gaussianity, resource_covariance,
    tb_relative_non_gaussianity, twin_beam_overlap_sq, vacuum_affinity, MetricReport,
};
pub use moments::gaussian_poly_integral;
pub use optimizer::{
    closed_form_optimum, delta_closed_form, find_pss_coincidence, optimize_delta,
    photon_subtracted_delta, relative_fidelity, sweep, OptimizationResult, SearchMethod, SweepRow,
};
pub use poly::Poly;
pub use teleport::{
    fidelity, fidelity_from_cfs, fidelity_integrand, fidelity_quadrature,
    fidelity_quadrature_from_cfs, output_cf, FidelityResult, Method,
};
