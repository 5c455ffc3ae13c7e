//! Optimal Bell angles, relative fidelity gains, and where the optimum
//! crosses the photon-subtracted family.
//!
//! For a squeezed Bell resource at fixed ζ and θ the fidelity is smooth and
//! π-periodic in δ with a single maximum in [0, π/2], so a coarse grid plus a
//! golden-section refinement brackets the optimum, and Newton steps on the
//! central-difference derivative push the angle to full precision even where
//! the curve flattens at strong squeezing. Closed forms exist for two inputs
//! and are kept for cross-checking:
//!
//! ```text
//! coherent:       tan 2δ* = 1 + e^{−2r}
//! single photon:  tan 2δ* = (ε³ − ε² + ε + 3) / (3 (1 − ε)²),   ε = e^{−2r},
//! ```
//!
//! the latter degenerating to δ* = π/4 at r = 0. The photon-subtracted state
//! is the δ = arctan(tanh r), θ = 0 member of the family; the squeezing r̄
//! where the optimal angle crosses that curve is found by bisection on the
//! angle difference, which changes sign transversally there (the fidelity
//! difference itself only touches zero, so it cannot be bisected).

use std::cell::Cell;

use crate::charfunc::{cf_input, cf_resource};
use crate::error::{Error, Result};
use crate::families::{InputSpec, ResourceSpec, SqueezeParam};
use crate::teleport::{fidelity, fidelity_from_cfs};

const INV_PHI: f64 = 0.618_033_988_749_895;

pub(crate) fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMethod {
    /// Coarse grid plus golden-section refinement.
    GridRefine,
    /// Direct evaluation of a known closed-form angle.
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizationResult {
    pub delta_star: f64,
    pub fidelity_star: f64,
    pub method: SearchMethod,
    /// Number of fidelity evaluations spent.
    pub iterations: u32,
}

/// Best Bell angle δ for teleporting `input` with a squeezed Bell resource
/// at the given ζ and θ.
pub fn optimize_delta(
    input: &InputSpec,
    zeta: SqueezeParam,
    theta: f64,
) -> Result<OptimizationResult> {
    let input_cf = cf_input(input)?;
    let evals = Cell::new(0u32);
    let eval = |delta: f64| -> Result<f64> {
        evals.set(evals.get() + 1);
        let spec = ResourceSpec::SqueezedBell { zeta, delta, theta };
        Ok(fidelity_from_cfs(&input_cf, &cf_resource(&spec))?.value)
    };
    let n = 64;
    let mut best = (0usize, f64::NEG_INFINITY);
    let step = std::f64::consts::FRAC_PI_2 / (n - 1) as f64;
    for i in 0..n {
        let f = eval(i as f64 * step)?;
        if f > best.1 {
            best = (i, f);
        }
    }
    let lo = best.0.saturating_sub(1) as f64 * step;
    let hi = ((best.0 + 1).min(n - 1)) as f64 * step;
    let (mut delta_star, mut fidelity_star) = golden_max(
        |d| eval(d).expect("fidelity is defined on the whole angle range"),
        lo,
        hi,
        1e-9,
    );
    // golden section localizes the maximum only to ~sqrt(eps/|f''|), which is
    // too coarse when the curve flattens at strong squeezing; Newton steps on
    // the central-difference derivative recover the remaining digits
    if best.0 > 0 && best.0 < n - 1 {
        let h = 1e-4;
        let mut x = delta_star.clamp(lo + h, hi - h);
        for _ in 0..8 {
            let f_plus = eval(x + h)?;
            let f_minus = eval(x - h)?;
            let f_mid = eval(x)?;
            let d1 = (f_plus - f_minus) / (2.0 * h);
            let d2 = (f_plus - 2.0 * f_mid + f_minus) / (h * h);
            if d2 >= -1e-12 {
                break;
            }
            let step = d1 / d2;
            let next = (x - step).clamp(lo, hi);
            let moved = (next - x).abs();
            x = next;
            if moved < 1e-10 {
                break;
            }
        }
        let f_x = eval(x)?;
        if f_x >= fidelity_star - 1e-12 {
            delta_star = x;
            fidelity_star = f_x;
        }
    }
    Ok(OptimizationResult {
        delta_star,
        fidelity_star,
        method: SearchMethod::GridRefine,
        iterations: evals.get(),
    })
}

/// Closed-form optimal angle, for the two inputs that have one.
pub fn delta_closed_form(input: &InputSpec, r: f64) -> Option<f64> {
    let eps = (-2.0 * r).exp();
    match input {
        InputSpec::Coherent { .. } => Some(0.5 * (1.0 + eps).atan()),
        InputSpec::Fock1 => {
            if r == 0.0 {
                Some(std::f64::consts::FRAC_PI_4)
            } else {
                let num = eps.powi(3) - eps.powi(2) + eps + 3.0;
                let den = 3.0 * (1.0 - eps).powi(2);
                Some(0.5 * (num / den).atan())
            }
        }
        _ => None,
    }
}

/// Evaluate the closed-form angle as an optimization result, when the input
/// family has one.
pub fn closed_form_optimum(
    input: &InputSpec,
    zeta: SqueezeParam,
) -> Result<Option<OptimizationResult>> {
    let Some(delta_star) = delta_closed_form(input, zeta.r()) else {
        return Ok(None);
    };
    let spec = ResourceSpec::SqueezedBell { zeta, delta: delta_star, theta: 0.0 };
    let fidelity_star = fidelity(input, &spec)?.value;
    Ok(Some(OptimizationResult {
        delta_star,
        fidelity_star,
        method: SearchMethod::ClosedForm,
        iterations: 1,
    }))
}

/// The Bell angle at which the squeezed Bell family reproduces the
/// photon-subtracted state (θ = 0).
pub fn photon_subtracted_delta(r: f64) -> f64 {
    r.tanh().atan()
}

/// Gain of the δ-optimized squeezed Bell resource over `reference`,
/// normalized by the reference fidelity. Both resources sit at the
/// reference's squeezing; θ is pinned to 0.
pub fn relative_fidelity(input: &InputSpec, reference: &ResourceSpec) -> Result<f64> {
    let opt = optimize_delta(input, reference.zeta(), 0.0)?;
    let base = fidelity(input, reference)?.value;
    assert!(base > 0.0, "reference fidelity must be positive, got {base}");
    Ok((opt.fidelity_star - base) / base)
}

/// One cell of a fidelity sweep. A failed cell keeps its row with the error
/// text in place of a value.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub input: String,
    pub resource: String,
    pub r: f64,
    pub fidelity: Option<f64>,
    pub error: Option<String>,
}

/// Dense fidelity table over inputs × resource templates × squeezing grid.
///
/// Each resource spec acts as a template whose squeezing modulus is rebound
/// to every grid value (phase and angles kept). Row order is input-major,
/// then resource, then r ascending.
pub fn sweep(inputs: &[InputSpec], resources: &[ResourceSpec], r_grid: &[f64]) -> Vec<SweepRow> {
    let mut grid = r_grid.to_vec();
    grid.sort_by(|a, b| a.partial_cmp(b).expect("squeezing grid must not contain NaN"));
    let mut rows = Vec::with_capacity(inputs.len() * resources.len() * grid.len());
    for input in inputs {
        for template in resources {
            for &r in &grid {
                let cell = template
                    .with_r(r)
                    .and_then(|spec| fidelity(input, &spec))
                    .map(|res| res.value);
                rows.push(SweepRow {
                    input: input.label().to_string(),
                    resource: template.label().to_string(),
                    r,
                    fidelity: cell.as_ref().ok().copied(),
                    error: cell.err().map(|e| e.to_string()),
                });
            }
        }
    }
    rows
}

/// Squeezing r̄ at which the optimal squeezed Bell resource for `input`
/// coincides with the photon-subtracted state. Searches r ∈ [0.05, 3] at
/// φ = π, θ = 0.
pub fn find_pss_coincidence(input: &InputSpec) -> Result<f64> {
    let pi = std::f64::consts::PI;
    let gap = |r: f64| -> Result<f64> {
        let zeta = SqueezeParam::new(r, pi)?;
        Ok(optimize_delta(input, zeta, 0.0)?.delta_star - photon_subtracted_delta(r))
    };
    let (mut lo, mut hi) = (0.05, 3.0);
    let g_lo = gap(lo)?;
    let g_hi = gap(hi)?;
    if g_lo.signum() == g_hi.signum() {
        return Err(Error::Domain(format!(
            "angle gap does not change sign on [{lo}, {hi}] ({g_lo:.3e} vs {g_hi:.3e})"
        )));
    }
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if gap(mid)?.signum() == g_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
