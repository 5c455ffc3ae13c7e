//! Pump planning for cascaded generation of the resource family.
//!
//! The scheme: a strong two-mode squeezer S₁₂(ζ) prepares a twin beam, then
//! two weak pumped processes couple the pair to an ancilla mode 3. To first
//! order in the pump amplitudes the three-mode state is
//!
//! ```text
//! (1 + κ_a a₁†a₂†a₃† + κ_b a₁a₂a₃†) S₁₂(ζ)|0,0⟩ ⊗ |0⟩₃,
//! ```
//!
//! and detecting a single photon in mode 3 projects modes 1–2 onto a member
//! of the family S₁₂(ζ){c₁|00⟩ + c₂|11⟩}. The conditional interior
//! coefficients are linear in the pumps:
//!
//! ```text
//! (c₁, c₂)ᵀ = B(ζ) · diag(cosh²r, sinh r cosh r) · (κ_a, κ_b)ᵀ,
//!
//! B(ζ) = [ −e^{−iφ} tanh r   −e^{iφ}        ]
//!        [ 1                  e^{2iφ} tanh r ],
//! ```
//!
//! where B carries the angular structure (|det B| = 1/cosh²r) and the
//! diagonal factor the per-branch squeeze enhancement. The planner inverts
//! this map for a requested target and scales the result into the weak-pump
//! regime; the simulator applies the truncated evolution literally, so the
//! round trip exercises the algebra at full precision.

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::families::{ResourceSpec, SqueezeParam};
use crate::fock::{twin_beam_diag_coeffs, FockState};

/// Pump amplitudes above this magnitude leave the weak-pump regime the
/// first-order model is built on.
pub const WEAK_PUMP_LIMIT: f64 = 0.1;

/// Angular part of the pump-to-interior map.
pub fn branch_matrix(zeta: SqueezeParam) -> Matrix2<C64> {
    let t = zeta.r().tanh();
    let phase = C64::from_polar(1.0, zeta.phi());
    Matrix2::new(
        -phase.conj() * t,
        -phase,
        C64::new(1.0, 0.0),
        phase * phase * t,
    )
}

/// Full first-order map from pump amplitudes to (unnormalized) interior
/// coefficients.
pub fn pump_matrix(zeta: SqueezeParam) -> Matrix2<C64> {
    let (ch, sh) = (zeta.r().cosh(), zeta.r().sinh());
    branch_matrix(zeta) * Matrix2::new((ch * ch).into(), C64::new(0.0, 0.0), C64::new(0.0, 0.0), (sh * ch).into())
}

/// Spectral condition number of the angular branch matrix.
pub fn branch_condition_number(zeta: SqueezeParam) -> f64 {
    let m = branch_matrix(zeta);
    let h = m.adjoint() * m;
    let tr = h[(0, 0)].re + h[(1, 1)].re;
    let det = (h[(0, 0)] * h[(1, 1)] - h[(0, 1)] * h[(1, 0)]).re;
    let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
    (((tr + disc) / 2.0) / ((tr - disc) / 2.0)).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PumpPlan {
    /// Pump of the pair-creation branch a₁†a₂†a₃†.
    pub kappa_a: C64,
    /// Pump of the exchange branch a₁a₂a₃†.
    pub kappa_b: C64,
    /// The state the heralded output is meant to reproduce; its squeezing
    /// also fixes the primary crystal.
    pub target: ResourceSpec,
    /// Squared norm of the unnormalized single-photon component.
    pub predicted_success_weight: f64,
}

impl PumpPlan {
    /// Plan with explicit pump amplitudes; the heralding weight is filled in
    /// from the first-order map.
    pub fn new(kappa_a: C64, kappa_b: C64, target: ResourceSpec) -> Self {
        let produced = pump_matrix(target.zeta()) * Vector2::new(kappa_a, kappa_b);
        PumpPlan {
            kappa_a,
            kappa_b,
            target,
            predicted_success_weight: produced.norm_squared(),
        }
    }

    /// Largest pump magnitude in the plan.
    pub fn pump_scale(&self) -> f64 {
        self.kappa_a.norm().max(self.kappa_b.norm())
    }

    /// True when the plan leaves the weak-pump regime and the first-order
    /// model stops being trustworthy.
    pub fn exceeds_weak_regime(&self) -> bool {
        self.pump_scale() > WEAK_PUMP_LIMIT
    }
}

/// Solve for the pump amplitudes producing `target` at the given weak-pump
/// gain (the larger |κ| is scaled to `gain`).
pub fn solve_pump_amplitudes(target: &ResourceSpec, gain: f64) -> Result<PumpPlan> {
    if !(gain > 0.0 && gain < 0.5) {
        return Err(Error::Domain(format!(
            "pump gain must lie in (0, 0.5) for the perturbative branch to mean anything, got {gain}"
        )));
    }
    let zeta = target.zeta();
    let (c1, c2) = target.interior();
    let m = pump_matrix(zeta);
    let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
    let kappa = if det.norm() < 1e-12 {
        // r = 0: the exchange branch is inert and only |11⟩ is reachable
        if c1.norm() > 1e-10 {
            return Err(Error::DegeneratePlan);
        }
        [c2 / m[(1, 0)], C64::new(0.0, 0.0)]
    } else {
        [
            (m[(1, 1)] * c1 - m[(0, 1)] * c2) / det,
            (m[(0, 0)] * c2 - m[(1, 0)] * c1) / det,
        ]
    };
    let scale = gain / kappa[0].norm().max(kappa[1].norm());
    Ok(PumpPlan::new(kappa[0] * scale, kappa[1] * scale, *target))
}

/// Run the cascade at a finite Fock cutoff: prepare the twin beam with the
/// ancilla in vacuum, apply one order of each pump branch, and condition on
/// a single ancilla photon.
///
/// Returns the normalized conditional two-mode state and the weight of the
/// heralding component before normalization.
pub fn simulate_cascade(plan: &PumpPlan, cutoff: usize) -> Result<(FockState, f64)> {
    let pair = twin_beam_diag_coeffs(plan.target.zeta(), cutoff);
    let d = cutoff + 2;
    let d3 = 3usize;
    let idx = |i: usize, j: usize, k: usize| (i * d + j) * d3 + k;

    let mut amps = vec![C64::new(0.0, 0.0); d * d * d3];
    for (n, &c) in pair.iter().enumerate() {
        amps[idx(n, n, 0)] = c;
        let raised = ((n + 1) * (n + 1)) as f64;
        amps[idx(n + 1, n + 1, 1)] += plan.kappa_a * raised.sqrt() * c;
        if n > 0 {
            let lowered = (n * n) as f64;
            amps[idx(n - 1, n - 1, 1)] += plan.kappa_b * lowered.sqrt() * c;
        }
    }

    let mut slice = vec![C64::new(0.0, 0.0); d * d];
    let mut weight = 0.0;
    for i in 0..d {
        for j in 0..d {
            let v = amps[idx(i, j, 1)];
            slice[i * d + j] = v;
            weight += v.norm_sqr();
        }
    }
    if weight <= 0.0 {
        return Err(Error::DegeneratePlan);
    }
    let mut st = FockState::from_amplitudes(vec![d, d], slice, 0.0)?;
    st.normalize();
    Ok((st, weight))
}
