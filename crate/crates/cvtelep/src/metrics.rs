//! Resource diagnostics: entanglement, non-Gaussianity, and affinity to the
//! twin-beam family.
//!
//! Three quantities are exposed for every resource S₁₂(ζ){c₁|00⟩+c₂|11⟩}:
//!
//! * the entanglement entropy of the mode-1 reduction (nats);
//! * the non-Gaussianity d_nG = (1 + Tr[ρ_G²] − 2 Tr[ρ ρ_G])/2, the squared
//!   Hilbert–Schmidt distance to the Gaussian state ρ_G with the same
//!   covariance matrix and mean, normalized by the purity;
//! * the best squared overlap with a two-mode squeezed vacuum, both as an
//!   affinity 𝓖 = max_s |⟨TB(s)|ψ⟩|² along the resource's own squeezing
//!   axis and as a twin-beam-relative non-Gaussianity
//!   1 − max_{s,φ'} |⟨TB(s,φ')|ψ⟩|² over the whole family.
//!
//! The covariance matrix of the family is closed-form (all first moments
//! vanish and the Bogoliubov algebra gives the second moments directly), so
//! d_nG involves no truncation at all. The overlaps use the disentangled
//! twin-beam coefficients, which keeps deep-squeezing scans cheap.

use nalgebra::{DMatrix, DVector, Matrix4, Vector4};
use num_complex::Complex64 as C64;

use crate::charfunc::{cf_resource, gaussian_cf_from_moments};
use crate::error::Result;
use crate::fock::{build_resource_with_tol, reduced_entropy, suggested_cutoff};
use crate::families::{ResourceSpec, SqueezeParam};
use crate::moments::gaussian_poly_integral;
use crate::optimizer::golden_max;

const PI: f64 = std::f64::consts::PI;

/// Quadrature covariance matrix and mean of a resource state, closed form,
/// ordering (x₁, p₁, x₂, p₂) with vacuum σ = I/2.
pub fn resource_covariance(spec: &ResourceSpec) -> (Matrix4<f64>, Vector4<f64>) {
    let zeta = spec.zeta();
    let (ch, sh) = (zeta.r().cosh(), zeta.r().sinh());
    let phase = C64::from_polar(1.0, zeta.phi());
    let (c1, c2) = spec.interior();

    // n̄ = ⟨a₁†a₁⟩ = ⟨a₂†a₂⟩, b = ⟨a₁a₂⟩; everything else vanishes
    let nbar = (ch * c2 - phase * sh * c1).norm_sqr() + 2.0 * sh * sh * c2.norm_sqr();
    let b = (ch * c1 - phase.conj() * sh * c2).conj() * (ch * c2 - phase * sh * c1)
        - 2.0 * ch * sh * phase * c2.norm_sqr();

    let d = nbar + 0.5;
    let sigma = Matrix4::new(
        d, 0.0, b.re, b.im, //
        0.0, d, b.im, -b.re, //
        b.re, b.im, d, 0.0, //
        b.im, -b.re, 0.0, d,
    );
    (sigma, Vector4::zeros())
}

/// Entanglement entropy (nats) of the mode-1 reduction.
pub fn entanglement_entropy(spec: &ResourceSpec) -> Result<f64> {
    let cutoff = suggested_cutoff(spec.zeta().r(), 1e-12);
    let st = build_resource_with_tol(spec, cutoff, 1e-9)?;
    reduced_entropy(&st)
}

/// Hilbert–Schmidt non-Gaussianity relative to the Gaussian state with the
/// same first and second moments.
pub fn non_gaussianity(spec: &ResourceSpec) -> Result<f64> {
    let (sigma, mean) = resource_covariance(spec);
    let d_sigma = DMatrix::from_fn(4, 4, |i, j| sigma[(i, j)]);
    let d_mean = DVector::from_fn(4, |i, _| mean[i]);
    let gauss_cf = gaussian_cf_from_moments(&d_sigma, &d_mean)?;
    let gauss_purity = 1.0 / (4.0 * sigma.determinant().sqrt());
    let integrand = cf_resource(spec).product(&gauss_cf.negated())?;
    let cross = gaussian_poly_integral(&integrand)? / (PI * PI);
    Ok((1.0 + gauss_purity - 2.0 * cross.re) / 2.0)
}

/// Squared overlap of the resource with the twin beam of squeezing `s` on
/// the resource's own phase axis: |c₁ + c₂ e^{−iφ} tanh(r − s)|² / cosh²(r − s).
pub fn twin_beam_overlap_sq(spec: &ResourceSpec, s: f64) -> f64 {
    let zeta = spec.zeta();
    let (c1, c2) = spec.interior();
    let u = zeta.r() - s;
    let phase = C64::from_polar(1.0, -zeta.phi());
    (c1 + c2 * phase * u.tanh()).norm_sqr() / u.cosh().powi(2)
}

/// Affinity to the squeezed-vacuum family: 𝓖 = max over s ∈ [0, 5] of the
/// squared overlap with the twin beam TB(s, φ) on the resource's phase axis.
/// Returns (𝓖, s*).
pub fn vacuum_affinity(spec: &ResourceSpec) -> (f64, f64) {
    let h = |s: f64| twin_beam_overlap_sq(spec, s);
    let (mut s_best, mut g_best) = golden_max(h, 0.0, 5.0, 1e-10);
    for s in [0.0, 5.0] {
        if h(s) > g_best {
            s_best = s;
            g_best = h(s);
        }
    }
    (g_best, s_best)
}

/// Non-Gaussianity measured against the twin-beam family itself:
/// 1 − max_{s,φ'} |⟨TB(s, φ')|ψ⟩|², with the maximizing twin beam returned.
///
/// The resource's diagonal Fock coefficients come from the matrix
/// exponential; the twin-beam side is the closed-form geometric series, so
/// the scan range costs nothing.
pub fn tb_relative_non_gaussianity(spec: &ResourceSpec) -> Result<(f64, SqueezeParam)> {
    let r = spec.zeta().r();
    let cutoff = suggested_cutoff(r, 1e-13);
    let st = build_resource_with_tol(spec, cutoff, 1e-10)?;
    let coeffs: Vec<C64> = (0..=cutoff).map(|n| st.amp(&[n, n]).expect("diagonal state")).collect();

    let overlap_sq = |s: f64, phi: f64| -> f64 {
        let w = -C64::from_polar(s.tanh(), phi);
        let mut pow = C64::new(1.0, 0.0);
        let mut acc = C64::new(0.0, 0.0);
        for c in &coeffs {
            acc += c.conj() * pow;
            pow *= w;
        }
        acc.norm_sqr() / s.cosh().powi(2)
    };

    let s_max = r + 2.0;
    let mut best = (0.0f64, 0.0f64, f64::NEG_INFINITY);
    for i in 0..=32 {
        let s = s_max * i as f64 / 32.0;
        for j in 0..24 {
            let phi = 2.0 * PI * j as f64 / 24.0;
            let v = overlap_sq(s, phi);
            if v > best.2 {
                best = (s, phi, v);
            }
        }
    }
    let (mut s, mut phi, mut val) = best;
    for _ in 0..4 {
        let (s_new, _) = golden_max(|x| overlap_sq(x, phi), (s - 0.4).max(0.0), s + 0.4, 1e-11);
        s = s_new;
        let (phi_new, v) = golden_max(|p| overlap_sq(s, p), phi - 0.5, phi + 0.5, 1e-11);
        phi = phi_new;
        val = v;
    }
    Ok((1.0 - val, SqueezeParam::new(s, phi.rem_euclid(2.0 * PI))?))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricReport {
    pub entropy: f64,
    pub non_gaussianity: f64,
    pub tb_relative_non_gaussianity: f64,
    pub nearest_twin_beam: SqueezeParam,
    pub affinity: f64,
    pub affinity_squeezing: f64,
}

/// All diagnostics for one resource.
pub fn metric_report(spec: &ResourceSpec) -> Result<MetricReport> {
    let entropy = entanglement_entropy(spec)?;
    let non_gauss = non_gaussianity(spec)?;
    let (tb_rel, nearest) = tb_relative_non_gaussianity(spec)?;
    let (affinity, s_star) = vacuum_affinity(spec);
    Ok(MetricReport {
        entropy,
        non_gaussianity: non_gauss,
        tb_relative_non_gaussianity: tb_rel,
        nearest_twin_beam: nearest,
        affinity,
        affinity_squeezing: s_star,
    })
}
