//! The teleportation channel in the characteristic-function picture.
//!
//! For an ideal Braunstein–Kimble protocol the output state of mode 2 after
//! the double-homodyne measurement on the input and mode 1 is, for every
//! measurement record after displacement correction,
//!
//! ```text
//! χ_out(α) = χ_in(α) · χ_res(ᾱ, α),
//! ```
//!
//! and the teleportation fidelity against the (pure) input is
//!
//! ```text
//! 𝓕 = (1/π) ∫ χ_in(λ) χ_out(−λ) d²λ.
//! ```
//!
//! Both factors live in the Gaussian-times-polynomial class, so 𝓕 reduces to
//! the closed-form moment integral of [`crate::moments`]. A trapezoidal
//! phase-space quadrature of the same integrand is kept alongside as an
//! independent slow path; for entire integrands of this Gaussian type the
//! trapezoid rule converges geometrically, so successive grid doublings give
//! a reliable error estimate.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::charfunc::{cf_input, cf_resource, GaussPolyCF};
use crate::error::{Error, Result};
use crate::families::{InputSpec, ResourceSpec};
use crate::moments::gaussian_poly_integral;
use crate::poly::Poly;

const PI: f64 = std::f64::consts::PI;

/// How a fidelity value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    /// Converged phase-space quadrature; carries the final grid side length.
    Quadrature { grid: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidelityResult {
    pub value: f64,
    pub est_error: f64,
    pub method: Method,
    /// False when the Gaussian envelope of the integrand is so wide that the
    /// automatic quadrature box is suspect (smallest eigenvalue of the total
    /// quadratic form below 0.02). Closed-form results always set true.
    pub envelope_ok: bool,
}

/// χ_out(α) = χ_in(α) χ_res(ᾱ, α).
pub fn output_cf(input: &GaussPolyCF, resource: &GaussPolyCF) -> Result<GaussPolyCF> {
    if input.modes() != 1 {
        return Err(Error::ModeMismatch { expected: 1, got: input.modes() });
    }
    if resource.modes() != 2 {
        return Err(Error::ModeMismatch { expected: 2, got: resource.modes() });
    }
    // α₁ → ᾱ, α₂ → α: real map (x₁,y₁,x₂,y₂) = (x, −y, x, y)
    let real_map = DMatrix::from_row_slice(4, 2, &[1.0, 0.0, 0.0, -1.0, 1.0, 0.0, 0.0, 1.0]);
    let var_map = [Poly::var(2, 1), Poly::var(2, 0), Poly::var(2, 0), Poly::var(2, 1)];
    let pulled = resource.pullback(&real_map, &var_map)?;
    input.product(&pulled)
}

/// The function under the fidelity integral, λ ↦ χ_in(λ) χ_out(−λ).
pub fn fidelity_integrand(input: &GaussPolyCF, resource: &GaussPolyCF) -> Result<GaussPolyCF> {
    let out_neg = output_cf(input, resource)?.negated();
    input.product(&out_neg)
}

fn min_eigenvalue(q: &DMatrix<f64>) -> f64 {
    q.clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::INFINITY, |acc, &e| acc.min(e))
}

/// Closed-form fidelity from prebuilt characteristic functions.
pub fn fidelity_from_cfs(input: &GaussPolyCF, resource: &GaussPolyCF) -> Result<FidelityResult> {
    let integrand = fidelity_integrand(input, resource)?;
    let raw = gaussian_poly_integral(&integrand)? / PI;
    Ok(FidelityResult {
        value: raw.re,
        est_error: raw.im.abs() + 1e-14 * raw.re.abs().max(1.0),
        method: Method::ClosedForm,
        envelope_ok: true,
    })
}

/// Closed-form teleportation fidelity for an input/resource pair.
pub fn fidelity(input: &InputSpec, resource: &ResourceSpec) -> Result<FidelityResult> {
    fidelity_from_cfs(&cf_input(input)?, &cf_resource(resource))
}

fn trapezoid_2d(cf: &GaussPolyCF, half_width: f64, n: usize) -> Result<C64> {
    let h = 2.0 * half_width / (n - 1) as f64;
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..n {
        let x = -half_width + i as f64 * h;
        let wx = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        for j in 0..n {
            let y = -half_width + j as f64 * h;
            let wy = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
            acc += cf.evaluate(&[C64::new(x, y)])? * (wx * wy);
        }
    }
    Ok(acc * h * h)
}

/// Fidelity by direct phase-space quadrature of the same integrand the
/// closed form uses. Grids double from 65² until successive values agree to
/// `tol`; failure to converge by 1025² is reported as such, carrying the
/// best value.
pub fn fidelity_quadrature_from_cfs(
    input: &GaussPolyCF,
    resource: &GaussPolyCF,
    tol: f64,
) -> Result<FidelityResult> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain(format!("quadrature tolerance must be positive, got {tol}")));
    }
    let integrand = fidelity_integrand(input, resource)?;
    let lambda_min = min_eigenvalue(integrand.quad());
    if lambda_min <= 0.0 {
        return Err(Error::Domain("integrand envelope is not positive definite".into()));
    }
    let envelope_ok = lambda_min >= 0.02;
    let half_width = (6.0f64).max((1.0 / tol).ln().sqrt() + 4.0) / lambda_min.sqrt();

    let mut prev: Option<C64> = None;
    let mut best = C64::new(0.0, 0.0);
    let mut est = f64::INFINITY;
    let mut iterations = 0usize;
    for &n in &[65usize, 129, 257, 513, 1025] {
        let val = trapezoid_2d(&integrand, half_width, n)? / PI;
        iterations += 1;
        if let Some(p) = prev {
            est = (val - p).norm();
            if est <= tol * val.norm().max(1.0) {
                return Ok(FidelityResult {
                    value: val.re,
                    est_error: est + val.im.abs(),
                    method: Method::Quadrature { grid: n },
                    envelope_ok,
                });
            }
        }
        best = val;
        prev = Some(val);
    }
    Err(Error::NoConvergence { best: best.re, est_error: est, iterations })
}

/// Quadrature fidelity for an input/resource pair.
pub fn fidelity_quadrature(
    input: &InputSpec,
    resource: &ResourceSpec,
    tol: f64,
) -> Result<FidelityResult> {
    fidelity_quadrature_from_cfs(&cf_input(input)?, &cf_resource(resource), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::SqueezeParam;

    fn tb(r: f64) -> ResourceSpec {
        ResourceSpec::TwinBeam { zeta: SqueezeParam::new(r, PI).unwrap() }
    }

    #[test]
    fn coherent_over_twin_beam_closed_form() {
        // 𝓕 = 1/(1 + e^{−2r}), independent of the coherent amplitude
        let beta = C64::new(0.7, -1.1);
        for &r in &[0.0, 0.4, 1.0, 2.5] {
            let f = fidelity(&InputSpec::Coherent { beta }, &tb(r)).unwrap();
            let expect = 1.0 / (1.0 + (-2.0 * r).exp());
            assert!((f.value - expect).abs() < 1e-12, "r = {r}: {} vs {expect}", f.value);
        }
    }

    #[test]
    fn coherent_fidelity_does_not_depend_on_displacement() {
        let f0 = fidelity(&InputSpec::Coherent { beta: C64::new(0.0, 0.0) }, &tb(0.7)).unwrap();
        let f1 = fidelity(&InputSpec::Coherent { beta: C64::new(2.0, -3.0) }, &tb(0.7)).unwrap();
        assert!((f0.value - f1.value).abs() < 1e-12);
    }

    #[test]
    fn single_photon_benchmarks() {
        // twin beam at r = 0 (no entanglement): 𝓕 = 1/4
        let f = fidelity(&InputSpec::Fock1, &tb(0.0)).unwrap();
        assert!((f.value - 0.25).abs() < 1e-12, "{}", f.value);
        // bare Bell superposition (r = 0, δ = π/4): 𝓕 = 3/8
        let bell = ResourceSpec::SqueezedBell {
            zeta: SqueezeParam::new(0.0, PI).unwrap(),
            delta: PI / 4.0,
            theta: 0.0,
        };
        let f = fidelity(&InputSpec::Fock1, &bell).unwrap();
        assert!((f.value - 0.375).abs() < 1e-12, "{}", f.value);
    }

    #[test]
    fn squeezed_number_at_zero_squeezing() {
        // resource |11⟩ teleporting a coherent state: 𝓕 = 1/4
        let sn = ResourceSpec::SqueezedNumber { zeta: SqueezeParam::new(0.0, PI).unwrap() };
        let f = fidelity(&InputSpec::Coherent { beta: C64::new(0.3, 0.2) }, &sn).unwrap();
        assert!((f.value - 0.25).abs() < 1e-12, "{}", f.value);
    }

    #[test]
    fn coherent_over_squeezed_bell_closed_form() {
        // 𝓕 = 1/A + sin 2δ · ε/A² + (1 − cos 2δ)(−ε/A² + ε²/A³), ε = e^{−2r}, A = 1 + ε
        for &(r, delta) in &[(0.3, 0.5), (0.8, 0.3), (1.5, 1.0)] {
            let spec = ResourceSpec::SqueezedBell {
                zeta: SqueezeParam::new(r, PI).unwrap(),
                delta,
                theta: 0.0,
            };
            let eps = (-2.0 * r).exp();
            let a = 1.0 + eps;
            let expect = 1.0 / a + (2.0 * delta).sin() * eps / (a * a)
                + (1.0 - (2.0 * delta).cos()) * (-eps / (a * a) + eps * eps / (a * a * a));
            let f = fidelity(&InputSpec::Coherent { beta: C64::new(0.0, 0.0) }, &spec).unwrap();
            assert!(
                (f.value - expect).abs() < 1e-12,
                "r = {r}, δ = {delta}: {} vs {expect}",
                f.value
            );
        }
    }

    #[test]
    fn strong_squeezing_teleports_everything_well() {
        let inputs = [
            InputSpec::Coherent { beta: C64::new(0.5, 0.1) },
            InputSpec::SqueezedVacuum { s: 0.6, varphi: 0.4 },
            InputSpec::Fock1,
            InputSpec::PhotonAddedCoherent { beta: C64::new(0.5, 0.1) },
            InputSpec::SqueezedFock1 { s: 0.6, varphi: 0.4 },
        ];
        for spec in inputs {
            let f = fidelity(&spec, &tb(5.0)).unwrap();
            assert!(f.value > 0.99, "{spec:?}: {}", f.value);
            assert!(f.value <= 1.0 + 1e-10, "{spec:?}: {}", f.value);
        }
    }

    #[test]
    fn quadrature_agrees_with_closed_form() {
        let cases: Vec<(InputSpec, ResourceSpec)> = vec![
            (InputSpec::Coherent { beta: C64::new(0.4, 0.3) }, tb(0.8)),
            (
                InputSpec::Fock1,
                ResourceSpec::SqueezedBell {
                    zeta: SqueezeParam::new(0.9, PI).unwrap(),
                    delta: 0.4,
                    theta: 0.2,
                },
            ),
            (
                InputSpec::SqueezedFock1 { s: 0.8, varphi: 1.0 },
                ResourceSpec::PhotonSubtracted { zeta: SqueezeParam::new(1.2, PI).unwrap() },
            ),
        ];
        for (input, resource) in cases {
            let closed = fidelity(&input, &resource).unwrap();
            let quad = fidelity_quadrature(&input, &resource, 1e-9).unwrap();
            assert!(
                (closed.value - quad.value).abs() < 1e-7,
                "{input:?} / {resource:?}: {} vs {}",
                closed.value,
                quad.value
            );
            assert!(matches!(quad.method, Method::Quadrature { .. }));
            assert!(quad.envelope_ok);
        }
    }

    #[test]
    fn output_cf_reduces_to_input_at_infinite_squeezing() {
        // EPR limit: χ_res(ᾱ, α) → 1 pointwise, so χ_out → χ_in
        let input = cf_input(&InputSpec::Fock1).unwrap();
        let res = cf_resource(&tb(6.0));
        let out = output_cf(&input, &res).unwrap();
        for a in [C64::new(0.3, 0.2), C64::new(-0.5, 0.6)] {
            let o = out.evaluate(&[a]).unwrap();
            let i = input.evaluate(&[a]).unwrap();
            assert!((o - i).norm() < 1e-2, "at {a}: {o} vs {i}");
        }
    }
}
