//! Exact integrals of Gaussian-times-polynomial characteristic functions.
//!
//! For χ in the [`GaussPolyCF`] class,
//!
//! ```text
//! ∫ χ d^{2n}α = Z · E[P(v)],        Z = (2π)^{d/2} det(Q)^{−1/2} e^{½ lᵀμ},
//! ```
//!
//! where the expectation is over v ~ N(μ = Q⁻¹l, Σ = Q⁻¹) and is evaluated
//! by the Wick recursion with mean,
//!
//! ```text
//! E[vₐ ∏ v^k] = μₐ E[∏ v^k] + Σ_b Σ_{ab} k_b E[∏ v^{k−e_b}].
//! ```
//!
//! The "mean" μ is complex when l is (displaced inputs); the recursion does
//! not care. Memoization keyed on the exponent vector keeps the cost linear
//! in the number of distinct sub-monomials, which for the degree-8
//! polynomials produced by the teleporter is negligible.

use std::collections::HashMap;

use nalgebra::{Cholesky, DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::charfunc::GaussPolyCF;
use crate::error::{Error, Result};
use crate::poly::Poly;

fn moment(
    expo: &[u8],
    mu: &DVector<C64>,
    sigma: &DMatrix<f64>,
    memo: &mut HashMap<Vec<u8>, C64>,
) -> C64 {
    let Some(a) = expo.iter().position(|&k| k > 0) else {
        return C64::new(1.0, 0.0);
    };
    if let Some(&v) = memo.get(expo) {
        return v;
    }
    let mut rest = expo.to_vec();
    rest[a] -= 1;
    let mut acc = mu[a] * moment(&rest, mu, sigma, memo);
    for b in 0..rest.len() {
        if rest[b] > 0 && sigma[(a, b)] != 0.0 {
            let mut lower = rest.clone();
            lower[b] -= 1;
            acc += sigma[(a, b)] * (rest[b] as f64) * moment(&lower, mu, sigma, memo);
        }
    }
    memo.insert(expo.to_vec(), acc);
    acc
}

/// ∫ χ(α) d²α₁…d²αₙ over the whole phase space.
///
/// Fails with a domain error when the Gaussian part is not positive
/// definite, in which case the integral does not exist.
pub fn gaussian_poly_integral(cf: &GaussPolyCF) -> Result<C64> {
    let d = 2 * cf.modes();
    let chol = Cholesky::new(cf.quad().clone())
        .ok_or_else(|| Error::Domain("gaussian weight is not positive definite".into()))?;
    let sigma = chol.inverse();
    let lin = cf.lin();
    let mu = DVector::from_fn(d, |i, _| {
        (0..d).map(|j| sigma[(i, j)] * lin[j]).sum::<C64>()
    });
    let half_l_mu: C64 = (0..d).map(|i| lin[i] * mu[i]).sum::<C64>() * 0.5;
    let z = (2.0 * std::f64::consts::PI).powf(d as f64 / 2.0) / chol.determinant().sqrt()
        * half_l_mu.exp();

    // rewrite P(α, ᾱ) over the real coordinates v
    let mut subs = Vec::with_capacity(d);
    for k in 0..cf.modes() {
        let x = Poly::var(d, 2 * k);
        let y = Poly::var(d, 2 * k + 1);
        subs.push(x.add(&y.scale(C64::new(0.0, 1.0))));
        subs.push(x.add(&y.scale(C64::new(0.0, -1.0))));
    }
    let real_poly = cf.poly().compose(&subs);

    let mut memo = HashMap::new();
    let mut acc = C64::new(0.0, 0.0);
    for (expo, coef) in real_poly.terms() {
        acc += coef * moment(expo, &mu, &sigma, &mut memo);
    }
    Ok(z * acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charfunc::{cf_input, cf_resource};
    use crate::families::{InputSpec, ResourceSpec, SqueezeParam};

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn plain_gaussian_normalization() {
        // ∫ e^{−|α|²} d²α = π
        let cf = GaussPolyCF::new(
            1,
            DMatrix::identity(2, 2) * 2.0,
            DVector::zeros(2),
            Poly::one(2),
        )
        .unwrap();
        let v = gaussian_poly_integral(&cf).unwrap();
        assert!((v.re - PI).abs() < 1e-13 && v.im.abs() < 1e-15);
    }

    #[test]
    fn displaced_gaussian_matches_completed_square() {
        // ∫ e^{−|α|² + l·v} d²α = π e^{(l₁²+l₂²)/4}
        let l1 = C64::new(0.0, 0.6);
        let l2 = C64::new(0.0, -0.9);
        let cf = GaussPolyCF::new(
            1,
            DMatrix::identity(2, 2) * 2.0,
            DVector::from_vec(vec![l1, l2]),
            Poly::one(2),
        )
        .unwrap();
        let v = gaussian_poly_integral(&cf).unwrap();
        let expect = PI * ((l1 * l1 + l2 * l2) / 4.0).exp();
        assert!((v - expect).norm() < 1e-13, "{v} vs {expect}");
    }

    #[test]
    fn polynomial_moments_match_by_hand_values() {
        // ∫ |α|² e^{−|α|²} d²α = π, ∫ |α|⁴ e^{−|α|²} d²α = 2π
        for (pow, expect) in [(1u8, PI), (2u8, 2.0 * PI)] {
            let mut poly = Poly::zero(2);
            poly.add_term(vec![pow, pow], C64::new(1.0, 0.0));
            let cf = GaussPolyCF::new(
                1,
                DMatrix::identity(2, 2) * 2.0,
                DVector::zeros(2),
                poly,
            )
            .unwrap();
            let v = gaussian_poly_integral(&cf).unwrap();
            assert!((v.re - expect).abs() < 1e-12, "|α|^{}: {v}", 2 * pow);
        }
    }

    #[test]
    fn purity_of_pure_input_states_is_one() {
        // Tr[ρ²] = (1/π) ∫ χ(λ) χ(−λ) d²λ
        let inputs = [
            InputSpec::Coherent { beta: C64::new(0.4, -0.3) },
            InputSpec::SqueezedVacuum { s: 0.9, varphi: 1.3 },
            InputSpec::Fock1,
            InputSpec::PhotonAddedCoherent { beta: C64::new(0.4, -0.3) },
            InputSpec::SqueezedFock1 { s: 0.9, varphi: 1.3 },
        ];
        for spec in inputs {
            let cf = cf_input(&spec).unwrap();
            let prod = cf.product(&cf.negated()).unwrap();
            let v = gaussian_poly_integral(&prod).unwrap() / PI;
            assert!((v.re - 1.0).abs() < 1e-11 && v.im.abs() < 1e-12, "{spec:?}: {v}");
        }
    }

    #[test]
    fn purity_of_pure_resource_states_is_one() {
        // two-mode version, degree-8 polynomial under the integral
        let resources = [
            ResourceSpec::TwinBeam { zeta: SqueezeParam::new(0.8, PI).unwrap() },
            ResourceSpec::SqueezedNumber { zeta: SqueezeParam::new(0.6, 2.0).unwrap() },
            ResourceSpec::PhotonAdded { zeta: SqueezeParam::new(0.7, PI).unwrap() },
            ResourceSpec::PhotonSubtracted { zeta: SqueezeParam::new(0.9, PI).unwrap() },
            ResourceSpec::SqueezedBell {
                zeta: SqueezeParam::new(1.1, PI).unwrap(),
                delta: 0.6,
                theta: 0.8,
            },
        ];
        for spec in resources {
            let cf = cf_resource(&spec);
            let prod = cf.product(&cf.negated()).unwrap();
            let v = gaussian_poly_integral(&prod).unwrap() / (PI * PI);
            assert!((v.re - 1.0).abs() < 1e-10 && v.im.abs() < 1e-11, "{spec:?}: {v}");
        }
    }

    #[test]
    fn indefinite_weight_is_rejected() {
        let mut q = DMatrix::identity(2, 2);
        q[(1, 1)] = -1.0;
        let cf = GaussPolyCF::new(1, q, DVector::zeros(2), Poly::one(2)).unwrap();
        assert!(matches!(gaussian_poly_integral(&cf), Err(Error::Domain(_))));
    }
}
