//! Characteristic functions in Gaussian-times-polynomial form.
//!
//! Every state this crate cares about has a symmetric-order characteristic
//! function χ(α₁, …, αₙ) = Tr[ρ D(α₁)⊗…⊗D(αₙ)] of the shape
//!
//! ```text
//! χ(α) = exp(−½ vᵀ Q v + lᵀ v) · P(α₁, ᾱ₁, …, αₙ, ᾱₙ),
//! ```
//!
//! where v = (Re α₁, Im α₁, …) is the real coordinate vector, Q is a real
//! symmetric positive matrix, l a complex vector, and P a polynomial. The
//! resource family S₁₂(ζ){c₁|00⟩ + c₂|11⟩} has
//!
//! ```text
//! χ = e^{−(|ξ₁|²+|ξ₂|²)/2} [ |c₁|² + c₁c̄₂ ξ₁ξ₂ + c̄₁c₂ ξ̄₁ξ̄₂
//!                             + |c₂|² (1−|ξ₁|²)(1−|ξ₂|²) ],
//! ξ₁ = α₁ cosh r + ᾱ₂ e^{iφ} sinh r,   ξ₂ = α₂ cosh r + ᾱ₁ e^{iφ} sinh r,
//! ```
//!
//! which the tests pin against brute-force Fock-space evaluation. Products,
//! point reflections and linear substitutions stay inside the class, which is
//! what makes the teleportation fidelity a closed-form Gaussian moment
//! problem.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::families::{InputSpec, ResourceSpec};
use crate::fock::FockState;
use crate::poly::Poly;

const C_ONE: C64 = C64::new(1.0, 0.0);

/// χ(α) = exp(−½ vᵀ Q v + lᵀ v) · P(α, ᾱ).
///
/// Polynomial variables are ordered (α₁, ᾱ₁, α₂, ᾱ₂, …); the real vector v
/// is (Re α₁, Im α₁, …), so `quad` is 2n × 2n and `lin` has length 2n.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussPolyCF {
    modes: usize,
    quad: DMatrix<f64>,
    lin: DVector<C64>,
    poly: Poly,
}

impl GaussPolyCF {
    pub fn new(modes: usize, quad: DMatrix<f64>, lin: DVector<C64>, poly: Poly) -> Result<Self> {
        let d = 2 * modes;
        if quad.nrows() != d || quad.ncols() != d {
            return Err(Error::Domain(format!(
                "quadratic form is {}×{}, expected {d}×{d}",
                quad.nrows(),
                quad.ncols()
            )));
        }
        if lin.len() != d {
            return Err(Error::Domain(format!("linear term has length {}, expected {d}", lin.len())));
        }
        if poly.nvars() != d {
            return Err(Error::Domain(format!(
                "polynomial has {} variables, expected {d}",
                poly.nvars()
            )));
        }
        let asym = (&quad - quad.transpose()).abs().max();
        if asym > 1e-12 {
            return Err(Error::Domain(format!("quadratic form is not symmetric (asymmetry {asym:.2e})")));
        }
        Ok(Self { modes, quad, lin, poly })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn quad(&self) -> &DMatrix<f64> {
        &self.quad
    }

    pub fn lin(&self) -> &DVector<C64> {
        &self.lin
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn evaluate(&self, alphas: &[C64]) -> Result<C64> {
        if alphas.len() != self.modes {
            return Err(Error::ModeMismatch { expected: self.modes, got: alphas.len() });
        }
        let d = 2 * self.modes;
        let mut v = DVector::<f64>::zeros(d);
        let mut cvars = Vec::with_capacity(d);
        for (k, a) in alphas.iter().enumerate() {
            v[2 * k] = a.re;
            v[2 * k + 1] = a.im;
            cvars.push(*a);
            cvars.push(a.conj());
        }
        let qf = (v.transpose() * &self.quad * &v)[(0, 0)];
        let mut lin = C64::new(0.0, 0.0);
        for i in 0..d {
            lin += self.lin[i] * v[i];
        }
        Ok((C64::new(-0.5 * qf, 0.0) + lin).exp() * self.poly.eval(&cvars))
    }

    /// Pointwise product; both factors must live on the same modes.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.modes != other.modes {
            return Err(Error::ModeMismatch { expected: self.modes, got: other.modes });
        }
        Ok(Self {
            modes: self.modes,
            quad: &self.quad + &other.quad,
            lin: &self.lin + &other.lin,
            poly: self.poly.mul(&other.poly),
        })
    }

    /// χ(−α).
    pub fn negated(&self) -> Self {
        Self {
            modes: self.modes,
            quad: self.quad.clone(),
            lin: -&self.lin,
            poly: self.poly.negate_vars(),
        }
    }

    /// Substitute a real-linear change of argument: the old real vector is
    /// `real_map · v_new` and the old polynomial variables are given by
    /// `var_map` (one polynomial in the new variables per old variable).
    ///
    /// The two descriptions must agree; nothing checks that, the callers own
    /// it. Used for the teleporter pullback α₁ → ᾱ, α₂ → α.
    pub fn pullback(&self, real_map: &DMatrix<f64>, var_map: &[Poly]) -> Result<Self> {
        let d_old = 2 * self.modes;
        if real_map.nrows() != d_old || !real_map.ncols().is_multiple_of(2) {
            return Err(Error::Domain(format!(
                "pullback map is {}×{}, expected {} rows and an even column count",
                real_map.nrows(),
                real_map.ncols(),
                d_old
            )));
        }
        if var_map.len() != d_old {
            return Err(Error::Domain(format!(
                "pullback substitutes {} variables, expected {d_old}",
                var_map.len()
            )));
        }
        let modes = real_map.ncols() / 2;
        let quad = real_map.transpose() * &self.quad * real_map;
        let lin = DVector::from_fn(real_map.ncols(), |j, _| {
            (0..d_old).map(|i| self.lin[i] * real_map[(i, j)]).sum()
        });
        let poly = self.poly.compose(var_map);
        Self::new(modes, quad, lin, poly)
    }
}

/// Real 2×2 block expressing ξ = c_diag·α + c_conj·ᾱ on (Re, Im) coordinates:
/// rows are (Re ξ, Im ξ) as functions of (Re α, Im α).
fn conj_linear_block(c_diag: f64, c_conj: C64) -> [[f64; 2]; 2] {
    [[c_diag + c_conj.re, c_conj.im], [c_conj.im, c_diag - c_conj.re]]
}

/// Resource characteristic function on two modes.
pub fn cf_resource(spec: &ResourceSpec) -> GaussPolyCF {
    let zeta = spec.zeta();
    let (ch, sh) = (zeta.r().cosh(), zeta.r().sinh());
    let phase = C64::from_polar(1.0, zeta.phi());
    let (c1, c2) = spec.interior();

    // (Re ξ₁, Im ξ₁, Re ξ₂, Im ξ₂) = T · (x₁, y₁, x₂, y₂)
    let own = conj_linear_block(ch, C64::new(0.0, 0.0));
    let cross = conj_linear_block(0.0, phase * sh);
    let mut t = DMatrix::<f64>::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            t[(i, j)] = own[i][j];
            t[(i, 2 + j)] = cross[i][j];
            t[(2 + i, 2 + j)] = own[i][j];
            t[(2 + i, j)] = cross[i][j];
        }
    }
    let quad = t.transpose() * &t;

    let xi1 = Poly::var(4, 0).scale(ch.into()).add(&Poly::var(4, 3).scale(phase * sh));
    let xi2 = Poly::var(4, 2).scale(ch.into()).add(&Poly::var(4, 1).scale(phase * sh));
    let xi1c = Poly::var(4, 1).scale(ch.into()).add(&Poly::var(4, 2).scale(phase.conj() * sh));
    let xi2c = Poly::var(4, 3).scale(ch.into()).add(&Poly::var(4, 0).scale(phase.conj() * sh));

    let one = Poly::one(4);
    let mut poly = Poly::constant(4, c1.norm_sqr().into());
    poly = poly.add(&xi1.mul(&xi2).scale(c1 * c2.conj()));
    poly = poly.add(&xi1c.mul(&xi2c).scale(c1.conj() * c2));
    let fac1 = one.sub(&xi1.mul(&xi1c));
    let fac2 = one.sub(&xi2.mul(&xi2c));
    poly = poly.add(&fac1.mul(&fac2).scale(c2.norm_sqr().into()));

    GaussPolyCF::new(2, quad, DVector::zeros(4), poly).expect("resource CF dimensions are static")
}

/// Input characteristic function on one mode.
pub fn cf_input(spec: &InputSpec) -> Result<GaussPolyCF> {
    spec.validate()?;
    let identity = DMatrix::<f64>::identity(2, 2);
    let squeeze_quad = |s: f64, varphi: f64| {
        let b = conj_linear_block(s.cosh(), C64::from_polar(s.sinh(), varphi));
        let t = DMatrix::<f64>::from_row_slice(2, 2, &[b[0][0], b[0][1], b[1][0], b[1][1]]);
        t.transpose() * t
    };
    let cf = match *spec {
        InputSpec::Coherent { beta } => {
            let lin = DVector::from_vec(vec![
                C64::new(0.0, -2.0 * beta.im),
                C64::new(0.0, 2.0 * beta.re),
            ]);
            GaussPolyCF::new(1, identity, lin, Poly::one(2))?
        }
        InputSpec::SqueezedVacuum { s, varphi } => {
            GaussPolyCF::new(1, squeeze_quad(s, varphi), DVector::zeros(2), Poly::one(2))?
        }
        InputSpec::Fock1 => {
            let mut poly = Poly::one(2);
            poly.add_term(vec![1, 1], (-1.0).into());
            GaussPolyCF::new(1, identity, DVector::zeros(2), poly)?
        }
        InputSpec::PhotonAddedCoherent { beta } => {
            let lin = DVector::from_vec(vec![
                C64::new(0.0, -2.0 * beta.im),
                C64::new(0.0, 2.0 * beta.re),
            ]);
            let w = 1.0 + beta.norm_sqr();
            let mut poly = Poly::constant(2, w.into());
            // αβ̄ − ᾱβ − αᾱ, then everything divided by 1 + |β|²
            poly.add_term(vec![1, 0], beta.conj());
            poly.add_term(vec![0, 1], -beta);
            poly.add_term(vec![1, 1], (-1.0).into());
            GaussPolyCF::new(1, identity, lin, poly.scale((1.0 / w).into()))?
        }
        InputSpec::SqueezedFock1 { s, varphi } => {
            let conj_coef = C64::from_polar(s.sinh(), varphi);
            let xi = Poly::var(2, 0).scale(s.cosh().into()).add(&Poly::var(2, 1).scale(conj_coef));
            let xic =
                Poly::var(2, 1).scale(s.cosh().into()).add(&Poly::var(2, 0).scale(conj_coef.conj()));
            let poly = Poly::one(2).sub(&xi.mul(&xic));
            GaussPolyCF::new(1, squeeze_quad(s, varphi), DVector::zeros(2), poly)?
        }
    };
    Ok(cf)
}

/// Gaussian characteristic function with the given quadrature covariance and
/// mean, ordered (x₁, p₁, …) with vacuum σ = I/2.
pub fn gaussian_cf_from_moments(sigma: &DMatrix<f64>, mean: &DVector<f64>) -> Result<GaussPolyCF> {
    let d = sigma.nrows();
    if !d.is_multiple_of(2) || sigma.ncols() != d || mean.len() != d {
        return Err(Error::Domain(format!(
            "moment dimensions {}×{} / {} are not a valid n-mode set",
            sigma.nrows(),
            sigma.ncols(),
            mean.len()
        )));
    }
    let modes = d / 2;
    let mut j = DMatrix::<f64>::zeros(d, d);
    for k in 0..modes {
        j[(2 * k, 2 * k + 1)] = 1.0;
        j[(2 * k + 1, 2 * k)] = -1.0;
    }
    let quad = 2.0 * j.transpose() * sigma * &j;
    let quad = (&quad + quad.transpose()) * 0.5;
    let jt_m = j.transpose() * mean;
    let lin = DVector::from_fn(d, |i, _| C64::new(0.0, std::f64::consts::SQRT_2 * jt_m[i]));
    GaussPolyCF::new(modes, quad, lin, Poly::one(d))
}

/// ⟨m|D(α)|n⟩ with D(α) = exp(αa† − ᾱa), via generalized Laguerre
/// polynomials.
pub fn displacement_matrix_element(m: usize, n: usize, alpha: C64) -> C64 {
    let x = alpha.norm_sqr();
    let (p, q, step) = if m >= n { (m, n, alpha) } else { (n, m, -alpha.conj()) };
    let a = (p - q) as f64;
    // √(q!/p!) step^{p−q}
    let mut pref = C_ONE;
    for k in q + 1..=p {
        pref *= step / (k as f64).sqrt();
    }
    // L_q^{(p−q)}(x) by upward recurrence in the degree
    let mut lag_prev = 1.0;
    let mut lag = 1.0 + a - x;
    let l_q = if q == 0 {
        lag_prev
    } else {
        for k in 1..q {
            let next = ((2.0 * k as f64 + 1.0 + a - x) * lag - (k as f64 + a) * lag_prev)
                / (k as f64 + 1.0);
            lag_prev = lag;
            lag = next;
        }
        lag
    };
    pref * (-x / 2.0).exp() * l_q
}

/// χ(α₁, …) = ⟨ψ| D(α₁)⊗… |ψ⟩ evaluated brute force in the Fock basis.
pub fn cf_from_fock(state: &FockState, alphas: &[C64]) -> Result<C64> {
    if alphas.len() != state.num_modes() {
        return Err(Error::ModeMismatch { expected: state.num_modes(), got: alphas.len() });
    }
    let dims = state.dims().to_vec();
    let mut amps = state.amps().to_vec();
    // apply D(α_k) along each axis in turn
    let mut stride_after: Vec<usize> = vec![1; dims.len()];
    for m in (0..dims.len().saturating_sub(1)).rev() {
        stride_after[m] = stride_after[m + 1] * dims[m + 1];
    }
    for (mode, (&d, alpha)) in dims.iter().zip(alphas).enumerate() {
        let dmat: Vec<C64> = (0..d * d)
            .map(|f| displacement_matrix_element(f / d, f % d, *alpha))
            .collect();
        let stride = stride_after[mode];
        let block = d * stride;
        let mut out = vec![C64::new(0.0, 0.0); amps.len()];
        for base in 0..amps.len() / block {
            for rem in 0..stride {
                let off = base * block + rem;
                for i in 0..d {
                    let mut acc = C64::new(0.0, 0.0);
                    for jj in 0..d {
                        acc += dmat[i * d + jj] * amps[off + jj * stride];
                    }
                    out[off + i * stride] = acc;
                }
            }
        }
        amps = out;
    }
    Ok(state
        .amps()
        .iter()
        .zip(&amps)
        .map(|(orig, moved)| orig.conj() * moved)
        .sum())
}
