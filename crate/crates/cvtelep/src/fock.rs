//! Truncated Fock-space states and the brute-force reference machinery.
//!
//! Everything here works on dense photon-number tensors so that the analytic
//! layers (characteristic functions, Gaussian-moment fidelities) can be
//! checked against direct matrix arithmetic.
//!
//! The two-mode squeezer is the unitary
//!
//! ```text
//! S₁₂(ζ) = exp(−ζ a₁†a₂† + ζ* a₁a₂),      ζ = r e^{iφ},
//! ```
//!
//! with Bogoliubov action S† aᵢ S = cosh r · aᵢ − e^{iφ} sinh r · aⱼ† (i ≠ j).
//! It is applied by exponentiating the truncated anti-Hermitian generator
//! (scaled Taylor series applied to the state vector). On the pair-diagonal
//! subspace span{|n,n⟩} the generator is tridiagonal,
//!
//! ```text
//! (G c)ₙ = −ζ n c_{n−1} + ζ* (n+1) c_{n+1},
//! ```
//!
//! which is what every resource family reduces to; the dense two-mode form is
//! kept for states that leave the diagonal.
//!
//! Entropies are natural-log (nats) throughout.

use nalgebra::{DMatrix, Matrix4, Vector4};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::families::{InputSpec, ResourceSpec, SqueezeParam};

const C_ZERO: C64 = C64::new(0.0, 0.0);
const C_ONE: C64 = C64::new(1.0, 0.0);

/// Default norm tolerance enforced by the state builders.
pub const NORM_TOL: f64 = 1e-10;

/// Pure state on 1–3 bosonic modes, stored as a dense amplitude tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct FockState {
    dims: Vec<usize>,
    amps: Vec<C64>,
    norm_deficit: f64,
}

impl FockState {
    /// Wrap raw amplitudes. `dims` are per-mode dimensions (cutoff + 1).
    pub fn from_amplitudes(dims: Vec<usize>, amps: Vec<C64>, norm_deficit: f64) -> Result<Self> {
        if dims.is_empty() || dims.len() > 3 {
            return Err(Error::Domain(format!("supported mode counts are 1–3, got {}", dims.len())));
        }
        if dims.contains(&0) {
            return Err(Error::Domain("every mode needs at least one level".into()));
        }
        let len: usize = dims.iter().product();
        if amps.len() != len {
            return Err(Error::Domain(format!("amplitude count {} does not match dims {:?}", amps.len(), dims)));
        }
        Ok(Self { dims, amps, norm_deficit })
    }

    /// |0, …, 0⟩.
    pub fn vacuum(dims: Vec<usize>) -> Result<Self> {
        let len: usize = dims.iter().product();
        let mut amps = vec![C_ZERO; len];
        amps[0] = C_ONE;
        Self::from_amplitudes(dims, amps, 0.0)
    }

    /// A single basis state |idx⟩.
    pub fn basis(dims: Vec<usize>, idx: &[usize]) -> Result<Self> {
        let mut st = Self::vacuum(dims)?;
        st.amps[0] = C_ZERO;
        let flat = st.flat_index(idx)?;
        st.amps[flat] = C_ONE;
        Ok(st)
    }

    pub fn num_modes(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Highest photon number representable on `mode`.
    pub fn cutoff(&self, mode: usize) -> usize {
        self.dims[mode] - 1
    }

    /// Norm that was lost to truncation before the state was last normalized.
    pub fn norm_deficit(&self) -> f64 {
        self.norm_deficit
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    fn flat_index(&self, idx: &[usize]) -> Result<usize> {
        if idx.len() != self.dims.len() {
            return Err(Error::ModeMismatch { expected: self.dims.len(), got: idx.len() });
        }
        let mut flat = 0;
        for (m, (&i, &d)) in idx.iter().zip(&self.dims).enumerate() {
            if i >= d {
                return Err(Error::Domain(format!("index {i} out of range for mode {m} (dim {d})")));
            }
            flat = flat * d + i;
        }
        Ok(flat)
    }

    pub fn amp(&self, idx: &[usize]) -> Result<C64> {
        Ok(self.amps[self.flat_index(idx)?])
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalize(&mut self) {
        let n = self.norm_sq().sqrt();
        if n > 0.0 {
            for a in &mut self.amps {
                *a /= n;
            }
        }
    }

    /// Copy into a tensor of the given dims (pad with zeros / cut), returning
    /// the squared norm lost to cutting.
    pub fn resized(&self, new_dims: &[usize]) -> (Self, f64) {
        assert_eq!(new_dims.len(), self.dims.len());
        let len: usize = new_dims.iter().product();
        let mut out = vec![C_ZERO; len];
        let mut lost = 0.0;
        let mut idx = vec![0usize; self.dims.len()];
        for (flat, &a) in self.amps.iter().enumerate() {
            // decode `flat` in the old dims
            let mut rem = flat;
            for m in (0..self.dims.len()).rev() {
                idx[m] = rem % self.dims[m];
                rem /= self.dims[m];
            }
            if idx.iter().zip(new_dims).all(|(&i, &d)| i < d) {
                let mut nf = 0;
                for (m, &i) in idx.iter().enumerate() {
                    nf = nf * new_dims[m] + i;
                }
                out[nf] = a;
            } else {
                lost += a.norm_sqr();
            }
        }
        (
            Self { dims: new_dims.to_vec(), amps: out, norm_deficit: self.norm_deficit + lost },
            lost,
        )
    }

    /// ⟨self|other⟩, reconciling unequal cutoffs by zero padding.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if self.num_modes() != other.num_modes() {
            return Err(Error::ModeMismatch { expected: self.num_modes(), got: other.num_modes() });
        }
        let dims: Vec<usize> =
            self.dims.iter().zip(&other.dims).map(|(&a, &b)| a.max(b)).collect();
        let (a, _) = self.resized(&dims);
        let (b, _) = other.resized(&dims);
        Ok(a.amps.iter().zip(&b.amps).map(|(x, y)| x.conj() * y).sum())
    }

    /// True when a two-mode state is supported entirely on {|n,n⟩}.
    pub fn is_pair_diagonal(&self) -> bool {
        if self.num_modes() != 2 {
            return false;
        }
        let (d1, d2) = (self.dims[0], self.dims[1]);
        for i in 0..d1 {
            for j in 0..d2 {
                if i != j && self.amps[i * d2 + j] != C_ZERO {
                    return false;
                }
            }
        }
        true
    }

    fn pair_diag_coeffs(&self) -> Vec<C64> {
        let n = self.dims[0].min(self.dims[1]);
        (0..n).map(|i| self.amps[i * self.dims[1] + i]).collect()
    }

    fn from_pair_diag(coeffs: &[C64], norm_deficit: f64) -> Self {
        let d = coeffs.len();
        let mut amps = vec![C_ZERO; d * d];
        for (n, &c) in coeffs.iter().enumerate() {
            amps[n * d + n] = c;
        }
        Self { dims: vec![d, d], amps, norm_deficit }
    }
}

/// ⟨a|b⟩ with zero-pad reconciliation of cutoffs.
pub fn overlap(a: &FockState, b: &FockState) -> Result<C64> {
    a.inner(b)
}

// ---------------------------------------------------------------------------
// exp(G) applied to a vector, for anti-Hermitian truncated generators
// ---------------------------------------------------------------------------

/// Substep bound: each substep evaluates exp(G/k) with ‖G/k‖₁ ≤ θ by a
/// truncated Taylor series. Kept small so intermediate terms never grow and
/// roundoff stays at machine level.
const EXPM_THETA: f64 = 4.0;
const EXPM_MAX_TERMS: usize = 64;

pub(crate) fn expm_action<F: Fn(&[C64], &mut [C64])>(apply: F, norm1: f64, v: &mut [C64]) {
    let k = (norm1 / EXPM_THETA).ceil().max(1.0) as usize;
    let n = v.len();
    let mut term = vec![C_ZERO; n];
    let mut next = vec![C_ZERO; n];
    for _ in 0..k {
        term.copy_from_slice(v);
        let mut acc: Vec<C64> = v.to_vec();
        let mut small_streak = 0;
        for j in 1..=EXPM_MAX_TERMS {
            apply(&term, &mut next);
            let scale = 1.0 / (k as f64 * j as f64);
            for (t, s) in term.iter_mut().zip(&next) {
                *t = s * scale;
            }
            let mut tmax: f64 = 0.0;
            let mut amax: f64 = 0.0;
            for (t, a) in term.iter().zip(acc.iter_mut()) {
                *a += t;
                tmax = tmax.max(t.norm_sqr());
                amax = amax.max(a.norm_sqr());
            }
            if tmax <= amax * 1e-36 {
                small_streak += 1;
                if small_streak >= 2 {
                    break;
                }
            } else {
                small_streak = 0;
            }
        }
        v.copy_from_slice(&acc);
    }
}

/// exp of the pair-diagonal generator applied to a coefficient vector.
fn squeeze_diag(zeta: SqueezeParam, coeffs: &mut [C64]) {
    let z = zeta.zeta();
    let zc = z.conj();
    let n = coeffs.len();
    let norm1 = zeta.r() * (2.0 * n as f64 + 1.0);
    expm_action(
        |c: &[C64], out: &mut [C64]| {
            for m in 0..n {
                let mut acc = C_ZERO;
                if m > 0 {
                    acc -= z * (m as f64) * c[m - 1];
                }
                if m + 1 < n {
                    acc += zc * ((m + 1) as f64) * c[m + 1];
                }
                out[m] = acc;
            }
        },
        norm1,
        coeffs,
    );
}

/// exp of the dense two-mode generator applied to an amplitude tensor.
fn squeeze_dense(zeta: SqueezeParam, d1: usize, d2: usize, amps: &mut [C64]) {
    let z = zeta.zeta();
    let zc = z.conj();
    let norm1 = zeta.r() * (2.0 * d1.max(d2) as f64 + 1.0);
    expm_action(
        |a: &[C64], out: &mut [C64]| {
            for i in 0..d1 {
                for j in 0..d2 {
                    let mut acc = C_ZERO;
                    if i > 0 && j > 0 {
                        acc -= z * ((i * j) as f64).sqrt() * a[(i - 1) * d2 + (j - 1)];
                    }
                    if i + 1 < d1 && j + 1 < d2 {
                        acc += zc * (((i + 1) * (j + 1)) as f64).sqrt() * a[(i + 1) * d2 + (j + 1)];
                    }
                    out[i * d2 + j] = acc;
                }
            }
        },
        norm1,
        amps,
    );
}

/// Apply S₁₂(ζ) to a two-mode state inside a square truncation at `cutoff`.
///
/// The state is resized to the requested truncation first; the returned
/// state's `norm_deficit` accumulates both that resize and an estimate of the
/// flux that reached the truncation boundary during the evolution. If the
/// boundary estimate is large the truncation was too small to be meaningful
/// and a convergence error is returned instead.
pub fn apply_two_mode_squeeze(
    state: &FockState,
    zeta: SqueezeParam,
    cutoff: usize,
) -> Result<FockState> {
    if state.num_modes() != 2 {
        return Err(Error::ModeMismatch { expected: 2, got: state.num_modes() });
    }
    let d = cutoff + 1;
    let (mut st, _) = state.resized(&[d, d]);
    const BOUNDARY_TOL: f64 = 1e-6;
    if st.is_pair_diagonal() {
        let mut c = st.pair_diag_coeffs();
        squeeze_diag(zeta, &mut c);
        let guard: f64 = c[d.saturating_sub(2)..].iter().map(|x| x.norm_sqr()).sum();
        if guard > BOUNDARY_TOL {
            return Err(Error::Convergence {
                what: format!("two-mode squeeze (r = {}) at cutoff {cutoff}", zeta.r()),
                deficit: guard,
                tol: BOUNDARY_TOL,
            });
        }
        Ok(FockState::from_pair_diag(&c, st.norm_deficit + guard))
    } else {
        squeeze_dense(zeta, d, d, &mut st.amps);
        let mut guard = 0.0;
        for i in 0..d {
            for j in 0..d {
                if i + 1 >= d || j + 1 >= d {
                    guard += st.amps[i * d + j].norm_sqr();
                }
            }
        }
        // the outer shell holds whatever was about to leave the truncation
        if guard > BOUNDARY_TOL {
            return Err(Error::Convergence {
                what: format!("two-mode squeeze (r = {}) at cutoff {cutoff}", zeta.r()),
                deficit: guard,
                tol: BOUNDARY_TOL,
            });
        }
        st.norm_deficit += guard;
        Ok(st)
    }
}

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

/// Closed-form twin-beam coefficients (−e^{iφ} tanh r)ⁿ / cosh r.
///
/// This is the disentangled form of S₁₂(ζ)|0,0⟩; the builders go through the
/// matrix exponential instead, and the two are cross-checked in tests. The
/// closed form is what the metric maximizations use for their reference
/// states, where the scan range would otherwise force absurd cutoffs.
pub fn twin_beam_diag_coeffs(zeta: SqueezeParam, n_max: usize) -> Vec<C64> {
    let base = -C64::from_polar(zeta.r().tanh(), zeta.phi());
    let ch = zeta.r().cosh();
    let mut c = Vec::with_capacity(n_max + 1);
    let mut cur = C64::new(1.0 / ch, 0.0);
    for _ in 0..=n_max {
        c.push(cur);
        cur *= base;
    }
    c
}

/// Smallest cutoff whose twin-beam tail at squeezing `r` is below `tol`,
/// with a safety margin. Governs geometric-tail states generally.
pub fn suggested_cutoff(r: f64, tol: f64) -> usize {
    let t = r.max(0.05).tanh();
    let n = (tol.ln() / (2.0 * t.ln())).ceil().max(0.0) as usize;
    n + 12
}

fn build_resource_at(spec: &ResourceSpec, work_dim: usize) -> Vec<C64> {
    let (c1, c2) = spec.interior();
    let mut c = vec![C_ZERO; work_dim];
    c[0] = c1;
    if work_dim > 1 {
        c[1] = c2;
    }
    squeeze_diag(spec.zeta(), &mut c);
    c
}

/// Build a resource state at the given per-mode cutoff, enforcing `norm_tol`
/// on the truncation deficit.
///
/// The squeeze is run on a padded window so the deficit at `cutoff` is
/// measured from converged amplitudes; the returned state is renormalized
/// with the measured deficit recorded.
pub fn build_resource_with_tol(
    spec: &ResourceSpec,
    cutoff: usize,
    norm_tol: f64,
) -> Result<FockState> {
    let mut pad = 16.max(cutoff / 4);
    loop {
        let work_dim = cutoff + 1 + pad;
        let c = build_resource_at(spec, work_dim);
        let deficit: f64 = c[cutoff + 1..].iter().map(|x| x.norm_sqr()).sum();
        let guard: f64 = c[work_dim - 4..].iter().map(|x| x.norm_sqr()).sum();
        // the padded window itself must be converged before the deficit
        // measurement means anything
        if guard > 1e-4 * norm_tol && pad < 8 * (cutoff + 16) {
            pad *= 2;
            continue;
        }
        if deficit > norm_tol {
            return Err(Error::Convergence {
                what: format!("{} resource at cutoff {cutoff}", spec.label()),
                deficit,
                tol: norm_tol,
            });
        }
        let mut st = FockState::from_pair_diag(&c[..=cutoff], deficit);
        st.normalize();
        return Ok(st);
    }
}

/// Build a resource state at `cutoff` under the default norm tolerance.
pub fn build_resource(spec: &ResourceSpec, cutoff: usize) -> Result<FockState> {
    build_resource_with_tol(spec, cutoff, NORM_TOL)
}

/// Default build path: start at cutoff 30 and double until the deficit is
/// below tolerance, capped at 80.
pub fn build_resource_auto(spec: &ResourceSpec) -> Result<FockState> {
    let mut cutoff = 30;
    loop {
        match build_resource(spec, cutoff) {
            Ok(st) => return Ok(st),
            Err(e) => {
                if cutoff >= 80 {
                    return Err(e);
                }
                cutoff = (cutoff * 2).min(80);
            }
        }
    }
}

/// Fock amplitudes of the single-mode input families.
///
/// Coherent: e^{−|β|²/2} βⁿ/√n!.  Squeezed vacuum (our sign convention):
/// (cosh s)^{−1/2} Σₘ (−e^{iϕ} tanh s / 2)ᵐ √((2m)!)/m! |2m⟩, and the
/// squeezed single photon is the odd analogue with (cosh s)^{−3/2} and
/// √((2m+1)!). These series are exact, so the recorded deficit is exact too.
pub fn build_input(spec: &InputSpec, cutoff: usize) -> Result<FockState> {
    spec.validate()?;
    let d = cutoff + 1;
    let mut c = vec![C_ZERO; d];
    match *spec {
        InputSpec::Coherent { beta } => {
            let w = (-beta.norm_sqr() / 2.0).exp();
            let mut cur = C64::new(w, 0.0);
            for (n, cell) in c.iter_mut().enumerate() {
                *cell = cur;
                cur *= beta / ((n + 1) as f64).sqrt();
            }
        }
        InputSpec::PhotonAddedCoherent { beta } => {
            let coh = build_input(&InputSpec::Coherent { beta }, cutoff)?;
            let scale = 1.0 / (1.0 + beta.norm_sqr()).sqrt();
            for (n, cell) in c.iter_mut().enumerate().skip(1) {
                *cell = coh.amps[n - 1] * (n as f64).sqrt() * scale;
            }
        }
        InputSpec::Fock1 => {
            if d < 2 {
                return Err(Error::Domain("cutoff 0 cannot hold |1⟩".into()));
            }
            c[1] = C_ONE;
        }
        InputSpec::SqueezedVacuum { s, varphi } | InputSpec::SqueezedFock1 { s, varphi } => {
            let odd = matches!(spec, InputSpec::SqueezedFock1 { .. });
            let t = s.tanh();
            let ch = s.cosh();
            let base = -C64::from_polar(t / 2.0, varphi);
            let head = if odd { ch.powf(-1.5) } else { ch.powf(-0.5) };
            let mut cur = C64::new(head, 0.0);
            let mut m = 0usize;
            loop {
                let n = 2 * m + usize::from(odd);
                if n >= d {
                    break;
                }
                c[n] = cur;
                // step m → m+1: multiply by base · √((n+1)(n+2)) / (m+1)
                cur *= base * (((n + 1) * (n + 2)) as f64).sqrt() / ((m + 1) as f64);
                m += 1;
            }
        }
    }
    let norm_sq: f64 = c.iter().map(|x| x.norm_sqr()).sum();
    let deficit = (1.0 - norm_sq).max(0.0);
    if deficit > NORM_TOL {
        return Err(Error::Convergence {
            what: format!("{} input at cutoff {cutoff}", spec.label()),
            deficit,
            tol: NORM_TOL,
        });
    }
    let mut st = FockState::from_amplitudes(vec![d], c, deficit)?;
    st.normalize();
    Ok(st)
}

// ---------------------------------------------------------------------------
// reduced entropy and covariance
// ---------------------------------------------------------------------------

/// Von Neumann entropy (nats) of the mode-1 reduction of a two-mode pure
/// state. Eigenvalues below 1e−14 are dropped.
pub fn reduced_entropy(state: &FockState) -> Result<f64> {
    if state.num_modes() != 2 {
        return Err(Error::ModeMismatch { expected: 2, got: state.num_modes() });
    }
    let probs: Vec<f64> = if state.is_pair_diagonal() {
        state.pair_diag_coeffs().iter().map(|c| c.norm_sqr()).collect()
    } else {
        let (d1, d2) = (state.dims[0], state.dims[1]);
        let mut rho = DMatrix::<C64>::zeros(d1, d1);
        for m in 0..d1 {
            for mp in 0..d1 {
                let mut acc = C_ZERO;
                for k in 0..d2 {
                    acc += state.amps[m * d2 + k] * state.amps[mp * d2 + k].conj();
                }
                rho[(m, mp)] = acc;
            }
        }
        rho.symmetric_eigen().eigenvalues.iter().copied().collect()
    };
    let total: f64 = probs.iter().sum();
    let mut entropy = 0.0;
    for p in probs {
        let p = p / total;
        if p > 1e-14 {
            entropy -= p * p.ln();
        }
    }
    Ok(entropy)
}

/// Quadrature covariance matrix and mean vector of a two-mode state, in the
/// ordering R = (x₁, p₁, x₂, p₂) with aᵢ = (xᵢ + i pᵢ)/√2 (vacuum σ = I/2).
///
/// σᵢⱼ = ½⟨{Rᵢ − ⟨Rᵢ⟩, Rⱼ − ⟨Rⱼ⟩}⟩. The result is checked against the
/// uncertainty relation σ + iΩ/2 ⪰ 0; a violation beyond truncation noise
/// reports a convergence error.
pub fn covariance_matrix(state: &FockState) -> Result<(Matrix4<f64>, Vector4<f64>)> {
    if state.num_modes() != 2 {
        return Err(Error::ModeMismatch { expected: 2, got: state.num_modes() });
    }
    let (d1, d2) = (state.dims[0], state.dims[1]);
    let psi = |i: usize, j: usize| state.amps[i * d2 + j];

    let mut m = [C_ZERO; 2]; // ⟨aᵢ⟩
    let mut a = [[C_ZERO; 2]; 2]; // ⟨aᵢ†aⱼ⟩
    let mut b = [[C_ZERO; 2]; 2]; // ⟨aᵢaⱼ⟩
    for i in 0..d1 {
        for j in 0..d2 {
            let c = psi(i, j).conj();
            if c == C_ZERO {
                continue;
            }
            if i + 1 < d1 {
                m[0] += c * ((i + 1) as f64).sqrt() * psi(i + 1, j);
            }
            if j + 1 < d2 {
                m[1] += c * ((j + 1) as f64).sqrt() * psi(i, j + 1);
            }
            a[0][0] += c * (i as f64) * psi(i, j);
            a[1][1] += c * (j as f64) * psi(i, j);
            if i >= 1 && j + 1 < d2 {
                a[0][1] += c * ((i * (j + 1)) as f64).sqrt() * psi(i - 1, j + 1);
            }
            if j >= 1 && i + 1 < d1 {
                a[1][0] += c * ((j * (i + 1)) as f64).sqrt() * psi(i + 1, j - 1);
            }
            if i + 2 < d1 {
                b[0][0] += c * (((i + 1) * (i + 2)) as f64).sqrt() * psi(i + 2, j);
            }
            if j + 2 < d2 {
                b[1][1] += c * (((j + 1) * (j + 2)) as f64).sqrt() * psi(i, j + 2);
            }
            if i + 1 < d1 && j + 1 < d2 {
                let v = c * (((i + 1) * (j + 1)) as f64).sqrt() * psi(i + 1, j + 1);
                b[0][1] += v;
                b[1][0] += v;
            }
        }
    }

    let mut sigma = Matrix4::<f64>::zeros();
    for i in 0..2 {
        for j in 0..2 {
            let at = a[i][j] - m[i].conj() * m[j];
            let bt = b[i][j] - m[i] * m[j];
            let delta = if i == j { 0.5 } else { 0.0 };
            sigma[(2 * i, 2 * j)] = bt.re + at.re + delta; // ⟨xᵢxⱼ⟩ part
            sigma[(2 * i + 1, 2 * j + 1)] = -bt.re + at.re + delta; // ⟨pᵢpⱼ⟩
            sigma[(2 * i, 2 * j + 1)] = bt.im + at.im; // ½⟨{xᵢ,pⱼ}⟩
            sigma[(2 * j + 1, 2 * i)] = bt.im + at.im;
        }
    }

    let sqrt2 = std::f64::consts::SQRT_2;
    let mean = Vector4::new(sqrt2 * m[0].re, sqrt2 * m[0].im, sqrt2 * m[1].re, sqrt2 * m[1].im);

    // physicality: σ + iΩ/2 must be positive semidefinite
    let mut h = Matrix4::<C64>::zeros();
    for i in 0..4 {
        for j in 0..4 {
            h[(i, j)] = C64::new(sigma[(i, j)], 0.0);
        }
    }
    for k in 0..2 {
        h[(2 * k, 2 * k + 1)] += C64::new(0.0, 0.5);
        h[(2 * k + 1, 2 * k)] += C64::new(0.0, -0.5);
    }
    let min_eig = h
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::INFINITY, |acc, &e| acc.min(e));
    if min_eig < -1e-9 {
        return Err(Error::Convergence {
            what: "covariance matrix violates the uncertainty relation".into(),
            deficit: -min_eig,
            tol: 1e-9,
        });
    }

    Ok((sigma, mean))
}
