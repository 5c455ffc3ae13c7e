//! The state families the toolkit works with.
//!
//! Resources are two-mode entangled states of the form
//!
//! ```text
//! |ψ⟩ = S₁₂(ζ) { c₁|0,0⟩ + c₂|1,1⟩ },      ζ = r e^{iφ},
//! ```
//!
//! where S₁₂(ζ) = exp(−ζ a₁†a₂† + ζ* a₁a₂) is the two-mode squeezer. Every
//! supported family is a particular choice of the interior pair (c₁, c₂):
//! the twin beam keeps the vacuum only, the squeezed number state keeps
//! |1,1⟩ only, photon addition and subtraction fix (c₁, c₂) through tanh r,
//! and the squeezed Bell family exposes the superposition angle directly.
//!
//! Inputs are the single-mode states to be teleported.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Two-mode (or single-mode) squeezing parameter ζ = r e^{iφ}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeParam {
    r: f64,
    phi: f64,
}

impl SqueezeParam {
    /// A squeezing strength `r ≥ 0` and phase `phi` (reduced mod 2π).
    pub fn new(r: f64, phi: f64) -> Result<Self> {
        if !r.is_finite() || r < 0.0 {
            return Err(Error::Domain(format!("squeeze modulus must be finite and ≥ 0, got {r}")));
        }
        if !phi.is_finite() {
            return Err(Error::Domain("squeeze phase must be finite".into()));
        }
        let tau = 2.0 * std::f64::consts::PI;
        Ok(Self { r, phi: phi.rem_euclid(tau) })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// ζ itself.
    pub fn zeta(&self) -> C64 {
        C64::from_polar(self.r, self.phi)
    }
}

/// Two-mode entangled resource families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ResourceSpec {
    /// Two-mode squeezed vacuum S₁₂(ζ)|0,0⟩.
    TwinBeam { zeta: SqueezeParam },
    /// Two-mode squeezed one-photon pair S₁₂(ζ)|1,1⟩.
    SqueezedNumber { zeta: SqueezeParam },
    /// Twin beam with one photon added to each mode,
    /// ∝ S₁₂(ζ){ −tanh r |0,0⟩ + e^{iφ}|1,1⟩ }.
    PhotonAdded { zeta: SqueezeParam },
    /// Twin beam with one photon subtracted from each mode,
    /// ∝ S₁₂(ζ){ −|0,0⟩ + e^{iφ} tanh r |1,1⟩ }.
    PhotonSubtracted { zeta: SqueezeParam },
    /// S₁₂(ζ){ cos δ |0,0⟩ + e^{iθ} sin δ |1,1⟩ }.
    SqueezedBell { zeta: SqueezeParam, delta: f64, theta: f64 },
}

impl ResourceSpec {
    pub fn zeta(&self) -> SqueezeParam {
        match *self {
            ResourceSpec::TwinBeam { zeta }
            | ResourceSpec::SqueezedNumber { zeta }
            | ResourceSpec::PhotonAdded { zeta }
            | ResourceSpec::PhotonSubtracted { zeta }
            | ResourceSpec::SqueezedBell { zeta, .. } => zeta,
        }
    }

    /// The same family and angles rebound to squeezing modulus `r`, keeping
    /// the phase. This is what lets one spec act as the template for a whole
    /// curve.
    pub fn with_r(&self, r: f64) -> Result<ResourceSpec> {
        let zeta = SqueezeParam::new(r, self.zeta().phi())?;
        Ok(match *self {
            ResourceSpec::TwinBeam { .. } => ResourceSpec::TwinBeam { zeta },
            ResourceSpec::SqueezedNumber { .. } => ResourceSpec::SqueezedNumber { zeta },
            ResourceSpec::PhotonAdded { .. } => ResourceSpec::PhotonAdded { zeta },
            ResourceSpec::PhotonSubtracted { .. } => ResourceSpec::PhotonSubtracted { zeta },
            ResourceSpec::SqueezedBell { delta, theta, .. } => {
                ResourceSpec::SqueezedBell { zeta, delta, theta }
            }
        })
    }

    /// The normalized interior superposition (c₁, c₂) such that the state is
    /// S₁₂(ζ){ c₁|0,0⟩ + c₂|1,1⟩ } with |c₁|² + |c₂|² = 1.
    ///
    /// Photon addition and subtraction drop their physically irrelevant
    /// global phases e^{∓iφ}.
    pub fn interior(&self) -> (C64, C64) {
        match *self {
            ResourceSpec::TwinBeam { .. } => (C64::new(1.0, 0.0), C64::new(0.0, 0.0)),
            ResourceSpec::SqueezedNumber { .. } => (C64::new(0.0, 0.0), C64::new(1.0, 0.0)),
            ResourceSpec::PhotonAdded { zeta } => {
                let t = zeta.r().tanh();
                let n = 1.0 / (1.0 + t * t).sqrt();
                (C64::new(-t * n, 0.0), C64::from_polar(n, zeta.phi()))
            }
            ResourceSpec::PhotonSubtracted { zeta } => {
                let t = zeta.r().tanh();
                let n = 1.0 / (1.0 + t * t).sqrt();
                (C64::new(-n, 0.0), C64::from_polar(t * n, zeta.phi()))
            }
            ResourceSpec::SqueezedBell { delta, theta, .. } => {
                (C64::new(delta.cos(), 0.0), C64::from_polar(1.0, theta) * delta.sin())
            }
        }
    }

    /// Caption-style name used by sweep rows and figure columns.
    pub fn label(&self) -> &'static str {
        match self {
            ResourceSpec::TwinBeam { .. } => "squeezed state",
            ResourceSpec::SqueezedNumber { .. } => "squeezed number",
            ResourceSpec::PhotonAdded { .. } => "photon-added",
            ResourceSpec::PhotonSubtracted { .. } => "photon-subtracted",
            ResourceSpec::SqueezedBell { .. } => "squeezed Bell",
        }
    }
}

/// Single-mode input families for the teleporter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InputSpec {
    /// Coherent state |β⟩.
    Coherent { beta: C64 },
    /// Squeezed vacuum S(ε)|0⟩, ε = s e^{iϕ}, with S(ε) = exp(−½εa†² + ½ε*a²).
    SqueezedVacuum { s: f64, varphi: f64 },
    /// One-photon Fock state |1⟩.
    Fock1,
    /// Photon-added coherent state (1+|β|²)^{−1/2} a†|β⟩.
    PhotonAddedCoherent { beta: C64 },
    /// Squeezed one-photon state S(ε)|1⟩.
    SqueezedFock1 { s: f64, varphi: f64 },
}

impl InputSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            InputSpec::Coherent { beta } | InputSpec::PhotonAddedCoherent { beta } => {
                if !beta.re.is_finite() || !beta.im.is_finite() {
                    return Err(Error::Domain("coherent amplitude must be finite".into()));
                }
            }
            InputSpec::SqueezedVacuum { s, varphi } | InputSpec::SqueezedFock1 { s, varphi } => {
                if !s.is_finite() || s < 0.0 {
                    return Err(Error::Domain(format!("input squeezing must be finite and ≥ 0, got {s}")));
                }
                if !varphi.is_finite() {
                    return Err(Error::Domain("input squeeze phase must be finite".into()));
                }
            }
            InputSpec::Fock1 => {}
        }
        Ok(())
    }

    pub fn label(&self) -> &'static str {
        match self {
            InputSpec::Coherent { .. } => "coherent",
            InputSpec::SqueezedVacuum { .. } => "squeezed vacuum",
            InputSpec::Fock1 => "single photon",
            InputSpec::PhotonAddedCoherent { .. } => "photon-added coherent",
            InputSpec::SqueezedFock1 { .. } => "squeezed single photon",
        }
    }
}
