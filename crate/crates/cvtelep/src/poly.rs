//! Sparse multivariate polynomials with complex coefficients.
//!
//! Exponent vectors are kept in a `BTreeMap` so every iteration order (and
//! therefore every downstream floating-point sum) is deterministic.

use std::collections::BTreeMap;

use num_complex::Complex64 as C64;

const ZERO: C64 = C64::new(0.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, C64>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C64) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C64::new(1.0, 0.0))
    }

    /// The monomial x_i.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0u8; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, C64::new(1.0, 0.0));
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], C64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn add_term(&mut self, expo: Vec<u8>, c: C64) {
        debug_assert_eq!(expo.len(), self.nvars);
        if c == ZERO {
            return;
        }
        let entry = self.terms.entry(expo);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s == ZERO {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.to_vec(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, k: C64) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in self.terms() {
            out.add_term(e.to_vec(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e: Vec<u8> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Flip the sign of every variable: x_i ↦ −x_i.
    pub fn negate_vars(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in self.terms() {
            let deg: u32 = e.iter().map(|&k| k as u32).sum();
            let sign = if deg.is_multiple_of(2) { 1.0 } else { -1.0 };
            out.add_term(e.to_vec(), c * sign);
        }
        out
    }

    /// Substitute each variable by the given polynomial (full composition).
    /// All replacements must share a variable count, which becomes the
    /// variable count of the result.
    pub fn compose(&self, replacements: &[Poly]) -> Self {
        assert_eq!(replacements.len(), self.nvars);
        let m = replacements.first().map_or(0, Poly::nvars);
        let mut out = Self::zero(m);
        for (e, c) in self.terms() {
            let mut mono = Self::constant(m, c);
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    mono = mono.mul(&replacements[i]);
                }
            }
            out = out.add(&mono);
        }
        out
    }

    pub fn eval(&self, x: &[C64]) -> C64 {
        debug_assert_eq!(x.len(), self.nvars);
        let mut acc = ZERO;
        for (e, c) in self.terms() {
            let mut t = c;
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= x[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Total degree of the highest-degree term.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().map(|&k| k as u32).sum()).max().unwrap_or(0)
    }
}
