//! Closed-form characteristic functions cross-checked against the Fock-space
//! oracle, plus structural CF identities.

use cvtelep::{
    build_input, build_resource, cf_from_fock, cf_input, cf_resource, suggested_cutoff, InputSpec,
    ResourceSpec, SqueezeParam,
};
use num_complex::Complex64 as C64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PI: f64 = std::f64::consts::PI;

fn families(r: f64, phi: f64) -> Vec<ResourceSpec> {
    let zeta = SqueezeParam::new(r, phi).unwrap();
    vec![
        ResourceSpec::TwinBeam { zeta },
        ResourceSpec::SqueezedNumber { zeta },
        ResourceSpec::PhotonAdded { zeta },
        ResourceSpec::PhotonSubtracted { zeta },
        ResourceSpec::SqueezedBell { zeta, delta: 0.7, theta: 1.1 },
    ]
}

fn inputs() -> Vec<InputSpec> {
    vec![
        InputSpec::Coherent { beta: C64::new(0.3, 0.0) },
        InputSpec::SqueezedVacuum { s: 0.8, varphi: 0.0 },
        InputSpec::Fock1,
        InputSpec::PhotonAddedCoherent { beta: C64::new(0.3, 0.0) },
        InputSpec::SqueezedFock1 { s: 0.8, varphi: 0.0 },
    ]
}

fn rand_point(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

#[test]
fn resource_cf_matches_fock_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for &r in &[0.0, 0.25, 0.5, 1.0] {
        for &phi in &[0.0, PI] {
            let specs = families(r, phi);
            let n = suggested_cutoff(r, 1e-12);
            let pairs: Vec<_> = specs
                .iter()
                .map(|s| (cf_resource(s), build_resource(s, n).unwrap(), s.label()))
                .collect();
            for k in 0..200 {
                let (cf, st, label) = &pairs[k % pairs.len()];
                let p = [rand_point(&mut rng), rand_point(&mut rng)];
                let a = cf.evaluate(&p).unwrap();
                let b = cf_from_fock(st, &p).unwrap();
                assert!(
                    (a - b).norm() < 1e-6,
                    "{label} r={r} phi={phi} at {p:?}: {a} vs {b}"
                );
            }
        }
    }
}

#[test]
fn input_cf_matches_fock_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for spec in inputs() {
        let cf = cf_input(&spec).unwrap();
        let st = build_input(&spec, 80).unwrap();
        for _ in 0..100 {
            let p = [rand_point(&mut rng)];
            let a = cf.evaluate(&p).unwrap();
            let b = cf_from_fock(&st, &p).unwrap();
            assert!((a - b).norm() < 1e-6, "{} at {p:?}: {a} vs {b}", spec.label());
        }
    }
}

#[test]
fn cf_is_one_at_origin_and_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let origin2 = [C64::new(0.0, 0.0); 2];
    let origin1 = [C64::new(0.0, 0.0); 1];
    for &r in &[0.3, 1.0] {
        for spec in families(r, PI) {
            let cf = cf_resource(&spec);
            assert!((cf.evaluate(&origin2).unwrap() - 1.0).norm() < 1e-12, "{}", spec.label());
            for _ in 0..50 {
                let p = [rand_point(&mut rng), rand_point(&mut rng)];
                let v = cf.evaluate(&p).unwrap().norm();
                assert!(v <= 1.0 + 1e-10, "{} at {p:?}: |χ| = {v}", spec.label());
            }
        }
    }
    for spec in inputs() {
        let cf = cf_input(&spec).unwrap();
        assert!((cf.evaluate(&origin1).unwrap() - 1.0).norm() < 1e-12, "{}", spec.label());
        for _ in 0..50 {
            let p = [rand_point(&mut rng)];
            let v = cf.evaluate(&p).unwrap().norm();
            assert!(v <= 1.0 + 1e-10, "{} at {p:?}: |χ| = {v}", spec.label());
        }
    }
}

#[test]
fn cf_has_hermitian_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for spec in inputs() {
        let cf = cf_input(&spec).unwrap();
        for _ in 0..40 {
            let p = rand_point(&mut rng);
            let plus = cf.evaluate(&[p]).unwrap();
            let minus = cf.evaluate(&[-p]).unwrap();
            assert!((minus - plus.conj()).norm() < 1e-12, "{}", spec.label());
        }
    }
    for spec in families(0.7, PI) {
        let cf = cf_resource(&spec);
        for _ in 0..40 {
            let p = [rand_point(&mut rng), rand_point(&mut rng)];
            let m = [-p[0], -p[1]];
            let plus = cf.evaluate(&p).unwrap();
            let minus = cf.evaluate(&m).unwrap();
            assert!((minus - plus.conj()).norm() < 1e-12, "{}", spec.label());
        }
    }
}

#[test]
fn every_family_shares_the_twin_beam_envelope() {
    for &r in &[0.0, 0.4, 1.1] {
        for &phi in &[0.0, PI] {
            let zeta = SqueezeParam::new(r, phi).unwrap();
            let tb = cf_resource(&ResourceSpec::TwinBeam { zeta });
            for spec in families(r, phi) {
                let cf = cf_resource(&spec);
                let dq = (cf.quad() - tb.quad()).abs().max();
                assert!(dq < 1e-12, "{} r={r} phi={phi}: Δquad {dq}", spec.label());
                let lmax = cf.lin().iter().map(|z| z.norm()).fold(0.0, f64::max);
                assert!(lmax < 1e-15, "{} r={r} phi={phi}: |lin| {lmax}", spec.label());
            }
        }
    }
}

#[test]
fn bell_family_interpolates_the_extremes() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for &r in &[0.0, 0.6, 1.2] {
        let zeta = SqueezeParam::new(r, PI).unwrap();
        let tb = cf_resource(&ResourceSpec::TwinBeam { zeta });
        let sn = cf_resource(&ResourceSpec::SqueezedNumber { zeta });
        let at_zero = cf_resource(&ResourceSpec::SqueezedBell { zeta, delta: 0.0, theta: 0.9 });
        let at_half = cf_resource(&ResourceSpec::SqueezedBell { zeta, delta: PI / 2.0, theta: 0.0 });
        for _ in 0..40 {
            let p = [rand_point(&mut rng), rand_point(&mut rng)];
            assert!((at_zero.evaluate(&p).unwrap() - tb.evaluate(&p).unwrap()).norm() < 1e-12);
            assert!((at_half.evaluate(&p).unwrap() - sn.evaluate(&p).unwrap()).norm() < 1e-12);
        }
    }
}

#[test]
fn subtracted_state_is_a_bell_member() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for &r in &[0.2, 0.7, 1.3] {
        let zeta = SqueezeParam::new(r, PI).unwrap();
        let pss = cf_resource(&ResourceSpec::PhotonSubtracted { zeta });
        let bell = cf_resource(&ResourceSpec::SqueezedBell {
            zeta,
            delta: r.tanh().atan(),
            theta: 0.0,
        });
        for _ in 0..40 {
            let p = [rand_point(&mut rng), rand_point(&mut rng)];
            let a = pss.evaluate(&p).unwrap();
            let b = bell.evaluate(&p).unwrap();
            assert!((a - b).norm() < 1e-12, "r={r} at {p:?}: {a} vs {b}");
        }
    }
}
