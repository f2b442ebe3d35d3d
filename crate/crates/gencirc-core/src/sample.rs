//! Seeded random instance generation, shared by the benchmark harness, the
//! CLI bench command, and the verification suites.
//!
//! Weights are drawn with modulus in [0.5, 2] and uniform phase, so powers
//! of the matrix neither explode nor vanish; coefficients live in the unit
//! square. Shift selection per structural case is deterministic in m.

use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::TAU;

use crate::circulant::CirculantSpec;
use crate::genperm::GenPermMatrix;
use crate::shift::ShiftPermutation;

/// The four nondegenerate structural cases an instance can target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleCase {
    S1,
    Coprime,
    Divisor,
    GeneralOrbit,
}

impl SampleCase {
    pub const ALL: [SampleCase; 4] = [
        SampleCase::S1,
        SampleCase::Coprime,
        SampleCase::Divisor,
        SampleCase::GeneralOrbit,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SampleCase::S1 => "s1",
            SampleCase::Coprime => "coprime",
            SampleCase::Divisor => "divisor",
            SampleCase::GeneralOrbit => "general-orbit",
        }
    }

    pub fn parse(text: &str) -> Option<SampleCase> {
        match text {
            "s1" => Some(SampleCase::S1),
            "coprime" => Some(SampleCase::Coprime),
            "divisor" => Some(SampleCase::Divisor),
            "general-orbit" | "general_orbit" => Some(SampleCase::GeneralOrbit),
            _ => None,
        }
    }
}

/// Deterministic shift choice for a case at size m, or None when no shift
/// in [0, m) realizes the case:
/// - `S1`: 1 (needs m ≥ 2);
/// - `Coprime`: the smallest s ≥ 2 with gcd(s, m) = 1 (exists for m ≥ 3);
/// - `Divisor`: the smallest proper divisor s ≥ 2 of m, falling back to
///   s = 1 when m is prime (still a divisor instance);
/// - `GeneralOrbit`: the smallest s ≥ 2 with gcd(s, m) > 1 and s ∤ m
///   (no such shift exists for prime m or m = 4).
pub fn shift_for_case(case: SampleCase, m: usize) -> Option<usize> {
    let orbit_count = |s: usize| {
        ShiftPermutation::new(m, s as i64)
            .expect("m ≥ 1")
            .orbit_count()
    };
    match case {
        SampleCase::S1 => (m >= 2).then_some(1),
        SampleCase::Coprime => (2..m).find(|&s| orbit_count(s) == 1),
        SampleCase::Divisor => (2..m)
            .find(|&s| m % s == 0)
            .or_else(|| (m >= 2).then_some(1)),
        SampleCase::GeneralOrbit => {
            (2..m).find(|&s| orbit_count(s) > 1 && m % s != 0)
        }
    }
}

/// m weights with modulus in [0.5, 2] and uniform phase. The modulus is
/// drawn log-uniformly: weights enter everything multiplicatively (orbit
/// products, their d-th roots), and the zero-mean log draw keeps those
/// products from drifting like e^(0.155·m), which a plain uniform draw
/// causes (E[ln u] ≈ 0.155 on [0.5, 2]) and which condition-poisons
/// magnitude-cancelling checks downstream without exercising any more of
/// the structure.
pub fn random_weights<R: Rng>(m: usize, rng: &mut R) -> Vec<Complex64> {
    let (lo, hi) = ((0.5f64).ln(), (2.0f64).ln());
    (0..m)
        .map(|_| {
            let modulus = rng.gen_range(lo..=hi).exp();
            let phase = rng.gen_range(0.0..TAU);
            Complex64::from_polar(modulus, phase)
        })
        .collect()
}

/// `len` coefficients with real and imaginary parts uniform in [−1, 1].
pub fn random_coeffs<R: Rng>(len: usize, rng: &mut R) -> Vec<Complex64> {
    (0..len)
        .map(|_| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
        .collect()
}

/// A full random instance of the given case: weights and degree-`degree`
/// coefficients from `rng`, shift from [`shift_for_case`]. None when the
/// case has no shift at this m.
pub fn random_instance<R: Rng>(
    case: SampleCase,
    m: usize,
    degree: usize,
    rng: &mut R,
) -> Option<CirculantSpec> {
    let s = shift_for_case(case, m)?;
    let perm = ShiftPermutation::new(m, s as i64).expect("m ≥ 1");
    let u = GenPermMatrix::new(perm, random_weights(m, rng)).expect("length matches");
    let coeffs = random_coeffs(degree + 1, rng);
    Some(CirculantSpec::new(u, coeffs).expect("degree + 1 ≥ 1"))
}
