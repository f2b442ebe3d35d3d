//! The cyclic shift permutation x ↦ (x + s) mod m and its orbit structure.
//!
//! Everything downstream hangs off two integers derived from (m, s): the
//! order d of the shift (smallest d ≥ 1 with d·s ≡ 0 mod m) and the orbit
//! count g = gcd(m, s). The orbits are exactly the residue classes mod g,
//! each of length d, with d·g = m.

use crate::error::{Error, Result};

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// The permutation x ↦ (x + s) mod m on {0, 1, …, m−1}.
///
/// The shift is stored reduced into [0, m), so `new(m, m)` and `new(m, 0)`
/// are the same (identity) permutation. Order and orbit count are computed
/// once at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftPermutation {
    m: usize,
    s: usize,
    d: usize,
    g: usize,
}

/// One orbit of the shift: its smallest element and the members in
/// iteration order (rep, rep + s, rep + 2s, … mod m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ShiftPermutation {
    /// Builds the shift permutation on {0, …, m−1}. Any integer shift is
    /// accepted and reduced mod m (negative shifts wrap).
    pub fn new(m: usize, s: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        let mm = m as i64;
        let s = (((s % mm) + mm) % mm) as usize;
        // gcd(m, 0) = m, so s = 0 gives g = m orbits of length d = 1.
        let g = gcd(m, s);
        let d = m / g;
        Ok(ShiftPermutation { m, s, d, g })
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    /// The reduced shift, in [0, m).
    pub fn shift(&self) -> usize {
        self.s
    }

    /// Smallest d ≥ 1 with `self.power(d)` the identity; equals m / gcd(m, s).
    pub fn order(&self) -> usize {
        self.d
    }

    /// Number of orbits, g = gcd(m, s).
    pub fn orbit_count(&self) -> usize {
        self.g
    }

    pub fn is_identity(&self) -> bool {
        self.s == 0
    }

    /// Applies the permutation to one point.
    pub fn apply(&self, x: usize) -> Result<usize> {
        if x >= self.m {
            return Err(Error::IndexOutOfRange {
                index: x,
                modulus: self.m,
            });
        }
        Ok((x + self.s) % self.m)
    }

    /// The k-th compositional power, x ↦ (x + k·s) mod m. Negative k gives
    /// the inverse powers; the result is again a plain shift.
    pub fn power(&self, k: i64) -> ShiftPermutation {
        let m = self.m as i64;
        let k = ((k % m) + m) % m;
        // k, s < m ≤ 2^63, so widen before multiplying.
        let shifted = ((k as u128 * self.s as u128) % self.m as u128) as i64;
        ShiftPermutation::new(self.m, shifted).expect("modulus already validated")
    }

    /// Representative (smallest member) of the orbit containing x.
    /// Orbits of the shift are the residue classes mod g.
    pub fn orbit_of(&self, x: usize) -> Result<usize> {
        if x >= self.m {
            return Err(Error::IndexOutOfRange {
                index: x,
                modulus: self.m,
            });
        }
        Ok(x % self.g)
    }

    /// Members of one orbit in iteration order: t, t+s, t+2s, … (mod m).
    /// `t` must be a representative, i.e. t < orbit_count().
    pub fn orbit_members(&self, t: usize) -> Result<Vec<usize>> {
        if t >= self.g {
            return Err(Error::NotARepresentative {
                index: t,
                count: self.g,
            });
        }
        let mut members = Vec::with_capacity(self.d);
        let mut x = t;
        for _ in 0..self.d {
            members.push(x);
            x = (x + self.s) % self.m;
        }
        Ok(members)
    }

    /// All orbits, ordered by representative 0, 1, …, g−1.
    pub fn orbits(&self) -> Vec<Orbit> {
        (0..self.g)
            .map(|t| Orbit {
                representative: t,
                members: self.orbit_members(t).expect("t < g by construction"),
            })
            .collect()
    }
}
