//! The one-point numerical semigroup H(P_1) = <a, b>.
//!
//! Membership is answered from an Apery-style table: for each residue class
//! r mod a we store the smallest element of <a, b> congruent to r. Queries
//! are then a single comparison, which keeps large-b presets (b = 126 and up)
//! cheap.

use crate::curve::CurveParams;
use serde::{Deserialize, Serialize};

/// The unique representation of a gap of <a, b> as ab - i*a - j*b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRep {
    pub value: u64,
    /// Coefficient of a, in [1, b-1].
    pub i: u64,
    /// Coefficient of b, in [1, a-1].
    pub j: u64,
}

/// Membership table for <a, b>.
#[derive(Debug, Clone)]
pub struct OnePointSemigroup {
    a: u64,
    b: u64,
    genus: u64,
    /// apery[r] = smallest element of <a, b> with value % a == r.
    apery: Vec<u64>,
}

impl OnePointSemigroup {
    pub fn new(params: &CurveParams) -> Self {
        let (a, b) = (params.a(), params.b());
        let mut apery = vec![0u64; a as usize];
        for y in 0..a {
            apery[((y * b) % a) as usize] = y * b;
        }
        OnePointSemigroup { a, b, genus: params.genus(), apery }
    }

    /// True iff n = x*a + y*b for some nonnegative integers x, y.
    pub fn contains(&self, n: u64) -> bool {
        n >= self.apery[(n % self.a) as usize]
    }

    /// The largest integer not in <a, b>: ab - a - b.
    pub fn frobenius(&self) -> u64 {
        self.a * self.b - self.a - self.b
    }

    /// All gaps of <a, b>, sorted increasing. Exactly genus many.
    pub fn gaps(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.genus as usize);
        for n in 1..=self.frobenius() {
            if !self.contains(n) {
                out.push(n);
            }
        }
        debug_assert_eq!(out.len() as u64, self.genus);
        out
    }

    /// The gap representation n = ab - i*a - j*b, if n is a gap.
    ///
    /// The pair (i, j) with 1 <= i <= b-1, 1 <= j <= a-1 is unique: j is the
    /// residue of -n * b^{-1} mod a and i follows by division.
    pub fn gap_representation(&self, n: u64) -> Option<GapRep> {
        if n == 0 || self.contains(n) {
            return None;
        }
        let (a, b) = (self.a as i64, self.b as i64);
        let n = n as i64;
        // Solve ab - i*a - j*b = n: j = -n * b^{-1} (mod a), lifted to [1, a-1].
        let binv = mod_inverse(b.rem_euclid(a), a);
        let j = ((-n).rem_euclid(a) * binv).rem_euclid(a);
        debug_assert!(j != 0, "gap residue cannot be 0 mod a");
        let i = (a * b - n - j * b) / a;
        debug_assert_eq!(a * b - i * a - j * b, n);
        debug_assert!((1..=b - 1).contains(&i));
        Some(GapRep { value: n as u64, i: i as u64, j: j as u64 })
    }

    /// Members of <a, b> in [0, bound], sorted increasing.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&n| self.contains(n)).collect()
    }
}

/// Inverse of x mod m for gcd(x, m) = 1, via the extended Euclidean algorithm.
fn mod_inverse(x: i64, m: i64) -> i64 {
    let (mut r0, mut r1) = (m, x);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(m)
}
