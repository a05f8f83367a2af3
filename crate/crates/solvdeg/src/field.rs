//! Arithmetic in prime fields F_p for p < 2^31.
//!
//! Elements are plain `u64` values kept in `[0, p)`. With p below 2^31 a
//! product of two reduced elements fits in a `u64`, so no widening tricks
//! are needed.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1u64 << 31).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical representative of a (possibly negative) integer.
    pub fn from_int(&self, a: i64) -> u64 {
        let p = self.p as i64;
        (a.rem_euclid(p)) as u64
    }

    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by extended Euclid. Panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        self.from_int(s0)
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_and_out_of_range_moduli() {
        assert!(matches!(PrimeField::new(4), Err(Error::NotPrime(4))));
        assert!(matches!(PrimeField::new(1), Err(Error::ModulusOutOfRange(1))));
        assert!(matches!(
            PrimeField::new(1 << 31),
            Err(Error::ModulusOutOfRange(_))
        ));
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(2147483647).is_ok()); // 2^31 - 1 is prime
    }

    #[test]
    fn inverse_round_trips() {
        let f = PrimeField::new(65521).unwrap();
        for a in [1u64, 2, 17, 65520, 30000] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn from_int_handles_negatives() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_int(-1), 6);
        assert_eq!(f.from_int(-14), 0);
        assert_eq!(f.from_int(15), 1);
    }
}
