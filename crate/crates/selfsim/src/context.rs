//! Ambient arithmetic context: the prime p and the free-abelian rank d.
//!
//! Every polynomial and group element carries a copy of its context; binary
//! operations panic on a mismatch, which is a programming error rather than a
//! user-input error (user-facing boundaries validate contexts up front).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair (p, d): scalars live in GF(p), exponent vectors in Z^d.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Context {
    p: u32,
    d: usize,
}

impl Context {
    /// Validates that `p` is prime and `d >= 1`.
    pub fn new(p: u32, d: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if d == 0 {
            return Err(Error::InvalidParameter("rank d must be at least 1".into()));
        }
        Ok(Context { p, d })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Reduces a signed integer to its residue in [0, p).
    pub fn reduce(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn neg(&self, a: u32) -> u32 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::InvalidParameter("inverse of zero".into()));
        }
        // Fermat: a^(p-2) mod p.
        Ok(self.pow(a, self.p as i64 - 2))
    }

    /// Raises a nonzero scalar to a signed power (negative powers invert).
    pub fn pow(&self, base: u32, exp: i64) -> u32 {
        let b = base % self.p;
        if b == 0 {
            return if exp == 0 { 1 } else { 0 };
        }
        if self.p == 2 {
            return 1;
        }
        // Reduce the exponent modulo the group order p - 1.
        let mut e = exp.rem_euclid(self.p as i64 - 1) as u32;
        let mut acc: u64 = 1;
        let mut b = b as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p as u64;
            }
            b = b * b % self.p as u64;
            e >>= 1;
        }
        acc as u32
    }

    /// Multiplicative order of a nonzero scalar.
    pub fn order(&self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::InvalidParameter("order of zero".into()));
        }
        let mut t = a % self.p;
        let mut k = 1;
        while t != 1 {
            t = self.mul(t, a);
            k += 1;
        }
        Ok(k)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p as u64 {
        if p as u64 % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Context::new(2, 1).is_ok());
        assert!(Context::new(5, 3).is_ok());
        assert!(matches!(Context::new(1, 1), Err(Error::NotPrime(1))));
        assert!(matches!(Context::new(6, 1), Err(Error::NotPrime(6))));
        assert!(Context::new(2, 0).is_err());
    }

    #[test]
    fn scalar_arithmetic() {
        let c = Context::new(5, 1).unwrap();
        assert_eq!(c.add(3, 4), 2);
        assert_eq!(c.sub(1, 3), 3);
        assert_eq!(c.mul(3, 4), 2);
        assert_eq!(c.inv(3).unwrap(), 2);
        assert_eq!(c.pow(2, -1), 3);
        assert_eq!(c.pow(2, 4), 1);
        assert_eq!(c.reduce(-7), 3);
        assert_eq!(c.order(2).unwrap(), 4);
        assert_eq!(c.order(4).unwrap(), 2);
    }
}
