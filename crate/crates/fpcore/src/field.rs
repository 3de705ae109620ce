//! The prime field F_p.
//!
//! Scalars are canonical representatives in `0..p` stored as `u32`; products
//! are taken through `u64`, so every prime below 2³¹ is handled exactly.

use thiserror::Error;

/// Canonical representative of an element of F_p, in `0..p`.
pub type Scalar = u32;

/// Default modulus: a standard computer-algebra prime below 2¹⁵.
pub const DEFAULT_PRIME: u32 = 32003;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("prime {0} is too small: characteristics 2 and 3 are not supported")]
    TooSmall(u32),
    #[error("prime {0} does not fit in 31 bits")]
    TooLarge(u32),
    #[error("inversion of zero in F_{0}")]
    ZeroInverse(u32),
}

/// The field F_p. Copyable; all operations are exact mod `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Builds F_p, rejecting composite moduli and the primes 2 and 3
    /// (characteristic-2/3 special cases are out of scope).
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if p < 5 {
            return Err(FieldError::TooSmall(p));
        }
        if p > (1 << 31) - 1 {
            return Err(FieldError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer to its canonical representative.
    #[inline]
    pub fn from_i64(&self, n: i64) -> Scalar {
        let r = n.rem_euclid(self.p as i64);
        r as Scalar
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as Scalar
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: Scalar) -> Result<Scalar, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse(self.p));
        }
        // Invariant: r = s·a (mod p), walked down the Euclidean remainders.
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "gcd(a, p) must be 1 for prime p");
        Ok(self.from_i64(s0))
    }

    pub fn pow(&self, mut base: Scalar, mut exp: u64) -> Scalar {
        let mut acc: Scalar = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
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
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::new(4), Err(FieldError::TooSmall(4)));
        assert_eq!(PrimeField::new(3), Err(FieldError::TooSmall(3)));
        assert_eq!(PrimeField::new(32001), Err(FieldError::NotPrime(32001)));
        assert!(PrimeField::new(5).is_ok());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn inverse_in_f7() {
        // 3·5 = 15 = 2·7 + 1.
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(3).unwrap(), 5);
        assert_eq!(f.mul(3, f.inv(3).unwrap()), 1);
    }

    #[test]
    fn identity_inverse() {
        let f = PrimeField::new(32003).unwrap();
        assert_eq!(f.inv(1).unwrap(), 1);
    }

    #[test]
    fn additive_wraparound_in_f7() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(6, 1), 0);
    }

    #[test]
    fn inversion_of_zero_is_an_error() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(0), Err(FieldError::ZeroInverse(7)));
    }

    #[test]
    fn signed_reduction() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.from_i64(-14), 0);
        assert_eq!(f.from_i64(15), 1);
    }

    #[test]
    fn every_nonzero_element_inverts() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }
}
