//! Dense monomial exponent vectors with a cached weighted degree.
//!
//! Rings in this engine have at most [`MAX_VARS`] variables, so exponents live
//! in a fixed `[u8; 12]`. Each exponent is capped at [`MAX_EXP`] = 127, which
//! keeps every byte's high bit clear and makes the word-parallel divisibility
//! test below valid.

/// Hard cap on the number of ring variables.
pub const MAX_VARS: usize = 12;

/// Hard cap on a single exponent (keeps byte high bits clear).
pub const MAX_EXP: u8 = 127;

/// A monomial: exponent vector plus cached weighted degree. Ordering between
/// monomials is a property of the ring (see `Ring::cmp_mono`), not of this
/// type.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    deg: u16,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0 }
    }

    /// Builds from explicit exponents under the given weights.
    ///
    /// Panics if an exponent exceeds [`MAX_EXP`] or the weighted degree
    /// overflows `u16`; both are far outside anything this engine computes.
    pub fn from_exps(exps: &[u32], weights: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        assert_eq!(exps.len(), weights.len());
        let mut m = Monomial::one();
        let mut deg: u32 = 0;
        for (i, (&e, &w)) in exps.iter().zip(weights).enumerate() {
            assert!(e <= MAX_EXP as u32, "exponent {e} exceeds cap {MAX_EXP}");
            m.exps[i] = e as u8;
            deg += e * w;
        }
        m.deg = u16::try_from(deg).expect("weighted degree overflows u16");
        m
    }

    pub fn var(i: usize, weights: &[u32]) -> Self {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m.deg = weights[i] as u16;
        m
    }

    #[inline]
    pub fn deg(&self) -> u16 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u8 {
        self.exps[i]
    }

    #[inline]
    pub fn exps(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps == [0; MAX_VARS]
    }

    #[inline]
    fn lanes(&self) -> (u64, u32) {
        let lo = u64::from_le_bytes(self.exps[0..8].try_into().unwrap());
        let hi = u32::from_le_bytes(self.exps[8..12].try_into().unwrap());
        (lo, hi)
    }

    /// Word-parallel divisibility: true iff every exponent of `self` is ≤ the
    /// matching exponent of `other`. Valid because exponents stay ≤ 127: each
    /// byte of `(b | 0x80…) − a` then keeps its high bit exactly when there
    /// was no borrow, i.e. when `a ≤ b` in that byte.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        const H64: u64 = 0x8080_8080_8080_8080;
        const H32: u32 = 0x8080_8080;
        let (a_lo, a_hi) = self.lanes();
        let (b_lo, b_hi) = other.lanes();
        ((b_lo | H64).wrapping_sub(a_lo)) & H64 == H64
            && ((b_hi | H32).wrapping_sub(a_hi)) & H32 == H32
    }

    /// Product of monomials. Panics on exponent overflow past [`MAX_EXP`].
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            let s = self.exps[i] + other.exps[i];
            assert!(s <= MAX_EXP, "exponent overflow in monomial product");
            exps[i] = s;
        }
        Monomial { exps, deg: self.deg + other.deg }
    }

    /// Exact quotient `self / other`; `None` unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] - other.exps[i];
        }
        Some(Monomial { exps, deg: self.deg - other.deg })
    }

    /// Least common multiple under the given weights.
    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        let mut deg: u32 = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            if exps[i] != 0 {
                deg += exps[i] as u32 * weights[i];
            }
        }
        Monomial { exps, deg: deg as u16 }
    }

    /// True iff the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "mono{:?}", &self.exps)
    }
}
