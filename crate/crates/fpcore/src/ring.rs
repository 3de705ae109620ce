//! Polynomial rings: a prime field, named weighted variables, and a term
//! order, shared behind an `Arc`.
//!
//! Two rings compare equal when their modulus, variable names, weights, and
//! order all agree; polynomials refuse to mix rings that differ in any of
//! those. Cloning a `Ring` is cheap.

use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldError, PrimeField, Scalar};
use crate::monomial::{Monomial, MAX_VARS};
use crate::order::MonomialOrder;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("a ring needs between 1 and {MAX_VARS} variables, got {0}")]
    BadVariableCount(usize),
    #[error("variable weights must be positive")]
    ZeroWeight,
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("block order splits after {split} variables but the ring has {nvars}")]
    BadBlockSplit { split: usize, nvars: usize },
}

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    field: PrimeField,
    vars: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

/// A polynomial ring `F_p[x_0, …, x_{n−1}]` with per-variable weights and a
/// fixed term order.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(
        prime: u32,
        vars: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<Ring, RingError> {
        let field = PrimeField::new(prime)?;
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(RingError::BadVariableCount(vars.len()));
        }
        if weights.len() != vars.len() {
            return Err(RingError::BadVariableCount(weights.len()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(RingError::ZeroWeight);
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(RingError::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::Block { first } = order {
            if first == 0 || first >= vars.len() {
                return Err(RingError::BadBlockSplit { split: first, nvars: vars.len() });
            }
        }
        Ok(Ring(Arc::new(RingData { field, vars, weights, order })))
    }

    /// Standard graded ring `F_p[x_0, …, x_{n−1}]`, all weights 1, grevlex.
    pub fn standard(prime: u32, nvars: usize) -> Result<Ring, RingError> {
        let vars = (0..nvars).map(|i| format!("x{i}")).collect();
        Ring::new(prime, vars, vec![1; nvars], MonomialOrder::GrevLex)
    }

    /// Same variables and weights, different term order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring, RingError> {
        Ring::new(self.modulus(), self.0.vars.clone(), self.0.weights.clone(), order)
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.0.field
    }

    #[inline]
    pub fn modulus(&self) -> Scalar {
        self.0.field.modulus()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    #[inline]
    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    #[inline]
    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    /// Packed comparison key of `m` under this ring's order.
    #[inline]
    pub fn key(&self, m: &Monomial) -> u128 {
        self.0.order.key(m, self.nvars(), self.weights())
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        assert_eq!(exps.len(), self.nvars());
        Monomial::from_exps(exps, self.weights())
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        Monomial::var(i, self.weights())
    }

    /// All monomials of weighted degree exactly `d`, in descending term
    /// order.
    pub fn monomials_of_degree(&self, d: u16) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars()];
        self.enumerate_degree(d as u32, 0, &mut exps, &mut out);
        out.sort_by_key(|m| std::cmp::Reverse(self.key(m)));
        out
    }

    fn enumerate_degree(
        &self,
        remaining: u32,
        var: usize,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if var == self.nvars() {
            if remaining == 0 {
                out.push(Monomial::from_exps(exps, self.weights()));
            }
            return;
        }
        let w = self.weights()[var];
        let max_e = (remaining / w).min(crate::monomial::MAX_EXP as u32);
        for e in 0..=max_e {
            exps[var] = e;
            self.enumerate_degree(remaining - e * w, var + 1, exps, out);
        }
        exps[var] = 0;
    }

    /// Number of monomials of weighted degree exactly `d`.
    pub fn degree_dimension(&self, d: u16) -> usize {
        // For standard weights this is C(d+n−1, n−1); arbitrary weights fall
        // back to a small knapsack count.
        let n = self.nvars();
        if self.weights().iter().all(|&w| w == 1) {
            return binomial(d as u64 + n as u64 - 1, n as u64 - 1) as usize;
        }
        let mut counts = vec![0u64; d as usize + 1];
        counts[0] = 1;
        for &w in self.weights() {
            for deg in w as usize..=d as usize {
                counts[deg] += counts[deg - w as usize];
            }
        }
        counts[d as usize] as usize
    }
}

/// Binomial coefficient on `u64`, exact for the small arguments used here.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl std::fmt::Display for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F{}[{}]", self.modulus(), self.0.vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structural_equality() {
        let a = Ring::standard(32003, 3).unwrap();
        let b = Ring::standard(32003, 3).unwrap();
        let c = Ring::standard(101, 3).unwrap();
        let d = a.with_order(MonomialOrder::Lex).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(Ring::standard(32003, 0).is_err());
        assert!(Ring::standard(32003, 13).is_err());
        assert!(Ring::new(
            32003,
            vec!["x".into(), "x".into()],
            vec![1, 1],
            MonomialOrder::GrevLex
        )
        .is_err());
        assert!(Ring::new(32003, vec!["x".into()], vec![0], MonomialOrder::GrevLex).is_err());
        assert!(Ring::new(
            32003,
            vec!["x".into(), "y".into()],
            vec![1, 1],
            MonomialOrder::Block { first: 2 }
        )
        .is_err());
    }

    #[test]
    fn degree_enumeration_counts() {
        let r = Ring::standard(32003, 3).unwrap();
        for d in 0..8u16 {
            let ms = r.monomials_of_degree(d);
            assert_eq!(ms.len(), r.degree_dimension(d));
            assert_eq!(ms.len(), ((d as usize + 1) * (d as usize + 2)) / 2);
            // Strictly descending in the ring order.
            for w in ms.windows(2) {
                assert!(r.key(&w[0]) > r.key(&w[1]));
            }
        }
    }

    #[test]
    fn weighted_degree_enumeration() {
        // F_p[s, t] with weights (1, 2): degree 4 = {s⁴, s²t, t²}.
        let r = Ring::new(
            32003,
            vec!["s".into(), "t".into()],
            vec![1, 2],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let ms = r.monomials_of_degree(4);
        assert_eq!(ms.len(), 3);
        assert_eq!(r.degree_dimension(4), 3);
    }

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 5), 252);
    }
}
