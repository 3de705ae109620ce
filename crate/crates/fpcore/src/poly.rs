//! Multivariate polynomials over a prime field.
//!
//! A polynomial owns its [`Ring`] handle and a term list kept in strictly
//! descending term-order, with no zero coefficients and no repeated
//! monomials. Every constructor and operation preserves that normal form, so
//! equality is plain structural equality and the leading term is `terms[0]`.

use std::collections::HashMap;

use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::ring::Ring;
use crate::rng::Rng;

/// One monomial with its coefficient and cached comparison key.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub key: u128,
    pub mono: Monomial,
    pub coeff: Scalar,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        let mut p = Polynomial::zero(ring);
        if c != 0 {
            p.terms.push(Term { key: ring.key(&Monomial::one()), mono: Monomial::one(), coeff: c });
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, 1)
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        let mono = ring.var_monomial(i);
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term { key: ring.key(&mono), mono, coeff: 1 }],
        }
    }

    pub fn monomial_term(ring: &Ring, mono: Monomial, coeff: Scalar) -> Self {
        let mut p = Polynomial::zero(ring);
        if coeff % ring.modulus() != 0 {
            p.terms.push(Term { key: ring.key(&mono), mono, coeff: coeff % ring.modulus() });
        }
        p
    }

    /// Normalizing constructor: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let f = ring.field();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            let slot = acc.entry(m).or_insert(0);
            *slot = f.add(*slot, c % f.modulus());
        }
        let mut out: Vec<Term> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(mono, coeff)| Term { key: ring.key(&mono), mono, coeff })
            .collect();
        out.sort_unstable_by(|a, b| b.key.cmp(&a.key));
        Polynomial { ring: ring.clone(), terms: out }
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_mono(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn lead_coeff(&self) -> Option<Scalar> {
        self.terms.first().map(|t| t.coeff)
    }

    /// Weighted total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u16> {
        self.terms.iter().map(|t| t.mono.deg()).max()
    }

    /// `Some(d)` iff nonzero and every term has weighted degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u16> {
        let d = self.terms.first()?.mono.deg();
        self.terms.iter().all(|t| t.mono.deg() == d).then_some(d)
    }

    /// Coefficient of `mono`, zero when absent.
    pub fn coeff_of(&self, mono: &Monomial) -> Scalar {
        let key = self.ring.key(mono);
        match self.terms.binary_search_by(|t| key.cmp(&t.key)) {
            Ok(i) => self.terms[i].coeff,
            Err(_) => 0,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: f.neg(t.coeff), ..*t })
                .collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "polynomials from different rings");
        let f = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match b.key.cmp(&a.key) {
                std::cmp::Ordering::Less => {
                    terms.push(*a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push(*b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = f.add(a.coeff, b.coeff);
                    if c != 0 {
                        terms.push(Term { coeff: c, ..*a });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Scalar) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.modulus();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: f.mul(t.coeff, c), ..*t })
                .collect(),
        }
    }

    /// Multiplies by the single term `c·m` (order is preserved, so the term
    /// list just shifts).
    pub fn mul_term(&self, mono: &Monomial, c: Scalar) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.modulus();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let m = t.mono.mul(mono);
                    Term { key: self.ring.key(&m), mono: m, coeff: f.mul(t.coeff, c) }
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "polynomials from different rings");
        let f = self.ring.field();
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut acc: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let m = a.mono.mul(&b.mono);
                let slot = acc.entry(m).or_insert(0);
                *slot = f.add(*slot, f.mul(a.coeff, b.coeff));
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(mono, coeff)| Term { key: self.ring.key(&mono), mono, coeff })
            .collect();
        terms.sort_unstable_by(|a, b| b.key.cmp(&a.key));
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c).expect("nonzero lead")),
        }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let f = self.ring.field();
        let w = self.ring.weights();
        let mut terms = Vec::new();
        for t in &self.terms {
            let e = t.mono.exp(i) as u32;
            if e == 0 {
                continue;
            }
            let c = f.mul(t.coeff, f.from_i64(e as i64));
            if c == 0 {
                continue;
            }
            let mut exps = [0u32; crate::monomial::MAX_VARS];
            for (v, slot) in exps.iter_mut().enumerate() {
                *slot = t.mono.exp(v) as u32;
            }
            exps[i] -= 1;
            let mono = Monomial::from_exps(&exps[..self.ring.nvars()], w);
            terms.push((mono, c));
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Carries this polynomial into `target`, sending source variable `i` to
    /// target variable `var_map[i]`. Weights must match variable by variable;
    /// the map must be injective.
    pub fn map_vars(&self, target: &Ring, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        for (i, &j) in var_map.iter().enumerate() {
            assert_eq!(
                self.ring.weights()[i],
                target.weights()[j],
                "variable weight changed across rings"
            );
            assert!(!var_map[..i].contains(&j), "variable map must be injective");
        }
        let terms = self.terms.iter().map(|t| {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &j) in var_map.iter().enumerate() {
                exps[j] = t.mono.exp(i) as u32;
            }
            (Monomial::from_exps(&exps, target.weights()), t.coeff)
        });
        Polynomial::from_terms(target, terms.collect::<Vec<_>>())
    }

    /// Ring map: substitutes `images[i]` (a polynomial of `target`) for
    /// source variable `i`.
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        for im in images {
            assert_eq!(im.ring(), target, "image lives in the wrong ring");
        }
        assert_eq!(self.ring.modulus(), target.modulus());
        // Lazily cached powers of each image.
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|im| vec![Polynomial::one(target), im.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff as i64);
            for i in 0..self.ring.nvars() {
                let e = t.mono.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                prod = prod.mul(&powers[i][e]);
            }
            out = out.add(&prod);
        }
        out
    }

    /// Evaluates at a point of `F_p^n`.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.ring.nvars());
        let f = self.ring.field();
        let mut total = 0;
        for t in &self.terms {
            let mut v = t.coeff;
            for (i, &x) in point.iter().enumerate() {
                let e = t.mono.exp(i) as u64;
                if e != 0 {
                    v = f.mul(v, f.pow(x, e));
                }
            }
            total = f.add(total, v);
        }
        total
    }
}

/// A linear form with coefficients drawn uniformly from the field, redrawn
/// until nonzero.
pub fn random_linear_form(ring: &Ring, rng: &mut Rng) -> Polynomial {
    loop {
        let terms: Vec<(Monomial, Scalar)> = (0..ring.nvars())
            .map(|i| (ring.var_monomial(i), rng.uniform(ring.modulus())))
            .collect();
        let p = Polynomial::from_terms(ring, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A homogeneous polynomial of weighted degree `d` with uniform random
/// coefficients, redrawn until nonzero.
pub fn random_homogeneous(ring: &Ring, d: u16, rng: &mut Rng) -> Polynomial {
    let monos = ring.monomials_of_degree(d);
    assert!(!monos.is_empty(), "no monomials of degree {d}");
    loop {
        let terms: Vec<(Monomial, Scalar)> = monos
            .iter()
            .map(|&m| (m, rng.uniform(ring.modulus())))
            .collect();
        let p = Polynomial::from_terms(ring, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

fn fmt_poly(p: &Polynomial, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
    if p.terms.is_empty() {
        return write!(f, "0");
    }
    for (k, t) in p.terms.iter().enumerate() {
        if k > 0 {
            write!(f, " + ")?;
        }
        let mut wrote = false;
        if t.coeff != 1 || t.mono.is_one() {
            write!(f, "{}", t.coeff)?;
            wrote = true;
        }
        for (i, name) in p.ring.vars().iter().enumerate() {
            let e = t.mono.exp(i);
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            wrote = true;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
    }
    Ok(())
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_poly(self, f)
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_poly(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::MonomialOrder;

    fn ring() -> Ring {
        Ring::standard(32003, 3).unwrap()
    }

    fn poly(r: &Ring, terms: &[(i64, [u32; 3])]) -> Polynomial {
        Polynomial::from_terms(
            r,
            terms
                .iter()
                .map(|&(c, e)| (r.monomial(&e), r.field().from_i64(c)))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn addition_cancels() {
        let r = ring();
        let f = poly(&r, &[(1, [2, 0, 0]), (3, [0, 1, 0])]);
        let g = poly(&r, &[(-1, [2, 0, 0]), (4, [0, 0, 1])]);
        let s = f.add(&g);
        assert_eq!(s, poly(&r, &[(3, [0, 1, 0]), (4, [0, 0, 1])]));
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn product_expands() {
        // (x + y)(x − y) = x² − y².
        let r = ring();
        let f = poly(&r, &[(1, [1, 0, 0]), (1, [0, 1, 0])]);
        let g = poly(&r, &[(1, [1, 0, 0]), (-1, [0, 1, 0])]);
        assert_eq!(f.mul(&g), poly(&r, &[(1, [2, 0, 0]), (-1, [0, 2, 0])]));
    }

    #[test]
    fn lead_term_is_grevlex_largest() {
        let r = ring();
        let f = poly(&r, &[(5, [0, 0, 2]), (7, [1, 1, 0]), (1, [0, 1, 0])]);
        assert_eq!(f.lead_mono(), Some(&r.monomial(&[1, 1, 0])));
        assert_eq!(f.lead_coeff(), Some(7));
        assert_eq!(f.degree(), Some(2));
        assert!(f.homogeneous_degree().is_none());
    }

    #[test]
    fn derivative_of_cubic() {
        // ∂/∂x (x³ + x y²) = 3x² + y².
        let r = ring();
        let f = poly(&r, &[(1, [3, 0, 0]), (1, [1, 2, 0])]);
        assert_eq!(f.derivative(0), poly(&r, &[(3, [2, 0, 0]), (1, [0, 2, 0])]));
        assert!(f.derivative(2).is_zero());
    }

    #[test]
    fn substitution_restricts_to_a_line() {
        // f = x z − y² on the line z = x + y: x² + x y − y².
        let r = ring();
        let r2 = Ring::new(
            32003,
            vec!["x".into(), "y".into()],
            vec![1, 1],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let f = poly(&r, &[(1, [1, 0, 1]), (-1, [0, 2, 0])]);
        let x = Polynomial::var(&r2, 0);
        let y = Polynomial::var(&r2, 1);
        let g = f.substitute(&r2, &[x.clone(), y.clone(), x.add(&y)]);
        let expect = Polynomial::from_terms(
            &r2,
            vec![
                (r2.monomial(&[2, 0]), 1),
                (r2.monomial(&[1, 1]), 1),
                (r2.monomial(&[0, 2]), r2.field().from_i64(-1)),
            ],
        );
        assert_eq!(g, expect);
    }

    #[test]
    fn evaluation() {
        let r = ring();
        // x² + 2yz at (3, 1, 4) = 9 + 8 = 17.
        let f = poly(&r, &[(1, [2, 0, 0]), (2, [0, 1, 1])]);
        assert_eq!(f.eval(&[3, 1, 4]), 17);
    }

    #[test]
    fn display_uses_ring_names() {
        let r = ring();
        let f = poly(&r, &[(2, [2, 1, 0]), (1, [0, 0, 1]), (5, [0, 0, 0])]);
        assert_eq!(format!("{f}"), "2*x0^2*x1 + x2 + 5");
        assert_eq!(format!("{}", Polynomial::zero(&r)), "0");
    }

    #[test]
    fn random_linear_form_is_linear_and_seeded() {
        let r = ring();
        let mut a = Rng::new(7);
        let mut b = Rng::new(7);
        let fa = random_linear_form(&r, &mut a);
        let fb = random_linear_form(&r, &mut b);
        assert_eq!(fa, fb);
        assert_eq!(fa.homogeneous_degree(), Some(1));
    }
}
