//! Hilbert series of quotients by monomial ideals, and the dimension,
//! degree, genera, and Hilbert polynomial read off from them.
//!
//! The series of `R/J` for a monomial ideal `J` is computed exactly as
//! `N(t) / Π_i (1 − t^{w_i})` by pivot splitting: for a variable `x`,
//! `N(J) = N(J + (x)) + t^{w(x)}·N(J : x)`, with base cases for the empty,
//! unit, and pairwise-coprime cases. Gröbner lead terms reduce the general
//! ideal to this one.

use num::rational::Ratio;
use num::traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use fpcore::{Monomial, Ring};

/// Exact Hilbert series of a graded quotient, held as the raw numerator over
/// the full denominator `Π (1 − t^{w_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    weights: Vec<u32>,
    numerator: Vec<i64>,
}

/// Projective summary of a Hilbert series under the standard grading.
/// `dim` is the Krull dimension of the affine cone (−1 for the unit ideal),
/// `degree` the degree of the projective scheme, `genera` the arithmetic
/// genera of its successive generic hyperplane sections (the scheme itself
/// first), and `hilbert_polynomial` the coefficients of the Hilbert
/// polynomial as reduced fractions, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub dim: i64,
    pub degree: i64,
    pub genera: Vec<i64>,
    pub hilbert_polynomial: Vec<(i64, i64)>,
}

impl HilbertData {
    /// Euler characteristic of the structure sheaf: `P(0)`.
    pub fn chi(&self) -> i64 {
        match self.hilbert_polynomial.first() {
            None => 0,
            Some(&(n, d)) => {
                debug_assert_eq!(d, 1, "P(0) is an integer");
                n
            }
        }
    }
}

impl HilbertSeries {
    /// Series of `R/J` where `J` is generated by the given monomials.
    pub fn of_quotient(ring: &Ring, gens: &[Monomial]) -> HilbertSeries {
        HilbertSeries {
            nvars: ring.nvars(),
            weights: ring.weights().to_vec(),
            numerator: numerator_of(ring, gens.to_vec()),
        }
    }

    /// Series with an explicitly provided numerator (used for modules, whose
    /// numerators are sums of shifted ideal numerators).
    pub fn from_numerator(ring: &Ring, numerator: Vec<i64>) -> HilbertSeries {
        HilbertSeries { nvars: ring.nvars(), weights: ring.weights().to_vec(), numerator }
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// Exact value of the Hilbert function at degree `d ≥ 0`.
    pub fn value_at(&self, d: u32) -> i64 {
        let d = d as usize;
        let mut c = vec![0i64; d + 1];
        for (k, &n) in self.numerator.iter().enumerate().take(d + 1) {
            c[k] = n;
        }
        for &w in &self.weights {
            let w = w as usize;
            for k in w..=d {
                c[k] += c[k - w];
            }
        }
        c[d]
    }

    /// Exact value of the Hilbert polynomial at any integer, including
    /// negative arguments where the polynomial and the function disagree.
    /// Standard grading only; a series with finite support gives 0.
    pub fn polynomial_at(&self, d: i64) -> i64 {
        assert!(
            self.weights.iter().all(|&w| w == 1),
            "Hilbert polynomial needs the standard grading"
        );
        if is_zero_poly(&self.numerator) {
            return 0;
        }
        let (reduced, mult) = cancel_ones(&self.numerator);
        let dim = self.nvars as i64 - mult as i64;
        if dim <= 0 {
            return 0;
        }
        // P(d) = Σ_k ñ_k · C(d − k + dim − 1, dim − 1) with the polynomial
        // binomial C(x, m) = x(x−1)…(x−m+1)/m!, exact in i128.
        let m = (dim - 1) as i128;
        let mut fact: i128 = 1;
        for j in 1..=m {
            fact *= j;
        }
        let mut acc: i128 = 0;
        for (k, &c) in reduced.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let x = d as i128 - k as i128 + m;
            let mut prod: i128 = 1;
            for j in 0..m {
                prod *= x - j;
            }
            debug_assert_eq!(prod % fact, 0);
            acc += c as i128 * (prod / fact);
        }
        i64::try_from(acc).expect("Hilbert polynomial value fits in i64")
    }

    /// Krull dimension of the affine cone: the pole order of the series at
    /// `t = 1`. The unit ideal gives −1.
    pub fn krull_dim(&self) -> i64 {
        if is_zero_poly(&self.numerator) {
            return -1;
        }
        let (_, mult) = cancel_ones(&self.numerator);
        self.nvars as i64 - mult as i64
    }

    /// Full projective summary; requires the standard grading.
    pub fn data(&self) -> HilbertData {
        assert!(
            self.weights.iter().all(|&w| w == 1),
            "projective summary needs the standard grading"
        );
        if is_zero_poly(&self.numerator) {
            return HilbertData { dim: -1, degree: 0, genera: vec![], hilbert_polynomial: vec![] };
        }
        let (reduced, mult) = cancel_ones(&self.numerator);
        let dim = self.nvars as i64 - mult as i64;
        let degree: i64 = reduced.iter().sum();
        if dim <= 0 {
            return HilbertData { dim, degree, genera: vec![], hilbert_polynomial: vec![] };
        }

        // P(d) = Σ_k ñ_k · C(d − k + dim − 1, dim − 1), degree dim − 1 in d.
        let d = dim as usize;
        let mut coeffs: Vec<Ratio<i64>> = vec![Ratio::zero(); d];
        let mut fact: i64 = 1;
        for j in 1..d {
            fact *= j as i64;
        }
        for (k, &c) in reduced.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // Π_{j=1}^{dim−1} (x + (j − k)) as a polynomial in x.
            let mut p: Vec<Ratio<i64>> = vec![Ratio::one()];
            for j in 1..d {
                let shift = Ratio::from_integer(j as i64 - k as i64);
                let mut q = vec![Ratio::zero(); p.len() + 1];
                for (e, &a) in p.iter().enumerate() {
                    q[e + 1] += a;
                    q[e] += a * shift;
                }
                p = q;
            }
            let scale = Ratio::new(c, fact);
            for (e, a) in p.into_iter().enumerate() {
                coeffs[e] += a * scale;
            }
        }

        let eval = |x: i64| -> i64 {
            let mut acc = Ratio::zero();
            let mut pw = Ratio::one();
            for &a in &coeffs {
                acc += a * pw;
                pw *= Ratio::from_integer(x);
            }
            debug_assert!(acc.is_integer());
            acc.to_integer()
        };

        // genera_i = (−1)^(m−i) (Δ^i P(0) − 1) with backward differences,
        // where m is the projective dimension.
        let m = d - 1;
        let pvals: Vec<i64> = (0..=m as i64).map(|j| eval(-j)).collect();
        let genera: Vec<i64> = (0..=m)
            .map(|i| {
                let mut delta: i64 = 0;
                for (j, &pv) in pvals.iter().enumerate().take(i + 1) {
                    let b = fpcore::binomial(i as u64, j as u64) as i64;
                    delta += if j % 2 == 0 { b * pv } else { -b * pv };
                }
                let sign = if (m - i) % 2 == 0 { 1 } else { -1 };
                sign * (delta - 1)
            })
            .collect();

        let hilbert_polynomial = coeffs
            .iter()
            .map(|a| {
                debug_assert!(a.denom().is_positive());
                (*a.numer(), *a.denom())
            })
            .collect();
        HilbertData { dim, degree, genera, hilbert_polynomial }
    }
}

fn is_zero_poly(p: &[i64]) -> bool {
    p.iter().all(|&c| c == 0)
}

/// Divides out `(1 − t)` while the numerator vanishes at `t = 1`; returns
/// the reduced numerator and the multiplicity removed.
fn cancel_ones(numerator: &[i64]) -> (Vec<i64>, usize) {
    let mut n: Vec<i64> = numerator.to_vec();
    while let Some(&0) = n.last() {
        n.pop();
    }
    let mut mult = 0;
    while !n.is_empty() && n.iter().sum::<i64>() == 0 {
        // N = (1 − t)·Q with Q_k = Σ_{j ≤ k} N_j.
        let mut q = Vec::with_capacity(n.len() - 1);
        let mut acc = 0i64;
        for &c in &n[..n.len() - 1] {
            acc += c;
            q.push(acc);
        }
        n = q;
        while let Some(&0) = n.last() {
            n.pop();
        }
        mult += 1;
    }
    (n, mult)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.deg());
    let mut kept: Vec<Monomial> = Vec::new();
    for m in gens {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

fn mul_one_minus_tk(num: &mut Vec<i64>, k: usize) {
    let old = num.clone();
    num.resize(old.len() + k, 0);
    for (i, &c) in old.iter().enumerate() {
        num[i + k] -= c;
    }
}

fn numerator_of(ring: &Ring, gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let n = ring.nvars();
    // Pivot on the most shared variable; with none shared, the generators
    // are pairwise coprime and the numerator is a plain product.
    let mut counts = vec![0usize; n];
    for m in &gens {
        for (v, slot) in counts.iter_mut().enumerate() {
            if m.exp(v) > 0 {
                *slot += 1;
            }
        }
    }
    let (pivot, &freq) = counts
        .iter()
        .enumerate()
        .max_by_key(|&(v, &c)| (c, std::cmp::Reverse(v)))
        .unwrap();
    if freq <= 1 {
        let mut num = vec![1i64];
        for m in &gens {
            mul_one_minus_tk(&mut num, m.deg() as usize);
        }
        return num;
    }

    let mut plus: Vec<Monomial> = gens.iter().filter(|m| m.exp(pivot) == 0).cloned().collect();
    plus.push(ring.var_monomial(pivot));
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exp(pivot) == 0 {
                *m
            } else {
                let exps: Vec<u32> = (0..n)
                    .map(|v| m.exp(v) as u32 - u32::from(v == pivot))
                    .collect();
                Monomial::from_exps(&exps, ring.weights())
            }
        })
        .collect();

    let a = numerator_of(ring, plus);
    let b = numerator_of(ring, colon);
    let w = ring.weights()[pivot] as usize;
    let mut out = vec![0i64; a.len().max(b.len() + w)];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i + w] += c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(r: &Ring, e: &[u32]) -> Monomial {
        r.monomial(e)
    }

    #[test]
    fn free_ring_series() {
        let r = Ring::standard(32003, 3).unwrap();
        let s = HilbertSeries::of_quotient(&r, &[]);
        assert_eq!(s.krull_dim(), 3);
        for d in 0..6u32 {
            assert_eq!(s.value_at(d), ((d + 1) * (d + 2) / 2) as i64);
        }
        let data = s.data();
        assert_eq!(data.dim, 3);
        assert_eq!(data.degree, 1);
        // P(d) = (d+1)(d+2)/2 = 1 + 3d/2 + d²/2.
        assert_eq!(data.hilbert_polynomial, vec![(1, 1), (3, 2), (1, 2)]);
        assert_eq!(data.chi(), 1);
    }

    #[test]
    fn unit_ideal_sentinel() {
        let r = Ring::standard(32003, 3).unwrap();
        let s = HilbertSeries::of_quotient(&r, &[Monomial::one()]);
        assert_eq!(s.krull_dim(), -1);
        let data = s.data();
        assert_eq!(data.dim, -1);
        assert_eq!(data.degree, 0);
        assert_eq!(data.chi(), 0);
    }

    #[test]
    fn hypersurface_degree() {
        let r = Ring::standard(32003, 3).unwrap();
        let s = HilbertSeries::of_quotient(&r, &[mono(&r, &[0, 2, 1])]);
        assert_eq!(s.krull_dim(), 2);
        let data = s.data();
        assert_eq!((data.dim, data.degree), (2, 3));
    }

    #[test]
    fn value_matches_direct_monomial_count() {
        // Oracle: count degree-d monomials outside the ideal.
        let r = Ring::standard(32003, 3).unwrap();
        let gens = vec![mono(&r, &[2, 0, 0]), mono(&r, &[1, 1, 0]), mono(&r, &[0, 0, 3])];
        let s = HilbertSeries::of_quotient(&r, &gens);
        for d in 0..10u16 {
            let count = r
                .monomials_of_degree(d)
                .iter()
                .filter(|m| !gens.iter().any(|g| g.divides(m)))
                .count() as i64;
            assert_eq!(s.value_at(d as u32), count, "degree {d}");
        }
    }

    #[test]
    fn twisted_cubic_summary() {
        // Lead terms of the twisted cubic's Gröbner basis: x1², x1x2, x2².
        let r = Ring::standard(32003, 4).unwrap();
        let gens = vec![
            mono(&r, &[0, 2, 0, 0]),
            mono(&r, &[0, 1, 1, 0]),
            mono(&r, &[0, 0, 2, 0]),
        ];
        let s = HilbertSeries::of_quotient(&r, &gens);
        let data = s.data();
        assert_eq!(data.dim, 2);
        assert_eq!(data.degree, 3);
        // Rational normal curve: both the curve and its point section have
        // genus summary 0 and 2.
        assert_eq!(data.genera, vec![0, 2]);
        // P(d) = 3d + 1.
        assert_eq!(data.hilbert_polynomial, vec![(1, 1), (3, 1)]);
        for d in 0..6 {
            assert_eq!(s.value_at(d), 3 * d as i64 + 1);
        }
    }

    #[test]
    fn polynomial_extends_past_the_function() {
        let r = Ring::standard(32003, 3).unwrap();
        let free = HilbertSeries::of_quotient(&r, &[]);
        // P(d) = C(d+2, 2) as a polynomial: 0 at −1 and −2, then 1 at −3.
        assert_eq!(free.polynomial_at(2), 6);
        assert_eq!(free.polynomial_at(-1), 0);
        assert_eq!(free.polynomial_at(-2), 0);
        assert_eq!(free.polynomial_at(-3), 1);
        let r4 = Ring::standard(32003, 4).unwrap();
        let cubic = HilbertSeries::of_quotient(
            &r4,
            &[
                r4.monomial(&[0, 2, 0, 0]),
                r4.monomial(&[0, 1, 1, 0]),
                r4.monomial(&[0, 0, 2, 0]),
            ],
        );
        // P(d) = 3d + 1 keeps going where the function will not.
        assert_eq!(cubic.polynomial_at(-2), -5);
        assert_eq!(cubic.polynomial_at(5), cubic.value_at(5));
        // Finite-length quotients have the zero polynomial.
        let fat = HilbertSeries::of_quotient(
            &r,
            &[r.monomial(&[1, 0, 0]), r.monomial(&[0, 1, 0]), r.monomial(&[0, 0, 2])],
        );
        assert_eq!(fat.polynomial_at(0), 0);
    }

    #[test]
    fn weighted_series_value() {
        // k[s, t] with weights (1, 2) modulo (t²): degrees 0.. give
        // 1, 1, 2, 2, 2, 2, … (monomials s^a t^b, b ≤ 1).
        let r = fpcore::Ring::new(
            32003,
            vec!["s".into(), "t".into()],
            vec![1, 2],
            fpcore::MonomialOrder::GrevLex,
        )
        .unwrap();
        let s = HilbertSeries::of_quotient(&r, &[r.monomial(&[0, 2])]);
        assert_eq!(
            (0..6).map(|d| s.value_at(d)).collect::<Vec<_>>(),
            vec![1, 1, 2, 2, 2, 2]
        );
        assert_eq!(s.krull_dim(), 1);
    }
}
