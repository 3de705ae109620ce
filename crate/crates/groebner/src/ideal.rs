//! Ideals with cached reduced Gröbner bases and Hilbert data.

use std::sync::OnceLock;

use fpcore::{Polynomial, Ring};

use crate::gb::{ideal_groebner, poly_normal_form, Budget, GbError};
use crate::hilbert::{HilbertData, HilbertSeries};

/// An ideal of a polynomial ring, remembered by its generators. The reduced
/// Gröbner basis and Hilbert data are computed on demand and cached; caches
/// fill only on success, so a budget failure can be retried.
#[derive(Debug, Default)]
pub struct Ideal {
    ring: Option<Ring>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
    series: OnceLock<HilbertSeries>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb: self.gb.clone(),
            series: self.series.clone(),
        }
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert_eq!(g.ring(), ring, "generator from a different ring");
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: Some(ring.clone()), gens, gb: OnceLock::new(), series: OnceLock::new() }
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &Ring {
        self.ring.as_ref().expect("ideal built via Ideal::new")
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis, cached after the first successful run.
    pub fn groebner_basis(&self) -> Result<&[Polynomial], GbError> {
        self.groebner_basis_budgeted(&mut Budget::default())
    }

    pub fn groebner_basis_budgeted(&self, budget: &mut Budget) -> Result<&[Polynomial], GbError> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = ideal_groebner(self.ring(), &self.gens, budget)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// Fully reduces `f` modulo this ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, GbError> {
        let gb = self.groebner_basis()?;
        poly_normal_form(self.ring(), f, gb, &mut Budget::default())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, GbError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_zero_ideal(&self) -> Result<bool, GbError> {
        Ok(self.groebner_basis()?.is_empty())
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit(&self) -> Result<bool, GbError> {
        let gb = self.groebner_basis()?;
        Ok(gb.len() == 1 && gb[0].degree() == Some(0))
    }

    /// Ideal equality via reduced Gröbner bases, which are canonical.
    pub fn equals(&self, other: &Ideal) -> Result<bool, GbError> {
        assert_eq!(self.ring(), other.ring(), "ideals in different rings");
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring(), other.ring(), "ideals in different rings");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring(), gens)
    }

    pub fn plus_gens(&self, extra: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(self.ring(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring(), other.ring(), "ideals in different rings");
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(self.ring(), gens)
    }

    /// Lead monomials of the reduced Gröbner basis.
    pub fn lead_monomials(&self) -> Result<Vec<fpcore::Monomial>, GbError> {
        Ok(self
            .groebner_basis()?
            .iter()
            .map(|g| *g.lead_mono().expect("basis elements are nonzero"))
            .collect())
    }

    /// Hilbert series of `R/I`, cached.
    pub fn hilbert_series(&self) -> Result<&HilbertSeries, GbError> {
        if let Some(s) = self.series.get() {
            return Ok(s);
        }
        let leads = self.lead_monomials()?;
        let series = HilbertSeries::of_quotient(self.ring(), &leads);
        Ok(self.series.get_or_init(|| series))
    }

    /// Dimension, degree, genera, and Hilbert polynomial of `Proj(R/I)`.
    pub fn hilbert_data(&self) -> Result<HilbertData, GbError> {
        Ok(self.hilbert_series()?.data())
    }

    /// Krull dimension of the affine cone `Spec(R/I)`; −1 for the unit ideal.
    pub fn krull_dim(&self) -> Result<i64, GbError> {
        Ok(self.hilbert_series()?.krull_dim())
    }
}
