//! Shared on-disk format for rings, polynomials, ideals, and matrices.
//!
//! A ring serializes as `{"prime": p, "variables": [...], "weights": [...],
//! "order": ...}` (weights and order may be omitted for the standard grading
//! and grevlex). A polynomial is a list of terms, each term
//! `[[e_0, …, e_{n−1}], coefficient]`; coefficients may be written as any
//! integers and are reduced mod p on load, so `-1` is a valid way to spell
//! `p − 1`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monomial::MAX_EXP;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("term has {got} exponents but the ring has {expected} variables")]
    WrongArity { expected: usize, got: usize },
    #[error("exponent {0} exceeds the supported cap {MAX_EXP}")]
    ExponentTooLarge(u32),
    #[error("matrix says {rows}x{cols} but row {row} has {got} entries")]
    RaggedMatrix { rows: usize, cols: usize, row: usize, got: usize },
    #[error("matrix says {rows} rows but carries {got}")]
    WrongRowCount { rows: usize, got: usize },
    #[error("shift list has {got} entries, expected {expected}")]
    WrongShiftCount { expected: usize, got: usize },
    #[error(transparent)]
    Serde(#[from] serde_json::Error),
}

fn default_weights() -> Vec<u32> {
    Vec::new()
}

fn default_order() -> MonomialOrder {
    MonomialOrder::GrevLex
}

fn is_grevlex(o: &MonomialOrder) -> bool {
    *o == MonomialOrder::GrevLex
}

fn weights_all_one(w: &Vec<u32>) -> bool {
    w.iter().all(|&x| x == 1)
}

/// Serializable description of a [`Ring`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RingDescriptor {
    pub prime: u32,
    pub variables: Vec<String>,
    #[serde(default = "default_weights", skip_serializing_if = "weights_all_one")]
    pub weights: Vec<u32>,
    #[serde(default = "default_order", skip_serializing_if = "is_grevlex")]
    pub order: MonomialOrder,
}

impl RingDescriptor {
    pub fn from_ring(ring: &Ring) -> Self {
        RingDescriptor {
            prime: ring.modulus(),
            variables: ring.vars().to_vec(),
            weights: ring.weights().to_vec(),
            order: ring.order(),
        }
    }

    pub fn to_ring(&self) -> Result<Ring, RingError> {
        let weights = if self.weights.is_empty() {
            vec![1; self.variables.len()]
        } else {
            self.weights.clone()
        };
        Ring::new(self.prime, self.variables.clone(), weights, self.order)
    }
}

/// One polynomial as a list of `[exponents, coefficient]` pairs.
pub type PolyRepr = Vec<(Vec<u32>, i64)>;

pub fn poly_to_repr(p: &Polynomial) -> PolyRepr {
    let n = p.ring().nvars();
    p.terms()
        .iter()
        .map(|t| ((0..n).map(|i| t.mono.exp(i) as u32).collect(), t.coeff as i64))
        .collect()
}

pub fn poly_from_repr(ring: &Ring, repr: &PolyRepr) -> Result<Polynomial, JsonError> {
    let mut terms = Vec::with_capacity(repr.len());
    for (exps, coeff) in repr {
        if exps.len() != ring.nvars() {
            return Err(JsonError::WrongArity { expected: ring.nvars(), got: exps.len() });
        }
        if let Some(&e) = exps.iter().find(|&&e| e > MAX_EXP as u32) {
            return Err(JsonError::ExponentTooLarge(e));
        }
        terms.push((ring.monomial(exps), ring.field().from_i64(*coeff)));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// An ideal: a ring plus generator polynomials.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealFile {
    pub ring: RingDescriptor,
    pub generators: Vec<PolyRepr>,
}

impl IdealFile {
    pub fn new(ring: &Ring, generators: &[Polynomial]) -> Self {
        IdealFile {
            ring: RingDescriptor::from_ring(ring),
            generators: generators.iter().map(poly_to_repr).collect(),
        }
    }

    pub fn load(&self) -> Result<(Ring, Vec<Polynomial>), JsonError> {
        let ring = self.ring.to_ring()?;
        let gens = self
            .generators
            .iter()
            .map(|g| poly_from_repr(&ring, g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((ring, gens))
    }
}

/// Free-form provenance attached to a stored matrix.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixMetadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intended_alpha: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u32>,
}

impl MatrixMetadata {
    pub fn is_empty(&self) -> bool {
        *self == MatrixMetadata::default()
    }
}

/// A matrix of polynomials with optional graded shifts and metadata.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub ring: RingDescriptor,
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries.
    pub entries: Vec<Vec<PolyRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_shifts: Option<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col_shifts: Option<Vec<i32>>,
    #[serde(default, skip_serializing_if = "MatrixMetadata::is_empty")]
    pub metadata: MatrixMetadata,
}

impl MatrixFile {
    /// Checks shape consistency and materializes the entries.
    pub fn load(&self) -> Result<(Ring, Vec<Vec<Polynomial>>), JsonError> {
        let ring = self.ring.to_ring()?;
        if self.entries.len() != self.rows {
            return Err(JsonError::WrongRowCount { rows: self.rows, got: self.entries.len() });
        }
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(JsonError::RaggedMatrix {
                    rows: self.rows,
                    cols: self.cols,
                    row: i,
                    got: row.len(),
                });
            }
        }
        if let Some(rs) = &self.row_shifts {
            if rs.len() != self.rows {
                return Err(JsonError::WrongShiftCount { expected: self.rows, got: rs.len() });
            }
        }
        if let Some(cs) = &self.col_shifts {
            if cs.len() != self.cols {
                return Err(JsonError::WrongShiftCount { expected: self.cols, got: cs.len() });
            }
        }
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| poly_from_repr(&ring, e)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Ok((ring, entries))
    }
}
