//! Buchberger engine for submodules of a free module `R^r`.
//!
//! Elements are kept in a position-over-term order: a term in a lower
//! component beats any term in a higher one, and within a component the
//! ring's own monomial order applies. Ideals are the rank-one case.
//!
//! The pair queue uses normal selection (smallest lcm first) with the
//! Gebauer–Möller pruning criteria; the coprimality criterion is applied
//! only when both elements live entirely in one component, where the
//! polynomial proof applies. Every run is budgeted by counting lead-term
//! cancellations, so a runaway computation surfaces as a structured error
//! instead of a hang.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use fpcore::{Monomial, Polynomial, PrimeField, Ring, Scalar};
use thiserror::Error;

/// Default lead-cancellation budget for a single top-level computation.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GbError {
    #[error("computation exceeded its reduction budget of {budget} steps")]
    BudgetExceeded { budget: u64 },
}

/// Counts lead-term cancellations and fails once the allowance is spent.
#[derive(Debug)]
pub struct Budget {
    total: u64,
    left: u64,
}

impl Budget {
    pub fn new(total: u64) -> Self {
        Budget { total, left: total }
    }

    pub fn spent(&self) -> u64 {
        self.total - self.left
    }

    #[inline]
    fn spend(&mut self, n: u64) -> Result<(), GbError> {
        if self.left < n {
            return Err(GbError::BudgetExceeded { budget: self.total });
        }
        self.left -= n;
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

/// One term of a free-module element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MTerm {
    pub comp: u32,
    pub key: u128,
    pub mono: Monomial,
    pub coeff: Scalar,
}

/// Composite sort key: ascending tuples run from the leading term down.
type TupleKey = (u32, Reverse<u128>);

#[inline]
fn tkey(t: &MTerm) -> TupleKey {
    (t.comp, Reverse(t.key))
}

/// An element of `R^r`, terms sorted leading-first, no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModPoly {
    terms: Vec<MTerm>,
}

impl ModPoly {
    pub fn zero() -> Self {
        ModPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[MTerm] {
        &self.terms
    }

    pub fn lead(&self) -> Option<&MTerm> {
        self.terms.first()
    }

    /// Largest component index carrying a term, plus one.
    pub fn comp_span(&self) -> u32 {
        self.terms.iter().map(|t| t.comp + 1).max().unwrap_or(0)
    }

    /// `Some(c)` iff every term lives in component `c`.
    fn single_comp(&self) -> Option<u32> {
        let first = self.terms.first()?.comp;
        (self.terms.last().unwrap().comp == first).then_some(first)
    }

    /// Builds from unsorted raw terms, merging duplicates mod p.
    pub fn from_raw(ring: &Ring, raw: impl IntoIterator<Item = (u32, Monomial, Scalar)>) -> Self {
        let f = ring.field();
        let mut acc: BTreeMap<TupleKey, (u32, Monomial, Scalar)> = BTreeMap::new();
        for (comp, mono, coeff) in raw {
            let key = ring.key(&mono);
            let slot = acc.entry((comp, Reverse(key))).or_insert((comp, mono, 0));
            slot.2 = f.add(slot.2, coeff % f.modulus());
        }
        ModPoly {
            terms: acc
                .into_iter()
                .filter(|(_, (_, _, c))| *c != 0)
                .map(|((comp, Reverse(key)), (_, mono, coeff))| MTerm { comp, key, mono, coeff })
                .collect(),
        }
    }

    pub fn from_poly(ring: &Ring, comp: u32, p: &Polynomial) -> Self {
        debug_assert_eq!(p.ring(), ring);
        ModPoly {
            terms: p
                .terms()
                .iter()
                .map(|t| MTerm { comp, key: t.key, mono: t.mono, coeff: t.coeff })
                .collect(),
        }
    }

    /// Stacks component polynomials into one element.
    pub fn from_components(ring: &Ring, comps: &[(u32, Polynomial)]) -> Self {
        let mut raw = Vec::new();
        for (c, p) in comps {
            for t in p.terms() {
                raw.push((*c, t.mono, t.coeff));
            }
        }
        ModPoly::from_raw(ring, raw)
    }

    /// The polynomial sitting in component `c`.
    pub fn component(&self, ring: &Ring, c: u32) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .filter(|t| t.comp == c)
                .map(|t| (t.mono, t.coeff))
                .collect::<Vec<_>>(),
        )
    }

    /// All components `0..rank` as polynomials.
    pub fn components(&self, ring: &Ring, rank: u32) -> Vec<Polynomial> {
        (0..rank).map(|c| self.component(ring, c)).collect()
    }

    /// Shifts every component index down by `by` (they must all be ≥ `by`).
    pub fn shift_comps_down(&self, by: u32) -> ModPoly {
        ModPoly {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    debug_assert!(t.comp >= by);
                    MTerm { comp: t.comp - by, ..*t }
                })
                .collect(),
        }
    }

    pub fn scale(&self, field: &PrimeField, c: Scalar) -> ModPoly {
        if c == 0 {
            return ModPoly::zero();
        }
        ModPoly {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm { coeff: field.mul(t.coeff, c), ..*t })
                .collect(),
        }
    }

    pub fn monic(&self, field: &PrimeField) -> ModPoly {
        match self.lead() {
            None | Some(MTerm { coeff: 1, .. }) => self.clone(),
            Some(t) => self.scale(field, field.inv(t.coeff).expect("nonzero lead")),
        }
    }

    /// Multiplies by the term `c·x^m`.
    pub fn times_term(&self, ring: &Ring, mono: &Monomial, c: Scalar) -> ModPoly {
        let field = ring.field();
        if c == 0 {
            return ModPoly::zero();
        }
        ModPoly {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let m = t.mono.mul(mono);
                    MTerm { comp: t.comp, key: ring.key(&m), mono: m, coeff: field.mul(t.coeff, c) }
                })
                .collect(),
        }
    }

    /// Merge subtraction `self − other`.
    pub fn sub(&self, field: &PrimeField, other: &ModPoly) -> ModPoly {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match tkey(a).cmp(&tkey(b)) {
                std::cmp::Ordering::Less => {
                    terms.push(*a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push(MTerm { coeff: field.neg(b.coeff), ..*b });
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.sub(a.coeff, b.coeff);
                    if c != 0 {
                        terms.push(MTerm { coeff: c, ..*a });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        for b in &other.terms[j..] {
            terms.push(MTerm { coeff: field.neg(b.coeff), ..*b });
        }
        ModPoly { terms }
    }
}

/// Reducer lookup: basis indices grouped by lead component.
struct ReducerIndex {
    by_comp: HashMap<u32, Vec<usize>>,
}

impl ReducerIndex {
    fn build(basis: &[ModPoly]) -> Self {
        let mut by_comp: HashMap<u32, Vec<usize>> = HashMap::new();
        for (i, g) in basis.iter().enumerate() {
            if let Some(lt) = g.lead() {
                by_comp.entry(lt.comp).or_default().push(i);
            }
        }
        ReducerIndex { by_comp }
    }

    fn push(&mut self, idx: usize, g: &ModPoly) {
        if let Some(lt) = g.lead() {
            self.by_comp.entry(lt.comp).or_default().push(idx);
        }
    }

    /// First basis element (in insertion order) whose lead divides the term.
    fn find(
        &self,
        basis: &[ModPoly],
        comp: u32,
        mono: &Monomial,
        skip: Option<usize>,
    ) -> Option<usize> {
        let idxs = self.by_comp.get(&comp)?;
        idxs.iter()
            .copied()
            .find(|&i| Some(i) != skip && basis[i].lead().unwrap().mono.divides(mono))
    }
}

fn normal_form_indexed(
    ring: &Ring,
    f: &ModPoly,
    basis: &[ModPoly],
    index: &ReducerIndex,
    skip: Option<usize>,
    budget: &mut Budget,
) -> Result<ModPoly, GbError> {
    let field = ring.field();
    let mut work: BTreeMap<TupleKey, (Monomial, Scalar)> = f
        .terms
        .iter()
        .map(|t| (tkey(t), (t.mono, t.coeff)))
        .collect();
    let mut out: Vec<MTerm> = Vec::new();
    while let Some((&(comp, Reverse(key)), &(mono, coeff))) = work.first_key_value() {
        work.pop_first();
        match index.find(basis, comp, &mono, skip) {
            None => out.push(MTerm { comp, key, mono, coeff }),
            Some(gi) => {
                budget.spend(1)?;
                let g = &basis[gi];
                let lt = g.lead().unwrap();
                let shift = mono.div(&lt.mono).unwrap();
                let c = field.mul(coeff, field.inv(lt.coeff).expect("nonzero lead"));
                for t in &g.terms[1..] {
                    let m = t.mono.mul(&shift);
                    let k = ring.key(&m);
                    let slot = work.entry((t.comp, Reverse(k))).or_insert((m, 0));
                    slot.1 = field.sub(slot.1, field.mul(c, t.coeff));
                    if slot.1 == 0 {
                        work.remove(&(t.comp, Reverse(k)));
                    }
                }
            }
        }
    }
    Ok(ModPoly { terms: out })
}

/// Fully reduces `f` modulo `basis`; the remainder has no term divisible by
/// any basis lead.
pub fn normal_form(
    ring: &Ring,
    f: &ModPoly,
    basis: &[ModPoly],
    budget: &mut Budget,
) -> Result<ModPoly, GbError> {
    let index = ReducerIndex::build(basis);
    normal_form_indexed(ring, f, basis, &index, None, budget)
}

/// Pair queue key: (weighted lcm degree, component, lcm key, i, j). Popping
/// the minimum implements normal selection deterministically.
type PairKey = (u16, u32, u128, u32, u32);

fn s_poly(ring: &Ring, f: &ModPoly, g: &ModPoly) -> ModPoly {
    let field = ring.field();
    let (ltf, ltg) = (f.lead().unwrap(), g.lead().unwrap());
    debug_assert_eq!(ltf.comp, ltg.comp);
    debug_assert_eq!((ltf.coeff, ltg.coeff), (1, 1), "basis elements are monic");
    let l = ltf.mono.lcm(&ltg.mono, ring.weights());
    let a = l.div(&ltf.mono).unwrap();
    let b = l.div(&ltg.mono).unwrap();
    f.times_term(ring, &a, 1).sub(field, &g.times_term(ring, &b, 1))
}

/// Gebauer–Möller update: prunes the pair set and installs `h` as a new
/// basis element.
fn update(
    ring: &Ring,
    basis: &mut Vec<ModPoly>,
    index: &mut ReducerIndex,
    pairs: &mut BTreeSet<PairKey>,
    h: ModPoly,
) {
    let t = *h.lead().expect("nonzero basis element");
    let h_single = h.single_comp();
    let hidx = basis.len() as u32;

    struct Cand {
        i: u32,
        lcm: Monomial,
        coprime_ok: bool,
    }
    // Group same-component candidates by their lcm monomial.
    let mut groups: BTreeMap<u128, Vec<Cand>> = BTreeMap::new();
    for (i, g) in basis.iter().enumerate() {
        let lt = g.lead().unwrap();
        if lt.comp != t.comp {
            continue;
        }
        let lcm = lt.mono.lcm(&t.mono, ring.weights());
        // The coprimality shortcut is only proven for honest polynomials.
        let coprime_ok = lt.mono.coprime(&t.mono)
            && h_single.is_some()
            && g.single_comp() == h_single;
        groups
            .entry(ring.key(&lcm))
            .or_default()
            .push(Cand { i: i as u32, lcm, coprime_ok });
    }

    // Drop any group whose lcm is properly divisible by another group's lcm.
    let reps: Vec<(u128, Monomial)> = groups.iter().map(|(k, v)| (*k, v[0].lcm)).collect();
    groups.retain(|k, v| !reps.iter().any(|(k2, m2)| k2 != k && m2.divides(&v[0].lcm)));

    // Within a group: a coprime pair certifies the whole lcm class; otherwise
    // keep one representative.
    let mut kept: Vec<(u32, Monomial)> = Vec::new();
    for cands in groups.values() {
        if cands.iter().any(|c| c.coprime_ok) {
            continue;
        }
        let best = cands.iter().min_by_key(|c| c.i).unwrap();
        kept.push((best.i, best.lcm));
    }

    // Prune old pairs now covered through `h`.
    let stale: Vec<PairKey> = pairs
        .iter()
        .filter(|&&(_, comp, lkey, i, j)| {
            if comp != t.comp {
                return false;
            }
            let li = basis[i as usize].lead().unwrap().mono;
            let lj = basis[j as usize].lead().unwrap().mono;
            let l = li.lcm(&lj, ring.weights());
            debug_assert_eq!(ring.key(&l), lkey);
            t.mono.divides(&l)
                && ring.key(&li.lcm(&t.mono, ring.weights())) != lkey
                && ring.key(&lj.lcm(&t.mono, ring.weights())) != lkey
        })
        .copied()
        .collect();
    for p in stale {
        pairs.remove(&p);
    }

    for (i, lcm) in kept {
        pairs.insert((lcm.deg(), t.comp, ring.key(&lcm), i, hidx));
    }
    index.push(basis.len(), &h);
    basis.push(h);
}

/// Minimalizes lead terms, then tail-reduces every survivor: the unique
/// reduced (monic, auto-reduced) basis, sorted leading-term ascending in
/// degree.
fn reduce_basis(
    ring: &Ring,
    mut basis: Vec<ModPoly>,
    budget: &mut Budget,
) -> Result<Vec<ModPoly>, GbError> {
    basis.sort_by_key(|f| {
        let lt = f.lead().unwrap();
        (lt.mono.deg(), lt.comp, Reverse(lt.key))
    });
    let mut kept: Vec<ModPoly> = Vec::new();
    for f in basis {
        let lt = f.lead().unwrap();
        let covered = kept
            .iter()
            .any(|k| {
                let klt = k.lead().unwrap();
                klt.comp == lt.comp && klt.mono.divides(&lt.mono)
            });
        if !covered {
            kept.push(f);
        }
    }
    let index = ReducerIndex::build(&kept);
    for i in 0..kept.len() {
        let reduced = normal_form_indexed(ring, &kept[i].clone(), &kept, &index, Some(i), budget)?;
        debug_assert_eq!(reduced.lead(), kept[i].lead());
        kept[i] = reduced;
    }
    // Canonical presentation: leads ascending, component-major.
    kept.sort_by_key(|f| {
        let lt = f.lead().unwrap();
        (lt.comp, lt.key)
    });
    Ok(kept)
}

/// Reduced Gröbner basis of the submodule generated by `input`.
pub fn module_groebner(
    ring: &Ring,
    input: &[ModPoly],
    budget: &mut Budget,
) -> Result<Vec<ModPoly>, GbError> {
    let field = ring.field();
    let mut gens: Vec<ModPoly> = input.iter().filter(|f| !f.is_zero()).cloned().collect();
    gens.sort_by_key(|f| {
        let lt = f.lead().unwrap();
        (lt.mono.deg(), lt.comp, Reverse(lt.key))
    });

    let mut basis: Vec<ModPoly> = Vec::new();
    let mut index = ReducerIndex { by_comp: HashMap::new() };
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();

    for f in gens {
        let r = normal_form_indexed(ring, &f, &basis, &index, None, budget)?;
        if !r.is_zero() {
            update(ring, &mut basis, &mut index, &mut pairs, r.monic(field));
        }
    }

    while let Some(pk) = pairs.pop_first() {
        let (_, _, _, i, j) = pk;
        let s = s_poly(ring, &basis[i as usize], &basis[j as usize]);
        let r = normal_form_indexed(ring, &s, &basis, &index, None, budget)?;
        if !r.is_zero() {
            update(ring, &mut basis, &mut index, &mut pairs, r.monic(field));
        }
    }

    reduce_basis(ring, basis, budget)
}

/// Reduced Gröbner basis of an ideal given by polynomial generators.
pub fn ideal_groebner(
    ring: &Ring,
    gens: &[Polynomial],
    budget: &mut Budget,
) -> Result<Vec<Polynomial>, GbError> {
    let cols: Vec<ModPoly> = gens.iter().map(|g| ModPoly::from_poly(ring, 0, g)).collect();
    let gb = module_groebner(ring, &cols, budget)?;
    Ok(gb.into_iter().map(|f| f.component(ring, 0)).collect())
}

/// Normal form of a polynomial modulo a polynomial basis.
pub fn poly_normal_form(
    ring: &Ring,
    f: &Polynomial,
    basis: &[Polynomial],
    budget: &mut Budget,
) -> Result<Polynomial, GbError> {
    let fm = ModPoly::from_poly(ring, 0, f);
    let bm: Vec<ModPoly> = basis.iter().map(|g| ModPoly::from_poly(ring, 0, g)).collect();
    Ok(normal_form(ring, &fm, &bm, budget)?.component(ring, 0))
}

/// Generators of the projection of `syz(cols)` onto its first `watched`
/// coordinates: each column `i < watched` is augmented with a fresh unit
/// component, a Gröbner basis of the augmented submodule is computed under
/// the component-eliminating order, and the elements supported entirely in
/// the fresh components are returned (components shifted back to
/// `0..watched`).
pub fn syzygies_watched(
    ring: &Ring,
    rank: u32,
    cols: &[ModPoly],
    watched: usize,
    budget: &mut Budget,
) -> Result<Vec<ModPoly>, GbError> {
    assert!(watched <= cols.len());
    for c in cols {
        assert!(c.comp_span() <= rank, "column sticks out of R^{rank}");
    }
    let aug: Vec<ModPoly> = cols
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut terms = v.terms.clone();
            if i < watched {
                // All original components sit below `rank`, so appending the
                // fresh unit keeps the term list sorted.
                terms.push(MTerm {
                    comp: rank + i as u32,
                    key: ring.key(&Monomial::one()),
                    mono: Monomial::one(),
                    coeff: 1,
                });
            }
            ModPoly { terms }
        })
        .collect();
    let gb = module_groebner(ring, &aug, budget)?;
    Ok(gb
        .into_iter()
        .filter(|f| f.lead().is_some_and(|t| t.comp >= rank))
        .map(|f| f.shift_comps_down(rank))
        .collect())
}

/// Generators of the full syzygy module of the given columns of `R^rank`.
pub fn syzygies(
    ring: &Ring,
    rank: u32,
    cols: &[ModPoly],
    budget: &mut Budget,
) -> Result<Vec<ModPoly>, GbError> {
    syzygies_watched(ring, rank, cols, cols.len(), budget)
}

/// The ideal of coefficients the first column takes across all vanishing
/// combinations of the columns — the workhorse behind intersections and
/// quotients.
pub fn syzygy_coordinate_zero(
    ring: &Ring,
    rank: u32,
    cols: &[ModPoly],
    budget: &mut Budget,
) -> Result<Vec<Polynomial>, GbError> {
    let syz = syzygies_watched(ring, rank, cols, 1, budget)?;
    Ok(syz.into_iter().map(|f| f.component(ring, 0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        Ring::standard(32003, 2).unwrap()
    }

    fn poly(r: &Ring, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(
            r,
            terms
                .iter()
                .map(|&(c, e)| (r.monomial(e), r.field().from_i64(c)))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn buchberger_completes_a_basis() {
        // (x² + y², xy) gains y³ and nothing else.
        let r = ring2();
        let gens = vec![
            poly(&r, &[(1, &[2, 0]), (1, &[0, 2])]),
            poly(&r, &[(1, &[1, 1])]),
        ];
        let gb = ideal_groebner(&r, &gens, &mut Budget::default()).unwrap();
        let expect = vec![
            poly(&r, &[(1, &[1, 1])]),
            poly(&r, &[(1, &[2, 0]), (1, &[0, 2])]),
            poly(&r, &[(1, &[0, 3])]),
        ];
        assert_eq!(gb, expect);
    }

    #[test]
    fn normal_form_reduces_to_zero_inside_the_ideal() {
        let r = ring2();
        let gens = vec![
            poly(&r, &[(1, &[2, 0]), (1, &[0, 2])]),
            poly(&r, &[(1, &[1, 1])]),
        ];
        let gb = ideal_groebner(&r, &gens, &mut Budget::default()).unwrap();
        // x³ = x(x² + y²) − y·xy lies inside; y² does not, since the
        // degree-2 slice of the ideal is spanned by x² + y² and xy.
        let inside = poly(&r, &[(1, &[3, 0])]);
        let outside = poly(&r, &[(1, &[0, 2])]);
        assert!(poly_normal_form(&r, &inside, &gb, &mut Budget::default())
            .unwrap()
            .is_zero());
        assert!(!poly_normal_form(&r, &outside, &gb, &mut Budget::default())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let r = ring2();
        // Reducing x³ modulo x − y takes three lead cancellations, beyond a
        // one-step budget.
        let gens = vec![
            poly(&r, &[(1, &[3, 0])]),
            poly(&r, &[(1, &[1, 0]), (-1, &[0, 1])]),
        ];
        let mut tiny = Budget::new(1);
        assert_eq!(
            ideal_groebner(&r, &gens, &mut tiny),
            Err(GbError::BudgetExceeded { budget: 1 })
        );
        assert!(ideal_groebner(&r, &gens, &mut Budget::default()).is_ok());
    }

    #[test]
    fn syzygy_of_a_koszul_pair() {
        // syz(x, y) = ⟨(y, −x)⟩.
        let r = ring2();
        let cols = vec![
            ModPoly::from_poly(&r, 0, &poly(&r, &[(1, &[1, 0])])),
            ModPoly::from_poly(&r, 0, &poly(&r, &[(1, &[0, 1])])),
        ];
        let syz = syzygies(&r, 1, &cols, &mut Budget::default()).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        let a = s.component(&r, 0);
        let b = s.component(&r, 1);
        // a·x + b·y = 0 with (a, b) a scalar multiple of (y, −x).
        let x = poly(&r, &[(1, &[1, 0])]);
        let y = poly(&r, &[(1, &[0, 1])]);
        assert!(a.mul(&x).add(&b.mul(&y)).is_zero());
        assert_eq!(a.degree(), Some(1));
    }

    #[test]
    fn module_elements_round_trip_components() {
        let r = ring2();
        let p0 = poly(&r, &[(3, &[1, 0]), (1, &[0, 0])]);
        let p1 = poly(&r, &[(1, &[0, 2])]);
        let m = ModPoly::from_components(&r, &[(0, p0.clone()), (1, p1.clone())]);
        assert_eq!(m.component(&r, 0), p0);
        assert_eq!(m.component(&r, 1), p1);
        assert_eq!(m.comp_span(), 2);
        // Lead sits in the lowest component.
        assert_eq!(m.lead().unwrap().comp, 0);
    }

    #[test]
    fn position_over_term_order_drives_reduction() {
        // In R², reducing (x, 0) + (0, anything) by the single element
        // (x, y) must cancel the component-0 lead and leave component 1.
        let r = ring2();
        let x = poly(&r, &[(1, &[1, 0])]);
        let y = poly(&r, &[(1, &[0, 1])]);
        let g = ModPoly::from_components(&r, &[(0, x.clone()), (1, y.clone())]);
        let f = ModPoly::from_components(&r, &[(0, x.clone())]);
        let nf = normal_form(&r, &f, &[g], &mut Budget::default()).unwrap();
        // f − g = (0, −y).
        assert!(nf.component(&r, 0).is_zero());
        assert_eq!(nf.component(&r, 1), y.neg());
    }
}
