//! Steiner presentations — matrices of linear forms in three variables whose
//! cokernels are the rank-2 sheaves under study — and their generators:
//! prescribed unstable-line layouts, the logarithmic (Jacobian-syzygy) route,
//! and the banded Schwarzenberger normal form. Also the tensor flip and the
//! local-freeness test.

use fpcore::{random_linear_form, Polynomial, PrimeField, Ring, Rng, Scalar};
use graded::{subquotient, GradedError, GradedModule};
use groebner::{
    is_projectively_empty, minors, syzygies, Budget, GbError, Ideal, ModPoly, PolyMatrix,
};
use thiserror::Error;

use crate::splitting::splitting_type;

/// How many fresh draws a generator attempts before reporting failure.
pub const MAX_GENERATION_ATTEMPTS: u32 = 32;

const STREAM_STEINER: u64 = 1;
const STREAM_LOGARITHMIC: u64 = 2;

#[derive(Debug, Error)]
pub enum SteinerError {
    #[error("b = {0} is below the smallest Steiner case b = 5")]
    BTooSmall(u32),
    #[error("alpha = {alpha} exceeds the layout bound b-2 = {max}")]
    AlphaOutOfRange { alpha: u32, max: u32 },
    #[error("Steiner presentations live over 3 variables, got a ring with {0}")]
    WrongVariableCount(usize),
    #[error("matrix is {rows}x{cols}, expected {want_rows}x{want_cols}")]
    WrongShape { rows: usize, cols: usize, want_rows: usize, want_cols: usize },
    #[error("matrix entry ({row},{col}) is not a linear form")]
    NonlinearEntry { row: usize, col: usize },
    #[error("no verified locally free draw in {attempts} attempts from seed {seed}")]
    GenerationExhausted { seed: u64, attempts: u32 },
    #[error("restriction saturates to a free module of rank {rank}, not 2")]
    NonFreeRestriction { rank: usize },
    #[error("exhaustive line search is capped at prime {max}, the ring has {prime}")]
    ExhaustiveTooLarge { prime: u32, max: u32 },
    #[error("symmetric power {0} is outside the supported range 1..=3")]
    UnsupportedPower(u32),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

/// A line of the plane, stored as the point (c0:c1:c2) of the dual plane
/// with the first nonzero coordinate normalized to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LineInDualPlane {
    coeffs: [Scalar; 3],
}

impl LineInDualPlane {
    /// Normalizes the coefficient vector; panics on the zero vector.
    pub fn new(field: &PrimeField, coeffs: [Scalar; 3]) -> Self {
        let pivot = coeffs
            .iter()
            .position(|&c| c != 0)
            .expect("a line needs a nonzero coefficient");
        let inv = field.inv(coeffs[pivot]).expect("pivot is nonzero");
        LineInDualPlane { coeffs: coeffs.map(|c| field.mul(c, inv)) }
    }

    pub fn coeffs(&self) -> [Scalar; 3] {
        self.coeffs
    }

    /// Index of the first nonzero (normalized-to-1) coefficient.
    pub fn pivot(&self) -> usize {
        self.coeffs.iter().position(|&c| c != 0).unwrap()
    }

    /// The defining equation c0·x0 + c1·x1 + c2·x2 as a polynomial.
    pub fn equation(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(
            ring,
            (0..3).map(|i| (ring.var_monomial(i), self.coeffs[i])),
        )
    }

    /// Reads the line off a nonzero linear form in three variables.
    pub fn from_equation(h: &Polynomial) -> Self {
        assert_eq!(h.homogeneous_degree(), Some(1), "need a linear form");
        let ring = h.ring();
        let coeffs =
            [0, 1, 2].map(|i| h.coeff_of(&ring.var_monomial(i)));
        LineInDualPlane::new(ring.field(), coeffs)
    }
}

/// Every rational line of the plane over the ring's prime field, one
/// representative per normalized coefficient vector: p² + p + 1 lines.
pub fn all_lines(field: &PrimeField) -> Vec<LineInDualPlane> {
    let p = field.modulus();
    let mut lines = Vec::with_capacity((p as usize) * (p as usize) + p as usize + 1);
    for c1 in 0..p {
        for c2 in 0..p {
            lines.push(LineInDualPlane { coeffs: [1, c1, c2] });
        }
    }
    for c2 in 0..p {
        lines.push(LineInDualPlane { coeffs: [0, 1, c2] });
    }
    lines.push(LineInDualPlane { coeffs: [0, 0, 1] });
    lines
}

/// The degrees (a, a′) with a ≤ a′ in a rank-2 splitting O(a) ⊕ O(a′) on a
/// line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplittingType(pub i64, pub i64);

impl SplittingType {
    pub fn new(a: i64, b: i64) -> Self {
        SplittingType(a.min(b), a.max(b))
    }

    /// A line is unstable exactly when the splitting is (0, c₁).
    pub fn is_unstable(&self) -> bool {
        self.0 == 0 && self.1 > 0
    }
}

/// Which construction a presentation came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntendedAlpha {
    /// Layout with this many prescribed unstable lines (the logarithmic
    /// route records b−1 here).
    Count(u32),
    /// The banded normal form whose unstable locus is a conic.
    Schwarzenberger,
}

/// A (b−2) × (b−4) matrix of linear forms in three variables, presenting
/// the rank-2 sheaf F = coker(R(−1)^{b−4} → R^{b−2}), with the generation
/// provenance needed to reproduce and analyze it.
#[derive(Debug, Clone)]
pub struct SteinerPresentation {
    ring: Ring,
    b: u32,
    matrix: PolyMatrix,
    intended: IntendedAlpha,
    seed: u64,
    candidates: Vec<LineInDualPlane>,
}

impl SteinerPresentation {
    /// Validates the shape and linearity of a hand-built presentation.
    pub fn from_parts(
        ring: &Ring,
        b: u32,
        matrix: PolyMatrix,
        intended: IntendedAlpha,
        seed: u64,
        candidates: Vec<LineInDualPlane>,
    ) -> Result<Self, SteinerError> {
        if ring.nvars() != 3 {
            return Err(SteinerError::WrongVariableCount(ring.nvars()));
        }
        if b < 5 {
            return Err(SteinerError::BTooSmall(b));
        }
        let (want_rows, want_cols) = ((b - 2) as usize, (b - 4) as usize);
        if matrix.len() != want_rows || matrix.iter().any(|r| r.len() != want_cols) {
            return Err(SteinerError::WrongShape {
                rows: matrix.len(),
                cols: matrix.first().map_or(0, |r| r.len()),
                want_rows,
                want_cols,
            });
        }
        require_linear(&matrix)?;
        Ok(SteinerPresentation {
            ring: ring.clone(),
            b,
            matrix,
            intended,
            seed,
            candidates,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn intended_alpha(&self) -> IntendedAlpha {
        self.intended
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Lines recorded by the generator as the prescribed unstable ones.
    pub fn candidates(&self) -> &[LineInDualPlane] {
        &self.candidates
    }

    pub fn c1(&self) -> i64 {
        self.b as i64 - 4
    }

    pub fn c2(&self) -> i64 {
        let n = self.b as i64 - 3;
        n * (n - 1) / 2
    }

    /// The cokernel as a graded module: generators in degree 0, relations
    /// in degree 1.
    pub fn module(&self) -> GradedModule {
        GradedModule::new(
            &self.ring,
            vec![0; (self.b - 2) as usize],
            vec![1; (self.b - 4) as usize],
            self.matrix.clone(),
        )
        .expect("validated linear presentation is degree-compatible")
    }
}

fn require_linear(matrix: &PolyMatrix) -> Result<(), SteinerError> {
    for (i, row) in matrix.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if !entry.is_zero() && entry.homogeneous_degree() != Some(1) {
                return Err(SteinerError::NonlinearEntry { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// True exactly when the maximal minors have projectively empty vanishing
/// locus, i.e. the cokernel sheaf is locally free of rank 2.
pub fn is_locally_free(p: &SteinerPresentation) -> Result<bool, SteinerError> {
    let k = (p.b() - 4) as usize;
    let mins = minors(p.ring(), p.matrix(), k);
    Ok(is_projectively_empty(&Ideal::new(p.ring(), mins))?)
}

/// Draws the prescribed-layout matrix for `alpha` unstable lines: the first
/// `alpha` rows are (random linear form Hₖ) × (random scalar row), the rest
/// random linear forms. Redraws until the result is locally free and every
/// recorded line verifies as unstable.
pub fn gen_steiner_matrix(
    ring: &Ring,
    b: u32,
    alpha: u32,
    seed: u64,
) -> Result<SteinerPresentation, SteinerError> {
    if ring.nvars() != 3 {
        return Err(SteinerError::WrongVariableCount(ring.nvars()));
    }
    if b < 5 {
        return Err(SteinerError::BTooSmall(b));
    }
    if alpha > b - 2 {
        return Err(SteinerError::AlphaOutOfRange { alpha, max: b - 2 });
    }
    let cols = (b - 4) as usize;
    let root = Rng::new(seed);
    for attempt in 0..MAX_GENERATION_ATTEMPTS {
        let mut rng = root.stream(STREAM_STEINER, attempt as u64);
        let mut matrix: PolyMatrix = Vec::with_capacity((b - 2) as usize);
        let mut candidates = Vec::with_capacity(alpha as usize);
        for _ in 0..alpha {
            let h = random_linear_form(ring, &mut rng);
            let scalars = nonzero_scalar_row(ring, cols, &mut rng);
            matrix.push(scalars.iter().map(|&c| h.scale(c)).collect());
            candidates.push(LineInDualPlane::from_equation(&h));
        }
        for _ in alpha..b - 2 {
            matrix.push((0..cols).map(|_| random_linear_form(ring, &mut rng)).collect());
        }
        let pres = SteinerPresentation {
            ring: ring.clone(),
            b,
            matrix,
            intended: IntendedAlpha::Count(alpha),
            seed,
            candidates,
        };
        if accept_candidate_draw(&pres)? {
            return Ok(pres);
        }
    }
    Err(SteinerError::GenerationExhausted { seed, attempts: MAX_GENERATION_ATTEMPTS })
}

/// Builds the logarithmic presentation for b−1 random lines: the minimal
/// presentation of the syzygy module of the Jacobian row of their product,
/// with the grading reset to generators in degree 0. Degenerate
/// arrangements (a repeated line or three concurrent ones) are redrawn.
pub fn gen_logarithmic_matrix(
    ring: &Ring,
    b: u32,
    seed: u64,
) -> Result<SteinerPresentation, SteinerError> {
    if ring.nvars() != 3 {
        return Err(SteinerError::WrongVariableCount(ring.nvars()));
    }
    if b < 5 {
        return Err(SteinerError::BTooSmall(b));
    }
    let root = Rng::new(seed);
    for attempt in 0..MAX_GENERATION_ATTEMPTS {
        let mut rng = root.stream(STREAM_LOGARITHMIC, attempt as u64);
        let forms: Vec<Polynomial> =
            (0..b - 1).map(|_| random_linear_form(ring, &mut rng)).collect();
        if arrangement_is_degenerate(ring.field(), &forms) {
            continue;
        }
        let mut product = Polynomial::one(ring);
        for h in &forms {
            product = product.mul(h);
        }
        let jacobian_row: Vec<ModPoly> = (0..3)
            .map(|i| ModPoly::from_poly(ring, 0, &product.derivative(i)))
            .collect();
        let syz = syzygies(ring, 1, &jacobian_row, &mut Budget::default())?;
        let kernel = subquotient(ring, &[0, 0, 0], &syz, &[])?;
        let min = kernel.minimal_presentation();
        // A general arrangement yields b−2 generators in one degree and b−4
        // relations one degree up; anything else is a degenerate draw.
        if min.gen_degs().len() != (b - 2) as usize
            || min.rel_degs().len() != (b - 4) as usize
        {
            continue;
        }
        let d0 = min.gen_degs()[0];
        if min.gen_degs().iter().any(|&d| d != d0)
            || min.rel_degs().iter().any(|&d| d != d0 + 1)
        {
            continue;
        }
        let pres = SteinerPresentation {
            ring: ring.clone(),
            b,
            matrix: min.presentation().clone(),
            intended: IntendedAlpha::Count(b - 1),
            seed,
            candidates: forms.iter().map(LineInDualPlane::from_equation).collect(),
        };
        if accept_candidate_draw(&pres)? {
            return Ok(pres);
        }
    }
    Err(SteinerError::GenerationExhausted { seed, attempts: MAX_GENERATION_ATTEMPTS })
}

/// The banded normal form: entry (i,k) is x_{i−k} when 0 ≤ i−k ≤ 2, zero
/// otherwise. Its unstable locus is a conic of the dual plane rather than a
/// finite set, so no candidate lines are recorded.
pub fn gen_schwarzenberger_matrix(ring: &Ring, b: u32) -> Result<SteinerPresentation, SteinerError> {
    if ring.nvars() != 3 {
        return Err(SteinerError::WrongVariableCount(ring.nvars()));
    }
    if b < 7 {
        return Err(SteinerError::BTooSmall(b));
    }
    let matrix: PolyMatrix = (0..(b - 2) as usize)
        .map(|i| {
            (0..(b - 4) as usize)
                .map(|k| {
                    if i >= k && i - k <= 2 {
                        Polynomial::var(ring, i - k)
                    } else {
                        Polynomial::zero(ring)
                    }
                })
                .collect()
        })
        .collect();
    SteinerPresentation::from_parts(ring, b, matrix, IntendedAlpha::Schwarzenberger, 0, Vec::new())
}

/// Draw acceptance shared by the seeded generators: locally free, and every
/// recorded candidate line splits as (0, b−4).
fn accept_candidate_draw(pres: &SteinerPresentation) -> Result<bool, SteinerError> {
    if !is_locally_free(pres)? {
        return Ok(false);
    }
    for line in pres.candidates() {
        if !splitting_type(pres, line)?.is_unstable() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn nonzero_scalar_row(ring: &Ring, len: usize, rng: &mut Rng) -> Vec<Scalar> {
    loop {
        let row: Vec<Scalar> = (0..len).map(|_| rng.uniform(ring.modulus())).collect();
        if row.iter().any(|&c| c != 0) {
            return row;
        }
    }
}

/// An arrangement is degenerate when two lines coincide or three pass
/// through one point — both show up as a vanishing 3×3 coefficient
/// determinant of some triple.
fn arrangement_is_degenerate(field: &PrimeField, forms: &[Polynomial]) -> bool {
    let coeffs: Vec<[Scalar; 3]> = forms
        .iter()
        .map(|h| {
            let ring = h.ring();
            [0, 1, 2].map(|i| h.coeff_of(&ring.var_monomial(i)))
        })
        .collect();
    let n = coeffs.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if det3(field, [coeffs[a], coeffs[b], coeffs[c]]) == 0 {
                    return true;
                }
            }
        }
    }
    false
}

fn det3(field: &PrimeField, m: [[Scalar; 3]; 3]) -> Scalar {
    let minor = |r: usize, c: usize| {
        let (r0, r1) = match r {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let (c0, c1) = match c {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        field.sub(field.mul(m[r0][c0], m[r1][c1]), field.mul(m[r0][c1], m[r1][c0]))
    };
    let mut det = 0;
    for c in 0..3 {
        let term = field.mul(m[0][c], minor(0, c));
        det = if c == 1 { field.sub(det, term) } else { field.add(det, term) };
    }
    det
}

/// Rewrites each entry Σ_j a_{ijk} x_j of a matrix of linear forms as the
/// matrix over `to` with entry (j,k) = Σ_i a_{ijk} z_i, where z_i are the
/// variables of `to`, one per row of the input. Flipping twice (with the
/// rings swapped back) recovers the original coefficient tensor.
pub fn fliptensor(m: &PolyMatrix, from: &Ring, to: &Ring) -> Result<PolyMatrix, SteinerError> {
    require_linear(m)?;
    let rows = m.len();
    assert_eq!(
        to.nvars(),
        rows,
        "the target ring needs one variable per input row"
    );
    let cols = m.first().map_or(0, |r| r.len());
    let mut out: PolyMatrix =
        vec![vec![Polynomial::zero(to); cols]; from.nvars()];
    for (j, out_row) in out.iter_mut().enumerate() {
        let xj = from.var_monomial(j);
        for (k, entry) in out_row.iter_mut().enumerate() {
            let terms: Vec<_> = (0..rows)
                .filter_map(|i| {
                    let a = m[i][k].coeff_of(&xj);
                    (a != 0).then(|| (to.var_monomial(i), a))
                })
                .collect();
            *entry = Polynomial::from_terms(to, terms);
        }
    }
    Ok(out)
}
