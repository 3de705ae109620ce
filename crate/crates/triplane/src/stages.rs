//! The staged construction of a general triple plane with b = 8: generate
//! a Steiner presentation with the prescribed unstable lines, flip it to
//! the scroll in P⁵, carve the degree-10 surface X₁ out of a cubic scroll
//! section, push it through the second adjunction map, and measure K² of
//! the image. Every random choice draws from a labeled sub-stream of the
//! root seed, so a retry of one stage never disturbs the stages before it.

use std::time::Instant;

use fpcore::{MonomialOrder, Polynomial, PrimeField, Ring, RingError, Rng, Scalar};
use groebner::{
    intersect, is_smooth_projective, mat_mul, minors, quotient, ring_map_kernel, singular_locus,
    transpose, Ideal, PolyMatrix,
};
use graded::{ext_module, hom_module, GradedModule};
use invariants::{alpha2_from_k2_x2, chern_and_scroll, type_vii_enumerate};
use serde_json::json;
use steiner::{
    fliptensor, gen_logarithmic_matrix, gen_steiner_matrix, is_locally_free, sheaf_sections,
    sym_power_module, unstable_lines, unstable_locus_is_consistent, LineSearch, SteinerError,
    SteinerPresentation,
};
use thiserror::Error;

use crate::report::{
    ConstructionReport, ReportInputs, ResultsSummary, SchemeSummary, StageRecord, Verdict,
    REPORT_VERSION,
};

/// Primes up to this bound get an automatic exhaustive unstable-line scan
/// as corroboration of the prescribed count (the line count p² + p + 1
/// stays in the low tens of thousands).
pub const EXHAUSTIVE_CORROBORATION_CAP: u32 = 101;

/// Attempts at drawing a usable cubic inside one stage-7 sub-stream.
const CUBIC_DRAWS: u32 = 32;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("b = {0} is outside 6..=8 (8 is the verified entry point; 6 and 7 are experimental)")]
    UnsupportedB(u32),
    #[error("alpha1 = {alpha1} is outside 1..={max} for b = {b}")]
    AlphaOutOfRange { alpha1: u32, max: u32, b: u32 },
    #[error("the base field needs a prime of at least 5, got {0}")]
    PrimeTooSmall(u32),
    #[error("cannot build the coordinate rings: {0}")]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub b: u32,
    pub alpha1: u32,
    pub prime: u32,
    pub seed: u64,
    pub max_retries: u32,
}

impl PipelineConfig {
    pub fn new(alpha1: u32, prime: u32, seed: u64) -> Self {
        PipelineConfig { b: 8, alpha1, prime, seed, max_retries: 3 }
    }
}

/// The algebraic objects of a finished run, for callers that want to keep
/// computing (tests, analysis) rather than just read the report.
pub struct ConstructionState {
    pub presentation: SteinerPresentation,
    pub scroll_ring: Ring,
    pub flip: PolyMatrix,
    pub scroll_ideal: Ideal,
    pub x1_ideal: Ideal,
    pub target_ring: Option<Ring>,
    pub x2_ideal: Option<Ideal>,
}

pub struct PipelineRun {
    pub report: ConstructionReport,
    pub state: Option<ConstructionState>,
}

/// A stage either failed its genericity post-check (retry with a fresh
/// sub-stream) or hit an engine error (abort with context).
enum StageProblem {
    Degenerate(String),
    Fatal(String),
}

impl StageProblem {
    fn fatal<E: std::fmt::Display>(e: E) -> StageProblem {
        StageProblem::Fatal(e.to_string())
    }

    fn message(&self) -> &str {
        match self {
            StageProblem::Degenerate(m) | StageProblem::Fatal(m) => m,
        }
    }

    fn is_degenerate(&self) -> bool {
        matches!(self, StageProblem::Degenerate(_))
    }
}

struct ReportBuilder {
    inputs: ReportInputs,
    stages: Vec<StageRecord>,
    retry_log: Vec<String>,
    results: ResultsSummary,
}

impl ReportBuilder {
    fn new(cfg: &PipelineConfig) -> Self {
        ReportBuilder {
            inputs: ReportInputs {
                b: cfg.b,
                alpha1: cfg.alpha1,
                prime: cfg.prime,
                seed: cfg.seed,
                max_retries: cfg.max_retries,
            },
            stages: Vec::new(),
            retry_log: Vec::new(),
            results: ResultsSummary::default(),
        }
    }

    /// Drops the records of a retry unit before its next attempt.
    fn rollback_from(&mut self, index: u32) {
        self.stages.retain(|s| s.index < index);
    }

    fn push(&mut self, record: StageRecord) {
        self.stages.push(record);
    }

    fn skip(&mut self, index: u32, name: &str, note: &str) {
        self.stages.push(StageRecord {
            index,
            name: name.to_string(),
            status: "skipped".to_string(),
            retries: 0,
            note: Some(note.to_string()),
            data: serde_json::Value::Null,
            millis: 0,
        });
    }

    fn log_retry(&mut self, stage: u32, name: &str, retry: u32, why: &str) {
        self.retry_log.push(format!("stage {stage} ({name}) retry {retry}: {why}"));
    }

    fn finish(self, verdict: Verdict) -> ConstructionReport {
        ConstructionReport {
            version: REPORT_VERSION,
            inputs: self.inputs,
            stages: self.stages,
            retry_log: self.retry_log,
            results: self.results,
            verdict,
        }
    }
}

/// Runs one stage body, recording its outcome and timing.
fn run_stage<T>(
    rb: &mut ReportBuilder,
    index: u32,
    name: &str,
    retries: u32,
    body: impl FnOnce() -> Result<(T, serde_json::Value), StageProblem>,
) -> Result<T, StageProblem> {
    let start = Instant::now();
    let outcome = body();
    let millis = start.elapsed().as_millis() as u64;
    match outcome {
        Ok((value, data)) => {
            rb.push(StageRecord {
                index,
                name: name.to_string(),
                status: "ok".to_string(),
                retries,
                note: None,
                data,
                millis,
            });
            Ok(value)
        }
        Err(problem) => {
            rb.push(StageRecord {
                index,
                name: name.to_string(),
                status: "failed".to_string(),
                retries,
                note: Some(problem.message().to_string()),
                data: serde_json::Value::Null,
                millis,
            });
            Err(problem)
        }
    }
}

fn named_ring(prime: u32, letter: char, n: usize) -> Result<Ring, RingError> {
    Ring::new(
        prime,
        (0..n).map(|i| format!("{letter}{i}")).collect(),
        vec![1; n],
        MonomialOrder::GrevLex,
    )
}

fn constant(ring: &Ring, c: Scalar) -> Polynomial {
    Polynomial::constant(ring, c as i64)
}

/// A scalar matrix as a polynomial matrix over `ring`.
fn scalar_matrix(ring: &Ring, entries: &[Vec<Scalar>]) -> PolyMatrix {
    entries.iter().map(|row| row.iter().map(|&c| constant(ring, c)).collect()).collect()
}

fn det3(field: &PrimeField, m: &[Vec<Scalar>]) -> Scalar {
    let term = |a: Scalar, b: Scalar, c: Scalar| field.mul(a, field.mul(b, c));
    let pos = field.add(
        field.add(term(m[0][0], m[1][1], m[2][2]), term(m[0][1], m[1][2], m[2][0])),
        term(m[0][2], m[1][0], m[2][1]),
    );
    let neg = field.add(
        field.add(term(m[0][2], m[1][1], m[2][0]), term(m[0][0], m[1][2], m[2][1])),
        term(m[0][1], m[1][0], m[2][2]),
    );
    field.sub(pos, neg)
}

fn random_scalar_rows(rng: &mut Rng, p: u32, rows: usize, cols: usize) -> Vec<Vec<Scalar>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.uniform(p)).collect()).collect()
}

fn random_invertible_3x3(field: &PrimeField, rng: &mut Rng) -> Vec<Vec<Scalar>> {
    loop {
        let m = random_scalar_rows(rng, field.modulus(), 3, 3);
        if det3(field, &m) != 0 {
            return m;
        }
    }
}

fn random_full_rank_2x3(field: &PrimeField, rng: &mut Rng) -> Vec<Vec<Scalar>> {
    loop {
        let m = random_scalar_rows(rng, field.modulus(), 2, 3);
        let minor = |i: usize, j: usize| {
            field.sub(field.mul(m[0][i], m[1][j]), field.mul(m[0][j], m[1][i]))
        };
        if minor(0, 1) != 0 || minor(0, 2) != 0 || minor(1, 2) != 0 {
            return m;
        }
    }
}

fn take_columns(m: &PolyMatrix, cols: &[usize]) -> PolyMatrix {
    m.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect()
}

/// Products `monomial · generator` spanning the degree-`d` piece of the
/// ideal generated by `gens`.
fn degree_piece_span(ring: &Ring, gens: &[Polynomial], d: u16) -> Vec<Polynomial> {
    let mut span = Vec::new();
    for g in gens {
        let Some(dg) = g.homogeneous_degree() else { continue };
        if dg > d {
            continue;
        }
        for m in ring.monomials_of_degree(d - dg) {
            span.push(g.mul_term(&m, 1));
        }
    }
    span
}

fn random_combination(ring: &Ring, span: &[Polynomial], rng: &mut Rng) -> Polynomial {
    let p = ring.modulus();
    let mut acc = Polynomial::zero(ring);
    for v in span {
        let c = rng.uniform(p);
        if c != 0 {
            acc = acc.add(&v.scale(c));
        }
    }
    acc
}

fn validate(cfg: &PipelineConfig) -> Result<(), PipelineError> {
    if !(6..=8).contains(&cfg.b) {
        return Err(PipelineError::UnsupportedB(cfg.b));
    }
    let max = cfg.b - 1;
    if cfg.alpha1 == 0 || cfg.alpha1 > max {
        return Err(PipelineError::AlphaOutOfRange { alpha1: cfg.alpha1, max, b: cfg.b });
    }
    if cfg.prime < 5 {
        return Err(PipelineError::PrimeTooSmall(cfg.prime));
    }
    Ok(())
}

struct UnitA {
    presentation: SteinerPresentation,
    flip: PolyMatrix,
    scroll_ideal: Ideal,
}

struct UnitB {
    x1_ideal: Ideal,
}

struct UnitC {
    x2_ideal: Ideal,
    chi: i64,
    k2: i64,
}

/// Stages 1–5: presentation, local freeness, tensor flip, scroll, and the
/// scroll's singular points. All randomness lives in stage 1.
fn run_unit_a(
    cfg: &PipelineConfig,
    plane_ring: &Ring,
    scroll_ring: &Ring,
    root: &Rng,
    retry: u32,
    rb: &mut ReportBuilder,
) -> Result<UnitA, StageProblem> {
    rb.rollback_from(1);
    let b = cfg.b;

    let presentation = run_stage(rb, 1, "presentation", retry, || {
        let seed1 = root.stream(1, retry as u64).next_u64();
        let built = if cfg.alpha1 == b - 1 {
            gen_logarithmic_matrix(plane_ring, b, seed1)
        } else {
            gen_steiner_matrix(plane_ring, b, cfg.alpha1, seed1)
        };
        let p = built.map_err(|e| match e {
            SteinerError::GenerationExhausted { .. } => StageProblem::Degenerate(e.to_string()),
            other => StageProblem::fatal(other),
        })?;
        let mut data = json!({
            "layout": if cfg.alpha1 == b - 1 { "logarithmic" } else { "prescribed" },
            "candidates": p.candidates().len(),
        });
        if cfg.prime <= EXHAUSTIVE_CORROBORATION_CAP {
            let found =
                unstable_lines(&p, LineSearch::Exhaustive).map_err(StageProblem::fatal)?;
            let consistent = unstable_locus_is_consistent(&p, &found);
            data["exhaustive_unstable_lines"] = json!(found.len());
            data["unstable_locus_consistent"] = json!(consistent);
        }
        Ok((p, data))
    })?;

    run_stage(rb, 2, "locally_free", retry, || {
        let free = is_locally_free(&presentation).map_err(StageProblem::fatal)?;
        if !free {
            return Err(StageProblem::Degenerate(
                "the maximal-minor locus is nonempty, so the cokernel is not locally free".into(),
            ));
        }
        Ok(((), json!({ "maximal_minor_locus_empty": true })))
    })?;
    rb.results.locally_free = Some(true);

    let flip = run_stage(rb, 3, "fliptensor", retry, || {
        let n = fliptensor(presentation.matrix(), plane_ring, scroll_ring)
            .map_err(StageProblem::fatal)?;
        let data = json!({ "rows": n.len(), "cols": n[0].len() });
        Ok((n, data))
    })?;

    let (scroll_ideal, rank_one_ideal) = run_stage(rb, 4, "scroll_ideal", retry, || {
        let iy = Ideal::new(scroll_ring, minors(scroll_ring, &flip, 3));
        let hd = iy.hilbert_data().map_err(StageProblem::fatal)?;
        let (_, _, want_degree) = chern_and_scroll(b as i64).expect("b is at least 6");
        if hd.dim != 4 || hd.degree != want_degree {
            return Err(StageProblem::Degenerate(format!(
                "scroll has (dim, degree) = ({}, {}), expected (4, {want_degree})",
                hd.dim, hd.degree
            )));
        }
        let i2y = Ideal::new(scroll_ring, minors(scroll_ring, &flip, 2));
        let data = json!({ "dim": hd.dim, "degree": hd.degree });
        Ok(((iy, i2y), data))
    })?;

    let (sing_y, residual) = run_stage(rb, 5, "scroll_singularities", retry, || {
        let sing = singular_locus(&scroll_ideal).map_err(StageProblem::fatal)?;
        let shd = sing.hilbert_data().map_err(StageProblem::fatal)?;
        let res = quotient(&sing, &rank_one_ideal).map_err(StageProblem::fatal)?;
        let rhd = res.hilbert_data().map_err(StageProblem::fatal)?;
        if b == 8 && (rhd.dim, rhd.degree) != (1, cfg.alpha1 as i64) {
            return Err(StageProblem::Degenerate(format!(
                "rank-one residual of the scroll singularities is ({}, {}), expected (1, {})",
                rhd.dim, rhd.degree, cfg.alpha1
            )));
        }
        let data = json!({
            "sing": { "dim": shd.dim, "degree": shd.degree },
            "residual": { "dim": rhd.dim, "degree": rhd.degree },
        });
        Ok((((shd.dim, shd.degree), (rhd.dim, rhd.degree)), data))
    })?;
    rb.results.sing_y = Some(sing_y);
    rb.results.sing_y_residual = Some(residual);

    Ok(UnitA { presentation, flip, scroll_ideal })
}

/// Stages 6–9: two scroll sections, a cubic through their union, the
/// residual surface X₁, and its invariant/smoothness checks. Randomness
/// lives in stages 6 and 7, on sub-streams (6, retry) and (7, retry).
fn run_unit_b(
    cfg: &PipelineConfig,
    scroll_ring: &Ring,
    root: &Rng,
    retry: u32,
    a: &UnitA,
    rb: &mut ReportBuilder,
) -> Result<UnitB, StageProblem> {
    rb.rollback_from(6);
    let b = cfg.b;
    let field = scroll_ring.field().clone();

    let (sections_ideal, cubic_span) = run_stage(rb, 6, "two_sections", retry, || {
        let mut rng = root.stream(6, retry as u64);
        let amat = random_invertible_3x3(&field, &mut rng);
        let nrandom =
            mat_mul(scroll_ring, &transpose(&a.flip), &scalar_matrix(scroll_ring, &amat));
        let n1 = take_columns(&nrandom, &[0, 1]);
        let n2 = take_columns(&nrandom, &[0, 2]);
        let is1 = Ideal::new(scroll_ring, minors(scroll_ring, &n1, 2));
        let is2 = Ideal::new(scroll_ring, minors(scroll_ring, &n2, 2));
        let i12 = intersect(&is1, &is2).map_err(StageProblem::fatal)?;
        let span = degree_piece_span(scroll_ring, i12.gens(), 3);
        if span.is_empty() {
            return Err(StageProblem::Degenerate(
                "no cubic passes through the union of the two sections".into(),
            ));
        }
        let data = json!({ "generators": i12.gens().len(), "cubic_span": span.len() });
        Ok(((i12, span), data))
    })?;

    let cubic = run_stage(rb, 7, "cubic_generator", retry, || {
        let mut rng = root.stream(7, retry as u64);
        for _ in 0..CUBIC_DRAWS {
            let c = random_combination(scroll_ring, &cubic_span, &mut rng);
            if c.is_zero() {
                continue;
            }
            if a.scroll_ideal.contains(&c).map_err(StageProblem::fatal)? {
                continue;
            }
            return Ok((c, json!({ "degree": 3 })));
        }
        Err(StageProblem::Degenerate(
            "every drawn cubic through the two sections lies on the scroll".into(),
        ))
    })?;

    let x1_ideal = run_stage(rb, 8, "residual_surface", retry, || {
        let section = a.scroll_ideal.plus_gens([cubic.clone()]);
        let ix1 = quotient(&section, &sections_ideal).map_err(StageProblem::fatal)?;
        let data = json!({ "generators": ix1.gens().len() });
        Ok((ix1, data))
    })?;

    let (x1, x1_smooth) = run_stage(rb, 9, "x1_invariants", retry, || {
        let hd = x1_ideal.hilbert_data().map_err(StageProblem::fatal)?;
        if b == 8 && (hd.dim, hd.degree, hd.genera.as_slice()) != (3, 10, &[0, 6, 9][..]) {
            return Err(StageProblem::Degenerate(format!(
                "X1 has (dim, degree, genera) = ({}, {}, {:?}), expected (3, 10, [0, 6, 9])",
                hd.dim, hd.degree, hd.genera
            )));
        }
        let smooth = is_smooth_projective(&x1_ideal).map_err(StageProblem::fatal)?;
        if b == 8 && !smooth {
            return Err(StageProblem::Degenerate("X1 has singular points".into()));
        }
        let data = json!({
            "dim": hd.dim, "degree": hd.degree, "genera": hd.genera, "smooth": smooth,
        });
        Ok(((hd, smooth), data))
    })?;
    rb.results.x1 =
        Some(SchemeSummary { dim: x1.dim, degree: x1.degree, genera: x1.genera.clone() });
    rb.results.x1_smooth = Some(x1_smooth);

    Ok(UnitB { x1_ideal })
}

/// Stages 10–11: the second adjunction map by six quadrics and the
/// canonical-module computation of K². Randomness lives in stage 10.
fn run_unit_c(
    scroll_ring: &Ring,
    target_ring: &Ring,
    root: &Rng,
    retry: u32,
    a: &UnitA,
    bstate: &UnitB,
    rb: &mut ReportBuilder,
) -> Result<UnitC, StageProblem> {
    rb.rollback_from(10);
    let field = scroll_ring.field().clone();

    let (x2_ideal, x2) = run_stage(rb, 10, "second_adjunction_kernel", retry, || {
        let mut rng = root.stream(10, retry as u64);
        let bmat = random_full_rank_2x3(&field, &mut rng);
        let bn = mat_mul(scroll_ring, &scalar_matrix(scroll_ring, &bmat), &a.flip);
        let quadrics = minors(scroll_ring, &bn, 2);
        if quadrics.iter().any(|q| q.is_zero()) {
            return Err(StageProblem::Degenerate(
                "the quadric system degenerates for this scalar choice".into(),
            ));
        }
        let ix2 = ring_map_kernel(target_ring, &bstate.x1_ideal, &quadrics)
            .map_err(StageProblem::fatal)?;
        let hd = ix2.hilbert_data().map_err(StageProblem::fatal)?;
        if hd.dim != 3 {
            return Err(StageProblem::Degenerate(format!(
                "the kernel cuts a scheme of cone dimension {}, not a surface",
                hd.dim
            )));
        }
        let data = json!({ "dim": hd.dim, "degree": hd.degree, "generators": ix2.gens().len() });
        Ok(((ix2, hd), data))
    })?;

    let (chi, k2) = run_stage(rb, 11, "canonical_square", retry, || {
        let structure = GradedModule::quotient(target_ring, x2_ideal.gens())
            .map_err(StageProblem::fatal)?;
        let chi = structure.euler_characteristic().map_err(StageProblem::fatal)?;
        if chi != 1 {
            return Err(StageProblem::Degenerate(format!(
                "chi(O_X2) = {chi}, expected 1"
            )));
        }
        let omega = ext_module(3, &structure, -6).map_err(StageProblem::fatal)?;
        let dual = hom_module(&omega, &structure).map_err(StageProblem::fatal)?;
        let k2 = dual.euler_characteristic().map_err(StageProblem::fatal)? - 1;
        let data = json!({ "chi": chi, "k2": k2 });
        Ok(((chi, k2), data))
    })?;
    rb.results.x2 =
        Some(SchemeSummary { dim: x2.dim, degree: x2.degree, genera: x2.genera.clone() });
    rb.results.chi_o_x2 = Some(chi);
    rb.results.k2_x2 = Some(k2);

    Ok(UnitC { x2_ideal, chi, k2 })
}

/// Runs one retry unit to completion, burning unit retries on degenerate
/// draws; returns the unit output, or None with the failure already
/// recorded when retries run out or an engine error strikes.
fn drive_unit<T>(
    rb: &mut ReportBuilder,
    max_retries: u32,
    first_stage: u32,
    name: &str,
    mut attempt: impl FnMut(u32, &mut ReportBuilder) -> Result<T, StageProblem>,
) -> (Option<T>, u32) {
    let mut retry = 0;
    loop {
        match attempt(retry, rb) {
            Ok(out) => return (Some(out), retry),
            Err(problem) => {
                if problem.is_degenerate() && retry < max_retries {
                    rb.log_retry(first_stage, name, retry, problem.message());
                    retry += 1;
                    continue;
                }
                return (None, retry);
            }
        }
    }
}

/// The full construction. Setup errors (bad b, alpha, prime) come back as
/// `Err`; everything else — including exhausted retries and engine
/// failures — produces a report with verdict FAIL and the failing stage
/// recorded.
pub fn construct_type_vii(cfg: &PipelineConfig) -> Result<PipelineRun, PipelineError> {
    validate(cfg)?;
    let plane_ring = Ring::standard(cfg.prime, 3)?;
    let scroll_ring = named_ring(cfg.prime, 'y', (cfg.b - 2) as usize)?;
    let root = Rng::new(cfg.seed);
    let mut rb = ReportBuilder::new(cfg);

    let (unit_a, retries_a) = drive_unit(&mut rb, cfg.max_retries, 1, "presentation", |r, rb| {
        run_unit_a(cfg, &plane_ring, &scroll_ring, &root, r, rb)
    });
    rb.results.retries_used = retries_a;
    let Some(a) = unit_a else {
        return Ok(PipelineRun { report: rb.finish(Verdict::Fail), state: None });
    };

    let (unit_b, retries_b) = drive_unit(&mut rb, cfg.max_retries, 6, "two_sections", |r, rb| {
        run_unit_b(cfg, &scroll_ring, &root, r, &a, rb)
    });
    rb.results.retries_used = retries_a + retries_b;
    let Some(bstate) = unit_b else {
        return Ok(PipelineRun { report: rb.finish(Verdict::Fail), state: None });
    };

    let mut target_ring = None;
    let mut unit_c = None;
    if cfg.b == 8 {
        let vring = named_ring(cfg.prime, 't', 6)?;
        let (out, retries_c) =
            drive_unit(&mut rb, cfg.max_retries, 10, "second_adjunction_kernel", |r, rb| {
                run_unit_c(&scroll_ring, &vring, &root, r, &a, &bstate, rb)
            });
        rb.results.retries_used = retries_a + retries_b + retries_c;
        let Some(c) = out else {
            return Ok(PipelineRun { report: rb.finish(Verdict::Fail), state: None });
        };
        rb.results.alpha2_derived = Some(alpha2_from_k2_x2(cfg.alpha1 as i64, c.k2));
        target_ring = Some(vring);
        unit_c = Some(c);
    } else {
        rb.skip(10, "second_adjunction_kernel", "the six-quadric system is specific to b = 8");
        rb.skip(11, "canonical_square", "the six-quadric system is specific to b = 8");
    }

    let section_run = run_stage(&mut rb, 12, "section_counts", 0, || {
        let s2 = sym_power_module(&a.presentation, 2)
            .and_then(|m| sheaf_sections(&m, 6 - cfg.b as i64))
            .map_err(StageProblem::fatal)?;
        let s3 = sym_power_module(&a.presentation, 3)
            .and_then(|m| sheaf_sections(&m, 6 - cfg.b as i64))
            .map_err(StageProblem::fatal)?;
        Ok(((s2, s3), json!({ "h0_s2": s2, "h0_s3": s3, "twist": 6 - cfg.b as i64 })))
    });
    let sections = match section_run {
        Ok(pair) => {
            rb.results.section_checks = Some(pair);
            Some(pair)
        }
        Err(_) => None,
    };

    let verdict = judge(cfg, &rb, unit_c.as_ref(), sections);
    if verdict == Verdict::Pass {
        rb.results.case_label = type_vii_enumerate()
            .constructed_case(cfg.alpha1 as i64)
            .map(|case| case.label.clone());
    }

    let state = ConstructionState {
        presentation: a.presentation,
        scroll_ring,
        flip: a.flip,
        scroll_ideal: a.scroll_ideal,
        x1_ideal: bstate.x1_ideal,
        target_ring,
        x2_ideal: unit_c.map(|c| c.x2_ideal),
    };
    Ok(PipelineRun { report: rb.finish(verdict), state: Some(state) })
}

/// Compares the measured record against the published expectations.
fn judge(
    cfg: &PipelineConfig,
    rb: &ReportBuilder,
    c: Option<&UnitC>,
    sections: Option<(i64, i64)>,
) -> Verdict {
    if rb.stages.iter().any(|s| s.status == "failed") {
        return Verdict::Fail;
    }
    if cfg.b != 8 {
        return Verdict::Unverified;
    }
    let Some(c) = c else { return Verdict::Fail };
    let Some(expected) = type_vii_enumerate().constructed_case(cfg.alpha1 as i64).map(|t| t.k2_x2())
    else {
        return Verdict::Fail;
    };
    let alpha = cfg.alpha1 as i64;
    let ok = rb.results.locally_free == Some(true)
        && rb.results.sing_y_residual == Some((1, alpha))
        && rb.results.x1.as_ref().is_some_and(|x| {
            (x.dim, x.degree, x.genera.as_slice()) == (3, 10, &[0, 6, 9][..])
        })
        && rb.results.x1_smooth == Some(true)
        && c.chi == 1
        && c.k2 == expected
        && sections == Some((0, alpha));
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}
