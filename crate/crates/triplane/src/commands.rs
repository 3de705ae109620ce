//! The file-driven subcommands (analyze, hilbert, invariants) and the
//! plain-text rendering of every command's output.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use fpcore::json::{poly_to_repr, IdealFile, MatrixFile, MatrixMetadata, RingDescriptor};
use fpcore::Rng;
use groebner::Ideal;
use invariants::{
    bronowski_check, chern_and_scroll, invariant_table, ramification_numbers,
    type_vii_enumerate, BronowskiVerdict,
};
use serde::Serialize;
use steiner::{
    is_locally_free, section_counts, sheaf_sections, splitting_type, sym_power_module,
    unstable_lines, unstable_locus_is_consistent, veronese_rank, IntendedAlpha,
    LineInDualPlane, LineSearch, SteinerPresentation,
};

use crate::report::{ConstructionReport, SweepReport};

/// Lines sampled for the generic splitting type during analysis.
const SPLITTING_SAMPLES: usize = 5;

// ---------------------------------------------------------------- invariants

#[derive(Debug, Clone, Serialize)]
pub struct InvariantRow {
    pub b: i64,
    pub h: i64,
    pub k2: i64,
    pub sectional_genus: i64,
    pub branch_degree: i64,
    pub cusp_count: i64,
    pub classical_bound_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RamificationDetail {
    pub r2: i64,
    pub rr0: i64,
    pub r02: i64,
    pub kr: i64,
    pub hr: i64,
    pub kh: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantDetail {
    pub row: InvariantRow,
    pub ramification: RamificationDetail,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chern_and_scroll: Option<(i64, i64, i64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseRow {
    pub label: String,
    pub alpha1: i64,
    pub alpha2: i64,
    pub k2_x2: i64,
    pub constructed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExclusionRow {
    pub alpha1: i64,
    pub alpha2: i64,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub rows: Vec<InvariantRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<InvariantDetail>,
    pub type_vii_cases: Vec<CaseRow>,
    pub type_vii_excluded: Vec<ExclusionRow>,
}

fn row_for(b: i64) -> Result<InvariantRow> {
    let t = invariant_table(b)?;
    let classical = matches!(bronowski_check(b, t.h)?, BronowskiVerdict::ClassicalOk);
    Ok(InvariantRow {
        b,
        h: t.h,
        k2: t.k2,
        sectional_genus: t.sectional_genus,
        branch_degree: t.branch_degree(),
        cusp_count: t.cusp_count(),
        classical_bound_holds: classical,
    })
}

pub fn invariants_report(b: Option<i64>) -> Result<InvariantsReport> {
    let rows = (2..=13).map(row_for).collect::<Result<Vec<_>>>()?;
    let detail = match b {
        None => None,
        Some(b) => {
            let row = row_for(b)?;
            let r = ramification_numbers(b, row.h);
            Some(InvariantDetail {
                ramification: RamificationDetail {
                    r2: r.r2,
                    rr0: r.rr0,
                    r02: r.r02,
                    kr: r.kr,
                    hr: r.hr,
                    kh: r.kh,
                },
                chern_and_scroll: chern_and_scroll(b).ok(),
                row,
            })
        }
    };
    let e = type_vii_enumerate();
    let type_vii_cases = e
        .cases
        .iter()
        .map(|c| CaseRow {
            label: c.label.clone(),
            alpha1: c.alpha1,
            alpha2: c.alpha2,
            k2_x2: c.k2_x2(),
            constructed: c.exists_constructed,
        })
        .collect();
    let type_vii_excluded = e
        .excluded
        .iter()
        .map(|x| ExclusionRow { alpha1: x.alpha1, alpha2: x.alpha2, reason: x.reason.to_string() })
        .collect();
    Ok(InvariantsReport { rows, detail, type_vii_cases, type_vii_excluded })
}

pub fn invariants_text(r: &InvariantsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>3} {:>5} {:>5} {:>4} {:>6} {:>6}  3h<=b^2", "b", "h", "K^2", "g", "2b", "3h");
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{:>3} {:>5} {:>5} {:>4} {:>6} {:>6}  {}",
            row.b,
            row.h,
            row.k2,
            row.sectional_genus,
            row.branch_degree,
            row.cusp_count,
            if row.classical_bound_holds { "yes" } else { "no" }
        );
    }
    if let Some(d) = &r.detail {
        let _ = writeln!(out);
        let _ = writeln!(out, "b = {}", d.row.b);
        let _ = writeln!(
            out,
            "  ramification: R^2 = {}, R.R0 = {}, R0^2 = {}, K.R = {}, H.R = {}, K.H = {}",
            d.ramification.r2,
            d.ramification.rr0,
            d.ramification.r02,
            d.ramification.kr,
            d.ramification.hr,
            d.ramification.kh
        );
        if let Some((c1, c2, scroll)) = d.chern_and_scroll {
            let _ = writeln!(
                out,
                "  steiner bundle: c1 = {c1}, c2 = {c2}; scroll degree in P^5 = {scroll}"
            );
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "type VII sub-cases (b = 8):");
    for c in &r.type_vii_cases {
        let _ = writeln!(
            out,
            "  {:<8} alpha = ({}, {:>2})  K^2(X2) = {:>2}  {}",
            c.label,
            c.alpha1,
            c.alpha2,
            c.k2_x2,
            if c.constructed { "constructed" } else { "open" }
        );
    }
    let _ = writeln!(out, "excluded pairs:");
    for x in &r.type_vii_excluded {
        let _ = writeln!(out, "  ({}, {:>2})  {}", x.alpha1, x.alpha2, x.reason);
    }
    out
}

// ------------------------------------------------------------------- analyze

#[derive(Debug, Clone, Serialize)]
pub struct SectionProfile {
    pub h0_f_minus_one: i64,
    pub h0_f: i64,
    pub h1_f_minus_two: i64,
    pub steiner_profile: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SymSections {
    pub twist: i64,
    pub h0_sym2: i64,
    pub h0_sym3: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExhaustiveLines {
    pub unstable_count: usize,
    pub lines: Vec<[u32; 3]>,
    pub veronese_rank: usize,
    pub on_single_conic: bool,
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub b: u32,
    pub prime: u32,
    pub rows: usize,
    pub cols: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intended_alpha: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub locally_free: bool,
    pub sections: SectionProfile,
    /// Splitting types on a few random lines, most balanced first.
    pub sampled_splittings: Vec<(i64, i64)>,
    pub generically_balanced: bool,
    pub sym_sections: SymSections,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive: Option<ExhaustiveLines>,
}

fn random_line(p: &SteinerPresentation, rng: &mut Rng) -> LineInDualPlane {
    let modulus = p.ring().modulus();
    loop {
        let coeffs = [rng.uniform(modulus), rng.uniform(modulus), rng.uniform(modulus)];
        if coeffs.iter().any(|&c| c != 0) {
            return LineInDualPlane::new(p.ring().field(), coeffs);
        }
    }
}

pub fn analyze_matrix(path: &Path, exhaustive: bool, seed: u64) -> Result<AnalyzeReport> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read matrix file {}", path.display()))?;
    let file: MatrixFile =
        serde_json::from_str(&text).context("matrix file is not valid JSON")?;
    let (ring, matrix) = file.load().context("matrix file fails validation")?;
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let b = match file.metadata.b {
        Some(b) => b,
        None => rows as u32 + 2,
    };
    let intended = match file.metadata.intended_alpha {
        Some(a) => IntendedAlpha::Count(a),
        None => IntendedAlpha::Schwarzenberger,
    };
    let p = SteinerPresentation::from_parts(
        &ring,
        b,
        matrix,
        intended,
        file.metadata.seed.unwrap_or(0),
        Vec::new(),
    )
    .context("the matrix is not a Steiner presentation")?;

    let locally_free = is_locally_free(&p)?;
    let counts = section_counts(&p)?;
    let sections = SectionProfile {
        h0_f_minus_one: counts.h0_twist_minus_one,
        h0_f: counts.h0,
        h1_f_minus_two: counts.h1_twist_minus_two,
        steiner_profile: counts.matches_steiner(b),
    };

    let mut rng = Rng::new(seed);
    let mut sampled = Vec::with_capacity(SPLITTING_SAMPLES);
    for _ in 0..SPLITTING_SAMPLES {
        let line = random_line(&p, &mut rng);
        let t = splitting_type(&p, &line)?;
        sampled.push((t.0, t.1));
    }
    let c1 = p.c1();
    let balanced = (c1 / 2, c1 - c1 / 2);
    let generically_balanced = sampled.iter().all(|&t| t == balanced);

    let twist = 6 - b as i64;
    let sym_sections = SymSections {
        twist,
        h0_sym2: sheaf_sections(&sym_power_module(&p, 2)?, twist)?,
        h0_sym3: sheaf_sections(&sym_power_module(&p, 3)?, twist)?,
    };

    let exhaustive = if exhaustive {
        let found = unstable_lines(&p, LineSearch::Exhaustive)?;
        let rank = veronese_rank(ring.field(), &found);
        Some(ExhaustiveLines {
            unstable_count: found.len(),
            lines: found.iter().map(|l| l.coeffs()).collect(),
            veronese_rank: rank,
            on_single_conic: rank <= 5,
            consistent: unstable_locus_is_consistent(&p, &found),
        })
    } else {
        None
    };

    Ok(AnalyzeReport {
        b,
        prime: ring.modulus(),
        rows,
        cols,
        intended_alpha: file.metadata.intended_alpha,
        seed: file.metadata.seed,
        locally_free,
        sections,
        sampled_splittings: sampled,
        generically_balanced,
        sym_sections,
        exhaustive,
    })
}

pub fn analyze_text(r: &AnalyzeReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}x{} matrix of linear forms over F_{} (b = {})",
        r.rows, r.cols, r.prime, r.b
    );
    if let Some(a) = r.intended_alpha {
        let _ = writeln!(out, "intended unstable lines: {a}");
    }
    let _ = writeln!(out, "locally free cokernel: {}", r.locally_free);
    let _ = writeln!(
        out,
        "sections: h0(F(-1)) = {}, h0(F) = {}, h1(F(-2)) = {}  (Steiner profile: {})",
        r.sections.h0_f_minus_one, r.sections.h0_f, r.sections.h1_f_minus_two,
        r.sections.steiner_profile
    );
    let splits: Vec<String> =
        r.sampled_splittings.iter().map(|(a, b)| format!("({a},{b})")).collect();
    let _ = writeln!(
        out,
        "splitting on {} random lines: {}  (generically balanced: {})",
        splits.len(),
        splits.join(" "),
        r.generically_balanced
    );
    let _ = writeln!(
        out,
        "symmetric powers: h0(S^2 F({t})) = {}, h0(S^3 F({t})) = {}",
        r.sym_sections.h0_sym2,
        r.sym_sections.h0_sym3,
        t = r.sym_sections.twist
    );
    if let Some(e) = &r.exhaustive {
        let _ = writeln!(
            out,
            "exhaustive scan: {} unstable lines, Veronese rank {}, on a single conic: {}, consistent: {}",
            e.unstable_count, e.veronese_rank, e.on_single_conic, e.consistent
        );
        for l in &e.lines {
            let _ = writeln!(out, "  line [{}, {}, {}]", l[0], l[1], l[2]);
        }
    }
    out
}

// ------------------------------------------------------------------- hilbert

#[derive(Debug, Clone, Serialize)]
pub struct HilbertReport {
    pub prime: u32,
    pub variables: Vec<String>,
    pub generators: usize,
    pub dim: i64,
    pub degree: i64,
    pub genera: Vec<i64>,
    pub chi: i64,
    /// Coefficients (c, j) of the Hilbert polynomial Σ c·C(d+j, j).
    pub hilbert_polynomial: Vec<(i64, i64)>,
}

pub fn hilbert_of_ideal(path: &Path) -> Result<HilbertReport> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read ideal file {}", path.display()))?;
    let file: IdealFile = serde_json::from_str(&text).context("ideal file is not valid JSON")?;
    let (ring, gens) = file.load().context("ideal file fails validation")?;
    let ideal = Ideal::new(&ring, gens);
    let hd = ideal.hilbert_data().context("Hilbert series computation failed")?;
    Ok(HilbertReport {
        prime: ring.modulus(),
        variables: ring.vars().to_vec(),
        generators: ideal.gens().len(),
        dim: hd.dim,
        degree: hd.degree,
        genera: hd.genera.clone(),
        chi: hd.chi(),
        hilbert_polynomial: hd.hilbert_polynomial.clone(),
    })
}

pub fn hilbert_text(r: &HilbertReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "ideal with {} generators in F_{}[{}]",
        r.generators,
        r.prime,
        r.variables.join(", ")
    );
    let _ = writeln!(
        out,
        "cone dim = {}, degree = {}, genera = {:?}, chi = {}",
        r.dim, r.degree, r.genera, r.chi
    );
    let terms: Vec<String> = r
        .hilbert_polynomial
        .iter()
        .map(|(c, j)| format!("{c}*C(d+{j},{j})"))
        .collect();
    let _ = writeln!(out, "hilbert polynomial: {}", terms.join(" + "));
    out
}

// ----------------------------------------------------- construct / sweep text

/// Writes the stage-1 matrix of a finished construction as a matrix file.
/// Package a presentation matrix, with enough metadata to rebuild it,
/// into the interchange format `analyze` reads back.
pub fn presentation_matrix_file(p: &SteinerPresentation) -> MatrixFile {
    let m = p.matrix();
    let (intended_alpha, seed) = match p.intended_alpha() {
        IntendedAlpha::Count(a) => (Some(a), Some(p.seed())),
        IntendedAlpha::Schwarzenberger => (None, None),
    };
    MatrixFile {
        ring: RingDescriptor::from_ring(p.ring()),
        rows: m.len(),
        cols: m.first().map_or(0, Vec::len),
        entries: m.iter().map(|row| row.iter().map(poly_to_repr).collect()).collect(),
        row_shifts: None,
        col_shifts: None,
        metadata: MatrixMetadata {
            b: Some(p.b()),
            intended_alpha,
            seed,
            prime: Some(p.ring().modulus()),
        },
    }
}

pub fn save_presentation_matrix(p: &SteinerPresentation, path: &Path) -> Result<()> {
    let json =
        serde_json::to_string_pretty(&presentation_matrix_file(p)).context("matrix serializes")?;
    std::fs::write(path, json)
        .with_context(|| format!("cannot write matrix file {}", path.display()))?;
    Ok(())
}

pub fn construct_text(r: &ConstructionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "construct b = {}, alpha1 = {}, prime = {}, seed = {}",
        r.inputs.b, r.inputs.alpha1, r.inputs.prime, r.inputs.seed
    );
    for s in &r.stages {
        let note = s.note.as_deref().unwrap_or("");
        let _ = writeln!(
            out,
            "  stage {:>2}  {:<26} {:<8} {:>7} ms  {}",
            s.index, s.name, s.status, s.millis, note
        );
    }
    for line in &r.retry_log {
        let _ = writeln!(out, "  retry: {line}");
    }
    let res = &r.results;
    if let Some((d, deg)) = res.sing_y_residual {
        let _ = writeln!(out, "scroll double points: (dim, degree) = ({d}, {deg})");
    }
    if let Some(x1) = &res.x1 {
        let _ = writeln!(
            out,
            "X1: (dim, degree, genera) = ({}, {}, {:?}), smooth = {}",
            x1.dim,
            x1.degree,
            x1.genera,
            res.x1_smooth.unwrap_or(false)
        );
    }
    if let Some(x2) = &res.x2 {
        let _ = writeln!(
            out,
            "X2: (dim, degree) = ({}, {}), chi(O) = {}",
            x2.dim,
            x2.degree,
            res.chi_o_x2.unwrap_or(0)
        );
    }
    if let Some((s2, s3)) = res.section_checks {
        let _ = writeln!(out, "sections: h0(S^2 F(-2)) = {s2}, h0(S^3 F(-2)) = {s3}");
    }
    if let Some(k2) = res.k2_x2 {
        let alpha2 = res
            .alpha2_derived
            .map(|a| format!(", alpha2 = {a}"))
            .unwrap_or_default();
        let label = res
            .case_label
            .as_deref()
            .map(|l| format!("  [{l}]"))
            .unwrap_or_default();
        let _ = writeln!(out, "K^2(X2) = {k2}{alpha2}{label}");
    }
    let _ = writeln!(out, "verdict: {}", verdict_word(r));
    out
}

fn verdict_word(r: &ConstructionReport) -> &'static str {
    match r.verdict {
        crate::report::Verdict::Pass => "PASS",
        crate::report::Verdict::Fail => "FAIL",
        crate::report::Verdict::Unverified => "UNVERIFIED",
    }
}

pub fn sweep_text(r: &SweepReport) -> String {
    let mut out = String::new();
    let alphas: Vec<u32> = (1..r.b).collect();
    let header: Vec<String> = alphas.iter().map(|a| format!("{a:>4}")).collect();
    let _ = writeln!(out, "K^2(X2) by alpha1:            {}", header.join(""));
    if r.b == 8 {
        let e = type_vii_enumerate();
        let expected: Vec<String> = alphas
            .iter()
            .map(|&a| {
                e.constructed_case(a as i64)
                    .map(|c| format!("{:>4}", c.k2_x2()))
                    .unwrap_or_else(|| "   ?".to_string())
            })
            .collect();
        let _ = writeln!(out, "expected:                     {}", expected.join(""));
    }
    for col in &r.columns {
        let cells: Vec<String> = col
            .k2
            .iter()
            .map(|k| k.map(|v| format!("{v:>4}")).unwrap_or_else(|| "   x".to_string()))
            .collect();
        let _ = writeln!(
            out,
            "prime {:>6}, seed {:>3}:       {}",
            col.prime,
            col.seed,
            cells.join("")
        );
    }
    let word = match r.verdict {
        crate::report::Verdict::Pass => "PASS",
        crate::report::Verdict::Fail => "FAIL",
        crate::report::Verdict::Unverified => "UNVERIFIED",
    };
    let _ = writeln!(out, "verdict: {word}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_report_matches_the_closed_forms() {
        let r = invariants_report(Some(8)).unwrap();
        assert_eq!(r.rows.len(), 12);
        let row8 = r.rows.iter().find(|row| row.b == 8).unwrap();
        assert_eq!((row8.h, row8.k2, row8.sectional_genus), (22, -7, 6));
        assert!(!row8.classical_bound_holds);
        let d = r.detail.unwrap();
        assert_eq!(d.chern_and_scroll, Some((4, 10, 6)));
        assert_eq!(r.type_vii_cases.len(), 11);
        assert_eq!(r.type_vii_excluded.len(), 8);
        let text = invariants_text(&invariants_report(None).unwrap());
        assert!(text.contains("VII.3"));
    }

    #[test]
    fn hilbert_report_round_trips_through_a_file() {
        let ring = fpcore::Ring::standard(32003, 3).unwrap();
        let gens = vec![fpcore::Polynomial::var(&ring, 0)];
        let file = IdealFile::new(&ring, &gens);
        let dir = std::env::temp_dir().join("triplane-hilbert-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("line.json");
        std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        let r = hilbert_of_ideal(&path).unwrap();
        assert_eq!((r.dim, r.degree), (2, 1));
        assert_eq!(r.chi, 1);
        assert!(hilbert_text(&r).contains("cone dim = 2"));
    }
}
