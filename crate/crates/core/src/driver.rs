//! Shared front end for the CLI and the Python bindings: target resolution
//! (builtin names or ideal files), the JSON report schema, and the per-command
//! run functions.

use crate::configs::{self, Builtin, KleinStructure, PointConfiguration};
use crate::criterion::{
    self, oracle_check, prop6_check, thm_main_check, Method, Prop6Report, Verdict,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::parse::parse_poly;
use crate::poly::Ring;
use crate::resolve::{check_last_map_equivalence, resolve_power, ResolutionShape};
use crate::syzygy::hilbert_burch;
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Debug, Clone, Serialize)]
pub struct MethodResult {
    pub method: Method,
    pub contained: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiReport {
    pub power: u32,
    pub shape: ResolutionShape,
    pub last_map_equivalent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PointsReport {
    pub count: usize,
    pub points: Vec<String>,
    /// line-count histogram: multiplicity -> number of points
    pub incidence: BTreeMap<usize, usize>,
    pub multiplicity: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_count_identity: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SyzygyReport {
    pub d: u32,
    pub d0: u32,
    pub d1: u32,
    pub p_col: Vec<String>,
    pub q_col: Vec<String>,
    pub minors: Vec<String>,
    pub change_of_basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessEntry {
    pub label: String,
    pub lines: usize,
    pub witness_degree: u32,
    pub witness: String,
    pub in_symbolic: bool,
    pub in_ordinary: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub products: Vec<WitnessEntry>,
}

/// The machine-readable report emitted by every command.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub target: String,
    pub field: String,
    pub m: u32,
    pub r: u32,
    pub results: Vec<MethodResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<PointsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syzygy: Option<SyzygyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prop6: Option<Prop6Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_info: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    pub timings_ms: BTreeMap<String, u128>,
    pub engine_version: String,
}

impl Report {
    fn new(target: &str, field: Field, m: u32, r: u32) -> Report {
        Report {
            target: target.to_string(),
            field: field.to_string(),
            m,
            r,
            results: Vec::new(),
            betti: None,
            points: None,
            syzygy: None,
            prop6: None,
            witness_info: None,
            agreement: None,
            timings_ms: BTreeMap::new(),
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// How a check run ended, mapped to the process exit code by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Ok,
    /// the requested methods disagree: a correctness alarm
    Disagreement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMethod {
    Criterion,
    Oracle,
    Both,
    Prop6,
}

impl CheckMethod {
    pub fn parse(s: &str) -> Result<CheckMethod> {
        match s {
            "criterion" => Ok(CheckMethod::Criterion),
            "oracle" => Ok(CheckMethod::Oracle),
            "both" => Ok(CheckMethod::Both),
            "prop6" => Ok(CheckMethod::Prop6),
            _ => Err(Error::Parse(format!("unknown method `{s}`"))),
        }
    }
}

/// A resolved target: the ideal to examine plus configuration data when it
/// is a builtin.
pub struct ResolvedTarget {
    pub name: String,
    pub field: Field,
    pub ideal: Ideal,
    pub config: Option<PointConfiguration>,
    pub klein: Option<KleinStructure>,
}

/// Parses an ideal file: a `field: <spec>` header, then one generator per
/// line in the polynomial grammar over `x, y, z`; `#` starts a comment.
pub fn parse_ideal_file(text: &str) -> Result<(Field, Ideal)> {
    let mut field: Option<Field> = None;
    let mut gens = Vec::new();
    let mut ring: Option<Ring> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(spec) = line.strip_prefix("field:") {
            if field.is_some() {
                return Err(Error::Parse("duplicate field header".into()));
            }
            let f = Field::parse(spec.trim())?;
            ring = Some(Ring::xyz(f));
            field = Some(f);
            continue;
        }
        let ring = ring
            .as_ref()
            .ok_or_else(|| Error::Parse("generators before `field:` header".into()))?;
        gens.push(
            parse_poly(ring, line).map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?,
        );
    }
    let field = field.ok_or_else(|| Error::Parse("missing `field:` header".into()))?;
    let ring = Ring::xyz(field);
    Ok((field, Ideal::new(ring, gens)))
}

/// Resolves a builtin name (`fermat:<n>`, `klein`, `star3`) or a path to an
/// ideal file. `--field` overrides the builtin default; file targets carry
/// their own field header.
pub fn resolve_target(spec: &str, field_flag: Option<&str>) -> Result<ResolvedTarget> {
    if let Some(builtin) = Builtin::parse(spec) {
        let field = match field_flag {
            Some(f) => Field::parse(f)?,
            None => builtin.default_field().ok_or_else(|| {
                Error::Invalid(format!("no default field for `{spec}`; pass --field"))
            })?,
        };
        let (cfg, klein) = configs::build(builtin, field)?;
        return Ok(ResolvedTarget {
            name: spec.to_string(),
            field: cfg.field,
            ideal: cfg.ideal.clone(),
            config: Some(cfg),
            klein,
        });
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::Parse(format!("cannot read `{spec}`: {e}")))?;
    let (field, ideal) = parse_ideal_file(&text)?;
    Ok(ResolvedTarget {
        name: spec.to_string(),
        field,
        ideal,
        config: None,
        klein: None,
    })
}

fn verdict_result(v: &Verdict) -> MethodResult {
    MethodResult {
        method: v.method,
        contained: v.contained,
        witness: v.witness.as_ref().map(|w| w.to_string()),
        certificate: v
            .certificate
            .as_ref()
            .map(|c| c.iter().map(|p| p.to_string()).collect()),
        note: v.characteristic_note.clone(),
    }
}

/// Runs the requested containment methods. With `Both`, the verdicts must
/// agree; a disagreement is a correctness alarm reflected in the status.
/// In characteristic 3 the criterion alone errors out, while `Both`
/// degrades to the oracle verdict with an explanatory note.
pub fn run_check(
    target: &str,
    field_flag: Option<&str>,
    m: u32,
    r: u32,
    method: CheckMethod,
) -> Result<(Report, CheckStatus)> {
    let resolved = resolve_target(target, field_flag)?;
    let mut report = Report::new(&resolved.name, resolved.field, m, r);
    let char3 = resolved.field.characteristic() == 3;
    let mut status = CheckStatus::Ok;

    if matches!(method, CheckMethod::Prop6) {
        let t = Instant::now();
        let hb = hilbert_burch(&resolved.ideal)?;
        let rep = prop6_check(&hb)?;
        report
            .timings_ms
            .insert("prop6".into(), t.elapsed().as_millis());
        let conclusive = rep.condition1 && rep.condition2;
        report.results.push(MethodResult {
            method: Method::Prop6,
            contained: false,
            witness: None,
            certificate: None,
            note: Some(if conclusive {
                "both conditions hold, so the containment fails".into()
            } else {
                "inconclusive: a condition failed".into()
            }),
        });
        report.prop6 = Some(rep);
        return Ok((report, status));
    }

    let want_criterion = matches!(method, CheckMethod::Criterion | CheckMethod::Both);
    let want_oracle = matches!(method, CheckMethod::Oracle | CheckMethod::Both);

    if want_criterion {
        if (m, r) != (3, 2) {
            return Err(Error::Invalid(format!(
                "the membership criterion is implemented for (m, r) = (3, 2), not ({m}, {r})"
            )));
        }
        if char3 {
            if method == CheckMethod::Criterion {
                return Err(Error::CharacteristicThree);
            }
            report.results.push(MethodResult {
                method: Method::TheoremMain,
                contained: false,
                witness: None,
                certificate: None,
                note: Some(
                    "refused: the criterion requires characteristic != 3; oracle verdict follows"
                        .into(),
                ),
            });
        } else {
            let t = Instant::now();
            let v = thm_main_check(&resolved.ideal)?;
            report
                .timings_ms
                .insert("criterion".into(), t.elapsed().as_millis());
            report.results.push(verdict_result(&v));
        }
    }

    if want_oracle {
        let t = Instant::now();
        let v = oracle_check(&resolved.ideal, m, r)?;
        report
            .timings_ms
            .insert("oracle".into(), t.elapsed().as_millis());
        report.results.push(verdict_result(&v));
    }

    if method == CheckMethod::Both && !char3 {
        let verdicts: Vec<bool> = report.results.iter().map(|r| r.contained).collect();
        let agree = verdicts.windows(2).all(|w| w[0] == w[1]);
        report.agreement = Some(agree);
        if !agree {
            status = CheckStatus::Disagreement;
        }
    }
    Ok((report, status))
}

/// Resolution shape of `I^power` plus the last-map equivalence check.
pub fn run_resolve(target: &str, field_flag: Option<&str>, power: u32) -> Result<Report> {
    let resolved = resolve_target(target, field_flag)?;
    let mut report = Report::new(&resolved.name, resolved.field, 3, 2);
    let t = Instant::now();
    let res = resolve_power(&resolved.ideal, power)?;
    report
        .timings_ms
        .insert("resolve".into(), t.elapsed().as_millis());
    let t = Instant::now();
    let eq = check_last_map_equivalence(&resolved.ideal)?;
    report
        .timings_ms
        .insert("equivalence".into(), t.elapsed().as_millis());
    report.betti = Some(BettiReport {
        power,
        shape: res.shape,
        last_map_equivalent: eq,
    });
    Ok(report)
}

/// Hilbert-Burch data of the target.
pub fn run_syzygy(target: &str, field_flag: Option<&str>) -> Result<Report> {
    let resolved = resolve_target(target, field_flag)?;
    let mut report = Report::new(&resolved.name, resolved.field, 3, 2);
    let t = Instant::now();
    let hb = hilbert_burch(&resolved.ideal)?;
    report
        .timings_ms
        .insert("syzygy".into(), t.elapsed().as_millis());
    let field = resolved.field;
    report.syzygy = Some(SyzygyReport {
        d: hb.d,
        d0: hb.d0,
        d1: hb.d1,
        p_col: hb.p_col.iter().map(|p| p.to_string()).collect(),
        q_col: hb.q_col.iter().map(|p| p.to_string()).collect(),
        minors: hb.minors.iter().map(|p| p.to_string()).collect(),
        change_of_basis: hb
            .change_of_basis
            .iter()
            .map(|row| row.iter().map(|c| field.format_element(c)).collect())
            .collect(),
    });
    Ok(report)
}

/// Point list, incidence summary and multiplicity of a builtin target.
pub fn run_points(target: &str, field_flag: Option<&str>) -> Result<Report> {
    let resolved = resolve_target(target, field_flag)?;
    let cfg = resolved
        .config
        .as_ref()
        .ok_or_else(|| Error::Invalid("points requires a builtin configuration".into()))?;
    let mut report = Report::new(&resolved.name, resolved.field, 3, 2);
    let t = Instant::now();
    let counts = configs::incidence(cfg)?;
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &counts {
        *histogram.entry(*c).or_insert(0) += 1;
    }
    let multiplicity = cfg.ideal.multiplicity()?;
    report
        .timings_ms
        .insert("points".into(), t.elapsed().as_millis());
    let field = resolved.field;
    report.points = Some(PointsReport {
        count: cfg.points.len(),
        points: cfg
            .points
            .iter()
            .map(|p| {
                format!(
                    "({}:{}:{})",
                    field.format_element(&p[0]),
                    field.format_element(&p[1]),
                    field.format_element(&p[2])
                )
            })
            .collect(),
        incidence: histogram,
        multiplicity,
        pair_count_identity: cfg.full_singular_locus.then_some(true),
    });
    Ok(report)
}

/// The line-product witnesses: membership in the symbolic cube and the
/// ordinary square. For Fermat targets both the full `3n + 3`-line product
/// (which equals `f g h` and so always lies in `I^2`) and the `3n`-line
/// product without the coordinate lines (the actual witness) are reported.
pub fn run_witness(target: &str, field_flag: Option<&str>) -> Result<Report> {
    let resolved = resolve_target(target, field_flag)?;
    let cfg = resolved
        .config
        .as_ref()
        .ok_or_else(|| Error::Invalid("witness requires a builtin configuration".into()))?;
    let mut report = Report::new(&resolved.name, resolved.field, 3, 2);
    let t = Instant::now();
    let mut products: Vec<(String, usize, crate::poly::Polynomial)> = Vec::new();
    let all = configs::product_of_lines(cfg)?;
    let line_count = cfg.lines.as_ref().map(|l| l.len()).unwrap_or(0);
    products.push(("all lines".into(), line_count, all));
    if cfg.name.starts_with("fermat:") {
        let reduced = configs::fermat_reduced_line_product(cfg)?;
        products.push((
            "lines without the coordinate triangle".into(),
            line_count - 3,
            reduced,
        ));
    }
    let mut entries = Vec::new();
    for (label, lines, product) in products {
        let (in_symbolic, in_ordinary) = criterion::witness_check(&product, &cfg.ideal, 3, 2)?;
        entries.push(WitnessEntry {
            label,
            lines,
            witness_degree: product.homogeneous_degree().unwrap_or(0),
            witness: product.to_string(),
            in_symbolic,
            in_ordinary,
        });
    }
    report
        .timings_ms
        .insert("witness".into(), t.elapsed().as_millis());
    report.witness_info = Some(WitnessReport { products: entries });
    Ok(report)
}
