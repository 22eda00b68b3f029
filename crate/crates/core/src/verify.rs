//! End-to-end verification of one ADE type, and the report it produces.
//!
//! A failed comparison is recorded in the report; only bad input and broken
//! internal invariants surface as errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chevalley::{build_chevalley, casimir_top_eigenvalue, split_casimir};
use crate::error::{Error, Result};
use crate::orbit_ideal::{
    cartan_monomial, cartan_pair_generators, degree2_ideal, dim_v2theta, projected_span,
    quotient_hilbert, span_in_sym2, CartanPolynomial, Mode,
};
use crate::resolution::{betti_numbers, dynkin_tree, euler_characteristic};
use crate::rootsys::{build_root_system, Family, SimpleType};
use crate::sln_oracle::oracle_quotient_dims;

pub const DEFAULT_MAX_DEGREE: u32 = 4;

/// Largest rank for which `auto` assembles the whole of `Sym²g`.
pub const FULL_MODE_MAX_RANK: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeRequest {
    Auto,
    Full,
    CartanPairs,
}

impl ModeRequest {
    pub fn resolve(self, t: SimpleType) -> Mode {
        match self {
            ModeRequest::Full => Mode::Full,
            ModeRequest::CartanPairs => Mode::CartanPairs,
            ModeRequest::Auto if t.rank() <= FULL_MODE_MAX_RANK => Mode::Full,
            ModeRequest::Auto => Mode::CartanPairs,
        }
    }
}

impl FromStr for ModeRequest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(ModeRequest::Auto),
            "full" => Ok(ModeRequest::Full),
            "cartan-pairs" => Ok(ModeRequest::CartanPairs),
            other => Err(Error::InvalidType(format!(
                "unknown mode `{other}`, expected full, cartan-pairs or auto"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: Family,
    pub rank: usize,
    pub dim_g: usize,
    pub dim_sym2: usize,
    pub dim_v2theta: usize,
    /// Computed dimension of the quadratic ideal; absent in cartan-pairs mode.
    pub ideal2_dim: Option<usize>,
    pub projected_rank: usize,
    pub expected_projected_rank: usize,
    pub quotient_hilbert: Vec<usize>,
    pub betti: Vec<usize>,
    pub poincare_coeffs: Vec<usize>,
    pub hikita_match: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_match: Option<bool>,
    pub mode: Mode,
    pub timings_ms: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.hikita_match
            && self.oracle_match != Some(false)
            && self.projected_rank == self.expected_projected_rank
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

pub fn verify(t: SimpleType, max_degree: u32, mode: ModeRequest) -> Result<VerificationReport> {
    if max_degree < 2 {
        return Err(Error::InvalidDegree(format!(
            "max_degree must be at least 2, got {max_degree}"
        )));
    }
    let mode = mode.resolve(t);
    let n = t.rank();
    let mut timings = BTreeMap::new();

    let start = Instant::now();
    let rs = build_root_system(t)?;
    timings.insert("rootsys".to_string(), elapsed_ms(start));

    let start = Instant::now();
    let lie = build_chevalley(&rs);
    let c = casimir_top_eigenvalue(&lie)?;
    let theta_sq = rs.pairing(&rs.highest_root, &rs.highest_root)?;
    if c != theta_sq {
        return Err(Error::invariant(
            "chevalley",
            format!("Casimir eigenvalue on E(θ)² is {c}, expected (θ, θ) = {theta_sq}"),
        ));
    }
    timings.insert("chevalley".to_string(), elapsed_ms(start));

    let start = Instant::now();
    let dim_v2 = dim_v2theta(&lie)?;
    let (ideal2_dim, projected) = match mode {
        Mode::Full => {
            let omega = split_casimir(&lie);
            let ideal = degree2_ideal(&lie, &omega, &c)?;
            let (_, basis) = projected_span(&lie, &ideal);
            (Some(ideal.dim()), basis)
        }
        Mode::CartanPairs => {
            let gens = cartan_pair_generators(&lie, &c);
            check_cartan_pairs(n, &gens, &c)?;
            (None, span_in_sym2(n, &gens))
        }
    };
    let hilbert = quotient_hilbert(n, &projected, max_degree)?;
    timings.insert("orbit_ideal".to_string(), elapsed_ms(start));

    let start = Instant::now();
    let tree = dynkin_tree(t)?;
    let cohomology = betti_numbers(&tree);
    let alternating =
        cohomology.betti[0] as i64 - cohomology.betti[1] as i64 + cohomology.betti[2] as i64;
    if alternating != euler_characteristic(&tree) {
        return Err(Error::invariant(
            "resolution",
            "alternating Betti sum disagrees with the Euler characteristic",
        ));
    }
    let ring = cohomology.ring_dims(max_degree);
    timings.insert("resolution".to_string(), elapsed_ms(start));

    let oracle_match = if t.family() == Family::A {
        let start = Instant::now();
        let oracle = oracle_quotient_dims(n + 1, max_degree)?;
        timings.insert("sln_oracle".to_string(), elapsed_ms(start));
        Some(oracle == hilbert)
    } else {
        None
    };

    Ok(VerificationReport {
        family: t.family(),
        rank: n,
        dim_g: lie.dim(),
        dim_sym2: lie.sym2_dim(),
        dim_v2theta: dim_v2,
        ideal2_dim,
        projected_rank: projected.len(),
        expected_projected_rank: n * (n + 1) / 2,
        hikita_match: hilbert == ring,
        quotient_hilbert: hilbert.0,
        betti: cohomology.betti,
        poincare_coeffs: cohomology.poincare,
        oracle_match,
        mode,
        timings_ms: timings,
    })
}

/// Each Cartan-pair image must be exactly `−c·h_i h_j`.
fn check_cartan_pairs(n: usize, gens: &[CartanPolynomial], c: &BigRational) -> Result<()> {
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            let expected = cartan_monomial(n, i, j).scale(&-c.clone());
            if gens[k] != expected {
                return Err(Error::invariant(
                    "orbit_ideal",
                    format!("(Ω − c)(h_{i} h_{j}) restricts to {:?}", gens[k].terms()),
                ));
            }
            k += 1;
        }
    }
    Ok(())
}

/// Runs [`verify`] for every ADE type of rank at most `max_rank`.
pub fn verify_all(
    max_rank: usize,
    max_degree: u32,
    mode: ModeRequest,
) -> Result<Vec<VerificationReport>> {
    if max_rank < 1 {
        return Err(Error::InvalidType(
            "max_rank must be at least 1".to_string(),
        ));
    }
    SimpleType::all_up_to(max_rank)
        .into_par_iter()
        .map(|t| verify(t, max_degree, mode))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn text_block(r: &VerificationReport) -> String {
    let mut rows: Vec<(&str, String)> = vec![
        ("type", format!("{}{}", r.family, r.rank)),
        ("mode", r.mode.to_string()),
        ("dim_g", r.dim_g.to_string()),
        ("dim_sym2", r.dim_sym2.to_string()),
        ("dim_v2theta", r.dim_v2theta.to_string()),
        (
            "ideal2_dim",
            r.ideal2_dim
                .map_or_else(|| "-".to_string(), |d| d.to_string()),
        ),
        (
            "projected_rank",
            format!("{} / {}", r.projected_rank, r.expected_projected_rank),
        ),
        ("quotient_hilbert", list(&r.quotient_hilbert)),
        ("betti", list(&r.betti)),
        ("poincare_coeffs", list(&r.poincare_coeffs)),
        ("grading", "H^{2d} <-> Sym^d h".to_string()),
        ("hikita_match", verdict(r.hikita_match).to_string()),
    ];
    if let Some(ok) = r.oracle_match {
        rows.push(("oracle_match", verdict(ok).to_string()));
    }
    let mut out = String::new();
    for (k, v) in rows {
        let pad = 18usize.saturating_sub(k.chars().count());
        let _ = writeln!(out, "{}{k}: {v}", " ".repeat(pad));
    }
    for (stage, ms) in &r.timings_ms {
        let label = format!("time.{stage}");
        let pad = 18usize.saturating_sub(label.chars().count());
        let _ = writeln!(out, "{}{label}: {ms} ms", " ".repeat(pad));
    }
    out
}

pub fn emit_report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text_block(r),
    }
}

#[derive(Serialize, Deserialize)]
struct ReportSet {
    reports: Vec<VerificationReport>,
}

/// Several reports: a `{"reports": [...]}` object in JSON, blank-line separated blocks in text.
pub fn emit_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => {
            let set = ReportSet {
                reports: reports.to_vec(),
            };
            let mut s = serde_json::to_string_pretty(&set).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => reports
            .iter()
            .map(text_block)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

pub fn parse_reports(json: &str) -> serde_json::Result<Vec<VerificationReport>> {
    Ok(serde_json::from_str::<ReportSet>(json)?.reports)
}
