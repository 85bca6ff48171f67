//! The four subcommands: construct, spectrum, verify, claims.
//!
//! Command functions are plain functions over argument structs so the test
//! suite can drive them without spawning processes. Exit-code policy: 0 for
//! success, 1 when verification finds a violation, 2 for usage and parse
//! errors.

use crate::format::{self, GraphFormat};
use crate::report::{
    sig12, ClaimVerdicts, ClaimsRecord, EigenEntry, Report, Results, SpectrumRecord, VerifyRecord,
};
use clap::Args;
use spectral_kit_core::extremal::{self, Family};
use spectral_kit_core::graph::Graph;
use spectral_kit_core::oracle::{self, ClaimReport, SearchOptions, SearchResult, Verdict};
use spectral_kit_core::spectra;
use std::collections::BTreeMap;
use std::time::Instant;
use thiserror::Error;

/// Environment variable that overrides the 1e-8 verdict tolerance. Intended
/// for testing only.
pub const TOLERANCE_ENV: &str = "SPECTRAL_KIT_TOL";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
}

impl From<extremal::ExtremalError> for CliError {
    fn from(e: extremal::ExtremalError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<oracle::OracleError> for CliError {
    fn from(e: oracle::OracleError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<format::FormatError> for CliError {
    fn from(e: format::FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    match s.to_ascii_lowercase().as_str() {
        "b1" => Ok(Family::B1),
        "b2" => Ok(Family::B2),
        "b3" => Ok(Family::B3),
        other => Err(format!("unknown family {other:?}, expected b1, b2 or b3")),
    }
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    match s.to_ascii_lowercase().as_str() {
        "edgelist" => Ok(GraphFormat::EdgeList),
        "graph6" => Ok(GraphFormat::Graph6),
        other => Err(format!(
            "unknown format {other:?}, expected edgelist or graph6"
        )),
    }
}

/// `A..B` or a single `A`.
fn parse_n_range(s: &str) -> Result<(usize, usize), String> {
    let parse_one = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| format!("cannot parse vertex count {t:?}"))
    };
    if let Some((a, b)) = s.split_once("..") {
        let lo = parse_one(a)?;
        let hi = parse_one(b)?;
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok((lo, hi))
    } else {
        let v = parse_one(s)?;
        Ok((v, v))
    }
}

fn tolerance_from_env() -> Result<f64, CliError> {
    match std::env::var(TOLERANCE_ENV) {
        Ok(raw) => raw.parse::<f64>().map_err(|_| {
            CliError::Usage(format!("{TOLERANCE_ENV} must be a float, got {raw:?}"))
        }),
        Err(_) => Ok(oracle::DEFAULT_TOLERANCE),
    }
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Family: b1, b2 or b3
    #[arg(value_parser = parse_family)]
    pub family: Family,
    pub n1: usize,
    pub n2: usize,
    pub kappa: usize,
    /// Output format
    #[arg(long, default_value = "edgelist", value_parser = parse_format)]
    pub format: GraphFormat,
    /// Write the graph here instead of stdout
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

pub struct ConstructOutput {
    pub graph_text: String,
    pub summary: String,
}

pub fn run_construct(args: &ConstructArgs) -> Result<ConstructOutput, CliError> {
    let g = match args.family {
        Family::B1 => extremal::build_b1(args.n1, args.n2, args.kappa)?,
        Family::B2 => extremal::build_b2(args.n1, args.n2, args.kappa)?,
        Family::B3 => extremal::build_b3(args.n1, args.n2, args.kappa)?,
    };
    let graph_text = format::write_graph(&g, args.format)?;
    let (measured, _) = g
        .vertex_connectivity()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let summary = format!(
        "{}({},{};{}): n={} edges={} connectivity={}",
        args.family,
        args.n1,
        args.n2,
        args.kappa,
        g.vertex_count(),
        g.edge_count(),
        measured
    );
    Ok(ConstructOutput {
        graph_text,
        summary,
    })
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// Input file with an edge list or graph6 line; `-` reads stdin
    pub input: String,
    /// Analyze the complement instead of the graph itself
    #[arg(long)]
    pub complement: bool,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

pub fn run_spectrum(args: &SpectrumArgs, input_text: &str) -> Result<Report, CliError> {
    let started = Instant::now();
    let parsed = format::parse_graph(input_text)?;
    let g = if args.complement {
        parsed.complement()
    } else {
        parsed
    };
    let a = g.adjacency_matrix();
    let (values, vectors) =
        spectra::eigen_sym_with_basis(&a).map_err(|e| CliError::Usage(e.to_string()))?;
    let eigenvalues = values
        .iter()
        .zip(&vectors)
        .map(|(&value, vector)| EigenEntry {
            value: sig12(value),
            residual: sig12(
                spectra::eigen_residual(&g, value, vector).expect("vector length matches"),
            ),
        })
        .collect();
    let spec = spectra::least_eigenpair(&g);
    let record = SpectrumRecord {
        n: g.vertex_count(),
        edge_count: g.edge_count(),
        complemented: args.complement,
        connected: g.is_connected(),
        spectral_radius: sig12(spec.spectral_radius()),
        least_value: sig12(spec.least_value),
        least_vector: spec.least_vector.iter().map(|&x| sig12(x)).collect(),
        eigenvalues,
    };
    let mut params = BTreeMap::new();
    params.insert("complement".into(), args.complement.to_string());
    Ok(
        Report::new("spectrum", params, Results::Spectrum(vec![record]))
            .with_timing("total", started.elapsed().as_millis()),
    )
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Vertex counts to sweep, as `A..B` or a single value
    #[arg(long = "n", value_parser = parse_n_range)]
    pub n_range: (usize, usize),
    /// Verify one connectivity value
    #[arg(long, conflicts_with = "all_kappa")]
    pub kappa: Option<usize>,
    /// Verify every connectivity 1..=n-2
    #[arg(long, conflicts_with = "kappa")]
    pub all_kappa: bool,
    /// Worker count for the partitioned scan
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Unlock the n = 8 sweep
    #[arg(long)]
    pub extended: bool,
    /// Collapse witness lists to one representative per isomorphism class
    #[arg(long)]
    pub dedup: bool,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
    /// Also write the grid as CSV
    #[arg(long)]
    pub csv: Option<std::path::PathBuf>,
}

pub struct VerifyOutput {
    pub report: Report,
    pub csv: String,
    pub violation: bool,
}

fn verify_record(r: &SearchResult, dedup: bool) -> VerifyRecord {
    let witnesses_graph6: Vec<String> = if dedup {
        let mut masks: Vec<u64> = r.witnesses.iter().map(oracle::canonical_mask).collect();
        masks.sort_unstable();
        masks.dedup();
        // re-encode representatives from the canonical masks
        masks
            .iter()
            .map(|&m| {
                let g = graph_from_mask(r.n, m);
                format::write_graph6(&g).expect("witness fits graph6")
            })
            .collect()
    } else {
        r.witnesses
            .iter()
            .map(|g| format::write_graph6(g).expect("witness fits graph6"))
            .collect()
    };
    VerifyRecord {
        n: r.n,
        kappa: r.kappa,
        class_size: r.class_size,
        min_value: sig12(r.min_value),
        predicted: sig12(r.predicted),
        verdict: r.verdict.to_string(),
        witness_count: r.witnesses.len(),
        witnesses_graph6,
    }
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> idx & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, &edges).expect("mask edges are valid")
}

pub fn run_verify(args: &VerifyArgs) -> Result<VerifyOutput, CliError> {
    let started = Instant::now();
    let (n_lo, n_hi) = args.n_range;
    if args.kappa.is_none() && !args.all_kappa {
        return Err(CliError::Usage(
            "pass --kappa K or --all-kappa".to_string(),
        ));
    }
    let hard_limit = if args.extended { 8 } else { 7 };
    if n_hi > hard_limit {
        return Err(CliError::Usage(format!(
            "n up to {n_hi} exceeds the exhaustive limit {hard_limit}{}",
            if args.extended {
                ""
            } else {
                " (pass --extended for n = 8)"
            }
        )));
    }
    let mut opts = SearchOptions {
        tolerance: tolerance_from_env()?,
        extended: args.extended,
        ..SearchOptions::default()
    };
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".to_string()));
        }
        opts.jobs = jobs;
    }

    let results = oracle::verify_theorems(n_lo, n_hi, args.kappa, &opts)?;
    let violation = results.iter().any(|r| r.verdict == Verdict::Violation);
    let records: Vec<VerifyRecord> = results.iter().map(|r| verify_record(r, args.dedup)).collect();
    let csv = crate::report::verify_csv(&records);

    let mut params = BTreeMap::new();
    params.insert("n".into(), format!("{n_lo}..{n_hi}"));
    params.insert(
        "kappa".into(),
        args.kappa.map_or("all".to_string(), |k| k.to_string()),
    );
    params.insert("jobs".into(), opts.jobs.to_string());
    params.insert("tolerance".into(), format!("{:e}", opts.tolerance));
    params.insert("dedup".into(), args.dedup.to_string());
    let report = Report::new("verify", params, Results::Verify(records))
        .with_timing("total", started.elapsed().as_millis());
    Ok(VerifyOutput {
        report,
        csv,
        violation,
    })
}

// ---------------------------------------------------------------------------
// claims
// ---------------------------------------------------------------------------

#[derive(Debug, Args)]
pub struct ClaimsArgs {
    /// Input file with a graph to check; `-` reads stdin
    #[arg(conflicts_with_all = ["n", "kappa"])]
    pub input: Option<String>,
    /// Check the minimizers of this class instead of a supplied graph
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub kappa: Option<usize>,
    /// Worker count for the minimizer search
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

fn claims_record(g: &Graph, report: &ClaimReport) -> ClaimsRecord {
    ClaimsRecord {
        graph6: format::write_graph6(g).expect("graph fits graph6"),
        n: report.n,
        kappa: report.kappa,
        n1: report.sign.n1,
        n2: report.sign.n2,
        degenerate: report.degenerate,
        least_gap: sig12(report.least_gap),
        component_count: report.component_count,
        vertex_cut: report.cut.vertices().to_vec(),
        v_plus: report.sign.v_plus.clone(),
        v_minus: report.sign.v_minus.clone(),
        claims: ClaimVerdicts {
            two_components: report.claims[0].to_string(),
            sign_side_cliques: report.claims[1].to_string(),
            crossing_matching: report.claims[2].to_string(),
            matching_plus_join: report.claims[3].to_string(),
        },
    }
}

pub fn run_claims(args: &ClaimsArgs, input_text: Option<&str>) -> Result<Report, CliError> {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    let graphs: Vec<Graph> = match (input_text, args.n, args.kappa) {
        (Some(text), None, None) => {
            params.insert("source".into(), "input".into());
            vec![format::parse_graph(text)?]
        }
        (None, Some(n), Some(kappa)) => {
            params.insert("source".into(), format!("minimizer({n},{kappa})"));
            let mut opts = SearchOptions {
                tolerance: tolerance_from_env()?,
                ..SearchOptions::default()
            };
            if let Some(jobs) = args.jobs {
                opts.jobs = jobs.max(1);
            }
            let result = oracle::find_minimizer_with(n, kappa, &opts)?;
            // one representative per isomorphism class keeps the report small
            let mut masks: Vec<u64> = result
                .witnesses
                .iter()
                .map(oracle::canonical_mask)
                .collect();
            masks.sort_unstable();
            masks.dedup();
            masks.iter().map(|&m| graph_from_mask(n, m)).collect()
        }
        _ => {
            return Err(CliError::Usage(
                "pass an input file, or --n N --kappa K".to_string(),
            ))
        }
    };

    let mut records = Vec::new();
    for g in &graphs {
        if !g.is_connected() {
            return Err(CliError::Usage(
                "structural claims require a connected graph".to_string(),
            ));
        }
        let claim_report = oracle::check_structural_claims(g)?;
        records.push(claims_record(g, &claim_report));
    }
    Ok(
        Report::new("claims", params, Results::Claims(records))
            .with_timing("total", started.elapsed().as_millis()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_range_parser() {
        assert_eq!(parse_n_range("4..7").unwrap(), (4, 7));
        assert_eq!(parse_n_range("6").unwrap(), (6, 6));
        assert!(parse_n_range("7..4").is_err());
        assert!(parse_n_range("x").is_err());
    }

    #[test]
    fn construct_reports_connectivity() {
        let args = ConstructArgs {
            family: Family::B1,
            n1: 4,
            n2: 3,
            kappa: 2,
            format: GraphFormat::EdgeList,
            output: None,
        };
        let out = run_construct(&args).unwrap();
        assert_eq!(out.graph_text.lines().count(), 1 + 11);
        assert!(out.summary.contains("connectivity=2"));
        assert!(out.summary.contains("edges=11"));
    }

    #[test]
    fn construct_rejects_bad_parameters() {
        let args = ConstructArgs {
            family: Family::B1,
            n1: 2,
            n2: 3,
            kappa: 2,
            format: GraphFormat::EdgeList,
            output: None,
        };
        assert!(matches!(run_construct(&args), Err(CliError::Usage(_))));
    }

    #[test]
    fn spectrum_of_k4() {
        let args = SpectrumArgs {
            input: "-".into(),
            complement: false,
            output: None,
        };
        let report = run_spectrum(&args, "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        let Results::Spectrum(records) = &report.results else {
            panic!("wrong results variant");
        };
        assert_eq!(records[0].eigenvalues[0].value, sig12(3.0));
        assert_eq!(records[0].least_value, sig12(-1.0));
    }

    #[test]
    fn spectrum_complement_of_b2_hits_closed_form() {
        let g = extremal::build_b2(5, 2, 3).unwrap();
        let text = format::write_edge_list(&g);
        let args = SpectrumArgs {
            input: "-".into(),
            complement: true,
            output: None,
        };
        let report = run_spectrum(&args, &text).unwrap();
        let Results::Spectrum(records) = &report.results else {
            panic!("wrong results variant");
        };
        assert_eq!(records[0].least_value, sig12(-(5f64.sqrt())));
    }

    #[test]
    fn verify_small_grid() {
        let args = VerifyArgs {
            n_range: (4, 5),
            kappa: None,
            all_kappa: true,
            jobs: Some(2),
            extended: false,
            dedup: true,
            output: None,
            csv: None,
        };
        let out = run_verify(&args).unwrap();
        assert!(!out.violation);
        let Results::Verify(records) = &out.report.results else {
            panic!("wrong results variant");
        };
        assert_eq!(records.len(), 5);
        assert!(records.iter().all(|r| r.verdict == "bound-tight"));
        // dedup: (4,2) has exactly two isomorphism classes of witnesses
        let r42 = records.iter().find(|r| r.n == 4 && r.kappa == 2).unwrap();
        assert_eq!(r42.witnesses_graph6.len(), 2);
        assert_eq!(r42.witness_count, 9);
        assert!(out.csv.lines().count() == 6);
    }

    #[test]
    fn verify_guards_limits() {
        let args = VerifyArgs {
            n_range: (4, 9),
            kappa: Some(2),
            all_kappa: false,
            jobs: None,
            extended: false,
            dedup: false,
            output: None,
            csv: None,
        };
        assert!(matches!(run_verify(&args), Err(CliError::Usage(_))));
    }

    #[test]
    fn claims_on_supplied_graph() {
        let g = extremal::build_b1(4, 4, 3).unwrap();
        let text = format::write_edge_list(&g);
        let args = ClaimsArgs {
            input: Some("-".into()),
            n: None,
            kappa: None,
            jobs: None,
            output: None,
        };
        let report = run_claims(&args, Some(&text)).unwrap();
        let Results::Claims(records) = &report.results else {
            panic!("wrong results variant");
        };
        assert_eq!(records[0].kappa, 3);
        assert_eq!(records[0].claims.two_components, "holds");
        assert_eq!(records[0].claims.sign_side_cliques, "holds");
        assert_eq!(records[0].claims.crossing_matching, "holds");
    }

    #[test]
    fn claims_reject_disconnected_input() {
        let args = ClaimsArgs {
            input: Some("-".into()),
            n: None,
            kappa: None,
            jobs: None,
            output: None,
        };
        let err = run_claims(&args, Some("n 4\n0 1\n2 3\n")).unwrap_err();
        assert!(err.to_string().contains("connected"));
    }
}
