//! Machine-readable reports: a versioned JSON document per invocation, plus
//! a CSV projection of the verification grid.
//!
//! Result sections are deterministic byte for byte across identical
//! invocations; wall-clock timings live in their own section so diffs of two
//! runs only touch the timing block.

use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: &str = "1.0";

/// Formats a value with 12 significant digits, the precision eigenvalues are
/// reported at.
pub fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub results: Results,
    pub timings_ms: BTreeMap<String, u128>,
}

impl Report {
    pub fn new(command: &str, params: BTreeMap<String, String>, results: Results) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            params,
            results,
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn with_timing(mut self, phase: &str, ms: u128) -> Self {
        self.timings_ms.insert(phase.to_string(), ms);
        self
    }

    /// The whole report as pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Just the results section, compact; the determinism contract covers
    /// exactly these bytes.
    pub fn results_json(&self) -> String {
        serde_json::to_string(&self.results).expect("results serialize")
    }
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Results {
    Spectrum(Vec<SpectrumRecord>),
    Verify(Vec<VerifyRecord>),
    Claims(Vec<ClaimsRecord>),
}

/// One eigenvalue with the residual of its computed eigenpair.
#[derive(Debug, Serialize)]
pub struct EigenEntry {
    pub value: String,
    pub residual: String,
}

#[derive(Debug, Serialize)]
pub struct SpectrumRecord {
    pub n: usize,
    pub edge_count: usize,
    pub complemented: bool,
    pub connected: bool,
    pub spectral_radius: String,
    pub least_value: String,
    pub least_vector: Vec<String>,
    pub eigenvalues: Vec<EigenEntry>,
}

#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub n: usize,
    pub kappa: usize,
    pub class_size: u64,
    pub min_value: String,
    pub predicted: String,
    pub verdict: String,
    pub witness_count: usize,
    pub witnesses_graph6: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ClaimVerdicts {
    pub two_components: String,
    pub sign_side_cliques: String,
    pub crossing_matching: String,
    pub matching_plus_join: String,
}

#[derive(Debug, Serialize)]
pub struct ClaimsRecord {
    pub graph6: String,
    pub n: usize,
    pub kappa: usize,
    pub n1: usize,
    pub n2: usize,
    pub degenerate: bool,
    pub least_gap: String,
    pub component_count: usize,
    pub vertex_cut: Vec<usize>,
    pub v_plus: Vec<usize>,
    pub v_minus: Vec<usize>,
    pub claims: ClaimVerdicts,
}

/// CSV projection of the verification grid.
pub fn verify_csv(rows: &[VerifyRecord]) -> String {
    let mut out = String::from("n,kappa,class_size,min_value,predicted,verdict,witness_count\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n, r.kappa, r.class_size, r.min_value, r.predicted, r.verdict, r.witness_count
        ));
    }
    out
}
