//! Exhaustive desk-scale search: enumerate every labeled connected graph
//! with prescribed connectivity, find the true minimizer of the least
//! complement eigenvalue, compare against the predicted bound, and check the
//! structural claims on the minimizers.
//!
//! Graphs on `n` vertices are walked as edge masks over the `C(n, 2)` vertex
//! pairs (pair `(i, j)` with `i < j` sits at bit `j(j-1)/2 + i`, the same
//! order graph6 uses). Cheap filters run first: edge-count and minimum-degree
//! popcounts, then a bitset traversal for connectedness, then exact
//! connectivity by max-flow with early rejection, and only class members pay
//! for an eigensolve.
//!
//! The mask space splits into contiguous ranges for parallel scans. Each
//! worker reports its local minimum and the candidates within tolerance of
//! it; the merge takes the global minimum and re-filters candidates, so the
//! result is identical for every partitioning, single-threaded included.

use crate::extremal::{self, ExtremalError};
use crate::graph::{Graph, GraphError, SplitFlow, VertexCut};
use crate::matching::{max_bipartite_matching, sign_crossing_matching};
use crate::spectra::{self, eigen_sym, SignPartition, SpectralResult};
use thiserror::Error;

/// Absolute tolerance for "attains the bound" and witness collection.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Least-eigenvalue gap under which the eigenspace is treated as degenerate
/// and structural claims are only certified for the computed vector.
pub const DEGENERACY_GAP: f64 = 1e-7;

const LABELED_LIMIT: usize = 8;
const DEDUP_LIMIT: usize = 7;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("exhaustive enumeration supports n <= {LABELED_LIMIT}, got n = {0}")]
    TooLarge(usize),
    #[error("isomorphism dedup supports n <= {DEDUP_LIMIT}, got n = {0}")]
    DedupTooLarge(usize),
    #[error("kappa must satisfy 1 <= kappa <= n-2, got kappa={kappa} for n={n}")]
    KappaOutOfRange { n: usize, kappa: usize },
    #[error("class is empty for n={n}, kappa={kappa}")]
    EmptyClass { n: usize, kappa: usize },
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[inline]
fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Decodes an edge mask into one neighbor word per vertex.
fn rows_from_mask(n: usize, mask: u64) -> [u64; LABELED_LIMIT] {
    let mut rows = [0u64; LABELED_LIMIT];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> idx & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    rows
}

/// Edge mask of a graph in the pair order above; `n <= 11` so masks fit.
pub fn edge_mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(pair_count(n) <= 64, "edge mask needs C(n,2) <= 64");
    let mut mask = 0u64;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                mask |= 1 << idx;
            }
            idx += 1;
        }
    }
    mask
}

fn rows_connected(rows: &[u64], n: usize) -> bool {
    let mut visited = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        next &= !visited;
        visited |= next;
        frontier = next;
    }
    visited.count_ones() as usize == n
}

fn rows_edges(rows: &[u64], n: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..n).flat_map(move |u| {
        let mut word = rows[u] >> (u + 1) << (u + 1);
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let v = word.trailing_zeros() as usize;
                word &= word - 1;
                Some((u, v))
            }
        })
    })
}

/// Exact-connectivity test with early rejection: any non-adjacent pair whose
/// flow drops below `target` rules the graph out immediately, and flows are
/// capped at `target + 1` since larger values only matter as "not smaller".
fn rows_connectivity_equals(flow: &mut SplitFlow, rows: &[u64], n: usize, target: usize) -> bool {
    flow.load(n, rows_edges(rows, n));
    let mut attained = false;
    for (s, &row) in rows.iter().enumerate().take(n) {
        for t in s + 1..n {
            if row >> t & 1 == 1 {
                continue;
            }
            flow.reset();
            let f = flow.max_flow(s, t, target + 1);
            if f < target {
                return false;
            }
            if f == target {
                attained = true;
            }
        }
    }
    attained
}

/// Least eigenvalue of the complement, straight from the neighbor words.
fn complement_least_eigenvalue(rows: &[u64], n: usize) -> f64 {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let matrix: Vec<Vec<f64>> = (0..n)
        .map(|v| {
            let crow = full & !rows[v] & !(1u64 << v);
            (0..n)
                .map(|u| if crow >> u & 1 == 1 { 1.0 } else { 0.0 })
                .collect()
        })
        .collect();
    eigen_sym(&matrix).expect("adjacency is symmetric").least_value
}

fn check_class_params(n: usize, kappa: usize, extended: bool) -> Result<(), OracleError> {
    if kappa < 1 || kappa + 2 > n {
        return Err(OracleError::KappaOutOfRange { n, kappa });
    }
    let limit = if extended { LABELED_LIMIT } else { DEDUP_LIMIT };
    if n > limit {
        return Err(OracleError::TooLarge(n));
    }
    Ok(())
}

/// Streams every labeled connected graph on `n` vertices with connectivity
/// exactly `kappa`; with `dedup`, only the permutation-minimal representative
/// of each isomorphism class survives.
pub fn enumerate_class(
    n: usize,
    kappa: usize,
    dedup: bool,
) -> Result<impl Iterator<Item = Graph>, OracleError> {
    check_class_params(n, kappa, true)?;
    if dedup && n > DEDUP_LIMIT {
        return Err(OracleError::DedupTooLarge(n));
    }
    let perms = dedup.then(|| permutations(n));
    let mut scan = ClassScan::new(n, kappa, 0, 1u64 << pair_count(n));
    Ok(std::iter::from_fn(move || loop {
        let (mask, rows) = scan.next_member()?;
        if let Some(perms) = &perms {
            if canonical_mask_of(mask, n, perms) != mask {
                continue;
            }
        }
        return Some(Graph::from_rows(n, &rows[..n]));
    }))
}

/// Number of labeled connected graphs on `n` vertices, by direct count.
pub fn connected_labeled_count(n: usize) -> Result<u64, OracleError> {
    if !(1..=LABELED_LIMIT).contains(&n) {
        return Err(OracleError::TooLarge(n));
    }
    if n == 1 {
        return Ok(1);
    }
    let mut count = 0;
    for mask in 0..1u64 << pair_count(n) {
        if mask.count_ones() as usize + 1 < n {
            continue;
        }
        let rows = rows_from_mask(n, mask);
        if rows_connected(&rows, n) {
            count += 1;
        }
    }
    Ok(count)
}

/// Mask-range scanner with the full filter chain.
struct ClassScan {
    n: usize,
    kappa: usize,
    mask: u64,
    end: u64,
    min_edges: u32,
    flow: SplitFlow,
}

impl ClassScan {
    fn new(n: usize, kappa: usize, start: u64, end: u64) -> Self {
        // connectivity kappa forces at least max(n-1, ceil(n*kappa/2)) edges
        let min_edges = (n - 1).max(n * kappa / 2) as u32;
        Self {
            n,
            kappa,
            mask: start,
            end,
            min_edges,
            flow: SplitFlow::with_nodes(n),
        }
    }

    fn next_member(&mut self) -> Option<(u64, [u64; LABELED_LIMIT])> {
        while self.mask < self.end {
            let mask = self.mask;
            self.mask += 1;
            if mask.count_ones() < self.min_edges {
                continue;
            }
            let rows = rows_from_mask(self.n, mask);
            if (0..self.n).any(|v| (rows[v].count_ones() as usize) < self.kappa) {
                continue;
            }
            if !rows_connected(&rows, self.n) {
                continue;
            }
            if !rows_connectivity_equals(&mut self.flow, &rows, self.n, self.kappa) {
                continue;
            }
            return Some((mask, rows));
        }
        None
    }
}

/// How a search outcome relates to the predicted bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    BoundHolds,
    BoundTight,
    Violation,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::BoundHolds => write!(f, "bound-holds"),
            Verdict::BoundTight => write!(f, "bound-tight"),
            Verdict::Violation => write!(f, "violation"),
        }
    }
}

/// Outcome of an exhaustive minimum search over one `(n, kappa)` class.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub n: usize,
    pub kappa: usize,
    /// Smallest least complement eigenvalue over the class.
    pub min_value: f64,
    /// Every class member within tolerance of the minimum, sorted by edge
    /// mask.
    pub witnesses: Vec<Graph>,
    /// Number of labeled class members examined.
    pub class_size: u64,
    /// The closed-form bound for this `(n, kappa)`.
    pub predicted: f64,
    pub verdict: Verdict,
}

/// Knobs for the exhaustive search.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Contiguous mask ranges scanned in parallel. The output is identical
    /// for every value.
    pub jobs: usize,
    /// Absolute tolerance for bound verdicts and witness collection.
    pub tolerance: f64,
    /// Unlocks the n = 8 labeled sweep.
    pub extended: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            jobs: std::thread::available_parallelism().map_or(1, |p| p.get()),
            tolerance: DEFAULT_TOLERANCE,
            extended: false,
        }
    }
}

struct RangeScan {
    local_min: f64,
    candidates: Vec<(u64, f64)>,
    class_count: u64,
}

fn scan_range(n: usize, kappa: usize, start: u64, end: u64, tol: f64) -> RangeScan {
    let mut scan = ClassScan::new(n, kappa, start, end);
    let mut local_min = f64::INFINITY;
    let mut candidates: Vec<(u64, f64)> = Vec::new();
    let mut class_count = 0;
    while let Some((mask, rows)) = scan.next_member() {
        class_count += 1;
        let value = complement_least_eigenvalue(&rows[..n], n);
        if value < local_min {
            local_min = value;
            candidates.retain(|&(_, v)| v <= local_min + tol);
        }
        if value <= local_min + tol {
            candidates.push((mask, value));
        }
    }
    RangeScan {
        local_min,
        candidates,
        class_count,
    }
}

/// Finds the minimizers of the least complement eigenvalue over the class of
/// connected graphs on `n` vertices with connectivity `kappa`.
pub fn find_minimizer(n: usize, kappa: usize) -> Result<SearchResult, OracleError> {
    find_minimizer_with(n, kappa, &SearchOptions::default())
}

/// [`find_minimizer`] with explicit search options.
pub fn find_minimizer_with(
    n: usize,
    kappa: usize,
    opts: &SearchOptions,
) -> Result<SearchResult, OracleError> {
    check_class_params(n, kappa, opts.extended)?;
    let tol = opts.tolerance;
    let total = 1u64 << pair_count(n);
    let jobs = opts.jobs.max(1).min(total as usize) as u64;
    let chunk = total / jobs;
    let ranges: Vec<(u64, u64)> = (0..jobs)
        .map(|i| {
            let lo = i * chunk;
            let hi = if i + 1 == jobs { total } else { lo + chunk };
            (lo, hi)
        })
        .collect();

    let scans: Vec<RangeScan> = std::thread::scope(|s| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| s.spawn(move || scan_range(n, kappa, lo, hi, tol)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });

    let class_size: u64 = scans.iter().map(|r| r.class_count).sum();
    if class_size == 0 {
        return Err(OracleError::EmptyClass { n, kappa });
    }
    let min_value = scans
        .iter()
        .map(|r| r.local_min)
        .fold(f64::INFINITY, f64::min);
    let mut witness_masks: Vec<u64> = scans
        .iter()
        .flat_map(|r| r.candidates.iter())
        .filter(|&&(_, v)| v <= min_value + tol)
        .map(|&(m, _)| m)
        .collect();
    witness_masks.sort_unstable();
    let witnesses = witness_masks
        .iter()
        .map(|&m| Graph::from_rows(n, &rows_from_mask(n, m)[..n]))
        .collect();

    let predicted = extremal::predicted_min(n, kappa)?;
    let verdict = if min_value < predicted - tol {
        Verdict::Violation
    } else if (min_value - predicted).abs() <= tol {
        Verdict::BoundTight
    } else {
        Verdict::BoundHolds
    };
    Ok(SearchResult {
        n,
        kappa,
        min_value,
        witnesses,
        class_size,
        predicted,
        verdict,
    })
}

/// Runs [`find_minimizer_with`] over a grid: every `n` in `n_lo..=n_hi`, and
/// either one fixed `kappa` or all of `1..=n-2`.
pub fn verify_theorems(
    n_lo: usize,
    n_hi: usize,
    kappa: Option<usize>,
    opts: &SearchOptions,
) -> Result<Vec<SearchResult>, OracleError> {
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        match kappa {
            Some(k) => out.push(find_minimizer_with(n, k, opts)?),
            None => {
                for k in 1..=n.saturating_sub(2) {
                    out.push(find_minimizer_with(n, k, opts)?);
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// isomorphism via permutation-minimal masks
// ---------------------------------------------------------------------------

/// All permutations of `0..n` (Heap's algorithm, deterministic order).
fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut items: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![items.clone()];
    let mut counters = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            out.push(items.clone());
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

fn apply_perm(mask: u64, n: usize, perm: &[u8]) -> u64 {
    let mut fresh = 0u64;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> idx & 1 == 1 {
                let (a, b) = (perm[i] as usize, perm[j] as usize);
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                fresh |= 1 << (hi * (hi - 1) / 2 + lo);
            }
            idx += 1;
        }
    }
    fresh
}

fn canonical_mask_of(mask: u64, n: usize, perms: &[Vec<u8>]) -> u64 {
    perms
        .iter()
        .map(|p| apply_perm(mask, n, p))
        .min()
        .unwrap_or(mask)
}

/// The minimum edge mask over all vertex relabelings: equal masks mean
/// isomorphic graphs. Factorial in `n`, fine through `n = 8`.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= LABELED_LIMIT, "canonical masks support n <= 8");
    canonical_mask_of(edge_mask(g), n, &permutations(n))
}

/// Isomorphism test for small graphs via canonical masks.
pub fn is_isomorphic_small(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count() && canonical_mask(a) == canonical_mask(b)
}

// ---------------------------------------------------------------------------
// structural claims on minimizers
// ---------------------------------------------------------------------------

/// Verdict for one structural claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Holds,
    Fails,
    NotApplicable,
    /// The least eigenspace is degenerate; the claim did not hold for the
    /// computed vector but another least vector may satisfy it, so this is
    /// flagged rather than counted as a failure.
    FlaggedDegenerate,
}

impl std::fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClaimStatus::Holds => write!(f, "holds"),
            ClaimStatus::Fails => write!(f, "fails"),
            ClaimStatus::NotApplicable => write!(f, "not-applicable"),
            ClaimStatus::FlaggedDegenerate => write!(f, "flagged-degenerate"),
        }
    }
}

/// Structural-claim report for one graph: two components after removing a
/// minimum cut, cliques on the four sign/side sets, a `kappa`-matching
/// across the sign split when the minus side is large, and the
/// matching-plus-join structure when it is small.
#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub n: usize,
    pub kappa: usize,
    pub cut: VertexCut,
    pub sign: SignPartition,
    /// Gap between the two smallest complement eigenvalues.
    pub least_gap: f64,
    /// Whether the least eigenspace of the complement is degenerate, in
    /// which case holds/fails statements only cover the computed vector.
    pub degenerate: bool,
    /// Components of the graph after deleting the cut.
    pub component_count: usize,
    /// Status of the four claims, in order: two components, cliques,
    /// crossing matching, matching plus join.
    pub claims: [ClaimStatus; 4],
}

/// Evaluates the four structural claims on `g` (typically a minimizer
/// witness), using the least eigenvector of the complement for the sign
/// partition and a minimum vertex cut for the component structure.
pub fn check_structural_claims(g: &Graph) -> Result<ClaimReport, OracleError> {
    let n = g.vertex_count();
    let comp_spec: SpectralResult = spectra::least_eigenpair(&g.complement());
    let sign = spectra::sign_partition(g, &comp_spec);
    let least_gap = comp_spec.least_gap();
    let degenerate = least_gap < DEGENERACY_GAP;
    let (kappa, cut) = g.vertex_connectivity()?;

    let grade = |ok: bool| -> ClaimStatus {
        match (ok, degenerate) {
            (true, _) => ClaimStatus::Holds,
            (false, true) => ClaimStatus::FlaggedDegenerate,
            (false, false) => ClaimStatus::Fails,
        }
    };

    // complete graphs have an empty conventional cut and no claim content
    if cut.vertices().is_empty() {
        return Ok(ClaimReport {
            n,
            kappa,
            cut,
            sign,
            least_gap,
            degenerate,
            component_count: 1,
            claims: [ClaimStatus::NotApplicable; 4],
        });
    }

    let components = g.components_without(cut.vertices());
    let component_count = components.len();
    let claim_two_components = grade(component_count == 2);

    let claim_cliques = if component_count == 2 {
        let in_plus: Vec<bool> = {
            let mut mark = vec![false; n];
            for &v in &sign.v_plus {
                mark[v] = true;
            }
            mark
        };
        let split = |vs: &[usize]| -> (Vec<usize>, Vec<usize>) {
            let plus = vs.iter().copied().filter(|&v| in_plus[v]).collect();
            let minus = vs.iter().copied().filter(|&v| !in_plus[v]).collect();
            (plus, minus)
        };
        let (cut_plus, cut_minus) = split(cut.vertices());
        let mut all_cliques = true;
        for comp in &components {
            let (comp_plus, comp_minus) = split(comp);
            let mut plus_set = comp_plus;
            plus_set.extend_from_slice(&cut_plus);
            let mut minus_set = comp_minus;
            minus_set.extend_from_slice(&cut_minus);
            all_cliques &= g.is_clique(&plus_set) && g.is_clique(&minus_set);
        }
        grade(all_cliques)
    } else {
        ClaimStatus::NotApplicable
    };

    let claim_crossing = if sign.n2 >= kappa {
        grade(sign_crossing_matching(g, &sign, kappa).is_some())
    } else {
        ClaimStatus::NotApplicable
    };

    let claim_join = if sign.n1 >= kappa && kappa > sign.n2 {
        grade(matching_plus_join_holds(g, &sign, kappa))
    } else {
        ClaimStatus::NotApplicable
    };

    Ok(ClaimReport {
        n,
        kappa,
        cut,
        sign,
        least_gap,
        degenerate,
        component_count,
        claims: [claim_two_components, claim_cliques, claim_crossing, claim_join],
    })
}

/// The small-minus-side structure: `kappa - n2` boundary vertices joined to
/// every minus vertex, and the remaining boundary saturating the minus side
/// with a matching.
fn matching_plus_join_holds(g: &Graph, sign: &SignPartition, kappa: usize) -> bool {
    let n2 = sign.n2;
    let need_join = kappa - n2;
    let fully_joined: Vec<usize> = sign
        .u_boundary
        .iter()
        .copied()
        .filter(|&u| sign.v_minus.iter().all(|&w| g.has_edge(u, w)))
        .collect();
    if fully_joined.len() < need_join {
        return false;
    }
    for reserve in combinations(&fully_joined, need_join) {
        let rest: Vec<usize> = sign
            .u_boundary
            .iter()
            .copied()
            .filter(|u| !reserve.contains(u))
            .collect();
        let m = max_bipartite_matching(g, &rest, &sign.v_minus)
            .expect("boundary sets are disjoint");
        if m.len() == n2 {
            return true;
        }
    }
    false
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k > items.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance the combination indices
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + (k - pos) < items.len() {
                idx[pos] += 1;
                for later in pos + 1..k {
                    idx[later] = idx[later - 1] + 1;
                }
                break;
            }
        }
    }
}
