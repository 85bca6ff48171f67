//! Dense symmetric eigensolver and spectral primitives for adjacency
//! matrices: Rayleigh quotients, eigenvector residuals, degree bounds,
//! least-eigenvector sign partitions, and edge-addition comparisons.
//!
//! The solver is cyclic Jacobi: plane rotations annihilate off-diagonal
//! entries sweep by sweep until the off-diagonal Frobenius norm drops below
//! 1e-12 (capped at 100 sweeps). That is deterministic for a fixed input and
//! plenty accurate for dense matrices up to a couple hundred rows, which is
//! the whole regime here.

use crate::graph::Graph;
use thiserror::Error;

/// Entries with absolute value below this are treated as zero when a sign is
/// needed (the `>= 0` side of a partition, the hypotheses of edge-addition
/// comparisons).
pub const SIGN_ZERO_TOL: f64 = 1e-9;

const OFF_DIAG_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;
const SYMMETRY_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum SpectraError {
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {delta:e}")]
    NotSymmetric { i: usize, j: usize, delta: f64 },
    #[error("matrix must be square and non-empty")]
    BadShape,
    #[error("vector length {got} does not match vertex count {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("vertices {0} and {1} are already adjacent")]
    AlreadyAdjacent(usize, usize),
}

/// Full spectrum plus the least eigenpair of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    /// Eigenvalues sorted descending, so `eigenvalues[0]` is the spectral
    /// radius for adjacency matrices and the last entry is the least.
    pub eigenvalues: Vec<f64>,
    /// The least eigenvalue (same as the final entry of `eigenvalues`).
    pub least_value: f64,
    /// A unit eigenvector for the least eigenvalue.
    pub least_vector: Vec<f64>,
}

impl SpectralResult {
    /// The spectral radius (largest eigenvalue).
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Gap between the least eigenvalue and the next one up.
    pub fn least_gap(&self) -> f64 {
        let n = self.eigenvalues.len();
        if n < 2 {
            f64::INFINITY
        } else {
            self.eigenvalues[n - 2] - self.eigenvalues[n - 1]
        }
    }
}

/// Jacobi state: matrix copy plus accumulated rotations.
#[allow(clippy::needless_range_loop)] // plane rotations read clearest with indices
fn jacobi(a: &[Vec<f64>]) -> Result<(Vec<f64>, Vec<Vec<f64>>), SpectraError> {
    let n = a.len();
    if n == 0 || a.iter().any(|row| row.len() != n) {
        return Err(SpectraError::BadShape);
    }
    for i in 0..n {
        for j in i + 1..n {
            let delta = (a[i][j] - a[j][i]).abs();
            if delta > SYMMETRY_TOL {
                return Err(SpectraError::NotSymmetric { i, j, delta });
            }
        }
    }

    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += 2.0 * m[i][j] * m[i][j];
            }
        }
        if off.sqrt() < OFF_DIAG_TOL {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if apq.abs() < OFF_DIAG_TOL / (n * n) as f64 {
                    continue;
                }
                let theta = 0.5 * (m[q][q] - m[p][p]) / apq;
                let t = {
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                let app = m[p][p];
                let aqq = m[q][q];
                m[p][p] = app - t * apq;
                m[q][q] = aqq + t * apq;
                m[p][q] = 0.0;
                m[q][p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = m[k][p];
                    let akq = m[k][q];
                    m[k][p] = akp - s * (akq + tau * akp);
                    m[p][k] = m[k][p];
                    m[k][q] = akq + s * (akp - tau * akq);
                    m[q][k] = m[k][q];
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = vp - s * (vq + tau * vp);
                    row[q] = vq + s * (vp - tau * vq);
                }
            }
        }
    }

    let values: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    Ok((values, v))
}

/// All eigenvalues (descending) with matching unit eigenvectors.
///
/// `vectors[k]` is the eigenvector for `values[k]`. Used by report writers
/// that want a residual for every eigenvalue; [`eigen_sym`] is the usual
/// entry point.
pub fn eigen_sym_with_basis(a: &[Vec<f64>]) -> Result<(Vec<f64>, Vec<Vec<f64>>), SpectraError> {
    let n = a.len();
    let (values, v) = jacobi(a)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap());
    let sorted_values: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let mut vectors = Vec::with_capacity(n);
    for &col in &order {
        let mut x: Vec<f64> = (0..n).map(|r| v[r][col]).collect();
        normalize(&mut x);
        vectors.push(x);
    }
    Ok((sorted_values, vectors))
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|e| e * e).sum::<f64>().sqrt();
    if norm > 0.0 {
        for e in x.iter_mut() {
            *e /= norm;
        }
    }
    // fix the overall sign so output is reproducible
    if let Some(first) = x.iter().find(|e| e.abs() > 1e-12) {
        if *first < 0.0 {
            for e in x.iter_mut() {
                *e = -*e;
            }
        }
    }
}

/// Eigendecomposition of a symmetric matrix via cyclic Jacobi.
pub fn eigen_sym(a: &[Vec<f64>]) -> Result<SpectralResult, SpectraError> {
    let (eigenvalues, vectors) = eigen_sym_with_basis(a)?;
    let least_value = *eigenvalues.last().unwrap();
    let least_vector = vectors.into_iter().next_back().unwrap();
    Ok(SpectralResult {
        eigenvalues,
        least_value,
        least_vector,
    })
}

/// Spectrum of a graph's adjacency matrix.
pub fn least_eigenpair(g: &Graph) -> SpectralResult {
    eigen_sym(&g.adjacency_matrix()).expect("adjacency matrices are symmetric")
}

/// The quadratic form `x' A(g) x`, evaluated as the sum of `2 x_i x_j` over
/// edges. For unit `x` the value lies between the least eigenvalue and the
/// spectral radius.
pub fn rayleigh(g: &Graph, x: &[f64]) -> Result<f64, SpectraError> {
    if x.len() != g.vertex_count() {
        return Err(SpectraError::LengthMismatch {
            got: x.len(),
            expected: g.vertex_count(),
        });
    }
    Ok(g.edges().map(|(u, v)| 2.0 * x[u] * x[v]).sum())
}

/// `max_i |lambda x_i - sum_{j ~ i} x_j|`: how far `(lambda, x)` is from
/// satisfying the eigen-equation of `g`.
pub fn eigen_residual(g: &Graph, lambda: f64, x: &[f64]) -> Result<f64, SpectraError> {
    if x.len() != g.vertex_count() {
        return Err(SpectraError::LengthMismatch {
            got: x.len(),
            expected: g.vertex_count(),
        });
    }
    let mut worst = 0.0f64;
    for i in 0..g.vertex_count() {
        let neighbor_sum: f64 = g.neighbors(i).map(|j| x[j]).sum();
        worst = worst.max((lambda * x[i] - neighbor_sum).abs());
    }
    Ok(worst)
}

/// Checks `max_degree >= spectral_radius >= sqrt(max_degree)` with 1e-9
/// slack. Edgeless graphs pass trivially.
pub fn degree_bounds_check(g: &Graph) -> bool {
    let delta = g.max_degree() as f64;
    let lambda1 = least_eigenpair(g).spectral_radius();
    if delta == 0.0 {
        return lambda1.abs() <= 1e-9;
    }
    delta + 1e-9 >= lambda1 && lambda1 + 1e-9 >= delta.sqrt()
}

/// Vertex split by the sign of a least eigenvector, with boundary sets.
///
/// `v_plus` holds the vertices whose entry is `>= 0` (entries within
/// [`SIGN_ZERO_TOL`] of zero count as zero and land on the plus side);
/// `v_minus` holds the strictly negative ones. The orientation is normalized
/// so `n1 >= n2`, breaking ties toward the lexicographically smaller
/// `v_plus`. `u_boundary`/`w_boundary` are the vertices of each side with at
/// least one cross neighbor in the graph supplied to [`sign_partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPartition {
    pub v_plus: Vec<usize>,
    pub v_minus: Vec<usize>,
    pub u_boundary: Vec<usize>,
    pub w_boundary: Vec<usize>,
    pub n1: usize,
    pub n2: usize,
}

/// Splits the vertices of `g` by the sign of `sr.least_vector`.
///
/// The caller picks which graph's adjacency defines the boundary sets; pass
/// the host graph `g` together with the spectrum of `g` itself or of its
/// complement, depending on what the eigenvector is meant to describe.
pub fn sign_partition(g: &Graph, sr: &SpectralResult) -> SignPartition {
    let n = g.vertex_count();
    assert_eq!(sr.least_vector.len(), n, "eigenvector length mismatch");
    let x = &sr.least_vector;

    let plus_of = |flip: bool| -> Vec<usize> {
        (0..n)
            .filter(|&v| {
                let e = if flip { -x[v] } else { x[v] };
                e >= -SIGN_ZERO_TOL
            })
            .collect()
    };
    let plus = plus_of(false);
    let plus_flipped = plus_of(true);
    let flip = match plus.len().cmp(&plus_flipped.len()) {
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Equal => plus_flipped < plus,
    };
    let v_plus = if flip { plus_flipped } else { plus };
    let in_plus: Vec<bool> = {
        let mut mark = vec![false; n];
        for &v in &v_plus {
            mark[v] = true;
        }
        mark
    };
    let v_minus: Vec<usize> = (0..n).filter(|&v| !in_plus[v]).collect();

    let u_boundary = v_plus
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).any(|u| !in_plus[u]))
        .collect();
    let w_boundary = v_minus
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).any(|u| in_plus[u]))
        .collect();

    SignPartition {
        n1: v_plus.len(),
        n2: v_minus.len(),
        v_plus,
        v_minus,
        u_boundary,
        w_boundary,
    }
}

/// Outcome of comparing least eigenvalues before and after adding one edge.
///
/// `base` is the graph without the edge, `added` the graph with it. Three
/// hypotheses each force a comparison: when the least vector of the *added*
/// graph vanishes at an endpoint, the base value cannot exceed the added
/// one; when the least vector of the *base* graph vanishes at an endpoint,
/// the added value cannot exceed the base one; and when the base least
/// vector takes strictly opposite signs at the endpoints, the added value
/// drops strictly below the base one.
#[derive(Debug, Clone)]
pub struct PerturbationReport {
    pub lambda_base: f64,
    pub lambda_added: f64,
    pub base_entry_u: f64,
    pub base_entry_v: f64,
    pub added_entry_u: f64,
    pub added_entry_v: f64,
    pub case_added_zero: bool,
    pub case_base_zero: bool,
    pub case_opposite_signs: bool,
}

impl PerturbationReport {
    /// Verifies every applicable inequality against the computed values,
    /// with quantitative slack for the near-zero hypotheses.
    pub fn holds(&self) -> bool {
        const SLACK: f64 = 1e-8;
        let mut ok = true;
        if self.case_added_zero {
            // lambda(base) <= lambda(added), up to the 2|x_u x_v| wiggle the
            // tolerance on "zero" admits.
            let wiggle = 2.0 * (self.added_entry_u * self.added_entry_v).abs();
            ok &= self.lambda_base <= self.lambda_added + wiggle + SLACK;
        }
        if self.case_base_zero {
            let wiggle = 2.0 * (self.base_entry_u * self.base_entry_v).abs();
            ok &= self.lambda_added <= self.lambda_base + wiggle + SLACK;
        }
        if self.case_opposite_signs {
            // strict drop: lambda(added) <= lambda(base) + 2 y_u y_v, where
            // the product is negative.
            ok &= self.lambda_added
                <= self.lambda_base + 2.0 * self.base_entry_u * self.base_entry_v + SLACK;
        }
        ok
    }
}

/// Computes least eigenpairs of `g_star` and `g_star + uv` and reports which
/// edge-addition hypotheses hold together with the resulting comparison.
pub fn perturbation_compare(
    g_star: &Graph,
    u: usize,
    v: usize,
) -> Result<PerturbationReport, SpectraError> {
    let n = g_star.vertex_count();
    assert!(u < n && v < n && u != v, "invalid vertex pair");
    if g_star.has_edge(u, v) {
        return Err(SpectraError::AlreadyAdjacent(u, v));
    }
    let mut edges: Vec<(usize, usize)> = g_star.edges().collect();
    edges.push((u.min(v), u.max(v)));
    let added = Graph::new(n, &edges).expect("edge set is valid");

    let base_spec = least_eigenpair(g_star);
    let added_spec = least_eigenpair(&added);
    let y = &base_spec.least_vector;
    let x = &added_spec.least_vector;

    let near_zero = |e: f64| e.abs() < SIGN_ZERO_TOL;
    Ok(PerturbationReport {
        lambda_base: base_spec.least_value,
        lambda_added: added_spec.least_value,
        base_entry_u: y[u],
        base_entry_v: y[v],
        added_entry_u: x[u],
        added_entry_v: x[v],
        case_added_zero: near_zero(x[u]) || near_zero(x[v]),
        case_base_zero: near_zero(y[u]) || near_zero(y[v]),
        case_opposite_signs: (y[u] < -SIGN_ZERO_TOL && y[v] > SIGN_ZERO_TOL)
            || (y[u] > SIGN_ZERO_TOL && y[v] < -SIGN_ZERO_TOL),
    })
}
