//! Deterministic constructors for the extremal families `B1`, `B2`, `B3`
//! (two cliques joined by increasingly dense cross patterns) and the
//! closed-form spectral machinery around them: quotient polynomials of the
//! complements, least-root extraction, and the predicted class minimum.
//!
//! Vertex layout is fixed so the same parameters always produce the same
//! graph: side 1 occupies `0..n1`, side 2 occupies `n1..n1+n2`, matchings
//! pair equal offsets, and the designated join set sits at side-1 indices
//! `n2..kappa`.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ExtremalError {
    #[error("B1 needs n1 >= n2 >= kappa >= 1, got n1={n1}, n2={n2}, kappa={kappa}")]
    InvalidB1 { n1: usize, n2: usize, kappa: usize },
    #[error("B2 needs n1 >= kappa > n2 >= 1, got n1={n1}, n2={n2}, kappa={kappa}")]
    InvalidB2 { n1: usize, n2: usize, kappa: usize },
    #[error(
        "B3 needs kappa > n1 >= n2 >= 1 and kappa <= n1+n2-2, got n1={n1}, n2={n2}, kappa={kappa}"
    )]
    InvalidB3 { n1: usize, n2: usize, kappa: usize },
    #[error("sides must satisfy n1 >= n2 >= 1, got n1={n1}, n2={n2}")]
    InvalidSides { n1: usize, n2: usize },
    #[error("kappa must satisfy 1 <= kappa <= n-2, got kappa={kappa} for n={n}")]
    KappaOutOfRange { n: usize, kappa: usize },
    #[error("circulant cross pattern cannot satisfy the distinct-neighborhood clauses for n1={n1}, n2={n2}, kappa={kappa}")]
    IndistinctNeighborhoods { n1: usize, n2: usize, kappa: usize },
    #[error("no real root found in [{lo}, 0]")]
    NoRealRoot { lo: f64 },
    #[error("comparison needs n >= 2*kappa and kappa >= 2, got n={n}, kappa={kappa}")]
    ComparisonUndefined { n: usize, kappa: usize },
}

/// Which extremal family a parameter triple selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    B1,
    B2,
    B3,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::B1 => write!(f, "b1"),
            Family::B2 => write!(f, "b2"),
            Family::B3 => write!(f, "b3"),
        }
    }
}

/// A validated `(n1, n2, kappa)` triple for one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalParams {
    pub family: Family,
    pub n1: usize,
    pub n2: usize,
    pub kappa: usize,
}

impl ExtremalParams {
    pub fn new(
        family: Family,
        n1: usize,
        n2: usize,
        kappa: usize,
    ) -> Result<Self, ExtremalError> {
        if n2 < 1 || n1 < n2 {
            return Err(ExtremalError::InvalidSides { n1, n2 });
        }
        let ok = match family {
            Family::B1 => n2 >= kappa && kappa >= 1,
            Family::B2 => n1 >= kappa && kappa > n2,
            Family::B3 => kappa > n1 && kappa + 2 <= n1 + n2,
        };
        if !ok {
            return Err(match family {
                Family::B1 => ExtremalError::InvalidB1 { n1, n2, kappa },
                Family::B2 => ExtremalError::InvalidB2 { n1, n2, kappa },
                Family::B3 => ExtremalError::InvalidB3 { n1, n2, kappa },
            });
        }
        Ok(Self {
            family,
            n1,
            n2,
            kappa,
        })
    }

    pub fn total_vertices(&self) -> usize {
        self.n1 + self.n2
    }
}

/// Builds the graph a validated parameter triple describes.
pub fn build(p: &ExtremalParams) -> Result<Graph, ExtremalError> {
    let (n1, n2, kappa) = (p.n1, p.n2, p.kappa);
    let n = n1 + n2;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..n1 {
        for j in i + 1..n1 {
            edges.push((i, j));
        }
    }
    for i in 0..n2 {
        for j in i + 1..n2 {
            edges.push((n1 + i, n1 + j));
        }
    }
    match p.family {
        Family::B1 => {
            for i in 0..kappa {
                edges.push((i, n1 + i));
            }
        }
        Family::B2 => {
            for i in 0..n2 {
                edges.push((i, n1 + i));
            }
            // the kappa - n2 designated vertices joined to all of side 2
            for r in n2..kappa {
                for j in 0..n2 {
                    edges.push((r, n1 + j));
                }
            }
        }
        Family::B3 => {
            let s_len = n1 - n2;
            for s in 0..s_len {
                for j in 0..n2 {
                    edges.push((s, n1 + j));
                }
            }
            // circulant: offset i misses exactly the window of d = n-kappa-1
            // consecutive side-2 offsets starting at i, so the complement is
            // d-regular bipartite between the non-S vertices and side 2
            let d = n - kappa - 1;
            if d == 0 || d >= n2 {
                return Err(ExtremalError::IndistinctNeighborhoods {
                    n1,
                    n2,
                    kappa,
                });
            }
            for i in 0..n2 {
                let v = s_len + i;
                for j in 0..n2 {
                    let offset = (j + n2 - i) % n2;
                    if offset >= d {
                        edges.push((v, n1 + j));
                    }
                }
            }
        }
    }
    let g = Graph::new(n, &edges).expect("constructed edges are valid");
    if p.family == Family::B3 {
        verify_b3_neighborhoods(&g, p)?;
    }
    Ok(g)
}

/// Two cliques joined by a `kappa`-matching.
pub fn build_b1(n1: usize, n2: usize, kappa: usize) -> Result<Graph, ExtremalError> {
    build(&ExtremalParams::new(Family::B1, n1, n2, kappa)?)
}

/// Two cliques joined by an `n2`-matching plus a complete join from side 2 to
/// the `kappa - n2` designated side-1 vertices.
pub fn build_b2(n1: usize, n2: usize, kappa: usize) -> Result<Graph, ExtremalError> {
    build(&ExtremalParams::new(Family::B2, n1, n2, kappa)?)
}

/// Two cliques with `S` fully joined to side 2 and a circulant cross pattern
/// elsewhere; the complement is an `(n - kappa - 1)`-regular bipartite graph
/// plus `n1 - n2` isolated vertices.
pub fn build_b3(n1: usize, n2: usize, kappa: usize) -> Result<Graph, ExtremalError> {
    build(&ExtremalParams::new(Family::B3, n1, n2, kappa)?)
}

/// Confirms the pairwise-distinct cross-neighborhood clauses of B3; the
/// circulant pattern guarantees them inside the valid parameter range, and a
/// violation is reported rather than silently relaxed.
fn verify_b3_neighborhoods(g: &Graph, p: &ExtremalParams) -> Result<(), ExtremalError> {
    let (n1, n2) = (p.n1, p.n2);
    let s_len = n1 - n2;
    let side2: Vec<usize> = (n1..n1 + n2).collect();
    let nonstar: Vec<usize> = (s_len..n1).collect();
    let cross = |v: usize, pool: &[usize]| -> Vec<usize> {
        pool.iter().copied().filter(|&u| g.has_edge(v, u)).collect()
    };
    let mut seen: Vec<Vec<usize>> = nonstar.iter().map(|&v| cross(v, &side2)).collect();
    seen.sort();
    let distinct_left = seen.windows(2).all(|w| w[0] != w[1]);
    let mut seen2: Vec<Vec<usize>> = side2.iter().map(|&v| cross(v, &nonstar)).collect();
    seen2.sort();
    let distinct_right = seen2.windows(2).all(|w| w[0] != w[1]);
    if (nonstar.len() > 1 && !distinct_left) || (side2.len() > 1 && !distinct_right) {
        return Err(ExtremalError::IndistinctNeighborhoods {
            n1,
            n2,
            kappa: p.kappa,
        });
    }
    Ok(())
}

/// A real quartic in descending coefficient order. Degenerate leading zeros
/// are allowed, so lower-degree polynomials fit too.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuotientPoly {
    pub coeffs: [f64; 5],
}

impl QuotientPoly {
    pub fn new(coeffs: [f64; 5]) -> Self {
        Self { coeffs }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Coefficient-wise difference `self - other`.
    pub fn sub(&self, other: &QuotientPoly) -> QuotientPoly {
        let mut coeffs = [0.0; 5];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeffs[i] - other.coeffs[i];
        }
        QuotientPoly::new(coeffs)
    }

    /// Cauchy-style root bound: every real root lies in `[-bound, bound]`.
    fn root_bound(&self) -> Option<f64> {
        let lead_idx = self.coeffs.iter().position(|&c| c != 0.0)?;
        let lead = self.coeffs[lead_idx].abs();
        let max_rest = self.coeffs[lead_idx + 1..]
            .iter()
            .fold(0.0f64, |m, &c| m.max(c.abs()));
        Some(1.0 + max_rest / lead)
    }
}

/// Characteristic polynomial of the complement of `B1(n1, n2; kappa)` on the
/// four-class equitable partition:
/// `x^4 + (2k - n1 n2 - 1) x^2 + (k^2 - (n1+n2) k + n1 n2)`.
pub fn quotient_poly_b1(n1: usize, n2: usize, kappa: usize) -> QuotientPoly {
    let (a, b, k) = (n1 as f64, n2 as f64, kappa as f64);
    QuotientPoly::new([
        1.0,
        0.0,
        2.0 * k - a * b - 1.0,
        0.0,
        k * k - (a + b) * k + a * b,
    ])
}

/// Characteristic polynomial of the complement of `B2(n1, n2; kappa)`:
/// `x^2 (x^2 - (n2-1)^2 - (n1-k) n2)`.
pub fn quotient_poly_b2(n1: usize, n2: usize, kappa: usize) -> QuotientPoly {
    let (a, b, k) = (n1 as f64, n2 as f64, kappa as f64);
    QuotientPoly::new([1.0, 0.0, -((b - 1.0) * (b - 1.0) + (a - k) * b), 0.0, 0.0])
}

/// Closed-form least eigenvalue of the B2 complement.
pub fn b2_least_closed_form(n1: usize, n2: usize, kappa: usize) -> f64 {
    let (a, b, k) = (n1 as f64, n2 as f64, kappa as f64);
    -((b - 1.0) * (b - 1.0) + (a - k) * b).sqrt()
}

const BISECT_TOL: f64 = 1e-12;
const SCAN_STEP: f64 = 1.0 / 64.0;

/// The minimum real root of `q`, by scanning `[bracket, 0]` for the leftmost
/// sign change and bisecting it down to 1e-12.
///
/// `bracket` is the left end of the search interval; when `None`, a Cauchy
/// bound on the roots is used. Even quartics are cross-checked against the
/// biquadratic closed form in debug builds.
pub fn least_root(q: &QuotientPoly, bracket: Option<f64>) -> Result<f64, ExtremalError> {
    let lo = match bracket {
        Some(b) => b.min(0.0),
        None => match q.root_bound() {
            Some(b) => -b,
            None => return Err(ExtremalError::NoRealRoot { lo: 0.0 }),
        },
    };
    let root = scan_leftmost_root(q, lo)?;
    #[cfg(debug_assertions)]
    {
        if q.coeffs[1] == 0.0 && q.coeffs[3] == 0.0 {
            if let Some(closed) = biquadratic_least_root(q) {
                debug_assert!(
                    (closed - root).abs() < 1e-9,
                    "biquadratic cross-check: {closed} vs {root}"
                );
            }
        }
    }
    Ok(root)
}

fn scan_leftmost_root(q: &QuotientPoly, lo: f64) -> Result<f64, ExtremalError> {
    let mut x = lo;
    let mut fx = q.eval(x);
    while x < 0.0 {
        if fx == 0.0 {
            return Ok(x);
        }
        let x_next = (x + SCAN_STEP).min(0.0);
        let f_next = q.eval(x_next);
        if fx.signum() != f_next.signum() && f_next != 0.0 {
            return Ok(bisect(q, x, x_next));
        }
        if f_next == 0.0 && x_next < 0.0 {
            return Ok(x_next);
        }
        x = x_next;
        fx = f_next;
    }
    // no sign change in the open interval; zero can still be the least root
    if q.eval(0.0) == 0.0 {
        return Ok(0.0);
    }
    Err(ExtremalError::NoRealRoot { lo })
}

fn bisect(q: &QuotientPoly, mut lo: f64, mut hi: f64) -> f64 {
    let flo = q.eval(lo);
    while hi - lo > BISECT_TOL {
        let mid = 0.5 * (lo + hi);
        let fmid = q.eval(mid);
        if fmid == 0.0 {
            return mid;
        }
        if (fmid > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Least root of an even quartic `a x^4 + c x^2 + e` via the quadratic
/// formula in `x^2`; `None` when the polynomial has odd terms or no real
/// root. Serves as the independent route against [`least_root`].
pub fn biquadratic_least_root(q: &QuotientPoly) -> Option<f64> {
    let [a, b, c, d, e] = q.coeffs;
    if b != 0.0 || d != 0.0 {
        return None;
    }
    let mu_max = if a == 0.0 {
        if c == 0.0 {
            return None;
        }
        -e / c
    } else {
        let disc = c * c - 4.0 * a * e;
        if disc < 0.0 {
            return None;
        }
        let r1 = (-c + disc.sqrt()) / (2.0 * a);
        let r2 = (-c - disc.sqrt()) / (2.0 * a);
        r1.max(r2)
    };
    (mu_max >= 0.0).then(|| -mu_max.sqrt())
}

/// The predicted minimum of the least complement eigenvalue over connected
/// graphs on `n` vertices with connectivity `kappa`: `kappa + 1 - n` when
/// `n < 2 kappa`, otherwise the least root of the balanced B1 quotient.
pub fn predicted_min(n: usize, kappa: usize) -> Result<f64, ExtremalError> {
    if kappa < 1 || kappa + 2 > n {
        return Err(ExtremalError::KappaOutOfRange { n, kappa });
    }
    if n < 2 * kappa {
        Ok(kappa as f64 + 1.0 - n as f64)
    } else {
        let q = quotient_poly_b1(n.div_ceil(2), n / 2, kappa);
        least_root(&q, Some(-(n as f64)))
    }
}

/// Both sides of the balanced-B1 versus extreme-B2 comparison, with the
/// separating polynomial evaluated at the B2 value.
#[derive(Debug, Clone, Copy)]
pub struct ComparisonCertificate {
    pub n: usize,
    pub kappa: usize,
    /// Least root of the balanced B1 quotient.
    pub b1_value: f64,
    /// Least eigenvalue of the extreme B2 complement (closed form).
    pub b2_value: f64,
    /// `g - f` evaluated at `b2_value`; negativity certifies strictness.
    pub phi_at_b2: f64,
}

impl ComparisonCertificate {
    /// Strict separation: the balanced B1 complement dips strictly lower.
    pub fn strict(&self) -> bool {
        self.b1_value < self.b2_value
    }

    pub fn holds(&self) -> bool {
        self.strict() && self.phi_at_b2 < 0.0
    }
}

/// Compares the least complement eigenvalues of `B1(ceil(n/2), floor(n/2);
/// kappa)` and `B2(n-kappa+1, kappa-1; kappa)`.
pub fn compare_b1_b2(n: usize, kappa: usize) -> Result<ComparisonCertificate, ExtremalError> {
    if kappa < 2 || n < 2 * kappa {
        return Err(ExtremalError::ComparisonUndefined { n, kappa });
    }
    let g = quotient_poly_b1(n.div_ceil(2), n / 2, kappa);
    let f = quotient_poly_b2(n - kappa + 1, kappa - 1, kappa);
    let b1_value = least_root(&g, Some(-(n as f64)))?;
    let b2_closed = b2_least_closed_form(n - kappa + 1, kappa - 1, kappa);
    let b2_root = least_root(&f, Some(-(n as f64)))?;
    debug_assert!(
        (b2_closed - b2_root).abs() < 1e-9,
        "closed form vs root isolation: {b2_closed} vs {b2_root}"
    );
    let phi = g.sub(&f);
    Ok(ComparisonCertificate {
        n,
        kappa,
        b1_value,
        b2_value: b2_closed,
        phi_at_b2: phi.eval(b2_closed),
    })
}
