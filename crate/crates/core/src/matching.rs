//! Bipartite maximum matching with Hall-condition witnesses and
//! augmenting-path maximality certificates.
//!
//! Kuhn's augmenting-path search is all the instance sizes here call for; the
//! search order is fixed by the caller's vertex order, so results are
//! deterministic.

use crate::graph::Graph;
use crate::spectra::SignPartition;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("left and right sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("matching pair ({0}, {1}) is not an edge of the graph")]
    PairNotEdge(usize, usize),
    #[error("matching pair ({0}, {1}) does not cross the bipartition")]
    PairNotCross(usize, usize),
    #[error("vertex {0} is covered by more than one matching pair")]
    VertexReused(usize),
}

/// A set of pairwise vertex-disjoint edges between two vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
    covered: Vec<usize>,
}

impl Matching {
    /// Matched pairs as `(left vertex, right vertex)`, sorted by left vertex.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// All matched vertices, sorted.
    pub fn covered(&self) -> &[usize] {
        &self.covered
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Builds a matching from raw pairs without validating them against a
    /// host graph; [`is_maximum`] performs that validation.
    pub fn from_pairs(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        let mut covered: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        covered.sort_unstable();
        Self { pairs, covered }
    }
}

/// Internal matching state on index-compressed sides.
struct Kuhn {
    adj: Vec<Vec<usize>>,     // left index -> right indices
    match_right: Vec<usize>,  // right index -> left index or USIZE MAX
    match_left: Vec<usize>,   // left index -> right index or USIZE MAX
}

const UNMATCHED: usize = usize::MAX;

impl Kuhn {
    fn new(g: &Graph, left: &[usize], right: &[usize]) -> Self {
        let mut right_pos = vec![UNMATCHED; g.vertex_count()];
        for (i, &r) in right.iter().enumerate() {
            right_pos[r] = i;
        }
        let adj = left
            .iter()
            .map(|&l| {
                g.neighbors(l)
                    .filter_map(|v| {
                        let p = right_pos[v];
                        (p != UNMATCHED).then_some(p)
                    })
                    .collect()
            })
            .collect();
        Self {
            adj,
            match_right: vec![UNMATCHED; right.len()],
            match_left: vec![UNMATCHED; left.len()],
        }
    }

    fn try_augment(&mut self, li: usize, seen: &mut [bool]) -> bool {
        for i in 0..self.adj[li].len() {
            let ri = self.adj[li][i];
            if seen[ri] {
                continue;
            }
            seen[ri] = true;
            if self.match_right[ri] == UNMATCHED || {
                let other = self.match_right[ri];
                self.try_augment(other, seen)
            } {
                self.match_right[ri] = li;
                self.match_left[li] = ri;
                return true;
            }
        }
        false
    }

    fn run(&mut self) -> usize {
        let mut size = 0;
        for li in 0..self.adj.len() {
            let mut seen = vec![false; self.match_right.len()];
            if self.try_augment(li, &mut seen) {
                size += 1;
            }
        }
        size
    }
}

fn check_disjoint(left: &[usize], right: &[usize]) -> Result<(), MatchingError> {
    for &l in left {
        if right.contains(&l) {
            return Err(MatchingError::OverlappingSets(l));
        }
    }
    Ok(())
}

/// A maximum-cardinality matching between `left` and `right`, using only
/// edges that cross the two sets.
pub fn max_bipartite_matching(
    g: &Graph,
    left: &[usize],
    right: &[usize],
) -> Result<Matching, MatchingError> {
    check_disjoint(left, right)?;
    let mut kuhn = Kuhn::new(g, left, right);
    kuhn.run();
    let pairs = kuhn
        .match_left
        .iter()
        .enumerate()
        .filter(|&(_, &ri)| ri != UNMATCHED)
        .map(|(li, &ri)| (left[li], right[ri]))
        .collect();
    Ok(Matching::from_pairs(pairs))
}

/// A Hall violator: some `S` inside `left` with fewer than `|S|` neighbors in
/// `right`, or `None` when a left-saturating matching exists.
///
/// The witness is the set of left vertices alternating-reachable from the
/// first unmatched left vertex after a maximum matching has been built, which
/// makes the output deterministic for a fixed vertex order.
pub fn hall_violator(
    g: &Graph,
    left: &[usize],
    right: &[usize],
) -> Result<Option<Vec<usize>>, MatchingError> {
    check_disjoint(left, right)?;
    let mut kuhn = Kuhn::new(g, left, right);
    let size = kuhn.run();
    if size == left.len() {
        return Ok(None);
    }
    let start = (0..left.len())
        .find(|&li| kuhn.match_left[li] == UNMATCHED)
        .expect("an unmatched left vertex exists");

    let mut in_s = vec![false; left.len()];
    let mut seen_r = vec![false; right.len()];
    in_s[start] = true;
    let mut stack = vec![start];
    while let Some(li) = stack.pop() {
        for &ri in &kuhn.adj[li] {
            if seen_r[ri] {
                continue;
            }
            seen_r[ri] = true;
            // every reachable right vertex is matched, otherwise the matching
            // would admit an augmenting path
            let partner = kuhn.match_right[ri];
            debug_assert_ne!(partner, UNMATCHED);
            if !in_s[partner] {
                in_s[partner] = true;
                stack.push(partner);
            }
        }
    }
    let witness: Vec<usize> = (0..left.len())
        .filter(|&li| in_s[li])
        .map(|li| left[li])
        .collect();
    debug_assert!(seen_r.iter().filter(|&&b| b).count() < witness.len());
    Ok(Some(witness))
}

/// Whether `m` is a maximum matching between `left` and `right`, decided by
/// searching for an augmenting path from the unmatched left vertices.
pub fn is_maximum(
    g: &Graph,
    m: &Matching,
    left: &[usize],
    right: &[usize],
) -> Result<bool, MatchingError> {
    check_disjoint(left, right)?;

    // validate the matching against the graph and the bipartition
    let mut used = vec![false; g.vertex_count()];
    let mut match_of = vec![UNMATCHED; g.vertex_count()];
    for &(a, b) in m.pairs() {
        if !g.has_edge(a, b) {
            return Err(MatchingError::PairNotEdge(a, b));
        }
        let crosses = (left.contains(&a) && right.contains(&b))
            || (left.contains(&b) && right.contains(&a));
        if !crosses {
            return Err(MatchingError::PairNotCross(a, b));
        }
        for v in [a, b] {
            if used[v] {
                return Err(MatchingError::VertexReused(v));
            }
            used[v] = true;
        }
        match_of[a] = b;
        match_of[b] = a;
    }

    // alternating BFS from unmatched left vertices: unmatched-edge step to
    // the right, matched-edge step back to the left
    let in_right: Vec<bool> = {
        let mut mark = vec![false; g.vertex_count()];
        for &r in right {
            mark[r] = true;
        }
        mark
    };
    let mut visited_left = vec![false; g.vertex_count()];
    let mut visited_right = vec![false; g.vertex_count()];
    let mut queue: Vec<usize> = left.iter().copied().filter(|&l| !used[l]).collect();
    for &l in &queue {
        visited_left[l] = true;
    }
    let mut qi = 0;
    while qi < queue.len() {
        let l = queue[qi];
        qi += 1;
        for r in g.neighbors(l).filter(|&r| in_right[r]) {
            if visited_right[r] || match_of[l] == r {
                continue;
            }
            visited_right[r] = true;
            if match_of[r] == UNMATCHED {
                return Ok(false); // augmenting path found
            }
            let back = match_of[r];
            if !visited_left[back] {
                visited_left[back] = true;
                queue.push(back);
            }
        }
    }
    Ok(true)
}

/// A matching of size at least `k` between the plus and minus sides of a
/// sign partition, using only cross edges; `None` if the maximum cross
/// matching is smaller than `k`.
pub fn sign_crossing_matching(g: &Graph, sp: &SignPartition, k: usize) -> Option<Matching> {
    let m = max_bipartite_matching(g, &sp.v_plus, &sp.v_minus)
        .expect("sign partition sides are disjoint");
    (m.len() >= k).then_some(m)
}
