//! Bipartite matchings between exclusive neighbourhoods and Hall-condition
//! certificates.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::transport::lly_curvature;

/// Bipartite graph between two labelled vertex lists. Edges refer to
/// positions in `left` and `right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteInstance {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
    pub edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl BipartiteInstance {
    pub fn new(left: Vec<VertexId>, right: Vec<VertexId>, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        edges.sort_unstable();
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i >= left.len() || j >= right.len()) {
            return Err(Error::InvalidGraph(alloc::format!("edge ({i},{j}) out of range")));
        }
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("duplicate bipartite edge".into()));
        }
        let mut adj = vec![Vec::new(); left.len()];
        for &(i, j) in &edges {
            adj[i].push(j);
        }
        Ok(Self { left, right, edges, adj })
    }

    /// Instance whose sides are labelled `0..left` and `0..right`.
    pub fn with_sizes(left: usize, right: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new((0..left).collect(), (0..right).collect(), edges)
    }

    /// Right positions adjacent to `i`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// Γ(S) for a set of left positions, sorted.
    pub fn neighborhood(&self, subset: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = subset.iter().flat_map(|&i| self.adj[i].iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A maximum matching, and a Hall violator whenever it misses a left vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    /// `(left, right)` positions, sorted by left position.
    pub pairs: Vec<(usize, usize)>,
    pub perfect: bool,
    /// Left positions S with |Γ(S)| < |S|.
    pub violator: Option<Vec<usize>>,
}

/// Hopcroft–Karp maximum matching. If some left vertex stays unmatched the
/// left vertices reachable from unmatched ones by alternating paths form a
/// Hall violator.
pub fn max_matching(b: &BipartiteInstance) -> MatchingResult {
    let (nl, nr) = (b.left.len(), b.right.len());
    let mut match_l = vec![usize::MAX; nl];
    let mut match_r = vec![usize::MAX; nr];
    let mut layer = vec![usize::MAX; nl];
    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for i in 0..nl {
            layer[i] = if match_l[i] == usize::MAX {
                queue.push_back(i);
                0
            } else {
                usize::MAX
            };
        }
        let mut found = false;
        while let Some(i) = queue.pop_front() {
            for &j in &b.adj[i] {
                let k = match_r[j];
                if k == usize::MAX {
                    found = true;
                } else if layer[k] == usize::MAX {
                    layer[k] = layer[i] + 1;
                    queue.push_back(k);
                }
            }
        }
        if !found {
            break;
        }
        let mut next_edge = vec![0usize; nl];
        for i in 0..nl {
            if match_l[i] == usize::MAX {
                augment(i, b, &mut match_l, &mut match_r, &mut layer, &mut next_edge);
            }
        }
    }

    let pairs: Vec<(usize, usize)> =
        (0..nl).filter(|&i| match_l[i] != usize::MAX).map(|i| (i, match_l[i])).collect();
    let violator = (pairs.len() < nl).then(|| {
        let mut seen = vec![false; nl];
        let mut queue: VecDeque<usize> = (0..nl).filter(|&i| match_l[i] == usize::MAX).collect();
        for &i in &queue {
            seen[i] = true;
        }
        while let Some(i) = queue.pop_front() {
            for &j in &b.adj[i] {
                let k = match_r[j];
                if k != usize::MAX && !seen[k] {
                    seen[k] = true;
                    queue.push_back(k);
                }
            }
        }
        (0..nl).filter(|&i| seen[i]).collect()
    });
    MatchingResult { perfect: pairs.len() == nl && nl == nr, pairs, violator }
}

fn augment(
    i: usize,
    b: &BipartiteInstance,
    match_l: &mut [usize],
    match_r: &mut [usize],
    layer: &mut [usize],
    next_edge: &mut [usize],
) -> bool {
    while next_edge[i] < b.adj[i].len() {
        let j = b.adj[i][next_edge[i]];
        next_edge[i] += 1;
        let k = match_r[j];
        let ok = k == usize::MAX
            || (layer[k] == layer[i].wrapping_add(1) && augment(k, b, match_l, match_r, layer, next_edge));
        if ok {
            match_l[i] = j;
            match_r[j] = i;
            return true;
        }
    }
    layer[i] = usize::MAX;
    false
}

/// The bipartite graph of edges of `g` between N_x and N_y.
pub fn local_instance(g: &Graph, x: VertexId, y: VertexId) -> Result<BipartiteInstance> {
    g.regular_degree().ok_or(Error::NotRegular)?;
    let nb = g.decompose_edge(x, y)?;
    let mut edges = Vec::new();
    for (i, &v) in nb.nx.iter().enumerate() {
        for (j, &u) in nb.ny.iter().enumerate() {
            if g.has_edge(v, u) {
                edges.push((i, j));
            }
        }
    }
    BipartiteInstance::new(nb.nx, nb.ny, edges)
}

/// Maximum matching between N_x and N_y inside `g`.
pub fn local_perfect_matching(g: &Graph, x: VertexId, y: VertexId) -> Result<MatchingResult> {
    Ok(max_matching(&local_instance(g, x, y)?))
}

/// Largest balanced side accepted by [`hall_reduction_check`].
pub const MAX_HALL_SIDE: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HallReduction {
    /// Hall's condition holds for every subset of size ≤ (m+1)/2 on both sides.
    pub hypothesis_holds: bool,
    /// Hall's condition holds for every subset of the left side.
    pub full_hall_holds: bool,
}

/// Exhaustive check of the small-subset reduction of Hall's condition on a
/// balanced instance.
pub fn hall_reduction_check(b: &BipartiteInstance) -> Result<HallReduction> {
    let m = b.left.len();
    if b.right.len() != m {
        return Err(Error::UnbalancedSides);
    }
    if m > MAX_HALL_SIDE {
        return Err(Error::TooLarge(m as u64));
    }
    let mut left_nb = vec![0u32; m];
    let mut right_nb = vec![0u32; m];
    for &(i, j) in &b.edges {
        left_nb[i] |= 1 << j;
        right_nb[j] |= 1 << i;
    }
    let hall = |nb: &[u32], mask: u32| -> bool {
        let image = (0..m).filter(|&i| mask >> i & 1 == 1).fold(0u32, |acc, i| acc | nb[i]);
        image.count_ones() >= mask.count_ones()
    };
    let mut hypothesis = true;
    let mut full = true;
    for mask in 1u32..(1 << m) {
        let small = 2 * mask.count_ones() as usize <= m + 1;
        if small && hypothesis && !(hall(&left_nb, mask) && hall(&right_nb, mask)) {
            hypothesis = false;
        }
        if full && !hall(&left_nb, mask) {
            full = false;
        }
    }
    Ok(HallReduction { hypothesis_holds: hypothesis, full_hall_holds: full })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SharpnessEquivalence {
    pub kappa_sharp: bool,
    pub matching_perfect: bool,
    pub agree: bool,
}

/// Compares κ = (2+|Δ_xy|)/d with the existence of a perfect matching
/// between N_x and N_y.
pub fn sharpness_equivalence(g: &Graph, x: VertexId, y: VertexId) -> Result<SharpnessEquivalence> {
    let kappa_sharp = lly_curvature(g, x, y)?.sharp;
    let matching_perfect = local_perfect_matching(g, x, y)?.perfect;
    Ok(SharpnessEquivalence { kappa_sharp, matching_perfect, agree: kappa_sharp == matching_perfect })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{paley_graph, petersen, rook, shrikhande};

    #[test]
    fn complete_bipartite_and_star() {
        let k33 = BipartiteInstance::with_sizes(3, 3, (0..9).map(|e| (e / 3, e % 3)).collect()).unwrap();
        let r = max_matching(&k33);
        assert!(r.perfect && r.pairs.len() == 3 && r.violator.is_none());

        let star = BipartiteInstance::with_sizes(2, 2, vec![(0, 0), (1, 0)]).unwrap();
        let r = max_matching(&star);
        assert_eq!(r.pairs.len(), 1);
        assert!(!r.perfect);
        assert_eq!(r.violator.as_deref(), Some(&[0, 1][..]));
        assert_eq!(star.neighborhood(&[0, 1]), [0]);
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(BipartiteInstance::with_sizes(2, 2, vec![(0, 2)]).is_err());
        assert!(BipartiteInstance::with_sizes(2, 2, vec![(0, 1), (0, 1)]).is_err());
    }

    #[test]
    fn hall_reduction_examples() {
        let id = BipartiteInstance::with_sizes(5, 5, (0..5).map(|i| (i, i)).collect()).unwrap();
        assert_eq!(hall_reduction_check(&id).unwrap(), HallReduction { hypothesis_holds: true, full_hall_holds: true });
        let star = BipartiteInstance::with_sizes(2, 2, vec![(0, 0), (1, 0)]).unwrap();
        assert_eq!(hall_reduction_check(&star).unwrap(), HallReduction { hypothesis_holds: false, full_hall_holds: false });
        let unbalanced = BipartiteInstance::with_sizes(2, 3, vec![]).unwrap();
        assert_eq!(hall_reduction_check(&unbalanced), Err(Error::UnbalancedSides));
        let big = BipartiteInstance::with_sizes(15, 15, vec![]).unwrap();
        assert_eq!(hall_reduction_check(&big), Err(Error::TooLarge(15)));
    }

    #[test]
    fn local_matchings_on_named_graphs() {
        let r4 = rook(4).unwrap();
        let sh = shrikhande();
        let p13 = paley_graph(13).unwrap();
        for (x, y) in r4.edges() {
            assert!(local_perfect_matching(&r4, x, y).unwrap().perfect);
            assert_eq!(sharpness_equivalence(&r4, x, y).unwrap(), SharpnessEquivalence { kappa_sharp: true, matching_perfect: true, agree: true });
        }
        for (x, y) in sh.edges() {
            assert!(!local_perfect_matching(&sh, x, y).unwrap().perfect);
            assert_eq!(sharpness_equivalence(&sh, x, y).unwrap(), SharpnessEquivalence { kappa_sharp: false, matching_perfect: false, agree: true });
        }
        for (x, y) in p13.edges() {
            assert!(local_perfect_matching(&p13, x, y).unwrap().perfect);
        }
        let pg = petersen();
        let (x, y) = pg.edges().next().unwrap();
        assert_eq!(sharpness_equivalence(&pg, x, y).unwrap(), SharpnessEquivalence { kappa_sharp: false, matching_perfect: false, agree: true });
    }
}
