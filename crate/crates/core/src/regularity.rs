//! Strongly / amply regular parameters and graph classification.

use core::fmt;

use alloc::format;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// The parameter tuple (n, d, α, β).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SrgParams {
    pub n: usize,
    pub d: usize,
    pub alpha: usize,
    pub beta: usize,
}

impl SrgParams {
    /// Validates `n > d >= 1`, `alpha <= d - 1` and `beta <= d`.
    pub fn new(n: usize, d: usize, alpha: usize, beta: usize) -> Result<Self> {
        if d == 0 || n <= d || alpha + 1 > d || beta > d {
            return Err(Error::InvalidParams(format!("({n},{d},{alpha},{beta})")));
        }
        Ok(Self { n, d, alpha, beta })
    }

    /// Conference parameters (4γ+1, 2γ, γ-1, γ).
    pub fn conference(gamma: usize) -> Result<Self> {
        if gamma == 0 {
            return Err(Error::InvalidParams("conference graphs need gamma >= 1".into()));
        }
        Self::new(4 * gamma + 1, 2 * gamma, gamma - 1, gamma)
    }

    /// γ = (n-1)/4, defined only for conference parameters.
    pub fn gamma(&self) -> Option<usize> {
        self.is_conference().then_some((self.n - 1) / 4)
    }

    pub fn is_conference(&self) -> bool {
        let g = self.beta;
        g >= 1 && self.n == 4 * g + 1 && self.d == 2 * g && self.alpha + 1 == g
    }

    /// |N_x| = |N_y| = d - α - 1.
    pub fn exclusive_size(&self) -> usize {
        self.d - self.alpha - 1
    }

    /// |P_xy| = n - 2d + α, negative when the parameters are inconsistent.
    pub fn outer_size(&self) -> i64 {
        self.n as i64 - 2 * self.d as i64 + self.alpha as i64
    }

    /// Counting identity d(d-α-1) = (n-d-1)β satisfied by every strongly regular graph.
    pub fn satisfies_identity(&self) -> bool {
        let (lhs, rhs) = identity_sides(*self);
        lhs == rhs
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.d, self.alpha, self.beta)
    }
}

fn identity_sides(p: SrgParams) -> (u64, u64) {
    let lhs = (p.d * (p.d - p.alpha - 1)) as u64;
    let rhs = ((p.n - p.d - 1) * p.beta) as u64;
    (lhs, rhs)
}

/// Strongest regularity notion a graph satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularityClass {
    Irregular,
    Regular(usize),
    AmplyRegular(SrgParams),
    StronglyRegular(SrgParams),
}

impl RegularityClass {
    pub fn degree(&self) -> Option<usize> {
        match self {
            Self::Irregular => None,
            Self::Regular(d) => Some(*d),
            Self::AmplyRegular(p) | Self::StronglyRegular(p) => Some(p.d),
        }
    }

    /// Parameters when the graph is at least amply regular.
    pub fn params(&self) -> Option<SrgParams> {
        match self {
            Self::AmplyRegular(p) | Self::StronglyRegular(p) => Some(*p),
            _ => None,
        }
    }

    pub fn is_strongly_regular(&self) -> bool {
        matches!(self, Self::StronglyRegular(_))
    }
}

/// Classifies `g` by checking every vertex pair.
///
/// Amply regular needs a constant number α of common neighbours on edges and
/// a constant β on pairs at distance 2. Strongly regular additionally needs
/// every non-adjacent pair at distance 2 (diameter ≤ 2) and a graph that is
/// neither complete nor empty. Complete graphs, empty graphs and disjoint
/// unions of cliques have no distance-2 pairs and stay `Regular(d)`.
pub fn classify_regularity(g: &Graph) -> RegularityClass {
    let Some(d) = g.regular_degree() else {
        return RegularityClass::Irregular;
    };
    let n = g.n();
    if d == 0 {
        return RegularityClass::Regular(0);
    }
    let mut alpha = None;
    let mut beta = None;
    let mut diameter_two = true;
    for u in 0..n {
        for v in (u + 1)..n {
            let c = g.common_neighbor_count(u, v);
            let slot = if g.has_edge(u, v) {
                &mut alpha
            } else if c == 0 {
                diameter_two = false;
                continue;
            } else {
                &mut beta
            };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return RegularityClass::Regular(d),
                Some(_) => {}
            }
        }
    }
    let (Some(alpha), Some(beta)) = (alpha, beta) else {
        return RegularityClass::Regular(d);
    };
    let params = SrgParams { n, d, alpha, beta };
    if diameter_two {
        RegularityClass::StronglyRegular(params)
    } else {
        RegularityClass::AmplyRegular(params)
    }
}

/// Neighbour counts of a vertex v ∈ N_x across the edge decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborProfile {
    /// Neighbours of v in N_y.
    pub ell: usize,
    pub in_delta: usize,
    pub in_nx: usize,
    pub in_pxy: usize,
}

/// Predicted neighbour profile of v ∈ N_x from (n, d, α, β) and ℓ, checked
/// against the actual adjacency of `g`.
pub fn neighbor_profile(
    g: &Graph,
    params: &SrgParams,
    x: VertexId,
    y: VertexId,
    v: VertexId,
) -> Result<NeighborProfile> {
    let parts = g.decompose_edge(x, y)?;
    g.check_vertex(v)?;
    if parts.nx.binary_search(&v).is_err() {
        return Err(Error::InvalidParams(format!("vertex {v} is not in N_x of {x}-{y}")));
    }
    let count_in = |set: &[VertexId]| g.neighbors(v).iter().filter(|w| set.binary_search(w).is_ok()).count();
    let ell = count_in(&parts.ny);
    let (a, b, d) = (params.alpha as i64, params.beta as i64, params.d as i64);
    let l = ell as i64;
    let predicted = [b - 1 - l, a - b + 1 + l, d - a - 1 - l];
    let actual = [count_in(&parts.delta), count_in(&parts.nx), count_in(&parts.pxy)];
    if predicted.iter().zip(actual.iter()).any(|(p, &a)| *p != a as i64) {
        return Err(Error::NotAmplyRegular);
    }
    Ok(NeighborProfile { ell, in_delta: actual[0], in_nx: actual[1], in_pxy: actual[2] })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityRelation {
    Strict,
    Equal,
    Violated,
}

/// Both sides of d(d-α-1) ≤ (n-d-1)β for an amply regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCheck {
    pub params: SrgParams,
    pub lhs: u64,
    pub rhs: u64,
    pub relation: IdentityRelation,
}

pub fn parameter_identity_check(g: &Graph) -> Result<IdentityCheck> {
    let params = classify_regularity(g).params().ok_or(Error::NotAmplyRegular)?;
    let (lhs, rhs) = identity_sides(params);
    let relation = match lhs.cmp(&rhs) {
        core::cmp::Ordering::Less => IdentityRelation::Strict,
        core::cmp::Ordering::Equal => IdentityRelation::Equal,
        core::cmp::Ordering::Greater => IdentityRelation::Violated,
    };
    Ok(IdentityCheck { params, lhs, rhs, relation })
}
