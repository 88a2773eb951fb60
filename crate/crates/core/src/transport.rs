//! Exact Wasserstein distances and the two curvature notions.
//!
//! Lin–Lu–Yau curvature of a d-regular graph is computed from an optimal
//! bijection between the exclusive neighbourhoods of an edge. The
//! p-Ollivier curvature goes through a min-cost flow on arbitrary measures;
//! the two paths share nothing beyond BFS.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::assignment::lex_min_assignment;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Graph, VertexId};

pub type Rational = BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A finitely supported probability measure on the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityMeasure {
    support: Vec<(VertexId, Rational)>,
}

impl ProbabilityMeasure {
    /// Masses must be positive and sum to exactly 1. Repeated vertices are
    /// merged; the support is kept sorted by vertex.
    pub fn new(entries: impl IntoIterator<Item = (VertexId, Rational)>) -> Result<Self> {
        let mut support: Vec<(VertexId, Rational)> = Vec::new();
        for (v, m) in entries {
            if !m.is_positive() {
                return Err(Error::InvalidMeasure(format!("mass {m} at vertex {v} is not positive")));
            }
            support.push((v, m));
        }
        support.sort_by_key(|e| e.0);
        support.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += &b.1;
                true
            } else {
                false
            }
        });
        let total: Rational = support.iter().map(|e| &e.1).sum();
        if !total.is_one() {
            return Err(Error::InvalidMeasure(format!("masses sum to {total}")));
        }
        Ok(Self { support })
    }

    pub fn point(v: VertexId) -> Self {
        Self { support: vec![(v, Rational::one())] }
    }

    /// Uniform measure on a non-empty vertex set.
    pub fn uniform(vertices: &[VertexId]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidMeasure("empty support".into()));
        }
        let m = ratio(1, vertices.len() as i64);
        Self::new(vertices.iter().map(|&v| (v, m.clone())))
    }

    /// μ_x^p: mass p at x and (1 − p)/deg(x) on each neighbour.
    pub fn lazy_walk(g: &Graph, x: VertexId, p: &Rational) -> Result<Self> {
        g.check_vertex(x)?;
        check_idleness(p)?;
        let deg = g.degree(x);
        let rest = Rational::one() - p;
        if deg == 0 || rest.is_zero() {
            return Ok(Self::point(x));
        }
        let share = rest / BigInt::from(deg);
        let mut entries = vec![];
        if p.is_positive() {
            entries.push((x, p.clone()));
        }
        entries.extend(g.neighbors(x).iter().map(|&v| (v, share.clone())));
        Self::new(entries)
    }

    pub fn support(&self) -> &[(VertexId, Rational)] {
        &self.support
    }
}

fn check_idleness(p: &Rational) -> Result<()> {
    if p.is_negative() || *p > Rational::one() {
        Err(Error::InvalidIdleness)
    } else {
        Ok(())
    }
}

/// A coupling of two measures together with its cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportPlan {
    /// `(source, target, mass)` with positive masses, sorted by vertices.
    pub entries: Vec<(VertexId, VertexId, Rational)>,
    pub total_cost: Rational,
}

/// Exact W1 distance and an optimal plan, by min-cost flow after scaling
/// all masses to integers with their common denominator.
pub fn wasserstein_w1(
    g: &Graph,
    mu1: &ProbabilityMeasure,
    mu2: &ProbabilityMeasure,
) -> Result<(Rational, TransportPlan)> {
    for &(v, _) in mu1.support.iter().chain(&mu2.support) {
        g.check_vertex(v)?;
    }
    let lcd = mu1
        .support
        .iter()
        .chain(&mu2.support)
        .fold(BigInt::one(), |acc, (_, m)| acc.lcm(m.denom()));
    let scale = |m: &Rational| -> Result<i64> {
        (m * &lcd).to_integer().to_i64().ok_or(Error::Overflow)
    };
    let total = lcd.to_i64().ok_or(Error::Overflow)?;

    let (a, b) = (mu1.support.len(), mu2.support.len());
    let (source, sink) = (a + b, a + b + 1);
    let mut net = FlowNetwork::new(a + b + 2);
    let mut pair_arcs = Vec::with_capacity(a * b);
    for (i, (u, m)) in mu1.support.iter().enumerate() {
        net.add_arc(source, i, scale(m)?, 0);
        let dist = g.bfs_distances(*u)?;
        for (j, (v, _)) in mu2.support.iter().enumerate() {
            let d = dist[*v].ok_or(Error::InfiniteDistance)?;
            let id = net.add_arc(i, a + j, total, d as i64);
            pair_arcs.push((*u, *v, id));
        }
    }
    for (j, (_, m)) in mu2.support.iter().enumerate() {
        net.add_arc(a + j, sink, scale(m)?, 0);
    }
    let (flow, cost) = net.min_cost_flow(source, sink, total);
    debug_assert_eq!(flow, total);

    let lcd_r = Rational::from_integer(lcd.clone());
    let w1 = Rational::from_integer(BigInt::from(cost)) / &lcd_r;
    let entries = pair_arcs
        .into_iter()
        .filter_map(|(u, v, id)| {
            let f = net.flow(id);
            (f > 0).then(|| (u, v, Rational::from_integer(BigInt::from(f)) / &lcd_r))
        })
        .collect();
    Ok((w1.clone(), TransportPlan { entries, total_cost: w1 }))
}

/// κ_p(x, y) = 1 − W1(μ_x^p, μ_y^p).
pub fn ollivier_kappa_p(g: &Graph, x: VertexId, y: VertexId, p: &Rational) -> Result<Rational> {
    check_idleness(p)?;
    g.check_edge(x, y)?;
    let mx = ProbabilityMeasure::lazy_walk(g, x, p)?;
    let my = ProbabilityMeasure::lazy_walk(g, y, p)?;
    Ok(Rational::one() - wasserstein_w1(g, &mx, &my)?.0)
}

/// Lin–Lu–Yau curvature through idleness 1/(d+1): κ = (d+1)/d · κ_{1/(d+1)}.
/// Independent of [`lly_curvature`]; used to cross-check it.
pub fn lly_curvature_by_transport(g: &Graph, x: VertexId, y: VertexId) -> Result<Rational> {
    let d = g.regular_degree().ok_or(Error::NotRegular)? as i64;
    g.check_edge(x, y)?;
    let kp = ollivier_kappa_p(g, x, y, &ratio(1, d + 1))?;
    Ok(kp * ratio(d + 1, d))
}

/// Curvature of one edge together with the data behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureReport {
    pub edge: (VertexId, VertexId),
    pub kappa: Rational,
    pub delta_size: usize,
    /// (2 + |Δ_xy|)/d.
    pub upper_bound: Rational,
    pub sharp: bool,
    /// Minimum total cost of a bijection N_x → N_y.
    pub min_cost: u64,
    /// The lexicographically smallest optimal bijection, as `(v, φ(v))`.
    pub witness: Vec<(VertexId, VertexId)>,
}

/// Exact Lin–Lu–Yau curvature of an edge of a regular graph:
/// κ = (d + 1 − min_φ Σ d(v, φ(v)))/d over bijections φ: N_x → N_y, with
/// costs capped at 3.
pub fn lly_curvature(g: &Graph, x: VertexId, y: VertexId) -> Result<CurvatureReport> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let nb = g.decompose_edge(x, y)?;
    let cost: Vec<Vec<i64>> = nb
        .nx
        .iter()
        .map(|&v| {
            let dist = g.bfs_bounded(v, 2);
            nb.ny.iter().map(|&u| dist[u].map_or(3, |k| k as i64)).collect()
        })
        .collect();
    let a = lex_min_assignment(&cost);
    let witness = a.row_to_col.iter().enumerate().map(|(i, &j)| (nb.nx[i], nb.ny[j])).collect();
    let d_i = d as i64;
    let kappa = ratio(d_i + 1 - a.cost, d_i);
    let upper_bound = ratio(2 + nb.delta.len() as i64, d_i);
    Ok(CurvatureReport {
        edge: (x, y),
        sharp: kappa == upper_bound,
        kappa,
        delta_size: nb.delta.len(),
        upper_bound,
        min_cost: a.cost as u64,
        witness,
    })
}

/// Per-edge curvatures of a connected regular graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureSpectrum {
    /// One report per edge, in sorted edge order.
    pub reports: Vec<CurvatureReport>,
    pub min_kappa: Rational,
}

impl CurvatureSpectrum {
    /// Assembles a spectrum from reports; they are re-sorted by edge.
    pub fn from_reports(mut reports: Vec<CurvatureReport>) -> Result<Self> {
        reports.sort_by_key(|r| r.edge);
        let min_kappa = reports
            .iter()
            .map(|r| &r.kappa)
            .min()
            .cloned()
            .ok_or_else(|| Error::InvalidGraph("graph has no edges".into()))?;
        Ok(Self { reports, min_kappa })
    }
}

/// Checks the preconditions of [`curvature_spectrum`].
pub fn check_connected_regular(g: &Graph) -> Result<usize> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(d)
}

pub fn curvature_spectrum(g: &Graph) -> Result<CurvatureSpectrum> {
    check_connected_regular(g)?;
    let reports = g.edges().map(|(x, y)| lly_curvature(g, x, y)).collect::<Result<Vec<_>>>()?;
    CurvatureSpectrum::from_reports(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cocktail_party, complete, cycle, paley_graph, petersen, rook, shrikhande};

    #[test]
    fn w1_basic_cases() {
        let c6 = cycle(6).unwrap();
        let mu = ProbabilityMeasure::uniform(&[5, 0, 1]).unwrap();
        let nu = ProbabilityMeasure::uniform(&[0, 1, 2]).unwrap();
        assert_eq!(wasserstein_w1(&c6, &mu, &mu).unwrap().0, Rational::zero());
        assert_eq!(wasserstein_w1(&c6, &mu, &nu).unwrap().0, Rational::one());
        let (w, plan) = wasserstein_w1(&c6, &ProbabilityMeasure::point(0), &ProbabilityMeasure::point(3)).unwrap();
        assert_eq!(w, ratio(3, 1));
        assert_eq!(plan.entries, [(0, 3, Rational::one())]);
    }

    #[test]
    fn w1_identity_plan() {
        let g = petersen();
        let mu = ProbabilityMeasure::lazy_walk(&g, 0, &ratio(1, 4)).unwrap();
        let (w, plan) = wasserstein_w1(&g, &mu, &mu).unwrap();
        assert!(w.is_zero());
        assert!(plan.entries.iter().all(|(u, v, _)| u == v));
    }

    #[test]
    fn w1_disconnected_supports() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let r = wasserstein_w1(&g, &ProbabilityMeasure::point(0), &ProbabilityMeasure::point(2));
        assert_eq!(r, Err(Error::InfiniteDistance));
    }

    #[test]
    fn measure_validation() {
        assert!(ProbabilityMeasure::new([(0, ratio(1, 2))]).is_err());
        assert!(ProbabilityMeasure::new([(0, ratio(3, 2)), (1, ratio(-1, 2))]).is_err());
        let m = ProbabilityMeasure::new([(1, ratio(1, 2)), (1, ratio(1, 4)), (0, ratio(1, 4))]).unwrap();
        assert_eq!(m.support(), [(0, ratio(1, 4)), (1, ratio(3, 4))]);
    }

    #[test]
    fn kappa_p_examples() {
        let k5 = complete(5).unwrap();
        assert_eq!(ollivier_kappa_p(&k5, 0, 1, &ratio(1, 5)).unwrap(), Rational::one());
        assert_eq!(ollivier_kappa_p(&k5, 0, 1, &Rational::one()).unwrap(), Rational::zero());
        let c6 = cycle(6).unwrap();
        assert_eq!(ollivier_kappa_p(&c6, 0, 1, &ratio(1, 3)).unwrap(), Rational::zero());
        assert_eq!(ollivier_kappa_p(&c6, 0, 1, &ratio(4, 3)), Err(Error::InvalidIdleness));
        assert_eq!(ollivier_kappa_p(&c6, 0, 1, &ratio(-1, 3)), Err(Error::InvalidIdleness));
    }

    #[test]
    fn lly_examples() {
        let k5 = complete(5).unwrap();
        let r = lly_curvature(&k5, 0, 1).unwrap();
        assert_eq!(r.kappa, ratio(5, 4));
        assert!(r.witness.is_empty());
        for (g, expected) in [
            (rook(4).unwrap(), ratio(2, 3)),
            (shrikhande(), ratio(1, 3)),
            (paley_graph(13).unwrap(), ratio(2, 3)),
        ] {
            for (x, y) in g.edges() {
                assert_eq!(lly_curvature(&g, x, y).unwrap().kappa, expected);
            }
        }
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(lly_curvature(&p3, 0, 1), Err(Error::NotRegular));
        assert_eq!(lly_curvature(&k5, 0, 0), Err(Error::NotAnEdge(0, 0)));
    }

    #[test]
    fn spectrum_examples() {
        let s = curvature_spectrum(&petersen()).unwrap();
        assert_eq!(s.reports.len(), 15);
        assert!(s.reports.iter().all(|r| r.kappa.is_zero()));
        assert!(curvature_spectrum(&cocktail_party(3).unwrap()).unwrap().reports.iter().all(|r| r.kappa.is_one()));
        let p9 = curvature_spectrum(&paley_graph(9).unwrap()).unwrap();
        assert_eq!(p9.min_kappa, ratio(3, 4));
        assert!(p9.reports.iter().all(|r| r.kappa == ratio(3, 4) && r.sharp));
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(curvature_spectrum(&two), Err(Error::Disconnected));
    }

    #[test]
    fn two_routes_agree_on_small_graphs() {
        for g in [petersen(), shrikhande(), cycle(6).unwrap(), paley_graph(13).unwrap()] {
            for (x, y) in g.edges() {
                assert_eq!(lly_curvature(&g, x, y).unwrap().kappa, lly_curvature_by_transport(&g, x, y).unwrap());
            }
        }
    }
}
