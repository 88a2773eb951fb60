//! Normalized Laplacian spectra of strongly regular graphs, in closed form
//! and numerically, and Lichnerowicz sharpness.

use alloc::vec::Vec;
use core::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::regularity::{classify_regularity, RegularityClass, SrgParams};
use crate::transport::{curvature_spectrum, ratio, Rational};

/// Floor square root of a non-negative integer.
pub fn isqrt(n: i128) -> i128 {
    if n < 2 {
        return n.max(0);
    }
    let mut x = libm::sqrt(n as f64) as i128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn perfect_square_root(n: i128) -> Option<i128> {
    let s = isqrt(n);
    (n >= 0 && s * s == n).then_some(s)
}

/// The real number (u + v·√D)/w with w > 0 and D ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub u: i64,
    pub v: i64,
    pub w: i64,
    pub d: i64,
}

impl QuadraticSurd {
    /// The exact value when √D is rational (or v = 0).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.v == 0 {
            return Some(ratio(self.u, self.w));
        }
        let s = perfect_square_root(self.d as i128)? as i64;
        Some(ratio(self.u + self.v * s, self.w))
    }

    pub fn to_f64(&self) -> f64 {
        (self.u as f64 + self.v as f64 * libm::sqrt(self.d as f64)) / self.w as f64
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => {
                let sign = if self.v < 0 { '-' } else { '+' };
                let v = self.v.unsigned_abs();
                if v == 1 {
                    write!(f, "({} {sign} sqrt({}))/{}", self.u, self.d, self.w)
                } else {
                    write!(f, "({} {sign} {v}*sqrt({}))/{}", self.u, self.d, self.w)
                }
            }
        }
    }
}

/// Normalized Laplacian spectrum {0^1, λ2^m2, λ3^m3} of an SRG.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub params: SrgParams,
    pub lambda1: Rational,
    pub lambda2: QuadraticSurd,
    pub lambda3: QuadraticSurd,
    pub m1: u64,
    pub m2: u64,
    pub m3: u64,
}

/// Multiplicities (m2, m3) of λ2 and λ3, required to be positive integers.
/// When √D is irrational only the conference case 2d + (n−1)(α−β) = 0 is
/// feasible, with m2 = m3 = (n−1)/2.
pub fn multiplicities(params: &SrgParams) -> Result<(u64, u64)> {
    let [n, d, a, b] = [params.n, params.d, params.alpha, params.beta].map(|v| v as i128);
    let disc = (a - b) * (a - b) + 4 * (d - b);
    let e = 2 * d + (n - 1) * (a - b);
    match perfect_square_root(disc) {
        Some(s) if s > 0 => {
            let (lo, hi) = ((n - 1) * s - e, (n - 1) * s + e);
            if lo > 0 && hi > 0 && lo % (2 * s) == 0 && hi % (2 * s) == 0 {
                Ok(((lo / (2 * s)) as u64, (hi / (2 * s)) as u64))
            } else {
                Err(Error::InfeasibleParameters)
            }
        }
        _ if e == 0 && n % 2 == 1 => Ok((((n - 1) / 2) as u64, ((n - 1) / 2) as u64)),
        _ => Err(Error::InfeasibleParameters),
    }
}

/// λ2,3 = 1 − ((α−β) ± √D)/(2d) with D = (α−β)² + 4(d−β).
pub fn srg_spectrum(params: &SrgParams) -> Result<SpectrumReport> {
    if !params.satisfies_identity() {
        return Err(Error::NotSrgParameters);
    }
    let (m2, m3) = multiplicities(params)?;
    let (d, a, b) = (params.d as i64, params.alpha as i64, params.beta as i64);
    let disc = (a - b) * (a - b) + 4 * (d - b);
    let u = 2 * d - (a - b);
    Ok(SpectrumReport {
        params: *params,
        lambda1: ratio(0, 1),
        lambda2: QuadraticSurd { u, v: -1, w: 2 * d, d: disc },
        lambda3: QuadraticSurd { u, v: 1, w: 2 * d, d: disc },
        m1: 1,
        m2,
        m3,
    })
}

/// Checks A² = dI + αA + β(J − I − A) entry by entry.
pub fn verify_srg_identity(g: &Graph, params: &SrgParams) -> Result<bool> {
    if g.n() != params.n {
        return Err(Error::InvalidParams(alloc::format!(
            "graph has {} vertices, parameters say {}",
            g.n(),
            params.n
        )));
    }
    if g.regular_degree() != Some(params.d) {
        return Ok(false);
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let want = if g.has_edge(u, v) { params.alpha } else { params.beta };
            if g.common_neighbor_count(u, v) != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest non-zero eigenvalue of L = I − D^{-1/2} A D^{-1/2}, computed
/// with a dense symmetric eigensolver.
pub fn numerical_lambda2(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidGraph("need at least two vertices".into()));
    }
    let scale: Vec<f64> = (0..n).map(|v| 1.0 / libm::sqrt(g.degree(v) as f64)).collect();
    let mut l = DMatrix::<f64>::identity(n, n);
    for u in 0..n {
        for &v in g.neighbors(u) {
            l[(u, v)] -= scale[u] * scale[v];
        }
    }
    let mut eig: Vec<f64> = l.symmetric_eigenvalues().iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig[1])
}

/// λ2 exactly (when parameters are known) and numerically.
#[derive(Debug, Clone, PartialEq)]
pub struct Lambda2 {
    pub exact: Option<QuadraticSurd>,
    pub numeric: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SharpnessReport {
    pub min_kappa: Rational,
    pub lambda2: Lambda2,
    pub sharp: bool,
    /// (2+α)/d when the graph is amply regular.
    pub bound_kappa: Option<Rational>,
}

/// Tolerance for comparisons that involve the numerical eigenvalue.
pub const LAMBDA2_TOLERANCE: f64 = 1e-9;

/// Lichnerowicz report from an already computed minimum edge curvature.
pub fn lichnerowicz_report_from(g: &Graph, min_kappa: Rational) -> Result<SharpnessReport> {
    let numeric = numerical_lambda2(g)?;
    let class = classify_regularity(g);
    let exact = match class {
        RegularityClass::StronglyRegular(p) => Some(srg_spectrum(&p)?.lambda2),
        _ => None,
    };
    let sharp = match exact {
        Some(l2) => l2.as_rational().is_some_and(|r| r == min_kappa),
        None => libm::fabs(rational_to_f64(&min_kappa) - numeric) < LAMBDA2_TOLERANCE,
    };
    let bound_kappa = class.params().map(|p| ratio(2 + p.alpha as i64, p.d as i64));
    Ok(SharpnessReport { min_kappa, lambda2: Lambda2 { exact, numeric }, sharp, bound_kappa })
}

pub fn lichnerowicz_report(g: &Graph) -> Result<SharpnessReport> {
    let spectrum = curvature_spectrum(g)?;
    lichnerowicz_report_from(g, spectrum.min_kappa)
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// The three degree/parameter families left by the eigenvalue argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CandidateFamily {
    /// d = α + 4, β = α.
    A,
    /// d = α + 3, β = α + 1.
    B,
    /// d = α + 2, β = α + 2 (cocktail party parameters).
    C,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpCandidate {
    pub family: CandidateFamily,
    pub params: SrgParams,
    pub lambda2: Rational,
    /// λ2 = (2+α)/d.
    pub verified: bool,
}

/// Parameter sets with β ≥ α whose λ2 can reach (2+α)/d: d ∈ {α+2, α+3,
/// α+4}, β ≤ 2α − d + 4, integral n, rational √D and positive integral
/// multiplicities. Families A and B are bounded by `max_alpha`, family C by
/// its index k = n/2 ≤ `max_k`.
pub fn enumerate_sharp_candidates(max_alpha: usize, max_k: usize) -> Vec<SharpCandidate> {
    let mut out = Vec::new();
    let alpha_top = max_alpha.max(2 * max_k);
    for a in 0..=alpha_top {
        for d in a + 2..=a + 4 {
            let family = match d - a {
                2 => CandidateFamily::C,
                3 => CandidateFamily::B,
                _ => CandidateFamily::A,
            };
            for b in a.max(1)..=(2 * a + 4 - d).min(d) {
                let lhs = d * (d - a - 1);
                if lhs % b != 0 || lhs == 0 {
                    continue;
                }
                let n = d + 1 + lhs / b;
                let in_range = match family {
                    CandidateFamily::C => n % 2 == 0 && n / 2 <= max_k,
                    _ => a <= max_alpha,
                };
                if !in_range {
                    continue;
                }
                let Ok(params) = SrgParams::new(n, d, a, b) else { continue };
                let Ok(spec) = srg_spectrum(&params) else { continue };
                let Some(lambda2) = spec.lambda2.as_rational() else { continue };
                let verified = lambda2 == ratio(2 + a as i64, d as i64);
                out.push(SharpCandidate { family, params, lambda2, verified });
            }
        }
    }
    out.sort_by_key(|c| (c.family, c.params.alpha, c.params.n));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, hypercube, paley_graph, petersen, rook, shrikhande};

    fn p(n: usize, d: usize, a: usize, b: usize) -> SrgParams {
        SrgParams::new(n, d, a, b).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        let s = srg_spectrum(&p(9, 4, 1, 2)).unwrap();
        assert_eq!((s.lambda2.as_rational(), s.lambda3.as_rational()), (Some(ratio(3, 4)), Some(ratio(3, 2))));
        assert_eq!((s.m2, s.m3), (4, 4));
        let s = srg_spectrum(&p(10, 3, 0, 1)).unwrap();
        assert_eq!((s.lambda2.as_rational(), s.lambda3.as_rational()), (Some(ratio(2, 3)), Some(ratio(5, 3))));
        assert_eq!((s.m2, s.m3), (5, 4));
        let s = srg_spectrum(&p(4, 2, 0, 2)).unwrap();
        assert_eq!((s.lambda2.as_rational(), s.lambda3.as_rational()), (Some(ratio(1, 1)), Some(ratio(2, 1))));
        assert_eq!((s.m2, s.m3), (2, 1));
        let s = srg_spectrum(&p(13, 6, 2, 3)).unwrap();
        assert_eq!(s.lambda2.as_rational(), None);
        assert_eq!((s.m2, s.m3), (6, 6));
        assert_eq!(srg_spectrum(&p(13, 6, 2, 2)), Err(Error::NotSrgParameters));
    }

    #[test]
    fn identity_examples() {
        assert!(verify_srg_identity(&paley_graph(13).unwrap(), &p(13, 6, 2, 3)).unwrap());
        assert!(verify_srg_identity(&shrikhande(), &p(16, 6, 2, 2)).unwrap());
        assert!(verify_srg_identity(&rook(4).unwrap(), &p(16, 6, 2, 2)).unwrap());
        assert!(!verify_srg_identity(&hypercube(3).unwrap(), &p(8, 3, 0, 2)).unwrap());
        assert!(verify_srg_identity(&petersen(), &p(16, 6, 2, 2)).is_err());
    }

    #[test]
    fn numerical_examples() {
        assert!((numerical_lambda2(&complete(5).unwrap()).unwrap() - 1.25).abs() < 1e-9);
        assert!((numerical_lambda2(&petersen()).unwrap() - 2.0 / 3.0).abs() < 1e-9);
        assert!((numerical_lambda2(&paley_graph(9).unwrap()).unwrap() - 0.75).abs() < 1e-9);
    }

    #[test]
    fn lichnerowicz_examples() {
        let r = lichnerowicz_report(&paley_graph(9).unwrap()).unwrap();
        assert!(r.sharp && r.min_kappa == ratio(3, 4));
        let r = lichnerowicz_report(&shrikhande()).unwrap();
        assert!(!r.sharp && r.min_kappa == ratio(1, 3));
        assert_eq!(r.lambda2.exact.unwrap().as_rational(), Some(ratio(2, 3)));
        assert!(!lichnerowicz_report(&petersen()).unwrap().sharp);
    }

    #[test]
    fn candidate_enumeration() {
        let c = enumerate_sharp_candidates(12, 6);
        let got: Vec<_> = c.iter().map(|c| (c.params.n, c.params.d, c.params.alpha, c.params.beta)).collect();
        assert_eq!(
            got,
            [
                (16, 6, 2, 2),
                (15, 8, 4, 4),
                (16, 10, 6, 6),
                (21, 16, 12, 12),
                (10, 3, 0, 1),
                (9, 4, 1, 2),
                (10, 6, 3, 4),
                (4, 2, 0, 2),
                (6, 4, 2, 4),
                (8, 6, 4, 6),
                (10, 8, 6, 8),
                (12, 10, 8, 10),
            ]
        );
        assert!(c.iter().all(|c| c.verified));
        assert_eq!(enumerate_sharp_candidates(40, 6), c);
    }

    #[test]
    fn isqrt_edges() {
        for n in 0..2000i128 {
            let s = isqrt(n);
            assert!(s * s <= n && (s + 1) * (s + 1) > n);
        }
    }
}
