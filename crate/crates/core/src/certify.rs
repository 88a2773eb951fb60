//! Curvature certificates from amply regular parameters alone.
//!
//! A parameter set is certified sharp (κ = (2+α)/d on every edge) either by
//! one of the closed-form sufficient conditions, or by showing that no Hall
//! violator S ⊆ N_x can exist: sizes b = 1 by counting rules, and every
//! 2 ≤ b ≤ ⌊(d−α)/2⌋ by a quadratic inequality in the number X of edges
//! between S and its neighbourhood that has no real solution.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::regularity::SrgParams;
use crate::spectral::multiplicities;
use crate::transport::{ratio, Rational};

/// The sufficient conditions checked by [`evaluate_conditions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    One,
    Two,
    Three,
    Four,
    Five,
    /// d ≤ 2β − α − 1.
    Hlx,
    /// α = 0 and β ≥ 2.
    Ll,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::One => "cond1",
            Self::Two => "cond2",
            Self::Three => "cond3",
            Self::Four => "cond4",
            Self::Five => "cond5",
            Self::Hlx => "hlx",
            Self::Ll => "ll",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionReport {
    pub params: SrgParams,
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub cond4: bool,
    pub cond5: bool,
    pub hlx: bool,
    pub ll: bool,
    pub any_holds: bool,
}

impl ConditionReport {
    pub fn holding(&self) -> Vec<Condition> {
        [
            (self.cond1, Condition::One),
            (self.cond2, Condition::Two),
            (self.cond3, Condition::Three),
            (self.cond4, Condition::Four),
            (self.cond5, Condition::Five),
            (self.hlx, Condition::Hlx),
            (self.ll, Condition::Ll),
        ]
        .into_iter()
        .filter_map(|(on, c)| on.then_some(c))
        .collect()
    }
}

/// Evaluates every condition in exact integer arithmetic; square-root
/// comparisons are squared under sign guards.
pub fn evaluate_conditions(params: &SrgParams) -> ConditionReport {
    let [n, d, a, b] = [params.n, params.d, params.alpha, params.beta].map(|v| v as i128);
    let small_outer = n < 3 * d - 2 * a;

    let t = 2 * d - 2 * a - 3;
    let cond1 = b == a + 1 && small_outer && t > 0 && t * t > 24 * a + 1;
    let cond2 = b == a + 2 && small_outer && t >= 0 && t * t >= 40 * a + 41;

    let radicand = 4 * a * a - 3 * b * b + 4 * a + 24 * b - 20;
    let s = 2 * d - 3 * b;
    let cond3 = b > a + 2 && small_outer && radicand >= 0 && s * s >= radicand;

    let cond4 = b >= 7 && 3 * (b - 7) * (b - 7) >= 4 * a * a && small_outer;

    let cond5 = {
        let base = b <= a && 2 * n < 5 * d - 3 * a && a > 0 && a * d >= a * (2 * a + 3) - (b - 1) * (b - 1);
        let num = 2 * d * d - 4 * b * d + 7 * b * b + d - 14 * b + 7;
        let den = 6 * b - d - 1;
        base && match den.signum() {
            1 => a * den <= num,
            -1 => a * den >= num,
            _ => false,
        }
    };

    let hlx = d < 2 * b - a;
    let ll = a == 0 && b >= 2;
    ConditionReport {
        params: *params,
        cond1,
        cond2,
        cond3,
        cond4,
        cond5,
        hlx,
        ll,
        any_holds: cond1 || cond2 || cond3 || cond4 || cond5 || hlx || ll,
    }
}

/// Which bound is used for the pair count inside P_xy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OuterBound {
    /// Cauchy with the exact |P_xy| = n − 2d + α bins.
    Exact,
    /// Cauchy with d − α − 1 bins; valid when |P_xy| ≤ d − α − 1.
    Relaxed,
}

/// The b-independent pieces of the obstruction quadratic:
/// a2 = x2_fixed + 1/(2(b−1)), a1 = x1_per_b·b, a0 = c_b2·b² + c_b1·b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterCoefficients {
    pub x2_fixed: Rational,
    pub x1_per_b: Rational,
    pub c_b2: Rational,
    pub c_b1: Rational,
}

/// Inequality a2·X² + a1·X + a0 ≤ 0 that any Hall violator of size b forces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionQuadratic {
    pub b: u64,
    pub a2: Rational,
    pub a1: Rational,
    pub a0: Rational,
    pub discriminant: Rational,
    /// Whether some real X satisfies the inequality.
    pub feasible: bool,
}

struct Shape {
    alpha: Rational,
    outer: Rational,
    m: Rational,
    beta: Rational,
    d: Rational,
    max_ab: Rational,
}

fn shape(params: &SrgParams, bound: OuterBound) -> Result<Shape> {
    let (n, d, a, b) = (params.n as i64, params.d as i64, params.alpha as i64, params.beta as i64);
    let m = d - a - 1;
    let p = n - 2 * d + a;
    if a == 0 {
        return Err(Error::DegenerateParameters("alpha = 0".into()));
    }
    if m <= 0 {
        return Err(Error::DegenerateParameters("d - alpha - 1 = 0".into()));
    }
    if p <= 0 {
        return Err(Error::DegenerateParameters(format!("n - 2d + alpha = {p}")));
    }
    let outer = match bound {
        OuterBound::Exact => p,
        OuterBound::Relaxed => m,
    };
    let r = |v: i64| ratio(v, 1);
    Ok(Shape { alpha: r(a), outer: r(outer), m: r(m), beta: r(b), d: r(d), max_ab: r(a.max(b)) })
}

pub fn master_coefficients(params: &SrgParams) -> Result<MasterCoefficients> {
    master_coefficients_with(params, OuterBound::Exact)
}

pub fn master_coefficients_with(params: &SrgParams, bound: OuterBound) -> Result<MasterCoefficients> {
    let s = shape(params, bound)?;
    let one = ratio(1, 1);
    let half = ratio(1, 2);
    // Per unit b, the linear terms of the four edge counts:
    // Δ_xy: (β−1)b − X, P_xy: (d−α−1)b − X, N_x: (α−β+1)b + X.
    let k1 = &s.beta - &one;
    let k2 = s.m.clone();
    let k4 = &s.alpha - &s.beta + &one;
    let x2_fixed = &half * (s.alpha.recip() + s.outer.recip() + s.m.recip());
    let x1_per_b = -(&k1 / &s.alpha) - &k2 / &s.outer + &k4 / &s.m;
    let c_b2 = &half * (&k1 * &k1 / &s.alpha + &k2 * &k2 / &s.outer + &k4 * &k4 / &s.m)
        + &half * (&one - &s.max_ab);
    let c_b1 = &half * (&s.max_ab - &s.d);
    Ok(MasterCoefficients { x2_fixed, x1_per_b, c_b2, c_b1 })
}

pub fn obstruction_quadratic(params: &SrgParams, b: u64) -> Result<ObstructionQuadratic> {
    obstruction_quadratic_with(params, b, OuterBound::Exact)
}

pub fn obstruction_quadratic_with(params: &SrgParams, b: u64, bound: OuterBound) -> Result<ObstructionQuadratic> {
    if b < 2 {
        return Err(Error::UseBOneCheck);
    }
    let mc = master_coefficients_with(params, bound)?;
    let bi = ratio(b as i64, 1);
    let a2 = &mc.x2_fixed + ratio(1, 2 * (b as i64 - 1));
    let a1 = &mc.x1_per_b * &bi;
    let a0 = &mc.c_b2 * &bi * &bi + &mc.c_b1 * &bi;
    let discriminant = &a1 * &a1 - ratio(4, 1) * &a2 * &a0;
    // a2 > 0 always holds here, so solutions exist iff the discriminant is ≥ 0.
    let feasible = !discriminant.is_negative();
    Ok(ObstructionQuadratic { b, a2, a1, a0, discriminant, feasible })
}

/// Why a single-vertex violator (b = 1) cannot exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BOneRule {
    /// β − 1 > α: the vertex would need more common neighbours than Δ_xy has.
    TooFewCommonNeighbours,
    /// n − 2d + α < d − α − 1: P_xy cannot hold its remaining neighbours.
    TooFewOuterVertices,
    /// β = α + 1 and |P_xy| = d − α − 1: counting common neighbours with
    /// another vertex of N_x and with a vertex of N_y forces d − α − 1 to be
    /// both even and odd.
    Parity,
}

impl fmt::Display for BOneRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::TooFewCommonNeighbours => "beta-1>alpha",
            Self::TooFewOuterVertices => "|P|<d-alpha-1",
            Self::Parity => "parity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepTranscript {
    pub b_one: BOneRule,
    /// One infeasible quadratic per b in 2..=⌊(d−α)/2⌋.
    pub per_b: Vec<ObstructionQuadratic>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InconclusiveReason {
    Degenerate(String),
    /// None of the b = 1 rules applies.
    BOne,
    /// The quadratic admits a real solution at this b.
    FeasibleAt(u64),
}

impl fmt::Display for InconclusiveReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Degenerate(why) => write!(f, "degenerate parameters ({why})"),
            Self::BOne => f.write_str("no b = 1 rule applies"),
            Self::FeasibleAt(b) => write!(f, "obstruction quadratic feasible at b = {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    SharpByCondition(Vec<Condition>),
    SharpByDiscriminantSweep(SweepTranscript),
    Inconclusive(InconclusiveReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub params: SrgParams,
    pub outcome: Outcome,
    /// (2+α)/d, present exactly when the outcome is sharp.
    pub certified_kappa: Option<Rational>,
}

impl Certificate {
    pub fn is_sharp(&self) -> bool {
        self.certified_kappa.is_some()
    }

    pub fn by_sweep(&self) -> bool {
        matches!(self.outcome, Outcome::SharpByDiscriminantSweep(_))
    }
}

fn b_one_rule(params: &SrgParams) -> Option<BOneRule> {
    let (n, d, a, b) = (params.n as i64, params.d as i64, params.alpha as i64, params.beta as i64);
    let m = d - a - 1;
    let p = n - 2 * d + a;
    if b - 1 > a {
        Some(BOneRule::TooFewCommonNeighbours)
    } else if p < m {
        Some(BOneRule::TooFewOuterVertices)
    } else if b == a + 1 && p == m && m >= 2 {
        Some(BOneRule::Parity)
    } else {
        None
    }
}

/// Runs the sweep without consulting the closed-form conditions.
pub fn discriminant_sweep(params: &SrgParams) -> core::result::Result<SweepTranscript, InconclusiveReason> {
    if let Err(Error::DegenerateParameters(why)) = shape(params, OuterBound::Exact) {
        return Err(InconclusiveReason::Degenerate(why));
    }
    let b_one = b_one_rule(params).ok_or(InconclusiveReason::BOne)?;
    let top = ((params.d - params.alpha) / 2) as u64;
    let mut per_b = Vec::new();
    for b in 2..=top {
        let q = obstruction_quadratic(params, b).map_err(|e| InconclusiveReason::Degenerate(format!("{e}")))?;
        if q.feasible {
            return Err(InconclusiveReason::FeasibleAt(b));
        }
        per_b.push(q);
    }
    Ok(SweepTranscript { b_one, per_b })
}

pub fn certify_curvature(params: &SrgParams) -> Certificate {
    let report = evaluate_conditions(params);
    let outcome = if report.any_holds {
        Outcome::SharpByCondition(report.holding())
    } else {
        match discriminant_sweep(params) {
            Ok(t) => Outcome::SharpByDiscriminantSweep(t),
            Err(reason) => Outcome::Inconclusive(reason),
        }
    };
    let certified_kappa = (!matches!(outcome, Outcome::Inconclusive(_)))
        .then(|| ratio(2 + params.alpha as i64, params.d as i64));
    Certificate { params: *params, outcome, certified_kappa }
}

/// One feasible strongly regular parameter set found by the scanner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub params: SrgParams,
    pub multiplicities_integral: bool,
    pub identity_holds: bool,
    pub conditions: ConditionReport,
    pub conference: bool,
    pub certificate: Certificate,
}

/// Largest order accepted by [`scan_parameters`].
pub const MAX_SCAN_ORDER: usize = 4096;

/// Feasible parameter sets on exactly `n` vertices, ordered by (d, α).
///
/// Complete graphs (n = d + 1) are skipped; for the rest β is determined by
/// d(d−α−1) = (n−d−1)β and the eigenvalue multiplicities must be positive
/// integers.
pub fn scan_order(n: usize) -> Vec<ScanRow> {
    let mut rows = Vec::new();
    for d in 1..n.saturating_sub(1) {
        let outer = n - d - 1;
        for a in 0..d {
            let lhs = d * (d - a - 1);
            if lhs == 0 || lhs % outer != 0 {
                continue;
            }
            let b = lhs / outer;
            if b > d {
                continue;
            }
            let Ok(params) = SrgParams::new(n, d, a, b) else { continue };
            if multiplicities(&params).is_err() {
                continue;
            }
            let conditions = evaluate_conditions(&params);
            rows.push(ScanRow {
                params,
                multiplicities_integral: true,
                identity_holds: true,
                conditions,
                conference: params.is_conference(),
                certificate: certify_curvature(&params),
            });
        }
    }
    rows
}

pub fn scan_parameters(max_n: usize) -> Result<Vec<ScanRow>> {
    if max_n > MAX_SCAN_ORDER {
        return Err(Error::TooLarge(max_n as u64));
    }
    Ok((3..=max_n).flat_map(scan_order).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, d: usize, a: usize, b: usize) -> SrgParams {
        SrgParams::new(n, d, a, b).unwrap()
    }

    #[test]
    fn condition_examples() {
        let r = evaluate_conditions(&p(29, 14, 6, 7));
        assert!(r.cond1 && r.any_holds);
        assert!(!evaluate_conditions(&p(25, 12, 5, 6)).cond1);
        assert!(evaluate_conditions(&p(275, 112, 30, 56)).cond4);
        let r = evaluate_conditions(&p(16, 6, 2, 2));
        assert!(!r.any_holds);
    }

    #[test]
    fn example_324_coefficients() {
        let mc = master_coefficients(&p(324, 152, 70, 72)).unwrap();
        assert_eq!(mc.x2_fixed, ratio(107, 5670));
        assert_eq!(mc.x1_per_b, ratio(-5462, 2835));
        assert_eq!(mc.c_b2, ratio(104791, 2835));
        assert_eq!(mc.c_b1, ratio(-40, 1));
        for b in 2..=41 {
            assert!(!obstruction_quadratic(&p(324, 152, 70, 72), b).unwrap().feasible, "b={b}");
        }
        let c = certify_curvature(&p(324, 152, 70, 72));
        assert_eq!(c.certified_kappa, Some(ratio(9, 19)));
        match c.outcome {
            Outcome::SharpByDiscriminantSweep(t) => {
                assert_eq!(t.b_one, BOneRule::TooFewCommonNeighbours);
                assert_eq!(t.per_b.len(), 40);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn conference_gamma_five_relaxed_quadratic() {
        let q = obstruction_quadratic_with(&p(21, 10, 4, 5), 3, OuterBound::Relaxed).unwrap();
        let two = ratio(2, 1);
        assert_eq!((&q.a2 * &two, &q.a1 * &two, &q.a0 * &two), (ratio(23, 20), ratio(-12, 1), ratio(30, 1)));
    }

    #[test]
    fn certify_examples() {
        let c = certify_curvature(&p(16, 6, 2, 2));
        assert_eq!(c.outcome, Outcome::Inconclusive(InconclusiveReason::BOne));
        assert_eq!(c.certified_kappa, None);
        let c = certify_curvature(&p(29, 14, 6, 7));
        assert_eq!(c.outcome, Outcome::SharpByCondition(alloc::vec![Condition::One]));
        assert_eq!(c.certified_kappa, Some(ratio(4, 7)));
    }

    #[test]
    fn quadratic_errors() {
        assert_eq!(obstruction_quadratic(&p(29, 14, 6, 7), 1), Err(Error::UseBOneCheck));
        assert!(matches!(obstruction_quadratic(&p(10, 3, 0, 1), 2), Err(Error::DegenerateParameters(_))));
    }

    #[test]
    fn scan_examples() {
        let rows = scan_parameters(29).unwrap();
        let r = rows.iter().find(|r| r.params == p(29, 14, 6, 7)).unwrap();
        assert!(r.conditions.cond1 && r.conference);
        let r = rows.iter().find(|r| r.params == p(16, 6, 2, 2)).unwrap();
        assert!(!r.conditions.any_holds);
        assert!(rows.iter().any(|r| r.params == p(10, 3, 0, 1)));
        assert!(rows.iter().all(|r| r.params.satisfies_identity()));
        assert!(scan_parameters(5000).is_err());
    }
}
