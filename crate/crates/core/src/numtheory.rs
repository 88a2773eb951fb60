//! Quadratic-residue patterns in GF(q).
//!
//! For x − y a non-zero square, a pattern witness in S is a pair (w, z)
//! with x − w, w − z, z − y non-zero squares and x − z, y − w non-squares.
//! In the Paley graph these are exactly the edges wz with w ∈ N_x, z ∈ N_y,
//! so large S always contain one.

use alloc::vec;
use alloc::vec::Vec;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{prime_power, FieldElement, FiniteField};
use crate::generators::MAX_PALEY_ORDER;

/// Precomputed squares and candidate pairs for a fixed (x, y).
#[derive(Debug, Clone)]
pub struct PatternTable {
    q: usize,
    x: usize,
    y: usize,
    /// Candidate (w, z) element indices in canonical order.
    pairs: Vec<(usize, usize)>,
}

impl PatternTable {
    /// Errors with `InvalidPair` unless x − y is a non-zero square.
    pub fn new(field: &FiniteField, x: &FieldElement, y: &FieldElement) -> Result<Self> {
        let q = field.order() as usize;
        let squares = field.square_table();
        let elems: Vec<FieldElement> = field.elements().collect();
        let sq = |a: usize, b: usize| squares[field.index_of(&field.sub(&elems[a], &elems[b])) as usize];
        let (xi, yi) = (field.index_of(x) as usize, field.index_of(y) as usize);
        if !sq(xi, yi) {
            return Err(Error::InvalidPair);
        }
        let ws: Vec<usize> = (0..q).filter(|&w| sq(xi, w) && !sq(yi, w) && w != yi).collect();
        let zs: Vec<usize> = (0..q).filter(|&z| sq(z, yi) && !sq(xi, z) && z != xi).collect();
        let mut pairs = Vec::new();
        for &w in &ws {
            for &z in &zs {
                if sq(w, z) {
                    pairs.push((w, z));
                }
            }
        }
        Ok(Self { q, x: xi, y: yi, pairs })
    }

    /// First witness (in canonical order) among elements marked in `member`.
    pub fn witness_in(&self, member: &[bool]) -> Option<(usize, usize)> {
        self.pairs.iter().copied().find(|&(w, z)| member[w] && member[z])
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.x, self.y)
    }
}

/// Searches S (any order, duplicates ignored) for a pattern witness.
pub fn find_pattern_witness(
    field: &FiniteField,
    x: &FieldElement,
    y: &FieldElement,
    s: &[FieldElement],
) -> Result<Option<(FieldElement, FieldElement)>> {
    let table = PatternTable::new(field, x, y)?;
    let mut member = vec![false; table.q];
    for e in s {
        member[field.index_of(e) as usize] = true;
    }
    member[table.x] = false;
    member[table.y] = false;
    Ok(table
        .witness_in(&member)
        .map(|(w, z)| (field.element(w as u64), field.element(z as u64))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorollaryMode {
    Exhaustive,
    Sampled { seed: u64, trials: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryReport {
    pub q: u64,
    /// Canonical indices of (x, y).
    pub pair: (u64, u64),
    /// Smallest |S| tested: 3(q − 1)/4.
    pub min_size: usize,
    pub subsets_tested: u64,
    /// Failing subsets as sorted element indices; sorted.
    pub failures: Vec<Vec<u64>>,
    pub mode: CorollaryMode,
}

/// Exhaustive runs beyond this many subsets are refused.
pub const MAX_EXHAUSTIVE_SUBSETS: u128 = 50_000_000;

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// Number of subsets of GF(q)∖{x, y} of size ≥ 3(q−1)/4.
pub fn qualifying_subset_count(q: u64) -> u128 {
    let min = 3 * (q - 1) / 4;
    (min..=q - 2).map(|s| binomial(q - 2, s)).sum()
}

fn check_order(q: u64) -> Result<()> {
    if q <= 5 || q % 4 != 1 || prime_power(q).is_none() {
        return Err(Error::InvalidOrder(q));
    }
    if q > MAX_PALEY_ORDER {
        return Err(Error::TooLarge(q));
    }
    Ok(())
}

/// Checks that every S ⊆ GF(q)∖{x, y} with |S| ≥ 3(q−1)/4 contains a
/// pattern witness, for x = 0 and y the first non-zero square. Affine maps
/// t ↦ at + c with a a non-zero square move any such pair to this one.
pub fn verify_corollary(q: u64, mode: CorollaryMode) -> Result<CorollaryReport> {
    check_order(q)?;
    let field = FiniteField::with_order(q)?;
    let squares = field.square_table();
    let y = (1..q as usize).find(|&i| squares[i]).ok_or(Error::InvalidOrder(q))?;
    let table = PatternTable::new(&field, &field.zero(), &field.element(y as u64))?;
    let universe: Vec<usize> = (0..q as usize).filter(|&i| i != 0 && i != y).collect();
    let n = universe.len();
    let min_size = (3 * (q as usize - 1)).div_ceil(4);

    let mut member = vec![false; q as usize];
    let mut failures = Vec::new();
    let mut tested = 0u64;
    let mut test = |chosen: &[usize], member: &mut Vec<bool>| {
        member.iter_mut().for_each(|m| *m = false);
        for &i in chosen {
            member[universe[i]] = true;
        }
        tested += 1;
        if table.witness_in(member).is_none() {
            let mut s: Vec<u64> = chosen.iter().map(|&i| universe[i] as u64).collect();
            s.sort_unstable();
            failures.push(s);
        }
    };

    match mode {
        CorollaryMode::Exhaustive => {
            let total = qualifying_subset_count(q);
            if total > MAX_EXHAUSTIVE_SUBSETS {
                return Err(Error::TooLarge(total as u64));
            }
            for size in min_size..=n {
                let mut comb: Vec<usize> = (0..size).collect();
                loop {
                    test(&comb, &mut member);
                    if !next_colex(&mut comb, n) {
                        break;
                    }
                }
            }
        }
        CorollaryMode::Sampled { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // Uniform over all qualifying S: pick the size with weight
            // C(n, size) (in log space), then a uniform subset of that size.
            let sizes: Vec<usize> = (min_size..=n).collect();
            let logs: Vec<f64> = sizes.iter().map(|&s| log_binomial(n, s)).collect();
            let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let weights: Vec<f64> = logs.iter().map(|l| libm::exp(l - top)).collect();
            let pick = WeightedIndex::new(&weights).map_err(|_| Error::InvalidOrder(q))?;
            for _ in 0..trials {
                let size = sizes[pick.sample(&mut rng)];
                let chosen = rand::seq::index::sample(&mut rng, n, size).into_vec();
                test(&chosen, &mut member);
            }
        }
    }
    failures.sort();
    Ok(CorollaryReport { q, pair: (0, y as u64), min_size, subsets_tested: tested, failures, mode })
}

fn log_binomial(n: usize, k: usize) -> f64 {
    libm::lgamma(n as f64 + 1.0) - libm::lgamma(k as f64 + 1.0) - libm::lgamma((n - k) as f64 + 1.0)
}

/// Advances `comb` (strictly increasing, values < n) to the next
/// combination in colex order; false after the last one.
pub fn next_colex(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for j in 0..k {
        let limit = if j + 1 < k { comb[j + 1] } else { n };
        if comb[j] + 1 < limit {
            comb[j] += 1;
            for (i, c) in comb.iter_mut().enumerate().take(j) {
                *c = i;
            }
            return true;
        }
    }
    false
}
