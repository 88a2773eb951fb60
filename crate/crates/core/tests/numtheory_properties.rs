//! Pattern witnesses: affine invariance and agreement with the Paley local
//! matching.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regcurv_core::generators::paley_graph;
use regcurv_core::matching::local_perfect_matching;
use regcurv_core::numtheory::{find_pattern_witness, verify_corollary, CorollaryMode};
use regcurv_core::FiniteField;

fn random_subset(rng: &mut ChaCha8Rng, q: u64, x: u64, y: u64, size: usize) -> Vec<u64> {
    let pool: Vec<u64> = (0..q).filter(|&i| i != x && i != y).collect();
    rand::seq::index::sample(rng, pool.len(), size).into_iter().map(|i| pool[i]).collect()
}

#[test]
fn affine_symmetry_audit() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for q in [13u64, 25, 29] {
        let f = FiniteField::with_order(q).unwrap();
        let squares = f.square_table();
        let nonzero_squares: Vec<u64> = (1..q).filter(|&i| squares[i as usize]).collect();
        let (x, y) = (f.zero(), f.element(nonzero_squares[0]));
        for _ in 0..100 {
            let a = f.element(nonzero_squares[rng.random_range(0..nonzero_squares.len())]);
            let c = f.element(rng.random_range(0..q));
            let map = |e: &regcurv_core::FieldElement| f.add(&f.mul(&a, e), &c);
            let size = rng.random_range(1..q as usize - 2);
            let s: Vec<_> = random_subset(&mut rng, q, 0, f.index_of(&y), size).into_iter().map(|i| f.element(i)).collect();
            let moved: Vec<_> = s.iter().map(map).collect();
            let before = find_pattern_witness(&f, &x, &y, &s).unwrap().is_some();
            let after = find_pattern_witness(&f, &map(&x), &map(&y), &moved).unwrap().is_some();
            assert_eq!(before, after, "q={q}");
        }
    }
}

/// A witness is an edge wz of P(q) with w ∈ N_x, z ∈ N_y and w, z ∈ S.
/// Removing at most (q−1)/4 − 1 vertices cannot destroy all edges of a
/// perfect matching of size (q−1)/4, so large S always contain one.
#[test]
fn witnesses_are_local_matching_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in [13u64, 17, 29] {
        let g = paley_graph(q).unwrap();
        let f = FiniteField::with_order(q).unwrap();
        let (xi, yi) = (0usize, (1..q as usize).find(|&i| g.has_edge(0, i)).unwrap());
        assert!(local_perfect_matching(&g, xi, yi).unwrap().perfect);
        let nb = g.decompose_edge(xi, yi).unwrap();
        let threshold = 3 * (q as usize - 1) / 4;
        for _ in 0..200 {
            let size = rng.random_range(1..=q as usize - 2);
            let s = random_subset(&mut rng, q, xi as u64, yi as u64, size);
            let elems: Vec<_> = s.iter().map(|&i| f.element(i)).collect();
            let found = find_pattern_witness(&f, &f.element(xi as u64), &f.element(yi as u64), &elems).unwrap();
            let brute = nb.nx.iter().any(|&w| {
                s.contains(&(w as u64)) && nb.ny.iter().any(|&z| s.contains(&(z as u64)) && g.has_edge(w, z))
            });
            assert_eq!(found.is_some(), brute);
            if let Some((w, z)) = &found {
                let (w, z) = (f.index_of(w) as usize, f.index_of(z) as usize);
                assert!(nb.nx.contains(&w) && nb.ny.contains(&z) && g.has_edge(w, z));
            }
            if size >= threshold {
                assert!(found.is_some());
            }
        }
    }
}

#[test]
fn q9_boundary_is_exploratory() {
    // Smallest admissible order; the failure count is reported, not asserted.
    let f = FiniteField::with_order(9).unwrap();
    let y = (1..9).find(|&i| f.is_nonzero_square(&f.element(i))).unwrap();
    let all: Vec<_> = (1..9).filter(|&i| i != y).map(|i| f.element(i)).collect();
    assert!(find_pattern_witness(&f, &f.zero(), &f.element(y), &all).unwrap().is_some());
    let r = verify_corollary(9, CorollaryMode::Exhaustive).unwrap();
    assert_eq!(r.subsets_tested, 8);
    println!("q=9: {} failing subsets of size >= 6", r.failures.len());
}
