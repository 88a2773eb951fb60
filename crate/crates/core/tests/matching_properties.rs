//! Matching results against a simple augmenting-path matcher and exhaustive
//! Hall checks.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regcurv_core::generators::{catalog, random_regular};
use regcurv_core::matching::{
    hall_reduction_check, local_perfect_matching, max_matching, sharpness_equivalence, BipartiteInstance,
};

/// Kuhn's algorithm: one augmenting DFS per left vertex.
fn kuhn_size(left: usize, right: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![Vec::new(); left];
    for &(i, j) in edges {
        adj[i].push(j);
    }
    let mut owner = vec![usize::MAX; right];
    fn try_kuhn(i: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [usize]) -> bool {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                if owner[j] == usize::MAX || try_kuhn(owner[j], adj, seen, owner) {
                    owner[j] = i;
                    return true;
                }
            }
        }
        false
    }
    (0..left).filter(|&i| try_kuhn(i, &adj, &mut vec![false; right], &mut owner)).count()
}

fn random_instance(rng: &mut ChaCha8Rng, left: usize, right: usize, p: f64) -> BipartiteInstance {
    let edges = (0..left)
        .flat_map(|i| (0..right).map(move |j| (i, j)))
        .filter(|_| rng.random_bool(p))
        .collect::<Vec<_>>();
    BipartiteInstance::with_sizes(left, right, edges).unwrap()
}

fn check_result(b: &BipartiteInstance) {
    let r = max_matching(b);
    assert_eq!(r.pairs.len(), kuhn_size(b.left.len(), b.right.len(), &b.edges));
    let mut used_l = vec![false; b.left.len()];
    let mut used_r = vec![false; b.right.len()];
    for &(i, j) in &r.pairs {
        assert!(b.edges.binary_search(&(i, j)).is_ok());
        assert!(!used_l[i] && !used_r[j]);
        used_l[i] = true;
        used_r[j] = true;
    }
    let balanced = b.left.len() == b.right.len();
    if balanced {
        assert_eq!(r.perfect, r.violator.is_none());
    }
    if let Some(s) = &r.violator {
        assert!(b.neighborhood(s).len() < s.len());
    }
}

#[test]
fn hopcroft_karp_matches_kuhn_on_random_50x50() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..300 {
        let p = [0.01, 0.03, 0.06, 0.1, 0.3][trial % 5];
        check_result(&random_instance(&mut rng, 50, 50, p));
    }
    for _ in 0..100 {
        let (l, r) = (rng.random_range(0..12), rng.random_range(0..12));
        check_result(&random_instance(&mut rng, l, r, 0.25));
    }
}

fn hall_oracle(b: &BipartiteInstance, small_only: bool) -> bool {
    let m = b.left.len();
    let sides = [b.clone(), {
        let swapped = b.edges.iter().map(|&(i, j)| (j, i)).collect();
        BipartiteInstance::with_sizes(m, m, swapped).unwrap()
    }];
    let limit = if small_only { m.div_ceil(2) } else { m };
    let sides = if small_only { &sides[..] } else { &sides[..1] };
    sides.iter().all(|inst| {
        (1u32..(1 << m)).all(|mask| {
            let s: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            s.len() > limit || inst.neighborhood(&s).len() >= s.len()
        })
    })
}

#[test]
fn hall_reduction_lemma_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..1000 {
        let m = rng.random_range(1..=10);
        let p = rng.random_range(0.05..0.6);
        let b = random_instance(&mut rng, m, m, p);
        let r = hall_reduction_check(&b).unwrap();
        assert_eq!(r.hypothesis_holds, hall_oracle(&b, true));
        assert_eq!(r.full_hall_holds, hall_oracle(&b, false));
        assert_eq!(r.full_hall_holds, max_matching(&b).perfect);
        assert!(!(r.hypothesis_holds && !r.full_hall_holds));
    }
}

proptest! {
    #[test]
    fn violator_recount(edges in prop::collection::btree_set((0usize..8, 0usize..8), 0..30)) {
        let b = BipartiteInstance::with_sizes(8, 8, edges.into_iter().collect()).unwrap();
        let r = max_matching(&b);
        prop_assert_eq!(r.perfect, r.violator.is_none());
        if let Some(s) = r.violator {
            prop_assert!(b.neighborhood(&s).len() < s.len());
        }
    }
}

#[test]
fn equivalence_on_catalog_and_random_graphs() {
    let mut graphs: Vec<_> = catalog().into_iter().map(|e| e.graph).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let d = rng.random_range(3..=8);
        let mut n = rng.random_range(d + 2..=40);
        if n * d % 2 == 1 {
            n += 1;
        }
        graphs.push(random_regular(n, d, &mut rng).unwrap());
    }
    for g in &graphs {
        for (x, y) in g.edges() {
            assert!(sharpness_equivalence(g, x, y).unwrap().agree);
            let r = local_perfect_matching(g, x, y).unwrap();
            if let Some(s) = &r.violator {
                let inst = regcurv_core::matching::local_instance(g, x, y).unwrap();
                assert!(inst.neighborhood(s).len() < s.len());
            }
        }
    }
}
