//! Regularity classification, neighbour profiles and distances against
//! direct counting.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regcurv_core::generators::{catalog, hypercube, random_regular};
use regcurv_core::regularity::{neighbor_profile, parameter_identity_check, IdentityRelation};
use regcurv_core::{classify_regularity, Graph, RegularityClass};

fn corpus() -> Vec<(String, Graph)> {
    let mut v: Vec<_> = catalog().into_iter().map(|e| (e.label, e.graph)).collect();
    v.push(("hypercube(3)".into(), hypercube(3).unwrap()));
    v
}

#[test]
fn neighbor_profiles_match_brute_force() {
    for (label, g) in corpus() {
        let params = match classify_regularity(&g) {
            RegularityClass::AmplyRegular(p) | RegularityClass::StronglyRegular(p) => p,
            _ => continue,
        };
        for (x, y) in g.edges() {
            let nb = g.decompose_edge(x, y).unwrap();
            for &v in &nb.nx {
                let count = |set: &[usize]| set.iter().filter(|&&u| g.has_edge(v, u)).count();
                let p = neighbor_profile(&g, &params, x, y, v).unwrap();
                assert_eq!(
                    (p.ell, p.in_delta, p.in_nx, p.in_pxy),
                    (count(&nb.ny), count(&nb.delta), count(&nb.nx), count(&nb.pxy)),
                    "{label}"
                );
                assert_eq!(p.ell + p.in_delta + p.in_nx + p.in_pxy, params.d - 1);
            }
        }
    }
}

#[test]
fn identity_equality_iff_strongly_regular() {
    for (label, g) in corpus() {
        let class = classify_regularity(&g);
        match parameter_identity_check(&g) {
            Ok(check) => {
                assert_eq!(check.relation == IdentityRelation::Equal, class.is_strongly_regular(), "{label}");
                assert_ne!(check.relation, IdentityRelation::Violated, "{label}");
            }
            Err(_) => assert!(class.params().is_none(), "{label}"),
        }
    }
}

#[test]
fn edge_decomposition_sizes() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut graphs: Vec<Graph> = corpus().into_iter().map(|e| e.1).collect();
    graphs.push(random_regular(30, 5, &mut rng).unwrap());
    for g in graphs {
        let d = g.regular_degree().unwrap();
        for (x, y) in g.edges() {
            let e = g.decompose_edge(x, y).unwrap();
            assert_eq!(e.total(), g.n());
            let a = e.delta.len();
            assert_eq!((e.nx.len(), e.ny.len()), (d - a - 1, d - a - 1));
            assert_eq!(e.pxy.len() + 2 * d, g.n() + a);
        }
    }
}

proptest! {
    #[test]
    fn bfs_triangle_inequality(seed in any::<u64>(), u in 0usize..24, v in 0usize..24, w in 0usize..24) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_regular(24, 3, &mut rng).unwrap();
        let du = g.bfs_distances(u).unwrap();
        let dv = g.bfs_distances(v).unwrap();
        if let (Some(a), Some(b), Some(c)) = (du[v], dv[w], du[w]) {
            prop_assert!(c <= a + b);
        } else {
            // Reachability is an equivalence relation.
            prop_assert!(!(du[v].is_some() && dv[w].is_some()));
        }
        prop_assert_eq!(du[v], dv[u]);
    }
}
