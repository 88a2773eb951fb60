//! Paley graphs and the named families used throughout the crate.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{prime_power, FiniteField};
use crate::graph::Graph;

/// Largest Paley order accepted.
pub const MAX_PALEY_ORDER: u64 = 1 << 16;

/// Paley graph P(q): vertices are the elements of GF(q) in canonical order,
/// adjacent when their difference is a non-zero square.
pub fn paley_graph(q: u64) -> Result<Graph> {
    let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q % 4 != 1 {
        return Err(Error::NotPaleyOrder(q));
    }
    if q > MAX_PALEY_ORDER {
        return Err(Error::TooLarge(q));
    }
    let field = FiniteField::new(p as u64, m)?;
    let squares = field.square_table();
    let elements: Vec<_> = field.elements().collect();
    Ok(Graph::from_fn(q as usize, |u, v| {
        let diff = field.sub(&elements[v], &elements[u]);
        squares[field.index_of(&diff) as usize]
    }))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams("complete graph needs n >= 1".into()));
    }
    Ok(Graph::from_fn(n, |_, _| true))
}

/// K_k □ K_k; vertex (i, j) is numbered i·k + j.
pub fn rook(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("rook graph needs k >= 2, got {k}")));
    }
    Ok(Graph::from_fn(k * k, |u, v| u / k == v / k || u % k == v % k))
}

/// Cayley graph on Z4 × Z4 with connection set ±(1,0), ±(0,1), ±(1,1).
pub fn shrikhande() -> Graph {
    let conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    Graph::from_fn(16, |u, v| {
        let diff = ((v / 4 + 4 - u / 4) % 4, (v % 4 + 4 - u % 4) % 4);
        conn.contains(&diff)
    })
}

/// K_{2k} minus the perfect matching {2i, 2i+1}.
pub fn cocktail_party(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParams("cocktail party needs k >= 1".into()));
    }
    Ok(Graph::from_fn(2 * k, |u, v| u / 2 != v / 2))
}

/// k-subsets of {0..n} as bitmasks, in lexicographic order of their sorted elements.
fn subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            rec(i + 1, n, k - 1, cur | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

/// J(n, k): k-subsets adjacent when they share k - 1 elements.
pub fn johnson(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k >= n || n > 20 {
        return Err(Error::InvalidParams(format!("johnson needs 0 < k < n <= 20, got ({n},{k})")));
    }
    let sets = subsets(n, k);
    Ok(Graph::from_fn(sets.len(), |u, v| (sets[u] & sets[v]).count_ones() as usize == k - 1))
}

/// Kneser(5, 2): 2-subsets of {0..5} adjacent when disjoint.
pub fn petersen() -> Graph {
    let sets = subsets(5, 2);
    Graph::from_fn(sets.len(), |u, v| sets[u] & sets[v] == 0)
}

/// Halved 5-cube: even-weight 5-bit words adjacent at Hamming distance 2.
/// This is the (16,10,6,6) Clebsch graph, the complement of the folded 5-cube.
pub fn clebsch() -> Graph {
    let words: Vec<u32> = (0u32..32).filter(|w| w.count_ones() % 2 == 0).collect();
    Graph::from_fn(words.len(), |u, v| (words[u] ^ words[v]).count_ones() == 2)
}

pub fn hypercube(m: usize) -> Result<Graph> {
    if m == 0 || m > 20 {
        return Err(Error::InvalidParams(format!("hypercube dimension must be in 1..=20, got {m}")));
    }
    Ok(Graph::from_fn(1 << m, |u, v| (u ^ v).count_ones() == 1))
}

/// Optional integer arguments of a named family.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FamilyArgs {
    pub q: Option<u64>,
    pub k: Option<usize>,
    pub n: Option<usize>,
}

/// Builds a graph by family name. `hypercube` takes its dimension from `k`.
pub fn named_graph(name: &str, args: FamilyArgs) -> Result<Graph> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::InvalidParams(format!("{name} needs --{flag}")))
    };
    match name {
        "paley" => paley_graph(args.q.ok_or_else(|| Error::InvalidParams("paley needs --q".into()))?),
        "rook" => rook(need(args.k, "k")?),
        "shrikhande" => Ok(shrikhande()),
        "cocktail_party" => cocktail_party(need(args.k, "k")?),
        "johnson" => johnson(need(args.n, "n")?, need(args.k, "k")?),
        "clebsch" => Ok(clebsch()),
        "petersen" => Ok(petersen()),
        "cycle" => cycle(need(args.n, "n")?),
        "complete" => complete(need(args.n, "n")?),
        "hypercube" => hypercube(need(args.k, "k")?),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// Uniformly-ish random simple d-regular graph by incremental pairing with
/// restarts. Needs n·d even and d < n.
pub fn random_regular<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Result<Graph> {
    if d >= n || (n * d) % 2 == 1 {
        return Err(Error::InvalidParams(format!("no {d}-regular graph on {n} vertices")));
    }
    'restart: loop {
        let mut points: Vec<usize> = (0..n).flat_map(|v| core::iter::repeat(v).take(d)).collect();
        points.shuffle(rng);
        let mut adj = vec![vec![false; n]; n];
        let mut edges = Vec::with_capacity(n * d / 2);
        while let Some(u) = points.pop() {
            let candidates: Vec<usize> = (0..points.len())
                .filter(|&i| points[i] != u && !adj[u][points[i]])
                .collect();
            if candidates.is_empty() {
                continue 'restart;
            }
            let i = candidates[rng.random_range(0..candidates.len())];
            let v = points.swap_remove(i);
            adj[u][v] = true;
            adj[v][u] = true;
            edges.push((u, v));
        }
        return Graph::from_edges(n, edges);
    }
}

/// A graph from the built-in catalog together with its display label.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub label: String,
    pub graph: Graph,
}

fn entry(label: &str, graph: Graph) -> CatalogEntry {
    CatalogEntry { label: label.to_string(), graph }
}

/// Paley orders 4γ+1 ≤ `max_q` that are prime powers, with γ ≥ 1.
pub fn paley_orders(max_q: u64) -> Vec<u64> {
    (5..=max_q).step_by(4).filter(|&q| prime_power(q).is_some()).collect()
}

/// The named-family catalog: every connected regular test graph the crate
/// uses by name. Isomorphic duplicates (rook(2) = CP(2), rook(3) = P(9))
/// are left out.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = vec![
        entry("rook(4)", rook(4).unwrap()),
        entry("rook(5)", rook(5).unwrap()),
        entry("shrikhande", shrikhande()),
    ];
    for k in 2..=6 {
        out.push(entry(&format!("cocktail_party({k})"), cocktail_party(k).unwrap()));
    }
    out.push(entry("johnson(5,2)", johnson(5, 2).unwrap()));
    out.push(entry("johnson(6,2)", johnson(6, 2).unwrap()));
    out.push(entry("johnson(7,2)", johnson(7, 2).unwrap()));
    out.push(entry("johnson(6,3)", johnson(6, 3).unwrap()));
    out.push(entry("clebsch", clebsch()));
    out.push(entry("petersen", petersen()));
    for n in [6, 7] {
        out.push(entry(&format!("cycle({n})"), cycle(n).unwrap()));
    }
    for n in [4, 5] {
        out.push(entry(&format!("complete({n})"), complete(n).unwrap()));
    }
    for m in [3, 4] {
        out.push(entry(&format!("hypercube({m})"), hypercube(m).unwrap()));
    }
    for q in paley_orders(49) {
        out.push(entry(&format!("paley({q})"), paley_graph(q).unwrap()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regularity::{classify_regularity, RegularityClass, SrgParams};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn srg(g: &Graph) -> Option<SrgParams> {
        match classify_regularity(g) {
            RegularityClass::StronglyRegular(p) => Some(p),
            _ => None,
        }
    }

    fn params(n: usize, d: usize, a: usize, b: usize) -> Option<SrgParams> {
        Some(SrgParams::new(n, d, a, b).unwrap())
    }

    #[test]
    fn paley_examples() {
        let p5 = paley_graph(5).unwrap();
        assert_eq!(p5, cycle(5).unwrap());
        assert_eq!(srg(&paley_graph(13).unwrap()), params(13, 6, 2, 3));
        assert_eq!(srg(&paley_graph(9).unwrap()), params(9, 4, 1, 2));
        assert_eq!(paley_graph(7), Err(Error::NotPaleyOrder(7)));
        assert_eq!(paley_graph(21), Err(Error::NotPrimePower(21)));
    }

    #[test]
    fn paley_parameters_and_edge_counts() {
        for q in paley_orders(101) {
            let g = paley_graph(q).unwrap();
            assert_eq!(g.edge_count() as u64, q * (q - 1) / 4);
            let q = q as usize;
            if q > 5 {
                assert_eq!(srg(&g), params(q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4), "q={q}");
            }
        }
    }

    #[test]
    fn named_families_reproduce_parameters() {
        assert_eq!(srg(&rook(4).unwrap()), params(16, 6, 2, 2));
        assert_eq!(srg(&shrikhande()), params(16, 6, 2, 2));
        assert_ne!(rook(4).unwrap(), shrikhande());
        assert_eq!(srg(&johnson(5, 2).unwrap()), params(10, 6, 3, 4));
        assert_eq!(srg(&johnson(6, 2).unwrap()), params(15, 8, 4, 4));
        assert_eq!(srg(&cocktail_party(2).unwrap()), params(4, 2, 0, 2));
        assert_eq!(cocktail_party(2).unwrap().edge_count(), 4);
        assert_eq!(srg(&clebsch()), params(16, 10, 6, 6));
        assert_eq!(srg(&petersen()), params(10, 3, 0, 1));
        for k in 2..=6 {
            assert_eq!(srg(&cocktail_party(k).unwrap()), params(2 * k, 2 * k - 2, 2 * k - 4, 2 * k - 2));
        }
    }

    #[test]
    fn named_graph_dispatch() {
        let args = FamilyArgs { k: Some(4), ..Default::default() };
        assert_eq!(named_graph("rook", args).unwrap(), rook(4).unwrap());
        assert_eq!(
            named_graph("dodecahedron", args),
            Err(Error::UnknownFamily("dodecahedron".into()))
        );
        assert!(matches!(named_graph("cycle", args), Err(Error::InvalidParams(_))));
        assert!(matches!(named_graph("rook", FamilyArgs { k: Some(1), ..args }), Err(Error::InvalidParams(_))));
        let q13 = FamilyArgs { q: Some(13), ..Default::default() };
        assert_eq!(named_graph("paley", q13).unwrap(), paley_graph(13).unwrap());
    }

    #[test]
    fn random_regular_is_regular() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (n, d) in [(10, 3), (20, 4), (60, 8), (31, 6)] {
            let g = random_regular(n, d, &mut rng).unwrap();
            assert_eq!(g.regular_degree(), Some(d));
            assert_eq!(g.n(), n);
        }
        assert!(random_regular(5, 3, &mut rng).is_err());
    }

    #[test]
    fn catalog_graphs_are_regular_and_connected() {
        for e in catalog() {
            assert!(e.graph.regular_degree().is_some(), "{}", e.label);
            assert!(e.graph.is_connected(), "{}", e.label);
        }
    }
}
