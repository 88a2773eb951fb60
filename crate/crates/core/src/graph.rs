//! Simple undirected graphs stored as sorted adjacency lists.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Index of a vertex in `0..n`. Graphs never renumber their vertices.
pub type VertexId = usize;

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidVertex { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u}-{}", w[0])));
            }
        }
        Ok(Self { adj })
    }

    /// Builds a graph from a symmetric adjacency predicate over `0..n`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(VertexId, VertexId) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        Self { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    pub fn check_edge(&self, x: VertexId, y: VertexId) -> Result<()> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if self.has_edge(x, y) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(x, y))
        }
    }

    /// |Γ(u) ∩ Γ(v)| by merge-scan.
    pub fn common_neighbor_count(&self, u: VertexId, v: VertexId) -> usize {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Shortest-path distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: VertexId) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        Ok(self.bfs_bounded(source, usize::MAX))
    }

    /// BFS that stops expanding past `max_depth`; farther vertices stay `None`.
    pub fn bfs_bounded(&self, source: VertexId, max_depth: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            if du >= max_depth {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_bounded(0, usize::MAX).iter().all(Option::is_some)
    }

    /// Splits V around the edge `xy` into {x}, {y}, Δ_xy, N_x, N_y, P_xy.
    pub fn decompose_edge(&self, x: VertexId, y: VertexId) -> Result<EdgeNeighborhood> {
        self.check_edge(x, y)?;
        let mut delta = Vec::new();
        let mut nx = Vec::new();
        let mut ny = Vec::new();
        let mut pxy = Vec::new();
        for v in 0..self.n() {
            if v == x || v == y {
                continue;
            }
            match (self.has_edge(x, v), self.has_edge(y, v)) {
                (true, true) => delta.push(v),
                (true, false) => nx.push(v),
                (false, true) => ny.push(v),
                (false, false) => pxy.push(v),
            }
        }
        Ok(EdgeNeighborhood { x, y, delta, nx, ny, pxy })
    }
}

/// The partition of V around an edge xy. All vertex lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeNeighborhood {
    pub x: VertexId,
    pub y: VertexId,
    /// Common neighbours Γ(x) ∩ Γ(y).
    pub delta: Vec<VertexId>,
    /// Neighbours of x other than y that are not adjacent to y.
    pub nx: Vec<VertexId>,
    /// Neighbours of y other than x that are not adjacent to x.
    pub ny: Vec<VertexId>,
    /// Vertices adjacent to neither endpoint.
    pub pxy: Vec<VertexId>,
}

impl EdgeNeighborhood {
    pub fn total(&self) -> usize {
        2 + self.delta.len() + self.nx.len() + self.ny.len() + self.pxy.len()
    }
}
