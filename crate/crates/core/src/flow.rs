//! Min-cost flow by successive shortest paths (Dijkstra with potentials).

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    cost: i64,
}

/// Directed network with non-negative arc costs.
#[derive(Debug, Clone, Default)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        Self { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    /// Adds an arc and returns its id; the reverse residual arc is `id ^ 1`.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> usize {
        debug_assert!(cost >= 0 && cap >= 0);
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, cost });
        self.out[from].push(id);
        self.arcs.push(Arc { to: from, cap: 0, cost: -cost });
        self.out[to].push(id + 1);
        id
    }

    /// Flow currently carried by arc `id`.
    pub fn flow(&self, id: usize) -> i64 {
        self.arcs[id ^ 1].cap
    }

    /// Sends up to `limit` units from `s` to `t` at minimum cost and returns
    /// `(flow, cost)`.
    pub fn min_cost_flow(&mut self, s: usize, t: usize, limit: i64) -> (i64, i128) {
        let n = self.out.len();
        let mut potential = vec![0i64; n];
        let (mut flow, mut cost) = (0i64, 0i128);
        while flow < limit {
            let mut dist = vec![i64::MAX; n];
            let mut prev = vec![usize::MAX; n];
            dist[s] = 0;
            let mut heap = BinaryHeap::from([Reverse((0i64, s))]);
            while let Some(Reverse((d, u))) = heap.pop() {
                if d > dist[u] {
                    continue;
                }
                for &id in &self.out[u] {
                    let a = &self.arcs[id];
                    if a.cap == 0 {
                        continue;
                    }
                    let nd = d + a.cost + potential[u] - potential[a.to];
                    if nd < dist[a.to] {
                        dist[a.to] = nd;
                        prev[a.to] = id;
                        heap.push(Reverse((nd, a.to)));
                    }
                }
            }
            if dist[t] == i64::MAX {
                break;
            }
            for v in 0..n {
                if dist[v] != i64::MAX {
                    potential[v] += dist[v];
                }
            }
            let mut push = limit - flow;
            let mut v = t;
            while v != s {
                let id = prev[v];
                push = push.min(self.arcs[id].cap);
                v = self.arcs[id ^ 1].to;
            }
            let mut v = t;
            while v != s {
                let id = prev[v];
                self.arcs[id].cap -= push;
                self.arcs[id ^ 1].cap += push;
                cost += i128::from(push) * i128::from(self.arcs[id].cost);
                v = self.arcs[id ^ 1].to;
            }
            flow += push;
        }
        (flow, cost)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_cheaper_route() {
        let mut g = FlowNetwork::new(4);
        let a = g.add_arc(0, 1, 2, 1);
        g.add_arc(0, 2, 2, 5);
        g.add_arc(1, 3, 1, 1);
        g.add_arc(2, 3, 2, 1);
        g.add_arc(1, 2, 1, 1);
        assert_eq!(g.min_cost_flow(0, 3, 3), (3, 2 + 3 + 6));
        assert_eq!(g.flow(a), 2);
    }

    #[test]
    fn stops_at_max_flow() {
        let mut g = FlowNetwork::new(3);
        g.add_arc(0, 1, 4, 2);
        g.add_arc(1, 2, 3, 0);
        assert_eq!(g.min_cost_flow(0, 2, 10), (3, 6));
    }
}
