//! Finite simple graphs, the standard generators, and the exhaustive Potts
//! oracle used to cross-check every symbolic quantity on small instances.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

pub mod cubic;
pub mod cycle;
pub mod format;
pub mod oracle;

pub use cubic::{connected_cubic_graphs, connected_regular_graphs, cubic_corpus, isomorphic};
pub use format::{from_edge_list, from_graph6, to_edge_list, to_graph6};
pub use cycle::{cycle_closed_forms, line_energy, CycleForms};
pub use oracle::{
    count_proper_colorings, internal_energy, local_view_distribution, potts_evaluation,
    potts_partition, OracleLimits, PottsEvaluation, ViewDistribution,
};

/// Undirected simple graph on vertices `0..n`, stored as sorted adjacency
/// lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range for {n} vertices")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::InvalidGraph(format!("repeated edge {u}-{v}"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `Some(d)` when every vertex has degree `d`. The empty graph is not
    /// regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|nb| nb.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n()];
        for start in 0..self.n() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| nb.iter().map(|&w| w + shift).collect()),
        );
        Graph { adj }
    }

    /// `K_{d,d}` with sides `0..d` and `d..2d`.
    pub fn complete_bipartite(d: usize) -> Result<Graph> {
        if d == 0 {
            return Err(Error::InvalidArgument("complete_bipartite needs d >= 1".into()));
        }
        let edges: Vec<_> = (0..d).flat_map(|i| (d..2 * d).map(move |j| (i, j))).collect();
        Graph::from_edges(2 * d, &edges)
    }

    pub fn complete(k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidArgument("complete needs k >= 1".into()));
        }
        let edges: Vec<_> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        Graph::from_edges(k, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::CycleTooShort(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `C_n x K_2`: outer cycle `0..n`, inner cycle `n..2n`, spokes `i - (n+i)`.
    pub fn prism(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::CycleTooShort(n));
        }
        let mut edges = Vec::with_capacity(3 * n);
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((n + i, n + (i + 1) % n));
            edges.push((i, n + i));
        }
        Graph::from_edges(2 * n, &edges)
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }
}
