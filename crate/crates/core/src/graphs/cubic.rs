//! Enumeration of small connected regular graphs up to isomorphism.
//!
//! Candidates are generated in breadth-first labeled form: vertex 0 is
//! adjacent to `1..=d`, and when vertex `i` is completed its still-missing
//! neighbours are either already-labeled vertices after `i` or brand-new
//! vertices taking the next free labels. Every connected graph has at least
//! one such labeling, so the candidates cover all classes; duplicates are
//! removed by an invariant hash followed by an exact isomorphism test.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::Graph;

/// All connected `d`-regular graphs on `n` vertices, one per isomorphism
/// class, in generation order.
pub fn connected_regular_graphs(n: usize, d: usize) -> Vec<Graph> {
    if d == 0 || n < d + 1 || (n * d) % 2 != 0 {
        return Vec::new();
    }
    let mut state = Builder {
        n,
        d,
        adj: vec![Vec::new(); n],
        next: d + 1,
        classes: BTreeMap::new(),
    };
    for j in 1..=d {
        state.link(0, j);
    }
    state.complete(1);
    let mut out: Vec<(usize, Graph)> = state
        .classes
        .into_values()
        .flatten()
        .collect();
    out.sort_by_key(|(order, _)| *order);
    out.into_iter().map(|(_, g)| g).collect()
}

/// Connected cubic graphs on `n` vertices.
pub fn connected_cubic_graphs(n: usize) -> Vec<Graph> {
    connected_regular_graphs(n, 3)
}

/// Connected cubic graphs on 4, 6, ..., `max_n` vertices.
pub fn cubic_corpus(max_n: usize) -> Vec<Graph> {
    (4..=max_n).step_by(2).flat_map(connected_cubic_graphs).collect()
}

struct Builder {
    n: usize,
    d: usize,
    adj: Vec<Vec<usize>>,
    next: usize,
    /// invariant -> (discovery index, representative)
    classes: BTreeMap<Vec<u64>, Vec<(usize, Graph)>>,
}

impl Builder {
    fn link(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a].pop();
        self.adj[b].pop();
    }

    fn complete(&mut self, i: usize) {
        if i == self.n {
            if self.next == self.n {
                self.record();
            }
            return;
        }
        let need = self.d - self.adj[i].len();
        let candidates: Vec<usize> = (i + 1..self.next)
            .filter(|&j| self.adj[j].len() < self.d && !self.adj[i].contains(&j))
            .collect();
        let free = self.n - self.next;
        for old in 0..=need.min(candidates.len()) {
            let fresh = need - old;
            if fresh > free {
                continue;
            }
            let mut pick = Vec::with_capacity(old);
            self.choose(i, &candidates, 0, old, fresh, &mut pick);
        }
    }

    fn choose(&mut self, i: usize, cands: &[usize], from: usize, left: usize, fresh: usize, pick: &mut Vec<usize>) {
        if left == 0 {
            for &j in pick.iter() {
                self.link(i, j);
            }
            let start = self.next;
            for k in 0..fresh {
                self.link(i, start + k);
            }
            self.next += fresh;
            self.complete(i + 1);
            self.next -= fresh;
            for k in (0..fresh).rev() {
                self.unlink(i, start + k);
            }
            for &j in pick.iter().rev() {
                self.unlink(i, j);
            }
            return;
        }
        for k in from..cands.len() {
            if cands.len() - k < left {
                break;
            }
            pick.push(cands[k]);
            self.choose(i, cands, k + 1, left - 1, fresh, pick);
            pick.pop();
        }
    }

    fn record(&mut self) {
        let mut g = Graph::empty(self.n);
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if u < v {
                    g.try_add_edge(u, v).expect("builder produces simple graphs");
                }
            }
        }
        let inv = invariant(&g);
        let order = self.classes.values().map(Vec::len).sum();
        let bucket = self.classes.entry(inv).or_default();
        if bucket.iter().all(|(_, h)| !isomorphic(&g, h)) {
            bucket.push((order, g));
        }
    }
}

fn distance_profile(g: &Graph, s: usize) -> Vec<u64> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    let mut profile = vec![0u64; g.n()];
    while let Some(u) = queue.pop_front() {
        profile[dist[u]] += 1;
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    profile
}

fn triangles_at(g: &Graph, v: usize) -> u64 {
    let nb = g.neighbors(v);
    let mut t = 0;
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if g.adjacent(a, b) {
                t += 1;
            }
        }
    }
    t
}

/// Per-vertex signature: triangle count, then BFS layer sizes.
fn vertex_signature(g: &Graph, v: usize) -> Vec<u64> {
    let mut sig = vec![triangles_at(g, v)];
    sig.extend(distance_profile(g, v));
    sig
}

fn invariant(g: &Graph) -> Vec<u64> {
    let mut sigs: Vec<Vec<u64>> = (0..g.n()).map(|v| vertex_signature(g, v)).collect();
    sigs.sort();
    sigs.concat()
}

/// Exact isomorphism test by backtracking over signature-compatible maps.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let sa: Vec<Vec<u64>> = (0..n).map(|v| vertex_signature(a, v)).collect();
    let sb: Vec<Vec<u64>> = (0..n).map(|v| vertex_signature(b, v)).collect();
    let mut x = sa.clone();
    let mut y = sb.clone();
    x.sort();
    y.sort();
    if x != y {
        return false;
    }
    // Map a's vertices in BFS order so each new vertex touches mapped ones.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in a.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        k: usize,
        order: &[usize],
        a: &Graph,
        b: &Graph,
        sa: &[Vec<u64>],
        sb: &[Vec<u64>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let u = order[k];
        for c in 0..b.n() {
            if used[c] || sa[u] != sb[c] {
                continue;
            }
            let consistent = order[..k]
                .iter()
                .all(|&w| a.adjacent(u, w) == b.adjacent(c, map[w]));
            if !consistent {
                continue;
            }
            map[u] = c;
            used[c] = true;
            if extend(k + 1, order, a, b, sa, sb, map, used) {
                return true;
            }
            used[c] = false;
            map[u] = usize::MAX;
        }
        false
    }
    extend(0, &order, a, b, &sa, &sb, &mut map, &mut used)
}
