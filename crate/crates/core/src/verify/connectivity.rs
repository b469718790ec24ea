//! Exact vertex connectivity by unit-capacity max flow on the split graph.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::verify::spectrum::bfs_distances;

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
}

/// Flow network where vertex `v` becomes `in(v) = 2v -> out(v) = 2v + 1` with
/// capacity 1, and each edge `{u, v}` becomes `out(u) -> in(v)` and
/// `out(v) -> in(u)`.
struct SplitNetwork {
    arcs: Vec<Arc>,
    original: Vec<u32>,
    out: Vec<Vec<usize>>,
}

const UNBOUNDED: u32 = u32::MAX / 2;

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let nodes = 2 * g.vertex_count();
        let mut net = Self {
            arcs: Vec::new(),
            original: Vec::new(),
            out: vec![Vec::new(); nodes],
        };
        for v in 0..g.vertex_count() {
            net.add(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.add(2 * u + 1, 2 * v, UNBOUNDED);
            net.add(2 * v + 1, 2 * u, UNBOUNDED);
        }
        net.original = net.arcs.iter().map(|a| a.cap).collect();
        net
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn reset(&mut self) {
        for (a, &c) in self.arcs.iter_mut().zip(&self.original) {
            a.cap = c;
        }
    }

    /// Number of internally vertex-disjoint `s`–`t` paths, stopping at `limit`.
    /// Dinic phases: a BFS level graph, then blocking-flow augmentation.
    fn local(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.reset();
        let (source, sink) = (2 * s + 1, 2 * t);
        let nodes = self.out.len();
        let mut level = vec![u32::MAX; nodes];
        let mut next_arc = vec![0usize; nodes];
        let mut flow = 0;
        while flow < limit {
            level.fill(u32::MAX);
            level[source] = 0;
            let mut queue = VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                if level[x] >= level[sink] {
                    break;
                }
                for &id in &self.out[x] {
                    let arc = self.arcs[id];
                    if arc.cap > 0 && level[arc.to] == u32::MAX {
                        level[arc.to] = level[x] + 1;
                        queue.push_back(arc.to);
                    }
                }
            }
            if level[sink] == u32::MAX {
                break;
            }
            next_arc.fill(0);
            while flow < limit && self.augment(source, sink, &level, &mut next_arc) {
                flow += 1;
            }
        }
        flow
    }

    /// Pushes one unit along a level-increasing path; every augmenting path
    /// crosses a unit split arc, so the bottleneck is always 1.
    fn augment(&mut self, x: usize, sink: usize, level: &[u32], next_arc: &mut [usize]) -> bool {
        if x == sink {
            return true;
        }
        while next_arc[x] < self.out[x].len() {
            let id = self.out[x][next_arc[x]];
            let arc = self.arcs[id];
            if arc.cap > 0
                && level[arc.to] == level[x] + 1
                && self.augment(arc.to, sink, level, next_arc)
            {
                self.arcs[id].cap -= 1;
                self.arcs[id ^ 1].cap += 1;
                return true;
            }
            next_arc[x] += 1;
        }
        false
    }
}

/// Maximum number of internally disjoint paths between nonadjacent `s` and `t`.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "local connectivity needs nonadjacent vertices");
    SplitNetwork::new(g).local(s, t, usize::MAX)
}

/// Minimum number of vertices whose removal disconnects the graph; `n - 1`
/// for the complete graph `K_n`.
///
/// Fixes a minimum-degree vertex `v` and takes the least local connectivity
/// over `v` and each non-neighbor, and over each nonadjacent pair of
/// neighbors of `v`. Some minimum separator either misses `v`, separating it
/// from a non-neighbor, or contains it, separating two of its neighbors.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if bfs_distances(g, 0).contains(&u32::MAX) {
        return 0;
    }
    let v = (0..n).min_by_key(|&x| g.degree(x)).expect("nonempty");
    let mut best = g.degree(v);
    let mut net = SplitNetwork::new(g);
    for w in 0..n {
        if w != v && !g.has_edge(v, w) {
            best = best.min(net.local(v, w, best));
        }
    }
    let nbrs = g.neighbors(v);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                best = best.min(net.local(x, y, best));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)), 4);
        assert_eq!(vertex_connectivity(&Graph::complete(2)), 1);
        assert_eq!(vertex_connectivity(&Graph::with_vertices(1)), 0);
    }

    #[test]
    fn cycles_and_paths() {
        assert_eq!(vertex_connectivity(&Graph::cycle(6)), 2);
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&path), 1);
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&split), 0);
    }

    #[test]
    fn cut_vertex_through_min_degree_neighbourhood() {
        // two triangles sharing vertex 2; vertex 2 is the only separator
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(vertex_connectivity(&g), 1);
    }

    #[test]
    fn local_paths_in_k33() {
        let g = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert_eq!(local_vertex_connectivity(&g, 0, 1), 3);
        assert_eq!(vertex_connectivity(&g), 3);
    }
}
