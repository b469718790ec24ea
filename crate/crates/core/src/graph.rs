//! Simple undirected graphs and the vertex labels used by the exports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Undirected graph without loops or multiple edges; neighbor lists sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn with_vertices(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parse(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Parse(format!("loop at vertex {u}")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for (u, list) in g.adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse(format!("repeated edge at vertex {u}")));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).expect("cycle is simple")
    }

    pub fn vertex_count(&self) -> usize {
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

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Subgraph induced on the vertices where `keep` is true, reindexed in order.
    pub fn induced(&self, keep: &[bool]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                index[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep[u] && keep[v])
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges(next, edges).expect("induced subgraph is simple")
    }
}

/// Vertex names used in exported graphs.
///
/// Star graphs use `h<l>` for the hub of ground element `l` and `c<i>_<x>` for
/// the copy of element `x` inside clique gadget `i`. Anything else read from a
/// file is kept verbatim. The derived order (hubs, then copies by gadget and
/// element, then other names) is the canonical vertex order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Hub(usize),
    Copy { member: usize, element: usize },
    Named(String),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Hub(l) => write!(f, "h{l}"),
            VertexLabel::Copy { member, element } => write!(f, "c{member}_{element}"),
            VertexLabel::Named(s) => f.write_str(s),
        }
    }
}

fn parse_index(s: &str) -> Option<usize> {
    // reject forms like "h01" so the text rendering round-trips
    if s.is_empty() || (s.len() > 1 && s.starts_with('0')) || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.chars().any(char::is_whitespace) {
            return Err(Error::Parse(format!("invalid vertex label {s:?}")));
        }
        if let Some(l) = s.strip_prefix('h').and_then(parse_index) {
            return Ok(VertexLabel::Hub(l));
        }
        if let Some((m, e)) = s.strip_prefix('c').and_then(|r| r.split_once('_')) {
            if let (Some(member), Some(element)) = (parse_index(m), parse_index(e)) {
                return Ok(VertexLabel::Copy { member, element });
            }
        }
        Ok(VertexLabel::Named(s.to_owned()))
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A graph whose vertex `i` carries `labels[i]`, with labels strictly
/// increasing so that index order is canonical label order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    labels: Vec<VertexLabel>,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labels: Vec<VertexLabel>) -> Result<Self> {
        if graph.vertex_count() != labels.len() {
            return Err(Error::Parse("label count does not match vertex count".into()));
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse("labels must be distinct and in canonical order".into()));
        }
        Ok(Self { graph, labels })
    }

    /// Builds from labeled vertices and edges in any order; vertices are
    /// reindexed by canonical label order.
    pub fn from_labeled(
        vertices: impl IntoIterator<Item = VertexLabel>,
        edges: impl IntoIterator<Item = (VertexLabel, VertexLabel)>,
    ) -> Result<Self> {
        let mut index: BTreeMap<VertexLabel, usize> = BTreeMap::new();
        for v in vertices {
            index.insert(v, 0);
        }
        let edges: Vec<_> = edges.into_iter().collect();
        for (a, b) in &edges {
            index.insert(a.clone(), 0);
            index.insert(b.clone(), 0);
        }
        for (i, slot) in index.values_mut().enumerate() {
            *slot = i;
        }
        let graph = Graph::from_edges(
            index.len(),
            edges.iter().map(|(a, b)| (index[a], index[b])),
        )?;
        Ok(Self {
            graph,
            labels: index.into_keys().collect(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    /// Replaces vertex indices in a disconnection error with labels.
    pub fn describe(&self, err: Error) -> String {
        match err {
            Error::Disconnected { u, v } => format!(
                "graph is disconnected: no path between {} and {}",
                self.labels[u], self.labels[v]
            ),
            other => other.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_text_round_trip() {
        for text in ["h0", "h12", "c3_4", "c10_0", "alpha", "h01", "c1_", "x7"] {
            let label: VertexLabel = text.parse().unwrap();
            assert_eq!(label.to_string(), text);
        }
        assert_eq!("h7".parse::<VertexLabel>().unwrap(), VertexLabel::Hub(7));
        assert_eq!(
            "c2_5".parse::<VertexLabel>().unwrap(),
            VertexLabel::Copy { member: 2, element: 5 }
        );
        assert!("".parse::<VertexLabel>().is_err());
        assert!("a b".parse::<VertexLabel>().is_err());
    }

    #[test]
    fn canonical_order_puts_hubs_first() {
        let mut labels: Vec<VertexLabel> = ["c0_1", "h2", "c0_0", "h10", "zz", "c1_0"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        labels.sort();
        let text: Vec<String> = labels.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["h2", "h10", "c0_0", "c0_1", "c1_0", "zz"]);
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn basic_counts() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.edge_count(), 10);
        assert!(k5.is_complete());
        let c4 = Graph::cycle(4);
        assert_eq!(c4.edges().collect::<Vec<_>>(), [(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(!c4.has_edge(0, 2));
    }
}
