//! The star-of-cliques construction over a clique cover of `K_n`.
//!
//! Each cover member becomes a fresh clique gadget whose vertices are copies
//! of the member's elements; every copy is joined by a spoke to the hub vertex
//! of its element. For the cover induced by a `(b, n, r, k, λ)` design the
//! result has `n(r+1)` vertices and `nr(k+1)/2` edges.

use serde::{Deserialize, Serialize};

use crate::design::BlockDesign;
use crate::error::{Error, Result};
use crate::graph::{Graph, LabeledGraph, VertexLabel};

/// A family of vertex subsets of `K_n`, each standing for the complete
/// subgraph it induces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    ground_size: usize,
    members: Vec<Vec<usize>>,
    /// No pair of vertices lies in two members.
    theta: bool,
}

impl Cover {
    /// Members are sorted; their union must be `0..ground_size`.
    pub fn new(ground_size: usize, members: Vec<Vec<usize>>) -> Result<Self> {
        let mut members = members;
        let mut seen = vec![false; ground_size];
        for m in &mut members {
            m.sort_unstable();
            if m.is_empty() || m.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Precondition(format!(
                    "cover member {m:?} is empty or repeats a vertex"
                )));
            }
            for &x in m.iter() {
                if x >= ground_size {
                    return Err(Error::Precondition(format!(
                        "cover vertex {x} outside 0..{ground_size}"
                    )));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            return Err(Error::Precondition(format!("vertex {x} not in any cover member")));
        }
        let mut pair_seen = vec![false; ground_size * ground_size];
        let mut theta = true;
        'outer: for m in &members {
            for (i, &x) in m.iter().enumerate() {
                for &y in &m[i + 1..] {
                    let slot = &mut pair_seen[x * ground_size + y];
                    if *slot {
                        theta = false;
                        break 'outer;
                    }
                    *slot = true;
                }
            }
        }
        Ok(Self {
            ground_size,
            members,
            theta,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn is_theta(&self) -> bool {
        self.theta
    }
}

/// One cover member per block; the cover is a Θ-cover exactly when `λ = 1`.
pub fn cover_from_design(design: &BlockDesign) -> Result<Cover> {
    let params = design
        .verified_params()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    let cover = Cover::new(design.ground_size(), design.blocks().to_vec())?;
    debug_assert_eq!(cover.theta, params.lambda == 1);
    Ok(cover)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarGraph {
    cover: Cover,
    graph: LabeledGraph,
}

impl StarGraph {
    pub fn cover(&self) -> &Cover {
        &self.cover
    }

    pub fn labeled(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn graph(&self) -> &Graph {
        self.graph.graph()
    }

    pub fn hub(&self, element: usize) -> usize {
        element
    }

    /// Index of the copy of `element` in gadget `member`.
    pub fn copy(&self, member: usize, element: usize) -> Option<usize> {
        self.graph.index_of(&VertexLabel::Copy { member, element })
    }
}

/// Builds the star-of-cliques graph. Vertices are numbered hubs first
/// (`h0..h{n-1}`), then gadget copies by member and element.
pub fn build_star(cover: &Cover) -> StarGraph {
    let n = cover.ground_size;
    let mut labels: Vec<VertexLabel> = (0..n).map(VertexLabel::Hub).collect();
    let mut edges = Vec::new();
    for (i, member) in cover.members.iter().enumerate() {
        let base = labels.len();
        for (a, &x) in member.iter().enumerate() {
            labels.push(VertexLabel::Copy {
                member: i,
                element: x,
            });
            edges.push((x, base + a));
            for b in a + 1..member.len() {
                edges.push((base + a, base + b));
            }
        }
    }
    let graph = Graph::from_edges(labels.len(), edges).expect("gadget edges are simple");
    StarGraph {
        cover: cover.clone(),
        graph: LabeledGraph::new(graph, labels).expect("construction order is canonical"),
    }
}

fn multi_block(design: &BlockDesign) -> Result<u64> {
    let params = design
        .verified_params()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    if design.block_count() < 2 {
        return Err(Error::Precondition("needs at least two blocks".into()));
    }
    Ok(params.lambda)
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    common
}

fn block_pairs(design: &BlockDesign) -> impl Iterator<Item = usize> + '_ {
    let blocks = design.blocks();
    (0..blocks.len()).flat_map(move |i| {
        (i + 1..blocks.len()).map(move |j| intersection_size(&blocks[i], &blocks[j]))
    })
}

/// `max(max |B_i ∩ B_j| over i ≠ j, λ)`: the bound on shortest-path
/// multiplicity in the star graph.
pub fn mu(design: &BlockDesign) -> Result<u64> {
    let lambda = multi_block(design)?;
    let widest = block_pairs(design).max().unwrap_or(0) as u64;
    Ok(widest.max(lambda))
}

/// 4 when every two blocks meet, otherwise 5.
pub fn predicted_diameter(design: &BlockDesign) -> Result<u32> {
    multi_block(design)?;
    Ok(if block_pairs(design).all(|s| s > 0) { 4 } else { 5 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{build_complete_triples, build_sts};
    use crate::fixtures;

    #[test]
    fn covers_from_designs() {
        let fano = cover_from_design(&fixtures::fano()).unwrap();
        assert_eq!(fano.members().len(), 7);
        assert!(fano.members().iter().all(|m| m.len() == 3));
        assert!(fano.is_theta());

        let twofold = cover_from_design(&fixtures::twofold_six()).unwrap();
        assert_eq!(twofold.members().len(), 10);
        assert!(!twofold.is_theta());

        let single = cover_from_design(&build_complete_triples(3).unwrap()).unwrap();
        assert_eq!(single.members().len(), 1);
        assert!(single.is_theta());
    }

    #[test]
    fn unverified_design_rejected() {
        let bad = BlockDesign::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert!(matches!(cover_from_design(&bad), Err(Error::Precondition(_))));
        assert!(matches!(mu(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn star_counts() {
        let fano = build_star(&cover_from_design(&fixtures::fano()).unwrap());
        assert_eq!(fano.graph().vertex_count(), 28);
        assert_eq!(fano.graph().edge_count(), 42);

        let six = build_star(&cover_from_design(&fixtures::twofold_six()).unwrap());
        assert_eq!(six.graph().vertex_count(), 36);
        assert_eq!(six.graph().edge_count(), 60);

        let tri = build_star(&cover_from_design(&build_complete_triples(3).unwrap()).unwrap());
        assert_eq!(tri.graph().vertex_count(), 6);
        assert_eq!(tri.graph().edge_count(), 6);
        assert_eq!(
            tri.labeled().labels().iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["h0", "h1", "h2", "c0_0", "c0_1", "c0_2"]
        );
    }

    #[test]
    fn hub_and_copy_degrees() {
        let d = fixtures::twofold_six();
        let star = build_star(&cover_from_design(&d).unwrap());
        for x in 0..6 {
            assert_eq!(star.graph().degree(star.hub(x)), 5);
        }
        for (i, block) in d.blocks().iter().enumerate() {
            for &x in block {
                assert_eq!(star.graph().degree(star.copy(i, x).unwrap()), 3);
            }
        }
    }

    #[test]
    fn general_cover_allowed() {
        // a path cover of K_3 that misses the pair {0, 2}
        let cover = Cover::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let star = build_star(&cover);
        assert_eq!(star.graph().vertex_count(), 7);
        assert_eq!(star.graph().edge_count(), 2 + 4);
        assert!(Cover::new(3, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(&fixtures::fano()).unwrap(), 1);
        assert_eq!(mu(&fixtures::twofold_six()).unwrap(), 2);
        assert_eq!(mu(&build_complete_triples(5).unwrap()).unwrap(), 3);
        assert!(mu(&build_complete_triples(3).unwrap()).is_err());
    }

    #[test]
    fn diameter_predictions() {
        assert_eq!(predicted_diameter(&fixtures::fano()).unwrap(), 4);
        assert_eq!(predicted_diameter(&build_sts(9).unwrap()).unwrap(), 5);
        assert_eq!(predicted_diameter(&fixtures::biplane_seven()).unwrap(), 4);
    }
}
