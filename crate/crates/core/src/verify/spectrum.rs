use std::collections::VecDeque;
use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Integer type for shortest-path counts.
///
/// Implemented for every unsigned primitive and for `num_bigint::BigUint`.
/// Fixed-width counts report overflow instead of wrapping.
pub trait PathCount:
    Clone + Ord + Zero + One + CheckedAdd + ToPrimitive + Display + Debug + Send + Sync
{
}

impl<T> PathCount for T where
    T: Clone + Ord + Zero + One + CheckedAdd + ToPrimitive + Display + Debug + Send + Sync
{
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRecord<C> {
    pub u: usize,
    pub v: usize,
    pub distance: u32,
    /// Number of distinct shortest `u`–`v` paths.
    pub count: C,
}

/// Shortest-path distance and multiplicity for every nonadjacent pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeodesicSpectrum<C> {
    /// Pairs `u < v`, lexicographic.
    pub records: Vec<PairRecord<C>>,
    /// Zero when there are no nonadjacent pairs.
    pub max_count: C,
    pub max_distance: u32,
}

impl<C: PathCount> GeodesicSpectrum<C> {
    pub fn pair_count(&self) -> usize {
        self.records.len()
    }

    /// How many pairs attain each multiplicity, ascending.
    pub fn count_histogram(&self) -> Vec<(C, usize)> {
        let mut counts: Vec<C> = self.records.iter().map(|r| r.count.clone()).collect();
        counts.sort();
        let mut out: Vec<(C, usize)> = Vec::new();
        for c in counts {
            match out.last_mut() {
                Some((last, n)) if *last == c => *n += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }
}

/// Breadth-first layering from `source`, accumulating the number of shortest
/// paths to each vertex. Returns distances (`u32::MAX` if unreachable) and counts.
pub(crate) fn bfs_counts<C: PathCount>(g: &Graph, source: usize) -> Result<(Vec<u32>, Vec<C>)> {
    let n = g.vertex_count();
    let mut dist = vec![u32::MAX; n];
    let mut sigma = vec![C::zero(); n];
    dist[source] = 0;
    sigma[source] = C::one();
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let next = dist[v] + 1;
        for &w in g.neighbors(v) {
            if dist[w] == u32::MAX {
                dist[w] = next;
                queue.push_back(w);
            }
            if dist[w] == next {
                sigma[w] = sigma[w]
                    .checked_add(&sigma[v])
                    .ok_or(Error::Overflow("shortest-path count"))?;
            }
        }
    }
    Ok((dist, sigma))
}

pub(crate) fn bfs_distances(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Exact shortest-path multiplicities for all nonadjacent pairs of a
/// connected graph.
pub fn geodesic_spectrum<C: PathCount>(g: &Graph) -> Result<GeodesicSpectrum<C>> {
    let n = g.vertex_count();
    let mut records = Vec::new();
    let mut max_count = C::zero();
    let mut max_distance = 0;
    for u in 0..n {
        let (dist, sigma) = bfs_counts::<C>(g, u)?;
        for v in u + 1..n {
            if dist[v] == u32::MAX {
                return Err(Error::Disconnected { u, v });
            }
            if dist[v] < 2 {
                continue;
            }
            if sigma[v] > max_count {
                max_count = sigma[v].clone();
            }
            max_distance = max_distance.max(dist[v]);
            records.push(PairRecord {
                u,
                v,
                distance: dist[v],
                count: sigma[v].clone(),
            });
        }
    }
    Ok(GeodesicSpectrum {
        records,
        max_count,
        max_distance,
    })
}

/// The least `K` for which the graph is K-geodetic.
///
/// With no nonadjacent pairs (complete graphs) the bound holds vacuously and
/// the class is 1.
pub fn classify_geodetic<C: PathCount>(spectrum: &GeodesicSpectrum<C>) -> C {
    if spectrum.records.is_empty() {
        C::one()
    } else {
        spectrum.max_count.clone()
    }
}

/// `geodetic`, `bigeodetic`, `trigeodetic`, or `<K>-geodetic`.
pub fn class_name(k: u64) -> String {
    match k {
        1 => "geodetic".into(),
        2 => "bigeodetic".into(),
        3 => "trigeodetic".into(),
        k => format!("{k}-geodetic"),
    }
}

/// Eccentricity maximum over all sources.
pub fn diameter(g: &Graph) -> Result<u32> {
    let n = g.vertex_count();
    let mut best = 0;
    for u in 0..n {
        let dist = bfs_distances(g, u);
        for (v, &d) in dist.iter().enumerate() {
            if d == u32::MAX {
                return Err(Error::Disconnected {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            best = best.max(d);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;

    use super::*;

    #[test]
    fn four_cycle_diagonals() {
        let s = geodesic_spectrum::<u64>(&Graph::cycle(4)).unwrap();
        assert_eq!(s.records.len(), 2);
        assert!(s.records.iter().all(|r| r.count == 2 && r.distance == 2));
        assert_eq!(classify_geodetic(&s), 2);
    }

    #[test]
    fn complete_graph_is_vacuously_geodetic() {
        let s = geodesic_spectrum::<BigUint>(&Graph::complete(5)).unwrap();
        assert_eq!(s.pair_count(), 0);
        assert_eq!(classify_geodetic(&s), BigUint::from(1u32));
    }

    #[test]
    fn disconnected_names_a_pair() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            geodesic_spectrum::<u64>(&g),
            Err(Error::Disconnected { u: 0, v: 2 })
        ));
        assert!(matches!(diameter(&g), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn narrow_counts_overflow_instead_of_wrapping() {
        // a chain of 9 diamonds has 2^9 = 512 shortest end-to-end paths
        let mut edges = Vec::new();
        for i in 0..9 {
            let (a, top, bottom, b) = (3 * i, 3 * i + 1, 3 * i + 2, 3 * i + 3);
            edges.extend([(a, top), (a, bottom), (top, b), (bottom, b)]);
        }
        let g = Graph::from_edges(28, edges).unwrap();
        assert!(matches!(geodesic_spectrum::<u8>(&g), Err(Error::Overflow(_))));
        let wide = geodesic_spectrum::<BigUint>(&g).unwrap();
        assert_eq!(wide.max_count, BigUint::from(512u32));
        assert_eq!(diameter(&g).unwrap(), 18);
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&Graph::complete(4)).unwrap(), 1);
        assert_eq!(diameter(&Graph::cycle(7)).unwrap(), 3);
        assert_eq!(diameter(&Graph::with_vertices(1)).unwrap(), 0);
    }

    #[test]
    fn class_names() {
        assert_eq!(class_name(1), "geodetic");
        assert_eq!(class_name(2), "bigeodetic");
        assert_eq!(class_name(3), "trigeodetic");
        assert_eq!(class_name(5), "5-geodetic");
    }
}
