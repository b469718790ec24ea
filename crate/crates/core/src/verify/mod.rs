//! Exhaustive measurement of the properties claimed for star graphs, and
//! reconciliation of the measurements against the predicted values.

mod connectivity;
mod spectrum;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

pub use connectivity::{local_vertex_connectivity, vertex_connectivity};
pub use spectrum::{
    class_name, classify_geodetic, diameter, geodesic_spectrum, GeodesicSpectrum, PairRecord,
    PathCount,
};

use crate::design::BlockDesign;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::DesignParams;
use crate::star::{cover_from_design, mu, predicted_diameter, StarGraph};

/// `(degree, multiplicity)` pairs, ascending by degree.
pub fn degree_profile(g: &Graph) -> Vec<(usize, usize)> {
    let mut hist = BTreeMap::new();
    for v in 0..g.vertex_count() {
        *hist.entry(g.degree(v)).or_insert(0) += 1;
    }
    hist.into_iter().collect()
}

/// True iff the degree support is exactly `{l, k}` (just `{k}` when `l == k`).
pub fn is_biregular(profile: &[(usize, usize)], l: usize, k: usize) -> bool {
    let support: BTreeSet<usize> = profile.iter().map(|&(d, _)| d).collect();
    support == BTreeSet::from([l, k])
}

/// What was measured on a graph, independent of any design.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Measurements {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub nonadjacent_pairs: usize,
    /// Least K for which the graph is K-geodetic.
    pub measured_k: u64,
    pub class: String,
    /// Every named class the graph belongs to; K-geodetic implies K'-geodetic for K' >= K.
    pub member_of: Vec<String>,
    /// `(shortest-path count, number of pairs)`.
    pub count_histogram: Vec<(u64, usize)>,
    pub diameter: u32,
    pub connectivity: usize,
    pub degree_profile: Vec<(usize, usize)>,
}

/// Runs every measurement on a connected graph.
pub fn measure(g: &Graph) -> Result<Measurements> {
    let spectrum = geodesic_spectrum::<BigUint>(g)?;
    let to_u64 = |c: &BigUint| c.to_u64().ok_or(Error::Overflow("geodetic class"));
    let measured_k = to_u64(&classify_geodetic(&spectrum))?;
    let count_histogram = spectrum
        .count_histogram()
        .iter()
        .map(|(c, n)| Ok((to_u64(c)?, *n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Measurements {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        nonadjacent_pairs: spectrum.pair_count(),
        measured_k,
        class: class_name(measured_k),
        member_of: (measured_k..=3.max(measured_k)).map(class_name).collect(),
        count_histogram,
        diameter: diameter(g)?,
        connectivity: vertex_connectivity(g),
        degree_profile: degree_profile(g),
    })
}

/// Expected values to reconcile against. `None` fields are not checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claims {
    /// Upper bound on the measured K.
    pub k: Option<u64>,
    pub connectivity: Option<usize>,
    pub degrees: Option<BTreeSet<usize>>,
    pub vertices: Option<usize>,
    pub diameter: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predictions {
    pub mu: u64,
    pub predicted_diameter: u32,
    /// `n(r+1)` and `nr(k+1)/2`.
    pub vertex_formula: u64,
    pub edge_formula: u64,
    pub claims: Claims,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reconciliation {
    pub counts_match_formulas: bool,
    pub k_within_mu: bool,
    pub k_within_claim: bool,
    pub diameter_is_4_or_5: bool,
    pub diameter_matches_prediction: bool,
    pub connectivity_matches_claim: bool,
    pub degrees_match_claim: bool,
    pub vertices_match_claim: bool,
}

impl Reconciliation {
    pub fn all_pass(&self) -> bool {
        self.counts_match_formulas
            && self.k_within_mu
            && self.k_within_claim
            && self.diameter_is_4_or_5
            && self.diameter_matches_prediction
            && self.connectivity_matches_claim
            && self.degrees_match_claim
            && self.vertices_match_claim
    }

    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.counts_match_formulas, "counts_match_formulas"),
            (self.k_within_mu, "k_within_mu"),
            (self.k_within_claim, "k_within_claim"),
            (self.diameter_is_4_or_5, "diameter_is_4_or_5"),
            (self.diameter_matches_prediction, "diameter_matches_prediction"),
            (self.connectivity_matches_claim, "connectivity_matches_claim"),
            (self.degrees_match_claim, "degrees_match_claim"),
            (self.vertices_match_claim, "vertices_match_claim"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeodeticReport {
    pub design: DesignParams,
    pub measurements: Measurements,
    pub predictions: Predictions,
    pub reconciliation: Reconciliation,
}

impl GeodeticReport {
    pub fn all_pass(&self) -> bool {
        self.reconciliation.all_pass()
    }
}

/// Measures the star graph of `design` and reconciles it with the bound `μ`,
/// the predicted diameter, the closed-form counts, and `claims`.
pub fn full_report(design: &BlockDesign, star: &StarGraph, claims: &Claims) -> Result<GeodeticReport> {
    let params = design
        .verified_params()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    if *star.cover() != cover_from_design(design)? {
        return Err(Error::Precondition(
            "star graph was not built from this design's cover".into(),
        ));
    }
    let m = measure(star.graph())?;
    let mu = mu(design)?;
    let predicted = predicted_diameter(design)?;
    let vertex_formula = params.n * (params.r + 1);
    let edge_formula = params.n * params.r * (params.k + 1) / 2;
    let support: BTreeSet<usize> = m.degree_profile.iter().map(|&(d, _)| d).collect();

    let reconciliation = Reconciliation {
        counts_match_formulas: m.vertex_count as u64 == vertex_formula
            && m.edge_count as u64 == edge_formula,
        k_within_mu: m.measured_k <= mu,
        k_within_claim: claims.k.is_none_or(|k| m.measured_k <= k),
        diameter_is_4_or_5: matches!(m.diameter, 4 | 5),
        diameter_matches_prediction: m.diameter == predicted
            && claims.diameter.is_none_or(|d| d == m.diameter),
        connectivity_matches_claim: claims.connectivity.is_none_or(|c| c == m.connectivity),
        degrees_match_claim: claims.degrees.as_ref().is_none_or(|d| *d == support),
        vertices_match_claim: claims.vertices.is_none_or(|v| v == m.vertex_count),
    };
    Ok(GeodeticReport {
        design: params,
        measurements: m,
        predictions: Predictions {
            mu,
            predicted_diameter: predicted,
            vertex_formula,
            edge_formula,
            claims: claims.clone(),
        },
        reconciliation,
    })
}
