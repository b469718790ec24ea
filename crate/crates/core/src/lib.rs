//! Geodetic blocks from block designs.
//!
//! Parameter screens for block designs, constructions of the designs
//! themselves, the star-of-cliques graph built over a design's blocks, and
//! exhaustive verification of the geodetic class, diameter, connectivity and
//! degrees of the result.
//!
//! ```
//! use geoblock::{build_star, cover_from_design, fixtures, measure};
//!
//! let star = build_star(&cover_from_design(&fixtures::fano()).unwrap());
//! let m = measure(star.graph()).unwrap();
//! assert_eq!((m.vertex_count, m.measured_k, m.diameter, m.connectivity), (28, 1, 4, 3));
//! ```

pub mod design;
pub mod error;
pub mod export;
pub mod family;
pub mod field;
pub mod fixtures;
pub mod graph;
pub mod params;
pub mod star;
pub mod verify;

pub use design::{
    build_complete_triples, build_projective_plane, build_sts, build_symmetric,
    build_triple_system, build_triple_system_with, catalog_lookup, check_catalog_json, complement_design,
    develop_difference_family, resolve_design, solve_design, verify_design, BlockDesign, Catalog,
    CatalogEntry, DesignCheckReport, DesignFile, EntryCheck, SolveOutcome, DEFAULT_NODE_BUDGET,
};
pub use error::{Error, Result};
pub use export::{ExportFormat, Structured};
pub use family::{Family, FamilyRun, FamilySpec};
pub use field::FiniteField;
pub use graph::{Graph, LabeledGraph, VertexLabel};
pub use params::{
    brc_admissible, check_necessary, hanani_admissible, symmetric_params, triple_system_params,
    AdmissibilityVerdict, BrcOutcome, DesignParams,
};
pub use star::{build_star, cover_from_design, mu, predicted_diameter, Cover, StarGraph};
pub use verify::{
    classify_geodetic, degree_profile, diameter, full_report, geodesic_spectrum, measure,
    vertex_connectivity, Claims, GeodeticReport, Measurements, PathCount, Reconciliation,
};

/// Path-count spectrum with arbitrary-precision counts.
pub type Spectrum = verify::GeodesicSpectrum<num_bigint::BigUint>;
/// Path-count spectrum with 64-bit counts, which report overflow as an error.
pub type Spectrum64 = verify::GeodesicSpectrum<u64>;
