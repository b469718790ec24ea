//! Block designs: the canonical container, the exhaustive axiom checker, and
//! the constructions that produce designs for each family.

mod catalog;
mod construct;
mod file;
mod solver;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use catalog::{catalog_lookup, check_catalog_json, Catalog, CatalogEntry, EntryCheck};
pub use construct::{
    build_complete_triples, build_projective_plane, build_sts, build_symmetric, build_triple_system,
    build_triple_system_with, complement_design, develop_difference_family, resolve_design,
    DEFAULT_NODE_BUDGET,
};
pub use file::{DesignFile, DESIGN_FORMAT_VERSION};
pub use solver::{solve_design, SolveOutcome};

use crate::error::{Error, Result};
use crate::params::DesignParams;

/// Blocks over the ground set `0..ground_size`.
///
/// Always canonical: each block ascending, block list lexicographically
/// sorted. Repeated blocks are kept (designs are multisets of blocks).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlockDesign {
    ground_size: usize,
    blocks: Vec<Vec<usize>>,
}

impl BlockDesign {
    /// Canonicalizes `blocks` and checks the structural invariants: at least one
    /// block, every block the same size `k >= 2`, distinct in-range elements.
    pub fn new(ground_size: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidDesign("no blocks".into()));
        }
        let mut blocks = blocks;
        for block in &mut blocks {
            block.sort_unstable();
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDesign(format!(
                    "block {block:?} repeats an element"
                )));
            }
            if let Some(&x) = block.last() {
                if x >= ground_size {
                    return Err(Error::InvalidDesign(format!(
                        "element {x} outside ground set of size {ground_size}"
                    )));
                }
            }
        }
        let k = blocks[0].len();
        if k < 2 {
            return Err(Error::InvalidDesign(format!("block size {k} < 2")));
        }
        if let Some(b) = blocks.iter().find(|b| b.len() != k) {
            return Err(Error::InvalidDesign(format!(
                "block {b:?} has size {} but the first block has size {k}",
                b.len()
            )));
        }
        blocks.sort();
        Ok(Self {
            ground_size,
            blocks,
        })
    }

    /// Converts 1-based element labels (as in `{x₁, x₂, x₄}`) to 0-based.
    pub fn from_one_based(ground_size: usize, blocks: &[&[usize]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&x| {
                        x.checked_sub(1)
                            .ok_or_else(|| Error::InvalidDesign("element label 0 in 1-based list".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground_size, blocks)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    /// Applies a relabeling of the ground set.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.ground_size {
            return Err(Error::Precondition("permutation length mismatch".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| perm[x]).collect())
            .collect();
        Self::new(self.ground_size, blocks)
    }

    /// Block multiset union over the same ground set.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.ground_size != other.ground_size {
            return Err(Error::Precondition("union of designs on different ground sets".into()));
        }
        let blocks = self.blocks.iter().chain(&other.blocks).cloned().collect();
        Self::new(self.ground_size, blocks)
    }

    /// Parameters if the design passes every axiom.
    pub fn params(&self) -> Option<DesignParams> {
        verify_design(self).derived_params
    }

    /// Runs [`verify_design`] and returns the parameters, or an error naming the
    /// first failed axiom.
    pub fn verified_params(&self) -> Result<DesignParams> {
        let report = verify_design(self);
        report.derived_params.ok_or_else(|| {
            Error::InvalidDesign(format!("block list is not a balanced design: {report}"))
        })
    }
}

impl<'de> Deserialize<'de> for BlockDesign {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            ground_size: usize,
            blocks: Vec<Vec<usize>>,
        }
        let raw = Raw::deserialize(de)?;
        BlockDesign::new(raw.ground_size, raw.blocks).map_err(serde::de::Error::custom)
    }
}

/// Result of exhaustively checking the three design axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignCheckReport {
    /// Axiom (a): every block has size `k`.
    pub uniform_block_size: bool,
    /// Per-element block count.
    pub replication: Vec<usize>,
    /// Axiom (b): every element lies in the same number of blocks.
    pub replication_uniform: bool,
    pub pair_min: usize,
    pub pair_max: usize,
    /// Axiom (c): every pair lies in the same positive number of blocks.
    pub pair_balanced: bool,
    /// Present only when all three axioms hold.
    pub derived_params: Option<DesignParams>,
}

impl DesignCheckReport {
    pub fn all_pass(&self) -> bool {
        self.uniform_block_size && self.replication_uniform && self.pair_balanced
    }
}

impl fmt::Display for DesignCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (rmin, rmax) = (
            self.replication.iter().min().copied().unwrap_or(0),
            self.replication.iter().max().copied().unwrap_or(0),
        );
        write!(
            f,
            "uniform blocks: {}, replication {rmin}..={rmax}, pair multiplicity {}..={}",
            self.uniform_block_size, self.pair_min, self.pair_max
        )
    }
}

/// Counts block sizes, per-element replication and per-pair multiplicity.
pub fn verify_design(design: &BlockDesign) -> DesignCheckReport {
    let n = design.ground_size;
    let k = design.blocks[0].len();
    let uniform_block_size = design.blocks.iter().all(|b| b.len() == k);

    let mut replication = vec![0usize; n];
    let mut pairs = vec![0usize; n * n];
    for block in &design.blocks {
        for (i, &x) in block.iter().enumerate() {
            replication[x] += 1;
            for &y in &block[i + 1..] {
                pairs[x * n + y] += 1;
            }
        }
    }
    let replication_uniform = replication.windows(2).all(|w| w[0] == w[1]);

    let mut pair_min = usize::MAX;
    let mut pair_max = 0;
    for x in 0..n {
        for y in x + 1..n {
            let c = pairs[x * n + y];
            pair_min = pair_min.min(c);
            pair_max = pair_max.max(c);
        }
    }
    if n < 2 {
        pair_min = 0;
    }
    let pair_balanced = n >= 2 && pair_min == pair_max && pair_min > 0;

    let derived_params = (uniform_block_size && replication_uniform && pair_balanced)
        .then(|| {
            DesignParams::new(
                design.blocks.len() as u64,
                n as u64,
                replication[0] as u64,
                k as u64,
                pair_min as u64,
            )
            .ok()
        })
        .flatten();

    DesignCheckReport {
        uniform_block_size,
        replication,
        replication_uniform,
        pair_min,
        pair_max,
        pair_balanced,
        derived_params,
    }
}
