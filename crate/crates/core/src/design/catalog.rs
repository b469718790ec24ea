//! Bundled and user-extensible catalog of explicit designs.
//!
//! The catalog is a JSON document:
//!
//! ```json
//! {
//!   "version": 1,
//!   "entries": [
//!     { "name": "fano", "params": { "b": 7, "n": 7, "r": 3, "k": 3, "lambda": 1 },
//!       "ground_size": 7, "blocks": [[0, 1, 3], ...] }
//!   ]
//! }
//! ```
//!
//! Stored parameters are never trusted: every entry is re-verified on load and
//! must realize exactly the parameters it claims.

use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::design::{verify_design, BlockDesign};
use crate::error::{Error, Result};
use crate::params::DesignParams;

pub const CATALOG_FORMAT_VERSION: u32 = 1;

static BUNDLED_JSON: &str = include_str!("../../data/catalog.json");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: DesignParams,
    pub design: BlockDesign,
}

#[derive(Serialize, Deserialize)]
struct RawEntry {
    name: String,
    params: DesignParams,
    ground_size: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawCatalog {
    version: u32,
    entries: Vec<RawEntry>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// The catalog shipped with the library.
    pub fn bundled() -> &'static Catalog {
        static BUNDLED: OnceLock<Catalog> = OnceLock::new();
        BUNDLED.get_or_init(|| {
            Catalog::from_json(BUNDLED_JSON).expect("bundled catalog failed validation")
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawCatalog =
            serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        if raw.version != CATALOG_FORMAT_VERSION {
            return Err(Error::Catalog(format!(
                "unsupported catalog version {}",
                raw.version
            )));
        }
        let mut catalog = Catalog::default();
        for entry in raw.entries {
            let design = BlockDesign::new(entry.ground_size, entry.blocks)
                .map_err(|e| Error::Catalog(format!("entry {}: {e}", entry.name)))?;
            let stored = entry.params;
            let name = entry.name;
            let inserted = catalog
                .insert(&name, design)
                .map_err(|e| Error::Catalog(format!("entry {name}: {e}")))?;
            if inserted != stored {
                return Err(Error::Catalog(format!(
                    "entry {name}: claims {stored} but realizes {inserted}"
                )));
            }
        }
        Ok(catalog)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let raw = RawCatalog {
            version: CATALOG_FORMAT_VERSION,
            entries: self
                .entries
                .iter()
                .map(|e| RawEntry {
                    name: e.name.clone(),
                    params: e.params,
                    ground_size: e.design.ground_size(),
                    blocks: e.design.blocks().to_vec(),
                })
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&raw).expect("catalog serialization");
        out.push('\n');
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    /// Adds a design after verifying it; returns the parameters it realizes.
    pub fn insert(&mut self, name: &str, design: BlockDesign) -> Result<DesignParams> {
        let params = design.verified_params()?;
        if self.entries.iter().any(|e| e.name == name) {
            return Err(Error::Catalog(format!("duplicate entry name {name}")));
        }
        self.entries.push(CatalogEntry {
            name: name.to_owned(),
            params,
            design,
        });
        Ok(params)
    }

    /// Appends the entries of `other` whose names are not already present.
    pub fn merge(&mut self, other: &Catalog) {
        for entry in &other.entries {
            if !self.entries.iter().any(|e| e.name == entry.name) {
                self.entries.push(entry.clone());
            }
        }
    }

    pub fn lookup(&self, params: &DesignParams) -> Option<&BlockDesign> {
        self.entries
            .iter()
            .find(|e| e.params == *params)
            .map(|e| &e.design)
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Re-runs the axiom check on every entry.
    pub fn validate(&self) -> Vec<(String, bool)> {
        self.entries
            .iter()
            .map(|e| {
                let report = verify_design(&e.design);
                (e.name.clone(), report.derived_params == Some(e.params))
            })
            .collect()
    }
}

/// Per-entry result of [`check_catalog_json`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryCheck {
    pub name: String,
    pub claimed: DesignParams,
    /// What the blocks realize, if they form a design at all.
    pub realized: Option<DesignParams>,
    pub ok: bool,
}

/// Checks every entry of a catalog document independently, so one bad entry
/// does not hide the others. Fails only if the document itself is malformed.
pub fn check_catalog_json(text: &str) -> Result<Vec<EntryCheck>> {
    let raw: RawCatalog = serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
    if raw.version != CATALOG_FORMAT_VERSION {
        return Err(Error::Catalog(format!(
            "unsupported catalog version {}",
            raw.version
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    Ok(raw
        .entries
        .into_iter()
        .map(|e| {
            let realized = BlockDesign::new(e.ground_size, e.blocks)
                .ok()
                .and_then(|d| verify_design(&d).derived_params);
            let unique = seen.insert(e.name.clone());
            EntryCheck {
                ok: unique && realized == Some(e.params),
                name: e.name,
                claimed: e.params,
                realized,
            }
        })
        .collect())
}

/// Looks up `params` in the bundled catalog.
pub fn catalog_lookup(params: &DesignParams) -> Option<BlockDesign> {
    Catalog::bundled().lookup(params).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bundled_has_the_three_explicit_designs() {
        let cat = Catalog::bundled();
        for (design, p) in [
            (fixtures::twofold_six(), (10, 6, 5, 3, 2)),
            (fixtures::fano(), (7, 7, 3, 3, 1)),
            (fixtures::biplane_seven(), (7, 7, 4, 4, 2)),
        ] {
            let params = DesignParams::new(p.0, p.1, p.2, p.3, p.4).unwrap();
            assert_eq!(cat.lookup(&params), Some(&design));
        }
        assert!(cat.validate().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn corrupt_entries_rejected() {
        let lying = r#"{"version":1,"entries":[{"name":"x",
            "params":{"b":1,"n":3,"r":1,"k":3,"lambda":2},
            "ground_size":3,"blocks":[[0,1,2]]}]}"#;
        assert!(matches!(Catalog::from_json(lying), Err(Error::Catalog(_))));

        let unbalanced = r#"{"version":1,"entries":[{"name":"x",
            "params":{"b":2,"n":4,"r":1,"k":3,"lambda":1},
            "ground_size":4,"blocks":[[0,1,2],[0,1,3]]}]}"#;
        assert!(matches!(Catalog::from_json(unbalanced), Err(Error::Catalog(_))));

        assert!(matches!(Catalog::from_json("{not json"), Err(Error::Catalog(_))));
    }

    #[test]
    fn insert_refuses_non_designs() {
        let mut cat = Catalog::default();
        let bad = BlockDesign::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert!(cat.insert("bad", bad).is_err());
        assert!(cat.is_empty());
        cat.insert("fano", fixtures::fano()).unwrap();
        let again = Catalog::from_json(&cat.to_json()).unwrap();
        assert_eq!(again, cat);
    }
}
