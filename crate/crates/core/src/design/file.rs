use serde::{Deserialize, Serialize};

use crate::design::BlockDesign;
use crate::error::{Error, Result};
use crate::params::DesignParams;

pub const DESIGN_FORMAT_VERSION: u32 = 1;

/// On-disk form of a single design.
///
/// ```json
/// {
///   "version": 1,
///   "params": { "b": 7, "n": 7, "r": 3, "k": 3, "lambda": 1 },
///   "ground_size": 7,
///   "blocks": [[0, 1, 3], [0, 2, 6], ...]
/// }
/// ```
///
/// `params` is optional on input; when present it must match what the blocks
/// actually realize.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignFile {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<DesignParams>,
    pub ground_size: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl DesignFile {
    pub fn from_design(design: &BlockDesign) -> Self {
        Self {
            version: DESIGN_FORMAT_VERSION,
            params: design.params(),
            ground_size: design.ground_size(),
            blocks: design.blocks().to_vec(),
        }
    }

    /// Builds the design and checks any stated parameters against it.
    pub fn into_design(self) -> Result<BlockDesign> {
        if self.version != DESIGN_FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported design format version {}",
                self.version
            )));
        }
        let design = BlockDesign::new(self.ground_size, self.blocks)?;
        if let Some(stated) = self.params {
            let actual = design.verified_params()?;
            if actual != stated {
                return Err(Error::InvalidDesign(format!(
                    "stated parameters {stated} but blocks realize {actual}"
                )));
            }
        }
        Ok(design)
    }

    pub fn parse(text: &str) -> Result<BlockDesign> {
        let file: DesignFile = serde_json::from_str(text)?;
        file.into_design()
    }

    pub fn to_json(design: &BlockDesign) -> String {
        let mut out = serde_json::to_string_pretty(&Self::from_design(design))
            .expect("design serialization is infallible");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip() {
        let fano = fixtures::fano();
        let text = DesignFile::to_json(&fano);
        assert_eq!(DesignFile::parse(&text).unwrap(), fano);
    }

    #[test]
    fn stated_params_must_match() {
        let text = r#"{"version":1,"params":{"b":1,"n":3,"r":1,"k":3,"lambda":2},
                       "ground_size":3,"blocks":[[0,1,2]]}"#;
        assert!(matches!(DesignFile::parse(text), Err(Error::InvalidDesign(_))));
    }

    #[test]
    fn unknown_version() {
        let text = r#"{"version":9,"ground_size":3,"blocks":[[0,1,2]]}"#;
        assert!(matches!(DesignFile::parse(text), Err(Error::Parse(_))));
    }
}
