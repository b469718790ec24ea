//! The six star-graph families and what is claimed for each.
//!
//! | name      | design                              | claimed block                             |
//! |-----------|-------------------------------------|-------------------------------------------|
//! | `thm5`    | STS(n), n ≡ 1,3 (mod 6), n ≥ 7        | geodetic, 3-connected, degrees ((n-1)/2, 3) |
//! | `thm6`    | twofold triple system, n ≡ 0,1 (mod 3), n ≥ 4 | bigeodetic, 3-connected, degrees (n-1, 3) |
//! | `thm7`    | threefold triple system, n odd, n ≥ 5 | trigeodetic, 3-connected, degrees (3(n-1)/2, 3) |
//! | `thm8`    | projective plane of prime-power order n | geodetic, (n+1)-regular and -connected, diameter 4 |
//! | `thm9`    | symmetric λ = 2 design (biplane)      | bigeodetic, (n+1)-regular and -connected, diameter 4 |
//! | `thm10`   | symmetric λ = 3 design                | trigeodetic, (n+1)-regular and -connected, diameter 4 |

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::design::{build_projective_plane, build_symmetric, build_triple_system_with, BlockDesign, Catalog};
use crate::error::{Error, Result};
use crate::field::is_prime_power;
use crate::params::{symmetric_params, triple_system_params, DesignParams};
use crate::star::{build_star, cover_from_design, StarGraph};
use crate::verify::{full_report, Claims, GeodeticReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "thm5_sts")]
    SteinerTriple,
    #[serde(rename = "thm6_twofold")]
    TwofoldTriple,
    #[serde(rename = "thm7_threefold")]
    ThreefoldTriple,
    #[serde(rename = "thm8_plane")]
    ProjectivePlane,
    #[serde(rename = "thm9_biplane")]
    Biplane,
    #[serde(rename = "thm10_threefold_symmetric")]
    ThreefoldSymmetric,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::SteinerTriple,
        Family::TwofoldTriple,
        Family::ThreefoldTriple,
        Family::ProjectivePlane,
        Family::Biplane,
        Family::ThreefoldSymmetric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::SteinerTriple => "thm5_sts",
            Family::TwofoldTriple => "thm6_twofold",
            Family::ThreefoldTriple => "thm7_threefold",
            Family::ProjectivePlane => "thm8_plane",
            Family::Biplane => "thm9_biplane",
            Family::ThreefoldSymmetric => "thm10_threefold_symmetric",
        }
    }

    fn short(self) -> &'static str {
        self.name().split('_').next().expect("nonempty name")
    }

    pub fn lambda(self) -> u64 {
        match self {
            Family::SteinerTriple | Family::ProjectivePlane => 1,
            Family::TwofoldTriple | Family::Biplane => 2,
            Family::ThreefoldTriple | Family::ThreefoldSymmetric => 3,
        }
    }

    pub fn is_symmetric(self) -> bool {
        matches!(
            self,
            Family::ProjectivePlane | Family::Biplane | Family::ThreefoldSymmetric
        )
    }

    /// Whether `n` is in the family's stated range.
    pub fn admits(self, n: u64) -> bool {
        let square = |x: u64| x.isqrt() * x.isqrt() == x;
        match self {
            Family::SteinerTriple => n >= 7 && matches!(n % 6, 1 | 3),
            Family::TwofoldTriple => n >= 4 && matches!(n % 3, 0 | 1),
            Family::ThreefoldTriple => n >= 5 && n % 2 == 1,
            Family::ProjectivePlane => is_prime_power(n),
            Family::Biplane => {
                (matches!(n % 4, 1 | 2) && (2..=10).contains(&n) && square(n - 1))
                    || (matches!(n % 4, 0 | 3) && (3..=12).contains(&n) && is_prime_power(n - 1))
            }
            Family::ThreefoldSymmetric => {
                matches!(n % 3, 0 | 2) && (3..=14).contains(&n) && n != 12
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts the full name (`thm5_sts`) or its prefix (`thm5`).
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || f.short() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// A family together with an admissible order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: u64,
}

impl FamilySpec {
    pub fn new(family: Family, n: u64) -> Result<Self> {
        if !family.admits(n) {
            return Err(Error::InadmissibleParameters(format!(
                "n = {n} is outside the range of {family}"
            )));
        }
        Ok(Self { family, n })
    }

    pub fn design_params(&self) -> Result<DesignParams> {
        if self.family.is_symmetric() {
            symmetric_params(self.n, self.family.lambda())
        } else {
            triple_system_params(self.n, self.family.lambda())
        }
    }

    /// Vertex count, K, connectivity, degrees and (for symmetric families)
    /// diameter, as stated for the family.
    pub fn claims(&self) -> Claims {
        let n = self.n as usize;
        let (vertices, degrees, connectivity, diameter) = match self.family {
            Family::SteinerTriple => (n * (n + 1) / 2, [(n - 1) / 2, 3], 3, None),
            Family::TwofoldTriple => (n * n, [n - 1, 3], 3, None),
            Family::ThreefoldTriple => (n * (3 * n - 1) / 2, [3 * (n - 1) / 2, 3], 3, None),
            Family::ProjectivePlane => ((n * n + n + 1) * (n + 2), [n + 1; 2], n + 1, Some(4)),
            Family::Biplane => ((n * n + n + 2) * (n + 2) / 2, [n + 1; 2], n + 1, Some(4)),
            Family::ThreefoldSymmetric => {
                ((n * n + n + 3) * (n + 2) / 3, [n + 1; 2], n + 1, Some(4))
            }
        };
        Claims {
            k: Some(self.family.lambda()),
            connectivity: Some(connectivity),
            degrees: Some(BTreeSet::from(degrees)),
            vertices: Some(vertices),
            diameter,
        }
    }

    /// Constructs the family's design, falling back to `catalog` and a bounded
    /// solver run where no closed-form construction applies.
    pub fn build_design(&self, catalog: &Catalog, node_budget: u64) -> Result<BlockDesign> {
        let lambda = self.family.lambda();
        match self.family {
            Family::ProjectivePlane => build_projective_plane(self.n),
            f if f.is_symmetric() => build_symmetric(self.n, lambda, catalog, node_budget),
            _ => build_triple_system_with(self.n, lambda, catalog, node_budget),
        }
    }

    pub fn run(&self, catalog: &Catalog, node_budget: u64) -> Result<FamilyRun> {
        let design = self.build_design(catalog, node_budget)?;
        let star = build_star(&cover_from_design(&design)?);
        let report = full_report(&design, &star, &self.claims())?;
        Ok(FamilyRun {
            spec: *self,
            design,
            star,
            report,
        })
    }
}

/// Design, star graph and reconciled report for one family member.
#[derive(Clone, Debug)]
pub struct FamilyRun {
    pub spec: FamilySpec,
    pub design: BlockDesign,
    pub star: StarGraph,
    pub report: GeodeticReport,
}
