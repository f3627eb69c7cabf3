//! Sandwich enumeration, segment censuses and unimodular embedding search.

mod census;
mod embed;
mod enumerate;

pub use census::{segment_census, Convention, LengthBucket, SegmentCensus, SegmentWitness};
pub use embed::{find_unimodular_embedding, EmbeddingMode, EmbeddingWitness};
pub use enumerate::enumerate_intermediate_reflexive;

use crate::error::{Error, Result};
use crate::polytope::{is_reflexive, LatticePolytope};

/// Lattice polytopes `lower ⊆ upper` with `upper` reflexive, in one coordinate
/// system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichProblem {
    lower: LatticePolytope,
    upper: LatticePolytope,
}

impl SandwichProblem {
    pub fn new(lower: LatticePolytope, upper: LatticePolytope) -> Result<Self> {
        if !upper.contains_polytope(&lower) {
            return Err(Error::InvalidSandwich(
                "lower polytope is not contained in the upper one".into(),
            ));
        }
        if !is_reflexive(&upper).is_reflexive() {
            return Err(Error::InvalidSandwich(
                "upper polytope is not reflexive".into(),
            ));
        }
        Ok(SandwichProblem { lower, upper })
    }

    pub fn lower(&self) -> &LatticePolytope {
        &self.lower
    }

    pub fn upper(&self) -> &LatticePolytope {
        &self.upper
    }
}
