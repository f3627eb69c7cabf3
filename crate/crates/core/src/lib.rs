//! Exact lattice-polytope toolkit for polytope duality of K3 families.
//!
//! The crate builds weight polytopes of weighted projective 3-spaces and
//! Newton polytopes of weighted-homogeneous polynomials, enumerates the
//! reflexive polytopes sandwiched between them, and decides by exhaustive
//! search whether a polar dual embeds unimodularly into a target polytope.
//! All arithmetic is exact integer or rational arithmetic.

pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod newton;
pub mod polytope;
pub mod rational;
pub mod report;
pub mod search;

pub use error::{Error, Result};
pub use fixtures::{Case, CaseFixture};
pub use linalg::{
    kernel_basis, lattice_length, spans_same_lattice, LatticeBasis, LatticeVector4, Matrix3,
    SegmentCount, WeightSystem,
};
pub use newton::{
    exponent_matrix, is_invertible_polynomial, monomial_to_lattice, newton_polytope,
    parse_polynomial, weight_polytope, Monomial, WeightedPolynomial,
};
pub use polytope::{
    dual_face, hull, is_reflexive, polar_dual, Face, Facet, LatticePolytope, Point,
    RationalPolytope, ReflexivityVerdict,
};
pub use rational::Rational;
pub use report::{verify_polytope_duality, TheoremReport, Verdict, VerifyOptions};
pub use search::{
    enumerate_intermediate_reflexive, find_unimodular_embedding, segment_census, EmbeddingMode,
    EmbeddingWitness, SandwichProblem, SegmentCensus,
};
