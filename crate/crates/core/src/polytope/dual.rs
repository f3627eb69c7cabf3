use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::hull::affine_dimension;
use super::{
    common_denominator, Face, LatticePolytope, Point, RationalFace, RationalFacet, RationalPoint,
    RationalPolytope,
};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Outcome of a reflexivity test. Every failure carries its witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ReflexivityVerdict {
    Reflexive,
    /// A vertex of the polar dual that is not a lattice point.
    RationalDualVertex {
        witness: RationalPoint,
    },
    /// The origin is not the unique interior lattice point. The witness is an
    /// interior lattice point other than the origin, or the origin itself
    /// when it is not interior.
    InteriorPointFailure {
        witness: Point,
        origin_interior: bool,
    },
}

impl ReflexivityVerdict {
    pub fn is_reflexive(&self) -> bool {
        matches!(self, ReflexivityVerdict::Reflexive)
    }

    pub fn label(&self) -> &'static str {
        match self {
            ReflexivityVerdict::Reflexive => "reflexive",
            ReflexivityVerdict::RationalDualVertex { .. } => "rational-dual-vertex",
            ReflexivityVerdict::InteriorPointFailure { .. } => "interior-point-failure",
        }
    }
}

/// `{y : <y, x> >= -1 for all x in P}`; one vertex per facet of `P`.
pub fn polar_dual(p: &LatticePolytope) -> Result<RationalPolytope> {
    if !p.has_origin_in_interior() {
        return Err(Error::OriginNotInterior);
    }
    let vertices: Vec<RationalPoint> = p
        .facets()
        .iter()
        .filter_map(|f| f.dual_vertex())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let facets: Vec<RationalFacet> = p
        .vertices()
        .iter()
        .map(|v| {
            let g = v.iter().fold(0i64, |g, x| g.gcd(x));
            RationalFacet {
                normal: v.map(|x| x / g),
                offset: Rational::new(1, g),
            }
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(RationalPolytope::from_sorted_parts(vertices, facets))
}

pub(super) fn polar_dual_rational(p: &RationalPolytope) -> Result<RationalPolytope> {
    if p.facets().iter().any(|f| f.offset <= Rational::ZERO) {
        return Err(Error::OriginNotInterior);
    }
    let vertices: Vec<RationalPoint> = p
        .facets()
        .iter()
        .map(|f| {
            let (num, den) = (f.offset.numer(), f.offset.denom());
            f.normal.map(|n| Rational::new(n * den, num))
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let facets: Vec<RationalFacet> = p
        .vertices()
        .iter()
        .map(|y| {
            // <num/den, x> >= -1  <=>  <num/g, x> >= -den/g
            let (num, den) = common_denominator(y);
            let g = num.iter().fold(0i64, |g, x| g.gcd(x));
            RationalFacet {
                normal: num.map(|x| x / g),
                offset: Rational::new(den, g),
            }
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(RationalPolytope::from_sorted_parts(vertices, facets))
}

/// The face `{y in P* : <y, x> = -1 for all x in F}` of the polar dual.
///
/// `face` must list exactly the vertices of a proper face of `p`.
pub fn dual_face(p: &LatticePolytope, face: &[Point]) -> Result<RationalFace> {
    if !p.has_origin_in_interior() {
        return Err(Error::OriginNotInterior);
    }
    let wanted: BTreeSet<Point> = face.iter().copied().collect();
    let not_a_face = || Error::NotAFace(wanted.iter().copied().collect());
    if wanted.is_empty() || !wanted.iter().all(|v| p.vertices().contains(v)) {
        return Err(not_a_face());
    }
    let tight: Vec<_> = p
        .facets()
        .iter()
        .filter(|f| wanted.iter().all(|v| f.slack(v) == 0))
        .collect();
    if tight.is_empty() {
        return Err(not_a_face());
    }
    let spanned: BTreeSet<Point> = p
        .vertices()
        .iter()
        .filter(|v| tight.iter().all(|f| f.slack(v) == 0))
        .copied()
        .collect();
    if spanned != wanted {
        return Err(not_a_face());
    }
    let face_pts: Vec<Point> = wanted.into_iter().collect();
    let dim = affine_dimension(&face_pts);
    let vertices: Vec<RationalPoint> = tight
        .iter()
        .filter_map(|f| f.dual_vertex())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(RationalFace {
        dim: 2 - dim,
        vertices,
    })
}

impl Face {
    pub fn of(vertices: &[Point]) -> Face {
        let mut v = vertices.to_vec();
        v.sort();
        v.dedup();
        Face {
            dim: affine_dimension(&v),
            vertices: v,
        }
    }
}

/// Reflexive iff the origin is the unique interior lattice point and every
/// vertex of the polar dual is integral.
pub fn is_reflexive(p: &LatticePolytope) -> ReflexivityVerdict {
    let interior = p.interior_lattice_points();
    if !p.strictly_contains_point(&[0, 0, 0]) {
        return ReflexivityVerdict::InteriorPointFailure {
            witness: interior.first().copied().unwrap_or([0, 0, 0]),
            origin_interior: false,
        };
    }
    if let Some(extra) = interior.iter().find(|x| **x != [0, 0, 0]) {
        return ReflexivityVerdict::InteriorPointFailure {
            witness: *extra,
            origin_interior: true,
        };
    }
    match p
        .facets()
        .iter()
        .filter_map(|f| f.dual_vertex())
        .find(|y| !y.iter().all(Rational::is_integer))
    {
        Some(witness) => ReflexivityVerdict::RationalDualVertex { witness },
        None => ReflexivityVerdict::Reflexive,
    }
}
