//! Full-dimensional polytopes in three dimensions with exact data.
//!
//! Facets are stored as `(normal, offset)` with a primitive integer normal and
//! the inequality `<normal, x> >= -offset`, so a lattice polytope with the
//! origin in its interior is reflexive exactly when every offset is 1.

mod dual;
mod hull;
pub mod io;
mod points;

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix3, SegmentCount};
use crate::rational::Rational;

pub use dual::{dual_face, is_reflexive, polar_dual, ReflexivityVerdict};
pub use hull::{hull, COORDINATE_LIMIT};

pub type Point = [i64; 3];
pub type RationalPoint = [Rational; 3];

/// `<normal, x> >= -offset`
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Point,
    pub offset: i64,
}

impl Facet {
    pub fn slack(&self, x: &Point) -> i128 {
        dot128(&self.normal, x) + self.offset as i128
    }

    /// The vertex of the polar dual this facet corresponds to.
    pub fn dual_vertex(&self) -> Option<RationalPoint> {
        (self.offset != 0).then(|| self.normal.map(|n| Rational::new(n, self.offset)))
    }
}

/// Same as [`Facet`] but with a rational offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RationalFacet {
    pub normal: Point,
    pub offset: Rational,
}

impl RationalFacet {
    /// Sign of `<normal, x> + offset`.
    pub fn slack_sign(&self, x: &RationalPoint) -> std::cmp::Ordering {
        let (num, den) = common_denominator(x);
        // <n, num/den> + p/q  ~  q<n,num> + p*den   (den, q > 0)
        let q = self.offset.denom() as i128;
        let p = self.offset.numer() as i128;
        (q * dot128(&self.normal, &num) + p * den as i128).cmp(&0)
    }
}

/// An integral-vertex 3-polytope with its irredundant vertices and facets,
/// both sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LatticePolytope {
    vertices: Vec<Point>,
    facets: Vec<Facet>,
}

/// Polytope whose vertices may be non-integral; typically a polar dual.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalPolytope {
    vertices: Vec<RationalPoint>,
    facets: Vec<RationalFacet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFace {
    pub dim: usize,
    pub vertices: Vec<RationalPoint>,
}

impl RationalFace {
    pub fn to_lattice(&self) -> Option<Face> {
        let vertices = self
            .vertices
            .iter()
            .map(to_integer_point)
            .collect::<Option<Vec<_>>>()?;
        Some(Face {
            dim: self.dim,
            vertices,
        })
    }
}

/// A 1-face with its lattice-point counts under both conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub endpoints: [Point; 2],
    pub points: SegmentCount,
}

/// Anything with a finite vertex list that can be tested for containment.
pub trait ConvexBody {
    fn rational_vertices(&self) -> Vec<RationalPoint>;
}

impl LatticePolytope {
    pub(crate) fn from_sorted_parts(vertices: Vec<Point>, facets: Vec<Facet>) -> Self {
        LatticePolytope { vertices, facets }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains_point(&self, x: &Point) -> bool {
        self.facets.iter().all(|f| f.slack(x) >= 0)
    }

    pub fn strictly_contains_point(&self, x: &Point) -> bool {
        self.facets.iter().all(|f| f.slack(x) > 0)
    }

    pub fn contains_rational_point(&self, x: &RationalPoint) -> bool {
        let (num, den) = common_denominator(x);
        self.facets
            .iter()
            .all(|f| dot128(&f.normal, &num) + f.offset as i128 * den as i128 >= 0)
    }

    /// True iff every vertex of `other` satisfies every facet inequality.
    pub fn contains_polytope<Q: ConvexBody + ?Sized>(&self, other: &Q) -> bool {
        other
            .rational_vertices()
            .iter()
            .all(|v| self.contains_rational_point(v))
    }

    pub fn has_origin_in_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset > 0)
    }

    /// All facet offsets equal 1.
    pub fn has_unit_offsets(&self) -> bool {
        self.facets.iter().all(|f| f.offset == 1)
    }

    /// Vertices lying on the given facet, sorted.
    pub fn facet_vertices(&self, facet: &Facet) -> Vec<Point> {
        self.vertices
            .iter()
            .filter(|v| facet.slack(v) == 0)
            .copied()
            .collect()
    }

    fn incidence(&self) -> Vec<BTreeSet<usize>> {
        self.vertices
            .iter()
            .map(|v| {
                self.facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.slack(v) == 0)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }

    /// Every 1-face exactly once, ordered by endpoints.
    pub fn edges(&self) -> Vec<Edge> {
        let inc = self.incidence();
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                if inc[i].intersection(&inc[j]).nth(1).is_some() {
                    let (u, v) = (self.vertices[i], self.vertices[j]);
                    out.push(Edge {
                        endpoints: [u, v],
                        points: SegmentCount::from_length(gcd_length(&u, &v)),
                    });
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: &Point, v: &Point) -> bool {
        let (a, b) = if u <= v { (*u, *v) } else { (*v, *u) };
        self.edges().iter().any(|e| e.endpoints == [a, b])
    }

    /// Image under `x -> m x + t`, re-hulled into canonical form.
    pub fn transform(&self, m: &Matrix3, t: &Point) -> Result<LatticePolytope> {
        let image = self
            .vertices
            .iter()
            .map(|v| {
                let y = m.apply(*v)?;
                let mut out = [0; 3];
                for k in 0..3 {
                    out[k] = y[k]
                        .checked_add(t[k])
                        .ok_or(Error::Overflow("translation"))?;
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        hull(&image)
    }

    /// `#vertices - #edges + #facets`
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges().len() as i64 + self.facets.len() as i64
    }
}

impl ConvexBody for LatticePolytope {
    fn rational_vertices(&self) -> Vec<RationalPoint> {
        self.vertices
            .iter()
            .map(|v| v.map(Rational::from))
            .collect()
    }
}

impl RationalPolytope {
    pub(crate) fn from_sorted_parts(
        vertices: Vec<RationalPoint>,
        facets: Vec<RationalFacet>,
    ) -> Self {
        RationalPolytope { vertices, facets }
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[RationalFacet] {
        &self.facets
    }

    pub fn is_integral(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(Rational::is_integer))
    }

    /// First non-integral vertex in sorted order.
    pub fn first_rational_vertex(&self) -> Option<RationalPoint> {
        self.vertices
            .iter()
            .find(|v| !v.iter().all(Rational::is_integer))
            .copied()
    }

    pub fn contains_rational_point(&self, x: &RationalPoint) -> bool {
        self.facets
            .iter()
            .all(|f| f.slack_sign(x) != std::cmp::Ordering::Less)
    }

    pub fn contains_polytope<Q: ConvexBody + ?Sized>(&self, other: &Q) -> bool {
        other
            .rational_vertices()
            .iter()
            .all(|v| self.contains_rational_point(v))
    }

    /// The lattice polytope with the same vertices, when all are integral.
    pub fn to_lattice(&self) -> Option<LatticePolytope> {
        let vertices = self
            .vertices
            .iter()
            .map(to_integer_point)
            .collect::<Option<Vec<_>>>()?;
        hull(&vertices).ok()
    }

    /// Polar dual of a rational polytope with the origin in its interior.
    pub fn polar_dual(&self) -> Result<RationalPolytope> {
        dual::polar_dual_rational(self)
    }
}

impl ConvexBody for RationalPolytope {
    fn rational_vertices(&self) -> Vec<RationalPoint> {
        self.vertices.clone()
    }
}

impl<T: ConvexBody + ?Sized> ConvexBody for &T {
    fn rational_vertices(&self) -> Vec<RationalPoint> {
        (**self).rational_vertices()
    }
}

pub(crate) fn dot128(a: &Point, b: &Point) -> i128 {
    a.iter().zip(b).map(|(x, y)| *x as i128 * *y as i128).sum()
}

pub(crate) fn gcd_length(u: &Point, v: &Point) -> u64 {
    u.iter().zip(v).fold(0u64, |g, (a, b)| {
        g.gcd(&((*b as i128 - *a as i128).unsigned_abs() as u64))
    })
}

/// `x = num / den` with `den > 0` the least common denominator.
pub(crate) fn common_denominator(x: &RationalPoint) -> (Point, i64) {
    let den = x.iter().fold(1i64, |l, r| l.lcm(&r.denom()));
    let num = x.map(|r| r.numer() * (den / r.denom()));
    (num, den)
}

pub fn to_integer_point(x: &RationalPoint) -> Option<Point> {
    Some([x[0].to_integer()?, x[1].to_integer()?, x[2].to_integer()?])
}

pub fn to_rational_point(x: &Point) -> RationalPoint {
    x.map(Rational::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cube() -> LatticePolytope {
        let mut pts = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    pts.push([x, y, z]);
                }
            }
        }
        hull(&pts).unwrap()
    }

    fn simplex() -> LatticePolytope {
        hull(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    #[test]
    fn edge_counts() {
        let s = simplex().edges();
        assert_eq!(s.len(), 6);
        assert!(s.iter().all(|e| e.points
            == SegmentCount {
                total: 2,
                interior: 0
            }));
        let c = cube().edges();
        assert_eq!(c.len(), 12);
        assert!(c.iter().all(|e| e.points
            == SegmentCount {
                total: 3,
                interior: 1
            }));
    }

    #[test]
    fn containment() {
        let c = cube();
        let s = simplex();
        assert!(c.contains_polytope(&s));
        assert!(!s.contains_polytope(&c));
        assert!(c.contains_polytope(&c));
        assert!(c.contains_rational_point(&[
            Rational::new(1, 2),
            Rational::ZERO,
            Rational::new(-1, 1)
        ]));
        assert!(!c.contains_rational_point(&[Rational::new(3, 2), Rational::ZERO, Rational::ZERO]));
    }

    #[test]
    fn euler_relation_on_small_examples() {
        assert_eq!(cube().euler_characteristic(), 2);
        assert_eq!(simplex().euler_characteristic(), 2);
    }
}
