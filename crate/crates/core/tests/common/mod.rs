//! Slow, obviously-correct reference implementations and generators shared by
//! the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use proptest::prelude::*;

use polydual::{hull, LatticePolytope, Matrix3, Point};

fn sub(a: &Point, b: &Point) -> Point {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: &Point, b: &Point) -> Point {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn dot(a: &Point, b: &Point) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn det3(a: &Point, b: &Point, c: &Point) -> i64 {
    dot(a, &cross(b, c))
}

/// Facets as (primitive inner normal n, offset c) with `<n,x> >= -c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleHull {
    pub vertices: Vec<Point>,
    pub facets: Vec<(Point, i64)>,
}

impl OracleHull {
    pub fn contains(&self, x: &Point) -> bool {
        self.facets.iter().all(|(n, c)| dot(n, x) >= -c)
    }

    pub fn strictly_contains(&self, x: &Point) -> bool {
        self.facets.iter().all(|(n, c)| dot(n, x) > -c)
    }
}

/// Convex hull by testing every triple of points as a candidate supporting
/// plane. Cubic in the number of points, only for small inputs.
pub fn brute_hull(points: &[Point]) -> Option<OracleHull> {
    let pts: Vec<Point> = points
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut facets = BTreeSet::new();
    let mut full = false;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let n = cross(&sub(&pts[j], &pts[i]), &sub(&pts[k], &pts[i]));
                if n == [0, 0, 0] {
                    continue;
                }
                let g = n[0].gcd(&n[1]).gcd(&n[2]);
                let n = [n[0] / g, n[1] / g, n[2] / g];
                let level = dot(&n, &pts[i]);
                let lo = pts.iter().map(|p| dot(&n, p)).min().unwrap();
                let hi = pts.iter().map(|p| dot(&n, p)).max().unwrap();
                if lo < hi {
                    full = true;
                }
                if lo == level && hi > level {
                    facets.insert((n, -level));
                }
                if hi == level && lo < level {
                    facets.insert(([-n[0], -n[1], -n[2]], level));
                }
            }
        }
    }
    if !full {
        return None;
    }
    let facets: Vec<(Point, i64)> = facets.into_iter().collect();
    let vertices = pts
        .iter()
        .filter(|p| {
            let tight: Vec<Point> = facets
                .iter()
                .filter(|(n, c)| dot(n, p) == -c)
                .map(|f| f.0)
                .collect();
            (0..tight.len()).any(|a| {
                (a + 1..tight.len()).any(|b| {
                    (b + 1..tight.len()).any(|c| det3(&tight[a], &tight[b], &tight[c]) != 0)
                })
            })
        })
        .copied()
        .collect();
    Some(OracleHull { vertices, facets })
}

/// Lattice points by scanning the bounding box of the vertices against the
/// oracle's own inequalities.
pub fn bbox_lattice_points(vertices: &[Point]) -> Vec<Point> {
    let h = brute_hull(vertices).expect("full-dimensional");
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    for v in vertices {
        for i in 0..3 {
            lo[i] = lo[i].min(v[i]);
            hi[i] = hi[i].max(v[i]);
        }
    }
    let mut out = Vec::new();
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                if h.contains(&[x, y, z]) {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// Reflexive by the facet characterization: primitive normals at offset 1.
pub fn oracle_reflexive(vertices: &[Point]) -> bool {
    brute_hull(vertices).is_some_and(|h| h.facets.iter().all(|(_, c)| *c == 1))
}

/// Every reflexive polytope between `lower` and `upper`, by hulling `lower`
/// with each subset of the lattice points of `upper` outside it.
pub fn all_subsets_enumeration(
    lower: &LatticePolytope,
    upper: &LatticePolytope,
) -> Vec<Vec<Point>> {
    let inside: BTreeSet<Point> = bbox_lattice_points(lower.vertices()).into_iter().collect();
    let extra: Vec<Point> = bbox_lattice_points(upper.vertices())
        .into_iter()
        .filter(|p| !inside.contains(p))
        .collect();
    assert!(
        extra.len() <= 16,
        "too many points for the subset oracle: {}",
        extra.len()
    );
    let mut found: BTreeMap<Vec<Point>, Vec<Point>> = BTreeMap::new();
    for mask in 0u32..(1 << extra.len()) {
        let mut pts = lower.vertices().to_vec();
        pts.extend(
            (0..extra.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| extra[i]),
        );
        let p = hull(&pts).expect("hull of a superset of a full polytope");
        if oracle_reflexive(p.vertices()) {
            found
                .entry(bbox_lattice_points(p.vertices()))
                .or_insert_with(|| p.vertices().to_vec());
        }
    }
    found.into_values().collect()
}

pub fn cube() -> LatticePolytope {
    let mut v = Vec::new();
    for x in [-1, 1] {
        for y in [-1, 1] {
            for z in [-1, 1] {
                v.push([x, y, z]);
            }
        }
    }
    hull(&v).unwrap()
}

pub fn octahedron() -> LatticePolytope {
    hull(&[
        [1, 0, 0],
        [-1, 0, 0],
        [0, 1, 0],
        [0, -1, 0],
        [0, 0, 1],
        [0, 0, -1],
    ])
    .unwrap()
}

/// Small polytopes with the origin in the interior: a random axis cross plus
/// a few extra points.
pub fn origin_polytope() -> impl Strategy<Value = LatticePolytope> {
    (
        prop::array::uniform6(1i64..=3),
        prop::collection::vec(prop::array::uniform3(-3i64..=3), 0..6),
    )
        .prop_map(|(arms, extra)| {
            let mut pts = vec![
                [arms[0], 0, 0],
                [-arms[1], 0, 0],
                [0, arms[2], 0],
                [0, -arms[3], 0],
                [0, 0, arms[4]],
                [0, 0, -arms[5]],
            ];
            pts.extend(extra);
            hull(&pts).unwrap()
        })
}

/// Polytopes spanned by the unit cross and points of the (±1)-cube. The
/// origin is the only interior lattice point; some are reflexive and some
/// are not.
pub fn cube_subpolytope() -> impl Strategy<Value = LatticePolytope> {
    prop::collection::vec(prop::array::uniform3(-1i64..=1), 0..8).prop_map(|extra| {
        let mut pts = octahedron().vertices().to_vec();
        pts.extend(extra);
        hull(&pts).unwrap()
    })
}

/// Arbitrary full-dimensional polytopes on a few small points.
pub fn small_polytope() -> impl Strategy<Value = LatticePolytope> {
    prop::collection::vec(prop::array::uniform3(-3i64..=3), 4..9)
        .prop_filter_map("degenerate", |pts| hull(&pts).ok())
}

/// Unimodular matrices as products of a few elementary moves.
pub fn unimodular() -> impl Strategy<Value = Matrix3> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2, any::<bool>()), 1..5).prop_map(
        |moves| {
            let mut m = Matrix3::IDENTITY;
            for (i, j, k, flip) in moves {
                let mut e = Matrix3::IDENTITY;
                if i != j {
                    e.0[i][j] = k;
                } else if flip {
                    e.0[i][i] = -1;
                }
                m = m.mul(&e).unwrap();
            }
            m
        },
    )
}
