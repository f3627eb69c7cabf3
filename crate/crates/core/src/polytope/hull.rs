//! Exact 3D convex hull by gift wrapping over facets.
//!
//! Each facet is discovered as a supporting plane, its boundary polygon is
//! computed in a coordinate projection, and every polygon edge is pivoted
//! around to reach the neighbouring facet.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_integer::Integer;

use super::{dot128, Facet, LatticePolytope, Point};
use crate::error::{Error, Result};

/// Largest coordinate magnitude accepted by [`hull`]. Orientation tests run
/// in `i128`, which this bound keeps far from overflow.
pub const COORDINATE_LIMIT: i64 = 1 << 24;

type V3 = [i128; 3];

fn sub(a: &Point, b: &Point) -> V3 {
    [
        a[0] as i128 - b[0] as i128,
        a[1] as i128 - b[1] as i128,
        a[2] as i128 - b[2] as i128,
    ]
}

fn cross(a: &V3, b: &V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: &V3, b: &V3) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn is_zero(a: &V3) -> bool {
    a.iter().all(|&x| x == 0)
}

fn primitive(n: V3) -> Result<Point> {
    let g = n.iter().fold(0i128, |g, x| g.gcd(x));
    let mut out = [0i64; 3];
    for (o, x) in out.iter_mut().zip(n) {
        *o = i64::try_from(x / g).map_err(|_| Error::Overflow("facet normal"))?;
    }
    Ok(out)
}

/// Dimension of the affine hull of a non-empty point set.
pub(crate) fn affine_dimension(pts: &[Point]) -> usize {
    let Some(base) = pts.first() else { return 0 };
    let diffs: Vec<V3> = pts
        .iter()
        .map(|p| sub(p, base))
        .filter(|d| !is_zero(d))
        .collect();
    let Some(d1) = diffs.first() else { return 0 };
    let Some(d2) = diffs.iter().find(|d| !is_zero(&cross(d1, d))) else {
        return 1;
    };
    let normal = cross(d1, d2);
    if diffs.iter().any(|d| dot(&normal, d) != 0) {
        3
    } else {
        2
    }
}

/// Vertices and facets of the convex hull of `points`.
///
/// Fails with [`Error::Degenerate`] when the points do not affinely span
/// three-space. Non-extreme input points are dropped; output is sorted.
pub fn hull(points: &[Point]) -> Result<LatticePolytope> {
    for p in points {
        for &x in p {
            if x.abs() > COORDINATE_LIMIT {
                return Err(Error::CoordinateTooLarge {
                    value: x,
                    limit: COORDINATE_LIMIT,
                });
            }
        }
    }
    let pts: Vec<Point> = points
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let dimension = affine_dimension(&pts);
    if dimension < 3 {
        return Err(Error::Degenerate { dimension });
    }

    let first = initial_facet(&pts)?;
    let mut facets: BTreeMap<Point, i64> = BTreeMap::new();
    let mut vertices: BTreeSet<Point> = BTreeSet::new();
    let mut queue = VecDeque::from([first]);
    facets.insert(first.normal, first.offset);

    while let Some(facet) = queue.pop_front() {
        let on_plane: Vec<Point> = pts
            .iter()
            .filter(|p| facet.slack(p) == 0)
            .copied()
            .collect();
        let polygon = boundary_polygon(&on_plane, &facet.normal);
        if polygon.len() < 3 {
            return Err(Error::Internal(format!(
                "facet {:?} supported by fewer than three vertices",
                facet.normal
            )));
        }
        vertices.extend(polygon.iter().copied());
        for i in 0..polygon.len() {
            let u = polygon[i];
            let v = polygon[(i + 1) % polygon.len()];
            let reference = polygon[(i + 2) % polygon.len()];
            let next = pivot(&pts, &facet, &u, &v, &reference)?;
            if let std::collections::btree_map::Entry::Vacant(e) = facets.entry(next.normal) {
                e.insert(next.offset);
                queue.push_back(next);
            }
        }
    }

    let facets: Vec<Facet> = facets
        .into_iter()
        .map(|(normal, offset)| Facet { normal, offset })
        .collect();
    Ok(LatticePolytope::from_sorted_parts(
        vertices.into_iter().collect(),
        facets,
    ))
}

fn facet_through(normal: V3, anchor: &Point) -> Result<Facet> {
    let normal = primitive(normal)?;
    let offset =
        i64::try_from(-dot128(&normal, anchor)).map_err(|_| Error::Overflow("facet offset"))?;
    Ok(Facet { normal, offset })
}

/// A supporting plane through the lexicographically smallest point, which is
/// always a vertex.
fn initial_facet(pts: &[Point]) -> Result<Facet> {
    let a = &pts[0];
    for (i, b) in pts.iter().enumerate().skip(1) {
        let ab = sub(b, a);
        for c in &pts[i + 1..] {
            let n = cross(&ab, &sub(c, a));
            if is_zero(&n) {
                continue;
            }
            let mut sign = 0i128;
            let supporting = pts.iter().all(|p| {
                let s = dot(&n, &sub(p, a)).signum();
                if s == 0 || sign == 0 || s == sign {
                    if s != 0 {
                        sign = s;
                    }
                    true
                } else {
                    false
                }
            });
            if supporting {
                let inward = if sign < 0 { n.map(|x| -x) } else { n };
                return facet_through(inward, a);
            }
        }
    }
    Err(Error::Internal("no supporting plane found".into()))
}

/// Convex polygon (in cyclic order, collinear points dropped) of coplanar
/// points, computed in the projection that drops the dominant normal axis.
fn boundary_polygon(on_plane: &[Point], normal: &Point) -> Vec<Point> {
    let axis = (0..3).max_by_key(|&k| normal[k].abs()).unwrap();
    let (i, j) = match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let mut pts: Vec<Point> = on_plane.to_vec();
    pts.sort_by_key(|p| (p[i], p[j]));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: &Point, a: &Point, b: &Point| -> i128 {
        (a[i] as i128 - o[i] as i128) * (b[j] as i128 - o[j] as i128)
            - (a[j] as i128 - o[j] as i128) * (b[i] as i128 - o[i] as i128)
    };
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Rotates the plane of `facet` around the line `uv` until it meets the
/// neighbouring facet. `reference` is a vertex of `facet` off that line.
fn pivot(pts: &[Point], facet: &Facet, u: &Point, v: &Point, reference: &Point) -> Result<Facet> {
    let uv = sub(v, u);
    let ur = sub(reference, u);
    let oriented = |q: &Point| -> V3 {
        let m = cross(&uv, &sub(q, u));
        if dot(&m, &ur) < 0 {
            m.map(|x| -x)
        } else {
            m
        }
    };
    let mut best: Option<(Point, V3)> = None;
    for q in pts.iter().filter(|q| facet.slack(q) > 0) {
        match &best {
            None => best = Some((*q, oriented(q))),
            Some((_, m)) if dot(m, &sub(q, u)) < 0 => best = Some((*q, oriented(q))),
            _ => {}
        }
    }
    let (_, m) = best.ok_or_else(|| Error::Internal("pivot found no candidate".into()))?;
    let next = facet_through(m, u)?;
    if pts.iter().any(|p| next.slack(p) < 0) {
        return Err(Error::Internal(
            "pivot produced a non-supporting plane".into(),
        ));
    }
    Ok(next)
}
