use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linalg::SegmentCount;
use crate::polytope::{gcd_length, LatticePolytope, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SegmentWitness {
    pub endpoints: [Point; 2],
    pub points: SegmentCount,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LengthBucket {
    pub points: SegmentCount,
    pub segments: u64,
}

/// Longest lattice segments with both endpoints lattice points of a polytope.
/// Segments between lattice points of a convex body stay inside it, so this
/// bounds every edge of every lattice subpolytope.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SegmentCensus {
    pub lattice_points: usize,
    pub max_total: u64,
    pub max_interior: u64,
    pub total_witness: SegmentWitness,
    pub interior_witness: SegmentWitness,
    pub histogram: Vec<LengthBucket>,
}

impl SegmentCensus {
    /// Whether some segment carries at least `count` points under the convention.
    pub fn admits(&self, count: u64, convention: Convention) -> bool {
        match convention {
            Convention::Total => self.max_total >= count,
            Convention::Interior => self.max_interior >= count,
        }
    }
}

/// How lattice points on a segment are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Both endpoints included.
    Total,
    /// Relative interior only.
    Interior,
}

impl Convention {
    pub fn count(&self, c: SegmentCount) -> u64 {
        match self {
            Convention::Total => c.total,
            Convention::Interior => c.interior,
        }
    }
}

/// Exhaustive scan over unordered pairs of lattice points. Witnesses are the
/// lexicographically first pair attaining each maximum.
pub fn segment_census(p: &LatticePolytope) -> SegmentCensus {
    let pts = p.lattice_points();
    let mut best: Option<SegmentWitness> = None;
    let mut best_interior: Option<SegmentWitness> = None;
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    for (i, u) in pts.iter().enumerate() {
        for v in &pts[i + 1..] {
            let points = SegmentCount::from_length(gcd_length(u, v));
            *histogram.entry(points.total).or_default() += 1;
            let w = SegmentWitness {
                endpoints: [*u, *v],
                points,
            };
            if best.is_none_or(|b| points.total > b.points.total) {
                best = Some(w);
            }
            if best_interior.is_none_or(|b| points.interior > b.points.interior) {
                best_interior = Some(w);
            }
        }
    }
    // A polytope always has at least 4 lattice points (its vertices).
    let total_witness = best.expect("polytope has at least two lattice points");
    let interior_witness = best_interior.expect("polytope has at least two lattice points");
    SegmentCensus {
        lattice_points: pts.len(),
        max_total: total_witness.points.total,
        max_interior: interior_witness.points.interior,
        total_witness,
        interior_witness,
        histogram: histogram
            .into_iter()
            .map(|(total, segments)| LengthBucket {
                points: SegmentCount::from_length(total - 1),
                segments,
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::hull;

    #[test]
    fn unit_simplex_segments_are_primitive() {
        let s = hull(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        let c = segment_census(&s);
        assert_eq!((c.max_total, c.max_interior), (2, 0));
        assert_eq!(
            c.histogram,
            vec![LengthBucket {
                points: SegmentCount {
                    total: 2,
                    interior: 0
                },
                segments: 6
            }]
        );
        assert!(c.admits(2, Convention::Total));
        assert!(!c.admits(1, Convention::Interior));
    }

    #[test]
    fn cube_diagonals() {
        let cube = hull(&[
            [-1, -1, -1],
            [1, -1, -1],
            [-1, 1, -1],
            [1, 1, -1],
            [-1, -1, 1],
            [1, -1, 1],
            [-1, 1, 1],
            [1, 1, 1],
        ])
        .unwrap();
        let c = segment_census(&cube);
        assert_eq!((c.max_total, c.max_interior), (3, 1));
        assert_eq!(c.total_witness.endpoints, [[-1, -1, -1], [-1, -1, 1]]);
        assert_eq!(
            c.histogram.iter().map(|b| b.segments).sum::<u64>(),
            27 * 26 / 2
        );
    }
}
