use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::Matrix3;
use crate::polytope::{gcd_length, LatticePolytope, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbeddingMode {
    /// `x -> U x`
    #[default]
    OriginFixing,
    /// `x -> U x + t`
    Affine,
}

/// A unimodular map carrying the candidate polytope into the target.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbeddingWitness {
    pub matrix: Matrix3,
    pub translation: Point,
    pub determinant: i64,
    /// Images of the candidate's vertices, in the candidate's vertex order.
    pub image: Vec<Point>,
}

impl EmbeddingWitness {
    pub fn apply(&self, x: &Point) -> Result<Point> {
        let y = self.matrix.apply(*x)?;
        Ok([
            y[0] + self.translation[0],
            y[1] + self.translation[1],
            y[2] + self.translation[2],
        ])
    }

    /// Unimodular, and every image vertex lies in `target`.
    pub fn verify(&self, candidate: &LatticePolytope, target: &LatticePolytope) -> bool {
        self.matrix.is_unimodular()
            && candidate.vertices().iter().all(|v| {
                self.apply(v)
                    .map(|y| target.contains_point(&y))
                    .unwrap_or(false)
            })
    }
}

fn diff(a: &Point, b: &Point) -> Point {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Searches for a unimodular map `U` (plus a translation in affine mode) with
/// `U(candidate) ⊆ target`.
///
/// Vertices of `candidate` must land on lattice points of `target`, so fixing
/// the images of a spanning set of vertices enumerates every possible map.
/// `None` is therefore a proof that no embedding exists. Candidate images are
/// pruned by lattice length, which every unimodular map preserves. The
/// returned witness is the first in lexicographic order of the image tuple,
/// independent of thread scheduling.
pub fn find_unimodular_embedding(
    candidate: &LatticePolytope,
    target: &LatticePolytope,
    mode: EmbeddingMode,
) -> Result<Option<EmbeddingWitness>> {
    let verts = candidate.vertices();
    if target.contains_polytope(candidate) {
        return Ok(Some(EmbeddingWitness {
            matrix: Matrix3::IDENTITY,
            translation: [0, 0, 0],
            determinant: 1,
            image: verts.to_vec(),
        }));
    }
    let pts = target.lattice_points();

    // Anchor points whose images determine the map: three linearly
    // independent vertices, plus a base point in affine mode.
    let (base, frame) = match mode {
        EmbeddingMode::OriginFixing => ([0i64; 3], independent_triple(verts, &[0, 0, 0])),
        EmbeddingMode::Affine => {
            let b = verts[0];
            (b, independent_triple(verts, &b))
        }
    };
    let Some(frame) = frame else {
        return Ok(None);
    };
    let frame_diffs = frame.map(|q| diff(&q, &base));
    let qmat = Matrix3::from_columns(frame_diffs);
    let qdet = qmat.det()?;
    let adj = qmat.adjugate()?;

    // anchors[0] is the base point (the origin in linear mode).
    let anchors = [base, frame[0], frame[1], frame[2]];
    let base_choices: Vec<Point> = match mode {
        EmbeddingMode::OriginFixing => vec![[0, 0, 0]],
        EmbeddingMode::Affine => pts.clone(),
    };

    let try_images = |images: [Point; 4]| -> Option<EmbeddingWitness> {
        let pd = Matrix3::from_columns([1, 2, 3].map(|k| diff(&images[k], &images[0])));
        let pdet = pd.det().ok()?;
        if pdet.abs() != qdet.abs() {
            return None;
        }
        let scaled = pd.mul(&adj).ok()?;
        if scaled.0.iter().flatten().any(|x| x % qdet != 0) {
            return None;
        }
        let m = Matrix3(scaled.0.map(|r| r.map(|x| x / qdet)));
        let determinant = m.det().ok()?;
        let ub = m.apply(base).ok()?;
        let translation = diff(&images[0], &ub);
        let mut image = Vec::with_capacity(verts.len());
        for v in verts {
            let y = m.apply(*v).ok()?;
            let y = [
                y[0] + translation[0],
                y[1] + translation[1],
                y[2] + translation[2],
            ];
            if !target.contains_point(&y) {
                return None;
            }
            image.push(y);
        }
        Some(EmbeddingWitness {
            matrix: m,
            translation,
            determinant,
            image,
        })
    };

    let len = |a: &Point, b: &Point| gcd_length(a, b);
    let witness = base_choices.par_iter().find_map_first(|p0| {
        let ok_with = |k: usize, p: &Point, chosen: &[Point]| {
            chosen
                .iter()
                .enumerate()
                .all(|(j, c)| len(p, c) == len(&anchors[k], &anchors[j]))
        };
        let options = |k: usize, chosen: &[Point]| -> Vec<Point> {
            pts.iter()
                .filter(|p| !chosen.contains(p) && ok_with(k, p, chosen))
                .copied()
                .collect()
        };
        options(1, &[*p0]).into_par_iter().find_map_first(|p1| {
            for p2 in options(2, &[*p0, p1]) {
                for p3 in options(3, &[*p0, p1, p2]) {
                    if let Some(w) = try_images([*p0, p1, p2, p3]) {
                        return Some(w);
                    }
                }
            }
            None
        })
    });
    Ok(witness)
}

/// First triple (lexicographic in vertex order) of vertices whose differences
/// from `base` are linearly independent.
fn independent_triple(verts: &[Point], base: &Point) -> Option<[Point; 3]> {
    let n = verts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let m = Matrix3::from_columns([
                    diff(&verts[i], base),
                    diff(&verts[j], base),
                    diff(&verts[k], base),
                ]);
                if m.det().is_ok_and(|d| d != 0) {
                    return Some([verts[i], verts[j], verts[k]]);
                }
            }
        }
    }
    None
}
