//! Exact integer linear algebra for rank-3 kernel lattices of weight systems.
//!
//! Everything here is checked: an intermediate that leaves `i64` range is an
//! [`Error::Overflow`], never a wrapped value.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A well-posed weight system `(w0, w1, w2, w3; d)` with `d = w0 + w1 + w2 + w3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightSystemRepr", into = "WeightSystemRepr")]
pub struct WeightSystem {
    weights: [i64; 4],
    degree: i64,
}

#[derive(Serialize, Deserialize)]
struct WeightSystemRepr {
    weights: [i64; 4],
    degree: i64,
}

impl TryFrom<WeightSystemRepr> for WeightSystem {
    type Error = Error;

    fn try_from(r: WeightSystemRepr) -> Result<Self> {
        WeightSystem::with_degree(r.weights, r.degree)
    }
}

impl From<WeightSystem> for WeightSystemRepr {
    fn from(w: WeightSystem) -> Self {
        WeightSystemRepr {
            weights: w.weights,
            degree: w.degree,
        }
    }
}

impl WeightSystem {
    pub fn new(weights: [i64; 4]) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidWeights {
            weights: weights.to_vec(),
            reason: reason.to_string(),
        };
        if weights.iter().any(|&w| w <= 0) {
            return Err(invalid("weights must be positive"));
        }
        if weights.windows(2).any(|p| p[0] > p[1]) {
            return Err(invalid("weights must be non-decreasing"));
        }
        for skip in 0..4 {
            let g = (0..4)
                .filter(|&i| i != skip)
                .fold(0i64, |g, i| g.gcd(&weights[i]));
            if g != 1 {
                return Err(invalid("every three weights must be coprime"));
            }
        }
        let degree = weights
            .iter()
            .try_fold(0i64, |acc, &w| acc.checked_add(w))
            .ok_or(Error::Overflow("weight sum"))?;
        Ok(WeightSystem { weights, degree })
    }

    pub fn with_degree(weights: [i64; 4], degree: i64) -> Result<Self> {
        let w = Self::new(weights)?;
        if w.degree != degree {
            return Err(Error::InvalidWeights {
                weights: weights.to_vec(),
                reason: format!("degree {degree} differs from the weight sum {}", w.degree),
            });
        }
        Ok(w)
    }

    pub fn weights(&self) -> [i64; 4] {
        self.weights
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// `w0*v0 + w1*v1 + w2*v2 + w3*v3`
    pub fn pairing(&self, v: &[i64; 4]) -> Result<i64> {
        checked_dot(&self.weights, v)
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.weights;
        write!(f, "({a},{b},{c},{d};{})", self.degree)
    }
}

/// Accepts `2,3,7,9`, `(2,3,7,9)` or `2,3,7,9;21`.
impl FromStr for WeightSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidWeights {
            weights: Vec::new(),
            reason: format!("{reason} in {s:?}"),
        };
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (list, degree) = match body.split_once(';') {
            Some((l, d)) => (
                l,
                Some(d.trim().parse::<i64>().map_err(|_| bad("bad degree"))?),
            ),
            None => (body, None),
        };
        let parts = list
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("weights must be integers"))?;
        let weights: [i64; 4] = parts
            .try_into()
            .map_err(|_| bad("expected exactly four weights"))?;
        match degree {
            Some(d) => WeightSystem::with_degree(weights, d),
            None => WeightSystem::new(weights),
        }
    }
}

/// An element `(i, j, k, l)` of the integer lattice in four variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector4(pub [i64; 4]);

impl LatticeVector4 {
    pub fn scaled(&self, k: i64) -> Result<Self> {
        let mut out = [0; 4];
        for (o, x) in out.iter_mut().zip(self.0) {
            *o = x.checked_mul(k).ok_or(Error::Overflow("vector scaling"))?;
        }
        Ok(LatticeVector4(out))
    }
}

impl From<[i64; 4]> for LatticeVector4 {
    fn from(v: [i64; 4]) -> Self {
        LatticeVector4(v)
    }
}

/// Three vectors generating the full kernel lattice `{x : w.x = 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub weights: WeightSystem,
    pub vectors: [LatticeVector4; 3],
}

impl LatticeBasis {
    /// Validates kernel membership and that the vectors generate the whole
    /// kernel rather than a finite-index sublattice.
    pub fn new(weights: WeightSystem, vectors: [LatticeVector4; 3]) -> Result<Self> {
        for v in &vectors {
            if weights.pairing(&v.0)? != 0 {
                return Err(Error::NotInKernel {
                    vector: v.0,
                    weights: weights.weights(),
                });
            }
        }
        let index = sublattice_content(&vectors)?;
        if index == 0 {
            return Err(Error::DependentVectors);
        }
        let canonical = kernel_basis(&weights)?;
        if hermite_normal_form(&vectors)? != hermite_normal_form(&canonical.vectors)? {
            return Err(Error::NotAKernelBasis { index });
        }
        Ok(LatticeBasis { weights, vectors })
    }

    pub fn vectors(&self) -> &[LatticeVector4; 3] {
        &self.vectors
    }

    /// `a*e1 + b*e2 + c*e3`
    pub fn combine(&self, coords: [i64; 3]) -> Result<[i64; 4]> {
        let mut out = [0i64; 4];
        for (c, v) in coords.iter().zip(&self.vectors) {
            for (o, x) in out.iter_mut().zip(v.0) {
                *o = x
                    .checked_mul(*c)
                    .and_then(|t| o.checked_add(t))
                    .ok_or(Error::Overflow("basis combination"))?;
            }
        }
        Ok(out)
    }

    /// Coordinates of `x` in this basis; `x` must lie in the kernel lattice.
    pub fn coordinates(&self, x: &[i64; 4]) -> Result<[i64; 3]> {
        let cols = self.vectors.map(|v| v.0);
        // Pick the first three rows with a nonzero minor and solve by Cramer.
        for skip in (0..4).rev() {
            let rows: Vec<usize> = (0..4).filter(|&r| r != skip).collect();
            let m = Matrix3([
                [cols[0][rows[0]], cols[1][rows[0]], cols[2][rows[0]]],
                [cols[0][rows[1]], cols[1][rows[1]], cols[2][rows[1]]],
                [cols[0][rows[2]], cols[1][rows[2]], cols[2][rows[2]]],
            ]);
            let det = m.det()?;
            if det == 0 {
                continue;
            }
            let rhs = [x[rows[0]], x[rows[1]], x[rows[2]]];
            let adj = m.adjugate()?;
            let scaled = adj.apply(rhs)?;
            let mut coords = [0i64; 3];
            for (c, s) in coords.iter_mut().zip(scaled) {
                if s % det != 0 {
                    return Err(Error::NotRepresentable(*x));
                }
                *c = s / det;
            }
            if self.combine(coords)? != *x {
                return Err(Error::NotRepresentable(*x));
            }
            return Ok(coords);
        }
        Err(Error::DependentVectors)
    }
}

pub(crate) fn checked_dot<const N: usize>(a: &[i64; N], b: &[i64; N]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| {
        x.checked_mul(*y)
            .and_then(|t| acc.checked_add(t))
            .ok_or(Error::Overflow("dot product"))
    })
}

/// Canonical basis of `{x in Z^4 : w.x = 0}`: the rows of the Hermite normal
/// form of any generating set.
pub fn kernel_basis(w: &WeightSystem) -> Result<LatticeBasis> {
    // Column-reduce the row vector w to (1,0,0,0) while tracking the
    // unimodular transform; its last three columns generate the kernel.
    let mut row = w.weights();
    let mut transform = [[0i64; 4]; 4];
    for (i, r) in transform.iter_mut().enumerate() {
        r[i] = 1;
    }
    loop {
        let nonzero: Vec<usize> = (0..4).filter(|&i| row[i] != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let pivot = *nonzero.iter().min_by_key(|&&i| row[i].abs()).unwrap();
        for &j in &nonzero {
            if j == pivot {
                continue;
            }
            let q = row[j].div_euclid(row[pivot]);
            row[j] -= q * row[pivot];
            for r in transform.iter_mut() {
                r[j] = q
                    .checked_mul(r[pivot])
                    .and_then(|t| r[j].checked_sub(t))
                    .ok_or(Error::Overflow("kernel reduction"))?;
            }
        }
    }
    let pivot = (0..4)
        .find(|&i| row[i] != 0)
        .ok_or(Error::Internal("weight vector reduced to zero".into()))?;
    if row[pivot].abs() != 1 {
        return Err(Error::Internal(format!(
            "weights {:?} are not primitive",
            w.weights()
        )));
    }
    let gens: Vec<LatticeVector4> = (0..4)
        .filter(|&c| c != pivot)
        .map(|c| {
            LatticeVector4([
                transform[0][c],
                transform[1][c],
                transform[2][c],
                transform[3][c],
            ])
        })
        .collect();
    let hnf = hermite_normal_form(&gens)?;
    let vectors: [LatticeVector4; 3] = hnf
        .try_into()
        .map_err(|_| Error::Internal("kernel has rank other than 3".into()))?;
    Ok(LatticeBasis {
        weights: *w,
        vectors,
    })
}

/// `m[r] -= q * m[s]`
fn subtract_row(m: &mut [[i128; 4]], r: usize, s: usize, q: i128) -> Result<()> {
    let src = m[s];
    for (x, y) in m[r].iter_mut().zip(src) {
        *x = q
            .checked_mul(y)
            .and_then(|t| x.checked_sub(t))
            .ok_or(Error::Overflow("Hermite normal form"))?;
    }
    Ok(())
}

/// Row-style Hermite normal form: echelon rows with positive pivots and the
/// entries above each pivot reduced into `[0, pivot)`. Zero rows are dropped,
/// so the output length is the rank.
pub fn hermite_normal_form(rows: &[LatticeVector4]) -> Result<Vec<LatticeVector4>> {
    let mut m: Vec<[i128; 4]> = rows.iter().map(|r| r.0.map(i128::from)).collect();
    let overflow = || Error::Overflow("Hermite normal form");
    let mut rank = 0;
    for col in 0..4 {
        if rank == m.len() {
            break;
        }
        loop {
            let candidate = (rank..m.len())
                .filter(|&r| m[r][col] != 0)
                .min_by_key(|&r| m[r][col].abs());
            let Some(p) = candidate else { break };
            m.swap(rank, p);
            let mut done = true;
            for r in rank + 1..m.len() {
                if m[r][col] != 0 {
                    let q = m[r][col].div_euclid(m[rank][col]);
                    subtract_row(&mut m, r, rank, q)?;
                    if m[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[rank][col] == 0 {
            continue;
        }
        if m[rank][col] < 0 {
            m[rank] = m[rank].map(|x| -x);
        }
        for r in 0..rank {
            let q = m[r][col].div_euclid(m[rank][col]);
            subtract_row(&mut m, r, rank, q)?;
        }
        rank += 1;
    }
    m.truncate(rank);
    m.into_iter()
        .map(|r| {
            let mut out = [0i64; 4];
            for (o, x) in out.iter_mut().zip(r) {
                *o = i64::try_from(x).map_err(|_| overflow())?;
            }
            Ok(LatticeVector4(out))
        })
        .collect()
}

/// gcd of the 3x3 minors of the 3x4 matrix with the given rows. Zero iff the
/// rows are dependent; for vectors inside the kernel of a primitive weight
/// vector it equals the index of the generated sublattice.
pub fn sublattice_content(rows: &[LatticeVector4; 3]) -> Result<i64> {
    let mut g = 0i64;
    for skip in 0..4 {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        let m = Matrix3(rows.map(|r| [r.0[cols[0]], r.0[cols[1]], r.0[cols[2]]]));
        g = g.gcd(&m.det()?);
    }
    Ok(g)
}

/// True iff the two triples generate the same lattice, i.e. the change of
/// basis between them is integral with determinant ±1.
pub fn spans_same_lattice(a: &[LatticeVector4; 3], b: &[LatticeVector4; 3]) -> Result<bool> {
    let ha = hermite_normal_form(a)?;
    let hb = hermite_normal_form(b)?;
    if ha.len() < 3 || hb.len() < 3 {
        return Err(Error::DependentVectors);
    }
    Ok(ha == hb)
}

/// Number of primitive steps on the segment `[u, v]`: the gcd of the
/// coordinate differences. The closed segment holds `len + 1` lattice points.
pub fn lattice_length(u: [i64; 3], v: [i64; 3]) -> Result<u64> {
    let mut g = 0u64;
    for (a, b) in u.iter().zip(&v) {
        let diff = b.checked_sub(*a).ok_or(Error::Overflow("lattice length"))?;
        g = g.gcd(&diff.unsigned_abs());
    }
    Ok(g)
}

/// Lattice points on a segment under both counting conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SegmentCount {
    pub total: u64,
    pub interior: u64,
}

impl SegmentCount {
    pub fn from_length(len: u64) -> Self {
        SegmentCount {
            total: len + 1,
            interior: len.saturating_sub(1),
        }
    }

    pub fn of(u: [i64; 3], v: [i64; 3]) -> Result<Self> {
        Ok(Self::from_length(lattice_length(u, v)?))
    }
}

/// 3x3 integer matrix, row-major; acts on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matrix3(pub [[i64; 3]; 3]);

impl Matrix3 {
    pub const IDENTITY: Matrix3 = Matrix3([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);

    pub fn from_columns(cols: [[i64; 3]; 3]) -> Self {
        let mut m = [[0; 3]; 3];
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[i][j] = *x;
            }
        }
        Matrix3(m)
    }

    pub fn det(&self) -> Result<i64> {
        let m = self.0.map(|r| r.map(i128::from));
        let d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        i64::try_from(d).map_err(|_| Error::Overflow("determinant"))
    }

    pub fn adjugate(&self) -> Result<Matrix3> {
        let m = self.0.map(|r| r.map(i128::from));
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                // cofactor of (j, i)
                let (r0, r1) = match j {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                let (c0, c1) = match i {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                let minor = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
                let signed = if (i + j) % 2 == 0 { minor } else { -minor };
                *entry = i64::try_from(signed).map_err(|_| Error::Overflow("adjugate"))?;
            }
        }
        Ok(Matrix3(out))
    }

    pub fn apply(&self, v: [i64; 3]) -> Result<[i64; 3]> {
        let mut out = [0i64; 3];
        for (o, row) in out.iter_mut().zip(&self.0) {
            *o = checked_dot(row, &v)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix3) -> Result<Matrix3> {
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let col = [other.0[0][j], other.0[1][j], other.0[2][j]];
                *entry = checked_dot(&self.0[i], &col)?;
            }
        }
        Ok(Matrix3(out))
    }

    pub fn transpose(&self) -> Matrix3 {
        let m = self.0;
        Matrix3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), Ok(1) | Ok(-1))
    }

    /// Integral inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Option<Matrix3> {
        let det = self.det().ok()?;
        if det.abs() != 1 {
            return None;
        }
        let adj = self.adjugate().ok()?;
        Some(Matrix3(adj.0.map(|r| r.map(|x| x * det))))
    }
}
