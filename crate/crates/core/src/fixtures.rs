//! The two bimodal singularity cases, with the coordinates printed for them
//! in the literature. `verify` checks every value here against the pipeline.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{LatticeBasis, LatticeVector4, WeightSystem};
use crate::polytope::Point;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    Q16,
    S16,
}

impl Case {
    pub const ALL: [Case; 2] = [Case::Q16, Case::S16];

    pub fn name(&self) -> &'static str {
        match self {
            Case::Q16 => "Q16",
            Case::S16 => "S16",
        }
    }

    /// The partner case whose weight system is the other candidate target.
    pub fn partner(&self) -> Case {
        match self {
            Case::Q16 => Case::S16,
            Case::S16 => Case::Q16,
        }
    }

    pub fn fixture(&self) -> CaseFixture {
        match self {
            Case::Q16 => q16(),
            Case::S16 => s16(),
        }
    }
}

impl std::str::FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "Q16" => Ok(Case::Q16),
            "S16" => Ok(Case::S16),
            _ => Err(Error::UnknownCase(s.to_string())),
        }
    }
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A vertex of the weight polytope together with the monomial it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelledVertex {
    pub point: Point,
    pub monomial: &'static str,
}

/// A family of intermediate polytopes described as a mandatory vertex list
/// plus alternative extra vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescribedFamily {
    pub common: Vec<Point>,
    /// Each member is `common` plus one of these, optionally plus any subset
    /// of `optional`.
    pub alternatives: Vec<Vec<Point>>,
    pub optional: Vec<Point>,
}

impl DescribedFamily {
    /// Every vertex list the description can denote.
    pub fn members(&self) -> Vec<Vec<Point>> {
        let mut out = Vec::new();
        for alt in &self.alternatives {
            for mask in 0..(1u32 << self.optional.len()) {
                let mut v = self.common.clone();
                v.extend(alt.iter().copied());
                for (i, p) in self.optional.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        v.push(*p);
                    }
                }
                v.sort();
                v.dedup();
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseFixture {
    pub case: Case,
    pub weights: WeightSystem,
    pub basis: [LatticeVector4; 3],
    pub affine_polynomial: &'static str,
    pub projectivisation: &'static str,
    pub affine_exponents: Vec<Vec<i64>>,
    pub weight_vertices: Vec<LabelledVertex>,
    pub newton_vertices: Vec<Point>,
    /// Extra monomial correspondence stated alongside the Newton polytope.
    pub newton_monomial: LabelledVertex,
    /// Facet of the Newton polytope whose dual vertex is rational.
    pub rational_facet: Vec<Point>,
    pub rational_dual_vertex: [Rational; 3],
    pub family: DescribedFamily,
    /// The edge used in the obstruction argument.
    pub gamma: [Point; 2],
    pub gamma_dual: [Point; 2],
    /// The lattice-point count stated for the dual edge.
    pub stated_dual_count: u64,
}

impl CaseFixture {
    pub fn lattice_basis(&self) -> Result<LatticeBasis> {
        LatticeBasis::new(self.weights, self.basis)
    }
}

fn lv(point: Point, monomial: &'static str) -> LabelledVertex {
    LabelledVertex { point, monomial }
}

fn n_family(n: i64) -> Point {
    [n + 1, -n, -n]
}

fn q16() -> CaseFixture {
    CaseFixture {
        case: Case::Q16,
        weights: WeightSystem::new([2, 3, 7, 9]).expect("valid weights"),
        basis: [
            LatticeVector4([8, 0, -1, -1]),
            LatticeVector4([6, -1, 0, -1]),
            LatticeVector4([5, -1, -1, 0]),
        ],
        affine_polynomial: "x^4z+y^3+xz^2",
        projectivisation: "X^4Z+Y^3+XZ^2+W^6Z+W^7Y",
        affine_exponents: vec![vec![4, 0, 1], vec![0, 3, 0], vec![1, 0, 2]],
        weight_vertices: vec![
            lv([1, 0, 0], "W^9X"),
            lv([0, 1, 0], "W^7Y"),
            lv([0, 0, 1], "W^6Z"),
            lv([0, -1, 1], "XZ^2"),
            lv([-1, 2, -1], "Y^3"),
            lv([4, -3, -3], "X^7"),
        ],
        newton_vertices: vec![[0, 1, 0], [0, 0, 1], [0, -1, 1], [-1, 2, -1], [2, -2, -1]],
        newton_monomial: lv([2, -2, -1], "X^4Z"),
        rational_facet: vec![[0, 1, 0], [-1, 2, -1], [2, -2, -1]],
        rational_dual_vertex: [
            Rational::new(-4, 3),
            Rational::from(-1),
            Rational::new(1, 3),
        ],
        family: DescribedFamily {
            common: vec![
                [1, 0, 0],
                [0, 1, 0],
                [0, 0, 1],
                [0, -1, 1],
                [-1, 2, -1],
                [2, -2, -1],
            ],
            alternatives: vec![vec![n_family(1)]],
            optional: vec![],
        },
        gamma: [[0, -1, 1], [-1, 2, -1]],
        gamma_dual: [[8, 6, 5], [2, 0, -1]],
        stated_dual_count: 5,
    }
}

fn s16() -> CaseFixture {
    CaseFixture {
        case: Case::S16,
        weights: WeightSystem::new([2, 3, 5, 7]).expect("valid weights"),
        basis: [
            LatticeVector4([6, 0, -1, -1]),
            LatticeVector4([5, -1, 0, -1]),
            LatticeVector4([4, -1, -1, 0]),
        ],
        affine_polynomial: "x^4y+xz^2+y^2z",
        projectivisation: "X^4Y+XZ^2+Y^2Z+W^5Z+W^6Y",
        affine_exponents: vec![vec![4, 1, 0], vec![1, 0, 2], vec![0, 2, 1]],
        weight_vertices: vec![
            lv([1, 0, 0], "W^7X"),
            lv([0, 1, 0], "W^6Y"),
            lv([0, 0, 1], "W^5Z"),
            lv([0, -1, 1], "XZ^2"),
            lv([-1, 1, 0], "Y^2Z"),
            lv([-1, 2, -1], "WY^3"),
            lv([2, -1, -2], "X^4Y"),
            lv([3, -2, -2], "WX^5"),
        ],
        newton_vertices: vec![[0, 1, 0], [0, 0, 1], [0, -1, 1], [-1, 1, 0], [2, -1, -2]],
        newton_monomial: lv([2, -1, -2], "X^4Y"),
        rational_facet: vec![[0, 0, 1], [0, -1, 1], [2, -1, -2]],
        rational_dual_vertex: [Rational::new(-3, 2), Rational::from(0), Rational::from(-1)],
        family: DescribedFamily {
            common: vec![
                [1, 0, 0],
                [0, 1, 0],
                [0, 0, 1],
                [0, -1, 1],
                [-1, 1, 0],
                [2, -1, -2],
            ],
            alternatives: vec![vec![n_family(1)], vec![n_family(2)], vec![[-1, 2, -1]]],
            optional: vec![[-1, 2, -1]],
        },
        gamma: [[0, -1, 1], [-1, 1, 0]],
        gamma_dual: [[6, 5, 4], [1, 0, -1]],
        stated_dual_count: 4,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_bases_are_kernel_bases() {
        for case in Case::ALL {
            assert!(case.fixture().lattice_basis().is_ok(), "{case}");
        }
    }

    #[test]
    fn family_members() {
        assert_eq!(Case::Q16.fixture().family.members().len(), 1);
        // n = 1 or 2, each with or without (-1,2,-1), or (-1,2,-1) alone
        assert_eq!(Case::S16.fixture().family.members().len(), 5);
    }

    #[test]
    fn case_names_parse() {
        assert_eq!("q16".parse::<Case>().unwrap(), Case::Q16);
        assert!("T12".parse::<Case>().is_err());
    }
}
