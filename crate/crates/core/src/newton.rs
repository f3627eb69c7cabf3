//! Weighted-homogeneous polynomials: parsing, exponent matrices, and the
//! Newton and weight polytopes in lattice coordinates.
//!
//! Grammar (whitespace ignored, variables case-insensitive):
//!
//! ```text
//! poly   := term ('+' term)*
//! term   := factor ('*'? factor)*
//! factor := var ('^' digits)?
//! var    := W | X | Y | Z
//! ```
//!
//! Coefficients are not part of the grammar; only the support matters.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{LatticeBasis, WeightSystem};
use crate::polytope::{hull, LatticePolytope, Point};

/// Which variables a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variables {
    /// `x, y, z`: an affine singularity polynomial.
    Affine,
    /// `W, X, Y, Z`: a projectivisation in weighted projective 3-space.
    Projective,
}

impl Variables {
    pub fn names(&self) -> &'static [char] {
        match self {
            Variables::Affine => &['x', 'y', 'z'],
            Variables::Projective => &['W', 'X', 'Y', 'Z'],
        }
    }

    /// Index range into [`Monomial::exponents`].
    fn columns(&self) -> std::ops::Range<usize> {
        match self {
            Variables::Affine => 1..4,
            Variables::Projective => 0..4,
        }
    }
}

/// Exponents of `W, X, Y, Z`. Affine monomials keep the `W` exponent at 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    pub exponents: [i64; 4],
}

impl Monomial {
    pub fn new(exponents: [i64; 4]) -> Self {
        Monomial { exponents }
    }

    pub fn weighted_degree(&self, w: &WeightSystem) -> Result<i64> {
        w.pairing(&self.exponents)
    }

    fn render(&self, vars: Variables) -> String {
        let names = vars.names();
        let parts: Vec<String> = vars
            .columns()
            .zip(names)
            .filter(|(i, _)| self.exponents[*i] != 0)
            .map(|(i, n)| match self.exponents[i] {
                1 => n.to_string(),
                e => format!("{n}^{e}"),
            })
            .collect();
        if parts.is_empty() {
            format!("{}^0", names[0])
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Variables::Projective))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedPolynomial {
    pub variables: Variables,
    pub monomials: Vec<Monomial>,
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .monomials
            .iter()
            .map(|m| m.render(self.variables))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |(i, _)| *i)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn var_index(c: char) -> Option<usize> {
        match c.to_ascii_uppercase() {
            'W' => Some(0),
            'X' => Some(1),
            'Y' => Some(2),
            'Z' => Some(3),
            _ => None,
        }
    }

    fn factor(&mut self, exps: &mut [i64; 4]) -> Result<()> {
        let c = self
            .peek()
            .ok_or_else(|| self.error("expected a variable, found end of input"))?;
        let idx = Self::var_index(c)
            .ok_or_else(|| self.error(format!("expected a variable, found {c:?}")))?;
        self.pos += 1;
        let mut exp = 1i64;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected an exponent after '^'"));
            }
            let digits: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
            exp = digits.parse().map_err(|_| Error::Syntax {
                position: self.chars[start].0,
                message: "exponent out of range".into(),
            })?;
        }
        exps[idx] = exps[idx]
            .checked_add(exp)
            .ok_or(Error::Overflow("exponent"))?;
        Ok(())
    }

    fn term(&mut self) -> Result<Monomial> {
        let mut exps = [0i64; 4];
        self.factor(&mut exps)?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    self.factor(&mut exps)?;
                }
                Some(c) if Self::var_index(c).is_some() => self.factor(&mut exps)?,
                _ => break,
            }
        }
        Ok(Monomial::new(exps))
    }

    fn polynomial(&mut self) -> Result<Vec<Monomial>> {
        let mut terms = vec![self.term()?];
        while let Some(c) = self.peek() {
            if c != '+' {
                return Err(self.error(format!("expected '+', found {c:?}")));
            }
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(terms)
    }
}

/// Parses a polynomial; all-lowercase text without `w` is read as an affine
/// polynomial in `x, y, z`, anything else as a projectivisation in `W, X, Y, Z`.
pub fn parse_polynomial(text: &str) -> Result<WeightedPolynomial> {
    let affine = !text.chars().any(|c| c.is_ascii_uppercase() || c == 'w');
    let vars = if affine {
        Variables::Affine
    } else {
        Variables::Projective
    };
    parse_polynomial_in(text, vars)
}

pub fn parse_polynomial_in(text: &str, variables: Variables) -> Result<WeightedPolynomial> {
    let mut parser = Parser::new(text);
    let monomials = parser.polynomial()?;
    let mut seen = BTreeSet::new();
    for m in &monomials {
        if variables == Variables::Affine && m.exponents[0] != 0 {
            return Err(Error::WrongArity(m.to_string()));
        }
        if !seen.insert(*m) {
            return Err(Error::DuplicateMonomial(m.render(variables)));
        }
    }
    Ok(WeightedPolynomial {
        variables,
        monomials,
    })
}

/// Rows are monomials in input order, columns the declared variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentMatrix {
    pub variables: Vec<char>,
    pub rows: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "diagnosis", rename_all = "kebab-case")]
pub enum Invertibility {
    NonSquare { rows: usize, cols: usize },
    SingularMatrix { symmetric: bool },
    Invertible { determinant: i64, symmetric: bool },
}

impl Invertibility {
    pub fn is_invertible(&self) -> bool {
        matches!(self, Invertibility::Invertible { .. })
    }

    pub fn is_symmetric(&self) -> bool {
        match self {
            Invertibility::NonSquare { .. } => false,
            Invertibility::SingularMatrix { symmetric }
            | Invertibility::Invertible { symmetric, .. } => *symmetric,
        }
    }
}

impl ExponentMatrix {
    pub fn is_square(&self) -> bool {
        self.rows.len() == self.variables.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows.len()).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub fn determinant(&self) -> Option<Result<i64>> {
        self.is_square().then(|| {
            let m: Vec<Vec<i128>> = self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect();
            let d = cofactor_det(&m).ok_or(Error::Overflow("determinant"))?;
            i64::try_from(d).map_err(|_| Error::Overflow("determinant"))
        })
    }
}

fn cofactor_det(m: &[Vec<i128>]) -> Option<i128> {
    match m.len() {
        0 => Some(1),
        1 => Some(m[0][0]),
        n => {
            let mut acc = 0i128;
            for col in 0..n {
                if m[0][col] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, x)| *x)
                            .collect()
                    })
                    .collect();
                let term = m[0][col].checked_mul(cofactor_det(&minor)?)?;
                acc = if col % 2 == 0 {
                    acc.checked_add(term)?
                } else {
                    acc.checked_sub(term)?
                };
            }
            Some(acc)
        }
    }
}

pub fn exponent_matrix(f: &WeightedPolynomial) -> ExponentMatrix {
    let cols = f.variables.columns();
    ExponentMatrix {
        variables: f.variables.names().to_vec(),
        rows: f
            .monomials
            .iter()
            .map(|m| m.exponents[cols.clone()].to_vec())
            .collect(),
    }
}

/// Square with nonzero determinant; also reports symmetry.
pub fn is_invertible_polynomial(f: &WeightedPolynomial) -> Result<Invertibility> {
    let a = exponent_matrix(f);
    let symmetric = a.is_symmetric();
    match a.determinant() {
        None => Ok(Invertibility::NonSquare {
            rows: a.rows.len(),
            cols: a.variables.len(),
        }),
        Some(det) => match det? {
            0 => Ok(Invertibility::SingularMatrix { symmetric }),
            determinant => Ok(Invertibility::Invertible {
                determinant,
                symmetric,
            }),
        },
    }
}

/// Coordinates of `exponents - (1,1,1,1)` in the basis `b`.
pub fn monomial_to_lattice(m: &Monomial, w: &WeightSystem, b: &LatticeBasis) -> Result<Point> {
    let degree = m.weighted_degree(w)?;
    if degree != w.degree() {
        return Err(Error::WrongDegree {
            monomial: m.to_string(),
            degree,
            expected: w.degree(),
        });
    }
    let shifted = m.exponents.map(|e| e - 1);
    b.coordinates(&shifted).map_err(|e| match e {
        Error::NotRepresentable(v) => Error::Internal(format!(
            "degree-{} monomial {m} maps to {v:?}, outside the span of the basis",
            w.degree()
        )),
        other => other,
    })
}

/// Inverse of [`monomial_to_lattice`]: `basis combination + (1,1,1,1)`.
pub fn lattice_to_monomial(p: &Point, b: &LatticeBasis) -> Result<Monomial> {
    let v = b.combine(*p)?;
    Ok(Monomial::new(v.map(|x| x + 1)))
}

/// Every monomial of weighted degree `d`, in lexicographic exponent order.
pub fn degree_monomials(w: &WeightSystem) -> Vec<Monomial> {
    let [a, b, c, e] = w.weights();
    let d = w.degree();
    let mut out = Vec::new();
    for i in 0..=d / a {
        for j in 0..=(d - a * i) / b {
            for k in 0..=(d - a * i - b * j) / c {
                let rest = d - a * i - b * j - c * k;
                if rest % e == 0 {
                    out.push(Monomial::new([i, j, k, rest / e]));
                }
            }
        }
    }
    out
}

/// Hull of all degree-`d` monomials: the polytope of the weighted projective space.
pub fn weight_polytope(w: &WeightSystem, b: &LatticeBasis) -> Result<LatticePolytope> {
    let pts = degree_monomials(w)
        .iter()
        .map(|m| monomial_to_lattice(m, w, b))
        .collect::<Result<Vec<_>>>()?;
    hull(&pts)
}

pub fn newton_polytope(
    f: &WeightedPolynomial,
    w: &WeightSystem,
    b: &LatticeBasis,
) -> Result<LatticePolytope> {
    let pts = f
        .monomials
        .iter()
        .map(|m| monomial_to_lattice(m, w, b))
        .collect::<Result<Vec<_>>>()?;
    hull(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kernel_basis, LatticeVector4};

    fn q16() -> (WeightSystem, LatticeBasis) {
        let w = WeightSystem::new([2, 3, 7, 9]).unwrap();
        let b = LatticeBasis::new(
            w,
            [
                LatticeVector4([8, 0, -1, -1]),
                LatticeVector4([6, -1, 0, -1]),
                LatticeVector4([5, -1, -1, 0]),
            ],
        )
        .unwrap();
        (w, b)
    }

    #[test]
    fn parses_projectivisation() {
        let f = parse_polynomial("X^4*Z + Y^3 + X*Z^2 + W^6*Z + W^7*Y").unwrap();
        assert_eq!(f.variables, Variables::Projective);
        assert_eq!(f.monomials.len(), 5);
        assert_eq!(f.monomials[0].exponents, [0, 4, 0, 1]);
        assert_eq!(f.monomials[4].exponents, [7, 0, 1, 0]);
    }

    #[test]
    fn parses_affine_without_stars() {
        let f = parse_polynomial("x^4y+xz^2+y^2z").unwrap();
        assert_eq!(f.variables, Variables::Affine);
        assert_eq!(
            exponent_matrix(&f).rows,
            vec![vec![4, 1, 0], vec![1, 0, 2], vec![0, 2, 1]]
        );
    }

    #[test]
    fn constant_monomial() {
        let f = parse_polynomial("X^0").unwrap();
        assert_eq!(f.monomials, vec![Monomial::new([0; 4])]);
        assert_eq!(f.to_string(), "W^0");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_polynomial("X^4 + + Y"),
            Err(Error::Syntax {
                position: 6,
                message: "expected a variable, found '+'".into()
            })
        );
        assert!(matches!(
            parse_polynomial("X^"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_polynomial("X^2 Q"),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_polynomial(""),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert_eq!(
            parse_polynomial("X*Y + Y*X"),
            Err(Error::DuplicateMonomial("X*Y".into()))
        );
    }

    #[test]
    fn invertibility_diagnosis() {
        let f = parse_polynomial("x^4z+y^3+xz^2").unwrap();
        assert_eq!(
            is_invertible_polynomial(&f).unwrap(),
            Invertibility::Invertible {
                determinant: 21,
                symmetric: true
            }
        );
        let big = parse_polynomial("X^4Z+Y^3+XZ^2+W^6Z+W^7Y").unwrap();
        assert_eq!(
            is_invertible_polynomial(&big).unwrap(),
            Invertibility::NonSquare { rows: 5, cols: 4 }
        );
        let dep = parse_polynomial("x + y + x*y").unwrap();
        assert_eq!(
            is_invertible_polynomial(&dep).unwrap(),
            Invertibility::SingularMatrix { symmetric: false }
        );
        let single = parse_polynomial("x").unwrap();
        assert_eq!(exponent_matrix(&single).rows, vec![vec![1, 0, 0]]);
    }

    #[test]
    fn monomial_coordinates() {
        let (w, b) = q16();
        let m = |s: &str| parse_polynomial(s).unwrap().monomials[0];
        assert_eq!(monomial_to_lattice(&m("W^9X"), &w, &b).unwrap(), [1, 0, 0]);
        assert_eq!(
            monomial_to_lattice(&m("X^4Z"), &w, &b).unwrap(),
            [2, -2, -1]
        );
        assert!(matches!(
            monomial_to_lattice(&m("X^4"), &w, &b),
            Err(Error::WrongDegree {
                degree: 12,
                expected: 21,
                ..
            })
        ));
        let back = lattice_to_monomial(&[2, -2, -1], &b).unwrap();
        assert_eq!(back, m("X^4Z"));
    }

    #[test]
    fn projective_three_space() {
        let w = WeightSystem::new([1, 1, 1, 1]).unwrap();
        let b = kernel_basis(&w).unwrap();
        assert_eq!(degree_monomials(&w).len(), 35);
        let p = weight_polytope(&w, &b).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert!(p.has_unit_offsets());
    }
}
