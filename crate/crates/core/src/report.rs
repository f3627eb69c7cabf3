//! End-to-end duality check for one singularity case and its JSON report.
//!
//! For each case the pipeline builds the kernel basis, the weight and Newton
//! polytopes, enumerates every reflexive polytope sandwiched between them,
//! dualizes each one and searches exhaustively for a unimodular embedding of
//! the dual into each candidate target weight polytope.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures::{Case, CaseFixture};
use crate::linalg::{kernel_basis, spans_same_lattice, LatticeVector4, SegmentCount, WeightSystem};
use crate::newton::{
    exponent_matrix, is_invertible_polynomial, monomial_to_lattice, newton_polytope,
    parse_polynomial, weight_polytope, ExponentMatrix, Invertibility,
};
use crate::polytope::{
    dual_face, is_reflexive, polar_dual, to_integer_point, Edge, Facet, LatticePolytope, Point,
    RationalPoint, ReflexivityVerdict,
};
use crate::search::{
    enumerate_intermediate_reflexive, find_unimodular_embedding, segment_census, Convention,
    EmbeddingMode, EmbeddingWitness, SandwichProblem, SegmentCensus,
};

/// Which weight polytope a dual is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// The case's own weight polytope.
    Statement,
    /// The weight polytope of the partner case.
    Proof,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetSelection {
    Statement,
    Proof,
    #[default]
    Both,
}

impl TargetSelection {
    pub fn targets(&self) -> Vec<Target> {
        match self {
            TargetSelection::Statement => vec![Target::Statement],
            TargetSelection::Proof => vec![Target::Proof],
            TargetSelection::Both => vec![Target::Statement, Target::Proof],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "no duality")]
    NoDuality,
    #[serde(rename = "duality holds")]
    DualityHolds,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::NoDuality => "no duality",
            Verdict::DualityHolds => "duality holds",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub targets: TargetSelection,
    pub mode: EmbeddingMode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeSummary {
    pub vertices: Vec<Point>,
    pub facets: Vec<Facet>,
    pub edges: Vec<Edge>,
    pub lattice_points: usize,
    pub interior_lattice_points: Vec<Point>,
    pub reflexivity: ReflexivityVerdict,
}

impl PolytopeSummary {
    pub fn of(p: &LatticePolytope) -> Self {
        PolytopeSummary {
            vertices: p.vertices().to_vec(),
            facets: p.facets().to_vec(),
            edges: p.edges(),
            lattice_points: p.lattice_points().len(),
            interior_lattice_points: p.interior_lattice_points(),
            reflexivity: is_reflexive(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum EmbeddingOutcome {
    /// The exhaustive search finished without finding a map.
    #[serde(rename = "exhausted: none")]
    Exhausted,
    Embedded {
        witness: EmbeddingWitness,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetOutcome {
    pub target: String,
    pub outcome: EmbeddingOutcome,
    /// Longest dual edge exceeds the longest lattice segment of the target,
    /// which alone rules out an embedding.
    pub segment_obstruction: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEdgeReport {
    pub edge: [Point; 2],
    pub dual_edge: Vec<RationalPoint>,
    pub points: Option<SegmentCount>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntermediateReport {
    pub vertices: Vec<Point>,
    pub lattice_points: usize,
    pub dual_vertices: Vec<Point>,
    pub longest_dual_edge: SegmentCount,
    /// Present when the tracked edge is an edge of this polytope.
    pub tracked_edge: Option<DualEdgeReport>,
    pub embeddings: Vec<TargetOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetReport {
    pub target: String,
    pub vertices: Vec<Point>,
    pub census: SegmentCensus,
    pub embedded_duals: usize,
    pub verdict: Verdict,
}

/// Sandwich enumeration plus dual embedding searches against named targets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichAnalysis {
    pub intermediates: Vec<IntermediateReport>,
    pub targets: Vec<TargetReport>,
    pub verdict: Verdict,
}

/// Runs enumeration, dualization, censuses and embedding searches. The
/// verdict is "duality holds" iff some dual embeds into some target.
pub fn analyze_sandwich(
    prob: &SandwichProblem,
    targets: &[(String, LatticePolytope)],
    tracked_edge: Option<[Point; 2]>,
    mode: EmbeddingMode,
) -> Result<SandwichAnalysis> {
    let found = enumerate_intermediate_reflexive(prob)?;
    let censuses: Vec<SegmentCensus> = targets.iter().map(|(_, t)| segment_census(t)).collect();
    let mut embedded = vec![0usize; targets.len()];
    let mut intermediates = Vec::new();
    for delta in &found {
        let dual = polar_dual(delta)?.to_lattice().ok_or_else(|| {
            Error::Internal("dual of a reflexive polytope is not integral".into())
        })?;
        let longest = dual
            .edges()
            .iter()
            .map(|e| e.points)
            .max_by_key(|c| c.total)
            .ok_or_else(|| Error::Internal("dual polytope has no edges".into()))?;
        let tracked = match tracked_edge {
            Some(edge) if delta.has_edge(&edge[0], &edge[1]) => {
                let face = dual_face(delta, &edge)?;
                let points = face
                    .to_lattice()
                    .filter(|f| f.vertices.len() == 2)
                    .map(|f| SegmentCount::of(f.vertices[0], f.vertices[1]))
                    .transpose()?;
                Some(DualEdgeReport {
                    edge,
                    dual_edge: face.vertices,
                    points,
                })
            }
            _ => None,
        };
        let mut embeddings = Vec::new();
        for (k, (name, target)) in targets.iter().enumerate() {
            let outcome = match find_unimodular_embedding(&dual, target, mode)? {
                Some(witness) => {
                    if !witness.verify(&dual, target) {
                        return Err(Error::Internal(format!(
                            "embedding witness into {name} fails verification"
                        )));
                    }
                    embedded[k] += 1;
                    EmbeddingOutcome::Embedded { witness }
                }
                None => EmbeddingOutcome::Exhausted,
            };
            let segment_obstruction = longest.total > censuses[k].max_total;
            if segment_obstruction && matches!(outcome, EmbeddingOutcome::Embedded { .. }) {
                return Err(Error::Internal(format!(
                    "dual embeds into {name} although its longest edge does not fit"
                )));
            }
            embeddings.push(TargetOutcome {
                target: name.clone(),
                outcome,
                segment_obstruction,
            });
        }
        intermediates.push(IntermediateReport {
            vertices: delta.vertices().to_vec(),
            lattice_points: delta.lattice_points().len(),
            dual_vertices: dual.vertices().to_vec(),
            longest_dual_edge: longest,
            tracked_edge: tracked,
            embeddings,
        });
    }
    let target_reports: Vec<TargetReport> = targets
        .iter()
        .zip(censuses)
        .zip(&embedded)
        .map(|(((name, t), census), &n)| TargetReport {
            target: name.clone(),
            vertices: t.vertices().to_vec(),
            census,
            embedded_duals: n,
            verdict: if n == 0 {
                Verdict::NoDuality
            } else {
                Verdict::DualityHolds
            },
        })
        .collect();
    let verdict = if target_reports
        .iter()
        .all(|t| t.verdict == Verdict::NoDuality)
    {
        Verdict::NoDuality
    } else {
        Verdict::DualityHolds
    };
    Ok(SandwichAnalysis {
        intermediates,
        targets: target_reports,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub printed: [LatticeVector4; 3],
    pub canonical: [LatticeVector4; 3],
    pub same_lattice: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialReport {
    pub affine: String,
    pub affine_exponents: ExponentMatrix,
    pub affine_invertibility: Invertibility,
    pub projectivisation: String,
    pub projective_exponents: ExponentMatrix,
    pub projective_invertibility: Invertibility,
}

/// Stated lattice-point count of the dual edge against both conventions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingReport {
    pub edge: [Point; 2],
    pub dual_edge: [Point; 2],
    pub stated: u64,
    pub computed: SegmentCount,
    pub matching_conventions: Vec<Convention>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub vertices: Vec<Point>,
    pub reflexive: bool,
    pub enumerated: bool,
}

/// Comparison of the enumerated list with the printed family description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub described: Vec<FamilyMember>,
    /// Enumerated polytopes not matched by any reading of the description.
    pub undescribed: Vec<Vec<Point>>,
    /// The described polytopes actually occurring, as vertex lists.
    pub resolved: Vec<Vec<Point>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub case: Case,
    pub weights: WeightSystem,
    pub partner_weights: WeightSystem,
    pub basis: BasisReport,
    pub polynomials: PolynomialReport,
    pub weight_polytope: PolytopeSummary,
    pub newton_polytope: PolytopeSummary,
    pub counting: CountingReport,
    pub family: FamilyReport,
    pub analysis: SandwichAnalysis,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl TheoremReport {
    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn fmt_points(pts: &[Point]) -> String {
    let parts: Vec<String> = pts
        .iter()
        .map(|p| format!("({},{},{})", p[0], p[1], p[2]))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn sorted(pts: &[Point]) -> Vec<Point> {
    let set: BTreeSet<Point> = pts.iter().copied().collect();
    set.into_iter().collect()
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &str, expected: String, computed: String) {
        let pass = expected == computed;
        self.0.push(Check {
            name: name.to_string(),
            expected,
            computed,
            pass,
        });
    }
}

struct CaseData {
    fixture: CaseFixture,
    basis_report: BasisReport,
    weight: LatticePolytope,
}

fn case_data(case: Case, checks: &mut Checks) -> Result<CaseData> {
    let fixture = case.fixture();
    let basis = fixture.lattice_basis()?;
    let canonical = kernel_basis(&fixture.weights)?;
    let same = spans_same_lattice(&canonical.vectors, &fixture.basis)?;
    checks.push(
        &format!("{case}: canonical kernel basis spans the printed basis"),
        "true".into(),
        same.to_string(),
    );
    let weight = weight_polytope(&fixture.weights, &basis)?;
    let expected: Vec<Point> = fixture.weight_vertices.iter().map(|v| v.point).collect();
    checks.push(
        &format!("{case}: weight polytope vertices"),
        fmt_points(&sorted(&expected)),
        fmt_points(weight.vertices()),
    );
    Ok(CaseData {
        basis_report: BasisReport {
            printed: fixture.basis,
            canonical: canonical.vectors,
            same_lattice: same,
        },
        fixture,
        weight,
    })
}

/// Full pipeline for one case against the selected target interpretations.
///
/// Fails with [`Error::FixtureMismatch`] when a printed value does not
/// reproduce, and with [`Error::Internal`] when two computations that must
/// agree do not.
pub fn verify_polytope_duality(case: Case, options: VerifyOptions) -> Result<TheoremReport> {
    let report = build_report(case, options)?;
    let failed = report.failed_checks();
    if !failed.is_empty() {
        return Err(Error::FixtureMismatch {
            what: failed
                .iter()
                .map(|c| c.name.as_str())
                .collect::<Vec<_>>()
                .join("; "),
            expected: failed
                .iter()
                .map(|c| c.expected.as_str())
                .collect::<Vec<_>>()
                .join("; "),
            computed: failed
                .iter()
                .map(|c| c.computed.as_str())
                .collect::<Vec<_>>()
                .join("; "),
        });
    }
    Ok(report)
}

/// Like [`verify_polytope_duality`] but returns the report even when some
/// printed value fails to reproduce.
pub fn build_report(case: Case, options: VerifyOptions) -> Result<TheoremReport> {
    let mut checks = Checks(Vec::new());
    let own = case_data(case, &mut checks)?;
    let partner = case_data(case.partner(), &mut checks)?;
    let fx = &own.fixture;
    let w = fx.weights;
    let basis = fx.lattice_basis()?;

    // polynomials
    let affine = parse_polynomial(fx.affine_polynomial)?;
    let projective = parse_polynomial(fx.projectivisation)?;
    let affine_exponents = exponent_matrix(&affine);
    let affine_invertibility = is_invertible_polynomial(&affine)?;
    let projective_invertibility = is_invertible_polynomial(&projective)?;
    checks.push(
        &format!("{case}: affine exponent matrix"),
        format!("{:?}", fx.affine_exponents),
        format!("{:?}", affine_exponents.rows),
    );
    checks.push(
        &format!("{case}: affine polynomial is invertible and symmetric"),
        "true".into(),
        (affine_invertibility.is_invertible() && affine_invertibility.is_symmetric()).to_string(),
    );
    checks.push(
        &format!("{case}: projectivisation is not invertible"),
        "false".into(),
        projective_invertibility.is_invertible().to_string(),
    );

    // monomial correspondences
    for lv in fx
        .weight_vertices
        .iter()
        .chain(std::iter::once(&fx.newton_monomial))
    {
        let m = parse_polynomial(lv.monomial)?.monomials[0];
        let p = monomial_to_lattice(&m, &w, &basis)?;
        checks.push(
            &format!("{case}: monomial {} coordinates", lv.monomial),
            fmt_points(&[lv.point]),
            fmt_points(&[p]),
        );
    }

    // weight polytope reflexivity
    let weight = &own.weight;
    checks.push(
        &format!("{case}: weight polytope is reflexive"),
        "reflexive".into(),
        is_reflexive(weight).label().into(),
    );
    checks.push(
        &format!("{case}: weight polytope interior lattice points"),
        fmt_points(&[[0, 0, 0]]),
        fmt_points(&weight.interior_lattice_points()),
    );

    // Newton polytope
    let newton = newton_polytope(&projective, &w, &basis)?;
    checks.push(
        &format!("{case}: Newton polytope vertices"),
        fmt_points(&sorted(&fx.newton_vertices)),
        fmt_points(newton.vertices()),
    );
    let verdict = is_reflexive(&newton);
    let expected_verdict = ReflexivityVerdict::RationalDualVertex {
        witness: fx.rational_dual_vertex,
    };
    checks.push(
        &format!("{case}: Newton polytope reflexivity witness"),
        format!("{expected_verdict:?}"),
        format!("{verdict:?}"),
    );
    let facet_dual = dual_face(&newton, &fx.rational_facet)?;
    checks.push(
        &format!("{case}: dual of the printed Newton facet"),
        format!("{:?}", vec![fx.rational_dual_vertex]),
        format!("{:?}", facet_dual.vertices),
    );
    checks.push(
        &format!("{case}: Newton polytope lies in the weight polytope"),
        "true".into(),
        weight.contains_polytope(&newton).to_string(),
    );

    // enumeration and embeddings
    let prob = SandwichProblem::new(newton.clone(), weight.clone())?;
    let mut targets = Vec::new();
    for t in options.targets.targets() {
        let (label, poly) = match t {
            Target::Statement => (format!("statement {}", fx.weights), own.weight.clone()),
            Target::Proof => (
                format!("proof {}", partner.fixture.weights),
                partner.weight.clone(),
            ),
        };
        targets.push((label, poly));
    }
    let analysis = analyze_sandwich(&prob, &targets, Some(fx.gamma), options.mode)?;

    // tracked edge and its dual
    let with_gamma: Vec<&IntermediateReport> = analysis
        .intermediates
        .iter()
        .filter(|r| r.tracked_edge.is_some())
        .collect();
    checks.push(
        &format!("{case}: tracked edge occurs in some intermediate polytope"),
        "true".into(),
        (!with_gamma.is_empty()).to_string(),
    );
    for r in &with_gamma {
        let e = r.tracked_edge.as_ref().expect("filtered");
        let computed: Vec<Point> = e.dual_edge.iter().filter_map(to_integer_point).collect();
        checks.push(
            &format!(
                "{case}: dual of the tracked edge in {}",
                fmt_points(&r.vertices)
            ),
            fmt_points(&sorted(&fx.gamma_dual)),
            fmt_points(&computed),
        );
    }
    let computed = SegmentCount::of(fx.gamma_dual[0], fx.gamma_dual[1])?;
    let mut matching_conventions = Vec::new();
    for c in [Convention::Total, Convention::Interior] {
        if c.count(computed) == fx.stated_dual_count {
            matching_conventions.push(c);
        }
    }
    let counting = CountingReport {
        edge: fx.gamma,
        dual_edge: fx.gamma_dual,
        stated: fx.stated_dual_count,
        computed,
        matching_conventions,
    };

    // family description
    let found: Vec<Vec<Point>> = analysis
        .intermediates
        .iter()
        .map(|r| r.vertices.clone())
        .collect();
    let mut described = Vec::new();
    for member in fx.family.members() {
        let hull = crate::polytope::hull(&member)?;
        let reflexive = is_reflexive(&hull).is_reflexive()
            && hull.contains_polytope(&newton)
            && weight.contains_polytope(&hull);
        let enumerated = found.contains(&hull.vertices().to_vec());
        if reflexive != enumerated {
            return Err(Error::Internal(format!(
                "described polytope {} is reflexive={reflexive} but enumerated={enumerated}",
                fmt_points(&member)
            )));
        }
        described.push(FamilyMember {
            vertices: member,
            reflexive,
            enumerated,
        });
    }
    let resolved: Vec<Vec<Point>> = described
        .iter()
        .filter(|m| m.enumerated)
        .map(|m| sorted(&m.vertices))
        .collect();
    checks.push(
        &format!("{case}: described family occurs among the enumerated polytopes"),
        "true".into(),
        (!resolved.is_empty()).to_string(),
    );
    let undescribed = found
        .iter()
        .filter(|v| !resolved.contains(v))
        .cloned()
        .collect();

    let verdict = analysis.verdict;
    Ok(TheoremReport {
        case,
        weights: w,
        partner_weights: partner.fixture.weights,
        basis: own.basis_report,
        polynomials: PolynomialReport {
            affine: fx.affine_polynomial.to_string(),
            affine_exponents,
            affine_invertibility,
            projectivisation: fx.projectivisation.to_string(),
            projective_exponents: exponent_matrix(&projective),
            projective_invertibility,
        },
        weight_polytope: PolytopeSummary::of(weight),
        newton_polytope: PolytopeSummary::of(&newton),
        counting,
        family: FamilyReport {
            described,
            undescribed,
            resolved,
        },
        analysis,
        checks: checks.0,
        verdict,
    })
}
