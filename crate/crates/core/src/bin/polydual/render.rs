//! Human-readable output. Everything here is deterministic text.

use std::fmt::Write;

use polydual::linalg::SegmentCount;
use polydual::polytope::RationalPoint;
use polydual::report::{EmbeddingOutcome, TheoremReport};
use polydual::{
    EmbeddingWitness, LatticeBasis, LatticePolytope, Point, RationalPolytope, ReflexivityVerdict,
    SegmentCensus,
};

#[derive(Clone, Copy)]
pub enum Conventions {
    Total,
    Interior,
    Both,
}

pub fn point(p: &Point) -> String {
    format!("({},{},{})", p[0], p[1], p[2])
}

pub fn points(ps: &[Point]) -> String {
    let parts: Vec<String> = ps.iter().map(point).collect();
    format!("{{{}}}", parts.join(", "))
}

fn rational_point(p: &RationalPoint) -> String {
    format!("({},{},{})", p[0], p[1], p[2])
}

pub fn count(c: SegmentCount, conv: Conventions) -> String {
    match conv {
        Conventions::Total => format!("{} total", c.total),
        Conventions::Interior => format!("{} interior", c.interior),
        Conventions::Both => format!("{} total / {} interior", c.total, c.interior),
    }
}

pub fn basis(b: &LatticeBasis) -> String {
    let mut s = String::from("basis\n");
    for (i, v) in b.vectors.iter().enumerate() {
        let _ = writeln!(
            s,
            "  e{} = ({},{},{},{})",
            i + 1,
            v.0[0],
            v.0[1],
            v.0[2],
            v.0[3]
        );
    }
    s
}

pub fn polytope(p: &LatticePolytope, conv: Conventions) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "vertices ({}): {}",
        p.vertices().len(),
        points(p.vertices())
    );
    let _ = writeln!(s, "facets ({}):", p.facets().len());
    for f in p.facets() {
        let _ = writeln!(s, "  <{}, x> >= -{}", point(&f.normal), f.offset);
    }
    let _ = writeln!(s, "lattice points: {}", p.lattice_points().len());
    let _ = writeln!(
        s,
        "interior lattice points: {}",
        points(&p.interior_lattice_points())
    );
    let _ = writeln!(s, "edges:");
    for e in p.edges() {
        let _ = writeln!(
            s,
            "  {} -- {}: {}",
            point(&e.endpoints[0]),
            point(&e.endpoints[1]),
            count(e.points, conv)
        );
    }
    let _ = writeln!(s, "reflexivity: {}", verdict(&polydual::is_reflexive(p)));
    s
}

pub fn rational_polytope(p: &RationalPolytope) -> String {
    let mut s = String::new();
    let verts: Vec<String> = p.vertices().iter().map(rational_point).collect();
    let _ = writeln!(
        s,
        "dual vertices ({}): {{{}}}",
        verts.len(),
        verts.join(", ")
    );
    let _ = writeln!(s, "integral: {}", p.is_integral());
    s
}

pub fn verdict(v: &ReflexivityVerdict) -> String {
    match v {
        ReflexivityVerdict::Reflexive => "reflexive".into(),
        ReflexivityVerdict::RationalDualVertex { witness } => {
            format!(
                "not reflexive: dual vertex {} is not a lattice point",
                rational_point(witness)
            )
        }
        ReflexivityVerdict::InteriorPointFailure {
            witness,
            origin_interior: false,
        } => {
            format!(
                "not reflexive: origin {} is not an interior point",
                point(witness)
            )
        }
        ReflexivityVerdict::InteriorPointFailure { witness, .. } => {
            format!(
                "not reflexive: {} is a second interior lattice point",
                point(witness)
            )
        }
    }
}

pub fn census(c: &SegmentCensus, conv: Conventions) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "lattice points: {}", c.lattice_points);
    let w = &c.total_witness;
    let _ = writeln!(
        s,
        "longest segment: {} -- {}: {}",
        point(&w.endpoints[0]),
        point(&w.endpoints[1]),
        count(w.points, conv)
    );
    let _ = writeln!(s, "segments by point count:");
    for b in &c.histogram {
        let _ = writeln!(s, "  {}: {}", count(b.points, conv), b.segments);
    }
    s
}

pub fn witness(w: &EmbeddingWitness) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "embedding found (det {})", w.determinant);
    for row in &w.matrix.0 {
        let _ = writeln!(s, "  [{:>4} {:>4} {:>4}]", row[0], row[1], row[2]);
    }
    let _ = writeln!(s, "translation: {}", point(&w.translation));
    let _ = writeln!(s, "image: {}", points(&w.image));
    s
}

pub fn report(r: &TheoremReport, conv: Conventions) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "case {} with weights {} (partner {})",
        r.case, r.weights, r.partner_weights
    );
    let _ = writeln!(
        s,
        "kernel basis spans the same lattice as the canonical one: {}",
        r.basis.same_lattice
    );
    let _ = writeln!(
        s,
        "weight polytope: {}",
        points(&r.weight_polytope.vertices)
    );
    let _ = writeln!(
        s,
        "Newton polytope: {}",
        points(&r.newton_polytope.vertices)
    );
    let _ = writeln!(s, "  {}", verdict(&r.newton_polytope.reflexivity));
    let c = &r.counting;
    let _ = writeln!(
        s,
        "dual of edge {} -- {} is {} -- {}: {} (stated {})",
        point(&c.edge[0]),
        point(&c.edge[1]),
        point(&c.dual_edge[0]),
        point(&c.dual_edge[1]),
        count(c.computed, conv),
        c.stated
    );
    let _ = writeln!(
        s,
        "reflexive intermediate polytopes: {}",
        r.analysis.intermediates.len()
    );
    for (i, m) in r.analysis.intermediates.iter().enumerate() {
        let _ = writeln!(s, "  [{i}] {}", points(&m.vertices));
        let _ = writeln!(
            s,
            "      dual {}, longest dual edge {}",
            points(&m.dual_vertices),
            count(m.longest_dual_edge, conv)
        );
        for t in &m.embeddings {
            let result = match &t.outcome {
                EmbeddingOutcome::Exhausted => "exhausted: none".to_string(),
                EmbeddingOutcome::Embedded { witness } => {
                    format!("embeds (det {})", witness.determinant)
                }
            };
            let note = if t.segment_obstruction {
                ", too long to fit"
            } else {
                ""
            };
            let _ = writeln!(s, "      into {}: {result}{note}", t.target);
        }
    }
    if !r.family.undescribed.is_empty() {
        let _ = writeln!(
            s,
            "enumerated but not in the family description: {}",
            r.family.undescribed.len()
        );
    }
    for t in &r.analysis.targets {
        let _ = writeln!(
            s,
            "target {}: longest segment {}, {} duals embed: {}",
            t.target,
            count(t.census.total_witness.points, conv),
            t.embedded_duals,
            t.verdict
        );
    }
    let failed = r.failed_checks();
    let _ = writeln!(
        s,
        "checks: {} passed, {} failed",
        r.checks.len() - failed.len(),
        failed.len()
    );
    for f in failed {
        let _ = writeln!(
            s,
            "  FAILED {}: expected {}, computed {}",
            f.name, f.expected, f.computed
        );
    }
    let _ = writeln!(s, "verdict: {}", r.verdict);
    s
}
