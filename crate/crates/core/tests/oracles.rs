mod common;

use proptest::prelude::*;

use polydual::{
    enumerate_intermediate_reflexive, hull, newton_polytope, parse_polynomial, segment_census,
    weight_polytope, Case, LatticePolytope, Point, SandwichProblem, SegmentCount,
};

use common::*;

fn upper(case: Case) -> LatticePolytope {
    let fx = case.fixture();
    weight_polytope(&fx.weights, &fx.lattice_basis().unwrap()).unwrap()
}

fn enumerated(lower: &LatticePolytope, upper: &LatticePolytope) -> Vec<Vec<Point>> {
    let prob = SandwichProblem::new(lower.clone(), upper.clone()).unwrap();
    enumerate_intermediate_reflexive(&prob)
        .unwrap()
        .iter()
        .map(|p| p.vertices().to_vec())
        .collect()
}

#[test]
fn fixture_sandwiches_match_subset_oracle() {
    for case in Case::ALL {
        let fx = case.fixture();
        let f = parse_polynomial(fx.projectivisation).unwrap();
        let lower = newton_polytope(&f, &fx.weights, &fx.lattice_basis().unwrap()).unwrap();
        let upper = upper(case);
        assert_eq!(
            enumerated(&lower, &upper),
            all_subsets_enumeration(&lower, &upper),
            "{case}"
        );
    }
}

#[test]
fn q16_intermediates_contain_newton_vertices() {
    let newton: [Point; 5] = [[0, 1, 0], [0, 0, 1], [0, -1, 1], [-1, 2, -1], [2, -2, -1]];
    let fx = Case::Q16.fixture();
    let f = parse_polynomial(fx.projectivisation).unwrap();
    let lower = newton_polytope(&f, &fx.weights, &fx.lattice_basis().unwrap()).unwrap();
    let found = enumerated(&lower, &upper(Case::Q16));
    assert_eq!(found.len(), 5);
    for v in found {
        let p = hull(&v).unwrap();
        assert!(newton.iter().all(|x| p.contains_point(x)));
    }
}

#[test]
fn weight_polytope_census() {
    let c = segment_census(&upper(Case::Q16));
    assert_eq!((c.max_total, c.max_interior), (4, 2));
    let [u, v] = c.total_witness.endpoints;
    assert_eq!(SegmentCount::of(u, v).unwrap(), c.total_witness.points);
    assert_eq!(SegmentCount::of([1, 0, 0], [4, -3, -3]).unwrap().total, 4);
    for case in Case::ALL {
        let p = upper(case);
        let c = segment_census(&p);
        let pts = bbox_lattice_points(p.vertices());
        assert_eq!(c.lattice_points, pts.len());
        let pairs: u64 = c.histogram.iter().map(|b| b.segments).sum();
        assert_eq!(pairs as usize, pts.len() * (pts.len() - 1) / 2);
    }
}

#[test]
fn unit_simplex_census() {
    let c = segment_census(&hull(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap());
    assert_eq!((c.max_total, c.max_interior), (2, 0));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, failure_persistence: None, ..ProptestConfig::default() })]

    /// Random lower polytopes inside a fixed reflexive upper one.
    #[test]
    fn random_sandwiches_match_subset_oracle(s16 in any::<bool>(), mask in any::<u16>()) {
        let upper = upper(if s16 { Case::S16 } else { Case::Q16 });
        let pts = upper.lattice_points();
        let chosen: Vec<Point> = pts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| *p)
            .collect();
        let lower = hull(&chosen);
        prop_assume!(lower.is_ok());
        let lower = lower.unwrap();
        let found = enumerated(&lower, &upper);
        prop_assert_eq!(&found, &all_subsets_enumeration(&lower, &upper));
        prop_assert!(found.contains(&upper.vertices().to_vec()));
    }
}
