use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::SandwichProblem;
use crate::error::Result;
use crate::polytope::{hull, is_reflexive, LatticePolytope, Point};

/// Every reflexive lattice polytope between `lower` and `upper`.
///
/// Breadth-first closure: states are hulls of `lower` plus a set of lattice
/// points of `upper`, identified by their full lattice-point set, and each
/// step adds one more lattice point. Any intermediate lattice polytope is the
/// hull of `lower` and finitely many such points, so it is reached. Output is
/// sorted by lattice-point set and independent of thread scheduling.
pub fn enumerate_intermediate_reflexive(prob: &SandwichProblem) -> Result<Vec<LatticePolytope>> {
    let candidates = prob.upper().lattice_points();
    let start = prob.lower().clone();
    let mut seen: BTreeMap<Vec<Point>, LatticePolytope> = BTreeMap::new();
    seen.insert(start.lattice_points(), start.clone());
    let mut frontier = vec![start];

    while !frontier.is_empty() {
        let grown: Vec<Vec<(Vec<Point>, LatticePolytope)>> = frontier
            .par_iter()
            .map(|p| {
                let inside: BTreeSet<Point> = p.lattice_points().into_iter().collect();
                candidates
                    .iter()
                    .filter(|c| !inside.contains(*c))
                    .map(|c| {
                        let mut pts = p.vertices().to_vec();
                        pts.push(*c);
                        let q = hull(&pts)?;
                        Ok((q.lattice_points(), q))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut next = Vec::new();
        for (key, q) in grown.into_iter().flatten() {
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                e.insert(q.clone());
                next.push(q);
            }
        }
        next.sort_by_key(|q| q.vertices().to_vec());
        frontier = next;
    }

    Ok(seen
        .into_values()
        .filter(|p| is_reflexive(p).is_reflexive())
        .collect())
}
