use super::{LatticePolytope, Point};

impl LatticePolytope {
    /// Componentwise minimum and maximum of the vertices.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices {
            for k in 0..3 {
                lo[k] = lo[k].min(v[k]);
                hi[k] = hi[k].max(v[k]);
            }
        }
        (lo, hi)
    }

    /// Lattice points satisfying every facet inequality, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<Point> {
        self.scan(false)
    }

    /// Lattice points satisfying every facet inequality strictly.
    pub fn interior_lattice_points(&self) -> Vec<Point> {
        self.scan(true)
    }

    pub fn boundary_lattice_points(&self) -> Vec<Point> {
        self.lattice_points()
            .into_iter()
            .filter(|p| !self.strictly_contains_point(p))
            .collect()
    }

    // For each (x, y) column, intersect the z-intervals cut out by the facets.
    fn scan(&self, strict: bool) -> Vec<Point> {
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                let mut zmin = lo[2] as i128;
                let mut zmax = hi[2] as i128;
                for f in &self.facets {
                    let [a, b, c] = f.normal.map(i128::from);
                    // a x + b y + c z + offset >= 0 (or > 0)
                    let rest = a * x as i128 + b * y as i128 + f.offset as i128;
                    let need = if strict { -rest + 1 } else { -rest };
                    match c.signum() {
                        1 => {
                            zmin = zmin.max(need.div_euclid(c) + (need.rem_euclid(c) != 0) as i128)
                        }
                        -1 => zmax = zmax.min((-need).div_euclid(-c)),
                        _ if need > 0 => {
                            zmin = 1;
                            zmax = 0;
                        }
                        _ => {}
                    }
                    if zmin > zmax {
                        break;
                    }
                }
                for z in zmin..=zmax {
                    out.push([x, y, z as i64]);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::polytope::hull;

    #[test]
    fn simplex_and_cube_counts() {
        let s = hull(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(s.lattice_points().len(), 4);
        assert!(s.interior_lattice_points().is_empty());

        let c = hull(&[
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
        assert_eq!(c.lattice_points().len(), 27);
        assert_eq!(c.interior_lattice_points(), vec![[0, 0, 0]]);
        assert_eq!(c.boundary_lattice_points().len(), 26);
    }

    #[test]
    fn slanted_facets() {
        // 2x the standard simplex: the z-range must respect x + y + z <= 2
        let s = hull(&[[0, 0, 0], [2, 0, 0], [0, 2, 0], [0, 0, 2]]).unwrap();
        assert_eq!(s.lattice_points().len(), 10);
        assert!(s.interior_lattice_points().is_empty());
    }
}
