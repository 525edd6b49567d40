//! The tropical curve dual to a subdivision: one vertex per cell at the
//! tie point of the cell's terms, bounded edges dual to interior edges,
//! rays dual to Newton-boundary edges, and the duality/balancing checks.

use super::{dual_subdivision, DualSubdivision, TropicalError, TropicalPolynomial};
use crate::lattice::gcd64;
use crate::{Int, Rat};
use num_traits::Zero;

/// Bounded edge joining the vertices of two adjacent cells.
#[derive(Debug, Clone)]
pub struct BoundedEdge {
    pub from_cell: usize,
    pub to_cell: usize,
    pub weight: i64,
    /// Index of the dual interior edge in the subdivision.
    pub dual_edge: usize,
}

/// Unbounded ray leaving the vertex of a boundary cell.
#[derive(Debug, Clone)]
pub struct Ray {
    pub cell: usize,
    /// Primitive integer direction.
    pub dir: (i64, i64),
    pub weight: i64,
    pub dual_edge: usize,
}

/// The curve as a polyhedral complex with exact rational vertices.
#[derive(Debug, Clone)]
pub struct TropicalCurve {
    /// One vertex per cell, same index order as the subdivision cells.
    pub vertices: Vec<(Rat, Rat)>,
    pub bounded_edges: Vec<BoundedEdge>,
    pub rays: Vec<Ray>,
}

/// Curve of a tropical polynomial (via its dual subdivision).
pub fn tropical_curve(
    f: &TropicalPolynomial,
) -> Result<(DualSubdivision, TropicalCurve), TropicalError> {
    let s = dual_subdivision(f)?;
    let c = curve_from_subdivision(&s);
    Ok((s, c))
}

/// Curve dual to an already computed subdivision.
pub fn curve_from_subdivision(s: &DualSubdivision) -> TropicalCurve {
    // a cell with lift a + b i + c j ties all its terms at (-b, -c)
    let vertices: Vec<(Rat, Rat)> = s
        .cells
        .iter()
        .map(|cell| (-cell.plane.b.clone(), -cell.plane.c.clone()))
        .collect();

    let mut bounded_edges = Vec::new();
    let mut rays = Vec::new();
    for (ei, e) in s.edges.iter().enumerate() {
        let weight = e.lattice_length();
        match e.right_cell {
            Some(rc) => bounded_edges.push(BoundedEdge {
                from_cell: e.left_cell,
                to_cell: rc,
                weight,
                dual_edge: ei,
            }),
            None => {
                // orient the boundary edge ccw around the Newton polytope
                // (owning cell on its left); the ray points along the
                // outward rotation of the primitive edge vector
                let d = e.b.sub(&e.a);
                let g = gcd64(d.0, d.1);
                let mut prim = (d.0 / g, d.1 / g);
                let cell = &s.cells[e.left_cell];
                // the cell lies left of (a -> b) iff some cell vertex has
                // positive cross with the direction
                let inside = cell
                    .polygon
                    .vertices()
                    .iter()
                    .map(|v| {
                        let r = v.sub(&e.a);
                        d.0 * r.1 - d.1 * r.0
                    })
                    .find(|&c| c != 0)
                    .expect("cell not degenerate");
                if inside < 0 {
                    prim = (-prim.0, -prim.1);
                }
                rays.push(Ray {
                    cell: e.left_cell,
                    dir: (prim.1, -prim.0),
                    weight,
                    dual_edge: ei,
                });
            }
        }
    }
    TropicalCurve {
        vertices,
        bounded_edges,
        rays,
    }
}

/// Exact balancing at every curve vertex: the weighted primitive outgoing
/// directions sum to zero. Returns the first violating cell, if any.
pub fn verify_balancing(c: &TropicalCurve) -> Result<(), usize> {
    for (vi, _) in c.vertices.iter().enumerate() {
        let mut sum = (0i64, 0i64);
        for e in &c.bounded_edges {
            let (from, to) = (e.from_cell, e.to_cell);
            if from != vi && to != vi {
                continue;
            }
            let other = if from == vi { to } else { from };
            let dx = &c.vertices[other].0 - &c.vertices[vi].0;
            let dy = &c.vertices[other].1 - &c.vertices[vi].1;
            let prim = primitive_rational_dir(&dx, &dy);
            sum.0 += e.weight * prim.0;
            sum.1 += e.weight * prim.1;
        }
        for r in &c.rays {
            if r.cell == vi {
                sum.0 += r.weight * r.dir.0;
                sum.1 += r.weight * r.dir.1;
            }
        }
        if sum != (0, 0) {
            return Err(vi);
        }
    }
    Ok(())
}

/// Primitive integer direction of a nonzero rational vector.
pub(crate) fn primitive_rational_dir(dx: &Rat, dy: &Rat) -> (i64, i64) {
    assert!(!(dx.is_zero() && dy.is_zero()), "zero direction");
    let lcm = num_integer::Integer::lcm(dx.denom(), dy.denom());
    let nx = (dx * Rat::from(lcm.clone())).numer().clone();
    let ny = (dy * Rat::from(lcm)).numer().clone();
    let g = num_integer::Integer::gcd(&nx, &ny);
    let px = i64::try_from(nx / g.clone()).expect("direction fits i64");
    let py = i64::try_from(ny / g).expect("direction fits i64");
    (px, py)
}

/// Outcome of the duality verification.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DualityReport {
    pub passed: bool,
    pub complement_components: i64,
    pub subdivision_vertices: i64,
    pub first_violation: Option<String>,
}

/// Check the three duality correspondences of curve and subdivision:
/// complement components against subdivision vertices (Euler count),
/// orthogonality and weight = lattice length for every edge pair, and
/// vertex valency = side count of the dual cell.
pub fn verify_duality(c: &TropicalCurve, s: &DualSubdivision) -> DualityReport {
    let mut report = DualityReport {
        passed: true,
        complement_components: 0,
        subdivision_vertices: s.vertices.len() as i64,
        first_violation: None,
    };
    let fail = |r: &mut DualityReport, msg: String| {
        if r.passed {
            r.passed = false;
            r.first_violation = Some(msg);
        }
    };

    // (1) components of the complement = 1 - cells + edges (curve is
    // connected), which must equal the number of subdivision vertices
    let e_total = c.bounded_edges.len() + c.rays.len();
    report.complement_components = 1 - s.cells.len() as i64 + e_total as i64;
    if report.complement_components != report.subdivision_vertices {
        let msg = format!(
            "complement count {} differs from vertex count {}",
            report.complement_components, report.subdivision_vertices
        );
        fail(&mut report, msg);
    }

    // (2) bounded edges orthogonal to their duals, weight = lattice length
    for e in &c.bounded_edges {
        let dual = &s.edges[e.dual_edge];
        let d = dual.b.sub(&dual.a);
        let vx = &c.vertices[e.to_cell].0 - &c.vertices[e.from_cell].0;
        let vy = &c.vertices[e.to_cell].1 - &c.vertices[e.from_cell].1;
        let dot = &vx * Rat::from(Int::from(d.0)) + &vy * Rat::from(Int::from(d.1));
        if !dot.is_zero() {
            fail(
                &mut report,
                format!("edge dual to ({:?}, {:?}) is not orthogonal", dual.a, dual.b),
            );
        }
        if e.weight != dual.lattice_length() {
            fail(
                &mut report,
                format!(
                    "edge weight {} differs from dual lattice length {}",
                    e.weight,
                    dual.lattice_length()
                ),
            );
        }
    }
    for r in &c.rays {
        let dual = &s.edges[r.dual_edge];
        let d = dual.b.sub(&dual.a);
        if r.dir.0 * d.0 + r.dir.1 * d.1 != 0 {
            fail(&mut report, "ray not orthogonal to its dual edge".into());
        }
        if r.weight != dual.lattice_length() {
            fail(&mut report, "ray weight differs from lattice length".into());
        }
    }

    // (3) valency = side count of the dual cell
    for (vi, _) in c.vertices.iter().enumerate() {
        let valency = c
            .bounded_edges
            .iter()
            .filter(|e| e.from_cell == vi || e.to_cell == vi)
            .count()
            + c.rays.iter().filter(|r| r.cell == vi).count();
        let sides = s.cells[vi].polygon.num_edges();
        if valency != sides {
            fail(
                &mut report,
                format!("vertex {vi} has valency {valency}, dual cell has {sides} sides"),
            );
        }
    }

    if verify_balancing(c).is_err() {
        fail(&mut report, "balancing fails at a vertex".into());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::super::tests::tp;
    use super::*;
    use crate::{rat, rati};

    #[test]
    fn tropical_line() {
        // vals (a, b, c) on (0,0), (1,0), (0,1): vertex at (a-b, a-c)
        let f = tp(&[(0, 0, rati(3)), (1, 0, rati(1)), (0, 1, rat(1, 2))]);
        let (s, c) = tropical_curve(&f).unwrap();
        assert_eq!(c.vertices.len(), 1);
        assert_eq!(c.vertices[0], (rati(2), rat(5, 2)));
        assert_eq!(c.rays.len(), 3);
        assert!(c.bounded_edges.is_empty());
        let mut dirs: Vec<(i64, i64)> = c.rays.iter().map(|r| r.dir).collect();
        dirs.sort();
        assert_eq!(dirs, vec![(-1, 0), (0, -1), (1, 1)]);
        assert!(verify_balancing(&c).is_ok());
        assert!(verify_duality(&c, &s).passed);
    }

    #[test]
    fn square_with_diagonal_split() {
        let f = tp(&[
            (0, 0, rati(0)),
            (1, 0, rati(0)),
            (0, 1, rati(0)),
            (1, 1, rati(1)),
        ]);
        let (s, c) = tropical_curve(&f).unwrap();
        assert_eq!(c.vertices.len(), 2);
        assert_eq!(c.bounded_edges.len(), 1);
        let e = &c.bounded_edges[0];
        assert_eq!(e.weight, 1);
        let dx = &c.vertices[e.to_cell].0 - &c.vertices[e.from_cell].0;
        let dy = &c.vertices[e.to_cell].1 - &c.vertices[e.from_cell].1;
        let dir = primitive_rational_dir(&dx, &dy);
        assert!(dir == (1, -1) || dir == (-1, 1), "direction {dir:?}");
        assert!(verify_duality(&c, &s).passed);
    }

    #[test]
    fn corrupted_weight_fails_duality() {
        let f = tp(&[
            (0, 0, rati(0)),
            (1, 0, rati(0)),
            (0, 1, rati(0)),
            (1, 1, rati(1)),
        ]);
        let (s, mut c) = tropical_curve(&f).unwrap();
        c.bounded_edges[0].weight = 7;
        let rep = verify_duality(&c, &s);
        assert!(!rep.passed);
        assert!(rep.first_violation.unwrap().contains("weight"));
    }

    #[test]
    fn valency_matches_cell_sides() {
        // one pentagon cell: 5 rays from a single vertex
        let f = tp(&[
            (0, 0, rati(0)),
            (1, 0, rati(0)),
            (2, 1, rati(0)),
            (0, 1, rati(0)),
            (1, 2, rati(0)),
        ]);
        let (s, c) = tropical_curve(&f).unwrap();
        assert_eq!(s.cells.len(), 1);
        assert_eq!(c.rays.len(), 5);
        assert!(verify_duality(&c, &s).passed);
    }
}
