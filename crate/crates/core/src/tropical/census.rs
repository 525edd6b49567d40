//! Counting data of a subdivision: cell-shape counts, the combinatorial
//! defect bound, rank and expected rank, and the boundary vertex defect.

use super::{expected_rank, rank, DualSubdivision};
use crate::lattice::{is_parallel_polygon, LatticePolytope};
use serde::Serialize;
use std::collections::BTreeMap;

/// Exact counts attached to a subdivision of a Newton polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivisionCensus {
    /// Number of l-gon cells, per l.
    pub n_ell: BTreeMap<usize, usize>,
    /// Number of parallel 2m-gon cells, per 2m.
    pub npar_2m: BTreeMap<usize, usize>,
    /// The combinatorial bound: sum (l-3) N_l - sum N'_2m - 1.
    pub script_n: i64,
    pub rank: i64,
    pub expected_rank: i64,
    /// d = rank - expected rank, nonnegative.
    pub defect: i64,
    /// Boundary lattice points of the Newton polytope that are not
    /// subdivision vertices.
    pub boundary_defect: i64,
    /// True when every cell is a triangle or a parallelogram.
    pub is_tp: bool,
}

/// Compute the census; the two equivalent formulas for the combinatorial bound
/// are evaluated and asserted equal, and the defect inequalities are
/// asserted as stated (zero for TP-subdivisions, 0 <= 2d <= script_n
/// otherwise).
pub fn subdivision_census(s: &DualSubdivision, newton: &LatticePolytope) -> SubdivisionCensus {
    let mut n_ell: BTreeMap<usize, usize> = BTreeMap::new();
    let mut npar_2m: BTreeMap<usize, usize> = BTreeMap::new();
    for cell in &s.cells {
        let m = cell.polygon.num_edges();
        *n_ell.entry(m).or_insert(0) += 1;
        if is_parallel_polygon(&cell.polygon) {
            *npar_2m.entry(m).or_insert(0) += 1;
        }
    }
    let sum_prime: i64 = npar_2m.values().map(|&k| k as i64).sum();
    let script_n: i64 =
        n_ell.iter().map(|(&l, &k)| (l as i64 - 3) * k as i64).sum::<i64>() - sum_prime - 1;
    // the alternative even/odd split of the same bound
    let script_n_alt: i64 = {
        let even: i64 = n_ell
            .iter()
            .filter(|(&l, _)| l % 2 == 0 && l >= 4)
            .map(|(&l, &k)| (l as i64 - 3) * k as i64)
            .sum::<i64>()
            - sum_prime;
        let odd: i64 = n_ell
            .iter()
            .filter(|(&l, _)| l % 2 == 1 && l >= 5)
            .map(|(&l, &k)| (l as i64 - 3) * k as i64)
            .sum();
        even + odd - 1
    };
    assert_eq!(script_n, script_n_alt, "the two bound formulas must agree");

    let rk = rank(s);
    let rkexp = expected_rank(s);
    let defect = rk - rkexp;
    assert!(defect >= 0, "rank below expected rank");

    let is_tp = s.cells.iter().all(|c| {
        c.polygon.num_edges() == 3
            || (c.polygon.num_edges() == 4 && is_parallel_polygon(&c.polygon))
    });
    if is_tp {
        assert_eq!(defect, 0, "TP-subdivision with positive defect");
    } else {
        assert!(2 * defect <= script_n, "defect bound violated");
    }

    let boundary_pts = newton.boundary_points();
    let on_boundary_vertices = s
        .vertices
        .iter()
        .filter(|p| newton.on_boundary(p))
        .count() as i64;
    let boundary_defect = boundary_pts.len() as i64 - on_boundary_vertices;

    SubdivisionCensus {
        n_ell,
        npar_2m,
        script_n,
        rank: rk,
        expected_rank: rkexp,
        defect,
        boundary_defect,
        is_tp,
    }
}
