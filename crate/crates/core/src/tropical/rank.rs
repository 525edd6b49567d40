//! Rank of a subdivision: the dimension of the space of tropical curves
//! sharing it. Parametrized by the lift values at the subdivision vertices
//! (values at non-vertex lattice points are dominated and do not move the
//! curve); each cell forces its vertices to be affinely dependent, one
//! linear constraint per vertex beyond an affine frame. One global additive
//! constant fixes the same curve.

use super::DualSubdivision;
use crate::lattice::{cross, LatticePoint};
use crate::{Int, Rat};
use num_traits::Zero;

/// rank(S) = dim(solution space of the cell coplanarity constraints) - 1.
pub fn rank(s: &DualSubdivision) -> i64 {
    let verts = &s.vertices;
    let index = |p: &LatticePoint| verts.binary_search(p).expect("cell corner is a vertex");
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for cell in &s.cells {
        let vs = cell.polygon.vertices();
        if vs.len() < 4 {
            continue;
        }
        // affine frame: the first three corners of a strictly convex
        // polygon are affinely independent
        let (f0, f1, f2) = (vs[0], vs[1], vs[2]);
        let det = cross(f1.sub(&f0), f2.sub(&f0));
        debug_assert!(det != 0);
        for vk in &vs[3..] {
            // barycentric coordinates of vk in (f0, f1, f2)
            let b1 = Rat::new(
                Int::from(cross(vk.sub(&f0), f2.sub(&f0))),
                Int::from(det),
            );
            let b2 = Rat::new(
                Int::from(cross(f1.sub(&f0), vk.sub(&f0))),
                Int::from(det),
            );
            let b0 = Rat::from(Int::from(1)) - &b1 - &b2;
            let mut row = vec![Rat::zero(); verts.len()];
            row[index(vk)] = Rat::from(Int::from(1));
            row[index(&f0)] -= b0;
            row[index(&f1)] -= b1;
            row[index(&f2)] -= b2;
            rows.push(row);
        }
    }
    let r = matrix_rank(rows);
    verts.len() as i64 - r as i64 - 1
}

/// rkexp(S) = #V(S) - 1 - sum over cells of (#V(cell) - 3).
pub fn expected_rank(s: &DualSubdivision) -> i64 {
    let extra: i64 = s
        .cells
        .iter()
        .map(|c| c.polygon.num_edges() as i64 - 3)
        .sum();
    s.vertices.len() as i64 - 1 - extra
}

/// Exact rank by Gauss elimination over the rationals.
fn matrix_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let mut rank = 0;
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows.len() {
            break;
        }
        let pivot = (row..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else {
            continue;
        };
        rows.swap(row, p);
        let inv = crate::algebra::FieldCoeff::inv(&rows[row][col]);
        for entry in rows[row][col..].iter_mut() {
            *entry = &*entry * &inv;
        }
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                #[allow(clippy::needless_range_loop)] // two rows are read at once
                for c in col..cols {
                    let delta = &factor * &rows[row][c];
                    rows[r][c] = &rows[r][c] - delta;
                }
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::super::tests::tp;
    use super::super::*;
    use super::*;
    use crate::rati;

    #[test]
    fn square_split_rank_three() {
        let f = tp(&[
            (0, 0, rati(0)),
            (1, 0, rati(0)),
            (0, 1, rati(0)),
            (1, 1, rati(1)),
        ]);
        let s = dual_subdivision(&f).unwrap();
        assert_eq!(rank(&s), 3);
        assert_eq!(expected_rank(&s), 3);
    }

    #[test]
    fn single_cell_rank_two() {
        // a single m-gon cell always has rank m - 1 - (m - 3) - ... = 2
        for support in [
            vec![(0, 0), (1, 0), (0, 1)],
            vec![(0, 0), (1, 0), (1, 1), (0, 1)],
            vec![(0, 0), (1, 0), (2, 1), (1, 2), (0, 1)],
            vec![(1, 0), (2, 0), (0, 3), (1, 3)],
        ] {
            let f = tp(&support
                .iter()
                .map(|&(i, j)| (i, j, rati(0)))
                .collect::<Vec<_>>());
            let s = dual_subdivision(&f).unwrap();
            assert_eq!(s.cells.len(), 1);
            assert_eq!(rank(&s), 2, "support {support:?}");
            assert_eq!(expected_rank(&s), 2);
        }
    }
}
