//! Tropical plane curves from exact valuations: the concave lift and its
//! regular (dual) subdivision, the curve as a balanced weighted polyhedral
//! complex, the duality checks, and the rank bookkeeping.

mod census;
mod curve;
mod rank;

pub use census::{subdivision_census, SubdivisionCensus};
pub use curve::{
    curve_from_subdivision, tropical_curve, verify_balancing, verify_duality, BoundedEdge,
    DualityReport, Ray, TropicalCurve,
};
pub use rank::{expected_rank, rank};

use crate::lattice::{LatticePoint, LatticePolytope, UnimodularMap};
use crate::{Int, Rat};
use num_traits::One;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TropicalError {
    #[error("support must contain at least three points")]
    TooFewPoints,
    #[error("duplicate support point ({0}, {1})")]
    DuplicatePoint(i64, i64),
    #[error("Newton polytope is not 2-dimensional")]
    DegenerateNewton,
}

/// A tropical polynomial: support points with exact rational valuations.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalPolynomial {
    points: Vec<LatticePoint>,
    vals: Vec<Rat>,
}

impl TropicalPolynomial {
    pub fn new(support: Vec<(LatticePoint, Rat)>) -> Result<Self, TropicalError> {
        if support.len() < 3 {
            return Err(TropicalError::TooFewPoints);
        }
        let mut sorted = support;
        sorted.sort_by_key(|(p, _)| *p);
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(TropicalError::DuplicatePoint(w[0].0.i, w[0].0.j));
            }
        }
        let points: Vec<LatticePoint> = sorted.iter().map(|(p, _)| *p).collect();
        let vals: Vec<Rat> = sorted.into_iter().map(|(_, v)| v).collect();
        LatticePolytope::hull(&points).map_err(|_| TropicalError::DegenerateNewton)?;
        Ok(TropicalPolynomial { points, vals })
    }

    pub fn support(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn valuations(&self) -> &[Rat] {
        &self.vals
    }

    pub fn newton_polytope(&self) -> LatticePolytope {
        LatticePolytope::hull(&self.points).expect("validated at construction")
    }

    /// Apply a unimodular map to the support, carrying valuations along.
    pub fn apply(&self, m: &UnimodularMap) -> TropicalPolynomial {
        let support = self
            .points
            .iter()
            .zip(&self.vals)
            .map(|(p, v)| (m.apply(p), v.clone()))
            .collect();
        TropicalPolynomial::new(support).expect("unimodular image stays valid")
    }
}

/// The affine function `a + b i + c j` a cell's lift restricts to.
#[derive(Debug, Clone, PartialEq)]
pub struct CellPlane {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl CellPlane {
    pub fn eval(&self, p: &LatticePoint) -> Rat {
        &self.a + &self.b * Rat::from(Int::from(p.i)) + &self.c * Rat::from(Int::from(p.j))
    }
}

/// One 2-dimensional cell of the subdivision.
#[derive(Debug, Clone)]
pub struct Cell {
    pub polygon: LatticePolytope,
    pub plane: CellPlane,
    /// Support points lying on the cell's plane (its defining affine data).
    pub contact: Vec<LatticePoint>,
}

/// A 1-cell of the subdivision: either shared by two cells or on the
/// boundary of the Newton polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivEdge {
    pub a: LatticePoint,
    pub b: LatticePoint,
    pub left_cell: usize,
    /// Present for interior edges, absent on the Newton boundary.
    pub right_cell: Option<usize>,
}

impl SubdivEdge {
    pub fn lattice_length(&self) -> i64 {
        let d = self.b.sub(&self.a);
        crate::lattice::gcd64(d.0, d.1)
    }
}

/// The regular subdivision of the Newton polytope induced by the concave
/// lift of the valuations.
#[derive(Debug, Clone)]
pub struct DualSubdivision {
    pub newton: LatticePolytope,
    pub cells: Vec<Cell>,
    pub edges: Vec<SubdivEdge>,
    /// V(S): the subdivision vertices (cell corners), sorted.
    pub vertices: Vec<LatticePoint>,
}

impl DualSubdivision {
    /// The concave hull function at a lattice point of the Newton polytope.
    pub fn lift(&self, p: &LatticePoint) -> Rat {
        for cell in &self.cells {
            if cell.polygon.contains(p) {
                return cell.plane.eval(p);
            }
        }
        panic!("point ({}, {}) outside the Newton polytope", p.i, p.j);
    }

    /// Index of the cell a point belongs to (first match).
    pub fn cell_containing(&self, p: &LatticePoint) -> Option<usize> {
        self.cells.iter().position(|c| c.polygon.contains(p))
    }
}

/// Compute the dual subdivision: cells are the projections of the upper
/// convex hull facets of the lifted support, merged along coplanarity.
pub fn dual_subdivision(f: &TropicalPolynomial) -> Result<DualSubdivision, TropicalError> {
    let pts = f.support();
    // scale the valuations to integers for exact plane predicates
    let mut den_lcm = Int::one();
    for v in f.valuations() {
        den_lcm = num_integer::Integer::lcm(&den_lcm, v.denom());
    }
    let scale = Rat::from(den_lcm.clone());
    let w_big: Vec<Int> = f
        .valuations()
        .iter()
        .map(|v| {
            let s = v * &scale;
            debug_assert!(s.denom().is_one());
            s.numer().clone()
        })
        .collect();
    // i128 fast path when the scaled heights stay far from overflow:
    // coordinates are below 2^20 and |w| below 2^78, so every side value
    // is bounded by 48 * 2^40 * 2^78 < 2^126
    let coord_ok = pts
        .iter()
        .all(|p| p.i.unsigned_abs() < (1 << 20) && p.j.unsigned_abs() < (1 << 20));
    let heights_small = w_big
        .iter()
        .all(|v| v.bits() < 78);
    let seen_contacts = if coord_ok && heights_small {
        let w: Vec<i128> = w_big
            .iter()
            .map(|v| i128::try_from(v.clone()).expect("bounded above"))
            .collect();
        upper_hull_contacts(pts, &w)
    } else {
        upper_hull_contacts(pts, &w_big)
    };

    let mut cells: Vec<Cell> = Vec::new();
    for contact in &seen_contacts {
        let cpts: Vec<LatticePoint> = contact.iter().map(|&s| pts[s]).collect();
        let polygon = match LatticePolytope::hull(&cpts) {
            Ok(p) => p,
            Err(_) => continue, // 1-dimensional contact sets are edges, not cells
        };
        let plane = plane_through(&cpts, f);
        cells.push(Cell {
            polygon,
            plane,
            contact: cpts,
        });
    }
    if cells.is_empty() {
        return Err(TropicalError::DegenerateNewton);
    }
    cells.sort_by(|a, b| a.polygon.vertices().cmp(b.polygon.vertices()));

    let newton = f.newton_polytope();
    let total: i64 = cells.iter().map(|c| c.polygon.area2()).sum();
    assert_eq!(total, newton.area2(), "cells must tile the Newton polytope");

    let mut vertices: Vec<LatticePoint> = cells
        .iter()
        .flat_map(|c| c.polygon.vertices().iter().copied())
        .collect();
    vertices.sort();
    vertices.dedup();

    let mut seg_map: BTreeMap<(LatticePoint, LatticePoint), Vec<usize>> = BTreeMap::new();
    for (ci, cell) in cells.iter().enumerate() {
        for (a, b) in cell.polygon.edges() {
            let key = if a < b { (a, b) } else { (b, a) };
            seg_map.entry(key).or_default().push(ci);
        }
    }
    let mut edges = Vec::new();
    for ((a, b), owners) in seg_map {
        match owners.len() {
            1 => {
                assert!(
                    newton.on_boundary(&a) && newton.on_boundary(&b),
                    "single-cell edge must lie on the Newton boundary"
                );
                edges.push(SubdivEdge {
                    a,
                    b,
                    left_cell: owners[0],
                    right_cell: None,
                });
            }
            2 => edges.push(SubdivEdge {
                a,
                b,
                left_cell: owners[0],
                right_cell: Some(owners[1]),
            }),
            k => panic!("edge shared by {k} cells"),
        }
    }

    let s = DualSubdivision {
        newton,
        cells,
        edges,
        vertices,
    };
    validate_concavity(f, &s);
    Ok(s)
}

/// Exact arithmetic for the hull predicate: implemented by i128 (fast
/// path, bounds checked by the caller) and by arbitrary-precision
/// integers.
trait HullInt:
    Clone
    + Ord
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;
    fn zero() -> Self;
}

impl HullInt for i128 {
    fn from_i64(n: i64) -> Self {
        n as i128
    }
    fn zero() -> Self {
        0
    }
}

impl HullInt for Int {
    fn from_i64(n: i64) -> Self {
        Int::from(n)
    }
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
}

/// Contact sets of the upper-hull facets, from all non-degenerate triples.
fn upper_hull_contacts<T: HullInt>(pts: &[LatticePoint], w: &[T]) -> Vec<Vec<usize>> {
    let n = pts.len();
    let xs: Vec<T> = pts.iter().map(|p| T::from_i64(p.i)).collect();
    let ys: Vec<T> = pts.iter().map(|p| T::from_i64(p.j)).collect();
    let mut seen_contacts: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let u = (
                    xs[j].clone() - xs[i].clone(),
                    ys[j].clone() - ys[i].clone(),
                    w[j].clone() - w[i].clone(),
                );
                let v = (
                    xs[k].clone() - xs[i].clone(),
                    ys[k].clone() - ys[i].clone(),
                    w[k].clone() - w[i].clone(),
                );
                let mut nx = u.1.clone() * v.2.clone() - u.2.clone() * v.1.clone();
                let mut ny = u.2.clone() * v.0.clone() - u.0.clone() * v.2.clone();
                let nz = u.0.clone() * v.1.clone() - u.1.clone() * v.0.clone();
                if nz == T::zero() {
                    continue; // projection degenerate
                }
                let mut nzp = nz.clone();
                if nz < T::zero() {
                    nx = -nx;
                    ny = -ny;
                    nzp = -nzp;
                }
                // upper facet: every lifted point at or below the plane
                let side = |s: usize| -> T {
                    nx.clone() * (xs[s].clone() - xs[i].clone())
                        + ny.clone() * (ys[s].clone() - ys[i].clone())
                        + nzp.clone() * (w[s].clone() - w[i].clone())
                };
                if (0..n).all(|s| side(s) <= T::zero()) {
                    let contact: Vec<usize> = (0..n).filter(|&s| side(s) == T::zero()).collect();
                    if !seen_contacts.contains(&contact) {
                        seen_contacts.push(contact);
                    }
                }
            }
        }
    }
    seen_contacts
}

fn plane_through(cpts: &[LatticePoint], f: &TropicalPolynomial) -> CellPlane {
    let val = |p: &LatticePoint| -> Rat {
        let idx = f.support().iter().position(|q| q == p).unwrap();
        f.valuations()[idx].clone()
    };
    // pick three affinely independent contact points
    let p0 = cpts[0];
    let mut p1 = None;
    let mut p2 = None;
    for &q in &cpts[1..] {
        if p1.is_none() {
            p1 = Some(q);
            continue;
        }
        let d1 = p1.unwrap().sub(&p0);
        let d2 = q.sub(&p0);
        if d1.0 * d2.1 - d1.1 * d2.0 != 0 {
            p2 = Some(q);
            break;
        }
    }
    let (p1, p2) = (p1.unwrap(), p2.unwrap());
    let (d1, d2) = (p1.sub(&p0), p2.sub(&p0));
    let det = Rat::from(Int::from(d1.0 * d2.1 - d1.1 * d2.0));
    let r1 = val(&p1) - val(&p0);
    let r2 = val(&p2) - val(&p0);
    let b = (&r1 * Rat::from(Int::from(d2.1)) - &r2 * Rat::from(Int::from(d1.1))) / det.clone();
    let c = (&r2 * Rat::from(Int::from(d1.0)) - &r1 * Rat::from(Int::from(d2.0))) / det;
    let a = val(&p0) - &b * Rat::from(Int::from(p0.i)) - &c * Rat::from(Int::from(p0.j));
    CellPlane { a, b, c }
}

/// The defining concavity checks: the lift dominates every support value,
/// each cell plane matches its contacts, and gradients break across every
/// interior edge.
fn validate_concavity(f: &TropicalPolynomial, s: &DualSubdivision) {
    for (p, v) in f.support().iter().zip(f.valuations()) {
        let lift = s.lift(p);
        assert!(
            &lift >= v,
            "lift below a support valuation at ({}, {})",
            p.i,
            p.j
        );
    }
    for cell in &s.cells {
        for p in &cell.contact {
            let idx = f.support().iter().position(|q| q == p).unwrap();
            assert_eq!(cell.plane.eval(p), f.valuations()[idx]);
        }
    }
    for e in &s.edges {
        if let Some(rc) = e.right_cell {
            let l = &s.cells[e.left_cell].plane;
            let r = &s.cells[rc].plane;
            assert!(l.b != r.b || l.c != r.c, "adjacent cells share a gradient");
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::lattice::pt;
    use crate::{rat, rati};

    pub(crate) fn tp(support: &[(i64, i64, Rat)]) -> TropicalPolynomial {
        TropicalPolynomial::new(
            support
                .iter()
                .map(|(i, j, v)| (pt(*i, *j), v.clone()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_cell_from_flat_lift() {
        let f = tp(&[(0, 0, rati(0)), (1, 0, rati(0)), (0, 1, rati(0))]);
        let s = dual_subdivision(&f).unwrap();
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.vertices.len(), 3);
        assert_eq!(s.edges.len(), 3);
        assert!(s.edges.iter().all(|e| e.right_cell.is_none()));
    }

    #[test]
    fn square_splits_along_diagonal() {
        let f = tp(&[
            (0, 0, rati(0)),
            (1, 0, rati(0)),
            (0, 1, rati(0)),
            (1, 1, rati(1)),
        ]);
        let s = dual_subdivision(&f).unwrap();
        assert_eq!(s.cells.len(), 2);
        let interior: Vec<_> = s.edges.iter().filter(|e| e.right_cell.is_some()).collect();
        assert_eq!(interior.len(), 1);
        assert_eq!(
            (interior[0].a, interior[0].b),
            (pt(0, 0), pt(1, 1)),
            "split along the diagonal through the raised corner"
        );
    }

    #[test]
    fn low_point_is_dominated() {
        // a non-vertex support point strictly below the hull appears in no
        // cell's defining data
        let f = tp(&[
            (0, 0, rati(0)),
            (2, 0, rati(0)),
            (0, 2, rati(0)),
            (1, 1, rati(-1)),
        ]);
        let s = dual_subdivision(&f).unwrap();
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.cells[0].polygon.num_edges(), 3);
        assert!(!s.cells[0].contact.contains(&pt(1, 1)));
        assert!(s.lift(&pt(1, 1)) > rati(-1));
    }

    #[test]
    fn low_corner_still_splits() {
        // a Newton-polytope corner is always on the hull: lifting it below
        // the plane of the others splits along the anti-diagonal
        let f = tp(&[
            (0, 0, rati(0)),
            (1, 0, rati(0)),
            (0, 1, rati(0)),
            (1, 1, rati(-1)),
        ]);
        let s = dual_subdivision(&f).unwrap();
        assert_eq!(s.cells.len(), 2);
        let interior: Vec<_> = s.edges.iter().filter(|e| e.right_cell.is_some()).collect();
        assert_eq!((interior[0].a, interior[0].b), (pt(0, 1), pt(1, 0)));
    }

    #[test]
    fn huge_valuations_take_the_exact_slow_path() {
        // heights beyond the i128 fast-path bound still work exactly
        let big = crate::parse_rat(
            "123456789012345678901234567890123456789012345678901234567890",
        )
        .unwrap();
        let f = TropicalPolynomial::new(vec![
            (pt(0, 0), rati(0)),
            (pt(1, 0), rati(0)),
            (pt(0, 1), rati(0)),
            (pt(1, 1), big),
        ])
        .unwrap();
        let s = dual_subdivision(&f).unwrap();
        assert_eq!(s.cells.len(), 2);
    }

    #[test]
    fn rejects_degenerate_input() {
        let r = TropicalPolynomial::new(vec![
            (pt(0, 0), rati(0)),
            (pt(1, 1), rati(0)),
            (pt(2, 2), rati(0)),
        ]);
        assert_eq!(r.unwrap_err(), TropicalError::DegenerateNewton);
    }

    #[test]
    fn global_constant_and_affine_shift_fix_subdivision() {
        let f = tp(&[
            (0, 0, rat(1, 2)),
            (2, 0, rati(0)),
            (0, 2, rati(-1)),
            (1, 1, rat(3, 4)),
        ]);
        let s0 = dual_subdivision(&f).unwrap();
        let g = tp(&[
            (0, 0, rat(1, 2) + rati(5)),
            (2, 0, rati(5)),
            (0, 2, rati(-1) + rati(5)),
            (1, 1, rat(3, 4) + rati(5)),
        ]);
        let s1 = dual_subdivision(&g).unwrap();
        assert_eq!(s0.vertices, s1.vertices);
        assert_eq!(s0.cells.len(), s1.cells.len());
        for (c0, c1) in s0.cells.iter().zip(&s1.cells) {
            assert_eq!(c0.polygon, c1.polygon);
        }
        let (a, b) = (rati(2), rat(-1, 3));
        let h = tp(&[
            (0, 0, rat(1, 2)),
            (2, 0, rati(0) + &a * rati(2)),
            (0, 2, rati(-1) + &b * rati(2)),
            (1, 1, rat(3, 4) + &a + &b),
        ]);
        let s2 = dual_subdivision(&h).unwrap();
        assert_eq!(s0.vertices, s2.vertices);
        for (c0, c2) in s0.cells.iter().zip(&s2.cells) {
            assert_eq!(c0.polygon, c2.polygon);
        }
    }
}
