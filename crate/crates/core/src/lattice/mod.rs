//! Lattice polygon arithmetic: convex lattice polygons in Z^2, affine
//! unimodular maps, boundary/interior point counts (Pick bookkeeping),
//! equivalence testing and canonical forms.

mod catalog;
mod enumerate;

pub use catalog::{
    catalog_match, is_edge2_cap_triangle, reference_normal_form, reference_polytope,
    verify_catalog_consistency, CatalogTag,
};
pub use enumerate::{enumerate_class, ParallelMode};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("polygon is degenerate: fewer than 3 distinct hull vertices")]
    Degenerate,
    #[error("enumeration parameters out of the supported range: {0}")]
    OutOfRange(String),
}

/// A point of the lattice Z^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub i: i64,
    pub j: i64,
}

pub fn pt(i: i64, j: i64) -> LatticePoint {
    LatticePoint { i, j }
}

impl LatticePoint {
    pub fn sub(&self, other: &LatticePoint) -> (i64, i64) {
        (self.i - other.i, self.j - other.j)
    }
}

pub fn cross(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

pub fn gcd64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd: returns (g, u, v) with a*u + b*v = g >= 0.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a >= 0 {
            (a, 1, 0)
        } else {
            (-a, -1, 0)
        }
    } else {
        let (g, u, v) = ext_gcd(b, a.rem_euclid(b));
        (g, v, u - a.div_euclid(b) * v)
    }
}

/// An element of Aff(Z^2): x -> M x + t with |det M| = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodularMap {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub tx: i64,
    pub ty: i64,
}

impl UnimodularMap {
    pub fn new(a: i64, b: i64, c: i64, d: i64, tx: i64, ty: i64) -> Self {
        let m = UnimodularMap { a, b, c, d, tx, ty };
        assert_eq!(m.det().abs(), 1, "linear part must have determinant +-1");
        m
    }

    pub fn identity() -> Self {
        UnimodularMap::new(1, 0, 0, 1, 0, 0)
    }

    pub fn translation(tx: i64, ty: i64) -> Self {
        UnimodularMap::new(1, 0, 0, 1, tx, ty)
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, p: &LatticePoint) -> LatticePoint {
        pt(
            self.a * p.i + self.b * p.j + self.tx,
            self.c * p.i + self.d * p.j + self.ty,
        )
    }

    pub fn apply_vec(&self, v: (i64, i64)) -> (i64, i64) {
        (self.a * v.0 + self.b * v.1, self.c * v.0 + self.d * v.1)
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        UnimodularMap::new(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.a * other.tx + self.b * other.ty + self.tx,
            self.c * other.tx + self.d * other.ty + self.ty,
        )
    }

    pub fn inverse(&self) -> UnimodularMap {
        let det = self.det();
        // inverse linear part: adj(M)/det with det = +-1
        let (a, b, c, d) = (self.d * det, -self.b * det, -self.c * det, self.a * det);
        let tx = -(a * self.tx + b * self.ty);
        let ty = -(c * self.tx + d * self.ty);
        UnimodularMap::new(a, b, c, d, tx, ty)
    }
}

/// A 2-dimensional convex lattice polygon, stored as its corner vertices in
/// counterclockwise order starting from the lexicographically least vertex.
/// No three consecutive vertices are collinear.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePolytope {
    vertices: Vec<LatticePoint>,
}

impl LatticePolytope {
    /// Convex hull of the given points; rejects hulls of dimension < 2.
    pub fn hull(points: &[LatticePoint]) -> Result<Self, LatticeError> {
        let mut pts: Vec<LatticePoint> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() < 3 {
            return Err(LatticeError::Degenerate);
        }
        // Andrew monotone chain, strict turns only (corners, no collinear).
        let build = |seq: &[LatticePoint]| {
            let mut h: Vec<LatticePoint> = Vec::new();
            for &p in seq {
                while h.len() >= 2 {
                    let a = h[h.len() - 2];
                    let b = h[h.len() - 1];
                    if cross(b.sub(&a), p.sub(&b)) <= 0 {
                        h.pop();
                    } else {
                        break;
                    }
                }
                h.push(p);
            }
            h
        };
        let lower = build(&pts);
        let rev: Vec<LatticePoint> = pts.iter().rev().copied().collect();
        let upper = build(&rev);
        let mut hull = lower;
        hull.extend(upper.into_iter().skip(1).take_while(|p| *p != pts[0]));
        if hull.len() < 3 {
            return Err(LatticeError::Degenerate);
        }
        Ok(Self::from_ccw_corners(hull))
    }

    /// Construct from vertices already known to be strict ccw corners.
    pub(crate) fn from_ccw_corners(mut vs: Vec<LatticePoint>) -> Self {
        let start = vs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| **p)
            .map(|(k, _)| k)
            .unwrap();
        vs.rotate_left(start);
        LatticePolytope { vertices: vs }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn num_edges(&self) -> usize {
        self.vertices.len()
    }

    /// Edges as (start, end) pairs in ccw order.
    pub fn edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.vertices.len();
        (0..n)
            .map(|k| (self.vertices[k], self.vertices[(k + 1) % n]))
            .collect()
    }

    /// Twice the Euclidean area (shoelace).
    pub fn area2(&self) -> i64 {
        let n = self.vertices.len();
        let mut tot = 0i64;
        for k in 0..n {
            let a = self.vertices[k];
            let b = self.vertices[(k + 1) % n];
            tot += a.i * b.j - a.j * b.i;
        }
        tot.abs()
    }

    /// Lattice lengths of the edges, in ccw edge order.
    pub fn edge_lattice_lengths(&self) -> Vec<i64> {
        self.edges()
            .iter()
            .map(|(a, b)| {
                let d = b.sub(a);
                gcd64(d.0, d.1)
            })
            .collect()
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_count(&self) -> i64 {
        self.edge_lattice_lengths().iter().sum()
    }

    /// Number of interior lattice points, via Pick's identity.
    pub fn interior_count(&self) -> i64 {
        (self.area2() - self.boundary_count() + 2) / 2
    }

    /// All lattice points of the polygon (boundary and interior), sorted.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let (mut imin, mut imax, mut jmin, mut jmax) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for v in &self.vertices {
            imin = imin.min(v.i);
            imax = imax.max(v.i);
            jmin = jmin.min(v.j);
            jmax = jmax.max(v.j);
        }
        let mut out = Vec::new();
        for i in imin..=imax {
            for j in jmin..=jmax {
                if self.contains(&pt(i, j)) {
                    out.push(pt(i, j));
                }
            }
        }
        out
    }

    /// True if the point lies in the polygon (boundary included).
    pub fn contains(&self, p: &LatticePoint) -> bool {
        let n = self.vertices.len();
        (0..n).all(|k| {
            let a = self.vertices[k];
            let b = self.vertices[(k + 1) % n];
            cross(b.sub(&a), p.sub(&a)) >= 0
        })
    }

    /// True if the point lies on the boundary of the polygon.
    pub fn on_boundary(&self, p: &LatticePoint) -> bool {
        let n = self.vertices.len();
        (0..n).any(|k| {
            let a = self.vertices[k];
            let b = self.vertices[(k + 1) % n];
            on_segment(&a, &b, p)
        })
    }

    pub fn interior_points(&self) -> Vec<LatticePoint> {
        self.lattice_points()
            .into_iter()
            .filter(|p| !self.on_boundary(p))
            .collect()
    }

    pub fn boundary_points(&self) -> Vec<LatticePoint> {
        self.lattice_points()
            .into_iter()
            .filter(|p| self.on_boundary(p))
            .collect()
    }

    pub fn apply(&self, m: &UnimodularMap) -> LatticePolytope {
        let imgs: Vec<LatticePoint> = self.vertices.iter().map(|p| m.apply(p)).collect();
        LatticePolytope::hull(&imgs).expect("unimodular image of a polygon is a polygon")
    }

    pub fn translate(&self, di: i64, dj: i64) -> LatticePolytope {
        self.apply(&UnimodularMap::translation(di, dj))
    }

    /// Vertex set equality (position-sensitive).
    pub fn same_point_set(&self, other: &LatticePolytope) -> bool {
        let a: BTreeSet<_> = self.vertices.iter().collect();
        let b: BTreeSet<_> = other.vertices.iter().collect();
        a == b
    }
}

pub fn on_segment(a: &LatticePoint, b: &LatticePoint, p: &LatticePoint) -> bool {
    let d = b.sub(a);
    let e = p.sub(a);
    if cross(d, e) != 0 {
        return false;
    }
    let dot = e.0 * d.0 + e.1 * d.1;
    dot >= 0 && dot <= d.0 * d.0 + d.1 * d.1
}

/// Counting data of a lattice polygon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonStats {
    pub area2: i64,
    pub boundary_count: i64,
    pub interior_count: i64,
    /// Edge lattice lengths, sorted ascending (a multiset).
    pub edge_lengths: Vec<i64>,
    pub is_parallel: bool,
    pub num_edges: usize,
}

/// Exact counting data; the Pick identity `area2 = 2 I + B - 2` is asserted.
pub fn polygon_stats(p: &LatticePolytope) -> PolygonStats {
    let area2 = p.area2();
    let boundary_count = p.boundary_count();
    let by_enum = p.interior_points().len() as i64;
    let by_pick = (area2 - boundary_count + 2) / 2;
    assert_eq!(by_enum, by_pick, "Pick identity violated");
    let mut edge_lengths = p.edge_lattice_lengths();
    edge_lengths.sort_unstable();
    PolygonStats {
        area2,
        boundary_count,
        interior_count: by_pick,
        edge_lengths,
        is_parallel: is_parallel_polygon(p),
        num_edges: p.num_edges(),
    }
}

/// A polygon is parallel if m is even and opposite edges have the same
/// primitive direction (up to orientation) and the same lattice length.
pub fn is_parallel_polygon(p: &LatticePolytope) -> bool {
    let n = p.num_edges();
    if !n.is_multiple_of(2) {
        return false;
    }
    let edges = p.edges();
    let h = n / 2;
    (0..h).all(|k| {
        let d1 = edges[k].1.sub(&edges[k].0);
        let d2 = edges[k + h].1.sub(&edges[k + h].0);
        let l1 = gcd64(d1.0, d1.1);
        let l2 = gcd64(d2.0, d2.1);
        // ccw traversal makes opposite edges antiparallel
        l1 == l2 && d1.0 == -d2.0 && d1.1 == -d2.1
    })
}

/// Maps sending one corner frame of `p` onto each corner frame of `q`.
fn frame_maps(p: &LatticePolytope, q: &LatticePolytope) -> Vec<UnimodularMap> {
    let pv = p.vertices();
    let np = pv.len();
    // frame of p at vertex 0: incoming reversed and outgoing edge directions
    let d_out = pv[1].sub(&pv[0]);
    let d_in = pv[np - 1].sub(&pv[0]);
    let prim = |v: (i64, i64)| {
        let g = gcd64(v.0, v.1);
        (v.0 / g, v.1 / g)
    };
    let (p0, p1) = (prim(d_out), prim(d_in));
    let qv = q.vertices();
    let nq = qv.len();
    let mut out = Vec::new();
    for k in 0..nq {
        let e_out = qv[(k + 1) % nq].sub(&qv[k]);
        let e_in = qv[(k + nq - 1) % nq].sub(&qv[k]);
        for (q0, q1) in [(prim(e_out), prim(e_in)), (prim(e_in), prim(e_out))] {
            // solve M p0 = q0, M p1 = q1
            let det = cross(p0, p1);
            if det == 0 {
                continue;
            }
            // M = [q0 q1] * [p0 p1]^{-1}; entries must be integers
            let num_a = q0.0 * p1.1 - q1.0 * p0.1;
            let num_b = q1.0 * p0.0 - q0.0 * p1.0;
            let num_c = q0.1 * p1.1 - q1.1 * p0.1;
            let num_d = q1.1 * p0.0 - q0.1 * p1.0;
            if [num_a, num_b, num_c, num_d].iter().any(|n| n.rem_euclid(det) != 0) {
                continue;
            }
            let (a, b, c, d) = (num_a / det, num_b / det, num_c / det, num_d / det);
            if (a * d - b * c).abs() != 1 {
                continue;
            }
            let tx = qv[k].i - (a * pv[0].i + b * pv[0].j);
            let ty = qv[k].j - (c * pv[0].i + d * pv[0].j);
            out.push(UnimodularMap::new(a, b, c, d, tx, ty));
        }
    }
    out
}

/// Decide Aff(Z^2)-equivalence; returns a witness map with A(p) = q.
pub fn unimodular_equivalent(p: &LatticePolytope, q: &LatticePolytope) -> Option<UnimodularMap> {
    if polygon_stats(p) != polygon_stats(q) {
        return None;
    }
    frame_maps(p, q)
        .into_iter()
        .find(|m| p.apply(m).same_point_set(q))
}

/// Canonical representative of the equivalence class of `p`.
///
/// For every oriented edge of `p`, normalizes (edge start to the origin,
/// primitive edge direction to (1,0), polygon into the upper half plane,
/// canonical shear pinning the topmost vertex) and takes the
/// lexicographically least vertex list over all candidates.
pub fn normal_form(p: &LatticePolytope) -> LatticePolytope {
    let vs = p.vertices();
    let n = vs.len();
    let mut best: Option<Vec<LatticePoint>> = None;
    for k in 0..n {
        for rev in [false, true] {
            let (s, e) = if rev {
                (vs[(k + 1) % n], vs[k])
            } else {
                (vs[k], vs[(k + 1) % n])
            };
            let d = e.sub(&s);
            let g = gcd64(d.0, d.1);
            let (dp, dq) = (d.0 / g, d.1 / g);
            // unimodular M with M (dp,dq) = (1,0): first row (u,v) from ext gcd,
            // second row (-dq, dp)
            let (gg, u, v) = ext_gcd(dp, dq);
            debug_assert_eq!(gg, 1);
            let mut m = UnimodularMap::new(u, v, -dq, dp, 0, 0);
            let o = m.apply(&s);
            m = UnimodularMap::translation(-o.i, -o.j).compose(&m);
            let mut img = p.apply(&m);
            if img.vertices().iter().any(|w| w.j < 0) {
                // flip into the upper half plane
                m = UnimodularMap::new(1, 0, 0, -1, 0, 0).compose(&m);
                img = p.apply(&m);
            }
            // canonical shear: topmost (then rightmost) vertex t gets 0 <= t.i < t.j
            let t = img
                .vertices()
                .iter()
                .max_by_key(|w| (w.j, w.i))
                .copied()
                .unwrap();
            debug_assert!(t.j > 0);
            let shear = -t.i.div_euclid(t.j);
            let msh = UnimodularMap::new(1, shear, 0, 1, 0, 0);
            let cand = img.apply(&msh);
            let cv = cand.vertices().to_vec();
            if best.as_ref().is_none_or(|b| cv < *b) {
                best = Some(cv);
            }
        }
    }
    LatticePolytope {
        vertices: best.unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[(i64, i64)]) -> LatticePolytope {
        LatticePolytope::hull(&v.iter().map(|&(i, j)| pt(i, j)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn unit_triangle_stats() {
        let s = polygon_stats(&poly(&[(0, 0), (1, 0), (0, 1)]));
        assert_eq!(s.area2, 1);
        assert_eq!(s.boundary_count, 3);
        assert_eq!(s.interior_count, 0);
        assert_eq!(s.edge_lengths, vec![1, 1, 1]);
        assert_eq!(s.num_edges, 3);
        assert!(!s.is_parallel);
    }

    #[test]
    fn stats_of_reference_triangles() {
        // direct lattice enumeration for Conv{(0,7),(1,0),(2,0)}
        let s = polygon_stats(&poly(&[(0, 7), (1, 0), (2, 0)]));
        assert_eq!((s.area2, s.boundary_count, s.interior_count), (7, 3, 3));
        // pentagon Conv{(0,0),(1,0),(2,1),(0,1),(1,2)}
        let s = polygon_stats(&poly(&[(0, 0), (1, 0), (2, 1), (0, 1), (1, 2)]));
        assert_eq!(s.num_edges, 5);
        assert_eq!((s.boundary_count, s.interior_count), (5, 1));
        assert_eq!(s.edge_lengths, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn degenerate_rejected() {
        let r = LatticePolytope::hull(&[pt(0, 0), pt(1, 1), pt(2, 2)]);
        assert_eq!(r.unwrap_err(), LatticeError::Degenerate);
    }

    #[test]
    fn parallel_detection() {
        assert!(is_parallel_polygon(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])));
        assert!(is_parallel_polygon(&poly(&[
            (1, 0),
            (2, 0),
            (0, 3),
            (1, 3)
        ])));
        assert!(!is_parallel_polygon(&poly(&[
            (0, 0),
            (1, 0),
            (0, 1),
            (3, 3)
        ])));
    }

    #[test]
    fn equivalence_identity_and_witness() {
        let p = poly(&[(0, 7), (1, 0), (2, 0)]);
        let m = unimodular_equivalent(&p, &p).unwrap();
        assert!(p.apply(&m).same_point_set(&p));

        // the hat-family map: Conv{(0,7),(1,0),(2,0)} ~ Conv{(0,7),(3,0),(4,0)}
        let q = poly(&[(0, 7), (3, 0), (4, 0)]);
        let m = unimodular_equivalent(&p, &q).expect("equivalent");
        assert!(p.apply(&m).same_point_set(&q));
        // a classical witness for this pair: linear part (3 1; -7 -2)
        let paper = UnimodularMap::new(3, 1, -7, -2, -3, 14);
        assert!(p.apply(&paper).same_point_set(&q));
    }

    #[test]
    fn inequivalent_quadrangles() {
        let v8 = poly(&[(0, 0), (1, 0), (0, 1), (3, 3)]);
        let v9 = poly(&[(0, 0), (1, 0), (0, 1), (4, 2)]);
        assert!(unimodular_equivalent(&v8, &v9).is_none());
    }

    #[test]
    fn normal_form_properties() {
        // all unimodular images of the unit triangle agree
        let u = poly(&[(0, 0), (1, 0), (0, 1)]);
        let nf = normal_form(&u);
        assert_eq!(nf, poly(&[(0, 0), (1, 0), (0, 1)]));
        let m = UnimodularMap::new(2, 1, 1, 1, -3, 5);
        assert_eq!(normal_form(&u.apply(&m)), nf);

        // point reflection
        let a = poly(&[(0, 0), (2, 0), (1, 2)]);
        let b = poly(&[(0, 0), (-2, 0), (-1, -2)]);
        assert_eq!(normal_form(&a), normal_form(&b));

        // hat family members
        let p = poly(&[(0, 7), (1, 0), (2, 0)]);
        let q = poly(&[(0, 7), (3, 0), (4, 0)]);
        assert_eq!(normal_form(&p), normal_form(&q));

        // inequivalent polygons get different forms
        let r = poly(&[(0, 7), (2, 0), (3, 0)]);
        assert_ne!(normal_form(&p), normal_form(&r));
    }

    #[test]
    fn stats_invariant_under_unimodular_maps() {
        let polys = [
            poly(&[(0, 7), (1, 0), (2, 0)]),
            poly(&[(0, 0), (1, 0), (2, 1), (0, 1), (1, 2)]),
            poly(&[(1, 0), (2, 0), (0, 3), (1, 3)]),
        ];
        let maps = [
            UnimodularMap::new(1, 1, 0, 1, 2, -3),
            UnimodularMap::new(0, -1, 1, 0, 0, 0),
            UnimodularMap::new(3, 1, -7, -2, -3, 14),
            UnimodularMap::new(-5, 2, -2, 1, 4, 4),
        ];
        for p in &polys {
            let s = polygon_stats(p);
            for m in &maps {
                assert_eq!(polygon_stats(&p.apply(m)), s);
            }
        }
    }
}
