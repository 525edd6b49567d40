//! Exhaustive enumeration of convex lattice m-gons with a prescribed number
//! of interior lattice points and edge-length multiset, one representative
//! per Aff(Z^2)-equivalence class.
//!
//! Search space: edge-vector sequences in strictly increasing angular order
//! starting from a base edge on the positive x-axis. Pick's identity fixes
//! the doubled area A = 2I + sum(lengths) - 2 in advance, which gives the
//! pruning bounds asserted below: every vertex satisfies 0 <= y <= A
//! (triangle over the base edge); after a shear some representative has
//! |x| <= 4(A+2) at every vertex; and consecutive edge vectors w, w' span
//! an ear inside the polygon, so 1 <= cross(w, w') <= A.
//! The search box covers those bounds with margin; classes are deduplicated
//! through `normal_form`.

use super::{cross, gcd64, normal_form, pt, LatticeError, LatticePoint, LatticePolytope};
use std::collections::BTreeSet;

/// Filter on the parallel-polygon property of the enumerated polygons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParallelMode {
    Any,
    Require,
    Forbid,
}

/// One representative per equivalence class of `m`-gons with `interior`
/// interior lattice points and the given edge lattice lengths.
/// Representatives are returned in normal form, sorted.
pub fn enumerate_class(
    m: usize,
    interior: i64,
    lengths: &[i64],
    parallel: ParallelMode,
) -> Result<Vec<LatticePolytope>, LatticeError> {
    if !(3..=6).contains(&m) {
        return Err(LatticeError::OutOfRange(format!("m = {m} not in 3..=6")));
    }
    if lengths.len() != m {
        return Err(LatticeError::OutOfRange(format!(
            "need {m} edge lengths, got {}",
            lengths.len()
        )));
    }
    if !(0..=3).contains(&interior) {
        return Err(LatticeError::OutOfRange(format!(
            "interior = {interior} not in 0..=3"
        )));
    }
    let b: i64 = lengths.iter().sum();
    if b > 8 || lengths.iter().any(|&l| l < 1) {
        return Err(LatticeError::OutOfRange(format!(
            "edge lengths {lengths:?} out of desk scale (sum <= 8, all >= 1)"
        )));
    }
    let area2 = 2 * interior + b - 2;
    if area2 <= 0 {
        return Ok(Vec::new());
    }

    let search = Search::new(m, area2, lengths, parallel, interior);
    let mut classes: BTreeSet<LatticePolytope> = BTreeSet::new();
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable();
    let mut bases = sorted.clone();
    bases.dedup();
    for &l1 in &bases {
        let mut rest = sorted.clone();
        let idx = rest.iter().position(|&l| l == l1).unwrap();
        rest.remove(idx);
        search.dfs(l1, &rest, &mut classes);
    }
    Ok(classes.into_iter().collect())
}

struct Search {
    m: usize,
    area2: i64,
    parallel: ParallelMode,
    interior: i64,
    dirs: Vec<(i64, i64)>,
    xbound: i64,
}

impl Search {
    fn new(m: usize, area2: i64, _lengths: &[i64], parallel: ParallelMode, interior: i64) -> Self {
        let xb = 8 * (area2 + 2);
        let yb = area2;
        let mut dirs = Vec::new();
        for q in -yb..=yb {
            for p in -xb..=xb {
                if (p, q) != (0, 0) && gcd64(p, q) == 1 {
                    dirs.push((p, q));
                }
            }
        }
        dirs.sort_by(|a, b| angle_cmp(*a, *b));
        Search {
            m,
            area2,
            parallel,
            interior,
            dirs,
            xbound: 4 * (area2 + 2),
        }
    }

    fn dfs(&self, base_len: i64, rest: &[i64], classes: &mut BTreeSet<LatticePolytope>) {
        let mut edges: Vec<(i64, i64)> = vec![(base_len, 0)];
        self.extend(&mut edges, rest, (base_len, 0), classes);
    }

    /// Grow the ccw edge chain; the final two edges are forced by closure.
    fn extend(
        &self,
        edges: &mut Vec<(i64, i64)>,
        rest: &[i64],
        at: (i64, i64),
        classes: &mut BTreeSet<LatticePolytope>,
    ) {
        if edges.len() == self.m - 2 {
            self.close(edges, rest, at, classes);
            return;
        }
        let prev = *edges.last().unwrap();
        let prev_dir = primitive(prev);
        for &d in &self.dirs {
            if angle_cmp(d, prev_dir) != std::cmp::Ordering::Greater {
                continue;
            }
            let mut used = BTreeSet::new();
            for &l in rest {
                if !used.insert(l) {
                    continue;
                }
                let w = (d.0 * l, d.1 * l);
                let ear = cross(prev, w);
                if ear <= 0 || ear > self.area2 {
                    continue;
                }
                let np = (at.0 + w.0, at.1 + w.1);
                if np.1 < 0 || np.1 > self.area2 || np.0.abs() > self.xbound {
                    continue;
                }
                let mut rest2 = rest.to_vec();
                let idx = rest2.iter().position(|&x| x == l).unwrap();
                rest2.remove(idx);
                edges.push(w);
                self.extend(edges, &rest2, np, classes);
                edges.pop();
            }
        }
    }

    /// Choose the last free edge, then the closing edge back to the origin.
    fn close(
        &self,
        edges: &[(i64, i64)],
        rest: &[i64],
        at: (i64, i64),
        classes: &mut BTreeSet<LatticePolytope>,
    ) {
        debug_assert_eq!(rest.len(), 2);
        let prev = *edges.last().unwrap();
        let prev_dir = primitive(prev);
        for pick in 0..2 {
            let (l, llast) = (rest[pick], rest[1 - pick]);
            if pick == 1 && rest[0] == rest[1] {
                continue;
            }
            for &d in &self.dirs {
                if angle_cmp(d, prev_dir) != std::cmp::Ordering::Greater {
                    continue;
                }
                let w = (d.0 * l, d.1 * l);
                let ear = cross(prev, w);
                if ear <= 0 || ear > self.area2 {
                    continue;
                }
                let np = (at.0 + w.0, at.1 + w.1);
                let wlast = (-np.0, -np.1);
                if wlast == (0, 0) {
                    continue;
                }
                if gcd64(wlast.0, wlast.1) != llast {
                    continue;
                }
                let dlast = primitive(wlast);
                if angle_cmp(dlast, d) != std::cmp::Ordering::Greater {
                    continue;
                }
                let ear2 = cross(w, wlast);
                if ear2 <= 0 || ear2 > self.area2 {
                    continue;
                }
                let ear3 = cross(wlast, edges[0]);
                if ear3 <= 0 || ear3 > self.area2 {
                    continue;
                }
                let mut final_edges = edges.to_vec();
                final_edges.push(w);
                final_edges.push(wlast);
                self.emit(&final_edges, classes);
            }
        }
    }

    fn emit(&self, edges: &[(i64, i64)], classes: &mut BTreeSet<LatticePolytope>) {
        // the last edge closes the chain; vertices are the partial sums
        let mut vs: Vec<LatticePoint> = Vec::with_capacity(self.m);
        let mut cur = (0i64, 0i64);
        for w in &edges[..edges.len() - 1] {
            vs.push(pt(cur.0, cur.1));
            cur = (cur.0 + w.0, cur.1 + w.1);
        }
        vs.push(pt(cur.0, cur.1));
        let poly = match LatticePolytope::hull(&vs) {
            Ok(p) => p,
            Err(_) => return,
        };
        if poly.num_edges() != self.m || poly.area2() != self.area2 {
            return;
        }
        if poly.interior_count() != self.interior {
            return;
        }
        match self.parallel {
            ParallelMode::Any => {}
            ParallelMode::Require => {
                if !super::is_parallel_polygon(&poly) {
                    return;
                }
            }
            ParallelMode::Forbid => {
                if super::is_parallel_polygon(&poly) {
                    return;
                }
            }
        }
        classes.insert(normal_form(&poly));
    }
}

fn primitive(v: (i64, i64)) -> (i64, i64) {
    let g = gcd64(v.0, v.1);
    (v.0 / g, v.1 / g)
}

/// Counterclockwise angular order starting at direction (1,0).
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> std::cmp::Ordering {
    let half = |d: (i64, i64)| {
        if d.1 > 0 || (d.1 == 0 && d.0 > 0) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    // same half turn: a before b iff cross(a, b) > 0
    0i64.cmp(&cross(a, b))
}
