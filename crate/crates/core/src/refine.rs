//! Combinatorial side of the tropicalization refinement: exceptional
//! triangles for irregular singularities, the edge-normalizing unimodular
//! map, deformation-pattern conditions, and the catalog of edges that do
//! or do not carry a 1-tacnodal deformation pattern.

use crate::algebra::{symbolic_tacnode_invariants, Vars};
use crate::lattice::{ext_gcd, gcd64, pt, LatticeError, LatticePoint, LatticePolytope, UnimodularMap};
use crate::{rati, QPoly};
use serde::Serialize;

/// The exceptional triangle Conv{(m,0), (0,m1), (0,-m2)} attached to an
/// irregular singularity on an edge of lattice length m, with local Newton
/// diagrams meeting the transverse axis at heights m1 and m2.
pub fn exceptional_polytope(m: i64, m1: i64, m2: i64) -> Result<LatticePolytope, LatticeError> {
    if m < 2 || m1 < 1 || m2 < 1 {
        return Err(LatticeError::OutOfRange(format!(
            "exceptional polytope needs m >= 2, m1, m2 >= 1; got ({m}, {m1}, {m2})"
        )));
    }
    LatticePolytope::hull(&[pt(m, 0), pt(0, m1), pt(0, -m2)])
}

/// A unimodular map sending the edge to a horizontal segment and the
/// polytope into the closed right half-plane. With `flip` set, the plane
/// is reflected across the horizontal axis first (the downstream checks
/// are invariant under this).
pub fn edge_normalizer(
    sigma: (LatticePoint, LatticePoint),
    newton: &LatticePolytope,
    flip: bool,
) -> UnimodularMap {
    let d = sigma.1.sub(&sigma.0);
    let g = gcd64(d.0, d.1);
    assert!(g > 0, "degenerate edge");
    let (p, q) = (d.0 / g, d.1 / g);
    // rows (u, v) and (-q, p) send (p, q) to (1, 0)
    let (gg, u, v) = ext_gcd(p, q);
    assert_eq!(gg, 1);
    let mut m = UnimodularMap::new(u, v, -q, p, 0, 0);
    if flip {
        m = UnimodularMap::new(1, 0, 0, -1, 0, 0).compose(&m);
    }
    // translate the image into the right half-plane
    let min_x = newton
        .vertices()
        .iter()
        .map(|w| m.apply(w).i)
        .min()
        .unwrap();
    let m = UnimodularMap::translation(-min_x, 0).compose(&m);
    // post-verify both image conditions
    let ia = m.apply(&sigma.0);
    let ib = m.apply(&sigma.1);
    assert_eq!(ia.j, ib.j, "edge image must be horizontal");
    assert!(
        newton.vertices().iter().all(|w| m.apply(w).i >= 0),
        "polytope image must lie in the right half-plane"
    );
    m
}

/// Specification of a deformation pattern: the exceptional triangle data
/// and the two boundary truncations, all in the y-shifted presentation
/// with support inside Conv{(0,0), (m,m2), (0,m1+m2)}.
#[derive(Debug, Clone)]
pub struct DeformationPatternSpec {
    pub m: i64,
    pub m1: i64,
    pub m2: i64,
    /// Truncation on the lower edge (0,0)-(m,m2).
    pub phi_lower: QPoly,
    /// Truncation on the upper edge (m,m2)-(0,m1+m2).
    pub phi_upper: QPoly,
}

impl DeformationPatternSpec {
    pub fn delta_z(&self) -> LatticePolytope {
        exceptional_polytope(self.m, self.m1, self.m2).expect("validated")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PatternViolation {
    NewtonMismatch,
    PurePowerSlotNotZero,
    LowerTruncationMismatch,
    UpperTruncationMismatch,
}

/// Check conditions on a candidate pattern `phi` (variables "x", "y" are
/// the spatial ones; further variables may appear in coefficients):
/// the Newton polytope must be the shifted exceptional triangle, the pure
/// power slot x^(m-1) y^m2 must be zero, and the two edge truncations must
/// match the given data exactly.
pub fn deformation_pattern_check(
    phi: &QPoly,
    spec: &DeformationPatternSpec,
) -> Result<(), PatternViolation> {
    let xi = phi.vars().index("x");
    let yi = phi.vars().index("y");
    let spatial: Vec<LatticePoint> = phi
        .terms()
        .map(|(e, _)| pt(e[xi] as i64, e[yi] as i64))
        .collect();
    let hull = LatticePolytope::hull(&spatial).map_err(|_| PatternViolation::NewtonMismatch)?;
    let target = LatticePolytope::hull(&[
        pt(0, 0),
        pt(spec.m, spec.m2),
        pt(0, spec.m1 + spec.m2),
    ])
    .expect("triangle");
    if hull != target {
        return Err(PatternViolation::NewtonMismatch);
    }
    // condition on the pure power slot: only x^(m-1) y^m2 itself, mixed
    // monomials with the same x-exponent are unconstrained
    let slot = phi.terms().find(|(e, _)| {
        e[xi] as i64 == spec.m - 1
            && e[yi] as i64 == spec.m2
            && e.iter()
                .enumerate()
                .all(|(v, &k)| v == xi || v == yi || k == 0)
    });
    if slot.is_some() {
        return Err(PatternViolation::PurePowerSlotNotZero);
    }
    let trunc = |a: LatticePoint, b: LatticePoint| -> QPoly {
        let mut out = QPoly::zero(phi.vars());
        for (e, c) in phi.terms() {
            let p = pt(e[xi] as i64, e[yi] as i64);
            if crate::lattice::on_segment(&a, &b, &p) {
                out = out.add(&QPoly::monomial(phi.vars(), e.clone(), c.clone()));
            }
        }
        out
    };
    if trunc(pt(0, 0), pt(spec.m, spec.m2)) != spec.phi_lower {
        return Err(PatternViolation::LowerTruncationMismatch);
    }
    if trunc(pt(spec.m, spec.m2), pt(0, spec.m1 + spec.m2)) != spec.phi_upper {
        return Err(PatternViolation::UpperTruncationMismatch);
    }
    Ok(())
}

/// Edge catalog entries: the seven negative pairs, the length-one rule,
/// and the three positive glued pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgePairId {
    Pair1,
    Pair2,
    Pair3,
    Pair4,
    Pair5,
    Pair6,
    Pair7,
    LengthOne,
    PosIII,
    PosIV,
    PosV,
}

impl EdgePairId {
    pub fn all() -> &'static [EdgePairId] {
        &[
            EdgePairId::Pair1,
            EdgePairId::Pair2,
            EdgePairId::Pair3,
            EdgePairId::Pair4,
            EdgePairId::Pair5,
            EdgePairId::Pair6,
            EdgePairId::Pair7,
            EdgePairId::LengthOne,
            EdgePairId::PosIII,
            EdgePairId::PosIV,
            EdgePairId::PosV,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            EdgePairId::Pair1 => "EDGE_1",
            EdgePairId::Pair2 => "EDGE_2",
            EdgePairId::Pair3 => "EDGE_3",
            EdgePairId::Pair4 => "EDGE_4",
            EdgePairId::Pair5 => "EDGE_5",
            EdgePairId::Pair6 => "EDGE_6",
            EdgePairId::Pair7 => "EDGE_7",
            EdgePairId::LengthOne => "EDGE_LEN1",
            EdgePairId::PosIII => "EDGE_POS_III",
            EdgePairId::PosIV => "EDGE_POS_IV",
            EdgePairId::PosV => "EDGE_POS_V",
        }
    }

    pub fn parse(s: &str) -> Option<EdgePairId> {
        EdgePairId::all().iter().copied().find(|c| c.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeVerdict {
    IsTacnodalEdge,
    NotTacnodalEdge,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeCaseReport {
    pub id: String,
    pub verdict: EdgeVerdict,
    pub passed: bool,
    pub residuals: Vec<String>,
    pub notes: Vec<String>,
    /// True for the entries carried over from an external development;
    /// the computation here is the analogous quotient-ring contradiction.
    pub external_lemma_replication: bool,
}

impl EdgeCaseReport {
    fn new(id: EdgePairId) -> Self {
        EdgeCaseReport {
            id: id.name().to_string(),
            verdict: EdgeVerdict::NotTacnodalEdge,
            passed: true,
            residuals: Vec::new(),
            notes: Vec::new(),
            external_lemma_replication: matches!(
                id,
                EdgePairId::Pair1 | EdgePairId::Pair3 | EdgePairId::Pair4 | EdgePairId::Pair5
            ),
        }
    }

    fn check(&mut self, ok: bool, what: &str) {
        if !ok {
            self.passed = false;
            self.notes.push(format!("FAILED: {what}"));
        }
    }
}

/// Replay the computation for one catalog entry.
pub fn edge_1tacnodal_check(id: EdgePairId) -> EdgeCaseReport {
    match id {
        EdgePairId::Pair1 => hat1_contradiction(id, "glued unit-height triangles"),
        EdgePairId::Pair2 => hat2_contradiction(id),
        EdgePairId::Pair3 => hat3_contradiction(id),
        EdgePairId::Pair4 => hat1_contradiction(id, "quadrangle against triangle"),
        EdgePairId::Pair5 => hat1_contradiction(id, "two glued quadrangles"),
        EdgePairId::Pair6 => hat1_contradiction(id, "parallelogram against triangle"),
        EdgePairId::Pair7 => pair7_case_split(id),
        EdgePairId::LengthOne => length_one(id),
        EdgePairId::PosIII => positive_control(id, crate::algebra::CaseId::RIII),
        EdgePairId::PosIV => positive_control(id, crate::algebra::CaseId::RIV),
        EdgePairId::PosV => positive_control(id, crate::algebra::CaseId::RV),
    }
}

/// Patterns on Conv{(2,0),(0,1),(0,-1)}: phi = 1 + A'y + eps x^2 y + y^2.
/// phi_x = 2 eps x y forces x = 0 (y != 0 since phi(x,0) = 1), and then
/// Hess = 4 eps y is nonzero: not even a degenerate singular point.
fn hat1_contradiction(id: EdgePairId, gluing: &str) -> EdgeCaseReport {
    let mut r = EdgeCaseReport::new(id);
    let v = Vars::new(["x", "y", "Ap"]);
    for eps in [1i64, -1] {
        let phi = QPoly::parse(&v, "1 + Ap * y + y^2")
            .unwrap()
            .add(&QPoly::parse(&v, "x^2 * y").unwrap().scale(&rati(eps)));
        let inv = symbolic_tacnode_invariants(&phi, "x", "y");
        let xi = v.index("x");
        r.check(
            inv.fx == QPoly::parse(&v, "2 * x * y").unwrap().scale(&rati(eps)),
            "phi_x = 2 eps x y",
        );
        let h0 = inv.hess.substitute(xi, &QPoly::zero(&v));
        r.check(
            h0 == QPoly::parse(&v, "4 * y").unwrap().scale(&rati(eps)),
            "Hess at x = 0 is 4 eps y",
        );
        let at_y0 = phi
            .substitute(v.index("y"), &QPoly::zero(&v));
        r.check(at_y0 == QPoly::one(&v), "phi(x, 0) = 1, so y != 0");
    }
    r.residuals.push("4 * y".to_string());
    r.notes.push(format!(
        "{gluing}: the pattern system has no solution; the length-2 edge is not 1-tacnodal"
    ));
    r
}

/// Pattern on Conv{(2,0),(0,2),(0,-1)}: phi = 1 + A'y + eps x^2 y + B'y^2
/// + y^3. x = 0 is forced and K collapses to 48 eps y^3, nonzero.
fn hat2_contradiction(id: EdgePairId) -> EdgeCaseReport {
    let mut r = EdgeCaseReport::new(id);
    let v = Vars::new(["x", "y", "Ap", "Bp"]);
    for eps in [1i64, -1] {
        let phi = QPoly::parse(&v, "1 + Ap * y + Bp * y^2 + y^3")
            .unwrap()
            .add(&QPoly::parse(&v, "x^2 * y").unwrap().scale(&rati(eps)));
        let inv = symbolic_tacnode_invariants(&phi, "x", "y");
        let xi = v.index("x");
        let k0 = inv.k.substitute(xi, &QPoly::zero(&v));
        r.check(
            k0 == QPoly::parse(&v, "48 * y^3").unwrap().scale(&rati(eps)),
            &format!("K at x = 0 is 48 eps y^3 (eps = {eps})"),
        );
        let h0 = inv.hess.substitute(xi, &QPoly::zero(&v));
        let expect = QPoly::parse(&v, "4 * y").unwrap().scale(&rati(eps)).mul(
            &QPoly::parse(&v, "Bp + 3 * y").unwrap(),
        );
        r.check(h0 == expect, "Hess at x = 0 is 4 eps y (B' + 3y)");
    }
    r.residuals.push("48 * y^3".to_string());
    r.notes
        .push("K = 48 y^3 != 0 for y != 0: the pattern has no tacnode".to_string());
    r
}

/// Pattern on Conv{(3,0),(0,1),(0,-1)}: phi = 1 + A'y + y^2 + eps x^3 y +
/// c x y, with the pure slot x^2 y removed by the pattern condition.
/// phi_x forces c = -3 eps x^2; Hess becomes 12 eps x y, forcing x = 0 and
/// hence c = 0; then the coordinate-swapped K is 48 eps y, nonzero.
fn hat3_contradiction(id: EdgePairId) -> EdgeCaseReport {
    let mut r = EdgeCaseReport::new(id);
    let v = Vars::new(["x", "y", "Ap", "c"]);
    for eps in [1i64, -1] {
        let phi = QPoly::parse(&v, "1 + Ap * y + y^2 + c * x * y")
            .unwrap()
            .add(&QPoly::parse(&v, "x^3 * y").unwrap().scale(&rati(eps)));
        let inv = symbolic_tacnode_invariants(&phi, "x", "y");
        let ci = v.index("c");
        let csub = QPoly::parse(&v, "-3 * x^2").unwrap().scale(&rati(eps));
        let h = inv.hess.substitute(ci, &csub);
        r.check(
            h == QPoly::parse(&v, "12 * x * y").unwrap().scale(&rati(eps)),
            "Hess with c = -3 eps x^2 is 12 eps x y",
        );
        // x = 0 (and so c = 0): swap coordinates to get a usable chart
        let xi = v.index("x");
        let phi0 = phi.substitute(ci, &QPoly::zero(&v));
        let swapped = symbolic_tacnode_invariants(&phi0, "y", "x");
        let k_sw = swapped.k.substitute(xi, &QPoly::zero(&v));
        r.check(
            k_sw == QPoly::parse(&v, "48 * y").unwrap().scale(&rati(eps)),
            "coordinate-swapped K at x = 0 is 48 eps y",
        );
    }
    r.residuals.push("48 * y".to_string());
    r.notes.push(
        "x = 0 is forced, the swapped chart gives a cusp at worst: the length-3 edge is not \
         1-tacnodal"
            .to_string(),
    );
    r
}

/// Boundary conic against a triangle: three branches, each reduced to an
/// already-settled contradiction.
fn pair7_case_split(id: EdgePairId) -> EdgeCaseReport {
    let mut r = EdgeCaseReport::new(id);
    let v = Vars::new(["x", "y", "B", "C"]);
    // f in the shifted chart: X^2 + (B - C eps) Y + C X Y + Y^2
    for eps in [1i64, -1] {
        let f = QPoly::parse(&v, "x^2 + B * y + C * x * y + y^2")
            .unwrap()
            .sub(&QPoly::parse(&v, "C * y").unwrap().scale(&rati(eps)));
        // C^2 - 4 = 0: the quadric degenerates to a double line
        for cval in [2i64, -2] {
            let fc = f
                .substitute(v.index("C"), &QPoly::constant(&v, rati(cval)))
                .substitute(v.index("B"), &QPoly::constant(&v, rati(cval * eps)));
            let half = QPoly::parse(&v, "x").unwrap().add(
                &QPoly::parse(&v, "y").unwrap().scale(&crate::rat(cval, 2)),
            );
            r.check(
                fc == half.mul(&half),
                "C^2 = 4 with B = C eps gives a double line",
            );
        }
    }
    r.notes.push(
        "C^2 - 4 = 0: double line (non-isolated); B - C eps != 0: the pattern lives on \
         Conv{(2,0),(0,1),(0,-1)} and EDGE_6's contradiction applies; B - C eps = 0: the \
         pattern lives on Conv{(2,0),(0,2),(0,-1)} and EDGE_2's contradiction applies"
            .to_string(),
    );
    let sub1 = hat1_contradiction(EdgePairId::Pair6, "conic against triangle");
    let sub2 = hat2_contradiction(EdgePairId::Pair2);
    r.check(sub1.passed, "embedded EDGE_6 computation");
    r.check(sub2.passed, "embedded EDGE_2 computation");
    r.residuals.push("(x + C/2 y)^2".to_string());
    r
}

/// Any edge of lattice length one: the pattern is linear in x with
/// x-coefficient y^m2, so a singular point needs y = 0, contradicting
/// phi(x, 0) = 1.
fn length_one(id: EdgePairId) -> EdgeCaseReport {
    let mut r = EdgeCaseReport::new(id);
    for (m1, m2) in [(1i64, 1i64), (2, 1), (1, 2), (3, 2)] {
        let v = Vars::new(["x", "y", "a1", "a2", "a3", "a4", "a5"]);
        // phi = 1 + psi(y) + x y^m2 with psi(0) = 0 and generic
        // coefficients up to degree m1 + m2
        let mut phi = QPoly::one(&v);
        for k in 1..=(m1 + m2) as usize {
            let coeff = QPoly::var(&v, &format!("a{k}"));
            let mut e = vec![0u32; v.len()];
            e[v.index("y")] = k as u32;
            phi = phi.add(&coeff.mul(&QPoly::monomial(&v, e, crate::Rat::from(crate::Int::from(1)))));
        }
        let mut e = vec![0u32; v.len()];
        e[v.index("x")] = 1;
        e[v.index("y")] = m2 as u32;
        phi = phi.add(&QPoly::monomial(&v, e, crate::Rat::from(crate::Int::from(1))));

        let phix = phi.deriv(v.index("x"));
        let mut ey = vec![0u32; v.len()];
        ey[v.index("y")] = m2 as u32;
        r.check(
            phix == QPoly::monomial(&v, ey, crate::Rat::from(crate::Int::from(1))),
            &format!("phi_x = y^{m2} for (m1, m2) = ({m1}, {m2})"),
        );
        let at0 = phi.substitute(v.index("y"), &QPoly::zero(&v));
        r.check(
            at0 == QPoly::one(&v),
            "phi(x, 0) = 1, contradicting the forced y = 0",
        );
    }
    r.residuals.push("1".to_string());
    r.notes.push(
        "a singular point of the pattern needs y = 0, but the pattern equals 1 there: \
         length-1 edges are never 1-tacnodal"
            .to_string(),
    );
    r
}

/// Positive controls: the glued pairs with genuine deformation patterns.
/// The tacnode verification is delegated to the algebra case; here the
/// pattern conditions are checked on the witness polynomial as well.
fn positive_control(id: EdgePairId, case: crate::algebra::CaseId) -> EdgeCaseReport {
    let mut r = EdgeCaseReport::new(id);
    let rep = crate::algebra::verify_case(case);
    r.check(
        rep.verdict == crate::algebra::CaseVerdict::Pass,
        &format!("underlying tacnode verification {}", rep.id),
    );
    r.verdict = EdgeVerdict::IsTacnodalEdge;
    // pattern conditions on the witness polynomial of each case
    match id {
        EdgePairId::PosIII => {
            // phi = 1 + A y + x^2 y + B y^2 + C x y^2 + D y^3 + y^4 on the
            // shifted Conv{(0,0),(2,1),(0,4)}
            let v = Vars::new(["x", "y", "A", "B", "C", "D"]);
            let phi = QPoly::parse(
                &v,
                "1 + A * y + x^2 * y + B * y^2 + C * x * y^2 + D * y^3 + y^4",
            )
            .unwrap();
            let spec = DeformationPatternSpec {
                m: 2,
                m1: 3,
                m2: 1,
                phi_lower: QPoly::parse(&v, "1 + x^2 * y").unwrap(),
                phi_upper: QPoly::parse(&v, "x^2 * y + y^4").unwrap(),
            };
            r.check(
                deformation_pattern_check(&phi, &spec).is_ok(),
                "pattern conditions on the witness polynomial",
            );
            // negative control: an x^(m-1) term violates the slot condition
            let bad = phi.add(&QPoly::parse(&v, "x * y").unwrap());
            r.check(
                deformation_pattern_check(&bad, &spec)
                    == Err(PatternViolation::PurePowerSlotNotZero),
                "pure-power slot violation detected",
            );
        }
        EdgePairId::PosIV => {
            let v = Vars::new(["x", "y", "A", "B", "C"]);
            let phi = QPoly::parse(
                &v,
                "1 + A * y + B * y^2 + C * y^3 + y^4 + x^2 * y^2",
            )
            .unwrap();
            let spec = DeformationPatternSpec {
                m: 2,
                m1: 2,
                m2: 2,
                phi_lower: QPoly::parse(&v, "1 + x^2 * y^2").unwrap(),
                phi_upper: QPoly::parse(&v, "x^2 * y^2 + y^4").unwrap(),
            };
            r.check(
                deformation_pattern_check(&phi, &spec).is_ok(),
                "pattern conditions on the witness polynomial",
            );
        }
        EdgePairId::PosV => {
            // variables swapped in the witness polynomial; in the pattern
            // presentation the polytope is Conv{(0,0),(4,1),(0,2)}
            let v = Vars::new(["x", "y", "A", "B", "C"]);
            let phi = QPoly::parse(
                &v,
                "1 + A * x + B * x * y + C * x * y^2 + x * y^4 + x^2",
            )
            .unwrap();
            // as a pattern in (y, x)-swapped presentation: support
            // (0,0),(1,0)... checked directly on the swapped polynomial
            let swapped = {
                let mut q = QPoly::zero(&v);
                for (e, c) in phi.terms() {
                    let mut e2 = e.clone();
                    e2.swap(v.index("x"), v.index("y"));
                    q = q.add(&QPoly::monomial(&v, e2, c.clone()));
                }
                q
            };
            let spec = DeformationPatternSpec {
                m: 4,
                m1: 1,
                m2: 1,
                phi_lower: QPoly::parse(&v, "1 + x^4 * y").unwrap(),
                phi_upper: QPoly::parse(&v, "x^4 * y + y^2").unwrap(),
            };
            r.check(
                deformation_pattern_check(&swapped, &spec).is_ok(),
                "pattern conditions on the swapped witness polynomial",
            );
        }
        _ => unreachable!(),
    }
    r.notes
        .push("deformation pattern exists and defines a 1-tacnodal curve".to_string());
    r
}
