//! Classification of dual subdivisions: detection of the ten distinguished
//! feature polytopes (single cells and glued pairs) with a unit-triangle
//! remainder, the rank-window gate, and the case bookkeeping that drives
//! the census consistency checks.

use crate::lattice::{
    catalog_match, is_edge2_cap_triangle, reference_polytope, unimodular_equivalent, CatalogTag,
    LatticePoint, LatticePolytope,
};
use crate::tropical::{
    dual_subdivision, rank, subdivision_census, DualSubdivision, SubdivisionCensus,
    TropicalError, TropicalPolynomial,
};
use serde::Serialize;

/// The ten feature kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FeatureKind {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    E,
}

impl FeatureKind {
    pub const ALL: [FeatureKind; 10] = [
        FeatureKind::I,
        FeatureKind::II,
        FeatureKind::III,
        FeatureKind::IV,
        FeatureKind::V,
        FeatureKind::VI,
        FeatureKind::VII,
        FeatureKind::VIII,
        FeatureKind::IX,
        FeatureKind::E,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FeatureKind::I => "I",
            FeatureKind::II => "II",
            FeatureKind::III => "III",
            FeatureKind::IV => "IV",
            FeatureKind::V => "V",
            FeatureKind::VI => "VI",
            FeatureKind::VII => "VII",
            FeatureKind::VIII => "VIII",
            FeatureKind::IX => "IX",
            FeatureKind::E => "E",
        }
    }

    fn is_pair(&self) -> bool {
        matches!(
            self,
            FeatureKind::III | FeatureKind::IV | FeatureKind::V | FeatureKind::E
        )
    }

    /// Lattice length of the shared edge for the glued kinds.
    fn shared_edge_length(&self) -> i64 {
        match self {
            FeatureKind::V => 4,
            _ => 2,
        }
    }
}

/// A detected feature: the realizing cells and the glue edges.
#[derive(Debug, Clone, Serialize)]
pub struct TacnodalFeature {
    pub kind: FeatureKind,
    pub cells: Vec<usize>,
    pub shared_edges: Vec<(LatticePoint, LatticePoint)>,
}

/// Verdict of the classification.
#[derive(Debug, Clone, Serialize)]
pub enum Verdict {
    TropicalOneTacnodal(TacnodalFeature),
    NotTacnodal { reason: String },
}

/// Case tag from the TP property and the boundary vertex defect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    A,
    B,
    C,
    D,
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    /// Features beyond the first, if any coexist.
    pub alternates: Vec<TacnodalFeature>,
    pub census: SubdivisionCensus,
    pub case_tag: Option<CaseTag>,
}

/// All features present in `s` in the fixed kind order; a feature counts
/// only when every cell outside it is a triangle of doubled area 1.
fn all_features(s: &DualSubdivision) -> Vec<TacnodalFeature> {
    let mut found: Vec<TacnodalFeature> = Vec::new();
    let remainder_ok = |used: &[usize]| {
        s.cells
            .iter()
            .enumerate()
            .filter(|(i, _)| !used.contains(i))
            .all(|(_, c)| c.polygon.area2() == 1)
    };
    for kind in FeatureKind::ALL {
        if !kind.is_pair() {
            let tag = match kind {
                FeatureKind::I => CatalogTag::I,
                FeatureKind::II => CatalogTag::II,
                FeatureKind::VI => CatalogTag::VI,
                FeatureKind::VII => CatalogTag::VII,
                FeatureKind::VIII => CatalogTag::VIII,
                FeatureKind::IX => CatalogTag::IX,
                _ => unreachable!(),
            };
            for (ci, cell) in s.cells.iter().enumerate() {
                if catalog_match(&cell.polygon) == Some(tag.clone()) && remainder_ok(&[ci]) {
                    found.push(TacnodalFeature {
                        kind,
                        cells: vec![ci],
                        shared_edges: vec![],
                    });
                }
            }
        } else {
            let glue_len = kind.shared_edge_length();
            for e in &s.edges {
                let Some(rc) = e.right_cell else { continue };
                if e.lattice_length() != glue_len {
                    continue;
                }
                let lc = e.left_cell;
                let pair_matches = |main: usize, other: usize| -> bool {
                    let pm = &s.cells[main].polygon;
                    let po = &s.cells[other].polygon;
                    match kind {
                        FeatureKind::III => {
                            unimodular_equivalent(pm, &reference_polytope(&CatalogTag::III))
                                .is_some()
                                && is_edge2_cap_triangle(po)
                        }
                        FeatureKind::IV => {
                            unimodular_equivalent(pm, &reference_polytope(&CatalogTag::IV))
                                .is_some()
                                && unimodular_equivalent(po, &reference_polytope(&CatalogTag::IV))
                                    .is_some()
                        }
                        FeatureKind::V => {
                            unimodular_equivalent(pm, &reference_polytope(&CatalogTag::V))
                                .is_some()
                                && unimodular_equivalent(po, &reference_polytope(&CatalogTag::V))
                                    .is_some()
                        }
                        FeatureKind::E => {
                            unimodular_equivalent(pm, &reference_polytope(&CatalogTag::E))
                                .is_some()
                                && is_edge2_cap_triangle(po)
                        }
                        _ => unreachable!(),
                    }
                };
                let hit = if pair_matches(lc, rc) {
                    Some((lc, rc))
                } else if pair_matches(rc, lc) {
                    Some((rc, lc))
                } else {
                    None
                };
                if let Some((m, o)) = hit {
                    if remainder_ok(&[m, o]) {
                        let dup = found.iter().any(|f| {
                            f.kind == kind && {
                                let mut a = f.cells.clone();
                                let mut b = vec![m, o];
                                a.sort_unstable();
                                b.sort_unstable();
                                a == b
                            }
                        });
                        if !dup {
                            found.push(TacnodalFeature {
                                kind,
                                cells: vec![m, o],
                                shared_edges: vec![(e.a, e.b)],
                            });
                        }
                    }
                }
            }
        }
    }
    found
}

/// First feature (fixed order I..IX, E) whose remainder consists of unit
/// triangles, if any.
pub fn detect_tacnodal_feature(s: &DualSubdivision) -> Option<TacnodalFeature> {
    all_features(s).into_iter().next()
}

/// Full classification with census and case tag.
pub fn classify(s: &DualSubdivision, newton: &LatticePolytope) -> Classification {
    let census = subdivision_census(s, newton);
    let case_tag = match (census.is_tp, census.boundary_defect) {
        (true, 0) => Some(CaseTag::A),
        (true, 1) => Some(CaseTag::B),
        (false, 0) => Some(CaseTag::C),
        (false, 1) => Some(CaseTag::D),
        _ => None,
    };
    let mut features = all_features(s);
    let verdict = if features.is_empty() {
        Verdict::NotTacnodal {
            reason: "no feature with a unit-triangle remainder".to_string(),
        }
    } else {
        Verdict::TropicalOneTacnodal(features.remove(0))
    };
    Classification {
        verdict,
        alternates: features,
        census,
        case_tag,
    }
}

/// Report of the rank-window gate.
#[derive(Debug, Clone, Serialize)]
pub struct GateReport {
    pub lattice_point_count: i64,
    pub rank: i64,
    /// rank relative to the window [#points-4, #points-1].
    pub regime: GateRegime,
    pub classification: Option<Classification>,
    pub hypothesis_note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GateRegime {
    /// rank >= #points - 3: smooth, nodal or 1-cuspidal territory.
    SmoothNodalOrCuspidal,
    /// rank = #points - 4: the 1-tacnodal gate; classification runs.
    TacnodalGate,
    /// rank < #points - 4: outside the hypothesis of the statement.
    OutsideHypothesis,
}

/// Compute the subdivision, rank and lattice count; when the rank sits at
/// the gate value, classify. The irreducible-1-tacnodal hypothesis on the
/// input cannot be checked from valuations and is reported as assumed.
pub fn theorem_gate(f: &TropicalPolynomial) -> Result<GateReport, TropicalError> {
    let s = dual_subdivision(f)?;
    let newton = s.newton.clone();
    let n_pts = newton.lattice_points().len() as i64;
    let rk = rank(&s);
    let regime = if rk >= n_pts - 3 {
        GateRegime::SmoothNodalOrCuspidal
    } else if rk == n_pts - 4 {
        GateRegime::TacnodalGate
    } else {
        GateRegime::OutsideHypothesis
    };
    let classification = if regime == GateRegime::TacnodalGate {
        Some(classify(&s, &newton))
    } else {
        None
    };
    Ok(GateReport {
        lattice_point_count: n_pts,
        rank: rk,
        regime,
        classification,
        hypothesis_note:
            "the hypothesis that the input defines an irreducible 1-tacnodal curve over the \
             Puiseux field is an input-side assumption this tool cannot check"
                .to_string(),
    })
}

/// One named check of the census consistency report.
#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyReport {
    pub case_tag: Option<CaseTag>,
    pub checks: Vec<ConsistencyCheck>,
    pub all_hold: bool,
}

/// Re-derive the case-specific counting identities used when eliminating
/// subdivisions at the gate rank (#points - 4) and check the instance
/// against them.
pub fn census_consistency(s: &DualSubdivision, newton: &LatticePolytope) -> ConsistencyReport {
    let census = subdivision_census(s, newton);
    let case_tag = match (census.is_tp, census.boundary_defect) {
        (true, 0) => Some(CaseTag::A),
        (true, 1) => Some(CaseTag::B),
        (false, 0) => Some(CaseTag::C),
        (false, 1) => Some(CaseTag::D),
        _ => None,
    };
    let n_pts = newton.lattice_points().len() as i64;
    let n_verts = s.vertices.len() as i64;
    let npar4 = *census.npar_2m.get(&4).unwrap_or(&0) as i64;
    let sum_npar: i64 = census.npar_2m.values().map(|&k| k as i64).sum();
    let sum_excess: i64 = census
        .n_ell
        .iter()
        .map(|(&m, &k)| (m as i64 - 3) * k as i64)
        .sum();
    let mut checks = Vec::new();
    let push = |checks: &mut Vec<ConsistencyCheck>, name: &str, holds: bool| {
        checks.push(ConsistencyCheck {
            name: name.to_string(),
            holds,
        })
    };
    push(
        &mut checks,
        "gate rank: rk = #points - 4",
        census.rank == n_pts - 4,
    );
    match case_tag {
        Some(CaseTag::A) | Some(CaseTag::B) => {
            push(&mut checks, "TP defect: d = 0", census.defect == 0);
            let bound = if case_tag == Some(CaseTag::A) { 3 } else { 2 };
            push(
                &mut checks,
                &format!("parallelogram count: 0 <= N'_4 <= {bound}"),
                (0..=bound).contains(&npar4),
            );
            push(
                &mut checks,
                "vertex identity: #V(S) = #points - 3 + N'_4",
                n_verts == n_pts - 3 + npar4,
            );
            if case_tag == Some(CaseTag::B) {
                let boundary_len2_cells = s
                    .cells
                    .iter()
                    .filter(|c| {
                        c.polygon.edges().iter().any(|(a, b)| {
                            segment_on_boundary(newton, a, b) && {
                                let d = b.sub(a);
                                crate::lattice::gcd64(d.0, d.1) == 2
                            }
                        })
                    })
                    .count();
                push(
                    &mut checks,
                    "exactly one cell meets the boundary in a length-2 segment",
                    boundary_len2_cells == 1,
                );
            }
        }
        Some(CaseTag::C) | Some(CaseTag::D) => {
            push(
                &mut checks,
                "excess bound: sum (m-3) N_m <= 5 - sum N'_2m",
                sum_excess <= 5 - sum_npar,
            );
            push(&mut checks, "parallel bound: sum N'_2m <= 2", sum_npar <= 2);
            push(
                &mut checks,
                "defect bound: 2d <= script_N",
                2 * census.defect <= census.script_n,
            );
        }
        None => push(&mut checks, "boundary defect in {0, 1}", false),
    }
    let all_hold = checks.iter().all(|c| c.holds);
    ConsistencyReport {
        case_tag,
        checks,
        all_hold,
    }
}

fn segment_on_boundary(newton: &LatticePolytope, a: &LatticePoint, b: &LatticePoint) -> bool {
    // both endpoints on the same boundary edge line
    newton
        .edges()
        .iter()
        .any(|(u, v)| crate::lattice::on_segment(u, v, a) && crate::lattice::on_segment(u, v, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;
    use crate::rati;
    use crate::Rat;

    fn flat(support: &[(i64, i64)]) -> TropicalPolynomial {
        TropicalPolynomial::new(
            support
                .iter()
                .map(|&(i, j)| (pt(i, j), Rat::from(crate::Int::from(0))))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_cell_feature_i() {
        let pts: Vec<(i64, i64)> = vec![(0, 7), (1, 0), (2, 0), (1, 1), (1, 2), (1, 3)];
        let f = flat(&pts);
        let s = dual_subdivision(&f).unwrap();
        let feat = detect_tacnodal_feature(&s).expect("feature");
        assert_eq!(feat.kind, FeatureKind::I);
        let gate = theorem_gate(&f).unwrap();
        assert_eq!(gate.lattice_point_count, 6);
        assert_eq!(gate.rank, 2);
        assert_eq!(gate.regime, GateRegime::TacnodalGate);
    }

    #[test]
    fn plain_square_has_no_feature() {
        let f = TropicalPolynomial::new(vec![
            (pt(0, 0), rati(0)),
            (pt(1, 0), rati(0)),
            (pt(0, 1), rati(0)),
            (pt(1, 1), rati(1)),
        ])
        .unwrap();
        let s = dual_subdivision(&f).unwrap();
        assert!(detect_tacnodal_feature(&s).is_none());
        let c = classify(&s, &s.newton.clone());
        assert!(matches!(c.verdict, Verdict::NotTacnodal { .. }));
        assert_eq!(c.case_tag, Some(CaseTag::A));
    }

    #[test]
    fn tropical_line_regime() {
        let f = flat(&[(0, 0), (1, 0), (0, 1)]);
        let gate = theorem_gate(&f).unwrap();
        assert_eq!(gate.rank, 2);
        assert_eq!(gate.lattice_point_count, 3);
        assert_eq!(gate.regime, GateRegime::SmoothNodalOrCuspidal);
        assert!(gate.classification.is_none());
    }

    #[test]
    fn glued_pair_feature_iv() {
        // two copies of the IV-triangle glued along the length-2 edge
        let support: Vec<(i64, i64, Rat)> = vec![
            (0, 0, rati(0)),
            (1, 0, rati(0)),
            (2, 0, rati(0)),
            (1, 1, rati(0)),
            (1, 2, rati(0)),
            (1, -1, rati(-1)),
            (1, -2, rati(-2)),
        ];
        let f = TropicalPolynomial::new(
            support
                .into_iter()
                .map(|(i, j, v)| (pt(i, j), v))
                .collect(),
        )
        .unwrap();
        let s = dual_subdivision(&f).unwrap();
        assert_eq!(s.cells.len(), 2);
        let feat = detect_tacnodal_feature(&s).expect("feature IV");
        assert_eq!(feat.kind, FeatureKind::IV);
        assert_eq!(feat.cells.len(), 2);
        let gate = theorem_gate(&f).unwrap();
        assert_eq!(gate.regime, GateRegime::TacnodalGate);
        let cls = gate.classification.unwrap();
        assert!(matches!(cls.verdict, Verdict::TropicalOneTacnodal(_)));
        assert_eq!(cls.case_tag, Some(CaseTag::A));
    }

    #[test]
    fn outside_hypothesis_regime() {
        // a single-cell subdivision of a large triangle: rank 2 far below
        // the gate value
        let f = flat(&[(0, 0), (5, 0), (0, 5)]);
        let gate = theorem_gate(&f).unwrap();
        assert_eq!(gate.lattice_point_count, 21);
        assert_eq!(gate.rank, 2);
        assert_eq!(gate.regime, GateRegime::OutsideHypothesis);
        assert!(gate.classification.is_none());
    }

    #[test]
    fn case_b_boundary_defect() {
        // triangle with a length-2 boundary edge as its own subdivision:
        // the midpoint is a boundary lattice point missing from V(S)
        let f = flat(&[(0, 0), (2, 0), (0, 1)]);
        let s = dual_subdivision(&f).unwrap();
        let newton = s.newton.clone();
        let cls = classify(&s, &newton);
        assert_eq!(cls.case_tag, Some(CaseTag::B));
        assert_eq!(cls.census.boundary_defect, 1);
        let rep = census_consistency(&s, &newton);
        let boundary_check = rep
            .checks
            .iter()
            .find(|c| c.name.contains("length-2 segment"))
            .expect("case B check present");
        assert!(boundary_check.holds);
    }

    #[test]
    fn vi_alone_is_case_a() {
        let poly = reference_polytope(&CatalogTag::VI);
        let f = TropicalPolynomial::new(
            poly.lattice_points()
                .into_iter()
                .map(|p| (p, rati(0)))
                .collect(),
        )
        .unwrap();
        let s = dual_subdivision(&f).unwrap();
        let cls = classify(&s, &s.newton.clone());
        match cls.verdict {
            Verdict::TropicalOneTacnodal(fe) => assert_eq!(fe.kind, FeatureKind::VI),
            other => panic!("expected VI, got {other:?}"),
        }
        assert_eq!(cls.case_tag, Some(CaseTag::A));
        let report = census_consistency(&s, &s.newton.clone());
        assert!(report.all_hold, "{:?}", report.checks);
    }
}
