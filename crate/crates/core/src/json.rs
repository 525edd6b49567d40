//! Wire formats: polytopes as vertex lists, tropical inputs as support
//! points with exact rational valuation strings, and the analysis report.

use crate::classify::{CaseTag, Classification, GateReport, Verdict};
use crate::lattice::{pt, LatticePoint, LatticePolytope};
use crate::tropical::{
    DualSubdivision, SubdivisionCensus, TropicalCurve, TropicalPolynomial,
};
use crate::{format_rat, parse_rat};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("json syntax: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("field {field}: {message}")]
    Field { field: String, message: String },
}

/// `{"vertices": [[i, j], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub vertices: Vec<[i64; 2]>,
}

impl PolytopeJson {
    pub fn from_polytope(p: &LatticePolytope) -> Self {
        PolytopeJson {
            vertices: p.vertices().iter().map(|v| [v.i, v.j]).collect(),
        }
    }

    pub fn to_polytope(&self) -> Result<LatticePolytope, JsonError> {
        let pts: Vec<LatticePoint> = self.vertices.iter().map(|v| pt(v[0], v[1])).collect();
        LatticePolytope::hull(&pts).map_err(|e| JsonError::Field {
            field: "vertices".to_string(),
            message: e.to_string(),
        })
    }
}

/// One support point with an exact rational valuation string.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupportPointJson {
    pub i: i64,
    pub j: i64,
    pub val: String,
}

/// `{"support": [{"i":0, "j":0, "val":"-3/2"}, ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TropicalInputJson {
    pub support: Vec<SupportPointJson>,
}

impl TropicalInputJson {
    pub fn from_polynomial(f: &TropicalPolynomial) -> Self {
        TropicalInputJson {
            support: f
                .support()
                .iter()
                .zip(f.valuations())
                .map(|(p, v)| SupportPointJson {
                    i: p.i,
                    j: p.j,
                    val: format_rat(v),
                })
                .collect(),
        }
    }

    pub fn to_polynomial(&self) -> Result<TropicalPolynomial, JsonError> {
        let mut support = Vec::new();
        for (k, s) in self.support.iter().enumerate() {
            let v = parse_rat(&s.val).map_err(|message| JsonError::Field {
                field: format!("support[{k}].val"),
                message,
            })?;
            support.push((pt(s.i, s.j), v));
        }
        TropicalPolynomial::new(support).map_err(|e| JsonError::Field {
            field: "support".to_string(),
            message: e.to_string(),
        })
    }
}

pub fn parse_tropical_input(text: &str) -> Result<TropicalPolynomial, JsonError> {
    let parsed: TropicalInputJson = serde_json::from_str(text)?;
    parsed.to_polynomial()
}

#[derive(Debug, Clone, Serialize)]
pub struct SubdivisionJson {
    pub newton: PolytopeJson,
    pub cells: Vec<PolytopeJson>,
    pub edges: Vec<EdgeJson>,
    pub vertices: Vec<[i64; 2]>,
    /// The concave hull function on the lattice points of the Newton
    /// polytope.
    pub lift: Vec<LiftPointJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeJson {
    pub a: [i64; 2],
    pub b: [i64; 2],
    pub lattice_length: i64,
    pub left_cell: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_cell: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftPointJson {
    pub i: i64,
    pub j: i64,
    pub val: String,
}

pub fn subdivision_json(s: &DualSubdivision) -> SubdivisionJson {
    SubdivisionJson {
        newton: PolytopeJson::from_polytope(&s.newton),
        cells: s
            .cells
            .iter()
            .map(|c| PolytopeJson::from_polytope(&c.polygon))
            .collect(),
        edges: s
            .edges
            .iter()
            .map(|e| EdgeJson {
                a: [e.a.i, e.a.j],
                b: [e.b.i, e.b.j],
                lattice_length: e.lattice_length(),
                left_cell: e.left_cell,
                right_cell: e.right_cell,
            })
            .collect(),
        vertices: s.vertices.iter().map(|v| [v.i, v.j]).collect(),
        lift: s
            .newton
            .lattice_points()
            .into_iter()
            .map(|p| LiftPointJson {
                i: p.i,
                j: p.j,
                val: format_rat(&s.lift(&p)),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveJson {
    pub vertices: Vec<[String; 2]>,
    pub bounded_edges: Vec<CurveEdgeJson>,
    pub rays: Vec<RayJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveEdgeJson {
    pub from: usize,
    pub to: usize,
    pub weight: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RayJson {
    pub vertex: usize,
    pub dir: [i64; 2],
    pub weight: i64,
}

pub fn curve_json(c: &TropicalCurve) -> CurveJson {
    CurveJson {
        vertices: c
            .vertices
            .iter()
            .map(|(x, y)| [format_rat(x), format_rat(y)])
            .collect(),
        bounded_edges: c
            .bounded_edges
            .iter()
            .map(|e| CurveEdgeJson {
                from: e.from_cell,
                to: e.to_cell,
                weight: e.weight,
            })
            .collect(),
        rays: c
            .rays
            .iter()
            .map(|r| RayJson {
                vertex: r.cell,
                dir: [r.dir.0, r.dir.1],
                weight: r.weight,
            })
            .collect(),
    }
}

/// The full analysis report emitted by the analyze command:
/// `{"verdict": ..., "feature": ..., "census": ..., "case": ...}` plus the
/// geometry it was computed from.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReportJson {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feature: Option<FeatureJson>,
    pub census: SubdivisionCensus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub lattice_point_count: i64,
    pub rank: i64,
    pub expected_rank: i64,
    pub defect: i64,
    pub regime: String,
    pub duality_passed: bool,
    pub subdivision: SubdivisionJson,
    pub curve: CurveJson,
    pub hypothesis_note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FeatureJson {
    pub kind: String,
    pub cells: Vec<usize>,
    pub shared_edges: Vec<[[i64; 2]; 2]>,
}

pub fn analysis_report(
    gate: &GateReport,
    census: &SubdivisionCensus,
    s: &DualSubdivision,
    c: &TropicalCurve,
    duality_passed: bool,
) -> AnalysisReportJson {
    let (verdict, feature, case) = match &gate.classification {
        Some(Classification {
            verdict: Verdict::TropicalOneTacnodal(f),
            case_tag,
            ..
        }) => (
            format!("TropicalOneTacnodal({})", f.kind.name()),
            Some(FeatureJson {
                kind: f.kind.name().to_string(),
                cells: f.cells.clone(),
                shared_edges: f
                    .shared_edges
                    .iter()
                    .map(|(a, b)| [[a.i, a.j], [b.i, b.j]])
                    .collect(),
            }),
            case_tag.map(case_name),
        ),
        Some(Classification {
            verdict: Verdict::NotTacnodal { reason },
            case_tag,
            ..
        }) => (
            format!("NotTacnodal({reason})"),
            None,
            case_tag.map(case_name),
        ),
        None => ("no feature (outside the tacnodal gate)".to_string(), None, None),
    };
    AnalysisReportJson {
        verdict,
        feature,
        census: census.clone(),
        case,
        lattice_point_count: gate.lattice_point_count,
        rank: gate.rank,
        expected_rank: census.expected_rank,
        defect: census.defect,
        regime: format!("{:?}", gate.regime),
        duality_passed,
        subdivision: subdivision_json(s),
        curve: curve_json(c),
        hypothesis_note: gate.hypothesis_note.clone(),
    }
}

fn case_name(c: CaseTag) -> String {
    format!("{c:?}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::{curve_from_subdivision, dual_subdivision, verify_duality};

    #[test]
    fn input_round_trip() {
        let text = r#"{"support": [
            {"i": 0, "j": 0, "val": "-3/2"},
            {"i": 1, "j": 0, "val": "0"},
            {"i": 0, "j": 1, "val": "2"}
        ]}"#;
        let f = parse_tropical_input(text).unwrap();
        let back = TropicalInputJson::from_polynomial(&f);
        let again = back.to_polynomial().unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn bad_valuation_is_a_field_error() {
        let text = r#"{"support": [
            {"i": 0, "j": 0, "val": "1/0"},
            {"i": 1, "j": 0, "val": "0"},
            {"i": 0, "j": 1, "val": "0"}
        ]}"#;
        let err = parse_tropical_input(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("support[0].val"), "{msg}");
    }

    #[test]
    fn emitted_subdivision_reparses_and_reverifies() {
        let text = r#"{"support": [
            {"i": 0, "j": 0, "val": "0"},
            {"i": 1, "j": 0, "val": "0"},
            {"i": 0, "j": 1, "val": "0"},
            {"i": 1, "j": 1, "val": "1"}
        ]}"#;
        let f = parse_tropical_input(text).unwrap();
        let s = dual_subdivision(&f).unwrap();
        let c = curve_from_subdivision(&s);
        assert!(verify_duality(&c, &s).passed);
        let j = subdivision_json(&s);
        let text2 = serde_json::to_string(&j).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text2).unwrap();
        assert_eq!(parsed["cells"].as_array().unwrap().len(), 2);
        // the lift values re-parse as exact rationals
        for lp in parsed["lift"].as_array().unwrap() {
            crate::parse_rat(lp["val"].as_str().unwrap()).unwrap();
        }
    }
}
