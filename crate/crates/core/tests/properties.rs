//! Property suites beyond the acceptance criteria: equivalence-relation
//! structure, unimodular naturality, perturbation behavior, and lift
//! concavity, over seeded random corpora.

use proptest::prelude::*;
use troptac::corpus::{random_polynomial, random_unimodular, seeded_rng};
use troptac::lattice::{
    enumerate_class, normal_form, polygon_stats, pt, unimodular_equivalent, LatticePolytope,
    ParallelMode, UnimodularMap,
};
use troptac::tropical::{
    dual_subdivision, expected_rank, rank, subdivision_census, tropical_curve,
};
use troptac::{rati, Int, QPoly, Rat};

fn corpus_polygons() -> Vec<LatticePolytope> {
    // a spread of small polygons: enumerated classes plus skewed images
    let mut out = Vec::new();
    for (m, i, lens) in [
        (3usize, 0i64, vec![1i64, 1, 1]),
        (3, 1, vec![1, 1, 1]),
        (3, 1, vec![2, 1, 1]),
        (4, 1, vec![2, 1, 1, 1]),
        (4, 2, vec![1, 1, 1, 1]),
        (5, 1, vec![1, 1, 1, 1, 1]),
    ] {
        out.extend(enumerate_class(m, i, &lens, ParallelMode::Any).unwrap());
    }
    let mut rng = seeded_rng(99);
    let mut skewed = Vec::new();
    for p in &out {
        skewed.push(p.apply(&random_unimodular(&mut rng, 5)));
    }
    out.extend(skewed);
    out
}

#[test]
fn equivalence_is_an_equivalence_relation() {
    let corpus = corpus_polygons();
    for p in &corpus {
        // reflexive
        let m = unimodular_equivalent(p, p).expect("reflexive");
        assert!(p.apply(&m).same_point_set(p));
    }
    let mut rng = seeded_rng(7);
    for p in corpus.iter().take(8) {
        // symmetric via the inverse map
        let u = random_unimodular(&mut rng, 4);
        let q = p.apply(&u);
        let m = unimodular_equivalent(p, &q).expect("equivalent by construction");
        let back = m.inverse();
        assert!(q.apply(&back).same_point_set(p));
        assert!(unimodular_equivalent(&q, p).is_some());
        // transitive via composition
        let w = random_unimodular(&mut rng, 4);
        let r = q.apply(&w);
        let m2 = unimodular_equivalent(&q, &r).unwrap();
        let composed = m2.compose(&m);
        assert!(p.apply(&composed).same_point_set(&r));
        assert!(unimodular_equivalent(p, &r).is_some());
    }
}

#[test]
fn stats_and_normal_form_under_random_maps() {
    let corpus = corpus_polygons();
    let mut rng = seeded_rng(13);
    for p in corpus.iter().take(12) {
        let s = polygon_stats(p);
        let nf = normal_form(p);
        for _ in 0..4 {
            let u = random_unimodular(&mut rng, 5);
            let q = p.apply(&u);
            assert_eq!(polygon_stats(&q), s);
            assert_eq!(normal_form(&q), nf);
        }
    }
}

#[test]
fn normal_form_separates_and_identifies() {
    // normal forms agree exactly when polygons are equivalent
    let corpus = corpus_polygons();
    for a in corpus.iter().take(10) {
        for b in corpus.iter().take(10) {
            let same_nf = normal_form(a) == normal_form(b);
            let equiv = unimodular_equivalent(a, b).is_some();
            assert_eq!(same_nf, equiv);
        }
    }
}

#[test]
fn small_polygons_have_interior_points() {
    // non-parallel quadrangles with unit edges need an interior point;
    // so does every pentagon and hexagon at desk scale
    assert!(enumerate_class(4, 0, &[1, 1, 1, 1], ParallelMode::Forbid)
        .unwrap()
        .is_empty());
    for lens in [vec![1i64, 1, 1, 1, 1], vec![2, 1, 1, 1, 1]] {
        assert!(enumerate_class(5, 0, &lens, ParallelMode::Any)
            .unwrap()
            .is_empty());
    }
    assert!(enumerate_class(6, 0, &[1, 1, 1, 1, 1, 1], ParallelMode::Forbid)
        .unwrap()
        .is_empty());
}

#[test]
fn unimodular_naturality_of_subdivision_and_rank() {
    let mut rng = seeded_rng(4242);
    for _ in 0..40 {
        let f = random_polynomial(&mut rng, 10);
        let u = random_unimodular(&mut rng, 3);
        let s = dual_subdivision(&f).unwrap();
        let fu = f.apply(&u);
        let su = dual_subdivision(&fu).unwrap();
        // cells map bijectively under u
        assert_eq!(s.cells.len(), su.cells.len());
        let mapped: Vec<LatticePolytope> = s.cells.iter().map(|c| c.polygon.apply(&u)).collect();
        for mc in &mapped {
            assert!(
                su.cells.iter().any(|c| c.polygon == *mc),
                "mapped cell missing"
            );
        }
        assert_eq!(rank(&s), rank(&su));
        assert_eq!(expected_rank(&s), expected_rank(&su));
        let c1 = subdivision_census(&s, &s.newton.clone());
        let c2 = subdivision_census(&su, &su.newton.clone());
        assert_eq!(c1.n_ell, c2.n_ell);
        assert_eq!(c1.npar_2m, c2.npar_2m);
        assert_eq!(c1.script_n, c2.script_n);
        assert_eq!(c1.is_tp, c2.is_tp);
        assert_eq!(c1.boundary_defect, c2.boundary_defect);
    }
}

#[test]
fn perturbation_constant_and_affine() {
    let mut rng = seeded_rng(555);
    for _ in 0..25 {
        let f = random_polynomial(&mut rng, 9);
        let (s, c) = tropical_curve(&f).unwrap();
        // + global constant: subdivision, curve and rank unchanged
        let g = troptac::tropical::TropicalPolynomial::new(
            f.support()
                .iter()
                .zip(f.valuations())
                .map(|(p, v)| (*p, v + rati(7)))
                .collect(),
        )
        .unwrap();
        let (sg, cg) = tropical_curve(&g).unwrap();
        assert_eq!(s.vertices, sg.vertices);
        assert_eq!(c.vertices, cg.vertices);
        assert_eq!(rank(&s), rank(&sg));
        // + affine a*i + b*j: subdivision unchanged, curve translated by
        // (-a, -b) under the max-plus convention used here
        let (a, b) = (rati(3), troptac::rat(-1, 2));
        let h = troptac::tropical::TropicalPolynomial::new(
            f.support()
                .iter()
                .zip(f.valuations())
                .map(|(p, v)| {
                    (
                        *p,
                        v + &a * Rat::from(Int::from(p.i)) + &b * Rat::from(Int::from(p.j)),
                    )
                })
                .collect(),
        )
        .unwrap();
        let (sh, ch) = tropical_curve(&h).unwrap();
        assert_eq!(s.vertices, sh.vertices);
        for (v0, v1) in c.vertices.iter().zip(&ch.vertices) {
            assert_eq!(&v0.0 - &a, v1.0);
            assert_eq!(&v0.1 - &b, v1.1);
        }
    }
}

#[test]
fn lift_is_concave_under_cell_extensions() {
    // concavity: each cell plane supports the lift from above, touching
    // exactly on its own cell; gradients break across interior edges
    // (the break is asserted inside dual_subdivision)
    let mut rng = seeded_rng(777);
    for _ in 0..25 {
        let f = random_polynomial(&mut rng, 10);
        let s = dual_subdivision(&f).unwrap();
        for p in s.newton.lattice_points() {
            let nu = s.lift(&p);
            for cell in &s.cells {
                let ext = cell.plane.eval(&p);
                assert!(
                    nu <= ext,
                    "lift above a supporting plane at ({}, {})",
                    p.i,
                    p.j
                );
                if cell.polygon.contains(&p) {
                    assert_eq!(nu, ext);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Exhaustiveness cross-check: any random polygon at desk scale is
    /// equivalent to one of the enumerated classes for its parameters.
    #[test]
    fn random_polygons_land_in_enumerated_classes(
        pts in proptest::collection::vec((-5i64..=5, -5i64..=5), 3..8)
    ) {
        let points: Vec<_> = pts.iter().map(|&(i, j)| pt(i, j)).collect();
        if let Ok(p) = LatticePolytope::hull(&points) {
            let s = polygon_stats(&p);
            if s.num_edges <= 6 && s.interior_count <= 3 && s.boundary_count <= 8 {
                let classes = enumerate_class(
                    s.num_edges,
                    s.interior_count,
                    &s.edge_lengths,
                    ParallelMode::Any,
                )
                .unwrap();
                prop_assert!(
                    classes.iter().any(|c| unimodular_equivalent(&p, c).is_some()),
                    "polygon {:?} missing from its class list",
                    p.vertices()
                );
            }
        }
    }

    /// Pick's identity on arbitrary small hulls.
    #[test]
    fn pick_identity_on_random_hulls(pts in proptest::collection::vec((-6i64..=6, -6i64..=6), 3..9)) {
        let points: Vec<_> = pts.iter().map(|&(i, j)| pt(i, j)).collect();
        if let Ok(p) = LatticePolytope::hull(&points) {
            let s = polygon_stats(&p);
            prop_assert_eq!(s.area2, 2 * s.interior_count + s.boundary_count - 2);
            prop_assert_eq!(s.boundary_count, s.edge_lengths.iter().sum::<i64>());
        }
    }

    /// The normal form is idempotent and stays in the class.
    #[test]
    fn normal_form_idempotent(pts in proptest::collection::vec((-5i64..=5, -5i64..=5), 3..7)) {
        let points: Vec<_> = pts.iter().map(|&(i, j)| pt(i, j)).collect();
        if let Ok(p) = LatticePolytope::hull(&points) {
            let nf = normal_form(&p);
            prop_assert_eq!(normal_form(&nf), nf.clone());
            prop_assert!(unimodular_equivalent(&p, &nf).is_some());
        }
    }

    /// Witness maps returned by the equivalence test send P exactly onto Q.
    #[test]
    fn equivalence_witness_is_exact(
        pts in proptest::collection::vec((-4i64..=4, -4i64..=4), 3..7),
        sel in 0usize..24,
    ) {
        let points: Vec<_> = pts.iter().map(|&(i, j)| pt(i, j)).collect();
        if let Ok(p) = LatticePolytope::hull(&points) {
            let maps = [
                UnimodularMap::new(1, 1, 0, 1, 2, -1),
                UnimodularMap::new(0, -1, 1, 0, 0, 3),
                UnimodularMap::new(1, 0, 0, -1, -2, 0),
                UnimodularMap::new(2, 1, 1, 1, 1, 1),
                UnimodularMap::new(1, -2, 0, 1, 0, 0),
                UnimodularMap::new(-1, 0, 3, -1, 5, 2),
            ];
            let q = p.apply(&maps[sel % maps.len()]);
            let w = unimodular_equivalent(&p, &q).expect("images stay equivalent");
            prop_assert!(p.apply(&w).same_point_set(&q));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Mixed partial derivatives commute on arbitrary polynomials.
    #[test]
    fn mixed_partials_commute(terms in proptest::collection::vec(
        ((0u32..5, 0u32..5), -9i64..=9, 1i64..=4), 1..10))
    {
        use troptac::algebra::Vars;
        let v = Vars::new(["x", "y"]);
        let mut f = QPoly::zero(&v);
        for ((dx, dy), num, den) in terms {
            f = f.add(&QPoly::monomial(&v, vec![dx, dy], troptac::rat(num, den)));
        }
        let xy = f.deriv(0).deriv(1);
        let yx = f.deriv(1).deriv(0);
        prop_assert_eq!(xy, yx);
    }

    /// Quotient reduction is idempotent and a ring homomorphism.
    #[test]
    fn reduction_hom_and_idempotent(
        t1 in proptest::collection::vec(((0u32..5, 0u32..7), -5i64..=5), 1..6),
        t2 in proptest::collection::vec(((0u32..5, 0u32..7), -5i64..=5), 1..6),
    ) {
        use troptac::algebra::{TriangularRelations, Vars};
        let v = Vars::new(["x", "y"]);
        let build = |ts: &[((u32, u32), i64)]| {
            let mut f = QPoly::zero(&v);
            for ((dx, dy), num) in ts {
                f = f.add(&QPoly::monomial(&v, vec![*dx, *dy], rati(*num)));
            }
            f
        };
        let f = build(&t1);
        let g = build(&t2);
        let rel = TriangularRelations::new(&v, vec![("y", 4, QPoly::one(&v))]).unwrap();
        let rf = rel.reduce(&f);
        prop_assert_eq!(rel.reduce(&rf), rf.clone());
        // homomorphism, checked through canonical forms
        prop_assert_eq!(rel.reduce(&f.mul(&g)), rel.reduce(&rf.mul(&rel.reduce(&g))));
        prop_assert_eq!(rel.reduce(&f.add(&g)), rf.add(&rel.reduce(&g)));
        // evaluation oracle at the exact roots y = +-1
        for y0 in [rati(1), rati(-1)] {
            let p = vec![troptac::rat(3, 2), y0];
            prop_assert_eq!(rel.reduce(&f).eval(&p), f.eval(&p));
        }
    }
}

#[test]
fn classify_is_unimodular_invariant() {
    use troptac::classify::{classify, Verdict};
    use troptac::lattice::{reference_polytope, CatalogTag};
    use troptac::tropical::TropicalPolynomial;
    let mut rng = seeded_rng(31337);
    // feature inputs: a single-cell kind and a glued pair
    let single = TropicalPolynomial::new(
        reference_polytope(&CatalogTag::VII)
            .lattice_points()
            .into_iter()
            .map(|p| (p, rati(0)))
            .collect(),
    )
    .unwrap();
    let pair = {
        let mut support: Vec<_> = reference_polytope(&CatalogTag::IV)
            .lattice_points()
            .into_iter()
            .map(|p| (p, rati(0)))
            .collect();
        support.push((pt(1, -1), rati(-1)));
        support.push((pt(1, -2), rati(-2)));
        TropicalPolynomial::new(support).unwrap()
    };
    for f in [single, pair] {
        let s = dual_subdivision(&f).unwrap();
        let base = classify(&s, &s.newton.clone());
        let base_kind = match &base.verdict {
            Verdict::TropicalOneTacnodal(feat) => feat.kind,
            Verdict::NotTacnodal { .. } => panic!("feature expected"),
        };
        for _ in 0..5 {
            let u = random_unimodular(&mut rng, 4);
            let fu = f.apply(&u);
            let su = dual_subdivision(&fu).unwrap();
            let cu = classify(&su, &su.newton.clone());
            match &cu.verdict {
                Verdict::TropicalOneTacnodal(feat) => assert_eq!(feat.kind, base_kind),
                Verdict::NotTacnodal { reason } => panic!("lost the feature: {reason}"),
            }
            assert_eq!(cu.case_tag, base.case_tag);
        }
    }
}
