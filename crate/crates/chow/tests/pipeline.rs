use num_bigint::BigInt;
use pencil_chow::{builtin, builtin_map, pushforward_projection, solve_by_pullbacks, verify_map, ChowError, Poly, RingMap};
use proptest::prelude::*;

#[test]
fn piece_strings() {
    let f = builtin("FINAL").unwrap();
    assert_eq!(f.graded_piece(1).unwrap().to_string(), "Z/2 + Z/3");
    assert_eq!(f.graded_piece(2).unwrap().to_string(), "Z/3 + Z/4");
    let p = builtin("PGL2_PT").unwrap();
    let got: Vec<String> = (0..=6).map(|d| p.graded_piece(d).unwrap().to_string()).collect();
    assert_eq!(got, ["Z", "0", "Z", "Z/2", "Z", "Z/2", "Z + Z/2"]);
    let g3 = p.graded_piece(3).unwrap();
    assert_eq!(g3.generators.len(), 1);
    assert_eq!(g3.generators[0].1, BigInt::from(2));
    for name in pencil_chow::builtins::NAMES {
        assert_eq!(builtin(name).unwrap().graded_piece(0).unwrap().to_string(), "Z", "{name}");
    }
    assert!(matches!(builtin("NOPE"), Err(ChowError::UnknownName(_))));
}

#[test]
fn s4_family_matters() {
    let s4 = builtin("S4_PT").unwrap();
    assert_eq!(s4.family_expansion(8).unwrap().len(), 2);
    let diff = s4.parse_element("alpha*nu - alpha^2*zeta1 - alpha^4").unwrap();
    assert!(s4.in_ideal(&diff).unwrap());
    let bare = s4.quotient("no family", &[]).unwrap();
    assert!(bare.in_ideal(&diff).unwrap());
    assert!(!s4.in_ideal(&s4.parse_element("alpha*nu").unwrap()).unwrap());
}

#[test]
fn d8_cohomology_quotient() {
    let d8 = builtin("D8_COHOM").unwrap();
    let b = d8.parse_element("beta'").unwrap();
    assert!(!d8.in_ideal(&b).unwrap());
    let q = d8.quotient_text("D8/(3beta')", &["3beta'"]).unwrap();
    for x in ["beta'", "alpha'^2", "nu'^2"] {
        assert!(q.in_ideal(&q.parse_element(x).unwrap()).unwrap(), "{x}");
    }
    let printed: Vec<u32> = (0..d8.nvars()).map(|i| d8.printed_degree(i)).collect();
    assert_eq!(printed, [1, 1, 3, 2]);
}

#[test]
fn maps_verify() {
    for name in pencil_chow::builtins::MAP_NAMES {
        let m = builtin_map(name).unwrap();
        assert!(verify_map(&m, 8).unwrap(), "{name}: {:?}", m.check(8).unwrap().failures);
    }
    let m = builtin_map("res").unwrap();
    assert_eq!(m.check(8).unwrap().checked, 6);
    let bad = RingMap::new("bad", &builtin("PGL2_PT").unwrap(), &builtin("FINAL").unwrap(), &[("c2", "alpha")], 1);
    assert!(matches!(bad, Err(ChowError::DegreeMismatch { .. })));
    // c3 ↦ ζ³ would need 2ζ³ = 0, but ζ³ has order 3.
    let wrong =
        RingMap::new("wrong", &builtin("PGL2_PT").unwrap(), &builtin("FINAL").unwrap(), &[("c3", "zeta^3")], 1)
            .unwrap();
    assert!(!verify_map(&wrong, 8).unwrap());
}

#[test]
fn fixed_point_classes() {
    let sub = builtin("D8_P1_SUB").unwrap();
    let pt = builtin("D8_PT").unwrap();
    let p1 = builtin("P1").unwrap();
    let (f1, f2, fg) = (builtin_map("f1*").unwrap(), builtin_map("f2*").unwrap(), builtin_map("forget").unwrap());
    let basis = [sub.parse_element("xi").unwrap(), sub.parse_element("beta'").unwrap()];
    let e = |p: &pencil_chow::Presentation, s: &str| p.parse_element(s).unwrap();
    let q1 = solve_by_pullbacks(
        &sub,
        &basis,
        &[(&f1, e(&pt, "-beta'")), (&f2, e(&pt, "0")), (&fg, e(&p1, "xi"))],
    )
    .unwrap();
    assert_eq!(sub.format(&q1), "xi");
    let q2 = solve_by_pullbacks(
        &sub,
        &basis,
        &[(&f2, e(&pt, "beta'")), (&f1, e(&pt, "0")), (&fg, e(&p1, "xi"))],
    )
    .unwrap();
    assert_eq!(sub.format(&q2), "xi + beta'");
    // the two fixed-point restrictions alone fix the ξ coefficient only mod 2
    let loose = solve_by_pullbacks(&sub, &basis, &[(&f1, e(&pt, "-beta'")), (&f2, e(&pt, "0"))]);
    assert_eq!(loose, Err(ChowError::NonUnique));
    let clash = solve_by_pullbacks(&sub, &basis, &[(&f2, e(&pt, "beta'")), (&f2, e(&pt, "0"))]);
    assert_eq!(clash, Err(ChowError::NoSolution));
}

#[test]
fn projection_formula() {
    let s = builtin("S4_P1").unwrap();
    let three = s.int(3);
    let e = |x: &str| s.parse_element(x).unwrap();
    assert_eq!(pushforward_projection(&e("zeta"), &three), e("3zeta"));
    assert_eq!(pushforward_projection(&e("1"), &three), three);
    assert_eq!(pushforward_projection(&e("c1V"), &three), e("3c1V"));
}

#[test]
fn excision_pipeline_reaches_final() {
    let p1 = builtin("S4_P1").unwrap();
    let minus_f = builtin("S4_P1_MINUS_F").unwrap();
    let step = p1.quotient_text("step", &["3zeta", "3c1V"]).unwrap();
    let last = step.quotient_text("last", &["c1V", "c2V - eta", "alpha^2", "nu"]).unwrap();
    let fin = builtin("FINAL").unwrap();
    for d in 0..=8 {
        assert_eq!(step.graded_piece(d).unwrap().to_string(), minus_f.graded_piece(d).unwrap().to_string());
        let (a, b) = (last.graded_piece(d).unwrap(), fin.graded_piece(d).unwrap());
        assert_eq!((a.free_rank, &a.invariant_factors), (b.free_rank, &b.invariant_factors), "degree {d}");
    }
    assert_eq!(step.quotient_text("same", &["0"]).unwrap().relations(), step.relations());
}

fn shuffled(p: &pencil_chow::Presentation, order: &[usize], dup: usize) -> pencil_chow::Presentation {
    let rels = p.relations();
    let mut extra: Vec<Poly> = order.iter().map(|&i| rels[i % rels.len()].clone()).collect();
    extra.push(rels[dup % rels.len()].scale(&BigInt::from(5)));
    let bare = p.adjoin("bare", &[], &[]).unwrap();
    // adjoin keeps relations; rebuild from generators only
    let mut text = String::new();
    for g in bare.gens() {
        text.push_str(&format!("gen {} {};", g.name, g.degree));
    }
    for f in bare.families() {
        text.push_str(&format!("family {} j>={};", f.template, f.start));
    }
    let fresh = pencil_chow::Presentation::parse(&text).unwrap();
    fresh.quotient("shuffled", &extra).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pieces_ignore_relation_order_and_redundancy(perm in Just((0..7usize).collect::<Vec<_>>()).prop_shuffle(), dup in 0usize..7, d in 0u32..7) {
        for name in ["FINAL", "S4_P1_MINUS_F"] {
            let p = builtin(name).unwrap();
            let n = p.relations().len();
            let order: Vec<usize> = perm.iter().copied().filter(|&i| i < n).chain(0..n).collect();
            let q = shuffled(&p, &order, dup);
            let (a, b) = (p.graded_piece(d).unwrap(), q.graded_piece(d).unwrap());
            prop_assert_eq!(a.free_rank, b.free_rank);
            prop_assert_eq!(a.invariant_factors, b.invariant_factors);
        }
    }

    #[test]
    fn pushforward_is_linear(a in -5i64..5, b in -5i64..5, i in 0usize..3, j in 0usize..3) {
        let s = builtin("S4_P1").unwrap();
        let xs = ["zeta", "c1V", "alpha"];
        let (x, y) = (s.parse_element(xs[i]).unwrap(), s.parse_element(xs[j]).unwrap());
        let phi1 = s.int(3);
        let lhs = pushforward_projection(&x.scale(&BigInt::from(a)).add(&y.scale(&BigInt::from(b))), &phi1);
        let rhs = pushforward_projection(&x, &phi1).scale(&BigInt::from(a)).add(&pushforward_projection(&y, &phi1).scale(&BigInt::from(b)));
        prop_assert_eq!(&lhs, &rhs);
        let r = s.parse_element("zeta1").unwrap();
        prop_assert_eq!(pushforward_projection(&r.mul(&x), &phi1), r.mul(&pushforward_projection(&x, &phi1)));
    }
}
