use pencil_core::field::Field;
use pencil_core::form::BinaryForm;
use pencil_core::invariants::{classify_stability, newstead_point, newstead_vector, pencil_invariants};
use pencil_core::pencil::{plucker_quadric, Pencil};
use pencil_core::pgl2::{act_form_by, stabilizer_with, ProjMatrix};
use pencil_core::wall::{invariant_fiber_rho, s4, s4_on_rho, wall_pencil, Rho};
use pencil_core::{classify_orbit, Exec, Fe, OrbitLabel, StabilityClass};
use proptest::prelude::*;

fn f13() -> Field {
    Field::prime(13).unwrap()
}

fn cubic() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(0i64..13)
}

/// Products of elementary matrices: determinant exactly one.
fn sl2(f: &Field, xs: &[(i64, i64)]) -> [Fe; 4] {
    let mut m = [f.one(), f.zero(), f.zero(), f.one()];
    for &(x, y) in xs {
        let e = [f.one(), f.int(x), f.int(y), &f.one() + &f.int(x * y)];
        m = [
            &(&m[0] * &e[0]) + &(&m[1] * &e[2]),
            &(&m[0] * &e[1]) + &(&m[1] * &e[3]),
            &(&m[2] * &e[0]) + &(&m[3] * &e[2]),
            &(&m[2] * &e[1]) + &(&m[3] * &e[3]),
        ];
    }
    m
}

fn gl2(f: &Field, m: [i64; 4]) -> Option<ProjMatrix> {
    ProjMatrix::from_ints(f, m).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extension_field_axioms(a in 0i64..13, b in 0i64..13, c in 0i64..13, d in 0i64..13, e in 0i64..13, g in 0i64..13) {
        let k = f13().designated_extension().unwrap();
        let el = |x: i64, y: i64| k.ext_elem(f13().int(x), f13().int(y)).unwrap();
        let (x, y, z) = (el(a, b), el(c, d), el(e, g));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if let Some(xi) = x.inv() {
            prop_assert!((&x * &xi).is_one());
        }
        let sq = &x * &x;
        let r = sq.sqrt().unwrap();
        prop_assert_eq!(&r * &r, sq);
    }

    #[test]
    fn rational_square_roots(n in -1000i64..1000, d in 1i64..1000) {
        let q = Field::Rational;
        let x = q.ratio(n, d);
        let r = (&x * &x).sqrt().unwrap();
        prop_assert_eq!(&r * &r, &x * &x);
        prop_assert!(r.is_canonical_sign());
    }

    #[test]
    fn plucker_round_trip_and_jacobian(f in cubic(), g in cubic()) {
        let field = f13();
        let Ok(p) = Pencil::from_ints(&field, f, g) else { return Ok(()) };
        prop_assert!(plucker_quadric(p.plucker()).is_zero());
        let back = Pencil::from_plucker(&field, p.plucker().clone()).unwrap();
        prop_assert_eq!(&back, &p);
        let n = newstead_vector(p.plucker());
        let three = field.int(3);
        let want: Vec<Fe> = n.iter().map(|x| &three * x).collect();
        prop_assert_eq!(p.jacobian().coeffs().to_vec(), want);
    }

    #[test]
    fn invariants_fixed_by_sl2(f in cubic(), g in cubic(), xs in prop::collection::vec((0i64..13, 0i64..13), 1..4)) {
        let field = f13();
        let Ok(p) = Pencil::from_ints(&field, f, g) else { return Ok(()) };
        let m = sl2(&field, &xs);
        let [a, b] = p.basis();
        let q = Pencil::new(&act_form_by(&m, a), &act_form_by(&m, b)).unwrap();
        prop_assert_eq!(pencil_invariants(&q), pencil_invariants(&p));
    }

    #[test]
    fn newstead_point_fixed_by_gl2(f in cubic(), g in cubic(), m in prop::array::uniform4(0i64..13)) {
        let field = f13();
        let Ok(p) = Pencil::from_ints(&field, f, g) else { return Ok(()) };
        let Some(a) = gl2(&field, m) else { return Ok(()) };
        let q = a.act(&p);
        prop_assert_eq!(classify_stability(&q), classify_stability(&p));
        prop_assert_eq!(newstead_point(&q), newstead_point(&p));
    }

    #[test]
    fn orbit_labels_are_invariant(i in 0usize..6, m in prop::array::uniform4(-20i64..20)) {
        for field in [f13(), Field::Rational] {
            let Some(a) = gl2(&field, m) else { continue };
            let l = pencil_core::atlas::NONSTABLE[i].clone();
            let p = a.act(&l.representative(&field).unwrap());
            prop_assert_eq!(classify_orbit(&p).unwrap(), l);
        }
    }

    #[test]
    fn wall_parameter_lies_in_its_fiber(r in 0i64..13) {
        let field = f13();
        let rho = Rho::int(&field, r);
        let p = wall_pencil(&field, &rho);
        if let Ok(x) = newstead_point(&p) {
            prop_assert!(invariant_fiber_rho(&x).unwrap().set().contains(&rho));
        }
    }

    #[test]
    fn stabilizer_modes_agree(f in cubic(), g in cubic()) {
        let field = f13();
        let Ok(p) = Pencil::from_ints(&field, f, g) else { return Ok(()) };
        let a = stabilizer_with(&p, Exec::Parallel).unwrap();
        let b = stabilizer_with(&p, Exec::Sequential).unwrap();
        prop_assert!(a.set_eq(&b));
        prop_assert!(a.is_closed());
        prop_assert!(a.elements().iter().all(|x| x.act(&p) == p));
    }
}

#[test]
fn s4_moves_wall_pencils_by_the_table() {
    let field = f13();
    let mut params: Vec<Rho> = (0..13).map(|r| Rho::int(&field, r)).collect();
    params.push(Rho::Infinity);
    for sigma in s4(&field).unwrap().elements() {
        for rho in &params {
            let image = s4_on_rho(sigma, rho).unwrap();
            assert_eq!(sigma.act(&wall_pencil(&field, rho)), wall_pencil(&field, &image), "{sigma:?} at {rho}");
        }
    }
}

/// Every 2-plane in F_13⁴, once, by reduced row echelon shape.
fn all_pencils(field: &Field) -> Vec<Pencil> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            // free slots: row f after i except j, row g after j
            let free: Vec<(usize, usize)> =
                (i + 1..4).filter(|&k| k != j).map(|k| (0, k)).chain((j + 1..4).map(|k| (1, k))).collect();
            for n in 0..13i64.pow(free.len() as u32) {
                let mut rows = [[0i64; 4]; 2];
                rows[0][i] = 1;
                rows[1][j] = 1;
                let mut m = n;
                for &(r, k) in &free {
                    rows[r][k] = m % 13;
                    m /= 13;
                }
                out.push(Pencil::from_ints(field, rows[0], rows[1]).unwrap());
            }
        }
    }
    out
}

#[test]
fn stable_pencils_over_f13_are_counted() {
    let field = f13();
    let all = all_pencils(&field);
    let distinct: std::collections::HashSet<&Pencil> = all.iter().collect();
    // (q²+1)(q²+q+1) points on Gr(2,4)
    assert_eq!(distinct.len(), 31_110);
    assert_eq!(all.len(), 31_110);
    let stable = all.iter().filter(|p| classify_stability(p) == StabilityClass::Stable).count();
    assert_eq!(stable, 26_208);
}

#[test]
fn binary_form_substitution_matches_action() {
    let field = f13();
    let f = BinaryForm::from_ints(&field, &[1, 2, 3, 4]);
    let a = ProjMatrix::from_ints(&field, [2, 1, 1, 1]).unwrap();
    assert_eq!(a.inv().act_form(&a.act_form(&f)).normalized(), f.normalized());
    let _ = OrbitLabel::Z1;
}
