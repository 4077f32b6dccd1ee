use aw_core::algebra::{expand, Label, Poly};
use aw_core::rewriter::Engine;
use aw_core::scalar::qrat_hseries;
use aw_core::QRat;
use num_rational::BigRational;
use proptest::prelude::*;

fn arb_laurent() -> impl Strategy<Value = QRat> {
    prop::collection::vec((-3i32..4, -4i64..5), 1..4).prop_map(|t| QRat::laurent(&t))
}

fn arb_qrat() -> impl Strategy<Value = QRat> {
    (arb_laurent(), arb_laurent()).prop_map(|(a, b)| if b.is_zero() { a.clone() } else { a.checked_div(&b).unwrap() })
}

fn letters() -> Vec<Poly> {
    [(1, 1), (1, 2), (2, 3), (3, 4), (1, 3)].iter().map(|&(a, b)| Poly::letter(Label::interval(a, b))).collect()
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    let mono = (prop::collection::vec(0usize..5, 0..3), -2i32..3, -3i64..4);
    prop::collection::vec(mono, 1..4).prop_map(|ms| {
        let l = letters();
        let mut p = Poly::zero();
        for (w, k, c) in ms {
            let m = w.iter().fold(Poly::one(), |acc, &i| acc.mul(&l[i]));
            p = p.add(&m.scale(&(&QRat::q_pow(k) * &QRat::from_int(c))));
        }
        p
    })
}

/// `[X, Y]_{q^2}` in the same normalization as the q-commutator.
fn qcomm2(x: &Poly, y: &Poly) -> Poly {
    let d = (&QRat::q_pow(2) - &QRat::q_pow(-2)).inv().unwrap();
    x.mul(y).scale(&(&QRat::q_pow(2) * &d)).sub(&y.mul(x).scale(&(&QRat::q_pow(-2) * &d)))
}

fn qmqi() -> QRat {
    &QRat::q() - &QRat::q_pow(-1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in arb_qrat(), b in arb_qrat(), c in arb_qrat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn canonical_form_is_idempotent(a in arb_qrat()) {
        let again = QRat::from_parts(a.shift(), a.numer().clone(), a.denom().clone());
        prop_assert_eq!(again, a);
    }

    #[test]
    fn hseries_of_a_polynomial_is_exact(coeffs in prop::collection::vec(-5i64..6, 1..4), hn in 1i64..4, hd in 2i64..9) {
        let terms: Vec<(i32, i64)> = coeffs.iter().enumerate().map(|(k, &c)| (k as i32, c)).collect();
        let f = QRat::laurent(&terms);
        prop_assume!(!f.is_zero());
        let h = BigRational::new(hn.into(), hd.into());
        let s = qrat_hseries(&f, coeffs.len() + 2);
        let one = BigRational::from_integer(1.into());
        prop_assert_eq!(s.eval_truncated(&h), f.eval(&(one + &h)).unwrap());
    }

    #[test]
    fn q_jacobi_identities(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let qc = Poly::qcomm;
        let cm = Poly::comm;
        let j1 = qc(&qc(&a, &b), &c).sub(&qc(&a, &qc(&b, &c)));
        let r1 = cm(&b, &cm(&c, &a)).scale(&(&qmqi() * &qmqi()).inv().unwrap());
        prop_assert!(j1.sub(&r1).is_zero());
        let j2 = qc(&a, &qc(&c, &b)).sub(&qc(&c, &qc(&a, &b)));
        let r2 = qcomm2(&cm(&a, &c), &b).scale(&(&QRat::q() + &QRat::q_pow(-1)).checked_div(&qmqi()).unwrap());
        prop_assert!(j2.sub(&r2).is_zero());
        let j3 = cm(&a, &qc(&b, &c)).add(&cm(&c, &qc(&a, &b))).add(&cm(&b, &qc(&c, &a)));
        prop_assert!(j3.is_zero());
    }

    #[test]
    fn commuting_qcommutator_identities(b in arb_poly(), k in -2i32..3) {
        // C is central, so it commutes with A in the absorbed algebra.
        let a = Poly::letter(Label::interval(1, 2)).absorb_central(4);
        let c = Poly::letter(Label::single(1)).scale(&QRat::q_pow(k)).absorb_central(4);
        let b = b.absorb_central(4);
        let qc = aw_core::AbsorbedPoly::qcomm;
        prop_assert_eq!(qc(&a, &b.mul(&c)), qc(&a, &b).mul(&c));
        prop_assert_eq!(qc(&a, &c.mul(&b)), c.mul(&qc(&a, &b)));
    }
}

/// Literal up to central letters when the hull of the label is central.
#[test]
fn up_of_expansion_is_expansion_of_reversal() {
    for n in 3..=5u8 {
        for l in aw_core::relations::labels_with_holes(n) {
            let k = l.parts().len();
            assert_eq!(expand(&l).degree(), k, "{l}");
            if !l.is_increasing() || k != 2 || Label::min(&l) != 1 || Label::max(&l) != n {
                continue;
            }
            assert_eq!(expand(&l).up().absorb_central(n), expand(&l.reversed()).absorb_central(n), "{l}");
        }
    }
}

#[test]
fn up_of_expansion_in_aw4() {
    let mut engine = Engine::new(0);
    for l in aw_core::relations::labels_with_holes(4).into_iter().filter(|l| l.is_increasing()) {
        let o = engine.compare(&expand(&l).up(), &expand(&l.reversed()), 4);
        assert!(o.is_proved(), "{l}: {o}");
    }
}
