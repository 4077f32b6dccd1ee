use proptest::prelude::*;

use super::*;
use crate::algebra::expand;
use crate::relations::decreasing_elimination;

fn c(blocks: &[(u8, u8)]) -> Poly {
    Poly::letter(Label::from_blocks(blocks).unwrap())
}

#[test]
fn precedence() {
    let e = parse("1 + 2*C[1]^2 - C[2]").unwrap();
    let want = Expr::Sub(
        Box::new(Expr::Add(
            Box::new(Expr::Int(1.into())),
            Box::new(Expr::Mul(Box::new(Expr::Int(2.into())), Box::new(Expr::Pow(Box::new(Expr::Gen(Letter::C, vec![(1, 1)])), 2)))),
        )),
        Box::new(Expr::Gen(Letter::C, vec![(2, 2)])),
    );
    assert_eq!(e, want);
}

#[test]
fn qcomm_lowering() {
    let got = parse_poly("qcomm(C[1..2], C[2..3])", 3).unwrap();
    let (a, b) = (c(&[(1, 2)]), c(&[(2, 3)]));
    let d = (&QRat::q() - &QRat::q_pow(-1)).inv().unwrap();
    let want = a.mul(&b).scale(&(&QRat::q() * &d)).sub(&b.mul(&a).scale(&(&QRat::q_pow(-1) * &d)));
    assert_eq!(got, want);
    assert_eq!(parse_poly("qcommbar(C[1..2], C[2..3])", 3).unwrap(), Poly::qcomm(&b, &a));
}

#[test]
fn hole_label_lowering() {
    let e = parse("C[1;3]").unwrap();
    assert_eq!(lower(&e, 3).unwrap(), c(&[(1, 1), (3, 3)]));
    let l = Label::from_blocks(&[(1, 1), (3, 3)]).unwrap();
    assert_eq!(lower_expanded(&e, 3).unwrap(), expand(&l));
}

#[test]
fn decreasing_labels_are_kept() {
    let p = parse_poly("C[3;1]", 3).unwrap();
    let l = Label::from_blocks(&[(3, 3), (1, 1)]).unwrap();
    assert!(!l.is_increasing());
    assert_eq!(p, Poly::letter(l.clone()));
    assert_eq!(format_poly(&p), "C[3;1]");
    assert!(!decreasing_elimination(&l).is_zero());
}

#[test]
fn scalar_normalization() {
    let p = parse_poly("(q^2-1)/(q-1) * C[1]", 3).unwrap();
    assert_eq!(p, c(&[(1, 1)]).scale(&(&QRat::q() + &QRat::one())));
    assert_eq!(parse_poly("q^-2*q^2", 3).unwrap(), Poly::one());
}

#[test]
fn errors() {
    assert!(matches!(parse("C[1] C[2]"), Err(SyntaxError::Parse { pos: 5, .. })));
    assert!(matches!(parse("C[2..1]"), Err(SyntaxError::Parse { .. })));
    assert!(matches!(parse("C[1"), Err(SyntaxError::Parse { pos: 3, .. })));
    assert!(matches!(parse_poly("C[4]", 3), Err(SyntaxError::Label { .. })));
    assert!(matches!(parse_poly("C[1]/C[2]", 3), Err(SyntaxError::Lower(_))));
    assert!(matches!(parse_poly("C[1]^-1", 3), Err(SyntaxError::Lower(_))));
    assert!(matches!(parse_poly("1/(q-q)", 3), Err(SyntaxError::Lower(_))));
    assert!(matches!(parse_poly("C[1..2;2..3]", 3), Err(SyntaxError::Label { .. })));
}

#[test]
fn error_positions_are_columns() {
    let e = parse("C[1] + ").unwrap_err();
    assert_eq!(e.to_string(), "at column 8: unexpected end of input");
}

#[test]
fn k_letters() {
    let k = lower_k(&parse("1/2*K[1..2]*K[2..3] - 3").unwrap()).unwrap();
    assert_eq!(lower_k(&parse(&format_kpoly(&k)).unwrap()).unwrap(), k);
    assert!(lower(&parse("K[1]").unwrap(), 3).is_err());
    assert!(lower_k(&parse("q*K[1]").unwrap()).is_err());
}

#[test]
fn poly_printing_examples() {
    let p = parse_poly("C[1..2]*C[2..3] - q^-1*C[2;4] + (q^2+1)/q", 4).unwrap();
    let s = format_poly(&p);
    assert_eq!(parse_poly(&s, 4).unwrap(), p, "{s}");
    assert_eq!(format_poly(&Poly::zero()), "0");
}

fn arb_gen() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (1u8..=5).prop_map(|i| Expr::Gen(Letter::C, vec![(i, i)])),
        (1u8..=4, 1u8..=2).prop_map(|(a, l)| Expr::Gen(Letter::C, vec![(a, a + l - 1)])),
        Just(Expr::Gen(Letter::C, vec![(1, 1), (3, 4)])),
        Just(Expr::Gen(Letter::C, vec![(4, 4), (2, 2)])),
    ]
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![(0u32..20).prop_map(|k| Expr::Int(k.into())), Just(Expr::Q), arb_gen()];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let bx = |e: Expr| Box::new(e);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(move |(a, b)| Expr::Add(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(move |(a, b)| Expr::Sub(bx(a), bx(b))),
            inner.clone().prop_map(move |a| Expr::Neg(bx(a))),
            (inner.clone(), inner.clone()).prop_map(move |(a, b)| Expr::Mul(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(move |(a, b)| Expr::Div(bx(a), bx(b))),
            (inner.clone(), -3i32..4).prop_map(move |(a, k)| Expr::Pow(bx(a), k)),
            (inner.clone(), inner.clone()).prop_map(move |(a, b)| Expr::QComm(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(move |(a, b)| Expr::QCommBar(bx(a), bx(b))),
            (inner.clone(), inner).prop_map(move |(a, b)| Expr::Comm(bx(a), bx(b))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn expr_round_trip(e in arb_expr()) {
        let s = format_expr(&e);
        prop_assert_eq!(parse(&s).unwrap(), e, "{}", s);
    }

    #[test]
    fn poly_round_trip(e in arb_expr()) {
        if let Ok(p) = lower(&e, 5) {
            if p.len() <= 200 {
                let s = format_poly(&p);
                prop_assert_eq!(parse_poly(&s, 5).unwrap(), p, "{}", s);
            }
        }
    }
}
