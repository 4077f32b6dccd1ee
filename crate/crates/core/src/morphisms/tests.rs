use super::*;
use crate::scalar::QRat;

fn lab(b: &[(u8, u8)]) -> Label {
    Label::from_blocks(b).unwrap()
}

fn c(b: &[(u8, u8)]) -> Poly {
    Poly::letter(lab(b))
}

fn img(t: &str, l: &[(u8, u8)], n: u8) -> Poly {
    apply_generator_map(t.parse().unwrap(), &lab(l), n).unwrap()
}

#[test]
fn paper_examples_r2() {
    assert_eq!(img("r2", &[(3, 4)], 4), c(&[(2, 2), (4, 4)]));
    assert_eq!(img("r2", &[(1, 2)], 4), c(&[(3, 3), (1, 1)]));
    assert_eq!(img("rb2", &[(3, 4)], 4), c(&[(4, 4), (2, 2)]));
    assert_eq!(img("rb2", &[(1, 2)], 4), c(&[(1, 1), (3, 3)]));
    assert_eq!(img("r2", &[(3, 3), (5, 5)], 5), c(&[(2, 2), (5, 5)]));
    assert_eq!(img("r2", &[(5, 5), (2, 2)], 5), c(&[(5, 5), (3, 3)]));
    assert_eq!(img("rb2", &[(2, 2), (5, 5)], 5), c(&[(3, 3), (5, 5)]));
    assert_eq!(img("rb2", &[(5, 5), (3, 3)], 5), c(&[(5, 5), (2, 2)]));
}

#[test]
fn paper_examples_r0_rank_three() {
    assert_eq!(img("r0", &[(1, 2)], 3), c(&[(3, 3), (1, 1)]));
    assert_eq!(img("rb0", &[(1, 2)], 3), c(&[(1, 1), (3, 3)]));
    assert_eq!(img("r0", &[(2, 3)], 3), c(&[(2, 3)]));
    assert_eq!(img("r0", &[(1, 1)], 3), c(&[(1, 3)]));
    assert_eq!(img("r0", &[(1, 3)], 3), c(&[(1, 1)]));
}

#[test]
fn delta_examples() {
    assert_eq!(img("d2", &[(1, 1)], 3), c(&[(1, 1)]));
    assert_eq!(img("d2", &[(1, 2)], 3), c(&[(1, 3)]));
    assert_eq!(img("d2", &[(3, 3)], 3), c(&[(4, 4)]));
    assert_eq!(img("d0", &[(1, 2)], 3), c(&[(2, 3)]));
    assert_eq!(MorphismTag::Delta(2).target_rank(3), 4);
}

#[test]
fn central_letters_are_transposed() {
    for n in 3..=5u8 {
        for i in 1..n {
            let t = MorphismTag::R(i);
            for k in 1..=n {
                let want = if k == i { i + 1 } else if k == i + 1 { i } else { k };
                assert_eq!(apply_generator_map(t, &Label::single(k), n).unwrap(), Poly::letter(Label::single(want)));
            }
            assert_eq!(apply_generator_map(t, &Label::interval(1, n), n).unwrap(), Poly::letter(Label::interval(1, n)));
        }
    }
}

#[test]
fn delta_word_on_generators() {
    for n in 3..=5u8 {
        let d = MorphismWord::delta_word(1, n - 1);
        for g in generators(n) {
            let p = g.parts()[0];
            if p.lo == p.hi {
                continue;
            }
            let (im, _) = apply_word(&d, &Poly::letter(g.clone()), n).unwrap();
            assert_eq!(im, Poly::letter(Label::interval(n - p.hi + 1, n - p.lo + 1)), "{g}");
        }
    }
}

#[test]
fn commutator_difference_formula() {
    let q = QRat::q();
    let qi = QRat::q_pow(-1);
    let f = (&q + &qi).checked_div(&(&q - &qi)).unwrap();
    for n in 3..=5u8 {
        let mut labels = generators(n);
        labels.extend(crate::relations::labels_with_holes(n));
        for l in &labels {
            for i in 1..n {
                let a = formula_image(MorphismTag::R(i), l, n).unwrap();
                let b = formula_image(MorphismTag::RBar(i), l, n).unwrap();
                let cl = Poly::letter(l.clone());
                let pair = Poly::letter(Label::interval(i, i + 1));
                let m = l.mask() & Interval::new(i, i + 1).mask();
                let want = if m == 0 || m == Interval::new(i, i + 1).mask() {
                    Poly::zero()
                } else {
                    Poly::comm(&cl, &pair).scale(&f)
                };
                assert_eq!(a.sub(&b), want, "r{i} on {l}");
            }
        }
    }
}

use crate::algebra::Interval;

#[test]
fn word_parsing_round_trip() {
    let w: MorphismWord = "r1 rb2 d3 up r0p".parse().unwrap();
    assert_eq!(w.to_string(), "r1 rb2 d3 up r0p");
    assert!("x1".parse::<MorphismWord>().is_err());
    assert_eq!(w.target_rank(3), 4);
}

#[test]
fn out_of_range_maps_are_errors() {
    assert!(apply(MorphismTag::R(3), &c(&[(1, 2)]), 3).is_err());
    assert!(apply(MorphismTag::Delta(4), &c(&[(1, 2)]), 3).is_err());
}

#[test]
fn up_reverses_hole_labels() {
    let x = c(&[(1, 1), (3, 3)]).mul(&c(&[(2, 3)]));
    assert_eq!(apply(MorphismTag::Up, &x, 3).unwrap(), c(&[(2, 3)]).mul(&c(&[(3, 3), (1, 1)])));
}
