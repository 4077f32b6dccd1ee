use super::*;
use crate::morphisms::{apply, MorphismTag};
use crate::rewriter::{Engine, Outcome};

fn s(e: &[u8]) -> Subset {
    subset(e)
}

fn proved(o: &Outcome) -> bool {
    o.is_proved()
}

#[test]
fn empty_part_vanishes() {
    assert!(omega3(0, s(&[2]), s(&[3])).unwrap().is_zero());
}

#[test]
fn unordered_parts_rejected() {
    assert!(omega3(s(&[2]), s(&[1]), s(&[3])).is_err());
    assert!(omega(s(&[1, 2]), None).is_err());
}

#[test]
fn omega123_up_invariant() {
    let w = omega3(s(&[1]), s(&[2]), s(&[3])).unwrap();
    let mut e = Engine::new(0);
    assert!(proved(&e.compare(&w.up(), &w, 3)));
}

#[test]
fn delta1_of_omega123() {
    let w = omega3(s(&[1]), s(&[2]), s(&[3])).unwrap();
    let img = apply(MorphismTag::Delta(1), &w, 3).unwrap();
    assert_eq!(img, omega3(s(&[1, 2]), s(&[3]), s(&[4])).unwrap());
}

#[test]
fn omega1234_expansion() {
    let want = omega3(s(&[1, 2]), s(&[3]), s(&[4]))
        .unwrap()
        .sub(&omega3(s(&[1]), s(&[3]), s(&[4])).unwrap())
        .sub(&omega3(s(&[2]), s(&[3]), s(&[4])).unwrap());
    let p = PartitionedSet::new([s(&[1, 2]), s(&[3]), s(&[4])]).unwrap();
    assert_eq!(omega(s(&[1, 2, 3, 4]), Some(&p)).unwrap(), want);
}

#[test]
fn centrality_at_three() {
    let mut e = Engine::new(0);
    let r = check_centrality(s(&[1, 2, 3]), 3, &mut e).unwrap();
    assert!(r.all_proved(), "{r}");
}

#[test]
fn transposition_and_coproduct() {
    let mut e = Engine::new(0);
    let v = gamma_action(MorphismTag::R(1), &gamma_unit(&[1, 3, 4]), 4, &mut e).unwrap();
    assert_eq!(v, gamma_unit(&[2, 3, 4]));
    let v = gamma_action(MorphismTag::Delta(2), &gamma_unit(&[1, 2, 3]), 3, &mut e).unwrap();
    let mut want = gamma_unit(&[1, 2, 3, 4]);
    want.add_scaled(&gamma_unit(&[1, 3, 4]), &crate::scalar::QRat::one());
    want.add_scaled(&gamma_unit(&[1, 2, 4]), &crate::scalar::QRat::one());
    assert_eq!(v, want);
    let v = gamma_action(MorphismTag::Delta(0), &gamma_unit(&[1, 2, 3]), 3, &mut e).unwrap();
    assert_eq!(v, gamma_unit(&[2, 3, 4]));
}

#[test]
fn express_unit() {
    let mut e = Engine::new(0);
    let v = express_in_gamma(&omega(s(&[1, 2, 3, 4]), None).unwrap(), 4, &mut e).unwrap();
    assert_eq!(v, gamma_unit(&[1, 2, 3, 4]));
}

#[test]
fn r0_matrix_squares_to_identity() {
    let m = r0_matrix_gamma4();
    assert_eq!(m.mul(&m), crate::uq::Matrix::identity(5));
}

#[test]
fn computed_r0_action_on_gamma4() {
    let mut e = Engine::new(0);
    let m = action_matrix(MorphismTag::R(0), 4, &mut e).unwrap();
    assert_eq!(m, r0_matrix_gamma4());
}
