//! The Racah-algebra identities expected as limits, written as `lhs - rhs`
//! over the unions of consecutive parts.

use super::KPoly;
use crate::algebra::Label;

/// `K` of the union of the given parts; the empty union gives zero.
fn k(parts: &[&Label]) -> KPoly {
    let m = parts.iter().fold(0, |m, l| m | l.mask());
    match Label::from_mask(m) {
        Some(l) => KPoly::letter(l),
        None => KPoly::zero(),
    }
}

fn half() -> KPoly {
    KPoly::constant(num_rational::BigRational::new(1.into(), 2.into()))
}

/// `½[A,[A,B]] - A² - {A,B} + (K1+K2+K3+K123)A + (K1-K2)(K3-K123)` with
/// `A = K_{I1I2}`, `B = K_{I2I3}`.
pub fn rac1(i: [&Label; 3]) -> KPoly {
    let [i1, i2, i3] = i;
    let a = k(&[i1, i2]);
    let b = k(&[i2, i3]);
    let s = k(&[i1]).add(&k(&[i2])).add(&k(&[i3])).add(&k(&[i1, i2, i3]));
    half()
        .mul(&KPoly::comm(&a, &KPoly::comm(&a, &b)))
        .sub(&a.mul(&a))
        .sub(&KPoly::anticomm(&a, &b))
        .add(&s.mul(&a))
        .add(&k(&[i1]).sub(&k(&[i2])).mul(&k(&[i3]).sub(&k(&[i1, i2, i3]))))
}

/// The companion of [`rac1`] with the roles of `K_{I1I2}` and `K_{I2I3}`
/// exchanged.
pub fn rac2(i: [&Label; 3]) -> KPoly {
    let [i1, i2, i3] = i;
    let a = k(&[i1, i2]);
    let b = k(&[i2, i3]);
    let s = k(&[i1]).add(&k(&[i2])).add(&k(&[i3])).add(&k(&[i1, i2, i3]));
    half()
        .mul(&KPoly::comm(&b, &KPoly::comm(&b, &a)))
        .sub(&b.mul(&b))
        .sub(&KPoly::anticomm(&a, &b))
        .add(&s.mul(&b))
        .add(&k(&[i1]).sub(&k(&[i1, i2, i3])).mul(&k(&[i3]).sub(&k(&[i2]))))
}

/// The common leading identity of the four-subset relations.
pub fn cub0(i: [&Label; 4]) -> KPoly {
    let [i1, i2, i3, i4] = i;
    let c = |a: &[&Label], b: &[&Label]| KPoly::comm(&k(a), &k(b));
    c(&[i1, i2], &[i2, i3])
        .add(&c(&[i2, i3], &[i3, i4]))
        .sub(&c(&[i1, i2, i3], &[i3, i4]))
        .sub(&c(&[i1, i2], &[i2, i3, i4]))
        .add(&c(&[i1, i2, i3], &[i2, i3, i4]))
}

/// `½[K_{I3I4},[K_{I1I2},K_{I2I3}]]` minus its expression in lower terms, the
/// limit of the sum of two four-subset relations.
pub fn sum_identity(i: [&Label; 4]) -> KPoly {
    let [i1, i2, i3, i4] = i;
    let kk = |a: &[&Label]| k(a);
    let lhs = half().mul(&KPoly::comm(&kk(&[i3, i4]), &KPoly::comm(&kk(&[i1, i2]), &kk(&[i2, i3]))));
    let rhs = kk(&[i1, i2])
        .mul(&kk(&[i2, i3]).add(&kk(&[i3, i4])).sub(&kk(&[i2, i3, i4])).sub(&kk(&[i3])))
        .add(&kk(&[i2, i3]).mul(&kk(&[i3, i4]).sub(&kk(&[i1, i2, i3, i4]))))
        .sub(&kk(&[i3, i4]).mul(&kk(&[i2])))
        .add(&kk(&[i1, i2, i3]).mul(&kk(&[i2, i3, i4]).sub(&kk(&[i3, i4])).sub(&kk(&[i2]))))
        .sub(&kk(&[i2, i3, i4]).mul(&kk(&[i3])))
        .add(&kk(&[i2]).add(&kk(&[i3])).mul(&kk(&[i1, i2, i3, i4])))
        .add(&kk(&[i2]).mul(&kk(&[i3])));
    lhs.sub(&rhs)
}
