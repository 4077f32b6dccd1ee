//! Index combinatorics and the free noncommutative polynomial layer.

mod label;
mod ncpoly;

pub use label::{Interval, Label};
pub use ncpoly::{central_label, Coeff, NCPoly, Word};

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::scalar::QRat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("label has no parts")]
    EmptyLabel,
    #[error("block {lo}..{hi} is outside 1..{n}")]
    OutOfRange { lo: u8, hi: u8, n: u8 },
    #[error("parts overlap or are not monotonic")]
    Overlap,
    #[error("hole index {0} out of range")]
    BadHole(usize),
}

pub type Poly = NCPoly<QRat>;

fn label_of(ivs: &[Interval]) -> Label {
    Label::from_intervals(ivs).expect("sub-label of a canonical label is canonical")
}

/// The four labels of the one-step hole expansion at hole `a` (1-based):
/// `(I_{<=a} H_a, H_a I_{>a}, I_{<=a}, I_{>a}, H_a, I_{<=a} H_a I_{>a})`.
pub fn hole_split(l: &Label, a: usize) -> Result<[Label; 6], AlgebraError> {
    let parts = l.parts();
    if a == 0 || a >= parts.len() {
        return Err(AlgebraError::BadHole(a));
    }
    let h = l.holes()[a - 1];
    let left = &parts[..a];
    let right = &parts[a..];
    let mut lh: Vec<Interval> = left.to_vec();
    lh.push(h);
    let mut hr = vec![h];
    hr.extend_from_slice(right);
    let mut full = lh.clone();
    full.extend_from_slice(right);
    Ok([label_of(&lh), label_of(&hr), label_of(left), label_of(right), label_of(&[h]), label_of(&full)])
}

/// One expansion step at hole `a`, leaving the sub-labels as letters.
pub fn expand_step(l: &Label, a: usize) -> Result<Poly, AlgebraError> {
    let [lh, hr, left, right, h, full] = hole_split(l, a)?;
    let c = Poly::letter;
    Ok(Poly::qcomm(&c(lh), &c(hr))
        .neg()
        .add(&c(left).mul(&c(right)))
        .add(&c(h).mul(&c(full))))
}

fn cache() -> &'static Mutex<HashMap<(Label, usize), Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<(Label, usize), Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Full expansion over connected letters, choosing hole `a` first and the
/// leftmost hole in every sub-label.
pub fn expand_with_hole(l: &Label, a: usize) -> Result<Poly, AlgebraError> {
    if l.is_connected() {
        return Ok(Poly::letter(l.clone()));
    }
    let key = (l.clone(), a);
    if let Some(p) = cache().lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let step = expand_step(l, a)?;
    let p = step.map_letters(|x| expand(x));
    cache().lock().unwrap().insert(key, p.clone());
    Ok(p)
}

/// Canonical expansion: leftmost hole at every level.
pub fn expand(l: &Label) -> Poly {
    expand_with_hole(l, 1).expect("leftmost hole exists")
}

/// Expand every multi-part letter of a polynomial.
pub fn expand_poly(p: &Poly) -> Poly {
    p.map_letters(|l| expand(l))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(lo: u8, hi: u8) -> Poly {
        Poly::letter(Label::interval(lo, hi))
    }

    fn lab(b: &[(u8, u8)]) -> Label {
        Label::from_blocks(b).unwrap()
    }

    #[test]
    fn expand_c13() {
        let e = expand(&lab(&[(1, 1), (3, 3)]));
        let expect = Poly::qcomm(&c(1, 2), &c(2, 3)).neg().add(&c(1, 1).mul(&c(3, 3))).add(&c(2, 2).mul(&c(1, 3)));
        assert_eq!(e, expect);
    }

    #[test]
    fn expand_c236() {
        let e = expand(&lab(&[(2, 3), (6, 6)]));
        let expect = Poly::qcomm(&c(2, 5), &c(4, 6)).neg().add(&c(2, 3).mul(&c(6, 6))).add(&c(4, 5).mul(&c(2, 6)));
        assert_eq!(e, expect);
    }

    #[test]
    fn expansion_degree_matches_part_count() {
        let l = lab(&[(1, 1), (3, 3), (5, 5)]);
        assert_eq!(expand(&l).degree(), 3);
        assert_eq!(expand(&lab(&[(1, 1), (3, 4)])).degree(), 2);
    }

    #[test]
    fn up_of_c13_is_c31_modulo_centrals() {
        let inc = expand(&lab(&[(1, 1), (3, 3)])).up().absorb_central(3);
        let dec = expand(&lab(&[(3, 3), (1, 1)])).absorb_central(3);
        assert_eq!(inc, dec);
    }

    #[test]
    fn qcomm_of_equal_letters_is_square() {
        let x = c(1, 2);
        assert_eq!(Poly::qcomm(&x, &x), x.mul(&x));
    }

    #[test]
    fn qcomm_with_central_absorbed() {
        let a = c(1, 1).absorb_central(3);
        let b = c(2, 2).absorb_central(3);
        let r = NCPoly::qcomm(&a, &b);
        assert_eq!(r, a.mul(&b));
    }
}
