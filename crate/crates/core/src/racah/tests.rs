use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::targets::{cub0, rac1, rac2, sum_identity};
use super::*;
use crate::algebra::Label;
use crate::casimir::{omega, subset};
use crate::relations::{full_catalogue, Adjacency, RelationInstance};
use crate::uq::{Matrix, Realization, RepSpec};

fn r(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn singles(idx: &[u8]) -> Vec<Label> {
    idx.iter().map(|&i| Label::single(i)).collect()
}

fn instance(n: u8, name: &str, at: &[u8]) -> RelationInstance {
    let want: Vec<Option<Label>> = singles(at).into_iter().map(Some).collect();
    full_catalogue(n, Adjacency::AdjacentOnly)
        .into_iter()
        .find(|i| i.name == name && i.params == want)
        .unwrap_or_else(|| panic!("no instance {name} at {at:?}"))
}

/// `lim_{q->1} (φ(C_I) - 1) / ε`, entrywise from the symbolic realization.
fn classical_k(real: &mut Realization<QRat>, l: &Label) -> Matrix<BigRational> {
    let c = real.letter(l).unwrap();
    let one = Matrix::identity(c.rows());
    let eps_inv = epsilon().inv().unwrap();
    let m = c.sub(&one).scale(&eps_inv);
    Matrix::from_fn(m.rows(), m.cols(), |i, j| match m.get(i, j).order_at_one() {
        None => BigRational::zero(),
        Some((k, _)) if k > 0 => BigRational::zero(),
        Some((0, v)) => v,
        Some((k, _)) => panic!("pole of order {} at q = 1", -k),
    })
}

fn eval_k(p: &KPoly, real: &mut Realization<QRat>) -> Matrix<BigRational> {
    let dim = real.dim();
    let mut acc = Matrix::zeros(dim, dim);
    for (w, c) in &p.terms {
        let mut m = Matrix::identity(dim);
        for l in w {
            m = m.mul(&classical_k(real, l));
        }
        acc.add_scaled(&m, c);
    }
    acc
}

#[test]
fn epsilon_starts_at_second_order() {
    let s = qrat_hseries(&epsilon(), 4);
    assert_eq!(s.leading(), Some((2, &r(2))));
}

#[test]
fn single_generator() {
    let l = Label::interval(1, 2);
    let s = substitute_k(&Poly::letter(l.clone()), 4, Limit::Free).unwrap();
    assert_eq!(s.terms[&Vec::new()].coeff(0), r(1));
    assert_eq!(s.terms[&vec![l.clone()]].coeff(2), r(2));
    assert_eq!(s.terms[&vec![l]].coeff(1), r(0));
}

#[test]
fn commuting_pair() {
    let (a, b) = (Label::single(1), Label::interval(2, 3));
    let x = Poly::comm(&Poly::letter(a.clone()), &Poly::letter(b.clone()));
    assert_eq!(racah_limit(&x, Limit::Commuting), Err(RacahError::AllZero));
    let (k, lead) = racah_limit(&x, Limit::Free).unwrap();
    assert_eq!(k, 4);
    assert_eq!(lead, KPoly::comm(&KPoly::letter(a), &KPoly::letter(b)).scale(&r(4)));
}

#[test]
fn zero_precision_rejected() {
    assert_eq!(substitute_k(&Poly::one(), 0, Limit::Free), Err(RacahError::Precision));
}

#[test]
fn defining_instance_vanishes() {
    let x = instance(3, "relaw33", &[1, 2, 3]);
    assert!(substitute_exact(&x.symbolic, Limit::Free).is_zero());
    assert_eq!(racah_limit(&x.symbolic, Limit::Free), Err(RacahError::AllZero));
}

#[test]
fn series_and_exact_routes_agree() {
    for name in ["relaw31v", "relaw32"] {
        let x = instance(3, name, &[1, 2, 3]);
        for mode in [Limit::Free, Limit::Commuting] {
            assert_eq!(racah_limit(&x.symbolic, mode).ok(), leading_term_exact(&x.symbolic, mode));
        }
    }
}

#[test]
fn canonical_word_is_an_invariant() {
    let (a, b, c) = (Label::single(1), Label::interval(2, 3), Label::interval(1, 2));
    assert_eq!(canonical_word(&[b.clone(), a.clone()]), canonical_word(&[a.clone(), b.clone()]));
    assert_ne!(canonical_word(&[b.clone(), c.clone()]), canonical_word(&[c.clone(), b.clone()]));
    assert_eq!(canonical_word(&[c.clone(), b.clone(), a.clone()]), canonical_word(&[c, a, b]));
}

#[test]
fn three_subset_limits() {
    let i = singles(&[1, 2, 3]);
    let i = [&i[0], &i[1], &i[2]];
    for (name, target) in [("relaw32", rac1(i)), ("relaw31v", rac2(i))] {
        let x = instance(3, name, &[1, 2, 3]);
        let (k, lead) = racah_limit(&x.symbolic, Limit::Commuting).unwrap();
        assert_eq!(k, 4, "{name}");
        assert_eq!(lead.modulo_commutation(), target.scale(&r(4)).modulo_commutation(), "{name}");
    }
}

const FOUR_NAMED: [&str; 10] =
    ["relaw43", "relaw46", "relaw41v", "relaw45", "relaw47", "relaw49", "relaw48", "relaw410", "relaw42", "relaw44"];

#[test]
fn four_subset_limits() {
    let i = singles(&[1, 2, 3, 4]);
    let target = cub0([&i[0], &i[1], &i[2], &i[3]]);
    for name in FOUR_NAMED {
        for at in [[1, 2, 3, 4], [4, 3, 2, 1]] {
            let x = instance(4, name, &at);
            let (k, lead) = racah_limit(&x.symbolic, Limit::Commuting).unwrap();
            assert_eq!(k, 3, "{name} {at:?}");
            let c = in_span(&lead, &[target.clone()]).unwrap_or_else(|| panic!("{name} {at:?}: {lead}"));
            assert!(c[0] == r(2) || c[0] == r(-2), "{name} {at:?}");
        }
    }
}

#[test]
fn closing_members_lead_at_fourth_order() {
    for name in ["2h1", "2h2", "2h3", "2h4", "2h5"] {
        for at in [[1, 2, 3, 4], [4, 3, 2, 1]] {
            let x = instance(4, name, &at);
            assert_eq!(racah_limit(&x.symbolic, Limit::Commuting).unwrap().0, 4, "{name} {at:?}");
        }
    }
}

#[test]
fn sum_of_two_four_subset_relations() {
    let i = singles(&[1, 2, 3, 4]);
    let i = [&i[0], &i[1], &i[2], &i[3]];
    let x = instance(4, "relaw41v", &[1, 2, 3, 4]).symbolic.add(&instance(4, "relaw43", &[4, 3, 2, 1]).symbolic);
    let (k, lead) = racah_limit(&x, Limit::Commuting).unwrap();
    assert_eq!(k, 4);
    let c = in_span(&lead, &[sum_identity(i), cub0(i)]).expect("identity modulo cub0");
    assert_eq!(c[0], r(8));
}

#[test]
fn classical_matrices_satisfy_the_targets() {
    let i = singles(&[1, 2, 3, 4]);
    let (t3, t4) = ([&i[0], &i[1], &i[2]], [&i[0], &i[1], &i[2], &i[3]]);
    for spins in [vec![1, 1, 1, 1], vec![1, 2, 1, 1]] {
        let mut real = Realization::symbolic(RepSpec::new(spins));
        for t in [rac1(t3), rac2(t3), cub0(t4), sum_identity(t4)] {
            assert!(eval_k(&t, &mut real).is_zero(), "{t}");
        }
    }
}

#[test]
fn casimir_limit_is_central() {
    let w = omega(subset(&[1, 2, 3]), None).unwrap();
    let (k, lead) = racah_limit(&w, Limit::Commuting).unwrap();
    assert!(k > 0);
    assert!(lead.terms.keys().any(|w| w.len() == 3), "{lead}");
    let mut real = Realization::symbolic(RepSpec::new(vec![1, 2, 1]));
    let l = eval_k(&lead, &mut real);
    for g in [Label::interval(1, 2), Label::interval(2, 3)] {
        assert!(l.commutator(&classical_k(&mut real, &g)).is_zero(), "{g}");
    }
}
