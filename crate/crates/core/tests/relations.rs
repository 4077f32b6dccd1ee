use aw_core::algebra::expand_poly;
use aw_core::relations::{catalogue, decreasing_elimination, full_catalogue, Adjacency, RelationFamily};
use aw_core::uq::{Realization, RepSpec};
use aw_core::{Label, Poly};
use num_rational::BigRational;

fn q0() -> BigRational {
    BigRational::new(7.into(), 5.into())
}

fn check_vanish(n: u8, spec: RepSpec, adjacency: Adjacency) {
    let mut re = Realization::at(spec, q0()).unwrap();
    for inst in full_catalogue(n, adjacency) {
        let m = re.phi(&inst.symbolic).unwrap();
        assert!(m.is_zero(), "{} {} {:?} does not vanish", inst.family, inst.name, inst.params);
    }
}

#[test]
fn rank_four_instances_vanish_on_halves() {
    check_vanish(4, RepSpec::halves(4), Adjacency::Generalized);
}

#[test]
fn rank_three_instances_vanish_on_mixed_spins() {
    check_vanish(3, RepSpec::new(vec![1, 2, 1]), Adjacency::Generalized);
}

#[test]
fn rank_five_generalized_instances_vanish() {
    check_vanish(5, RepSpec::halves(5), Adjacency::Generalized);
}

#[test]
fn rank_four_defining_instances_vanish_symbolically() {
    let mut re = Realization::symbolic(RepSpec::halves(4));
    for fam in [RelationFamily::ThreeAdjacent, RelationFamily::FourAdjacent] {
        for inst in catalogue(4, fam, Adjacency::AdjacentOnly).into_iter().take(6) {
            assert!(re.phi(&inst.symbolic).unwrap().is_zero(), "{}", inst.name);
        }
    }
}

#[test]
fn decreasing_elimination_agrees_under_phi() {
    let mut re = Realization::at(RepSpec::halves(5), q0()).unwrap();
    for blocks in [&[(3, 3), (1, 1)][..], &[(4, 4), (1, 2)], &[(5, 5), (3, 3), (1, 1)], &[(5, 5), (2, 3)]] {
        let l = Label::from_blocks(blocks).unwrap();
        let a = re.phi(&decreasing_elimination(&l)).unwrap();
        let b = re.letter(&l).unwrap();
        assert_eq!(a, b, "{l}");
    }
}

#[test]
fn decreasing_elimination_is_up_of_increasing_formula() {
    // up of the elimination of C_31 against the rank-3 expansion of C_13
    let l = Label::from_blocks(&[(3, 3), (1, 1)]).unwrap();
    let lhs = expand_poly(&decreasing_elimination(&l)).up().absorb_central(3);
    let rhs = expand_poly(&Poly::letter(l.reversed())).absorb_central(3);
    let mut re = Realization::symbolic(RepSpec::halves(3));
    let d = Poly::from_absorbed(&lhs.sub(&rhs), 3);
    assert!(re.phi(&d).unwrap().is_zero());
}
