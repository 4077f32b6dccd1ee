use aw_core::algebra::{expand_poly, Label, Poly};
use aw_core::relations::{catalogue, full_catalogue, Adjacency, RelationFamily};
use aw_core::rewriter::{seed_rules, seed_rules_from, Engine, LetterOrder, Outcome, RuleSet, DEFAULT_MAX_ITER};
use aw_core::uq::{Realization, RepSpec};
use aw_core::QRat;
use num_rational::BigRational;
use proptest::prelude::*;

fn completed(n: u8, bound: u16) -> RuleSet {
    let mut rs = seed_rules(n, LetterOrder::default_for(n)).unwrap();
    rs.complete(bound, DEFAULT_MAX_ITER);
    rs
}

fn c(blocks: &[(u8, u8)]) -> Poly {
    Poly::letter(Label::from_blocks(blocks).unwrap())
}

/// Each rule `X*Y -> rhs` and each linear relation as an element that must vanish.
fn rule_polys(rs: &RuleSet) -> Vec<Poly> {
    let n = rs.n();
    let mut v: Vec<Poly> = rs
        .rules()
        .iter()
        .map(|r| {
            let lhs = r.lhs.iter().fold(Poly::one(), |acc, l| acc.mul(&Poly::letter(l.clone())));
            lhs.sub(&Poly::from_absorbed(&r.rhs, n))
        })
        .collect();
    v.extend(rs.linear_relations());
    v
}

#[test]
fn rules_vanish_under_phi_at_three() {
    let rs = completed(3, 6);
    for spins in [vec![1, 1, 1], vec![1, 2, 1], vec![2, 1, 1]] {
        let mut re = Realization::symbolic(RepSpec::new(spins.clone()));
        for p in rule_polys(&rs) {
            assert!(re.phi(&expand_poly(&p)).unwrap().is_zero(), "{spins:?}: {p:?}");
        }
    }
}

#[test]
fn rules_vanish_under_phi_at_four() {
    let rs = completed(4, 6);
    let q0 = BigRational::new(7.into(), 5.into());
    let mut re = Realization::at(RepSpec::halves(4), q0).unwrap();
    for p in rule_polys(&rs) {
        assert!(re.phi(&expand_poly(&p)).unwrap().is_zero(), "{p:?}");
    }
}

#[test]
fn completion_is_idempotent() {
    let mut rs = completed(3, 6);
    let before = rs.to_cache();
    rs.complete(6, DEFAULT_MAX_ITER);
    assert_eq!(rs.to_cache(), before);
}

#[test]
fn c12_minus_c13_is_nonzero() {
    let mut e = Engine::new(0);
    let o = e.compare(&c(&[(1, 2)]), &c(&[(1, 1), (3, 3)]), 3);
    assert!(matches!(o, Outcome::ProvedNonzero { .. }), "{o}");
    assert!(matches!(e.compare(&c(&[(1, 1), (3, 3)]), &c(&[(3, 3), (1, 1)]), 3), Outcome::ProvedNonzero { .. }));
}

#[test]
fn every_instance_reduces_to_zero() {
    let mut e = Engine::new(0);
    for n in 3..=4u8 {
        for inst in full_catalogue(n, Adjacency::Generalized) {
            let o = e.check_zero(&inst.expanded(), n);
            assert!(o.is_proved(), "n={n} {} {:?}: {o}", inst.name, inst.params);
        }
    }
}

/// The companion families follow from the defining ones by completion.
#[test]
fn derived_families_follow_from_defining_ones() {
    for n in 3..=4u8 {
        let mut rs = seed_rules_from(n, LetterOrder::default_for(n), &RelationFamily::DEFINING, Adjacency::AdjacentOnly).unwrap();
        rs.complete(6, DEFAULT_MAX_ITER);
        for &f in RelationFamily::ALL.iter().filter(|f| !RelationFamily::DEFINING.contains(f)) {
            for inst in catalogue(n, f, Adjacency::AdjacentOnly) {
                let r = rs.reduce(&inst.expanded()).unwrap();
                assert!(r.is_zero(), "n={n} {} {:?}: {}", inst.name, inst.params, r.terms().count());
            }
        }
    }
}

#[test]
fn inferred_instances_vanish_under_phi_at_five() {
    let q0 = BigRational::new(5.into(), 4.into());
    let mut re = Realization::at(RepSpec::halves(5), q0).unwrap();
    let inferred: Vec<_> = full_catalogue(5, Adjacency::Generalized).into_iter().filter(|i| i.inferred).collect();
    assert!(!inferred.is_empty());
    for inst in inferred {
        assert!(re.phi(&inst.expanded()).unwrap().is_zero(), "{} {:?}", inst.name, inst.params);
    }
}

fn arb_word() -> impl Strategy<Value = Poly> {
    let gens: Vec<Poly> = aw_core::morphisms::generators(4).into_iter().map(Poly::letter).collect();
    let k = gens.len();
    prop::collection::vec((prop::collection::vec(0..k, 1..5), -2i32..3), 1..4).prop_map(move |ms| {
        let mut p = Poly::zero();
        for (w, e) in ms {
            let m = w.iter().fold(Poly::one(), |acc, &i| acc.mul(&gens[i]));
            p = p.add(&m.scale(&QRat::q_pow(e)));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Reduction halts, is idempotent and agrees with the input under phi.
    #[test]
    fn reduction_terminates_and_is_sound(x in arb_word()) {
        use std::sync::OnceLock;
        static RS: OnceLock<RuleSet> = OnceLock::new();
        let rs = RS.get_or_init(|| completed(4, 6));
        let r = rs.reduce(&x).unwrap();
        prop_assert_eq!(rs.reduce(&r).unwrap(), r.clone());
        let q0 = BigRational::new(3.into(), 2.into());
        let mut re = Realization::at(RepSpec::halves(4), q0).unwrap();
        prop_assert_eq!(re.phi(&expand_poly(&r)).unwrap(), re.phi(&x).unwrap());
    }
}
