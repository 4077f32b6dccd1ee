//! Relation families of `aw(n)`, generated from subset tuples.
//!
//! Every instance is stored symbolically (letters may carry holes) and can be
//! expanded to the free algebra on connected letters.

mod templates;
mod tuples;

use std::cell::Cell;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{expand_poly, expand_step, Interval, Label, Poly};
use crate::scalar::QRat;

pub use tuples::{labels_with_holes, monotonic_tuples, Tuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationFamily {
    /// `[C_I, C_J] = 0` for disjoint or nested connected subsets.
    Commutation,
    /// The defining three-subset relation.
    ThreeAdjacent,
    /// The other two members of the three-subset cluster.
    ThreeAdjacentDerived,
    /// The defining four-subset relation and its five derived clusters.
    FourAdjacent,
    /// The two linear relations between `C_{I1 I2}` and `C_{I2 I1}`.
    C13C31,
    /// Relations between commutators.
    CommutatorSums,
    /// Commutations between elements with holes.
    ExtraCommuting,
    /// Closed forms of `[C_13, C_31]` and `[C_13, C_24]`.
    FfCommutators,
    /// Five-subset relations with one or two empty slots.
    Alternative,
    /// `C_L` against its one-step expansion at every hole.
    HoleDefinition,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 10] = [
        RelationFamily::Commutation,
        RelationFamily::ThreeAdjacent,
        RelationFamily::ThreeAdjacentDerived,
        RelationFamily::FourAdjacent,
        RelationFamily::C13C31,
        RelationFamily::CommutatorSums,
        RelationFamily::ExtraCommuting,
        RelationFamily::FfCommutators,
        RelationFamily::Alternative,
        RelationFamily::HoleDefinition,
    ];

    /// The families making up the definition of `aw(n)`.
    pub const DEFINING: [RelationFamily; 4] = [
        RelationFamily::Commutation,
        RelationFamily::ThreeAdjacent,
        RelationFamily::FourAdjacent,
        RelationFamily::HoleDefinition,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RelationFamily::Commutation => "commutation",
            RelationFamily::ThreeAdjacent => "three-adjacent",
            RelationFamily::ThreeAdjacentDerived => "three-adjacent-derived",
            RelationFamily::FourAdjacent => "four-adjacent",
            RelationFamily::C13C31 => "c13c31",
            RelationFamily::CommutatorSums => "commutator-sums",
            RelationFamily::ExtraCommuting => "extra-commuting",
            RelationFamily::FfCommutators => "ff-commutators",
            RelationFamily::Alternative => "alternative",
            RelationFamily::HoleDefinition => "hole-definition",
        }
    }

    /// Smallest rank with at least one instance.
    pub fn min_rank(&self) -> u8 {
        match self {
            RelationFamily::Commutation => 2,
            RelationFamily::ThreeAdjacent
            | RelationFamily::ThreeAdjacentDerived
            | RelationFamily::C13C31
            | RelationFamily::HoleDefinition
            | RelationFamily::Alternative => 3,
            RelationFamily::FfCommutators => 3,
            RelationFamily::FourAdjacent | RelationFamily::CommutatorSums | RelationFamily::ExtraCommuting => 4,
        }
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        RelationFamily::ALL
            .iter()
            .find(|f| f.name() == s)
            .copied()
            .ok_or_else(|| {
                let names: Vec<&str> = RelationFamily::ALL.iter().map(|f| f.name()).collect();
                format!("unknown family '{s}' (one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjacency {
    AdjacentOnly,
    Generalized,
}

/// One relation `symbolic = 0`, with the data it was generated from.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationInstance {
    pub family: RelationFamily,
    pub name: &'static str,
    /// Tuple entries; `None` for an empty slot.
    pub params: Vec<Option<Label>>,
    /// Every label in the statement has the same direction.
    pub single_direction: bool,
    pub adjacent: bool,
    /// A non-adjacent decreasing instance, obtained from the increasing one
    /// by symmetry rather than from a stated result.
    pub inferred: bool,
    pub symbolic: Poly,
}

impl RelationInstance {
    pub fn expanded(&self) -> Poly {
        expand_poly(&self.symbolic)
    }
}

/// Builds labels from tuple slots for a template.
pub(crate) struct Ctx<'a> {
    slots: &'a [Option<Interval>],
    mixed: Cell<bool>,
}

impl<'a> Ctx<'a> {
    fn new(slots: &'a [Option<Interval>]) -> Self {
        Ctx { slots, mixed: Cell::new(false) }
    }

    /// `C_{I_a I_b ...}` for 1-based slot indices, empty slots skipped.
    pub(crate) fn c(&self, idx: &[usize]) -> Poly {
        if idx.windows(2).any(|w| w[0] > w[1]) {
            self.mixed.set(true);
        }
        let ivs: Vec<Interval> = idx.iter().filter_map(|&i| self.slots[i - 1]).collect();
        if ivs.is_empty() {
            return Poly::one();
        }
        Poly::letter(Label::from_intervals(&ivs).expect("tuple slots are monotonic"))
    }
}

pub(crate) fn qc(a: &Poly, b: &Poly) -> Poly {
    Poly::qcomm(a, b)
}

pub(crate) fn cm(a: &Poly, b: &Poly) -> Poly {
    Poly::comm(a, b)
}

/// `lhs - (-[a, b]_q + rest)`.
pub(crate) fn aw_rel(lhs: Poly, a: Poly, b: Poly, rest: Poly) -> Poly {
    lhs.add(&qc(&a, &b)).sub(&rest)
}

pub(crate) fn q2_minus_qm2() -> QRat {
    &QRat::q_pow(2) - &QRat::q_pow(-2)
}

fn slot_labels(slots: &[Option<Interval>]) -> Vec<Option<Label>> {
    slots.iter().map(|s| s.map(|iv| Label::interval(iv.lo, iv.hi))).collect()
}

fn template_instances(n: u8, family: RelationFamily, adjacency: Adjacency) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for t in templates::templates(family) {
        let generalized = adjacency == Adjacency::Generalized && t.optional.is_empty();
        for tup in monotonic_tuples(n, t.arity, t.optional, generalized) {
            let ctx = Ctx::new(&tup.slots);
            let symbolic = (t.build)(&ctx);
            let single_direction = !ctx.mixed.get();
            if !tup.adjacent && !single_direction {
                continue;
            }
            if symbolic.is_zero() {
                continue;
            }
            out.push(RelationInstance {
                family,
                name: t.name,
                params: slot_labels(&tup.slots),
                single_direction,
                adjacent: tup.adjacent,
                inferred: !tup.adjacent && !tup.increasing,
                symbolic,
            });
        }
    }
    out
}

fn connected_labels(n: u8) -> Vec<Label> {
    let mut v = Vec::new();
    for lo in 1..=n {
        for hi in lo..=n {
            v.push(Label::interval(lo, hi));
        }
    }
    v
}

fn commutation_instances(n: u8, adjacency: Adjacency) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    let conn = connected_labels(n);
    let push = |out: &mut Vec<RelationInstance>, name, a: &Label, b: &Label, adjacent| {
        out.push(RelationInstance {
            family: RelationFamily::Commutation,
            name,
            params: vec![Some(a.clone()), Some(b.clone())],
            single_direction: true,
            adjacent,
            inferred: false,
            symbolic: cm(&Poly::letter(a.clone()), &Poly::letter(b.clone())),
        });
    };
    for (i, a) in conn.iter().enumerate() {
        for b in &conn[i + 1..] {
            let (ma, mb) = (a.mask(), b.mask());
            if ma & mb == 0 || ma & mb == ma || ma & mb == mb {
                push(&mut out, "relcommv", a, b, true);
            }
        }
    }
    if adjacency == Adjacency::Generalized {
        for l in labels_with_holes(n) {
            let m = l.mask();
            for j in &conn {
                let mj = j.mask();
                let inside_part = l.parts().iter().any(|p| p.mask() & mj == mj);
                if m & mj == 0 || inside_part || m & mj == m {
                    push(&mut out, "holes-vs-connected", &l, j, false);
                }
            }
        }
        for l in labels_with_holes(n).into_iter().filter(|l| l.parts().len() >= 3) {
            let parts = l.parts();
            for p in 1..parts.len() {
                let a = Label::from_intervals(&parts[..p]).unwrap();
                let b = Label::from_intervals(&parts[p..]).unwrap();
                push(&mut out, "split-sequence", &a, &b, false);
            }
        }
    }
    out
}

fn hole_definition_instances(n: u8) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for l in labels_with_holes(n) {
        for a in 1..=l.holes_count() {
            let step = expand_step(&l, a).expect("hole in range");
            out.push(RelationInstance {
                family: RelationFamily::HoleDefinition,
                name: if l.holes_count() == 1 { "one-hole" } else { "hole-choice" },
                params: vec![Some(l.clone())],
                single_direction: true,
                adjacent: true,
                inferred: false,
                symbolic: Poly::letter(l.clone()).sub(&step),
            });
        }
    }
    out
}

/// All instances of `family` at rank `n`, in a fixed order.
pub fn catalogue(n: u8, family: RelationFamily, adjacency: Adjacency) -> Vec<RelationInstance> {
    match family {
        RelationFamily::Commutation => commutation_instances(n, adjacency),
        RelationFamily::HoleDefinition => hole_definition_instances(n),
        _ => template_instances(n, family, adjacency),
    }
}

/// Instances as elements of the free algebra on connected letters.
pub fn relation_instances(n: u8, family: RelationFamily, adjacency: Adjacency) -> Vec<Poly> {
    catalogue(n, family, adjacency).iter().map(|r| r.expanded()).collect()
}

/// Why a family is empty at rank `n`, if it is.
pub fn family_notice(n: u8, family: RelationFamily, adjacency: Adjacency) -> Option<String> {
    if catalogue(n, family, adjacency).is_empty() {
        Some(format!("family {family} has no instances at n={n} (needs n >= {})", family.min_rank()))
    } else {
        None
    }
}

/// Every instance of every family.
pub fn full_catalogue(n: u8, adjacency: Adjacency) -> Vec<RelationInstance> {
    RelationFamily::ALL.iter().flat_map(|&f| catalogue(n, f, adjacency)).collect()
}

/// `C_{I2 I1}` rewritten over increasing letters using the linear pair
/// relating it to `C_{I1 I2}`; increasing or connected labels pass through.
pub fn decreasing_elimination(label: &Label) -> Poly {
    if label.is_increasing() {
        return Poly::letter(label.clone());
    }
    if label.holes_count() >= 2 {
        let step = expand_step(label, 1).expect("hole exists");
        return step.map_letters(decreasing_elimination);
    }
    let parts = label.parts();
    let (i2, i1) = (parts[0], parts[1]);
    let h = label.holes()[0];
    let conn = |lo: u8, hi: u8| Poly::letter(Label::interval(lo, hi));
    let a = conn(i1.lo, h.hi);
    let b = conn(h.lo, i2.hi);
    let r = conn(i1.lo, i1.hi)
        .mul(&conn(i2.lo, i2.hi))
        .add(&conn(h.lo, h.hi).mul(&conn(i1.lo, i2.hi)));
    let inc = Poly::letter(label.reversed());
    let f = &(&QRat::q() + &QRat::q_pow(-1)) * &QRat::q_pow(-1);
    r.sub(&b.mul(&a)).scale(&f).sub(&inc.scale(&QRat::q_pow(-2)))
}

/// Replace every decreasing letter by its elimination.
pub fn lower(p: &Poly) -> Poly {
    p.map_letters(decreasing_elimination)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(b: &[(u8, u8)]) -> Label {
        Label::from_blocks(b).unwrap()
    }

    #[test]
    fn three_adjacent_at_rank_three() {
        let v = catalogue(3, RelationFamily::ThreeAdjacent, Adjacency::AdjacentOnly);
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|r| r.name == "relaw31v"));
    }

    #[test]
    fn commutation_contains_expected() {
        let v = relation_instances(4, RelationFamily::Commutation, Adjacency::AdjacentOnly);
        let c = |lo, hi| Poly::letter(Label::interval(lo, hi));
        let want1 = cm(&c(1, 2), &c(1, 4));
        let want2 = cm(&c(1, 2), &c(3, 4));
        assert!(v.contains(&want1));
        assert!(v.contains(&want2));
        assert!(!v.contains(&cm(&c(1, 2), &c(2, 3))));
    }

    #[test]
    fn four_subset_families_empty_below_four() {
        for f in [RelationFamily::FourAdjacent, RelationFamily::CommutatorSums, RelationFamily::ExtraCommuting] {
            assert!(catalogue(3, f, Adjacency::AdjacentOnly).is_empty());
            assert!(family_notice(3, f, Adjacency::AdjacentOnly).is_some());
        }
    }

    #[test]
    fn generalized_skips_mixed_direction() {
        let v = catalogue(5, RelationFamily::ExtraCommuting, Adjacency::Generalized);
        assert!(v.iter().filter(|r| !r.adjacent).all(|r| r.single_direction));
        assert!(v.iter().any(|r| !r.adjacent));
        assert!(v.iter().any(|r| r.adjacent && !r.single_direction));
    }

    #[test]
    fn elimination_of_c31_matches_expansion_modulo_centrals() {
        let l = lab(&[(3, 3), (1, 1)]);
        let e = expand_poly(&decreasing_elimination(&l)).absorb_central(3);
        let d = crate::algebra::expand(&l).absorb_central(3);
        assert_eq!(e, d);
    }

    #[test]
    fn elimination_passes_increasing_through() {
        let l = lab(&[(1, 1), (3, 3)]);
        assert_eq!(decreasing_elimination(&l), Poly::letter(l.clone()));
        assert_eq!(lab(&[(2, 2), (1, 1)]), Label::interval(1, 2));
    }

    #[test]
    fn elimination_output_is_increasing() {
        let l = lab(&[(5, 5), (3, 3), (1, 1)]);
        let e = decreasing_elimination(&l);
        assert!(e.letters().iter().all(|x| x.is_increasing()));
    }

    #[test]
    fn regeneration_is_stable() {
        for f in RelationFamily::ALL {
            assert_eq!(catalogue(4, f, Adjacency::Generalized), catalogue(4, f, Adjacency::Generalized));
        }
    }
}
