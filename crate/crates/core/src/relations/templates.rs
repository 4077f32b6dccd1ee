//! Relation templates over tuple slots `I_1, I_2, ...`.

use super::{aw_rel, cm, q2_minus_qm2, Ctx, RelationFamily};
use crate::algebra::Poly;
use crate::scalar::QRat;

pub(crate) struct Template {
    pub name: &'static str,
    pub arity: usize,
    /// Slots of which at least one is empty (see `monotonic_tuples`).
    pub optional: &'static [usize],
    pub build: fn(&Ctx) -> Poly,
}

const fn t(name: &'static str, arity: usize, build: fn(&Ctx) -> Poly) -> Template {
    Template { name, arity, optional: &[], build }
}

const THREE: &[Template] = &[t("relaw31v", 3, |x| {
    aw_rel(x.c(&[1, 2]), x.c(&[2, 3]), x.c(&[1, 3]), x.c(&[1]).mul(&x.c(&[2])).add(&x.c(&[3]).mul(&x.c(&[1, 2, 3]))))
})];

const THREE_DERIVED: &[Template] = &[
    t("relaw32", 3, |x| {
        aw_rel(x.c(&[2, 3]), x.c(&[1, 3]), x.c(&[1, 2]), x.c(&[2]).mul(&x.c(&[3])).add(&x.c(&[1]).mul(&x.c(&[1, 2, 3]))))
    }),
    t("relaw33", 3, |x| {
        aw_rel(x.c(&[1, 3]), x.c(&[1, 2]), x.c(&[2, 3]), x.c(&[1]).mul(&x.c(&[3])).add(&x.c(&[2]).mul(&x.c(&[1, 2, 3]))))
    }),
];

fn p(x: &Ctx, a: &[usize], b: &[usize]) -> Poly {
    x.c(a).mul(&x.c(b))
}

const FOUR: &[Template] = &[
    t("relaw41v", 4, |x| aw_rel(x.c(&[1, 4]), x.c(&[1, 3]), x.c(&[3, 4]), p(x, &[1], &[4]).add(&p(x, &[3], &[1, 3, 4])))),
    t("relaw43", 4, |x| aw_rel(x.c(&[1, 4]), x.c(&[1, 2]), x.c(&[2, 4]), p(x, &[1], &[4]).add(&p(x, &[2], &[1, 2, 4])))),
    t("relaw46", 4, |x| aw_rel(x.c(&[2, 4]), x.c(&[1, 4]), x.c(&[1, 2]), p(x, &[2], &[4]).add(&p(x, &[1], &[1, 2, 4])))),
    t("2h3", 4, |x| aw_rel(x.c(&[1, 2]), x.c(&[2, 4]), x.c(&[1, 4]), p(x, &[1], &[2]).add(&p(x, &[4], &[1, 2, 4])))),
    t("relaw45", 4, |x| aw_rel(x.c(&[1, 3]), x.c(&[3, 4]), x.c(&[1, 4]), p(x, &[1], &[3]).add(&p(x, &[4], &[1, 3, 4])))),
    t("2h2", 4, |x| aw_rel(x.c(&[3, 4]), x.c(&[1, 4]), x.c(&[1, 3]), p(x, &[3], &[4]).add(&p(x, &[1], &[1, 3, 4])))),
    t("relaw47", 4, |x| {
        aw_rel(x.c(&[1, 2, 4]), x.c(&[3, 1]), x.c(&[2, 3, 4]), p(x, &[1], &[2, 4]).add(&p(x, &[3], &[1, 2, 3, 4])))
    }),
    t("relaw49", 4, |x| {
        aw_rel(x.c(&[3, 1]), x.c(&[2, 3, 4]), x.c(&[1, 2, 4]), p(x, &[3], &[1]).add(&p(x, &[2, 4], &[1, 2, 3, 4])))
    }),
    t("2h4", 4, |x| {
        aw_rel(x.c(&[2, 3, 4]), x.c(&[1, 2, 4]), x.c(&[3, 1]), p(x, &[3], &[2, 4]).add(&p(x, &[1], &[1, 2, 3, 4])))
    }),
    t("relaw48", 4, |x| {
        aw_rel(x.c(&[1, 3, 4]), x.c(&[1, 2, 3]), x.c(&[4, 2]), p(x, &[4], &[1, 3]).add(&p(x, &[2], &[1, 2, 3, 4])))
    }),
    t("relaw410", 4, |x| {
        aw_rel(x.c(&[4, 2]), x.c(&[1, 3, 4]), x.c(&[1, 2, 3]), p(x, &[2], &[4]).add(&p(x, &[1, 3], &[1, 2, 3, 4])))
    }),
    t("2h5", 4, |x| {
        aw_rel(x.c(&[1, 2, 3]), x.c(&[4, 2]), x.c(&[1, 3, 4]), p(x, &[2], &[1, 3]).add(&p(x, &[4], &[1, 2, 3, 4])))
    }),
    t("relaw42", 4, |x| {
        aw_rel(x.c(&[1, 2, 4]), x.c(&[2, 3]), x.c(&[1, 3, 4]), p(x, &[2], &[1, 4]).add(&p(x, &[3], &[1, 2, 3, 4])))
    }),
    t("relaw44", 4, |x| {
        aw_rel(x.c(&[1, 3, 4]), x.c(&[1, 2, 4]), x.c(&[2, 3]), p(x, &[1, 4], &[3]).add(&p(x, &[2], &[1, 2, 3, 4])))
    }),
    t("2h1", 4, |x| {
        aw_rel(x.c(&[2, 3]), x.c(&[1, 3, 4]), x.c(&[1, 2, 4]), p(x, &[2], &[3]).add(&p(x, &[1, 4], &[1, 2, 3, 4])))
    }),
];

fn ratio_pair() -> (QRat, QRat) {
    let s = (&QRat::q() + &QRat::q_pow(-1)).inv().unwrap();
    (&QRat::q_pow(-1) * &s, &QRat::q() * &s)
}

const C13C31: &[Template] = &[
    t("c13c31-a", 3, |x| {
        let (a, b) = ratio_pair();
        let rhs = p(x, &[2, 3], &[1, 2]).neg().add(&p(x, &[1], &[3])).add(&p(x, &[2], &[1, 2, 3]));
        x.c(&[1, 3]).scale(&a).add(&x.c(&[3, 1]).scale(&b)).sub(&rhs)
    }),
    t("c13c31-b", 3, |x| {
        let (a, b) = ratio_pair();
        let rhs = p(x, &[1, 2], &[2, 3]).neg().add(&p(x, &[1], &[3])).add(&p(x, &[2], &[1, 2, 3]));
        x.c(&[1, 3]).scale(&b).add(&x.c(&[3, 1]).scale(&a)).sub(&rhs)
    }),
];

/// `[A, B] - [C, D] - [E, F]`.
fn comm_sum(x: &Ctx, l: [&[usize]; 6]) -> Poly {
    cm(&x.c(l[0]), &x.c(l[1])).sub(&cm(&x.c(l[2]), &x.c(l[3]))).sub(&cm(&x.c(l[4]), &x.c(l[5])))
}

const COMUT: &[Template] = &[
    t("comut1", 4, |x| comm_sum(x, [&[1, 2], &[2, 3], &[1, 2, 4], &[2, 3, 4], &[3, 4], &[1, 4]])),
    t("comut2", 4, |x| comm_sum(x, [&[2, 3], &[3, 4], &[1, 2, 3], &[1, 3, 4], &[1, 4], &[1, 2]])),
    t("comut3", 4, |x| comm_sum(x, [&[1, 2], &[2, 3, 4], &[1, 2, 4], &[2, 3], &[1, 2, 3], &[2, 4]])),
    t("comut4", 4, |x| comm_sum(x, [&[3, 4], &[1, 2, 3], &[1, 3, 4], &[2, 3], &[2, 3, 4], &[1, 3]])),
    t("comut5", 4, |x| comm_sum(x, [&[1, 2, 3], &[2, 3, 4], &[1, 2], &[2, 4], &[3, 1], &[3, 4]])),
    t("comut6", 4, |x| comm_sum(x, [&[1, 3], &[1, 2, 4], &[1, 3, 4], &[1, 2], &[1, 2, 3], &[1, 4]])),
    t("comut7", 4, |x| comm_sum(x, [&[2, 4], &[1, 3, 4], &[1, 2, 4], &[3, 4], &[2, 3, 4], &[1, 4]])),
    t("comut8", 4, |x| comm_sum(x, [&[1, 4], &[3, 1], &[2, 3], &[2, 4], &[1, 2, 4], &[1, 2, 3]])),
];

fn cc(x: &Ctx, a: &[usize], b: &[usize]) -> Poly {
    cm(&x.c(a), &x.c(b))
}

const EXTRA: &[Template] = &[
    t("com1a", 4, |x| cc(x, &[1, 2], &[1, 2, 4])),
    t("com1b", 4, |x| cc(x, &[1, 2], &[4, 2, 1])),
    t("com2a", 4, |x| cc(x, &[3, 4], &[1, 3, 4])),
    t("com2b", 4, |x| cc(x, &[3, 4], &[4, 3, 1])),
    t("com3a", 4, |x| cc(x, &[1, 2, 3], &[1, 3])),
    t("com3b", 4, |x| cc(x, &[1, 2, 3], &[3, 1])),
    t("com4a", 4, |x| cc(x, &[2, 3, 4], &[2, 4])),
    t("com4b", 4, |x| cc(x, &[2, 3, 4], &[4, 2])),
    t("com5a", 4, |x| cc(x, &[2, 3], &[1, 4])),
    t("com5b", 4, |x| cc(x, &[2, 3], &[4, 1])),
    t("coma1", 4, |x| cc(x, &[1, 3], &[4, 2])),
    t("coma3a", 4, |x| cc(x, &[1, 3, 4], &[1, 3])),
    t("coma3b", 4, |x| cc(x, &[1, 2, 4], &[2, 4])),
    t("coma4a", 4, |x| cc(x, &[1, 3, 4], &[1, 4])),
    t("coma4b", 4, |x| cc(x, &[1, 2, 4], &[1, 4])),
];

fn p3(x: &Ctx, a: &[usize], b: &[usize], c: &[usize]) -> Poly {
    x.c(a).mul(&x.c(b)).mul(&x.c(c))
}

const FF: &[Template] = &[
    t("com13", 3, |x| {
        let c12 = x.c(&[1, 2]);
        let c23 = x.c(&[2, 3]);
        let rhs = c23
            .mul(&c23)
            .sub(&c12.mul(&c12))
            .sub(&c23.mul(&p(x, &[2], &[3]).add(&p(x, &[1], &[1, 2, 3]))))
            .add(&c12.mul(&p(x, &[1], &[2]).add(&p(x, &[3], &[1, 2, 3]))));
        cc(x, &[1, 3], &[3, 1]).sub(&rhs.scale(&q2_minus_qm2()))
    }),
    t("com1324", 4, |x| {
        let rhs = p3(x, &[3], &[4], &[1, 2])
            .add(&p3(x, &[1], &[2], &[3, 4]))
            .sub(&p3(x, &[2], &[3], &[1, 4]))
            .sub(&p3(x, &[1], &[4], &[2, 3]))
            .sub(&p(x, &[1, 2], &[3, 4]))
            .add(&p(x, &[2, 3], &[1, 4]));
        cc(x, &[1, 3], &[2, 4]).sub(&rhs.scale(&q2_minus_qm2()))
    }),
];

// Slots are (I_1, I_2, H, I_3, I_4); H never appears in a label.
const ALT: &[Template] = &[
    Template {
        name: "rel-1",
        arity: 5,
        optional: &[1, 3],
        build: |x| aw_rel(x.c(&[1, 2, 5]), x.c(&[2, 4]), x.c(&[1, 4, 5]), p(x, &[2], &[1, 5]).add(&p(x, &[4], &[1, 2, 4, 5]))),
    },
    Template {
        name: "rel-2",
        arity: 5,
        optional: &[3, 5],
        build: |x| aw_rel(x.c(&[1, 4, 5]), x.c(&[1, 2, 5]), x.c(&[2, 4]), p(x, &[1, 5], &[4]).add(&p(x, &[2], &[1, 2, 4, 5]))),
    },
    Template {
        name: "rel-3",
        arity: 5,
        optional: &[1, 5],
        build: |x| aw_rel(x.c(&[2, 4]), x.c(&[1, 4, 5]), x.c(&[1, 2, 5]), p(x, &[4], &[2]).add(&p(x, &[1, 5], &[1, 2, 4, 5]))),
    },
];

pub(crate) fn templates(family: RelationFamily) -> &'static [Template] {
    match family {
        RelationFamily::ThreeAdjacent => THREE,
        RelationFamily::ThreeAdjacentDerived => THREE_DERIVED,
        RelationFamily::FourAdjacent => FOUR,
        RelationFamily::C13C31 => C13C31,
        RelationFamily::CommutatorSums => COMUT,
        RelationFamily::ExtraCommuting => EXTRA,
        RelationFamily::FfCommutators => FF,
        RelationFamily::Alternative => ALT,
        RelationFamily::Commutation | RelationFamily::HoleDefinition => &[],
    }
}
