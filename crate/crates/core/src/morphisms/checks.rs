//! Executable checks of the braid, quotient, coproduct and morphism
//! identities.

use std::fmt;

use super::{apply, apply_word, formula_image, generators, structural_image, MorphismTag, MorphismWord};
use crate::algebra::{Label, Poly};
use crate::relations::{catalogue, labels_with_holes, Adjacency, RelationFamily};
pub use crate::rewriter::Outcome;
use crate::rewriter::Engine;

#[derive(Clone, Debug)]
pub struct CheckItem {
    pub name: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), items: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, outcome: Outcome) {
        self.items.push(CheckItem { name: name.into(), outcome });
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    /// Every item syntactic or proved by rewriting.
    pub fn all_proved(&self) -> bool {
        self.items.iter().all(|i| i.outcome.is_proved())
    }

    pub fn no_refutation(&self) -> bool {
        !self.items.iter().any(|i| i.outcome.is_refuted())
    }

    pub fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.items.iter().filter(|i| pred(&i.outcome)).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.outcome.is_proved())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let syn = self.count(|o| *o == Outcome::Syntactic);
        let pz = self.count(|o| *o == Outcome::ProvedZero);
        let rc = self.count(|o| *o == Outcome::RepConsistent);
        let nz = self.count(|o| o.is_refuted());
        writeln!(
            f,
            "{}: {} checks, {syn} syntactic, {pz} ProvedZero, {rc} rep-consistent, {nz} ProvedNonzero",
            self.title,
            self.items.len()
        )?;
        for i in self.failures() {
            writeln!(f, "  {}: {}", i.name, i.outcome)?;
        }
        Ok(())
    }
}

fn w(tags: &[MorphismTag]) -> MorphismWord {
    MorphismWord::new(tags.to_vec())
}

use MorphismTag::{Delta as D, RBar as Rb, R};

/// Compare two words on every generator of `aw(n)`.
fn compare_words(rep: &mut Report, engine: &mut Engine, name: &str, a: &MorphismWord, b: &MorphismWord, n: u8) {
    for g in generators(n) {
        let x = Poly::letter(g.clone());
        let outcome = match (apply_word(a, &x, n), apply_word(b, &x, n)) {
            (Ok((pa, ra)), Ok((pb, rb))) if ra == rb => engine.compare(&pa, &pb, ra),
            (Err(e), _) | (_, Err(e)) => Outcome::Error(e.to_string()),
            _ => Outcome::Error("rank mismatch".into()),
        };
        rep.push(format!("{name} on {g}"), outcome);
    }
}

/// Inverses, braid relations and far commutation on all generators.
pub fn check_braid_relations(n: u8, engine: &mut Engine) -> Report {
    let mut rep = Report::new(format!("braid relations n={n}"));
    for a in 0..n {
        compare_words(&mut rep, engine, &format!("r{a} rb{a} = id"), &w(&[R(a), Rb(a)]), &w(&[]), n);
        compare_words(&mut rep, engine, &format!("rb{a} r{a} = id"), &w(&[Rb(a), R(a)]), &w(&[]), n);
    }
    for a in 0..n.saturating_sub(1) {
        let b = a + 1;
        compare_words(&mut rep, engine, &format!("r{a} r{b} r{a} = r{b} r{a} r{b}"), &w(&[R(a), R(b), R(a)]), &w(&[R(b), R(a), R(b)]), n);
    }
    for a in 0..n {
        for b in a + 2..n {
            compare_words(&mut rep, engine, &format!("r{a} r{b} = r{b} r{a}"), &w(&[R(a), R(b)]), &w(&[R(b), R(a)]), n);
        }
    }
    rep
}

/// The relations killing the centre of the braid group.
pub fn check_quotient_relations(n: u8, engine: &mut Engine) -> Report {
    let mut rep = Report::new(format!("centre quotient n={n}"));
    let id = w(&[]);
    let d1 = MorphismWord::delta_word(1, n - 1);
    compare_words(&mut rep, engine, "(Delta_1..n-1)^2 = id", &d1.clone().then(&d1), &id, n);
    let d0 = MorphismWord::delta_word(0, n - 1);
    compare_words(&mut rep, engine, "(Delta_0..n-1)^2 = id", &d0.clone().then(&d0), &id, n);
    let d0b = MorphismWord::delta_word(0, n - 2);
    compare_words(&mut rep, engine, "(Delta_0..n-2)^2 = id", &d0b.clone().then(&d0b), &id, n);
    let mut t: Vec<MorphismTag> = (1..n).rev().map(R).collect();
    t.push(R(0));
    t.push(R(0));
    t.extend((1..n).map(R));
    compare_words(&mut rep, engine, "r_n-1..r1 r0^2 r1..r_n-1 = id", &w(&t), &id, n);
    let mut t: Vec<MorphismTag> = (1..n - 1).map(Rb).collect();
    t.push(Rb(n - 1));
    t.push(Rb(n - 1));
    t.extend((1..n - 1).rev().map(Rb));
    compare_words(&mut rep, engine, "r0^2 = rb1..rb_n-1^2..rb1", &w(&[R(0), R(0)]), &w(&t), n);
    if n == 3 {
        compare_words(&mut rep, engine, "r0^2 = r2^2", &w(&[R(0), R(0)]), &w(&[R(2), R(2)]), n);
    }
    rep
}

/// The ten coproduct/automorphism identities, maps `aw(n) -> aw(n+1)`.
pub fn check_r_delta(n: u8, engine: &mut Engine) -> Report {
    let mut rep = Report::new(format!("coproduct compatibility n={n}"));
    for i in 0..=n {
        compare_words(&mut rep, engine, &format!("r{i} d{i} = d{i}"), &w(&[R(i), D(i)]), &w(&[D(i)]), n);
        compare_words(&mut rep, engine, &format!("d{i} = rb{i} d{i}"), &w(&[D(i)]), &w(&[Rb(i), D(i)]), n);
    }
    for i in 0..n {
        let j = i + 1;
        compare_words(&mut rep, engine, &format!("d{i} r{i} = r{j} r{i} d{j}"), &w(&[D(i), R(i)]), &w(&[R(j), R(i), D(j)]), n);
        compare_words(&mut rep, engine, &format!("rb{i} rb{j} d{i} = d{j} rb{i}"), &w(&[Rb(i), Rb(j), D(i)]), &w(&[D(j), Rb(i)]), n);
        compare_words(&mut rep, engine, &format!("d{j} r{i} = r{i} r{j} d{i}"), &w(&[D(j), R(i)]), &w(&[R(i), R(j), D(i)]), n);
        compare_words(&mut rep, engine, &format!("rb{j} rb{i} d{j} = d{i} rb{i}"), &w(&[Rb(j), Rb(i), D(j)]), &w(&[D(i), Rb(i)]), n);
    }
    for i in 0..=n {
        for j in 0..n {
            if j + 1 < i {
                compare_words(&mut rep, engine, &format!("d{i} r{j} = r{j} d{i}"), &w(&[D(i), R(j)]), &w(&[R(j), D(i)]), n);
                compare_words(&mut rep, engine, &format!("d{i} rb{j} = rb{j} d{i}"), &w(&[D(i), Rb(j)]), &w(&[Rb(j), D(i)]), n);
            }
            if j > i {
                let k = j + 1;
                compare_words(&mut rep, engine, &format!("d{i} r{j} = r{k} d{i}"), &w(&[D(i), R(j)]), &w(&[R(k), D(i)]), n);
                compare_words(&mut rep, engine, &format!("d{i} rb{j} = rb{k} d{i}"), &w(&[D(i), Rb(j)]), &w(&[Rb(k), D(i)]), n);
            }
        }
    }
    rep
}

/// The image of every defining-relation instance vanishes.
pub fn check_morphism_property(tag: MorphismTag, n: u8, engine: &mut Engine) -> Report {
    let mut rep = Report::new(format!("morphism property of {tag} on aw({n})"));
    let target = tag.target_rank(n);
    for &f in RelationFamily::DEFINING.iter() {
        for inst in catalogue(n, f, Adjacency::AdjacentOnly) {
            let x = inst.expanded();
            let outcome = match apply(tag, &x, n) {
                Ok(img) => engine.check_zero(&img, target),
                Err(e) => Outcome::Error(e.to_string()),
            };
            rep.push(format!("{tag}({} {})", inst.name, params(&inst.params)), outcome);
        }
    }
    rep
}

fn params(p: &[Option<Label>]) -> String {
    let v: Vec<String> = p.iter().map(|l| l.as_ref().map_or("-".to_string(), |l| l.to_string())).collect();
    v.join(",")
}

/// Structural images agree with the q-commutator formulas.
pub fn check_formula_consistency(n: u8, engine: &mut Engine) -> Report {
    let mut rep = Report::new(format!("structural vs formula n={n}"));
    let mut labels = generators(n);
    labels.extend(labels_with_holes(n));
    let tags: Vec<MorphismTag> = (0..n).flat_map(|a| [R(a), Rb(a)]).collect();
    for l in &labels {
        for &t in &tags {
            let (Some(s), Some(f)) = (structural_image(t, l, n), formula_image(t, l, n)) else { continue };
            if s == Poly::letter(l.clone()) && f == s {
                continue;
            }
            rep.push(format!("{t}({l})"), engine.compare(&s, &f, n));
        }
    }
    rep
}
