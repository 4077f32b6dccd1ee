//! The checks run by `aw selfcheck`. Each suite is deterministic for a
//! fixed engine configuration and prints no timings.

use std::fmt;

use aw_core::algebra::{expand_poly, expand_with_hole, Label, Poly};
use aw_core::casimir::{check_centrality, express_in_gamma, gamma_basis, omega, omega3, r0_matrix_gamma4, subset, Subset};
use aw_core::morphisms::{
    apply, check_braid_relations, check_formula_consistency, check_morphism_property, check_quotient_relations,
    check_r_delta, generators, MorphismTag, Report,
};
use aw_core::racah::targets::{cub0, rac1, rac2, sum_identity};
use aw_core::racah::{in_span, racah_limit, KPoly, Limit};
use aw_core::relations::{catalogue, full_catalogue, labels_with_holes, Adjacency, RelationFamily, RelationInstance};
use aw_core::rewriter::{seed_rules_with, verify_zero_at, Engine, LetterOrder, Outcome, Verdict};
use aw_core::syntax::parse_poly;
use aw_core::uq::{Matrix, Realization, RepSpec};
use aw_core::QRat;
use num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    /// Syntactic, proved by rewriting, or an exact symbolic identity.
    Proved,
    /// Holds at every representation and point tried.
    Consistent,
    Refuted(String),
    Error(String),
}

impl From<&Outcome> for Status {
    fn from(o: &Outcome) -> Self {
        match o {
            Outcome::Syntactic | Outcome::ProvedZero => Status::Proved,
            Outcome::RepConsistent => Status::Consistent,
            Outcome::ProvedNonzero { .. } => Status::Refuted(o.to_string()),
            Outcome::Error(e) => Status::Error(e.clone()),
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Proved => f.write_str("proved"),
            Status::Consistent => f.write_str("rep-consistent"),
            Status::Refuted(m) => write!(f, "refuted: {m}"),
            Status::Error(m) => write!(f, "error: {m}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Suite {
    pub title: String,
    pub items: Vec<(String, Status)>,
    /// Rep-consistent items fail the suite.
    pub needs_proof: bool,
}

impl Suite {
    pub fn new(title: impl Into<String>, needs_proof: bool) -> Self {
        Suite { title: title.into(), items: Vec::new(), needs_proof }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status) {
        self.items.push((name.into(), status));
    }

    pub fn from_report(r: &Report, needs_proof: bool) -> Self {
        let mut s = Suite::new(r.title.clone(), needs_proof);
        s.absorb(r);
        s
    }

    pub fn absorb(&mut self, r: &Report) {
        for i in &r.items {
            self.push(i.name.clone(), Status::from(&i.outcome));
        }
    }

    fn count(&self, f: impl Fn(&Status) -> bool) -> usize {
        self.items.iter().filter(|(_, s)| f(s)).count()
    }

    pub fn refuted(&self) -> bool {
        self.items.iter().any(|(_, s)| matches!(s, Status::Refuted(_)))
    }

    pub fn passed(&self) -> bool {
        !self.items.is_empty()
            && self.items.iter().all(|(_, s)| match s {
                Status::Proved => true,
                Status::Consistent => !self.needs_proof,
                _ => false,
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.count(|s| *s == Status::Proved);
        let c = self.count(|s| *s == Status::Consistent);
        let r = self.count(|s| matches!(s, Status::Refuted(_)));
        let e = self.count(|s| matches!(s, Status::Error(_)));
        writeln!(
            f,
            "[{}] {}: {} checks, {p} proved, {c} rep-consistent, {r} refuted, {e} errors",
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.items.len()
        )?;
        for (name, s) in &self.items {
            if *s != Status::Proved {
                writeln!(f, "  {name}: {s}")?;
            }
        }
        Ok(())
    }
}

fn verdict_status(v: Verdict) -> Status {
    match v {
        Verdict::ProvedZero => Status::Proved,
        Verdict::Inconclusive => Status::Consistent,
        Verdict::ProvedNonzero { spec, q0 } => Status::Refuted(format!("nonzero on {spec} at q={q0}")),
    }
}

fn outcome(o: Outcome) -> Status {
    Status::from(&o)
}

/// The classical presentation of `aw(3)`: `C_13` by its defining
/// q-commutator, the two relations for `C_12` and `C_23`, and centrality
/// of `C_1, C_2, C_3, C_123`.
pub fn classical_aw3() -> Vec<(&'static str, Poly)> {
    let p = |s: &str| parse_poly(s, 3).expect("fixed text");
    let mut v = vec![
        ("C13 definition", p("C[1;3] - (-qcomm(C[1..2], C[2..3]) + C[1]*C[3] + C[2]*C[1..3])")),
        ("C12 relation", p("C[1..2] - (-qcomm(C[2..3], C[1;3]) + C[1]*C[2] + C[3]*C[1..3])")),
        ("C23 relation", p("C[2..3] - (-qcomm(C[1;3], C[1..2]) + C[2]*C[3] + C[1]*C[1..3])")),
    ];
    for z in ["C[1]", "C[2]", "C[3]", "C[1..3]"] {
        for x in ["C[1..2]", "C[2..3]"] {
            v.push(("centrality", p(&format!("comm({z}, {x})"))));
        }
    }
    v
}

fn defining_instances(n: u8) -> Vec<RelationInstance> {
    RelationFamily::DEFINING.iter().flat_map(|&f| catalogue(n, f, Adjacency::AdjacentOnly)).collect()
}

fn instance_name(i: &RelationInstance) -> String {
    let p: Vec<String> = i.params.iter().map(|l| l.as_ref().map_or("-".into(), |l| l.to_string())).collect();
    format!("{} {}", i.name, p.join(","))
}

/// Both directions: the classical relations hold in the generated rules,
/// and the generated defining instances hold in rules seeded from the
/// classical relations alone.
pub fn presentation_aw3(engine: &mut Engine) -> Suite {
    let mut s = Suite::new("aw(3) presentation", true);
    let classical = classical_aw3();
    for (name, x) in &classical {
        s.push(format!("{name} in the generated rules"), outcome(engine.check_zero(&expand_poly(x), 3)));
    }
    let polys: Vec<Poly> = classical.iter().map(|(_, p)| p.clone()).collect();
    match seed_rules_with(3, LetterOrder::default_for(3), &polys) {
        Ok(mut rs) => {
            rs.complete(engine.degree_bound, engine.max_iter);
            let specs = engine.falsifiers_for(3);
            let points = engine.points();
            for inst in defining_instances(3) {
                let v = verify_zero_at(&inst.expanded(), &rs, &specs, &points);
                s.push(format!("{} in the classical rules", instance_name(&inst)), verdict_status(v));
            }
        }
        Err(e) => s.push("classical rules", Status::Error(e.to_string())),
    }
    s
}

/// Every `r_a` and `r̄_a` preserves the defining relations.
pub fn morphism_property(n: u8, engine: &mut Engine) -> Suite {
    let mut s = Suite::new(format!("morphism property n={n}"), true);
    for a in 0..n {
        for tag in [MorphismTag::R(a), MorphismTag::RBar(a)] {
            s.absorb(&check_morphism_property(tag, n, engine));
        }
    }
    s
}

pub fn braid(n: u8, engine: &mut Engine) -> Suite {
    let rep = check_braid_relations(n, engine);
    Suite::from_report(&rep, n <= engine.rewrite_max_rank)
}

pub fn quotient(n: u8, engine: &mut Engine) -> Suite {
    let rep = check_quotient_relations(n, engine);
    Suite::from_report(&rep, n <= engine.rewrite_max_rank)
}

pub fn r_delta(n: u8, engine: &mut Engine) -> Suite {
    let rep = check_r_delta(n, engine);
    Suite::from_report(&rep, n < engine.rewrite_max_rank)
}

pub fn formula_consistency(n: u8, engine: &mut Engine) -> Suite {
    let rep = check_formula_consistency(n, engine);
    Suite::from_report(&rep, n <= engine.rewrite_max_rank)
}

pub fn centrality(n: u8, engine: &mut Engine) -> Suite {
    let mut s = Suite::new(format!("centrality n={n}"), true);
    for set in gamma_basis(n) {
        match check_centrality(set, n, engine) {
            Ok(r) => s.absorb(&r),
            Err(e) => s.push(format!("w{}", aw_core::casimir::format_subset(set)), Status::Error(e.to_string())),
        }
    }
    s
}

fn set(e: &[u8]) -> Subset {
    subset(e)
}

fn om(a: &[u8], b: &[u8], c: &[u8]) -> Poly {
    omega3(set(a), set(b), set(c)).expect("ordered parts")
}

/// The rank-four Casimir statements proved by completion with the 𝒢 order.
pub fn casimir4(engine: &mut Engine) -> Suite {
    let mut s = Suite::new("Casimir elements of aw(4)", true);
    let c34 = Poly::letter(Label::interval(3, 4));
    s.push("[W(1,2,3), C[3..4]]", outcome(engine.check_zero(&Poly::comm(&om(&[1], &[2], &[3]), &c34), 4)));
    let a = om(&[1, 2], &[3], &[4]).sub(&om(&[1], &[3], &[4])).sub(&om(&[2], &[3], &[4]));
    let b = om(&[1], &[2, 3], &[4]).sub(&om(&[1], &[2], &[4])).sub(&om(&[1], &[3], &[4]));
    let c = om(&[1], &[2], &[3, 4]).sub(&om(&[1], &[2], &[3])).sub(&om(&[1], &[2], &[4]));
    s.push("w1234 via (12,3,4) = via (1,23,4)", outcome(engine.compare(&a, &b, 4)));
    s.push("w1234 via (1,23,4) = via (1,2,34)", outcome(engine.compare(&b, &c, 4)));
    s.items.extend(centrality(4, engine).items);
    s
}

fn halves(n: u8) -> RepSpec {
    RepSpec::halves(n as usize)
}

/// `φ(ω_S) = 0` on spin ½ in every factor: symbolic in `q` when
/// `symbolic`, otherwise at the engine's evaluation points.
pub fn kernel(n: u8, symbolic: bool, engine: &Engine) -> Suite {
    let mut s = Suite::new(format!("kernel of phi n={n}"), symbolic);
    for set in gamma_basis(n) {
        let name = format!("phi(w{})", aw_core::casimir::format_subset(set));
        let w = match omega(set, None) {
            Ok(w) => w,
            Err(e) => {
                s.push(name, Status::Error(e.to_string()));
                continue;
            }
        };
        s.push(name, phi_zero(&w, &halves(n), symbolic, &engine.points()));
    }
    s
}

fn phi_zero(x: &Poly, spec: &RepSpec, symbolic: bool, points: &[BigRational]) -> Status {
    if symbolic {
        let mut re = Realization::symbolic(spec.clone());
        return match re.phi(x) {
            Ok(m) if m.is_zero() => Status::Proved,
            Ok(_) => Status::Refuted(format!("nonzero on {spec}")),
            Err(e) => Status::Error(e.to_string()),
        };
    }
    for q0 in points {
        let m = Realization::at(spec.clone(), q0.clone()).and_then(|mut re| re.phi(x));
        match m {
            Ok(m) if m.is_zero() => {}
            Ok(_) => return Status::Refuted(format!("nonzero on {spec} at q={q0}")),
            Err(e) => return Status::Error(e.to_string()),
        }
    }
    Status::Consistent
}

/// `ρ_i(φ(C_I)) = φ(r_i(C_I))` for every generator and `1 <= i < n`.
pub fn rmatrix(n: u8) -> Suite {
    let mut s = Suite::new(format!("R-matrix compatibility n={n}"), true);
    let mut re = Realization::symbolic(halves(n));
    for i in 1..n {
        for g in generators(n) {
            let name = format!("rho{i} phi(C{g}) = phi(r{i}(C{g}))");
            let res = (|| -> Result<bool, String> {
                let m = re.letter(&g).map_err(|e| e.to_string())?;
                let lhs = re.rho(i as usize, &m).map_err(|e| e.to_string())?;
                let img = apply(MorphismTag::R(i), &Poly::letter(g.clone()), n).map_err(|e| e.to_string())?;
                let rhs: Matrix<QRat> = re.phi(&img).map_err(|e| e.to_string())?;
                Ok(lhs == rhs)
            })();
            s.push(
                name,
                match res {
                    Ok(true) => Status::Proved,
                    Ok(false) => Status::Refuted("matrices differ".into()),
                    Err(e) => Status::Error(e),
                },
            );
        }
    }
    s
}

/// `r_0(ω_S)` expressed in the `ω` basis of `Γ_4` against the stated
/// matrix, and that matrix squared.
pub fn gamma4(engine: &mut Engine) -> Suite {
    let mut s = Suite::new("r0 on Gamma_4", true);
    let basis = gamma_basis(4);
    let want = r0_matrix_gamma4();
    for (j, &set) in basis.iter().enumerate() {
        let name = format!("r0(w{})", aw_core::casimir::format_subset(set));
        let img = match omega(set, None).map_err(|e| e.to_string()).and_then(|w| apply(MorphismTag::R(0), &w, 4).map_err(|e| e.to_string())) {
            Ok(p) => p,
            Err(e) => {
                s.push(name, Status::Error(e));
                continue;
            }
        };
        match express_in_gamma(&img, 4, engine) {
            Ok(v) => {
                let col = v.column(&basis);
                let expected: Vec<QRat> = (0..basis.len()).map(|i| want.get(i, j).clone()).collect();
                if col == expected {
                    s.push(name, Status::Proved);
                } else {
                    let c: Vec<String> = col.iter().map(|x| x.to_string()).collect();
                    s.push(name, Status::Refuted(format!("column [{}]", c.join(", "))));
                }
            }
            Err(e) => s.push(name, Status::Error(e.to_string())),
        }
    }
    let sq = want.mul(&want) == Matrix::identity(basis.len());
    s.push("matrix squared is the identity", if sq { Status::Proved } else { Status::Refuted("square differs".into()) });
    s
}

fn instance(n: u8, name: &str, at: &[u8]) -> Option<RelationInstance> {
    let want: Vec<Option<Label>> = at.iter().map(|&i| Some(Label::single(i))).collect();
    full_catalogue(n, Adjacency::AdjacentOnly).into_iter().find(|i| i.name == name && i.params == want)
}

/// Four-subset relations whose leading term is the cubic identity.
pub const FOUR_SUBSET_NAMED: [&str; 10] =
    ["relaw43", "relaw46", "relaw41v", "relaw45", "relaw47", "relaw49", "relaw48", "relaw410", "relaw42", "relaw44"];

fn leading_in_span(s: &mut Suite, name: String, x: &Poly, mode: Limit, order: i32, basis: &[KPoly], ok: impl Fn(&[BigRational]) -> bool) {
    let status = match racah_limit(x, mode) {
        Ok((k, lead)) if k == order => match in_span(&lead, basis) {
            Some(c) if ok(&c) => Status::Proved,
            _ => Status::Refuted(format!("h^{k} : {lead}")),
        },
        Ok((k, lead)) => Status::Refuted(format!("h^{k} : {lead}")),
        Err(e) => Status::Error(e.to_string()),
    };
    s.push(name, status);
}

/// Leading terms of the `q -> 1` limit against the Racah identities.
pub fn racah() -> Suite {
    let mut s = Suite::new("Racah limit", true);
    let l3: Vec<Label> = (1..=3).map(Label::single).collect();
    let l4: Vec<Label> = (1..=4).map(Label::single).collect();
    let t3 = [&l3[0], &l3[1], &l3[2]];
    let t4 = [&l4[0], &l4[1], &l4[2], &l4[3]];
    let nonzero = |c: &[BigRational]| c.iter().any(|x| *x != BigRational::from_integer(0.into()));
    for (name, target) in [("relaw32", rac1(t3)), ("relaw31v", rac2(t3))] {
        match instance(3, name, &[1, 2, 3]) {
            Some(i) => leading_in_span(&mut s, format!("{name} 1,2,3"), &i.symbolic, Limit::Commuting, 4, &[target], nonzero),
            None => s.push(name, Status::Error("no such instance".into())),
        }
    }
    let cub = cub0(t4);
    for name in FOUR_SUBSET_NAMED {
        for at in [[1, 2, 3, 4], [4, 3, 2, 1]] {
            let label = format!("{name} {}", at.map(|i| i.to_string()).join(","));
            match instance(4, name, &at) {
                Some(i) => leading_in_span(&mut s, label, &i.symbolic, Limit::Commuting, 3, &[cub.clone()], nonzero),
                None => s.push(label, Status::Error("no such instance".into())),
            }
        }
    }
    if let (Some(a), Some(b)) = (instance(4, "relaw41v", &[1, 2, 3, 4]), instance(4, "relaw43", &[4, 3, 2, 1])) {
        let x = a.symbolic.add(&b.symbolic);
        leading_in_span(&mut s, "relaw41v 1,2,3,4 + relaw43 4,3,2,1".into(), &x, Limit::Commuting, 4, &[sum_identity(t4), cub0(t4)], |c| {
            c[0] != BigRational::from_integer(0.into())
        });
    }
    for inst in catalogue(4, RelationFamily::Commutation, Adjacency::AdjacentOnly) {
        let letters = inst.symbolic.letters();
        let name = format!("commutation {}", instance_name(&inst));
        let [a, b] = letters.as_slice() else {
            s.push(name, Status::Error("expected two letters".into()));
            continue;
        };
        let target = KPoly::comm(&KPoly::letter(a.clone()), &KPoly::letter(b.clone()));
        let status = match racah_limit(&inst.symbolic, Limit::Free) {
            Ok((_, lead)) if lead.proportional_to(&target).is_some() => Status::Proved,
            Ok((k, lead)) => Status::Refuted(format!("h^{k} : {lead}")),
            Err(e) => Status::Error(e.to_string()),
        };
        s.push(name, status);
    }
    s
}

/// Every top-level hole choice of every label with holes gives the same
/// element, together with the commutation of hole elements with nested or
/// disjoint generators.
pub fn hole_independence(n: u8, engine: &mut Engine) -> Suite {
    let mut s = Suite::new(format!("hole independence n={n}"), true);
    for l in labels_with_holes(n).into_iter().filter(|l| l.is_increasing() && l.parts().len() <= 3) {
        let choices: Vec<Poly> = (1..l.parts().len()).filter_map(|a| expand_with_hole(&l, a).ok()).collect();
        for a in 1..choices.len() {
            s.push(format!("C{l}: hole 1 = hole {}", a + 1), outcome(engine.compare(&choices[0], &choices[a], n)));
        }
        let x = Poly::letter(l.clone());
        for g in generators(n) {
            let (m, j) = (l.mask(), g.mask());
            if m & j == 0 || m & j == j || m & j == m {
                let c = expand_poly(&Poly::comm(&x, &Poly::letter(g.clone())));
                s.push(format!("[C{l}, C{g}]"), outcome(engine.check_zero(&c, n)));
            }
        }
    }
    s
}

/// The two expansions of `C_{1,3,5}` under `φ` on spin ½ at the engine's
/// evaluation points.
pub fn c135(engine: &Engine) -> Suite {
    let mut s = Suite::new("C[1;3;5] hole choices under phi n=5", false);
    let l = Label::from_blocks(&[(1, 1), (3, 3), (5, 5)]).expect("valid label");
    match (expand_with_hole(&l, 1), expand_with_hole(&l, 2)) {
        (Ok(a), Ok(b)) => s.push("hole 1 = hole 2", phi_zero(&a.sub(&b), &halves(5), false, &engine.points())),
        (Err(e), _) | (_, Err(e)) => s.push("expansions", Status::Error(e.to_string())),
    }
    s
}

/// Inferred decreasing non-adjacent instances, against rewriting.
pub fn inferred_instances(n: u8, engine: &mut Engine) -> Suite {
    let mut s = Suite::new(format!("inferred instances n={n}"), n <= engine.rewrite_max_rank);
    for inst in full_catalogue(n, Adjacency::Generalized).into_iter().filter(|i| i.inferred) {
        s.push(instance_name(&inst), outcome(engine.check_zero(&inst.expanded(), n)));
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

/// The suites of a level, in a fixed order.
pub fn run_level(level: Level, engine: &mut Engine) -> Vec<Suite> {
    let mut out = vec![
        presentation_aw3(engine),
        morphism_property(3, engine),
        braid(3, engine),
        quotient(3, engine),
        formula_consistency(3, engine),
        centrality(3, engine),
        kernel(3, true, engine),
        rmatrix(3),
        racah(),
    ];
    if level == Level::Full {
        out.push(morphism_property(4, engine));
        out.push(braid(4, engine));
        out.push(quotient(4, engine));
        out.push(r_delta(3, engine));
        out.push(r_delta(4, engine));
        out.push(formula_consistency(4, engine));
        out.push(casimir4(engine));
        out.push(gamma4(engine));
        out.push(hole_independence(4, engine));
        out.push(inferred_instances(4, engine));
        out.push(kernel(4, true, engine));
        out.push(rmatrix(4));
        out.push(braid(5, engine));
        out.push(quotient(5, engine));
        out.push(kernel(5, false, engine));
        out.push(c135(engine));
    }
    out
}
