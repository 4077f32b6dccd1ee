//! Seeding pair rules from the relation catalogue, and bounded completion.

use std::collections::HashSet;

use super::{LetterOrder, Mono, RPoly, RewriteError, RuleSet, Word};
use crate::algebra::Poly;
use crate::relations::{catalogue, Adjacency, RelationFamily};
use crate::scalar::QRat;

/// Outcome of a completion run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompletionReport {
    pub rounds: usize,
    pub added: usize,
    pub new_rules: usize,
    pub fixpoint: bool,
}

/// Rules from every relation family in generalized mode.
pub fn seed_rules(n: u8, order: LetterOrder) -> Result<RuleSet, RewriteError> {
    seed_rules_from(n, order, &RelationFamily::ALL, Adjacency::Generalized)
}

/// Rules from the given families only.
pub fn seed_rules_from(
    n: u8,
    order: LetterOrder,
    families: &[RelationFamily],
    adjacency: Adjacency,
) -> Result<RuleSet, RewriteError> {
    let mut rels = Vec::new();
    for &f in families {
        rels.extend(catalogue(n, f, adjacency).into_iter().map(|i| i.symbolic));
    }
    seed_rules_with(n, order, &rels)
}

/// Rules from an explicit list of relations `p = 0`.
pub fn seed_rules_with(n: u8, order: LetterOrder, relations: &[Poly]) -> Result<RuleSet, RewriteError> {
    if !(3..=5).contains(&n) {
        return Err(RewriteError::Rank(n));
    }
    if order.n != n {
        return Err(RewriteError::Order(format!("order is for n={}, not n={n}", order.n)));
    }
    let mut rs = RuleSet::empty(order);
    let mut pending = Vec::new();
    for p in relations {
        let r = rs.to_rpoly(p)?;
        if !r.is_zero() {
            pending.push(r);
        }
    }
    loop {
        let mut ordered: Vec<RPoly> = pending.iter().map(|p| rs.order_poly(p)).filter(|p| !p.is_zero()).collect();
        ordered.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0).then(a.len().cmp(&b.len())));
        let mut progress = false;
        let mut rest = Vec::new();
        for p in ordered {
            match rs.rule_candidate(&p) {
                Some((x, y)) if !rs.has_rule(x, y) => {
                    let rhs = rule_rhs(&p);
                    rs.set_rule(x, y, rhs);
                    progress = true;
                }
                _ => rest.push(p),
            }
        }
        pending = rest;
        if !progress {
            break;
        }
    }
    let mut candidates = pending;
    candidates.extend(rs.triple_overlaps());
    let mut candidates: Vec<RPoly> = candidates.iter().map(|p| rs.order_poly(p)).filter(|p| !p.is_zero()).collect();
    candidates.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    for c in candidates {
        rs.absorb(c);
    }
    rs.recompute_gaps();
    Ok(rs)
}

/// `-(p - lt)/lc` for a polynomial whose leading term becomes the lhs.
fn rule_rhs(p: &RPoly) -> RPoly {
    let (lm, lc) = p.leading().unwrap();
    let f = -lc.inv().expect("nonzero leading coefficient");
    let mut r = RPoly::zero();
    for (m, c) in &p.terms {
        if m != lm {
            r.add_term(m.clone(), c * &f);
        }
    }
    r
}

impl RuleSet {
    /// The out-of-order pair heading an ordered `p`, if it can become a rule.
    fn rule_candidate(&self, p: &RPoly) -> Option<(u8, u8)> {
        let lm = p.leading()?.0;
        if lm.w.len() == 2 && lm.w[0] > lm.w[1] && lm.z.iter().all(|&e| e == 0) {
            Some((lm.w[0], lm.w[1]))
        } else {
            None
        }
    }

    /// Reduce `p` and keep it: as a rule if it fills a gap, else as a
    /// linear relation. Returns whether anything changed.
    fn absorb(&mut self, p: RPoly) -> AbsorbOutcome {
        let r = self.reduce_r(&p);
        if r.is_zero() {
            return AbsorbOutcome::Nothing;
        }
        if let Some((x, y)) = self.rule_candidate(&r) {
            if !self.has_rule(x, y) {
                let rhs = rule_rhs(&r);
                self.set_rule(x, y, rhs);
                self.renormalize();
                return AbsorbOutcome::Rule;
            }
        }
        self.push_linear(r);
        AbsorbOutcome::Linear
    }

    /// Differences of the two ways of ordering `X·Y·Z` for `X > Y > Z`.
    fn triple_overlaps(&self) -> Vec<RPoly> {
        let k = self.order.letters.len() as u8;
        let mut out = Vec::new();
        for x in 0..k {
            for y in 0..x {
                let Some(xy) = self.rules.get(&(x, y)) else { continue };
                for z in 0..y {
                    if !self.has_rule(y, z) {
                        continue;
                    }
                    let a = self.order_concat(&[x, y, z], &[]);
                    let b = self.right_mul(xy, &[z]);
                    let mut d = a;
                    d.add_scaled(&b, &-QRat::one());
                    if !d.is_zero() {
                        out.push(d);
                    }
                }
            }
        }
        out
    }

    fn letter_weight(&self, x: u8) -> u16 {
        self.weights[x as usize]
    }

    /// `u·g_i` with `u` chosen so the leading word covers `target` counts.
    fn lift(&self, gi: usize, target: &[u8], tz: &[u8; super::MAX_CENTRAL]) -> Option<RPoly> {
        let g = &self.linear[gi];
        let mut u = Word::new();
        for (l, (&t, &c)) in target.iter().zip(&g.counts).enumerate() {
            for _ in 0..(t - c) {
                u.push(l as u8);
            }
        }
        let mut e = [0u8; super::MAX_CENTRAL];
        for i in 0..e.len() {
            e[i] = tz[i] - g.lm.z[i];
        }
        let t = self.left_mul(&u, &g.poly);
        let mut s = RPoly::zero();
        s.add_scaled_z(&t, &QRat::one(), &e);
        Some(s)
    }

    fn spair(&self, i: usize, j: usize) -> Option<RPoly> {
        let (gi, gj) = (&self.linear[i], &self.linear[j]);
        let counts: Vec<u8> = gi.counts.iter().zip(&gj.counts).map(|(a, b)| *a.max(b)).collect();
        let mut z = [0u8; super::MAX_CENTRAL];
        for k in 0..z.len() {
            z[k] = gi.lm.z[k].max(gj.lm.z[k]);
        }
        let tw: u16 = counts.iter().enumerate().map(|(l, &c)| c as u16 * self.letter_weight(l as u8)).sum::<u16>()
            + z.iter().map(|&e| e as u16).sum::<u16>();
        if tw > self.degree_bound {
            return None;
        }
        let a = self.lift(i, &counts, &z)?;
        let b = self.lift(j, &counts, &z)?;
        let (la, ca) = a.leading()?;
        let (lb, cb) = b.leading()?;
        if la != lb {
            return None;
        }
        let mut d = a.scale(&ca.inv().ok()?);
        d.add_scaled(&b, &-cb.inv().ok()?);
        Some(d)
    }

    fn right_closure(&self, i: usize, x: u8) -> Option<RPoly> {
        let g = &self.linear[i];
        if g.lm.total_weight() + self.letter_weight(x) > self.degree_bound {
            return None;
        }
        Some(self.right_mul(&g.poly, &[x]))
    }

    /// Bounded completion: S-pairs and right multiples of the linear
    /// relations up to total weight `degree_bound`, in at most `max_iter`
    /// rounds.
    pub fn complete(&mut self, degree_bound: u16, max_iter: usize) -> CompletionReport {
        self.degree_bound = degree_bound;
        self.max_iter = max_iter;
        let mut report = CompletionReport::default();
        let mut pairs_done: HashSet<(Mono, Mono)> = HashSet::new();
        let mut closed: HashSet<Mono> = HashSet::new();
        self.incomplete = false;
        loop {
            if report.rounds == max_iter {
                self.incomplete = true;
                break;
            }
            report.rounds += 1;
            let mut items = Vec::new();
            let snapshot: Vec<Mono> = self.linear.iter().map(|g| g.lm.clone()).collect();
            for i in 0..snapshot.len() {
                if closed.insert(snapshot[i].clone()) {
                    for x in 0..self.order.letters.len() as u8 {
                        if let Some(p) = self.right_closure(i, x) {
                            items.push(p);
                        }
                    }
                }
                for j in 0..i {
                    if pairs_done.insert((snapshot[j].clone(), snapshot[i].clone())) {
                        if let Some(p) = self.spair(j, i) {
                            items.push(p);
                        }
                    }
                }
            }
            let mut changed = false;
            for p in items {
                match self.absorb(p) {
                    AbsorbOutcome::Nothing => {}
                    AbsorbOutcome::Linear => {
                        report.added += 1;
                        changed = true;
                    }
                    AbsorbOutcome::Rule => {
                        report.new_rules += 1;
                        changed = true;
                        // leading monomials may have moved
                        pairs_done.clear();
                        closed.clear();
                    }
                }
            }
            if !changed {
                report.fixpoint = true;
                break;
            }
        }
        self.recompute_gaps();
        self.completed_at = Some(degree_bound);
        report
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum AbsorbOutcome {
    Nothing,
    Linear,
    Rule,
}
