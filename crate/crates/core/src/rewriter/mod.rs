//! Normal ordering modulo the relations of aw(n), bounded completion, and a
//! three-valued identity verifier.

mod cache;
mod complete;
mod mono;
mod verify;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::algebra::{central_label, Label, Poly};
use crate::relations::lower;
use crate::scalar::{CentralPoly, QRat};
use crate::uq::UqError;
use crate::AbsorbedPoly;

pub use cache::{load_or_complete, CacheError};
pub use complete::{seed_rules, seed_rules_from, seed_rules_with, CompletionReport};
pub use mono::{LetterOrder, Mono, RPoly, Word, MAX_CENTRAL};
pub use verify::{
    cache_file_name, falsify, falsify_at, random_points, verify_zero, verify_zero_at, Engine, Outcome, Verdict,
};

#[derive(Debug, Error)]
pub enum RewriteError {
    #[error("rank {0} is outside the rewriting range 3..=5")]
    Rank(u8),
    #[error("{0} is not a letter of the rank-{1} alphabet")]
    UnknownLetter(Label, u8),
    #[error("letter order: {0}")]
    Order(String),
    #[error(transparent)]
    Uq(#[from] UqError),
}

/// A rule `X·Y -> rhs`, written over labels.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lhs: Vec<Label>,
    pub rhs: AbsorbedPoly,
}

#[derive(Clone, Debug)]
struct LinRel {
    poly: RPoly,
    lm: Mono,
    counts: Vec<u8>,
}

type ReducerKey = (usize, Word, Word);

pub struct RuleSet {
    pub order: LetterOrder,
    weights: Vec<u16>,
    rules: BTreeMap<(u8, u8), RPoly>,
    linear: Vec<LinRel>,
    pub degree_bound: u16,
    pub max_iter: usize,
    /// Set when completion stopped at the iteration cap with work pending.
    pub incomplete: bool,
    /// Out-of-order pairs with no rule.
    pub gaps: Vec<(Label, Label)>,
    completed_at: Option<u16>,
    memo: Mutex<HashMap<(u8, Word), Arc<RPoly>>>,
    reducers: Mutex<HashMap<ReducerKey, Option<Arc<RPoly>>>>,
}

impl Clone for RuleSet {
    fn clone(&self) -> Self {
        RuleSet {
            order: self.order.clone(),
            weights: self.weights.clone(),
            rules: self.rules.clone(),
            linear: self.linear.clone(),
            degree_bound: self.degree_bound,
            max_iter: self.max_iter,
            incomplete: self.incomplete,
            gaps: self.gaps.clone(),
            completed_at: self.completed_at,
            memo: Mutex::new(HashMap::new()),
            reducers: Mutex::new(HashMap::new()),
        }
    }
}

impl std::fmt::Debug for RuleSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RuleSet")
            .field("n", &self.order.n)
            .field("rules", &self.rules.len())
            .field("linear", &self.linear.len())
            .field("degree_bound", &self.degree_bound)
            .field("incomplete", &self.incomplete)
            .field("gaps", &self.gaps.len())
            .finish()
    }
}

pub const DEFAULT_DEGREE_BOUND: u16 = 6;
pub const DEFAULT_MAX_ITER: usize = 10;

impl RuleSet {
    pub fn empty(order: LetterOrder) -> Self {
        let weights = order.weights();
        RuleSet {
            order,
            weights,
            rules: BTreeMap::new(),
            linear: Vec::new(),
            degree_bound: DEFAULT_DEGREE_BOUND,
            max_iter: DEFAULT_MAX_ITER,
            incomplete: false,
            gaps: Vec::new(),
            completed_at: None,
            memo: Mutex::new(HashMap::new()),
            reducers: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> u8 {
        self.order.n
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    pub fn linear_count(&self) -> usize {
        self.linear.len()
    }

    /// The bound of the last completion run, if any.
    pub fn completed_at(&self) -> Option<u16> {
        self.completed_at
    }

    pub fn mark_completed(&mut self, bound: u16) {
        self.completed_at = Some(bound);
        self.degree_bound = bound;
    }

    fn nletters(&self) -> usize {
        self.order.letters.len()
    }

    pub(crate) fn mono(&self, w: Word, z: [u8; MAX_CENTRAL]) -> Mono {
        Mono::new(w, z, &self.weights)
    }

    pub fn has_rule(&self, x: u8, y: u8) -> bool {
        self.rules.contains_key(&(x, y))
    }

    /// Rules in lhs order.
    pub fn rules(&self) -> Vec<RewriteRule> {
        self.rules
            .iter()
            .map(|(&(x, y), rhs)| RewriteRule {
                lhs: vec![self.order.letters[x as usize].clone(), self.order.letters[y as usize].clone()],
                rhs: self.to_absorbed(rhs),
            })
            .collect()
    }

    pub fn rule_rhs(&self, x: &Label, y: &Label) -> Option<Poly> {
        let (a, b) = (self.order.index_of(x)?, self.order.index_of(y)?);
        self.rules.get(&(a, b)).map(|r| self.to_poly(r))
    }

    pub fn linear_relations(&self) -> Vec<Poly> {
        self.linear.iter().map(|g| self.to_poly(&g.poly)).collect()
    }

    /// Install `x·y -> rhs` with `rhs` given over labels. The rule must
    /// strictly decrease the order.
    pub fn insert_rule(&mut self, x: &Label, y: &Label, rhs: &Poly) -> Result<(), RewriteError> {
        let n = self.n();
        let a = self.order.index_of(x).ok_or_else(|| RewriteError::UnknownLetter(x.clone(), n))?;
        let b = self.order.index_of(y).ok_or_else(|| RewriteError::UnknownLetter(y.clone(), n))?;
        let r = self.to_rpoly(rhs)?;
        let lhs = self.mono([a, b].into_iter().collect(), [0; MAX_CENTRAL]);
        if a <= b || r.terms.keys().any(|m| *m >= lhs) {
            return Err(RewriteError::Order(format!("{x}*{y} -> ... does not decrease the order")));
        }
        self.set_rule(a, b, r);
        Ok(())
    }

    /// Append a linear relation, reduced and made monic; no-op if it reduces to 0.
    pub fn insert_linear(&mut self, p: &Poly) -> Result<bool, RewriteError> {
        let r = self.to_rpoly(p)?;
        let r = self.reduce_r(&r);
        Ok(self.push_linear(r))
    }

    fn set_rule(&mut self, a: u8, b: u8, rhs: RPoly) {
        self.rules.insert((a, b), rhs);
        self.memo.lock().unwrap().clear();
        self.reducers.lock().unwrap().clear();
    }

    pub(crate) fn push_linear(&mut self, r: RPoly) -> bool {
        if r.is_zero() {
            return false;
        }
        let r = r.monic();
        let lm = r.leading().unwrap().0.clone();
        let mut counts = vec![0u8; self.nletters()];
        for &l in &lm.w {
            counts[l as usize] += 1;
        }
        self.linear.push(LinRel { poly: r, lm, counts });
        true
    }

    pub(crate) fn recompute_gaps(&mut self) {
        let k = self.nletters() as u8;
        self.gaps = (0..k)
            .flat_map(|x| (0..x).map(move |y| (x, y)))
            .filter(|p| !self.rules.contains_key(p))
            .map(|(x, y)| (self.order.letters[x as usize].clone(), self.order.letters[y as usize].clone()))
            .collect();
    }

    /// Convert to the rewriting alphabet: decreasing labels are eliminated and
    /// central letters absorbed.
    pub fn to_rpoly(&self, p: &Poly) -> Result<RPoly, RewriteError> {
        let n = self.n();
        let low = lower(p).absorb_central(n);
        let mut out = RPoly::zero();
        for (w, cp) in low.terms() {
            let mut iw = Word::new();
            for l in w {
                iw.push(self.order.index_of(l).ok_or_else(|| RewriteError::UnknownLetter(l.clone(), n))?);
            }
            for (e, c) in &cp.terms {
                let mut z = [0u8; MAX_CENTRAL];
                for (i, &k) in e.iter().enumerate() {
                    z[i] = k;
                }
                out.add_term(self.mono(iw.clone(), z), c.clone());
            }
        }
        Ok(out)
    }

    pub fn to_absorbed(&self, r: &RPoly) -> AbsorbedPoly {
        let mut out = AbsorbedPoly::zero();
        for (m, c) in &r.terms {
            let w: Vec<Label> = m.w.iter().map(|&i| self.order.letters[i as usize].clone()).collect();
            let mut cp = CentralPoly::zero();
            let mut e: Vec<u8> = m.z.to_vec();
            while e.last() == Some(&0) {
                e.pop();
            }
            cp.add_term(e, c);
            out.add_term(w, cp);
        }
        out
    }

    pub fn to_poly(&self, r: &RPoly) -> Poly {
        let n = self.n();
        let mut out = Poly::zero();
        for (m, c) in &r.terms {
            let mut w = Vec::new();
            for (i, &k) in m.z.iter().enumerate() {
                for _ in 0..k {
                    w.push(central_label(i, n));
                }
            }
            w.extend(m.w.iter().map(|&i| self.order.letters[i as usize].clone()));
            out.add_term(w, c.clone());
        }
        out
    }

    /// Ordered form of `x·w` for an irreducible word `w`.
    fn mul_letter(&self, x: u8, w: &[u8]) -> Arc<RPoly> {
        let rule = match w.first() {
            Some(&y) if x > y => self.rules.get(&(x, y)),
            _ => None,
        };
        let Some(rule) = rule else {
            let mut nw = Word::with_capacity(w.len() + 1);
            nw.push(x);
            nw.extend_from_slice(w);
            return Arc::new(RPoly::monomial(self.mono(nw, [0; MAX_CENTRAL]), QRat::one()));
        };
        let key = (x, Word::from_slice(w));
        if let Some(r) = self.memo.lock().unwrap().get(&key) {
            return r.clone();
        }
        let mut out = RPoly::zero();
        let rest = &w[1..];
        for (m, c) in &rule.terms {
            let t = self.order_concat(&m.w, rest);
            out.add_scaled_z(&t, c, &m.z);
        }
        let out = Arc::new(out);
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Ordered form of `u·v` for an irreducible word `v`.
    fn order_concat(&self, u: &[u8], v: &[u8]) -> RPoly {
        let mut acc = RPoly::monomial(self.mono(Word::from_slice(v), [0; MAX_CENTRAL]), QRat::one());
        for &x in u.iter().rev() {
            let mut next = RPoly::zero();
            for (m, c) in &acc.terms {
                next.add_scaled_z(&self.mul_letter(x, &m.w), c, &m.z);
            }
            acc = next;
        }
        acc
    }

    /// Left-multiply an ordered polynomial by the word `u`.
    fn left_mul(&self, u: &[u8], p: &RPoly) -> RPoly {
        if u.is_empty() {
            return p.clone();
        }
        let mut out = RPoly::zero();
        for (m, c) in &p.terms {
            out.add_scaled_z(&self.order_concat(u, &m.w), c, &m.z);
        }
        out
    }

    /// Right-multiply an ordered polynomial by the irreducible word `v`.
    fn right_mul(&self, p: &RPoly, v: &[u8]) -> RPoly {
        if v.is_empty() {
            return p.clone();
        }
        let mut out = RPoly::zero();
        for (m, c) in &p.terms {
            out.add_scaled_z(&self.order_concat(&m.w, v), c, &m.z);
        }
        out
    }

    /// Rewrite every word into ordered form using the pair rules only.
    pub fn order_poly(&self, p: &RPoly) -> RPoly {
        let mut out = RPoly::zero();
        for (m, c) in &p.terms {
            out.add_scaled_z(&self.order_concat(&m.w, &[]), c, &m.z);
        }
        out
    }

    /// `z^e · a·g·b` in ordered form, if its leading monomial is `m`.
    fn reducer(&self, gi: usize, a: &[u8], b: &[u8], m: &Mono) -> Option<Arc<RPoly>> {
        let key = (gi, Word::from_slice(a), Word::from_slice(b));
        let cached = self.reducers.lock().unwrap().get(&key).cloned();
        let t = match cached {
            Some(t) => t,
            None => {
                let g = &self.linear[gi].poly;
                let t = self.left_mul(a, &self.right_mul(g, b));
                let t = Some(Arc::new(t));
                self.reducers.lock().unwrap().insert(key, t.clone());
                t
            }
        }?;
        let lm = t.leading()?.0;
        let mut e = [0u8; MAX_CENTRAL];
        for i in 0..MAX_CENTRAL {
            e[i] = m.z[i].checked_sub(lm.z[i])?;
        }
        if lm.with_z(&e) == *m {
            if e.iter().all(|&x| x == 0) {
                Some(t)
            } else {
                let mut s = RPoly::zero();
                s.add_scaled_z(&t, &QRat::one(), &e);
                Some(Arc::new(s))
            }
        } else {
            None
        }
    }

    fn find_reducer(&self, m: &Mono, counts: &[u8]) -> Option<Arc<RPoly>> {
        for (gi, g) in self.linear.iter().enumerate() {
            if g.lm.total_weight() > m.total_weight()
                || g.counts.iter().zip(counts).any(|(a, b)| a > b)
                || g.lm.z.iter().zip(&m.z).any(|(a, b)| a > b)
            {
                continue;
            }
            let k = g.lm.w.len();
            for i in 0..=(m.w.len() - k) {
                if m.w[i..i + k] == g.lm.w[..] {
                    if let Some(t) = self.reducer(gi, &m.w[..i], &m.w[i + k..], m) {
                        return Some(t);
                    }
                }
            }
            let mut rest = counts.to_vec();
            for (r, c) in rest.iter_mut().zip(&g.counts) {
                *r -= c;
            }
            let u: Word = rest.iter().enumerate().flat_map(|(l, &c)| std::iter::repeat(l as u8).take(c as usize)).collect();
            if let Some(t) = self.reducer(gi, &u, &[], m) {
                return Some(t);
            }
        }
        None
    }

    /// Normal form of an ordered polynomial modulo the linear relations.
    pub(crate) fn nf_linear(&self, p: RPoly) -> RPoly {
        if self.linear.is_empty() {
            return p;
        }
        let mut p = p;
        let mut out = RPoly::zero();
        let mut counts = vec![0u8; self.nletters()];
        while let Some((m, c)) = p.terms.pop_last() {
            counts.iter_mut().for_each(|x| *x = 0);
            for &l in &m.w {
                counts[l as usize] += 1;
            }
            match self.find_reducer(&m, &counts) {
                Some(t) => {
                    let (_, lt) = t.leading().unwrap();
                    let f = -(&c / lt);
                    for (tm, tc) in t.terms.iter().rev().skip(1) {
                        p.add_term(tm.clone(), tc * &f);
                    }
                }
                None => {
                    out.terms.insert(m, c);
                }
            }
        }
        out
    }

    pub fn reduce_r(&self, p: &RPoly) -> RPoly {
        self.nf_linear(self.order_poly(p))
    }

    /// Normal form of `x`, returned over labels with central letters in front.
    pub fn reduce(&self, x: &Poly) -> Result<Poly, RewriteError> {
        Ok(self.to_poly(&self.reduce_r(&self.to_rpoly(x)?)))
    }

    /// Re-order every linear relation after the rules changed, dropping those
    /// that become dependent.
    pub(crate) fn renormalize(&mut self) {
        let old = std::mem::take(&mut self.linear);
        self.reducers.lock().unwrap().clear();
        for g in old {
            let r = self.reduce_r(&g.poly);
            self.push_linear(r);
        }
    }
}

#[cfg(test)]
mod tests;
