//! The three-valued verifier.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{load_or_complete, seed_rules, LetterOrder, RuleSet, DEFAULT_DEGREE_BOUND, DEFAULT_MAX_ITER};
use crate::algebra::Poly;
use crate::uq::{Realization, RepSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    ProvedZero,
    /// `φ(x)` is a nonzero matrix on `spec` at `q = q0`.
    ProvedNonzero { spec: RepSpec, q0: BigRational },
    Inconclusive,
}

impl Verdict {
    pub fn is_zero(&self) -> bool {
        matches!(self, Verdict::ProvedZero)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ProvedZero => write!(f, "ProvedZero"),
            Verdict::ProvedNonzero { spec, q0 } => write!(f, "ProvedNonzero (spins {spec}, q={q0})"),
            Verdict::Inconclusive => write!(f, "Inconclusive"),
        }
    }
}

/// `count` distinct rationals in `(1, 2)` with denominators at most 100.
pub fn random_points(seed: u64, count: usize) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    while out.len() < count {
        let d: i64 = rng.gen_range(2..=100);
        let k: i64 = rng.gen_range(1..d);
        let q0 = BigRational::new(BigInt::from(d + k), BigInt::from(d));
        if !out.contains(&q0) {
            out.push(q0);
        }
    }
    out
}

/// Zero by rewriting, nonzero by a representation, or neither.
pub fn verify_zero(x: &Poly, rules: &RuleSet, falsifiers: &[RepSpec], seed: u64) -> Verdict {
    verify_zero_at(x, rules, falsifiers, &random_points(seed, 2))
}

pub fn verify_zero_at(x: &Poly, rules: &RuleSet, falsifiers: &[RepSpec], points: &[BigRational]) -> Verdict {
    if let Ok(r) = rules.to_rpoly(x) {
        if rules.reduce_r(&r).is_zero() {
            return Verdict::ProvedZero;
        }
    }
    match falsify_at(x, falsifiers, points) {
        Some((spec, q0)) => Verdict::ProvedNonzero { spec, q0 },
        None => Verdict::Inconclusive,
    }
}

/// A representation and point where `φ(x) != 0`, if the search finds one.
pub fn falsify(x: &Poly, falsifiers: &[RepSpec], seed: u64) -> Option<(RepSpec, BigRational)> {
    falsify_at(x, falsifiers, &random_points(seed, 2))
}

pub fn falsify_at(x: &Poly, falsifiers: &[RepSpec], points: &[BigRational]) -> Option<(RepSpec, BigRational)> {
    for spec in falsifiers {
        for q0 in points.iter().cloned() {
            let Ok(mut real) = Realization::at(spec.clone(), q0.clone()) else { continue };
            if let Ok(m) = real.phi(x) {
                if !m.is_zero() {
                    return Some((spec.clone(), q0));
                }
            }
        }
    }
    None
}

/// How an identity was settled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Both sides are the same polynomial.
    Syntactic,
    ProvedZero,
    /// Not proved, but zero under every falsifier tried.
    RepConsistent,
    ProvedNonzero { spec: RepSpec, q0: BigRational },
    /// The identity could not be set up, e.g. a map left its domain.
    Error(String),
}

impl Outcome {
    pub fn is_proved(&self) -> bool {
        matches!(self, Outcome::Syntactic | Outcome::ProvedZero)
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Outcome::ProvedNonzero { .. } | Outcome::Error(_))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Syntactic => write!(f, "syntactic"),
            Outcome::ProvedZero => write!(f, "ProvedZero"),
            Outcome::RepConsistent => write!(f, "rep-consistent"),
            Outcome::ProvedNonzero { spec, q0 } => write!(f, "ProvedNonzero (spins {spec}, q={q0})"),
            Outcome::Error(e) => write!(f, "error: {e}"),
        }
    }
}

/// File name of the cached rule set for rank `n` and a degree bound.
pub fn cache_file_name(n: u8, degree_bound: u16) -> String {
    format!("aw{n}-deg{degree_bound}.awcache")
}

/// Rule sets per rank, built on demand, plus the falsifier policy.
pub struct Engine {
    rules: BTreeMap<u8, RuleSet>,
    pub degree_bound: u16,
    pub max_iter: usize,
    pub seed: u64,
    /// Ranks above this are checked by representations only.
    pub rewrite_max_rank: u8,
    pub falsifiers: BTreeMap<u8, Vec<RepSpec>>,
    /// Evaluation points for falsification; empty means two seeded points.
    pub eval_q: Vec<BigRational>,
    /// Completed rule sets are read from and written to this directory.
    pub cache_dir: Option<PathBuf>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            rules: BTreeMap::new(),
            degree_bound: DEFAULT_DEGREE_BOUND,
            max_iter: DEFAULT_MAX_ITER,
            seed: 0,
            rewrite_max_rank: 4,
            falsifiers: BTreeMap::new(),
            eval_q: Vec::new(),
            cache_dir: None,
        }
    }
}

impl Engine {
    pub fn new(seed: u64) -> Self {
        Engine { seed, ..Default::default() }
    }

    /// Use a prepared rule set for its rank.
    pub fn insert_rules(&mut self, rs: RuleSet) {
        self.rules.insert(rs.n(), rs);
    }

    /// The completed rule set at rank `n`, if rewriting is enabled there.
    pub fn rules(&mut self, n: u8) -> Option<&RuleSet> {
        if !self.rules.contains_key(&n) {
            if !(3..=self.rewrite_max_rank.min(5)).contains(&n) {
                return None;
            }
            let rs = match &self.cache_dir {
                Some(dir) => {
                    let path = dir.join(cache_file_name(n, self.degree_bound));
                    match load_or_complete(&path, n, self.degree_bound, self.max_iter) {
                        Ok((rs, _)) => rs,
                        Err(_) => {
                            let _ = std::fs::remove_file(&path);
                            load_or_complete(&path, n, self.degree_bound, self.max_iter).ok()?.0
                        }
                    }
                }
                None => {
                    let mut rs = seed_rules(n, LetterOrder::default_for(n)).ok()?;
                    rs.complete(self.degree_bound, self.max_iter);
                    rs
                }
            };
            self.rules.insert(n, rs);
        }
        self.rules.get(&n)
    }

    pub fn falsifiers_for(&self, n: u8) -> Vec<RepSpec> {
        self.falsifiers.get(&n).cloned().unwrap_or_else(|| vec![RepSpec::halves(n as usize)])
    }

    pub fn points(&self) -> Vec<BigRational> {
        if self.eval_q.is_empty() {
            random_points(self.seed, 2)
        } else {
            self.eval_q.clone()
        }
    }

    pub fn verify(&mut self, x: &Poly, n: u8) -> Verdict {
        let specs = self.falsifiers_for(n);
        let points = self.points();
        match self.rules(n) {
            Some(rs) => verify_zero_at(x, rs, &specs, &points),
            None => match falsify_at(x, &specs, &points) {
                Some((spec, q0)) => Verdict::ProvedNonzero { spec, q0 },
                None => Verdict::Inconclusive,
            },
        }
    }

    /// `a = b` in `aw(n)`.
    pub fn compare(&mut self, a: &Poly, b: &Poly, n: u8) -> Outcome {
        if a == b {
            return Outcome::Syntactic;
        }
        self.check_zero(&a.sub(b), n)
    }

    pub fn check_zero(&mut self, x: &Poly, n: u8) -> Outcome {
        if x.is_zero() {
            return Outcome::Syntactic;
        }
        match self.verify(x, n) {
            Verdict::ProvedZero => Outcome::ProvedZero,
            Verdict::ProvedNonzero { spec, q0 } => Outcome::ProvedNonzero { spec, q0 },
            Verdict::Inconclusive => Outcome::RepConsistent,
        }
    }
}
