//! The `q -> 1` limit: `C_I = ε K_I + 1` with `ε = (q - q^-1)^2 / (q + q^-1)`,
//! expanded in `h = q - 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{expand_poly, Label, Poly, Word};
use crate::scalar::{qrat_hseries, HSeries, QRat};
use crate::uq::{Matrix, Solution};

pub mod targets;

pub const DEFAULT_PRECISION: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RacahError {
    #[error("precision must be at least 1")]
    Precision,
    #[error("series vanishes within the window; increase precision")]
    AllZero,
}

/// A noncommutative polynomial in the letters `K_I` with rational
/// coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct KPoly {
    pub terms: BTreeMap<Word, BigRational>,
}

impl KPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn letter(l: Label) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![l], BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut r = Self::zero();
        for (w, v) in &self.terms {
            r.add_term(w.clone(), v * c);
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                r.add_term(w, x * y);
            }
        }
        r
    }

    pub fn comm(a: &Self, b: &Self) -> Self {
        a.mul(b).sub(&b.mul(a))
    }

    pub fn anticomm(a: &Self, b: &Self) -> Self {
        a.mul(b).add(&b.mul(a))
    }

    /// The coefficient of the largest word, if any.
    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    /// `self = c * o` for some nonzero rational `c`.
    pub fn proportional_to(&self, o: &Self) -> Option<BigRational> {
        let (Some(a), Some(b)) = (self.leading_coefficient(), o.leading_coefficient()) else {
            return None;
        };
        let c = a / b;
        (self.sub(&o.scale(&c)).is_zero()).then_some(c)
    }
}

fn fmt_word(f: &mut fmt::Formatter<'_>, w: &Word) -> fmt::Result {
    for (k, l) in w.iter().enumerate() {
        if k > 0 {
            write!(f, "*")?;
        }
        write!(f, "K[{}]", l.body())?;
    }
    Ok(())
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            fmt_word(f, w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Noncommutative polynomial in the `K_I` with series coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesNCPoly {
    pub precision: usize,
    pub terms: BTreeMap<Word, HSeries>,
}

pub fn epsilon() -> QRat {
    let q = QRat::q();
    let qi = QRat::q_pow(-1);
    let d = &q - &qi;
    &(&d * &d) / &(&q + &qi)
}

/// Which relations the limit is taken modulo.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Limit {
    /// The free algebra on the `K_I`.
    Free,
    /// Modulo `[K_I, K_J] = 0` for disjoint or nested `I`, `J`, so that
    /// terms trivial by commutation do not count as leading.
    Commuting,
}

fn commute(a: &Label, b: &Label) -> bool {
    let (x, y) = (a.mask(), b.mask());
    x & y == 0 || x & y == x || x & y == y
}

/// The lexicographically least word equal to `w` modulo commuting letters.
pub fn canonical_word(w: &[Label]) -> Word {
    let mut rest: Vec<Label> = w.to_vec();
    let mut out = Vec::with_capacity(w.len());
    while !rest.is_empty() {
        let mut best = 0;
        for j in 1..rest.len() {
            if rest[j] < rest[best] && rest[..j].iter().all(|x| commute(x, &rest[j])) {
                best = j;
            }
        }
        out.push(rest.remove(best));
    }
    out
}

fn canonical_poly(p: &Poly) -> Poly {
    let mut r = Poly::zero();
    for (w, c) in p.terms() {
        r.add_term(canonical_word(w), c.clone());
    }
    r
}

impl KPoly {
    pub fn modulo_commutation(&self) -> KPoly {
        let mut r = KPoly::zero();
        for (w, c) in &self.terms {
            r.add_term(canonical_word(w), c.clone());
        }
        r
    }
}

/// Coefficients `c` with `x = Σ c_i basis_i` modulo commuting letters, if
/// they exist and are unique.
pub fn in_span(x: &KPoly, basis: &[KPoly]) -> Option<Vec<BigRational>> {
    let x = x.modulo_commutation();
    let basis: Vec<KPoly> = basis.iter().map(KPoly::modulo_commutation).collect();
    let mut words: Vec<&Word> = x.terms.keys().chain(basis.iter().flat_map(|b| b.terms.keys())).collect();
    words.sort();
    words.dedup();
    let coeff = |p: &KPoly, w: &Word| p.terms.get(w).cloned().unwrap_or_else(BigRational::zero);
    let a = Matrix::from_fn(words.len(), basis.len(), |i, j| coeff(&basis[j], words[i]));
    let b: Vec<BigRational> = words.iter().map(|w| coeff(&x, w)).collect();
    match a.solve(&b) {
        Solution::Unique(c) => Some(c),
        _ => None,
    }
}

/// The substitution with exact coefficients in `Q(q)`; the letters of the
/// result stand for `K_I`. Labels with holes are expanded first, so only
/// connected labels appear.
pub fn substitute_exact(x: &Poly, mode: Limit) -> Poly {
    let eps = epsilon();
    let p = expand_poly(x).map_letters(|l| Poly::letter(l.clone()).scale(&eps).add(&Poly::one()));
    match mode {
        Limit::Free => p,
        Limit::Commuting => canonical_poly(&p),
    }
}

pub fn substitute_k(x: &Poly, precision: usize, mode: Limit) -> Result<SeriesNCPoly, RacahError> {
    if precision == 0 {
        return Err(RacahError::Precision);
    }
    let mut terms = BTreeMap::new();
    for (w, c) in substitute_exact(x, mode).terms() {
        terms.insert(w.clone(), qrat_hseries(c, precision));
    }
    Ok(SeriesNCPoly { precision, terms })
}

/// The lowest order in `h` with a nonzero coefficient, and that coefficient.
pub fn leading_term(s: &SeriesNCPoly) -> Result<(i32, KPoly), RacahError> {
    let order = s.terms.values().filter_map(|c| c.leading().map(|(k, _)| k)).min().ok_or(RacahError::AllZero)?;
    let mut p = KPoly::zero();
    for (w, c) in &s.terms {
        p.add_term(w.clone(), c.coeff(order));
    }
    Ok((order, p))
}

/// The same leading term read off the exact coefficients' orders at `q = 1`.
pub fn leading_term_exact(x: &Poly, mode: Limit) -> Option<(i32, KPoly)> {
    let sub = substitute_exact(x, mode);
    let orders: Vec<(Word, i32, BigRational)> =
        sub.terms().filter_map(|(w, c)| c.order_at_one().map(|(k, v)| (w.clone(), k, v))).collect();
    let order = orders.iter().map(|t| t.1).min()?;
    let mut p = KPoly::zero();
    for (w, k, v) in orders {
        if k == order {
            p.add_term(w, v);
        }
    }
    Some((order, p))
}

/// Leading term of `x` at the default precision.
pub fn racah_limit(x: &Poly, mode: Limit) -> Result<(i32, KPoly), RacahError> {
    leading_term(&substitute_k(x, DEFAULT_PRECISION, mode)?)
}

#[cfg(test)]
mod tests;
