//! Noncommutative polynomials over label letters.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{CentralPoly, QRat};

use super::Label;

/// A monomial; the empty word is the unit `C_∅ = 1`.
pub type Word = Vec<Label>;

/// Coefficient rings for [`NCPoly`].
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_qrat(x: &QRat) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, c: &QRat) -> Self;
}

impl Coeff for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
    fn from_qrat(x: &QRat) -> Self {
        x.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, c: &QRat) -> Self {
        self * c
    }
}

impl Coeff for CentralPoly {
    fn zero() -> Self {
        CentralPoly::zero()
    }
    fn is_zero(&self) -> bool {
        CentralPoly::is_zero(self)
    }
    fn from_qrat(x: &QRat) -> Self {
        CentralPoly::constant(x.clone())
    }
    fn add(&self, o: &Self) -> Self {
        CentralPoly::add(self, o)
    }
    fn neg(&self) -> Self {
        CentralPoly::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        CentralPoly::mul(self, o)
    }
    fn scale(&self, c: &QRat) -> Self {
        CentralPoly::scale(self, c)
    }
}

/// A finite sum of words with nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct NCPoly<C: Coeff = QRat> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Default for NCPoly<C> {
    fn default() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> NCPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::from_qrat(&QRat::one()))
    }

    pub fn constant(c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn scalar(c: &QRat) -> Self {
        Self::constant(C::from_qrat(c))
    }

    pub fn letter(l: Label) -> Self {
        Self::monomial(vec![l], C::from_qrat(&QRat::one()))
    }

    pub fn monomial(w: Word, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[Label]) -> Option<&C> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
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
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.neg());
        }
        r
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, v)| (w.clone(), v.scale(c))).collect() }
    }

    pub fn scale_coeff(&self, c: &C) -> Self {
        let mut r = Self::zero();
        for (w, v) in &self.terms {
            r.add_term(w.clone(), v.mul(c));
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                r.add_term(w, c1.mul(c2));
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `AB - BA`.
    pub fn comm(a: &Self, b: &Self) -> Self {
        a.mul(b).sub(&b.mul(a))
    }

    /// `[A, B]_q = (q AB - q^{-1} BA) / (q - q^{-1})`.
    pub fn qcomm(a: &Self, b: &Self) -> Self {
        let d = (&QRat::q() - &QRat::q_pow(-1)).inv().unwrap();
        a.mul(b)
            .scale(&(&QRat::q() * &d))
            .sub(&b.mul(a).scale(&(&QRat::q_pow(-1) * &d)))
    }

    /// `[A, B]_{q^{-1}} = [B, A]_q`.
    pub fn qcommbar(a: &Self, b: &Self) -> Self {
        Self::qcomm(b, a)
    }

    /// Maximal word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Word reversal with every letter's parts reversed.
    pub fn up(&self) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            let nw: Word = w.iter().rev().map(|l| l.reversed()).collect();
            r.add_term(nw, c.clone());
        }
        r
    }

    /// Multiplicative extension of a letter map.
    pub fn map_letters(&self, mut f: impl FnMut(&Label) -> Self) -> Self {
        let mut cache: BTreeMap<Label, Self> = BTreeMap::new();
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for l in w {
                if !cache.contains_key(l) {
                    let img = f(l);
                    cache.insert(l.clone(), img);
                }
                acc = acc.mul(&cache[l]);
                if acc.is_zero() {
                    break;
                }
            }
            r = r.add(&acc);
        }
        r
    }

    /// Every distinct letter occurring.
    pub fn letters(&self) -> Vec<Label> {
        let mut s: Vec<Label> = self.terms.keys().flatten().cloned().collect();
        s.sort();
        s.dedup();
        s
    }
}

impl NCPoly<QRat> {
    /// Move central letters into the coefficient ring.
    pub fn absorb_central(&self, n: u8) -> NCPoly<CentralPoly> {
        let mut r = NCPoly::<CentralPoly>::zero();
        for (w, c) in &self.terms {
            let mut cp = CentralPoly::constant(c.clone());
            let mut nw = Vec::with_capacity(w.len());
            for l in w {
                match l.central_index(n) {
                    Some(i) => cp = cp.mul(&CentralPoly::var(i)),
                    None => nw.push(l.clone()),
                }
            }
            r.add_term(nw, cp);
        }
        r
    }

    /// Inverse of [`absorb_central`](Self::absorb_central); central letters are
    /// placed in front of each word.
    pub fn from_absorbed(p: &NCPoly<CentralPoly>, n: u8) -> Self {
        let mut r = Self::zero();
        for (w, cp) in p.terms() {
            for (e, c) in &cp.terms {
                let mut nw: Word = Vec::new();
                for (i, &k) in e.iter().enumerate() {
                    let l = central_label(i, n);
                    for _ in 0..k {
                        nw.push(l.clone());
                    }
                }
                nw.extend(w.iter().cloned());
                r.add_term(nw, c.clone());
            }
        }
        r
    }
}

/// The label of central letter `i` (see [`Label::central_index`]).
pub fn central_label(i: usize, n: u8) -> Label {
    if i == n as usize {
        Label::interval(1, n)
    } else {
        Label::single(i as u8 + 1)
    }
}

impl<C: Coeff> fmt::Debug for NCPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})")?;
            for l in w {
                write!(f, "*{l}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
