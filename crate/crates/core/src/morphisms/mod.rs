//! Braid-group automorphisms, the anti-automorphism `up`, and the coproduct
//! maps, acting on polynomials over labels.

mod checks;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{Label, Poly};

pub use checks::{
    check_braid_relations, check_formula_consistency, check_morphism_property, check_quotient_relations,
    check_r_delta, CheckItem, Outcome, Report,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("{tag} is not defined on aw({n})")]
    OutOfRange { tag: MorphismTag, n: u8 },
    #[error("bad morphism token {0:?}")]
    Parse(String),
    #[error("label {0} is outside 1..{1}")]
    LabelRange(Label, u8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MorphismTag {
    R(u8),
    RBar(u8),
    Up,
    Delta(u8),
    R0Prime,
}

impl MorphismTag {
    /// Target rank for source rank `n`.
    pub fn target_rank(&self, n: u8) -> u8 {
        match self {
            MorphismTag::Delta(_) => n + 1,
            _ => n,
        }
    }

    pub fn check(&self, n: u8) -> Result<(), MorphismError> {
        let ok = match *self {
            MorphismTag::R(a) | MorphismTag::RBar(a) => a < n,
            MorphismTag::Delta(a) => a <= n,
            MorphismTag::Up | MorphismTag::R0Prime => true,
        };
        if ok {
            Ok(())
        } else {
            Err(MorphismError::OutOfRange { tag: *self, n })
        }
    }

    /// The inverse map, for the automorphisms.
    pub fn inverse(&self) -> Option<MorphismTag> {
        match *self {
            MorphismTag::R(a) => Some(MorphismTag::RBar(a)),
            MorphismTag::RBar(a) => Some(MorphismTag::R(a)),
            MorphismTag::Up => Some(MorphismTag::Up),
            _ => None,
        }
    }
}

impl fmt::Display for MorphismTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismTag::R(a) => write!(f, "r{a}"),
            MorphismTag::RBar(a) => write!(f, "rb{a}"),
            MorphismTag::Up => write!(f, "up"),
            MorphismTag::Delta(a) => write!(f, "d{a}"),
            MorphismTag::R0Prime => write!(f, "r0p"),
        }
    }
}

impl FromStr for MorphismTag {
    type Err = MorphismError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.parse::<u8>().map_err(|_| MorphismError::Parse(s.to_string()));
        match s {
            "up" => Ok(MorphismTag::Up),
            "r0p" => Ok(MorphismTag::R0Prime),
            _ if s.starts_with("rb") => Ok(MorphismTag::RBar(num(&s[2..])?)),
            _ if s.starts_with('r') => Ok(MorphismTag::R(num(&s[1..])?)),
            _ if s.starts_with('d') => Ok(MorphismTag::Delta(num(&s[1..])?)),
            _ => Err(MorphismError::Parse(s.to_string())),
        }
    }
}

/// A composition of maps, written left to right as in `r1 r2 r1`; the
/// rightmost map is applied first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorphismWord(pub Vec<MorphismTag>);

impl MorphismWord {
    pub fn new(tags: Vec<MorphismTag>) -> Self {
        MorphismWord(tags)
    }

    pub fn then(mut self, other: &MorphismWord) -> Self {
        self.0.extend(other.0.iter().copied());
        self
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Δ_{a..b} = r_a · r_{a+1} r_a · … · r_b … r_{a+1} r_a`.
    pub fn delta_word(a: u8, b: u8) -> Self {
        let mut t = Vec::new();
        for top in a..=b {
            for k in (a..=top).rev() {
                t.push(MorphismTag::R(k));
            }
        }
        MorphismWord(t)
    }

    /// `r'_0 = r̄_{n-1} … r̄_1 r̄_0 r̄_1 … r̄_{n-1}`.
    pub fn r0prime_word(n: u8) -> Self {
        let mut t: Vec<MorphismTag> = (1..n).rev().map(MorphismTag::RBar).collect();
        t.push(MorphismTag::RBar(0));
        t.extend((1..n).map(MorphismTag::RBar));
        MorphismWord(t)
    }

    /// Rank after applying the word to `aw(n)`.
    pub fn target_rank(&self, n: u8) -> u8 {
        self.0.iter().rev().fold(n, |m, t| t.target_rank(m))
    }
}

impl fmt::Display for MorphismWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", t.join(" "))
    }
}

impl FromStr for MorphismWord {
    type Err = MorphismError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace().map(MorphismTag::from_str).collect::<Result<Vec<_>, _>>().map(MorphismWord)
    }
}

fn labeled(mask: u64, increasing: bool) -> Poly {
    match Label::from_mask(mask) {
        None => Poly::one(),
        Some(l) if increasing => Poly::letter(l),
        Some(l) => Poly::letter(l.reversed()),
    }
}

fn single_part_or(l: &Label, increasing: bool) -> bool {
    l.is_connected() || l.is_increasing() == increasing
}

fn interval_mask(lo: u8, hi: u8) -> u64 {
    crate::algebra::Interval::new(lo, hi).mask()
}

/// The structural image from the letter-moving rules, if one applies.
pub fn structural_image(tag: MorphismTag, l: &Label, n: u8) -> Option<Poly> {
    let m = l.mask();
    let has = |i: u8| m & (1u64 << i) != 0;
    match tag {
        MorphismTag::R(0) | MorphismTag::RBar(0) => {
            if !has(1) {
                return Some(Poly::letter(l.clone()));
            }
            let full = interval_mask(1, n);
            let img = (full & !m) | 2;
            let bar = matches!(tag, MorphismTag::RBar(_));
            if !bar && single_part_or(l, true) {
                Some(labeled(img, false))
            } else if bar && single_part_or(l, false) {
                Some(labeled(img, true))
            } else {
                None
            }
        }
        MorphismTag::R(i) | MorphismTag::RBar(i) => {
            if has(i) == has(i + 1) {
                return Some(Poly::letter(l.clone()));
            }
            let bar = matches!(tag, MorphismTag::RBar(_));
            let moved_down = (m & !(1u64 << (i + 1))) | (1u64 << i);
            let moved_up = (m & !(1u64 << i)) | (1u64 << (i + 1));
            // r_i moves a letter left: i+1 -> i when increasing, i -> i+1 when decreasing
            match (bar, has(i + 1)) {
                (false, true) if single_part_or(l, true) => Some(labeled(moved_down, true)),
                (false, false) if single_part_or(l, false) => Some(labeled(moved_up, false)),
                (true, false) if single_part_or(l, true) => Some(labeled(moved_up, true)),
                (true, true) if single_part_or(l, false) => Some(labeled(moved_down, false)),
                _ => None,
            }
        }
        MorphismTag::Up => Some(Poly::letter(l.reversed())),
        MorphismTag::Delta(a) => {
            let shift = |x: u8| if x > a { x + 1 } else { x };
            let mut nm = 0u64;
            for i in 1..=n {
                if has(i) {
                    nm |= 1u64 << shift(i);
                    if i == a {
                        nm |= 1u64 << (a + 1);
                    }
                }
            }
            Some(labeled(nm, l.is_increasing()))
        }
        MorphismTag::R0Prime => {
            if l.is_connected() {
                let p = l.parts()[0];
                if p.hi < n {
                    return Some(Poly::letter(l.clone()));
                }
                let img = if p.lo == 1 { 0 } else { interval_mask(1, p.lo - 1) } | (1u64 << n);
                return Some(labeled(img, true));
            }
            None
        }
    }
}

/// The q-commutator formula image of `C_I` under `r_a` or `r̄_a`; `None`
/// only for the other tags.
pub fn formula_image(tag: MorphismTag, l: &Label, n: u8) -> Option<Poly> {
    let m = l.mask();
    let inc = l.is_increasing();
    let (bar, pair) = match tag {
        MorphismTag::R(0) => (false, interval_mask(2, n)),
        MorphismTag::RBar(0) => (true, interval_mask(2, n)),
        MorphismTag::R(i) => (false, interval_mask(i, i + 1)),
        MorphismTag::RBar(i) => (true, interval_mask(i, i + 1)),
        _ => return None,
    };
    let cl = Poly::letter(l.clone());
    let cp = labeled(pair, true);
    if let MorphismTag::R(0) | MorphismTag::RBar(0) = tag {
        if m & 2 == 0 {
            return Some(cl);
        }
        let q = if bar { Poly::qcomm(&cl, &cp) } else { Poly::qcomm(&cp, &cl) };
        let r = labeled(pair & !m, !inc)
            .mul(&Poly::letter(Label::single(1)))
            .add(&labeled(m & pair, inc).mul(&Poly::letter(Label::interval(1, n))));
        return Some(q.neg().add(&r));
    }
    let both = m & pair;
    if both == 0 || both == pair {
        return Some(cl);
    }
    let a = both;
    let q = if bar { Poly::qcomm(&cl, &cp) } else { Poly::qcomm(&cp, &cl) };
    let r = labeled(pair & !a, true)
        .mul(&labeled(m & !a, inc))
        .add(&labeled(a, true).mul(&labeled(m | pair, inc)));
    Some(q.neg().add(&r))
}

/// Image of one letter: structural rule when available, formula otherwise.
pub fn apply_generator_map(tag: MorphismTag, l: &Label, n: u8) -> Result<Poly, MorphismError> {
    tag.check(n)?;
    if l.max() > n {
        return Err(MorphismError::LabelRange(l.clone(), n));
    }
    if let Some(p) = structural_image(tag, l, n) {
        return Ok(p);
    }
    if tag == MorphismTag::R0Prime {
        let w = MorphismWord::r0prime_word(n);
        return apply_word(&w, &Poly::letter(l.clone()), n).map(|(p, _)| p);
    }
    Ok(formula_image(tag, l, n).expect("r and rbar always have a formula"))
}

/// Apply one map to a polynomial in `aw(n)`.
pub fn apply(tag: MorphismTag, x: &Poly, n: u8) -> Result<Poly, MorphismError> {
    tag.check(n)?;
    if tag == MorphismTag::Up {
        return Ok(x.up());
    }
    let mut err = None;
    let r = x.map_letters(|l| match apply_generator_map(tag, l, n) {
        Ok(p) => p,
        Err(e) => {
            err = Some(e);
            Poly::zero()
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(r),
    }
}

/// Apply a word right to left; returns the image and its rank.
pub fn apply_word(w: &MorphismWord, x: &Poly, n: u8) -> Result<(Poly, u8), MorphismError> {
    let mut cur = x.clone();
    let mut rank = n;
    for &t in w.0.iter().rev() {
        cur = apply(t, &cur, rank)?;
        rank = t.target_rank(rank);
    }
    Ok((cur, rank))
}

/// The generators `C_I` of `aw(n)`, `I` connected.
pub fn generators(n: u8) -> Vec<Label> {
    let mut v = Vec::new();
    for lo in 1..=n {
        for hi in lo..=n {
            v.push(Label::interval(lo, hi));
        }
    }
    v
}

#[cfg(test)]
mod tests;
