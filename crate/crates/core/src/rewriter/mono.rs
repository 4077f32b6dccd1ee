//! Monomials over the rewriting alphabet and the polynomials built on them.

use std::collections::BTreeMap;

use smallvec::SmallVec;

use crate::algebra::Label;
use crate::scalar::QRat;

/// Central letters supported: `z_1..z_7` and `z_full`.
pub const MAX_CENTRAL: usize = 8;

pub type Word = SmallVec<[u8; 8]>;

/// `z^z * w`. The derived order is the monomial order: total weight, then
/// weight of the noncommutative part, then its length, then lexicographic
/// on letter positions, then central exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    tw: u16,
    nw: u16,
    len: u16,
    pub w: Word,
    pub z: [u8; MAX_CENTRAL],
}

impl Mono {
    pub fn new(w: Word, z: [u8; MAX_CENTRAL], weights: &[u16]) -> Self {
        let nw: u16 = w.iter().map(|&l| weights[l as usize]).sum();
        let zw: u16 = z.iter().map(|&e| e as u16).sum();
        Mono { tw: nw + zw, nw, len: w.len() as u16, w, z }
    }

    pub fn one() -> Self {
        Mono { tw: 0, nw: 0, len: 0, w: Word::new(), z: [0; MAX_CENTRAL] }
    }

    pub fn total_weight(&self) -> u16 {
        self.tw
    }

    pub fn with_z(&self, e: &[u8; MAX_CENTRAL]) -> Self {
        let mut m = self.clone();
        for (a, b) in m.z.iter_mut().zip(e) {
            *a += b;
        }
        m.tw += e.iter().map(|&x| x as u16).sum::<u16>();
        m
    }

    pub fn is_sorted(&self) -> bool {
        self.w.windows(2).all(|p| p[0] <= p[1])
    }
}

/// A linear combination of monomials, largest monomial last.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RPoly {
    pub terms: BTreeMap<Mono, QRat>,
}

impl RPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Mono, c: QRat) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
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

    pub fn leading(&self) -> Option<(&Mono, &QRat)> {
        self.terms.last_key_value()
    }

    pub fn add_term(&mut self, m: Mono, c: QRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
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

    /// `self += c * o`.
    pub fn add_scaled(&mut self, o: &RPoly, c: &QRat) {
        for (m, v) in &o.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    /// `self += c * z^e * o`.
    pub fn add_scaled_z(&mut self, o: &RPoly, c: &QRat, e: &[u8; MAX_CENTRAL]) {
        let trivial = e.iter().all(|&x| x == 0);
        for (m, v) in &o.terms {
            let mm = if trivial { m.clone() } else { m.with_z(e) };
            self.add_term(mm, v * c);
        }
    }

    pub fn scale(&self, c: &QRat) -> RPoly {
        let mut r = RPoly::zero();
        r.add_scaled(self, c);
        r
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> RPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => RPoly::zero(),
        }
    }
}

/// The letters of the rewriting alphabet, in order, with their weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterOrder {
    pub n: u8,
    pub letters: Vec<Label>,
}

impl LetterOrder {
    /// The default alphabet: at `n = 4` the order
    /// `C134, C14, C124, C24, C13, C234, C123, C34, C23, C12`; otherwise
    /// more holes first, then larger maximum, then larger size, then the
    /// smaller label.
    pub fn default_for(n: u8) -> Self {
        if n == 4 {
            let l = |b: &[(u8, u8)]| Label::from_blocks(b).unwrap();
            return LetterOrder {
                n,
                letters: vec![
                    l(&[(1, 1), (3, 4)]),
                    l(&[(1, 1), (4, 4)]),
                    l(&[(1, 2), (4, 4)]),
                    l(&[(2, 2), (4, 4)]),
                    l(&[(1, 1), (3, 3)]),
                    l(&[(2, 4)]),
                    l(&[(1, 3)]),
                    l(&[(3, 4)]),
                    l(&[(2, 3)]),
                    l(&[(1, 2)]),
                ],
            };
        }
        let mut letters: Vec<Label> = (1u64..(1u64 << n))
            .filter(|m| (2..n as u32).contains(&m.count_ones()))
            .filter_map(|m| Label::from_mask(m << 1))
            .collect();
        letters.sort_by(|a, b| {
            b.holes_count()
                .cmp(&a.holes_count())
                .then(b.max().cmp(&a.max()))
                .then(b.size().cmp(&a.size()))
                .then(a.cmp(b))
        });
        LetterOrder { n, letters }
    }

    pub fn from_letters(n: u8, letters: Vec<Label>) -> Result<Self, String> {
        let want = Self::default_for(n);
        let mut a = letters.clone();
        let mut b = want.letters.clone();
        a.sort();
        b.sort();
        if a != b {
            return Err(format!("letter order must be a permutation of the {} non-central increasing labels", b.len()));
        }
        Ok(LetterOrder { n, letters })
    }

    /// Letter weights: the number of parts, i.e. the degree of the
    /// expansion in the generators.
    pub fn weights(&self) -> Vec<u16> {
        self.letters.iter().map(|l| l.parts().len() as u16).collect()
    }

    pub fn index_of(&self, l: &Label) -> Option<u8> {
        self.letters.iter().position(|x| x == l).map(|i| i as u8)
    }
}
