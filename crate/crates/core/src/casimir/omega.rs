//! The elements `Ω_{I1,I2,I3}` and `ω_S`.

use std::fmt;

use super::CasimirError;
use crate::algebra::{Label, Poly};
use crate::scalar::QRat;

/// Subsets of `{1..63}` as bit masks, bit `i` standing for `i`.
pub type Subset = u64;

pub fn subset(elems: &[u8]) -> Subset {
    elems.iter().fold(0, |m, &i| m | (1u64 << i))
}

pub fn elements(s: Subset) -> Vec<u8> {
    (1..64u8).filter(|&i| s & (1u64 << i) != 0).collect()
}

fn lo(s: Subset) -> u8 {
    s.trailing_zeros() as u8
}

fn hi(s: Subset) -> u8 {
    63 - s.leading_zeros() as u8
}

/// Every element of `a` is smaller than every element of `b`.
fn before(a: Subset, b: Subset) -> bool {
    a == 0 || b == 0 || hi(a) < lo(b)
}

pub fn format_subset(s: Subset) -> String {
    let e: Vec<String> = elements(s).iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", e.join(","))
}

/// `C_S`, with `C_∅ = 1`.
fn c(s: Subset) -> Poly {
    match Label::from_mask(s) {
        Some(l) => Poly::letter(l),
        None => Poly::one(),
    }
}

/// A partition `S = I1 ∪ I2 ∪ I3` with `I1 < I2 < I3`, all non-empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartitionedSet {
    pub parts: [Subset; 3],
}

impl PartitionedSet {
    pub fn new(parts: [Subset; 3]) -> Result<Self, CasimirError> {
        let [a, b, c] = parts;
        if a == 0 || b == 0 || c == 0 || !before(a, b) || !before(b, c) || parts.iter().any(|p| p & 1 != 0) {
            return Err(CasimirError::BadPartition(parts.map(format_subset).join(" ")));
        }
        Ok(PartitionedSet { parts })
    }

    /// `({min S}, middle, {max S})`.
    pub fn default_for(s: Subset) -> Result<Self, CasimirError> {
        if s.count_ones() < 3 || s & 1 != 0 {
            return Err(CasimirError::TooSmall(format_subset(s)));
        }
        let a = 1u64 << lo(s);
        let c = 1u64 << hi(s);
        Self::new([a, s & !a & !c, c])
    }

    pub fn set(&self) -> Subset {
        self.parts[0] | self.parts[1] | self.parts[2]
    }

    /// Every partition of `s` into three ordered non-empty blocks.
    pub fn all_for(s: Subset) -> Vec<Self> {
        let e = elements(s);
        let k = e.len();
        let mut out = Vec::new();
        for i in 1..k {
            for j in i + 1..k {
                let p = [subset(&e[..i]), subset(&e[i..j]), subset(&e[j..])];
                out.push(PartitionedSet { parts: p });
            }
        }
        out
    }
}

impl fmt::Display for PartitionedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(|&s| format_subset(s)).collect();
        write!(f, "({})", p.join(", "))
    }
}

/// `Ω_{I1,I2,I3}`; zero if any part is empty.
pub fn omega3(i1: Subset, i2: Subset, i3: Subset) -> Result<Poly, CasimirError> {
    if !before(i1, i2) || !before(i2, i3) || !before(i1, i3) {
        return Err(CasimirError::Unordered(format!(
            "{} {} {}",
            format_subset(i1),
            format_subset(i2),
            format_subset(i3)
        )));
    }
    if i1 == 0 || i2 == 0 || i3 == 0 {
        return Ok(Poly::zero());
    }
    Ok(omega3_formula(i1, i2, i3))
}

/// The defining combination, evaluated with `C_∅ = 1` and no shortcut for
/// empty parts.
pub fn omega3_formula(i1: Subset, i2: Subset, i3: Subset) -> Poly {
    let q = QRat::q();
    let qi = QRat::q_pow(-1);
    let q2 = QRat::q_pow(2);
    let qm2 = QRat::q_pow(-2);
    let sum = &q + &qi;
    let inv = sum.inv().expect("q+1/q is invertible");
    let (c1, c2, c3) = (c(i1), c(i2), c(i3));
    let (c12, c23, c13) = (c(i1 | i2), c(i2 | i3), c(i1 | i3));
    let c123 = c(i1 | i2 | i3);
    let sq = |p: &Poly| p.mul(p);
    let mut r = c12.mul(&c23).mul(&c13).scale(&q);
    let quad = sq(&c12)
        .scale(&q2)
        .add(&sq(&c23).scale(&qm2))
        .add(&sq(&c13).scale(&q2))
        .add(&sq(&c123))
        .add(&sq(&c1))
        .add(&sq(&c2))
        .add(&sq(&c3));
    r = r.add(&quad.scale(&inv));
    r = r.sub(&c12.mul(&c1.mul(&c2).add(&c3.mul(&c123))).scale(&q));
    r = r.sub(&c23.mul(&c2.mul(&c3).add(&c1.mul(&c123))).scale(&qi));
    r = r.sub(&c13.mul(&c1.mul(&c3).add(&c2.mul(&c123))).scale(&q));
    r = r.add(&c1.mul(&c2).mul(&c3).mul(&c123).scale(&sum));
    r.sub(&Poly::scalar(&inv))
}

fn submasks(s: Subset) -> Vec<Subset> {
    let mut out = Vec::new();
    let mut t = s;
    loop {
        out.push(t);
        if t == 0 {
            break;
        }
        t = (t - 1) & s;
    }
    out
}

/// `ω_S` by inclusion-exclusion over the given (or default) partition.
pub fn omega(s: Subset, partition: Option<&PartitionedSet>) -> Result<Poly, CasimirError> {
    let p = match partition {
        Some(p) => {
            if p.set() != s {
                return Err(CasimirError::BadPartition(format!("{p} does not cover {}", format_subset(s))));
            }
            *p
        }
        None => PartitionedSet::default_for(s)?,
    };
    let total = s.count_ones();
    let mut r = Poly::zero();
    for a in submasks(p.parts[0]) {
        for b in submasks(p.parts[1]) {
            for c3 in submasks(p.parts[2]) {
                if a == 0 || b == 0 || c3 == 0 {
                    continue;
                }
                let k = total - a.count_ones() - b.count_ones() - c3.count_ones();
                let t = omega3(a, b, c3)?;
                r = if k % 2 == 0 { r.add(&t) } else { r.sub(&t) };
            }
        }
    }
    Ok(r)
}

/// Subsets of `{1..n}` with at least three elements, by size then mask.
pub fn gamma_basis(n: u8) -> Vec<Subset> {
    let mut v: Vec<Subset> = (0u64..(1u64 << n)).map(|m| m << 1).filter(|m| m.count_ones() >= 3).collect();
    v.sort_by_key(|&m| (m.count_ones(), elements(m)));
    v
}
