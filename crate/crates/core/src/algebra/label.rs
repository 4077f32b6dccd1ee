//! Connected subsets, monotonic sequences of them, and their canonical form.

use std::fmt;

use smallvec::SmallVec;

use super::AlgebraError;

/// The interval `{lo, ..., hi}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: u8,
    pub hi: u8,
}

impl Interval {
    pub fn new(lo: u8, hi: u8) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn mask(&self) -> u64 {
        (((1u128 << (self.hi + 1)) - 1) as u64) & !((1u64 << self.lo) - 1)
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn contains(&self, i: u8) -> bool {
        self.lo <= i && i <= self.hi
    }
}

/// A canonical monotonic sequence of disjoint, non-adjacent intervals.
///
/// A single interval is always stored with `increasing == true`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    parts: SmallVec<[Interval; 4]>,
    increasing: bool,
}

impl Label {
    /// A connected label `C_{lo..hi}`.
    pub fn interval(lo: u8, hi: u8) -> Self {
        Label { parts: smallvec::smallvec![Interval::new(lo, hi)], increasing: true }
    }

    pub fn single(i: u8) -> Self {
        Self::interval(i, i)
    }

    /// Canonicalize an arbitrary sequence of blocks; direction is read from
    /// the block order.
    pub fn new(blocks: &[(u8, u8)], n: u8) -> Result<Self, AlgebraError> {
        if blocks.is_empty() {
            return Err(AlgebraError::EmptyLabel);
        }
        for &(lo, hi) in blocks {
            if lo == 0 || lo > hi || hi > n {
                return Err(AlgebraError::OutOfRange { lo, hi, n });
            }
        }
        Self::from_blocks(blocks)
    }

    /// Canonicalize without an ambient-rank check.
    pub fn from_blocks(blocks: &[(u8, u8)]) -> Result<Self, AlgebraError> {
        let ivs: Vec<Interval> = blocks.iter().map(|&(a, b)| Interval::new(a, b)).collect();
        Self::from_intervals(&ivs)
    }

    pub fn from_intervals(ivs: &[Interval]) -> Result<Self, AlgebraError> {
        if ivs.is_empty() {
            return Err(AlgebraError::EmptyLabel);
        }
        let increasing = if ivs.len() == 1 {
            true
        } else if ivs[1].lo > ivs[0].hi {
            true
        } else if ivs[1].hi < ivs[0].lo {
            false
        } else {
            return Err(AlgebraError::Overlap);
        };
        let mut parts: SmallVec<[Interval; 4]> = SmallVec::new();
        for &iv in ivs {
            if let Some(last) = parts.last_mut() {
                if increasing {
                    if iv.lo <= last.hi {
                        return Err(AlgebraError::Overlap);
                    }
                    if iv.lo == last.hi + 1 {
                        last.hi = iv.hi;
                        continue;
                    }
                } else {
                    if iv.hi >= last.lo {
                        return Err(AlgebraError::Overlap);
                    }
                    if iv.hi + 1 == last.lo {
                        last.lo = iv.lo;
                        continue;
                    }
                }
            }
            parts.push(iv);
        }
        let increasing = increasing || parts.len() == 1;
        Ok(Label { parts, increasing })
    }

    /// The increasing label whose parts are the connected components of `mask`
    /// (bit `i` stands for index `i`).
    pub fn from_mask(mask: u64) -> Option<Self> {
        if mask == 0 {
            return None;
        }
        let mut parts: SmallVec<[Interval; 4]> = SmallVec::new();
        let mut i = 1u8;
        while i < 64 {
            if mask & (1u64 << i) != 0 {
                let lo = i;
                while i < 63 && mask & (1u64 << (i + 1)) != 0 {
                    i += 1;
                }
                parts.push(Interval::new(lo, i));
            }
            i += 1;
        }
        Some(Label { parts, increasing: true })
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_increasing(&self) -> bool {
        self.increasing
    }

    pub fn is_connected(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn holes_count(&self) -> usize {
        self.parts.len() - 1
    }

    /// Union of the parts as a bitmask.
    pub fn mask(&self) -> u64 {
        self.parts.iter().fold(0, |m, p| m | p.mask())
    }

    pub fn size(&self) -> usize {
        self.mask().count_ones() as usize
    }

    pub fn min(&self) -> u8 {
        self.parts.iter().map(|p| p.lo).min().unwrap()
    }

    pub fn max(&self) -> u8 {
        self.parts.iter().map(|p| p.hi).max().unwrap()
    }

    pub fn contains(&self, i: u8) -> bool {
        self.parts.iter().any(|p| p.contains(i))
    }

    /// Holes between consecutive parts, in sequence order.
    pub fn holes(&self) -> Vec<Interval> {
        self.parts
            .windows(2)
            .map(|w| {
                if self.increasing {
                    Interval::new(w[0].hi + 1, w[1].lo - 1)
                } else {
                    Interval::new(w[1].hi + 1, w[0].lo - 1)
                }
            })
            .collect()
    }

    /// The same parts in the opposite order.
    pub fn reversed(&self) -> Self {
        if self.parts.len() == 1 {
            return self.clone();
        }
        let mut parts = self.parts.clone();
        parts.reverse();
        Label { parts, increasing: !self.increasing }
    }

    /// Central in `aw(n)`: a singleton or the full range.
    pub fn is_central(&self, n: u8) -> bool {
        self.is_connected() && (self.parts[0].lo == self.parts[0].hi || (self.parts[0].lo == 1 && self.parts[0].hi == n))
    }

    /// Index into the central letters: `i - 1` for `C_i`, `n` for `C_{1..n}`.
    pub fn central_index(&self, n: u8) -> Option<usize> {
        if !self.is_central(n) {
            return None;
        }
        let p = self.parts[0];
        if p.lo == p.hi && !(n == 1 && p.lo == 1) {
            Some(p.lo as usize - 1)
        } else {
            Some(n as usize)
        }
    }

    /// Apply an index map to every interval endpoint and re-canonicalize.
    pub fn map_intervals(&self, f: impl Fn(Interval) -> Interval) -> Result<Self, AlgebraError> {
        let ivs: Vec<Interval> = self.parts.iter().map(|&p| f(p)).collect();
        Self::from_intervals(&ivs)
    }
}

impl Label {
    /// The blocks as written inside brackets, e.g. `1..2;4`.
    pub fn body(&self) -> String {
        let blocks: Vec<String> = self
            .parts
            .iter()
            .map(|p| if p.lo == p.hi { p.lo.to_string() } else { format!("{}..{}", p.lo, p.hi) })
            .collect();
        blocks.join(";")
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C[{}]", self.body())
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacent_parts_merge() {
        let l = Label::new(&[(1, 1), (2, 3)], 3).unwrap();
        assert_eq!(l, Label::interval(1, 3));
        let d = Label::new(&[(2, 3), (1, 1)], 3).unwrap();
        assert_eq!(d, Label::interval(1, 3));
        assert!(d.is_increasing());
    }

    #[test]
    fn non_adjacent_decreasing_stays() {
        let l = Label::new(&[(5, 5), (3, 3), (1, 1)], 5).unwrap();
        assert_eq!(l.parts().len(), 3);
        assert!(!l.is_increasing());
        assert_eq!(l.to_string(), "C[5;3;1]");
    }

    #[test]
    fn overlap_rejected() {
        assert_eq!(Label::new(&[(1, 2), (2, 3)], 3), Err(AlgebraError::Overlap));
        assert!(Label::new(&[(1, 2), (5, 5), (3, 3)], 5).is_err());
    }

    #[test]
    fn printing() {
        assert_eq!(Label::interval(1, 3).to_string(), "C[1..3]");
        assert_eq!(Label::new(&[(1, 1), (3, 3)], 3).unwrap().to_string(), "C[1;3]");
        assert_eq!(Label::new(&[(3, 3), (1, 1)], 3).unwrap().to_string(), "C[3;1]");
    }

    #[test]
    fn mask_roundtrip() {
        let l = Label::new(&[(1, 2), (4, 4)], 4).unwrap();
        assert_eq!(Label::from_mask(l.mask()).unwrap(), l);
        assert_eq!(l.holes(), vec![Interval::new(3, 3)]);
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let l = Label::new(&[(4, 5), (1, 2)], 5).unwrap();
        let blocks: Vec<(u8, u8)> = l.parts().iter().map(|p| (p.lo, p.hi)).collect();
        assert_eq!(Label::new(&blocks, 5).unwrap(), l);
    }
}
