//! Enumeration of monotonic tuples of connected subsets.

use crate::algebra::{Interval, Label};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tuple {
    pub slots: Vec<Option<Interval>>,
    pub increasing: bool,
    /// No gaps between consecutive non-empty slots.
    pub adjacent: bool,
}

/// Monotonic `k`-tuples of disjoint intervals in `1..=n`.
///
/// If `optional` is non-empty, at least one of those 1-based slots is empty
/// and every other slot is non-empty; otherwise all slots are non-empty.
/// With `gaps`, consecutive slots may be separated by holes.
/// Increasing tuples come first, then their mirror images.
pub fn monotonic_tuples(n: u8, k: usize, optional: &[usize], gaps: bool) -> Vec<Tuple> {
    let mut inc = Vec::new();
    let mut lens = vec![0u8; k];
    length_vectors(n, k, 0, &mut lens, optional, &mut |lens| place(n, lens, gaps, &mut inc));
    let dec: Vec<Tuple> = inc
        .iter()
        .filter(|t| t.slots.iter().flatten().count() >= 2)
        .map(|t| {
            let slots = t.slots.iter().map(|s| s.map(|iv| Interval::new(n + 1 - iv.hi, n + 1 - iv.lo))).collect();
            Tuple { slots, increasing: false, adjacent: t.adjacent }
        })
        .collect();
    inc.extend(dec);
    inc
}

fn length_vectors(n: u8, k: usize, i: usize, lens: &mut Vec<u8>, optional: &[usize], f: &mut impl FnMut(&[u8])) {
    if i == k {
        let total: u32 = lens.iter().map(|&l| l as u32).sum();
        if total == 0 || total > n as u32 {
            return;
        }
        let ok = if optional.is_empty() {
            lens.iter().all(|&l| l > 0)
        } else {
            optional.iter().any(|&s| lens[s - 1] == 0)
                && (0..k).all(|j| lens[j] > 0 || optional.contains(&(j + 1)))
        };
        if ok {
            f(lens);
        }
        return;
    }
    for l in 0..=n {
        lens[i] = l;
        length_vectors(n, k, i + 1, lens, optional, f);
    }
    lens[i] = 0;
}

fn place(n: u8, lens: &[u8], gaps: bool, out: &mut Vec<Tuple>) {
    let nonempty = lens.iter().filter(|&&l| l > 0).count();
    let total: u8 = lens.iter().sum();
    let max_gap = if gaps { n - total } else { 0 };
    let mut gapv = vec![0u8; nonempty.saturating_sub(1)];
    loop {
        let used: u8 = total + gapv.iter().sum::<u8>();
        if used <= n {
            for start in 1..=(n - used + 1) {
                let mut pos = start;
                let mut g = 0;
                let mut seen = 0;
                let mut slots = Vec::with_capacity(lens.len());
                for &l in lens {
                    if l == 0 {
                        slots.push(None);
                        continue;
                    }
                    if seen > 0 {
                        pos += gapv[g];
                        g += 1;
                    }
                    seen += 1;
                    slots.push(Some(Interval::new(pos, pos + l - 1)));
                    pos += l;
                }
                out.push(Tuple { slots, increasing: true, adjacent: gapv.iter().all(|&x| x == 0) });
            }
        }
        // odometer over gap vectors
        let mut i = 0;
        loop {
            if i == gapv.len() {
                return;
            }
            if gapv[i] < max_gap {
                gapv[i] += 1;
                break;
            }
            gapv[i] = 0;
            i += 1;
        }
    }
}

/// Every label with at least one hole, increasing then decreasing.
pub fn labels_with_holes(n: u8) -> Vec<Label> {
    let mut inc = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if let Some(l) = Label::from_mask(mask << 1) {
            if !l.is_connected() {
                inc.push(l);
            }
        }
    }
    inc.sort();
    let dec: Vec<Label> = inc.iter().map(|l| l.reversed()).collect();
    inc.extend(dec);
    inc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacent_triples_at_three() {
        let t = monotonic_tuples(3, 3, &[], false);
        assert_eq!(t.len(), 2);
        assert!(t[0].increasing && !t[1].increasing);
    }

    #[test]
    fn adjacent_triples_at_four() {
        // length vectors (1,1,1) at two starts, plus (2,1,1), (1,2,1), (1,1,2)
        assert_eq!(monotonic_tuples(4, 3, &[], false).len(), 10);
    }

    #[test]
    fn gapped_triples_at_four() {
        let t = monotonic_tuples(4, 3, &[], true);
        assert_eq!(t.iter().filter(|t| !t.adjacent).count(), 4);
    }

    #[test]
    fn optional_slots() {
        let t = monotonic_tuples(4, 5, &[1, 3], false);
        for x in &t {
            assert!(x.slots[0].is_none() || x.slots[2].is_none());
            assert!(x.slots[1].is_some() && x.slots[3].is_some() && x.slots[4].is_some());
        }
        assert!(!t.is_empty());
    }

    #[test]
    fn hole_labels_at_four() {
        // masks over {1..4} with at least two components: 13, 14, 24, 124, 134
        assert_eq!(labels_with_holes(4).len(), 10);
    }
}
