//! Commutative polynomials in the central letters `z_1..z_n, z_full`.

use std::collections::BTreeMap;

use super::QRat;

/// Exponent vectors are indexed `z_1..z_n` then `z_full` at slot `n`, with
/// trailing zeros trimmed so the representation does not depend on `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CentralPoly {
    pub terms: BTreeMap<Vec<u8>, QRat>,
}

impl CentralPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: QRat) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(Vec::new(), c);
        }
        CentralPoly { terms: t }
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        let mut t = BTreeMap::new();
        t.insert(e, QRat::one());
        CentralPoly { terms: t }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Vec<u8>, c: &QRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        CentralPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CentralPoly { terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let len = e1.len().max(e2.len());
                let e: Vec<u8> = (0..len)
                    .map(|k| e1.get(k).copied().unwrap_or(0) + e2.get(k).copied().unwrap_or(0))
                    .collect();
                r.add_term(e, &(c1 * c2));
            }
        }
        r
    }

    /// The constant coefficient when no central letter occurs.
    pub fn as_constant(&self) -> Option<QRat> {
        match self.terms.len() {
            0 => Some(QRat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_commute() {
        let a = CentralPoly::var(0);
        let b = CentralPoly::var(2);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert!(a.mul(&b).sub(&b.mul(&a)).is_zero());
    }
}
