//! Dense univariate polynomials in `q` with big-integer coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree order, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly(pub Vec<BigInt>);

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = ZPoly(vec![c]);
        p.trim();
        p
    }

    /// `c * q^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        ZPoly(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        let mut p = ZPoly(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> &BigInt {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    /// Multiplicity of `q` as a factor.
    pub fn q_valuation(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide by `q^k`; caller guarantees divisibility.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        ZPoly(self.0[k..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        ZPoly(v)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = o.0.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        let mut p = ZPoly(v);
        p.trim();
        p
    }

    pub fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.0.len() == 1 {
            return self.scale(&o.0[0]);
        }
        if self.0.len() == 1 {
            return o.scale(&self.0[0]);
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        let mut p = ZPoly(v);
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly(self.0.iter().map(|x| x * c).collect())
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        ZPoly(self.0.iter().map(|x| x / c).collect())
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        let mut p = self.div_scalar_exact(&c);
        if p.lc().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Pseudo-remainder of `self` by `d`.
    pub fn prem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("prem by zero");
        let mut r = self.clone();
        let lc = d.lc().clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.lc().clone();
            let shift = rd - dd;
            r = r.scale(&lc).sub(&d.scale(&c).shift_up(shift));
        }
        r
    }

    /// Exact division over the integers; panics if the division is not exact.
    pub fn div_exact(&self, d: &Self) -> Self {
        if d.is_one() {
            return self.clone();
        }
        let dd = d.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let sd = self.degree().unwrap();
        assert!(sd >= dd, "inexact polynomial division");
        let mut r = self.0.clone();
        let mut qv = vec![BigInt::zero(); sd - dd + 1];
        let lc = d.lc();
        for k in (0..=sd - dd).rev() {
            let c = &r[k + dd];
            if c.is_zero() {
                continue;
            }
            let (quo, rem) = c.div_rem(lc);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (j, dj) in d.0.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] -= &quo * dj;
                }
            }
            qv[k] = quo;
        }
        assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        let mut p = ZPoly(qv);
        p.trim();
        p
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    /// The integer content is not part of the result.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive();
        }
        if o.is_zero() {
            return self.primitive();
        }
        if self.0.len() == 1 || o.0.len() == 1 {
            return Self::one();
        }
        let (mut a, mut b) = if self.0.len() >= o.0.len() {
            (self.primitive(), o.primitive())
        } else {
            (o.primitive(), self.primitive())
        };
        loop {
            if b.0.len() == 1 {
                return Self::one();
            }
            let r = a.prem(&b);
            if r.is_zero() {
                return b;
            }
            a = b;
            b = r.primitive();
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Coefficients of `p(1 + h)` as a polynomial in `h`.
    pub fn taylor_at_one(&self) -> Vec<BigInt> {
        // Horner in (1 + h).
        let mut acc: Vec<BigInt> = Vec::new();
        for c in self.0.iter().rev() {
            let mut next = vec![BigInt::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i] += a;
                next[i + 1] += a;
            }
            next[0] += c;
            acc = next;
        }
        while acc.last().is_some_and(|c| c.is_zero()) {
            acc.pop();
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ZPoly {
        ZPoly::from_i64(c)
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (q - 1)(q + 2) and (q - 1)(q^2 + 1)
        let a = p(&[-1, 1]).mul(&p(&[2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[1, 0, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[3, 0, -2, 5]);
        let b = p(&[1, 1]);
        assert_eq!(a.mul(&b).div_exact(&b), a);
    }

    #[test]
    fn taylor_shift() {
        // q^2 = 1 + 2h + h^2
        assert_eq!(p(&[0, 0, 1]).taylor_at_one(), vec![1.into(), 2.into(), 1.into()]);
    }
}
