//! Truncated Laurent series in `h = q - 1` with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::QRat;

/// `sum_k coeffs[k] h^(val + k) + O(h^(val + coeffs.len()))`.
///
/// `exact_zero` marks a series known to vanish identically, as opposed to
/// one whose window happens to contain only zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSeries {
    pub val: i32,
    pub coeffs: Vec<BigRational>,
    pub exact_zero: bool,
}

pub const DEFAULT_PRECISION: usize = 4;

impl HSeries {
    pub fn zero() -> Self {
        HSeries { val: 0, coeffs: Vec::new(), exact_zero: true }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Absolute truncation order; `None` when exactly zero.
    pub fn end(&self) -> Option<i32> {
        if self.exact_zero {
            None
        } else {
            Some(self.val + self.coeffs.len() as i32)
        }
    }

    pub fn is_zero_in_window(&self) -> bool {
        self.exact_zero || self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest order with a nonzero coefficient and that coefficient.
    pub fn leading(&self) -> Option<(i32, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.val + k as i32, c))
    }

    pub fn coeff(&self, order: i32) -> BigRational {
        let k = order - self.val;
        if k < 0 {
            return BigRational::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Normalize so the first stored coefficient is nonzero, keeping the end.
    fn normalized(mut self) -> Self {
        if self.exact_zero {
            return self;
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 && lead < self.coeffs.len() {
            self.coeffs.drain(..lead);
            self.val += lead as i32;
        }
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.exact_zero {
            return o.clone();
        }
        if o.exact_zero {
            return self.clone();
        }
        let val = self.val.min(o.val);
        let end = self.end().unwrap().min(o.end().unwrap());
        let coeffs = (val..end).map(|k| self.coeff(k) + o.coeff(k)).collect();
        HSeries { val, coeffs, exact_zero: false }.normalized()
    }

    pub fn neg(&self) -> Self {
        HSeries { val: self.val, coeffs: self.coeffs.iter().map(|c| -c).collect(), exact_zero: self.exact_zero }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.exact_zero || o.exact_zero {
            return Self::zero();
        }
        let len = self.coeffs.len().min(o.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(len - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HSeries { val: self.val + o.val, coeffs, exact_zero: false }.normalized()
    }

    /// Value of the truncated sum at a rational `h`.
    pub fn eval_truncated(&self, h: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = self.val + k as i32;
            let p = if e >= 0 {
                num_traits::pow(h.clone(), e as usize)
            } else {
                num_traits::pow(h.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        acc
    }
}

fn series_div(n: &[BigInt], d: &[BigInt], len: usize) -> Vec<BigRational> {
    let d0 = BigRational::from_integer(d[0].clone());
    let mut out: Vec<BigRational> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = BigRational::from_integer(n.get(k).cloned().unwrap_or_default());
        for j in 1..=k {
            if let Some(dj) = d.get(j) {
                acc -= &out[k - j] * BigRational::from_integer(dj.clone());
            }
        }
        out.push(acc / &d0);
    }
    out
}

/// `(1 + h)^s` to `len` terms.
fn binomial_series(s: i32, len: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(len);
    let mut c = BigRational::one();
    for k in 0..len {
        out.push(c.clone());
        c = c * BigRational::from_integer(BigInt::from(s - k as i32)) / BigRational::from_integer(BigInt::from(k as i64 + 1));
    }
    out
}

/// Expansion of `f(1 + h)` with `precision` coefficients from the valuation.
pub fn qrat_hseries(f: &QRat, precision: usize) -> HSeries {
    assert!(precision >= 1, "precision must be positive");
    if f.is_zero() {
        return HSeries::zero();
    }
    let tn = f.numer().taylor_at_one();
    let td = f.denom().taylor_at_one();
    let vn = tn.iter().take_while(|c| c.is_zero()).count();
    let vd = td.iter().take_while(|c| c.is_zero()).count();
    let ratio = series_div(&tn[vn..], &td[vd..], precision);
    let shift = binomial_series(f.shift(), precision);
    let mut coeffs = vec![BigRational::zero(); precision];
    for (i, a) in ratio.iter().enumerate() {
        for (j, b) in shift.iter().take(precision - i).enumerate() {
            coeffs[i + j] += a * b;
        }
    }
    HSeries { val: vn as i32 - vd as i32, coeffs, exact_zero: false }
}
