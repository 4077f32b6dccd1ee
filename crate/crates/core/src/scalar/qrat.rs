//! Exact rational functions of `q` over the rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::zpoly::ZPoly;
use super::ScalarError;

/// `q^shift * num(q) / den(q)` in canonical form.
///
/// Canonical form: `num` and `den` are coprime over `Q[q]`, their integer
/// contents are jointly coprime, neither is divisible by `q`, and the leading
/// coefficient of `den` is positive. Zero is `shift = 0, num = 0, den = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    shift: i32,
    num: ZPoly,
    den: ZPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat { shift: 0, num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRat { shift: 0, num: ZPoly::constant(c), den: ZPoly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(0, ZPoly::constant(r.numer().clone()), ZPoly::constant(r.denom().clone()))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i32) -> Self {
        QRat { shift: k, num: ZPoly::one(), den: ZPoly::one() }
    }

    /// Laurent polynomial `sum c_k q^k` from `(k, c_k)` pairs.
    pub fn laurent(terms: &[(i32, i64)]) -> Self {
        let mut acc = Self::zero();
        for &(k, c) in terms {
            acc = acc + Self::q_pow(k) * Self::from_int(c);
        }
        acc
    }

    /// Build from `q^shift * num / den`, normalizing.
    pub fn from_parts(shift: i32, num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "QRat with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let vn = num.q_valuation();
        let vd = den.q_valuation();
        let mut num = num.shift_down(vn);
        let mut den = den.shift_down(vd);
        let shift = shift + vn as i32 - vd as i32;
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        Self::finish(shift, num, den)
    }

    /// Content and sign normalization for an already coprime pair.
    fn finish(shift: i32, mut num: ZPoly, mut den: ZPoly) -> Self {
        if !den.is_one() {
            let c = num.content().gcd(&den.content());
            if !c.is_one() {
                num = num.div_scalar_exact(&c);
                den = den.div_scalar_exact(&c);
            }
            if den.lc().is_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        QRat { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `q`.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.shift == 0 && self.num.0.len() == 1 && self.den.0.len() == 1)
    }

    /// Rational value of a constant; `None` if `q` occurs.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if !self.is_constant() {
            return None;
        }
        Some(BigRational::new(self.num.0[0].clone(), self.den.0[0].clone()))
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn numer(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom(&self) -> &ZPoly {
        &self.den
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(QRat { shift: -self.shift, num, den })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // p(q^{-1}) = q^{-deg p} * reversed(p)
        let rn: Vec<BigInt> = self.num.0.iter().rev().cloned().collect();
        let rd: Vec<BigInt> = self.den.0.iter().rev().cloned().collect();
        let dn = self.num.degree().unwrap() as i32;
        let dd = self.den.degree().unwrap() as i32;
        Self::from_parts(-self.shift - dn + dd, ZPoly(rn), ZPoly(rd))
    }

    /// Exact value at a rational point.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational, ScalarError> {
        if q0.is_zero() || q0.abs().is_one() {
            return Err(ScalarError::InadmissibleQ(q0.to_string()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ScalarError::PoleAt(q0.to_string()));
        }
        let n = self.num.eval(q0);
        let p = if self.shift >= 0 {
            num_traits::pow(q0.clone(), self.shift as usize)
        } else {
            num_traits::pow(q0.recip(), (-self.shift) as usize)
        };
        Ok(n * p / d)
    }

    /// Order of vanishing at `q = 1` and the leading coefficient of the
    /// expansion in `h = q - 1`.
    pub fn order_at_one(&self) -> Option<(i32, BigRational)> {
        if self.is_zero() {
            return None;
        }
        let tn = self.num.taylor_at_one();
        let td = self.den.taylor_at_one();
        let vn = tn.iter().take_while(|c| c.is_zero()).count();
        let vd = td.iter().take_while(|c| c.is_zero()).count();
        Some((vn as i32 - vd as i32, BigRational::new(tn[vn].clone(), td[vd].clone())))
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_impl(a: &QRat, b: &QRat) -> QRat {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let m = a.shift.min(b.shift);
    let an = a.num.shift_up((a.shift - m) as usize);
    let bn = b.num.shift_up((b.shift - m) as usize);
    if a.den == b.den {
        let num = an.add(&bn);
        if a.den.is_one() {
            if num.is_zero() {
                return QRat::zero();
            }
            let v = num.q_valuation();
            return QRat { shift: m + v as i32, num: num.shift_down(v), den: ZPoly::one() };
        }
        return QRat::from_parts(m, num, a.den.clone());
    }
    let g = a.den.gcd(&b.den);
    let (ad, bd) = if g.is_one() {
        (a.den.clone(), b.den.clone())
    } else {
        (a.den.div_exact(&g), b.den.div_exact(&g))
    };
    let num = an.mul(&bd).add(&bn.mul(&ad));
    let den = a.den.mul(&bd);
    if num.is_zero() {
        return QRat::zero();
    }
    if g.is_one() {
        // Only factors of g can be shared with the new numerator.
        let v = num.q_valuation();
        return QRat::finish(m + v as i32, num.shift_down(v), den);
    }
    QRat::from_parts(m, num, den)
}

fn mul_impl(a: &QRat, b: &QRat) -> QRat {
    if a.is_zero() || b.is_zero() {
        return QRat::zero();
    }
    let shift = a.shift + b.shift;
    if a.den.is_one() && b.den.is_one() {
        return QRat { shift, num: a.num.mul(&b.num), den: ZPoly::one() };
    }
    let g1 = if b.den.is_one() { ZPoly::one() } else { a.num.gcd(&b.den) };
    let g2 = if a.den.is_one() { ZPoly::one() } else { b.num.gcd(&a.den) };
    let an = a.num.div_exact(&g1);
    let bd = b.den.div_exact(&g1);
    let bn = b.num.div_exact(&g2);
    let ad = a.den.div_exact(&g2);
    QRat::finish(shift, an.mul(&bn), ad.mul(&bd))
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, o: &QRat) -> QRat {
        add_impl(self, o)
    }
}
impl Add for QRat {
    type Output = QRat;
    fn add(self, o: QRat) -> QRat {
        add_impl(&self, &o)
    }
}
impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, o: &QRat) -> QRat {
        add_impl(self, &-o)
    }
}
impl Sub for QRat {
    type Output = QRat;
    fn sub(self, o: QRat) -> QRat {
        add_impl(&self, &-o)
    }
}
impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, o: &QRat) -> QRat {
        mul_impl(self, o)
    }
}
impl Mul for QRat {
    type Output = QRat;
    fn mul(self, o: QRat) -> QRat {
        mul_impl(&self, &o)
    }
}
/// Panics on division by zero; use [`QRat::checked_div`] for a fallible form.
impl Div for &QRat {
    type Output = QRat;
    fn div(self, o: &QRat) -> QRat {
        self.checked_div(o).expect("QRat division by zero")
    }
}
impl Div for QRat {
    type Output = QRat;
    fn div(self, o: QRat) -> QRat {
        (&self).checked_div(&o).expect("QRat division by zero")
    }
}
macro_rules! mixed_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $m(self, o: &QRat) -> QRat {
                $tr::$m(&self, o)
            }
        }
        impl $tr<QRat> for &QRat {
            type Output = QRat;
            fn $m(self, o: QRat) -> QRat {
                $tr::$m(self, &o)
            }
        }
    )*};
}
mixed_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }
}
impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}
impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, o: &QRat) {
        *self = add_impl(self, o);
    }
}
impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, o: &QRat) {
        *self = add_impl(self, &-o);
    }
}
impl MulAssign<&QRat> for QRat {
    fn mul_assign(&mut self, o: &QRat) {
        *self = mul_impl(self, o);
    }
}

impl Zero for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
}

impl One for QRat {
    fn one() -> Self {
        QRat::one()
    }
}

/// Laurent polynomial text: `3*q^2-q+1-2*q^-3`.
fn fmt_laurent(p: &ZPoly, shift: i32) -> String {
    let mut s = String::new();
    for (i, c) in p.0.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let k = i as i32 + shift;
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        let mono = match k {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{k}"),
        };
        if mono.is_empty() {
            s.push_str(&a.to_string());
        } else if a.is_one() {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{a}*{mono}"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn is_single_term(s: &str) -> bool {
    !s[1..].contains(['+', '-']) && !s.starts_with('-')
}

impl fmt::Display for QRat {
    /// Parseable text; a Laurent numerator over an ordinary polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = fmt_laurent(&self.num, self.shift);
        if self.den.is_one() {
            return write!(f, "{n}");
        }
        let d = fmt_laurent(&self.den, 0);
        let n = if is_single_term(&n) { n } else { format!("({n})") };
        let d = if is_single_term(&d) && !d.contains('*') { d } else { format!("({d})") };
        write!(f, "{n}/{d}")
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

impl std::str::FromStr for QRat {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        super::parse::parse_qrat(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq() -> QRat {
        QRat::q()
    }
    fn qi() -> QRat {
        QRat::q_pow(-1)
    }

    #[test]
    fn normalizes_quotient() {
        let a = (&qq().pow(2) - &QRat::one()) / (&qq() - &QRat::one());
        assert_eq!(a, &qq() + &QRat::one());
    }

    #[test]
    fn square_of_q_minus_qinv() {
        let d = &qq() - &qi();
        let sq = &d * &d;
        assert_eq!(sq, QRat::laurent(&[(2, 1), (0, -2), (-2, 1)]));
        assert_eq!(sq.to_string(), "q^2-2+q^-2");
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&qq() + &qi()) * &(&qq() - &qi());
        assert_eq!(lhs, QRat::laurent(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn eval_examples() {
        let d = &qq() - &qi();
        let two = BigRational::from_integer(2.into());
        assert_eq!((&d * &d).eval(&two).unwrap(), BigRational::new(9.into(), 4.into()));
        let f = (&qq() + &qi()).inv().unwrap();
        assert!(matches!(f.eval(&BigRational::one()), Err(ScalarError::InadmissibleQ(_))));
        let g = (&qq().pow(2) - &QRat::one()) / (&qq() - &QRat::one());
        assert_eq!(g.eval(&BigRational::from_integer(3.into())).unwrap(), BigRational::from_integer(4.into()));
    }

    #[test]
    fn pole_is_an_error() {
        let f = (&qq() - &QRat::from_int(2)).inv().unwrap();
        assert!(matches!(f.eval(&BigRational::from_integer(2.into())), Err(ScalarError::PoleAt(_))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(QRat::one().checked_div(&QRat::zero()), Err(ScalarError::DivisionByZero)));
    }

    #[test]
    fn denominator_sign_convention() {
        let a = QRat::one() / (&QRat::one() - &qq());
        assert!(!a.denom().lc().is_negative());
        assert_eq!(a, -(QRat::one() / (&qq() - &QRat::one())));
    }

    #[test]
    fn bar_inverts_q() {
        let a = (&qq().pow(3) + &QRat::from_int(2)) / (&qq() - &QRat::from_int(5));
        let expect = (&qi().pow(3) + &QRat::from_int(2)) / (&qi() - &QRat::from_int(5));
        assert_eq!(a.bar(), expect);
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn display_parses_back() {
        let a = (&qq().pow(2) - &QRat::from_int(3)) / (&QRat::from_int(2) * &qq().pow(2) + &QRat::one());
        let b: QRat = a.to_string().parse().unwrap();
        assert_eq!(a, b);
    }
}
