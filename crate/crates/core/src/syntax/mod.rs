//! Surface syntax for elements of `aw(n)`: parsing, printing and lowering
//! to polynomials.
//!
//! ```text
//! expr   := "-"? term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := atom ("^" "-"? uint)?
//! atom   := uint | "q" | gen | "qcomm(" expr "," expr ")"
//!         | "qcommbar(" expr "," expr ")" | "comm(" expr "," expr ")" | "(" expr ")"
//! gen    := ("C" | "K") "[" block (";" block)* "]"
//! block  := uint ".." uint | uint
//! ```
//!
//! Division and negative exponents are only accepted on scalars.

mod parse;
mod print;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{expand_poly, AlgebraError, Label, Poly};
use crate::racah::KPoly;
use crate::scalar::QRat;

pub use parse::parse;
pub use print::{format_expr, format_kpoly, format_poly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SyntaxError {
    #[error("at column {}: {msg}", pos + 1)]
    Parse { pos: usize, msg: String },
    #[error("{label}: {source}")]
    Label { label: String, source: AlgebraError },
    #[error("{0}")]
    Lower(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    C,
    K,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    Gen(Letter, Vec<(u8, u8)>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    QComm(Box<Expr>, Box<Expr>),
    QCommBar(Box<Expr>, Box<Expr>),
    Comm(Box<Expr>, Box<Expr>),
}

impl std::fmt::Display for Expr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", print::format_expr(self))
    }
}

fn blocks_text(blocks: &[(u8, u8)]) -> String {
    let b: Vec<String> = blocks.iter().map(|&(a, b)| if a == b { a.to_string() } else { format!("{a}..{b}") }).collect();
    b.join(";")
}

fn label(blocks: &[(u8, u8)], n: u8) -> Result<Label, SyntaxError> {
    Label::new(blocks, n).map_err(|source| SyntaxError::Label { label: format!("C[{}]", blocks_text(blocks)), source })
}

fn scalar_of(p: &Poly, what: &str) -> Result<QRat, SyntaxError> {
    if p.is_zero() {
        return Ok(QRat::zero());
    }
    match p.coeff(&[]) {
        Some(c) if p.len() == 1 => Ok(c.clone()),
        _ => Err(SyntaxError::Lower(format!("{what} must be a scalar"))),
    }
}

/// The element of `aw(n)` denoted by `e`. Labels are kept as letters,
/// including those with holes and decreasing ones.
pub fn lower(e: &Expr, n: u8) -> Result<Poly, SyntaxError> {
    let bin = |a: &Expr, b: &Expr| -> Result<(Poly, Poly), SyntaxError> { Ok((lower(a, n)?, lower(b, n)?)) };
    Ok(match e {
        Expr::Int(k) => Poly::scalar(&QRat::from_bigint(k.clone())),
        Expr::Q => Poly::scalar(&QRat::q()),
        Expr::Gen(Letter::C, blocks) => Poly::letter(label(blocks, n)?),
        Expr::Gen(Letter::K, _) => return Err(SyntaxError::Lower("K letters only occur in limits".into())),
        Expr::Add(a, b) => {
            let (a, b) = bin(a, b)?;
            a.add(&b)
        }
        Expr::Sub(a, b) => {
            let (a, b) = bin(a, b)?;
            a.sub(&b)
        }
        Expr::Neg(a) => lower(a, n)?.neg(),
        Expr::Mul(a, b) => {
            let (a, b) = bin(a, b)?;
            a.mul(&b)
        }
        Expr::Div(a, b) => {
            let (a, b) = bin(a, b)?;
            let d = scalar_of(&b, "a divisor")?;
            let inv = d.inv().map_err(|_| SyntaxError::Lower("division by zero".into()))?;
            a.scale(&inv)
        }
        Expr::Pow(a, k) => {
            let a = lower(a, n)?;
            if *k >= 0 {
                a.pow(*k as u32)
            } else {
                let s = scalar_of(&a, "the base of a negative power")?;
                let inv = s.inv().map_err(|_| SyntaxError::Lower("negative power of zero".into()))?;
                Poly::scalar(&inv.pow(k.unsigned_abs()))
            }
        }
        Expr::QComm(a, b) => {
            let (a, b) = bin(a, b)?;
            Poly::qcomm(&a, &b)
        }
        Expr::QCommBar(a, b) => {
            let (a, b) = bin(a, b)?;
            Poly::qcommbar(&a, &b)
        }
        Expr::Comm(a, b) => {
            let (a, b) = bin(a, b)?;
            Poly::comm(&a, &b)
        }
    })
}

/// As [`lower`], with every label with holes expanded into generators.
pub fn lower_expanded(e: &Expr, n: u8) -> Result<Poly, SyntaxError> {
    Ok(expand_poly(&lower(e, n)?))
}

/// Parse and lower in one step.
pub fn parse_poly(text: &str, n: u8) -> Result<Poly, SyntaxError> {
    lower(&parse(text)?, n)
}

fn rational_of(p: &KPoly, what: &str) -> Result<BigRational, SyntaxError> {
    if p.is_zero() {
        return Ok(BigRational::zero());
    }
    match p.terms.get(&Vec::new()) {
        Some(c) if p.terms.len() == 1 => Ok(c.clone()),
        _ => Err(SyntaxError::Lower(format!("{what} must be a rational number"))),
    }
}

/// A polynomial in the `K` letters with rational coefficients.
pub fn lower_k(e: &Expr) -> Result<KPoly, SyntaxError> {
    let bin = |a: &Expr, b: &Expr| -> Result<(KPoly, KPoly), SyntaxError> { Ok((lower_k(a)?, lower_k(b)?)) };
    Ok(match e {
        Expr::Int(k) => KPoly::constant(BigRational::from_integer(k.clone())),
        Expr::Gen(Letter::K, blocks) => KPoly::letter(label(blocks, 63)?),
        Expr::Q | Expr::Gen(Letter::C, _) | Expr::QComm(..) | Expr::QCommBar(..) => {
            return Err(SyntaxError::Lower("only K letters and rational numbers are allowed here".into()))
        }
        Expr::Add(a, b) => {
            let (a, b) = bin(a, b)?;
            a.add(&b)
        }
        Expr::Sub(a, b) => {
            let (a, b) = bin(a, b)?;
            a.sub(&b)
        }
        Expr::Neg(a) => lower_k(a)?.neg(),
        Expr::Mul(a, b) => {
            let (a, b) = bin(a, b)?;
            a.mul(&b)
        }
        Expr::Div(a, b) => {
            let (a, b) = bin(a, b)?;
            let d = rational_of(&b, "a divisor")?;
            if d.is_zero() {
                return Err(SyntaxError::Lower("division by zero".into()));
            }
            a.scale(&(BigRational::one() / d))
        }
        Expr::Pow(a, k) => {
            let a = lower_k(a)?;
            if *k < 0 {
                let s = rational_of(&a, "the base of a negative power")?;
                if s.is_zero() {
                    return Err(SyntaxError::Lower("negative power of zero".into()));
                }
                KPoly::constant(num_traits::pow(BigRational::one() / s, k.unsigned_abs() as usize))
            } else {
                (0..*k).fold(KPoly::int(1), |acc, _| acc.mul(&a))
            }
        }
        Expr::Comm(a, b) => {
            let (a, b) = bin(a, b)?;
            KPoly::comm(&a, &b)
        }
    })
}

#[cfg(test)]
mod tests;
