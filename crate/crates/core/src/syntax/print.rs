use super::{blocks_text, Expr, Letter};
use crate::algebra::Poly;
use crate::racah::KPoly;
use crate::scalar::QRat;

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) | Expr::Neg(_) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Pow(..) => 3,
        _ => 4,
    }
}

fn at(e: &Expr, min: u8) -> String {
    let s = format_expr(e);
    if prec(e) < min {
        format!("({s})")
    } else {
        s
    }
}

/// Text that parses back to the same tree.
pub fn format_expr(e: &Expr) -> String {
    match e {
        Expr::Int(k) => k.to_string(),
        Expr::Q => "q".into(),
        Expr::Gen(l, blocks) => {
            let c = match l {
                Letter::C => 'C',
                Letter::K => 'K',
            };
            format!("{c}[{}]", blocks_text(blocks))
        }
        Expr::Add(a, b) => format!("{} + {}", at(a, 1), at(b, 2)),
        Expr::Sub(a, b) => format!("{} - {}", at(a, 1), at(b, 2)),
        Expr::Neg(a) => format!("-{}", at(a, 2)),
        Expr::Mul(a, b) => format!("{}*{}", at(a, 2), at(b, 3)),
        Expr::Div(a, b) => format!("{}/{}", at(a, 2), at(b, 3)),
        Expr::Pow(a, k) => format!("{}^{k}", at(a, 4)),
        Expr::QComm(a, b) => format!("qcomm({}, {})", format_expr(a), format_expr(b)),
        Expr::QCommBar(a, b) => format!("qcommbar({}, {})", format_expr(a), format_expr(b)),
        Expr::Comm(a, b) => format!("comm({}, {})", format_expr(a), format_expr(b)),
    }
}

/// No `+` or `-` outside parentheses, except a leading sign or one after `^`.
fn is_product(s: &str) -> bool {
    let mut depth = 0;
    let b = s.as_bytes();
    for (i, &c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && b[i - 1] != b'^' => return false,
            _ => {}
        }
    }
    true
}

/// `(negative, magnitude text)`; the magnitude is empty for a unit coefficient
/// on a nonempty word.
fn coeff_text(c: &QRat, has_word: bool) -> (bool, String) {
    let s = c.to_string();
    let (neg, mag) = if s.starts_with('-') && is_product(&s) { (true, (-c).to_string()) } else { (false, s) };
    if has_word && mag == "1" {
        return (neg, String::new());
    }
    if is_product(&mag) {
        (neg, mag)
    } else {
        (neg, format!("({mag})"))
    }
}

/// A polynomial in the expression grammar; `parse_poly` inverts it.
pub fn format_poly(p: &Poly) -> String {
    let mut out = String::new();
    for (k, (w, c)) in p.terms().enumerate() {
        let (neg, mag) = coeff_text(c, !w.is_empty());
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut parts: Vec<String> = Vec::new();
        if !mag.is_empty() {
            parts.push(mag);
        }
        parts.extend(w.iter().map(|l| l.to_string()));
        out.push_str(&parts.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_kpoly(p: &KPoly) -> String {
    p.to_string()
}
