//! The span `Γ_n` of the `ω_S`, and how the braid and coproduct maps act on it.

use std::collections::BTreeMap;
use std::fmt;

use super::omega::{elements, gamma_basis, omega, subset, Subset};
use super::CasimirError;
use crate::algebra::Poly;
use crate::morphisms::{apply, generators, MorphismTag, Report};
use crate::rewriter::{Engine, Mono, Outcome};
use crate::scalar::QRat;
use crate::uq::{Matrix, Solution};

/// Coordinates with respect to the spanning family `{ω_S}`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GammaVector {
    pub coeffs: BTreeMap<Subset, QRat>,
}

impl GammaVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(s: Subset) -> Self {
        let mut v = Self::zero();
        v.add_term(s, &QRat::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, s: Subset) -> QRat {
        self.coeffs.get(&s).cloned().unwrap_or_else(QRat::zero)
    }

    /// `ω_S` with fewer than three elements is zero and is dropped.
    pub fn add_term(&mut self, s: Subset, c: &QRat) {
        if s.count_ones() < 3 || c.is_zero() {
            return;
        }
        let v = &self.coeff(s) + c;
        if v.is_zero() {
            self.coeffs.remove(&s);
        } else {
            self.coeffs.insert(s, v);
        }
    }

    pub fn add_scaled(&mut self, o: &GammaVector, c: &QRat) {
        for (&s, v) in &o.coeffs {
            self.add_term(s, &(v * c));
        }
    }

    /// `Σ c_S ω_S` as an element of the algebra.
    pub fn to_poly(&self) -> Result<Poly, CasimirError> {
        let mut r = Poly::zero();
        for (&s, c) in &self.coeffs {
            r = r.add(&omega(s, None)?.scale(c));
        }
        Ok(r)
    }

    /// Coordinates along `basis`.
    pub fn column(&self, basis: &[Subset]) -> Vec<QRat> {
        basis.iter().map(|&s| self.coeff(s)).collect()
    }

    fn map_subsets(&self, f: impl Fn(Subset) -> Subset) -> GammaVector {
        let mut r = GammaVector::zero();
        for (&s, c) in &self.coeffs {
            r.add_term(f(s), c);
        }
        r
    }
}

impl fmt::Display for GammaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&s, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let name: String = elements(s).iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
            if c.is_one() {
                write!(f, "w[{name}]")?;
            } else {
                write!(f, "({c})*w[{name}]")?;
            }
        }
        Ok(())
    }
}

/// `[ω_S, C_I]` for every connected `I ⊆ {1..n}`.
pub fn check_centrality(s: Subset, n: u8, engine: &mut Engine) -> Result<Report, CasimirError> {
    let w = omega(s, None)?;
    let mut report = Report::new(format!("centrality of w{} in aw({n})", super::format_subset(s)));
    for l in generators(n) {
        let c = Poly::letter(l.clone());
        let outcome = engine.check_zero(&Poly::comm(&w, &c), n);
        report.push(format!("[w, C{l}]"), outcome);
    }
    Ok(report)
}

/// Coordinates of a central `x` in the `ω_S`, found by solving for the
/// normal form of `x` as a combination of the normal forms of the `ω_S`,
/// then confirmed by reducing the difference to zero.
pub fn express_in_gamma(x: &Poly, n: u8, engine: &mut Engine) -> Result<GammaVector, CasimirError> {
    for l in generators(n) {
        let c = Poly::letter(l.clone());
        match engine.check_zero(&Poly::comm(x, &c), n) {
            Outcome::Syntactic | Outcome::ProvedZero => {}
            Outcome::ProvedNonzero { .. } => return Err(CasimirError::NotCentral(format!("fails to commute with C{l}"))),
            _ => return Err(CasimirError::Undetermined(format!("centrality against C{l} not proved"))),
        }
    }
    let rs = engine.rules(n).ok_or(CasimirError::NoRewriting(n))?;
    let basis = gamma_basis(n);
    let nf = |p: &Poly| rs.to_rpoly(p).map(|r| rs.reduce_r(&r)).map_err(|e| CasimirError::Rewrite(e.to_string()));
    let target = nf(x)?;
    let mut cols = Vec::with_capacity(basis.len());
    for &s in &basis {
        cols.push(nf(&omega(s, None)?)?);
    }
    let mut monos: Vec<&Mono> = target.terms.keys().chain(cols.iter().flat_map(|c| c.terms.keys())).collect();
    monos.sort();
    monos.dedup();
    let a = Matrix::from_fn(monos.len(), basis.len(), |i, j| cols[j].terms.get(monos[i]).cloned().unwrap_or_else(QRat::zero));
    let b: Vec<QRat> = monos.iter().map(|m| target.terms.get(*m).cloned().unwrap_or_else(QRat::zero)).collect();
    let sol = match a.solve(&b) {
        Solution::Unique(s) => s,
        Solution::Inconsistent => return Err(CasimirError::NotInGamma(n)),
        Solution::Underdetermined => {
            return Err(CasimirError::Undetermined("normal forms of the w_S are linearly dependent".into()))
        }
    };
    let mut v = GammaVector::zero();
    for (&s, c) in basis.iter().zip(&sol) {
        v.add_term(s, c);
    }
    let d = x.sub(&v.to_poly()?);
    match engine.check_zero(&d, n) {
        Outcome::Syntactic | Outcome::ProvedZero => Ok(v),
        _ => Err(CasimirError::NotInGamma(n)),
    }
}

/// Transpose `i` and `i + 1`.
fn transpose(s: Subset, i: u8) -> Subset {
    let (a, b) = (1u64 << i, 1u64 << (i + 1));
    match (s & a != 0, s & b != 0) {
        (true, false) => (s & !a) | b,
        (false, true) => (s & !b) | a,
        _ => s,
    }
}

/// Raise every element above `i` by one.
fn shift_above(s: Subset, i: u8) -> Subset {
    let low = s & ((1u64 << (i + 1)) - 1);
    low | ((s & !((1u64 << (i + 1)) - 1)) << 1)
}

/// The expected action of `r_0` on the basis of `Γ_4`, column `j` being
/// the image of the `j`-th basis element. Reference data only; the action
/// itself is always computed.
pub fn r0_matrix_gamma4() -> Matrix<QRat> {
    let rows: [[i64; 5]; 5] = [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [1, 1, 1, 1, -2], [1, 1, 1, 0, -1]];
    Matrix::from_fn(5, 5, |i, j| QRat::from_int(rows[i][j]))
}

fn r0_on_basis(s: Subset, n: u8, engine: &mut Engine) -> Result<GammaVector, CasimirError> {
    if s & 2 == 0 {
        return Ok(GammaVector::unit(s));
    }
    let img = apply(MorphismTag::R(0), &omega(s, None)?, n).map_err(|e| CasimirError::Rewrite(e.to_string()))?;
    express_in_gamma(&img, n, engine)
}

/// Image of `v ∈ Γ_n` under `r_a`, `r̄_a` or `δ_a`. The coproduct lands in
/// `Γ_{n+1}`.
pub fn gamma_action(tag: MorphismTag, v: &GammaVector, n: u8, engine: &mut Engine) -> Result<GammaVector, CasimirError> {
    tag.check(n).map_err(|e| CasimirError::Rewrite(e.to_string()))?;
    match tag {
        MorphismTag::R(0) | MorphismTag::RBar(0) => {
            let mut r = GammaVector::zero();
            for (&s, c) in &v.coeffs {
                r.add_scaled(&r0_on_basis(s, n, engine)?, c);
            }
            Ok(r)
        }
        MorphismTag::R(i) | MorphismTag::RBar(i) => Ok(v.map_subsets(|s| transpose(s, i))),
        MorphismTag::Delta(i) => {
            let mut r = GammaVector::zero();
            for (&s, c) in &v.coeffs {
                let t = shift_above(s, i);
                if i >= 1 && s & (1u64 << i) != 0 {
                    let full = t | (1u64 << (i + 1));
                    r.add_term(full, c);
                    r.add_term(full & !(1u64 << i), c);
                    r.add_term(full & !(1u64 << (i + 1)), c);
                } else {
                    r.add_term(t, c);
                }
            }
            Ok(r)
        }
        other => Err(CasimirError::Unsupported(other.to_string())),
    }
}

/// `[ω_S]` for `S` given by its elements.
pub fn gamma_unit(elems: &[u8]) -> GammaVector {
    GammaVector::unit(subset(elems))
}

/// Matrix of `gamma_action(tag)` in the basis order, images as columns.
pub fn action_matrix(tag: MorphismTag, n: u8, engine: &mut Engine) -> Result<Matrix<QRat>, CasimirError> {
    let basis = gamma_basis(n);
    let target = if let MorphismTag::Delta(_) = tag { gamma_basis(n + 1) } else { basis.clone() };
    let mut cols = Vec::new();
    for &s in &basis {
        cols.push(gamma_action(tag, &GammaVector::unit(s), n, engine)?.column(&target));
    }
    Ok(Matrix::from_fn(target.len(), basis.len(), |i, j| cols[j][i].clone()))
}
