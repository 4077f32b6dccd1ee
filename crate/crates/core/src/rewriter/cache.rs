//! Plain-text persistence of completed rule sets.
//!
//! ```text
//! awcache v1 n=<n> degbound=<d>
//! order: <letter> <letter> ...
//! rule: <X>*<Y> := <rhs>
//! rel: <expr> = 0
//! ```
//!
//! A `# incomplete` line records a completion stopped at its round cap.

use std::fs;
use std::io::Write;
use std::path::Path;

use thiserror::Error;

use super::{LetterOrder, RewriteError, RuleSet};
use crate::syntax::{format_poly, parse_poly, SyntaxError};

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Syntax { line: usize, source: SyntaxError },
    #[error("line {line}: {source}")]
    Rewrite { line: usize, source: RewriteError },
    #[error("cache is for n={found} degbound={found_bound}, wanted n={n} degbound={bound}")]
    Mismatch { n: u8, bound: u16, found: u8, found_bound: u16 },
    #[error("cache was built with a different letter order")]
    OrderMismatch,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn header(line: &str) -> Option<(u8, u16)> {
    let mut it = line.split_whitespace();
    if it.next()? != "awcache" || it.next()? != "v1" {
        return None;
    }
    let n = it.next()?.strip_prefix("n=")?.parse().ok()?;
    let d = it.next()?.strip_prefix("degbound=")?.parse().ok()?;
    it.next().is_none().then_some((n, d))
}

impl RuleSet {
    pub fn to_cache(&self) -> String {
        let mut s = format!("awcache v1 n={} degbound={}\n", self.n(), self.completed_at.unwrap_or(self.degree_bound));
        if self.incomplete {
            s.push_str("# incomplete\n");
        }
        let letters: Vec<String> = self.order.letters.iter().map(|l| l.to_string()).collect();
        s.push_str(&format!("order: {}\n", letters.join(" ")));
        for (&(x, y), rhs) in &self.rules {
            let (a, b) = (&self.order.letters[x as usize], &self.order.letters[y as usize]);
            s.push_str(&format!("rule: {a}*{b} := {}\n", format_poly(&self.to_poly(rhs))));
        }
        for g in &self.linear {
            s.push_str(&format!("rel: {} = 0\n", format_poly(&self.to_poly(&g.poly))));
        }
        s
    }

    /// Rebuild a rule set exactly as written: no reduction is applied on load.
    pub fn from_cache(text: &str) -> Result<RuleSet, CacheError> {
        let fmt = |line: usize, msg: &str| CacheError::Format { line, msg: msg.into() };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (_, first) = lines.next().ok_or_else(|| fmt(1, "empty cache"))?;
        let (n, bound) = header(first).ok_or_else(|| fmt(1, "expected 'awcache v1 n=<n> degbound=<d>'"))?;
        let mut incomplete = false;
        let mut rs: Option<RuleSet> = None;
        for (ln, line) in lines {
            if line.is_empty() {
                continue;
            }
            if line == "# incomplete" {
                incomplete = true;
                continue;
            }
            if line.starts_with('#') {
                continue;
            }
            let syn = |source| CacheError::Syntax { line: ln, source };
            let rw = |source| CacheError::Rewrite { line: ln, source };
            if let Some(rest) = line.strip_prefix("order:") {
                if rs.is_some() {
                    return Err(fmt(ln, "second order line"));
                }
                let mut letters = Vec::new();
                for tok in rest.split_whitespace() {
                    let p = parse_poly(tok, n).map_err(syn)?;
                    match p.letters().as_slice() {
                        [l] if p.len() == 1 => letters.push(l.clone()),
                        _ => return Err(fmt(ln, "order entries must be single letters")),
                    }
                }
                let order = LetterOrder::from_letters(n, letters).map_err(|m| fmt(ln, &m))?;
                rs = Some(RuleSet::empty(order));
                continue;
            }
            let set = rs.as_mut().ok_or_else(|| fmt(ln, "rule before the order line"))?;
            if let Some(rest) = line.strip_prefix("rule:") {
                let (lhs, rhs) = rest.split_once(":=").ok_or_else(|| fmt(ln, "expected ':='"))?;
                let lhs = parse_poly(lhs.trim(), n).map_err(syn)?;
                let (w, c) = lhs.terms().next().ok_or_else(|| fmt(ln, "empty left-hand side"))?;
                if lhs.len() != 1 || w.len() != 2 || !c.is_one() {
                    return Err(fmt(ln, "left-hand side must be a product of two letters"));
                }
                let idx = |l| set.order.index_of(l).ok_or_else(|| fmt(ln, "left-hand letter outside the alphabet"));
                let (x, y) = (idx(&w[0])?, idx(&w[1])?);
                let rhs = set.to_rpoly(&parse_poly(rhs.trim(), n).map_err(syn)?).map_err(rw)?;
                set.set_rule(x, y, rhs);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let body = rest.trim().strip_suffix("= 0").ok_or_else(|| fmt(ln, "expected '= 0'"))?;
                let r = set.to_rpoly(&parse_poly(body.trim(), n).map_err(syn)?).map_err(rw)?;
                if !set.push_linear(r) {
                    return Err(fmt(ln, "zero relation"));
                }
            } else {
                return Err(fmt(ln, "expected 'order:', 'rule:' or 'rel:'"));
            }
        }
        let mut rs = rs.ok_or_else(|| fmt(1, "no order line"))?;
        rs.recompute_gaps();
        rs.mark_completed(bound);
        rs.incomplete = incomplete;
        Ok(rs)
    }

    /// Write to `path` through a temporary file in the same directory.
    pub fn save_cache(&self, path: &Path) -> Result<(), CacheError> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = std::path::PathBuf::from(tmp);
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(self.to_cache().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load_cache(path: &Path) -> Result<RuleSet, CacheError> {
        RuleSet::from_cache(&fs::read_to_string(path)?)
    }
}

/// The completed rule set at rank `n` from `path` if it holds one for this
/// bound, otherwise computed and written there.
pub fn load_or_complete(path: &Path, n: u8, degree_bound: u16, max_iter: usize) -> Result<(RuleSet, bool), CacheError> {
    if path.exists() {
        let rs = RuleSet::load_cache(path)?;
        if rs.n() != n || rs.completed_at() != Some(degree_bound) {
            return Err(CacheError::Mismatch {
                n,
                bound: degree_bound,
                found: rs.n(),
                found_bound: rs.completed_at().unwrap_or(0),
            });
        }
        if rs.order != LetterOrder::default_for(n) {
            return Err(CacheError::OrderMismatch);
        }
        return Ok((rs, true));
    }
    let mut rs = super::seed_rules(n, LetterOrder::default_for(n)).map_err(|source| CacheError::Rewrite { line: 0, source })?;
    rs.complete(degree_bound, max_iter);
    rs.save_cache(path)?;
    Ok((rs, false))
}
