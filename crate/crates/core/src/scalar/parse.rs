//! Text form of rational functions: integers, `q`, `q^k`, `+ - * /`, parentheses.

use num_bigint::BigInt;

use super::{QRat, ScalarError};

struct P<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> P<'a> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse { pos: self.i, msg: msg.to_string() }
    }

    fn expr(&mut self) -> Result<QRat, ScalarError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.i += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QRat, ScalarError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.i += 1;
                    let d = self.power()?;
                    let at = self.i;
                    acc = acc.checked_div(&d).map_err(|_| ScalarError::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn int(&mut self) -> Result<BigInt, ScalarError> {
        self.ws();
        let st = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if st == self.i {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[st..self.i]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn power(&mut self) -> Result<QRat, ScalarError> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let neg = if self.peek() == Some(b'-') {
                self.i += 1;
                true
            } else {
                false
            };
            let e: u32 = self
                .int()?
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            let p = base.pow(e);
            return if neg {
                p.inv().map_err(|_| self.err("negative power of zero"))
            } else {
                Ok(p)
            };
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<QRat, ScalarError> {
        match self.peek() {
            Some(b'q') => {
                self.i += 1;
                Ok(QRat::q())
            }
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.i += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => Ok(QRat::from_bigint(self.int()?)),
            _ => Err(self.err("expected scalar")),
        }
    }
}

pub fn parse_qrat(s: &str) -> Result<QRat, ScalarError> {
    let mut p = P { s: s.as_bytes(), i: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}
