use num_bigint::BigInt;

use super::{Expr, Letter, SyntaxError};

struct P<'a> {
    s: &'a [u8],
    i: usize,
}

fn b(e: Expr) -> Box<Expr> {
    Box::new(e)
}

impl<'a> P<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError::Parse { pos: self.i, msg: msg.into() })
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.ws();
        let k = kw.as_bytes();
        if self.s[self.i..].starts_with(k) {
            self.i += k.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut acc = if self.eat(b'-') { Expr::Neg(b(self.term()?)) } else { self.term()? };
        loop {
            if self.eat(b'+') {
                acc = Expr::Add(b(acc), b(self.term()?));
            } else if self.eat(b'-') {
                acc = Expr::Sub(b(acc), b(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = Expr::Mul(b(acc), b(self.factor()?));
            } else if self.eat(b'/') {
                acc = Expr::Div(b(acc), b(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let at = self.i;
        let k = self.uint()?;
        let k: i32 = match k.try_into() {
            Ok(k) => k,
            Err(_) => return Err(SyntaxError::Parse { pos: at, msg: "exponent too large".into() }),
        };
        Ok(Expr::Pow(b(base), if neg { -k } else { k }))
    }

    fn uint(&mut self) -> Result<BigInt, SyntaxError> {
        self.ws();
        let st = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if st == self.i {
            return self.err("expected an unsigned integer");
        }
        Ok(std::str::from_utf8(&self.s[st..self.i]).unwrap().parse().unwrap())
    }

    fn index(&mut self) -> Result<u8, SyntaxError> {
        let at = self.i;
        let k = self.uint()?;
        match u8::try_from(k) {
            Ok(k) if (1..64).contains(&k) => Ok(k),
            _ => Err(SyntaxError::Parse { pos: at, msg: "index must lie in 1..63".into() }),
        }
    }

    fn pair(&mut self) -> Result<(Box<Expr>, Box<Expr>), SyntaxError> {
        let a = self.expr()?;
        self.expect(b',')?;
        let c = self.expr()?;
        self.expect(b')')?;
        Ok((b(a), b(c)))
    }

    fn gen(&mut self, letter: Letter) -> Result<Expr, SyntaxError> {
        self.expect(b'[')?;
        let mut blocks = Vec::new();
        loop {
            let at = self.i;
            let lo = self.index()?;
            let hi = if self.keyword("..") { self.index()? } else { lo };
            if lo > hi {
                return Err(SyntaxError::Parse { pos: at, msg: format!("empty block {lo}..{hi}") });
            }
            blocks.push((lo, hi));
            if !self.eat(b';') {
                break;
            }
        }
        self.expect(b']')?;
        Ok(Expr::Gen(letter, blocks))
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        if self.keyword("qcommbar(") {
            let (x, y) = self.pair()?;
            return Ok(Expr::QCommBar(x, y));
        }
        if self.keyword("qcomm(") {
            let (x, y) = self.pair()?;
            return Ok(Expr::QComm(x, y));
        }
        if self.keyword("comm(") {
            let (x, y) = self.pair()?;
            return Ok(Expr::Comm(x, y));
        }
        match self.peek() {
            Some(b'C') => {
                self.i += 1;
                self.gen(Letter::C)
            }
            Some(b'K') => {
                self.i += 1;
                self.gen(Letter::K)
            }
            Some(b'q') => {
                self.i += 1;
                Ok(Expr::Q)
            }
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.uint()?)),
            Some(_) => self.err("expected a number, q, a generator, a bracket or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = P { s: text.as_bytes(), i: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected input (multiplication must be written with '*')");
    }
    Ok(e)
}
