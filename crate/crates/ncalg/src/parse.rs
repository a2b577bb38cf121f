//! Text form of polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*' factor) | ('/' number))*
//! factor := atom ['^' exponent]
//! atom   := number | 'q' | 'c' | generator | '(' expr ')'
//! ```
//!
//! Numbers are integers, decimals or are built with `/`. Generators are
//! `alpha beta alphastar betastar` on SU_q(2) and `a b bstar` on the
//! spheres. `q^x` takes a signed half-integer exponent such as `q^-2`,
//! `q^(1/2)` or `q^{-3/2}`; other powers must be non-negative integers.
//! `c` is the generic-sphere parameter.

use qcore::HalfInt;

use crate::{AlgebraPreset, Coeff, NCPoly, NcError};

struct Parser<'a, C: Coeff> {
    src: &'a [u8],
    pos: usize,
    alg: &'a AlgebraPreset<C>,
}

/// Exact rational read from the input, kept as `num/den`.
#[derive(Clone, Copy)]
struct Ratio(i64, i64);

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Ratio {
    fn reduced(self) -> Ratio {
        let g = gcd(self.0, self.1).max(1);
        let s = if self.1 < 0 { -1 } else { 1 };
        Ratio(s * self.0 / g, s * self.1 / g)
    }
}

impl<'a, C: Coeff> Parser<'a, C> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, NcError> {
        Err(NcError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<NCPoly<C>, NcError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly<C>, NcError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                let f = self.factor()?;
                acc = self.alg.mul(&acc, &f);
            } else if self.eat(b'/') {
                let Ratio(n, d) = self.number()?;
                if n == 0 {
                    return self.err("division by zero");
                }
                acc = acc.scale(&C::from_ratio(d, n));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<NCPoly<C>, NcError> {
        self.skip_ws();
        let is_q = self.src.get(self.pos) == Some(&b'q') && !self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_alphanumeric());
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let Ratio(n, d) = self.exponent()?;
        if is_q {
            if d != 1 && d != 2 {
                return self.err("exponent of q must be a half-integer");
            }
            let twice = (n * (2 / d)) as i32;
            return Ok(NCPoly::scalar(self.alg.q_pow(HalfInt::from_twice(twice))));
        }
        if d != 1 || n < 0 {
            return self.err("powers must be non-negative integers");
        }
        Ok(self.alg.pow(&base, n as u32))
    }

    fn exponent(&mut self) -> Result<Ratio, NcError> {
        let close = if self.eat(b'(') {
            Some(b')')
        } else if self.eat(b'{') {
            Some(b'}')
        } else {
            None
        };
        let neg = self.eat(b'-');
        let mut r = self.number()?;
        if close.is_some() && self.eat(b'/') {
            let Ratio(n, d) = self.number()?;
            if n == 0 {
                return self.err("zero denominator");
            }
            r = Ratio(r.0 * d, r.1 * n).reduced();
        }
        if let Some(c) = close {
            if !self.eat(c) {
                return self.err("unclosed exponent");
            }
        }
        Ok(if neg { Ratio(-r.0, r.1) } else { r })
    }

    fn number(&mut self) -> Result<Ratio, NcError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'.') {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        if text.is_empty() {
            self.pos = start;
            return self.err("expected a number");
        }
        let (int, frac) = text.split_once('.').unwrap_or((text, ""));
        if frac.contains('.') || frac.len() > 15 || int.len() > 15 {
            self.pos = start;
            return self.err("malformed number");
        }
        let den = 10i64.pow(frac.len() as u32);
        let digits = format!("{int}{frac}");
        let num: i64 = digits.parse().map_err(|_| NcError::Parse { pos: start, msg: "malformed number".into() })?;
        Ok(Ratio(num, den).reduced())
    }

    fn atom(&mut self) -> Result<NCPoly<C>, NcError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let Ratio(n, d) = self.number()?;
                Ok(NCPoly::scalar(C::from_ratio(n, d)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                match name {
                    "q" => Ok(NCPoly::scalar(self.alg.q_pow(HalfInt::ONE))),
                    "c" => Ok(NCPoly::scalar(C::sphere_param(&self.alg.ctx))),
                    _ => match self.alg.generator_index(name) {
                        Some(g) => Ok(NCPoly::generator(g)),
                        None => {
                            self.pos = start;
                            self.err(format!("unknown generator '{name}' for {}", self.alg.name()))
                        }
                    },
                }
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse and reduce a polynomial over `alg`.
pub fn parse_poly<C: Coeff>(alg: &AlgebraPreset<C>, src: &str) -> Result<NCPoly<C>, NcError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, alg };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(alg.normal_form(&out))
}
