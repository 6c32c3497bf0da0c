//! Text syntax for polynomials: `3/2*x^2*u - y^2*v`.
//!
//! Variables are the ring's declared names; `*` between factors is optional
//! (`3x^2u` parses when `x` and `u` are declared), with identifiers matched
//! greedily against the declared names.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{format_rational, Rational};
use crate::error::{Error, Result};

use super::{GradedRing, Monomial, Polynomial};

pub fn parse_polynomial(ring: &Arc<GradedRing>, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = p.polynomial()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let names = p.ring().names();
    let mut out = String::new();
    for (i, (m, c)) in p.sorted_terms().into_iter().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        let mono = format_monomial(names, m);
        if mono.is_empty() {
            out.push_str(&format_rational(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&format_rational(&abs));
                out.push('*');
            }
            out.push_str(&mono);
        }
    }
    out
}

/// `x^2*u`, or the empty string for the constant monomial.
pub fn format_monomial(names: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    parts.join("*")
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<GradedRing>,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
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

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                None if first => return Err(self.error("empty polynomial")),
                None => break,
                Some(_) if first => 1,
                Some(_) => return Err(self.error("expected `+` or `-`")),
            };
            first = false;
            let (m, c) = self.term()?;
            let c = if sign < 0 { -c } else { c };
            acc = &acc + &Polynomial::monomial(self.ring, m, c);
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(b'*') if factors > 0 => {
                    self.pos += 1;
                    self.factor(&mut coeff, &mut exps)?;
                }
                Some(c) if c.is_ascii_digit() || c.is_ascii_alphabetic() || c == b'_' || c == b'(' => {
                    self.factor(&mut coeff, &mut exps)?;
                }
                _ => break,
            }
            factors += 1;
        }
        if factors == 0 {
            return Err(self.error("expected a term"));
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn factor(&mut self, coeff: &mut Rational, exps: &mut [u32]) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut q = Rational::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    q /= Rational::from_integer(d);
                }
                *coeff *= q;
                Ok(())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.polynomial()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                // only constants may be parenthesized
                if inner.terms().keys().any(|m| !m.is_one()) {
                    return Err(self.error("parenthesized factors must be constants"));
                }
                *coeff *= inner.coefficient(&Monomial::one(self.ring.nvars()));
                Ok(())
            }
            Some(_) => {
                let var = self.variable()?;
                let mut e = 1u32;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let n = self.integer()?;
                    e = u32::try_from(&n).map_err(|_| self.error("exponent out of range"))?;
                }
                exps[var] += e;
                Ok(())
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn variable(&mut self) -> Result<usize> {
        let rest = &self.src[self.pos..];
        let best = self
            .ring
            .names()
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_bytes()))
            .max_by_key(|(_, n)| n.len());
        match best {
            Some((i, n)) => {
                self.pos += n.len();
                Ok(i)
            }
            None => Err(self.error("unknown variable")),
        }
    }
}
