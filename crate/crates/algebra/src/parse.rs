//! Expression grammar for polynomials and rational functions.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" "-"? digits)?
//! atom  := digits | var | "INF" | NAME | "(" expr ")"
//! var   := a<i> | b<i> | c<i> | z<i> | t
//! ```

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::poly::{MPoly, Q};
use crate::ratfn::RatFn;
use crate::var::VarId;
use crate::AlgebraError;

pub type Env = HashMap<String, RatFn>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    env: &'a Env,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse { col: self.pos + 1, msg: msg.into() })
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

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr(&mut self) -> Result<RatFn, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let r = self.term()?;
                    acc = acc.try_add(&r)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let r = self.term()?;
                    acc = acc.try_add(&r.neg())?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFn, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let r = self.unary()?;
                    acc = acc.try_mul(&r)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let r = self.unary()?;
                    if r.is_zero() {
                        self.pos = at;
                        return self.err("division by zero");
                    }
                    acc = acc.try_div(&r)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFn, AlgebraError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if self.peek() == Some(b'+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFn, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            self.skip_ws();
            let d = match self.digits() {
                Some(d) => d,
                None => return self.err("expected exponent"),
            };
            let e: i32 = match d.parse() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFn, AlgebraError> {
        let c = match self.peek() {
            Some(c) => c,
            None => return self.err("unexpected end of input"),
        };
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if self.peek() != Some(b')') {
                return self.err("expected ')'");
            }
            self.pos += 1;
            return Ok(e);
        }
        if c.is_ascii_digit() {
            let d = self.digits().unwrap();
            let n: BigInt = d.parse().unwrap();
            return Ok(RatFn::constant(Q::from_integer(n)));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = self.pos;
            while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                self.pos += 1;
            }
            let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            if word == "INF" {
                return Ok(RatFn::Infinite);
            }
            if let Some(v) = self.env.get(word) {
                return Ok(v.clone());
            }
            if let Some(v) = parse_var(word) {
                return Ok(RatFn::from_poly(MPoly::var(v)));
            }
            self.pos = start;
            return self.err(format!("unknown symbol '{word}'"));
        }
        self.err(format!("unexpected character '{}'", c as char))
    }
}

/// Reads a variable name such as `a1`, `b2`, `c10`, `z3` or `t`.
pub fn parse_var(word: &str) -> Option<VarId> {
    if word == "t" {
        return Some(VarId::t());
    }
    let (head, tail) = word.split_at(1);
    if tail.is_empty() || !tail.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let i: usize = tail.parse().ok()?;
    match head {
        "a" if i >= 1 => Some(VarId::alpha(i)),
        "b" if i >= 1 => Some(VarId::beta(i)),
        "c" => Some(VarId::c(i)),
        "z" if i >= 1 => Some(VarId::z(i)),
        _ => None,
    }
}

pub fn parse_ratfn_with(src: &str, env: &Env) -> Result<RatFn, AlgebraError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, env };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

pub fn parse_ratfn(src: &str) -> Result<RatFn, AlgebraError> {
    parse_ratfn_with(src, &Env::new())
}

pub fn parse_poly(src: &str) -> Result<MPoly, AlgebraError> {
    let r = parse_ratfn(src)?;
    if r.is_infinite() {
        return Err(AlgebraError::InfiniteValue);
    }
    r.to_poly()
}

/// `c_0 = 1` is implicit in quotient-variable formulas.
pub fn drop_c0(p: &MPoly) -> MPoly {
    let mut asg = std::collections::BTreeMap::new();
    asg.insert(VarId::c(0), MPoly::one());
    p.substitute_partial(&asg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qf;

    #[test]
    fn parses_table_row() {
        let r = parse_ratfn("(1/3)*(a1-2*a2)*(a2-2*a1)").unwrap();
        let a1 = MPoly::var(VarId::alpha(1));
        let a2 = MPoly::var(VarId::alpha(2));
        let e = (&(&a1 - &a2.scale(&Q::from_integer(2.into()))) * &(&a2 - &a1.scale(&Q::from_integer(2.into())))).scale(&qf(1, 3));
        assert_eq!(r.to_poly().unwrap(), e);
    }

    #[test]
    fn precedence_and_powers() {
        let p = parse_poly("-a1^2 + 2*a1*a2 - a2^2").unwrap();
        let q = parse_poly("-(a1 - a2)^2").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn factored_denominator() {
        let r = parse_ratfn("(a1-a2)^2*(2*a1-a2)*(a1-2*a2)/(a1+a2)").unwrap();
        assert_eq!(r.den_factors().len(), 1);
        assert_eq!(r.degree(), Some(3));
    }

    #[test]
    fn errors_carry_column() {
        match parse_ratfn("a1 + q7") {
            Err(AlgebraError::Parse { col, .. }) => assert_eq!(col, 6),
            other => panic!("{other:?}"),
        }
        assert!(parse_ratfn("INF").unwrap().is_infinite());
    }
}
