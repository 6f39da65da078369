//! Text form of monomial ideals: `(x^2,xy,y^3)`, `(x1^2, x1*x2, x2^3)`.

use crate::ideal::{Exponent, MonomialIdeal};
use crate::IdealError;

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> IdealError {
        IdealError::Parse { col: self.pos + 1, msg: msg.to_string() }
    }

    fn number(&mut self) -> Result<u32, IdealError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.err("number too large"))
    }

    /// 0-based variable index.
    fn var(&mut self) -> Result<usize, IdealError> {
        let c = self.peek().ok_or_else(|| self.err("expected a variable"))?;
        self.pos += 1;
        match c {
            b'x' if self.s.get(self.pos).is_some_and(|d| d.is_ascii_digit()) => {
                let k = self.number()? as usize;
                if k == 0 {
                    return Err(self.err("variables are numbered from 1"));
                }
                Ok(k - 1)
            }
            b'x' => Ok(0),
            b'y' => Ok(1),
            b'z' => Ok(2),
            b'u' => Ok(3),
            _ => {
                self.pos -= 1;
                Err(self.err("expected a variable"))
            }
        }
    }

    fn monomial(&mut self) -> Result<Vec<(usize, u32)>, IdealError> {
        let mut out = Vec::new();
        loop {
            let v = self.var()?;
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.number()?
            } else {
                1
            };
            out.push((v, e));
            match self.peek() {
                Some(b'*') => self.pos += 1,
                Some(b'x' | b'y' | b'z' | b'u') => {}
                _ => return Ok(out),
            }
        }
    }
}

/// Parses generators and returns them with the number of variables seen.
pub fn parse_generators(src: &str) -> Result<(usize, Vec<Exponent>), IdealError> {
    let mut lx = Lexer { s: src.as_bytes(), pos: 0 };
    let paren = lx.peek() == Some(b'(');
    if paren {
        lx.pos += 1;
    }
    let mut mons = Vec::new();
    loop {
        mons.push(lx.monomial()?);
        match lx.peek() {
            Some(b',') => lx.pos += 1,
            Some(b')') if paren => {
                lx.pos += 1;
                break;
            }
            None if !paren => break,
            _ => return Err(lx.err("expected ',' or ')'")),
        }
    }
    if lx.peek().is_some() {
        return Err(lx.err("trailing input"));
    }
    let n = mons.iter().flatten().map(|&(v, _)| v + 1).max().unwrap_or(0);
    let gens = mons
        .into_iter()
        .map(|m| {
            let mut e = vec![0; n];
            for (v, k) in m {
                e[v] += k;
            }
            e
        })
        .collect();
    Ok((n, gens))
}

/// Parses an ideal in as many variables as its generators mention.
pub fn parse_ideal(src: &str) -> Result<MonomialIdeal, IdealError> {
    let (n, gens) = parse_generators(src)?;
    MonomialIdeal::from_generators(n, &gens)
}

/// Parses an ideal in exactly `n` variables; unmentioned variables make it
/// infinite-codimensional.
pub fn parse_ideal_in(src: &str, n: usize) -> Result<MonomialIdeal, IdealError> {
    let (k, gens) = parse_generators(src)?;
    if k > n {
        return Err(IdealError::TooManyVariables { found: k, n });
    }
    let gens: Vec<Exponent> = gens
        .into_iter()
        .map(|mut g| {
            g.resize(n, 0);
            g
        })
        .collect();
    MonomialIdeal::from_generators(n, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syntax() {
        assert_eq!(parse_ideal("(x^4)").unwrap().codim(), 3);
        assert_eq!(parse_ideal("(x1^2, x1*x2, x2^3)").unwrap(), parse_ideal("(x^2,xy,y^3)").unwrap());
        assert_eq!(parse_ideal("(x^2,y^2,z^3,xy,yz,zx)").unwrap().codim(), 4);
        assert!(matches!(parse_ideal("(x^2,,y)"), Err(IdealError::Parse { col: 6, .. })));
        assert!(matches!(parse_ideal("(x^2,xy)"), Err(IdealError::InfiniteCodimension(2))));
        assert!(parse_ideal_in("(x^3)", 2).is_err());
    }
}
