//! Recursive-descent parser for integer polynomial expressions in one
//! variable x, with `+ - * ^` and parentheses. Errors carry the byte
//! position of the offending token.
//!
//!   expr   := ['-'] term (('+'|'-') term)*
//!   term   := factor ('*' factor)*
//!   factor := atom ('^' uint)?
//!   atom   := uint | 'x' | '(' expr ')'

use minfix_core::density::IntPoly;
use num_bigint::BigInt;

#[derive(Debug)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn atom(&mut self) -> Result<IntPoly, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.bump();
                Ok(IntPoly::from_i64(&[0, 1]))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(IntPoly::new(vec![n]))
            }
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn factor(&mut self) -> Result<IntPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.uint()?;
            let e: u32 = e.try_into().map_err(|_| ParseError {
                position: self.pos,
                message: "exponent too large".into(),
            })?;
            if e > 64 {
                return self.err("exponent too large (max 64)");
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn term(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.bump();
            IntPoly::new(Vec::new()).sub_poly(&self.term()?)
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub_poly(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }
}

pub fn parse_poly(src: &str) -> Result<IntPoly, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_polys() {
        assert_eq!(
            parse_poly("x^3-2").unwrap(),
            IntPoly::from_i64(&[-2, 0, 0, 1])
        );
        assert_eq!(
            parse_poly("x^4 - x - 1").unwrap(),
            IntPoly::from_i64(&[-1, -1, 0, 0, 1])
        );
        assert_eq!(
            parse_poly("x^4+1").unwrap(),
            IntPoly::from_i64(&[1, 0, 0, 0, 1])
        );
        assert_eq!(
            parse_poly("3*x^2 + 2*x + 1").unwrap(),
            IntPoly::from_i64(&[1, 2, 3])
        );
        assert_eq!(
            parse_poly("(x-1)*(x+1)").unwrap(),
            IntPoly::from_i64(&[-1, 0, 1])
        );
        assert_eq!(parse_poly("-x+5").unwrap(), IntPoly::from_i64(&[5, -1]));
    }

    #[test]
    fn error_positions() {
        let e = parse_poly("x^").unwrap_err();
        assert_eq!(e.position, 2);
        let e = parse_poly("x + y").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(parse_poly("(x+1").is_err());
    }
}
