//! Recursive-descent reader for polynomial expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' nat)*
//! atom   := rational | 'x' | 'y' | 'z' | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies, so `3x^2y` and `(xz + y^2)(xz + 2y^2)` parse.

use crate::algebra::{HPoly, Rational, Var};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("not homogeneous: terms of degree {0} and {1}")]
    NotHomogeneous(u32, u32),
    #[error("the zero polynomial does not define a curve")]
    ZeroPolynomial,
    #[error("expected a curve, got a constant")]
    Constant,
}

const MAX_EXPONENT: u32 = 200;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }

    fn expr(&mut self) -> Result<HPoly, ParseError> {
        let mut sign = None;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            sign = Some(c);
        }
        let mut acc = self.term()?;
        if sign == Some(b'-') {
            acc = -&acc;
        }
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = combine(acc, rhs, c == b'-')?;
        }
        Ok(acc)
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(b'0'..=b'9' | b'x' | b'y' | b'z' | b'('))
    }

    fn term(&mut self) -> Result<HPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(b'*') {
                self.pos += 1;
                let rhs = self.factor()?;
                acc = acc.mul(&rhs);
            } else if self.starts_factor() {
                let rhs = self.factor()?;
                acc = acc.mul(&rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<HPoly, ParseError> {
        let mut base = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let Some(n) = self.digits() else {
                return self.err("expected a natural number after '^'");
            };
            let n: u32 = match n.try_into() {
                Ok(n) if n <= MAX_EXPONENT => n,
                _ => return self.err(format!("exponent larger than {MAX_EXPONENT}")),
            };
            base = base.pow(n);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<HPoly, ParseError> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let n = self.digits().expect("a digit is present");
                let q = if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    match self.digits() {
                        Some(d) if !d.is_zero() => Rational::new(n, d),
                        Some(_) => return self.err("zero denominator"),
                        None => return self.err("expected a denominator after '/'"),
                    }
                } else {
                    Rational::from_integer(n)
                };
                Ok(HPoly::constant(q))
            }
            Some(c @ (b'x' | b'y' | b'z')) => {
                self.pos += 1;
                Ok(HPoly::var(match c {
                    b'x' => Var::X,
                    b'y' => Var::Y,
                    _ => Var::Z,
                }))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) => self.err(format!("unexpected character {:?}", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

fn combine(a: HPoly, b: HPoly, subtract: bool) -> Result<HPoly, ParseError> {
    let b = if subtract { -&b } else { b };
    // A zero summand fits any degree.
    if a.is_zero() {
        return Ok(b);
    }
    if b.is_zero() {
        return Ok(a);
    }
    a.try_add(&b)
        .map_err(|_| ParseError::NotHomogeneous(a.degree(), b.degree()))
}

/// Parses a homogeneous polynomial. The zero polynomial is rejected since
/// its degree is not determined by the text.
pub fn parse_poly(src: &str) -> Result<HPoly, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    if out.is_zero() {
        return Err(ParseError::ZeroPolynomial);
    }
    Ok(out)
}

/// Like [`parse_poly`], but also rejects constants.
pub fn parse_curve(src: &str) -> Result<HPoly, ParseError> {
    let f = parse_poly(src)?;
    if f.degree() == 0 {
        return Err(ParseError::Constant);
    }
    Ok(f)
}

/// Reads a factored curve: one component per line, `#` starts a comment,
/// blank lines are skipped. Errors carry the 1-based line number.
pub fn parse_components(text: &str) -> Result<Vec<HPoly>, (usize, ParseError)> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        out.push(parse_curve(body).map_err(|e| (i + 1, e))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn quintic() {
        let f = parse_poly("y^4*z + x^5").unwrap();
        let g = &HPoly::y().pow(4).mul(&HPoly::z()) + &HPoly::x().pow(5);
        assert_eq!(f, g);
    }

    #[test]
    fn inhomogeneous_input_names_degrees() {
        assert_eq!(parse_poly("x^2 + y"), Err(ParseError::NotHomogeneous(2, 1)));
    }

    #[test]
    fn implicit_products() {
        let f = parse_poly("(xz + y^2)(xz + 2y^2)").unwrap();
        assert_eq!(f, parse_poly("x^2z^2 + 3x y^2 z + 2y^4").unwrap());
        assert_eq!(parse_poly("3x^2y").unwrap(), HPoly::monomial([2, 1, 0], rat(3)));
        assert_eq!(parse_poly("-1/2 x").unwrap(), HPoly::x().scale(&crate::algebra::ratio(-1, 2)));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_poly("x +"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("x ^ y"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("(x"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("1/0 x"), Err(ParseError::Syntax { .. })));
        assert_eq!(parse_poly("x - x"), Err(ParseError::ZeroPolynomial));
        assert_eq!(parse_curve("7"), Err(ParseError::Constant));
    }

    #[test]
    fn factored_files() {
        let text = "# CL2\nx\n\n xz + y^2  # first conic\nxz+2y^2\n";
        let cs = parse_components(text).unwrap();
        assert_eq!(cs.len(), 3);
        assert_eq!(parse_components("x\nx^2+y").unwrap_err().0, 2);
    }
}
