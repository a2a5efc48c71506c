//! Recursive-descent parser for Laurent polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' exponent)?
//! exponent := '-'? integer | '(' '-'? integer ')'
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division and negative powers must be exact in the Laurent ring.

use alloc::string::ToString;

use num_bigint::BigInt;

use super::{LaurentPoly, SignedMonomial, Vars};
use crate::{Error, Result};

pub(super) fn parse(text: &str, vars: &Vars) -> Result<LaurentPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        text,
        pos: 0,
        vars,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn error(&self, message: &'static str) -> Error {
        Error::PolySyntax {
            offset: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.div_exact(&d).ok_or(Error::PolySyntax {
                    offset: at,
                    message: "division is not exact",
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPoly> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let parenthesized = self.eat(b'(');
        let negative = self.eat(b'-');
        let k = self.integer()?;
        if parenthesized && !self.eat(b')') {
            return Err(self.error("expected ')'"));
        }
        let k: u32 = k.try_into().map_err(|_| Error::PolySyntax {
            offset: at,
            message: "exponent out of range",
        })?;
        if !negative {
            return Ok(base.pow(k));
        }
        let unit = SignedMonomial::from_poly(&base).map_err(|_| Error::PolySyntax {
            offset: at,
            message: "negative power of a non-monomial",
        })?;
        Ok(unit.pow(-(k as i64)).to_poly(self.vars))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(self.text[start..self.pos].parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(LaurentPoly::constant(self.vars, self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                match self.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(LaurentPoly::var(self.vars, i)),
                    None => Err(Error::UnknownVariable {
                        name: name.to_string(),
                        offset: start,
                    }),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::vars;
    use super::*;

    #[test]
    fn precedence() {
        let v = vars(&["x", "y"]);
        let a = parse("-x^2 + 2*x*y - 1", &v).unwrap();
        let b = LaurentPoly::from_terms(
            &v,
            [(alloc::vec![2, 0], -1), (alloc::vec![1, 1], 2), (alloc::vec![0, 0], -1)],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(parse("x^(-2)", &v).unwrap(), parse("1/x^2", &v).unwrap());
        assert_eq!(parse("(x^2 - 1)/(x + 1)", &v).unwrap(), parse("x - 1", &v).unwrap());
        assert_eq!(parse("-(y^2*x)/x", &v).unwrap(), parse("-y^2", &v).unwrap());
    }

    #[test]
    fn errors() {
        let v = vars(&["x"]);
        assert_eq!(
            parse("x + q", &v),
            Err(Error::UnknownVariable {
                name: "q".into(),
                offset: 4
            })
        );
        assert!(matches!(parse("(x+1)^-1", &v), Err(Error::PolySyntax { .. })));
        assert!(matches!(parse("x/(x+1)", &v), Err(Error::PolySyntax { .. })));
        assert!(matches!(parse("x +", &v), Err(Error::PolySyntax { .. })));
        assert!(matches!(parse("(x", &v), Err(Error::PolySyntax { .. })));
        assert!(matches!(parse("x )", &v), Err(Error::PolySyntax { .. })));
        assert!(matches!(parse("x/0", &v), Err(Error::PolySyntax { .. })));
    }
}
