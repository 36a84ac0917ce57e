//! Text grammar for polynomials.
//!
//! ```text
//! poly   := ["-"|"+"] term (("+"|"-") term)*
//! term   := coeff | [coeff "*"] factor ("*" factor)*
//! coeff  := digits ["/" digits]
//! factor := name ["^" digits]
//! name   := [A-Za-z][A-Za-z0-9]*
//! ```
//!
//! Whitespace is ignored everywhere.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{MultiPoly, Rational};
use crate::{Error, Result};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
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

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.to_string() })
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("ascii digits parse"))
    }

    fn name(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.src.get(self.pos), Some(c) if c.is_ascii_alphabetic()) {
            return self.err("expected a variable name or a number");
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
        Ok((start, s.to_string()))
    }

    fn exponent(&mut self) -> Result<u32> {
        let at = self.pos;
        let d = self.digits()?;
        u32::try_from(&d).map_err(|_| Error::Syntax { pos: at, msg: "exponent too large".into() })
    }

    fn coeff(&mut self) -> Result<Rational> {
        let n = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let d = self.digits()?;
            if d.is_zero() {
                return Err(Error::Syntax { pos: at, msg: "zero denominator".into() });
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }
}

/// Parses `text` over the given variable list.
pub fn parse_poly(text: &str, vars: &[String]) -> Result<MultiPoly> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut terms: Vec<(Vec<u32>, Rational)> = Vec::new();
    let mut first = true;
    loop {
        let neg = match lx.peek() {
            None if first => return lx.err("empty polynomial"),
            None => break,
            Some(b'-') => {
                lx.pos += 1;
                true
            }
            Some(b'+') => {
                lx.pos += 1;
                false
            }
            Some(_) if first => false,
            Some(_) => return lx.err("expected `+` or `-`"),
        };
        first = false;
        let mut c = Rational::one();
        let mut e = alloc::vec![0u32; vars.len()];
        let mut need_factor = true;
        if matches!(lx.peek(), Some(d) if d.is_ascii_digit()) {
            c = lx.coeff()?;
            need_factor = lx.eat(b'*');
        }
        while need_factor {
            let (at, name) = lx.name()?;
            let i = vars.iter().position(|v| *v == name).ok_or(Error::UnknownVariable(name))?;
            let k = if lx.eat(b'^') { lx.exponent()? } else { 1 };
            e[i] = e[i].checked_add(k).ok_or(Error::Syntax { pos: at, msg: "exponent overflow".into() })?;
            need_factor = lx.eat(b'*');
        }
        terms.push((e, if neg { -c } else { c }));
    }
    Ok(MultiPoly::from_terms(vars, terms))
}

/// Parses `a` or `a/b` with an optional sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let neg = if lx.eat(b'-') {
        true
    } else {
        lx.eat(b'+');
        false
    };
    let c = lx.coeff()?;
    if lx.peek().is_some() {
        return lx.err("trailing input");
    }
    Ok(if neg { -c } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, var_names};

    #[test]
    fn single_monomial() {
        let v = var_names("x", 1, 3);
        let p = parse_poly("x1*x2*x3", &v).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coeff(&[1, 1, 1]), Rational::one());
    }

    #[test]
    fn binomial() {
        let v = var_names("x", 0, 2);
        assert_eq!(parse_poly("x0^4 - x1^4", &v).unwrap().num_terms(), 2);
    }

    #[test]
    fn rational_coefficient() {
        let v = var_names("x", 0, 3);
        let p = parse_poly("3/2*x0^2*x1 - x2", &v).unwrap();
        assert_eq!(p.coeff(&[2, 1, 0]), rat(3, 2));
        assert_eq!(p.coeff(&[0, 0, 1]), rat(-1, 1));
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn whitespace_and_signs() {
        let v = var_names("x", 0, 2);
        let a = parse_poly(" - 2 * x0 ^ 2 +x1*x1 ", &v).unwrap();
        let b = parse_poly("-2*x0^2+x1^2", &v).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors_carry_position_or_name() {
        let v = var_names("x", 0, 2);
        assert_eq!(parse_poly("x0 + y", &v), Err(Error::UnknownVariable("y".into())));
        assert!(matches!(parse_poly("x0 +* x1", &v), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_poly("x0 x1", &v), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("1/0*x0", &v), Err(Error::Syntax { .. })));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert!(parse_rational("3/").is_err());
    }
}
