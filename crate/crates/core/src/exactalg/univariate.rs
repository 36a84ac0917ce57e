//! Dense univariate polynomials over the rationals, lowest degree first.

use alloc::vec::Vec;

use num_traits::Zero;

use super::{MultiPoly, Rational};
use crate::{Error, Result};

/// Coefficient list of a polynomial in which only `var` occurs.
pub fn from_multi(p: &MultiPoly, var: &str) -> Result<Vec<Rational>> {
    let cs = p.coefficients_in(var);
    let mut out = Vec::with_capacity(cs.len());
    for c in cs {
        if !c.is_constant() {
            return Err(Error::Invalid(alloc::format!("`{p}` involves more than `{var}`")));
        }
        out.push(c.constant_term());
    }
    Ok(trim(out))
}

pub fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    c
}

/// Degree; `None` for zero.
pub fn degree(c: &[Rational]) -> Option<usize> {
    c.iter().rposition(|x| !x.is_zero())
}

pub fn derivative(c: &[Rational]) -> Vec<Rational> {
    c.iter().enumerate().skip(1).map(|(i, x)| x * Rational::from_integer((i as i64).into())).collect()
}

pub fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let mut r = trim(a.to_vec());
    while r.len() > db {
        let k = r.len() - 1 - db;
        let f = r.last().expect("nonempty") / &b[db];
        for (i, x) in b.iter().enumerate() {
            r[k + i] -= &f * x;
        }
        r = trim(r);
    }
    r
}

/// Monic gcd.
pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &l;
        }
    }
    x
}

/// No repeated factor over the algebraic closure.
pub fn is_squarefree(c: &[Rational]) -> bool {
    let c = trim(c.to_vec());
    match degree(&c) {
        None => false,
        Some(0) => true,
        Some(_) => gcd(&c, &derivative(&c)).len() == 1,
    }
}

pub fn eval(c: &[Rational], x: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |acc, v| acc * x + v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn squarefree_detection() {
        // (x-1)^2 (x+2)
        let sq = [int(2), int(-3), int(0), int(1)];
        assert!(!is_squarefree(&sq));
        assert!(is_squarefree(&[int(-1), int(0), int(1)]));
        assert_eq!(gcd(&sq, &derivative(&sq)), alloc::vec![int(-1), int(1)]);
        assert_eq!(eval(&sq, &int(1)), int(0));
    }
}
