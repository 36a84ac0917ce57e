//! Exact arithmetic: big rationals, sparse multivariate polynomials over the
//! rationals and over prime fields, resultants and rational linear algebra.

mod ffpoly;
pub mod linalg;
mod monomial;
mod parse;
mod poly;
mod resultant;
pub mod univariate;

pub use ffpoly::{is_prime, FFPoly, UniFp, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use parse::{parse_poly, parse_rational};
pub use poly::MultiPoly;
pub use resultant::{bareiss_det, eliminate_resultant, eliminate_resultant_ff, sylvester_matrix, IntegralDomain};

use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Exact rational number; always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form `a` or `a/b`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Small random rational with numerator in `[-bound, bound]` and denominator
/// in `[1, den_bound]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64, den_bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=den_bound.max(1));
    rat(n, d)
}

pub fn random_nonzero_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64, den_bound: i64) -> Rational {
    loop {
        let r = random_rational(rng, bound, den_bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, len: usize, bound: i64) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng, bound, 1)).collect()
}

/// Names `prefix0 .. prefix{n-1}` (or starting at `start`).
pub fn var_names(prefix: &str, start: usize, count: usize) -> Vec<String> {
    (start..start + count).map(|i| alloc::format!("{prefix}{i}")).collect()
}

/// Exponent vectors of all monomials of degree `d` in `n` variables, in
/// lexicographic order of the exponents.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn walk(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            walk(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    walk(0, d, &mut alloc::vec![0; n], &mut out);
    out
}

/// Form of degree `d` with every coefficient drawn from `[-bound, bound]`.
pub fn random_form<R: Rng + ?Sized>(rng: &mut R, vars: &[String], d: u32, bound: i64) -> MultiPoly {
    let terms: Vec<(Vec<u32>, Rational)> =
        monomials_of_degree(vars.len(), d).into_iter().map(|e| (e, random_rational(rng, bound, 1))).collect();
    MultiPoly::from_terms(vars, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        // binom(n + d - 1, d)
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(1, 5), alloc::vec![alloc::vec![5]]);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert!(monomials_of_degree(2, 3).iter().all(|e| e.iter().sum::<u32>() == 3));
    }
}
