use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::chowring::{GradedAlgebraSpec, GradedElem};
use crate::exactalg::{MultiPoly, Rational};
use crate::{Error, Result};

/// Name of the symbol standing for `(n + 1)` in symbolic computations.
pub const N1: &str = "N1";
/// Name of the hyperplane indeterminate.
pub const H: &str = "h";

/// `["ch1", .., "ch{k}"]`.
pub fn chern_names(k: usize) -> Vec<String> {
    (1..=k).map(|i| alloc::format!("ch{i}")).collect()
}

/// Free algebra on `ch1..ch{k}` (`ch_i` of degree `2i`) truncated at `top`.
pub fn chern_algebra(k: usize, top: u32) -> Result<Arc<GradedAlgebraSpec>> {
    let names = chern_names(k);
    GradedAlgebraSpec::build(names.into_iter().zip((1..=k as u32).map(|i| 2 * i)).collect(), top, None)
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

fn binomial(n: u32, k: u32) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Which coefficients multiply `ch_{2m-i} h^i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaVariant {
    /// `(2m)! / i!`, the normalized degree-`4m` part of the generating identity.
    Factorial,
    /// `binom(2m, i)`. Disagrees with the `m = 1` identity
    /// `2 ch_2 = 2 h c_1 - (n + 1) h^2` in the `ch_2` coefficient; kept for
    /// comparison only.
    Binomial,
}

impl SigmaVariant {
    fn coefficient(self, m: u32, i: u32) -> BigInt {
        match self {
            SigmaVariant::Factorial => factorial(2 * m) / factorial(i),
            SigmaVariant::Binomial => binomial(2 * m, i),
        }
    }
}

/// `sigma_{2m}` over the variables `ch1..ch{2m}, N1, h`, with `ch_0 = N1 - 1`.
pub fn sigma_symbolic(m: u32, variant: SigmaVariant) -> Result<MultiPoly> {
    if m == 0 {
        return Err(Error::Invalid("sigma needs m >= 1".into()));
    }
    let mut vars = chern_names(2 * m as usize);
    vars.push(N1.into());
    vars.push(H.into());
    let h = MultiPoly::var(&vars, H)?;
    let ch0 = MultiPoly::var(&vars, N1)?.sub(&MultiPoly::one(&vars));
    let mut acc = h.pow_u(2 * m);
    for i in 0..=2 * m {
        let k = 2 * m - i;
        let ch = if k == 0 { ch0.clone() } else { MultiPoly::var(&vars, &alloc::format!("ch{k}"))? };
        let mut c = Rational::from_integer(variant.coefficient(m, i));
        if i % 2 == 1 {
            c = -c;
        }
        acc = acc.add(&ch.mul(&h.pow_u(i)).scale(&c));
    }
    Ok(acc)
}

/// `sigma_{2m}(X, h)` as a polynomial in `h` with Chern-character
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaPolynomial {
    pub m: u32,
    pub n: i64,
    pub variant: SigmaVariant,
    /// `coefficients[i]` multiplies `h^i` and has degree `2(2m - i)`.
    pub coefficients: Vec<GradedElem>,
}

impl SigmaPolynomial {
    pub fn algebra(&self) -> &Arc<GradedAlgebraSpec> {
        self.coefficients[0].algebra()
    }

    /// Over `ch1..ch{2m}, h`.
    pub fn to_poly(&self) -> MultiPoly {
        let mut vars = chern_names(2 * self.m as usize);
        vars.push(H.into());
        let h = MultiPoly::var(&vars, H).expect("h is a variable");
        let mut acc = MultiPoly::zero(&vars);
        for (i, c) in self.coefficients.iter().enumerate() {
            let c = c.to_poly().with_vars(&vars).expect("coefficient variables are a subset");
            acc = acc.add(&c.mul(&h.pow_u(i as u32)));
        }
        acc
    }
}

impl core::fmt::Display for SigmaPolynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

fn build(n: i64, m: u32, variant: SigmaVariant) -> Result<SigmaPolynomial> {
    let sym = sigma_symbolic(m, variant)?;
    let mut bind = alloc::collections::BTreeMap::new();
    bind.insert(String::from(N1), Rational::from_integer(BigInt::from(n + 1)));
    let p = sym.partial_evaluate(&bind);
    let alg = chern_algebra(2 * m as usize, 4 * m)?;
    let coefficients = p
        .coefficients_in(H)
        .iter()
        .chain(core::iter::repeat(&MultiPoly::zero(p.vars())))
        .take(2 * m as usize + 1)
        .map(|c| GradedElem::from_poly(&alg, &c.with_vars(alg.names())?))
        .collect::<Result<Vec<_>>>()?;
    Ok(SigmaPolynomial { m, n, variant, coefficients })
}

/// `sum_{i=0}^{2m} (-1)^i (2m)!/i! ch_{2m-i} h^i + h^{2m}`, `ch_0 = n`.
pub fn sigma_class(n: i64, m: u32) -> Result<SigmaPolynomial> {
    build(n, m, SigmaVariant::Factorial)
}

/// The binomial-coefficient reading, for side-by-side reports.
pub fn sigma_class_binomial(n: i64, m: u32) -> Result<SigmaPolynomial> {
    build(n, m, SigmaVariant::Binomial)
}

/// Degree-`4m` part of `e^{-h} ch(T) + e^h ch(Omega) + e^h + e^{-h} - (2n+2)`
/// times `(2m)!/2`, computed by series expansion in the free algebra on
/// `h, ch1..ch{2m}`. Also returns whether the components of degree
/// `2 mod 4`, which hold no information, vanish identically.
pub fn sigma_from_generating_identity(n: i64, m: u32) -> Result<(MultiPoly, bool)> {
    if m == 0 {
        return Err(Error::Invalid("sigma needs m >= 1".into()));
    }
    let k = 2 * m as usize;
    let mut symbols: Vec<(String, u32)> = alloc::vec![(String::from(H), 2)];
    symbols.extend(chern_names(k).into_iter().zip((1..=k as u32).map(|i| 2 * i)));
    let alg = GradedAlgebraSpec::build(symbols, 4 * m, None)?;
    let h = GradedElem::symbol(&alg, H)?;
    let rank = GradedElem::constant(&alg, Rational::from_integer(n.into()));
    let mut ch_t = rank.clone();
    let mut ch_omega = rank;
    for i in 1..=k {
        let c = GradedElem::symbol(&alg, &alloc::format!("ch{i}"))?;
        ch_t = ch_t.add(&c)?;
        // ch_i of the dual bundle is (-1)^i ch_i.
        ch_omega = if i % 2 == 0 { ch_omega.add(&c)? } else { ch_omega.sub(&c)? };
    }
    let ep = GradedElem::exp_series(1, &h)?;
    let em = GradedElem::exp_series(-1, &h)?;
    let total = em
        .mul(&ch_t)?
        .add(&ep.mul(&ch_omega)?)?
        .add(&ep)?
        .add(&em)?
        .sub(&GradedElem::constant(&alg, Rational::from_integer((2 * n + 2).into())))?;
    let others_vanish = (2..4 * m).step_by(4).all(|d| total.component(d).is_zero());
    let scale = Rational::new(factorial(2 * m), BigInt::from(2));
    let mut vars = chern_names(k);
    vars.push(H.into());
    Ok((total.component(4 * m).scale(&scale).with_vars(&vars)?, others_vanish))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    fn poly(s: &str, m: usize) -> MultiPoly {
        let mut vars = chern_names(2 * m);
        vars.push(H.into());
        parse_poly(s, &vars).unwrap()
    }

    #[test]
    fn quadratic_identity() {
        for n in 1..=10 {
            let s = sigma_class(n, 1).unwrap();
            let expect = poly(&alloc::format!("2*ch2 - 2*ch1*h + {}*h^2", n + 1), 1);
            assert_eq!(s.to_poly(), expect);
        }
    }

    #[test]
    fn quartic_falling_factorials() {
        let s = sigma_class(5, 2).unwrap();
        assert_eq!(s.to_poly(), poly("24*ch4 - 24*ch3*h + 12*ch2*h^2 - 4*ch1*h^3 + 6*h^4", 2));
    }

    #[test]
    fn generating_identity_agrees() {
        for m in 1..=3 {
            for n in [1, 4, 9] {
                let (g, clean) = sigma_from_generating_identity(n, m).unwrap();
                assert!(clean);
                assert_eq!(g, sigma_class(n, m).unwrap().to_poly(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn binomial_reading_breaks_the_quadratic_identity() {
        let b = sigma_class_binomial(3, 1).unwrap();
        assert_eq!(b.to_poly(), poly("ch2 - 2*ch1*h + 4*h^2", 1));
        assert_ne!(b.to_poly(), sigma_class(3, 1).unwrap().to_poly());
    }

    #[test]
    fn degrees_and_leading_coefficient() {
        let s = sigma_class(7, 3).unwrap();
        for (i, c) in s.coefficients.iter().enumerate() {
            assert!(c.is_homogeneous_of(2 * (6 - i as u32)));
        }
        assert_eq!(s.coefficients[6].scalar_part(), Rational::from_integer(8.into()));
        assert!(!s.coefficients[6].is_zero());
    }

    #[test]
    fn formal_rank_minus_one() {
        // With every ch_k set to zero only the h^{2m} term survives, and its
        // coefficient n + 1 vanishes at n = -1.
        let s = sigma_class(-1, 2).unwrap();
        assert!(s.coefficients[4].is_zero());
        assert_eq!(s.to_poly(), poly("24*ch4 - 24*ch3*h + 12*ch2*h^2 - 4*ch1*h^3", 2));
    }

    #[test]
    fn zero_m_is_rejected() {
        assert!(sigma_class(3, 0).is_err());
    }
}
