//! Sylvester resultants and fraction-free determinants.

use alloc::vec::Vec;

use num_traits::Zero;

use super::{FFPoly, MultiPoly, Rational};
use crate::{Error, Result};

/// The operations Bareiss elimination needs. No multiplicative identity is
/// required, so polynomial rings over any variable list qualify.
pub trait IntegralDomain: Clone {
    fn is_zero_el(&self) -> bool;
    fn mul_el(&self, other: &Self) -> Self;
    fn sub_el(&self, other: &Self) -> Self;
    fn neg_el(&self) -> Self;
    /// Division known to be exact.
    fn div_exact(&self, other: &Self) -> Result<Self>;

    fn zero_like(&self) -> Self {
        self.sub_el(self)
    }
}

impl IntegralDomain for Rational {
    fn is_zero_el(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_el(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_el(&self, other: &Self) -> Self {
        self - other
    }
    fn neg_el(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Result<Self> {
        if Zero::is_zero(other) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self / other)
    }
}

impl IntegralDomain for MultiPoly {
    fn is_zero_el(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn mul_el(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn sub_el(&self, other: &Self) -> Self {
        MultiPoly::sub(self, other)
    }
    fn neg_el(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn div_exact(&self, other: &Self) -> Result<Self> {
        MultiPoly::exact_div(self, other)
    }
}

impl IntegralDomain for FFPoly {
    fn is_zero_el(&self) -> bool {
        FFPoly::is_zero(self)
    }
    fn mul_el(&self, other: &Self) -> Self {
        FFPoly::mul(self, other)
    }
    fn sub_el(&self, other: &Self) -> Self {
        FFPoly::sub(self, other)
    }
    fn neg_el(&self) -> Self {
        FFPoly::neg(self)
    }
    fn div_exact(&self, other: &Self) -> Result<Self> {
        FFPoly::exact_div(self, other)
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
///
/// After step `k` every entry below and right of the pivot is a `k+1` minor
/// of the input, so each division by the previous pivot is exact.
pub fn bareiss_det<T: IntegralDomain>(matrix: &[Vec<T>]) -> Result<T> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::Dimension("empty matrix".into()));
    }
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("matrix is not square".into()));
    }
    let mut m: Vec<Vec<T>> = matrix.to_vec();
    let mut negate = false;
    let mut prev: Option<T> = None;
    for k in 0..n {
        if m[k][k].is_zero_el() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero_el()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(m[0][0].zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul_el(&m[i][j]).sub_el(&m[i][k].mul_el(&m[k][j]));
                m[i][j] = match &prev {
                    Some(p) => num.div_exact(p)?,
                    None => num,
                };
            }
        }
        prev = Some(m[k][k].clone());
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.neg_el() } else { d })
}

/// Sylvester matrix of `a` and `b`, given by coefficient lists lowest degree
/// first with nonzero leading entries. The `deg b` shifted rows of `a` come
/// first, then the `deg a` rows of `b`.
pub fn sylvester_matrix<T: IntegralDomain>(a: &[T], b: &[T]) -> Result<Vec<Vec<T>>> {
    let (Some(la), Some(lb)) = (a.last(), b.last()) else {
        return Err(Error::ZeroPolynomial);
    };
    if la.is_zero_el() || lb.is_zero_el() {
        return Err(Error::Invalid("leading coefficient is zero".into()));
    }
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return Err(Error::Dimension("both inputs are constants".into()));
    }
    let zero = la.zero_like();
    let mut rows = Vec::with_capacity(size);
    for (coeffs, shifts, deg) in [(a, n, m), (b, m, n)] {
        for s in 0..shifts {
            let mut row = alloc::vec![zero.clone(); size];
            for (k, c) in coeffs.iter().enumerate() {
                row[s + deg - k] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Resultant of `a` and `b` with respect to the variable `var`.
///
/// When exactly one input is constant in `var` the resultant is that
/// constant raised to the other input's degree.
pub fn eliminate_resultant(a: &MultiPoly, b: &MultiPoly, var: &str) -> Result<MultiPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars = MultiPoly::union_vars(a.vars(), b.vars());
    let a = a.with_vars(&vars)?;
    let b = b.with_vars(&vars)?;
    let ca = a.coefficients_in(var);
    let cb = b.coefficients_in(var);
    let (m, n) = (ca.len() - 1, cb.len() - 1);
    match (m, n) {
        (0, 0) => Err(Error::DegreeZero(var.into())),
        (0, _) => Ok(ca[0].pow_u(n as u32)),
        (_, 0) => Ok(cb[0].pow_u(m as u32)),
        _ => bareiss_det(&sylvester_matrix(&ca, &cb)?),
    }
}

/// [`eliminate_resultant`] over `F_p`, eliminating variable `index`.
pub fn eliminate_resultant_ff(a: &FFPoly, b: &FFPoly, index: usize) -> Result<FFPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ca = a.coefficients_in(index);
    let cb = b.coefficients_in(index);
    let (m, n) = (ca.len() - 1, cb.len() - 1);
    match (m, n) {
        (0, 0) => Err(Error::DegreeZero(a.vars()[index].clone())),
        (0, _) => Ok(ca[0].pow(n as u32)),
        (_, 0) => Ok(cb[0].pow(m as u32)),
        _ => bareiss_det(&sylvester_matrix(&ca, &cb)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, parse_poly, var_names};

    /// Cofactor expansion along the first row; an independent route to the
    /// determinant.
    fn laplace(m: &[Vec<MultiPoly>]) -> MultiPoly {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut acc = m[0][0].zero_like();
        for j in 0..m.len() {
            let minor: Vec<Vec<MultiPoly>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let t = m[0][j].mul(&laplace(&minor));
            acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        acc
    }

    fn vs() -> Vec<alloc::string::String> {
        ["x", "b", "c", "t"].iter().map(|s| (*s).into()).collect()
    }

    #[test]
    fn quadratic_discriminant() {
        let a = parse_poly("x^2 + b*x + c", &vs()).unwrap();
        let b = parse_poly("2*x + b", &vs()).unwrap();
        let r = eliminate_resultant(&a, &b, "x").unwrap();
        let disc = parse_poly("b^2 - 4*c", &vs()).unwrap();
        assert!(r.proportional_to(&disc).is_some(), "{r}");
    }

    #[test]
    fn shared_root_gives_zero() {
        let a = parse_poly("t - 1", &vs()).unwrap();
        let b = parse_poly("t^2 - 1", &vs()).unwrap();
        assert!(eliminate_resultant(&a, &b, "t").unwrap().is_zero());
    }

    #[test]
    fn degree_zero_cases() {
        let a = parse_poly("b + 1", &vs()).unwrap();
        let b = parse_poly("x^3 - c", &vs()).unwrap();
        assert_eq!(eliminate_resultant(&a, &b, "x").unwrap(), a.pow_u(3));
        assert_eq!(eliminate_resultant(&a, &a, "x"), Err(Error::DegreeZero("x".into())));
    }

    #[test]
    fn bareiss_matches_laplace() {
        let v = var_names("y", 0, 3);
        let a = parse_poly("y0^3 - 2*y1*y0 + y2", &v).unwrap();
        let b = parse_poly("3*y0^2 - 2*y1 + y2*y0 + 1/2", &v).unwrap();
        let s = sylvester_matrix(&a.coefficients_in("y0"), &b.coefficients_in("y0")).unwrap();
        assert_eq!(bareiss_det(&s).unwrap(), laplace(&s));
    }

    #[test]
    fn rational_determinant() {
        let m = alloc::vec![
            alloc::vec![int(0), int(2), int(1)],
            alloc::vec![int(1), int(1), int(1)],
            alloc::vec![int(2), int(0), int(5)],
        ];
        // 0*(5-0) - 2*(5-2) + 1*(0-2)
        assert_eq!(bareiss_det(&m).unwrap(), int(-8));
    }

    #[test]
    fn modular_resultant_commutes_with_reduction() {
        let v = var_names("y", 0, 3);
        let a = parse_poly("y0^3 - 2*y1*y0 + y2^2", &v).unwrap();
        let b = parse_poly("3*y0^2*y2 - 2*y1 + y2*y0 + 5", &v).unwrap();
        let p = 1_000_003;
        let exact = eliminate_resultant(&a, &b, "y0").unwrap().reduce_mod_p(p).unwrap();
        let modular = eliminate_resultant_ff(&a.reduce_mod_p(p).unwrap(), &b.reduce_mod_p(p).unwrap(), 0).unwrap();
        assert_eq!(exact, modular);
    }
}
