use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactalg::{linalg, MultiPoly, Rational};
use crate::{Error, Result};

/// A point-hyperplane pair `([x], [y])` in `P^n x P^n*` with `sum x_i y^i = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagPoint {
    x: Vec<Rational>,
    y: Vec<Rational>,
}

impl FlagPoint {
    pub fn new(x: Vec<Rational>, y: Vec<Rational>) -> Result<Self> {
        if x.len() != y.len() || x.len() < 3 {
            return Err(Error::Dimension(alloc::format!(
                "flag needs two vectors of equal length at least 3, got {} and {}",
                x.len(),
                y.len()
            )));
        }
        if x.iter().all(Zero::is_zero) || y.iter().all(Zero::is_zero) {
            return Err(Error::Invalid("flag coordinates must be nonzero".into()));
        }
        if !linalg::dot(&x, &y).is_zero() {
            return Err(Error::Incidence);
        }
        Ok(FlagPoint { x, y })
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }

    /// `n`, where the flag lives in `P^n x P^n*`.
    pub fn n(&self) -> usize {
        self.x.len() - 1
    }

    /// Whether `x_0 y^n = 0`, the exceptional hyperplane section.
    pub fn in_exceptional(&self) -> bool {
        self.x[0].is_zero() || self.y[self.n()].is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhiImage {
    Point(Vec<Rational>),
    /// The flag lies on `x_0 = y^n = 0`.
    Indeterminate,
}

impl PhiImage {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            PhiImage::Point(p) => Some(p),
            PhiImage::Indeterminate => None,
        }
    }
}

/// `phi(x, y) = [w, z]` with
/// `w_i = x_0 y^i`, `w_n = x_0 y^0 - x_n y^n`, `z_i = x_i y^n` for `i < n`
/// and `z_n = x_0 y^n`.
///
/// Works for any coefficient type through the two closures so that the
/// numeric and symbolic versions share one formula.
fn phi_generic<T: Clone>(x: &[T], y: &[T], mul: impl Fn(&T, &T) -> T, sub: impl Fn(&T, &T) -> T) -> Vec<T> {
    let n = x.len() - 1;
    let mut out = Vec::with_capacity(2 * n);
    for i in 1..n {
        out.push(mul(&x[0], &y[i]));
    }
    out.push(sub(&mul(&x[0], &y[0]), &mul(&x[n], &y[n])));
    for i in 1..n {
        out.push(mul(&x[i], &y[n]));
    }
    out.push(mul(&x[0], &y[n]));
    out
}

/// The components of `phi` as polynomials in whatever `x`, `y` are.
pub fn phi_polys(x: &[MultiPoly], y: &[MultiPoly]) -> Vec<MultiPoly> {
    phi_generic(x, y, |a, b| a.mul(b), |a, b| a.sub(b))
}

pub fn phi_forward(p: &FlagPoint) -> Result<PhiImage> {
    let out = phi_generic(&p.x, &p.y, |a, b| a * b, |a, b| a - b);
    if out.iter().all(Zero::is_zero) {
        // phi vanishes exactly on x_0 = y^n = 0; anything else is a bug.
        assert!(p.x[0].is_zero() && p.y[p.n()].is_zero(), "phi vanished outside its indeterminacy locus");
        return Ok(PhiImage::Indeterminate);
    }
    Ok(PhiImage::Point(out))
}

/// `[w, z] -> ([z_n, z_1..z_{n-1}, -(w_n + (w,z)/z_n)/2], [(w_n - (w,z)/z_n)/2, w_1..w_{n-1}, z_n])`
/// with `(w,z) = sum_{i<n} w_i z_i`.
pub fn phi_inverse(wz: &[Rational]) -> Result<FlagPoint> {
    if !wz.len().is_multiple_of(2) || wz.len() < 4 {
        return Err(Error::Dimension(alloc::format!("expected 2n coordinates with n >= 2, got {}", wz.len())));
    }
    let n = wz.len() / 2;
    let (w, z) = wz.split_at(n);
    let zn = &z[n - 1];
    if zn.is_zero() {
        return Err(Error::Indeterminate);
    }
    let pairing: Rational = (0..n - 1).map(|i| &w[i] * &z[i]).sum();
    let q = pairing / zn;
    let half = Rational::one() / Rational::from_integer(2.into());
    let mut x = alloc::vec![zn.clone()];
    x.extend(z[..n - 1].iter().cloned());
    x.push(-(&w[n - 1] + &q) * &half);
    let mut y = alloc::vec![(&w[n - 1] - &q) * &half];
    y.extend(w[..n - 1].iter().cloned());
    y.push(zn.clone());
    FlagPoint::new(x, y)
}

/// Whether two nonzero vectors span the same line.
pub fn projectively_equal(a: &[Rational], b: &[Rational]) -> bool {
    a.len() == b.len()
        && !a.iter().all(Zero::is_zero)
        && !b.iter().all(Zero::is_zero)
        && linalg::rank(&[a.to_vec(), b.to_vec()]) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn incidence_is_enforced() {
        assert_eq!(FlagPoint::new(v(&[1, 0, 0]), v(&[1, 0, 0])), Err(Error::Incidence));
        assert!(FlagPoint::new(v(&[1, 0, 0]), v(&[0, 1, 0])).is_ok());
    }

    #[test]
    fn inverse_convention() {
        let p = phi_inverse(&v(&[1, 0, 1, 1])).unwrap();
        assert_eq!(p.x(), &[int(1), int(1), rat(-1, 2)]);
        assert_eq!(p.y(), &[rat(-1, 2), int(1), int(1)]);
    }

    #[test]
    fn affine_n2_formula() {
        // x = [1, a, b], y^0 = -a y^1 - b y^2.
        let (a, b, y1, y2) = (int(3), int(-2), int(5), int(7));
        let y0 = -(&a * &y1) - &b * &y2;
        let p =
            FlagPoint::new(alloc::vec![int(1), a.clone(), b.clone()], alloc::vec![y0.clone(), y1.clone(), y2.clone()])
                .unwrap();
        let expect = alloc::vec![y1, &y0 - &b * &y2, &a * &y2, y2];
        assert_eq!(phi_forward(&p).unwrap(), PhiImage::Point(expect));
    }

    #[test]
    fn indeterminacy() {
        let p = FlagPoint::new(v(&[0, 1, 0]), v(&[1, 0, 0])).unwrap();
        assert_eq!(phi_forward(&p).unwrap(), PhiImage::Indeterminate);
        assert_eq!(phi_inverse(&v(&[1, 2, 3, 0])), Err(Error::Indeterminate));
    }

    #[test]
    fn round_trip_both_ways() {
        let wz = v(&[2, -3, 5, 7, 11, 13]);
        let back = phi_forward(&phi_inverse(&wz).unwrap()).unwrap();
        assert!(projectively_equal(back.point().unwrap(), &wz));
        let p = phi_inverse(&wz).unwrap();
        let q = phi_inverse(back.point().unwrap()).unwrap();
        assert!(projectively_equal(p.x(), q.x()) && projectively_equal(p.y(), q.y()));
    }
}
