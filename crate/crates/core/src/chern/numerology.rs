use alloc::vec::Vec;

use num_integer::Roots;

use super::variety::VarietyChernData;
use crate::exactalg::Rational;
use crate::{Error, Result};

/// Two expressions for the degree of the dual of a surface.
#[derive(Clone, Debug, PartialEq)]
pub struct CodegreePair {
    /// `c_2 - 2 h c_1 + 3 h^2`, valid for any surface.
    pub katz: Rational,
    /// `3 c_2 - c_1^2`, valid for Legendrian surfaces.
    pub legendrian: Rational,
    /// `2 ch_2 - 2 c_1 h + 3 h^2` integrated; always `katz - legendrian`.
    pub sigma2: Rational,
}

impl CodegreePair {
    pub fn agree(&self) -> bool {
        self.katz == self.legendrian
    }
}

pub fn codegree_pair(v: &VarietyChernData) -> Result<CodegreePair> {
    if v.n != 2 {
        return Err(Error::Dimension(alloc::format!("codegree needs a surface, got dimension {}", v.n)));
    }
    let (c1, c2, h) = (v.c(1)?, v.c(2)?, v.h().clone());
    let c1h = v.integrate(&c1.mul(&h)?)?;
    let h2 = v.integrate(&h.mul(&h)?)?;
    let c1sq = v.integrate(&c1.mul(&c1)?)?;
    let c2n = v.integrate(&c2)?;
    let two = Rational::from_integer(2.into());
    let three = Rational::from_integer(3.into());
    let katz = &c2n - &two * &c1h + &three * &h2;
    let legendrian = &three * &c2n - &c1sq;
    let sigma2 = v.integrate(&v.ch(2)?.scale(&two))? - &two * &c1h + &three * &h2;
    Ok(CodegreePair { katz, legendrian, sigma2 })
}

/// The quadratic `r - 2 r k + (q + r) k^2` constraining `h = k l + pi^* L` on
/// a `P^p`-bundle over a `q`-fold, `r = p + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuledObstruction {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    /// Constant, linear and quadratic coefficients in `k`.
    pub quadratic: [i64; 3],
    pub discriminant: i64,
    /// Rational roots `(numerator, denominator)`.
    pub roots: Vec<(i64, i64)>,
    /// The quadratic is derived by comparing `l^2` coefficients, which is
    /// only legitimate when `l^2` is not a pullback, i.e. `p > 1`.
    pub applies: bool,
}

impl RuledObstruction {
    /// No real `k` exists, so no Legendrian embedding.
    pub fn obstructed(&self) -> bool {
        self.applies && self.discriminant < 0
    }
}

pub fn ruled_obstruction(p: i64, q: i64) -> Result<RuledObstruction> {
    if p < 1 || q < 0 {
        return Err(Error::Invalid(alloc::format!("need p >= 1 and q >= 0, got p = {p}, q = {q}")));
    }
    let r = p + 1;
    let (a, b, c) = (q + r, -2 * r, r);
    let discriminant = b * b - 4 * a * c;
    let mut roots = Vec::new();
    if discriminant >= 0 {
        let s = discriminant.sqrt();
        if s * s == discriminant {
            for num in [-b - s, -b + s] {
                let g = num_integer::gcd(num, 2 * a);
                let root = (num / g, 2 * a / g);
                if !roots.contains(&root) {
                    roots.push(root);
                }
            }
        }
    }
    Ok(RuledObstruction { p, q, r, quadratic: [c, b, a], discriminant, roots, applies: p > 1 })
}

/// Numerology of a Legendrian surface with trivial canonical class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kodaira0 {
    pub chi: i64,
    pub degree: i64,
    pub h0: i64,
    /// Sectional genus from `h^2 = 2g - 2`, given when `chi = 2` (K3).
    pub genus: Option<i64>,
    pub admissible: bool,
}

pub fn kodaira0_constraints(chi: i64) -> Kodaira0 {
    let degree = 8 * chi;
    Kodaira0 { chi, degree, h0: 5 * chi, genus: (chi == 2).then_some(degree / 2 + 1), admissible: chi > 1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::variety::{catalog, veronese_surface};
    use num_traits::Zero;

    #[test]
    fn codegrees() {
        let v = catalog("P1xP1_H_2Hprime").unwrap();
        let c = codegree_pair(&v).unwrap();
        assert_eq!(
            (c.katz.clone(), c.legendrian.clone()),
            (Rational::from_integer(4.into()), Rational::from_integer(4.into()))
        );
        assert!(c.agree());
        let k3 = codegree_pair(&catalog("K3blowup12").unwrap()).unwrap();
        assert_eq!(k3.legendrian, Rational::from_integer(120.into()));
        assert!(k3.agree());
        let ver = codegree_pair(&veronese_surface().unwrap()).unwrap();
        assert!(!ver.agree());
        assert_eq!(&ver.katz - &ver.legendrian, ver.sigma2);
        assert!(!ver.sigma2.is_zero());
    }

    #[test]
    fn codegree_rejects_non_surfaces() {
        assert!(codegree_pair(&catalog("P3").unwrap()).is_err());
    }

    #[test]
    fn ruled() {
        let o = ruled_obstruction(2, 1).unwrap();
        assert_eq!(o.quadratic, [3, -6, 4]);
        assert_eq!(o.discriminant, -12);
        assert!(o.obstructed());
        let o = ruled_obstruction(1, 0).unwrap();
        assert_eq!((o.discriminant, o.roots.clone()), (0, alloc::vec![(1, 1)]));
        for p in 1..6 {
            assert_eq!(ruled_obstruction(p, 0).unwrap().discriminant, 0);
            for q in 0..6 {
                assert_eq!(ruled_obstruction(p, q).unwrap().discriminant, -4 * (p + 1) * q);
            }
        }
        assert!(ruled_obstruction(0, 1).is_err());
    }

    #[test]
    fn kodaira_zero() {
        assert_eq!(kodaira0_constraints(2), Kodaira0 { chi: 2, degree: 16, h0: 10, genus: Some(9), admissible: true });
        assert!(!kodaira0_constraints(0).admissible);
        assert!(!kodaira0_constraints(1).admissible);
    }
}
