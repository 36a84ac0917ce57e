use alloc::vec::Vec;

use num_traits::Zero;

use crate::contact::{ChartMap, SymplecticForm};
use crate::exactalg::{MultiPoly, Rational};
use crate::{Error, Result};

/// A nonzero form `P(x_1..x_n)` of degree `d`, candidate for a homaloidal
/// polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct HomaloidalCandidate {
    p: MultiPoly,
    d: u32,
}

impl HomaloidalCandidate {
    pub fn new(p: MultiPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = p.homogeneous_degree().ok_or_else(|| Error::Invalid(alloc::format!("P = {p} is not homogeneous")))?;
        if d == 0 {
            return Err(Error::Invalid("P is constant".into()));
        }
        Ok(HomaloidalCandidate { p, d })
    }

    pub fn p(&self) -> &MultiPoly {
        &self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.p.vars().len()
    }
}

/// The affine chart `[1, x, dP, P]` of `psi` on `x_0 = 1`.
pub fn psi_chart(c: &HomaloidalCandidate) -> Result<ChartMap> {
    if c.d == 2 {
        return Err(Error::Invalid("psi is not Legendrian for quadrics (d = 2)".into()));
    }
    let params = c.p.vars().to_vec();
    let mut comps = alloc::vec![MultiPoly::one(&params)];
    comps.extend(MultiPoly::gens(&params));
    comps.extend(c.p.gradient());
    comps.push(c.p.clone());
    ChartMap::new(&params, comps, alloc::vec![Rational::zero(); params.len()])
}

/// `psi` on all of `P^n`: `[x_0^d, x_0^{d-1} x, x_0 dP, P]` in `x_0..x_n`.
/// Every component has degree `d`.
pub fn psi_homogeneous(c: &HomaloidalCandidate) -> Result<Vec<MultiPoly>> {
    let mut vars = alloc::vec![alloc::string::String::from("x0")];
    if c.p.vars().iter().any(|v| v == "x0") {
        return Err(Error::Invalid("P must not use the name x0".into()));
    }
    vars.extend(c.p.vars().iter().cloned());
    let x0 = MultiPoly::var(&vars, "x0")?;
    let lift = |q: &MultiPoly| q.with_vars(&vars);
    let d = c.d;
    let mut out = alloc::vec![x0.pow_u(d)];
    for g in MultiPoly::gens(c.p.vars()) {
        out.push(x0.pow_u(d - 1).mul(&lift(&g)?));
    }
    for g in c.p.gradient() {
        out.push(x0.mul(&lift(&g)?));
    }
    out.push(lift(&c.p)?);
    Ok(out)
}

/// The form for which [`psi_chart`] is Legendrian. The chart is the Pfaff
/// graph of `P` with its last slot rescaled by `1 / (2 - d)`, so the `x_0`
/// pairing picks up the weight `2 - d`; at `d = 2` it degenerates.
pub fn psi_form(c: &HomaloidalCandidate) -> Result<SymplecticForm> {
    let w = 2 - i64::from(c.d);
    SymplecticForm::graph_form(c.n(), Rational::from_integer(w.into()))
}

/// `c` with `P(dP) = c P^(d-1)`, if it exists.
pub fn self_duality_check(c: &HomaloidalCandidate) -> Option<Rational> {
    let vars = c.p.vars().to_vec();
    let composed = c.p.compose(&c.p.gradient(), &vars);
    composed.proportional_to(&c.p.pow_u(c.d - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::{find_symplectic_forms, is_legendrian};
    use crate::exactalg::{int, parse_poly, var_names};

    fn cand(s: &str, n: usize) -> HomaloidalCandidate {
        HomaloidalCandidate::new(parse_poly(s, &var_names("x", 1, n)).unwrap()).unwrap()
    }

    #[test]
    fn twisted_cubic_chart() {
        let c = cand("x1^3", 1);
        let chart = psi_chart(&c).unwrap();
        let shown: Vec<_> = chart.components().iter().map(|p| alloc::format!("{p}")).collect();
        assert_eq!(shown, ["1", "x1", "3*x1^2", "x1^3"]);
        assert!(is_legendrian(&chart, &psi_form(&c).unwrap()).unwrap().legendrian);
        assert!(find_symplectic_forms(&chart, 0).unwrap().nondegenerate());
    }

    #[test]
    fn triple_product_is_legendrian() {
        let c = cand("x1*x2*x3", 3);
        let chart = psi_chart(&c).unwrap();
        assert!(is_legendrian(&chart, &psi_form(&c).unwrap()).unwrap().legendrian);
        let s = find_symplectic_forms(&chart, 1).unwrap();
        assert!(s.nondegenerate() && s.contains(psi_form(&c).unwrap().matrix()));
    }

    #[test]
    fn quadrics_are_rejected() {
        assert!(psi_chart(&cand("x1*x2", 2)).is_err());
        assert!(psi_form(&cand("x1*x2", 2)).is_err());
    }

    #[test]
    fn homogeneous_psi_restricts_to_chart() {
        let c = cand("x1^2*x2 - x2^3", 2);
        let h = psi_homogeneous(&c).unwrap();
        let chart = psi_chart(&c).unwrap();
        let vars = h[0].vars().to_vec();
        for (hc, cc) in h.iter().zip(chart.components()) {
            let mut b = alloc::collections::BTreeMap::new();
            b.insert(vars[0].clone(), int(1));
            assert_eq!(hc.partial_evaluate(&b), cc.with_vars(&vars).unwrap());
            assert_eq!(hc.homogeneous_degree(), Some(3));
        }
    }

    #[test]
    fn self_duality_constants() {
        assert_eq!(self_duality_check(&cand("x1*x2*x3", 3)), Some(int(1)));
        assert_eq!(self_duality_check(&cand("x1^3", 1)), Some(int(27)));
        assert_eq!(self_duality_check(&cand("x1^3 + x2^3", 2)), None);
    }
}
