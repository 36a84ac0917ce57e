use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use super::sigma::{chern_algebra, chern_names, sigma_symbolic, SigmaVariant, H, N1};
use super::variety::VarietyChernData;
use crate::chowring::GradedElem;
use crate::exactalg::{eliminate_resultant, MultiPoly, Rational};
use crate::{Error, Result};

fn check_lm(l: u32, m: u32) -> Result<()> {
    if l == 0 || l >= m {
        return Err(Error::Invalid(alloc::format!("need 1 <= l < m, got l = {l}, m = {m}")));
    }
    Ok(())
}

/// Cohomological degree of `R_{l,m}`: the Sylvester resultant of forms of
/// `h`-degree `2l` and `2m` with `h` of weight 2 is isobaric of weight
/// `2l * 2m * 2`.
pub fn resultant_degree(l: u32, m: u32) -> u32 {
    8 * l * m
}

/// `Res_h(sigma_{2l}, sigma_{2m})` over `ch1..ch{2m}, N1`.
pub fn resultant_symbolic(l: u32, m: u32, variant: SigmaVariant) -> Result<MultiPoly> {
    check_lm(l, m)?;
    let a = sigma_symbolic(l, variant)?;
    let b = sigma_symbolic(m, variant)?;
    let r = eliminate_resultant(&a, &b, H)?;
    let mut vars = chern_names(2 * m as usize);
    vars.push(N1.into());
    r.with_vars(&vars)
}

/// `R_{l,m}` at a fixed dimension `n`, as a class in the free algebra on
/// `ch1..ch{2m}`.
pub fn resultant_rlm(l: u32, m: u32, n: i64) -> Result<GradedElem> {
    let r = resultant_symbolic(l, m, SigmaVariant::Factorial)?;
    let mut bind = BTreeMap::new();
    bind.insert(String::from(N1), Rational::from_integer((n + 1).into()));
    let r = r.partial_evaluate(&bind);
    let alg = chern_algebra(2 * m as usize, resultant_degree(l, m))?;
    GradedElem::from_poly(&alg, &r.with_vars(alg.names())?)
}

/// `R_{l,m}(X)` as a class on `v`.
pub fn resultant_on_variety(v: &VarietyChernData, l: u32, m: u32) -> Result<GradedElem> {
    let r = resultant_symbolic(l, m, SigmaVariant::Factorial)?;
    let mut bind = BTreeMap::new();
    bind.insert(String::from(N1), Rational::from_integer((v.n as i64 + 1).into()));
    v.evaluate(&r.partial_evaluate(&bind).with_vars(&chern_names(2 * m as usize))?)
}

/// Coefficients of `N1^0, N1^1, ..` as polynomials in `ch1..`.
pub fn expand_in_n1(r: &MultiPoly) -> Vec<MultiPoly> {
    let names = chern_names(r.vars().len() - 1);
    r.coefficients_in(N1).iter().map(|c| c.with_vars(&names).expect("N1 eliminated")).collect()
}

/// The degree-8 table as printed, `(power of N1, coefficient, [e1, e2, e3, e4])`
/// with `e_i` the exponent of `ch_i`.
pub const PRINTED_C8: &[(u32, i64, [u32; 4])] = &[
    (4, 1, [0, 0, 0, 2]),
    (3, 16, [0, 1, 3, 0]),
    (3, -8, [1, 0, 1, 1]),
    (3, -20, [0, 2, 0, 1]),
    (2, 32, [2, 1, 0, 1]),
    (2, -16, [1, 2, 0, 1]),
    (2, 100, [0, 4, 0, 0]),
    (1, 32, [3, 1, 1, 0]),
    (1, -176, [2, 3, 0, 0]),
    (1, -16, [4, 0, 0, 1]),
    (0, 468, [4, 2, 0, 0]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermVerdict {
    Match,
    CoefficientDiffers,
    /// Computed but absent from the printed table.
    MissingFromTable,
    /// Printed but absent from the computation.
    NotComputed,
    /// Printed term of the wrong cohomological degree.
    NotHomogeneous,
}

impl TermVerdict {
    pub fn label(self) -> &'static str {
        match self {
            TermVerdict::Match => "match",
            TermVerdict::CoefficientDiffers => "coefficient differs",
            TermVerdict::MissingFromTable => "missing from table",
            TermVerdict::NotComputed => "not computed",
            TermVerdict::NotHomogeneous => "not homogeneous",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct C8Row {
    pub power: u32,
    pub exponents: [u32; 4],
    pub printed: Option<Rational>,
    /// Computed coefficient divided by the global scale.
    pub computed: Option<Rational>,
    pub verdict: TermVerdict,
}

impl C8Row {
    pub fn monomial(&self) -> String {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| if *e == 1 { alloc::format!("ch{}", i + 1) } else { alloc::format!("ch{}^{e}", i + 1) })
            .collect();
        parts.join("*")
    }
}

/// Term-by-term comparison of the computed `R_{1,2}` with [`PRINTED_C8`],
/// after dividing by the ratio of the `N1^4` coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct C8Report {
    pub variant: SigmaVariant,
    pub scale: Rational,
    pub rows: Vec<C8Row>,
}

impl C8Report {
    pub fn count(&self, v: TermVerdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == v).count()
    }
}

pub fn compare_c8(variant: SigmaVariant) -> Result<C8Report> {
    let r = resultant_symbolic(1, 2, variant)?;
    let coeffs = expand_in_n1(&r);
    let mut computed: BTreeMap<(u32, [u32; 4]), Rational> = BTreeMap::new();
    for (k, c) in coeffs.iter().enumerate() {
        for (m, v) in c.terms() {
            let e = [m.0[0], m.0[1], m.0[2], m.0[3]];
            computed.insert((k as u32, e), v.clone());
        }
    }
    let printed: BTreeMap<(u32, [u32; 4]), Rational> =
        PRINTED_C8.iter().map(|(k, c, e)| ((*k, *e), Rational::from_integer((*c).into()))).collect();
    let lead = (4, [0, 0, 0, 2]);
    let scale = match (computed.get(&lead), printed.get(&lead)) {
        (Some(a), Some(b)) => a / b,
        _ => return Err(Error::Invalid("no leading N1^4 term to normalize against".into())),
    };
    let keys: BTreeSet<(u32, [u32; 4])> = computed.keys().chain(printed.keys()).cloned().collect();
    let weight = |e: &[u32; 4]| e.iter().enumerate().map(|(i, x)| (i as u32 + 1) * x).sum::<u32>();
    let mut rows = Vec::new();
    for key in keys.into_iter().rev() {
        let p = printed.get(&key).cloned();
        let c = computed.get(&key).map(|c| c / &scale);
        let verdict = match (&p, &c) {
            (Some(_), _) if weight(&key.1) != 8 => TermVerdict::NotHomogeneous,
            (Some(a), Some(b)) if a == b => TermVerdict::Match,
            (Some(_), Some(_)) => TermVerdict::CoefficientDiffers,
            (Some(_), None) => TermVerdict::NotComputed,
            (None, _) => TermVerdict::MissingFromTable,
        };
        rows.push(C8Row { power: key.0, exponents: key.1, printed: p, computed: c, verdict });
    }
    rows.sort_by(|a, b| b.power.cmp(&a.power).then(a.exponents.cmp(&b.exponents)));
    Ok(C8Report { variant, scale, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::variety::catalog;
    use crate::exactalg::univariate;
    use crate::exactalg::{int, parse_poly};
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ch_poly(s: &str) -> MultiPoly {
        parse_poly(s, &chern_names(4)).unwrap()
    }

    #[test]
    fn r12_coefficients() {
        let r = resultant_symbolic(1, 2, SigmaVariant::Factorial).unwrap();
        let c = expand_in_n1(&r);
        assert_eq!(c.len(), 5);
        assert!(c[0].is_zero());
        assert_eq!(c[1], ch_poly("-384*ch1^4*ch4 + 384*ch1^3*ch2*ch3 - 128*ch1^2*ch2^3"));
        assert_eq!(c[2], ch_poly("1536*ch1^2*ch2*ch4 - 1344*ch1*ch2^2*ch3 + 400*ch2^4"));
        assert_eq!(c[3], ch_poly("-1152*ch1*ch3*ch4 - 960*ch2^2*ch4 + 1152*ch2*ch3^2"));
        assert_eq!(c[4], ch_poly("576*ch4^2"));
    }

    /// Numeric resultant via the Euclidean remainder sequence; independent of
    /// the Sylvester determinant.
    fn euclid_resultant(a: &[Rational], b: &[Rational]) -> Rational {
        let (da, db) = (univariate::degree(a).unwrap(), univariate::degree(b).unwrap());
        if db == 0 {
            return num_traits::pow(b[0].clone(), da);
        }
        let r = univariate::rem(a, b);
        let Some(dr) = univariate::degree(&r) else {
            return Rational::zero();
        };
        let sign = if (da * db) % 2 == 1 { -int(1) } else { int(1) };
        sign * num_traits::pow(b[db].clone(), da - dr) * euclid_resultant(b, &r)
    }

    #[test]
    fn sylvester_matches_euclid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let r = resultant_symbolic(1, 2, SigmaVariant::Factorial).unwrap();
        for _ in 0..10 {
            let n: i64 = rng.gen_range(2..12);
            let ch: Vec<Rational> = (0..4).map(|_| int(rng.gen_range(-9..10))).collect();
            let sig = |m: u32| {
                let s = sigma_symbolic(m, SigmaVariant::Factorial).unwrap();
                let coeffs: Vec<Rational> = s
                    .coefficients_in(H)
                    .iter()
                    .map(|c| {
                        let mut pt: Vec<Rational> = ch[..2 * m as usize].to_vec();
                        pt.push(int(n + 1));
                        pt.push(int(0));
                        c.evaluate(&pt).unwrap()
                    })
                    .collect();
                univariate::trim(coeffs)
            };
            let mut pt = ch.clone();
            pt.push(int(n + 1));
            assert_eq!(r.evaluate(&pt).unwrap(), euclid_resultant(&sig(1), &sig(2)));
        }
    }

    #[test]
    fn homogeneous_of_expected_degree() {
        for n in 2..=10 {
            assert!(resultant_rlm(1, 2, n).unwrap().is_homogeneous_of(16));
        }
        assert!(resultant_rlm(1, 3, 12).unwrap().is_homogeneous_of(24));
        assert!(resultant_rlm(2, 1, 3).is_err());
    }

    #[test]
    fn vanishes_on_segre() {
        let v = catalog("P1xQ(8)").unwrap();
        let r = resultant_on_variety(&v, 1, 2).unwrap();
        assert!(v.integrate(&r).unwrap().is_zero());
        let p = catalog("P8").unwrap();
        assert!(resultant_on_variety(&p, 1, 2).unwrap().is_zero());
    }

    #[test]
    fn printed_table_report() {
        let f = compare_c8(SigmaVariant::Factorial).unwrap();
        assert_eq!(f.scale, int(576));
        assert_eq!(f.count(TermVerdict::NotHomogeneous), 2);
        let b = compare_c8(SigmaVariant::Binomial).unwrap();
        assert_eq!(b.scale, int(1));
        assert_eq!(b.count(TermVerdict::Match), 5);
        assert!(b.rows.iter().any(|r| r.monomial() == "ch2*ch3^3" && r.verdict == TermVerdict::NotHomogeneous));
    }
}
