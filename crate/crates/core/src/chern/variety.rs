use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::sigma::{chern_names, sigma_class, H};
use crate::chowring::{GradedAlgebraSpec, GradedElem};
use crate::exactalg::{Monomial, MultiPoly, Rational};
use crate::{Error, Result};

/// Chern data of a smooth projective variety with a very ample class.
///
/// `classes` holds `c1..cn` and `ch1..chn`. Whichever side is given, the
/// other is filled in through Newton's identities; where both are given
/// they must agree.
#[derive(Clone, Debug)]
pub struct VarietyChernData {
    pub name: String,
    pub n: usize,
    algebra: Arc<GradedAlgebraSpec>,
    classes: BTreeMap<String, GradedElem>,
    h: GradedElem,
    /// Set for catalog entries whose embedding is known to be Legendrian.
    pub known_legendrian: Option<bool>,
}

fn class_index(name: &str) -> Option<(bool, usize)> {
    let (is_ch, digits) = if let Some(d) = name.strip_prefix("ch") {
        (true, d)
    } else {
        let d = name.strip_prefix('c')?;
        (false, d)
    };
    let k: usize = digits.parse().ok()?;
    (k >= 1).then_some((is_ch, k))
}

fn factorial(k: usize) -> Rational {
    Rational::from_integer((1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i)))
}

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

impl VarietyChernData {
    pub fn new(
        name: &str,
        n: usize,
        algebra: &Arc<GradedAlgebraSpec>,
        classes: BTreeMap<String, GradedElem>,
        h: GradedElem,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("dimension must be positive".into()));
        }
        if algebra.top_degree() != 2 * n as u32 {
            return Err(Error::Invalid(alloc::format!(
                "top degree {} does not match dimension {n}",
                algebra.top_degree()
            )));
        }
        if h.algebra() != algebra || h.is_zero() || !h.is_homogeneous_of(2) {
            return Err(Error::Invalid("h must be a nonzero class of degree 2".into()));
        }
        for (key, v) in &classes {
            let (_, k) = class_index(key).ok_or_else(|| Error::Invalid(alloc::format!("unknown class `{key}`")))?;
            if v.algebra() != algebra {
                return Err(Error::AlgebraMismatch);
            }
            if k > n {
                return Err(Error::Invalid(alloc::format!("`{key}` exceeds the dimension")));
            }
            if !v.is_homogeneous_of(2 * k as u32) {
                return Err(Error::NotHomogeneous(2 * k as u32));
            }
        }
        let mut data = VarietyChernData {
            name: name.to_string(),
            n,
            algebra: algebra.clone(),
            classes,
            h,
            known_legendrian: None,
        };
        data.complete()?;
        Ok(data)
    }

    /// Newton's identities with `p_k = k! ch_k` and `e_k = c_k`.
    fn complete(&mut self) -> Result<()> {
        for k in 1..=self.n {
            let have = |s: &Self, pre: &str, upto: usize| {
                (1..=upto).all(|i| s.classes.contains_key(&alloc::format!("{pre}{i}")))
            };
            let from_c = if have(self, "c", k) && have(self, "ch", k - 1) {
                // p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
                let mut p = self.c(k)?.scale(&int(k as i64));
                if k % 2 == 0 {
                    p = p.neg();
                }
                for i in 1..k {
                    let t = self.c(i)?.mul(&self.ch(k - i)?.scale(&factorial(k - i)))?;
                    p = if i % 2 == 1 { p.add(&t)? } else { p.sub(&t)? };
                }
                Some(p.scale(&(Rational::one() / factorial(k))))
            } else {
                None
            };
            let from_ch = if have(self, "ch", k) && have(self, "c", k - 1) {
                // e_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
                let mut e = GradedElem::zero(&self.algebra);
                for i in 1..=k {
                    let t = self.c(k - i)?.mul(&self.ch(i)?.scale(&factorial(i)))?;
                    e = if i % 2 == 1 { e.add(&t)? } else { e.sub(&t)? };
                }
                Some(e.scale(&(Rational::one() / int(k as i64))))
            } else {
                None
            };
            let ch_key = alloc::format!("ch{k}");
            let c_key = alloc::format!("c{k}");
            match (self.classes.get(&ch_key), from_c) {
                (Some(given), Some(derived)) if *given != derived => {
                    return Err(Error::Invalid(alloc::format!(
                        "{ch_key} = {given} disagrees with the Chern classes, which give {derived}"
                    )));
                }
                (None, Some(derived)) => {
                    self.classes.insert(ch_key, derived);
                }
                _ => {}
            }
            if let (None, Some(derived)) = (self.classes.get(&c_key), from_ch) {
                self.classes.insert(c_key, derived);
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebraSpec> {
        &self.algebra
    }

    pub fn h(&self) -> &GradedElem {
        &self.h
    }

    pub fn classes(&self) -> &BTreeMap<String, GradedElem> {
        &self.classes
    }

    /// `ch_0 = n`; components above the dimension are zero.
    pub fn ch(&self, k: usize) -> Result<GradedElem> {
        match k {
            0 => Ok(GradedElem::constant(&self.algebra, int(self.n as i64))),
            k if k > self.n => Ok(GradedElem::zero(&self.algebra)),
            k => self
                .classes
                .get(&alloc::format!("ch{k}"))
                .cloned()
                .ok_or_else(|| Error::MissingClass(alloc::format!("ch{k}"))),
        }
    }

    /// `c_0 = 1`; classes above the dimension are zero.
    pub fn c(&self, k: usize) -> Result<GradedElem> {
        match k {
            0 => Ok(GradedElem::one(&self.algebra)),
            k if k > self.n => Ok(GradedElem::zero(&self.algebra)),
            k => self
                .classes
                .get(&alloc::format!("c{k}"))
                .cloned()
                .ok_or_else(|| Error::MissingClass(alloc::format!("c{k}"))),
        }
    }

    /// Integral of a top-degree element.
    pub fn integrate(&self, e: &GradedElem) -> Result<Rational> {
        e.extract_component(self.algebra.top_degree()).pair_number()
    }

    /// Bindings `ch1..ch{k} -> ch_i(X)` and `h -> h` for polynomial evaluation.
    pub fn bindings(&self, k: usize) -> Result<BTreeMap<String, GradedElem>> {
        let mut b = BTreeMap::new();
        for (i, name) in chern_names(k).into_iter().enumerate() {
            b.insert(name, self.ch(i + 1)?);
        }
        b.insert(H.into(), self.h.clone());
        Ok(b)
    }

    /// Evaluates a polynomial in `ch1..`, `h` on this variety.
    pub fn evaluate(&self, p: &MultiPoly) -> Result<GradedElem> {
        let k = p.vars().iter().filter_map(|v| class_index(v).map(|(_, k)| k)).max().unwrap_or(0);
        GradedElem::eval_poly(&self.algebra, p, &self.bindings(k)?)
    }
}

/// Result of substituting a variety into `sigma_{2m}`.
#[derive(Clone, Debug)]
pub struct SigmaCheck {
    pub m: u32,
    pub residual: GradedElem,
    /// The residual times each monomial of complementary degree, integrated.
    /// Empty without an intersection table.
    pub pairings: Vec<(Monomial, Rational)>,
}

impl SigmaCheck {
    /// Zero as a class, or numerically zero when a table is present.
    pub fn vanishes(&self) -> bool {
        self.residual.is_zero() || (!self.pairings.is_empty() && self.pairings.iter().all(|(_, v)| v.is_zero()))
    }
}

/// `sigma_{2m}(X, h)` evaluated on `v`.
pub fn check_sigma(v: &VarietyChernData, m: u32) -> Result<SigmaCheck> {
    if m == 0 || 4 * m > v.algebra.top_degree() {
        return Err(Error::Invalid(alloc::format!(
            "sigma_{} lives in degree {} above the top degree {}",
            2 * m,
            4 * m,
            v.algebra.top_degree()
        )));
    }
    let s = sigma_class(v.n as i64, m)?;
    let residual = v.evaluate(&s.to_poly())?;
    let pairings = if v.algebra.has_table() { residual.pair_with_all(4 * m)? } else { Vec::new() };
    Ok(SigmaCheck { m, residual, pairings })
}

/// Names accepted by [`catalog`]; `n` is a positive integer.
pub const CATALOG: &[&str] =
    &["Pn(n)", "P1xQ(n)", "P1xP1_H_2Hprime", "K3blowup12", "twisted_cubic", "veronese_surface"];

fn sym(alg: &Arc<GradedAlgebraSpec>, s: &str) -> GradedElem {
    GradedElem::parse(alg, s).expect("catalog expressions parse")
}

fn ch_from_series(
    alg: &Arc<GradedAlgebraSpec>,
    n: usize,
    terms: &[(i64, &str)],
) -> Result<BTreeMap<String, GradedElem>> {
    // sum of coefficient * e^{class}; degree-k part is class^k / k!.
    let mut out = BTreeMap::new();
    for k in 1..=n {
        let mut acc = GradedElem::zero(alg);
        for (c, class) in terms {
            acc = acc.add(&sym(alg, class).pow(k as u32).scale(&int(*c)))?;
        }
        out.insert(alloc::format!("ch{k}"), acc.scale(&(Rational::one() / factorial(k))));
    }
    Ok(out)
}

/// Linear `P^n`: `ch(T) = (n+1) e^H - 1`, `h = H`.
pub fn projective_space(n: usize) -> Result<VarietyChernData> {
    let top = alloc::format!("H^{n}");
    let alg = GradedAlgebraSpec::with_table(&[("H", 2)], 2 * n as u32, &[(&top, 1)])?;
    let classes = ch_from_series(&alg, n, &[(n as i64 + 1, "H")])?;
    let mut v = VarietyChernData::new(&alloc::format!("Pn({n})"), n, &alg, classes, sym(&alg, "H"))?;
    v.known_legendrian = Some(true);
    Ok(v)
}

/// Segre `P^1 x Q^{n-1}` with `h = H + M`:
/// `ch(T) = 2 e^H - 1 + (n+1) e^M - 1 - e^{2M}`. Only `H M^{n-1} = 2`
/// is nonzero in top degree.
pub fn p1_times_quadric(n: usize) -> Result<VarietyChernData> {
    if n < 2 {
        return Err(Error::Invalid("P1xQ(n) needs n >= 2".into()));
    }
    let top = alloc::format!("H*M^{}", n - 1);
    let alg = GradedAlgebraSpec::with_table(&[("H", 2), ("M", 2)], 2 * n as u32, &[(&top, 2)])?;
    let classes = ch_from_series(&alg, n, &[(2, "H"), (n as i64 + 1, "M"), (-1, "2*M")])?;
    let mut v = VarietyChernData::new(&alloc::format!("P1xQ({n})"), n, &alg, classes, sym(&alg, "H + M"))?;
    v.known_legendrian = Some(true);
    Ok(v)
}

/// `P^1 x P^1` embedded by `|H + 2H'|`.
pub fn p1xp1_h_2hprime() -> Result<VarietyChernData> {
    let alg = GradedAlgebraSpec::with_table(&[("H", 2), ("Hp", 2)], 4, &[("H*Hp", 1)])?;
    let mut classes = BTreeMap::new();
    classes.insert("c1".to_string(), sym(&alg, "2*H + 2*Hp"));
    classes.insert("c2".to_string(), sym(&alg, "4*H*Hp"));
    let mut v = VarietyChernData::new("P1xP1_H_2Hprime", 2, &alg, classes, sym(&alg, "H + 2*Hp"))?;
    v.known_legendrian = Some(true);
    Ok(v)
}

/// A K3 surface with intersection form `L^2 = L'^2 = 4`, `L L' = 12`,
/// blown up at twelve points, with `h = L + L' - sum E_i`.
pub fn k3_blowup_12() -> Result<VarietyChernData> {
    let names: Vec<String> =
        ["L", "Lp"].iter().map(|s| s.to_string()).chain((1..=12).map(|i| alloc::format!("E{i}"))).collect();
    let mut symbols: Vec<(&str, u32)> = names.iter().map(|s| (s.as_str(), 2)).collect();
    symbols.push(("pt", 4));
    let squares: Vec<String> = (1..=12).map(|i| alloc::format!("E{i}^2")).collect();
    let mut table: Vec<(&str, i64)> = alloc::vec![("L^2", 4), ("Lp^2", 4), ("L*Lp", 12), ("pt", 1)];
    table.extend(squares.iter().map(|s| (s.as_str(), -1)));
    let alg = GradedAlgebraSpec::with_table(&symbols, 4, &table)?;
    let sum_e: String = (1..=12).map(|i| alloc::format!(" - E{i}")).collect();
    let mut classes = BTreeMap::new();
    classes.insert("c1".to_string(), sym(&alg, &sum_e));
    classes.insert("c2".to_string(), sym(&alg, "36*pt"));
    let h = sym(&alg, &alloc::format!("L + Lp{sum_e}"));
    let mut v = VarietyChernData::new("K3blowup12", 2, &alg, classes, h)?;
    v.known_legendrian = Some(true);
    Ok(v)
}

/// `P^1` embedded by cubics in `P^3`.
pub fn twisted_cubic() -> Result<VarietyChernData> {
    let alg = GradedAlgebraSpec::with_table(&[("H", 2)], 2, &[("H", 1)])?;
    let mut classes = BTreeMap::new();
    classes.insert("c1".to_string(), sym(&alg, "2*H"));
    let mut v = VarietyChernData::new("twisted_cubic", 1, &alg, classes, sym(&alg, "3*H"))?;
    v.known_legendrian = Some(true);
    Ok(v)
}

/// `P^2` embedded by conics in `P^5`; not Legendrian, used as a control.
pub fn veronese_surface() -> Result<VarietyChernData> {
    let alg = GradedAlgebraSpec::with_table(&[("H", 2)], 4, &[("H^2", 1)])?;
    let mut classes = BTreeMap::new();
    classes.insert("c1".to_string(), sym(&alg, "3*H"));
    classes.insert("c2".to_string(), sym(&alg, "3*H^2"));
    let mut v = VarietyChernData::new("veronese_surface", 2, &alg, classes, sym(&alg, "2*H"))?;
    v.known_legendrian = Some(false);
    Ok(v)
}

fn parse_dim(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    rest.parse().ok().filter(|&k| k >= 1)
}

/// Catalog lookup. `Pn(3)` and `P3` both name `P^3`; `P1xQ(8)` and `P1xQ8`
/// name `P^1 x Q^7`.
pub fn catalog(name: &str) -> Result<VarietyChernData> {
    match name {
        "P1xP1_H_2Hprime" => p1xp1_h_2hprime(),
        "K3blowup12" => k3_blowup_12(),
        "twisted_cubic" => twisted_cubic(),
        "veronese_surface" => veronese_surface(),
        _ => {
            if let Some(n) = parse_dim(name, "P1xQ") {
                p1_times_quadric(n)
            } else if let Some(n) = parse_dim(name, "Pn").or_else(|| parse_dim(name, "P")) {
                projective_space(n)
            } else {
                Err(Error::UnknownCatalog(name.into()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(v: &VarietyChernData, e: &GradedElem) -> Rational {
        v.integrate(e).unwrap()
    }

    fn binom(n: usize, k: usize) -> i64 {
        (factorial(n) / (factorial(k) * factorial(n - k))).to_integer().try_into().unwrap()
    }

    #[test]
    fn projective_space_chern_classes() {
        // Euler sequence: c(T) = (1 + H)^{n+1}.
        for n in 1..=6 {
            let v = projective_space(n).unwrap();
            for k in 1..=n {
                let expect = sym(v.algebra(), &alloc::format!("{}*H^{k}", binom(n + 1, k)));
                assert_eq!(v.c(k).unwrap(), expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn quadric_product_chern_classes() {
        // c(T) = (1 + H)^2 (1 + M)^{n+1} / (1 + 2M), compared numerically.
        for n in 2..=6 {
            let v = p1_times_quadric(n).unwrap();
            let alg = v.algebra().clone();
            let mut inv = GradedElem::zero(&alg);
            for j in 0..=n {
                inv = inv.add(&sym(&alg, "-2*M").pow(j as u32)).unwrap();
            }
            let total =
                sym(&alg, "1 + H").pow(2).mul(&sym(&alg, "1 + M").pow(n as u32 + 1)).unwrap().mul(&inv).unwrap();
            for k in 1..=n {
                let diff = total.extract_component(2 * k as u32).sub(&v.c(k).unwrap()).unwrap();
                for (_, x) in diff.pair_with_all(2 * k as u32).unwrap() {
                    assert!(x.is_zero(), "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn k3_blowup_numbers() {
        let v = k3_blowup_12().unwrap();
        let c1 = v.c(1).unwrap();
        let h = v.h().clone();
        assert_eq!(num(&v, &h.mul(&h).unwrap()), int(20));
        assert_eq!(num(&v, &c1.mul(&h).unwrap()), int(-12));
        assert_eq!(num(&v, &c1.mul(&c1).unwrap()), int(-12));
        assert_eq!(num(&v, &v.c(2).unwrap()), int(36));
        assert_eq!(num(&v, &v.ch(2).unwrap().scale(&int(2))), int(-84));
    }

    #[test]
    fn p1xp1_numbers() {
        let v = p1xp1_h_2hprime().unwrap();
        let c1 = v.c(1).unwrap();
        assert_eq!(num(&v, &c1.mul(&c1).unwrap()), int(8));
        assert_eq!(num(&v, &v.c(2).unwrap()), int(4));
        assert_eq!(num(&v, &v.h().pow(2)), int(4));
    }

    #[test]
    fn legendrian_entries_satisfy_sigma() {
        for name in ["Pn(2)", "P5", "P1xQ(2)", "P1xQ(5)", "P1xP1_H_2Hprime", "K3blowup12"] {
            let v = catalog(name).unwrap();
            for m in 1..=(v.n as u32 / 2) {
                let s = check_sigma(&v, m).unwrap();
                assert!(s.vanishes(), "{name} m={m}: {}", s.residual);
            }
        }
        assert!(check_sigma(&projective_space(4).unwrap(), 2).unwrap().residual.is_zero());
    }

    #[test]
    fn veronese_fails_sigma() {
        let v = veronese_surface().unwrap();
        assert!(!check_sigma(&v, 1).unwrap().vanishes());
    }

    #[test]
    fn sigma_above_top_degree() {
        assert!(check_sigma(&twisted_cubic().unwrap(), 1).is_err());
        assert!(check_sigma(&projective_space(3).unwrap(), 2).is_err());
    }

    #[test]
    fn inconsistent_classes_are_rejected() {
        let alg = GradedAlgebraSpec::with_table(&[("H", 2)], 4, &[("H^2", 1)]).unwrap();
        let mut classes = BTreeMap::new();
        classes.insert("c1".to_string(), sym(&alg, "3*H"));
        classes.insert("c2".to_string(), sym(&alg, "3*H^2"));
        classes.insert("ch2".to_string(), sym(&alg, "H^2"));
        assert!(VarietyChernData::new("bad", 2, &alg, classes, sym(&alg, "H")).is_err());
    }

    #[test]
    fn catalog_names() {
        assert_eq!(catalog("P3").unwrap().n, 3);
        assert_eq!(catalog("P1xQ8").unwrap().n, 8);
        assert!(matches!(catalog("Grassmannian"), Err(Error::UnknownCatalog(_))));
    }
}
