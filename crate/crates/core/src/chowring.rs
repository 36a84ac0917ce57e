//! Truncated graded-commutative algebras on named even-degree symbols.
//!
//! An element is stored as one polynomial per cohomological degree, the
//! polynomial ring being over the symbol names. Products of degree above the
//! top degree are dropped silently; evaluation against an intersection table
//! turns a top-degree element into a number.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::{parse_poly, Monomial, MultiPoly, Rational};
use crate::{Error, Result};

/// Symbols with their (even) degrees, a top degree, and optionally the
/// values of top-degree monomials. Monomials missing from the table pair to
/// zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebraSpec {
    names: Vec<String>,
    degrees: Vec<u32>,
    top_degree: u32,
    table: Option<BTreeMap<Monomial, BigInt>>,
}

impl GradedAlgebraSpec {
    pub fn new(symbols: &[(&str, u32)], top_degree: u32) -> Result<Arc<Self>> {
        Self::build(symbols.iter().map(|(n, d)| ((*n).to_string(), *d)).collect(), top_degree, None)
    }

    /// Table entries are given as monomial strings such as `"L*E1"`.
    pub fn with_table(symbols: &[(&str, u32)], top_degree: u32, table: &[(&str, i64)]) -> Result<Arc<Self>> {
        let names: Vec<String> = symbols.iter().map(|(n, _)| (*n).to_string()).collect();
        let mut entries = Vec::new();
        for (mono, v) in table {
            entries.push((Self::parse_monomial(&names, mono)?, BigInt::from(*v)));
        }
        Self::build(symbols.iter().map(|(n, d)| ((*n).to_string(), *d)).collect(), top_degree, Some(entries))
    }

    /// Parses a monomial with unit coefficient over `names`.
    pub fn parse_monomial(names: &[String], text: &str) -> Result<Monomial> {
        let p = parse_poly(text, names)?;
        match p.terms().iter().next() {
            Some((m, c)) if p.num_terms() == 1 && c.is_one() => Ok(m.clone()),
            _ => Err(Error::Invalid(alloc::format!("`{text}` is not a monomial"))),
        }
    }

    pub fn build(
        symbols: Vec<(String, u32)>,
        top_degree: u32,
        table: Option<Vec<(Monomial, BigInt)>>,
    ) -> Result<Arc<Self>> {
        if top_degree == 0 || !top_degree.is_multiple_of(2) {
            return Err(Error::Invalid(alloc::format!("top degree {top_degree} must be even and positive")));
        }
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        for (n, d) in symbols {
            if d == 0 || d % 2 != 0 {
                return Err(Error::Invalid(alloc::format!(
                    "symbol `{n}` has degree {d}; degrees must be even and positive"
                )));
            }
            if d > top_degree {
                return Err(Error::Invalid(alloc::format!("symbol `{n}` exceeds the top degree")));
            }
            if names.contains(&n) {
                return Err(Error::Invalid(alloc::format!("duplicate symbol `{n}`")));
            }
            names.push(n);
            degrees.push(d);
        }
        let spec = GradedAlgebraSpec { names, degrees, top_degree, table: None };
        let table = match table {
            None => None,
            Some(entries) => {
                let mut t = BTreeMap::new();
                for (m, v) in entries {
                    if m.len() != spec.names.len() || spec.degree_of(&m) != top_degree {
                        return Err(Error::Invalid("table key is not a top-degree monomial".into()));
                    }
                    t.insert(m, v);
                }
                Some(t)
            }
        };
        Ok(Arc::new(GradedAlgebraSpec { table, ..spec }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn table(&self) -> Option<&BTreeMap<Monomial, BigInt>> {
        self.table.as_ref()
    }

    pub fn degree_of(&self, m: &Monomial) -> u32 {
        m.exps().iter().zip(&self.degrees).map(|(e, d)| e * d).sum()
    }
}

/// Element of a [`GradedAlgebraSpec`]; components are keyed by degree and
/// never stored when zero.
#[derive(Clone, Debug)]
pub struct GradedElem {
    algebra: Arc<GradedAlgebraSpec>,
    components: BTreeMap<u32, MultiPoly>,
}

impl GradedElem {
    pub fn zero(algebra: &Arc<GradedAlgebraSpec>) -> Self {
        GradedElem { algebra: algebra.clone(), components: BTreeMap::new() }
    }

    pub fn constant(algebra: &Arc<GradedAlgebraSpec>, c: Rational) -> Self {
        Self::from_poly(algebra, &MultiPoly::constant(&algebra.names, c)).expect("constants live in every algebra")
    }

    pub fn one(algebra: &Arc<GradedAlgebraSpec>) -> Self {
        Self::constant(algebra, Rational::one())
    }

    pub fn symbol(algebra: &Arc<GradedAlgebraSpec>, name: &str) -> Result<Self> {
        Self::from_poly(algebra, &MultiPoly::var(&algebra.names, name)?)
    }

    /// Splits a polynomial in the symbols into graded pieces, truncating.
    pub fn from_poly(algebra: &Arc<GradedAlgebraSpec>, p: &MultiPoly) -> Result<Self> {
        let p = p.with_vars(&algebra.names)?;
        let mut buckets: BTreeMap<u32, Vec<(Vec<u32>, Rational)>> = BTreeMap::new();
        for (m, c) in p.terms() {
            let d = algebra.degree_of(m);
            if d <= algebra.top_degree {
                buckets.entry(d).or_default().push((m.exps().to_vec(), c.clone()));
            }
        }
        let components = buckets.into_iter().map(|(d, ts)| (d, MultiPoly::from_terms(&algebra.names, ts))).collect();
        Ok(GradedElem { algebra: algebra.clone(), components })
    }

    /// Parses an expression in the symbol names.
    pub fn parse(algebra: &Arc<GradedAlgebraSpec>, text: &str) -> Result<Self> {
        Self::from_poly(algebra, &parse_poly(text, &algebra.names)?)
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebraSpec> {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Degrees with a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        self.components.keys().copied().collect()
    }

    /// The degree-`d` part as a polynomial in the symbols.
    pub fn component(&self, d: u32) -> MultiPoly {
        self.components.get(&d).cloned().unwrap_or_else(|| MultiPoly::zero(&self.algebra.names))
    }

    /// The whole element as one polynomial in the symbols.
    pub fn to_poly(&self) -> MultiPoly {
        self.components.values().fold(MultiPoly::zero(&self.algebra.names), |acc, c| acc.add(c))
    }

    /// Degree-0 coefficient.
    pub fn scalar_part(&self) -> Rational {
        self.component(0).constant_term()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn insert(&mut self, d: u32, p: MultiPoly) {
        if p.is_zero() {
            self.components.remove(&d);
        } else {
            self.components.insert(d, p);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, p) in &other.components {
            let s = out.component(*d).add(p);
            out.insert(*d, s);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(&self.algebra);
        for (d, p) in &self.components {
            out.insert(*d, p.scale(r));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let top = self.algebra.top_degree;
        let mut out = Self::zero(&self.algebra);
        for (da, pa) in &self.components {
            for (db, pb) in &other.components {
                let d = da + db;
                if d > top {
                    continue;
                }
                let s = out.component(d).add(&pa.mul(pb));
                out.insert(d, s);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.algebra);
        for _ in 0..k {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    /// Homogeneous part of degree `d` (zero if absent or out of range).
    pub fn extract_component(&self, d: u32) -> Self {
        let mut out = Self::zero(&self.algebra);
        if let Some(p) = self.components.get(&d) {
            out.insert(d, p.clone());
        }
        out
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.components.keys().all(|k| *k == d)
    }

    /// `sum (sign h)^k / k!`, truncated; `h` must be homogeneous of degree 2.
    pub fn exp_series(sign: i32, h: &Self) -> Result<Self> {
        if !h.is_homogeneous_of(2) {
            return Err(Error::NotHomogeneous(2));
        }
        let x = if sign < 0 { h.neg() } else { h.clone() };
        let mut term = Self::one(&h.algebra);
        let mut acc = term.clone();
        let mut k = 1i64;
        while 2 * (k as u32) <= h.algebra.top_degree {
            term = term.mul(&x)?.scale(&Rational::new(BigInt::one(), BigInt::from(k)));
            acc = acc.add(&term)?;
            k += 1;
        }
        Ok(acc)
    }

    /// Table-weighted sum of the coefficients of a top-degree element.
    pub fn pair_number(&self) -> Result<Rational> {
        let table = self.algebra.table.as_ref().ok_or(Error::MissingTable)?;
        let top = self.algebra.top_degree;
        if !self.is_homogeneous_of(top) {
            return Err(Error::NotHomogeneous(top));
        }
        let mut acc = Rational::zero();
        for (m, c) in self.component(top).terms() {
            if let Some(v) = table.get(m) {
                acc += c * Rational::from_integer(v.clone());
            }
        }
        Ok(acc)
    }

    /// Pairings of the top-degree part of `self` times every monomial of
    /// complementary degree; all zero iff the top part is numerically zero.
    pub fn pair_with_all(&self, d: u32) -> Result<Vec<(Monomial, Rational)>> {
        let top = self.algebra.top_degree;
        if d > top {
            return Ok(Vec::new());
        }
        let part = self.extract_component(d);
        let mut out = Vec::new();
        for m in monomials_of_degree(&self.algebra.degrees, top - d) {
            let mono = MultiPoly::monomial(&self.algebra.names, m.exps().to_vec(), Rational::one());
            let e = part.mul(&Self::from_poly(&self.algebra, &mono)?)?;
            out.push((m, e.pair_number()?));
        }
        Ok(out)
    }

    /// Evaluates `p` after substituting graded elements for its variables.
    pub fn eval_poly(
        algebra: &Arc<GradedAlgebraSpec>,
        p: &MultiPoly,
        bindings: &BTreeMap<String, GradedElem>,
    ) -> Result<Self> {
        let mut vals = Vec::with_capacity(p.vars().len());
        for v in p.vars() {
            let b = bindings.get(v).ok_or_else(|| Error::MissingClass(v.clone()))?;
            b.check(&Self::zero(algebra))?;
            vals.push(b);
        }
        let mut acc = Self::zero(algebra);
        for (m, c) in p.terms() {
            let mut t = Self::constant(algebra, c.clone());
            for (b, e) in vals.iter().zip(m.exps()) {
                if *e > 0 {
                    t = t.mul(&b.pow(*e))?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }
}

/// All monomials of exactly weighted degree `d` for the given symbol degrees.
pub fn monomials_of_degree(degrees: &[u32], d: u32) -> Vec<Monomial> {
    fn rec(degrees: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let mut e = 0;
        while e * degrees[i] <= left {
            cur.push(e);
            rec(degrees, i + 1, left - e * degrees[i], cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(degrees, 0, d, &mut Vec::new(), &mut out);
    out
}

impl PartialEq for GradedElem {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.components == other.components
    }
}

impl fmt::Display for GradedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.components.values().rev().map(|p| alloc::format!("{p}")).collect();
        let mut s = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                s.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn surface() -> Arc<GradedAlgebraSpec> {
        GradedAlgebraSpec::with_table(&[("L", 2), ("Lp", 2)], 4, &[("L^2", 4), ("Lp^2", 4), ("L*Lp", 12)]).unwrap()
    }

    #[test]
    fn square_of_sum_pairs_to_32() {
        let a = surface();
        let s = GradedElem::parse(&a, "L + Lp").unwrap();
        assert_eq!(s.pow(2).pair_number().unwrap(), int(32));
    }

    #[test]
    fn truncation_above_top() {
        let a = GradedAlgebraSpec::new(&[("ch2", 4), ("ch3", 6)], 8).unwrap();
        let x = GradedElem::symbol(&a, "ch2").unwrap();
        let y = GradedElem::symbol(&a, "ch3").unwrap();
        assert!(x.mul(&y).unwrap().is_zero());
    }

    #[test]
    fn exponentials() {
        let a2 = GradedAlgebraSpec::new(&[("h", 2)], 2).unwrap();
        let h = GradedElem::symbol(&a2, "h").unwrap();
        assert_eq!(GradedElem::exp_series(-1, &h).unwrap(), GradedElem::parse(&a2, "1 - h").unwrap());
        let a = GradedAlgebraSpec::new(&[("h", 2)], 8).unwrap();
        let h = GradedElem::symbol(&a, "h").unwrap();
        let e = GradedElem::exp_series(1, &h).unwrap();
        let f = GradedElem::exp_series(-1, &h).unwrap();
        assert_eq!(e.mul(&f).unwrap(), GradedElem::one(&a));
        // h^4 sits in cohomological degree 8: 2 * h^4 / 4!.
        let quartic = e.add(&f).unwrap().extract_component(8);
        assert_eq!(quartic, GradedElem::parse(&a, "1/12*h^4").unwrap());
        assert!(e.add(&f).unwrap().extract_component(6).is_zero());
        assert!(GradedElem::exp_series(1, &GradedElem::one(&a)).is_err());
    }

    #[test]
    fn missing_table_and_mixed_degrees() {
        let a = GradedAlgebraSpec::new(&[("h", 2)], 4).unwrap();
        let h = GradedElem::symbol(&a, "h").unwrap();
        assert_eq!(h.pow(2).pair_number(), Err(Error::MissingTable));
        let s = surface();
        let e = GradedElem::parse(&s, "L + L^2").unwrap();
        assert_eq!(e.pair_number(), Err(Error::NotHomogeneous(4)));
        assert_eq!(h.add(&GradedElem::one(&s)), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn point_on_product_of_lines() {
        let a = GradedAlgebraSpec::with_table(&[("H", 2), ("Hp", 2)], 4, &[("H*Hp", 1)]).unwrap();
        assert_eq!(GradedElem::parse(&a, "H*Hp").unwrap().pair_number().unwrap(), int(1));
        assert_eq!(GradedElem::parse(&a, "H^2").unwrap().pair_number().unwrap(), int(0));
    }

    #[test]
    fn invalid_specs() {
        assert!(GradedAlgebraSpec::new(&[("x", 3)], 6).is_err());
        assert!(GradedAlgebraSpec::new(&[("x", 2)], 5).is_err());
        assert!(GradedAlgebraSpec::with_table(&[("x", 2)], 4, &[("x", 1)]).is_err());
    }
}
