use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ffpoly::FFPoly;
use super::{format_rational, Monomial, Rational};
use crate::{Error, Result};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in a map keyed by graded-lex monomials and never hold a zero
/// coefficient, so two polynomials over the same variable list are equal iff
/// their maps are equal. Polynomials over different variable lists are
/// compared after embedding both into the union list.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The coordinate function `name`.
    pub fn var(vars: &[String], name: &str) -> Result<Self> {
        let i = vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial::var(vars.len(), i), Rational::one());
        Ok(p)
    }

    /// All coordinate functions, in variable order.
    pub fn gens(vars: &[String]) -> Vec<Self> {
        (0..vars.len())
            .map(|i| {
                let mut p = Self::zero(vars);
                p.terms.insert(Monomial::var(vars.len(), i), Rational::one());
                p
            })
            .collect()
    }

    pub fn monomial(vars: &[String], exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(vars: &[String], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * vars[i]`.
    pub fn linear(vars: &[String], coeffs: &[Rational]) -> Self {
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(vars.len(), i), c.clone());
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one(self.vars.len())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Degree in one variable; `None` for the zero polynomial, `Some(0)` if
    /// the variable does not occur.
    pub fn degree_in(&self, name: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        match self.var_index(name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max(),
            None => Some(0),
        }
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Re-expresses `self` over `vars`, which must contain every variable
    /// that actually occurs.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self> {
        if vars == self.vars.as_slice() {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|m| m.0[i] != 0) {
                        return Err(Error::UnknownVariable(v.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut e = alloc::vec![0u32; vars.len()];
            for (i, j) in map.iter().enumerate() {
                if let Some(j) = j {
                    e[*j] = m.0[i];
                }
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Union of the two variable lists, `self`'s order first.
    pub fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
        let mut out = a.to_vec();
        for v in b {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        out
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = Self::union_vars(&self.vars, &other.vars);
        (
            self.with_vars(&vars).expect("union contains all variables"),
            other.with_vars(&vars).expect("union contains all variables"),
        )
    }

    fn zip_with(&self, other: &Self, negate: bool) -> Self {
        if self.vars != other.vars {
            let (a, b) = self.unify(other);
            return a.zip_with(&b, negate);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.vars != other.vars {
            let (a, b) = self.unify(other);
            return a.mul(&b);
        }
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect() }
    }

    /// Multiplies by the monomial with exponents `e`.
    pub fn shift(&self, e: &Monomial) -> Self {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.mul(e), c.clone())).collect() }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return Err(Error::NegativeExponent(k));
        }
        Ok(self.pow_u(k as u32))
    }

    pub fn pow_u(&self, mut k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `order`-th partial derivative in `name`; zero if `name` does not occur.
    pub fn differentiate(&self, name: &str, order: u32) -> Self {
        let Some(i) = self.var_index(name) else {
            return Self::zero(&self.vars);
        };
        self.differentiate_index(i, order)
    }

    pub fn differentiate_index(&self, i: usize, order: u32) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e < order {
                continue;
            }
            let mut falling = BigInt::one();
            for j in 0..order {
                falling *= BigInt::from(e - j);
            }
            let mut nm = m.clone();
            nm.0[i] -= order;
            out.add_term(nm, c * Rational::from_integer(falling));
        }
        out
    }

    /// Gradient in variable order.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.vars.len()).map(|i| self.differentiate_index(i, 1)).collect()
    }

    /// Evaluates at a point given in variable order.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::Dimension(alloc::format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in point.iter().zip(&m.0) {
                if *e > 0 {
                    t *= num_traits::pow(x.clone(), *e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes polynomials for variables. Unbound variables pass through;
    /// bindings for names that do not occur are ignored. The result lives
    /// over the unbound variables followed by the bindings' variables.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> Self {
        let mut vars: Vec<String> = self.vars.iter().filter(|v| !bindings.contains_key(*v)).cloned().collect();
        for (name, b) in bindings {
            if self.vars.contains(name) {
                vars = Self::union_vars(&vars, &b.vars);
            }
        }
        let mut images = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let img = match bindings.get(v) {
                Some(b) => b.with_vars(&vars).expect("vars contain binding vars"),
                None => Self::var(&vars, v).expect("unbound var kept"),
            };
            images.push(img);
        }
        self.compose(&images, &vars)
    }

    /// Substitutes `images[i]` (all over `vars`) for the i-th variable.
    pub fn compose(&self, images: &[MultiPoly], vars: &[String]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let mut cache: Vec<Vec<MultiPoly>> = images.iter().map(|p| alloc::vec![Self::one(vars), p.clone()]).collect();
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(vars, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                let pw = &mut cache[i];
                while pw.len() <= *e as usize {
                    let next = pw.last().expect("nonempty").mul(&pw[1]);
                    pw.push(next);
                }
                t = t.mul(&pw[*e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Substitutes rationals for some variables, keeping the variable list.
    pub fn partial_evaluate(&self, values: &BTreeMap<String, Rational>) -> Self {
        let idx: Vec<Option<Rational>> = self.vars.iter().map(|v| values.get(v).cloned()).collect();
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            let mut t = c.clone();
            for (i, val) in idx.iter().enumerate() {
                if let Some(x) = val {
                    if nm.0[i] > 0 {
                        t *= num_traits::pow(x.clone(), nm.0[i] as usize);
                        nm.0[i] = 0;
                    }
                }
            }
            out.add_term(nm, t);
        }
        out
    }

    /// Coefficients of powers of `name`: entry `k` is the coefficient of
    /// `name^k`, a polynomial over the same variables not involving `name`.
    pub fn coefficients_in(&self, name: &str) -> Vec<MultiPoly> {
        let Some(i) = self.var_index(name) else {
            return alloc::vec![self.clone()];
        };
        let deg = self.degree_in(name).unwrap_or(0) as usize;
        let mut out = alloc::vec![Self::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            let k = nm.0[i] as usize;
            nm.0[i] = 0;
            out[k].terms.insert(nm, c.clone());
        }
        out
    }

    /// Inverse of [`MultiPoly::coefficients_in`].
    pub fn from_coefficients(name: &str, coeffs: &[MultiPoly]) -> Result<Self> {
        let vars = coeffs.iter().fold(alloc::vec![name.to_string()], |acc, c| Self::union_vars(&acc, &c.vars));
        let t = Self::var(&vars, name)?;
        let mut out = Self::zero(&vars);
        let mut pw = Self::one(&vars);
        for c in coeffs {
            out = out.add(&c.with_vars(&vars)?.mul(&pw));
            pw = pw.mul(&t);
        }
        Ok(out)
    }

    /// Division by a single polynomial in graded-lex order. The remainder is
    /// the unique normal form, so `r == 0` iff `other` divides `self`.
    pub fn div_rem(&self, other: &Self) -> Result<(Self, Self)> {
        if other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.vars != other.vars {
            let (a, b) = self.unify(other);
            return a.div_rem(&b);
        }
        let (lm, lc) = other.leading_term().expect("nonzero");
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut q = Self::zero(&self.vars);
        let mut r = Self::zero(&self.vars);
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.iter().next_back() {
            let (m, c) = (m.clone(), c.clone());
            match m.div(&lm) {
                Some(s) => {
                    let f = &c / &lc;
                    p = p.sub(&other.shift(&s).scale(&f));
                    q.add_term(s, f);
                }
                None => {
                    p.terms.remove(&m);
                    r.add_term(m, c);
                }
            }
        }
        Ok((q, r))
    }

    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(other)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Whether `self` lies in the principal ideal generated by `g`.
    pub fn divisible_by(&self, g: &Self) -> Result<bool> {
        Ok(self.div_rem(g)?.1.is_zero())
    }

    /// Positive rational `c` with `self / c` integral and primitive; zero for 0.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::zero();
        }
        Rational::new(num, den)
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_term().expect("nonzero").1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// `Some(c)` with `self == c * other`, if such a rational exists.
    pub fn proportional_to(&self, other: &Self) -> Option<Rational> {
        if other.is_zero() {
            return if self.is_zero() { Some(Rational::zero()) } else { None };
        }
        let (a, b) = self.unify(other);
        let (m, c) = b.leading_term().expect("nonzero");
        let ratio = a.terms.get(m).cloned().unwrap_or_else(Rational::zero) / c;
        if a == b.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Homogeneous degree; `None` for zero or mixed-degree polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.total_degree()
        }
    }

    /// Homogeneity with respect to integer weights on the variables.
    pub fn weighted_degree(&self, m: &Monomial, weights: &[u32]) -> u32 {
        m.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| self.weighted_degree(m, weights));
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Sets `x_i -> x_i + shift_i` for every variable.
    pub fn translate(&self, shift: &[Rational]) -> Self {
        let gens = Self::gens(&self.vars);
        let images: Vec<MultiPoly> =
            gens.iter().zip(shift).map(|(g, s)| g.add(&Self::constant(&self.vars, s.clone()))).collect();
        self.compose(&images, &self.vars)
    }

    /// Coefficient-wise reduction modulo `prime`.
    pub fn reduce_mod_p(&self, prime: u64) -> Result<FFPoly> {
        if !super::is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        let p = BigInt::from(prime);
        let mut out = FFPoly::zero(&self.vars, prime);
        for (m, c) in &self.terms {
            let den = c.denom().mod_floor(&p);
            if den.is_zero() {
                let single = MultiPoly { vars: self.vars.clone(), terms: [(m.clone(), c.clone())].into() };
                return Err(Error::BadReduction { term: single.to_string(), prime });
            }
            let num = to_u64(&c.numer().mod_floor(&p));
            let den = to_u64(&den);
            let v = super::ffpoly::mul_mod(num, super::ffpoly::inv_mod(den, prime), prime);
            out.add_term(m.clone(), v);
        }
        Ok(out)
    }
}

fn to_u64(b: &BigInt) -> u64 {
    u64::try_from(b).expect("reduced residue fits in u64")
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.unify(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$m(self, rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

/// Canonical form: terms in decreasing graded-lex order, coefficient `a/b*`
/// omitted when it is `1`, factors `name^k` joined by `*`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(alloc::format!("{v}^{e}")),
                }
            }
            if factors.is_empty() {
                f.write_str(&format_rational(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", format_rational(&a))?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, parse_poly, rat, var_names};

    fn v3() -> Vec<String> {
        var_names("x", 1, 3)
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &v3()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x1 + x2") * &p("x1 - x2"), p("x1^2 - x2^2"));
    }

    #[test]
    fn square_of_monomial() {
        assert_eq!(p("x1*x2*x3").pow(2).unwrap(), p("x1^2*x2^2*x3^2"));
        assert_eq!(p("x1").pow(-1), Err(Error::NegativeExponent(-1)));
    }

    #[test]
    fn zero_is_additive_identity() {
        let q = p("3/2*x1^2*x2 - x3");
        assert_eq!(&q + &MultiPoly::zero(&v3()), q);
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x1^3").differentiate("x1", 1), p("3*x1^2"));
        assert_eq!(p("x1*x2*x3").differentiate("x2", 1), p("x1*x3"));
        let v = var_names("x", 0, 2);
        let f = parse_poly("x0^4 + x1^4", &v).unwrap();
        assert_eq!(f.differentiate("x0", 2), parse_poly("12*x0^2", &v).unwrap());
        assert!(p("7").differentiate("x1", 1).is_zero());
    }

    #[test]
    fn substitution_into_gradient() {
        let q = p("x1*x2*x3");
        let b: BTreeMap<String, MultiPoly> = v3().iter().map(|v| (v.clone(), q.differentiate(v, 1))).collect();
        assert_eq!(q.substitute(&b), p("x1^2*x2^2*x3^2"));
        let z: BTreeMap<String, MultiPoly> = [("x1".into(), MultiPoly::zero(&v3()))].into_iter().collect();
        assert!(p("x1*x2").substitute(&z).is_zero());
    }

    #[test]
    fn full_substitution_matches_evaluate() {
        let q = p("3/2*x1^2*x2 - x3 + 5");
        let pt = [rat(1, 2), int(-3), rat(7, 5)];
        let b: BTreeMap<String, MultiPoly> =
            v3().iter().zip(&pt).map(|(v, c)| (v.clone(), MultiPoly::constant(&[], c.clone()))).collect();
        let s = q.substitute(&b);
        assert!(s.is_constant());
        assert_eq!(s.constant_term(), q.evaluate(&pt).unwrap());
    }

    #[test]
    fn division_and_membership() {
        let a = p("x1^2 - x2^2");
        let (q, r) = a.div_rem(&p("x1 - x2")).unwrap();
        assert_eq!(q, p("x1 + x2"));
        assert!(r.is_zero());
        assert_eq!(p("x1^2 + 1").exact_div(&p("x1")), Err(Error::InexactDivision));
    }

    #[test]
    fn reduce_half_mod_five() {
        let f = p("1/2*x1").reduce_mod_p(5).unwrap();
        assert_eq!(f.coeff(&[1, 0, 0]), 3);
        let e = p("1/3*x1").reduce_mod_p(3).unwrap_err();
        assert!(matches!(e, Error::BadReduction { prime: 3, .. }));
        let g = p("x1^4 + x1").reduce_mod_p(2).unwrap();
        assert_eq!(g.num_terms(), 2);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("-x3 + 3/2*x2*x1^2").to_string(), "3/2*x1^2*x2 - x3");
        assert_eq!(p("0*x1").to_string(), "0");
        assert_eq!(p("-1/2").to_string(), "-1/2");
    }

    #[test]
    fn coefficient_split_roundtrip() {
        let q = p("x1^2*x2 + 3*x2 - x1*x3 + 1");
        let cs = q.coefficients_in("x1");
        assert_eq!(cs.len(), 3);
        assert_eq!(MultiPoly::from_coefficients("x1", &cs).unwrap(), q);
    }

    #[test]
    fn union_of_variables() {
        let a = parse_poly("a", &["a".into()]).unwrap();
        let b = parse_poly("b", &["b".into()]).unwrap();
        let s = &a * &b;
        assert_eq!(s.vars(), &["a".to_string(), "b".to_string()][..]);
        assert_eq!(s, parse_poly("a*b", &["b".into(), "a".into()]).unwrap());
    }
}
