//! Polynomials over a prime field `F_p` with `p < 2^63`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use super::Monomial;
use crate::{Error, Result};

/// Mersenne prime `2^31 - 1`, the default sampling modulus.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Sparse multivariate polynomial with coefficients in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FFPoly {
    prime: u64,
    vars: Vec<String>,
    terms: BTreeMap<Monomial, u64>,
}

impl FFPoly {
    pub fn zero(vars: &[String], prime: u64) -> Self {
        FFPoly { prime, vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], prime: u64, c: u64) -> Self {
        let mut p = Self::zero(vars, prime);
        p.add_term(Monomial::one(vars.len()), c % prime);
        p
    }

    pub fn var(vars: &[String], prime: u64, index: usize) -> Self {
        let mut p = Self::zero(vars, prime);
        p.add_term(Monomial::var(vars.len(), index), 1);
        p
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, u64> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> u64 {
        self.terms.get(&Monomial(exps.to_vec())).copied().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &u64)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, index: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[index]).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: u64) {
        let p = self.prime;
        let c = c % p;
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m).or_insert(0);
        *e = add_mod(*e, c, p);
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.prime, other.prime, "mixed primes");
        assert_eq!(self.vars, other.vars, "mixed variable lists");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), *c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let p = self.prime;
        FFPoly {
            prime: p,
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), p - c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let p = self.prime;
        let mut acc: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = add_mod(*e, mul_mod(*ca, *cb, p), p);
            }
        }
        acc.retain(|_, v| *v != 0);
        FFPoly { prime: p, vars: self.vars.clone(), terms: acc }
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.prime;
        let c = c % p;
        if c == 0 {
            return Self::zero(&self.vars, p);
        }
        FFPoly {
            prime: p,
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), mul_mod(*v, c, p))).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut acc = Self::constant(&self.vars, self.prime, 1);
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

    pub fn evaluate(&self, point: &[u64]) -> u64 {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        let p = self.prime;
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut t = *c;
            for (x, e) in point.iter().zip(&m.0) {
                if *e > 0 {
                    t = mul_mod(t, pow_mod(*x, *e as u64, p), p);
                }
            }
            acc = add_mod(acc, t, p);
        }
        acc
    }

    /// Sets variable `index` to `value`, keeping the variable list.
    pub fn specialize(&self, index: usize, value: u64) -> Self {
        let p = self.prime;
        let mut out = Self::zero(&self.vars, p);
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            let e = nm.0[index];
            nm.0[index] = 0;
            out.add_term(nm, mul_mod(*c, pow_mod(value, e as u64, p), p));
        }
        out
    }

    pub fn differentiate_index(&self, index: usize) -> Self {
        let p = self.prime;
        let mut out = Self::zero(&self.vars, p);
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm.0[index] -= 1;
            out.add_term(nm, mul_mod(*c, e as u64 % p, p));
        }
        out
    }

    /// Entry `k` is the coefficient of `x_index^k`, over the same variables.
    pub fn coefficients_in(&self, index: usize) -> Vec<Self> {
        let deg = self.degree_in(index).unwrap_or(0) as usize;
        let mut out = alloc::vec![Self::zero(&self.vars, self.prime); deg + 1];
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            let k = nm.0[index] as usize;
            nm.0[index] = 0;
            out[k].terms.insert(nm, *c);
        }
        out
    }

    /// Dense univariate view in variable `index`, valid when no other
    /// variable occurs.
    pub fn to_univariate(&self, index: usize) -> Option<UniFp> {
        let mut c = alloc::vec![0u64; self.degree_in(index).unwrap_or(0) as usize + 1];
        for (m, v) in &self.terms {
            if m.0.iter().enumerate().any(|(i, e)| i != index && *e != 0) {
                return None;
            }
            c[m.0[index] as usize] = *v;
        }
        Some(UniFp::new(self.prime, c))
    }

    /// Division by one polynomial in graded-lex order.
    pub fn div_rem(&self, other: &Self) -> Result<(Self, Self)> {
        self.check(other);
        let p = self.prime;
        let (lm, lc) = other.leading_term().ok_or(Error::ZeroPolynomial)?;
        let (lm, linv) = (lm.clone(), inv_mod(*lc, p));
        let mut q = Self::zero(&self.vars, p);
        let mut r = Self::zero(&self.vars, p);
        let mut rest = self.clone();
        while let Some((m, c)) = rest.terms.iter().next_back() {
            let (m, c) = (m.clone(), *c);
            match m.div(&lm) {
                Some(s) => {
                    let f = mul_mod(c, linv, p);
                    let mut t = Self::zero(&self.vars, p);
                    t.add_term(s.clone(), f);
                    rest = rest.sub(&other.mul(&t));
                    q.add_term(s, f);
                }
                None => {
                    rest.terms.remove(&m);
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
}

/// Dense univariate polynomial over `F_p`, lowest degree first, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniFp {
    p: u64,
    c: Vec<u64>,
}

impl UniFp {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for v in c.iter_mut() {
            *v %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        UniFp { p, c }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c.iter().rev().fold(0, |acc, v| add_mod(mul_mod(acc, x, self.p), *v, self.p))
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| sub_mod(self.c.get(i).copied().unwrap_or(0), o.c.get(i).copied().unwrap_or(0), self.p))
            .collect();
        Self::new(self.p, c)
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(self.p, Vec::new());
        }
        let mut c = alloc::vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = add_mod(c[i + j], mul_mod(*a, *b, self.p), self.p);
            }
        }
        Self::new(self.p, c)
    }

    fn rem(&self, m: &Self) -> Self {
        self.div_rem(m).1
    }

    pub fn div_rem(&self, m: &Self) -> (Self, Self) {
        let p = self.p;
        let dm = m.degree().expect("nonzero modulus");
        let inv = inv_mod(m.c[dm], p);
        let mut r = self.c.clone();
        let mut q = alloc::vec![0u64; self.c.len().saturating_sub(dm).max(1)];
        while r.len() > dm {
            let k = r.len() - 1 - dm;
            let f = mul_mod(*r.last().expect("nonempty"), inv, p);
            q[k] = f;
            for (i, v) in m.c.iter().enumerate() {
                r[k + i] = sub_mod(r[k + i], mul_mod(f, *v, p), p);
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(l) => {
                let inv = inv_mod(*l, self.p);
                Self::new(self.p, self.c.iter().map(|v| mul_mod(*v, inv, self.p)).collect())
            }
        }
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let c = self.c.iter().enumerate().skip(1).map(|(i, v)| mul_mod(*v, i as u64 % self.p, self.p)).collect();
        Self::new(self.p, c)
    }

    fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let mut acc = Self::new(self.p, alloc::vec![1]).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in `F_p`, sorted. Panics on the zero polynomial.
    pub fn roots<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let p = self.p;
        let f = self.monic();
        if f.degree() == Some(0) {
            return Vec::new();
        }
        let x = Self::new(p, alloc::vec![0, 1]);
        // Product of the distinct linear factors: gcd(f, x^p - x).
        let g = f.gcd(&x.powmod(p, &f).sub(&x));
        let mut out = Vec::new();
        split(&g, rng, &mut out);
        out.sort_unstable();
        out
    }
}

/// Equal-degree splitting of a squarefree product of distinct linear factors.
fn split<R: Rng + ?Sized>(g: &UniFp, rng: &mut R, out: &mut Vec<u64>) {
    let p = g.p;
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(sub_mod(0, g.monic().c[0], p)),
        Some(_) if p == 2 => {
            for r in 0..2 {
                if g.eval(r) == 0 {
                    out.push(r);
                }
            }
        }
        Some(d) => loop {
            let a = rng.gen_range(0..p);
            let t = UniFp::new(p, alloc::vec![a, 1]);
            let h = t.powmod((p - 1) / 2, g).sub(&UniFp::new(p, alloc::vec![1]));
            let f = g.gcd(&h);
            if let Some(k) = f.degree() {
                if k > 0 && k < d {
                    let (q, _) = g.div_rem(&f);
                    split(&f, rng, out);
                    split(&q, rng, out);
                    return;
                }
            }
        },
    }
}
