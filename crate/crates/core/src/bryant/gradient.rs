use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::psi::HomaloidalCandidate;
use crate::exactalg::{eliminate_resultant_ff, is_prime, FFPoly};
use crate::{Error, Result};

/// Fiber sizes of `x -> grad P(x)` over random targets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradientSample {
    pub prime: u64,
    /// One fiber size per trial.
    pub fibers: Vec<usize>,
    /// Most frequent fiber size; ties go to the smaller size.
    pub modal: usize,
}

impl GradientSample {
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for f in &self.fibers {
            *h.entry(*f).or_insert(0) += 1;
        }
        h
    }
}

/// Enumeration beyond this many projective points is refused.
pub const ENUMERATION_BUDGET: u64 = 5_000_000;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut q = 2;
    while q * q <= m {
        if m.is_multiple_of(q) {
            factors.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1)).unwrap_or(1)
}

/// Scales a nonzero vector so its first nonzero entry is 1.
fn normalize(v: &[u64], p: u64) -> Vec<u64> {
    let lead = v.iter().find(|&&a| a != 0).copied().expect("nonzero vector");
    let inv = inv_mod(lead, p);
    v.iter().map(|&a| ((a as u128 * inv as u128) % p as u128) as u64).collect()
}

/// All solutions in `F_p^active` of a system whose polynomials involve only
/// the first `active` variables. Fails if the solution set is infinite or the
/// elimination degenerates.
fn solve_affine<R: Rng>(eqs: Vec<FFPoly>, active: usize, rng: &mut R) -> Result<Vec<Vec<u64>>> {
    let eqs: Vec<FFPoly> = eqs.into_iter().filter(|e| !e.is_zero()).collect();
    let constant = |e: &FFPoly| e.terms().keys().all(|m| m.degree() == 0);
    if eqs.iter().any(constant) {
        return Ok(Vec::new());
    }
    if active == 0 {
        return Ok(alloc::vec![Vec::new()]);
    }
    let v = active - 1;
    let (with, without): (Vec<FFPoly>, Vec<FFPoly>) = eqs.into_iter().partition(|e| e.degree_in(v).unwrap_or(0) > 0);
    if with.is_empty() {
        let sub = solve_affine(without, v, rng)?;
        if sub.is_empty() {
            return Ok(sub);
        }
        return Err(Error::Unsupported("positive-dimensional fiber".into()));
    }
    let pivot = (0..with.len()).min_by_key(|&i| (with[i].degree_in(v), with[i].num_terms())).expect("nonempty");
    let mut reduced = without;
    for (i, e) in with.iter().enumerate() {
        if i != pivot {
            let r = eliminate_resultant_ff(&with[pivot], e, v)?;
            if r.is_zero() {
                return Err(Error::Unsupported("equations share a factor; elimination degenerates".into()));
            }
            reduced.push(r);
        }
    }
    let mut out = Vec::new();
    for s in solve_affine(reduced, v, rng)? {
        let mut g: Option<crate::exactalg::UniFp> = None;
        for e in &with {
            let mut u = e.clone();
            for (i, val) in s.iter().enumerate() {
                u = u.specialize(i, *val);
            }
            let u = u.to_univariate(v).expect("only the last variable remains");
            if !u.is_zero() {
                g = Some(match g {
                    None => u,
                    Some(h) => h.gcd(&u),
                });
            }
        }
        let Some(g) = g else {
            return Err(Error::Unsupported("positive-dimensional fiber".into()));
        };
        for r in g.roots(rng) {
            let mut sol = s.clone();
            sol.push(r);
            out.push(sol);
        }
    }
    Ok(out)
}

fn reduce(c: &HomaloidalCandidate, prime: u64) -> Result<(FFPoly, Vec<FFPoly>)> {
    let p = c.p().reduce_mod_p(prime)?;
    let grad = (0..c.n()).map(|i| p.differentiate_index(i)).collect();
    Ok((p, grad))
}

/// Projective `x` over `F_p` with `grad P(x)` a nonzero multiple of `y` and
/// `P(x) != 0`, found by solving `grad P(x) = c y` for `c` running over
/// representatives of `F_p^* / (F_p^*)^(d-1)` and collecting the lines.
pub fn gradient_fiber(c: &HomaloidalCandidate, y: &[u64], prime: u64, seed: u64) -> Result<usize> {
    let (p, grad) = reduce(c, prime)?;
    let e = gcd(u64::from(c.degree()) - 1, prime - 1).max(1);
    let g = primitive_root(prime);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = alloc::collections::BTreeSet::new();
    for j in 0..e {
        let scale = pow_mod(g, j, prime);
        let eqs: Vec<FFPoly> = grad
            .iter()
            .zip(y)
            .map(|(gi, yi)| {
                let t = ((scale as u128 * *yi as u128) % prime as u128) as u64;
                gi.sub(&FFPoly::constant(p.vars(), prime, t))
            })
            .collect();
        for sol in solve_affine(eqs, c.n(), &mut rng)? {
            if p.evaluate(&sol) != 0 {
                lines.insert(normalize(&sol, prime));
            }
        }
    }
    Ok(lines.len())
}

/// The same count by running over every point of `P^{n-1}(F_p)`.
pub fn gradient_fiber_enumerated(c: &HomaloidalCandidate, y: &[u64], prime: u64) -> Result<usize> {
    let n = c.n() as u32;
    let total = (0..n).map(|k| prime.checked_pow(k).unwrap_or(u64::MAX)).fold(0u64, u64::saturating_add);
    if total > ENUMERATION_BUDGET {
        return Err(Error::Budget(alloc::format!("{total} points exceed the enumeration budget")));
    }
    let (p, grad) = reduce(c, prime)?;
    let n = n as usize;
    let mut count = 0;
    // Points with first nonzero coordinate 1 at position `lead`.
    for lead in 0..n {
        let free = n - lead - 1;
        let mut digits = alloc::vec![0u64; free];
        loop {
            let mut x = alloc::vec![0u64; n];
            x[lead] = 1;
            x[lead + 1..].copy_from_slice(&digits);
            let gx: Vec<u64> = grad.iter().map(|g| g.evaluate(&x)).collect();
            let parallel = gx.iter().any(|&a| a != 0)
                && (0..n).all(|i| {
                    (i + 1..n).all(|j| {
                        (gx[i] as u128 * y[j] as u128 % prime as u128) == (gx[j] as u128 * y[i] as u128 % prime as u128)
                    })
                });
            if parallel && p.evaluate(&x) != 0 {
                count += 1;
            }
            let mut k = 0;
            while k < free {
                digits[k] += 1;
                if digits[k] < prime {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == free {
                break;
            }
        }
    }
    Ok(count)
}

/// Fiber sizes of the gradient map at `grad P(x)` for random `x` with
/// `P(x) != 0`. Small fields are enumerated; larger ones use elimination,
/// which handles up to four variables.
pub fn gradient_degree_sample(c: &HomaloidalCandidate, prime: u64, trials: usize, seed: u64) -> Result<GradientSample> {
    if !is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    if prime <= u64::from(c.degree()) {
        return Err(Error::Invalid(alloc::format!("prime {prime} must exceed the degree {}", c.degree())));
    }
    let n = c.n();
    let small = (n as u32) <= 3 && prime.checked_pow(n as u32 - 1).is_some_and(|t| t <= ENUMERATION_BUDGET / 4);
    if !small && n > 4 {
        return Err(Error::Unsupported(alloc::format!("elimination supports at most 4 variables, got {n}")));
    }
    let (p, grad) = reduce(c, prime)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fibers = Vec::with_capacity(trials);
    let mut attempts = 0;
    while fibers.len() < trials {
        attempts += 1;
        if attempts > 20 * trials + 100 {
            return Err(Error::Budget("could not find sample points off P = 0".into()));
        }
        let x: Vec<u64> = (0..n).map(|_| rng.gen_range(0..prime)).collect();
        if p.evaluate(&x) == 0 {
            continue;
        }
        let y: Vec<u64> = grad.iter().map(|g| g.evaluate(&x)).collect();
        let size =
            if small { gradient_fiber_enumerated(c, &y, prime)? } else { gradient_fiber(c, &y, prime, rng.gen())? };
        fibers.push(size);
    }
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for f in &fibers {
        *hist.entry(*f).or_insert(0) += 1;
    }
    let modal = hist.iter().max_by_key(|(k, v)| (**v, core::cmp::Reverse(**k))).map(|(k, _)| *k).unwrap_or(0);
    Ok(GradientSample { prime, fibers, modal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_poly, var_names};

    fn cand(s: &str, n: usize) -> HomaloidalCandidate {
        HomaloidalCandidate::new(parse_poly(s, &var_names("x", 1, n)).unwrap()).unwrap()
    }

    #[test]
    fn elimination_matches_enumeration() {
        let p = 101;
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for s in ["x1*x2*x3", "x1^3 + x2^3 + x3^3", "x1^2*x2", "x1^3 + x1*x2*x3 + x3^3", "x1^4 + x2^4 - x1*x2*x3^2"] {
            let n = if s.contains("x3") { 3 } else { 2 };
            let c = cand(s, n);
            let (pf, grad) = reduce(&c, p).unwrap();
            for _ in 0..4 {
                let x: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
                if pf.evaluate(&x) == 0 {
                    continue;
                }
                let y: Vec<u64> = grad.iter().map(|g| g.evaluate(&x)).collect();
                assert_eq!(
                    gradient_fiber(&c, &y, p, 0).unwrap(),
                    gradient_fiber_enumerated(&c, &y, p).unwrap(),
                    "{s} at {x:?}"
                );
            }
        }
    }

    #[test]
    fn homaloidal_catalog() {
        let big = 1_000_003;
        assert_eq!(gradient_degree_sample(&cand("x1*x2*x3", 3), big, 10, 0).unwrap().modal, 1);
        assert_eq!(gradient_degree_sample(&cand("x1^3 + x2^3 + x3^3", 3), big, 10, 0).unwrap().modal, 4);
        assert_eq!(gradient_degree_sample(&cand("x1^2*x2", 2), big, 10, 0).unwrap().modal, 1);
    }

    #[test]
    fn enumeration_budget() {
        let c = cand("x1*x2*x3", 3);
        assert!(matches!(gradient_fiber_enumerated(&c, &[1, 1, 1], 1_000_003), Err(Error::Budget(_))));
    }
}
