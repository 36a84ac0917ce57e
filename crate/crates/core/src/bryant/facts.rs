//! The local facts about `phi` used to control the smoothness of
//! `phi(Z^#)`, each as a predicate that can be run.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::conormal::{bryant_transform, HypersurfaceData};
use super::phi::{phi_forward, phi_inverse, phi_polys, projectively_equal, FlagPoint, PhiImage};
use crate::exactalg::{linalg, random_nonzero_rational, random_vector, var_names, MultiPoly, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

/// A random flag with prescribed zero coordinates `x_0` and/or `y^n`.
fn random_flag(n: usize, x0_zero: bool, yn_zero: bool, rng: &mut ChaCha8Rng) -> FlagPoint {
    loop {
        let mut x = random_vector(rng, n + 1, 9);
        let mut y = random_vector(rng, n + 1, 9);
        if x0_zero {
            x[0] = Rational::zero();
        }
        if yn_zero {
            y[n] = Rational::zero();
        }
        // Solve the incidence for a coordinate not forced to zero.
        let k = (0..=n).find(|&k| !x[k].is_zero() && !(yn_zero && k == n)).unwrap_or(1);
        if x[k].is_zero() {
            continue;
        }
        let rest: Rational = (0..=n).filter(|&i| i != k).map(|i| &x[i] * &y[i]).sum();
        y[k] = -rest / &x[k];
        // Off the forced strata, stay off E1 and E2.
        if (!x0_zero && x[0].is_zero()) || (!yn_zero && y[n].is_zero()) {
            continue;
        }
        if let Ok(p) = FlagPoint::new(x, y) {
            return p;
        }
    }
}

/// `phi` is undefined exactly on `x_0 = y^n = 0`, and inverts `phi^{-1}`
/// off the exceptional divisor.
pub fn fact_indeterminacy(n: usize, samples: usize, seed: u64) -> Result<FactCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut holds = true;
    for _ in 0..samples {
        holds &= phi_forward(&random_flag(n, true, true, &mut rng))? == PhiImage::Indeterminate;
        for (a, b) in [(true, false), (false, true), (false, false)] {
            let p = random_flag(n, a, b, &mut rng);
            let img = phi_forward(&p)?;
            holds &= img != PhiImage::Indeterminate;
            if !p.in_exceptional() {
                let back = phi_inverse(img.point().expect("defined"))?;
                holds &= projectively_equal(back.x(), p.x()) && projectively_equal(back.y(), p.y());
            }
        }
    }
    Ok(FactCheck {
        name: "Ind(phi) = E1 ∩ E2",
        holds,
        detail: alloc::format!("{samples} samples per stratum, n = {n}"),
    })
}

/// On `E1 = {x_0 = 0}` the image depends only on the point, on
/// `E2 = {y^n = 0}` only on the hyperplane.
pub fn fact_exceptional_images(n: usize, samples: usize, seed: u64) -> Result<FactCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut holds = true;
    for _ in 0..samples {
        // Two hyperplanes through one point of E1.
        let p = random_flag(n, true, false, &mut rng);
        let mut y2 = random_vector(&mut rng, n + 1, 9);
        let k = (1..=n).find(|&k| !p.x()[k].is_zero()).expect("x nonzero");
        let rest: Rational = (0..=n).filter(|&i| i != k).map(|i| &p.x()[i] * &y2[i]).sum();
        y2[k] = -rest / &p.x()[k];
        if y2[n].is_zero() || y2.iter().all(Zero::is_zero) {
            continue;
        }
        let q = FlagPoint::new(p.x().to_vec(), y2)?;
        let (a, b) = (phi_forward(&p)?, phi_forward(&q)?);
        holds &= matches!((a.point(), b.point()), (Some(u), Some(v)) if projectively_equal(u, v));
        // Two points on one hyperplane of E2.
        let h = random_flag(n, false, true, &mut rng);
        let mut x2 = random_vector(&mut rng, n + 1, 9);
        let k = (0..n).find(|&k| !h.y()[k].is_zero()).expect("y nonzero");
        let rest: Rational = (0..=n).filter(|&i| i != k).map(|i| &x2[i] * &h.y()[i]).sum();
        x2[k] = -rest / &h.y()[k];
        if x2[0].is_zero() {
            continue;
        }
        let q = FlagPoint::new(x2, h.y().to_vec())?;
        let (a, b) = (phi_forward(&h)?, phi_forward(&q)?);
        holds &= matches!((a.point(), b.point()), (Some(u), Some(v)) if projectively_equal(u, v));
    }
    Ok(FactCheck {
        name: "phi contracts E1 onto points and E2 onto hyperplanes",
        holds,
        detail: alloc::format!("{samples} samples, n = {n}"),
    })
}

/// At a smooth point of `Z ∩ H0` whose tangent hyperplane misses `p0`, the
/// composite chart is immersive. `Z` must be linear in a variable other
/// than `x_0`, in standard position, so that the chart reaches `x_0 = 0`.
pub fn fact_immersion_on_e1(z: &HypersurfaceData, samples: usize, seed: u64) -> Result<FactCheck> {
    let chart = bryant_transform(z, None, seed)?;
    let m = chart.param_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // The chart uses x_0 as its first parameter when x_0 is neither solved
    // for nor set to 1; t_1 = 0 then lands on H0.
    let mut tested = 0;
    let mut holds = true;
    for _ in 0..samples * 4 {
        if tested == samples {
            break;
        }
        let mut t = random_vector(&mut rng, m, 9);
        t[0] = Rational::zero();
        let pt = chart.evaluate(&t)?;
        if pt.iter().all(Zero::is_zero) {
            continue;
        }
        // The tangent hyperplane misses p0 iff y^n != 0 on the flag.
        let (x, y) = flag_at(z, &t)?;
        if !x[0].is_zero() || y[z.ambient()].is_zero() || y.iter().all(Zero::is_zero) {
            continue;
        }
        tested += 1;
        holds &= chart.rank_at(&t)? == m + 1;
    }
    if tested == 0 {
        return Err(Error::Invalid("no sample on H0 with tangent hyperplane missing p0".into()));
    }
    Ok(FactCheck {
        name: "phi(Z^#) immersed along E1 off E2",
        holds,
        detail: alloc::format!("{tested} points of Z ∩ H0"),
    })
}

fn flag_at(z: &HypersurfaceData, t: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let c = super::conormal::conormal_chart(z, None, 0)?;
    let v = c.evaluate(t)?;
    let n1 = z.ambient() + 1;
    Ok((v[..n1].to_vec(), v[n1..].to_vec()))
}

/// The local coordinates `p = [x0, x_1..x_{n-1}, 1]`,
/// `H = [1, z_1..z_{n-1}, -x0 - (x, z)]` satisfy the incidence identically,
/// `E1 = {x0 = 0}`, and on `E1` the indeterminacy locus is the quadric cone
/// `(x, z) = 0` with a nondegenerate Hessian, so its only singular point is
/// the origin.
pub fn fact_local_model(n: usize) -> Result<FactCheck> {
    if n < 2 {
        return Err(Error::Dimension("need n >= 2".into()));
    }
    let mut vars = alloc::vec![String::from("x0")];
    vars.extend(var_names("x", 1, n - 1));
    vars.extend(var_names("z", 1, n - 1));
    let g = MultiPoly::gens(&vars);
    let pairing = (1..n).fold(MultiPoly::zero(&vars), |acc, i| acc.add(&g[i].mul(&g[n - 1 + i])));
    let mut p = g[..n].to_vec();
    p.push(MultiPoly::one(&vars));
    let mut h = alloc::vec![MultiPoly::one(&vars)];
    h.extend(g[n..].iter().cloned());
    h.push(g[0].neg().sub(&pairing));
    let inc = p.iter().zip(&h).fold(MultiPoly::zero(&vars), |acc, (a, b)| acc.add(&a.mul(b)));
    let mut at = BTreeMap::new();
    at.insert(String::from("x0"), Rational::zero());
    let ind = h[n].partial_evaluate(&at);
    let quad_vars: Vec<usize> = (1..vars.len()).collect();
    let hess: Vec<Vec<Rational>> = quad_vars
        .iter()
        .map(|&i| {
            quad_vars.iter().map(|&j| ind.differentiate_index(i, 1).differentiate_index(j, 1).constant_term()).collect()
        })
        .collect();
    let rank = linalg::rank(&hess);
    let holds = inc.is_zero() && ind == pairing.neg() && rank == 2 * (n - 1);
    Ok(FactCheck {
        name: "Ind(phi) is a quadric cone in E1",
        holds,
        detail: alloc::format!("Hessian rank {rank} of {}", 2 * (n - 1)),
    })
}

/// Along `x_0 = t y^n`, `x_1 = 1`, `y^{n-1} = 1` (with `y^1` solved from the
/// incidence) every component of `phi` is divisible by `y^n`, and the
/// quotient has the constant component `z_1 = 1`: `phi` extends across the
/// blow-up of the indeterminacy locus.
pub fn fact_blowup_chart(n: usize) -> Result<FactCheck> {
    if n < 3 {
        return Err(Error::Dimension("the chart needs n >= 3".into()));
    }
    let mut vars = alloc::vec![String::from("t"), String::from("u")];
    vars.extend(var_names("x", 2, n - 1));
    vars.push(String::from("y0"));
    vars.extend(var_names("y", 2, n - 3));
    let g = MultiPoly::gens(&vars);
    let (t, u) = (&g[0], &g[1]);
    let one = MultiPoly::one(&vars);
    let mut x = alloc::vec![t.mul(u), one.clone()];
    x.extend(g[2..n + 1].iter().cloned());
    // y = [y0, y1, y2..y_{n-2}, 1, u]
    let y0 = g[n + 1].clone();
    let mid: Vec<MultiPoly> = g[n + 2..].to_vec();
    let mut y = alloc::vec![y0, MultiPoly::zero(&vars)];
    y.extend(mid);
    y.push(one.clone());
    y.push(u.clone());
    let rest = (0..=n).filter(|&i| i != 1).fold(MultiPoly::zero(&vars), |acc, i| acc.add(&x[i].mul(&y[i])));
    y[1] = rest.neg();
    let inc = x.iter().zip(&y).fold(MultiPoly::zero(&vars), |acc, (a, b)| acc.add(&a.mul(b)));
    let comps = phi_polys(&x, &y);
    let quotients: Result<Vec<MultiPoly>> = comps.iter().map(|c| c.exact_div(u)).collect();
    let (holds, detail) = match quotients {
        Ok(q) => {
            let unit = q.contains(&one);
            (inc.is_zero() && unit, alloc::format!("phi / y^n has {} components, one of them 1", q.len()))
        }
        Err(_) => (false, String::from("a component is not divisible by y^n")),
    };
    Ok(FactCheck { name: "phi extends over the blow-up of Ind(phi)", holds, detail })
}

/// Random nonzero scalar multiples leave `phi` projectively unchanged.
pub fn fact_bihomogeneity(n: usize, seed: u64) -> Result<FactCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_flag(n, false, false, &mut rng);
    let (a, b) = (random_nonzero_rational(&mut rng, 9, 5), random_nonzero_rational(&mut rng, 9, 5));
    let q = FlagPoint::new(p.x().iter().map(|v| v * &a).collect(), p.y().iter().map(|v| v * &b).collect())?;
    let holds = match (phi_forward(&p)?, phi_forward(&q)?) {
        (PhiImage::Point(u), PhiImage::Point(v)) => projectively_equal(&u, &v),
        _ => false,
    };
    Ok(FactCheck { name: "phi is well defined on the flag variety", holds, detail: String::from("bidegree (1, 1)") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    #[test]
    fn facts_hold() {
        for n in 2..=4 {
            assert!(fact_indeterminacy(n, 5, n as u64).unwrap().holds);
            assert!(fact_exceptional_images(n, 5, n as u64).unwrap().holds);
            assert!(fact_local_model(n).unwrap().holds);
            assert!(fact_bihomogeneity(n, 1).unwrap().holds);
        }
        for n in 3..=5 {
            assert!(fact_blowup_chart(n).unwrap().holds, "n={n}");
        }
    }

    #[test]
    fn immersion_along_e1() {
        let z = HypersurfaceData::standard(
            parse_poly("x3*x0^2 + x3*x1*x2 - x1^3 + 2*x2^3 - x0*x1*x2", &var_names("x", 0, 4)).unwrap(),
        )
        .unwrap();
        let f = fact_immersion_on_e1(&z, 5, 0).unwrap();
        assert!(f.holds, "{}", f.detail);
    }
}
