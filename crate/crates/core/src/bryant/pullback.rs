use alloc::string::String;
use alloc::vec::Vec;

use super::phi::phi_polys;
use crate::exactalg::{var_names, MultiPoly, Rational};
use crate::{Error, Result};

/// A polynomial 1-form on `C^{n+1} x C^{n+1}`: coefficient `k` multiplies
/// `dx_k` for `k <= n` and `dy^{k-n-1}` above.
pub type OneForm = Vec<MultiPoly>;

/// Outcome of reducing `phi^* theta - c x_0 y^n theta'` modulo incidence.
#[derive(Clone, Debug, PartialEq)]
pub struct PullbackReport {
    pub n: usize,
    /// Nonzero reduced coefficients on the chart `x_0 != 0`, as (differential, coefficient).
    pub residual_x0: Vec<(String, MultiPoly)>,
    /// The same on the chart `y^n != 0`.
    pub residual_yn: Vec<(String, MultiPoly)>,
}

impl PullbackReport {
    pub fn is_zero(&self) -> bool {
        self.residual_x0.is_empty() && self.residual_yn.is_empty()
    }
}

fn differential(f: &MultiPoly) -> OneForm {
    f.gradient()
}

fn form_add(a: &mut OneForm, b: &OneForm, coeff: &MultiPoly) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = x.add(&y.mul(coeff));
        }
    }
}

/// `sum_i z_i dw_i - w_i dz_i` pulled back along `phi`.
fn pullback_theta(x: &[MultiPoly], y: &[MultiPoly]) -> OneForm {
    let vars = x[0].vars().to_vec();
    let img = phi_polys(x, y);
    let n = img.len() / 2;
    let mut form = alloc::vec![MultiPoly::zero(&vars); vars.len()];
    for i in 0..n {
        let (w, z) = (&img[i], &img[n + i]);
        form_add(&mut form, &differential(w), z);
        form_add(&mut form, &differential(z), &w.neg());
    }
    form
}

/// `theta' = sum_i x_i dy^i - y^i dx_i`, which is `2 x dy` modulo the
/// differential of the incidence relation.
fn theta_prime(x: &[MultiPoly], y: &[MultiPoly]) -> OneForm {
    let n1 = x.len();
    let mut form = alloc::vec![MultiPoly::zero(x[0].vars()); 2 * n1];
    for i in 0..n1 {
        form[i] = y[i].neg();
        form[n1 + i] = x[i].clone();
    }
    form
}

/// Restricts a form to `{g = 0}` where `g = c s + r`, `c` and `s` variables
/// and `r` free of `s`, on the chart `c != 0`. Substitutes `s = -r/c`,
/// `ds = -(c dr - r dc)/c^2` and clears the denominator `c^(K+2)`. The
/// result has a zero entry at `s`.
fn restrict(form: &OneForm, s: usize, c: usize, g: &MultiPoly) -> OneForm {
    let vars = g.vars().to_vec();
    let name = &vars[s];
    let cvar = MultiPoly::gens(&vars)[c].clone();
    let r = g.sub(
        &g.coefficients_in(name)
            .get(1)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(&vars))
            .mul(&MultiPoly::gens(&vars)[s]),
    );
    let kmax = form.iter().filter_map(|a| a.degree_in(name)).max().unwrap_or(0);
    // c^K a(s = -r/c)
    let clear = |a: &MultiPoly| -> MultiPoly {
        let mut acc = MultiPoly::zero(&vars);
        for (k, ak) in a.coefficients_in(name).iter().enumerate() {
            if ak.is_zero() {
                continue;
            }
            let term = ak.mul(&r.neg().pow_u(k as u32)).mul(&cvar.pow_u(kmax - k as u32));
            acc = acc.add(&term);
        }
        acc
    };
    let b = clear(&form[s]);
    let c2 = cvar.pow_u(2);
    let dr = r.gradient();
    let mut out = Vec::with_capacity(form.len());
    for (j, a) in form.iter().enumerate() {
        if j == s {
            out.push(MultiPoly::zero(&vars));
            continue;
        }
        let mut t = clear(a).mul(&c2);
        let mut ds = cvar.mul(&dr[j]);
        if j == c {
            ds = ds.sub(&r);
        }
        t = t.sub(&b.mul(&ds));
        out.push(t);
    }
    out
}

fn names(n: usize) -> Vec<String> {
    let mut v = var_names("x", 0, n + 1);
    v.extend(var_names("y", 0, n + 1));
    v
}

fn nonzero_entries(form: &OneForm, vars: &[String]) -> Vec<(String, MultiPoly)> {
    form.iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| (alloc::format!("d{}", vars[k]), a.clone()))
        .collect()
}

/// Computes `phi^* theta - factor * x_0 y^n theta'` as a 1-form on
/// `C^{n+1} x C^{n+1}` and reduces it modulo `sum x_i y^i` and its
/// differential on the charts `x_0 != 0` (eliminating `y^0`) and
/// `y^n != 0` (eliminating `x_n`). With `factor = 1` both reductions are
/// identically zero.
pub fn contact_pullback_check(n: usize, factor: &Rational) -> Result<PullbackReport> {
    if n < 2 {
        return Err(Error::Dimension(alloc::format!("need n >= 2, got {n}")));
    }
    let vars = names(n);
    let gens = MultiPoly::gens(&vars);
    let (x, y) = gens.split_at(n + 1);
    let mut form = pullback_theta(x, y);
    let weight = x[0].mul(&y[n]).scale(&-factor.clone());
    form_add(&mut form, &theta_prime(x, y), &weight);
    let g = x.iter().zip(y).fold(MultiPoly::zero(&vars), |acc, (a, b)| acc.add(&a.mul(b)));
    let on_x0 = restrict(&form, n + 1, 0, &g);
    let on_yn = restrict(&form, n, 2 * n + 1, &g);
    Ok(PullbackReport { n, residual_x0: nonzero_entries(&on_x0, &vars), residual_yn: nonzero_entries(&on_yn, &vars) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use num_traits::One;

    #[test]
    fn identity_holds_for_small_n() {
        for n in 2..=3 {
            let r = contact_pullback_check(n, &Rational::one()).unwrap();
            assert!(r.is_zero(), "n={n}: {:?}", r.residual_x0);
        }
    }

    #[test]
    fn perturbed_factor_leaves_residual() {
        let r = contact_pullback_check(2, &int(2)).unwrap();
        assert!(!r.residual_x0.is_empty() && !r.residual_yn.is_empty());
    }

    #[test]
    fn restriction_kills_the_incidence_differential() {
        // d(g) itself restricts to zero.
        let vars = names(2);
        let gens = MultiPoly::gens(&vars);
        let g = (0..3).fold(MultiPoly::zero(&vars), |acc, i| acc.add(&gens[i].mul(&gens[3 + i])));
        let dg = g.gradient();
        assert!(restrict(&dg, 3, 0, &g).iter().all(MultiPoly::is_zero));
        assert!(restrict(&dg, 2, 5, &g).iter().all(MultiPoly::is_zero));
    }
}
