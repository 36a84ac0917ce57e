use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::phi::phi_polys;
use crate::contact::{omega_pairing, ChartMap, SymplecticForm};
use crate::exactalg::{linalg, random_vector, var_names, MultiPoly, Rational};
use crate::{Error, Result};

/// A hypersurface `Z = {F = 0}` in `P^N` with the distinguished point `p0`
/// and hyperplane `H0 = {h0 . x = 0}` that position it relative to the
/// exceptional locus of `phi`. `nodes` lists known singular points.
#[derive(Clone, Debug, PartialEq)]
pub struct HypersurfaceData {
    f: MultiPoly,
    p0: Vec<Rational>,
    h0: Vec<Rational>,
    nodes: Vec<Vec<Rational>>,
}

impl HypersurfaceData {
    pub fn new(f: MultiPoly, p0: Vec<Rational>, h0: Vec<Rational>) -> Result<Self> {
        let len = f.vars().len();
        if len < 3 {
            return Err(Error::Dimension(alloc::format!("need at least 3 homogeneous variables, got {len}")));
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        match f.homogeneous_degree() {
            Some(d) if d >= 1 => {}
            Some(_) => return Err(Error::Invalid("F is constant".into())),
            None => return Err(Error::Invalid(alloc::format!("F = {f} is not homogeneous"))),
        }
        for (name, v) in [("p0", &p0), ("H0", &h0)] {
            if v.len() != len {
                return Err(Error::Dimension(alloc::format!("{name} has {} entries, expected {len}", v.len())));
            }
            if v.iter().all(Zero::is_zero) {
                return Err(Error::Invalid(alloc::format!("{name} is the zero vector")));
            }
        }
        Ok(HypersurfaceData { f, p0, h0, nodes: Vec::new() })
    }

    /// The standard position: `H0 = {x_0 = 0}` and `p0 = e_N`.
    pub fn standard(f: MultiPoly) -> Result<Self> {
        let len = f.vars().len();
        let mut p0 = alloc::vec![Rational::zero(); len];
        let mut h0 = p0.clone();
        p0[len - 1] = Rational::one();
        h0[0] = Rational::one();
        Self::new(f, p0, h0)
    }

    pub fn with_nodes(mut self, nodes: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(bad) = nodes.iter().find(|v| v.len() != self.f.vars().len()) {
            return Err(Error::Dimension(alloc::format!("node has {} entries", bad.len())));
        }
        self.nodes = nodes;
        Ok(self)
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    pub fn p0(&self) -> &[Rational] {
        &self.p0
    }

    pub fn h0(&self) -> &[Rational] {
        &self.h0
    }

    pub fn nodes(&self) -> &[Vec<Rational>] {
        &self.nodes
    }

    /// `N`, the dimension of the ambient projective space.
    pub fn ambient(&self) -> usize {
        self.f.vars().len() - 1
    }

    pub fn degree(&self) -> u32 {
        self.f.homogeneous_degree().expect("checked homogeneous")
    }

    pub fn p0_on_h0(&self) -> bool {
        linalg::dot(&self.p0, &self.h0).is_zero()
    }

    /// Basis `[b_0, .., b_{N-1}, p0]` (as columns) with `b_1..b_{N-1}, p0`
    /// spanning `H0` and `h0 . b_0 = 1`. In the coordinates `x = B x'` the
    /// hyperplane `H0` is `x'_0 = 0` and `p0` is `e_N`.
    pub fn frame(&self) -> Result<linalg::Matrix> {
        if !self.p0_on_h0() {
            return Err(Error::Invalid("p0 must lie on H0".into()));
        }
        let len = self.p0.len();
        let mut cols: Vec<Vec<Rational>> = alloc::vec![self.p0.clone()];
        for v in linalg::nullspace(core::slice::from_ref(&self.h0), len) {
            let mut trial = cols.clone();
            trial.push(v.clone());
            if linalg::rank(&trial) == trial.len() {
                cols = trial;
            }
            if cols.len() == len - 1 {
                break;
            }
        }
        let j = self.h0.iter().position(|c| !c.is_zero()).expect("nonzero H0");
        let mut b0 = alloc::vec![Rational::zero(); len];
        b0[j] = self.h0[j].recip();
        let mut ordered = alloc::vec![b0];
        ordered.extend(cols[1..].iter().cloned());
        ordered.push(self.p0.clone());
        Ok(linalg::transpose(&ordered))
    }
}

/// Which variable the chart solves for and which one it sets to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatchChoice {
    pub solve: usize,
    pub dehomogenize: usize,
}

fn choose_patch(f: &MultiPoly) -> Result<PatchChoice> {
    let vars = f.vars();
    let solve = (0..vars.len())
        .find(|&k| f.degree_in(&vars[k]) == Some(1))
        .ok_or_else(|| Error::Unsupported("no variable occurs linearly; use the implicit check".into()))?;
    let dehomogenize = (0..vars.len()).rev().find(|&j| j != solve).expect("at least three variables");
    Ok(PatchChoice { solve, dehomogenize })
}

/// `(x(t), y(t))` for a hypersurface linear in `x_k`: writing
/// `F = a x_k + b`, the point is `a x'` off slot `k` and `-b` in slot `k`,
/// and `y = grad F` there. Incidence is Euler's relation.
fn conormal_components(f: &MultiPoly, patch: PatchChoice) -> Result<(Vec<String>, Vec<MultiPoly>, Vec<MultiPoly>)> {
    let vars = f.vars().to_vec();
    let len = vars.len();
    let PatchChoice { solve: k, dehomogenize: j } = patch;
    if k >= len || j >= len || j == k {
        return Err(Error::Invalid(alloc::format!("bad patch choice {patch:?}")));
    }
    if f.degree_in(&vars[k]) != Some(1) {
        return Err(Error::Unsupported(alloc::format!("F is not linear in {}", vars[k])));
    }
    let params = var_names("t", 1, len - 2);
    let ts = MultiPoly::gens(&params);
    let mut images = Vec::with_capacity(len);
    let mut next = 0;
    for i in 0..len {
        if i == j {
            images.push(MultiPoly::one(&params));
        } else if i == k {
            images.push(MultiPoly::zero(&params));
        } else {
            images.push(ts[next].clone());
            next += 1;
        }
    }
    let cs = f.coefficients_in(&vars[k]);
    let a = cs[1].compose(&images, &params);
    let b = cs[0].compose(&images, &params);
    let x: Vec<MultiPoly> = (0..len).map(|i| if i == k { b.neg() } else { a.mul(&images[i]) }).collect();
    let y: Vec<MultiPoly> = f.gradient().iter().map(|g| g.compose(&x, &params)).collect();
    if y.iter().all(MultiPoly::is_zero) {
        return Err(Error::DegenerateChart("every partial of F vanishes on the patch".into()));
    }
    Ok((params, x, y))
}

fn pick_base<R: rand::Rng>(
    params: &[String],
    comps: &[MultiPoly],
    avoid: &[&MultiPoly],
    rng: &mut R,
) -> Result<Vec<Rational>> {
    for _ in 0..50 {
        let pt = random_vector(rng, params.len(), 20);
        let ok_avoid = avoid.iter().all(|g| !g.evaluate(&pt).map(|v| v.is_zero()).unwrap_or(true));
        let nonzero = comps.iter().any(|c| c.evaluate(&pt).is_ok_and(|v| !v.is_zero()));
        if ok_avoid && nonzero {
            return Ok(pt);
        }
    }
    Err(Error::DegenerateChart("no usable base point found".into()))
}

/// Chart of the conormal variety `Z^#` in the flag variety: components are
/// `[x_0..x_N, y^0..y^N]` in the parameters `t_1..t_{N-1}`.
pub fn conormal_chart(z: &HypersurfaceData, patch: Option<PatchChoice>, seed: u64) -> Result<ChartMap> {
    let patch = match patch {
        Some(p) => p,
        None => choose_patch(z.f())?,
    };
    let (params, x, y) = conormal_components(z.f(), patch)?;
    let mut comps = x;
    comps.extend(y);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = pick_base(&params, &comps, &[], &mut rng)?;
    ChartMap::new(&params, comps, base)
}

fn frame_flags(z: &HypersurfaceData, x: &[MultiPoly], y: &[MultiPoly]) -> Result<(Vec<MultiPoly>, Vec<MultiPoly>)> {
    let b = z.frame()?;
    let binv = linalg::inverse(&b).ok_or_else(|| Error::Invalid("frame is singular".into()))?;
    let bt = linalg::transpose(&b);
    let apply = |m: &linalg::Matrix, v: &[MultiPoly]| -> Vec<MultiPoly> {
        m.iter()
            .map(|row| {
                row.iter().zip(v).fold(MultiPoly::zero(v[0].vars()), |acc, (c, p)| {
                    if c.is_zero() {
                        acc
                    } else {
                        acc.add(&p.scale(c))
                    }
                })
            })
            .collect()
    };
    Ok((apply(&binv, x), apply(&bt, y)))
}

/// Chart of `phi(Z^#)` in `P^{2N-1}`, with `N - 1` parameters.
///
/// The flag is first moved so that `H0` becomes `x_0 = 0` and `p0` becomes
/// `e_N`; then `phi` is applied to the conormal lift. The result is
/// Legendrian for [`SymplecticForm::darboux`]`(N)`.
pub fn bryant_transform(z: &HypersurfaceData, patch: Option<PatchChoice>, seed: u64) -> Result<ChartMap> {
    let patch = match patch {
        Some(p) => p,
        None => choose_patch(z.f())?,
    };
    let (params, x, y) = conormal_components(z.f(), patch)?;
    let (xp, yp) = frame_flags(z, &x, &y)?;
    let n = z.ambient();
    if xp[0].is_zero() || yp[n].is_zero() {
        return Err(Error::InsideExceptional);
    }
    let comps = phi_polys(&xp, &yp);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = pick_base(&params, &comps, &[&xp[0], &yp[n]], &mut rng)?;
    ChartMap::new(&params, comps, base)
}

/// Result of the chart-free Legendrian check on `phi(Z^#)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ImplicitCheck {
    /// Number of pairings reduced modulo `F`.
    pub pairings: usize,
    /// Labels of pairings with a nonzero remainder.
    pub failures: Vec<String>,
}

impl ImplicitCheck {
    pub fn legendrian(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks isotropy of `Phi(x) = phi(x, grad F(x))` along `Z` without a
/// parametrization. The fields `V_ij = d_jF e_i - d_iF e_j` span the tangent
/// spaces of the cone over `Z`; every pairing `omega(Phi, dPhi(V))` and
/// `omega(dPhi(V), dPhi(W))` must be divisible by `F`.
pub fn bryant_transform_implicit(z: &HypersurfaceData) -> Result<ImplicitCheck> {
    let f = z.f();
    let vars = f.vars().to_vec();
    let len = vars.len();
    let grad = f.gradient();
    let gens = MultiPoly::gens(&vars);
    let (xp, yp) = frame_flags(z, &gens, &grad)?;
    let n = len - 1;
    if xp[0].is_zero() || yp[n].is_zero() || xp[0].mul(&yp[n]).divisible_by(f)? {
        return Err(Error::InsideExceptional);
    }
    let phi = phi_polys(&xp, &yp);
    let dphi: Vec<Vec<MultiPoly>> =
        (0..len).map(|m| phi.iter().map(|c| c.differentiate_index(m, 1)).collect()).collect();
    let mut fields = Vec::new();
    for i in 0..len {
        for j in i + 1..len {
            let v: Vec<MultiPoly> =
                phi.iter().enumerate().map(|(c, _)| dphi[i][c].mul(&grad[j]).sub(&dphi[j][c].mul(&grad[i]))).collect();
            fields.push((alloc::format!("V{i}{j}"), v));
        }
    }
    let form = SymplecticForm::darboux(n);
    let mut failures = Vec::new();
    let mut pairings = 0;
    let mut test = |label: String, a: &[MultiPoly], b: &[MultiPoly]| -> Result<()> {
        pairings += 1;
        let r = omega_pairing(form.matrix(), a, b);
        if !r.is_zero() && !r.divisible_by(f)? {
            failures.push(label);
        }
        Ok(())
    };
    for (name, v) in &fields {
        test(alloc::format!("<Phi, {name}>"), &phi, v)?;
    }
    for (a, (na, va)) in fields.iter().enumerate() {
        for (nb, vb) in &fields[a + 1..] {
            test(alloc::format!("<{na}, {nb}>"), va, vb)?;
        }
    }
    Ok(ImplicitCheck { pairings, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::is_legendrian;
    use crate::exactalg::{int, parse_poly};

    fn hyp(s: &str, n: usize) -> HypersurfaceData {
        HypersurfaceData::standard(parse_poly(s, &var_names("x", 0, n + 1)).unwrap()).unwrap()
    }

    #[test]
    fn frame_sends_h0_and_p0_to_standard_position() {
        let z = HypersurfaceData::new(
            parse_poly("x0*x3 - x1*x2", &var_names("x", 0, 4)).unwrap(),
            alloc::vec![int(1), int(2), int(0), int(-1)],
            alloc::vec![int(1), int(0), int(3), int(1)],
        )
        .unwrap();
        let b = z.frame().unwrap();
        let binv = linalg::inverse(&b).unwrap();
        assert_eq!(binv[0], z.h0().to_vec());
        let e3 = linalg::mat_vec(&binv, z.p0());
        assert_eq!(e3, alloc::vec![int(0), int(0), int(0), int(1)]);
    }

    #[test]
    fn quadric_lift_satisfies_incidence() {
        let z = hyp("x0*x3 - x1*x2", 3);
        let c = conormal_chart(&z, None, 0).unwrap();
        let (x, y) = c.components().split_at(4);
        let inc = x.iter().zip(y).fold(MultiPoly::zero(c.params()), |acc, (a, b)| acc.add(&a.mul(b)));
        assert!(inc.is_zero());
    }

    #[test]
    fn nodal_lift_drops_rank_at_node() {
        // Node at [0:0:1]; dehomogenizing x1 puts it at t1 = 0.
        let z = hyp("x2*x0^2 - x1^3 - x1^2*x0", 2);
        let c = conormal_chart(&z, Some(PatchChoice { solve: 2, dehomogenize: 1 }), 0).unwrap();
        assert_eq!(c.rank_at(&[int(0)]).unwrap(), 1);
        assert_eq!(c.rank_at(&[int(3)]).unwrap(), 2);
    }

    #[test]
    fn nodal_cubic_transform_is_legendrian() {
        let z = hyp("x2*x0^2 - x1^3 - x1^2*x0", 2);
        let chart = bryant_transform(&z, None, 0).unwrap();
        assert_eq!(chart.components().len(), 4);
        assert!(is_legendrian(&chart, &SymplecticForm::darboux(2)).unwrap().legendrian);
        assert!(bryant_transform_implicit(&z).unwrap().legendrian());
    }

    #[test]
    fn surface_transform_both_routes() {
        let z = hyp("x3*x0^2 + x3*x1*x2 - x1^3 + 2*x2^3 - x0*x1*x2", 3);
        let chart = bryant_transform(&z, None, 3).unwrap();
        assert!(is_legendrian(&chart, &SymplecticForm::darboux(3)).unwrap().legendrian);
        let imp = bryant_transform_implicit(&z).unwrap();
        assert!(imp.legendrian(), "{:?}", imp.failures);
    }

    #[test]
    fn wrong_form_is_caught() {
        let z = hyp("x3*x0^2 + x3*x1*x2 - x1^3 + 2*x2^3", 3);
        let chart = bryant_transform(&z, None, 0).unwrap();
        let r = is_legendrian(&chart, &SymplecticForm::graph_form(2, int(1)).unwrap()).unwrap();
        assert!(!r.legendrian);
    }

    #[test]
    fn patch_inside_exceptional_is_rejected() {
        // Z = H0 itself.
        let z = hyp("x0", 2);
        assert_eq!(bryant_transform(&z, None, 0), Err(Error::InsideExceptional));
    }
}
