use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::conormal::HypersurfaceData;
use crate::exactalg::{
    eliminate_resultant, format_rational, linalg, random_rational, univariate, var_names, FFPoly, MultiPoly, Rational,
};
use crate::{Error, Result};

/// Outcome of one condition in a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Checked on finitely many points only.
    Sampled,
    Unknown,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Sampled => "SAMPLED",
            Status::Unknown => "UNKNOWN",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status, detail: detail.into() }
    }
}

/// Points of `C = Z ∩ H0` whose tangent line passes through `p0`, as the
/// roots of a univariate polynomial in `s`. The point for the root `s` is
/// `b1 + s b2 + u p0` for the matching root `u` of the tangency equations.
#[derive(Clone, Debug, PartialEq)]
pub struct TangencyPolynomial {
    pub poly: MultiPoly,
    pub degree: usize,
    pub squarefree: bool,
    /// `[b1, b2, p0]`; `b1, b2` span `H0` modulo `p0`.
    pub frame: [Vec<Rational>; 3],
}

fn dot_poly(coeffs: &[Rational], polys: &[MultiPoly]) -> MultiPoly {
    coeffs.iter().zip(polys).fold(MultiPoly::zero(polys[0].vars()), |acc, (c, p)| acc.add(&p.scale(c)))
}

/// `F(s0 b1 + s1 b2 + s2 p0)` over the variables `s0, s1, s2`.
fn restrict_to_plane(f: &MultiPoly, frame: &[Vec<Rational>; 3]) -> MultiPoly {
    let s = var_names("s", 0, 3);
    let sg = MultiPoly::gens(&s);
    let len = f.vars().len();
    let images: Vec<MultiPoly> =
        (0..len).map(|i| dot_poly(&[frame[0][i].clone(), frame[1][i].clone(), frame[2][i].clone()], &sg)).collect();
    f.compose(&images, &s)
}

fn random_frame(z: &HypersurfaceData, rng: &mut ChaCha8Rng) -> Result<[Vec<Rational>; 3]> {
    let basis = linalg::nullspace(&[z.h0().to_vec()], z.p0().len());
    for _ in 0..20 {
        let mut pick = || -> Vec<Rational> {
            let mut v = alloc::vec![Rational::zero(); z.p0().len()];
            for b in &basis {
                let c = random_rational(rng, 9, 1);
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi += &c * bi;
                }
            }
            v
        };
        let (b1, b2) = (pick(), pick());
        if linalg::rank(&[b1.clone(), b2.clone(), z.p0().to_vec()]) == 3 {
            return Ok([b1, b2, z.p0().to_vec()]);
        }
    }
    Err(Error::Invalid("could not find a frame of H0".into()))
}

fn require_surface_setup(z: &HypersurfaceData) -> Result<()> {
    if z.ambient() != 3 {
        return Err(Error::Unsupported(alloc::format!(
            "plane sections are computed for surfaces in P^3, got P^{}",
            z.ambient()
        )));
    }
    if !z.p0_on_h0() {
        return Err(Error::Invalid("p0 must lie on H0".into()));
    }
    if z.f().evaluate(z.p0())?.is_zero() {
        return Err(Error::Invalid("p0 lies on Z".into()));
    }
    Ok(())
}

/// Coefficient list in `s1` of `G(1, s1, s2)` after eliminating `s2`
/// between `a` and `b` (both over `s0, s1, s2`).
fn eliminate_s2(a: &MultiPoly, b: &MultiPoly) -> Result<Vec<Rational>> {
    let one = |p: &MultiPoly| {
        let mut m = BTreeMap::new();
        m.insert(String::from("s0"), Rational::one());
        p.partial_evaluate(&m)
    };
    let r = eliminate_resultant(&one(a), &one(b), "s2")?;
    univariate::from_multi(&r, "s1")
}

/// The tangency polynomial for `C = Z ∩ H0` from `p0`: the resultant in
/// `s2` of `G` and `dG/ds2` on the chart `s0 = 1`. Its degree is
/// `d (d - 1)` when `C` is reduced and the frame is general.
pub fn indeterminacy_points(z: &HypersurfaceData, seed: u64) -> Result<TangencyPolynomial> {
    require_surface_setup(z)?;
    let d = z.degree() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for _ in 0..8 {
        let frame = random_frame(z, &mut rng)?;
        let g = restrict_to_plane(z.f(), &frame);
        let gs2 = g.differentiate("s2", 1);
        let r = eliminate_s2(&g, &gs2)?;
        if r.is_empty() {
            return Err(Error::Invalid("C is not reduced: the tangency resultant vanishes".into()));
        }
        let degree = univariate::degree(&r).unwrap_or(0);
        let s1 = var_names("s", 1, 1);
        let poly = MultiPoly::from_terms(&s1, r.iter().enumerate().map(|(k, c)| (alloc::vec![k as u32], c.clone())));
        let squarefree = univariate::is_squarefree(&r);
        let out = TangencyPolynomial { poly, degree, squarefree, frame };
        if degree == d * (d - 1) {
            return Ok(out);
        }
        // A root escaped to s0 = 0; try another frame.
        last = Some(out);
    }
    last.ok_or_else(|| Error::Invalid("no frame found".into()))
}

/// The quadratic coefficients of the local equation at an indeterminacy
/// point, in coordinates where the point is the origin, `x_0 = 0` is `H0`,
/// `x_2 = 0` is the tangent plane, `x_3` points to `p0`, and `f` is
/// normalized to `x_2 + q00 x_0^2 + 2 q03 x_0 x_3 + q33 x_3^2 + ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondForm {
    pub q00: Rational,
    pub q03: Rational,
    pub q33: Rational,
}

impl SecondForm {
    /// `q33 != 0`: the second fundamental form does not vanish on the line
    /// towards `p0`, so `Z^#` meets the indeterminacy locus transversally.
    pub fn pass(&self) -> bool {
        !self.q33.is_zero()
    }
}

/// Reads the form off a local equation `f(x0, x2, x3)` (variables in that
/// order) with `f(0) = 0`, `df/dx0 = df/dx3 = 0` and `df/dx2 != 0` at the
/// origin.
pub fn second_form_local(f: &MultiPoly) -> Result<SecondForm> {
    if f.vars().len() != 3 {
        return Err(Error::Dimension("the local equation takes (x0, x2, x3)".into()));
    }
    let origin = alloc::vec![Rational::zero(); 3];
    let at0 = |p: &MultiPoly| p.evaluate(&origin);
    if !at0(f)?.is_zero() {
        return Err(Error::Invalid("normalization impossible: f(0) != 0".into()));
    }
    let g = f.gradient();
    let c = at0(&g[1])?;
    if !at0(&g[0])?.is_zero() || !at0(&g[2])?.is_zero() || c.is_zero() {
        return Err(Error::Invalid("normalization impossible: gradient at 0 is not along x2".into()));
    }
    let two = Rational::from_integer(2.into());
    let h = |i: usize, j: usize| -> Result<Rational> { Ok(at0(&g[i].differentiate_index(j, 1))? / (&two * &c)) };
    Ok(SecondForm { q00: h(0, 0)?, q03: h(0, 2)?, q33: h(2, 2)? })
}

/// The local frame at `point`: `v0` in the tangent plane off `H0`, `v2` in
/// `H0` off the tangent plane, with `x = x0 v0 + point + x2 v2 + x3 p0`.
fn local_frame(z: &HypersurfaceData, point: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let bad = |why: &str| Error::Invalid(alloc::format!("normalization impossible: {why}"));
    if z.ambient() != 3 {
        return Err(bad("surfaces in P^3 only"));
    }
    if !z.p0_on_h0() {
        return Err(bad("p0 is not on H0"));
    }
    if point.len() != 4 || point.iter().all(Zero::is_zero) {
        return Err(bad("point must be a nonzero 4-vector"));
    }
    if !z.f().evaluate(point)?.is_zero() {
        return Err(bad("point is not on Z"));
    }
    if !linalg::dot(point, z.h0()).is_zero() {
        return Err(bad("point is not on H0"));
    }
    let grad: Vec<Rational> = z.f().gradient().iter().map(|g| g.evaluate(point)).collect::<Result<_>>()?;
    if grad.iter().all(Zero::is_zero) {
        return Err(bad("point is singular on Z"));
    }
    if !linalg::dot(&grad, z.p0()).is_zero() {
        return Err(bad("tangent plane misses p0"));
    }
    if linalg::rank(&[point.to_vec(), z.p0().to_vec()]) < 2 {
        return Err(bad("point coincides with p0"));
    }
    let v0 = linalg::nullspace(core::slice::from_ref(&grad), 4)
        .into_iter()
        .find(|v| !linalg::dot(v, z.h0()).is_zero())
        .ok_or_else(|| bad("tangent plane equals H0"))?;
    let v2 = linalg::nullspace(&[z.h0().to_vec()], 4)
        .into_iter()
        .find(|v| !linalg::dot(v, &grad).is_zero())
        .ok_or_else(|| bad("tangent plane equals H0"))?;
    Ok((v0, v2))
}

/// [`second_form_local`] at a point of `Z ∩ H0` whose tangent plane
/// contains `p0`, after moving it to the normal position.
pub fn second_form_witness(z: &HypersurfaceData, point: &[Rational]) -> Result<SecondForm> {
    let (v0, v2) = local_frame(z, point)?;
    let hess: Vec<Vec<Rational>> = z
        .f()
        .gradient()
        .iter()
        .map(|g| g.gradient().iter().map(|h| h.evaluate(point)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let grad: Vec<Rational> = z.f().gradient().iter().map(|g| g.evaluate(point)).collect::<Result<_>>()?;
    let c = linalg::dot(&grad, &v2);
    let two = Rational::from_integer(2.into());
    let q = |a: &[Rational], b: &[Rational]| linalg::bilinear(&hess, a, b) / (&two * &c);
    Ok(SecondForm { q00: q(&v0, &v0), q03: q(&v0, z.p0()), q33: q(z.p0(), z.p0()) })
}

/// The local equation `f(x0, x2, x3) = F(x0 v0 + point + x2 v2 + x3 p0)`
/// used by [`second_form_witness`]; exposed so the two routes can be
/// compared.
pub fn local_equation(z: &HypersurfaceData, point: &[Rational]) -> Result<MultiPoly> {
    let (v0, v2) = local_frame(z, point)?;
    let vars: Vec<String> = ["x0", "x2", "x3"].iter().map(|s| String::from(*s)).collect();
    let g = MultiPoly::gens(&vars);
    let images: Vec<MultiPoly> = (0..4)
        .map(|i| {
            g[0].scale(&v0[i])
                .add(&MultiPoly::constant(&vars, point[i].clone()))
                .add(&g[1].scale(&v2[i]))
                .add(&g[2].scale(&z.p0()[i]))
        })
        .collect();
    Ok(z.f().compose(&images, &vars))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionReport {
    pub checks: Vec<Check>,
}

impl PositionReport {
    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }
}

pub const CHECK_P0_OFF_Z: &str = "p0 not on Z";
pub const CHECK_NODES_SINGULAR: &str = "listed nodes are singular points of Z";
pub const CHECK_NODES_OFF_H0: &str = "H0 misses the listed nodes";
pub const CHECK_C_SMOOTH: &str = "C = Z ∩ H0 smooth";
pub const CHECK_TANGENTS: &str = "tangent lines of C through p0 simple";
pub const CHECK_TRANSVERSAL: &str = "q33 != 0 at every indeterminacy point";
pub const CHECK_BITANGENT: &str = "no bitangent plane of Z through p0";
pub const CHECK_GAUSS: &str = "no parabolic point with tangent plane through p0";

/// Small primes tried for the sampled checks.
const SAMPLE_PRIMES: [u64; 6] = [31, 37, 41, 43, 47, 53];

fn univ_gcd_trivial(a: &[Rational], b: &[Rational]) -> bool {
    let (a, b) = (univariate::trim(a.to_vec()), univariate::trim(b.to_vec()));
    if a.is_empty() || b.is_empty() {
        return false;
    }
    univariate::gcd(&a, &b).len() == 1
}

/// Singular points of `C` on the line `s0 = 0` (apart from `p0`, which is off
/// `C`): common roots in `s2` of the partials at `(0, 1, s2)`.
fn singular_at_infinity(g: &MultiPoly) -> Result<bool> {
    let mut m = BTreeMap::new();
    m.insert(String::from("s0"), Rational::zero());
    m.insert(String::from("s1"), Rational::one());
    let mut acc: Option<Vec<Rational>> = None;
    for v in ["s0", "s1", "s2"] {
        let p = univariate::from_multi(&g.differentiate(v, 1).partial_evaluate(&m), "s2")?;
        acc = Some(match acc {
            None => p,
            Some(a) if a.is_empty() => p,
            Some(a) if p.is_empty() => a,
            Some(a) => univariate::gcd(&a, &p),
        });
    }
    Ok(acc.is_some_and(|a| a.is_empty() || a.len() > 1))
}

/// Exact certificate that `C` is smooth: on `s0 = 1`, a singular point is a
/// common zero of `G_s0, G_s1, G_s2`, so it forces a common root of
/// `Res(G_s2, G_s0)` and `Res(G_s2, G_s1)`. Coprime resultants certify
/// smoothness there; the line `s0 = 0` is checked directly.
fn certify_smooth(g: &MultiPoly) -> Result<Option<bool>> {
    let d2 = g.differentiate("s2", 1);
    let ra = eliminate_s2(&d2, &g.differentiate("s0", 1))?;
    let rb = eliminate_s2(&d2, &g.differentiate("s1", 1))?;
    if singular_at_infinity(g)? {
        return Ok(Some(false));
    }
    Ok(if univ_gcd_trivial(&ra, &rb) { Some(true) } else { None })
}

struct SampledGeometry {
    prime: u64,
    tangency_points: usize,
    bitangent_planes: usize,
    parabolic: usize,
}

fn normalize_mod(v: &[u64], p: u64) -> Vec<u64> {
    let lead = v.iter().copied().find(|&a| a != 0).expect("nonzero");
    let mut e = p - 2;
    let (mut b, mut acc) = (lead % p, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    v.iter().map(|a| a * acc % p).collect()
}

fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| m[i][k] != 0) else {
            return 0;
        };
        if piv != k {
            m.swap(piv, k);
            det = (p - det) % p;
        }
        det = det * m[k][k] % p;
        let inv = normalize_mod(&[m[k][k]], p)[0];
        for i in k + 1..n {
            let f = m[i][k] * inv % p;
            for j in k..n {
                m[i][j] = (m[i][j] + p - f * m[k][j] % p) % p;
            }
        }
    }
    det
}

/// Runs over `P^3(F_p)` for the first small prime where the data reduce
/// well, recording smooth points whose tangent plane contains `p0`.
fn sample_tangent_planes(z: &HypersurfaceData) -> Result<Option<SampledGeometry>> {
    for &p in &SAMPLE_PRIMES {
        let Ok(f) = z.f().reduce_mod_p(p) else { continue };
        let p0: Option<Vec<u64>> = z.p0().iter().map(|c| reduce_rational(c, p)).collect();
        let Some(p0) = p0 else { continue };
        if f.evaluate(&p0) == 0 || p0.iter().all(|&a| a == 0) {
            continue;
        }
        let grad: Vec<FFPoly> = (0..4).map(|i| f.differentiate_index(i)).collect();
        let hess: Vec<Vec<FFPoly>> = grad.iter().map(|g| (0..4).map(|j| g.differentiate_index(j)).collect()).collect();
        let mut planes: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        let mut tangency_points = 0;
        let mut parabolic = 0;
        for x in projective_points(p, 4) {
            if f.evaluate(&x) != 0 {
                continue;
            }
            let gx: Vec<u64> = grad.iter().map(|g| g.evaluate(&x)).collect();
            if gx.iter().all(|&a| a == 0) {
                continue;
            }
            let through = gx.iter().zip(&p0).fold(0u64, |acc, (a, b)| (acc + a * b) % p);
            if through != 0 {
                continue;
            }
            tangency_points += 1;
            *planes.entry(normalize_mod(&gx, p)).or_insert(0) += 1;
            let h: Vec<Vec<u64>> = hess.iter().map(|r| r.iter().map(|e| e.evaluate(&x)).collect()).collect();
            if det_mod(h, p) == 0 {
                parabolic += 1;
            }
        }
        let bitangent_planes = planes.values().filter(|&&c| c > 1).count();
        return Ok(Some(SampledGeometry { prime: p, tangency_points, bitangent_planes, parabolic }));
    }
    Ok(None)
}

fn reduce_rational(c: &Rational, p: u64) -> Option<u64> {
    let q = MultiPoly::constant(&[], c.clone()).reduce_mod_p(p).ok()?;
    Some(q.coeff(&[]))
}

fn projective_points(p: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..len {
        let free = len - lead - 1;
        let total = p.pow(free as u32);
        for mut code in 0..total {
            let mut x = alloc::vec![0u64; len];
            x[lead] = 1;
            for slot in x.iter_mut().skip(lead + 1) {
                *slot = code % p;
                code /= p;
            }
            out.push(x);
        }
    }
    out
}

/// Checklist for the position of `(Z, p0, H0)`, surfaces in `P^3` only.
/// Exact where a certificate is available; bitangency conditions are
/// sampled over a small prime field.
pub fn general_position_report(z: &HypersurfaceData, seed: u64) -> Result<PositionReport> {
    if z.ambient() != 3 {
        return Err(Error::Unsupported("position reports are for surfaces in P^3".into()));
    }
    let mut checks = Vec::new();
    let fp0 = z.f().evaluate(z.p0())?;
    checks.push(Check::new(
        CHECK_P0_OFF_Z,
        Status::from_bool(!fp0.is_zero()),
        alloc::format!("F(p0) = {}", format_rational(&fp0)),
    ));
    if !z.p0_on_h0() {
        checks.push(Check::new("p0 on H0", Status::Fail, "h0 . p0 != 0"));
        return Ok(PositionReport { checks });
    }

    let grad = z.f().gradient();
    let mut node_on_h0 = false;
    if !z.nodes().is_empty() {
        let mut singular = true;
        let mut hits = Vec::new();
        for (k, v) in z.nodes().iter().enumerate() {
            for g in &grad {
                singular &= g.evaluate(v)?.is_zero();
            }
            if linalg::dot(v, z.h0()).is_zero() {
                hits.push(k);
            }
        }
        checks.push(Check::new(
            CHECK_NODES_SINGULAR,
            Status::from_bool(singular),
            alloc::format!("{} nodes listed", z.nodes().len()),
        ));
        node_on_h0 = !hits.is_empty();
        let detail =
            if hits.is_empty() { String::from("none on H0") } else { alloc::format!("nodes {hits:?} lie on H0") };
        checks.push(Check::new(CHECK_NODES_OFF_H0, Status::from_bool(hits.is_empty()), detail));
    }

    if fp0.is_zero() {
        for name in [CHECK_C_SMOOTH, CHECK_TANGENTS, CHECK_TRANSVERSAL] {
            checks.push(Check::new(name, Status::Unknown, "needs p0 off Z"));
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let frame = random_frame(z, &mut rng)?;
        let g = restrict_to_plane(z.f(), &frame);
        let smooth = if node_on_h0 { Some(false) } else { certify_smooth(&g)? };
        let (status, detail) = match smooth {
            Some(true) => (Status::Pass, "certified: coprime resultants of the partials"),
            Some(false) => (Status::Fail, "C has a singular point"),
            None => (Status::Unknown, "resultants of the partials share a factor"),
        };
        checks.push(Check::new(CHECK_C_SMOOTH, status, detail));

        let tang = indeterminacy_points(z, seed)?;
        let d = z.degree() as usize;
        let status = if tang.squarefree && tang.degree == d * (d - 1) { Status::Pass } else { Status::Unknown };
        checks.push(Check::new(
            CHECK_TANGENTS,
            status,
            alloc::format!(
                "tangency polynomial of degree {} ({})",
                tang.degree,
                if tang.squarefree { "squarefree" } else { "repeated root" }
            ),
        ));

        // q33 is proportional to p0^T Hess F p0 = d^2 G / ds2^2 at the point.
        let gt = restrict_to_plane(z.f(), &tang.frame);
        let r1 = eliminate_s2(&gt, &gt.differentiate("s2", 1))?;
        let r2 = eliminate_s2(&gt, &gt.differentiate("s2", 2))?;
        let status = if univ_gcd_trivial(&r1, &r2) { Status::Pass } else { Status::Unknown };
        checks.push(Check::new(
            CHECK_TRANSVERSAL,
            status,
            if status == Status::Pass {
                "certified: no common root with p0^T Hess F p0"
            } else {
                "common factor; not certified"
            },
        ));
    }

    match sample_tangent_planes(z)? {
        Some(s) => {
            let detail = alloc::format!(
                "sampled, not certified: F_{} has {} tangency points through p0, {} repeated planes",
                s.prime,
                s.tangency_points,
                s.bitangent_planes
            );
            checks.push(Check::new(
                CHECK_BITANGENT,
                if s.bitangent_planes == 0 { Status::Sampled } else { Status::Unknown },
                detail,
            ));
            let detail = alloc::format!("sampled, not certified: {} parabolic points over F_{}", s.parabolic, s.prime);
            checks.push(Check::new(
                CHECK_GAUSS,
                if s.parabolic == 0 { Status::Sampled } else { Status::Unknown },
                detail,
            ));
        }
        None => {
            for name in [CHECK_BITANGENT, CHECK_GAUSS] {
                checks.push(Check::new(name, Status::Unknown, "no small prime with good reduction"));
            }
        }
    }
    Ok(PositionReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, parse_poly, rat};

    fn z4(s: &str, p0: &[i64], h0: &[i64]) -> HypersurfaceData {
        HypersurfaceData::new(
            parse_poly(s, &var_names("x", 0, 4)).unwrap(),
            p0.iter().map(|&a| int(a)).collect(),
            h0.iter().map(|&a| int(a)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn local_examples() {
        let v: Vec<String> = ["x0", "x2", "x3"].iter().map(|s| String::from(*s)).collect();
        let a = second_form_local(&parse_poly("x2 + x3^2 + x0^3", &v).unwrap()).unwrap();
        assert_eq!(a.q33, int(1));
        assert!(a.pass());
        let b = second_form_local(&parse_poly("x2 + x0*x3", &v).unwrap()).unwrap();
        assert_eq!((b.q33.clone(), b.q03.clone()), (int(0), rat(1, 2)));
        assert!(!b.pass());
        assert!(second_form_local(&parse_poly("x2 + x0", &v).unwrap()).is_err());
    }

    #[test]
    fn witness_agrees_with_local_equation() {
        // Point e1 on H0 = {x0 = 0}, tangent plane x2 = 0 contains p0 = e3.
        let z = z4("x1^3*x2 + x1^2*x3^2 - 2*x0*x1*x3^2 + x0^4 + x2^4 + x3^3*x0", &[0, 0, 0, 1], &[1, 0, 0, 0]);
        let pt = alloc::vec![int(0), int(1), int(0), int(0)];
        let w = second_form_witness(&z, &pt).unwrap();
        let l = second_form_local(&local_equation(&z, &pt).unwrap()).unwrap();
        assert_eq!(w, l);
        assert!(w.pass());
    }

    #[test]
    fn witness_rejects_bad_position() {
        let z = z4("x0*x3 - x1*x2", &[0, 0, 0, 1], &[1, 0, 0, 0]);
        // [0,1,0,0] is on Z and H0, tangent plane x2 = 0 contains e3 ... but e3 is on Z.
        assert!(second_form_witness(&z, &[int(1), int(0), int(0), int(0)]).is_err());
    }

    #[test]
    fn conic_section_has_two_tangents() {
        let z = z4("x0^2 + x1^2 + x2^2 + x3^2 - 3*x1*x3", &[0, 1, 2, 1], &[1, 0, 0, 0]);
        let t = indeterminacy_points(&z, 0).unwrap();
        assert_eq!(t.degree, 2);
        assert!(t.squarefree);
    }

    #[test]
    fn p0_on_c_is_rejected() {
        let z = z4("x0*x3 - x1*x2", &[0, 0, 0, 1], &[1, 0, 0, 0]);
        assert!(indeterminacy_points(&z, 0).is_err());
    }

    #[test]
    fn fermat_quartic_section() {
        let z = z4("x0^4 + x1^4 + x2^4 + x3^4", &[0, 3, 5, -7], &[1, 0, 0, 0]);
        let t = indeterminacy_points(&z, 1).unwrap();
        assert_eq!(t.degree, 12, "{}", t.poly);
        assert!(t.squarefree, "{}", t.poly);
    }

    #[test]
    fn smooth_quadric_report() {
        let z = z4("x0^2 + x1^2 + x2^2 - x3^2 + x0*x3", &[0, 1, 2, 1], &[1, 0, 0, 0]);
        let r = general_position_report(&z, 0).unwrap();
        for c in &r.checks {
            assert!(matches!(c.status, Status::Pass | Status::Sampled), "{c:?}");
        }
    }

    #[test]
    fn node_on_h0_fails() {
        // Cone over a conic with vertex e1 on H0.
        let z = z4("x0^2 + x2^2 - x3^2", &[0, 1, 1, 2], &[1, 0, 0, 0])
            .with_nodes(alloc::vec![alloc::vec![int(0), int(1), int(0), int(0)]])
            .unwrap();
        let r = general_position_report(&z, 0).unwrap();
        assert_eq!(r.status_of(CHECK_NODES_OFF_H0), Some(Status::Fail));
        assert_eq!(r.status_of(CHECK_C_SMOOTH), Some(Status::Fail));
    }

    #[test]
    fn smoothness_certificate_detects_singular_section() {
        // C has a node at e3; it is found without being listed.
        let z = z4("x3*x1^2 - x3*x2^2 + x1^3 + x2^3 + x0^3 + x0*x3^2", &[0, 1, 2, 1], &[1, 0, 0, 0]);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = restrict_to_plane(z.f(), &random_frame(&z, &mut rng).unwrap());
        assert_ne!(certify_smooth(&g).unwrap(), Some(true));
    }
}
