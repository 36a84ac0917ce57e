use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::ChartMap;
use crate::exactalg::{MultiPoly, Rational};
use crate::{Error, Result};

/// Graph chart of a generating function `f(x_1..x_n)`:
/// `[1, x, df/dx_1 .. df/dx_n, 2f - x . grad f]`.
///
/// In Darboux coordinates the graph is `(x, grad f, f)`; the last slot here
/// is the same point written in linear coordinates, for which the chart is
/// Legendrian with respect to [`super::SymplecticForm::standard`]. For `f`
/// homogeneous of degree `d` the last slot is `(2 - d) f`.
pub fn pfaff_graph(f: &MultiPoly) -> Result<ChartMap> {
    let params = f.vars().to_vec();
    let n = params.len();
    let xs = MultiPoly::gens(&params);
    let grad = f.gradient();
    let euler = xs.iter().zip(&grad).fold(MultiPoly::zero(&params), |acc, (x, g)| acc.add(&x.mul(g)));
    let two = Rational::from_integer(2.into());
    let mut components = alloc::vec![MultiPoly::one(&params)];
    components.extend(xs);
    components.extend(grad);
    components.push(f.scale(&two).sub(&euler));
    ChartMap::new(&params, components, alloc::vec![Rational::zero(); n])
}

/// Moves the base point to the origin and drops the Taylor terms of degree
/// at most two. What remains starts with the cubic of the third fundamental
/// form. The dropped terms change the graph by a linear symplectic map.
pub fn normalize_jet(f: &MultiPoly, base: &[Rational]) -> Result<MultiPoly> {
    if base.len() != f.vars().len() {
        return Err(Error::Dimension("base point and generating function disagree".into()));
    }
    let g = f.translate(base);
    let mut out = g.clone();
    for d in 0..=2 {
        out = out.sub(&g.homogeneous_component(d));
    }
    Ok(out)
}

pub fn cubic_part(f: &MultiPoly) -> MultiPoly {
    f.homogeneous_component(3)
}

/// Taylor tensor `T[j, i_1..i_k] = d^k/dx_{i_1}..dx_{i_k} (slot n+1+j)` of a
/// graph chart at its base point, stored densely with `n^(k+1)` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct JetData {
    k: usize,
    n: usize,
    entries: Vec<Rational>,
}

impl JetData {
    pub fn order(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn offset(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, i| acc * self.n + i)
    }

    /// Entry at a multi-index of length `k + 1`; the first index is the
    /// normal slot.
    pub fn get(&self, idx: &[usize]) -> &Rational {
        assert_eq!(idx.len(), self.k + 1, "multi-index length");
        &self.entries[self.offset(idx)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// All multi-indices in lexicographic order.
    pub fn indices(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.entries.len());
        let mut cur = alloc::vec![0usize; self.k + 1];
        loop {
            out.push(cur.clone());
            let mut p = self.k + 1;
            loop {
                if p == 0 {
                    return out;
                }
                p -= 1;
                cur[p] += 1;
                if cur[p] < self.n {
                    break;
                }
                cur[p] = 0;
            }
        }
    }

    /// Invariance under every permutation of the `k + 1` indices, including
    /// those moving the normal slot.
    pub fn is_symmetric(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.indices().iter().all(|idx| {
            let mut s = idx.clone();
            s.sort_unstable();
            self.get(idx) == self.get(&s)
        })
    }

    /// `T(v, ..., v, .)` with `v` in the `k` tangent slots: a covector.
    pub fn contract_tangent(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); self.n];
        if self.n == 0 {
            return out;
        }
        for idx in self.indices() {
            let mut t = self.get(&idx).clone();
            if t.is_zero() {
                continue;
            }
            for i in &idx[1..] {
                t *= &v[*i];
            }
            out[idx[0]] += t;
        }
        out
    }
}

/// The order-`k` fundamental form of a graph chart at its base point.
pub fn fundamental_form(chart: &ChartMap, k: usize) -> Result<JetData> {
    let n = chart.param_count();
    let cs = chart.components();
    let one = MultiPoly::one(chart.params());
    let graph_form = cs.len() == 2 * n + 2
        && cs[0] == one
        && MultiPoly::gens(chart.params()).iter().zip(&cs[1..=n]).all(|(a, b)| a == b);
    if !graph_form {
        return Err(Error::Invalid("chart is not in graph normal form".into()));
    }
    if k < 1 {
        return Err(Error::Invalid("fundamental form order must be positive".into()));
    }
    let mut jet = JetData { k, n, entries: alloc::vec![Rational::zero(); n.pow(k as u32 + 1)] };
    for idx in jet.indices() {
        let mut p = cs[n + 1 + idx[0]].clone();
        for i in &idx[1..] {
            p = p.differentiate_index(*i, 1);
        }
        let off = jet.offset(&idx);
        jet.entries[off] = p.evaluate(chart.base_point())?;
    }
    Ok(jet)
}

fn check_dim(f: &MultiPoly, v: &[Rational]) -> Result<()> {
    if v.len() != f.vars().len() {
        return Err(Error::Dimension(alloc::format!(
            "direction has {} coordinates, f has {} variables",
            v.len(),
            f.vars().len()
        )));
    }
    Ok(())
}

/// `v` is singular on its own quadric `Q_v = dP/dv`, `P` the cubic part of `f`.
pub fn base_locus_member(f: &MultiPoly, v: &[Rational]) -> Result<bool> {
    check_dim(f, v)?;
    let p = cubic_part(f);
    let qv = p.gradient().iter().zip(v).fold(MultiPoly::zero(f.vars()), |acc, (g, c)| acc.add(&g.scale(c)));
    for g in qv.gradient() {
        if !g.evaluate(v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every quadric `dP/dx_j` of the second fundamental form vanishes at `v`.
pub fn base_locus_via_quadrics(f: &MultiPoly, v: &[Rational]) -> Result<bool> {
    check_dim(f, v)?;
    for q in cubic_part(f).gradient() {
        if !q.evaluate(v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Contact of the line through the base point in direction `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineContact {
    /// `F_j(v, .., v, .)` is nonzero for this `j` and vanishes below it.
    Order(u32),
    /// Vanishing through `kmax`, not everywhere.
    AtLeast(u32),
    /// The line lies on the variety.
    Contained,
}

/// Finds the first `j >= 2` with `F_j(v^j, .) != 0`, working on the
/// normalized jet of `f` at the origin. Since `f` is a polynomial every order
/// is checked, so `Contained` is exact.
pub fn contact_line_test(f: &MultiPoly, v: &[Rational], kmax: u32) -> Result<LineContact> {
    check_dim(f, v)?;
    if v.iter().all(Zero::is_zero) {
        return Err(Error::Invalid("direction must be nonzero".into()));
    }
    let fnorm = normalize_jet(f, &alloc::vec![Rational::zero(); v.len()])?;
    let t: Vec<String> = alloc::vec!["t".into()];
    let tv = MultiPoly::var(&t, "t")?;
    let line: Vec<MultiPoly> = v.iter().map(|c| tv.scale(c)).collect();
    let mut first: Option<u32> = None;
    for g in fnorm.gradient() {
        let along = g.compose(&line, &t);
        if let Some(k) = along.terms().keys().map(|m| m.degree()).min() {
            first = Some(first.map_or(k, |f| f.min(k)));
        }
    }
    Ok(match first {
        None => LineContact::Contained,
        Some(k) if k <= kmax => LineContact::Order(k),
        Some(_) => LineContact::AtLeast(kmax + 1),
    })
}
