use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ChartMap;
use crate::exactalg::{linalg, random_rational, Monomial, MultiPoly, Rational};
use crate::{Error, Result};

/// Nondegenerate antisymmetric matrix on an even-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    matrix: linalg::Matrix,
}

impl SymplecticForm {
    pub fn new(matrix: linalg::Matrix) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || !n.is_multiple_of(2) || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(alloc::format!("form must be square of even size, got {n}")));
        }
        for i in 0..n {
            for j in 0..n {
                if matrix[i][j] != -matrix[j][i].clone() {
                    return Err(Error::Invalid(alloc::format!("form is not antisymmetric at ({i},{j})")));
                }
            }
        }
        if linalg::det(&matrix).is_zero() {
            return Err(Error::Invalid("form is degenerate".into()));
        }
        Ok(SymplecticForm { matrix })
    }

    /// The form on coordinates `[x_0, x_1..x_n, p_1..p_n, z]` pairing
    /// `x_i` with `p_i` and `x_0` with `z`, scaled by `c` on the last pair.
    pub fn graph_form(n: usize, c: Rational) -> Result<Self> {
        let size = 2 * n + 2;
        let mut m = linalg::zeros(size, size);
        for i in 1..=n {
            m[i][n + i] = Rational::one();
            m[n + i][i] = -Rational::one();
        }
        m[0][size - 1] = c.clone();
        m[size - 1][0] = -c;
        Self::new(m)
    }

    /// [`SymplecticForm::graph_form`] with unit weight.
    pub fn standard(n: usize) -> Self {
        Self::graph_form(n, Rational::one()).expect("standard form is nondegenerate")
    }

    /// `sum dz_i ^ dw_i` on coordinates `[w_1..w_n, z_1..z_n]`.
    pub fn darboux(n: usize) -> Self {
        let mut m = linalg::zeros(2 * n, 2 * n);
        for i in 0..n {
            m[n + i][i] = Rational::one();
            m[i][n + i] = -Rational::one();
        }
        Self::new(m).expect("darboux form is nondegenerate")
    }

    pub fn matrix(&self) -> &linalg::Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        linalg::bilinear(&self.matrix, u, v)
    }
}

/// `u^T M v` for vectors of polynomials.
pub fn omega_pairing(m: &[Vec<Rational>], u: &[MultiPoly], v: &[MultiPoly]) -> MultiPoly {
    let mut acc = MultiPoly::zero(u[0].vars());
    for (a, row) in m.iter().enumerate() {
        for (b, w) in row.iter().enumerate() {
            if !w.is_zero() && !u[a].is_zero() && !v[b].is_zero() {
                acc = acc.add(&u[a].mul(&v[b]).scale(w));
            }
        }
    }
    acc
}

/// One isotropy identity that fails: the pairing of rows `i` and `j` of the
/// jet matrix (row 0 is `F`, row `k` is `d_k F`).
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub rows: (usize, usize),
    pub residual: MultiPoly,
}

impl Violation {
    pub fn label(&self, params: &[String]) -> String {
        let name = |r: usize| if r == 0 { "F".into() } else { alloc::format!("d{}F", params[r - 1]) };
        alloc::format!("<{}, {}>", name(self.rows.0), name(self.rows.1))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LegendrianReport {
    pub legendrian: bool,
    pub violations: Vec<Violation>,
}

/// Checks that `span{F, d_1 F, ..., d_n F}` is isotropic identically in the
/// parameters. Requires `N + 1 = 2n + 2`.
pub fn is_legendrian(chart: &ChartMap, form: &SymplecticForm) -> Result<LegendrianReport> {
    let size = chart.components().len();
    if form.dim() != size {
        return Err(Error::Dimension(alloc::format!("form has size {}, chart has {size} components", form.dim())));
    }
    if size != 2 * chart.param_count() + 2 {
        return Err(Error::Dimension(alloc::format!(
            "{} parameters in projective {}-space is not middle dimensional",
            chart.param_count(),
            size - 1
        )));
    }
    let rows = chart.jet_rows();
    let mut violations = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let r = omega_pairing(form.matrix(), &rows[i], &rows[j]);
            if !r.is_zero() {
                violations.push(Violation { rows: (i, j), residual: r });
            }
        }
    }
    Ok(LegendrianReport { legendrian: violations.is_empty(), violations })
}

/// Linear space of antisymmetric forms making the chart isotropic.
#[derive(Clone, Debug)]
pub struct FormSearch {
    /// Basis of the solution space.
    pub basis: Vec<linalg::Matrix>,
    /// A nondegenerate member found by random combination, if any.
    pub witness: Option<SymplecticForm>,
}

impl FormSearch {
    pub fn nondegenerate(&self) -> bool {
        self.witness.is_some()
    }

    /// Whether `m` lies in the span of the basis.
    pub fn contains(&self, m: &[Vec<Rational>]) -> bool {
        let flat = |a: &[Vec<Rational>]| -> Vec<Rational> { a.iter().flatten().cloned().collect() };
        let target = flat(m);
        let cols: Vec<Vec<Rational>> = self.basis.iter().map(|b| flat(b)).collect();
        let a = linalg::transpose(&cols);
        if self.basis.is_empty() {
            return target.iter().all(Zero::is_zero);
        }
        linalg::solve(&a, &target).is_some()
    }
}

/// Solves for every antisymmetric `M` with `F^T M d_i F = 0` and
/// `d_i F^T M d_j F = 0` identically; then tries three random combinations
/// for a nondegenerate one.
pub fn find_symplectic_forms(chart: &ChartMap, seed: u64) -> Result<FormSearch> {
    if !chart.is_generically_immersive(seed) {
        return Err(Error::DegenerateChart("jet matrix is rank deficient at every sampled point".into()));
    }
    let size = chart.components().len();
    let pairs: Vec<(usize, usize)> = (0..size).flat_map(|a| (a + 1..size).map(move |b| (a, b))).collect();
    let rows = chart.jet_rows();
    let mut equations: Vec<Vec<Rational>> = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            // Coefficient of each monomial, as a linear form in the unknowns.
            let mut eqs: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
            for (k, &(a, b)) in pairs.iter().enumerate() {
                let e = rows[i][a].mul(&rows[j][b]).sub(&rows[i][b].mul(&rows[j][a]));
                for (m, c) in e.terms() {
                    eqs.entry(m.clone()).or_insert_with(|| alloc::vec![Rational::zero(); pairs.len()])[k] += c;
                }
            }
            equations.extend(eqs.into_values());
        }
    }
    let null = if equations.is_empty() {
        (0..pairs.len())
            .map(|k| {
                let mut v = alloc::vec![Rational::zero(); pairs.len()];
                v[k] = Rational::one();
                v
            })
            .collect()
    } else {
        linalg::nullspace(&equations, pairs.len())
    };
    let to_matrix = |v: &[Rational]| {
        let mut m = linalg::zeros(size, size);
        for (k, &(a, b)) in pairs.iter().enumerate() {
            m[a][b] = v[k].clone();
            m[b][a] = -v[k].clone();
        }
        m
    };
    let basis: Vec<linalg::Matrix> = null.iter().map(|v| to_matrix(v)).collect();
    let mut witness = None;
    if size.is_multiple_of(2) && !null.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..3 {
            let mut comb = alloc::vec![Rational::zero(); pairs.len()];
            for v in &null {
                let c = random_rational(&mut rng, 1000, 1);
                for (x, y) in comb.iter_mut().zip(v) {
                    *x += &c * y;
                }
            }
            if let Ok(f) = SymplecticForm::new(to_matrix(&comb)) {
                witness = Some(f);
                break;
            }
        }
    }
    Ok(FormSearch { basis, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, parse_poly, var_names};

    fn chart(cs: &[&str]) -> ChartMap {
        let t = var_names("t", 1, 1);
        ChartMap::new(&t, cs.iter().map(|s| parse_poly(s, &t).unwrap()).collect(), alloc::vec![int(0)]).unwrap()
    }

    /// Pfaffian of a 4x4 antisymmetric matrix.
    fn pf4(m: &[Vec<Rational>]) -> Rational {
        &m[0][1] * &m[2][3] - &m[0][2] * &m[1][3] + &m[0][3] * &m[1][2]
    }

    #[test]
    fn twisted_cubic_has_one_form() {
        let s = find_symplectic_forms(&chart(&["1", "t1", "3*t1^2", "t1^3"]), 0).unwrap();
        assert_eq!(s.basis.len(), 1);
        let m = &s.basis[0];
        assert_eq!(m[0][3], -m[1][2].clone());
        assert!(s.nondegenerate());
        let w = s.witness.unwrap();
        assert!(is_legendrian(&chart(&["1", "t1", "3*t1^2", "t1^3"]), &w).unwrap().legendrian);
    }

    #[test]
    fn planar_conic_has_only_degenerate_forms() {
        let s = find_symplectic_forms(&chart(&["1", "t1", "t1^2", "0"]), 0).unwrap();
        assert!(!s.basis.is_empty());
        for m in &s.basis {
            assert!(m[0][1].is_zero() && m[0][2].is_zero() && m[1][2].is_zero());
            assert!(pf4(m).is_zero());
        }
        assert!(!s.nondegenerate());
    }

    #[test]
    fn wrong_partials_are_reported() {
        let c = chart(&["1", "t1", "2*t1^2", "t1^3"]);
        let mut m = linalg::zeros(4, 4);
        m[1][2] = int(1);
        m[2][1] = int(-1);
        m[0][3] = int(-1);
        m[3][0] = int(1);
        let r = is_legendrian(&c, &SymplecticForm::new(m).unwrap()).unwrap();
        assert!(!r.legendrian);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].label(c.params()), "<F, dt1F>");
    }

    #[test]
    fn odd_dimension_rejected() {
        let c = chart(&["1", "t1", "t1^2"]);
        assert!(SymplecticForm::new(linalg::zeros(3, 3)).is_err());
        assert!(is_legendrian(&c, &SymplecticForm::standard(1)).is_err());
    }
}
