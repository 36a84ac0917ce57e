use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{linalg, random_vector, MultiPoly, Rational};
use crate::{Error, Result};

/// `N + 1` polynomials in `n` parameters: a patch of the affine cone over a
/// variety in projective `N`-space, together with a base point in parameter
/// space where the components do not all vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartMap {
    params: Vec<String>,
    components: Vec<MultiPoly>,
    base_point: Vec<Rational>,
}

impl ChartMap {
    pub fn new(params: &[String], components: Vec<MultiPoly>, base_point: Vec<Rational>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::Dimension("a chart needs at least two components".into()));
        }
        if base_point.len() != params.len() {
            return Err(Error::Dimension(alloc::format!(
                "base point has {} coordinates for {} parameters",
                base_point.len(),
                params.len()
            )));
        }
        let components = components.iter().map(|c| c.with_vars(params)).collect::<Result<Vec<_>>>()?;
        let chart = ChartMap { params: params.to_vec(), components, base_point };
        if chart.evaluate(&chart.base_point)?.iter().all(Zero::is_zero) {
            return Err(Error::DegenerateChart("all components vanish at the base point".into()));
        }
        Ok(chart)
    }

    /// Projective dimension `N` of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn param_count(&self) -> usize {
        self.params.len()
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn base_point(&self) -> &[Rational] {
        &self.base_point
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| c.evaluate(point)).collect()
    }

    /// Rows `F, d_1 F, ..., d_n F`.
    pub fn jet_rows(&self) -> Vec<Vec<MultiPoly>> {
        let mut rows = alloc::vec![self.components.clone()];
        for i in 0..self.params.len() {
            rows.push(self.components.iter().map(|c| c.differentiate_index(i, 1)).collect());
        }
        rows
    }

    /// The jet matrix evaluated at a parameter point.
    pub fn jet_matrix_at(&self, point: &[Rational]) -> Result<linalg::Matrix> {
        self.jet_rows().iter().map(|r| r.iter().map(|c| c.evaluate(point)).collect()).collect()
    }

    /// Multiplies every component by a common polynomial factor.
    pub fn scaled(&self, g: &MultiPoly) -> Result<Self> {
        let g = g.with_vars(&self.params)?;
        ChartMap::new(&self.params, self.components.iter().map(|c| c.mul(&g)).collect(), self.base_point.clone())
    }

    /// Rank of the jet matrix at a point.
    pub fn rank_at(&self, point: &[Rational]) -> Result<usize> {
        Ok(linalg::rank(&self.jet_matrix_at(point)?))
    }

    /// Whether the jet matrix reaches full rank `n + 1` at one of three random
    /// rational points.
    pub fn is_generically_immersive(&self, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.params.len();
        (0..3).any(|_| {
            let pt = random_vector(&mut rng, n, 1000);
            self.rank_at(&pt).is_ok_and(|r| r == n + 1)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, parse_poly, var_names};

    fn cubic() -> ChartMap {
        let t = var_names("t", 1, 1);
        let cs = ["1", "t1", "3*t1^2", "t1^3"].iter().map(|s| parse_poly(s, &t).unwrap()).collect();
        ChartMap::new(&t, cs, alloc::vec![int(0)]).unwrap()
    }

    #[test]
    fn twisted_cubic_is_immersive() {
        let c = cubic();
        assert_eq!(c.ambient_dim(), 3);
        assert!(c.is_generically_immersive(0));
        assert_eq!(c.rank_at(&[int(0)]).unwrap(), 2);
    }

    #[test]
    fn vanishing_base_point_rejected() {
        let t = var_names("t", 1, 1);
        let cs = ["t1", "t1^2"].iter().map(|s| parse_poly(s, &t).unwrap()).collect();
        assert!(matches!(ChartMap::new(&t, cs, alloc::vec![int(0)]), Err(Error::DegenerateChart(_))));
    }

    #[test]
    fn constant_chart_is_not_immersive() {
        let t = var_names("t", 1, 1);
        let cs = ["1", "2", "0", "0"].iter().map(|s| parse_poly(s, &t).unwrap()).collect();
        let c = ChartMap::new(&t, cs, alloc::vec![int(0)]).unwrap();
        assert!(!c.is_generically_immersive(0));
    }
}
