use alloc::vec::Vec;
use core::cmp::Ordering;

/// Exponent vector, ordered graded-lexicographically: total degree first,
/// then the exponent of the first variable, then the second, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(alloc::vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn graded_before_lex() {
        let a = Monomial(vec![0, 3]);
        let b = Monomial(vec![2, 0]);
        let c = Monomial(vec![1, 1]);
        assert!(b < a);
        assert!(c < b);
    }

    #[test]
    fn division() {
        let a = Monomial(vec![2, 1, 0]);
        assert_eq!(a.div(&Monomial(vec![1, 1, 0])), Some(Monomial(vec![1, 0, 0])));
        assert_eq!(a.div(&Monomial(vec![0, 0, 1])), None);
    }
}
