use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::ratmat;
use crate::{RatMatrix, Rational};

/// An invertible rational linear map acting on row vectors as `v ↦ v·Aᵀ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommensurableMap {
    matrix: RatMatrix,
    inverse: RatMatrix,
    det: Rational,
}

impl CommensurableMap {
    pub fn new(matrix: RatMatrix) -> Result<Self> {
        let det = ratmat::determinant(&matrix)?;
        let inverse = ratmat::inverse(&matrix)?;
        Ok(CommensurableMap { matrix, inverse, det })
    }

    /// Accepts `matrix` only if `|det| = 1`; with `standard_embedding` it must
    /// also be orthogonal (`AᵀA = I`).
    pub fn isometry(matrix: RatMatrix, standard_embedding: bool) -> Result<Self> {
        let map = Self::new(matrix)?;
        if !map.has_unit_determinant() || (standard_embedding && !map.is_orthogonal()) {
            return Err(Error::NotCoincidence);
        }
        Ok(map)
    }

    pub fn identity(dim: usize) -> Self {
        let id = RatMatrix::identity(dim);
        CommensurableMap { matrix: id.clone(), inverse: id, det: Rational::one() }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &RatMatrix {
        &self.inverse
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn inverse(&self) -> Self {
        CommensurableMap {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            det: Rational::one() / &self.det,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(CommensurableMap {
            matrix: self.matrix.checked_mul(&other.matrix)?,
            inverse: other.inverse.checked_mul(&self.inverse)?,
            det: &self.det * &other.det,
        })
    }

    pub fn has_unit_determinant(&self) -> bool {
        self.det.abs().is_one()
    }

    /// `AᵀA = I` in the standard Euclidean embedding.
    pub fn is_orthogonal(&self) -> bool {
        self.matrix.transpose().checked_mul(&self.matrix).is_ok_and(|p| p.is_identity())
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.matrix.mul_vec(v)
    }

    pub fn apply_inverse(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.inverse.mul_vec(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::{rat, rat_matrix, Matrix};

    #[test]
    fn cached_inverse_and_orthogonality() {
        let r = Matrix::from_rows(vec![vec![rat(4, 5), rat(-3, 5)], vec![rat(3, 5), rat(4, 5)]]).unwrap();
        let map = CommensurableMap::isometry(r.clone(), true).unwrap();
        assert!((&map.matrix * &map.inverse).is_identity());
        assert_eq!(map.inverse().inverse(), map);
        assert_eq!(map.apply(&[rat(1, 1), rat(0, 1)]).unwrap(), vec![rat(4, 5), rat(3, 5)]);

        let squeeze = Matrix::from_rows(vec![vec![rat(2, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 2)]]).unwrap();
        assert!(CommensurableMap::isometry(squeeze.clone(), false).is_ok());
        assert_eq!(CommensurableMap::isometry(squeeze, true), Err(Error::NotCoincidence));
        assert_eq!(
            CommensurableMap::isometry(rat_matrix(&[&[2, 0], &[0, 1]]), false),
            Err(Error::NotCoincidence)
        );
        assert_eq!(CommensurableMap::new(rat_matrix(&[&[1, 1], &[1, 1]])), Err(Error::Singular));
    }

    #[test]
    fn composition() {
        let quarter = CommensurableMap::new(rat_matrix(&[&[0, -1], &[1, 0]])).unwrap();
        let half = quarter.compose(&quarter).unwrap();
        assert_eq!(half.matrix(), &rat_matrix(&[&[-1, 0], &[0, -1]]));
        assert!(half.compose(&half).unwrap().matrix().is_identity());
        assert!(quarter.compose(&quarter.inverse()).unwrap().inverse_matrix().is_identity());
    }
}
