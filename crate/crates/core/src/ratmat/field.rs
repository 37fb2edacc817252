//! Gaussian elimination over a field: inverse and determinant.
//!
//! Generic over any `Num` scalar that behaves as a field (`BigRational`
//! for exact work; `f64` works but rounds).

use num_integer::Integer;
use num_traits::{Num, Signed};

use super::Matrix;
use crate::error::{Error, Result};

fn require_square<T>(m: &Matrix<T>) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::Shape { rows: m.nrows(), cols: m.ncols(), reason: "matrix must be square" });
    }
    Ok(m.nrows())
}

/// Exact inverse by Gauss-Jordan elimination.
pub fn inverse<T: Clone + Num>(m: &Matrix<T>) -> Result<Matrix<T>> {
    let n = require_square(m)?;
    let mut a = m.clone();
    let mut inv = Matrix::<T>::identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(Error::Singular)?;
        a.swap_rows(col, pivot);
        inv.swap_rows(col, pivot);
        let p = a[(col, col)].clone();
        for j in 0..n {
            a[(col, j)] = a[(col, j)].clone() / p.clone();
            inv[(col, j)] = inv[(col, j)].clone() / p.clone();
        }
        for r in 0..n {
            if r == col || a[(r, col)].is_zero() {
                continue;
            }
            let f = a[(r, col)].clone();
            for j in 0..n {
                a[(r, j)] = a[(r, j)].clone() - f.clone() * a[(col, j)].clone();
                inv[(r, j)] = inv[(r, j)].clone() - f.clone() * inv[(col, j)].clone();
            }
        }
    }
    Ok(inv)
}

/// Determinant by Gaussian elimination over a field.
pub fn determinant<T: Clone + Num>(m: &Matrix<T>) -> Result<T> {
    let n = require_square(m)?;
    let mut a = m.clone();
    let mut det = T::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
            return Ok(T::zero());
        };
        if pivot != col {
            a.swap_rows(col, pivot);
            det = T::zero() - det;
        }
        let p = a[(col, col)].clone();
        det = det * p.clone();
        for r in col + 1..n {
            if a[(r, col)].is_zero() {
                continue;
            }
            let f = a[(r, col)].clone() / p.clone();
            for j in col..n {
                a[(r, j)] = a[(r, j)].clone() - f.clone() * a[(col, j)].clone();
            }
        }
    }
    Ok(det)
}

/// Fraction-free (Bareiss) determinant for integer matrices.
pub fn int_determinant<T: Clone + Integer + Signed>(m: &Matrix<T>) -> Result<T> {
    let n = require_square(m)?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                return Ok(T::zero());
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = num / prev.clone();
            }
            a[(i, k)] = T::zero();
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * a[(n - 1, n - 1)].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RatMatrix, Rational};
    use num_bigint::BigInt;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    fn example_rotation() -> RatMatrix {
        Matrix::from_rows(vec![vec![rat(4, 5), rat(-3, 5)], vec![rat(3, 5), rat(4, 5)]]).unwrap()
    }

    #[test]
    fn identity_inverse() {
        let id = RatMatrix::identity(3);
        assert_eq!(inverse(&id).unwrap(), id);
    }

    #[test]
    fn rotation_inverse_is_transpose() {
        let r = example_rotation();
        let inv = inverse(&r).unwrap();
        assert_eq!(inv, r.transpose());
        assert_eq!(inv[(0, 1)], rat(3, 5));
        assert_eq!(determinant(&r).unwrap(), rat(1, 1));
    }

    #[test]
    fn singular_rejected() {
        let m = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 1)], vec![rat(1, 4), rat(1, 2)]]).unwrap();
        assert_eq!(inverse(&m), Err(Error::Singular));
        assert_eq!(determinant(&m).unwrap(), rat(0, 1));
    }

    #[test]
    fn bareiss_matches_field_elimination() {
        let m = Matrix::from_rows(vec![vec![2i64, -3, 1], vec![2, 0, -1], vec![1, 4, 5]]).unwrap();
        let as_rat = m.map(|&x| rat(x, 1));
        assert_eq!(int_determinant(&m).unwrap(), 49);
        assert_eq!(determinant(&as_rat).unwrap(), rat(49, 1));
        let big = m.map(|&x| BigInt::from(x));
        assert_eq!(int_determinant(&big).unwrap(), BigInt::from(49));
        let zero_lead = Matrix::from_rows(vec![vec![0i64, 1], vec![1, 0]]).unwrap();
        assert_eq!(int_determinant(&zero_lead).unwrap(), -1);
    }
}
