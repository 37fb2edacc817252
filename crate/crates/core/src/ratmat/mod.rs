//! Exact scalars, dense matrices and integer normal forms.

mod field;
mod matrix;
mod normal_form;

pub use field::{determinant, int_determinant, inverse};
pub use matrix::Matrix;
pub use normal_form::{hnf, snf, solve_integer, xgcd, Echelon, IntScalar, Smith};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{Int, IntMatrix, RatMatrix, Rational};

/// Parses the textual form `p/q` or `p`. Only `p` may carry a sign and `q`
/// must be positive.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (t, None),
    };
    let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
    let unsigned = p.strip_prefix(['-', '+']).unwrap_or(p);
    if !digits(unsigned) {
        return Err(bad());
    }
    let numer: Int = p.parse().map_err(|_| bad())?;
    let denom: Int = match q {
        Some(q) if digits(q) => q.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => Int::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text: `p/q`, or `p` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(p.into())
}

/// Builds a rational matrix from integer rows; handy in tests and examples.
pub fn rat_matrix(rows: &[&[i64]]) -> RatMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect())
        .expect("rows of equal length")
}

pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
        .expect("rows of equal length")
}

/// Least common multiple of all denominators (1 for an empty slice).
pub fn common_denominator<'a>(entries: impl IntoIterator<Item = &'a Rational>) -> Int {
    entries.into_iter().fold(Int::one(), |acc, r| acc.lcm(r.denom()))
}

/// `(N, D)` with `M = N / D` and `D` the least common denominator.
pub fn clear_denominators(m: &RatMatrix) -> (IntMatrix, Int) {
    let d = common_denominator(m.entries());
    let n = m.map(|x| (x * Rational::from_integer(d.clone())).to_integer());
    (n, d)
}

pub fn to_rational(m: &IntMatrix) -> RatMatrix {
    m.map(|x| Rational::from_integer(x.clone()))
}

/// Integer matrix with the given entries if every one is integral.
pub fn to_integer(m: &RatMatrix) -> Option<IntMatrix> {
    m.entries().iter().all(|x| x.is_integer()).then(|| m.map(|x| x.to_integer()))
}

pub fn vec_to_rational(v: &[Int]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Nearest double, for display only.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
