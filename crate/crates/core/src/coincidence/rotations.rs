use num_integer::{Integer, Roots};

use super::CommensurableMap;
use crate::ratmat::{rat, Matrix};

/// Rational rotations of the plane, `(1/c)·[[a, −b], [b, a]]` for every
/// primitive `(a, b)` with `a² + b² = c²` and `c ≤ max_den`.
///
/// These are exactly the coincidence rotations of `Z²`. Ordered by `c`,
/// then `a`, then `b`.
pub fn enumerate_square_rotations(max_den: u64) -> Vec<CommensurableMap> {
    let max_den = max_den.max(1) as i64;
    let mut triples = Vec::new();
    for c in 1..=max_den {
        for a in -c..=c {
            let b2 = c * c - a * a;
            let b = b2.sqrt();
            if b * b != b2 || a.gcd(&b) != 1 {
                continue;
            }
            triples.push((c, a, b));
            if b != 0 {
                triples.push((c, a, -b));
            }
        }
    }
    triples.sort_unstable();
    triples.dedup();
    triples
        .into_iter()
        .map(|(c, a, b)| {
            let m = Matrix::from_rows(vec![vec![rat(a, c), rat(-b, c)], vec![rat(b, c), rat(a, c)]])
                .expect("2x2");
            CommensurableMap::isometry(m, true).expect("rational rotation")
        })
        .collect()
}
