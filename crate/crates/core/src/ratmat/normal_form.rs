//! Hermite and Smith normal forms over a Euclidean integer type.
//!
//! Conventions are row-based throughout: a matrix's rows generate a
//! Z-module, left multiplication by a unimodular `U` changes basis, and the
//! Hermite form is upper triangular with positive pivots and the entries
//! above every pivot reduced into `[0, pivot)`.

use num_integer::Integer;
use num_traits::Signed;

use super::Matrix;
use crate::error::{Error, Result};

/// Scalars the normal-form algorithms can work over.
pub trait IntScalar: Clone + Integer + Signed {}
impl<T: Clone + Integer + Signed> IntScalar for T {}

/// Returns `(g, x, y)` with `x·a + y·b = g = gcd(a, b) >= 0`.
pub fn xgcd<T: IntScalar>(a: &T, b: &T) -> (T, T, T) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (T::one(), T::zero());
    let (mut t0, mut t1) = (T::zero(), T::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = r0 - q.clone() * r1.clone();
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = s0 - q.clone() * s1.clone();
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = t0 - q * t1.clone();
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Replaces rows `(i, k)` by `(x·ri + y·rk, p·ri + q·rk)`.
fn combine_rows<T: IntScalar>(m: &mut Matrix<T>, i: usize, k: usize, c: [&T; 4]) {
    let [x, y, p, q] = c;
    for j in 0..m.ncols() {
        let (a, b) = (m[(i, j)].clone(), m[(k, j)].clone());
        m[(i, j)] = x.clone() * a.clone() + y.clone() * b.clone();
        m[(k, j)] = p.clone() * a + q.clone() * b;
    }
}

/// Replaces columns `(i, k)` by `(x·ci + y·ck, p·ci + q·ck)`.
fn combine_cols<T: IntScalar>(m: &mut Matrix<T>, i: usize, k: usize, c: [&T; 4]) {
    let [x, y, p, q] = c;
    for r in 0..m.nrows() {
        let (a, b) = (m[(r, i)].clone(), m[(r, k)].clone());
        m[(r, i)] = x.clone() * a.clone() + y.clone() * b.clone();
        m[(r, k)] = p.clone() * a + q.clone() * b;
    }
}

/// `row[dst] -= f · row[src]`
fn row_axpy<T: IntScalar>(m: &mut Matrix<T>, dst: usize, src: usize, f: &T) {
    for j in 0..m.ncols() {
        let v = m[(src, j)].clone() * f.clone();
        m[(dst, j)] = m[(dst, j)].clone() - v;
    }
}

fn col_axpy<T: IntScalar>(m: &mut Matrix<T>, dst: usize, src: usize, f: &T) {
    for i in 0..m.nrows() {
        let v = m[(i, src)].clone() * f.clone();
        m[(i, dst)] = m[(i, dst)].clone() - v;
    }
}

fn negate_row<T: IntScalar>(m: &mut Matrix<T>, i: usize) {
    for j in 0..m.ncols() {
        m[(i, j)] = -m[(i, j)].clone();
    }
}

/// Row echelon (Hermite) form of an arbitrary integer matrix.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    /// `h = u · input`; rows `rank..` are zero.
    pub h: Matrix<T>,
    /// Unimodular transform. Its rows `rank..` span the integer left kernel.
    pub u: Matrix<T>,
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
}

impl<T: IntScalar> Echelon<T> {
    pub fn compute(input: &Matrix<T>) -> Self {
        let (m, n) = input.shape();
        let mut h = input.clone();
        let mut u = Matrix::<T>::identity(m);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            for k in r + 1..m {
                if h[(k, c)].is_zero() {
                    continue;
                }
                if h[(r, c)].is_zero() {
                    h.swap_rows(r, k);
                    u.swap_rows(r, k);
                    continue;
                }
                let (a, b) = (h[(r, c)].clone(), h[(k, c)].clone());
                if b.is_multiple_of(&a) {
                    let f = b / a;
                    row_axpy(&mut h, k, r, &f);
                    row_axpy(&mut u, k, r, &f);
                } else {
                    let (g, x, y) = xgcd(&a, &b);
                    let p = -(b / g.clone());
                    let q = a / g;
                    combine_rows(&mut h, r, k, [&x, &y, &p, &q]);
                    combine_rows(&mut u, r, k, [&x, &y, &p, &q]);
                }
            }
            if h[(r, c)].is_zero() {
                continue;
            }
            if h[(r, c)].is_negative() {
                negate_row(&mut h, r);
                negate_row(&mut u, r);
            }
            // Reduce above the new pivot right away to keep entries small.
            let pivot = h[(r, c)].clone();
            for i in 0..r {
                let f = h[(i, c)].div_floor(&pivot);
                if !f.is_zero() {
                    row_axpy(&mut h, i, r, &f);
                    row_axpy(&mut u, i, r, &f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { h, u, rank: r, pivots }
    }

    /// The nonzero rows of `h`.
    pub fn basis(&self) -> Matrix<T> {
        self.h.select_rows(0..self.rank)
    }

    /// Basis of `{x : x · input = 0}` over the integers.
    pub fn left_kernel(&self) -> Matrix<T> {
        self.u.select_rows(self.rank..self.u.nrows())
    }

    /// Integral `x` with `x · input = b`, if one exists.
    pub fn solve_left(&self, b: &[T]) -> Option<Vec<T>> {
        if b.len() != self.h.ncols() {
            return None;
        }
        let mut y: Vec<T> = Vec::with_capacity(self.rank);
        for (k, &c) in self.pivots.iter().enumerate() {
            let partial = y.iter().enumerate().fold(b[c].clone(), |acc, (i, yi)| {
                acc - yi.clone() * self.h[(i, c)].clone()
            });
            let (q, rem) = partial.div_rem(&self.h[(k, c)]);
            if !rem.is_zero() {
                return None;
            }
            y.push(q);
        }
        let hb = self.basis().left_mul_vec(&y).ok()?;
        if hb.as_slice() != b {
            return None;
        }
        y.resize(self.u.nrows(), T::zero());
        self.u.left_mul_vec(&y).ok()
    }
}

/// Row-style Hermite normal form: `(H, U)` with `H = U·M`, `U` unimodular.
///
/// `M` must have full row rank.
pub fn hnf<T: IntScalar>(m: &Matrix<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    let ech = Echelon::compute(m);
    if ech.rank < m.nrows() {
        return Err(Error::RankDeficient);
    }
    Ok((ech.h, ech.u))
}

/// Smith normal form of a square nonsingular matrix.
#[derive(Clone, Debug)]
pub struct Smith<T> {
    /// Diagonal with `d[i] | d[i+1]`, all positive.
    pub d: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: IntScalar> Smith<T> {
    pub fn invariants(&self) -> Vec<T> {
        (0..self.d.nrows()).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// `D = U·M·V` with `U`, `V` unimodular and `D` diagonal in divisor-chain form.
pub fn snf<T: IntScalar>(m: &Matrix<T>) -> Result<Smith<T>> {
    if !m.is_square() {
        return Err(Error::Shape { rows: m.nrows(), cols: m.ncols(), reason: "matrix must be square" });
    }
    let n = m.nrows();
    let mut a = m.clone();
    let mut u = Matrix::<T>::identity(n);
    let mut v = Matrix::<T>::identity(n);

    for t in 0..n {
        loop {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    let e = &a[(i, j)];
                    if e.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| e.abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Err(Error::RankDeficient);
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            for i in t + 1..n {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let (p, b) = (a[(t, t)].clone(), a[(i, t)].clone());
                if b.is_multiple_of(&p) {
                    let f = b / p;
                    row_axpy(&mut a, i, t, &f);
                    row_axpy(&mut u, i, t, &f);
                } else {
                    let (g, x, y) = xgcd(&p, &b);
                    let r = -(b / g.clone());
                    let s = p / g;
                    combine_rows(&mut a, t, i, [&x, &y, &r, &s]);
                    combine_rows(&mut u, t, i, [&x, &y, &r, &s]);
                }
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let (p, b) = (a[(t, t)].clone(), a[(t, j)].clone());
                if b.is_multiple_of(&p) {
                    let f = b / p;
                    col_axpy(&mut a, j, t, &f);
                    col_axpy(&mut v, j, t, &f);
                } else {
                    let (g, x, y) = xgcd(&p, &b);
                    let r = -(b / g.clone());
                    let s = p / g;
                    combine_cols(&mut a, t, j, [&x, &y, &r, &s]);
                    combine_cols(&mut v, t, j, [&x, &y, &r, &s]);
                }
            }
            // Column ops may have refilled column t.
            if (t + 1..n).any(|i| !a[(i, t)].is_zero()) {
                continue;
            }
            let p = a[(t, t)].clone();
            let offender = (t + 1..n)
                .find(|&i| (t + 1..n).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = -T::one();
                    row_axpy(&mut a, t, i, &one);
                    row_axpy(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut u, t);
        }
    }
    Ok(Smith { d: a, u, v })
}

/// Integral `x` with `xᵀ·M = bᵀ`, decided through the Smith form.
pub fn solve_integer<T: IntScalar>(m: &Matrix<T>, b: &[T]) -> Result<Option<Vec<T>>> {
    if b.len() != m.ncols() {
        return Err(Error::DimensionMismatch { expected: m.ncols(), found: b.len() });
    }
    let smith = snf(m)?;
    // x·U⁻¹·D = b·V, so y = x·U⁻¹ solves y·D = b·V.
    let c = smith.v.left_mul_vec(b)?;
    let mut y = Vec::with_capacity(c.len());
    for (ci, di) in c.iter().zip(smith.invariants()) {
        let (q, r) = ci.div_rem(&di);
        if !r.is_zero() {
            return Ok(None);
        }
        y.push(q);
    }
    Ok(Some(smith.u.left_mul_vec(&y)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::field::int_determinant;
    use crate::{Int, IntMatrix};
    use proptest::prelude::*;
    use num_traits::Zero;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
            .unwrap()
    }

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    fn is_unimodular(u: &IntMatrix) -> bool {
        int_determinant(u).unwrap().abs() == Int::from(1)
    }

    fn is_hnf(h: &IntMatrix) -> bool {
        let n = h.nrows();
        (0..n).all(|i| {
            let p = &h[(i, i)];
            p.is_positive()
                && (0..i).all(|j| h[(i, j)].is_zero())
                && (0..i).all(|k| !h[(k, i)].is_negative() && &h[(k, i)] < p)
        })
    }

    #[test]
    fn hnf_identity() {
        let id = IntMatrix::identity(2);
        let (h, u) = hnf(&id).unwrap();
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_of_index_six_sublattice() {
        let m = im(&[&[6, 0], &[2, 1]]);
        let (h, u) = hnf(&m).unwrap();
        assert_eq!(h, im(&[&[2, 1], &[0, 3]]));
        assert_eq!(&u * &m, h);
        assert!(is_unimodular(&u));
    }

    #[test]
    fn hnf_rejects_dependent_rows() {
        assert_eq!(hnf(&im(&[&[1, 2], &[2, 4]])).unwrap_err(), Error::RankDeficient);
    }

    #[test]
    fn hnf_works_on_machine_integers() {
        let m = Matrix::from_rows(vec![vec![6i64, 0], vec![2, 1]]).unwrap();
        let (h, _) = hnf(&m).unwrap();
        assert_eq!(h.into_rows(), vec![vec![2, 1], vec![0, 3]]);
    }

    #[test]
    fn echelon_kernel_of_stacked_bases() {
        // 2Z² stacked on 3Z²: kernel rows x satisfy x·S = 0.
        let s = im(&[&[2, 0], &[0, 2], &[3, 0], &[0, 3]]);
        let ech = Echelon::compute(&s);
        assert_eq!(ech.rank, 2);
        assert_eq!(ech.basis(), IntMatrix::identity(2));
        let k = ech.left_kernel();
        assert_eq!(k.nrows(), 2);
        assert!((&k * &s).entries().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn snf_identity_and_examples() {
        let id = IntMatrix::identity(2);
        let s = snf(&id).unwrap();
        assert_eq!((s.d.clone(), s.u.clone(), s.v.clone()), (id.clone(), id.clone(), id));

        let m = im(&[&[6, 0], &[2, 1]]);
        let s = snf(&m).unwrap();
        assert_eq!(s.d, im(&[&[1, 0], &[0, 6]]));
        assert_eq!(&(&s.u * &m) * &s.v, s.d);
        assert!(is_unimodular(&s.u) && is_unimodular(&s.v));

        let m = im(&[&[2, 0], &[0, 4]]);
        assert_eq!(snf(&m).unwrap().d, m);
    }

    #[test]
    fn snf_fixes_divisibility() {
        let m = im(&[&[2, 0], &[0, 3]]);
        assert_eq!(snf(&m).unwrap().d, im(&[&[1, 0], &[0, 6]]));
        let m = im(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]);
        assert_eq!(snf(&m).unwrap().invariants(), iv(&[2, 2, 60]));
    }

    /// Brute-force the quotient Z²/L on a window: count classes of points
    /// modulo L, and find the largest element order.
    #[test]
    fn snf_matches_brute_force_quotient() {
        let m = im(&[&[6, 0], &[2, 1]]);
        let ech = Echelon::compute(&m);
        let in_lattice = |x: i64, y: i64| ech.solve_left(&iv(&[x, y])).is_some();
        let mut reps: Vec<(i64, i64)> = Vec::new();
        for x in 0..12 {
            for y in 0..12 {
                if !reps.iter().any(|&(a, b)| in_lattice(x - a, y - b)) {
                    reps.push((x, y));
                }
            }
        }
        assert_eq!(reps.len(), 6);
        let order = |(x, y): (i64, i64)| (1..=6).find(|&k| in_lattice(k * x, k * y)).unwrap();
        assert_eq!(reps.iter().map(|&r| order(r)).max(), Some(6));
        assert_eq!(snf(&m).unwrap().invariants(), iv(&[1, 6]));
    }

    #[test]
    fn solve_integer_examples() {
        let id = IntMatrix::identity(2);
        assert_eq!(solve_integer(&id, &iv(&[3, -5])).unwrap(), Some(iv(&[3, -5])));
        let two = im(&[&[2, 0], &[0, 2]]);
        assert_eq!(solve_integer(&two, &iv(&[1, 0])).unwrap(), None);
        let m = im(&[&[6, 0], &[2, 1]]);
        let x = solve_integer(&m, &iv(&[4, 2])).unwrap().unwrap();
        assert_eq!(m.left_mul_vec(&x).unwrap(), iv(&[4, 2]));
        // exhaustive small-coefficient search agrees: (0, 2) is the only solution
        let hits: Vec<_> = (-5..=5i64)
            .flat_map(|a| (-5..=5i64).map(move |b| (a, b)))
            .filter(|&(a, b)| 6 * a + 2 * b == 4 && b == 2)
            .collect();
        assert_eq!(hits, vec![(0, 2)]);
        assert_eq!(x, iv(&[0, 2]));
        assert!(solve_integer(&im(&[&[1, 1], &[1, 1]]), &iv(&[1, 1])).is_err());
    }

    /// Random unimodular matrix as a product of elementary integer row operations.
    fn unimodular(n: usize, ops: &[(usize, usize, i64, bool)]) -> IntMatrix {
        let mut u = IntMatrix::identity(n);
        for &(i, j, f, neg) in ops {
            let (i, j) = (i % n, j % n);
            if i != j {
                row_axpy(&mut u, i, j, &Int::from(f));
            }
            if neg {
                negate_row(&mut u, i);
            }
            u.swap_rows(0, j);
        }
        u
    }

    fn nonsingular(n: usize) -> impl Strategy<Value = IntMatrix> {
        prop::collection::vec(-9i64..=9, n * n)
            .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(Int::from).collect()).unwrap())
            .prop_filter("singular", |m| !int_determinant(m).unwrap().is_zero())
    }

    fn ops() -> impl Strategy<Value = Vec<(usize, usize, i64, bool)>> {
        prop::collection::vec((0usize..4, 0usize..4, -3i64..=3, any::<bool>()), 1..12)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn hnf_is_canonical_and_idempotent(m in nonsingular(3), o in prop::collection::vec(ops(), 20)) {
            let (h, u) = hnf(&m).unwrap();
            prop_assert!(is_hnf(&h));
            prop_assert!(is_unimodular(&u));
            prop_assert_eq!(&(&u * &m), &h);
            prop_assert_eq!(&hnf(&h).unwrap().0, &h);
            for ops in o {
                let w = unimodular(3, &ops);
                prop_assert!(is_unimodular(&w));
                prop_assert_eq!(&hnf(&(&w * &m)).unwrap().0, &h);
            }
        }

        #[test]
        fn snf_divisor_chain(m in nonsingular(3)) {
            let s = snf(&m).unwrap();
            prop_assert_eq!(&(&(&s.u * &m) * &s.v), &s.d);
            prop_assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
            let d = s.invariants();
            for i in 0..3 {
                for j in 0..3 {
                    prop_assert!(i == j || s.d[(i, j)].is_zero());
                }
                prop_assert!(d[i].is_positive());
            }
            prop_assert!(d.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
            let prod = d.iter().fold(Int::from(1), |a, x| a * x);
            prop_assert_eq!(prod, int_determinant(&m).unwrap().abs());
        }

        #[test]
        fn solve_integer_agrees_with_echelon(m in nonsingular(3), b in prop::collection::vec(-20i64..=20, 3)) {
            let b = iv(&b);
            let via_snf = solve_integer(&m, &b).unwrap();
            let via_hnf = Echelon::compute(&m).solve_left(&b);
            prop_assert_eq!(via_snf.is_some(), via_hnf.is_some());
            if let Some(x) = via_snf {
                prop_assert_eq!(m.left_mul_vec(&x).unwrap(), b);
            }
        }
    }
}
