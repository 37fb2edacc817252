//! The eightfold cyclotomic module `Z[ξ]`, `ξ = e^{iπ/4}`, as a rank-4
//! lattice in the coefficient basis `{1, ξ, ξ², ξ³}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::coincidence::CommensurableMap;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::ratmat::{parse_rational, rat, rat_int, to_f64, Matrix};
use crate::{RatMatrix, Rational};

/// `a₀ + a₁ξ + a₂ξ² + a₃ξ³` with rational coefficients, reduced by `ξ⁴ = −1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyc8 {
    coeffs: [Rational; 4],
}

impl Cyc8 {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        Cyc8 { coeffs }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Cyc8 { coeffs: c.map(rat_int) }
    }

    /// Parses four `p/q` coefficient strings.
    pub fn parse<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        if coeffs.len() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: coeffs.len() });
        }
        let c: Vec<Rational> = coeffs.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<_>>()?;
        Ok(Cyc8 { coeffs: c.try_into().expect("length checked") })
    }

    pub fn xi() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    /// The rotation through `θ` with `cos θ = −1/3`, `sin θ = 2√2/3`.
    ///
    /// `ξ + ξ³ = i√2`, so `(−1 + 2ξ + 2ξ³)/3 = (−1 + 2√2·i)/3`, a unit-modulus
    /// number with `tan θ = −2√2` (θ ≈ 109.47°).
    pub fn ammann_beenker_rotation() -> Self {
        Cyc8 { coeffs: [rat(-1, 3), rat(2, 3), rat_int(0), rat(2, 3)] }
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    /// Complex conjugation, `ξ ↦ ξ⁻¹ = −ξ³`.
    pub fn conj(&self) -> Self {
        let [a0, a1, a2, a3] = &self.coeffs;
        Cyc8 { coeffs: [a0.clone(), -a3.clone(), -a2.clone(), -a1.clone()] }
    }

    /// Galois automorphism `ξ ↦ ξ^k` for odd `k`.
    pub fn galois(&self, k: usize) -> Self {
        assert!(k % 2 == 1, "Galois exponent must be odd");
        let mut out: [Rational; 4] = Default::default();
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i * k) % 8;
            if e < 4 {
                out[e] += c;
            } else {
                out[e - 4] -= c;
            }
        }
        Cyc8 { coeffs: out }
    }

    /// Multiplication by `self` on the basis `{1, ξ, ξ², ξ³}`: row `i` holds
    /// the coefficients of `self·ξⁱ`, so a coefficient row vector `w` maps to
    /// `w·M = self·w`.
    pub fn mul_matrix(&self) -> Result<RatMatrix> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let rows = (0..4).map(|i| (self * &xi_pow(i)).coeffs.to_vec()).collect();
        Matrix::from_rows(rows)
    }

    /// Norm down to `Q`: the product of the four Galois conjugates.
    pub fn norm(&self) -> Rational {
        // z·σ₅(z) is fixed by ξ ↦ −ξ, so it lies in Q(i) = Q(ξ²).
        let w = self * &self.galois(5);
        debug_assert!(w.coeffs[1].is_zero() && w.coeffs[3].is_zero());
        let (re, im) = (&w.coeffs[0], &w.coeffs[2]);
        re * re + im * im
    }

    /// `z·z̄ = 1`.
    pub fn is_unit_modulus(&self) -> bool {
        (self * &self.conj()).is_one()
    }

    /// Multiplication by `self` as a map on coefficient vectors.
    pub fn multiplication_map(&self) -> Result<CommensurableMap> {
        CommensurableMap::new(self.mul_matrix()?.transpose())
    }

    /// Physical-plane position: `(x, y)`, each as `(rational part, coefficient of √2)`.
    pub fn star_embedding(&self) -> [(Rational, Rational); 2] {
        let [a0, a1, a2, a3] = &self.coeffs;
        let half = rat(1, 2);
        [
            (a0.clone(), (a1 - a3) * &half),
            (a2.clone(), (a1 + a3) * &half),
        ]
    }
}

fn xi_pow(i: usize) -> Cyc8 {
    let mut c = [0i64; 4];
    c[i] = 1;
    Cyc8::from_ints(c)
}

/// The principal submodule `z·Z[ξ]` as a lattice in coefficient space.
pub fn principal_submodule(z: &Cyc8) -> Result<Lattice> {
    Lattice::new(&z.mul_matrix()?)
}

/// `Z[ξ]` itself, i.e. `Z⁴`.
pub fn standard_module() -> Lattice {
    Lattice::standard(4).expect("rank 4")
}

/// Evaluates a star-embedding coordinate at display precision.
pub fn embed_f64(coord: &(Rational, Rational)) -> f64 {
    to_f64(&coord.0) + to_f64(&coord.1) * std::f64::consts::SQRT_2
}

impl Zero for Cyc8 {
    fn zero() -> Self {
        Cyc8 { coeffs: Default::default() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for Cyc8 {
    fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }
}

impl Add for &Cyc8 {
    type Output = Cyc8;
    fn add(self, rhs: &Cyc8) -> Cyc8 {
        Cyc8 { coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]) }
    }
}

impl Sub for &Cyc8 {
    type Output = Cyc8;
    fn sub(self, rhs: &Cyc8) -> Cyc8 {
        Cyc8 { coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]) }
    }
}

impl Neg for &Cyc8 {
    type Output = Cyc8;
    fn neg(self) -> Cyc8 {
        Cyc8 { coeffs: std::array::from_fn(|i| -&self.coeffs[i]) }
    }
}

impl Mul for &Cyc8 {
    type Output = Cyc8;
    fn mul(self, rhs: &Cyc8) -> Cyc8 {
        let mut out: [Rational; 4] = Default::default();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let p = a * b;
                if i + j < 4 {
                    out[i + j] += p;
                } else {
                    out[i + j - 4] -= p;
                }
            }
        }
        Cyc8 { coeffs: out }
    }
}

// `Zero` and `One` need owned operators.
impl Add for Cyc8 {
    type Output = Cyc8;
    fn add(self, rhs: Cyc8) -> Cyc8 {
        &self + &rhs
    }
}

impl Mul for Cyc8 {
    type Output = Cyc8;
    fn mul(self, rhs: Cyc8) -> Cyc8 {
        &self * &rhs
    }
}

impl fmt::Display for Cyc8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1, a2, a3] = &self.coeffs;
        write!(f, "({a0}) + ({a1})ξ + ({a2})ξ² + ({a3})ξ³")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::index;
    use crate::ratmat::{determinant, rat_matrix};
    use crate::Int;
    use proptest::prelude::*;
    use num_traits::Signed;

    #[test]
    fn ring_relation() {
        let xi = Cyc8::xi();
        let xi4 = &(&xi * &xi) * &(&xi * &xi);
        assert_eq!(xi4, -&Cyc8::one());
        assert_eq!(&xi * &xi.conj(), Cyc8::one());
    }

    #[test]
    fn multiplication_matrices() {
        assert!(Cyc8::one().mul_matrix().unwrap().is_identity());
        let m = Cyc8::xi().mul_matrix().unwrap();
        assert_eq!(
            m,
            rat_matrix(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0]])
        );
        let z = Cyc8::ammann_beenker_rotation();
        let mz = z.mul_matrix().unwrap();
        assert!(mz.entries().iter().any(|x| x.denom() == &Int::from(3)));
        assert_eq!(determinant(&mz).unwrap(), rat_int(1));
        assert_eq!(Cyc8::zero().mul_matrix(), Err(Error::ZeroElement));
    }

    #[test]
    fn rotation_element_has_the_right_angle() {
        // √2 = ξ − ξ³ and i√2 = ξ + ξ³.
        let sqrt2 = Cyc8::from_ints([0, 1, 0, -1]);
        let i_sqrt2 = Cyc8::from_ints([0, 1, 0, 1]);
        assert_eq!(&sqrt2 * &sqrt2, Cyc8::from_ints([2, 0, 0, 0]));
        assert_eq!(&i_sqrt2 * &i_sqrt2, Cyc8::from_ints([-2, 0, 0, 0]));
        let z = Cyc8::ammann_beenker_rotation();
        let [x, y] = z.star_embedding();
        assert_eq!(x, (rat(-1, 3), rat_int(0)));
        assert_eq!(y, (rat_int(0), rat(2, 3)));
        let (cos, sin) = (embed_f64(&x), embed_f64(&y));
        assert!((sin / cos + 2.0 * 2f64.sqrt()).abs() < 1e-12);
        assert!((sin.atan2(cos).to_degrees() - 109.47).abs() < 0.01);
    }

    #[test]
    fn norms() {
        assert_eq!(Cyc8::one().norm(), rat_int(1));
        assert_eq!(Cyc8::from_ints([1, 0, 1, 0]).norm(), rat_int(4));
        assert_eq!(Cyc8::ammann_beenker_rotation().norm(), rat_int(1));
        assert_eq!(Cyc8::from_ints([1, 1, 0, 0]).norm(), rat_int(2));
    }

    #[test]
    fn unit_modulus() {
        assert!(Cyc8::xi().is_unit_modulus());
        assert!(!Cyc8::from_ints([1, 0, 1, 0]).is_unit_modulus());
        assert!(Cyc8::ammann_beenker_rotation().is_unit_modulus());
        // z·z̄ = 1 and its twin under ξ ↦ ξ³ both hold.
        let z = Cyc8::ammann_beenker_rotation().galois(3);
        assert!(z.is_unit_modulus());
    }

    #[test]
    fn principal_submodules() {
        let m1 = standard_module();
        assert_eq!(principal_submodule(&Cyc8::one()).unwrap(), m1);
        let m2 = principal_submodule(&Cyc8::from_ints([1, 0, 1, 0])).unwrap();
        assert_eq!(index(&m1, &m2).unwrap(), Int::from(4));
        assert_eq!(principal_submodule(&Cyc8::xi()).unwrap(), m1);
    }

    #[test]
    fn multiplication_map_acts_as_multiplication() {
        let z = Cyc8::ammann_beenker_rotation();
        let w = Cyc8::from_ints([2, -1, 3, 5]);
        let map = z.multiplication_map().unwrap();
        let image = map.apply(w.coeffs()).unwrap();
        assert_eq!(image, (&z * &w).coeffs().to_vec());
    }

    fn small() -> impl Strategy<Value = Cyc8> {
        prop::array::uniform4((-6i64..=6, 1i64..=3)).prop_map(|c| Cyc8::new(c.map(|(p, q)| rat(p, q))))
    }

    proptest! {
        #[test]
        fn matrix_is_a_ring_homomorphism(z in small(), w in small()) {
            prop_assume!(!z.is_zero() && !w.is_zero() && !(&z + &w).is_zero());
            let mz = z.mul_matrix().unwrap();
            let mw = w.mul_matrix().unwrap();
            prop_assert_eq!((&z * &w).mul_matrix().unwrap(), &mz * &mw);
            prop_assert_eq!((&z + &w).mul_matrix().unwrap(), &mz + &mw);
        }

        #[test]
        fn determinant_is_norm(z in small()) {
            prop_assume!(!z.is_zero());
            prop_assert_eq!(determinant(&z.mul_matrix().unwrap()).unwrap(), z.norm());
        }

        #[test]
        fn unit_modulus_gives_unit_determinant(a in -4i64..=4, b in -4i64..=4) {
            // (a + b·i√2) / (a − b·i√2) has modulus one.
            prop_assume!(a != 0 || b != 0);
            let num = Cyc8::from_ints([a, b, 0, b]);
            let den = num.conj();
            let n = den.norm();
            // 1/den = conjugates of den over its norm; the norm is rational.
            let other = &(&den.galois(3) * &den.galois(5)) * &den.galois(7);
            let inv = Cyc8::new(other.coeffs().clone().map(|c| c / &n));
            let z = &num * &inv;
            prop_assert!(z.is_unit_modulus());
            prop_assert!(z.galois(3).is_unit_modulus());
            prop_assert_eq!(determinant(&z.mul_matrix().unwrap()).unwrap().abs(), rat_int(1));
        }
    }
}
