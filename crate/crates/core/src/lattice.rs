//! Full-rank lattices in Q^d held in canonical form, and the colourings a
//! sublattice induces on its parent.
//!
//! A lattice is stored as `H / D` where `D` is the least positive integer
//! with `D·L ⊆ Z^d` and `H` is the row Hermite normal form of `D·L`. Both
//! are invariants of the point set, so equality of lattices is equality of
//! `(H, D)`.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::coincidence::CommensurableMap;
use crate::error::{Error, Result};
use crate::ratmat::{self, hnf, snf, Echelon, Matrix};
use crate::{Int, IntMatrix, RatMatrix, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    hnf: IntMatrix,
    denom: Int,
    basis: RatMatrix,
    det_abs: Rational,
}

impl Lattice {
    /// Canonicalizes the Z-span of the rows of `basis`.
    pub fn new(basis: &RatMatrix) -> Result<Self> {
        if !basis.is_square() {
            return Err(Error::Shape {
                rows: basis.nrows(),
                cols: basis.ncols(),
                reason: "lattice basis must be square",
            });
        }
        let (n, d) = ratmat::clear_denominators(basis);
        Self::from_scaled(n, d)
    }

    /// `Z^d`.
    pub fn standard(dim: usize) -> Result<Self> {
        Self::new(&RatMatrix::identity(dim))
    }

    /// Lattice spanned by the rows of `n / d`. `n` must be square.
    fn from_scaled(n: IntMatrix, d: Int) -> Result<Self> {
        let dim = n.nrows();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let (h, _) = hnf(&n)?;
        let content = h.entries().iter().fold(d.clone(), |g, x| g.gcd(x));
        let (h, d) = if content.is_one() {
            (h, d)
        } else {
            (h.map(|x| x / &content), d / &content)
        };
        let dr = Rational::from_integer(d.clone());
        let basis = h.map(|x| Rational::from_integer(x.clone()) / &dr);
        let diag = (0..dim).fold(Int::one(), |acc, i| acc * &h[(i, i)]);
        let det_abs = Rational::new(diag, num_traits::pow(d.clone(), dim));
        Ok(Lattice { hnf: h, denom: d, basis, det_abs })
    }

    pub fn dim(&self) -> usize {
        self.hnf.nrows()
    }

    /// Canonical basis; rows are generators.
    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn integer_basis(&self) -> &IntMatrix {
        &self.hnf
    }

    pub fn denominator(&self) -> &Int {
        &self.denom
    }

    pub fn det_abs(&self) -> &Rational {
        &self.det_abs
    }

    /// The integer basis rescaled to the common denominator `d`, which must
    /// be a multiple of [`Lattice::denominator`].
    fn scaled_basis(&self, d: &Int) -> IntMatrix {
        let f = d / &self.denom;
        self.hnf.map(|x| x * &f)
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found });
        }
        Ok(())
    }

    /// Integer coordinates of `v` in the canonical basis, if `v` lies in the lattice.
    pub fn coords(&self, v: &[Rational]) -> Result<Option<Vec<Int>>> {
        self.check_dim(v.len())?;
        let dr = Rational::from_integer(self.denom.clone());
        let mut w = Vec::with_capacity(v.len());
        for x in v {
            let y = x * &dr;
            if !y.is_integer() {
                return Ok(None);
            }
            w.push(y.to_integer());
        }
        // Forward substitution against the upper triangular H.
        let n = self.dim();
        let mut coords: Vec<Int> = Vec::with_capacity(n);
        for j in 0..n {
            let partial = coords
                .iter()
                .enumerate()
                .fold(w[j].clone(), |acc, (i, c)| acc - c * &self.hnf[(i, j)]);
            let (q, r) = partial.div_rem(&self.hnf[(j, j)]);
            if !r.is_zero() {
                return Ok(None);
            }
            coords.push(q);
        }
        Ok(Some(coords))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.coords(v)?.is_some())
    }

    /// `coords · basis`.
    pub fn point(&self, coords: &[Int]) -> Result<Vec<Rational>> {
        self.check_dim(coords.len())?;
        self.basis.left_mul_vec(&ratmat::vec_to_rational(coords))
    }

    /// Image lattice under `v ↦ v·Aᵀ`.
    pub fn image(&self, a: &RatMatrix) -> Result<Self> {
        self.check_dim(a.nrows())?;
        let img = self.basis.checked_mul(&a.transpose())?;
        Lattice::new(&img).map_err(|e| if e == Error::RankDeficient { Error::Singular } else { e })
    }

    pub fn is_sublattice_of(&self, sup: &Lattice) -> Result<bool> {
        is_sublattice(self, sup)
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice({})", self.basis)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)
    }
}

fn same_dim(a: &Lattice, b: &Lattice) -> Result<()> {
    a.check_dim(b.dim())
}

pub fn contains(lattice: &Lattice, v: &[Rational]) -> Result<bool> {
    lattice.contains(v)
}

pub fn is_sublattice(sub: &Lattice, sup: &Lattice) -> Result<bool> {
    same_dim(sub, sup)?;
    for row in sub.basis.rows() {
        if !sup.contains(row)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[sup : sub]`.
pub fn index(sup: &Lattice, sub: &Lattice) -> Result<Int> {
    if !is_sublattice(sub, sup)? {
        return Err(Error::NotASublattice);
    }
    let ratio = sub.det_abs() / sup.det_abs();
    if !ratio.is_integer() {
        return Err(Error::InternalInvariantViolation(format!(
            "index {ratio} of a sublattice is not integral"
        )));
    }
    Ok(ratio.to_integer())
}

/// Common denominator and the stacked integer bases `[B1·D; B2·D]`.
fn stacked(a: &Lattice, b: &Lattice) -> (IntMatrix, Int) {
    let d = a.denom.lcm(&b.denom);
    let s = a.scaled_basis(&d).vstack(&b.scaled_basis(&d)).expect("equal dimensions");
    (s, d)
}

/// `L1 ∩ L2`, from the integer left kernel of the stacked bases.
pub fn intersect(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    same_dim(a, b)?;
    let n = a.dim();
    let (s, d) = stacked(a, b);
    let ech = Echelon::compute(&s);
    // x·B1 + y·B2 = 0  ⇔  x·B1 = (−y)·B2 is a common point.
    let kernel = ech.left_kernel().select_cols(0..n);
    let points = kernel.checked_mul(&s.select_rows(0..n))?;
    Lattice::from_scaled(points, d)
}

/// `L1 + L2`, the smallest lattice containing both.
pub fn sum(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    same_dim(a, b)?;
    let (s, d) = stacked(a, b);
    let ech = Echelon::compute(&s);
    Lattice::from_scaled(ech.basis(), d)
}

/// `A·L` with `A` acting on row vectors as `v ↦ v·Aᵀ`.
pub fn transform(map: &CommensurableMap, lattice: &Lattice) -> Result<Lattice> {
    lattice.image(map.matrix())
}

/// Smith data presenting `parent / sub`. Parent coordinates `y` of a point
/// reduce to the key `(y·V) mod d`, which identifies its coset.
#[derive(Clone, Debug)]
struct QuotientChart {
    v: IntMatrix,
    v_inv: IntMatrix,
    invariants: Vec<Int>,
}

impl QuotientChart {
    fn new(parent: &Lattice, sub: &Lattice) -> Result<Self> {
        if !is_sublattice(sub, parent)? {
            return Err(Error::NotASublattice);
        }
        let mut rows = Vec::with_capacity(sub.dim());
        for r in sub.basis.rows() {
            rows.push(parent.coords(r)?.ok_or(Error::NotASublattice)?);
        }
        let c = Matrix::from_rows(rows)?;
        let smith = snf(&c)?;
        let v_inv = ratmat::to_integer(&ratmat::inverse(&ratmat::to_rational(&smith.v))?)
            .ok_or_else(|| Error::InternalInvariantViolation("Smith transform not unimodular".into()))?;
        Ok(QuotientChart { invariants: smith.invariants(), v: smith.v, v_inv })
    }

    fn order(&self) -> Int {
        self.invariants.iter().product()
    }

    fn key(&self, parent_coords: &[Int]) -> Vec<Int> {
        let z = self.v.left_mul_vec(parent_coords).expect("dimension checked");
        z.iter().zip(&self.invariants).map(|(x, d)| x.mod_floor(d)).collect()
    }

    /// All keys in mixed-radix order, first invariant most significant.
    fn all_keys(&self) -> Vec<Vec<Int>> {
        let mut keys = vec![Vec::new()];
        for d in &self.invariants {
            let mut next = Vec::new();
            for k in &keys {
                let mut i = Int::zero();
                while &i < d {
                    let mut nk = k.clone();
                    nk.push(i.clone());
                    next.push(nk);
                    i += 1;
                }
            }
            keys = next;
        }
        keys
    }
}

/// `m = [parent : sub]` coset representatives, the first being zero.
pub fn coset_reps(parent: &Lattice, sub: &Lattice) -> Result<Vec<Vec<Rational>>> {
    let chart = QuotientChart::new(parent, sub)?;
    chart
        .all_keys()
        .iter()
        .map(|z| parent.point(&chart.v_inv.left_mul_vec(z)?))
        .collect()
}

/// A point of `(rep + sub) ∩ lattice`, or `None` when that set is empty.
pub fn coset_meets_lattice(
    rep: &[Rational],
    sub: &Lattice,
    lattice: &Lattice,
) -> Result<Option<Vec<Rational>>> {
    same_dim(sub, lattice)?;
    sub.check_dim(rep.len())?;
    let n = sub.dim();
    let d = ratmat::common_denominator(rep).lcm(&sub.denom).lcm(&lattice.denom);
    let s = sub.scaled_basis(&d).vstack(&lattice.scaled_basis(&d))?;
    let dr = Rational::from_integer(d.clone());
    let target: Vec<Int> = rep.iter().map(|x| (x * &dr).to_integer()).collect();
    // rep = a + b with a ∈ sub, b ∈ lattice; then rep − a is the witness.
    let Some(x) = Echelon::compute(&s).solve_left(&target) else {
        return Ok(None);
    };
    let a = sub.scaled_basis(&d).left_mul_vec(&x[..n])?;
    let witness: Vec<Rational> =
        rep.iter().zip(&a).map(|(r, ai)| r - Rational::from_integer(ai.clone()) / &dr).collect();
    let offset: Vec<Rational> = witness.iter().zip(rep).map(|(w, r)| w - r).collect();
    if !lattice.contains(&witness)? || !sub.contains(&offset)? {
        return Err(Error::InternalInvariantViolation("coset witness failed membership".into()));
    }
    Ok(Some(witness))
}

/// The colouring of `parent` that gives each coset of `sub` its own colour.
/// Colour `i` is the coset of `reps[i]`; colour 0 is `sub` itself.
#[derive(Clone, Debug)]
pub struct Colouring {
    parent: Lattice,
    sub: Lattice,
    reps: Vec<Vec<Rational>>,
    chart: QuotientChart,
    colour_by_key: HashMap<Vec<Int>, usize>,
}

impl Colouring {
    /// Uses the canonical representatives from [`coset_reps`].
    pub fn new(parent: Lattice, sub: Lattice) -> Result<Self> {
        let reps = coset_reps(&parent, &sub)?;
        Self::with_reps(parent, sub, reps)
    }

    /// Uses caller-supplied representatives, which are validated.
    pub fn with_reps(parent: Lattice, sub: Lattice, reps: Vec<Vec<Rational>>) -> Result<Self> {
        let chart = QuotientChart::new(&parent, &sub)?;
        let m = chart.order();
        if Int::from(reps.len()) != m {
            return Err(Error::InvalidReps(format!("expected {m} representatives, got {}", reps.len())));
        }
        if !reps[0].iter().all(Zero::is_zero) {
            return Err(Error::InvalidReps("first representative must be the zero vector".into()));
        }
        let mut colour_by_key = HashMap::with_capacity(reps.len());
        for (i, r) in reps.iter().enumerate() {
            let y = parent
                .coords(r)?
                .ok_or_else(|| Error::InvalidReps(format!("representative {i} is not in the parent")))?;
            if let Some(j) = colour_by_key.insert(chart.key(&y), i) {
                return Err(Error::InvalidReps(format!("representatives {j} and {i} share a coset")));
            }
        }
        Ok(Colouring { parent, sub, reps, chart, colour_by_key })
    }

    pub fn parent(&self) -> &Lattice {
        &self.parent
    }

    pub fn sub(&self) -> &Lattice {
        &self.sub
    }

    pub fn reps(&self) -> &[Vec<Rational>] {
        &self.reps
    }

    /// Number of colours, `[parent : sub]`.
    pub fn m(&self) -> usize {
        self.reps.len()
    }

    pub fn dim(&self) -> usize {
        self.parent.dim()
    }

    pub fn colour_of(&self, v: &[Rational]) -> Result<usize> {
        let y = self.parent.coords(v)?.ok_or(Error::NotInParent)?;
        self.colour_of_coords(&y)
    }

    /// Colour of the parent point with the given canonical-basis coordinates.
    pub fn colour_of_coords(&self, parent_coords: &[Int]) -> Result<usize> {
        self.parent.check_dim(parent_coords.len())?;
        self.colour_by_key
            .get(&self.chart.key(parent_coords))
            .copied()
            .ok_or_else(|| Error::InternalInvariantViolation("coset key without a colour".into()))
    }
}

pub fn colour_of(colouring: &Colouring, v: &[Rational]) -> Result<usize> {
    colouring.colour_of(v)
}
