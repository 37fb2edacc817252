//! Brute-force window census: classify every parent point in a coordinate
//! box directly, without any lattice intersection, and compare what is seen
//! with the lattice-algebra analysis.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::Zero;

use super::{csl, ColouringAnalysis, CommensurableMap};
use crate::error::Result;
use crate::lattice::Colouring;
use crate::ratmat::{self, Matrix};
use crate::{Int, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub radius: u64,
    /// Parent points examined, `(2r + 1)^d`.
    pub points: u64,
    /// Points of `Γ₁(A⁻¹)` in the window.
    pub csl_inv_points: u64,
    /// Points of `Γ₁(A)` in the window.
    pub csl_points: u64,
    /// Colours seen on `Γ₁(A⁻¹)`.
    pub observed_i: Vec<usize>,
    /// Colours seen on `Γ₁(A)`.
    pub observed_j: Vec<usize>,
    /// `(colour of p, colour of A·p)` counts over points `p` of `Γ₁(A⁻¹)`.
    pub transfer: BTreeMap<(usize, usize), u64>,
}

impl Census {
    pub fn images_of(&self, colour: usize) -> Vec<usize> {
        self.transfer.keys().filter(|&&(i, _)| i == colour).map(|&(_, j)| j).collect()
    }

    pub fn preimages_of(&self, colour: usize) -> Vec<usize> {
        self.transfer.keys().filter(|&&(_, j)| j == colour).map(|&(i, _)| i).collect()
    }

    /// Every source colour has a single image.
    pub fn is_function(&self) -> bool {
        let sources: BTreeSet<usize> = self.transfer.keys().map(|&(i, _)| i).collect();
        sources.len() == self.transfer.len()
    }

    pub fn is_partial_bijection(&self) -> bool {
        let targets: BTreeSet<usize> = self.transfer.keys().map(|&(_, j)| j).collect();
        self.is_function() && targets.len() == self.transfer.len()
    }

    pub fn fixes_zero(&self) -> bool {
        self.images_of(0) == [0]
    }
}

/// `A` in parent-basis coordinates, as `N / D` with `N` integral.
fn coordinate_action(colouring: &Colouring, a: &ratmat::Matrix<crate::Rational>) -> Result<(IntMatrix, Int)> {
    let basis = colouring.parent().basis();
    let in_coords = basis.checked_mul(&a.transpose())?.checked_mul(&ratmat::inverse(basis)?)?;
    Ok(ratmat::clear_denominators(&in_coords))
}

/// Parent coordinates of the image, if the image lies in the parent.
fn act(y: &[Int], action: &(IntMatrix, Int)) -> Option<Vec<Int>> {
    let w = action.0.left_mul_vec(y).expect("dimension");
    let mut out = Vec::with_capacity(w.len());
    for x in w {
        let (q, r) = x.div_rem(&action.1);
        if !r.is_zero() {
            return None;
        }
        out.push(q);
    }
    Some(out)
}


/// Visits every integer vector in `[lo, hi)^dim`.
fn for_each_in_box(dim: usize, lo: i64, hi: i64, mut f: impl FnMut(&[Int]) -> Result<()>) -> Result<()> {
    if hi <= lo {
        return Ok(());
    }
    let mut cur = vec![lo; dim];
    loop {
        let y: Vec<Int> = cur.iter().map(|&x| Int::from(x)).collect();
        f(&y)?;
        let mut k = dim;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < hi {
                break;
            }
            cur[k] = lo;
        }
    }
}

/// Classifies every parent point with coordinates in `[−radius, radius]^d`.
pub fn window_census(colouring: &Colouring, map: &CommensurableMap, radius: u64) -> Result<Census> {
    let forward = coordinate_action(colouring, map.matrix())?;
    let backward = coordinate_action(colouring, map.inverse_matrix())?;
    let r = radius as i64;
    let mut census = Census {
        radius,
        points: 0,
        csl_inv_points: 0,
        csl_points: 0,
        observed_i: Vec::new(),
        observed_j: Vec::new(),
        transfer: BTreeMap::new(),
    };
    let (mut seen_i, mut seen_j) = (BTreeSet::new(), BTreeSet::new());
    for_each_in_box(colouring.dim(), -r, r + 1, |y| {
        census.points += 1;
        let colour = colouring.colour_of_coords(y)?;
        if let Some(image) = act(y, &forward) {
            census.csl_inv_points += 1;
            seen_i.insert(colour);
            let target = colouring.colour_of_coords(&image)?;
            *census.transfer.entry((colour, target)).or_insert(0) += 1;
        }
        if act(y, &backward).is_some() {
            census.csl_points += 1;
            seen_j.insert(colour);
        }
        Ok(())
    })?;
    census.observed_i = seen_i.into_iter().collect();
    census.observed_j = seen_j.into_iter().collect();
    Ok(census)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Agrees,
    /// Nothing contradicts the analysis, but the window is too small to
    /// confirm it.
    Inconclusive(String),
    Contradicts(String),
}

impl Verdict {
    pub fn is_contradiction(&self) -> bool {
        matches!(self, Verdict::Contradicts(_))
    }
}

/// Compares a census with the lattice-algebra analysis of the same input.
pub fn concordance(analysis: &ColouringAnalysis, census: &Census) -> Verdict {
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
    if !subset(&census.observed_i, &analysis.set_i) {
        return Verdict::Contradicts(format!(
            "colours {:?} seen on Γ₁(A⁻¹) but I = {:?}",
            census.observed_i, analysis.set_i
        ));
    }
    if !subset(&census.observed_j, &analysis.set_j) {
        return Verdict::Contradicts(format!(
            "colours {:?} seen on Γ₁(A) but J = {:?}",
            census.observed_j, analysis.set_j
        ));
    }
    let looks_like_bijection = census.is_partial_bijection() && census.fixes_zero();
    match &analysis.permutation {
        Some(perm) => {
            if !looks_like_bijection {
                return Verdict::Contradicts("colour coincidence, yet the window transfer is not a bijection fixing colour 0".into());
            }
            if let Some(pair) = census.transfer.keys().find(|p| !perm.contains(p)) {
                return Verdict::Contradicts(format!("window sends colour {} to {}, not as permuted", pair.0, pair.1));
            }
        }
        None => {
            if looks_like_bijection {
                return Verdict::Inconclusive("window does not yet show colour 0 being split or merged".into());
            }
        }
    }
    if census.observed_i != analysis.set_i || census.observed_j != analysis.set_j {
        return Verdict::Inconclusive("window does not reach every colour of I and J".into());
    }
    Verdict::Agrees
}

/// Doubles the radius from `start` until the verdict is settled or the
/// radius would exceed `max`.
pub fn census_until_stable(
    colouring: &Colouring,
    map: &CommensurableMap,
    analysis: &ColouringAnalysis,
    start: u64,
    max: u64,
) -> Result<(Census, Verdict)> {
    let mut radius = start.max(1);
    loop {
        let census = window_census(colouring, map, radius)?;
        let verdict = concordance(analysis, &census);
        if !matches!(verdict, Verdict::Inconclusive(_)) || radius * 2 > max {
            return Ok((census, verdict));
        }
        radius *= 2;
    }
}

/// Colour-0 count over a box of `Γ₁(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCount {
    pub side: u64,
    pub total: u64,
    pub colour_zero: u64,
}

/// Counts colour-0 points among `y·B` for `y ∈ [0, side)^d`, `B` a basis of
/// `Γ₁(A)`. When `side` is a multiple of `t`, the box is a whole number of
/// cells of `t·Γ₁(A) ⊆ Γ₂ ∩ Γ₁(A)`, so exactly `total / t` points are black.
pub fn colour_zero_cells(colouring: &Colouring, map: &CommensurableMap, side: u64) -> Result<CellCount> {
    let site = csl(colouring.parent(), map)?;
    let basis: &Matrix<crate::Rational> = site.basis();
    let mut count = CellCount { side, total: 0, colour_zero: 0 };
    for_each_in_box(colouring.dim(), 0, side as i64, |y| {
        let p = basis.left_mul_vec(&ratmat::vec_to_rational(y))?;
        count.total += 1;
        if colouring.colour_of(&p)? == 0 {
            count.colour_zero += 1;
        }
        Ok(())
    })?;
    Ok(count)
}
