//! Coincidence site lattices, coincidence indices and colour coincidences.
//!
//! For a colouring of `Γ₁` by the cosets of `Γ₂` and a map `A`, every index
//! in the diagram relating `Γ₁, AΓ₁, Γ₂, AΓ₂, Γ₁(A) = Γ₁ ∩ AΓ₁` and
//! `Γ₂(A) = Γ₂ ∩ AΓ₂` is computed by lattice algebra:
//!
//! ```text
//! s = [Γ₁(A) : AΓ₂ ∩ Γ₁(A)]        t = [Γ₁(A) : Γ₂ ∩ Γ₁(A)]
//! u = [Γ₂ ∩ Γ₁(A) : Γ₂(A)]          v = [AΓ₂ ∩ Γ₁(A) : Γ₂(A)]
//! m·Σ₂ = t·u·Σ₁ = s·v·Σ₁
//! ```

mod census;
mod map;
mod rotations;

pub use census::{
    census_until_stable, colour_zero_cells, concordance, window_census, Census, CellCount, Verdict,
};
pub use map::CommensurableMap;
pub use rotations::enumerate_square_rotations;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{coset_meets_lattice, index, intersect, transform, Colouring, Lattice};
use crate::{Int, Rational};

fn violation(msg: impl Into<String>) -> Error {
    Error::InternalInvariantViolation(msg.into())
}

fn to_u64(x: Int) -> Result<u64> {
    x.to_u64().ok_or_else(|| violation("index does not fit in 64 bits"))
}

/// `A` is a coincidence map of `L` when `|det A| = 1`: the rational image
/// `AL` is then commensurate with `L` and `L ∩ AL` has finite index in both.
pub fn is_coincidence(lattice: &Lattice, map: &CommensurableMap) -> Result<bool> {
    if lattice.dim() != map.dim() {
        return Err(Error::DimensionMismatch { expected: lattice.dim(), found: map.dim() });
    }
    Ok(map.has_unit_determinant())
}

fn require_coincidence(lattice: &Lattice, map: &CommensurableMap) -> Result<()> {
    if is_coincidence(lattice, map)? {
        Ok(())
    } else {
        Err(Error::NotCoincidence)
    }
}

/// The coincidence site lattice `L ∩ AL`.
pub fn csl(lattice: &Lattice, map: &CommensurableMap) -> Result<Lattice> {
    require_coincidence(lattice, map)?;
    intersect(lattice, &transform(map, lattice)?)
}

/// Coincidence index `[L : L ∩ AL]`, checked against `[AL : L ∩ AL]`.
pub fn sigma(lattice: &Lattice, map: &CommensurableMap) -> Result<Int> {
    require_coincidence(lattice, map)?;
    let image = transform(map, lattice)?;
    let site = intersect(lattice, &image)?;
    let sigma = index(lattice, &site)?;
    if index(&image, &site)? != sigma {
        return Err(violation("[L : L(A)] differs from [AL : L(A)]"));
    }
    Ok(sigma)
}

/// All lattices of the index diagram for one colouring and one map.
struct Diagram {
    csl1: Lattice,
    csl1_inv: Lattice,
    csl2: Lattice,
    /// `Γ₂ ∩ Γ₁(A)`, the colour-0 points of `Γ₁(A)`.
    sub_in_csl1: Lattice,
    /// `AΓ₂ ∩ Γ₁(A)`.
    image_sub_in_csl1: Lattice,
    /// `Γ₂ ∩ Γ₁(A⁻¹)`, the colour-0 points of `Γ₁(A⁻¹)`.
    sub_in_csl1_inv: Lattice,
}

impl Diagram {
    fn build(colouring: &Colouring, map: &CommensurableMap) -> Result<Self> {
        let (g1, g2) = (colouring.parent(), colouring.sub());
        require_coincidence(g1, map)?;
        let csl1 = intersect(g1, &transform(map, g1)?)?;
        let csl1_inv = intersect(g1, &transform(&map.inverse(), g1)?)?;
        let image_sub = transform(map, g2)?;
        let csl2 = intersect(g2, &image_sub)?;
        let sub_in_csl1 = intersect(g2, &csl1)?;
        let image_sub_in_csl1 = intersect(&image_sub, &csl1)?;
        let sub_in_csl1_inv = intersect(g2, &csl1_inv)?;
        Ok(Diagram { csl1, csl1_inv, csl2, sub_in_csl1, image_sub_in_csl1, sub_in_csl1_inv })
    }

    /// `A[Γ₂ ∩ Γ₁(A⁻¹)] = Γ₂ ∩ Γ₁(A)`, i.e. `A` fixes colour 0.
    fn fixes_colour_zero(&self, map: &CommensurableMap) -> Result<bool> {
        Ok(transform(map, &self.sub_in_csl1_inv)? == self.sub_in_csl1)
    }

    /// Colours whose cosets meet `target`, in representative order.
    fn colours_meeting(colouring: &Colouring, target: &Lattice) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (i, rep) in colouring.reps().iter().enumerate() {
            if coset_meets_lattice(rep, colouring.sub(), target)?.is_some() {
                out.push(i);
            }
        }
        Ok(out)
    }

    fn permutation(&self, colouring: &Colouring, map: &CommensurableMap) -> Result<Vec<(usize, usize)>> {
        let sub = colouring.sub();
        // Any nonzero vector of Γ₂ ∩ Γ₁(A⁻¹) moves a witness within its colour class.
        let shift = self.sub_in_csl1_inv.basis().row(0).to_vec();
        let mut pairs = Vec::new();
        for (i, rep) in colouring.reps().iter().enumerate() {
            let Some(p) = coset_meets_lattice(rep, sub, &self.csl1_inv)? else {
                continue;
            };
            let q: Vec<Rational> = p.iter().zip(&shift).map(|(a, b)| a + b).collect();
            let j = colouring.colour_of(&map.apply(&p)?)?;
            let j2 = colouring.colour_of(&map.apply(&q)?)?;
            if j != j2 {
                return Err(violation(format!("colour {i} is sent to both {j} and {j2}")));
            }
            pairs.push((i, j));
        }
        let mut targets: Vec<usize> = pairs.iter().map(|&(_, j)| j).collect();
        targets.sort_unstable();
        targets.dedup();
        if targets.len() != pairs.len() {
            return Err(violation("colour map of a colour coincidence is not injective"));
        }
        if pairs.first() != Some(&(0, 0)) {
            return Err(violation("colour coincidence does not fix colour 0"));
        }
        Ok(pairs)
    }
}

/// Everything the index diagram says about one colouring and one map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouringAnalysis {
    pub m: u64,
    pub sigma1: u64,
    pub sigma2: u64,
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
    /// `Γ₁(A)`
    pub csl1: Lattice,
    /// `Γ₁(A⁻¹)`
    pub csl1_inv: Lattice,
    /// `Γ₂(A)`
    pub csl2: Lattice,
    pub colour_coincidence: bool,
    /// Colour `i ↦ j` pairs, present exactly for colour coincidences.
    pub permutation: Option<Vec<(usize, usize)>>,
    /// Colours appearing in `Γ₁(A⁻¹)`.
    pub set_i: Vec<usize>,
    /// Colours appearing in `Γ₁(A)`.
    pub set_j: Vec<usize>,
}

impl ColouringAnalysis {
    /// Checks every relation the index diagram forces; returns the first
    /// one that fails.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let ColouringAnalysis { m, sigma1, sigma2, s, t, u, v, .. } = *self;
        let divides = |a: u64, b: u64| a != 0 && b.is_multiple_of(a);
        let rules: [(&str, bool); 12] = [
            ("m·Σ₂ = t·u·Σ₁", m * sigma2 == t * u * sigma1),
            ("m·Σ₂ = s·v·Σ₁", m * sigma2 == s * v * sigma1),
            ("t·u = s·v", t * u == s * v),
            ("s | m", divides(s, m)),
            ("t | m", divides(t, m)),
            ("u | s", divides(u, s)),
            ("v | t", divides(v, t)),
            ("s = t ⇔ u = v", (s == t) == (u == v)),
            ("Σ₁ | m·Σ₂", divides(sigma1, m * sigma2)),
            ("Σ₂ | m·Σ₁", divides(sigma2, m * sigma1)),
            ("|I| = s and |J| = t", self.set_i.len() as u64 == s && self.set_j.len() as u64 == t),
            ("permutation present iff colour coincidence", self.permutation.is_some() == self.colour_coincidence),
        ];
        if let Some((name, _)) = rules.iter().find(|(_, ok)| !ok) {
            return Err((*name).to_string());
        }
        if self.colour_coincidence {
            if !divides(sigma2, sigma1) {
                return Err("colour coincidence ⇒ Σ₂ | Σ₁".into());
            }
            if u != 1 || v != 1 {
                return Err("colour coincidence ⇒ u = v = 1".into());
            }
        }
        if s == m && t == m && self.colour_coincidence != (sigma1 == sigma2) {
            return Err("s = t = m ⇒ (colour coincidence ⇔ Σ₁ = Σ₂)".into());
        }
        Ok(())
    }
}

/// Runs the full index-diagram analysis of `map` against `colouring`.
pub fn analyze(colouring: &Colouring, map: &CommensurableMap) -> Result<ColouringAnalysis> {
    let d = Diagram::build(colouring, map)?;
    let (g1, g2) = (colouring.parent(), colouring.sub());

    let sigma1 = index(g1, &d.csl1)?;
    let sigma2 = index(g2, &d.csl2)?;
    let s = index(&d.csl1, &d.image_sub_in_csl1)?;
    let t = index(&d.csl1, &d.sub_in_csl1)?;
    let u = index(&d.sub_in_csl1, &d.csl2)?;
    let v = index(&d.image_sub_in_csl1, &d.csl2)?;

    // s read from the other side: colours of Γ₁(A⁻¹).
    let s_inv = index(&d.csl1_inv, &d.sub_in_csl1_inv)?;
    if s_inv != s {
        return Err(violation(format!("s = {s} but Γ₁(A⁻¹) carries {s_inv} colours")));
    }
    if intersect(&d.sub_in_csl1, &d.image_sub_in_csl1)? != d.csl2 {
        return Err(violation("[Γ₂ ∩ Γ₁(A)] ∩ [AΓ₂ ∩ Γ₁(A)] ≠ Γ₂(A)"));
    }

    let set_i = Diagram::colours_meeting(colouring, &d.csl1_inv)?;
    let set_j = Diagram::colours_meeting(colouring, &d.csl1)?;
    let colour_coincidence = d.fixes_colour_zero(map)?;
    let permutation = if colour_coincidence { Some(d.permutation(colouring, map)?) } else { None };

    let analysis = ColouringAnalysis {
        m: colouring.m() as u64,
        sigma1: to_u64(sigma1)?,
        sigma2: to_u64(sigma2)?,
        s: to_u64(s)?,
        t: to_u64(t)?,
        u: to_u64(u)?,
        v: to_u64(v)?,
        csl1: d.csl1,
        csl1_inv: d.csl1_inv,
        csl2: d.csl2,
        colour_coincidence,
        permutation,
        set_i,
        set_j,
    };
    if let Some(perm) = &analysis.permutation {
        let targets: Vec<usize> = {
            let mut t: Vec<usize> = perm.iter().map(|&(_, j)| j).collect();
            t.sort_unstable();
            t
        };
        let sources: Vec<usize> = perm.iter().map(|&(i, _)| i).collect();
        if sources != analysis.set_i || targets != analysis.set_j {
            return Err(violation("colour permutation is not a bijection I → J"));
        }
    }
    analysis.check_invariants().map_err(violation)?;
    Ok(analysis)
}

/// Whether `map` fixes colour 0, which decides colour coincidence.
pub fn is_colour_coincidence(colouring: &Colouring, map: &CommensurableMap) -> Result<bool> {
    let (g1, g2) = (colouring.parent(), colouring.sub());
    let black_inv = intersect(g2, &csl(g1, &map.inverse())?)?;
    let black = intersect(g2, &csl(g1, map)?)?;
    Ok(transform(map, &black_inv)? == black)
}

/// The colour permutation `I → J` induced by a colour coincidence.
pub fn colour_permutation(colouring: &Colouring, map: &CommensurableMap) -> Result<Vec<(usize, usize)>> {
    let d = Diagram::build(colouring, map)?;
    if !d.fixes_colour_zero(map)? {
        return Err(Error::NotColourCoincidence);
    }
    d.permutation(colouring, map)
}

/// Result of composing two colour coincidences, recorded without any claim
/// about closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionRecord {
    pub first: usize,
    pub second: usize,
    pub product_is_colour_coincidence: bool,
}

/// For every ordered pair of colour coincidences among `maps`, whether the
/// product `maps[first] ∘ maps[second]` is again one.
pub fn colour_coincidence_compositions(
    colouring: &Colouring,
    maps: &[CommensurableMap],
) -> Result<Vec<CompositionRecord>> {
    let flags: Vec<bool> =
        maps.iter().map(|a| is_colour_coincidence(colouring, a)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (i, a) in maps.iter().enumerate().filter(|&(i, _)| flags[i]) {
        for (j, b) in maps.iter().enumerate().filter(|&(j, _)| flags[j]) {
            let product = a.compose(b)?;
            out.push(CompositionRecord {
                first: i,
                second: j,
                product_is_colour_coincidence: is_colour_coincidence(colouring, &product)?,
            });
        }
    }
    Ok(out)
}
