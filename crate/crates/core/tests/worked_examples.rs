use cslcolour::coincidence::{colour_zero_cells, window_census};
use cslcolour::lattice::{index, intersect, transform};
use cslcolour::modules8::{principal_submodule, standard_module};
use cslcolour::ratmat::{rat, rat_int, rat_matrix};
use cslcolour::{analyze, colour_permutation, sigma, Colouring, CommensurableMap, Cyc8, Int, Lattice, Matrix};

fn rotation_3_4_5() -> CommensurableMap {
    let m = Matrix::from_rows(vec![vec![rat(4, 5), rat(-3, 5)], vec![rat(3, 5), rat(4, 5)]]).unwrap();
    CommensurableMap::isometry(m, true).unwrap()
}

fn square_colouring(sub: &[&[i64]], m: i64) -> Colouring {
    let reps = (0..m).map(|i| vec![rat_int(i), rat_int(0)]).collect();
    Colouring::with_reps(Lattice::standard(2).unwrap(), Lattice::new(&rat_matrix(sub)).unwrap(), reps).unwrap()
}

#[test]
fn six_colours_split_by_a_3_4_5_rotation() {
    let c = square_colouring(&[&[6, 0], &[2, 1]], 6);
    let a = analyze(&c, &rotation_3_4_5()).unwrap();
    assert_eq!((a.m, a.sigma1, a.sigma2, a.s, a.t, a.u, a.v), (6, 5, 10, 6, 6, 2, 2));
    assert!(!a.colour_coincidence);
    // Γ₂(R) has index 10 in Γ₂
    assert_eq!(index(c.sub(), &a.csl2).unwrap(), Int::from(10));
    // half the black points of Γ₁(R⁻¹) stay black, the rest turn red
    let census = window_census(&c, &rotation_3_4_5(), 10).unwrap();
    assert_eq!(census.images_of(0), vec![0, 3]);
}

#[test]
fn three_colours_with_blue_and_red_swapped() {
    let c = square_colouring(&[&[3, 0], &[0, 1]], 3);
    let a = analyze(&c, &rotation_3_4_5()).unwrap();
    assert_eq!((a.m, a.sigma1, a.sigma2, a.s, a.t, a.u, a.v), (3, 5, 5, 3, 3, 1, 1));
    assert_eq!(colour_permutation(&c, &rotation_3_4_5()).unwrap(), vec![(0, 0), (1, 2), (2, 1)]);
    // Γ₂(R) is the black part of Γ₁(R)
    assert_eq!(a.csl2, intersect(c.sub(), &a.csl1).unwrap());
}

#[test]
fn eightfold_module_rotation() {
    let z = Cyc8::ammann_beenker_rotation();
    assert!(z.is_unit_modulus());
    assert_eq!(z.norm(), rat_int(1));
    let sub = principal_submodule(&Cyc8::from_ints([1, 0, 1, 0])).unwrap();
    assert_eq!(index(&standard_module(), &sub).unwrap(), Int::from(4));
    let map = z.multiplication_map().unwrap();
    // unit modulus under both complex embeddings, so orthogonal on coefficients
    assert!(z.galois(3).is_unit_modulus());
    assert!(map.is_orthogonal());
    assert_eq!(sigma(&standard_module(), &map).unwrap(), Int::from(9));
    assert_eq!(sigma(&sub, &map).unwrap(), Int::from(9));
    let c = Colouring::new(standard_module(), sub).unwrap();
    let a = analyze(&c, &map).unwrap();
    assert_eq!((a.m, a.sigma1, a.sigma2), (4, 9, 9));
    assert_eq!(a.permutation, Some((0..4).map(|i| (i, i)).collect()));
    assert_eq!(transform(&map, &a.csl1_inv).unwrap(), a.csl1);
}

#[test]
fn colour_zero_fills_one_cell_in_t() {
    let c = square_colouring(&[&[6, 0], &[2, 1]], 6);
    let a = analyze(&c, &rotation_3_4_5()).unwrap();
    for k in 1..=2 {
        let cells = colour_zero_cells(&c, &rotation_3_4_5(), k * a.t).unwrap();
        assert_eq!(cells.colour_zero * a.t, cells.total);
    }
}

#[test]
fn eight_dimensions() {
    let mut diag = vec![vec![0i64; 8]; 8];
    for (i, row) in diag.iter_mut().enumerate() {
        row[i] = if i == 0 { 2 } else { 1 };
    }
    let rows: Vec<&[i64]> = diag.iter().map(Vec::as_slice).collect();
    let sub = Lattice::new(&rat_matrix(&rows)).unwrap();
    // four copies of the 3-4-5 rotation on coordinate pairs
    let block = Matrix::from_fn(8, 8, |i, j| {
        if i / 2 != j / 2 {
            return rat_int(0);
        }
        match (i % 2, j % 2) {
            (0, 0) | (1, 1) => rat(4, 5),
            (0, 1) => rat(-3, 5),
            _ => rat(3, 5),
        }
    });
    let map = CommensurableMap::isometry(block, true).unwrap();
    let z8 = Lattice::standard(8).unwrap();
    assert_eq!(sigma(&z8, &map).unwrap(), Int::from(625));
    let a = analyze(&Colouring::new(z8, sub).unwrap(), &map).unwrap();
    assert_eq!(a.m, 2);
    assert_eq!(a.m * a.sigma2, a.t * a.u * a.sigma1);
}

#[test]
fn u_counts_colours_sent_to_black() {
    let c = square_colouring(&[&[6, 0], &[2, 1]], 6);
    let a = analyze(&c, &rotation_3_4_5()).unwrap();
    let census = window_census(&c, &rotation_3_4_5(), 10).unwrap();
    assert_eq!(census.preimages_of(0).len() as u64, a.u);
}

#[test]
fn values_are_shareable_across_threads() {
    fn check<T: Send + Sync>() {}
    check::<Lattice>();
    check::<Colouring>();
    check::<CommensurableMap>();
    check::<cslcolour::ColouringAnalysis>();
    check::<Cyc8>();
}
