use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stralg::artheory::full_catalog;
use stralg::decomp::{catalog_decompose, decompose, DecomposeOptions};
use stralg::fixtures;
use stralg::homalg::{hom_dim, middle_census, CensusLimits};
use stralg::repmod::parse_module;
use stralg::{Field, Matrix, Representation};

const D4SUB_SPLIT: &str = "module
dim: 0=2 1=1 2=1 3=1
map: a 1 0
map: b 1 0
map: c 1 0
";

fn random_a3nr_module(rng: &mut ChaCha8Rng) -> Representation {
    let p = Arc::new(fixtures::a3nr().with_field(Field::new(2).unwrap()));
    let f = p.field();
    let dims: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
    let maps = p
        .quiver()
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.source], dims[a.target]);
            let rows: Vec<Vec<u64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(0..2)).collect()).collect();
            Matrix::from_rows_shaped(f, r, c, &rows).unwrap()
        })
        .collect();
    Representation::new(p, dims, maps).unwrap()
}

/// Counts homomorphisms over F_2 by enumerating every tuple of vertex maps.
fn brute_force_hom_count(m: &Representation, n: &Representation) -> usize {
    let f = m.field();
    let shapes: Vec<(usize, usize)> = (0..m.dims().len()).map(|v| (m.dim(v), n.dim(v))).collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let arrows = m.presentation().quiver().arrows().to_vec();
    (0..1u64 << entries)
        .filter(|bits| {
            let mut k = 0;
            let g: Vec<Matrix> = shapes
                .iter()
                .map(|&(r, c)| {
                    let mut x = Matrix::zeros(f, r, c);
                    for i in 0..r {
                        for j in 0..c {
                            x.set(i, j, (bits >> k) & 1);
                            k += 1;
                        }
                    }
                    x
                })
                .collect();
            arrows.iter().enumerate().all(|(i, a)| m.map(i).mul(&g[a.target]) == g[a.source].mul(n.map(i)))
        })
        .count()
}

#[test]
fn hom_dim_matches_enumeration_over_f2() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let (m, n) = (random_a3nr_module(&mut rng), random_a3nr_module(&mut rng));
        let d = hom_dim(&m, &n).unwrap();
        assert_eq!(brute_force_hom_count(&m, &n), 1 << d);
    }
}

#[test]
fn catalog_oracle_agrees_with_decompose_on_random_f2_modules() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let cat = full_catalog(&Arc::new(fixtures::a3nr().with_field(Field::new(2).unwrap()))).unwrap();
    for _ in 0..60 {
        let m = random_a3nr_module(&mut rng);
        if m.is_zero() {
            continue;
        }
        let oracle: usize = catalog_decompose(&m, cat.modules()).unwrap().iter().sum();
        let rep = decompose(&m, &DecomposeOptions::default()).unwrap();
        assert_eq!(rep.count(), oracle);
    }
}

#[test]
fn split_d4_module_has_the_six_line_census() {
    let p = Arc::new(fixtures::d4sub());
    let m = parse_module(&p, D4SUB_SPLIT).unwrap();
    let s = parse_module(&p, fixtures::D4SUB_S0).unwrap();
    let c = middle_census(&m, &s, CensusLimits::default(), &DecomposeOptions::default()).unwrap();
    assert_eq!(c.ext_dim, 2);
    assert_eq!(c.lines.len(), 6);
    assert_eq!(c.histogram.into_iter().collect::<Vec<_>>(), vec![(2, 3), (3, 3)]);
}

#[test]
fn indecomposable_d4_module_has_one_line() {
    let p = Arc::new(fixtures::d4sub());
    let m = parse_module(&p, fixtures::D4SUB_M2111).unwrap();
    assert_eq!(decompose(&m, &DecomposeOptions::default()).unwrap().count(), 1);
    let s = parse_module(&p, fixtures::D4SUB_S0).unwrap();
    let c = middle_census(&m, &s, CensusLimits::default(), &DecomposeOptions::default()).unwrap();
    assert_eq!(c.ext_dim, 1);
    assert_eq!(c.lines[0].summands, 3);
}
