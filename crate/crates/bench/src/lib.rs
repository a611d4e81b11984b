//! Inputs shared by the benchmarks in `benches/`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stralg::classify::{build_witness, find_witness_triple, Witness};
use stralg::{fixtures, Field, Matrix};

pub fn random_matrix(q: u64, n: usize, seed: u64) -> Matrix {
    let f = Field::new(q).expect("prime");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
    Matrix::from_rows(f, &rows).expect("square")
}

/// Witness extension over the Gelfand-Ponomarev fixture.
pub fn gp_witness(prime: u64, q: u64) -> Witness {
    let p = Arc::new(fixtures::gp().with_field(Field::new(q).expect("prime")));
    let t = find_witness_triple(&p, 6).expect("non-domestic").expect("triple");
    build_witness(&p, &t, prime).expect("witness")
}
