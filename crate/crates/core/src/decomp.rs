//! Splitting modules into indecomposable summands.
//!
//! [`decompose`] splits along generalized eigenspaces of endomorphisms
//! (Fitting). A piece is declared indecomposable once neither a basis of
//! its endomorphism ring nor a batch of random endomorphisms splits it.
//! [`catalog_decompose`] is an independent check for algebras of finite
//! type: it reads multiplicities off homomorphism dimensions.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::homalg::{hom_basis, hom_dim, join, HomBasis};
use crate::linalg::{char_poly, factor, is_linear_power, Matrix, Poly};
use crate::repmod::Representation;

pub const DEFAULT_TRIALS: usize = 50;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    pub trials: usize,
    pub seed: u64,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
        }
    }
}

/// Block-diagonal matrix of an endomorphism over the concatenated basis.
fn global_matrix(m: &Representation, f: &[Matrix]) -> Matrix {
    Matrix::block_diag(m.field(), f)
}

/// Per vertex, bases (as rows) of the generalized eigenspaces of `f`, one
/// entry per distinct irreducible factor of its characteristic polynomial.
pub fn fitting_components(m: &Representation, f: &[Matrix]) -> Result<Vec<Vec<Matrix>>> {
    if !m.is_morphism(m, f) {
        return Err(Error::NotMorphism("not an endomorphism".into()));
    }
    let cp = char_poly(&global_matrix(m, f));
    Ok(components_for(f, &cp))
}

fn components_for(f: &[Matrix], cp: &Poly) -> Vec<Vec<Matrix>> {
    if cp.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let factors = factor(cp);
    let mut comps = Vec::new();
    for (p, e) in &factors {
        let pe = p.pow(*e as u64);
        let bases: Vec<Matrix> = f.iter().map(|fv| crate::homalg::left_kernel(&pe.eval_matrix(fv))).collect();
        comps.push(bases);
    }
    comps
}

/// Splits `M` into two nonzero summands along the generalized eigenspaces
/// of `f`, grouping the first factor against the rest.
pub fn fitting_split(m: &Representation, f: &[Matrix]) -> Result<Option<(Representation, Representation)>> {
    let comps = fitting_components(m, f)?;
    if comps.len() < 2 {
        return Ok(None);
    }
    let first = m.submodule(&comps[0])?;
    let rest: Vec<Matrix> = (0..m.dims().len())
        .map(|v| {
            let mut b = Matrix::zeros(m.field(), 0, m.dim(v));
            for c in &comps[1..] {
                b = b.vstack(&c[v]);
            }
            b
        })
        .collect();
    let second = m.submodule(&rest)?;
    Ok(Some((first, second)))
}

/// How a piece was split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    /// Dimension vector of the piece that was split.
    pub piece: Vec<usize>,
    /// Coefficients of the splitting endomorphism in the basis of `End`.
    pub endomorphism: Vec<u64>,
    /// Dimension vectors of the resulting pieces.
    pub parts: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub summands: Vec<Representation>,
    pub witnesses: Vec<SplitWitness>,
    pub trials: usize,
    pub seed: u64,
}

impl DecompositionReport {
    pub fn count(&self) -> usize {
        self.summands.len()
    }

    pub fn lines(&self) -> Vec<String> {
        self.summands
            .iter()
            .enumerate()
            .map(|(k, s)| format!("summand {}: dimvec={} endo_local=yes(trials={})", k + 1, join(s.dims()), self.trials))
            .collect()
    }
}

fn random_combination(rng: &mut ChaCha8Rng, q: u64, n: usize) -> Vec<u64> {
    (0..n).map(|_| rng.gen_range(0..q)).collect()
}

/// Coefficients of a splitting endomorphism and its Fitting components.
type Split = (Vec<u64>, Vec<Vec<Matrix>>);

/// Tries the basis of `End(M)`, then random combinations; returns the
/// components of the first endomorphism with two or more factors.
fn find_split(m: &Representation, end: &HomBasis, trials: usize, rng: &mut ChaCha8Rng) -> Result<Option<Split>> {
    let d = end.dim();
    let q = m.field().order();
    let candidates = (0..d)
        .map(|i| {
            let mut c = vec![0u64; d];
            c[i] = 1;
            c
        })
        .chain((0..trials).map(|_| random_combination(rng, q, d)));
    for coeffs in candidates {
        let f = end.combine(&coeffs);
        let cp = char_poly(&global_matrix(m, &f));
        if is_linear_power(&cp) == Some(true) {
            continue;
        }
        let comps = components_for(&f, &cp);
        if comps.len() >= 2 {
            return Ok(Some((coeffs, comps)));
        }
    }
    Ok(None)
}

pub fn decompose(m: &Representation, opts: &DecomposeOptions) -> Result<DecompositionReport> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let mut stack = vec![m.clone()];
    let mut summands = Vec::new();
    let mut witnesses = Vec::new();
    let mut branch: u64 = 0;
    while let Some(piece) = stack.pop() {
        if piece.total_dim() == 1 {
            summands.push(piece);
            continue;
        }
        let end = hom_basis(&piece, &piece)?;
        if end.dim() == 1 {
            summands.push(piece);
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ branch.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        branch += 1;
        match find_split(&piece, &end, opts.trials, &mut rng)? {
            None => summands.push(piece),
            Some((coeffs, comps)) => {
                let parts: Vec<Representation> = comps.iter().map(|b| piece.submodule(b)).collect::<Result<_>>()?;
                witnesses.push(SplitWitness {
                    piece: piece.dims().to_vec(),
                    endomorphism: coeffs,
                    parts: parts.iter().map(|x| x.dims().to_vec()).collect(),
                });
                // push in reverse so pieces are processed in factor order
                stack.extend(parts.into_iter().rev());
            }
        }
    }
    Ok(DecompositionReport {
        summands,
        witnesses,
        trials: opts.trials,
        seed: opts.seed,
    })
}

pub fn summand_count(m: &Representation, opts: &DecomposeOptions) -> Result<usize> {
    if m.is_zero() {
        return Ok(0);
    }
    Ok(decompose(m, opts)?.count())
}

/// Multiplicities `x` with `M ≅ ⊕ V^{x_V}`, from `hom(U, M) = Σ_V x_V hom(U, V)`
/// over the catalog. Fails when the system is singular or the solution is
/// not a nonnegative integer vector.
pub fn catalog_decompose(m: &Representation, catalog: &[Representation]) -> Result<Vec<usize>> {
    let n = catalog.len();
    let mut h = Vec::with_capacity(n);
    for u in catalog {
        let mut row = Vec::with_capacity(n);
        for v in catalog {
            row.push(hom_dim(u, v)?);
        }
        h.push(row);
    }
    let rhs: Vec<usize> = catalog.iter().map(|u| hom_dim(u, m)).collect::<Result<_>>()?;
    catalog_solve(&h, &rhs)
}

/// Solves `H x = h` over the rationals for a nonnegative integer `x`.
pub fn catalog_solve(h: &[Vec<usize>], rhs: &[usize]) -> Result<Vec<usize>> {
    type Q = Ratio<i128>;
    let n = h.len();
    let mut a: Vec<Vec<Q>> = h
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            row.iter()
                .map(|&x| Q::from_integer(x as i128))
                .chain(std::iter::once(Q::from_integer(b as i128)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != Q::from_integer(0)) else {
            return Err(Error::IncompleteCatalog("hom matrix of the catalog is singular".into()));
        };
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && a[r][col] != Q::from_integer(0) {
                let factor = a[r][col];
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(pivot_row) {
                    *x -= factor * p;
                }
            }
        }
    }
    a.iter()
        .map(|row| {
            let x = row[n];
            if !x.is_integer() || x < Q::from_integer(0) {
                Err(Error::IncompleteCatalog(format!("multiplicity {x} is not a nonnegative integer")))
            } else {
                Ok(x.to_integer() as usize)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::repmod::{direct_sum, module_from_cyclic_word_unrestricted, projective, simple, string_module};
    use crate::words::{enumerate_words, parse_walk};
    use std::sync::Arc;

    #[test]
    fn identity_does_not_split() {
        let p = Arc::new(fixtures::a3());
        let m = projective(&p, 0).unwrap();
        let id: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        assert!(fitting_split(&m, &id).unwrap().is_none());
    }

    #[test]
    fn projection_splits_sum_of_simples() {
        let p = Arc::new(fixtures::a3());
        let f = p.field();
        let m = direct_sum(&p, &[&simple(&p, 0).unwrap(), &simple(&p, 1).unwrap()]).unwrap();
        let e = vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 1), Matrix::zeros(f, 0, 0)];
        let (a, b) = fitting_split(&m, &e).unwrap().unwrap();
        let mut dims = vec![a.dims().to_vec(), b.dims().to_vec()];
        dims.sort();
        assert_eq!(dims, vec![vec![0, 1, 0], vec![1, 0, 0]]);
        let proj = projective(&p, 0).unwrap();
        assert!(fitting_split(&proj, &e).is_err());
    }

    #[test]
    fn a3_words_are_indecomposable() {
        let p = Arc::new(fixtures::a3());
        for w in enumerate_words(&p, 3) {
            let m = string_module(&p, &w).unwrap();
            assert_eq!(decompose(&m, &DecomposeOptions::default()).unwrap().count(), 1);
        }
    }

    #[test]
    fn squared_band_splits_in_two() {
        let p = Arc::new(fixtures::gp());
        let w = parse_walk(p.quiver(), "a b^-1 a b^-1").unwrap();
        let m = module_from_cyclic_word_unrestricted(&p, &w, 1, 1).unwrap();
        let rep = decompose(&m, &DecomposeOptions::default()).unwrap();
        assert_eq!(rep.count(), 2);
        assert_eq!(rep.witnesses.len(), 1);
        assert_eq!(rep.lines()[0], "summand 1: dimvec=2 endo_local=yes(trials=50)");
    }

    #[test]
    fn catalog_oracle_on_a3() {
        let p = Arc::new(fixtures::a3());
        let cat: Vec<Representation> = enumerate_words(&p, 2).iter().map(|w| string_module(&p, w).unwrap()).collect();
        let m = direct_sum(&p, &[&projective(&p, 0).unwrap(), &simple(&p, 2).unwrap()]).unwrap();
        // catalog order: S1 S2 S3 M(a)=P1 M(b)=P2
        assert_eq!(catalog_decompose(&m, &cat).unwrap(), [0, 0, 1, 1, 0]);
        assert_eq!(catalog_decompose(&cat[1], &cat).unwrap(), [0, 1, 0, 0, 0]);
        let dup = vec![cat[0].clone(), cat[0].clone()];
        assert!(matches!(catalog_decompose(&m, &dup), Err(Error::IncompleteCatalog(_))));
        assert!(catalog_solve(&[vec![2]], &[1]).is_err());
    }
}
