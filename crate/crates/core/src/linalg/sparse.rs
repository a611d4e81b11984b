//! Sparse homogeneous linear systems. Equations are reduced against the
//! current echelon rows as they arrive, which keeps the commutation systems
//! behind Hom spaces (two or three terms per equation) cheap to solve.

use super::field::Field;

const NONE: u32 = u32::MAX;

type Row = Vec<(u32, u64)>;

#[derive(Clone, Debug)]
pub struct SparseSystem {
    field: Field,
    nvars: usize,
    rows: Vec<Row>,
    pivot_of: Vec<u32>,
}

impl SparseSystem {
    pub fn new(field: Field, nvars: usize) -> Self {
        assert!(nvars < NONE as usize);
        SparseSystem {
            field,
            nvars,
            rows: Vec::new(),
            pivot_of: vec![NONE; nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `Σ coef · x_var = 0`. Duplicate variables are summed.
    pub fn add_equation(&mut self, mut terms: Vec<(usize, u64)>) {
        let f = self.field;
        terms.sort_unstable_by_key(|t| t.0);
        let mut row: Row = Vec::with_capacity(terms.len());
        for (v, c) in terms {
            assert!(v < self.nvars, "variable out of range");
            let c = c % f.order();
            match row.last_mut() {
                Some(last) if last.0 as usize == v => last.1 = f.add(last.1, c),
                _ => row.push((v as u32, c)),
            }
        }
        row.retain(|t| t.1 != 0);
        loop {
            let Some(&(lead, c)) = row.first() else {
                return;
            };
            let p = self.pivot_of[lead as usize];
            if p == NONE {
                let inv = f.inv(c);
                for t in row.iter_mut() {
                    t.1 = f.mul(t.1, inv);
                }
                self.pivot_of[lead as usize] = self.rows.len() as u32;
                self.rows.push(row);
                return;
            }
            row = axpy(f, &row, f.neg(c), &self.rows[p as usize]);
        }
    }

    /// Kernel basis: one vector per free variable, with that variable 1 and
    /// the other free variables 0.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        self.sparse_kernel_basis()
            .into_iter()
            .map(|e| {
                let mut v = vec![0u64; self.nvars];
                for (k, c) in e {
                    v[k as usize] = c;
                }
                v
            })
            .collect()
    }

    /// [`SparseSystem::kernel_basis`] as sorted `(variable, value)` lists.
    pub fn sparse_kernel_basis(&self) -> Vec<Vec<(u32, u64)>> {
        let f = self.field;
        let free: Vec<usize> = (0..self.nvars).filter(|&v| self.pivot_of[v] == NONE).collect();
        let mut free_index = vec![NONE; self.nvars];
        for (i, &v) in free.iter().enumerate() {
            free_index[v] = i as u32;
        }
        // expr[v]: x_v as a sparse combination of free parameters
        let mut expr: Vec<Row> = vec![Vec::new(); self.nvars];
        for (i, &v) in free.iter().enumerate() {
            expr[v] = vec![(i as u32, 1)];
        }
        let mut pivots: Vec<usize> = (0..self.nvars).filter(|&v| self.pivot_of[v] != NONE).collect();
        pivots.sort_unstable_by(|a, b| b.cmp(a));
        for p in pivots {
            let row = &self.rows[self.pivot_of[p] as usize];
            let mut acc: Row = Vec::new();
            for &(v, c) in &row[1..] {
                acc = axpy(f, &acc, f.neg(c), &expr[v as usize]);
            }
            expr[p] = acc;
        }
        let mut basis = vec![Vec::new(); free.len()];
        for (v, e) in expr.iter().enumerate() {
            for &(k, c) in e {
                basis[k as usize].push((v as u32, c));
            }
        }
        basis
    }
}

/// `a + s · b` for sorted sparse rows.
fn axpy(f: Field, a: &Row, s: u64, b: &Row) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            let c = f.mul(s, b[j].1);
            if c != 0 {
                out.push((b[j].0, c));
            }
            j += 1;
        } else {
            let c = f.add(a[i].1, f.mul(s, b[j].1));
            if c != 0 {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn agrees_with_dense_kernel() {
        let f = Field::new(13).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..9);
            let dense: Vec<Vec<u64>> = (0..rows)
                .map(|_| (0..cols).map(|_| if rng.gen_bool(0.4) { rng.gen_range(0..13) } else { 0 }).collect())
                .collect();
            let m = Matrix::from_rows(f, &dense).unwrap();
            let mut sys = SparseSystem::new(f, cols);
            for r in &dense {
                sys.add_equation(r.iter().enumerate().map(|(i, &c)| (i, c)).collect());
            }
            assert_eq!(sys.rank(), m.rank());
            let k = sys.kernel_basis();
            assert_eq!(k, m.kernel_basis());
            for v in &k {
                assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
        }
    }
}
