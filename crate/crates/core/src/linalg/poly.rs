//! Univariate polynomials over F_q, characteristic polynomials and
//! factorization into irreducibles (square-free, distinct-degree and
//! equal-degree splitting).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::matrix::Matrix;

/// Coefficients low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u64>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let s = self.field.to_signed(c);
            if !first {
                write!(f, "{}", if s < 0 { " - " } else { " + " })?;
            } else if s < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = s.unsigned_abs();
            match (d, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}*")?,
            }
            match d {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{d}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: Field, coeffs: Vec<u64>) -> Self {
        let mut p = Poly {
            field,
            coeffs: coeffs.into_iter().map(|c| c % field.order()).collect(),
        };
        p.trim();
        p
    }

    pub fn zero(field: Field) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: Field) -> Self {
        Poly::new(field, vec![1])
    }

    /// The monomial `X`.
    pub fn x(field: Field) -> Self {
        Poly::new(field, vec![0, 1])
    }

    /// `X - a`.
    pub fn linear(field: Field, a: u64) -> Self {
        Poly::new(field, vec![field.neg(a), 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead());
        self.scale(inv)
    }

    pub fn scale(&self, s: u64) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|&c| self.field.mul(c, s)).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| f.add(*self.coeffs.get(i).unwrap_or(&0), *o.coeffs.get(i).unwrap_or(&0)))
            .collect();
        Poly::new(f, c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| f.sub(*self.coeffs.get(i).unwrap_or(&0), *o.coeffs.get(i).unwrap_or(&0)))
            .collect();
        Poly::new(f, c)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut c = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, c)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let f = self.field;
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(f), self.clone());
        }
        let inv = f.inv(d.lead());
        let mut r = self.coeffs.clone();
        let mut qc = vec![0u64; r.len() - dd];
        for i in (0..qc.len()).rev() {
            let c = f.mul(r[i + dd], inv);
            qc[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[i + j] = f.sub(r[i + j], f.mul(c, b));
            }
        }
        r.truncate(dd);
        (Poly::new(f, qc), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, &a)| f.mul(a, (i as u64) % f.order())).collect();
        Poly::new(f, c)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix (Horner).
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let f = self.field;
        let n = a.rows();
        let mut acc = Matrix::zeros(f, n, n);
        let id = Matrix::identity(f, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(a).add(&id.scale(c));
        }
        acc
    }
}

/// Characteristic polynomial `det(X·I − A)` via Hessenberg reduction.
pub fn char_poly(a: &Matrix) -> Poly {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let f = a.field();
    let n = a.rows();
    let mut h = a.clone();
    let q = f.order();
    let d = h.data_mut();
    // Reduce to upper Hessenberg form by similarity transforms.
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| d[i * n + m - 1] != 0) else {
            continue;
        };
        if piv != m {
            for j in 0..n {
                d.swap(piv * n + j, m * n + j);
            }
            for i in 0..n {
                d.swap(i * n + piv, i * n + m);
            }
        }
        let inv = f.inv(d[m * n + m - 1]);
        for i in m + 1..n {
            let u = f.mul(d[i * n + m - 1], inv);
            if u == 0 {
                continue;
            }
            // row_i -= u row_m, then col_m += u col_i
            let nu = q - u;
            for j in 0..n {
                let x = d[m * n + j];
                if x != 0 {
                    d[i * n + j] = f.reduce(d[i * n + j] + nu * x);
                }
            }
            for r in 0..n {
                let x = d[r * n + i];
                if x != 0 {
                    d[r * n + m] = f.reduce(d[r * n + m] + u * x);
                }
            }
        }
    }
    // p_k = char poly of the leading k x k block, coefficients lowest first.
    let mut ps: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let hk = d[(k - 1) * n + k - 1];
        let prev = &ps[k - 1];
        let mut pk = vec![0u64; k + 1];
        for (j, &c) in prev.iter().enumerate() {
            pk[j + 1] = f.add(pk[j + 1], c);
            pk[j] = f.sub(pk[j], f.mul(hk, c));
        }
        let mut prod = 1u64;
        for i in 1..k {
            prod = f.mul(prod, d[(k - i) * n + k - i - 1]);
            if prod == 0 {
                break;
            }
            let coef = f.mul(prod, d[(k - i - 1) * n + k - 1]);
            if coef == 0 {
                continue;
            }
            let nc = q - coef;
            for (j, &c) in ps[k - i - 1].iter().enumerate() {
                pk[j] = f.reduce(pk[j] + nc * c);
            }
        }
        ps.push(pk);
    }
    Poly::new(f, ps.pop().unwrap())
}

/// Whether a monic `p` of degree `n` equals `(X − c)^n` for some `c`.
/// Decided by a Taylor shift when `n` is invertible; otherwise `None`.
pub fn is_linear_power(p: &Poly) -> Option<bool> {
    let f = p.field();
    let n = p.degree()?;
    if n == 0 {
        return Some(false);
    }
    if (n as u64).is_multiple_of(f.order()) {
        return None;
    }
    let p = p.monic();
    let c = f.neg(f.mul(p.coeffs()[n - 1], f.inv(n as u64 % f.order())));
    // coefficients of p(X + c) by synthetic division, lowest first
    let mut a = p.coeffs().to_vec();
    for k in 0..n {
        for j in (k..n).rev() {
            a[j] = f.add(a[j], f.mul(c, a[j + 1]));
        }
        if a[k] != 0 {
            return Some(false);
        }
    }
    Some(true)
}

/// Factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities, sorted by (degree, coefficients). The leading
/// coefficient is dropped.
pub fn factor(p: &Poly) -> Vec<(Poly, usize)> {
    assert!(!p.is_zero(), "factoring the zero polynomial");
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (sqf, mult) in square_free(&p.monic()) {
        for (g, d) in distinct_degree(&sqf) {
            for irr in equal_degree(&g, d) {
                out.push((irr, mult));
            }
        }
    }
    // Merge repeats (square-free parts are coprime, so this is a no-op
    // except for canonical ordering).
    out.sort_by(|a, b| (a.0.degree(), a.0.coeffs().to_vec(), a.1).cmp(&(b.0.degree(), b.0.coeffs().to_vec(), b.1)));
    out
}

/// Characteristic polynomial factored into irreducibles.
pub fn char_poly_factors(a: &Matrix) -> Vec<(Poly, usize)> {
    let cp = char_poly(a);
    if cp.degree() == Some(0) {
        return Vec::new();
    }
    factor(&cp)
}

/// Square-free decomposition of a monic polynomial: pairs (g, m) with
/// `p = Π g^m`, each g square-free and pairwise coprime.
fn square_free(p: &Poly) -> Vec<(Poly, usize)> {
    let f = p.field();
    let q = f.order() as usize;
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = p.derivative();
    if d.is_zero() {
        // p = r(X^q) = r(X)^q over F_q
        let r = p_th_root(p);
        for (g, m) in square_free(&r) {
            out.push((g, m * q));
        }
        return out;
    }
    let mut c = p.gcd(&d);
    let mut w = p.div_rem(&c).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if c.degree().unwrap_or(0) > 0 {
        let r = p_th_root(&c);
        for (g, m) in square_free(&r) {
            out.push((g, m * q));
        }
    }
    out
}

fn p_th_root(p: &Poly) -> Poly {
    let q = p.field().order() as usize;
    let c: Vec<u64> = p.coeffs().iter().step_by(q).copied().collect();
    Poly::new(p.field(), c)
}

/// Splits a square-free monic polynomial into products of irreducibles of
/// equal degree d, returned as (product, d).
fn distinct_degree(p: &Poly) -> Vec<(Poly, usize)> {
    let f = p.field();
    let q = f.order();
    let mut out = Vec::new();
    let mut rest = p.clone();
    let x = Poly::x(f);
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(q, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let dr = rest.degree().unwrap();
        out.push((rest.monic(), dr));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting (trace map in characteristic 2).
fn equal_degree(p: &Poly, d: usize) -> Vec<Poly> {
    let n = p.degree().unwrap_or(0);
    if n == d {
        return vec![p.monic()];
    }
    let f = p.field();
    let q = f.order();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (n as u64) << 8 ^ d as u64);
    loop {
        let a = Poly::new(f, (0..n).map(|_| rng.gen_range(0..q)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = if q == 2 {
            // T(a) = a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(p);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(p);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((q^d-1)/2) = (a · a^q ⋯ a^(q^(d-1)))^((q-1)/2)
            let mut frob = a.rem(p);
            let mut norm = frob.clone();
            for _ in 1..d {
                frob = frob.pow_mod(q, p);
                norm = norm.mul(&frob).rem(p);
            }
            norm.pow_mod((q - 1) / 2, p).sub(&Poly::one(f))
        };
        let g = g.gcd(p);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = p.div_rem(&g).0.monic();
            let mut out = equal_degree(&g, d);
            out.extend(equal_degree(&h, d));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {

    #[test]
    fn linear_power_detection() {
        let f = Field::new(7).unwrap();
        let l = Poly::linear(f, 3);
        assert_eq!(is_linear_power(&l.pow(5)), Some(true));
        assert_eq!(is_linear_power(&l.pow(4).mul(&Poly::linear(f, 2))), Some(false));
        assert_eq!(is_linear_power(&Poly::x(f).pow(7)), None);
        assert_eq!(is_linear_power(&Poly::new(f, vec![1, 0, 1])), Some(false));
    }
    use super::*;

    fn fld(q: u64) -> Field {
        Field::new(q).unwrap()
    }

    fn product(field: Field, factors: &[(Poly, usize)]) -> Poly {
        factors.iter().fold(Poly::one(field), |acc, (p, m)| acc.mul(&p.pow(*m as u64)))
    }

    fn companion(field: Field, monic: &[u64]) -> Matrix {
        // monic: coefficients c_0..c_{n-1} of X^n + ... ; companion acting on rows
        let n = monic.len();
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n - 1 {
            m.set(i + 1, i, 1);
        }
        for (i, &c) in monic.iter().enumerate() {
            m.set(i, n - 1, field.neg(c));
        }
        m
    }

    #[test]
    fn identity_char_poly_is_square_of_linear() {
        let f = fld(7);
        let fac = char_poly_factors(&Matrix::identity(f, 2));
        assert_eq!(fac, vec![(Poly::linear(f, 1), 2)]);
    }

    #[test]
    fn x11_plus_1_splits_over_f23() {
        let f = fld(23);
        let mut c = vec![0u64; 11];
        c[0] = 1; // X^11 + 1
        let a = companion(f, &c);
        let cp = char_poly(&a);
        let mut expect = vec![0u64; 12];
        expect[0] = 1;
        expect[11] = 1;
        assert_eq!(cp, Poly::new(f, expect));
        let fac = char_poly_factors(&a);
        assert_eq!(fac.len(), 11);
        assert!(fac.iter().all(|(p, m)| p.degree() == Some(1) && *m == 1));
        assert_eq!(product(f, &fac), cp);
    }

    #[test]
    fn nilpotent_jordan_block() {
        let f = fld(5);
        let mut j = Matrix::zeros(f, 4, 4);
        for i in 0..3 {
            j.set(i, i + 1, 1);
        }
        assert_eq!(char_poly_factors(&j), vec![(Poly::x(f), 4)]);
    }

    #[test]
    fn irreducible_quadratic_stays_whole() {
        let f = fld(7);
        // X^2 + 1 is irreducible mod 7
        let p = Poly::new(f, vec![1, 0, 1]);
        assert_eq!(factor(&p), vec![(p.clone(), 1)]);
        // X^2 + 1 = (X+i)(X-i) mod 5
        let f5 = fld(5);
        assert_eq!(factor(&Poly::new(f5, vec![1, 0, 1])).len(), 2);
    }

    #[test]
    fn char_poly_matches_determinant_definition_small() {
        // 2x2: X^2 - tr X + det
        let f = fld(101);
        let a = Matrix::from_i64(f, &[vec![3, 5], vec![7, 11]]).unwrap();
        let cp = char_poly(&a);
        assert_eq!(cp, Poly::new(f, vec![f.from_i64(33 - 35), f.from_i64(-14), 1]));
    }

    #[test]
    fn repeated_factors_in_small_characteristic() {
        for q in [2u64, 3, 5] {
            let f = fld(q);
            // (X+1)^q * X^2 * (X^2+X+1)
            let p = Poly::linear(f, q - 1).pow(q).mul(&Poly::x(f).pow(2)).mul(&Poly::new(f, vec![1, 1, 1]));
            let fac = factor(&p);
            assert_eq!(product(f, &fac), p.monic(), "q = {q}");
            for (g, _) in &fac {
                assert_eq!(factor(g).len(), 1);
            }
        }
    }
}
