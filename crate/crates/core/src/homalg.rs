//! Homomorphism spaces, projective covers, syzygies, `Ext¹` and the
//! extensions it classifies.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::decomp::{decompose, DecomposeOptions};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, SparseSystem};
use crate::repmod::{projective, same_presentation, Representation};

/// A family `(f_v)` of matrices `f_v: M_v → N_v`.
pub type Morphism = Vec<Matrix>;

/// Coordinates for morphism families: the entries of `f_0, f_1, …` in
/// row-major order.
#[derive(Clone, Debug)]
pub struct MorphismLayout {
    field: Field,
    rows: Vec<usize>,
    cols: Vec<usize>,
    offsets: Vec<usize>,
    len: usize,
}

impl MorphismLayout {
    pub fn new(m: &Representation, n: &Representation) -> Self {
        let mut offsets = Vec::new();
        let mut len = 0;
        for v in 0..m.dims().len() {
            offsets.push(len);
            len += m.dim(v) * n.dim(v);
        }
        MorphismLayout {
            field: m.field(),
            rows: m.dims().to_vec(),
            cols: n.dims().to_vec(),
            offsets,
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn var(&self, v: usize, i: usize, j: usize) -> usize {
        self.offsets[v] + i * self.cols[v] + j
    }

    pub fn unflatten(&self, x: &[u64]) -> Morphism {
        (0..self.rows.len())
            .map(|v| {
                let mut m = Matrix::zeros(self.field, self.rows[v], self.cols[v]);
                for i in 0..self.rows[v] {
                    for j in 0..self.cols[v] {
                        m.set(i, j, x[self.var(v, i, j)]);
                    }
                }
                m
            })
            .collect()
    }

    pub fn flatten(&self, f: &[Matrix]) -> Vec<u64> {
        let mut x = vec![0; self.len];
        for (v, m) in f.iter().enumerate() {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    x[self.var(v, i, j)] = m.get(i, j);
                }
            }
        }
        x
    }
}

#[derive(Clone, Debug)]
pub struct HomBasis {
    pub layout: MorphismLayout,
    /// Basis vectors in the flattened layout, sparse.
    vectors: Vec<Vec<(u32, u64)>>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn element(&self, i: usize) -> Morphism {
        let mut x = vec![0u64; self.layout.len];
        for &(k, c) in &self.vectors[i] {
            x[k as usize] = c;
        }
        self.layout.unflatten(&x)
    }

    pub fn elements(&self) -> impl Iterator<Item = Morphism> + '_ {
        (0..self.dim()).map(|i| self.element(i))
    }

    /// `Σ c_i · basis_i`.
    pub fn combine(&self, coeffs: &[u64]) -> Morphism {
        let f = self.layout.field;
        let mut x = vec![0u64; self.layout.len];
        for (b, &c) in self.vectors.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for &(k, v) in b {
                let xi = &mut x[k as usize];
                *xi = f.add(*xi, f.mul(c, v));
            }
        }
        self.layout.unflatten(&x)
    }
}

fn commutation_system(m: &Representation, n: &Representation) -> Result<(MorphismLayout, SparseSystem)> {
    if !same_presentation(m.presentation(), n.presentation()) {
        return Err(Error::PresentationMismatch);
    }
    let f = m.field();
    let layout = MorphismLayout::new(m, n);
    let mut sys = SparseSystem::new(f, layout.len());
    for (ai, a) in m.presentation().quiver().arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (m.map(ai), n.map(ai));
        // (M_α f_t − f_s N_α)[i][j] = 0
        for i in 0..m.dim(s) {
            for j in 0..n.dim(t) {
                let mut eq = Vec::new();
                for k in 0..m.dim(t) {
                    let c = ma.get(i, k);
                    if c != 0 {
                        eq.push((layout.var(t, k, j), c));
                    }
                }
                for k in 0..n.dim(s) {
                    let c = na.get(k, j);
                    if c != 0 {
                        eq.push((layout.var(s, i, k), f.neg(c)));
                    }
                }
                if !eq.is_empty() {
                    sys.add_equation(eq);
                }
            }
        }
    }
    Ok((layout, sys))
}

pub fn hom_basis(m: &Representation, n: &Representation) -> Result<HomBasis> {
    let (layout, sys) = commutation_system(m, n)?;
    let vectors = sys.sparse_kernel_basis();
    Ok(HomBasis { layout, vectors })
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    let (layout, sys) = commutation_system(m, n)?;
    Ok(layout.len() - sys.rank())
}

/// `(f · g)_v = f_v · g_v`: first `f`, then `g`.
pub fn compose(f: &[Matrix], g: &[Matrix]) -> Morphism {
    f.iter().zip(g).map(|(a, b)| a.mul(b)).collect()
}

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub p0: Representation,
    pub epi: Morphism,
    /// Vertex of each indecomposable projective summand, in order.
    pub summands: Vec<usize>,
}

/// Top basis vectors: standard vectors completing the radical at each vertex.
fn top_vectors(m: &Representation) -> Vec<Vec<usize>> {
    let q = m.presentation().quiver();
    let f = m.field();
    (0..q.num_vertices())
        .map(|v| {
            let mut rad = Matrix::zeros(f, 0, m.dim(v));
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.target == v {
                    rad = rad.vstack(m.map(ai));
                }
            }
            let (_, pivots) = rad.rref();
            (0..m.dim(v)).filter(|c| !pivots.contains(c)).collect()
        })
        .collect()
}

pub fn projective_cover(m: &Representation) -> Result<ProjectiveCover> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let p = m.presentation();
    let f = m.field();
    let tops = top_vectors(m);
    let mut summands = Vec::new();
    let mut generators: Vec<Vec<u64>> = Vec::new();
    for (v, cols) in tops.iter().enumerate() {
        for &c in cols {
            summands.push(v);
            let mut e = vec![0u64; m.dim(v)];
            e[c] = 1;
            generators.push(e);
        }
    }
    let mut p0 = Representation::zero(p.clone());
    let mut rows: Vec<Vec<Vec<u64>>> = vec![Vec::new(); m.dims().len()];
    for (&v, gen) in summands.iter().zip(&generators) {
        let pv = projective(p, v)?;
        p0 = p0.direct_sum(&pv)?;
        // images of the paths from v, in the order `projective` uses
        for path in p.paths_from(v) {
            let mut x = gen.clone();
            for &a in &path.arrows {
                x = m.map(a).vec_mul(&x);
            }
            rows[p.path_target(&path)].push(x);
        }
    }
    let epi = rows
        .iter()
        .enumerate()
        .map(|(v, r)| Matrix::from_rows_shaped(f, r.len(), m.dim(v), r))
        .collect::<Result<Vec<_>>>()?;
    debug_assert!(p0.is_morphism(m, &epi));
    Ok(ProjectiveCover { p0, epi, summands })
}

#[derive(Clone, Debug)]
pub struct Syzygy {
    pub cover: ProjectiveCover,
    pub omega: Representation,
    /// Inclusion `ΩM → P0`.
    pub inclusion: Morphism,
}

/// Rows spanning `{x : x · a = 0}`.
pub fn left_kernel(a: &Matrix) -> Matrix {
    let f = a.field();
    let k = a.transpose().kernel_basis();
    Matrix::from_rows_shaped(f, k.len(), a.rows(), &k).expect("kernel rows have the row count")
}

pub fn syzygy(m: &Representation) -> Result<Syzygy> {
    let cover = projective_cover(m)?;
    let bases: Vec<Matrix> = cover.epi.iter().map(left_kernel).collect();
    let omega = cover.p0.submodule(&bases)?;
    Ok(Syzygy {
        cover,
        omega,
        inclusion: bases,
    })
}

/// `Ext¹(M, N)` as `Hom(ΩM, N)` modulo maps that extend to `P0`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub m: Representation,
    pub n: Representation,
    pub syzygy: Option<Syzygy>,
    pub hom: Option<HomBasis>,
    /// Representatives of a basis of `Ext¹`.
    pub cocycles: Vec<Morphism>,
    /// Echelon form of the coboundaries, for equivalence tests.
    coboundaries: Option<Span>,
}

/// Span of flattened vectors kept as reduced rows.
#[derive(Clone, Debug)]
struct Span {
    field: Field,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Span {
    fn new(field: Field) -> Self {
        Span {
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn reduce(&self, x: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut x = x.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = x[p];
            if c != 0 {
                for (xi, ri) in x.iter_mut().zip(r) {
                    *xi = f.sub(*xi, f.mul(c, *ri));
                }
            }
        }
        x
    }

    /// Adds `x` to the span; returns whether it was new.
    fn insert(&mut self, x: &[u64]) -> bool {
        let f = self.field;
        let mut y = self.reduce(x);
        let Some(p) = y.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.inv(y[p]);
        for v in y.iter_mut() {
            *v = f.mul(*v, inv);
        }
        for r in self.rows.iter_mut() {
            let c = r[p];
            if c != 0 {
                for (ri, yi) in r.iter_mut().zip(&y) {
                    *ri = f.sub(*ri, f.mul(c, *yi));
                }
            }
        }
        self.rows.push(y);
        self.pivots.push(p);
        true
    }
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.cocycles.len()
    }

    /// Cocycle `Σ c_i · cocycle_i`.
    pub fn combine(&self, coeffs: &[u64]) -> Morphism {
        let f = self.m.field();
        let syz = self.syzygy.as_ref().expect("nonzero Ext has a syzygy");
        let layout = MorphismLayout::new(&syz.omega, &self.n);
        let mut x = vec![0u64; layout.len()];
        for (c, k) in coeffs.iter().zip(&self.cocycles) {
            for (xi, ki) in x.iter_mut().zip(layout.flatten(k)) {
                *xi = f.add(*xi, f.mul(*c, ki));
            }
        }
        layout.unflatten(&x)
    }

    /// Whether a cocycle is zero in `Ext¹`.
    pub fn is_coboundary(&self, c: &[Matrix]) -> bool {
        match (&self.syzygy, &self.coboundaries) {
            (Some(syz), Some(cb)) => {
                let layout = MorphismLayout::new(&syz.omega, &self.n);
                cb.reduce(&layout.flatten(c)).iter().all(|&x| x == 0)
            }
            _ => true,
        }
    }
}

pub fn ext1_basis(m: &Representation, n: &Representation) -> Result<Ext1> {
    if !same_presentation(m.presentation(), n.presentation()) {
        return Err(Error::PresentationMismatch);
    }
    let empty = || Ext1 {
        m: m.clone(),
        n: n.clone(),
        syzygy: None,
        hom: None,
        cocycles: vec![],
        coboundaries: None,
    };
    if m.is_zero() || n.is_zero() {
        return Ok(empty());
    }
    let syz = syzygy(m)?;
    if syz.omega.is_zero() {
        return Ok(Ext1 { syzygy: Some(syz), ..empty() });
    }
    let hom = hom_basis(&syz.omega, n)?;
    let layout = MorphismLayout::new(&syz.omega, n);
    let mut span = Span::new(m.field());
    for g in hom_basis(&syz.cover.p0, n)?.elements() {
        span.insert(&layout.flatten(&compose(&syz.inclusion, &g)));
    }
    let coboundaries = span.clone();
    let mut cocycles = Vec::new();
    for h in hom.elements() {
        if span.insert(&layout.flatten(&h)) {
            cocycles.push(h);
        }
    }
    Ok(Ext1 {
        m: m.clone(),
        n: n.clone(),
        syzygy: Some(syz),
        hom: Some(hom),
        cocycles,
        coboundaries: Some(coboundaries),
    })
}

pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(ext1_basis(m, n)?.dim())
}

/// `0 → left → middle → right → 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub left: Representation,
    pub middle: Representation,
    pub right: Representation,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

impl ShortExactSequence {
    /// Checks both maps are module maps, injective and surjective, with
    /// composite zero and matching dimensions at every vertex.
    pub fn verify(&self) -> Result<()> {
        if !self.left.is_morphism(&self.middle, &self.inclusion) {
            return Err(Error::Verification("inclusion is not a module map".into()));
        }
        if !self.middle.is_morphism(&self.right, &self.projection) {
            return Err(Error::Verification("projection is not a module map".into()));
        }
        for v in 0..self.middle.dims().len() {
            let (l, mid, r) = (self.left.dim(v), self.middle.dim(v), self.right.dim(v));
            if l + r != mid {
                return Err(Error::Verification(format!("dimensions do not add at vertex {v}")));
            }
            if self.inclusion[v].rank() != l {
                return Err(Error::Verification(format!("inclusion not injective at vertex {v}")));
            }
            if self.projection[v].rank() != r {
                return Err(Error::Verification(format!("projection not surjective at vertex {v}")));
            }
            if !self.inclusion[v].mul(&self.projection[v]).is_zero() {
                return Err(Error::Verification(format!("composite nonzero at vertex {v}")));
            }
        }
        Ok(())
    }
}

/// Pushout of `ΩM → P0` along a cocycle `c: ΩM → N`:
/// `E = (P0 ⊕ N) / {(x·ι, −x·c)}`.
pub fn extension_from_cocycle(ext: &Ext1, c: &[Matrix]) -> Result<ShortExactSequence> {
    let (m, n) = (&ext.m, &ext.n);
    let Some(syz) = &ext.syzygy else {
        return split_sequence(m, n);
    };
    if !syz.omega.is_morphism(n, c) {
        return Err(Error::NotMorphism("cocycle does not commute with the arrows".into()));
    }
    let f = m.field();
    let big = syz.cover.p0.direct_sum(n)?;
    let bases: Vec<Matrix> = syz.inclusion.iter().zip(c).map(|(i, cv)| i.hstack(&cv.scale(f.neg(1)))).collect();
    let quot = big.quotient(&bases)?;
    let mut inclusion = Vec::new();
    let mut projection = Vec::new();
    for v in 0..m.dims().len() {
        let p0v = syz.cover.p0.dim(v);
        let rows: Vec<usize> = (p0v..p0v + n.dim(v)).collect();
        let pr = &quot.projection[v];
        let inc_rows: Vec<Vec<u64>> = rows.iter().map(|&r| pr.row(r).to_vec()).collect();
        inclusion.push(Matrix::from_rows_shaped(f, n.dim(v), pr.cols(), &inc_rows)?);
        let proj_rows: Vec<Vec<u64>> = quot.lifts[v]
            .iter()
            .map(|&k| if k < p0v { syz.cover.epi[v].row(k).to_vec() } else { vec![0; m.dim(v)] })
            .collect();
        projection.push(Matrix::from_rows_shaped(f, proj_rows.len(), m.dim(v), &proj_rows)?);
    }
    let seq = ShortExactSequence {
        left: n.clone(),
        middle: quot.module,
        right: m.clone(),
        inclusion,
        projection,
    };
    seq.verify()?;
    Ok(seq)
}

pub fn split_sequence(m: &Representation, n: &Representation) -> Result<ShortExactSequence> {
    let f = m.field();
    let middle = n.direct_sum(m)?;
    let mut inclusion = Vec::new();
    let mut projection = Vec::new();
    for v in 0..m.dims().len() {
        let (a, b) = (n.dim(v), m.dim(v));
        inclusion.push(Matrix::identity(f, a).hstack(&Matrix::zeros(f, a, b)));
        projection.push(Matrix::zeros(f, a, b).vstack(&Matrix::identity(f, b)));
    }
    Ok(ShortExactSequence {
        left: n.clone(),
        middle,
        right: m.clone(),
        inclusion,
        projection,
    })
}

/// Projective line representatives of `F_q^k`: first nonzero entry 1, in
/// lexicographic order.
pub fn projective_lines(field: Field, k: usize) -> Vec<Vec<u64>> {
    let q = field.order();
    let mut out = Vec::new();
    for lead in (0..k).rev() {
        let free = k - lead - 1;
        let count = q.pow(free as u32);
        for idx in 0..count {
            let mut v = vec![0u64; k];
            v[lead] = 1;
            let mut r = idx;
            for j in (lead + 1..k).rev() {
                v[j] = r % q;
                r /= q;
            }
            out.push(v);
        }
    }
    out
}

#[derive(Clone, Copy, Debug)]
pub struct CensusLimits {
    pub max_ext_dim: usize,
    pub max_field_order: u64,
}

impl Default for CensusLimits {
    fn default() -> Self {
        CensusLimits {
            max_ext_dim: 3,
            max_field_order: 7,
        }
    }
}

impl CensusLimits {
    /// A single line is always allowed; larger spaces need small `k` and `q`.
    pub fn check(&self, k: usize, q: u64) -> Result<()> {
        if k <= 1 || (k <= self.max_ext_dim && q <= self.max_field_order) {
            Ok(())
        } else {
            Err(Error::CensusTooLarge(format!(
                "Ext dimension {k} over F_{q}; limits are dimension {} and field order {}",
                self.max_ext_dim, self.max_field_order
            )))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusLine {
    pub coeffs: Vec<u64>,
    pub summands: usize,
    pub middle_dimvec: Vec<usize>,
}

impl CensusLine {
    pub fn render(&self) -> String {
        format!(
            "line={} summands={} middle_dimvec={}",
            join(&self.coeffs),
            self.summands,
            join(&self.middle_dimvec)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub ext_dim: usize,
    pub lines: Vec<CensusLine>,
    pub histogram: BTreeMap<usize, usize>,
}

impl Census {
    pub fn render(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            s.push_str(&l.render());
            s.push('\n');
        }
        let h: Vec<String> = self.histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        s.push_str(&format!("histogram={}\n", h.join(",")));
        s
    }
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Summand counts of the middle terms over all lines of `P(Ext¹(M, N))`.
pub fn middle_census(m: &Representation, n: &Representation, limits: CensusLimits, opts: &DecomposeOptions) -> Result<Census> {
    let ext = ext1_basis(m, n)?;
    let k = ext.dim();
    let field = m.field();
    limits.check(k, field.order())?;
    let lines = if k == 0 { vec![] } else { projective_lines(field, k) };
    let results: Vec<Result<CensusLine>> = lines
        .par_iter()
        .map(|coeffs| {
            let c = ext.combine(coeffs);
            let seq = extension_from_cocycle(&ext, &c)?;
            let rep = decompose(&seq.middle, opts)?;
            Ok(CensusLine {
                coeffs: coeffs.clone(),
                summands: rep.count(),
                middle_dimvec: seq.middle.dims().to_vec(),
            })
        })
        .collect();
    let lines = results.into_iter().collect::<Result<Vec<_>>>()?;
    let mut histogram = BTreeMap::new();
    for l in &lines {
        *histogram.entry(l.summands).or_insert(0) += 1;
    }
    Ok(Census { ext_dim: k, lines, histogram })
}

/// Dimensions `hom(U, M)` for each probe `U`.
pub fn hom_vector(probes: &[Representation], m: &Representation) -> Result<Vec<usize>> {
    probes.iter().map(|u| hom_dim(u, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::repmod::{direct_sum, parse_module, simple, string_module};
    use crate::words::parse_walk;
    use std::sync::Arc;

    fn a3() -> Arc<crate::presentation::Presentation> {
        Arc::new(fixtures::a3())
    }

    #[test]
    fn simple_endomorphisms() {
        let p = a3();
        for v in 0..3 {
            let s = simple(&p, v).unwrap();
            assert_eq!(hom_dim(&s, &s).unwrap(), 1);
        }
    }

    #[test]
    fn hom_from_projective_sees_top() {
        let p = a3();
        let p1 = projective(&p, 0).unwrap();
        assert_eq!(hom_dim(&p1, &simple(&p, 0).unwrap()).unwrap(), 1);
        assert_eq!(hom_dim(&p1, &simple(&p, 1).unwrap()).unwrap(), 0);
        // every basis element is an intertwiner
        let m = string_module(&p, &parse_walk(p.quiver(), "a").unwrap()).unwrap();
        let hb = hom_basis(&p1, &m).unwrap();
        assert!(hb.elements().all(|f| p1.is_morphism(&m, &f)));
    }

    #[test]
    fn covers_and_syzygies() {
        let p = a3();
        let p1 = projective(&p, 0).unwrap();
        let syz = syzygy(&p1).unwrap();
        assert_eq!(syz.cover.p0.dims(), p1.dims());
        assert!(syz.omega.is_zero());
        let s1 = simple(&p, 0).unwrap();
        let syz = syzygy(&s1).unwrap();
        assert_eq!(syz.omega.dims(), [0, 1, 0]);
        assert!(projective_cover(&Representation::zero(p.clone())).is_err());
        let s2 = simple(&p, 1).unwrap();
        let syz2 = syzygy(&s2).unwrap();
        assert_eq!(syz2.omega.dims(), [0, 0, 1]);
    }

    #[test]
    fn ext_on_a3() {
        let p = a3();
        let s1 = simple(&p, 0).unwrap();
        let s2 = simple(&p, 1).unwrap();
        let s3 = simple(&p, 2).unwrap();
        assert_eq!(ext1_dim(&s1, &s2).unwrap(), 1);
        assert_eq!(ext1_dim(&s2, &s3).unwrap(), 1);
        assert_eq!(ext1_dim(&s1, &s3).unwrap(), 0);
        assert_eq!(ext1_dim(&projective(&p, 0).unwrap(), &s2).unwrap(), 0);
        let ext = ext1_basis(&s1, &s2).unwrap();
        let seq = extension_from_cocycle(&ext, &ext.cocycles[0]).unwrap();
        assert_eq!(seq.middle.dims(), [1, 1, 0]);
        let pr = projective(&p, 0).unwrap();
        assert_eq!(hom_dim(&seq.middle, &pr).unwrap(), 1);
        assert_eq!(hom_dim(&pr, &seq.middle).unwrap(), 1);
    }

    #[test]
    fn zero_cocycle_splits() {
        let p = a3();
        let s1 = simple(&p, 0).unwrap();
        let s2 = simple(&p, 1).unwrap();
        let ext = ext1_basis(&s1, &s2).unwrap();
        let zero = ext.combine(&[0]);
        let seq = extension_from_cocycle(&ext, &zero).unwrap();
        let split = direct_sum(&p, &[&s1, &s2]).unwrap();
        let probes: Vec<Representation> = (0..3)
            .map(|v| simple(&p, v).unwrap())
            .chain((0..3).map(|v| projective(&p, v).unwrap()))
            .collect();
        assert_eq!(hom_vector(&probes, &seq.middle).unwrap(), hom_vector(&probes, &split).unwrap());
    }

    #[test]
    fn d4_projective_lines() {
        let f = Field::new(5).unwrap();
        let lines = projective_lines(f, 2);
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], [0, 1]);
        assert_eq!(lines[1], [1, 0]);
        assert_eq!(projective_lines(f, 3).len(), 31);
    }

    #[test]
    fn census_limits() {
        let l = CensusLimits::default();
        assert!(l.check(1, 32003).is_ok());
        assert!(l.check(3, 7).is_ok());
        assert!(l.check(2, 11).is_err());
        assert!(l.check(4, 5).is_err());
    }

    #[test]
    fn d4_literal_ext() {
        let p = Arc::new(fixtures::d4sub());
        let m = parse_module(&p, fixtures::D4SUB_M2111).unwrap();
        let s = parse_module(&p, fixtures::D4SUB_S0).unwrap();
        let ext = ext1_basis(&m, &s).unwrap();
        for c in &ext.cocycles {
            extension_from_cocycle(&ext, c).unwrap().verify().unwrap();
        }
    }
}
