//! Representations of bound quivers with right action on row vectors: the
//! matrix of an arrow `α: s → t` has `dim_s` rows and `dim_t` columns, and
//! a path `αβ` acts by `M_α · M_β`.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, RowBasis};
use crate::presentation::Presentation;
use crate::words::{canonical_rotation, check_word, is_cyclic, is_primitive, Walk};

#[derive(Clone, Debug)]
pub struct Representation {
    presentation: Arc<Presentation>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        same_presentation(&self.presentation, &other.presentation) && self.dims == other.dims && self.maps == other.maps
    }
}

pub fn same_presentation(a: &Arc<Presentation>, b: &Arc<Presentation>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    /// Checks matrix shapes and that every relation acts as zero.
    pub fn new(presentation: Arc<Presentation>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = presentation.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.num_arrows() {
            return Err(Error::Dimension("one dimension per vertex and one matrix per arrow".into()));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.source] || m.cols() != dims[a.target] {
                return Err(Error::Dimension(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.source],
                    dims[a.target],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != presentation.field() {
                return Err(Error::Dimension(format!("matrix of arrow {} over another field", a.name)));
            }
        }
        let rep = Representation { presentation, dims, maps };
        rep.check_relations()?;
        Ok(rep)
    }

    fn check_relations(&self) -> Result<()> {
        let q = self.presentation.quiver();
        for r in self.presentation.relations() {
            let arrows = r.arrows();
            let mut m = self.maps[arrows[0]].clone();
            for &a in &arrows[1..] {
                m = m.mul(&self.maps[a]);
            }
            if !m.is_zero() {
                let name: Vec<&str> = arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect();
                return Err(Error::RelationViolated(name.join(" ")));
            }
        }
        Ok(())
    }

    pub fn zero(presentation: Arc<Presentation>) -> Self {
        let f = presentation.field();
        let q = presentation.quiver();
        let maps = (0..q.num_arrows()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        Representation {
            dims: vec![0; q.num_vertices()],
            maps,
            presentation,
        }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn field(&self) -> Field {
        self.presentation.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Start of each vertex block in the concatenated basis.
    pub fn offsets(&self) -> Vec<usize> {
        let mut o = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            o.push(acc);
            acc += d;
        }
        o
    }

    fn same_as(&self, other: &Representation) -> Result<()> {
        if same_presentation(&self.presentation, &other.presentation) {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    /// `self ⊕ other`, with `self` occupying the first coordinates at each
    /// vertex.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.same_as(other)?;
        let f = self.field();
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| Matrix::block_diag(f, &[a.clone(), b.clone()]))
            .collect();
        Ok(Representation {
            presentation: self.presentation.clone(),
            dims,
            maps,
        })
    }

    /// `M' = g · M` where the rows of `g[v]` are the new basis of `M_v`:
    /// `M'_α = g_s · M_α · g_t⁻¹`.
    pub fn change_basis(&self, g: &[Matrix]) -> Result<Representation> {
        let inv: Vec<Matrix> = g
            .iter()
            .map(|m| m.inverse().ok_or_else(|| Error::Dimension("singular base change".into())))
            .collect::<Result<_>>()?;
        let q = self.presentation.quiver();
        let maps = q.arrows().iter().zip(&self.maps).map(|(a, m)| g[a.source].mul(m).mul(&inv[a.target])).collect();
        Representation::new(self.presentation.clone(), self.dims.clone(), maps)
    }

    /// Whether `f = (f_v)` with `f_v: M_v → N_v` commutes with every arrow.
    pub fn is_morphism(&self, target: &Representation, f: &[Matrix]) -> bool {
        if self.same_as(target).is_err() || f.len() != self.dims.len() {
            return false;
        }
        for (v, m) in f.iter().enumerate() {
            if m.rows() != self.dims[v] || m.cols() != target.dims[v] {
                return false;
            }
        }
        self.presentation
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(i, a)| self.maps[i].mul(&f[a.target]) == f[a.source].mul(&target.maps[i]))
    }

    /// Submodule spanned at each vertex by the (independent) rows of
    /// `bases[v]`; fails if the span is not invariant.
    pub fn submodule(&self, bases: &[Matrix]) -> Result<Representation> {
        let rb: Vec<RowBasis> = bases.iter().map(|b| RowBasis::new(b.clone())).collect::<Result<_>>()?;
        let f = self.field();
        let q = self.presentation.quiver();
        let mut maps = Vec::new();
        for (i, a) in q.arrows().iter().enumerate() {
            let img = bases[a.source].mul(&self.maps[i]);
            let mut rows = Vec::new();
            for r in 0..img.rows() {
                rows.push(
                    rb[a.target]
                        .coords(img.row(r))
                        .map_err(|_| Error::NotMorphism("subspace is not invariant".into()))?,
                );
            }
            maps.push(Matrix::from_rows_shaped(f, bases[a.source].rows(), bases[a.target].rows(), &rows)?);
        }
        Representation::new(self.presentation.clone(), bases.iter().map(|b| b.rows()).collect(), maps)
    }

    /// Quotient by the invariant subspaces spanned by `bases`. The quotient
    /// basis consists of the images of the standard vectors at non-pivot
    /// positions of each reduced basis.
    pub fn quotient(&self, bases: &[Matrix]) -> Result<Quotient> {
        let f = self.field();
        let mut projections = Vec::new();
        let mut kept = Vec::new();
        for (v, b) in bases.iter().enumerate() {
            let (proj, free) = quotient_projection(b, self.dims[v], f);
            projections.push(proj);
            kept.push(free);
        }
        let q = self.presentation.quiver();
        let mut maps = Vec::new();
        for (i, a) in q.arrows().iter().enumerate() {
            let pt = &projections[a.target];
            let mut rows = Vec::new();
            for &k in &kept[a.source] {
                let img = self.maps[i].row(k).to_vec();
                rows.push(pt.vec_mul(&img));
            }
            maps.push(Matrix::from_rows_shaped(f, kept[a.source].len(), pt.cols(), &rows)?);
        }
        let dims = projections.iter().map(|p| p.cols()).collect();
        let module = Representation::new(self.presentation.clone(), dims, maps)?;
        Ok(Quotient {
            module,
            projection: projections,
            lifts: kept,
        })
    }

    /// The module in the literal text format.
    pub fn to_literal(&self) -> String {
        let q = self.presentation.quiver();
        let f = self.field();
        let mut s = String::from("module\ndim:");
        for (v, d) in self.dims.iter().enumerate() {
            let _ = write!(s, " {}={}", q.vertex_name(v), d);
        }
        s.push('\n');
        for (i, a) in q.arrows().iter().enumerate() {
            let m = &self.maps[i];
            if m.rows() == 0 || m.cols() == 0 {
                continue;
            }
            let rows: Vec<String> = (0..m.rows())
                .map(|r| m.row(r).iter().map(|&x| f.to_signed(x).to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            let _ = writeln!(s, "map: {} {}", a.name, rows.join("; "));
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub module: Representation,
    /// Per vertex, the projection onto the quotient.
    pub projection: Vec<Matrix>,
    /// Per vertex, the standard vectors whose images form the quotient basis.
    pub lifts: Vec<Vec<usize>>,
}

/// Projection `F^n → F^n / span(b)` in the basis of standard vectors at the
/// non-pivot columns of `rref(b)`, which are returned alongside.
fn quotient_projection(b: &Matrix, n: usize, f: Field) -> (Matrix, Vec<usize>) {
    let (r, pivots) = b.rref();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut p = Matrix::zeros(f, n, free.len());
    for (j, &c) in free.iter().enumerate() {
        p.set(c, j, 1);
    }
    // e_{pivot_i} ≡ e_{pivot_i} - R_i, which has support on free columns only
    for (i, &pc) in pivots.iter().enumerate() {
        for (j, &c) in free.iter().enumerate() {
            p.set(pc, j, f.neg(r.get(i, c)));
        }
    }
    (p, free)
}

pub fn direct_sum(presentation: &Arc<Presentation>, parts: &[&Representation]) -> Result<Representation> {
    let mut acc = Representation::zero(presentation.clone());
    for p in parts {
        acc = acc.direct_sum(p)?;
    }
    Ok(acc)
}

pub fn dimension_vector(m: &Representation) -> Vec<usize> {
    m.dims.clone()
}

/// Assembles a representation from a basis of positions: `vertex[i]` is
/// the vertex of basis element `i`, and `edges` lists `(arrow, from, to,
/// coefficient)` meaning `e_from · arrow` has coefficient on `e_to`.
fn from_positions(p: &Arc<Presentation>, vertex: &[usize], edges: &[(usize, usize, usize, u64)]) -> Result<Representation> {
    let q = p.quiver();
    let f = p.field();
    let mut dims = vec![0; q.num_vertices()];
    let mut local = vec![0; vertex.len()];
    for (i, &v) in vertex.iter().enumerate() {
        local[i] = dims[v];
        dims[v] += 1;
    }
    let mut maps: Vec<Matrix> = q.arrows().iter().map(|a| Matrix::zeros(f, dims[a.source], dims[a.target])).collect();
    for &(a, from, to, c) in edges {
        let m = &mut maps[a];
        let cur = m.get(local[from], local[to]);
        m.set(local[from], local[to], f.add(cur, c));
    }
    Representation::new(p.clone(), dims, maps)
}

/// The string module of a word: one basis element per position, direct
/// letters shifting forward and inverse letters shifting backward.
pub fn string_module(p: &Arc<Presentation>, w: &Walk) -> Result<Representation> {
    let q = p.quiver();
    if let Err(v) = check_word(p, w) {
        return Err(Error::InvalidWord(format!("{}: {v}", w.display(q))));
    }
    let vertex = w.vertices(q);
    let edges: Vec<(usize, usize, usize, u64)> = w
        .letters()
        .iter()
        .enumerate()
        .map(|(i, l)| if l.is_direct() { (l.arrow, i, i + 1, 1) } else { (l.arrow, i + 1, i, 1) })
        .collect();
    from_positions(p, &vertex, &edges)
}

pub fn simple(p: &Arc<Presentation>, v: usize) -> Result<Representation> {
    if v >= p.quiver().num_vertices() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    string_module(p, &Walk::trivial(v))
}

/// `e_v A`: basis the paths from `v` avoiding the relations, arrows acting
/// by extending paths.
pub fn projective(p: &Arc<Presentation>, v: usize) -> Result<Representation> {
    if v >= p.quiver().num_vertices() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    let paths = p.paths_from(v);
    let vertex: Vec<usize> = paths.iter().map(|x| p.path_target(x)).collect();
    let mut edges = Vec::new();
    for (i, path) in paths.iter().enumerate() {
        let end = vertex[i];
        for (a, arr) in p.quiver().arrows().iter().enumerate() {
            if arr.source != end {
                continue;
            }
            let mut ext = path.arrows.clone();
            ext.push(a);
            if let Some(j) = paths.iter().position(|x| x.arrows == ext) {
                edges.push((a, i, j, 1));
            }
        }
    }
    from_positions(p, &vertex, &edges)
}

/// Index of the letter of `w` carrying the Jordan block: the last letter
/// of the least rotation of `w`.
pub fn band_twist_position(w: &Walk, p: &Presentation) -> usize {
    let (k, _) = canonical_rotation(w, p.quiver());
    (k + w.len() - 1) % w.len()
}

fn cyclic_recipe(p: &Arc<Presentation>, w: &Walk, lambda: u64, n: usize) -> Result<Representation> {
    let q = p.quiver();
    let f = p.field();
    let lambda = lambda % f.order();
    if lambda == 0 {
        return Err(Error::ZeroParameter);
    }
    if n == 0 {
        return Err(Error::Dimension("band multiplicity must be at least 1".into()));
    }
    if !is_cyclic(p, w) {
        return Err(Error::NotCyclic(w.display(q)));
    }
    let len = w.len();
    let twist = band_twist_position(w, p);
    let verts = w.vertices(q);
    let mut vertex = Vec::with_capacity(len * n);
    for &v in verts.iter().take(len) {
        vertex.extend(std::iter::repeat_n(v, n));
    }
    let mut edges = Vec::new();
    for (i, l) in w.letters().iter().enumerate() {
        let (from, to) = if l.is_direct() { (i, (i + 1) % len) } else { ((i + 1) % len, i) };
        for r in 0..n {
            if i == twist {
                edges.push((l.arrow, from * n + r, to * n + r, lambda));
                if r + 1 < n {
                    edges.push((l.arrow, from * n + r, to * n + r + 1, 1));
                }
            } else {
                edges.push((l.arrow, from * n + r, to * n + r, 1));
            }
        }
    }
    from_positions(p, &vertex, &edges)
}

/// The band module `B(w, λ, n)` of a primitive cyclic word.
pub fn band_module(p: &Arc<Presentation>, w: &Walk, lambda: u64, n: usize) -> Result<Representation> {
    if !is_cyclic(p, w) {
        return Err(Error::NotCyclic(w.display(p.quiver())));
    }
    let prim = is_primitive(w);
    if !prim.primitive {
        return Err(Error::NotPrimitive {
            root: prim.root.display(p.quiver()),
            exponent: prim.exponent,
        });
    }
    cyclic_recipe(p, w, lambda, n)
}

/// The band recipe applied to any cyclic word, primitive or not.
pub fn module_from_cyclic_word_unrestricted(p: &Arc<Presentation>, w: &Walk, lambda: u64, n: usize) -> Result<Representation> {
    cyclic_recipe(p, w, lambda, n)
}

/// Parses the literal format:
///
/// ```text
/// module
/// dim: 0=2 1=1
/// map: a 1 0; 0 1
/// ```
///
/// Omitted vertices have dimension 0 and omitted arrows act as zero.
pub fn parse_module(p: &Arc<Presentation>, text: &str) -> Result<Representation> {
    let q = p.quiver();
    let f = p.field();
    let mut dims = vec![0usize; q.num_vertices()];
    let mut entries: Vec<Option<Vec<Vec<i64>>>> = vec![None; q.num_arrows()];
    let mut saw_header = false;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line == "module" {
            saw_header = true;
            continue;
        }
        let err = |m: &str| Error::Syntax {
            line: ln + 1,
            column: 1,
            message: m.to_string(),
        };
        if !saw_header {
            return Err(err("expected `module` header"));
        }
        if let Some(rest) = line.strip_prefix("dim:") {
            for tok in rest.split_whitespace() {
                let (v, d) = tok.split_once('=').ok_or_else(|| err("expected <vertex>=<count>"))?;
                let vi = q.vertex_index(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
                dims[vi] = d.parse().map_err(|_| err("dimension must be a nonnegative integer"))?;
            }
        } else if let Some(rest) = line.strip_prefix("map:") {
            let rest = rest.trim();
            let (name, body) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let a = q.arrow_index(name).ok_or_else(|| Error::UnknownArrow(name.to_string()))?;
            let rows = body
                .split(';')
                .map(|r| {
                    r.split_whitespace()
                        .map(|x| x.parse::<i64>().map_err(|_| err("matrix entries must be integers")))
                        .collect::<Result<Vec<i64>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            entries[a] = Some(rows);
        } else {
            return Err(err("expected `dim:` or `map:`"));
        }
    }
    if !saw_header {
        return Err(Error::Syntax {
            line: 1,
            column: 1,
            message: "expected `module` header".into(),
        });
    }
    let mut maps = Vec::new();
    for (i, a) in q.arrows().iter().enumerate() {
        let (r, c) = (dims[a.source], dims[a.target]);
        let m = match &entries[i] {
            None => Matrix::zeros(f, r, c),
            Some(rows) => {
                let conv: Vec<Vec<u64>> = rows.iter().map(|row| row.iter().map(|&x| f.from_i64(x)).collect()).collect();
                let conv: Vec<Vec<u64>> = if r == 0 { vec![] } else { conv };
                Matrix::from_rows_shaped(f, r, c, &conv).map_err(|_| Error::Dimension(format!("arrow {} needs a {r}x{c} matrix", a.name)))?
            }
        };
        maps.push(m);
    }
    Representation::new(p.clone(), dims, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::words::parse_walk;

    fn arc(p: Presentation) -> Arc<Presentation> {
        Arc::new(p)
    }

    fn word(p: &Presentation, s: &str) -> Walk {
        parse_walk(p.quiver(), s).unwrap()
    }

    #[test]
    fn string_modules_on_a3() {
        let p = arc(fixtures::a3());
        let s = string_module(&p, &word(&p, "e(2)")).unwrap();
        assert_eq!(s.dims(), [0, 1, 0]);
        let m = string_module(&p, &word(&p, "a")).unwrap();
        assert_eq!(m.dims(), [1, 1, 0]);
        assert_eq!(m.map(0).get(0, 0), 1);
        assert!(matches!(string_module(&p, &word(&p, "a b")), Err(Error::InvalidWord(_))));
    }

    #[test]
    fn projectives_on_a3() {
        let p = arc(fixtures::a3());
        assert_eq!(projective(&p, 0).unwrap().dims(), [1, 1, 0]);
        assert_eq!(projective(&p, 1).unwrap().dims(), [0, 1, 1]);
        assert_eq!(projective(&p, 2).unwrap().dims(), [0, 0, 1]);
        let nr = arc(fixtures::a3nr());
        assert_eq!(projective(&nr, 0).unwrap().dims(), [1, 1, 1]);
        assert!(projective(&p, 7).is_err());
    }

    #[test]
    fn gp_projective_is_seven_dimensional() {
        let p = arc(fixtures::gp());
        let pr = projective(&p, 0).unwrap();
        assert_eq!(pr.total_dim(), 7);
    }

    #[test]
    fn band_recipe_dimensions() {
        let p = arc(fixtures::gp());
        let w = word(&p, "a b^-1");
        assert_eq!(band_module(&p, &w, 1, 1).unwrap().total_dim(), 2);
        assert_eq!(band_module(&p, &w, 3, 2).unwrap().total_dim(), 4);
        assert_eq!(band_module(&p, &w, 1, 1).unwrap(), module_from_cyclic_word_unrestricted(&p, &w, 1, 1).unwrap());
        assert!(matches!(band_module(&p, &w, 0, 1), Err(Error::ZeroParameter)));
        let sq = word(&p, "a b^-1 a b^-1");
        assert!(matches!(band_module(&p, &sq, 1, 1), Err(Error::NotPrimitive { exponent: 2, .. })));
        assert_eq!(module_from_cyclic_word_unrestricted(&p, &sq, 1, 1).unwrap().total_dim(), 4);
        assert!(matches!(band_module(&p, &word(&p, "a b"), 1, 1), Err(Error::NotCyclic(_))));
    }

    #[test]
    fn literal_round_trip() {
        let p = arc(fixtures::d4sub());
        let m = parse_module(&p, fixtures::D4SUB_M2111).unwrap();
        assert_eq!(m.dims(), [2, 1, 1, 1]);
        let back = parse_module(&p, &m.to_literal()).unwrap();
        assert_eq!(back, m);
        let s = parse_module(&p, fixtures::D4SUB_S0).unwrap();
        assert_eq!(s.dims(), [1, 0, 0, 0]);
        assert!(parse_module(&p, "module\ndim: 0=1 1=1\nmap: a 1 1\n").is_err());
    }

    #[test]
    fn relation_check_on_literals() {
        let p = arc(fixtures::a3());
        let bad = "module\ndim: 1=1 2=1 3=1\nmap: a 1\nmap: b 1\n";
        assert!(matches!(parse_module(&p, bad), Err(Error::RelationViolated(_))));
    }

    #[test]
    fn sub_and_quotient() {
        let p = arc(fixtures::a3());
        let f = p.field();
        let pr = projective(&p, 0).unwrap();
        // radical of P1 is the copy of S2 at vertex 2
        let bases = vec![Matrix::zeros(f, 0, 1), Matrix::identity(f, 1), Matrix::zeros(f, 0, 0)];
        let sub = pr.submodule(&bases).unwrap();
        assert_eq!(sub.dims(), [0, 1, 0]);
        let quot = pr.quotient(&bases).unwrap();
        assert_eq!(quot.module.dims(), [1, 0, 0]);
        assert_eq!(quot.lifts[0], [0]);
        assert!(pr.is_morphism(&quot.module, &quot.projection));
    }

    #[test]
    fn direct_sum_dims_add() {
        let p = arc(fixtures::a3());
        let a = projective(&p, 0).unwrap();
        let b = simple(&p, 2).unwrap();
        let s = direct_sum(&p, &[&a, &b]).unwrap();
        assert_eq!(s.dims(), [1, 1, 1]);
        let other = arc(fixtures::gp());
        assert!(matches!(a.direct_sum(&simple(&other, 0).unwrap()), Err(Error::PresentationMismatch)));
    }
}
