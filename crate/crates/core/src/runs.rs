//! Composite verification runs over a catalog: middle-term censuses for
//! all pairs of indecomposables, and the hom-order sweep over direct sums.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::artheory::{delta_count_formula, delta_profile, enumerate_indecomposables, riedtmann_witness, ArTable, Catalog};
use crate::decomp::{summand_count, DecomposeOptions};
use crate::error::{Error, Result};
use crate::homalg::{ext1_dim, middle_census, Census, CensusLimits};
use crate::presentation::Presentation;
use crate::repmod::{direct_sum, string_module, Representation};
use crate::words::enumerate_words;

/// A module with a display name.
#[derive(Clone, Debug)]
pub struct Named {
    pub name: String,
    pub module: Representation,
}

#[derive(Clone, Debug)]
pub struct PairCensus {
    pub m: String,
    pub n: String,
    pub census: Census,
}

impl PairCensus {
    pub fn max_summands(&self) -> usize {
        self.census.lines.iter().map(|l| l.summands).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct MainTheoremReport {
    pub modules: usize,
    pub pairs: Vec<PairCensus>,
}

impl MainTheoremReport {
    pub fn pass(&self) -> bool {
        self.pairs.iter().all(|p| p.max_summands() <= 2)
    }

    /// First pair and line whose middle has more than two summands.
    pub fn violation(&self) -> Option<(&PairCensus, usize)> {
        self.pairs
            .iter()
            .find_map(|p| p.census.lines.iter().position(|l| l.summands > 2).map(|i| (p, i)))
    }
}

/// Indecomposables to test: the catalog of a string presentation, or, when
/// forced, the string modules of all words regardless of the axioms.
pub fn test_modules(p: &Arc<Presentation>, max_dim: usize, allow_non_string: bool) -> Result<Vec<Named>> {
    match enumerate_indecomposables(p, max_dim) {
        Ok(cat) => Ok((0..cat.len())
            .map(|i| Named {
                name: cat.name(i),
                module: cat.modules()[i].clone(),
            })
            .collect()),
        Err(Error::NotString(_)) if allow_non_string => {
            let q = p.quiver();
            enumerate_words(p, max_dim.saturating_sub(1))
                .iter()
                .map(|w| {
                    let name = if w.is_trivial() {
                        format!("e({})", q.vertex_name(w.source()))
                    } else {
                        w.display(q)
                    };
                    Ok(Named {
                        name,
                        module: string_module(p, w)?,
                    })
                })
                .collect()
        }
        Err(e) => Err(e),
    }
}

/// Census of every ordered pair with nonzero `Ext¹`.
pub fn verify_main_theorem(modules: &[Named], limits: CensusLimits, opts: &DecomposeOptions) -> Result<MainTheoremReport> {
    let pairs: Vec<(usize, usize)> = (0..modules.len()).flat_map(|i| (0..modules.len()).map(move |j| (i, j))).collect();
    let results: Vec<Result<Option<PairCensus>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (m, n) = (&modules[i], &modules[j]);
            if ext1_dim(&m.module, &n.module)? == 0 {
                return Ok(None);
            }
            Ok(Some(PairCensus {
                m: m.name.clone(),
                n: n.name.clone(),
                census: middle_census(&m.module, &n.module, limits, opts)?,
            }))
        })
        .collect();
    let pairs = results.into_iter().filter_map(|r| r.transpose()).collect::<Result<_>>()?;
    Ok(MainTheoremReport { modules: modules.len(), pairs })
}

/// A direct sum of catalog members.
#[derive(Clone, Debug)]
pub struct SumModule {
    pub multiplicities: Vec<usize>,
    pub module: Representation,
    pub hom: Vec<usize>,
    pub count: usize,
}

impl SumModule {
    pub fn id(&self, cat: &Catalog) -> String {
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| {
                let name = cat.name(i);
                let name = if name.contains(' ') { format!("({name})") } else { name };
                if k == 1 {
                    name
                } else {
                    format!("{name}^{k}")
                }
            })
            .collect();
        parts.join("+")
    }
}

/// Multiplicity vectors of all nonzero sums of total dimension at most
/// `max_dim`.
fn multiplicity_vectors(dims: &[usize], max_dim: usize) -> Vec<Vec<usize>> {
    fn go(dims: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == dims.len() {
            if cur.iter().any(|&k| k > 0) {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = 0;
        while k * dims[i] <= left {
            cur.push(k);
            go(dims, i + 1, left - k * dims[i], cur, out);
            cur.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    go(dims, 0, max_dim, &mut Vec::new(), &mut out);
    out
}

pub fn sums_up_to(cat: &Catalog, max_dim: usize, opts: &DecomposeOptions) -> Result<Vec<SumModule>> {
    let dims: Vec<usize> = cat.modules().iter().map(|m| m.total_dim()).collect();
    let p = cat.presentation();
    multiplicity_vectors(&dims, max_dim)
        .into_par_iter()
        .map(|mult| {
            let parts: Vec<&Representation> = mult.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(&cat.modules()[i], k)).collect();
            let module = direct_sum(p, &parts)?;
            let hom = cat.hom_vector(&module)?;
            let count = summand_count(&module, opts)?;
            Ok(SumModule {
                multiplicities: mult,
                module,
                hom,
                count,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairLine {
    pub m: usize,
    pub n: usize,
    pub hom_leq: bool,
    pub m_count: usize,
    pub n_count: usize,
    pub delta_formula: Option<i64>,
    /// `(|X|, |Y|, |Z|)` of the verified Riedtmann witness.
    pub witness_counts: Option<(usize, usize, usize)>,
}

impl PairLine {
    pub fn counts_ok(&self) -> bool {
        !self.hom_leq || (self.m_count <= self.n_count && self.delta_formula == Some(self.n_count as i64 - self.m_count as i64))
    }

    pub fn render(&self, sums: &[SumModule], cat: &Catalog) -> String {
        format!(
            "M={} N={} hom_leq={} |M|={} |N|={} delta_formula={}",
            sums[self.m].id(cat),
            sums[self.n].id(cat),
            self.hom_leq,
            self.m_count,
            self.n_count,
            self.delta_formula.map_or("-".to_string(), |d| d.to_string())
        )
    }
}

#[derive(Clone, Debug)]
pub struct DegenerationReport {
    pub sums: Vec<SumModule>,
    pub lines: Vec<PairLine>,
}

impl DegenerationReport {
    pub fn leq_pairs(&self) -> impl Iterator<Item = &PairLine> {
        self.lines.iter().filter(|l| l.hom_leq)
    }

    pub fn all_counts_ok(&self) -> bool {
        self.lines.iter().all(|l| l.counts_ok())
    }
}

/// Every ordered pair of sums of dimension at most `max_dim` sharing a
/// dimension vector; pairs in the hom-order get the δ-formula and a
/// verified Riedtmann witness.
pub fn degeneration_sweep(cat: &Catalog, table: &ArTable, max_dim: usize, opts: &DecomposeOptions) -> Result<DegenerationReport> {
    let sums = sums_up_to(cat, max_dim, opts)?;
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, s) in sums.iter().enumerate() {
        classes.entry(s.module.dims().to_vec()).or_default().push(i);
    }
    let pairs: Vec<(usize, usize)> = classes
        .values()
        .flat_map(|c| c.iter().flat_map(move |&i| c.iter().map(move |&j| (i, j))))
        .collect();
    let lines = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (m, n) = (&sums[i], &sums[j]);
            let profile = delta_profile(&m.hom, &n.hom);
            let leq = profile.is_nonnegative();
            let (delta_formula, witness_counts) = if leq {
                let w = riedtmann_witness(&m.module, &n.module, &profile, cat, table)?;
                (Some(delta_count_formula(&profile, table)?), Some(w.counts))
            } else {
                (None, None)
            };
            Ok(PairLine {
                m: i,
                n: j,
                hom_leq: leq,
                m_count: m.count,
                n_count: n.count,
                delta_formula,
                witness_counts,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DegenerationReport { sums, lines })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artheory::full_catalog;
    use crate::fixtures;

    #[test]
    fn multiplicities_enumerate_by_dimension() {
        let v = multiplicity_vectors(&[1, 2], 3);
        assert_eq!(v, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 0], vec![3, 0]]);
    }

    #[test]
    fn a3_main_theorem_small() {
        let p = Arc::new(fixtures::a3());
        let mods = test_modules(&p, 3, false).unwrap();
        let r = verify_main_theorem(&mods, CensusLimits::default(), &DecomposeOptions::default()).unwrap();
        assert!(r.pass());
        assert!(!r.pairs.is_empty());
    }

    #[test]
    fn forced_d4_fails() {
        let p = Arc::new(fixtures::d4sub());
        assert!(test_modules(&p, 2, false).is_err());
        let mut mods = test_modules(&p, 2, true).unwrap();
        mods.push(Named {
            name: "M2111".into(),
            module: crate::repmod::parse_module(&p, fixtures::D4SUB_M2111).unwrap(),
        });
        let r = verify_main_theorem(&mods, CensusLimits::default(), &DecomposeOptions::default()).unwrap();
        assert!(!r.pass());
        let (pair, line) = r.violation().unwrap();
        assert_eq!(pair.census.lines[line].summands, 3);
    }

    #[test]
    fn a3_sweep_small() {
        let p = Arc::new(fixtures::a3());
        let cat = full_catalog(&p).unwrap();
        let table = ArTable::new(&cat, &DecomposeOptions::default()).unwrap();
        let r = degeneration_sweep(&cat, &table, 3, &DecomposeOptions::default()).unwrap();
        assert!(r.all_counts_ok());
        assert!(r.leq_pairs().any(|l| l.m != l.n));
        for s in &r.sums {
            assert_eq!(s.count, s.multiplicities.iter().sum::<usize>());
        }
    }
}
