//! Representation type of string presentations: finite, domestic or
//! non-domestic, together with the glued extension whose middle term has
//! many summands over non-domestic algebras.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::homalg::{hom_dim, ShortExactSequence};
use crate::linalg::{Field, Matrix};
use crate::presentation::Presentation;
use crate::repmod::{band_module, module_from_cyclic_word_unrestricted, Representation};
use crate::words::{
    canonical_cyclic, common_prefix_of_powers, extends_word, fine_wolf_common_power, is_cyclic, is_primitive, is_word, primitive_root, Letter, Verdict, Walk,
};

fn all_letters(p: &Presentation) -> Vec<Letter> {
    (0..p.quiver().num_arrows()).flat_map(|a| [Letter::direct(a), Letter::inv(a)]).collect()
}

/// States are words of a fixed length `k`; reading a letter appends it and
/// forgets the oldest one. With `k` one less than the longest relation,
/// every path through the automaton spells a word and conversely.
#[derive(Clone, Debug)]
pub struct LetterAutomaton {
    pub window: usize,
    pub states: Vec<Vec<Letter>>,
    /// `(target state, letter read)` for each state.
    pub transitions: Vec<Vec<(usize, Letter)>>,
}

impl LetterAutomaton {
    pub fn new(p: &Presentation) -> Self {
        let q = p.quiver();
        let k = p.max_relation_len().saturating_sub(1).max(1);
        let letters = all_letters(p);
        let mut states: Vec<Vec<Letter>> = letters.iter().map(|&l| vec![l]).collect();
        for _ in 1..k {
            let mut next = Vec::new();
            for s in &states {
                let end = s.last().unwrap().target(q);
                for &l in &letters {
                    if l.source(q) == end && extends_word(p, s, l) {
                        let mut t = s.clone();
                        t.push(l);
                        next.push(t);
                    }
                }
            }
            states = next;
        }
        states.sort();
        let index: HashMap<Vec<Letter>, usize> = states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let transitions = states
            .iter()
            .map(|s| {
                let end = s.last().unwrap().target(q);
                letters
                    .iter()
                    .filter(|&&l| l.source(q) == end && extends_word(p, s, l))
                    .filter_map(|&l| {
                        let mut t = s[1..].to_vec();
                        t.push(l);
                        index.get(&t).map(|&j| (j, l))
                    })
                    .collect()
            })
            .collect();
        LetterAutomaton {
            window: k,
            states,
            transitions,
        }
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    /// Strongly connected components (Tarjan), as lists of states.
    pub fn components(&self) -> Vec<Vec<usize>> {
        struct T<'a> {
            g: &'a [Vec<(usize, Letter)>],
            index: Vec<Option<usize>>,
            low: Vec<usize>,
            on: Vec<bool>,
            stack: Vec<usize>,
            next: usize,
            out: Vec<Vec<usize>>,
        }
        fn visit(t: &mut T, v: usize) {
            // explicit stack of (node, edge cursor)
            let mut work = vec![(v, 0usize)];
            t.index[v] = Some(t.next);
            t.low[v] = t.next;
            t.next += 1;
            t.stack.push(v);
            t.on[v] = true;
            while let Some(&mut (u, ref mut i)) = work.last_mut() {
                if *i < t.g[u].len() {
                    let w = t.g[u][*i].0;
                    *i += 1;
                    match t.index[w] {
                        None => {
                            t.index[w] = Some(t.next);
                            t.low[w] = t.next;
                            t.next += 1;
                            t.stack.push(w);
                            t.on[w] = true;
                            work.push((w, 0));
                        }
                        Some(iw) if t.on[w] => t.low[u] = t.low[u].min(iw),
                        _ => {}
                    }
                } else {
                    work.pop();
                    if let Some(&(parent, _)) = work.last() {
                        t.low[parent] = t.low[parent].min(t.low[u]);
                    }
                    if Some(t.low[u]) == t.index[u] {
                        let mut comp = Vec::new();
                        loop {
                            let w = t.stack.pop().unwrap();
                            t.on[w] = false;
                            comp.push(w);
                            if w == u {
                                break;
                            }
                        }
                        comp.sort();
                        t.out.push(comp);
                    }
                }
            }
        }
        let n = self.states.len();
        let mut t = T {
            g: &self.transitions,
            index: vec![None; n],
            low: vec![0; n],
            on: vec![false; n],
            stack: vec![],
            next: 0,
            out: vec![],
        };
        for v in 0..n {
            if t.index[v].is_none() {
                visit(&mut t, v);
            }
        }
        t.out
    }

    /// A cyclic word exists iff some component carries both a direct and
    /// an inverse transition. Returns a closed letter sequence through such
    /// a component.
    pub fn find_cycle_mixing_directions(&self) -> Option<Vec<Letter>> {
        for comp in self.components() {
            let inside: BTreeSet<usize> = comp.iter().copied().collect();
            let edges: Vec<(usize, usize, Letter)> = comp
                .iter()
                .flat_map(|&s| self.transitions[s].iter().filter(|(t, _)| inside.contains(t)).map(move |&(t, l)| (s, t, l)))
                .collect();
            let d = edges.iter().find(|e| e.2.is_direct());
            let i = edges.iter().find(|e| !e.2.is_direct());
            if let (Some(d), Some(i)) = (d, i) {
                // closed walk: d, path to i, i, path back to d
                let mut seq = vec![d.2];
                seq.extend(self.path_letters(d.1, i.0, &inside));
                seq.push(i.2);
                seq.extend(self.path_letters(i.1, d.0, &inside));
                return Some(seq);
            }
        }
        None
    }

    fn path_letters(&self, from: usize, to: usize, inside: &BTreeSet<usize>) -> Vec<Letter> {
        let mut prev: HashMap<usize, (usize, Letter)> = HashMap::new();
        let mut queue = std::collections::VecDeque::from([from]);
        let mut seen = BTreeSet::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &(w, l) in &self.transitions[u] {
                if inside.contains(&w) && seen.insert(w) {
                    prev.insert(w, (u, l));
                    queue.push_back(w);
                }
            }
        }
        let mut out = Vec::new();
        let mut cur = to;
        while cur != from {
            let (u, l) = prev[&cur];
            out.push(l);
            cur = u;
        }
        out.reverse();
        out
    }
}

/// Some cyclic word, if any exists.
pub fn find_cyclic_word(p: &Presentation) -> Option<Walk> {
    let auto = LetterAutomaton::new(p);
    let seq = auto.find_cycle_mixing_directions()?;
    let w = Walk::new(p.quiver(), seq).ok()?;
    debug_assert!(is_cyclic(p, &w));
    Some(w)
}

/// Depth-first enumeration of words with a given first letter, calling
/// `visit` on each; stops early when `visit` returns false or `budget`
/// runs out. Returns whether the budget sufficed.
fn walk_words(p: &Presentation, prefix: Vec<Letter>, max_len: usize, budget: &mut usize, visit: &mut dyn FnMut(&[Letter]) -> bool) -> bool {
    let q = p.quiver();
    let letters = all_letters(p);
    let mut stack = vec![prefix];
    while let Some(w) = stack.pop() {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        if !visit(&w) {
            return true;
        }
        if w.len() == max_len {
            continue;
        }
        let end = w.last().unwrap().target(q);
        for &l in letters.iter().rev() {
            if l.source(q) == end && extends_word(p, &w, l) {
                let mut n = w.clone();
                n.push(l);
                stack.push(n);
            }
        }
    }
    true
}

/// Primitive cyclic words of length at most `max_len`, in canonical form
/// and sorted.
pub fn find_bands(p: &Presentation, max_len: usize) -> Vec<Walk> {
    let q = p.quiver();
    let mut found = BTreeSet::new();
    let mut budget = usize::MAX;
    for l in all_letters(p) {
        walk_words(p, vec![l], max_len, &mut budget, &mut |ls| {
            if let Ok(w) = Walk::new(q, ls.to_vec()) {
                if is_cyclic(p, &w) && is_primitive(&w).primitive {
                    found.insert(canonical_cyclic(&w, q));
                }
            }
            true
        });
    }
    found.into_iter().collect()
}

fn in_n_alpha(p: &Presentation, ls: &[Letter], alpha: usize) -> bool {
    ls.first() == Some(&Letter::direct(alpha))
        && ls.last().is_some_and(|l| !l.is_direct())
        && Walk::new(p.quiver(), ls.to_vec()).is_ok_and(|w| is_cyclic(p, &w))
}

fn is_n_alpha_generator(p: &Presentation, ls: &[Letter], alpha: usize) -> bool {
    in_n_alpha(p, ls, alpha) && !(1..ls.len()).any(|k| in_n_alpha(p, &ls[..k], alpha) && in_n_alpha(p, &ls[k..], alpha))
}

/// Generators of `N(α)` up to `max_len`, shortest first, stopping after
/// `limit` of them. The flag reports whether the work budget sufficed.
fn n_alpha_search(p: &Presentation, alpha: usize, max_len: usize, limit: usize, budget: &mut usize) -> (Vec<Walk>, bool) {
    let q = p.quiver();
    let mut gens: Vec<Walk> = Vec::new();
    // iterative deepening keeps the output ordered by length
    for len in 2..=max_len {
        let mut level = Vec::new();
        let ok = walk_words(p, vec![Letter::direct(alpha)], len, budget, &mut |ls| {
            if ls.len() == len && is_n_alpha_generator(p, ls, alpha) {
                level.push(Walk::new(q, ls.to_vec()).unwrap());
            }
            true
        });
        level.sort();
        gens.extend(level);
        if !ok {
            return (gens, false);
        }
        if gens.len() >= limit {
            return (gens, true);
        }
    }
    (gens, true)
}

pub fn n_alpha_generators(p: &Presentation, alpha: usize, max_len: usize) -> Vec<Walk> {
    let mut budget = usize::MAX;
    n_alpha_search(p, alpha, max_len, usize::MAX, &mut budget).0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepType {
    Finite,
    Domestic { bound: usize },
    NonDomestic,
    Unknown { bound: usize },
}

#[derive(Clone, Debug)]
pub enum Evidence {
    /// The automaton has no component mixing directions.
    NoCyclicWord {
        states: usize,
    },
    /// Canonical bands found up to the bound, and the generator count of
    /// each `N(α)` explored.
    Bands {
        bands: Vec<Walk>,
        generators: Vec<(usize, Vec<Walk>)>,
    },
    /// Two generators of `N(α)` with different primitive roots.
    GeneratorPair {
        alpha: usize,
        first: Walk,
        second: Walk,
        common_prefix: usize,
        fine_wolf: Verdict,
    },
    Exhausted {
        work: usize,
    },
}

#[derive(Clone, Debug)]
pub struct ClassificationCertificate {
    pub verdict: RepType,
    pub evidence: Evidence,
    pub bound: usize,
}

pub const DEFAULT_WORK_CAP: usize = 5_000_000;

pub fn default_bound(p: &Presentation) -> usize {
    4 * LetterAutomaton::new(p).num_states()
}

pub fn classify(p: &Presentation, bound: Option<usize>) -> ClassificationCertificate {
    let auto = LetterAutomaton::new(p);
    let bound = bound.unwrap_or(4 * auto.num_states());
    if auto.find_cycle_mixing_directions().is_none() {
        return ClassificationCertificate {
            verdict: RepType::Finite,
            evidence: Evidence::NoCyclicWord { states: auto.num_states() },
            bound,
        };
    }
    let mut budget = DEFAULT_WORK_CAP;
    let mut per_arrow = Vec::new();
    let mut exhausted = false;
    for alpha in 0..p.quiver().num_arrows() {
        let (gens, ok) = n_alpha_search(p, alpha, bound, 2, &mut budget);
        if gens.len() >= 2 {
            let (g1, g2) = (gens[0].clone(), gens[1].clone());
            let lcp = common_prefix_of_powers(g1.letters(), g2.letters(), g1.len() + g2.len());
            let fine_wolf = fine_wolf_common_power(g1.letters(), g2.letters(), lcp);
            let (d1, _) = primitive_root(g1.letters());
            let (d2, _) = primitive_root(g2.letters());
            let roots_differ = g1.letters()[..d1] != g2.letters()[..d2];
            if roots_differ && fine_wolf == Verdict::Inconclusive {
                return ClassificationCertificate {
                    verdict: RepType::NonDomestic,
                    evidence: Evidence::GeneratorPair {
                        alpha,
                        first: g1,
                        second: g2,
                        common_prefix: lcp,
                        fine_wolf,
                    },
                    bound,
                };
            }
        }
        exhausted |= !ok;
        per_arrow.push((alpha, gens));
    }
    if exhausted {
        return ClassificationCertificate {
            verdict: RepType::Unknown { bound },
            evidence: Evidence::Exhausted { work: DEFAULT_WORK_CAP },
            bound,
        };
    }
    let band_len = bound.min(12);
    ClassificationCertificate {
        verdict: RepType::Domestic { bound },
        evidence: Evidence::Bands {
            bands: find_bands(p, band_len),
            generators: per_arrow,
        },
        bound,
    }
}

/// Non-serial words `x`, `y`, `z` with `yxy` and `zxz` words, `y`
/// beginning and ending with direct letters and `z` with inverse ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTriple {
    pub x: Walk,
    pub y: Walk,
    pub z: Walk,
}

impl WitnessTriple {
    /// First and last letters of `y` (γ, β) and the arrows of the first
    /// and last letters of `z` (α, δ).
    pub fn arrows(&self) -> (usize, usize, usize, usize) {
        let y = self.y.letters();
        let z = self.z.letters();
        (y[0].arrow, y[y.len() - 1].arrow, z[0].arrow, z[z.len() - 1].arrow)
    }

    pub fn check(&self, p: &Presentation) -> Result<()> {
        let q = p.quiver();
        let fail = |m: &str| Err(Error::Verification(format!("witness triple: {m}")));
        for (name, w) in [("x", &self.x), ("y", &self.y), ("z", &self.z)] {
            if w.is_trivial() || w.is_serial() || !is_word(p, w) {
                return fail(&format!("{name} must be a non-serial word"));
            }
        }
        let (y, z) = (self.y.letters(), self.z.letters());
        if !(y[0].is_direct() && y[y.len() - 1].is_direct()) {
            return fail("y must begin and end with direct letters");
        }
        if z[0].is_direct() || z[z.len() - 1].is_direct() {
            return fail("z must begin and end with inverse letters");
        }
        let cat = |parts: &[&Walk]| -> Option<Walk> {
            let mut acc = parts[0].clone();
            for w in &parts[1..] {
                acc = acc.concat(w, q).ok()?;
            }
            Some(acc)
        };
        for (name, parts) in [("yxy", [&self.y, &self.x, &self.y]), ("zxz", [&self.z, &self.x, &self.z])] {
            if !cat(&parts).is_some_and(|w| is_word(p, &w)) {
                return fail(&format!("{name} must be a word"));
            }
        }
        let xy = cat(&[&self.x, &self.y]).ok_or_else(|| Error::Verification("xy not composable".into()))?;
        let xz = cat(&[&self.x, &self.z]).ok_or_else(|| Error::Verification("xz not composable".into()))?;
        let (dy, _) = primitive_root(xy.letters());
        let (dz, _) = primitive_root(xz.letters());
        if dy == dz && xy.letters()[..dy] == xz.letters()[..dz] {
            return fail("xy and xz are powers of one word");
        }
        let (gamma, beta, alpha, delta) = self.arrows();
        if !p.in_ideal(&[beta, delta]) || !p.in_ideal(&[alpha, gamma]) {
            return fail("the paths beta delta and alpha gamma must lie in the ideal");
        }
        Ok(())
    }

    /// `u = (xyxz)^n xy` and `v = xz (xyxz)^n`.
    pub fn words(&self, n: usize, q: &crate::presentation::Quiver) -> Result<(Walk, Walk)> {
        let xyxz = self.x.concat(&self.y, q)?.concat(&self.x, q)?.concat(&self.z, q)?;
        let block = xyxz.power(n, q)?;
        let u = block.concat(&self.x, q)?.concat(&self.y, q)?;
        let v = self.x.concat(&self.z, q)?.concat(&block, q)?;
        Ok((u, v))
    }
}

/// Smallest total length witness triple with all lengths at most
/// `search_len`.
pub fn find_witness_triple(p: &Presentation, search_len: usize) -> Result<Option<WitnessTriple>> {
    let cert = classify(p, None);
    if cert.verdict != RepType::NonDomestic {
        return Err(Error::Precondition(format!("presentation is not non-domestic ({:?})", cert.verdict)));
    }
    let q = p.quiver();
    let mut words: Vec<Walk> = Vec::new();
    let mut budget = DEFAULT_WORK_CAP;
    for l in all_letters(p) {
        walk_words(p, vec![l], search_len, &mut budget, &mut |ls| {
            words.push(Walk::new(q, ls.to_vec()).unwrap());
            true
        });
    }
    words.retain(|w| !w.is_serial());
    words.sort();
    let ys: Vec<&Walk> = words
        .iter()
        .filter(|w| w.letters()[0].is_direct() && w.letters()[w.len() - 1].is_direct())
        .collect();
    let zs: Vec<&Walk> = words
        .iter()
        .filter(|w| !w.letters()[0].is_direct() && !w.letters()[w.len() - 1].is_direct())
        .collect();
    let max_total = 3 * search_len;
    for total in 0..=max_total {
        for x in &words {
            for y in &ys {
                if x.len() + y.len() >= total {
                    continue;
                }
                let zl = total - x.len() - y.len();
                for z in zs.iter().filter(|z| z.len() == zl) {
                    let t = WitnessTriple {
                        x: x.clone(),
                        y: (*y).clone(),
                        z: (*z).clone(),
                    };
                    if t.check(p).is_ok() && witness_words_ok(p, &t) {
                        return Ok(Some(t));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn witness_words_ok(p: &Presentation, t: &WitnessTriple) -> bool {
    let Ok((u, v)) = t.words(3, p.quiver()) else {
        return false;
    };
    [u, v].iter().all(|w| is_cyclic(p, w) && is_primitive(w).primitive)
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub prime: u64,
    pub u: Walk,
    pub v: Walk,
    pub b_u: Representation,
    pub b_v: Representation,
    pub glued: Representation,
    pub sequence: ShortExactSequence,
    /// Basis indices (within each block) of `i1, i2` in `B(v)` and `j1, j2`
    /// in `B(u)`.
    pub gluing: [usize; 4],
    /// Cyclic word read along `M'`: `u` from the `x` after the chosen `δ⁻¹`,
    /// then `v` from the `x` after the chosen `β`.
    pub glued_word: Walk,
}

fn find_factor(hay: &[Letter], needle: &[Letter]) -> Option<usize> {
    (0..hay.len().saturating_sub(needle.len()) + 1).find(|&i| hay[i..].starts_with(needle))
}

/// Local index of each position of a cyclic word within its vertex block.
fn local_indices(w: &Walk, p: &Presentation) -> Vec<usize> {
    let verts = w.vertices(p.quiver());
    let mut count: HashMap<usize, usize> = HashMap::new();
    verts[..w.len()]
        .iter()
        .map(|v| {
            let c = count.entry(*v).or_insert(0);
            *c += 1;
            *c - 1
        })
        .collect()
}

/// Builds `M'` on `B(u) ⊕ B(v)` by changing two actions: `i1·β = i2 + j1`
/// and `i2·δ = −j2`.
pub fn build_witness(p: &Arc<Presentation>, t: &WitnessTriple, prime: u64) -> Result<Witness> {
    let q = p.field().order();
    if prime < 11 || !crate::linalg::is_prime(prime) {
        return Err(Error::Precondition(format!("p = {prime} must be a prime of at least 11")));
    }
    if q.is_multiple_of(prime) {
        return Err(Error::Precondition(format!("p = {prime} equals the characteristic")));
    }
    if !(q - 1).is_multiple_of(2 * prime) {
        return Err(Error::Precondition(format!("field order {q} is not 1 mod {}", 2 * prime)));
    }
    t.check(p)?;
    glue(p, t, ((prime - 1) / 2) as usize)
}

fn glue(p: &Arc<Presentation>, t: &WitnessTriple, n: usize) -> Result<Witness> {
    let f = p.field();
    let qv = p.quiver();
    let (u, v) = t.words(n, qv)?;
    for (name, w) in [("u", &u), ("v", &v)] {
        if !is_cyclic(p, w) || !is_primitive(w).primitive {
            return Err(Error::Verification(format!("{name} is not a primitive cyclic word")));
        }
    }
    let b_u = band_module(p, &u, 1, 1)?;
    let b_v = band_module(p, &v, 1, 1)?;
    let (gamma, beta, alpha, delta) = t.arrows();
    // δ⁻¹ x γ in u, β x α⁻¹ in v
    let mut pat_u = vec![Letter::inv(delta)];
    pat_u.extend_from_slice(t.x.letters());
    pat_u.push(Letter::direct(gamma));
    let mut pat_v = vec![Letter::direct(beta)];
    pat_v.extend_from_slice(t.x.letters());
    pat_v.push(Letter::inv(alpha));
    let ku = find_factor(u.letters(), &pat_u).ok_or_else(|| Error::Verification("no factor δ⁻¹xγ in u".into()))?;
    let kv = find_factor(v.letters(), &pat_v).ok_or_else(|| Error::Verification("no factor βxα⁻¹ in v".into()))?;
    let lu = local_indices(&u, p);
    let lv = local_indices(&v, p);
    // δ⁻¹ at letter ku joins positions ku and ku+1; δ runs from ku+1 to ku
    let j1 = lu[(ku + 1) % u.len()];
    let j2 = lu[ku];
    // β at letter kv runs from kv to kv+1
    let i1 = lv[kv];
    let i2 = lv[(kv + 1) % v.len()];
    let sum = b_u.direct_sum(&b_v)?;
    let mut maps: Vec<Matrix> = sum.maps().to_vec();
    let arr_beta = qv.arrow(beta);
    let arr_delta = qv.arrow(delta);
    {
        let m = &mut maps[beta];
        let row = b_u.dim(arr_beta.source) + i1;
        for c in 0..m.cols() {
            m.set(row, c, 0);
        }
        m.set(row, b_u.dim(arr_beta.target) + i2, 1);
        m.set(row, j1, f.add(m.get(row, j1), 1));
    }
    {
        let m = &mut maps[delta];
        let row = b_u.dim(arr_delta.source) + i2;
        for c in 0..m.cols() {
            m.set(row, c, 0);
        }
        m.set(row, j2, f.neg(1));
    }
    let glued = Representation::new(p.clone(), sum.dims().to_vec(), maps)?;
    let sequence = inclusion_sequence(&b_u, &glued, &b_v, f)?;
    sequence.verify()?;
    // the cycle through M' after the change of basis x ↦ x(i2) + x(j1)
    let glued_word = u.rotate(ku + 1, qv).concat(&v.rotate(kv + 1, qv), qv)?;
    Ok(Witness {
        prime: 2 * n as u64 + 1,
        u,
        v,
        b_u,
        b_v,
        glued,
        sequence,
        gluing: [i1, i2, j1, j2],
        glued_word,
    })
}

/// `0 → A → A ⊕' B → B → 0` for a module whose basis is that of `A ⊕ B`
/// with `A` a submodule.
fn inclusion_sequence(a: &Representation, mid: &Representation, b: &Representation, f: Field) -> Result<ShortExactSequence> {
    let n = a.dims().len();
    let inclusion = (0..n)
        .map(|v| Matrix::identity(f, a.dim(v)).hstack(&Matrix::zeros(f, a.dim(v), b.dim(v))))
        .collect();
    let projection = (0..n)
        .map(|v| Matrix::zeros(f, a.dim(v), b.dim(v)).vstack(&Matrix::identity(f, b.dim(v))))
        .collect();
    Ok(ShortExactSequence {
        left: a.clone(),
        middle: mid.clone(),
        right: b.clone(),
        inclusion,
        projection,
    })
}

/// The band recipe on `uv` with parameter −1.
pub fn witness_comparison_module(p: &Arc<Presentation>, w: &Witness) -> Result<Representation> {
    let uv = w.u.concat(&w.v, p.quiver())?;
    module_from_cyclic_word_unrestricted(p, &uv, p.field().neg(1), 1)
}

/// Searches for an invertible element of `Hom(M, N)` among random
/// combinations of a basis.
pub fn find_isomorphism(m: &Representation, n: &Representation, tries: usize, seed: u64) -> Result<Option<Vec<Matrix>>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let hb = crate::homalg::hom_basis(m, n)?;
    let qo = m.field().order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..tries {
        let coeffs: Vec<u64> = (0..hb.dim()).map(|_| rand::Rng::gen_range(&mut rng, 0..qo)).collect();
        let f = hb.combine(&coeffs);
        if f.iter().all(|x| x.rank() == x.rows()) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// `hom(U, M)` for each probe `U`; convenience for comparisons.
pub fn hom_profile(probes: &[Representation], m: &Representation) -> Result<Vec<usize>> {
    probes.iter().map(|u| hom_dim(u, m)).collect()
}
