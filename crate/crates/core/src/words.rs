//! Letters, walks, words and cyclic words over a presentation, plus the
//! periodicity facts about free monoids used by the classification.
//!
//! Textual syntax: letters separated by spaces, inverses written `a^-1`,
//! trivial walks written `e(v)`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::{Presentation, Quiver};

/// An arrow or its formal inverse. Ordered by arrow index, then direct
/// before inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Self {
        Letter { arrow, inverse: false }
    }

    pub fn inv(arrow: usize) -> Self {
        Letter { arrow, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn is_direct(self) -> bool {
        !self.inverse
    }

    pub fn source(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    pub fn target(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }

    pub fn name(self, q: &Quiver) -> String {
        let n = &q.arrow(self.arrow).name;
        if self.inverse {
            format!("{n}^-1")
        } else {
            n.clone()
        }
    }
}

/// A path in the double quiver: a vertex (trivial walk) or a composable
/// sequence of letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    start: usize,
    letters: Vec<Letter>,
}

impl Walk {
    pub fn trivial(v: usize) -> Self {
        Walk { start: v, letters: vec![] }
    }

    pub fn new(q: &Quiver, letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("empty letter sequence; use a trivial walk".into()));
        }
        for w in letters.windows(2) {
            if w[0].target(q) != w[1].source(q) {
                return Err(Error::EndpointMismatch(format!(
                    "{} ends at {}, {} starts at {}",
                    w[0].name(q),
                    q.vertex_name(w[0].target(q)),
                    w[1].name(q),
                    q.vertex_name(w[1].source(q))
                )));
            }
        }
        Ok(Walk {
            start: letters[0].source(q),
            letters,
        })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn source(&self) -> usize {
        self.start
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.letters.last().map_or(self.start, |l| l.target(q))
    }

    /// Vertices visited, one per position; length `len() + 1`.
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        let mut out = vec![self.start];
        out.extend(self.letters.iter().map(|l| l.target(q)));
        out
    }

    pub fn inverse(&self, q: &Quiver) -> Walk {
        if self.is_trivial() {
            return self.clone();
        }
        let letters: Vec<Letter> = self.letters.iter().rev().map(|l| l.inverted()).collect();
        Walk {
            start: self.target(q),
            letters,
        }
    }

    pub fn concat(&self, other: &Walk, q: &Quiver) -> Result<Walk> {
        if self.target(q) != other.start {
            return Err(Error::EndpointMismatch(format!(
                "walk ends at {} but the next starts at {}",
                q.vertex_name(self.target(q)),
                q.vertex_name(other.start)
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Walk { start: self.start, letters })
    }

    pub fn power(&self, r: usize, q: &Quiver) -> Result<Walk> {
        let mut out = Walk::trivial(self.start);
        for _ in 0..r {
            out = out.concat(self, q)?;
        }
        Ok(out)
    }

    /// Rotation of a closed walk so that it starts at letter `k`.
    pub fn rotate(&self, k: usize, q: &Quiver) -> Walk {
        if self.is_trivial() {
            return self.clone();
        }
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Walk {
            start: letters[0].source(q),
            letters,
        }
    }

    /// Serial walks use only direct or only inverse letters.
    pub fn is_serial(&self) -> bool {
        self.letters.iter().all(|l| l.is_direct()) || self.letters.iter().all(|l| !l.is_direct())
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            return format!("e({})", q.vertex_name(self.start));
        }
        self.letters.iter().map(|l| l.name(q)).collect::<Vec<_>>().join(" ")
    }
}

impl PartialOrd for Walk {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Walk {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.start.cmp(&other.start))
    }
}

pub fn parse_walk(q: &Quiver, text: &str) -> Result<Walk> {
    let t = text.trim();
    if let Some(inner) = t.strip_prefix("e(").and_then(|s| s.strip_suffix(')')) {
        let v = q.vertex_index(inner.trim()).ok_or_else(|| Error::UnknownVertex(inner.trim().to_string()))?;
        return Ok(Walk::trivial(v));
    }
    let mut letters = Vec::new();
    for tok in t.split_whitespace() {
        let (name, inverse) = match tok.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (tok, false),
        };
        let a = q.arrow_index(name).ok_or_else(|| Error::UnknownArrow(name.to_string()))?;
        letters.push(Letter { arrow: a, inverse });
    }
    if letters.is_empty() {
        return Err(Error::Parse("empty word".into()));
    }
    Walk::new(q, letters)
}

/// Why a walk fails to be a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordViolation {
    /// Letters at `pos` and `pos + 1` are mutually inverse.
    InverseFactor { pos: usize },
    /// A relation (read directly or inversely) occupies `pos..pos + len`.
    Relation { pos: usize, len: usize },
}

impl fmt::Display for WordViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordViolation::InverseFactor { pos } => write!(f, "factor l l^-1 at position {pos}"),
            WordViolation::Relation { pos, len } => {
                write!(f, "relation of length {len} at position {pos}")
            }
        }
    }
}

/// Whether a relation ends at the last letter of `letters`.
fn relation_suffix(p: &Presentation, letters: &[Letter]) -> Option<usize> {
    let last = *letters.last()?;
    for r in p.relations() {
        let k = r.len();
        if k > letters.len() {
            continue;
        }
        let tail = &letters[letters.len() - k..];
        let hit = if last.is_direct() {
            tail.iter().zip(r.arrows()).all(|(l, &a)| l.is_direct() && l.arrow == a)
        } else {
            tail.iter().rev().zip(r.arrows()).all(|(l, &a)| !l.is_direct() && l.arrow == a)
        };
        if hit {
            return Some(k);
        }
    }
    None
}

/// Whether appending `next` to a word keeps it a word, assuming
/// composability.
pub fn extends_word(p: &Presentation, letters: &[Letter], next: Letter) -> bool {
    if letters.last() == Some(&next.inverted()) {
        return false;
    }
    let mut buf: Vec<Letter> = letters[letters.len().saturating_sub(p.max_relation_len())..].to_vec();
    buf.push(next);
    relation_suffix(p, &buf).is_none()
}

/// Checks the word conditions, reporting the first violation from the left.
pub fn check_word(p: &Presentation, w: &Walk) -> std::result::Result<(), WordViolation> {
    let ls = w.letters();
    for i in 0..ls.len() {
        if i > 0 && ls[i - 1] == ls[i].inverted() {
            return Err(WordViolation::InverseFactor { pos: i - 1 });
        }
        if let Some(k) = relation_suffix(p, &ls[..=i]) {
            return Err(WordViolation::Relation { pos: i + 1 - k, len: k });
        }
    }
    Ok(())
}

pub fn is_word(p: &Presentation, w: &Walk) -> bool {
    check_word(p, w).is_ok()
}

/// Non-serial, closed, and its square is a word.
pub fn is_cyclic(p: &Presentation, w: &Walk) -> bool {
    let q = p.quiver();
    if w.is_trivial() || w.is_serial() || w.source() != w.target(q) {
        return false;
    }
    let mut sq = w.letters().to_vec();
    sq.extend_from_slice(w.letters());
    let sq = Walk { start: w.start, letters: sq };
    is_word(p, &sq)
}

/// Shortest `d` such that `seq` is `seq[..d]` repeated; returns `(d, len/d)`.
pub fn primitive_root<T: PartialEq>(seq: &[T]) -> (usize, usize) {
    let n = seq.len();
    for d in 1..=n {
        if n.is_multiple_of(d) && (d..n).all(|i| seq[i] == seq[i - d]) {
            return (d, n / d);
        }
    }
    (n, 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Primitivity {
    pub primitive: bool,
    pub root: Walk,
    pub exponent: usize,
}

pub fn is_primitive(w: &Walk) -> Primitivity {
    let (d, r) = primitive_root(w.letters());
    Primitivity {
        primitive: r == 1,
        root: Walk {
            start: w.start,
            letters: w.letters()[..d].to_vec(),
        },
        exponent: r,
    }
}

/// Least rotation of `w` or of `w^-1`, comparing letter sequences.
pub fn canonical_cyclic(w: &Walk, q: &Quiver) -> Walk {
    let mut best = w.clone();
    for cand in [w.clone(), w.inverse(q)] {
        for k in 0..cand.len() {
            let r = cand.rotate(k, q);
            if r.letters < best.letters {
                best = r;
            }
        }
    }
    best
}

/// Least rotation of `w` alone.
pub fn canonical_rotation(w: &Walk, q: &Quiver) -> (usize, Walk) {
    let mut best = (0, w.clone());
    for k in 1..w.len() {
        let r = w.rotate(k, q);
        if r.letters < best.1.letters {
            best = (k, r);
        }
    }
    best
}

/// Length of the longest common prefix of `x^∞` and `y^∞`, capped at `cap`.
pub fn common_prefix_of_powers<T: PartialEq>(x: &[T], y: &[T], cap: usize) -> usize {
    if x.is_empty() || y.is_empty() {
        return 0;
    }
    (0..cap).find(|&i| x[i % x.len()] != y[i % y.len()]).unwrap_or(cap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    ForcedCommonRoot,
    Inconclusive,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Periodicity threshold: powers of `x` and `y` sharing a left factor of
/// length `|x| + |y| - gcd(|x|, |y|)` forces a common root.
pub fn fine_wolf_threshold(xlen: usize, ylen: usize) -> usize {
    xlen + ylen - gcd(xlen, ylen)
}

pub fn fine_wolf_common_power<T>(x: &[T], y: &[T], prefix_len: usize) -> Verdict {
    assert!(!x.is_empty() && !y.is_empty(), "sequences must be nonempty");
    if prefix_len >= fine_wolf_threshold(x.len(), y.len()) {
        Verdict::ForcedCommonRoot
    } else {
        Verdict::Inconclusive
    }
}

/// Whether `x` and `y` are powers of one sequence.
pub fn share_root<T: PartialEq>(x: &[T], y: &[T]) -> bool {
    let (dx, _) = primitive_root(x);
    let (dy, _) = primitive_root(y);
    dx == dy && x[..dx] == y[..dy]
}

/// All words of length at most `max_len`, one per inversion pair, ordered
/// by length then letters; trivial words first in vertex order.
pub fn enumerate_words(p: &Presentation, max_len: usize) -> Vec<Walk> {
    let q = p.quiver();
    let mut out: Vec<Walk> = (0..q.num_vertices()).map(Walk::trivial).collect();
    let mut layer: Vec<Vec<Letter>> = Vec::new();
    if max_len >= 1 {
        for a in 0..q.num_arrows() {
            layer.push(vec![Letter::direct(a)]);
            layer.push(vec![Letter::inv(a)]);
        }
    }
    let mut len = 1;
    while !layer.is_empty() && len <= max_len {
        let mut words: Vec<Walk> = layer
            .iter()
            .map(|ls| Walk {
                start: ls[0].source(q),
                letters: ls.clone(),
            })
            .filter(|w| w.letters <= w.inverse(q).letters)
            .collect();
        words.sort();
        out.extend(words);
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        for ls in &layer {
            let end = ls.last().unwrap().target(q);
            for a in 0..q.num_arrows() {
                for l in [Letter::direct(a), Letter::inv(a)] {
                    if l.source(q) == end && extends_word(p, ls, l) {
                        let mut n = ls.clone();
                        n.push(l);
                        next.push(n);
                    }
                }
            }
        }
        layer = next;
        len += 1;
    }
    out
}
