//! Covering sets of permutations: the bipartite graph between words and
//! permutations, exact minimum covers, and scans over permutation groups.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::shuffle::{is_gamma_shuffle_square, Recognizer};
use crate::words::{
    apply_permutation, enumerate_canonical_words, group_members, GroupKind, Permutation, Word,
};

/// One permutation per `{γ, γ⁻¹}`, the smaller in one-line order. Output is
/// sorted and deduplicated.
pub fn reduce_permutations(perms: &[Permutation]) -> Vec<Permutation> {
    let reduced: BTreeSet<Permutation> = perms
        .iter()
        .map(|p| {
            let inv = p.inverse();
            if inv < *p {
                inv
            } else {
                p.clone()
            }
        })
        .collect();
    reduced.into_iter().collect()
}

/// Words, candidate permutations and, per word, the sorted indices of the
/// permutations `γ` for which the word is a shuffle γ-square.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverInstance {
    pub words: Vec<Word>,
    pub perms: Vec<Permutation>,
    pub adjacency: Vec<Vec<usize>>,
}

impl CoverInstance {
    pub fn new(words: Vec<Word>, perms: Vec<Permutation>) -> Result<Self> {
        let adjacency = words
            .par_iter()
            .map(|w| {
                perms
                    .iter()
                    .enumerate()
                    .filter_map(|(i, p)| match is_gamma_shuffle_square(w, p) {
                        Ok(Some(_)) => Some(Ok(i)),
                        Ok(None) => None,
                        Err(e) => Some(Err(e)),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoverInstance {
            words,
            perms,
            adjacency,
        })
    }

    /// Index of `p` or of its inverse.
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        let inv = p.inverse();
        self.perms.iter().position(|q| q == p || *q == inv)
    }

    pub fn neighbors(&self, word: usize) -> impl Iterator<Item = &Permutation> {
        self.adjacency[word].iter().map(|&i| &self.perms[i])
    }

    /// Number of words adjacent to each permutation.
    pub fn perm_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.perms.len()];
        for adj in &self.adjacency {
            for &i in adj {
                deg[i] += 1;
            }
        }
        deg
    }

    /// Text matrix: a header of one-line permutations, then one row of 0/1
    /// entries per word.
    pub fn to_matrix(&self) -> String {
        let mut out = String::from("word");
        for p in &self.perms {
            out.push(' ');
            out.push_str(&p.to_string());
        }
        out.push('\n');
        for (w, adj) in self.words.iter().zip(&self.adjacency) {
            out.push_str(&w.to_string());
            for i in 0..self.perms.len() {
                out.push_str(if adj.binary_search(&i).is_ok() { " 1" } else { " 0" });
            }
            out.push('\n');
        }
        out
    }

    /// Parses [`CoverInstance::to_matrix`] output without recomputing any
    /// adjacency.
    pub fn from_matrix(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::parse("cover matrix", text, reason);
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let mut cols = header.split_whitespace();
        if cols.next() != Some("word") {
            return Err(bad("header must start with `word`"));
        }
        let perms = cols.map(str::parse).collect::<Result<Vec<Permutation>>>()?;
        let (mut words, mut adjacency) = (Vec::new(), Vec::new());
        for line in lines {
            let mut cells = line.split_whitespace();
            let word: Word = cells.next().ok_or_else(|| bad("missing word"))?.parse()?;
            let bits: Vec<&str> = cells.collect();
            if bits.len() != perms.len() || bits.iter().any(|b| *b != "0" && *b != "1") {
                return Err(bad("each row needs one 0/1 entry per permutation"));
            }
            adjacency.push((0..bits.len()).filter(|&i| bits[i] == "1").collect());
            words.push(word);
        }
        Ok(CoverInstance {
            words,
            perms,
            adjacency,
        })
    }
}

/// Canonical words over `k` letters against the reduced symmetric group.
pub fn build_cover_instance(k: usize) -> Result<CoverInstance> {
    if !(1..=6).contains(&k) {
        return Err(Error::Precondition(format!(
            "cover instances are supported for 1 <= k <= 6, got {k}"
        )));
    }
    let words = enumerate_canonical_words(k)
        .into_iter()
        .map(|c| c.into_word())
        .collect();
    let perms = reduce_permutations(&group_members(GroupKind::Symmetric, k));
    CoverInstance::new(words, perms)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverSolution {
    pub chosen: Vec<Permutation>,
    pub size: usize,
    pub optimal: bool,
}

impl fmt::Display for CoverSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.chosen {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for CoverSolution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chosen = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Permutation>>>()?;
        chosen.sort();
        Ok(CoverSolution {
            size: chosen.len(),
            chosen,
            optimal: false,
        })
    }
}

#[derive(Clone)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn full(n: usize) -> Self {
        let mut b = vec![u64::MAX; n.div_ceil(64)];
        if n % 64 != 0 {
            *b.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        Bitset(b)
    }

    fn empty(n: usize) -> Self {
        Bitset(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn overlap(&self, other: &Bitset) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn minus(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| 64 * i + b)
        })
    }
}

struct Solver<'a> {
    instance: &'a CoverInstance,
    covers: Vec<Bitset>,
    best: usize,
}

impl Solver<'_> {
    fn lower_bound(&self, uncovered: &Bitset, allowed: impl Iterator<Item = usize>) -> usize {
        let left = uncovered.count();
        let max = allowed
            .map(|p| self.covers[p].overlap(uncovered))
            .max()
            .unwrap_or(0);
        if left == 0 {
            0
        } else if max == 0 {
            usize::MAX
        } else {
            left.div_ceil(max)
        }
    }

    /// Branches on the uncovered word with fewest neighbors; each branch
    /// picks one of them, most residual coverage first.
    fn search(&mut self, uncovered: &Bitset, used: usize) {
        if uncovered.is_empty() {
            self.best = self.best.min(used);
            return;
        }
        let bound = self.lower_bound(uncovered, 0..self.covers.len());
        if used.saturating_add(bound) >= self.best {
            return;
        }
        let word = uncovered
            .ones()
            .min_by_key(|&w| self.instance.adjacency[w].len())
            .expect("non-empty");
        let mut options = self.instance.adjacency[word].clone();
        options.sort_by_key(|&p| std::cmp::Reverse(self.covers[p].overlap(uncovered)));
        for p in options {
            let rest = uncovered.minus(&self.covers[p]);
            self.search(&rest, used + 1);
        }
    }

    /// Lexicographically least set of exactly `size` permutation indices,
    /// all at least `start`, that covers `uncovered`.
    fn least(&self, uncovered: &Bitset, start: usize, size: usize, chosen: &mut Vec<usize>) -> bool {
        if uncovered.is_empty() {
            return chosen.len() == size;
        }
        let picks = size - chosen.len();
        if picks == 0 || self.lower_bound(uncovered, start..self.covers.len()) > picks {
            return false;
        }
        for p in start..self.covers.len() {
            if self.covers[p].overlap(uncovered) == 0 {
                continue;
            }
            chosen.push(p);
            if self.least(&uncovered.minus(&self.covers[p]), p + 1, size, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// An exact minimum covering set; among minima the lexicographically least
/// index set (the permutations of an instance are kept sorted).
pub fn min_cover(instance: &CoverInstance) -> Result<CoverSolution> {
    if instance.words.is_empty() {
        return Err(Error::Precondition("cover instance has no words".into()));
    }
    if let Some(w) = instance.adjacency.iter().position(Vec::is_empty) {
        return Err(Error::Infeasible {
            word: instance.words[w].to_string(),
        });
    }
    let n = instance.words.len();
    let mut covers = vec![Bitset::empty(n); instance.perms.len()];
    for (w, adj) in instance.adjacency.iter().enumerate() {
        for &p in adj {
            covers[p].set(w);
        }
    }
    let mut solver = Solver {
        instance,
        covers,
        best: instance.perms.len() + 1,
    };
    let all = Bitset::full(n);
    solver.search(&all, 0);
    let size = solver.best;
    let mut chosen = Vec::with_capacity(size);
    if !solver.least(&all, 0, size, &mut chosen) {
        return Err(Error::Precondition("no cover of the optimal size found".into()));
    }
    let mut chosen: Vec<Permutation> = chosen.iter().map(|&i| instance.perms[i].clone()).collect();
    chosen.sort();
    Ok(CoverSolution {
        chosen,
        size,
        optimal: true,
    })
}

/// True iff every word has a neighbor in `candidate`. A candidate counts
/// through whichever of itself or its inverse the instance lists.
pub fn verify_cover(instance: &CoverInstance, candidate: &[Permutation]) -> bool {
    let picked: BTreeSet<usize> = candidate.iter().filter_map(|p| instance.index_of(p)).collect();
    instance
        .adjacency
        .iter()
        .all(|adj| adj.iter().any(|i| picked.contains(i)))
}

/// Even words over `k` letters of each even length up to `max_length`, one
/// per class under reversal and renaming of letters.
pub fn even_words_up_to_reversal(k: usize, max_length: usize) -> Vec<Word> {
    fn extend(prefix: &mut Vec<u8>, used: u8, k: u8, len: usize, out: &mut Vec<Word>) {
        if prefix.len() == len {
            let w = Word::new(prefix.clone(), k as usize).expect("letters below k");
            if crate::words::is_even(&w) && w <= w.reversed().normalized() {
                out.push(w);
            }
            return;
        }
        for c in 0..(used + 1).min(k) {
            prefix.push(c);
            extend(prefix, used.max(c + 1), k, len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for len in (2..=max_length).step_by(2) {
        extend(&mut Vec::with_capacity(len), 0, k as u8, len, &mut out);
    }
    out
}

/// Words up to `max_length` (one per class under reversal and renaming) that
/// are not shuffle γ-squares for any `γ` in the group of degree `|w|/2`.
pub fn group_scan(kind: GroupKind, k: usize, max_length: usize) -> Vec<Word> {
    let words = even_words_up_to_reversal(k, max_length);
    let mut groups: Vec<Vec<Permutation>> = Vec::new();
    for n in 0..=max_length / 2 {
        groups.push(reduce_permutations(&group_members(kind, n)));
    }
    words
        .into_par_iter()
        .filter(|w| {
            !groups[w.len() / 2]
                .iter()
                .any(|g| matches!(is_gamma_shuffle_square(w, g), Ok(Some(_))))
        })
        .collect()
}

/// [`group_scan`] over the dihedral groups.
pub fn dihedral_scan(k: usize, max_length: usize) -> Vec<Word> {
    group_scan(GroupKind::Dihedral, k, max_length)
}

/// The permutations `γ` of the whole word for which `γ(w)` is a shuffle square.
pub fn whole_word_transform_scan(w: &Word, perms: &[Permutation]) -> Result<BTreeSet<Permutation>> {
    let mut rec = Recognizer::new();
    let mut out = BTreeSet::new();
    for p in perms {
        let image = apply_permutation(p, w)?;
        if rec.decide(image.letters(), image.alphabet_size()) {
            out.insert(p.clone());
        }
    }
    Ok(out)
}
