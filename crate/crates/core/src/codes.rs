//! Digraphs of cyclically consecutive letters, their Euler numbers, and chord
//! diagrams of double-occurrence words.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::shuffle::Recognizer;
use crate::words::{enumerate_canonical_words, primitive_period, Word};

fn letter_name(w: &Word, c: u8) -> String {
    Word::new(vec![c], w.alphabet_size())
        .map(|x| x.to_letter_string())
        .unwrap_or_default()
}

/// Vertices are the letters of a word; one arc per cyclically consecutive
/// pair of positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordDigraph {
    pub word: Word,
    pub vertices: Vec<u8>,
    /// In word order, closing arc last.
    pub arcs: Vec<(u8, u8)>,
}

pub fn gauss_digraph(w: &Word) -> WordDigraph {
    let l = w.letters();
    let arcs = (0..l.len()).map(|i| (l[i], l[(i + 1) % l.len()])).collect();
    let mut vertices = l.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    WordDigraph {
        word: w.clone(),
        vertices,
        arcs,
    }
}

impl WordDigraph {
    pub fn out_degree(&self, v: u8) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: u8) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    /// Arc multiplicities.
    pub fn arc_counts(&self) -> BTreeMap<(u8, u8), usize> {
        let mut m = BTreeMap::new();
        for &a in &self.arcs {
            *m.entry(a).or_insert(0) += 1;
        }
        m
    }

    /// One `X Y` line per arc.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(a, b) in &self.arcs {
            let _ = writeln!(out, "{} {}", letter_name(&self.word, a), letter_name(&self.word, b));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph D {\n");
        for &v in &self.vertices {
            let _ = writeln!(out, "  {};", letter_name(&self.word, v));
        }
        for &(a, b) in &self.arcs {
            let _ = writeln!(out, "  {} -> {};", letter_name(&self.word, a), letter_name(&self.word, b));
        }
        out.push_str("}\n");
        out
    }
}

/// Eulerian circuits of a word digraph, counted two ways: `distinct` closed
/// letter sequences up to rotation (parallel arcs interchangeable), and
/// `labelled` circuits with parallel arcs told apart (the BEST count).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EulerCount {
    pub distinct: u128,
    pub labelled: u128,
}

fn dense(d: &WordDigraph) -> (usize, Vec<Vec<usize>>, usize, usize) {
    let index = |v: u8| d.vertices.binary_search(&v).expect("vertex of the digraph");
    let n = d.vertices.len();
    let mut m = vec![vec![0usize; n]; n];
    for &(a, b) in &d.arcs {
        m[index(a)][index(b)] += 1;
    }
    let (a0, b0) = d.arcs[0];
    (n, m, index(a0), index(b0))
}

fn least_rotation(seq: &[usize]) -> Vec<usize> {
    (0..seq.len())
        .map(|j| [&seq[j..], &seq[..j]].concat())
        .min()
        .unwrap_or_default()
}

/// Walks every circuit that starts with a copy of the arc `(w[0], w[1])`.
pub fn euler_number_backtracking(w: &Word) -> Result<EulerCount> {
    let d = gauss_digraph(w);
    if d.arcs.is_empty() {
        return Ok(EulerCount { distinct: 1, labelled: 1 });
    }
    let (_, mut m, a0, b0) = dense(&d);
    struct Walk {
        trail: Vec<usize>,
        seen: BTreeSet<Vec<usize>>,
        labelled: u128,
    }
    fn walk(m: &mut [Vec<usize>], at: usize, left: usize, weight: u128, state: &mut Walk) {
        if left == 0 {
            state.labelled += weight;
            state.seen.insert(least_rotation(&state.trail[..state.trail.len() - 1]));
            return;
        }
        for next in 0..m.len() {
            let copies = m[at][next];
            if copies > 0 {
                m[at][next] -= 1;
                state.trail.push(next);
                walk(m, next, left - 1, weight * copies as u128, state);
                state.trail.pop();
                m[at][next] += 1;
            }
        }
    }
    m[a0][b0] -= 1;
    let mut state = Walk {
        trail: vec![a0, b0],
        seen: BTreeSet::new(),
        labelled: 0,
    };
    walk(&mut m, b0, d.arcs.len() - 1, 1, &mut state);
    if state.labelled == 0 {
        return Err(Error::Precondition(format!("digraph of {w} is not Eulerian")));
    }
    Ok(EulerCount {
        distinct: state.seen.len() as u128,
        labelled: state.labelled,
    })
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Integer determinant by fraction-free elimination.
fn determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

/// The same counts from arborescences, `labelled = t · Π (deg(v) − 1)!`, for
/// words with every letter exactly twice. A closed sequence fixed by a
/// nontrivial rotation must then be `UU` with `U` using each letter once,
/// whose digraph has that single circuit; otherwise each distinct circuit
/// has `Π m_e!` labellings.
pub fn euler_number_best(w: &Word) -> Result<EulerCount> {
    if w.letter_counts().iter().any(|&c| c != 0 && c != 2) {
        return Err(Error::Precondition(format!("{w} is not a double-occurrence word")));
    }
    let d = gauss_digraph(w);
    if d.arcs.is_empty() {
        return Ok(EulerCount { distinct: 1, labelled: 1 });
    }
    let (n, m, a0, _) = dense(&d);
    let out: Vec<usize> = m.iter().map(|row| row.iter().sum()).collect();
    if (0..n).any(|v| out[v] != (0..n).map(|u| m[u][v]).sum::<usize>()) {
        return Err(Error::Precondition(format!("digraph of {w} is not balanced")));
    }
    // Laplacian with the anchor's row and column removed.
    let keep: Vec<usize> = (0..n).filter(|&v| v != a0).collect();
    let minor: Vec<Vec<i128>> = keep
        .iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| {
                    if i == j {
                        (out[i] - m[i][i]) as i128
                    } else {
                        -(m[i][j] as i128)
                    }
                })
                .collect()
        })
        .collect();
    let trees = determinant(minor);
    if trees <= 0 {
        return Err(Error::Precondition(format!("digraph of {w} is not connected")));
    }
    let labelled = trees as u128 * out.iter().map(|&o| factorial(o - 1)).product::<u128>();
    let multiplicity: u128 = m.iter().flatten().map(|&c| factorial(c)).product();
    let distinct = if primitive_period(w.letters()) < w.len() {
        1
    } else {
        labelled / multiplicity
    };
    Ok(EulerCount { distinct, labelled })
}

/// Number of distinct circuits; see [`EulerCount`].
pub fn euler_number(w: &Word) -> Result<u128> {
    euler_number_backtracking(w).map(|c| c.distinct)
}

/// Chords join the two occurrences of each letter of a double-occurrence word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChordDiagram {
    pub word: Word,
    /// Per letter, its two positions in increasing order.
    pub chords: Vec<(usize, usize)>,
    /// Pairs of letters whose chords cross, each pair sorted, in order.
    pub edges: Vec<(u8, u8)>,
}

pub fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |p: usize| a.0 < p && p < a.1;
    inside(b.0) != inside(b.1)
}

pub fn circle_graph(w: &Word) -> Result<ChordDiagram> {
    let k = w.alphabet_size();
    let mut pos = vec![Vec::new(); k];
    for (i, &c) in w.letters().iter().enumerate() {
        pos[c as usize].push(i);
    }
    if pos.iter().any(|p| p.len() != 2) {
        return Err(Error::Precondition(format!(
            "{w} is not a word with every letter exactly twice"
        )));
    }
    let chords: Vec<(usize, usize)> = pos.iter().map(|p| (p[0], p[1])).collect();
    let mut edges = Vec::new();
    for x in 0..k {
        for y in x + 1..k {
            if chords_cross(chords[x], chords[y]) {
                edges.push((x as u8, y as u8));
            }
        }
    }
    Ok(ChordDiagram {
        word: w.clone(),
        chords,
        edges,
    })
}

impl ChordDiagram {
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "{} {}", letter_name(&self.word, a), letter_name(&self.word, b));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for c in 0..self.chords.len() as u8 {
            let _ = writeln!(out, "  {};", letter_name(&self.word, c));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  {} -- {};", letter_name(&self.word, a), letter_name(&self.word, b));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EulerRow {
    pub word: Word,
    pub backtracking: EulerCount,
    pub best: EulerCount,
    pub shuffle_square: bool,
}

impl EulerRow {
    /// Euler number one exactly when shuffle square, as remarked for canonical words.
    pub fn coincides(&self) -> bool {
        (self.backtracking.distinct == 1) == self.shuffle_square
    }

    pub fn methods_agree(&self) -> bool {
        self.backtracking == self.best
    }
}

/// Both Euler counts and the shuffle-square decision for every canonical word
/// over `k` letters.
pub fn euler_shuffle_scan(k: usize) -> Result<Vec<EulerRow>> {
    if !(1..=6).contains(&k) {
        return Err(Error::Precondition(format!("euler scan supports 1 <= k <= 6, got {k}")));
    }
    enumerate_canonical_words(k)
        .into_par_iter()
        .map_init(Recognizer::new, |rec, c| {
            let word = c.into_word();
            Ok(EulerRow {
                backtracking: euler_number_backtracking(&word)?,
                best: euler_number_best(&word)?,
                shuffle_square: rec.decide(word.letters(), k),
                word,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{all_circuits, segments_cross};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn arc_names(d: &WordDigraph) -> Vec<String> {
        d.to_edge_list().lines().map(|l| l.replace(' ', "")).collect()
    }

    #[test]
    fn digraph_examples() {
        assert_eq!(arc_names(&gauss_digraph(&w("AABCBC"))), ["AA", "AB", "BC", "CB", "BC", "CA"]);
        assert_eq!(arc_names(&gauss_digraph(&w("AA"))), ["AA", "AA"]);
        assert_eq!(arc_names(&gauss_digraph(&w("ABAB"))), ["AB", "BA", "AB", "BA"]);
        let dot = gauss_digraph(&w("ABAB")).to_dot();
        assert!(dot.starts_with("digraph D {\n  A;\n  B;\n  A -> B;\n"));
    }

    #[test]
    fn canonical_digraphs_are_balanced() {
        for k in 1..=4 {
            for c in enumerate_canonical_words(k) {
                let d = gauss_digraph(c.word());
                assert_eq!(d.arcs.len(), 2 * k);
                for &v in &d.vertices {
                    assert_eq!((d.in_degree(v), d.out_degree(v)), (2, 2), "{c}");
                }
            }
        }
    }

    #[test]
    fn euler_examples() {
        let count = |s| euler_number_backtracking(&w(s)).unwrap();
        assert_eq!(count("AABCBC"), EulerCount { distinct: 1, labelled: 2 });
        assert_eq!(count("AA"), EulerCount { distinct: 1, labelled: 1 });
        assert_eq!(count("ABAB"), EulerCount { distinct: 1, labelled: 2 });
        assert_eq!(count("AABB"), EulerCount { distinct: 1, labelled: 1 });
        assert_eq!(count("ABABCC"), EulerCount { distinct: 1, labelled: 2 });
        // Not a shuffle square, yet its circuit is unique.
        assert_eq!(count("ABBA"), EulerCount { distinct: 1, labelled: 1 });
        assert_eq!(euler_number(&w("ABCABC")).unwrap(), 1);
    }

    #[test]
    fn counts_match_circuit_enumeration() {
        for k in 1..=4 {
            for c in enumerate_canonical_words(k) {
                let d = gauss_digraph(c.word());
                let circuits = all_circuits(&d.arcs, 0);
                // Closed sequences without the repeated endpoint, up to rotation.
                let distinct: BTreeSet<Vec<u8>> = circuits
                    .iter()
                    .map(|c| {
                        let open = &c[..c.len() - 1];
                        (0..open.len()).map(|j| [&open[j..], &open[..j]].concat()).min().unwrap()
                    })
                    .collect();
                let expected = EulerCount {
                    distinct: distinct.len() as u128,
                    labelled: circuits.len() as u128,
                };
                assert_eq!(euler_number_backtracking(c.word()).unwrap(), expected, "{c}");
                assert_eq!(euler_number_best(c.word()).unwrap(), expected, "{c}");
            }
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(vec![]), 1);
        assert_eq!(determinant(vec![vec![0, 2], vec![3, 1]]), -6);
        assert_eq!(determinant(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]), 4);
    }

    #[test]
    fn chord_examples() {
        let edges = |s: &str| -> Vec<String> {
            circle_graph(&w(s)).unwrap().to_edge_list().lines().map(|l| l.replace(' ', "")).collect()
        };
        assert_eq!(edges("ABCADCBD"), ["AB", "AC", "BD", "CD"]);
        assert!(edges("AABB").is_empty());
        assert_eq!(edges("ABAB"), ["AB"]);
        assert!(circle_graph(&w("ABA")).is_err());
        assert_eq!(circle_graph(&w("ABAB")).unwrap().to_dot(), "graph G {\n  A;\n  B;\n  A -- B;\n}\n");
    }

    #[test]
    fn interleaving_matches_geometry() {
        for k in 2..=5 {
            for c in enumerate_canonical_words(k) {
                let g = circle_graph(c.word()).unwrap();
                let len = 2 * k;
                for x in 0..k {
                    assert!(!chords_cross(g.chords[x], g.chords[x]));
                    for y in 0..k {
                        let (a, b) = g.chords[x];
                        let (p, q) = g.chords[y];
                        let crossing = x != y && segments_cross(len, a, b, p, q);
                        assert_eq!(chords_cross(g.chords[x], g.chords[y]), crossing, "{c}");
                        let listed = g.edges.contains(&(x.min(y) as u8, x.max(y) as u8));
                        assert_eq!(listed, crossing);
                    }
                }
            }
        }
    }

    #[test]
    fn euler_scan_rows() {
        let rows = euler_shuffle_scan(2).unwrap();
        let summary: Vec<(String, u128, bool)> = rows
            .iter()
            .map(|r| (r.word.to_letter_string(), r.backtracking.distinct, r.shuffle_square))
            .collect();
        assert_eq!(
            summary,
            [("AABB".into(), 1, true), ("ABAB".into(), 1, true), ("ABBA".into(), 1, false)]
        );
        assert!(rows.iter().all(EulerRow::methods_agree));
        assert!(!rows[2].coincides());
        let one = euler_shuffle_scan(1).unwrap();
        assert!(one[0].coincides() && one[0].backtracking.distinct == 1);
    }
}
