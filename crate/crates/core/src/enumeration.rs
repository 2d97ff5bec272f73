//! Exhaustive counts of binary shuffle squares, closed forms for two 1's and
//! for canonical words, and the nesting pattern `XYYX`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::shuffle::{Recognizer, SplitWitness};
use crate::words::{enumerate_canonical_words, CanonicalWord, Permutation, Word};

/// `entries[n][k]` is the number of binary shuffle squares of length `2n`
/// with `2k` ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountTable {
    pub max_length: usize,
    pub entries: Vec<Vec<u64>>,
    pub totals: Vec<u64>,
}

impl CountTable {
    /// `|B(length, ones)|`; zero outside the table.
    pub fn entry(&self, length: usize, ones: usize) -> u64 {
        self.entries
            .get(length / 2)
            .and_then(|row| row.get(ones / 2))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self, length: usize) -> u64 {
        self.totals.get(length / 2).copied().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|row| row.iter().eq(row.iter().rev()))
    }

    /// CSV with one row per number of 1's, one column per length, and a
    /// final row of totals.
    pub fn to_csv(&self) -> String {
        let half = self.max_length / 2;
        let mut out = String::from("2k/2n");
        for n in 1..=half {
            out.push_str(&format!(",{}", 2 * n));
        }
        out.push('\n');
        for k in 0..=half {
            out.push_str(&(2 * k).to_string());
            for n in 1..=half {
                out.push_str(&format!(",{}", self.entry(2 * n, 2 * k)));
            }
            out.push('\n');
        }
        out.push_str("sum");
        for n in 1..=half {
            out.push_str(&format!(",{}", self.total(2 * n)));
        }
        out.push('\n');
        out
    }
}

impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = self.max_length / 2;
        let width = self
            .totals
            .iter()
            .map(|t| t.to_string().len())
            .max()
            .unwrap_or(1)
            .max(5);
        write!(f, "{:>5}", "2k\\2n")?;
        for n in 1..=half {
            write!(f, " {:>width$}", 2 * n)?;
        }
        writeln!(f)?;
        for k in 0..=half {
            write!(f, "{:>5}", 2 * k)?;
            for n in 1..=half {
                write!(f, " {:>width$}", self.entry(2 * n, 2 * k))?;
            }
            writeln!(f)?;
        }
        write!(f, "{:>5}", "sum")?;
        for n in 1..=half {
            write!(f, " {:>width$}", self.total(2 * n))?;
        }
        writeln!(f)
    }
}

/// Next integer with the same number of set bits (Gosper).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Binary shuffle squares of `length` with exactly `ones` 1's, by deciding
/// every such word.
pub fn count_cell(length: usize, ones: usize) -> u64 {
    if ones > length || ones % 2 == 1 || length % 2 == 1 {
        return 0;
    }
    if ones == 0 || ones == length {
        return 1;
    }
    let mut rec = Recognizer::new();
    let mut letters = vec![0u8; length];
    let last = ((1u64 << ones) - 1) << (length - ones);
    let mut x = (1u64 << ones) - 1;
    let mut count = 0;
    loop {
        for (i, l) in letters.iter_mut().enumerate() {
            *l = ((x >> (length - 1 - i)) & 1) as u8;
        }
        if rec.decide(&letters, 2) {
            count += 1;
        }
        if x == last {
            break;
        }
        x = next_combination(x);
    }
    count
}

/// All cells `(2n, 2k)` with `2n <= max_length`, computed in parallel on the
/// current rayon pool.
pub fn count_table(max_length: usize) -> Result<CountTable> {
    if max_length < 2 || max_length % 2 == 1 || max_length > 62 {
        return Err(Error::Precondition(format!(
            "table length must be even and between 2 and 62, got {max_length}"
        )));
    }
    let half = max_length / 2;
    let cells: Vec<(usize, usize)> = (1..=half)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .collect();
    let counts: Vec<u64> = cells
        .par_iter()
        .map(|&(n, k)| count_cell(2 * n, 2 * k))
        .collect();
    let mut entries: Vec<Vec<u64>> = (0..=half).map(|n| vec![0; n + 1]).collect();
    entries[0][0] = 1;
    for (&(n, k), &c) in cells.iter().zip(&counts) {
        entries[n][k] = c;
    }
    let totals = entries.iter().map(|row| row.iter().sum()).collect();
    Ok(CountTable {
        max_length,
        entries,
        totals,
    })
}

/// Shuffle squares of length `2n` with two 1's: `3n(n-1)/2 + 1`.
pub fn two_ones_closed_form(n: u64) -> u64 {
    3 * n * (n - 1) / 2 + 1
}

/// Binary shuffle squares of `length`, by deciding every even word.
pub fn total_shuffle_squares(length: usize) -> Result<u64> {
    if length % 2 == 1 || length > 40 {
        return Err(Error::Precondition(format!(
            "length must be even and at most 40, got {length}"
        )));
    }
    let words = 1u64 << length;
    let count = (0..words)
        .into_par_iter()
        .filter(|x| x.count_ones() % 2 == 0)
        .map_init(
            || (Recognizer::new(), vec![0u8; length]),
            |(rec, letters), x| {
                for (i, l) in letters.iter_mut().enumerate() {
                    *l = ((x >> (length - 1 - i)) & 1) as u8;
                }
                rec.decide(letters, 2) as u64
            },
        )
        .sum();
    Ok(count)
}

/// True iff some letter `Y` occurs twice strictly between two occurrences of
/// a different letter `X`.
pub fn has_xyyx_subword(w: &Word) -> bool {
    let l = w.letters();
    let k = w.alphabet_size();
    let mut first = vec![usize::MAX; k];
    let mut last = vec![0; k];
    for (i, &c) in l.iter().enumerate() {
        let c = c as usize;
        first[c] = first[c].min(i);
        last[c] = i;
    }
    let mut inside = vec![0usize; k];
    (0..k).filter(|&x| first[x] != usize::MAX && last[x] > first[x]).any(|x| {
        inside.fill(0);
        l[first[x] + 1..last[x]].iter().any(|&y| {
            let y = y as usize;
            inside[y] += 1;
            y != x && inside[y] == 2
        })
    })
}

/// `n`-th Catalan number, exact for `n <= 66`.
pub fn catalan(n: u32) -> u128 {
    (0..n).fold(1u128, |c, i| c * 2 * (2 * i as u128 + 1) / (i as u128 + 2))
}

/// Shuffle squares among the canonical words over `k` letters.
pub fn canonical_shuffle_square_count(k: usize) -> u64 {
    let words = enumerate_canonical_words(k);
    words
        .par_iter()
        .map_init(Recognizer::new, |rec, w| rec.decide(w.word().letters(), k) as u64)
        .sum()
}

/// First occurrence of every letter in the first half. This is a valid split
/// exactly when the canonical word is a shuffle square.
pub fn greedy_witness(w: &CanonicalWord) -> Option<SplitWitness> {
    let word = w.word();
    let mut seen = vec![false; w.k()];
    let (first, second): (Vec<usize>, Vec<usize>) = (0..word.len())
        .partition(|&i| !std::mem::replace(&mut seen[word.letters()[i] as usize], true));
    let witness = SplitWitness {
        gamma: Permutation::identity(first.len()),
        first_positions: first,
        second_positions: second,
    };
    (word.subword(&witness.first_positions) == word.subword(&witness.second_positions))
        .then_some(witness)
}

/// Colour string of a split: `b` for the first half, `r` for the second.
pub fn color_pattern(witness: &SplitWitness) -> String {
    let len = witness.first_positions.len() + witness.second_positions.len();
    let mut out = vec!['r'; len];
    for &i in &witness.first_positions {
        out[i] = 'b';
    }
    out.into_iter().collect()
}

/// Balanced over `b`/`r` with no prefix holding more `r` than `b`.
pub fn is_dyck_word(pattern: &str) -> bool {
    let mut depth = 0i64;
    for c in pattern.chars() {
        depth += match c {
            'b' => 1,
            'r' => -1,
            _ => return false,
        };
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}
