//! Words over small alphabets, permutations acting on positions, and the
//! symmetry orbits used throughout the crate.
//!
//! Letters are stored as indices `0..k`. Text output renders binary words with
//! `0`/`1` and anything larger with `A`, `B`, `C`, ...

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A finite word over the alphabet `{0, .., alphabet_size - 1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    letters: Vec<u8>,
    alphabet_size: u8,
}

impl Word {
    pub fn new(letters: Vec<u8>, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 || alphabet_size > u8::MAX as usize {
            return Err(Error::Precondition(format!(
                "alphabet size must be in 1..=255, got {alphabet_size}"
            )));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= alphabet_size) {
            return Err(Error::InvalidLetter {
                letter: bad as usize,
                alphabet_size,
            });
        }
        Ok(Word {
            letters,
            alphabet_size: alphabet_size as u8,
        })
    }

    pub fn empty(alphabet_size: usize) -> Self {
        Word::new(Vec::new(), alphabet_size).expect("positive alphabet size")
    }

    /// Binary word from a slice of `0`/`1` values.
    pub fn binary(bits: &[u8]) -> Result<Self> {
        Word::new(bits.to_vec(), 2)
    }

    /// Binary word of length `len` whose first letter is the most significant
    /// of the low `len` bits, so numeric order equals lexicographic order.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= 64, "packed binary words hold at most 64 letters");
        let letters = (0..len)
            .map(|i| ((bits >> (len - 1 - i)) & 1) as u8)
            .collect();
        Word {
            letters,
            alphabet_size: 2,
        }
    }

    /// Inverse of [`Word::from_bits`]. Only meaningful for binary words.
    pub fn to_bits(&self) -> Option<u64> {
        if self.alphabet_size > 2 || self.len() > 64 {
            return None;
        }
        Some(
            self.letters
                .iter()
                .fold(0u64, |acc, &l| (acc << 1) | l as u64),
        )
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size as usize
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet_size <= 2
    }

    pub fn letter_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet_size()];
        for &l in &self.letters {
            counts[l as usize] += 1;
        }
        counts
    }

    pub fn count(&self, letter: u8) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Number of distinct letters that actually occur.
    pub fn distinct_letters(&self) -> usize {
        self.letter_counts().iter().filter(|&&c| c > 0).count()
    }

    /// Moves the first `j` letters to the end.
    pub fn rotate_left(&self, j: usize) -> Word {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let j = j % letters.len();
            letters.rotate_left(j);
        }
        Word {
            letters,
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word {
            letters,
            alphabet_size: self.alphabet_size,
        }
    }

    /// Applies the letter map `letter -> map[letter]`.
    pub fn renamed(&self, map: &[u8]) -> Result<Word> {
        if map.len() != self.alphabet_size() {
            return Err(Error::LengthMismatch {
                expected: self.alphabet_size(),
                found: map.len(),
            });
        }
        let letters = self.letters.iter().map(|&l| map[l as usize]).collect();
        Word::new(letters, self.alphabet_size())
    }

    /// `letter -> k - 1 - letter`; for binary words this swaps 0 and 1.
    pub fn complement(&self) -> Word {
        let top = self.alphabet_size - 1;
        Word {
            letters: self.letters.iter().map(|&l| top - l).collect(),
            alphabet_size: self.alphabet_size,
        }
    }

    /// The lexicographically least word obtainable by renaming letters:
    /// letters are relabelled in order of first occurrence.
    pub fn normalized(&self) -> Word {
        let mut map = [u8::MAX; 256];
        let mut next = 0u8;
        let letters = self
            .letters
            .iter()
            .map(|&l| {
                if map[l as usize] == u8::MAX {
                    map[l as usize] = next;
                    next += 1;
                }
                map[l as usize]
            })
            .collect();
        Word {
            letters,
            alphabet_size: self.alphabet_size,
        }
    }

    /// The subword read off at the given positions.
    pub fn subword(&self, positions: &[usize]) -> Word {
        Word {
            letters: positions.iter().map(|&p| self.letters[p]).collect(),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            alphabet_size: self.alphabet_size.max(other.alphabet_size),
        }
    }

    /// Renders with `A, B, C, ...` regardless of alphabet size.
    pub fn to_letter_string(&self) -> String {
        self.letters.iter().map(|&l| letter_char(l)).collect()
    }
}

fn letter_char(l: u8) -> char {
    if l < 26 {
        (b'A' + l) as char
    } else {
        '?'
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .cmp(&other.letters)
            .then(self.alphabet_size.cmp(&other.alphabet_size))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet_size <= 2 {
            for &l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_letter_string())
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts a bare string of digits (`0011`, `012210`) or of capital
    /// letters (`ABABCC`); the two styles cannot be mixed.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty(2));
        }
        if s.bytes().all(|b| b.is_ascii_digit()) {
            let letters: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
            let k = letters.iter().copied().max().unwrap_or(0) as usize + 1;
            return Word::new(letters, k.max(2));
        }
        if s.bytes().all(|b| b.is_ascii_uppercase()) {
            let letters: Vec<u8> = s.bytes().map(|b| b - b'A').collect();
            let k = letters.iter().copied().max().unwrap_or(0) as usize + 1;
            return Word::new(letters, k);
        }
        let reason = if s.bytes().all(|b| b.is_ascii_digit() || b.is_ascii_uppercase()) {
            "mixed digit and letter alphabets"
        } else {
            "expected only digits or only capital letters"
        };
        Err(Error::parse("word", s, reason))
    }
}

/// True iff every letter occurs an even number of times.
pub fn is_even(w: &Word) -> bool {
    w.letter_counts().iter().all(|c| c % 2 == 0)
}

/// All `len(w)` cyclic shifts, with multiplicity; entry `j` moves the first
/// `j` letters to the end.
pub fn cyclic_shifts(w: &Word) -> Vec<Word> {
    (0..w.len()).map(|j| w.rotate_left(j)).collect()
}

/// Smallest `p > 0` with `rotate_left(p) == w` (the length for aperiodic words,
/// 0 for the empty word).
pub fn primitive_period(letters: &[u8]) -> usize {
    let n = letters.len();
    (1..=n)
        .filter(|p| n % p == 0)
        .find(|&p| (0..n).all(|i| letters[i] == letters[(i + p) % n]))
        .unwrap_or(0)
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// A permutation of positions, stored 0-based. Text form is the 1-based
/// one-line notation, e.g. `231`; degrees of ten or more use commas.
///
/// Applying `γ` to a word reads `γ(W) = w[γ₁] w[γ₂] ⋯ w[γₙ]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn from_zero_based(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &m in &map {
            if m >= n || std::mem::replace(&mut seen[m], true) {
                return Err(Error::NotAPermutation {
                    degree: n,
                    mapping: map.iter().map(|x| x + 1).collect(),
                });
            }
        }
        Ok(Permutation { map })
    }

    /// From 1-based one-line notation, e.g. `&[2, 3, 1]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        if one_line.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::NotAPermutation {
                degree: n,
                mapping: one_line.to_vec(),
            });
        }
        Permutation::from_zero_based(one_line.iter().map(|x| x - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// The cyclic permutation `(t+1)(t+2)⋯n 1⋯t`; applying it moves the first
    /// `t` letters to the end.
    pub fn rotation(n: usize, t: usize) -> Self {
        Permutation {
            map: (0..n).map(|i| (i + t) % n).collect(),
        }
    }

    /// Reflection `i -> (c - i) mod n` of the regular n-gon with vertices
    /// labelled `0..n` (1-based in text form).
    pub fn reflection(n: usize, c: usize) -> Self {
        Permutation {
            map: (0..n).map(|i| (c % n.max(1) + n - i) % n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn zero_based(&self) -> &[usize] {
        &self.map
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|x| x + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &m) in self.map.iter().enumerate() {
            inv[m] = i;
        }
        Permutation { map: inv }
    }

    /// Index composition `i -> self[other[i]]`. Note that applying `other`
    /// to a word and then `self` equals applying `other.compose(self)`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                degree: self.degree(),
                length: other.degree(),
            });
        }
        Ok(Permutation {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        })
    }

    pub fn apply<T: Clone>(&self, items: &[T]) -> Result<Vec<T>> {
        if items.len() != self.degree() {
            return Err(Error::DegreeMismatch {
                degree: self.degree(),
                length: items.len(),
            });
        }
        Ok(self.map.iter().map(|&i| items[i].clone()).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &m)| i == m)
    }

    pub fn is_involution(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &m)| self.map[m] == i)
    }

    /// `Some(t)` if this is [`Permutation::rotation`]`(n, t)`.
    pub fn rotation_amount(&self) -> Option<usize> {
        let n = self.degree();
        if n == 0 {
            return Some(0);
        }
        let t = self.map[0];
        (self.map.iter().enumerate().all(|(i, &m)| m == (i + t) % n)).then_some(t)
    }

    pub fn is_cyclic(&self) -> bool {
        self.rotation_amount().is_some()
    }

    pub fn is_dihedral(&self) -> bool {
        let n = self.degree();
        if self.is_cyclic() || n == 0 {
            return true;
        }
        let c = self.map[0];
        *self == Permutation::reflection(n, c)
    }
}

/// Applies `γ` to the word: output letter `i` is `w[γᵢ]`.
pub fn apply_permutation(gamma: &Permutation, w: &Word) -> Result<Word> {
    let letters = gamma.apply(w.letters())?;
    Ok(Word {
        letters,
        alphabet_size: w.alphabet_size,
    })
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() <= 9 {
            for x in self.one_line() {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.one_line().iter().join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let one_line: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::parse("permutation", s, e.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d as usize),
                    _ => Err(Error::parse("permutation", s, format!("bad entry {c:?}"))),
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(&one_line)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupKind {
    Cyclic,
    Dihedral,
    Symmetric,
}

/// Elements of the chosen permutation group of degree `n`.
///
/// Cyclic: the `n` rotations in order of shift. Dihedral: rotations followed
/// by the reflections `i -> (c - i) mod n`, duplicates removed (so degrees 1
/// and 2 give 1 and 2 elements). Symmetric: all `n!` permutations in
/// lexicographic order.
pub fn group_members(kind: GroupKind, n: usize) -> Vec<Permutation> {
    match kind {
        GroupKind::Cyclic => (0..n.max(1)).map(|t| Permutation::rotation(n, t)).collect(),
        GroupKind::Dihedral => {
            let mut seen = BTreeSet::new();
            (0..n.max(1))
                .map(|t| Permutation::rotation(n, t))
                .chain((0..n.max(1)).map(|c| Permutation::reflection(n, c)))
                .filter(|p| seen.insert(p.clone()))
                .collect()
        }
        GroupKind::Symmetric => (0..n)
            .permutations(n)
            .map(|map| Permutation { map })
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// Symmetry orbits
// ---------------------------------------------------------------------------

/// Which symmetries generate an orbit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SymmetrySpec {
    pub shifts: bool,
    pub reversal: bool,
    pub alphabet: bool,
}

impl SymmetrySpec {
    pub const ALL: SymmetrySpec = SymmetrySpec {
        shifts: true,
        reversal: true,
        alphabet: true,
    };
    pub const CYCLIC: SymmetrySpec = SymmetrySpec {
        shifts: true,
        reversal: false,
        alphabet: false,
    };
    pub const REVERSAL_AND_ALPHABET: SymmetrySpec = SymmetrySpec {
        shifts: false,
        reversal: true,
        alphabet: true,
    };
    pub const ALPHABET: SymmetrySpec = SymmetrySpec {
        shifts: false,
        reversal: false,
        alphabet: true,
    };
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetryClass {
    pub representative: Word,
    pub orbit_size: u128,
    pub group: SymmetrySpec,
}

/// Lexicographic minimum and size of the orbit of `w`.
///
/// Alphabet permutations are handled through first-occurrence renaming, so
/// large alphabets do not require enumerating `k!` relabellings.
pub fn orbit_representative(w: &Word, group: SymmetrySpec) -> SymmetryClass {
    let mut base = vec![w.clone()];
    if group.reversal {
        base.push(w.reversed());
    }
    if group.shifts {
        base = base.iter().flat_map(cyclic_shifts).collect();
        if base.is_empty() {
            base.push(w.clone());
        }
    }
    let (images, multiplier) = if group.alphabet {
        let k = w.alphabet_size() as u128;
        let d = w.distinct_letters() as u128;
        let falling: u128 = (0..d).map(|i| k - i).product();
        (base.iter().map(Word::normalized).collect::<BTreeSet<_>>(), falling)
    } else {
        (base.into_iter().collect::<BTreeSet<_>>(), 1)
    };
    SymmetryClass {
        representative: images.first().cloned().expect("orbit is nonempty"),
        orbit_size: images.len() as u128 * multiplier,
        group,
    }
}

// ---------------------------------------------------------------------------
// Canonical words
// ---------------------------------------------------------------------------

/// A word over `k` letters in which every letter occurs exactly twice and
/// letters first occur in increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalWord(Word);

impl CanonicalWord {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    /// Number of letters `k` (half the length).
    pub fn k(&self) -> usize {
        self.0.len() / 2
    }
}

impl TryFrom<Word> for CanonicalWord {
    type Error = Error;

    fn try_from(w: Word) -> Result<Self> {
        if w.len() % 2 != 0 {
            return Err(Error::Precondition(format!("{w} has odd length")));
        }
        let k = w.len() / 2;
        let mut counts = vec![0usize; k.max(1)];
        let mut next = 0u8;
        for &l in w.letters() {
            if l as usize >= k {
                return Err(Error::Precondition(format!(
                    "{w} uses letter {l} outside its {k}-letter alphabet"
                )));
            }
            if counts[l as usize] == 0 {
                if l != next {
                    return Err(Error::Precondition(format!(
                        "{w} is not the least word under alphabet renaming"
                    )));
                }
                next += 1;
            }
            counts[l as usize] += 1;
        }
        if counts.iter().take(k).any(|&c| c != 2) {
            return Err(Error::Precondition(format!(
                "{w} does not use every letter exactly twice"
            )));
        }
        let letters = w.letters().to_vec();
        Ok(CanonicalWord(Word::new(letters, k.max(1))?))
    }
}

impl FromStr for CanonicalWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let w: Word = s.parse()?;
        let k = (w.len() / 2).max(1);
        let w = Word::new(w.letters().to_vec(), k)
            .map_err(|e| Error::parse("canonical word", s, e.to_string()))?;
        CanonicalWord::try_from(w)
    }
}

impl fmt::Display for CanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_letter_string())
    }
}

/// `(2k)! / (k! 2^k)`, the number of canonical words over `k` letters.
pub fn canonical_word_count(k: usize) -> u128 {
    (1..=k as u128).map(|i| 2 * i - 1).product()
}

/// All canonical words over `k` letters in lexicographic order.
pub fn enumerate_canonical_words(k: usize) -> Vec<CanonicalWord> {
    fn extend(k: usize, prefix: &mut Vec<u8>, counts: &mut Vec<u8>, opened: u8, out: &mut Vec<CanonicalWord>) {
        if prefix.len() == 2 * k {
            let w = Word::new(prefix.clone(), k.max(1)).expect("letters below k");
            out.push(CanonicalWord(w));
            return;
        }
        for l in 0..=opened.min(k as u8 - 1) {
            let fresh = l == opened;
            if (fresh || counts[l as usize] == 1) && counts[l as usize] < 2 {
                counts[l as usize] += 1;
                prefix.push(l);
                extend(k, prefix, counts, if fresh { opened + 1 } else { opened }, out);
                prefix.pop();
                counts[l as usize] -= 1;
            }
        }
    }
    let mut out = Vec::with_capacity(canonical_word_count(k) as usize);
    if k == 0 {
        return out;
    }
    extend(k, &mut Vec::with_capacity(2 * k), &mut vec![0; k], 0, &mut out);
    out
}
