//! Exact deciders for shuffle squares and shuffle γ-squares.
//!
//! A witness always reports `first = γ(second)`, with both position lists
//! 0-based and increasing. Among all valid splits the one with the
//! lexicographically least `first_positions` is returned.

use std::collections::{BTreeSet, VecDeque};
use std::hash::Hash;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{is_even, Permutation, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitWitness {
    pub first_positions: Vec<usize>,
    pub second_positions: Vec<usize>,
    pub gamma: Permutation,
}

/// Flat serialized form of a [`SplitWitness`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub gamma: String,
}

impl SplitWitness {
    pub fn first_word(&self, w: &Word) -> Word {
        w.subword(&self.first_positions)
    }

    pub fn second_word(&self, w: &Word) -> Word {
        w.subword(&self.second_positions)
    }

    /// Checks the partition and letter conditions against `w`.
    pub fn validate(&self, w: &Word) -> Result<()> {
        let n = self.first_positions.len();
        let fail = |msg: String| Err(Error::Precondition(format!("invalid witness for {w}: {msg}")));
        if self.second_positions.len() != n || 2 * n != w.len() {
            return fail("halves do not have length n".into());
        }
        if self.gamma.degree() != n {
            return fail(format!("gamma has degree {}", self.gamma.degree()));
        }
        for side in [&self.first_positions, &self.second_positions] {
            if side.windows(2).any(|p| p[0] >= p[1]) {
                return fail("positions are not strictly increasing".into());
            }
        }
        let mut seen = vec![false; w.len()];
        for &p in self.first_positions.iter().chain(&self.second_positions) {
            if p >= w.len() || std::mem::replace(&mut seen[p], true) {
                return fail(format!("position {p} is repeated or out of range"));
            }
        }
        let first = self.first_word(w);
        let second = self.second_word(w);
        if self.gamma.apply(second.letters())? != first.letters() {
            return fail(format!("{first} != {}({second})", self.gamma));
        }
        Ok(())
    }

    pub fn to_record(&self) -> WitnessRecord {
        WitnessRecord {
            first: self.first_positions.clone(),
            second: self.second_positions.clone(),
            gamma: self.gamma.to_string(),
        }
    }

    pub fn from_record(record: &WitnessRecord) -> Result<Self> {
        let n = record.first.len();
        let gamma = if record.gamma.is_empty() {
            Permutation::identity(0)
        } else {
            record.gamma.parse()?
        };
        if gamma.degree() != n {
            return Err(Error::DegreeMismatch {
                degree: gamma.degree(),
                length: n,
            });
        }
        Ok(SplitWitness {
            first_positions: record.first.clone(),
            second_positions: record.second.clone(),
            gamma,
        })
    }

    fn from_assignment(assign: &[bool], gamma: Permutation) -> Self {
        let (first, second): (Vec<usize>, Vec<usize>) = (0..assign.len()).partition(|&i| assign[i]);
        SplitWitness {
            first_positions: first,
            second_positions: second,
            gamma,
        }
    }
}

// ---------------------------------------------------------------------------
// Shuffle squares: memoized search over (position, overhang)
// ---------------------------------------------------------------------------

/// The part of the leading copy not yet matched by the trailing copy.
trait Overhang: Sized {
    type Key: Hash + Eq;
    fn len(&self) -> usize;
    fn front(&self) -> u8;
    fn pushed(&self, c: u8) -> Self;
    fn popped(&self) -> Self;
    fn key(&self) -> Self::Key;
}

/// Letters packed `width` bits apiece, front letter in the low bits.
#[derive(Clone, Copy)]
struct Packed {
    bits: u128,
    len: u8,
    width: u8,
}

impl Overhang for Packed {
    type Key = (u128, u8);

    fn len(&self) -> usize {
        self.len as usize
    }
    fn front(&self) -> u8 {
        (self.bits & ((1u128 << self.width) - 1)) as u8
    }
    fn pushed(&self, c: u8) -> Self {
        Packed {
            bits: self.bits | ((c as u128) << (self.len as u32 * self.width as u32)),
            len: self.len + 1,
            width: self.width,
        }
    }
    fn popped(&self) -> Self {
        Packed {
            bits: self.bits >> self.width,
            len: self.len - 1,
            width: self.width,
        }
    }
    fn key(&self) -> (u128, u8) {
        (self.bits, self.len)
    }
}

impl Overhang for VecDeque<u8> {
    type Key = Vec<u8>;

    fn len(&self) -> usize {
        VecDeque::len(self)
    }
    fn front(&self) -> u8 {
        self[0]
    }
    fn pushed(&self, c: u8) -> Self {
        let mut next = self.clone();
        next.push_back(c);
        next
    }
    fn popped(&self) -> Self {
        let mut next = self.clone();
        next.pop_front();
        next
    }
    fn key(&self) -> Vec<u8> {
        self.iter().copied().collect()
    }
}

struct Search<'a, O: Overhang> {
    letters: &'a [u8],
    k: usize,
    /// `suffix[i * k + c]` counts letter `c` in `letters[i..]`.
    suffix: &'a [u32],
    overhang_counts: Vec<u32>,
    failed: &'a mut FxHashSet<(u32, O::Key)>,
    assign: &'a mut [bool],
    prefer_match: bool,
}

impl<O: Overhang> Search<'_, O> {
    fn feasible(&self, i: usize, c: u8) -> bool {
        self.overhang_counts[c as usize] <= self.suffix[i * self.k + c as usize]
    }

    fn step(&mut self, i: usize, oh: O, leader_first: bool, to_first: bool, c: u8, grow: bool) -> bool {
        if grow {
            self.overhang_counts[c as usize] += 1;
        } else {
            self.overhang_counts[c as usize] -= 1;
        }
        let ok = self.feasible(i + 1, c) && {
            self.assign[i] = to_first;
            self.dfs(i + 1, oh, leader_first)
        };
        if grow {
            self.overhang_counts[c as usize] -= 1;
        } else {
            self.overhang_counts[c as usize] += 1;
        }
        ok
    }

    fn dfs(&mut self, i: usize, oh: O, leader_first: bool) -> bool {
        let n = self.letters.len();
        if i == n {
            return oh.len() == 0;
        }
        if oh.len() > n - i {
            return false;
        }
        let key = (i as u32, oh.key());
        if self.failed.contains(&key) {
            return false;
        }
        let c = self.letters[i];
        let found = if oh.len() == 0 {
            // Both halves are equal so far; by symmetry the new letter opens the first.
            self.step(i, oh.pushed(c), true, true, c, true)
        } else {
            let can_match = oh.front() == c;
            // Options (to_first, grow): the leader appends, the follower consumes.
            // Witness search tries "to first" before "to second".
            let append = (leader_first, true);
            let consume = (!leader_first, false);
            let order = if self.prefer_match || !leader_first {
                [consume, append]
            } else {
                [append, consume]
            };
            let mut found = false;
            for (to_first, grow) in order {
                if !grow && !can_match {
                    continue;
                }
                let next = if grow { oh.pushed(c) } else { oh.popped() };
                if self.step(i, next, leader_first, to_first, c, grow) {
                    found = true;
                    break;
                }
            }
            found
        };
        if !found {
            self.failed.insert(key);
        }
        found
    }
}

/// Reusable shuffle-square decider. Owns its memo tables so that repeated
/// calls (scans over many words) avoid reallocating them.
#[derive(Default)]
pub struct Recognizer {
    failed_packed: FxHashSet<(u32, (u128, u8))>,
    failed_wide: FxHashSet<(u32, Vec<u8>)>,
    suffix: Vec<u32>,
    assign: Vec<bool>,
}

impl Recognizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// True iff `letters` (over `k` letters) is a shuffle square.
    pub fn decide(&mut self, letters: &[u8], k: usize) -> bool {
        self.run(letters, k, true)
    }

    /// The witness with lexicographically least first half, if any.
    pub fn find(&mut self, w: &Word) -> Option<SplitWitness> {
        if self.run(w.letters(), w.alphabet_size(), false) {
            Some(SplitWitness::from_assignment(
                &self.assign,
                Permutation::identity(w.len() / 2),
            ))
        } else {
            None
        }
    }

    fn run(&mut self, letters: &[u8], k: usize, prefer_match: bool) -> bool {
        let len = letters.len();
        if len % 2 != 0 {
            return false;
        }
        let k = k.max(1);
        self.suffix.clear();
        self.suffix.resize((len + 1) * k, 0);
        for i in (0..len).rev() {
            let (head, tail) = self.suffix.split_at_mut((i + 1) * k);
            head[i * k..].copy_from_slice(&tail[..k]);
            head[i * k + letters[i] as usize] += 1;
        }
        if self.suffix[..k].iter().any(|c| c % 2 != 0) {
            return false;
        }
        self.assign.clear();
        self.assign.resize(len, false);
        let width = (usize::BITS - (k - 1).leading_zeros()).max(1) as usize;
        if (len / 2) * width <= 128 && len < u32::MAX as usize {
            self.failed_packed.clear();
            let mut search = Search::<Packed> {
                letters,
                k,
                suffix: &self.suffix,
                overhang_counts: vec![0; k],
                failed: &mut self.failed_packed,
                assign: &mut self.assign,
                prefer_match,
            };
            let empty = Packed {
                bits: 0,
                len: 0,
                width: width as u8,
            };
            search.dfs(0, empty, true)
        } else {
            self.failed_wide.clear();
            let mut search = Search::<VecDeque<u8>> {
                letters,
                k,
                suffix: &self.suffix,
                overhang_counts: vec![0; k],
                failed: &mut self.failed_wide,
                assign: &mut self.assign,
                prefer_match,
            };
            search.dfs(0, VecDeque::new(), true)
        }
    }
}

/// A split of `w` into two identical subwords, or `None`. Odd-length and
/// non-even words simply return `None`.
pub fn is_shuffle_square(w: &Word) -> Option<SplitWitness> {
    Recognizer::new().find(w)
}

/// True iff `w` interleaves `u` and `v` as complementary subsequences.
pub fn is_shuffle_of(w: &Word, u: &Word, v: &Word) -> Result<bool> {
    let (a, b, c) = (u.letters(), v.letters(), w.letters());
    if a.len() + b.len() != c.len() {
        return Err(Error::LengthMismatch {
            expected: a.len() + b.len(),
            found: c.len(),
        });
    }
    // reach[j] after processing row i: w[..i + j] interleaves u[..i] and v[..j].
    let mut reach = vec![false; b.len() + 1];
    reach[0] = true;
    for j in 1..=b.len() {
        reach[j] = reach[j - 1] && b[j - 1] == c[j - 1];
    }
    for i in 1..=a.len() {
        reach[0] = reach[0] && a[i - 1] == c[i - 1];
        for j in 1..=b.len() {
            let x = c[i + j - 1];
            reach[j] = (reach[j] && a[i - 1] == x) || (reach[j - 1] && b[j - 1] == x);
        }
    }
    Ok(reach[b.len()])
}

// ---------------------------------------------------------------------------
// Shuffle γ-squares: constraint backtracking
// ---------------------------------------------------------------------------

/// Backtracking over positions, each sent to the next free slot of the first
/// or second half, with `first[j] == second[sigma[j]]` enforced as soon as both
/// ends are placed. Failed states are memoized by their unresolved constraints,
/// which determine the rest of the search.
struct GammaSearch<'a> {
    letters: &'a [u8],
    n: usize,
    sigma: &'a [usize],
    inv: &'a [usize],
    half: Vec<usize>,
    first: Vec<u8>,
    second: Vec<u8>,
    first_counts: Vec<usize>,
    second_counts: Vec<usize>,
    assign: Vec<bool>,
    failed: FxHashSet<Vec<u8>>,
}

impl GammaSearch<'_> {
    fn state_key(&self, p: usize) -> Vec<u8> {
        let (f, s) = (self.first.len(), self.second.len());
        let mut key = Vec::with_capacity(self.n + 3);
        key.push(p as u8);
        key.push(f as u8);
        key.extend((0..f).filter(|&j| self.sigma[j] >= s).map(|j| self.first[j]));
        key.push(u8::MAX);
        key.extend((0..s).filter(|&t| self.inv[t] >= f).map(|t| self.second[t]));
        key
    }

    fn dfs(&mut self, p: usize) -> bool {
        if p == 2 * self.n {
            return true;
        }
        let key = self.state_key(p);
        if self.failed.contains(&key) {
            return false;
        }
        let c = self.letters[p];
        let ci = c as usize;
        let (f, s) = (self.first.len(), self.second.len());
        if f < self.n && self.first_counts[ci] < self.half[ci] {
            let partner = self.sigma[f];
            if partner >= s || self.second[partner] == c {
                self.first.push(c);
                self.first_counts[ci] += 1;
                self.assign[p] = true;
                let ok = self.dfs(p + 1);
                self.first.pop();
                self.first_counts[ci] -= 1;
                if ok {
                    return true;
                }
            }
        }
        if s < self.n && self.second_counts[ci] < self.half[ci] {
            let partner = self.inv[s];
            if partner >= f || self.first[partner] == c {
                self.second.push(c);
                self.second_counts[ci] += 1;
                self.assign[p] = false;
                let ok = self.dfs(p + 1);
                self.second.pop();
                self.second_counts[ci] -= 1;
                if ok {
                    return true;
                }
            }
        }
        self.failed.insert(key);
        false
    }
}

/// Lexicographically least split with `first = sigma(second)`.
fn oriented_gamma_split(w: &Word, sigma: &Permutation) -> Option<SplitWitness> {
    let n = sigma.degree();
    let counts = w.letter_counts();
    let inv = sigma.inverse();
    let mut search = GammaSearch {
        letters: w.letters(),
        n,
        sigma: sigma.zero_based(),
        inv: inv.zero_based(),
        half: counts.iter().map(|c| c / 2).collect(),
        first: Vec::with_capacity(n),
        second: Vec::with_capacity(n),
        first_counts: vec![0; counts.len()],
        second_counts: vec![0; counts.len()],
        assign: vec![false; 2 * n],
        failed: FxHashSet::default(),
    };
    search
        .dfs(0)
        .then(|| SplitWitness::from_assignment(&search.assign, sigma.clone()))
}

/// A split of `w` into two γ-similar subwords, or `None`.
///
/// Both `U = γ(V)` and `V = γ(U)` are accepted; the witness gamma is `γ` or
/// `γ⁻¹`, whichever makes `first = gamma(second)` for the reported split
/// (`γ` when both do).
pub fn is_gamma_shuffle_square(w: &Word, gamma: &Permutation) -> Result<Option<SplitWitness>> {
    if w.len() != 2 * gamma.degree() {
        return Err(Error::DegreeMismatch {
            degree: gamma.degree(),
            length: w.len(),
        });
    }
    if !is_even(w) {
        return Ok(None);
    }
    let direct = oriented_gamma_split(w, gamma);
    if gamma.is_involution() {
        return Ok(direct);
    }
    let reverse = oriented_gamma_split(w, &gamma.inverse());
    Ok(match (direct, reverse) {
        (Some(a), Some(b)) => Some(if b.first_positions < a.first_positions { b } else { a }),
        (a, b) => a.or(b),
    })
}

/// The candidates `γ` for which `w` is a shuffle γ-square.
pub fn gamma_neighbors(w: &Word, candidates: &[Permutation]) -> Result<BTreeSet<Permutation>> {
    let mut out = BTreeSet::new();
    for gamma in candidates {
        if is_gamma_shuffle_square(w, gamma)?.is_some() {
            out.insert(gamma.clone());
        }
    }
    Ok(out)
}

/// Structural test for binary words with exactly two 1's: such a word of
/// length `2n` is a shuffle square iff it has an even-length prefix `0⋯011`,
/// or a factor `10⋯01` of length between 3 and `n + 1`.
pub fn two_ones_shuffle_square(w: &Word) -> Result<bool> {
    if !w.is_binary() || w.len() % 2 != 0 {
        return Err(Error::Precondition(format!(
            "{w} must be a binary word of even length"
        )));
    }
    let ones: Vec<usize> = (0..w.len()).filter(|&i| w.letters()[i] == 1).collect();
    let &[i, j] = ones.as_slice() else {
        return Err(Error::Precondition(format!(
            "{w} has {} ones, expected exactly two",
            ones.len()
        )));
    };
    let n = w.len() / 2;
    let even_prefix = j == i + 1 && i % 2 == 0;
    let factor = j - i + 1;
    Ok(even_prefix || (3..=n + 1).contains(&factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{brute_force_gamma_square, brute_force_shuffle_square};
    use crate::words::{group_members, GroupKind};
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn ababcc_splits_into_abc_twice() {
        let x = w("ABABCC");
        let wit = is_shuffle_square(&x).unwrap();
        wit.validate(&x).unwrap();
        assert_eq!(wit.first_word(&x).to_letter_string(), "ABC");
        assert_eq!(wit.second_word(&x).to_letter_string(), "ABC");
        assert!(wit.gamma.is_identity());
        assert_eq!(wit.first_positions, vec![0, 1, 4]);
    }

    #[test]
    fn non_squares() {
        assert!(is_shuffle_square(&w("0110")).is_none());
        assert!(!brute_force_shuffle_square(&w("0110")));
        assert!(is_shuffle_square(&w("000001001111000011101111")).is_none());
        assert!(is_shuffle_square(&w("011")).is_none());
        assert!(is_shuffle_square(&w("0111")).is_none());
    }

    #[test]
    fn witness_for_0011() {
        let wit = is_shuffle_square(&w("0011")).unwrap();
        assert_eq!(wit.first_positions, vec![0, 2]);
        assert_eq!(wit.second_positions, vec![1, 3]);
        let rec = wit.to_record();
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"first":[0,2],"second":[1,3],"gamma":"12"}"#
        );
        assert_eq!(SplitWitness::from_record(&rec).unwrap(), wit);
        let empty = is_shuffle_square(&w("")).unwrap();
        assert!(empty.first_positions.is_empty());
    }

    #[test]
    fn shuffle_of() {
        assert!(is_shuffle_of(&w("0011"), &w("01"), &w("01")).unwrap());
        assert!(!is_shuffle_of(&w("0110"), &w("01"), &w("01")).unwrap());
        assert!(is_shuffle_of(&w("1"), &w("1"), &w("")).unwrap());
        assert!(is_shuffle_of(&w("AB"), &w(""), &w("AB")).unwrap());
        assert!(is_shuffle_of(&w("011"), &w("01"), &w("01")).is_err());
    }

    #[test]
    fn gamma_square_ababcc() {
        let x = w("ABABCC");
        let wit = is_gamma_shuffle_square(&x, &p("213")).unwrap().unwrap();
        wit.validate(&x).unwrap();
        let (a, b) = (wit.first_word(&x).to_letter_string(), wit.second_word(&x).to_letter_string());
        assert_eq!((a.as_str(), b.as_str()), ("ABC", "BAC"));
        assert_eq!(wit.gamma, p("213"));
    }

    #[test]
    fn gamma_square_degree_mismatch() {
        assert!(matches!(
            is_gamma_shuffle_square(&w("0011"), &p("123")),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn no_cyclic_split_of_012210() {
        let x = w("012210");
        for g in group_members(GroupKind::Cyclic, 3) {
            assert!(is_gamma_shuffle_square(&x, &g).unwrap().is_none(), "{g}");
        }
        // The reversal does split it, as (012, 210).
        let wit = is_gamma_shuffle_square(&x, &p("321")).unwrap().unwrap();
        wit.validate(&x).unwrap();
    }

    #[test]
    fn degree_three_rows() {
        let reduced = [p("123"), p("132"), p("213"), p("231"), p("321")];
        let cases = [
            ("AABCCB", vec!["132"]),
            ("ABACBC", vec!["123", "132", "213", "231"]),
            ("ABCACB", vec!["132", "231", "321"]),
        ];
        for (word, expected) in cases {
            let got = gamma_neighbors(&w(word), &reduced).unwrap();
            let expected: BTreeSet<_> = expected.into_iter().map(p).collect();
            assert_eq!(got, expected, "{word}");
        }
    }

    #[test]
    fn witness_with_nonsymmetric_gamma_reports_orientation() {
        let x = w("0110");
        let g = p("21");
        let wit = is_gamma_shuffle_square(&x, &g).unwrap().unwrap();
        wit.validate(&x).unwrap();
        let x = w("ABCABC");
        for g in [p("231"), p("312")] {
            let wit = is_gamma_shuffle_square(&x, &g).unwrap().unwrap();
            wit.validate(&x).unwrap();
            assert!(wit.gamma == g || wit.gamma == g.inverse());
        }
    }

    #[test]
    fn two_ones_examples() {
        assert!(two_ones_shuffle_square(&w("0011000000")).unwrap());
        assert!(two_ones_shuffle_square(&w("110000")).unwrap());
        assert!(!two_ones_shuffle_square(&w("100001")).unwrap());
        assert!(!brute_force_shuffle_square(&w("100001")));
        assert!(two_ones_shuffle_square(&w("010010")).unwrap());
        assert!(two_ones_shuffle_square(&w("0111")).is_err());
        assert!(two_ones_shuffle_square(&w("01100")).is_err());
    }

    #[test]
    fn recognizer_matches_brute_force_up_to_12() {
        let mut r = Recognizer::new();
        for len in (0..=12).step_by(2) {
            for bits in 0u64..(1 << len) {
                let x = Word::from_bits(bits, len);
                let expect = brute_force_shuffle_square(&x);
                assert_eq!(r.decide(x.letters(), 2), expect, "{x}");
                let wit = r.find(&x);
                assert_eq!(wit.is_some(), expect, "{x}");
                if let Some(wit) = wit {
                    wit.validate(&x).unwrap();
                }
            }
        }
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // Brute force over subsets containing position 0, in lexicographic order.
        for x in ["00110011", "01011010", "ABACBCAB", "0101", "AABCBC"] {
            let x = w(x);
            let n = x.len() / 2;
            let mut best: Option<Vec<usize>> = None;
            for mask in 0u32..(1 << x.len()) {
                if mask.count_ones() as usize != n {
                    continue;
                }
                let first: Vec<usize> = (0..x.len()).filter(|i| mask >> i & 1 == 1).collect();
                let second: Vec<usize> = (0..x.len()).filter(|i| mask >> i & 1 == 0).collect();
                if x.subword(&first) == x.subword(&second) && best.as_ref().is_none_or(|b| first < *b) {
                    best = Some(first);
                }
            }
            assert_eq!(is_shuffle_square(&x).map(|w| w.first_positions), best);
        }
    }

    #[test]
    fn large_alphabet_and_long_words_use_wide_memo() {
        let x: Word = "ABCDEFGHIJKLMNOPQRSTABCDEFGHIJKLMNOPQRST".parse().unwrap();
        let wit = is_shuffle_square(&x).unwrap();
        wit.validate(&x).unwrap();
        let y = x.concat(&x).concat(&x).concat(&x); // 160 letters, 5 bits each
        assert!(Recognizer::new().decide(y.letters(), y.alphabet_size()));
    }

    fn even_binary() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u8..2, 0..14)
            .prop_filter("even", |l| l.iter().filter(|&&b| b == 1).count() % 2 == 0 && l.len() % 2 == 0)
            .prop_map(|l| Word::binary(&l).unwrap())
    }

    fn ternary(max: usize) -> impl Strategy<Value = Word> {
        (1..=max / 2).prop_flat_map(|n| {
            proptest::collection::vec(0u8..3, 2 * n).prop_map(|l| Word::new(l, 3).unwrap())
        })
    }

    proptest! {
        #[test]
        fn reversal_preserves_squares(x in even_binary()) {
            prop_assert_eq!(is_shuffle_square(&x).is_some(), is_shuffle_square(&x.reversed()).is_some());
        }

        #[test]
        fn concatenation_of_squares_is_square(x in even_binary(), y in even_binary()) {
            if is_shuffle_square(&x).is_some() && is_shuffle_square(&y).is_some() {
                prop_assert!(is_shuffle_square(&x.concat(&y)).is_some());
            }
        }

        #[test]
        fn gamma_direction_symmetry(x in ternary(10), seed in any::<u64>()) {
            let n = x.len() / 2;
            let perms = group_members(GroupKind::Symmetric, n);
            let g = &perms[(seed % perms.len() as u64) as usize];
            let a = is_gamma_shuffle_square(&x, g).unwrap();
            let b = is_gamma_shuffle_square(&x, &g.inverse()).unwrap();
            prop_assert_eq!(a.is_some(), b.is_some());
            prop_assert_eq!(a.is_some(), brute_force_gamma_square(&x, g));
            if let Some(wit) = a {
                wit.validate(&x).unwrap();
            }
        }

        #[test]
        fn identity_gamma_is_plain_shuffle_square(x in ternary(12)) {
            let id = Permutation::identity(x.len() / 2);
            let a = is_gamma_shuffle_square(&x, &id).unwrap().map(|w| w.first_positions);
            let b = is_shuffle_square(&x).map(|w| w.first_positions);
            prop_assert_eq!(a, b);
        }
    }
}
