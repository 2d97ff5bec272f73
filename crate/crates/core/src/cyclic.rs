//! Binary words up to cyclic shifts: balanced windows, the cyclic
//! decomposition, explicit shifts for words with few 1's, the statistic
//! `s(W)` and the shuffle anti-square scan.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::shuffle::{Recognizer, SplitWitness};
use crate::words::{is_even, primitive_period, Permutation, Word};

fn require_even_binary(w: &Word, op: &str) -> Result<()> {
    if !w.is_binary() {
        return Err(Error::Precondition(format!("{op} needs a binary word, got {w}")));
    }
    if !is_even(w) {
        return Err(Error::Precondition(format!("{op} needs an even word, got {w}")));
    }
    Ok(())
}

/// `w = x v y` with `|v| = |w|/2` and `v` holding half of each letter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FairSplit {
    pub x: Word,
    pub v: Word,
    pub y: Word,
    pub window_start: usize,
}

/// The first balanced window of length `n` in an even binary word of length `2n`.
pub fn fair_split_binary(w: &Word) -> Result<FairSplit> {
    require_even_binary(w, "fair splitting")?;
    if w.is_empty() {
        return Err(Error::Precondition("fair splitting needs a non-empty word".into()));
    }
    let l = w.letters();
    let n = l.len() / 2;
    let r = w.count(0) / 2;
    let mut zeros = l[..n].iter().filter(|&&c| c == 0).count();
    let mut start = 0;
    // Window counts at 0 and n sum to 2r and move by at most one per step.
    while zeros != r {
        zeros = zeros + (l[start + n] == 0) as usize - (l[start] == 0) as usize;
        start += 1;
    }
    let part = |range: std::ops::Range<usize>| Word::binary(&l[range]).expect("binary letters");
    Ok(FairSplit {
        x: part(0..start),
        v: part(start..start + n),
        y: part(start + n..2 * n),
        window_start: start,
    })
}

/// A split `first = γ(second)` with `γ` a rotation, built from the balanced
/// window: `first` takes the 0's outside the window and the 1's inside it.
pub fn cyclic_decompose(w: &Word) -> Result<SplitWitness> {
    require_even_binary(w, "cyclic decomposition")?;
    if w.is_empty() {
        return Ok(SplitWitness {
            first_positions: Vec::new(),
            second_positions: Vec::new(),
            gamma: Permutation::identity(0),
        });
    }
    let split = fair_split_binary(w)?;
    let n = w.len() / 2;
    let (j, end) = (split.window_start, split.window_start + n);
    let (first, second): (Vec<usize>, Vec<usize>) = (0..w.len()).partition(|&i| {
        let inside = (j..end).contains(&i);
        (w.letters()[i] == 1) == inside
    });
    // first = 0^x0 1^v1 0^y0 and second = 1^x1 0^v0 1^y1; both rotate to 0^r 1^s.
    let a = split.x.count(0) + split.v.count(1);
    let b = split.x.count(1);
    let gamma = Permutation::rotation(n, (b + n - a % n) % n);
    let witness = SplitWitness {
        first_positions: first,
        second_positions: second,
        gamma,
    };
    debug_assert!(witness.validate(w).is_ok());
    Ok(witness)
}

/// Result of [`shift_to_shuffle_square`]. `fallback` is set when the case
/// analysis did not produce a valid shift and an exhaustive search was used.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShiftOutcome {
    pub shift: usize,
    pub fallback: bool,
}

/// A shift `j` such that `w.rotate_left(j)` is a shuffle square, for even
/// binary words with at most four 1's.
pub fn shift_to_shuffle_square(w: &Word) -> Result<ShiftOutcome> {
    require_even_binary(w, "shift search")?;
    if w.count(1) > 4 {
        return Err(Error::Precondition(format!("{w} has more than four 1's")));
    }
    let mut rec = Recognizer::new();
    let len = w.len();
    if len == 0 {
        return Ok(ShiftOutcome { shift: 0, fallback: false });
    }
    if rec.decide(w.letters(), 2) {
        return Ok(ShiftOutcome { shift: 0, fallback: false });
    }
    let bits: Vec<bool> = w.letters().iter().map(|&c| c == 1).collect();
    if let Some(shift) = plan(&bits) {
        if rec.decide(w.rotate_left(shift).letters(), 2) {
            return Ok(ShiftOutcome { shift, fallback: false });
        }
    }
    log::warn!("case analysis gave no valid shift for {w}; searching all shifts");
    (0..len)
        .find(|&j| rec.decide(w.rotate_left(j).letters(), 2))
        .map(|shift| ShiftOutcome { shift, fallback: true })
        .ok_or_else(|| Error::Precondition(format!("no shift of {w} is a shuffle square")))
}

/// Case analysis on a word of "ones" and "zeros". A "one" may stand for a
/// longer block in the caller, which maps the returned shift back.
fn plan(t: &[bool]) -> Option<usize> {
    let len = t.len();
    let ones: Vec<usize> = (0..len).filter(|&i| t[i]).collect();
    match ones.len() {
        0 => Some(0),
        2 => {
            let p = ones[0];
            let a = ones[1] - p - 1;
            let b = len - 2 - a;
            Some(if a <= b { p } else { (p + 1) % len })
        }
        4 => plan_four(t, &ones),
        _ => None,
    }
}

fn plan_four(t: &[bool], ones: &[usize]) -> Option<usize> {
    let len = t.len();
    let gaps: Vec<usize> = (0..4)
        .map(|i| (ones[(i + 1) % 4] + len - ones[i] - 1) % len)
        .collect();
    if gaps.iter().all(|&g| g == 0) {
        return Some(0);
    }
    let gap = |i: usize, m: usize| gaps[(i + m) % 4];
    // Maximal cyclic runs of 1's, keyed by the index of their first 1.
    let run_len = |i: usize| 1 + (0..3).take_while(|&m| gap(i, m) == 0).count();
    let starts = (0..4).filter(|&i| gaps[(i + 3) % 4] > 0);
    let (i, run) = starts
        .map(|i| (i, run_len(i)))
        .fold(None, |best: Option<(usize, usize)>, cur| match best {
            Some(b) if b.1 >= cur.1 => Some(b),
            _ => Some(cur),
        })?;
    let p = ones[i];
    let bump = |s: usize| (s + 1) % len;
    match run {
        4 => Some(p),
        3 => {
            let (a, b) = (gap(i, 2), gap(i, 3));
            Some(if a <= b { p } else { bump(p) })
        }
        2 if gap(i, 2) == 0 => {
            // 11 0^a 11 0^b: each block of two 1's becomes a single letter.
            let (a, b) = (gap(i, 1), gap(i, 3));
            let tokens = [(true, 2)]
                .into_iter()
                .chain(std::iter::repeat_n((false, 1), a))
                .chain([(true, 2)])
                .chain(std::iter::repeat_n((false, 1), b));
            plan_tokens(p, len, tokens.collect())
        }
        2 => {
            let (a, b, c) = (gap(i, 1), gap(i, 2), gap(i, 3));
            let r = (a + b + c) / 2;
            if a <= r && r <= a + b {
                Some(bump(p))
            } else if r < a {
                Some(p)
            } else {
                let rev: Vec<bool> = t.iter().rev().copied().collect();
                plan(&rev).map(|j| (len - j) % len)
            }
        }
        _ => {
            // All gaps positive: start at the 1 followed by the least gap and
            // treat each 1 together with that many 0's as a single letter.
            let i = (0..4).min_by_key(|&i| (gaps[i], i))?;
            let a = gaps[i];
            let mut tokens = Vec::new();
            for m in 0..4 {
                tokens.push((true, 1 + a));
                tokens.extend(std::iter::repeat_n((false, 1), gap(i, m) - a));
            }
            plan_tokens(ones[i], len, tokens)
        }
    }
}

/// Plans on the token word starting at `offset` and maps the resulting shift
/// back through the token spans.
fn plan_tokens(offset: usize, len: usize, tokens: Vec<(bool, usize)>) -> Option<usize> {
    let u: Vec<bool> = tokens.iter().map(|&(one, _)| one).collect();
    let j = plan(&u)?;
    let span: usize = tokens[..j].iter().map(|&(_, s)| s).sum();
    Some((offset + span) % len)
}

/// Number of cyclic shifts of `w`, counted with multiplicity, that are
/// shuffle squares.
pub fn s_of(w: &Word) -> usize {
    s_bounded(&mut Recognizer::new(), w.letters(), w.alphabet_size(), usize::MAX)
}

/// Like [`s_of`] but stops as soon as the count exceeds `bound`.
fn s_bounded(rec: &mut Recognizer, letters: &[u8], k: usize, bound: usize) -> usize {
    let len = letters.len();
    if len == 0 {
        return 0;
    }
    let p = primitive_period(letters);
    let mult = len / p;
    let mut buf = Vec::with_capacity(len);
    let mut count = 0;
    for j in 0..p {
        buf.clear();
        buf.extend_from_slice(&letters[j..]);
        buf.extend_from_slice(&letters[..j]);
        if rec.decide(&buf, k) {
            count += mult;
            if count > bound {
                break;
            }
        }
    }
    count
}

/// True iff `w` is even and none of its cyclic shifts is a shuffle square.
pub fn is_anti_square(w: &Word) -> bool {
    is_even(w) && s_bounded(&mut Recognizer::new(), w.letters(), w.alphabet_size(), 0) == 0
}

// ---------------------------------------------------------------------------
// Anti-square scan
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub workers: usize,
    pub checkpoint: Option<PathBuf>,
    /// Representatives between checkpoint writes.
    pub checkpoint_every: u64,
    /// Stop (incomplete) after this many representatives in total.
    pub stop_after: Option<u64>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            workers: 1,
            checkpoint: None,
            checkpoint_every: 1 << 20,
            stop_after: None,
        }
    }
}

/// Minimal value of `s` over even binary words of one length, with one
/// representative per minimal orbit (shifts, reversal, complement).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AntiSquareReport {
    pub length: usize,
    pub s_min: usize,
    pub class_count: usize,
    pub representatives: Vec<Word>,
    /// False when the scan stopped early; the numbers are then partial.
    pub complete: bool,
}

impl fmt::Display for AntiSquareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "length={} s_min={} classes={}",
            self.length, self.s_min, self.class_count
        )?;
        if !self.complete {
            write!(f, " complete=false")?;
        }
        writeln!(f)?;
        for w in &self.representatives {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

impl FromStr for AntiSquareReport {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::parse("anti-square report", s, reason);
        let mut lines = s.lines();
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let (mut length, mut s_min, mut classes, mut complete) = (None, None, None, true);
        for field in header.split_whitespace() {
            let (key, value) = field.split_once('=').ok_or_else(|| bad("malformed header"))?;
            let num = || value.parse::<usize>().map_err(|_| bad("malformed number"));
            match key {
                "length" => length = Some(num()?),
                "s_min" => s_min = Some(num()?),
                "classes" => classes = Some(num()?),
                "complete" => complete = value == "true",
                _ => return Err(bad("unknown header field")),
            }
        }
        let representatives = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.trim().parse::<Word>())
            .collect::<Result<Vec<_>>>()?;
        if representatives.iter().any(|w| !w.is_binary()) {
            return Err(bad("representatives must be binary"));
        }
        let class_count = classes.ok_or_else(|| bad("missing classes"))?;
        if class_count != representatives.len() {
            return Err(bad("class count does not match the listed words"));
        }
        Ok(AntiSquareReport {
            length: length.ok_or_else(|| bad("missing length"))?,
            s_min: s_min.ok_or_else(|| bad("missing s_min"))?,
            class_count,
            representatives,
            complete,
        })
    }
}

/// Packed binary words of a fixed length, most significant bit first.
#[derive(Clone, Copy)]
struct Bits {
    len: u32,
    mask: u64,
}

impl Bits {
    fn new(len: usize) -> Self {
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Bits { len: len as u32, mask }
    }

    fn rotl(self, x: u64, j: u32) -> u64 {
        if j == 0 {
            x
        } else {
            ((x << j) | (x >> (self.len - j))) & self.mask
        }
    }

    fn min_rotation(self, x: u64) -> u64 {
        (0..self.len).map(|j| self.rotl(x, j)).min().unwrap_or(x)
    }

    fn reverse(self, x: u64) -> u64 {
        x.reverse_bits() >> (64 - self.len)
    }

    /// `x` is a necklace; checks it is least in its orbit.
    fn is_representative(self, x: u64) -> bool {
        let c = x ^ self.mask;
        let r = self.reverse(x);
        x <= self.min_rotation(r)
            && x <= self.min_rotation(c)
            && x <= self.min_rotation(r ^ self.mask)
    }

    fn letters(self, x: u64) -> Vec<u8> {
        (0..self.len)
            .map(|i| ((x >> (self.len - 1 - i)) & 1) as u8)
            .collect()
    }
}

/// Binary necklaces in increasing order, resumable from any necklace.
#[derive(Clone)]
struct Necklaces {
    a: Vec<u8>,
    started: bool,
    done: bool,
}

impl Necklaces {
    fn new(len: usize) -> Self {
        Necklaces {
            a: vec![0; len],
            started: false,
            done: false,
        }
    }

    /// Continues after `last`, which must be a necklace.
    fn after(last: &[u8]) -> Self {
        Necklaces {
            a: last.to_vec(),
            started: true,
            done: false,
        }
    }

    fn value(&self) -> u64 {
        self.a.iter().fold(0, |acc, &b| (acc << 1) | b as u64)
    }
}

impl Iterator for Necklaces {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.value());
        }
        let n = self.a.len();
        loop {
            // Prenecklace successor: bump the last 0, then repeat the prefix.
            let Some(i) = self.a.iter().rposition(|&b| b == 0) else {
                self.done = true;
                return None;
            };
            self.a[i] = 1;
            let period = i + 1;
            for j in period..n {
                self.a[j] = self.a[j - period];
            }
            if n % period == 0 {
                return Some(self.value());
            }
        }
    }
}

const MAGIC: &[u8; 8] = b"SSQSCAN\0";
const VERSION: u32 = 1;
const NO_MINIMUM: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq, Debug)]
struct Checkpoint {
    length: u32,
    cursor: u64,
    scanned: u64,
    s_min: u32,
    representatives: Vec<u64>,
}

impl Checkpoint {
    fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(40 + 8 * self.representatives.len());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&self.length.to_le_bytes());
        out.extend_from_slice(&self.cursor.to_le_bytes());
        out.extend_from_slice(&self.scanned.to_le_bytes());
        out.extend_from_slice(&self.s_min.to_le_bytes());
        out.extend_from_slice(&(self.representatives.len() as u32).to_le_bytes());
        for r in &self.representatives {
            out.extend_from_slice(&r.to_le_bytes());
        }
        let crc = crc32fast::hash(&out);
        out.extend_from_slice(&crc.to_le_bytes());
        out
    }

    fn decode(bytes: &[u8], path: &Path) -> Result<Self> {
        let corrupt = |reason: &str| Error::CorruptCheckpoint {
            path: path.display().to_string(),
            reason: reason.to_owned(),
        };
        if bytes.len() < 44 || &bytes[..8] != MAGIC {
            return Err(corrupt("not a scan checkpoint"));
        }
        let (body, crc) = bytes.split_at(bytes.len() - 4);
        if crc32fast::hash(body) != u32::from_le_bytes(crc.try_into().unwrap()) {
            return Err(corrupt("checksum mismatch"));
        }
        let u32_at = |i: usize| u32::from_le_bytes(body[i..i + 4].try_into().unwrap());
        let u64_at = |i: usize| u64::from_le_bytes(body[i..i + 8].try_into().unwrap());
        if u32_at(8) != VERSION {
            return Err(corrupt("unsupported version"));
        }
        let count = u32_at(36) as usize;
        if body.len() != 40 + 8 * count {
            return Err(corrupt("truncated representative list"));
        }
        Ok(Checkpoint {
            length: u32_at(12),
            cursor: u64_at(16),
            scanned: u64_at(24),
            s_min: u32_at(32),
            representatives: (0..count).map(|i| u64_at(40 + 8 * i)).collect(),
        })
    }

    fn load(path: &Path, length: usize) -> Result<Option<Self>> {
        let bytes = match fs::read(path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let cp = Checkpoint::decode(&bytes, path)?;
        if cp.length as usize != length {
            return Err(Error::CorruptCheckpoint {
                path: path.display().to_string(),
                reason: format!("written for length {}, not {length}", cp.length),
            });
        }
        Ok(Some(cp))
    }

    fn store(&self, path: &Path) {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = PathBuf::from(tmp);
        let written = fs::File::create(&tmp)
            .and_then(|mut f| f.write_all(&self.encode()).and_then(|_| f.sync_all()))
            .and_then(|_| fs::rename(&tmp, path));
        if let Err(e) = written {
            log::warn!("could not write checkpoint {}: {e}", path.display());
        }
    }
}

const BATCH: usize = 4096;

/// Exhaustive search for the least `s(W)` over even binary words of `length`,
/// visiting one word per orbit under shifts, reversal and complement.
pub fn anti_square_scan(length: usize, config: &ScanConfig) -> Result<AntiSquareReport> {
    if length == 0 || length % 2 != 0 || length > 64 {
        return Err(Error::Precondition(format!(
            "scan length must be even and between 2 and 64, got {length}"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    let bits = Bits::new(length);
    let resumed = match &config.checkpoint {
        Some(path) => Checkpoint::load(path, length)?,
        None => None,
    };
    let (mut necklaces, mut scanned, mut best, mut reps) = match resumed {
        Some(cp) => {
            log::info!("resuming length {length} after {} representatives", cp.scanned);
            (
                Necklaces::after(&bits.letters(cp.cursor)),
                cp.scanned,
                if cp.s_min == NO_MINIMUM { usize::MAX } else { cp.s_min as usize },
                cp.representatives,
            )
        }
        None => (Necklaces::new(length), 0, usize::MAX, Vec::new()),
    };
    let shared_best = AtomicUsize::new(best);
    let mut since_checkpoint = 0u64;
    let mut complete = true;
    loop {
        let room = config
            .stop_after
            .map_or(BATCH as u64, |s| s.saturating_sub(scanned).min(BATCH as u64));
        if room == 0 {
            complete = !necklaces
                .clone()
                .any(|x| x.count_ones() % 2 == 0 && bits.is_representative(x));
            break;
        }
        let mut batch = Vec::with_capacity(room as usize);
        for x in necklaces.by_ref() {
            if x.count_ones() % 2 == 0 && bits.is_representative(x) {
                batch.push(x);
                if batch.len() as u64 == room {
                    break;
                }
            }
        }
        if batch.is_empty() {
            break;
        }
        let scored: Vec<(u64, usize)> = pool.install(|| {
            batch
                .par_iter()
                .map_init(Recognizer::new, |rec, &x| {
                    let bound = shared_best.load(Ordering::Relaxed);
                    let s = s_bounded(rec, &bits.letters(x), 2, bound);
                    shared_best.fetch_min(s, Ordering::Relaxed);
                    (x, s)
                })
                .collect()
        });
        for (x, s) in scored {
            if s < best {
                best = s;
                reps.clear();
            }
            if s == best {
                reps.push(x);
            }
        }
        scanned += batch.len() as u64;
        since_checkpoint += batch.len() as u64;
        if let Some(path) = &config.checkpoint {
            if since_checkpoint >= config.checkpoint_every {
                since_checkpoint = 0;
                checkpoint_of(length, &necklaces, scanned, best, &reps).store(path);
            }
        }
    }
    if let Some(path) = &config.checkpoint {
        if scanned > 0 {
            checkpoint_of(length, &necklaces, scanned, best, &reps).store(path);
        }
    }
    reps.sort_unstable();
    let representatives: Vec<Word> = reps.iter().map(|&x| Word::from_bits(x, length)).collect();
    Ok(AntiSquareReport {
        length,
        s_min: if best == usize::MAX { 0 } else { best },
        class_count: representatives.len(),
        representatives,
        complete,
    })
}

fn checkpoint_of(length: usize, necklaces: &Necklaces, scanned: u64, best: usize, reps: &[u64]) -> Checkpoint {
    Checkpoint {
        length: length as u32,
        cursor: necklaces.value(),
        scanned,
        s_min: if best == usize::MAX { NO_MINIMUM } else { best as u32 },
        representatives: reps.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{brute_force_gamma_square, brute_force_s};
    use crate::shuffle::is_gamma_shuffle_square;
    use crate::words::{orbit_representative, SymmetrySpec};
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn even_binary_words(len: usize) -> impl Iterator<Item = Word> {
        (0..1u64 << len)
            .filter(|x| x.count_ones() % 2 == 0)
            .map(move |x| Word::from_bits(x, len))
    }

    #[test]
    fn fair_split_examples() {
        let s = fair_split_binary(&w("0011")).unwrap();
        assert_eq!((s.x, s.v, s.y, s.window_start), (w("0"), w("01"), w("1"), 1));
        let s = fair_split_binary(&w("0101")).unwrap();
        assert_eq!((s.x.len(), s.v, s.y), (0, w("01"), w("01")));
        let s = fair_split_binary(&w("0110")).unwrap();
        assert_eq!((s.x.len(), s.v, s.y), (0, w("01"), w("10")));
        assert!(fair_split_binary(&w("0111")).is_err());
        assert!(fair_split_binary(&w("0120")).is_err());
    }

    #[test]
    fn fair_split_always_balanced() {
        for len in (2..=14).step_by(2) {
            for word in even_binary_words(len) {
                let s = fair_split_binary(&word).unwrap();
                assert_eq!(s.x.concat(&s.v).concat(&s.y), word);
                assert_eq!(s.v.len(), len / 2);
                assert_eq!(2 * s.v.count(0), word.count(0));
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let word = w("0011");
        let d = cyclic_decompose(&word).unwrap();
        assert_eq!((d.first_word(&word), d.second_word(&word)), (w("01"), w("01")));
        assert!(d.gamma.is_identity());

        let word = w("0110");
        let d = cyclic_decompose(&word).unwrap();
        assert_eq!((d.first_word(&word), d.second_word(&word)), (w("10"), w("01")));
        assert_eq!(d.gamma, Permutation::rotation(2, 1));
        assert!(brute_force_gamma_square(&word, &d.gamma));

        let d = cyclic_decompose(&Word::empty(2)).unwrap();
        assert!(d.first_positions.is_empty() && d.gamma.degree() == 0);
        assert!(cyclic_decompose(&w("011")).is_err());
    }

    #[test]
    fn decomposition_exhaustive() {
        for len in (2..=14).step_by(2) {
            for word in even_binary_words(len) {
                let d = cyclic_decompose(&word).unwrap();
                d.validate(&word).unwrap();
                assert!(d.gamma.is_cyclic());
                if len <= 10 {
                    assert!(is_gamma_shuffle_square(&word, &d.gamma).unwrap().is_some());
                }
            }
        }
    }

    #[test]
    fn shift_examples() {
        let word = w("10010110");
        let out = shift_to_shuffle_square(&word).unwrap();
        assert!(!out.fallback);
        assert_eq!(out.shift, 6);
        assert!(crate::is_shuffle_square(&word.rotate_left(out.shift)).is_some());
        // The shift of two letters is valid too.
        assert_eq!(word.rotate_left(2), w("01011010"));
        assert!(crate::is_shuffle_square(&w("01011010")).is_some());

        assert_eq!(shift_to_shuffle_square(&w("0011")).unwrap().shift, 0);
        // Three 1's: odd parity.
        assert!(shift_to_shuffle_square(&w("110100")).is_err());
        assert!(shift_to_shuffle_square(&w("110110110110")).is_err());
    }

    #[test]
    fn shift_case_analysis_never_falls_back() {
        let mut rec = Recognizer::new();
        for len in (2..=16).step_by(2) {
            for word in even_binary_words(len).filter(|x| x.count(1) <= 4) {
                let out = shift_to_shuffle_square(&word).unwrap();
                assert!(!out.fallback, "{word}");
                assert!(rec.decide(word.rotate_left(out.shift).letters(), 2), "{word}");
            }
        }
    }

    #[test]
    fn case_analysis_alone_is_sound() {
        let mut rec = Recognizer::new();
        for len in (2..=20).step_by(2) {
            for word in even_binary_words(len).filter(|x| x.count(1) <= 4) {
                let bits: Vec<bool> = word.letters().iter().map(|&c| c == 1).collect();
                let shift = plan(&bits).expect("a case applies");
                assert!(rec.decide(word.rotate_left(shift).letters(), 2), "{word}");
            }
        }
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_of(&w("0011")), 2);
        assert_eq!(s_of(&w("0101")), 4);
        assert_eq!(s_of(&Word::empty(2)), 0);
        assert_eq!(s_of(&w("011")), 0);
        for sq in ["0110", "ABCABC", "010010", "11101110"] {
            let sq = w(sq);
            let square = sq.concat(&sq);
            assert_eq!(s_of(&square), square.len());
        }
    }

    #[test]
    fn s_matches_brute_force_and_is_orbit_invariant() {
        for len in (2..=12).step_by(2) {
            for word in even_binary_words(len) {
                let s = s_of(&word);
                if len <= 10 {
                    assert_eq!(s, brute_force_s(&word), "{word}");
                }
                assert_eq!(s, s_of(&word.rotate_left(1)));
                assert_eq!(s, s_of(&word.reversed()));
                assert_eq!(s, s_of(&word.complement()));
            }
        }
    }

    #[test]
    fn anti_square_examples() {
        assert!(is_anti_square(&w("000001001111000011101111")));
        assert!(!is_anti_square(&w("0011")));
        assert!(!is_anti_square(&w("0110")));
        assert!(!is_anti_square(&w("0111")));
    }

    #[test]
    fn necklace_counts() {
        // Binary necklaces of length n: 1/n Σ φ(d) 2^(n/d).
        let expected = [(1, 2), (2, 3), (6, 14), (12, 352), (16, 4116)];
        for (n, count) in expected {
            assert_eq!(Necklaces::new(n).count(), count, "length {n}");
        }
        let all: Vec<u64> = Necklaces::new(10).collect();
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        let bits = Bits::new(10);
        assert!(all.iter().all(|&x| bits.min_rotation(x) == x));
        let tail: Vec<u64> = Necklaces::after(&bits.letters(all[40])).collect();
        assert_eq!(tail, all[41..]);
    }

    #[test]
    fn scan_small_lengths() {
        let expected = [(2, 2, 1), (4, 2, 1), (6, 3, 1), (8, 3, 1), (10, 3, 1), (12, 3, 1), (14, 3, 2), (16, 2, 1)];
        for (len, s, classes) in expected {
            let report = anti_square_scan(len, &ScanConfig::default()).unwrap();
            assert!(report.complete);
            assert_eq!((report.s_min, report.class_count), (s, classes), "length {len}");
            for rep in &report.representatives {
                assert!(is_even(rep));
                assert_eq!(s_of(rep), s);
                assert_eq!(&orbit_representative(rep, SymmetrySpec::ALL).representative, rep);
            }
        }
    }

    #[test]
    fn scan_is_independent_of_workers() {
        let one = anti_square_scan(14, &ScanConfig::default()).unwrap();
        let three = anti_square_scan(14, &ScanConfig { workers: 3, ..ScanConfig::default() }).unwrap();
        assert_eq!(one, three);
    }

    #[test]
    fn report_text_round_trip() {
        let report = anti_square_scan(14, &ScanConfig::default()).unwrap();
        let text = report.to_string();
        assert!(text.starts_with("length=14 s_min=3 classes=2\n"));
        assert_eq!(text.parse::<AntiSquareReport>().unwrap(), report);
        assert!("length=4 s_min=2 classes=2\n0011\n".parse::<AntiSquareReport>().is_err());
    }

    #[test]
    fn interrupted_scan_resumes_to_same_report() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.ckpt");
        let full = anti_square_scan(16, &ScanConfig::default()).unwrap();
        let config = ScanConfig {
            checkpoint: Some(path.clone()),
            checkpoint_every: 100,
            stop_after: Some(250),
            ..ScanConfig::default()
        };
        let partial = anti_square_scan(16, &config).unwrap();
        assert!(!partial.complete);
        let resumed = anti_square_scan(16, &ScanConfig { stop_after: None, ..config.clone() }).unwrap();
        assert_eq!(resumed, full);
        // A finished checkpoint resumes to the same report as well.
        assert_eq!(anti_square_scan(16, &ScanConfig { stop_after: None, ..config }).unwrap(), full);
    }

    #[test]
    fn corrupt_checkpoint_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.ckpt");
        let config = ScanConfig {
            checkpoint: Some(path.clone()),
            ..ScanConfig::default()
        };
        anti_square_scan(10, &config).unwrap();
        let mut bytes = fs::read(&path).unwrap();
        let last = bytes.len() - 5;
        bytes[last] ^= 1;
        fs::write(&path, &bytes).unwrap();
        let err = anti_square_scan(10, &config).unwrap_err();
        assert!(err.to_string().contains("restart required"), "{err}");
        assert!(matches!(anti_square_scan(12, &ScanConfig { checkpoint: Some(path), ..ScanConfig::default() }), Err(Error::CorruptCheckpoint { .. })));
    }

    #[test]
    fn checkpoint_encoding_round_trip() {
        let cp = Checkpoint {
            length: 20,
            cursor: 0b1011,
            scanned: 77,
            s_min: 2,
            representatives: vec![3, 5, 9],
        };
        assert_eq!(Checkpoint::decode(&cp.encode(), Path::new("x")).unwrap(), cp);
        assert!(Checkpoint::decode(b"garbage", Path::new("x")).is_err());
    }

    proptest! {
        #[test]
        fn decomposition_on_long_words(bits in proptest::collection::vec(0u8..2, 0..64)) {
            let mut bits = bits;
            if bits.iter().filter(|&&b| b == 1).count() % 2 == 1 {
                bits.push(1);
            }
            if bits.len() % 2 == 1 {
                bits.push(0);
            }
            let word = Word::binary(&bits).unwrap();
            let d = cyclic_decompose(&word).unwrap();
            prop_assert!(d.validate(&word).is_ok());
            prop_assert!(d.gamma.is_cyclic());
        }
    }
}
