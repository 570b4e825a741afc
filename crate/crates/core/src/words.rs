//! Letters, words, defining sequences and the morphisms a -> a^p b, b -> a^p' b.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on materialized word length.
pub const DEFAULT_MAX_LEN: u64 = 10_000_000;

/// Environment variable that overrides [`DEFAULT_MAX_LEN`].
pub const MAX_LEN_ENV: &str = "STURMIAN_MAX_LEN";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Letter {
    A = 0,
    B = 1,
}

impl Letter {
    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub fn from_char(c: char) -> Result<Letter> {
        match c {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            other => Err(Error::InvalidLetter(other)),
        }
    }
}

/// A finite word over {a, b}. Positions in the public API are 1-based.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn with_capacity(n: usize) -> Word {
        Word(Vec::with_capacity(n))
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// `a^k`.
    pub fn a_power(k: usize) -> Word {
        Word(vec![Letter::A; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> Option<Letter> {
        i.checked_sub(1).and_then(|x| self.0.get(x).copied())
    }

    /// `w[i..j]`, 1-based and inclusive. An empty word when `j < i`.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        if j < i {
            return Ok(Word::new());
        }
        if i == 0 || j > self.len() {
            return Err(Error::OutOfRange {
                position: if i == 0 { 0 } else { j as u64 },
                max: self.len() as u64,
            });
        }
        Ok(Word(self.0[i - 1..j].to_vec()))
    }

    pub fn count(&self, c: Letter) -> usize {
        self.0.iter().filter(|&&x| x == c).count()
    }

    pub fn push(&mut self, c: Letter) {
        self.0.push(c);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn repeat(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|c| c.to_char()).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars().map(Letter::from_char).collect::<Result<Vec<_>>>().map(Word)
    }
}

/// Parses a literal word; panics on letters outside {a, b}. Meant for tests and constants.
pub fn word(s: &str) -> Word {
    s.parse().expect("word literal over {a, b}")
}

/// A valid parameter pair: p, p' >= 1 and |p - p'| = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamPair {
    p: usize,
    p_prime: usize,
}

impl ParamPair {
    pub fn new(p: usize, p_prime: usize) -> Result<ParamPair> {
        ParamPair::checked(p, p_prime, 1)
    }

    fn checked(p: usize, p_prime: usize, index: usize) -> Result<ParamPair> {
        if p == 0 || p_prime == 0 || p.abs_diff(p_prime) != 1 {
            return Err(Error::InvalidPair { index, p, p_prime });
        }
        Ok(ParamPair { p, p_prime })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn p_prime(&self) -> usize {
        self.p_prime
    }

    pub fn pmin(&self) -> usize {
        self.p.min(self.p_prime)
    }

    pub fn pmax(&self) -> usize {
        self.pmin() + 1
    }

    /// True when the image of `a` is the long block.
    pub fn a_is_long(&self) -> bool {
        self.p > self.p_prime
    }

    /// Number of a's in the image of `c`.
    pub fn gap(&self, c: Letter) -> usize {
        match c {
            Letter::A => self.p,
            Letter::B => self.p_prime,
        }
    }

    /// Image of a single letter.
    pub fn block(&self, c: Letter) -> Word {
        let mut w = Word::a_power(self.gap(c));
        w.push(Letter::B);
        w
    }

    /// The six pairs with max(p, p') <= 4, in a fixed order.
    pub fn small_pairs() -> Vec<ParamPair> {
        [(1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 3)]
            .iter()
            .map(|&(p, q)| ParamPair { p, p_prime: q })
            .collect()
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.p_prime)
    }
}

/// Ordered, non-empty list of parameter pairs. Level `i` uses `pair(i)`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DefiningSequence(Vec<ParamPair>);

impl DefiningSequence {
    pub fn new(pairs: Vec<ParamPair>) -> Result<DefiningSequence> {
        if pairs.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(DefiningSequence(pairs))
    }

    /// Builds from raw tuples, validating each.
    pub fn from_tuples(pairs: &[(usize, usize)]) -> Result<DefiningSequence> {
        let pairs = pairs
            .iter()
            .enumerate()
            .map(|(i, &(p, q))| ParamPair::checked(p, q, i + 1))
            .collect::<Result<Vec<_>>>()?;
        DefiningSequence::new(pairs)
    }

    /// `pair` repeated `n` times.
    pub fn uniform(pair: ParamPair, n: usize) -> Result<DefiningSequence> {
        DefiningSequence::new(vec![pair; n])
    }

    pub fn pairs(&self) -> &[ParamPair] {
        &self.0
    }

    /// Number of levels n.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Pair of level `i`, 1-based.
    pub fn pair(&self, i: usize) -> ParamPair {
        self.0[i - 1]
    }

    /// Sequence without its first pair, if anything remains.
    pub fn tail(&self) -> Option<DefiningSequence> {
        if self.0.len() < 2 {
            None
        } else {
            Some(DefiningSequence(self.0[1..].to_vec()))
        }
    }

    /// Letter counts (#a, #b) of S_0 ..= S_n, saturating at u64::MAX.
    pub fn level_counts(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let (mut na, mut nb) = (1u64, 0u64);
        out.push((na, nb));
        for pr in &self.0 {
            let a = (pr.p as u64)
                .saturating_mul(na)
                .saturating_add((pr.p_prime as u64).saturating_mul(nb));
            let b = na.saturating_add(nb);
            na = a;
            nb = b;
            out.push((na, nb));
        }
        out
    }

    /// |S_0| ..= |S_n|, saturating.
    pub fn level_lengths(&self) -> Vec<u64> {
        self.level_counts()
            .into_iter()
            .map(|(a, b)| a.saturating_add(b))
            .collect()
    }

    /// |S_n|, saturating.
    pub fn word_len(&self) -> u64 {
        *self.level_lengths().last().unwrap()
    }
}

impl FromStr for DefiningSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<DefiningSequence> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut pairs = Vec::new();
        for (i, token) in cleaned.split(';').enumerate() {
            let index = i + 1;
            let malformed = || Error::MalformedPair {
                index,
                token: token.to_string(),
            };
            let (p, q) = token.split_once(',').ok_or_else(malformed)?;
            let p: usize = p.parse().map_err(|_| malformed())?;
            let q: usize = q.parse().map_err(|_| malformed())?;
            pairs.push(ParamPair::checked(p, q, index)?);
        }
        DefiningSequence::new(pairs)
    }
}

impl fmt::Display for DefiningSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, pr) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{pr}")?;
        }
        Ok(())
    }
}

pub fn parse_defining_sequence(text: &str) -> Result<DefiningSequence> {
    text.parse()
}

/// Cap on the length of any word this crate materializes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub max_len: u64,
}

impl Default for Guard {
    fn default() -> Guard {
        Guard {
            max_len: DEFAULT_MAX_LEN,
        }
    }
}

impl Guard {
    pub fn new(max_len: u64) -> Guard {
        Guard { max_len }
    }

    pub fn unlimited() -> Guard {
        Guard { max_len: u64::MAX }
    }

    /// Default guard, overridden by `STURMIAN_MAX_LEN` when it holds a number.
    pub fn from_env() -> Guard {
        std::env::var(MAX_LEN_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Guard::new)
            .unwrap_or_default()
    }

    pub fn check(&self, len: u64) -> Result<()> {
        if len > self.max_len {
            Err(Error::GuardExceeded {
                len,
                limit: self.max_len,
            })
        } else {
            Ok(())
        }
    }
}

pub fn image_len(pair: ParamPair, w: &Word) -> u64 {
    let nb = w.count(Letter::B) as u64;
    let na = w.len() as u64 - nb;
    (pair.p as u64 + 1) * na + (pair.p_prime as u64 + 1) * nb
}

pub fn apply_morphism(pair: ParamPair, w: &Word) -> Word {
    let mut out = Word::with_capacity(image_len(pair, w) as usize);
    for &c in w.letters() {
        let g = pair.gap(c);
        out.0.extend(std::iter::repeat(Letter::A).take(g));
        out.0.push(Letter::B);
    }
    out
}

/// [`apply_morphism`] refusing results longer than the guard.
pub fn try_apply_morphism(pair: ParamPair, w: &Word, guard: &Guard) -> Result<Word> {
    guard.check(image_len(pair, w))?;
    Ok(apply_morphism(pair, w))
}

/// S_n for the given sequence.
pub fn generate(pi: &DefiningSequence, guard: &Guard) -> Result<Word> {
    guard.check(pi.word_len())?;
    let mut w = Word(vec![Letter::A]);
    for &pr in pi.pairs() {
        w = apply_morphism(pr, &w);
    }
    Ok(w)
}

/// S_0 ..= S_n.
pub fn generate_levels(pi: &DefiningSequence, guard: &Guard) -> Result<Vec<Word>> {
    guard.check(pi.word_len())?;
    let mut out = vec![Word(vec![Letter::A])];
    for &pr in pi.pairs() {
        let next = apply_morphism(pr, out.last().unwrap());
        out.push(next);
    }
    Ok(out)
}

pub fn inverse_morphism(pair: ParamPair, w: &Word) -> Result<Word> {
    let fail = |reason: String| Error::NotBlockComplete {
        p: pair.p,
        p_prime: pair.p_prime,
        reason,
    };
    let mut out = Word::new();
    let mut gap = 0usize;
    for (i, &c) in w.letters().iter().enumerate() {
        match c {
            Letter::A => gap += 1,
            Letter::B => {
                if gap == pair.p {
                    out.push(Letter::A);
                } else if gap == pair.p_prime {
                    out.push(Letter::B);
                } else {
                    return Err(fail(format!("block of {gap} a's ending at position {}", i + 1)));
                }
                gap = 0;
            }
        }
    }
    if gap > 0 {
        return Err(fail(format!("trailing {gap} a's without a closing b")));
    }
    Ok(out)
}

/// Exhaustive check over every factor length and offset.
pub fn is_balanced(w: &Word) -> bool {
    let n = w.len();
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0usize);
    for &c in w.letters() {
        prefix.push(prefix.last().unwrap() + (c == Letter::B) as usize);
    }
    for len in 1..n {
        let mut lo = usize::MAX;
        let mut hi = 0;
        for i in 0..=n - len {
            let b = prefix[i + len] - prefix[i];
            lo = lo.min(b);
            hi = hi.max(b);
        }
        if hi - lo > 1 {
            return false;
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Short,
    Long,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub prefix_partial: Word,
    pub blocks: Vec<Block>,
    pub suffix_partial: Word,
}

impl BlockDecomposition {
    pub fn reassemble(&self) -> Word {
        let mut w = self.prefix_partial.clone();
        for b in &self.blocks {
            w.extend_from(&b.word);
        }
        w.extend_from(&self.suffix_partial);
        w
    }

    /// The full blocks concatenated.
    pub fn core(&self) -> Word {
        let mut w = Word::new();
        for b in &self.blocks {
            w.extend_from(&b.word);
        }
        w
    }
}

/// Splits `w` into partial prefix, full blocks, partial suffix.
///
/// A leading a-gap equal to p or p' is read as a full block.
pub fn block_decompose(pair: ParamPair, w: &Word) -> Result<BlockDecomposition> {
    let letters = w.letters();
    let bad = |gap: usize, position: usize| Error::NotLevelFactor {
        p: pair.p,
        p_prime: pair.p_prime,
        gap,
        position,
    };
    let kind = |gap: usize| {
        if gap == pair.pmin() {
            BlockKind::Short
        } else {
            BlockKind::Long
        }
    };

    let mut prefix_partial = Word::new();
    let mut blocks = Vec::new();
    let mut start = 0usize;
    let mut first = true;
    for (i, &c) in letters.iter().enumerate() {
        if c != Letter::B {
            continue;
        }
        let gap = i - start;
        if gap == pair.p || gap == pair.p_prime {
            blocks.push(Block {
                kind: kind(gap),
                word: Word(letters[start..=i].to_vec()),
            });
        } else if first && gap < pair.pmin() {
            prefix_partial = Word(letters[start..=i].to_vec());
        } else {
            return Err(bad(gap, start + 1));
        }
        first = false;
        start = i + 1;
    }
    let tail = letters.len() - start;
    if tail > pair.pmax() {
        return Err(bad(tail, start + 1));
    }
    Ok(BlockDecomposition {
        prefix_partial,
        blocks,
        suffix_partial: Word(letters[start..].to_vec()),
    })
}

/// `w[i+1..|w|] w[1..i]`.
pub fn circular_shift(w: &Word, i: usize) -> Result<Word> {
    if i == 0 || i >= w.len() {
        return Err(Error::OutOfRange {
            position: i as u64,
            max: w.len().saturating_sub(1) as u64,
        });
    }
    let mut out = w.0[i..].to_vec();
    out.extend_from_slice(&w.0[..i]);
    Ok(Word(out))
}
