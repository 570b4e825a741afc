//! Brute-force run detection and indexes. Quadratic on purpose: it shares no
//! logic with the level-by-level enumeration and serves as ground truth.

use std::collections::HashSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::words::{Letter, Word};

/// A maximal repetition `w[start..=end]` with minimal period `period`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl Run {
    pub fn new(start: usize, end: usize, period: usize) -> Run {
        Run { start, end, period }
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Integer order k = floor(len / period).
    pub fn order(&self) -> usize {
        self.len() / self.period
    }

    pub fn exponent(&self) -> Ratio<usize> {
        Ratio::new(self.len(), self.period)
    }
}

/// The triple (g, k, e): the run equals g^k e with e a proper prefix of g.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalizedRun {
    pub g: Word,
    pub k: usize,
    pub e: Word,
    pub start: usize,
}

impl NormalizedRun {
    pub fn triple(&self) -> (String, usize, String) {
        (self.g.to_string(), self.k, self.e.to_string())
    }
}

fn has_period(s: &[Letter], d: usize) -> bool {
    s.iter().zip(&s[d..]).all(|(x, y)| x == y)
}

fn is_primitive(s: &[Letter]) -> bool {
    let q = s.len();
    (1..q).filter(|d| q % d == 0).all(|d| !has_period(s, d))
}

/// Every run of `w`, sorted by (start, end, period).
///
/// For each candidate period q the scan finds maximal stretches with
/// w[t] = w[t+q]; a stretch covering at least 2q letters with a primitive
/// first period is a run.
pub fn find_runs(w: &Word) -> Vec<Run> {
    let s = w.letters();
    let n = s.len();
    let mut out = Vec::new();
    for q in 1..=n / 2 {
        let mut x = 0;
        while x + q < n {
            if s[x] != s[x + q] {
                x += 1;
                continue;
            }
            let mut y = x;
            while y + q < n && s[y] == s[y + q] {
                y += 1;
            }
            if y - x >= q && is_primitive(&s[x..x + q]) {
                out.push(Run::new(x + 1, y + q, q));
            }
            x = y + 1;
        }
    }
    out.sort();
    out
}

/// Re-checks the run definition letter by letter.
pub fn check_run(w: &Word, r: &Run) -> Result<(), String> {
    let s = w.letters();
    let n = s.len();
    if r.period == 0 || r.start == 0 || r.end > n || r.end < r.start {
        return Err("interval out of bounds".into());
    }
    if r.len() < 2 * r.period {
        return Err("exponent below 2".into());
    }
    let (x, y) = (r.start - 1, r.end);
    if !has_period(&s[x..y], r.period) {
        return Err("factor does not have this period".into());
    }
    if !is_primitive(&s[x..x + r.period]) {
        return Err("period is not minimal".into());
    }
    if x > 0 && s[x - 1] == s[x - 1 + r.period] {
        return Err("extends to the left".into());
    }
    if y < n && s[y] == s[y - r.period] {
        return Err("extends to the right".into());
    }
    Ok(())
}

pub fn normalize(r: &Run, w: &Word) -> NormalizedRun {
    let s = &w.letters()[r.start - 1..r.end];
    let k = r.order();
    NormalizedRun {
        g: Word::from_letters(s[..r.period].to_vec()),
        k,
        e: Word::from_letters(s[k * r.period..].to_vec()),
        start: r.start,
    }
}

/// (r, m) with r^m = w and r primitive.
pub fn primitive_root(w: &Word) -> (Word, usize) {
    let s = w.letters();
    let n = s.len();
    let d = (1..=n)
        .find(|&d| n % d == 0 && has_period(s, d))
        .unwrap_or(n);
    (Word::from_letters(s[..d].to_vec()), n / d.max(1))
}

/// Largest integer order over all runs; 1 when there is none.
pub fn integer_index(w: &Word) -> usize {
    index_of_runs(&find_runs(w))
}

pub fn index_of_runs(runs: &[Run]) -> usize {
    runs.iter().map(Run::order).max().unwrap_or(1)
}

/// Largest exponent len/period over all runs; 1 when there is none.
pub fn fractional_index(w: &Word) -> Ratio<usize> {
    find_runs(w)
        .iter()
        .map(Run::exponent)
        .max()
        .unwrap_or_else(|| Ratio::from_integer(1))
}

/// Distinct-value statistics over the runs of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct DistinctCounts {
    /// Distinct normalized periods g.
    pub periods: usize,
    /// Distinct triples (g, k, e).
    pub triples: usize,
    /// Distinct triples with an occurrence touching neither end of the word.
    pub proper_infix_triples: usize,
}

pub fn distinct_counts(w: &Word, runs: &[Run]) -> DistinctCounts {
    let mut periods = HashSet::new();
    let mut triples = HashSet::new();
    let mut infix = HashSet::new();
    for r in runs {
        let t = normalize(r, w);
        periods.insert(t.g.clone());
        let key = (t.g, t.k, t.e);
        if r.start > 1 && r.end < w.len() {
            infix.insert(key.clone());
        }
        triples.insert(key);
    }
    DistinctCounts {
        periods: periods.len(),
        triples: triples.len(),
        proper_infix_triples: infix.len(),
    }
}
