//! All runs of S_n without scanning S_n itself.
//!
//! Every run of S_n either first appears at some level i and is carried
//! upward by the morphisms, or ends at the last letter of S_n. The first kind
//! is found by one linear pass per level; the second by tracking the
//! periodic suffixes of each level.

use crate::error::Result;
use crate::oracle::Run;
use crate::words::{apply_morphism, DefiningSequence, Guard, Letter, ParamPair, Word};

use super::reflect::Track;
use super::scan::{scan_level, Counts};

/// Longest suffix of a level with a given period.
#[derive(Clone, Copy, Debug)]
struct Tail {
    per: Counts,
    seg: Counts,
}

/// Periodic suffixes of each level, starting from S_1.
pub(crate) struct Tails {
    tails: Vec<Tail>,
    total: Counts,
}

impl Tails {
    /// State for S_1 = a^k b.
    pub fn first_level(k: usize) -> Tails {
        Tails {
            tails: vec![Tail {
                per: Counts::new(0, 1),
                seg: Counts::new(0, 1),
            }],
            total: Counts::new(k, 1),
        }
    }

    pub fn step(&mut self, pair: ParamPair) {
        let total = self.total;
        let pmin = pair.pmin();
        self.tails.retain_mut(|t| {
            let whole = t.seg.len() == total.len();
            t.per = t.per.image(pair);
            t.seg = t.seg.image(pair);
            if !whole {
                t.seg = t.seg.add(Counts::new(pmin, 1));
            }
            t.seg.len() + 1 >= 2 * t.per.len()
        });
        // every level ends in "ab", so "b" is the longest 1-periodic suffix
        self.tails.push(Tail {
            per: Counts::new(0, 1),
            seg: Counts::new(0, 1),
        });
        self.total = total.image(pair);
    }

    pub fn word_len(&self) -> usize {
        self.total.len()
    }

    /// Runs ending at the last letter.
    pub fn runs(&self) -> impl Iterator<Item = Run> + '_ {
        let n = self.total.len();
        self.tails
            .iter()
            .filter(|t| t.seg.len() >= 2 * t.per.len())
            .map(move |t| Run::new(n - t.seg.len() + 1, n, t.per.len()))
    }
}

/// Calls `visit` once per run of S_n, in no particular order. Returns |S_n|.
///
/// Memory stays at two consecutive levels below n; S_n is never built.
pub fn visit_runs(pi: &DefiningSequence, guard: &Guard, mut visit: impl FnMut(Run)) -> Result<usize> {
    guard.check(pi.word_len())?;
    let pairs = pi.pairs();
    let n = pairs.len();
    let mut prev = Word::from_letters(vec![Letter::A]);
    let mut tails = Tails::first_level(pairs[0].p());
    for i in 1..=n {
        let pair = pairs[i - 1];
        let above = &pairs[i..];
        scan_level(pair, prev.letters(), |c| {
            let mut t = Track {
                pre: c.pre,
                per: c.per,
                fac: c.fac,
                at_end: false,
            };
            for &up in above {
                t.step(up);
            }
            visit(t.run());
        });
        if i > 1 {
            tails.step(pair);
        }
        if i < n {
            prev = apply_morphism(pair, &prev);
        }
    }
    for r in tails.runs() {
        visit(r);
    }
    Ok(tails.word_len())
}

/// Every run of S_n, sorted by (start, end, period).
pub fn enumerate_runs(pi: &DefiningSequence, guard: &Guard) -> Result<Vec<Run>> {
    let mut out = Vec::new();
    visit_runs(pi, guard, |r| out.push(r))?;
    out.sort_unstable();
    Ok(out)
}

/// Number of runs ending at the last letter of S_n, from the pairs alone.
pub fn right_end_runs(k: usize, above: &[ParamPair]) -> u64 {
    let mut tails = Tails::first_level(k);
    for &p in above {
        tails.step(p);
    }
    tails.runs().count() as u64
}
