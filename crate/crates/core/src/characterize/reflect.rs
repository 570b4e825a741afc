//! Carrying a run of one level to the next.
//!
//! The image of a run (g, k, e1, e2) of level i under a -> a^p b, b -> a^p' b
//! has period image(g), left extension a^pmin b image(e1) and right extension
//! image(e2) a^pmin. Since every block ends in a^pmin b, everything can be
//! tracked as letter counts.

use crate::error::{Error, Result};
use crate::oracle::{self, NormalizedRun, Run};
use crate::words::{Letter, ParamPair, Word};

use super::scan::Counts;

/// A run described by letter counts of its prefix, its period and its factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Track {
    pub pre: Counts,
    pub per: Counts,
    pub fac: Counts,
    /// The run ends at the last letter of its level.
    pub at_end: bool,
}

impl Track {
    pub fn step(&mut self, pair: ParamPair) {
        let pmin = pair.pmin();
        let left = self.pre.len() > 0;
        self.pre = if left {
            self.pre.image(pair).sub(Counts::new(pmin, 1))
        } else {
            Counts::default()
        };
        self.per = self.per.image(pair);
        let mut fac = self.fac.image(pair);
        if left {
            fac = fac.add(Counts::new(pmin, 1));
        }
        if !self.at_end {
            fac = fac.add(Counts::new(pmin, 0));
        }
        self.fac = fac;
    }

    pub fn run(&self) -> Run {
        let s = self.pre.len() + 1;
        Run::new(s, s + self.fac.len() - 1, self.per.len())
    }
}

fn counts_of(s: &[Letter]) -> Counts {
    let b = s.iter().filter(|&&c| c == Letter::B).count();
    Counts::new(s.len() - b, b)
}

pub(crate) fn track_of(level: &Word, r: &Run) -> Track {
    let s = level.letters();
    Track {
        pre: counts_of(&s[..r.start - 1]),
        per: counts_of(&s[r.start - 1..r.start - 1 + r.period]),
        fac: counts_of(&s[r.start - 1..r.end]),
        at_end: r.end == s.len(),
    }
}

/// The run of the next level that is the image of `r`, a run of `level`.
pub fn reflect_once(level: &Word, r: &Run, pair: ParamPair) -> Result<Run> {
    oracle::check_run(level, r).map_err(|reason| Error::NotARun {
        start: r.start,
        end: r.end,
        period: r.period,
        reason,
    })?;
    let mut t = track_of(level, r);
    t.step(pair);
    Ok(t.run())
}

/// Order after one reflection of an interior run: k + 1 when |g| = |e| + 1, else k.
pub fn predicted_order(r: &NormalizedRun) -> usize {
    if r.g.len() == r.e.len() + 1 {
        r.k + 1
    } else {
        r.k
    }
}

/// `a^pmin b`.
pub(crate) fn short_block(pair: ParamPair) -> Word {
    let mut w = Word::a_power(pair.pmin());
    w.push(Letter::B);
    w
}
