//! Per-level detection of runs that are not images of earlier runs.

use crate::oracle::Run;
use crate::words::{Letter, ParamPair};

/// Letter counts of a factor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Counts {
    pub a: usize,
    pub b: usize,
}

impl Counts {
    pub const fn new(a: usize, b: usize) -> Counts {
        Counts { a, b }
    }

    pub fn len(&self) -> usize {
        self.a + self.b
    }

    pub fn image(&self, pair: ParamPair) -> Counts {
        Counts {
            a: pair.p() * self.a + pair.p_prime() * self.b,
            b: self.a + self.b,
        }
    }

    pub fn add(self, o: Counts) -> Counts {
        Counts::new(self.a + o.a, self.b + o.b)
    }

    pub fn sub(self, o: Counts) -> Counts {
        Counts::new(self.a - o.a, self.b - o.b)
    }

    pub fn times(self, k: usize) -> Counts {
        Counts::new(self.a * k, self.b * k)
    }
}

/// Shape of a run first appearing at a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    /// (a, k, ε) on a block's a-gap of length k >= 2.
    Gap,
    /// a^pmin b (a^pmax b)^j squared, right extension a^pmin; a maps to the long block.
    ShortLongChain,
    /// (a^pmin b)^j a squared, right extension a^(pmin-1); a maps to the short block.
    ShortChain,
    /// a^pmin b squared around the image of bab, right extension a^pmin; a maps to the short block.
    ShortSquare,
    /// a^pmin b a squared around the image of bab, right extension a^(pmin-1); a maps to the long block.
    Bridge,
}

impl Form {
    pub fn label(&self) -> &'static str {
        match self {
            Form::Gap => "gap",
            Form::ShortLongChain => "short-long-chain",
            Form::ShortChain => "short-chain",
            Form::ShortSquare => "short-square",
            Form::Bridge => "bridge",
        }
    }
}

/// A detected run as letter counts: the prefix before it, its period and its whole factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub form: Form,
    pub pre: Counts,
    pub per: Counts,
    pub fac: Counts,
    /// 1-based index of the triggering letter in the previous level, or the
    /// gap start in the current level for [`Form::Gap`].
    pub anchor: usize,
}

impl Candidate {
    pub fn run(&self) -> Run {
        let s = self.pre.len() + 1;
        Run::new(s, s + self.fac.len() - 1, self.per.len())
    }
}

struct BInfo {
    index: usize,
    pre: Counts,
    gap_before: usize,
}

/// Scans `prev` (level i-1) once and reports every run of level i
/// (= image of `prev` under `pair`) that is not an image of a run of `prev`
/// and does not reach the right end of level i.
pub(crate) fn scan_level(pair: ParamPair, prev: &[Letter], mut emit: impl FnMut(Candidate)) {
    let blk_a = Counts::new(pair.p(), 1);
    let blk_b = Counts::new(pair.p_prime(), 1);
    let mut pre = Counts::default();
    let mut gap = 0usize;
    let mut last_b: Option<BInfo> = None;

    for (idx, &c) in prev.iter().enumerate() {
        let block = if c == Letter::A { blk_a } else { blk_b };
        if block.a >= 2 {
            emit(Candidate {
                form: Form::Gap,
                pre,
                per: Counts::new(1, 0),
                fac: Counts::new(block.a, 0),
                anchor: pre.len() + 1,
            });
        }
        if c == Letter::B {
            if let Some(b) = last_b.take() {
                around_b(pair, &b, gap, true, &mut emit);
            }
            last_b = Some(BInfo {
                index: idx + 1,
                pre,
                gap_before: gap,
            });
            gap = 0;
        } else {
            gap += 1;
        }
        pre = pre.add(block);
    }
    // In a level the last letter is b and its runs reach the right end; they
    // are tracked separately. A factor may end in a's after its last b.
    if let (Some(b), true) = (last_b, gap > 0) {
        around_b(pair, &b, gap, false, &mut emit);
    }
}

/// Runs triggered by the b at `b.index`, which has `m` a's before it and `n >= 1` a's after it,
/// followed by another b when `closed`.
fn around_b(pair: ParamPair, b: &BInfo, n: usize, closed: bool, emit: &mut impl FnMut(Candidate)) {
    let m = b.gap_before;
    let pmin = pair.pmin();
    let pmax = pair.pmax();
    let short = Counts::new(pmin, 1);
    let long = Counts::new(pmax, 1);
    if pair.a_is_long() {
        for j in 0..m.min(n) {
            let per = short.add(long.times(j));
            emit(Candidate {
                form: Form::ShortLongChain,
                pre: b.pre.sub(long.times(j + 1)).add(Counts::new(1, 0)),
                per,
                fac: per.times(2).add(Counts::new(pmin, 0)),
                anchor: b.index,
            });
        }
        if n == 1 && closed {
            let per = Counts::new(pmin + 1, 1);
            emit(Candidate {
                form: Form::Bridge,
                pre: b.pre,
                per,
                fac: per.times(2).add(Counts::new(pmin - 1, 0)),
                anchor: b.index,
            });
        }
    } else {
        for j in 1..=m.min(n) {
            let per = Counts::new(j * pmin + 1, j);
            emit(Candidate {
                form: Form::ShortChain,
                pre: b.pre.sub(short.times(j)),
                per,
                fac: per.times(2).add(Counts::new(pmin - 1, 0)),
                anchor: b.index,
            });
        }
        if n == 1 && closed {
            let per = short;
            emit(Candidate {
                form: Form::ShortSquare,
                pre: b.pre.add(Counts::new(1, 0)),
                per,
                fac: per.times(2).add(Counts::new(pmin, 0)),
                anchor: b.index,
            });
        }
    }
}
