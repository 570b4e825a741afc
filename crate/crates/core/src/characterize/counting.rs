//! Closed forms: run counts, distinct-run recurrences and the integer index.

use serde::Serialize;

use crate::words::{DefiningSequence, ParamPair};

use super::enumerate::right_end_runs;

/// a-gap inventory of one level: `n_p` gaps of length `p` and `n_pp` of length `p_prime`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelGaps {
    pub p: usize,
    pub p_prime: usize,
    pub n_p: u64,
    pub n_pp: u64,
}

impl LevelGaps {
    fn total(&self) -> u64 {
        self.n_p + self.n_pp
    }

    fn pmin(&self) -> u64 {
        self.p.min(self.p_prime) as u64
    }
}

/// Gap inventories of S_1 ..= S_n: level i has one gap per letter of S_{i-1}.
pub fn level_gaps(pi: &DefiningSequence) -> Vec<LevelGaps> {
    let counts = pi.level_counts();
    pi.pairs()
        .iter()
        .zip(&counts)
        .map(|(pr, &(na, nb))| LevelGaps {
            p: pr.p(),
            p_prime: pr.p_prime(),
            n_p: na,
            n_pp: nb,
        })
        .collect()
}

/// Runs not reaching the right end of the top level, from gap inventories of
/// levels 1..=n (index 0 is level 1, which must consist of a single gap).
///
/// Three families: one run per a-gap of length >= 2; one square per pair of
/// adjacent letters two levels down, weighted by the number of periods it
/// admits; one square per a-gap of length 1 one level down, except a leading one.
pub fn interior_run_count(levels: &[LevelGaps]) -> u64 {
    let mut total = 0u64;
    for (idx, lv) in levels.iter().enumerate() {
        total += lv.n_p * (lv.p >= 2) as u64 + lv.n_pp * (lv.p_prime >= 2) as u64;
        if idx >= 1 {
            let below = &levels[idx - 1];
            if idx >= 2 {
                let two = &levels[idx - 2];
                // letter pairs of the level below, read off the gaps two levels down
                let aa = (two.p as u64 - 1) * two.n_p + (two.p_prime as u64).saturating_sub(1) * two.n_pp;
                let ab = two.total();
                let ba = two.total() - 1;
                total += aa * below.p as u64 + (ab + ba) * below.pmin();
            }
            let ones = if below.p == 1 { below.n_p - 1 } else { 0 }
                + if below.p_prime == 1 { below.n_pp } else { 0 };
            total += ones;
        }
    }
    total
}

/// |runs of S_n|, computed from π alone.
pub fn run_count(pi: &DefiningSequence) -> u64 {
    interior_run_count(&level_gaps(pi)) + right_end_runs(pi.pair(1).p(), &pi.pairs()[1..])
}

/// Integer index of S_n from π alone.
///
/// Candidates per level i: the leading gap p_i (never grows, it sits at the
/// left end), and every interior gap value k, which grows by one at level i+1
/// and by one more at level i+2 when p'_{i+1} > p_{i+1}.
pub fn integer_index_formula(pi: &DefiningSequence) -> usize {
    let pairs = pi.pairs();
    let n = pairs.len();
    let mut best = 1;
    for i in 1..=n {
        let pr = pairs[i - 1];
        if pr.p() >= 2 {
            best = best.max(pr.p());
        }
        let gain = if i == n {
            0
        } else if i == n - 1 {
            1
        } else if pairs[i].p_prime() > pairs[i].p() {
            2
        } else {
            1
        };
        let mut inner = Vec::with_capacity(2);
        if i >= 2 {
            inner.push(pr.p_prime());
        }
        if i >= 3 || (i == 2 && pairs[0].p() >= 2) {
            inner.push(pr.p());
        }
        for k in inner {
            if k + gain >= 2 {
                best = best.max(k + gain);
            }
        }
    }
    best
}

/// max{P_n, P_{n-1} + 1, P + 2 or P + 1} with P = max p_j, p'_j over j < n-1,
/// taking +2 when a pair attaining P is followed by one with p' > p. Empty
/// terms are dropped. Kept for comparison; [`integer_index_formula`] is exact.
pub fn integer_index_formula_literal(pi: &DefiningSequence) -> usize {
    let pairs = pi.pairs();
    let n = pairs.len();
    let big = |pr: &ParamPair| pr.p().max(pr.p_prime());
    let mut best = big(&pairs[n - 1]);
    if n >= 2 {
        best = best.max(big(&pairs[n - 2]) + 1);
    }
    if n >= 3 {
        let head = &pairs[..n - 2];
        let p = head.iter().map(big).max().unwrap();
        let boosted = (0..head.len())
            .any(|j| big(&pairs[j]) == p && pairs[j + 1].p_prime() > pairs[j + 1].p());
        best = best.max(p + if boosted { 2 } else { 1 });
    }
    best
}

/// Summation bound of the distinct-run recurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SumBound {
    /// Σ p_i over i < n; |R'_s| = |G_s| + n - k.
    UpToNMinusOne,
    /// Σ p_i over i <= n; |R'_s| = |R'_w| + 2n - k + Σ p_i.
    UpToN,
}

impl SumBound {
    pub fn label(&self) -> &'static str {
        match self {
            SumBound::UpToNMinusOne => "A",
            SumBound::UpToN => "B",
        }
    }
}

/// Predicted (distinct periods, distinct proper-infix triples) of α_π(w)
/// from the same statistics of w.
pub fn count_distinct(pi: &DefiningSequence, base: (u64, u64), bound: SumBound) -> (u64, u64) {
    let n = pi.len() as u64;
    let last = pi.pair(pi.len());
    let k = (last.pmin() == 1) as u64;
    let (g_w, r_w) = base;
    match bound {
        SumBound::UpToNMinusOne => {
            let sum: u64 = pi.pairs()[..pi.len() - 1].iter().map(|p| p.p() as u64).sum();
            let g_s = g_w + n + sum;
            (g_s, (g_s + n).saturating_sub(k))
        }
        SumBound::UpToN => {
            let sum: u64 = pi.pairs().iter().map(|p| p.p() as u64).sum();
            let g_s = g_w + n + sum;
            (g_s, (r_w + 2 * n + sum).saturating_sub(k))
        }
    }
}
