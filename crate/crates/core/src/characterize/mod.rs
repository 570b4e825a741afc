//! Level-by-level run characterization: runs first appearing at a level,
//! their images at higher levels, linear enumeration and closed-form counts.

mod counting;
mod enumerate;
mod reflect;
mod scan;

pub use counting::{
    count_distinct, integer_index_formula, integer_index_formula_literal, interior_run_count,
    level_gaps, run_count, LevelGaps, SumBound,
};
pub use enumerate::{enumerate_runs, right_end_runs, visit_runs};
pub use reflect::{predicted_order, reflect_once};
pub use scan::Form;

use crate::error::{Error, Result};
use crate::oracle::{self, NormalizedRun, Run};
use crate::words::{
    apply_morphism, block_decompose, generate_levels, inverse_morphism, DefiningSequence, Guard,
    ParamPair, Word,
};

use reflect::{short_block, Track};
use scan::{scan_level, Candidate};

/// A run of S_i that is not the image of a run of S_{i-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OriginalRun {
    pub level: usize,
    pub form: Form,
    pub g: Word,
    pub k: usize,
    pub e2: Word,
    /// Gap start in S_i for [`Form::Gap`]; otherwise the triggering b in S_{i-1}.
    pub anchor: usize,
    pub run: Run,
    track: Track,
}

/// An original run carried up to a higher level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectedRun {
    pub base: OriginalRun,
    pub target_level: usize,
    pub g: Word,
    pub k: usize,
    pub e1: Word,
    pub e2: Word,
    pub run: Run,
}

impl ReflectedRun {
    /// e1 g^k e2.
    pub fn word(&self) -> Word {
        self.e1.concat(&self.g.repeat(self.k)).concat(&self.e2)
    }
}

fn original_from(level: usize, w: &Word, c: &Candidate) -> OriginalRun {
    let run = c.run();
    let s = &w.letters()[run.start - 1..run.end];
    let q = run.period;
    let k = run.len() / q;
    OriginalRun {
        level,
        form: c.form,
        g: Word::from_letters(s[..q].to_vec()),
        k,
        e2: Word::from_letters(s[k * q..].to_vec()),
        anchor: c.anchor,
        run,
        track: Track {
            pre: c.pre,
            per: c.per,
            fac: c.fac,
            at_end: false,
        },
    }
}

/// Runs of S_i not inherited from S_{i-1}, excluding those ending at the last
/// letter of S_i. Sorted by (start, period).
pub fn original_runs(pi: &DefiningSequence, i: usize, guard: &Guard) -> Result<Vec<OriginalRun>> {
    if i == 0 || i > pi.len() {
        return Err(Error::LevelOutOfRange { level: i, max: pi.len() });
    }
    let prefix = DefiningSequence::new(pi.pairs()[..i].to_vec())?;
    let levels = generate_levels(&prefix, guard)?;
    let cur = &levels[i];
    let mut out = Vec::new();
    scan_level(pi.pair(i), levels[i - 1].letters(), |c| out.push(original_from(i, cur, &c)));
    out.sort_by_key(|o| (o.run.start, o.run.period));
    Ok(out)
}

/// Carries `r` from its level to level n of `pi`.
pub fn reflect_to_top(r: &OriginalRun, pi: &DefiningSequence) -> ReflectedRun {
    let mut g = r.g.clone();
    let mut e1 = Word::new();
    let mut e2 = r.e2.clone();
    let mut t = r.track;
    for &pair in &pi.pairs()[r.level..] {
        let left = t.pre.len() > 0;
        g = apply_morphism(pair, &g);
        let img = apply_morphism(pair, &e1);
        e1 = if left { short_block(pair).concat(&img) } else { img };
        e2 = apply_morphism(pair, &e2).concat(&Word::a_power(pair.pmin()));
        t.step(pair);
    }
    ReflectedRun {
        base: r.clone(),
        target_level: pi.len(),
        g,
        k: r.k,
        e1,
        e2,
        run: t.run(),
    }
}

/// The run `r` and its images at every level up to n.
pub fn reflection_path(r: &OriginalRun, pi: &DefiningSequence) -> Vec<Run> {
    let mut t = r.track;
    let mut out = vec![t.run()];
    for &pair in &pi.pairs()[r.level..] {
        t.step(pair);
        out.push(t.run());
    }
    out
}

/// A run found in an arbitrary factor of a level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetectedRun {
    pub form: Form,
    pub run: Run,
    pub normalized: NormalizedRun,
}

impl DetectedRun {
    /// Start of the second occurrence of the period.
    pub fn second_period_start(&self) -> usize {
        self.run.start + self.run.period
    }
}

/// Runs of `x` matching the per-level templates, where `x` is read as a
/// factor of a level built with `pair` over the preimage of its full blocks.
/// Template hits that are not runs of `x` itself are discarded.
pub fn detect_originals(pair: ParamPair, x: &Word) -> Result<Vec<DetectedRun>> {
    let d = block_decompose(pair, x)?;
    let pre = inverse_morphism(pair, &d.core())?;
    let offset = d.prefix_partial.len();
    let mut out = Vec::new();
    scan_level(pair, pre.letters(), |c| {
        let r = c.run();
        let run = Run::new(r.start + offset, r.end + offset, r.period);
        if run.end <= x.len() && oracle::check_run(x, &run).is_ok() {
            out.push(DetectedRun {
                form: c.form,
                run,
                normalized: oracle::normalize(&run, x),
            });
        }
    });
    out.sort_by_key(|d| (d.run.start, d.run.period));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{find_runs, normalize};
    use crate::words::{generate, word};

    fn pi(s: &str) -> DefiningSequence {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let g = Guard::default();
        assert!(enumerate_runs(&pi("1,2"), &g).unwrap().is_empty());
        assert_eq!(enumerate_runs(&pi("2,1"), &g).unwrap(), vec![Run::new(1, 2, 1)]);
        assert_eq!(
            enumerate_runs(&pi("2,1;2,1"), &g).unwrap(),
            vec![Run::new(1, 2, 1), Run::new(1, 7, 3), Run::new(4, 5, 1), Run::new(5, 8, 2)]
        );
    }

    #[test]
    fn enumerate_matches_scan_on_mixed_sequence() {
        let p = pi("2,3;3,2;1,2;2,1;4,3");
        let w = generate(&p, &Guard::default()).unwrap();
        assert_eq!(enumerate_runs(&p, &Guard::default()).unwrap(), find_runs(&w));
    }

    #[test]
    fn gap_originals_for_long_a() {
        // S_2 = aab aab ab: both a-gaps of length 2 are originals
        let o = original_runs(&pi("2,1;2,1"), 2, &Guard::default()).unwrap();
        let gaps: Vec<_> = o.iter().filter(|r| r.form == Form::Gap).map(|r| r.run).collect();
        assert_eq!(gaps, vec![Run::new(1, 2, 1), Run::new(4, 5, 1)]);
        for r in o.iter().filter(|r| r.form == Form::Gap) {
            assert_eq!((r.g.to_string(), r.k, r.e2.to_string()), ("a".into(), 2, "".into()));
        }
    }

    #[test]
    fn short_square_on_bab() {
        let p = pi("1,2;1,2;1,2;1,2");
        let levels = generate_levels(&p, &Guard::default()).unwrap();
        let o = original_runs(&p, 4, &Guard::default()).unwrap();
        assert!(levels[3].to_string().contains("bab"));
        let sq: Vec<_> = o.iter().filter(|r| r.form == Form::ShortSquare).collect();
        assert!(!sq.is_empty());
        for r in sq {
            assert_eq!((r.g.to_string(), r.k, r.e2.to_string()), ("ab".into(), 2, "a".into()));
        }
    }

    #[test]
    fn reflect_gap_square_examples() {
        // the square aa inside "baab"
        let w = word("baab");
        let r = Run::new(2, 3, 1);
        let up = reflect_once(&w, &r, ParamPair::new(1, 2).unwrap()).unwrap();
        let next = apply_morphism(ParamPair::new(1, 2).unwrap(), &w);
        assert!(find_runs(&next).contains(&up));
        let t = normalize(&up, &next);
        assert_eq!((t.g.len(), t.k), (2, 3));

        let up = reflect_once(&w, &r, ParamPair::new(2, 1).unwrap()).unwrap();
        let next = apply_morphism(ParamPair::new(2, 1).unwrap(), &w);
        assert!(find_runs(&next).contains(&up));
        let t = normalize(&up, &next);
        assert_eq!((t.g.to_string(), t.k), ("aba".into(), 3));
    }

    #[test]
    fn reflect_rejects_non_runs() {
        let w = word("aabab");
        assert!(reflect_once(&w, &Run::new(1, 3, 1), ParamPair::new(1, 2).unwrap()).is_err());
    }

    #[test]
    fn predicted_order_cases() {
        let t = NormalizedRun { g: word("aab"), k: 2, e: word("a"), start: 1 };
        assert_eq!(predicted_order(&t), 2);
        let t = NormalizedRun { g: word("a"), k: 2, e: word(""), start: 1 };
        assert_eq!(predicted_order(&t), 3);
    }

    #[test]
    fn reflect_to_top_identity_at_top() {
        let p = pi("2,1;2,1");
        let o = original_runs(&p, 2, &Guard::default()).unwrap();
        for r in &o {
            let top = reflect_to_top(r, &p);
            assert_eq!(top.run, r.run);
            assert_eq!(top.g, r.g);
            assert!(top.e1.is_empty());
        }
    }

    #[test]
    fn gap_run_gains_twice_when_long_b_follows() {
        // interior gap of length 2 at level 2, then p' > p twice
        let p = pi("2,1;2,1;1,2;1,2;1,2");
        let o = original_runs(&p, 2, &Guard::default()).unwrap();
        let r = o.iter().find(|r| r.form == Form::Gap && r.run.start > 1).unwrap();
        let orders: Vec<_> = reflection_path(r, &p).iter().map(Run::order).collect();
        assert_eq!(orders, vec![2, 3, 4, 4]);
    }

    #[test]
    fn counts_from_pairs() {
        assert_eq!(run_count(&pi("2,1")), 1);
        assert_eq!(run_count(&pi("2,1;2,1")), 4);
        assert_eq!(run_count(&pi("1,2")), 0);
    }

    #[test]
    fn index_formula_examples() {
        let fib = DefiningSequence::uniform(ParamPair::new(2, 1).unwrap(), 5).unwrap();
        let other = DefiningSequence::uniform(ParamPair::new(1, 2).unwrap(), 5).unwrap();
        assert_eq!(integer_index_formula(&fib), 3);
        assert_eq!(integer_index_formula(&other), 4);
        assert_eq!(integer_index_formula(&pi("2,3;3,2;1,2")), 4);
        assert_eq!(integer_index_formula_literal(&fib), 3);
        assert_eq!(integer_index_formula_literal(&other), 4);
        assert_eq!(integer_index_formula_literal(&pi("2,3;3,2;1,2")), 4);
    }

    #[test]
    fn distinct_recurrence_single_pair() {
        let (g, _) = count_distinct(&pi("2,1"), (5, 7), SumBound::UpToNMinusOne);
        assert_eq!(g, 6);
    }
}
