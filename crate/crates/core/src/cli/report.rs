//! Report records shared by the CLI and the test suites.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::characterize::{count_distinct, enumerate_runs, integer_index_formula, SumBound};
use crate::error::Result;
use crate::eta::build_eta;
use crate::oracle::{distinct_counts, find_runs, index_of_runs, normalize, Run};
use crate::words::{generate, DefiningSequence, Guard, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub start: usize,
    pub end: usize,
    pub period: usize,
    pub g: String,
    pub k: usize,
    pub e: String,
}

impl RunRecord {
    pub fn new(r: &Run, w: &Word) -> RunRecord {
        let t = normalize(r, w);
        RunRecord {
            start: r.start,
            end: r.end,
            period: r.period,
            g: t.g.to_string(),
            k: t.k,
            e: t.e.to_string(),
        }
    }

    pub fn run(&self) -> Run {
        Run::new(self.start, self.end, self.period)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub pi: String,
    pub word_length: usize,
    pub method: &'static str,
    pub runs: Vec<RunRecord>,
    pub elapsed: Duration,
}

/// How the distinct-run recurrences fared on one sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reconciliation {
    /// "A", "B", "A+B", "none", or "n/a" for a single pair.
    pub label: String,
    pub oracle: (u64, u64),
    pub predicted_a: (u64, u64),
    pub predicted_b: (u64, u64),
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyRow {
    pub pi: String,
    pub word_length: usize,
    pub runs: usize,
    pub run_set_match: bool,
    pub index_formula: usize,
    pub index_oracle: usize,
    pub index_match: bool,
    pub eta_length_match: bool,
    pub eta_letters_match: bool,
    pub occurrence_count: u64,
    pub occurrence_match: bool,
    pub count_reconciliation: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

impl VerifyRow {
    pub fn all_match(&self) -> bool {
        self.run_set_match && self.index_match && self.eta_length_match && self.eta_letters_match
    }
}

/// Positions 1..=n sampled deterministically: both ends plus an even spread.
pub fn sample_positions(n: u64, count: u64) -> Vec<u64> {
    if n <= count {
        return (1..=n).collect();
    }
    let mut v: Vec<u64> = (0..count).map(|i| 1 + i * (n - 1) / (count - 1)).collect();
    v.dedup();
    v
}

/// Distinct-run statistics of S_1 pushed through the remaining pairs.
pub fn reconcile(pi: &DefiningSequence, guard: &Guard) -> Result<Option<Reconciliation>> {
    let s = generate(pi, guard)?;
    let runs = find_runs(&s);
    reconcile_with(pi, &s, &runs)
}

/// [`reconcile`] given S_n and its oracle runs.
pub fn reconcile_with(pi: &DefiningSequence, s: &Word, s_runs: &[Run]) -> Result<Option<Reconciliation>> {
    let Some(rest) = pi.tail() else {
        return Ok(None);
    };
    let first = DefiningSequence::new(vec![pi.pair(1)])?;
    let w = generate(&first, &Guard::unlimited())?;
    let cw = distinct_counts(&w, &find_runs(&w));
    let cs = distinct_counts(s, s_runs);
    let base = (cw.periods as u64, cw.proper_infix_triples as u64);
    let oracle = (cs.periods as u64, cs.proper_infix_triples as u64);
    let a = count_distinct(&rest, base, SumBound::UpToNMinusOne);
    let b = count_distinct(&rest, base, SumBound::UpToN);
    let label = match (a == oracle, b == oracle) {
        (true, true) => "A+B",
        (true, false) => "A",
        (false, true) => "B",
        (false, false) => "none",
    };
    Ok(Some(Reconciliation {
        label: label.to_string(),
        oracle,
        predicted_a: a,
        predicted_b: b,
    }))
}

/// Runs every check for one sequence.
pub fn verify_one(pi: &DefiningSequence, guard: &Guard) -> Result<VerifyRow> {
    let w = generate(pi, guard)?;
    let theorem = enumerate_runs(pi, guard)?;
    let oracle = find_runs(&w);
    let mut details = Vec::new();

    let missing: Vec<_> = oracle.iter().filter(|r| theorem.binary_search(r).is_err()).collect();
    let extra: Vec<_> = theorem.iter().filter(|r| oracle.binary_search(r).is_err()).collect();
    let run_set_match = missing.is_empty() && extra.is_empty() && theorem.len() == oracle.len();
    if !missing.is_empty() {
        details.push(format!("missing {:?}", &missing[..missing.len().min(5)]));
    }
    if !extra.is_empty() {
        details.push(format!("extra {:?}", &extra[..extra.len().min(5)]));
    }
    if theorem.len() != oracle.len() && missing.is_empty() && extra.is_empty() {
        details.push("duplicate runs in enumeration".to_string());
    }

    let index_formula = integer_index_formula(pi);
    let index_oracle = index_of_runs(&oracle);

    let eta = build_eta(pi)?;
    let eta_length_match = eta.value() == w.len() as u64;
    let eta_letters_match = eta_length_match
        && sample_positions(w.len() as u64, 1000)
            .into_iter()
            .all(|j| eta.letter_at(j).ok() == w.at(j as usize));
    let occurrence_count = eta.count_run_occurrences();
    let occurrence_match = occurrence_count == oracle.len() as u64;
    if !occurrence_match {
        details.push(format!("occurrences {occurrence_count} vs {} runs", oracle.len()));
    }

    let count_reconciliation = match reconcile_with(pi, &w, &oracle)? {
        None => "n/a".to_string(),
        Some(r) => {
            if r.label == "none" {
                details.push(format!(
                    "recurrence (G, R') oracle {:?}, A {:?}, B {:?}",
                    r.oracle, r.predicted_a, r.predicted_b
                ));
            }
            r.label
        }
    };

    Ok(VerifyRow {
        pi: pi.to_string(),
        word_length: w.len(),
        runs: oracle.len(),
        run_set_match,
        index_formula,
        index_oracle,
        index_match: index_formula == index_oracle,
        eta_length_match,
        eta_letters_match,
        occurrence_count,
        occurrence_match,
        count_reconciliation,
        details,
    })
}
