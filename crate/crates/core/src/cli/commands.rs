use std::io::{self, Write};
use std::time::Instant;

use crate::characterize::{
    enumerate_runs, integer_index_formula, integer_index_formula_literal, run_count,
};
use crate::corpus;
use crate::error::{Error, Result};
use crate::eta::build_eta;
use crate::oracle::{find_runs, index_of_runs};
use crate::words::{generate, DefiningSequence, Guard};

use super::report::{reconcile, verify_one, RunRecord, RunReport, VerifyRow};
use super::{Command, CorpusArgs, Format, IndexMethod, Method, EXIT_MISMATCH, EXIT_OK, ORACLE_LIMIT};

fn parse(text: &str) -> Result<DefiningSequence> {
    text.parse()
}

fn oracle_guard(guard: &Guard) -> Guard {
    Guard::new(guard.max_len.min(ORACLE_LIMIT))
}

// Output errors (a closed pipe) are not worth a failing exit code.
macro_rules! out {
    ($w:expr, $($arg:tt)*) => {
        let _ = writeln!($w, $($arg)*);
    };
}

pub(super) fn dispatch(cmd: Command) -> Result<u8> {
    let guard = Guard::from_env();
    let stdout = io::stdout();
    let mut o = stdout.lock();
    match cmd {
        Command::Generate { pi, length } => {
            let pi = parse(&pi)?;
            if length {
                guard.check(pi.word_len())?;
                out!(o, "{}", pi.word_len());
            } else {
                out!(o, "{}", generate(&pi, &guard)?);
            }
            Ok(EXIT_OK)
        }
        Command::Runs { pi, method, format } => {
            let pi = parse(&pi)?;
            let report = runs_report(&pi, method, &guard)?;
            match format {
                Format::Text => {
                    out!(o, "start\tend\tperiod\tg\tk\te");
                    for r in &report.runs {
                        out!(o, "{}\t{}\t{}\t{}\t{}\t{}", r.start, r.end, r.period, r.g, r.k, r.e);
                    }
                }
                Format::Jsonl => {
                    for r in &report.runs {
                        out!(o, "{}", serde_json::to_string(r).expect("plain record"));
                    }
                }
            }
            eprintln!(
                "pi={} length={} method={} runs={} elapsed_ms={:.3}",
                report.pi,
                report.word_length,
                report.method,
                report.runs.len(),
                report.elapsed.as_secs_f64() * 1e3
            );
            Ok(EXIT_OK)
        }
        Command::Verify { corpus, format } => {
            let list = corpus_of(&corpus)?;
            let g = oracle_guard(&guard);
            let mut rows = Vec::with_capacity(list.len());
            for pi in &list {
                rows.push(verify_one(pi, &g)?);
            }
            print_rows(&mut o, &rows, format);
            let bad = rows.iter().filter(|r| !r.all_match()).count();
            eprintln!("{} rows, {} mismatching", rows.len(), bad);
            Ok(if bad == 0 { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Index { pi, method } => {
            let pi = parse(&pi)?;
            let formula = integer_index_formula(&pi);
            match method {
                IndexMethod::Formula => {
                    out!(o, "{formula}");
                }
                IndexMethod::Oracle => {
                    let w = generate(&pi, &oracle_guard(&guard))?;
                    out!(o, "{}", index_of_runs(&find_runs(&w)));
                }
                IndexMethod::Both => {
                    out!(o, "{formula}");
                    out!(o, "literal_formula\t{}", integer_index_formula_literal(&pi));
                    if pi.word_len() <= ORACLE_LIMIT.min(guard.max_len) {
                        let w = generate(&pi, &guard)?;
                        let oracle = index_of_runs(&find_runs(&w));
                        out!(o, "oracle\t{oracle}");
                        if oracle != formula {
                            return Ok(EXIT_MISMATCH);
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Count { pi, format } => {
            let pi = parse(&pi)?;
            guard.check(pi.word_len())?;
            let eta = build_eta(&pi)?;
            let mut fields = serde_json::Map::new();
            fields.insert("pi".into(), pi.to_string().into());
            fields.insert("word_length".into(), pi.word_len().into());
            fields.insert("runs_closed_form".into(), run_count(&pi).into());
            fields.insert("runs_eta".into(), eta.count_run_occurrences().into());
            if pi.word_len() <= ORACLE_LIMIT.min(guard.max_len) {
                let w = generate(&pi, &guard)?;
                fields.insert("runs_oracle".into(), find_runs(&w).len().into());
                if let Some(r) = reconcile(&pi, &guard)? {
                    fields.insert("distinct_oracle".into(), serde_json::json!(r.oracle));
                    fields.insert("distinct_a".into(), serde_json::json!(r.predicted_a));
                    fields.insert("distinct_b".into(), serde_json::json!(r.predicted_b));
                    fields.insert("recurrence_match".into(), r.label.into());
                }
            }
            match format {
                Format::Jsonl => {
                    out!(o, "{}", serde_json::Value::Object(fields));
                }
                Format::Text => {
                    for (k, v) in fields {
                        out!(o, "{k}\t{v}");
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Eta { pi, symbolic } => {
            let pi = parse(&pi)?;
            let e = build_eta(&pi)?;
            if symbolic {
                out!(o, "{}", e.symbolic());
            } else {
                out!(o, "{e}");
            }
            out!(o, "value\t{}", e.value());
            Ok(EXIT_OK)
        }
    }
}

fn runs_report(pi: &DefiningSequence, method: Method, guard: &Guard) -> Result<RunReport> {
    let t0 = Instant::now();
    let (w, runs, label) = match method {
        Method::Theorem => {
            let runs = enumerate_runs(pi, guard)?;
            (generate(pi, guard)?, runs, "theorem")
        }
        Method::Oracle => {
            let w = generate(pi, &oracle_guard(guard))?;
            let runs = find_runs(&w);
            (w, runs, "oracle")
        }
    };
    let elapsed = t0.elapsed();
    let mut records: Vec<_> = runs.iter().map(|r| RunRecord::new(r, &w)).collect();
    records.sort_by_key(|r| (r.start, r.period));
    Ok(RunReport {
        pi: pi.to_string(),
        word_length: w.len(),
        method: label,
        runs: records,
        elapsed,
    })
}

fn corpus_of(c: &CorpusArgs) -> Result<Vec<DefiningSequence>> {
    match (&c.pi, c.random) {
        (Some(text), _) => Ok(vec![parse(text)?]),
        (None, Some(n)) => {
            if c.max_p < 2 {
                return Err(Error::InvalidPair {
                    index: 1,
                    p: c.max_p,
                    p_prime: c.max_p,
                });
            }
            if c.max_len < 2 {
                return Err(Error::OutOfRange {
                    position: c.max_len,
                    max: u64::MAX,
                });
            }
            Ok(corpus::random(n, c.max_p, c.seed, c.max_len))
        }
        (None, None) => Err(Error::EmptySequence),
    }
}

fn print_rows(o: &mut impl Write, rows: &[VerifyRow], format: Format) {
    match format {
        Format::Jsonl => {
            for r in rows {
                out!(o, "{}", serde_json::to_string(r).expect("plain record"));
            }
        }
        Format::Text => {
            out!(o, "pi\tlength\truns\truns_match\tindex\tindex_match\teta_match\toccurrences\trecurrence");
            for r in rows {
                out!(
                    o,
                    "{}\t{}\t{}\t{}\t{}/{}\t{}\t{}\t{}/{}\t{}",
                    r.pi,
                    r.word_length,
                    r.runs,
                    r.run_set_match,
                    r.index_formula,
                    r.index_oracle,
                    r.index_match,
                    r.eta_length_match && r.eta_letters_match,
                    r.occurrence_count,
                    r.runs,
                    r.count_reconciliation
                );
                for d in &r.details {
                    out!(o, "#\t{d}");
                }
            }
        }
    }
}
