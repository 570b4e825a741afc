//! Times run enumeration on [(2,1)] x n.

use std::time::Instant;

use sturmian::characterize::visit_runs;
use sturmian::{DefiningSequence, Guard, ParamPair};

fn main() {
    let pair = ParamPair::new(2, 1).unwrap();
    let lo: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(14);
    let hi: usize = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(20);
    for n in lo..=hi {
        let pi = DefiningSequence::uniform(pair, n).unwrap();
        let t = Instant::now();
        let mut count = 0u64;
        let len = visit_runs(&pi, &Guard::unlimited(), |_| count += 1).unwrap();
        let dt = t.elapsed().as_secs_f64();
        println!("n={n} len={len} runs={count} secs={dt:.4} ns/letter={:.2}", dt * 1e9 / len as f64);
    }
}
