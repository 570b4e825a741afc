//! Reproducible sets of defining sequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::words::{DefiningSequence, ParamPair};

/// Every sequence over `pairs` with 1..=max_n levels and |S_n| <= max_len.
pub fn exhaustive(pairs: &[ParamPair], max_n: usize, max_len: u64) -> Vec<DefiningSequence> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<ParamPair>> = vec![Vec::new()];
    for _ in 0..max_n {
        let mut next = Vec::new();
        for prefix in &frontier {
            for &p in pairs {
                let mut v = prefix.clone();
                v.push(p);
                let pi = DefiningSequence::new(v.clone()).expect("non-empty");
                if pi.word_len() <= max_len {
                    out.push(pi);
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Sequences alternating x, y, x, y, ... for every ordered (x, y) from `pairs`,
/// every prefix with |S_n| <= max_len.
pub fn alternating(pairs: &[ParamPair], max_len: u64) -> Vec<DefiningSequence> {
    let mut out = Vec::new();
    for &x in pairs {
        for &y in pairs {
            let mut v = Vec::new();
            loop {
                v.push(if v.len() % 2 == 0 { x } else { y });
                let pi = DefiningSequence::new(v.clone()).expect("non-empty");
                if pi.word_len() > max_len {
                    break;
                }
                out.push(pi);
            }
        }
    }
    out
}

/// A uniformly drawn pair with max(p, p') <= max_p; orientation by fair coin.
pub fn random_pair(rng: &mut impl Rng, max_p: usize) -> ParamPair {
    let lo = rng.gen_range(1..max_p);
    let (p, q) = if rng.gen_bool(0.5) { (lo, lo + 1) } else { (lo + 1, lo) };
    ParamPair::new(p, q).expect("adjacent values form a valid pair")
}

/// `count` sequences, each extended with random pairs until the next pair
/// would push |S_n| past `max_len`. Requires max_p >= 2 and max_len >= 5.
pub fn random(count: usize, max_p: usize, seed: u64, max_len: u64) -> Vec<DefiningSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut v = Vec::new();
            loop {
                let p = random_pair(&mut rng, max_p);
                v.push(p);
                let pi = DefiningSequence::new(v.clone()).expect("non-empty");
                if pi.word_len() > max_len {
                    v.pop();
                    if !v.is_empty() {
                        break;
                    }
                }
            }
            DefiningSequence::new(v).expect("non-empty")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_sizes() {
        let pairs = ParamPair::small_pairs();
        assert_eq!(exhaustive(&pairs, 2, u64::MAX).len(), 6 + 36);
        assert!(exhaustive(&pairs, 4, 50).iter().all(|p| p.word_len() <= 50));
    }

    #[test]
    fn random_is_reproducible_and_capped() {
        let a = random(20, 3, 7, 2000);
        assert_eq!(a, random(20, 3, 7, 2000));
        for pi in &a {
            assert!(pi.word_len() <= 2000);
            assert!(pi.pairs().iter().all(|p| p.p().max(p.p_prime()) <= 3));
        }
    }
}
