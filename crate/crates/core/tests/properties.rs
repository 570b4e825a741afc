use proptest::prelude::*;

use sturmian::characterize::{
    enumerate_runs, original_runs, predicted_order, reflect_once, reflect_to_top, reflection_path,
    run_count, visit_runs, Form,
};
use sturmian::oracle::{check_run, find_runs, fractional_index, integer_index, normalize, primitive_root};
use sturmian::words::{
    apply_morphism, block_decompose, circular_shift, generate, generate_levels, image_len,
    inverse_morphism, is_balanced, Letter,
};
use sturmian::{DefiningSequence, Guard, ParamPair, Word};

fn letters(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..max)
        .prop_map(|v| Word::from_letters(v.into_iter().map(|b| if b { Letter::B } else { Letter::A }).collect()))
}

fn pair() -> impl Strategy<Value = ParamPair> {
    pair_up_to(6)
}

fn pair_up_to(max: usize) -> impl Strategy<Value = ParamPair> {
    (1usize..max, prop::bool::ANY).prop_map(|(lo, flip)| {
        if flip {
            ParamPair::new(lo + 1, lo).unwrap()
        } else {
            ParamPair::new(lo, lo + 1).unwrap()
        }
    })
}

/// Sequences whose top level stays below `cap` letters.
fn sequence(cap: u64) -> impl Strategy<Value = DefiningSequence> {
    prop::collection::vec(prop_oneof![3 => pair_up_to(3), 1 => pair()], 1..12).prop_map(move |mut v| {
        while v.len() > 1 && DefiningSequence::new(v.clone()).unwrap().word_len() > cap {
            v.pop();
        }
        DefiningSequence::new(v).unwrap()
    })
}

fn word_of(pi: &DefiningSequence) -> Word {
    generate(pi, &Guard::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn length_law(w in letters(60), p in pair()) {
        prop_assert_eq!(apply_morphism(p, &w).len() as u64, image_len(p, &w));
        let na = w.count(Letter::A) as u64;
        let nb = w.count(Letter::B) as u64;
        prop_assert_eq!(image_len(p, &w), (p.p() as u64 + 1) * na + (p.p_prime() as u64 + 1) * nb);
    }

    #[test]
    fn round_trip(w in letters(60), p in pair()) {
        prop_assert_eq!(inverse_morphism(p, &apply_morphism(p, &w)).unwrap(), w);
    }

    #[test]
    fn shift_inverse(w in letters(40), i in 1usize..40) {
        prop_assume!(w.len() >= 2 && i < w.len());
        let s = circular_shift(&w, i).unwrap();
        prop_assert_eq!(circular_shift(&s, w.len() - i).unwrap(), w);
    }

    #[test]
    fn levels_grow_and_stay_balanced(pi in sequence(600)) {
        let levels = generate_levels(&pi, &Guard::default()).unwrap();
        for pair in levels.windows(2) {
            prop_assert!(pair[1].len() >= 2 * pair[0].len());
        }
        prop_assert!(is_balanced(levels.last().unwrap()));
    }

    #[test]
    fn decomposition_reassembles(pi in sequence(400), a in 0usize..400, b in 0usize..400) {
        let w = word_of(&pi);
        let (i, j) = (a.min(b) % w.len() + 1, a.max(b) % w.len() + 1);
        let (i, j) = (i.min(j), i.max(j));
        let f = w.factor(i, j).unwrap();
        let d = block_decompose(pi.pair(pi.len()), &f).unwrap();
        prop_assert_eq!(d.reassemble(), f);
    }

    #[test]
    fn oracle_runs_are_runs(w in letters(80)) {
        let runs = find_runs(&w);
        for (x, r) in runs.iter().enumerate() {
            prop_assert!(check_run(&w, r).is_ok());
            let t = normalize(r, &w);
            prop_assert_eq!(t.g.repeat(t.k).concat(&t.e), w.factor(r.start, r.end).unwrap());
            prop_assert!(t.e.len() < t.g.len() && t.e.is_prefix_of(&t.g));
            prop_assert_eq!(primitive_root(&t.g).1, 1);
            for s in &runs[x + 1..] {
                let nested = s.period == r.period && s.start >= r.start && s.end <= r.end;
                prop_assert!(!nested);
            }
        }
        if !runs.is_empty() {
            prop_assert_eq!(integer_index(&w), fractional_index(&w).floor().to_integer());
        }
    }

    #[test]
    fn morphism_commutes_with_primitive_roots(g in letters(14), k in 1usize..6, p in pair()) {
        prop_assume!(!g.is_empty() && primitive_root(&g).1 == 1);
        let img = apply_morphism(p, &g.repeat(k));
        prop_assert_eq!(primitive_root(&img), (apply_morphism(p, &g), k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn enumeration_matches_oracle(pi in sequence(3000)) {
        let w = word_of(&pi);
        let runs = enumerate_runs(&pi, &Guard::default()).unwrap();
        prop_assert_eq!(&runs, &find_runs(&w));
        let mut visited = 0u64;
        visit_runs(&pi, &Guard::default(), |_| visited += 1).unwrap();
        prop_assert_eq!(visited, run_count(&pi));
    }

    #[test]
    fn reflection_lands_on_a_run(pi in sequence(1500)) {
        prop_assume!(pi.len() >= 2);
        let levels = generate_levels(&pi, &Guard::default()).unwrap();
        for i in 1..pi.len() {
            let (cur, next) = (&levels[i], &levels[i + 1]);
            let next_runs = find_runs(next);
            for r in find_runs(cur) {
                let up = reflect_once(cur, &r, pi.pair(i + 1)).unwrap();
                prop_assert!(next_runs.binary_search(&up).is_ok(), "{:?} -> {:?}", r, up);
                if r.start > 1 && r.end < cur.len() {
                    prop_assert_eq!(up.order(), predicted_order(&normalize(&r, cur)));
                }
            }
        }
    }

    #[test]
    fn originals_follow_their_templates(pi in sequence(1500)) {
        let levels = generate_levels(&pi, &Guard::default()).unwrap();
        for i in 1..=pi.len() {
            let pair = pi.pair(i);
            let prev = &levels[i - 1];
            for o in original_runs(&pi, i, &Guard::default()).unwrap() {
                if o.k > 2 {
                    prop_assert_eq!(o.g.to_string(), "a");
                }
                if o.form == Form::Gap {
                    prop_assert!(o.e2.is_empty() && o.k >= 2);
                    continue;
                }
                prop_assert_eq!(o.k, 2);
                // the square lies in the image of the letters around the triggering b
                let t = o.anchor;
                let lo = prev.letters()[..t - 1].iter().rposition(|&c| c == Letter::B).map_or(1, |x| x + 1);
                let hi = prev.letters()[t..].iter().position(|&c| c == Letter::B).map_or(prev.len(), |x| t + x + 1);
                let window = apply_morphism(pair, &prev.factor(lo, hi).unwrap()).to_string();
                let square = o.g.repeat(2).to_string();
                prop_assert!(window.contains(&square), "{} not in {}", square, window);
            }
        }
    }

    #[test]
    fn reflected_runs_spell_the_factor(pi in sequence(1500)) {
        let top = word_of(&pi);
        for i in 1..=pi.len() {
            for o in original_runs(&pi, i, &Guard::default()).unwrap() {
                let r = reflect_to_top(&o, &pi);
                prop_assert_eq!(r.word(), top.factor(r.run.start, r.run.end).unwrap());
                let orders: Vec<_> = reflection_path(&o, &pi).iter().map(|r| r.order()).collect();
                let gains: usize = orders.windows(2).map(|w| w[1] - w[0]).sum();
                prop_assert!(orders.windows(2).all(|w| w[1] >= w[0]));
                prop_assert!(gains <= if o.form == Form::Gap { 2 } else { 1 }, "{:?} {:?}", o.form, orders);
            }
        }
    }
}
