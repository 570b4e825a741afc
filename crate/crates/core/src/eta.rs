//! Nested arithmetic expressions mirroring the block structure of a level.
//!
//! A level is a sum of terms: a magnitude `v` stands for a^v, the term `1`
//! for a single b, and a coefficient `(E)v` for v copies of the expression E.
//! Applying a pair (p, p') rewrites every magnitude v into `(p + 1)v` and
//! every `1` into `p' + 1`; coefficients keep their value and rewrite their
//! inner expression. Identical inner expressions are shared, so the
//! expression of level n has O(n^2) terms while its value is |S_n|.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::characterize::{interior_run_count, right_end_runs, LevelGaps};
use crate::error::{Error, Result};
use crate::words::{DefiningSequence, Letter, ParamPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// The exponent k of a base a^k b.
    Base,
    P,
    PPrime,
}

/// Where a magnitude came from: the pair of `level` and which of its two values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tag {
    pub level: usize,
    pub side: Side,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Base => f.write_str("k"),
            Side::P => write!(f, "p{}", self.level),
            Side::PPrime => write!(f, "p'{}", self.level),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Term {
    Mag { value: u64, tag: Tag },
    One,
    Coef { value: u64, tag: Tag, group: Arc<Group> },
}

#[derive(Debug)]
pub struct Group {
    terms: Vec<Term>,
    value: u64,
}

impl Group {
    fn new(terms: Vec<Term>) -> Result<Group> {
        let mut value = 0u64;
        for t in &terms {
            let v = match t {
                Term::Mag { value, .. } => *value,
                Term::One => 1,
                Term::Coef { value, group, .. } => value.checked_mul(group.value).ok_or(Error::Overflow)?,
            };
            value = value.checked_add(v).ok_or(Error::Overflow)?;
        }
        Ok(Group { terms, value })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn value(&self) -> u64 {
        self.value
    }
}

/// Expression of a^k b after applying a list of pairs.
#[derive(Clone, Debug)]
pub struct EtaExpr {
    root: Arc<Group>,
    base: usize,
    base_tag: Tag,
    first_level: usize,
    applied: Vec<ParamPair>,
}

type Memo = HashMap<*const Group, Arc<Group>>;

fn rewrite(g: &Arc<Group>, pair: ParamPair, level: usize, block: &Arc<Group>, memo: &mut Memo) -> Result<Arc<Group>> {
    if let Some(done) = memo.get(&Arc::as_ptr(g)) {
        return Ok(done.clone());
    }
    let mut terms = Vec::with_capacity(g.terms.len() + 1);
    for t in &g.terms {
        match t {
            Term::Mag { value, tag } => terms.push(Term::Coef {
                value: *value,
                tag: *tag,
                group: block.clone(),
            }),
            Term::One => {
                terms.push(Term::Mag {
                    value: pair.p_prime() as u64,
                    tag: Tag { level, side: Side::PPrime },
                });
                terms.push(Term::One);
            }
            Term::Coef { value, tag, group } => terms.push(Term::Coef {
                value: *value,
                tag: *tag,
                group: rewrite(group, pair, level, block, memo)?,
            }),
        }
    }
    let out = Arc::new(Group::new(terms)?);
    memo.insert(Arc::as_ptr(g), out.clone());
    Ok(out)
}

impl EtaExpr {
    /// a^k b with `pairs` applied, numbered from level 1.
    pub fn for_power(k: usize, pairs: &[ParamPair]) -> Result<EtaExpr> {
        EtaExpr::build(k, Tag { level: 0, side: Side::Base }, pairs, 1)
    }

    fn build(k: usize, base_tag: Tag, pairs: &[ParamPair], first_level: usize) -> Result<EtaExpr> {
        let mut root = Arc::new(Group::new(vec![
            Term::Mag { value: k as u64, tag: base_tag },
            Term::One,
        ])?);
        for (i, &pair) in pairs.iter().enumerate() {
            let level = first_level + i;
            let block = Arc::new(Group::new(vec![
                Term::Mag {
                    value: pair.p() as u64,
                    tag: Tag { level, side: Side::P },
                },
                Term::One,
            ])?);
            root = rewrite(&root, pair, level, &block, &mut Memo::new())?;
        }
        Ok(EtaExpr {
            root,
            base: k,
            base_tag,
            first_level,
            applied: pairs.to_vec(),
        })
    }

    pub fn root(&self) -> &Group {
        &self.root
    }

    pub fn value(&self) -> u64 {
        self.root.value
    }

    /// Every group reachable from the root, each shared group once.
    pub fn groups(&self) -> Vec<Arc<Group>> {
        let mut seen = HashMap::new();
        let mut stack = vec![self.root.clone()];
        let mut out = Vec::new();
        while let Some(g) = stack.pop() {
            if seen.insert(Arc::as_ptr(&g), ()).is_some() {
                continue;
            }
            for t in &g.terms {
                if let Term::Coef { group, .. } = t {
                    stack.push(group.clone());
                }
            }
            out.push(g);
        }
        out
    }

    /// Every group has exactly one top-level `1`.
    pub fn one_rule_holds(&self) -> bool {
        self.groups()
            .iter()
            .all(|g| g.terms.iter().filter(|t| matches!(t, Term::One)).count() == 1)
    }

    /// Letter at 1-based position `j` of the word the expression stands for.
    pub fn letter_at(&self, j: u64) -> Result<Letter> {
        if j == 0 || j > self.value() {
            return Err(Error::OutOfRange {
                position: j,
                max: self.value(),
            });
        }
        let mut g: &Group = &self.root;
        let mut j = j;
        'descend: loop {
            for t in &g.terms {
                match t {
                    Term::Mag { value, .. } => {
                        if j <= *value {
                            return Ok(Letter::A);
                        }
                        j -= value;
                    }
                    Term::One => {
                        if j == 1 {
                            return Ok(Letter::B);
                        }
                        j -= 1;
                    }
                    Term::Coef { value, group, .. } => {
                        let span = value * group.value;
                        if j <= span {
                            j = (j - 1) % group.value + 1;
                            g = group;
                            continue 'descend;
                        }
                        j -= span;
                    }
                }
            }
            unreachable!("position within the group value");
        }
    }

    /// How many times each tag occurs once the expression is fully expanded.
    fn tag_multiplicities(&self) -> HashMap<Tag, u64> {
        fn walk(g: &Arc<Group>, memo: &mut HashMap<*const Group, HashMap<Tag, u64>>) -> HashMap<Tag, u64> {
            if let Some(h) = memo.get(&Arc::as_ptr(g)) {
                return h.clone();
            }
            let mut h: HashMap<Tag, u64> = HashMap::new();
            for t in &g.terms {
                match t {
                    Term::Mag { tag, .. } => *h.entry(*tag).or_default() += 1,
                    Term::One => {}
                    Term::Coef { value, tag, group } => {
                        *h.entry(*tag).or_default() += 1;
                        for (k, v) in walk(group, memo) {
                            *h.entry(k).or_default() += value * v;
                        }
                    }
                }
            }
            memo.insert(Arc::as_ptr(g), h.clone());
            h
        }
        walk(&self.root, &mut HashMap::new())
    }

    /// Number of runs in the word, read off the expression.
    ///
    /// A term tagged with level i, expanded with multiplicity, is one a-gap of
    /// that level; gap inventories per level determine every run that does not
    /// reach the right end. Runs reaching the right end depend only on the
    /// last few terms of each level and are counted from the pairs.
    pub fn count_run_occurrences(&self) -> u64 {
        let mult = self.tag_multiplicities();
        let get = |t: Tag| mult.get(&t).copied().unwrap_or(0);
        let mut levels = vec![LevelGaps {
            p: self.base,
            p_prime: self.base + 1,
            n_p: get(self.base_tag),
            n_pp: 0,
        }];
        for (i, pr) in self.applied.iter().enumerate() {
            let level = self.first_level + i;
            levels.push(LevelGaps {
                p: pr.p(),
                p_prime: pr.p_prime(),
                n_p: get(Tag { level, side: Side::P }),
                n_pp: get(Tag { level, side: Side::PPrime }),
            });
        }
        interior_run_count(&levels) + right_end_runs(self.base, &self.applied)
    }

    /// Text with every magnitude replaced by its symbol.
    pub fn symbolic(&self) -> String {
        let mut s = String::new();
        write_group(&mut s, &self.root, true);
        s
    }
}

/// Expression of S_n: base a^{p_1} b, then pairs 2..=n.
pub fn build_eta(pi: &DefiningSequence) -> Result<EtaExpr> {
    EtaExpr::build(pi.pair(1).p(), Tag { level: 1, side: Side::P }, &pi.pairs()[1..], 2)
}

pub fn eval_eta(e: &EtaExpr) -> u64 {
    e.value()
}

pub fn letter_at(e: &EtaExpr, j: u64) -> Result<Letter> {
    e.letter_at(j)
}

pub fn count_run_occurrences(e: &EtaExpr) -> u64 {
    e.count_run_occurrences()
}

fn write_group(out: &mut String, g: &Group, symbolic: bool) {
    for (i, t) in g.terms.iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        match t {
            Term::Mag { value, tag } => {
                if symbolic {
                    out.push_str(&tag.to_string());
                } else {
                    out.push_str(&value.to_string());
                }
            }
            Term::One => out.push('1'),
            Term::Coef { value, tag, group } => {
                out.push('(');
                write_group(out, group, symbolic);
                out.push(')');
                if symbolic {
                    out.push_str(&tag.to_string());
                } else {
                    out.push_str(&value.to_string());
                }
            }
        }
    }
}

impl fmt::Display for EtaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_group(&mut s, &self.root, false);
        f.write_str(&s)
    }
}
