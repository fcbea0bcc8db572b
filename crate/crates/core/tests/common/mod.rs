//! Generators and brute-force checks shared by the integration tests.
//!
//! The truth-table routines here are deliberately naive (one valuation at a
//! time over a `BTreeMap`) so they stay independent of the bit-parallel
//! evaluator in the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use propiso::canon::{apply_step, Axiom, Direction, Step};
use propiso::formula::{BinOp, Path};
use propiso::Formula;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn f(s: &str) -> Formula {
    propiso::parse(s).unwrap()
}

// ---------------------------------------------------------------- truth tables

fn letters_of(f: &Formula, out: &mut BTreeSet<String>) {
    match f {
        Formula::Top | Formula::Bot => {}
        Formula::Letter(p) => {
            out.insert(p.clone());
        }
        Formula::Not(a) => letters_of(a, out),
        Formula::And(a, b) | Formula::Or(a, b) => {
            letters_of(a, out);
            letters_of(b, out);
        }
    }
}

pub fn naive_eval(f: &Formula, v: &BTreeMap<String, bool>) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Letter(p) => v[p],
        Formula::Not(a) => !naive_eval(a, v),
        Formula::And(a, b) => naive_eval(a, v) && naive_eval(b, v),
        Formula::Or(a, b) => naive_eval(a, v) || naive_eval(b, v),
    }
}

/// Truth table of `f` over `letters` (which must include all of its letters).
pub fn naive_table(f: &Formula, letters: &[String]) -> Vec<bool> {
    (0..1u32 << letters.len())
        .map(|bits| {
            let v = letters
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), bits >> i & 1 == 1))
                .collect();
            naive_eval(f, &v)
        })
        .collect()
}

fn joint_letters(fs: &[&Formula]) -> Vec<String> {
    let mut set = BTreeSet::new();
    for f in fs {
        letters_of(f, &mut set);
    }
    set.into_iter().collect()
}

pub fn naive_equivalent(a: &Formula, b: &Formula) -> bool {
    let ls = joint_letters(&[a, b]);
    naive_table(a, &ls) == naive_table(b, &ls)
}

pub fn naive_tautology(a: &Formula) -> bool {
    let ls = joint_letters(&[a]);
    naive_table(a, &ls).into_iter().all(|x| x)
}

pub fn naive_entails(a: &Formula, b: &Formula) -> bool {
    let ls = joint_letters(&[a, b]);
    naive_table(a, &ls)
        .into_iter()
        .zip(naive_table(b, &ls))
        .all(|(x, y)| !x || y)
}

// ---------------------------------------------------------------- enumeration

/// Binary tree shapes with `n` leaves; `None` is a leaf.
#[derive(Clone, Debug)]
pub enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn leaves(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(a, b) => a.leaves() + b.leaves(),
        }
    }

    pub fn nodes(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Node(a, b) => 1 + a.nodes() + b.nodes(),
        }
    }

    /// Fills the shape: internal nodes take operators from `ops` in
    /// pre-order, leaves take `leaves` left to right.
    pub fn fill(&self, ops: &[BinOp], leaves: &[Formula]) -> Formula {
        fn go(s: &Shape, ops: &mut std::slice::Iter<BinOp>, leaves: &mut std::slice::Iter<Formula>) -> Formula {
            match s {
                Shape::Leaf => leaves.next().unwrap().clone(),
                Shape::Node(a, b) => {
                    let op = *ops.next().unwrap();
                    let l = go(a, ops, leaves);
                    let r = go(b, ops, leaves);
                    Formula::binary(op, l, r)
                }
            }
        }
        go(self, &mut ops.iter(), &mut leaves.iter())
    }
}

pub fn shapes(n: usize) -> Vec<Shape> {
    if n == 1 {
        return vec![Shape::Leaf];
    }
    let mut out = Vec::new();
    for k in 1..n {
        for l in shapes(k) {
            for r in shapes(n - k) {
                out.push(Shape::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

pub fn op_sequences(n: usize) -> Vec<Vec<BinOp>> {
    (0..1u32 << n)
        .map(|bits| {
            (0..n)
                .map(|i| if bits >> i & 1 == 1 { BinOp::Or } else { BinOp::And })
                .collect()
        })
        .collect()
}

/// All sequences of length `n` over `alphabet`.
pub fn words<T: Clone>(alphabet: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |x| {
                    let mut w = w.clone();
                    w.push(x.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// Injective sequences of length `n` drawn from `alphabet`.
pub fn arrangements<T: Clone>(alphabet: &[T], n: usize) -> Vec<Vec<T>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, x) in alphabet.iter().enumerate() {
        let mut rest = alphabet.to_vec();
        rest.remove(i);
        for mut tail in arrangements(&rest, n - 1) {
            tail.insert(0, x.clone());
            out.push(tail);
        }
    }
    out
}

/// Every formula with `n` leaves over the given leaf alphabet.
pub fn formulas_with_leaves(n: usize, leaves: &[Vec<Formula>]) -> Vec<Formula> {
    let mut out = Vec::new();
    for s in shapes(n) {
        for ops in op_sequences(n - 1) {
            for ls in leaves {
                out.push(s.fill(&ops, ls));
            }
        }
    }
    out
}

pub fn letters(names: &[&str]) -> Vec<Formula> {
    names.iter().map(|p| Formula::letter(*p)).collect()
}

/// Negation-reduced literals over `names`.
pub fn literals(names: &[&str]) -> Vec<Formula> {
    names
        .iter()
        .flat_map(|p| [Formula::letter(*p), Formula::neg(Formula::letter(*p))])
        .collect()
}

/// Leaf labelings up to renaming of letters: each leaf is `T`, `F`, or a
/// letter, with letters introduced in order of first appearance.
pub fn labelings_up_to_renaming(n: usize, with_constants: bool) -> Vec<Vec<Formula>> {
    fn go(n: usize, with_constants: bool, used: usize, acc: &mut Vec<Formula>, out: &mut Vec<Vec<Formula>>) {
        if acc.len() == n {
            out.push(acc.clone());
            return;
        }
        // an existing letter, or the next fresh one
        let mut choices: Vec<(Formula, usize)> = (0..=used)
            .map(|i| (Formula::letter(format!("x{i}")), used + usize::from(i == used)))
            .collect();
        if with_constants {
            choices.push((Formula::Top, used));
            choices.push((Formula::Bot, used));
        }
        for (leaf, next_used) in choices {
            acc.push(leaf);
            go(n, with_constants, next_used, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, with_constants, 0, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------- random formulas

#[derive(Clone, Copy, Debug)]
pub struct Gen<'a> {
    pub letters: &'a [&'a str],
    /// Probability that a leaf is a constant.
    pub constants: f64,
    /// Probability of wrapping a node in a negation.
    pub negations: f64,
}

impl Gen<'_> {
    /// A formula whose leaf count is drawn from `leaves`.
    pub fn sized(&self, rng: &mut impl Rng, leaves: std::ops::RangeInclusive<usize>) -> Formula {
        let n = rng.gen_range(leaves);
        self.formula(rng, n)
    }

    pub fn formula(&self, rng: &mut impl Rng, leaves: usize) -> Formula {
        let core = if leaves == 1 {
            if rng.gen_bool(self.constants) {
                if rng.gen() {
                    Formula::Top
                } else {
                    Formula::Bot
                }
            } else {
                Formula::letter(*self.letters.choose(rng).unwrap())
            }
        } else {
            let k = rng.gen_range(1..leaves);
            let (a, b) = (self.formula(rng, k), self.formula(rng, leaves - k));
            if rng.gen() {
                Formula::and(a, b)
            } else {
                Formula::or(a, b)
            }
        };
        let mut out = core;
        while rng.gen_bool(self.negations) {
            out = Formula::neg(out);
        }
        out
    }
}

/// A random formula whose letters are pairwise distinct.
pub fn diversified(rng: &mut impl Rng, leaves: std::ops::RangeInclusive<usize>, negations: f64) -> Formula {
    let leaves = rng.gen_range(leaves);
    let pool = ["p", "q", "r", "s", "t", "u", "v", "w"];
    let mut names: Vec<&str> = pool.to_vec();
    names.shuffle(rng);
    let g = Gen {
        letters: &["x"],
        constants: 0.0,
        negations,
    };
    let mut i = 0;
    g.formula(rng, leaves).relabel(&mut |_| {
        i += 1;
        names[i - 1].to_string()
    })
}

trait Relabel {
    fn relabel(&self, next: &mut dyn FnMut(&str) -> String) -> Formula;
}

impl Relabel for Formula {
    fn relabel(&self, next: &mut dyn FnMut(&str) -> String) -> Formula {
        match self {
            Formula::Letter(p) => Formula::letter(next(p)),
            Formula::Not(a) => Formula::neg(a.relabel(next)),
            Formula::And(a, b) => {
                let l = a.relabel(next);
                Formula::and(l, b.relabel(next))
            }
            Formula::Or(a, b) => {
                let l = a.relabel(next);
                Formula::or(l, b.relabel(next))
            }
            c => c.clone(),
        }
    }
}

pub const REWRITE_AXIOMS: [Axiom; 7] = [
    Axiom::AssocAnd,
    Axiom::AssocOr,
    Axiom::CommAnd,
    Axiom::CommOr,
    Axiom::DNeg,
    Axiom::DeMorganAnd,
    Axiom::DeMorganOr,
];

/// Applies `steps` random applicable axiom instances.
pub fn shuffle(rng: &mut impl Rng, f: &Formula, steps: usize, axioms: &[Axiom]) -> Formula {
    let mut cur = f.clone();
    for _ in 0..steps {
        let mut options = Vec::new();
        for path in cur.paths() {
            for &axiom in axioms {
                for direction in [Direction::LeftToRight, Direction::RightToLeft] {
                    let step = Step::new(axiom, path.clone(), direction);
                    if let Some(g) = apply_step(&cur, &step) {
                        options.push(g);
                    }
                }
            }
        }
        if let Some(g) = options.choose(rng) {
            cur = g.clone();
        }
    }
    cur
}

/// Paths of the subformulas of `f`, pre-order.
pub fn paths(f: &Formula) -> Vec<Path> {
    f.paths()
}
