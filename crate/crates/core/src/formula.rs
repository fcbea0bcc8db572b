//! Propositional formulas over `T`, `F`, `~`, `&`, `|` and letters.
//!
//! A [`Formula`] is a plain binary tree. Sublanguages (no negation, no
//! constants, negation only on letters) are predicates over this one type
//! rather than separate types, so every operation accepts every formula and
//! rejects out-of-language input with an error where it matters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod parse;
mod print;

pub use parse::{parse, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Top,
    Bot,
    Letter(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

/// Binary connective selector, used where code is symmetric in `&` and `|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinOp {
    And,
    Or,
}

impl BinOp {
    pub fn dual(self) -> Self {
        match self {
            BinOp::And => BinOp::Or,
            BinOp::Or => BinOp::And,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Positive,
    Negative,
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Positive => "+",
            Polarity::Negative => "-",
        })
    }
}

/// A letter occurrence, numbered left to right from 0.
///
/// `polarity` is filled only for negation-reduced formulas.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub index: usize,
    pub letter: String,
    pub polarity: Option<Polarity>,
}

/// Which end of an arrow an occurrence belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Source,
    Target,
}

/// An occurrence position tagged with its side. Ordered source-first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccId {
    pub side: Side,
    pub index: usize,
}

impl OccId {
    pub fn source(index: usize) -> Self {
        OccId { side: Side::Source, index }
    }

    pub fn target(index: usize) -> Self {
        OccId { side: Side::Target, index }
    }

    /// Position in the ordinal `|A| + |B|`, targets offset by `source_len`.
    pub fn global(self, source_len: usize) -> usize {
        match self.side {
            Side::Source => self.index,
            Side::Target => source_len + self.index,
        }
    }
}

impl fmt::Display for OccId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Source => write!(f, "s{}", self.index),
            Side::Target => write!(f, "t{}", self.index),
        }
    }
}

/// Occurrence counts per signed letter.
pub type SignedCounts = BTreeMap<(String, Polarity), usize>;

/// Child-index path from the root: `0` is the left (or only) child, `1` the right.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(pub Vec<u8>);

impl Path {
    pub fn root() -> Self {
        Path(Vec::new())
    }

    pub fn child(&self, i: u8) -> Self {
        let mut v = self.0.clone();
        v.push(i);
        Path(v)
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "root" {
            return Ok(Path::root());
        }
        s.split('.')
            .map(|part| match part {
                "0" => Ok(0),
                "1" => Ok(1),
                _ => Err(Error::InvalidPath(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Path)
    }
}

impl Formula {
    pub fn letter(name: impl Into<String>) -> Self {
        Formula::Letter(name.into())
    }

    pub fn neg(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn binary(op: BinOp, a: Formula, b: Formula) -> Self {
        match op {
            BinOp::And => Formula::and(a, b),
            BinOp::Or => Formula::or(a, b),
        }
    }

    /// Splits a binary node into its connective and children.
    pub fn as_binary(&self) -> Option<(BinOp, &Formula, &Formula)> {
        match self {
            Formula::And(a, b) => Some((BinOp::And, a, b)),
            Formula::Or(a, b) => Some((BinOp::Or, a, b)),
            _ => None,
        }
    }

    /// `|A|`: the number of letter occurrences.
    pub fn size(&self) -> usize {
        match self {
            Formula::Top | Formula::Bot => 0,
            Formula::Letter(_) => 1,
            Formula::Not(a) => a.size(),
            Formula::And(a, b) | Formula::Or(a, b) => a.size() + b.size(),
        }
    }

    /// Number of nodes in the tree.
    pub fn node_count(&self) -> usize {
        match self {
            Formula::Top | Formula::Bot | Formula::Letter(_) => 1,
            Formula::Not(a) => 1 + a.node_count(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }

    /// Letter names in left-to-right occurrence order, repeats included.
    pub fn leaf_letters(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Letter(p) => out.push(p),
            Formula::Not(a) => a.collect_leaves(out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn occurrences(&self) -> Vec<Occurrence> {
        let reduced = self.is_neg_reduced();
        let mut out = Vec::new();
        self.collect_occurrences(false, reduced, &mut out);
        out
    }

    fn collect_occurrences(&self, negated: bool, reduced: bool, out: &mut Vec<Occurrence>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Letter(p) => {
                let polarity = reduced.then_some(if negated {
                    Polarity::Negative
                } else {
                    Polarity::Positive
                });
                out.push(Occurrence {
                    index: out.len(),
                    letter: p.clone(),
                    polarity,
                });
            }
            Formula::Not(a) => a.collect_occurrences(true, reduced, out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_occurrences(negated, reduced, out);
                b.collect_occurrences(negated, reduced, out);
            }
        }
    }

    /// `let A`: the set of letters occurring in the formula.
    pub fn letters(&self) -> BTreeSet<String> {
        self.leaf_letters().into_iter().map(str::to_string).collect()
    }

    pub fn is_diversified(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.leaf_letters().into_iter().all(|p| seen.insert(p))
    }

    /// First letter that occurs twice, if any.
    pub fn repeated_letter(&self) -> Option<String> {
        let mut seen = BTreeSet::new();
        self.leaf_letters()
            .into_iter()
            .find(|p| !seen.insert(*p))
            .map(str::to_string)
    }

    pub fn is_neg_reduced(&self) -> bool {
        match self {
            Formula::Top | Formula::Bot | Formula::Letter(_) => true,
            Formula::Not(a) => matches!(**a, Formula::Letter(_)),
            Formula::And(a, b) | Formula::Or(a, b) => a.is_neg_reduced() && b.is_neg_reduced(),
        }
    }

    pub fn has_negation(&self) -> bool {
        match self {
            Formula::Top | Formula::Bot | Formula::Letter(_) => false,
            Formula::Not(_) => true,
            Formula::And(a, b) | Formula::Or(a, b) => a.has_negation() || b.has_negation(),
        }
    }

    pub fn has_constants(&self) -> bool {
        match self {
            Formula::Top | Formula::Bot => true,
            Formula::Letter(_) => false,
            Formula::Not(a) => a.has_constants(),
            Formula::And(a, b) | Formula::Or(a, b) => a.has_constants() || b.has_constants(),
        }
    }

    /// Member of the language with only `&` and `|`.
    pub fn in_and_or(&self) -> bool {
        !self.has_negation() && !self.has_constants()
    }

    /// Member of the language with `~`, `&`, `|` and no constants.
    pub fn in_neg_and_or(&self) -> bool {
        !self.has_constants()
    }

    /// Member of the language with `T`, `F`, `&`, `|` and no negation.
    pub fn in_const_and_or(&self) -> bool {
        !self.has_negation()
    }

    pub(crate) fn require_and_or(&self) -> Result<()> {
        if self.in_and_or() {
            Ok(())
        } else {
            Err(Error::WrongLanguage {
                language: "the {&, |} language",
                detail: self.to_string(),
            })
        }
    }

    pub(crate) fn require_neg_and_or(&self) -> Result<()> {
        if self.in_neg_and_or() {
            Ok(())
        } else {
            Err(Error::WrongLanguage {
                language: "the {~, &, |} language (constants are not allowed)",
                detail: self.to_string(),
            })
        }
    }

    pub(crate) fn require_const_and_or(&self) -> Result<()> {
        if self.in_const_and_or() {
            Ok(())
        } else {
            Err(Error::WrongLanguage {
                language: "the {T, F, &, |} language (negation is not allowed)",
                detail: self.to_string(),
            })
        }
    }

    /// Counts per (letter, polarity). Constants contribute nothing.
    pub fn signed_counts(&self) -> Result<SignedCounts> {
        if !self.is_neg_reduced() {
            return Err(Error::NotNegReduced);
        }
        let mut counts = SignedCounts::new();
        for occ in self.occurrences() {
            let polarity = occ.polarity.expect("reduced formula carries polarity");
            *counts.entry((occ.letter, polarity)).or_default() += 1;
        }
        Ok(counts)
    }

    /// `A^p_B`: replaces every occurrence of `p` by `b`.
    pub fn substitute(&self, p: &str, b: &Formula) -> Formula {
        self.map_letters(&mut |q| if q == p { b.clone() } else { Formula::letter(q) })
    }

    /// Simultaneous substitution; letters outside the map are untouched.
    pub fn substitute_all(&self, map: &BTreeMap<String, Formula>) -> Formula {
        self.map_letters(&mut |q| map.get(q).cloned().unwrap_or_else(|| Formula::letter(q)))
    }

    /// Letter-for-letter renaming.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> Formula {
        self.map_letters(&mut |q| Formula::letter(map.get(q).map_or(q, String::as_str)))
    }

    pub(crate) fn map_letters(&self, leaf: &mut impl FnMut(&str) -> Formula) -> Formula {
        match self {
            Formula::Top => Formula::Top,
            Formula::Bot => Formula::Bot,
            Formula::Letter(p) => leaf(p),
            Formula::Not(a) => Formula::neg(a.map_letters(leaf)),
            Formula::And(a, b) => Formula::and(a.map_letters(leaf), b.map_letters(leaf)),
            Formula::Or(a, b) => Formula::or(a.map_letters(leaf), b.map_letters(leaf)),
        }
    }

    /// Replaces the letter at each occurrence index, in order.
    pub(crate) fn relabel_occurrences(&self, mut name: impl FnMut(usize, &str) -> String) -> Formula {
        let mut next = 0;
        self.map_letters(&mut |q| {
            let f = Formula::letter(name(next, q));
            next += 1;
            f
        })
    }

    pub fn subformula(&self, path: &Path) -> Option<&Formula> {
        let mut cur = self;
        for &step in &path.0 {
            cur = match (cur, step) {
                (Formula::Not(a), 0) => a,
                (Formula::And(a, _) | Formula::Or(a, _), 0) => a,
                (Formula::And(_, b) | Formula::Or(_, b), 1) => b,
                _ => return None,
            };
        }
        Some(cur)
    }

    pub fn subformula_mut(&mut self, path: &Path) -> Option<&mut Formula> {
        let mut cur = self;
        for &step in &path.0 {
            cur = match (cur, step) {
                (Formula::Not(a), 0) => a,
                (Formula::And(a, _) | Formula::Or(a, _), 0) => a,
                (Formula::And(_, b) | Formula::Or(_, b), 1) => b,
                _ => return None,
            };
        }
        Some(cur)
    }

    /// All subformula positions, pre-order.
    pub fn paths(&self) -> Vec<Path> {
        let mut out = Vec::new();
        self.collect_paths(Path::root(), &mut out);
        out
    }

    fn collect_paths(&self, here: Path, out: &mut Vec<Path>) {
        match self {
            Formula::Not(a) => {
                out.push(here.clone());
                a.collect_paths(here.child(0), out);
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                out.push(here.clone());
                a.collect_paths(here.child(0), out);
                b.collect_paths(here.child(1), out);
            }
            _ => out.push(here),
        }
    }

    /// Path of the first (pre-order) subformula equal to `sub`.
    pub fn find_subformula(&self, sub: &Formula) -> Option<Path> {
        self.paths()
            .into_iter()
            .find(|p| self.subformula(p) == Some(sub))
    }

    /// Path to the leaf of occurrence `index`.
    pub fn occurrence_path(&self, index: usize) -> Option<Path> {
        fn go(f: &Formula, here: Path, index: &mut usize) -> Option<Path> {
            match f {
                Formula::Top | Formula::Bot => None,
                Formula::Letter(_) => {
                    if *index == 0 {
                        Some(here)
                    } else {
                        *index -= 1;
                        None
                    }
                }
                Formula::Not(a) => go(a, here.child(0), index),
                Formula::And(a, b) | Formula::Or(a, b) => {
                    go(a, here.child(0), index).or_else(|| go(b, here.child(1), index))
                }
            }
        }
        let mut remaining = index;
        go(self, Path::root(), &mut remaining)
    }

    pub fn implies(a: &Formula, b: &Formula) -> Formula {
        Formula::or(Formula::neg(a.clone()), b.clone())
    }

    pub fn iff(a: &Formula, b: &Formula) -> Formula {
        Formula::and(Formula::implies(a, b), Formula::implies(b, a))
    }
}

/// The letter-for-letter substitution `s` with `s(a1) = a`, when one exists.
///
/// Keys are letters of `a1`, values letters of `a`.
pub fn uniform_instance(a: &Formula, a1: &Formula) -> Option<BTreeMap<String, String>> {
    fn go(a: &Formula, a1: &Formula, map: &mut BTreeMap<String, String>) -> bool {
        match (a, a1) {
            (Formula::Top, Formula::Top) | (Formula::Bot, Formula::Bot) => true,
            (Formula::Letter(p), Formula::Letter(q)) => match map.get(q) {
                Some(image) => image == p,
                None => {
                    map.insert(q.clone(), p.clone());
                    true
                }
            },
            (Formula::Not(x), Formula::Not(y)) => go(x, y, map),
            (Formula::And(x1, x2), Formula::And(y1, y2))
            | (Formula::Or(x1, x2), Formula::Or(y1, y2)) => go(x1, y1, map) && go(x2, y2, map),
            _ => false,
        }
    }
    let mut map = BTreeMap::new();
    go(a, a1, &mut map).then_some(map)
}

/// Joint version: `a` and `b` are uniform instances of `a1` and `b1` under one substitution.
pub fn uniform_instance_pair(
    a: &Formula,
    b: &Formula,
    a1: &Formula,
    b1: &Formula,
) -> Option<BTreeMap<String, String>> {
    let joint = Formula::and(a.clone(), b.clone());
    let joint1 = Formula::and(a1.clone(), b1.clone());
    uniform_instance(&joint, &joint1)
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        parse(s)
    }
}
