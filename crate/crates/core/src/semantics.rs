//! Truth-table semantics and the constant-substitution construction for
//! extracting a subformula of a diversified formula.
//!
//! Tables are evaluated 64 valuations at a time: within a block the first six
//! letters follow the usual alternating bit patterns, the remaining letters
//! are constant per block.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::formula::{Formula, Path};

/// Default cap on the number of distinct letters a truth table may range over.
pub const DEFAULT_LETTER_CAP: usize = 24;

pub type Valuation = BTreeMap<String, bool>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constant {
    Top,
    Bot,
}

impl Constant {
    pub fn to_formula(self) -> Formula {
        match self {
            Constant::Top => Formula::Top,
            Constant::Bot => Formula::Bot,
        }
    }
}

impl std::fmt::Display for Constant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Constant::Top => "T",
            Constant::Bot => "F",
        })
    }
}

/// Letters mapped to `T` or `F`.
pub type ConstantAssignment = BTreeMap<String, Constant>;

pub fn eval(f: &Formula, v: &Valuation) -> Result<bool> {
    Ok(match f {
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Letter(p) => *v.get(p).ok_or_else(|| Error::MissingLetter(p.clone()))?,
        Formula::Not(a) => !eval(a, v)?,
        Formula::And(a, b) => eval(a, v)? && eval(b, v)?,
        Formula::Or(a, b) => eval(a, v)? || eval(b, v)?,
    })
}

const PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

enum Node {
    Const(bool),
    Var(usize),
    Not(Box<Node>),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
}

impl Node {
    fn compile(f: &Formula, letters: &[String]) -> Node {
        match f {
            Formula::Top => Node::Const(true),
            Formula::Bot => Node::Const(false),
            Formula::Letter(p) => Node::Var(letters.binary_search(p).expect("letter indexed")),
            Formula::Not(a) => Node::Not(Box::new(Node::compile(a, letters))),
            Formula::And(a, b) => Node::And(
                Box::new(Node::compile(a, letters)),
                Box::new(Node::compile(b, letters)),
            ),
            Formula::Or(a, b) => Node::Or(
                Box::new(Node::compile(a, letters)),
                Box::new(Node::compile(b, letters)),
            ),
        }
    }

    fn eval(&self, block: u64) -> u64 {
        match self {
            Node::Const(true) => !0,
            Node::Const(false) => 0,
            Node::Var(i) if *i < 6 => PATTERNS[*i],
            Node::Var(i) => {
                if block >> (i - 6) & 1 == 1 {
                    !0
                } else {
                    0
                }
            }
            Node::Not(a) => !a.eval(block),
            Node::And(a, b) => a.eval(block) & b.eval(block),
            Node::Or(a, b) => a.eval(block) | b.eval(block),
        }
    }
}

fn valid_mask(letter_count: usize) -> u64 {
    if letter_count >= 6 {
        !0
    } else {
        (1u64 << (1u32 << letter_count)) - 1
    }
}

/// True iff `f` evaluates to true under every valuation.
pub fn is_tautology(f: &Formula) -> Result<bool> {
    is_tautology_capped(f, DEFAULT_LETTER_CAP)
}

pub fn is_tautology_capped(f: &Formula, cap: usize) -> Result<bool> {
    let letters: Vec<String> = f.letters().into_iter().collect();
    if letters.len() > cap {
        return Err(Error::LetterCap {
            found: letters.len(),
            cap,
        });
    }
    let node = Node::compile(f, &letters);
    let mask = valid_mask(letters.len());
    let blocks = 1u64 << letters.len().saturating_sub(6);
    Ok((0..blocks).all(|block| node.eval(block) & mask == mask))
}

pub fn are_equivalent(a: &Formula, b: &Formula) -> Result<bool> {
    are_equivalent_capped(a, b, DEFAULT_LETTER_CAP)
}

pub fn are_equivalent_capped(a: &Formula, b: &Formula, cap: usize) -> Result<bool> {
    is_tautology_capped(&Formula::iff(a, b), cap)
}

/// True iff `a -> b` is a tautology.
pub fn entails(a: &Formula, b: &Formula) -> Result<bool> {
    is_tautology(&Formula::implies(a, b))
}

/// Constants for every letter outside the subformula at `pos`, chosen along
/// the root-to-subformula path: siblings under a conjunction get `T`, siblings
/// under a disjunction get `F`. Substituting them into `a` yields a formula
/// equivalent to the subformula; this is checked before returning.
pub fn lemma1_assignment(a: &Formula, pos: &Path) -> Result<ConstantAssignment> {
    a.require_and_or()?;
    if let Some(p) = a.repeated_letter() {
        return Err(Error::NotDiversified(p));
    }
    let sub = a
        .subformula(pos)
        .ok_or_else(|| Error::InvalidPath(pos.to_string()))?;

    let mut assignment = ConstantAssignment::new();
    let mut cur = a;
    for &step in &pos.0 {
        let (op, left, right) = cur.as_binary().expect("path checked above");
        let (next, sibling) = if step == 0 { (left, right) } else { (right, left) };
        let value = match op {
            crate::formula::BinOp::And => Constant::Top,
            crate::formula::BinOp::Or => Constant::Bot,
        };
        for p in sibling.letters() {
            assignment.insert(p, value);
        }
        cur = next;
    }

    let map = assignment
        .iter()
        .map(|(p, c)| (p.clone(), c.to_formula()))
        .collect();
    if !are_equivalent(&a.substitute_all(&map), sub)? {
        return Err(Error::Verification(format!(
            "constant assignment does not isolate {sub} in {a}"
        )));
    }
    Ok(assignment)
}
