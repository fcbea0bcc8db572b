//! The equational systems over `&`/`|` (associativity, commutativity) and
//! `~`/`&`/`|` (plus double negation and De Morgan) as decision procedures.
//!
//! Theoremhood is decided by comparing AC-canonical forms of the negation
//! normal forms. Derivations are produced as replayable [`RewriteTrace`]s:
//! a formula's canonicalization trace followed by the inverted trace of the
//! other side.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{BinOp, Formula, Path};

/// Axiom schemes a rewrite step can instantiate.
///
/// `NegTop`/`NegBot` (`~T = F`, `~F = T`) go beyond the constant-free
/// system; they are only produced when reducing formulas that contain
/// constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    #[serde(rename = "assoc-and")]
    AssocAnd,
    #[serde(rename = "assoc-or")]
    AssocOr,
    #[serde(rename = "comm-and")]
    CommAnd,
    #[serde(rename = "comm-or")]
    CommOr,
    #[serde(rename = "dneg")]
    DNeg,
    #[serde(rename = "demorgan-and")]
    DeMorganAnd,
    #[serde(rename = "demorgan-or")]
    DeMorganOr,
    #[serde(rename = "neg-top")]
    NegTop,
    #[serde(rename = "neg-bot")]
    NegBot,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::AssocAnd,
        Axiom::AssocOr,
        Axiom::CommAnd,
        Axiom::CommOr,
        Axiom::DNeg,
        Axiom::DeMorganAnd,
        Axiom::DeMorganOr,
        Axiom::NegTop,
        Axiom::NegBot,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Axiom::AssocAnd => "assoc-and",
            Axiom::AssocOr => "assoc-or",
            Axiom::CommAnd => "comm-and",
            Axiom::CommOr => "comm-or",
            Axiom::DNeg => "dneg",
            Axiom::DeMorganAnd => "demorgan-and",
            Axiom::DeMorganOr => "demorgan-or",
            Axiom::NegTop => "neg-top",
            Axiom::NegBot => "neg-bot",
        }
    }

    fn assoc(op: BinOp) -> Self {
        match op {
            BinOp::And => Axiom::AssocAnd,
            BinOp::Or => Axiom::AssocOr,
        }
    }

    fn comm(op: BinOp) -> Self {
        match op {
            BinOp::And => Axiom::CommAnd,
            BinOp::Or => Axiom::CommOr,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "ltr")]
    LeftToRight,
    #[serde(rename = "rtl")]
    RightToLeft,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::LeftToRight => Direction::RightToLeft,
            Direction::RightToLeft => Direction::LeftToRight,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub axiom: Axiom,
    pub path: Path,
    pub direction: Direction,
}

impl Step {
    pub fn new(axiom: Axiom, path: Path, direction: Direction) -> Self {
        Step {
            axiom,
            path,
            direction,
        }
    }

    pub fn inverse(&self) -> Step {
        Step {
            axiom: self.axiom,
            path: self.path.clone(),
            direction: self.direction.flip(),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            Direction::LeftToRight => "ltr",
            Direction::RightToLeft => "rtl",
        };
        write!(f, "{}@{} {}", self.axiom.tag(), self.path, dir)
    }
}

impl Serialize for Step {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Step", 3)?;
        st.serialize_field("axiom", &self.axiom)?;
        st.serialize_field("path", &self.path.to_string())?;
        st.serialize_field("direction", &self.direction)?;
        st.end()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RewriteTrace {
    pub steps: Vec<Step>,
}

impl RewriteTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The trace that undoes this one.
    pub fn inverse(&self) -> RewriteTrace {
        RewriteTrace {
            steps: self.steps.iter().rev().map(Step::inverse).collect(),
        }
    }

    pub fn then(mut self, other: RewriteTrace) -> RewriteTrace {
        self.steps.extend(other.steps);
        self
    }
}

impl fmt::Display for RewriteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

fn rewrite_node(node: &Formula, axiom: Axiom, direction: Direction) -> Option<Formula> {
    use Direction::*;
    use Formula::*;
    let out = match (axiom, direction, node) {
        (Axiom::AssocAnd, LeftToRight, And(ab, c)) => match &**ab {
            And(a, b) => Formula::and((**a).clone(), Formula::and((**b).clone(), (**c).clone())),
            _ => return None,
        },
        (Axiom::AssocAnd, RightToLeft, And(a, bc)) => match &**bc {
            And(b, c) => Formula::and(Formula::and((**a).clone(), (**b).clone()), (**c).clone()),
            _ => return None,
        },
        (Axiom::AssocOr, LeftToRight, Or(ab, c)) => match &**ab {
            Or(a, b) => Formula::or((**a).clone(), Formula::or((**b).clone(), (**c).clone())),
            _ => return None,
        },
        (Axiom::AssocOr, RightToLeft, Or(a, bc)) => match &**bc {
            Or(b, c) => Formula::or(Formula::or((**a).clone(), (**b).clone()), (**c).clone()),
            _ => return None,
        },
        (Axiom::CommAnd, _, And(a, b)) => Formula::and((**b).clone(), (**a).clone()),
        (Axiom::CommOr, _, Or(a, b)) => Formula::or((**b).clone(), (**a).clone()),
        (Axiom::DNeg, LeftToRight, Not(inner)) => match &**inner {
            Not(a) => (**a).clone(),
            _ => return None,
        },
        (Axiom::DNeg, RightToLeft, a) => Formula::neg(Formula::neg(a.clone())),
        (Axiom::DeMorganAnd, LeftToRight, Not(inner)) => match &**inner {
            And(a, b) => Formula::or(Formula::neg((**a).clone()), Formula::neg((**b).clone())),
            _ => return None,
        },
        (Axiom::DeMorganAnd, RightToLeft, Or(na, nb)) => match (&**na, &**nb) {
            (Not(a), Not(b)) => Formula::neg(Formula::and((**a).clone(), (**b).clone())),
            _ => return None,
        },
        (Axiom::DeMorganOr, LeftToRight, Not(inner)) => match &**inner {
            Or(a, b) => Formula::and(Formula::neg((**a).clone()), Formula::neg((**b).clone())),
            _ => return None,
        },
        (Axiom::DeMorganOr, RightToLeft, And(na, nb)) => match (&**na, &**nb) {
            (Not(a), Not(b)) => Formula::neg(Formula::or((**a).clone(), (**b).clone())),
            _ => return None,
        },
        (Axiom::NegTop, LeftToRight, Not(inner)) if **inner == Top => Bot,
        (Axiom::NegTop, RightToLeft, Bot) => Formula::neg(Top),
        (Axiom::NegBot, LeftToRight, Not(inner)) if **inner == Bot => Top,
        (Axiom::NegBot, RightToLeft, Top) => Formula::neg(Bot),
        _ => return None,
    };
    Some(out)
}

/// Applies one step, or returns `None` when the redex does not match.
pub fn apply_step(f: &Formula, step: &Step) -> Option<Formula> {
    let mut out = f.clone();
    apply_step_in_place(&mut out, step)?;
    Some(out)
}

fn apply_step_in_place(f: &mut Formula, step: &Step) -> Option<()> {
    let node = f.subformula_mut(&step.path)?;
    *node = rewrite_node(node, step.axiom, step.direction)?;
    Some(())
}

pub fn replay(a: &Formula, trace: &RewriteTrace) -> Result<Formula> {
    let mut cur = a.clone();
    for (index, step) in trace.steps.iter().enumerate() {
        apply_step_in_place(&mut cur, step).ok_or_else(|| Error::ReplayMismatch {
            index,
            step: step.to_string(),
        })?;
    }
    Ok(cur)
}

/// For each source occurrence, the occurrence it lands on after replaying
/// `trace`. Every axiom permutes occurrences, so the result is a bijection.
pub fn occurrence_permutation(a: &Formula, trace: &RewriteTrace) -> Result<Vec<usize>> {
    let tagged = a.relabel_occurrences(|i, _| format!("o{i}"));
    let end = replay(&tagged, trace)?;
    let mut perm = vec![usize::MAX; a.size()];
    for (j, label) in end.leaf_letters().into_iter().enumerate() {
        let i: usize = label[1..].parse().expect("tag written above");
        perm[i] = j;
    }
    Ok(perm)
}

/// Records steps while rewriting a subtree in place.
struct Recorder {
    steps: Vec<Step>,
}

impl Recorder {
    fn apply(&mut self, node: &mut Formula, base: &Path, local: &[u8], axiom: Axiom, direction: Direction) {
        let path = Path(base.0.iter().chain(local).copied().collect());
        let step = Step::new(axiom, path, direction);
        let local = Path(local.to_vec());
        apply_step_in_place(node, &Step::new(axiom, local, direction))
            .unwrap_or_else(|| panic!("canonicalization emitted a non-matching step {step}"));
        self.steps.push(step);
    }
}

fn push_negations(node: &mut Formula, base: &Path, rec: &mut Recorder) {
    loop {
        match node {
            Formula::Not(inner) => match &**inner {
                Formula::Not(_) => rec.apply(node, base, &[], Axiom::DNeg, Direction::LeftToRight),
                Formula::And(..) => {
                    rec.apply(node, base, &[], Axiom::DeMorganAnd, Direction::LeftToRight);
                }
                Formula::Or(..) => {
                    rec.apply(node, base, &[], Axiom::DeMorganOr, Direction::LeftToRight);
                }
                Formula::Top => rec.apply(node, base, &[], Axiom::NegTop, Direction::LeftToRight),
                Formula::Bot => rec.apply(node, base, &[], Axiom::NegBot, Direction::LeftToRight),
                Formula::Letter(_) => return,
            },
            Formula::And(a, b) | Formula::Or(a, b) => {
                push_negations(a, &base.child(0), rec);
                push_negations(b, &base.child(1), rec);
                return;
            }
            _ => return,
        }
    }
}

/// Negation normal form with the trace of rewrites that produced it.
pub fn nnf(f: &Formula) -> (Formula, RewriteTrace) {
    let mut out = f.clone();
    let mut rec = Recorder { steps: Vec::new() };
    push_negations(&mut out, &Path::root(), &mut rec);
    (out, RewriteTrace { steps: rec.steps })
}

/// Negation normal form without a trace.
pub fn nnf_formula(f: &Formula) -> Formula {
    fn go(f: &Formula, negate: bool) -> Formula {
        match (f, negate) {
            (Formula::Top, false) | (Formula::Bot, true) => Formula::Top,
            (Formula::Bot, false) | (Formula::Top, true) => Formula::Bot,
            (Formula::Letter(_), false) => f.clone(),
            (Formula::Letter(_), true) => Formula::neg(f.clone()),
            (Formula::Not(a), _) => go(a, !negate),
            (Formula::And(a, b), false) | (Formula::Or(a, b), true) => Formula::and(go(a, negate), go(b, negate)),
            (Formula::Or(a, b), false) | (Formula::And(a, b), true) => Formula::or(go(a, negate), go(b, negate)),
        }
    }
    go(f, false)
}

/// Negation-normal tree with flattened, sorted n-ary conjunctions and disjunctions.
///
/// Children are ordered by `F < T < p < ~p < AND < OR`, atoms by name,
/// composites by arity and then lexicographically by children. Duplicates
/// are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalForm {
    Bot,
    Top,
    Pos(String),
    Neg(String),
    And(Vec<CanonicalForm>),
    Or(Vec<CanonicalForm>),
}

impl CanonicalForm {
    fn rank(&self) -> u8 {
        match self {
            CanonicalForm::Bot => 0,
            CanonicalForm::Top => 1,
            CanonicalForm::Pos(_) => 2,
            CanonicalForm::Neg(_) => 3,
            CanonicalForm::And(_) => 4,
            CanonicalForm::Or(_) => 5,
        }
    }

    /// Right-nested binary formula with children in canonical order.
    pub fn to_formula(&self) -> Formula {
        match self {
            CanonicalForm::Bot => Formula::Bot,
            CanonicalForm::Top => Formula::Top,
            CanonicalForm::Pos(p) => Formula::letter(p.clone()),
            CanonicalForm::Neg(p) => Formula::neg(Formula::letter(p.clone())),
            CanonicalForm::And(cs) => comb(BinOp::And, cs),
            CanonicalForm::Or(cs) => comb(BinOp::Or, cs),
        }
    }

    pub fn is_flat_and_sorted(&self) -> bool {
        match self {
            CanonicalForm::And(cs) | CanonicalForm::Or(cs) => {
                let same = |c: &CanonicalForm| c.rank() == self.rank();
                cs.len() >= 2
                    && !cs.iter().any(same)
                    && cs.windows(2).all(|w| w[0] <= w[1])
                    && cs.iter().all(CanonicalForm::is_flat_and_sorted)
            }
            _ => true,
        }
    }
}

fn comb(op: BinOp, children: &[CanonicalForm]) -> Formula {
    let (last, init) = children.split_last().expect("n-ary node has children");
    init.iter()
        .rev()
        .fold(last.to_formula(), |acc, c| Formula::binary(op, c.to_formula(), acc))
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        use CanonicalForm::*;
        match (self, other) {
            (Pos(a), Pos(b)) | (Neg(a), Neg(b)) => a.cmp(b),
            (And(a), And(b)) | (Or(a), Or(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, name: &str, cs: &[CanonicalForm]| {
            write!(f, "{name}[")?;
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("]")
        };
        match self {
            CanonicalForm::Bot => f.write_str("F"),
            CanonicalForm::Top => f.write_str("T"),
            CanonicalForm::Pos(p) => f.write_str(p),
            CanonicalForm::Neg(p) => write!(f, "~{p}"),
            CanonicalForm::And(cs) => list(f, "AND", cs),
            CanonicalForm::Or(cs) => list(f, "OR", cs),
        }
    }
}

fn canonical_of_nnf(f: &Formula) -> CanonicalForm {
    fn gather(f: &Formula, op: BinOp, out: &mut Vec<CanonicalForm>) {
        match f.as_binary() {
            Some((o, a, b)) if o == op => {
                gather(a, op, out);
                gather(b, op, out);
            }
            _ => out.push(canonical_of_nnf(f)),
        }
    }
    match f {
        Formula::Top => CanonicalForm::Top,
        Formula::Bot => CanonicalForm::Bot,
        Formula::Letter(p) => CanonicalForm::Pos(p.clone()),
        Formula::Not(inner) => match &**inner {
            Formula::Letter(p) => CanonicalForm::Neg(p.clone()),
            _ => unreachable!("input is in negation normal form"),
        },
        Formula::And(..) | Formula::Or(..) => {
            let (op, _, _) = f.as_binary().unwrap();
            let mut children = Vec::new();
            gather(f, op, &mut children);
            children.sort();
            match op {
                BinOp::And => CanonicalForm::And(children),
                BinOp::Or => CanonicalForm::Or(children),
            }
        }
    }
}

pub fn ac_canonical(f: &Formula) -> CanonicalForm {
    canonical_of_nnf(&nnf_formula(f))
}

fn elements(node: &Formula, op: BinOp) -> Vec<&Formula> {
    let mut out = Vec::new();
    let mut cur = node;
    loop {
        match cur.as_binary() {
            Some((o, a, b)) if o == op => {
                out.push(a);
                cur = b;
            }
            _ => {
                out.push(cur);
                return out;
            }
        }
    }
}

// Children are already canonical combs; merge the two combs and bubble-sort.
fn ac_phase(node: &mut Formula, base: &Path, rec: &mut Recorder) {
    let op = match node {
        Formula::And(a, b) | Formula::Or(a, b) => {
            ac_phase(a, &base.child(0), rec);
            ac_phase(b, &base.child(1), rec);
            node.as_binary().unwrap().0
        }
        _ => return,
    };

    let mut local: Vec<u8> = Vec::new();
    loop {
        let here = node.subformula(&Path(local.clone())).expect("local path valid");
        match here.as_binary() {
            Some((o, left, right)) if o == op => {
                if matches!(left.as_binary(), Some((lo, _, _)) if lo == op) {
                    rec.apply(node, base, &local, Axiom::assoc(op), Direction::LeftToRight);
                } else if matches!(right.as_binary(), Some((ro, _, _)) if ro == op) {
                    local.push(1);
                } else {
                    break;
                }
            }
            _ => break,
        }
    }

    let mut keys: Vec<CanonicalForm> = elements(node, op).into_iter().map(canonical_of_nnf).collect();
    let n = keys.len();
    for pass in 0..n {
        let mut swapped = false;
        for i in 0..n - 1 - pass {
            if keys[i] > keys[i + 1] {
                let at = vec![1u8; i];
                if i + 2 == n {
                    rec.apply(node, base, &at, Axiom::comm(op), Direction::LeftToRight);
                } else {
                    let mut left = at.clone();
                    left.push(0);
                    rec.apply(node, base, &at, Axiom::assoc(op), Direction::RightToLeft);
                    rec.apply(node, base, &left, Axiom::comm(op), Direction::LeftToRight);
                    rec.apply(node, base, &at, Axiom::assoc(op), Direction::LeftToRight);
                }
                keys.swap(i, i + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
}

/// Rewrites `f` into the binary representative of its canonical form.
pub fn canonicalize(f: &Formula) -> (Formula, RewriteTrace) {
    let (mut out, trace) = nnf(f);
    let mut rec = Recorder { steps: trace.steps };
    ac_phase(&mut out, &Path::root(), &mut rec);
    debug_assert_eq!(out, ac_canonical(f).to_formula());
    (out, RewriteTrace { steps: rec.steps })
}

/// Theoremhood of `a <-> b` in the associative-commutative system over `&`, `|`.
pub fn is_theorem_av(a: &Formula, b: &Formula) -> Result<bool> {
    a.require_and_or()?;
    b.require_and_or()?;
    Ok(ac_canonical(a) == ac_canonical(b))
}

/// Theoremhood of `a <-> b` once double negation and De Morgan are added.
pub fn is_theorem_nav(a: &Formula, b: &Formula) -> Result<bool> {
    a.require_neg_and_or()?;
    b.require_neg_and_or()?;
    Ok(ac_canonical(a) == ac_canonical(b))
}

/// A trace rewriting `a` into `b`, or an error when their canonical forms differ.
pub fn derive(a: &Formula, b: &Formula) -> Result<RewriteTrace> {
    let (ca, cb) = (ac_canonical(a), ac_canonical(b));
    if ca != cb {
        return Err(Error::NotATheorem {
            left: ca.to_string(),
            right: cb.to_string(),
        });
    }
    let (_, ta) = canonicalize(a);
    let (_, tb) = canonicalize(b);
    Ok(ta.then(tb.inverse()))
}
