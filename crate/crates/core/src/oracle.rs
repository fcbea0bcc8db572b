//! Brute-force cross-checks for the canonical deciders.
//!
//! [`bounded_closure`] explores single axiom applications breadth first;
//! [`oracle_witness_search`] tries every signed-letter-respecting occurrence
//! bijection. Both are only meant for small formulas.

use std::collections::{BTreeMap, BTreeSet};

use crate::canon::{apply_step, Axiom, Direction, Step};
use crate::construct::{lemma7_iso, IsoWitness};
use crate::error::{Error, Result};
use crate::formula::{Formula, Polarity};

pub const MAX_LEAVES: usize = 12;
pub const MAX_DEPTH: usize = 8;
/// Upper bound on explored formulas, so a legal depth still terminates quickly.
pub const MAX_MEMBERS: usize = 2_000_000;
pub const MAX_WITNESS_OCCURRENCES: usize = 8;

const REWRITES: [Axiom; 7] = [
    Axiom::AssocAnd,
    Axiom::AssocOr,
    Axiom::CommAnd,
    Axiom::CommOr,
    Axiom::DNeg,
    Axiom::DeMorganAnd,
    Axiom::DeMorganOr,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteClosure {
    pub start: Formula,
    pub depth: usize,
    pub members: BTreeSet<Formula>,
}

impl RewriteClosure {
    pub fn contains(&self, f: &Formula) -> bool {
        self.members.contains(f)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn check_guards(a: &Formula, depth: usize) -> Result<()> {
    if a.size() > MAX_LEAVES {
        return Err(Error::Guard(format!(
            "{} letter leaves exceed the oracle bound of {MAX_LEAVES}",
            a.size()
        )));
    }
    if depth > MAX_DEPTH {
        return Err(Error::Guard(format!("depth {depth} exceeds the oracle bound of {MAX_DEPTH}")));
    }
    Ok(())
}

/// Every formula one axiom application away from `f`.
pub fn neighbours(f: &Formula) -> BTreeSet<Formula> {
    let mut out = BTreeSet::new();
    for path in f.paths() {
        for axiom in REWRITES {
            for direction in [Direction::LeftToRight, Direction::RightToLeft] {
                if let Some(g) = apply_step(f, &Step::new(axiom, path.clone(), direction)) {
                    out.insert(g);
                }
            }
        }
    }
    out
}

/// Breadth-first layers: `layers[k]` holds formulas first reached in `k` steps.
fn layers(a: &Formula, depth: usize) -> Result<Vec<BTreeSet<Formula>>> {
    let mut seen = BTreeSet::from([a.clone()]);
    let mut out = vec![BTreeSet::from([a.clone()])];
    for _ in 0..depth {
        let mut next = BTreeSet::new();
        for f in out.last().unwrap() {
            for g in neighbours(f) {
                if seen.insert(g.clone()) {
                    next.insert(g);
                }
            }
        }
        if seen.len() > MAX_MEMBERS {
            return Err(Error::Guard(format!("closure exceeds {MAX_MEMBERS} formulas")));
        }
        if next.is_empty() {
            break;
        }
        out.push(next);
    }
    Ok(out)
}

pub fn bounded_closure(a: &Formula, depth: usize) -> Result<RewriteClosure> {
    check_guards(a, depth)?;
    let members = layers(a, depth)?.into_iter().flatten().collect();
    Ok(RewriteClosure {
        start: a.clone(),
        depth,
        members,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleAnswer {
    Yes,
    Unknown,
}

/// `Yes` iff `b` is reachable from `a` in at most `depth` steps.
///
/// Every step is invertible, so the search runs from both ends and meets in
/// the middle; the answer equals membership in `bounded_closure(a, depth)`.
pub fn oracle_theorem(a: &Formula, b: &Formula, depth: usize) -> Result<OracleAnswer> {
    check_guards(a, depth)?;
    check_guards(b, depth)?;
    if a.leaf_letters().len() != b.leaf_letters().len() {
        return Ok(OracleAnswer::Unknown);
    }
    let from_a = layers(a, depth.div_ceil(2))?;
    let from_b = layers(b, depth / 2)?;
    let near_b: BTreeSet<&Formula> = from_b.iter().flatten().collect();
    let met = from_a.iter().flatten().any(|f| near_b.contains(f));
    Ok(if met { OracleAnswer::Yes } else { OracleAnswer::Unknown })
}

/// All bijections pairing occurrences with equal signed letters.
fn signed_bijections(a: &Formula, b: &Formula) -> Vec<Vec<(usize, usize)>> {
    let group = |f: &Formula| {
        let mut g: BTreeMap<(String, Polarity), Vec<usize>> = BTreeMap::new();
        for o in f.occurrences() {
            g.entry((o.letter, o.polarity.expect("negation-reduced"))).or_default().push(o.index);
        }
        g
    };
    let (ga, gb) = (group(a), group(b));
    if ga.keys().ne(gb.keys()) || ga.iter().any(|(k, v)| v.len() != gb[k].len()) {
        return Vec::new();
    }
    let mut out = vec![Vec::new()];
    for (k, xs) in &ga {
        let ys = &gb[k];
        let mut next = Vec::new();
        for partial in &out {
            for perm in permutations(ys) {
                let mut p: Vec<(usize, usize)> = partial.clone();
                p.extend(xs.iter().copied().zip(perm));
                next.push(p);
            }
        }
        out = next;
    }
    for p in &mut out {
        p.sort_unstable();
    }
    out
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// First signed-letter-respecting bijection along which a verified
/// isomorphism witness can be built.
pub fn oracle_witness_search(a: &Formula, b: &Formula) -> Result<Option<(Vec<(usize, usize)>, IsoWitness)>> {
    for f in [a, b] {
        if !f.is_neg_reduced() {
            return Err(Error::NotNegReduced);
        }
        if f.size() > MAX_WITNESS_OCCURRENCES {
            return Err(Error::Guard(format!(
                "{f} has more than {MAX_WITNESS_OCCURRENCES} occurrences"
            )));
        }
    }
    for bij in signed_bijections(a, b) {
        match lemma7_iso(a, b, &bij) {
            Ok(w) if w.verified() => return Ok(Some((bij, w))),
            Ok(_) => {}
            Err(Error::NotEquivalent | Error::ComplementDependent(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}
