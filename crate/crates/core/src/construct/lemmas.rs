//! Occurrence-tracked constructions over the `{T, F, &, |}` language.
//!
//! * [`lemma4_extract`] rewrites `A` to `(p & A1) | A2` around a chosen
//!   occurrence of `p`;
//! * [`lemma5_implant`] replaces one occurrence `q` by `p & q`, with an arrow
//!   `p & B -> B'`;
//! * [`lemma6_arrow`] composes these into an arrow `A -> B` linking exactly
//!   one chosen pair of occurrences;
//! * [`lemma7_iso`] takes unions of such arrows along a bijection and checks
//!   that the two directions compose to identities.

use std::collections::BTreeSet;

use serde::Serialize;

use super::arrows::{
    chain, commutation, copairing, distribution, first_projection, identity, in_context, left_injection,
    pairing, positional, right_injection, tensor,
};
use super::labeled::LabeledFormula;
use crate::error::{Error, Result};
use crate::formula::{BinOp, Formula, Polarity};
use crate::linking::{compose, identity_arrow, union, zero_arrow, Relation, TypedRelArrow};
use crate::semantics::{are_equivalent, entails};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma4 {
    pub letter: String,
    pub occurrence: usize,
    pub a1: Formula,
    pub a2: Formula,
    /// `(p & A1) | A2`, with the extracted occurrence written first.
    pub target: Formula,
    pub tau: TypedRelArrow,
    /// Converse of `tau`.
    pub sigma: TypedRelArrow,
    pub verified: bool,
}

fn occurrence_letter(f: &Formula, index: usize) -> Result<String> {
    f.leaf_letters()
        .get(index)
        .map(|p| p.to_string())
        .ok_or(Error::InvalidOccurrence {
            index,
            len: f.size(),
        })
}

// Arrow route: tau is composed from structural generators along the recursion.
fn extract_arrow(a: &Formula, x: usize) -> Result<(Formula, Formula, TypedRelArrow)> {
    match a {
        Formula::Letter(_) => {
            let target = Formula::or(Formula::and(a.clone(), Formula::Top), Formula::Bot);
            Ok((Formula::Top, Formula::Bot, positional(a, &target)?))
        }
        Formula::And(l, r) | Formula::Or(l, r) => {
            let op = a.as_binary().unwrap().0;
            let nl = l.size();
            // bring the side holding x to the left
            let (swap, inner, other, x) = if x < nl {
                (None, &**l, &**r, x)
            } else {
                (Some(commutation(a)?), &**r, &**l, x - nl)
            };
            let (a1, a2, tau) = extract_arrow(inner, x)?;
            let lifted = tensor(op, &tau, &identity(other));
            let p = Formula::letter(occurrence_letter(inner, x)?);
            let pa1 = Formula::and(p.clone(), a1.clone());
            let (new_a1, new_a2, tail) = match op {
                BinOp::And => {
                    let dist = distribution(&lifted.target)?;
                    let left = Formula::and(pa1.clone(), other.clone());
                    let new_a1 = Formula::and(a1, other.clone());
                    let new_a2 = Formula::and(a2, other.clone());
                    let reassoc = tensor(
                        BinOp::Or,
                        &positional(&left, &Formula::and(p, new_a1.clone()))?,
                        &identity(&new_a2),
                    );
                    (new_a1, new_a2, vec![dist, reassoc])
                }
                BinOp::Or => {
                    let new_a2 = Formula::or(a2, other.clone());
                    let reassoc = positional(&lifted.target, &Formula::or(pa1, new_a2.clone()))?;
                    (a1, new_a2, vec![reassoc])
                }
            };
            let mut steps: Vec<TypedRelArrow> = swap.into_iter().collect();
            steps.push(lifted);
            steps.extend(tail);
            Ok((new_a1, new_a2, chain(&steps)?))
        }
        Formula::Top | Formula::Bot | Formula::Not(_) => unreachable!("occurrence lies in a letter"),
    }
}

// Provenance route: the same recursion on labeled trees.
fn extract_labeled(a: &LabeledFormula, x: usize) -> (LabeledFormula, LabeledFormula) {
    match a {
        LabeledFormula::Leaf { .. } => (LabeledFormula::Top, LabeledFormula::Bot),
        LabeledFormula::And(l, r) | LabeledFormula::Or(l, r) => {
            let (inner, other) = if l.label_set().contains(&x) { (l, r) } else { (r, l) };
            let (a1, a2) = extract_labeled(inner, x);
            match a {
                LabeledFormula::And(..) => (
                    LabeledFormula::and(a1, (**other).clone()),
                    LabeledFormula::and(a2, (**other).clone()),
                ),
                _ => (a1, LabeledFormula::or(a2, (**other).clone())),
            }
        }
        LabeledFormula::Top | LabeledFormula::Bot => unreachable!("occurrence lies in a letter"),
    }
}

/// Splits `a` around occurrence `x` of its letter `p` into `A1`, `A2` with
/// `A <-> (p & A1) | A2` a tautology.
pub fn lemma4_extract(a: &Formula, x: usize) -> Result<Lemma4> {
    a.require_const_and_or()?;
    let letter = occurrence_letter(a, x)?;
    let (a1, a2, tau) = extract_arrow(a, x)?;

    let labeled = LabeledFormula::from_formula(a, 0)?;
    let (l1, l2) = extract_labeled(&labeled, x);
    let leaf = LabeledFormula::Leaf {
        letter: letter.clone(),
        label: x,
    };
    let labeled_target = LabeledFormula::or(LabeledFormula::and(leaf, l1), l2);
    let target = labeled_target.to_formula();

    let letters = a.leaf_letters();
    let target_letters = target.leaf_letters();
    let verified = are_equivalent(a, &target)?
        && tau.target == target
        && tau.rel == labeled_target.provenance()
        && tau.rel.iter().all(|&(i, j)| letters[i] == target_letters[j])
        && tau.rel.iter().filter(|&&(_, j)| j == 0).eq([(x, 0)].iter());

    let sigma = tau.converse();
    Ok(Lemma4 {
        letter,
        occurrence: x,
        a1,
        a2,
        target,
        tau,
        sigma,
        verified,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma5 {
    /// `p & B`.
    pub source: Formula,
    pub b_prime: Formula,
    pub eta: TypedRelArrow,
    pub verified: bool,
}

fn implant_arrow(p: &Formula, b: &Formula, y: usize) -> Result<TypedRelArrow> {
    let source = Formula::and(p.clone(), b.clone());
    match b {
        Formula::Letter(_) => Ok(identity(&source)),
        Formula::And(l, r) | Formula::Or(l, r) => {
            let op = b.as_binary().unwrap().0;
            let nl = l.size();
            let mut steps = Vec::new();
            let (b1, b2, y1, swapped) = if y < nl {
                (&**l, &**r, y, false)
            } else {
                steps.push(in_context(&source, &"1".parse()?, &commutation(b)?)?);
                (&**r, &**l, y - nl, true)
            };
            // p & (B1 op B2) -> (p & B1) op B2: associativity or dissociativity
            let current = Formula::and(p.clone(), Formula::binary(op, b1.clone(), b2.clone()));
            let regrouped = Formula::binary(op, Formula::and(p.clone(), b1.clone()), b2.clone());
            steps.push(positional(&current, &regrouped)?);
            let inner = implant_arrow(p, b1, y1)?;
            steps.push(tensor(op, &inner, &identity(b2)));
            if swapped {
                let last = steps.last().unwrap().target.clone();
                steps.push(commutation(&last)?);
            }
            chain(&steps)
        }
        Formula::Top | Formula::Bot | Formula::Not(_) => unreachable!("occurrence lies in a letter"),
    }
}

/// Replaces occurrence `y` (some letter `q`) of `b` by `p & q`.
pub fn lemma5_implant(b: &Formula, y: usize, p: &str) -> Result<Lemma5> {
    b.require_const_and_or()?;
    occurrence_letter(b, y)?;
    let pf = Formula::letter(p);
    let source = Formula::and(pf.clone(), b.clone());
    let eta = implant_arrow(&pf, b, y)?;

    let labeled = LabeledFormula::from_formula(b, 1)?;
    let implanted = labeled.replace_leaf(1 + y, &|leaf| {
        LabeledFormula::and(
            LabeledFormula::Leaf {
                letter: p.to_string(),
                label: 0,
            },
            leaf.clone(),
        )
    });
    let b_prime = implanted.to_formula();
    let verified = eta.source == source
        && eta.target == b_prime
        && eta.rel == implanted.provenance()
        && entails(&source, &b_prime)?;
    Ok(Lemma5 {
        source,
        b_prime,
        eta,
        verified,
    })
}

/// An arrow `a -> b` whose relation is exactly `{(x, y)}`.
///
/// Requires `a -> b` to be a tautology and `x`, `y` to be occurrences of the
/// same letter. The relation is computed by composing generator images; the
/// singleton shape is checked before returning.
pub fn lemma6_arrow(a: &Formula, b: &Formula, x: usize, y: usize) -> Result<TypedRelArrow> {
    a.require_const_and_or()?;
    b.require_const_and_or()?;
    let p = occurrence_letter(a, x)?;
    let q = occurrence_letter(b, y)?;
    if p != q {
        return Err(Error::LetterMismatch { left: p, right: q });
    }
    if !entails(a, b)? {
        return Err(Error::NotAnImplication(format!("{a} -> {b}")));
    }

    let l4 = lemma4_extract(a, x)?;
    let (pa1, a2) = match &l4.target {
        Formula::Or(l, r) => ((**l).clone(), (**r).clone()),
        _ => unreachable!("extraction target is a disjunction"),
    };
    // g: A -> B exists since A -> B is a tautology; its image is annihilated below
    let g = zero_arrow(a, b);
    let zero_b = zero_arrow(b, b);
    let zeta = |iota: TypedRelArrow| chain(&[iota, l4.sigma.clone(), g.clone(), zero_b.clone()]);
    let zeta1 = zeta(left_injection(&pa1, &a2))?;
    let zeta2 = zeta(right_injection(&pa1, &a2))?;

    let pi = first_projection(&pa1)?;
    let paired = pairing(&pi, &zeta1)?;

    let l5 = lemma5_implant(b, y, &p)?;
    let hole = b.occurrence_path(y).expect("occurrence checked above");
    let theta = in_context(&l5.b_prime, &hole, &first_projection(l5.b_prime.subformula(&hole).unwrap())?)?;
    let theta_eta = compose(&l5.eta, &theta)?;

    let mu = copairing(&compose(&paired, &theta_eta)?, &zeta2)?;
    let f = compose(&l4.tau, &mu)?;

    if f.rel != Relation::from([(x, y)]) {
        return Err(Error::Verification(format!(
            "single-link arrow {a} -> {b} produced {f} instead of {{({x},{y})}}"
        )));
    }
    Ok(f)
}

/// A pair of arrows between two formulas and the check that they are inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub f: TypedRelArrow,
    pub g: TypedRelArrow,
    pub gf_is_identity: bool,
    pub fg_is_identity: bool,
}

impl IsoWitness {
    pub fn verified(&self) -> bool {
        self.gf_is_identity && self.fg_is_identity
    }

    pub fn to_json(&self) -> WitnessJson {
        WitnessJson {
            f: self.f.pairs(),
            g: self.g.pairs(),
            gf_is_identity: self.gf_is_identity,
            fg_is_identity: self.fg_is_identity,
        }
    }
}

/// Serialized witness: relations as `[s, t]` pairs plus the verification flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct WitnessJson {
    pub f: Vec<[usize; 2]>,
    pub g: Vec<[usize; 2]>,
    pub gf_is_identity: bool,
    pub fg_is_identity: bool,
}

/// Replaces each negated letter `~p` by an atom of its own, so that signed
/// letters can be handled by the negation-free constructions.
pub fn opaque_atoms(f: &Formula) -> Result<Formula> {
    if !f.is_neg_reduced() {
        return Err(Error::NotNegReduced);
    }
    fn go(f: &Formula) -> Formula {
        match f {
            Formula::Not(inner) => match &**inner {
                Formula::Letter(p) => Formula::letter(format!("~{p}")),
                _ => unreachable!("negation-reduced"),
            },
            Formula::And(a, b) => Formula::and(go(a), go(b)),
            Formula::Or(a, b) => Formula::or(go(a), go(b)),
            other => other.clone(),
        }
    }
    Ok(go(f))
}

fn signed_letters(f: &Formula) -> Vec<(String, Polarity)> {
    f.occurrences()
        .into_iter()
        .map(|o| (o.letter, o.polarity.expect("negation-reduced")))
        .collect()
}

fn check_bijection(a: &Formula, b: &Formula, bij: &[(usize, usize)]) -> Result<()> {
    let (sa, sb) = (signed_letters(a), signed_letters(b));
    if bij.len() != sa.len() || sa.len() != sb.len() {
        return Err(Error::BadBijection(format!(
            "{} pairs for {} and {} occurrences",
            bij.len(),
            sa.len(),
            sb.len()
        )));
    }
    let mut seen_src = BTreeSet::new();
    let mut seen_tgt = BTreeSet::new();
    for &(x, y) in bij {
        if x >= sa.len() || y >= sb.len() {
            return Err(Error::BadBijection(format!("pair ({x},{y}) out of range")));
        }
        if !seen_src.insert(x) || !seen_tgt.insert(y) {
            return Err(Error::BadBijection(format!("pair ({x},{y}) reuses an occurrence")));
        }
        if sa[x] != sb[y] {
            return Err(Error::BadBijection(format!(
                "pair ({x},{y}) joins {}{} with {}{}",
                sa[x].1, sa[x].0, sb[y].1, sb[y].0
            )));
        }
    }
    Ok(())
}

/// Builds the isomorphism witness for negation-reduced, letter-homogeneous
/// `a` and `b` along `bij`, a signed-letter-respecting bijection of occurrences.
///
/// Signed letters are treated as opaque atoms, so the negation-free
/// equivalence obtained that way must hold; an equivalence that needs
/// `p & ~p = F` or `p | ~p = T` is reported as [`Error::ComplementDependent`].
pub fn lemma7_iso(a: &Formula, b: &Formula, bij: &[(usize, usize)]) -> Result<IsoWitness> {
    let counts_a = a.signed_counts()?;
    let counts_b = b.signed_counts()?;
    if counts_a != counts_b {
        return Err(Error::NotHomogeneous(format!("{counts_a:?} vs {counts_b:?}")));
    }
    check_bijection(a, b, bij)?;
    if !are_equivalent(a, b)? {
        return Err(Error::NotEquivalent);
    }
    let (oa, ob) = (opaque_atoms(a)?, opaque_atoms(b)?);
    if !are_equivalent(&oa, &ob)? {
        return Err(Error::ComplementDependent(format!("{a} <-> {b}")));
    }

    let mut forward = zero_arrow(&oa, &ob);
    let mut backward = zero_arrow(&ob, &oa);
    for &(x, y) in bij {
        forward = union(&forward, &lemma6_arrow(&oa, &ob, x, y)?)?;
        backward = union(&backward, &lemma6_arrow(&ob, &oa, y, x)?)?;
    }
    let f = TypedRelArrow::unchecked(a.clone(), b.clone(), forward.rel);
    let g = TypedRelArrow::unchecked(b.clone(), a.clone(), backward.rel);
    let gf_is_identity = compose(&f, &g)?.rel == identity_arrow(a).rel;
    let fg_is_identity = compose(&g, &f)?.rel == identity_arrow(b).rel;
    Ok(IsoWitness {
        f,
        g,
        gf_is_identity,
        fg_is_identity,
    })
}

/// Matches the i-th occurrence of each signed letter in `a` with the i-th in `b`.
pub fn left_to_right_bijection(a: &Formula, b: &Formula) -> Vec<(usize, usize)> {
    let (sa, sb) = (signed_letters(a), signed_letters(b));
    let mut used = vec![false; sb.len()];
    let mut out = Vec::new();
    for (x, signed) in sa.iter().enumerate() {
        if let Some(y) = (0..sb.len()).find(|&y| !used[y] && &sb[y] == signed) {
            used[y] = true;
            out.push((x, y));
        }
    }
    out
}
