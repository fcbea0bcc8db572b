use std::fmt;

use crate::canon::{ac_canonical, derive, is_theorem_nav, nnf_formula, occurrence_permutation, RewriteTrace};
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::linking::TypedRelArrow;
use crate::semantics::{are_equivalent_capped, DEFAULT_LETTER_CAP};

use super::lemmas::{left_to_right_bijection, lemma7_iso, opaque_atoms, IsoWitness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BooleanReason {
    /// Equivalent and letter-homogeneous; a witness is attached.
    Isomorphic,
    NotEquivalent,
    NotLetterHomogeneous(String),
    /// Equivalent only by using `p & ~p = F` or `p | ~p = T`; no linking
    /// bijection can be realized.
    ComplementDependent,
}

impl fmt::Display for BooleanReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BooleanReason::Isomorphic => f.write_str("equivalent and letter-homogeneous"),
            BooleanReason::NotEquivalent => f.write_str("not equivalent"),
            BooleanReason::NotLetterHomogeneous(d) => write!(f, "not letter-homogeneous: {d}"),
            BooleanReason::ComplementDependent => f.write_str(
                "equivalent only through complementation of signed letters; \
                 equivalence fails once p and ~p are independent atoms",
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanVerdict {
    pub iso: bool,
    pub reason: BooleanReason,
    pub witness: Option<IsoWitness>,
}

fn describe_counts(a: &Formula, b: &Formula) -> Result<String> {
    let (ca, cb) = (a.signed_counts()?, b.signed_counts()?);
    let keys: std::collections::BTreeSet<_> = ca.keys().chain(cb.keys()).collect();
    let diffs: Vec<String> = keys
        .into_iter()
        .filter(|k| ca.get(*k) != cb.get(*k))
        .map(|(p, pol)| {
            format!(
                "{pol}{p}: {} vs {}",
                ca.get(&(p.clone(), *pol)).unwrap_or(&0),
                cb.get(&(p.clone(), *pol)).unwrap_or(&0)
            )
        })
        .collect();
    Ok(diffs.join(", "))
}

pub fn decide_iso_boolean(a: &Formula, b: &Formula) -> Result<BooleanVerdict> {
    decide_iso_boolean_capped(a, b, DEFAULT_LETTER_CAP)
}

/// Isomorphism in the Boolean category.
///
/// Both formulas are negation-reduced first (this keeps occurrence order, so
/// the witness is stated over the original occurrences). The verdict is
/// positive when the reduced formulas are equivalent with signed letters
/// read as independent atoms and have equal signed letter counts; the
/// witness then follows the left-to-right bijection.
pub fn decide_iso_boolean_capped(a: &Formula, b: &Formula, cap: usize) -> Result<BooleanVerdict> {
    let (na, nb) = (nnf_formula(a), nnf_formula(b));
    let not_iso = |reason| BooleanVerdict {
        iso: false,
        reason,
        witness: None,
    };
    if !are_equivalent_capped(&na, &nb, cap)? {
        return Ok(not_iso(BooleanReason::NotEquivalent));
    }
    if na.signed_counts()? != nb.signed_counts()? {
        return Ok(not_iso(BooleanReason::NotLetterHomogeneous(describe_counts(&na, &nb)?)));
    }
    if !are_equivalent_capped(&opaque_atoms(&na)?, &opaque_atoms(&nb)?, cap)? {
        return Ok(not_iso(BooleanReason::ComplementDependent));
    }
    let bij = left_to_right_bijection(&na, &nb);
    let w = lemma7_iso(&na, &nb, &bij)?;
    if !w.verified() {
        return Err(Error::Verification(format!("witness for {a} and {b} does not compose to identities")));
    }
    let witness = IsoWitness {
        f: TypedRelArrow::unchecked(a.clone(), b.clone(), w.f.rel),
        g: TypedRelArrow::unchecked(b.clone(), a.clone(), w.g.rel),
        ..w
    };
    Ok(BooleanVerdict {
        iso: true,
        reason: BooleanReason::Isomorphic,
        witness: Some(witness),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralityVerdict {
    pub iso: bool,
    pub reason: String,
    pub trace: Option<RewriteTrace>,
    /// Occurrence bijection carried along by the trace.
    pub bijection: Option<TypedRelArrow>,
}

/// Isomorphism in permutational, perfectly generalizable categories:
/// theoremhood of `a <-> b` with double negation and De Morgan.
pub fn decide_iso_generality(a: &Formula, b: &Formula) -> Result<GeneralityVerdict> {
    if !is_theorem_nav(a, b)? {
        return Ok(GeneralityVerdict {
            iso: false,
            reason: format!("canonical forms differ: {} vs {}", ac_canonical(a), ac_canonical(b)),
            trace: None,
            bijection: None,
        });
    }
    let trace = derive(a, b)?;
    let perm = occurrence_permutation(a, &trace)?;
    let rel = perm.iter().enumerate().map(|(i, &j)| (i, j)).collect();
    let bijection = TypedRelArrow::new(a.clone(), b.clone(), rel)?;
    if !bijection.is_bijective() {
        return Err(Error::Verification(format!("trace for {a} and {b} is not a bijection")));
    }
    Ok(GeneralityVerdict {
        iso: true,
        reason: format!("theorem: both reduce to {}", ac_canonical(a)),
        trace: Some(trace),
        bijection: Some(bijection),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::linking::Relation;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn boolean_examples() {
        let v = decide_iso_boolean(&f("p & T"), &f("p")).unwrap();
        assert!(v.iso);
        assert_eq!(v.witness.unwrap().f.rel, Relation::from([(0, 0)]));

        let v = decide_iso_boolean(&f("p & (~p | p)"), &f("p")).unwrap();
        assert!(!v.iso);
        assert!(matches!(v.reason, BooleanReason::NotLetterHomogeneous(_)));

        let v = decide_iso_boolean(&f("p | (p & q)"), &f("p & (p | q)")).unwrap();
        assert!(v.iso);
        assert!(v.witness.unwrap().verified());

        let v = decide_iso_boolean(&f("p"), &f("q")).unwrap();
        assert_eq!(v.reason, BooleanReason::NotEquivalent);
    }

    #[test]
    fn boolean_reduces_negations_first() {
        let v = decide_iso_boolean(&f("~(p & ~q)"), &f("q | ~p")).unwrap();
        assert!(v.iso);
        let w = v.witness.unwrap();
        assert_eq!(w.f.source, f("~(p & ~q)"));
        assert_eq!(w.f.rel, Relation::from([(0, 1), (1, 0)]));
    }

    #[test]
    fn complement_dependent_pairs_are_rejected() {
        let v = decide_iso_boolean(&f("q & (p | ~p)"), &f("q | (p & ~p)")).unwrap();
        assert!(!v.iso);
        assert_eq!(v.reason, BooleanReason::ComplementDependent);
    }

    #[test]
    fn generality_examples() {
        let v = decide_iso_generality(&f("~(p & q)"), &f("~p | ~q")).unwrap();
        assert!(v.iso);
        assert_eq!(v.bijection.unwrap().rel, Relation::from([(0, 0), (1, 1)]));

        let v = decide_iso_generality(&f("p | (p & q)"), &f("p & (p | q)")).unwrap();
        assert!(!v.iso);

        let v = decide_iso_generality(&f("p"), &f("p")).unwrap();
        assert!(v.iso);
        assert!(v.trace.unwrap().is_empty());

        assert!(decide_iso_generality(&f("p & T"), &f("p")).is_err());
    }
}
