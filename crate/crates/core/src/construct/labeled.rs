use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::linking::Relation;

/// A negation-free formula whose letter leaves carry provenance labels.
///
/// Labels start out as occurrence indices of some source formula and are
/// carried along when subtrees are moved or copied, so the occurrence
/// relation of a transformation can be read off the leaves of the result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabeledFormula {
    Top,
    Bot,
    Leaf { letter: String, label: usize },
    And(Box<LabeledFormula>, Box<LabeledFormula>),
    Or(Box<LabeledFormula>, Box<LabeledFormula>),
}

impl LabeledFormula {
    /// Labels leaves `offset, offset + 1, ...` left to right.
    pub fn from_formula(f: &Formula, offset: usize) -> Result<Self> {
        fn go(f: &Formula, next: &mut usize) -> Result<LabeledFormula> {
            Ok(match f {
                Formula::Top => LabeledFormula::Top,
                Formula::Bot => LabeledFormula::Bot,
                Formula::Letter(p) => {
                    let label = *next;
                    *next += 1;
                    LabeledFormula::Leaf {
                        letter: p.clone(),
                        label,
                    }
                }
                Formula::Not(_) => {
                    return Err(Error::WrongLanguage {
                        language: "the {T, F, &, |} language (negation is not allowed)",
                        detail: f.to_string(),
                    })
                }
                Formula::And(a, b) => LabeledFormula::and(go(a, next)?, go(b, next)?),
                Formula::Or(a, b) => LabeledFormula::or(go(a, next)?, go(b, next)?),
            })
        }
        let mut next = offset;
        go(f, &mut next)
    }

    pub fn and(a: LabeledFormula, b: LabeledFormula) -> Self {
        LabeledFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: LabeledFormula, b: LabeledFormula) -> Self {
        LabeledFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn to_formula(&self) -> Formula {
        match self {
            LabeledFormula::Top => Formula::Top,
            LabeledFormula::Bot => Formula::Bot,
            LabeledFormula::Leaf { letter, .. } => Formula::letter(letter.clone()),
            LabeledFormula::And(a, b) => Formula::and(a.to_formula(), b.to_formula()),
            LabeledFormula::Or(a, b) => Formula::or(a.to_formula(), b.to_formula()),
        }
    }

    pub fn labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            LabeledFormula::Top | LabeledFormula::Bot => {}
            LabeledFormula::Leaf { label, .. } => out.push(*label),
            LabeledFormula::And(a, b) | LabeledFormula::Or(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    pub fn label_set(&self) -> BTreeSet<usize> {
        self.labels().into_iter().collect()
    }

    /// `{(label, position)}` with this formula read as the target.
    pub fn provenance(&self) -> Relation {
        self.labels()
            .into_iter()
            .enumerate()
            .map(|(j, label)| (label, j))
            .collect()
    }

    /// Replaces the leaf carrying `label` by `f(leaf)`.
    pub fn replace_leaf(&self, label: usize, f: &impl Fn(&LabeledFormula) -> LabeledFormula) -> LabeledFormula {
        match self {
            LabeledFormula::Leaf { label: l, .. } if *l == label => f(self),
            LabeledFormula::And(a, b) => {
                LabeledFormula::and(a.replace_leaf(label, f), b.replace_leaf(label, f))
            }
            LabeledFormula::Or(a, b) => LabeledFormula::or(a.replace_leaf(label, f), b.replace_leaf(label, f)),
            _ => self.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn labels_follow_occurrences() {
        let l = LabeledFormula::from_formula(&parse("p & (T | q)").unwrap(), 1).unwrap();
        assert_eq!(l.labels(), vec![1, 2]);
        assert_eq!(l.to_formula(), parse("p & (T | q)").unwrap());
        assert!(LabeledFormula::from_formula(&parse("~p").unwrap(), 0).is_err());
    }

    #[test]
    fn provenance_of_copies() {
        let p = LabeledFormula::Leaf { letter: "p".into(), label: 0 };
        let q = LabeledFormula::Leaf { letter: "q".into(), label: 1 };
        let t = LabeledFormula::or(LabeledFormula::and(p, q.clone()), q);
        assert_eq!(t.provenance(), Relation::from([(0, 0), (1, 1), (1, 2)]));
    }
}
