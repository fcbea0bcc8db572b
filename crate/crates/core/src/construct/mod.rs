//! Witness constructions and the two isomorphism deciders.
//!
//! Arrows are represented only by their occurrence relations. Two arrows of
//! the Boolean category are equal exactly when their relations are, so a
//! witness is verified by comparing composites with identity relations.

pub mod arrows;
mod decide;
mod labeled;
mod lemmas;

pub use decide::{
    decide_iso_boolean, decide_iso_boolean_capped, decide_iso_generality, BooleanReason, BooleanVerdict,
    GeneralityVerdict,
};
pub use labeled::LabeledFormula;
pub use lemmas::{
    left_to_right_bijection, lemma4_extract, lemma5_implant, lemma6_arrow, lemma7_iso, opaque_atoms, IsoWitness,
    Lemma4, Lemma5, WitnessJson,
};
