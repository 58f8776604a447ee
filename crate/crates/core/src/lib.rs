//! Personality-conditioned surface realization for task-oriented dialog
//! meaning representations, plus the evaluation harness that audits what the
//! outputs say (slot deletions, repetitions, hallucinations) and measures how
//! they say it (aggregation operations, pragmatic markers, cross-model
//! correlations, corpus metrics).

pub mod mr;
pub mod lexicon;
pub mod persona;
pub(crate) mod textmatch;

pub use mr::{
    delexicalize, parse_mr, relexicalize, serialize_mr, DelexMap, MeaningRepresentation, MrError,
    PersonalityId, Placeholder, Slot, SlotName,
};
