//! The presentation pipeline: build a candidate ring from Laurent
//! generators, check it sits between the lower and upper bounds, run the
//! saturation test and adopt the obstructions it finds.

mod checks;
mod deep;
mod generators;
mod iterate;
mod output;
mod ring;
mod verify;

pub use checks::{
    check_lower_containment, check_upper_containment, criterion5, criterion5_with, laurent_in_adjacent_cluster,
    lifted_lower_deep_ideal, Candidate, Criterion5, LowerContainment, UpperContainment,
};
pub use deep::{deep_ideal_triviality, reduced_words, DeepIdealResult};
pub use generators::{GeneratorSet, NamedGenerator};
pub use iterate::{
    iterate, iterate_default, prune_generators, IterateOptions, IterationReport, IterationStep, SelectionPolicy,
};
pub use output::{kernel_relations, normalize_relation, presentation_from_ring, Presentation, Status};
pub use ring::{build_presentation, build_presentation_with, EngineConfig, PresentedRing};
pub use verify::{parse_claimed_relations, verify_paper_presentation, verify_parsed, CheckOutcome, VerifyReport};

#[cfg(test)]
mod tests;
