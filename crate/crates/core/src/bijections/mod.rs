//! Executable combinatorial maps and an exhaustive checking harness.
//!
//! Every map returns a [`Step`] that records what happened, so the command
//! line can print a one-line trace. Domain violations are reported as
//! [`BijectionError::Precondition`] instead of panicking.

mod cor36;
mod cor38;
mod excess;
mod franklin;
mod frobenius_maps;
mod harness;
mod suites;
mod triples;

use std::fmt;

use thiserror::Error;

use crate::partition::PartitionError;

pub use cor36::{cor36_involution, enumerate_cor36, Cor36Triple};
pub use cor38::{cor38_domain, cor38_fixed_point_map, cor38_involution, is_cor38_fixed};
pub use excess::{kth_excess_merge, kth_excess_split};
pub use franklin::{franklin, is_pentagonal_staircase};
pub use frobenius_maps::{crank0_map, crank_le_neg_j_map};
pub use harness::{check_injection, check_involution, signed_counts, InjectionReport, MapReport};
pub use suites::{run_suite, SuiteReport, SUITES};
pub use triples::{
    enumerate_adjusted, enumerate_tj, first_cancellation, is_first_cancellation_fixed,
    peak_reduction, peak_reduction_inverse, second_cancellation, second_cancellation_adjust,
    second_cancellation_unadjust, AdjustedTriple, TripleTj,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{0}")]
    Precondition(String),
    #[error("malformed triple: {0}")]
    Shape(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// What a single application of a map did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    Fixed,
    Moved {
        part: u32,
        from: &'static str,
        to: &'static str,
    },
    Mapped,
}

/// Input, output and the action taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step<T> {
    pub input: T,
    pub output: T,
    pub action: Action,
}

impl<T: Clone> Step<T> {
    pub(crate) fn fixed(input: T) -> Self {
        Step {
            output: input.clone(),
            input,
            action: Action::Fixed,
        }
    }

    pub(crate) fn moved(
        input: T,
        output: T,
        part: u32,
        from: &'static str,
        to: &'static str,
    ) -> Self {
        Step {
            input,
            output,
            action: Action::Moved { part, from, to },
        }
    }

    pub(crate) fn mapped(input: T, output: T) -> Self {
        Step {
            input,
            output,
            action: Action::Mapped,
        }
    }

    pub fn is_fixed(&self) -> bool {
        self.action == Action::Fixed
    }
}

impl<T: fmt::Display> fmt::Display for Step<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {}", self.input, self.output)?;
        match &self.action {
            Action::Fixed => write!(f, " [fixed]"),
            Action::Moved { part, from, to } => {
                write!(f, " [moved: part {part} from {from} to {to}]")
            }
            Action::Mapped => Ok(()),
        }
    }
}
