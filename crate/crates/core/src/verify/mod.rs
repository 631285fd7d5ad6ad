//! Verification suites: seeded randomized and exhaustive checks of the
//! identities implemented elsewhere in the crate.

/// Both sides of an identity together with the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck<T> {
    pub holds: bool,
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> IdentityCheck<T> {
    pub fn new(lhs: T, rhs: T) -> Self {
        IdentityCheck {
            holds: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

pub mod suites;

pub use suites::{run_suite, Counterexample, Suite, SuiteConfig, SuiteReport};
