//! Decision engine for forall-exist integer statements.
//!
//! Given an integer matrix `W` and a bounded convex set `Q`, the engine
//! decides whether every integer point `b` of `Q` admits an integer solution
//! of `W x <= b`, producing an explicit integral counterexample `b` when the
//! statement fails. All arithmetic is exact (arbitrary-precision integers and
//! rationals); verdicts carry independently re-verified witnesses.
//!
//! The main entry points are [`pipeline::decide`] for the full reduction
//! chain, [`cells::solve`] for the terminal finite-shift problem,
//! [`oracle::decide_naive`] for the brute-force ground truth, and
//! [`frobenius`] for diagonal Frobenius bounds.

pub mod body;
pub mod cells;
pub mod error;
pub mod frobenius;
pub mod instance;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod pipeline;
pub mod polyhedra;

pub use error::{Error, Result};
pub use linalg::{Int, IntMatrix, IntVec, Rat, RatMatrix, RatVec};

use std::cell::Cell;

/// Countdown guard against runaway enumeration.
///
/// Every major search loop charges one unit per visited candidate; exceeding
/// the budget aborts with [`Error::BudgetExceeded`] instead of running
/// unbounded.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: Cell::new(0) }
    }

    /// A budget large enough for every desk-scale workload in the test suite.
    pub fn default_limit() -> u64 {
        50_000_000
    }

    pub fn charge(&self, n: u64) -> Result<()> {
        let used = self.used.get().saturating_add(n);
        self.used.set(used);
        if used > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::default_limit())
    }
}
