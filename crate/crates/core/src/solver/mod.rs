//! Exact maximum free-set size `mu_{k,b}(n)` and free-set counting.
//!
//! Three independent routes compute the optimum: [`solve_exhaustive`]
//! (complete scan of complements by increasing size), [`solve_bb`]
//! (branch-and-bound on the forbidden hypergraph) and, for `k = 2`,
//! [`solve_k2_pairing`] (the involution `x <-> b - x`). All of them return the
//! lexicographically smallest maximum free set under dense-index order.

mod bb;
mod count;
mod exhaustive;
mod pairing;

pub use bb::solve_bb;
pub use count::{count_free, count_maximal_free, COUNT_MAX_VOLUME};
pub use exhaustive::{solve_exhaustive, EXHAUSTIVE_MAX_VOLUME};
pub use pairing::solve_k2_pairing;

use core::fmt;

use crate::constructions::box_complement_reduction;
use crate::error::{Error, Result};
use crate::lattice::{Instance, LatticeBox, LatticePoint, PointSet};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Exhaustive,
    BranchAndBound,
    Pairing,
    Vacuous,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::BranchAndBound => "branch-and-bound",
            Method::Pairing => "pairing",
            Method::Vacuous => "vacuous",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether a result is the exact optimum or only a proven bracket.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Exactness {
    Exact,
    /// The node budget ran out; the optimum lies in `lower..=upper`.
    Bracketed { lower: usize, upper: usize },
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub instance: Instance,
    /// The optimum, or the best size found when the result is bracketed.
    pub mu: usize,
    /// A free set of size `mu`.
    pub witness_set: PointSet,
    pub nodes_explored: u64,
    pub method: Method,
    pub exactness: Exactness,
}

impl SolveResult {
    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }

    pub fn lower(&self) -> usize {
        match self.exactness {
            Exactness::Exact => self.mu,
            Exactness::Bracketed { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> usize {
        match self.exactness {
            Exactness::Exact => self.mu,
            Exactness::Bracketed { upper, .. } => upper,
        }
    }

    fn vacuous(inst: &Instance) -> Self {
        let full = PointSet::full(*inst.lattice_box());
        SolveResult {
            instance: *inst,
            mu: full.len(),
            witness_set: full,
            nodes_explored: 0,
            method: Method::Vacuous,
            exactness: Exactness::Exact,
        }
    }
}

/// Solver selection for [`solve`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SolverChoice {
    /// Pairing for `k = 2`, branch-and-bound otherwise.
    #[default]
    Auto,
    Exhaustive,
    BranchAndBound,
    Pairing,
}

pub fn solve(inst: &Instance, choice: SolverChoice, budget: u64) -> Result<SolveResult> {
    match choice {
        SolverChoice::Auto if inst.k() == 2 => {
            solve_k2_pairing(&inst.target(), &inst.lattice_box().extent())
        }
        SolverChoice::Auto | SolverChoice::BranchAndBound => solve_bb(inst, budget),
        SolverChoice::Exhaustive => solve_exhaustive(inst),
        SolverChoice::Pairing => {
            if inst.k() != 2 {
                return Err(Error::Unsupported("pairing solver requires k = 2"));
            }
            solve_k2_pairing(&inst.target(), &inst.lattice_box().extent())
        }
    }
}

/// `|n| - |b| + mu_{k,b}(b)`, with the inner optimum computed by
/// branch-and-bound on `[b]`.
///
/// The returned witness is `([n] \ [b]) ∪ S_b` for the inner optimum `S_b`;
/// a bracketed inner solve yields a bracketed result shifted by `|n| - |b|`.
pub fn mu_via_reduction(
    k: u32,
    target: LatticePoint,
    extent: LatticePoint,
    budget: u64,
) -> Result<SolveResult> {
    let outer = Instance::new(k, target, LatticeBox::new(extent)?)?;
    if !target.le_all(&extent) {
        return Err(Error::TargetOutsideBox);
    }
    if outer.is_vacuous() {
        return Ok(SolveResult::vacuous(&outer));
    }
    let inner = solve_bb(&Instance::diagonal(k, target)?, budget)?;
    let shift = outer.lattice_box().volume() - inner.instance.lattice_box().volume();
    let built = box_complement_reduction(&outer, &inner.witness_set)?;
    let exactness = match inner.exactness {
        Exactness::Exact => Exactness::Exact,
        Exactness::Bracketed { lower, upper } => Exactness::Bracketed {
            lower: lower + shift,
            upper: upper + shift,
        },
    };
    Ok(SolveResult {
        instance: outer,
        mu: inner.mu + shift,
        witness_set: built.set,
        nodes_explored: inner.nodes_explored,
        method: inner.method,
        exactness,
    })
}
