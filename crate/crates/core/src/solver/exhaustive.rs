use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::enumerate_forbidden;
use crate::lattice::{Instance, PointSet};

use super::{Exactness, Method, SolveResult};

/// Largest box the exhaustive solver accepts (one bit per point in a `u64`).
pub const EXHAUSTIVE_MAX_VOLUME: usize = 36;

/// Exact optimum by scanning candidate sets in decreasing cardinality.
///
/// A subset of size `|n| - t` is free exactly when its complement of size `t`
/// meets every forbidden support, so the scan runs over complements for
/// `t = 0, 1, 2, ...` and stops at the first size that admits one. Within a
/// size every candidate is enumerated, branching on the first support the
/// partial complement has not met yet. No bounds or incumbents are used.
pub fn solve_exhaustive(inst: &Instance) -> Result<SolveResult> {
    let bx = *inst.lattice_box();
    let volume = bx.volume();
    if volume > EXHAUSTIVE_MAX_VOLUME {
        return Err(Error::Capacity {
            size: volume as u64,
            limit: EXHAUSTIVE_MAX_VOLUME as u64,
        });
    }
    if inst.is_vacuous() {
        return Ok(SolveResult::vacuous(inst));
    }
    let h = enumerate_forbidden(inst)?;
    let mut scan = ComplementScan {
        edges: h
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect(),
        best: None,
        nodes: 0,
    };
    for size in 0..=volume {
        scan.search(0, 0, size);
        if scan.best.is_some() {
            break;
        }
    }
    let removed = scan.best.unwrap_or(0);
    let set = PointSet::from_indices(bx, (0..volume).filter(|&i| removed >> i & 1 == 0))?;
    Ok(SolveResult {
        instance: *inst,
        mu: set.len(),
        witness_set: set,
        nodes_explored: scan.nodes,
        method: Method::Exhaustive,
        exactness: Exactness::Exact,
    })
}

struct ComplementScan {
    edges: Vec<u64>,
    best: Option<u64>,
    nodes: u64,
}

impl ComplementScan {
    fn search(&mut self, removed: u64, banned: u64, left: usize) {
        self.nodes += 1;
        let Some(&edge) = self.edges.iter().find(|&&e| e & removed == 0) else {
            self.offer(removed);
            return;
        };
        if left == 0 {
            return;
        }
        // Vertices tried earlier at this level are banned below it, so each
        // complement is produced once.
        let mut banned = banned;
        let mut rest = edge & !banned;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            self.search(removed | bit, banned, left - 1);
            banned |= bit;
        }
    }

    /// Keeps the complement whose free set is lexicographically smallest.
    fn offer(&mut self, removed: u64) {
        let better = match self.best {
            None => true,
            Some(cur) => {
                let diff = cur ^ removed;
                // The free set that owns the lowest differing index wins.
                diff != 0 && cur & diff & diff.wrapping_neg() != 0
            }
        };
        if better {
            self.best = Some(removed);
        }
    }
}
