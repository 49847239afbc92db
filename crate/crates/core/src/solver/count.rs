use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::enumerate_forbidden;
use crate::lattice::Instance;

/// Counting walks every free set, so boxes are capped at this many points.
pub const COUNT_MAX_VOLUME: usize = 20;

/// Number of free subsets of the box, including the empty set.
pub fn count_free(inst: &Instance) -> Result<u64> {
    Ok(FreeSetWalker::new(inst)?.run().0)
}

/// Number of free subsets that have no free proper superset.
pub fn count_maximal_free(inst: &Instance) -> Result<u64> {
    Ok(FreeSetWalker::new(inst)?.run().1)
}

struct FreeSetWalker {
    volume: usize,
    /// Edge masks grouped by vertex.
    edges_of: Vec<Vec<u32>>,
    free: u64,
    maximal: u64,
}

impl FreeSetWalker {
    fn new(inst: &Instance) -> Result<Self> {
        let volume = inst.lattice_box().volume();
        if volume > COUNT_MAX_VOLUME {
            return Err(Error::Capacity {
                size: volume as u64,
                limit: COUNT_MAX_VOLUME as u64,
            });
        }
        let h = enumerate_forbidden(inst)?;
        let mut edges_of = vec![Vec::new(); volume];
        for e in h.edges() {
            let mask = e.iter().fold(0u32, |m, &v| m | 1 << v);
            for &v in e {
                edges_of[v as usize].push(mask);
            }
        }
        Ok(FreeSetWalker {
            volume,
            edges_of,
            free: 0,
            maximal: 0,
        })
    }

    fn run(mut self) -> (u64, u64) {
        self.walk(0, 0);
        (self.free, self.maximal)
    }

    /// True when adding `v` to `chosen` completes an edge.
    fn blocked(&self, chosen: u32, v: usize) -> bool {
        let with = chosen | 1 << v;
        self.edges_of[v].iter().any(|&e| e & !with == 0)
    }

    fn walk(&mut self, v: usize, chosen: u32) {
        if v == self.volume {
            self.free += 1;
            let maximal = (0..self.volume)
                .filter(|&u| chosen >> u & 1 == 0)
                .all(|u| self.blocked(chosen, u));
            if maximal {
                self.maximal += 1;
            }
            return;
        }
        if !self.blocked(chosen, v) {
            self.walk(v + 1, chosen | 1 << v);
        }
        self.walk(v + 1, chosen);
    }
}
