//! The forbidden hypergraph: one edge per distinct support of a solution
//! `a_1 + ... + a_k = b` inside the box.
//!
//! A set contains a solution exactly when it contains some edge entirely, so
//! free sets are the independent sets of this hypergraph.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{Instance, LatticePoint, PointSet};

/// Enumeration stops with a capacity error past this many solution supports.
pub const MAX_EDGES: usize = 1 << 22;

#[derive(Clone, Debug)]
pub struct ForbiddenHypergraph {
    instance: Instance,
    edges: Vec<Vec<u32>>,
    incidence: Vec<Vec<u32>>,
}

impl ForbiddenHypergraph {
    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn num_vertices(&self) -> usize {
        self.incidence.len()
    }

    /// Edges as sorted lists of dense box indices, in lexicographic order.
    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// Ids of the edges containing vertex `v`.
    pub fn edges_of(&self, v: usize) -> &[u32] {
        &self.incidence[v]
    }

    /// Edge points, for display.
    pub fn edge_points(&self, edge: usize) -> Vec<LatticePoint> {
        let bx = self.instance.lattice_box();
        self.edges[edge]
            .iter()
            .map(|&v| bx.point_at(v as usize))
            .collect()
    }

    /// First edge (by id) lying entirely inside `s`.
    pub fn contained_edge(&self, s: &PointSet) -> Option<usize> {
        self.edges
            .iter()
            .position(|e| e.iter().all(|&v| s.contains_index(v as usize)))
    }

    /// True when `s` contains no edge.
    pub fn is_independent(&self, s: &PointSet) -> bool {
        self.contained_edge(s).is_none()
    }
}

/// Enumerates every solution multiset in non-decreasing index order and
/// collapses it to its support.
pub fn enumerate_forbidden(inst: &Instance) -> Result<ForbiddenHypergraph> {
    let bx = *inst.lattice_box();
    let volume = bx.volume();
    let mut edges: Vec<Vec<u32>> = Vec::new();

    if !inst.is_vacuous() {
        let points: Vec<LatticePoint> = bx.points().collect();
        let mut gen = Compositions {
            inst,
            points: &points,
            path: Vec::with_capacity(inst.k() as usize),
            out: &mut edges,
        };
        gen.walk(inst.target(), inst.k(), 0)?;
        edges.sort_unstable();
        edges.dedup();
    }

    let mut incidence = vec![Vec::new(); volume];
    for (id, e) in edges.iter().enumerate() {
        for &v in e {
            incidence[v as usize].push(id as u32);
        }
    }
    Ok(ForbiddenHypergraph {
        instance: *inst,
        edges,
        incidence,
    })
}

struct Compositions<'a> {
    inst: &'a Instance,
    points: &'a [LatticePoint],
    path: Vec<u32>,
    out: &'a mut Vec<Vec<u32>>,
}

impl Compositions<'_> {
    fn walk(&mut self, residual: LatticePoint, remaining: u32, start: usize) -> Result<()> {
        let bx = self.inst.lattice_box();
        if remaining == 1 {
            if let Some(i) = bx.index_of(&residual) {
                if i >= start {
                    self.path.push(i as u32);
                    self.emit()?;
                    self.path.pop();
                }
            }
            return Ok(());
        }
        let rem = remaining as i64;
        for i in start..self.points.len() {
            let p = self.points[i];
            if p.coord(0) * rem > residual.coord(0) {
                break;
            }
            let next = residual.checked_sub(&p)?;
            if next.coords().iter().any(|&c| c < rem - 1) {
                continue;
            }
            self.path.push(i as u32);
            self.walk(next, remaining - 1, i)?;
            self.path.pop();
        }
        Ok(())
    }

    fn emit(&mut self) -> Result<()> {
        if self.out.len() >= MAX_EDGES {
            return Err(Error::Capacity {
                size: self.out.len() as u64 + 1,
                limit: MAX_EDGES as u64,
            });
        }
        let mut support = self.path.clone();
        support.dedup();
        self.out.push(support);
        Ok(())
    }
}
