use alloc::vec;
use alloc::vec::Vec;

use crate::constructions::{halfplane_set, simplex_set, tail_set};
use crate::error::Result;
use crate::hypergraph::{enumerate_forbidden, ForbiddenHypergraph};
use crate::lattice::{Instance, PointSet};

use super::{Exactness, Method, SolveResult};

const UNDECIDED: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

/// Exact optimum by branch-and-bound for a maximum independent set of the
/// forbidden hypergraph.
///
/// Singleton supports are removed up front, supports containing a smaller
/// support are dropped, and points in no remaining support are always kept.
/// The search branches on a point of a smallest unmet support (include
/// first), forces exclusions when a support has one undecided point left, and
/// bounds a node by `included + undecided - p` where `p` is a greedy packing
/// of pairwise disjoint unmet supports. The incumbent starts from a greedy set
/// and, for `b = n`, the matching explicit construction.
///
/// Once the optimum is known a second pass walks points in index order to
/// return the lexicographically smallest optimal set. When `budget` nodes are
/// used up the result carries a proven `[lower, upper]` bracket instead.
pub fn solve_bb(inst: &Instance, budget: u64) -> Result<SolveResult> {
    if inst.is_vacuous() {
        return Ok(SolveResult::vacuous(inst));
    }
    let h = enumerate_forbidden(inst)?;
    let reduced = Reduced::new(&h);
    let mut search = Search::new(&reduced, budget.max(1));

    search.seed_greedy();
    for seed in construction_seeds(inst) {
        if h.is_independent(&seed) {
            search.offer_seed(&seed);
        }
    }
    search.maximise();

    let exactness = if search.aborted {
        Exactness::Bracketed {
            lower: reduced.base + search.best,
            upper: reduced.base + search.best.max(search.frontier),
        }
    } else {
        let target = search.best;
        if let Some(chosen) = search.canonical(target) {
            search.best_set = chosen;
        }
        Exactness::Exact
    };

    let set = reduced.expand(inst, &search.best_set);
    Ok(SolveResult {
        instance: *inst,
        mu: set.len(),
        witness_set: set,
        nodes_explored: search.nodes,
        method: Method::BranchAndBound,
        exactness,
    })
}

fn construction_seeds(inst: &Instance) -> Vec<PointSet> {
    let mut seeds = Vec::new();
    if !inst.is_diagonal() {
        return seeds;
    }
    let n = inst.target();
    let k = inst.k();
    let seed = match n.dim() {
        1 => tail_set(k, n.coord(0)),
        2 => halfplane_set(k, &n),
        _ => return seeds,
    };
    seeds.extend(seed.ok());
    if k == 2 && n.coords().iter().all(|&c| c == n.coord(0)) {
        seeds.extend(simplex_set(n.coord(0), n.dim()).ok());
    }
    seeds
}

/// The hypergraph after preprocessing, relabelled to the points that still
/// need a decision ("active" points), in index order.
struct Reduced {
    forced_out: Vec<bool>,
    /// Box index of each active point.
    active: Vec<u32>,
    /// Active id of each box index, `u32::MAX` when not active.
    local: Vec<u32>,
    edges: Vec<Vec<u32>>,
    incidence: Vec<Vec<u32>>,
    max_edge: usize,
    /// Points that are neither forced out nor active; always kept.
    base: usize,
}

impl Reduced {
    fn new(h: &ForbiddenHypergraph) -> Self {
        let volume = h.num_vertices();
        let mut forced_out = vec![false; volume];
        for e in h.edges() {
            if e.len() == 1 {
                forced_out[e[0] as usize] = true;
            }
        }

        let mut candidates: Vec<&Vec<u32>> = h
            .edges()
            .iter()
            .filter(|e| e.iter().all(|&v| !forced_out[v as usize]))
            .collect();
        candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

        // Drop supports that contain a strictly smaller kept support.
        let mut kept: Vec<Vec<u32>> = Vec::new();
        let mut starts_at: Vec<Vec<u32>> = vec![Vec::new(); volume];
        for e in candidates {
            let dominated = e.iter().any(|&u| {
                starts_at[u as usize].iter().any(|&f| {
                    let f = &kept[f as usize];
                    f.len() < e.len() && is_sorted_subset(f, e)
                })
            });
            if !dominated {
                starts_at[e[0] as usize].push(kept.len() as u32);
                kept.push(e.clone());
            }
        }

        let mut local = vec![u32::MAX; volume];
        for e in &kept {
            for &v in e {
                local[v as usize] = 0;
            }
        }
        let mut active = Vec::new();
        for (v, slot) in local.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = active.len() as u32;
                active.push(v as u32);
            }
        }
        let mut incidence = vec![Vec::new(); active.len()];
        let mut max_edge = 0;
        let edges: Vec<Vec<u32>> = kept
            .iter()
            .enumerate()
            .map(|(id, e)| {
                max_edge = max_edge.max(e.len());
                e.iter()
                    .map(|&v| {
                        let l = local[v as usize];
                        incidence[l as usize].push(id as u32);
                        l
                    })
                    .collect()
            })
            .collect();
        let removed = forced_out.iter().filter(|&&f| f).count();
        Reduced {
            base: volume - removed - active.len(),
            forced_out,
            active,
            local,
            edges,
            incidence,
            max_edge,
        }
    }

    fn expand(&self, inst: &Instance, chosen: &[bool]) -> PointSet {
        let bx = *inst.lattice_box();
        let mut set = PointSet::new(bx);
        for v in 0..bx.volume() {
            let keep = match self.local[v] {
                u32::MAX => !self.forced_out[v],
                l => chosen[l as usize],
            };
            if keep {
                set.insert_index(v);
            }
        }
        set
    }
}

fn is_sorted_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

struct Search<'a> {
    r: &'a Reduced,
    status: Vec<u8>,
    n_in: Vec<u32>,
    n_out: Vec<u32>,
    included: usize,
    undecided: usize,
    trail: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
    /// Best number of active points kept so far, and the set achieving it.
    best: usize,
    best_set: Vec<bool>,
    nodes: u64,
    budget: u64,
    aborted: bool,
    /// Largest bound among subtrees left unexplored after an abort.
    frontier: usize,
}

impl<'a> Search<'a> {
    fn new(r: &'a Reduced, budget: u64) -> Self {
        let m = r.active.len();
        Search {
            r,
            status: vec![UNDECIDED; m],
            n_in: vec![0; r.edges.len()],
            n_out: vec![0; r.edges.len()],
            included: 0,
            undecided: m,
            trail: Vec::with_capacity(m),
            stamp: vec![0; m],
            epoch: 0,
            best: 0,
            best_set: vec![false; m],
            nodes: 0,
            budget,
            aborted: false,
            frontier: 0,
        }
    }

    fn exclude(&mut self, v: u32) {
        self.status[v as usize] = OUT;
        self.undecided -= 1;
        self.trail.push(v);
        for &e in &self.r.incidence[v as usize] {
            self.n_out[e as usize] += 1;
        }
    }

    /// Includes `v` and excludes every point it leaves as the last undecided
    /// member of an unmet support. Returns false on a completed support.
    fn include(&mut self, v: u32) -> bool {
        self.status[v as usize] = IN;
        self.included += 1;
        self.undecided -= 1;
        self.trail.push(v);
        let r = self.r;
        let mut ok = true;
        for &e in &r.incidence[v as usize] {
            let e = e as usize;
            self.n_in[e] += 1;
            if self.n_out[e] != 0 {
                continue;
            }
            let size = r.edges[e].len() as u32;
            if self.n_in[e] == size {
                ok = false;
            } else if self.n_in[e] + 1 == size {
                let last = r.edges[e]
                    .iter()
                    .copied()
                    .find(|&u| self.status[u as usize] == UNDECIDED);
                if let Some(u) = last {
                    self.exclude(u);
                }
            }
        }
        ok
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap() as usize;
            let counts = if self.status[v] == IN {
                self.included -= 1;
                &mut self.n_in
            } else {
                &mut self.n_out
            };
            for &e in &self.r.incidence[v] {
                counts[e as usize] -= 1;
            }
            self.status[v] = UNDECIDED;
            self.undecided += 1;
        }
    }

    /// Upper bound for the current node and a smallest unmet support, if any
    /// support is still unmet.
    fn bound(&mut self) -> (usize, Option<usize>) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        let r = self.r;
        let mut packing = 0;
        let mut smallest = None;
        for open in 1..=r.max_edge as u32 {
            for (e, members) in r.edges.iter().enumerate() {
                if self.n_out[e] != 0 || members.len() as u32 - self.n_in[e] != open {
                    continue;
                }
                smallest.get_or_insert(e);
                let free = members.iter().all(|&u| {
                    self.status[u as usize] != UNDECIDED || self.stamp[u as usize] != self.epoch
                });
                if free {
                    for &u in members {
                        if self.status[u as usize] == UNDECIDED {
                            self.stamp[u as usize] = self.epoch;
                        }
                    }
                    packing += 1;
                }
            }
        }
        (self.included + self.undecided - packing, smallest)
    }

    fn snapshot(&self) -> Vec<bool> {
        self.status.iter().map(|&s| s != OUT).collect()
    }

    fn seed_greedy(&mut self) {
        for v in 0..self.status.len() as u32 {
            if self.status[v as usize] == UNDECIDED {
                let mark = self.trail.len();
                if !self.include(v) {
                    self.undo(mark);
                    self.exclude(v);
                }
            }
        }
        if self.included > self.best {
            self.best = self.included;
            self.best_set = self.snapshot();
        }
        self.undo(0);
    }

    fn offer_seed(&mut self, seed: &PointSet) {
        let chosen: Vec<bool> = self
            .r
            .active
            .iter()
            .map(|&v| seed.contains_index(v as usize))
            .collect();
        let size = chosen.iter().filter(|&&c| c).count();
        if size > self.best {
            self.best = size;
            self.best_set = chosen;
        }
    }

    fn maximise(&mut self) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        let (bound, edge) = self.bound();
        let Some(edge) = edge else {
            let value = self.included + self.undecided;
            if value > self.best {
                self.best = value;
                self.best_set = self.snapshot();
            }
            return;
        };
        if bound <= self.best {
            return;
        }
        if self.nodes >= self.budget {
            self.aborted = true;
            self.frontier = self.frontier.max(bound);
            return;
        }
        let v = self.first_undecided(edge);
        let mark = self.trail.len();
        if self.include(v) {
            self.maximise();
        }
        self.undo(mark);
        self.exclude(v);
        if self.aborted {
            // The exclude branch was never entered.
            let (b, _) = self.bound();
            self.frontier = self.frontier.max(b);
        } else {
            self.maximise();
        }
        self.undo(mark);
    }

    fn first_undecided(&self, edge: usize) -> u32 {
        self.r.edges[edge]
            .iter()
            .copied()
            .find(|&u| self.status[u as usize] == UNDECIDED)
            .expect("unmet support has an undecided point")
    }

    /// Lexicographically first set of `target` active points, walking points
    /// in index order with include tried first. `None` if the budget runs
    /// out first.
    fn canonical(&mut self, target: usize) -> Option<Vec<bool>> {
        let mut out = None;
        let mut exhausted = false;
        self.lex_walk(target, &mut out, &mut exhausted);
        self.undo(0);
        out
    }

    fn lex_walk(&mut self, target: usize, out: &mut Option<Vec<bool>>, exhausted: &mut bool) -> bool {
        if *exhausted {
            return false;
        }
        self.nodes += 1;
        let (bound, edge) = self.bound();
        if edge.is_none() {
            if self.included + self.undecided == target {
                *out = Some(self.snapshot());
                return true;
            }
            return false;
        }
        if bound < target {
            return false;
        }
        if self.nodes >= self.budget {
            *exhausted = true;
            return false;
        }
        let v = self
            .status
            .iter()
            .position(|&s| s == UNDECIDED)
            .expect("open support implies an undecided point") as u32;
        let unconstrained = self.r.incidence[v as usize]
            .iter()
            .all(|&e| self.n_out[e as usize] != 0);
        let mark = self.trail.len();
        if self.include(v) && self.lex_walk(target, out, exhausted) {
            return true;
        }
        self.undo(mark);
        if unconstrained {
            return false;
        }
        self.exclude(v);
        let found = self.lex_walk(target, out, exhausted);
        self.undo(mark);
        found
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{is_free, LatticePoint};
    use crate::solver::solve_exhaustive;

    fn diag(k: u32, n: &[i64]) -> Instance {
        Instance::diagonal(k, LatticePoint::new(n).unwrap()).unwrap()
    }

    #[test]
    fn six_by_six_three_sum() {
        let r = solve_bb(&diag(3, &[6, 6]), 1 << 24).unwrap();
        assert!(r.is_exact());
        assert!((30..=36).contains(&r.mu));
        assert!(is_free(&r.witness_set, &r.instance).unwrap());
    }

    #[test]
    fn four_by_four_two_sum() {
        let r = solve_bb(&diag(2, &[4, 4]), 1 << 20).unwrap();
        assert_eq!(r.mu, 11);
    }

    #[test]
    fn vacuous_uses_no_nodes() {
        let r = solve_bb(&diag(5, &[4, 4]), 10).unwrap();
        assert_eq!((r.mu, r.nodes_explored, r.method), (16, 0, Method::Vacuous));
    }

    #[test]
    fn agrees_with_exhaustive_witness() {
        for (k, n) in [(2, [3, 4]), (3, [4, 4]), (3, [5, 6]), (4, [5, 5]), (2, [5, 5])] {
            let inst = diag(k, &n);
            let a = solve_bb(&inst, 1 << 24).unwrap();
            let b = solve_exhaustive(&inst).unwrap();
            assert_eq!(a.mu, b.mu, "k={k} n={n:?}");
            assert_eq!(a.witness_set, b.witness_set, "k={k} n={n:?}");
        }
    }

    #[test]
    fn tiny_budget_brackets() {
        let r = solve_bb(&diag(3, &[7, 7]), 2).unwrap();
        match r.exactness {
            Exactness::Bracketed { lower, upper } => {
                assert!(lower <= upper);
                assert_eq!(lower, r.mu);
                assert!(is_free(&r.witness_set, &r.instance).unwrap());
            }
            Exactness::Exact => {}
        }
    }

    #[test]
    fn sorted_subset() {
        assert!(is_sorted_subset(&[1, 4], &[0, 1, 3, 4]));
        assert!(!is_sorted_subset(&[1, 5], &[0, 1, 3, 4]));
    }
}
