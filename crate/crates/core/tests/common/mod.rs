//! Brute-force oracles that share no code path with the library search.
#![allow(dead_code)]

use sumfree_core::{Instance, LatticePoint, PointSet};

/// Every multiset of `k` members (as sorted index lists) summing to the
/// target, by plain enumeration of index combinations with repetition.
pub fn solution_multisets(s: &PointSet, inst: &Instance) -> Vec<Vec<usize>> {
    let members: Vec<usize> = s.indices().collect();
    let bx = *inst.lattice_box();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        members: &[usize],
        from: usize,
        left: u32,
        pick: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        check: &dyn Fn(&[usize]) -> bool,
    ) {
        if left == 0 {
            if check(pick) {
                out.push(pick.clone());
            }
            return;
        }
        for i in from..members.len() {
            pick.push(members[i]);
            rec(members, i, left - 1, pick, out, check);
            pick.pop();
        }
    }
    let target = inst.target();
    let check = |idx: &[usize]| {
        let d = target.dim();
        (0..d).all(|axis| {
            idx.iter().map(|&i| bx.point_at(i).coord(axis)).sum::<i64>() == target.coord(axis)
        })
    };
    rec(&members, 0, inst.k(), &mut pick, &mut out, &check);
    out
}

pub fn brute_is_free(s: &PointSet, inst: &Instance) -> bool {
    solution_multisets(s, inst).is_empty()
}

/// Maximum free-set size over all `2^|n|` subsets.
pub fn brute_mu(inst: &Instance) -> usize {
    let bx = *inst.lattice_box();
    let v = bx.volume();
    assert!(v <= 16, "brute force limited to 16 points");
    let mut best = 0;
    for mask in 0u32..(1 << v) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let s = PointSet::from_indices(bx, (0..v).filter(|&i| mask >> i & 1 == 1)).unwrap();
        if brute_is_free(&s, inst) {
            best = size;
        }
    }
    best
}

pub fn pt(c: &[i64]) -> LatticePoint {
    LatticePoint::new(c).unwrap()
}
