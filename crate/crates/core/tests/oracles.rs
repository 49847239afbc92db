//! Worked values checked against brute-force enumeration.

mod common;

use common::{brute_is_free, brute_mu, pt, solution_multisets};
use sumfree_core::bounds::{k2_exact_2d, pick_interior, triangle_interior_enumerate, LatticeTriangle};
use sumfree_core::constructions::{halfplane_2d, simplex_k2};
use sumfree_core::solver::{count_free, count_maximal_free, solve_bb, solve_exhaustive, solve_k2_pairing};
use sumfree_core::{enumerate_forbidden, find_witness, Instance, LatticeBox, PointSet};

#[test]
fn no_three_multiset_without_corner() {
    let inst = Instance::diagonal(3, pt(&[3, 3])).unwrap();
    let mut s = PointSet::full(*inst.lattice_box());
    s.remove(&pt(&[1, 1])).unwrap();
    assert!(solution_multisets(&s, &inst).is_empty());
    assert_eq!(find_witness(&s, &inst).unwrap(), None);
}

#[test]
fn brute_force_optima_match_worked_values() {
    // (k, b, n, mu) frozen from brute_mu.
    let cases: &[(u32, &[i64], &[i64], usize)] = &[
        (2, &[3, 3], &[3, 3], 7),
        (3, &[3, 3], &[3, 3], 8),
        (4, &[3, 3], &[3, 3], 9),
        (2, &[5], &[5], 3),
        (2, &[4, 4], &[4, 4], 11),
        (2, &[2, 2], &[4, 4], 15),
        (3, &[9], &[9], 6),
    ];
    for &(k, b, n, mu) in cases {
        let inst = Instance::new(k, pt(b), LatticeBox::from_extent(n).unwrap()).unwrap();
        assert_eq!(brute_mu(&inst), mu, "oracle k={k} b={b:?} n={n:?}");
        assert_eq!(solve_exhaustive(&inst).unwrap().mu, mu);
        assert_eq!(solve_bb(&inst, 1 << 20).unwrap().mu, mu);
        if k == 2 {
            assert_eq!(solve_k2_pairing(&pt(b), &pt(n)).unwrap().mu, mu);
        }
    }
}

#[test]
fn larger_worked_values() {
    // 5x5 with k=3, b=(3,3): only (1,1) is forbidden.
    let inst = Instance::new(3, pt(&[3, 3]), LatticeBox::from_extent(&[5, 5]).unwrap()).unwrap();
    assert_eq!(solve_exhaustive(&inst).unwrap().mu, 24);
    // 6x6, k=3: the half-plane set has 30 points; the optimum is 32.
    let inst = Instance::diagonal(3, pt(&[6, 6])).unwrap();
    assert_eq!(halfplane_2d(3, pt(&[6, 6])).unwrap().set.len(), 30);
    let ex = solve_exhaustive(&inst).unwrap();
    assert_eq!(ex.mu, 32);
    assert_eq!(solve_bb(&inst, 1 << 20).unwrap().mu, 32);
    // Simplex on [3]^2 is one short of the optimum.
    let r = simplex_k2(3, 2).unwrap();
    assert_eq!(r.set.len() + 1, solve_exhaustive(&r.instance).unwrap().mu);
}

#[test]
fn forbidden_supports_of_two_sum_four() {
    let inst = Instance::diagonal(2, pt(&[4, 4])).unwrap();
    let full = PointSet::full(*inst.lattice_box());
    let mut supports: Vec<Vec<usize>> = solution_multisets(&full, &inst)
        .into_iter()
        .map(|mut m| {
            m.dedup();
            m
        })
        .collect();
    supports.sort();
    supports.dedup();
    let h = enumerate_forbidden(&inst).unwrap();
    let got: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| v as usize).collect())
        .collect();
    assert_eq!(got, supports);
    assert_eq!(got.len(), 5);
}

#[test]
fn counting_worked_values() {
    let one_d = |k: u32, n: i64| Instance::diagonal(k, pt(&[n])).unwrap();
    let naive = |inst: &Instance| {
        let bx = *inst.lattice_box();
        let v = bx.volume();
        let sets: Vec<PointSet> = (0u32..1 << v)
            .map(|m| PointSet::from_indices(bx, (0..v).filter(|&i| m >> i & 1 == 1)).unwrap())
            .filter(|s| brute_is_free(s, inst))
            .collect();
        let maximal = sets
            .iter()
            .filter(|s| !sets.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
            .count();
        (sets.len() as u64, maximal as u64)
    };
    for (k, n, free, maximal) in [(2, 2, 2, 1), (2, 3, 6, 2)] {
        let inst = one_d(k, n);
        assert_eq!(naive(&inst), (free, maximal));
        assert_eq!(count_free(&inst).unwrap(), free);
        assert_eq!(count_maximal_free(&inst).unwrap(), maximal);
    }
}

#[test]
fn pick_worked_values() {
    // Interior points of (0,0),(4,0),(0,4): x, y >= 1 with x + y <= 3.
    let direct = (1..4).flat_map(|x| (1..4).map(move |y| (x, y))).filter(|(x, y)| x + y <= 3).count();
    assert_eq!(direct, 3);
    let t = LatticeTriangle::new((0, 0), (4, 0), (0, 4));
    assert_eq!(pick_interior(&t).unwrap(), 3);
    // (0,0),(5,0),(0,3): 3x + 5y < 15 with x, y >= 1.
    let direct = (1..5).flat_map(|x| (1..3).map(move |y| (x, y))).filter(|(x, y)| 3 * x + 5 * y < 15).count();
    assert_eq!(direct, 4);
    let t = LatticeTriangle::new((0, 0), (5, 0), (0, 3));
    assert_eq!(triangle_interior_enumerate(&t).unwrap(), 4);
    assert_eq!(pick_interior(&t).unwrap(), 4);
}

#[test]
fn k2_closed_form_against_brute_force() {
    for n1 in 1..=4 {
        for n2 in 1..=4 {
            let inst = Instance::diagonal(2, pt(&[n1, n2])).unwrap();
            assert_eq!(brute_mu(&inst) as u64, k2_exact_2d(n1 as u64, n2 as u64));
        }
    }
}
