use crate::error::{Error, Result};
use crate::lattice::{Instance, LatticeBox, LatticePoint, PointSet};

use super::{Exactness, Method, SolveResult};

/// Exact optimum for `k = 2` via the involution `x <-> b - x` on `[n]`.
///
/// Points whose partner falls outside the box are always kept, fixed points
/// (`2x = b`) are dropped, and each 2-cycle keeps its lower-index member.
pub fn solve_k2_pairing(target: &LatticePoint, extent: &LatticePoint) -> Result<SolveResult> {
    if target.dim() != extent.dim() {
        return Err(Error::DimensionMismatch {
            left: target.dim(),
            right: extent.dim(),
        });
    }
    let bx = LatticeBox::new(*extent)?;
    let inst = Instance::new(2, *target, bx)?;
    if inst.is_vacuous() {
        return Ok(SolveResult::vacuous(&inst));
    }
    let mut set = PointSet::new(bx);
    for i in 0..bx.volume() {
        let x = bx.point_at(i);
        let keep = match bx.index_of(&target.checked_sub(&x)?) {
            None => true,
            Some(j) => i < j,
        };
        if keep {
            set.insert_index(i);
        }
    }
    Ok(SolveResult {
        instance: inst,
        mu: set.len(),
        witness_set: set,
        nodes_explored: 0,
        method: Method::Pairing,
        exactness: Exactness::Exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::is_free;

    fn pt(c: &[i64]) -> LatticePoint {
        LatticePoint::new(c).unwrap()
    }

    #[test]
    fn diagonal_examples() {
        let r = solve_k2_pairing(&pt(&[3, 3]), &pt(&[3, 3])).unwrap();
        assert_eq!(r.mu, 7);
        let r = solve_k2_pairing(&pt(&[4, 4]), &pt(&[4, 4])).unwrap();
        assert_eq!(r.mu, 11);
        assert!(!r.witness_set.contains(&pt(&[2, 2])));
        assert!(is_free(&r.witness_set, &r.instance).unwrap());
    }

    #[test]
    fn smaller_target() {
        let r = solve_k2_pairing(&pt(&[2, 2]), &pt(&[4, 4])).unwrap();
        assert_eq!(r.mu, 15);
        assert!(!r.witness_set.contains(&pt(&[1, 1])));
    }

    #[test]
    fn one_dimensional_ceil_half() {
        for n in 1..40 {
            let r = solve_k2_pairing(&pt(&[n]), &pt(&[n])).unwrap();
            assert_eq!(r.mu as i64, (n + 1) / 2, "n = {n}");
        }
    }

    #[test]
    fn mismatched_dimensions() {
        assert!(matches!(
            solve_k2_pairing(&pt(&[3]), &pt(&[3, 3])),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
