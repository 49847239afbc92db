//! Lattice points, boxes, bit-packed point sets and witness search.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIM: usize = 3;

/// Boxes with more points than this are rejected.
pub const MAX_BOX_VOLUME: u64 = 1 << 24;

/// Upper limit on memo entries used by [`find_witness`]. Larger searches run
/// without memoisation.
const WITNESS_MEMO_LIMIT: u64 = 1 << 24;

/// A point of `Z^d` for `d` in `1..=3`.
///
/// Box elements have every coordinate `>= 1`; the type itself also admits
/// zero and negative coordinates so that differences such as `b - x` can be
/// formed and tested for membership.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    dim: u8,
    coords: [i64; MAX_DIM],
}

impl LatticePoint {
    pub fn new(coords: &[i64]) -> Result<Self> {
        let dim = coords.len();
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidDimension(dim));
        }
        let mut c = [0; MAX_DIM];
        c[..dim].copy_from_slice(coords);
        Ok(LatticePoint {
            dim: dim as u8,
            coords: c,
        })
    }

    /// The point `(value, ..., value)` in `dim` dimensions.
    pub fn splat(value: i64, dim: usize) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidDimension(dim));
        }
        let mut c = [0; MAX_DIM];
        c[..dim].fill(value);
        Ok(LatticePoint {
            dim: dim as u8,
            coords: c,
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.dim()]
    }

    #[inline]
    pub fn coord(&self, axis: usize) -> i64 {
        self.coords()[axis]
    }

    pub fn is_positive(&self) -> bool {
        self.coords().iter().all(|&c| c >= 1)
    }

    /// Product of the coordinates, `|x|` for a box extent.
    pub fn product(&self) -> i128 {
        self.coords().iter().map(|&c| c as i128).product()
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// Coordinate-wise `self <= other`. Points of different dimension are
    /// never comparable.
    pub fn le_all(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self
                .coords()
                .iter()
                .zip(other.coords())
                .all(|(a, b)| a <= b)
    }

    #[inline]
    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        let mut c = [0; MAX_DIM];
        for (axis, slot) in c.iter_mut().enumerate().take(self.dim()) {
            *slot = f(self.coords[axis], other.coords[axis]);
        }
        LatticePoint {
            dim: self.dim,
            coords: c,
        }
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Returns `(min, max)` over the coordinates of `p`.
pub fn min_max_coord(p: &LatticePoint) -> (i64, i64) {
    let c = p.coords();
    let min = c.iter().copied().min().unwrap_or(0);
    let max = c.iter().copied().max().unwrap_or(0);
    (min, max)
}

/// The box `[n_1] x ... x [n_d]` with its row-major index map (last
/// coordinate fastest).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LatticeBox {
    extent: LatticePoint,
    volume: usize,
    strides: [usize; MAX_DIM],
}

impl LatticeBox {
    pub fn new(extent: LatticePoint) -> Result<Self> {
        if !extent.is_positive() {
            return Err(Error::NonPositiveExtent);
        }
        let mut volume: u64 = 1;
        for &c in extent.coords() {
            volume = volume.saturating_mul(c as u64);
        }
        if volume > MAX_BOX_VOLUME {
            return Err(Error::Capacity {
                size: volume,
                limit: MAX_BOX_VOLUME,
            });
        }
        let d = extent.dim();
        let mut strides = [0usize; MAX_DIM];
        let mut acc = 1usize;
        for axis in (0..d).rev() {
            strides[axis] = acc;
            acc *= extent.coord(axis) as usize;
        }
        Ok(LatticeBox {
            extent,
            volume: volume as usize,
            strides,
        })
    }

    /// Convenience constructor from raw extents.
    pub fn from_extent(extent: &[i64]) -> Result<Self> {
        LatticeBox::new(LatticePoint::new(extent)?)
    }

    #[inline]
    pub fn extent(&self) -> LatticePoint {
        self.extent
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.extent.dim()
    }

    /// `|n|`, the number of points in the box.
    #[inline]
    pub fn volume(&self) -> usize {
        self.volume
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        p.dim() == self.dim()
            && p.coords()
                .iter()
                .zip(self.extent.coords())
                .all(|(&x, &n)| 1 <= x && x <= n)
    }

    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        if !self.contains(p) {
            return None;
        }
        Some(
            p.coords()
                .iter()
                .zip(&self.strides)
                .map(|(&x, &s)| (x as usize - 1) * s)
                .sum(),
        )
    }

    /// Inverse of [`LatticeBox::index_of`].
    ///
    /// Panics when `index >= self.volume()`.
    pub fn point_at(&self, index: usize) -> LatticePoint {
        assert!(index < self.volume, "index {index} outside box");
        let mut c = [0i64; MAX_DIM];
        let mut rest = index;
        for (axis, slot) in c.iter_mut().enumerate().take(self.dim()) {
            let s = self.strides[axis];
            *slot = (rest / s) as i64 + 1;
            rest %= s;
        }
        LatticePoint {
            dim: self.extent.dim,
            coords: c,
        }
    }

    /// All points in index order.
    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        (0..self.volume).map(move |i| self.point_at(i))
    }
}

/// A k-sum **b**-free problem: the multiplicity `k`, the target `b` and the
/// box `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Instance {
    k: u32,
    target: LatticePoint,
    lattice_box: LatticeBox,
}

impl Instance {
    pub fn new(k: u32, target: LatticePoint, lattice_box: LatticeBox) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        if target.dim() != lattice_box.dim() {
            return Err(Error::DimensionMismatch {
                left: target.dim(),
                right: lattice_box.dim(),
            });
        }
        Ok(Instance {
            k,
            target,
            lattice_box,
        })
    }

    /// The instance with target equal to the box extent, `b = n`.
    pub fn diagonal(k: u32, extent: LatticePoint) -> Result<Self> {
        Instance::new(k, extent, LatticeBox::new(extent)?)
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn target(&self) -> LatticePoint {
        self.target
    }

    #[inline]
    pub fn lattice_box(&self) -> &LatticeBox {
        &self.lattice_box
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.target.dim()
    }

    /// True when some target coordinate is below `k`: every summand has
    /// coordinates `>= 1`, so no solution exists.
    pub fn is_vacuous(&self) -> bool {
        let k = self.k as i64;
        self.target.coords().iter().any(|&b| b < k)
    }

    pub fn is_diagonal(&self) -> bool {
        self.target == self.lattice_box.extent()
    }
}

/// A subset of a [`LatticeBox`], stored as one bit per dense index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet {
    lattice_box: LatticeBox,
    bits: Vec<u64>,
    len: usize,
}

impl PointSet {
    pub fn new(lattice_box: LatticeBox) -> Self {
        PointSet {
            lattice_box,
            bits: vec![0; lattice_box.volume().div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(lattice_box: LatticeBox) -> Self {
        let mut set = PointSet::new(lattice_box);
        let v = lattice_box.volume();
        for (w, word) in set.bits.iter_mut().enumerate() {
            let lo = w * 64;
            let count = (v - lo).min(64);
            *word = if count == 64 { !0 } else { (1u64 << count) - 1 };
        }
        set.len = v;
        set
    }

    pub fn from_indices(
        lattice_box: LatticeBox,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut set = PointSet::new(lattice_box);
        for i in indices {
            if i >= lattice_box.volume() {
                return Err(Error::OutOfBox);
            }
            set.insert_index(i);
        }
        Ok(set)
    }

    pub fn from_points<'a>(
        lattice_box: LatticeBox,
        points: impl IntoIterator<Item = &'a LatticePoint>,
    ) -> Result<Self> {
        let mut set = PointSet::new(lattice_box);
        for p in points {
            set.insert(p)?;
        }
        Ok(set)
    }

    /// Members of `lattice_box` satisfying `keep`.
    pub fn from_predicate(lattice_box: LatticeBox, mut keep: impl FnMut(&LatticePoint) -> bool) -> Self {
        let mut set = PointSet::new(lattice_box);
        for i in 0..lattice_box.volume() {
            if keep(&lattice_box.point_at(i)) {
                set.insert_index(i);
            }
        }
        set
    }

    #[inline]
    pub fn lattice_box(&self) -> &LatticeBox {
        &self.lattice_box
    }

    /// Cached cardinality.
    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Cardinality recomputed from the bit array.
    pub fn popcount(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn contains_index(&self, i: usize) -> bool {
        i < self.lattice_box.volume() && self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.lattice_box
            .index_of(p)
            .is_some_and(|i| self.contains_index(i))
    }

    /// Returns true when the index was not already present.
    ///
    /// Panics when `i` is outside the box.
    pub fn insert_index(&mut self, i: usize) -> bool {
        assert!(i < self.lattice_box.volume(), "index {i} outside box");
        let (w, b) = (i / 64, i % 64);
        let fresh = self.bits[w] >> b & 1 == 0;
        if fresh {
            self.bits[w] |= 1 << b;
            self.len += 1;
        }
        fresh
    }

    /// Returns true when the index was present.
    pub fn remove_index(&mut self, i: usize) -> bool {
        if !self.contains_index(i) {
            return false;
        }
        self.bits[i / 64] &= !(1 << (i % 64));
        self.len -= 1;
        true
    }

    pub fn insert(&mut self, p: &LatticePoint) -> Result<bool> {
        let i = self.lattice_box.index_of(p).ok_or(Error::OutOfBox)?;
        Ok(self.insert_index(i))
    }

    pub fn remove(&mut self, p: &LatticePoint) -> Result<bool> {
        let i = self.lattice_box.index_of(p).ok_or(Error::OutOfBox)?;
        Ok(self.remove_index(i))
    }

    /// Member indices in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Member points in index order.
    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.indices().map(move |i| self.lattice_box.point_at(i))
    }

    /// Box points not in the set.
    pub fn complement(&self) -> PointSet {
        let mut out = PointSet::full(self.lattice_box);
        for i in self.indices() {
            out.remove_index(i);
        }
        out
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.lattice_box == other.lattice_box
            && self
                .bits
                .iter()
                .zip(&other.bits)
                .all(|(a, b)| a & !b == 0)
    }
}

/// `k` members of a set (repetition allowed) summing to the target.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    summands: Vec<LatticePoint>,
}

impl Witness {
    pub fn new(summands: Vec<LatticePoint>) -> Self {
        Witness { summands }
    }

    /// Summands in non-decreasing index order.
    pub fn summands(&self) -> &[LatticePoint] {
        &self.summands
    }

    /// Coordinate-wise sum of the summands, `None` for an empty witness.
    pub fn sum(&self) -> Option<LatticePoint> {
        let (first, rest) = self.summands.split_first()?;
        rest.iter()
            .try_fold(*first, |acc, p| acc.checked_add(p).ok())
    }
}

fn check_compatible(s: &PointSet, inst: &Instance) -> Result<()> {
    if s.lattice_box().dim() != inst.dim() {
        return Err(Error::DimensionMismatch {
            left: s.lattice_box().dim(),
            right: inst.dim(),
        });
    }
    if s.lattice_box() != inst.lattice_box() {
        return Err(Error::BoxMismatch);
    }
    Ok(())
}

/// Looks for `k` members of `s` (with repetition) summing to the target of
/// `inst`.
///
/// Summands are chosen in non-decreasing index order. A partial choice is cut
/// when the residual target has a coordinate below the number of summands
/// still to place. Residual states already shown unreachable are memoised.
pub fn find_witness(s: &PointSet, inst: &Instance) -> Result<Option<Witness>> {
    check_compatible(s, inst)?;
    if inst.is_vacuous() || s.is_empty() {
        return Ok(None);
    }
    let k = inst.k() as i64;
    let target = inst.target();
    let extent = s.lattice_box().extent();
    if target
        .coords()
        .iter()
        .zip(extent.coords())
        .any(|(&b, &n)| b > k * n)
    {
        return Ok(None);
    }

    let members: Vec<(usize, LatticePoint)> = s
        .indices()
        .map(|i| (i, s.lattice_box().point_at(i)))
        .collect();
    let mut search = WitnessSearch {
        set: s,
        members,
        memo: ResidualMemo::new(&target, inst.k()),
        path: Vec::with_capacity(inst.k() as usize),
    };
    if search.reach(target, inst.k(), 0) {
        Ok(Some(Witness::new(search.path)))
    } else {
        Ok(None)
    }
}

/// True when `s` contains no solution of the instance.
pub fn is_free(s: &PointSet, inst: &Instance) -> Result<bool> {
    find_witness(s, inst).map(|w| w.is_none())
}

struct WitnessSearch<'a> {
    set: &'a PointSet,
    members: Vec<(usize, LatticePoint)>,
    memo: Option<ResidualMemo>,
    path: Vec<LatticePoint>,
}

impl WitnessSearch<'_> {
    fn reach(&mut self, residual: LatticePoint, remaining: u32, start: usize) -> bool {
        if remaining == 1 {
            let min_index = self.members[start].0;
            return match self.set.lattice_box().index_of(&residual) {
                Some(i) if i >= min_index && self.set.contains_index(i) => {
                    self.path.push(residual);
                    true
                }
                _ => false,
            };
        }
        if let Some(memo) = &self.memo {
            if memo.is_dead(&residual, remaining, start) {
                return false;
            }
        }
        let rem = remaining as i64;
        for pos in start..self.members.len() {
            let p = self.members[pos].1;
            // Row-major order keeps the first coordinate non-decreasing.
            if p.coord(0) * rem > residual.coord(0) {
                break;
            }
            let next = residual.zip_with(&p, |r, x| r - x);
            if next.coords().iter().any(|&c| c < rem - 1) {
                continue;
            }
            self.path.push(p);
            if self.reach(next, remaining - 1, pos) {
                return true;
            }
            self.path.pop();
        }
        if let Some(memo) = &mut self.memo {
            memo.mark_dead(&residual, remaining, start);
        }
        false
    }
}

/// For each (residual, remaining) pair, the smallest start position from
/// which the residual is known to be unreachable.
struct ResidualMemo {
    extent: LatticePoint,
    cells: usize,
    dead_from: Vec<u32>,
}

impl ResidualMemo {
    fn new(target: &LatticePoint, k: u32) -> Option<Self> {
        let cells = target.product();
        let total = cells.checked_mul(k as i128 + 1)?;
        if total > WITNESS_MEMO_LIMIT as i128 {
            return None;
        }
        Some(ResidualMemo {
            extent: *target,
            cells: cells as usize,
            dead_from: vec![u32::MAX; total as usize],
        })
    }

    fn slot(&self, residual: &LatticePoint, remaining: u32) -> usize {
        let mut idx = 0usize;
        for (&r, &e) in residual.coords().iter().zip(self.extent.coords()) {
            idx = idx * e as usize + (r as usize - 1);
        }
        remaining as usize * self.cells + idx
    }

    fn is_dead(&self, residual: &LatticePoint, remaining: u32, start: usize) -> bool {
        self.dead_from[self.slot(residual, remaining)] as usize <= start
    }

    fn mark_dead(&mut self, residual: &LatticePoint, remaining: u32, start: usize) {
        let slot = self.slot(residual, remaining);
        let cell = &mut self.dead_from[slot];
        *cell = (*cell).min(start as u32);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> LatticePoint {
        LatticePoint::new(c).unwrap()
    }

    #[test]
    fn min_max_examples() {
        assert_eq!(min_max_coord(&pt(&[3, 5])), (3, 5));
        assert_eq!(min_max_coord(&pt(&[4, 4])), (4, 4));
        assert_eq!(min_max_coord(&pt(&[7])), (7, 7));
    }

    #[test]
    fn point_dimension_limits() {
        assert_eq!(LatticePoint::new(&[]), Err(Error::InvalidDimension(0)));
        assert_eq!(
            LatticePoint::new(&[1, 2, 3, 4]),
            Err(Error::InvalidDimension(4))
        );
        let e = pt(&[1, 2]).checked_add(&pt(&[1])).unwrap_err();
        assert_eq!(e, Error::DimensionMismatch { left: 2, right: 1 });
    }

    #[test]
    fn box_index_is_row_major() {
        let bx = LatticeBox::from_extent(&[2, 3]).unwrap();
        assert_eq!(bx.volume(), 6);
        assert_eq!(bx.index_of(&pt(&[1, 1])), Some(0));
        assert_eq!(bx.index_of(&pt(&[1, 2])), Some(1));
        assert_eq!(bx.index_of(&pt(&[2, 1])), Some(3));
        assert_eq!(bx.index_of(&pt(&[3, 1])), None);
        assert_eq!(bx.index_of(&pt(&[0, 1])), None);
        for i in 0..bx.volume() {
            assert_eq!(bx.index_of(&bx.point_at(i)), Some(i));
        }
    }

    #[test]
    fn box_rejects_bad_extents() {
        assert_eq!(
            LatticeBox::from_extent(&[0, 3]),
            Err(Error::NonPositiveExtent)
        );
        assert!(LatticeBox::from_extent(&[4097, 4097]).unwrap_err().is_capacity());
        assert!(LatticeBox::from_extent(&[4096, 4096]).is_ok());
    }

    #[test]
    fn instance_validation() {
        let bx = LatticeBox::from_extent(&[3, 3]).unwrap();
        assert_eq!(Instance::new(1, pt(&[3, 3]), bx), Err(Error::InvalidK(1)));
        assert!(matches!(
            Instance::new(2, pt(&[3]), bx),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(Instance::new(4, pt(&[3, 3]), bx).unwrap().is_vacuous());
        assert!(!Instance::new(3, pt(&[3, 3]), bx).unwrap().is_vacuous());
    }

    #[test]
    fn full_set_and_complement() {
        let bx = LatticeBox::from_extent(&[5, 13]).unwrap();
        let full = PointSet::full(bx);
        assert_eq!(full.len(), 65);
        assert_eq!(full.popcount(), 65);
        assert!(full.complement().is_empty());
        assert_eq!(full.indices().count(), 65);
    }

    #[test]
    fn witness_full_three_by_three() {
        let inst = Instance::diagonal(3, pt(&[3, 3])).unwrap();
        let full = PointSet::full(*inst.lattice_box());
        let w = find_witness(&full, &inst).unwrap().unwrap();
        assert_eq!(w.summands(), &[pt(&[1, 1]); 3]);
    }

    #[test]
    fn witness_absent_without_origin_corner() {
        let inst = Instance::diagonal(3, pt(&[3, 3])).unwrap();
        let mut s = PointSet::full(*inst.lattice_box());
        s.remove(&pt(&[1, 1])).unwrap();
        assert_eq!(find_witness(&s, &inst).unwrap(), None);
    }

    #[test]
    fn witness_uses_repetition() {
        let bx = LatticeBox::from_extent(&[4, 4]).unwrap();
        let inst = Instance::new(2, pt(&[4, 4]), bx).unwrap();
        let s = PointSet::from_points(bx, &[pt(&[2, 2])]).unwrap();
        let w = find_witness(&s, &inst).unwrap().unwrap();
        assert_eq!(w.summands(), &[pt(&[2, 2]), pt(&[2, 2])]);
    }

    #[test]
    fn is_free_one_dimensional_examples() {
        let inst = Instance::diagonal(3, pt(&[9])).unwrap();
        let bx = *inst.lattice_box();
        let tail = PointSet::from_predicate(bx, |p| p.coord(0) > 3);
        assert!(is_free(&tail, &inst).unwrap());
        let small = PointSet::from_points(bx, &[pt(&[3]), pt(&[4]), pt(&[5])]).unwrap();
        assert!(!is_free(&small, &inst).unwrap());
        assert!(is_free(&PointSet::new(bx), &inst).unwrap());
    }

    #[test]
    fn witness_rejects_mismatched_set() {
        let inst = Instance::diagonal(2, pt(&[3, 3])).unwrap();
        let other = PointSet::new(LatticeBox::from_extent(&[3]).unwrap());
        assert!(matches!(
            find_witness(&other, &inst),
            Err(Error::DimensionMismatch { .. })
        ));
        let other = PointSet::new(LatticeBox::from_extent(&[3, 4]).unwrap());
        assert_eq!(find_witness(&other, &inst), Err(Error::BoxMismatch));
    }

    #[test]
    fn target_beyond_reach_has_no_witness() {
        let bx = LatticeBox::from_extent(&[3]).unwrap();
        let inst = Instance::new(2, pt(&[7]), bx).unwrap();
        assert!(is_free(&PointSet::full(bx), &inst).unwrap());
    }
}
