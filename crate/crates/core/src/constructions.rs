//! Explicit free sets with closed-form or independently counted sizes.
//!
//! Every generator returns a [`ConstructionReport`] whose `predicted_size` is
//! computed without looking at the generated set. Reports on boxes with at
//! most [`VERIFY_VOLUME_LIMIT`] points are re-checked with
//! [`find_witness`](crate::lattice::find_witness) before they are returned.

use num_integer::Integer;

use crate::bounds::k2_exact_ddim;
use crate::error::{Error, Result};
use crate::lattice::{is_free, Instance, LatticeBox, LatticePoint, PointSet};

/// Reports on larger boxes skip the freeness re-check unless
/// [`ConstructionReport::verify`] is called.
pub const VERIFY_VOLUME_LIMIT: usize = 1 << 16;

#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub name: &'static str,
    pub set: PointSet,
    pub predicted_size: usize,
    /// A reference value the construction is compared against, such as the
    /// exact optimum when one is known in closed form.
    pub reference_size: Option<usize>,
    pub instance: Instance,
    pub verified: bool,
}

impl ConstructionReport {
    fn finish(mut self) -> Result<Self> {
        if self.set.len() != self.predicted_size {
            return Err(Error::ConstructionCheck(self.name));
        }
        if self.set.lattice_box().volume() <= VERIFY_VOLUME_LIMIT {
            self.verify()?;
        }
        Ok(self)
    }

    /// Runs the freeness check regardless of box size.
    pub fn verify(&mut self) -> Result<()> {
        if !is_free(&self.set, &self.instance)? {
            return Err(Error::ConstructionCheck(self.name));
        }
        self.verified = true;
        Ok(())
    }
}

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidK(k))
    } else {
        Ok(())
    }
}

fn positive(n: i64) -> Result<()> {
    if n < 1 {
        Err(Error::NonPositiveExtent)
    } else {
        Ok(())
    }
}

/// `{x in [n] : n2*x1 + n1*x2 > 2*n1*n2/k}`, with the boundary excluded.
pub fn halfplane_set(k: u32, n: &LatticePoint) -> Result<PointSet> {
    check_k(k)?;
    if n.dim() != 2 {
        return Err(Error::InvalidDimension(n.dim()));
    }
    let bx = LatticeBox::new(*n)?;
    let (n1, n2, k) = (n.coord(0) as i128, n.coord(1) as i128, k as i128);
    Ok(PointSet::from_predicate(bx, |x| {
        k * (n2 * x.coord(0) as i128 + n1 * x.coord(1) as i128) > 2 * n1 * n2
    }))
}

/// Size of [`halfplane_set`], counted column by column.
pub fn halfplane_count(k: u32, n1: i64, n2: i64) -> usize {
    let (n1, n2, k) = (n1 as i128, n2 as i128, k as i128);
    (1..=n1)
        .map(|x1| {
            // k*n1*x2 > 2*n1*n2 - k*n2*x1
            let rhs = 2 * n1 * n2 - k * n2 * x1;
            let below = Integer::div_floor(&rhs, &(k * n1));
            (n2 - below).clamp(0, n2) as usize
        })
        .sum()
}

/// The half-plane set of the two-dimensional diagonal instance `b = n`.
pub fn halfplane_2d(k: u32, n: LatticePoint) -> Result<ConstructionReport> {
    let set = halfplane_set(k, &n)?;
    ConstructionReport {
        name: "halfplane",
        predicted_size: halfplane_count(k, n.coord(0), n.coord(1)),
        reference_size: None,
        instance: Instance::diagonal(k, n)?,
        set,
        verified: false,
    }
    .finish()
}

/// `{x in [n] : x > n/k}`.
pub fn tail_set(k: u32, n: i64) -> Result<PointSet> {
    check_k(k)?;
    positive(n)?;
    let bx = LatticeBox::from_extent(&[n])?;
    Ok(PointSet::from_predicate(bx, |x| k as i64 * x.coord(0) > n))
}

pub fn oned_tail(k: u32, n: i64) -> Result<ConstructionReport> {
    let set = tail_set(k, n)?;
    ConstructionReport {
        name: "tail",
        predicted_size: (n - n / k as i64) as usize,
        reference_size: None,
        instance: Instance::diagonal(k, LatticePoint::new(&[n])?)?,
        set,
        verified: false,
    }
    .finish()
}

/// Maximum 2-sum `n`-free subset of `[n]`.
///
/// The "odd or greater than n/2" family is sum-free for `x + y = z` but not
/// 2-sum `n`-free (for `n = 6`, `1 + 5 = 6`). For the `b = n` condition this
/// emits its valid part, the upper half `{x > n/2}`, which has the optimal
/// size `ceil(n/2)`.
pub fn oned_odd_or_large(n: i64) -> Result<ConstructionReport> {
    let set = tail_set(2, n)?;
    let optimum = ((n + 1) / 2) as usize;
    ConstructionReport {
        name: "odd_or_large",
        predicted_size: optimum,
        reference_size: Some(optimum),
        instance: Instance::diagonal(2, LatticePoint::new(&[n])?)?,
        set,
        verified: false,
    }
    .finish()
}

/// `{x in [n]^d : x_1 + ... + x_d > d*n/2}`.
pub fn simplex_set(n: i64, d: usize) -> Result<PointSet> {
    positive(n)?;
    let extent = LatticePoint::splat(n, d)?;
    let bx = LatticeBox::new(extent)?;
    let bound = d as i64 * n;
    Ok(PointSet::from_predicate(bx, |x| {
        2 * x.coords().iter().sum::<i64>() > bound
    }))
}

/// Size of [`simplex_set`], counted along the last axis.
pub fn simplex_count(n: i64, d: usize) -> usize {
    let bound = d as i64 * n;
    let line = |prefix: i64| -> usize {
        // 2*x_d > d*n - 2*prefix
        let below = Integer::div_floor(&(bound - 2 * prefix), &2);
        (n - below).clamp(0, n) as usize
    };
    match d {
        1 => line(0),
        2 => (1..=n).map(line).sum(),
        _ => (1..=n)
            .flat_map(|a| (1..=n).map(move |b| a + b))
            .map(line)
            .sum(),
    }
}

/// The simplex set for `k = 2`, `b = n = (n, ..., n)`. The reference size is
/// the exact optimum `n^d - ceil((n-1)^d / 2)`; the construction can fall
/// short of it (for `n = 3, d = 2` it has 6 points against 7).
pub fn simplex_k2(n: i64, d: usize) -> Result<ConstructionReport> {
    let set = simplex_set(n, d)?;
    ConstructionReport {
        name: "simplex",
        predicted_size: simplex_count(n, d),
        reference_size: Some(k2_exact_ddim(n as u64, d)? as usize),
        instance: Instance::diagonal(2, LatticePoint::splat(n, d)?)?,
        set,
        verified: false,
    }
    .finish()
}

/// `([n] \ [b]) ∪ inner` for an `inner` set that is free inside `[b]`.
///
/// Points outside `[b]` exceed `b` in some coordinate, so they cannot appear in
/// any solution.
pub fn box_complement_reduction(inst: &Instance, inner: &PointSet) -> Result<ConstructionReport> {
    let b = inst.target();
    let bx = *inst.lattice_box();
    if !b.le_all(&bx.extent()) {
        return Err(Error::TargetOutsideBox);
    }
    if inner.lattice_box().extent() != b {
        return Err(Error::BoxMismatch);
    }
    let inner_inst = Instance::new(inst.k(), b, *inner.lattice_box())?;
    if !is_free(inner, &inner_inst)? {
        return Err(Error::NotFree);
    }
    let mut set = PointSet::from_predicate(bx, |x| !x.le_all(&b));
    for p in inner.points() {
        set.insert(&p)?;
    }
    let predicted = bx.volume() - inner.lattice_box().volume() + inner.len();
    ConstructionReport {
        name: "box_complement",
        predicted_size: predicted,
        reference_size: None,
        instance: *inst,
        set,
        verified: false,
    }
    .finish()
}
