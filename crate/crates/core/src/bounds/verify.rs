use alloc::vec::Vec;

use num_traits::Signed;

use super::{limit_density, mul, oned_bounds, k2_exact_2d, k2_exact_ddim, rat, rat_usize, sub, Rational};
use crate::constructions::halfplane_count;
use crate::error::{Error, Result};
use crate::lattice::{min_max_coord, Instance, LatticePoint};
use crate::solver::{solve, SolveResult, SolverChoice};

/// One bound compared against an exact density. `slack >= 0` exactly when the
/// bound holds; equality checks report `-|difference|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub satisfied: bool,
    pub slack: Rational,
}

impl BoundCheck {
    fn with_slack(name: &'static str, slack: Rational) -> Self {
        BoundCheck {
            name,
            satisfied: slack >= rat(0, 1),
            slack,
        }
    }

    fn at_least(name: &'static str, value: &Rational, floor: &Rational) -> Result<Self> {
        Ok(Self::with_slack(name, sub(value, floor)?))
    }

    fn at_most(name: &'static str, value: &Rational, ceiling: &Rational) -> Result<Self> {
        Ok(Self::with_slack(name, sub(ceiling, value)?))
    }

    fn equal(name: &'static str, value: &Rational, expected: &Rational) -> Result<Self> {
        Ok(Self::with_slack(name, -sub(value, expected)?.abs()))
    }
}

/// Exact density of a solved instance together with every bound that applies
/// to it.
#[derive(Clone, Debug)]
pub struct DensityReport {
    pub instance: Instance,
    /// The optimum, or the lower end of the bracket for a partial report.
    pub mu: usize,
    pub mu_upper: usize,
    pub exact: bool,
    /// `mu / |n|`.
    pub nu: Rational,
    /// `(k^2 - 2) / k^2`.
    pub limit_density: Rational,
    /// `nu - limit_density`.
    pub gap: Rational,
    pub bound_checks: Vec<BoundCheck>,
    /// For two-dimensional `b = n`: `gap * min(n1, n2)`, the constant the
    /// `O(1/min(n1, n2))` correction would need at this size.
    pub empirical_constant: Option<Rational>,
}

impl DensityReport {
    pub fn is_partial(&self) -> bool {
        !self.exact
    }

    pub fn all_satisfied(&self) -> bool {
        self.bound_checks.iter().all(|c| c.satisfied)
    }

    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.bound_checks.iter().find(|c| c.name == name)
    }
}

/// Computes the density of `result` and evaluates the applicable bounds:
///
/// * `b = n` in one dimension: the sandwich `1 - 1/k <= nu <= 1 - 1/k + 1/n`
///   and the tail construction `nu >= (n - floor(n/k)) / n`;
/// * `b = n` in two dimensions: the half-plane construction, its counted size
///   against `|n| - 2 n1 n2 / k^2`, `nu >= (k^2 - 2)/k^2` when that count
///   meets the bound, and for `k = 2` equality with the closed form;
/// * `k = 2` on a cube: equality with `n^d - ceil((n-1)^d / 2)`.
///
/// Bracketed results give a partial report without checks.
pub fn verify_instance(inst: &Instance, result: &SolveResult) -> Result<DensityReport> {
    if result.instance != *inst {
        return Err(Error::BoxMismatch);
    }
    let volume = inst.lattice_box().volume();
    let nu = rat_usize(result.lower(), volume)?;
    let limit = limit_density(inst.k())?;
    let gap = sub(&nu, &limit)?;
    let mut report = DensityReport {
        instance: *inst,
        mu: result.lower(),
        mu_upper: result.upper(),
        exact: result.is_exact(),
        nu,
        limit_density: limit,
        gap,
        bound_checks: Vec::new(),
        empirical_constant: None,
    };
    if !report.exact || !inst.is_diagonal() {
        return Ok(report);
    }
    let n = inst.target();
    let k = inst.k();
    let checks = &mut report.bound_checks;
    match n.dim() {
        1 => {
            let n1 = n.coord(0);
            let (lower, upper) = oned_bounds(k, n1)?;
            checks.push(BoundCheck::at_least("oned_lower", &nu, &lower)?);
            checks.push(BoundCheck::at_most("oned_upper", &nu, &upper)?);
            let tail = rat(n1 - n1 / k as i64, n1);
            checks.push(BoundCheck::at_least("tail_construction", &nu, &tail)?);
        }
        2 => {
            let (n1, n2) = (n.coord(0), n.coord(1));
            let hp = rat_usize(halfplane_count(k, n1, n2), volume)?;
            checks.push(BoundCheck::at_least("halfplane_construction", &nu, &hp)?);
            // |H| >= |n| - 2 n1 n2 / k^2, as densities: |H|/|n| >= limit.
            let meets = BoundCheck::at_least("halfplane_count_bound", &hp, &limit)?;
            let meets_ok = meets.satisfied;
            checks.push(meets);
            if meets_ok {
                checks.push(BoundCheck::at_least("limit_lower", &nu, &limit)?);
            }
            if k == 2 {
                let exact = rat_usize(k2_exact_2d(n1 as u64, n2 as u64) as usize, volume)?;
                checks.push(BoundCheck::equal("k2_exact_2d", &nu, &exact)?);
            }
            let (m, _) = min_max_coord(&n);
            report.empirical_constant = Some(mul(&gap, &rat(m, 1))?);
        }
        _ => {}
    }
    if k == 2 && n.coords().iter().all(|&c| c == n.coord(0)) {
        let formula = k2_exact_ddim(n.coord(0) as u64, n.dim())?;
        let exact = rat_usize(formula as usize, volume)?;
        checks.push(BoundCheck::equal("k2_exact_ddim", &nu, &exact)?);
    }
    Ok(report)
}

/// One report per square box `(n, n)` with target `b = n`, rows ordered by
/// `n`. Sizes with `n < k` have no solutions at all and are skipped.
pub fn convergence_sweep(
    k: u32,
    sizes: &[i64],
    choice: SolverChoice,
    budget: u64,
) -> Result<Vec<DensityReport>> {
    let mut sizes: Vec<i64> = sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    let mut rows = Vec::with_capacity(sizes.len());
    for n in sizes {
        let inst = Instance::diagonal(k, LatticePoint::new(&[n, n])?)?;
        if inst.is_vacuous() {
            continue;
        }
        let result = solve(&inst, choice, budget)?;
        rows.push(verify_instance(&inst, &result)?);
    }
    Ok(rows)
}
