//! Output rows. JSON documents serialise them with serde; CSV flattens point
//! columns into one column per coordinate (`n1,n2`) and point lists into
//! `x,y;x,y` cells.

use serde::{Deserialize, Serialize};
use sumfree_core::bounds::Rational;
use sumfree_core::{LatticePoint, PointSet};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Document<R> {
    pub schema_version: u32,
    pub rows: Vec<R>,
}

pub trait Row {
    /// CSV header for boxes of dimension `dim`.
    fn header(dim: usize) -> Vec<String>;
    fn record(&self) -> Vec<String>;
}

pub fn coords(p: &LatticePoint) -> Vec<i64> {
    p.coords().to_vec()
}

pub fn point_list(s: &PointSet) -> Vec<Vec<i64>> {
    s.points().map(|p| coords(&p)).collect()
}

pub fn split(r: &Rational) -> (i64, i64) {
    (*r.numer(), *r.denom())
}

fn cols(prefix: &str, dim: usize) -> impl Iterator<Item = String> + '_ {
    (1..=dim).map(move |i| format!("{prefix}{i}"))
}

fn names<'a>(list: &'a [&'a str]) -> impl Iterator<Item = String> + 'a {
    list.iter().map(|s| s.to_string())
}

fn cells(v: &[i64]) -> impl Iterator<Item = String> + '_ {
    v.iter().map(|c| c.to_string())
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

fn join_points(points: &[Vec<i64>]) -> String {
    points
        .iter()
        .map(|p| p.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SolveRow {
    pub n: Vec<i64>,
    pub mu: usize,
    pub nu_num: i64,
    pub nu_den: i64,
    pub k: u32,
    pub b: Vec<i64>,
    pub exact: bool,
    pub mu_lower: usize,
    pub mu_upper: usize,
    pub method: String,
    pub nodes: u64,
    pub verified: Option<bool>,
    pub witness: Vec<Vec<i64>>,
}

impl Row for SolveRow {
    fn header(dim: usize) -> Vec<String> {
        cols("n", dim)
            .chain(names(&["mu", "nu_num", "nu_den", "k"]))
            .chain(cols("b", dim))
            .chain(names(&["exact", "mu_lower", "mu_upper", "method", "nodes", "verified", "witness"]))
            .collect()
    }

    fn record(&self) -> Vec<String> {
        cells(&self.n)
            .chain([self.mu.to_string(), self.nu_num.to_string(), self.nu_den.to_string(), self.k.to_string()])
            .chain(cells(&self.b))
            .chain([
                self.exact.to_string(),
                self.mu_lower.to_string(),
                self.mu_upper.to_string(),
                self.method.clone(),
                self.nodes.to_string(),
                opt(&self.verified),
                join_points(&self.witness),
            ])
            .collect()
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ConstructRow {
    pub n: Vec<i64>,
    pub construction: String,
    pub k: u32,
    pub size: usize,
    pub predicted_size: usize,
    pub reference_size: Option<usize>,
    pub nu_num: i64,
    pub nu_den: i64,
    pub verified: bool,
    pub points: Vec<Vec<i64>>,
}

impl Row for ConstructRow {
    fn header(dim: usize) -> Vec<String> {
        cols("n", dim)
            .chain(names(&[
                "construction",
                "k",
                "size",
                "predicted_size",
                "reference_size",
                "nu_num",
                "nu_den",
                "verified",
                "points",
            ]))
            .collect()
    }

    fn record(&self) -> Vec<String> {
        cells(&self.n)
            .chain([
                self.construction.clone(),
                self.k.to_string(),
                self.size.to_string(),
                self.predicted_size.to_string(),
                opt(&self.reference_size),
                self.nu_num.to_string(),
                self.nu_den.to_string(),
                self.verified.to_string(),
                join_points(&self.points),
            ])
            .collect()
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub n: Vec<i64>,
    pub mu: usize,
    pub nu_num: i64,
    pub nu_den: i64,
    pub k: u32,
    pub exact: bool,
    pub check: String,
    pub satisfied: bool,
    pub slack_num: i64,
    pub slack_den: i64,
    pub gap_to_limit_num: i64,
    pub gap_to_limit_den: i64,
    pub empirical_constant_num: Option<i64>,
    pub empirical_constant_den: Option<i64>,
    pub verified: Option<bool>,
}

impl Row for CheckRow {
    fn header(dim: usize) -> Vec<String> {
        cols("n", dim)
            .chain(names(&[
                "mu",
                "nu_num",
                "nu_den",
                "k",
                "exact",
                "check",
                "satisfied",
                "slack_num",
                "slack_den",
                "gap_to_limit_num",
                "gap_to_limit_den",
                "empirical_constant_num",
                "empirical_constant_den",
                "verified",
            ]))
            .collect()
    }

    fn record(&self) -> Vec<String> {
        cells(&self.n)
            .chain([
                self.mu.to_string(),
                self.nu_num.to_string(),
                self.nu_den.to_string(),
                self.k.to_string(),
                self.exact.to_string(),
                self.check.clone(),
                self.satisfied.to_string(),
                self.slack_num.to_string(),
                self.slack_den.to_string(),
                self.gap_to_limit_num.to_string(),
                self.gap_to_limit_den.to_string(),
                opt(&self.empirical_constant_num),
                opt(&self.empirical_constant_den),
                opt(&self.verified),
            ])
            .collect()
    }
}

/// One square box `(n, n)` with `b = n`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub n: i64,
    pub mu: usize,
    pub nu_num: i64,
    pub nu_den: i64,
    pub gap_to_limit_num: i64,
    pub gap_to_limit_den: i64,
    pub exact: bool,
    pub mu_lower: usize,
    pub mu_upper: usize,
    pub empirical_constant_num: Option<i64>,
    pub empirical_constant_den: Option<i64>,
    pub method: String,
    pub nodes: u64,
    pub verified: Option<bool>,
}

impl Row for SweepRow {
    fn header(_dim: usize) -> Vec<String> {
        names(&[
            "n",
            "mu",
            "nu_num",
            "nu_den",
            "gap_to_limit_num",
            "gap_to_limit_den",
            "exact",
            "mu_lower",
            "mu_upper",
            "empirical_constant_num",
            "empirical_constant_den",
            "method",
            "nodes",
            "verified",
        ])
        .collect()
    }

    fn record(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.mu.to_string(),
            self.nu_num.to_string(),
            self.nu_den.to_string(),
            self.gap_to_limit_num.to_string(),
            self.gap_to_limit_den.to_string(),
            self.exact.to_string(),
            self.mu_lower.to_string(),
            self.mu_upper.to_string(),
            opt(&self.empirical_constant_num),
            opt(&self.empirical_constant_den),
            self.method.clone(),
            self.nodes.to_string(),
            opt(&self.verified),
        ]
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub n: Vec<i64>,
    pub k: u32,
    pub b: Vec<i64>,
    pub free_sets: u64,
    pub maximal_free_sets: u64,
}

impl Row for CountRow {
    fn header(dim: usize) -> Vec<String> {
        cols("n", dim)
            .chain(names(&["k"]))
            .chain(cols("b", dim))
            .chain(names(&["free_sets", "maximal_free_sets"]))
            .collect()
    }

    fn record(&self) -> Vec<String> {
        cells(&self.n)
            .chain([self.k.to_string()])
            .chain(cells(&self.b))
            .chain([self.free_sets.to_string(), self.maximal_free_sets.to_string()])
            .collect()
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct WitnessRow {
    pub n: Vec<i64>,
    pub k: u32,
    pub b: Vec<i64>,
    pub set_size: usize,
    pub free: bool,
    /// The `k` summands in index order; empty when the set is free.
    pub witness: Vec<Vec<i64>>,
}

impl Row for WitnessRow {
    fn header(dim: usize) -> Vec<String> {
        cols("n", dim)
            .chain(names(&["k"]))
            .chain(cols("b", dim))
            .chain(names(&["set_size", "free", "witness"]))
            .collect()
    }

    fn record(&self) -> Vec<String> {
        cells(&self.n)
            .chain([self.k.to_string()])
            .chain(cells(&self.b))
            .chain([self.set_size.to_string(), self.free.to_string(), join_points(&self.witness)])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn headers_match_records() {
        let row = CountRow { n: vec![3, 3], k: 2, b: vec![3, 3], free_sets: 1, maximal_free_sets: 1 };
        assert_eq!(CountRow::header(2).len(), row.record().len());
        assert_eq!(CountRow::header(2)[..3], ["n1", "n2", "k"]);
    }

    #[test]
    fn point_cells() {
        assert_eq!(join_points(&[vec![1, 1], vec![2, 3]]), "1,1;2,3");
        assert_eq!(join_points(&[]), "");
    }
}
