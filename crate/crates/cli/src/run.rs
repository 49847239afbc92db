use std::io::Write;

use sumfree_core::bounds::{verify_instance, DensityReport, Rational};
use sumfree_core::constructions::{halfplane_2d, oned_odd_or_large, oned_tail, simplex_k2, ConstructionReport};
use sumfree_core::solver::{count_free, count_maximal_free, solve, SolveResult, SolverChoice};
use sumfree_core::{find_witness, is_free, Instance, LatticeBox, LatticePoint, PointSet};

use crate::args::{Cli, Command, Common, Format, InstanceArgs, MethodArg, SweepArgs, WitnessArgs};
use crate::emit::{emit_csv, emit_json};
use crate::error::{CliError, EXIT_CAPACITY, EXIT_OK};
use crate::rows::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Table {
    Solve(Vec<SolveRow>),
    Construct(Vec<ConstructRow>),
    Check(Vec<CheckRow>),
    Sweep(Vec<SweepRow>),
    Count(Vec<CountRow>),
    Witness(Vec<WitnessRow>),
}

/// Rows of one command, plus whether every solve finished within budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub table: Table,
    pub dim: usize,
    pub complete: bool,
}

/// Parses nothing and writes nothing: runs the library call behind `command`.
pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Solve(a) => solve_cmd(a),
        Command::Construct(a) => construct_cmd(a),
        Command::Check(a) => check_cmd(a),
        Command::Sweep(a) => sweep_cmd(a),
        Command::Count(a) => count_cmd(a),
        Command::Witness(a) => witness_cmd(a),
    }
}

pub fn render(outcome: &Outcome, format: Format) -> Result<String, CliError> {
    let dim = outcome.dim;
    match (&outcome.table, format) {
        (Table::Solve(r), Format::Csv) => emit_csv(r, dim),
        (Table::Solve(r), Format::Json) => emit_json(r),
        (Table::Construct(r), Format::Csv) => emit_csv(r, dim),
        (Table::Construct(r), Format::Json) => emit_json(r),
        (Table::Check(r), Format::Csv) => emit_csv(r, dim),
        (Table::Check(r), Format::Json) => emit_json(r),
        (Table::Sweep(r), Format::Csv) => emit_csv(r, dim),
        (Table::Sweep(r), Format::Json) => emit_json(r),
        (Table::Count(r), Format::Csv) => emit_csv(r, dim),
        (Table::Count(r), Format::Json) => emit_json(r),
        (Table::Witness(r), Format::Csv) => emit_csv(r, dim),
        (Table::Witness(r), Format::Json) => emit_json(r),
    }
}

pub fn common(command: &Command) -> &Common {
    match command {
        Command::Solve(a) | Command::Construct(a) | Command::Check(a) | Command::Count(a) => &a.common,
        Command::Sweep(a) => &a.common,
        Command::Witness(a) => &a.instance.common,
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match run_inner(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("sumfree: {e}");
            e.exit_code()
        }
    }
}

fn run_inner(cli: &Cli) -> Result<i32, CliError> {
    let common = common(&cli.command);
    let outcome = execute(&cli.command)?;
    let text = render(&outcome, common.format)?;
    match &common.out {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|source| CliError::Io { path: path.clone(), source })?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
        }
    }
    if outcome.complete {
        Ok(EXIT_OK)
    } else {
        eprintln!("sumfree: node budget exhausted; rows with exact = false carry lower/upper bounds");
        Ok(EXIT_CAPACITY)
    }
}

fn instance(a: &InstanceArgs) -> Result<Instance, CliError> {
    let n = &a.n.0;
    let b = a.b.as_ref().map_or(n, |b| &b.0);
    if b.len() != n.len() {
        return Err(CliError::Usage(format!(
            "--b has {} coordinates but --n has {}",
            b.len(),
            n.len()
        )));
    }
    let lattice_box = LatticeBox::from_extent(n)?;
    Ok(Instance::new(a.common.k, LatticePoint::new(b)?, lattice_box)?)
}

fn choice(m: MethodArg) -> SolverChoice {
    match m {
        MethodArg::Auto => SolverChoice::Auto,
        MethodArg::Exhaustive => SolverChoice::Exhaustive,
        MethodArg::Bb => SolverChoice::BranchAndBound,
        MethodArg::Pairing => SolverChoice::Pairing,
    }
}

fn ratio(num: usize, den: usize) -> (i64, i64) {
    split(&Rational::new(num as i64, den as i64))
}

fn recheck(verify: bool, set: &PointSet, size: usize, inst: &Instance) -> Result<Option<bool>, CliError> {
    if !verify {
        return Ok(None);
    }
    if set.len() != size || !is_free(set, inst)? {
        return Err(CliError::Verification(format!(
            "set of size {} for k = {}, b = {}",
            set.len(),
            inst.k(),
            inst.target()
        )));
    }
    Ok(Some(true))
}

fn solve_cmd(a: &InstanceArgs) -> Result<Outcome, CliError> {
    let inst = instance(a)?;
    let res = solve(&inst, choice(a.common.method), a.common.budget)?;
    let verified = recheck(a.common.verify, &res.witness_set, res.mu, &inst)?;
    let (nu_num, nu_den) = ratio(res.lower(), inst.lattice_box().volume());
    let row = SolveRow {
        n: coords(&inst.lattice_box().extent()),
        mu: res.mu,
        nu_num,
        nu_den,
        k: inst.k(),
        b: coords(&inst.target()),
        exact: res.is_exact(),
        mu_lower: res.lower(),
        mu_upper: res.upper(),
        method: res.method.as_str().to_string(),
        nodes: res.nodes_explored,
        verified,
        witness: point_list(&res.witness_set),
    };
    Ok(Outcome { table: Table::Solve(vec![row]), dim: inst.dim(), complete: res.is_exact() })
}

fn constructions(k: u32, n: LatticePoint) -> Result<Vec<ConstructionReport>, CliError> {
    let d = n.dim();
    let mut out = Vec::new();
    match d {
        1 => {
            out.push(oned_tail(k, n.coord(0))?);
            if k == 2 {
                out.push(oned_odd_or_large(n.coord(0))?);
            }
        }
        2 => out.push(halfplane_2d(k, n)?),
        _ => {}
    }
    let cube = n.coords().iter().all(|&c| c == n.coord(0));
    if k == 2 && cube && d >= 2 {
        out.push(simplex_k2(n.coord(0), d)?);
    }
    if out.is_empty() {
        return Err(CliError::Usage(format!(
            "no construction for k = {k} in dimension {d} with n = {n}"
        )));
    }
    Ok(out)
}

fn construct_cmd(a: &InstanceArgs) -> Result<Outcome, CliError> {
    let inst = instance(a)?;
    if !inst.is_diagonal() {
        return Err(CliError::Usage("construct requires --b equal to --n".into()));
    }
    let mut rows = Vec::new();
    for mut report in constructions(inst.k(), inst.lattice_box().extent())? {
        if a.common.verify {
            report.verify()?;
        }
        let (nu_num, nu_den) = ratio(report.set.len(), inst.lattice_box().volume());
        rows.push(ConstructRow {
            n: coords(&inst.lattice_box().extent()),
            construction: report.name.to_string(),
            k: inst.k(),
            size: report.set.len(),
            predicted_size: report.predicted_size,
            reference_size: report.reference_size,
            nu_num,
            nu_den,
            verified: report.verified,
            points: point_list(&report.set),
        });
    }
    Ok(Outcome { table: Table::Construct(rows), dim: inst.dim(), complete: true })
}

fn check_rows(report: &DensityReport, verified: Option<bool>) -> Vec<CheckRow> {
    let (nu_num, nu_den) = split(&report.nu);
    let (gap_num, gap_den) = split(&report.gap);
    let c = report.empirical_constant.as_ref().map(split);
    report
        .bound_checks
        .iter()
        .map(|check| {
            let (slack_num, slack_den) = split(&check.slack);
            CheckRow {
                n: coords(&report.instance.lattice_box().extent()),
                mu: report.mu,
                nu_num,
                nu_den,
                k: report.instance.k(),
                exact: report.exact,
                check: check.name.to_string(),
                satisfied: check.satisfied,
                slack_num,
                slack_den,
                gap_to_limit_num: gap_num,
                gap_to_limit_den: gap_den,
                empirical_constant_num: c.map(|c| c.0),
                empirical_constant_den: c.map(|c| c.1),
                verified,
            }
        })
        .collect()
}

fn check_cmd(a: &InstanceArgs) -> Result<Outcome, CliError> {
    let inst = instance(a)?;
    let res = solve(&inst, choice(a.common.method), a.common.budget)?;
    let verified = recheck(a.common.verify, &res.witness_set, res.mu, &inst)?;
    let report = verify_instance(&inst, &res)?;
    Ok(Outcome {
        table: Table::Check(check_rows(&report, verified)),
        dim: inst.dim(),
        complete: res.is_exact(),
    })
}

fn sweep_row(res: &SolveResult, report: &DensityReport, verified: Option<bool>) -> SweepRow {
    let (nu_num, nu_den) = split(&report.nu);
    let (gap_num, gap_den) = split(&report.gap);
    let c = report.empirical_constant.as_ref().map(split);
    SweepRow {
        n: report.instance.lattice_box().extent().coord(0),
        mu: report.mu,
        nu_num,
        nu_den,
        gap_to_limit_num: gap_num,
        gap_to_limit_den: gap_den,
        exact: report.exact,
        mu_lower: res.lower(),
        mu_upper: res.upper(),
        empirical_constant_num: c.map(|c| c.0),
        empirical_constant_den: c.map(|c| c.1),
        method: res.method.as_str().to_string(),
        nodes: res.nodes_explored,
        verified,
    }
}

/// Square sizes with `n < k` admit no solution and produce no row.
pub fn sweep(common: &Common, start: i64, end: i64) -> Result<(Vec<SweepRow>, bool), CliError> {
    let mut rows = Vec::new();
    let mut complete = true;
    for n in start..=end {
        let inst = Instance::diagonal(common.k, LatticePoint::new(&[n, n])?)?;
        if inst.is_vacuous() {
            continue;
        }
        let res = solve(&inst, choice(common.method), common.budget)?;
        let verified = recheck(common.verify, &res.witness_set, res.mu, &inst)?;
        let report = verify_instance(&inst, &res)?;
        complete &= res.is_exact();
        rows.push(sweep_row(&res, &report, verified));
    }
    Ok((rows, complete))
}

fn sweep_cmd(a: &SweepArgs) -> Result<Outcome, CliError> {
    let (rows, complete) = sweep(&a.common, a.n_range.0, a.n_range.1)?;
    Ok(Outcome { table: Table::Sweep(rows), dim: 2, complete })
}

fn count_cmd(a: &InstanceArgs) -> Result<Outcome, CliError> {
    let inst = instance(a)?;
    let row = CountRow {
        n: coords(&inst.lattice_box().extent()),
        k: inst.k(),
        b: coords(&inst.target()),
        free_sets: count_free(&inst)?,
        maximal_free_sets: count_maximal_free(&inst)?,
    };
    Ok(Outcome { table: Table::Count(vec![row]), dim: inst.dim(), complete: true })
}

fn witness_cmd(a: &WitnessArgs) -> Result<Outcome, CliError> {
    let inst = instance(&a.instance)?;
    let bx = *inst.lattice_box();
    let set = match &a.set {
        None => PointSet::full(bx),
        Some(list) => {
            let points = list
                .0
                .iter()
                .map(|c| {
                    if c.len() != bx.dim() {
                        return Err(CliError::Usage(format!(
                            "--set point {c:?} has {} coordinates, box has {}",
                            c.len(),
                            bx.dim()
                        )));
                    }
                    Ok(LatticePoint::new(c)?)
                })
                .collect::<Result<Vec<_>, _>>()?;
            PointSet::from_points(bx, &points)?
        }
    };
    let witness = find_witness(&set, &inst)?;
    let row = WitnessRow {
        n: coords(&bx.extent()),
        k: inst.k(),
        b: coords(&inst.target()),
        set_size: set.len(),
        free: witness.is_none(),
        witness: witness.map_or_else(Vec::new, |w| w.summands().iter().map(coords).collect()),
    };
    Ok(Outcome { table: Table::Witness(vec![row]), dim: inst.dim(), complete: true })
}
