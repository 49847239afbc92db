use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(name = "sumfree", version, about = "Exact search for k-sum-free subsets of lattice boxes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Maximum free-set size of one instance, with a witness set.
    Solve(InstanceArgs),
    /// Emit the explicit constructions that apply to a box with b = n.
    Construct(InstanceArgs),
    /// Solve an instance and evaluate every applicable bound.
    Check(InstanceArgs),
    /// Densities of the square boxes (n, n), b = n, over a range of n.
    Sweep(SweepArgs),
    /// Number of free and of maximal free sets.
    Count(InstanceArgs),
    /// Search a set for k summands adding up to b.
    Witness(WitnessArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Number of summands.
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Node limit for branch-and-bound.
    #[arg(long, default_value_t = 50_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Re-check every emitted set with the freeness test.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug, Clone)]
pub struct InstanceArgs {
    #[command(flatten)]
    pub common: Common,
    /// Box extent, comma separated (`4,4`).
    #[arg(long, value_parser = parse_coords)]
    pub n: Coords,
    /// Target, comma separated; defaults to n.
    #[arg(long, value_parser = parse_coords)]
    pub b: Option<Coords>,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: Common,
    /// Inclusive range `start:end` of square sizes.
    #[arg(long = "n-range", value_parser = parse_range)]
    pub n_range: (i64, i64),
}

#[derive(Args, Debug, Clone)]
pub struct WitnessArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Points of the set, `;` separated (`1,1;2,3`); defaults to the whole box.
    #[arg(long, value_parser = parse_point_list)]
    pub set: Option<PointList>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Auto,
    Exhaustive,
    Bb,
    Pairing,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Newtypes so clap does not treat the lists as repeated flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coords(pub Vec<i64>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointList(pub Vec<Vec<i64>>);

pub fn parse_coords(s: &str) -> Result<Coords, String> {
    let coords = s
        .split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|e| format!("bad coordinate {c:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if !(1..=3).contains(&coords.len()) {
        return Err(format!("expected 1 to 3 coordinates, got {}", coords.len()));
    }
    Ok(Coords(coords))
}

pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or("expected start:end")?;
    let a: i64 = a.trim().parse().map_err(|e| format!("bad start: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("bad end: {e}"))?;
    if a < 1 || b < a {
        return Err(format!("need 1 <= start <= end, got {a}:{b}"));
    }
    Ok((a, b))
}

pub fn parse_point_list(s: &str) -> Result<PointList, String> {
    if s.trim().is_empty() {
        return Ok(PointList(Vec::new()));
    }
    s.split(';').map(|p| parse_coords(p).map(|c| c.0)).collect::<Result<_, _>>().map(PointList)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_lists() {
        assert_eq!(parse_coords("4, 4").unwrap(), Coords(vec![4, 4]));
        assert!(parse_coords("1,2,3,4").is_err());
        assert!(parse_coords("1,x").is_err());
        assert!(parse_coords("").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3:8").unwrap(), (3, 8));
        assert!(parse_range("8:3").is_err());
        assert!(parse_range("0:3").is_err());
        assert!(parse_range("3").is_err());
    }

    #[test]
    fn point_lists() {
        assert_eq!(parse_point_list("1,1;2,3").unwrap().0, vec![vec![1, 1], vec![2, 3]]);
        assert!(parse_point_list("").unwrap().0.is_empty());
    }

    #[test]
    fn flags_parse() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
        let cli = Cli::try_parse_from(["sumfree", "solve", "--k", "2", "--n", "4,4", "--format", "json"]).unwrap();
        assert!(matches!(cli.command, Command::Solve(_)));
        assert!(Cli::try_parse_from(["sumfree", "solve", "--k", "2", "--n", "4,4", "--budget", "0"]).is_err());
    }
}
