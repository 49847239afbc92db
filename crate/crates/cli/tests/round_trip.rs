//! Emitted JSON parses back into the in-memory rows.

use clap::Parser;
use serde::de::DeserializeOwned;
use sumfree_cli::args::Format;
use sumfree_cli::rows::Document;
use sumfree_cli::{execute, render, Cli, Table};

fn same<R: DeserializeOwned + PartialEq>(text: &str, rows: &[R]) -> bool {
    let doc: Document<R> = serde_json::from_str(text).unwrap();
    doc.schema_version == 1 && doc.rows == rows
}

fn round_trip(argv: &[&str]) {
    let cli = Cli::try_parse_from(std::iter::once("sumfree").chain(argv.iter().copied())).unwrap();
    let outcome = execute(&cli.command).unwrap();
    let text = render(&outcome, Format::Json).unwrap();
    let ok = match &outcome.table {
        Table::Solve(r) => same(&text, r),
        Table::Construct(r) => same(&text, r),
        Table::Check(r) => same(&text, r),
        Table::Sweep(r) => same(&text, r),
        Table::Count(r) => same(&text, r),
        Table::Witness(r) => same(&text, r),
    };
    assert!(ok, "{argv:?}");
    // CSV has one line per row plus the header.
    let csv = render(&outcome, Format::Csv).unwrap();
    let rows = match &outcome.table {
        Table::Solve(r) => r.len(),
        Table::Construct(r) => r.len(),
        Table::Check(r) => r.len(),
        Table::Sweep(r) => r.len(),
        Table::Count(r) => r.len(),
        Table::Witness(r) => r.len(),
    };
    assert_eq!(csv::Reader::from_reader(csv.as_bytes()).records().count(), rows);
}

#[test]
fn all_commands_round_trip() {
    let matrix: &[&[&str]] = &[
        &["solve", "--k", "3", "--n", "6,6"],
        &["solve", "--k", "2", "--n", "3,3,3", "--b", "2,3,1"],
        &["solve", "--k", "4", "--n", "9,9", "--budget", "3"],
        &["construct", "--k", "2", "--n", "7"],
        &["construct", "--k", "2", "--n", "3,3,3"],
        &["check", "--k", "3", "--n", "7"],
        &["check", "--k", "3", "--n", "5,5"],
        &["sweep", "--k", "4", "--n-range", "1:7"],
        &["count", "--k", "3", "--n", "3,4", "--b", "3,3"],
        &["witness", "--k", "2", "--n", "4,4", "--b", "5,3"],
    ];
    for argv in matrix {
        round_trip(argv);
    }
}
