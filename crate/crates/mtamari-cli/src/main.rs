//! Batch command-line front end for the m-Tamari toolkit.
//!
//! Subcommands: `count`, `formula`, `series`, `hasse`, `intervals`,
//! `verify`. Output is deterministic for a fixed invocation: no timestamps,
//! stable orderings, and a version banner only via `--version`.
//!
//! Exit codes: 0 ok, 1 check failed, 2 resource limit, 64 usage error.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mtamari_core::lattice::{HasseDiagram, LatticeError, DEFAULT_NODE_CAP};
use mtamari_core::num_rational::BigRational;
use mtamari_core::{checks, formulas, series};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_RESOURCE_LIMIT: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "mtamari", version, about = "m-Tamari lattices: counts, series, diagrams, verification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count intervals by the closed formula, optionally cross-checked
    /// against exhaustive enumeration
    Count {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Also print the refinement by contacts of the lower path
        #[arg(long)]
        by_contacts: bool,
        /// Cross-check against exhaustive enumeration (fails with a nonzero
        /// exit code on mismatch)
        #[arg(long)]
        brute: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
    /// Evaluate the closed formulas as exact decimal integers
    Formula {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Contact count of the lower path (2 <= i <= n+1)
        #[arg(long)]
        i: Option<usize>,
        /// Emit the full contact row as JSON
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve the functional equation and print the series coefficients
    Series {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        order: usize,
        /// Track the initial rise of the upper path (variable y)
        #[arg(long)]
        with_y: bool,
        /// Track the longest chain (variable q) via the q-divided difference
        #[arg(long)]
        with_q: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the Hasse diagram and export it
    Hasse {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
    /// Enumerate intervals and print the aggregated statistics
    Intervals {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
    /// Run verification suites and print a pass/fail table
    Verify {
        /// One of: all, counts, contacts, order, bijections, series,
        /// symmetry, parametrization, identities, pointed
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest m for the symmetry and identity suites
        #[arg(long)]
        m_max: Option<usize>,
        /// Series truncation order for the symmetry suite
        #[arg(long)]
        order: Option<usize>,
        /// z-truncation for the identity suite
        #[arg(long)]
        z_order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum CmdError {
    Usage(String),
    CheckFailed(String),
    ResourceLimit(String),
}

impl From<LatticeError> for CmdError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::ResourceLimit { .. } => CmdError::ResourceLimit(e.to_string()),
            other => CmdError::CheckFailed(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CmdError::CheckFailed(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
        Err(CmdError::ResourceLimit(msg)) => {
            eprintln!("resource limit: {msg}");
            ExitCode::from(EXIT_RESOURCE_LIMIT)
        }
    }
}

fn run(cmd: Cmd) -> Result<(), CmdError> {
    match cmd {
        Cmd::Count { m, n, by_contacts, brute, format, node_cap } => {
            cmd_count(m, n, by_contacts, brute, format, node_cap)
        }
        Cmd::Formula { m, n, i, table, format } => cmd_formula(m, n, i, table, format),
        Cmd::Series { m, order, with_y, with_q, format } => {
            cmd_series(m, order, with_y, with_q, format)
        }
        Cmd::Hasse { m, n, format, node_cap } => cmd_hasse(m, n, format, node_cap),
        Cmd::Intervals { m, n, format, node_cap } => cmd_intervals(m, n, format, node_cap),
        Cmd::Verify { suite, m_max, order, z_order, format } => {
            cmd_verify(&suite, m_max, order, z_order, format)
        }
    }
}

fn require_m_n(m: usize, n: usize) -> Result<(), CmdError> {
    if m < 1 {
        return Err(CmdError::Usage("m must be at least 1".into()));
    }
    if n < 1 {
        return Err(CmdError::Usage("n must be at least 1".into()));
    }
    Ok(())
}

fn count_formula(m: usize, n: usize) -> Result<formulas::ExactCount, CmdError> {
    formulas::count_intervals(m, n).map_err(|e| match e {
        formulas::FormulaError::OutOfRange => CmdError::Usage(e.to_string()),
        formulas::FormulaError::NonIntegral(_) => CmdError::CheckFailed(e.to_string()),
    })
}

fn contact_row(m: usize, n: usize) -> Result<Vec<(usize, formulas::ExactCount)>, CmdError> {
    formulas::contact_row(m, n).map_err(|e| match e {
        formulas::FormulaError::OutOfRange => CmdError::Usage(e.to_string()),
        formulas::FormulaError::NonIntegral(_) => CmdError::CheckFailed(e.to_string()),
    })
}

fn cmd_count(
    m: usize,
    n: usize,
    by_contacts: bool,
    brute: bool,
    format: Format,
    node_cap: usize,
) -> Result<(), CmdError> {
    require_m_n(m, n)?;
    if format == Format::Dot {
        return Err(CmdError::Usage("count supports text or json output".into()));
    }
    let total = count_formula(m, n)?;
    let row = if by_contacts { Some(contact_row(m, n)?) } else { None };

    let brute_result = if brute {
        let h = HasseDiagram::build_with_cap(m, n, node_cap)?;
        Some((h.interval_count(), h.interval_table()))
    } else {
        None
    };

    match format {
        Format::Text => {
            match &brute_result {
                Some((bc, _)) => {
                    let rel = if Some(*bc) == total.to_u64() { "=" } else { "!=" };
                    println!("{total} (formula) {rel} {bc} (brute force)");
                }
                None => println!("{total}"),
            }
            if let Some(row) = &row {
                for (i, c) in row {
                    println!("i={i}: {c}");
                }
            }
        }
        Format::Json => {
            let mut obj = json!({
                "schema": "mtamari.count.v1",
                "m": m,
                "n": n,
                "intervals": total.to_string(),
            });
            if let Some((bc, _)) = &brute_result {
                obj["brute"] = json!(bc);
            }
            if let Some(row) = &row {
                obj["by_contacts"] = Value::Array(
                    row.iter().map(|(i, c)| json!([i, c.to_string()])).collect(),
                );
            }
            println!("{obj}");
        }
        Format::Dot => unreachable!(),
    }

    if let Some((bc, table)) = &brute_result {
        if Some(*bc) != total.to_u64() {
            return Err(CmdError::CheckFailed(format!(
                "formula gives {total}, enumeration gives {bc}"
            )));
        }
        if let Some(row) = &row {
            let brute_row: Vec<(usize, u64)> = table.by_contacts.clone();
            let formula_row: Vec<(usize, u64)> = row
                .iter()
                .filter(|(_, c)| c.to_u64() != Some(0))
                .map(|(i, c)| (*i, c.to_u64().unwrap()))
                .collect();
            if brute_row != formula_row {
                return Err(CmdError::CheckFailed("contact rows disagree".into()));
            }
        }
    }
    Ok(())
}

fn cmd_formula(
    m: usize,
    n: usize,
    i: Option<usize>,
    table: bool,
    format: Format,
) -> Result<(), CmdError> {
    require_m_n(m, n)?;
    if format == Format::Dot {
        return Err(CmdError::Usage("formula supports text or json output".into()));
    }
    if table {
        let row = contact_row(m, n)?;
        let obj = json!({
            "schema": "mtamari.formula.v1",
            "m": m,
            "n": n,
            "by_contacts": row.iter().map(|(i, c)| json!([i, c.to_string()])).collect::<Vec<_>>(),
        });
        println!("{obj}");
        return Ok(());
    }
    let value = match i {
        None => count_formula(m, n)?,
        Some(i) => formulas::count_by_contacts(m, n, i).map_err(|e| match e {
            formulas::FormulaError::OutOfRange => {
                CmdError::Usage(format!("i must satisfy 2 <= i <= n+1, got {i}"))
            }
            formulas::FormulaError::NonIntegral(_) => CmdError::CheckFailed(e.to_string()),
        })?,
    };
    match format {
        Format::Text => println!("{value}"),
        Format::Json => {
            let mut obj = json!({
                "schema": "mtamari.formula.v1",
                "m": m,
                "n": n,
                "value": value.to_string(),
            });
            if let Some(i) = i {
                obj["i"] = json!(i);
            }
            println!("{obj}");
        }
        Format::Dot => unreachable!(),
    }
    Ok(())
}

fn cmd_series(
    m: usize,
    order: usize,
    with_y: bool,
    with_q: bool,
    format: Format,
) -> Result<(), CmdError> {
    if m < 1 {
        return Err(CmdError::Usage("m must be at least 1".into()));
    }
    if format == Format::Dot {
        return Err(CmdError::Usage("series supports text or json output".into()));
    }
    let f = series::solve_f(m, order, with_y, with_q);
    match format {
        Format::Text => {
            let one = BigRational::from_integer(1.into());
            let vals: Vec<String> = f
                .coeffs()
                .iter()
                .map(|p| p.eval(&one, &one, &one).to_string())
                .collect();
            println!("{}", vals.join(", "));
        }
        Format::Json => {
            let coeffs: Vec<Value> = f
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, p)| {
                    let terms: Vec<Value> =
                        p.terms().map(|(i, r, k, c)| json!([i, r, k, c.to_string()])).collect();
                    json!({ "n": n, "terms": terms })
                })
                .collect();
            let obj = json!({
                "schema": "mtamari.series.v1",
                "m": m,
                "order": order,
                "with_y": with_y,
                "with_q": with_q,
                "coeffs": coeffs,
            });
            println!("{obj}");
        }
        Format::Dot => unreachable!(),
    }
    Ok(())
}

fn cmd_hasse(m: usize, n: usize, format: Format, node_cap: usize) -> Result<(), CmdError> {
    if m < 1 {
        return Err(CmdError::Usage("m must be at least 1".into()));
    }
    let h = HasseDiagram::build_with_cap(m, n, node_cap)?;
    match format {
        Format::Dot => print!("{}", h.export_dot()),
        Format::Json => {
            let nodes: Vec<String> = h.nodes().iter().map(|p| p.to_string()).collect();
            let mut edges: Vec<[usize; 2]> = Vec::new();
            for i in 0..h.node_count() {
                for &c in h.covers_of(i) {
                    edges.push([i, c as usize]);
                }
            }
            let obj = json!({
                "schema": "mtamari.hasse.v1",
                "m": m,
                "n": n,
                "nodes": nodes,
                "edges": edges,
            });
            println!("{obj}");
        }
        Format::Text => {
            return Err(CmdError::Usage("hasse supports dot or json output".into()));
        }
    }
    Ok(())
}

fn cmd_intervals(m: usize, n: usize, format: Format, node_cap: usize) -> Result<(), CmdError> {
    if m < 1 {
        return Err(CmdError::Usage("m must be at least 1".into()));
    }
    if format == Format::Dot {
        return Err(CmdError::Usage("intervals supports text or json output".into()));
    }
    let h = HasseDiagram::build_with_cap(m, n, node_cap)?;
    let table = h.interval_table();
    match format {
        Format::Text => {
            println!("m={} n={} intervals={}", table.m, table.n, table.total);
            for (i, c) in &table.by_contacts {
                println!("contacts={i}: {c}");
            }
            for ((c, r, q), count) in &table.joint {
                println!("contacts-1={c} rise={r} chain={q}: {count}");
            }
        }
        Format::Json => {
            let obj = json!({
                "schema": "mtamari.intervals.v1",
                "m": table.m,
                "n": table.n,
                "intervals": table.total,
                "by_contacts": table.by_contacts.iter().map(|(i, c)| json!([i, c])).collect::<Vec<_>>(),
                "joint": table.joint.iter().map(|((c, r, q), count)| json!([c, r, q, count])).collect::<Vec<_>>(),
            });
            println!("{obj}");
        }
        Format::Dot => unreachable!(),
    }
    Ok(())
}

fn cmd_verify(
    suite: &str,
    m_max: Option<usize>,
    order: Option<usize>,
    z_order: Option<usize>,
    format: Format,
) -> Result<(), CmdError> {
    if format == Format::Dot {
        return Err(CmdError::Usage("verify supports text or json output".into()));
    }
    let results = match suite {
        "all" => checks::all_suites(),
        "counts" => checks::suite_counts(&checks::default_counts_grid()),
        "contacts" => checks::suite_contacts(),
        "order" => checks::suite_order(&checks::default_order_grid()),
        "bijections" => checks::suite_bijections(),
        "series" => checks::suite_series(),
        "symmetry" => {
            let specs = match (m_max, order) {
                (None, None) => checks::default_symmetry_specs(),
                (mm, ord) => {
                    let mm = mm.unwrap_or(2);
                    let ord = ord.unwrap_or(6);
                    (1..=mm).map(|m| (m, ord)).collect()
                }
            };
            checks::suite_symmetry(&specs)
        }
        "parametrization" => checks::suite_parametrization(),
        "identities" => checks::suite_identities(m_max.unwrap_or(6), z_order.unwrap_or(20)),
        "pointed" => checks::suite_pointed(),
        other => {
            return Err(CmdError::Usage(format!(
                "unknown suite {other:?}; expected one of all, counts, contacts, order, \
                 bijections, series, symmetry, parametrization, identities, pointed"
            )))
        }
    };
    let failed = results.iter().filter(|c| !c.pass).count();
    match format {
        Format::Text => {
            for c in &results {
                if c.pass {
                    println!("PASS {}", c.name);
                } else {
                    println!("FAIL {} — {}", c.name, c.detail);
                }
            }
            println!("{} checks, {} failed", results.len(), failed);
        }
        Format::Json => {
            let obj = json!({
                "schema": "mtamari.verify.v1",
                "suite": suite,
                "checks": results
                    .iter()
                    .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
                    .collect::<Vec<_>>(),
                "failed": failed,
            });
            println!("{obj}");
        }
        Format::Dot => unreachable!(),
    }
    if failed > 0 {
        return Err(CmdError::CheckFailed(format!("{failed} checks failed")));
    }
    Ok(())
}
