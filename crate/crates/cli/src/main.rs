//! `subcount`: exact subgroup and covering counts for free and surface groups.

mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use subcount::census::{count_nonorientable_subgroups, count_orientable_subgroups, Family};
use subcount::oracle::{
    check_feasible, oracle_count_classes, oracle_count_subgroups, oracle_orientable_split,
};
use subcount::{census_table, count_classes, count_subgroups, epi_count, Error, GroupKind, HomologySignature};

#[derive(Parser)]
#[command(name = "subcount", version, about = "Count finite-index subgroups and coverings of surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one count for one index.
    Count {
        /// free:R, orient:G or nonorient:P
        #[arg(long)]
        group: String,
        #[arg(long)]
        index: u32,
        #[arg(long, value_enum, default_value_t = What::Subgroups)]
        what: What,
    },
    /// Print M and N (and M_plus, M_minus for nonorient) for indices 1..=max.
    Table {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_index: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compare every formula with the brute-force oracle.
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_index: u32,
    },
    /// Count epimorphisms from Z_{t1} + ... + Z^rank onto Z_order.
    Epi {
        /// Comma-separated torsion orders, each at least 2.
        #[arg(long, default_value = "")]
        torsion: String,
        #[arg(long, default_value_t = 0)]
        rank: u64,
        #[arg(long)]
        order: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Subgroups,
    Classes,
    Split,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Exit 1: verification mismatch. Exit 2: bad input or refused work.
enum Failure {
    Mismatch,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_group(s: &str) -> Result<GroupKind, Failure> {
    Ok(s.parse::<GroupKind>()?)
}

fn parse_torsion(s: &str) -> Result<Vec<u64>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Failure::Usage(format!("invalid torsion entry {t:?}")))
        })
        .collect()
}

fn count(group: &str, index: u32, what: What) -> Result<String, Failure> {
    let kind = parse_group(group)?;
    Ok(match what {
        What::Subgroups => count_subgroups(kind, index)?.to_string(),
        What::Classes => count_classes(kind, index)?.to_string(),
        What::Split => {
            if kind.family() != Family::NonOrientable {
                return Err(Failure::Usage(format!(
                    "--what split needs a nonorient group, got {kind}"
                )));
            }
            let plus = count_orientable_subgroups(kind.param(), index)?;
            let minus = count_nonorientable_subgroups(kind.param(), index)?;
            format!("{plus} {minus}")
        }
    })
}

fn table(group: &str, max_index: u32, format: Format) -> Result<String, Failure> {
    let table = census_table(parse_group(group)?, max_index)?;
    Ok(match format {
        Format::Json => render::json(&table),
        Format::Csv => render::csv(&table),
    })
}

fn check(label: &str, formula: &BigUint, oracle: &BigUint, ok: &mut bool) -> String {
    *ok &= formula == oracle;
    format!("{label} formula={formula} oracle={oracle}")
}

fn verify(group: &str, max_index: u32) -> Result<(), Failure> {
    let kind = parse_group(group)?;
    if max_index == 0 {
        return Err(Error::Zero("max-index").into());
    }
    check_feasible(kind, max_index)?;
    let table = census_table(kind, max_index)?;
    let mut all_ok = true;
    for row in &table.rows {
        let n = row.n;
        let mut ok = true;
        let mut parts = vec![
            check("M", &row.subgroups, &oracle_count_subgroups(kind, n)?, &mut ok),
            check("N", &row.classes, &oracle_count_classes(kind, n)?, &mut ok),
        ];
        if let (Some(plus), Some(minus)) = (&row.orientable, &row.nonorientable) {
            let (o_plus, o_minus) = oracle_orientable_split(kind.param(), n)?;
            parts.push(check("M_plus", plus, &o_plus, &mut ok));
            parts.push(check("M_minus", minus, &o_minus, &mut ok));
        }
        all_ok &= ok;
        println!("{} {kind} n={n} {}", if ok { "PASS" } else { "FAIL" }, parts.join(" "));
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn epi(torsion: &str, rank: u64, order: u64) -> Result<String, Failure> {
    let h = HomologySignature::new(parse_torsion(torsion)?, rank)?;
    Ok(epi_count(&h, order)?.to_string())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { group, index, what } => println!("{}", count(&group, index, what)?),
        Command::Table { group, max_index, format } => print!("{}", table(&group, max_index, format)?),
        Command::Verify { group, max_index } => verify(&group, max_index)?,
        Command::Epi { torsion, rank, order } => println!("{}", epi(&torsion, rank, order)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
