//! Command-line surface for the workbench. Five commands: count family
//! members by weight, verify an identity coefficientwise, run the
//! insertion bijection in either direction or as an exhaustive roundtrip,
//! assemble an overpartition from a bounded triple, and dump either side
//! of an identity as raw coefficients.
//!
//! Exit codes are stable so the tool can sit in shell pipelines: 0 for
//! success or a verified equality, 1 for a mismatch, a failed membership
//! test, or a violated bound, 2 for unusable invocations. Output for a
//! fixed invocation is byte-identical from run to run.

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use overschur::enumerate::{count_table, enumerate, enumerate_modular};
use overschur::{
    construct, decompose, deconstruct, from_dmodular, identity_sides, insert, invert,
    verify_with_corruption, BoundedTriple, DModularOverpartition, FamilyId, IdentityId,
    IdentitySides, Overpartition, Params, PartitionTriple,
};

#[derive(Parser)]
#[command(name = "overschur", version, about = "Overpartition family workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Lhs,
    Rhs,
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse().map_err(|e: overschur::Error| e.to_string())
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: overschur::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate member counts of one family for every weight up to a bound.
    Count {
        /// Family name: b, e, c, bbar, ebar, or cbar.
        #[arg(long, value_parser = parse_family)]
        family: FamilyId,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check one identity coefficient by coefficient up to the order.
    Verify {
        /// Identity name: schur-product, c-g3, bbar-product, cbar-g2,
        /// cbar-sum-eq, or cbar-bivariate.
        #[arg(long, value_parser = parse_identity)]
        identity: IdentityId,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        order: usize,
        /// Fault injection for negative controls: add one to the left
        /// side's coefficient at this weight before comparing.
        #[arg(long)]
        corrupt: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the insertion bijection between the two overlined families.
    Bijection {
        #[command(subcommand)]
        direction: Direction,
    },
    /// Assemble the overpartition a bounded triple encodes.
    Construct {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
        /// Number of diagram columns.
        #[arg(long)]
        m: u64,
        /// Comma-separated part lists; omit a flag for an empty list.
        #[arg(long, default_value = "", hide_default_value = true)]
        alpha: String,
        #[arg(long, default_value = "", hide_default_value = true)]
        beta: String,
        #[arg(long, default_value = "", hide_default_value = true)]
        gamma: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dump one side of an identity as raw coefficients.
    Series {
        #[arg(long, value_parser = parse_identity)]
        identity: IdentityId,
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Direction {
    /// Insert a triple and print the resulting diagram.
    Forward {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
        #[arg(long, default_value = "", hide_default_value = true)]
        alpha: String,
        #[arg(long, default_value = "", hide_default_value = true)]
        beta: String,
        #[arg(long, default_value = "", hide_default_value = true)]
        gamma: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recover the triple a diagram came from.
    Inverse {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
        /// The diagram as a json list of {"length", "label"} records.
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the bijection exhaustively on every weight up to a bound.
    Roundtrip {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// A command that cannot proceed: code 2 for unusable input, code 1 for
/// input that parses but fails a membership test or a bound.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Display) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }

    fn domain(message: impl Display) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }
}

fn params(d: u64, r: u64) -> Result<Params, Failure> {
    Params::new(d, r).map_err(|e| Failure::usage(format!("invalid parameters d={d} r={r}: {e}")))
}

/// Comma-separated unsigned integers; the empty string is the empty list.
fn parts_list(name: &str, raw: &str) -> Result<Vec<u64>, Failure> {
    if raw.is_empty() {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|tok| {
            tok.trim().parse().map_err(|_| {
                Failure::usage(format!("--{name}: {tok:?} is not an unsigned integer"))
            })
        })
        .collect()
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

#[derive(Serialize)]
struct CountRow {
    n: u64,
    count: u64,
}

fn cmd_count(family: FamilyId, p: Params, max_n: u64, format: Format) -> ExitCode {
    let table = count_table(family, p, max_n);
    match format {
        Format::Text => {
            for (n, c) in table.iter().enumerate() {
                println!("{n} {c}");
            }
        }
        Format::Csv => {
            println!("n,count");
            for (n, c) in table.iter().enumerate() {
                println!("{n},{c}");
            }
        }
        Format::Json => {
            let rows: Vec<CountRow> = table
                .iter()
                .enumerate()
                .map(|(n, &count)| CountRow { n: n as u64, count })
                .collect();
            print_json(&rows);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(
    id: IdentityId,
    p: Params,
    order: usize,
    corrupt: Option<usize>,
    format: Format,
) -> ExitCode {
    let report = verify_with_corruption(id, p, order, corrupt);
    match format {
        Format::Text => println!("{report}"),
        Format::Json => print_json(&report),
        Format::Csv => {
            println!("identity,d,r,order,status,at");
            let status = if report.passed() { "equal" } else { "mismatch" };
            let at = report.at.map_or(String::new(), |a| a.to_string());
            println!(
                "{},{},{},{},{status},{at}",
                report.identity, report.d, report.r, report.order
            );
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_diagram(mu: &DModularOverpartition, weight: u64, format: Format) {
    match format {
        Format::Text => {
            println!("{mu}");
            println!("weight {weight}");
        }
        Format::Json => print_json(mu),
        Format::Csv => {
            println!("length,label");
            for c in mu.parts() {
                println!("{},{}", c.length, c.label);
            }
        }
    }
}

fn cmd_forward(
    p: Params,
    alpha: &str,
    beta: &str,
    gamma: &str,
    format: Format,
) -> Result<ExitCode, Failure> {
    let t = PartitionTriple::new(
        parts_list("alpha", alpha)?,
        parts_list("beta", beta)?,
        parts_list("gamma", gamma)?,
    )
    .map_err(Failure::domain)?;
    let mu = insert(&t);
    print_diagram(&mu, mu.weight(p), format);
    Ok(ExitCode::SUCCESS)
}

fn csv_parts(name: &str, parts: &[u64]) -> String {
    let mut line = name.to_string();
    for p in parts {
        line.push(',');
        line.push_str(&p.to_string());
    }
    line
}

fn cmd_inverse(p: Params, mu: &str, format: Format) -> Result<ExitCode, Failure> {
    let mu: DModularOverpartition = serde_json::from_str(mu)
        .map_err(|e| Failure::usage(format!("--mu is not a valid diagram: {e}")))?;
    let t = invert(&mu).map_err(Failure::domain)?;
    match format {
        Format::Text => {
            println!("{t}");
            println!("weight {}", t.weight(p));
        }
        Format::Json => print_json(&t),
        Format::Csv => {
            println!("{}", csv_parts("alpha", t.alpha()));
            println!("{}", csv_parts("beta", t.beta()));
            println!("{}", csv_parts("gamma", t.gamma()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct RoundtripSummary {
    status: &'static str,
    objects: u64,
    max_n: u64,
}

/// Decompose, insert, and invert every member of ebar up to max_n, and
/// check the images are exactly bbar weight by weight.
fn run_roundtrip(p: Params, max_n: u64) -> Result<u64, String> {
    let mut objects = 0;
    for n in 0..=max_n {
        let mut images = Vec::new();
        for lambda in enumerate(FamilyId::Ebar, p, n) {
            let t =
                decompose(&lambda, p).map_err(|e| format!("{lambda} fails to decompose: {e}"))?;
            let mu = insert(&t);
            if mu.weight(p) != n {
                return Err(format!("insertion changed the weight of {lambda}"));
            }
            match invert(&mu) {
                Ok(back) if back == t => {}
                Ok(_) => {
                    return Err(format!(
                        "inversion disagrees with decomposition on {lambda}"
                    ))
                }
                Err(e) => return Err(format!("image of {lambda} fails to invert: {e}")),
            }
            images.push(mu);
        }
        images.sort();
        if images != enumerate_modular(FamilyId::Bbar, p, n) {
            return Err(format!("images do not fill the family at weight {n}"));
        }
        objects += images.len() as u64;
    }
    Ok(objects)
}

fn cmd_roundtrip(p: Params, max_n: u64, format: Format) -> ExitCode {
    let (summary, code) = match run_roundtrip(p, max_n) {
        Ok(objects) => (
            RoundtripSummary {
                status: "pass",
                objects,
                max_n,
            },
            ExitCode::SUCCESS,
        ),
        Err(why) => {
            eprintln!("{why}");
            (
                RoundtripSummary {
                    status: "fail",
                    objects: 0,
                    max_n,
                },
                ExitCode::from(1),
            )
        }
    };
    match format {
        Format::Text => println!(
            "{} {} objects through weight {}",
            summary.status, summary.objects, summary.max_n
        ),
        Format::Json => print_json(&summary),
        Format::Csv => {
            println!("status,objects,max_n");
            println!("{},{},{}", summary.status, summary.objects, summary.max_n);
        }
    }
    code
}

#[derive(Serialize)]
struct Assembled {
    modular: DModularOverpartition,
    overpartition: Overpartition,
    weight: u64,
}

fn cmd_construct(
    p: Params,
    m: u64,
    alpha: &str,
    beta: &str,
    gamma: &str,
    format: Format,
) -> Result<ExitCode, Failure> {
    let t = BoundedTriple::new(
        m,
        parts_list("alpha", alpha)?,
        parts_list("beta", beta)?,
        parts_list("gamma", gamma)?,
        p,
    )
    .map_err(Failure::domain)?;
    let mu = construct(&t, p);
    // Every column of an assembled diagram has length at least two, so the
    // value form always exists.
    let lambda = from_dmodular(&mu, p).expect("assembled columns are non-degenerate");
    let weight = mu.weight(p);
    debug_assert_eq!(deconstruct(&mu, p).as_ref(), Ok(&t));
    match format {
        Format::Text => {
            println!("{mu}");
            println!("{lambda}");
            println!("weight {weight}");
        }
        Format::Json => print_json(&Assembled {
            modular: mu,
            overpartition: lambda,
            weight,
        }),
        Format::Csv => {
            println!("length,label,value,overlined");
            for (c, part) in mu.parts().iter().zip(lambda.parts()) {
                println!("{},{},{},{}", c.length, c.label, part.value, part.overlined);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SeriesRow {
    n: usize,
    coefficient: String,
}

#[derive(Serialize)]
struct TableRow {
    m: usize,
    n: usize,
    coefficient: String,
}

fn cmd_series(id: IdentityId, side: Side, p: Params, order: usize, format: Format) -> ExitCode {
    let sides = identity_sides(id, p, order);
    match sides {
        IdentitySides::Series { lhs, rhs } => {
            let s = match side {
                Side::Lhs => lhs,
                Side::Rhs => rhs,
            };
            match format {
                Format::Text => {
                    for (n, c) in s.coeffs().iter().enumerate() {
                        println!("{n} {c}");
                    }
                }
                Format::Csv => {
                    println!("n,coefficient");
                    for (n, c) in s.coeffs().iter().enumerate() {
                        println!("{n},{c}");
                    }
                }
                Format::Json => {
                    let rows: Vec<SeriesRow> = s
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(n, c)| SeriesRow {
                            n,
                            coefficient: c.to_string(),
                        })
                        .collect();
                    print_json(&rows);
                }
            }
        }
        IdentitySides::Tables { lhs, rhs } => {
            let t = match side {
                Side::Lhs => lhs,
                Side::Rhs => rhs,
            };
            match format {
                Format::Text => {
                    for m in 0..=t.max_m() {
                        for n in 0..=t.max_n() {
                            println!("{m} {n} {}", t.get(m, n));
                        }
                    }
                }
                Format::Csv => {
                    println!("m,n,coefficient");
                    for m in 0..=t.max_m() {
                        for n in 0..=t.max_n() {
                            println!("{m},{n},{}", t.get(m, n));
                        }
                    }
                }
                Format::Json => {
                    let mut rows = Vec::new();
                    for m in 0..=t.max_m() {
                        for n in 0..=t.max_n() {
                            rows.push(TableRow {
                                m,
                                n,
                                coefficient: t.get(m, n).to_string(),
                            });
                        }
                    }
                    print_json(&rows);
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Count {
            family,
            d,
            r,
            max_n,
            format,
        } => Ok(cmd_count(family, params(d, r)?, max_n, format)),
        Command::Verify {
            identity,
            d,
            r,
            order,
            corrupt,
            format,
        } => Ok(cmd_verify(identity, params(d, r)?, order, corrupt, format)),
        Command::Bijection { direction } => match direction {
            Direction::Forward {
                d,
                r,
                alpha,
                beta,
                gamma,
                format,
            } => cmd_forward(params(d, r)?, &alpha, &beta, &gamma, format),
            Direction::Inverse { d, r, mu, format } => cmd_inverse(params(d, r)?, &mu, format),
            Direction::Roundtrip {
                d,
                r,
                max_n,
                format,
            } => Ok(cmd_roundtrip(params(d, r)?, max_n, format)),
        },
        Command::Construct {
            d,
            r,
            m,
            alpha,
            beta,
            gamma,
            format,
        } => cmd_construct(params(d, r)?, m, &alpha, &beta, &gamma, format),
        Command::Series {
            identity,
            side,
            d,
            r,
            order,
            format,
        } => Ok(cmd_series(identity, side, params(d, r)?, order, format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
