//! CLI front end: enumerate supports, compute single duals and collapses,
//! run verification batches, and dump the exceptional table. Thin adapters
//! over orbits-core; exit codes are 0 on success, 1 on mathematical failure
//! or invalid input, 2 on usage errors (clap's default).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orbits_core::supports::{enumerate_supports, GroupFamily, GroupSpec, InnerTwist};
use orbits_core::verify::{
    collect_families, lift, markdown_exceptional, markdown_report, verify_exceptional,
    verify_family, AggregateReport, TwistSelection, VerificationReport,
};
use orbits_core::{bv_dual, exceptional_rows, ClassicalKind, Partition, TypedOrbit};

#[derive(Parser)]
#[command(
    name = "orbits",
    about = "Partition-level nilpotent orbit duality and wavefront-set verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the unipotent cuspidal supports of a classical group
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        twist: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Barbasch-Vogan dual of a typed orbit
    Dual(OrbitArgs),
    /// X-collapse of a partition
    Collapse {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        partition: String,
    },
    /// Transpose of a partition
    Transpose {
        #[arg(long)]
        partition: String,
    },
    /// Lift enumerated supports through their wavefront components
    Lift {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        twist: String,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
    },
    /// Run the verification batch; exits 0 iff every binding check passes
    Verify {
        /// Family group, or "all" for every classical family
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long, default_value_t = 50)]
        n_max: u32,
        /// Twist token, or "all"
        #[arg(long, default_value = "all", allow_hyphen_values = true)]
        twist: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify the exceptional table rows
    VerifyExceptional {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Dump the embedded exceptional dataset as JSON
    ExportTables,
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    partition: String,
}

/// Comma-separated descending positive integers; "" or "-" is empty.
fn parse_partition(s: &str) -> Result<Partition, String> {
    if s.is_empty() || s == "-" {
        return Ok(Partition::empty());
    }
    let parts: Vec<u32> = s
        .split(',')
        .map(|tok| tok.trim().parse::<u32>().map_err(|e| format!("{tok:?}: {e}")))
        .collect::<Result<_, _>>()?;
    Partition::from_descending(parts).map_err(|e| e.to_string())
}

fn parse_orbit(args: &OrbitArgs) -> Result<TypedOrbit, String> {
    let kind: ClassicalKind = args.kind.parse()?;
    let partition = parse_partition(&args.partition)?;
    TypedOrbit::new(kind, args.n, partition).map_err(|e| e.to_string())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn families_markdown(fams: &[orbits_core::SupportFamily]) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "| n | twist | a | b | J | lambda | sigmas |");
    let _ = writeln!(out, "|---|-------|---|---|---|--------|--------|");
    for f in fams {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            f.group.n,
            f.group.twist,
            f.params.a,
            f.params.b,
            f.j_label,
            f.lambda.partition(),
            f.sigma_count,
        );
    }
    out
}

fn run_verify(family: &str, n_max: u32, twist: &str, format: Format) -> Result<bool, String> {
    let selection = if twist == "all" {
        TwistSelection::All
    } else {
        TwistSelection::Only(vec![twist.parse::<InnerTwist>()?])
    };
    let families_list: Vec<GroupFamily> = if family == "all" {
        GroupFamily::CLASSICAL.to_vec()
    } else {
        vec![family.parse()?]
    };

    let mut all_families = Vec::new();
    for fam in families_list {
        // pgl twists are rank-determined; an explicit twist narrows the others
        let sel = if fam == GroupFamily::Pgl {
            TwistSelection::All
        } else {
            selection.clone()
        };
        all_families.extend(collect_families(fam, n_max, &sel).map_err(|e| e.to_string())?);
    }
    let reports: Vec<VerificationReport> = all_families.iter().map(verify_family).collect();
    let passed = reports.iter().filter(|r| r.passed()).count();
    let agg = AggregateReport {
        family_count: reports.len(),
        passed,
        failed: reports.len() - passed,
        reports,
    };
    match format {
        Format::Json => println!("{}", json(&agg)),
        Format::Markdown => {
            print!("{}", markdown_report(&all_families, &agg.reports));
            println!(
                "\n{} families, {} passed, {} failed",
                agg.family_count, agg.passed, agg.failed
            );
        }
    }
    Ok(agg.all_passed())
}

fn dispatch(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Enumerate {
            family,
            n,
            twist,
            format,
        } => {
            let family: GroupFamily = family.parse()?;
            let twist: InnerTwist = twist.parse()?;
            let spec = GroupSpec::new(family, n, twist).map_err(|e| e.to_string())?;
            let fams = enumerate_supports(&spec).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!("{}", json(&fams)),
                Format::Markdown => print!("{}", families_markdown(&fams)),
            }
            Ok(true)
        }
        Command::Dual(args) => {
            let orbit = parse_orbit(&args)?;
            println!("{}", json(&bv_dual(&orbit)));
            Ok(true)
        }
        Command::Collapse { kind, partition } => {
            let kind: ClassicalKind = kind.parse()?;
            let p = parse_partition(&partition)?;
            let collapsed = p.collapse(kind).map_err(|e| e.to_string())?;
            println!("{}", json(&collapsed));
            Ok(true)
        }
        Command::Transpose { partition } => {
            let p = parse_partition(&partition)?;
            println!("{}", json(&p.transpose()));
            Ok(true)
        }
        Command::Lift {
            family,
            n,
            twist,
            a,
            b,
        } => {
            let family: GroupFamily = family.parse()?;
            let twist: InnerTwist = twist.parse()?;
            let spec = GroupSpec::new(family, n, twist).map_err(|e| e.to_string())?;
            let fams = enumerate_supports(&spec).map_err(|e| e.to_string())?;
            let selected: Vec<_> = fams
                .into_iter()
                .filter(|f| a.is_none_or(|a| f.params.a == a) && b.is_none_or(|b| f.params.b == b))
                .collect();
            let lifts = selected
                .iter()
                .map(lift)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            println!("{}", json(&lifts));
            Ok(true)
        }
        Command::Verify {
            family,
            n_max,
            twist,
            format,
        } => run_verify(&family, n_max, &twist, format),
        Command::VerifyExceptional { format } => {
            let reports = verify_exceptional();
            let ok = reports.iter().all(|r| r.passed());
            match format {
                Format::Json => println!("{}", json(&reports)),
                Format::Markdown => print!("{}", markdown_exceptional(&reports)),
            }
            Ok(ok)
        }
        Command::ExportTables => {
            println!("{}", json(&exceptional_rows()));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
