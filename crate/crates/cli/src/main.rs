mod error;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::classify::{classify_bucket, enumerate_data, signature_buckets, sort_reports};
use hurwitz_core::extension::extension_report_with;
use hurwitz_core::orbit::{Canon, Canonicalizer, Mover};
use hurwitz_core::{
    abelian_certificate, automorphism_group, centerless_minimum, enumerate_orbit, Datum, Limits,
    PermGroup, TypeReport,
};
use rayon::prelude::*;
use serde::Serialize;

use error::{CliError, CliResult};
use report::*;

/// Hurwitz orbits, topological types and extension data of branched G-covers of the sphere.
#[derive(Parser)]
#[command(name = "hurwitz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a datum and print its genus and signature.
    Check(DatumArgs),
    /// Genus of the cover described by a datum.
    Genus(DatumArgs),
    /// Orbit of a datum under the pure or full braid moves.
    Orbit {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, value_enum, default_value_t = Movers::Pure)]
        movers: Movers,
        #[arg(long, value_enum, default_value_t = CanonArg::Exact)]
        canon: CanonArg,
    },
    /// Enumerate all data for (G, n) and split them into topological types.
    Classify {
        /// Builtin group name or JSON group file.
        #[arg(long)]
        group: String,
        /// Number of branch points.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
        /// Worker threads for the per-signature work; 1 runs sequentially.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Orbit indices, the induced automorphisms and optional certificates.
    Extensions {
        #[command(flatten)]
        datum: DatumArgs,
        /// Centerless minimum with its replay certificate; needs Z(G) = 1.
        #[arg(long)]
        minimal: bool,
        /// Check that every pure generator fixes the datum; needs G abelian.
        #[arg(long)]
        abelian_cert: bool,
    },
}

#[derive(Args)]
struct DatumArgs {
    /// Builtin group name or JSON group file; optional when the datum is a JSON file.
    #[arg(long)]
    group: Option<String>,
    /// Comma-separated cycle-notation entries, "k mod m" entries for Zm, or a JSON datum file.
    #[arg(long)]
    datum: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value_t = Limits::default().orbit_cap)]
    orbit_cap: usize,
    #[arg(long, default_value_t = Limits::default().enum_cap)]
    enum_cap: usize,
}

impl Common {
    fn limits(&self) -> Limits {
        Limits {
            orbit_cap: self.orbit_cap,
            enum_cap: self.enum_cap,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Movers {
    Pure,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum CanonArg {
    Exact,
    Inn,
    Aut,
}

impl From<CanonArg> for Canon {
    fn from(c: CanonArg) -> Canon {
        match c {
            CanonArg::Exact => Canon::Exact,
            CanonArg::Inn => Canon::Inn,
            CanonArg::Aut => Canon::Aut,
        }
    }
}

impl DatumArgs {
    fn load(&self) -> CliResult<Datum> {
        let group = self.group.as_deref().map(input::load_group).transpose()?;
        input::load_datum(&self.datum, group)
    }
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) -> CliResult<()> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Table => table(),
    };
    std::io::stdout()
        .lock()
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Internal(e.to_string()))
}

fn classify(
    group: &Arc<PermGroup>,
    n: usize,
    limits: &Limits,
    threads: usize,
) -> CliResult<Vec<TypeReport>> {
    let auts = automorphism_group(group);
    let data = enumerate_data(group, n, limits)?;
    let buckets = signature_buckets(data, &auts);
    let per_bucket: Vec<_> = if threads <= 1 {
        buckets
            .iter()
            .map(|b| classify_bucket(b, &auts, limits))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::Internal(e.to_string()))?;
        pool.install(|| {
            buckets
                .par_iter()
                .map(|b| classify_bucket(b, &auts, limits))
                .collect()
        })
    };
    let mut reports = Vec::new();
    for r in per_bucket {
        reports.extend(r?);
    }
    sort_reports(&mut reports);
    Ok(reports)
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Check(args) => {
            let d = args.load()?;
            let r = CheckReport::new(&d);
            emit(args.common.format, &r, || r.table())
        }
        Command::Genus(args) => {
            let d = args.load()?;
            let r = GenusReport::new(&d);
            emit(args.common.format, &r, || r.table())
        }
        Command::Orbit {
            datum,
            movers,
            canon,
        } => {
            let d = datum.load()?;
            let limits = datum.common.limits();
            let n = d.len();
            let movers = match movers {
                Movers::Pure => Mover::pure(n)?,
                Movers::Full => Mover::full(n)?,
            };
            let canon = Canon::from(canon);
            let auts = (canon == Canon::Aut).then(|| automorphism_group(d.group()));
            let canonicalizer = Canonicalizer::new(canon, auts.as_ref())?;
            let orbit = enumerate_orbit(&d, &movers, canonicalizer, &limits)?;
            let r = OrbitReport::new(&orbit);
            emit(datum.common.format, &r, || r.table())
        }
        Command::Classify {
            group,
            n,
            common,
            threads,
        } => {
            let group = input::load_group(&group)?;
            let reports = classify(&group, n, &common.limits(), threads)?;
            let types: Vec<TypeJson> = reports
                .iter()
                .enumerate()
                .map(|(k, t)| TypeJson::new(k + 1, t))
                .collect();
            emit(common.format, &types, || types_table(&types))
        }
        Command::Extensions {
            datum,
            minimal,
            abelian_cert,
        } => {
            let d = datum.load()?;
            let limits = datum.common.limits();
            let auts = automorphism_group(d.group());
            let report = extension_report_with(&d, &auts, &limits)?;
            let mut out = ExtensionJson::new(&report, &auts);
            if minimal {
                out = out.with_minimal(&centerless_minimum(&d, &limits)?);
            }
            if abelian_cert {
                out = out.with_abelian(&abelian_certificate(&d, &limits)?);
            }
            emit(datum.common.format, &out, || out.table())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hurwitz: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
