mod commands;
mod report;

use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};
use num_bigint::BigInt;

use eschbaz::arith::FactorConfig;
use eschbaz::{BazParams, Error, EschParams};

use report::{Format, Report};

/// Totally geodesic embeddings of Eschenburg spaces into Bazaikin spaces,
/// checked in exact integer arithmetic.
#[derive(Debug, Parser)]
#[command(name = "eschbaz", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Seed for the randomized factorization step.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Largest cofactor, in decimal digits, that factorization will attempt.
    #[arg(long, global = true)]
    factor_bound: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct EschArgs {
    /// a_1,a_2,a_3
    #[arg(long, value_parser = triple, allow_hyphen_values = true)]
    a: Ints<3>,
    /// b_1,b_2,b_3 with the same sum as a
    #[arg(long, value_parser = triple, allow_hyphen_values = true)]
    b: Ints<3>,
}

#[derive(Debug, clap::Args)]
struct QArgs {
    /// q_1,...,q_5
    #[arg(long, value_parser = quintuple, allow_hyphen_values = true)]
    q: Ints<5>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Freeness, curvature, |H^4|, kernel order and canonical form.
    VerifyEsch(EschArgs),
    /// Freeness (with offending gcd pairs), curvature and |H^6|.
    VerifyBaz(QArgs),
    /// Candidate host q^c for one shift c.
    Embed {
        #[command(flatten)]
        esch: EschArgs,
        #[arg(long, allow_hyphen_values = true)]
        c: BigInt,
    },
    /// Every candidate host in the positive-curvature window.
    Window(EschArgs),
    /// Shifts c_mu that give nonsingular hosts.
    Lemma2 {
        #[command(flatten)]
        esch: EschArgs,
        #[arg(long, default_value_t = 3)]
        mu_max: u32,
    },
    /// N nonsingular hosts with pairwise distinct |H^6|.
    Distinct {
        #[command(flatten)]
        esch: EschArgs,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// The ten totally geodesic Eschenburg spaces of B_q.
    Submanifolds(QArgs),
    /// The swapped space E_{b+c,a+c} and its host.
    Dual {
        #[command(flatten)]
        esch: EschArgs,
        #[arg(long, allow_hyphen_values = true)]
        c: BigInt,
    },
    /// Reproduce the nine tabulated counterexamples.
    Table1,
    /// Check both cohomogeneity-two families for 0 <= k <= K.
    Families {
        #[arg(long, default_value_t = 10)]
        k_max: i64,
    },
    /// Check the cohomogeneity-one family for 1 <= p <= P.
    Cohom1 {
        #[arg(long, default_value_t = 10)]
        p_max: i64,
    },
    /// Exhaustive search of first-chain parameters with entries <= N.
    Scan {
        #[arg(long, default_value_t = 60)]
        max_abs: i64,
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
}

/// A fixed number of comma-separated integers.
#[derive(Debug, Clone)]
struct Ints<const N: usize>([BigInt; N]);

fn int_list<const N: usize>(s: &str) -> Result<Ints<N>, String> {
    let xs = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| format!("not an integer: {t:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = xs.len();
    xs.try_into()
        .map(Ints)
        .map_err(|_| format!("expected {N} comma-separated integers, got {n}"))
}

fn triple(s: &str) -> Result<Ints<3>, String> {
    int_list(s)
}

fn quintuple(s: &str) -> Result<Ints<5>, String> {
    int_list(s)
}

impl EschArgs {
    fn params(&self) -> eschbaz::Result<EschParams> {
        EschParams::new(self.a.0.clone(), self.b.0.clone())
    }
}

impl QArgs {
    fn params(&self) -> BazParams {
        BazParams::new(self.q.0.clone())
    }
}

const EXIT_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_LIMIT: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Mismatch { .. } | Error::Internal(_) => EXIT_FAILED,
        Error::FactorizationIncomplete { .. } => EXIT_LIMIT,
        _ => EXIT_INVALID,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::VerifyEsch(_) => "verify-esch",
        Command::VerifyBaz(_) => "verify-baz",
        Command::Embed { .. } => "embed",
        Command::Window(_) => "window",
        Command::Lemma2 { .. } => "lemma2",
        Command::Distinct { .. } => "distinct",
        Command::Submanifolds(_) => "submanifolds",
        Command::Dual { .. } => "dual",
        Command::Table1 => "table1",
        Command::Families { .. } => "families",
        Command::Cohom1 { .. } => "cohom1",
        Command::Scan { .. } => "scan",
    }
}

/// Runs the command; the flag is false when a verification failed without
/// raising an error.
fn run(cli: &Cli) -> eschbaz::Result<(Report, bool)> {
    let mut cfg = FactorConfig::default();
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(bound) = cli.factor_bound {
        cfg.max_digits = bound;
    }
    let ok = |r: Report| Ok((r, true));
    match &cli.command {
        Command::VerifyEsch(a) => ok(commands::verify_esch(&a.params()?)?),
        Command::VerifyBaz(q) => ok(commands::verify_baz(&q.params())?),
        Command::Embed { esch, c } => ok(commands::embed(&esch.params()?, c)?),
        Command::Window(a) => ok(commands::window(&a.params()?)?),
        Command::Lemma2 { esch, mu_max } => commands::lemma2(&esch.params()?, *mu_max, &cfg),
        Command::Distinct { esch, n } => ok(commands::distinct(&esch.params()?, *n, &cfg)?),
        Command::Submanifolds(q) => ok(commands::submanifolds(&q.params())?),
        Command::Dual { esch, c } => ok(commands::dual(&esch.params()?, c)?),
        Command::Table1 => ok(commands::table1()?),
        Command::Families { k_max } => ok(commands::families(*k_max)?),
        Command::Cohom1 { p_max } => ok(commands::cohom1(*p_max)?),
        Command::Scan { max_abs, limit } => ok(commands::scan(*max_abs, *limit)?),
    }
}

fn emit(report: &Report, format: Format, to_stderr: bool) {
    let color = std::env::var_os("NO_COLOR").is_none()
        && if to_stderr {
            std::io::stderr().is_terminal()
        } else {
            std::io::stdout().is_terminal()
        };
    let text = report.render(format, color);
    let _ = if to_stderr {
        std::io::stderr().write_all(text.as_bytes())
    } else {
        std::io::stdout().write_all(text.as_bytes())
    };
}

/// Best-effort `--format` lookup for reporting argument errors.
fn requested_format(args: &[String]) -> Format {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let v = match a.strip_prefix("--format") {
            Some("") => it.next().map(String::as_str),
            Some(rest) => rest.strip_prefix('='),
            None => None,
        };
        match v {
            Some("json") => return Format::Json,
            Some("csv") => return Format::Csv,
            _ => {}
        }
    }
    Format::Text
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let format = requested_format(&args);
            if format == Format::Text {
                let _ = e.print();
            } else {
                let cmd = Cli::command();
                let name = args
                    .iter()
                    .skip(1)
                    .find(|a| cmd.find_subcommand(a.as_str()).is_some())
                    .map_or("", String::as_str);
                let mut r = Report::new(name);
                let rendered = e.render().to_string();
                let message = rendered.lines().next().unwrap_or_default();
                let message = message.strip_prefix("error: ").unwrap_or(message);
                r.error = Some(("invalid_argument".into(), message.to_string()));
                emit(&r, format, false);
                let _ = e.print();
            }
            return ExitCode::from(EXIT_INVALID);
        }
    };
    match run(&cli) {
        Ok((report, true)) => {
            emit(&report, cli.format, false);
            ExitCode::SUCCESS
        }
        Ok((mut report, false)) => {
            report.error = Some((
                "verification_failed".into(),
                "a produced shift is singular".into(),
            ));
            emit(&report, cli.format, false);
            ExitCode::from(EXIT_FAILED)
        }
        Err(e) => {
            let mut r = Report::new(command_name(&cli.command));
            r.error = Some((e.reason().to_string(), e.to_string()));
            emit(&r, cli.format, cli.format == Format::Text);
            ExitCode::from(exit_code(&e))
        }
    }
}
