//! `verify`: resultant sweeps, named checks and manifest tools.
//!
//! Exit codes: 0 pass, 1 mathematical mismatch, 2 usage error, 3 timeout or
//! internal error.

use std::fs;
use std::process::ExitCode;

use biharm_algebra::catalog::{run_check, CheckName, CheckOutcome, MANIFEST_TEXT};
use biharm_algebra::expr::{format, load_manifest, parse_poly};
use biharm_algebra::poly::{BigRat, VarId};
use biharm_algebra::resultant::resultant;
use biharm_algebra::sweep::{
    parse_list, parse_range, run_sweep, ElimVar, RPolicy, ReportFormat, SweepConfig, M_MAX,
};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "verify", version, about = "Exact resultant sweeps and algebraic checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Res(H, K, var) over a grid of (m, r, c).
    Sweep {
        #[arg(long, default_value = "k")]
        var: ElimVar,
        /// Inclusive m range, e.g. 4..15.
        #[arg(long)]
        m: Option<String>,
        /// `all` or a comma-separated list.
        #[arg(long, default_value = "all")]
        r: RPolicy,
        /// Comma-separated subset of -1,0,1.
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        jobs: Option<usize>,
        /// m from 4 to 30.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
        /// Omit timings so reruns compare byte for byte.
        #[arg(long)]
        stable_output: bool,
        #[arg(long, default_value_t = 300)]
        case_timeout: u64,
    },
    /// Runs a named check (or `all`).
    Check {
        name: String,
        #[arg(long, default_value = "text")]
        format: ReportFormat,
    },
    /// Resultant of two manifest entries.
    Resultant {
        /// Manifest file; the embedded one when omitted.
        #[arg(long)]
        manifest: Option<String>,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        var: String,
        /// Specializations such as m=7 (repeatable).
        #[arg(long = "set", allow_hyphen_values = true)]
        set: Vec<String>,
    },
    /// Writes the embedded manifest to FILE or stdout.
    ExportManifest { file: Option<String> },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Sweep {
            var,
            m,
            r,
            c,
            jobs,
            full,
            format,
            stable_output,
            case_timeout,
        } => {
            let mut config = SweepConfig {
                var,
                r,
                format,
                case_timeout_secs: case_timeout,
                ..SweepConfig::default()
            };
            if let Some(j) = jobs {
                config.jobs = j;
            }
            match parse_list(&c) {
                Ok(c) => config.c = c,
                Err(e) => return usage(e),
            }
            if full {
                config.m_hi = M_MAX;
            }
            if let Some(m) = m {
                match parse_range(&m) {
                    Ok((lo, hi)) => {
                        config.m_lo = lo;
                        config.m_hi = hi;
                    }
                    Err(e) => return usage(e),
                }
            }
            let report = match run_sweep(&config) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            let code = report.exit_code();
            let report = if stable_output { report.stable() } else { report };
            println!("{}", report.render());
            ExitCode::from(code as u8)
        }
        Command::Check { name, format } => {
            let names: Vec<CheckName> = if name == "all" {
                CheckName::ALL.to_vec()
            } else {
                match name.parse() {
                    Ok(n) => vec![n],
                    Err(e) => return usage(e),
                }
            };
            let mut all_pass = true;
            for n in names {
                let outcome = run_check(n);
                all_pass &= outcome.pass;
                print_outcome(&outcome, format);
            }
            ExitCode::from(if all_pass { 0 } else { 1 })
        }
        Command::Resultant {
            manifest,
            a,
            b,
            var,
            set,
        } => cmd_resultant(manifest.as_deref(), &a, &b, &var, &set),
        Command::ExportManifest { file } => match file {
            Some(path) => match fs::write(&path, MANIFEST_TEXT) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write {path}: {e}");
                    ExitCode::from(3)
                }
            },
            None => {
                print!("{MANIFEST_TEXT}");
                ExitCode::SUCCESS
            }
        },
    }
}

fn print_outcome(o: &CheckOutcome, format: ReportFormat) {
    match format {
        ReportFormat::Json => println!("{}", serde_json::to_string_pretty(o).expect("serializes")),
        ReportFormat::Text => {
            println!("{}: {} ({} ms)", o.name, if o.pass { "pass" } else { "FAIL" }, o.elapsed_ms);
            for d in &o.details {
                println!("  {d}");
            }
            if let Some(w) = &o.witness {
                println!("  witness: {w}");
            }
        }
    }
}

fn cmd_resultant(path: Option<&str>, a: &str, b: &str, var: &str, set: &[String]) -> ExitCode {
    let text = match path {
        Some(p) => match fs::read_to_string(p) {
            Ok(t) => t,
            Err(e) => return usage(format_args!("cannot read {p}: {e}")),
        },
        None => MANIFEST_TEXT.to_string(),
    };
    let manifest = match load_manifest(&text) {
        Ok(m) => m,
        Err(e) => return usage(e),
    };
    let var: VarId = match var.parse() {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let mut assignment = Vec::new();
    for s in set {
        let Some((name, value)) = s.split_once('=') else {
            return usage(format_args!("--set expects NAME=VALUE, got `{s}`"));
        };
        let v: VarId = match name.trim().parse() {
            Ok(v) => v,
            Err(e) => return usage(e),
        };
        let value = match parse_poly(value).map(|p| p.as_constant()) {
            Ok(Some(c)) => c,
            _ => return usage(format_args!("--set value must be a rational number, got `{value}`")),
        };
        assignment.push((v, value));
    }
    let fetch = |name: &str| manifest.get(name).map(|p| p.specialize_many(&assignment));
    let (Some(pa), Some(pb)) = (fetch(a), fetch(b)) else {
        return usage(format_args!("`{a}` or `{b}` is not bound in the manifest"));
    };
    match resultant(&pa, &pb, var) {
        Ok(res) => {
            println!("{}", format(&res));
            let vars = res.variables();
            if vars.len() == 1 {
                let v = vars[0];
                let d = res.degree(v);
                let lead: BigRat = res.coefficient(v, d).as_constant().expect("univariate");
                println!("# degree {d} in {v}, leading coefficient {lead}");
            } else {
                println!("# total degree {}, {} terms", res.total_degree(), res.len());
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}
