use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use e2homlab::check::{self, Status, CSV_HEADER};
use e2homlab::report::{parse_sections, run_report};
use e2homlab::unimod::MAX_DEGREE;
use e2homlab::{Caps, Error, Lab};

const CAP_ENV: &str = "E2HOMLAB_CAP";

#[derive(Parser)]
#[command(name = "e2homlab", version, about = "Homology computations for E2 over finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// basis size cap per degree of the complex (overrides E2HOMLAB_CAP)
    #[arg(long)]
    cap: Option<usize>,
    /// write output here instead of standard output
    #[arg(long)]
    out: Option<String>,
    /// include wall clock timings
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// JSON report for one ring
    Report {
        #[arg(long)]
        ring: String,
        /// top degree of the complex, at most 4
        #[arg(long, default_value_t = MAX_DEGREE as u8, value_parser = clap::value_parser!(u8).range(1..=MAX_DEGREE as i64))]
        deg: u8,
        /// comma separated sections: ring, complex, h1, d1, d2, gw, cycles, bloch, or all
        #[arg(long, default_value = "all")]
        checks: String,
        #[command(flatten)]
        common: Common,
    },
    /// Acceptance suite over a ring family, as CSV
    Check {
        /// fields-small, local-char2, local-odd, products or all
        #[arg(long, default_value = "all")]
        family: String,
        /// explicit rings instead of a family
        #[arg(long)]
        ring: Vec<String>,
        /// comma separated criterion numbers (1 to 13)
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Built-in ring families with basic ring data
    Rings {
        #[arg(long, default_value = "all")]
        family: String,
    },
}

fn caps(common: &Common) -> Result<Caps, Error> {
    let mut caps = Caps::default();
    let env = std::env::var(CAP_ENV).ok();
    let from_env = match env {
        Some(v) => Some(v.trim().parse::<usize>().map_err(|_| Error::Parse {
            offset: 0,
            message: format!("{CAP_ENV} must be a positive integer, got '{v}'"),
        })?),
        None => None,
    };
    if let Some(c) = common.cap.or(from_env) {
        caps.basis = c;
    }
    Ok(caps)
}

fn emit(out: &Option<String>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Precondition(format!("cannot write {path}: {e}"))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::Precondition(e.to_string()))
        }
    }
}

fn parse_criteria(text: &str) -> Result<Vec<u8>, Error> {
    if text == "all" {
        return Ok(check::CRITERIA.iter().map(|(i, _)| *i).collect());
    }
    let mut out = Vec::new();
    for part in text.split(',') {
        let id: u8 = part.trim().parse().ok().filter(|i| (1..=13).contains(i)).ok_or_else(|| Error::Parse {
            offset: 0,
            message: format!("unknown criterion '{part}'"),
        })?;
        out.push(id);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn family(name: &str) -> Result<Vec<&'static str>, Error> {
    check::family(name).ok_or_else(|| Error::Parse {
        offset: 0,
        message: format!("unknown family '{name}'"),
    })
}

fn report(ring: &str, deg: u8, checks: &str, common: &Common) -> Result<i32, Error> {
    let sections = parse_sections(checks).map_err(|message| Error::Parse { offset: 0, message })?;
    let rep = run_report(ring, caps(common)?, deg as usize, &sections, common.timing)?;
    let mut text = rep.to_json();
    text.push('\n');
    emit(&common.out, &text)?;
    if rep.failed_checks.is_empty() {
        Ok(0)
    } else {
        eprintln!("failed checks: {}", rep.failed_checks.join(", "));
        Ok(4)
    }
}

fn run_check(fam: &str, rings: &[String], checks: &str, jobs: usize, common: &Common) -> Result<i32, Error> {
    let criteria = parse_criteria(checks)?;
    let specs: Vec<&str> = if rings.is_empty() {
        family(fam)?
    } else {
        rings.iter().map(String::as_str).collect()
    };
    let verdicts = check::check_suite(&specs, caps(common)?, &criteria, jobs)?;
    let mut text = String::from(CSV_HEADER);
    text.push('\n');
    for v in &verdicts {
        text.push_str(&v.csv_row(common.timing));
        text.push('\n');
    }
    emit(&common.out, &text)?;
    let failing: Vec<String> = verdicts
        .iter()
        .filter(|v| v.status == Status::Fail)
        .map(|v| format!("{}:{}", v.ring, v.criterion))
        .collect();
    if !failing.is_empty() {
        eprintln!("failing criteria: {}", failing.join(" "));
        return Ok(4);
    }
    let errored: Vec<&check::Verdict> = verdicts.iter().filter(|v| v.status == Status::Error).collect();
    if let Some(first) = errored.first() {
        for v in &errored {
            eprintln!("{} criterion {}: {}", v.ring, v.criterion, v.got);
        }
        return Ok(first.error_code.unwrap_or(4));
    }
    Ok(0)
}

fn rings(fam: &str) -> Result<i32, Error> {
    let names: Vec<&str> = if fam == "all" {
        check::FAMILIES.iter().map(|(n, _)| *n).collect()
    } else {
        family(fam)?;
        vec![fam]
    };
    let mut text = String::from("family,ring,order,units,square_classes,w_size,two_is_unit\n");
    for name in names {
        for spec in family(name)? {
            let lab = Lab::from_spec_default(spec)?;
            text.push_str(&format!(
                "{name},{spec},{},{},{},{},{}\n",
                lab.ring.order(),
                lab.units.units.len(),
                lab.units.class_count(),
                lab.w.len(),
                lab.two_is_unit()
            ));
        }
    }
    emit(&None, &text)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Report { ring, deg, checks, common } => report(ring, *deg, checks, common),
        Command::Check {
            family,
            ring,
            checks,
            jobs,
            common,
        } => run_check(family, ring, checks, *jobs, common),
        Command::Rings { family } => rings(family),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("e2homlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
