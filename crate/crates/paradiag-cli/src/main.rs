//! Command-line front end: closed-form tables, identity verification runs,
//! brute-force enumeration, and OEIS-style b-file export.
//!
//! Exit codes: 0 on success (for `verify`: every identity that is not a
//! negative control passed), 1 on a verification failure, 2 on usage errors.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use paradiag::closed_forms::{f01_odd, f02_even, family_histogram, FamilyClass};
use paradiag::identities::{verify_all, VerificationReport};
use paradiag::polygon::{histogram, KHistogram};

#[derive(Parser)]
#[command(
    name = "paradiag",
    version,
    about = "Triangulations of a convex n-gon counted by diagonals parallel to a fixed segment",
    after_help = "Environment:\n  PARADIAG_MAX_N  largest polygon size the brute-force paths (enumerate,\n                  table --oracle) accept; default 16.\n\nExit codes: 0 success, 1 verification failure, 2 usage error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form k-histograms for a range of polygon sizes
    Table {
        /// Smallest polygon size (>= 3)
        n_lo: u32,
        /// Largest polygon size
        n_hi: u32,
        /// Direction-class family; `auto` prints 01 and 02 rows for even n
        /// and a single collapsed row for odd n
        #[arg(long, value_enum, default_value = "auto")]
        class: ClassSpec,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check every row against brute-force enumeration
        #[arg(long)]
        oracle: bool,
        /// Worker threads for the brute-force paths (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check every registered identity up to an index bound
    Verify {
        /// Largest index to verify each identity at (>= 2)
        n_hi: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Brute-force histogram for one polygon and reference segment
    Enumerate {
        /// Polygon size (capped by PARADIAG_MAX_N)
        n: u32,
        /// First endpoint of the reference segment
        x: u32,
        /// Second endpoint of the reference segment
        y: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// OEIS-style b-file: one "index value" line per term, indices from 1
    Bfile {
        sequence: SequenceId,
        /// Number of terms to emit
        count: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassSpec {
    #[value(name = "01")]
    Class01,
    #[value(name = "02")]
    Class02,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceId {
    /// Triangulations of the 2m-gon (m = 2, 3, ...) with no diagonal
    /// parallel to segment 0-2: 1, 6, 53, 554, ...
    #[value(name = "f02_even_from_4")]
    F02EvenFrom4,
    /// Triangulations of the (2m+1)-gon (m = 2, 3, ...) with no diagonal
    /// in a fixed direction class: 3, 22, 211, ...
    #[value(name = "f01_odd_from_5")]
    F01OddFrom5,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Table {
            n_lo,
            n_hi,
            class,
            format,
            oracle,
            jobs,
        } => {
            install_jobs(jobs)?;
            run_table(n_lo, n_hi, class, format, oracle)
        }
        Command::Verify { n_hi, format, jobs } => {
            install_jobs(jobs)?;
            run_verify(n_hi, format)
        }
        Command::Enumerate { n, x, y, format, jobs } => {
            install_jobs(jobs)?;
            run_enumerate(n, x, y, format)
        }
        Command::Bfile { sequence, count } => run_bfile(sequence, count),
    }
}

fn install_jobs(jobs: Option<usize>) -> Result<(), String> {
    let Some(jobs) = jobs else { return Ok(()) };
    if jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| format!("could not configure {jobs} worker threads: {e}"))
}

fn oracle_cap() -> Result<u32, String> {
    match std::env::var("PARADIAG_MAX_N") {
        Err(std::env::VarError::NotPresent) => Ok(16),
        Err(e) => Err(format!("PARADIAG_MAX_N: {e}")),
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| format!("PARADIAG_MAX_N must be a non-negative integer, got {raw:?}")),
    }
}

fn reject_bfile_format(format: Format) -> Result<(), String> {
    if format == Format::Bfile {
        Err("--format bfile is only available through the bfile command".into())
    } else {
        Ok(())
    }
}

fn run_table(
    n_lo: u32,
    n_hi: u32,
    class: ClassSpec,
    format: Format,
    oracle: bool,
) -> Result<ExitCode, String> {
    reject_bfile_format(format)?;
    if n_lo < 3 {
        return Err(format!("polygon sizes start at 3, got {n_lo}"));
    }
    if n_lo > n_hi {
        return Err(format!("empty size range {n_lo}..{n_hi}"));
    }
    if oracle {
        let cap = oracle_cap()?;
        if n_hi > cap {
            return Err(format!(
                "--oracle is capped at n = {cap} (raise PARADIAG_MAX_N to go further), got {n_hi}"
            ));
        }
    }

    let mut rows: Vec<(u32, &'static str, KHistogram)> = Vec::new();
    for n in n_lo..=n_hi {
        for (label, family) in selected_families(n, class) {
            let hist = family_histogram(n, family).map_err(|e| e.to_string())?;
            if oracle {
                let y = match family {
                    FamilyClass::Class01 => 1,
                    FamilyClass::Class02 => 2,
                };
                let brute = histogram(n, 0, y).map_err(|e| e.to_string())?;
                if brute.counts() != hist.counts() {
                    eprintln!(
                        "mismatch at n={n} class {label}: enumeration disagrees with the closed form"
                    );
                    return Ok(ExitCode::from(1));
                }
            }
            rows.push((n, label, hist));
        }
    }

    match format {
        Format::Text => {
            for (n, label, hist) in &rows {
                match class {
                    ClassSpec::Auto => println!("{n} {label}: {}", hist_cells(hist)),
                    _ => println!("{n}: {}", hist_cells(hist)),
                }
            }
        }
        Format::Csv => {
            println!("n,class,k,count");
            for (n, label, hist) in &rows {
                for (k, count) in hist.counts() {
                    println!("{n},{label},{k},{count}");
                }
            }
        }
        Format::Json => {
            for (n, label, hist) in &rows {
                println!(
                    "{{\"n\":{n},\"class\":\"{label}\",\"counts\":{}}}",
                    hist_json_counts(hist)
                );
            }
        }
        Format::Bfile => unreachable!("rejected above"),
    }
    Ok(ExitCode::SUCCESS)
}

fn selected_families(n: u32, class: ClassSpec) -> Vec<(&'static str, FamilyClass)> {
    match class {
        ClassSpec::Class01 => vec![("01", FamilyClass::Class01)],
        ClassSpec::Class02 => vec![("02", FamilyClass::Class02)],
        ClassSpec::Auto if n.is_multiple_of(2) => {
            vec![("01", FamilyClass::Class01), ("02", FamilyClass::Class02)]
        }
        // Odd polygons have a single collapsed family.
        ClassSpec::Auto => vec![("all", FamilyClass::Class01)],
    }
}

fn run_verify(n_hi: u32, format: Format) -> Result<ExitCode, String> {
    reject_bfile_format(format)?;
    let reports = verify_all(n_hi).map_err(|e| e.to_string())?;

    match format {
        Format::Text => {
            for report in &reports {
                print_text_report(report);
            }
        }
        Format::Csv => {
            println!("identity,n_lo,n_hi,passed,failures,first_failure_n,first_failure_lhs,first_failure_rhs");
            for report in &reports {
                let (n, lhs, rhs) = match report.failures.first() {
                    Some(f) => (f.n.to_string(), f.lhs.to_string(), f.rhs.to_string()),
                    None => (String::new(), String::new(), String::new()),
                };
                println!(
                    "{},{},{},{},{},{n},{lhs},{rhs}",
                    report.identity,
                    report.range.0,
                    report.range.1,
                    report.passed,
                    report.failures.len(),
                );
            }
        }
        Format::Json => {
            for report in &reports {
                let failures = report
                    .failures
                    .iter()
                    .map(|f| format!("{{\"n\":{},\"lhs\":\"{}\",\"rhs\":\"{}\"}}", f.n, f.lhs, f.rhs))
                    .collect::<Vec<_>>()
                    .join(",");
                println!(
                    "{{\"identity\":\"{}\",\"n_lo\":{},\"n_hi\":{},\"passed\":{},\"negative_control\":{},\"failures\":[{failures}]}}",
                    report.identity,
                    report.range.0,
                    report.range.1,
                    report.passed,
                    report.identity.is_negative_control(),
                );
            }
        }
        Format::Bfile => unreachable!("rejected above"),
    }

    let all_required_pass = reports
        .iter()
        .all(|r| r.passed || r.identity.is_negative_control());
    Ok(if all_required_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_text_report(report: &VerificationReport) {
    let (lo, hi) = report.range;
    if report.passed {
        println!("{} {lo}..{hi}: pass", report.identity);
    } else {
        let first = &report.failures[0];
        let note = if report.identity.is_negative_control() {
            " [negative control, expected]"
        } else {
            ""
        };
        println!(
            "{} {lo}..{hi}: FAIL first n={} lhs={} rhs={} ({} failures){note}",
            report.identity,
            first.n,
            first.lhs,
            first.rhs,
            report.failures.len(),
        );
    }
}

fn run_enumerate(n: u32, x: u32, y: u32, format: Format) -> Result<ExitCode, String> {
    reject_bfile_format(format)?;
    let cap = oracle_cap()?;
    if n > cap {
        return Err(format!(
            "enumeration is capped at n = {cap} (raise PARADIAG_MAX_N to go further), got {n}"
        ));
    }
    let start = Instant::now();
    let hist = histogram(n, x, y).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let total = hist.total();
    eprintln!("enumerated {total} triangulations in {elapsed:.3?}");

    let class = (x + y) % n;
    match format {
        Format::Text => println!("{n}: {} total={total}", hist_cells(&hist)),
        Format::Csv => {
            println!("n,class,k,count");
            for (k, count) in hist.counts() {
                println!("{n},{class},{k},{count}");
            }
        }
        Format::Json => println!(
            "{{\"n\":{n},\"class\":\"{class}\",\"counts\":{},\"total\":\"{total}\"}}",
            hist_json_counts(&hist)
        ),
        Format::Bfile => unreachable!("rejected above"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_bfile(sequence: SequenceId, count: u32) -> Result<ExitCode, String> {
    let mut out = String::new();
    for i in 1..=count {
        let value = match sequence {
            SequenceId::F02EvenFrom4 => f02_even(i + 1),
            SequenceId::F01OddFrom5 => f01_odd(i + 1),
        };
        out.push_str(&format!("{i} {value}\n"));
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn hist_cells(hist: &KHistogram) -> String {
    hist.counts()
        .iter()
        .map(|(k, count)| format!("k{k}={count}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn hist_json_counts(hist: &KHistogram) -> String {
    let cells = hist
        .counts()
        .iter()
        .map(|(k, count)| format!("\"{k}\":\"{count}\""))
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{cells}}}")
}
