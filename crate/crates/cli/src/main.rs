use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parbun::grid::GridBounds;
use parbun::{decompositions, euler_form, q, sym_form, Classification};
use parbun_cli::input::{parse, read_source, EulerSpec, ProblemSpec};
use parbun_cli::report::{
    build_dims_report, build_report, fmt_parts, parts, render_dims_human, render_report_human,
};
use parbun_cli::scan::{render_counts_human, render_row_human, run_scan, ScanOptions};
use parbun_cli::CliError;

/// Dimensions of moduli stacks of parabolic bundles and the almost (very)
/// good criterion.
///
/// Input documents are JSON, for example
/// {"genus": 1, "weights": [2, 2], "alpha": {"rank": 2, "flags": [[1], [1]]}}
/// where flags[i] lists the w_i - 1 proper flag dimensions at point i.
///
/// Exit codes: 0 ok, 1 bad input, 2 internal invariant violation.
#[derive(Parser)]
#[command(name = "parbun", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Args)]
struct Io {
    /// Input JSON file, or - for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the stack and report the margin with a witness decomposition.
    Decide(Io),
    /// Print dim Bun and the three maximized stack dimensions.
    Dims(Io),
    /// List decompositions of alpha into positive-rank dimension vectors.
    Decomps {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 1)]
        min_parts: usize,
        #[arg(long)]
        max_parts: Option<usize>,
    },
    /// Evaluate the Euler form on {"weights": [...], "a": {...}, "b": {...}}.
    Euler(Io),
    /// Decide every instance within the bounds and count verdicts per genus.
    ///
    /// With --assert-remark38 the scan fails (exit 2) if some genus >= 2
    /// instance is not almost very good, some genus 1 instance with a
    /// nontrivial flag point is not almost good, or some genus 1 instance with
    /// two nontrivial flag points is not almost very good. A flag point is
    /// nontrivial when some stored flag dimension lies strictly between 0 and
    /// the rank.
    Scan {
        #[arg(long)]
        max_rank: u32,
        #[arg(long)]
        max_points: usize,
        #[arg(long)]
        max_flag_len: usize,
        /// Comma-separated genera, e.g. 0,1,2.
        #[arg(long, value_delimiter = ',', required = true)]
        genus: Vec<u32>,
        /// Only list instances with this verdict.
        #[arg(long, value_parser = parse_verdict)]
        filter: Option<Classification>,
        /// Print every instance, not just the counts.
        #[arg(long)]
        list: bool,
        #[arg(long = "assert-remark38")]
        assert_remark38: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
}

fn parse_verdict(s: &str) -> Result<Classification, String> {
    s.parse()
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let write_err = |e: io::Error| CliError::Invariant(format!("writing output: {e}"));
    match cli.command {
        Command::Decide(io) => {
            let spec: ProblemSpec = parse(&read_source(&io.input)?)?;
            let report = build_report(&spec)?;
            let text = match io.format {
                Format::Human => render_report_human(&report),
                Format::Json => to_json(&report) + "\n",
            };
            out.write_all(text.as_bytes()).map_err(write_err)?;
        }
        Command::Dims(io) => {
            let spec: ProblemSpec = parse(&read_source(&io.input)?)?;
            let report = build_dims_report(&spec)?;
            let text = match io.format {
                Format::Human => render_dims_human(&report),
                Format::Json => to_json(&report) + "\n",
            };
            out.write_all(text.as_bytes()).map_err(write_err)?;
        }
        Command::Decomps { io, min_parts, max_parts } => {
            let spec: ProblemSpec = parse(&read_source(&io.input)?)?;
            let a = spec.dimvec()?;
            for dec in decompositions(&a, min_parts, max_parts)? {
                let line = match io.format {
                    Format::Human => fmt_parts(Some(&parts(&dec))),
                    Format::Json => to_json(&serde_json::json!({ "parts": parts(&dec) })),
                };
                writeln!(out, "{line}").map_err(write_err)?;
            }
        }
        Command::Euler(io) => {
            let spec: EulerSpec = parse(&read_source(&io.input)?)?;
            let (a, b) = spec.vectors()?;
            let (ab, sym, qa, qb) = (euler_form(&a, &b)?, sym_form(&a, &b)?, q(&a)?, q(&b)?);
            let text = match io.format {
                Format::Human => format!("{ab}\n"),
                Format::Json => {
                    to_json(&serde_json::json!({
                        "euler_form": ab, "sym_form": sym, "q_a": qa, "q_b": qb
                    })) + "\n"
                }
            };
            out.write_all(text.as_bytes()).map_err(write_err)?;
        }
        Command::Scan {
            max_rank,
            max_points,
            max_flag_len,
            genus,
            filter,
            list,
            assert_remark38,
            format,
        } => {
            let outcome = run_scan(&ScanOptions {
                bounds: GridBounds { max_rank, max_points, max_flag_len },
                genera: genus,
            })?;
            let mut text = String::new();
            if list {
                for row in outcome
                    .rows
                    .iter()
                    .filter(|r| filter.is_none_or(|f| r.classification == f))
                {
                    text += &match format {
                        Format::Human => render_row_human(row),
                        Format::Json => to_json(row),
                    };
                    text.push('\n');
                }
            }
            let violations = outcome.remark_violations();
            match format {
                Format::Human => {
                    text += &render_counts_human(&outcome.counts);
                    if assert_remark38 {
                        text += &format!(
                            "genus-regime check: {} ({} violations)\n",
                            if violations.is_empty() { "pass" } else { "FAIL" },
                            violations.len()
                        );
                        for row in &violations {
                            text += &format!("violation: {}\n", render_row_human(row));
                        }
                    }
                }
                Format::Json => {
                    for c in &outcome.counts {
                        text += &(to_json(&serde_json::json!({ "summary": c })) + "\n");
                    }
                    if assert_remark38 {
                        text += &(to_json(&serde_json::json!({
                            "remark38": { "passed": violations.is_empty(), "violations": violations }
                        })) + "\n");
                    }
                }
            }
            out.write_all(text.as_bytes()).map_err(write_err)?;
            if assert_remark38 && !violations.is_empty() {
                out.flush().map_err(write_err)?;
                return Err(CliError::Invariant(format!(
                    "{} instances contradict the genus-regime facts",
                    violations.len()
                )));
            }
        }
    }
    out.flush().map_err(write_err)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("parbun: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
