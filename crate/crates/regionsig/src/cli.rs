//! Batch command-line interface. Exit codes: 0 success, 1 domain errors,
//! 2 usage errors, 3 failed verification or strict conjecture mismatch.

use crate::amplitude::{amplitude, matrix_to_csv, matrix_to_json, matrix_to_latex};
use crate::corpus::{find_entry, load_corpus};
use crate::diagram::parse_diagram;
use crate::exact::rational;
use crate::reduce::{det_poly, final_pair, inertia_at, profile_to_csv, profile_to_svg, signature_profile};
use crate::tlsig::{conjecture_table, conjecture_to_csv};
use crate::Result;
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use std::io::Write;

#[derive(Parser)]
#[command(name = "regionsig", disable_version_flag = true)]
#[command(about = "Region matrices of link diagrams, exact reduction, signature profiles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixOut {
    Csv,
    Latex,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileOut {
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Print the amplitude matrix of a diagram file
    Amplitude {
        file: String,
        #[arg(long, value_enum, default_value = "csv")]
        out: MatrixOut,
    },
    /// Reduce a diagram at one rational point and print the invariant data
    Invariant {
        file: String,
        /// Evaluation point as num/den
        #[arg(long)]
        x: String,
    },
    /// Sample the signature profile over [0, 1]
    Profile {
        file: String,
        #[arg(long)]
        samples: usize,
        #[arg(long, value_enum, default_value = "csv")]
        out: ProfileOut,
    },
    /// Print the exact determinant polynomial of the amplitude
    Det { file: String },
    /// Check every stored congruence identity
    Verify,
    /// Compare the corrected signature with the Tristram-Levine oracle
    Conjecture {
        link: String,
        #[arg(long)]
        samples: usize,
        /// Exit 3 on any mismatching sample
        #[arg(long)]
        strict: bool,
    },
    /// Corpus inspection
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// List links and their diagrams
    List,
}

fn parse_rational(text: &str) -> Option<BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i64>().ok()?, d.trim().parse::<i64>().ok()?),
        None => (text.trim().parse::<i64>().ok()?, 1),
    };
    if den == 0 {
        return None;
    }
    Some(rational(num, den))
}

/// Runs the CLI against explicit arguments, writing to the given stream.
pub fn run_with_args<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successful output, not errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Entry point for the binary: real argv, stdout.
pub fn run() -> i32 {
    let mut stdout = std::io::stdout();
    run_with_args(std::env::args_os(), &mut stdout)
}

fn load_amplitude(file: &str) -> Result<crate::amplitude::Amplitude> {
    let text = std::fs::read_to_string(file)?;
    Ok(amplitude(&parse_diagram(&text)?.region_map()?))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Amplitude { file, out: fmt } => {
            let amp = load_amplitude(&file)?;
            let rendered = match fmt {
                MatrixOut::Csv => matrix_to_csv(&amp.matrix),
                MatrixOut::Latex => matrix_to_latex(&amp.matrix),
                MatrixOut::Json => format!("{}\n", matrix_to_json(&amp.matrix)),
            };
            write!(out, "{rendered}")?;
            Ok(0)
        }
        Command::Invariant { file, x } => {
            let x0 = match parse_rational(&x) {
                Some(v) => v,
                None => {
                    eprintln!("error: --x expects num/den");
                    return Ok(2);
                }
            };
            let amp = load_amplitude(&file)?;
            let inertia = inertia_at(&amp.matrix, &x0)?;
            let fp = final_pair(&amp, &x0)?;
            writeln!(
                out,
                "p={} q={} z={} final=({},{}) sig_corr={}",
                inertia.p,
                inertia.q,
                inertia.z,
                fp.a,
                fp.b,
                fp.sig_corr()
            )?;
            Ok(0)
        }
        Command::Profile { file, samples, out: fmt } => {
            if samples < 2 {
                eprintln!("error: --samples must be at least 2");
                return Ok(2);
            }
            let amp = load_amplitude(&file)?;
            let profile = signature_profile(&amp, samples)?;
            let rendered = match fmt {
                ProfileOut::Csv => profile_to_csv(&profile),
                ProfileOut::Svg => profile_to_svg(&profile),
            };
            write!(out, "{rendered}")?;
            Ok(0)
        }
        Command::Det { file } => {
            let amp = load_amplitude(&file)?;
            writeln!(out, "{}", det_poly(&amp.matrix)?)?;
            Ok(0)
        }
        Command::Verify => {
            let mut all_ok = true;
            for (name, ok) in crate::verify::run_all() {
                writeln!(out, "{name} {}", if ok { "PASS" } else { "FAIL" })?;
                all_ok &= ok;
            }
            Ok(if all_ok { 0 } else { 3 })
        }
        Command::Conjecture {
            link,
            samples,
            strict,
        } => {
            let entry = find_entry(&link)?;
            let rows = conjecture_table(&entry, samples)?;
            write!(out, "{}", conjecture_to_csv(&rows))?;
            let mismatches = rows.iter().filter(|r| !r.matches).count();
            if mismatches > 0 {
                eprintln!("{mismatches} mismatching samples for {link}");
                if strict {
                    return Ok(3);
                }
            }
            Ok(0)
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for entry in load_corpus()? {
                    let diagrams: Vec<String> = entry
                        .diagrams
                        .iter()
                        .map(|d| {
                            let n = d
                                .parsed
                                .region_map()
                                .map(|m| m.n_regions.to_string())
                                .unwrap_or_else(|_| "?".into());
                            format!("{} ({n} regions)", d.parsed.name())
                        })
                        .collect();
                    writeln!(out, "{}: {}", entry.link_name, diagrams.join(", "))?;
                }
                Ok(0)
            }
        },
    }
}
