//! `monopro`: demo commands for monocle folds and the logged quicksort.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monopro::effect::qsort_logged;
use monopro::monocle::{each_vec, fold_map_of, fold_of};
use monopro::monoid::{IntSum, StringConcat};
use monopro::Transform;

#[derive(Parser, Debug)]
#[command(name = "monopro", version, about = "Monoidal profunctor demos")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fold over every focus of a homogeneous tuple.
    #[command(subcommand)]
    Monocle(MonocleCommand),
    /// Sort words, logging each split and merge; an empty word aborts.
    Qsort {
        #[arg(allow_hyphen_values = true, trailing_var_arg = true)]
        words: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum MonocleCommand {
    /// Concatenate the values.
    Fold(TupleArgs),
    /// Map each value into a monoid, then combine.
    Foldmap {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long, value_enum)]
        map: MapName,
    },
}

#[derive(Args, Debug)]
struct TupleArgs {
    /// Number of foci.
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
    arity: u8,
    /// Comma-separated values, one per focus.
    #[arg(long, allow_hyphen_values = true)]
    values: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapName {
    /// String length, summed.
    Len,
    /// Upper case, concatenated.
    Upper,
}

impl TupleArgs {
    fn split(&self) -> Result<Vec<String>, String> {
        let values: Vec<String> = self.values.split(',').map(str::to_string).collect();
        if values.len() == usize::from(self.arity) {
            Ok(values)
        } else {
            Err(format!(
                "--arity {} needs {} values, got {}",
                self.arity,
                self.arity,
                values.len()
            ))
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> io::Result<ExitCode> {
    match cli.command {
        Command::Monocle(MonocleCommand::Fold(tuple)) => {
            let values = match tuple.split() {
                Ok(values) => values,
                Err(message) => return usage(&message),
            };
            let rep = each_vec::<String, String>(values.len()).expect("arity is at most 4");
            writeln!(out, "{}", fold_of::<StringConcat, _, _, String>(&rep, values))?;
        }
        Command::Monocle(MonocleCommand::Foldmap { tuple, map }) => {
            let values = match tuple.split() {
                Ok(values) => values,
                Err(message) => return usage(&message),
            };
            let rep = each_vec::<String, String>(values.len()).expect("arity is at most 4");
            match map {
                MapName::Len => {
                    let len = Transform::new(|s: String| s.chars().count() as i64);
                    writeln!(out, "{}", fold_map_of::<IntSum, _, _, _, String>(&rep, len, values))?;
                }
                MapName::Upper => {
                    let upper = Transform::new(|s: String| s.to_uppercase());
                    writeln!(
                        out,
                        "{}",
                        fold_map_of::<StringConcat, _, _, _, String>(&rep, upper, values)
                    )?;
                }
            }
        }
        Command::Qsort { words } => {
            let sorted = qsort_logged(words);
            for line in &sorted.log {
                writeln!(out, "{line}")?;
            }
            match sorted.value {
                Some(words) => writeln!(out, "RESULT: {}", words.join(" "))?,
                None => {
                    writeln!(out, "FAIL")?;
                    return Ok(ExitCode::from(1));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn usage(message: &str) -> io::Result<ExitCode> {
    eprintln!("error: {message}");
    Ok(ExitCode::from(2))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out).and_then(|code| out.flush().map(|()| code)) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
