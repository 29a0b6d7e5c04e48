use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use exform_cli::corpus::CORPUS;
use exform_cli::{execute, parse_program, Options, Report, Status};

#[derive(Parser)]
#[command(name = "exform", version, about = "Exact computations with G2 and Spin(7) forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an .exf program.
    Run {
        file: PathBuf,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Seed for sampled quantities.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Default field tag d for Q(sqrt d); a `field` statement overrides it.
        #[arg(long, default_value_t = exform_core::scalars::DEFAULT_FIELD)]
        field: u32,
    },
    /// Run the built-in example programs.
    Corpus {
        #[arg(long)]
        json: bool,
    },
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable report"));
    } else {
        print!("{}", report.to_text());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { file, json, seed, field } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    return ExitCode::from(2);
                }
            };
            let program = match parse_program(&text) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("{}:{e}", file.display());
                    return ExitCode::from(2);
                }
            };
            let report = execute(&program, &Options { seed, field });
            emit(&report, json);
            ExitCode::from(report.status().exit_code())
        }
        Command::Corpus { json } => {
            let mut worst = Status::Pass;
            let mut all = Vec::new();
            for (name, text) in CORPUS {
                let report = match parse_program(text) {
                    Ok(p) => execute(&p, &Options::default()),
                    Err(e) => {
                        eprintln!("{name}:{e}");
                        return ExitCode::from(2);
                    }
                };
                if report.status().exit_code() > worst.exit_code() {
                    worst = report.status();
                }
                if json {
                    all.push(serde_json::json!({ "name": name, "report": report.to_json() }));
                } else {
                    println!("== {name}");
                    print!("{}", report.to_text());
                }
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&all).expect("serializable report"));
            }
            ExitCode::from(worst.exit_code())
        }
    }
}
