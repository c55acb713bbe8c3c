mod args;
mod job;
mod render;
mod run;

use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use hypersyz::Error;
use serde::Serialize;
use serde_json::Value;

use args::{Cli, Command};
use job::Job;

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Serialize)]
struct ErrorDoc {
    kind: &'static str,
    message: String,
    exit_status: u8,
}

#[derive(Serialize)]
struct Document {
    job: Job,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    anchors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorDoc>,
}

fn classify(e: &Error) -> (&'static str, u8) {
    match e {
        Error::Parse(_) => ("parse", EXIT_PARSE),
        Error::Internal(_) => ("internal", EXIT_INTERNAL),
        Error::Domain(_) => ("domain", EXIT_DOMAIN),
        Error::EmptyLinearSystem(_) => ("empty_linear_system", EXIT_DOMAIN),
        Error::NotGloballyGenerated(_) => ("not_globally_generated", EXIT_DOMAIN),
        Error::ProjectiveImageUndefined(_) => ("projective_image_undefined", EXIT_DOMAIN),
        Error::BoundTooSmall { .. } => ("bound_too_small", EXIT_DOMAIN),
        Error::DegenerateDenominator(_) => ("degenerate_denominator", EXIT_DOMAIN),
        Error::Precondition(_) => ("precondition", EXIT_DOMAIN),
        Error::NoGeneralDivisor { .. } => ("no_general_divisor", EXIT_DOMAIN),
    }
}

struct Rendered {
    text: String,
    status: u8,
    error: Option<String>,
}

/// Runs one job and renders its JSON document.
fn render_job(cmd: &Command) -> Rendered {
    let job = Job::from_command(cmd);
    let doc = match run::execute(cmd) {
        Ok(out) => Document {
            job,
            result: Some(out.result),
            anchors: out.anchors,
            error: None,
        },
        Err(e) => {
            let (kind, exit_status) = classify(&e);
            Document {
                job,
                result: None,
                anchors: Vec::new(),
                error: Some(ErrorDoc {
                    kind,
                    message: e.to_string(),
                    exit_status,
                }),
            }
        }
    };
    let status = doc.error.as_ref().map_or(0, |e| e.exit_status);
    let error = doc.error.as_ref().map(|e| e.message.clone());
    let mut text = serde_json::to_string_pretty(&doc).expect("documents serialize");
    text.push('\n');
    Rendered {
        text,
        status,
        error,
    }
}

fn fail(status: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("hypersyz: {msg}");
    ExitCode::from(status)
}

fn replay(path: &Path) -> ExitCode {
    let stored = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())),
    };
    let job: Job = match serde_json::from_str::<Value>(&stored)
        .ok()
        .and_then(|v| v.get("job").cloned())
        .and_then(|j| serde_json::from_value(j).ok())
    {
        Some(j) => j,
        None => {
            return fail(
                EXIT_PARSE,
                format!("{} holds no job record", path.display()),
            )
        }
    };
    let cli = match Cli::try_parse_from(job.argv()) {
        Ok(c) => c,
        Err(e) => return fail(EXIT_PARSE, format!("recorded job does not parse: {e}")),
    };
    let Some(cmd) = cli.command else {
        return fail(EXIT_PARSE, "recorded job has no command");
    };
    let fresh = render_job(&cmd).text;
    if fresh == stored {
        println!("{}: identical", path.display());
        return ExitCode::SUCCESS;
    }
    let first = stored
        .lines()
        .zip(fresh.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| stored.lines().count().min(fresh.lines().count()));
    println!("{}: differs at line {}", path.display(), first + 1);
    println!("- {}", stored.lines().nth(first).unwrap_or("<end of file>"));
    println!("+ {}", fresh.lines().nth(first).unwrap_or("<end of file>"));
    ExitCode::from(EXIT_MISMATCH)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(path) = &cli.replay {
        return replay(path);
    }
    let Some(cmd) = &cli.command else {
        return fail(EXIT_PARSE, "no command given");
    };
    let Rendered {
        text,
        status,
        error,
    } = render_job(cmd);
    if let Some(msg) = error {
        eprintln!("hypersyz: {msg}");
    }
    let rendered = if cli.pretty {
        let doc: Value = serde_json::from_str(&text).expect("own output is JSON");
        render::table(&doc)
    } else {
        text
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                return fail(
                    EXIT_INTERNAL,
                    format!("cannot write {}: {e}", path.display()),
                );
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(status)
}
