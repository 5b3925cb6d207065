mod args;
mod report;
mod run;

use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use report::{sha256_hex, write_all, ArtifactDigest, CliError, RunReport};

fn fail(e: &CliError) -> ExitCode {
    let line = serde_json::json!({ "error": e.kind(), "message": e.message() });
    eprintln!("{line}");
    eprintln!("qtanner: {}", e.hint());
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first).to_string();
            let code = fail(&CliError::Usage(first));
            eprint!("{rendered}");
            return code;
        }
    };

    let start = Instant::now();
    let mut inputs = run::Inputs::default();
    let outcome = match run::run(&cli, &mut inputs) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };

    let mut report = RunReport {
        tool: "qtanner",
        version: env!("CARGO_PKG_VERSION"),
        command: argv.into_iter().skip(1).collect(),
        inputs: inputs.digests,
        outputs: outcome.outputs,
        verdict: outcome.verdict,
        artifacts: outcome
            .artifacts
            .iter()
            .map(|(name, body)| ArtifactDigest {
                name: name.clone(),
                sha256: sha256_hex(body.as_bytes()),
            })
            .collect(),
        timing_ms: 0,
    };
    report.timing_ms = start.elapsed().as_millis() as u64;
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');

    let mut files = outcome.artifacts;
    let dir = match &cli.output_dir {
        Some(d) => {
            files.push(("report.json".into(), text.clone()));
            d.as_path()
        }
        None => Path::new("."),
    };
    if !files.is_empty() {
        if let Err(e) = write_all(dir, &files) {
            return fail(&e);
        }
    }
    print!("{text}");
    match report.verdict {
        Some(false) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}
