use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use mdlab::config::REPORT_DIR_ENV;
use mdlab::{resolve, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let report_dir = std::env::var_os(REPORT_DIR_ENV).map(PathBuf::from);
    let config = match resolve(&cli, report_dir.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("mdlab: {e}");
            return ExitCode::from(2);
        }
    };
    if config.suites.contains(&mdlab_core::suite::Suite::Representation) {
        let p = mdlab_core::repcheck::OmegaParams { omega1: config.params.omega1, omega2: config.params.omega2 };
        if let Some(w) = p.near_rational_warning() {
            eprintln!("mdlab: warning: {w}");
        }
    }
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("mdlab: cannot start workers: {e}");
            return ExitCode::from(3);
        }
    };
    print!("{}", report.table());
    if let Some(dir) = config.report_path.parent().filter(|d| !d.as_os_str().is_empty()) {
        if let Err(e) = std::fs::create_dir_all(dir) {
            eprintln!("mdlab: cannot create {}: {e}", dir.display());
            return ExitCode::from(3);
        }
    }
    if let Err(e) = std::fs::write(&config.report_path, report.to_json()) {
        eprintln!("mdlab: cannot write report {}: {e}", config.report_path.display());
        return ExitCode::from(3);
    }
    println!("report: {}", config.report_path.display());
    ExitCode::from(report.exit_code() as u8)
}
