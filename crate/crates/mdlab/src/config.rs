//! Run configuration: defaults, a flat `key = value` file, then flags.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::Parser;
use mdlab_core::suite::{Suite, SuiteConfig, Tolerances};

/// Environment variable naming the default report directory.
pub const REPORT_DIR_ENV: &str = "MDLAB_REPORT_DIR";
/// File name used when only a report directory is known.
pub const DEFAULT_REPORT_NAME: &str = "mdlab-report.json";

#[derive(Parser, Debug, Default)]
#[command(name = "mdlab", version, about = "Runs the G_b, contour, symbolic and representation check suites")]
pub struct Cli {
    /// Suite to run (qdilog, integrals, symbolic, representation); repeatable. Default: all.
    #[arg(long = "suite", value_name = "NAME")]
    pub suites: Vec<String>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub omega1: Option<f64>,
    #[arg(long)]
    pub omega2: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random samples per representation relation.
    #[arg(long)]
    pub trials: Option<usize>,
    /// Tolerance override, e.g. `integrals=1e-8`; repeatable.
    #[arg(long = "tol", value_name = "SUITE=VAL")]
    pub tol: Vec<String>,
    #[arg(long = "max-N", value_name = "N")]
    pub max_n: Option<u32>,
    #[arg(long = "max-M", value_name = "M")]
    pub max_m: Option<u32>,
    #[arg(long = "gl-rank", value_name = "2|3")]
    pub gl_rank: Option<usize>,
    /// JSON report path. Default: `$MDLAB_REPORT_DIR/mdlab-report.json`, else the working directory.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Worker threads; 0 uses all cores.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Flat `key = value` config file; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    pub params: SuiteConfig,
    pub report_path: PathBuf,
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, ConfigError> {
    v.trim().parse().map_err(|_| ConfigError(format!("invalid value for {key}: {v:?}")))
}

fn parse_suite(name: &str) -> Result<Suite, ConfigError> {
    Suite::from_name(name.trim()).ok_or_else(|| {
        let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        ConfigError(format!("unknown suite {name:?}; expected one of {}", known.join(", ")))
    })
}

fn parse_tol(spec: &str) -> Result<(Suite, f64), ConfigError> {
    let (s, v) = spec.split_once('=').ok_or_else(|| ConfigError(format!("tolerance {spec:?} is not SUITE=VALUE")))?;
    Ok((parse_suite(s)?, parse_num("tol", v)?))
}

/// Values read from a config file, all optional.
#[derive(Debug, Default, PartialEq)]
pub struct FileConfig {
    pub suites: Vec<Suite>,
    pub b: Option<f64>,
    pub omega1: Option<f64>,
    pub omega2: Option<f64>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub tol: Vec<(Suite, f64)>,
    pub max_n: Option<u32>,
    pub max_m: Option<u32>,
    pub gl_rank: Option<usize>,
    pub report: Option<PathBuf>,
    pub workers: Option<usize>,
}

/// Parses `key = value` lines; `#` starts a comment. `suite` takes a
/// comma-separated list, tolerances are `tol.<suite> = value`.
pub fn parse_file_config(text: &str) -> Result<FileConfig, ConfigError> {
    let mut fc = FileConfig::default();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return err(format!("line {}: expected key = value", no + 1));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "suite" | "suites" => {
                for s in value.split(',').filter(|s| !s.trim().is_empty()) {
                    fc.suites.push(parse_suite(s)?);
                }
            }
            "b" => fc.b = Some(parse_num(key, value)?),
            "omega1" => fc.omega1 = Some(parse_num(key, value)?),
            "omega2" => fc.omega2 = Some(parse_num(key, value)?),
            "seed" => fc.seed = Some(parse_num(key, value)?),
            "trials" => fc.trials = Some(parse_num(key, value)?),
            "max_N" | "max-N" => fc.max_n = Some(parse_num(key, value)?),
            "max_M" | "max-M" => fc.max_m = Some(parse_num(key, value)?),
            "gl_rank" | "gl-rank" => fc.gl_rank = Some(parse_num(key, value)?),
            "report" => fc.report = Some(PathBuf::from(value)),
            "workers" => fc.workers = Some(parse_num(key, value)?),
            _ => match key.strip_prefix("tol.") {
                Some(s) => fc.tol.push((parse_suite(s)?, parse_num(key, value)?)),
                None => return err(format!("line {}: unknown key {key:?}", no + 1)),
            },
        }
    }
    Ok(fc)
}

/// Layers flags over the config file over the defaults. `report_dir` is
/// the value of [`REPORT_DIR_ENV`], if set.
pub fn resolve(cli: &Cli, report_dir: Option<&Path>) -> Result<RunConfig, ConfigError> {
    let file = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
            parse_file_config(&text)?
        }
        None => FileConfig::default(),
    };
    let d = SuiteConfig::default();

    let mut suites: Vec<Suite> = Vec::new();
    for s in &cli.suites {
        suites.push(parse_suite(s)?);
    }
    if suites.is_empty() {
        suites = file.suites.clone();
    }
    if suites.is_empty() {
        suites = Suite::ALL.to_vec();
    }
    suites.sort();
    suites.dedup();

    let mut tolerances = Tolerances::default();
    let flag_tols = cli.tol.iter().map(|t| parse_tol(t)).collect::<Result<Vec<_>, _>>()?;
    for (s, t) in file.tol.iter().chain(&flag_tols) {
        tolerances.set(*s, *t).map_err(|e| ConfigError(e.to_string()))?;
    }

    let params = SuiteConfig {
        b: cli.b.or(file.b).unwrap_or(d.b),
        omega1: cli.omega1.or(file.omega1).unwrap_or(d.omega1),
        omega2: cli.omega2.or(file.omega2).unwrap_or(d.omega2),
        seed: cli.seed.or(file.seed).unwrap_or(d.seed),
        trials: cli.trials.or(file.trials).unwrap_or(d.trials),
        tolerances,
        max_n: cli.max_n.or(file.max_n).unwrap_or(d.max_n),
        max_m: cli.max_m.or(file.max_m).unwrap_or(d.max_m),
        gl_rank: cli.gl_rank.or(file.gl_rank).unwrap_or(d.gl_rank),
    };
    params.validate().map_err(|e| ConfigError(e.to_string()))?;

    let report_path = match cli.report.clone().or(file.report) {
        Some(p) => p,
        None => report_dir.map(Path::to_path_buf).unwrap_or_default().join(DEFAULT_REPORT_NAME),
    };
    Ok(RunConfig { suites, params, report_path, workers: cli.workers.or(file.workers).unwrap_or(0) })
}

/// Parses an argument vector (including the program name) and resolves it.
pub fn parse_config<I, T>(argv: I, report_dir: Option<&Path>) -> Result<RunConfig, ConfigError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| ConfigError(e.to_string()))?;
    resolve(&cli, report_dir)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunConfig, ConfigError> {
        parse_config(std::iter::once("mdlab").chain(args.iter().copied()), None)
    }

    #[test]
    fn defaults() {
        let c = parse(&[]).unwrap();
        assert_eq!(c.suites, Suite::ALL.to_vec());
        assert_eq!(c.params, SuiteConfig::default());
        assert_eq!(c.report_path, PathBuf::from(DEFAULT_REPORT_NAME));
    }

    #[test]
    fn symbolic_with_kac_bound() {
        let c = parse(&["--suite", "symbolic", "--max-N", "4"]).unwrap();
        assert_eq!(c.suites, vec![Suite::Symbolic]);
        assert_eq!(c.params.max_n, 4);
    }

    #[test]
    fn qdilog_at_half() {
        let c = parse(&["--b", "0.5", "--suite", "qdilog"]).unwrap();
        assert_eq!(c.suites, vec![Suite::Qdilog]);
        assert_eq!(c.params.b, 0.5);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse(&["--bogus"]).is_err());
        assert!(parse(&["--suite", "nope"]).is_err());
        assert!(parse(&["--tol", "integrals=0"]).is_err());
        assert!(parse(&["--tol", "integrals"]).is_err());
        assert!(parse(&["--gl-rank", "5"]).is_err());
        assert!(parse(&["--b", "-1"]).is_err());
    }

    #[test]
    fn flags_override_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        std::fs::write(&path, "# test\nsuite = symbolic, qdilog\nb = 0.7\nseed = 9\ntol.qdilog = 1e-6\nmax_N = 2\n").unwrap();
        let p = path.to_str().unwrap();
        let c = parse(&["--config", p, "--seed", "5"]).unwrap();
        assert_eq!(c.suites, vec![Suite::Qdilog, Suite::Symbolic]);
        assert_eq!((c.params.b, c.params.seed, c.params.max_n), (0.7, 5, 2));
        assert_eq!(c.params.tolerances.qdilog, Some(1e-6));
        let c = parse(&["--config", p, "--suite", "integrals", "--tol", "qdilog=1e-3"]).unwrap();
        assert_eq!(c.suites, vec![Suite::Integrals]);
        assert_eq!(c.params.tolerances.qdilog, Some(1e-3));
    }

    #[test]
    fn file_errors_name_the_line() {
        let e = parse_file_config("b = 0.8\nfoo = 1\n").unwrap_err();
        assert!(e.0.contains("line 2"));
        assert!(parse_file_config("just words").is_err());
    }

    #[test]
    fn report_dir_from_environment() {
        let c = parse_config(["mdlab"], Some(Path::new("/tmp/r"))).unwrap();
        assert_eq!(c.report_path, PathBuf::from("/tmp/r").join(DEFAULT_REPORT_NAME));
        let c = parse_config(["mdlab", "--report", "x.json"], Some(Path::new("/tmp/r"))).unwrap();
        assert_eq!(c.report_path, PathBuf::from("x.json"));
    }
}
