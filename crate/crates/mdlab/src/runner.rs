//! Parallel execution of the job list with deterministic report order.

use std::time::Instant;

use mdlab_core::suite::{jobs, Job};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::report::{CheckJson, JobError, RunReport};

/// Runs every selected suite. Results keep job order whatever the worker
/// count.
pub fn run(config: &RunConfig) -> Result<RunReport, rayon::ThreadPoolBuildError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(config.workers).build()?;
    let start = Instant::now();
    let list = jobs(&config.suites, &config.params);
    let outcomes: Vec<_> = pool.install(|| {
        list.par_iter()
            .map(|job| {
                let t = Instant::now();
                let res = job.run(&config.params);
                (job, res, t.elapsed())
            })
            .collect()
    });
    let mut checks = Vec::new();
    let mut errors = Vec::new();
    for (job, res, elapsed) in outcomes {
        match res {
            Ok(reports) => {
                // a job's reports share its wall time evenly
                let share = elapsed / reports.len().max(1) as u32;
                for mut r in reports {
                    r.wall_time = share;
                    checks.push(CheckJson::new(job.suite(), &r));
                }
            }
            Err(e) => errors.push(job_error(job, &e.to_string())),
        }
    }
    Ok(RunReport::new(config, checks, errors, start.elapsed().as_secs_f64()))
}

fn job_error(job: &Job, message: &str) -> JobError {
    JobError { suite: job.suite().name().into(), job: job.describe(), message: message.into() }
}
