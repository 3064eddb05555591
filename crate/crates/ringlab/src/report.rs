//! Registry reports. The JSON form carries no timings, thread counts or
//! timestamps, so equal configurations give byte-identical documents.

use serde::{Deserialize, Serialize};

use crate::registry::{CheckResult, RunConfig, Status};

pub const REPORT_FORMAT: &str = "ringlab-report/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigJson {
    pub budget: u128,
    /// `null` means the per-ring default degrees.
    pub degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub instance: String,
    pub status: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub id: String,
    pub description: String,
    pub expected: String,
    /// `PASS` or `WITNESS` when the expectation is met, else `SKIPPED` or `DEVIATION`.
    pub outcome: String,
    pub instances: Vec<InstanceJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub expected: usize,
    pub skipped: usize,
    pub deviations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub format: String,
    pub config: ConfigJson,
    pub checks: Vec<CheckJson>,
    pub summary: Summary,
}

fn outcome(c: &CheckResult) -> String {
    match c.status {
        Status::Pass => c.expected.name().into(),
        s => s.name().into(),
    }
}

impl Report {
    pub fn new(results: &[CheckResult], config: &RunConfig) -> Report {
        let mut summary = Summary {
            checks: results.len(),
            ..Summary::default()
        };
        for c in results {
            match c.status {
                Status::Pass => summary.expected += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Deviation => summary.deviations += 1,
            }
        }
        Report {
            format: REPORT_FORMAT.into(),
            config: ConfigJson {
                budget: config.budget,
                degree: config.degree,
            },
            checks: results
                .iter()
                .map(|c| CheckJson {
                    id: c.id.into(),
                    description: c.description.into(),
                    expected: c.expected.name().into(),
                    outcome: outcome(c),
                    instances: c
                        .instances
                        .iter()
                        .map(|i| InstanceJson {
                            instance: i.label.clone(),
                            status: i.status.name().into(),
                            detail: i.detail.clone(),
                        })
                        .collect(),
                })
                .collect(),
            summary,
        }
    }

    pub fn has_deviation(&self) -> bool {
        self.summary.deviations > 0
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }
}

/// One line per check, then the non-passing instances of failing checks.
pub fn render_text(results: &[CheckResult], verbose: bool) -> String {
    let mut out = String::new();
    for c in results {
        out.push_str(&format!(
            "{:<10} {:<46} {:>4} instances {:>8.2}s\n",
            outcome(c),
            c.id,
            c.instances.len(),
            c.wall_time.as_secs_f64()
        ));
        for i in &c.instances {
            if verbose || i.status != Status::Pass {
                out.push_str(&format!(
                    "    {:<9} {}: {}\n",
                    i.status.name(),
                    i.label,
                    i.detail
                ));
            }
        }
    }
    let n = |s: Status| results.iter().filter(|c| c.status == s).count();
    out.push_str(&format!(
        "{} checks: {} as expected, {} skipped, {} deviations\n",
        results.len(),
        n(Status::Pass),
        n(Status::Skipped),
        n(Status::Deviation)
    ));
    out
}
