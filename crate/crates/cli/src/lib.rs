//! Runner, report emitters and point-list files for the `cayley-core`
//! verification suites.

pub mod points;

use std::fmt::Write as _;

use cayley_core::forms::forms_suite;
use cayley_core::g2star::g2star_suite;
use cayley_core::imspace::imspace_suite;
use cayley_core::octonion::identity_suite;
use cayley_core::r8::r8_suite;
use cayley_core::report::{Report, Status};
use cayley_core::spheres::{sphere_suite, sphere_suite_at, stereo_suite, SphereKind};

pub use points::{parse_point_list, write_point_list, PointList, PointListError};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum SuiteName {
    Algebra,
    Imspace,
    Forms,
    G2star,
    S24,
    S33,
    Stereo,
    R8,
    All,
}

impl SuiteName {
    pub const EACH: [SuiteName; 8] = [
        SuiteName::Algebra,
        SuiteName::Imspace,
        SuiteName::Forms,
        SuiteName::G2star,
        SuiteName::S24,
        SuiteName::S33,
        SuiteName::Stereo,
        SuiteName::R8,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Algebra => "algebra",
            SuiteName::Imspace => "imspace",
            SuiteName::Forms => "forms",
            SuiteName::G2star => "g2star",
            SuiteName::S24 => "s24",
            SuiteName::S33 => "s33",
            SuiteName::Stereo => "stereo",
            SuiteName::R8 => "r8",
            SuiteName::All => "all",
        }
    }

    fn sphere(self) -> Option<SphereKind> {
        match self {
            SuiteName::S24 => Some(SphereKind::S24),
            SuiteName::S33 => Some(SphereKind::S33),
            _ => None,
        }
    }
}

impl std::str::FromStr for SuiteName {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, RunError> {
        <SuiteName as clap::ValueEnum>::from_str(s, true).map_err(|_| RunError::UnknownSuite(s.into()))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("point list is for {found}, but suite `{suite}` needs {expected}")]
    PointsKind { suite: &'static str, found: SphereKind, expected: SphereKind },
    #[error("suite `{0}` does not take a point list")]
    PointsNotApplicable(&'static str),
    #[error(transparent)]
    Points(#[from] PointListError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Runs one suite, or every suite for [`SuiteName::All`]. A point list
/// replaces the sampled points of the sphere suite of its kind.
pub fn run_suite(name: SuiteName, trials: usize, seed: u64, points: Option<&PointList>) -> Result<Report, RunError> {
    if let Some(list) = points {
        match name.sphere() {
            Some(kind) if kind != list.kind => {
                return Err(RunError::PointsKind { suite: name.as_str(), found: list.kind, expected: kind })
            }
            None if name != SuiteName::All => return Err(RunError::PointsNotApplicable(name.as_str())),
            _ => {}
        }
    }
    let sphere = |kind: SphereKind| match points {
        Some(list) if list.kind == kind => sphere_suite_at(kind, &list.points, trials, seed),
        _ => sphere_suite(kind, trials, seed),
    };
    Ok(match name {
        SuiteName::Algebra => identity_suite(trials, seed),
        SuiteName::Imspace => imspace_suite(trials, seed),
        SuiteName::Forms => forms_suite(trials, seed),
        SuiteName::G2star => g2star_suite(trials, seed),
        SuiteName::S24 => sphere(SphereKind::S24),
        SuiteName::S33 => sphere(SphereKind::S33),
        SuiteName::Stereo => stereo_suite(trials, seed),
        SuiteName::R8 => r8_suite(trials, seed),
        SuiteName::All => {
            let mut all = Report::new("all", seed, trials);
            for each in SuiteName::EACH {
                all.absorb(run_suite(each, trials, seed, points.filter(|l| each.sphere() == Some(l.kind)))?);
            }
            all
        }
    })
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let failed = report.failures().count();
    let _ = writeln!(out, "suite {} (seed {}, trials {})", report.suite, report.seed, report.trials);
    for c in &report.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let _ = writeln!(out, "{tag} {} [{} evaluations] {}", c.id, c.evaluations, c.statement);
        for w in &c.witness {
            let _ = writeln!(out, "    {} = {}", w.name, w.value);
        }
    }
    for n in &report.notes {
        let _ = writeln!(out, "NOTE {}: {}", n.id, n.statement);
        for w in &n.witness {
            let _ = writeln!(out, "    {} = {}", w.name, w.value);
        }
    }
    let _ = writeln!(out, "{} checks, {} failed", report.checks.len(), failed);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cayley_core::report::{witness, Check};

    #[test]
    fn empty_report_renders() {
        let r = Report::new("empty", 0, 0);
        let json: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(json["checks"], serde_json::json!([]));
        assert!(emit_report(&r, Format::Text).contains("0 checks, 0 failed"));
    }

    #[test]
    fn failing_check_shows_witness() {
        let mut r = Report::new("t", 1, 2);
        let mut c = Check::new("c", "1 = 2");
        c.record_eq(&1, &2, &[witness("x", 5)]);
        r.push(c);
        let text = emit_report(&r, Format::Text);
        assert!(text.contains("FAIL c") && text.contains("x = 5") && text.contains("lhs = 1"));
        let json: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(json["checks"][0]["status"], "fail");
        assert_eq!(json["checks"][0]["witness"][2]["value"], "2");
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!("bogus".parse::<SuiteName>(), Err(RunError::UnknownSuite(_))));
        assert_eq!("S24".parse::<SuiteName>().unwrap(), SuiteName::S24);
    }

    #[test]
    fn points_must_match() {
        let list = parse_point_list("s33\n0, 0, 0, 1, 0, 0, 0\n").unwrap();
        assert!(matches!(run_suite(SuiteName::S24, 2, 0, Some(&list)), Err(RunError::PointsKind { .. })));
        assert!(matches!(run_suite(SuiteName::R8, 2, 0, Some(&list)), Err(RunError::PointsNotApplicable(_))));
        let r = run_suite(SuiteName::S33, 2, 0, Some(&list)).unwrap();
        assert!(r.passed());
        assert_eq!(r.check("points_on_sphere").unwrap().evaluations, 1);
    }
}
