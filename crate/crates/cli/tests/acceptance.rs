//! Acceptance criteria. Runs sequentially so the timed criteria measure one
//! suite at a time, prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cayley_cli::{run_suite, SuiteName};
use cayley_core::report::Report;

const SEED: u64 = 0;
const TABLE_BUDGET: Duration = Duration::from_secs(1);
const LAPLACIAN_BUDGET: Duration = Duration::from_secs(30);

struct Outcome {
    ok: bool,
    detail: String,
}

fn run(name: SuiteName, trials: usize) -> Report {
    run_suite(name, trials, SEED, None).expect("suite runs without a point list")
}

/// Every listed check exists, passes and ran at least `min` times.
fn require(report: &Report, ids: &[&str], min: usize) -> Outcome {
    let mut problems = Vec::new();
    for id in ids {
        match report.check(id) {
            None => problems.push(format!("{}.{id} missing", report.suite)),
            Some(c) if !c.passed() => problems.push(format!("{}.{id} failed: {:?}", report.suite, c.witness)),
            Some(c) if c.evaluations < min => {
                problems.push(format!("{}.{id} ran {} < {min} times", report.suite, c.evaluations))
            }
            Some(_) => {}
        }
    }
    Outcome { ok: problems.is_empty(), detail: problems.join("; ") }
}

fn all(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    let parts: Vec<Outcome> = parts.into_iter().collect();
    Outcome {
        ok: parts.iter().all(|o| o.ok),
        detail: parts.into_iter().filter(|o| !o.ok).map(|o| o.detail).collect::<Vec<_>>().join("; "),
    }
}

fn timed(elapsed: Duration, budget: Duration) -> Outcome {
    Outcome { ok: elapsed < budget, detail: format!("took {elapsed:.2?}, budget {budget:?}") }
}

fn has_note(report: &Report, id: &str) -> Outcome {
    let ok = report.notes.iter().any(|n| n.id == id);
    Outcome { ok, detail: if ok { String::new() } else { format!("{}.{id} not recorded", report.suite) } }
}

const FORM_IDENTITIES: [&str; 8] =
    ["d_omega", "star_omega", "psi_relation", "shift_first", "shift_pair", "omega_wedge_d_omega", "omega_shift", "psi_via_omega"];
const TRIPLE_IDENTITIES: [&str; 5] = ["psi_relation", "shift_first", "shift_pair", "omega_shift", "psi_via_omega"];
const COVARIANT: [&str; 4] = ["fundamental_form", "nabla_skew", "nabla_diagonal", "nabla_type"];

fn sphere_criteria(s24: &Report, s33: &Report, elapsed: Duration) -> [Outcome; 4] {
    let both = |f: &dyn Fn(&Report) -> Outcome| all([f(s24), f(s33)]);
    [
        both(&|r| {
            all([
                require(r, &["points_on_sphere", "structure_square"], 50),
                require(r, &FORM_IDENTITIES, 50),
                require(r, &TRIPLE_IDENTITIES, 1000),
                require(r, &COVARIANT, 50),
                has_note(r, "psi_relation_unweighted"),
            ])
        }),
        both(&|r| all([require(r, &["nijenhuis_routes"], 200), require(r, &["basepoint_values", "nijenhuis_nonvanishing"], 1)])),
        both(&|r| all([require(r, &["hitchin"], 20), require(r, &["basepoint_values"], 1)])),
        all([
            both(&|r| all([require(r, &["laplacian"], 250), require(r, &["coclosed", "star_d_omega"], 25)])),
            timed(elapsed, LAPLACIAN_BUDGET),
        ]),
    ]
}

fn determinism() -> Outcome {
    let invoke = || {
        Command::new(env!("CARGO_BIN_EXE_cayley"))
            .args(["--suite", "all", "--trials", "20", "--seed", "7", "--format", "json"])
            .output()
            .expect("cli binary runs")
    };
    let (a, b) = (invoke(), invoke());
    let parses = serde_json::from_slice::<serde_json::Value>(&a.stdout).is_ok();
    let ok = a.status.success() && b.status.success() && parses && a.stdout == b.stdout;
    Outcome { ok, detail: format!("exit {:?}/{:?}, {} vs {} bytes, valid json {parses}", a.status.code(), b.status.code(), a.stdout.len(), b.stdout.len()) }
}

fn main() -> ExitCode {
    let mut results: Vec<(&str, Outcome)> = Vec::new();

    let start = Instant::now();
    let table = run(SuiteName::Algebra, 0);
    let table_time = start.elapsed();
    results.push(("1 multiplication table", all([require(&table, &["table"], 49), require(&table, &["cayley_dickson"], 64), timed(table_time, TABLE_BUDGET)])));

    let algebra = run(SuiteName::Algebra, 1000);
    results.push((
        "2 composition law",
        all([require(&algebra, &["composition"], 1000), require(&algebra, &["composition_null"], 50)]),
    ));
    results.push((
        "3 alternativity and identities",
        require(
            &algebra,
            &[
                "left_alternative",
                "right_alternative",
                "flexible",
                "conj_left",
                "conj_right",
                "xxy_x",
                "associator_xx_y_x",
                "right_moufang",
                "left_moufang",
                "middle_moufang",
                "associator_alternating",
            ],
            500,
        ),
    ));

    let imspace = run(SuiteName::Imspace, 500);
    results.push(("4 associator via cross product", require(&imspace, &["associator_cross", "cross_rearrangement", "cross_axiom"], 500)));

    let forms = run(SuiteName::Forms, 100);
    results.push(("5 Hodge duality", require(&forms, &["star_omega", "star_psi"], 1)));

    let start = Instant::now();
    let s24 = run(SuiteName::S24, 100);
    let s33 = run(SuiteName::S33, 100);
    let sphere_time = start.elapsed();
    let [identities, nijenhuis, hitchin, laplacian] = sphere_criteria(&s24, &s33, sphere_time);
    results.push(("6 sphere form identities", identities));
    results.push(("7 Nijenhuis tensor", nijenhuis));
    results.push(("8 Hitchin operator", hitchin));
    results.push(("9 Laplacian", laplacian));

    let g2 = run(SuiteName::G2star, 100);
    results.push((
        "10 split g2",
        all([require(&g2, &["generators_annihilate", "generators_skew"], 14), require(&g2, &["bracket_closure"], 91), require(&g2, &["stabilizer_dimension"], 1)]),
    ));

    let stereo = run(SuiteName::Stereo, 100);
    results.push((
        "11 stereographic projection",
        all([
            require(&stereo, &["exact_round_trip_s24", "exact_round_trip_s33"], 20),
            require(&stereo, &["float_round_trip_s24", "float_round_trip_s33"], 100),
            require(&stereo, &["pullback_square_s24", "pullback_square_s33", "pullback_basepoint"], 1),
        ]),
    ));

    let r8 = run(SuiteName::R8, 100);
    let r8_ids = |r: &str| {
        ["structure_square", "dstructure_fd", "domega_fd", "domega_routes", "nijenhuis_fd"].map(|c| format!("{c}_{r}"))
    };
    let (plus, minus) = (r8_ids("plus"), r8_ids("minus"));
    let ids: Vec<&str> = plus.iter().chain(minus.iter()).map(String::as_str).collect();
    results.push(("12 eight-dimensional structures", require(&r8, &ids, 50)));

    results.push(("13 deterministic JSON", determinism()));

    let mut failed = 0;
    for (name, o) in &results {
        if o.ok {
            println!("PASS {name}");
        } else {
            failed += 1;
            println!("FAIL {name}: {}", o.detail);
        }
    }
    println!("acceptance: {} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
