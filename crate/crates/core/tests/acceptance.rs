//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use ulrich_core::survey::{checks, grid, oracle_diff, survey, DiffReport};
use ulrich_core::{
    is_nearly_gorenstein, oracle, Budget, IntVector, Mutation, OrientedModel, SemigroupModel,
};

// Entry bound of the exhaustive plane sweeps.
const SWEEP_MAX: u64 = 40;
// Entry bound of the nearly Gorenstein sweep.
const NEARLY_MAX: u64 = 25;
// Entry bound of the mutated oracle diff.
const MUTATION_MAX: u64 = 20;
// Every comparison is exact, so the mismatch tolerance is zero throughout.

type Rays<'a> = &'a [&'a [i64]];

fn v(c: &[i64]) -> IntVector {
    IntVector::from(c)
}

fn set(points: &[&[i64]]) -> BTreeSet<IntVector> {
    points.iter().map(|p| v(p)).collect()
}

fn model(rays: &[&[i64]]) -> SemigroupModel {
    SemigroupModel::build(rays.iter().map(|r| v(r)).collect(), &Budget::default()).unwrap()
}

fn oriented(rays: &[&[i64]]) -> OrientedModel {
    OrientedModel::build(rays.iter().map(|r| v(r)).collect(), Budget::default()).unwrap()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn golden_bases() -> Outcome {
    let cases: [(Rays, BTreeSet<IntVector>); 5] = [
        (
            &[&[11, 2], &[31, 6]],
            set(&[&[11, 2], &[31, 6], &[16, 3], &[21, 4], &[26, 5]]),
        ),
        (
            &[&[5, 2], &[2, 5]],
            set(&[&[5, 2], &[2, 5], &[1, 1], &[2, 1], &[1, 2]]),
        ),
        (
            &[&[11, 13], &[3, 4]],
            set(&[&[11, 13], &[3, 4], &[4, 5], &[5, 6]]),
        ),
        (
            &[&[1, 0], &[2, 5]],
            set(&[&[1, 0], &[2, 5], &[1, 1], &[2, 3], &[1, 2]]),
        ),
        (
            &[&[5, 3, 1], &[1, 5, 2], &[8, 3, 5]],
            set(&[
                &[5, 3, 1],
                &[1, 5, 2],
                &[8, 3, 5],
                &[1, 2, 1],
                &[2, 1, 1],
                &[2, 2, 1],
                &[2, 5, 2],
                &[3, 2, 1],
                &[3, 2, 2],
                &[3, 5, 2],
                &[3, 5, 3],
                &[4, 5, 2],
                &[5, 2, 3],
                &[5, 5, 2],
                &[5, 5, 4],
                &[7, 5, 5],
            ]),
        ),
    ];
    let mut failures = Vec::new();
    for (rays, expected) in &cases {
        let m = model(rays);
        let got: BTreeSet<IntVector> = m.hilbert_basis().iter().cloned().collect();
        let brute: BTreeSet<IntVector> =
            oracle::hilbert_basis_box(m.rays().rays(), &Budget::default())
                .unwrap()
                .into_iter()
                .collect();
        if got != brute {
            failures.push(format!("{:?}: box scan disagrees", rays));
        }
        if &got != expected {
            let missing: Vec<String> = expected.difference(&got).map(|p| p.to_string()).collect();
            let extra: Vec<String> = got.difference(expected).map(|p| p.to_string()).collect();
            failures.push(format!(
                "{:?}: expected but not minimal {:?}, computed but not expected {:?}",
                rays, missing, extra
            ));
        }
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            "5 of 5 exact".into()
        } else {
            failures.join("; ")
        },
    )
}

fn ulrich_verdicts() -> Outcome {
    let cases: [(Rays, &[i64], bool); 8] = [
        (&[&[11, 2], &[31, 6]], &[16, 3], true),
        (&[&[5, 2], &[2, 5]], &[1, 1], false),
        (&[&[5, 2], &[2, 5]], &[2, 1], false),
        (&[&[5, 2], &[2, 5]], &[1, 2], false),
        (&[&[11, 13], &[3, 4]], &[5, 6], true),
        (&[&[11, 13], &[3, 4]], &[4, 5], false),
        (&[&[1, 0], &[2, 5]], &[1, 1], false),
        (&[&[1, 0], &[2, 5]], &[1, 2], true),
    ];
    let mut wrong = Vec::new();
    for (rays, b, expected) in cases {
        let om = oriented(rays);
        let b = v(b);
        let fast = om.is_ulrich(&b).unwrap().ulrich;
        let brute = oracle::ulrich_pairwise_brute(&om, &b).unwrap();
        if fast != expected || brute != expected {
            wrong.push(format!("{b} in {rays:?}: fast {fast}, pairwise {brute}"));
        }
    }
    outcome(
        wrong.is_empty(),
        if wrong.is_empty() {
            "8 of 8".into()
        } else {
            wrong.join("; ")
        },
    )
}

// Plane instances that are not slim, and those without a bottom element.
fn plane_structure(plane: &[([i64; 2], [i64; 2])]) -> (usize, usize) {
    let budget = Budget::default();
    let mut not_slim = 0;
    let mut no_bottom = 0;
    for (a, b) in plane {
        let m =
            SemigroupModel::build(vec![IntVector::from(*a), IntVector::from(*b)], &budget).unwrap();
        not_slim += usize::from(!m.is_slim().slim);
        no_bottom += usize::from(m.bottom_element().is_none());
    }
    (not_slim, no_bottom)
}

fn slim(instances: usize, not_slim: usize) -> Outcome {
    let verdict = model(&[&[11, 13, 0], &[3, 4, 0], &[0, 0, 1]]).is_slim();
    let four_fifths = BigRational::new(BigInt::from(4), BigInt::from(5));
    let witness_ok = !verdict.slim && verdict.witness == Some((v(&[4, 5, 0]), four_fifths));
    outcome(
        not_slim == 0 && witness_ok,
        format!(
            "{instances} plane instances, {not_slim} not slim; space witness {:?}",
            verdict.witness.map(|(w, s)| format!("{w} sum {s}"))
        ),
    )
}

fn bottom(instances: usize, missing: usize) -> Outcome {
    let m = model(&[&[5, 3, 1], &[1, 5, 2], &[8, 3, 5]]);
    let minimal: BTreeSet<IntVector> = m.omega_minimal_elements().into_iter().collect();
    let space_ok = m.bottom_element().is_none() && minimal == set(&[&[1, 2, 1], &[2, 1, 1]]);
    outcome(
        missing == 0 && space_ok,
        format!(
            "{instances} plane instances, {missing} without bottom; space minimal elements {:?}",
            minimal.iter().map(ToString::to_string).collect::<Vec<_>>()
        ),
    )
}

// Grid pairs with (1,1) interior, counted from the parameters alone.
fn ones_interior_count(plane: &[([i64; 2], [i64; 2])]) -> usize {
    plane
        .iter()
        .filter(|(a, b)| a[1] < a[0] && b[0] < b[1])
        .count()
}

fn clean(report: &DiffReport, names: &[&str]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for name in names {
        let compared = report.checks.get(name).copied().unwrap_or(0);
        let bad = report.mismatches_for(name).len();
        ok &= compared > 0 && bad == 0;
        parts.push(format!("{name}: {compared} compared, {bad} mismatched"));
    }
    (ok, parts.join("; "))
}

fn three_way(report: &DiffReport, plane: &[([i64; 2], [i64; 2])]) -> Outcome {
    let expected = ones_interior_count(plane);
    let (ok, detail) = clean(
        report,
        &[
            checks::BOTTOM_ONES,
            checks::BOTTOM_CRITERION,
            checks::PAIRWISE,
        ],
    );
    let covered = report.checks.get(checks::BOTTOM_ONES).copied() == Some(expected);
    outcome(
        ok && covered,
        format!("{expected} instances with (1,1) interior; {detail}"),
    )
}

fn counting(report: &DiffReport) -> Outcome {
    let (ok, detail) = clean(
        report,
        &[checks::H_STAR, checks::H_STAR_COUNT, checks::GORENSTEIN],
    );
    outcome(ok, detail)
}

fn nearly() -> Outcome {
    let budget = Budget::default();
    let rows = survey(NEARLY_MAX, false, &budget).unwrap();
    let failing = rows.iter().filter(|r| !r.nearly_gorenstein).count();
    let m = model(&[&[5, 3, 1], &[1, 5, 2], &[8, 3, 5]]);
    let verdict = is_nearly_gorenstein(&m, &budget).unwrap();
    let space_ok = !verdict.nearly_gorenstein && verdict.failures().contains(&v(&[5, 3, 1]));
    outcome(
        failing == 0 && space_ok,
        format!(
            "{} plane instances, {failing} not nearly Gorenstein; space failures {:?}",
            rows.len(),
            verdict
                .failures()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        ),
    )
}

fn recursion(report: &DiffReport, plane: &[([i64; 2], [i64; 2])]) -> Outcome {
    // Bottom (1,1) exactly when (1,1) is interior; the recursion needs x_1 - y_1 > 1.
    let expected = plane
        .iter()
        .filter(|(a, b)| a[1] < a[0] && b[0] < b[1] && a[0] - a[1] > 1)
        .count();
    let (ok, detail) = clean(report, &[checks::RECURSION]);
    let covered = report.checks.get(checks::RECURSION).copied() == Some(expected);
    outcome(
        ok && covered,
        format!("{expected} instances expected; {detail}"),
    )
}

fn oracle_diff_and_mutation(report: &DiffReport) -> Outcome {
    let mutated = oracle_diff(MUTATION_MAX, Mutation::FlipAgResidue, &Budget::default()).unwrap();
    let caught = mutated.mismatches_for(checks::AG_RESIDUE).len();
    outcome(
        report.mismatches.is_empty() && caught > 0,
        format!(
            "{} instances, {} mismatches; mutated residue rule at entries <= {MUTATION_MAX}: {caught} mismatches",
            report.instances,
            report.mismatches.len()
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let budget = Budget::default();
    let plane = grid(SWEEP_MAX, &budget).unwrap();
    let report = oracle_diff(SWEEP_MAX, Mutation::None, &budget).unwrap();
    let (not_slim, no_bottom) = plane_structure(&plane);

    let results: Vec<(&str, Outcome)> = vec![
        ("1 golden Hilbert bases", golden_bases()),
        ("2 Ulrich verdicts", ulrich_verdicts()),
        ("3 slim verdicts", slim(plane.len(), not_slim)),
        ("4 bottom element", bottom(plane.len(), no_bottom)),
        (
            "5 three-way agreement, entries <= 40",
            three_way(&report, &plane),
        ),
        ("6 counting law and Gorenstein", counting(&report)),
        ("7 nearly Gorenstein", nearly()),
        (
            "8 H_1^* recursion, entries <= 40",
            recursion(&report, &plane),
        ),
        (
            "9 oracle diff and mutation",
            oracle_diff_and_mutation(&report),
        ),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!(
            "{} criterion {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "{} of {} criteria passed in {:.1} s",
        results.len() - failed,
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
