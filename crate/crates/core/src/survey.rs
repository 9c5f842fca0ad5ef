//! Exhaustive sweeps over planar ray pairs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::Result;
use crate::lattice::{Budget, IntVector};
use crate::oracle;
use crate::trace::{is_nearly_gorenstein, nearly_fast_path};
use crate::ulrich::{Mutation, OrientedModel, Side};

/// Every pair of primitive vectors `a_1, a_2` with entries in `0..=max` and
/// `det(a_1, a_2) > 0`, ordered by `(x_1, y_1, x_2, y_2)`.
pub fn grid(max: u64, budget: &Budget) -> Result<Vec<([i64; 2], [i64; 2])>> {
    let side = BigInt::from(max) + 1;
    budget.check("parameter grid", &(&side * &side))?;
    let max = max as i64;
    let primitive: Vec<[i64; 2]> = (0..=max)
        .flat_map(|x| (0..=max).map(move |y| [x, y]))
        .filter(|&[x, y]| num_integer::gcd(x, y) == 1)
        .collect();
    let mut out = Vec::new();
    for &a in &primitive {
        for &b in &primitive {
            if a[0] * b[1] - a[1] * b[0] > 0 {
                out.push((a, b));
            }
        }
        budget.check("parameter grid", &out.len().into())?;
    }
    Ok(out)
}

/// One planar semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
    pub u: i64,
    pub v: i64,
    pub gorenstein: bool,
    pub ag1: bool,
    pub ag2: bool,
    /// AG1 and AG2 together.
    pub bottom_ulrich: bool,
    /// The exact ideal-membership test applied to the bottom element.
    pub criterion_ulrich: bool,
    /// The residue test for `(1,1)`; absent when `(1,1)` is not interior.
    pub ones_residue: Option<bool>,
    pub nearly_gorenstein: bool,
    pub mismatch: bool,
}

pub const CSV_HEADER: [&str; 14] = [
    "x1",
    "y1",
    "x2",
    "y2",
    "u",
    "v",
    "gorenstein",
    "ag1",
    "ag2",
    "bottom_ulrich",
    "criterion_ulrich",
    "ones_residue",
    "nearly_gorenstein",
    "mismatch",
];

impl SurveyRow {
    pub fn csv_record(&self) -> [String; 14] {
        let opt = |o: Option<bool>| o.map_or_else(String::new, |b| b.to_string());
        [
            self.x1.to_string(),
            self.y1.to_string(),
            self.x2.to_string(),
            self.y2.to_string(),
            self.u.to_string(),
            self.v.to_string(),
            self.gorenstein.to_string(),
            self.ag1.to_string(),
            self.ag2.to_string(),
            self.bottom_ulrich.to_string(),
            self.criterion_ulrich.to_string(),
            opt(self.ones_residue),
            self.nearly_gorenstein.to_string(),
            self.mismatch.to_string(),
        ]
    }
}

fn oriented(a: [i64; 2], b: [i64; 2], budget: &Budget) -> Result<OrientedModel> {
    OrientedModel::build(vec![IntVector::from(a), IntVector::from(b)], *budget)
}

fn small(z: &BigInt) -> i64 {
    z.to_i64().expect("grid coordinates are small")
}

fn ones_interior(a: [i64; 2], b: [i64; 2]) -> bool {
    a[1] < a[0] && b[0] < b[1]
}

pub fn survey_row(om: &OrientedModel, budget: &Budget) -> Result<SurveyRow> {
    let [x1, y1, x2, y2] = om.params().map(small);
    let (u, v) = om.bottom().xy();
    let ag1 = om.is_ag(Side::One)?;
    let ag2 = om.is_ag(Side::Two)?;
    let bottom_ulrich = ag1 && ag2;
    let criterion_ulrich = om.is_ulrich(om.bottom())?.ulrich;
    let ones_residue = om.ulrich_one_one().ok();
    let residues_agree = om.is_ag_residue(Side::One)? == ag1 && om.is_ag_residue(Side::Two)? == ag2;
    Ok(SurveyRow {
        x1,
        y1,
        x2,
        y2,
        u: small(u),
        v: small(v),
        gorenstein: om.model().is_gorenstein(),
        ag1,
        ag2,
        bottom_ulrich,
        criterion_ulrich,
        ones_residue,
        nearly_gorenstein: is_nearly_gorenstein(om.model(), budget)?.nearly_gorenstein,
        mismatch: bottom_ulrich != criterion_ulrich
            || ones_residue.is_some_and(|r| r != bottom_ulrich)
            || !residues_agree,
    })
}

/// One row per grid pair, optionally only those with `(1,1)` interior.
pub fn survey(max: u64, require_ones_interior: bool, budget: &Budget) -> Result<Vec<SurveyRow>> {
    grid(max, budget)?
        .into_iter()
        .filter(|&(a, b)| !require_ones_interior || ones_interior(a, b))
        .map(|(a, b)| survey_row(&oriented(a, b, budget)?, budget))
        .collect()
}

/// A disagreement between two routes to the same answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub a1: IntVector,
    pub a2: IntVector,
    pub check: &'static str,
    pub fast: String,
    pub oracle: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub instances: usize,
    /// How many comparisons each check made.
    pub checks: BTreeMap<&'static str, usize>,
    pub mismatches: Vec<Mismatch>,
}

impl DiffReport {
    pub fn mismatches_for(&self, check: &str) -> Vec<&Mismatch> {
        self.mismatches
            .iter()
            .filter(|m| m.check == check)
            .collect()
    }

    fn compare<T: std::fmt::Debug + PartialEq>(
        &mut self,
        om: &OrientedModel,
        check: &'static str,
        fast: T,
        oracle: T,
    ) {
        *self.checks.entry(check).or_default() += 1;
        if fast != oracle {
            self.mismatches.push(Mismatch {
                a1: om.a1().clone(),
                a2: om.a2().clone(),
                check,
                fast: format!("{fast:?}"),
                oracle: format!("{oracle:?}"),
            });
        }
    }
}

pub mod checks {
    pub const H_STAR: &str = "h_star residues = box scan";
    pub const H_STAR_COUNT: &str = "|h_star| = determinant formula";
    pub const AG_RESIDUE: &str = "sum-freeness: pair scan = residues";
    pub const BOTTOM_CRITERION: &str = "bottom: AG1 and AG2 = ideal membership";
    pub const BOTTOM_ONES: &str = "bottom (1,1): AG1 and AG2 = residue rule";
    pub const PAIRWISE: &str = "basis elements: ideal membership = pairwise brute force";
    pub const RECURSION: &str = "H_1^* division chain = h_star";
    pub const GORENSTEIN: &str = "Gorenstein = unit determinants = one generator";
    pub const NEARLY: &str = "nearly Gorenstein: fast path implies full search, full search holds";
}

/// Runs every fast path against its reference over the grid.
pub fn oracle_diff(max: u64, mutation: Mutation, budget: &Budget) -> Result<DiffReport> {
    let mut report = DiffReport::default();
    for (a, b) in grid(max, budget)? {
        let om = oriented(a, b, budget)?;
        diff_instance(&om, mutation, budget, &mut report)?;
        report.instances += 1;
    }
    Ok(report)
}

pub fn diff_instance(
    om: &OrientedModel,
    mutation: Mutation,
    budget: &Budget,
    report: &mut DiffReport,
) -> Result<()> {
    let model = om.model();
    let mut dets = Vec::new();
    let mut ag = Vec::new();
    for side in [Side::One, Side::Two] {
        let fast = om.h_star(side)?.points;
        let mut slow = oracle::h_star_brute(om.bottom(), om.ray(side))?;
        slow.sort();
        report.compare(om, checks::H_STAR, &fast, &slow);
        let count = om.h_star_count(side);
        report.compare(
            om,
            checks::H_STAR_COUNT,
            count.clone(),
            BigInt::from(slow.len()),
        );
        dets.push(count + 1);
        let scan = om.is_ag(side)?;
        report.compare(
            om,
            checks::AG_RESIDUE,
            om.is_ag_residue_with(side, mutation)?,
            scan,
        );
        ag.push(scan);
    }

    let bottom_ulrich = ag[0] && ag[1];
    report.compare(
        om,
        checks::BOTTOM_CRITERION,
        om.is_ulrich(om.bottom())?.ulrich,
        bottom_ulrich,
    );
    if let Ok(residue) = om.ulrich_one_one() {
        report.compare(om, checks::BOTTOM_ONES, residue, bottom_ulrich);
    }

    for c in model.hilbert_basis().iter().filter(|c| !model.is_ray(c)) {
        let verdict = om.is_ulrich(c)?;
        report.compare(
            om,
            checks::PAIRWISE,
            (verdict.ulrich, verdict.basis_pair_form),
            (oracle::ulrich_pairwise_brute(om, c)?, Some(verdict.ulrich)),
        );
    }

    if let Ok(chain) = om.h1_star_recursive() {
        report.compare(om, checks::RECURSION, chain, om.h_star(Side::One)?.points);
    }

    let unit = dets.iter().all(One::is_one);
    report.compare(
        om,
        checks::GORENSTEIN,
        (model.is_gorenstein(), model.is_gorenstein()),
        (unit, model.omega_generators().len() == 1),
    );

    let full = is_nearly_gorenstein(model, budget)?.nearly_gorenstein;
    let fast = nearly_fast_path(model);
    report.compare(om, checks::NEARLY, (!fast || full, full), (true, true));
    Ok(())
}
