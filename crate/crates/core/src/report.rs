//! The per-semigroup classification record and its JSON document form.
//!
//! Field names here are the public document schema; see the README.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Budget, IntVector};
use crate::semigroup::SemigroupModel;
use crate::trace::is_nearly_gorenstein;
use crate::ulrich::{OrientedModel, QuickFilters, SearchResult, Side};

/// Input document: `{"rays": [[x, y], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Input {
    pub rays: Vec<IntVector>,
}

pub fn parse_input(text: &str) -> Result<Input> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

// BigInt as a JSON number of any length.
mod decimal {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(z: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&z.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slim {
    pub slim: bool,
    pub witness: Option<IntVector>,
    /// Barycentric coordinate sum of the witness, as `"p/q"`.
    pub witness_sum: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HStarReport {
    pub points: Vec<IntVector>,
    #[serde(with = "decimal")]
    pub count: BigInt,
}

/// Dimension-two extras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneReport {
    pub a1: IntVector,
    pub a2: IntVector,
    pub bottom: IntVector,
    pub h_star_1: HStarReport,
    pub h_star_2: HStarReport,
    pub ag1: bool,
    pub ag2: bool,
    pub bottom_ulrich: bool,
    /// Residue rule for `(1,1)`; `null` unless `(1,1)` is interior.
    pub ones_criterion: Option<bool>,
    pub quick_filters: QuickFilters,
    pub ulrich_elements: SearchResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationReport {
    pub rays: Vec<IntVector>,
    pub dimension: usize,
    #[serde(with = "decimal")]
    pub determinant: BigInt,
    pub hilbert_basis: Vec<IntVector>,
    pub omega_generators: Vec<IntVector>,
    pub slim: Slim,
    pub bottom: Option<IntVector>,
    pub omega_minimal_elements: Vec<IntVector>,
    pub gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub nearly_gorenstein_failures: Vec<IntVector>,
    pub plane: Option<PlaneReport>,
    /// Has an Ulrich element. Decided in dimension two only.
    pub almost_gorenstein: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

pub fn analyze(rays: Vec<IntVector>, budget: &Budget) -> Result<ClassificationReport> {
    let model = SemigroupModel::build(rays.clone(), budget)?;
    let slim = model.is_slim();
    let nearly = is_nearly_gorenstein(&model, budget)?;
    let mut report = ClassificationReport {
        rays,
        dimension: model.dim(),
        determinant: model.rays().det().clone(),
        hilbert_basis: model.hilbert_basis().to_vec(),
        omega_generators: model.omega_generators().to_vec(),
        slim: Slim {
            slim: slim.slim,
            witness_sum: slim.witness.as_ref().map(|(_, s)| s.to_string()),
            witness: slim.witness.map(|(w, _)| w),
        },
        bottom: model.bottom_element(),
        omega_minimal_elements: model.omega_minimal_elements(),
        gorenstein: model.is_gorenstein(),
        nearly_gorenstein: nearly.nearly_gorenstein,
        nearly_gorenstein_failures: nearly.failures(),
        plane: None,
        almost_gorenstein: None,
        timing_ms: None,
    };
    if model.dim() == 2 {
        let plane = plane_report(&OrientedModel::new(model, *budget)?)?;
        report.almost_gorenstein = Some(!plane.ulrich_elements.elements.is_empty());
        report.plane = Some(plane);
    }
    Ok(report)
}

fn plane_report(om: &OrientedModel) -> Result<PlaneReport> {
    let h_star = |side| -> Result<HStarReport> {
        Ok(HStarReport {
            points: om.h_star(side)?.points,
            count: om.h_star_count(side),
        })
    };
    let ag1 = om.is_ag(Side::One)?;
    let ag2 = om.is_ag(Side::Two)?;
    Ok(PlaneReport {
        a1: om.a1().clone(),
        a2: om.a2().clone(),
        bottom: om.bottom().clone(),
        h_star_1: h_star(Side::One)?,
        h_star_2: h_star(Side::Two)?,
        ag1,
        ag2,
        bottom_ulrich: ag1 && ag2,
        ones_criterion: om.ulrich_one_one().ok(),
        quick_filters: om.quick_filters(),
        ulrich_elements: om.find_ulrich()?,
    })
}

/// Recomputes a report from its rays and checks every verdict, ignoring
/// `timing_ms`. Listed Ulrich elements are re-tested one by one.
pub fn validate_report(report: &ClassificationReport, budget: &Budget) -> Result<Vec<String>> {
    let fresh = analyze(report.rays.clone(), budget)?;
    let mut problems = Vec::new();
    let mut same = |name: &str, ok: bool| {
        if !ok {
            problems.push(format!("{name} differs from a fresh analysis"));
        }
    };
    same("dimension", fresh.dimension == report.dimension);
    same("determinant", fresh.determinant == report.determinant);
    same("hilbert_basis", fresh.hilbert_basis == report.hilbert_basis);
    same(
        "omega_generators",
        fresh.omega_generators == report.omega_generators,
    );
    same("slim", fresh.slim == report.slim);
    same("bottom", fresh.bottom == report.bottom);
    same(
        "omega_minimal_elements",
        fresh.omega_minimal_elements == report.omega_minimal_elements,
    );
    same("gorenstein", fresh.gorenstein == report.gorenstein);
    same(
        "nearly_gorenstein",
        fresh.nearly_gorenstein == report.nearly_gorenstein,
    );
    same(
        "nearly_gorenstein_failures",
        fresh.nearly_gorenstein_failures == report.nearly_gorenstein_failures,
    );
    same("plane", fresh.plane == report.plane);
    same(
        "almost_gorenstein",
        fresh.almost_gorenstein == report.almost_gorenstein,
    );

    if let Some(plane) = &report.plane {
        let om = OrientedModel::build(report.rays.clone(), *budget)?;
        for b in &plane.ulrich_elements.elements {
            if !om.is_ulrich(b).map(|v| v.ulrich).unwrap_or(false) {
                problems.push(format!("listed Ulrich element {b} fails the test"));
            }
        }
        if report.almost_gorenstein != Some(!plane.ulrich_elements.elements.is_empty()) {
            problems.push("almost_gorenstein disagrees with ulrich_elements".into());
        }
    }
    Ok(problems)
}
