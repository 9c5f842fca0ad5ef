//! Nearly Gorenstein test through the trace of the canonical module.
//!
//! `(R : ω_R)` is spanned by the monomials `x^c` with `c + G(ω_H) ⊆ H`, so the
//! trace is spanned by `x^{c + g + h}` with such `c`, `g ∈ G(ω_H)` and
//! `h ∈ H`. The ring is nearly Gorenstein iff every Hilbert basis element is
//! of that form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::lattice::{Budget, IntVector};
use crate::semigroup::SemigroupModel;

/// `target = shift + generator + slack` with `shift + G(ω_H) ⊆ H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceCertificate {
    pub target: IntVector,
    pub shift: IntVector,
    pub generator: IntVector,
    pub slack: IntVector,
}

impl TraceCertificate {
    pub fn verify(&self, model: &SemigroupModel) -> bool {
        &(&self.shift + &self.generator) + &self.slack == self.target
            && model.contains(&self.slack)
            && admissible_shift(model, &self.shift)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NearlyGorenstein {
    pub nearly_gorenstein: bool,
    /// One entry per Hilbert basis element, in basis order.
    pub certificates: Vec<(IntVector, Option<TraceCertificate>)>,
}

impl NearlyGorenstein {
    /// Basis elements outside the trace.
    pub fn failures(&self) -> Vec<IntVector> {
        self.certificates
            .iter()
            .filter(|(_, c)| c.is_none())
            .map(|(t, _)| t.clone())
            .collect()
    }
}

fn admissible_shift(model: &SemigroupModel, shift: &IntVector) -> bool {
    model
        .omega_generators()
        .iter()
        .all(|g| model.contains(&(shift + g)))
}

/// Exact decision. For each target `a` and generator `g` the slack `h ∈ H`
/// ranges over `0 ⪯ h ⪯ a - g + min_{g'} g'`: beyond that bound
/// `a - g - h + g'` leaves `N^d` for the generator attaining the minimum.
pub fn is_nearly_gorenstein(model: &SemigroupModel, budget: &Budget) -> Result<NearlyGorenstein> {
    let gens = model.omega_generators();
    let dim = model.dim();
    let floor = gens
        .iter()
        .skip(1)
        .fold(gens[0].clone(), |acc, g| acc.meet(g));
    let low = scaled_floor(model);
    let mut certificates = Vec::new();
    for (a, sa) in model.hilbert_basis().iter().zip(model.basis_scaled()) {
        let mut found = fast_certificate(model, &low, a, sa);
        if found.is_none() {
            let tops: Vec<IntVector> = gens.iter().map(|g| &(a - g) + &floor).collect();
            let volume: BigInt = tops.iter().map(box_volume).sum();
            budget.check("trace slack boxes", &volume)?;
            'gens: for ((g, sg), top) in gens.iter().zip(model.omega_scaled()).zip(&tops) {
                if top.coords().iter().any(Signed::is_negative) {
                    continue;
                }
                let mut h = IntVector::zero(dim);
                loop {
                    let sh = model.rays().scaled_unchecked(&h);
                    let in_h = sh.iter().all(|c| !c.is_negative());
                    let fits =
                        (0..dim).all(|i| &sa[i] - &sg[i] - &sh[i] + &low[i] >= BigInt::zero());
                    if in_h && fits {
                        found = Some(TraceCertificate {
                            target: a.clone(),
                            shift: &(a - g) - &h,
                            generator: g.clone(),
                            slack: h.clone(),
                        });
                        break 'gens;
                    }
                    if !advance(&mut h, top) {
                        break;
                    }
                }
            }
        }
        certificates.push((a.clone(), found));
    }
    Ok(NearlyGorenstein {
        nearly_gorenstein: certificates.iter().all(|(_, c)| c.is_some()),
        certificates,
    })
}

/// Sufficient test with zero slack: every basis element `a` has a generator
/// `g` with `a - g + G(ω_H) ⊆ H`. `false` is inconclusive.
pub fn nearly_fast_path(model: &SemigroupModel) -> bool {
    let low = scaled_floor(model);
    model
        .hilbert_basis()
        .iter()
        .zip(model.basis_scaled())
        .all(|(a, sa)| fast_certificate(model, &low, a, sa).is_some())
}

// Per ray, the least scaled coordinate over G(ω_H). A shift c satisfies
// c + G(ω_H) ⊆ H iff its scaled coordinates are at least minus these.
fn scaled_floor(model: &SemigroupModel) -> Vec<BigInt> {
    let gens = model.omega_scaled();
    (0..model.dim())
        .map(|i| gens.iter().map(|s| &s[i]).min().expect("nonempty").clone())
        .collect()
}

fn fast_certificate(
    model: &SemigroupModel,
    low: &[BigInt],
    a: &IntVector,
    sa: &[BigInt],
) -> Option<TraceCertificate> {
    model
        .omega_generators()
        .iter()
        .zip(model.omega_scaled())
        .find(|(_, sg)| (0..sa.len()).all(|i| &sa[i] - &sg[i] + &low[i] >= BigInt::zero()))
        .map(|(g, _)| TraceCertificate {
            target: a.clone(),
            shift: a - g,
            generator: g.clone(),
            slack: IntVector::zero(model.dim()),
        })
}

fn box_volume(top: &IntVector) -> BigInt {
    if top.coords().iter().any(Signed::is_negative) {
        return BigInt::zero();
    }
    top.coords()
        .iter()
        .fold(BigInt::one(), |acc, c| acc * (c + 1u32))
}

// Odometer over the box [0, top].
fn advance(h: &mut IntVector, top: &IntVector) -> bool {
    for i in (0..h.dim()).rev() {
        if h[i] < top[i] {
            h.coords_mut()[i] += 1;
            return true;
        }
        h.coords_mut()[i] = BigInt::zero();
    }
    false
}
