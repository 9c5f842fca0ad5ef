//! The normal simplicial semigroup `H = C ∩ Z^d` cut out by a ray system:
//! Hilbert basis, canonical ideal generators and the classification flags that
//! only depend on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::lattice::{det2, Budget, Cell, IntVector, RaySystem};

/// A ray system together with its Hilbert basis `B_H` and the minimal
/// generators `G(ω_H)` of the interior ideal. Immutable once built.
#[derive(Clone, Debug)]
pub struct SemigroupModel {
    rays: RaySystem,
    hilbert_basis: Vec<IntVector>,
    omega_gens: Vec<IntVector>,
    // Scaled coordinates of the two lists above, in the same order. Scaled
    // coordinates are linear, so sums of cached points cost additions only.
    basis_scaled: Vec<Vec<BigInt>>,
    omega_scaled: Vec<Vec<BigInt>>,
}

/// Outcome of the slimness test. `witness` is the lexicographically first
/// basis element off the interior whose barycentric coordinates sum below one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlimVerdict {
    pub slim: bool,
    pub witness: Option<(IntVector, BigRational)>,
}

impl SemigroupModel {
    pub fn build(rays: Vec<IntVector>, budget: &Budget) -> Result<Self> {
        Self::from_system(RaySystem::new(rays)?, budget)
    }

    pub fn from_system(rays: RaySystem, budget: &Budget) -> Result<Self> {
        let (hilbert_basis, omega_gens) = if rays.dim() == 2 {
            let basis = plane_hilbert_basis(&rays);
            let omega = plane_omega_generators(&rays, &basis);
            (basis, omega)
        } else {
            let cells = rays.parallelotope_cells(budget)?;
            (
                basis_from_cells(&rays, &cells),
                omega_from_cells(&rays, &cells),
            )
        };
        let scale = |pts: &[IntVector]| -> Vec<Vec<BigInt>> {
            pts.iter().map(|p| rays.scaled_unchecked(p)).collect()
        };
        Ok(SemigroupModel {
            basis_scaled: scale(&hilbert_basis),
            omega_scaled: scale(&omega_gens),
            rays,
            hilbert_basis,
            omega_gens,
        })
    }

    pub fn rays(&self) -> &RaySystem {
        &self.rays
    }

    pub fn dim(&self) -> usize {
        self.rays.dim()
    }

    pub fn det_abs(&self) -> &BigInt {
        self.rays.index()
    }

    /// `B_H`, sorted lexicographically.
    pub fn hilbert_basis(&self) -> &[IntVector] {
        &self.hilbert_basis
    }

    /// `G(ω_H)`, sorted lexicographically.
    pub fn omega_generators(&self) -> &[IntVector] {
        &self.omega_gens
    }

    pub(crate) fn basis_scaled(&self) -> &[Vec<BigInt>] {
        &self.basis_scaled
    }

    pub(crate) fn omega_scaled(&self) -> &[Vec<BigInt>] {
        &self.omega_scaled
    }

    /// Whether `z ∈ H`.
    ///
    /// # Panics
    /// If `z` has the wrong dimension.
    pub fn contains(&self, z: &IntVector) -> bool {
        assert_eq!(z.dim(), self.dim(), "dimension mismatch");
        self.rays.in_cone_unchecked(z)
    }

    /// Whether `z ∈ base + H`.
    pub fn contains_shifted(&self, base: &IntVector, z: &IntVector) -> bool {
        self.contains(&(z - base))
    }

    /// Whether `z ∈ ω_H`.
    pub fn is_interior(&self, z: &IntVector) -> bool {
        assert_eq!(z.dim(), self.dim(), "dimension mismatch");
        self.rays.in_interior_unchecked(z)
    }

    pub fn is_ray(&self, z: &IntVector) -> bool {
        self.rays.rays().contains(z)
    }

    pub fn is_slim(&self) -> SlimVerdict {
        let index = self.rays.index();
        for c in &self.hilbert_basis {
            let scaled = self.rays.scaled_unchecked(c);
            if !scaled.iter().any(Zero::is_zero) {
                continue;
            }
            let total: BigInt = scaled.iter().sum();
            if &total < index {
                return SlimVerdict {
                    slim: false,
                    witness: Some((c.clone(), BigRational::new(total, index.clone()))),
                };
            }
        }
        SlimVerdict {
            slim: true,
            witness: None,
        }
    }

    /// The componentwise least element of `ω_H`, if there is one.
    ///
    /// Every element of `ω_H` dominates some generator componentwise because
    /// `H ⊆ N^d`, so the meet of the generators is the only candidate.
    pub fn bottom_element(&self) -> Option<IntVector> {
        let (first, rest) = self.omega_gens.split_first()?;
        let meet = rest.iter().fold(first.clone(), |acc, g| acc.meet(g));
        self.is_interior(&meet).then_some(meet)
    }

    /// Componentwise minimal elements of `ω_H` (all of them lie in `G(ω_H)`).
    pub fn omega_minimal_elements(&self) -> Vec<IntVector> {
        self.omega_gens
            .iter()
            .filter(|g| {
                !self
                    .omega_gens
                    .iter()
                    .any(|other| other != *g && other.precedes(g))
            })
            .cloned()
            .collect()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.omega_gens.len() == 1
    }
}

/// `B_H` by whichever route fits the dimension.
pub fn hilbert_basis(rays: &RaySystem, budget: &Budget) -> Result<Vec<IntVector>> {
    if rays.dim() == 2 {
        Ok(plane_hilbert_basis(rays))
    } else {
        hilbert_basis_generic(rays, budget)
    }
}

/// `B_H` from the parallelotope: the rays plus the nonzero parallelotope
/// points not dominated, in barycentric coordinates, by another nonzero one.
///
/// A parallelotope point `c` splits as `s + (c - s)` inside `H` exactly when
/// `[s]_i <= [c]_i` for all `i`; the rays can never be subtracted from it.
pub fn hilbert_basis_generic(rays: &RaySystem, budget: &Budget) -> Result<Vec<IntVector>> {
    let cells = rays.parallelotope_cells(budget)?;
    Ok(basis_from_cells(rays, &cells))
}

/// `G(ω_H)` from the parallelotope: each lattice class has one representative
/// with barycentric coordinates in `(0, 1]^d`, and `ω_H` is generated by the
/// representatives minimal under coordinatewise comparison.
pub fn omega_generators_generic(rays: &RaySystem, budget: &Budget) -> Result<Vec<IntVector>> {
    let cells = rays.parallelotope_cells(budget)?;
    Ok(omega_from_cells(rays, &cells))
}

fn basis_from_cells(rays: &RaySystem, cells: &[Cell]) -> Vec<IntVector> {
    let nonzero: Vec<&Cell> = cells.iter().filter(|c| !c.point.is_zero()).collect();
    let mut basis: Vec<IntVector> = rays.rays().to_vec();
    basis.extend(minimal_by_scaled(
        nonzero.iter().map(|c| (&c.point, c.scaled.clone())),
    ));
    basis.sort();
    basis
}

fn omega_from_cells(rays: &RaySystem, cells: &[Cell]) -> Vec<IntVector> {
    let index = rays.index();
    let lifted: Vec<(IntVector, Vec<BigInt>)> = cells
        .iter()
        .map(|cell| {
            let mut point = cell.point.clone();
            let mut scaled = cell.scaled.clone();
            for (i, s) in scaled.iter_mut().enumerate() {
                if s.is_zero() {
                    point = &point + &rays.rays()[i];
                    *s = index.clone();
                }
            }
            (point, scaled)
        })
        .collect();
    let mut gens = minimal_by_scaled(lifted.iter().map(|(p, s)| (p, s.clone())));
    gens.sort();
    gens
}

/// Points whose scaled coordinate vectors are minimal under the product
/// order. Candidates are visited by increasing coordinate sum, so a dominated
/// candidate always meets one of its minimal dominators first.
fn minimal_by_scaled<'a>(
    candidates: impl Iterator<Item = (&'a IntVector, Vec<BigInt>)>,
) -> Vec<IntVector> {
    let mut order: Vec<(BigInt, &IntVector, Vec<BigInt>)> =
        candidates.map(|(p, s)| (s.iter().sum(), p, s)).collect();
    order.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
    let mut kept: Vec<(&IntVector, Vec<BigInt>)> = Vec::new();
    for (_, point, scaled) in order {
        let dominated = kept
            .iter()
            .any(|(_, k)| k.iter().zip(&scaled).all(|(a, b)| a <= b));
        if !dominated {
            kept.push((point, scaled));
        }
    }
    kept.into_iter().map(|(p, _)| p.clone()).collect()
}

/// Hilbert basis of a planar cone by unimodular steps.
///
/// Walking from `a_1` towards `a_2`, the successor of a basis element `b` is
/// the point `z` with `det(b, z) = 1` that lies in the cone and is closest to
/// the origin; consecutive elements therefore form lattice bases. Takes
/// `|B_H| - 1` steps, each a gcd and a ceiling division.
pub(crate) fn plane_hilbert_basis(rays: &RaySystem) -> Vec<IntVector> {
    let (first, last) = oriented_pair(rays);
    let mut basis = vec![first.clone()];
    let mut current = first.clone();
    while &current != last {
        let (p, q) = current.xy();
        let e = p.extended_gcd(q);
        let (s, t) = if e.gcd.is_negative() {
            (-e.x, -e.y)
        } else {
            (e.x, e.y)
        };
        // det(current, z0) = p*s + q*t = 1
        let z0 = IntVector::new(vec![-t, s]);
        let step = det2(&current, last);
        let offset = det2(&z0, last);
        let k = (-offset).div_ceil(&step);
        let next = &z0 + &current.scale(&k);
        basis.push(next.clone());
        current = next;
    }
    basis.sort();
    basis
}

/// `G(ω_H)` in the plane: the non-ray basis elements, or `a_1 + a_2` when the
/// basis consists of the rays alone.
pub(crate) fn plane_omega_generators(rays: &RaySystem, basis: &[IntVector]) -> Vec<IntVector> {
    if rays.index().is_one() {
        return vec![rays.ray_sum()];
    }
    basis
        .iter()
        .filter(|b| !rays.rays().contains(b))
        .cloned()
        .collect()
}

/// The rays of a planar system ordered so that `det(a_1, a_2) > 0`.
pub(crate) fn oriented_pair(rays: &RaySystem) -> (&IntVector, &IntVector) {
    let r = rays.rays();
    if rays.det().is_positive() {
        (&r[0], &r[1])
    } else {
        (&r[1], &r[0])
    }
}
