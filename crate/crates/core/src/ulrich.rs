//! Ulrich elements and the almost Gorenstein property in dimension two.
//!
//! Throughout, `a_1 = (x_1, y_1)` and `a_2 = (x_2, y_2)` are ordered so that
//! `det(a_1, a_2) > 0`, and `b = (u, v)` is the bottom element. `H_1` and
//! `H_2` are the subsemigroups spanned by `{b, a_1}` and `{b, a_2}`; `H_i^*` is
//! the set of lattice points in the open parallelogram spanned by `b` and
//! `a_i`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{det2, Budget, IntVector, RaySystem};
use crate::semigroup::{oriented_pair, SemigroupModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn index(self) -> u8 {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }
}

/// Deliberate faults for exercising the cross-checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mutation {
    #[default]
    None,
    /// Reverse the residue inequality in the sum-freeness test.
    FlipAgResidue,
}

impl SmallPlane {
    fn violation(&self, sb: &[i64; 2]) -> Option<(usize, usize)> {
        self.basis.iter().enumerate().find_map(|(i, p)| {
            self.omega.iter().enumerate().find_map(|(j, q)| {
                let hi = p[0] + q[0] - sb[0];
                let lo = sb[1] - p[1] - q[1];
                let ok = hi >= lo && hi.div_euclid(self.d) * self.d >= lo;
                (!ok).then_some((i, j))
            })
        })
    }

    fn pair_form(&self, sb: &[i64; 2]) -> bool {
        let d = self.d;
        self.basis.iter().enumerate().all(|(i, c1)| {
            self.basis[i..].iter().all(|c2| {
                let (s0, s1) = (c1[0] + c2[0], c1[1] + c2[1]);
                s0 >= d || s1 >= d || (s0 >= sb[0] && s1 >= sb[1])
            })
        })
    }
}

fn residue_sums_ok<T: Ord>(
    residues: &[(T, T)],
    x1: &T,
    bound: &T,
    mutation: Mutation,
    add: impl Fn(&T, &T) -> T,
) -> bool {
    residues.iter().enumerate().all(|(i, (k, rk))| {
        residues[i..].iter().all(|(l, rl)| {
            if &add(k, l) >= x1 {
                return true;
            }
            let sum = add(rk, rl);
            match mutation {
                Mutation::None => &sum < bound,
                Mutation::FlipAgResidue => &sum > bound,
            }
        })
    })
}

/// A planar model with its rays in standard order and its bottom element.
#[derive(Clone, Debug)]
pub struct OrientedModel {
    model: SemigroupModel,
    a1: IntVector,
    a2: IntVector,
    bottom: IntVector,
    budget: Budget,
    // Scaled coordinates of B_H and G(ω_H) in the (a_1, a_2) order.
    basis_scaled: Vec<[BigInt; 2]>,
    omega_scaled: Vec<[BigInt; 2]>,
    small: Option<SmallPlane>,
}

// The same scaled data as machine integers, kept when |det| < 2^40 so that
// every sum and product below stays far from overflow.
#[derive(Clone, Debug)]
struct SmallPlane {
    d: i64,
    basis: Vec<[i64; 2]>,
    omega: Vec<[i64; 2]>,
}

const SMALL_LIMIT: i64 = 1 << 40;

fn to_small(d: &BigInt) -> Option<i64> {
    d.to_i64().filter(|v| v.abs() < SMALL_LIMIT)
}

fn small_pairs(list: &[[BigInt; 2]]) -> Option<Vec<[i64; 2]>> {
    list.iter()
        .map(|[p, q]| Some([to_small(p)?, to_small(q)?]))
        .collect()
}

/// `H_i^*`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HStarSet {
    pub side: Side,
    pub points: Vec<IntVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UlrichCertificate {
    AllPairsCovered,
    /// `p + q` with `p ∈ B_H`, `q ∈ G(ω_H)` is not in the ideal.
    Violation {
        p: IntVector,
        q: IntVector,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UlrichVerdict {
    pub element: IntVector,
    pub ulrich: bool,
    pub certificate: UlrichCertificate,
    /// For `b ∈ B_H \ {a_1, a_2}`: whether every sum of two basis elements
    /// lies in `(b + H) ∪ (a_1 + H) ∪ (a_2 + H)`. `None` for other elements.
    pub basis_pair_form: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuickFilters {
    /// Nonzero elements are positive and `(1,1) ∈ ω_H`: only `(1,1)` can be Ulrich.
    pub only_candidate_is_ones: bool,
    /// `2b ∈ P_H`: no basis element other than `b` is Ulrich.
    pub only_candidate_is_bottom: bool,
    /// `(x_2, y_1) ⪯ b`: the bottom element is Ulrich.
    pub bottom_forced_ulrich: bool,
    /// No sum of two non-ray basis elements lies in `P_H`: all of them are Ulrich.
    pub all_basis_elements_ulrich: bool,
}

/// All Ulrich elements. Every Ulrich element divides some element of the
/// chain through `probe`, so the list is complete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub elements: Vec<IntVector>,
    pub probe: IntVector,
}

// Side 1 data in the coordinates where the side is side 1. Side 2 is handled
// by swapping coordinates, which exchanges the roles of the two rays.
struct SideFrame {
    x1: BigInt,
    y1: BigInt,
    u: BigInt,
    v: BigInt,
    swapped: bool,
}

impl SideFrame {
    // v x_1 - u y_1
    fn det(&self) -> BigInt {
        &self.v * &self.x1 - &self.u * &self.y1
    }

    fn point(&self, k: BigInt, r: BigInt) -> IntVector {
        if self.swapped {
            IntVector::new(vec![r, k])
        } else {
            IntVector::new(vec![k, r])
        }
    }

    fn first(&self, p: &IntVector) -> BigInt {
        if self.swapped {
            p[1].clone()
        } else {
            p[0].clone()
        }
    }
}

impl OrientedModel {
    /// # Errors
    /// `DimensionMismatch` unless the model is planar.
    pub fn new(model: SemigroupModel, budget: Budget) -> Result<Self> {
        if model.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: model.dim(),
            });
        }
        let (a1, a2) = oriented_pair(model.rays());
        let (a1, a2) = (a1.clone(), a2.clone());
        let bottom = model
            .bottom_element()
            .expect("planar semigroups have a bottom element");
        let swap = model.rays().rays()[0] != a1;
        let orient = |list: &[Vec<BigInt>]| -> Vec<[BigInt; 2]> {
            list.iter()
                .map(|s| {
                    let (p, q) = (s[0].clone(), s[1].clone());
                    if swap {
                        [q, p]
                    } else {
                        [p, q]
                    }
                })
                .collect()
        };
        let (basis_scaled, omega_scaled) =
            (orient(model.basis_scaled()), orient(model.omega_scaled()));
        let small = (|| {
            Some(SmallPlane {
                d: to_small(model.rays().index())?,
                basis: small_pairs(&basis_scaled)?,
                omega: small_pairs(&omega_scaled)?,
            })
        })();
        Ok(OrientedModel {
            basis_scaled,
            omega_scaled,
            small,
            model,
            a1,
            a2,
            bottom,
            budget,
        })
    }

    pub fn build(rays: Vec<IntVector>, budget: Budget) -> Result<Self> {
        Self::new(SemigroupModel::build(rays, &budget)?, budget)
    }

    pub fn model(&self) -> &SemigroupModel {
        &self.model
    }

    pub fn a1(&self) -> &IntVector {
        &self.a1
    }

    pub fn a2(&self) -> &IntVector {
        &self.a2
    }

    pub fn ray(&self, side: Side) -> &IntVector {
        match side {
            Side::One => &self.a1,
            Side::Two => &self.a2,
        }
    }

    pub fn bottom(&self) -> &IntVector {
        &self.bottom
    }

    /// `(x_1, y_1, x_2, y_2)`.
    pub fn params(&self) -> [&BigInt; 4] {
        [&self.a1[0], &self.a1[1], &self.a2[0], &self.a2[1]]
    }

    fn frame(&self, side: Side) -> SideFrame {
        let (u, v) = self.bottom.xy();
        match side {
            Side::One => SideFrame {
                x1: self.a1[0].clone(),
                y1: self.a1[1].clone(),
                u: u.clone(),
                v: v.clone(),
                swapped: false,
            },
            Side::Two => SideFrame {
                x1: self.a2[1].clone(),
                y1: self.a2[0].clone(),
                u: v.clone(),
                v: u.clone(),
                swapped: true,
            },
        }
    }

    /// The ray system `{b, a_i}`, whose open parallelotope holds `H_i^*`.
    pub fn side_system(&self, side: Side) -> RaySystem {
        RaySystem::from_independent(vec![self.bottom.clone(), self.ray(side).clone()])
            .expect("the bottom element is interior, hence off both rays")
    }

    /// `v x_1 - u y_1 - 1` for side 1, `u y_2 - v x_2 - 1` for side 2.
    pub fn h_star_count(&self, side: Side) -> BigInt {
        self.frame(side).det() - 1
    }

    /// `H_i^*` by residues: for `u < k < x_1` write `k y_1 = q_k x_1 + r_k`;
    /// `k` is the abscissa of a point of `H_1^*` iff `r_k >= x_1 - (v x_1 - u y_1)`,
    /// and the point is then `(k, q_k + 1)`. The test presumes `H_1^*` is
    /// nonempty, which the count decides first.
    pub fn h_star(&self, side: Side) -> Result<HStarSet> {
        let f = self.frame(side);
        let det = f.det();
        let mut points = Vec::new();
        if det > BigInt::one() {
            self.budget
                .check("residue scan", &(&f.x1 - &f.u).max(BigInt::zero()))?;
            let threshold = &f.x1 - &det;
            if let (Some(x1), Some(y1), Some(u), Some(t)) = (
                to_small(&f.x1),
                to_small(&f.y1),
                to_small(&f.u),
                to_small(&threshold),
            ) {
                for k in u + 1..x1 {
                    let (q, r) = ((k * y1).div_euclid(x1), (k * y1).rem_euclid(x1));
                    if r >= t {
                        points.push(f.point(k.into(), (q + 1).into()));
                    }
                }
                points.sort();
                return Ok(HStarSet { side, points });
            }
            let mut k: BigInt = &f.u + 1;
            while k < f.x1 {
                let (q, r) = (&k * &f.y1).div_mod_floor(&f.x1);
                if r >= threshold {
                    points.push(f.point(k.clone(), q + 1));
                }
                k += 1;
            }
        }
        points.sort();
        Ok(HStarSet { side, points })
    }

    /// AG1 / AG2: no two points of `H_i^*` (equal ones allowed) sum into `H_i^*`.
    pub fn is_ag(&self, side: Side) -> Result<bool> {
        // Coordinates in the basis {b, a_i}, scaled by |det(b, a_i)|.
        let ray = self.ray(side);
        let det = det2(&self.bottom, ray);
        let sign = if det.is_negative() { -1 } else { 1 };
        let d = &det.abs();
        let scaled: Vec<Vec<BigInt>> = self
            .h_star(side)?
            .points
            .iter()
            .map(|p| vec![det2(p, ray) * sign, det2(&self.bottom, p) * sign])
            .collect();
        // Both summands are inside, so only the upper bounds can fail.
        let pairs: Option<Vec<[i64; 2]>> = scaled
            .iter()
            .map(|p| Some([to_small(&p[0])?, to_small(&p[1])?]))
            .collect();
        if let (Some(pairs), Some(d)) = (pairs, to_small(d)) {
            return Ok(!pairs.iter().enumerate().any(|(i, p)| {
                pairs[i..]
                    .iter()
                    .any(|q| p[0] + q[0] < d && p[1] + q[1] < d)
            }));
        }
        for (i, p) in scaled.iter().enumerate() {
            for q in &scaled[i..] {
                if &(&p[0] + &q[0]) < d && &(&p[1] + &q[1]) < d {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The same property through residues: `r_k + r_l < 2 x_1 - (v x_1 - u y_1)`
    /// for all abscissae `k, l` of `H_1^*` with `k + l < x_1`.
    pub fn is_ag_residue(&self, side: Side) -> Result<bool> {
        self.is_ag_residue_with(side, Mutation::None)
    }

    pub fn is_ag_residue_with(&self, side: Side, mutation: Mutation) -> Result<bool> {
        let f = self.frame(side);
        let bound = &f.x1 * 2 - f.det();
        let residues: Vec<(BigInt, BigInt)> = self
            .h_star(side)?
            .points
            .iter()
            .map(|p| {
                let k = f.first(p);
                let r = (&k * &f.y1).mod_floor(&f.x1);
                (k, r)
            })
            .collect();
        let small: Option<Vec<(i64, i64)>> = residues
            .iter()
            .map(|(k, r)| Some((to_small(k)?, to_small(r)?)))
            .collect();
        if let (Some(small), Some(x1), Some(bound)) = (small, to_small(&f.x1), to_small(&bound)) {
            return Ok(residue_sums_ok(&small, &x1, &bound, mutation, |a, b| a + b));
        }
        Ok(residue_sums_ok(
            &residues,
            &f.x1,
            &bound,
            mutation,
            |a, b| a + b,
        ))
    }

    /// The bottom element is Ulrich iff `H` is both AG1 and AG2.
    pub fn is_ulrich_bottom(&self) -> Result<bool> {
        Ok(self.is_ag(Side::One)? && self.is_ag(Side::Two)?)
    }

    /// Whether `x^c` lies in `(x^b R, (x^{a_1} - x^{a_2}) ω_R)`.
    ///
    /// The second summand is spanned by binomials `x^{w+a_1} - x^{w+a_2}`,
    /// `w ∈ ω_H`, so modulo it `x^c` is identified with every `x^{c + t(a_2 - a_1)}`
    /// on the chain `-[c]_2 < t < [c]_1`. The monomial lies in the ideal iff some
    /// member of its chain lies in `b + H`.
    pub fn reaches(&self, b: &IntVector, c: &IntVector) -> bool {
        let (sc, sb) = (self.scaled(c), self.scaled(b));
        if !sc[0].is_positive() || !sc[1].is_positive() {
            return self.model.contains_shifted(b, c);
        }
        self.reaches_scaled(&sb, &sc[0], &sc[1])
    }

    // c + t(a_2 - a_1) - b ∈ H  iff  sb_2 - sc_2 <= t d <= sc_1 - sb_1; those
    // bounds already lie strictly inside the chain of an interior c.
    fn reaches_scaled(&self, sb: &[BigInt; 2], sc0: &BigInt, sc1: &BigInt) -> bool {
        let d = self.model.rays().index();
        let hi = sc0 - &sb[0];
        let lo = &sb[1] - sc1;
        if hi < lo {
            return false;
        }
        hi.div_floor(d) * d >= lo
    }

    // Scaled coordinates in the (a_1, a_2) order.
    fn scaled(&self, z: &IntVector) -> [BigInt; 2] {
        let [p, q]: [BigInt; 2] = self
            .model
            .rays()
            .scaled_unchecked(z)
            .try_into()
            .expect("planar");
        if self.model.rays().rays()[0] == self.a1 {
            [p, q]
        } else {
            [q, p]
        }
    }

    /// Whether `b ∈ ω_H` is an Ulrich element: `m ω_R ⊆ (x^b R, (x^{a_1} - x^{a_2}) ω_R)`,
    /// checked on the generators `x^{p+q}`, `p ∈ B_H`, `q ∈ G(ω_H)`.
    ///
    /// # Errors
    /// `NotInOmega` if `b` is not an interior lattice point.
    pub fn is_ulrich(&self, b: &IntVector) -> Result<UlrichVerdict> {
        if b.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: b.dim(),
            });
        }
        if !self.model.is_interior(b) {
            return Err(Error::NotInOmega(b.clone()));
        }
        let sb = self.scaled(b);
        let (basis, omega) = (&self.basis_scaled, &self.omega_scaled);
        let small = self
            .small
            .as_ref()
            .and_then(|sp| Some((sp, [to_small(&sb[0])?, to_small(&sb[1])?])));
        let violation = match &small {
            Some((sp, sb)) => sp.violation(sb),
            None => basis.iter().enumerate().find_map(|(i, sp)| {
                omega.iter().enumerate().find_map(|(j, sq)| {
                    (!self.reaches_scaled(&sb, &(&sp[0] + &sq[0]), &(&sp[1] + &sq[1])))
                        .then_some((i, j))
                })
            }),
        };
        let certificate = match violation {
            None => UlrichCertificate::AllPairsCovered,
            Some((i, j)) => UlrichCertificate::Violation {
                p: self.model.hilbert_basis()[i].clone(),
                q: self.model.omega_generators()[j].clone(),
            },
        };
        let in_basis = self.model.hilbert_basis().contains(b) && !self.model.is_ray(b);
        let basis_pair_form = in_basis.then(|| match &small {
            Some((sp, sb)) => sp.pair_form(sb),
            None => self.pair_form_scaled(&sb, basis),
        });
        Ok(UlrichVerdict {
            element: b.clone(),
            ulrich: certificate == UlrichCertificate::AllPairsCovered,
            certificate,
            basis_pair_form,
        })
    }

    /// Sums of two basis elements all lie in `(b + H) ∪ (a_1 + H) ∪ (a_2 + H)`.
    pub fn basis_pair_form(&self, b: &IntVector) -> bool {
        self.pair_form_scaled(&self.scaled(b), &self.basis_scaled)
    }

    // In scaled coordinates a_1 = (d, 0) and a_2 = (0, d).
    fn pair_form_scaled(&self, sb: &[BigInt; 2], basis: &[[BigInt; 2]]) -> bool {
        let d = self.model.rays().index();
        basis.iter().enumerate().all(|(i, c1)| {
            basis[i..].iter().all(|c2| {
                let s0 = &c1[0] + &c2[0];
                let s1 = &c1[1] + &c2[1];
                &s0 >= d || &s1 >= d || (s0 >= sb[0] && s1 >= sb[1])
            })
        })
    }

    /// For `(1,1) ∈ ω_H`: `(1,1)` is Ulrich iff `x_1 ≡ 1 mod (x_1 - y_1)` and
    /// `y_2 ≡ 1 mod (y_2 - x_2)`.
    pub fn ulrich_one_one(&self) -> Result<bool> {
        let [x1, y1, x2, y2] = self.params();
        if y1 >= x1 || x2 >= y2 {
            return Err(Error::Inapplicable("(1,1) is not an interior point"));
        }
        let ag1 = (x1 - 1u32).mod_floor(&(x1 - y1)).is_zero();
        let ag2 = (y2 - 1u32).mod_floor(&(y2 - x2)).is_zero();
        Ok(ag1 && ag2)
    }

    /// `H_1^*` for bottom `(1,1)` by the division chain
    /// `x_1 = l_1 (x_1 - y_1) + s_1`, `y_1 + s_{i-1} = l_i (x_1 - y_1) + s_i`;
    /// the points are `(t + Σ_{i<=t} l_i, Σ_{i<=t} l_i)` for `t = 1..n`,
    /// `n = x_1 - y_1 - 1`.
    pub fn h1_star_recursive(&self) -> Result<Vec<IntVector>> {
        if self.bottom != IntVector::from([1, 1]) {
            return Err(Error::Inapplicable("the bottom element is not (1,1)"));
        }
        let [x1, y1, ..] = self.params();
        let step = x1 - y1;
        let n: BigInt = &step - 1;
        if n.is_zero() {
            return Err(Error::Inapplicable("H_1^* is empty"));
        }
        self.budget.check("division chain", &n)?;
        let mut points = Vec::new();
        let (mut l, mut s) = x1.div_mod_floor(&step);
        let mut total = l.clone();
        let mut t = BigInt::one();
        loop {
            points.push(IntVector::new(vec![&t + &total, total.clone()]));
            if t == n {
                break;
            }
            t += 1;
            (l, s) = (y1 + &s).div_mod_floor(&step);
            total += &l;
        }
        points.sort();
        Ok(points)
    }

    pub fn quick_filters(&self) -> QuickFilters {
        let [_, y1, x2, _] = self.params();
        let rs = self.model.rays();
        let ones = IntVector::from([1, 1]);
        let inner: Vec<&IntVector> = self
            .model
            .hilbert_basis()
            .iter()
            .filter(|c| !self.model.is_ray(c))
            .collect();
        let in_p = |z: &IntVector| rs.in_parallelotope(z).expect("planar");
        QuickFilters {
            only_candidate_is_ones: y1.is_positive()
                && x2.is_positive()
                && self.model.is_interior(&ones),
            only_candidate_is_bottom: in_p(&(&self.bottom + &self.bottom)),
            bottom_forced_ulrich: IntVector::new(vec![x2.clone(), y1.clone()])
                .precedes(&self.bottom),
            all_basis_elements_ulrich: inner
                .iter()
                .enumerate()
                .all(|(i, c)| inner[i..].iter().all(|c2| !in_p(&(*c + *c2)))),
        }
    }

    /// Every Ulrich element.
    ///
    /// If `b` is Ulrich then for each generator sum `c = p + q` some member `k`
    /// of the chain of `c` satisfies `k - b ∈ H`, so `b ⪯ k`. The probe is the
    /// generator sum whose chain spans the fewest boxes; candidates are the
    /// interior points below one of its members, each tested exactly.
    pub fn find_ulrich(&self) -> Result<SearchResult> {
        let mut best: Option<(BigInt, IntVector, Vec<IntVector>)> = None;
        for p in self.model.hilbert_basis() {
            for q in self.model.omega_generators() {
                let c = p + q;
                let chain = self.chain(&c)?;
                let volume: BigInt = chain.iter().map(|k| &k[0] * &k[1]).sum();
                let better = match &best {
                    None => true,
                    Some((v, probe, _)) => volume < *v || (volume == *v && c < *probe),
                };
                if better {
                    best = Some((volume, c, chain));
                }
            }
        }
        let (volume, probe, chain) = best.expect("B_H and G(ω_H) are nonempty");
        self.budget.check("Ulrich candidate boxes", &volume)?;
        let mut candidates = BTreeSet::new();
        for k in &chain {
            let (kx, ky) = k.xy();
            let mut x = BigInt::one();
            while &x <= kx {
                let mut y = BigInt::one();
                while &y <= ky {
                    let b = IntVector::new(vec![x.clone(), y.clone()]);
                    if self.model.is_interior(&b) && self.model.contains_shifted(&b, k) {
                        candidates.insert(b);
                    }
                    y += 1;
                }
                x += 1;
            }
        }
        let mut elements = Vec::new();
        for b in candidates {
            if self.is_ulrich(&b)?.ulrich {
                elements.push(b);
            }
        }
        Ok(SearchResult { elements, probe })
    }

    // c + t(a_2 - a_1) for -[c]_2 < t < [c]_1.
    fn chain(&self, c: &IntVector) -> Result<Vec<IntVector>> {
        let d = self.model.rays().index();
        let s = self.scaled(c);
        let lo = (-&s[1]).div_floor(d) + 1;
        let hi = s[0].div_ceil(d) - 1;
        self.budget.check("chain", &(&hi - &lo + 1))?;
        let step = &self.a2 - &self.a1;
        let mut out = Vec::new();
        let mut t = lo;
        while t <= hi {
            out.push(c + &step.scale(&t));
            t += 1;
        }
        Ok(out)
    }
}
