//! Brute-force reference implementations.
//!
//! Nothing here touches the cached inverse of [`RaySystem`](crate::lattice::RaySystem)
//! or the fast planar routines: inputs are converted to `i64`, every
//! membership question is a determinant sign test in `i128`, and every set is
//! found by scanning a box.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::lattice::{Budget, IntVector};
use crate::ulrich::OrientedModel;

fn small(v: &IntVector) -> Result<Vec<i64>> {
    v.to_i64s().ok_or_else(|| Error::OutOfRange(v.to_string()))
}

fn small2(v: &IntVector) -> Result<[i128; 2]> {
    match small(v)?.as_slice() {
        [x, y] => Ok([*x as i128, *y as i128]),
        _ => Err(Error::DimensionMismatch {
            expected: 2,
            found: v.dim(),
        }),
    }
}

fn det2(p: [i128; 2], q: [i128; 2]) -> i128 {
    p[0] * q[1] - p[1] * q[0]
}

fn big(coords: &[i128]) -> IntVector {
    IntVector::new(coords.iter().map(|&c| c.into()).collect())
}

/// Determinant by fraction-free elimination.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let (mut sign, mut prev) = (1, 1);
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Rays as `i128` columns with the Cramer numerators of `z`, sign-normalised
/// so that the denominator is positive. `[z]_i = num_i / den`.
struct Cramer {
    cols: Vec<Vec<i128>>,
    den: i128,
    flip: i128,
}

impl Cramer {
    fn new(rays: &[IntVector]) -> Result<Self> {
        let cols: Vec<Vec<i128>> = rays
            .iter()
            .map(|r| small(r).map(|c| c.into_iter().map(i128::from).collect()))
            .collect::<Result<_>>()?;
        let d = det(Self::matrix(&cols));
        Ok(Cramer {
            cols,
            den: d.abs(),
            flip: d.signum(),
        })
    }

    fn matrix(cols: &[Vec<i128>]) -> Vec<Vec<i128>> {
        let n = cols.len();
        (0..n)
            .map(|r| (0..n).map(|c| cols[c][r]).collect())
            .collect()
    }

    fn numerators(&self, z: &[i128]) -> Vec<i128> {
        (0..self.cols.len())
            .map(|i| {
                let mut cols = self.cols.clone();
                cols[i] = z.to_vec();
                self.flip * det(Self::matrix(&cols))
            })
            .collect()
    }

    fn in_cone(&self, z: &[i128]) -> bool {
        self.numerators(z).iter().all(|&n| n >= 0)
    }

    fn interior(&self, z: &[i128]) -> bool {
        self.numerators(z).iter().all(|&n| n > 0)
    }
}

// Every lattice point of the box [lo, hi], in lexicographic order.
fn box_points(lo: &[i128], hi: &[i128], budget: &Budget) -> Result<Vec<Vec<i128>>> {
    let volume = lo
        .iter()
        .zip(hi)
        .fold(1i128, |acc, (l, h)| acc.saturating_mul((h - l + 1).max(0)));
    budget.check("box scan", &volume.into())?;
    let mut out = Vec::new();
    if volume == 0 {
        return Ok(out);
    }
    let mut cur = lo.to_vec();
    loop {
        out.push(cur.clone());
        let mut i = cur.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
        }
    }
}

fn ray_sum(rays: &[IntVector]) -> Result<Vec<i128>> {
    let mut sum = vec![0i128; rays.len()];
    for r in rays {
        for (s, c) in sum.iter_mut().zip(small(r)?) {
            *s += c as i128;
        }
    }
    Ok(sum)
}

/// Lattice points of the open parallelogram spanned by `bottom` and `ray`,
/// found by scanning `[0, bottom + ray]`.
pub fn h_star_brute(bottom: &IntVector, ray: &IntVector) -> Result<Vec<IntVector>> {
    let (b, r) = (small2(bottom)?, small2(ray)?);
    let mut d = det2(b, r);
    let flip = d.signum();
    d *= flip;
    let mut out = Vec::new();
    for x in 0..=b[0] + r[0] {
        for y in 0..=b[1] + r[1] {
            let p = [x, y];
            // p = s b + t r with s = det(p, r) / d and t = det(b, p) / d.
            let s = flip * det2(p, r);
            let t = flip * det2(b, p);
            if 0 < s && s < d && 0 < t && t < d {
                out.push(big(&p));
            }
        }
    }
    Ok(out)
}

/// Whether every target is a sum of basis elements, exploring only sums that
/// stay below `bound` componentwise.
pub fn closure_generates(
    basis: &[IntVector],
    targets: &[IntVector],
    bound: &IntVector,
) -> Result<bool> {
    let basis: Vec<Vec<i64>> = basis.iter().map(small).collect::<Result<_>>()?;
    let bound = small(bound)?;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    let zero = vec![0; bound.len()];
    seen.insert(zero.clone());
    queue.push_back(zero);
    while let Some(z) = queue.pop_front() {
        for g in &basis {
            let next: Vec<i64> = z.iter().zip(g).map(|(a, b)| a + b).collect();
            if next.iter().zip(&bound).all(|(a, b)| a <= b) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    for t in targets {
        if !seen.contains(&small(t)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Literal pairwise test for `b ∈ B_H \ {a_1, a_2}`: every sum of two basis
/// elements lies in `(b + H) ∪ (a_1 + H) ∪ (a_2 + H)`.
pub fn ulrich_pairwise_brute(om: &OrientedModel, b: &IntVector) -> Result<bool> {
    let (a1, a2) = (small2(om.a1())?, small2(om.a2())?);
    let b = small2(b)?;
    let basis: Vec<[i128; 2]> = om
        .model()
        .hilbert_basis()
        .iter()
        .map(small2)
        .collect::<Result<_>>()?;
    // det(a_1, a_2) > 0, so z ∈ C iff z sits between the rays.
    let in_h = |z: [i128; 2]| det2(a1, z) >= 0 && det2(z, a2) >= 0;
    let sub = |p: [i128; 2], q: [i128; 2]| [p[0] - q[0], p[1] - q[1]];
    for c1 in &basis {
        for c2 in &basis {
            let s = [c1[0] + c2[0], c1[1] + c2[1]];
            if !(in_h(sub(s, b)) || in_h(sub(s, a1)) || in_h(sub(s, a2))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Z^d ∩ P_H` by scanning `[0, Σ a_i]`.
pub fn parallelotope_points_box(rays: &[IntVector], budget: &Budget) -> Result<Vec<IntVector>> {
    let cramer = Cramer::new(rays)?;
    let hi = ray_sum(rays)?;
    let lo = vec![0; hi.len()];
    Ok(box_points(&lo, &hi, budget)?
        .into_iter()
        .filter(|z| {
            cramer
                .numerators(z)
                .iter()
                .all(|&n| 0 <= n && n < cramer.den)
        })
        .map(|z| big(&z))
        .collect())
}

/// `B_H`: the rays together with the nonzero parallelotope points that are
/// not a parallelotope point or ray plus a nonzero element of `H`.
pub fn hilbert_basis_box(rays: &[IntVector], budget: &Budget) -> Result<Vec<IntVector>> {
    let cramer = Cramer::new(rays)?;
    let small_rays: Vec<Vec<i128>> = rays
        .iter()
        .map(|r| small(r).map(|c| c.into_iter().map(i128::from).collect()))
        .collect::<Result<_>>()?;
    let mut candidates: Vec<Vec<i128>> = parallelotope_points_box(rays, budget)?
        .iter()
        .map(|p| small(p).map(|c| c.into_iter().map(i128::from).collect()))
        .collect::<Result<Vec<Vec<i128>>>>()?
        .into_iter()
        .filter(|p| p.iter().any(|&c| c != 0))
        .collect();
    candidates.extend(small_rays.iter().cloned());
    let mut basis: Vec<IntVector> = candidates
        .iter()
        .filter(|c| {
            !candidates.iter().any(|s| {
                let rest: Vec<i128> = c.iter().zip(s).map(|(a, b)| a - b).collect();
                s != *c && rest.iter().any(|&x| x != 0) && cramer.in_cone(&rest)
            })
        })
        .map(|c| big(c))
        .collect();
    basis.sort();
    Ok(basis)
}

/// `G(ω_H)` by scanning `[1, Σ a_i]`: interior points `g` such that `g - c`
/// is not interior for any nonzero `c` in `basis`.
pub fn omega_generators_box(
    rays: &[IntVector],
    basis: &[IntVector],
    budget: &Budget,
) -> Result<Vec<IntVector>> {
    let cramer = Cramer::new(rays)?;
    let basis: Vec<Vec<i128>> = basis
        .iter()
        .map(|r| small(r).map(|c| c.into_iter().map(i128::from).collect()))
        .collect::<Result<_>>()?;
    let hi = ray_sum(rays)?;
    let lo = vec![1; hi.len()];
    Ok(box_points(&lo, &hi, budget)?
        .into_iter()
        .filter(|g| {
            cramer.interior(g)
                && basis.iter().filter(|c| c.iter().any(|&x| x != 0)).all(|c| {
                    let rest: Vec<i128> = g.iter().zip(c).map(|(a, b)| a - b).collect();
                    !cramer.interior(&rest)
                })
        })
        .map(|g| big(&g))
        .collect())
}

/// Whether `z ∈ H`, by Cramer numerators.
pub fn in_cone(rays: &[IntVector], z: &IntVector) -> Result<bool> {
    let cramer = Cramer::new(rays)?;
    let z: Vec<i128> = small(z)?.into_iter().map(i128::from).collect();
    Ok(cramer.in_cone(&z))
}
