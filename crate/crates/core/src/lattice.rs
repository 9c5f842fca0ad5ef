//! Exact integer linear algebra over a simplicial ray basis.
//!
//! A [`RaySystem`] caches `|det| * A^{-1}` for the matrix `A` whose columns are
//! the rays, so barycentric coordinates of a lattice point come out as integer
//! numerators over the common denominator `|det|`. Every sign and bound test
//! in the crate is made on those numerators.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Index, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, RayDefect, Result};

/// A point of `Z^d`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// Componentwise order `self ⪯ other`.
    pub fn precedes(&self, other: &IntVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &IntVector) -> IntVector {
        IntVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|c| c * k).collect())
    }

    /// Gcd of the coordinates, zero for the zero vector.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    /// The two coordinates of a planar vector.
    pub(crate) fn xy(&self) -> (&BigInt, &BigInt) {
        (&self.0[0], &self.0[1])
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [BigInt] {
        &mut self.0
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(coords: [i64; N]) -> Self {
        IntVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl From<&[i64]> for IntVector {
    fn from(coords: &[i64]) -> Self {
        IntVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;

    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;

    fn add(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;

    fn sub(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses `x,y,...`, optionally wrapped in parentheses or brackets.
impl FromStr for IntVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let coords = inner
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("not an integer vector: {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntVector(coords))
    }
}

// Coordinates travel as JSON numbers of any size, written in decimal.
impl Serialize for IntVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let numbers = self
            .0
            .iter()
            .map(|c| serde_json::Number::from_str(&c.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::ser::Error::custom)?;
        numbers.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let numbers = Vec::<serde_json::Number>::deserialize(deserializer)?;
        numbers
            .iter()
            .map(|n| {
                let text = n.to_string();
                text.parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("expected an integer, found {text}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntVector)
    }
}

/// Divides `v` by the gcd of its coordinates.
pub fn make_primitive(v: &IntVector) -> Result<IntVector> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(IntVector(v.0.iter().map(|c| c / &g).collect()))
}

/// Coordinates `[z]_1, ..., [z]_d` of a point in the ray basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Barycentric(Vec<BigRational>);

impl Barycentric {
    pub fn values(&self) -> &[BigRational] {
        &self.0
    }

    pub fn sum(&self) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |acc, v| acc + v)
    }
}

impl Index<usize> for Barycentric {
    type Output = BigRational;

    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConePosition {
    Interior,
    Boundary,
    Outside,
}

/// Cap on the number of lattice points an enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_points: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_points: 1_000_000,
        }
    }
}

impl Budget {
    pub fn new(max_points: u64) -> Self {
        Budget { max_points }
    }

    pub(crate) fn check(&self, what: &'static str, needed: &BigInt) -> Result<()> {
        if *needed > BigInt::from(self.max_points) {
            return Err(Error::LimitExceeded {
                what,
                needed: needed.to_string(),
                budget: self.max_points,
            });
        }
        Ok(())
    }
}

/// A lattice point of the fundamental parallelotope together with its scaled
/// barycentric coordinates `|det| * [z]_i`, each in `[0, |det|)`.
#[derive(Clone, Debug)]
pub(crate) struct Cell {
    pub point: IntVector,
    pub scaled: Vec<BigInt>,
}

/// `d` primitive, linearly independent rays in `N^d`.
#[derive(Clone, Debug)]
pub struct RaySystem {
    rays: Vec<IntVector>,
    det: BigInt,
    index: BigInt,
    // Row i dotted with z gives |det| * [z]_i.
    inverse: Vec<Vec<BigInt>>,
}

impl RaySystem {
    pub fn new(rays: Vec<IntVector>) -> Result<Self> {
        let dim = rays.first().map_or(0, IntVector::dim);
        if dim < 2 || rays.len() != dim {
            return Err(Error::InvalidRays(RayDefect::WrongCount {
                rays: rays.len(),
                dim,
            }));
        }
        for (index, ray) in rays.iter().enumerate() {
            if ray.dim() != dim {
                return Err(Error::InvalidRays(RayDefect::RaggedDimension {
                    index,
                    len: ray.dim(),
                    dim,
                }));
            }
            if !ray.is_nonnegative() {
                return Err(Error::InvalidRays(RayDefect::Negative { index }));
            }
            if !ray.content().is_one() {
                return Err(Error::InvalidRays(RayDefect::NotPrimitive { index }));
            }
        }
        Self::from_independent(rays)
    }

    /// Skips the primitivity and sign checks; used for auxiliary bases such as
    /// `{bottom, a_i}` in the plane.
    pub(crate) fn from_independent(rays: Vec<IntVector>) -> Result<Self> {
        let dim = rays.len();
        let matrix: Vec<Vec<BigInt>> = (0..dim)
            .map(|r| rays.iter().map(|ray| ray[r].clone()).collect())
            .collect();
        let det = determinant(matrix.clone());
        if det.is_zero() {
            return Err(Error::InvalidRays(RayDefect::Dependent));
        }
        let sign = if det.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        // adj[i][j] = (-1)^(i+j) * minor(j, i)
        let inverse = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let minor: Vec<Vec<BigInt>> = (0..dim)
                            .filter(|&r| r != j)
                            .map(|r| {
                                (0..dim)
                                    .filter(|&c| c != i)
                                    .map(|c| matrix[r][c].clone())
                                    .collect()
                            })
                            .collect();
                        let cofactor = determinant(minor);
                        if (i + j) % 2 == 0 {
                            &sign * cofactor
                        } else {
                            -(&sign * cofactor)
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(RaySystem {
            index: det.abs(),
            rays,
            det,
            inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    /// Determinant of the matrix with the rays as columns, in input order.
    pub fn det(&self) -> &BigInt {
        &self.det
    }

    /// `|det|`, the index of the ray lattice in `Z^d`.
    pub fn index(&self) -> &BigInt {
        &self.index
    }

    fn check_dim(&self, z: &IntVector) -> Result<()> {
        if z.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: z.dim(),
            });
        }
        Ok(())
    }

    /// `|det| * [z]_i` for every `i`.
    pub fn scaled_coords(&self, z: &IntVector) -> Result<Vec<BigInt>> {
        self.check_dim(z)?;
        Ok(self.scaled_unchecked(z))
    }

    pub(crate) fn scaled_unchecked(&self, z: &IntVector) -> Vec<BigInt> {
        self.inverse
            .iter()
            .map(|row| row.iter().zip(z.coords()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn barycentric(&self, z: &IntVector) -> Result<Barycentric> {
        let scaled = self.scaled_coords(z)?;
        Ok(Barycentric(
            scaled
                .into_iter()
                .map(|n| BigRational::new(n, self.index.clone()))
                .collect(),
        ))
    }

    pub fn cone_position(&self, z: &IntVector) -> Result<ConePosition> {
        self.check_dim(z)?;
        Ok(self.position_unchecked(z))
    }

    pub(crate) fn position_unchecked(&self, z: &IntVector) -> ConePosition {
        let mut on_face = false;
        for row in &self.inverse {
            let s: BigInt = row.iter().zip(z.coords()).map(|(a, b)| a * b).sum();
            if s.is_negative() {
                return ConePosition::Outside;
            }
            on_face |= s.is_zero();
        }
        if on_face {
            ConePosition::Boundary
        } else {
            ConePosition::Interior
        }
    }

    pub(crate) fn in_cone_unchecked(&self, z: &IntVector) -> bool {
        self.inverse.iter().all(|row| {
            let s: BigInt = row.iter().zip(z.coords()).map(|(a, b)| a * b).sum();
            !s.is_negative()
        })
    }

    pub(crate) fn in_interior_unchecked(&self, z: &IntVector) -> bool {
        self.inverse.iter().all(|row| {
            let s: BigInt = row.iter().zip(z.coords()).map(|(a, b)| a * b).sum();
            s.is_positive()
        })
    }

    /// `0 <= [z]_i < 1` for all `i`.
    pub fn in_parallelotope(&self, z: &IntVector) -> Result<bool> {
        Ok(self
            .scaled_coords(z)?
            .iter()
            .all(|s| !s.is_negative() && *s < self.index))
    }

    /// `Z^d ∩ P_H`, sorted lexicographically. Always contains the origin and
    /// has exactly `|det|` elements.
    pub fn parallelotope_points(&self, budget: &Budget) -> Result<Vec<IntVector>> {
        let mut points: Vec<IntVector> = self
            .parallelotope_cells(budget)?
            .into_iter()
            .map(|cell| cell.point)
            .collect();
        points.sort();
        Ok(points)
    }

    /// Breadth-first walk of `Z^d / A Z^d` from the origin along the unit
    /// vectors, reducing every step back into the half-open parallelotope.
    /// Visits each of the `|det|` cosets exactly once.
    pub(crate) fn parallelotope_cells(&self, budget: &Budget) -> Result<Vec<Cell>> {
        budget.check("parallelotope enumeration", &self.index)?;
        let dim = self.dim();
        let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
        seen.insert(vec![BigInt::zero(); dim]);
        let mut cells = vec![Cell {
            point: IntVector::zero(dim),
            scaled: vec![BigInt::zero(); dim],
        }];
        let mut head = 0;
        while head < cells.len() {
            for j in 0..dim {
                let from = &cells[head];
                let mut point = from.point.clone();
                point.0[j] += 1;
                let mut scaled = Vec::with_capacity(dim);
                for (i, row) in self.inverse.iter().enumerate() {
                    let (q, r) = (&from.scaled[i] + &row[j]).div_mod_floor(&self.index);
                    if !q.is_zero() {
                        for (p, a) in point.0.iter_mut().zip(self.rays[i].coords()) {
                            *p -= &q * a;
                        }
                    }
                    scaled.push(r);
                }
                if seen.insert(scaled.clone()) {
                    cells.push(Cell { point, scaled });
                }
            }
            head += 1;
        }
        Ok(cells)
    }

    /// `Σ_i a_i`.
    pub fn ray_sum(&self) -> IntVector {
        self.rays
            .iter()
            .fold(IntVector::zero(self.dim()), |acc, r| &acc + r)
    }
}

/// Planar determinant `det(p, q) = p_x q_y - p_y q_x`.
pub(crate) fn det2(p: &IntVector, q: &IntVector) -> BigInt {
    &p[0] * &q[1] - &p[1] * &q[0]
}

/// Fraction-free (Bareiss) elimination.
fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v<const N: usize>(c: [i64; N]) -> IntVector {
        IntVector::from(c)
    }

    fn rs(rays: &[&[i64]]) -> RaySystem {
        RaySystem::new(rays.iter().map(|r| IntVector::from(*r)).collect()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn primitive_forms() {
        assert_eq!(make_primitive(&v([4, 6])).unwrap(), v([2, 3]));
        assert_eq!(make_primitive(&v([11, 2])).unwrap(), v([11, 2]));
        assert_eq!(make_primitive(&v([0, 0, 5])).unwrap(), v([0, 0, 1]));
        assert!(matches!(make_primitive(&v([0, 0])), Err(Error::ZeroVector)));
    }

    #[test]
    fn barycentric_examples() {
        let plane = rs(&[&[11, 2], &[31, 6]]);
        let b = plane.barycentric(&v([16, 3])).unwrap();
        assert_eq!(b.values(), &[q(3, 4), q(1, 4)]);

        let space = rs(&[&[11, 13, 0], &[3, 4, 0], &[0, 0, 1]]);
        let b = space.barycentric(&v([4, 5, 0])).unwrap();
        assert_eq!(b.values(), &[q(1, 5), q(3, 5), q(0, 1)]);
        assert_eq!(b.sum(), q(4, 5));

        let ray = space.barycentric(&v([11, 13, 0])).unwrap();
        assert_eq!(ray.values(), &[q(1, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn positions() {
        let plane = rs(&[&[11, 2], &[31, 6]]);
        assert_eq!(
            plane.cone_position(&v([16, 3])).unwrap(),
            ConePosition::Interior
        );
        assert_eq!(
            plane.cone_position(&v([31, 6])).unwrap(),
            ConePosition::Boundary
        );
        let other = rs(&[&[5, 2], &[2, 5]]);
        assert_eq!(
            other.cone_position(&v([1, 0])).unwrap(),
            ConePosition::Outside
        );
        assert!(matches!(
            other.cone_position(&v([1, 0, 0])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn parallelotope_membership() {
        let plane = rs(&[&[11, 2], &[31, 6]]);
        assert!(plane.in_parallelotope(&v([21, 4])).unwrap());
        assert!(!plane.in_parallelotope(&v([11, 2])).unwrap());
        assert!(plane.in_parallelotope(&v([0, 0])).unwrap());
    }

    #[test]
    fn parallelotope_enumeration() {
        let plane = rs(&[&[11, 2], &[31, 6]]);
        let pts = plane.parallelotope_points(&Budget::default()).unwrap();
        assert_eq!(pts, vec![v([0, 0]), v([16, 3]), v([21, 4]), v([26, 5])]);

        let unit = rs(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            unit.parallelotope_points(&Budget::default()).unwrap(),
            vec![v([0, 0])]
        );

        let space = rs(&[&[5, 3, 1], &[1, 5, 2], &[8, 3, 5]]);
        assert_eq!(space.index(), &BigInt::from(91));
        let pts = space.parallelotope_points(&Budget::default()).unwrap();
        assert_eq!(pts.len(), 91);
        assert!(pts.iter().all(|p| space.in_parallelotope(p).unwrap()));
    }

    #[test]
    fn budget_is_enforced() {
        let space = rs(&[&[5, 3, 1], &[1, 5, 2], &[8, 3, 5]]);
        let err = space.parallelotope_points(&Budget::new(90)).unwrap_err();
        assert!(matches!(err, Error::LimitExceeded { budget: 90, .. }));
    }

    #[test]
    fn rejects_bad_rays() {
        let bad = |rays: Vec<IntVector>| RaySystem::new(rays).unwrap_err();
        assert!(matches!(
            bad(vec![v([4, 6]), v([1, 0])]),
            Error::InvalidRays(RayDefect::NotPrimitive { index: 0 })
        ));
        assert!(matches!(
            bad(vec![v([1, -1]), v([1, 0])]),
            Error::InvalidRays(RayDefect::Negative { index: 0 })
        ));
        assert!(matches!(
            bad(vec![v([1, 2]), v([1, 2])]),
            Error::InvalidRays(RayDefect::Dependent)
        ));
        assert!(matches!(
            bad(vec![v([1])]),
            Error::InvalidRays(RayDefect::WrongCount { .. })
        ));
        assert!(matches!(
            bad(vec![v([1, 0]), v([0, 1]), v([1, 1])]),
            Error::InvalidRays(RayDefect::WrongCount { .. })
        ));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = |rows: [[i64; 3]; 3]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| x.into()).collect())
                .collect()
        };
        assert_eq!(
            determinant(m([[5, 1, 8], [3, 5, 3], [1, 2, 5]])),
            BigInt::from(91)
        );
        assert_eq!(
            determinant(m([[0, 1, 0], [1, 0, 0], [0, 0, 1]])),
            BigInt::from(-1)
        );
        assert_eq!(
            determinant(m([[1, 2, 3], [2, 4, 6], [0, 0, 1]])),
            BigInt::zero()
        );
    }

    #[test]
    fn vector_text_round_trip() {
        let p: IntVector = "(16, 3)".parse().unwrap();
        assert_eq!(p, v([16, 3]));
        assert_eq!(p.to_string(), "(16, 3)");
        assert!("1,x".parse::<IntVector>().is_err());
    }

    #[test]
    fn json_keeps_large_integers() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = IntVector::new(vec![big.clone(), BigInt::from(-3)]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, "[123456789012345678901234567890,-3]");
        let back: IntVector = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<IntVector>("[1.5, 2]").is_err());
    }
}

#[cfg(test)]
mod properties {
    use num_traits::One;
    use proptest::prelude::*;

    use super::*;
    use crate::oracle;
    use crate::testutil::{plane, plane_rays, space_rays};

    fn floors(rs: &RaySystem, z: &IntVector) -> Vec<BigInt> {
        rs.barycentric(z)
            .unwrap()
            .values()
            .iter()
            .map(|l| l.floor().to_integer())
            .collect()
    }

    fn combination(rs: &RaySystem, coeffs: &[BigInt]) -> IntVector {
        rs.rays()
            .iter()
            .zip(coeffs)
            .fold(IntVector::zero(rs.dim()), |acc, (a, n)| &acc + &a.scale(n))
    }

    fn check_point(rs: &RaySystem, z: &IntVector) -> std::result::Result<(), TestCaseError> {
        let lambda = rs.barycentric(z).unwrap();
        for j in 0..rs.dim() {
            let sum: BigRational = rs
                .rays()
                .iter()
                .zip(lambda.values())
                .map(|(a, l)| l * BigRational::from_integer(a[j].clone()))
                .sum();
            prop_assert_eq!(sum, BigRational::from_integer(z[j].clone()));
        }

        let fl = floors(rs, z);
        if rs.cone_position(z).unwrap() == ConePosition::Interior {
            let rest = z - &combination(rs, &fl);
            prop_assert!(rs.in_parallelotope(&rest).unwrap());
        }

        let above: Vec<BigInt> = fl.iter().map(|f| f + 1).collect();
        let w = &combination(rs, &above) - z;
        prop_assert_eq!(rs.cone_position(&w).unwrap(), ConePosition::Interior);
        prop_assert!(rs
            .barycentric(&w)
            .unwrap()
            .values()
            .iter()
            .all(|l| *l <= BigRational::one()));
        Ok(())
    }

    proptest! {
        #[test]
        fn plane_coordinates((a, b) in plane_rays(30), z in [-60i64..=60, -60..=60]) {
            let rs = RaySystem::new(plane(a, b)).unwrap();
            check_point(&rs, &IntVector::from(z))?;
        }

        #[test]
        fn space_coordinates(rays in space_rays(6), z in [-20i64..=20, -20..=20, -20..=20]) {
            let rs = RaySystem::new(rays).unwrap();
            check_point(&rs, &IntVector::from(z))?;
        }

        #[test]
        fn space_parallelotope_matches_box_scan(rays in space_rays(5)) {
            let rs = RaySystem::new(rays.clone()).unwrap();
            let budget = Budget::default();
            let points = rs.parallelotope_points(&budget).unwrap();
            prop_assert_eq!(BigInt::from(points.len()), rs.index().clone());
            prop_assert_eq!(points, oracle::parallelotope_points_box(&rays, &budget).unwrap());
        }
    }

    #[test]
    fn plane_parallelotopes_have_det_points() {
        let budget = Budget::default();
        for (a, b) in crate::survey::grid(15, &budget).unwrap() {
            let rs = RaySystem::new(plane(a, b)).unwrap();
            let points = rs.parallelotope_points(&budget).unwrap();
            assert_eq!(BigInt::from(points.len()), *rs.index(), "{a:?} {b:?}");
            assert_eq!(
                points,
                oracle::parallelotope_points_box(rs.rays(), &budget).unwrap()
            );
        }
    }
}
