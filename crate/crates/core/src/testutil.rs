//! Proptest strategies shared by the unit tests.

use num_integer::Integer;
use proptest::prelude::*;

use crate::lattice::IntVector;

fn primitive(v: &[i64]) -> bool {
    v.iter().fold(0i64, |g, &c| g.gcd(&c)) == 1
}

fn det2(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Primitive `a_1, a_2` with entries in `0..=max` and `det(a_1, a_2) > 0`.
pub fn plane_rays(max: i64) -> impl Strategy<Value = ([i64; 2], [i64; 2])> {
    let ray = [0..=max, 0..=max].prop_filter("primitive", |r| primitive(r));
    (ray.clone(), ray)
        .prop_filter("independent", |(a, b)| det2(*a, *b) != 0)
        .prop_map(|(a, b)| if det2(a, b) > 0 { (a, b) } else { (b, a) })
}

/// Three primitive independent rays with entries in `0..=max`.
pub fn space_rays(max: i64) -> impl Strategy<Value = Vec<IntVector>> {
    let ray = [0..=max, 0..=max, 0..=max].prop_filter("primitive", |r| primitive(r));
    [ray.clone(), ray.clone(), ray]
        .prop_filter("independent", |[a, b, c]| {
            let det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]);
            det != 0
        })
        .prop_map(|rays| rays.iter().map(|r| IntVector::from(*r)).collect())
}

pub fn plane(a: [i64; 2], b: [i64; 2]) -> Vec<IntVector> {
    vec![IntVector::from(a), IntVector::from(b)]
}
