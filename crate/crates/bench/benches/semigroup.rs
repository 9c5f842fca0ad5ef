use criterion::{black_box, criterion_group, criterion_main, Criterion};
use ulrich_core::{
    is_nearly_gorenstein, oracle_diff, Budget, IntVector, Mutation, OrientedModel, SemigroupModel,
    Side,
};

fn rays(rs: &[&[i64]]) -> Vec<IntVector> {
    rs.iter().map(|r| IntVector::from(*r)).collect()
}

fn build(c: &mut Criterion) {
    let budget = Budget::default();
    let mut g = c.benchmark_group("build");
    for (name, rs) in [
        ("plane det 4", rays(&[&[11, 2], &[31, 6]])),
        ("plane det 1201", rays(&[&[40, 1], &[1, 30]])),
        ("space det 91", rays(&[&[5, 3, 1], &[1, 5, 2], &[8, 3, 5]])),
    ] {
        g.bench_function(name, |b| {
            b.iter(|| SemigroupModel::build(black_box(rs.clone()), &budget).unwrap())
        });
    }
    g.finish();
}

fn plane(c: &mut Criterion) {
    let budget = Budget::default();
    let om = OrientedModel::build(rays(&[&[37, 11], &[3, 29]]), budget).unwrap();
    let mut g = c.benchmark_group("plane");
    g.bench_function("h_star", |b| {
        b.iter(|| om.h_star(black_box(Side::One)).unwrap())
    });
    g.bench_function("is_ag residues", |b| {
        b.iter(|| om.is_ag_residue(black_box(Side::One)).unwrap())
    });
    g.bench_function("is_ulrich bottom", |b| {
        b.iter(|| om.is_ulrich(black_box(om.bottom())).unwrap())
    });
    g.bench_function("find_ulrich", |b| b.iter(|| om.find_ulrich().unwrap()));
    g.finish();
}

fn trace(c: &mut Criterion) {
    let budget = Budget::default();
    let m = SemigroupModel::build(rays(&[&[5, 3, 1], &[1, 5, 2], &[8, 3, 5]]), &budget).unwrap();
    c.bench_function("nearly gorenstein space", |b| {
        b.iter(|| is_nearly_gorenstein(black_box(&m), &budget).unwrap())
    });
}

fn sweep(c: &mut Criterion) {
    let budget = Budget::default();
    let mut g = c.benchmark_group("sweep");
    g.sample_size(10);
    g.bench_function("oracle_diff 10", |b| {
        b.iter(|| oracle_diff(black_box(10), Mutation::None, &budget).unwrap())
    });
    g.finish();
}

criterion_group!(benches, build, plane, trace, sweep);
criterion_main!(benches);
