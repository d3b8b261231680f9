use criterion::{black_box, criterion_group, criterion_main, Criterion};

use lightcone_core::*;

fn bench_reconstruct(c: &mut Criterion) {
    let entry = example_trig(2.0, 1.0, 1, 2).unwrap();
    let opts = ReconstructOptions::default();
    c.bench_function("reconstruct trig 2001 nodes", |b| {
        b.iter(|| {
            let path = reconstruct(&entry.quintuple, &entry.initial, 2001, &opts).unwrap();
            black_box(path.delta4_drift())
        })
    });
}

fn bench_extract(c: &mut Criterion) {
    let entry = example_trig(2.0, 1.0, 1, 2).unwrap();
    let path = reconstruct(&entry.quintuple, &entry.initial, 2001, &Default::default()).unwrap();
    c.bench_function("extract curvature 2001 nodes", |b| {
        b.iter(|| {
            let q = extract_curvature(black_box(&path)).unwrap();
            black_box(q.k1.eval(1.0).unwrap())
        })
    });
}

fn bench_mate(c: &mut Criterion) {
    let entry = example_trig(2.0, 1.0, 1, 2).unwrap();
    let q = &entry.quintuple;
    let path = reconstruct(q, &entry.initial, 2001, &Default::default()).unwrap();
    let iv = entry.interval();
    let one = ScalarField::constant(1.0, iv);
    let lambda = solve_lambda(q, MateKind::LpLp, Some(&one), 2001).unwrap();
    let spec = MateSpec::new(MateKind::LpLp, lambda, Some(one), SignBranch::Plus).unwrap();
    c.bench_function("construct LpLp mate 2001 nodes", |b| {
        b.iter(|| {
            let mate = construct_mate(black_box(&path), q, &spec).unwrap();
            black_box(mate.delta4_drift())
        })
    });
    c.bench_function("verify LpLp mate 2001 nodes", |b| {
        b.iter(|| {
            let report = verify_mate(black_box(&path), q, &spec).unwrap();
            black_box(report.pass)
        })
    });
}

fn bench_expr(c: &mut Criterion) {
    let iv = Interval::new(0.0, std::f64::consts::TAU).unwrap();
    c.bench_function("parse coefficient expression", |b| {
        b.iter(|| black_box(ScalarField::parse("((p+q)/2)*sin(m*t)", iv).unwrap()))
    });
    let f = ScalarField::parse("((p+q)/2)*sin(m*t)", iv)
        .unwrap()
        .with_param("p", 2.0)
        .with_param("q", 1.0)
        .with_param("m", 2.0);
    c.bench_function("evaluate coefficient expression", |b| {
        b.iter(|| black_box(f.eval(black_box(1.234)).unwrap()))
    });
}

criterion_group!(benches, bench_reconstruct, bench_extract, bench_mate, bench_expr);
criterion_main!(benches);
