use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cubiccm::{binforms, hecke, lattices, levelgroups, quadfield::QuadField};
use cubiccm_bench::BENCH_DISCRIMINANTS;

fn bench_lattices(c: &mut Criterion) {
    let l = lattices::l_lattice();
    c.bench_function("invariants(L)", |b| {
        b.iter(|| lattices::invariants(black_box(&l)).unwrap())
    });
    let l0 = lattices::make_standard("L0", None).unwrap();
    let v = l0.distinguished.clone().unwrap();
    c.bench_function("complement of v in L0", |b| {
        b.iter(|| lattices::orthogonal_complement(black_box(&l0.gram), black_box(&v)).unwrap())
    });
}

fn bench_forms(c: &mut Criterion) {
    c.bench_function("class_list 1..400", |b| {
        b.iter(|| {
            (1..=400u64)
                .map(|d| binforms::class_list(black_box(d)).len())
                .sum::<usize>()
        })
    });
}

fn bench_qexpansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("qexpansion B=500");
    for d in BENCH_DISCRIMINANTS {
        let spec = hecke::canonical_character(&QuadField::from_discriminant(d).unwrap()).unwrap();
        group.bench_function(format!("D={d}"), |b| {
            b.iter(|| hecke::qexpansion(black_box(&spec), 500).unwrap())
        });
    }
    group.finish();
}

fn bench_levels(c: &mut Criterion) {
    let g = lattices::GramMatrix::diagonal(&[1, 1, 1]).unwrap();
    c.bench_function("brute SO_3(F_5)", |b| {
        b.iter(|| levelgroups::brute_force_order(black_box(&g), 5, None).unwrap())
    });
}

criterion_group!(
    benches,
    bench_lattices,
    bench_forms,
    bench_qexpansion,
    bench_levels
);
criterion_main!(benches);
