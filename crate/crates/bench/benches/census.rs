use criterion::{black_box, criterion_group, criterion_main, Criterion};
use subcount::census::{hall_t_table, r_nu_closed, r_nu_recursive_table};
use subcount::oracle::{oracle_count_classes, oracle_count_subgroups};
use subcount::{census_table, GroupKind};

fn formulas(c: &mut Criterion) {
    c.bench_function("hall_t F3 m<=30", |b| b.iter(|| hall_t_table(black_box(30), 3)));
    c.bench_function("r_nu recursive nu=4 m<=30", |b| {
        b.iter(|| r_nu_recursive_table(black_box(30), 4))
    });
    c.bench_function("r_nu closed nu=2 m=12", |b| b.iter(|| r_nu_closed(black_box(12), 2)));
    let lambda3: GroupKind = "nonorient:3".parse().unwrap();
    c.bench_function("census_table nonorient:3 n<=30", |b| {
        b.iter(|| census_table(black_box(lambda3), 30))
    });
}

fn oracle(c: &mut Criterion) {
    let f2: GroupKind = "free:2".parse().unwrap();
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("subgroups F2 n=6", |b| b.iter(|| oracle_count_subgroups(f2, 6)));
    group.bench_function("classes F2 n=6", |b| b.iter(|| oracle_count_classes(f2, 6)));
    group.finish();
}

criterion_group!(benches, formulas, oracle);
criterion_main!(benches);
