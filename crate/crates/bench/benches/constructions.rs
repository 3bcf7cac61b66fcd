use criterion::{criterion_group, criterion_main, Criterion};
use superschur::algebras::sergeev;
use superschur::centralizer::{double_centralizer, schur_i_commutant, schur_ii_commutant};
use superschur::duality::gamma_sym_pairing;
use superschur::super_linear::make_space;
use superschur::sym_action::gamma_invariants;
use superschur::Field;

fn divided_powers(c: &mut Criterion) {
    let f = Field::gf(3);
    c.bench_function("gamma_invariants (2|2), d=3", |b| {
        b.iter(|| gamma_invariants(&make_space(f, 2, 2), 3).unwrap())
    });
    c.bench_function("gamma_sym_pairing (2|2), d=3", |b| {
        b.iter(|| gamma_sym_pairing(&make_space(f, 2, 2), 3).unwrap())
    });
}

fn schur_algebras(c: &mut Criterion) {
    let q = Field::rationals();
    let mut g = c.benchmark_group("commutants");
    g.sample_size(10);
    g.bench_function("S(1|1,3)", |b| {
        b.iter(|| schur_i_commutant(1, 1, 3, q).unwrap())
    });
    g.bench_function("Q(2,2)", |b| {
        b.iter(|| schur_ii_commutant(2, 2, q).unwrap())
    });
    g.bench_function("W(3) table", |b| b.iter(|| sergeev(3, q).unwrap()));
    g.bench_function("double centralizer (2,2)", |b| {
        b.iter(|| double_centralizer(2, 2, q).unwrap())
    });
    g.finish();
}

criterion_group!(benches, divided_powers, schur_algebras);
criterion_main!(benches);
