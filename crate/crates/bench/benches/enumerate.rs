use criterion::{criterion_group, criterion_main, Criterion};

use taumute::cluster::{enumerate_seeds, ExchangeQuiver};
use taumute::models::{cyclic_nakayama, kq_mod_ba, linear_an, preprojective, DynkinType};
use taumute::silt2::check_silting_bijection;
use taumute::taut::{enumerate, TauTilting};

fn posets(c: &mut Criterion) {
    let cases = [
        ("kq_mod_ba", kq_mod_ba().unwrap()),
        ("linear_a4", linear_an(4).unwrap()),
        ("cyclic_3_3", cyclic_nakayama(3, 3).unwrap()),
        ("preproj_a3", preprojective(DynkinType::A(3)).unwrap()),
    ];
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for (name, alg) in &cases {
        // a fresh TauTilting each time so registry caches start empty
        g.bench_function(*name, |b| b.iter(|| enumerate(&TauTilting::new(alg), 10_000).unwrap().len()));
    }
    g.finish();
}

fn silting(c: &mut Criterion) {
    let tt = TauTilting::new(&cyclic_nakayama(3, 3).unwrap());
    let poset = enumerate(&tt, 10_000).unwrap();
    c.bench_function("silting_bijection_cyclic_3_3", |b| b.iter(|| check_silting_bijection(&tt, &poset).unwrap()));
}

fn clusters(c: &mut Criterion) {
    let q = ExchangeQuiver::from_arrows(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let mut g = c.benchmark_group("clusters");
    g.sample_size(10);
    g.bench_function("a4_seeds", |b| b.iter(|| enumerate_seeds(&q, 1000).unwrap().seeds.len()));
    g.finish();
}

criterion_group!(benches, posets, silting, clusters);
criterion_main!(benches);
