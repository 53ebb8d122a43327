//! Benchmarks comparing the data-parallel corpus checks against their
//! sequential baselines, plus end-to-end suite timings.
//!
//! With the default `parallel` feature the `parallel/*` benchmarks run on
//! the rayon pool and the `sequential/*` ones on a plain iterator; built
//! with `--no-default-features` both run sequentially, which makes the
//! fallback cost directly visible.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use modrep::config::Config;
use modrep::corpus::corpus_pair;
use modrep::field::Field;
use modrep::hom::{ext1_dim, hom_dim};
use modrep::module::Module;
use modrep::suite::run_suite;
use modrep::{groups, par};

fn pair_tasks(cfg: &Config) -> Vec<(Module, Module)> {
    let g = groups::s4();
    let n = groups::a4();
    let field = Field::new(2, 2, None).unwrap();
    let corpus = corpus_pair(&g, &n, &field, 3, 32, cfg).unwrap();
    let mods: Vec<&Module> = corpus
        .g_modules
        .iter()
        .filter(|m| (1..=3).contains(&m.dim()))
        .collect();
    let mut tasks = Vec::new();
    for x in &mods {
        for y in &mods {
            tasks.push(((*x).clone(), (*y).clone()));
        }
    }
    tasks.truncate(64);
    tasks
}

fn bench_pairwise_hom(c: &mut Criterion) {
    let cfg = Config::default();
    let tasks = pair_tasks(&cfg);
    let mut group = c.benchmark_group("pairwise-hom");
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let dims = par::map(&tasks, |(x, y)| hom_dim(x, y).unwrap());
            dims.iter().sum::<usize>()
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let dims = par::map_seq(&tasks, |(x, y)| hom_dim(x, y).unwrap());
            dims.iter().sum::<usize>()
        })
    });
    group.finish();
}

fn bench_pairwise_ext(c: &mut Criterion) {
    let cfg = Config::default();
    let mut tasks = pair_tasks(&cfg);
    tasks.truncate(12);
    let mut group = c.benchmark_group("pairwise-ext");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter_batched(
            || tasks.clone(),
            |t| {
                let dims = par::map(&t, |(x, y)| ext1_dim(x, y).unwrap());
                dims.iter().sum::<usize>()
            },
            BatchSize::SmallInput,
        )
    });
    group.bench_function("sequential", |b| {
        b.iter_batched(
            || tasks.clone(),
            |t| {
                let dims = par::map_seq(&t, |(x, y)| ext1_dim(x, y).unwrap());
                dims.iter().sum::<usize>()
            },
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

fn bench_suites(c: &mut Criterion) {
    let cfg = Config::default();
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    group.bench_function("s4a4", |b| {
        b.iter(|| run_suite("s4a4", &cfg).unwrap().passed())
    });
    group.bench_function("appendix", |b| {
        b.iter(|| run_suite("appendix", &cfg).unwrap().passed())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_pairwise_hom,
    bench_pairwise_ext,
    bench_suites
);
criterion_main!(benches);
