//! Benchmarks for the two performance-sensitive layers: the per-matchup
//! tally (merge walk vs the quadratic reference) and the whole-space scans
//! (thread-pool sizes vs the sequential build).
//!
//! Run `cargo bench` for the default parallel build; run
//! `cargo bench --no-default-features` to measure the sequential fallback —
//! the scan benchmarks are named so the two runs line up in reports.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use dicelab_core::dice::Die;
use dicelab_core::{
    build_beats_digraph, find_pure_nash, rank_one_step_dice, tally, tally_reference,
    verify_standard_neutrality,
};

/// A valid nonstandard die: the standard die with weight shifted from the
/// top quarter of faces onto the bottom quarter.
fn scrambled(n: u32) -> Die {
    let mut die = Die::standard(n).unwrap();
    for i in 0..(n as usize) / 4 {
        die = die.one_step(n as usize - 1 - i, i).unwrap();
    }
    die
}

fn bench_tally(c: &mut Criterion) {
    let mut group = c.benchmark_group("tally");
    for n in [512u32, 4096] {
        let a = scrambled(n);
        let b = Die::standard(n).unwrap();
        group.bench_function(format!("merge/n={n}"), |bencher| {
            bencher.iter(|| tally(black_box(&a), black_box(&b)).unwrap())
        });
        group.bench_function(format!("reference/n={n}"), |bencher| {
            bencher.iter(|| tally_reference(black_box(&a), black_box(&b)).unwrap())
        });
    }
    group.finish();
}

/// Runs `f` once per iteration under each available execution setup:
/// the shared pool and a single-thread pool for parallel builds, or the
/// plain sequential path when the `parallel` feature is off.
fn bench_scan<T: Send>(c: &mut Criterion, name: &str, f: impl Fn() -> T + Sync + Send) {
    let mut group = c.benchmark_group(name);
    #[cfg(feature = "parallel")]
    {
        group.bench_function("default-pool", |bencher| bencher.iter(|| black_box(f())));
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        group.bench_function("single-thread-pool", |bencher| {
            bencher.iter(|| single.install(|| black_box(f())))
        });
    }
    #[cfg(not(feature = "parallel"))]
    group.bench_function("sequential", |bencher| bencher.iter(|| black_box(f())));
    group.finish();
}

fn bench_space_scans(c: &mut Criterion) {
    bench_scan(c, "nash/n=7", || find_pure_nash(7));
    bench_scan(c, "digraph/n=7", || build_beats_digraph(7));
    bench_scan(c, "neutrality/n=8", || verify_standard_neutrality(8));
    let target = scrambled(64);
    bench_scan(c, "rank-one-step/n=64", move || {
        rank_one_step_dice(&target).unwrap()
    });
}

criterion_group!(benches, bench_tally, bench_space_scans);
criterion_main!(benches);
