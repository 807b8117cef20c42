use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use orbitrank::bruhat_order::{leq_bruhat, rank_matrix, BruhatOracle};
use orbitrank::incitti_chains::{ChainGraph, EdgePolicy};
use orbitrank::signed_perm::enumerate_group;
use orbitrank::GroupTag;

fn bruhat(c: &mut Criterion) {
    let d4: Vec<_> = enumerate_group(4, GroupTag::D).collect();
    c.bench_function("leq_bruhat all pairs D4", |b| {
        b.iter(|| {
            let mut count = 0usize;
            for v in &d4 {
                for w in &d4 {
                    count += usize::from(leq_bruhat(v, w).unwrap());
                }
            }
            black_box(count)
        })
    });
    c.bench_function("rank_matrix B6", |b| {
        let w = enumerate_group(6, GroupTag::BC).nth(12345).unwrap();
        b.iter(|| black_box(rank_matrix(black_box(&w))))
    });
    c.bench_function("oracle D4", |b| b.iter(|| black_box(BruhatOracle::new(4, GroupTag::D))));
    c.bench_function("chain graph C5 basis", |b| {
        b.iter(|| black_box(ChainGraph::build(5, true, EdgePolicy::Strict).unwrap()))
    });
}

criterion_group!(benches, bruhat);
criterion_main!(benches);
