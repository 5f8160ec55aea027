use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use quantlang::analysis::cutpoint_dlavg;
use quantlang::omega::{nbw_complement, threshold_automaton};
use quantlang::{complement, compose, rat, Operation, ValueFunction};
use quantlang_bench::automaton;

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("compose");
    let cells = [
        (ValueFunction::LimSup, Operation::Max),
        (ValueFunction::LimSup, Operation::Min),
        (ValueFunction::Disc(rat(1, 2)), Operation::Sum),
    ];
    for (vf, op) in cells {
        for states in [4, 8, 16] {
            let a1 = automaton(10 + states as u64, vf.clone(), states, true);
            let a2 = automaton(20 + states as u64, vf.clone(), states, true);
            let id = BenchmarkId::new(format!("{}/{op}", vf.name()), states);
            group.bench_with_input(id, &states, |b, _| b.iter(|| black_box(compose(op, &a1, &a2).unwrap())));
        }
    }
    group.finish();
}

fn complements(c: &mut Criterion) {
    let a = automaton(5, ValueFunction::LimSup, 2, false);
    c.bench_function("complement/nlsup/2", |b| b.iter(|| black_box(complement(&a).unwrap())));
    let n = automaton(6, ValueFunction::LimSup, 3, false);
    let nbw = threshold_automaton(&n, &rat(1, 2)).unwrap();
    c.bench_function("nbw_complement/3", |b| b.iter(|| black_box(nbw_complement(&nbw).unwrap())));
}

fn cutpoints(c: &mut Criterion) {
    let a = automaton(7, ValueFunction::LimAvg, 16, true);
    c.bench_function("cutpoint_dlavg/16", |b| b.iter(|| black_box(cutpoint_dlavg(&a, &rat(1, 3)))));
}

criterion_group!(benches, products, complements, cutpoints);
criterion_main!(benches);
