use criterion::{black_box, criterion_group, criterion_main, Criterion};

use weakhopf_core::catalog::{self, AlgebraSpec};
use weakhopf_core::findim::{self, AlphaMode};
use weakhopf_core::freealg::{random_word, Element};
use weakhopf_core::hopf::{self, Check, Sampling};
use weakhopf_core::{classify, isomap};

fn completion(c: &mut Criterion) {
    for spec in ["wsl:2:3", "wsl:3:10", "uqsl:3"] {
        let spec: AlgebraSpec = spec.parse().unwrap();
        c.bench_function(&format!("complete {spec}"), |b| b.iter(|| catalog::build(black_box(spec)).unwrap()));
    }
}

fn normal_forms(c: &mut Criterion) {
    let alg = catalog::cached(AlgebraSpec::Wsl { n: 3, d: 10 }).unwrap();
    let words: Vec<Element> = (0..200)
        .map(|s| Element::from_word(random_word(alg.alphabet().len(), 6, s)))
        .collect();
    c.bench_function("nf 200 words wsl:3:10", |b| {
        b.iter(|| {
            for w in &words {
                black_box(alg.nf(w).unwrap());
            }
        })
    });
}

fn classification(c: &mut Criterion) {
    c.bench_function("enumerate n=10", |b| b.iter(|| classify::enumerate(black_box(10), false).unwrap()));
}

fn axioms(c: &mut Criterion) {
    let alg = catalog::cached(AlgebraSpec::Wsl { n: 3, d: 5 }).unwrap();
    c.bench_function("wa1/wa2 wsl:3:5", |b| {
        b.iter(|| hopf::verify_axioms(&alg, &[Check::WeakAntipode1, Check::WeakAntipode2], Sampling::default()).unwrap())
    });
}

fn finite_dimensional(c: &mut Criterion) {
    c.bench_function("R-matrix suite", |b| b.iter(|| findim::verify_rmatrix(&AlphaMode::Symbolic).unwrap()));
    c.bench_function("lifts wsl:3:6", |b| b.iter(|| isomap::verify_lifts(3, 6).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = completion, normal_forms, classification, axioms, finite_dimensional
}
criterion_main!(benches);
