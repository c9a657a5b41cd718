use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use motivic_core::chart::{eta_localize_chart, sample_chart};
use motivic_core::regions::{classify, resolve_group};
use motivic_core::verify::ACCEPTANCE_WINDOW;
use motivic_core::{enumerate_basis, localized_motivic_anss, run_to_einfty, Window};

fn spectral_sequence(c: &mut Criterion) {
    let (presentation, specs) = localized_motivic_anss();
    let window = Window::parse(&presentation, ACCEPTANCE_WINDOW).unwrap();
    c.bench_function("enumerate_basis", |b| {
        b.iter(|| enumerate_basis(&presentation, black_box(&window)))
    });
    c.bench_function("run_to_einfty", |b| {
        b.iter(|| run_to_einfty(&presentation, &specs, black_box(&window)).unwrap())
    });
}

fn regions(c: &mut Criterion) {
    c.bench_function("classify_200x200", |b| {
        b.iter(|| {
            let mut n = 0usize;
            for s in -100..100 {
                for w in -100..100 {
                    n += classify(black_box(s), black_box(w)) as usize;
                }
            }
            n
        })
    });
    c.bench_function("resolve_eta_local_s_le_500", |b| {
        b.iter(|| {
            let mut n = 0usize;
            for s in 1..=500 {
                for w in (3 * s / 5)..=s {
                    n += usize::from(!resolve_group(s, w, None).is_trivial());
                }
            }
            n
        })
    });
}

fn localization(c: &mut Criterion) {
    let chart = sample_chart();
    c.bench_function("eta_localize_sample", |b| {
        b.iter(|| eta_localize_chart(black_box(&chart), 64))
    });
}

criterion_group!(benches, spectral_sequence, regions, localization);
criterion_main!(benches);
