//! Wall-clock timing of the classifier on random trees.

use std::hint::black_box;
use std::time::Instant;

use crate::classifier::{classify_all, classify_vertex};
use crate::tree::{random_tree, Tree};

/// Repetitions per measurement; the median is reported.
pub const DEFAULT_REPS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    /// Median milliseconds for one `classify_vertex` call.
    pub single_ms: f64,
    /// Median milliseconds for `classify_all`, if measured.
    pub all_ms: Option<f64>,
}

fn median_ms(reps: usize, mut f: impl FnMut()) -> f64 {
    let mut samples: Vec<f64> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    samples.sort_by(f64::total_cmp);
    samples[samples.len() / 2]
}

/// Median time to classify vertex 0.
pub fn time_single(tree: &Tree, reps: usize) -> f64 {
    median_ms(reps, || {
        black_box(classify_vertex(black_box(tree), 0).unwrap());
    })
}

/// Median time to classify every vertex, sequentially.
pub fn time_all(tree: &Tree, reps: usize) -> f64 {
    median_ms(reps, || {
        black_box(classify_all(black_box(tree)));
    })
}

/// The tree benchmarked at size `n`.
pub fn bench_tree(n: usize, seed: u64) -> Tree {
    random_tree(n, seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Times both operations for each size. `classify_all` is quadratic, so it is
/// skipped for sizes above `all_max`.
pub fn run(sizes: &[usize], seed: u64, reps: usize, all_max: usize) -> Vec<BenchRow> {
    sizes
        .iter()
        .map(|&n| {
            let tree = bench_tree(n, seed);
            BenchRow {
                n,
                single_ms: time_single(&tree, reps),
                all_ms: (n <= all_max).then(|| time_all(&tree, reps)),
            }
        })
        .collect()
}
