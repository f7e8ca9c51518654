//! Deterministic data parallelism: order-preserving parallel map and
//! associative product assembly.
//!
//! Everything in this crate is a pure function of its inputs, so
//! independent targets can be evaluated on worker threads freely; the
//! only obligation is that observable output never depends on the
//! schedule. The helpers here guarantee that: [`map_vec`] keeps
//! results in input order, and [`series_product`] combines factors of
//! an exact quotient ring, where multiplication is associative on the
//! nose, so any combination tree yields bit-identical terms.
//!
//! With the `parallel` feature disabled (or [`Width::Sequential`]),
//! the same entry points run single-threaded with no rayon
//! dependency.

use crate::qsum::{Exponent, QSum};

/// How much parallelism to use for an independent batch of work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Width {
    /// Evaluate in order on the calling thread.
    Sequential,
    /// Evaluate on a thread pool of the given size; `0` means the
    /// default pool size for this machine. Falls back to sequential
    /// evaluation when the `parallel` feature is compiled out.
    Parallel(usize),
}

impl Width {
    /// Maps a jobs count from a command line: `1` is sequential, any
    /// other value a pool of that size (`0` = machine default).
    pub fn from_jobs(jobs: usize) -> Width {
        if jobs == 1 {
            Width::Sequential
        } else {
            Width::Parallel(jobs)
        }
    }
}

#[cfg(feature = "parallel")]
fn run_in_pool<R: Send>(threads: usize, work: impl FnOnce() -> R + Send) -> R {
    if threads == 0 {
        return work();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("failed to build thread pool")
        .install(work)
}

/// Applies `f` to every item, returning results in input order
/// regardless of the width.
pub fn map_vec<T, U, F>(width: Width, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    #[cfg(feature = "parallel")]
    if let Width::Parallel(threads) = width {
        use rayon::prelude::*;
        return run_in_pool(threads, || items.par_iter().map(&f).collect());
    }
    let _ = width;
    items.iter().map(f).collect()
}

/// Multiplies all factors together. Multiplication in the truncated
/// ring is exactly associative, so the parallel reduction (which
/// combines contiguous runs of factors) equals the sequential
/// left-to-right product term for term.
pub fn series_product<E>(width: Width, one: QSum<E>, factors: &[QSum<E>]) -> QSum<E>
where
    E: Exponent + Send + Sync,
    E::Bound: Send + Sync,
{
    #[cfg(feature = "parallel")]
    if let Width::Parallel(threads) = width {
        use rayon::prelude::*;
        let neutral = one.clone();
        return run_in_pool(threads, move || {
            factors
                .par_iter()
                .cloned()
                .reduce(|| neutral.clone(), |x, y| &x * &y)
        });
    }
    let _ = width;
    factors.iter().fold(one, |acc, factor| &acc * factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::FieldCtx;

    #[test]
    fn map_preserves_order() {
        let items: Vec<i64> = (0..100).collect();
        let seq = map_vec(Width::Sequential, &items, |n| n * n);
        let par = map_vec(Width::Parallel(4), &items, |n| n * n);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }

    #[test]
    fn product_is_schedule_independent() {
        let ctx = FieldCtx::new(2).unwrap();
        let delta = ctx.from_int(5);
        let factors: Vec<_> = delta
            .downset()
            .unwrap()
            .into_iter()
            .map(|e| {
                QSum::monomial(delta, vec![], 1, e, &[])
                    .unwrap()
                    .geom_inverse()
                    .unwrap()
            })
            .collect();
        let one = QSum::one(delta, vec![]);
        let seq = series_product(Width::Sequential, one.clone(), &factors);
        let par = series_product(Width::Parallel(4), one.clone(), &factors);
        let par_default = series_product(Width::Parallel(0), one, &factors);
        assert_eq!(seq, par);
        assert_eq!(seq, par_default);
    }
}
