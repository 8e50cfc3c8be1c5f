//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper here is shaped so that the result is identical whether the
//! `parallel` feature is on or off: outputs are written to disjoint slots,
//! max-reductions are order-free, and sums are accumulated per fixed-size
//! block and folded in block order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every fixed-size chunk of `data`, passing the chunk index.
/// Chunks are disjoint, so the result does not depend on scheduling.
#[cfg(feature = "parallel")]
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], chunk_len: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    data.par_chunks_mut(chunk_len)
        .enumerate()
        .for_each(|(idx, chunk)| f(idx, chunk));
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], chunk_len: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    for (idx, chunk) in data.chunks_mut(chunk_len).enumerate() {
        f(idx, chunk);
    }
}

/// `(0..n).map(f).collect()`, preserving index order.
#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Maximum of `f(i)` over `0..n`; 0.0 when `n == 0`. Max is associative and
/// commutative on non-NaN data, so the reduction order is immaterial.
#[cfg(feature = "parallel")]
pub(crate) fn max_over<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    (0..n)
        .into_par_iter()
        .map(f)
        .reduce(|| 0.0f64, f64::max)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn max_over<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    (0..n).map(f).fold(0.0f64, f64::max)
}

/// Splits `0..n` into fixed blocks of `block` indices, evaluates a per-block
/// accumulator, then folds accumulators sequentially in block order. Block
/// boundaries depend only on `n` and `block`, never on thread count.
#[cfg(feature = "parallel")]
pub(crate) fn block_fold<A, F, G>(n: usize, block: usize, per_block: F, fold: G) -> Option<A>
where
    A: Send,
    F: Fn(std::ops::Range<usize>) -> A + Sync + Send,
    G: Fn(A, A) -> A,
{
    let blocks: Vec<A> = (0..n.div_ceil(block))
        .into_par_iter()
        .map(|b| per_block(b * block..((b + 1) * block).min(n)))
        .collect();
    blocks.into_iter().reduce(fold)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn block_fold<A, F, G>(n: usize, block: usize, per_block: F, fold: G) -> Option<A>
where
    A: Send,
    F: Fn(std::ops::Range<usize>) -> A + Sync + Send,
    G: Fn(A, A) -> A,
{
    (0..n.div_ceil(block))
        .map(|b| per_block(b * block..((b + 1) * block).min(n)))
        .reduce(fold)
}
