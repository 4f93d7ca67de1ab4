//! Data-parallel helpers. With the `parallel` feature (on by default) work is
//! spread over the rayon pool; without it everything runs on the calling thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    map_sequential(items, f)
}

/// Sequential reference for [`map`].
pub fn map_sequential<T, R>(items: &[T], f: impl Fn(&T) -> R) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Whether [`map`] runs in parallel in this build.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Sizes the global pool. Returns `false` if the pool was already built or the
/// build is sequential.
pub fn set_threads(n: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
        false
    }
}

/// Runs `f` with [`map`] restricted to `n` threads, without touching the global pool.
pub fn with_threads<R: Send>(n: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
        f()
    }
}
