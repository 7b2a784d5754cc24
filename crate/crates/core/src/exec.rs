//! Execution policy for the data-parallel loops over patterns,
//! multipartitions and claims.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Maps `f` over `items`, preserving order. Without the `parallel`
    /// feature both variants run sequentially.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }
}

pub const DEFAULT_MAX_DEGREE: usize = 6;

/// Degree cap for multilinear computations; `PIGROWTH_MAX_N` overrides it.
pub fn max_degree() -> usize {
    std::env::var("PIGROWTH_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

pub(crate) fn check_degree(n: usize) -> crate::Result<()> {
    let cap = max_degree();
    if n > cap {
        Err(crate::Error::DegreeCap { n, cap })
    } else {
        Ok(())
    }
}
