//! Data-parallel helpers with a sequential fallback. Every helper returns the
//! same value as its sequential reading, whatever the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Scan `start..end` in chunks of `chunk` indices and return the smallest
/// index for which `f` yields a value. `keep_going` is polled between chunks
/// and stops the scan when it returns false.
pub fn find_first<T, F, K>(start: u64, end: u64, chunk: u64, f: F, mut keep_going: K) -> Option<(u64, T)>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
    K: FnMut(u64) -> bool,
{
    let chunk = chunk.max(1);
    let mut lo = start;
    while lo < end {
        if !keep_going(lo) {
            return None;
        }
        let hi = end.min(lo.saturating_add(chunk));
        let len = (hi - lo) as usize;
        #[cfg(feature = "parallel")]
        let hit = (0..len).into_par_iter().find_map_first(|j| f(lo + j as u64).map(|v| (lo + j as u64, v)));
        #[cfg(not(feature = "parallel"))]
        let hit = (0..len).find_map(|j| f(lo + j as u64).map(|v| (lo + j as u64, v)));
        if hit.is_some() {
            return hit;
        }
        lo = hi;
    }
    None
}

/// First item (by position) for which `f` yields a value.
pub fn find_first_in<T, U, F>(items: &[T], f: F) -> Option<(usize, U)>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().enumerate().find_map_first(|(i, x)| f(x).map(|v| (i, v)));
    #[cfg(not(feature = "parallel"))]
    return items.iter().enumerate().find_map(|(i, x)| f(x).map(|v| (i, v)));
}

/// `items.iter().map(f).collect()`, order preserved.
pub fn map_vec<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).collect();
    #[cfg(not(feature = "parallel"))]
    return items.iter().map(f).collect();
}

/// Run `f` on a pool of `threads` workers (0 means the default pool).
pub fn with_threads<R: Send, F: FnOnce() -> R + Send>(threads: usize, f: F) -> R {
    #[cfg(feature = "parallel")]
    {
        if threads == 0 {
            return f();
        }
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
        pool.install(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_hit_is_smallest() {
        let hit = find_first(0, 10_000, 97, |i| (i % 37 == 36 && i > 100).then_some(i * 2), |_| true);
        assert_eq!(hit, Some((110, 220)));
        for t in [1, 2, 4] {
            let h = with_threads(t, || find_first(5, 1000, 10, |i| (i * i % 101 == 1).then_some(()), |_| true));
            assert_eq!(h.map(|x| x.0), Some(100));
        }
    }

    #[test]
    fn stop_condition_is_honored() {
        let hit = find_first(0, 1000, 10, |i| (i == 500).then_some(()), |lo| lo < 100);
        assert!(hit.is_none());
    }

    #[test]
    fn map_keeps_order() {
        let v: Vec<u32> = (0..100).collect();
        assert_eq!(map_vec(&v, |x| x * 3), v.iter().map(|x| x * 3).collect::<Vec<_>>());
        assert_eq!(find_first_in(&v, |x| (*x > 40 && x % 7 == 0).then_some(*x)), Some((42, 42)));
    }
}
