//! Sparse-table range minimum queries.

/// Static range-minimum structure over a slice of `T`.
///
/// `O(n log n)` preprocessing, `O(1)` queries on closed index ranges.
#[derive(Clone, Debug)]
pub struct SparseTable<T> {
    levels: Vec<Vec<T>>,
}

impl<T: Copy + PartialOrd> SparseTable<T> {
    pub fn new(values: &[T]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = levels.last().unwrap();
            let next: Vec<T> = (0..=values.len() - 2 * width)
                .map(|i| min(prev[i], prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        Self { levels }
    }

    pub fn len(&self) -> usize {
        self.levels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels[0].is_empty()
    }

    /// Minimum over `values[lo..=hi]`. Panics if the range is empty or out of bounds.
    #[inline]
    pub fn min(&self, lo: usize, hi: usize) -> T {
        assert!(lo <= hi && hi < self.len(), "bad range {lo}..={hi}");
        let k = usize::BITS - 1 - (hi - lo + 1).leading_zeros();
        let row = &self.levels[k as usize];
        min(row[lo], row[hi + 1 - (1 << k)])
    }
}

#[inline]
fn min<T: PartialOrd>(a: T, b: T) -> T {
    if b < a {
        b
    } else {
        a
    }
}
