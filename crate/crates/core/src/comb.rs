//! Small combinatorial quantities, computed exactly in the scalar type.

use crate::scalar::Scalar;

/// `n!`.
pub fn factorial<C: Scalar>(n: u32) -> C {
    let mut acc = C::one();
    for i in 1..=n as i64 {
        acc = acc * C::from_int(i);
    }
    acc
}

/// Falling factorial `(n)_r = n (n-1) ... (n-r+1)` of an integer argument.
pub fn falling_int<C: Scalar>(n: i64, r: u32) -> C {
    let mut acc = C::one();
    for i in 0..r as i64 {
        acc = acc * C::from_int(n - i);
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero outside `0 <= k <= n`.
///
/// Computed by Pascal's rule so only additions are needed and the value is
/// exact in any scalar.
pub fn binomial<C: Scalar>(n: u32, k: i64) -> C {
    if k < 0 || k as u32 > n {
        return C::zero();
    }
    let table = BinomialTable::<C>::new(n as usize);
    table.at(n as usize, k as usize).clone()
}

/// Precomputed Pascal triangle up to a fixed row, for convolution loops.
pub struct BinomialTable<C> {
    rows: Vec<Vec<C>>,
}

impl<C: Scalar> BinomialTable<C> {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<C>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![C::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(C::one());
            for k in 1..n {
                row.push(prev[k - 1].clone() + prev[k].clone());
            }
            row.push(C::one());
            rows.push(row);
        }
        Self { rows }
    }

    pub fn at(&self, n: usize, k: usize) -> &C {
        &self.rows[n][k]
    }
}
