//! Enumeration of every (weight type, dimension vector) pair within bounds.

use crate::dimvec::{DimVector, WeightType};
use crate::scalar::Scalar;

/// Bounds on rank, number of points and flag length. Ranks start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridBounds {
    pub max_rank: u32,
    pub max_points: usize,
    pub max_flag_len: usize,
}

/// All weight types with at most `max_points` points and flag lengths in
/// `1..=max_flag_len`, ordered by point count and then lexicographically.
/// Point order matters, so `(2,3)` and `(3,2)` are both listed.
pub fn weight_types(max_points: usize, max_flag_len: usize) -> Vec<WeightType> {
    let mut out = Vec::new();
    for k in 0..=max_points {
        let mut w = vec![1usize; k];
        'odometer: loop {
            out.push(WeightType::new(w.clone()).expect("flag lengths start at 1"));
            for i in (0..k).rev() {
                if w[i] < max_flag_len {
                    w[i] += 1;
                    continue 'odometer;
                }
                w[i] = 1;
            }
            break;
        }
    }
    out
}

/// Every valid vector of weight type `wt` with the given rank, in increasing order.
pub fn vectors_of_rank<T: Scalar>(wt: &WeightType, rank: T) -> Vec<DimVector<T>> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<T>> = wt.flag_lengths().iter().map(|&w| vec![T::zero(); w - 1]).collect();
    fill(wt, rank, 0, 0, &mut rows, &mut out);
    out
}

fn fill<T: Scalar>(
    wt: &WeightType,
    rank: T,
    point: usize,
    pos: usize,
    rows: &mut Vec<Vec<T>>,
    out: &mut Vec<DimVector<T>>,
) {
    if point == wt.num_points() {
        out.push(DimVector::from_rows(rank, rows.clone()).expect("monotone by construction"));
        return;
    }
    if pos == rows[point].len() {
        fill(wt, rank, point + 1, 0, rows, out);
        return;
    }
    let hi = if pos == 0 { rank } else { rows[point][pos - 1] };
    let mut x = T::zero();
    while x <= hi {
        rows[point][pos] = x;
        fill(wt, rank, point, pos + 1, rows, out);
        x = x + T::one();
    }
    rows[point][pos] = T::zero();
}

/// Every `(weight type, vector)` instance within `bounds`, weight types in
/// [`weight_types`] order, then by rank, then by flag entries.
pub fn instances<T: Scalar>(bounds: GridBounds) -> Vec<(WeightType, DimVector<T>)> {
    let mut out = Vec::new();
    for wt in weight_types(bounds.max_points, bounds.max_flag_len) {
        for rank in 1..=bounds.max_rank {
            let rank = T::from(rank).expect("rank fits the scalar type");
            for v in vectors_of_rank(&wt, rank) {
                out.push((wt.clone(), v));
            }
        }
    }
    out
}
