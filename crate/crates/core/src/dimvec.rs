//! Weight types and dimension vectors.
//!
//! A weight type records, for each of the `k` marked points, the length `w_i`
//! of the flag chosen in the fiber there. A dimension vector records the rank
//! together with the dimensions `α_{i1} ≥ … ≥ α_{i,w_i-1}` of the proper flag
//! subspaces. The two boundary values `α_{i0} = rank` and `α_{i,w_i} = 0` are
//! never stored; [`DimVector::entry`] materializes them.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Number of marked points and flag length at each point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightType {
    flag_lengths: Vec<usize>,
}

impl WeightType {
    pub fn new(flag_lengths: Vec<usize>) -> Result<Self> {
        if let Some(point) = flag_lengths.iter().position(|&w| w == 0) {
            return Err(Error::EmptyFlag { point });
        }
        Ok(Self { flag_lengths })
    }

    /// The weight type with no marked points.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn num_points(&self) -> usize {
        self.flag_lengths.len()
    }

    pub fn flag_lengths(&self) -> &[usize] {
        &self.flag_lengths
    }

    /// Appends a point with flag length `w`.
    pub fn with_point(&self, w: usize) -> Result<Self> {
        let mut flag_lengths = self.flag_lengths.clone();
        flag_lengths.push(w);
        Self::new(flag_lengths)
    }
}

/// The rank of a parabolic bundle plus the dimensions of its flag subspaces.
///
/// Only valid vectors can be constructed: row `i` has length `w_i - 1` and
/// `rank ≥ α_{i1} ≥ … ≥ α_{i,w_i-1} ≥ 0`. The derived ordering compares the
/// rank first and then the rows lexicographically, which for vectors of one
/// weight type is the lexicographic order on the flattened tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector<T> {
    rank: T,
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> DimVector<T> {
    /// Checks shape against `wt` and monotonicity of every flag.
    pub fn validate(rank: T, rows: Vec<Vec<T>>, wt: &WeightType) -> Result<Self> {
        if rows.len() != wt.num_points() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} flag rows, got {}",
                wt.num_points(),
                rows.len()
            )));
        }
        for (point, (row, &w)) in rows.iter().zip(wt.flag_lengths()).enumerate() {
            if row.len() != w - 1 {
                return Err(Error::ShapeMismatch(format!(
                    "point {point} has flag length {w} and needs {} entries, got {}",
                    w - 1,
                    row.len()
                )));
            }
        }
        Self::from_rows(rank, rows)
    }

    /// Like [`validate`](Self::validate) but takes the weight type implied by
    /// the row lengths.
    pub fn from_rows(rank: T, rows: Vec<Vec<T>>) -> Result<Self> {
        if rank < T::zero() {
            return Err(Error::NegativeRank);
        }
        for (point, row) in rows.iter().enumerate() {
            let mut prev = rank;
            for (j, &x) in row.iter().enumerate() {
                if x > prev {
                    return Err(Error::NotMonotone { point, position: j + 1 });
                }
                prev = x;
            }
            if prev < T::zero() {
                return Err(Error::NotMonotone { point, position: row.len() });
            }
        }
        Ok(Self { rank, rows })
    }

    pub fn zero(wt: &WeightType) -> Self {
        Self {
            rank: T::zero(),
            rows: wt.flag_lengths().iter().map(|&w| vec![T::zero(); w - 1]).collect(),
        }
    }

    pub fn rank(&self) -> T {
        self.rank
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn num_points(&self) -> usize {
        self.rows.len()
    }

    /// Flag length `w_i` at point `i`.
    pub fn flag_len(&self, point: usize) -> usize {
        self.rows[point].len() + 1
    }

    pub fn weight_type(&self) -> WeightType {
        WeightType {
            flag_lengths: self.rows.iter().map(|r| r.len() + 1).collect(),
        }
    }

    /// `α_{ij}` for `0 ≤ j ≤ w_i`, including the implicit boundary values.
    pub fn entry(&self, point: usize, j: usize) -> T {
        let row = &self.rows[point];
        match j {
            0 => self.rank,
            j if j <= row.len() => row[j - 1],
            j if j == row.len() + 1 => T::zero(),
            _ => panic!("flag index {j} out of range at point {point}"),
        }
    }

    pub fn same_weight_type(&self, other: &Self) -> bool {
        self.rows.len() == other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a.len() == b.len())
    }

    pub fn is_zero(&self) -> bool {
        self.rank.is_zero()
    }

    /// Componentwise `self ≤ other`.
    pub fn is_dominated_by(&self, other: &Self) -> bool {
        self.rank <= other.rank
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x <= y))
    }

    /// Componentwise sum. The sum of two valid vectors is always valid.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !self.same_weight_type(other) {
            return Err(Error::WeightTypeMismatch);
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| scalar::add(x, y)).collect())
            .collect::<Result<_>>()?;
        Ok(Self {
            rank: scalar::add(self.rank, other.rank)?,
            rows,
        })
    }

    /// Componentwise `self - other`, or `None` when that is not a valid
    /// dimension vector (some entry negative or some flag not monotone).
    pub fn difference(&self, other: &Self) -> Option<Self> {
        if !self.same_weight_type(other) {
            return None;
        }
        let rank = self.rank.checked_sub(&other.rank)?;
        if rank < T::zero() {
            return None;
        }
        // check before allocating; most calls from the enumerator fail here
        for (a, b) in self.rows.iter().zip(&other.rows) {
            let mut prev = rank;
            for (&x, &y) in a.iter().zip(b) {
                let d = x.checked_sub(&y)?;
                if d > prev {
                    return None;
                }
                prev = d;
            }
            if prev < T::zero() {
                return None;
            }
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| x - y).collect())
            .collect();
        Some(Self { rank, rows })
    }

    /// Appends a point with flag length 1, which carries no flag data.
    pub fn with_trivial_point(&self) -> Self {
        let mut rows = self.rows.clone();
        rows.push(Vec::new());
        Self { rank: self.rank, rows }
    }

    /// Reorders the marked points: point `i` of the result is point
    /// `order[i]` of `self`.
    pub fn permute_points(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.rows.len(), "permutation length");
        Self {
            rank: self.rank,
            rows: order.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }

    /// A point is nontrivial when its flag contains a subspace that is
    /// neither zero nor the whole fiber.
    pub fn is_nontrivial_point(&self, point: usize) -> bool {
        self.rows[point].iter().any(|&x| x > T::zero() && x < self.rank)
    }

    pub fn nontrivial_points(&self) -> usize {
        (0..self.num_points()).filter(|&i| self.is_nontrivial_point(i)).count()
    }
}

impl<T: Scalar> fmt::Display for DimVector<T> {
    /// `(2;[1],[1])`, or just `(2)` with no marked points.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.rank)?;
        for (i, row) in self.rows.iter().enumerate() {
            f.write_str(if i == 0 { ";" } else { "," })?;
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str(")")
    }
}

/// A dimension vector together with the degree of the underlying bundle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SheafDatum<T> {
    pub dimvec: DimVector<T>,
    pub degree: T,
}

impl<T: Scalar> SheafDatum<T> {
    pub fn new(dimvec: DimVector<T>, degree: T) -> Self {
        Self { dimvec, degree }
    }
}
