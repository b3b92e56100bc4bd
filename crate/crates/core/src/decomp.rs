//! Duplicate-free enumeration of decompositions of a dimension vector into
//! positive-rank dimension vectors.
//!
//! A decomposition is a multiset of valid dimension vectors with rank ≥ 1
//! summing to the target. It is stored as a non-increasing list of parts, so
//! two decompositions are equal exactly when their part lists are.
//!
//! [`decompositions`] walks the multisets depth first, always choosing the
//! next part no larger (in [`DimVector`]'s order) than the previous one.
//! Candidates are tried largest first, so the stream comes out in decreasing
//! lexicographic order of part lists: for `(3)` that is `{(3)}`, then
//! `{(2),(1)}`, then `{(1),(1),(1)}`. Nothing is precomputed beyond the
//! candidate parts of the current search path, so consumers may stop early.

use std::fmt;

use crate::dimvec::DimVector;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition<T> {
    parts: Vec<DimVector<T>>,
}

impl<T: Scalar> Decomposition<T> {
    /// Canonicalizes `parts` (sorts them non-increasingly).
    ///
    /// Every part must have rank ≥ 1 and all parts must share one weight type.
    pub fn from_parts(mut parts: Vec<DimVector<T>>) -> Result<Self> {
        let first = parts.first().ok_or(Error::ZeroRank)?;
        if parts.iter().any(|p| !p.same_weight_type(first)) {
            return Err(Error::WeightTypeMismatch);
        }
        if parts.iter().any(|p| p.rank() < T::one()) {
            return Err(Error::ZeroRank);
        }
        parts.sort_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[DimVector<T>] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Componentwise sum of the parts.
    pub fn total(&self) -> Result<DimVector<T>> {
        let (first, rest) = self.parts.split_first().ok_or(Error::ZeroRank)?;
        rest.iter().try_fold(first.clone(), |acc, p| acc.checked_add(p))
    }
}

impl<T: Scalar> fmt::Display for Decomposition<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{part}")?;
        }
        f.write_str("}")
    }
}

/// Streams every decomposition of `target` with between `min_parts` and
/// `max_parts` parts (`None` for no upper bound), in canonical order.
pub fn decompositions<T: Scalar>(
    target: &DimVector<T>,
    min_parts: usize,
    max_parts: Option<usize>,
) -> Result<Decompositions<T>> {
    check_bounds(min_parts, max_parts)?;
    let pool = dominated_vectors(target);
    Ok(Decompositions {
        min_parts,
        max_parts: max_parts.unwrap_or(usize::MAX),
        path: Vec::new(),
        stack: vec![Frame {
            residual: target.clone(),
            candidates: (0..pool.len()).collect(),
            cursor: 0,
        }],
        pool,
    })
}

/// Number of decompositions [`decompositions`] would yield.
pub fn count_decompositions<T: Scalar>(
    target: &DimVector<T>,
    min_parts: usize,
    max_parts: Option<usize>,
) -> Result<usize> {
    Ok(decompositions(target, min_parts, max_parts)?.count())
}

pub(crate) fn check_bounds(min_parts: usize, max_parts: Option<usize>) -> Result<()> {
    if min_parts < 1 || max_parts.is_some_and(|max| max < min_parts) {
        return Err(Error::InvalidBounds {
            min: min_parts,
            max: max_parts,
        });
    }
    Ok(())
}

/// Iterator returned by [`decompositions`].
pub struct Decompositions<T> {
    min_parts: usize,
    max_parts: usize,
    /// Valid positive-rank vectors dominated by the target, in decreasing order.
    pool: Vec<DimVector<T>>,
    /// Indices into `pool` of the parts chosen so far; one fewer than the
    /// number of frames.
    path: Vec<usize>,
    stack: Vec<Frame<T>>,
}

struct Frame<T> {
    residual: DimVector<T>,
    /// Increasing indices into `pool` of the parts dominated by `residual`.
    candidates: Vec<usize>,
    cursor: usize,
}

impl<T: Scalar> Iterator for Decompositions<T> {
    type Item = Decomposition<T>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let frame = self.stack.last_mut()?;
            let Some(&chosen) = frame.candidates.get(frame.cursor) else {
                self.stack.pop();
                self.path.pop();
                continue;
            };
            let index = frame.cursor;
            frame.cursor += 1;
            let part = &self.pool[chosen];
            let Some(rest) = frame.residual.difference(part) else {
                continue;
            };
            let used = self.path.len() + 1;
            if rest.is_zero() {
                if used >= self.min_parts && used <= self.max_parts {
                    let parts = self
                        .path
                        .iter()
                        .chain(std::iter::once(&chosen))
                        .map(|&i| self.pool[i].clone())
                        .collect();
                    return Some(Decomposition { parts });
                }
                continue;
            }
            // Every further part has rank ≥ 1, so at most `rest.rank()` more fit.
            let most = rest.rank().to_usize().unwrap_or(usize::MAX);
            if used >= self.max_parts || used.saturating_add(most) < self.min_parts {
                continue;
            }
            let pool = &self.pool;
            let candidates: Vec<usize> = frame.candidates[index..]
                .iter()
                .copied()
                .filter(|&c| pool[c].is_dominated_by(&rest))
                .collect();
            if candidates.is_empty() {
                continue;
            }
            self.path.push(chosen);
            self.stack.push(Frame {
                residual: rest,
                candidates,
                cursor: 0,
            });
        }
    }
}

/// All valid vectors `v` with `1 ≤ v.rank` and `v ≤ bound` componentwise,
/// sorted in decreasing order.
fn dominated_vectors<T: Scalar>(bound: &DimVector<T>) -> Vec<DimVector<T>> {
    let mut out = Vec::new();
    let mut rank = bound.rank();
    while rank >= T::one() {
        let per_point: Vec<Vec<Vec<T>>> = bound
            .rows()
            .iter()
            .map(|row| monotone_rows(rank, row))
            .collect();
        let mut choice = vec![0usize; per_point.len()];
        'product: loop {
            let rows = choice
                .iter()
                .zip(&per_point)
                .map(|(&c, options)| options[c].clone())
                .collect();
            out.push(DimVector::from_rows(rank, rows).expect("monotone by construction"));
            for i in (0..choice.len()).rev() {
                choice[i] += 1;
                if choice[i] < per_point[i].len() {
                    continue 'product;
                }
                choice[i] = 0;
            }
            break;
        }
        rank = rank - T::one();
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Non-increasing rows `x` with `x_1 ≤ top`, `x_j ≥ 0` and `x_j ≤ cap_j`.
fn monotone_rows<T: Scalar>(top: T, cap: &[T]) -> Vec<Vec<T>> {
    fn extend<T: Scalar>(prev: T, cap: &[T], row: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        let Some((&c, rest)) = cap.split_first() else {
            out.push(row.clone());
            return;
        };
        let hi = prev.min(c);
        let mut x = T::zero();
        while x <= hi {
            row.push(x);
            extend(x, rest, row, out);
            row.pop();
            x = x + T::one();
        }
    }
    let mut out = Vec::new();
    extend(top, cap, &mut Vec::new(), &mut out);
    out
}
