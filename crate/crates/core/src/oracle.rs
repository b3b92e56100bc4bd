//! Naive reference implementations used to certify [`crate::decomp`],
//! [`crate::dims`] and [`crate::goodness`].
//!
//! Nothing here shares code with those modules; only the Euler form and the
//! dimension-vector type are reused. Speed is not a goal.

use std::collections::BTreeSet;

use crate::dimvec::DimVector;
use crate::error::{Error, Result};
use crate::euler::q;
use crate::scalar::{self, Scalar};

/// A decomposition as a sorted (non-increasing) list of parts.
pub type PartList<T> = Vec<DimVector<T>>;

/// Every multiset of valid positive-rank vectors summing to `target` with a
/// part count in `[min_parts, max_parts]`.
///
/// Builds all ordered tuples by trying every componentwise-smaller valid
/// vector at each step, then sorts each tuple and deduplicates.
pub fn oracle_decompositions<T: Scalar>(
    target: &DimVector<T>,
    min_parts: usize,
    max_parts: Option<usize>,
) -> Result<BTreeSet<PartList<T>>> {
    if min_parts < 1 || max_parts.is_some_and(|m| m < min_parts) {
        return Err(Error::InvalidBounds {
            min: min_parts,
            max: max_parts,
        });
    }
    let max = max_parts.unwrap_or(usize::MAX);
    let mut out = BTreeSet::new();
    let mut tuple = Vec::new();
    ordered(target, &mut tuple, min_parts, max, &mut out);
    Ok(out)
}

fn ordered<T: Scalar>(
    residual: &DimVector<T>,
    tuple: &mut Vec<DimVector<T>>,
    min: usize,
    max: usize,
    out: &mut BTreeSet<PartList<T>>,
) {
    if residual.rank().is_zero() {
        if !tuple.is_empty() && tuple.len() >= min && tuple.len() <= max {
            let mut parts = tuple.clone();
            parts.sort_by(|a, b| b.cmp(a));
            out.insert(parts);
        }
        return;
    }
    if tuple.len() >= max {
        return;
    }
    for part in smaller_vectors(residual) {
        if part.rank().is_zero() {
            continue;
        }
        let Some(rest) = subtract(residual, &part) else {
            continue;
        };
        tuple.push(part);
        ordered(&rest, tuple, min, max, out);
        tuple.pop();
    }
}

/// Every valid vector whose entries are each between 0 and the matching entry
/// of `bound`, found by counting through all entry combinations.
fn smaller_vectors<T: Scalar>(bound: &DimVector<T>) -> Vec<DimVector<T>> {
    let mut limits = vec![bound.rank()];
    for row in bound.rows() {
        limits.extend(row.iter().copied());
    }
    let mut digits = vec![T::zero(); limits.len()];
    let mut found = Vec::new();
    loop {
        let mut flat = digits.iter().copied();
        let rank = flat.next().unwrap();
        let rows = bound
            .rows()
            .iter()
            .map(|row| flat.by_ref().take(row.len()).collect())
            .collect();
        if let Ok(v) = DimVector::from_rows(rank, rows) {
            found.push(v);
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return found;
            }
            if digits[i] < limits[i] {
                digits[i] = digits[i] + T::one();
                break;
            }
            digits[i] = T::zero();
            i += 1;
        }
    }
}

fn subtract<T: Scalar>(a: &DimVector<T>, b: &DimVector<T>) -> Option<DimVector<T>> {
    let rows = a
        .rows()
        .iter()
        .zip(b.rows())
        .map(|(x, y)| x.iter().zip(y).map(|(&s, &t)| s - t).collect())
        .collect();
    DimVector::from_rows(a.rank() - b.rank(), rows).ok()
}

/// Reference maxima for one genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleDims<T> {
    pub dim_bun: T,
    pub nilp: T,
    pub pairs: T,
    pub inertia_excess: Option<T>,
}

/// Reference verdict: the largest value of
/// `t − 1 + g·Σβ₀² − Σq(β) − (g·α₀² − q(α))` over decompositions into at
/// least two parts, and the two yes/no answers it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict<T> {
    pub almost_good: bool,
    pub almost_very_good: bool,
    pub margin: Option<T>,
}

/// The oracle's decompositions of one vector, enumerated once and reused for
/// every genus.
pub struct OracleTable<T> {
    target: DimVector<T>,
    decompositions: BTreeSet<PartList<T>>,
}

impl<T: Scalar> OracleTable<T> {
    pub fn new(target: &DimVector<T>) -> Result<Self> {
        if target.rank().is_zero() {
            return Err(Error::ZeroRank);
        }
        Ok(Self {
            target: target.clone(),
            decompositions: oracle_decompositions(target, 1, None)?,
        })
    }

    /// All decompositions, including the one-part one.
    pub fn decompositions(&self) -> &BTreeSet<PartList<T>> {
        &self.decompositions
    }

    fn dim_bun(&self, g: T) -> Result<T> {
        let r = self.target.rank();
        scalar::sub(scalar::mul(g, scalar::mul(r, r)?)?, q(&self.target)?)
    }

    /// `(g·Σβ₀² − Σq(β), t)` for every decomposition.
    fn values(&self, g: T) -> Result<Vec<(T, usize)>> {
        self.decompositions
            .iter()
            .map(|parts| {
                let mut value = T::zero();
                for part in parts {
                    let sq = scalar::mul(part.rank(), part.rank())?;
                    value = scalar::add(value, scalar::sub(scalar::mul(g, sq)?, q(part)?)?)?;
                }
                Ok((value, parts.len()))
            })
            .collect()
    }

    pub fn dims(&self, genus: u32) -> Result<OracleDims<T>> {
        let g: T = scalar::cast(genus)?;
        let mut nilp = None::<T>;
        let mut pairs = None::<T>;
        let mut excess = None::<T>;
        for (value, t) in self.values(g)? {
            let with_groups = scalar::add(value, scalar::cast(t)?)?;
            nilp = Some(nilp.map_or(value, |n| n.max(value)));
            pairs = Some(pairs.map_or(with_groups, |n| n.max(with_groups)));
            if t >= 2 {
                excess = Some(excess.map_or(with_groups, |n| n.max(with_groups)));
            }
        }
        Ok(OracleDims {
            dim_bun: self.dim_bun(g)?,
            nilp: nilp.expect("the one-part decomposition always exists"),
            pairs: pairs.expect("the one-part decomposition always exists"),
            inertia_excess: excess,
        })
    }

    pub fn decide(&self, genus: u32) -> Result<OracleVerdict<T>> {
        let g: T = scalar::cast(genus)?;
        let rhs = self.dim_bun(g)?;
        let mut margin = None::<T>;
        for (value, t) in self.values(g)? {
            if t < 2 {
                continue;
            }
            let lhs = scalar::add(scalar::cast(t - 1)?, value)?;
            let diff = scalar::sub(lhs, rhs)?;
            margin = Some(margin.map_or(diff, |m| m.max(diff)));
        }
        Ok(OracleVerdict {
            almost_good: margin.is_none_or(|m| m <= T::zero()),
            almost_very_good: margin.is_none_or(|m| m < T::zero()),
            margin,
        })
    }
}

pub fn oracle_dims<T: Scalar>(a: &DimVector<T>, genus: u32) -> Result<OracleDims<T>> {
    OracleTable::new(a)?.dims(genus)
}

pub fn oracle_decide<T: Scalar>(a: &DimVector<T>, genus: u32) -> Result<OracleVerdict<T>> {
    OracleTable::new(a)?.decide(genus)
}
