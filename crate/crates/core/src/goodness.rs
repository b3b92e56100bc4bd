//! Deciding whether the moduli stack of parabolic bundles is almost good or
//! almost very good.
//!
//! Every parabolic bundle has at least a one-dimensional automorphism group
//! (the scalars), so the codimension condition is shifted by one. The stack is
//! almost good exactly when `dim(I − I¹) − 1 ≤ dim Bun`, and almost very good
//! when the inequality is strict, where `I − I¹` is the non-scalar part of the
//! inertia stack. [`decide`] reports the margin `Δ = dim(I − I¹) − 1 − dim Bun`.
//!
//! [`check_g0`], [`check_g1`] and [`check_g_high`] are independent routes for
//! the individual genus regimes; they never call into [`crate::dims`] and are
//! compared against [`decide`] in tests.

use std::fmt;
use std::str::FromStr;

use crate::decomp::{decompositions, Decomposition};
use crate::dimvec::DimVector;
use crate::dims::{dim_bun, dim_inertia_excess};
use crate::error::{Error, Result};
use crate::euler::p;
use crate::scalar::{self, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    AlmostVeryGood,
    AlmostGoodOnly,
    NotAlmostGood,
}

impl Classification {
    /// Classifies a margin; `None` (empty non-scalar locus) is vacuously very good.
    pub fn from_margin<T: Scalar>(margin: Option<T>) -> Self {
        match margin {
            None => Classification::AlmostVeryGood,
            Some(m) if m < T::zero() => Classification::AlmostVeryGood,
            Some(m) if m.is_zero() => Classification::AlmostGoodOnly,
            Some(_) => Classification::NotAlmostGood,
        }
    }

    pub fn goodness(self) -> Goodness {
        Goodness {
            almost_good: self != Classification::NotAlmostGood,
            almost_very_good: self == Classification::AlmostVeryGood,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::AlmostVeryGood => "almost-very-good",
            Classification::AlmostGoodOnly => "almost-good-only",
            Classification::NotAlmostGood => "not-almost-good",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Classification {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "almost-very-good" => Ok(Classification::AlmostVeryGood),
            "almost-good-only" => Ok(Classification::AlmostGoodOnly),
            "not-almost-good" => Ok(Classification::NotAlmostGood),
            other => Err(format!("unknown verdict {other:?}")),
        }
    }
}

/// The pair of yes/no answers a classification amounts to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Goodness {
    pub almost_good: bool,
    pub almost_very_good: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<T> {
    pub classification: Classification,
    /// `dim(I − I¹) − 1 − dim Bun`, absent when `I − I¹` is empty.
    pub margin: Option<T>,
    /// Decomposition realizing `dim(I − I¹)`.
    pub witness: Option<Decomposition<T>>,
}

pub fn decide<T: Scalar>(a: &DimVector<T>, genus: u32) -> Result<Verdict<T>> {
    let excess = dim_inertia_excess(a, genus)?;
    let Some(best) = excess.0 else {
        return Ok(Verdict {
            classification: Classification::AlmostVeryGood,
            margin: None,
            witness: None,
        });
    };
    let margin = scalar::sub(scalar::sub(best.value, T::one())?, dim_bun(a, genus)?)?;
    Ok(Verdict {
        classification: Classification::from_margin(Some(margin)),
        margin: Some(margin),
        witness: Some(best.witness),
    })
}

/// Genus 0: very good iff `p(α) > Σ p(β)` for every decomposition into at
/// least two parts, good iff `p(α) ≥ Σ p(β)`.
pub fn check_g0<T: Scalar>(a: &DimVector<T>) -> Result<Goodness> {
    if a.rank().is_zero() {
        return Err(Error::ZeroRank);
    }
    let p_alpha = p(a)?;
    let mut worst: Option<T> = None;
    for dec in decompositions(a, 2, None)? {
        let sum = dec
            .parts()
            .iter()
            .try_fold(T::zero(), |acc, part| scalar::add(acc, p(part)?))?;
        worst = Some(worst.map_or(sum, |w| w.max(sum)));
    }
    Ok(match worst {
        None => Classification::AlmostVeryGood.goodness(),
        Some(sum) => Goodness {
            almost_good: p_alpha >= sum,
            almost_very_good: p_alpha > sum,
        },
    })
}

/// Genus 1: very good iff `1 − t + Σ_{l≠m} Σ_{i,j} (β⁽ˡ⁾_{ij} − β⁽ˡ⁾_{i,j+1}) β⁽ᵐ⁾_{i,j+1}`
/// is positive for every decomposition into `t ≥ 2` parts, good iff it is
/// nonnegative.
pub fn check_g1<T: Scalar>(a: &DimVector<T>) -> Result<Goodness> {
    if a.rank().is_zero() {
        return Err(Error::ZeroRank);
    }
    let mut least: Option<T> = None;
    for dec in decompositions(a, 2, None)? {
        let t: T = scalar::cast(dec.len())?;
        let value = scalar::add(scalar::sub(T::one(), t)?, flag_cross_terms(&dec)?)?;
        least = Some(least.map_or(value, |l| l.min(value)));
    }
    Ok(match least {
        None => Classification::AlmostVeryGood.goodness(),
        Some(value) => Goodness {
            almost_good: value >= T::zero(),
            almost_very_good: value > T::zero(),
        },
    })
}

/// `Σ_{l≠m} Σ_{i} Σ_{0≤j<w_i} (β⁽ˡ⁾_{ij} − β⁽ˡ⁾_{i,j+1}) β⁽ᵐ⁾_{i,j+1}` over ordered
/// pairs of distinct parts. Every term is nonnegative.
pub fn flag_cross_terms<T: Scalar>(dec: &Decomposition<T>) -> Result<T> {
    let parts = dec.parts();
    let mut acc = T::zero();
    for (l, bl) in parts.iter().enumerate() {
        for (m, bm) in parts.iter().enumerate() {
            if l == m {
                continue;
            }
            for i in 0..bl.num_points() {
                for j in 0..bl.flag_len(i) {
                    let drop = scalar::sub(bl.entry(i, j), bl.entry(i, j + 1))?;
                    acc = scalar::add(acc, scalar::mul(drop, bm.entry(i, j + 1))?)?;
                }
            }
        }
    }
    Ok(acc)
}

/// Genus at least 2: always almost very good, whatever the flags.
pub fn check_g_high<T: Scalar>(a: &DimVector<T>, genus: u32) -> Result<Classification> {
    if genus < 2 {
        return Err(Error::GenusTooLow(genus));
    }
    if a.rank().is_zero() {
        return Err(Error::ZeroRank);
    }
    Ok(Classification::AlmostVeryGood)
}
