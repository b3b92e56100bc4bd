//! Dimensions of the moduli stack of parabolic bundles and of the stacks of
//! pairs attached to it.
//!
//! Each of the three endomorphism stacks has dimension equal to a closed-form
//! expression in some decomposition of the dimension vector. We take the
//! maximum of that expression over all decompositions with the right number
//! of parts and report the first maximizer in canonical enumeration order as
//! the witness. The grouping of parts by eigenvalue only enters through the
//! number of groups, which is largest when every part is its own group, so a
//! decomposition's contribution depends on its part count `t` alone.

use crate::decomp::{decompositions, Decomposition};
use crate::dimvec::DimVector;
use crate::error::{Error, Result};
use crate::euler::q;
use crate::scalar::{self, Scalar};

/// A maximum over decompositions together with its argmax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnessed<T> {
    pub value: T,
    pub witness: Decomposition<T>,
}

/// Outcome of a maximization; `None` when no decomposition qualifies, meaning
/// the corresponding locus is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimResult<T>(pub Option<Witnessed<T>>);

impl<T: Scalar> DimResult<T> {
    pub fn value(&self) -> Option<T> {
        self.0.as_ref().map(|w| w.value)
    }

    pub fn witness(&self) -> Option<&Decomposition<T>> {
        self.0.as_ref().map(|w| &w.witness)
    }

    fn offer(&mut self, value: T, dec: &Decomposition<T>) {
        if self.value().is_none_or(|best| value > best) {
            self.0 = Some(Witnessed {
                value,
                witness: dec.clone(),
            });
        }
    }
}

/// The stacks whose dimensions are decomposition maxima.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Locus {
    /// Pairs `(E, f)` with `f` a nilpotent parabolic endomorphism.
    Nilpotent,
    /// Pairs `(E, f)` with `f` any parabolic endomorphism.
    Pairs,
    /// Points of the inertia stack whose automorphism is not a scalar.
    InertiaExcess,
}

impl Locus {
    /// Fewest parts a contributing decomposition may have.
    pub fn min_parts(self) -> usize {
        match self {
            Locus::Nilpotent | Locus::Pairs => 1,
            Locus::InertiaExcess => 2,
        }
    }

    /// The closed-form dimension attached to one decomposition:
    /// `g·Σβ₀² − Σq(β)` for the nilpotent stack, plus the part count `t` for
    /// the other two.
    pub fn evaluate<T: Scalar>(self, dec: &Decomposition<T>, genus: u32) -> Result<T> {
        let g: T = scalar::cast(genus)?;
        let mut squares = T::zero();
        let mut qs = T::zero();
        for part in dec.parts() {
            squares = scalar::add(squares, scalar::mul(part.rank(), part.rank())?)?;
            qs = scalar::add(qs, q(part)?)?;
        }
        let nilpotent = scalar::sub(scalar::mul(g, squares)?, qs)?;
        match self {
            Locus::Nilpotent => Ok(nilpotent),
            Locus::Pairs | Locus::InertiaExcess => {
                scalar::add(scalar::cast(dec.len())?, nilpotent)
            }
        }
    }
}

/// All computed dimensions for one dimension vector and genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackDims<T> {
    pub genus: u32,
    pub dim_bun: T,
    pub dim_nilp: DimResult<T>,
    pub dim_pairs: DimResult<T>,
    pub dim_inertia_excess: DimResult<T>,
}

/// `dim Bun = g·α₀² − q(α)`.
pub fn dim_bun<T: Scalar>(a: &DimVector<T>, genus: u32) -> Result<T> {
    let g: T = scalar::cast(genus)?;
    scalar::sub(scalar::mul(g, scalar::mul(a.rank(), a.rank())?)?, q(a)?)
}

pub fn dim_nilpotent_stack<T: Scalar>(a: &DimVector<T>, genus: u32) -> Result<DimResult<T>> {
    maximize(a, genus, Locus::Nilpotent)
}

pub fn dim_pairs_stack<T: Scalar>(a: &DimVector<T>, genus: u32) -> Result<DimResult<T>> {
    maximize(a, genus, Locus::Pairs)
}

/// Dimension of the non-scalar part of the inertia stack; empty for rank 1.
pub fn dim_inertia_excess<T: Scalar>(a: &DimVector<T>, genus: u32) -> Result<DimResult<T>> {
    maximize(a, genus, Locus::InertiaExcess)
}

/// Maximum of `locus`'s formula over decompositions of `a`.
pub fn maximize<T: Scalar>(a: &DimVector<T>, genus: u32, locus: Locus) -> Result<DimResult<T>> {
    if a.rank().is_zero() {
        return Err(Error::ZeroRank);
    }
    let mut best = DimResult(None);
    for dec in decompositions(a, locus.min_parts(), None)? {
        best.offer(locus.evaluate(&dec, genus)?, &dec);
    }
    Ok(best)
}

/// All four dimensions from a single pass over the decompositions.
pub fn stack_dims<T: Scalar>(a: &DimVector<T>, genus: u32) -> Result<StackDims<T>> {
    if a.rank().is_zero() {
        return Err(Error::ZeroRank);
    }
    let mut dims = StackDims {
        genus,
        dim_bun: dim_bun(a, genus)?,
        dim_nilp: DimResult(None),
        dim_pairs: DimResult(None),
        dim_inertia_excess: DimResult(None),
    };
    for dec in decompositions(a, 1, None)? {
        let nilp = Locus::Nilpotent.evaluate(&dec, genus)?;
        let pairs = Locus::Pairs.evaluate(&dec, genus)?;
        dims.dim_nilp.offer(nilp, &dec);
        dims.dim_pairs.offer(pairs, &dec);
        if dec.len() >= 2 {
            dims.dim_inertia_excess.offer(pairs, &dec);
        }
    }
    Ok(dims)
}
