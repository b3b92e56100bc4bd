//! The Euler form on dimension vectors and the quantities derived from it.

use crate::dimvec::{DimVector, SheafDatum};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// `⟨a, b⟩ = a₀b₀ + Σ_{i,j} (b_{i,j+1} − b_{ij}) a_{i,j+1}`.
///
/// The sum runs over `0 ≤ j < w_i`; the `j = w_i − 1` term always vanishes
/// because `a_{i,w_i} = 0`, so it is skipped.
pub fn euler_form<T: Scalar>(a: &DimVector<T>, b: &DimVector<T>) -> Result<T> {
    if !a.same_weight_type(b) {
        return Err(Error::WeightTypeMismatch);
    }
    let mut acc = scalar::mul(a.rank(), b.rank())?;
    for i in 0..a.num_points() {
        for j in 0..a.flag_len(i) - 1 {
            let step = scalar::sub(b.entry(i, j + 1), b.entry(i, j))?;
            acc = scalar::add(acc, scalar::mul(step, a.entry(i, j + 1))?)?;
        }
    }
    Ok(acc)
}

/// `q(a) = ⟨a, a⟩`.
pub fn q<T: Scalar>(a: &DimVector<T>) -> Result<T> {
    euler_form(a, a)
}

/// `p(a) = 1 − q(a)`.
pub fn p<T: Scalar>(a: &DimVector<T>) -> Result<T> {
    scalar::sub(T::one(), q(a)?)
}

/// Symmetrized Euler form `⟨a, b⟩ + ⟨b, a⟩`.
pub fn sym_form<T: Scalar>(a: &DimVector<T>, b: &DimVector<T>) -> Result<T> {
    scalar::add(euler_form(a, b)?, euler_form(b, a)?)
}

/// Euler characteristic of the sheaf of parabolic morphisms `F → E` on a
/// curve of the given genus, via Riemann–Roch:
/// `β₀·deg E − α₀·deg F − g·α₀β₀ + ⟨β, α⟩` where `β` is the dimension vector
/// of `F` and `α` that of `E`.
pub fn chi_hom<T: Scalar>(f: &SheafDatum<T>, e: &SheafDatum<T>, genus: u32) -> Result<T> {
    let (beta, alpha) = (&f.dimvec, &e.dimvec);
    if !beta.same_weight_type(alpha) {
        return Err(Error::WeightTypeMismatch);
    }
    let g: T = scalar::cast(genus)?;
    let mut acc = scalar::mul(beta.rank(), e.degree)?;
    acc = scalar::sub(acc, scalar::mul(alpha.rank(), f.degree)?)?;
    acc = scalar::sub(acc, scalar::mul(g, scalar::mul(alpha.rank(), beta.rank())?)?)?;
    scalar::add(acc, euler_form(beta, alpha)?)
}
