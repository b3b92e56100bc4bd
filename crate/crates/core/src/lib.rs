//! Dimensions of moduli stacks of quasi-parabolic vector bundles on a smooth
//! projective curve, and the decision whether such a stack is *almost good*
//! or *almost very good*.
//!
//! Everything is exact integer arithmetic over a generic [`Scalar`]
//! (any signed primitive integer); overflow is an error, never a wrap. The
//! aliases at the crate root fix the scalar to `i64`, which is what the
//! command-line front end uses.
//!
//! ```
//! use parbun::{decide, Classification, DimVector, WeightType};
//!
//! let wt = WeightType::new(vec![2, 2]).unwrap();
//! let alpha = DimVector::validate(2, vec![vec![1], vec![1]], &wt).unwrap();
//! let verdict = decide(&alpha, 1).unwrap();
//! assert_eq!(verdict.classification, Classification::AlmostVeryGood);
//! assert_eq!(verdict.margin, Some(-1));
//! ```

pub mod decomp;
pub mod dims;
pub mod dimvec;
pub mod error;
pub mod euler;
pub mod goodness;
pub mod grid;
pub mod oracle;
pub mod scalar;

pub use decomp::{count_decompositions, decompositions};
pub use dims::{
    dim_bun, dim_inertia_excess, dim_nilpotent_stack, dim_pairs_stack, maximize, stack_dims, Locus,
};
pub use dimvec::WeightType;
pub use error::{Error, Result};
pub use euler::{chi_hom, euler_form, p, q, sym_form};
pub use goodness::{check_g0, check_g1, check_g_high, decide, Classification, Goodness};
pub use scalar::Scalar;

pub type DimVector = dimvec::DimVector<i64>;
pub type SheafDatum = dimvec::SheafDatum<i64>;
pub type Decomposition = decomp::Decomposition<i64>;
pub type DimResult = dims::DimResult<i64>;
pub type StackDims = dims::StackDims<i64>;
pub type Verdict = goodness::Verdict<i64>;

/// Wide variants for inputs whose squared ranks do not fit in `i64`.
pub type DimVector128 = dimvec::DimVector<i128>;
pub type Verdict128 = goodness::Verdict<i128>;
