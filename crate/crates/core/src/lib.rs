//! Apéry sets, Apéry tables and tangent cones of numerical semigroups.
//!
//! All arithmetic is exact on 63-bit non-negative integers; any overflow is
//! reported as [`Error::Overflow`].
//!
//! ```
//! use apery::{NumericalSemigroup, AperyTable, ConeDecomposition};
//!
//! let s = NumericalSemigroup::new(&[5, 6, 13]).unwrap();
//! let table = AperyTable::new(&s).unwrap();
//! assert_eq!(table.reduction_number(), 4);
//! let dec = ConeDecomposition::from_table(&table);
//! assert_eq!(dec.torsion, vec![(1, 1), (2, 1)]);
//! assert_eq!(dec.hilbert_series().numerator, vec![1, 2, 1, 0, 1]);
//! ```

pub mod cone;
pub mod error;
pub mod families;
pub mod oracle;
pub mod par;
pub mod semigroup;
pub mod table;
pub mod verify;

pub use cone::{
    cone_decomposition, hilbert_function_from_series, hilbert_series, is_cohen_macaulay, is_free,
    ladder_profile, ladder_profiles, ConeDecomposition, HilbertSeries, LadderProfile, Landing,
};
pub use error::{Error, Result, MAX_VALUE};
pub use families::{
    arslan, bresinsky, ArslanParams, Block, BlockElement, BresinskyParams, Family, FamilyParams,
    FamilyTable, OrderCensus,
};
pub use par::Execution;
pub use semigroup::{new_semigroup, AperySet, Factorization, NumericalSemigroup, OrderTable};
pub use table::{apery_table, hilbert_function, reduction_number, AperyTable};
pub use verify::{full_verify, verify_family_range, Check, FormulaDelta, VerificationReport};
