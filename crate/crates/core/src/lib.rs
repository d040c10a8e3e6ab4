//! Numerical semigroup toolkit: Apéry-set based invariants, the interval
//! decomposition behind the Wilf inequality, executable checks of known
//! Wilf-type results and exhaustive enumeration by genus.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod poset;
pub mod profile;
pub mod semigroup;
pub mod verifiers;

pub use enumeration::{enumerate, enumerate_filtered, Enumerator, TreeNode, VerificationSummary};
pub use error::{Error, Result};
pub use poset::AperyPoset;
pub use profile::{eta_closed_form, type_bound_check, IntervalProfile, WilfReport};
pub use semigroup::Semigroup;
pub use verifiers::{GasSpec, LemmaFinding, LemmaId};
