//! Exact classification of tempered representations with real infinitesimal
//! character, indexed by genuine `K̃`-types, for equal-rank real forms.

pub mod error;
pub mod group;
pub mod krep;
pub mod lattice;
pub mod linalg;
pub mod matching;
pub mod parabolic;
pub mod vogan;
pub mod weight;

pub use error::{Error, Result};
pub use group::{catalog, is_integral, load_descriptor, parse_descriptor, RealFormDescriptor, ValidationReport, CATALOG_NAMES};
pub use krep::{dirac_multiplicity, freudenthal, spin_weights, tensor_decompose, weyl_dim, IrreducibleKType, WeightMultiset};
pub use matching::{match_inverse, summarize, summarize_datum, ComponentSummary};
pub use parabolic::{build_parabolic, ThetaParabolic};
pub use vogan::{construct_from_kappa, enumerate, enumerate_norm_sq, ClassificationRun, EssentialVoganDatum};
pub use weight::{BilinearForm, SignedRootList, Weight, Q};
