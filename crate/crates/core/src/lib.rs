//! Finite T₀-spaces as finite posets: Stong cores, order complexes, integral
//! homology, fundamental-group triviality, isomorph-free enumeration and the
//! exhaustive searches built on them.

pub mod canon;
pub mod complex;
pub mod enumerate;
pub mod format;
pub mod homology;
pub mod homotopy;
pub mod pi1;
pub mod poset;
pub mod snf;
pub mod spaces;
pub mod verify;

pub use canon::{canonical_form, CanonicalForm};
pub use complex::{order_complex, OrderComplex, Simplex};
pub use format::PosetFile;
pub use homology::{HomologyGroup, HomologyProfile};
pub use homotopy::{core, is_contractible, Core};
pub use pi1::{is_homotopically_trivial, TrivialityVerdict};
pub use poset::{FinitePoset, PointSet, PosetError};
