//! shellkit decides shellability of simplicial complexes given nothing but
//! their facets, and enumerates or exactly counts all shellings. The same
//! machinery handles peelings of arbitrary set families and counting the
//! linear extensions of a poset.
//!
//! The engine never materializes the permutations it counts. For each
//! suffix facet k the admissible "potential setments" (index sets that may
//! precede k) form the model set of a small dual Horn formula, which is
//! solved into a handful of wildcard 012e-rows; a poset of setment-suffix
//! pairs compressed this way drives depth-first enumeration and a
//! level-by-level counting sweep with arbitrary-precision totals.
//!
//! Entry points:
//! - [`family::parse_facets`] / [`poset::parse_poset`] read the input
//!   formats, [`generators`] builds matroid and chessboard benchmark
//!   families.
//! - [`shelling::pss_rows`] and [`peeling::peeling_pss_rows`] compress the
//!   language; [`search`] enumerates and counts over either.
//! - [`cli::run`] wires everything into the `shellkit` command.
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability.

pub mod cli;
pub mod error;
pub mod family;
pub mod generators;
pub mod oracle;
mod parallel;
pub mod peeling;
pub mod poset;
pub mod rows;
pub mod search;
pub mod sets;
pub mod shelling;

pub use error::{Error, Result};
pub use family::{parse_facets, parse_facets_json, FacetFamily, Mode, Word};
pub use poset::{parse_poset, poset_to_ideals, Poset};
pub use rows::{solve_dual_horn, DualHornFormula, Row012e};
pub use search::{count_full_words, enumerate_full_words, max_partial_length};
pub use shelling::{classify, pss_rows, PssRowFamily};

/// Non-negative counts that outgrow machine words; shelling totals do.
pub type BigCount = num_bigint::BigUint;
