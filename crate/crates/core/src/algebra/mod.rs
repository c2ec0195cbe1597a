//! The q-Brauer algebra in its standard basis.

mod element;
mod engine;
mod label;
mod oracle;
mod relations;
mod words;

pub use element::AlgebraElement;
pub use engine::{AlgebraError, Letter, QBrauer};
pub use label::{diagram_label, parse_label};
pub use words::{basis_word, expand_letters, parse_word};
pub use oracle::{brauer_oracle_check, classical_limit, OracleMismatch, OracleReport};
pub use relations::{check_defining_relations, check_lemma_identities, check_relations_on_basis, defining_relations, Identity, RelationCheck};
