//! Tensor-space realizations of the type AI and AII dualities between
//! ıquantum groups and specialized q-Brauer algebras.

mod action;
mod centralizer;
mod checks;
mod params;
mod qgroup;
mod tensor;

pub use action::{e_is_local, phi_element, phi_word, qbrauer_action, relations_check, representation_check, CheckResult};
pub use centralizer::{centralizer_dims, CentralizerDims, DEFAULT_MAX_TENSOR_DIM};
pub use checks::{
    aii_coproduct_check, classical_limit_check, commutation_check, qbrauer_generators, qgroup_relations_check,
};
pub use params::{DualityError, DualityType, ParamSet};
pub use qgroup::{
    aii_coproduct_b, b_operator, b_operator_on, iquantum_generators, qgroup_generator, qgroup_generator_on,
    rho_operator, Gen, NamedOperator,
};
pub use tensor::{all_words, TensorOperator, TensorVector, Word};
