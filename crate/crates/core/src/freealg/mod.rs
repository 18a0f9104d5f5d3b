//! Symbolic kernel for the canonical representative `U(L(a))`: the free
//! associative algebra on a graded alphabet whose letters are primitive.
//!
//! Every operation is degree-local. `H_n` has dimension `invert(a)[n]`, which
//! grows exponentially, so callers bound the working degree explicitly.

mod embed;
mod hopf;
mod morphism;
mod opg;
mod poly;

pub use embed::{embed_subalgebra, generated_dimensions, Embedding};
pub use hopf::{
    coproduct, decomposable_span, derived_basis, eulerian_idempotent, evaluate_bracket, is_primitive,
    lyndon_lie_basis, lyndon_lie_basis_with_words, primitive_space_basis, primitive_space_basis_with,
    reduced_coproduct, MultiTensor,
};
pub use morphism::{build_surjection, AlgebraMap, Surjection};
pub use opg::{opg_from_matrices, verify_opg, MatrixSeq, OpgFailure, OpgVerdict, OrderedPrimGenSet};
pub use poly::{NcPoly, TensorElement};
