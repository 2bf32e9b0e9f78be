//! Binomial ideals of linear codes and their deglex Groebner bases.
//!
//! An [n,k] linear code over F_q determines a binomial ideal: encode each
//! vector of F_q^n as a monomial in n(q-1) variables, take the binomials
//! x^up(a) - x^up(b) over all pairs with a - b in the code. A finite
//! generating set comes straight from a generator matrix (all scalar
//! multiples of its rows) together with the relations of the field's
//! additive table. The reduced Groebner basis of that ideal with respect
//! to deglex is computed by enumerating terms in increasing order and
//! detecting coset collisions; the basis then acts as a test set that
//! decodes any received word to a closest codeword, with brute-force
//! oracles validating every step at desk scale.
//!
//! The `codeal` binary exposes the pipeline: field construction, ideal
//! generation, basis computation, verification, and decoding.

pub mod cli;
pub mod code;
pub mod crossing;
pub mod decode;
pub mod field;
pub mod gbasis;
pub mod ideal;
pub mod samples;
pub mod textio;

pub use code::{distance, new_code, LinearCode, Syndrome};
pub use crossing::{down, up, CanonicalMonomial, FieldVector, Monomial, TermOrder};
pub use decode::{decode, decode_via_leader_map, DecodeResult};
pub use field::{build_field, FieldElement, FieldSpec};
pub use gbasis::{
    compute_reduced_gb, is_groebner, reduce, reduced_gb, verify_membership, GbOptions,
    GroebnerBasis,
};
pub use ideal::{assemble_generators, binomial_codeword, Binomial, GeneratorSet};
