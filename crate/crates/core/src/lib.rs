//! Combinatorial obstructions to convexity of neural codes.
//!
//! A neural code on `n` neurons is a set of codewords, subsets of `[n]`.
//! This crate builds the simplicial complex of a code, computes reduced
//! homology of links over GF(2) or the rationals, certifies contractibility
//! by strong collapse, and derives the mandatory codewords `M_H` and the
//! minimal convex code `C_min`. It also implements Stanley-Reisner ideals,
//! their Alexander duals, and the elementary code maps (permutation, trivial
//! neurons, duplication, projection, inclusion) together with checks that
//! these maps transform every object as expected.

pub mod codemaps;
pub mod codeword;
pub mod collapse;
pub mod complex;
pub mod error;
pub mod field;
pub mod homology;
pub mod linalg;
pub mod mandatory;
pub mod random;
pub mod sr;
pub mod suite;
pub mod verify;

pub use codemaps::{CodeMap, ElementaryMap, Permutation};
pub use codeword::{format_codeword, parse_codeword, Codeword, NeuralCode, NotationForm, MAX_NEURONS};
pub use collapse::{contractibility, strong_collapse_core, CollapseSequence, ContractibilityVerdict};
pub use complex::{delta, link, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use field::{FieldId, FieldScalar, Gf2};
pub use homology::{reduced_homology, HomologyProfile};
pub use linalg::{BitMatrix, Matrix};
pub use mandatory::{compute_cmin, compute_mh, CminReport, MandatorySet};
pub use random::random_code;
pub use sr::{alexander_dual, ideal_contains, permute_ideal, sr_ideal, MonomialIdeal};
pub use verify::{Check, Theorem, Verdict, VerificationReport, Verifier};

/// Exact rationals used for homology over `Q`.
pub type Rational = num_rational::BigRational;
/// Dense matrix over GF(2).
pub type Gf2Matrix = Matrix<Gf2>;
/// Dense matrix over the rationals.
pub type RationalMatrix = Matrix<Rational>;
