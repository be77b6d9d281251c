//! Quasi-cyclic code machinery over small finite fields.
//!
//! The crate builds up in five layers:
//!
//! * [`gf`] — arithmetic in GF(p^gamma) for q up to 2^16, with a
//!   deterministic choice of field modulus so that every run of every binary
//!   agrees on the encoding of each element;
//! * [`polyring`] — polynomials over GF(q) and the quotient ring
//!   F_q[x]/(x^m - 1), including the reciprocal/conjugation operators and
//!   dual-generator computations that drive everything downstream;
//! * [`matfq`] — dense matrices over GF(q): circulants, exact elimination,
//!   rank, row-space membership, kernels, and Gram matrices;
//! * [`qccode`] — quasi-cyclic codes presented by generator polynomials:
//!   self-orthogonality and dual-containment tests under the Euclidean,
//!   Hermitian, and symplectic inner products, dual constructions, and
//!   exhaustive minimum-distance enumeration;
//! * [`quantum`] — derived quantum codes: CSS and Hermitian/symplectic
//!   stabilizer parameters, and quantum synchronizable codes built from
//!   nested cyclic pairs.
//!
//! Everything is exact: no floating point is involved anywhere, and no
//! randomness is used outside explicitly seeded search routines. Structural
//! checks that cross-validate two independent computations of the same
//! object (formula vs. elimination, algebraic dual vs. kernel) are asserted
//! in debug builds and exercised by the test suite.
//!
//! # Example
//!
//! ```
//! use qckit::{ctx_new, InnerProduct, Poly, TwoGenQc};
//!
//! // A binary two-generator quasi-cyclic code of index 2 and length 12.
//! let ctx = ctx_new(2, 1).unwrap();
//! let g1 = Poly::parse(&ctx, "x^4+x^3+x+1").unwrap();
//! let g2 = Poly::parse(&ctx, "x^5+x^4+x^3+x^2+x+1").unwrap();
//! let v1 = Poly::parse(&ctx, "x^5").unwrap();
//! let v2 = Poly::parse(&ctx, "x^5+x").unwrap();
//! let code = TwoGenQc::new(6, g1, g2, v1, v2).unwrap();
//! assert_eq!(code.dimension().unwrap(), 3);
//! let (ok, _clauses) = code.so_conditions(InnerProduct::Symplectic).unwrap();
//! assert!(ok);
//! ```

pub mod error;
pub mod gf;
pub mod matfq;
pub mod polyring;
pub mod qccode;
pub mod quantum;

pub use error::{Error, Result};
pub use gf::{ctx_new, FieldCtx, FieldElem};
pub use matfq::{omega, MatFq};
pub use polyring::{
    cyclotomic_cosets, factor_xm_minus_1, ls_product, min_poly, CyclotomicCoset, Poly, RingElem,
};
pub use qccode::{
    block_to_interleaved, interleave_columns, interleaved_to_block, min_weight,
    min_weight_in_difference, Clause, CodewordIter, InnerProduct, LegacyCondition,
    SelfOrthogonality, TGenQc, TwoGenQc, WeightKind, DEFAULT_DISTANCE_BUDGET,
};
pub use quantum::{
    build_qsc_general, build_qsc_prime_power, css, euclidean_stabilizer, hermitian_stabilizer,
    qsc_from_chain, symplectic_stabilizer, CosetExponents, QscChain, StabilizerParams, SyncParams,
};
