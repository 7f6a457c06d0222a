//! Combinatorics of t-spread monomials.
//!
//! A square-free monomial `x_{i_1} x_{i_2} ... x_{i_d}` with `i_1 < ... < i_d`
//! is *t-spread* when consecutive indices differ by at least `t`. This crate
//! provides:
//!
//! - enumeration, ordering and counting of t-spread monomials ([`monomial`]),
//! - Macaulay binomial expansions and the successor operators that bound
//!   shadows of lex segments ([`expansion`]),
//! - lex segments, shadows and max-index statistics ([`lexset`]),
//! - t-spread ideals, their f_t-vectors and the t-spread lex ideal with the
//!   same f_t-vector ([`ideal`]),
//! - the Kruskal-Katona style feasibility test for f_t-vectors with witness
//!   construction ([`kk`]),
//! - brute-force oracles and cross-validation sweeps ([`oracle`], [`verify`]).
//!
//! All counting is exact; cardinalities use [`num_bigint::BigUint`].
//!
//! ```
//! use tspread::expansion::t_successor;
//! use num_bigint::BigUint;
//!
//! let bound = t_successor(&BigUint::from(2018u32), 8, 3, 28).unwrap();
//! assert_eq!(bound, BigUint::from(82u32));
//! ```

pub mod binomial;
pub mod error;
pub mod expansion;
pub mod ideal;
pub mod kk;
pub mod lexset;
pub mod monomial;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use expansion::{classic_successor, macaulay_expand, t_successor, MacaulayExpansion};
pub use ideal::{FtVector, Obstruction, TSpreadIdeal, TlexOutcome, TlexTrace};
pub use kk::{kk_check, kk_witness, FeasibilityReport};
pub use lexset::{LexSegment, MaxIndexProfile};
pub use monomial::{count_tspread, enumerate_tspread, Monomial, MonomialSet};
