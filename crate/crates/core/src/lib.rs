//! Linear codes over the rings `R_k = Z_m[v_1, ..., v_k]` with `v_i^2 = v_i`.
//!
//! Everything here is exact and desk-scale: codes are materialized as full
//! codeword sets, duals are found by scanning the ambient space, and weight
//! enumerator identities are checked over exact cyclotomic integers.
//!
//! The crate is organized bottom-up:
//!
//! - [`ring`]: arithmetic in `R_k`, elements stored as coefficient vectors
//!   indexed by subset bitmask.
//! - [`automorphism`]: the automorphisms `Theta_S` (flip `v_i -> 1 - v_i`) and
//!   `Phi` (index permutation), and the position permutations they induce on
//!   idempotent coordinates.
//! - [`gray`]: the idempotent decomposition `psi` (subset zeta transform) and
//!   the parametrized expansion maps `phi_j`.
//! - [`code`]: linear codes, duals, self-duality, component decomposition
//!   and distances.
//! - [`cyclotomic`] and [`weights`]: exact characters and the Hamming,
//!   complete and symmetrized MacWilliams identities.
//! - [`cyclic`]: quasi-cyclic and quasi-skew-cyclic checks and the
//!   constructive algorithm for quasi-skew-cyclic codes.
//! - [`format`]: JSON file schemas shared with the command-line tool.

pub mod automorphism;
pub mod code;
pub mod cyclic;
pub mod cyclotomic;
pub mod error;
pub mod format;
pub mod gray;
pub mod guard;
pub mod ring;
pub mod weights;

pub use automorphism::{AutomorphismSpec, InducedCoordinateMap, Permutation};
pub use code::{ComponentCodes, LinearCode};
pub use cyclotomic::{CyclotomicInt, CyclotomicRing};
pub use error::{Error, Result};
pub use gray::{Layout, PhiSpec, PsiImage};
pub use guard::Guard;
pub use ring::{RingSpec, RkElement, RkVector};
