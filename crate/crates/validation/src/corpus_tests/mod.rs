//! Corpus-wide checks beyond the acceptance criteria.

mod duality;
mod weights_cyclic;
