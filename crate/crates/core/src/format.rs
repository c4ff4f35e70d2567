//! JSON file schemas.
//!
//! Ring elements are written as coefficient lists indexed by subset bitmask
//! (`[a_0, a_{v1}, a_{v2}, a_{v1 v2}, ...]`); coefficients may be negative
//! and are reduced mod `m`. A code file looks like
//!
//! ```json
//! { "m": 4, "k": 1, "n": 2, "generators": [[[0, 1], [1, -1]]] }
//! ```

use serde::{Deserialize, Serialize};

use crate::automorphism::AutomorphismSpec;
use crate::code::{ComponentCodes, LinearCode};
use crate::error::{Error, Result};
use crate::gray::PhiSpec;
use crate::guard::Guard;
use crate::ring::{RingSpec, RkElement, RkVector};

fn element(ring: RingSpec, coeffs: &[i64]) -> Result<RkElement> {
    ring.element_signed(coeffs)
}

fn vector(ring: RingSpec, n: usize, symbols: &[Vec<i64>]) -> Result<RkVector> {
    if symbols.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: symbols.len(),
        });
    }
    let entries = symbols.iter().map(|s| element(ring, s)).collect::<Result<Vec<_>>>()?;
    RkVector::new(ring, entries)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub m: u32,
    pub k: u32,
    pub n: usize,
    pub generators: Vec<Vec<Vec<i64>>>,
}

impl CodeFile {
    pub fn ring(&self) -> Result<RingSpec> {
        RingSpec::new(self.m, self.k)
    }

    pub fn generator_vectors(&self) -> Result<Vec<RkVector>> {
        let ring = self.ring()?;
        self.generators.iter().map(|g| vector(ring, self.n, g)).collect()
    }

    pub fn to_code(&self, guard: Guard) -> Result<LinearCode> {
        LinearCode::span(self.ring()?, self.n, self.generator_vectors()?, guard)
    }

    pub fn from_code(code: &LinearCode) -> Self {
        CodeFile {
            m: code.ring().m(),
            k: code.ring().k(),
            n: code.len(),
            generators: code
                .generators()
                .iter()
                .map(|g| {
                    g.entries()
                        .iter()
                        .map(|e| e.coeffs().iter().map(|&c| c as i64).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

/// `{"flip": [1], "perm": [2, 1]}`: `Theta_S` with `S` given by 1-based
/// indices, after `Phi_pi` with `pi` in one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismFile {
    #[serde(default)]
    pub flip: Vec<u32>,
    #[serde(default)]
    pub perm: Option<Vec<u32>>,
}

impl AutomorphismFile {
    pub fn to_spec(&self, k: u32) -> Result<AutomorphismSpec> {
        AutomorphismSpec::from_lists(k, &self.flip, self.perm.as_deref())
    }
}

/// `{"beta": [[2]], "beta_prime": [[1]]}` for `phi_1` with `l = 2`.
/// Entries of `beta` live in `R_{level-1}`; `level` defaults to the `k` of
/// the ring the map is applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiSpecFile {
    #[serde(default)]
    pub level: Option<u32>,
    #[serde(default)]
    pub l: Option<usize>,
    pub beta: Vec<Vec<i64>>,
    pub beta_prime: Vec<Vec<i64>>,
}

impl PhiSpecFile {
    pub fn to_spec(&self, domain: RingSpec) -> Result<PhiSpec> {
        let level = self.level.unwrap_or(domain.k());
        if level == 0 || level > domain.k() {
            return Err(Error::invalid(format!("phi level {level} does not fit {domain}")));
        }
        let lower = RingSpec::new(domain.m(), level - 1)?;
        let beta = self.beta.iter().map(|c| element(lower, c)).collect::<Result<Vec<_>>>()?;
        let beta_prime = self
            .beta_prime
            .iter()
            .map(|c| element(lower, c))
            .collect::<Result<Vec<_>>>()?;
        let spec = PhiSpec::new(level, beta, beta_prime)?;
        if let Some(l) = self.l {
            if l != spec.len() {
                return Err(Error::invalid(format!(
                    "l = {l} but beta has {} entries (l = {})",
                    self.beta.len(),
                    spec.len()
                )));
            }
        }
        Ok(spec)
    }

    pub fn from_spec(spec: &PhiSpec) -> Self {
        let lists = |xs: &[RkElement]| xs.iter().map(|e| e.coeffs().iter().map(|&c| c as i64).collect()).collect();
        PhiSpecFile {
            level: Some(spec.level()),
            l: Some(spec.len()),
            beta: lists(spec.beta()),
            beta_prime: lists(spec.beta_prime()),
        }
    }
}

/// `2^k` component codes over `Z_m`, each given by residue generator vectors
/// of length `n`, listed by idempotent position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentsFile {
    pub m: u32,
    pub k: u32,
    pub n: usize,
    pub components: Vec<Vec<Vec<i64>>>,
}

impl ComponentsFile {
    pub fn to_components(&self, guard: Guard) -> Result<ComponentCodes> {
        let ring = RingSpec::new(self.m, self.k)?;
        let base = ring.base();
        let codes = self
            .components
            .iter()
            .map(|gens| {
                let vecs = gens
                    .iter()
                    .map(|g| {
                        let symbols: Vec<Vec<i64>> = g.iter().map(|&x| vec![x]).collect();
                        vector(base, self.n, &symbols)
                    })
                    .collect::<Result<Vec<_>>>()?;
                LinearCode::span(base, self.n, vecs, guard)
            })
            .collect::<Result<Vec<_>>>()?;
        ComponentCodes::new(ring, codes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableExpectation {
    pub lee_distance: usize,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRow {
    pub label: String,
    pub code: CodeFile,
    pub phi: PhiSpecFile,
    pub expected: TableExpectation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub title: String,
    pub rows: Vec<TableRow>,
}

/// Recomputed values of one table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableOutcome {
    pub label: String,
    pub image_length: usize,
    pub lee_distance: usize,
    pub size: usize,
    pub expected: TableExpectation,
    pub matches: bool,
}

impl TableRow {
    /// Applies the map to every codeword and measures the image over the
    /// lower ring.
    pub fn evaluate(&self, guard: Guard) -> Result<TableOutcome> {
        let code = self.code.to_code(guard)?;
        let spec = self.phi.to_spec(code.ring())?;
        let words = code
            .codewords()
            .map(|c| crate::gray::phi_vec(&spec, c))
            .collect::<Result<std::collections::BTreeSet<_>>>()?;
        let image = LinearCode::from_codewords(spec.codomain(), code.len() * spec.len(), words, guard)?;
        let lee_distance = image.lee_distance()?;
        let size = image.size();
        Ok(TableOutcome {
            label: self.label.clone(),
            image_length: image.len(),
            lee_distance,
            size,
            matches: lee_distance == self.expected.lee_distance && size == self.expected.size,
            expected: self.expected.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_file_roundtrip() {
        let text = r#"{"m": 4, "k": 1, "n": 2, "generators": [[[0, 1], [1, -1]], [[1, -1], [0, 1]]]}"#;
        let file: CodeFile = serde_json::from_str(text).unwrap();
        let code = file.to_code(Guard::default()).unwrap();
        assert_eq!(code.size(), 256);
        let again = CodeFile::from_code(&code);
        assert_eq!(again.generators[0], vec![vec![0, 1], vec![1, 3]]);
        assert_eq!(again.to_code(Guard::default()).unwrap(), code);
    }

    #[test]
    fn code_file_errors() {
        let short = r#"{"m": 4, "k": 1, "n": 2, "generators": [[[0, 1]]]}"#;
        let file: CodeFile = serde_json::from_str(short).unwrap();
        assert!(matches!(file.to_code(Guard::default()), Err(Error::LengthMismatch { .. })));
        let wide = r#"{"m": 4, "k": 1, "n": 1, "generators": [[[0, 1, 1]]]}"#;
        let file: CodeFile = serde_json::from_str(wide).unwrap();
        assert!(file.to_code(Guard::default()).is_err());
        assert!(serde_json::from_str::<CodeFile>(r#"{"m": 4}"#).is_err());
    }

    #[test]
    fn phi_file() {
        let r = RingSpec::new(4, 1).unwrap();
        let f: PhiSpecFile = serde_json::from_str(r#"{"beta": [[0], [1]], "beta_prime": [[1], [1]]}"#).unwrap();
        let spec = f.to_spec(r).unwrap();
        assert_eq!(spec.len(), 3);
        assert_eq!(PhiSpecFile::from_spec(&spec).to_spec(r).unwrap(), spec);
        let bad: PhiSpecFile = serde_json::from_str(r#"{"l": 4, "beta": [[0]], "beta_prime": [[1]]}"#).unwrap();
        assert!(bad.to_spec(r).is_err());
    }

    #[test]
    fn automorphism_file() {
        let f: AutomorphismFile = serde_json::from_str(r#"{"flip": [1], "perm": [2, 1]}"#).unwrap();
        let spec = f.to_spec(2).unwrap();
        assert_eq!(spec.flip_list(), vec![1]);
        assert_eq!(spec.perm().one_based(), vec![2, 1]);
        let id: AutomorphismFile = serde_json::from_str("{}").unwrap();
        assert!(id.to_spec(1).unwrap().is_identity());
    }

    #[test]
    fn components_file() {
        let f: ComponentsFile =
            serde_json::from_str(r#"{"m": 2, "k": 1, "n": 2, "components": [[[1, 1]], [[1, 1]]]}"#).unwrap();
        let comps = f.to_components(Guard::default()).unwrap();
        assert_eq!(comps.compose(Guard::default()).unwrap().size(), 4);
    }
}
