//! Quasi-cyclic and quasi-skew-cyclic codes.
//!
//! `sigma_d` shifts each of `d` contiguous blocks right by one; a code is
//! quasi-cyclic of index `d` when `sigma_d(C) = C`. The skew shift
//! `T_theta` rotates the whole word right by one symbol and applies `theta`
//! to every symbol; a code is quasi-`theta`-cyclic of index `d` when
//! `T_theta^d(C)` is contained in `C`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::automorphism::{apply, induced_map, AutomorphismSpec, InducedCoordinateMap};
use crate::code::{ComponentCodes, LinearCode};
use crate::error::{Error, Result};
use crate::gray::{phi_chain, phi_vec, psi_vec, Layout, PhiSpec};
use crate::guard::Guard;
use crate::ring::{RingSpec, RkVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftSpec {
    n: usize,
    d: usize,
}

impl ShiftSpec {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::invalid(format!("index {d} does not divide length {n}")));
        }
        Ok(ShiftSpec { n, d })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn index(&self) -> usize {
        self.d
    }

    pub fn block_len(&self) -> usize {
        self.n / self.d
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewShiftSpec {
    shift: ShiftSpec,
    theta: AutomorphismSpec,
}

impl SkewShiftSpec {
    pub fn new(n: usize, d: usize, theta: AutomorphismSpec) -> Result<Self> {
        Ok(SkewShiftSpec {
            shift: ShiftSpec::new(n, d)?,
            theta,
        })
    }

    pub fn shift(&self) -> ShiftSpec {
        self.shift
    }

    pub fn theta(&self) -> &AutomorphismSpec {
        &self.theta
    }
}

/// Outcome of a structural check. `witness` is a codeword whose image
/// leaves the code when `verdict` is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub inputs: BTreeMap<String, String>,
    pub verdict: bool,
    pub witness: Option<Vec<Vec<u32>>>,
}

impl Verdict {
    fn new(check: &str, inputs: &[(&str, String)]) -> Self {
        Verdict {
            check: check.into(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            verdict: true,
            witness: None,
        }
    }

    fn fail(mut self, w: &RkVector) -> Self {
        self.verdict = false;
        self.witness = Some(w.entries().iter().map(|e| e.coeffs().to_vec()).collect());
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict
    }
}

/// Rotates right by `s`: entry `i` moves to `(i + s) mod len`.
pub fn rotate_right<T: Clone>(items: &[T], s: usize) -> Vec<T> {
    let n = items.len();
    if n == 0 {
        return Vec::new();
    }
    let s = s % n;
    let mut out = items[n - s..].to_vec();
    out.extend_from_slice(&items[..n - s]);
    out
}

pub fn sigma_d(spec: ShiftSpec, w: &RkVector) -> Result<RkVector> {
    if w.len() != spec.n {
        return Err(Error::LengthMismatch {
            expected: spec.n,
            got: w.len(),
        });
    }
    let blk = spec.block_len();
    let entries = w
        .entries()
        .chunks(blk.max(1))
        .flat_map(|b| rotate_right(b, 1))
        .collect();
    Ok(RkVector::from_raw(w.ring(), entries))
}

pub fn is_quasi_cyclic(code: &LinearCode, d: usize) -> Result<Verdict> {
    let spec = ShiftSpec::new(code.len(), d)?;
    let v = Verdict::new(
        "quasi-cyclic",
        &[("ring", code.ring().to_string()), ("n", spec.n.to_string()), ("d", d.to_string())],
    );
    for c in code.codewords() {
        if !code.contains(&sigma_d(spec, c)?) {
            return Ok(v.fail(c));
        }
    }
    Ok(v)
}

pub fn is_cyclic(code: &LinearCode) -> Result<Verdict> {
    is_quasi_cyclic(code, 1)
}

/// One application of `T_theta`: `(theta(c_{n-1}), theta(c_0), ...)`.
pub fn skew_shift_once(theta: &AutomorphismSpec, w: &RkVector) -> RkVector {
    let rotated = rotate_right(w.entries(), 1);
    RkVector::from_raw(w.ring(), rotated.iter().map(|a| apply(theta, a)).collect())
}

/// `T_theta^d`, the `d`-th iterate of [`skew_shift_once`].
pub fn skew_shift(spec: &SkewShiftSpec, w: &RkVector) -> Result<RkVector> {
    if w.len() != spec.shift.n {
        return Err(Error::LengthMismatch {
            expected: spec.shift.n,
            got: w.len(),
        });
    }
    if spec.theta.k() != w.ring().k() {
        return Err(Error::invalid(format!(
            "automorphism on k = {} applied over {}",
            spec.theta.k(),
            w.ring()
        )));
    }
    Ok((0..spec.shift.d).fold(w.clone(), |acc, _| skew_shift_once(&spec.theta, &acc)))
}

fn skew_inputs(code: &LinearCode, spec: &SkewShiftSpec) -> Vec<(&'static str, String)> {
    vec![
        ("ring", code.ring().to_string()),
        ("n", spec.shift.n.to_string()),
        ("d", spec.shift.d.to_string()),
        ("theta", spec.theta.to_string()),
    ]
}

fn check_skew_spec(code: &LinearCode, spec: &SkewShiftSpec) -> Result<()> {
    if code.len() != spec.shift.n {
        return Err(Error::LengthMismatch {
            expected: code.len(),
            got: spec.shift.n,
        });
    }
    if spec.theta.k() != code.ring().k() {
        return Err(Error::invalid(format!(
            "automorphism on k = {} applied over {}",
            spec.theta.k(),
            code.ring()
        )));
    }
    Ok(())
}

/// `T_theta^d(c) in C` for every codeword `c`.
pub fn is_quasi_skew_cyclic(code: &LinearCode, spec: &SkewShiftSpec) -> Result<Verdict> {
    check_skew_spec(code, spec)?;
    let v = Verdict::new("quasi-skew-cyclic", &skew_inputs(code, spec));
    for c in code.codewords() {
        if !code.contains(&skew_shift(spec, c)?) {
            return Ok(v.fail(c));
        }
    }
    Ok(v)
}

/// The same property read on interleaved idempotent coordinates: apply the
/// position map of `theta^d` inside every symbol block, then rotate the
/// length-`n 2^k` word right by `d 2^k`, and test membership in the image.
pub fn psi_image_check(code: &LinearCode, spec: &SkewShiftSpec) -> Result<Verdict> {
    check_skew_spec(code, spec)?;
    let ring = code.ring();
    let width = ring.width();
    let rho = induced_map(&spec.theta, ring)?.pow(spec.shift.d);
    let image: BTreeSet<Vec<u32>> = code
        .codewords()
        .map(|c| psi_vec(c, Layout::Interleaved))
        .collect();
    let v = Verdict::new("psi-image-skew", &skew_inputs(code, spec));
    for c in code.codewords() {
        let y = psi_vec(c, Layout::Interleaved);
        let mapped: Vec<u32> = y.chunks(width).flat_map(|b| rho.apply(b)).collect();
        if !image.contains(&rotate_right(&mapped, spec.shift.d * width)) {
            return Ok(v.fail(c));
        }
    }
    Ok(v)
}

/// A code built from components together with its certificate.
#[derive(Clone, Debug)]
pub struct Construction {
    pub code: LinearCode,
    pub certificate: Verdict,
}

fn rotate_residues(w: &RkVector, s: usize) -> RkVector {
    RkVector::from_raw(w.ring(), rotate_right(w.entries(), s))
}

/// Builds a quasi-`theta`-cyclic code of index `d` from `2^k` component
/// codes over `Z_m`, indexed by idempotent position.
///
/// Preconditions, all checked and reported together:
/// - every component is invariant under rotation by `d ord(pi)`, where `pi`
///   is the index permutation of `theta`;
/// - rotating component `i` by `d` lands inside component `rho^d(i)`, where
///   `rho` is the position map induced by `theta`.
///
/// The composed code is then certified with [`is_quasi_skew_cyclic`].
pub fn algorithm1_construct(
    ring: RingSpec,
    n: usize,
    d: usize,
    theta: &AutomorphismSpec,
    components: &ComponentCodes,
    guard: Guard,
) -> Result<Construction> {
    let spec = SkewShiftSpec::new(n, d, theta.clone())?;
    if components.ring() != ring {
        return Err(Error::RingMismatch {
            left: ring,
            right: components.ring(),
        });
    }
    if components.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: components.len(),
        });
    }
    let rho: InducedCoordinateMap = induced_map(theta, ring)?.pow(d);
    let period = d * theta.perm().order();
    let comps = components.components();
    let mut violations = Vec::new();
    for (i, ci) in comps.iter().enumerate() {
        if let Some(w) = ci.codewords().find(|w| !ci.contains(&rotate_residues(w, period))) {
            violations.push(format!(
                "component {i} is not invariant under rotation by {period}: {w} leaves it"
            ));
        }
        let j = rho.target()[i];
        if let Some(w) = ci.codewords().find(|w| !comps[j].contains(&rotate_residues(w, d))) {
            violations.push(format!(
                "rotation by {d} of component {i} is not contained in component {j}: image of {w}"
            ));
        }
    }
    if !violations.is_empty() {
        return Err(Error::Precondition(violations));
    }
    let code = components.compose(guard)?;
    let certificate = is_quasi_skew_cyclic(&code, &spec)?;
    if !certificate.holds() {
        return Err(Error::Certification(format!(
            "composed code is not quasi-{theta}-cyclic of index {d}"
        )));
    }
    Ok(Construction { code, certificate })
}

fn image_code(ring: RingSpec, n: usize, words: BTreeSet<RkVector>, guard: Guard) -> Result<LinearCode> {
    LinearCode::from_codewords(ring, n, words, guard)
}

/// Quasi-cyclicity of `phi_j(C)` with index `l_j d` over `R_{j-1}`.
pub fn phi_image_quasicyclic_check(code: &LinearCode, spec: &PhiSpec, d: usize, guard: Guard) -> Result<Verdict> {
    ShiftSpec::new(code.len(), d)?;
    let words = code
        .codewords()
        .map(|c| phi_vec(spec, c))
        .collect::<Result<BTreeSet<_>>>()?;
    let image = image_code(spec.codomain(), code.len() * spec.len(), words, guard)?;
    let mut v = is_quasi_cyclic(&image, spec.len() * d)?;
    v.check = "phi-image-quasi-cyclic".into();
    v.inputs.insert("l".into(), spec.len().to_string());
    v.inputs.insert("source_d".into(), d.to_string());
    Ok(v)
}

/// Quasi-cyclicity of the full chain image over `Z_m` with index
/// `l_1 ... l_k d`.
pub fn phi_chain_quasicyclic_check(code: &LinearCode, specs: &[PhiSpec], d: usize, guard: Guard) -> Result<Verdict> {
    ShiftSpec::new(code.len(), d)?;
    let words = code
        .codewords()
        .map(|c| phi_chain(specs, c))
        .collect::<Result<BTreeSet<_>>>()?;
    let factor: usize = specs.iter().map(PhiSpec::len).product();
    let image = image_code(code.ring().base(), code.len() * factor, words, guard)?;
    let mut v = is_quasi_cyclic(&image, factor * d)?;
    v.check = "phi-chain-quasi-cyclic".into();
    v.inputs.insert("source_d".into(), d.to_string());
    Ok(v)
}
