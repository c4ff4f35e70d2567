//! Ring automorphisms of `R_k` built from `Theta_S` and `Phi_pi`.
//!
//! `Theta_S` substitutes `v_i -> 1 - v_i` for every `i in S`; `Phi_pi`
//! relabels `v_t -> v_{pi(t)}`. Over `Z_m` the base-ring automorphism is
//! always the identity, so both act on idempotent coordinates as pure
//! position permutations: `Theta_S` moves position `U` to `U xor S` and
//! `Phi_pi` moves `U` to `pi(U)`.
//!
//! An [`AutomorphismSpec`] is the canonical composite `Theta_S . Phi_pi`
//! (apply `Phi_pi` first). Any word in the two kinds of maps reduces to this
//! form because `Phi_pi . Theta_S = Theta_{pi(S)} . Phi_pi`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gray::{psi, psi_inv, PsiImage};
use crate::ring::{RingSpec, RkElement};

/// A permutation of `{1..k}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: u32) -> Self {
        Permutation {
            images: (0..k as usize).collect(),
        }
    }

    /// Builds a permutation from its 1-based image list, `images[t-1] = pi(t)`.
    pub fn from_one_based(images: &[u32]) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        let mut zero_based = Vec::with_capacity(k);
        for &img in images {
            let t = img as usize;
            if t == 0 || t > k || seen[t - 1] {
                return Err(Error::invalid(format!("{images:?} is not a permutation of 1..{k}")));
            }
            seen[t - 1] = true;
            zero_based.push(t - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// The transposition of `i` and `j` (1-based) on `{1..k}`.
    pub fn swap(k: u32, i: u32, j: u32) -> Result<Self> {
        if i == 0 || j == 0 || i > k || j > k {
            return Err(Error::invalid(format!("swap({i},{j}) out of range for k = {k}")));
        }
        let mut p = Permutation::identity(k);
        p.images.swap(i as usize - 1, j as usize - 1);
        Ok(p)
    }

    pub fn k(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn one_based(&self) -> Vec<u32> {
        self.images.iter().map(|&t| t as u32 + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(t, &img)| t == img)
    }

    /// `pi(U) = { pi(t) : t in U }` on bitmasks.
    pub fn apply_mask(&self, mask: usize) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(t, _)| mask >> t & 1 == 1)
            .fold(0, |acc, (_, &img)| acc | 1 << img)
    }

    /// `self . inner`.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        Permutation {
            images: inner.images.iter().map(|&t| self.images[t]).collect(),
        }
    }

    /// Least `t >= 1` with `pi^t = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        let k = self.images.len();
        let mut visited = vec![false; k];
        let mut order = 1;
        for start in 0..k {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut t = start;
            while !visited[t] {
                visited[t] = true;
                t = self.images[t];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }
}

fn lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// `Theta_S . Phi_pi` with `S` a bitmask over `{1..k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AutomorphismSpec {
    flip: usize,
    perm: Permutation,
}

impl AutomorphismSpec {
    pub fn identity(k: u32) -> Self {
        AutomorphismSpec {
            flip: 0,
            perm: Permutation::identity(k),
        }
    }

    pub fn new(flip: usize, perm: Permutation) -> Result<Self> {
        if flip >> perm.k() != 0 {
            return Err(Error::invalid(format!(
                "flip set {flip:#b} not contained in {{1..{}}}",
                perm.k()
            )));
        }
        Ok(AutomorphismSpec { flip, perm })
    }

    /// From a 1-based flip list and an optional 1-based permutation image list.
    pub fn from_lists(k: u32, flip: &[u32], perm: Option<&[u32]>) -> Result<Self> {
        let perm = match perm {
            Some(p) => Permutation::from_one_based(p)?,
            None => Permutation::identity(k),
        };
        if perm.k() != k {
            return Err(Error::invalid(format!(
                "permutation acts on {} indices, ring has k = {k}",
                perm.k()
            )));
        }
        let mut mask = 0;
        for &i in flip {
            if i == 0 || i > k {
                return Err(Error::invalid(format!("flip index {i} out of range 1..{k}")));
            }
            mask |= 1 << (i - 1);
        }
        AutomorphismSpec::new(mask, perm)
    }

    /// `Theta_S` alone.
    pub fn theta(k: u32, flip: usize) -> Result<Self> {
        AutomorphismSpec::new(flip, Permutation::identity(k))
    }

    /// `Phi_pi` alone.
    pub fn phi(perm: Permutation) -> Self {
        AutomorphismSpec { flip: 0, perm }
    }

    pub fn k(&self) -> u32 {
        self.perm.k()
    }

    pub fn flip(&self) -> usize {
        self.flip
    }

    pub fn flip_list(&self) -> Vec<u32> {
        (0..self.k()).filter(|b| self.flip >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.flip == 0 && self.perm.is_identity()
    }

    /// The canonical form of `self . inner`.
    pub fn compose(&self, inner: &AutomorphismSpec) -> AutomorphismSpec {
        AutomorphismSpec {
            flip: self.flip ^ self.perm.apply_mask(inner.flip),
            perm: self.perm.compose(&inner.perm),
        }
    }

    pub fn pow(&self, e: usize) -> AutomorphismSpec {
        (0..e).fold(AutomorphismSpec::identity(self.k()), |acc, _| self.compose(&acc))
    }

    /// Order of the automorphism in the automorphism group.
    pub fn order(&self) -> usize {
        let mut cur = self.clone();
        let mut t = 1;
        while !cur.is_identity() {
            cur = self.compose(&cur);
            t += 1;
        }
        t
    }
}

impl fmt::Display for AutomorphismSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Theta{:?}.Phi{:?}", self.flip_list(), self.perm.one_based())
    }
}

/// `Theta_S(a)`, one index of `S` at a time via `v_U -> v_{U \ i} - v_U`.
pub fn apply_theta(flip: usize, a: &RkElement) -> RkElement {
    let ring = a.ring();
    let m = ring.m() as u64;
    let mut x = a.coeffs().to_vec();
    for b in 0..ring.k() {
        let bit = 1usize << b;
        if flip & bit == 0 {
            continue;
        }
        for mask in 0..x.len() {
            if mask & bit != 0 {
                let c = x[mask] as u64;
                x[mask ^ bit] = ((x[mask ^ bit] as u64 + c) % m) as u32;
                x[mask] = ((m - c) % m) as u32;
            }
        }
    }
    RkElement::from_raw(ring, x)
}

/// `Phi_pi(a)`: the coefficient of `v_U` moves to `v_{pi(U)}`.
pub fn apply_phi(perm: &Permutation, a: &RkElement) -> RkElement {
    let mut out = vec![0; a.coeffs().len()];
    for (mask, &c) in a.coeffs().iter().enumerate() {
        out[perm.apply_mask(mask)] = c;
    }
    RkElement::from_raw(a.ring(), out)
}

/// `Theta_S(Phi_pi(a))`.
pub fn apply(spec: &AutomorphismSpec, a: &RkElement) -> RkElement {
    debug_assert_eq!(spec.k(), a.ring().k());
    apply_theta(spec.flip, &apply_phi(&spec.perm, a))
}

/// A permutation of the `2^k` idempotent coordinate positions: position `i`
/// of the input lands at `target[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedCoordinateMap {
    target: Vec<usize>,
}

impl InducedCoordinateMap {
    pub fn identity(width: usize) -> Self {
        InducedCoordinateMap {
            target: (0..width).collect(),
        }
    }

    pub fn target(&self) -> &[usize] {
        &self.target
    }

    pub fn width(&self) -> usize {
        self.target.len()
    }

    pub fn apply<T: Copy + Default>(&self, coords: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); coords.len()];
        for (i, &c) in coords.iter().enumerate() {
            out[self.target[i]] = c;
        }
        out
    }

    /// `self . inner`.
    pub fn compose(&self, inner: &InducedCoordinateMap) -> InducedCoordinateMap {
        InducedCoordinateMap {
            target: inner.target.iter().map(|&j| self.target[j]).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> InducedCoordinateMap {
        (0..e).fold(InducedCoordinateMap::identity(self.width()), |acc, _| self.compose(&acc))
    }
}

/// The position permutation `rho` with `psi(spec(a)) = rho(psi(a))`, found by
/// conjugating with `psi` on every one-hot probe `c e_i`.
pub fn induced_map(spec: &AutomorphismSpec, ring: RingSpec) -> Result<InducedCoordinateMap> {
    if spec.k() != ring.k() {
        return Err(Error::invalid(format!(
            "automorphism on k = {} applied to {ring}",
            spec.k()
        )));
    }
    let width = ring.width();
    let mut target = vec![usize::MAX; width];
    for (i, slot) in target.iter_mut().enumerate() {
        for c in 1..ring.m() {
            let mut probe = vec![0; width];
            probe[i] = c;
            let a = psi_inv(&PsiImage::new(ring, probe)?);
            let image = psi(&apply(spec, &a));
            let support: Vec<usize> = (0..width).filter(|&j| image.coords()[j] != 0).collect();
            match support.as_slice() {
                [j] if image.coords()[*j] == c && (*slot == usize::MAX || *slot == *j) => *slot = *j,
                _ => {
                    return Err(Error::invalid(format!(
                        "{spec} does not act on psi coordinates as a position permutation"
                    )))
                }
            }
        }
    }
    let mut hit = vec![false; width];
    for &j in &target {
        if hit[j] {
            return Err(Error::invalid(format!("{spec} induces a non-bijective coordinate map")));
        }
        hit[j] = true;
    }
    Ok(InducedCoordinateMap { target })
}
