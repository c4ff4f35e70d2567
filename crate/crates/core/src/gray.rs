//! Gray maps out of `R_k`.
//!
//! `psi` sends `a = sum_U a_U v_U` to its idempotent coordinates
//! `(sum_{U subset T} a_U)_T`, one per subset `T` in ascending bitmask order.
//! Coordinate `T` is the value of `a` at `v_t = 1 (t in T), v_t = 0 (t not in T)`,
//! which is why `psi` is a ring isomorphism `R_k -> Z_m^(2^k)`.
//!
//! `phi_j` splits `a in R_j` as `a_1 + a_2 v_j` and expands it into `l_j`
//! symbols of `R_{j-1}` using the coefficient lists `beta`, `beta'`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{RingSpec, RkElement, RkVector};

/// In-place subset zeta transform mod `m`: `x[T] <- sum_{S subset T} x[S]`.
pub(crate) fn zeta(x: &mut [u32], m: u32) {
    let w = x.len();
    let mut bit = 1;
    while bit < w {
        for mask in 0..w {
            if mask & bit != 0 {
                x[mask] = ((x[mask] as u64 + x[mask ^ bit] as u64) % m as u64) as u32;
            }
        }
        bit <<= 1;
    }
}

/// In-place subset Moebius transform mod `m`, the inverse of [`zeta`].
pub(crate) fn moebius(x: &mut [u32], m: u32) {
    let w = x.len();
    let mut bit = 1;
    while bit < w {
        for mask in 0..w {
            if mask & bit != 0 {
                x[mask] = ((x[mask] as u64 + m as u64 - x[mask ^ bit] as u64) % m as u64) as u32;
            }
        }
        bit <<= 1;
    }
}

/// Idempotent coordinates of one element; position `i` is subset bitmask `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PsiImage {
    ring: RingSpec,
    coords: Vec<u32>,
}

impl PsiImage {
    pub fn new(ring: RingSpec, coords: Vec<u32>) -> Result<Self> {
        if coords.len() != ring.width() {
            return Err(Error::LengthMismatch {
                expected: ring.width(),
                got: coords.len(),
            });
        }
        let coords = coords.into_iter().map(|c| c % ring.m()).collect();
        Ok(PsiImage { ring, coords })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

pub fn psi(a: &RkElement) -> PsiImage {
    let ring = a.ring();
    let mut coords = a.coeffs().to_vec();
    zeta(&mut coords, ring.m());
    PsiImage { ring, coords }
}

pub fn psi_inv(y: &PsiImage) -> RkElement {
    let mut coeffs = y.coords.clone();
    moebius(&mut coeffs, y.ring.m());
    RkElement::from_raw(y.ring, coeffs)
}

/// Coordinate ordering for the vector extension of `psi`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Layout {
    /// `(psi(a_1), psi(a_2), ..., psi(a_n))`, one block of `2^k` per symbol.
    Interleaved,
    /// For each subset index `i`, the `n` values `psi(a_j)_i`; row `i` of
    /// the `2^k x n` matrix read row by row.
    #[default]
    ComponentMajor,
}

/// Position of interleaved coordinate `(symbol j, subset i)` in each layout.
fn layout_position(layout: Layout, n: usize, width: usize, symbol: usize, subset: usize) -> usize {
    match layout {
        Layout::Interleaved => symbol * width + subset,
        Layout::ComponentMajor => subset * n + symbol,
    }
}

/// The permutation taking the interleaved layout to the component-major one:
/// interleaved position `p` lands at `perm[p]`.
pub fn layout_permutation(n: usize, width: usize) -> Vec<usize> {
    let mut perm = vec![0; n * width];
    for j in 0..n {
        for i in 0..width {
            perm[j * width + i] = layout_position(Layout::ComponentMajor, n, width, j, i);
        }
    }
    perm
}

pub fn psi_vec(w: &RkVector, layout: Layout) -> Vec<u32> {
    let width = w.ring().width();
    let n = w.len();
    let mut out = vec![0; n * width];
    for (j, a) in w.entries().iter().enumerate() {
        for (i, &c) in psi(a).coords.iter().enumerate() {
            out[layout_position(layout, n, width, j, i)] = c;
        }
    }
    out
}

pub fn psi_vec_inv(ring: RingSpec, n: usize, data: &[u32], layout: Layout) -> Result<RkVector> {
    let width = ring.width();
    if data.len() != n * width {
        return Err(Error::LengthMismatch {
            expected: n * width,
            got: data.len(),
        });
    }
    let entries = (0..n)
        .map(|j| {
            let coords = (0..width)
                .map(|i| data[layout_position(layout, n, width, j, i)] % ring.m())
                .collect();
            psi_inv(&PsiImage { ring, coords })
        })
        .collect();
    Ok(RkVector::from_raw(ring, entries))
}

/// Parameters of `phi_j : R_j -> R_{j-1}^{l_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiSpec {
    level: u32,
    lower: RingSpec,
    beta: Vec<RkElement>,
    beta_prime: Vec<RkElement>,
}

impl PhiSpec {
    /// `beta` and `beta_prime` hold `l_j - 1` elements of `R_{j-1}`; the last
    /// entry of `beta_prime` must be a unit.
    pub fn new(level: u32, beta: Vec<RkElement>, beta_prime: Vec<RkElement>) -> Result<Self> {
        if level == 0 {
            return Err(Error::invalid("phi level must be at least 1"));
        }
        if beta.is_empty() || beta.len() != beta_prime.len() {
            return Err(Error::invalid(format!(
                "beta and beta' must be nonempty and of equal length, got {} and {}",
                beta.len(),
                beta_prime.len()
            )));
        }
        let lower = beta[0].ring();
        if lower.k() != level - 1 {
            return Err(Error::invalid(format!(
                "phi_{level} coefficients must lie in R_{}, got {lower}",
                level - 1
            )));
        }
        for b in beta.iter().chain(&beta_prime) {
            if b.ring() != lower {
                return Err(Error::RingMismatch {
                    left: lower,
                    right: b.ring(),
                });
            }
        }
        if !beta_prime.last().unwrap().is_unit() {
            return Err(Error::invalid("last entry of beta' must be a unit"));
        }
        Ok(PhiSpec {
            level,
            lower,
            beta,
            beta_prime,
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Expansion length `l_j`.
    pub fn len(&self) -> usize {
        self.beta.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn beta(&self) -> &[RkElement] {
        &self.beta
    }

    pub fn beta_prime(&self) -> &[RkElement] {
        &self.beta_prime
    }

    /// The domain ring `R_j`.
    pub fn domain(&self) -> RingSpec {
        RingSpec::new(self.lower.m(), self.level).expect("level bounded by lower ring")
    }

    /// The target ring `R_{j-1}`.
    pub fn codomain(&self) -> RingSpec {
        self.lower
    }

    fn check_domain(&self, ring: RingSpec) -> Result<()> {
        if ring != self.domain() {
            return Err(Error::RingMismatch {
                left: self.domain(),
                right: ring,
            });
        }
        Ok(())
    }
}

/// Splits `a in R_j` as `a_1 + a_2 v_j` with `a_1, a_2 in R_{j-1}`.
pub fn split_top(a: &RkElement) -> Option<(RkElement, RkElement)> {
    let lower = a.ring().lower()?;
    let half = lower.width();
    let (lo, hi) = a.coeffs().split_at(half);
    Some((
        RkElement::from_raw(lower, lo.to_vec()),
        RkElement::from_raw(lower, hi.to_vec()),
    ))
}

pub fn phi(spec: &PhiSpec, a: &RkElement) -> Result<Vec<RkElement>> {
    spec.check_domain(a.ring())?;
    let (a1, a2) = split_top(a).expect("level >= 1");
    let mut out = Vec::with_capacity(spec.len());
    out.push(a1.clone());
    for (b, bp) in spec.beta.iter().zip(&spec.beta_prime) {
        out.push(&(b * &a1) + &(bp * &a2));
    }
    Ok(out)
}

/// Block-major extension: block `r` holds the `r`-th output symbol of every
/// input symbol.
pub fn phi_vec(spec: &PhiSpec, w: &RkVector) -> Result<RkVector> {
    spec.check_domain(w.ring())?;
    let n = w.len();
    let images = w.entries().iter().map(|a| phi(spec, a)).collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::with_capacity(n * spec.len());
    for r in 0..spec.len() {
        entries.extend(images.iter().map(|img| img[r].clone()));
    }
    Ok(RkVector::from_raw(spec.lower, entries))
}

/// Applies `phi_k`, then `phi_{k-1}`, down to `phi_1`. `specs` is ordered by
/// descending level.
pub fn phi_chain(specs: &[PhiSpec], w: &RkVector) -> Result<RkVector> {
    let k = w.ring().k();
    if specs.len() != k as usize {
        return Err(Error::invalid(format!(
            "phi chain over R_{k} needs {k} level specs, got {}",
            specs.len()
        )));
    }
    let mut cur = w.clone();
    for (spec, level) in specs.iter().zip((1..=k).rev()) {
        if spec.level != level {
            return Err(Error::invalid(format!(
                "missing phi spec for level {level} (found level {})",
                spec.level
            )));
        }
        cur = phi_vec(spec, &cur)?;
    }
    Ok(cur)
}
