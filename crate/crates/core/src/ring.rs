//! Exact arithmetic in `R_k = Z_m[v_1, ..., v_k]` with `v_i^2 = v_i`.
//!
//! An element is stored as its `2^k` coefficients in the monomial basis
//! `v_U = prod_{t in U} v_t`. Position `U` is a bitmask where bit `i - 1`
//! stands for `v_i`; position 0 is the constant term. Because `v_U v_W =
//! v_{U | W}`, multiplication is a subset-union convolution.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gray;
use crate::guard::Guard;

/// Largest supported number of idempotent generators.
pub const MAX_K: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingSpec {
    m: u32,
    k: u32,
}

impl RingSpec {
    pub fn new(m: u32, k: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::invalid(format!("modulus must be at least 2, got {m}")));
        }
        if k > MAX_K {
            return Err(Error::invalid(format!("k = {k} exceeds the supported maximum {MAX_K}")));
        }
        Ok(RingSpec { m, k })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of coefficients per element, `2^k`.
    pub fn width(&self) -> usize {
        1 << self.k
    }

    /// `|R_k| = m^(2^k)`.
    pub fn cardinality(&self) -> Result<u128> {
        (self.m as u128)
            .checked_pow(1 << self.k)
            .ok_or_else(|| Error::Overflow(format!("cardinality of {self}")))
    }

    /// The base ring `Z_m`, viewed as `R_0`.
    pub fn base(&self) -> RingSpec {
        RingSpec { m: self.m, k: 0 }
    }

    /// `R_{k-1}`, the coefficient ring for the split `a = a_1 + a_2 v_k`.
    pub fn lower(&self) -> Option<RingSpec> {
        (self.k > 0).then(|| RingSpec { m: self.m, k: self.k - 1 })
    }

    pub fn zero(&self) -> RkElement {
        RkElement {
            ring: *self,
            coeffs: vec![0; self.width()],
        }
    }

    pub fn one(&self) -> RkElement {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> RkElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.m;
        e
    }

    /// The monomial `v_U` for a subset bitmask `U`.
    pub fn monomial(&self, mask: usize) -> RkElement {
        assert!(mask < self.width(), "monomial mask out of range");
        let mut e = self.zero();
        e.coeffs[mask] = 1;
        e
    }

    /// The generator `v_i`, `1 <= i <= k`.
    pub fn var(&self, i: u32) -> RkElement {
        assert!(i >= 1 && i <= self.k, "variable index {i} out of range");
        self.monomial(1 << (i - 1))
    }

    /// Builds an element from a coefficient list in bitmask order. Entries are
    /// reduced mod `m`.
    pub fn element(&self, coeffs: &[u32]) -> Result<RkElement> {
        if coeffs.len() != self.width() {
            return Err(Error::LengthMismatch {
                expected: self.width(),
                got: coeffs.len(),
            });
        }
        Ok(RkElement {
            ring: *self,
            coeffs: coeffs.iter().map(|c| c % self.m).collect(),
        })
    }

    /// Same as [`RingSpec::element`] but accepts signed literals such as `-1`.
    pub fn element_signed(&self, coeffs: &[i64]) -> Result<RkElement> {
        let m = self.m as i64;
        let reduced: Vec<u32> = coeffs.iter().map(|c| c.rem_euclid(m) as u32).collect();
        self.element(&reduced)
    }

    /// The element whose coefficients are the base-`m` digits of `index`,
    /// least significant digit first.
    pub fn element_at(&self, mut index: u128) -> RkElement {
        let m = self.m as u128;
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = (index % m) as u32;
            index /= m;
        }
        e
    }

    /// All elements, in index order.
    pub fn elements(&self, guard: Guard) -> Result<Vec<RkElement>> {
        let q = self.cardinality()?;
        guard.check("ring elements", q)?;
        Ok((0..q).map(|i| self.element_at(i)).collect())
    }

    /// The unit group `R_k^x`, in index order.
    pub fn units(&self, guard: Guard) -> Result<Vec<RkElement>> {
        Ok(self.elements(guard)?.into_iter().filter(RkElement::is_unit).collect())
    }

    /// Number of invertible residues mod `m`.
    pub fn base_unit_count(&self) -> u32 {
        (1..self.m).filter(|&x| gcd(x, self.m) == 1).count() as u32
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.m)?;
        match self.k {
            0 => Ok(()),
            1 => write!(f, "[v]"),
            k => {
                let vars: Vec<String> = (1..=k).map(|i| format!("v{i}")).collect();
                write!(f, "[{}]", vars.join(","))
            }
        }
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Element of `R_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RkElement {
    ring: RingSpec,
    coeffs: Vec<u32>,
}

impl RkElement {
    pub(crate) fn from_raw(ring: RingSpec, coeffs: Vec<u32>) -> Self {
        debug_assert_eq!(coeffs.len(), ring.width());
        RkElement { ring, coeffs }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> u32 {
        self.coeffs[mask]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Inverse of [`RingSpec::element_at`].
    pub fn index(&self) -> u128 {
        let m = self.ring.m as u128;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * m + c as u128)
    }

    fn check_ring(&self, other: &RkElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &RkElement) -> Result<RkElement> {
        self.check_ring(other)?;
        let m = self.ring.m as u64;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| ((a as u64 + b as u64) % m) as u32)
            .collect();
        Ok(RkElement::from_raw(self.ring, coeffs))
    }

    /// Product via the monomial rule `v_U v_W = v_{U | W}`.
    pub fn checked_mul(&self, other: &RkElement) -> Result<RkElement> {
        self.check_ring(other)?;
        let m = self.ring.m as u64;
        let w = self.ring.width();
        let mut acc = vec![0u64; w];
        for (u, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (v, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    acc[u | v] = (acc[u | v] + a as u64 * b as u64) % m;
                }
            }
        }
        Ok(RkElement::from_raw(self.ring, acc.into_iter().map(|c| c as u32).collect()))
    }

    /// Multiplication by a base-ring scalar.
    pub fn scale(&self, c: u32) -> RkElement {
        let m = self.ring.m as u64;
        let coeffs = self.coeffs.iter().map(|&a| ((a as u64 * c as u64) % m) as u32).collect();
        RkElement::from_raw(self.ring, coeffs)
    }

    /// A unit is exactly an element whose idempotent coordinates are all
    /// invertible mod `m`, since `R_k` splits as `Z_m^(2^k)`.
    pub fn is_unit(&self) -> bool {
        let m = self.ring.m;
        gray::psi(self).coords().iter().all(|&x| gcd(x, m) == 1)
    }

    /// Multiplicative inverse, if any.
    pub fn inverse(&self) -> Option<RkElement> {
        let m = self.ring.m;
        let image = gray::psi(self);
        let inv: Option<Vec<u32>> = image.coords().iter().map(|&x| inv_mod(x, m)).collect();
        Some(gray::psi_inv(&gray::PsiImage::new(self.ring, inv?).ok()?))
    }
}

/// Inverse of `x` mod `m` by the extended Euclidean algorithm.
pub(crate) fn inv_mod(x: u32, m: u32) -> Option<u32> {
    let (mut r0, mut r1) = (m as i64, (x % m) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i64) as u32)
}

impl Add for &RkElement {
    type Output = RkElement;
    fn add(self, rhs: &RkElement) -> RkElement {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl Mul for &RkElement {
    type Output = RkElement;
    fn mul(self, rhs: &RkElement) -> RkElement {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &RkElement {
    type Output = RkElement;
    fn neg(self) -> RkElement {
        let m = self.ring.m;
        let coeffs = self.coeffs.iter().map(|&a| (m - a) % m).collect();
        RkElement::from_raw(self.ring, coeffs)
    }
}

impl Sub for &RkElement {
    type Output = RkElement;
    fn sub(self, rhs: &RkElement) -> RkElement {
        self + &(-rhs)
    }
}

impl fmt::Display for RkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = if self.ring.k == 1 {
                if mask == 1 { "v".to_string() } else { String::new() }
            } else {
                (0..self.ring.k)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| format!("v{}", b + 1))
                    .collect()
            };
            terms.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}{mono}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// A word of length `n` over `R_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RkVector {
    ring: RingSpec,
    entries: Vec<RkElement>,
}

impl RkVector {
    pub fn new(ring: RingSpec, entries: Vec<RkElement>) -> Result<Self> {
        for e in &entries {
            if e.ring != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: e.ring,
                });
            }
        }
        Ok(RkVector { ring, entries })
    }

    pub(crate) fn from_raw(ring: RingSpec, entries: Vec<RkElement>) -> Self {
        RkVector { ring, entries }
    }

    pub fn zeros(ring: RingSpec, n: usize) -> Self {
        RkVector {
            ring,
            entries: vec![ring.zero(); n],
        }
    }

    /// Builds a word from per-symbol coefficient lists.
    pub fn from_coeffs(ring: RingSpec, symbols: &[Vec<u32>]) -> Result<Self> {
        let entries = symbols.iter().map(|c| ring.element(c)).collect::<Result<_>>()?;
        Ok(RkVector { ring, entries })
    }

    /// Builds a word over `Z_m` (k = 0) from residues.
    pub fn from_residues(ring: RingSpec, residues: &[u32]) -> Result<Self> {
        if ring.k != 0 {
            return Err(Error::invalid("from_residues needs a base ring (k = 0)"));
        }
        let entries = residues.iter().map(|&r| ring.constant(r)).collect();
        Ok(RkVector { ring, entries })
    }

    /// The `index`-th word of `R_k^n` in mixed-radix order (first symbol
    /// least significant).
    pub fn from_index(ring: RingSpec, n: usize, mut index: u128, q: u128) -> Self {
        let entries = (0..n)
            .map(|_| {
                let e = ring.element_at(index % q);
                index /= q;
                e
            })
            .collect();
        RkVector { ring, entries }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RkElement] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<RkElement> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RkElement::is_zero)
    }

    fn check_compatible(&self, other: &RkVector) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &RkVector) -> Result<RkVector> {
        self.check_compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(RkVector::from_raw(self.ring, entries))
    }

    /// Left multiplication by a ring scalar.
    pub fn scale(&self, r: &RkElement) -> RkVector {
        let entries = self.entries.iter().map(|a| r * a).collect();
        RkVector::from_raw(self.ring, entries)
    }

    /// Euclidean inner product `sum c_i c'_i`.
    pub fn dot(&self, other: &RkVector) -> Result<RkElement> {
        self.check_compatible(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(self.ring.zero(), |acc, (a, b)| &acc + &(a * b)))
    }

    pub fn map(&self, f: impl Fn(&RkElement) -> RkElement) -> RkVector {
        RkVector::from_raw(self.ring, self.entries.iter().map(f).collect())
    }

    /// Number of nonzero symbols.
    pub fn hamming_weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }
}

impl Add for &RkVector {
    type Output = RkVector;
    fn add(self, rhs: &RkVector) -> RkVector {
        self.checked_add(rhs).expect("incompatible vectors in addition")
    }
}

impl fmt::Display for RkVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
