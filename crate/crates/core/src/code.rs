//! Linear codes over `R_k`, held extensionally as the full codeword set.
//!
//! Duals are found by scanning all of `R_k^n`, which keeps every result an
//! exact set-level statement. Component codes come from the component-major
//! idempotent coordinates of each codeword.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::automorphism::apply_theta;
use crate::error::{Error, Result};
use crate::gray::{psi, psi_vec, psi_vec_inv, Layout};
use crate::guard::Guard;
use crate::ring::{RingSpec, RkElement, RkVector};

#[derive(Clone, Debug)]
pub struct LinearCode {
    ring: RingSpec,
    n: usize,
    generators: Vec<RkVector>,
    codewords: BTreeSet<RkVector>,
}

/// Codes compare as sets of codewords; generators are provenance only.
impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.n == other.n && self.codewords == other.codewords
    }
}

impl Eq for LinearCode {}

fn check_word(ring: RingSpec, n: usize, w: &RkVector) -> Result<()> {
    if w.ring() != ring {
        return Err(Error::RingMismatch {
            left: ring,
            right: w.ring(),
        });
    }
    if w.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: w.len(),
        });
    }
    Ok(())
}

/// Distinct multiples `r w`, `r in R_k`.
fn multiples(elements: &[RkElement], w: &RkVector) -> Vec<RkVector> {
    let set: HashSet<RkVector> = elements.iter().map(|r| w.scale(r)).collect();
    set.into_iter().collect()
}

/// `{ s + x : s in base, x in step }`.
fn sumset(
    base: &HashSet<RkVector>,
    step: &[RkVector],
    guard: Guard,
) -> Result<HashSet<RkVector>> {
    guard.check("span closure", base.len() as u128 * step.len() as u128)?;
    let mut out = HashSet::with_capacity(base.len() * 2);
    for s in base {
        for x in step {
            out.insert(s + x);
        }
    }
    Ok(out)
}

impl LinearCode {
    /// The `R_k`-submodule of `R_k^n` generated by `generators`.
    pub fn span(ring: RingSpec, n: usize, generators: Vec<RkVector>, guard: Guard) -> Result<Self> {
        for g in &generators {
            check_word(ring, n, g)?;
        }
        let elements = ring.elements(guard)?;
        let mut closure: HashSet<RkVector> = HashSet::from([RkVector::zeros(ring, n)]);
        for g in &generators {
            closure = sumset(&closure, &multiples(&elements, g), guard)?;
        }
        Ok(LinearCode {
            ring,
            n,
            generators,
            codewords: closure.into_iter().collect(),
        })
    }

    pub fn zero(ring: RingSpec, n: usize) -> Self {
        LinearCode {
            ring,
            n,
            generators: Vec::new(),
            codewords: BTreeSet::from([RkVector::zeros(ring, n)]),
        }
    }

    /// All of `R_k^n`.
    pub fn full(ring: RingSpec, n: usize, guard: Guard) -> Result<Self> {
        let generators = (0..n)
            .map(|j| {
                let mut w = vec![ring.zero(); n];
                w[j] = ring.one();
                RkVector::from_raw(ring, w)
            })
            .collect();
        LinearCode::span(ring, n, generators, guard)
    }

    /// Wraps a codeword set, recovering a generating set greedily. Fails with
    /// [`Error::NotLinear`] if the set is not a submodule.
    pub fn from_codewords(
        ring: RingSpec,
        n: usize,
        codewords: BTreeSet<RkVector>,
        guard: Guard,
    ) -> Result<Self> {
        for w in &codewords {
            check_word(ring, n, w)?;
        }
        let zero = RkVector::zeros(ring, n);
        if !codewords.contains(&zero) {
            return Err(Error::NotLinear("zero word missing".into()));
        }
        let elements = ring.elements(guard)?;
        let mut closure: HashSet<RkVector> = HashSet::from([zero]);
        let mut generators = Vec::new();
        for c in &codewords {
            if closure.contains(c) {
                continue;
            }
            generators.push(c.clone());
            closure = sumset(&closure, &multiples(&elements, c), guard)?;
            if let Some(stray) = closure.iter().find(|w| !codewords.contains(w)) {
                return Err(Error::NotLinear(format!("{stray} lies in the span but not in the set")));
            }
        }
        debug_assert_eq!(closure.len(), codewords.len());
        Ok(LinearCode {
            ring,
            n,
            generators,
            codewords,
        })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn generators(&self) -> &[RkVector] {
        &self.generators
    }

    /// Codewords in lexicographic order of their coefficient lists.
    pub fn codewords(&self) -> impl Iterator<Item = &RkVector> {
        self.codewords.iter()
    }

    pub fn codeword_set(&self) -> &BTreeSet<RkVector> {
        &self.codewords
    }

    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn contains(&self, w: &RkVector) -> bool {
        self.codewords.contains(w)
    }

    pub fn is_zero_code(&self) -> bool {
        self.codewords.len() == 1
    }

    /// Keeps every `w in R_k^n` whose pairing with each generator vanishes.
    fn dual_scan(
        &self,
        guard: Guard,
        pair: impl Fn(&RkVector, &RkVector) -> RkElement,
    ) -> Result<LinearCode> {
        let q = self.ring.cardinality()?;
        guard.check_pow("ambient space", q, self.n as u32)?;
        let total = q.pow(self.n as u32);
        let mut kept = BTreeSet::new();
        for idx in 0..total {
            let w = RkVector::from_index(self.ring, self.n, idx, q);
            if self.generators.iter().all(|g| pair(g, &w).is_zero()) {
                kept.insert(w);
            }
        }
        LinearCode::from_codewords(self.ring, self.n, kept, guard)
    }

    /// `C^perp = { w : c . w = 0 for all c in C }`.
    pub fn euclidean_dual(&self, guard: Guard) -> Result<LinearCode> {
        self.dual_scan(guard, |g, w| g.dot(w).expect("checked shapes"))
    }

    /// `C^H` under `[c, w] = sum c_i Theta_{1..k}(w_i)`.
    pub fn hermitian_dual(&self, guard: Guard) -> Result<LinearCode> {
        let full = self.ring.width() - 1;
        self.dual_scan(guard, |g, w| hermitian_product(g, w, full))
    }

    pub fn is_self_dual(&self, guard: Guard) -> Result<bool> {
        Ok(self.euclidean_dual(guard)? == *self)
    }

    pub fn is_hermitian_self_dual(&self, guard: Guard) -> Result<bool> {
        Ok(self.hermitian_dual(guard)? == *self)
    }

    /// Splits `C` into the `2^k` codes over `Z_m` formed by the rows of the
    /// component-major idempotent coordinates.
    pub fn decompose(&self, guard: Guard) -> Result<ComponentCodes> {
        let width = self.ring.width();
        let base = self.ring.base();
        let mut rows: Vec<BTreeSet<RkVector>> = vec![BTreeSet::new(); width];
        for c in &self.codewords {
            let data = psi_vec(c, Layout::ComponentMajor);
            for (i, set) in rows.iter_mut().enumerate() {
                set.insert(RkVector::from_residues(base, &data[i * self.n..(i + 1) * self.n])?);
            }
        }
        let components = rows
            .into_iter()
            .map(|set| LinearCode::from_codewords(base, self.n, set, guard))
            .collect::<Result<Vec<_>>>()?;
        let product: u128 = components.iter().map(|c| c.size() as u128).product();
        if product != self.codewords.len() as u128 {
            return Err(Error::NotLinear(format!(
                "psi image has {} words but the component product has {product}",
                self.codewords.len()
            )));
        }
        Ok(ComponentCodes {
            ring: self.ring,
            n: self.n,
            components,
        })
    }

    /// `d_H(C)`, the least Hamming weight of a nonzero codeword.
    pub fn hamming_distance(&self) -> Result<usize> {
        self.codewords
            .iter()
            .filter(|c| !c.is_zero())
            .map(RkVector::hamming_weight)
            .min()
            .ok_or(Error::NoNonzeroCodeword)
    }

    /// `d_L(C)`, the least Lee weight of a nonzero codeword.
    pub fn lee_distance(&self) -> Result<usize> {
        self.codewords
            .iter()
            .filter(|c| !c.is_zero())
            .map(lee_weight)
            .min()
            .ok_or(Error::NoNonzeroCodeword)
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(
            f,
            "<{}> over {} (n = {}, |C| = {})",
            gens.join(", "),
            self.ring,
            self.n,
            self.codewords.len()
        )
    }
}

pub(crate) fn hermitian_product(c: &RkVector, w: &RkVector, flip: usize) -> RkElement {
    c.entries()
        .iter()
        .zip(w.entries())
        .fold(c.ring().zero(), |acc, (a, b)| &acc + &(a * &apply_theta(flip, b)))
}

/// Lee weight of a base residue, `min(x, m - x)`.
pub fn lee_weight_residue(x: u32, m: u32) -> u32 {
    let x = x % m;
    x.min(m - x)
}

/// `Wt_L(w) = sum_j sum_i wt_L(psi(w_j)_i)`.
pub fn lee_weight(w: &RkVector) -> usize {
    let m = w.ring().m();
    w.entries()
        .iter()
        .map(|a| psi(a).coords().iter().map(|&x| lee_weight_residue(x, m) as usize).sum::<usize>())
        .sum()
}

/// The `n`-fold product of `<v_i>`, a Hermitian self-dual code of length `n`.
pub fn hermitian_selfdual_construct(ring: RingSpec, n: usize, i: u32, guard: Guard) -> Result<LinearCode> {
    if ring.k() == 0 {
        return Err(Error::invalid("Hermitian self-dual construction needs k >= 1"));
    }
    if i == 0 || i > ring.k() {
        return Err(Error::invalid(format!("index {i} outside 1..{}", ring.k())));
    }
    let generators = (0..n)
        .map(|j| {
            let mut w = vec![ring.zero(); n];
            w[j] = ring.var(i);
            RkVector::from_raw(ring, w)
        })
        .collect();
    LinearCode::span(ring, n, generators, guard)
}

/// The `2^k` component codes over `Z_m` of a code over `R_k`; position `i`
/// is the idempotent coordinate of subset bitmask `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCodes {
    ring: RingSpec,
    n: usize,
    components: Vec<LinearCode>,
}

impl ComponentCodes {
    pub fn new(ring: RingSpec, components: Vec<LinearCode>) -> Result<Self> {
        if components.len() != ring.width() {
            return Err(Error::LengthMismatch {
                expected: ring.width(),
                got: components.len(),
            });
        }
        let n = components[0].len();
        for c in &components {
            if c.ring() != ring.base() {
                return Err(Error::RingMismatch {
                    left: ring.base(),
                    right: c.ring(),
                });
            }
            if c.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: c.len(),
                });
            }
        }
        Ok(ComponentCodes { ring, n, components })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn components(&self) -> &[LinearCode] {
        &self.components
    }

    /// `C = psi^{-1}(C_1 x ... x C_{2^k})`.
    pub fn compose(&self, guard: Guard) -> Result<LinearCode> {
        let (ring, n, width) = (self.ring, self.n, self.ring.width());
        let product: u128 = self.components.iter().map(|c| c.size() as u128).product();
        guard.check("component product", product)?;

        let residues = |w: &RkVector| -> Vec<u32> { w.entries().iter().map(|e| e.coeff(0)).collect() };
        let lists: Vec<Vec<Vec<u32>>> = self
            .components
            .iter()
            .map(|c| c.codewords().map(residues).collect())
            .collect();

        let embed = |i: usize, row: &[u32]| -> Result<RkVector> {
            let mut data = vec![0; n * width];
            data[i * n..(i + 1) * n].copy_from_slice(row);
            psi_vec_inv(ring, n, &data, Layout::ComponentMajor)
        };
        let mut generators = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            for g in c.generators() {
                generators.push(embed(i, &residues(g))?);
            }
        }

        let mut codewords = BTreeSet::new();
        let mut digits = vec![0usize; width];
        for _ in 0..product {
            let mut data = vec![0; n * width];
            for i in 0..width {
                data[i * n..(i + 1) * n].copy_from_slice(&lists[i][digits[i]]);
            }
            codewords.insert(psi_vec_inv(ring, n, &data, Layout::ComponentMajor)?);
            for i in 0..width {
                digits[i] += 1;
                if digits[i] < lists[i].len() {
                    break;
                }
                digits[i] = 0;
            }
        }
        Ok(LinearCode {
            ring,
            n,
            generators,
            codewords,
        })
    }

    /// Component-wise Euclidean duals.
    pub fn duals(&self, guard: Guard) -> Result<ComponentCodes> {
        let components = self
            .components
            .iter()
            .map(|c| c.euclidean_dual(guard))
            .collect::<Result<Vec<_>>>()?;
        Ok(ComponentCodes {
            ring: self.ring,
            n: self.n,
            components,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(m: u32, k: u32) -> RingSpec {
        RingSpec::new(m, k).unwrap()
    }

    fn word(r: RingSpec, symbols: &[&[u32]]) -> RkVector {
        let owned: Vec<Vec<u32>> = symbols.iter().map(|s| s.to_vec()).collect();
        RkVector::from_coeffs(r, &owned).unwrap()
    }

    fn span(r: RingSpec, gens: &[&[&[u32]]]) -> LinearCode {
        let n = gens.first().map_or(1, |g| g.len());
        let gens = gens.iter().map(|g| word(r, g)).collect();
        LinearCode::span(r, n, gens, Guard::default()).unwrap()
    }

    fn g() -> Guard {
        Guard::default()
    }

    #[test]
    fn span_examples() {
        let r = ring(4, 1);
        let zero = LinearCode::span(r, 2, vec![], g()).unwrap();
        assert_eq!(zero.size(), 1);
        assert!(zero.is_zero_code());

        let c = span(r, &[&[&[1, 1]]]);
        let expected: BTreeSet<RkVector> = [[0, 0], [1, 1], [2, 2], [3, 3], [0, 2], [2, 0], [1, 3], [3, 1]]
            .iter()
            .map(|s| word(r, &[s]))
            .collect();
        assert_eq!(c.codeword_set(), &expected);

        let z4 = ring(4, 0);
        let base = LinearCode::span(z4, 4, vec![RkVector::from_residues(z4, &[1, 0, 1, 3]).unwrap()], g())
            .unwrap();
        assert_eq!(base.size(), 4);
    }

    #[test]
    fn span_rejects_shape_errors_and_guard() {
        let r = ring(4, 1);
        let w = word(r, &[&[1, 0]]);
        assert!(matches!(
            LinearCode::span(r, 2, vec![w.clone()], g()),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            LinearCode::span(ring(2, 1), 1, vec![w.clone()], g()),
            Err(Error::RingMismatch { .. })
        ));
        assert!(matches!(
            LinearCode::span(r, 1, vec![w], Guard::new(8)),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn from_codewords_detects_nonlinear_sets() {
        let r = ring(2, 1);
        let set: BTreeSet<RkVector> = [word(r, &[&[0, 0]]), word(r, &[&[1, 0]])].into();
        // {0, 1} is not closed under multiplication by v.
        assert!(matches!(
            LinearCode::from_codewords(r, 1, set, g()),
            Err(Error::NotLinear(_))
        ));
        let missing_zero: BTreeSet<RkVector> = [word(r, &[&[1, 0]])].into();
        assert!(LinearCode::from_codewords(r, 1, missing_zero, g()).is_err());
    }

    #[test]
    fn euclidean_dual_examples() {
        let r = ring(4, 1);
        let zero = LinearCode::zero(r, 2);
        assert_eq!(zero.euclidean_dual(g()).unwrap(), LinearCode::full(r, 2, g()).unwrap());

        let v = span(r, &[&[&[0, 1]]]);
        let one_minus_v = span(r, &[&[&[1, 3]]]);
        assert_eq!(v.euclidean_dual(g()).unwrap(), one_minus_v);

        // (v, 1-v) has square norm v + (1 - v) = 1, so this span is the whole
        // space and its dual is zero.
        let ex = span(r, &[&[&[0, 1], &[1, 3]], &[&[1, 3], &[0, 1]]]);
        let w = word(r, &[&[0, 1], &[1, 3]]);
        assert_eq!(w.dot(&w).unwrap(), r.one());
        assert_eq!(ex, LinearCode::full(r, 2, g()).unwrap());
        assert!(ex.euclidean_dual(g()).unwrap().is_zero_code());
        assert!(!ex.is_self_dual(g()).unwrap());
    }

    #[test]
    fn hermitian_dual_examples() {
        let r = ring(4, 1);
        let v = span(r, &[&[&[0, 1]]]);
        assert_eq!(v.hermitian_dual(g()).unwrap(), v);
        assert!(v.is_hermitian_self_dual(g()).unwrap());
        let zero = LinearCode::zero(r, 1);
        assert_eq!(zero.hermitian_dual(g()).unwrap().size(), 16);

        // <(v v v)> is self-orthogonal but |C| |C^H| = 16^3 forces |C^H| = 1024.
        let vvv = span(r, &[&[&[0, 1], &[0, 1], &[0, 1]]]);
        let h = vvv.hermitian_dual(g()).unwrap();
        assert_eq!(vvv.size(), 4);
        assert_eq!(h.size(), 1024);
        assert!(vvv.codewords().all(|c| h.contains(c)));
    }

    #[test]
    fn self_dual_predicates() {
        let r = ring(4, 1);
        assert!(!LinearCode::zero(r, 1).is_self_dual(g()).unwrap());
        assert!(!LinearCode::zero(r, 2).is_hermitian_self_dual(g()).unwrap());
        // Euclidean self-dual: both components equal <(2)> over Z_4.
        let twos = span(r, &[&[&[2, 0]]]);
        assert!(twos.is_self_dual(g()).unwrap());
    }

    #[test]
    fn hermitian_construction() {
        for m in [2, 4] {
            let r = ring(m, 1);
            let c1 = hermitian_selfdual_construct(r, 1, 1, g()).unwrap();
            assert_eq!(c1, span(r, &[&[&[0, 1]]]));
            for n in 1..=3 {
                let c = hermitian_selfdual_construct(r, n, 1, g()).unwrap();
                assert_eq!(c.size(), (m as usize).pow(n as u32));
                assert!(c.is_hermitian_self_dual(g()).unwrap());
            }
        }
        let r = ring(4, 1);
        let c3 = hermitian_selfdual_construct(r, 3, 1, g()).unwrap();
        let explicit = span(
            r,
            &[
                &[&[0, 1], &[0, 0], &[0, 0]],
                &[&[0, 0], &[0, 1], &[0, 0]],
                &[&[0, 0], &[0, 0], &[0, 1]],
            ],
        );
        assert_eq!(c3, explicit);
        assert!(hermitian_selfdual_construct(ring(4, 0), 1, 1, g()).is_err());
        assert!(hermitian_selfdual_construct(r, 1, 2, g()).is_err());
    }

    #[test]
    fn decompose_examples() {
        let r = ring(4, 1);
        let z4 = ring(4, 0);
        let c = span(r, &[&[&[1, 0], &[0, 1], &[1, 1], &[3, 0]]]);
        let parts = c.decompose(g()).unwrap();
        let base = |v: &[u32]| {
            LinearCode::span(z4, v.len(), vec![RkVector::from_residues(z4, v).unwrap()], g()).unwrap()
        };
        assert_eq!(parts.components()[0], base(&[1, 0, 1, 3]));
        assert_eq!(parts.components()[1], base(&[1, 1, 2, 3]));
        assert_eq!(parts.compose(g()).unwrap(), c);

        let zero = LinearCode::zero(r, 3).decompose(g()).unwrap();
        assert!(zero.components().iter().all(LinearCode::is_zero_code));

        let vvv = span(r, &[&[&[0, 1], &[0, 1], &[0, 1]]]);
        let parts = vvv.decompose(g()).unwrap();
        assert!(parts.components()[0].is_zero_code());
        assert_eq!(parts.components()[1], base(&[1, 1, 1]));
    }

    #[test]
    fn compose_examples() {
        let r = ring(4, 1);
        let z4 = ring(4, 0);
        let zeros = ComponentCodes::new(r, vec![LinearCode::zero(z4, 2), LinearCode::zero(z4, 2)]).unwrap();
        assert!(zeros.compose(g()).unwrap().is_zero_code());

        let unit = |v: &[u32]| RkVector::from_residues(z4, v).unwrap();
        let both = LinearCode::span(z4, 2, vec![unit(&[1, 0]), unit(&[0, 1])], g()).unwrap();
        let composed = ComponentCodes::new(r, vec![both.clone(), both]).unwrap().compose(g()).unwrap();
        let ex = span(r, &[&[&[0, 1], &[1, 3]], &[&[1, 3], &[0, 1]]]);
        assert_eq!(composed, ex);

        assert!(ComponentCodes::new(r, vec![LinearCode::zero(z4, 2)]).is_err());
        assert!(ComponentCodes::new(r, vec![LinearCode::zero(z4, 2), LinearCode::zero(z4, 3)]).is_err());
    }

    #[test]
    fn distances() {
        let r = ring(4, 1);
        assert_eq!(lee_weight(&RkVector::zeros(r, 3)), 0);
        assert_eq!(lee_weight(&word(r, &[&[1, 1]])), 1 + 2);
        assert!(matches!(LinearCode::zero(r, 2).hamming_distance(), Err(Error::NoNonzeroCodeword)));
        assert!(matches!(LinearCode::zero(r, 2).lee_distance(), Err(Error::NoNonzeroCodeword)));

        let c = span(r, &[&[&[1, 0], &[0, 1], &[1, 1], &[3, 0]]]);
        let parts = c.decompose(g()).unwrap();
        let comp_min = parts.components().iter().map(|p| p.hamming_distance().unwrap()).min().unwrap();
        assert_eq!(c.hamming_distance().unwrap(), comp_min);
        assert_eq!(comp_min, 3);
        let comp_lee = parts.components().iter().map(|p| p.lee_distance().unwrap()).min().unwrap();
        assert_eq!(c.lee_distance().unwrap(), comp_lee);
    }

    #[test]
    fn dual_cardinality_law_small() {
        let r = ring(2, 1);
        let all: Vec<RkVector> = (0..16).map(|i| RkVector::from_index(r, 2, i, 4)).collect();
        for a in &all {
            for b in &all {
                let c = LinearCode::span(r, 2, vec![a.clone(), b.clone()], g()).unwrap();
                let d = c.euclidean_dual(g()).unwrap();
                assert_eq!(c.size() * d.size(), 16);
                assert_eq!(d.euclidean_dual(g()).unwrap(), c);
                let h = c.hermitian_dual(g()).unwrap();
                assert_eq!(h.hermitian_dual(g()).unwrap(), c);
            }
        }
    }
}
