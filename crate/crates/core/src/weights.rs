//! Weight enumerators and MacWilliams identities over `R_k`.
//!
//! The generating character of `Z_m` is `chi(x) = xi^x` for a primitive
//! `m`-th root of unity `xi`; on `R_k` it is the product over idempotent
//! coordinates, `chi(a) = xi^(sum_i psi(a)_i)`. All character values are
//! exact elements of `Z[xi]`.
//!
//! The complete and symmetrized identities have one variable per ring
//! element (or per class), so they are checked by evaluation instead of
//! expansion: every variable `X_b` is replaced by `y^h(b)` for a panel of
//! injective exponent maps `h`, and both sides are compared as exact
//! polynomials in `y`. When `h(b) = (n+1)^index(b)` fits under
//! [`KRONECKER_MAX_DEGREE`], distinct degree-`n` monomials get distinct
//! exponents and a pass is a proof. Otherwise the panel uses affine maps
//! `h(b) = (a * index(b) + c) mod q`, which keep degrees at most `n (q - 1)`.

use std::collections::{BTreeMap, HashMap};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::automorphism::apply_theta;
use crate::code::LinearCode;
use crate::cyclotomic::{CyclotomicInt, CyclotomicRing, YPoly};
use crate::error::{Error, Result};
use crate::gray::{psi, psi_vec, Layout};
use crate::guard::Guard;
use crate::ring::{gcd, RingSpec, RkElement, RkVector};

/// Largest ring order for which the character tables are materialized.
pub const MAX_TABLE_ORDER: u128 = 256;

/// Largest `y`-degree accepted for the separating evaluation map.
pub const KRONECKER_MAX_DEGREE: u128 = 2048;

/// `chi(x) = xi^x` on `Z_m`.
pub fn chi(cyc: &CyclotomicRing, x: u32) -> CyclotomicInt {
    cyc.root_pow(x as u64)
}

/// Exponent `e` with `chi(a) = xi^e`.
pub fn chi_exponent(a: &RkElement) -> u64 {
    let m = a.ring().m() as u64;
    psi(a).coords().iter().map(|&x| x as u64).sum::<u64>() % m
}

pub fn chi_rk(cyc: &CyclotomicRing, a: &RkElement) -> CyclotomicInt {
    cyc.root_pow(chi_exponent(a))
}

/// `A_w = #{ c in C : wt_H(c) = w }`, `w = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HammingWE {
    coeffs: Vec<u128>,
}

impl HammingWE {
    pub fn new(coeffs: Vec<u128>) -> Self {
        HammingWE { coeffs }
    }

    pub fn coeffs(&self) -> &[u128] {
        &self.coeffs
    }

    pub fn total(&self) -> u128 {
        self.coeffs.iter().sum()
    }

    /// `sum_w A_w X^(n-w) Y^w`.
    pub fn to_polynomial_string(&self) -> String {
        let n = self.coeffs.len().saturating_sub(1);
        let mut terms = Vec::new();
        for (w, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let x = match n - w {
                0 => String::new(),
                1 => "X".into(),
                e => format!("X^{e}"),
            };
            let y = match w {
                0 => String::new(),
                1 => "Y".into(),
                e => format!("Y^{e}"),
            };
            let mono = format!("{x}{y}");
            terms.push(match (a, mono.is_empty()) {
                (_, true) => a.to_string(),
                (1, false) => mono,
                _ => format!("{a}{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

pub fn hamming_we(code: &LinearCode) -> HammingWE {
    let mut coeffs = vec![0u128; code.len() + 1];
    for c in code.codewords() {
        coeffs[c.hamming_weight()] += 1;
    }
    HammingWE { coeffs }
}

fn overflow() -> Error {
    Error::Overflow("Hamming MacWilliams transform".into())
}

/// Coefficients in `Y` of `(1 + a Y)^e` as signed integers.
fn binomial_power(a: i128, e: usize) -> Result<Vec<i128>> {
    let mut p = vec![1i128];
    for _ in 0..e {
        let mut next = vec![0i128; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            next[i] = next[i].checked_add(c).ok_or_else(overflow)?;
            let t = c.checked_mul(a).ok_or_else(overflow)?;
            next[i + 1] = next[i + 1].checked_add(t).ok_or_else(overflow)?;
        }
        p = next;
    }
    Ok(p)
}

/// `(1/|C|) W_C(X + (q-1) Y, X - Y)` by exact polynomial substitution.
pub fn macwilliams_hamming(we: &HammingWE, code_size: u128, q: u128) -> Result<HammingWE> {
    let n = we.coeffs.len() - 1;
    let qm1 = i128::try_from(q - 1).map_err(|_| overflow())?;
    let mut acc = vec![0i128; n + 1];
    for (w, &a) in we.coeffs.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let a = i128::try_from(a).map_err(|_| overflow())?;
        let left = binomial_power(qm1, n - w)?;
        let right = binomial_power(-1, w)?;
        for (i, &l) in left.iter().enumerate() {
            for (j, &r) in right.iter().enumerate() {
                let t = a
                    .checked_mul(l)
                    .and_then(|x| x.checked_mul(r))
                    .ok_or_else(overflow)?;
                acc[i + j] = acc[i + j].checked_add(t).ok_or_else(overflow)?;
            }
        }
    }
    let size = i128::try_from(code_size).map_err(|_| overflow())?;
    let coeffs = acc
        .into_iter()
        .enumerate()
        .map(|(j, c)| {
            if c % size != 0 || c < 0 {
                Err(Error::NonIntegral(format!(
                    "coefficient of Y^{j} is {c}, not a nonnegative multiple of |C| = {code_size}"
                )))
            } else {
                Ok((c / size) as u128)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HammingWE { coeffs })
}

/// `sum_{c in C} chi(u . c)`; equals `|C|` when `u` is in `C^perp`, else 0.
pub fn character_sum_check(cyc: &CyclotomicRing, code: &LinearCode, u: &RkVector) -> Result<CyclotomicInt> {
    let mut acc = cyc.zero();
    for c in code.codewords() {
        acc = cyc.add(&acc, &chi_rk(cyc, &u.dot(c)?));
    }
    Ok(acc)
}

/// Batched version of [`character_sum_check`] for scanning many `u`: the
/// exponent of `chi(u . c)` is the `Z_m` dot product of the interleaved
/// idempotent coordinates of `u` and `c`.
pub struct CharacterSums {
    m: u64,
    cyc: CyclotomicRing,
    images: Vec<Vec<u32>>,
}

impl CharacterSums {
    pub fn new(code: &LinearCode) -> Self {
        CharacterSums {
            m: code.ring().m() as u64,
            cyc: CyclotomicRing::new(code.ring().m()),
            images: code.codewords().map(|c| psi_vec(c, Layout::Interleaved)).collect(),
        }
    }

    pub fn sum(&self, u: &RkVector) -> CyclotomicInt {
        let pu = psi_vec(u, Layout::Interleaved);
        let mut counts = vec![0i64; self.m as usize];
        for img in &self.images {
            let e = img.iter().zip(&pu).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % self.m;
            counts[e as usize] += 1;
        }
        let terms: Vec<CyclotomicInt> = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| self.cyc.scale(&self.cyc.root_pow(e as u64), c))
            .collect();
        self.cyc.sum(terms.iter())
    }
}

/// Symbol composition of a word: `n_b(c)` for every element index `b`.
fn composition(c: &RkVector, q: usize) -> Vec<u32> {
    let mut counts = vec![0u32; q];
    for e in c.entries() {
        counts[e.index() as usize] += 1;
    }
    counts
}

/// `cwe_C(X) = sum_c prod_b X_b^(n_b(c))`, stored as composition -> count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteWE {
    ring: RingSpec,
    n: usize,
    counts: BTreeMap<Vec<u32>, u64>,
}

impl CompleteWE {
    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn counts(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

impl Serialize for CompleteWE {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let symbols: Vec<Vec<u32>> = (0..self.counts.keys().next().map_or(0, Vec::len))
            .map(|i| self.ring.element_at(i as u128).coeffs().to_vec())
            .collect();
        let counts: BTreeMap<String, u64> = self
            .counts
            .iter()
            .map(|(k, &v)| (stringify_key(k), v))
            .collect();
        let mut st = s.serialize_struct("CompleteWE", 4)?;
        st.serialize_field("ring", &self.ring)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("symbols", &symbols)?;
        st.serialize_field("counts", &counts)?;
        st.end()
    }
}

fn stringify_key(k: &[u32]) -> String {
    let parts: Vec<String> = k.iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn table_order(ring: RingSpec, guard: Guard) -> Result<usize> {
    let q = ring.cardinality()?;
    if q > MAX_TABLE_ORDER {
        return Err(Error::GuardExceeded {
            what: "character table order".into(),
            count: q,
            cap: MAX_TABLE_ORDER,
        });
    }
    guard.check("character table entries", q * q)?;
    Ok(q as usize)
}

pub fn cwe(code: &LinearCode, guard: Guard) -> Result<CompleteWE> {
    let q = table_order(code.ring(), guard)?;
    let mut counts = BTreeMap::new();
    for c in code.codewords() {
        *counts.entry(composition(c, q)).or_insert(0) += 1;
    }
    Ok(CompleteWE {
        ring: code.ring(),
        n: code.len(),
        counts,
    })
}

/// `T_{a,b} = chi(a b)` and `(T_H)_{a,b} = chi(a Theta_{1..k}(b))`, rows and
/// columns in element index order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    ring: RingSpec,
    cyc: CyclotomicRing,
    q: usize,
    t: Vec<CyclotomicInt>,
    t_h: Vec<CyclotomicInt>,
}

impl CharacterTable {
    pub fn new(ring: RingSpec, guard: Guard) -> Result<Self> {
        let q = table_order(ring, guard)?;
        let cyc = CyclotomicRing::new(ring.m());
        let elements = ring.elements(guard)?;
        let full = ring.width() - 1;
        let conj: Vec<RkElement> = elements.iter().map(|b| apply_theta(full, b)).collect();
        let mut t = Vec::with_capacity(q * q);
        let mut t_h = Vec::with_capacity(q * q);
        for a in &elements {
            for (b, bc) in elements.iter().zip(&conj) {
                t.push(chi_rk(&cyc, &(a * b)));
                t_h.push(chi_rk(&cyc, &(a * bc)));
            }
        }
        Ok(CharacterTable { ring, cyc, q, t, t_h })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn cyclotomic(&self) -> &CyclotomicRing {
        &self.cyc
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn t(&self, a: usize, b: usize) -> &CyclotomicInt {
        &self.t[a * self.q + b]
    }

    pub fn t_h(&self, a: usize, b: usize) -> &CyclotomicInt {
        &self.t_h[a * self.q + b]
    }

    pub fn t_rows(&self) -> Vec<Vec<CyclotomicInt>> {
        self.t.chunks(self.q).map(<[CyclotomicInt]>::to_vec).collect()
    }

    pub fn t_h_rows(&self) -> Vec<Vec<CyclotomicInt>> {
        self.t_h.chunks(self.q).map(<[CyclotomicInt]>::to_vec).collect()
    }
}

impl Serialize for CharacterTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CharacterTable", 3)?;
        st.serialize_field("ring", &self.ring)?;
        st.serialize_field("t", &self.t_rows())?;
        st.serialize_field("t_h", &self.t_h_rows())?;
        st.end()
    }
}

/// `h(b) = (n+1)^b`, under which distinct monomials of total degree `n`
/// evaluate to distinct powers of `y`; `None` when the degree is too large.
pub fn separating_map(vars: usize, n: usize) -> Option<Vec<u64>> {
    let base = n as u128 + 1;
    let top = (vars as u32)
        .checked_sub(1)
        .and_then(|e| base.checked_pow(e))
        .and_then(|top| top.checked_mul(n as u128))?;
    (top <= KRONECKER_MAX_DEGREE).then(|| (0..vars as u32).map(|i| base.pow(i) as u64).collect())
}

/// Exponent maps `h` used to evaluate enumerators, one `Vec` per map,
/// indexed by variable.
pub fn evaluation_panel(vars: usize, n: usize) -> Vec<Vec<u64>> {
    let mut panel: Vec<Vec<u64>> = separating_map(vars, n).into_iter().collect();
    let q = vars as u64;
    let mut multipliers = vec![1u64];
    if q > 1 {
        multipliers.push(q - 1);
    }
    multipliers.extend((3..q).filter(|&a| gcd(a as u32, q as u32) == 1).take(2));
    for (offset, &a) in multipliers.iter().enumerate() {
        let h: Vec<u64> = (0..q).map(|i| (a * i + offset as u64) % q.max(1)).collect();
        if !panel.contains(&h) {
            panel.push(h);
        }
    }
    panel
}

/// Evaluates `sum_comp count * prod_v P_v^(n_v)` with `P_v` given.
fn evaluate_substituted(
    cyc: &CyclotomicRing,
    counts: &BTreeMap<Vec<u32>, u64>,
    polys: &[YPoly],
) -> YPoly {
    let mut powers: HashMap<(usize, u32), YPoly> = HashMap::new();
    let mut acc = cyc.poly_zero();
    for (comp, &count) in counts {
        let mut term = cyc.poly_one();
        for (v, &e) in comp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = powers
                .entry((v, e))
                .or_insert_with(|| cyc.poly_pow(&polys[v], e as usize));
            term = cyc.poly_mul(&term, p);
        }
        acc = cyc.poly_add(&acc, &cyc.poly_scale(&term, count as i64));
    }
    acc
}

/// Evaluates `sum_comp count * y^(sum_v n_v h(v))`, scaled by `factor`.
fn evaluate_monomial(cyc: &CyclotomicRing, counts: &BTreeMap<Vec<u32>, u64>, h: &[u64], factor: i64) -> YPoly {
    let mut acc = cyc.poly_zero();
    for (comp, &count) in counts {
        let deg: u64 = comp.iter().zip(h).map(|(&e, &hv)| e as u64 * hv).sum();
        let c = cyc.from_int(count as i64 * factor);
        acc = cyc.poly_add(&acc, &cyc.poly_monomial(&c, deg as usize));
    }
    acc
}

/// Checks `|C| enum_dual(Y) = enum_C(M Y)` on every panel map.
fn panel_identity(
    cyc: &CyclotomicRing,
    lhs_counts: &BTreeMap<Vec<u32>, u64>,
    rhs_counts: &BTreeMap<Vec<u32>, u64>,
    code_size: usize,
    n: usize,
    matrix: impl Fn(usize, usize) -> CyclotomicInt,
    vars: usize,
) -> bool {
    evaluation_panel(vars, n).iter().all(|h| {
        let lhs = evaluate_monomial(cyc, lhs_counts, h, code_size as i64);
        let polys: Vec<YPoly> = (0..vars)
            .map(|a| {
                (0..vars).fold(cyc.poly_zero(), |acc, b| {
                    cyc.poly_add(&acc, &cyc.poly_monomial(&matrix(a, b), h[b] as usize))
                })
            })
            .collect();
        lhs == evaluate_substituted(cyc, rhs_counts, &polys)
    })
}

/// Verdicts of the two complete-weight-enumerator identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CweVerification {
    /// `cwe_{C^perp}(X) = cwe_C(T X) / |C|`.
    pub euclidean: bool,
    /// `cwe_{C^H}(X) = cwe_C(T_H X) / |C|`.
    pub hermitian: bool,
    /// Whether the panel included the separating exponent map.
    pub separating: bool,
}

impl CweVerification {
    pub fn holds(&self) -> bool {
        self.euclidean && self.hermitian
    }
}

/// Checks both complete-weight-enumerator MacWilliams identities, with the
/// duals found by exhaustive scan.
pub fn verify_cwe_macwilliams(code: &LinearCode, guard: Guard) -> Result<CweVerification> {
    let table = CharacterTable::new(code.ring(), guard)?;
    let dual = code.euclidean_dual(guard)?;
    let herm = code.hermitian_dual(guard)?;
    verify_cwe_with(code, &table, &dual, &herm, guard)
}

/// [`verify_cwe_macwilliams`] with precomputed table and duals.
pub fn verify_cwe_with(
    code: &LinearCode,
    table: &CharacterTable,
    dual: &LinearCode,
    hermitian_dual: &LinearCode,
    guard: Guard,
) -> Result<CweVerification> {
    let q = table.order();
    let n = code.len();
    let rhs = cwe(code, guard)?;
    let cyc = table.cyclotomic();
    let euclidean = panel_identity(
        cyc,
        &cwe(dual, guard)?.counts,
        &rhs.counts,
        code.size(),
        n,
        |a, b| table.t(a, b).clone(),
        q,
    );
    let hermitian = panel_identity(
        cyc,
        &cwe(hermitian_dual, guard)?.counts,
        &rhs.counts,
        code.size(),
        n,
        |a, b| table.t_h(a, b).clone(),
        q,
    );
    let separating = separating_map(q, n).is_some();
    Ok(CweVerification {
        euclidean,
        hermitian,
        separating,
    })
}

/// A subgroup `G` of the unit group of `R_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    ring: RingSpec,
    members: Vec<RkElement>,
}

impl UnitGroup {
    /// Validates that `members` is a nonempty set of units closed under
    /// multiplication, which for a finite set makes it a group.
    pub fn new(ring: RingSpec, mut members: Vec<RkElement>) -> Result<Self> {
        members.sort();
        members.dedup();
        if members.is_empty() {
            return Err(Error::invalid("unit group must be nonempty"));
        }
        for u in &members {
            if u.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: u.ring(),
                });
            }
            if !u.is_unit() {
                return Err(Error::invalid(format!("{u} is not a unit")));
            }
        }
        for a in &members {
            for b in &members {
                if members.binary_search(&(a * b)).is_err() {
                    return Err(Error::invalid(format!("{a} * {b} falls outside the group")));
                }
            }
            let inv = a.inverse().expect("checked unit");
            if members.binary_search(&inv).is_err() {
                return Err(Error::invalid(format!("inverse of {a} missing")));
            }
        }
        Ok(UnitGroup { ring, members })
    }

    pub fn trivial(ring: RingSpec) -> Self {
        UnitGroup {
            ring,
            members: vec![ring.one()],
        }
    }

    pub fn full(ring: RingSpec, guard: Guard) -> Result<Self> {
        UnitGroup::new(ring, ring.units(guard)?)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn members(&self) -> &[RkElement] {
        &self.members
    }
}

/// Orbits of `R_k` under multiplication by `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitClasses {
    /// Element index of each representative, ordered by representative.
    reps: Vec<usize>,
    /// Class position of each element index.
    class_of: Vec<usize>,
}

impl UnitClasses {
    pub fn new(group: &UnitGroup, guard: Guard) -> Result<Self> {
        let elements = group.ring.elements(guard)?;
        let mut rep_of: Vec<usize> = vec![usize::MAX; elements.len()];
        for (i, a) in elements.iter().enumerate() {
            let orbit: Vec<usize> = group.members.iter().map(|u| (u * a).index() as usize).collect();
            let least = *orbit.iter().min_by_key(|&&j| &elements[j]).expect("nonempty group");
            rep_of[i] = least;
        }
        let mut reps: Vec<usize> = rep_of.clone();
        reps.sort_by_key(|&j| &elements[j]);
        reps.dedup();
        let class_of = rep_of
            .iter()
            .map(|r| reps.iter().position(|x| x == r).expect("rep listed"))
            .collect();
        Ok(UnitClasses { reps, class_of })
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub fn class_of(&self, element_index: usize) -> usize {
        self.class_of[element_index]
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Member element indices of class `c`.
    pub fn members(&self, c: usize) -> Vec<usize> {
        (0..self.class_of.len()).filter(|&i| self.class_of[i] == c).collect()
    }
}

/// `S_{a,b} = sum_{g ~ b} T_{a,g}` for representatives `a, b`. Also checks
/// that the full row of every element equals the row of its representative.
pub fn s_matrix(table: &CharacterTable, classes: &UnitClasses) -> Result<Vec<Vec<CyclotomicInt>>> {
    let cyc = table.cyclotomic();
    let members: Vec<Vec<usize>> = (0..classes.len()).map(|c| classes.members(c)).collect();
    let row = |a: usize| -> Vec<CyclotomicInt> {
        members
            .iter()
            .map(|cls| cyc.sum(cls.iter().map(|&g| table.t(a, g))))
            .collect()
    };
    let s: Vec<Vec<CyclotomicInt>> = classes.reps.iter().map(|&a| row(a)).collect();
    for a in 0..table.order() {
        if row(a) != s[classes.class_of(a)] {
            return Err(Error::invalid(format!(
                "S row of element {a} differs from its representative's row"
            )));
        }
    }
    Ok(s)
}

/// `swe_C(Y) = sum_c prod_a Y_a^(swc_a(c))`, keyed by class-count vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizedWE {
    counts: BTreeMap<Vec<u32>, u64>,
}

impl SymmetrizedWE {
    pub fn counts(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

impl Serialize for SymmetrizedWE {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let counts: BTreeMap<String, u64> = self
            .counts
            .iter()
            .map(|(k, &v)| (stringify_key(k), v))
            .collect();
        counts.serialize(s)
    }
}

pub fn swe(code: &LinearCode, classes: &UnitClasses) -> SymmetrizedWE {
    let mut counts = BTreeMap::new();
    for c in code.codewords() {
        let mut key = vec![0u32; classes.len()];
        for e in c.entries() {
            key[classes.class_of(e.index() as usize)] += 1;
        }
        *counts.entry(key).or_insert(0) += 1;
    }
    SymmetrizedWE { counts }
}

/// Checks `swe_{C^perp}(Y) = swe_C(S Y) / |C|` on the evaluation panel.
pub fn verify_swe_macwilliams(code: &LinearCode, group: &UnitGroup, guard: Guard) -> Result<bool> {
    if group.ring() != code.ring() {
        return Err(Error::RingMismatch {
            left: code.ring(),
            right: group.ring(),
        });
    }
    let table = CharacterTable::new(code.ring(), guard)?;
    let classes = UnitClasses::new(group, guard)?;
    let dual = code.euclidean_dual(guard)?;
    verify_swe_with(code, &table, &classes, &dual)
}

/// [`verify_swe_macwilliams`] with precomputed table, classes and dual.
pub fn verify_swe_with(
    code: &LinearCode,
    table: &CharacterTable,
    classes: &UnitClasses,
    dual: &LinearCode,
) -> Result<bool> {
    let s = s_matrix(table, classes)?;
    Ok(panel_identity(
        table.cyclotomic(),
        &swe(dual, classes).counts,
        &swe(code, classes).counts,
        code.size(),
        code.len(),
        |a, b| s[a][b].clone(),
        classes.len(),
    ))
}
