//! Exact arithmetic in `Z[x] / Phi_m(x)`, with `x` standing for a primitive
//! `m`-th root of unity `xi`.
//!
//! [`YPoly`] adds a formal variable `y` on top, for evaluating weight
//! enumerators at monomial substitutions `X_b = y^h(b)`.

use serde::Serialize;

/// Integer polynomial division by a monic divisor; `None` if not exact.
fn exact_div(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return None;
    }
    let mut quot = vec![0; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    rem.iter().all(|&r| r == 0).then_some(quot)
}

/// Coefficients of the `m`-th cyclotomic polynomial, lowest degree first:
/// `x^m - 1` divided by every `Phi_d` with `d | m, d < m`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = exact_div(&p, &cyclotomic_polynomial(d)).expect("Phi_d divides x^m - 1");
        }
    }
    p
}

/// Element of `Z[xi_m]` in the power basis `1, xi, ..., xi^(phi(m)-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CyclotomicInt {
    coeffs: Vec<i64>,
}

impl CyclotomicInt {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The integer value, if the element lies in `Z`.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then(|| self.coeffs[0])
    }
}

#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    m: u32,
    degree: usize,
    /// `powers[e] = x^e mod Phi_m` for `e < max(m, 2 degree - 1)`.
    powers: Vec<Vec<i64>>,
}

impl CyclotomicRing {
    pub fn new(m: u32) -> Self {
        assert!(m >= 1);
        let modulus = cyclotomic_polynomial(m);
        let degree = modulus.len() - 1;
        let count = (m as usize).max(2 * degree - 1);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic modulus
            let top = cur[degree - 1];
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1] - top * modulus[j];
            }
            cur[0] = -top * modulus[0];
        }
        CyclotomicRing { m, degree, powers }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `phi(m)`, the dimension of the power basis.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&self) -> CyclotomicInt {
        CyclotomicInt {
            coeffs: vec![0; self.degree],
        }
    }

    pub fn from_int(&self, c: i64) -> CyclotomicInt {
        let mut z = self.zero();
        z.coeffs[0] = c;
        z
    }

    pub fn one(&self) -> CyclotomicInt {
        self.from_int(1)
    }

    /// `xi^e`.
    pub fn root_pow(&self, e: u64) -> CyclotomicInt {
        CyclotomicInt {
            coeffs: self.powers[(e % self.m as u64) as usize].clone(),
        }
    }

    pub fn add(&self, a: &CyclotomicInt, b: &CyclotomicInt) -> CyclotomicInt {
        CyclotomicInt {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &CyclotomicInt, b: &CyclotomicInt) -> CyclotomicInt {
        CyclotomicInt {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, a: &CyclotomicInt, c: i64) -> CyclotomicInt {
        CyclotomicInt {
            coeffs: a.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Reduces an unreduced product of length `2 degree - 1` into `out`.
    fn reduce_into(&self, wide: &[i64], out: &mut [i64]) {
        for (e, &c) in wide.iter().enumerate() {
            if c != 0 {
                for (o, &p) in out.iter_mut().zip(&self.powers[e]) {
                    *o += c * p;
                }
            }
        }
    }

    pub fn mul(&self, a: &CyclotomicInt, b: &CyclotomicInt) -> CyclotomicInt {
        let mut wide = vec![0i64; 2 * self.degree - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x != 0 {
                for (j, &y) in b.coeffs.iter().enumerate() {
                    wide[i + j] += x * y;
                }
            }
        }
        let mut out = self.zero();
        self.reduce_into(&wide, &mut out.coeffs);
        out
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a CyclotomicInt>) -> CyclotomicInt {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_exact(&self, a: &CyclotomicInt, d: i64) -> Option<CyclotomicInt> {
        a.coeffs
            .iter()
            .map(|&c| (c % d == 0).then_some(c / d))
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| CyclotomicInt { coeffs })
    }

    pub fn poly_zero(&self) -> YPoly {
        YPoly {
            degree: self.degree,
            data: Vec::new(),
        }
    }

    /// `c y^d`.
    pub fn poly_monomial(&self, c: &CyclotomicInt, d: usize) -> YPoly {
        let mut data = vec![0; (d + 1) * self.degree];
        data[d * self.degree..].copy_from_slice(&c.coeffs);
        YPoly {
            degree: self.degree,
            data,
        }
        .trimmed()
    }

    pub fn poly_one(&self) -> YPoly {
        self.poly_monomial(&self.one(), 0)
    }

    pub fn poly_add(&self, a: &YPoly, b: &YPoly) -> YPoly {
        let (long, short) = if a.data.len() >= b.data.len() { (a, b) } else { (b, a) };
        let mut data = long.data.clone();
        for (x, y) in data.iter_mut().zip(&short.data) {
            *x += y;
        }
        YPoly {
            degree: self.degree,
            data,
        }
        .trimmed()
    }

    pub fn poly_scale(&self, a: &YPoly, c: i64) -> YPoly {
        YPoly {
            degree: self.degree,
            data: a.data.iter().map(|x| x * c).collect(),
        }
        .trimmed()
    }

    pub fn poly_mul(&self, a: &YPoly, b: &YPoly) -> YPoly {
        if a.data.is_empty() || b.data.is_empty() {
            return self.poly_zero();
        }
        let deg = self.degree;
        let wide_len = 2 * deg - 1;
        let terms = a.terms() + b.terms() - 1;
        let mut wide = vec![0i64; terms * wide_len];
        for (i, xa) in a.data.chunks(deg).enumerate() {
            if xa.iter().all(|&c| c == 0) {
                continue;
            }
            for (j, xb) in b.data.chunks(deg).enumerate() {
                let slot = &mut wide[(i + j) * wide_len..(i + j + 1) * wide_len];
                for (s, &p) in xa.iter().enumerate() {
                    if p != 0 {
                        for (t, &q) in xb.iter().enumerate() {
                            slot[s + t] += p * q;
                        }
                    }
                }
            }
        }
        let mut data = vec![0i64; terms * deg];
        for (t, chunk) in wide.chunks(wide_len).enumerate() {
            self.reduce_into(chunk, &mut data[t * deg..(t + 1) * deg]);
        }
        YPoly { degree: deg, data }.trimmed()
    }

    pub fn poly_pow(&self, a: &YPoly, e: usize) -> YPoly {
        (0..e).fold(self.poly_one(), |acc, _| self.poly_mul(&acc, a))
    }
}

/// Polynomial in `y` with coefficients in `Z[xi_m]`, trailing zero terms
/// trimmed so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YPoly {
    degree: usize,
    data: Vec<i64>,
}

impl YPoly {
    fn terms(&self) -> usize {
        self.data.len() / self.degree
    }

    fn trimmed(mut self) -> YPoly {
        while self.data.len() >= self.degree && self.data[self.data.len() - self.degree..].iter().all(|&c| c == 0) {
            self.data.truncate(self.data.len() - self.degree);
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_empty()
    }

    /// Coefficient of `y^d`.
    pub fn coeff(&self, d: usize) -> CyclotomicInt {
        let deg = self.degree;
        let coeffs = self
            .data
            .get(d * deg..(d + 1) * deg)
            .map_or_else(|| vec![0; deg], <[i64]>::to_vec);
        CyclotomicInt { coeffs }
    }

    /// Number of coefficients up to the leading one.
    pub fn len(&self) -> usize {
        self.terms()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }
}
