//! Arithmetic in the tower `F_p ⊆ F_q ⊆ F_{q^s} ⊆ F_{q^n}`.
//!
//! The whole tower is realized as a single field `F_{p^{en}}` built from a
//! primitive polynomial over the prime field. Elements are stored as their
//! little-endian base-`p` digit string read as an integer, so the derived
//! ordering on [`FieldElement`] is the canonical tie-break order used by the
//! subspace canonical forms. `F_q = F_{p^e}` is the subfield generated by
//! `ω^{(p^{en}-1)/(q-1)}` and all "over `F_q`" linear algebra uses coordinates
//! with respect to the basis `1, ω, .., ω^{n-1}`.

pub mod conway;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::LinearMap;

pub use conway::conway_polynomial;

/// Default bound on the number of elements of the full field.
pub const DEFAULT_SIZE_CAP: u64 = 1 << 24;

/// Fields up to this size get a dense table of `F_q`-coordinates when `q` is
/// not prime.
const COORD_TABLE_LIMIT: u32 = 1 << 16;

const NONE: u32 = u32::MAX;

/// An element of `F_{p^{en}}`, stored as the integer whose base-`p` digits are
/// its coordinates in the basis `1, ω, .., ω^{en-1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub const fn from_index(index: u32) -> Self {
        FieldElement(index)
    }

    /// The canonical integer rank of the element.
    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The ambient field `F_{q^n}` together with its subfield lattice.
pub struct FieldTower {
    p: u32,
    e: u32,
    n: u32,
    degree: u32,
    q: u32,
    size: u32,
    order: u32,
    poly: Vec<u32>,
    pow_p: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    fq: Vec<FieldElement>,
    fq_basis: Vec<FieldElement>,
    prime_to_fq: Vec<Vec<FieldElement>>,
    coord_table: Option<Vec<FieldElement>>,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTower")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("n", &self.n)
            .field("poly", &self.poly)
            .finish()
    }
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.n == other.n && self.poly == other.poly
    }
}

impl Eq for FieldTower {}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds the tower `F_{q^n}` with `q = p^e`, using the embedded Conway
/// polynomial unless `poly_override` is given.
pub fn make_field(p: u32, e: u32, n: u32, poly_override: Option<&[u32]>) -> Result<Arc<FieldTower>> {
    make_field_with_cap(p, e, n, poly_override, DEFAULT_SIZE_CAP)
}

pub fn make_field_with_cap(
    p: u32,
    e: u32,
    n: u32,
    poly_override: Option<&[u32]>,
    cap: u64,
) -> Result<Arc<FieldTower>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 || n == 0 {
        return Err(Error::InvalidParameter("e and n must be positive".into()));
    }
    let degree = e
        .checked_mul(n)
        .ok_or_else(|| Error::InvalidParameter("degree overflow".into()))?;
    let size = (p as u128).checked_pow(degree).unwrap_or(u128::MAX);
    if size > cap as u128 || size > u32::MAX as u128 / 2 {
        return Err(Error::FieldTooLarge { p, degree, cap });
    }
    let poly: Vec<u32> = match poly_override {
        Some(c) => {
            if c.len() != degree as usize {
                return Err(Error::MalformedPolynomial(format!(
                    "expected {degree} non-leading coefficients, got {}",
                    c.len()
                )));
            }
            if let Some(bad) = c.iter().find(|&&d| d >= p) {
                return Err(Error::MalformedPolynomial(format!("digit {bad} is not below {p}")));
            }
            c.to_vec()
        }
        None => conway_polynomial(p, degree).ok_or(Error::NoDefaultPolynomial { p, degree })?,
    };
    FieldTower::build(p, e, n, poly).map(Arc::new)
}

/// Parses the comma-separated polynomial override format `c_0,..,c_{m-1}`.
pub fn parse_polynomial(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::MalformedPolynomial(format!("bad coefficient {t:?}")))
        })
        .collect()
}

impl FieldTower {
    fn build(p: u32, e: u32, n: u32, poly: Vec<u32>) -> Result<Self> {
        let degree = e * n;
        let mut pow_p = Vec::with_capacity(degree as usize + 1);
        let mut acc = 1u32;
        for _ in 0..=degree {
            pow_p.push(acc);
            acc = acc.saturating_mul(p);
        }
        let size = pow_p[degree as usize];
        let order = size - 1;
        let q = pow_p[e as usize];

        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![NONE; size as usize];
        let mut cur = 1u32;
        for i in 0..order {
            if i > 0 && cur == 1 {
                return Err(Error::NonPrimitivePolynomial {
                    order: i as u64,
                    expected: order as u64,
                });
            }
            if cur == 0 {
                return Err(Error::NonPrimitivePolynomial { order: 0, expected: order as u64 });
            }
            exp[i as usize] = cur;
            log[cur as usize] = i;
            cur = times_x(cur, p, degree, &poly, &pow_p);
        }
        if cur != 1 {
            return Err(Error::NonPrimitivePolynomial { order: 0, expected: order as u64 });
        }
        for i in 0..order as usize {
            exp[i + order as usize] = exp[i];
        }

        let mut tower = FieldTower {
            p,
            e,
            n,
            degree,
            q,
            size,
            order,
            poly,
            pow_p,
            exp,
            log,
            zech: Vec::new(),
            fq: Vec::new(),
            fq_basis: Vec::new(),
            prime_to_fq: Vec::new(),
            coord_table: None,
        };
        if p != 2 {
            let zech = (0..order)
                .map(|d| {
                    let s = tower.add_digitwise(1, tower.exp[d as usize]);
                    if s == 0 {
                        NONE
                    } else {
                        tower.log[s as usize]
                    }
                })
                .collect();
            tower.zech = zech;
        }
        let zeta_exp = order / (q - 1);
        let mut fq = vec![FieldElement::ZERO];
        fq.extend((0..q - 1).map(|j| FieldElement(tower.exp[(j * zeta_exp) as usize])));
        tower.fq = fq;
        tower.fq_basis = (0..n).map(|j| FieldElement(tower.exp[j as usize])).collect();
        if e > 1 {
            tower.build_coordinate_maps();
        }
        Ok(tower)
    }

    fn build_coordinate_maps(&mut self) {
        let m = self.degree as usize;
        let n = self.n as usize;
        let p = self.p;
        let zeta = self.fq[2.min(self.fq.len() - 1)];
        // Rows: digits of zeta^a * omega^j, row index a * n + j.
        let mut rows = Vec::with_capacity(m);
        let mut zeta_pows = Vec::with_capacity(self.e as usize);
        let mut z = FieldElement::ONE;
        for _ in 0..self.e {
            zeta_pows.push(z);
            z = self.mul(z, zeta);
        }
        for &zp in &zeta_pows {
            for &b in &self.fq_basis[..n] {
                rows.push(self.digits(self.mul(zp, b)));
            }
        }
        let inv = invert_mod_p(rows, p).expect("power basis over F_q is a basis");
        let mut prime_to_fq = Vec::with_capacity(m);
        for row in inv.iter() {
            let coords: Vec<FieldElement> = (0..n)
                .map(|j| {
                    (0..self.e as usize).fold(FieldElement::ZERO, |acc, a| {
                        let c = FieldElement(row[a * n + j]);
                        self.add(acc, self.mul(c, zeta_pows[a]))
                    })
                })
                .collect();
            prime_to_fq.push(coords);
        }
        self.prime_to_fq = prime_to_fq;
        if self.size <= COORD_TABLE_LIMIT {
            let mut table = Vec::with_capacity(self.size as usize * n);
            for x in 0..self.size {
                for j in 0..n {
                    table.push(self.fq_coord_slow(FieldElement(x), j));
                }
            }
            self.coord_table = Some(table);
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Extension degree over `F_q`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of elements of the full field.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Order of `ω`, i.e. `q^n - 1`.
    pub fn omega_order(&self) -> u32 {
        self.order
    }

    /// Non-leading coefficients of the defining polynomial, lowest degree first.
    pub fn polynomial(&self) -> &[u32] {
        &self.poly
    }

    pub fn is_binary(&self) -> bool {
        self.p == 2 && self.e == 1
    }

    /// `q^i` as an integer.
    pub fn q_pow(&self, i: u32) -> u64 {
        (self.q as u64).pow(i)
    }

    /// Divisors of `n` in increasing order.
    pub fn divisors(&self) -> Vec<u32> {
        (1..=self.n).filter(|d| self.n.is_multiple_of(*d)).collect()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn omega(&self) -> FieldElement {
        FieldElement(self.exp[1 % self.order as usize])
    }

    pub fn omega_pow(&self, i: i64) -> FieldElement {
        FieldElement(self.exp[i.rem_euclid(self.order as i64) as usize])
    }

    /// Discrete logarithm to base `ω`; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        match self.log[a.0 as usize] {
            NONE => None,
            l => Some(l),
        }
    }

    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.size {
            Ok(FieldElement(index))
        } else {
            Err(Error::InvalidParameter(format!("element index {index} out of range")))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size).map(FieldElement)
    }

    /// Prime-field digits of `a`, lowest power of `ω` first.
    pub fn digits(&self, a: FieldElement) -> Vec<u32> {
        let mut x = a.0;
        (0..self.degree)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<FieldElement> {
        if digits.len() != self.degree as usize || digits.iter().any(|&d| d >= self.p) {
            return Err(Error::InvalidParameter(format!("bad digit vector {digits:?}")));
        }
        Ok(FieldElement(
            digits.iter().rev().fold(0u32, |acc, &d| acc * self.p + d),
        ))
    }

    fn add_digitwise(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for i in 0..self.degree as usize {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * self.pow_p[i];
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let d = if lb >= la { lb - la } else { lb + self.order - la };
        match self.zech[d as usize] {
            NONE => FieldElement::ZERO,
            z => FieldElement(self.exp[(la + z) as usize]),
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.order / 2) as usize])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        match self.log[a.0 as usize] {
            NONE => Err(Error::InverseOfZero),
            l => Ok(FieldElement(self.exp[((self.order - l) % self.order) as usize])),
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement::ONE;
        }
        match self.log[a.0 as usize] {
            NONE => FieldElement::ZERO,
            l => {
                let t = (l as u128 * k as u128) % self.order as u128;
                FieldElement(self.exp[t as usize])
            }
        }
    }

    /// `a^{q^i}`; negative `i` gives the inverse automorphism.
    pub fn frobenius(&self, a: FieldElement, i: i64) -> FieldElement {
        let i = i.rem_euclid(self.n as i64) as u32;
        if i == 0 || a.0 == 0 {
            return a;
        }
        let qi = mod_pow(self.q as u64, i as u64, self.order as u64);
        let l = self.log[a.0 as usize] as u64;
        FieldElement(self.exp[((l * qi) % self.order as u64) as usize])
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        let l = self.log(a)? as u64;
        Some(self.order as u64 / gcd(l, self.order as u64))
    }

    /// Multiplication through the companion-matrix action only, without the
    /// log tables: `a * b = Σ_i b_i (ω^i a)`.
    pub fn mul_via_companion(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut shifted = a.0;
        let mut acc = 0u32;
        for d in self.digits(b) {
            for _ in 0..d {
                acc = self.add_digitwise(acc, shifted);
            }
            shifted = times_x(shifted, self.p, self.degree, &self.poly, &self.pow_p);
        }
        FieldElement(acc)
    }

    /// Exponent `N = (q^n - 1)/(q^s - 1)` with `ω^N` primitive in `F_{q^s}`.
    pub fn subfield_exponent(&self, s: u32) -> Result<u32> {
        self.check_divisor(s)?;
        Ok((self.order as u64 / (self.q_pow(s) - 1)) as u32)
    }

    /// Primitive element `ω^N` of `F_{q^s}`.
    pub fn subfield_generator(&self, s: u32) -> Result<FieldElement> {
        let nexp = self.subfield_exponent(s)?;
        Ok(FieldElement(self.exp[nexp as usize % self.order as usize]))
    }

    pub fn check_divisor(&self, s: u32) -> Result<()> {
        if s == 0 || !self.n.is_multiple_of(s) {
            Err(Error::NotADivisor { s, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn in_subfield(&self, a: FieldElement, s: u32) -> bool {
        self.frobenius(a, s as i64) == a
    }

    /// `1, ω, .., ω^{n/s-1}`, a basis of `F_{q^n}` over `F_{q^s}`.
    pub fn subfield_basis(&self, s: u32) -> Result<Vec<FieldElement>> {
        self.check_divisor(s)?;
        Ok((0..self.n / s).map(|j| FieldElement(self.exp[j as usize])).collect())
    }

    /// Matrix of multiplication by `ω` in the `F_q`-basis `1, ω, .., ω^{n-1}`.
    pub fn companion_matrix(self: &Arc<Self>) -> LinearMap {
        LinearMap::multiplication(self, self.omega())
    }

    /// Elements of the embedded `F_q`: zero followed by `ζ^0, ζ^1, ..`.
    pub fn fq_elements(&self) -> &[FieldElement] {
        &self.fq
    }

    /// The `F_q`-basis `1, ω, .., ω^{n-1}`.
    pub fn fq_basis(&self) -> &[FieldElement] {
        &self.fq_basis
    }

    pub fn in_fq(&self, a: FieldElement) -> bool {
        if self.e == 1 {
            a.0 < self.p
        } else {
            self.pow(a, self.q as u64) == a
        }
    }

    /// `F_q`-coordinate `j` of `a` in the basis `1, ω, .., ω^{n-1}`.
    #[inline]
    pub fn fq_coord(&self, a: FieldElement, j: usize) -> FieldElement {
        if self.e == 1 {
            if self.p == 2 {
                FieldElement((a.0 >> j) & 1)
            } else {
                FieldElement((a.0 / self.pow_p[j]) % self.p)
            }
        } else if let Some(t) = &self.coord_table {
            t[a.0 as usize * self.n as usize + j]
        } else {
            self.fq_coord_slow(a, j)
        }
    }

    fn fq_coord_slow(&self, a: FieldElement, j: usize) -> FieldElement {
        let mut x = a.0;
        let mut acc = FieldElement::ZERO;
        for t in 0..self.degree as usize {
            let d = x % self.p;
            x /= self.p;
            if d != 0 {
                acc = self.add(acc, self.mul(FieldElement(d), self.prime_to_fq[t][j]));
            }
        }
        acc
    }

    pub fn fq_coords(&self, a: FieldElement) -> Vec<FieldElement> {
        (0..self.n as usize).map(|j| self.fq_coord(a, j)).collect()
    }

    /// Inverse of [`fq_coords`](Self::fq_coords).
    pub fn from_fq_coords(&self, coords: &[FieldElement]) -> FieldElement {
        debug_assert_eq!(coords.len(), self.n as usize);
        if self.e == 1 {
            FieldElement(
                coords
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c.0 * self.pow_p[j])
                    .sum(),
            )
        } else {
            coords
                .iter()
                .zip(&self.fq_basis)
                .fold(FieldElement::ZERO, |acc, (&c, &b)| self.add(acc, self.mul(c, b)))
        }
    }

    /// Formats an element as its base-`p` digit string, lowest power first.
    pub fn format_element(&self, a: FieldElement) -> String {
        self.digits(a)
            .into_iter()
            .map(|d| std::char::from_digit(d, 36).expect("p <= 36"))
            .collect()
    }

    /// Parses `0`, `1`, `w`, `w^i`, or a base-`p` digit string of length `e*n`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s == "0" {
            return Ok(FieldElement::ZERO);
        }
        if let Some(rest) = s.strip_prefix("w^") {
            let i: i64 = rest
                .parse()
                .map_err(|_| Error::Literal(format!("bad exponent in {s:?}")))?;
            return Ok(self.omega_pow(i));
        }
        if s == "w" {
            return Ok(self.omega());
        }
        if s == "1" {
            return Ok(FieldElement::ONE);
        }
        if s.len() != self.degree as usize {
            return Err(Error::Literal(format!(
                "digit string {s:?} must have exactly {} digits",
                self.degree
            )));
        }
        let digits = s
            .chars()
            .map(|c| c.to_digit(36).filter(|&d| d < self.p))
            .collect::<Option<Vec<u32>>>()
            .ok_or_else(|| Error::Literal(format!("bad digit in {s:?}")))?;
        self.from_digits(&digits)
    }
}

fn times_x(a: u32, p: u32, degree: u32, poly: &[u32], pow_p: &[u32]) -> u32 {
    let top_base = pow_p[degree as usize - 1];
    let top = a / top_base;
    let shifted = (a % top_base) * p;
    if top == 0 {
        return shifted;
    }
    if p == 2 {
        let mask: u32 = poly.iter().enumerate().map(|(i, &c)| c << i).sum();
        return shifted ^ mask;
    }
    // x^m = -Σ c_i x^i
    let mut out = 0;
    let mut s = shifted;
    for (i, &c) in poly.iter().enumerate() {
        let d = s % p;
        s /= p;
        let v = (d + p * p - (top * c) % p) % p;
        out += v * pow_p[i];
    }
    out
}

fn invert_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> Option<Vec<Vec<u32>>> {
    let m = rows.len();
    let mut inv: Vec<Vec<u32>> = (0..m)
        .map(|i| (0..m).map(|j| u32::from(i == j)).collect())
        .collect();
    for col in 0..m {
        let piv = (col..m).find(|&r| rows[r][col] != 0)?;
        rows.swap(col, piv);
        inv.swap(col, piv);
        let c = mod_pow(rows[col][col] as u64, p as u64 - 2, p as u64) as u32;
        for j in 0..m {
            rows[col][j] = rows[col][j] * c % p;
            inv[col][j] = inv[col][j] * c % p;
        }
        for r in 0..m {
            if r != col && rows[r][col] != 0 {
                let f = rows[r][col];
                for j in 0..m {
                    rows[r][j] = (rows[r][j] + p * p - f * rows[col][j] % p) % p;
                    inv[r][j] = (inv[r][j] + p * p - f * inv[col][j] % p) % p;
                }
            }
        }
    }
    // The inverse maps digit rows to (a, j)-coefficients: x = c * B  =>  c = x * B^{-1}.
    Some(inv)
}

pub(crate) fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u128;
    let mut b = base as u128 % modulus as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus as u128;
        }
        b = b * b % modulus as u128;
        exp >>= 1;
    }
    result as u64
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn degree_one_uses_least_primitive_root() {
        assert_eq!(conway_polynomial(7, 1), Some(vec![4]));
        assert_eq!(conway_polynomial(1021, 1), Some(vec![1011]));
        for p in (2..1024).filter(|&p| is_prime(p)) {
            let t = make_field(p, 1, 1, None).unwrap();
            assert_eq!(t.multiplicative_order(t.omega()), Some(p as u64 - 1));
        }
    }

    #[test]
    fn default_f16_polynomial_and_order() {
        let t = make_field(2, 1, 4, None).unwrap();
        assert_eq!(t.polynomial(), &[1, 1, 0, 0]);
        // exhaustive powering: the first return to 1 happens at 15
        let w = t.omega();
        let mut x = w;
        let mut k = 1;
        while x != t.one() {
            x = t.mul_via_companion(x, w);
            k += 1;
        }
        assert_eq!(k, 15);
        assert_eq!(t.pow(w, 15), t.one());
    }

    #[test]
    fn f4_inside_f256() {
        let t = make_field(2, 2, 4, None).unwrap();
        assert_eq!(t.q(), 4);
        assert_eq!(t.subfield_exponent(1).unwrap(), 85);
        let z = t.subfield_generator(1).unwrap();
        assert_eq!(t.multiplicative_order(z), Some(3));
        assert_eq!(t.fq_elements().len(), 4);
        assert!(t.fq_elements().iter().all(|&x| t.in_fq(x)));
    }

    #[test]
    fn cyclic_group_law_and_inverse() {
        let t = make_field(2, 1, 4, None).unwrap();
        for i in 0..15 {
            for j in 0..15 {
                assert_eq!(t.mul(t.omega_pow(i), t.omega_pow(j)), t.omega_pow(i + j));
            }
        }
        assert_eq!(t.inv(t.omega_pow(3)).unwrap(), t.omega_pow(12));
        assert_eq!(t.inv(t.zero()), Err(Error::InverseOfZero));
        let a = t.omega_pow(7);
        assert_eq!(t.mul(a, t.one()), a);
    }

    #[test]
    fn frobenius_basics() {
        let t = make_field(2, 1, 4, None).unwrap();
        assert_eq!(t.frobenius(t.omega(), 1), t.omega_pow(2));
        for a in t.elements() {
            assert_eq!(t.frobenius(a, 0), a);
            assert_eq!(t.frobenius(a, 4), a);
            assert_eq!(t.frobenius(t.frobenius(a, 1), -1), a);
        }
        let t = make_field(3, 2, 2, None).unwrap();
        for a in t.elements() {
            assert_eq!(t.frobenius(a, 1), t.pow(a, 9));
            assert_eq!(t.frobenius(a, 2), a);
        }
    }

    #[test]
    fn additive_structure_odd_characteristic() {
        let t = make_field(3, 1, 4, None).unwrap();
        for a in t.elements() {
            assert_eq!(t.add(a, t.neg(a)), t.zero());
            for b in t.elements().step_by(7) {
                assert_eq!(t.add(a, b).index(), t.add_digitwise(a.index(), b.index()));
            }
        }
    }

    #[test]
    fn log_table_agrees_with_companion_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, e, n) in [(2, 1, 8), (3, 1, 5), (5, 1, 3), (2, 2, 4), (7, 1, 3)] {
            let t = make_field(p, e, n, None).unwrap();
            for _ in 0..2000 {
                let a = FieldElement(rng.gen_range(0..t.size()));
                let b = FieldElement(rng.gen_range(0..t.size()));
                assert_eq!(t.mul(a, b), t.mul_via_companion(a, b));
            }
        }
    }

    #[test]
    fn subfield_generators_have_right_order() {
        for (p, e, n) in [(2, 1, 12), (3, 1, 6), (2, 2, 4), (5, 1, 4)] {
            let t = make_field(p, e, n, None).unwrap();
            for s in t.divisors() {
                let z = t.subfield_generator(s).unwrap();
                assert_eq!(t.multiplicative_order(z), Some(t.q_pow(s) - 1));
            }
        }
    }

    #[test]
    fn fq_coordinates_round_trip() {
        for (p, e, n) in [(2, 1, 6), (3, 1, 3), (2, 2, 3), (3, 2, 2), (2, 3, 2)] {
            let t = make_field(p, e, n, None).unwrap();
            for a in t.elements() {
                let c = t.fq_coords(a);
                assert!(c.iter().all(|&x| t.in_fq(x)));
                assert_eq!(t.from_fq_coords(&c), a);
            }
        }
    }

    #[test]
    fn subfield_basis_shapes() {
        let t = make_field(2, 1, 6, None).unwrap();
        assert_eq!(t.subfield_basis(3).unwrap(), vec![t.one(), t.omega()]);
        assert_eq!(t.subfield_basis(6).unwrap(), vec![t.one()]);
        assert_eq!(t.subfield_basis(4), Err(Error::NotADivisor { s: 4, n: 6 }));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_field(4, 1, 2, None).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            make_field(2, 1, 30, None).unwrap_err(),
            Error::FieldTooLarge { .. }
        ));
        // x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5
        assert!(matches!(
            make_field(2, 1, 4, Some(&[1, 1, 1, 1])).unwrap_err(),
            Error::NonPrimitivePolynomial { order: 5, .. }
        ));
        // x^4 + 1 = (x + 1)^4
        assert!(matches!(
            make_field(2, 1, 4, Some(&[1, 0, 0, 0])).unwrap_err(),
            Error::NonPrimitivePolynomial { .. }
        ));
        assert!(make_field(2, 1, 4, Some(&[1, 0, 0, 1])).is_ok());
    }

    #[test]
    fn every_table_entry_within_cap_is_primitive() {
        for &(p, m, _) in conway::CONWAY {
            if (p as u64).pow(m) <= 1 << 20 {
                make_field(p, 1, m, None).unwrap();
            }
        }
    }

    #[test]
    fn element_literals() {
        let t = make_field(2, 1, 4, None).unwrap();
        assert_eq!(t.parse_element("w^4").unwrap(), t.parse_element("1100").unwrap());
        assert_eq!(t.format_element(t.omega()), "0100");
        assert!(t.parse_element("012").is_err());
        assert_eq!(parse_polynomial("1, 1,0,0").unwrap(), vec![1, 1, 0, 0]);
    }
}
