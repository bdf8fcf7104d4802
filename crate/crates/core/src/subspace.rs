//! `F_q`-subspaces of `F_{q^n}` in canonical reduced row echelon form.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::ToPrimitive;
use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTower};
use crate::linalg::LinearMap;
use crate::orbit::gaussian_binomial;

/// A subspace stored as a basis of field elements whose `F_q`-coordinates
/// (basis `1, ω, .., ω^{n-1}`) form a reduced row echelon matrix. The pivot of
/// a row is its first nonzero coordinate; pivots increase down the rows.
#[derive(Clone)]
pub struct Subspace {
    tower: Arc<FieldTower>,
    rows: Vec<FieldElement>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && (Arc::ptr_eq(&self.tower, &other.tower) || *self.tower == *other.tower)
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace({})", self.literal())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

fn pivot(t: &FieldTower, x: FieldElement) -> Option<usize> {
    if x.is_zero() {
        return None;
    }
    if t.is_binary() {
        return Some(x.index().trailing_zeros() as usize);
    }
    (0..t.n() as usize).find(|&j| !t.fq_coord(x, j).is_zero())
}

/// `x - c·row` for `c ∈ F_q`.
#[inline]
fn axpy(t: &FieldTower, x: FieldElement, c: FieldElement, row: FieldElement) -> FieldElement {
    t.sub(x, t.mul(c, row))
}

/// Canonical RREF basis of the span of `gens`.
pub(crate) fn reduce(t: &FieldTower, gens: impl IntoIterator<Item = FieldElement>) -> Vec<FieldElement> {
    let mut basis: Vec<(usize, FieldElement)> = Vec::new();
    if t.is_binary() {
        for g in gens {
            let mut v = g.index();
            for &(p, r) in &basis {
                if (v >> p) & 1 == 1 {
                    v ^= r.index();
                }
            }
            if v == 0 {
                continue;
            }
            let p = v.trailing_zeros() as usize;
            for (_, r) in basis.iter_mut() {
                if (r.index() >> p) & 1 == 1 {
                    *r = FieldElement::from_index(r.index() ^ v);
                }
            }
            basis.push((p, FieldElement::from_index(v)));
        }
    } else {
        for g in gens {
            let mut v = g;
            for &(p, r) in &basis {
                let c = t.fq_coord(v, p);
                if !c.is_zero() {
                    v = axpy(t, v, c, r);
                }
            }
            let Some(p) = pivot(t, v) else { continue };
            let inv = t.inv(t.fq_coord(v, p)).expect("pivot is nonzero");
            v = t.mul(inv, v);
            for (_, r) in basis.iter_mut() {
                let c = t.fq_coord(*r, p);
                if !c.is_zero() {
                    *r = axpy(t, *r, c, v);
                }
            }
            basis.push((p, v));
        }
    }
    basis.sort_unstable_by_key(|&(p, _)| p);
    basis.into_iter().map(|(_, r)| r).collect()
}

/// `F_q`-rank of a list of field elements.
pub fn rank_of(t: &FieldTower, elems: impl IntoIterator<Item = FieldElement>) -> usize {
    reduce(t, elems).len()
}

impl Subspace {
    /// The `F_q`-span of `gens`.
    pub fn from_generators(tower: &Arc<FieldTower>, gens: &[FieldElement]) -> Result<Self> {
        if gens.iter().any(|g| g.index() >= tower.size()) {
            return Err(Error::InvalidParameter("generator outside the field".into()));
        }
        let rows = reduce(tower, gens.iter().copied());
        if rows.is_empty() {
            return Err(Error::ZeroSubspace);
        }
        Ok(Subspace { tower: tower.clone(), rows })
    }

    fn spanned(&self, gens: impl IntoIterator<Item = FieldElement>) -> Subspace {
        Subspace { tower: self.tower.clone(), rows: reduce(&self.tower, gens) }
    }

    /// The zero subspace.
    pub fn zero(tower: &Arc<FieldTower>) -> Self {
        Subspace { tower: tower.clone(), rows: Vec::new() }
    }

    /// `F_{q^n}` itself.
    pub fn whole(tower: &Arc<FieldTower>) -> Self {
        Subspace { tower: tower.clone(), rows: tower.fq_basis().to_vec() }
    }

    /// The subfield `F_{q^s}` as an `F_q`-subspace.
    pub fn subfield(tower: &Arc<FieldTower>, s: u32) -> Result<Self> {
        let z = tower.subfield_generator(s)?;
        let gens: Vec<FieldElement> = (0..s as u64).map(|a| tower.pow(z, a)).collect();
        Self::from_generators(tower, &gens)
    }

    /// Span of `gens` over `F_{q^a}`.
    pub fn span_over_subfield(tower: &Arc<FieldTower>, a: u32, gens: &[FieldElement]) -> Result<Self> {
        let z = tower.subfield_generator(a)?;
        let mut all = Vec::new();
        for &g in gens {
            for j in 0..a as u64 {
                all.push(tower.mul(tower.pow(z, j), g));
            }
        }
        Self::from_generators(tower, &all)
    }

    /// A uniformly random `k`-dimensional subspace.
    pub fn random<R: Rng + ?Sized>(tower: &Arc<FieldTower>, k: usize, rng: &mut R) -> Result<Self> {
        if k == 0 || k > tower.n() as usize {
            return Err(Error::InvalidParameter(format!("cannot draw a {k}-dimensional subspace")));
        }
        let mut gens = Vec::with_capacity(k);
        loop {
            gens.push(FieldElement::from_index(rng.gen_range(1..tower.size())));
            let rows = reduce(tower, gens.iter().copied());
            if rows.len() < gens.len() {
                gens.pop();
            }
            if rows.len() == k && gens.len() == k {
                return Ok(Subspace { tower: tower.clone(), rows });
            }
        }
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    /// `F_q`-dimension.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Canonical basis rows.
    pub fn rows(&self) -> &[FieldElement] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|&r| pivot(&self.tower, r).expect("rows are nonzero")).collect()
    }

    fn check_tower(&self, other: &Subspace) -> Result<()> {
        if Arc::ptr_eq(&self.tower, &other.tower) || *self.tower == *other.tower {
            Ok(())
        } else {
            Err(Error::MixedTowers)
        }
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        let t = &*self.tower;
        if t.is_binary() {
            let mut v = x.index();
            for r in &self.rows {
                let p = r.index().trailing_zeros();
                if (v >> p) & 1 == 1 {
                    v ^= r.index();
                }
            }
            return v == 0;
        }
        let mut v = x;
        for &r in &self.rows {
            let p = pivot(t, r).expect("rows are nonzero");
            let c = t.fq_coord(v, p);
            if !c.is_zero() {
                v = axpy(t, v, c, r);
            }
        }
        v.is_zero()
    }

    pub fn contains_one(&self) -> bool {
        self.contains(FieldElement::ONE)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|&r| other.contains(r))
    }

    /// `V + W`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_tower(other)?;
        Ok(self.spanned(self.rows.iter().chain(&other.rows).copied()))
    }

    pub fn intersection_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.k() + other.k() - self.sum(other)?.k())
    }

    /// Subspace distance `dim V + dim W - 2 dim(V ∩ W)`.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        Ok(2 * self.sum(other)?.k() - self.k() - other.k())
    }

    /// `αU`.
    pub fn scalar_shift(&self, alpha: FieldElement) -> Result<Subspace> {
        if alpha.is_zero() {
            return Err(Error::InvalidParameter("shift by zero".into()));
        }
        Ok(self.shift_unchecked(alpha))
    }

    pub(crate) fn shift_unchecked(&self, alpha: FieldElement) -> Subspace {
        let t = &*self.tower;
        self.spanned(self.rows.iter().map(|&r| t.mul(alpha, r)))
    }

    /// `U^{[i]} = {u^{q^i}}`.
    pub fn frobenius_shift(&self, i: i64) -> Subspace {
        let t = &*self.tower;
        self.spanned(self.rows.iter().map(|&r| t.frobenius(r, i)))
    }

    /// `φ(U)`.
    pub fn image(&self, map: &LinearMap) -> Subspace {
        self.spanned(self.rows.iter().map(|&r| map.apply(r)))
    }

    /// `dim_{F_{q^s}} span_{F_{q^s}}(U)`.
    pub fn delta_s(&self, s: u32) -> Result<usize> {
        let t = &*self.tower;
        let z = t.subfield_generator(s)?;
        let zp: Vec<FieldElement> = (0..s as u64).map(|a| t.pow(z, a)).collect();
        let gens = self.rows.iter().flat_map(|&u| zp.iter().map(move |&c| t.mul(c, u)));
        let rank = rank_of(t, gens);
        debug_assert_eq!(rank % s as usize, 0);
        Ok(rank / s as usize)
    }

    /// `δ_t(U)` for every divisor `t` of `n`.
    pub fn delta_profile(&self) -> Vec<(u32, usize)> {
        self.tower
            .divisors()
            .into_iter()
            .map(|t| (t, self.delta_s(t).expect("t divides n")))
            .collect()
    }

    /// Largest `t | n` with `F_{q^t} U = U`.
    pub fn stabilizer_field_degree(&self) -> u32 {
        let t = &*self.tower;
        let mut divs = t.divisors();
        divs.reverse();
        for d in divs {
            let z = t.subfield_generator(d).expect("divisor");
            if self.rows.iter().all(|&r| self.contains(t.mul(z, r))) {
                return d;
            }
        }
        1
    }

    /// Least `s | n` with `U ⊆ F_{q^s}`; requires `1 ∈ U`.
    pub fn smallest_containing_subfield(&self) -> Result<u32> {
        if !self.contains_one() {
            return Err(Error::MissingOne);
        }
        let t = &*self.tower;
        Ok(t.divisors()
            .into_iter()
            .find(|&s| self.rows.iter().all(|&r| t.in_subfield(r, s)))
            .unwrap_or(t.n()))
    }

    /// Not contained in a proper subfield (assumes `1 ∈ U`).
    pub fn is_generic(&self) -> Result<bool> {
        Ok(self.smallest_containing_subfield()? == self.tower.n())
    }

    /// Orthogonal complement under the coordinate dot product.
    pub fn dual(&self) -> Subspace {
        let t = &*self.tower;
        let n = t.n() as usize;
        let coords: Vec<Vec<FieldElement>> = self.rows.iter().map(|&r| t.fq_coords(r)).collect();
        let pivots = self.pivots();
        let mut gens = Vec::with_capacity(n - self.k());
        for f in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![FieldElement::ZERO; n];
            v[f] = FieldElement::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = t.neg(coords[i][f]);
            }
            gens.push(t.from_fq_coords(&v));
        }
        self.spanned(gens)
    }

    /// All `q^k` elements, in no particular order.
    pub fn elements(&self) -> Vec<FieldElement> {
        let t = &*self.tower;
        let mut out = vec![FieldElement::ZERO];
        for &r in &self.rows {
            let mut next = Vec::with_capacity(out.len() * t.q() as usize);
            for &c in t.fq_elements() {
                let cr = t.mul(c, r);
                next.extend(out.iter().map(|&x| t.add(x, cr)));
            }
            out = next;
        }
        out
    }

    /// A shift of `U` containing 1: `U` itself if `1 ∈ U`, otherwise `u^{-1} U`
    /// for the least nonzero `u ∈ U`.
    pub fn normalize_to_contain_one(&self) -> Result<Subspace> {
        if self.rows.is_empty() {
            return Err(Error::ZeroSubspace);
        }
        if self.contains_one() {
            return Ok(self.clone());
        }
        let u = self
            .elements()
            .into_iter()
            .filter(|x| !x.is_zero())
            .min()
            .expect("nonzero subspace");
        Ok(self.shift_unchecked(self.tower.inv(u)?))
    }

    /// Semicolon-separated digit strings of the canonical rows.
    pub fn literal(&self) -> String {
        if self.rows.is_empty() {
            return "0".into();
        }
        self.rows
            .iter()
            .map(|&r| self.tower.format_element(r))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Parses a literal such as `1;w^5` or `1000;0110`.
    pub fn parse(tower: &Arc<FieldTower>, s: &str) -> Result<Self> {
        let gens = s
            .split(';')
            .filter(|x| !x.trim().is_empty())
            .map(|x| tower.parse_element(x))
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Err(Error::Literal("empty subspace literal".into()));
        }
        Self::from_generators(tower, &gens)
    }
}

/// Streams every `k`-dimensional subspace exactly once, in RREF order.
pub struct Grassmannian {
    tower: Arc<FieldTower>,
    n: usize,
    k: usize,
    must_contain_one: bool,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    counter: Vec<usize>,
}

/// `k`-subspaces of `F_{q^n}`, optionally only those containing 1. Fails if
/// the Grassmannian has more than `cap` members.
pub fn enumerate_grassmannian(
    tower: &Arc<FieldTower>,
    k: usize,
    must_contain_one: bool,
    cap: u64,
) -> Result<Grassmannian> {
    let n = tower.n() as usize;
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    let total = gaussian_binomial(n as u32, k as u32, tower.q() as u64);
    if total > cap.into() {
        return Err(Error::CapExceeded {
            what: "grassmannian size",
            reached: total.to_u128().unwrap_or(u128::MAX),
            cap: cap as u128,
        });
    }
    let mut g = Grassmannian {
        tower: tower.clone(),
        n,
        k,
        must_contain_one,
        pivots: Some((0..k).collect()),
        free: Vec::new(),
        counter: Vec::new(),
    };
    g.reset_free();
    Ok(g)
}

impl Grassmannian {
    fn reset_free(&mut self) {
        self.free.clear();
        if let Some(p) = &self.pivots {
            for (i, &pc) in p.iter().enumerate() {
                for c in pc + 1..self.n {
                    if !p.contains(&c) {
                        self.free.push((i, c));
                    }
                }
            }
        }
        self.counter = vec![0; self.free.len()];
    }

    fn current(&self) -> Subspace {
        let t = &*self.tower;
        let pivots = self.pivots.as_ref().expect("not exhausted");
        let mut coords = vec![vec![FieldElement::ZERO; self.n]; self.k];
        for (i, &pc) in pivots.iter().enumerate() {
            coords[i][pc] = FieldElement::ONE;
        }
        for (&(i, c), &v) in self.free.iter().zip(&self.counter) {
            coords[i][c] = t.fq_elements()[v];
        }
        let rows = coords.iter().map(|c| t.from_fq_coords(c)).collect();
        Subspace { tower: self.tower.clone(), rows }
    }

    fn advance(&mut self) {
        let q = self.tower.q() as usize;
        for c in self.counter.iter_mut() {
            *c += 1;
            if *c < q {
                return;
            }
            *c = 0;
        }
        // counter wrapped: next pivot set
        let p = self.pivots.as_mut().expect("not exhausted");
        let k = self.k;
        let n = self.n;
        let mut i = k;
        loop {
            if i == 0 {
                self.pivots = None;
                return;
            }
            i -= 1;
            if p[i] < n - k + i {
                p[i] += 1;
                for j in i + 1..k {
                    p[j] = p[j - 1] + 1;
                }
                break;
            }
        }
        self.reset_free();
    }
}

impl Iterator for Grassmannian {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        loop {
            self.pivots.as_ref()?;
            let u = self.current();
            self.advance();
            if !self.must_contain_one || u.contains_one() {
                return Some(u);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn from_generators_basics() {
        let t = make_field(2, 1, 6, None).unwrap();
        let fq = Subspace::from_generators(&t, &[t.one()]).unwrap();
        assert_eq!(fq.k(), 1);
        let w = t.omega();
        let u = Subspace::from_generators(&t, &[t.one(), w, t.add(t.one(), w)]).unwrap();
        assert_eq!(u.k(), 2);
        let f8 = Subspace::from_generators(&t, &[t.one(), t.omega_pow(9), t.omega_pow(18)]).unwrap();
        assert_eq!(f8.k(), 3);
        assert_eq!(f8, Subspace::subfield(&t, 3).unwrap());
        assert_eq!(f8.smallest_containing_subfield().unwrap(), 3);
        assert_eq!(Subspace::from_generators(&t, &[t.zero()]).unwrap_err(), Error::ZeroSubspace);
    }

    #[test]
    fn canonical_form_is_rref() {
        let t = make_field(3, 1, 5, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let u = Subspace::random(&t, 3, &mut rng).unwrap();
            let piv = u.pivots();
            assert!(piv.windows(2).all(|w| w[0] < w[1]));
            for (i, &r) in u.rows().iter().enumerate() {
                assert_eq!(t.fq_coord(r, piv[i]), t.one());
                for (j, &pj) in piv.iter().enumerate() {
                    if j != i {
                        assert!(t.fq_coord(r, pj).is_zero());
                    }
                }
            }
            let again = Subspace::from_generators(&t, &u.elements()[1..]).unwrap();
            assert_eq!(again, u);
        }
    }

    #[test]
    fn spread_distance() {
        let t = make_field(2, 1, 6, None).unwrap();
        let f8 = Subspace::subfield(&t, 3).unwrap();
        assert_eq!(f8.distance(&f8).unwrap(), 0);
        assert_eq!(f8.distance(&f8.scalar_shift(t.omega()).unwrap()).unwrap(), 6);
    }

    #[test]
    fn shifts() {
        let t = make_field(3, 1, 4, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let u = Subspace::random(&t, 2, &mut rng).unwrap();
        assert_eq!(u.scalar_shift(t.one()).unwrap(), u);
        assert_eq!(u.scalar_shift(FieldElement::from_index(2)).unwrap(), u);
        let a = t.omega_pow(7);
        let b = t.omega_pow(33);
        assert_eq!(
            u.scalar_shift(a).unwrap().scalar_shift(b).unwrap(),
            u.scalar_shift(t.mul(a, b)).unwrap()
        );
        assert!(u.scalar_shift(t.zero()).is_err());
        assert_eq!(u.frobenius_shift(0), u);
        assert_eq!(u.frobenius_shift(4), u);
        let f9 = Subspace::subfield(&t, 2).unwrap();
        assert_eq!(f9.frobenius_shift(1), f9);
    }

    #[test]
    fn delta_examples() {
        let t = make_field(2, 1, 8, None).unwrap();
        let f16 = Subspace::subfield(&t, 4).unwrap();
        assert_eq!(f16.delta_s(4).unwrap(), 1);
        let alpha = t.omega();
        let u = Subspace::from_generators(&t, &[t.one(), alpha]).unwrap();
        assert_eq!(u.delta_s(4).unwrap(), 2);
        assert_eq!(u.delta_s(1).unwrap(), 2);
        assert!(u.delta_s(3).is_err());
    }

    #[test]
    fn stabilizer_field() {
        let t = make_field(2, 1, 8, None).unwrap();
        let u = Subspace::span_over_subfield(&t, 2, &[t.one(), t.omega()]).unwrap();
        assert_eq!(u.k(), 4);
        assert_eq!(u.stabilizer_field_degree(), 2);
        let f16 = Subspace::subfield(&t, 4).unwrap();
        assert_eq!(f16.stabilizer_field_degree(), 4);
        let g = Subspace::from_generators(&t, &[t.one(), t.omega(), t.omega_pow(3)]).unwrap();
        assert_eq!(g.stabilizer_field_degree(), 1);
    }

    #[test]
    fn smallest_subfield() {
        let t = make_field(2, 1, 6, None).unwrap();
        assert_eq!(Subspace::from_generators(&t, &[t.one()]).unwrap().smallest_containing_subfield().unwrap(), 1);
        let g = Subspace::from_generators(&t, &[t.one(), t.omega()]).unwrap();
        assert_eq!(g.smallest_containing_subfield().unwrap(), 6);
        let no_one = Subspace::from_generators(&t, &[t.omega()]).unwrap();
        assert_eq!(no_one.smallest_containing_subfield().unwrap_err(), Error::MissingOne);
    }

    #[test]
    fn duality() {
        let t = make_field(2, 2, 3, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for k in 1..=3 {
            let u = Subspace::random(&t, k, &mut rng).unwrap();
            let d = u.dual();
            assert_eq!(d.k(), 3 - k);
            assert_eq!(d.dual(), u);
        }
        assert_eq!(Subspace::whole(&t).dual().k(), 0);
        assert_eq!(Subspace::zero(&t).dual(), Subspace::whole(&t));
    }

    #[test]
    fn normalization() {
        let t = make_field(2, 1, 6, None).unwrap();
        let u = Subspace::from_generators(&t, &[t.omega(), t.omega_pow(5)]).unwrap();
        let v = u.normalize_to_contain_one().unwrap();
        assert!(v.contains_one());
        let one = Subspace::from_generators(&t, &[t.one(), t.omega()]).unwrap();
        assert_eq!(one.normalize_to_contain_one().unwrap(), one);
    }

    #[test]
    fn literals_round_trip() {
        let t = make_field(3, 1, 4, None).unwrap();
        let u = Subspace::parse(&t, "1;w^5").unwrap();
        assert_eq!(Subspace::parse(&t, &u.literal()).unwrap(), u);
        assert!(Subspace::parse(&t, "1;3000").is_err());
        assert!(Subspace::parse(&t, "").is_err());
    }

    #[test]
    fn grassmannian_counts() {
        let t = make_field(2, 1, 5, None).unwrap();
        assert_eq!(enumerate_grassmannian(&t, 2, false, 1 << 20).unwrap().count(), 155);
        let t4 = make_field(2, 1, 4, None).unwrap();
        assert_eq!(enumerate_grassmannian(&t4, 1, false, 1 << 20).unwrap().count(), 15);
        let t6 = make_field(2, 1, 6, None).unwrap();
        let all: HashSet<Subspace> = enumerate_grassmannian(&t6, 3, false, 1 << 20).unwrap().collect();
        assert_eq!(all.len(), 1395);
        // 1395 * 7 / 63
        let with_one = enumerate_grassmannian(&t6, 3, true, 1 << 20).unwrap().count();
        assert_eq!(with_one, 155);
        let t3 = make_field(3, 1, 3, None).unwrap();
        assert_eq!(enumerate_grassmannian(&t3, 2, false, 1 << 20).unwrap().count(), 13);
        assert!(matches!(
            enumerate_grassmannian(&t6, 3, false, 100),
            Err(Error::CapExceeded { .. })
        ));
    }
}
