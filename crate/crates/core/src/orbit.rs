//! Orbits of subspaces under the Singer cycle, its normalizer and the
//! extension-field groups `GL_{n/s}(q^s)`, plus the counting formulas that
//! go with them.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTower};
use crate::linalg::{LinearMap, Matrix, SubfieldCoordinates};
use crate::subspace::Subspace;

/// Default bound on the number of members a breadth-first orbit may reach.
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

/// The group an orbit was generated under.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupTag {
    Singer,
    Normalizer,
    ExtField(u32),
    Adjoint(Box<GroupTag>),
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Singer => f.write_str("singer"),
            GroupTag::Normalizer => f.write_str("normalizer"),
            GroupTag::ExtField(s) => write!(f, "gl(s={s})"),
            GroupTag::Adjoint(g) => write!(f, "adjoint({g})"),
        }
    }
}

/// A set of subspaces closed under a group, with the subspace it was grown from.
#[derive(Clone, Debug)]
pub struct OrbitCode {
    group: GroupTag,
    generator: Subspace,
    members: Vec<Subspace>,
}

impl OrbitCode {
    /// Wraps an already closed set. Members are sorted and deduplicated.
    pub fn from_members(group: GroupTag, generator: Subspace, mut members: Vec<Subspace>) -> Self {
        members.sort_unstable();
        members.dedup();
        OrbitCode { group, generator, members }
    }

    pub fn group(&self) -> &GroupTag {
        &self.group
    }

    pub fn generator(&self) -> &Subspace {
        &self.generator
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The lexicographically least member.
    pub fn canonical_rep(&self) -> &Subspace {
        &self.members[0]
    }

    pub fn contains(&self, u: &Subspace) -> bool {
        self.members.binary_search(u).is_ok()
    }

    /// Minimum distance between distinct members; `None` for a single member.
    /// The group acts transitively by isometries, so distances from the
    /// generator suffice.
    pub fn min_distance(&self) -> Option<usize> {
        self.distances_from(&self.generator).into_keys().find(|&d| d > 0)
    }

    /// Histogram of distances from `u` to every member.
    pub fn distances_from(&self, u: &Subspace) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for v in &self.members {
            *h.entry(u.distance(v).expect("same tower")).or_insert(0) += 1;
        }
        h
    }

    /// Histogram of distances over all unordered pairs of distinct members.
    pub fn distance_multiset(&self) -> BTreeMap<usize, usize> {
        let len = self.members.len();
        self.distances_from(&self.generator)
            .into_iter()
            .filter(|&(d, _)| d > 0)
            .map(|(d, c)| (d, c * len / 2))
            .collect()
    }

    /// SHA-256 over the newline-joined member literals.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for m in &self.members {
            h.update(m.literal().as_bytes());
            h.update(b"\n");
        }
        hex::encode(h.finalize())
    }

    pub fn record(&self) -> OrbitRecord {
        let t = self.generator.tower();
        OrbitRecord {
            group: self.group.to_string(),
            p: t.p(),
            e: t.e(),
            n: t.n(),
            k: self.generator.k(),
            s: match self.group {
                GroupTag::ExtField(s) => Some(s),
                _ => None,
            },
            rep: self.canonical_rep().literal(),
            size: self.len() as u64,
            digest: self.digest(),
        }
    }
}

/// One line of the orbit cache.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub group: String,
    pub p: u32,
    pub e: u32,
    pub n: u32,
    pub k: usize,
    pub s: Option<u32>,
    pub rep: String,
    pub size: u64,
    pub digest: String,
}

/// `{ω^i U}`.
pub fn singer_orbit(u: &Subspace) -> OrbitCode {
    let w = u.tower().omega();
    let mut members = vec![u.clone()];
    let mut v = u.shift_unchecked(w);
    while v != *u {
        let next = v.shift_unchecked(w);
        members.push(v);
        v = next;
    }
    OrbitCode::from_members(GroupTag::Singer, u.clone(), members)
}

/// `⋃_i Orb_S(U^{[i]})`.
pub fn normalizer_orbit(u: &Subspace) -> OrbitCode {
    let n = u.tower().n() as i64;
    let mut members = Vec::new();
    let mut seen_reps = BTreeSet::new();
    for i in 0..n {
        let v = u.frobenius_shift(i);
        let orb = singer_orbit(&v);
        if seen_reps.insert(orb.canonical_rep().clone()) {
            members.extend(orb.members);
        }
    }
    OrbitCode::from_members(GroupTag::Normalizer, u.clone(), members)
}

/// Some `β` with `βU = V`, if any.
pub fn singer_shift_between(u: &Subspace, v: &Subspace) -> Option<FieldElement> {
    if u.k() != v.k() || u.k() == 0 {
        return (u == v).then_some(FieldElement::ONE);
    }
    let t = u.tower();
    let u0 = u.rows()[0];
    let u0inv = t.inv(u0).expect("rows are nonzero");
    v.elements()
        .into_iter()
        .filter(|x| !x.is_zero())
        .map(|x| t.mul(x, u0inv))
        .find(|&beta| u.rows().iter().all(|&r| v.contains(t.mul(beta, r))))
}

/// `V ∈ Orb_S(U)`.
pub fn singer_orbit_contains(u: &Subspace, v: &Subspace) -> bool {
    singer_shift_between(u, v).is_some()
}

/// `{i mod n : U^{[i]} ∈ Orb_S(U)}`, a subgroup of `Z/nZ`.
pub fn galois_part(u: &Subspace) -> Vec<u32> {
    let n = u.tower().n();
    let d = u
        .tower()
        .divisors()
        .into_iter()
        .find(|&d| singer_orbit_contains(u, &u.frobenius_shift(d as i64)))
        .unwrap_or(n);
    (0..n).step_by(d as usize).collect()
}

/// Generators of `GL_{n/s}(q^s)` as `F_q`-linear maps: a dilation by a
/// primitive element of `F_{q^s}`, the cyclic coordinate permutation and the
/// elementary transvection `E_12(1)`, all in the basis `1, ω, .., ω^{n/s-1}`.
pub fn ext_field_generators(tower: &Arc<FieldTower>, s: u32) -> Result<Vec<LinearMap>> {
    let sc = SubfieldCoordinates::new(tower, s)?;
    let m = sc.dim();
    let zeta = tower.subfield_generator(s)?;
    let mut dil = Matrix::identity(m);
    dil.set(0, 0, zeta);
    let mut gens = vec![sc.linear_map(&dil)?];
    if m >= 2 {
        let mut perm = Matrix::zeros(m, m);
        for i in 0..m {
            perm.set(i, (i + 1) % m, FieldElement::ONE);
        }
        let mut tv = Matrix::identity(m);
        tv.set(0, 1, FieldElement::ONE);
        gens.push(sc.linear_map(&perm)?);
        gens.push(sc.linear_map(&tv)?);
    }
    Ok(gens)
}

/// A uniformly random element of `GL_{n/s}(q^s)`.
pub fn random_ext_field_map<R: Rng + ?Sized>(tower: &Arc<FieldTower>, s: u32, rng: &mut R) -> Result<LinearMap> {
    let sc = SubfieldCoordinates::new(tower, s)?;
    let m = sc.dim();
    let nexp = tower.subfield_exponent(s)? as i64;
    let qs = tower.q_pow(s);
    loop {
        let mut g = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                let r = rng.gen_range(0..qs);
                let v = if r == 0 { FieldElement::ZERO } else { tower.omega_pow(nexp * (r as i64 - 1)) };
                g.set(i, j, v);
            }
        }
        if g.rank(tower) == m {
            return sc.linear_map(&g);
        }
    }
}

/// Breadth-first closure of `start` under `gens`.
pub fn orbit_closure(start: &Subspace, gens: &[LinearMap], cap: usize, group: GroupTag) -> Result<OrbitCode> {
    let mut seen: HashSet<Subspace> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start.clone()];
    while !frontier.is_empty() {
        let images: Vec<Subspace> = frontier
            .par_iter()
            .flat_map_iter(|v| gens.iter().map(move |g| v.image(g)))
            .collect();
        frontier = Vec::new();
        for w in images {
            if !seen.contains(&w) {
                seen.insert(w.clone());
                frontier.push(w);
                if seen.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "orbit size",
                        reached: seen.len() as u128,
                        cap: cap as u128,
                    });
                }
            }
        }
    }
    Ok(OrbitCode::from_members(group, start.clone(), seen.into_iter().collect()))
}

/// `Orb_{GL_{n/s}(q^s)}(U)` by breadth-first search.
pub fn extension_group_orbit(u: &Subspace, s: u32, cap: usize) -> Result<OrbitCode> {
    let gens = ext_field_generators(u.tower(), s)?;
    orbit_closure(u, &gens, cap, GroupTag::ExtField(s))
}

/// Splits a collection of subspaces into orbits of the group generated by
/// `gens`. The collection must be a union of orbits.
pub fn partition_into_orbits(
    items: impl IntoIterator<Item = Subspace>,
    gens: &[LinearMap],
    cap: usize,
    group: GroupTag,
) -> Result<Vec<OrbitCode>> {
    let mut remaining: BTreeSet<Subspace> = items.into_iter().collect();
    let mut out = Vec::new();
    while let Some(u) = remaining.pop_first() {
        let orb = orbit_closure(&u, gens, cap, group.clone())?;
        for m in orb.members() {
            if *m != u && !remaining.remove(m) {
                return Err(Error::Precondition("collection is not closed under the group".into()));
            }
        }
        out.push(orb);
    }
    Ok(out)
}

fn big_pow(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// `[n choose k]_q`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= big_pow(q, (n - i) as u64) - 1u32;
        den *= big_pow(q, (i + 1) as u64) - 1u32;
    }
    num / den
}

/// `|GL_m(Q)| = Π (Q^m - Q^i)`.
pub fn gl_order(m: u32, big_q: u64) -> BigUint {
    (0..m).fold(BigUint::one(), |acc, i| acc * (big_pow(big_q, m as u64) - big_pow(big_q, i as u64)))
}

/// `|GL_{n/s}(q^s)|`.
pub fn ext_field_group_order(q: u64, n: u32, s: u32) -> BigUint {
    gl_order(n / s, q.pow(s))
}

fn product_term(q: u64, n: u32, r: u32, s: u32) -> BigRational {
    let mut x = BigRational::one();
    for i in 0..r {
        let num = big_pow(q, (n - i * s) as u64) - 1u32;
        let den = big_pow(q, (r - i) as u64) - 1u32;
        x *= BigRational::new(num.into(), den.into());
    }
    x
}

fn binom2(r: u32) -> u64 {
    (r as u64) * (r as u64).saturating_sub(1) / 2
}

/// The exact rational value `q^{C(r,2)(s-1)} / [k choose r]_q · Π (q^{n-is}-1)/(q^{r-i}-1)`.
pub fn orbit_size_lower_bound_exact(q: u64, n: u32, k: u32, s: u32, r: u32) -> Result<BigRational> {
    if q < 2 || r == 0 || r > k || k > n || s == 0 || r * s > n {
        return Err(Error::InvalidParameter(format!(
            "bound needs 1 <= r <= k <= n and r*s <= n (q={q}, n={n}, k={k}, s={s}, r={r})"
        )));
    }
    let lead = BigRational::from_integer(big_pow(q, binom2(r) * (s as u64 - 1)).into());
    let kr = BigRational::from_integer(gaussian_binomial(k, r, q).into());
    Ok(lead / kr * product_term(q, n, r, s))
}

/// Integer form of the orbit-size bound: the least integer not below the
/// exact value, which is what an orbit size must reach.
pub fn orbit_size_lower_bound(q: u64, n: u32, k: u32, s: u32, r: u32) -> Result<BigUint> {
    let x = orbit_size_lower_bound_exact(q, n, k, s, r)?;
    Ok(x.ceil().to_integer().to_biguint().expect("positive"))
}

/// Prime powers `2..=q_max`.
pub fn prime_powers_up_to(q_max: u64) -> Vec<u64> {
    (2..=q_max)
        .filter(|&q| {
            let p = (2..=q).find(|d| q % d == 0).expect("q >= 2");
            let mut x = q;
            while x % p == 0 {
                x /= p;
            }
            x == 1
        })
        .collect()
}

/// One failed instance of a lemma inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub lemma: &'static str,
    pub params: BTreeMap<&'static str, u64>,
}

/// Outcome of [`verify_inequality_lemmas`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct LemmaReport {
    /// Number of tuples checked per lemma.
    pub checked: BTreeMap<&'static str, u64>,
    pub violations: Vec<LemmaViolation>,
    /// `(q, n, k, s)` where `(q-1)(q^n-q^s) - n(q^k-1)(q^k-q) > 0` fails.
    pub normalizer_r2_failures: Vec<(u64, u32, u32, u32)>,
}

impl LemmaReport {
    pub fn normalizer_r2_failure_triples(&self) -> BTreeSet<(u64, u32, u32)> {
        self.normalizer_r2_failures.iter().map(|&(q, n, k, _)| (q, n, k)).collect()
    }
}

pub const LEMMA_EXP_DIFF: &str = "product-exceeds-power";
pub const LEMMA_ORBIT_R3: &str = "ext-orbit-exceeds-normalizer(r>=3)";
pub const LEMMA_ORBIT_R2: &str = "ext-orbit-exceeds-singer(r=2)";
pub const LEMMA_GROUP_ORDER: &str = "ext-group-exceeds-normalizer";
pub const NORMALIZER_R2: &str = "normalizer-r2(k<=3n/8)";

/// Checks the three inequality lemmas on orbit and group sizes over all
/// admissible tuples with `q` a prime power `<= q_max` and `n_min <= n <= n_max`,
/// and evaluates the `r = 2` normalizer inequality.
pub fn verify_inequality_lemmas(q_max: u64, n_min: u32, n_max: u32) -> LemmaReport {
    let mut rep = LemmaReport::default();
    let bump = |rep: &mut LemmaReport, name: &'static str| *rep.checked.entry(name).or_insert(0) += 1;
    let int = |x: BigUint| BigRational::from_integer(x.into());
    for q in prime_powers_up_to(q_max) {
        for n in n_min..=n_max {
            let sing = int(big_pow(q, n as u64) - 1u32) / int(BigUint::from(q - 1));
            for r in 2..=n / 2 {
                for s in 1..n {
                    if r * s > n {
                        continue;
                    }
                    let prod = product_term(q, n, r, s);
                    bump(&mut rep, LEMMA_EXP_DIFF);
                    let e = r as i64 * (n - r) as i64 - (s as i64 - 1) * binom2(r) as i64;
                    let rhs = if e >= 0 {
                        int(big_pow(q, e as u64))
                    } else {
                        int(BigUint::one()) / int(big_pow(q, (-e) as u64))
                    };
                    if prod <= rhs {
                        rep.violations.push(LemmaViolation {
                            lemma: LEMMA_EXP_DIFF,
                            params: [("q", q), ("n", n as u64), ("r", r as u64), ("s", s as u64)].into(),
                        });
                    }
                    let lhs = int(big_pow(q, binom2(r) * (s as u64 - 1))) * prod;
                    for k in r..=n / 2 {
                        let gb = int(gaussian_binomial(k, r, q));
                        let (name, rhs) = if r >= 3 {
                            (LEMMA_ORBIT_R3, int(BigUint::from(n)) * gb * sing.clone())
                        } else {
                            (LEMMA_ORBIT_R2, gb * sing.clone())
                        };
                        bump(&mut rep, name);
                        if lhs <= rhs {
                            rep.violations.push(LemmaViolation {
                                lemma: name,
                                params: [("q", q), ("n", n as u64), ("k", k as u64), ("r", r as u64), ("s", s as u64)]
                                    .into(),
                            });
                        }
                    }
                }
            }
            for t in (1..=n).filter(|t| n % t == 0) {
                for s in (1..t).filter(|s| t % s == 0) {
                    bump(&mut rep, LEMMA_GROUP_ORDER);
                    let small = ext_field_group_order(q, n, s);
                    let big = BigUint::from(t) * ext_field_group_order(q, n, t);
                    if small <= big {
                        rep.violations.push(LemmaViolation {
                            lemma: LEMMA_GROUP_ORDER,
                            params: [("q", q), ("n", n as u64), ("s", s as u64), ("t", t as u64)].into(),
                        });
                    }
                }
            }
            for k in (2..=n).filter(|k| 8 * k <= 3 * n) {
                for s in (1..=n / 2).filter(|s| n % s == 0) {
                    bump(&mut rep, NORMALIZER_R2);
                    let lhs = BigUint::from(q - 1) * (big_pow(q, n as u64) - big_pow(q, s as u64));
                    let rhs = BigUint::from(n)
                        * (big_pow(q, k as u64) - 1u32)
                        * (big_pow(q, k as u64) - BigUint::from(q));
                    if lhs <= rhs {
                        rep.normalizer_r2_failures.push((q, n, k, s));
                    }
                }
            }
        }
    }
    rep
}

/// Converts a big integer count to `u64` for display when it fits.
pub fn to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}

/// `n (q^n - 1)`, the order of the Singer normalizer.
pub fn normalizer_order(q: u64, n: u32) -> BigUint {
    BigUint::from(n) * (big_pow(q, n as u64) - 1u32)
}

/// `(q^n - 1) / (q^t - 1)`.
pub fn singer_orbit_size(q: u64, n: u32, t: u32) -> BigUint {
    let (a, b) = (big_pow(q, n as u64) - 1u32, big_pow(q, t as u64) - 1u32);
    debug_assert!(a.is_multiple_of(&b));
    a / b
}
