//! Automorphism groups, weight distributions, isometry classes and the
//! `δ_s(U) = 2` scanner.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTower};
use crate::linalg::{LinearMap, Matrix};
use crate::orbit::{
    ext_field_generators, ext_field_group_order, extension_group_orbit, galois_part, gl_order,
    normalizer_order, normalizer_orbit, partition_into_orbits, singer_orbit, singer_orbit_contains,
    singer_shift_between, GroupTag, OrbitCode,
};
use crate::subspace::{enumerate_grassmannian, rank_of, Subspace};

/// Counts `ω_i` of members at distance `i` from a reference member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub omegas: Vec<u64>,
    pub reference: Option<Subspace>,
}

impl WeightDistribution {
    /// Least `i > 0` with `ω_i > 0`.
    pub fn distance(&self) -> Option<usize> {
        self.omegas.iter().enumerate().skip(1).find(|(_, &w)| w > 0).map(|(i, _)| i)
    }

    pub fn total(&self) -> u64 {
        self.omegas.iter().sum()
    }

    pub fn omega(&self, i: usize) -> u64 {
        self.omegas.get(i).copied().unwrap_or(0)
    }
}

/// Weight distribution of a Singer orbit relative to its generator.
pub fn weight_distribution(orbit: &OrbitCode) -> Result<WeightDistribution> {
    if *orbit.group() != GroupTag::Singer {
        return Err(Error::WrongGroup { expected: GroupTag::Singer.to_string(), found: orbit.group().to_string() });
    }
    let u = orbit.generator();
    let mut omegas = vec![0u64; 2 * u.k() + 1];
    for (d, c) in orbit.distances_from(u) {
        omegas[d] += c as u64;
    }
    Ok(WeightDistribution { omegas, reference: Some(u.clone()) })
}

fn ipow(q: u64, e: u32) -> i128 {
    (q as i128).pow(e)
}

/// Predicted distribution for an orbit of length `(q^n-1)/(q-1)` with distance
/// `2(k - ell)`, from the closed formulas for `ell = 1` and `ell = 2`.
pub fn predicted_weights(q: u64, n: u32, k: u32, ell: u32, r: u64, epsilon: u64) -> Result<WeightDistribution> {
    if !(1..=2).contains(&ell) || epsilon > 1 || k < ell || 2 * k > n {
        return Err(Error::InvalidParameter(format!("ell = {ell}, epsilon = {epsilon}, k = {k}, n = {n}")));
    }
    let big_q = (ipow(q, k) - 1) * (ipow(q, k) - q as i128) / ((q as i128 - 1) * (q as i128 - 1));
    let big_n = (ipow(q, n) - 1) / (q as i128 - 1);
    let mut w = vec![0i128; 2 * k as usize + 1];
    w[0] = 1;
    let k2 = 2 * k as usize;
    if ell == 1 {
        w[k2 - 2] = big_q;
        w[k2] = big_n - big_q - 1;
    } else {
        let w4 = epsilon as i128 * q as i128 + r as i128 * q as i128 * (q as i128 + 1);
        w[k2 - 4] = w4;
        w[k2 - 2] = big_q - (q as i128 + 1) * w4;
        w[k2] = big_n - w[k2 - 2] - w4 - 1;
    }
    if w.iter().any(|&x| x < 0) {
        return Err(Error::InvalidParameter(format!("negative predicted count for r = {r}")));
    }
    Ok(WeightDistribution { omegas: w.into_iter().map(|x| x as u64).collect(), reference: None })
}

/// Whether some member of `Orb_S(U)` contains `F_{q^s}`, i.e. `a F_{q^s} ⊆ U`
/// for some nonzero `a`.
pub fn orbit_contains_subfield(u: &Subspace, s: u32) -> Result<bool> {
    let t = u.tower();
    let f = Subspace::subfield(t, s)?;
    if f.k() > u.k() {
        return Ok(false);
    }
    Ok(u.elements().into_iter().filter(|x| !x.is_zero()).any(|a| f.is_subspace_of(&u.shift_unchecked(t.inv(a).expect("nonzero")))))
}

/// `(ε, r)` with `ω_{2k-4} = εq + rq(q+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ell2Fit {
    pub epsilon: u64,
    pub r: u64,
}

pub fn fit_ell2(q: u64, omega_2k_4: u64) -> Option<Ell2Fit> {
    if !omega_2k_4.is_multiple_of(q) {
        return None;
    }
    let y = omega_2k_4 / q;
    let epsilon = y % (q + 1);
    (epsilon <= 1).then(|| Ell2Fit { epsilon, r: (y - epsilon) / (q + 1) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AutKind {
    Exact,
    Bounds,
}

/// Whether the automorphism group of the Singer orbit or of the normalizer orbit is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AutMode {
    Singer,
    Normalizer,
}

/// What is known about an automorphism group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutGroupDescriptor {
    pub kind: AutKind,
    pub mode: AutMode,
    /// Least `s | n` with `U ⊆ F_{q^s}` for the 1-normalized generator.
    pub s_min: u32,
    /// Exponents `i` (mod `n`) with `U^{[i]}` in the relevant orbit.
    pub galois_part: Vec<u32>,
    pub lower: String,
    pub upper: String,
    /// Name of the group when the kind is exact.
    pub name: String,
    #[serde(serialize_with = "ser_opt_big")]
    pub order: Option<BigUint>,
    /// Divisors `t < n` with `δ_t(U) = 2` (normalizer mode only).
    pub exceptional: Vec<u32>,
    /// Divisors `t` among the exceptional ones whose group `GL_{n/t}(q^t)` lies in the automorphism group.
    pub contained_ext_groups: Vec<u32>,
}

fn ser_opt_big<S: serde::Serializer>(x: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

impl AutGroupDescriptor {
    /// Whether the group is known exactly and lies inside the Singer normalizer.
    pub fn inside_normalizer(&self, n: u32) -> bool {
        self.kind == AutKind::Exact && self.s_min == n
    }
}

impl fmt::Display for AutGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.order) {
            (AutKind::Exact, Some(o)) => write!(f, "{} (order {o})", self.name),
            _ => write!(f, "{} <= Aut <= {}", self.lower, self.upper),
        }
    }
}

/// `F_{q^i}` written over the prime field.
pub fn field_name(t: &FieldTower, i: u32) -> String {
    let d = t.e() * i;
    if d == 1 {
        format!("F_{}", t.p())
    } else {
        format!("F_{{{}^{}}}", t.p(), d)
    }
}

fn gl_name(t: &FieldTower, s: u32) -> String {
    let d = t.e() * s;
    let field = if d == 1 { t.p().to_string() } else { format!("{}^{}", t.p(), d) };
    format!("GL_{}({})", t.n() / s, field)
}

fn gal_name(t: &FieldTower, top: u32, bottom: u32) -> String {
    format!("Gal({}|{})", field_name(t, top), field_name(t, bottom))
}

fn singer_name(t: &FieldTower) -> String {
    format!("{}^*", field_name(t, t.n()))
}

fn normalizer_name(t: &FieldTower) -> String {
    format!("{} ⋊ {}", gal_name(t, t.n(), 1), singer_name(t))
}

/// Automorphism group of `Orb_S(U)` or `Orb_N(U)`. Exhaustive orbit searches
/// are bounded by `group_cap` members.
pub fn automorphism_group(u: &Subspace, mode: AutMode, group_cap: usize) -> Result<AutGroupDescriptor> {
    let u = u.normalize_to_contain_one()?;
    let t = u.tower().clone();
    let n = t.n();
    let q = t.q() as u64;
    let s = u.smallest_containing_subfield()?;
    match mode {
        AutMode::Singer => {
            let gp = galois_part(&u);
            let d = gp.get(1).copied().unwrap_or(n);
            if s == n {
                let name = if d == n { singer_name(&t) } else { format!("{} ⋊ {}", gal_name(&t, n, d), singer_name(&t)) };
                let order = BigUint::from(n / d) * (BigUint::from(q).pow(n) - 1u32);
                return Ok(AutGroupDescriptor {
                    kind: AutKind::Exact,
                    mode,
                    s_min: s,
                    galois_part: gp,
                    lower: singer_name(&t),
                    upper: normalizer_name(&t),
                    name,
                    order: Some(order),
                    exceptional: Vec::new(),
                    contained_ext_groups: Vec::new(),
                });
            }
            // U ⊆ F_{q^s}: GL_{n/s}(q^s) ≤ Aut ≤ N(GL_{n/s}(q^s)); the Galois
            // cosets in Aut are those σ^i with U^{[i]} ∈ Orb_S(U).
            let dd = d.min(s);
            let gl = gl_name(&t, s);
            let name = if dd == s { gl.clone() } else { format!("{} ⋊ {}", gal_name(&t, s, dd), gl) };
            let confirmed = match extension_group_orbit(&u, s, group_cap) {
                Ok(o) => o.len() == singer_orbit(&u).len(),
                Err(Error::CapExceeded { .. }) => false,
                Err(e) => return Err(e),
            };
            let order = BigUint::from(s / dd) * ext_field_group_order(q, n, s);
            Ok(AutGroupDescriptor {
                kind: if confirmed { AutKind::Exact } else { AutKind::Bounds },
                mode,
                s_min: s,
                galois_part: gp,
                lower: gl.clone(),
                upper: format!("N({gl})"),
                name,
                order: confirmed.then_some(order),
                exceptional: Vec::new(),
                contained_ext_groups: Vec::new(),
            })
        }
        AutMode::Normalizer => {
            let exceptional: Vec<u32> = t
                .divisors()
                .into_iter()
                .filter(|&d| d < n && u.delta_s(d).expect("divisor") == 2)
                .collect();
            let mut contained = Vec::new();
            if !exceptional.is_empty() {
                let on = normalizer_orbit(&u);
                for &d in &exceptional {
                    match extension_group_orbit(&u, d, on.len().min(group_cap)) {
                        Ok(o) if o.members().iter().all(|m| on.contains(m)) => contained.push(d),
                        Ok(_) | Err(Error::CapExceeded { .. }) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
            let (lower, upper, name, order) = if s == n {
                (
                    normalizer_name(&t),
                    format!("N({})", normalizer_name(&t)),
                    normalizer_name(&t),
                    normalizer_order(q, n),
                )
            } else {
                let gl = gl_name(&t, s);
                (
                    gl.clone(),
                    format!("N({gl})"),
                    format!("{} ⋊ {}", gal_name(&t, s, 1), gl),
                    BigUint::from(s) * ext_field_group_order(q, n, s),
                )
            };
            let exact = contained.is_empty();
            let lower = if exact {
                lower
            } else {
                let extra: Vec<String> = contained.iter().map(|&d| gl_name(&t, d)).collect();
                format!("<{}, {}>", normalizer_name(&t), extra.join(", "))
            };
            Ok(AutGroupDescriptor {
                kind: if exact { AutKind::Exact } else { AutKind::Bounds },
                mode,
                s_min: s,
                galois_part: (0..n).collect(),
                lower,
                upper: if exact { upper } else { gl_name(&t, 1) },
                name,
                order: exact.then_some(order),
                exceptional,
                contained_ext_groups: contained,
            })
        }
    }
}

/// Every `ψ ∈ GL_n(q)` with `ψ(C) = C`, by exhaustive search. Fails if
/// `|GL_n(q)|` exceeds `group_size_cap`.
pub fn brute_force_automorphisms(c: &OrbitCode, group_size_cap: u64) -> Result<Vec<LinearMap>> {
    let u = c.generator();
    let t = u.tower().clone();
    let n = t.n() as usize;
    let q = t.q() as u64;
    let gl = gl_order(n as u32, q);
    if gl > BigUint::from(group_size_cap) {
        return Err(Error::CapExceeded {
            what: "group size",
            reached: gl.to_u128().unwrap_or(u128::MAX),
            cap: group_size_cap as u128,
        });
    }
    let k = u.k();
    // basis b_0..b_{n-1} whose first k vectors span U
    let mut basis: Vec<FieldElement> = u.rows().to_vec();
    for &w in t.fq_basis() {
        if basis.len() == n {
            break;
        }
        let mut trial = basis.clone();
        trial.push(w);
        if rank_of(&t, trial.iter().copied()) == trial.len() {
            basis = trial;
        }
    }
    let bmat = Matrix::from_rows(basis.iter().map(|&b| t.fq_coords(b)).collect())?;
    let binv = bmat.inverse(&t)?;
    let members: HashSet<Subspace> = c.members().iter().cloned().collect();
    let nonzero: Vec<FieldElement> = t.elements().skip(1).collect();

    let starts: Vec<Vec<FieldElement>> = c
        .members()
        .iter()
        .flat_map(|v| ordered_bases(&t, &v.elements(), k))
        .collect();
    let found: Vec<LinearMap> = starts
        .par_iter()
        .flat_map_iter(|start| {
            let mut out = Vec::new();
            let mut ys = start.clone();
            extend_and_check(&t, &binv, &members, c.members(), &nonzero, &mut ys, n, &mut out);
            out
        })
        .collect();
    Ok(found)
}

fn ordered_bases(t: &FieldTower, elems: &[FieldElement], k: usize) -> Vec<Vec<FieldElement>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(t: &FieldTower, elems: &[FieldElement], k: usize, cur: &mut Vec<FieldElement>, out: &mut Vec<Vec<FieldElement>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for &x in elems {
            if x.is_zero() {
                continue;
            }
            cur.push(x);
            if rank_of(t, cur.iter().copied()) == cur.len() {
                rec(t, elems, k, cur, out);
            }
            cur.pop();
        }
    }
    rec(t, elems, k, &mut cur, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_and_check(
    t: &Arc<FieldTower>,
    binv: &Matrix,
    members: &HashSet<Subspace>,
    list: &[Subspace],
    nonzero: &[FieldElement],
    ys: &mut Vec<FieldElement>,
    n: usize,
    out: &mut Vec<LinearMap>,
) {
    if ys.len() == n {
        // ψ(ω^j) = Σ_i binv[j][i] y_i
        let images: Vec<FieldElement> = (0..n)
            .map(|j| {
                (0..n).fold(FieldElement::ZERO, |acc, i| t.add(acc, t.mul(binv.get(j, i), ys[i])))
            })
            .collect();
        let psi = LinearMap::from_images(t, images).expect("length n");
        if list.iter().all(|w| members.contains(&w.image(&psi))) {
            out.push(psi);
        }
        return;
    }
    let span = Subspace::from_generators(t, ys).expect("nonzero");
    for &y in nonzero {
        if !span.contains(y) {
            ys.push(y);
            extend_and_check(t, binv, members, list, nonzero, ys, n, out);
            ys.pop();
        }
    }
}

/// `(i, α)` with `U2 = α U1^{[i]}`, if any.
pub fn frobenius_isometric(u1: &Subspace, u2: &Subspace) -> Result<Option<(u32, FieldElement)>> {
    if u1.k() != u2.k() {
        return Err(Error::DimensionMismatch(u1.k(), u2.k()));
    }
    for i in 0..u1.tower().n() {
        if let Some(a) = singer_shift_between(&u1.frobenius_shift(i as i64), u2) {
            return Ok(Some((i, a)));
        }
    }
    Ok(None)
}

/// How far the class is known to be a full linear-isometry class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Resolution {
    /// Generic generator: linear isometry reduces to Frobenius-isometry.
    Frobenius,
    /// No other orbit shares the isometry invariants.
    UniqueInvariants,
    /// Non-generic and not separated by invariants.
    Unresolved,
}

/// A normalizer orbit of Singer orbits, with the shared invariants.
#[derive(Clone, Debug)]
pub struct IsometryClass {
    /// Canonical representatives of the member Singer orbits, sorted.
    pub member_orbits: Vec<Subspace>,
    /// Generator containing 1 used for the computations.
    pub generator: Subspace,
    pub orbit_length: usize,
    pub distance: Option<usize>,
    pub weights: WeightDistribution,
    pub aut: AutGroupDescriptor,
    pub delta_profile: Vec<(u32, usize)>,
    pub ell2: Option<Ell2Fit>,
    /// Some member of the Singer orbit contains `F_{q^2}`.
    pub contains_fq2: bool,
    pub resolution: Resolution,
}

impl IsometryClass {
    /// Class size `ν`.
    pub fn nu(&self) -> usize {
        self.member_orbits.len()
    }

    pub fn representative(&self) -> &Subspace {
        &self.member_orbits[0]
    }
}

/// Full classification of the cyclic orbit codes with given `k`.
#[derive(Clone, Debug)]
pub struct Classification {
    pub tower: Arc<FieldTower>,
    pub k: usize,
    pub orbit_count: usize,
    pub classes: Vec<IsometryClass>,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub grassmannian_cap: u64,
    pub group_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { grassmannian_cap: 10_000_000, group_cap: crate::orbit::DEFAULT_ORBIT_CAP }
    }
}

/// Enumerates the Singer orbits of `k`-subspaces and groups them into
/// normalizer orbits.
pub fn classify(tower: &Arc<FieldTower>, k: usize, opts: ClassifyOptions) -> Result<Classification> {
    let n = tower.n();
    let q = tower.q() as u64;
    if k == 0 || k > n as usize {
        return Err(Error::InvalidParameter(format!("k = {k} must lie in 1..={n}")));
    }
    let mut pending: BTreeSet<Subspace> = enumerate_grassmannian(tower, k, true, opts.grassmannian_cap)?.collect();
    // Singer orbits: (generator containing 1, orbit)
    let mut orbits: Vec<(Subspace, OrbitCode)> = Vec::new();
    while let Some(u) = pending.pop_first() {
        let o = singer_orbit(&u);
        for m in o.members() {
            pending.remove(m);
        }
        orbits.push((u, o));
    }
    orbits.sort_by(|a, b| a.1.canonical_rep().cmp(b.1.canonical_rep()));
    let mut owner: HashMap<&Subspace, usize> = HashMap::new();
    for (i, (_, o)) in orbits.iter().enumerate() {
        for m in o.members() {
            owner.insert(m, i);
        }
    }
    // union along Frobenius
    let mut class_of: Vec<Option<usize>> = vec![None; orbits.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..orbits.len() {
        if class_of[i].is_some() {
            continue;
        }
        let id = groups.len();
        let mut g = BTreeSet::new();
        for f in 0..n {
            let v = orbits[i].0.frobenius_shift(f as i64);
            g.insert(owner[&v]);
        }
        for &j in &g {
            class_of[j] = Some(id);
        }
        groups.push(g.into_iter().collect());
    }
    let full_length = ((q.pow(n) - 1) / (q - 1)) as usize;
    let mut classes: Vec<IsometryClass> = groups
        .par_iter()
        .map(|g| -> Result<IsometryClass> {
            let (gen, orb) = &orbits[g[0]];
            let weights = weight_distribution(orb)?;
            let distance = weights.distance();
            let aut = automorphism_group(gen, AutMode::Singer, opts.group_cap)?;
            let contains_fq2 = n.is_multiple_of(2) && orbit_contains_subfield(gen, 2)?;
            let ell2 = (k >= 2 && distance == Some(2 * k - 4) && orb.len() == full_length)
                .then(|| fit_ell2(q, weights.omega(2 * k - 4)))
                .flatten();
            Ok(IsometryClass {
                member_orbits: g.iter().map(|&j| orbits[j].1.canonical_rep().clone()).collect(),
                generator: gen.clone(),
                orbit_length: orb.len(),
                distance,
                weights,
                delta_profile: gen.delta_profile(),
                ell2,
                contains_fq2,
                resolution: if aut.s_min == n { Resolution::Frobenius } else { Resolution::Unresolved },
                aut,
            })
        })
        .collect::<Result<_>>()?;
    // Non-generic classes are settled when their invariants are unique.
    let sig = |c: &IsometryClass| {
        (c.orbit_length, c.weights.omegas.clone(), c.delta_profile.clone(), c.aut.order.clone())
    };
    let sigs: Vec<_> = classes.iter().map(sig).collect();
    for i in 0..classes.len() {
        if classes[i].resolution == Resolution::Unresolved
            && classes[i].aut.order.is_some()
            && classes[i].nu() == 1
            && sigs.iter().filter(|s| **s == sigs[i]).count() == 1
        {
            classes[i].resolution = Resolution::UniqueInvariants;
        }
    }
    classes.sort_by(|a, b| a.representative().cmp(b.representative()));
    Ok(Classification { tower: tower.clone(), k, orbit_count: orbits.len(), classes })
}

/// Outcome of [`check_shift_family`].
#[derive(Clone, Debug, Serialize)]
pub struct ShiftFamilyReport {
    pub q: u32,
    pub a: u32,
    pub alphas: usize,
    pub all_in_orbit: bool,
    /// `|Orb_N(U)|` → number of `α`.
    pub normalizer_sizes: BTreeMap<usize, usize>,
    /// Number of `α` with `Orb_N(U) = Orb_S(U)`.
    pub normalizer_equals_singer: usize,
}

fn shift_subspace(tower: &Arc<FieldTower>, a: u32, alpha: FieldElement) -> Result<Subspace> {
    let n = tower.n();
    if n != 4 * a {
        return Err(Error::Precondition(format!("n = {n} must equal 4a = {}", 4 * a)));
    }
    if tower.in_subfield(alpha, 2 * a) {
        return Err(Error::Precondition("alpha lies in F_{q^{2a}}".into()));
    }
    Subspace::span_over_subfield(tower, a, &[FieldElement::ONE, alpha])
}

/// Whether `U^{[2a]} ∈ Orb_S(U)` for `U = span_{F_{q^a}}{1, α}` in `F_{q^{4a}}`.
pub fn check_shift_in_orbit(tower: &Arc<FieldTower>, a: u32, alpha: FieldElement) -> Result<bool> {
    let u = shift_subspace(tower, a, alpha)?;
    Ok(singer_orbit_contains(&u, &u.frobenius_shift(2 * a as i64)))
}

/// Runs [`check_shift_in_orbit`] for every admissible `α`.
pub fn check_shift_family(tower: &Arc<FieldTower>, a: u32) -> Result<ShiftFamilyReport> {
    let alphas: Vec<FieldElement> = tower.elements().filter(|&x| !tower.in_subfield(x, 2 * a)).collect();
    let n = tower.n() as usize;
    let rows: Vec<(bool, usize, usize)> = alphas
        .par_iter()
        .map(|&alpha| -> Result<(bool, usize, usize)> {
            let u = shift_subspace(tower, a, alpha)?;
            let ok = singer_orbit_contains(&u, &u.frobenius_shift(2 * a as i64));
            let singer = ((tower.q_pow(tower.n()) - 1) / (tower.q_pow(u.stabilizer_field_degree()) - 1)) as usize;
            let gp = galois_part(&u).len();
            Ok((ok, singer * n / gp, singer))
        })
        .collect::<Result<_>>()?;
    let mut normalizer_sizes = BTreeMap::new();
    for &(_, sz, _) in &rows {
        *normalizer_sizes.entry(sz).or_insert(0) += 1;
    }
    Ok(ShiftFamilyReport {
        q: tower.q(),
        a,
        alphas: alphas.len(),
        all_in_orbit: rows.iter().all(|r| r.0),
        normalizer_sizes,
        normalizer_equals_singer: rows.iter().filter(|r| r.1 == r.2).count(),
    })
}

/// One normalizer orbit that coincides with its `GL_{n/s}(q^s)`-orbit.
#[derive(Clone, Debug, Serialize)]
pub struct ScanHit {
    pub rep: String,
    pub size: usize,
    pub singer_size: usize,
}

/// Outcome of [`scan_exceptional`].
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub q: u32,
    pub n: u32,
    pub k: usize,
    pub s: u32,
    /// Subspaces with `δ_s(U) = 2`.
    pub delta2_count: usize,
    /// Sizes of the `GL_{n/s}(q^s)`-orbits among them, largest first.
    pub gl_orbit_sizes: Vec<usize>,
    pub normalizer_orbit_count: usize,
    pub hits: Vec<ScanHit>,
    /// Subspaces whose two orbits coincide.
    pub coinciding_subspaces: usize,
    /// Normalizer orbits meeting more than one `GL_{n/s}(q^s)`-orbit.
    pub split_normalizer_orbits: usize,
}

/// Compares `Orb_{GL_{n/s}(q^s)}(U)` with `Orb_N(U)` for every `k`-subspace with `δ_s(U) = 2`.
pub fn scan_exceptional(tower: &Arc<FieldTower>, k: usize, s: u32, cap: u64) -> Result<ScanReport> {
    tower.check_divisor(s)?;
    let n = tower.n();
    if 2 * s > n {
        return Err(Error::Precondition(format!("s = {s} exceeds n/2")));
    }
    let d2: Vec<Subspace> = enumerate_grassmannian(tower, k, false, cap)?
        .par_bridge()
        .filter(|u| u.delta_s(s).expect("divisor") == 2)
        .collect();
    let cap = cap as usize;
    let gl_orbits =
        partition_into_orbits(d2.iter().cloned(), &ext_field_generators(tower, s)?, cap, GroupTag::ExtField(s))?;
    let mut gl_id: HashMap<&Subspace, usize> = HashMap::new();
    for (i, o) in gl_orbits.iter().enumerate() {
        for m in o.members() {
            gl_id.insert(m, i);
        }
    }
    let ngens = [LinearMap::multiplication(tower, tower.omega()), LinearMap::frobenius(tower, 1)];
    let n_orbits = partition_into_orbits(d2.iter().cloned(), &ngens, cap, GroupTag::Normalizer)?;
    let mut hits = Vec::new();
    let mut coinciding = 0;
    let mut failures = 0;
    for o in &n_orbits {
        let ids: BTreeSet<usize> = o.members().iter().map(|m| gl_id[m]).collect();
        if ids.len() != 1 {
            failures += 1;
            continue;
        }
        let g = &gl_orbits[*ids.first().expect("nonempty")];
        if g.len() == o.len() {
            coinciding += o.len();
            hits.push(ScanHit {
                rep: o.canonical_rep().literal(),
                size: o.len(),
                singer_size: singer_orbit(o.canonical_rep()).len(),
            });
        }
    }
    let mut gl_orbit_sizes: Vec<usize> = gl_orbits.iter().map(OrbitCode::len).collect();
    gl_orbit_sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ScanReport {
        q: tower.q(),
        n,
        k,
        s,
        delta2_count: d2.len(),
        gl_orbit_sizes,
        normalizer_orbit_count: n_orbits.len(),
        hits,
        coinciding_subspaces: coinciding,
        split_normalizer_orbits: failures,
    })
}
