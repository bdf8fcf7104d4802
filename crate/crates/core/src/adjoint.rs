//! Maps `ρ` conjugating the adjoint groups back onto the groups themselves,
//! and dual orbit codes.

use std::collections::HashSet;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTower};
use crate::linalg::LinearMap;
use crate::orbit::{ext_field_generators, orbit_closure, random_ext_field_map, GroupTag, OrbitCode};

/// The coordinate dot product `⟨x, y⟩` in the basis `1, ω, .., ω^{n-1}`.
pub fn inner(t: &FieldTower, x: FieldElement, y: FieldElement) -> FieldElement {
    (0..t.n() as usize).fold(FieldElement::ZERO, |acc, j| t.add(acc, t.mul(t.fq_coord(x, j), t.fq_coord(y, j))))
}

/// Coefficients `f_i` with `ω^n = Σ f_i ω^i`.
pub fn recurrence_coefficients(t: &FieldTower) -> Vec<FieldElement> {
    t.fq_coords(t.omega_pow(t.n() as i64))
}

/// Extends `init` by `x_{j+n} = Σ f_i x_{j+i}`.
pub fn lfsr_sequence(t: &FieldTower, init: &[FieldElement], length: usize) -> Result<Vec<FieldElement>> {
    let n = t.n() as usize;
    if init.len() != n {
        return Err(Error::DimensionMismatch(init.len(), n));
    }
    if length < n {
        return Err(Error::InvalidParameter(format!("length {length} is shorter than n = {n}")));
    }
    if init.iter().any(|&x| !t.in_fq(x)) {
        return Err(Error::InvalidParameter("initial values must lie in F_q".into()));
    }
    let f = recurrence_coefficients(t);
    let mut seq = init.to_vec();
    while seq.len() < length {
        let j = seq.len() - n;
        let next = (0..n).fold(FieldElement::ZERO, |acc, i| t.add(acc, t.mul(f[i], seq[j + i])));
        seq.push(next);
    }
    Ok(seq)
}

/// The map with `ρ(ω^i) = Σ_j a_{j+i} ω^j`, `(a_j)` the recurrence solution from `a`.
pub fn rho_from_a(t: &Arc<FieldTower>, a: &[FieldElement]) -> Result<LinearMap> {
    if a.iter().all(|x| x.is_zero()) {
        return Err(Error::InvalidParameter("initial vector is zero".into()));
    }
    let n = t.n() as usize;
    let seq = lfsr_sequence(t, a, 2 * n - 1)?;
    let images = (0..n).map(|i| t.from_fq_coords(&seq[i..i + n])).collect();
    LinearMap::from_images(t, images)
}

/// `ξ(z) = z^q - z`.
pub fn xi(t: &Arc<FieldTower>) -> LinearMap {
    let images = t.fq_basis().iter().map(|&b| t.sub(t.frobenius(b, 1), b)).collect();
    LinearMap::from_images(t, images).expect("basis has length n")
}

/// The element of `(im ξ)^⊥` whose first nonzero coordinate is 1.
pub fn canonical_rho_one(t: &Arc<FieldTower>) -> FieldElement {
    let ker = xi(t).matrix().kernel(t);
    debug_assert_eq!(ker.len(), 1);
    t.from_fq_coords(&ker[0])
}

/// `ρ ∈ R` with `ρ(1) ⊥ im ξ`.
pub fn canonical_rho(t: &Arc<FieldTower>) -> LinearMap {
    rho_from_a(t, &t.fq_coords(canonical_rho_one(t))).expect("nonzero")
}

pub fn adjoint(phi: &LinearMap) -> LinearMap {
    phi.adjoint()
}

/// `ρ^{-1} ∘ φ ∘ ρ`.
pub fn conjugate(rho: &LinearMap, rho_inv: &LinearMap, phi: &LinearMap) -> LinearMap {
    rho_inv.compose(&phi.compose(rho))
}

/// Whether `ρ` is invertible with `ρ^{-1} m_ω^† ρ = m_ω`.
pub fn is_in_r(rho: &LinearMap) -> bool {
    let t = rho.tower();
    let Ok(inv) = rho.inverse() else { return false };
    let m = LinearMap::multiplication(t, t.omega());
    conjugate(rho, &inv, &m.adjoint()) == m
}

/// `⟨ρ(ω y), z⟩ = ⟨ρ(y), ω z⟩` over all pairs of basis vectors.
pub fn satisfies_defining_relation(rho: &LinearMap) -> bool {
    let t = rho.tower();
    let w = t.omega();
    t.fq_basis().iter().all(|&y| {
        t.fq_basis()
            .iter()
            .all(|&z| inner(t, rho.apply(t.mul(w, y)), z) == inner(t, rho.apply(y), t.mul(w, z)))
    })
}

/// Sampled checks for one divisor `s`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ExtFieldCheck {
    pub s: u32,
    pub samples: usize,
    pub failures: usize,
}

/// Outcome of [`verify_adjoint_theorem`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AdjointReport {
    pub p: u32,
    pub e: u32,
    pub n: u32,
    pub rho_one: String,
    pub singer_ok: bool,
    pub frobenius_ok: bool,
    pub ext_field: Vec<ExtFieldCheck>,
}

impl AdjointReport {
    pub fn passed(&self) -> bool {
        self.singer_ok && self.frobenius_ok && self.ext_field.iter().all(|c| c.failures == 0)
    }
}

/// Checks `ρ^{-1} G^† ρ = G` for the Singer group, the Galois group and
/// sampled elements of every `GL_{n/s}(q^s)`, with `ρ` canonical.
pub fn verify_adjoint_theorem(t: &Arc<FieldTower>, samples: usize, seed: u64) -> Result<AdjointReport> {
    let rho = canonical_rho(t);
    let inv = rho.inverse()?;
    let m = LinearMap::multiplication(t, t.omega());
    let sigma = LinearMap::frobenius(t, 1);
    let singer_ok = conjugate(&rho, &inv, &m.adjoint()) == m;
    let frobenius_ok = conjugate(&rho, &inv, &sigma.adjoint()) == LinearMap::frobenius(t, -1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ext_field = Vec::new();
    for s in t.divisors() {
        let ms = LinearMap::multiplication(t, t.subfield_generator(s)?);
        let mut failures = 0;
        for _ in 0..samples {
            let g = random_ext_field_map(t, s, &mut rng)?;
            let hat = conjugate(&rho, &inv, &g.adjoint());
            if !(hat.commutes_with(&ms) && hat.is_invertible()) {
                failures += 1;
            }
        }
        ext_field.push(ExtFieldCheck { s, samples, failures });
    }
    Ok(AdjointReport { p: t.p(), e: t.e(), n: t.n(), rho_one: t.format_element(rho.apply(FieldElement::ONE)), singer_ok, frobenius_ok, ext_field })
}

/// Generators of the group behind a tag.
pub fn group_generators(t: &Arc<FieldTower>, tag: &GroupTag) -> Result<Vec<LinearMap>> {
    Ok(match tag {
        GroupTag::Singer => vec![LinearMap::multiplication(t, t.omega())],
        GroupTag::Normalizer => vec![LinearMap::multiplication(t, t.omega()), LinearMap::frobenius(t, 1)],
        GroupTag::ExtField(s) => ext_field_generators(t, *s)?,
        GroupTag::Adjoint(inner) => group_generators(t, inner)?.iter().map(LinearMap::adjoint).collect(),
    })
}

/// `C^⊥ = {W^⊥ : W ∈ C}`, checked to be the orbit of `U^⊥` under the adjoint group.
pub fn dual_orbit(c: &OrbitCode) -> Result<OrbitCode> {
    let t = c.generator().tower();
    let members: Vec<_> = c.members().iter().map(|w| w.dual()).collect();
    let tag = match c.group() {
        GroupTag::Adjoint(inner) => (**inner).clone(),
        g => GroupTag::Adjoint(Box::new(g.clone())),
    };
    let gens = group_generators(t, &tag)?;
    let gen = c.generator().dual();
    let closure = orbit_closure(&gen, &gens, members.len(), tag.clone())?;
    let set: HashSet<_> = members.iter().collect();
    if closure.len() != set.len() || !closure.members().iter().all(|m| set.contains(m)) {
        return Err(Error::Precondition("dual set is not an orbit of the adjoint group".into()));
    }
    Ok(OrbitCode::from_members(tag, gen, members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::orbit::singer_orbit;
    use crate::subspace::Subspace;
    use rand::Rng;

    #[test]
    fn lfsr_basics() {
        let t = make_field(2, 1, 4, None).unwrap();
        let z = lfsr_sequence(&t, &[FieldElement::ZERO; 4], 20).unwrap();
        assert!(z.iter().all(|x| x.is_zero()));
        let one = t.fq_coords(FieldElement::ONE);
        let s = lfsr_sequence(&t, &one, 40).unwrap();
        let period = (1..=15).find(|&p| (0..25).all(|j| s[j] == s[j + p])).unwrap();
        assert_eq!(period, 15);
        let shifted = lfsr_sequence(&t, &s[1..5], 39).unwrap();
        assert_eq!(&shifted[..], &s[1..40]);
        assert!(lfsr_sequence(&t, &one, 3).is_err());
    }

    #[test]
    fn rho_family() {
        let t = make_field(2, 1, 6, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = FieldElement::from_index(rng.gen_range(1..64));
            let a = t.fq_coords(x);
            let rho = rho_from_a(&t, &a).unwrap();
            assert!(rho.is_invertible());
            assert!(is_in_r(&rho));
            assert!(satisfies_defining_relation(&rho));
            assert_eq!(t.fq_coords(rho.apply(FieldElement::ONE)), a);
        }
        assert!(rho_from_a(&t, &[FieldElement::ZERO; 6]).is_err());
    }

    #[test]
    fn canonical_choice() {
        for (p, e, n) in [(2, 1, 6), (3, 1, 4), (2, 2, 3)] {
            let t = make_field(p, e, n, None).unwrap();
            assert_eq!(xi(&t).matrix().rank(&t), n as usize - 1);
            let r1 = canonical_rho_one(&t);
            for &z in t.fq_basis() {
                assert_eq!(inner(&t, r1, t.frobenius(z, 1)), inner(&t, r1, z));
            }
        }
    }

    #[test]
    fn adjoint_is_transpose() {
        let t = make_field(3, 1, 3, None).unwrap();
        let id = LinearMap::identity(&t);
        assert_eq!(adjoint(&id), id);
        let m = LinearMap::multiplication(&t, t.omega());
        assert_eq!(adjoint(&adjoint(&m)), m);
        for x in t.elements() {
            for &y in t.fq_basis() {
                assert_eq!(inner(&t, m.apply(x), y), inner(&t, x, m.adjoint().apply(y)));
            }
        }
    }

    #[test]
    fn theorem_small() {
        let t = make_field(2, 1, 6, None).unwrap();
        assert!(verify_adjoint_theorem(&t, 30, 1).unwrap().passed());
        let t = make_field(2, 2, 2, None).unwrap();
        assert!(verify_adjoint_theorem(&t, 30, 1).unwrap().passed());
    }

    #[test]
    fn dual_of_spread() {
        let t = make_field(2, 1, 6, None).unwrap();
        let c = singer_orbit(&Subspace::subfield(&t, 3).unwrap());
        let d = dual_orbit(&c).unwrap();
        assert_eq!(d.len(), 9);
        assert_eq!(d.min_distance(), Some(6));
        assert_eq!(d.distance_multiset(), c.distance_multiset());
        assert_eq!(dual_orbit(&d).unwrap().members(), c.members());
    }
}
