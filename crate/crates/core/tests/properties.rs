use std::sync::Arc;

use orbitcode::adjoint::{inner, is_in_r, lfsr_sequence, rho_from_a, satisfies_defining_relation};
use orbitcode::orbit::{galois_part, normalizer_orbit};
use orbitcode::structure::{automorphism_group, frobenius_isometric, weight_distribution, AutKind, AutMode};
use orbitcode::subspace::Subspace;
use orbitcode::{make_field, singer_orbit, FieldElement, FieldTower, LinearMap};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn towers() -> Vec<Arc<FieldTower>> {
    [(2, 1, 6), (3, 1, 4), (2, 2, 3), (5, 1, 3), (2, 1, 8)]
        .into_iter()
        .map(|(p, e, n)| make_field(p, e, n, None).unwrap())
        .collect()
}

fn tower() -> impl Strategy<Value = Arc<FieldTower>> {
    (0..towers().len()).prop_map(|i| towers()[i].clone())
}

fn element(t: &FieldTower, i: u32) -> FieldElement {
    FieldElement::from_index(i % t.size())
}

fn subspace(t: &Arc<FieldTower>, k: usize, seed: u64) -> Subspace {
    Subspace::random(t, k.min(t.n() as usize), &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(t in tower(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let (a, b, c) = (element(&t, a), element(&t, b), element(&t, c));
        prop_assert_eq!(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
        prop_assert_eq!(t.add(a, t.neg(a)), FieldElement::ZERO);
        prop_assert_eq!(t.mul(a, b), t.mul_via_companion(a, b));
        prop_assert_eq!(t.frobenius(t.add(a, b), 1), t.add(t.frobenius(a, 1), t.frobenius(b, 1)));
        if !a.is_zero() {
            prop_assert_eq!(t.mul(a, t.inv(a).unwrap()), FieldElement::ONE);
        }
        prop_assert_eq!(t.from_fq_coords(&t.fq_coords(a)), a);
    }

    #[test]
    fn distance_is_a_scaled_invariant_metric(t in tower(), k1 in 1usize..4, k2 in 1usize..4, k3 in 1usize..4, s in any::<u64>(), a in 1u32..) {
        let (u, v, w) = (subspace(&t, k1, s), subspace(&t, k2, s ^ 1), subspace(&t, k3, s ^ 2));
        let d = u.distance(&v).unwrap();
        prop_assert_eq!(d, v.distance(&u).unwrap());
        prop_assert!(u.distance(&w).unwrap() <= d + v.distance(&w).unwrap());
        prop_assert_eq!(d, u.k() + v.k() - 2 * u.intersection_dim(&v).unwrap());
        let alpha = t.omega_pow(a as i64);
        prop_assert_eq!(u.scalar_shift(alpha).unwrap().distance(&v.scalar_shift(alpha).unwrap()).unwrap(), d);
        prop_assert_eq!(u.frobenius_shift(1).distance(&v.frobenius_shift(1)).unwrap(), d);
        prop_assert_eq!(u.dual().distance(&v.dual()).unwrap(), d);
    }

    #[test]
    fn duality(t in tower(), k in 1usize..5, s in any::<u64>()) {
        let u = subspace(&t, k, s);
        let d = u.dual();
        prop_assert_eq!(d.k() + u.k(), t.n() as usize);
        prop_assert_eq!(d.dual(), u.clone());
        for x in u.elements() {
            for &y in d.rows() {
                prop_assert!(inner(&t, x, y).is_zero());
            }
        }
    }

    #[test]
    fn delta_bounds(t in tower(), k in 1usize..4, seed in any::<u64>()) {
        let u = subspace(&t, k, seed).normalize_to_contain_one().unwrap();
        for s in t.divisors() {
            let d = u.delta_s(s).unwrap();
            prop_assert!(d >= 1 && d <= u.k());
            prop_assert_eq!(d == 1, u.is_subspace_of(&Subspace::subfield(&t, s).unwrap()));
        }
        let gp = galois_part(&u);
        let n = t.n();
        for &i in &gp {
            for &j in &gp {
                prop_assert!(gp.contains(&((i + j) % n)));
            }
        }
    }

    #[test]
    fn weights_do_not_depend_on_reference(t in tower(), k in 1usize..4, seed in any::<u64>(), a in 0u32..1000) {
        let u = subspace(&t, k, seed);
        let o = singer_orbit(&u);
        let w = weight_distribution(&o).unwrap();
        let v = &o.members()[a as usize % o.len()];
        let w2 = weight_distribution(&singer_orbit(v)).unwrap();
        prop_assert_eq!(&w.omegas, &w2.omegas);
        prop_assert_eq!(w.omegas[0], 1);
        prop_assert_eq!(w.total() as usize, o.len());
        prop_assert!(w.omegas.iter().skip(1).step_by(2).all(|&x| x == 0));
        prop_assert_eq!(w.distance(), o.min_distance());
    }

    #[test]
    fn frobenius_isometry_matches_normalizer_orbits(t in tower(), k in 1usize..4, s1 in any::<u64>(), s2 in any::<u64>(), i in 0i64..8, a in 0u32..10_000) {
        let u = subspace(&t, k, s1);
        let v = if s2 % 2 == 0 {
            u.frobenius_shift(i).scalar_shift(t.omega_pow(a as i64)).unwrap()
        } else {
            subspace(&t, k, s2)
        };
        let witness = frobenius_isometric(&u, &v).unwrap();
        let same = normalizer_orbit(&u).canonical_rep() == normalizer_orbit(&v).canonical_rep();
        prop_assert_eq!(witness.is_some(), same);
        if let Some((j, alpha)) = witness {
            prop_assert_eq!(u.frobenius_shift(j as i64).scalar_shift(alpha).unwrap(), v);
        }
    }

    #[test]
    fn descriptor_invariants(t in tower(), k in 1usize..4, seed in any::<u64>()) {
        let u = subspace(&t, k, seed).normalize_to_contain_one().unwrap();
        let a = automorphism_group(&u, AutMode::Singer, 200_000).unwrap();
        let q = t.q() as u64;
        let singer = num_bigint::BigUint::from(q.pow(t.n()) - 1);
        if a.kind == AutKind::Exact {
            prop_assert!((a.order.clone().unwrap() % singer).bits() == 0);
        }
        prop_assert_eq!(a.s_min == t.n(), u.is_generic().unwrap());
        prop_assert_eq!(a.s_min, u.smallest_containing_subfield().unwrap());
    }

    #[test]
    fn adjoint_form_identity(t in tower(), imgs in prop::collection::vec(any::<u32>(), 8), x in any::<u32>(), y in any::<u32>()) {
        let n = t.n() as usize;
        let phi = LinearMap::from_images(&t, imgs[..n].iter().map(|&i| element(&t, i)).collect()).unwrap();
        let (x, y) = (element(&t, x), element(&t, y));
        prop_assert_eq!(inner(&t, phi.apply(x), y), inner(&t, x, phi.adjoint().apply(y)));
        let psi = LinearMap::multiplication(&t, t.omega());
        let sigma = LinearMap::frobenius(&t, 1);
        prop_assert_eq!(phi.compose(&psi).compose(&sigma), phi.compose(&psi.compose(&sigma)));
    }

    #[test]
    fn rho_family_closed_under_scaling(t in tower(), a in 1u32.., c in 1u32..) {
        let a = element(&t, a.max(1) % (t.size() - 1) + 1);
        let c = t.omega_pow(c as i64);
        let rho = rho_from_a(&t, &t.fq_coords(a)).unwrap();
        prop_assert!(is_in_r(&rho) && satisfies_defining_relation(&rho));
        let scaled = rho_from_a(&t, &t.fq_coords(t.mul(c, a))).unwrap();
        prop_assert!(is_in_r(&scaled) && satisfies_defining_relation(&scaled));
    }

    #[test]
    fn recurrence_period_divides_group_order(t in tower(), a in 1u32..) {
        let a = t.fq_coords(element(&t, a % (t.size() - 1) + 1));
        let order = (t.q() as usize).pow(t.n()) - 1;
        let seq = lfsr_sequence(&t, &a, order + t.n() as usize).unwrap();
        prop_assert_eq!(&seq[order..], &seq[..t.n() as usize]);
    }
}
