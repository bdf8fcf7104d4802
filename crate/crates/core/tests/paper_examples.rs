use orbitcode::{make_field, normalizer_orbit, singer_orbit};
use orbitcode::orbit::{extension_group_orbit, singer_orbit_contains};
use orbitcode::structure::{check_shift_family, check_shift_in_orbit, classify, frobenius_isometric, scan_exceptional, ClassifyOptions};
use orbitcode::subspace::Subspace;

#[test]
fn shift_family_q2_a2() {
    let t = make_field(2, 1, 8, None).unwrap();
    let r = check_shift_family(&t, 2).unwrap();
    assert_eq!(r.alphas, 256 - 16);
    assert!(r.all_in_orbit);
    // (n/2)(q^n - 1)/(q^a - 1)
    let want = 4 * 255 / 3;
    assert_eq!(r.normalizer_sizes.keys().copied().collect::<Vec<_>>(), vec![want]);
}

#[test]
fn shift_family_q3_a2() {
    let t = make_field(3, 1, 8, None).unwrap();
    let r = check_shift_family(&t, 2).unwrap();
    assert!(r.all_in_orbit);
    assert!(r.normalizer_equals_singer > 0);
}

#[test]
fn shift_rejects_subfield_alpha() {
    let t = make_field(2, 1, 8, None).unwrap();
    assert!(check_shift_in_orbit(&t, 2, t.subfield_generator(4).unwrap()).is_err());
    assert!(check_shift_in_orbit(&t, 2, t.omega()).unwrap());
}

#[test]
fn k2_scans_hit_only_at_known_parameters() {
    for (p, e, n, s, hit) in [(2, 1, 4, 2, true), (2, 1, 5, 1, true), (2, 2, 4, 2, false), (2, 1, 6, 2, false), (2, 1, 6, 3, false), (3, 1, 4, 2, false), (2, 1, 8, 4, false)] {
        let t = make_field(p, e, n, None).unwrap();
        let r = scan_exceptional(&t, 2, s, 1 << 22).unwrap();
        assert_eq!(!r.hits.is_empty(), hit, "({p},{e},{n}) s = {s}: {:?}", r.hits);
    }
}

#[test]
fn q4_gl_orbit_splits_into_two_normalizer_orbits() {
    let t = make_field(2, 2, 4, None).unwrap();
    let r = scan_exceptional(&t, 2, 2, 1 << 22).unwrap();
    assert_eq!(r.delta2_count, 340);
    assert_eq!(r.gl_orbit_sizes, vec![340]);
    assert_eq!(r.normalizer_orbit_count, 2);
    let u = Subspace::parse(&t, "1;w").unwrap();
    assert_eq!(normalizer_orbit(&u).len(), 170);
    assert_eq!(singer_orbit(&u).len(), 85);
}

#[test]
fn distinct_classes_are_not_frobenius_isometric() {
    let t = make_field(2, 1, 7, None).unwrap();
    let c = classify(&t, 3, ClassifyOptions::default()).unwrap();
    for a in &c.classes {
        for b in &c.classes {
            let w = frobenius_isometric(&a.generator, &b.generator).unwrap();
            assert_eq!(w.is_some(), a.representative() == b.representative());
        }
    }
}

#[test]
fn gl_orbit_inside_singer_orbit_for_subfield_generators() {
    let t = make_field(2, 1, 6, None).unwrap();
    let u = Subspace::subfield(&t, 3).unwrap();
    let o = extension_group_orbit(&u, 3, 1000).unwrap();
    assert_eq!(o.len(), 9);
    assert!(o.members().iter().all(|m| singer_orbit_contains(&u, m)));
}
