use std::collections::HashSet;

use lejakit::angle::DyadicAngle;
use lejakit::disc::{
    conjugate_doubling_section, doubling_extend, greedy_search_config, leja_section, structural_checks,
    verify_greedy, verify_greedy_points,
};
use lejakit::interval::{
    angle_recursion_section, is_gauss_lobatto, project_from_disc, sqrt_recursion_nodes, sqrt_route_reference,
    square_map_check,
};
use num_complex::Complex64;

#[test]
fn disc_opening_values() {
    let p = leja_section(4).unwrap().points();
    let want = [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)];
    for (z, (re, im)) in p.iter().zip(want) {
        assert_eq!((z.re, z.im), (re, im));
    }
}

#[test]
fn disc_greedy_property() {
    let cfg = greedy_search_config();
    for k in 1..=64 {
        let r = verify_greedy(k, &cfg).unwrap();
        assert!(r.pass, "{r:?}");
    }
}

#[test]
fn greedy_oracle_rejects_non_leja_order() {
    // roots of unity of order 4 in natural order: e_2 = i is not a maximizer after {1, i}
    let pts: Vec<Complex64> = (0..4).map(|j| Complex64::from_polar(1.0, j as f64 * std::f64::consts::FRAC_PI_2)).collect();
    let reps = verify_greedy_points(&pts, &greedy_search_config());
    assert!(!reps[0].pass);
}

#[test]
fn doubling_reproduces_canonical_sections() {
    let mut s = leja_section(1).unwrap();
    for n in 0..12 {
        s = doubling_extend(&s).unwrap();
        assert_eq!(s, leja_section(1 << (n + 1)).unwrap());
    }
    assert!(doubling_extend(&leja_section(3).unwrap()).is_err());
}

#[test]
fn structure_up_to_two_to_sixteen() {
    for row in structural_checks(16).unwrap() {
        assert!(row.all(), "{row:?}");
    }
}

#[test]
fn conjugate_doubling_is_a_different_leja_sequence() {
    let f = conjugate_doubling_section(64).unwrap();
    let e = leja_section(64).unwrap();
    assert_ne!(f, e);
    // still a Leja sequence on the circle
    let reps = verify_greedy_points(&f.points(), &greedy_search_config());
    assert!(reps.iter().all(|r| r.pass));
}

#[test]
fn interval_opening_values() {
    let r = project_from_disc(3).unwrap();
    assert_eq!(r.values(), &[1.0, -1.0, 0.0]);
}

#[test]
fn projection_and_angle_routes_agree_exactly() {
    let k = 1 << 14;
    let a = project_from_disc(k).unwrap();
    let b = angle_recursion_section(k).unwrap();
    assert_eq!(a.folded(), b.folded());
    assert_eq!(a.values(), b.values());
    assert!(square_map_check(&a));
    assert!(a.check_invariants());
}

#[test]
fn gauss_lobatto_sections() {
    let full = project_from_disc((1 << 14) + 1).unwrap();
    for n in 0..=14u32 {
        let k = (1usize << n) + 1;
        assert!(is_gauss_lobatto(&full.prefix(k), n).unwrap(), "n = {n}");
        if n >= 2 {
            assert!(!is_gauss_lobatto(&full.prefix(k - 1), n).unwrap());
        }
    }
}

#[test]
fn sqrt_route_matches_conjugate_doubling_projection() {
    let k = 1 << 12;
    let r = sqrt_recursion_nodes(k).unwrap();
    let reference = sqrt_route_reference(k).unwrap();
    // (r + 1)/2 cancels near r = -1, so errors are absolute, not relative
    let worst = r.iter().zip(reference.values()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    assert!(worst < 1e-13, "max abs deviation {worst:e}");
}

#[test]
fn sqrt_route_agrees_with_canonical_as_sets() {
    // per-index agreement only holds for the first nodes; at k = 2^n + 1 the
    // sets coincide (Gauss-Lobatto)
    let r = sqrt_recursion_nodes(1 << 12).unwrap();
    let canon = project_from_disc(1 << 12).unwrap();
    for j in 0..13 {
        assert!((r[j].abs() - canon.values()[j].abs()).abs() < 1e-15, "j = {j}");
    }
    assert!((r[13].abs() - canon.values()[13].abs()).abs() > 1e-3);
    for n in 1..=11u32 {
        let k = (1usize << n) + 1;
        let mut a: Vec<f64> = r[..k].to_vec();
        let mut b: Vec<f64> = canon.values()[..k].to_vec();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-14, "n = {n}");
        }
    }
}

#[test]
fn interval_nodes_distinct_and_paired() {
    let r = project_from_disc(2049).unwrap();
    let set: HashSet<DyadicAngle> = r.folded().into_iter().collect();
    assert_eq!(set.len(), 2049);
    let v = r.values();
    for j in 2..1024 {
        assert_eq!(v[2 * j - 1], -v[2 * j]);
    }
}

#[test]
fn invalid_lengths() {
    assert!(leja_section(0).is_err());
    assert!(project_from_disc(0).is_err());
    assert!(angle_recursion_section(0).is_err());
}
