use lejakit_web::{constants, curve, node_coords};

#[test]
fn disc_nodes_are_flattened_pairs() {
    let v = node_coords("disc", 4).unwrap();
    assert_eq!(v, vec![1.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0, -1.0]);
}

#[test]
fn interval_nodes_have_zero_imaginary_part() {
    let v = node_coords("interval", 3).unwrap();
    assert_eq!(v, vec![1.0, 0.0, -1.0, 0.0, 0.0, 0.0]);
}

#[test]
fn curve_on_roots_of_unity() {
    let c = curve("disc", 8, 64).unwrap();
    assert_eq!(c.len(), 3 * 64);
    for t in c.chunks(3) {
        assert!(t[1] >= 1.0 - 1e-12);
        assert!((t[2] - 1.0).abs() < 1e-12);
    }
    // last interval sample sits on x = -1, a node
    let c = curve("interval", 5, 11).unwrap();
    assert!((c[c.len() - 3] - std::f64::consts::PI).abs() < 1e-15);
    assert_eq!(c[c.len() - 2], 1.0);
}

#[test]
fn constants_track_known_values() {
    let v = constants("disc", 7).unwrap();
    assert_eq!(v[0], 1.0);
    assert!((v[1] - 2f64.sqrt()).abs() < 1e-9);
    assert!((v[2] - 3.0).abs() < 1e-6);
    assert!((v[6] - 7.0).abs() < 7e-6);
    let r = constants("interval", 5).unwrap();
    assert!(r[4] <= 1.0 + std::f64::consts::FRAC_2_PI * 4f64.ln());
}
