use lejakit::binary::sigma1;
use lejakit::interp::LagrangeBasis;
use lejakit::lebesgue::{
    diff_norm_direct, diff_norm_disc, diff_norm_interval, gamma, gamma_bound, lebesgue_constant, next_point_sweep,
    roots_of_unity_closed_bound, roots_of_unity_constant, sup_w, GammaK,
};
use lejakit::{lebesgue_report, Domain, SearchConfig};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn basis(domain: Domain, k: usize) -> LagrangeBasis {
    let (p, _) = domain.section(k).unwrap();
    LagrangeBasis::new(&p).unwrap()
}

fn circle(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(1.0, rng.gen::<f64>() * std::f64::consts::TAU)
}

#[test]
fn two_node_constant() {
    let r = lebesgue_constant(Domain::Disc, 2, &SearchConfig::default()).unwrap();
    assert!((r.value - 2f64.sqrt()).abs() <= 1e-9 * 2f64.sqrt());
    assert_eq!(lebesgue_constant(Domain::Disc, 1, &SearchConfig::default()).unwrap().value, 1.0);
}

#[test]
fn exact_anchor_values_on_the_disc() {
    let cfg = SearchConfig::default();
    for n in 1..=8 {
        let k = (1usize << n) - 1;
        let r = lebesgue_report(Domain::Disc, k, &cfg).unwrap();
        assert!(rel(r.lebesgue, k as f64) <= 1e-6, "k = {k}: {}", r.lebesgue);
        assert!(rel(r.lambda_at_next, k as f64) <= 1e-9);
        assert!(rel(r.diff_norm, (k + 1) as f64) <= 1e-9);
    }
    // high precision oracle values
    for (k, want) in [(5, 3.8284271247461900976), (6, 4.0273394921258481045), (12, 5.082088206401868349)] {
        let r = lebesgue_constant(Domain::Disc, k, &cfg).unwrap();
        assert!(rel(r.value, want) < 1e-9, "k = {k}: {}", r.value);
    }
}

#[test]
fn interval_oracle_values() {
    let cfg = SearchConfig::default();
    let r8 = lebesgue_report(Domain::Interval, 8, &cfg).unwrap();
    assert!(rel(r8.lebesgue, 7.0121326302072330957) < 1e-9);
    assert!(rel(r8.sup_w.unwrap(), 16.015513395054438353) < 1e-9);
    assert!(rel(r8.beta.unwrap(), 0.25) < 1e-12);
    assert!(rel(r8.diff_norm, 8.0077566975272191765) < 1e-9);
    let r12 = lebesgue_report(Domain::Interval, 12, &cfg).unwrap();
    assert!(rel(r12.lebesgue, 9.4350782365815288313) < 1e-9);
    assert!(rel(r12.sup_w.unwrap(), 13.135856252649427896) < 1e-9);
    assert!(rel(r12.beta.unwrap(), 0.39016504294495532165) < 1e-12);
    assert!(rel(r12.diff_norm, 10.250303837867447834) < 1e-9);
}

#[test]
fn gauss_lobatto_constants() {
    let cfg = SearchConfig::default();
    for n in 1..=7u32 {
        let k = (1usize << n) + 1;
        let r = lebesgue_constant(Domain::Interval, k, &cfg).unwrap();
        let bound = 1.0 + std::f64::consts::FRAC_2_PI * (n as f64) * std::f64::consts::LN_2;
        assert!(r.value <= bound, "n = {n}");
    }
    let r5 = lebesgue_constant(Domain::Interval, 5, &cfg).unwrap();
    assert!(r5.value <= 1.8825);
}

#[test]
fn quadratic_identity_to_4096() {
    let sweep = next_point_sweep(Domain::Disc, 4097).unwrap();
    for v in &sweep {
        let s = (sigma1(v.k as u64) as f64).exp2();
        assert!((v.lambda2 * v.lambda2 - (s - 1.0)).abs() / s <= 1e-9, "k = {}", v.k);
        assert!(v.lambda >= s - 1.0 - 1e-9 * s, "k = {}", v.k);
    }
    for n in 1..=2048 {
        let odd = &sweep[2 * n];
        let half = &sweep[n - 1];
        assert_eq!(odd.k, 2 * n + 1);
        assert!(rel(odd.lambda, 2.0 * half.lambda + 1.0) <= 1e-9, "N = {n}");
        assert!(rel(odd.lambda2 * odd.lambda2, 2.0 * half.lambda2 * half.lambda2 + 1.0) <= 1e-9);
    }
}

#[test]
fn quadratic_function_of_roots_of_unity_is_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..=12 {
        let b = basis(Domain::Disc, 1 << n);
        for _ in 0..100 {
            let v = b.lebesgue2(circle(&mut rng));
            assert!((v - 1.0).abs() <= 1e-10, "n = {n}: {v}");
        }
    }
}

#[test]
fn halving_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in [1usize, 2, 3, 5, 12, 100, 333, 1024, 2048] {
        let big = basis(Domain::Disc, 2 * n);
        let small = basis(Domain::Disc, n);
        for _ in 0..20 {
            let z = circle(&mut rng);
            let a = big.point_eval(z);
            let b = small.point_eval(z * z);
            assert!((a.lambda2 - b.lambda2).abs() <= 1e-10 * b.lambda2.max(1.0), "N = {n}");
            assert!(a.lambda >= b.lambda - 1e-10, "N = {n}");
        }
    }
}

fn growth_scan(domain: Domain, kmax: usize, seed: u64, check: impl Fn(usize, f64, f64, f64, f64) -> bool) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (pts, _) = domain.section(kmax + 1).unwrap();
    let mut small = LagrangeBasis::new(&pts[..1]).unwrap();
    let mut bad = Vec::new();
    for k in 1..=kmax {
        if k > 1 {
            small.push(pts[k - 1]).unwrap();
        }
        let mut big = small.clone();
        big.push(pts[k]).unwrap();
        let at_next = small.lebesgue2(pts[k]);
        for _ in 0..4 {
            let z = domain.point(rng.gen::<f64>() * std::f64::consts::TAU);
            let lk = big.eval(k, z).norm();
            if !check(k, big.lebesgue2(z), small.lebesgue2(z), at_next, lk) {
                bad.push(k);
            }
        }
    }
    bad
}

#[test]
fn growth_inequality_disc() {
    let bad = growth_scan(Domain::Disc, 512, 9, |_, big, small, next, _| big <= small + next + 1.0 + 1e-9);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn growth_inequality_interval() {
    // R is not a Leja sequence on [-1, 1], so |L_k| may exceed 1 and the
    // bound needs the factor |L_k(x)|
    let bad = growth_scan(Domain::Interval, 512, 9, |_, big, small, next, lk| {
        big <= small + lk * (next + 1.0) + 1e-9 * big
    });
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn interval_last_lagrange_polynomial_exceeds_one() {
    let (pts, _) = Domain::Interval.section(11).unwrap();
    let b = LagrangeBasis::new(&pts).unwrap();
    let m = (0..10000)
        .map(|i| b.eval(10, Complex64::new((i as f64 * std::f64::consts::PI / 10000.0).cos(), 0.0)).norm())
        .fold(0.0, f64::max);
    assert!(m > 1.0, "{m}");
}

#[test]
fn pointwise_norm_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for domain in [Domain::Disc, Domain::Interval] {
        for k in [3usize, 10, 57, 200] {
            let b = basis(domain, k);
            for _ in 0..50 {
                let z = domain.point(rng.gen::<f64>() * std::f64::consts::TAU);
                let p = b.point_eval(z);
                assert!(p.lambda2 <= p.lambda * (1.0 + 1e-12));
                assert!(p.lambda <= (k as f64).sqrt() * p.lambda2 * (1.0 + 1e-12));
            }
        }
    }
}

#[test]
fn report_invariants() {
    let cfg = SearchConfig::default();
    for domain in [Domain::Disc, Domain::Interval] {
        for k in 1..=40 {
            let r = lebesgue_report(domain, k, &cfg).unwrap();
            assert!(r.is_conclusive());
            assert!(r.lebesgue >= r.lambda_at_next);
            assert!(r.lebesgue >= 1.0 && r.lebesgue2 >= 1.0 - 1e-12);
            assert!(r.lebesgue <= (k as f64).sqrt() * r.lebesgue2 * (1.0 + 1e-9));
        }
    }
}

#[test]
fn difference_norms_three_ways() {
    let cfg = SearchConfig::default();
    assert_eq!(diff_norm_disc(1).unwrap(), 2.0);
    assert!((diff_norm_disc(2).unwrap() - (1.0 + 2f64.sqrt())).abs() < 1e-14);
    for k in [1usize, 2, 3, 6, 9, 20] {
        let direct = diff_norm_direct(Domain::Disc, k, &cfg).unwrap();
        assert!(rel(direct.value, diff_norm_disc(k).unwrap()) < 1e-8, "disc k = {k}");
    }
    for k in 1..=64 {
        let d = diff_norm_interval(k, &cfg).unwrap();
        assert!(rel(d.via_beta, d.via_norm_diff) <= 1e-8, "k = {k}: {d:?}");
        if k <= 24 {
            let direct = diff_norm_direct(Domain::Interval, k, &cfg).unwrap();
            assert!(rel(direct.value, d.via_beta) < 1e-8, "k = {k}");
        }
    }
}

#[test]
fn beta_and_sup_w() {
    let cfg = SearchConfig::default();
    assert!((sup_w(2, &cfg).unwrap().value - 4.0).abs() < 1e-12);
    for n in 1..=8 {
        let d = diff_norm_interval(1 << n, &cfg).unwrap();
        assert!((d.beta - 0.25).abs() < 1e-12, "n = {n}");
    }
    for n in 0..=7u32 {
        let k = 1usize << (n + 1);
        let s = sup_w(k, &cfg).unwrap();
        assert!(s.value <= (n as f64 + 3.0).exp2() * (1.0 + 1e-9), "k = {k}");
    }
}

#[test]
fn gamma_table() {
    assert!((gamma(1, 1).unwrap() - 1.25).abs() <= 1e-12);
    assert!((gamma(2, 1).unwrap() - 1.125).abs() <= 1e-12);
    for m in 1..=10u32 {
        let s = (std::f64::consts::PI / (m as f64).exp2()).sin() * (m as f64).exp2();
        assert!((gamma(m, 1).unwrap() - (1.0 + 1.0 / (s * s))).abs() < 1e-12);
        for l in [1u64, 2, 3, (1 << (m - 1)) / 3 + 1, 1 << (m - 1)] {
            if l <= 1 << (m - 1) {
                assert!(gamma(m, l).unwrap() <= gamma_bound(l) * (1.0 + 1e-9), "m = {m} l = {l}");
            }
        }
    }
    assert!(gamma(11, 1 << 11).is_err());
}

#[test]
fn gamma_k_dominates_interval_lebesgue_function() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in [4u64, 6, 7, 11, 14, 23, 40] {
        let g = GammaK::new(k).unwrap();
        let b = basis(Domain::Interval, k as usize);
        for _ in 0..30 {
            let z = circle(&mut rng);
            let lhs = b.lebesgue(Complex64::new(z.re, 0.0));
            assert!(lhs <= (g.eval(z) + g.eval(z.conj())) * (1.0 + 1e-9), "k = {k}");
        }
    }
    assert!(GammaK::new(5).is_err());
}

#[test]
fn roots_of_unity_constants() {
    let cfg = SearchConfig::default();
    assert_eq!(roots_of_unity_constant(0, &cfg).unwrap().value, 1.0);
    assert!((roots_of_unity_constant(1, &cfg).unwrap().value - 2f64.sqrt()).abs() < 1e-9);
    for p in 2..=10 {
        let v = roots_of_unity_constant(p, &cfg).unwrap().value;
        assert!(v <= roots_of_unity_closed_bound(p), "p = {p}");
    }
}
