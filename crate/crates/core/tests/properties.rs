use lejakit::angle::{bit_reversed_angle, DyadicAngle};
use lejakit::binary::{binary_stats, reverse_bits, sigma1, two_adic};
use lejakit::interp::LagrangeBasis;
use lejakit::interval::{angle_recursion_section, project_from_disc, projection_index};
use lejakit::Domain;
use num_complex::Complex64;
use proptest::prelude::*;

proptest! {
    #[test]
    fn binary_counts_partition_bits(k in 1u64..(1 << 40)) {
        let s = binary_stats(k).unwrap();
        prop_assert_eq!(s.sigma0 + s.sigma1, s.n + 1);
        prop_assert_eq!(k >> s.n, 1);
        prop_assert_eq!((k >> s.p) & 1, 1);
        prop_assert_eq!(sigma1(2 * k), sigma1(k));
        prop_assert_eq!(two_adic(2 * k), two_adic(k) + 1);
        prop_assert_eq!(sigma1(2 * k + 1), sigma1(k) + 1);
    }

    #[test]
    fn reverse_bits_is_involution(k in 0u64..(1 << 20), extra in 0u32..10) {
        let bits = 64 - k.leading_zeros() + extra;
        prop_assert_eq!(reverse_bits(reverse_bits(k, bits), bits), k);
    }

    #[test]
    fn square_of_leja_point_is_earlier_point(j in 0u64..(1 << 30)) {
        prop_assert_eq!(bit_reversed_angle(2 * j).double(), bit_reversed_angle(j));
        prop_assert_eq!(bit_reversed_angle(2 * j + 1).double(), bit_reversed_angle(j));
        prop_assert_eq!(bit_reversed_angle(2 * j + 1), bit_reversed_angle(2 * j).negate());
    }

    #[test]
    fn angle_arithmetic(num in 0u64..(1 << 30), d in 0u32..30, num2 in 0u64..(1 << 20), d2 in 0u32..20) {
        let a = DyadicAngle::new(num, d).unwrap();
        let b = DyadicAngle::new(num2, d2).unwrap();
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&a.conjugate()), DyadicAngle::ZERO);
        prop_assert_eq!(a.halve().unwrap().double(), a);
        prop_assert_eq!(a.negate().negate(), a);
        prop_assert_eq!(a.fold(), a.conjugate().fold());
        let (c, s) = a.cos_sin();
        prop_assert!((c - a.radians().cos()).abs() < 1e-15 * (1.0 + a.radians()));
        prop_assert!((s - a.radians().sin()).abs() < 1e-15 * (1.0 + a.radians()));
        prop_assert!((c * c + s * s - 1.0).abs() < 4.0 * f64::EPSILON);
    }

    #[test]
    fn routes_agree_on_random_lengths(k in 1usize..3000) {
        let a = project_from_disc(k).unwrap();
        let b = angle_recursion_section(k).unwrap();
        prop_assert_eq!(a.folded(), b.folded());
        prop_assert!(a.check_invariants());
    }

    #[test]
    fn projection_index_formula(n in 0u32..30, off in 1u64..(1 << 30)) {
        let k = (1u64 << n) + 1 + off % (1u64 << n);
        prop_assert_eq!(projection_index(k), (1u64 << n) + k - 1);
    }

    #[test]
    fn lebesgue_norm_chain(k in 1usize..200, t in 0.0f64..std::f64::consts::TAU, disc in any::<bool>()) {
        let domain = if disc { Domain::Disc } else { Domain::Interval };
        let (pts, _) = domain.section(k).unwrap();
        let b = LagrangeBasis::new(&pts).unwrap();
        let z = domain.point(t);
        let p = b.point_eval(z);
        prop_assert!(p.lambda >= 1.0 - 1e-12);
        prop_assert!(p.lambda2 <= p.lambda * (1.0 + 1e-12));
        prop_assert!(p.lambda <= (k as f64).sqrt() * p.lambda2 * (1.0 + 1e-12));
        let s: Complex64 = b.eval_all(z).iter().sum();
        prop_assert!((s - 1.0).norm() < 1e-10);
    }
}
