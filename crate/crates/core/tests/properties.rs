//! Property tests over random inputs: group arithmetic laws, parity and
//! cycle-type behaviour under conjugation, partition transposition, matrix
//! rank inequalities and polynomial gcd division.

use proptest::prelude::*;

use minfix_core::bounds::{partitions_of, transpose_partition};
use minfix_core::linalg::{MatrixFp, PolyFp};
use minfix_core::perm::Permutation;

fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just(degree).prop_perturb(move |d, mut rng| {
        let mut images: Vec<u32> = (0..d as u32).collect();
        for i in (1..d).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            images.swap(i, j);
        }
        Permutation::from_images(images).unwrap()
    })
}

proptest! {
    #[test]
    fn composition_is_associative(a in arb_perm(9), b in arb_perm(9), c in arb_perm(9)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
    }

    #[test]
    fn inverse_cancels(a in arb_perm(11)) {
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert!(a.inverse().then(&a).is_identity());
    }

    #[test]
    fn parity_is_multiplicative(a in arb_perm(10), b in arb_perm(10)) {
        prop_assert_eq!(a.then(&b).is_even(), a.is_even() == b.is_even());
    }

    #[test]
    fn conjugation_preserves_cycle_type(a in arb_perm(10), s in arb_perm(10)) {
        prop_assert_eq!(a.conjugate_by(&s).cycle_type(), a.cycle_type());
        prop_assert_eq!(a.conjugate_by(&s).fix_count(), a.fix_count());
    }

    #[test]
    fn inverse_has_same_cycle_type(a in arb_perm(12)) {
        prop_assert_eq!(a.inverse().cycle_type(), a.cycle_type());
    }

    #[test]
    fn transpose_is_an_involution(n in 1u64..=14) {
        for parts in partitions_of(n) {
            let double = transpose_partition(&transpose_partition(&parts));
            prop_assert_eq!(double, parts.clone());
            let t = transpose_partition(&parts);
            prop_assert_eq!(t.iter().sum::<u64>(), n);
        }
    }

    #[test]
    fn rank_of_product_bounded(
        a_entries in prop::collection::vec(0i64..7, 16),
        b_entries in prop::collection::vec(0i64..7, 16),
    ) {
        let a = MatrixFp::new(7, 4, 4, a_entries).unwrap();
        let b = MatrixFp::new(7, 4, 4, b_entries).unwrap();
        let r = a.mul(&b).rank();
        prop_assert!(r <= a.rank().min(b.rank()));
    }

    #[test]
    fn poly_gcd_divides_both(
        f_coeffs in prop::collection::vec(0u64..5, 1..8),
        g_coeffs in prop::collection::vec(0u64..5, 1..8),
    ) {
        let f = PolyFp::new(5, f_coeffs);
        let g = PolyFp::new(5, g_coeffs);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let d = f.gcd(&g);
        prop_assert!(!d.is_zero());
        prop_assert!(f.rem(&d).is_zero());
        prop_assert!(g.rem(&d).is_zero());
    }

    #[test]
    fn perm_from_to_cycles_roundtrip(a in arb_perm(10)) {
        let cycles = a.cycles();
        let rebuilt = Permutation::from_cycles(10, &cycles).unwrap();
        prop_assert_eq!(rebuilt, a);
    }
}
