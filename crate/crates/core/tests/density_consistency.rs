//! Consistency checks on the prime-density experiment: per-prime histogram
//! against brute-force evaluation, stability of the estimate under doubling
//! the bound, and agreement between the two ends of the density argument
//! (Galois-side fix proportions vs the prime-side count).

use minfix_core::actions::sym_group;
use minfix_core::density::{density_scan, sieve_primes, IntPoly};
use minfix_core::linalg::reduce_int_poly;

fn poly(v: &[i64]) -> IntPoly {
    IntPoly::from_i64(v)
}

#[test]
fn histogram_matches_brute_force_small_primes() {
    let f = poly(&[-2, 0, 0, 1]);
    let report = density_scan(&f, 1000).unwrap();
    let mut brute = std::collections::BTreeMap::new();
    for p in sieve_primes(1000) {
        if report.excluded.contains(&p) {
            continue;
        }
        let fbar = reduce_int_poly(f.coeffs(), p).unwrap();
        let count = (0..p).filter(|&x| fbar.eval(x) == 0).count() as u32;
        *brute.entry(count).or_insert(0u64) += 1;
    }
    assert_eq!(report.histogram, brute);
}

#[test]
fn estimate_stable_under_doubling() {
    for coeffs in [
        &[-2i64, 0, 0, 1][..],
        &[-1, -1, 0, 0, 1][..],
        &[1, 0, 0, 0, 1][..],
    ] {
        let f = poly(coeffs);
        let half = density_scan(&f, 50_000).unwrap();
        let full = density_scan(&f, 100_000).unwrap();
        assert!(
            (half.density_estimate - full.density_estimate).abs() <= 0.01,
            "{}: {} vs {}",
            full.polynomial,
            half.density_estimate,
            full.density_estimate
        );
    }
}

#[test]
fn galois_side_matches_prime_side_for_cubic() {
    // S_3 on 3 points: the proportion of elements with exactly one fixed
    // point is 3/6; the x^3 - 2 prime count converges to the same value.
    let s3 = sym_group(3);
    let with_one_fix = s3
        .element_scan(100)
        .unwrap()
        .filter(|g| g.fix_count() == 1)
        .count() as f64;
    let total = s3.element_scan(100).unwrap().count() as f64;
    let galois_side = with_one_fix / total;
    assert_eq!(galois_side, 0.5);

    let report = density_scan(&poly(&[-2, 0, 0, 1]), 100_000).unwrap();
    assert!(
        (report.density_estimate - galois_side).abs() <= 0.02,
        "prime side {} vs Galois side {galois_side}",
        report.density_estimate
    );
}

#[test]
fn mean_root_count_near_one_for_irreducibles() {
    for coeffs in [
        &[-2i64, 0, 0, 1][..],
        &[-1, -1, 0, 0, 1][..],
        &[1, 0, 0, 0, 1][..],
        &[-1, 1, 0, 1][..],
    ] {
        let f = poly(coeffs);
        let report = density_scan(&f, 100_000).unwrap();
        assert!(
            (report.mean_root_count - 1.0).abs() <= 0.05,
            "{}: mean {}",
            report.polynomial,
            report.mean_root_count
        );
    }
}
