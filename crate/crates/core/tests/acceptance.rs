//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured values. Tolerances and thresholds are pinned in the asserts.

use num_bigint::BigUint;
use num_traits::One;

use minfix_core::actions::{affine_group, alt_group, coset_fix_count, diagonal_action, ActionKind};
use minfix_core::bounds::{unipotent_bound_check, Rat, UnipotentBound};
use minfix_core::corpus::{census_corpus, m11};
use minfix_core::density::{density_scan, IntPoly};
use minfix_core::formulas::{fix_by_formula, fusion_scan};
use minfix_core::group::PermGroup;
use minfix_core::linalg::{fixed_space_dim, spin_irreducible, MatrixFp};
use minfix_core::perm::Permutation;
use minfix_core::rng::SplitMix64;
use minfix_core::sweeps::{classical_sweep, optimization_sweep, ppd_sweep, unipotent_sweep};
use minfix_core::verifier::{
    min_fix_profile, neumann_witness, primitivity_report, total_fix, SearchMode,
};
use minfix_core::witnesses::witness_affine;

const ELEMENT_CAP: u64 = 10_000_000;
const POINT_CAP: u64 = 100_000;

/// Criterion 1: fix of the Singer 7-cycle on A_8/(AGL_3(2) ∩ A_8) equals
/// φ(7)/6 = 1 by the fusion formula and by direct counting on 15 cosets.
#[test]
fn criterion_01_affine_formula_p2() {
    let ambient = alt_group(8);
    let aff = affine_group(3, 2, POINT_CAP).unwrap();
    let spec = witness_affine(3, 2, POINT_CAP).unwrap();
    let singer = spec.element.as_ref().unwrap();
    assert_eq!(
        spec.predicted_fix.as_ref().unwrap(),
        &BigUint::one(),
        "phi(7)/6 = 1"
    );

    let fd = fusion_scan(&ambient, &aff.even_group, singer, ELEMENT_CAP, ELEMENT_CAP).unwrap();
    let formula = fix_by_formula(&fd).unwrap();
    let direct = coset_fix_count(&ambient, &aff.even_group, singer, POINT_CAP).unwrap();
    assert_eq!(formula, BigUint::one());
    assert_eq!(direct, 1);
    println!("criterion 1 PASS: A_8/(AGL_3(2)∩A_8) Singer fix = 1 by formula and by direct count on 15 cosets");
}

/// Criterion 2: fix of the order-4 Singer-square on A_9/(AGL_2(3) ∩ A_9)
/// equals φ(4)·8/4 = 4 by both paths, the direct one on 840 cosets.
#[test]
fn criterion_02_affine_formula_p_odd() {
    let ambient = alt_group(9);
    let aff = affine_group(2, 3, POINT_CAP).unwrap();
    let spec = witness_affine(2, 3, POINT_CAP).unwrap();
    let g = spec.element.as_ref().unwrap();
    assert_eq!(g.order(), BigUint::from(4u32));
    assert_eq!(
        spec.predicted_fix.as_ref().unwrap(),
        &BigUint::from(4u32),
        "phi(4)*8/4 = 4"
    );

    let fd = fusion_scan(&ambient, &aff.even_group, g, ELEMENT_CAP, ELEMENT_CAP).unwrap();
    let formula = fix_by_formula(&fd).unwrap();
    let index = ambient.order() / aff.even_group.order();
    assert_eq!(index, BigUint::from(840u32));
    let direct = coset_fix_count(&ambient, &aff.even_group, g, POINT_CAP).unwrap();
    assert_eq!(formula, BigUint::from(4u32));
    assert_eq!(direct, 4);
    println!("criterion 2 PASS: A_9/(AGL_2(3)∩A_9) Singer-square fix = 4 by formula and on the degree-840 action");
}

/// Criterion 3: the two-sided action of A_5 × A_5 on the 60 elements of A_5
/// has minimum positive fix exactly 3, strict witness (27 < 60), exhaustively
/// over all 3600 elements.
#[test]
fn criterion_03_diagonal_sharpness() {
    let d = diagonal_action(&alt_group(5), ELEMENT_CAP).unwrap();
    let profile = min_fix_profile(&d.action, ELEMENT_CAP).unwrap();
    assert_eq!(profile.nonidentity_count, 3599);
    assert_eq!(
        profile.min_positive_fix,
        Some(3),
        "min positive fix = q - 1 = 3"
    );
    let cert = neumann_witness(&d.action, SearchMode::Exhaustive, ELEMENT_CAP).unwrap();
    assert_eq!(cert.fix, 3);
    assert!(cert.strict, "27 < 60");
    println!("criterion 3 PASS: diagonal A_5 degree 60, min positive fix 3, 27 < 60 strict (3600 elements scanned)");
}

/// Criterion 4: M_11 on 11 points has an order-5 witness with fix 1, found by
/// exhaustive scan.
#[test]
fn criterion_04_m11_fixture() {
    let act = m11();
    let cert = neumann_witness(&act, SearchMode::Exhaustive, ELEMENT_CAP).unwrap();
    assert_eq!(cert.fix, 1);
    let five = BigUint::from(5u32);
    let order5_with_fix1 = act
        .group
        .element_scan(ELEMENT_CAP)
        .unwrap()
        .any(|g| g.order() == five && g.fix_count() == 1);
    assert!(order5_with_fix1, "an order-5 element with fix 1 exists");
    println!(
        "criterion 4 PASS: M_11 exhaustive scan finds fix 1; an order-5 element with fix 1 exists"
    );
}

/// Criterion 5: every primitive non-regular corpus action with degree ≤ 100
/// and order ≤ 10^7 yields a certificate with fix³ ≤ n, strictly for every
/// non-affine member.
#[test]
fn criterion_05_census_sweep() {
    let corpus = census_corpus(100, ELEMENT_CAP).unwrap();
    let mut verified = 0u32;
    for action in &corpus {
        let prim = primitivity_report(action);
        if !prim.primitive || prim.regular {
            continue;
        }
        let cert = neumann_witness(action, SearchMode::Exhaustive, ELEMENT_CAP)
            .unwrap_or_else(|e| panic!("{}: {e}", action.name));
        assert!(cert.weak, "{}: fix³ ≤ n must hold", action.name);
        if action.kind != ActionKind::Affine {
            assert!(
                cert.strict,
                "{}: fix³ < n must hold off the affine family",
                action.name
            );
        }
        verified += 1;
    }
    assert!(
        verified >= 40,
        "expected a substantial corpus, got {verified}"
    );
    println!("criterion 5 PASS: {verified} primitive non-regular corpus members certified, zero failures");
}

/// Criterion 6: fix-by-formula equals the direct coset count on at least 20
/// (G, H, g) triples with index ≤ 10^4.
#[test]
fn criterion_06_formula_oracle() {
    let mut triples = 0u32;
    let mut run_pair = |g_ambient: &PermGroup, h: &PermGroup, label: &str| {
        let classes = h.conjugacy_classes(ELEMENT_CAP).unwrap();
        for c in classes {
            let g = &c.representative;
            let fd = fusion_scan(g_ambient, h, g, ELEMENT_CAP, ELEMENT_CAP).unwrap();
            let formula = fix_by_formula(&fd).unwrap();
            let direct = coset_fix_count(g_ambient, h, g, 10_000).unwrap();
            assert_eq!(formula, BigUint::from(direct), "{label}: element {g}");
            triples += 1;
        }
    };
    let cyc = |deg: usize, cycles: &[&[u32]]| {
        Permutation::from_cycles(deg, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>())
            .unwrap()
    };

    let a5 = alt_group(5);
    let a4 =
        PermGroup::from_generators(5, vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[1, 2, 3]])]).unwrap();
    run_pair(&a5, &a4, "A_5 / A_4");
    let d10 = PermGroup::from_generators(
        5,
        vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[1, 4], &[2, 3]])],
    )
    .unwrap();
    run_pair(&a5, &d10, "A_5 / D_10");

    let s4 = minfix_core::actions::sym_group(4);
    let c4 = PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
    run_pair(&s4, &c4, "S_4 / C_4");
    let d8 =
        PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])]).unwrap();
    run_pair(&s4, &d8, "S_4 / D_8");

    let a6 = alt_group(6);
    let nine_four = PermGroup::from_generators(
        6,
        vec![
            cyc(6, &[&[0, 1, 2]]),
            cyc(6, &[&[3, 4, 5]]),
            cyc(6, &[&[0, 3, 1, 4], &[2, 5]]),
        ],
    )
    .unwrap();
    run_pair(&a6, &nine_four, "A_6 / 3^2:4");

    let a8 = alt_group(8);
    let agl32 = affine_group(3, 2, POINT_CAP).unwrap().even_group;
    run_pair(&a8, &agl32, "A_8 / AGL_3(2)");

    assert!(triples >= 20, "need at least 20 triples, got {triples}");
    println!("criterion 6 PASS: formula = direct coset count on {triples} (G,H,g) triples");
}

/// Criterion 7: all four optimization variants dominate the integer brute
/// force on the full n ≤ 12 grid, with equality at integral optima.
#[test]
fn criterion_07_optimization_lemmas() {
    let s = optimization_sweep();
    assert!(s.passed(), "failures: {:?}", s.failures);
    println!(
        "criterion 7 PASS: {} optimization comparisons, zero violations",
        s.checks
    );
}

/// Criterion 8: the transpose-partition bound holds for every partition of
/// every n ≤ 12 and every feasible (B, C), with equality at λ=(3,3,1), B=3,
/// C=1 (both sides 17).
#[test]
fn criterion_08_unipotent_bound() {
    let s = unipotent_sweep();
    assert!(s.passed(), "failures: {:?}", s.failures);
    match unipotent_bound_check(&[3, 3, 1], 3, 1).unwrap() {
        UnipotentBound::Holds { dim, bound, slack } => {
            assert_eq!(dim, 17);
            assert_eq!(bound, Rat::from_integer(17));
            assert_eq!(slack, Rat::from_integer(0), "equality witnessed");
        }
        other => panic!("expected equality case, got {other:?}"),
    }
    println!(
        "criterion 8 PASS: {} (B,C,partition) checks, equality at (3,3,1), B=3, C=1",
        s.checks
    );
}

/// Criterion 9: Φ* exceptional exactly on (6,2) and (2, q+1 a 2-power) over
/// the 2..20 grid; primes ≡ 1 mod m; Φ* divides Φ_m(q).
#[test]
fn criterion_09_zsigmondy() {
    let s = ppd_sweep();
    assert!(s.passed(), "failures: {:?}", s.failures);
    println!(
        "criterion 9 PASS: {} ppd grid checks, exception set exact",
        s.checks
    );
}

/// Criterion 10: the classical order sandwich over ranks 2..8 and
/// q ∈ {2,3,4,5,7,8,9}, all families.
#[test]
fn criterion_10_classical_sandwich() {
    let s = classical_sweep();
    assert!(s.passed(), "failures: {:?}", s.failures);
    println!(
        "criterion 10 PASS: {} sandwich checks across 8 families",
        s.checks
    );
}

/// Criterion 11: density targets at bound 10^5: x³-2 within 0.02 of 1/2,
/// x⁴-x-1 within 0.02 of 1/3, x⁴+1 exactly 0; mean root count within 0.05 of
/// 1 for each irreducible input.
#[test]
fn criterion_11_corollary_density() {
    let bound = 100_000;
    let cases: [(&[i64], f64, f64); 3] = [
        (&[-2, 0, 0, 1], 0.5, 0.02),
        (&[-1, -1, 0, 0, 1], 1.0 / 3.0, 0.02),
        (&[1, 0, 0, 0, 1], 0.0, 0.0),
    ];
    for (coeffs, target, tol) in cases {
        let f = IntPoly::from_i64(coeffs);
        let r = density_scan(&f, bound).unwrap();
        if tol == 0.0 {
            assert_eq!(
                r.qualifying, 0,
                "{}: density must be exactly 0",
                r.polynomial
            );
        } else {
            assert!(
                (r.density_estimate - target).abs() <= tol,
                "{}: density {} not within {tol} of {target}",
                r.polynomial,
                r.density_estimate
            );
        }
        assert!(
            (r.mean_root_count - 1.0).abs() <= 0.05,
            "{}: mean root count {} not within 0.05 of 1",
            r.polynomial,
            r.mean_root_count
        );
    }
    println!("criterion 11 PASS: densities 1/2, 1/3, 0 hit within tolerance; mean root counts within 0.05 of 1");
}

/// Criterion 12: the orbit-count identity Σ fix = |G| on every transitive
/// corpus action, and Scott's bound on 100 random irreducible matrix pairs at
/// dim ≤ 8, p ≤ 7.
#[test]
fn criterion_12_burnside_and_scott() {
    // orbit-count identity
    let corpus = census_corpus(100, ELEMENT_CAP).unwrap();
    let mut burnside = 0u32;
    for action in &corpus {
        let prim = primitivity_report(action);
        if !prim.transitive {
            continue;
        }
        let total = total_fix(action, ELEMENT_CAP).unwrap();
        assert_eq!(&total, action.group.order(), "{}", action.name);
        burnside += 1;
    }

    // Scott's bound on random irreducible pairs
    let shapes: Vec<(u64, usize)> = {
        let mut v = Vec::new();
        for p in [2u64, 3, 5, 7] {
            for dim in 2..=8usize {
                if (p as u128).pow(dim as u32) <= 100_000 {
                    v.push((p, dim));
                }
            }
        }
        v
    };
    let mut rng = SplitMix64::new(0x5c077);
    let mut random_invertible = |p: u64, dim: usize| -> MatrixFp {
        loop {
            let entries: Vec<i64> = (0..dim * dim).map(|_| rng.below(p) as i64).collect();
            let m = MatrixFp::new(p, dim, dim, entries).unwrap();
            if m.is_invertible() {
                return m;
            }
        }
    };
    let mut pairs = 0u32;
    let mut attempts = 0u32;
    while pairs < 100 {
        attempts += 1;
        assert!(attempts < 10_000, "irreducible pairs should be abundant");
        let (p, dim) = shapes[(attempts as usize * 7919) % shapes.len()];
        let x = random_invertible(p, dim);
        let y = random_invertible(p, dim);
        if !spin_irreducible(&[x.clone(), y.clone()], 100_000).unwrap() {
            continue;
        }
        let xy = x.mul(&y);
        let min_dim = [&x, &y, &xy]
            .iter()
            .map(|m| fixed_space_dim(m).unwrap())
            .min()
            .unwrap();
        assert!(
            3 * min_dim <= dim,
            "Scott bound violated at p={p}, dim={dim}: min fixed-space dim {min_dim}"
        );
        pairs += 1;
    }
    println!("criterion 12 PASS: Σ fix = |G| on {burnside} transitive actions; Scott bound on {pairs} irreducible pairs");
}
