//! The built-in corpus: sporadic fixtures (M_11, M_12 on their natural
//! points), curated low-index subgroup fixtures of A_5, A_6 and A_7 (for the
//! transitive-action sweeps), and the census list of primitive actions
//! assembled from the construction families.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::actions::{
    affine_group, alt_group, coset_action, diagonal_action, ksubsets_action, natural_action,
    projective_action, sym_group, wreath_action, ActionKind, GroupAction, WreathMode,
};
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
    let v: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &v).unwrap()
}

/// Extend a permutation to a larger degree, fixing the new points.
pub fn extend_degree(p: &Permutation, degree: usize) -> Permutation {
    assert!(degree >= p.degree());
    let mut images: Vec<u32> = p.images().to_vec();
    images.extend(p.degree() as u32..degree as u32);
    Permutation::from_images(images).unwrap()
}

/// M_11 on 11 points: the 11-cycle and the standard quadruple of 4-cycles.
pub fn m11() -> GroupAction {
    let gens = vec![
        cyc(11, &[&(0..11).collect::<Vec<u32>>()]),
        cyc(11, &[&[2, 6, 10, 7], &[3, 9, 4, 5]]),
    ];
    let group = PermGroup::from_generators(11, gens).unwrap();
    assert_eq!(group.order(), &BigUint::from(7920u32), "M_11 order");
    GroupAction {
        group,
        labels: (1..=11).map(|i| i.to_string()).collect(),
        kind: ActionKind::Natural,
        name: "M_11 on 11 points".into(),
        kernel_order: BigUint::one(),
    }
}

/// M_12 on 12 points: M_11's generators extended plus an extra involution.
pub fn m12() -> GroupAction {
    let gens = vec![
        extend_degree(&cyc(11, &[&(0..11).collect::<Vec<u32>>()]), 12),
        extend_degree(&cyc(11, &[&[2, 6, 10, 7], &[3, 9, 4, 5]]), 12),
        cyc(
            12,
            &[&[0, 11], &[1, 10], &[2, 5], &[3, 7], &[4, 8], &[6, 9]],
        ),
    ];
    let group = PermGroup::from_generators(12, gens).unwrap();
    assert_eq!(group.order(), &BigUint::from(95040u32), "M_12 order");
    GroupAction {
        group,
        labels: (1..=12).map(|i| i.to_string()).collect(),
        kind: ActionKind::Natural,
        name: "M_12 on 12 points".into(),
        kernel_order: BigUint::one(),
    }
}

/// A named subgroup fixture, order-verified on construction.
pub struct SubgroupFixture {
    pub label: String,
    pub group: PermGroup,
}

fn fixture(label: &str, degree: usize, gens: Vec<Permutation>, order: u64) -> SubgroupFixture {
    let group = PermGroup::from_generators(degree, gens).unwrap();
    assert_eq!(
        group.order(),
        &BigUint::from(order),
        "fixture {label}: expected order {order}"
    );
    SubgroupFixture {
        label: label.into(),
        group,
    }
}

/// Representatives of every conjugacy class of subgroups of A_5 (all have
/// index ≤ 60).
pub fn a5_subgroup_fixtures() -> Vec<SubgroupFixture> {
    vec![
        fixture(
            "A_4",
            5,
            vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[1, 2, 3]])],
            12,
        ),
        fixture(
            "D_10",
            5,
            vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[1, 4], &[2, 3]])],
            10,
        ),
        fixture(
            "S_3",
            5,
            vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1], &[3, 4]])],
            6,
        ),
        fixture("C_5", 5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])], 5),
        fixture(
            "V_4",
            5,
            vec![cyc(5, &[&[0, 1], &[2, 3]]), cyc(5, &[&[0, 2], &[1, 3]])],
            4,
        ),
        fixture("C_3", 5, vec![cyc(5, &[&[0, 1, 2]])], 3),
        fixture("C_2", 5, vec![cyc(5, &[&[0, 1], &[2, 3]])], 2),
        fixture("1", 5, vec![], 1),
    ]
}

/// Representatives of the subgroup classes of A_6 with index ≤ 60
/// (order ≥ 6). The transitive copies of S_4 and A_4 are built as faithful
/// degree-6 coset images.
pub fn a6_subgroup_fixtures() -> Vec<SubgroupFixture> {
    let mut out = vec![
        fixture(
            "A_5 (point stabilizer)",
            6,
            vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[0, 1, 2, 3, 4]])],
            60,
        ),
        fixture(
            "3^2:4",
            6,
            vec![
                cyc(6, &[&[0, 1, 2]]),
                cyc(6, &[&[3, 4, 5]]),
                cyc(6, &[&[0, 3, 1, 4], &[2, 5]]),
            ],
            36,
        ),
        fixture(
            "S_4 (2-set stabilizer)",
            6,
            vec![
                cyc(6, &[&[0, 1, 2, 3], &[4, 5]]),
                cyc(6, &[&[0, 1], &[4, 5]]),
            ],
            24,
        ),
        fixture(
            "3^2:2",
            6,
            vec![
                cyc(6, &[&[0, 1, 2]]),
                cyc(6, &[&[3, 4, 5]]),
                cyc(6, &[&[0, 1], &[3, 4]]),
            ],
            18,
        ),
        fixture(
            "A_4 (2 fixed points)",
            6,
            vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[1, 2, 3]])],
            12,
        ),
        fixture(
            "D_10",
            6,
            vec![cyc(6, &[&[0, 1, 2, 3, 4]]), cyc(6, &[&[1, 4], &[2, 3]])],
            10,
        ),
        fixture(
            "3^2",
            6,
            vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[3, 4, 5]])],
            9,
        ),
        fixture(
            "D_8",
            6,
            vec![
                cyc(6, &[&[0, 1, 2, 3], &[4, 5]]),
                cyc(6, &[&[0, 2], &[4, 5]]),
            ],
            8,
        ),
        fixture(
            "S_3 (3-cycle type)",
            6,
            vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[0, 1], &[3, 4]])],
            6,
        ),
        fixture(
            "S_3 (3,3 type)",
            6,
            vec![
                cyc(6, &[&[0, 1, 2], &[3, 4, 5]]),
                cyc(6, &[&[1, 2], &[4, 5]]),
            ],
            6,
        ),
    ];
    // A_5 transitive on 6 points (the other class): PSL_2(5) on the projective line
    let psl25 = projective_action(2, 5, 1000).unwrap().action.group;
    assert_eq!(psl25.order(), &BigUint::from(60u32));
    out.push(SubgroupFixture {
        label: "A_5 (transitive, PSL_2(5))".into(),
        group: psl25,
    });
    // S_4 transitive on 6 points: S_4 on the cosets of a non-normal V_4
    let s4 = sym_group(4);
    let v4 = PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])]).unwrap();
    let img = coset_action(&s4, &v4, 100).unwrap().action.group;
    assert_eq!(img.order(), &BigUint::from(24u32));
    assert!(
        img.generators().iter().all(|g| g.is_even()),
        "image lies in A_6"
    );
    out.push(SubgroupFixture {
        label: "S_4 (transitive)".into(),
        group: img,
    });
    // A_4 transitive on 6 points: A_4 on the cosets of a C_2
    let a4 =
        PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])]).unwrap();
    let c2 = PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1], &[2, 3]])]).unwrap();
    let img = coset_action(&a4, &c2, 100).unwrap().action.group;
    assert_eq!(img.order(), &BigUint::from(12u32));
    assert!(img.generators().iter().all(|g| g.is_even()));
    out.push(SubgroupFixture {
        label: "A_4 (transitive)".into(),
        group: img,
    });
    out
}

/// Representatives of the subgroup classes of A_7 with index ≤ 60
/// (order ≥ 42).
pub fn a7_subgroup_fixtures() -> Vec<SubgroupFixture> {
    let mut out = vec![
        fixture(
            "A_6",
            7,
            vec![cyc(7, &[&[0, 1, 2]]), cyc(7, &[&[1, 2, 3, 4, 5]])],
            360,
        ),
        fixture(
            "S_5",
            7,
            vec![cyc(7, &[&[0, 1, 2, 3, 4]]), cyc(7, &[&[0, 1], &[5, 6]])],
            120,
        ),
        fixture(
            "(S_4 x S_3) ∩ A_7",
            7,
            vec![
                cyc(7, &[&[0, 1, 2]]),
                cyc(7, &[&[0, 1], &[4, 5]]),
                cyc(7, &[&[0, 1, 2, 3], &[4, 5]]),
                cyc(7, &[&[4, 5, 6]]),
            ],
            72,
        ),
        fixture(
            "A_5 (natural)",
            7,
            vec![cyc(7, &[&[0, 1, 2]]), cyc(7, &[&[0, 1, 2, 3, 4]])],
            60,
        ),
    ];
    // PSL_2(7) ≅ PSL_3(2) on 7 projective points, and its mirror class
    let l27 = projective_action(3, 2, 1000).unwrap().action.group;
    assert_eq!(l27.order(), &BigUint::from(168u32));
    let mirror_gens: Vec<Permutation> = l27
        .generators()
        .iter()
        .map(|g| g.conjugate_by(&cyc(7, &[&[0, 1]])))
        .collect();
    let l27_mirror = PermGroup::from_generators(7, mirror_gens).unwrap();
    assert_eq!(l27_mirror.order(), &BigUint::from(168u32));
    out.push(SubgroupFixture {
        label: "L_2(7) (class 1)".into(),
        group: l27,
    });
    out.push(SubgroupFixture {
        label: "L_2(7) (class 2)".into(),
        group: l27_mirror,
    });
    // A_5 transitive on 6 of the 7 points
    let psl25 = projective_action(2, 5, 1000).unwrap().action.group;
    let gens: Vec<Permutation> = psl25
        .generators()
        .iter()
        .map(|g| extend_degree(g, 7))
        .collect();
    let a5_deg6 = PermGroup::from_generators(7, gens).unwrap();
    assert_eq!(a5_deg6.order(), &BigUint::from(60u32));
    out.push(SubgroupFixture {
        label: "A_5 (transitive on 6)".into(),
        group: a5_deg6,
    });
    out
}

fn primes_up_to(n: u64) -> Vec<u64> {
    crate::density::sieve_primes(n)
}

/// The census corpus: every construction-family action with degree ≤
/// `max_degree` and group order ≤ `order_cap`, plus the coset and sporadic
/// fixtures. Primitivity filtering is the caller's job (the verifier reports
/// it per member).
pub fn census_corpus(max_degree: u64, order_cap: u64) -> Result<Vec<GroupAction>> {
    let mut out: Vec<GroupAction> = Vec::new();
    let order_ok = |o: &BigUint| o.to_u64().map_or(false, |v| v <= order_cap);

    // natural alternating actions
    for n in 5..=max_degree.min(24) as u32 {
        let a = alt_group(n);
        if order_ok(a.order()) {
            out.push(natural_action(n));
        }
    }
    // k-subset actions
    for n in 5..=24u32 {
        if !order_ok(alt_group(n).order()) {
            continue;
        }
        for k in 2..n {
            if 2 * k >= n {
                break;
            }
            match ksubsets_action(n, k, max_degree) {
                Ok(act) => out.push(act),
                Err(_) => break,
            }
        }
    }
    // affine groups AGL_d(p)
    for p in primes_up_to(max_degree) {
        let mut d = 1u32;
        loop {
            let deg = (p as u128).pow(d);
            if deg > max_degree as u128 {
                break;
            }
            if deg >= 3 {
                let aff = affine_group(d, p, max_degree)?;
                if order_ok(aff.action.group.order()) {
                    out.push(aff.action);
                }
            }
            d += 1;
        }
    }
    // product-action wreath groups
    for k in 5..=10u32 {
        for t in 2..=4u32 {
            let deg = (k as u128).pow(t);
            if deg > max_degree as u128 {
                continue;
            }
            if let Ok(act) = wreath_action(k, t, WreathMode::Product, max_degree) {
                if order_ok(act.group.order()) {
                    out.push(act);
                }
            }
        }
    }
    // diagonal actions of small simple groups
    for s in [alt_group(5), alt_group(6)] {
        let deg = s.order().to_u64().unwrap_or(u64::MAX);
        let sq = s.order() * s.order();
        if deg <= max_degree && order_ok(&sq) {
            out.push(diagonal_action(&s, order_cap)?.action);
        }
    }
    // projective actions PSL_d(p)
    for p in primes_up_to(100) {
        for d in 2..=6u32 {
            let deg = ((p as u128).pow(d) - 1) / (p as u128 - 1);
            if deg > max_degree as u128 {
                break;
            }
            let proj = projective_action(d, p, max_degree)?;
            if order_ok(proj.action.group.order()) {
                out.push(proj.action);
            }
        }
    }
    // coset fixtures
    if max_degree >= 15 {
        let g = alt_group(8);
        let h = affine_group(3, 2, 1000)?.even_group;
        let mut act = coset_action(&g, &h, max_degree)?.action;
        act.name = "A_8 / (AGL_3(2) ∩ A_8)".into();
        out.push(act);

        let g = alt_group(7);
        let l27 = projective_action(3, 2, 1000)?.action.group;
        let mut act = coset_action(&g, &l27, max_degree)?.action;
        act.name = "A_7 / L_2(7)".into();
        out.push(act);
    }
    if max_degree >= 6 {
        let g = alt_group(6);
        let a5t = projective_action(2, 5, 1000)?.action.group;
        let mut act = coset_action(&g, &a5t, max_degree)?.action;
        act.name = "A_6 / PSL_2(5)".into();
        out.push(act);
    }
    // sporadic fixtures
    if max_degree >= 11 {
        out.push(m11());
    }
    if max_degree >= 12 {
        out.push(m12());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m11_order_and_exhaustive_count() {
        let act = m11();
        assert_eq!(act.group.order(), &BigUint::from(7920u32));
        let count = act.group.element_scan(10_000).unwrap().count();
        assert_eq!(count, 7920);
    }

    #[test]
    fn m11_order5_centralizer() {
        let act = m11();
        // an element of order 5
        let g = act
            .group
            .element_scan(10_000)
            .unwrap()
            .find(|g| g.order() == BigUint::from(5u32))
            .unwrap();
        let data = act.group.class_and_centralizer(&g, 100_000).unwrap();
        assert_eq!(data.centralizer_order, BigUint::from(5u32));
    }

    #[test]
    fn m12_order() {
        let act = m12();
        assert_eq!(act.group.order(), &BigUint::from(95040u32));
    }

    #[test]
    fn subgroup_fixtures_are_subgroups() {
        let a5 = alt_group(5);
        for f in a5_subgroup_fixtures() {
            assert!(a5.contains_all(f.group.generators()), "{} ≤ A_5", f.label);
        }
        let a6 = alt_group(6);
        for f in a6_subgroup_fixtures() {
            assert!(a6.contains_all(f.group.generators()), "{} ≤ A_6", f.label);
        }
        let a7 = alt_group(7);
        for f in a7_subgroup_fixtures() {
            assert!(a7.contains_all(f.group.generators()), "{} ≤ A_7", f.label);
        }
    }

    #[test]
    fn census_corpus_small() {
        let corpus = census_corpus(30, 1_000_000).unwrap();
        assert!(corpus.len() > 10);
        for act in &corpus {
            assert!(act.degree() as u64 <= 30, "{}", act.name);
        }
        // the key members are present
        let names: Vec<&str> = corpus.iter().map(|a| a.name.as_str()).collect();
        assert!(names.iter().any(|n| n.contains("AGL_3(2)")));
        assert!(names.iter().any(|n| n.contains("M_11")));
        assert!(names.iter().any(|n| n.contains("A_8 / ")));
    }
}
