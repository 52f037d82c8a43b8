//! Exhaustive subgroup-lattice enumeration for A_5 and A_6 by join closure
//! over cyclic subgroups, used to certify that the curated low-index fixture
//! lists are complete: one fixture per conjugacy class of subgroups in the
//! stated index range. (A_7's list is checked for membership and order only;
//! its full lattice is beyond a quick test.)

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::ToPrimitive;

use minfix_core::actions::alt_group;
use minfix_core::corpus::{a5_subgroup_fixtures, a6_subgroup_fixtures};
use minfix_core::group::PermGroup;
use minfix_core::perm::Permutation;

/// Canonical key of a subgroup: the sorted list of its elements' image rows.
fn subgroup_key(g: &PermGroup) -> Vec<Vec<u32>> {
    let mut elements: Vec<Vec<u32>> = g
        .element_scan(100_000)
        .unwrap()
        .map(|p| p.images().to_vec())
        .collect();
    elements.sort();
    elements
}

/// Every subgroup, keyed canonically, mapped to a small generating set.
fn all_subgroups(g: &PermGroup) -> HashMap<Vec<Vec<u32>>, Vec<Permutation>> {
    let degree = g.degree();
    let elements: Vec<Permutation> = g.element_scan(100_000).unwrap().collect();
    // distinct cyclic subgroups
    let mut cyclics: HashMap<Vec<Vec<u32>>, Permutation> = HashMap::new();
    for x in &elements {
        let c = PermGroup::from_generators(degree, vec![x.clone()]).unwrap();
        cyclics.entry(subgroup_key(&c)).or_insert_with(|| x.clone());
    }
    let mut known: HashMap<Vec<Vec<u32>>, Vec<Permutation>> = HashMap::new();
    let mut queue: VecDeque<(Vec<Vec<u32>>, Vec<Permutation>)> = VecDeque::new();
    for (key, x) in &cyclics {
        if known.insert(key.clone(), vec![x.clone()]).is_none() {
            queue.push_back((key.clone(), vec![x.clone()]));
        }
    }
    while let Some((_, gens)) = queue.pop_front() {
        for x in cyclics.values() {
            let mut joined = gens.clone();
            joined.push(x.clone());
            let j = PermGroup::from_generators(degree, joined.clone()).unwrap();
            let key = subgroup_key(&j);
            if !known.contains_key(&key) {
                known.insert(key.clone(), joined.clone());
                queue.push_back((key, joined));
            }
        }
    }
    known
}

/// Conjugacy classes of subgroups: orbits of the key set under conjugation by
/// the ambient group's generators.
fn subgroup_classes(
    g: &PermGroup,
    subgroups: &HashMap<Vec<Vec<u32>>, Vec<Permutation>>,
) -> Vec<Vec<Vec<Vec<u32>>>> {
    let degree = g.degree();
    let mut seen: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut classes = Vec::new();
    for key in subgroups.keys() {
        if seen.contains(key) {
            continue;
        }
        let mut orbit = vec![key.clone()];
        seen.insert(key.clone());
        let mut head = 0;
        while head < orbit.len() {
            let current = orbit[head].clone();
            head += 1;
            for s in g.generators() {
                let conj: Vec<Vec<u32>> = {
                    let mut c: Vec<Vec<u32>> = current
                        .iter()
                        .map(|imgs| {
                            Permutation::from_images(imgs.clone())
                                .unwrap()
                                .conjugate_by(s)
                                .images()
                                .to_vec()
                        })
                        .collect();
                    c.sort();
                    c
                };
                let _ = degree;
                if seen.insert(conj.clone()) {
                    orbit.push(conj);
                }
            }
        }
        classes.push(orbit);
    }
    classes
}

#[test]
fn a5_fixture_list_is_the_full_lattice() {
    let a5 = alt_group(5);
    let subgroups = all_subgroups(&a5);
    assert_eq!(subgroups.len(), 59, "A_5 has 59 subgroups");
    let classes = subgroup_classes(&a5, &subgroups);
    assert_eq!(classes.len(), 9, "A_5 has 9 conjugacy classes of subgroups");
    // drop the whole group; everything else must be hit by exactly one fixture
    let mut class_orders: Vec<u64> = classes
        .iter()
        .map(|c| c[0].len() as u64)
        .filter(|&o| o < 60)
        .collect();
    class_orders.sort_unstable();
    let mut fixture_orders: Vec<u64> = a5_subgroup_fixtures()
        .iter()
        .map(|f| f.group.order().to_u64().unwrap())
        .collect();
    fixture_orders.sort_unstable();
    assert_eq!(class_orders, fixture_orders);
    // each fixture is one of the enumerated subgroups
    for f in a5_subgroup_fixtures() {
        assert!(
            subgroups.contains_key(&subgroup_key(&f.group)),
            "{}",
            f.label
        );
    }
}

#[test]
fn a6_fixture_list_covers_every_low_index_class() {
    let a6 = alt_group(6);
    let subgroups = all_subgroups(&a6);
    assert_eq!(subgroups.len(), 501, "A_6 has 501 subgroups");
    let classes = subgroup_classes(&a6, &subgroups);
    assert_eq!(
        classes.len(),
        22,
        "A_6 has 22 conjugacy classes of subgroups"
    );
    // classes of order >= 6 (index <= 60), excluding A_6 itself
    let mut class_orders: Vec<u64> = classes
        .iter()
        .map(|c| c[0].len() as u64)
        .filter(|&o| (6..360).contains(&o))
        .collect();
    class_orders.sort_unstable();
    let mut fixture_orders: Vec<u64> = a6_subgroup_fixtures()
        .iter()
        .map(|f| f.group.order().to_u64().unwrap())
        .collect();
    fixture_orders.sort_unstable();
    assert_eq!(
        class_orders, fixture_orders,
        "one fixture per class, orders matching"
    );
    // fixtures are pairwise non-conjugate and genuinely in the lattice
    let mut hit_classes = HashSet::new();
    for f in a6_subgroup_fixtures() {
        let key = subgroup_key(&f.group);
        let class_idx = classes
            .iter()
            .position(|orbit| orbit.contains(&key))
            .unwrap_or_else(|| panic!("{} not found in the lattice", f.label));
        assert!(
            hit_classes.insert(class_idx),
            "{} duplicates a class",
            f.label
        );
    }
}
