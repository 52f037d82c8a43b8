//! Primitivity and regularity analysis, and the fixed-point witness search:
//! for a faithful transitive action of degree n, find a nonidentity element g
//! with 1 ≤ fix(g) and fix(g)³ ≤ n, and certify it. The cube comparison is
//! always done in integers.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigUint;

use crate::actions::GroupAction;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{orbit, Permutation};

#[derive(Clone, Debug)]
pub struct PrimitivityReport {
    pub transitive: bool,
    pub regular: bool,
    /// minimal nontrivial block systems, one partition per line, blocks sorted
    pub block_systems: Vec<Vec<Vec<u32>>>,
    pub primitive: bool,
}

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: u32, b: u32) -> u32 {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return ra;
        }
        let (keep, merge) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[merge as usize] = keep;
        keep
    }
}

/// Minimal block system whose block contains {alpha, beta}: union-find
/// refinement under the generators.
pub fn minimal_block_partition(
    gens: &[Permutation],
    degree: usize,
    alpha: u32,
    beta: u32,
) -> Vec<Vec<u32>> {
    let mut dsu = Dsu::new(degree);
    dsu.union(alpha, beta);
    let mut queue = VecDeque::new();
    queue.push_back((alpha, beta));
    while let Some((u, v)) = queue.pop_front() {
        for g in gens {
            let gu = g.apply(u);
            let gv = g.apply(v);
            if dsu.find(gu) != dsu.find(gv) {
                dsu.union(gu, gv);
                queue.push_back((gu, gv));
            }
        }
    }
    let mut blocks: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for x in 0..degree as u32 {
        blocks.entry(dsu.find(x)).or_default().push(x);
    }
    blocks.into_values().collect()
}

pub fn primitivity_report(action: &GroupAction) -> PrimitivityReport {
    let group = &action.group;
    let degree = group.degree();
    let gens = group.generators();
    let transitive = degree <= 1
        || orbit(gens, 0, degree)
            .map(|o| o.len() == degree)
            .unwrap_or(false);
    let regular = transitive && group.order() == &BigUint::from(degree);
    let mut block_systems: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut primitive = transitive && degree > 1;
    if transitive && degree > 1 {
        let mut seen: HashSet<Vec<Vec<u32>>> = HashSet::new();
        for beta in 1..degree as u32 {
            let partition = minimal_block_partition(gens, degree, 0, beta);
            if partition.len() > 1 && partition.len() < degree {
                primitive = false;
                if seen.insert(partition.clone()) {
                    block_systems.push(partition);
                }
            }
        }
    }
    PrimitivityReport {
        transitive,
        regular,
        block_systems,
        primitive,
    }
}

/// Brute-force block test for small degrees: every candidate subset
/// containing point 0 whose size properly divides the degree, closed under
/// the group generators into a partition.
pub fn brute_force_block_systems(group: &PermGroup) -> Vec<Vec<Vec<u32>>> {
    let n = group.degree();
    assert!(n <= 16, "brute-force block search is for tiny degrees");
    let gens = group.generators();
    let mut found = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size < 2 || size >= n || n % size != 0 {
            continue;
        }
        let block: Vec<u32> = (0..n as u32).filter(|&i| mask >> i & 1 == 1).collect();
        // close under generators; all images must be equal-or-disjoint
        let mut images: Vec<Vec<u32>> = vec![block.clone()];
        let mut queue = vec![block.clone()];
        let mut ok = true;
        'closure: while let Some(b) = queue.pop() {
            for g in gens {
                let mut img: Vec<u32> = b.iter().map(|&x| g.apply(x)).collect();
                img.sort_unstable();
                let mut is_new = true;
                for existing in &images {
                    if existing == &img {
                        is_new = false;
                        break;
                    }
                    if existing.iter().any(|x| img.contains(x)) {
                        ok = false;
                        break 'closure;
                    }
                }
                if is_new {
                    images.push(img.clone());
                    queue.push(img);
                }
            }
        }
        if ok && images.len() * size == n {
            images.sort();
            if !found.contains(&images) {
                found.push(images);
            }
        }
    }
    found
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    ClassReps,
    Random { seed: u64, samples: u64 },
}

impl SearchMode {
    pub fn label(&self) -> String {
        match self {
            SearchMode::Exhaustive => "exhaustive".into(),
            SearchMode::ClassReps => "class_reps".into(),
            SearchMode::Random { seed, .. } => format!("random(seed={seed})"),
        }
    }
}

/// A concrete witness for the fixed-point bound on one action: a nonidentity
/// element with fix ≥ 1, together with the integer comparison fix³ vs n.
#[derive(Clone, Debug)]
pub struct WitnessCertificate {
    pub element: Permutation,
    pub fix: u32,
    pub degree: usize,
    /// fix³ < n
    pub strict: bool,
    /// fix³ ≤ n (the target bound)
    pub weak: bool,
    pub search_mode: String,
    pub group_id: String,
    /// order of the kernel when the action was replaced by its faithful image
    pub kernel_order: BigUint,
}

fn certificate(
    action: &GroupAction,
    element: Permutation,
    fix: u32,
    mode: &SearchMode,
) -> WitnessCertificate {
    let n = action.degree() as u128;
    let f = fix as u128;
    WitnessCertificate {
        element,
        fix,
        degree: action.degree(),
        strict: f * f * f < n,
        weak: f * f * f <= n,
        search_mode: mode.label(),
        group_id: action.name.clone(),
        kernel_order: action.kernel_order.clone(),
    }
}

/// Minimum positive fix over nonidentity elements, with the witness chosen as
/// the least serialized element attaining it. `None` when every nonidentity
/// element is fixed-point-free or the group is trivial.
fn min_positive_fix_exhaustive(group: &PermGroup, cap: u64) -> Result<Option<(Permutation, u32)>> {
    let mut best: Option<(u32, Permutation)> = None;
    for g in group.element_scan(cap)? {
        if g.is_identity() {
            continue;
        }
        let f = g.fix_count();
        if f == 0 {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bf, bg)) => f < *bf || (f == *bf && &g < bg),
        };
        if better {
            best = Some((f, g));
        }
    }
    Ok(best.map(|(f, g)| (g, f)))
}

fn min_positive_fix_class_reps(group: &PermGroup, cap: u64) -> Result<Option<(Permutation, u32)>> {
    let mut best: Option<(u32, Permutation)> = None;
    for class in group.conjugacy_classes(cap)? {
        let g = class.representative;
        if g.is_identity() {
            continue;
        }
        let f = g.fix_count();
        if f == 0 {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bf, bg)) => f < *bf || (f == *bf && &g < bg),
        };
        if better {
            best = Some((f, g));
        }
    }
    Ok(best.map(|(f, g)| (g, f)))
}

/// Witness search. Preconditions (primitive, non-regular) are the caller's
/// business; the hard "THEOREM VIOLATION" error fires only when a complete
/// (exhaustive or class-representative) scan proves no witness exists.
pub fn neumann_witness(
    action: &GroupAction,
    mode: SearchMode,
    cap: u64,
) -> Result<WitnessCertificate> {
    let group = &action.group;
    let n = action.degree() as u128;
    let found = match mode {
        SearchMode::Exhaustive => min_positive_fix_exhaustive(group, cap)?,
        SearchMode::ClassReps => min_positive_fix_class_reps(group, cap)?,
        SearchMode::Random { seed, samples } => {
            let mut sampler = group.random_sampler(seed);
            let mut best: Option<(u32, Permutation)> = None;
            for _ in 0..samples {
                let g = sampler.next_element();
                if g.is_identity() {
                    continue;
                }
                let f = g.fix_count();
                if f == 0 {
                    continue;
                }
                let better = match &best {
                    None => true,
                    Some((bf, bg)) => f < *bf || (f == *bf && &g < bg),
                };
                if better {
                    best = Some((f, g));
                }
            }
            match best {
                Some((f, g)) if (f as u128).pow(3) <= n => Some((g, f)),
                // random sampling is best-effort; fall back to class reps
                _ => min_positive_fix_class_reps(group, cap)?,
            }
        }
    };
    match found {
        Some((g, f)) if (f as u128).pow(3) <= n => Ok(certificate(action, g, f, &mode)),
        Some((g, f)) => Err(Error::TheoremViolation(format!(
            "no element with fix³ ≤ n in '{}': minimal positive fix {f} on degree {} \
             (witness of minimality: {g}); generators: {}",
            action.name,
            action.degree(),
            group
                .generators()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ; ")
        ))),
        None => Err(Error::TheoremViolation(format!(
            "every nonidentity element of '{}' is fixed-point-free (degree {}, order {})",
            action.name,
            action.degree(),
            group.order()
        ))),
    }
}

/// Sharded exhaustive witness search over `jobs` worker threads. Each shard
/// takes every jobs-th top-level transversal branch; the merged minimum uses
/// the deterministic (fix, serialized element) order, so the result is
/// independent of the job count.
pub fn neumann_witness_jobs(
    action: &GroupAction,
    cap: u64,
    jobs: usize,
) -> Result<WitnessCertificate> {
    let jobs = jobs.max(1);
    if jobs == 1 {
        return neumann_witness(action, SearchMode::Exhaustive, cap);
    }
    let group = &action.group;
    let results: Vec<Result<Option<(u32, Permutation)>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|shard| {
                scope.spawn(move || -> Result<Option<(u32, Permutation)>> {
                    let mut best: Option<(u32, Permutation)> = None;
                    for g in group.element_scan_partitioned(cap, shard, jobs)? {
                        if g.is_identity() {
                            continue;
                        }
                        let f = g.fix_count();
                        if f == 0 {
                            continue;
                        }
                        let better = match &best {
                            None => true,
                            Some((bf, bg)) => f < *bf || (f == *bf && &g < bg),
                        };
                        if better {
                            best = Some((f, g));
                        }
                    }
                    Ok(best)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut best: Option<(u32, Permutation)> = None;
    for r in results {
        if let Some((f, g)) = r? {
            let better = match &best {
                None => true,
                Some((bf, bg)) => f < *bf || (f == *bf && &g < bg),
            };
            if better {
                best = Some((f, g));
            }
        }
    }
    let n = action.degree() as u128;
    match best {
        Some((f, g)) if (f as u128).pow(3) <= n => {
            Ok(certificate(action, g, f, &SearchMode::Exhaustive))
        }
        Some((f, _)) => Err(Error::TheoremViolation(format!(
            "no element with fix³ ≤ n in '{}': minimal positive fix {f} on degree {}",
            action.name,
            action.degree()
        ))),
        None => Err(Error::TheoremViolation(format!(
            "every nonidentity element of '{}' is fixed-point-free",
            action.name
        ))),
    }
}

/// Exact distribution of fix over nonidentity elements, plus the minimum
/// positive value.
#[derive(Clone, Debug)]
pub struct FixProfile {
    pub histogram: BTreeMap<u32, u64>,
    pub min_positive_fix: Option<u32>,
    pub nonidentity_count: u64,
}

pub fn min_fix_profile(action: &GroupAction, cap: u64) -> Result<FixProfile> {
    let mut histogram = BTreeMap::new();
    let mut count = 0u64;
    for g in action.group.element_scan(cap)? {
        if g.is_identity() {
            continue;
        }
        *histogram.entry(g.fix_count()).or_insert(0) += 1;
        count += 1;
    }
    let min_positive_fix = histogram.keys().find(|&&f| f > 0).copied();
    Ok(FixProfile {
        histogram,
        min_positive_fix,
        nonidentity_count: count,
    })
}

/// Sum of fix over ALL elements; for a transitive action this is |G| (the
/// orbit-count identity).
pub fn total_fix(action: &GroupAction, cap: u64) -> Result<BigUint> {
    let mut total = BigUint::from(0u32);
    for g in action.group.element_scan(cap)? {
        total += BigUint::from(g.fix_count());
    }
    Ok(total)
}

/// Sharded version of the fix-statistics pass: shard `shard` of `of` returns
/// (histogram over nonidentity elements, Σ fix over all elements). Summing
/// the shard results reproduces the sequential answers for any shard count.
pub fn fix_statistics_shard(
    group: &PermGroup,
    cap: u64,
    shard: usize,
    of: usize,
) -> Result<(BTreeMap<u32, u64>, BigUint)> {
    let mut histogram = BTreeMap::new();
    let mut total = BigUint::from(0u32);
    for g in group.element_scan_partitioned(cap, shard, of)? {
        let f = g.fix_count();
        total += BigUint::from(f);
        if !g.is_identity() {
            *histogram.entry(f).or_insert(0) += 1;
        }
    }
    Ok((histogram, total))
}
