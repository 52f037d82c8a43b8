//! Fixed-point counts of g on G/H without building the coset action, via the
//! class-fusion formulas
//!
//!   fix(g, G/H) = |C_G(g)| · |g^G ∩ H| / |H|
//!               = Σ_i |C_G(g)| / |C_H(g_i)|
//!
//! over representatives g_i of the H-classes in g^G ∩ H, and the variant that
//! averages over the classes of a normal subgroup H0 of H. All arithmetic is
//! exact rational; a non-integral result is a hard error, never rounded.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Default budget for the conjugacy backtrack inside fusion scans.
pub const DEFAULT_CONJUGACY_BUDGET: u64 = 5_000_000;

/// The fusion data needed by the class formulas: |C_G(g)|, representatives of
/// the H-classes inside g^G ∩ H with their class sizes, and |g^G ∩ H|.
#[derive(Clone, Debug)]
pub struct FusionData {
    pub g: Permutation,
    pub ambient_order: BigUint,
    pub sub_order: BigUint,
    pub centralizer_g_in_ambient: BigUint,
    /// one entry per H-class in g^G ∩ H: (lexicographically least element,
    /// H-class size)
    pub h_classes: Vec<(Permutation, BigUint)>,
    /// Σ of the class sizes = |g^G ∩ H|
    pub intersection_size: BigUint,
}

fn to_ratio(x: &BigUint) -> Ratio<BigInt> {
    Ratio::from_integer(BigInt::from(x.clone()))
}

fn ratio_to_biguint(r: &Ratio<BigInt>, context: &str) -> Result<BigUint> {
    if !r.is_integer() || r.is_negative() {
        return Err(Error::NonIntegralFix(format!("{context}: {r}")));
    }
    Ok(r.to_integer().to_biguint().expect("nonnegative"))
}

/// Elements of H lying in g^G, by exhaustive scan of H with a cycle-type
/// prefilter, then an exact conjugacy test in G.
fn scan_intersection(
    g_ambient: &PermGroup,
    h: &PermGroup,
    g: &Permutation,
    element_cap: u64,
    budget: u64,
) -> Result<Vec<Permutation>> {
    let ty = g.cycle_type();
    let mut matches = Vec::new();
    for cand in h.element_scan(element_cap)? {
        if cand.cycle_type() != ty {
            continue;
        }
        if g_ambient.conjugate_in(g, &cand, budget)? {
            matches.push(cand);
        }
    }
    Ok(matches)
}

/// Partitions `matches` into conjugation orbits under the generators of `by`,
/// returning (lexicographically least element, orbit size) per class, ordered
/// by their least elements.
fn classes_within(by: &PermGroup, matches: &[Permutation]) -> Vec<(Permutation, BigUint)> {
    let mut sorted: Vec<&Permutation> = matches.iter().collect();
    sorted.sort();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    for m in sorted {
        if seen.contains(m.images()) {
            continue;
        }
        let mut stack = vec![m.clone()];
        let mut size = 0u64;
        seen.insert(m.images().to_vec());
        while let Some(x) = stack.pop() {
            size += 1;
            for s in by.generators() {
                let y = x.conjugate_by(s);
                if !seen.contains(y.images()) {
                    seen.insert(y.images().to_vec());
                    stack.push(y);
                }
            }
        }
        out.push((m.clone(), BigUint::from(size)));
    }
    out
}

/// Exhaustive fusion scan: requires g ∈ H ≤ G and |H| within the element cap.
pub fn fusion_scan(
    g_ambient: &PermGroup,
    h: &PermGroup,
    g: &Permutation,
    element_cap: u64,
    class_cap: u64,
) -> Result<FusionData> {
    if !g_ambient.contains_all(h.generators()) {
        return Err(Error::NotASubgroup);
    }
    if !h.contains(g) {
        return Err(Error::NotAMember);
    }
    let centralizer_g_in_ambient = g_ambient.centralizer_order(g, class_cap)?;
    let matches = scan_intersection(g_ambient, h, g, element_cap, DEFAULT_CONJUGACY_BUDGET)?;
    let h_classes = classes_within(h, &matches);
    let intersection_size = BigUint::from(matches.len());
    let total: BigUint = h_classes.iter().map(|(_, s)| s.clone()).sum();
    assert_eq!(
        total, intersection_size,
        "classes partition the intersection"
    );
    Ok(FusionData {
        g: g.clone(),
        ambient_order: g_ambient.order().clone(),
        sub_order: h.order().clone(),
        centralizer_g_in_ambient,
        h_classes,
        intersection_size,
    })
}

/// Builds fusion data from caller-supplied H-class representatives, for
/// subgroups beyond the exhaustive cap. Each representative is verified to
/// lie in H and in g^G, and the representatives are verified pairwise
/// non-conjugate in H (conjugation-orbit disjointness).
pub fn fusion_from_reps(
    g_ambient: &PermGroup,
    h: &PermGroup,
    g: &Permutation,
    reps: &[Permutation],
    class_cap: u64,
    budget: u64,
) -> Result<FusionData> {
    if !g_ambient.contains_all(h.generators()) {
        return Err(Error::NotASubgroup);
    }
    if !h.contains(g) {
        return Err(Error::NotAMember);
    }
    let centralizer_g_in_ambient = g_ambient.centralizer_order(g, class_cap)?;
    let mut h_classes = Vec::new();
    for (i, rep) in reps.iter().enumerate() {
        if !h.contains(rep) {
            return Err(Error::NotAMember);
        }
        if !g_ambient.conjugate_in(g, rep, budget)? {
            return Err(Error::InvalidParam(format!(
                "supplied representative {i} is not conjugate to g in the ambient group"
            )));
        }
        for other in reps.iter().take(i) {
            if h.conjugate_in(rep, other, budget)? {
                return Err(Error::InvalidParam(format!(
                    "supplied representatives are not pairwise non-conjugate in H ({rep} ~ {other})"
                )));
            }
        }
        let data = h.class_and_centralizer(rep, class_cap)?;
        h_classes.push((rep.clone(), data.class_size));
    }
    let intersection_size: BigUint = h_classes.iter().map(|(_, s)| s.clone()).sum();
    Ok(FusionData {
        g: g.clone(),
        ambient_order: g_ambient.order().clone(),
        sub_order: h.order().clone(),
        centralizer_g_in_ambient,
        h_classes,
        intersection_size,
    })
}

/// Evaluates Σ_i |C_G(g)| / |C_H(g_i)| exactly, asserts it is a nonnegative
/// integer, and asserts agreement with the |C_G(g)|·|g^G ∩ H|/|H| form.
pub fn fix_by_formula(fd: &FusionData) -> Result<BigUint> {
    let cg = to_ratio(&fd.centralizer_g_in_ambient);
    let h_ord = to_ratio(&fd.sub_order);
    let mut total = Ratio::from_integer(BigInt::zero());
    for (_, class_size) in &fd.h_classes {
        // |C_H(g_i)| = |H| / |g_i^H|
        let ch = h_ord.clone() / to_ratio(class_size);
        total += cg.clone() / ch;
    }
    let sum_form = ratio_to_biguint(&total, "class-sum form")?;
    let product_form = ratio_to_biguint(
        &(cg * to_ratio(&fd.intersection_size) / h_ord),
        "product form",
    )?;
    if sum_form != product_form {
        return Err(Error::NonIntegralFix(format!(
            "the two fixed-point forms disagree: {sum_form} vs {product_form}"
        )));
    }
    Ok(sum_form)
}

/// Result of the normal-subgroup variant.
#[derive(Clone, Debug)]
pub struct NormalFormFix {
    pub fix: BigUint,
    /// whether each H0-coset of H meets g^G in at most one H0-class
    pub coset_hypothesis_holds: bool,
    /// |C_G(g)| / min_i |C_{H0}(g_i)|, the bound certified when the
    /// hypothesis holds
    pub minimal_centralizer_bound: Ratio<BigInt>,
}

/// fix(g, G/H) = (1/|H:H0|) Σ_i |C_G(g)| / |C_{H0}(g_i)| over representatives
/// of the H0-classes in g^G ∩ H, for H0 normal in H. When every H0-coset of H
/// meets g^G in at most one H0-class, the result is additionally checked
/// against the minimal-centralizer bound.
pub fn fix_by_normal_form(
    g_ambient: &PermGroup,
    h: &PermGroup,
    h0: &PermGroup,
    g: &Permutation,
    element_cap: u64,
    class_cap: u64,
) -> Result<NormalFormFix> {
    if !g_ambient.contains_all(h.generators()) || !h.contains_all(h0.generators()) {
        return Err(Error::NotASubgroup);
    }
    if !h.contains(g) {
        return Err(Error::NotAMember);
    }
    // normality by generator conjugation
    for hg in h.generators() {
        for ng in h0.generators() {
            if !h0.contains(&ng.conjugate_by(hg)) {
                return Err(Error::NotNormal);
            }
        }
    }
    let centralizer_g = g_ambient.centralizer_order(g, class_cap)?;
    let matches = scan_intersection(g_ambient, h, g, element_cap, DEFAULT_CONJUGACY_BUDGET)?;
    let h0_classes = classes_within(h0, &matches);
    let index = to_ratio(h.order()) / to_ratio(h0.order());
    let cg = to_ratio(&centralizer_g);
    let h0_ord = to_ratio(h0.order());
    let mut total = Ratio::from_integer(BigInt::zero());
    let mut min_ch0: Option<Ratio<BigInt>> = None;
    for (_, class_size) in &h0_classes {
        let ch0 = h0_ord.clone() / to_ratio(class_size);
        if min_ch0.as_ref().map_or(true, |m| &ch0 < m) {
            min_ch0 = Some(ch0.clone());
        }
        total += cg.clone() / ch0;
    }
    let fix = ratio_to_biguint(&(total / index), "normal-subgroup form")?;

    // hypothesis: each H0-coset of H meets g^G in at most one H0-class.
    // Identify cosets by the canonical representative map of H0.
    let mut coset_hypothesis_holds = true;
    {
        let mut class_of: Vec<usize> = vec![0; matches.len()];
        // recompute class membership per match
        for (ci, (rep, _)) in h0_classes.iter().enumerate() {
            let mut seen: HashSet<Vec<u32>> = HashSet::new();
            let mut stack = vec![rep.clone()];
            seen.insert(rep.images().to_vec());
            while let Some(x) = stack.pop() {
                for s in h0.generators() {
                    let y = x.conjugate_by(s);
                    if !seen.contains(y.images()) {
                        seen.insert(y.images().to_vec());
                        stack.push(y);
                    }
                }
            }
            for (mi, m) in matches.iter().enumerate() {
                if seen.contains(m.images()) {
                    class_of[mi] = ci;
                }
            }
        }
        let mut coset_class: std::collections::HashMap<Vec<u32>, usize> =
            std::collections::HashMap::new();
        for (mi, m) in matches.iter().enumerate() {
            let key = h0.min_coset_rep(m).images().to_vec();
            if let Some(&prev) = coset_class.get(&key) {
                if prev != class_of[mi] {
                    coset_hypothesis_holds = false;
                    break;
                }
            } else {
                coset_class.insert(key, class_of[mi]);
            }
        }
    }
    let minimal_centralizer_bound =
        cg / min_ch0.unwrap_or_else(|| Ratio::from_integer(BigInt::one()));
    if coset_hypothesis_holds {
        let fix_r = Ratio::from_integer(BigInt::from(fix.clone()));
        assert!(
            fix_r <= minimal_centralizer_bound,
            "minimal-centralizer bound must hold when the coset hypothesis does"
        );
    }
    Ok(NormalFormFix {
        fix,
        coset_hypothesis_holds,
        minimal_centralizer_bound,
    })
}
