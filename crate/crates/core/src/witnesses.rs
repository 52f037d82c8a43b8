//! Explicit witness elements per case family, with predicted fixed-point
//! counts where a closed formula exists, and verification helpers that
//! instantiate each witness in its action and count directly.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::actions::{
    affine_group, alt_group, coset_fix_count, ksubsets_action, projective_action, wreath_action,
    WreathMode,
};
use crate::bounds::euler_phi;
use crate::error::{Error, Result};
use crate::formulas::{fix_by_formula, fusion_scan};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessCase {
    /// stabilizer of a k-set in A_n, acting on k-subsets
    Intransitive { n: u32, k: u32 },
    /// block stabilizer (S_k wr S_t) ∩ A_n, n = kt
    Imprimitive { n: u32, k: u32, t: u32 },
    /// AGL_d(p) ∩ A_n, n = p^d: Singer cycle (p = 2) or its square (p odd)
    AffineSinger { d: u32, p: u64 },
    /// (S_k wr S_t) ∩ A_n in product action, n = k^t: constant tuple of a
    /// long cycle of A_k
    ProductPower { k: u32, t: u32 },
    /// constant pair over a base witness in the product action on Δ^t
    ProductOfBaseWitness { m: u32, t: u32 },
    /// (x, x) on a two-sided diagonal action of S × S
    DiagonalPair,
    /// regular unipotent on projective points
    Parabolic { d: u32, p: u64 },
}

#[derive(Clone, Debug)]
pub struct WitnessSpec {
    pub case: WitnessCase,
    /// cycle type on the natural domain, when the witness is specified that way
    pub cycle_type: Option<Vec<u32>>,
    pub element: Option<Permutation>,
    pub predicted_fix: Option<BigUint>,
    /// degree of the domain the element permutes
    pub domain_degree: usize,
}

impl WitnessSpec {
    fn check_type(self) -> Result<Self> {
        if let (Some(ty), Some(el)) = (&self.cycle_type, &self.element) {
            if el.cycle_type() != *ty {
                return Err(Error::InvalidParam(format!(
                    "constructed element has cycle type {:?}, wanted {:?}",
                    el.cycle_type(),
                    ty
                )));
            }
        }
        if let Some(ty) = &self.cycle_type {
            let total: u32 = ty.iter().sum();
            if total as usize != self.domain_degree {
                return Err(Error::InvalidParam(format!(
                    "cycle type {ty:?} does not sum to the degree {}",
                    self.domain_degree
                )));
            }
        }
        Ok(self)
    }
}

/// Consecutive cycles of the given lengths starting at point 0.
fn element_with_consecutive_cycles(degree: usize, lens: &[u32]) -> Permutation {
    let mut cycles = Vec::new();
    let mut next = 0u32;
    for &len in lens {
        if len >= 2 {
            cycles.push((next..next + len).collect());
        }
        next += len;
    }
    debug_assert_eq!(next as usize, degree);
    Permutation::from_cycles(degree, &cycles).unwrap()
}

/// A single cycle through blocks 1..t-1 of size k that respects the block
/// structure: block b maps to block b+1 pointwise, and the wrap from the last
/// block back to block 1 shifts within the block, giving one cycle of length
/// k(t-1) on those points.
fn block_respecting_cycle(k: u32, t: u32) -> Permutation {
    let n = (k * t) as usize;
    let mut images: Vec<u32> = (0..n as u32).collect();
    for b in 1..t {
        for i in 0..k {
            let from = b * k + i;
            let to = if b + 1 < t {
                (b + 1) * k + i
            } else {
                k + (i + 1) % k
            };
            images[from as usize] = to;
        }
    }
    Permutation::from_images(images).unwrap()
}

/// Like `block_respecting_cycle` but through all t blocks (a full n-cycle).
fn full_block_cycle(k: u32, t: u32) -> Permutation {
    let n = (k * t) as usize;
    let mut images: Vec<u32> = (0..n as u32).collect();
    for b in 0..t {
        for i in 0..k {
            let from = b * k + i;
            let to = if b + 1 < t {
                (b + 1) * k + i
            } else {
                (i + 1) % k
            };
            images[from as usize] = to;
        }
    }
    Permutation::from_images(images).unwrap()
}

/// The witness for the k-set stabilizer case: cycle type (k, n-k) for n even,
/// (1, k-1, n-k) for n odd with k > 1, and (1, 2, n-3) for n odd, k = 1.
/// The predicted fixed-point count on k-subsets is 1.
pub fn witness_intransitive(n: u32, k: u32) -> Result<WitnessSpec> {
    if k == 0 || 2 * k >= n {
        return Err(Error::InvalidParam(
            "intransitive case needs 1 <= k < n/2".into(),
        ));
    }
    let lens: Vec<u32> = if n % 2 == 0 {
        vec![k, n - k]
    } else if k != 1 {
        vec![1, k - 1, n - k]
    } else {
        vec![1, 2, n - 3]
    };
    let element = element_with_consecutive_cycles(n as usize, &lens);
    debug_assert!(element.is_even());
    let mut ty = lens.clone();
    ty.sort_unstable();
    WitnessSpec {
        case: WitnessCase::Intransitive { n, k },
        cycle_type: Some(ty),
        element: Some(element),
        predicted_fix: Some(BigUint::one()),
        domain_degree: n as usize,
    }
    .check_type()
}

/// The witness for the block-stabilizer case: an n-cycle for odd n, cycle
/// type (1, 1, k-2, n-k) for even n with k > 2, and (n-2, 2) for k = 2.
/// Predicted fixed-point count on the coset space is 1.
pub fn witness_imprimitive(n: u32, k: u32, t: u32) -> Result<WitnessSpec> {
    if k < 2 || t < 2 || k * t != n {
        return Err(Error::InvalidParam(
            "imprimitive case needs n = kt, k, t >= 2".into(),
        ));
    }
    let (element, ty) = if n % 2 == 1 {
        (full_block_cycle(k, t), vec![n])
    } else if k != 2 {
        // 2 fixed points and a (k-2)-cycle inside block 0, one long cycle on
        // the other blocks
        let inner = Permutation::from_cycles(n as usize, &[(2..k).collect()]).unwrap();
        let outer = block_respecting_cycle(k, t);
        (inner.then(&outer), vec![1, 1, k - 2, n - k])
    } else {
        let inner = Permutation::from_cycles(n as usize, &[vec![0, 1]]).unwrap();
        let outer = block_respecting_cycle(k, t);
        (inner.then(&outer), vec![2, n - 2])
    };
    debug_assert!(element.is_even());
    let mut ty = ty;
    ty.sort_unstable();
    WitnessSpec {
        case: WitnessCase::Imprimitive { n, k, t },
        cycle_type: Some(ty),
        element: Some(element),
        predicted_fix: Some(BigUint::one()),
        domain_degree: n as usize,
    }
    .check_type()
}

/// The product-action witness inside A_n, n = k^t: the constant tuple of a
/// (k - δ)-cycle of A_k, δ = 0 for odd k and 1 for even k. No closed
/// fixed-point prediction is made for this case.
pub fn witness_product_power(k: u32, t: u32, point_cap: u64) -> Result<WitnessSpec> {
    if k < 5 || t < 2 {
        return Err(Error::InvalidParam(
            "product case needs k >= 5, t >= 2".into(),
        ));
    }
    let n = (k as u128).pow(t);
    if n > point_cap as u128 {
        return Err(Error::CapExceeded {
            what: "product witness degree",
            need: n,
            cap: point_cap as u128,
        });
    }
    // a k-cycle for odd k, a (k-1)-cycle with one fixed point for even k
    let delta: u32 = if k % 2 == 0 { 1 } else { 0 };
    let x = element_with_consecutive_cycles(
        k as usize,
        &if delta == 0 { vec![k] } else { vec![1, k - 1] },
    );
    debug_assert!(x.is_even());
    let element = product_tuple_power(&x, t);
    WitnessSpec {
        case: WitnessCase::ProductPower { k, t },
        cycle_type: Some(element.cycle_type()),
        element: Some(element),
        predicted_fix: None,
        domain_degree: n as usize,
    }
    .check_type()
}

/// Image of (x, x, …, x) on t-tuples in the lexicographic labeling used by
/// the product wreath action.
pub fn product_tuple_power(x: &Permutation, t: u32) -> Permutation {
    let k = x.degree() as u32;
    let n = (k as u64).pow(t) as usize;
    let images: Vec<u32> = (0..n as u64)
        .map(|idx| {
            let mut rem = idx;
            let mut digits = vec![0u32; t as usize];
            for j in (0..t as usize).rev() {
                digits[j] = (rem % k as u64) as u32;
                rem /= k as u64;
            }
            digits
                .iter()
                .fold(0u64, |acc, &d| acc * k as u64 + x.apply(d) as u64) as u32
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

/// The affine witness: the Singer cycle for p = 2, its square for p odd,
/// with the predicted coset fixed-point count
///   φ(2^d - 1) / (2d)                        (p = 2)
///   φ((p^d - 1)/2) · (p^d - 1) / (2d)        (p odd)
/// evaluated exactly (divisibility asserted).
pub fn witness_affine(d: u32, p: u64, point_cap: u64) -> Result<WitnessSpec> {
    let n = (p as u128).pow(d);
    if n < 7 {
        return Err(Error::InvalidParam("affine witness needs p^d >= 7".into()));
    }
    if n > point_cap as u128 {
        return Err(Error::CapExceeded {
            what: "affine witness degree",
            need: n,
            cap: point_cap as u128,
        });
    }
    let aff = affine_group(d, p, point_cap)?;
    let n = n as u64;
    let (element, predicted) = if p == 2 {
        let num = BigUint::from(euler_phi(n - 1));
        let den = BigUint::from(2 * d as u64);
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::NonIntegralFix(format!("phi(2^d-1)/(2d) for d={d}")));
        }
        (aff.singer.clone(), q)
    } else {
        let num = BigUint::from(euler_phi((n - 1) / 2)) * BigUint::from(n - 1);
        let den = BigUint::from(2 * d as u64);
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::NonIntegralFix(format!(
                "phi((p^d-1)/2)(p^d-1)/(2d) for d={d}, p={p}"
            )));
        }
        (aff.singer.then(&aff.singer), q)
    };
    WitnessSpec {
        case: WitnessCase::AffineSinger { d, p },
        cycle_type: Some(element.cycle_type()),
        element: Some(element),
        predicted_fix: Some(predicted),
        domain_degree: n as usize,
    }
    .check_type()
}

/// Diagonal-case witness: x minimizing |C_S(x)| over nonidentity classes
/// (ties broken by the lexicographically least class representative), used as
/// the pair (x, x); predicted fix |C_S(x)|. Errors hard if no class has
/// |C_S(x)|³ < |S|, which would contradict the bound this toolkit verifies.
pub fn witness_diagonal(s: &PermGroup, element_cap: u64) -> Result<(WitnessSpec, Permutation)> {
    let classes = s.conjugacy_classes(element_cap)?;
    let mut best: Option<(BigUint, Permutation)> = None;
    for c in classes {
        if c.representative.is_identity() {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bo, br)) => {
                c.centralizer_order < *bo || (c.centralizer_order == *bo && c.representative < *br)
            }
        };
        if better {
            best = Some((c.centralizer_order, c.representative));
        }
    }
    let (cz, x) = best
        .ok_or_else(|| Error::InvalidParam("diagonal witness needs a nontrivial group".into()))?;
    if &(cz.clone() * cz.clone() * cz.clone()) >= s.order() {
        return Err(Error::TheoremViolation(format!(
            "no class of {} elements has centralizer cube below the group order {}",
            s.degree(),
            s.order()
        )));
    }
    let spec = WitnessSpec {
        case: WitnessCase::DiagonalPair,
        cycle_type: Some(x.cycle_type()),
        element: None, // lives in the diagonal action, produced on demand
        predicted_fix: Some(cz),
        domain_degree: s
            .order()
            .try_into()
            .map_err(|_| Error::ScaleCap("diagonal degree exceeds usize".into()))?,
    };
    Ok((spec, x))
}

/// Product-over-base witness: x attaining the minimum positive fix of the
/// natural A_m action (required strict: fix³ < m), lifted to the constant
/// tuple on m^t points; predicted fix is fix(x)^t.
pub fn witness_product_of_base(
    m: u32,
    t: u32,
    point_cap: u64,
    element_cap: u64,
) -> Result<WitnessSpec> {
    let base = crate::actions::natural_action(m);
    let cert = crate::verifier::neumann_witness(
        &base,
        crate::verifier::SearchMode::Exhaustive,
        element_cap,
    )?;
    let f = cert.fix as u128;
    if f.pow(3) >= m as u128 {
        return Err(Error::TheoremViolation(format!(
            "base witness fix {f} is not strictly below m^(1/3) for m = {m}"
        )));
    }
    let n = (m as u128).pow(t);
    if n > point_cap as u128 {
        return Err(Error::CapExceeded {
            what: "product witness degree",
            need: n,
            cap: point_cap as u128,
        });
    }
    let element = product_tuple_power(&cert.element, t);
    let predicted = BigUint::from(cert.fix).pow(t);
    WitnessSpec {
        case: WitnessCase::ProductOfBaseWitness { m, t },
        cycle_type: Some(element.cycle_type()),
        element: Some(element),
        predicted_fix: Some(predicted),
        domain_degree: n as usize,
    }
    .check_type()
}

/// Parabolic case: the regular unipotent element fixes exactly one point of
/// the projective action.
pub fn witness_parabolic(d: u32, p: u64, point_cap: u64) -> Result<WitnessSpec> {
    let proj = projective_action(d, p, point_cap)?;
    let element = proj.regular_unipotent();
    WitnessSpec {
        case: WitnessCase::Parabolic { d, p },
        cycle_type: Some(element.cycle_type()),
        element: Some(element),
        predicted_fix: Some(BigUint::one()),
        domain_degree: proj.action.degree(),
    }
    .check_type()
}

/// Number of cycles of g including fixed points (the orbit count of ⟨g⟩).
pub fn cyclic_orbit_count(g: &Permutation) -> u32 {
    g.cycle_count()
}

/// Instantiates a witness in its action and returns the observed fix count.
pub fn verified_fix(spec: &WitnessSpec, point_cap: u64, element_cap: u64) -> Result<BigUint> {
    match &spec.case {
        WitnessCase::Intransitive { n, k } => {
            let act = ksubsets_action(*n, *k, point_cap)?;
            let lifted = lift_to_subsets(&act, spec.element.as_ref().unwrap());
            Ok(BigUint::from(lifted.fix_count()))
        }
        WitnessCase::Imprimitive { n, k, t } => {
            let g = alt_group(*n);
            let m = wreath_action(*k, *t, WreathMode::Imprimitive, point_cap)?;
            let fixed = coset_fix_count(&g, &m.group, spec.element.as_ref().unwrap(), point_cap)?;
            Ok(BigUint::from(fixed))
        }
        WitnessCase::AffineSinger { d, p } => affine_verified_fix(*d, *p, point_cap, element_cap),
        WitnessCase::ProductPower { .. } | WitnessCase::ProductOfBaseWitness { .. } => {
            Ok(BigUint::from(spec.element.as_ref().unwrap().fix_count()))
        }
        WitnessCase::DiagonalPair => Err(Error::InvalidParam(
            "diagonal witnesses are verified through diagonal_action::image_of_pair".into(),
        )),
        WitnessCase::Parabolic { .. } => {
            Ok(BigUint::from(spec.element.as_ref().unwrap().fix_count()))
        }
    }
}

fn lift_to_subsets(act: &crate::actions::GroupAction, g: &Permutation) -> Permutation {
    // reconstruct the subset labeling from the action labels
    let parse = |label: &str| -> Vec<u32> {
        label
            .trim_matches(['{', '}'])
            .split(',')
            .map(|s| s.parse::<u32>().unwrap() - 1)
            .collect()
    };
    let subsets: Vec<Vec<u32>> = act.labels.iter().map(|l| parse(l)).collect();
    let index: std::collections::HashMap<Vec<u32>, u32> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i as u32))
        .collect();
    let images: Vec<u32> = subsets
        .iter()
        .map(|s| {
            let mut t: Vec<u32> = s.iter().map(|&x| g.apply(x)).collect();
            t.sort_unstable();
            index[&t]
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

/// The affine prediction checked through the fusion formula on
/// A_n / (AGL_d(p) ∩ A_n). This is the path that stays feasible when the
/// coset index is far beyond the direct-action cap.
pub fn affine_verified_fix(d: u32, p: u64, point_cap: u64, element_cap: u64) -> Result<BigUint> {
    let aff = affine_group(d, p, point_cap)?;
    let n = (p as u64).pow(d) as u32;
    let ambient = alt_group(n);
    let g = if p == 2 {
        aff.singer.clone()
    } else {
        aff.singer.then(&aff.singer)
    };
    let fd = fusion_scan(&ambient, &aff.even_group, &g, element_cap, element_cap)?;
    fix_by_formula(&fd)
}
