//! Builders for the permutation actions the toolkit reasons about:
//! natural and k-subset actions of alternating/symmetric groups, wreath
//! groups in imprimitive and product action, affine groups with their Singer
//! elements, two-sided diagonal actions, projective actions, and generic
//! coset actions with canonical representatives.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{factorial, PermGroup};
use crate::linalg::{mod_inverse, singer_matrix, MatrixFp};
use crate::perm::Permutation;

/// Default cap on action degrees (coset indexes, subset counts, …).
pub const DEFAULT_POINT_CAP: u64 = 100_000;
/// Default cap on exhaustive element enumeration.
pub const DEFAULT_ELEMENT_CAP: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    Natural,
    KSubsets,
    ImprimitiveWreath,
    ProductWreath,
    Affine,
    Diagonal,
    Projective,
    Coset,
}

impl ActionKind {
    pub fn name(&self) -> &'static str {
        match self {
            ActionKind::Natural => "natural",
            ActionKind::KSubsets => "ksubsets",
            ActionKind::ImprimitiveWreath => "imprimitive-wreath",
            ActionKind::ProductWreath => "product-wreath",
            ActionKind::Affine => "affine",
            ActionKind::Diagonal => "diagonal",
            ActionKind::Projective => "projective",
            ActionKind::Coset => "coset",
        }
    }
}

/// A group together with the labeled point set it acts on faithfully.
/// When a construction has a kernel (projective and coset actions can),
/// `group` is the faithful image and `kernel_order` records the kernel size.
pub struct GroupAction {
    pub group: PermGroup,
    pub labels: Vec<String>,
    pub kind: ActionKind,
    pub name: String,
    pub kernel_order: BigUint,
}

impl GroupAction {
    pub fn degree(&self) -> usize {
        self.group.degree()
    }
}

/// Standard generators of the alternating group: (0,1,2) together with an
/// n-cycle (n odd) or an (n-1)-cycle on 1..n-1 (n even).
pub fn alt_group(n: u32) -> PermGroup {
    let deg = n as usize;
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(Permutation::from_cycles(deg, &[vec![0, 1, 2]]).unwrap());
    }
    if n >= 4 {
        let cycle: Vec<u32> = if n % 2 == 1 {
            (0..n).collect()
        } else {
            (1..n).collect()
        };
        gens.push(Permutation::from_cycles(deg, &[cycle]).unwrap());
    }
    let g = PermGroup::from_generators(deg, gens).unwrap();
    if n >= 2 {
        debug_assert_eq!(g.order(), &(factorial(n as u64) / BigUint::from(2u32)));
    }
    g
}

pub fn sym_group(n: u32) -> PermGroup {
    let deg = n as usize;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(deg, &[vec![0, 1]]).unwrap());
    }
    if n >= 3 {
        gens.push(Permutation::from_cycles(deg, &[(0..n).collect()]).unwrap());
    }
    PermGroup::from_generators(deg, gens).unwrap()
}

pub fn natural_action(n: u32) -> GroupAction {
    let group = alt_group(n);
    GroupAction {
        group,
        labels: (1..=n).map(|i| i.to_string()).collect(),
        kind: ActionKind::Natural,
        name: format!("natural A_{n}"),
        kernel_order: BigUint::one(),
    }
}

/// Replaces a generating set by one for the even (alternating) part of the
/// group it generates: Schreier generators for the index-2 kernel of the sign
/// map, using the first odd generator as coset representative. If every
/// generator is even the set is returned unchanged.
pub fn even_subgroup_generators(gens: &[Permutation]) -> Vec<Permutation> {
    let Some(t) = gens.iter().find(|g| !g.is_even()).cloned() else {
        return gens.to_vec();
    };
    let t_inv = t.inverse();
    let mut out = Vec::new();
    for g in gens {
        if g.is_even() {
            out.push(g.clone());
            out.push(t.then(g).then(&t_inv));
        } else {
            out.push(g.then(&t_inv));
            out.push(t.then(g));
        }
    }
    out.retain(|g| !g.is_identity());
    out
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// A_n acting on the k-element subsets of the n points, subsets ordered
/// lexicographically.
pub fn ksubsets_action(n: u32, k: u32, point_cap: u64) -> Result<GroupAction> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParam("ksubsets needs 1 <= k < n".into()));
    }
    let count = binomial(n as u64, k as u64);
    let count = count
        .to_u64()
        .filter(|&c| c <= point_cap)
        .ok_or(Error::CapExceeded {
            what: "ksubsets degree",
            need: u128::MAX,
            cap: point_cap as u128,
        })?;
    // lexicographic enumeration of k-subsets
    let mut subsets: Vec<Vec<u32>> = Vec::with_capacity(count as usize);
    let mut cur: Vec<u32> = (0..k).collect();
    loop {
        subsets.push(cur.clone());
        // advance
        let mut i = k as i64 - 1;
        while i >= 0 && cur[i as usize] == n - k + i as u32 {
            i -= 1;
        }
        if i < 0 {
            break;
        }
        cur[i as usize] += 1;
        for j in (i as usize + 1)..k as usize {
            cur[j] = cur[j - 1] + 1;
        }
    }
    debug_assert_eq!(subsets.len() as u64, count);
    let index: HashMap<Vec<u32>, u32> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i as u32))
        .collect();
    let base = alt_group(n);
    let lift = |g: &Permutation| -> Permutation {
        let images = subsets
            .iter()
            .map(|s| {
                let mut t: Vec<u32> = s.iter().map(|&x| g.apply(x)).collect();
                t.sort_unstable();
                index[&t]
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let gens: Vec<Permutation> = base.generators().iter().map(lift).collect();
    let group = PermGroup::from_generators(count as usize, gens)?;
    let labels = subsets
        .iter()
        .map(|s| {
            let pts: Vec<String> = s.iter().map(|&x| (x + 1).to_string()).collect();
            format!("{{{}}}", pts.join(","))
        })
        .collect();
    Ok(GroupAction {
        group,
        labels,
        kind: ActionKind::KSubsets,
        name: format!("A_{n} on {k}-subsets"),
        kernel_order: BigUint::one(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WreathMode {
    Imprimitive,
    Product,
}

/// (S_k wr S_t) ∩ A_n, either on n = kt points with consecutive blocks, or in
/// product action on n = k^t tuples. Odd generators are replaced by the even
/// Schreier set, and the order halving is verified on the chain.
pub fn wreath_action(k: u32, t: u32, mode: WreathMode, point_cap: u64) -> Result<GroupAction> {
    match mode {
        WreathMode::Imprimitive => {
            if k < 2 || t < 2 {
                return Err(Error::InvalidParam(
                    "imprimitive wreath needs k, t >= 2".into(),
                ));
            }
            let n = (k * t) as usize;
            if n as u64 > point_cap {
                return Err(Error::CapExceeded {
                    what: "wreath degree",
                    need: n as u128,
                    cap: point_cap as u128,
                });
            }
            let mut raw: Vec<Permutation> = Vec::new();
            raw.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
            if k >= 3 {
                raw.push(Permutation::from_cycles(n, &[(0..k).collect()]).unwrap());
            }
            // block t-cycle
            let images: Vec<u32> = (0..n as u32)
                .map(|i| ((i / k + 1) % t) * k + i % k)
                .collect();
            raw.push(Permutation::from_images(images).unwrap());
            if t >= 3 {
                // swap blocks 0 and 1
                let images: Vec<u32> = (0..n as u32)
                    .map(|i| match i / k {
                        0 => i + k,
                        1 => i - k,
                        _ => i,
                    })
                    .collect();
                raw.push(Permutation::from_images(images).unwrap());
            }
            let gens = even_subgroup_generators(&raw);
            let group = PermGroup::from_generators(n, gens)?;
            let expected = factorial(k as u64).pow(t) * factorial(t as u64) / BigUint::from(2u32);
            assert_eq!(group.order(), &expected, "wreath intersection order");
            Ok(GroupAction {
                group,
                labels: (1..=n).map(|i| i.to_string()).collect(),
                kind: ActionKind::ImprimitiveWreath,
                name: format!("(S_{k} wr S_{t}) ∩ A_{n} imprimitive"),
                kernel_order: BigUint::one(),
            })
        }
        WreathMode::Product => {
            if k < 5 || t < 2 {
                return Err(Error::InvalidParam(
                    "product wreath needs k >= 5, t >= 2".into(),
                ));
            }
            let n128 = (k as u128).pow(t);
            if n128 > point_cap as u128 {
                return Err(Error::CapExceeded {
                    what: "product wreath degree",
                    need: n128,
                    cap: point_cap as u128,
                });
            }
            let n = n128 as usize;
            // tuples in lexicographic order; digit 0 most significant
            let digits = |mut idx: u32| -> Vec<u32> {
                let mut v = vec![0u32; t as usize];
                for j in (0..t as usize).rev() {
                    v[j] = idx % k;
                    idx /= k;
                }
                v
            };
            let index = |v: &[u32]| -> u32 { v.iter().fold(0u32, |acc, &d| acc * k + d) };
            let mut raw = Vec::new();
            // S_k on coordinate 0
            for base in [
                Permutation::from_cycles(k as usize, &[vec![0, 1]]).unwrap(),
                Permutation::from_cycles(k as usize, &[(0..k).collect()]).unwrap(),
            ] {
                let images: Vec<u32> = (0..n as u32)
                    .map(|i| {
                        let mut v = digits(i);
                        v[0] = base.apply(v[0]);
                        index(&v)
                    })
                    .collect();
                raw.push(Permutation::from_images(images).unwrap());
            }
            // coordinate rotation and a coordinate swap
            let rot: Vec<u32> = (0..n as u32)
                .map(|i| {
                    let v = digits(i);
                    let mut w = vec![0u32; t as usize];
                    for j in 0..t as usize {
                        w[(j + 1) % t as usize] = v[j];
                    }
                    index(&w)
                })
                .collect();
            raw.push(Permutation::from_images(rot).unwrap());
            if t >= 3 {
                let swap: Vec<u32> = (0..n as u32)
                    .map(|i| {
                        let mut v = digits(i);
                        v.swap(0, 1);
                        index(&v)
                    })
                    .collect();
                raw.push(Permutation::from_images(swap).unwrap());
            }
            // for k ≡ 0 or 1 mod 4 and t = 2 the whole wreath is already even
            let has_odd = raw.iter().any(|g| !g.is_even());
            let gens = even_subgroup_generators(&raw);
            let group = PermGroup::from_generators(n, gens)?;
            let full = factorial(k as u64).pow(t) * factorial(t as u64);
            let expected = if has_odd {
                full / BigUint::from(2u32)
            } else {
                full
            };
            assert_eq!(
                group.order(),
                &expected,
                "product wreath intersection order"
            );
            let labels = (0..n as u32)
                .map(|i| {
                    let v: Vec<String> = digits(i).iter().map(|&d| (d + 1).to_string()).collect();
                    format!("({})", v.join(","))
                })
                .collect();
            Ok(GroupAction {
                group,
                labels,
                kind: ActionKind::ProductWreath,
                name: format!("(S_{k} wr S_{t}) ∩ A_{n} product"),
                kernel_order: BigUint::one(),
            })
        }
    }
}

/// Affine group AGL_d(p) on the p^d vectors of F_p^d, plus its Singer element
/// and the even (alternating-intersection) subgroup.
pub struct AffineData {
    pub action: GroupAction,
    /// AGL_d(p) ∩ A_{p^d}
    pub even_group: PermGroup,
    /// permutation of the Singer element of GL_d(p): cycle type (1, p^d - 1)
    pub singer: Permutation,
    pub d: u32,
    pub p: u64,
}

fn vector_index(v: &[u64], p: u64) -> u32 {
    v.iter().fold(0u64, |acc, &d| acc * p + d) as u32
}

fn vector_digits(mut idx: u64, p: u64, d: usize) -> Vec<u64> {
    let mut v = vec![0u64; d];
    for j in (0..d).rev() {
        v[j] = idx % p;
        idx /= p;
    }
    v
}

/// Permutation of the vector set induced by an invertible matrix.
pub fn matrix_to_vector_perm(m: &MatrixFp) -> Permutation {
    let p = m.p;
    let d = m.rows;
    let n = (p as u128).pow(d as u32) as usize;
    let images: Vec<u32> = (0..n as u64)
        .map(|i| vector_index(&m.apply_vec(&vector_digits(i, p, d)), p))
        .collect();
    Permutation::from_images(images).unwrap()
}

pub fn affine_group(d: u32, p: u64, point_cap: u64) -> Result<AffineData> {
    if d == 0 {
        return Err(Error::InvalidParam("affine_group needs d >= 1".into()));
    }
    crate::linalg::require_prime(p)?;
    let n128 = (p as u128).pow(d);
    if n128 > point_cap as u128 {
        return Err(Error::CapExceeded {
            what: "affine degree",
            need: n128,
            cap: point_cap as u128,
        });
    }
    let n = n128 as usize;
    let du = d as usize;
    let mut gens: Vec<Permutation> = Vec::new();
    // basis translations
    for i in 0..du {
        let images: Vec<u32> = (0..n as u64)
            .map(|idx| {
                let mut v = vector_digits(idx, p, du);
                v[i] = (v[i] + 1) % p;
                vector_index(&v, p)
            })
            .collect();
        gens.push(Permutation::from_images(images).unwrap());
    }
    // GL generators: all elementary transvections plus one diagonal generator
    for i in 0..du {
        for j in 0..du {
            if i == j {
                continue;
            }
            let mut m = MatrixFp::identity(p, du);
            m.set(i, j, 1);
            gens.push(matrix_to_vector_perm(&m));
        }
    }
    if p > 2 {
        let gamma = (2..p)
            .find(|&g| {
                let ord_needed = p - 1;
                crate::bounds::prime_factors_u64(ord_needed)
                    .iter()
                    .all(|&q| crate::linalg::mod_pow(g, ord_needed / q, p) != 1)
            })
            .expect("F_p has a primitive root");
        let mut m = MatrixFp::identity(p, du);
        m.set(0, 0, gamma);
        gens.push(matrix_to_vector_perm(&m));
    }
    let group = PermGroup::from_generators(n, gens)?;
    let mut expected = BigUint::from(p).pow(d);
    for i in 0..d {
        expected *= BigUint::from(p).pow(d) - BigUint::from(p).pow(i);
    }
    assert_eq!(group.order(), &expected, "AGL order");
    let even_gens = even_subgroup_generators(group.generators());
    let even_group = PermGroup::from_generators(n, even_gens)?;
    let singer = matrix_to_vector_perm(&singer_matrix(d, p)?);
    let action = GroupAction {
        group,
        labels: (0..n as u64)
            .map(|i| {
                let v: Vec<String> = vector_digits(i, p, du)
                    .iter()
                    .map(|x| x.to_string())
                    .collect();
                format!("[{}]", v.join(","))
            })
            .collect(),
        kind: ActionKind::Affine,
        name: format!("AGL_{d}({p}) on {n} vectors"),
        kernel_order: BigUint::one(),
    };
    Ok(AffineData {
        action,
        even_group,
        singer,
        d,
        p,
    })
}

/// S × S acting on S by s ↦ x1⁻¹ s x2, points enumerated in element-scan
/// order. Returns the action, the point list, and an index for computing
/// images of chosen pairs.
pub struct DiagonalData {
    pub action: GroupAction,
    pub points: Vec<Permutation>,
    index: HashMap<Vec<u32>, u32>,
}

impl DiagonalData {
    /// The permutation induced by the pair (x, y) acting as s ↦ x⁻¹ s y.
    pub fn image_of_pair(&self, x: &Permutation, y: &Permutation) -> Result<Permutation> {
        let xi = x.inverse();
        let images = self
            .points
            .iter()
            .map(|s| {
                let t = xi.then(s).then(y);
                self.index.get(t.images()).copied().ok_or(Error::NotAMember)
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Permutation::from_images(images)?)
    }
}

pub fn diagonal_action(s: &PermGroup, element_cap: u64) -> Result<DiagonalData> {
    let points: Vec<Permutation> = s.element_scan(element_cap)?.collect();
    let n = points.len();
    let index: HashMap<Vec<u32>, u32> = points
        .iter()
        .enumerate()
        .map(|(i, g)| (g.images().to_vec(), i as u32))
        .collect();
    let mut gens = Vec::new();
    for g in s.generators() {
        let gi = g.inverse();
        // (g, 1): s ↦ g⁻¹ s
        let left: Vec<u32> = points
            .iter()
            .map(|pt| index[gi.then(pt).images()])
            .collect();
        gens.push(Permutation::from_images(left)?);
        // (1, g): s ↦ s g
        let right: Vec<u32> = points.iter().map(|pt| index[pt.then(g).images()]).collect();
        gens.push(Permutation::from_images(right)?);
    }
    let group = PermGroup::from_generators(n, gens)?;
    let full = s.order() * s.order();
    let kernel_order = {
        let (q, r) = full.div_rem(group.order());
        assert!(r.is_zero(), "image order divides |S|^2");
        q
    };
    let labels = points.iter().map(|g| g.to_string()).collect();
    Ok(DiagonalData {
        action: GroupAction {
            group,
            labels,
            kind: ActionKind::Diagonal,
            name: format!("diagonal S x S on S, |S| = {n}"),
            kernel_order,
        },
        points,
        index,
    })
}

/// SL_d(p) acting on the projective points of F_p^d (normalized so the first
/// nonzero coordinate is 1). The stored group is the faithful image PSL_d(p).
pub struct ProjectiveData {
    pub action: GroupAction,
    pub points: Vec<Vec<u64>>,
    index: HashMap<Vec<u64>, u32>,
    pub d: u32,
    pub p: u64,
}

impl ProjectiveData {
    fn normalize(&self, mut v: Vec<u64>) -> Vec<u64> {
        let lead = v
            .iter()
            .find(|&&c| c != 0)
            .copied()
            .expect("nonzero vector");
        if lead != 1 {
            let inv = mod_inverse(lead, self.p);
            for c in v.iter_mut() {
                *c = *c * inv % self.p;
            }
        }
        v
    }

    /// Permutation image of an invertible matrix on the projective points.
    pub fn image_of_matrix(&self, m: &MatrixFp) -> Result<Permutation> {
        let images = self
            .points
            .iter()
            .map(|v| {
                let w = self.normalize(m.apply_vec(v));
                self.index.get(&w).copied().ok_or(Error::NotAMember)
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Permutation::from_images(images)?)
    }

    /// Image of the regular unipotent element (one full Jordan block).
    pub fn regular_unipotent(&self) -> Permutation {
        let mut m = MatrixFp::identity(self.p, self.d as usize);
        for i in 0..self.d as usize - 1 {
            m.set(i, i + 1, 1);
        }
        self.image_of_matrix(&m)
            .expect("unipotent acts on the points")
    }
}

pub fn projective_action(d: u32, p: u64, point_cap: u64) -> Result<ProjectiveData> {
    if d < 2 {
        return Err(Error::InvalidParam("projective_action needs d >= 2".into()));
    }
    crate::linalg::require_prime(p)?;
    let count = ((p as u128).pow(d) - 1) / (p as u128 - 1);
    if count > point_cap as u128 {
        return Err(Error::CapExceeded {
            what: "projective degree",
            need: count,
            cap: point_cap as u128,
        });
    }
    let du = d as usize;
    let total = (p as u128).pow(d) as u64;
    let mut points = Vec::new();
    for idx in 1..total {
        let v = vector_digits(idx, p, du);
        if v.iter().find(|&&c| c != 0) == Some(&1) {
            points.push(v);
        }
    }
    assert_eq!(points.len() as u128, count);
    let index: HashMap<Vec<u64>, u32> = points
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i as u32))
        .collect();
    let mut data = ProjectiveData {
        action: GroupAction {
            group: PermGroup::trivial(points.len()),
            labels: Vec::new(),
            kind: ActionKind::Projective,
            name: String::new(),
            kernel_order: BigUint::one(),
        },
        points,
        index,
        d,
        p,
    };
    let mut gens = Vec::new();
    for i in 0..du {
        for j in 0..du {
            if i == j {
                continue;
            }
            let mut m = MatrixFp::identity(p, du);
            m.set(i, j, 1);
            gens.push(data.image_of_matrix(&m)?);
        }
    }
    let group = PermGroup::from_generators(data.points.len(), gens)?;
    let sl = crate::bounds::classical_order(crate::bounds::ClassicalFamily::Sl, d, p)?;
    let (kernel_order, r) = sl.div_rem(group.order());
    assert!(r.is_zero(), "PSL order divides SL order");
    let labels = data
        .points
        .iter()
        .map(|v| {
            let cs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("<{}>", cs.join(","))
        })
        .collect();
    data.action = GroupAction {
        group,
        labels,
        kind: ActionKind::Projective,
        name: format!("PSL_{d}({p}) on {count} projective points"),
        kernel_order,
    };
    Ok(data)
}

/// G acting on the right cosets of ⟨H⟩ by right multiplication. Points are
/// canonical coset representatives (breadth-first from the trivial coset).
/// The stored group is the faithful image; the kernel order is reported.
pub struct CosetAction {
    pub action: GroupAction,
    pub reps: Vec<Permutation>,
    index: HashMap<Vec<u32>, u32>,
    pub subgroup_order: BigUint,
}

impl CosetAction {
    /// Permutation image of an ambient-group element on the cosets.
    pub fn image_of(&self, g: &Permutation, h: &PermGroup) -> Result<Permutation> {
        let images = self
            .reps
            .iter()
            .map(|r| {
                let key = h.min_coset_rep(&r.then(g));
                self.index
                    .get(key.images())
                    .copied()
                    .ok_or(Error::NotAMember)
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Permutation::from_images(images)?)
    }
}

/// fix(g, G/H) by direct counting over the coset enumeration, without
/// building the permutation image or its chain: a coset Hr is fixed iff
/// r·g·r⁻¹ ∈ H.
pub fn coset_fix_count(
    g_ambient: &PermGroup,
    h: &PermGroup,
    g: &Permutation,
    index_cap: u64,
) -> Result<u64> {
    if !g_ambient.contains_all(h.generators()) {
        return Err(Error::NotASubgroup);
    }
    if !g_ambient.contains(g) {
        return Err(Error::NotAMember);
    }
    let (index_big, rem) = g_ambient.order().div_rem(h.order());
    assert!(rem.is_zero(), "subgroup order divides group order");
    let index = index_big
        .to_u64()
        .filter(|&i| i <= index_cap)
        .ok_or(Error::CapExceeded {
            what: "coset index",
            need: index_big.to_u128().unwrap_or(u128::MAX),
            cap: index_cap as u128,
        })?;
    let start = h.min_coset_rep(&Permutation::identity(g_ambient.degree()));
    let mut reps = vec![start.clone()];
    let mut seen: HashMap<Vec<u32>, u32> = HashMap::new();
    seen.insert(start.images().to_vec(), 0);
    let mut head = 0;
    let mut fixed = 0u64;
    while head < reps.len() {
        let r = reps[head].clone();
        head += 1;
        if h.contains(&r.then(g).then(&r.inverse())) {
            fixed += 1;
        }
        for gen in g_ambient.generators() {
            let key = h.min_coset_rep(&r.then(gen));
            if !seen.contains_key(key.images()) {
                seen.insert(key.images().to_vec(), reps.len() as u32);
                reps.push(key);
            }
        }
    }
    assert_eq!(reps.len() as u64, index, "coset enumeration count");
    Ok(fixed)
}

pub fn coset_action(g: &PermGroup, h: &PermGroup, index_cap: u64) -> Result<CosetAction> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch(g.degree(), h.degree()));
    }
    if !g.contains_all(h.generators()) {
        return Err(Error::NotASubgroup);
    }
    let (index_big, rem) = g.order().div_rem(h.order());
    assert!(rem.is_zero(), "subgroup order divides group order");
    let index = index_big
        .to_u64()
        .filter(|&i| i <= index_cap)
        .ok_or(Error::CapExceeded {
            what: "coset index",
            need: u128::MAX,
            cap: index_cap as u128,
        })?;
    let start = h.min_coset_rep(&Permutation::identity(g.degree()));
    let mut reps = vec![start.clone()];
    let mut key_index: HashMap<Vec<u32>, u32> = HashMap::new();
    key_index.insert(start.images().to_vec(), 0);
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head].clone();
        head += 1;
        for gen in g.generators() {
            let key = h.min_coset_rep(&r.then(gen));
            if !key_index.contains_key(key.images()) {
                key_index.insert(key.images().to_vec(), reps.len() as u32);
                reps.push(key);
            }
        }
    }
    assert_eq!(reps.len() as u64, index, "coset enumeration count");
    let mut action_gens = Vec::new();
    for gen in g.generators() {
        let images: Vec<u32> = reps
            .iter()
            .map(|r| key_index[h.min_coset_rep(&r.then(gen)).images()])
            .collect();
        action_gens.push(Permutation::from_images(images)?);
    }
    let image = PermGroup::from_generators(reps.len(), action_gens)?;
    let (kernel_order, r0) = g.order().div_rem(image.order());
    assert!(r0.is_zero(), "image order divides |G|");
    let labels = reps.iter().map(|r| r.to_string()).collect();
    Ok(CosetAction {
        action: GroupAction {
            group: image,
            labels,
            kind: ActionKind::Coset,
            name: format!("cosets, index {index}"),
            kernel_order,
        },
        reps,
        index: key_index,
        subgroup_order: h.order().clone(),
    })
}
