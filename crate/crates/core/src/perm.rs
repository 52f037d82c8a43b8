//! Permutations on `{0, .., degree-1}` in image-array form.
//!
//! The product convention throughout the crate is left-to-right:
//! `a.then(&b)` is the permutation "apply `a`, then apply `b`".

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n {
                return Err(Error::PointOutOfRange {
                    point: x,
                    degree: n,
                });
            }
            if seen[x as usize] {
                return Err(Error::RepeatedPoint(x));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles; unmentioned points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p as usize >= degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if used[p as usize] {
                    return Err(Error::RepeatedPoint(p));
                }
                used[p as usize] = true;
            }
            if cycle.len() >= 2 {
                for w in 0..cycle.len() {
                    let from = cycle[w];
                    let to = cycle[(w + 1) % cycle.len()];
                    images[from as usize] = to;
                }
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `a.then(&b)` applies `a` first, then `b`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Conjugate of `self` by `by`: apply `by⁻¹`, then `self`, then `by`.
    pub fn conjugate_by(&self, by: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for i in 0..self.images.len() {
            images[by.images[i] as usize] = by.images[self.images[i] as usize];
        }
        Permutation { images }
    }

    pub fn fix_count(&self) -> u32 {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 == x)
            .count() as u32
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start as u32 {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut p = self.images[start];
            while p as usize != start {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.images[p as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, ascending.
    pub fn cycle_type(&self) -> Vec<u32> {
        let mut lens: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        let moved: u32 = lens.iter().sum();
        for _ in 0..(self.images.len() as u32 - moved) {
            lens.push(1);
        }
        lens.sort_unstable();
        lens
    }

    /// Number of cycles including fixed points.
    pub fn cycle_count(&self) -> u32 {
        let nontrivial = self.cycles();
        let moved: u32 = nontrivial.iter().map(|c| c.len() as u32).sum();
        nontrivial.len() as u32 + (self.images.len() as u32 - moved)
    }

    /// sign = (-1)^(degree - number of cycles)
    pub fn is_even(&self) -> bool {
        (self.images.len() as u32 - self.cycle_count()) % 2 == 0
    }

    pub fn order(&self) -> BigUint {
        let mut ord = BigUint::one();
        for c in self.cycles() {
            ord = ord.lcm(&BigUint::from(c.len()));
        }
        ord
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Centralizer order in the full symmetric group, from the cycle type.
    pub fn centralizer_order_sym(&self) -> BigUint {
        let mut mult = std::collections::BTreeMap::new();
        for len in self.cycle_type() {
            *mult.entry(len).or_insert(0u64) += 1;
        }
        let mut out = BigUint::one();
        for (len, m) in mult {
            out *= BigUint::from(len).pow(m as u32);
            for i in 2..=m {
                out *= BigUint::from(i);
            }
        }
        out
    }

    /// Whether the symmetric-group centralizer lies inside the alternating group,
    /// i.e. all cycle lengths (fixed points included) are odd and pairwise distinct.
    pub fn sym_centralizer_is_even(&self) -> bool {
        let t = self.cycle_type();
        t.iter().all(|&l| l % 2 == 1) && t.windows(2).all(|w| w[0] != w[1])
    }

    /// Centralizer order in the natural alternating group (`self` must be even).
    pub fn centralizer_order_alt(&self) -> BigUint {
        let full = self.centralizer_order_sym();
        if self.sym_centralizer_is_even() {
            full
        } else {
            full / BigUint::from(2u32)
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Cycle notation, 1-based to match the file format.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Orbit of `point` under `gens`, with a transversal: for each orbit point a
/// permutation in the generated group mapping `point` to it. BFS discovery
/// order, deterministic in the generator order.
pub fn orbit_with_transversal(
    gens: &[Permutation],
    point: u32,
    degree: usize,
) -> Result<(Vec<u32>, Vec<Option<Permutation>>)> {
    if point as usize >= degree {
        return Err(Error::PointOutOfRange { point, degree });
    }
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(g.degree(), degree));
        }
    }
    let mut trans: Vec<Option<Permutation>> = vec![None; degree];
    trans[point as usize] = Some(Permutation::identity(degree));
    let mut orbit = vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let p = orbit[head];
        head += 1;
        for g in gens {
            let q = g.apply(p);
            if trans[q as usize].is_none() {
                let rep = trans[p as usize].as_ref().unwrap().then(g);
                trans[q as usize] = Some(rep);
                orbit.push(q);
            }
        }
    }
    Ok((orbit, trans))
}

/// Orbit as a plain point set (discovery order).
pub fn orbit(gens: &[Permutation], point: u32, degree: usize) -> Result<Vec<u32>> {
    Ok(orbit_with_transversal(gens, point, degree)?.0)
}

/// Orbit of `point` with, for each orbit point, a word in the generators
/// (indices into `gens`, applied left to right) mapping `point` to it.
pub fn orbit_with_words(
    gens: &[Permutation],
    point: u32,
    degree: usize,
) -> Result<(Vec<u32>, Vec<Option<Vec<usize>>>)> {
    if point as usize >= degree {
        return Err(Error::PointOutOfRange { point, degree });
    }
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(g.degree(), degree));
        }
    }
    let mut words: Vec<Option<Vec<usize>>> = vec![None; degree];
    words[point as usize] = Some(Vec::new());
    let mut orbit = vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let p = orbit[head];
        head += 1;
        for (gi, g) in gens.iter().enumerate() {
            let q = g.apply(p);
            if words[q as usize].is_none() {
                let mut w = words[p as usize].clone().unwrap();
                w.push(gi);
                words[q as usize] = Some(w);
                orbit.push(q);
            }
        }
    }
    Ok((orbit, words))
}
