//! Dense linear algebra and polynomial arithmetic over prime fields.
//!
//! Everything is exact modular arithmetic on machine words; primes are
//! expected to be small (word-sized), matrices desk-scale.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

fn normalize(v: i64, p: u64) -> u64 {
    let m = v.rem_euclid(p as i64);
    m as u64
}

pub fn is_prime_u64(n: u64) -> bool {
    crate::bounds::is_prime_u128(n as u128)
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidParam(format!("{p} is not prime")));
    }
    Ok(())
}

/// Dense matrix over F_p, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixFp {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<u64>,
}

impl MatrixFp {
    pub fn new(p: u64, rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidParam(format!(
                "matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(MatrixFp {
            p,
            rows,
            cols,
            entries: entries.into_iter().map(|v| normalize(v, p)).collect(),
        })
    }

    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        MatrixFp {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.p;
    }

    pub fn mul(&self, other: &MatrixFp) -> MatrixFp {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = MatrixFp::zero(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, (cur + a * other.get(k, j)) % self.p);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &MatrixFp) -> MatrixFp {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = (self.entries[i] + self.p - other.entries[i]) % self.p;
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> MatrixFp {
        assert_eq!(self.rows, self.cols);
        let mut acc = MatrixFp::identity(self.p, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn apply_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = 0u64;
                for j in 0..self.cols {
                    s = (s + self.get(i, j) * v[j]) % self.p;
                }
                s
            })
            .collect()
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let p = self.p;
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| m.get(r, col) != 0);
            let Some(pr) = pivot else { continue };
            // swap rows
            for c in 0..m.cols {
                let tmp = m.get(rank, c);
                m.set(rank, c, m.get(pr, c));
                m.set(pr, c, tmp);
            }
            let inv = mod_inverse(m.get(rank, col), p);
            for c in 0..m.cols {
                m.set(rank, c, m.get(rank, c) * inv % p);
            }
            for r in 0..m.rows {
                if r != rank && m.get(r, col) != 0 {
                    let f = m.get(r, col);
                    for c in 0..m.cols {
                        let v = (m.get(r, c) + p * p - f * m.get(rank, c) % p) % p;
                        m.set(r, c, v);
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Companion matrix of the monic polynomial x^d - b_{d-1} x^{d-1} - … - b_0:
    /// subdiagonal of ones, last column (b_0, …, b_{d-1}).
    pub fn companion(p: u64, back: &[u64]) -> MatrixFp {
        let d = back.len();
        let mut m = MatrixFp::zero(p, d, d);
        for i in 1..d {
            m.set(i, i - 1, 1);
        }
        for i in 0..d {
            m.set(i, d - 1, back[i] % p);
        }
        m
    }
}

/// dim of the fixed space of a square matrix: n - rank(M - I).
pub fn fixed_space_dim(m: &MatrixFp) -> Result<usize> {
    if m.rows != m.cols {
        return Err(Error::InvalidParam(
            "fixed_space_dim needs a square matrix".into(),
        ));
    }
    let diff = m.sub(&MatrixFp::identity(m.p, m.rows));
    Ok(m.rows - diff.rank())
}

pub fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime
    mod_pow(a, p - 2, p)
}

/// Polynomial over F_p, dense ascending coefficients, no trailing zeros
/// (the zero polynomial has an empty coefficient vector).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyFp {
    pub p: u64,
    coeffs: Vec<u64>,
}

impl PolyFp {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFp { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        PolyFp {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        PolyFp::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        PolyFp::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &PolyFp) -> PolyFp {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (self.coeff(i) + other.coeff(i)) % self.p;
        }
        PolyFp::new(self.p, out)
    }

    pub fn sub(&self, other: &PolyFp) -> PolyFp {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (self.coeff(i) + self.p - other.coeff(i)) % self.p;
        }
        PolyFp::new(self.p, out)
    }

    pub fn mul(&self, other: &PolyFp) -> PolyFp {
        if self.is_zero() || other.is_zero() {
            return PolyFp::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        PolyFp::new(self.p, out)
    }

    /// Division with remainder by a nonzero divisor.
    pub fn div_rem(&self, div: &PolyFp) -> (PolyFp, PolyFp) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = div.coeffs.len() - 1;
        if self.coeffs.len() < div.coeffs.len() {
            return (PolyFp::zero(p), self.clone());
        }
        let lead_inv = mod_inverse(*div.coeffs.last().unwrap(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * lead_inv % p;
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (k, &dc) in div.coeffs.iter().enumerate() {
                rem[i - dd + k] = (rem[i - dd + k] + p - c * dc % p) % p;
            }
        }
        (PolyFp::new(p, quot), PolyFp::new(p, rem))
    }

    pub fn rem(&self, div: &PolyFp) -> PolyFp {
        self.div_rem(div).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &PolyFp) -> PolyFp {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = mod_inverse(*a.coeffs.last().unwrap(), a.p);
        let coeffs = a.coeffs.iter().map(|&c| c * inv % a.p).collect();
        PolyFp::new(a.p, coeffs)
    }

    pub fn derivative(&self) -> PolyFp {
        if self.coeffs.len() <= 1 {
            return PolyFp::zero(self.p);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * (i as u64 % self.p) % self.p)
            .collect();
        PolyFp::new(self.p, coeffs)
    }

    /// x^e mod self (self must be nonconstant).
    pub fn x_pow_mod(&self, e: &num_bigint::BigUint) -> PolyFp {
        let p = self.p;
        let mut acc = PolyFp::one(p);
        let mut base = PolyFp::x(p).rem(self);
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base).rem(self);
            }
            base = base.mul(&base).rem(self);
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % self.p;
        }
        acc
    }
}

/// Multiplicative order of x in F_p[x]/(f) equals p^d - 1, tested by the
/// standard divisor criterion on a factorization of p^d - 1.
fn x_has_full_order(f: &PolyFp, d: u32) -> bool {
    if f.coeff(0) == 0 {
        return false;
    }
    let p = f.p;
    let n: u64 = p.pow(d) - 1;
    let big = num_bigint::BigUint::from(n);
    if f.x_pow_mod(&big) != PolyFp::one(p) {
        return false;
    }
    for q in crate::bounds::prime_factors_u64(n) {
        let sub = num_bigint::BigUint::from(n / q);
        if f.x_pow_mod(&sub) == PolyFp::one(p) {
            return false;
        }
    }
    true
}

/// First (in the deterministic ascending scan) monic degree-d polynomial
/// x^d - (b_{d-1} x^{d-1} + … + b_0) over F_p whose companion matrix has
/// multiplicative order p^d - 1. The scan runs over the vector (b_0, …,
/// b_{d-1}) read as an ascending base-p counter.
pub fn primitive_poly(d: u32, p: u64) -> Result<PolyFp> {
    if d == 0 {
        return Err(Error::InvalidParam("primitive_poly needs d >= 1".into()));
    }
    require_prime(p)?;
    let pd = (p as u128).pow(d);
    if pd > (1 << 31) {
        return Err(Error::ScaleCap(format!("p^d = {pd} exceeds 2^31")));
    }
    let count = pd as u64;
    let mut back = vec![0u64; d as usize];
    for code in 0..count {
        let mut c = code;
        for b in back.iter_mut() {
            *b = c % p;
            c /= p;
        }
        // f = x^d - sum b_i x^i
        let mut coeffs: Vec<u64> = back.iter().map(|&b| (p - b % p) % p).collect();
        coeffs.push(1);
        let f = PolyFp::new(p, coeffs);
        if x_has_full_order(&f, d) {
            return Ok(f);
        }
    }
    Err(Error::InvalidParam(format!(
        "no primitive polynomial found for d={d}, p={p}"
    )))
}

/// The companion matrix of `primitive_poly(d, p)`, a Singer element of GL_d(p).
pub fn singer_matrix(d: u32, p: u64) -> Result<MatrixFp> {
    let f = primitive_poly(d, p)?;
    let back: Vec<u64> = (0..d as usize).map(|i| (p - f.coeff(i)) % p).collect();
    Ok(MatrixFp::companion(p, &back))
}

/// True iff every 1-dimensional subspace spins up to the full space under the
/// given generators (an exhaustive irreducibility test).
pub fn spin_irreducible(gens: &[MatrixFp], cap: u64) -> Result<bool> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidParam("spin_irreducible needs at least one matrix".into()))?;
    let (p, n) = (first.p, first.rows);
    for g in gens {
        if g.rows != n || g.cols != n || g.p != p {
            return Err(Error::InvalidParam(
                "spin_irreducible needs square matrices of one shape".into(),
            ));
        }
    }
    let space = (p as u128).pow(n as u32);
    if space > cap as u128 {
        return Err(Error::ScaleCap(format!(
            "p^dim = {space} exceeds cap {cap}"
        )));
    }
    // enumerate normalized representatives: first nonzero coordinate = 1
    let vec_of = |mut code: u64| -> Vec<u64> {
        let mut v = vec![0u64; n];
        for slot in v.iter_mut() {
            *slot = code % p;
            code /= p;
        }
        v
    };
    for code in 1..space as u64 {
        let v = vec_of(code);
        let lead = v.iter().find(|&&c| c != 0).copied().unwrap();
        if lead != 1 {
            continue;
        }
        if spin_dimension(gens, &v, p, n) != n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the smallest invariant subspace containing `v`.
fn spin_dimension(gens: &[MatrixFp], v: &[u64], p: u64, n: usize) -> usize {
    // row-reduced basis; reduce new vectors against it
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let reduce =
        |mut w: Vec<u64>, basis: &Vec<Vec<u64>>, pivots: &Vec<usize>| -> Option<Vec<u64>> {
            for (b, &piv) in basis.iter().zip(pivots.iter()) {
                if w[piv] != 0 {
                    let f = w[piv];
                    for j in 0..n {
                        w[j] = (w[j] + p * p - f * b[j] % p) % p;
                    }
                }
            }
            let piv = w.iter().position(|&c| c != 0)?;
            let inv = mod_inverse(w[piv], p);
            for c in w.iter_mut() {
                *c = *c * inv % p;
            }
            Some(w)
        };
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        if let Some(nw) = reduce(w, &basis, &pivots) {
            let piv = nw.iter().position(|&c| c != 0).unwrap();
            for g in gens {
                queue.push(g.apply_vec(&nw));
            }
            basis.push(nw);
            pivots.push(piv);
            if basis.len() == n {
                return n;
            }
        }
    }
    basis.len()
}

/// Reduce an integer polynomial mod p. Errors if the reduction is zero.
pub fn reduce_int_poly(coeffs: &[BigInt], p: u64) -> Result<PolyFp> {
    let pp = BigInt::from(p);
    let reduced: Vec<u64> = coeffs
        .iter()
        .map(|c| {
            let mut r = c % &pp;
            if r.is_negative() {
                r += &pp;
            }
            r.to_u64().unwrap()
        })
        .collect();
    let f = PolyFp::new(p, reduced);
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f)
}

/// Number of distinct roots of f in F_p: deg gcd(x^p - x mod f̄, f̄).
pub fn poly_distinct_roots_mod_p(coeffs: &[BigInt], p: u64) -> Result<usize> {
    let f = reduce_int_poly(coeffs, p)?;
    match f.degree() {
        None => unreachable!("reduce_int_poly rejects zero"),
        Some(0) => Ok(0),
        Some(_) => {
            let xp = f.x_pow_mod(&num_bigint::BigUint::from(p));
            let xp_minus_x = xp.sub(&PolyFp::x(p).rem(&f));
            let g = f.gcd(&xp_minus_x);
            Ok(g.degree().unwrap_or(0))
        }
    }
}
