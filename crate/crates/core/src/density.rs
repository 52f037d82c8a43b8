//! Root counts of an integer polynomial modulo primes: discriminant and
//! ramified-prime exclusion, a cheap irreducibility certificate, and the
//! density scan counting primes where f has between 1 and n^(1/3) distinct
//! roots (integer cube test, never floating point).

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{poly_distinct_roots_mod_p, reduce_int_poly, PolyFp};

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn constant(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::new(Vec::new());
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_rational(&self, x: &Ratio<BigInt>) -> Ratio<BigInt> {
        let mut acc = Ratio::from_integer(BigInt::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Ratio::from_integer(c.clone());
        }
        acc
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub_poly(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::from_i64(&[1]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Render as a human-readable expression in x.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => format!("{c}"),
                1 if c.is_one() => "x".into(),
                1 if *c == BigInt::from(-1) => "-x".into(),
                1 => format!("{c}*x"),
                _ if c.is_one() => format!("x^{i}"),
                _ if *c == BigInt::from(-1) => format!("-x^{i}"),
                _ => format!("{c}*x^{i}"),
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (i, t) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(t);
            } else if let Some(stripped) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Resultant of f and g via the Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Ok(f.leading().pow(m as u32));
    }
    if m == 0 {
        return Ok(g.leading().pow(n as u32));
    }
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for (i, c) in f.coeffs.iter().enumerate() {
            mat[row][row + n - i] = c.clone();
        }
    }
    for row in 0..n {
        for (i, c) in g.coeffs.iter().enumerate() {
            mat[m + row][row + m - i] = c.clone();
        }
    }
    Ok(bareiss_determinant(mat))
}

/// Discriminant with the standard sign:
/// (-1)^(n(n-1)/2) · resultant(f, f') / lc(f).
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::InvalidParam("discriminant needs degree >= 1".into()));
    }
    let res = resultant(f, &f.derivative())?;
    let (q, r) = res.div_rem(f.leading());
    if !r.is_zero() {
        return Err(Error::InvalidParam(
            "resultant not divisible by the leading coefficient".into(),
        ));
    }
    Ok(if (n * (n - 1) / 2) % 2 == 0 { q } else { -q })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    /// irreducible over Q because it is irreducible mod the named prime
    Certified { prime: u64 },
    /// no certificate found among small primes (the scan may still run)
    Uncertified { has_rational_root: bool },
}

fn irreducible_mod_p(fbar: &PolyFp) -> bool {
    let d = match fbar.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let p = fbar.p;
    // squarefree?
    let deriv = fbar.derivative();
    if deriv.is_zero() || fbar.gcd(&deriv).degree() != Some(0) {
        return false;
    }
    // no factor of degree <= d/2: gcd(x^(p^i) - x, f) trivial
    let mut frob = fbar.x_pow_mod(&BigUint::from(p));
    for _ in 1..=d / 2 {
        let g = fbar.gcd(&frob.sub(&PolyFp::x(p).rem(fbar)));
        if g.degree() != Some(0) {
            return false;
        }
        // next Frobenius power: raise each as x^(p^(i+1)) = (x^(p^i))^p
        frob = poly_pow_mod(&frob, p, fbar);
    }
    true
}

fn poly_pow_mod(base: &PolyFp, mut e: u64, modulus: &PolyFp) -> PolyFp {
    let p = modulus.p;
    let mut acc = PolyFp::one(p);
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).rem(modulus);
        }
        b = b.mul(&b).rem(modulus);
        e >>= 1;
    }
    acc
}

fn has_rational_root(f: &IntPoly) -> bool {
    // exact rational-root test over divisor pairs of the constant and leading
    // coefficients; desk-scale coefficients only
    let c0 = f.constant();
    if c0.is_zero() {
        return true; // root 0
    }
    let (Some(c0u), Some(lcu)) = (c0.magnitude().to_u64(), f.leading().magnitude().to_u64()) else {
        return false;
    };
    let nums = crate::bounds::divisors(c0u);
    let dens = crate::bounds::divisors(lcu);
    for a in &nums {
        for b in &dens {
            for sign in [1i64, -1] {
                let cand = Ratio::new(BigInt::from(*a as i64 * sign), BigInt::from(*b as i64));
                if f.eval_rational(&cand).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Sufficient-condition certificate: f is irreducible over Q if it stays
/// irreducible mod some prime p <= 100 not dividing the leading coefficient.
pub fn irreducibility_certificate(f: &IntPoly) -> Result<IrreducibilityVerdict> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d < 2 {
        return Err(Error::InvalidParam(
            "irreducibility certificate needs degree >= 2".into(),
        ));
    }
    for p in sieve_primes(100) {
        if (f.leading() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fbar = match reduce_int_poly(f.coeffs(), p) {
            Ok(fb) => fb,
            Err(_) => continue,
        };
        if fbar.degree() != Some(d) {
            continue;
        }
        if irreducible_mod_p(&fbar) {
            return Ok(IrreducibilityVerdict::Certified { prime: p });
        }
    }
    Ok(IrreducibilityVerdict::Uncertified {
        has_rational_root: has_rational_root(f),
    })
}

/// Primes up to and including `bound` (simple sieve).
pub fn sieve_primes(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut is_comp = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !is_comp[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                is_comp[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Per-prime root-count histogram over a prime slice: used directly and by
/// job-sharded scans (results merge by addition, order-independent).
pub fn root_count_partial(
    f: &IntPoly,
    primes: &[u64],
    excluded_divisor: &BigInt,
) -> Result<(BTreeMap<u32, u64>, Vec<u64>)> {
    let mut histogram = BTreeMap::new();
    let mut excluded = Vec::new();
    for &p in primes {
        if (excluded_divisor % BigInt::from(p)).is_zero() {
            excluded.push(p);
            continue;
        }
        let roots = poly_distinct_roots_mod_p(f.coeffs(), p)? as u32;
        *histogram.entry(roots).or_insert(0u64) += 1;
    }
    Ok((histogram, excluded))
}

/// The density report: root-count histogram over unramified primes up to the
/// bound, the excluded (ramified) primes, the density of primes with
/// 1 <= r and r^3 <= n, and the mean root count.
#[derive(Clone, Debug)]
pub struct DensityReport {
    pub polynomial: String,
    pub degree: usize,
    pub prime_bound: u64,
    pub discriminant: BigInt,
    pub histogram: BTreeMap<u32, u64>,
    pub excluded: Vec<u64>,
    pub primes_counted: u64,
    pub qualifying: u64,
    pub density_estimate: f64,
    pub mean_root_count: f64,
    pub irreducibility: IrreducibilityVerdict,
}

pub const DEFAULT_PRIME_BOUND_CAP: u64 = 10_000_000;

pub fn density_scan(f: &IntPoly, prime_bound: u64) -> Result<DensityReport> {
    density_scan_jobs(f, prime_bound, 1)
}

/// Sharded scan: primes are striped over `jobs` worker threads; the merged
/// result is independent of the job count.
pub fn density_scan_jobs(f: &IntPoly, prime_bound: u64, jobs: usize) -> Result<DensityReport> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return Err(Error::InvalidParam(
            "density scan needs a nonconstant polynomial".into(),
        ));
    }
    if prime_bound > DEFAULT_PRIME_BOUND_CAP {
        return Err(Error::CapExceeded {
            what: "prime bound",
            need: prime_bound as u128,
            cap: DEFAULT_PRIME_BOUND_CAP as u128,
        });
    }
    let disc = discriminant(f)?;
    let excluded_divisor = f.leading() * &disc;
    if excluded_divisor.is_zero() {
        // repeated factors: every prime would be "ramified"
        return Err(Error::InvalidParam(
            "polynomial has vanishing discriminant (repeated factor)".into(),
        ));
    }
    let primes = sieve_primes(prime_bound);
    let jobs = jobs.max(1);
    let mut histogram: BTreeMap<u32, u64> = BTreeMap::new();
    let mut excluded: Vec<u64> = Vec::new();
    if jobs == 1 {
        let (h, e) = root_count_partial(f, &primes, &excluded_divisor)?;
        histogram = h;
        excluded = e;
    } else {
        let chunks: Vec<Vec<u64>> = (0..jobs)
            .map(|j| primes.iter().copied().skip(j).step_by(jobs).collect())
            .collect();
        let results: Vec<Result<(BTreeMap<u32, u64>, Vec<u64>)>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|chunk| {
                    let fref = &f;
                    let dref = &excluded_divisor;
                    scope.spawn(move || root_count_partial(fref, chunk, dref))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        for r in results {
            let (h, e) = r?;
            for (k, v) in h {
                *histogram.entry(k).or_insert(0) += v;
            }
            excluded.extend(e);
        }
        excluded.sort_unstable();
    }
    let primes_counted: u64 = histogram.values().sum();
    assert_eq!(
        primes_counted + excluded.len() as u64,
        primes.len() as u64,
        "histogram plus exclusions account for every prime"
    );
    let qualifying: u64 = histogram
        .iter()
        .filter(|(&r, _)| r >= 1 && (r as u64).pow(3) <= degree as u64)
        .map(|(_, &c)| c)
        .sum();
    let total_roots: u64 = histogram.iter().map(|(&r, &c)| r as u64 * c).sum();
    let density_estimate = if primes_counted == 0 {
        0.0
    } else {
        qualifying as f64 / primes_counted as f64
    };
    let mean_root_count = if primes_counted == 0 {
        0.0
    } else {
        total_roots as f64 / primes_counted as f64
    };
    Ok(DensityReport {
        polynomial: f.display(),
        degree,
        prime_bound,
        discriminant: disc,
        histogram,
        excluded,
        primes_counted,
        qualifying,
        density_estimate,
        mean_root_count,
        irreducibility: irreducibility_certificate(f)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn discriminants() {
        assert_eq!(
            discriminant(&poly(&[-2, 0, 0, 1])).unwrap(),
            BigInt::from(-108)
        );
        assert_eq!(discriminant(&poly(&[-1, 0, 1])).unwrap(), BigInt::from(4));
        assert_eq!(discriminant(&poly(&[1, 0, 1])).unwrap(), BigInt::from(-4));
        // x^4 - x - 1: disc = -283
        assert_eq!(
            discriminant(&poly(&[-1, -1, 0, 0, 1])).unwrap(),
            BigInt::from(-283)
        );
        assert_eq!(
            discriminant(&poly(&[1, 0, 0, 0, 1])).unwrap(),
            BigInt::from(256)
        );
    }

    #[test]
    fn irreducibility_verdicts() {
        match irreducibility_certificate(&poly(&[-2, 0, 0, 1])).unwrap() {
            IrreducibilityVerdict::Certified { .. } => {}
            v => panic!("x^3-2 should be certified, got {v:?}"),
        }
        // x^4 + 1 is reducible mod every prime
        assert_eq!(
            irreducibility_certificate(&poly(&[1, 0, 0, 0, 1])).unwrap(),
            IrreducibilityVerdict::Uncertified {
                has_rational_root: false
            }
        );
        assert_eq!(
            irreducibility_certificate(&poly(&[-1, 0, 1])).unwrap(),
            IrreducibilityVerdict::Uncertified {
                has_rational_root: true
            }
        );
    }

    #[test]
    fn density_small_bound_sanity() {
        let r = density_scan(&poly(&[-2, 0, 0, 1]), 1000).unwrap();
        // primes counted + ramified (2, 3) = pi(1000)
        assert_eq!(r.primes_counted + r.excluded.len() as u64, 168);
        assert_eq!(r.excluded, vec![2, 3]);
        // histogram keys within 0..=degree
        assert!(r.histogram.keys().all(|&k| k <= 3));
    }

    #[test]
    fn density_x4_plus_1_counts_zero() {
        let r = density_scan(&poly(&[1, 0, 0, 0, 1]), 10_000).unwrap();
        assert_eq!(r.qualifying, 0);
        // root counts only 0 or 4 away from the ramified prime 2
        assert!(r.histogram.keys().all(|&k| k == 0 || k == 4));
    }

    #[test]
    fn sharded_scan_matches_sequential() {
        let f = poly(&[-1, -1, 0, 0, 1]);
        let a = density_scan_jobs(&f, 20_000, 1).unwrap();
        let b = density_scan_jobs(&f, 20_000, 4).unwrap();
        assert_eq!(a.histogram, b.histogram);
        assert_eq!(a.excluded, b.excluded);
        assert_eq!(a.qualifying, b.qualifying);
    }

    #[test]
    fn display_forms() {
        assert_eq!(poly(&[-2, 0, 0, 1]).display(), "x^3 - 2");
        assert_eq!(poly(&[1, 2, 3]).display(), "3*x^2 + 2*x + 1");
        assert_eq!(poly(&[-1, -1, 0, 0, 1]).display(), "x^4 - x - 1");
    }
}
