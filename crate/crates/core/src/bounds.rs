//! Number-theoretic and combinatorial bound machinery: Euler phi, cyclotomic
//! values, the primitive-prime-divisor product Φ*_m(q), classical group order
//! formulas with sandwich estimates, closed-form optimization maxima with
//! integer brute-force oracles, and the transpose-partition centralizer bound.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn euler_phi(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

pub fn moebius(mut n: u64) -> i8 {
    let mut mu = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Distinct prime factors of a u64, ascending (plain trial division).
pub fn prime_factors_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mulmod_u128(a: u128, b: u128, m: u128) -> u128 {
    if let (Some(aa), Some(bb)) = (a.to_u64(), b.to_u64()) {
        if m <= u64::MAX as u128 {
            return (aa as u128 * bb as u128) % m;
        }
    }
    // double-and-add for wide moduli
    let mut result = 0u128;
    let mut a = a % m;
    let mut b = b % m;
    while b > 0 {
        if b & 1 == 1 {
            result = (result + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    result
}

fn powmod_u128(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1u128 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_u128(acc, b, m);
        }
        b = mulmod_u128(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the witness set covers all n < 3.3·10^24.
pub fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'outer: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod_u128(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

fn pollard_rho(n: u128, seed: u64) -> u128 {
    let mut rng = crate::rng::SplitMix64::new(seed);
    loop {
        let c = (rng.next_u64() as u128 % (n - 1)) + 1;
        let mut x = rng.next_u64() as u128 % n;
        let mut y = x;
        let mut d = 1u128;
        while d == 1 {
            x = (mulmod_u128(x, x, n) + c) % n;
            y = (mulmod_u128(y, y, n) + c) % n;
            y = (mulmod_u128(y, y, n) + c) % n;
            d = gcd_u128(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
}

/// Full factorization of a u128: trial division to 10^6, then Pollard rho
/// with a fixed seed. Returns (prime, exponent) pairs, primes ascending.
pub fn factor_u128(mut n: u128) -> Vec<(u128, u32)> {
    let mut out: Vec<(u128, u32)> = Vec::new();
    let push = |p: u128, out: &mut Vec<(u128, u32)>| {
        if let Some(e) = out.iter_mut().find(|(q, _)| *q == p) {
            e.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    let mut p = 2u128;
    while p <= 1_000_000 && p * p <= n {
        while n % p == 0 {
            push(p, &mut out);
            n /= p;
        }
        p += 1;
    }
    let mut stack = Vec::new();
    if n > 1 {
        stack.push(n);
    }
    while let Some(m) = stack.pop() {
        if is_prime_u128(m) {
            push(m, &mut out);
        } else {
            let d = pollard_rho(m, 0x5eed);
            stack.push(d);
            stack.push(m / d);
        }
    }
    out.sort_unstable();
    out
}

/// Φ_m(q) in exact arithmetic, via Π_{d|m} (q^d - 1)^{μ(m/d)}.
pub fn cyclotomic_value(m: u32, q: u64) -> Result<BigUint> {
    if m == 0 || q < 2 {
        return Err(Error::InvalidParam(
            "cyclotomic_value needs m >= 1, q >= 2".into(),
        ));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let qa = BigUint::from(q);
    for d in divisors(m as u64) {
        let term = qa.pow(d as u32) - BigUint::one();
        match moebius(m as u64 / d) {
            1 => num *= &term,
            -1 => den *= &term,
            _ => {}
        }
    }
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "cyclotomic product must divide exactly");
    Ok(quot)
}

/// Product of all primitive prime divisors of q^m - 1, with multiplicity:
/// the part of q^m - 1 coprime to every q^i - 1 with i < m.
#[derive(Clone, Debug)]
pub struct PpdResult {
    pub m: u32,
    pub q: u64,
    pub value: BigUint,
    pub primes: Vec<u128>,
    pub exceptional: bool,
    pub factorization_complete: bool,
}

pub fn ppd_star(m: u32, q: u64) -> Result<PpdResult> {
    if m < 2 || q < 2 {
        return Err(Error::InvalidParam("ppd_star needs m >= 2, q >= 2".into()));
    }
    let qa = BigUint::from(q);
    let mut value = qa.pow(m) - BigUint::one();
    for i in 1..m {
        let lower = qa.pow(i) - BigUint::one();
        loop {
            let g = value.gcd(&lower);
            if g.is_one() {
                break;
            }
            value /= g;
        }
    }
    let exceptional = value.is_one();
    let (primes, complete) = match value.to_u128() {
        Some(v) => {
            let primes = factor_u128(v).into_iter().map(|(p, _)| p).collect();
            (primes, true)
        }
        None => (Vec::new(), false),
    };
    Ok(PpdResult {
        m,
        q,
        value,
        primes,
        exceptional,
        factorization_complete: complete,
    })
}

/// True exactly on the Zsigmondy exceptions: (m,q) = (6,2), or m = 2 with
/// q + 1 a power of two.
pub fn zsigmondy_exception(m: u32, q: u64) -> bool {
    (m == 6 && q == 2) || (m == 2 && (q + 1).is_power_of_two())
}

// ---------------------------------------------------------------------------
// classical group orders and the sandwich estimates
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalFamily {
    Gl,
    Sl,
    Gu,
    Su,
    Sp,
    SoOdd,
    OPlus,
    OMinus,
}

impl ClassicalFamily {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Some(Self::Gl),
            "SL" => Some(Self::Sl),
            "GU" => Some(Self::Gu),
            "SU" => Some(Self::Su),
            "SP" => Some(Self::Sp),
            "SO_ODD" | "SO" => Some(Self::SoOdd),
            "O_PLUS" | "O+" => Some(Self::OPlus),
            "O_MINUS" | "O-" => Some(Self::OMinus),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Gl => "GL",
            Self::Sl => "SL",
            Self::Gu => "GU",
            Self::Su => "SU",
            Self::Sp => "Sp",
            Self::SoOdd => "SO_odd",
            Self::OPlus => "O+",
            Self::OMinus => "O-",
        }
    }
}

/// Exact order of the classical group with dimension subscript `n` over F_q.
pub fn classical_order(family: ClassicalFamily, n: u32, q: u64) -> Result<BigUint> {
    let qa = BigUint::from(q);
    let gl = |n: u32| -> BigUint {
        let mut out = qa.pow(n * (n - 1) / 2);
        for i in 1..=n {
            out *= qa.pow(i) - BigUint::one();
        }
        out
    };
    match family {
        ClassicalFamily::Gl => {
            if n < 1 {
                return Err(Error::InvalidParam("GL_n needs n >= 1".into()));
            }
            Ok(gl(n))
        }
        ClassicalFamily::Sl => {
            if n < 1 {
                return Err(Error::InvalidParam("SL_n needs n >= 1".into()));
            }
            Ok(gl(n) / (qa.clone() - BigUint::one()))
        }
        ClassicalFamily::Gu | ClassicalFamily::Su => {
            if n < 1 {
                return Err(Error::InvalidParam("GU_n needs n >= 1".into()));
            }
            let mut out = qa.pow(n * (n - 1) / 2);
            for i in 1..=n {
                if i % 2 == 0 {
                    out *= qa.pow(i) - BigUint::one();
                } else {
                    out *= qa.pow(i) + BigUint::one();
                }
            }
            if family == ClassicalFamily::Su {
                out /= qa.clone() + BigUint::one();
            }
            Ok(out)
        }
        ClassicalFamily::Sp | ClassicalFamily::SoOdd => {
            let m = match family {
                ClassicalFamily::Sp => {
                    if n < 2 || n % 2 != 0 {
                        return Err(Error::InvalidParam("Sp_n needs even n >= 2".into()));
                    }
                    n / 2
                }
                _ => {
                    if n < 3 || n % 2 != 1 {
                        return Err(Error::InvalidParam("SO_n (odd) needs odd n >= 3".into()));
                    }
                    (n - 1) / 2
                }
            };
            let mut out = qa.pow(m * m);
            for i in 1..=m {
                out *= qa.pow(2 * i) - BigUint::one();
            }
            Ok(out)
        }
        ClassicalFamily::OPlus | ClassicalFamily::OMinus => {
            if n < 2 || n % 2 != 0 {
                return Err(Error::InvalidParam("O^±_n needs even n >= 2".into()));
            }
            let m = n / 2;
            let mut out = BigUint::from(2u32) * qa.pow(m * (m - 1));
            out *= if family == ClassicalFamily::OPlus {
                qa.pow(m) - BigUint::one()
            } else {
                qa.pow(m) + BigUint::one()
            };
            for i in 1..=m.saturating_sub(1) {
                out *= qa.pow(2 * i) - BigUint::one();
            }
            Ok(out)
        }
    }
}

#[derive(Clone, Debug)]
pub struct SandwichReport {
    pub family: ClassicalFamily,
    pub n: u32,
    pub q: u64,
    pub order: BigUint,
    /// labelled inequality checks, in display order
    pub checks: Vec<(String, bool)>,
    /// the documented O^-_2(2) exclusion
    pub exception: bool,
    pub all_hold: bool,
}

/// Exact order plus verification of each inequality in the order-sandwich
/// estimates, by integer cross-multiplication.
pub fn classical_order_report(family: ClassicalFamily, n: u32, q: u64) -> Result<SandwichReport> {
    let order = classical_order(family, n, q)?;
    let qa = BigUint::from(q);
    let big = |x: u64| BigUint::from(x);
    let mut checks: Vec<(String, bool)> = Vec::new();
    let mut exception = false;
    match family {
        ClassicalFamily::Gl => {
            let e = n * n;
            checks.push((
                "q^(n^2-2) < 9q^(n^2)/32".into(),
                big(32) * qa.pow(e - 2) < big(9) * qa.pow(e),
            ));
            checks.push((
                "9q^(n^2)/32 < |GL|".into(),
                big(9) * qa.pow(e) < big(32) * &order,
            ));
            checks.push(("|GL| < q^(n^2)".into(), order < qa.pow(e)));
        }
        ClassicalFamily::Sl => {
            let e = n * n - 1;
            checks.push((
                "q^(n^2-2) < 9q^(n^2-1)/16".into(),
                big(16) * qa.pow(e - 1) < big(9) * qa.pow(e),
            ));
            checks.push((
                "9q^(n^2-1)/16 < |SL|".into(),
                big(9) * qa.pow(e) < big(16) * &order,
            ));
            checks.push(("|SL| < q^(n^2-1)".into(), order < qa.pow(e)));
        }
        ClassicalFamily::Gu => {
            let e = n * n;
            checks.push(("q^(n^2) < |GU|".into(), qa.pow(e) < order));
            checks.push((
                "|GU| <= 1.5 q^(n^2)".into(),
                big(2) * &order <= big(3) * qa.pow(e),
            ));
            checks.push((
                "1.5 q^(n^2) < q^(n^2+1)".into(),
                big(3) * qa.pow(e) < big(2) * qa.pow(e + 1),
            ));
        }
        ClassicalFamily::Su => {
            let e = n * n - 1;
            checks.push((
                "q^(n^2-2) < q^(n^2-1)/1.5".into(),
                big(3) * qa.pow(e - 1) < big(2) * qa.pow(e),
            ));
            checks.push((
                "q^(n^2-1)/1.5 < |SU|".into(),
                big(2) * qa.pow(e) < big(3) * &order,
            ));
            checks.push(("|SU| < q^(n^2-1)".into(), order < qa.pow(e)));
        }
        ClassicalFamily::Sp | ClassicalFamily::SoOdd => {
            let m = if family == ClassicalFamily::Sp {
                n / 2
            } else {
                (n - 1) / 2
            };
            let e = 2 * m * m + m;
            checks.push((
                "q^(2m^2+m-1) < 9q^(2m^2+m)/16".into(),
                big(16) * qa.pow(e - 1) < big(9) * qa.pow(e),
            ));
            checks.push((
                "9q^(2m^2+m)/16 < |G|".into(),
                big(9) * qa.pow(e) < big(16) * &order,
            ));
            checks.push(("|G| < q^(2m^2+m)".into(), order < qa.pow(e)));
        }
        ClassicalFamily::OPlus => {
            let m = n / 2;
            let e = 2 * m * m - m;
            checks.push((
                "q^(2m^2-m-1) < 9q^(2m^2-m)/16".into(),
                big(16) * qa.pow(e - 1) < big(9) * qa.pow(e),
            ));
            checks.push((
                "9q^(2m^2-m)/16 < |O+|".into(),
                big(9) * qa.pow(e) < big(16) * &order,
            ));
            checks.push(("|O+| < 2q^(2m^2-m)".into(), order < big(2) * qa.pow(e)));
        }
        ClassicalFamily::OMinus => {
            let m = n / 2;
            let e = 2 * m * m - m;
            exception = m == 1 && q == 2;
            checks.push((
                "q^(2m^2-m) < 9q^(2m^2-m)/8".into(),
                big(8) * qa.pow(e) < big(9) * qa.pow(e),
            ));
            checks.push((
                "9q^(2m^2-m)/8 < |O-|".into(),
                big(9) * qa.pow(e) < big(8) * &order,
            ));
            if !exception {
                checks.push(("|O-| <= 2q^(2m^2-m)".into(), order <= big(2) * qa.pow(e)));
                checks.push((
                    "2q^(2m^2-m) <= q^(2m^2-m+1)".into(),
                    big(2) * qa.pow(e) <= qa.pow(e + 1),
                ));
            }
        }
    }
    let all_hold = checks.iter().all(|(_, ok)| *ok);
    Ok(SandwichReport {
        family,
        n,
        q,
        order,
        checks,
        exception,
        all_hold,
    })
}

// ---------------------------------------------------------------------------
// optimization maxima
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptVariant {
    Plain,
    Easier,
    OrthogonalPlus,
    OrthogonalMinus,
}

pub type Rat = Ratio<i64>;

/// Closed-form maximum of the constrained eigenspace-dimension objective.
///
/// Feasible vectors: a_1 ≤ A, every entry 0 or ≥ 1, entries sum to n, and
/// each nonzero value among positions ≥ 2 repeats at least B times there.
/// The objective is Σ a_i² plus, depending on the variant, the count R of
/// nonzero later positions and ±a_1.
pub fn optimization_max(n: u64, a: Rat, b: u64, variant: OptVariant) -> Result<Rat> {
    let nr = Rat::from_integer(n as i64);
    let br = Rat::from_integer(b as i64);
    if b == 0 || b >= n {
        return Err(Error::InvalidParam("need 0 < B < n".into()));
    }
    if a < Rat::one() || a >= nr {
        return Err(Error::InvalidParam("need 1 <= A < n".into()));
    }
    if a + br > nr {
        return Err(Error::InvalidParam("need A + B <= n".into()));
    }
    let two_n = Rat::from_integer(2 * n as i64);
    let hi_cond = match variant {
        OptVariant::Plain | OptVariant::Easier => a * (br + Rat::one()) >= two_n,
        OptVariant::OrthogonalPlus => a * (br + Rat::one()) + br >= two_n,
        OptVariant::OrthogonalMinus => a * (br + Rat::one()) - br >= two_n,
    };
    let value = if hi_cond {
        let tail = (nr - a) * (nr - a) / br;
        match variant {
            OptVariant::Plain => br + a * a + tail,
            OptVariant::Easier => a * a + tail,
            OptVariant::OrthogonalPlus => br + a * a + a + tail,
            OptVariant::OrthogonalMinus => br + a * a - a + tail,
        }
    } else {
        let base = nr * nr / br;
        match variant {
            OptVariant::Easier => base,
            _ => br + base,
        }
    };
    Ok(value)
}

/// Brute-force maximum of the same objective over integer feasible vectors.
/// Exhaustive for the desk-scale sweep (n ≤ 12 or so).
pub fn optimization_brute_force(n: u64, a_max: u64, b: u64, variant: OptVariant) -> i64 {
    fn groups(
        rem: u64,
        max_v: u64,
        b: u64,
        slots: u64,
        acc_r: u64,
        acc_sq: i64,
        best: &mut Vec<(u64, i64)>,
    ) {
        if rem == 0 {
            best.push((acc_r, acc_sq));
            return;
        }
        if max_v == 0 || slots < b {
            return;
        }
        for v in (1..=max_v.min(rem)).rev() {
            let mut m = b;
            while v * m <= rem && m <= slots {
                groups(
                    rem - v * m,
                    v - 1,
                    b,
                    slots - m,
                    acc_r + m,
                    acc_sq + (v * v * m) as i64,
                    best,
                );
                m += 1;
            }
        }
    }
    let mut best_val = i64::MIN;
    for a1 in 0..=a_max.min(n) {
        let rem = n - a1;
        let mut configs = Vec::new();
        if rem == 0 {
            configs.push((0u64, 0i64));
        } else {
            groups(rem, rem, b, n - 1, 0, 0, &mut configs);
        }
        for (r, sq) in configs {
            let total = match variant {
                OptVariant::Plain => r as i64 + sq + (a1 * a1) as i64,
                OptVariant::Easier => sq + (a1 * a1) as i64,
                OptVariant::OrthogonalPlus => r as i64 + sq + (a1 * a1) as i64 + a1 as i64,
                OptVariant::OrthogonalMinus => r as i64 + sq + (a1 * a1) as i64 - a1 as i64,
            };
            best_val = best_val.max(total);
        }
    }
    best_val
}

/// Whether the closed-form optimum configuration for these parameters is
/// integral, in which case the integer brute force must attain it.
pub fn optimum_config_integral(n: u64, a: u64, b: u64, variant: OptVariant) -> bool {
    let ar = Rat::from_integer(a as i64);
    let br = Rat::from_integer(b as i64);
    let two_n = Rat::from_integer(2 * n as i64);
    let hi_cond = match variant {
        OptVariant::Plain | OptVariant::Easier => ar * (br + Rat::one()) >= two_n,
        OptVariant::OrthogonalPlus => ar * (br + Rat::one()) + br >= two_n,
        OptVariant::OrthogonalMinus => ar * (br + Rat::one()) - br >= two_n,
    };
    if hi_cond {
        (n - a) % b == 0
    } else {
        n % b == 0
    }
}

// ---------------------------------------------------------------------------
// partitions and the unipotent centralizer-dimension bound
// ---------------------------------------------------------------------------

/// Transpose (conjugate) of a weakly decreasing partition.
pub fn transpose_partition(parts: &[u64]) -> Vec<u64> {
    if parts.is_empty() {
        return Vec::new();
    }
    let top = parts[0];
    (1..=top)
        .map(|i| parts.iter().filter(|&&p| p >= i).count() as u64)
        .collect()
}

/// Transpose partition and the centralizer dimension Σ (λ'_i)².
pub fn transpose_and_centralizer_dim(parts: &[u64]) -> (Vec<u64>, u64) {
    let t = transpose_partition(parts);
    let dim = t.iter().map(|&x| x * x).sum();
    (t, dim)
}

#[derive(Clone, Debug, PartialEq)]
pub enum UnipotentBound {
    /// no subset I with Σ_{i∈I} λ_i ≤ C and λ_j ≥ B off I
    HypothesisNotMet,
    Holds {
        dim: u64,
        bound: Rat,
        slack: Rat,
    },
    Violated {
        dim: u64,
        bound: Rat,
    },
}

/// Checks Σ(λ'_i)² ≤ n²/B + C²(1 - 1/B) whenever the hypothesis is feasible.
/// Feasibility is decided by an exhaustive subset search (≤ 20 parts).
pub fn unipotent_bound_check(parts: &[u64], b: u64, c: u64) -> Result<UnipotentBound> {
    let n: u64 = parts.iter().sum();
    if b < 2 || b > n || c > n {
        return Err(Error::InvalidParam(
            "need 2 <= B <= n and 0 <= C <= n".into(),
        ));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
        return Err(Error::InvalidParam(
            "partition must be weakly decreasing and positive".into(),
        ));
    }
    if parts.len() > 20 {
        return Err(Error::ScaleCap(
            "feasibility subset search supports at most 20 parts".into(),
        ));
    }
    let k = parts.len();
    let mut feasible = false;
    'subsets: for mask in 0u32..(1 << k) {
        let mut sum_in = 0u64;
        for (i, &part) in parts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum_in += part;
                if sum_in > c {
                    continue 'subsets;
                }
            } else if part < b {
                continue 'subsets;
            }
        }
        feasible = true;
        break;
    }
    if !feasible {
        return Ok(UnipotentBound::HypothesisNotMet);
    }
    let (_, dim) = transpose_and_centralizer_dim(parts);
    let nn = Rat::from_integer((n * n) as i64);
    let br = Rat::from_integer(b as i64);
    let cc = Rat::from_integer((c * c) as i64);
    let bound = nn / br + cc * (Rat::one() - Rat::one() / br);
    let dim_r = Rat::from_integer(dim as i64);
    if dim_r <= bound {
        Ok(UnipotentBound::Holds {
            dim,
            bound,
            slack: bound - dim_r,
        })
    } else {
        Ok(UnipotentBound::Violated { dim, bound })
    }
}

/// All partitions of n, each weakly decreasing.
pub fn partitions_of(n: u64) -> Vec<Vec<u64>> {
    fn rec(rem: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rem == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in (1..=max_part.min(rem)).rev() {
            prefix.push(v);
            rec(rem - v, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// floating-point inequality spot checks
// ---------------------------------------------------------------------------

/// n! ≥ √(2π) n^(n+1/2) e^(-n), with a small relative slack for rounding.
/// Compared in log space so large n does not overflow.
pub fn factorial_stirling_lower_holds(n: u32, rel_slack: f64) -> bool {
    let nf = n as f64;
    let mut log_fact = 0f64;
    for i in 2..=n {
        log_fact += (i as f64).ln();
    }
    let log_bound = 0.5 * (2.0 * std::f64::consts::PI).ln() + (nf + 0.5) * nf.ln() - nf;
    log_fact >= log_bound + (1.0 - rel_slack).ln()
}

/// 1.2 n^(n/4) > 1.58^(3n/8) · n^(1/2 + log2 n); holds from the crossover on.
pub fn crossover_inequality_holds(n: u32) -> bool {
    let nf = n as f64;
    let lhs = 1.2 * nf.powf(nf / 4.0);
    let rhs = 1.58f64.powf(3.0 * nf / 8.0) * nf.powf(0.5 + nf.log2());
    lhs > rhs
}
