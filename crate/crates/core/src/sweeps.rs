//! Parameter-grid verification sweeps over the bounds machinery. Each sweep
//! returns its check count and any failures, so callers can render a
//! pass/fail table or assert emptiness.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bounds::{
    classical_order_report, cyclotomic_value, optimization_brute_force, optimization_max,
    optimum_config_integral, partitions_of, ppd_star, unipotent_bound_check, zsigmondy_exception,
    ClassicalFamily, OptVariant, Rat, UnipotentBound,
};

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub label: String,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Zsigmondy sweep: for 2 ≤ m ≤ 20, 2 ≤ q ≤ 20, the exceptional flag matches
/// the known exception set, every listed prime is a primitive divisor
/// congruent to 1 mod m, and the value divides Φ_m(q).
pub fn ppd_sweep() -> SweepOutcome {
    let mut checks = 0u64;
    let mut failures = Vec::new();
    for m in 2..=20u32 {
        for q in 2..=20u64 {
            checks += 1;
            let r = match ppd_star(m, q) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(format!("ppd_star({m},{q}): {e}"));
                    continue;
                }
            };
            if r.exceptional != zsigmondy_exception(m, q) {
                failures.push(format!(
                    "ppd_star({m},{q}): exceptional flag {} but the exception set says {}",
                    r.exceptional,
                    zsigmondy_exception(m, q)
                ));
            }
            if !r.factorization_complete {
                failures.push(format!("ppd_star({m},{q}): factorization incomplete"));
                continue;
            }
            if r.exceptional != r.primes.is_empty() {
                failures.push(format!(
                    "ppd_star({m},{q}): prime list inconsistent with flag"
                ));
            }
            let qm = BigUint::from(q).pow(m) - BigUint::one();
            for &p in &r.primes {
                if p % m as u128 != 1 {
                    failures.push(format!("ppd_star({m},{q}): prime {p} is not 1 mod {m}"));
                }
                let pb = BigUint::from(p);
                if !(qm.clone() % &pb).is_zero() {
                    failures.push(format!(
                        "ppd_star({m},{q}): prime {p} does not divide q^m - 1"
                    ));
                }
                for i in 1..m {
                    let qi = BigUint::from(q).pow(i) - BigUint::one();
                    if (qi % &pb).is_zero() {
                        failures.push(format!("ppd_star({m},{q}): prime {p} divides q^{i} - 1"));
                    }
                }
            }
            let phi = cyclotomic_value(m, q).expect("grid in range");
            if !(phi % &r.value).is_zero() {
                failures.push(format!(
                    "ppd_star({m},{q}): value does not divide the cyclotomic value"
                ));
            }
        }
    }
    SweepOutcome {
        label: "zsigmondy ppd grid (2..20 x 2..20)".into(),
        checks,
        failures,
    }
}

/// Order-sandwich sweep over ranks 2..8 per family and
/// q in {2, 3, 4, 5, 7, 8, 9}.
pub fn classical_sweep() -> SweepOutcome {
    let qs = [2u64, 3, 4, 5, 7, 8, 9];
    let mut checks = 0u64;
    let mut failures = Vec::new();
    let mut run = |family: ClassicalFamily, n: u32, q: u64| {
        checks += 1;
        match classical_order_report(family, n, q) {
            Ok(rep) => {
                if !rep.all_hold {
                    let bad: Vec<&str> = rep
                        .checks
                        .iter()
                        .filter(|(_, ok)| !ok)
                        .map(|(s, _)| s.as_str())
                        .collect();
                    failures.push(format!("{} n={n} q={q}: {}", family.name(), bad.join("; ")));
                }
            }
            Err(e) => failures.push(format!("{} n={n} q={q}: {e}", family.name())),
        }
    };
    for &q in &qs {
        for n in 2..=8u32 {
            run(ClassicalFamily::Gl, n, q);
            run(ClassicalFamily::Sl, n, q);
            run(ClassicalFamily::Gu, n, q);
            run(ClassicalFamily::Su, n, q);
        }
        for rank in 2..=8u32 {
            run(ClassicalFamily::Sp, 2 * rank, q);
            run(ClassicalFamily::SoOdd, 2 * rank + 1, q);
            run(ClassicalFamily::OPlus, 2 * rank, q);
            run(ClassicalFamily::OMinus, 2 * rank, q);
        }
    }
    SweepOutcome {
        label: "classical order sandwich (ranks 2..8, q in {2,3,4,5,7,8,9})".into(),
        checks,
        failures,
    }
}

/// Optimization sweep: closed form vs integer brute force for every n ≤ 12,
/// every valid integer (A, B), all four variants. The closed form must
/// dominate, with equality whenever the optimal configuration is integral.
pub fn optimization_sweep() -> SweepOutcome {
    let variants = [
        OptVariant::Plain,
        OptVariant::Easier,
        OptVariant::OrthogonalPlus,
        OptVariant::OrthogonalMinus,
    ];
    let mut checks = 0u64;
    let mut failures = Vec::new();
    for n in 2..=12u64 {
        for b in 1..n {
            for a in 1..n {
                if a + b > n {
                    continue;
                }
                for &v in &variants {
                    checks += 1;
                    let closed = match optimization_max(n, Rat::from_integer(a as i64), b, v) {
                        Ok(c) => c,
                        Err(e) => {
                            failures
                                .push(format!("optimization_max(n={n},A={a},B={b},{v:?}): {e}"));
                            continue;
                        }
                    };
                    let brute = optimization_brute_force(n, a, b, v);
                    let brute_r = Rat::from_integer(brute);
                    if closed < brute_r {
                        failures.push(format!(
                            "n={n} A={a} B={b} {v:?}: closed form {closed} below brute force {brute}"
                        ));
                    }
                    if optimum_config_integral(n, a, b, v) && closed != brute_r {
                        failures.push(format!(
                            "n={n} A={a} B={b} {v:?}: integral optimum but closed {closed} != brute {brute}"
                        ));
                    }
                }
            }
        }
    }
    SweepOutcome {
        label: "optimization closed form vs integer brute force (n <= 12)".into(),
        checks,
        failures,
    }
}

/// Unipotent centralizer-dimension sweep: every partition of every n ≤ 12,
/// every feasible (B, C).
pub fn unipotent_sweep() -> SweepOutcome {
    let mut checks = 0u64;
    let mut feasible = 0u64;
    let mut failures = Vec::new();
    for n in 1..=12u64 {
        for parts in partitions_of(n) {
            for b in 2..=n {
                for c in 0..=n {
                    checks += 1;
                    match unipotent_bound_check(&parts, b, c) {
                        Ok(UnipotentBound::HypothesisNotMet) => {}
                        Ok(UnipotentBound::Holds { .. }) => feasible += 1,
                        Ok(UnipotentBound::Violated { dim, bound }) => failures.push(format!(
                            "partition {parts:?} B={b} C={c}: dim {dim} exceeds bound {bound}"
                        )),
                        Err(e) => failures.push(format!("partition {parts:?} B={b} C={c}: {e}")),
                    }
                }
            }
        }
    }
    SweepOutcome {
        label: format!(
            "unipotent transpose bound (all partitions of n <= 12; {feasible} feasible cases)"
        ),
        checks,
        failures,
    }
}

pub fn all_sweeps() -> Vec<SweepOutcome> {
    vec![
        ppd_sweep(),
        classical_sweep(),
        optimization_sweep(),
        unipotent_sweep(),
    ]
}
