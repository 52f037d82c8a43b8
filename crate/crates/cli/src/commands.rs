//! The five subcommands: verify, census, bounds, polydensity, witness.

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Value};

use minfix_core::actions::{
    affine_group, alt_group, coset_fix_count, diagonal_action, ActionKind, GroupAction,
    DEFAULT_ELEMENT_CAP, DEFAULT_POINT_CAP,
};
use minfix_core::corpus::census_corpus;
use minfix_core::density::density_scan_jobs;
use minfix_core::error::Error as CoreError;
use minfix_core::group::PermGroup;

use minfix_core::sweeps::all_sweeps;
use minfix_core::verifier::{
    neumann_witness, neumann_witness_jobs, primitivity_report, SearchMode, WitnessCertificate,
};
use minfix_core::witnesses::{
    affine_verified_fix, verified_fix, witness_affine, witness_diagonal, witness_imprimitive,
    witness_intransitive, witness_parabolic, witness_product_of_base, WitnessSpec,
};

use crate::args::Args;
use crate::groupfile::parse_group_json;
use crate::polyparse::parse_poly;
use crate::report::RunReport;

pub const DEFAULT_SEED: u64 = 1966;

pub fn seed_from_env() -> u64 {
    std::env::var("MINFIX_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub enum CliError {
    /// exit code 2
    Usage(String),
    /// exit code 1
    Failure(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Failure(e.to_string())
    }
}

/// For user-supplied parameters: range violations are usage errors (exit 2),
/// anything else is a runtime failure (exit 1).
fn param_err(e: CoreError) -> CliError {
    match e {
        CoreError::InvalidParam(m) => CliError::Usage(m),
        other => CliError::Failure(other.to_string()),
    }
}

fn fnv_hash(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn cert_json(c: &WitnessCertificate) -> Value {
    json!({
        "element": c.element.to_string(),
        "element_order": c.element.order().to_string(),
        "cycle_type": c.element.cycle_type(),
        "fix": c.fix,
        "degree": c.degree,
        "fix_cubed": (c.fix as u128).pow(3).to_string(),
        "strict": c.strict,
        "weak": c.weak,
        "search_mode": c.search_mode,
        "group_id": c.group_id,
        "kernel_order": c.kernel_order.to_string(),
    })
}

fn primitivity_json(r: &minfix_core::verifier::PrimitivityReport) -> Value {
    let blocks: Vec<Vec<Vec<u32>>> = r
        .block_systems
        .iter()
        .map(|sys| {
            sys.iter()
                .map(|b| b.iter().map(|&x| x + 1).collect())
                .collect()
        })
        .collect();
    json!({
        "transitive": r.transitive,
        "regular": r.regular,
        "primitive": r.primitive,
        "block_systems": blocks,
    })
}

pub fn cmd_verify(args: &Args) -> Result<(RunReport, i32), CliError> {
    let path = args.require("group").map_err(|e| CliError::Usage(e.0))?;
    let content = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    let (degree, gens) =
        parse_group_json(&content).map_err(|e| CliError::Usage(format!("{path}: {}", e.0)))?;
    let group =
        PermGroup::from_generators(degree, gens).map_err(|e| CliError::Usage(e.to_string()))?;
    let seed = seed_from_env();
    let mode = match args.get("mode").unwrap_or("exhaustive") {
        "exhaustive" => SearchMode::Exhaustive,
        "classes" => SearchMode::ClassReps,
        "random" => SearchMode::Random {
            seed,
            samples: 10_000,
        },
        other => return Err(CliError::Usage(format!("unknown mode '{other}'"))),
    };
    let jobs = args.get_u64("jobs", 1).map_err(|e| CliError::Usage(e.0))? as usize;
    let strict_wanted = args.switch("strict");
    let action = GroupAction {
        group,
        labels: (1..=degree).map(|i| i.to_string()).collect(),
        kind: ActionKind::Natural,
        name: format!("file:{path}#{:016x}", fnv_hash(content.as_bytes())),
        kernel_order: BigUint::one(),
    };
    let prim = primitivity_report(&action);
    let mut table = vec![
        format!(
            "group: {} (degree {}, order {})",
            action.name,
            degree,
            action.group.order()
        ),
        format!(
            "transitive: {}  regular: {}  primitive: {}",
            prim.transitive, prim.regular, prim.primitive
        ),
    ];
    let params = json!({
        "group_file": path,
        "mode": mode.label(),
        "strict_required": strict_wanted,
        "jobs": jobs,
        "degree": degree,
        "order": action.group.order().to_string(),
    });
    if !prim.transitive || !prim.primitive || prim.regular {
        table.push("witness search skipped: the action must be primitive and non-regular".into());
        let items = json!({
            "primitivity": primitivity_json(&prim),
            "certificate": Value::Null,
        });
        let report = RunReport::new("verify", params, seed, items, table);
        return Ok((report, 1));
    }
    let cert = match mode {
        SearchMode::Exhaustive if jobs > 1 => {
            neumann_witness_jobs(&action, DEFAULT_ELEMENT_CAP, jobs)
        }
        _ => neumann_witness(&action, mode, DEFAULT_ELEMENT_CAP),
    };
    match cert {
        Ok(c) => {
            table.push(format!(
                "witness: {} with fix {} on degree {}: {}³ = {} {} {} ({})",
                c.element,
                c.fix,
                c.degree,
                c.fix,
                (c.fix as u128).pow(3),
                if c.strict { "<" } else { "<=" },
                c.degree,
                c.search_mode
            ));
            let ok = c.weak && (!strict_wanted || c.strict);
            if strict_wanted && !c.strict {
                table.push("strict bound requested but fix³ = n".into());
            }
            let items = json!({
                "primitivity": primitivity_json(&prim),
                "certificate": cert_json(&c),
            });
            let report = RunReport::new("verify", params, seed, items, table);
            Ok((report, if ok { 0 } else { 1 }))
        }
        Err(CoreError::TheoremViolation(msg)) => {
            Err(CliError::Failure(format!("THEOREM VIOLATION: {msg}")))
        }
        Err(e) => Err(CliError::Failure(e.to_string())),
    }
}

pub fn cmd_census(args: &Args) -> Result<(RunReport, i32), CliError> {
    let max_degree = args
        .get_u64("max-degree", 100)
        .map_err(|e| CliError::Usage(e.0))?;
    let jobs = args.get_u64("jobs", 1).map_err(|e| CliError::Usage(e.0))? as usize;
    let order_cap = args
        .get_u64("order-cap", DEFAULT_ELEMENT_CAP)
        .map_err(|e| CliError::Usage(e.0))?;
    let seed = seed_from_env();
    let corpus =
        census_corpus(max_degree, order_cap).map_err(|e| CliError::Failure(e.to_string()))?;
    let mut rows = Vec::new();
    let mut item_timings = Vec::new();
    let mut table = vec![format!(
        "{:<38} {:>6} {:>12} {:>7} {:<16} {}",
        "group", "degree", "order", "minfix", "fix^3 vs n", "witness cycle type"
    )];
    let mut failures = 0u64;
    for action in &corpus {
        let item_start = std::time::Instant::now();
        let prim = primitivity_report(action);
        if !prim.primitive || prim.regular {
            let status = if prim.regular {
                "skipped (regular)"
            } else {
                "skipped (imprimitive)"
            };
            table.push(format!(
                "{:<38} {:>6} {:>12} {}",
                action.name,
                action.degree(),
                action.group.order(),
                status
            ));
            rows.push(json!({
                "name": action.name,
                "degree": action.degree(),
                "order": action.group.order().to_string(),
                "status": status,
            }));
            item_timings
                .push(json!({"name": action.name, "ms": item_start.elapsed().as_millis() as u64}));
            continue;
        }
        let cert = if jobs > 1 {
            neumann_witness_jobs(action, order_cap, jobs)
        } else {
            neumann_witness(action, SearchMode::Exhaustive, order_cap)
        };
        match cert {
            Ok(c) => {
                let affine = action.kind == ActionKind::Affine;
                let ok = c.weak && (affine || c.strict);
                if !ok {
                    failures += 1;
                }
                let cmp = format!(
                    "{}³ = {} {} {}",
                    c.fix,
                    (c.fix as u128).pow(3),
                    if c.strict {
                        "<"
                    } else if c.weak {
                        "="
                    } else {
                        ">"
                    },
                    c.degree
                );
                table.push(format!(
                    "{:<38} {:>6} {:>12} {:>7} {:<16} {:?}{}",
                    action.name,
                    action.degree(),
                    action.group.order(),
                    c.fix,
                    cmp,
                    c.element.cycle_type(),
                    if ok { "" } else { "  FAIL" }
                ));
                let mut row = cert_json(&c);
                row.as_object_mut()
                    .unwrap()
                    .insert("name".into(), json!(action.name));
                row.as_object_mut()
                    .unwrap()
                    .insert("order".into(), json!(action.group.order().to_string()));
                row.as_object_mut()
                    .unwrap()
                    .insert("kind".into(), json!(action.kind.name()));
                row.as_object_mut()
                    .unwrap()
                    .insert("status".into(), json!(if ok { "ok" } else { "FAIL" }));
                rows.push(row);
                item_timings.push(
                    json!({"name": action.name, "ms": item_start.elapsed().as_millis() as u64}),
                );
            }
            Err(CoreError::TheoremViolation(msg)) => {
                return Err(CliError::Failure(format!("THEOREM VIOLATION: {msg}")));
            }
            Err(e) => return Err(CliError::Failure(e.to_string())),
        }
    }
    table.push(format!(
        "{} corpus members, {} failures",
        corpus.len(),
        failures
    ));
    let params = json!({"max_degree": max_degree, "order_cap": order_cap, "jobs": jobs});
    let mut report = RunReport::new("census", params, seed, json!(rows), table);
    report.item_timings = json!(item_timings);
    Ok((report, if failures == 0 { 0 } else { 1 }))
}

pub fn cmd_bounds(args: &Args) -> Result<(RunReport, i32), CliError> {
    if !args.switch("sweep") {
        return Err(CliError::Usage("bounds requires --sweep".into()));
    }
    let seed = seed_from_env();
    let sweeps = all_sweeps();
    let mut table = Vec::new();
    let mut items = Vec::new();
    let mut all_ok = true;
    for s in &sweeps {
        let status = if s.passed() { "PASS" } else { "FAIL" };
        all_ok &= s.passed();
        table.push(format!("{status}  {:<64} ({} checks)", s.label, s.checks));
        for f in &s.failures {
            table.push(format!("      {f}"));
        }
        items.push(json!({
            "label": s.label,
            "checks": s.checks,
            "passed": s.passed(),
            "failures": s.failures,
        }));
    }
    let report = RunReport::new("bounds", json!({"sweep": true}), seed, json!(items), table);
    Ok((report, if all_ok { 0 } else { 1 }))
}

pub fn cmd_polydensity(args: &Args) -> Result<(RunReport, i32), CliError> {
    let poly_src = args.require("poly").map_err(|e| CliError::Usage(e.0))?;
    let bound = args
        .get_u64("bound", 100_000)
        .map_err(|e| CliError::Usage(e.0))?;
    let jobs = args.get_u64("jobs", 1).map_err(|e| CliError::Usage(e.0))? as usize;
    let seed = seed_from_env();
    let f = parse_poly(poly_src).map_err(|e| CliError::Usage(format!("polynomial: {e}")))?;
    let r = density_scan_jobs(&f, bound, jobs).map_err(|e| CliError::Failure(e.to_string()))?;
    let hist: Vec<Value> = r
        .histogram
        .iter()
        .map(|(&roots, &count)| json!({"roots": roots, "primes": count}))
        .collect();
    let irr = match &r.irreducibility {
        minfix_core::density::IrreducibilityVerdict::Certified { prime } => {
            json!({"certified": true, "prime": prime})
        }
        minfix_core::density::IrreducibilityVerdict::Uncertified { has_rational_root } => {
            json!({"certified": false, "has_rational_root": has_rational_root})
        }
    };
    let items = json!({
        "polynomial": r.polynomial,
        "degree": r.degree,
        "prime_bound": r.prime_bound,
        "discriminant": r.discriminant.to_string(),
        "histogram": hist,
        "excluded_ramified": r.excluded,
        "primes_counted": r.primes_counted,
        "qualifying_primes": r.qualifying,
        "density_estimate": r.density_estimate,
        "mean_root_count": r.mean_root_count,
        "irreducibility": irr,
    });
    let mut table = vec![
        format!("polynomial: {} (degree {})", r.polynomial, r.degree),
        format!(
            "primes up to {}: {} counted, {} ramified excluded {:?}",
            r.prime_bound,
            r.primes_counted,
            r.excluded.len(),
            r.excluded
        ),
        format!("discriminant: {}", r.discriminant),
        format!("irreducibility: {:?}", r.irreducibility),
        "roots  primes".into(),
    ];
    for (roots, count) in &r.histogram {
        table.push(format!("{roots:>5}  {count}"));
    }
    table.push(format!(
        "density of primes with 1 <= r, r³ <= {}: {}/{} = {:.6}",
        r.degree, r.qualifying, r.primes_counted, r.density_estimate
    ));
    table.push(format!("mean root count: {:.6}", r.mean_root_count));
    let params = json!({"poly": poly_src, "bound": bound, "jobs": jobs});
    let report = RunReport::new("polydensity", params, seed, items, table);
    Ok((report, 0))
}

fn witness_spec_json(spec: &WitnessSpec, verified: &BigUint, matches: bool) -> Value {
    json!({
        "case": format!("{:?}", spec.case),
        "cycle_type": spec.cycle_type,
        "element": spec.element.as_ref().map(|e| e.to_string()),
        "predicted_fix": spec.predicted_fix.as_ref().map(|f| f.to_string()),
        "verified_fix": verified.to_string(),
        "matches": matches,
        "domain_degree": spec.domain_degree,
    })
}

pub fn cmd_witness(args: &Args) -> Result<(RunReport, i32), CliError> {
    let case = args.require("case").map_err(|e| CliError::Usage(e.0))?;
    let seed = seed_from_env();
    let point_cap = DEFAULT_POINT_CAP;
    let element_cap = DEFAULT_ELEMENT_CAP;
    let (spec, verified): (WitnessSpec, BigUint) = match case {
        "intransitive" => {
            let n = args.require_u64("n").map_err(|e| CliError::Usage(e.0))? as u32;
            let k = args.require_u64("k").map_err(|e| CliError::Usage(e.0))? as u32;
            let spec = witness_intransitive(n, k).map_err(param_err)?;
            let v = verified_fix(&spec, point_cap, element_cap)?;
            (spec, v)
        }
        "imprimitive" => {
            let n = args.require_u64("n").map_err(|e| CliError::Usage(e.0))? as u32;
            let k = args.require_u64("k").map_err(|e| CliError::Usage(e.0))? as u32;
            let t = args.get_u64("t", (n / k.max(1)) as u64).map_err(|e| CliError::Usage(e.0))? as u32;
            let spec = witness_imprimitive(n, k, t).map_err(param_err)?;
            let v = verified_fix(&spec, point_cap, element_cap)?;
            (spec, v)
        }
        "affine" => {
            let d = args.require_u64("d").map_err(|e| CliError::Usage(e.0))? as u32;
            let p = args.require_u64("p").map_err(|e| CliError::Usage(e.0))?;
            let (spec, formula, direct) = affine_both_paths(d, p)?;
            if let Some(direct) = direct {
                if direct != formula {
                    return Err(CliError::Failure(format!(
                        "affine witness: formula path gives {formula}, direct coset count gives {direct}"
                    )));
                }
            }
            (spec, formula)
        }
        "product" => {
            let m = args.require_u64("m").map_err(|e| CliError::Usage(e.0))? as u32;
            let t = args.require_u64("t").map_err(|e| CliError::Usage(e.0))? as u32;
            let spec = witness_product_of_base(m, t, point_cap, element_cap).map_err(param_err)?;
            let v = verified_fix(&spec, point_cap, element_cap)?;
            (spec, v)
        }
        "diagonal" => {
            let s_name = args.require("s").map_err(|e| CliError::Usage(e.0))?;
            let s = match s_name {
                "A5" | "a5" => alt_group(5),
                "A6" | "a6" => alt_group(6),
                "A7" | "a7" => alt_group(7),
                other => return Err(CliError::Usage(format!("unknown simple group '{other}' (use A5, A6 or A7)"))),
            };
            let (spec, x) = witness_diagonal(&s, element_cap).map_err(param_err)?;
            let d = diagonal_action(&s, element_cap)?;
            let img = d.image_of_pair(&x, &x)?;
            (spec, BigUint::from(img.fix_count()))
        }
        "parabolic" => {
            let d = args.require_u64("d").map_err(|e| CliError::Usage(e.0))? as u32;
            let p = args.require_u64("p").map_err(|e| CliError::Usage(e.0))?;
            let spec = witness_parabolic(d, p, point_cap).map_err(param_err)?;
            let v = verified_fix(&spec, point_cap, element_cap)?;
            (spec, v)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown case '{other}' (intransitive, imprimitive, affine, product, diagonal, parabolic)"
            )))
        }
    };
    let matches = spec.predicted_fix.as_ref().map_or(true, |p| p == &verified);
    let mut table = vec![format!("case: {:?}", spec.case)];
    if let Some(ty) = &spec.cycle_type {
        table.push(format!("cycle type: {ty:?}"));
    }
    if let Some(el) = &spec.element {
        table.push(format!("element: {el}"));
    }
    match &spec.predicted_fix {
        Some(p) => table.push(format!(
            "predicted fix: {p}, verified fix: {verified} -> {}",
            if matches { "match" } else { "MISMATCH" }
        )),
        None => table.push(format!(
            "verified fix: {verified} (no closed-form prediction for this case)"
        )),
    }
    let params = json!({"case": case});
    let items = witness_spec_json(&spec, &verified, matches);
    let report = RunReport::new("witness", params, seed, items, table);
    Ok((report, if matches { 0 } else { 1 }))
}

/// The affine witness prediction, its value via the fusion formula, and via
/// direct coset counting when the index is within the point cap (None when
/// the direct action is refused as too large).
pub fn affine_both_paths(
    d: u32,
    p: u64,
) -> Result<(WitnessSpec, BigUint, Option<BigUint>), CliError> {
    let spec = witness_affine(d, p, DEFAULT_POINT_CAP).map_err(param_err)?;
    let formula = affine_verified_fix(d, p, DEFAULT_POINT_CAP, DEFAULT_ELEMENT_CAP)?;
    let n = (p as u64).pow(d) as u32;
    let ambient = alt_group(n);
    let aff = affine_group(d, p, DEFAULT_POINT_CAP)?;
    let g = spec.element.as_ref().unwrap();
    let direct = match coset_fix_count(&ambient, &aff.even_group, g, DEFAULT_POINT_CAP) {
        Ok(v) => Some(BigUint::from(v)),
        Err(CoreError::CapExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok((spec, formula, direct))
}
