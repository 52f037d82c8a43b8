//! Group input files: JSON with a degree and a generator list. Generators are
//! either 1-based image arrays or cycle strings like "(1,2,3)(4,5)".
//! Points are 1-based in files and 0-based internally.

use minfix_core::perm::Permutation;

#[derive(Debug)]
pub struct FileError(pub String);

pub fn parse_cycle_string(src: &str, degree: usize) -> Result<Permutation, FileError> {
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let s = src.trim();
    if s.is_empty() || s == "()" {
        return Ok(Permutation::identity(degree));
    }
    let mut rest = s;
    while !rest.is_empty() {
        let Some(open) = rest.find('(') else {
            return Err(FileError(format!("expected '(' in cycle string '{src}'")));
        };
        if !rest[..open].trim().is_empty() {
            return Err(FileError(format!("unexpected text before '(' in '{src}'")));
        }
        let Some(close) = rest.find(')') else {
            return Err(FileError(format!("unbalanced parentheses in '{src}'")));
        };
        let body = &rest[open + 1..close];
        if !body.trim().is_empty() {
            let mut cycle = Vec::new();
            for tok in body.split(',') {
                let n: u64 = tok
                    .trim()
                    .parse()
                    .map_err(|_| FileError(format!("bad point '{tok}' in '{src}'")))?;
                if n == 0 || n as usize > degree {
                    return Err(FileError(format!("point {n} out of range 1..{degree}")));
                }
                cycle.push((n - 1) as u32);
            }
            cycles.push(cycle);
        }
        rest = &rest[close + 1..];
    }
    Permutation::from_cycles(degree, &cycles).map_err(|e| FileError(e.to_string()))
}

/// Parse {"degree": n, "generators": [...]} where each generator is a 1-based
/// image array or a cycle string.
pub fn parse_group_json(src: &str) -> Result<(usize, Vec<Permutation>), FileError> {
    let value: serde_json::Value =
        serde_json::from_str(src).map_err(|e| FileError(format!("invalid JSON: {e}")))?;
    let degree = value
        .get("degree")
        .and_then(|d| d.as_u64())
        .ok_or_else(|| FileError("missing integer field 'degree'".into()))?
        as usize;
    let gens_val = value
        .get("generators")
        .and_then(|g| g.as_array())
        .ok_or_else(|| FileError("missing array field 'generators'".into()))?;
    let mut gens = Vec::new();
    for (i, gv) in gens_val.iter().enumerate() {
        let perm = match gv {
            serde_json::Value::String(s) => parse_cycle_string(s, degree)?,
            serde_json::Value::Array(arr) => {
                let mut images = Vec::with_capacity(arr.len());
                for x in arr {
                    let n = x.as_u64().ok_or_else(|| {
                        FileError(format!("generator {i}: images must be integers"))
                    })?;
                    if n == 0 || n as usize > degree {
                        return Err(FileError(format!(
                            "generator {i}: image {n} out of range 1..{degree}"
                        )));
                    }
                    images.push((n - 1) as u32);
                }
                if images.len() != degree {
                    return Err(FileError(format!(
                        "generator {i}: image array has length {}, degree is {degree}",
                        images.len()
                    )));
                }
                Permutation::from_images(images).map_err(|e| FileError(e.to_string()))?
            }
            _ => {
                return Err(FileError(format!(
                    "generator {i}: expected array or cycle string"
                )))
            }
        };
        gens.push(perm);
    }
    Ok((degree, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_strings() {
        let p = parse_cycle_string("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert!(parse_cycle_string("(0,1)", 5).is_err());
        assert!(parse_cycle_string("(1,6)", 5).is_err());
        assert!(parse_cycle_string("()", 4).unwrap().is_identity());
    }

    #[test]
    fn json_group() {
        let src = r#"{"degree": 5, "generators": [[2,3,1,4,5], "(1,2,3,4,5)"]}"#;
        let (degree, gens) = parse_group_json(src).unwrap();
        assert_eq!(degree, 5);
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].images(), &[1, 2, 0, 3, 4]);
    }
}
