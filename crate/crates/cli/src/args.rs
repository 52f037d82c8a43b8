//! Minimal flag parser: a subcommand followed by `--key value` pairs
//! (plus bare `--flag` switches from a known list).

use std::collections::HashMap;

pub struct Args {
    pub command: String,
    values: HashMap<String, String>,
    switches: Vec<String>,
}

const SWITCHES: &[&str] = &["strict", "sweep"];

#[derive(Debug)]
pub struct ArgError(pub String);

impl Args {
    pub fn parse(argv: &[String]) -> Result<Args, ArgError> {
        let mut it = argv.iter();
        let command = it
            .next()
            .ok_or_else(|| {
                ArgError("missing subcommand (verify, census, bounds, polydensity, witness)".into())
            })?
            .clone();
        let mut values = HashMap::new();
        let mut switches = Vec::new();
        while let Some(arg) = it.next() {
            let Some(key) = arg.strip_prefix("--") else {
                return Err(ArgError(format!(
                    "unexpected argument '{arg}' (flags are --key value)"
                )));
            };
            if SWITCHES.contains(&key) {
                switches.push(key.to_string());
                continue;
            }
            let value = it
                .next()
                .ok_or_else(|| ArgError(format!("flag --{key} needs a value")))?;
            values.insert(key.to_string(), value.clone());
        }
        Ok(Args {
            command,
            values,
            switches,
        })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|s| s.as_str())
    }

    pub fn require(&self, key: &str) -> Result<&str, ArgError> {
        self.get(key)
            .ok_or_else(|| ArgError(format!("missing required flag --{key}")))
    }

    pub fn get_u64(&self, key: &str, default: u64) -> Result<u64, ArgError> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| ArgError(format!("--{key} expects an integer, got '{v}'"))),
        }
    }

    pub fn require_u64(&self, key: &str) -> Result<u64, ArgError> {
        self.require(key)?
            .parse()
            .map_err(|_| ArgError(format!("--{key} expects an integer")))
    }

    pub fn switch(&self, key: &str) -> bool {
        self.switches.iter().any(|s| s == key)
    }
}
