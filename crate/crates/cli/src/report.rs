//! Machine-readable run reports. The body is deterministic for fixed inputs
//! and seed; wall-clock timing lives outside the body so it never enters the
//! reproducibility hash.

use serde_json::{json, Value};

pub struct RunReport {
    pub body: Value,
    pub timing_ms: u128,
    /// per-item wall-clock, reported alongside the body but never hashed
    pub item_timings: Value,
    pub table: Vec<String>,
}

impl RunReport {
    pub fn new(
        command: &str,
        parameters: Value,
        seed: u64,
        items: Value,
        table: Vec<String>,
    ) -> Self {
        RunReport {
            body: json!({
                "command": command,
                "parameters": parameters,
                "seed": seed,
                "tool_version": env!("CARGO_PKG_VERSION"),
                "items": items,
            }),
            timing_ms: 0,
            item_timings: Value::Null,
            table,
        }
    }

    /// FNV-1a over the canonical body serialization (timings excluded).
    pub fn body_hash(&self) -> u64 {
        let bytes = serde_json::to_vec(&self.body).expect("body serializes");
        let mut h: u64 = 0xcbf29ce484222325;
        for b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        h
    }

    pub fn print(&self, format: &str) {
        match format {
            "json" => {
                let mut out = self.body.clone();
                out.as_object_mut()
                    .unwrap()
                    .insert("timing_ms".into(), json!(self.timing_ms));
                if !self.item_timings.is_null() {
                    out.as_object_mut()
                        .unwrap()
                        .insert("item_timings".into(), self.item_timings.clone());
                }
                out.as_object_mut().unwrap().insert(
                    "body_hash".into(),
                    json!(format!("{:016x}", self.body_hash())),
                );
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            }
            _ => {
                for line in &self.table {
                    println!("{line}");
                }
            }
        }
    }
}
