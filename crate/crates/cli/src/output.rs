use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use cubiccm::lattices::{GramMatrix, LatticeInvariants};

/// The JSON document written by every command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub notes: Vec<String>,
    pub version: String,
}

impl Envelope {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            results,
            notes: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }
}

/// Integers that fit in 64 bits as JSON numbers, larger ones as decimal
/// strings.
pub fn num(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn nums(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(num).collect())
}

pub fn gram(g: &GramMatrix) -> Value {
    Value::Array(g.entries().iter().map(|r| nums(r)).collect())
}

pub fn invariants(inv: &LatticeInvariants) -> Value {
    json!({
        "rank": inv.rank,
        "signature": [inv.signature.0, inv.signature.1],
        "determinant": num(&inv.determinant),
        "even": inv.even,
        "disc_group": nums(&inv.disc_group),
    })
}

/// CSV text with a header row.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}
