use serde_json::{json, Value};

/// One named invariant check. A failed check always carries a witness.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Value) -> Self {
        Check {
            name: name.into(),
            pass: false,
            witness: Some(witness),
        }
    }

    pub fn from_bool(name: impl Into<String>, pass: bool, witness: Value) -> Self {
        if pass {
            Check::pass(name)
        } else if witness.is_null() {
            Check::fail(name, Value::String("invariant violated".into()))
        } else {
            Check::fail(name, witness)
        }
    }
}

/// Structured command report: echo of the invocation, parameters, payload,
/// check summary and timing. Serialization is deterministic apart from
/// `timing_ms` (serde_json objects are key-sorted).
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub params: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    pub timing_ms: u128,
}

impl Report {
    pub fn new(command: impl Into<String>, params: Value, results: Value) -> Self {
        Report {
            command: command.into(),
            params,
            results,
            checks: Vec::new(),
            timing_ms: 0,
        }
    }

    /// Report for a usage-level failure inside a valid subcommand (bad
    /// parameter values); carries one failing check.
    pub fn error(command: impl Into<String>, params: Value, message: String) -> Self {
        let mut r = Report::new(command, params, Value::Null);
        r.checks.push(Check::fail("arguments-valid", json!(message)));
        r
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> Self {
        self.checks = checks;
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "checks": self.checks.iter().map(|c| {
                json!({
                    "name": c.name,
                    "pass": c.pass,
                    "witness": c.witness,
                })
            }).collect::<Vec<_>>(),
            "timing_ms": self.timing_ms,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report serializes")
    }

    /// CSV rendering: a command-specific table when one exists (spectra),
    /// otherwise the check summary.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(rows) = self.results.get("spectrum").and_then(Value::as_array) {
            out.push_str("value,multiplicity\n");
            for row in rows {
                let v = row
                    .get("value")
                    .and_then(|v| v.get("num"))
                    .zip(row.get("value").and_then(|v| v.get("den")))
                    .map(|(n, d)| {
                        let n = n.as_str().unwrap_or("0");
                        let d = d.as_str().unwrap_or("1");
                        if d == "1" {
                            n.to_string()
                        } else {
                            format!("{n}/{d}")
                        }
                    })
                    .unwrap_or_default();
                let m = row.get("multiplicity").map(Value::to_string).unwrap_or_default();
                out.push_str(&format!("{v},{m}\n"));
            }
            return out;
        }
        out.push_str("check,pass\n");
        for c in &self.checks {
            out.push_str(&format!("{},{}\n", c.name, c.pass));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some(obj) = self.params.as_object() {
            if !obj.is_empty() {
                let rendered: Vec<String> =
                    obj.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!("params: {}\n", rendered.join(" ")));
            }
        }
        if let Some(rows) = self.results.get("table").and_then(Value::as_array) {
            for row in rows {
                out.push_str(&format!(
                    "rank {}: {}\n",
                    row.get("rank").map(Value::to_string).unwrap_or_default(),
                    row.get("line")
                        .and_then(Value::as_str)
                        .unwrap_or_default()
                ));
            }
        } else if !self.results.is_null() {
            out.push_str(&serde_json::to_string_pretty(&self.results).expect("results"));
            out.push('\n');
        }
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {}\n", c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!("     witness: {w}\n"));
            }
        }
        out.push_str(&format!(
            "{} of {} checks passed\n",
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        ));
        out
    }
}
