//! Plain-text rendering of a JSON report.

use std::fmt::Write;

use serde_json::{Map, Value};

pub fn human(report: &Value) -> String {
    let mut out = String::new();
    node(report, 0, &mut out);
    out
}

fn pad(depth: usize) -> String {
    "  ".repeat(depth)
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(Value::is_string) => Some(format!(
            "{{{}}}",
            items.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> &'a str {
    obj.get(key).and_then(Value::as_str).unwrap_or("?")
}

fn witness(obj: &Map<String, Value>) -> Option<String> {
    let f = |k| field(obj, k);
    Some(match obj.get("type")?.as_str()? {
        "morphism" => f("morphism").to_string(),
        "square" => format!(
            "square {} ⧄ {} (top {}, bottom {}) has no diagonal",
            f("left"),
            f("right"),
            f("top"),
            f("bottom")
        ),
        "retract" => format!("{} is a retract of {}", f("retract"), f("member")),
        "triple" => format!("{} ∘ {} = {}", f("second"), f("first"), f("composite")),
        _ => return None,
    })
}

fn is_check(obj: &Map<String, Value>) -> bool {
    ["label", "statement", "status"].iter().all(|k| obj.contains_key(*k))
}

fn check(obj: &Map<String, Value>, depth: usize, out: &mut String) {
    let status = field(obj, "status").to_uppercase();
    let _ = writeln!(out, "{}[{status}] ({}) {}", pad(depth), field(obj, "label"), field(obj, "statement"));
    if let Some(note) = obj.get("note").and_then(Value::as_str) {
        let _ = writeln!(out, "{}{note}", pad(depth + 1));
    }
    for w in obj.get("witnesses").and_then(Value::as_array).into_iter().flatten() {
        if let Some(text) = w.as_object().and_then(witness) {
            let _ = writeln!(out, "{}witness: {text}", pad(depth + 1));
        }
    }
}

fn node(v: &Value, depth: usize, out: &mut String) {
    match v {
        Value::Object(obj) if is_check(obj) => check(obj, depth, out),
        Value::Object(obj) => {
            for (k, v) in obj {
                if let Some(text) = v.as_object().and_then(witness) {
                    let _ = writeln!(out, "{}{k}: {text}", pad(depth));
                } else if let Some(s) = scalar(v) {
                    let _ = writeln!(out, "{}{k}: {s}", pad(depth));
                } else {
                    let _ = writeln!(out, "{}{k}:", pad(depth));
                    node(v, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{}- {s}", pad(depth));
                    }
                    None if matches!(item, Value::Object(o) if is_check(o)) => node(item, depth, out),
                    None => {
                        let _ = writeln!(out, "{}#{i}", pad(depth));
                        node(item, depth + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{}{}", pad(depth), scalar(other).unwrap_or_default());
        }
    }
}
