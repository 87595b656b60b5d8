use serde_json::Value;

/// JSON schemas of the reports, by kind.
pub const SCHEMAS: &[(&str, &str)] = &[
    ("envelope", include_str!("../../schemas/envelope.schema.json")),
    ("cohomology", include_str!("../../schemas/cohomology.schema.json")),
    ("verify", include_str!("../../schemas/verify.schema.json")),
    (
        "normalizability",
        include_str!("../../schemas/normalizability.schema.json"),
    ),
];

/// One `path  value` line per leaf, in document order.
pub fn render_table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, val) in rows {
        let pad = width - k.chars().count();
        out.push_str(&k);
        out.push_str(&" ".repeat(pad + 2));
        out.push_str(&val);
        out.push('\n');
    }
    out
}

fn leaf(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => Some(format!(
            "[{}]",
            a.iter().filter_map(leaf).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    if let Some(s) = leaf(v) {
        rows.push((prefix.to_string(), s));
        return;
    }
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{}.{}", prefix, k)
        }
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&join(k), x, rows);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{}[{}]", prefix, i), x, rows);
            }
        }
        _ => unreachable!(),
    }
}
