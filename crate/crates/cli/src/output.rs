use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

/// Pretty JSON with a trailing newline. Floats use the shortest
/// representation that round-trips, `-0.0` prints as `0.0` and non-finite
/// values become `null`.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("reports serialize");
    clear_negative_zero(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("reports serialize");
    s.push('\n');
    s
}

fn clear_negative_zero(v: &mut Value) {
    match v {
        Value::Number(n) if n.as_f64() == Some(0.0) && n.is_f64() => *v = Value::from(0.0),
        Value::Array(items) => items.iter_mut().for_each(clear_negative_zero),
        Value::Object(map) => map.values_mut().for_each(clear_negative_zero),
        _ => {}
    }
}

/// CSV table from a header and rows of already formatted cells.
pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for row in rows {
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

/// Shortest round-trip decimal form of a float, as used in CSV cells.
pub fn cell(x: f64) -> String {
    if x.is_finite() {
        format!("{:?}", x + 0.0)
    } else {
        String::new()
    }
}

/// Writes `body` to `path` through a sibling temporary file and a rename, or
/// to standard output.
pub fn emit(body: &str, path: Option<&Path>) -> io::Result<()> {
    let Some(path) = path else {
        let mut out = io::stdout().lock();
        out.write_all(body.as_bytes())?;
        return out.flush();
    };
    let file_name = path.file_name().ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name"))?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(file_name);
    tmp_name.push(format!(".{}.tmp", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(body.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}
