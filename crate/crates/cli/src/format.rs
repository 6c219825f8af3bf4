use std::fs;
use std::path::Path;

use powerful::text::{parse_z4, SetFile};
use powerful::zeta::DEFAULT_ZETA_MAX_ORDER;
use powerful::{BinarySet, Limits, Word};
use serde_json::{json, Value};

use crate::Failure;

pub const SCHEMA: u32 = 1;
pub const ZETA_ENV: &str = "POWERFUL_ZETA_MAX_ORDER";

pub fn limits() -> Result<Limits, Failure> {
    match std::env::var(ZETA_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|zeta_max_order| Limits { zeta_max_order })
            .map_err(|_| Failure(format!("{ZETA_ENV}={v:?} is not an order"))),
        Err(_) => Ok(Limits {
            zeta_max_order: DEFAULT_ZETA_MAX_ORDER,
        }),
    }
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: powerful::Error) -> Failure {
    Failure(format!("{}: {e}", path.display()))
}

pub fn read_set_file(path: &Path) -> Result<SetFile, Failure> {
    SetFile::parse(&read_text(path)?).map_err(|e| located(path, e))
}

pub fn read_set(path: &Path) -> Result<BinarySet, Failure> {
    read_set_file(path)?
        .into_set()
        .map_err(|e| located(path, e))
}

pub fn read_z4(path: &Path) -> Result<Vec<Vec<u8>>, Failure> {
    parse_z4(&read_text(path)?).map_err(|e| located(path, e))
}

/// `{1,3,5}` style listing of a coordinate subset.
pub fn elements(w: Word) -> String {
    let inner: Vec<String> = w.elements().map(|e| e.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn element_list(w: Word) -> Value {
    json!(w.elements().collect::<Vec<_>>())
}

pub fn parse_elements(text: &str, order: usize) -> Result<Word, Failure> {
    let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut w = Word::ZERO;
    for part in trimmed.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let e: usize = part
            .parse()
            .map_err(|_| Failure(format!("{part:?} is not an element")))?;
        if e == 0 || e > order {
            return Err(Failure(format!("element {e} is outside 1..={order}")));
        }
        w = Word(w.0 | Word::unit(e).0);
    }
    Ok(w)
}

pub fn set_json(set: &BinarySet) -> Value {
    json!({
        "order": set.order(),
        "size": set.len(),
        "words": set.to_lines(),
    })
}

pub fn print_json(mut value: Value) {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(SCHEMA));
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("report serializes")
    );
}

pub fn print_set(set: &BinarySet) {
    print!("{}", powerful::text::render_set(set));
}
