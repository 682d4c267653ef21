//! Text, JSON and CSV renderings of families and count sequences.

use std::fmt::Write as _;

use gpav_core::{CountSequence, FamilySource, PatternFamily};
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Parameters that identify a family, as a JSON object.
pub fn family_params(fam: &PatternFamily) -> Value {
    let mut map = Map::new();
    map.insert("kind".into(), json!(fam.source().kind_name()));
    match fam.source() {
        FamilySource::Generalized(p) => {
            map.insert("k".into(), json!(p.k()));
            map.insert("a".into(), json!(p.a()));
            map.insert("l".into(), json!(p.l()));
        }
        FamilySource::ClassicalCentralizer { k, reading } => {
            map.insert("k".into(), json!(k));
            map.insert("reading".into(), json!(reading.to_string()));
        }
        FamilySource::ClassicalParabolic { l, m, a } => {
            map.insert("l".into(), json!(l));
            map.insert("m".into(), json!(m));
            map.insert("a".into(), json!(a));
        }
        FamilySource::Explicit => {
            let pats: Vec<String> = fam.patterns().iter().map(|p| p.to_string()).collect();
            map.insert("patterns".into(), json!(pats));
        }
    }
    Value::Object(map)
}

#[derive(Serialize)]
struct FamilyJson {
    kind: &'static str,
    params: Value,
    patterns: Vec<String>,
}

#[derive(Serialize)]
struct SequenceJson {
    params: Value,
    method: String,
    n_max: usize,
    values: Vec<String>,
}

pub fn family_text(fam: &PatternFamily) -> String {
    let mut out = String::new();
    for p in fam.patterns() {
        writeln!(out, "{p}").unwrap();
    }
    let noun = if fam.len() == 1 {
        "pattern"
    } else {
        "patterns"
    };
    writeln!(out, "({} {noun})", fam.len()).unwrap();
    out
}

pub fn family_json(fam: &PatternFamily) -> String {
    let body = FamilyJson {
        kind: fam.source().kind_name(),
        params: family_params(fam),
        patterns: fam.patterns().iter().map(|p| p.to_string()).collect(),
    };
    serde_json::to_string_pretty(&body).unwrap() + "\n"
}

pub fn sequence(fam: &PatternFamily, method: &str, seq: &CountSequence, format: Format) -> String {
    match format {
        Format::Table => {
            let n_width = seq.len().saturating_sub(1).to_string().len().max(1);
            let mut out = format!("{:>n_width$}  count\n", "n");
            for (n, v) in seq.values().iter().enumerate() {
                writeln!(out, "{n:>n_width$}  {v}").unwrap();
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,count\n");
            for (n, v) in seq.values().iter().enumerate() {
                writeln!(out, "{n},{v}").unwrap();
            }
            out
        }
        Format::Json => {
            let body = SequenceJson {
                params: family_params(fam),
                method: method.to_string(),
                n_max: seq.len().saturating_sub(1),
                values: seq.values().iter().map(|v| v.to_string()).collect(),
            };
            serde_json::to_string_pretty(&body).unwrap() + "\n"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gpav_core::{c_family, CountSequence};

    #[test]
    fn csv_and_json_shapes() {
        let fam = c_family(3, 1, 2).unwrap();
        let seq = CountSequence::from_u64s(&[1, 1, 2, 5]);
        assert_eq!(
            sequence(&fam, "oracle", &seq, Format::Csv),
            "n,count\n0,1\n1,1\n2,2\n3,5\n"
        );
        let v: Value = serde_json::from_str(&sequence(&fam, "oracle", &seq, Format::Json)).unwrap();
        assert_eq!(v["values"], json!(["1", "1", "2", "5"]));
        assert_eq!(v["n_max"], json!(3));
        assert_eq!(v["params"]["kind"], json!("C"));
    }

    #[test]
    fn family_listing() {
        let fam = c_family(4, 1, 2).unwrap();
        assert_eq!(family_text(&fam), "13-2-4\n13-4-2\n(2 patterns)\n");
        let v: Value = serde_json::from_str(&family_json(&fam)).unwrap();
        assert_eq!(v["patterns"], json!(["13-2-4", "13-4-2"]));
        assert_eq!(v["params"]["l"], json!(2));
    }
}
