use serde_json::{Map, Value};

pub const FORMAT_TAG: &str = "stralg-1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Ordered key/value report. In text mode scalars print as `key=value` and
/// string lists print one entry per line.
pub struct Report {
    entries: Vec<(String, Value)>,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            entries: vec![
                ("format".into(), FORMAT_TAG.into()),
                ("command".into(), command.into()),
                ("seed".into(), seed.into()),
            ],
            ok: true,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.entries.push((key.to_string(), value.into()));
        self
    }

    pub fn lines(&mut self, key: &str, lines: Vec<String>) -> &mut Self {
        self.set(key, Value::Array(lines.into_iter().map(Value::String).collect()))
    }

    pub fn fail(&mut self) {
        self.ok = false;
    }

    pub fn render(&self, format: Format) -> String {
        let verdict = if self.ok { "PASS" } else { "FAIL" };
        match format {
            Format::Text => {
                let mut s = String::new();
                for (k, v) in &self.entries {
                    match v {
                        Value::Array(items) => {
                            for it in items {
                                match it {
                                    Value::String(line) => s.push_str(line),
                                    other => s.push_str(&other.to_string()),
                                }
                                s.push('\n');
                            }
                        }
                        Value::String(x) => s.push_str(&format!("{k}={x}\n")),
                        other => s.push_str(&format!("{k}={other}\n")),
                    }
                }
                s.push_str(&format!("verdict={verdict}\n"));
                s
            }
            Format::Json => {
                let mut m = Map::new();
                for (k, v) in &self.entries {
                    m.insert(k.clone(), v.clone());
                }
                m.insert("verdict".into(), verdict.into());
                let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }
}
