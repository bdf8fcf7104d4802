use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Format {
    /// Aligned columns for reading.
    Table,
    /// One JSON object per line.
    Jsonl,
}

/// Ordered `(field, value)` pairs.
pub type Row = Vec<(&'static str, Value)>;

#[derive(Clone, Debug)]
pub struct Section {
    pub name: &'static str,
    pub rows: Vec<Row>,
}

/// Records produced by one command, closed by a PASS/FAIL summary.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub sections: Vec<Section>,
    pub summary: Row,
    pub passed: bool,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn json_object(pairs: impl IntoIterator<Item = (String, Value)>) -> String {
    let body: Vec<String> = pairs
        .into_iter()
        .map(|(k, v)| format!("{}:{}", Value::String(k), v))
        .collect();
    format!("{{{}}}", body.join(","))
}

impl Report {
    pub fn new(command: &'static str, passed: bool) -> Self {
        Report { command, sections: Vec::new(), summary: Vec::new(), passed }
    }

    pub fn section(mut self, name: &'static str, rows: Vec<Row>) -> Self {
        self.sections.push(Section { name, rows });
        self
    }

    pub fn summary(mut self, key: &'static str, value: Value) -> Self {
        self.summary.push((key, value));
        self
    }

    pub fn with_status(mut self, ok: bool) -> Self {
        self.passed &= ok;
        self
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.render_table(),
            Format::Jsonl => self.render_jsonl(),
        }
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        for sec in &self.sections {
            out.push_str(&format!("# {} ({})\n", sec.name, sec.rows.len()));
            let Some(first) = sec.rows.first() else { continue };
            let mut keys: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
            for r in &sec.rows {
                for (k, _) in r {
                    if !keys.contains(k) {
                        keys.push(k);
                    }
                }
            }
            let grid: Vec<Vec<String>> = sec
                .rows
                .iter()
                .map(|r| {
                    keys.iter()
                        .map(|k| r.iter().find(|(kk, _)| kk == k).map(|(_, v)| cell(v)).unwrap_or_else(|| "-".into()))
                        .collect()
                })
                .collect();
            let widths: Vec<usize> = keys
                .iter()
                .enumerate()
                .map(|(i, k)| grid.iter().map(|r| r[i].chars().count()).chain([k.len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: Vec<String>| -> String {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                format!("{}\n", padded.join("  ").trim_end())
            };
            out.push_str(&line(keys.iter().map(|k| k.to_string()).collect()));
            for r in grid {
                out.push_str(&line(r));
            }
        }
        let fields: Vec<String> = self.summary.iter().map(|(k, v)| format!("{k}={}", cell(v).replace(' ', "_"))).collect();
        out.push_str(&format!("{} {} {}\n", self.status(), self.command, fields.join(" ")).replace("  \n", "\n"));
        out.replace(" \n", "\n")
    }

    fn render_jsonl(&self) -> String {
        let mut out = String::new();
        for sec in &self.sections {
            for r in &sec.rows {
                let pairs = std::iter::once(("record".to_string(), Value::from(sec.name)))
                    .chain(r.iter().map(|(k, v)| (k.to_string(), v.clone())));
                out.push_str(&json_object(pairs));
                out.push('\n');
            }
        }
        let pairs = [
            ("record".to_string(), Value::from("summary")),
            ("command".to_string(), Value::from(self.command)),
            ("status".to_string(), Value::from(self.status())),
        ]
        .into_iter()
        .chain(self.summary.iter().map(|(k, v)| (k.to_string(), v.clone())));
        out.push_str(&json_object(pairs));
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        Report::new("demo", true)
            .section("row", vec![vec![("a", json!(1)), ("b", json!("xy"))], vec![("a", json!(22)), ("b", Value::Null)]])
            .summary("count", json!(2))
    }

    #[test]
    fn table_layout() {
        assert_eq!(sample().render(Format::Table), "# row (2)\na   b\n1   xy\n22  -\nPASS demo count=2\n");
    }

    #[test]
    fn jsonl_layout() {
        let s = sample().with_status(false).render(Format::Jsonl);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], r#"{"record":"row","a":1,"b":"xy"}"#);
        assert_eq!(lines[2], r#"{"record":"summary","command":"demo","status":"FAIL","count":2}"#);
        for l in lines {
            serde_json::from_str::<Value>(l).unwrap();
        }
    }
}
