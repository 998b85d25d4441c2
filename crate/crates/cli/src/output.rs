use serde_json::Value;

/// What a command produced, in both renderings.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    /// False when a check ran to completion but did not hold.
    pub ok: bool,
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn new(json: Value, text: String) -> Self {
        Report { ok: true, json, text }
    }

    pub fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
        s.push('\n');
        s
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out += &line(widths.iter().map(|w| "-".repeat(*w)).collect());
    for r in rows {
        out += &line(r.clone());
    }
    out
}
