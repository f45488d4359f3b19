use quadop::checkers::{HopfResult, HopfVerdict};
use quadop::rep::Decomposition;
use serde::Serialize;
use std::fmt::Write;

pub const KOSZUL_SOURCE: &str = "cited, not computed";

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Row>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub decompositions: Vec<DecompositionEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            verdicts: Vec::new(),
            decompositions: Vec::new(),
            checks: Vec::new(),
            presentation: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Koszul {
    pub value: bool,
    pub source: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Row {
    pub presentation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dihedral: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub koszul: Option<Koszul>,
}

#[derive(Debug, Serialize)]
pub struct DecompositionEntry {
    pub space: String,
    pub dim: u64,
    pub multiplicities: Decomposition,
}

#[derive(Debug, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failures: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckEntry {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        CheckEntry {
            name: name.into(),
            holds,
            samples: None,
            failures: None,
            detail: None,
        }
    }

    pub fn detail(mut self, d: Option<String>) -> Self {
        self.detail = d;
        self
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn hopf_cell(h: &HopfResult) -> String {
    match (h.verdict, &h.witness) {
        (HopfVerdict::Unique, Some(w)) => format!("unique, {w}"),
        (HopfVerdict::Unique, None) => "unique".into(),
        (HopfVerdict::All, _) => "all B".into(),
        (HopfVerdict::None, _) => "none".into(),
        (HopfVerdict::Constrained, _) => format!(
            "constrained, {} = 0",
            h.constraint.as_deref().unwrap_or("?")
        ),
    }
}

/// Long failure details are cut in text output; JSON keeps them whole.
fn shorten(s: &str) -> String {
    const MAX: usize = 240;
    if s.chars().count() <= MAX {
        s.to_string()
    } else {
        let head: String = s.chars().take(MAX).collect();
        format!("{head} …")
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s}{}", " ".repeat(widths[c] - s.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

impl Report {
    pub fn render(&self) -> String {
        let mut out = String::new();
        if !self.verdicts.is_empty() {
            let has = |f: fn(&Row) -> bool| self.verdicts.iter().any(f);
            let mut header = vec!["operad".to_string()];
            let (c, d, h, k) = (
                has(|r| r.cyclic.is_some()),
                has(|r| r.dihedral.is_some()),
                has(|r| r.hopf.is_some()),
                has(|r| r.koszul.is_some()),
            );
            if k {
                header.push(format!("koszul ({KOSZUL_SOURCE})"));
            }
            if c {
                header.push("cyclic".into());
            }
            if d {
                header.push("dihedral".into());
            }
            if h {
                header.push("hopf".into());
            }
            let mut rows = vec![header];
            for r in &self.verdicts {
                let mut row = vec![r.presentation.clone()];
                if k {
                    row.push(r.koszul.as_ref().map(|x| yes_no(x.value).to_string()).unwrap_or_default());
                }
                if c {
                    row.push(r.cyclic.map(|x| yes_no(x).to_string()).unwrap_or_default());
                }
                if d {
                    row.push(r.dihedral.map(|x| yes_no(x).to_string()).unwrap_or_default());
                }
                if h {
                    row.push(r.hopf.as_ref().map(hopf_cell).unwrap_or_default());
                }
                rows.push(row);
            }
            out.push_str(&table(&rows));
            for r in &self.verdicts {
                if let Some(w) = &r.cyclic_witness {
                    let _ = writeln!(out, "{}: the cycle moves {w} out of R", r.presentation);
                }
                if let Some(f) = r.hopf.as_ref().and_then(|h| h.diagonal_fails_on.as_ref()) {
                    let _ = writeln!(out, "{}: no diagonal ({f})", r.presentation);
                }
            }
        }
        for d in &self.decompositions {
            let _ = writeln!(out, "{} (dim {}) = {}", d.space, d.dim, d.multiplicities);
        }
        for c in &self.checks {
            let mut line = format!("{}: {}", c.name, if c.holds { "PASS" } else { "FAIL" });
            if let (Some(s), Some(f)) = (c.samples, c.failures) {
                let _ = write!(line, " ({f} of {s} samples failed)");
            }
            if let Some(d) = &c.detail {
                let _ = write!(line, "; {}", shorten(d));
            }
            out.push_str(&line);
            out.push('\n');
        }
        if let Some(p) = &self.presentation {
            out.push_str(p);
        }
        out
    }
}
