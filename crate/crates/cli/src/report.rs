//! Reproduction tables for `arlab report`.

use crate::{Exit, Output, Suite};
use crate::Format;
use arlab_core::acceptance::run_all;
use arlab_core::catalog::{f_formula, is_member_d, is_member_e};
use arlab_core::oracles::{enumerate_extremal_f, f_vertex_bound, oracle_f, Status, SCHEMA};

struct Table {
    title: String,
    caps: String,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn markdown(&self) -> String {
        let mut out = format!("# {}\n\nschema: {SCHEMA}; caps: {}\n\n", self.title, self.caps);
        out.push_str(&format!("| {} |\n", self.header.join(" | ")));
        out.push_str(&format!("|{}\n", "---|".repeat(self.header.len())));
        for row in &self.rows {
            out.push_str(&format!("| {} |\n", row.join(" | ").replace('\n', " ")));
        }
        out
    }

    fn csv(&self) -> String {
        let quote = |s: &str| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = format!("schema,caps,{}\n", self.header.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| quote(c)).collect();
            out.push_str(&format!("{SCHEMA},{},{}\n", quote(&self.caps), cells.join(",")));
        }
        out
    }

    fn json(&self) -> String {
        let rows: Vec<serde_json::Map<String, serde_json::Value>> = self
            .rows
            .iter()
            .map(|r| self.header.iter().map(|h| h.to_string()).zip(r.iter().map(|c| c.clone().into())).collect())
            .collect();
        let doc = serde_json::json!({ "schema": SCHEMA, "title": self.title, "caps": self.caps, "rows": rows });
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }
}

pub(crate) fn run(suite: Suite, format: Option<Format>) -> Result<Output, Exit> {
    let (table, all_pass) = match suite {
        Suite::Acceptance => acceptance(),
        Suite::Formulas => formulas(),
        Suite::Families => families(),
    };
    let text = match format {
        None | Some(Format::Md) => table.markdown(),
        Some(Format::Csv) => table.csv(),
        Some(Format::Json) => table.json(),
        Some(Format::Graph6) => return Err(Exit::usage("graph6 is not a report format")),
    };
    Ok(Output { text, code: if all_pass { 0 } else { 1 } })
}

fn verdict(ok: bool) -> String {
    if ok { "PASS" } else { "FAIL" }.to_string()
}

fn acceptance() -> (Table, bool) {
    let results = run_all();
    let all = results.iter().all(|r| r.passed);
    let rows = results.iter().map(|r| vec![r.id.to_string(), r.name.to_string(), verdict(r.passed), r.detail.clone()]).collect();
    let table = Table {
        title: "Acceptance".into(),
        caps: "as stated per criterion".into(),
        header: vec!["id", "criterion", "result", "detail"],
        rows,
    };
    (table, all)
}

fn formulas() -> (Table, bool) {
    let mut rows = Vec::new();
    let mut all = true;
    for nu in 1..=3 {
        for delta in 1..=3 {
            let cap = f_vertex_bound(nu, delta);
            let formula = f_formula(nu as u64, delta as u64).expect("positive parameters");
            let report = oracle_f(nu, delta, cap);
            let ok = report.status == Status::Complete && report.value == Some(formula);
            all &= ok;
            rows.push(vec![
                nu.to_string(),
                delta.to_string(),
                cap.to_string(),
                formula.to_string(),
                report.value.map(|v| v.to_string()).unwrap_or_default(),
                report.witnesses.len().to_string(),
                verdict(ok),
            ]);
        }
    }
    let table = Table {
        title: "f(ν, Δ): closed form vs oracle".into(),
        caps: "vertices = 2ν(Δ+1)".into(),
        header: vec!["nu", "delta", "cap_vertices", "formula", "oracle", "extremal_classes", "result"],
        rows,
    };
    (table, all)
}

fn families() -> (Table, bool) {
    let mut rows = Vec::new();
    let mut all = true;
    for nu in 1..=3 {
        for delta in 2..=3 {
            let cap = f_vertex_bound(nu, delta);
            let classes = enumerate_extremal_f(nu, delta, cap);
            let in_e = classes.iter().filter(|g| is_member_e(g, nu, delta)).count();
            let in_d = if nu == delta && nu % 2 == 1 {
                classes.iter().filter(|g| is_member_d(g, nu + 1)).count()
            } else {
                0
            };
            let covered = classes.iter().filter(|g| is_member_e(g, nu, delta) || (nu == delta && is_member_d(g, nu + 1))).count();
            all &= !classes.is_empty();
            rows.push(vec![
                nu.to_string(),
                delta.to_string(),
                cap.to_string(),
                classes.len().to_string(),
                in_e.to_string(),
                in_d.to_string(),
                (classes.len() - covered).to_string(),
            ]);
        }
    }
    let table = Table {
        title: "Extremal classes of F(ν, Δ)".into(),
        caps: "vertices = 2ν(Δ+1)".into(),
        header: vec!["nu", "delta", "cap_vertices", "classes", "in_E", "in_D", "other"],
        rows,
    };
    (table, all)
}
