use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use matrep::decide::{analyze, DecisionReport};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::BatchArgs;
use crate::commands::{load, report_json, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    /// Not representable over any field.
    NonRepresentable,
    /// Every tested characteristic failed, but no statement about all fields.
    NonRepresentableTested,
    /// Characteristic 0 failed and some positive characteristic did not.
    FiniteCharacteristicOnly,
    Inconclusive,
    LimitsHit,
    Error,
}

impl Category {
    pub const ALL: [Category; 6] = [
        Category::NonRepresentable,
        Category::NonRepresentableTested,
        Category::FiniteCharacteristicOnly,
        Category::Inconclusive,
        Category::LimitsHit,
        Category::Error,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Category::NonRepresentable => "non-representable",
            Category::NonRepresentableTested => "non-representable (tested chars)",
            Category::FiniteCharacteristicOnly => "finite characteristic only",
            Category::Inconclusive => "inconclusive",
            Category::LimitsHit => "limits hit",
            Category::Error => "error",
        }
    }
}

pub fn classify(r: &DecisionReport) -> Category {
    if r.all_fields_verdict.is_some() {
        return Category::NonRepresentable;
    }
    let char0 = r.characteristics.get(&0).map(|v| v.is_non_representable());
    let all = r.characteristics.values().all(|v| v.is_non_representable());
    let positive_open = r.characteristics.iter().any(|(p, v)| *p > 0 && !v.is_non_representable());
    let possible_open = r.possible_characteristics.as_ref().is_some_and(|ps| !ps.is_empty());
    if char0 == Some(true) && (positive_open || possible_open) {
        Category::FiniteCharacteristicOnly
    } else if r.limits_hit() {
        Category::LimitsHit
    } else if all && !r.characteristics.is_empty() {
        Category::NonRepresentableTested
    } else {
        Category::Inconclusive
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub file: String,
    pub category: Category,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub rows: Vec<Row>,
    pub counts: BTreeMap<Category, usize>,
}

impl Summary {
    pub fn new(rows: Vec<Row>) -> Self {
        let mut counts: BTreeMap<Category, usize> = Category::ALL.iter().map(|&c| (c, 0)).collect();
        for r in &rows {
            *counts.entry(r.category).or_default() += 1;
        }
        Summary { rows, counts }
    }

    pub fn status(&self) -> Option<Status> {
        if self.counts[&Category::Error] > 0 {
            None
        } else if self.counts[&Category::LimitsHit] > 0 {
            Some(Status::LimitsHit)
        } else {
            Some(Status::Completed)
        }
    }

    pub fn render(&self) -> String {
        let width = self.rows.iter().map(|r| r.file.len()).max().unwrap_or(4).max(4);
        let mut s = String::new();
        let _ = writeln!(s, "{:<width$}  {:<32}  detail", "file", "verdict");
        for r in &self.rows {
            let _ = writeln!(s, "{:<width$}  {:<32}  {}", r.file, r.category.label(), r.detail);
        }
        let _ = writeln!(s);
        for (c, n) in &self.counts {
            let _ = writeln!(s, "{:<32}  {n}", c.label());
        }
        let _ = writeln!(s, "{:<32}  {}", "total", self.rows.len());
        s
    }
}

fn detail(r: &DecisionReport) -> String {
    let mut parts = Vec::new();
    if let Some(c) = &r.candidate_characteristics {
        parts.push(format!("candidates {c:?}"));
    }
    if let Some(p) = &r.possible_characteristics {
        parts.push(format!("possible {p:?}"));
    }
    if let Some(w) = &r.witness {
        parts.push(w.describe());
    }
    parts.join("; ")
}

/// Files named directly, plus the `*.txt` files of named directories, in sorted order.
pub fn collect_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let mut found: Vec<PathBuf> = std::fs::read_dir(p)
                .with_context(|| format!("listing {}", p.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.is_file() && f.extension().is_some_and(|x| x == "txt"))
                .collect();
            found.sort();
            out.extend(found);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Report file names, made unique by a numeric suffix when two inputs share a stem.
fn report_names(files: &[PathBuf]) -> Vec<String> {
    let mut used = BTreeSet::new();
    files
        .iter()
        .map(|f| {
            let stem = f.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "input".into());
            let mut name = format!("{stem}.json");
            let mut k = 2;
            while !used.insert(name.clone()) {
                name = format!("{stem}-{k}.json");
                k += 1;
            }
            name
        })
        .collect()
}

fn process(path: &Path, report: &Path, a: &BatchArgs) -> Result<(Category, String)> {
    let m = load(path, a.force)?;
    let r = analyze(&m, &a.decide.options())?;
    let json = serde_json::to_string_pretty(&report_json(&r, true))?;
    std::fs::write(report, json).with_context(|| format!("writing {}", report.display()))?;
    Ok((classify(&r), detail(&r)))
}

pub fn run(a: &BatchArgs, out: &mut dyn Write) -> Result<Status> {
    let files = collect_inputs(&a.inputs)?;
    std::fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    let names = report_names(&files);
    let rows: Vec<Row> = files
        .par_iter()
        .zip(names.par_iter())
        .map(|(f, name)| {
            let report = a.out.join(name);
            match process(f, &report, a) {
                Ok((category, detail)) => {
                    Row { file: f.display().to_string(), category, detail, report: Some(report.display().to_string()) }
                }
                Err(e) => Row { file: f.display().to_string(), category: Category::Error, detail: format!("{e:#}"), report: None },
            }
        })
        .collect();
    let summary = Summary::new(rows);
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&summary)?)?;
    } else {
        out.write_all(summary.render().as_bytes())?;
    }
    match summary.status() {
        Some(s) => Ok(s),
        None => anyhow::bail!("some inputs could not be processed"),
    }
}
