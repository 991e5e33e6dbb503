use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use matrep::decide::{
    analyze, brute_force_search, prepare, verify_representation, DecideError, DecisionReport, RepresentationCheck,
    SaturatedSystem,
};
use matrep::io::{parse_matrix, parse_matroid, render_matrix, render_matroid, ParsedMatroid};
use matrep::matroid::Matroid;

use crate::args::{CheckArgs, Cli, Command, DumpArgs, InputArgs, SearchArgs, VerifyArgs};
use crate::batch;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Completed,
    LimitsHit,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Completed => 0,
            Status::LimitsHit => 2,
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status> {
    match &cli.command {
        Command::Check(a) => check(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Dual(a) => {
            let m = load(&a.file, a.force)?;
            out.write_all(render_matroid(&m.dual()).as_bytes())?;
            Ok(Status::Completed)
        }
        Command::Simplify(a) => simplify(a, out),
        Command::DumpSystem(a) => dump(a, out),
        Command::Search(a) => search(a, out),
        Command::Batch(a) => batch::run(a, out),
    }
}

/// Reads and parses a matroid file; warnings and tolerated violations go to stderr.
pub fn load(path: &Path, force: bool) -> Result<Matroid> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let ParsedMatroid { matroid, warnings, violations } =
        parse_matroid(&text, force).with_context(|| format!("parsing {}", path.display()))?;
    for w in warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    for v in violations {
        eprintln!("warning: {}: {v} (accepted because of --force)", path.display());
    }
    Ok(matroid)
}

pub fn report_json(r: &DecisionReport, timings: bool) -> serde_json::Value {
    if timings {
        serde_json::to_value(r).expect("serializable")
    } else {
        r.to_json_untimed()
    }
}

fn status_of(r: &DecisionReport) -> Status {
    if r.limits_hit() {
        Status::LimitsHit
    } else {
        Status::Completed
    }
}

fn check(a: &CheckArgs, out: &mut dyn Write) -> Result<Status> {
    let m = load(&a.input.file, a.input.force)?;
    let r = analyze(&m, &a.decide.options())?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report_json(&r, !a.no_timings))?)?;
    } else {
        out.write_all(r.render_text().as_bytes())?;
        for (name, lines) in &r.trace {
            writeln!(out, "trace {name}:")?;
            for l in lines {
                writeln!(out, "  {l}")?;
            }
        }
    }
    Ok(status_of(&r))
}

pub fn render_check(c: &RepresentationCheck, q: u32) -> String {
    let mut s = String::new();
    if c.valid {
        let _ = writeln!(s, "valid representation over GF({q})");
        return s;
    }
    let _ = writeln!(s, "not a representation over GF({q}): {} discrepancies", c.discrepancies.len());
    for d in &c.discrepancies {
        let (m, a) = (
            if d.independent_in_matroid { "independent" } else { "dependent" },
            if d.independent_columns { "independent" } else { "dependent" },
        );
        let _ = writeln!(s, "  {}: {m} in the matroid, columns {a}", d.set);
    }
    s
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<Status> {
    let m = load(&a.matroid, a.force)?;
    let text = std::fs::read_to_string(&a.matrix).with_context(|| format!("reading {}", a.matrix.display()))?;
    let (field, rows) = parse_matrix(&text).with_context(|| format!("parsing {}", a.matrix.display()))?;
    if let Some(q) = a.field {
        if q != field.order() {
            bail!("{} is over GF({}), but --field {q} was given", a.matrix.display(), field.order());
        }
    }
    let c = verify_representation(&field, &rows, &m)?;
    if a.json {
        let v = serde_json::json!({ "field": field.order(), "valid": c.valid, "discrepancies": c.discrepancies });
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    } else {
        out.write_all(render_check(&c, field.order()).as_bytes())?;
    }
    Ok(Status::Completed)
}

fn simplify(a: &InputArgs, out: &mut dyn Write) -> Result<Status> {
    let m = load(&a.file, a.force)?;
    let s = m.simplify()?;
    let loops = s.loops();
    if !loops.is_empty() {
        writeln!(out, "# loops: {}", join(&loops))?;
    }
    for e in 1..=m.order() {
        match (s.representative[e - 1], s.mapping[e - 1]) {
            (Some(r), _) if r != e => writeln!(out, "# {e} is parallel to {r}")?,
            (_, Some(k)) => writeln!(out, "# {e} -> {k}")?,
            _ => {}
        }
    }
    out.write_all(render_matroid(&s.matroid).as_bytes())?;
    Ok(Status::Completed)
}

fn dump(a: &DumpArgs, out: &mut dyn Write) -> Result<Status> {
    let m = load(&a.input.file, a.input.force)?;
    let p = prepare(&m, !a.no_dual)?;
    for n in p.steps.notes() {
        writeln!(out, "# {n}")?;
    }
    let sys = SaturatedSystem::build(&p, a.order)?;
    out.write_all(sys.render().as_bytes())?;
    Ok(Status::Completed)
}

fn search(a: &SearchArgs, out: &mut dyn Write) -> Result<Status> {
    let m = load(&a.input.file, a.input.force)?;
    let field = matrep::poly::gf::GaloisField::new(a.field)?;
    match brute_force_search(&m, a.field, a.limit) {
        Ok(Some(rows)) => out.write_all(render_matrix(&field, &rows).as_bytes())?,
        Ok(None) => writeln!(out, "no representation over GF({}) with the normalized pattern", a.field)?,
        Err(e @ DecideError::SearchTooLarge { .. }) => {
            eprintln!("{e}");
            return Ok(Status::LimitsHit);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(Status::Completed)
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
