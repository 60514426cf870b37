//! Command-line interface: argument parsing, commands and output formats.

use std::collections::HashSet;
use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ics_core::csp::csp_check_for;
use ics_core::ics::{count_ics, enumerate_ics, enumerate_ics_ordered, visit_ics};
use ics_core::poset::DEFAULT_MAX_ELEMENTS;
use ics_core::rowmotion::{
    orbit_decomposition, order_json, rowmotion_graph_dot, OrbitDecomposition,
};
use ics_core::stats::{format_rational, homomesy_report_for};
use ics_core::verify::{self, ScanResult};
use ics_core::{IntervalClosedSet, Order, Poset, Statistic, Subset};
use serde_json::{json, Value};
use thiserror::Error;

use crate::expr::{parse_expr, ExprError};

/// Environment variable that overrides the element cap.
pub const MAX_ELEMENTS_VAR: &str = "ICS_MAX_ELEMENTS";

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NEGATIVE: u8 = 3;
pub const EXIT_VERIFICATION: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ics_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => EXIT_USAGE,
            CliError::Io(_) | CliError::Csv(_) => EXIT_FAILURE,
        }
    }
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Affirmative,
    Negative,
    VerificationFailed,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Affirmative => EXIT_OK,
            Verdict::Negative => EXIT_NEGATIVE,
            Verdict::VerificationFailed => EXIT_VERIFICATION,
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Affirmative
        } else {
            Verdict::Negative
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeedOrder {
    /// Ascending mask order.
    Canonical,
    /// The order the enumeration produces sets in.
    Generation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Conjecture {
    /// Max minus min is 0-mesic on [m]×[n]; budget bounds m + n.
    MaxMinusMin,
    /// Signed cardinality is 0-mesic on [m]×[n], m ∈ {2,3}, m+n−1 even;
    /// budget bounds m·n.
    SignedCardinality,
}

#[derive(Debug, Parser)]
#[command(
    name = "ics",
    version,
    about = "Interval-closed sets of finite posets: enumeration, rowmotion orbits, homomesy"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    /// Acknowledge an ICS_MAX_ELEMENTS value above the default cap.
    #[arg(long, global = true)]
    pub allow_large: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List or count the interval-closed sets.
    Enumerate {
        /// Poset expression, or @FILE with a JSON description.
        poset: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = SeedOrder::Canonical)]
        seed_order: SeedOrder,
    },
    /// Rowmotion orbit decomposition.
    Orbits {
        poset: String,
        /// Print every orbit's members.
        #[arg(long)]
        members: bool,
        /// Write the rowmotion functional graph in DOT format.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Which set each orbit is listed from.
        #[arg(long, value_enum, default_value_t = SeedOrder::Canonical)]
        seed_order: SeedOrder,
    },
    /// Orbit averages of a statistic; exit 3 when not homomesic.
    Homomesy {
        poset: String,
        /// cardinality, signed_cardinality, max_count, min_count,
        /// max_minus_min or toggleability:<index-or-label>
        stat: String,
    },
    /// Cyclic sieving check for a nonnegative statistic; exit 3 when it fails.
    Csp { poset: String, stat: String },
    /// Compare every closed form with enumeration; exit 4 on any mismatch.
    Verify {
        #[arg(value_enum, default_value_t = ScopeArg::Quick)]
        scope: ScopeArg,
    },
    /// Scan a 0-mesy conjecture over product-of-chains posets; exit 3 on a
    /// counterexample. A pass is evidence, not a proof.
    Conjecture {
        #[arg(value_enum)]
        name: Conjecture,
        #[arg(long)]
        budget: Option<usize>,
        /// Scan this statistic instead of the conjecture's own.
        #[arg(long)]
        statistic: Option<String>,
    },
    /// Describe a poset: JSON description or text summary, optional DOT.
    Poset {
        poset: String,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
}

/// Element cap from the environment value; raising it needs `allow_large`.
pub fn element_cap(env: Option<&str>, allow_large: bool) -> Result<usize, CliError> {
    let Some(raw) = env else {
        return Ok(DEFAULT_MAX_ELEMENTS);
    };
    let cap: usize = raw.trim().parse().ok().filter(|&c| c >= 1).ok_or_else(|| {
        CliError::Usage(format!(
            "{MAX_ELEMENTS_VAR}={raw} is not a positive integer"
        ))
    })?;
    if cap > DEFAULT_MAX_ELEMENTS && !allow_large {
        return Err(CliError::Usage(format!(
            "{MAX_ELEMENTS_VAR}={cap} exceeds the default cap of {DEFAULT_MAX_ELEMENTS}; pass --allow-large to acknowledge"
        )));
    }
    Ok(cap)
}

/// A poset named on the command line.
pub struct Loaded {
    pub name: String,
    pub poset: Poset,
}

pub fn load_poset(spec: &str, cap: usize) -> Result<Loaded, CliError> {
    let too_big = |n: u128| {
        CliError::Usage(format!(
            "poset has {n} elements, above the cap of {cap} (set {MAX_ELEMENTS_VAR} to raise it)"
        ))
    };
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)?;
        let poset = Poset::from_json(&text)?;
        if poset.len() > cap {
            return Err(too_big(poset.len() as u128));
        }
        return Ok(Loaded {
            name: spec.to_string(),
            poset,
        });
    }
    let expr = parse_expr(spec).map_err(|e| CliError::Usage(e.render(spec)))?;
    let n = expr.element_count();
    if n > cap as u128 {
        return Err(too_big(n));
    }
    let poset = expr.build().map_err(|e| match e {
        ExprError::Build(core) => CliError::Core(core),
        other => CliError::Usage(other.render(spec)),
    })?;
    Ok(Loaded {
        name: expr.to_string(),
        poset,
    })
}

fn set_text(p: &Poset, s: &Subset) -> String {
    let parts: Vec<String> = s.iter().map(|x| p.label(x)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn set_indices(s: &Subset) -> String {
    s.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn json_line(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    writeln!(out, "{v}")?;
    Ok(())
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Errors go to `err`.
pub fn run<I, T>(
    args: I,
    env_cap: Option<&str>,
    out: &mut (dyn Write + Send),
    err: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render();
            let _ = if e.use_stderr() {
                write!(err, "{}", rendered.ansi())
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".to_string())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli, env_cap, out)),
            Err(e) => Err(CliError::Usage(format!("cannot start {n} workers: {e}"))),
        },
        None => execute(&cli, env_cap, out),
    };
    let _ = out.flush();
    match result {
        Ok(v) => v.exit_code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(
    cli: &Cli,
    env_cap: Option<&str>,
    out: &mut (dyn Write + Send),
) -> Result<Verdict, CliError> {
    let cap = || element_cap(env_cap, cli.allow_large);
    let format = cli.format;
    match &cli.command {
        Command::Enumerate {
            poset,
            count_only,
            seed_order,
        } => enumerate(
            &load_poset(poset, cap()?)?,
            *count_only,
            *seed_order,
            format,
            out,
        ),
        Command::Orbits {
            poset,
            members,
            dot,
            seed_order,
        } => orbits(
            &load_poset(poset, cap()?)?,
            *members,
            dot.as_ref(),
            *seed_order,
            format,
            out,
        ),
        Command::Homomesy { poset, stat } => {
            homomesy(&load_poset(poset, cap()?)?, stat, format, out)
        }
        Command::Csp { poset, stat } => csp(&load_poset(poset, cap()?)?, stat, format, out),
        Command::Verify { scope } => verify_command(*scope, format, out),
        Command::Conjecture {
            name,
            budget,
            statistic,
        } => conjecture(*name, *budget, statistic.as_deref(), format, out),
        Command::Poset { poset, dot } => {
            describe(&load_poset(poset, cap()?)?, dot.as_ref(), format, out)
        }
    }
}

fn seed_order_name(order: SeedOrder) -> &'static str {
    match order {
        SeedOrder::Canonical => "canonical",
        SeedOrder::Generation => "generation",
    }
}

fn enumerate(
    loaded: &Loaded,
    count_only: bool,
    seed_order: SeedOrder,
    format: Format,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let p = &loaded.poset;
    let count = count_ics(p);
    if count_only {
        match format {
            Format::Text => writeln!(out, "{count}")?,
            Format::Json => json_line(
                out,
                &json!({"poset": loaded.name, "elements": p.len(), "count": count}),
            )?,
            Format::Csv => {
                let mut w = csv_writer(out);
                w.write_record(["poset", "elements", "count"])?;
                w.write_record([loaded.name.clone(), p.len().to_string(), count.to_string()])?;
                w.flush()?;
            }
        }
        return Ok(Verdict::Affirmative);
    }

    // Members are streamed; canonical order needs the sorted list first.
    let emit_all =
        |emit: &mut dyn FnMut(&IntervalClosedSet) -> Result<(), CliError>| -> Result<(), CliError> {
            match seed_order {
                SeedOrder::Canonical => enumerate_ics(p).iter().try_for_each(&mut *emit),
                SeedOrder::Generation => {
                    let mut result = Ok(());
                    visit_ics(p, |i| {
                        if result.is_ok() {
                            result = emit(&i);
                        }
                    });
                    result
                }
            }
        };
    match format {
        Format::Text => {
            emit_all(&mut |i| {
                writeln!(out, "{}", set_text(p, i))?;
                Ok(())
            })?;
            writeln!(out, "count: {count}")?;
        }
        Format::Json => {
            // keys in the same sorted order serde_json uses elsewhere
            write!(
                out,
                "{{\"count\":{count},\"elements\":{},\"poset\":{},\"seed_order\":\"{}\",\"sets\":[",
                p.len(),
                json!(loaded.name),
                seed_order_name(seed_order)
            )?;
            let mut first = true;
            emit_all(&mut |i| {
                if !first {
                    out.write_all(b",")?;
                }
                first = false;
                write!(out, "{}", json!(i.to_vec()))?;
                Ok(())
            })?;
            writeln!(out, "]}}")?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["index", "size", "elements"])?;
            let mut k = 0usize;
            emit_all(&mut |i| {
                w.write_record([k.to_string(), i.len().to_string(), set_indices(i)])?;
                k += 1;
                Ok(())
            })?;
            w.flush()?;
        }
    }
    Ok(Verdict::Affirmative)
}

/// Orbits as member lists, each starting at its seed. Canonical seeds are
/// the smallest members; generation seeds are the first members met in
/// generation order.
fn seeded_orbits(
    p: &Poset,
    d: &OrbitDecomposition,
    seed_order: SeedOrder,
) -> Vec<Vec<IntervalClosedSet>> {
    let canonical: Vec<Vec<IntervalClosedSet>> =
        d.orbits.iter().map(|o| o.members().to_vec()).collect();
    if seed_order == SeedOrder::Canonical {
        return canonical;
    }
    let mut where_is = std::collections::HashMap::new();
    for (k, members) in canonical.iter().enumerate() {
        for (pos, i) in members.iter().enumerate() {
            where_is.insert(i.as_subset().clone(), (k, pos));
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for i in enumerate_ics_ordered(p, Order::Generation) {
        let (k, pos) = where_is[i.as_subset()];
        if seen.insert(k) {
            let mut members = canonical[k].clone();
            members.rotate_left(pos);
            out.push(members);
        }
    }
    out
}

fn orbits(
    loaded: &Loaded,
    members: bool,
    dot: Option<&PathBuf>,
    seed_order: SeedOrder,
    format: Format,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let p = &loaded.poset;
    let d = orbit_decomposition(p)?;
    if let Some(path) = dot {
        std::fs::write(path, rowmotion_graph_dot(p, &d))?;
    }
    let hist = d.size_histogram();
    let listed = if members {
        seeded_orbits(p, &d, seed_order)
    } else {
        Vec::new()
    };
    match format {
        Format::Text => {
            writeln!(out, "poset: {}", loaded.name)?;
            writeln!(out, "sets: {}", d.total)?;
            writeln!(out, "orbits: {}", d.orbits.len())?;
            let sizes: Vec<String> = hist.iter().map(|(s, c)| format!("{s} x{c}")).collect();
            writeln!(out, "sizes: {}", sizes.join(", "))?;
            writeln!(out, "order: {}", d.order)?;
            for (k, o) in listed.iter().enumerate() {
                let chain: Vec<String> = o.iter().map(|i| set_text(p, i)).collect();
                writeln!(out, "orbit {k} (size {}): {}", o.len(), chain.join(" -> "))?;
            }
        }
        Format::Json => {
            let mut v = json!({
                "poset": loaded.name,
                "total": d.total,
                "orbit_count": d.orbits.len(),
                "order": order_json(&d.order),
                "sizes": hist.iter().map(|&(s, c)| json!([s, c])).collect::<Vec<_>>(),
            });
            if members {
                v["seed_order"] = json!(seed_order_name(seed_order));
                v["orbits"] = json!(listed
                    .iter()
                    .map(|o| json!({"size": o.len(), "members": o.iter().map(|i| i.to_vec()).collect::<Vec<_>>()}))
                    .collect::<Vec<_>>());
            }
            json_line(out, &v)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            if members {
                w.write_record(["orbit", "position", "size", "elements"])?;
                for (k, o) in listed.iter().enumerate() {
                    for (pos, i) in o.iter().enumerate() {
                        w.write_record([
                            k.to_string(),
                            pos.to_string(),
                            o.len().to_string(),
                            set_indices(i),
                        ])?;
                    }
                }
            } else {
                w.write_record(["size", "count"])?;
                for (s, c) in &hist {
                    w.write_record([s.to_string(), c.to_string()])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(Verdict::Affirmative)
}

fn homomesy(
    loaded: &Loaded,
    stat: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let p = &loaded.poset;
    let stat = Statistic::parse_for(stat, p)?;
    let d = orbit_decomposition(p)?;
    let r = homomesy_report_for(p, &d, stat)?;
    match format {
        Format::Text => {
            writeln!(out, "poset: {}", loaded.name)?;
            writeln!(out, "statistic: {}", r.stat)?;
            match &r.c {
                Some(c) => writeln!(out, "homomesic: yes, c = {c}")?,
                None => writeln!(out, "homomesic: no")?,
            }
            writeln!(out, "global average: {}", r.global_average)?;
            for (k, (a, size)) in r.orbit_averages.iter().enumerate() {
                writeln!(out, "orbit {k} (size {size}): {a}")?;
            }
            if let Some((a, b)) = r.witness {
                writeln!(
                    out,
                    "witness: orbits {a} and {b} average {} and {}",
                    r.orbit_averages[a].0, r.orbit_averages[b].0
                )?;
            }
        }
        Format::Json => {
            let mut v = r.to_json_value();
            v["poset"] = json!(loaded.name);
            json_line(out, &v)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["orbit", "size", "average"])?;
            for (k, (a, size)) in r.orbit_averages.iter().enumerate() {
                w.write_record([k.to_string(), size.to_string(), format_rational(a)])?;
            }
            w.flush()?;
        }
    }
    Ok(Verdict::from_bool(r.homomesic))
}

fn polynomial_text(f: &[i128]) -> String {
    let terms: Vec<String> = f
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, c)| match k {
            0 => c.to_string(),
            1 => format!("{c}q"),
            _ => format!("{c}q^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn csp(
    loaded: &Loaded,
    stat: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let p = &loaded.poset;
    let stat = Statistic::parse_for(stat, p)?;
    let d = orbit_decomposition(p)?;
    let v = csp_check_for(p, &d, stat)?;
    match format {
        Format::Text => {
            writeln!(out, "poset: {}", loaded.name)?;
            writeln!(out, "statistic: {stat}")?;
            writeln!(out, "order: {}", v.order)?;
            writeln!(out, "f(q) = {}", polynomial_text(&v.generating_function))?;
            let fixed: Vec<String> = v.fixed_points.iter().map(u64::to_string).collect();
            writeln!(
                out,
                "fixed points of Row^d, d = 0..{}: {}",
                v.order - 1,
                fixed.join(" ")
            )?;
            match v.failing_d {
                None => writeln!(out, "cyclic sieving: holds")?,
                Some(d) => writeln!(out, "cyclic sieving: fails at d = {d}")?,
            }
        }
        Format::Json => {
            let mut j = v.to_json_value();
            j["poset"] = json!(loaded.name);
            j["stat"] = json!(stat.id());
            json_line(out, &j)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["d", "fixed_points"])?;
            for (d, c) in v.fixed_points.iter().enumerate() {
                w.write_record([d.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(Verdict::from_bool(v.holds))
}

fn verify_command(
    scope: ScopeArg,
    format: Format,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let scope = match scope {
        ScopeArg::Quick => verify::Scope::Quick,
        ScopeArg::Full => verify::Scope::Full,
    };
    let reports = verify::verify_suite(scope)?;
    let failed = reports.iter().filter(|r| !r.ok).count();
    match format {
        Format::Text => {
            for r in &reports {
                let status = if r.ok { "ok  " } else { "FAIL" };
                writeln!(
                    out,
                    "{status} {} {} predicted {} observed {}",
                    r.formula, r.params, r.predicted, r.observed
                )?;
            }
            writeln!(out, "{} checks, {failed} mismatches", reports.len())?;
        }
        Format::Json => json_line(
            out,
            &json!({
                "ok": failed == 0,
                "checks": reports.len(),
                "mismatches": failed,
                "reports": reports.iter().map(|r| r.to_json_value()).collect::<Vec<_>>(),
            }),
        )?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["formula", "params", "predicted", "observed", "ok"])?;
            for r in &reports {
                w.write_record([
                    r.formula.clone(),
                    r.params.to_string(),
                    r.predicted.to_string(),
                    r.observed.to_string(),
                    r.ok.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(if failed == 0 {
        Verdict::Affirmative
    } else {
        Verdict::VerificationFailed
    })
}

fn conjecture(
    name: Conjecture,
    budget: Option<usize>,
    statistic: Option<&str>,
    format: Format,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let (default_stat, default_budget, pairs): (
        Statistic,
        usize,
        fn(usize) -> Vec<(usize, usize)>,
    ) = match name {
        Conjecture::MaxMinusMin => (Statistic::MaxMinusMin, 9, verify::max_minus_min_pairs),
        Conjecture::SignedCardinality => (
            Statistic::SignedCardinality,
            24,
            verify::signed_cardinality_pairs,
        ),
    };
    let budget = budget.unwrap_or(default_budget);
    let stat = match statistic {
        Some(s) => s.parse::<Statistic>()?,
        None => default_stat,
    };
    let result: ScanResult = verify::scan_with(&stat.id(), budget, &pairs(budget), |p, i| {
        stat.evaluate(p, i)
    })?;
    match format {
        Format::Text => {
            for c in &result.cases {
                let verdict = match (&c.c, c.witness) {
                    (Some(avg), _) => format!("homomesic, c = {avg}"),
                    (None, Some((a, b))) => format!("not homomesic, orbits {a} and {b} differ"),
                    (None, None) => "not homomesic".to_string(),
                };
                writeln!(
                    out,
                    "[{}]x[{}]: {} elements, {} orbits, {verdict}",
                    c.m, c.n, c.elements, c.orbits
                )?;
            }
            match result.first_counterexample() {
                None => writeln!(
                    out,
                    "PASS: {} is 0-mesic on all {} posets scanned (evidence, not a proof)",
                    result.conjecture,
                    result.cases.len()
                )?,
                Some(c) => writeln!(
                    out,
                    "COUNTEREXAMPLE: {} on [{}]x[{}]",
                    result.conjecture, c.m, c.n
                )?,
            }
        }
        Format::Json => json_line(out, &result.to_json_value())?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["m", "n", "elements", "orbits", "homomesic", "c"])?;
            for c in &result.cases {
                w.write_record([
                    c.m.to_string(),
                    c.n.to_string(),
                    c.elements.to_string(),
                    c.orbits.to_string(),
                    c.homomesic.to_string(),
                    c.c.as_ref().map(format_rational).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(Verdict::from_bool(result.passed()))
}

fn describe(
    loaded: &Loaded,
    dot: Option<&PathBuf>,
    format: Format,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let p = &loaded.poset;
    if let Some(path) = dot {
        std::fs::write(path, p.to_dot(None))?;
    }
    match format {
        Format::Text => {
            writeln!(out, "poset: {}", loaded.name)?;
            writeln!(out, "elements: {}", p.len())?;
            writeln!(out, "cover relations: {}", p.covers().len())?;
            writeln!(out, "ranked: {}", if p.is_ranked() { "yes" } else { "no" })?;
            let names =
                |v: Vec<usize>| v.iter().map(|&x| p.label(x)).collect::<Vec<_>>().join(", ");
            writeln!(out, "minimal: {}", names(p.minimal_elements()))?;
            writeln!(out, "maximal: {}", names(p.maximal_elements()))?;
        }
        Format::Json => writeln!(out, "{}", p.to_json())?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["lower", "upper", "lower_label", "upper_label"])?;
            for &(a, b) in p.covers() {
                w.write_record([a.to_string(), b.to_string(), p.label(a), p.label(b)])?;
            }
            w.flush()?;
        }
    }
    Ok(Verdict::Affirmative)
}
