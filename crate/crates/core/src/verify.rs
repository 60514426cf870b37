//! Formula-versus-enumeration checks and the homomesy conjecture scans.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::closed_forms::{self, NarayanaBijection};
use crate::error::Result;
use crate::ics::{count_ics, enumerate_ics, enumerate_order_ideals};
use crate::poset::{stacked_diamond_layers, Poset};
use crate::rowmotion::{orbit_decomposition, order_json};
use crate::stats::{
    format_rational, homomesy_report_for, homomesy_report_with, Rational, Statistic,
};

/// One formula evaluated at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub formula: String,
    pub params: Value,
    pub predicted: Value,
    pub observed: Value,
    pub ok: bool,
}

impl VerificationReport {
    fn new(formula: &str, params: Value, predicted: Value, observed: Value) -> Self {
        let ok = predicted == observed;
        VerificationReport {
            formula: formula.to_string(),
            params,
            predicted,
            observed,
            ok,
        }
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "formula": self.formula,
            "params": self.params,
            "predicted": self.predicted,
            "observed": self.observed,
            "ok": self.ok,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Quick,
    Full,
}

fn histogram_json(h: &[(usize, u128)]) -> Value {
    json!(h
        .iter()
        .map(|&(s, c)| json!([s, c as u64]))
        .collect::<Vec<_>>())
}

fn observed_histogram(p: &Poset) -> Result<(Value, Value)> {
    let d = orbit_decomposition(p)?;
    let h: Vec<(usize, u128)> = d
        .size_histogram()
        .into_iter()
        .map(|(s, c)| (s, c as u128))
        .collect();
    Ok((histogram_json(&h), order_json(&d.order)))
}

fn count_report(formula: &str, params: Value, predicted: u128, p: &Poset) -> VerificationReport {
    VerificationReport::new(
        formula,
        params,
        json!(predicted as u64),
        json!(count_ics(p)),
    )
}

fn structure_report(
    formula: &str,
    params: Value,
    prediction: &closed_forms::OrbitStructurePrediction,
    p: &Poset,
) -> Result<VerificationReport> {
    let (observed, order) = observed_histogram(p)?;
    Ok(VerificationReport::new(
        formula,
        params,
        json!({"sizes": histogram_json(&prediction.histogram()), "order": prediction.order()}),
        json!({"sizes": observed, "order": order}),
    ))
}

fn chain_counts(max_n: usize) -> Result<Vec<VerificationReport>> {
    (1..=max_n)
        .map(|n| {
            Ok(count_report(
                "ics_count_chain",
                json!({"n": n}),
                closed_forms::ics_count_chain(n as u64)?,
                &Poset::chain(n)?,
            ))
        })
        .collect()
}

fn chain_structures(max_n: usize) -> Result<Vec<VerificationReport>> {
    (1..=max_n)
        .map(|n| {
            structure_report(
                "chain_orbit_structure",
                json!({"n": n}),
                &closed_forms::chain_orbit_structure(n)?,
                &Poset::chain(n)?,
            )
        })
        .collect()
}

fn ordinal_sum_reports(layer_lists: &[Vec<usize>]) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for a in layer_lists {
        let p = Poset::ordinal_sum_of_antichains(a)?;
        out.push(count_report(
            "ics_count_ordinal_sum",
            json!({"a": a}),
            closed_forms::ics_count_ordinal_sum(a)?,
            &p,
        ));
        out.push(structure_report(
            "ordinal_sum_orbit_structure",
            json!({"a": a}),
            &closed_forms::ordinal_sum_orbit_structure(a)?,
            &p,
        )?);
    }
    Ok(out)
}

fn stacked_reports(params: &[(usize, usize)]) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for &(n, m) in params {
        let p = Poset::ordinal_sum_of_antichains(&stacked_diamond_layers(n, m))?;
        out.push(count_report(
            "ics_count_stacked_diamond",
            json!({"n": n, "m": m}),
            closed_forms::ics_count_stacked_diamond(n, m)?,
            &p,
        ));
        out.push(structure_report(
            "stacked_diamond_orbit_structure",
            json!({"n": n, "m": m}),
            &closed_forms::stacked_diamond_orbit_structure(n, m)?,
            &p,
        )?);
    }
    Ok(out)
}

fn repeated_reports(params: &[(usize, usize)]) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for &(n, m) in params {
        let p = Poset::ordinal_sum_of_antichains(&vec![m; n])?;
        out.push(count_report(
            "ics_count_repeated",
            json!({"n": n, "m": m}),
            closed_forms::ics_count_repeated(n, m)?,
            &p,
        ));
        out.push(structure_report(
            "repeated_orbit_structure",
            json!({"n": n, "m": m}),
            &closed_forms::repeated_orbit_structure(n, m)?,
            &p,
        )?);
    }
    Ok(out)
}

fn grid(m: usize, n: usize) -> Result<Poset> {
    Poset::product(&Poset::chain(m)?, &Poset::chain(n)?)
}

fn two_row_counts(max_n: usize) -> Result<Vec<VerificationReport>> {
    (2..=max_n)
        .map(|n| {
            Ok(count_report(
                "ics_count_2xn",
                json!({"n": n}),
                closed_forms::ics_count_2xn(n as u64)?,
                &grid(2, n)?,
            ))
        })
        .collect()
}

fn table_cells(cells: &[(usize, usize)]) -> Result<Vec<VerificationReport>> {
    cells
        .par_iter()
        .map(|&(m, n)| {
            let golden = closed_forms::table1_golden(m, n).expect("cell inside the table");
            Ok(count_report(
                "table1",
                json!({"m": m, "n": n}),
                golden as u128,
                &grid(m, n)?,
            ))
        })
        .collect()
}

fn full_support_reports(max_sum: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for m in 1..max_sum {
        for n in 2..=max_sum - m {
            let observed = enumerate_ics(&grid(m, n)?)
                .iter()
                .filter(|i| closed_forms::has_full_support(i, m, n))
                .count();
            out.push(VerificationReport::new(
                "count_full_support",
                json!({"m": m, "n": n}),
                json!(closed_forms::count_full_support(m as u64, n as u64)? as u64),
                json!(observed),
            ));
        }
    }
    Ok(out)
}

fn order_ideal_reports(max_sum: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for m in 1..max_sum {
        for n in 2..=max_sum - m {
            let cube =
                Poset::product_of(&[Poset::chain(m)?, Poset::chain(n - 1)?, Poset::chain(2)?])?;
            out.push(VerificationReport::new(
                "order_ideals_narayana",
                json!({"m": m, "n": n}),
                json!(closed_forms::narayana((m + n) as u64, n as u64)? as u64),
                json!(enumerate_order_ideals(&cube).len()),
            ));
        }
    }
    Ok(out)
}

/// ψ⁻¹∘ψ = id on all ideals, ψ∘ψ⁻¹ = id on all full-support sets, and
/// the two families have the same size.
pub fn check_bijection(m: usize, n: usize) -> Result<VerificationReport> {
    let b = NarayanaBijection::new(m, n)?;
    let ideals = enumerate_order_ideals(b.cube());
    let mut round_trips = true;
    let mut images = Vec::with_capacity(ideals.len());
    for j in &ideals {
        let i = b.psi(j)?;
        round_trips &= closed_forms::has_full_support(&i, m, n);
        round_trips &= b.psi_inverse(&i)? == *j;
        images.push(i);
    }
    let full: Vec<_> = enumerate_ics(b.grid())
        .into_iter()
        .filter(|i| closed_forms::has_full_support(i, m, n))
        .collect();
    for i in &full {
        round_trips &= b.psi(&b.psi_inverse(i)?)? == *i;
    }
    images.sort();
    images.dedup();
    let bijective = round_trips && images.len() == ideals.len() && images == full;
    Ok(VerificationReport::new(
        "psi_bijection",
        json!({"m": m, "n": n}),
        json!({"bijective": true, "size": closed_forms::count_full_support(m as u64, n as u64)? as u64}),
        json!({"bijective": bijective, "size": full.len()}),
    ))
}

fn bijection_reports(max_sum: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for m in 1..max_sum {
        for n in 2..=max_sum - m {
            out.push(check_bijection(m, n)?);
        }
    }
    Ok(out)
}

fn chain_average_reports(max_n: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let p = Poset::chain(n)?;
        let report = homomesy_report_for(&p, &orbit_decomposition(&p)?, Statistic::Cardinality)?;
        let mut observed: Vec<String> = report
            .orbit_averages
            .iter()
            .map(|(a, s)| format!("{}@{s}", crate::stats::format_rational(a)))
            .collect();
        let mut predicted: Vec<String> = closed_forms::chain_cardinality_averages(n)?
            .iter()
            .map(|(a, s)| format!("{}@{s}", crate::stats::format_rational(a)))
            .collect();
        observed.sort();
        predicted.sort();
        out.push(VerificationReport::new(
            "chain_cardinality_averages",
            json!({"n": n}),
            json!(predicted),
            json!(observed),
        ));
    }
    Ok(out)
}

/// Runs every formula check within the scope's budget.
pub fn verify_suite(scope: Scope) -> Result<Vec<VerificationReport>> {
    let full = scope == Scope::Full;
    let mut out = chain_counts(if full { 16 } else { 12 })?;
    out.extend(chain_structures(if full { 14 } else { 10 })?);
    out.extend(chain_average_reports(if full { 12 } else { 8 })?);
    let mut layers = vec![
        vec![1, 1, 1],
        vec![2, 2],
        vec![2, 3, 1, 4],
        vec![2, 4, 2, 4],
        vec![3, 3, 3],
        vec![1, 2, 1, 2, 1],
        vec![2, 1, 1, 2],
    ];
    if full {
        layers.extend([vec![3, 1, 2, 2, 3], vec![2, 2, 2, 2, 2, 2], vec![4, 4, 4]]);
    }
    out.extend(ordinal_sum_reports(&layers)?);
    let diamonds: &[(usize, usize)] = if full {
        &[(3, 2), (5, 2), (7, 3), (9, 2), (5, 4)]
    } else {
        &[(3, 2), (5, 2), (7, 3)]
    };
    out.extend(stacked_reports(diamonds)?);
    let repeated: &[(usize, usize)] = if full {
        &[(3, 2), (4, 2), (3, 3), (4, 3), (5, 2), (6, 2), (5, 3)]
    } else {
        &[(3, 2), (4, 2), (3, 3), (4, 3)]
    };
    out.extend(repeated_reports(repeated)?);
    out.extend(two_row_counts(if full { 8 } else { 6 })?);
    let cells: Vec<(usize, usize)> = if full {
        (1..=5).flat_map(|m| (1..=8).map(move |n| (m, n))).collect()
    } else {
        (1..=4).flat_map(|m| (1..=6).map(move |n| (m, n))).collect()
    };
    out.extend(table_cells(&cells)?);
    out.extend(full_support_reports(if full { 10 } else { 8 })?);
    out.extend(order_ideal_reports(if full { 10 } else { 8 })?);
    out.extend(bijection_reports(if full { 9 } else { 7 })?);
    Ok(out)
}

/// One poset checked during a conjecture scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanCase {
    pub m: usize,
    pub n: usize,
    pub elements: usize,
    pub orbits: usize,
    pub homomesic: bool,
    /// The common average, when homomesic.
    pub c: Option<Rational>,
    pub witness: Option<(usize, usize)>,
}

impl ScanCase {
    /// The scanned claim: homomesic with average 0.
    pub fn zero_mesic(&self) -> bool {
        self.c == Some(Rational::from(0))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub conjecture: String,
    pub budget: usize,
    pub cases: Vec<ScanCase>,
}

impl ScanResult {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(ScanCase::zero_mesic)
    }

    pub fn first_counterexample(&self) -> Option<&ScanCase> {
        self.cases.iter().find(|c| !c.zero_mesic())
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "conjecture": self.conjecture,
            "budget": self.budget,
            "verdict": if self.passed() { "PASS" } else { "COUNTEREXAMPLE" },
            "cases": self.cases.iter().map(|c| json!({
                "m": c.m,
                "n": c.n,
                "elements": c.elements,
                "orbits": c.orbits,
                "homomesic": c.homomesic,
                "c": c.c.as_ref().map(format_rational),
                "witness": c.witness.map(|(a, b)| json!([a, b])),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Checks that a statistic is 0-mesic on `[m]×[n]` for the given
/// parameter pairs, in parallel over pairs; case order follows `pairs`.
pub fn scan_with<F>(
    conjecture: &str,
    budget: usize,
    pairs: &[(usize, usize)],
    stat: F,
) -> Result<ScanResult>
where
    F: Fn(&Poset, &crate::ics::IntervalClosedSet) -> Result<i64> + Sync,
{
    let cases = pairs
        .par_iter()
        .map(|&(m, n)| {
            let p = grid(m, n)?;
            let d = orbit_decomposition(&p)?;
            let report = homomesy_report_with(&d, conjecture, |i| stat(&p, i))?;
            Ok(ScanCase {
                m,
                n,
                elements: m * n,
                orbits: d.orbits.len(),
                homomesic: report.homomesic,
                c: report.c,
                witness: report.witness,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanResult {
        conjecture: conjecture.to_string(),
        budget,
        cases,
    })
}

/// Pairs `m ≤ n` with `m + n ≤ max_sum` (the grid is symmetric).
pub fn max_minus_min_pairs(max_sum: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 1..max_sum {
        for n in m..=max_sum - m {
            out.push((m, n));
        }
    }
    out
}

/// `m ∈ {2, 3}`, `m + n − 1` even, `m·n ≤ max_elements`.
pub fn signed_cardinality_pairs(max_elements: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in [2, 3] {
        for n in 1..=max_elements / m {
            if (m + n - 1) % 2 == 0 {
                out.push((m, n));
            }
        }
    }
    out
}

/// Max minus min is 0-mesic on `[m]×[n]`, for `m + n ≤ max_sum`.
pub fn scan_max_minus_min(max_sum: usize) -> Result<ScanResult> {
    scan_with(
        "max_minus_min",
        max_sum,
        &max_minus_min_pairs(max_sum),
        |p, i| Statistic::MaxMinusMin.evaluate(p, i),
    )
}

/// Signed cardinality is 0-mesic on `[m]×[n]` for `m ∈ {2,3}` and
/// `m + n − 1` even, up to `max_elements` elements.
pub fn scan_signed_cardinality(max_elements: usize) -> Result<ScanResult> {
    scan_with(
        "signed_cardinality",
        max_elements,
        &signed_cardinality_pairs(max_elements),
        |p, i| Statistic::SignedCardinality.evaluate(p, i),
    )
}
