use std::fmt::Write as _;

use parbun::{decide, stack_dims, Decomposition, DimResult, Locus, StackDims};
use serde::{Deserialize, Serialize};

use crate::input::{AlphaSpec, ProblemSpec};
use crate::CliError;

/// Full result of `decide`: the echoed input, all dimensions and the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: ProblemSpec,
    pub dim_bun: i64,
    pub dim_nilp: Option<i64>,
    pub dim_pairs: Option<i64>,
    pub dim_inertia_excess: Option<i64>,
    pub verdict: String,
    pub margin: Option<i64>,
    pub witness: Option<Vec<AlphaSpec>>,
}

/// Result of `dims`: the four dimensions with their witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsReport {
    pub input: ProblemSpec,
    pub dim_bun: i64,
    pub dim_nilp: Option<i64>,
    pub dim_pairs: Option<i64>,
    pub dim_inertia_excess: Option<i64>,
    pub witness_nilp: Option<Vec<AlphaSpec>>,
    pub witness_pairs: Option<Vec<AlphaSpec>>,
    pub witness_inertia_excess: Option<Vec<AlphaSpec>>,
}

pub fn parts(dec: &Decomposition) -> Vec<AlphaSpec> {
    dec.parts().iter().map(AlphaSpec::from).collect()
}

/// Computes the dimensions and re-evaluates every witness.
fn checked_dims(spec: &ProblemSpec) -> Result<StackDims, CliError> {
    let (a, g) = spec.problem()?;
    let dims = stack_dims(&a, g)?;
    for (result, locus) in [
        (&dims.dim_nilp, Locus::Nilpotent),
        (&dims.dim_pairs, Locus::Pairs),
        (&dims.dim_inertia_excess, Locus::InertiaExcess),
    ] {
        recheck(result, locus, g, &a)?;
    }
    Ok(dims)
}

fn recheck(result: &DimResult, locus: Locus, g: u32, a: &parbun::DimVector) -> Result<(), CliError> {
    let Some(w) = &result.0 else {
        return Ok(());
    };
    let again = locus.evaluate(&w.witness, g)?;
    if again != w.value || w.witness.total()? != *a || w.witness.len() < locus.min_parts() {
        return Err(CliError::Invariant(format!(
            "{locus:?} witness {} evaluates to {again}, reported {}",
            w.witness, w.value
        )));
    }
    Ok(())
}

pub fn build_report(spec: &ProblemSpec) -> Result<Report, CliError> {
    let dims = checked_dims(spec)?;
    let (a, g) = spec.problem()?;
    let verdict = decide(&a, g)?;
    let expected_margin = dims
        .dim_inertia_excess
        .value()
        .map(|v| v - 1 - dims.dim_bun);
    if verdict.margin != expected_margin
        || verdict.witness.as_ref() != dims.dim_inertia_excess.witness()
    {
        return Err(CliError::Invariant(format!(
            "margin {:?} disagrees with dimensions (expected {expected_margin:?})",
            verdict.margin
        )));
    }
    Ok(Report {
        input: spec.clone(),
        dim_bun: dims.dim_bun,
        dim_nilp: dims.dim_nilp.value(),
        dim_pairs: dims.dim_pairs.value(),
        dim_inertia_excess: dims.dim_inertia_excess.value(),
        verdict: verdict.classification.to_string(),
        margin: verdict.margin,
        witness: verdict.witness.as_ref().map(parts),
    })
}

pub fn build_dims_report(spec: &ProblemSpec) -> Result<DimsReport, CliError> {
    let dims = checked_dims(spec)?;
    Ok(DimsReport {
        input: spec.clone(),
        dim_bun: dims.dim_bun,
        dim_nilp: dims.dim_nilp.value(),
        dim_pairs: dims.dim_pairs.value(),
        dim_inertia_excess: dims.dim_inertia_excess.value(),
        witness_nilp: dims.dim_nilp.witness().map(parts),
        witness_pairs: dims.dim_pairs.witness().map(parts),
        witness_inertia_excess: dims.dim_inertia_excess.witness().map(parts),
    })
}

pub fn fmt_opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn fmt_alpha(a: &AlphaSpec) -> String {
    let mut s = format!("({}", a.rank);
    for (i, row) in a.flags.iter().enumerate() {
        s.push(if i == 0 { ';' } else { ',' });
        let entries: Vec<_> = row.iter().map(|x| x.to_string()).collect();
        let _ = write!(s, "[{}]", entries.join(","));
    }
    s.push(')');
    s
}

pub fn fmt_parts(parts: Option<&[AlphaSpec]>) -> String {
    match parts {
        None => "-".to_string(),
        Some(parts) => {
            let inner: Vec<_> = parts.iter().map(fmt_alpha).collect();
            format!("{{{}}}", inner.join(", "))
        }
    }
}

fn header(out: &mut String, input: &ProblemSpec) {
    let _ = writeln!(out, "{:<20} {}", "genus", fmt_opt(input.genus.map(i64::from)));
    let _ = writeln!(out, "{:<20} {:?}", "weights", input.weights);
    let _ = writeln!(out, "{:<20} {}", "alpha", fmt_alpha(&input.alpha));
}

pub fn render_report_human(r: &Report) -> String {
    let mut out = String::new();
    header(&mut out, &r.input);
    for (name, value) in [
        ("dim Bun", fmt_opt(Some(r.dim_bun))),
        ("dim N (nilpotent)", fmt_opt(r.dim_nilp)),
        ("dim P (pairs)", fmt_opt(r.dim_pairs)),
        ("dim (I - I1)", fmt_opt(r.dim_inertia_excess)),
        ("margin", fmt_opt(r.margin)),
        ("verdict", r.verdict.clone()),
        ("witness", fmt_parts(r.witness.as_deref())),
    ] {
        let _ = writeln!(out, "{name:<20} {value}");
    }
    out
}

pub fn render_dims_human(r: &DimsReport) -> String {
    let mut out = String::new();
    header(&mut out, &r.input);
    let _ = writeln!(out, "{:<20} {:>8}  witness", "stack", "dim");
    let _ = writeln!(out, "{:<20} {:>8}  -", "Bun", r.dim_bun);
    for (name, value, witness) in [
        ("N (nilpotent)", r.dim_nilp, &r.witness_nilp),
        ("P (pairs)", r.dim_pairs, &r.witness_pairs),
        ("I - I1", r.dim_inertia_excess, &r.witness_inertia_excess),
    ] {
        let _ = writeln!(out, "{name:<20} {:>8}  {}", fmt_opt(value), fmt_parts(witness.as_deref()));
    }
    out
}
