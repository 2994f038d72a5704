//! Search for violations of `reg I^s = reg I^(s) = max(reg I + s - 1, 2s)`
//! on gap-free graphs. Nothing is asserted: deviations are reported as
//! candidate counterexamples with certificates.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use regpow_core::power::PowerPair;
use regpow_core::regularity;
use regpow_core::{Field, Graph};
use serde_json::Value;

use crate::corpus::{self, CorpusItem, CorpusPlan, RandomKind, Subject};
use crate::error::{HarnessError, Result};
use crate::report::{ExperimentReport, Summary};

/// Largest graph order allowed once `s >= 4`.
pub const MAX_N_FOR_HIGH_POWERS: usize = 6;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchParams {
    /// A single graph replaces the corpus when present.
    pub graph: Option<(String, Graph)>,
    pub s: u32,
    pub nmax: usize,
    pub samples: usize,
    pub seed: u64,
    pub field: Field,
    pub timings: bool,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub reports: Vec<ExperimentReport>,
    pub summary: Summary,
    pub warnings: Vec<String>,
}

pub fn run(params: &SearchParams) -> Result<SearchOutcome> {
    let started = Instant::now();
    if params.s < 2 {
        return Err(HarnessError::input("search needs s >= 2"));
    }
    let largest = match &params.graph {
        Some((_, g)) => g.n(),
        None if params.samples > 0 => params.nmax + 2,
        None => params.nmax,
    };
    let mut warnings = Vec::new();
    if params.s >= 4 {
        if largest > MAX_N_FOR_HIGH_POWERS {
            return Err(HarnessError::input(format!(
                "s = {} is only supported for graphs on at most {MAX_N_FOR_HIGH_POWERS} vertices; this corpus reaches {largest}",
                params.s
            )));
        }
        warnings.push(format!(
            "s = {}: the exponent box grows like s^n, expect long runtimes",
            params.s
        ));
    }
    let field = params.field.validate()?;
    let items = match &params.graph {
        Some((descriptor, g)) => vec![CorpusItem {
            index: 0,
            descriptor: descriptor.clone(),
            subject: Subject::Graph(g.clone()),
        }],
        None => corpus::build(&CorpusPlan {
            nmax: params.nmax,
            samples: params.samples,
            seed: params.seed,
            random: RandomKind::GapFree,
        })?,
    };
    let reports: Vec<Option<ExperimentReport>> = items
        .par_iter()
        .map(|item| examine(item, params.s, field, params.timings))
        .collect::<Result<_>>()?;
    let excluded = reports.iter().filter(|r| r.is_none()).count();
    let reports: Vec<ExperimentReport> = reports.into_iter().flatten().collect();
    let mut map = BTreeMap::new();
    if let Some((descriptor, _)) = &params.graph {
        map.insert("graph".to_string(), Value::from(descriptor.as_str()));
    }
    map.insert("s".to_string(), Value::from(params.s));
    map.insert("nmax".to_string(), Value::from(params.nmax));
    map.insert("samples".to_string(), Value::from(params.samples));
    map.insert("seed".to_string(), Value::from(params.seed));
    let mut summary = Summary::tally("search", field, map, &reports);
    let conforming = reports
        .iter()
        .filter(|r| r.quantities.get("conforms") == Some(&Value::Bool(true)))
        .count();
    summary.tallies.insert("conforming".into(), conforming);
    summary.tallies.insert("candidate_counterexamples".into(), reports.len() - conforming);
    summary.tallies.insert("excluded_by_hypothesis".into(), excluded);
    if params.timings {
        summary.wall_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    Ok(SearchOutcome {
        reports,
        summary,
        warnings,
    })
}

fn examine(item: &CorpusItem, s: u32, field: Field, timings: bool) -> Result<Option<ExperimentReport>> {
    let graph = match &item.subject {
        Subject::Graph(g) if g.edge_count() > 0 && g.is_gap_free() => g,
        _ => return Ok(None),
    };
    let started = Instant::now();
    let mut rep = ExperimentReport::new("search", item, Some(s), field);
    rep.asserted = Some(format!("conjectured: reg I^{s} = reg I^({s}) = max(reg I + {}, {})", s - 1, 2 * s));
    let base = graph.edge_ideal();
    // reg I^k for k = 1..=s gives a finite view of the eventual 2k + b behaviour.
    let mut ordinary = Vec::new();
    for k in 1..=s {
        ordinary.push(regularity::regularity(&base.power(k), field)?);
    }
    let pair = PowerPair::new(&base, s)?;
    let symbolic = regularity::regularity(&pair.symbolic, field)?;
    let reg_i = ordinary[0].ideal();
    let reg_power = ordinary[s as usize - 1].ideal();
    let conjectured = (reg_i + s - 1).max(2 * s);
    let conforms = reg_power == conjectured && symbolic.ideal() == conjectured;
    let sequence: Vec<u32> = ordinary.iter().map(|r| r.ideal()).collect();
    let offsets: Vec<i64> = sequence
        .iter()
        .zip(1..)
        .map(|(&r, k): (&u32, i64)| i64::from(r) - 2 * k)
        .collect();
    let last = *offsets.last().expect("s >= 2");
    // Smallest t with reg I^k - 2k constant on t..=s; the true index is at least t.
    let t = offsets.iter().rposition(|&b| b != last).map_or(1, |p| p + 2);
    rep.set("reg_I", reg_i);
    rep.set("reg_power", reg_power);
    rep.set("reg_symbolic", symbolic.ideal());
    rep.set("conjectured", conjectured);
    rep.set("conforms", conforms);
    rep.set("reg_powers_sequence", &sequence);
    rep.set("b_estimate", last);
    rep.set("rstab_lower_bound", t);
    if !conforms {
        rep.set("candidate_counterexample", true);
        rep.attach("I", &ordinary[0]);
        rep.attach("power", &ordinary[s as usize - 1]);
        rep.attach("symbolic", &symbolic);
    }
    if timings {
        rep.wall_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    Ok(Some(rep))
}
