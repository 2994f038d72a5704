//! Single computations on one graph or ideal.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use regpow_core::generate::GraphSpec;
use regpow_core::regularity::{self, has_linear_resolution, has_linear_resolution_betti, regularity_audit};
use regpow_core::{betti_oracle, io, reg_from_betti, symbolic_power, Field, Graph, MonomialIdeal};
use serde_json::json;

use crate::corpus::{CorpusItem, Subject};
use crate::error::{exit, HarnessError, Result};
use crate::report::ExperimentReport;

macro_rules! named_enum {
    ($name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq)]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn name(self) -> &'static str {
                match self { $($name::$variant => $text),+ }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $name {
            type Err = HarnessError;

            fn from_str(s: &str) -> Result<Self> {
                $name::ALL.iter().copied().find(|v| v.name() == s).ok_or_else(|| {
                    let names: Vec<_> = $name::ALL.iter().map(|v| v.name()).collect();
                    HarnessError::input(format!("unknown value {s:?}; expected one of {}", names.join(", ")))
                })
            }
        }
    };
}

named_enum!(Task {
    Reg => "reg",
    Betti => "betti",
    Linres => "linres",
    Power => "power",
    Symbolic => "symbolic",
    Gapfree => "gapfree",
    Extremal => "extremal",
});

named_enum!(Method {
    DegreeComplex => "degree-complex",
    Koszul => "koszul",
    Both => "both",
});

/// Reads a graph from a file in the text or JSON format. A path that does
/// not exist but parses as a family spec (`cycle:5`, `gnp:7,0.5,3`) is built
/// directly.
pub fn load_graph(arg: &str) -> Result<(String, Graph)> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Ok(spec) = arg.parse::<GraphSpec>() {
            return Ok((spec.to_string(), spec.build()?));
        }
    }
    let text = read(path)?;
    let graph = io::parse_graph(&text).map_err(|e| HarnessError::input(format!("{arg}: {e}")))?;
    Ok((arg.to_string(), graph))
}

pub fn load_ideal(arg: &str) -> Result<(String, MonomialIdeal)> {
    let text = read(Path::new(arg))?;
    let ideal = io::parse_ideal(&text).map_err(|e| HarnessError::input(format!("{arg}: {e}")))?;
    Ok((arg.to_string(), ideal))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Clone, Debug)]
pub struct ComputeRequest {
    pub descriptor: String,
    pub subject: Subject,
    pub task: Task,
    pub s: Option<u32>,
    pub field: Field,
    pub method: Method,
    pub audit_full_scan: bool,
}

#[derive(Clone, Debug)]
pub struct ComputeOutcome {
    pub report: ExperimentReport,
}

impl ComputeOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.mismatch {
            exit::MISMATCH
        } else {
            exit::SUCCESS
        }
    }
}

pub fn compute(req: &ComputeRequest) -> Result<ComputeOutcome> {
    let field = req.field.validate()?;
    let item = CorpusItem {
        index: 0,
        descriptor: req.descriptor.clone(),
        subject: req.subject.clone(),
    };
    let mut rep = ExperimentReport::new(&format!("compute:{}", req.task), &item, req.s, field);
    if !matches!(req.task, Task::Gapfree | Task::Betti) {
        rep.set("method", req.method.name());
    }
    let base = req.subject.ideal();
    if req.task != Task::Gapfree && (base.is_zero() || base.is_unit()) {
        return Err(HarnessError::input("the ideal must be nonzero and proper"));
    }
    if req.s == Some(0) {
        return Err(HarnessError::input("--s must be at least 1"));
    }
    match req.task {
        Task::Gapfree => {
            let graph = req
                .subject
                .graph()
                .ok_or_else(|| HarnessError::input("task gapfree needs --graph"))?;
            rep.set("value", graph.is_gap_free());
            if let Some(((a, b), (c, d))) = graph.find_gap() {
                rep.set("gap", [[a + 1, b + 1], [c + 1, d + 1]]);
            }
        }
        Task::Reg => regularity_task(&base, field, req, &mut rep)?,
        Task::Power => regularity_task(&base.power(req.s.unwrap_or(2)), field, req, &mut rep)?,
        Task::Symbolic => {
            let s = req.s.unwrap_or(2);
            let target = symbolic_power(&base, s).map_err(|e| HarnessError::input(e.to_string()))?;
            regularity_task(&target, field, req, &mut rep)?;
        }
        Task::Linres => {
            let target = base.power(req.s.unwrap_or(1));
            let by_degree = || has_linear_resolution(&target, field);
            let by_betti = || has_linear_resolution_betti(&target, field);
            match req.method {
                Method::DegreeComplex => rep.set("value", by_degree()?),
                Method::Koszul => rep.set("value", by_betti()?),
                Method::Both => {
                    let (d, k) = (by_degree()?, by_betti()?);
                    rep.set("value", d);
                    rep.set("value_koszul", k);
                    if d != k {
                        rep.mismatch(format!("degree complexes say {d}, Betti numbers say {k}"));
                    }
                }
            }
        }
        Task::Betti => {
            let target = base.power(req.s.unwrap_or(1));
            let table = betti_oracle(&target, field)?;
            let graded: Vec<[usize; 3]> = table
                .totals()
                .into_iter()
                .map(|((i, j), beta)| [i, j as usize, beta])
                .collect();
            let multigraded: Vec<_> = table
                .entries()
                .map(|((i, b), beta)| json!({ "i": i, "b": b.entries(), "beta": beta }))
                .collect();
            rep.set("value", reg_from_betti(&table)?);
            rep.set("graded", graded);
            rep.set("multigraded", multigraded);
        }
        Task::Extremal => {
            let target = match req.s {
                Some(s) => symbolic_power(&base, s).map_err(|e| HarnessError::input(e.to_string()))?,
                None => base.clone(),
            };
            let r = regularity::regularity(&target, field)?;
            rep.set("value", r.ideal());
            rep.attach("extremal", &r);
        }
    }
    Ok(ComputeOutcome { report: rep })
}

fn regularity_task(ideal: &MonomialIdeal, field: Field, req: &ComputeRequest, rep: &mut ExperimentReport) -> Result<()> {
    let degree_route = |rep: &mut ExperimentReport| -> Result<u32> {
        if req.audit_full_scan {
            let audit = regularity_audit(ideal, field)?;
            rep.set("value_full_scan", audit.audit.ideal());
            if !audit.agree() {
                rep.mismatch(format!(
                    "pruned scan gives {} but full scan gives {}",
                    audit.primary.ideal(),
                    audit.audit.ideal()
                ));
            }
            rep.attach("extremal", &audit.primary);
            Ok(audit.primary.ideal())
        } else {
            let r = regularity::regularity(ideal, field)?;
            rep.attach("extremal", &r);
            Ok(r.ideal())
        }
    };
    let koszul_route = || -> Result<u32> { Ok(reg_from_betti(&betti_oracle(ideal, field)?)?) };
    match req.method {
        Method::DegreeComplex => {
            let v = degree_route(rep)?;
            rep.set("value", v);
        }
        Method::Koszul => rep.set("value", koszul_route()?),
        Method::Both => {
            let d = degree_route(rep)?;
            let k = koszul_route()?;
            rep.set("value", d);
            rep.set("value_koszul", k);
            if d != k {
                rep.mismatch(format!("degree complexes give {d}, Betti numbers give {k}"));
            }
        }
    }
    Ok(())
}
