//! Text tables and JSON wrappers.

use serde::Serialize;

use defect_core::{AlgebraPresentation, InvariantReport};

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

/// Field name and rendered value, in display order.
fn rows(r: &InvariantReport) -> Vec<(&'static str, String)> {
    let f = &r.flags;
    let mut out = vec![
        ("dim", r.dim.to_string()),
        ("depth", r.depth.to_string()),
        ("codepth", r.codepth.to_string()),
        ("embdim", r.embdim.to_string()),
        ("codim", r.codim.to_string()),
        ("mu", r.mu.to_string()),
        ("epsilon2", r.epsilon2.to_string()),
        ("cid", r.cid.to_string()),
        ("type", r.type_.to_string()),
        ("idd", r.idd.to_string()),
        ("cm", yes_no(f.cm)),
        ("gorenstein", yes_no(f.gorenstein)),
        ("ci", yes_no(f.ci)),
        ("regular", yes_no(f.regular)),
        ("aci", yes_no(f.aci)),
    ];
    if let Some(c) = r.flat_certificate {
        out.push(("flat", c.to_string()));
    }
    out
}

pub fn report_table(a: &AlgebraPresentation, r: &InvariantReport) -> String {
    let mut out = format!("{a}\n");
    for (name, value) in rows(r) {
        out.push_str(&format!("{name:<12}{value}\n"));
    }
    out.trim_end().to_string()
}

pub fn comparison_table(a: &AlgebraPresentation, pipeline: &InvariantReport, oracle: &InvariantReport) -> String {
    let mut out = format!("{a}\n{:<12}{:<10}{:<10}match\n", "invariant", "pipeline", "oracle");
    for ((name, p), (_, o)) in rows(pipeline).into_iter().zip(rows(oracle)) {
        let m = if p == o { "=" } else { "MISMATCH" };
        out.push_str(&format!("{name:<12}{p:<10}{o:<10}{m}\n"));
    }
    out.push_str(if pipeline == oracle { "identical" } else { "differ" });
    out
}

#[derive(Serialize)]
pub struct OracleComparison<'a> {
    pub algebra: &'a str,
    pub identical: bool,
    pub pipeline: &'a InvariantReport,
    pub oracle: &'a InvariantReport,
}
