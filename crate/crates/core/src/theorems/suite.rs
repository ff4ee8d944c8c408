use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::presentation::render_presentation_file;

use super::checks::*;
use super::{TensorSetup, TheoremCheckResult, TheoremError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremFilter {
    All,
    Dim,
    Depth,
    Codepth,
    Idd,
    Type,
    Cid,
    Codim,
    Equiv,
    Flat,
}

impl FromStr for TheoremFilter {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => TheoremFilter::All,
            "dim" => TheoremFilter::Dim,
            "depth" => TheoremFilter::Depth,
            "codepth" => TheoremFilter::Codepth,
            "idd" => TheoremFilter::Idd,
            "type" => TheoremFilter::Type,
            "cid" => TheoremFilter::Cid,
            "codim" => TheoremFilter::Codim,
            "equiv" => TheoremFilter::Equiv,
            "flat" => TheoremFilter::Flat,
            other => return Err(TheoremError::UnknownFilter(other.to_string())),
        })
    }
}

/// Runs the selected checks on one setup. Under `All`, the codimension
/// check runs only when a smoothness certificate exists; selecting it
/// explicitly without one is an error.
pub fn run_checks(s: &TensorSetup, filter: TheoremFilter) -> Result<Vec<TheoremCheckResult>, TheoremError> {
    use TheoremFilter as F;
    let want = |f: TheoremFilter| filter == F::All || filter == f;
    let mut out = Vec::new();
    if want(F::Dim) {
        out.push(check_dim(s));
    }
    if want(F::Depth) {
        out.push(check_depth(s));
    }
    if want(F::Codepth) {
        out.push(check_codepth(s));
    }
    if want(F::Idd) {
        out.push(check_idd(s));
    }
    if want(F::Type) {
        out.push(check_type(s)?);
    }
    if want(F::Cid) {
        out.push(check_cid(s));
    }
    if filter == F::Codim || (filter == F::All && s.smooth_side().is_some()) {
        out.push(check_codim(s)?);
    }
    if want(F::Equiv) {
        out.extend(check_equivalences(s));
    }
    if want(F::Flat) {
        for p in s.flat_pairs() {
            out.push(check_flat_type(&p));
            out.extend(LambdaKind::ALL.iter().map(|k| check_flat_lambda(*k, &p)));
        }
    }
    Ok(out)
}

/// Runs checks on every setup in parallel; results keep the setup order.
pub fn run_suite(
    setups: &[TensorSetup],
    filter: TheoremFilter,
) -> Vec<(String, Result<Vec<TheoremCheckResult>, TheoremError>)> {
    setups.par_iter().map(|s| (s.name.clone(), run_checks(s, filter))).collect()
}

/// Everything needed to rerun a failing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproBundle {
    pub setup: String,
    pub seed: u64,
    pub presentations: String,
    pub failures: Vec<TheoremCheckResult>,
}

impl ReproBundle {
    /// `None` when every result passes.
    pub fn from_results(s: &TensorSetup, results: &[TheoremCheckResult]) -> Option<ReproBundle> {
        let failures: Vec<_> = results.iter().filter(|r| !r.all_pass()).cloned().collect();
        if failures.is_empty() {
            return None;
        }
        Some(ReproBundle {
            setup: s.name.clone(),
            seed: s.seed(),
            presentations: render_presentation_file(&[s.a.presentation(), s.b.presentation()]),
            failures,
        })
    }
}
