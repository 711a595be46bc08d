//! Parameter sweeps over random models. Samples are drawn and evaluated in
//! parallel; rows come back in grid order, then seed order.

use std::time::Instant;

use boxkit_core::random::{derive_seed, sample, Model, RandomModelSpec};
use boxkit_core::{BoundReport, Status};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::run_bounds;
use crate::config::ExperimentConfig;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultRow {
    pub seed: u64,
    pub model: String,
    pub n: usize,
    /// Edge count of the sample.
    pub m: usize,
    pub param: String,
    pub bound_name: String,
    /// `num/den`, empty when the bound does not apply.
    pub value: String,
    pub ceiling: Option<u64>,
    pub runtime_ms: u64,
    /// `applicable`, the reason the bound does not apply, or `budget`.
    #[serde(skip)]
    pub status: String,
    #[serde(skip)]
    pub value_f64: Option<f64>,
}

pub fn status_label(s: &Status) -> String {
    match s {
        Status::Applicable => "applicable".into(),
        Status::Inapplicable(r) => r.as_str().into(),
        Status::Budget(_) => "budget".into(),
    }
}

fn row(spec: &RandomModelSpec, m: usize, r: &BoundReport, runtime_ms: u64) -> ResultRow {
    ResultRow {
        seed: spec.seed,
        model: spec.model.name().into(),
        n: spec.model.n(),
        m,
        param: spec.model.param().to_string(),
        bound_name: r.name.into(),
        value: r.value.map(|v| v.to_string()).unwrap_or_default(),
        ceiling: r.ceiling(),
        runtime_ms,
        status: status_label(&r.status),
        value_f64: r.value.map(|v| v.to_f64()),
    }
}

/// Mean bound value and ceiling over the seeds of one grid cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellSummary {
    pub model: String,
    pub n: usize,
    pub param: String,
    pub bound_name: String,
    pub applicable: usize,
    pub samples: usize,
    pub mean_value: Option<f64>,
    pub mean_ceiling: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentOutput {
    pub rows: Vec<ResultRow>,
    pub summary: Vec<CellSummary>,
}

#[derive(Debug, thiserror::Error)]
#[error("sampling {model} (seed {seed}): {source}")]
pub struct SampleError {
    pub model: String,
    pub seed: u64,
    pub source: boxkit_core::Error,
}

fn run_task(cfg: &ExperimentConfig, spec: RandomModelSpec) -> Result<Vec<ResultRow>, SampleError> {
    let g = sample(&spec)
        .map_err(|source| SampleError {
            model: spec.model.name().into(),
            seed: spec.seed,
            source,
        })?
        .into_graph();
    let m = g.edge_count();
    Ok(cfg
        .bounds
        .iter()
        .map(|&b| {
            let start = Instant::now();
            let r = run_bounds(&g, &[b], &cfg.options).remove(0);
            let ms = if cfg.timing {
                start.elapsed().as_millis() as u64
            } else {
                0
            };
            row(&spec, m, &r, ms)
        })
        .collect())
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutput, SampleError> {
    let cells = cfg.cells();
    let tasks: Vec<RandomModelSpec> = cells
        .iter()
        .enumerate()
        .flat_map(|(c, &model)| {
            (0..cfg.seeds).map(move |s| RandomModelSpec {
                model,
                seed: derive_seed(cfg.master_seed, c as u64 * cfg.seeds + s),
            })
        })
        .collect();
    let per_task: Vec<Vec<ResultRow>> = tasks
        .par_iter()
        .map(|&spec| run_task(cfg, spec))
        .collect::<Result<_, _>>()?;
    let summary = summarize(&cells, cfg, &per_task);
    Ok(ExperimentOutput {
        rows: per_task.into_iter().flatten().collect(),
        summary,
    })
}

fn mean(xs: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, count) = xs.fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    (count > 0).then(|| sum / count as f64)
}

fn summarize(
    cells: &[Model],
    cfg: &ExperimentConfig,
    per_task: &[Vec<ResultRow>],
) -> Vec<CellSummary> {
    let seeds = cfg.seeds as usize;
    let mut out = Vec::new();
    for (c, model) in cells.iter().enumerate() {
        let rows = &per_task[c * seeds..(c + 1) * seeds];
        for (b, kind) in cfg.bounds.iter().enumerate() {
            let applicable: Vec<&ResultRow> = rows
                .iter()
                .map(|r| &r[b])
                .filter(|r| r.value_f64.is_some())
                .collect();
            out.push(CellSummary {
                model: model.name().into(),
                n: model.n(),
                param: model.param().to_string(),
                bound_name: kind.name().into(),
                applicable: applicable.len(),
                samples: seeds,
                mean_value: mean(applicable.iter().filter_map(|r| r.value_f64)),
                mean_ceiling: mean(
                    applicable
                        .iter()
                        .filter_map(|r| r.ceiling.map(|c| c as f64)),
                ),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_follow_grid_then_seed_order() {
        let cfg = ExperimentConfig::parse(
            "model = gnm\nn = 6, 7\nm = 5, 8\nseeds = 3\nmaster_seed = 1\nbounds = cv, universal\n",
        )
        .unwrap();
        let out = run_experiment(&cfg).unwrap();
        assert_eq!(out.rows.len(), 2 * 2 * 3 * 2);
        assert_eq!(out.summary.len(), 2 * 2 * 2);
        let cells: Vec<(usize, String)> = out.rows.iter().map(|r| (r.n, r.param.clone())).collect();
        let mut sorted = cells.clone();
        sorted.sort_by_key(|(n, p)| (*n, p.len(), p.clone()));
        assert_eq!(cells, sorted);
        assert!(out.rows.iter().all(|r| r.runtime_ms == 0));
        assert_eq!(out, run_experiment(&cfg).unwrap());
    }
}
