//! Evaluating a selection of bounds on one graph. Every selected bound
//! yields a report: applicable with a value, or carrying the reason it does
//! not apply.

use std::str::FromStr;

use boxkit_core::method1::{self, Family};
use boxkit_core::{method2, spectral, BipartiteGraph, BoundReport, Error, Graph, Reason};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Imin,
    Cv,
    RegularComplement,
    DegreeRatio,
    Family(Family),
    Spectral,
    Method2,
    Universal,
    TExpander,
    BipartiteUniversal,
    BipartiteSpectral,
}

impl BoundKind {
    pub const ALL: [BoundKind; 13] = [
        BoundKind::Imin,
        BoundKind::Cv,
        BoundKind::RegularComplement,
        BoundKind::DegreeRatio,
        BoundKind::Family(Family::Coplanar),
        BoundKind::Family(Family::C4Free),
        BoundKind::Family(Family::ComplementCycle),
        BoundKind::Spectral,
        BoundKind::Method2,
        BoundKind::Universal,
        BoundKind::TExpander,
        BoundKind::BipartiteUniversal,
        BoundKind::BipartiteSpectral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Imin => "imin",
            BoundKind::Cv => "cv",
            BoundKind::RegularComplement => "regular_complement",
            BoundKind::DegreeRatio => "degree_ratio",
            BoundKind::Family(Family::Coplanar) => "family_coplanar",
            BoundKind::Family(Family::C4Free) => "family_c4free",
            BoundKind::Family(Family::ComplementCycle) => "family_complement_cycle",
            BoundKind::Spectral => "spectral",
            BoundKind::Method2 => "method2",
            BoundKind::Universal => "universal",
            BoundKind::TExpander => "t_expander",
            BoundKind::BipartiteUniversal => "bipartite_universal",
            BoundKind::BipartiteSpectral => "bipartite_spectral",
        }
    }
}

impl FromStr for BoundKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundKind::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown bound `{s}`"))
    }
}

/// Comma-separated bound names, or `all`.
pub fn parse_selection(s: &str) -> Result<Vec<BoundKind>, String> {
    if s.trim() == "all" {
        return Ok(BoundKind::ALL.to_vec());
    }
    let list = s
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<_>, _>>()?;
    if list.is_empty() {
        return Err("empty bound selection".into());
    }
    Ok(list)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundOptions {
    /// Largest subset size tried by the expansion bounds.
    pub t_max: usize,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions { t_max: 2 }
    }
}

fn settle(name: &'static str, result: Result<BoundReport, Error>) -> BoundReport {
    match result {
        Ok(mut r) => {
            r.name = name;
            r
        }
        Err(Error::NotApplicable(reason)) => BoundReport::inapplicable(name, reason),
        Err(e @ (Error::Budget { .. } | Error::VertexCount { .. } | Error::NoConvergence(_))) => {
            BoundReport::over_budget(name, e.to_string())
        }
        Err(_) => BoundReport::inapplicable(name, Reason::InvalidParameters),
    }
}

fn split_bipartite(g: &Graph) -> Result<(BipartiteGraph, BipartiteGraph), Error> {
    let sides = g.bipartition().ok_or(Reason::NotBipartite)?;
    let flipped: Vec<bool> = sides.iter().map(|s| !s).collect();
    Ok((
        BipartiteGraph::from_graph(g, &sides)?,
        BipartiteGraph::from_graph(g, &flipped)?,
    ))
}

fn larger(
    a: Result<BoundReport, Error>,
    b: Result<BoundReport, Error>,
) -> Result<BoundReport, Error> {
    match (a, b) {
        (Ok(x), Ok(y)) => Ok(
            if y.value.map(|v| v.to_f64()) > x.value.map(|v| v.to_f64()) {
                y
            } else {
                x
            },
        ),
        (Ok(x), Err(_)) | (Err(_), Ok(x)) => Ok(x),
        (Err(e), Err(_)) => Err(e),
    }
}

fn family(g: &Graph, f: Family) -> Result<BoundReport, Error> {
    if g.is_complete() {
        return Err(Reason::CompleteGraph.into());
    }
    let k = match f {
        Family::ComplementCycle => 2,
        _ => g
            .complement()
            .regular_degree()
            .ok_or(Reason::FamilyRefuted)?,
    };
    method1::bound_family(g.order(), k, f, Some(g))
}

fn t_expander(g: &Graph, t_max: usize) -> Result<BoundReport, Error> {
    if t_max < 2 {
        return Err(Reason::TrivialExpansion.into());
    }
    let mut last = Error::NotApplicable(Reason::NotExpander);
    for t in 2..=t_max.min(g.order()) {
        match method2::bound_t_expander(g, t) {
            Ok(r) => return Ok(r),
            Err(Error::NotApplicable(Reason::NotExpander)) => {}
            Err(e) => {
                last = e;
                break;
            }
        }
    }
    Err(last)
}

pub fn evaluate(g: &Graph, kind: BoundKind, opts: &BoundOptions) -> BoundReport {
    let result = match kind {
        BoundKind::Imin => method1::bound_imin(g),
        BoundKind::Cv => method1::bound_cv(g),
        BoundKind::RegularComplement => method1::bound_regular_complement_of(g),
        BoundKind::DegreeRatio => method1::bound_degree_ratio(g),
        BoundKind::Family(f) => family(g, f),
        BoundKind::Spectral => spectral::bound_spectral(g),
        BoundKind::Method2 => method2::best_method2(g, opts.t_max.max(1)),
        BoundKind::Universal => method2::bound_universal(g),
        BoundKind::TExpander => t_expander(g, opts.t_max),
        BoundKind::BipartiteUniversal => split_bipartite(g).and_then(|(ab, ba)| {
            larger(
                method2::bound_bipartite_universal(&ab),
                method2::bound_bipartite_universal(&ba),
            )
        }),
        BoundKind::BipartiteSpectral => {
            split_bipartite(g).and_then(|(ab, _)| spectral::bound_bipartite_spectral(&ab))
        }
    };
    settle(kind.name(), result)
}

/// One report per selected bound, in selection order.
pub fn run_bounds(g: &Graph, selection: &[BoundKind], opts: &BoundOptions) -> Vec<BoundReport> {
    selection.iter().map(|&k| evaluate(g, k, opts)).collect()
}
