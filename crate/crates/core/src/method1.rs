//! Lower bounds from minimum interval supergraphs.
//!
//! Each interval graph in a box representation of `G` misses at most
//! `‖complement(I_min)‖` pairs, and every non-edge of `G` has to be missed
//! by one of them. `‖complement(I_min)‖` is in turn at most
//! `Σ_i c_v(i, complement(G))`.

use alloc::vec;

use crate::error::{Error, Reason, Result};
use crate::graph::Graph;
use crate::interval::min_interval_supergraph;
use crate::iso::{c_v, iso_profile};
use crate::report::{ratio, BoundReport, Certificate};

fn require_non_complete(g: &Graph) -> Result<()> {
    if g.is_complete() {
        Err(Reason::CompleteGraph.into())
    } else {
        Ok(())
    }
}

/// `‖complement(G)‖ / ‖complement(I_min)‖`.
pub fn bound_imin(g: &Graph) -> Result<BoundReport> {
    require_non_complete(g)?;
    let (edges, order) = min_interval_supergraph(g)?;
    let missing = g.pair_count() - edges;
    let non_edges = g.pair_count() - g.edge_count();
    Ok(BoundReport::exact(
        "imin",
        ratio(non_edges as i64, missing as i64),
        Certificate::Ordering(order),
    ))
}

/// `‖complement(G)‖ / Σ_{i=1}^{n-1} c_v(i, complement(G))`.
pub fn bound_cv(g: &Graph) -> Result<BoundReport> {
    require_non_complete(g)?;
    let co = g.complement();
    let profile = iso_profile(&co)?;
    Ok(BoundReport::exact(
        "cv",
        ratio(co.edge_count() as i64, profile.cv_sum() as i64),
        Certificate::CvProfile(profile.cv_values()),
    ))
}

/// `n / 2k` for an `(n-k-1)`-regular graph.
pub fn bound_regular_complement(n: usize, k: usize) -> Result<BoundReport> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
        });
    }
    Ok(BoundReport::exact(
        "regular_complement",
        ratio(n as i64, 2 * k as i64),
        Certificate::Params(vec![("n", n as i64), ("k", k as i64)]),
    ))
}

/// [`bound_regular_complement`] with `k` read off a graph whose complement
/// must be `k`-regular for some `k >= 1`.
pub fn bound_regular_complement_of(g: &Graph) -> Result<BoundReport> {
    require_non_complete(g)?;
    let d = g.regular_degree().ok_or(Reason::NotRegular)?;
    bound_regular_complement(g.order(), g.order() - 1 - d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(n-k-1)`-regular with planar complement: `n/8`.
    Coplanar,
    /// Complement of a `k`-regular `C4`-free graph: `n/4`.
    C4Free,
    /// Complement of the cycle `C_n`: `n/3`.
    ComplementCycle,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Coplanar, Family::C4Free, Family::ComplementCycle];

    pub fn name(self) -> &'static str {
        match self {
            Family::Coplanar => "coplanar",
            Family::C4Free => "c4free",
            Family::ComplementCycle => "complement_cycle",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    fn divisor(self) -> i64 {
        match self {
            Family::Coplanar => 8,
            Family::C4Free => 4,
            Family::ComplementCycle => 3,
        }
    }

    fn report_name(self) -> &'static str {
        match self {
            Family::Coplanar => "family_coplanar",
            Family::C4Free => "family_c4free",
            Family::ComplementCycle => "family_complement_cycle",
        }
    }
}

/// Checks what each family's bound actually relies on. For co-planar graphs
/// that is a regular complement without `K_{3,3}` (`c_v(3) <= 2`); planarity
/// itself is not tested.
fn verify_family(g: &Graph, k: usize, family: Family) -> Result<()> {
    let co = g.complement();
    let refuted = Error::NotApplicable(Reason::FamilyRefuted);
    match family {
        Family::ComplementCycle => {
            if co.regular_degree() != Some(2) || !co.is_connected() {
                return Err(refuted);
            }
        }
        Family::C4Free | Family::Coplanar => {
            if co.regular_degree() != Some(k) {
                return Err(refuted);
            }
            let (size, cap) = if family == Family::C4Free {
                (2, 1)
            } else {
                (3, 2)
            };
            if size <= co.order() && c_v(&co, size)?.value > cap {
                return Err(refuted);
            }
        }
    }
    Ok(())
}

/// Closed-form family bounds; `graph`, when supplied, is checked against the
/// asserted family first.
pub fn bound_family(
    n: usize,
    k: usize,
    family: Family,
    graph: Option<&Graph>,
) -> Result<BoundReport> {
    // C4 has two vertices with two common neighbours, so the estimate fails for 2K2
    if family == Family::ComplementCycle && (n < 3 || n == 4) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
        });
    }
    if family != Family::ComplementCycle && (k == 0 || k >= n) {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
        });
    }
    if let Some(g) = graph {
        if g.order() != n {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
            });
        }
        require_non_complete(g)?;
        verify_family(g, k, family)?;
    }
    let report = BoundReport::exact(
        family.report_name(),
        ratio(n as i64, family.divisor()),
        Certificate::Params(vec![("n", n as i64), ("k", k as i64)]),
    );
    Ok(if family == Family::Coplanar {
        report.with_note("planarity of the complement is trusted, not verified")
    } else {
        report
    })
}

/// `n δ(Ḡ) / (2 Δ(Ḡ)²)`.
pub fn bound_degree_ratio(g: &Graph) -> Result<BoundReport> {
    require_non_complete(g)?;
    let s = g.complement().degree_summary();
    let n = g.order() as i64;
    Ok(BoundReport::exact(
        "degree_ratio",
        ratio(
            n * s.min_degree as i64,
            2 * (s.max_degree * s.max_degree) as i64,
        ),
        Certificate::Params(vec![
            ("min_degree_complement", s.min_degree as i64),
            ("max_degree_complement", s.max_degree as i64),
        ]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complement_cycle, construct_cobipartite_tight, cycle, path, star};
    use crate::Rational;

    fn value(r: Result<BoundReport>) -> Rational {
        r.unwrap().exact_value().unwrap()
    }

    #[test]
    fn imin_examples() {
        assert_eq!(
            value(bound_imin(&cycle(4).unwrap())),
            Rational::from_integer(2)
        );
        let c5 = bound_imin(&cycle(5).unwrap()).unwrap();
        assert_eq!(c5.exact_value(), Some(Rational::new(5, 3)));
        assert_eq!(c5.ceiling(), Some(2));
        assert_eq!(
            value(bound_imin(&path(6).unwrap())),
            Rational::from_integer(1)
        );
        assert_eq!(
            bound_imin(&Graph::complete(4).unwrap()),
            Err(Error::NotApplicable(Reason::CompleteGraph))
        );
    }

    #[test]
    fn cv_examples() {
        assert_eq!(
            value(bound_cv(&complement_cycle(6).unwrap())),
            Rational::from_integer(2)
        );
        assert_eq!(
            value(bound_cv(&complement_cycle(9).unwrap())),
            Rational::from_integer(3)
        );
        // complement(C4) = 2K2 has c_v = (1, 0, 0).
        let r = bound_cv(&cycle(4).unwrap()).unwrap();
        assert_eq!(r.certificate, Certificate::CvProfile(vec![1, 0, 0]));
        assert_eq!(r.exact_value(), Some(Rational::from_integer(2)));
    }

    #[test]
    fn regular_complement_examples() {
        assert_eq!(
            value(bound_regular_complement(4, 1)),
            Rational::from_integer(2)
        );
        assert_eq!(
            value(bound_regular_complement(12, 2)),
            Rational::from_integer(3)
        );
        // K_n minus a perfect matching: k = 1 in the n - k - 1 form.
        assert_eq!(
            value(bound_regular_complement(10, 1)),
            Rational::from_integer(5)
        );
        let tight = construct_cobipartite_tight(2, 3).unwrap().graph;
        assert_eq!(
            value(bound_regular_complement_of(&tight)),
            Rational::from_integer(3)
        );
        assert_eq!(
            bound_regular_complement_of(&star(3).unwrap()),
            Err(Error::NotApplicable(Reason::NotRegular))
        );
    }

    #[test]
    fn family_examples() {
        let cc9 = complement_cycle(9).unwrap();
        assert_eq!(
            value(bound_family(9, 2, Family::ComplementCycle, Some(&cc9))),
            Rational::from_integer(3)
        );
        assert_eq!(
            value(bound_family(12, 3, Family::C4Free, None)),
            Rational::from_integer(3)
        );
        let r = bound_family(16, 3, Family::Coplanar, None).unwrap();
        assert_eq!(r.exact_value(), Some(Rational::from_integer(2)));
        assert_eq!(r.notes.len(), 1);
        // C4 is the complement of the C4-free 2K2; C6 is the complement of the prism, which has a C4.
        assert!(bound_family(4, 1, Family::C4Free, Some(&cycle(4).unwrap())).is_ok());
        let k33c = crate::families::complete_multipartite(3, 2)
            .unwrap()
            .complement();
        assert_eq!(
            bound_family(6, 2, Family::C4Free, Some(&cycle(6).unwrap())).err(),
            Some(Error::NotApplicable(Reason::FamilyRefuted))
        );
        assert!(bound_family(6, 2, Family::ComplementCycle, Some(&k33c)).is_err());
        // box(2K2) = 1 < 4/3
        assert!(bound_family(
            4,
            2,
            Family::ComplementCycle,
            Some(&complement_cycle(4).unwrap())
        )
        .is_err());
        assert!(bound_family(3, 2, Family::ComplementCycle, None).is_ok());
    }

    #[test]
    fn degree_ratio_examples() {
        assert_eq!(
            value(bound_degree_ratio(&cycle(4).unwrap())),
            Rational::from_integer(2)
        );
        assert_eq!(
            value(bound_degree_ratio(&star(3).unwrap())),
            Rational::from_integer(0)
        );
        // k-regular complement reduces to n/2k.
        let g = construct_cobipartite_tight(2, 2).unwrap().graph;
        assert_eq!(value(bound_degree_ratio(&g)), Rational::from_integer(2));
    }
}
