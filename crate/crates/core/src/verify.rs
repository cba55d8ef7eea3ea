//! Post-hoc verification of a built graph against its predicted edge count
//! and the predicate its construction promises.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::PatternError;
use crate::graph::Graph;
use crate::pattern::PatternGraph;
use crate::singular::find_singular_copy;
use crate::worm::{check_worm, Coloring, WormCheck, WormViolationKind};

/// What a construction promises about its output.
#[derive(Clone, Debug)]
pub enum VerifySpec<'a> {
    SingularFree(&'a PatternGraph),
    CliqueFree(usize),
    Worm(&'a PatternGraph, &'a Coloring),
    RegularWithOddGirthAbove(usize),
    DistinctDegrees,
    /// Only the edge count is promised.
    EdgesOnly,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub predicted_edges: usize,
    pub actual_edges: usize,
    pub edges_match: bool,
    pub predicate: String,
    pub predicate_holds: bool,
    pub failure: Option<String>,
    /// (degree value, multiplicity), ascending by degree.
    pub degree_counts: Vec<(usize, usize)>,
    pub pass: bool,
}

pub fn verify_construction(
    g: &Graph,
    spec: VerifySpec<'_>,
    predicted_edges: usize,
) -> Result<VerificationReport, PatternError> {
    let actual = g.edge_count();
    let (predicate, holds, failure) = match spec {
        VerifySpec::SingularFree(pat) => {
            let label = format!("no singular copy of {}", pat.display_name());
            match find_singular_copy(g, pat)? {
                None => (label, true, None),
                Some(w) => (
                    label,
                    false,
                    Some(format!(
                        "singular witness {:?} with degrees {:?} ({:?})",
                        w.vertices, w.degrees, w.mode
                    )),
                ),
            }
        }
        VerifySpec::CliqueFree(k) => {
            let label = format!("no clique on {k} vertices");
            if g.has_clique(k) {
                let witness = g.cliques(k).into_iter().next();
                (label, false, Some(format!("clique found: {:?}", witness)))
            } else {
                (label, true, None)
            }
        }
        VerifySpec::Worm(pat, coloring) => {
            let label = format!("{}-WORM coloring valid", pat.display_name());
            match check_worm(g, pat, coloring)? {
                WormCheck::Valid => (label, true, None),
                WormCheck::Violation(v) => {
                    let kind = match v.kind {
                        WormViolationKind::Monochromatic => "monochromatic",
                        WormViolationKind::Rainbow => "rainbow",
                    };
                    (
                        label,
                        false,
                        Some(format!("{kind} copy on {:?}", v.vertices)),
                    )
                }
            }
        }
        VerifySpec::RegularWithOddGirthAbove(girth) => {
            let label = format!("regular with odd girth above {girth}");
            match g.is_regular() {
                None => (label, false, Some(String::from("graph is not regular"))),
                Some(_) => match g.odd_girth() {
                    None => (label, true, None),
                    Some(og) if og > girth => (label, true, None),
                    Some(og) => (label, false, Some(format!("odd girth is {og}"))),
                },
            }
        }
        VerifySpec::DistinctDegrees => {
            let label = String::from("all degree values pairwise distinct");
            let mut degs = g.degrees();
            degs.sort_unstable();
            let dup = degs.windows(2).any(|w| w[0] == w[1]);
            if dup {
                (label, false, Some(String::from("repeated degree value")))
            } else {
                (label, true, None)
            }
        }
        VerifySpec::EdgesOnly => (String::from("edge count only"), true, None),
    };

    let mut degree_counts: Vec<(usize, usize)> = Vec::new();
    let mut degs = g.degrees();
    degs.sort_unstable();
    for d in degs {
        match degree_counts.last_mut() {
            Some(last) if last.0 == d => last.1 += 1,
            _ => degree_counts.push((d, 1)),
        }
    }

    let edges_match = actual == predicted_edges;
    Ok(VerificationReport {
        predicted_edges,
        actual_edges: actual,
        edges_match,
        predicate,
        predicate_holds: holds,
        failure,
        degree_counts,
        pass: edges_match && holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_fails_singular_free_check() {
        let k3 = PatternGraph::by_name("K3").unwrap();
        let report =
            verify_construction(&Graph::complete(5), VerifySpec::SingularFree(&k3), 10).unwrap();
        assert!(report.edges_match);
        assert!(!report.predicate_holds);
        assert!(!report.pass);
        assert!(report.failure.unwrap().contains("singular witness"));
    }

    #[test]
    fn turan_passes_and_reports_degrees() {
        let k3 = PatternGraph::by_name("K3").unwrap();
        let g = Graph::turan(6, 4).unwrap();
        let report = verify_construction(&g, VerifySpec::SingularFree(&k3), 13).unwrap();
        assert!(report.pass);
        assert_eq!(report.degree_counts, alloc::vec![(4, 4), (5, 2)]);
    }

    #[test]
    fn regular_odd_girth_spec() {
        let c5 = Graph::cycle(5);
        let good = verify_construction(&c5, VerifySpec::RegularWithOddGirthAbove(3), 5).unwrap();
        assert!(good.pass);
        let bad = verify_construction(&c5, VerifySpec::RegularWithOddGirthAbove(5), 5).unwrap();
        assert!(!bad.pass);
    }
}
