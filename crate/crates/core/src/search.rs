//! Brute-force oracle: the maximum number of lines at a given angle and
//! dimension, decided by exhaustive enumeration of candidate graphs with
//! fully exact feasibility tests. No floating-point decision exists in
//! this module; rank and positive semidefiniteness are rational.

use num_traits::{One, Zero};

use crate::code::{self, SphericalCode};
use crate::error::{Error, Result};
use crate::exact::{self, PsdCertificate, Rat};
use crate::graph::Graph;

/// Enumeration budget: a full labeled sweep at 10 vertices (2^45 graphs)
/// is beyond any desk budget, so tasks cap at 9.
pub const N_MAX_BUDGET: usize = 9;

#[derive(Clone, Debug)]
pub struct SearchTask {
    pub r: usize,
    pub alpha: Rat,
    pub n_max: usize,
    pub canonicalize: bool,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub best_n: usize,
    pub exhausted: bool,
    pub checked: u64,
    pub witness_graph: Option<Graph>,
    pub witness_code: Option<SphericalCode>,
}

/// Exact feasibility evidence: the rank of the Gram matrix, and its PSD
/// certificate when the rank test passed (rank alone refutes otherwise).
#[derive(Clone, Debug)]
pub struct Feasibility {
    pub feasible: bool,
    pub rank: usize,
    pub psd: Option<PsdCertificate>,
}

/// n lines exist in R^r with corresponding graph g iff the Gram matrix
/// (1-alpha) I + alpha J - 2 alpha A is PSD with rank at most r. Both
/// checks are exact; rank runs first because it is cheaper.
pub fn feasible(g: &Graph, alpha: &Rat, r: usize) -> Result<Feasibility> {
    let gram = code::gram_from_graph(g, alpha)?;
    let rank = exact::rank(&gram.m);
    if rank > r {
        return Ok(Feasibility {
            feasible: false,
            rank,
            psd: None,
        });
    }
    let psd = exact::psd_certificate(&gram.m)?;
    Ok(Feasibility {
        feasible: psd.is_psd,
        rank,
        psd: Some(psd),
    })
}

/// True when no switching of g has a lexicographically smaller
/// upper-triangle encoding; switch sets range over subsets avoiding
/// vertex 0 (a set and its complement switch identically).
fn is_switching_canonical(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 {
        return true;
    }
    let own = g.triangle_code();
    for s in 1u64..(1 << (n - 1)) {
        if g.switch_cut(s << 1).triangle_code() < own {
            return false;
        }
    }
    true
}

/// Exhaustively determines the maximum feasible number of lines:
/// enumerates n from n_max downward, graphs within each n by ascending
/// edge count then ascending mask, and stops at the first feasible graph
/// (levels above the answer are fully exhausted). Deterministic given
/// the task.
pub fn max_lines(task: &SearchTask) -> Result<SearchResult> {
    if task.n_max > N_MAX_BUDGET {
        return Err(Error::Budget(format!(
            "n_max = {} exceeds the enumeration budget {N_MAX_BUDGET}",
            task.n_max
        )));
    }
    if task.n_max == 0 {
        return Err(Error::Parameter("n_max must be positive".into()));
    }
    if task.r == 0 {
        return Err(Error::Parameter("dimension r must be positive".into()));
    }
    if !(task.alpha > Rat::zero() && task.alpha < Rat::one()) {
        return Err(Error::Parameter("alpha must lie strictly between 0 and 1".into()));
    }

    let mut checked = 0u64;
    for n in (1..=task.n_max).rev() {
        let slots = crate::enumerate::edge_slots(n);
        for mask in crate::enumerate::edge_masks_by_count(slots.len()) {
            let g = crate::enumerate::graph_from_edge_mask(n, &slots, mask);
            if task.canonicalize && !is_switching_canonical(&g) {
                continue;
            }
            checked += 1;
            let f = feasible(&g, &task.alpha, task.r)?;
            if f.feasible {
                let gram = code::gram_from_graph(&g, &task.alpha)?;
                let witness_code = code::realize_code(&gram, task.r)?;
                return Ok(SearchResult {
                    best_n: n,
                    exhausted: true,
                    checked,
                    witness_graph: Some(g),
                    witness_code: Some(witness_code),
                });
            }
        }
    }
    Ok(SearchResult {
        best_n: 0,
        exhausted: true,
        checked,
        witness_graph: None,
        witness_code: None,
    })
}

/// One representative per switching class of labeled graphs on n
/// vertices: the lexicographically least member, which is exactly the
/// unique member in which vertex 0 is isolated. The class count is
/// 2^C(n-1,2), so this is practical for n <= 7.
pub fn switching_class_reps(n: usize) -> Result<Vec<Graph>> {
    if n > 10 {
        return Err(Error::Budget(format!(
            "switching class enumeration capped at 10 vertices, requested {n}"
        )));
    }
    if n == 0 {
        return Err(Error::Parameter("n must be positive".into()));
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1)?]);
    }
    let inner_slots = crate::enumerate::edge_slots(n - 1);
    let mut reps = Vec::with_capacity(1 << inner_slots.len());
    for mask in 0u64..(1 << inner_slots.len()) {
        let edges: Vec<(usize, usize)> = inner_slots
            .iter()
            .enumerate()
            .filter(|(i, _)| (mask >> i) & 1 == 1)
            .map(|(_, &(u, v))| (u + 1, v + 1))
            .collect();
        reps.push(Graph::new(n, &edges)?);
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use std::collections::BTreeSet;

    #[test]
    fn empty_graph_feasibility_boundary() {
        // rank of (1-a) I + a J on n vertices is n: feasible iff n <= r
        let r = 4;
        let at = |n: usize| feasible(&Graph::empty(n).unwrap(), &rat(1, 3), r).unwrap();
        assert!(at(4).feasible);
        assert!(!at(5).feasible);
        assert_eq!(at(5).rank, 5);
    }

    #[test]
    fn twelve_line_graph_feasibility() {
        let g = Graph::disjoint_cliques(6, 2).unwrap();
        assert!(feasible(&g, &rat(1, 3), 7).unwrap().feasible);
        let f = feasible(&g, &rat(1, 3), 6).unwrap();
        assert!(!f.feasible);
        assert_eq!(f.rank, 7);
    }

    #[test]
    fn max_lines_tiny_dimension() {
        // r = 2: the oracle must agree with direct enumeration of the 8
        // labeled 3-vertex graphs
        let task = SearchTask {
            r: 2,
            alpha: rat(1, 3),
            n_max: 4,
            canonicalize: false,
        };
        let res = max_lines(&task).unwrap();
        let any_three_feasible = crate::enumerate::all_graphs(3)
            .any(|g| feasible(&g, &rat(1, 3), 2).unwrap().feasible);
        assert!(!any_three_feasible);
        assert_eq!(res.best_n, 2);
        assert!(res.witness_code.is_some());
    }

    #[test]
    fn max_lines_finds_construction_size() {
        // r = 5, alpha = 1/3: 3 disjoint edges on 6 vertices are feasible
        let task = SearchTask {
            r: 5,
            alpha: rat(1, 3),
            n_max: 6,
            canonicalize: false,
        };
        let res = max_lines(&task).unwrap();
        assert_eq!(res.best_n, 6);
        let witness = res.witness_graph.unwrap();
        assert!(feasible(&witness, &rat(1, 3), 5).unwrap().feasible);
        res.witness_code.unwrap().validate().unwrap();
    }

    #[test]
    fn max_lines_respects_canonicalization() {
        let base = SearchTask {
            r: 5,
            alpha: rat(1, 3),
            n_max: 6,
            canonicalize: false,
        };
        let canon = SearchTask {
            canonicalize: true,
            ..base.clone()
        };
        let a = max_lines(&base).unwrap();
        let b = max_lines(&canon).unwrap();
        assert_eq!(a.best_n, b.best_n);
        assert!(b.checked <= a.checked);
    }

    #[test]
    fn budget_rejection() {
        let task = SearchTask {
            r: 3,
            alpha: rat(1, 2),
            n_max: 10,
            canonicalize: false,
        };
        assert!(matches!(max_lines(&task), Err(Error::Budget(_))));
    }

    #[test]
    fn switching_reps_counts() {
        assert_eq!(switching_class_reps(1).unwrap().len(), 1);
        assert_eq!(switching_class_reps(2).unwrap().len(), 1);
        assert_eq!(switching_class_reps(3).unwrap().len(), 2);
        assert_eq!(switching_class_reps(4).unwrap().len(), 8);
        assert_eq!(switching_class_reps(5).unwrap().len(), 64);
    }

    #[test]
    fn switching_reps_match_orbit_computation() {
        // oracle: canonical form of each graph = minimum triangle code
        // over its full switching orbit
        for n in 2..=5usize {
            let mut canonical_codes = BTreeSet::new();
            for g in crate::enumerate::all_graphs(n) {
                let mut best = g.triangle_code();
                for s in 0u64..(1 << (n - 1)) {
                    best = best.min(g.switch_cut(s << 1).triangle_code());
                }
                canonical_codes.insert(best);
            }
            let reps = switching_class_reps(n).unwrap();
            let rep_codes: BTreeSet<u64> = reps.iter().map(|g| g.triangle_code()).collect();
            assert_eq!(rep_codes.len(), reps.len(), "reps must be distinct");
            assert_eq!(rep_codes, canonical_codes, "n = {n}");
        }
    }

    #[test]
    fn feasibility_is_switching_invariant_small() {
        for n in 1..=4usize {
            for g in crate::enumerate::all_graphs(n) {
                let base = feasible(&g, &rat(1, 3), 3).unwrap().feasible;
                for s in 0u64..(1u64 << n) {
                    let switched = g.switch_cut(s);
                    assert_eq!(
                        feasible(&switched, &rat(1, 3), 3).unwrap().feasible,
                        base
                    );
                }
            }
        }
    }
}
