//! Acceptance suite. Each test pins one release criterion at its stated
//! tolerance and prints a single PASS line (visible with --nocapture).

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use equilines::campaign;
use equilines::cert::StatementId;
use equilines::code::{self, BoundRegime};
use equilines::enumerate;
use equilines::exact::{self, rat, rat_to_f64, Rat, RationalMatrix};
use equilines::graph::Graph;
use equilines::search::{self, SearchTask};
use equilines::spectrum;

fn construction_size(k: usize, r: usize) -> usize {
    r - 1 + (r - 1) / (k - 1)
}

/// Criterion 1: the construction grid 2 <= k <= 4, k <= r <= 12 produces
/// exactly r-1+floor((r-1)/(k-1)) unit vectors with pairwise inner
/// products +-1/(2k-1) within 1e-8, and the exact Gram is PSD with
/// rank <= r. Total runtime under 10 seconds.
#[test]
fn criterion_1_tight_construction_grid() {
    let start = Instant::now();
    for k in 2usize..=4 {
        for r in k..=12 {
            let c = code::tight_construction(k, r).unwrap();
            assert_eq!(c.n(), construction_size(k, r), "k={k} r={r}");
            assert_eq!(c.dim, r);
            c.validate().unwrap_or_else(|e| panic!("k={k} r={r}: {e}"));
            let a = rat_to_f64(&c.alpha);
            for i in 0..c.n() {
                for j in i + 1..c.n() {
                    assert!((c.inner(i, j).abs() - a).abs() <= 1e-8, "k={k} r={r} pair ({i},{j})");
                }
            }
            let (g, _) = code::tight_graph(k, r).unwrap();
            let gram = code::gram_from_graph(&g, &c.alpha).unwrap();
            assert!(exact::psd_certificate(&gram.m).unwrap().is_psd, "k={k} r={r}");
            assert!(exact::rank(&gram.m) <= r, "k={k} r={r}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "grid took {elapsed:?}");
    println!("criterion 1 (tight construction grid, k=2..4, r<=12): PASS in {elapsed:?}");
}

/// Criterion 2: the Gram/adjacency identity holds with an exactly zero
/// residual for 500 random (graph, alpha) pairs with n <= 12.
#[test]
fn criterion_2_gram_identity_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for trial in 0..500 {
        let n = rng.gen_range(1..=12usize);
        let slots = enumerate::edge_slots(n);
        let mut mask = 0u128;
        for i in 0..slots.len() {
            if rng.gen_bool(0.5) {
                mask |= 1 << i;
            }
        }
        let g = enumerate::graph_from_edge_mask(n, &slots, mask);
        let q = rng.gen_range(2..=9i64);
        let p = rng.gen_range(1..q);
        let alpha = rat(p, q);

        let gram = code::gram_from_graph(&g, &alpha).unwrap();
        // independent recombination of the identity
        let rebuilt = RationalMatrix::identity(n)
            .scale(&(Rat::one() - &alpha))
            .add(&RationalMatrix::ones(n).scale(&alpha))
            .sub(&RationalMatrix::adjacency(&g).scale(&(&alpha + &alpha)));
        assert!(gram.m.sub(&rebuilt).is_zero(), "trial {trial}: nonzero residual");
    }
    println!("criterion 2 (exact Gram identity, 500 random pairs): PASS");
}

/// Criterion 3: exhaustive sweep over all labeled connected graphs with
/// n <= 6 for the unconditional checkers, plus 1000 seeded random
/// instances each for the procedure checkers. Zero violations, under
/// five minutes.
#[test]
fn criterion_3_exhaustive_lemma_suite() {
    let start = Instant::now();
    let summaries = campaign::exhaustive_connected_campaign(
        6,
        &[
            StatementId::DisjointSupports,
            StatementId::SmallEval,
            StatementId::Interlacing,
            StatementId::WalkCount,
        ],
    )
    .unwrap();
    for s in &summaries {
        assert_eq!(
            s.violated, 0,
            "violated {} certificates: {:?}",
            s.statement.as_str(),
            s.first_violation
        );
        assert!(s.total > 0);
    }

    for (i, statement) in [
        StatementId::PartialNet,
        StatementId::BallCover,
        StatementId::RandomDeletion,
    ]
    .into_iter()
    .enumerate()
    {
        let s = campaign::random_campaign(statement, 1000, 1000 + i as u64).unwrap();
        assert_eq!(s.total, 1000);
        assert_eq!(
            s.violated, 0,
            "violated {} certificates: {:?}",
            s.statement.as_str(),
            s.first_violation
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 300.0, "suite took {elapsed:?}");
    println!("criterion 3 (exhaustive lemma suite n<=6 + 3x1000 random): PASS in {elapsed:?}");
}

/// Criterion 4: beta >= lambda2 on every graph with n <= 7 (exhaustive),
/// beta = lambda2 within 1e-9 on every regular graph in that range, and
/// on 20 feasible codes with n >= r+2 beta equals (1-alpha)/(2 alpha)
/// within 1e-6 with the exact eigenvalue check passing.
#[test]
fn criterion_4_beta_properties() {
    let start = Instant::now();
    for n in 2..=7usize {
        let slots = enumerate::edge_slots(n);
        let count = 1u128 << slots.len();
        (0..count).into_par_iter().for_each(|mask| {
            let g = enumerate::graph_from_edge_mask(n, &slots, mask);
            let b = code::beta(&g, 1e-9).unwrap().value;
            let spec = spectrum::spectrum_numeric(&g, None).unwrap();
            let l2 = spec.values[1];
            assert!(b >= l2 - 1e-9, "beta {b} < lambda2 {l2} on {g:?}");
            if g.is_regular() {
                assert!((b - l2).abs() <= 1e-9, "regular graph mismatch on {g:?}");
            }
        });
    }

    // 18 tight constructions with n >= r + 2 plus 2 switched variants
    let mut cases: Vec<(code::SphericalCode, &str)> = Vec::new();
    for r in 4..=12usize {
        cases.push((code::tight_construction(2, r).unwrap(), "k=2"));
    }
    for r in 7..=12usize {
        cases.push((code::tight_construction(3, r).unwrap(), "k=3"));
    }
    for r in [10usize, 11, 12] {
        cases.push((code::tight_construction(4, r).unwrap(), "k=4"));
    }
    let base_a = code::tight_construction(2, 7).unwrap();
    cases.push((code::switch(&base_a, &[0, 3, 4, 9]), "switched k=2 r=7"));
    let base_b = code::tight_construction(3, 10).unwrap();
    cases.push((code::switch(&base_b, &[1, 2, 8]), "switched k=3 r=10"));
    assert_eq!(cases.len(), 20);

    for (c, label) in &cases {
        assert!(c.n() >= c.dim + 2, "{label}: equality case requires n >= r+2");
        let g = code::graph_from_code(c).unwrap();
        let target: Rat = (Rat::one() - &c.alpha) / (&c.alpha + &c.alpha);
        let report = code::beta_with_candidate(&g, 1e-9, &target).unwrap();
        assert!(
            (report.value - rat_to_f64(&target)).abs() <= 1e-6,
            "{label}: beta {} misses target",
            report.value
        );
        assert_eq!(report.is_eigenvalue_exact, Some(true), "{label}");
    }
    let elapsed = start.elapsed();
    println!("criterion 4 (beta properties, exhaustive n<=7 + 20 codes): PASS in {elapsed:?}");
}

/// Criterion 5: switching is an exact involution preserving the line
/// family on 100 random codes, and the degree normalization achieves
/// max degree <= 6/alpha^4 on every tested code, including
/// adversarially pre-switched constructions.
#[test]
fn criterion_5_switching_and_normalization() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for trial in 0..100 {
        let k = rng.gen_range(2..=4usize);
        let r = rng.gen_range(k.max(4)..=12usize);
        let c = code::tight_construction(k, r).unwrap();
        let s: Vec<usize> = (0..c.n()).filter(|_| rng.gen_bool(0.5)).collect();

        let switched = code::switch(&c, &s);
        for i in 0..c.n() {
            for j in i + 1..c.n() {
                assert_eq!(
                    switched.inner(i, j).abs(),
                    c.inner(i, j).abs(),
                    "trial {trial}: lines not preserved"
                );
            }
        }
        let back = code::switch(&switched, &s);
        for i in 0..c.n() {
            assert_eq!(back.vectors[i], c.vectors[i], "trial {trial}: not involutive");
        }

        let out = code::normalize_max_degree(&switched).unwrap();
        let cap = rat_to_f64(&out.degree_cap);
        assert!(
            (out.graph.max_degree() as f64) <= cap,
            "trial {trial}: degree {} beyond cap {cap}",
            out.graph.max_degree()
        );
        out.code.validate().unwrap();
    }
    println!("criterion 5 (switching involution + degree normalization, 100 codes): PASS");
}

/// Criterion 6: for 2 <= k <= 6 and m = 2..5 components, the disjoint
/// clique union m*K_k has second-eigenvalue multiplicity exactly m at
/// k-1 in exact mode, and exact and numeric agree.
#[test]
fn criterion_6_clique_union_tightness() {
    for k in 2usize..=6 {
        for m in 2usize..=5 {
            let g = Graph::disjoint_cliques(m, k).unwrap();
            let lam = exact::rat_int(k as i64 - 1);
            let exact_m = spectrum::multiplicity_exact(&g, &lam);
            assert_eq!(exact_m, m, "m*K_k multiplicity at k-1");
            let numeric_m =
                spectrum::multiplicity_numeric(&g, (k - 1) as f64, 1e-8).unwrap();
            assert_eq!(numeric_m, m, "numeric disagrees with exact");
        }
    }
    println!("criterion 6 (clique-union multiplicity tightness): PASS");
}

/// Criterion 7: the oracle returns best_n >= min(n_max, 2r-2) at
/// alpha = 1/3 for r in 5..7 with verified witnesses, never exceeds the
/// absolute bound C(r+1, 2), and exact feasibility is switching
/// invariant on the exhaustive n <= 5 sweep. Under ten minutes.
#[test]
fn criterion_7_oracle_consistency() {
    let start = Instant::now();
    for r in 5usize..=7 {
        let task = SearchTask {
            r,
            alpha: rat(1, 3),
            n_max: 8,
            canonicalize: false,
        };
        let res = search::max_lines(&task).unwrap();
        let want = 8.min(2 * r - 2);
        assert!(res.best_n >= want, "r={r}: best {} < {want}", res.best_n);
        let absolute = (r + 1) * r / 2;
        assert!(res.best_n <= absolute, "r={r}: above the absolute bound");

        let witness = res.witness_graph.unwrap();
        let f = search::feasible(&witness, &rat(1, 3), r).unwrap();
        assert!(f.feasible, "r={r}: witness fails exact feasibility");
        let wc = res.witness_code.unwrap();
        wc.validate().unwrap();
        assert_eq!(wc.n(), res.best_n);

        // witnesses in the equality regime must pin beta exactly
        if wc.n() >= r + 2 {
            let g = code::graph_from_code(&wc).unwrap();
            let target: Rat = (Rat::one() - &wc.alpha) / (&wc.alpha + &wc.alpha);
            let b = code::beta_with_candidate(&g, 1e-9, &target).unwrap();
            assert!((b.value - rat_to_f64(&target)).abs() <= 1e-6, "r={r}");
            assert_eq!(b.is_eigenvalue_exact, Some(true), "r={r}");
        }
    }

    // switching invariance of exact feasibility, exhaustive n <= 5
    for n in 1..=5usize {
        let slots = enumerate::edge_slots(n);
        let masks: Vec<u128> = (0..(1u128 << slots.len())).collect();
        masks.par_iter().for_each(|&mask| {
            let g = enumerate::graph_from_edge_mask(n, &slots, mask);
            for alpha in [rat(1, 3), rat(1, 5)] {
                for r in 2..=6usize {
                    let base = search::feasible(&g, &alpha, r).unwrap().feasible;
                    let reps = if n >= 2 { 1u64 << (n - 1) } else { 1 };
                    for s in 0..reps {
                        let switched = g.switch_cut(s << 1);
                        assert_eq!(
                            search::feasible(&switched, &alpha, r).unwrap().feasible,
                            base,
                            "switching changed feasibility on {g:?}, s={s}"
                        );
                    }
                }
            }
        });
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 600.0, "oracle suite took {elapsed:?}");
    println!("criterion 7 (oracle consistency + switching invariance): PASS in {elapsed:?}");
}

/// Criterion 8: the formula evaluator reproduces 2r-2 at alpha = 1/3 for
/// r in 10, 100, 1000, and r-1+floor((r-1)/(k-1)) across the
/// construction grid, as exact integers.
#[test]
fn criterion_8_formula_evaluators() {
    for r in [10u64, 100, 1000] {
        let rep = code::max_lines_bound(r, &rat(1, 3), BoundRegime::Main).unwrap();
        assert_eq!(rep.bound, (2 * r - 2).to_string(), "r={r}");
    }
    for k in 2u64..=4 {
        let alpha = Rat::new(BigInt::one(), BigInt::from(2 * k - 1));
        for r in k.max(2)..=12 {
            let rep = code::max_lines_bound(r, &alpha, BoundRegime::Main).unwrap();
            let want = (r - 1) + (r - 1) / (k - 1);
            assert_eq!(rep.bound, want.to_string(), "k={k} r={r}");
            assert_eq!(rep.term_construction, want.to_string(), "k={k} r={r}");
            assert_eq!(rep.k, Some(k), "k detection at alpha=1/(2k-1)");
        }
    }
    println!("criterion 8 (closed-form evaluators, exact integers): PASS");
}
