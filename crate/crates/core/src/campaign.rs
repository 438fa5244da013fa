//! Certificate campaigns: exhaustive sweeps over small connected graphs
//! and seeded random instance batteries. Campaigns parallelize across
//! instances; summaries reduce deterministically (counts plus the
//! lowest-indexed violation).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, PartialNetInstance};
use crate::cert::{BoundCertificate, StatementId, Verdict};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::graph::Graph;
use crate::spectrum::{self, LambdaTarget};

#[derive(Clone, Debug, Serialize)]
pub struct CampaignSummary {
    pub statement: StatementId,
    pub total: usize,
    pub holds: usize,
    pub vacuous: usize,
    pub violated: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<BoundCertificate>,
}

impl CampaignSummary {
    fn empty(statement: StatementId) -> Self {
        CampaignSummary {
            statement,
            total: 0,
            holds: 0,
            vacuous: 0,
            violated: 0,
            first_violation: None,
        }
    }

    fn record(&mut self, cert: &BoundCertificate) {
        self.total += 1;
        match cert.verdict {
            Verdict::Holds => self.holds += 1,
            Verdict::Vacuous => self.vacuous += 1,
            Verdict::Violated => {
                self.violated += 1;
                if self.first_violation.is_none() {
                    self.first_violation = Some(cert.clone());
                }
            }
        }
    }

    fn merge(mut self, other: CampaignSummary) -> CampaignSummary {
        self.total += other.total;
        self.holds += other.holds;
        self.vacuous += other.vacuous;
        self.violated += other.violated;
        if self.first_violation.is_none() {
            self.first_violation = other.first_violation;
        }
        self
    }
}

/// Rational eigenvalue targets used by the exhaustive interlacing sweep.
fn interlacing_lambdas() -> Vec<Rat> {
    (-2..=2).map(crate::exact::rat_int).collect()
}

/// Every certificate the exhaustive sweep produces for one connected
/// graph under one statement.
fn certs_for_connected_graph(g: &Graph, statement: StatementId) -> Result<Vec<BoundCertificate>> {
    let n = g.n();
    let full = g.full_mask();
    let mut out = Vec::new();
    match statement {
        StatementId::DisjointSupports => {
            for u_mask in enumerate::nonempty_submasks(full) {
                let rest = full & !u_mask;
                for v_mask in enumerate::nonempty_submasks(rest) {
                    if v_mask < u_mask {
                        continue; // unordered pair, count once
                    }
                    let crossing = (0..n)
                        .filter(|&u| (u_mask >> u) & 1 == 1)
                        .any(|u| g.neighbors_mask(u) & v_mask != 0);
                    if crossing {
                        continue;
                    }
                    out.push(bounds::check_disjoint_supports(g, u_mask, v_mask)?);
                }
            }
        }
        StatementId::SmallEval => {
            for h_mask in enumerate::nonempty_submasks(full) {
                out.push(bounds::check_small_eval(g, h_mask)?);
            }
        }
        StatementId::Interlacing => {
            for v in 0..n {
                for lam in interlacing_lambdas() {
                    out.push(spectrum::interlacing_check(
                        g,
                        1 << v,
                        &LambdaTarget::Exact(lam),
                        1e-8,
                    )?);
                }
            }
        }
        StatementId::WalkCount => {
            for big_r in [1usize, 2] {
                out.push(bounds::walk_count_identity(g, big_r)?);
            }
        }
        other => {
            return Err(Error::Parameter(format!(
                "statement {} has no exhaustive sweep; use a random campaign",
                other.as_str()
            )));
        }
    }
    Ok(out)
}

/// Exhaustive campaign: every labeled connected graph on 2..=n_max
/// vertices, every valid instance of each requested statement.
pub fn exhaustive_connected_campaign(
    n_max: usize,
    statements: &[StatementId],
) -> Result<Vec<CampaignSummary>> {
    if n_max > 8 {
        return Err(Error::Budget(format!(
            "exhaustive sweep capped at n <= 8, requested {n_max}"
        )));
    }
    let mut summaries = Vec::new();
    for &statement in statements {
        let mut summary = CampaignSummary::empty(statement);
        for n in 2..=n_max {
            let slots = enumerate::edge_slots(n);
            let masks: Vec<u128> = (0..(1u128 << slots.len()))
                .filter(|&m| enumerate::graph_from_edge_mask(n, &slots, m).is_connected())
                .collect();
            let partial = masks
                .par_iter()
                .map(|&mask| -> Result<CampaignSummary> {
                    let g = enumerate::graph_from_edge_mask(n, &slots, mask);
                    let mut s = CampaignSummary::empty(statement);
                    for cert in certs_for_connected_graph(&g, statement)? {
                        s.record(&cert);
                    }
                    Ok(s)
                })
                .try_reduce(
                    || CampaignSummary::empty(statement),
                    |a, b| Ok(a.merge(b)),
                )?;
            summary = summary.merge(partial);
        }
        summaries.push(summary);
    }
    Ok(summaries)
}

/// One random instance of a statement, drawn from the campaign stream.
fn random_certificate(statement: StatementId, rng: &mut ChaCha8Rng) -> Result<BoundCertificate> {
    match statement {
        StatementId::PartialNet => {
            let inst = bounds::random_partial_net_instance(rng);
            bounds::check_partial_net(&inst)
        }
        StatementId::BallCover => {
            let g = bounds::random_connected_graph(12, rng);
            let r = rng.gen_range(1..=2usize);
            let b = rng.gen_range(2..=5usize) as f64;
            Ok(bounds::ball_cover_reduce(&g, r, b, None)?.certificate)
        }
        StatementId::RandomDeletion => {
            let g = loop {
                let g = bounds::random_connected_graph(12, rng);
                if g.n() >= 4 {
                    break g;
                }
            };
            let ell = rng.gen_range(2..=3usize);
            let s_exp = rng.gen_range(ell..=4usize);
            let seed = rng.gen::<u64>();
            Ok(bounds::random_support_deletion(&g, ell, s_exp, seed, None)?.certificate)
        }
        StatementId::DisjointSupports => loop {
            let g = bounds::random_connected_graph(8, rng);
            let full = g.full_mask();
            let u_mask = rng.gen::<u64>() & full;
            let v_mask = rng.gen::<u64>() & full & !u_mask;
            if u_mask == 0 || v_mask == 0 {
                continue;
            }
            let crossing = (0..g.n())
                .filter(|&u| (u_mask >> u) & 1 == 1)
                .any(|u| g.neighbors_mask(u) & v_mask != 0);
            if crossing {
                continue;
            }
            return bounds::check_disjoint_supports(&g, u_mask, v_mask);
        },
        StatementId::SmallEval => loop {
            let g = bounds::random_connected_graph(8, rng);
            let h_mask = rng.gen::<u64>() & g.full_mask();
            if h_mask == 0 {
                continue;
            }
            return bounds::check_small_eval(&g, h_mask);
        },
        StatementId::Interlacing => {
            let g = bounds::random_connected_graph(10, rng);
            let s_mask = rng.gen::<u64>() & g.full_mask();
            let lam = crate::exact::rat_int(rng.gen_range(-2..=2));
            spectrum::interlacing_check(&g, s_mask, &LambdaTarget::Exact(lam), 1e-8)
        }
        StatementId::WalkCount => {
            let g = bounds::random_connected_graph(10, rng);
            let big_r = rng.gen_range(1..=3usize);
            bounds::walk_count_identity(&g, big_r)
        }
        StatementId::DenseRegime | StatementId::Combined | StatementId::ConnectedCorollary => {
            let g = bounds::random_connected_graph(12, rng);
            bounds::evaluate_bounds(&g, statement, Some(0.5), None)
        }
    }
}

/// Seeded random campaign: `count` valid instances of one statement.
pub fn random_campaign(
    statement: StatementId,
    count: usize,
    seed: u64,
) -> Result<CampaignSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = CampaignSummary::empty(statement);
    for _ in 0..count {
        let cert = random_certificate(statement, &mut rng)?;
        summary.record(&cert);
    }
    Ok(summary)
}

/// Statement parameters for single-graph certificate runs.
#[derive(Clone, Debug)]
pub struct GraphRunParams {
    pub radius: usize,
    pub min_ball: f64,
    pub ell: usize,
    pub s_exp: usize,
    pub walk_exponent: usize,
    pub seed: u64,
    pub eps: f64,
    pub lambda2: Option<Rat>,
}

impl Default for GraphRunParams {
    fn default() -> Self {
        GraphRunParams {
            radius: 1,
            min_ball: 2.0,
            ell: 2,
            s_exp: 3,
            walk_exponent: 2,
            seed: 0,
            eps: 0.5,
            lambda2: None,
        }
    }
}

/// Runs the requested statements against one graph. Instance-shaped
/// statements (disjoint supports, small subgraphs, interlacing) sweep all
/// their valid instances, so the graph is capped at 8 vertices for those.
pub fn certificates_for_graph(
    g: &Graph,
    statements: &[StatementId],
    params: &GraphRunParams,
) -> Result<Vec<BoundCertificate>> {
    let mut out = Vec::new();
    for &statement in statements {
        match statement {
            StatementId::DisjointSupports
            | StatementId::SmallEval
            | StatementId::Interlacing
            | StatementId::WalkCount => {
                if g.n() > 8 && matches!(statement, StatementId::DisjointSupports | StatementId::SmallEval)
                {
                    return Err(Error::Budget(format!(
                        "instance sweep for {} is capped at 8 vertices",
                        statement.as_str()
                    )));
                }
                if statement == StatementId::WalkCount {
                    out.push(bounds::walk_count_identity(g, params.walk_exponent)?);
                } else {
                    out.extend(certs_for_connected_graph(g, statement)?);
                }
            }
            StatementId::BallCover => {
                out.push(
                    bounds::ball_cover_reduce(
                        g,
                        params.radius,
                        params.min_ball,
                        params.lambda2.as_ref(),
                    )?
                    .certificate,
                );
            }
            StatementId::RandomDeletion => {
                out.push(
                    bounds::random_support_deletion(
                        g,
                        params.ell,
                        params.s_exp,
                        params.seed,
                        params.lambda2.as_ref(),
                    )?
                    .certificate,
                );
            }
            StatementId::PartialNet => {
                let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
                let inst = partial_net_instance_on(g, params.ell.max(1), &mut rng)?;
                out.push(bounds::check_partial_net(&inst)?);
            }
            StatementId::DenseRegime | StatementId::Combined | StatementId::ConnectedCorollary => {
                out.push(bounds::evaluate_bounds(
                    g,
                    statement,
                    Some(params.eps),
                    params.lambda2.as_ref(),
                )?);
            }
        }
    }
    Ok(out)
}

/// Builds a valid partial-net instance whose host graph is `g`: F is a
/// ball that misses part of the graph, C the slice of F near the rest.
fn partial_net_instance_on(
    g: &Graph,
    ell: usize,
    rng: &mut ChaCha8Rng,
) -> Result<PartialNetInstance> {
    if !g.is_connected() || g.n() < 3 {
        return Err(Error::Structure(
            "partial net instances need a connected host on >= 3 vertices".into(),
        ));
    }
    for _ in 0..64 {
        let v = rng.gen_range(0..g.n());
        let mut rho = rng.gen_range(0..=2usize);
        let mut f_mask = g.ball(v, rho)?.mask;
        while f_mask == g.full_mask() && rho > 0 {
            rho -= 1;
            f_mask = g.ball(v, rho)?.mask;
        }
        if f_mask == g.full_mask() {
            continue;
        }
        let dist = g.distances_from_set(g.full_mask() & !f_mask);
        let mut c_mask = 0u64;
        for u in 0..g.n() {
            if (f_mask >> u) & 1 == 1 && dist[u] <= ell {
                c_mask |= 1 << u;
            }
        }
        let l_mask = f_mask & !c_mask;
        let eps = if l_mask == 0 {
            1.0
        } else {
            let (f_graph, _) = g.induced(f_mask);
            let (l_graph, _) = g.induced(l_mask);
            let l1f = crate::eigen::lambda_max(&f_graph.adjacency_f64(), f_graph.n());
            let l1l = crate::eigen::lambda_max(&l_graph.adjacency_f64(), l_graph.n());
            if l1f <= 1e-9 {
                0.25
            } else {
                let eps_max = (1.0 - l1l / l1f) / 4.0;
                if eps_max <= 1e-6 {
                    continue;
                }
                (eps_max * 0.9).min(0.25)
            }
        };
        return Ok(PartialNetInstance {
            k: g.clone(),
            f_mask,
            c_mask,
            l_mask,
            ell,
            eps,
        });
    }
    Err(Error::Structure(
        "could not cut a valid partial-net instance from this graph".into(),
    ))
}
