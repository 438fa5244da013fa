//! Spherical codes with pairwise inner products +-alpha, the exact
//! Gram/adjacency correspondence M = (1-alpha) I + alpha J - 2 alpha A,
//! switching normalization, the beta parameter, the clique-union tight
//! construction, and the closed-form line-count bound evaluators.
//!
//! alpha travels as an exact rational end to end; the vectors themselves
//! are the only floating-point data. Construction gets 1e-9 tolerances,
//! verification the looser 1e-8.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::eigen;
use crate::error::{Error, Result};
use crate::exact::{self, rat_to_f64, rat_to_string, Rat, RationalMatrix};
use crate::graph::Graph;

pub const CONSTRUCTION_TOL: f64 = 1e-9;
pub const VERIFY_TOL: f64 = 1e-8;
pub const CODE_FORMAT_VERSION: u32 = 1;

/// Unit vectors in R^r whose pairwise inner products all lie in
/// {+alpha, -alpha}.
#[derive(Clone, Debug)]
pub struct SphericalCode {
    pub dim: usize,
    pub alpha: Rat,
    pub vectors: Vec<Vec<f64>>,
}

/// Worst tolerance offender found while validating a code.
#[derive(Clone, Debug, Serialize)]
pub struct CodeOffender {
    pub kind: String,
    pub indices: Vec<usize>,
    pub value: f64,
    pub deviation: f64,
}

impl SphericalCode {
    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn inner(&self, i: usize, j: usize) -> f64 {
        self.vectors[i]
            .iter()
            .zip(&self.vectors[j])
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Checks unit norms (1e-9) and pairwise +-alpha (1e-8); on failure
    /// reports the worst offender.
    pub fn validate(&self) -> Result<()> {
        if let Some(off) = self.worst_offender() {
            return Err(Error::Verification(format!(
                "{} at {:?}: value {:.12}, off by {:.3e}",
                off.kind, off.indices, off.value, off.deviation
            )));
        }
        Ok(())
    }

    pub fn worst_offender(&self) -> Option<CodeOffender> {
        let a = rat_to_f64(&self.alpha);
        let mut worst: Option<CodeOffender> = None;
        let mut push = |kind: &str, indices: Vec<usize>, value: f64, dev: f64, tol: f64| {
            if dev > tol && worst.as_ref().map_or(true, |w| dev > w.deviation) {
                worst = Some(CodeOffender {
                    kind: kind.into(),
                    indices,
                    value,
                    deviation: dev,
                });
            }
        };
        for (i, v) in self.vectors.iter().enumerate() {
            if v.len() != self.dim {
                return Some(CodeOffender {
                    kind: "dimension mismatch".into(),
                    indices: vec![i],
                    value: v.len() as f64,
                    deviation: f64::INFINITY,
                });
            }
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            push("unit norm violation", vec![i], norm, (norm - 1.0).abs(), CONSTRUCTION_TOL);
        }
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                let ip = self.inner(i, j);
                let dev = (ip.abs() - a).abs();
                push("inner product violation", vec![i, j], ip, dev, VERIFY_TOL);
            }
        }
        worst
    }

    /// Numeric Gram entry grid.
    pub fn gram_numeric(&self) -> Vec<Vec<f64>> {
        (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.inner(i, j)).collect())
            .collect()
    }
}

/// Exact Gram matrix with unit diagonal and +-alpha off-diagonal.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub alpha: Rat,
    pub m: RationalMatrix,
}

impl GramMatrix {
    pub fn n(&self) -> usize {
        self.m.rows()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let one = Rat::one();
        for i in 0..n {
            if *self.m.get(i, i) != one {
                return Err(Error::Verification(format!("diagonal entry {i} is not 1")));
            }
            for j in i + 1..n {
                let e = self.m.get(i, j);
                if e != self.m.get(j, i) {
                    return Err(Error::Verification(format!("asymmetry at ({i},{j})")));
                }
                if *e != self.alpha && *e != -self.alpha.clone() {
                    return Err(Error::Verification(format!(
                        "off-diagonal ({i},{j}) = {} is not +-alpha",
                        rat_to_string(e)
                    )));
                }
            }
        }
        Ok(())
    }

    /// The corresponding graph: edges exactly at the -alpha entries.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let neg = -self.alpha.clone();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if *self.m.get(i, j) == neg {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, &edges).expect("valid Gram graph")
    }
}

/// M = (1-alpha) I + alpha J - 2 alpha A, exactly.
pub fn gram_from_graph(g: &Graph, alpha: &Rat) -> Result<GramMatrix> {
    if !(alpha > &Rat::zero() && alpha < &Rat::one()) {
        return Err(Error::Parameter("alpha must lie strictly between 0 and 1".into()));
    }
    let n = g.n();
    let m = RationalMatrix::identity(n)
        .scale(&(Rat::one() - alpha))
        .add(&RationalMatrix::ones(n).scale(alpha))
        .sub(&RationalMatrix::adjacency(g).scale(&(alpha + alpha)));
    Ok(GramMatrix {
        alpha: alpha.clone(),
        m,
    })
}

/// Corresponding graph of a code: edges at the pairs with inner product
/// near -alpha. Any pair away from +-alpha is a code-integrity error.
pub fn graph_from_code(c: &SphericalCode) -> Result<Graph> {
    let a = rat_to_f64(&c.alpha);
    let n = c.n();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let ip = c.inner(i, j);
            if (ip + a).abs() <= VERIFY_TOL {
                edges.push((i, j));
            } else if (ip - a).abs() > VERIFY_TOL {
                return Err(Error::CodeIntegrity(format!(
                    "inner product ({i},{j}) = {ip:.12} is not within {VERIFY_TOL} of +-alpha"
                )));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Realizes an exact PSD Gram matrix of rank <= r as unit vectors in R^r
/// via the spectral square root: numeric eigenvalues below 1e-9 are
/// treated as zero, the embedding uses the first rank(m) coordinates in
/// descending eigenvalue order, and the result is checked entrywise
/// against m within 1e-8.
pub fn realize_code(m: &GramMatrix, r: usize) -> Result<SphericalCode> {
    let n = m.n();
    // realization needs symmetry and unit diagonal; the +-alpha structure
    // is the corresponding-graph layer's concern
    if !m.m.is_symmetric() {
        return Err(Error::Parameter("Gram matrix must be symmetric".into()));
    }
    for i in 0..n {
        if !m.m.get(i, i).is_one() {
            return Err(Error::Verification(format!("diagonal entry {i} is not 1")));
        }
    }
    let psd = exact::psd_certificate(&m.m)?;
    if !psd.is_psd {
        return Err(Error::Infeasible {
            reason: "Gram matrix is not positive semidefinite".into(),
            witness: psd
                .witness
                .map(|w| w.iter().map(rat_to_string).collect()),
        });
    }
    let rank = exact::rank(&m.m);
    if rank > r {
        return Err(Error::Infeasible {
            reason: format!("Gram matrix has rank {rank} > target dimension {r}"),
            witness: None,
        });
    }

    let dense = m.m.to_f64();
    let e = eigen::sym_eigen(&dense, n, true);
    let vectors_raw = e.vectors.expect("requested eigenvectors");
    let kept: Vec<usize> = (0..n).filter(|&i| e.values[i] > CONSTRUCTION_TOL).collect();
    if kept.len() != rank {
        return Err(Error::Verification(format!(
            "numeric positive eigenvalue count {} disagrees with exact rank {rank}",
            kept.len()
        )));
    }

    let mut vectors = vec![vec![0.0; r]; n];
    for (slot, &ei) in kept.iter().enumerate() {
        let scale = e.values[ei].sqrt();
        for (i, vec) in vectors.iter_mut().enumerate() {
            vec[slot] = scale * vectors_raw[ei][i];
        }
    }

    let code = SphericalCode {
        dim: r,
        alpha: m.alpha.clone(),
        vectors,
    };
    // entrywise check against the exact target
    for i in 0..n {
        for j in 0..n {
            let want = rat_to_f64(m.m.get(i, j));
            let got = code.inner(i, j);
            if (want - got).abs() > VERIFY_TOL {
                return Err(Error::Verification(format!(
                    "realized Gram entry ({i},{j}) = {got:.12} misses target {want:.12}"
                )));
            }
        }
    }
    Ok(code)
}

/// The graph behind the tight construction: floor((r-1)/(k-1)) cliques
/// on k vertices plus r - t(k-1) - 1 isolated vertices.
pub fn tight_graph(k: usize, r: usize) -> Result<(Graph, usize)> {
    if k < 2 {
        return Err(Error::Parameter("clique size k must be at least 2".into()));
    }
    if r < k {
        return Err(Error::Parameter(format!(
            "dimension r = {r} has no room for one clique on k = {k} vertices"
        )));
    }
    let t = (r - 1) / (k - 1);
    let isolated = r - t * (k - 1) - 1;
    let cliques = Graph::disjoint_cliques(t, k)?;
    let iso = Graph::empty(isolated)?;
    let g = Graph::disjoint_union(&[&cliques, &iso])?;
    debug_assert_eq!(g.n(), r - 1 + t);
    Ok((g, t))
}

/// Builds the extremal code at alpha = 1/(2k-1): n = r - 1 +
/// floor((r-1)/(k-1)) unit vectors in R^r. The Gram matrix is certified
/// PSD with rank <= r exactly before realization.
pub fn tight_construction(k: usize, r: usize) -> Result<SphericalCode> {
    let (g, _t) = tight_graph(k, r)?;
    let alpha = Rat::new(BigInt::one(), BigInt::from(2 * k as i64 - 1));
    let gram = gram_from_graph(&g, &alpha)?;
    realize_code(&gram, r)
}

/// Negates the selected vectors. The underlying line family is
/// unchanged; the corresponding graph's edges complement across the cut.
pub fn switch(c: &SphericalCode, s: &[usize]) -> SphericalCode {
    let mut out = c.clone();
    for &i in s {
        for x in &mut out.vectors[i] {
            *x = -*x;
        }
    }
    out
}

/// Result of the degree normalization: the re-signed code, its graph,
/// which vectors were switched, and the anchor bookkeeping.
#[derive(Clone, Debug)]
pub struct NormalizeOutcome {
    pub code: SphericalCode,
    pub graph: Graph,
    pub switched: Vec<usize>,
    pub anchor: usize,
    pub anchor_degree: usize,
    pub non_anchor_max_degree: usize,
    /// 6 / alpha^4, the guaranteed cap.
    pub degree_cap: Rat,
}

/// Constructive degree normalization: re-sign every vector against the
/// first one (the anchor) so their inner products are +alpha, then switch
/// the set T of working vectors whose degree exceeds 1/alpha^4 (any such
/// vertex has co-degree at most 1/alpha^4, else the input cannot be a
/// genuine code). The returned graph has maximum degree at most
/// 6/alpha^4.
pub fn normalize_max_degree(c: &SphericalCode) -> Result<NormalizeOutcome> {
    if c.n() < 2 {
        return Err(Error::Parameter("normalization needs at least 2 vectors".into()));
    }
    c.validate()?;
    let a = rat_to_f64(&c.alpha);

    // sign every non-anchor vector to +alpha against the anchor
    let mut code = c.clone();
    for i in 1..code.n() {
        let ip = code.inner(0, i);
        if (ip + a).abs() <= VERIFY_TOL {
            for x in &mut code.vectors[i] {
                *x = -*x;
            }
        } else if (ip - a).abs() > VERIFY_TOL {
            return Err(Error::CodeIntegrity(format!(
                "anchor inner product {ip:.12} at vector {i} is not +-alpha"
            )));
        }
    }

    // working graph on the non-anchor vectors
    let working = SphericalCode {
        dim: code.dim,
        alpha: code.alpha.clone(),
        vectors: code.vectors[1..].to_vec(),
    };
    let wg = graph_from_code(&working)?;
    let m = wg.n();

    let inv_alpha = Rat::one() / &c.alpha;
    let inv_a4 = &inv_alpha * &inv_alpha * &inv_alpha * &inv_alpha;
    let rat_of = |d: usize| Rat::from_integer(BigInt::from(d as i64));

    // degree dichotomy: every working vertex is low (d <= 1/alpha^4) or
    // high (m - 1 - d <= 1/alpha^4); anything in between means the input
    // is not a genuine code
    let mut t_set = Vec::new();
    for u in 0..m {
        let d = wg.degree(u);
        let low = rat_of(d) <= inv_a4;
        let high = rat_of(m - 1 - d) <= inv_a4;
        if !low && !high {
            return Err(Error::CodeIntegrity(format!(
                "degree dichotomy violated at working vertex {u}: degree {d} of {m}"
            )));
        }
        if !low {
            t_set.push(u);
        }
    }

    let switched: Vec<usize> = t_set.iter().map(|&u| u + 1).collect();
    let normalized = switch(&code, &switched);
    let graph = graph_from_code(&normalized)?;

    let anchor_degree = graph.degree(0);
    let non_anchor_max_degree = (1..graph.n()).map(|v| graph.degree(v)).max().unwrap_or(0);
    let degree_cap = rat_of(6) * &inv_a4;
    if rat_of(graph.max_degree()) > degree_cap {
        return Err(Error::CodeIntegrity(format!(
            "normalized degree {} exceeds the 6/alpha^4 cap {}",
            graph.max_degree(),
            rat_to_string(&degree_cap)
        )));
    }
    Ok(NormalizeOutcome {
        code: normalized,
        graph,
        switched,
        anchor: 0,
        anchor_degree,
        non_anchor_max_degree,
        degree_cap,
    })
}

// -- beta ---------------------------------------------------------------------

/// beta and, when a rational candidate was supplied, whether that value
/// is an adjacency eigenvalue achieved on the hyperplane orthogonal to
/// the all-ones vector (checked exactly).
#[derive(Clone, Debug)]
pub struct BetaReport {
    pub value: f64,
    pub is_eigenvalue_exact: Option<bool>,
}

/// Maximum Rayleigh quotient of the adjacency matrix over vectors
/// orthogonal to the all-ones vector: the largest eigenvalue of A
/// restricted to that hyperplane (computed in an explicit orthonormal
/// basis of it).
pub fn beta(g: &Graph, tol: f64) -> Result<BetaReport> {
    if g.n() < 2 {
        return Err(Error::Parameter("beta needs at least 2 vertices".into()));
    }
    if tol <= 0.0 {
        return Err(Error::Parameter("tolerance must be positive".into()));
    }
    let n = g.n();
    let a = g.adjacency_f64();

    // Helmert-style orthonormal basis of the hyperplane: row i has i+1
    // leading entries 1/s and then -(i+1)/s with s = sqrt((i+1)(i+2))
    let mut q = vec![vec![0.0; n]; n - 1];
    for (i, row) in q.iter_mut().enumerate() {
        let s = ((i + 1) as f64 * (i + 2) as f64).sqrt();
        for x in row.iter_mut().take(i + 1) {
            *x = 1.0 / s;
        }
        row[i + 1] = -((i + 1) as f64) / s;
    }

    // C = Q A Q^T, symmetric (n-1) x (n-1)
    let mut aq: Vec<Vec<f64>> = vec![vec![0.0; n]; n - 1];
    for (i, row) in q.iter().enumerate() {
        for c in 0..n {
            let mut s = 0.0;
            for k in 0..n {
                s += a[k * n + c] * row[k];
            }
            aq[i][c] = s;
        }
    }
    let dim = n - 1;
    let mut cmat = vec![0.0; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let mut s = 0.0;
            for c in 0..n {
                s += aq[i][c] * q[j][c];
            }
            cmat[i * dim + j] = s;
        }
    }
    // symmetrize away rounding noise
    for i in 0..dim {
        for j in i + 1..dim {
            let avg = 0.5 * (cmat[i * dim + j] + cmat[j * dim + i]);
            cmat[i * dim + j] = avg;
            cmat[j * dim + i] = avg;
        }
    }
    let value = eigen::sym_eigen(&cmat, dim, false).values[0];
    Ok(BetaReport {
        value,
        is_eigenvalue_exact: None,
    })
}

/// Like [`beta`], plus the exact check that the rational candidate is an
/// eigenvalue whose eigenspace meets the all-ones-orthogonal hyperplane.
pub fn beta_with_candidate(g: &Graph, tol: f64, candidate: &Rat) -> Result<BetaReport> {
    let mut report = beta(g, tol)?;
    let meet =
        exact::eigenspace_meets_hyperplane(&RationalMatrix::adjacency(g), candidate)?;
    report.is_eigenvalue_exact = Some(meet.dim_nullspace > 0 && meet.meets_ones_perp);
    Ok(report)
}

// -- closed-form line bounds -----------------------------------------------------

pub const REPORT_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinesBoundReport {
    pub format_version: u32,
    pub r: u64,
    pub alpha: String,
    /// Spectral radius order k when alpha = 1/(2k-1).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub regime: String,
    /// r - 1 + floor((r-1) * 2 alpha / (1 - alpha)): the construction size.
    pub term_construction: String,
    /// The operative bound of the selected statement.
    pub bound: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_met: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    pub details: BTreeMap<String, String>,
}

/// Spectral radius order of (1-alpha)/(2 alpha) when it is immediate:
/// alpha = 1/(2k-1) gives k.
pub fn spectral_radius_order(alpha: &Rat) -> Option<u64> {
    if !alpha.numer().is_one() {
        return None;
    }
    let q = alpha.denom();
    if q.is_negative() || (q % BigInt::from(2)) == BigInt::zero() {
        return None;
    }
    let q = q.to_u64()?;
    if q < 3 {
        return None;
    }
    Some((q + 1) / 2)
}

/// Exact r - 1 + floor((r-1) * 2 alpha / (1-alpha)).
fn construction_term(r: u64, alpha: &Rat) -> BigInt {
    let rm1 = Rat::from_integer(BigInt::from(r - 1));
    let ratio = (alpha + alpha) / (Rat::one() - alpha);
    let floored = (rm1.clone() * ratio).floor().to_integer();
    BigInt::from(r - 1) + floored
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundRegime {
    Main,
    Superpolynomial,
}

impl BoundRegime {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "main" => Some(BoundRegime::Main),
            "superpolynomial" => Some(BoundRegime::Superpolynomial),
            _ => None,
        }
    }
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundRegime::Main => "main",
            BoundRegime::Superpolynomial => "superpolynomial",
        }
    }
}

/// Closed-form maximum-lines bound. The main regime evaluates
/// floor((1 + 2 alpha/(1-alpha))(r-1)) with dimension hypothesis
/// log2(r) >= (1/alpha)^20; the superpolynomial regime evaluates
/// r + r * max(66 log^2(log_{1/alpha} r) / log_{1/alpha} r,
/// 17 alpha log2(2/alpha)) with hypothesis r >= 1/alpha^4.
pub fn max_lines_bound(r: u64, alpha: &Rat, regime: BoundRegime) -> Result<LinesBoundReport> {
    if !(alpha > &Rat::zero() && alpha < &Rat::one()) {
        return Err(Error::Parameter("alpha must lie strictly between 0 and 1".into()));
    }
    if r < 2 {
        return Err(Error::Parameter("dimension r must be at least 2".into()));
    }
    let term_construction = construction_term(r, alpha);
    let mut details = BTreeMap::new();
    let a = rat_to_f64(alpha);
    let inv_alpha = Rat::one() / alpha;

    let (bound, hypothesis_met) = match regime {
        BoundRegime::Main => {
            let threshold = rat_to_f64(&inv_alpha).powi(20);
            let hyp = (r as f64).log2() >= threshold;
            details.insert("hypothesis".into(), "log2(r) >= (1/alpha)^20".into());
            details.insert("hypothesis_threshold_log2_r".into(), crate::cert::sig15(threshold));
            (term_construction.to_string(), hyp)
        }
        BoundRegime::Superpolynomial => {
            let inv_a4 = &inv_alpha * &inv_alpha * &inv_alpha * &inv_alpha;
            let hyp = Rat::from_integer(BigInt::from(r)) >= inv_a4;
            let log_inv_alpha_r = (r as f64).ln() / (1.0 / a).ln();
            let t1 = 66.0 * log_inv_alpha_r.log2().powi(2) / log_inv_alpha_r;
            let t2 = 17.0 * a * (2.0 / a).log2();
            let value = r as f64 + r as f64 * t1.max(t2);
            details.insert("hypothesis".into(), "r >= 1/alpha^4".into());
            details.insert("log_term".into(), crate::cert::sig15(t1));
            details.insert("alpha_term".into(), crate::cert::sig15(t2));
            (crate::cert::sig15(value), hyp)
        }
    };

    Ok(LinesBoundReport {
        format_version: REPORT_FORMAT_VERSION,
        r,
        alpha: rat_to_string(alpha),
        k: spectral_radius_order(alpha),
        regime: regime.as_str().into(),
        term_construction: term_construction.to_string(),
        bound,
        hypothesis_met: Some(hypothesis_met),
        n: None,
        holds: None,
        details,
    })
}

/// Two-branch bound tying a code's size to the maximum connected second
/// eigenvalue multiplicity mc_value (supplied externally):
/// n <= r - 1 + max((r-1) * 2 alpha/(1-alpha), mc_value + 2).
pub fn lines_to_multiplicity_bound(c: &SphericalCode, mc_value: u64) -> Result<LinesBoundReport> {
    let r = c.dim as u64;
    if r < 2 {
        return Err(Error::Parameter("dimension r must be at least 2".into()));
    }
    let alpha = &c.alpha;
    let n = c.n() as u64;
    let rm1 = Rat::from_integer(BigInt::from(r - 1));
    let branch_construction = rm1.clone() * (alpha + alpha) / (Rat::one() - alpha);
    let branch_mc = Rat::from_integer(BigInt::from(mc_value + 2));
    let max_branch = if branch_construction >= branch_mc {
        branch_construction.clone()
    } else {
        branch_mc.clone()
    };
    let bound = rm1 + max_branch;
    let n_rat = Rat::from_integer(BigInt::from(n));
    let holds = n_rat <= bound;

    let mut details = BTreeMap::new();
    details.insert(
        "branch_construction".into(),
        rat_to_string(&branch_construction),
    );
    details.insert("branch_mc_plus_2".into(), rat_to_string(&branch_mc));
    let rm1_rat = Rat::from_integer(BigInt::from(r - 1));
    details.insert(
        "branch_construction_holds".into(),
        (n_rat <= rm1_rat.clone() + &branch_construction).to_string(),
    );
    details.insert(
        "branch_mc_holds".into(),
        (n_rat <= rm1_rat + &branch_mc).to_string(),
    );

    Ok(LinesBoundReport {
        format_version: REPORT_FORMAT_VERSION,
        r,
        alpha: rat_to_string(alpha),
        k: spectral_radius_order(alpha),
        regime: "lines_to_multiplicity".into(),
        term_construction: construction_term(r, alpha).to_string(),
        bound: rat_to_string(&bound),
        hypothesis_met: None,
        n: Some(n),
        holds: Some(holds),
        details,
    })
}

// -- file formats ------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct CodeFile {
    pub format_version: u32,
    pub r: usize,
    pub alpha: String,
    pub vectors: Vec<Vec<f64>>,
    pub provenance: String,
}

impl CodeFile {
    pub fn from_code(c: &SphericalCode, provenance: &str) -> Self {
        CodeFile {
            format_version: CODE_FORMAT_VERSION,
            r: c.dim,
            alpha: rat_to_string(&c.alpha),
            vectors: c.vectors.clone(),
            provenance: provenance.into(),
        }
    }

    pub fn into_code(self) -> Result<SphericalCode> {
        Ok(SphericalCode {
            dim: self.r,
            alpha: exact::rat_from_str(&self.alpha)?,
            vectors: self.vectors,
        })
    }
}

#[derive(Serialize, Deserialize)]
pub struct GramFile {
    pub format_version: u32,
    pub n: usize,
    pub alpha: String,
    /// Exact fraction strings, row-major.
    pub entries: Vec<Vec<String>>,
}

impl GramFile {
    pub fn from_gram(g: &GramMatrix) -> Self {
        GramFile {
            format_version: CODE_FORMAT_VERSION,
            n: g.n(),
            alpha: rat_to_string(&g.alpha),
            entries: g.m.to_fraction_grid(),
        }
    }
}
